//! Galois groups of irreducible even sextics.
//!
//! The roots of f = X⁶ + aX⁴ + bX² + c come in pairs ±αᵢ, so Gal(f) acts as
//! signed permutations of three blocks and lands in a wreath product of
//! order 48.  Exactly eight transitive groups occur.  `classify` names the
//! group through square tests on resolvent data; only the final
//! 6T7-versus-S4×C2 split needs Frobenius sampling, and the label's
//! `Certainty` records when that happened.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::zint;
use crate::zpoly::{self, IntPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("polynomial is reducible over the rationals")]
    ReducibleInput,
    #[error("distinct dihedral witnesses disagree on the cyclic test")]
    ShapeInconsistency,
}

/// The eight Galois groups of irreducible even sextics, named by their
/// transitive degree-6 action; 6T7 and 6T8 are the two inequivalent S4
/// actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisGroup {
    C6,
    S3,
    D6,
    A4,
    A4xC2,
    S4T7,
    S4T8,
    S4xC2,
}

const T1: &[usize] = &[1, 1, 1, 1, 1, 1];
const T2A: &[usize] = &[1, 1, 1, 1, 2];
const T2B: &[usize] = &[1, 1, 2, 2];
const T2C: &[usize] = &[2, 2, 2];
const T3: &[usize] = &[3, 3];
const T4A: &[usize] = &[1, 1, 4];
const T4B: &[usize] = &[2, 4];
const T6: &[usize] = &[6];

impl GaloisGroup {
    pub const ALL: [GaloisGroup; 8] = [
        GaloisGroup::C6,
        GaloisGroup::S3,
        GaloisGroup::D6,
        GaloisGroup::A4,
        GaloisGroup::A4xC2,
        GaloisGroup::S4T7,
        GaloisGroup::S4T8,
        GaloisGroup::S4xC2,
    ];

    pub fn order(self) -> usize {
        match self {
            GaloisGroup::C6 | GaloisGroup::S3 => 6,
            GaloisGroup::D6 | GaloisGroup::A4 => 12,
            GaloisGroup::A4xC2 | GaloisGroup::S4T7 | GaloisGroup::S4T8 => 24,
            GaloisGroup::S4xC2 => 48,
        }
    }

    /// Cycle types the group realizes on the six roots, each sorted
    /// ascending.  Frobenius patterns at unramified primes must appear here.
    pub fn cycle_types(self) -> &'static [&'static [usize]] {
        match self {
            GaloisGroup::C6 => &[T1, T2C, T3, T6],
            GaloisGroup::S3 => &[T1, T2C, T3],
            GaloisGroup::D6 => &[T1, T2B, T2C, T3, T6],
            GaloisGroup::A4 => &[T1, T2B, T3],
            GaloisGroup::A4xC2 => &[T1, T2A, T2B, T2C, T3, T6],
            GaloisGroup::S4T7 => &[T1, T2B, T3, T4B],
            GaloisGroup::S4T8 => &[T1, T2B, T2C, T3, T4A],
            GaloisGroup::S4xC2 => &[T1, T2A, T2B, T2C, T3, T4A, T4B, T6],
        }
    }
}

impl fmt::Display for GaloisGroup {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GaloisGroup::C6 => "C6",
            GaloisGroup::S3 => "S3",
            GaloisGroup::D6 => "D6",
            GaloisGroup::A4 => "A4",
            GaloisGroup::A4xC2 => "A4xC2",
            GaloisGroup::S4T7 => "6T7",
            GaloisGroup::S4T8 => "6T8",
            GaloisGroup::S4xC2 => "S4xC2",
        };
        out.write_str(name)
    }
}

/// How a classification was reached: `Proved` labels follow from exact
/// square and shape tests alone, `Sampled` ones relied on Frobenius
/// statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Proved,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisLabel {
    pub group: GaloisGroup,
    pub certainty: Certainty,
}

/// Witness that the sextic lies in the dihedral family: it reconstructs the
/// coefficients as a = n²/c − 2m and b = m² − 2n, which forces c | n².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D6Params {
    pub m: BigInt,
    pub n: BigInt,
    pub c: BigInt,
}

/// X⁶ + aX⁴ + bX² + c.
pub fn even_sextic(a: &BigInt, b: &BigInt, c: &BigInt) -> IntPoly {
    IntPoly::new(vec![
        c.clone(),
        BigInt::zero(),
        b.clone(),
        BigInt::zero(),
        a.clone(),
        BigInt::zero(),
        BigInt::from(1),
    ])
}

/// The cubic g = X³ + aX² + bX + c with g(X²) = even_sextic(a, b, c).
pub fn core_cubic(a: &BigInt, b: &BigInt, c: &BigInt) -> IntPoly {
    IntPoly::new(vec![c.clone(), b.clone(), a.clone(), BigInt::from(1)])
}

/// d(m,n,c) = −(4m³c − m²n² − 18mnc + 4n³ + 27c²).  For a dihedral witness
/// this agrees with the core cubic's discriminant up to a square factor.
pub fn d_value(p: &D6Params) -> BigInt {
    let (m, n, c) = (&p.m, &p.n, &p.c);
    let m2 = m * m;
    let n2 = n * n;
    let mut t = BigInt::from(4) * &m2 * m * c;
    t -= &m2 * &n2;
    t -= BigInt::from(18) * m * n * c;
    t += BigInt::from(4) * &n2 * n;
    t += BigInt::from(27) * c * c;
    -t
}

/// All integer witnesses (m, n) with n² = c(a + 2m) and b = m² − 2n.  The
/// Galois group of the even sextic lies in D6 exactly when one exists.
pub fn d6_shape(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<D6Params> {
    assert!(!c.is_zero(), "a zero constant term never survives the irreducibility gate");
    // Eliminating n = (m² − b)/2 from n² = c(a + 2m) leaves a monic quartic
    // in m; its integer roots are the only candidates.
    let quartic = IntPoly::new(vec![
        b * b - BigInt::from(4) * a * c,
        BigInt::from(-8) * c,
        BigInt::from(-2) * b,
        BigInt::zero(),
        BigInt::from(1),
    ]);
    let mut roots = zint::integer_roots(&quartic).expect("monic quartic");
    roots.dedup();
    let mut out = Vec::new();
    for m in roots {
        let diff = &m * &m - b;
        if diff.is_odd() {
            continue;
        }
        let n = diff / 2;
        if &n * &n != c * (a + BigInt::from(2) * &m) {
            continue;
        }
        out.push(D6Params { m, n, c: c.clone() });
    }
    out
}

/// Cyclic upgrade test on a dihedral witness: the reconstructed sextic has
/// group C6 iff −c is not a square, the core cubic has no rational root, and
/// d(m,n,c) is a square.
pub fn is_c6(p: &D6Params) -> bool {
    if zint::is_perfect_square(&-&p.c).is_some() {
        return false;
    }
    let (q, r) = (&p.n * &p.n).div_rem(&p.c);
    debug_assert!(r.is_zero(), "witness must satisfy c | n²");
    if !r.is_zero() {
        return false;
    }
    let a = q - BigInt::from(2) * &p.m;
    let b = &p.m * &p.m - BigInt::from(2) * &p.n;
    let g = core_cubic(&a, &b, &p.c);
    if !zint::integer_roots(&g).expect("monic cubic").is_empty() {
        return false;
    }
    zint::is_perfect_square(&d_value(p)).is_some()
}

/// Primes sampled when the square tests cannot separate 6T7 from S4×C2.
pub const FROBENIUS_PRIMES: usize = 200;

/// Galois group of X⁶ + aX⁴ + bX² + c over the rationals.
///
/// Decision tree, with g = X³ + aX² + bX + c and dg = Δ(g): a dihedral
/// witness sorts the group into C6, S3 (when −c·dg is a nonzero square, so
/// the quadratic field √−c matches the cubic resolvent field) or D6; without
/// one, dg square separates A4 (square sextic discriminant) from A4×C2, and
/// the same collapse −c·dg = nonzero square, one level up, certifies the 6T8
/// action of S4: the group fixes the product of the three root pairs times
/// √dg exactly when it avoids the cycle types 6T8 lacks.  Everything to
/// this point is proved.  The leftover split is sampled: a 6-cycle Frobenius
/// pattern is impossible in S4, so seeing one picks S4×C2, and absence over
/// the sampled primes labels 6T7.
pub fn classify(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<GaloisLabel, GaloisError> {
    let f = even_sextic(a, b, c);
    if !zpoly::is_irreducible(&f) {
        return Err(GaloisError::ReducibleInput);
    }
    let g = core_cubic(a, b, c);
    let dg = zpoly::discriminant(&g).expect("cubic");
    let shapes = d6_shape(a, b, c);
    if !shapes.is_empty() {
        let cyclic = is_c6(&shapes[0]);
        if shapes[1..].iter().any(|w| is_c6(w) != cyclic) {
            return Err(GaloisError::ShapeInconsistency);
        }
        let group = if cyclic {
            GaloisGroup::C6
        } else if nonzero_square(&(-c * &dg)) {
            GaloisGroup::S3
        } else {
            GaloisGroup::D6
        };
        return Ok(GaloisLabel { group, certainty: Certainty::Proved });
    }
    if zint::is_perfect_square(&dg).is_some() {
        let df = zpoly::discriminant(&f).expect("sextic");
        let group = if zint::is_perfect_square(&df).is_some() {
            GaloisGroup::A4
        } else {
            GaloisGroup::A4xC2
        };
        return Ok(GaloisLabel { group, certainty: Certainty::Proved });
    }
    if nonzero_square(&(-c * &dg)) {
        return Ok(GaloisLabel { group: GaloisGroup::S4T8, certainty: Certainty::Proved });
    }
    let six = frobenius_samples(&f, FROBENIUS_PRIMES)
        .iter()
        .any(|t| t.as_slice() == [6]);
    let group = if six { GaloisGroup::S4xC2 } else { GaloisGroup::S4T7 };
    Ok(GaloisLabel { group, certainty: Certainty::Sampled })
}

fn nonzero_square(v: &BigInt) -> bool {
    !v.is_zero() && zint::is_perfect_square(v).is_some()
}

/// Factorization degree patterns of f modulo the first `count` primes not
/// dividing lc(f)·Δ(f), each pattern sorted ascending.
pub fn frobenius_samples(f: &IntPoly, count: usize) -> Vec<Vec<usize>> {
    let disc = zpoly::discriminant(f).expect("nonconstant polynomial");
    let bad = f.lc() * &disc;
    assert!(!bad.is_zero(), "repeated roots have no Frobenius classes");
    let mut out = Vec::with_capacity(count);
    for &p in zint::small_primes() {
        if out.len() == count {
            break;
        }
        let p = u64::from(p);
        if (&bad % BigInt::from(p)).is_zero() {
            continue;
        }
        let mut pattern: Vec<usize> = zpoly::factor_mod_p(f, p)
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.deg(), *e as usize))
            .collect();
        pattern.sort_unstable();
        out.push(pattern);
    }
    assert_eq!(out.len(), count, "prime table exhausted");
    out
}

#[cfg(test)]
mod tests;
