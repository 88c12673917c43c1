//! Factorization in ℤ[X]: Yun's squarefree decomposition, quadratic Hensel
//! lifting of a mod-p factorization, and Zassenhaus subset recombination.
//!
//! Irreducibility testing prefers cheap certificates (degree, Eisenstein,
//! rational roots, an irreducible reduction mod p) and only falls back to the
//! full factorization when none applies.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, ModPoly};
use super::{gcd_poly, IntPoly, PolyError};
use crate::zint;

/// Factored form over ℤ: unit·content·Π fᵢ^eᵢ with the fᵢ primitive,
/// irreducible, positive leading coefficient, sorted by degree then
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZFactorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl ZFactorization {
    /// Reassembles the polynomial that was factored.
    pub fn value(&self) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::from(self.unit) * &self.content);
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e));
        }
        acc
    }
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c % m;
                if r.is_negative() {
                    r += m;
                }
                r
            })
            .collect(),
    )
}

fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        reduce_mod(f, m)
            .coeffs()
            .iter()
            .map(|c| if c > &half { c - m } else { c.clone() })
            .collect(),
    )
}

/// Extended Euclid over 𝔽_p: (s, t) with s·a + t·b = 1 for coprime a, b.
fn bezout_modpoly(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
    let p = a.modulus();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = ModPoly::one(p);
    let mut s1 = ModPoly::zero(p);
    let mut t0 = ModPoly::zero(p);
    let mut t1 = ModPoly::one(p);
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let ns = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, ns);
        let nt = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, nt);
    }
    assert!(r0.is_constant() && !r0.is_zero(), "bezout of non-coprime parts");
    let inv = ModPoly::constant(p, 1).divmod(&r0).0.coeff(0);
    (s0.mul_scalar(inv), t0.mul_scalar(inv))
}

/// One quadratic Hensel step: from f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m)
/// with h monic, to the same data mod m².
fn hensel_step(
    m: &BigInt,
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce_mod(&f.sub(&g.mul(h)), &m2);
    let (q, r) = s.mul(&e).divmod_monic(h);
    let q = reduce_mod(&q, &m2);
    let r = reduce_mod(&r, &m2);
    let gs = reduce_mod(&g.add(&t.mul(&e)).add(&q.mul(g)), &m2);
    let hs = reduce_mod(&h.add(&r), &m2);
    let b = reduce_mod(
        &s.mul(&gs).add(&t.mul(&hs)).sub(&IntPoly::one()),
        &m2,
    );
    let (c, d) = s.mul(&b).divmod_monic(&hs);
    let c = reduce_mod(&c, &m2);
    let d = reduce_mod(&d, &m2);
    let ss = reduce_mod(&s.sub(&d), &m2);
    let ts = reduce_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&gs)), &m2);
    debug_assert!(hs.is_monic());
    debug_assert!(reduce_mod(&f.sub(&gs.mul(&hs)), &m2).is_zero());
    (gs, hs, ss, ts)
}

/// Lifts the monic mod-p factors of a monic f from mod p to mod `target`
/// (a p-power with power-of-two exponent), recursively over a factor tree.
fn hensel_lift(
    f_mod: &IntPoly,
    factors: &[ModPoly],
    p: u64,
    target: &BigInt,
    steps: u32,
    out: &mut Vec<IntPoly>,
) {
    if factors.len() == 1 {
        out.push(reduce_mod(f_mod, target));
        return;
    }
    let mid = factors.len() / 2;
    let pm = ModPoly::one(p);
    let g0 = factors[..mid].iter().fold(pm.clone(), |acc, r| acc.mul(r));
    let h0 = factors[mid..].iter().fold(pm, |acc, r| acc.mul(r));
    let (s0, t0) = bezout_modpoly(&g0, &h0);
    let mut m = BigInt::from(p);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut s = s0.lift();
    let mut t = t0.lift();
    for _ in 0..steps {
        let (gs, hs, ss, ts) = hensel_step(&m, f_mod, &g, &h, &s, &t);
        m = &m * &m;
        g = gs;
        h = hs;
        s = ss;
        t = ts;
    }
    debug_assert_eq!(m, *target);
    hensel_lift(&g, &factors[..mid], p, target, steps, out);
    hensel_lift(&h, &factors[mid..], p, target, steps, out);
}

/// Advances `combo` to the next k-subset of 0..n in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Factors a monic squarefree polynomial with nonzero constant term into
/// monic irreducibles.
fn factor_monic_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n == 1 {
        return vec![f.clone()];
    }
    // Prime with a squarefree reduction; the discriminant is nonzero, so all
    // but finitely many primes work.
    let mut chosen = 0u64;
    for &p in &zint::small_primes()[1..] {
        let p = p as u64;
        let fbar = ModPoly::from_intpoly(f, p);
        if fbar.degree() == Some(n) && fbar.gcd(&fbar.derivative()).is_one() {
            chosen = p;
            break;
        }
    }
    assert!(chosen != 0, "no squarefree reduction below the sieve limit");
    let p = chosen;
    let modular: Vec<ModPoly> = modp::factor_modpoly(&ModPoly::from_intpoly(f, p))
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Mignotte bound: coefficients of any monic factor are below 2ⁿ·‖f‖₂.
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = (norm_sq.sqrt() + 1) << n;
    let goal = (&bound << 1) + 1;
    let mut target = BigInt::from(p);
    let mut steps = 0u32;
    while target < goal {
        target = &target * &target;
        steps += 1;
    }
    let mut lifted = vec![];
    hensel_lift(f, &modular, p, &target, steps, &mut lifted);

    // Zassenhaus recombination by subset size.
    let mut remaining = lifted;
    let mut fcur = f.clone();
    let mut result = vec![];
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let prod = combo
                .iter()
                .fold(IntPoly::one(), |acc, &i| reduce_mod(&acc.mul(&remaining[i]), &target));
            let cand = symmetric_mod(&prod, &target);
            let c0 = cand.constant_term();
            if !c0.is_zero() && (fcur.constant_term() % &c0).is_zero() {
                if let Some(q) = fcur.div_exact(&cand) {
                    result.push(cand);
                    fcur = q;
                    let mut keep = vec![];
                    for (i, r) in remaining.into_iter().enumerate() {
                        if !combo.contains(&i) {
                            keep.push(r);
                        }
                    }
                    remaining = keep;
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        size += 1;
    }
    if fcur.degree().is_some_and(|d| d >= 1) {
        result.push(fcur);
    }
    result
}

/// l^{n−1}·g(X/l) for l = lc(g): the monic polynomial whose roots are l
/// times the roots of g.
fn monicize(g: &IntPoly, l: &BigInt) -> IntPoly {
    let n = g.deg();
    let coeffs: Vec<BigInt> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == n {
                return BigInt::one();
            }
            let mut v = c.clone();
            for _ in 0..(n - 1 - i) {
                v *= l;
            }
            v
        })
        .collect();
    IntPoly::new(coeffs)
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient into primitive irreducibles with positive leading coefficient.
fn factor_squarefree(g: &IntPoly) -> Vec<IntPoly> {
    if g.deg() == 1 {
        return vec![g.clone()];
    }
    if g.is_monic() {
        return factor_monic_squarefree(g);
    }
    // Monicize: m(X) = l^{n−1}·g(X/l) is monic with the roots scaled by l.
    let l = g.lc().clone();
    let m = monicize(g, &l);
    debug_assert!(m.is_monic());
    let mut out = vec![];
    for h in factor_monic_squarefree(&m) {
        // Undo the root scaling and restore primitivity.
        let back = h.compose_linear(&BigInt::zero(), &l);
        let (_, mut pp) = back.primitive();
        if pp.lc().is_negative() {
            pp = pp.neg();
        }
        out.push(pp);
    }
    debug_assert_eq!(
        out.iter().fold(IntPoly::one(), |acc, q| acc.mul(q)),
        *g
    );
    out
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: pairwise coprime squarefree parts with multiplicity.
fn yun_squarefree(g: &IntPoly) -> Vec<(IntPoly, u32)> {
    let gp = g.derivative();
    let u = gcd_poly(g, &gp);
    if u.is_constant() {
        return vec![(g.clone(), 1)];
    }
    let mut out = vec![];
    let mut v = g.div_exact(&u).expect("gcd divides g");
    let mut w = gp.div_exact(&u).expect("gcd divides g'");
    let mut i = 1u32;
    while !v.is_constant() {
        let z = w.sub(&v.derivative());
        let h = gcd_poly(&v, &z);
        if !h.is_constant() {
            out.push((h.clone(), i));
        }
        v = v.div_exact(&h).expect("h divides v");
        w = z.div_exact(&h).expect("h divides z");
        i += 1;
    }
    out
}

/// Complete factorization over ℤ.
pub fn factor_over_z(f: &IntPoly) -> Result<ZFactorization, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (content, mut pp) = f.primitive();
    let mut unit = 1i8;
    if pp.lc().is_negative() {
        unit = -1;
        pp = pp.neg();
    }
    let mut factors: Vec<(IntPoly, u32)> = vec![];
    if pp.is_constant() {
        return Ok(ZFactorization { unit, content, factors });
    }
    let (body, val) = pp.strip_low_zeros();
    if val > 0 {
        factors.push((IntPoly::x(), val as u32));
    }
    if !body.is_constant() {
        for (part, mult) in yun_squarefree(&body) {
            for irr in factor_squarefree(&part) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.coeffs().len(), a.0.coeffs())
            .cmp(&(b.0.coeffs().len(), b.0.coeffs()))
    });
    // Coprime construction means no duplicates, but merge defensively.
    let mut merged: Vec<(IntPoly, u32)> = vec![];
    for (f, e) in factors {
        match merged.last_mut() {
            Some((g, m)) if *g == f => *m += e,
            _ => merged.push((f, e)),
        }
    }
    Ok(ZFactorization {
        unit,
        content,
        factors: merged,
    })
}

/// Irreducibility over ℚ for a nonconstant polynomial (content is ignored).
/// Zero and constant polynomials return false.
pub fn is_irreducible(f: &IntPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    let (_, mut g) = f.primitive();
    if g.lc().is_negative() {
        g = g.neg();
    }
    if n == 1 {
        return true;
    }
    if g.constant_term().is_zero() {
        // X divides; reducible unless f is c·X itself, handled above.
        return false;
    }
    // Eisenstein certificate on primes of the non-leading content.
    let mut nl = BigInt::zero();
    for c in &g.coeffs()[..n] {
        nl = nl.gcd(c);
    }
    if nl > BigInt::one() {
        let budget = zint::FactorBudget::quick();
        if let Ok(fac) = zint::factorize(&nl, &budget) {
            for (p, _) in &fac.factors {
                if !(g.lc() % p).is_zero() && !(g.constant_term() % (p * p)).is_zero() {
                    return true;
                }
            }
        }
    }
    // Degrees 2 and 3 are reducible iff they have a rational root.
    if n <= 3 {
        let monic = if g.is_monic() {
            g.clone()
        } else {
            monicize(&g, &g.lc().clone())
        };
        return zint::integer_roots(&monic)
            .is_ok_and(|roots| roots.is_empty());
    }
    // An irreducible reduction mod p certifies irreducibility over ℚ.
    let mut tried = 0;
    for &p in zint::small_primes() {
        let p = p as u64;
        if (g.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        if modp::is_irreducible_mod_p(&g, p) {
            return true;
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    match factor_over_z(&g) {
        Ok(z) => z.factors.len() == 1 && z.factors[0].1 == 1,
        Err(_) => false,
    }
}
