//! Dense univariate polynomials over the integers.
//!
//! Everything here is exact. Discriminants and resultants run over a
//! pseudo-remainder sequence with content normalization, so no rational
//! arithmetic or floating point is ever involved. Factorization mod p lives
//! in [`modp`], factorization over the integers in [`factor`].

pub mod factor;
pub mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{factor_over_z, is_irreducible, ZFactorization};
pub use modp::{factor_mod_p, ModPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("operation requires a monic polynomial")]
    NonMonic,
}

/// A polynomial with integer coefficients, stored densely in ascending
/// degree order. Canonical form: no trailing zero coefficient is stored,
/// and the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, dropping leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// c·X^deg.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a known-nonzero polynomial.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Leading coefficient of a known-nonzero polynomial.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn lc(&self) -> &BigInt {
        self.leading().expect("leading coefficient of zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn mul_scalar(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by X^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Splits off the largest power of X dividing self: returns (q, v) with
    /// self = q·X^v and q(0) ≠ 0 (or v = 0 for the zero polynomial).
    pub fn strip_low_zeros(&self) -> (IntPoly, usize) {
        if self.is_zero() {
            return (IntPoly::zero(), 0);
        }
        let v = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("canonical nonzero polynomial");
        (
            IntPoly {
                coeffs: self.coeffs[v..].to_vec(),
            },
            v,
        )
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    ///
    /// # Panics
    /// Panics if the divisor is not monic.
    pub fn divmod_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(d.is_monic(), "divmod_monic requires a monic divisor");
        let dd = d.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        rem.truncate(dd);
        (IntPoly::new(quo), IntPoly::new(rem))
    }

    /// Exact division: Some(q) iff self = q·d with q over the integers.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let dd = d.deg();
        let dl = d.lc();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            rem[i] = BigInt::zero();
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quo))
    }

    /// Synthetic division by (X − r): Some(q) iff r is a root.
    pub fn deflate_root(&self, r: &BigInt) -> Option<IntPoly> {
        if self.is_zero() {
            return None;
        }
        let mut quo = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                carry = &v * r;
                quo[i - 1] = v;
            }
        }
        Some(IntPoly::new(quo))
    }

    /// Content: gcd of the coefficients, ≥ 0 (0 only for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits into (content, primitive part) with content > 0; the primitive
    /// part keeps the sign of the leading coefficient.
    pub fn primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let c = self.content();
        if c.is_one() {
            return (c, self.clone());
        }
        let pp = IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        };
        (c, pp)
    }

    /// h(a + b·X), by Horner over polynomials.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        let lin = IntPoly::new(vec![a.clone(), b.clone()]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Reversed coefficient list X^n·p(1/X) (the reciprocal polynomial).
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in the sparse form accepted by the CLI parser, descending degree,
/// e.g. `x^6-7x^4+14x^2-7`. The zero polynomial renders as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if unit {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag}x")?;
                    }
                }
                _ => {
                    if unit {
                        write!(f, "x^{i}")?;
                    } else {
                        write!(f, "{mag}x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// f(x) = g(x^ℓ).
pub fn compose_power(g: &IntPoly, l: usize) -> IntPoly {
    assert!(l >= 1, "composition exponent must be positive");
    if g.is_zero() {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); g.deg() * l + 1];
    for (i, c) in g.coeffs().iter().enumerate() {
        coeffs[i * l] = c.clone();
    }
    IntPoly::new(coeffs)
}

/// Inverse of `compose_power(g, 2)`: Some(g) with g(X²) = f iff every
/// odd-degree coefficient of f vanishes.
pub fn sqrt_decompose(f: &IntPoly) -> Option<IntPoly> {
    if f.is_zero() {
        return Some(IntPoly::zero());
    }
    if f.coeffs().iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return None;
    }
    Some(IntPoly::new(
        f.coeffs().iter().step_by(2).cloned().collect(),
    ))
}

fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut base = b.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn div_exact_big(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact integer division in resultant chain");
    q
}

/// Pseudo-remainder: lc(b)^{deg a − deg b + 1}·a mod b, for deg a ≥ deg b.
fn prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.deg();
    let lcb = b.lc();
    let delta = a.deg() - db;
    let mut r = a.clone();
    let mut steps = 0usize;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lead = r.lc().clone();
        let scaled = r.mul_scalar(lcb);
        let sub = b.mul_scalar(&lead).shift_up(dr - db);
        r = scaled.sub(&sub);
        steps += 1;
    }
    // Degree can drop by more than one per step; normalize to the canonical
    // lc^{delta+1} multiplier so callers can rely on the exact identity.
    if steps < delta + 1 {
        r = r.mul_scalar(&pow_big(lcb, delta + 1 - steps));
    }
    r
}

/// Resultant of two integer polynomials, exact.
///
/// Computed over a pseudo-remainder sequence with content removed at each
/// step; every scale factor is accounted for exactly, so the result is the
/// true resultant including sign.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (ca, ap) = a.primitive();
    let db = b.deg();
    // Res(c·A, B) = c^{deg B}·Res(A, B)
    let scale = pow_big(&ca, db);
    scale * res_primitive(&ap, b)
}

fn res_primitive(a: &IntPoly, b: &IntPoly) -> BigInt {
    let da = a.deg();
    let db = b.deg();
    if da == 0 {
        return pow_big(a.lc(), db);
    }
    if db == 0 {
        return pow_big(b.lc(), da);
    }
    if da < db {
        let r = res_primitive(b, a);
        return if (da * db) % 2 == 1 { -r } else { r };
    }
    let (cb, bp) = b.primitive();
    let lcb = bp.lc().clone();
    let r = prem(a, &bp);
    if r.is_zero() {
        return BigInt::zero();
    }
    let dr = r.deg();
    let sub = res_primitive(&bp, &r);
    // lc(bp)^{da−db+1}·a ≡ r (mod bp) gives
    // Res(a, bp) = (−1)^{da·db}·lc(bp)^{da − dr − db·(da−db+1)}·Res(bp, r).
    let e = da as i64 - dr as i64 - (db as i64) * (da as i64 - db as i64 + 1);
    let mut val = if e >= 0 {
        sub * pow_big(&lcb, e as usize)
    } else {
        div_exact_big(&sub, &pow_big(&lcb, (-e) as usize))
    };
    if (da * db) % 2 == 1 {
        val = -val;
    }
    // Res(a, b) = cb^{da}·Res(a, bp)
    pow_big(&cb, da) * val
}

/// Discriminant Δ(f) = (−1)^{n(n−1)/2}·Res(f, f′)/lc(f).
pub fn discriminant(f: &IntPoly) -> Result<BigInt, PolyError> {
    let n = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant(f, &f.derivative());
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(div_exact_big(&signed, f.lc()))
}

/// Greatest common divisor in ℤ[X]: primitive, positive leading coefficient,
/// scaled by the gcd of the contents.
pub fn gcd_poly(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let (ca, mut ap) = a.primitive();
    let (cb, mut bp) = b.primitive();
    let c = ca.gcd(&cb);
    if ap.deg() < bp.deg() {
        std::mem::swap(&mut ap, &mut bp);
    }
    while !bp.is_zero() {
        let r = prem(&ap, &bp);
        ap = bp;
        bp = r.primitive().1;
    }
    normalize_sign(&ap.primitive().1).mul_scalar(&c)
}

fn normalize_sign(p: &IntPoly) -> IntPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

/// Number of distinct real roots, by an exact Sturm chain on the squarefree
/// part.
pub fn real_root_count(f: &IntPoly) -> usize {
    if f.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    let g = gcd_poly(f, &f.derivative());
    let sf = if g.is_constant() {
        f.clone()
    } else {
        f.div_exact(&g).expect("gcd divides f")
    };
    // Sturm chain with sign-corrected pseudo-remainders.
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.is_zero() {
            chain.pop();
            break;
        }
        if b.is_constant() {
            break;
        }
        if a.deg() < b.deg() {
            // Derivative has smaller degree by construction; subsequent
            // entries strictly decrease, so this only happens at the start
            // for degree-1 inputs.
            break;
        }
        let delta = a.deg() - b.deg();
        let mut r = prem(a, b);
        // prem scales by lc(b)^{delta+1}; when that factor is negative the
        // remainder's sign is flipped relative to the rational remainder.
        if b.lc().is_negative() && (delta + 1) % 2 == 1 {
            r = r.neg();
        }
        let next = r.primitive().1.neg();
        chain.push(next);
    }
    let sign_at = |p: &IntPoly, at_pos_inf: bool| -> i8 {
        let l = p.lc();
        let mut s = if l.is_negative() { -1i8 } else { 1 };
        if !at_pos_inf && p.deg() % 2 == 1 {
            s = -s;
        }
        s
    };
    let count_changes = |at_pos_inf: bool| -> usize {
        let mut changes = 0;
        let mut prev = 0i8;
        for p in &chain {
            if p.is_zero() {
                continue;
            }
            let s = if p.is_constant() {
                if p.lc().is_negative() {
                    -1
                } else {
                    1
                }
            } else {
                sign_at(p, at_pos_inf)
            };
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        changes
    };
    count_changes(false) - count_changes(true)
}
