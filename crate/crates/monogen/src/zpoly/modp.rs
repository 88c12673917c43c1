//! Polynomial arithmetic and factorization over 𝔽_p.
//!
//! Coefficients live in u64 with u128 intermediate products, which covers
//! every prime below 2⁶³. Factorization is squarefree decomposition, then
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting
//! driven by a fixed-seed generator, so results are deterministic.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use super::IntPoly;

/// A monic-or-not polynomial over 𝔽_p, dense ascending coefficients, always
/// reduced and without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero mod p");
    powmod(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(p >= 2, "modulus must be a prime ≥ 2");
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Reduces an integer polynomial mod p.
    pub fn from_intpoly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let mut r = c % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                r.to_u64().expect("residue fits u64")
            })
            .collect();
        ModPoly::new(p, coeffs)
    }

    /// Lift with coefficients in 0..p.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        ModPoly::new(p, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % p)
            .collect();
        ModPoly::new(p, coeffs)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
            .collect();
        ModPoly::new(p, coeffs)
    }

    pub fn neg(&self) -> ModPoly {
        let p = self.p;
        ModPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(p);
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![0u64; n];
        if p < (1 << 31) {
            // Products stay below 2⁶², so a u128 accumulator absorbs whole
            // convolution rows before a single reduction.
            for (k, ck) in coeffs.iter_mut().enumerate() {
                let lo = (k + 1).saturating_sub(other.coeffs.len());
                let hi = k.min(self.coeffs.len() - 1);
                let mut acc = 0u128;
                for i in lo..=hi {
                    acc += self.coeffs[i] as u128 * other.coeffs[k - i] as u128;
                }
                *ck = (acc % p as u128) as u64;
            }
        } else {
            for (k, ck) in coeffs.iter_mut().enumerate() {
                let lo = (k + 1).saturating_sub(other.coeffs.len());
                let hi = k.min(self.coeffs.len() - 1);
                let mut acc = 0u128;
                for i in lo..=hi {
                    acc += mulmod(self.coeffs[i], other.coeffs[k - i], p) as u128;
                }
                *ck = (acc % p as u128) as u64;
            }
        }
        ModPoly::new(p, coeffs)
    }

    pub fn mul_scalar(&self, k: u64) -> ModPoly {
        let p = self.p;
        let k = k % p;
        ModPoly::new(p, self.coeffs.iter().map(|&c| mulmod(c, k, p)).collect())
    }

    pub fn make_monic(&self) -> ModPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(invmod(self.lc(), self.p))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divmod(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        debug_assert_eq!(self.p, d.p);
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return (ModPoly::zero(p), self.clone());
        }
        let dinv = invmod(d.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mulmod(rem[i], dinv, p);
            rem[i] = 0;
            for j in 0..dd {
                let t = mulmod(q, d.coeffs[j], p);
                rem[i - dd + j] = (rem[i - dd + j] + p - t) % p;
            }
            quo[i - dd] = q;
        }
        rem.truncate(dd);
        (ModPoly::new(p, quo), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divmod(d).1
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
            .collect();
        ModPoly::new(p, coeffs)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self^e mod m, with an arbitrarily large exponent.
    pub fn powmod_big(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let p = self.p;
        let mut acc = ModPoly::one(p);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

impl PartialOrd for ModPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the constant term up, giving the
/// canonical order used for factor lists.
impl Ord for ModPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl std::fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.p)
    }
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// f with every exponent divided by p, valid exactly when f′ = 0 (over the
/// prime field, coefficients are their own p-th roots).
fn pth_root(f: &ModPoly) -> ModPoly {
    let p = f.p;
    let step = p as usize;
    let coeffs = f.coeffs.iter().copied().step_by(step).collect();
    ModPoly::new(p, coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairwise-coprime monic
/// squarefree parts with their multiplicities, product reassembling f.
fn squarefree_parts(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    debug_assert!(f.is_monic());
    let p = f.p;
    if f.is_constant() {
        return vec![];
    }
    let d = f.derivative();
    if d.is_zero() {
        return squarefree_parts(&pth_root(f))
            .into_iter()
            .map(|(g, m)| (g, m * p as u32))
            .collect();
    }
    let mut out = vec![];
    let mut c = f.gcd(&d);
    let mut w = f.divmod(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divmod(&y).0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.divmod(&w).0;
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree_parts(&pth_root(&c)) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Splits a monic squarefree f into (product of irreducibles of degree d, d)
/// pairs, ascending in d.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut rest = f.clone();
    let mut out = vec![];
    let mut h = ModPoly::x(p);
    let mut d = 0usize;
    let pe = BigUint::from(p);
    while let Some(dr) = rest.degree() {
        if dr == 0 {
            break;
        }
        d += 1;
        if dr < 2 * d {
            // Whatever is left is a single irreducible factor.
            out.push((rest.clone(), dr));
            break;
        }
        h = h.powmod_big(&pe, &rest);
        let g = rest.gcd(&h.sub(&ModPoly::x(p)));
        if !g.is_constant() {
            out.push((g.clone(), d));
            rest = rest.divmod(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting: f monic squarefree, every
/// irreducible factor of degree exactly d.
fn equal_degree(f: &ModPoly, d: usize, out: &mut Vec<ModPoly>, rng: &mut u64) {
    let p = f.p;
    if f.deg() == d {
        out.push(f.make_monic());
        return;
    }
    let n = f.deg();
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| xorshift(rng) % p).collect();
        let r = ModPoly::new(p, coeffs);
        if r.is_constant() {
            continue;
        }
        let u = if p == 2 {
            // Trace map r + r² + … + r^{2^{d−1}}.
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            f.gcd(&acc)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let t = r.powmod_big(&e, f);
            f.gcd(&t.sub(&ModPoly::one(p)))
        };
        if u.is_constant() || u.deg() == f.deg() {
            continue;
        }
        let v = f.divmod(&u).0;
        equal_degree(&u, d, out, rng);
        equal_degree(&v, d, out, rng);
        return;
    }
}

/// Factors f mod p into monic irreducibles with multiplicity, sorted in the
/// canonical order (degree, then coefficients). The leading unit lc(f) mod p
/// is implied and not returned.
///
/// # Panics
/// Panics if f reduces to the zero polynomial mod p.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Vec<(ModPoly, u32)> {
    let fbar = ModPoly::from_intpoly(f, p);
    assert!(
        !fbar.is_zero(),
        "polynomial vanishes mod {p}; pick a prime not dividing the content"
    );
    factor_modpoly(&fbar)
}

pub(crate) fn factor_modpoly(fbar: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = fbar.modulus();
    if fbar.is_constant() {
        return vec![];
    }
    let monic = fbar.make_monic();
    let mut seed = 0x9E37_79B9_7F4A_7C15u64 ^ (p.rotate_left(17)) ^ (monic.deg() as u64) << 1;
    if seed == 0 {
        seed = 1;
    }
    let mut out: Vec<(ModPoly, u32)> = vec![];
    for (part, mult) in squarefree_parts(&monic) {
        for (prod, d) in distinct_degree(&part) {
            let mut irreds = vec![];
            equal_degree(&prod, d, &mut irreds, &mut seed);
            for g in irreds {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Irreducibility over 𝔽_p without producing the factorization: f must not
/// vanish mod p. Uses the distinct-degree criterion with early exits.
pub fn is_irreducible_mod_p(f: &IntPoly, p: u64) -> bool {
    let fbar = ModPoly::from_intpoly(f, p).make_monic();
    let n = match fbar.degree() {
        None => panic!("polynomial vanishes mod {p}"),
        Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    // Squarefree check first; it also rules out f′ = 0.
    if !fbar.gcd(&fbar.derivative()).is_one() {
        return false;
    }
    // f irreducible of degree n iff X^{p^n} ≡ X (mod f) and for every prime
    // q | n, gcd(X^{p^{n/q}} − X, f) = 1.
    let x = ModPoly::x(p);
    let pe = BigUint::from(p);
    let mut qs = vec![];
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            qs.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        qs.push(m);
    }
    for q in qs {
        let e = pe.pow((n / q) as u32);
        let h = x.powmod_big(&e, &fbar);
        if !fbar.gcd(&h.sub(&x)).is_one() {
            return false;
        }
    }
    let e = pe.pow(n as u32);
    x.powmod_big(&e, &fbar) == x.rem(&fbar)
}
