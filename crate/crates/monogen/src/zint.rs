//! Exact integer arithmetic: factoring, squares, squarefreeness, and the
//! integer roots of a polynomial.
//!
//! Factoring is deterministic. Trial division over a fixed sieve handles the
//! small range, a Miller–Rabin test with a base set that is exact below
//! 3.3·10²⁴ certifies primality, and Brent's cycle variant of the rho method
//! with fixed polynomial increments splits what remains. Work beyond the
//! budget lands in a composite cofactor rather than a wrong answer, and
//! [`Squarefree::Unknown`] propagates that honestly.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::zpoly::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZintError {
    #[error("zero has no factorization")]
    ZeroInput,
    #[error("zero polynomial has every integer as a root")]
    ZeroPolynomial,
}

/// Effort caps for [`factorize`]. The defaults finish instantly on anything
/// this crate produces at search scale and still crack 128-bit semiprimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    /// Trial-divide by every prime up to this bound (clamped to 10⁶, the
    /// extent of the built-in sieve).
    pub trial_bound: u64,
    /// Total rho iterations allowed per remaining composite, across all
    /// increment constants.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: TRIAL_SIEVE_LIMIT,
            rho_iterations: 1 << 22,
        }
    }
}

impl FactorBudget {
    /// A much smaller budget for throwaway probes where giving up fast is
    /// preferable to a complete answer.
    pub fn quick() -> Self {
        FactorBudget {
            trial_bound: 10_000,
            rho_iterations: 1 << 14,
        }
    }
}

/// Factored form sign·Π pᵢ^eᵢ·cofactor with the pᵢ certified prime, strictly
/// increasing, and the cofactor either 1 or a composite coprime to every
/// listed prime with no factor below the trial bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
    pub cofactor: BigInt,
}

impl Factorization {
    pub fn unit(sign: i8) -> Self {
        Factorization {
            sign,
            factors: vec![],
            cofactor: BigInt::one(),
        }
    }

    /// Reassembles the integer that was factored.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v * &self.cofactor
    }

    /// True when no composite cofactor remains.
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    /// Listed primes whose exponent is at least `min`.
    pub fn primes_with_exponent_at_least(&self, min: u32) -> impl Iterator<Item = &BigInt> {
        self.factors
            .iter()
            .filter(move |(_, e)| *e >= min)
            .map(|(p, _)| p)
    }

    /// Product of two factorizations (exact; merges prime lists).
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut map: BTreeMap<BigInt, u32> = BTreeMap::new();
        for (p, e) in self.factors.iter().chain(other.factors.iter()) {
            *map.entry(p.clone()).or_insert(0) += e;
        }
        Factorization {
            sign: self.sign * other.sign,
            factors: map.into_iter().collect(),
            cofactor: &self.cofactor * &other.cofactor,
        }
    }

    /// k-th power (exact; multiplies exponents).
    pub fn pow(&self, k: u32) -> Factorization {
        if k == 0 {
            return Factorization::unit(1);
        }
        Factorization {
            sign: if k.is_multiple_of(2) { self.sign.abs() } else { self.sign },
            factors: self
                .factors
                .iter()
                .map(|(p, e)| (p.clone(), e * k))
                .collect(),
            cofactor: num_traits::Pow::pow(&self.cofactor, k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Squarefree {
    Yes,
    No,
    /// The factored part is squarefree but a composite cofactor survived the
    /// budget, so a repeated factor could hide inside it.
    Unknown,
}

pub const TRIAL_SIEVE_LIMIT: u64 = 1_000_000;

static SMALL_PRIMES: OnceLock<Vec<u32>> = OnceLock::new();

/// All primes below 10⁶, sieved once on first use.
pub fn small_primes() -> &'static [u32] {
    SMALL_PRIMES.get_or_init(|| {
        let n = TRIAL_SIEVE_LIMIT as usize;
        let mut composite = vec![false; n];
        let mut primes = Vec::with_capacity(78_498);
        for i in 2..n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, b, m);
        }
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller–Rabin for u64 (the base set is exact below 3.3·10²⁴).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for &a in &MR_BASES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary magnitude: exact below 3.3·10²⁴ via the fixed
/// Miller–Rabin base set, and overwhelmingly reliable above (the same twelve
/// bases as a strong probable-prime test).
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().expect("n > 1");
    let d = &nm1 >> s;
    'base: for &a in &MR_BASES {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == nm1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Brent-cycle rho on u64; `budget` caps total iterations across increments.
fn rho_u64(n: u64, budget: u64) -> Option<u64> {
    debug_assert!(n > 1 && !is_prime_u64(n) && n % 2 == 1);
    let mut spent = 0u64;
    for c in 1u64..64 {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = f(y);
                    q = mulmod_u64(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
                spent += m;
                if spent > budget {
                    return None;
                }
            }
            r *= 2;
        }
        if g == n {
            g = 1;
            while g == 1 {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                spent += 1;
                if spent > budget {
                    return None;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigInt, budget: u64) -> Option<BigInt> {
    let one = BigInt::one();
    let mut spent = 0u64;
    for c in 1u32..64 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2u32);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
                spent += m;
                if spent > budget {
                    return None;
                }
            }
            r *= 2;
        }
        if &g == n {
            g = one.clone();
            while g.is_one() {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                spent += 1;
                if spent > budget {
                    return None;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

fn perfect_power_u64(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    let maxk = 63 - n.leading_zeros();
    for k in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        if k > maxk {
            break;
        }
        let r = n.nth_root(k);
        if r.pow(k) == n {
            return Some((r, k));
        }
    }
    None
}

fn perfect_power_big(n: &BigInt) -> Option<(BigInt, u32)> {
    if let Some(v) = n.to_u64() {
        return perfect_power_u64(v).map(|(r, k)| (BigInt::from(r), k));
    }
    let bits = n.bits();
    let mut k = 2u32;
    while (k as u64) <= bits {
        if is_prime_u64(k as u64) {
            let r = n.nth_root(k);
            if num_traits::Pow::pow(&r, k) == *n {
                return Some((r, k));
            }
        }
        k += 1;
    }
    None
}

/// Factors n (nonzero) within the given budget.
pub fn factorize(n: &BigInt, budget: &FactorBudget) -> Result<Factorization, ZintError> {
    if n.is_zero() {
        return Err(ZintError::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut primes: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut cofactor = BigInt::one();
    let mut a = n.abs();
    let bound = budget.trial_bound.min(TRIAL_SIEVE_LIMIT);

    // Trial division; drops to machine words as soon as the value allows.
    let sp = small_primes();
    let mut idx = 0usize;
    while idx < sp.len() && (sp[idx] as u64) <= bound {
        if let Some(v) = a.to_u64() {
            trial_u64(v, idx, bound, budget, &mut primes, &mut cofactor);
            a = BigInt::one();
            break;
        }
        let p = BigInt::from(sp[idx]);
        while (&a % &p).is_zero() {
            a /= &p;
            *primes.entry(p.clone()).or_insert(0) += 1;
        }
        idx += 1;
    }
    if !a.is_one() {
        if let Some(v) = a.to_u64() {
            pending_u64(v, budget, &mut primes, &mut cofactor);
        } else {
            pending_big(a, budget, &mut primes, &mut cofactor);
        }
    }

    // A prime certified from one split can in principle still divide the
    // leftover cofactor; pull it out so the coprimality invariant holds.
    if !cofactor.is_one() {
        let listed: Vec<BigInt> = primes.keys().cloned().collect();
        for p in listed {
            while (&cofactor % &p).is_zero() {
                cofactor /= &p;
                *primes.entry(p.clone()).or_insert(0) += 1;
            }
        }
        if cofactor.is_one() {
            // fully absorbed
        } else if is_prime(&cofactor) {
            *primes.entry(std::mem::take(&mut cofactor)).or_insert(0) += 1;
            cofactor = BigInt::one();
        }
    }

    Ok(Factorization {
        sign,
        factors: primes.into_iter().collect(),
        cofactor,
    })
}

fn trial_u64(
    mut v: u64,
    start: usize,
    bound: u64,
    budget: &FactorBudget,
    primes: &mut BTreeMap<BigInt, u32>,
    cofactor: &mut BigInt,
) {
    let sp = small_primes();
    let mut small_factors_cleared = false;
    for &p in &sp[start..] {
        let p = p as u64;
        if p > bound {
            break;
        }
        if p * p > v {
            small_factors_cleared = true;
            break;
        }
        while v.is_multiple_of(p) {
            v /= p;
            *primes.entry(BigInt::from(p)).or_insert(0) += 1;
        }
    }
    if v == 1 {
        return;
    }
    if small_factors_cleared || v <= bound * bound {
        // All prime factors up to √v are gone, so what remains is prime.
        *primes.entry(BigInt::from(v)).or_insert(0) += 1;
        return;
    }
    pending_u64(v, budget, primes, cofactor);
}

fn pending_u64(
    v: u64,
    budget: &FactorBudget,
    primes: &mut BTreeMap<BigInt, u32>,
    cofactor: &mut BigInt,
) {
    let mut stack = vec![v];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *primes.entry(BigInt::from(m)).or_insert(0) += 1;
            continue;
        }
        if let Some((r, k)) = perfect_power_u64(m) {
            for _ in 0..k {
                stack.push(r);
            }
            continue;
        }
        match rho_u64(m, budget.rho_iterations) {
            Some(d) => {
                stack.push(d);
                stack.push(m / d);
            }
            None => *cofactor *= BigInt::from(m),
        }
    }
}

fn pending_big(
    n: BigInt,
    budget: &FactorBudget,
    primes: &mut BTreeMap<BigInt, u32>,
    cofactor: &mut BigInt,
) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(v) = m.to_u64() {
            pending_u64(v, budget, primes, cofactor);
            continue;
        }
        if is_prime(&m) {
            *primes.entry(m).or_insert(0) += 1;
            continue;
        }
        if let Some((r, k)) = perfect_power_big(&m) {
            for _ in 0..k {
                stack.push(r.clone());
            }
            continue;
        }
        match rho_big(&m, budget.rho_iterations) {
            Some(d) => {
                let q = &m / &d;
                stack.push(d);
                stack.push(q);
            }
            None => *cofactor *= &m,
        }
    }
}

/// Some(r) with r² = n and r ≥ 0, when n is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    // Cheap residue rejection before the exact root.
    if let Some(v) = n.to_u64() {
        if !matches!(v & 15, 0 | 1 | 4 | 9) {
            return None;
        }
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Squarefreeness of n ≠ 0, as far as the factoring budget can tell. Sign is
/// ignored; ±1 count as squarefree.
pub fn is_squarefree(n: &BigInt) -> Squarefree {
    is_squarefree_with(n, &FactorBudget::default())
}

pub fn is_squarefree_with(n: &BigInt, budget: &FactorBudget) -> Squarefree {
    let f = match factorize(n, budget) {
        Ok(f) => f,
        Err(_) => return Squarefree::No,
    };
    if f.factors.iter().any(|(_, e)| *e >= 2) {
        return Squarefree::No;
    }
    if f.is_complete() {
        return Squarefree::Yes;
    }
    if perfect_power_big(&f.cofactor).is_some() {
        return Squarefree::No;
    }
    Squarefree::Unknown
}

/// Integer roots of p with multiplicity, sorted ascending.
///
/// Complete whenever the constant term of p/X^v factors within the default
/// budget; an incomplete factorization could at worst miss roots whose
/// magnitude divides only the unfactored cofactor, and the cofactor is still
/// used as a divisor source so such misses require a proper divisor of it.
pub fn integer_roots(p: &IntPoly) -> Result<Vec<BigInt>, ZintError> {
    if p.is_zero() {
        return Err(ZintError::ZeroPolynomial);
    }
    let (q, v) = p.strip_low_zeros();
    let mut roots: Vec<BigInt> = std::iter::repeat_with(BigInt::zero).take(v).collect();
    if q.is_constant() {
        return Ok(roots);
    }
    let a0 = q.constant_term().abs();
    let f = factorize(&a0, &FactorBudget::default()).expect("nonzero constant term");
    let mut divisors = vec![BigInt::one()];
    let push_prime_power = |divisors: &mut Vec<BigInt>, p: &BigInt, e: u32| {
        let base = divisors.clone();
        let mut pe = BigInt::one();
        for _ in 0..e {
            pe *= p;
            for d in &base {
                divisors.push(d * &pe);
            }
        }
    };
    for (p, e) in &f.factors {
        push_prime_power(&mut divisors, p, *e);
    }
    if !f.is_complete() {
        push_prime_power(&mut divisors, &f.cofactor, 1);
    }
    for d in divisors {
        for cand in [d.clone(), -d] {
            if !q.eval(&cand).is_zero() {
                continue;
            }
            let mut scratch = q.clone();
            while let Some(next) = scratch.deflate_root(&cand) {
                roots.push(cand.clone());
                scratch = next;
                if scratch.is_constant() {
                    break;
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn factors_of(n: i64) -> Vec<(i64, u32)> {
        let f = factorize(&bi(n), &FactorBudget::default()).unwrap();
        assert!(f.is_complete(), "expected complete factorization of {n}");
        assert_eq!(f.value(), bi(n));
        f.factors
            .iter()
            .map(|(p, e)| (p.to_i64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn factorize_units_and_small() {
        let one = factorize(&bi(1), &FactorBudget::default()).unwrap();
        assert_eq!(one.sign, 1);
        assert!(one.factors.is_empty());
        assert!(one.is_complete());
        let neg = factorize(&bi(-1), &FactorBudget::default()).unwrap();
        assert_eq!(neg.sign, -1);
        assert!(neg.factors.is_empty());
        assert_eq!(factorize(&bi(0), &FactorBudget::default()), Err(ZintError::ZeroInput));
        assert_eq!(factors_of(238), vec![(2, 1), (7, 1), (17, 1)]);
        assert_eq!(factors_of(-153_664), vec![(2, 6), (7, 4)]);
    }

    #[test]
    fn factorize_beyond_trial_range() {
        // 1000003·1000033 and a 2^89−1 Mersenne prime product need rho.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let f = factorize(&n, &FactorBudget::default()).unwrap();
        assert!(f.is_complete());
        assert_eq!(
            f.factors,
            vec![(bi(1_000_003), 1), (bi(1_000_033), 1)]
        );
        let m61 = (BigInt::one() << 61) - 1;
        let sq = &m61 * &m61;
        let f = factorize(&sq, &FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(m61, 2)]);
        assert!(f.is_complete());
    }

    #[test]
    fn factorize_respects_budget() {
        // Two ~30-digit primes: rho at the quick budget gives up and the
        // invariants still hold.
        let p = BigInt::parse_bytes(b"618970019642690137449562111", 10).unwrap();
        let q = BigInt::parse_bytes(b"162259276829213363391578010288127", 10).unwrap();
        let n = &p * &q * 12;
        let f = factorize(&n, &FactorBudget::quick()).unwrap();
        assert_eq!(f.value(), n);
        assert_eq!(f.exponent_of(&bi(2)), 2);
        assert_eq!(f.exponent_of(&bi(3)), 1);
        if !f.is_complete() {
            let b2 = BigInt::from(FactorBudget::quick().trial_bound);
            assert!(f.cofactor > &b2 * &b2);
            for (pr, _) in &f.factors {
                assert!(!(&f.cofactor % pr).is_zero());
            }
        }
    }

    #[test]
    fn factorization_algebra() {
        let a = factorize(&bi(-12), &FactorBudget::default()).unwrap();
        let b = factorize(&bi(18), &FactorBudget::default()).unwrap();
        assert_eq!(a.mul(&b).value(), bi(-216));
        assert_eq!(a.pow(2).value(), bi(144));
        assert_eq!(a.pow(3).value(), bi(-1728));
        assert_eq!(a.pow(0).value(), bi(1));
        assert_eq!(
            a.primes_with_exponent_at_least(2).collect::<Vec<_>>(),
            vec![&bi(2)]
        );
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3_571));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime(&((BigInt::one() << 89) - 1)));
        assert!(!is_prime(&((BigInt::one() << 67) - 1)));
        assert!(!is_prime(&bi(-7)));
    }

    #[test]
    fn perfect_square_witnesses() {
        assert_eq!(is_perfect_square(&bi(3136)), Some(bi(56)));
        assert_eq!(is_perfect_square(&bi(0)), Some(bi(0)));
        assert_eq!(is_perfect_square(&bi(2)), None);
        assert_eq!(is_perfect_square(&bi(-4)), None);
        let big = BigInt::parse_bytes(b"1524157875323883675019051998750190521", 10).unwrap();
        assert_eq!(
            is_perfect_square(&big),
            Some(BigInt::parse_bytes(b"1234567890123456789", 10).unwrap())
        );
    }

    #[test]
    fn squarefree_classification() {
        assert_eq!(is_squarefree(&bi(1)), Squarefree::Yes);
        assert_eq!(is_squarefree(&bi(-1)), Squarefree::Yes);
        assert_eq!(is_squarefree(&bi(30)), Squarefree::Yes);
        assert_eq!(is_squarefree(&bi(-126)), Squarefree::No); // −2·3²·7
        assert_eq!(is_squarefree(&bi(49)), Squarefree::No);
        // Square of a hard prime under the quick budget: the square hides in
        // the cofactor but the perfect-power check still catches it.
        let p = BigInt::parse_bytes(b"618970019642690137449562111", 10).unwrap();
        assert_eq!(is_squarefree_with(&(&p * &p), &FactorBudget::quick()), Squarefree::No);
        // Product of two distinct hard primes: honestly unknown.
        let q = BigInt::parse_bytes(b"162259276829213363391578010288127", 10).unwrap();
        assert_eq!(is_squarefree_with(&(&p * &q), &FactorBudget::quick()), Squarefree::Unknown);
    }

    #[test]
    fn integer_roots_examples() {
        // (X−2)²(X+3)X = X⁴ − X³ − 8X² + 12X
        let p = IntPoly::from_i64(&[0, 12, -8, -1, 1]);
        assert_eq!(
            integer_roots(&p).unwrap(),
            vec![bi(-3), bi(0), bi(2), bi(2)]
        );
        // m⁴ − 10m² − 8m + 1 has the single integer root −1.
        let p = IntPoly::from_i64(&[1, -8, -10, 0, 1]);
        assert_eq!(integer_roots(&p).unwrap(), vec![bi(-1)]);
        // m⁴ − 12m² − 8m has the single integer root 0.
        let p = IntPoly::from_i64(&[0, -8, -12, 0, 1]);
        assert_eq!(integer_roots(&p).unwrap(), vec![bi(0)]);
        // X² + 1 has none.
        assert_eq!(integer_roots(&IntPoly::from_i64(&[1, 0, 1])).unwrap(), vec![]);
        // Constants: nonzero constant has none, zero errors.
        assert_eq!(integer_roots(&IntPoly::from_i64(&[5])).unwrap(), vec![]);
        assert_eq!(
            integer_roots(&IntPoly::zero()),
            Err(ZintError::ZeroPolynomial)
        );
    }

    #[test]
    fn trial_bound_edge_is_exact() {
        // 999983 is the largest prime under the sieve limit.
        assert_eq!(factors_of(999_983), vec![(999_983, 1)]);
        let f = factorize(&(bi(999_983) * bi(999_983)), &FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(bi(999_983), 2)]);
    }
}
