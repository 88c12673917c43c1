//! Cyclotomic and real-cyclotomic minimal polynomials, and the recognition
//! of shifted real-cyclotomic generators.
//!
//! The interesting cores found by the sextic search all turn out to be
//! minimal polynomials of −ζ_d − ζ_d⁻¹ ± 2; `match_remark` recognizes that
//! pattern for any given monic polynomial by scanning every conductor of the
//! right degree.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::zpoly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("real cyclotomic fields need a conductor of at least 3")]
    DegenerateConductor,
    #[error("shift variants are defined for monic polynomials")]
    NonMonic,
}

/// Witness that g(X) = minpoly(−ζ_d − ζ_d⁻¹ + sign·2), after replacing g by
/// its reciprocal partner when `mirror` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftMatch {
    pub d: u64,
    pub sign: i8,
    pub mirror: bool,
}

/// The d-th cyclotomic polynomial, by dividing X^d − 1 by every Φ_e with
/// e | d, e < d.
pub fn cyclotomic_poly(d: u64) -> IntPoly {
    assert!(d >= 1, "no zeroth cyclotomic polynomial");
    let mut num = IntPoly::monomial(BigInt::one(), d as usize).sub(&IntPoly::one());
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (q, r) = num.divmod_monic(&cyclotomic_poly(e));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    num
}

/// Minimal polynomial of ζ_d + ζ_d⁻¹ = 2cos(2π/d), of degree φ(d)/2.
///
/// Pairing each primitive root with its conjugate gives
/// Φ_d(x) = x^(φ(d)/2)·ψ(x + 1/x), so ψ falls out of the palindromic
/// coefficients of Φ_d via the recurrence turning x^k + x^(−k) into a
/// polynomial in x + 1/x.
pub fn real_cyclotomic_minpoly(d: u64) -> Result<IntPoly, CycloError> {
    if d < 3 {
        return Err(CycloError::DegenerateConductor);
    }
    let phi = cyclotomic_poly(d);
    let n = phi.deg();
    debug_assert_eq!(n % 2, 0);
    let q = n / 2;
    // w_prev, w hold V_{k−1}, V_k with V_k(x + 1/x) = x^k + x^(−k)
    let mut w_prev = IntPoly::constant(BigInt::from(2));
    let mut w = IntPoly::x();
    let mut out = IntPoly::constant(phi.coeff(q));
    for k in 1..=q {
        debug_assert_eq!(phi.coeff(q + k), phi.coeff(q - k));
        out = out.add(&w.mul_scalar(&phi.coeff(q + k)));
        let next = IntPoly::x().mul(&w).sub(&w_prev);
        w_prev = w;
        w = next;
    }
    debug_assert!(out.is_monic() && out.deg() == q);
    Ok(out)
}

/// Minimal polynomial of α + t (or −α + t when `negate`) for α running over
/// the roots of h, as the monic normalization of ±h(±(X − t)).
pub fn shifted_variant(h: &IntPoly, t: &BigInt, negate: bool) -> Result<IntPoly, CycloError> {
    if !h.is_monic() {
        return Err(CycloError::NonMonic);
    }
    let out = if negate {
        let flipped = h.compose_linear(t, &BigInt::from(-1));
        if h.deg() % 2 == 1 {
            flipped.neg()
        } else {
            flipped
        }
    } else {
        h.compose_linear(&-t, &BigInt::one())
    };
    debug_assert!(out.is_monic());
    Ok(out)
}

fn euler_phi(mut m: u64) -> u64 {
    let mut phi = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            let mut pk = 1;
            while m.is_multiple_of(p) {
                pk *= p;
                m /= p;
            }
            phi *= pk * (p - 1);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

/// Searches for a conductor d with φ(d) = 2·deg(g) and a sign s such that g
/// is the minimal polynomial of −ζ_d − ζ_d⁻¹ + 2s, also trying the
/// reciprocal partner of g when g(0) = ±1.  First match wins.
pub fn match_remark(g: &IntPoly) -> Option<ShiftMatch> {
    if !g.is_monic() || g.is_constant() {
        return None;
    }
    let q = g.deg() as u64;
    let mut targets = vec![(g.clone(), false)];
    if g.constant_term().abs().is_one() {
        let mut rev = g.reversed();
        if rev.lc().is_negative() {
            rev = rev.neg();
        }
        targets.push((rev, true));
    }
    // φ(m) ≥ √(m/2) bounds the scan; conductors d ≡ 2 (mod 4) fold into d/2
    // because −ζ_{2m} generates the same real field as ζ_m for odd m
    let bound = 8 * q * q + 2;
    for (target, mirror) in &targets {
        for m in 3..=bound {
            if m % 4 == 2 || euler_phi(m) != 2 * q {
                continue;
            }
            let psi = real_cyclotomic_minpoly(m).expect("conductor is at least 3");
            for sign in [1i8, -1] {
                let t = BigInt::from(2 * i64::from(sign));
                if shifted_variant(&psi, &t, true).expect("monic") == *target {
                    return Some(ShiftMatch { d: m, sign, mirror: *mirror });
                }
                // for odd m, the un-negated shift belongs to conductor 2m
                if m % 2 == 1 && shifted_variant(&psi, &t, false).expect("monic") == *target {
                    return Some(ShiftMatch { d: 2 * m, sign, mirror: *mirror });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zpoly::real_root_count;
    use num_traits::Zero;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn cyclotomic_frozen_values() {
        assert_eq!(cyclotomic_poly(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ip(&[1, 1]));
        assert_eq!(cyclotomic_poly(7), ip(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(9), ip(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), ip(&[1, 0, -1, 0, 1]));
        for d in 1..=40u64 {
            assert_eq!(cyclotomic_poly(d).deg() as u64, euler_phi(d), "d = {d}");
        }
        // Π_{e | 12} Φ_e = X¹² − 1
        let mut prod = IntPoly::one();
        for e in [1u64, 2, 3, 4, 6, 12] {
            prod = prod.mul(&cyclotomic_poly(e));
        }
        assert_eq!(prod, IntPoly::monomial(BigInt::one(), 12).sub(&IntPoly::one()));
    }

    #[test]
    fn real_minpoly_frozen_values() {
        assert_eq!(real_cyclotomic_minpoly(3), Ok(ip(&[1, 1])));
        assert_eq!(real_cyclotomic_minpoly(4), Ok(ip(&[0, 1])));
        assert_eq!(real_cyclotomic_minpoly(5), Ok(ip(&[-1, 1, 1])));
        assert_eq!(real_cyclotomic_minpoly(7), Ok(ip(&[-1, -2, 1, 1])));
        assert_eq!(real_cyclotomic_minpoly(9), Ok(ip(&[1, -3, 0, 1])));
        assert_eq!(real_cyclotomic_minpoly(11), Ok(ip(&[1, 3, -3, -4, 1, 1])));
        assert_eq!(real_cyclotomic_minpoly(12), Ok(ip(&[-3, 0, 1])));
        assert_eq!(real_cyclotomic_minpoly(1), Err(CycloError::DegenerateConductor));
        assert_eq!(real_cyclotomic_minpoly(2), Err(CycloError::DegenerateConductor));
    }

    #[test]
    fn real_minpoly_reconstructs_cyclotomic() {
        // Φ_d(x) = x^q·ψ_d(x + 1/x), cleared of denominators
        for d in 3..=60u64 {
            let phi = cyclotomic_poly(d);
            let psi = real_cyclotomic_minpoly(d).unwrap();
            let q = psi.deg();
            let x2p1 = ip(&[1, 0, 1]);
            let mut sum = IntPoly::zero();
            for i in 0..=q {
                let term = x2p1.pow(i as u32).shift_up(q - i).mul_scalar(&psi.coeff(i));
                sum = sum.add(&term);
            }
            assert_eq!(sum, phi, "d = {d}");
        }
    }

    #[test]
    fn real_minpoly_is_totally_real() {
        for d in [5u64, 7, 9, 11, 13, 16, 20, 23] {
            let psi = real_cyclotomic_minpoly(d).unwrap();
            assert_eq!(real_root_count(&psi), psi.deg(), "d = {d}");
        }
    }

    #[test]
    fn shifted_variant_known_cases() {
        let psi7 = real_cyclotomic_minpoly(7).unwrap();
        let two = BigInt::from(2);
        assert_eq!(shifted_variant(&psi7, &two, true), Ok(ip(&[-7, 14, -7, 1])));
        assert_eq!(shifted_variant(&psi7, &BigInt::zero(), false), Ok(psi7.clone()));
        // shifting forth and back is the identity
        let shifted = shifted_variant(&psi7, &two, false).unwrap();
        assert_eq!(shifted_variant(&shifted, &-&two, false), Ok(psi7.clone()));
        let negated = shifted_variant(&psi7, &BigInt::zero(), true).unwrap();
        assert_eq!(shifted_variant(&negated, &BigInt::zero(), true), Ok(psi7));
        assert_eq!(
            shifted_variant(&ip(&[1, 4, 2]), &two, false),
            Err(CycloError::NonMonic)
        );
    }

    #[test]
    fn shift_recognition_is_complete_on_its_own_output() {
        for m in [5u64, 7, 9, 11, 12, 13, 15, 16, 21] {
            let psi = real_cyclotomic_minpoly(m).unwrap();
            for sign in [1i8, -1] {
                let t = BigInt::from(2 * i64::from(sign));
                let negated = shifted_variant(&psi, &t, true).unwrap();
                assert_eq!(
                    match_remark(&negated),
                    Some(ShiftMatch { d: m, sign, mirror: false }),
                    "m = {m}, sign = {sign}"
                );
                if m % 2 == 1 {
                    let plain = shifted_variant(&psi, &t, false).unwrap();
                    assert_eq!(
                        match_remark(&plain),
                        Some(ShiftMatch { d: 2 * m, sign, mirror: false }),
                        "m = {m}, sign = {sign}"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_recognition_on_the_sextic_cores() {
        let cases: [(&[i64], u64, i8, bool); 6] = [
            (&[-7, 14, -7, 1], 7, 1, false),
            (&[1, 6, 5, 1], 7, -1, false),
            (&[1, 5, 6, 1], 7, -1, true),
            (&[-3, 9, -6, 1], 9, 1, false),
            (&[1, 9, 6, 1], 9, -1, false),
            (&[1, 6, 9, 1], 9, -1, true),
        ];
        for (coeffs, d, sign, mirror) in cases {
            assert_eq!(
                match_remark(&ip(coeffs)),
                Some(ShiftMatch { d, sign, mirror }),
                "{:?}",
                coeffs
            );
        }
        assert_eq!(match_remark(&ip(&[-2, 0, 0, 1])), None);
        assert_eq!(match_remark(&ip(&[1, 1, 1])), None);
    }

    #[test]
    fn shift_recognition_on_the_higher_degree_cores() {
        let quintics: [(&[i64], u64, i8, bool); 3] = [
            (&[1, 15, 35, 28, 9, 1], 11, -1, false),
            (&[-11, 55, -77, 44, -11, 1], 11, 1, false),
            (&[1, 9, 28, 35, 15, 1], 11, -1, true),
        ];
        for (coeffs, d, sign, mirror) in quintics {
            assert_eq!(
                match_remark(&ip(coeffs)),
                Some(ShiftMatch { d, sign, mirror }),
                "{:?}",
                coeffs
            );
        }
        let deg11: [(&[i64], u64, i8, bool); 3] = [
            (
                &[1, 66, 715, 3003, 6435, 8008, 6188, 3060, 969, 190, 21, 1],
                23,
                -1,
                false,
            ),
            (
                &[-23, 506, -3289, 9867, -16445, 16744, -10948, 4692, -1311, 230, -23, 1],
                23,
                1,
                false,
            ),
            (
                &[1, 21, 190, 969, 3060, 6188, 8008, 6435, 3003, 715, 66, 1],
                23,
                -1,
                true,
            ),
        ];
        for (coeffs, d, sign, mirror) in deg11 {
            assert_eq!(
                match_remark(&ip(coeffs)),
                Some(ShiftMatch { d, sign, mirror }),
                "{:?}",
                coeffs
            );
        }
    }
}
