use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use super::*;

fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

fn params(m: i64, n: i64, c: i64) -> D6Params {
    D6Params { m: bi(m), n: bi(n), c: bi(c) }
}

fn classify_i(a: i64, b: i64, c: i64) -> Result<GaloisLabel, GaloisError> {
    classify(&bi(a), &bi(b), &bi(c))
}

fn proved(group: GaloisGroup) -> GaloisLabel {
    GaloisLabel { group, certainty: Certainty::Proved }
}

#[test]
fn shape_solver_known_cases() {
    assert_eq!(d6_shape(&bi(6), &bi(5), &bi(1)), vec![params(-1, -2, 1)]);
    assert_eq!(d6_shape(&bi(9), &bi(6), &bi(1)), vec![params(0, -3, 1)]);
    assert!(d6_shape(&bi(1), &bi(1), &bi(1)).is_empty());
    // every pure sextic X⁶ + c carries the witness (0, 0, c)
    assert!(d6_shape(&bi(0), &bi(0), &bi(-2)).contains(&params(0, 0, -2)));
}

#[test]
fn d_value_frozen_examples() {
    assert_eq!(d_value(&params(-1, -2, 1)), bi(49));
    assert_eq!(d_value(&params(1, 2, 1)), bi(-23));
    assert_eq!(d_value(&params(-7, 7, 7)), bi(3136));
}

#[test]
fn cyclic_witness_test() {
    assert!(is_c6(&params(0, -3, 1)));
    assert!(!is_c6(&params(1, 2, 1)));
    // −c a square fails outright, whatever the rest says
    assert!(!is_c6(&params(0, -3, -1)));
    // core cubic with a rational root fails the middle condition
    assert!(!is_c6(&params(-1, -1, 1)));
}

#[test]
fn classify_cyclic_family() {
    let triples = [(-7, 14, -7), (-6, 9, -3), (5, 6, 1), (6, 5, 1), (6, 9, 1), (9, 6, 1), (21, 35, 7)];
    for (a, b, c) in triples {
        assert_eq!(classify_i(a, b, c), Ok(proved(GaloisGroup::C6)), "({a},{b},{c})");
        // cyclic sextics have non-square discriminant, and −c is never square
        let f = even_sextic(&bi(a), &bi(b), &bi(c));
        assert!(zint::is_perfect_square(&zpoly::discriminant(&f).unwrap()).is_none());
        assert!(zint::is_perfect_square(&bi(-c)).is_none());
    }
}

#[test]
fn classify_dihedral_and_symmetric() {
    assert_eq!(classify_i(0, 0, -2), Ok(proved(GaloisGroup::D6)));
    assert_eq!(classify_i(0, 0, -3), Ok(proved(GaloisGroup::D6)));
    // −c·dg = 3·(−243)·(−1) = 27², so the quadratic and resolvent fields agree
    assert_eq!(classify_i(0, 0, 3), Ok(proved(GaloisGroup::S3)));
}

#[test]
fn classify_tetrahedral_branch() {
    // cores X³+X²−2X−1 and X³−3X+1 are cyclic cubics (dg = 49, 81); the
    // sextic discriminant −64c·dg² is square exactly for the first
    assert_eq!(classify_i(1, -2, -1), Ok(proved(GaloisGroup::A4)));
    assert_eq!(classify_i(0, -3, 1), Ok(proved(GaloisGroup::A4xC2)));
}

#[test]
fn classify_octahedral_branch() {
    // dg = −2704 and −c·dg = 52² certify the 6T8 action
    assert_eq!(classify_i(9, 1, 1), Ok(proved(GaloisGroup::S4T8)));
    // c = −1 puts the product of the three root pairs in the rationals, so
    // the group misses the 6-cycles and sampling settles on 6T7
    let label = classify_i(0, -1, -1).unwrap();
    assert_eq!(label.group, GaloisGroup::S4T7);
    assert_eq!(label.certainty, Certainty::Sampled);
    // nothing collapses for X⁶ + X² + 4: full wreath product
    let label = classify_i(0, 1, 4).unwrap();
    assert_eq!(label.group, GaloisGroup::S4xC2);
    assert_eq!(label.certainty, Certainty::Sampled);
}

#[test]
fn classify_rejects_reducible_inputs() {
    assert_eq!(classify_i(0, 0, 1), Err(GaloisError::ReducibleInput));
    assert_eq!(classify_i(0, 0, -1), Err(GaloisError::ReducibleInput));
    assert_eq!(classify_i(-3, 3, -1), Err(GaloisError::ReducibleInput));
}

#[test]
fn frobenius_patterns_match_known_fields() {
    // split and inert primes of the Gaussian field both appear early
    let f = IntPoly::from_i64(&[1, 0, 1]);
    let pats = frobenius_samples(&f, 10);
    assert!(pats.iter().any(|t| t.as_slice() == [1, 1]));
    assert!(pats.iter().any(|t| t.as_slice() == [2]));

    // a cyclic sextic only shows C6 cycle types
    let f = even_sextic(&bi(21), &bi(35), &bi(7));
    let allowed = GaloisGroup::C6.cycle_types();
    for t in frobenius_samples(&f, 50) {
        assert!(allowed.contains(&t.as_slice()), "{t:?}");
    }

    // D6 has order-6 elements, so X⁶ − 2 shows a 6-cycle
    let f = even_sextic(&bi(0), &bi(0), &bi(-2));
    assert!(frobenius_samples(&f, 100).iter().any(|t| t.as_slice() == [6]));
}

// Signed permutations of three root pairs: the ambient group for every even
// sextic.  Point 2i+s is the s-th square root of the cubic's i-th root.
type Perm = [u8; 6];

fn compose(a: &Perm, b: &Perm) -> Perm {
    let mut r = [0u8; 6];
    for i in 0..6 {
        r[i] = a[b[i] as usize];
    }
    r
}

fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut seen = [false; 6];
    let mut t = Vec::new();
    for start in 0..6 {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        t.push(len);
    }
    t.sort_unstable();
    t
}

fn signed_permutations() -> Vec<Perm> {
    let sigmas: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for sigma in sigmas {
        for eps in 0u8..8 {
            let mut p = [0u8; 6];
            for (i, &j) in sigma.iter().enumerate() {
                let flip = (eps >> j) & 1;
                for s in 0..2u8 {
                    p[2 * i + s as usize] = 2 * j as u8 + (s ^ flip);
                }
            }
            out.push(p);
        }
    }
    out.sort_unstable();
    out.dedup();
    assert_eq!(out.len(), 48);
    out
}

fn closure(gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = [0, 1, 2, 3, 4, 5];
    let mut set: BTreeSet<Perm> = [id].into_iter().collect();
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

fn is_transitive(h: &[Perm]) -> bool {
    let mut orbit = [false; 6];
    orbit[0] = true;
    loop {
        let mut grew = false;
        for g in h {
            for x in 0..6 {
                if orbit[x] && !orbit[g[x] as usize] {
                    orbit[g[x] as usize] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return orbit.iter().all(|&b| b);
        }
    }
}

#[test]
fn cycle_type_table_matches_signed_permutation_subgroups() {
    let elems = signed_permutations();
    // walk the whole subgroup lattice by adding one generator at a time
    let trivial = closure(&[]);
    let mut subgroups: BTreeSet<Vec<Perm>> = [trivial.clone()].into_iter().collect();
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in &elems {
            if h.binary_search(g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(*g);
            let k = closure(&gens);
            if subgroups.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut signatures: BTreeSet<(usize, BTreeSet<Vec<usize>>)> = BTreeSet::new();
    for h in &subgroups {
        if is_transitive(h) {
            signatures.insert((h.len(), h.iter().map(cycle_type).collect()));
        }
    }
    // exactly the eight groups in the table, keyed by order and cycle types
    assert_eq!(signatures.len(), 8);
    for group in GaloisGroup::ALL {
        let types: BTreeSet<Vec<usize>> =
            group.cycle_types().iter().map(|t| t.to_vec()).collect();
        assert!(signatures.contains(&(group.order(), types)), "{group} signature missing");
    }
}

#[test]
fn small_box_census_and_sampling_consistency() {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for a in -4..=4i64 {
        for b in -4..=4i64 {
            for c in -4..=4i64 {
                let label = match classify_i(a, b, c) {
                    Ok(l) => l,
                    Err(GaloisError::ReducibleInput) => continue,
                    Err(e) => panic!("({a},{b},{c}): {e}"),
                };
                *counts.entry(label.group.to_string()).or_insert(0) += 1;
                // every Frobenius pattern must be a cycle type of the label
                let f = even_sextic(&bi(a), &bi(b), &bi(c));
                let allowed = label.group.cycle_types();
                for pattern in frobenius_samples(&f, 25) {
                    assert!(
                        allowed.contains(&pattern.as_slice()),
                        "({a},{b},{c}) labeled {} saw {pattern:?}",
                        label.group
                    );
                }
            }
        }
    }
    // census of the 9³ box; the smallest cyclic sextics lie outside it
    let census: Vec<(&str, usize)> =
        counts.iter().map(|(g, n)| (g.as_str(), *n)).collect();
    assert_eq!(
        census,
        [
            ("6T7", 105),
            ("6T8", 5),
            ("A4", 8),
            ("A4xC2", 10),
            ("D6", 44),
            ("S3", 3),
            ("S4xC2", 322),
        ]
    );
}

proptest! {
    #[test]
    fn planted_witnesses_are_recovered(
        m in -25i64..=25,
        n in -25i64..=25,
        pick in 0usize..4096,
        neg in any::<bool>(),
    ) {
        // choosing c among the divisors of n² makes (m, n, c) a valid witness
        let pool = if n == 0 { 720 } else { n * n };
        let divisors: Vec<i64> = (1..=pool).filter(|d| pool % d == 0).collect();
        let mut c = divisors[pick % divisors.len()];
        if neg {
            c = -c;
        }
        let a = bi(n * n / c - 2 * m);
        let b = bi(m * m - 2 * n);
        let witnesses = d6_shape(&a, &b, &bi(c));
        prop_assert!(witnesses.contains(&params(m, n, c)));
        let dg = zpoly::discriminant(&core_cubic(&a, &b, &bi(c))).unwrap();
        for w in &witnesses {
            // soundness: every witness reconstructs the input coefficients
            let (q, r) = (&w.n * &w.n).div_rem(&w.c);
            prop_assert!(r.is_zero());
            prop_assert_eq!(q - BigInt::from(2) * &w.m, a.clone());
            prop_assert_eq!(&w.m * &w.m - BigInt::from(2) * &w.n, b.clone());
            // dg = d(m,n,c)·r² for a rational r, where r = 0 only when the
            // cubic degenerates; for separable cubics d·dg is a positive square
            let d = d_value(w);
            if d.is_zero() {
                prop_assert!(dg.is_zero());
            } else if !dg.is_zero() {
                prop_assert!(zint::is_perfect_square(&(&d * &dg)).is_some());
            }
        }
    }

    #[test]
    fn scaled_witnesses_factor_out_c_squared(
        j in -30i64..=30,
        k in -30i64..=30,
        c in -30i64..=30,
    ) {
        prop_assume!(c != 0);
        let w = params(j * c, k * c, c);
        let (j, k, c) = (j as i128, k as i128, c as i128);
        let dtilde = 4 * j * j * j * c * c - j * j * k * k * c * c - 18 * j * k * c
            + 4 * k * k * k * c
            + 27;
        prop_assert_eq!(d_value(&w), -(BigInt::from(c * c) * BigInt::from(dtilde)));
    }
}
