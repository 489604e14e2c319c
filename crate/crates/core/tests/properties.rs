use std::collections::BTreeSet;

use proptest::prelude::*;

use addtable::cyclotomic::{cyclotomic, divisors, factorize_unity};
use addtable::geometry::{decompose, enumerate_schemes, flat_patterns, RadixScheme, Side};
use addtable::oracle::{enumerate_bruteforce, verify};
use addtable::splitter::{enumerate_cyclotomic, enumerate_cyclotomic_unpruned};
use addtable::{Poly, Splitting};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..=65).prop_map(Poly::new)
}

/// Small enough that values at |t| <= 3 and their products fit in i64.
fn short_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..=17).prop_map(Poly::new)
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Prime `q` if `n` is a power of `q`, by plain trial division.
fn prime_power(n: usize) -> Option<usize> {
    let q = (2..=n).find(|k| n % k == 0)?;
    let mut m = n;
    while m % q == 0 {
        m /= q;
    }
    (m == 1).then_some(q)
}

fn scheme() -> impl Strategy<Value = RadixScheme> {
    prop::collection::vec((2usize..=4, any::<bool>()), 1..=5).prop_map(|v| {
        let pairs: Vec<_> = v
            .into_iter()
            .map(|(r, a)| (r, if a { Side::A } else { Side::B }))
            .collect();
        RadixScheme::from_pairs(&pairs).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(
            ab.checked_mul(&c).unwrap(),
            a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
            ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.checked_mul(&Poly::one()).unwrap(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in short_poly(), b in short_poly(), t in -3i64..=3) {
        let (ea, eb) = (a.eval(t).unwrap(), b.eval(t).unwrap());
        prop_assert_eq!(a.checked_mul(&b).unwrap().eval(t).unwrap(), ea * eb);
        prop_assert_eq!(a.checked_add(&b).unwrap().eval(t).unwrap(), ea + eb);
    }

    #[test]
    fn support_round_trip(set in prop::collection::btree_set(0usize..200, 0..30)) {
        let support: Vec<usize> = set.into_iter().collect();
        prop_assert_eq!(Poly::from_support(&support).support_if_zero_one(), Some(support));
    }

    #[test]
    fn merging_keeps_the_realization(s in scheme()) {
        let merged = s.merged();
        prop_assert!(merged.is_alternating());
        prop_assert_eq!(merged.realize(), s.realize());
        prop_assert!(verify(&s.realize()).valid);
    }

    #[test]
    fn schemes_decompose_back(s in scheme()) {
        let realized = s.realize();
        let recovered = decompose(&realized).expect("scheme");
        prop_assert_eq!(recovered.realize(), realized);
        prop_assert_eq!(recovered, s.merged());
    }
}

#[test]
fn unity_factors_multiply_back() {
    for m in 1..=256 {
        let f = factorize_unity(m).unwrap();
        assert_eq!(f.indices(), divisors(m));
        assert_eq!(f.product().unwrap(), Poly::x_pow_minus_one(m), "m = {m}");
    }
}

#[test]
fn value_at_one_is_the_prime_or_one() {
    assert_eq!(cyclotomic(1).unwrap().eval(1).unwrap(), 0);
    for d in 2..=256 {
        let expected = prime_power(d).map_or(1, |q| q as i64);
        assert_eq!(cyclotomic(d).unwrap().eval(1).unwrap(), expected, "d = {d}");
    }
}

#[test]
fn small_degrees_are_totients() {
    let degrees: Vec<_> = (1..=10).map(|d| cyclotomic(d).unwrap().degree().unwrap()).collect();
    assert_eq!(degrees, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
    for d in 1..=256 {
        assert!(cyclotomic(d).unwrap().is_monic());
    }
}

#[test]
fn oracle_is_symmetric_under_transpose() {
    for r in 1..=12 {
        for c in 1..=144 / r {
            let forward = enumerate_bruteforce(r, c).unwrap();
            let back: BTreeSet<_> = enumerate_bruteforce(c, r).unwrap().into_iter().collect();
            let mirrored: BTreeSet<_> = forward
                .iter()
                .map(|s| s.transposed().canonical())
                .collect();
            assert_eq!(mirrored, back, "{r}x{c}");
        }
    }
}

#[test]
fn prime_sides_have_one_solution() {
    for p in [2usize, 3, 5, 7, 11] {
        let sols = enumerate_bruteforce(p, p).unwrap();
        assert_eq!(
            sols,
            vec![Splitting::new((0..p).map(|i| i * p).collect(), (0..p).collect())]
        );
    }
}

#[test]
fn flat_patterns_are_full_schemes() {
    for n in 2..=12 {
        let flat: BTreeSet<_> = flat_patterns(n).unwrap().into_iter().collect();
        let full: BTreeSet<_> = enumerate_schemes(n, n).unwrap().into_iter().collect();
        assert!(flat.is_subset(&full), "n = {n}");
    }
}

#[test]
fn pruning_loses_nothing() {
    for r in 1..=8 {
        for c in 1..=64 / r {
            assert_eq!(
                enumerate_cyclotomic(r, c).unwrap(),
                enumerate_cyclotomic_unpruned(r, c).unwrap(),
                "{r}x{c}"
            );
        }
    }
}

#[test]
fn realized_schemes_verify() {
    use addtable::geometry::alternating_schemes;
    for m in 2..=144 {
        for r in divisors(m) {
            for s in alternating_schemes(r, m / r, usize::MAX) {
                assert!(verify(&s.realize()).valid, "{s}");
            }
        }
    }
}

#[test]
fn eight_by_eight_golden() {
    let sols = enumerate_bruteforce(8, 8).unwrap();
    assert_eq!(sols.len(), 10);
    let flat: BTreeSet<_> = flat_patterns(8).unwrap().into_iter().collect();
    let nested: BTreeSet<_> = sols.into_iter().filter(|s| !flat.contains(s)).collect();
    let expected: BTreeSet<_> = [
        (vec![0, 2, 4, 6, 16, 18, 20, 22], vec![0, 1, 8, 9, 32, 33, 40, 41]),
        (vec![0, 2, 8, 10, 16, 18, 24, 26], vec![0, 1, 4, 5, 32, 33, 36, 37]),
        (vec![0, 2, 8, 10, 32, 34, 40, 42], vec![0, 1, 4, 5, 16, 17, 20, 21]),
    ]
    .into_iter()
    .map(|(a, b)| Splitting::new(a, b))
    .collect();
    assert_eq!(nested, expected);
}

#[test]
fn two_by_three_golden() {
    let sols = enumerate_bruteforce(2, 3).unwrap();
    let expected = vec![
        Splitting::new(vec![0, 1], vec![0, 2, 4]),
        Splitting::new(vec![0, 3], vec![0, 1, 2]),
    ];
    assert_eq!(sols, expected);
    assert_eq!(enumerate_cyclotomic(2, 3).unwrap(), expected);
}
