use kummer::arith::factorize;
use kummer::cyclotomic::{
    is_primary, primes_above, residue_symbol, residue_symbol_of_integer, CyclotomicInt,
};
use kummer::density::TargetAssignment;
use kummer::radical::{
    brute_force_kernel, consistency_check, degree, exponent_matrix, rank_and_kernel,
    reduce_basis, translate_targets, DegreeMethod, InputSet,
};
use kummer::Error;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;

fn odd_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(3u64), Just(5), Just(7)]
}

fn radicands() -> impl Strategy<Value = Vec<i128>> {
    prop::collection::vec(
        prop_oneof![
            (1i128..=10_000),
            (-10_000i128..=-1),
            (1i128..=30).prop_map(|x| x * x * x),
            (1i128..=200).prop_map(|x| x * 3),
            (1i128..=200).prop_map(|x| x * 5),
        ],
        0..=4,
    )
}

fn is_exact_power(v: &BigInt, l: u32) -> bool {
    let r = v.nth_root(l);
    Pow::pow(&r, l) == *v
}

fn raw_product(raw: &[i128], exps: &[u64]) -> BigInt {
    raw.iter()
        .zip(exps)
        .fold(BigInt::one(), |acc, (&a, &e)| acc * Pow::pow(BigInt::from(a), e as u32))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_degree_routes_agree(l in odd_prime(), raw in radicands()) {
        let set = InputSet::new(l, raw).unwrap();
        let red = reduce_basis(&set);
        let kernel = rank_and_kernel(&exponent_matrix(&set));
        let size = brute_force_kernel(&set).unwrap();
        let m = set.m() as u32;
        prop_assert_eq!(red.t, kernel.rank);
        prop_assert_eq!(BigUint::from(l).pow(m), red.degree() * BigUint::from(size));
        prop_assert_eq!(degree(&set, DegreeMethod::Reduction).unwrap(), red.degree());
    }

    #[test]
    fn kernel_vectors_give_lth_powers(l in odd_prime(), raw in radicands()) {
        let set = InputSet::new(l, raw).unwrap();
        let kernel = rank_and_kernel(&exponent_matrix(&set));
        let cores: Vec<i128> = set.normalized_cores().map(|c| c as i128).collect();
        for v in &kernel.basis {
            prop_assert!(v.iter().any(|&c| c != 0));
            prop_assert!(is_exact_power(&raw_product(&cores, v), l as u32));
        }
    }

    #[test]
    fn reduced_radicands_have_exclusive_primes(l in odd_prime(), raw in radicands()) {
        let set = InputSet::new(l, raw).unwrap();
        let red = reduce_basis(&set);
        for (j, q) in red.exclusive_primes.iter().enumerate() {
            for (k, b) in red.b.iter().enumerate() {
                let b = i128::try_from(b.clone()).unwrap();
                let v = factorize(b).unwrap().exponent_of(*q);
                if j == k {
                    prop_assert!(!v.is_multiple_of(l as u32));
                } else {
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn transform_rows_reproduce_reduced_radicands(l in odd_prime(), raw in radicands()) {
        let set = InputSet::new(l, raw.clone()).unwrap();
        let red = reduce_basis(&set);
        for (row, b) in red.transform.iter().zip(&red.b) {
            let prod = raw_product(&raw, row);
            let b = BigInt::from(b.clone());
            // prod / b is an l-th power of a rational: prod * b^(l-1) is an integer l-th power.
            let scaled = prod * Pow::pow(&b, (l - 1) as u32);
            prop_assert!(is_exact_power(&scaled, l as u32));
        }
        for rel in &red.relations {
            prop_assert!(rel.iter().any(|&c| c != 0));
            prop_assert!(is_exact_power(&raw_product(&raw, rel), l as u32));
        }
    }

    #[test]
    fn consistency_routes_agree(
        l in odd_prime(),
        raw in radicands(),
        seed in prop::collection::vec(0i64..7, 4),
    ) {
        let set = InputSet::new(l, raw.clone()).unwrap();
        let targets = TargetAssignment::new(l, seed.into_iter().take(raw.len()));
        let red = reduce_basis(&set);
        let direct = consistency_check(&set, &targets).unwrap();
        match translate_targets(&red, &targets) {
            Ok(_) => prop_assert!(direct),
            Err(Error::InconsistentAssignment) => prop_assert!(!direct),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}

fn small_cyclo(l: u64) -> impl Strategy<Value = CyclotomicInt> {
    prop::collection::vec(-20i64..=20, (l - 1) as usize).prop_map(move |c| CyclotomicInt::new(l, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbol_is_multiplicative(
        (l, a, b) in prop_oneof![Just(3u64), Just(5)].prop_flat_map(|l| (Just(l), small_cyclo(l), small_cyclo(l))),
        pidx in 0usize..6,
    ) {
        let p = [7u64, 13, 11, 31, 2, 19][pidx];
        let Ok(ideals) = primes_above(p, l) else { return Ok(()) };
        for ideal in &ideals {
            let (Ok(x), Ok(y), Ok(z)) = (
                residue_symbol(&a, ideal),
                residue_symbol(&b, ideal),
                residue_symbol(&(&a * &b), ideal),
            ) else {
                continue;
            };
            prop_assert_eq!((x.value() + y.value()) % l, z.value());
        }
    }

    #[test]
    fn conjugation_permutes_split_ideals(
        (l, a) in prop_oneof![Just(3u64), Just(5)].prop_flat_map(|l| (Just(l), small_cyclo(l))),
        k in 1u64..5,
    ) {
        prop_assume!(k % l != 0);
        let p = if l == 3 { 13 } else { 11 };
        let ideals = primes_above(p, l).unwrap();
        for ideal in &ideals {
            // ideal is (p, z - r); the conjugate ideal under z -> z^k is (p, z - r^k)
            let r = (p - ideal.g()[0]) % p;
            let rk = kummer::arith::pow_mod(r, k as u128, p);
            let target = ideals.iter().find(|i| (p - i.g()[0]) % p == rk).unwrap();
            let lhs = residue_symbol(&a.conjugate(k), ideal);
            let rhs = residue_symbol(&a, target);
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => prop_assert_eq!(x.value(), (k * y.value()) % l),
                (Err(_), Err(_)) => {}
                _ => return Err(TestCaseError::fail("definedness differs")),
            }
        }
    }

    #[test]
    fn symbol_detects_lth_powers_mod_split_primes(a in 1i64..10_000, pidx in 0usize..4) {
        let (l, p) = [(3u64, 7u64), (3, 31), (5, 11), (5, 41)][pidx];
        prop_assume!(!(a as u64).is_multiple_of(p));
        let is_power = (1..p).any(|x| kummer::arith::pow_mod(x, l as u128, p) == a as u64 % p);
        for ideal in primes_above(p, l).unwrap() {
            let e = residue_symbol_of_integer(&BigInt::from(a), &ideal).unwrap();
            prop_assert_eq!(e.is_trivial(), is_power);
        }
    }

    #[test]
    fn primary_matches_membership_oracle(
        (l, a) in prop_oneof![Just(3u64), Just(5), Just(7)].prop_flat_map(|l| (Just(l), small_cyclo(l))),
    ) {
        // a is primary iff a - c lies in (1 - z)^2 for some rational c, and
        // x lies in (1 - z)^2 iff x (1 - z)^(l - 3) lies in (l).
        let pi = CyclotomicInt::one(l) - CyclotomicInt::zeta(l);
        let mut pow = CyclotomicInt::one(l);
        for _ in 0..l - 3 {
            pow = &pow * &pi;
        }
        let oracle = (0..l as i64).any(|c| {
            let x = &(&a - &CyclotomicInt::from_integer(l, c)) * &pow;
            x.coeffs().iter().all(|v| (v % BigInt::from(l)).is_zero())
        });
        prop_assert_eq!(is_primary(&a), oracle);
    }
}
