use num_complex::Complex64;
use proptest::prelude::*;
use xiphase::characters::{character_group, primitive_characters, totient, DirichletCharacter};

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of primitive characters mod q: `Σ_{d|q} μ(q/d) φ(d)`.
fn primitive_count(q: u64) -> i64 {
    (1..=q)
        .filter(|d| q % d == 0)
        .map(|d| mobius(q / d) * totient(d) as i64)
        .sum()
}

#[test]
fn group_sizes_and_primitive_counts() {
    for q in 1..=60 {
        let group = character_group(q);
        assert_eq!(group.len() as u64, totient(q), "q={q}");
        let primitive = group.iter().filter(|c| c.is_primitive()).count() as i64;
        assert_eq!(primitive, primitive_count(q), "q={q}");
        assert!(group.iter().all(|c| q % c.conductor() == 0));
    }
    let small: usize = (3..=12).map(|q| primitive_characters(q).len()).sum();
    assert_eq!(small, 26);
}

#[test]
fn orthogonality() {
    for q in [5, 8, 9, 12, 15, 16, 21] {
        let group = character_group(q);
        let phi = totient(q) as f64;
        for a in &group {
            for b in &group {
                let s: Complex64 = (0..q as i64).map(|n| a.value(n) * b.value(n).conj()).sum();
                let want = if a.index() == b.index() { phi } else { 0.0 };
                assert!((s - want).norm() < 1e-9, "q={q} {} {}", a.index(), b.index());
            }
        }
    }
}

#[test]
fn principal_is_first_and_unique() {
    for q in 1..=30 {
        let group = character_group(q);
        assert!(group[0].is_principal());
        assert_eq!(group.iter().filter(|c| c.is_principal()).count(), 1);
    }
}

#[test]
fn conjugate_is_in_the_group() {
    for q in [7, 13, 20] {
        let group = character_group(q);
        for chi in &group {
            let conj = chi.conjugate();
            let found = group.iter().find(|c| c.index() == conj.index()).unwrap();
            for n in 0..q as i64 {
                assert!((found.value(n) - chi.value(n).conj()).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn imprimitive_induced_by_its_primitive() {
    for q in [9, 12, 16, 18] {
        for chi in character_group(q) {
            let prim = chi.inducing_primitive();
            assert_eq!(prim.modulus(), chi.conductor());
            assert!(prim.is_primitive());
            for n in 1..q as i64 {
                if gcd(n as u64, q) == 1 {
                    assert!((prim.value(n) - chi.value(n)).norm() < 1e-12);
                }
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn rejects_missing_index() {
    assert!(DirichletCharacter::new(5, 4).is_err());
    assert!(DirichletCharacter::new(5, 3).is_ok());
}

proptest! {
    #[test]
    fn completely_multiplicative(q in 2u64..40, k in 0usize..64, m in 0i64..200, n in 0i64..200) {
        let group = character_group(q);
        let chi = &group[k % group.len()];
        let lhs = chi.value(m * n);
        let rhs = chi.value(m) * chi.value(n);
        prop_assert!((lhs - rhs).norm() < 1e-12);
        prop_assert!((chi.value(m) - chi.value(m + q as i64)).norm() < 1e-12);
    }

    #[test]
    fn gauss_sum_modulus_for_primitive(q in 3u64..60, k in 0usize..64) {
        let prim = primitive_characters(q);
        prop_assume!(!prim.is_empty());
        let chi = &prim[k % prim.len()];
        let tau = chi.gauss_sum().value;
        prop_assert!((tau.norm_sqr() - q as f64).abs() < 1e-10 * q as f64);
    }
}
