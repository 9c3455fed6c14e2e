use b3lift_core::cyclo::*;
use b3lift_core::AlgebraError;
use proptest::prelude::*;

fn zeta(m: u32, k: i64) -> CycScalar {
    CycScalar::root_power(field(m), k)
}

fn int(m: u32, k: i64) -> CycScalar {
    CycScalar::from_int(field(m), k)
}

/// Schoolbook product modulo Φ_m over ℤ, independent of the engine's reduction.
fn poly_mul_mod(a: &[i128], b: &[i128], phi: &[i128]) -> Vec<i128> {
    let mut prod = vec![0i128; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    let deg = phi.len() - 1;
    for top in (deg..prod.len()).rev() {
        let c = prod[top];
        if c != 0 {
            for (k, p) in phi.iter().enumerate() {
                prod[top - deg + k] -= c * p;
            }
        }
    }
    prod.truncate(deg);
    prod
}

fn int_coeffs(s: &CycScalar) -> Vec<i128> {
    let mut v: Vec<i128> = s
        .coeffs()
        .iter()
        .map(|r| {
            assert!(r.is_integer());
            r.to_string_plain().parse().unwrap()
        })
        .collect();
    v.resize(field(5).degree(), 0);
    v
}

#[test]
fn roots_of_unity_multiply_out() {
    assert!(zeta(3, 1).mul(&zeta(3, 2)).is_one());
    let a = int(7, 1).add(&zeta(7, 1));
    assert!(a.inv().unwrap().mul(&a).is_one());
    assert_eq!(CycScalar::zero(field(7)).inv(), Err(AlgebraError::DivisionByZero));
}

#[test]
fn one_plus_zeta5_to_the_fifth_matches_naive_reduction() {
    let x = int(5, 1).add(&zeta(5, 1));
    let mut engine = CycScalar::one(field(5));
    for _ in 0..5 {
        engine = engine.mul(&x);
    }
    let phi: Vec<i128> = cyclotomic_polynomial(5).iter().map(|&c| c as i128).collect();
    let mut naive = vec![1i128];
    for _ in 0..5 {
        naive = poly_mul_mod(&naive, &[1, 1], &phi);
    }
    naive.resize(4, 0);
    assert_eq!(int_coeffs(&engine), naive);
    // frozen
    assert_eq!(naive, vec![-3, 0, 5, 5]);
    assert_eq!(x.pow(5).unwrap(), engine);
}

#[test]
fn q_numbers() {
    let q = zeta(3, 1);
    assert!(q_number(0, &q).is_one());
    assert_eq!(q_number(2, &q), int(3, 1).add(&q));
    for n in [3u32, 5, 7] {
        assert!(q_number(n, &zeta(n, 1)).is_zero(), "N = {n}");
    }
}

#[test]
fn q_binomials_at_roots_of_unity() {
    let q7 = zeta(7, 1);
    assert!(q_binomial(9, 0, &q7).is_one());
    assert!(q_binomial(7, 3, &q7).is_zero());
    assert!(gaussian_binomial_poly(7, 3).eval(&q7).is_zero());
    for n in [3u32, 5, 7] {
        let q = zeta(n, 1);
        for j in 1..n {
            assert!(q_binomial(n, j, &q).is_zero(), "binom({n},{j}) at ζ_{n}");
        }
        assert!(q_binomial(n, 0, &q).is_one());
        assert!(q_binomial(n, n, &q).is_one());
    }
}

#[test]
fn gaussian_binomial_4_2() {
    // (1+q²)(1+q+q²)
    let expected = ZPoly(vec![1, 0, 1]).mul(&ZPoly(vec![1, 1, 1]));
    assert_eq!(gaussian_binomial_poly(4, 2), expected);
    assert_eq!(expected, ZPoly(vec![1, 1, 2, 1, 1]));
}

#[test]
fn pascal_matches_quotient_over_zq() {
    for n in 0..=12u32 {
        for k in 0..=n {
            assert_eq!(pascal_binomial_poly(n, k), gaussian_binomial_poly(n, k), "({n},{k})");
        }
    }
}

#[test]
fn multinomial_rejects_bad_parts() {
    let q = zeta(5, 1);
    assert!(matches!(q_multinomial(4, &[1, 2], &q), Err(AlgebraError::PartsMismatch { expected: 4, got: 3 })));
}

#[test]
fn xi_values() {
    let q7 = zeta(7, 1);
    assert_eq!(xi(1, &q7), int(7, 1).sub(&zeta(7, -1)));
    for n in [3u32, 5, 7] {
        assert!(xi(n as i64, &zeta(n, 1)).is_zero());
    }
    assert_eq!(xi(2, &zeta(3, 1)), int(3, 1).sub(&zeta(3, 1)));
}

#[test]
fn beta_scalars_identities() {
    for n in [3u32, 5, 7] {
        let q = zeta(n, 1);
        let (b1, b2, b) = beta_scalars(&q).unwrap();
        assert!(b1.add(&b2).is_one());
        assert_eq!(b, b1.mul(&b2).mul(&xi(2, &q)));
        let lhs = b1.pow(n as i64).unwrap().add(&b2.pow(n as i64).unwrap());
        let one_plus = int(n, 1).add(&q);
        assert_eq!(lhs, int(n, 2).mul(&one_plus.pow(-(n as i64)).unwrap()));
        assert_ne!(lhs, int(n, 2).mul(&one_plus.pow(-2).unwrap()));
    }
    let q = zeta(3, 1);
    let one_plus = int(3, 1).add(&q);
    let expected = q.mul(&one_plus.pow(-2).unwrap()).mul(&int(3, 1).sub(&zeta(3, -2)));
    assert_eq!(beta_scalars(&q).unwrap().2, expected);
}

#[test]
fn mu_polynomials_specialize() {
    let f = field(7);
    let m1 = MuScalar::var(f, 8);
    let m2 = MuScalar::var(f, 3);
    let p = m1.mul(&m2).add(&MuScalar::constant(zeta(7, 2)));
    let mut vals: [Option<CycScalar>; 9] = Default::default();
    vals[8] = Some(int(7, 3));
    vals[3] = Some(zeta(7, 1));
    let s = p.specialize(&vals).as_constant().unwrap();
    assert_eq!(s, int(7, 3).mul(&zeta(7, 1)).add(&zeta(7, 2)));
    assert!(p.sub(&p).is_zero());
}

fn scalar(m: u32) -> impl Strategy<Value = CycScalar> {
    let deg = field(m).degree();
    prop::collection::vec((-20i64..20, 1i64..6), deg).prop_map(move |cs| {
        let rats: Vec<Rat> = cs.into_iter().map(|(n, d)| Rat::new(n, d)).collect();
        CycScalar::from_coeffs(field(m), &rats)
    })
}

proptest! {
    #[test]
    fn add_then_sub_is_identity(a in scalar(7), b in scalar(7)) {
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn inverse_is_two_sided(a in scalar(9)) {
        prop_assume!(!a.is_zero());
        let i = a.inv().unwrap();
        prop_assert!(i.mul(&a).is_one());
        prop_assert!(a.mul(&i).is_one());
    }

    #[test]
    fn multiplication_distributes(a in scalar(5), b in scalar(5), c in scalar(5)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn factorial_identity_over_zq(n in 0u32..12, k in 0u32..12) {
        prop_assume!(k <= n);
        let lhs = gaussian_binomial_poly(n, k).mul(&q_factorial_poly(k)).mul(&q_factorial_poly(n - k));
        prop_assert_eq!(lhs, q_factorial_poly(n));
    }

    #[test]
    fn multinomial_is_a_binomial_product(a in 0u32..5, b in 0u32..5, c in 0u32..5) {
        let n = a + b + c;
        let prod = pascal_binomial_poly(n, a).mul(&pascal_binomial_poly(b + c, b));
        prop_assert_eq!(q_multinomial_poly(n, &[a, b, c]).unwrap(), prod);
    }

    #[test]
    fn multinomial_evaluation_commutes(a in 0u32..5, b in 0u32..5, k in 0i64..7) {
        let q = zeta(7, k);
        let n = a + b;
        prop_assert_eq!(q_multinomial(n, &[a, b], &q).unwrap(), q_multinomial_poly(n, &[a, b]).unwrap().eval(&q));
    }
}
