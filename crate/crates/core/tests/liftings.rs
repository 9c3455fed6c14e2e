use b3lift_core::cyclo::{Coeff, CycScalar, MuScalar};
use b3lift_core::datum::{canonical_datum, skewed_datum, validate_datum, Datum, Root, Root::*, CANONICAL_EXPONENTS};
use b3lift_core::liftings::*;
use b3lift_core::pbwalg::{check_local_confluence, AlgElement, Monomial, Normalizer, RewriteSystem, SystemKind, EMPTY};
use b3lift_core::AlgebraError;
use proptest::prelude::*;

fn gen(d: &Datum, r: Root) -> AlgElement<CycScalar> {
    AlgElement::generator(d.field(), r)
}

fn word(pairs: &[(Root, u8)]) -> Monomial {
    let mut e = EMPTY;
    for &(r, k) in pairs {
        e[r.index()] += k;
    }
    Monomial::word(e)
}

fn c(x: &CycScalar) -> MuScalar {
    MuScalar::constant(x.clone())
}

/// `coef · (g_r^N − 1)`
fn gterm(d: &Datum, r: Root, coef: MuScalar) -> AlgElement<MuScalar> {
    let mut e = AlgElement::zero(d.field());
    e.add_term(Monomial::group(d.root_gn(r)), coef.clone());
    e.add_term(Monomial::ONE, coef.neg());
    e
}

#[test]
fn braided_commutators_of_generators() {
    let d = canonical_datum(5).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    let f = d.field();
    assert_eq!(
        braided_commutator(&mut nz, &gen(&d, Y2), &gen(&d, Y1)).unwrap(),
        AlgElement::monomial(f, word(&[(Y21, 1)]))
    );
    assert_eq!(
        braided_commutator(&mut nz, &gen(&d, Y32), &gen(&d, Y1)).unwrap(),
        AlgElement::monomial(f, word(&[(Y31, 1)]))
    );
    let one_minus_q = CycScalar::one(f).sub(&d.q33());
    assert_eq!(
        braided_commutator(&mut nz, &gen(&d, Y3), &gen(&d, Y3)).unwrap(),
        AlgElement::term(f, word(&[(Y3, 2)]), one_minus_q)
    );
    // every root vector is the braided commutator of its definition
    for r in Root::ALL {
        if let Some(def) = root_vector_def(r) {
            let got = braided_commutator(&mut nz, &gen(&d, def.left), &gen(&d, def.right)).unwrap();
            assert_eq!(got, gen(&d, r), "{r}");
        }
    }
}

#[test]
fn braided_commutator_rejects_inhomogeneous_input() {
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    let mixed = gen(&d, Y1).add(&gen(&d, Y21));
    assert_eq!(braided_commutator(&mut nz, &mixed, &gen(&d, Y2)), Err(AlgebraError::Inhomogeneous));
}

#[test]
fn closed_forms_of_low_roots() {
    let d = canonical_datum(7).unwrap();
    let mu = MuFamily::symbolic(&d);
    let f = d.field();
    let m = |r: Root| MuScalar::var(f, r.index());
    let n = d.n() as i64;
    let x1 = c(&d.xi(1).pow(n).unwrap());
    let x2 = c(&d.xi(2).pow(n).unwrap());
    let two = c(&CycScalar::from_int(f, 2));

    assert_eq!(u_alpha(Y1, &mu, &d).unwrap(), gterm(&d, Y1, m(Y1)));
    let want21 = gterm(&d, Y21, m(Y21)).sub(&gterm(&d, Y1, x2.mul(&m(Y2)).mul(&m(Y1))));
    assert_eq!(u_alpha(Y21, &mu, &d).unwrap(), want21);
    let want = gterm(&d, Yt32, m(Yt32))
        .sub(&gterm(&d, Y32, two.mul(&x1).mul(&m(Y3)).mul(&m(Y32))))
        .add(&gterm(&d, Y2, x1.mul(&x2).mul(&m(Y3)).mul(&m(Y3)).mul(&m(Y2))));
    assert_eq!(u_alpha(Yt32, &mu, &d).unwrap(), want);
}

#[test]
fn lambda_scalars_match_their_definitions() {
    let d = canonical_datum(5).unwrap();
    let mu = MuFamily::symbolic(&d);
    let f = d.field();
    let m = |r: Root| MuScalar::var(f, r.index());
    let x2 = c(&d.xi(2).pow(5).unwrap());
    let l = lambda_scalars(&d, &mu);
    assert_eq!(l.lambda_t31, x2.mul(&m(Y2)));
    let terms = recursion_terms(Yt21, &mu, &d);
    assert_eq!(terms.iter().map(|t| t.0).collect::<Vec<_>>(), vec![Yt31, Y31, Y21, Y1]);
    assert_eq!(terms[3].1, l.lambda_1);
}

#[test]
fn recursion_matches_closed_forms() {
    for n in [3u32, 5, 7] {
        for d in [canonical_datum(n).unwrap(), skewed_datum(n).unwrap()] {
            let rep = expand_recursion_check(&d).unwrap();
            assert_eq!(rep.checked.len(), 9);
            assert!(rep.passed(), "N = {n}: {:?}", rep.mismatches.iter().map(|m| m.root).collect::<Vec<_>>());
        }
    }
}

#[test]
fn one_step_recursion_for_yt32() {
    let d = canonical_datum(7).unwrap();
    let mu = MuFamily::symbolic(&d);
    let f = d.field();
    let m = |r: Root| MuScalar::var(f, r.index());
    let n = 7;
    let x1 = c(&d.xi(1).pow(n).unwrap());
    let x2 = c(&d.xi(2).pow(n).unwrap());
    let two = c(&CycScalar::from_int(f, 2));
    let expanded = gterm(&d, Yt32, m(Yt32))
        .sub(&u_alpha(Y32, &mu, &d).unwrap().mul_coeff(&two.mul(&x1).mul(&m(Y3))))
        .sub(&gterm(&d, Y2, x1.mul(&x2).mul(&m(Y3)).mul(&m(Y3)).mul(&m(Y2))));
    assert_eq!(expanded, u_alpha(Yt32, &mu, &d).unwrap());
}

#[test]
fn zero_mu_gives_the_nichols_algebra() {
    let d = canonical_datum(3).unwrap();
    let zero = MuFamily::zero(&d);
    for r in Root::ALL {
        assert!(u_alpha(r, &zero, &d).unwrap().is_zero());
    }
    let rs = build_lifting(&d, &zero).unwrap();
    assert_eq!(rs.kind(), SystemKind::Lifting);
    let nichols = RewriteSystem::<MuScalar>::nichols(&d);
    for r in Root::ALL {
        assert_eq!(rs.power_rhs(r), nichols.power_rhs(r));
    }
}

#[test]
fn closed_forms_live_in_the_augmentation_ideal_of_the_power_subgroup() {
    let d = canonical_datum(5).unwrap();
    let mu = MuFamily::symbolic(&d);
    let gens: Vec<_> = [Y1, Y2, Y3].iter().map(|&r| d.root_gn(r)).collect();
    let grp = d.group();
    let mut subgroup = std::collections::HashSet::new();
    for a in 0..5 {
        for b in 0..5 {
            for k in 0..5 {
                let g = grp.mul(grp.mul(grp.pow(gens[0], a), grp.pow(gens[1], b)), grp.pow(gens[2], k));
                subgroup.insert(g);
            }
        }
    }
    for r in Root::ALL {
        let u = u_alpha(r, &mu, &d).unwrap();
        assert!(u.counit().is_zero(), "{r}");
        for (m, _) in u.terms() {
            assert!(m.is_group_like());
            assert!(subgroup.contains(&m.group), "{r}");
        }
    }
}

#[test]
fn lifting_with_unit_mu_is_confluent() {
    for n in [3u32, 7] {
        let d = canonical_datum(n).unwrap();
        let ones = core::array::from_fn(|_| CycScalar::one(d.field()));
        let mu = MuFamily::from_constants(&d, ones).unwrap();
        let rep = check_local_confluence(&build_lifting(&d, &mu).unwrap()).unwrap();
        assert!(rep.is_confluent(), "N = {n}");
    }
}

#[test]
fn partial_lifting_truncates_low_levels_only() {
    let d = canonical_datum(3).unwrap();
    let rs = build_partial_lifting(&d, &MuFamily::symbolic(&d), 2).unwrap();
    assert_eq!(rs.kind(), SystemKind::Partial);
    for r in Root::ALL {
        assert_eq!(rs.is_truncated(r), r.level() < 2, "{r}");
    }
}

/// `Z_3 × Z_9 × Z_9` datum with `g2 = g1^{-1} h`, `h` of order 3, so `g21^3 = 1`.
fn collapsed_y21_datum() -> Datum {
    Datum::new(
        3,
        &[3, 9, 9],
        CANONICAL_EXPONENTS,
        [&[0, 1, 0], &[1, 8, 0], &[0, 0, 1]],
        [&[1, 6, 0], &[1, -3, -3], &[-1, 0, 3]],
    )
    .unwrap()
}

#[test]
fn mask_forces_mu21_to_vanish() {
    let d = collapsed_y21_datum();
    assert!(validate_datum(&d).is_valid(), "{:?}", validate_datum(&d).entries);
    assert!(d.root_gn(Y21).is_identity());
    let mask = d.mu_mask();
    assert!(!mask[Y21.index()]);
    assert!(mask[Y3.index()]);
    let mu = MuFamily::symbolic(&d);
    assert!(mu.get(Y21).is_zero());
    let f = d.field();
    let bad = MuFamily::zero(&d).with_value(Y21, MuScalar::var(f, Y21.index()));
    assert!(matches!(u_alpha(Y1, &bad, &d), Err(AlgebraError::MaskViolation(_))));
    let mut vals: [MuScalar; 9] = core::array::from_fn(|_| MuScalar::zero(f));
    vals[Y21.index()] = MuScalar::one(f);
    assert!(matches!(MuFamily::new(&d, vals), Err(AlgebraError::MaskViolation(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn specialized_forms_vanish_in_counit(vals in prop::array::uniform9(-4i64..5)) {
        let d = canonical_datum(3).unwrap();
        let f = d.field();
        let mu = MuFamily::from_constants(&d, vals.map(|v| CycScalar::from_int(f, v))).unwrap();
        for r in Root::ALL {
            let u = u_alpha(r, &mu, &d).unwrap();
            prop_assert!(u.counit().is_zero());
        }
    }

    #[test]
    fn specialization_commutes_with_closed_forms(vals in prop::array::uniform9(-3i64..4), r in 0usize..9) {
        let d = canonical_datum(5).unwrap();
        let f = d.field();
        let consts = vals.map(|v| CycScalar::from_int(f, v));
        let sym = u_alpha(Root::ALL[r], &MuFamily::symbolic(&d), &d).unwrap();
        let spec_vals: [Option<CycScalar>; 9] = core::array::from_fn(|i| Some(consts[i].clone()));
        let specialized = sym.map_coeffs(|c| c.specialize(&spec_vals));
        let direct = u_alpha(Root::ALL[r], &MuFamily::from_constants(&d, consts).unwrap(), &d).unwrap();
        prop_assert_eq!(specialized, direct);
    }
}
