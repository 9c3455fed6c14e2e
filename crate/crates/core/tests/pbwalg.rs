use b3lift_core::cyclo::{Coeff, CycScalar, MuScalar};
use b3lift_core::datum::{canonical_datum, skewed_datum, Datum, GroupElement, Root, Root::*};
use b3lift_core::liftings::{build_lifting, MuFamily};
use b3lift_core::pbwalg::oracle::{pbw_to_words, root_vector_words, serre_relations, FreeElement, Oracle};
use b3lift_core::pbwalg::*;
use b3lift_core::AlgebraError;
use proptest::prelude::*;

fn gen<C: b3lift_core::cyclo::Coeff>(d: &Datum, r: Root) -> AlgElement<C> {
    AlgElement::generator(d.field(), r)
}

fn mono(pairs: &[(Root, u8)]) -> Monomial {
    let mut e = EMPTY;
    for &(r, k) in pairs {
        e[r.index()] += k;
    }
    Monomial::word(e)
}

#[test]
fn y1_y2_straightens_through_y21() {
    let d = canonical_datum(7).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    let got = nz.multiply(&gen(&d, Y1), &gen(&d, Y2)).unwrap();
    let qi = d.q(2, 1).inv().unwrap();
    let mut want = AlgElement::zero(d.field());
    want.add_term(mono(&[(Y2, 1), (Y1, 1)]), qi.clone());
    want.add_term(mono(&[(Y21, 1)]), qi.neg());
    assert_eq!(got, want);
    // already sorted
    let sorted = nz.multiply(&gen(&d, Y2), &gen(&d, Y1)).unwrap();
    assert_eq!(sorted, AlgElement::monomial(d.field(), mono(&[(Y2, 1), (Y1, 1)])));
}

#[test]
fn group_elements_act_by_characters() {
    let d = canonical_datum(5).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    let g = d.group().encode(&[3, 7, 11]).unwrap();
    let ge = AlgElement::group_element(d.field(), g);
    let got = nz.multiply(&ge, &gen(&d, Y3)).unwrap();
    let chi = d.root_of_unity(d.char_exp(2, g));
    assert_eq!(got, AlgElement::term(d.field(), Monomial::new(mono(&[(Y3, 1)]).exps, g), chi));
    let one = AlgElement::one(d.field());
    assert_eq!(nz.multiply(&one, &got).unwrap(), got);
}

#[test]
fn nichols_powers_vanish() {
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<CycScalar>::nichols(&d);
    assert!(rs.power_rhs(Y31).unwrap().is_zero());
    let mut nz = Normalizer::new(&rs);
    assert!(nz.root_power(Y31.index(), 3).unwrap().is_zero());
    assert!(nz.root_power(Yt21.index(), 3).unwrap().is_zero());
    assert!(!nz.root_power(Yt21.index(), 2).unwrap().is_zero());
}

#[test]
fn lifting_power_of_y1() {
    let d = canonical_datum(3).unwrap();
    let rs = build_lifting(&d, &MuFamily::symbolic(&d)).unwrap();
    let mut nz = Normalizer::new(&rs);
    let got = nz.root_power(Y1.index(), 3).unwrap();
    let mu1 = MuScalar::var(d.field(), Y1.index());
    let mut want = AlgElement::zero(d.field());
    want.add_term(Monomial::group(d.root_gn(Y1)), mu1.clone());
    want.add_term(Monomial::group(GroupElement::IDENTITY), mu1.neg());
    assert_eq!(got, want);
    let raw = AlgElement::monomial(d.field(), mono(&[(Y1, 3)]));
    assert_eq!(nz.normalize(&raw).unwrap(), want);
}

#[test]
fn confluence_of_all_modes() {
    for n in [3u32, 7] {
        for d in [canonical_datum(n).unwrap(), skewed_datum(n).unwrap()] {
            let serre = check_local_confluence(&RewriteSystem::<CycScalar>::serre(&d)).unwrap();
            assert!(serre.is_confluent(), "serre N = {n}");
            assert_eq!(serre.checked, 84);
            let nichols = check_local_confluence(&RewriteSystem::<CycScalar>::nichols(&d)).unwrap();
            assert!(nichols.is_confluent(), "nichols N = {n}");
            assert_eq!(nichols.checked, 165);
            let lifting = check_local_confluence(&build_lifting(&d, &MuFamily::symbolic(&d)).unwrap()).unwrap();
            assert!(lifting.is_confluent(), "lifting N = {n}");
        }
    }
}

#[test]
fn corrupted_tail_breaks_confluence() {
    let d = canonical_datum(3).unwrap();
    let mut rs = RewriteSystem::<CycScalar>::serre(&d);
    let two = CycScalar::from_int(d.field(), 2);
    rs.set_tail(Y32, Y1, vec![(mono(&[(Y31, 1)]).exps, two)]);
    let rep = check_local_confluence(&rs).unwrap();
    assert!(!rep.is_confluent());
    assert!(rep.unresolved.iter().all(|u| u.word.contains("y32") || u.word.contains("y1")));
}

#[test]
fn graded_dimensions() {
    let d = canonical_datum(7).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    assert_eq!(graded_dimension(&rs, 0), 1);
    assert_eq!(graded_dimension(&rs, 1), 3);
    assert_eq!(graded_dimension(&rs, 2), 8);
    for k in 0..=8 {
        assert_eq!(graded_dimension(&rs, k) as usize, pbw_words(&rs, k).len());
    }
}

#[test]
fn dimension_formula_at_n3() {
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<CycScalar>::nichols(&d);
    assert_eq!(dimension(&rs), Some(14_348_907));
    assert_eq!(enumerate_pbw_box(&rs), Some(19_683));
    assert_eq!(dimension(&RewriteSystem::<CycScalar>::serre(&d)), None);
}

#[test]
fn oracle_matches_pbw_count_at_n7() {
    let d = canonical_datum(7).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut o = Oracle::with_degree_bound(&d, 6);
    assert_eq!(o.dimension(2).unwrap(), 8);
    for k in 0..=6 {
        assert_eq!(o.dimension(k).unwrap(), graded_dimension(&rs, k), "degree {k}");
    }
    assert!(matches!(o.dimension(7), Err(AlgebraError::DegreeBudget { .. })));
}

#[test]
fn serre_only_presentation_is_short_one_relation_at_n3() {
    // At N = 3 three Remark identities in degree 6 are not consequences of the Serre relations.
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut o = Oracle::with_degree_bound(&d, 6);
    for k in 0..=5 {
        assert_eq!(o.dimension(k).unwrap(), graded_dimension(&rs, k));
    }
    assert_eq!(o.dimension(6).unwrap(), 127);
    assert_eq!(graded_dimension(&rs, 6), 126);
}

#[test]
fn serre_relations_reduce_to_zero() {
    let d = canonical_datum(5).unwrap();
    let mut o = Oracle::new(&d);
    for r in serre_relations(&d) {
        assert!(o.is_zero(&r).unwrap());
        assert!(o.reduce(&r).unwrap().is_empty());
    }
}

#[test]
fn remark_identities_hold_in_the_oracle() {
    let d = canonical_datum(7).unwrap();
    let mut o = Oracle::with_degree_bound(&d, 6);
    let mut checked = 0;
    for a in Root::ALL {
        for b in Root::ALL {
            if a >= b || a.height() + b.height() > 6 {
                continue;
            }
            let id = oracle::commutation_identity(&d, a, b, &remark_tail(&d, a, b)).unwrap();
            assert!(o.is_zero(&id).unwrap(), "[{a}, {b}]_c");
            checked += 1;
        }
    }
    assert_eq!(checked, 29);
}

#[test]
fn power_of_y21_agrees_with_word_expansion() {
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    let p = nz.root_power(Y21.index(), 3).unwrap();
    let w = root_vector_words(&d, Y21);
    let direct = w.mul(&w).mul(&w);
    let mut o = Oracle::with_degree_bound(&d, 6);
    assert!(o.is_zero(&pbw_to_words(&d, &p).unwrap().sub(&direct)).unwrap());
    // frozen shape: y21^3 stays a single PBW word in the untruncated algebra
    assert_eq!(p, AlgElement::monomial(d.field(), mono(&[(Y21, 3)])));
}

#[test]
fn step_budget_is_enforced() {
    let d = canonical_datum(7).unwrap();
    let rs = RewriteSystem::<CycScalar>::serre(&d);
    let mut nz = Normalizer::with_budget(&rs, 5);
    let (a, b, c) = (gen::<CycScalar>(&d, Y1), gen(&d, Y2), gen(&d, Y3));
    let r = nz.product(&[&a, &b, &c, &a, &b, &c]);
    assert!(matches!(r, Err(AlgebraError::BudgetExceeded(5))));
    nz.set_budget(u64::MAX);
    assert!(nz.product(&[&a, &b, &c, &a, &b, &c]).is_ok());
}

fn letters() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..7)
}

fn simple(i: u8) -> Root {
    [Y1, Y2, Y3][i as usize]
}

fn word_product(nz: &mut Normalizer<'_, CycScalar>, d: &Datum, w: &[u8]) -> AlgElement<CycScalar> {
    let mut acc = AlgElement::one(d.field());
    for &i in w {
        acc = nz.multiply(&acc, &gen(d, simple(i))).unwrap();
    }
    acc
}

fn element(d: &Datum) -> impl Strategy<Value = AlgElement<CycScalar>> {
    let f = d.field();
    let order = d.group().order() as i64;
    let factors = d.group().factors().to_vec();
    prop::collection::vec((prop::collection::vec(0usize..9, 0..3), 0..order, -3i64..4), 1..4).prop_map(move |terms| {
        let gr = b3lift_core::datum::AbelianGroup::new(&factors).unwrap();
        let mut e = AlgElement::zero(f);
        for (roots, g, c) in terms {
            let mut exps = EMPTY;
            for r in roots {
                exps[r] += 1;
            }
            let mut v = Vec::new();
            let mut rest = g;
            for m in gr.factors() {
                v.push(rest % *m as i64);
                rest /= *m as i64;
            }
            e.add_term(Monomial::new(exps, gr.encode(&v).unwrap()), CycScalar::from_int(f, c));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_normalize_consistently_with_oracle(w in letters()) {
        let d = canonical_datum(7).unwrap();
        let rs = RewriteSystem::<CycScalar>::serre(&d);
        let mut nz = Normalizer::new(&rs);
        let nf = word_product(&mut nz, &d, &w);
        let mut lhs = FreeElement::unit(d.field());
        for &i in &w {
            lhs = lhs.mul(&FreeElement::letter(d.field(), i));
        }
        let mut o = Oracle::with_degree_bound(&d, 6);
        prop_assert!(o.is_zero(&lhs.sub(&pbw_to_words(&d, &nf).unwrap())).unwrap());
        if let Some(deg) = nf.homogeneous_degree() {
            let mut expect = [0i64; 3];
            for &i in &w { expect[i as usize] += 1; }
            prop_assert_eq!(deg, expect);
        }
    }

    #[test]
    fn multiplication_is_associative_in_the_lifting(a in element(&canonical_datum(3).unwrap()),
                                                    b in element(&canonical_datum(3).unwrap()),
                                                    c in element(&canonical_datum(3).unwrap())) {
        let d = canonical_datum(3).unwrap();
        let rs = build_lifting(&d, &MuFamily::symbolic(&d)).unwrap();
        let mut nz = Normalizer::new(&rs);
        let lift = |e: &AlgElement<CycScalar>| e.map_coeffs(|c| MuScalar::constant(c.clone()));
        let (a, b, c) = (lift(&a), lift(&b), lift(&c));
        let ab_c = { let ab = nz.multiply(&a, &b).unwrap(); nz.multiply(&ab, &c).unwrap() };
        let a_bc = { let bc = nz.multiply(&b, &c).unwrap(); nz.multiply(&a, &bc).unwrap() };
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn normalize_is_idempotent_and_compatible(a in element(&canonical_datum(3).unwrap()),
                                              b in element(&canonical_datum(3).unwrap()),
                                              k in 0u8..3) {
        let d = canonical_datum(3).unwrap();
        let rs = RewriteSystem::<CycScalar>::nichols(&d);
        let mut nz = Normalizer::new(&rs);
        // push some exponents past N so that power rules fire
        let mut raw = AlgElement::zero(d.field());
        for (m, c) in a.terms() {
            let mut e = m.exps;
            e[k as usize * 3] += 3;
            raw.add_term(Monomial::new(e, m.group), c.clone());
        }
        let once = nz.normalize(&raw).unwrap();
        prop_assert_eq!(nz.normalize(&once).unwrap(), once.clone());
        prop_assert_eq!(nz.normalize(&b).unwrap(), b.clone());
        let prod = nz.multiply(&once, &b).unwrap();
        prop_assert_eq!(nz.normalize(&prod).unwrap(), prod);
    }
}
