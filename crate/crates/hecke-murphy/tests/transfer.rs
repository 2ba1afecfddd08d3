use hecke_murphy::baxter::BaxterKit;
use hecke_murphy::exact_ring::{int, rat, LaurentPoly};
use hecke_murphy::hecke::{build_gln_rep, murphy, AlgebraFamily, Params};
use hecke_murphy::report::Status;
use hecke_murphy::tensor::PolyMatrix;
use hecke_murphy::transfer::{
    build, build_t_minus, build_t_one_boundary, build_t_plus, check_aux_trace_with, check_commuting_family,
    check_commuting_family_with, check_condition2, check_degeneration, check_hamiltonian, corollary, extract_edges,
    factorized_t_minus, factorized_t_plus, hamiltonian, two_boundary_reports, verify_murphy_b, verify_murphy_c,
    EvalPoint, Mode, TransferSpec,
};
use hecke_murphy::verifier::{samples, seeded_params, ParsedOverrides};
use hecke_murphy::Error;
use proptest::prelude::*;

fn params() -> Params {
    Params::new(rat(3, 2), rat(5, 7), rat(-4, 3), rat(2, 1), rat(-1, 3), rat(1, 5), rat(-2, 9))
}

fn kit(local_dim: usize, sites: usize) -> BaxterKit {
    BaxterKit::new(&build_gln_rep(local_dim, sites, &params()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn one_boundary_edges_are_b_type_murphy_elements(seed in any::<u64>(), n in 1usize..=3) {
        let kit = BaxterKit::new(&build_gln_rep(2, 3, &seeded_params(seed)).unwrap()).unwrap();
        let r = verify_murphy_b(&kit, n);
        prop_assert!(r.is_pass(), "{}", r.summary());
        prop_assert_eq!(r.degrees.map(|(lo, hi)| hi - lo), Some(2 * n as i32));
    }

    #[test]
    fn two_boundary_edges_are_c_type_murphy_elements(seed in any::<u64>()) {
        let kit = BaxterKit::new(&build_gln_rep(2, 2, &seeded_params(seed)).unwrap()).unwrap();
        let reports = two_boundary_reports(&kit);
        prop_assert_eq!(reports.len(), 4);
        for r in reports {
            prop_assert!(r.is_pass(), "{}", r.summary());
        }
    }
}

#[test]
fn one_site_chain_is_the_boundary_matrix() {
    let kit = kit(2, 2);
    let t = build_t_one_boundary(&kit, 1).unwrap();
    assert_eq!(t.normalized, kit.k_minus);
    let r = PolyMatrix::proportional(&t.direct, &kit.k_minus).unwrap();
    let c = t.ratio.as_rational().unwrap();
    assert_eq!(r.as_laurent(), Some(t.trace_factor.scale(&c)));
}

#[test]
fn direct_and_factorised_constructions_agree() {
    for (d, n) in [(2, 2), (2, 3), (3, 2)] {
        let kit = kit(d, n);
        let t = build_t_one_boundary(&kit, n).unwrap();
        assert!(t.ratio.is_monomial());
        let minus = build_t_minus(&kit, EvalPoint::Main).unwrap();
        assert!(PolyMatrix::proportional(&minus, &factorized_t_minus(&kit)).is_some_and(|r| !r.is_zero()));
        let plus = build_t_plus(&kit, EvalPoint::Main).unwrap();
        assert!(PolyMatrix::proportional(&plus, &factorized_t_plus(&kit)).is_some_and(|r| !r.is_zero()));
    }
}

#[test]
fn corollary_gives_a_type_elements() {
    let kit = kit(2, 4);
    for n in 2..=4 {
        assert!(corollary(&kit, n).is_pass());
    }
    assert_eq!(corollary(&kit, 1).status, Status::Fail);
}

#[test]
fn local_dim_three_murphy_checks() {
    let kit = kit(3, 2);
    assert!(verify_murphy_b(&kit, 2).is_pass());
    assert!(verify_murphy_c(&kit).iter().all(|r| r.is_pass()));
    assert!(check_degeneration(&kit).is_pass());
}

#[test]
fn wrong_half_shift_sign_fails_the_side_conditions() {
    let good = kit(2, 2);
    let bad = BaxterKit::with_units(&good.rep, good.chi.clone(), -good.chi_h.clone());
    assert!(check_condition2(&good).iter().all(|r| r.is_pass()));
    assert!(check_condition2(&bad).iter().any(|r| r.status == Status::Fail));
    let reports = two_boundary_reports(&bad);
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r.status == Status::Fail));
}

#[test]
fn identity_twist_fails_the_aux_trace() {
    let rep = build_gln_rep(2, 2, &params()).unwrap();
    assert!(check_aux_trace_with(&rep, &rep.m_local).is_pass());
    let report = check_aux_trace_with(&rep, &PolyMatrix::identity(&[2]));
    assert_eq!(report.status, Status::Fail);
}

#[test]
fn non_solution_boundary_breaks_commutativity() {
    let s = samples(3, 1, &ParsedOverrides::default()).remove(0);
    let kit = BaxterKit::new(&build_gln_rep(2, 3, &s.params).unwrap()).unwrap();
    assert!(check_commuting_family(&kit, 3, &s.u0, &s.pairs).is_pass());
    let u = LaurentPoly::var();
    let k = PolyMatrix::from_entries(
        &[2],
        [
            (0, 0, LaurentPoly::constant(int(1))),
            (0, 1, u.scale(&int(2))),
            (1, 0, LaurentPoly::constant(int(3))),
            (1, 1, &u * &u),
        ],
    )
    .unwrap();
    let r = check_commuting_family_with(&kit, 3, &s.u0, &k, &s.pairs);
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn hamiltonian_is_in_the_generator_span() {
    let kit = kit(2, 3);
    let h = hamiltonian(&kit, 3).unwrap();
    assert_eq!(h.coefficients.len(), 4);
    let r = check_hamiltonian(&kit, 3, &[rat(2, 3), rat(-5, 7), rat(11, 3)]);
    assert!(r.is_pass(), "{}", r.summary());
    assert_eq!(r.details.get("bulk_uniform").map(String::as_str), Some("true"));
    assert!(matches!(hamiltonian(&kit, 1), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn evaluation_points_are_validated() {
    let kit = kit(2, 2);
    assert!(build_t_minus(&kit, EvalPoint::Diagonal).is_err());
    assert!(build_t_plus(&kit, EvalPoint::Shift(1)).is_err());
    let bad = TransferSpec { mode: Mode::OneBoundary(2), point: EvalPoint::Main };
    assert!(matches!(build(&kit, bad), Err(Error::ConstraintViolation(_))));
    let ok = TransferSpec { mode: Mode::OneBoundary(2), point: EvalPoint::Diagonal };
    assert_eq!(build(&kit, ok).unwrap(), build_t_one_boundary(&kit, 2).unwrap().direct);
    assert!(build_t_one_boundary(&kit, 3).is_err());
}

#[test]
fn edges_of_the_zero_matrix() {
    assert!(matches!(extract_edges(&PolyMatrix::zeros(&[2])), Err(Error::ConstraintViolation(_))));
}

#[test]
fn opposite_points_give_inverse_elements() {
    let kit = kit(2, 2);
    let t = build_t_minus(&kit, EvalPoint::Opposite).unwrap();
    let low = extract_edges(&t).unwrap().low_coeff;
    let j = murphy(&kit.rep, AlgebraFamily::C, 1).unwrap();
    let product = low.matmul(&j).unwrap();
    let id = PolyMatrix::identity(&kit.rep.layout());
    assert!(PolyMatrix::proportional(&product, &id).is_some_and(|r| r.as_rational().is_some()));
}
