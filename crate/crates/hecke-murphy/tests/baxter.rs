use hecke_murphy::baxter::{
    baxterize_boundary, baxterize_bulk, calibrate_crossing, check_re, check_re_local, check_unitarity,
    check_unitarity_local, check_ybe, check_ybe_local, crossing_exponent, crossing_report, r_hat_local, BaxterKit,
    End,
};
use hecke_murphy::exact_ring::{int, rat, rpow, LaurentPoly};
use hecke_murphy::hecke::{build_gln_rep, HeckeRep, LocalMatrices, Params};
use hecke_murphy::report::Status;
use hecke_murphy::tensor::PolyMatrix;
use hecke_murphy::verifier::{samples, seeded_params, ParsedOverrides};
use hecke_murphy::Error;
use proptest::prelude::*;

fn params() -> Params {
    Params::new(rat(3, 2), rat(5, 7), rat(-4, 3), rat(2, 1), rat(-1, 3), rat(1, 5), rat(-2, 9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn baxterized_objects_satisfy_their_equations(seed in any::<u64>(), local_dim in 2usize..=3) {
        let s = samples(seed, 1, &ParsedOverrides::default()).remove(0);
        let rep = build_gln_rep(local_dim, 2, &s.params).unwrap();
        prop_assert!(check_ybe(&rep, &s.points).is_pass());
        prop_assert!(check_re(&rep, End::Left, &s.points).is_pass());
        prop_assert!(check_re(&rep, End::Right, &s.points).is_pass());
        prop_assert!(check_unitarity(&rep).is_pass());
    }

    #[test]
    fn crossing_unit_is_stable_across_seeds(seed in any::<u64>(), local_dim in 2usize..=3) {
        let rep = build_gln_rep(local_dim, 2, &seeded_params(seed)).unwrap();
        let chi = calibrate_crossing(&rep).unwrap();
        prop_assert_eq!(crossing_exponent(&rep, &chi), Some(2 * local_dim as i32));
        prop_assert!(crossing_report(&rep).is_pass());
    }
}

#[test]
fn r_check_is_regular_at_one() {
    let rep = build_gln_rep(2, 2, &params()).unwrap();
    let r1 = r_hat_local(&rep).evaluate(&int(1));
    let expected = rep.g_local.sub(&rep.g_inv_local).unwrap();
    assert_eq!(r1, expected);
}

#[test]
fn corrupted_generator_breaks_ybe() {
    let rep = build_gln_rep(2, 2, &params()).unwrap();
    let bump = PolyMatrix::from_entries(&[2, 2], [(0, 3, LaurentPoly::constant(int(1)))]).unwrap();
    let g = rep.g_local.add(&bump).unwrap();
    let r = baxterize_bulk(&g, &rep.g_inv_local);
    let report = check_ybe_local(&r, &[rat(2, 3), rat(-5, 7)]);
    assert_eq!(report.status, Status::Fail);
    assert!(report.first_failure.is_some());
}

#[test]
fn corrupted_boundary_breaks_reflection_and_unitarity() {
    let p = params();
    let rep = build_gln_rep(2, 2, &p).unwrap();
    let bump = PolyMatrix::from_entries(&[2], [(0, 0, LaurentPoly::constant(int(1)))]).unwrap();
    let g0 = rep.g0_local.add(&bump).unwrap();
    let k = baxterize_boundary(&g0, &rep.g0_inv_local, &p.c_minus);
    let r = r_hat_local(&rep);
    assert_eq!(check_re_local(&r, &k, End::Left, &[rat(2, 3)]).status, Status::Fail);
    assert_eq!(check_unitarity_local(&[("K", &k)]).status, Status::Fail);
}

#[test]
fn scalar_generator_cannot_be_calibrated() {
    let p = params();
    let rep = build_gln_rep(2, 2, &p).unwrap();
    let g = PolyMatrix::scalar(&[2, 2], &LaurentPoly::constant(p.q.clone()));
    let flat = HeckeRep::from_local(2, 2, &p, LocalMatrices { g, g0: rep.g0_local.clone(), gn: rep.gn_local.clone() })
        .unwrap();
    assert!(matches!(calibrate_crossing(&flat), Err(Error::CalibrationFailure(_))));
    assert_eq!(crossing_report(&flat).status, Status::Fail);
    assert!(BaxterKit::new(&flat).is_err());
}

#[test]
fn kit_units() {
    for local_dim in [2, 3] {
        let rep = build_gln_rep(local_dim, 2, &params()).unwrap();
        let kit = BaxterKit::new(&rep).unwrap();
        let n = local_dim as i32;
        assert_eq!(kit.chi, rpow(&rep.params.q, 2 * n));
        assert_eq!(kit.chi_h.clone() * kit.chi_h.clone(), kit.chi);
    }
}
