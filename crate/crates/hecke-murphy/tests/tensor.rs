use hecke_murphy::exact_ring::{int, rat, LaurentPoly, Rational};
use hecke_murphy::tensor::PolyMatrix;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, (-9i64..=9, 1i64..=5)), 0..3)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(k, (n, d))| (k, rat(n, d)))))
}

fn matrix(layout: Vec<usize>) -> impl Strategy<Value = PolyMatrix> {
    let dim: usize = layout.iter().product();
    prop::collection::vec((0..dim, 0..dim, entry()), 0..(dim * 2)).prop_map(move |es| {
        let mut m = PolyMatrix::zeros(&layout);
        for (r, c, p) in es {
            let single = PolyMatrix::from_entries(&layout, [(r, c, p)]).unwrap();
            m = m.add(&single).unwrap();
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matmul_is_associative(a in matrix(vec![2, 2]), b in matrix(vec![2, 2]), c in matrix(vec![2, 2])) {
        let left = a.matmul(&b).unwrap().matmul(&c).unwrap();
        let right = a.matmul(&b.matmul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_is_multiplicative(a in matrix(vec![2]), b in matrix(vec![3]), c in matrix(vec![2]), d in matrix(vec![3])) {
        let lhs = a.kron(&b).matmul(&c.kron(&d)).unwrap();
        let rhs = a.matmul(&c).unwrap().kron(&b.matmul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_matches_kron(a in matrix(vec![2]), b in matrix(vec![2, 2])) {
        let l = [2, 2, 2];
        let via_embed = PolyMatrix::embed(&a, &[0], &l).unwrap()
            .matmul(&PolyMatrix::embed(&b, &[1, 2], &l).unwrap()).unwrap();
        prop_assert_eq!(via_embed, a.kron(&b));
    }

    #[test]
    fn embedding_is_a_homomorphism(a in matrix(vec![2, 2]), b in matrix(vec![2, 2])) {
        let l = [2, 2, 2];
        let e = |m: &PolyMatrix| PolyMatrix::embed(m, &[2, 0], &l).unwrap();
        prop_assert_eq!(e(&a.matmul(&b).unwrap()), e(&a).matmul(&e(&b)).unwrap());
    }

    #[test]
    fn reversed_embedding_is_conjugation_by_swap(a in matrix(vec![2, 2])) {
        let p = PolyMatrix::swap(2);
        let reversed = PolyMatrix::embed(&a, &[1, 0], &[2, 2]).unwrap();
        prop_assert_eq!(reversed, p.matmul(&a).unwrap().matmul(&p).unwrap());
    }

    #[test]
    fn partial_trace_of_a_product_state(a in matrix(vec![2]), b in matrix(vec![2, 2])) {
        let t = a.kron(&b).partial_trace_first().unwrap();
        prop_assert_eq!(t, b.scale(&a.trace()));
    }

    #[test]
    fn partial_transpose_is_an_involution(a in matrix(vec![2, 3])) {
        let twice = a.partial_transpose(1).unwrap().partial_transpose(1).unwrap();
        prop_assert_eq!(&twice, &a);
        let both = a.partial_transpose(0).unwrap().partial_transpose(1).unwrap();
        prop_assert_eq!(both, a.transpose());
    }

    #[test]
    fn dumps_round_trip(a in matrix(vec![2, 2])) {
        let v = a.to_dump();
        prop_assert_eq!(PolyMatrix::from_dump(&v).unwrap(), a);
    }

    #[test]
    fn proportionality_is_exact(a in matrix(vec![2, 2]), n in 1i64..9, k in -2i32..=2) {
        prop_assume!(!a.is_zero());
        let f = LaurentPoly::monomial(int(n), k);
        let r = PolyMatrix::proportional(&a.scale(&f), &a).unwrap();
        prop_assert_eq!(r.as_laurent(), Some(f));
    }
}

#[test]
fn dump_entries_are_sorted() {
    let l = [2];
    let m = PolyMatrix::from_entries(
        &l,
        [
            (1, 0, LaurentPoly::from_terms([(3, int(1)), (-1, rat(2, 3))])),
            (0, 1, LaurentPoly::constant(int(5))),
        ],
    )
    .unwrap();
    let v = m.to_dump();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["entries"][0][0], 0);
    assert_eq!(v["entries"][1][2][0][0], -1);
    assert_eq!(v["entries"][1][2][1][0], 3);
    assert_eq!(v["entries"][1][2][0].to_string(), "[-1,2,3]");
}

#[test]
fn layouts_must_agree() {
    let a = PolyMatrix::identity(&[2, 2]);
    let b = PolyMatrix::identity(&[4]);
    assert!(a.matmul(&b).is_err());
    assert!(PolyMatrix::embed(&a, &[0], &[2, 2]).is_err());
    assert!(PolyMatrix::embed(&a, &[0, 0], &[2, 2]).is_err());
}

#[test]
fn solve_span_reports_unreachable_entries() {
    let id = PolyMatrix::identity(&[2]);
    let target = PolyMatrix::from_rationals(&[2], &[vec![int(1), int(1)], vec![int(0), int(1)]]).unwrap();
    assert!(PolyMatrix::solve_span(&target, &[&id]).is_err());
    let x = PolyMatrix::solve_span(&id.scale_rational(&Rational::from_integer(7.into())), &[&id]).unwrap();
    assert_eq!(x, vec![int(7)]);
}
