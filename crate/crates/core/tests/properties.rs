use magical::cayley::{h0_dim, GenusContext};
use magical::classify::magical_criterion;
use magical::linalg::{kernel, mat_vec, rank};
use magical::matlie::{
    cayley_inverse, cayley_transform, classical_algebra, sigma_e, triple_from_partition, Classical, Sl2Triple,
};
use magical::partitions::{
    classical_centralizer, complex_partition, real_orbits, validate_classical_orbit, Partition, RealFormId,
};
use magical::rootsys::{sl2_multiplicities, Sl2Data};
use magical::scalar::{q, GaussQ, Q};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 1..7).prop_map(|rows| Partition::from_rows(&rows).unwrap())
}

fn kind() -> impl Strategy<Value = Classical> {
    prop_oneof![Just(Classical::Sl), Just(Classical::So), Just(Classical::Sp)]
}

fn regular(kind: Classical, n: usize) -> Partition {
    match kind {
        Classical::So if n.is_multiple_of(2) => Partition::from_rows(&[n - 1, 1]).unwrap(),
        _ => Partition::single(n),
    }
}

fn complex_rank(kind: Classical, n: usize) -> usize {
    match kind {
        Classical::Sl => n - 1,
        _ => n / 2,
    }
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual_sequence().iter().sum::<usize>(), p.size());
    }

    #[test]
    fn centralizer_dimension_bounded_by_rank(kind in kind(), p in partition()) {
        let n = p.size();
        prop_assume!(n >= 3 && (kind != Classical::Sp || n % 2 == 0));
        let v = validate_classical_orbit(kind, n, &p).unwrap();
        prop_assume!(v.valid);
        let (dim_v, _) = classical_centralizer(kind, n, &p).unwrap();
        let r = complex_rank(kind, n);
        prop_assert!(dim_v >= r);
        prop_assert_eq!(dim_v == r, p == regular(kind, n));
    }

    #[test]
    fn real_orbits_forget_to_complex_orbits(kind in kind(), n in 2usize..9, pick in any::<prop::sample::Index>()) {
        prop_assume!(kind != Classical::Sp || n % 2 == 0);
        prop_assume!(kind != Classical::So || n >= 3);
        let forms = RealFormId::forms_of(kind, n);
        let rf = forms[pick.index(forms.len())];
        for o in real_orbits(rf).unwrap() {
            let p = complex_partition(rf, &o.diagram);
            prop_assert!(validate_classical_orbit(kind, n, &p).unwrap().valid, "{} {}", rf, o);
            let r = magical_criterion(rf, &o.diagram).unwrap();
            let (_, c) = classical_centralizer(kind, n, &p).unwrap();
            prop_assert_eq!(r.dim_c, c.dim());
        }
    }

    #[test]
    fn sl2_data_round_trips_through_grading(pairs in prop::collection::vec((0u32..8, 1usize..5), 1..5)) {
        let d = Sl2Data { by_weight: pairs.into_iter().collect() };
        prop_assert_eq!(sl2_multiplicities(&d.graded()).unwrap(), d);
    }

    #[test]
    fn kernel_is_annihilated(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 5), 1..5)) {
        let m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let k = kernel(&m, 5);
        prop_assert_eq!(rank(&m) + k.len(), 5);
        for v in &k {
            prop_assert!(mat_vec(&m, v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn brackets_satisfy_jacobi(kind in kind(), coeffs in prop::collection::vec(-3i64..4, 45)) {
        let n = if kind == Classical::Sl { 3 } else { 4 };
        let g = classical_algebra(kind, n).unwrap();
        let d = g.dim();
        let v = |k: usize| -> Vec<Q> { (0..d).map(|i| q(coeffs[(k * d + i) % coeffs.len()])).collect() };
        let (x, y, z) = (v(0), v(1), v(2));
        let add = |a: Vec<Q>, b: Vec<Q>| -> Vec<Q> { a.into_iter().zip(b).map(|(s, t)| s + t).collect() };
        let jac = add(add(g.bracket(&x, &g.bracket(&y, &z)), g.bracket(&y, &g.bracket(&z, &x))), g.bracket(&z, &g.bracket(&x, &y)));
        prop_assert!(jac.iter().all(|c| *c == q(0)));
        let anti = add(g.bracket(&x, &y), g.bracket(&y, &x));
        prop_assert!(anti.iter().all(|c| *c == q(0)));
    }

    #[test]
    fn cayley_maps_are_inverse(vals in prop::collection::vec((-5i64..6, -5i64..6), 9)) {
        let g: Vec<GaussQ> = vals.iter().map(|&(a, b)| GaussQ::new(q(a), q(b))).collect();
        let t = Sl2Triple { f: g[0..3].to_vec(), h: g[3..6].to_vec(), e: g[6..9].to_vec() };
        prop_assert_eq!(cayley_transform(&cayley_inverse(&t)), t.clone());
        prop_assert_eq!(cayley_inverse(&cayley_transform(&t)), t);
    }

    #[test]
    fn riemann_roch_is_monotone(d in 1usize..12, g in 2usize..12) {
        let a = GenusContext::new(g).unwrap();
        let b = GenusContext::new(g + 1).unwrap();
        prop_assert!(h0_dim(d, b).unwrap() >= h0_dim(d, a).unwrap());
        if d >= 2 {
            prop_assert!(h0_dim(d + 1, a).unwrap() > h0_dim(d, a).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_squares_to_identity(kind in kind(), p in partition()) {
        let n = p.size();
        prop_assume!((3..=6).contains(&n) && p.largest() > 1);
        prop_assume!(kind != Classical::Sp || n % 2 == 0);
        let v = validate_classical_orbit(kind, n, &p).unwrap();
        prop_assume!(v.valid && !v.very_even);
        let g = classical_algebra(kind, n).unwrap();
        let t = triple_from_partition(&g, &p, None).unwrap();
        let s = sigma_e(&g, &t).unwrap();
        prop_assert!(s.squares_to_identity());
        prop_assert_eq!(s.apply(&t.h), t.h.clone());
    }
}
