use magical::matlie::sigma::basis_sweep;
use magical::matlie::{
    check_cayley, chevalley_algebra, classical_algebra, is_magical_oracle, sigma_e, triple_from_diagram,
    triple_from_partition, verify_structure, Classical, DIAGRAM_RETRIES,
};
use magical::{AlgebraType, DynkinLabels, Error, Family, Partition};

fn labels(v: &[i64]) -> DynkinLabels {
    DynkinLabels::new(v.to_vec()).unwrap()
}

#[test]
fn subregular_sl3_is_not_magical() {
    let g = classical_algebra(Classical::Sl, 3).unwrap();
    let t = triple_from_partition(&g, &Partition::from_rows(&[2, 1]).unwrap(), None).unwrap();
    let rep = is_magical_oracle(&g, &t).unwrap();
    assert!(!rep.magical);
    let (x, y) = rep.witness.unwrap();
    assert!(x < g.dim() && y < g.dim());
    let s = sigma_e(&g, &t).unwrap();
    assert!(basis_sweep(&g, &s).is_some());
}

#[test]
fn eigen_sweep_matches_basis_sweep() {
    for (kind, n) in [(Classical::Sl, 4), (Classical::So, 5), (Classical::Sp, 4)] {
        let g = classical_algebra(kind, n).unwrap();
        for p in Partition::all(n) {
            let Ok(t) = triple_from_partition(&g, &p, None) else { continue };
            let s = sigma_e(&g, &t).unwrap();
            let fast = is_magical_oracle(&g, &t).unwrap().magical;
            assert_eq!(fast, basis_sweep(&g, &s).is_none(), "{:?}({}) {}", kind, n, p);
        }
    }
}

#[test]
fn g2_principal_and_f4_quaternionic() {
    let g2 = chevalley_algebra(AlgebraType::exceptional(Family::G2)).unwrap();
    let t = triple_from_diagram(&g2, &labels(&[2, 2]), 0, DIAGRAM_RETRIES).unwrap();
    let rep = is_magical_oracle(&g2, &t).unwrap();
    assert!(rep.magical);
    let f4 = chevalley_algebra(AlgebraType::exceptional(Family::F4)).unwrap();
    let t = triple_from_diagram(&f4, &labels(&[0, 0, 2, 2]), 0, DIAGRAM_RETRIES).unwrap();
    let st = verify_structure(&f4, &t).unwrap();
    assert!(st.passed());
    assert_eq!((st.c_dim, st.ge_dim, st.ge_exponents()), (3, 14, vec![1, 5]));
}

#[test]
fn unrealizable_diagram_is_reported() {
    let g2 = chevalley_algebra(AlgebraType::exceptional(Family::G2)).unwrap();
    let r = triple_from_diagram(&g2, &labels(&[2, 0]), 0, 2);
    assert!(matches!(r, Err(Error::NotRealizable(_))), "{:?}", r.map(|_| ()));
}

#[test]
fn cayley_on_split_so7() {
    let g = classical_algebra(Classical::So, 7).unwrap();
    let t = triple_from_partition(&g, &Partition::single(7), None).unwrap();
    let s = sigma_e(&g, &t).unwrap();
    assert!(check_cayley(&g, &s, &t).passed());
}

#[test]
fn e8_jacobi_sample() {
    let e8 = chevalley_algebra(AlgebraType::exceptional(Family::E8)).unwrap();
    let rep = e8.jacobi_sampled(100_000, 11);
    assert!(rep.passed() && rep.checked == 100_000);
}
