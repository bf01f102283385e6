use magical::cayley::{cayley_domain, component_count, dimension_consistency, h0_dim, GenusContext, GroupForm};
use magical::classify::MagicalCaseId;
use magical::partitions::{real_sl_r, real_so, ReductiveType};
use magical::sl2data::{all_records, check_record, magical_record, real_rank, theta_structure, ThetaDescriptor};
use magical::RealFormId;

fn rec(s: &str) -> magical::MagicalRecord {
    magical_record(s.parse().unwrap()).unwrap()
}

#[test]
fn split_cayley_domain_is_the_hitchin_base() {
    for r in all_records().unwrap().iter().filter(|r| r.case_id.case_number() == 1) {
        for g in 2..=5 {
            let d = cayley_domain(r, GenusContext::new(g).unwrap()).unwrap();
            assert_eq!(d.total_dim, (g - 1) * r.dim(), "{} genus {}", r.case_id, g);
            assert_eq!(d.twist_degree, 1);
        }
    }
}

#[test]
fn hermitian_rows_have_twist_two() {
    for r in all_records().unwrap().iter().filter(|r| r.case_id.case_number() == 2) {
        let d = cayley_domain(r, GenusContext::new(2).unwrap()).unwrap();
        assert_eq!((d.twist_degree, d.differential_degrees.clone()), (2, vec![2]), "{}", r.case_id);
    }
}

#[test]
fn record_examples() {
    let c = rec("hermitian-C:4");
    assert_eq!(c.cayley_real_form, ReductiveType::split_torus(1).plus(real_sl_r(4)));
    let d = cayley_domain(&c, GenusContext::new(3).unwrap()).unwrap();
    assert_eq!(d.differential_dims, vec![6]);

    let a = rec("split-A:2");
    let d = cayley_domain(&a, GenusContext::new(2).unwrap()).unwrap();
    assert_eq!((d.differential_degrees, d.differential_dims), (vec![2, 3], vec![3, 5]));

    let e8 = rec("quat-E8");
    let d = cayley_domain(&e8, GenusContext::new(2).unwrap()).unwrap();
    assert_eq!((d.twist_degree, d.differential_degrees), (4, vec![2, 6]));
    assert_eq!(component_count(&e8, GroupForm::SimplyConnected).to_string(), "unknown (expected 1)");
    assert_eq!(real_rank(&e8.cayley_real_form).unwrap(), 4);
}

#[test]
fn flag_case_data() {
    let r = rec("flag-B:4,3");
    assert_eq!((r.sl2_data.n0(), r.sl2_data.n(4)), (6, 4));
    let id = dimension_consistency(&r);
    assert_eq!((id.lhs, id.rhs), (36, 36));
    let even = rec("flag-B:4,4");
    assert!(even.ge_exponents.contains(&3));
    assert_eq!(theta_structure(&rec("flag-D:9,3")).case_number(), 3);
    let so36 = MagicalCaseId::Flag { family: magical::Family::B, n: 4, p: 3 };
    assert_eq!(so36.canonical_real_form(), RealFormId::So(3, 6));
    match theta_structure(&r) {
        ThetaDescriptor::IsotropicFlag { flag, .. } => assert_eq!(flag, vec![1, 2, 7, 8, 9]),
        other => panic!("{:?}", other),
    }
}

#[test]
fn canonical_and_cayley_real_ranks_agree() {
    for r in all_records().unwrap() {
        let rep = check_record(&r).unwrap();
        let c = rep.checks.iter().find(|c| c.name == "real-rank").unwrap();
        assert!(c.passed, "{}: {}", r.case_id, c.detail);
    }
    assert_eq!(real_rank(&real_so(1, 4)).unwrap(), 1);
}

#[test]
fn genus_and_degree_preconditions() {
    assert!(GenusContext::new(0).is_err());
    assert!(h0_dim(0, GenusContext::new(2).unwrap()).is_err());
    assert!("quat-G2".parse::<MagicalCaseId>().is_err());
}

#[test]
fn theta_and_compact_centralizer_match_case() {
    for r in all_records().unwrap() {
        assert_eq!(r.theta.case_number(), r.case_id.case_number());
        assert!(r.c_real.is_compact(), "{}", r.case_id);
    }
}
