use magical::classify::*;
use magical::matlie::Classical;
use magical::partitions::*;
use magical::rootsys::{build_root_system, graded_dimensions, sl2_multiplicities};

fn all_forms(cap: usize) -> Vec<RealFormId> {
    let mut out = Vec::new();
    for n in 2..=cap {
        for kind in [Classical::Sl, Classical::So, Classical::Sp] {
            out.extend(RealFormId::forms_of(kind, n));
        }
    }
    out
}

#[test]
fn enumeration_matches_closed_form() {
    for rf in all_forms(DEFAULT_CAP) {
        let got = enumerate_magical(rf, DEFAULT_CAP).unwrap();
        let want = closed_form_magical(rf).unwrap();
        assert_eq!(got, want, "{}", rf);
    }
}

#[test]
fn criterion_symmetric_under_signature_swap() {
    for rf in all_forms(10) {
        let swapped = match rf {
            RealFormId::Su(p, q) => RealFormId::Su(q, p),
            RealFormId::So(p, q) => RealFormId::So(q, p),
            _ => continue,
        };
        for o in real_orbits(rf).unwrap() {
            let a = magical_criterion(rf, &o.diagram).unwrap();
            let mut flipped = o.diagram.flip();
            if matches!(rf, RealFormId::So(..)) {
                let rows = flipped.rows().iter().map(|&(k, s)| (k, if k % 2 == 0 { Sign::Plus } else { s })).collect();
                flipped = SignedYoungDiagram::new(rows).unwrap();
            }
            let b = magical_criterion(swapped, &flipped).unwrap();
            assert_eq!(a.criterion_value, b.criterion_value);
            assert_eq!(a.magical, b.magical);
        }
    }
}

#[test]
fn kostant_rallis_identity() {
    for rf in all_forms(10) {
        for o in real_orbits(rf).unwrap() {
            let r = magical_criterion(rf, &o.diagram).unwrap();
            assert_eq!(r.twice_h_cap_v, r.dim_v as i64 - r.delta);
            assert_eq!(r.criterion_value, 2 * r.dim_c as i64 - r.twice_h_cap_v);
        }
    }
}

#[test]
fn magical_diagrams_map_to_catalog_labels() {
    for e in magical_catalog() {
        let Some((part, tag)) = e.case_id.complex_orbit() else { continue };
        let ty = e.case_id.algebra_type();
        let labels = weighted_dynkin_from_partition(ty, &part, tag).unwrap();
        assert_eq!(labels, e.labels, "{}", e.case_id);
        let o = e.real_orbit.unwrap();
        let r = magical_criterion(e.canonical_real_form, &o.diagram).unwrap();
        assert!(r.magical, "{} {}", e.case_id, o);
    }
}

#[test]
fn every_magical_orbit_is_even_and_in_catalog_shape() {
    for rf in all_forms(12) {
        let Ok(ty) = complex_type(rf) else { continue };
        for o in enumerate_magical(rf, 12).unwrap() {
            let part = complex_partition(rf, &o.diagram);
            let l = weighted_dynkin_from_partition(ty, &part, o.tag).unwrap();
            assert!(l.is_even(), "{} {}", rf, o);
            let rs = build_root_system(ty).unwrap();
            sl2_multiplicities(&graded_dimensions(&rs, &l).unwrap()).unwrap();
        }
    }
}
