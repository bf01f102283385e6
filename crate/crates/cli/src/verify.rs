//! Verification suites run by `magical verify`.

use magical::cayley::{cayley_domain, dimension_consistency, GenusContext};
use magical::classify::{closed_form_magical, enumerate_magical, magical_catalog, magical_criterion, MagicalCaseId};
use magical::matlie::{
    check_cayley, chevalley_algebra, classical_algebra, is_magical_oracle, sigma_e, triple_centralizer,
    triple_from_diagram, triple_from_partition, Classical, DIAGRAM_RETRIES,
};
use magical::partitions::{complex_partition, real_orbits, validate_classical_orbit, OrbitTag, Sign};
use magical::rootsys::{build_root_system, graded_dimensions, root_poset};
use magical::sl2data::{all_records, check_record};
use magical::{AlgebraType, DynkinLabels, Family, Partition, RealFormId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Tables,
    Oracle,
    Identities,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Collector {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite.into(), name: name.into(), passed, detail: detail.into() });
    }

    fn result<T>(&mut self, name: &str, r: magical::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(name, false, e.to_string());
                None
            }
        }
    }
}

fn tables(cap: usize, out: &mut Vec<Check>) {
    let mut c = Collector { suite: "tables", checks: Vec::new() };
    let mut forms = Vec::new();
    for n in 2..=cap {
        for kind in [Classical::Sl, Classical::So, Classical::Sp] {
            forms.extend(RealFormId::forms_of(kind, n));
        }
    }
    let mut bad = Vec::new();
    for &rf in &forms {
        match (enumerate_magical(rf, cap), closed_form_magical(rf)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => bad.push(rf.to_string()),
        }
    }
    c.push(
        "classification",
        bad.is_empty(),
        if bad.is_empty() { format!("{} classical real forms of size <= {}", forms.len(), cap) } else { bad.join(" ") },
    );
    if let Some(records) = c.result("records", all_records()) {
        for r in &records {
            if let Some(rep) = c.result("record", check_record(r)) {
                for k in rep.checks.iter().filter(|k| k.name == "sl2-data" || k.name == "g0-dim") {
                    c.push(format!("{} {}", r.case_id, k.name), k.passed, k.detail.clone());
                }
            }
        }
    }
    let f4 = build_root_system(AlgebraType::exceptional(Family::F4)).unwrap();
    let poset = root_poset(&f4, &DynkinLabels(vec![0, 0, 2, 2])).unwrap();
    let mut hist: BTreeMap<i64, usize> = BTreeMap::new();
    for n in &poset.nodes {
        *hist.entry(n.weight).or_default() += 1;
    }
    let want: BTreeMap<i64, usize> = [(0, 3), (2, 7), (4, 6), (6, 6), (8, 1), (10, 1)].into_iter().collect();
    c.push("F4 poset weights", hist == want, format!("{:?}", hist));
    let e8 = build_root_system(AlgebraType::exceptional(Family::E8)).unwrap();
    let gd = graded_dimensions(&e8, &MagicalCaseId::Quaternionic(Family::E8).labels()).unwrap();
    c.push("E8 grading", gd.get(0) == 80 && gd.get(10) == 1, format!("g0 = {}, g10 = {}", gd.get(0), gd.get(10)));
    out.extend(c.checks);
}

fn identities(out: &mut Vec<Check>) {
    let mut c = Collector { suite: "identities", checks: Vec::new() };
    let Some(records) = c.result("records", all_records()) else {
        out.extend(c.checks);
        return;
    };
    for r in &records {
        if let Some(rep) = c.result("record", check_record(r)) {
            let fails: Vec<String> = rep.failures().iter().map(|k| format!("{}: {}", k.name, k.detail)).collect();
            c.push(format!("{} record", r.case_id), fails.is_empty(), fails.join("; "));
        }
        let d = dimension_consistency(r);
        c.push(format!("{} cayley dimension", r.case_id), d.holds(), format!("{} = {}", d.lhs, d.rhs));
        if r.case_id.case_number() == 1 {
            let ok = (2..=5).all(|g| {
                cayley_domain(r, GenusContext::new(g).unwrap()).is_ok_and(|d| d.total_dim == (g - 1) * r.dim())
            });
            c.push(format!("{} hitchin base", r.case_id), ok, "total = (g-1) dim g for g = 2..5");
        }
    }
    out.extend(c.checks);
}

fn complex_tag(rf: RealFormId, o: &magical::RealOrbit) -> Option<OrbitTag> {
    match rf {
        RealFormId::SoStar(_) => Some(if o.diagram.rows()[0].1 == Sign::Plus { OrbitTag::I } else { OrbitTag::II }),
        _ => o.tag,
    }
}

fn criterion_says(kind: Classical, n: usize, p: &Partition, tag: Option<OrbitTag>) -> magical::Result<bool> {
    for rf in RealFormId::forms_of(kind, n) {
        for o in real_orbits(rf)? {
            if complex_partition(rf, &o.diagram) == *p
                && (tag.is_none() || complex_tag(rf, &o) == tag)
                && magical_criterion(rf, &o.diagram)?.magical
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn oracle(seed: u64, out: &mut Vec<Check>) {
    let mut c = Collector { suite: "oracle", checks: Vec::new() };
    for (kind, n) in [
        (Classical::Sl, 2),
        (Classical::Sl, 3),
        (Classical::Sl, 4),
        (Classical::Sl, 5),
        (Classical::Sl, 6),
        (Classical::So, 3),
        (Classical::So, 4),
        (Classical::So, 5),
        (Classical::So, 6),
        (Classical::Sp, 2),
        (Classical::Sp, 4),
        (Classical::Sp, 6),
    ] {
        let Some(model) = c.result("model", classical_algebra(kind, n)) else { continue };
        for p in Partition::all(n) {
            let Ok(v) = validate_classical_orbit(kind, n, &p) else { continue };
            if !v.valid || p.largest() == 1 {
                continue;
            }
            let tags = if v.very_even { vec![Some(OrbitTag::I), Some(OrbitTag::II)] } else { vec![None] };
            for tag in tags {
                let name = format!("{} {}{}", model.name, p, tag.map_or(String::new(), |t| format!(" {:?}", t)));
                let Some(t) = c.result(&name, triple_from_partition(&model, &p, tag)) else { continue };
                let Some(rep) = c.result(&name, is_magical_oracle(&model, &t)) else { continue };
                let Some(crit) = c.result(&name, criterion_says(kind, n, &p, tag)) else { continue };
                c.push(name.clone(), rep.magical == crit, format!("oracle {}, criterion {}", rep.magical, crit));
                if rep.magical {
                    if let Some(s) = c.result(&name, sigma_e(&model, &t)) {
                        let chk = check_cayley(&model, &s, &t);
                        c.push(format!("{} cayley", name), chk.passed(), format!("{:?}", chk));
                    }
                }
            }
        }
    }
    for e in magical_catalog().into_iter().filter(|e| !e.case_id.algebra_type().is_classical()) {
        let name = e.case_id.to_string();
        let Some(model) = c.result(&name, chevalley_algebra(e.case_id.algebra_type())) else { continue };
        let Some(t) = c.result(&name, triple_from_diagram(&model, &e.labels, seed, DIAGRAM_RETRIES)) else { continue };
        let Some(rep) = c.result(&name, is_magical_oracle(&model, &t)) else { continue };
        let dim_c = triple_centralizer(&model, &t).map(|v| v.len()).unwrap_or(usize::MAX);
        let want = magical::sl2data::magical_record(e.case_id).map(|r| r.c_type.dim()).unwrap_or(0);
        c.push(name, rep.magical && dim_c == want, format!("magical {}, dim c = {}", rep.magical, dim_c));
    }
    out.extend(c.checks);
}

pub fn run(suite: Suite, cap: usize, seed: u64) -> VerifyPayload {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(cap, &mut checks);
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        identities(&mut checks);
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        oracle(seed, &mut checks);
    }
    VerifyPayload { suite, passed: checks.iter().all(|c| c.passed), checks }
}
