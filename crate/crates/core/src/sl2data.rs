//! Structural data of every magical case: sl2 multiplicities, the graded
//! piece `g_0`, the centralizer `c`, the subalgebra `g(e)` with its
//! exponents, the Cayley real form and the positivity parabolic.

use crate::classify::MagicalCaseId;
use crate::error::{Error, Result};
use crate::partitions::{
    complex_so, complex_sp, real_exceptional, real_sl_c, real_sl_r, real_so, real_su_star, RealFormId, ReductiveType,
};
use crate::rootsys::{
    build_root_system, graded_dimensions, sl2_multiplicities, AlgebraType, DynkinLabels, Family, Sl2Data,
};
use serde::{Deserialize, Serialize};

/// The parabolic subgroup carrying the positive structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThetaDescriptor {
    Borel,
    /// Maximal parabolic of the Shilov boundary.
    ShilovParabolic,
    /// Stabilizer in `SO(p, q)` of the isotropic flag with the listed
    /// dimensions `1 < ... < p-1 < q+1 < ... < p+q`.
    IsotropicFlag {
        p: usize,
        q: usize,
        flag: Vec<usize>,
    },
    /// `Theta = {alpha_1, alpha_2}` in the restricted `F4` system.
    F4Restricted {
        theta: Vec<usize>,
    },
}

impl ThetaDescriptor {
    pub fn case_number(&self) -> u8 {
        match self {
            ThetaDescriptor::Borel => 1,
            ThetaDescriptor::ShilovParabolic => 2,
            ThetaDescriptor::IsotropicFlag { .. } => 3,
            ThetaDescriptor::F4Restricted { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicalRecord {
    pub case_id: MagicalCaseId,
    pub diagram: DynkinLabels,
    pub canonical_real_form: RealFormId,
    pub sl2_data: Sl2Data,
    pub g0_type: ReductiveType,
    pub c_type: ReductiveType,
    pub c_real: ReductiveType,
    pub ge_type: ReductiveType,
    /// Exponents `l_j` of `g(e)`, with repeats.
    pub ge_exponents: Vec<u32>,
    pub m_c: u32,
    pub cayley_real_form: ReductiveType,
    /// Complex dimension of the noncompact part of `g_{0,ss}`.
    pub m0ss_dim: usize,
    /// `z(c)` is one dimensional.
    pub c_has_center: bool,
    pub theta: ThetaDescriptor,
}

impl MagicalRecord {
    pub fn algebra_type(&self) -> AlgebraType {
        self.case_id.algebra_type()
    }

    pub fn dim(&self) -> usize {
        self.algebra_type().dim()
    }
}

fn sl(n: usize) -> ReductiveType {
    crate::partitions::complex_sl(n)
}

fn simple(f: Family) -> ReductiveType {
    ReductiveType::simple(f, AlgebraType::exceptional(f).rank)
}

/// Compact real form of a complex reductive type.
pub fn compact_form(t: &ReductiveType) -> ReductiveType {
    let mut out = ReductiveType::torus(t.torus_rank);
    for f in &t.factors {
        let r = f.rank;
        let label = match f.family {
            Family::A => format!("su({})", r + 1),
            Family::B => format!("so({})", 2 * r + 1),
            Family::C => format!("sp({})", r),
            Family::D => format!("so({})", 2 * r),
            other => format!("{:?}", other).to_lowercase(),
        };
        out = out.plus(ReductiveType::real_simple(f.family, r, &label, 0, false));
    }
    out
}

fn su_star_m(n: usize) -> usize {
    2 * n * n - n - 1
}

/// Builds the record of a magical case from the closed-form tables.
pub fn magical_record(case_id: MagicalCaseId) -> Result<MagicalRecord> {
    let id = case_id.validate()?;
    let ty = id.algebra_type();
    let r = ty.rank;
    let dim = ty.dim();
    let (sl2_pairs, g0_type, c_type, ge_type, ge_exponents, m_c, g0ss_real, m0ss_dim, theta);
    match id {
        MagicalCaseId::Split(_) => {
            let ex = build_root_system(ty)?.exponents();
            let mut pairs: Vec<(u32, usize)> = Vec::new();
            for &m in &ex {
                match pairs.iter_mut().find(|p| p.0 == m) {
                    Some(p) => p.1 += 1,
                    None => pairs.push((m, 1)),
                }
            }
            sl2_pairs = pairs;
            g0_type = ReductiveType::torus(r);
            c_type = ReductiveType::trivial();
            ge_type = match ty.family {
                f @ (Family::E6 | Family::E7 | Family::E8 | Family::F4 | Family::G2) => simple(f),
                f => ReductiveType::simple(f, r),
            };
            ge_exponents = ex;
            m_c = 0;
            g0ss_real = ReductiveType::trivial();
            m0ss_dim = 0;
            theta = ThetaDescriptor::Borel;
        }
        MagicalCaseId::Hermitian(_) | MagicalCaseId::HermitianStar { .. } => {
            let (n0, c, g0ss, real, m0) = match id {
                MagicalCaseId::HermitianStar { n, .. } => {
                    (n * (2 * n + 1), complex_sp(2 * n), sl(2 * n), real_su_star(n), su_star_m(n))
                }
                _ => {
                    let n = r;
                    match ty.family {
                        Family::A => {
                            let n = r.div_ceil(2);
                            (n * n - 1, sl(n), sl(n).plus(sl(n)), real_sl_c(n), n * n - 1)
                        }
                        Family::B => (
                            (n - 1) * (2 * n - 3),
                            complex_so(2 * n - 2),
                            complex_so(2 * n - 1),
                            real_so(1, 2 * n - 2),
                            2 * n - 2,
                        ),
                        Family::C => (n * (n - 1) / 2, complex_so(n), sl(n), real_sl_r(n), n * (n + 1) / 2 - 1),
                        Family::D => (
                            (n - 2) * (2 * n - 3),
                            complex_so(2 * n - 3),
                            complex_so(2 * n - 2),
                            real_so(1, 2 * n - 3),
                            2 * n - 3,
                        ),
                        _ => (52, simple(Family::F4), simple(Family::E6), real_exceptional(Family::E6, -26), 26),
                    }
                }
            };
            let n2 = match (id, ty.family) {
                (MagicalCaseId::HermitianStar { n, .. }, _) => n * (2 * n - 1),
                (_, Family::A) => r.div_ceil(2).pow(2),
                (_, Family::B) => 2 * r - 1,
                (_, Family::C) => r * (r + 1) / 2,
                (_, Family::D) => 2 * r - 2,
                _ => 27,
            };
            sl2_pairs = vec![(0, n0), (1, n2)];
            g0_type = ReductiveType::torus(1).plus(g0ss);
            c_type = c;
            ge_type = ReductiveType::simple(Family::A, 1);
            ge_exponents = vec![1];
            m_c = 1;
            g0ss_real = real;
            m0ss_dim = m0;
            theta = ThetaDescriptor::ShilovParabolic;
        }
        MagicalCaseId::Flag { p, .. } => {
            let big = id.flag_size().unwrap();
            let k = big - 2 * p;
            let mut pairs: Vec<(u32, usize)> = vec![(0, k * (k + 1) / 2)];
            for m in (1..=(2 * p - 3) as u32).step_by(2) {
                pairs.push((m, 1));
            }
            let top = (p - 1) as u32;
            match pairs.iter_mut().find(|q| q.0 == top) {
                Some(q) => q.1 += k + 1,
                None => pairs.push((top, k + 1)),
            }
            pairs.sort();
            sl2_pairs = pairs;
            g0_type = ReductiveType::torus(p - 1).plus(complex_so(k + 2));
            c_type = complex_so(k + 1);
            ge_type = complex_so(2 * p - 1);
            ge_exponents = (1..=(2 * p - 3) as u32).step_by(2).collect();
            m_c = top;
            g0ss_real = real_so(1, k + 1);
            m0ss_dim = k + 1;
            let q = big - p;
            let mut flag: Vec<usize> = (1..p).collect();
            flag.extend(q + 1..=big);
            theta = ThetaDescriptor::IsotropicFlag { p, q, flag };
        }
        MagicalCaseId::Quaternionic(f) => {
            let (n0, n6, c, g0ss, real, m0) = match f {
                Family::F4 => (3, 5, complex_so(3), sl(3), real_sl_r(3), 5),
                Family::E6 => (8, 8, sl(3), sl(3).plus(sl(3)), real_sl_c(3), 8),
                Family::E7 => (21, 14, complex_sp(6), sl(6), real_su_star(3), 14),
                _ => (52, 26, simple(Family::F4), simple(Family::E6), real_exceptional(Family::E6, -26), 26),
            };
            sl2_pairs = vec![(0, n0), (1, 1), (3, n6), (5, 1)];
            g0_type = ReductiveType::torus(2).plus(g0ss);
            c_type = c;
            ge_type = simple(Family::G2);
            ge_exponents = vec![1, 5];
            m_c = 3;
            g0ss_real = real;
            m0ss_dim = m0;
            theta = ThetaDescriptor::F4Restricted { theta: vec![1, 2] };
        }
    }
    let cayley_real_form = ReductiveType::split_torus(ge_type.rank()).plus(g0ss_real);
    let sl2_data = Sl2Data::from_pairs(&sl2_pairs);
    if sl2_data.dim() != dim {
        return Err(Error::Internal(format!("{}: sl2 data has dimension {} not {}", id, sl2_data.dim(), dim)));
    }
    Ok(MagicalRecord {
        case_id: id,
        diagram: id.labels(),
        canonical_real_form: id.canonical_real_form(),
        sl2_data,
        g0_type,
        c_real: compact_form(&c_type),
        c_has_center: c_type.torus_rank > 0,
        c_type,
        ge_type,
        ge_exponents,
        m_c,
        cayley_real_form,
        m0ss_dim,
        theta,
    })
}

/// Objects with a real rank.
pub trait RealRank {
    fn real_rank_checked(&self) -> Result<usize>;
}

impl RealRank for RealFormId {
    fn real_rank_checked(&self) -> Result<usize> {
        Ok(self.validate()?.real_rank())
    }
}

impl RealRank for ReductiveType {
    fn real_rank_checked(&self) -> Result<usize> {
        if let Some(f) = self.factors.iter().find(|f| f.real.is_none()) {
            return Err(Error::InvalidType(format!("factor {} has no real form", f.complex_name())));
        }
        Ok(self.real_rank())
    }
}

pub fn real_rank<T: RealRank + ?Sized>(x: &T) -> Result<usize> {
    x.real_rank_checked()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordReport {
    pub case_id: MagicalCaseId,
    pub checks: Vec<RecordCheck>,
}

impl RecordReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&RecordCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Cross-checks a record against itself and against the grading of its
/// diagram.
pub fn check_record(r: &MagicalRecord) -> Result<RecordReport> {
    let ty = r.algebra_type();
    let dim = ty.dim();
    let mut checks = Vec::new();
    let mut push =
        |name: &str, passed: bool, detail: String| checks.push(RecordCheck { name: name.into(), passed, detail });

    let sum: usize = r.sl2_data.pairs().iter().filter(|p| p.0 > 0).map(|&(m, n)| n * (2 * m as usize + 1)).sum();
    let rhs = r.c_type.dim() + sum;
    push("dim-identity", rhs == dim, format!("{} = {} + {}", dim, r.c_type.dim(), sum));

    let canon = real_rank(&r.canonical_real_form)?;
    let cay = real_rank(&r.cayley_real_form)?;
    push(
        "real-rank",
        canon == cay,
        format!("{} has rank {}, {} has rank {}", r.canonical_real_form, canon, r.cayley_real_form, cay),
    );

    let rs = build_root_system(ty)?;
    let gd = graded_dimensions(&rs, &r.diagram)?;
    let computed = sl2_multiplicities(&gd)?;
    push("sl2-data", computed == r.sl2_data, format!("{:?} vs {:?}", computed.pairs(), r.sl2_data.pairs()));

    push("g0-dim", gd.get(0) == r.g0_type.dim(), format!("grading {} vs {}", gd.get(0), r.g0_type.dim()));

    push(
        "n0-is-dim-c",
        r.sl2_data.n0() == r.c_type.dim(),
        format!("n_0 = {}, dim c = {}", r.sl2_data.n0(), r.c_type.dim()),
    );

    let ge_sum: usize = r.ge_exponents.iter().map(|&l| 2 * l as usize + 1).sum();
    push("ge-dim", ge_sum == r.ge_type.dim(), format!("sum (2l+1) = {}, dim g(e) = {}", ge_sum, r.ge_type.dim()));

    let ge_ex = match r.ge_type.factors.as_slice() {
        [f] if r.ge_type.torus_rank == 0 => {
            let t = AlgebraType::new(f.family, f.rank)?;
            build_root_system(t)?.exponents()
        }
        _ => Vec::new(),
    };
    let mut mine = r.ge_exponents.clone();
    mine.sort();
    push("ge-exponents", ge_ex == mine, format!("{:?} vs {:?}", ge_ex, mine));

    let c_ok = r.c_real.is_compact() && r.c_real.complexified() == r.c_type;
    push("c-compact", c_ok, format!("{} complexifies to {}", r.c_real, r.c_type));

    let cx = r.cayley_real_form.complexified();
    push("cayley-complexifies-to-g0", cx == r.g0_type, format!("{} vs {}", cx, r.g0_type));

    let big: Vec<u32> = r.sl2_data.pairs().iter().filter(|p| p.0 > 0 && p.1 > 1).map(|p| p.0).collect();
    let mc_ok = match r.case_id.case_number() {
        1 => r.m_c == 0,
        _ => big == vec![r.m_c],
    };
    push("m-c", mc_ok, format!("m_c = {}, repeated m_j = {:?}", r.m_c, big));

    let lhs = 2 * (r.m_c as usize + 1) * r.m0ss_dim + r.c_type.dim() + ge_sum;
    push(
        "deformation-identity",
        lhs == dim + r.m0ss_dim,
        format!("2({}+1)*{} + ({} - {}) + {} vs {}", r.m_c, r.m0ss_dim, r.c_type.dim(), r.m0ss_dim, ge_sum, dim),
    );

    if r.case_id.case_number() == 2 {
        let n2 = r.sl2_data.n(2);
        push(
            "hermitian-n2",
            2 * n2 == dim - gd.get(0),
            format!("n_2 = {}, (dim g - dim g_0)/2 = {}", n2, (dim - gd.get(0)) / 2),
        );
    }

    push("theta-case", r.theta.case_number() == r.case_id.case_number(), format!("{:?}", r.theta));

    Ok(RecordReport { case_id: r.case_id, checks })
}

pub fn theta_structure(r: &MagicalRecord) -> ThetaDescriptor {
    r.theta.clone()
}

/// Records for every catalog case.
pub fn all_records() -> Result<Vec<MagicalRecord>> {
    crate::classify::magical_catalog().into_iter().map(|e| magical_record(e.case_id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(s: &str) -> MagicalRecord {
        magical_record(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn quaternionic_f4() {
        let r = rec("quat-F4");
        assert_eq!(r.sl2_data.pairs(), vec![(0, 3), (1, 1), (3, 5), (5, 1)]);
        assert_eq!(r.c_type, complex_so(3));
        assert_eq!(r.ge_exponents, vec![1, 5]);
        assert_eq!(r.m_c, 3);
        assert_eq!(r.cayley_real_form.to_string(), "R^2 + sl(3,R)");
        assert_eq!(r.theta, ThetaDescriptor::F4Restricted { theta: vec![1, 2] });
    }

    #[test]
    fn hermitian_a5() {
        let r = rec("hermitian-A:5");
        assert_eq!((r.sl2_data.n0(), r.sl2_data.n(2)), (8, 9));
        assert_eq!(r.c_type, sl(3));
        assert_eq!(r.cayley_real_form.to_string(), "R + sl(3,C)");
    }

    #[test]
    fn flag_b4_p3() {
        let r = rec("flag-B:4,3");
        assert_eq!(r.sl2_data.pairs(), vec![(0, 6), (1, 1), (2, 4), (3, 1)]);
        assert_eq!(r.theta, ThetaDescriptor::IsotropicFlag { p: 3, q: 6, flag: vec![1, 2, 7, 8, 9] });
    }

    #[test]
    fn real_ranks() {
        assert_eq!(real_rank(&RealFormId::SlR(5)).unwrap(), 4);
        assert_eq!(real_rank(&RealFormId::SuStar(6)).unwrap(), 2);
        let t = ReductiveType::split_torus(2).plus(real_sl_r(3));
        assert_eq!(real_rank(&t).unwrap(), 4);
        assert!(real_rank(&sl(3)).is_err());
    }

    #[test]
    fn every_record_checks() {
        for r in all_records().unwrap() {
            let rep = check_record(&r).unwrap();
            assert!(rep.passed(), "{}: {:?}", r.case_id, rep.failures());
        }
    }
}
