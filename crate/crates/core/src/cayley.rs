//! Bookkeeping for the Cayley correspondence: the Cayley group, twisting
//! degrees, Riemann-Roch dimensions and component counts.

use crate::classify::MagicalCaseId;
use crate::error::{Error, Result};
use crate::partitions::ReductiveType;
use crate::rootsys::Family;
use crate::sl2data::MagicalRecord;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusContext {
    genus: usize,
}

impl GenusContext {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidArgument(format!("genus {} < 2", genus)));
        }
        Ok(GenusContext { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
}

/// `h^0(K^d)` on a curve of genus `g`.
pub fn h0_dim(d: usize, ctx: GenusContext) -> Result<usize> {
    let g = ctx.genus;
    match d {
        0 => Err(Error::InvalidArgument("degree must be at least 1".into())),
        1 => Ok(g),
        _ => Ok((2 * d - 1) * (g - 1)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyDomainDescriptor {
    /// `(R^+)^{rk g(e)}` times the real form of `G_{0,ss}`.
    pub cayley_group: ReductiveType,
    pub twist_degree: u32,
    pub differential_degrees: Vec<u32>,
    pub m0ss_dim: usize,
    /// `h^0(K^{l_j + 1})` for each degree.
    pub differential_dims: Vec<usize>,
    /// Sum of `differential_dims`.
    pub total_dim: usize,
}

pub fn cayley_domain(r: &MagicalRecord, ctx: GenusContext) -> Result<CayleyDomainDescriptor> {
    let mut degrees: Vec<u32> = r.ge_exponents.iter().map(|l| l + 1).collect();
    degrees.sort();
    let dims = degrees.iter().map(|&d| h0_dim(d as usize, ctx)).collect::<Result<Vec<_>>>()?;
    Ok(CayleyDomainDescriptor {
        cayley_group: r.cayley_real_form.clone(),
        twist_degree: r.m_c + 1,
        total_dim: dims.iter().sum(),
        differential_degrees: degrees,
        m0ss_dim: r.m0ss_dim,
        differential_dims: dims,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionIdentity {
    pub lhs: i64,
    pub rhs: i64,
}

impl DimensionIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `dim g = 2(m_c + 1) dim m_{0,ss} + (dim c - dim m_{0,ss}) + sum (2 l_j + 1)`.
pub fn dimension_consistency(r: &MagicalRecord) -> DimensionIdentity {
    let m0 = r.m0ss_dim as i64;
    let ge: i64 = r.ge_exponents.iter().map(|&l| 2 * l as i64 + 1).sum();
    DimensionIdentity { lhs: r.dim() as i64, rhs: 2 * (r.m_c as i64 + 1) * m0 + (r.c_type.dim() as i64 - m0) + ge }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupForm {
    SimplyConnected,
    Adjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ComponentCount {
    Known { count: usize },
    Unknown { expected: Option<usize> },
}

impl fmt::Display for ComponentCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentCount::Known { count } => write!(f, "{}", count),
            ComponentCount::Unknown { expected: Some(e) } => write!(f, "unknown (expected {})", e),
            ComponentCount::Unknown { expected: None } => write!(f, "unknown"),
        }
    }
}

/// Number of components of the image of the Cayley map.
pub fn component_count(r: &MagicalRecord, form: GroupForm) -> ComponentCount {
    use ComponentCount::*;
    match (r.case_id, form) {
        (MagicalCaseId::Quaternionic(Family::F4), _) => Known { count: 3 },
        (MagicalCaseId::Quaternionic(Family::E6), GroupForm::SimplyConnected) => Known { count: 1 },
        (MagicalCaseId::Quaternionic(Family::E6), GroupForm::Adjoint) => Known { count: 3 },
        (MagicalCaseId::Quaternionic(Family::E7), GroupForm::SimplyConnected) => Known { count: 1 },
        (MagicalCaseId::Quaternionic(Family::E7), GroupForm::Adjoint) => Known { count: 2 },
        (MagicalCaseId::Quaternionic(Family::E8), _) => Unknown { expected: Some(1) },
        _ => Unknown { expected: None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2data::magical_record;

    fn rec(s: &str) -> MagicalRecord {
        magical_record(s.parse().unwrap()).unwrap()
    }

    fn ctx(g: usize) -> GenusContext {
        GenusContext::new(g).unwrap()
    }

    #[test]
    fn riemann_roch() {
        assert_eq!(h0_dim(2, ctx(2)).unwrap(), 3);
        assert_eq!(h0_dim(1, ctx(3)).unwrap(), 3);
        assert_eq!(h0_dim(6, ctx(3)).unwrap(), 22);
        assert!(h0_dim(0, ctx(2)).is_err());
        assert!(GenusContext::new(1).is_err());
    }

    #[test]
    fn domains() {
        let g2 = cayley_domain(&rec("split-G2"), ctx(2)).unwrap();
        assert_eq!((g2.differential_degrees, g2.differential_dims), (vec![2, 6], vec![3, 11]));
        let f4 = cayley_domain(&rec("quat-F4"), ctx(2)).unwrap();
        assert_eq!((f4.twist_degree, f4.differential_degrees), (4, vec![2, 6]));
        let b4 = cayley_domain(&rec("flag-B:4,4"), ctx(2)).unwrap();
        assert!(b4.differential_degrees.contains(&4));
    }

    #[test]
    fn identities() {
        let f4 = dimension_consistency(&rec("quat-F4"));
        assert_eq!((f4.lhs, f4.rhs), (52, 52));
        assert!(dimension_consistency(&rec("flag-B:4,3")).holds());
    }

    #[test]
    fn components() {
        let f = |s: &str, g| component_count(&rec(s), g).to_string();
        assert_eq!(f("quat-F4", GroupForm::Adjoint), "3");
        assert_eq!(f("quat-E7", GroupForm::Adjoint), "2");
        assert_eq!(f("quat-E8", GroupForm::SimplyConnected), "unknown (expected 1)");
    }
}
