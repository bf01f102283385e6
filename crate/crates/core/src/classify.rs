//! Magical orbits: the dimension criterion for classical real forms, the
//! exhaustive enumeration, the closed-form list, partition to weighted
//! Dynkin diagram conversion and the catalog of magical cases.

use crate::error::{Error, Result};
use crate::matlie::Classical;
use crate::partitions::{
    classical_centralizer, complex_partition, matrix_kind, real_orbits, real_triple_centralizer,
    validate_classical_orbit, OrbitTag, Partition, RealFormId, RealOrbit, Sign, SignedYoungDiagram,
};
use crate::rootsys::{AlgebraType, DynkinLabels, Family};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default bound on the matrix size of enumerated real forms.
pub const DEFAULT_CAP: usize = 18;

/// Enumeration cap, overridable through `MAGICAL_CAP`.
pub fn cap_from_env() -> usize {
    std::env::var("MAGICAL_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    /// `2 dim c - dim V(e) - dim h + dim m`, always an integer.
    pub criterion_value: i64,
    pub compact_centralizer: bool,
    pub magical: bool,
    pub dim_g: usize,
    pub dim_v: usize,
    pub dim_c: usize,
    /// `dim m - dim h`.
    pub delta: i64,
    /// `2 dim(h ∩ V)` from the Kostant–Rallis formula `dim V + dim h - dim m`.
    pub twice_h_cap_v: i64,
    pub centralizer: String,
}

/// Evaluates the magical criterion on a real nilpotent orbit.
pub fn magical_criterion(rf: RealFormId, d: &SignedYoungDiagram) -> Result<CriterionReport> {
    let (kind, n) =
        rf.complex_matrix().ok_or_else(|| Error::Unsupported(format!("{} is exceptional; use the oracle", rf)))?;
    let cr = real_triple_centralizer(rf, d)?;
    let part = complex_partition(rf, d);
    let (dim_v, c) = classical_centralizer(kind, n, &part)?;
    let dim_c = cr.dim();
    if dim_c != c.dim() {
        return Err(Error::Internal(format!(
            "real centralizer {} has dimension {} but c has dimension {}",
            cr,
            dim_c,
            c.dim()
        )));
    }
    let dim_g = rf.dim();
    let delta = rf.delta();
    let dim_h = (dim_g as i64 - delta) / 2;
    let dim_m = dim_g as i64 - dim_h;
    let criterion_value = 2 * dim_c as i64 - dim_v as i64 - dim_h + dim_m;
    let compact = cr.is_compact();
    Ok(CriterionReport {
        criterion_value,
        compact_centralizer: compact,
        magical: compact && criterion_value == 0,
        dim_g,
        dim_v,
        dim_c,
        delta,
        twice_h_cap_v: dim_v as i64 + dim_h - dim_m,
        centralizer: cr.real_label(),
    })
}

/// Matrix size of the complexification, which the cap bounds.
pub fn form_size(rf: RealFormId) -> Result<usize> {
    rf.complex_matrix().map(|(_, n)| n).ok_or_else(|| Error::Unsupported(format!("{} is exceptional", rf)))
}

/// Every magical real orbit of a classical real form, by exhaustive search.
pub fn enumerate_magical(rf: RealFormId, cap: usize) -> Result<Vec<RealOrbit>> {
    let size = form_size(rf)?;
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut out = Vec::new();
    for o in real_orbits(rf)? {
        if magical_criterion(rf, &o.diagram)?.magical {
            out.push(o);
        }
    }
    out.sort();
    Ok(out)
}

fn rows(spec: &[(usize, Sign, usize)]) -> SignedYoungDiagram {
    let mut v = Vec::new();
    for &(k, s, m) in spec {
        v.extend(std::iter::repeat_n((k, s), m));
    }
    SignedYoungDiagram::new(v).unwrap()
}

/// The closed-form list of magical real orbits of a classical real form.
pub fn closed_form_magical(rf: RealFormId) -> Result<Vec<RealOrbit>> {
    use RealFormId::*;
    use Sign::{Minus, Plus};
    form_size(rf)?;
    let mut out: Vec<RealOrbit> = Vec::new();
    let both = |k: usize, m: usize| [rows(&[(k, Plus, m)]), rows(&[(k, Minus, m)])];
    match rf {
        SlR(n) => {
            let d = SignedYoungDiagram::unsigned(&Partition::single(n));
            if n % 2 == 0 {
                out.push(RealOrbit::new(d.clone(), Some(OrbitTag::I)));
                out.push(RealOrbit::new(d, Some(OrbitTag::II)));
            } else {
                out.push(RealOrbit::new(d, None));
            }
        }
        Su(p, q) if p == q => out.extend(both(2, p).map(|d| RealOrbit::new(d, None))),
        SoStar(n) if (n / 2) % 2 == 0 => out.extend(both(2, n / 4).map(|d| RealOrbit::new(d, None))),
        SpR(n) => {
            out.extend(both(n, 1).map(|d| RealOrbit::new(d, None)));
            out.extend(both(2, n / 2).map(|d| RealOrbit::new(d, None)));
        }
        So(p, q) => {
            if p.abs_diff(q) == 1 {
                let s = if p > q { Plus } else { Minus };
                out.push(RealOrbit::new(rows(&[(p + q, s, 1)]), None));
            }
            let m = p.min(q);
            if m >= 2 {
                let short = p.abs_diff(q) + 1;
                for s in [Plus, Minus] {
                    let d = rows(&[(2 * m - 1, s, 1), (1, s.flip(), short)]);
                    if d.signature() == (p, q) {
                        out.push(RealOrbit::new(d, None));
                    }
                }
            }
        }
        _ => {}
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Eigenvalues of the neutral element for a partition, in decreasing order.
pub fn h_eigenvalues(p: &Partition) -> Vec<i64> {
    let mut ev = Vec::new();
    for k in p.rows() {
        let k = k as i64;
        ev.extend((0..k).map(|j| k - 1 - 2 * j));
    }
    ev.sort_by(|a, b| b.cmp(a));
    ev
}

/// Weighted Dynkin diagram of a classical nilpotent orbit. The tag picks
/// between the two very even orbits of type D and is ignored otherwise.
pub fn weighted_dynkin_from_partition(ty: AlgebraType, p: &Partition, tag: Option<OrbitTag>) -> Result<DynkinLabels> {
    let (kind, n) = matrix_kind(ty)?;
    let v = validate_classical_orbit(kind, n, p)?;
    if !v.valid {
        return Err(Error::InvalidOrbit(v.reason));
    }
    let ev = h_eigenvalues(p);
    let r = ty.rank;
    let labels: Vec<i64> = match ty.family {
        Family::A => ev.windows(2).map(|w| w[0] - w[1]).collect(),
        _ => {
            let eps = &ev[..r];
            let mut l: Vec<i64> = eps.windows(2).map(|w| w[0] - w[1]).collect();
            match ty.family {
                Family::B => l.push(eps[r - 1]),
                Family::C => l.push(2 * eps[r - 1]),
                _ => {
                    l.push(eps[r - 2] + eps[r - 1]);
                    if v.very_even && tag == Some(OrbitTag::II) {
                        l.swap(r - 2, r - 1);
                    }
                }
            }
            l
        }
    };
    DynkinLabels::new(labels)
}

/// One of the four families of magical cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum MagicalCaseId {
    /// Principal orbit; canonical real form split.
    Split(AlgebraType),
    /// Hermitian tube type: `A_{2n-1}`, `B_n`, `C_n`, `D_n` (first node) or `E7`.
    Hermitian(AlgebraType),
    /// `D_{2n}` with the label on a fork node; canonical real form `so*(4n)`.
    HermitianStar { n: usize, tag: OrbitTag },
    /// `so(p, N - p)` in type `B_n` or `D_n`.
    Flag { family: Family, n: usize, p: usize },
    /// Quaternionic case of `F4`, `E6`, `E7`, `E8`.
    Quaternionic(Family),
}

impl MagicalCaseId {
    pub fn case_number(&self) -> u8 {
        match self {
            MagicalCaseId::Split(_) => 1,
            MagicalCaseId::Hermitian(_) | MagicalCaseId::HermitianStar { .. } => 2,
            MagicalCaseId::Flag { .. } => 3,
            MagicalCaseId::Quaternionic(_) => 4,
        }
    }

    pub fn algebra_type(&self) -> AlgebraType {
        match *self {
            MagicalCaseId::Split(t) | MagicalCaseId::Hermitian(t) => t,
            MagicalCaseId::HermitianStar { n, .. } => AlgebraType::d(2 * n),
            MagicalCaseId::Flag { family: Family::B, n, .. } => AlgebraType::b(n),
            MagicalCaseId::Flag { n, .. } => AlgebraType::d(n),
            MagicalCaseId::Quaternionic(f) => AlgebraType::exceptional(f),
        }
    }

    /// Size `N` of the orthogonal representation for flag cases.
    pub fn flag_size(&self) -> Option<usize> {
        match *self {
            MagicalCaseId::Flag { family: Family::B, n, .. } => Some(2 * n + 1),
            MagicalCaseId::Flag { n, .. } => Some(2 * n),
            _ => None,
        }
    }

    pub fn validate(self) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidType(m));
        match self {
            MagicalCaseId::Split(t) => AlgebraType::new(t.family, t.rank).map(|_| self),
            MagicalCaseId::Hermitian(t) => {
                AlgebraType::new(t.family, t.rank)?;
                let ok = match t.family {
                    Family::A => t.rank % 2 == 1 && t.rank >= 3,
                    Family::B | Family::C => t.rank >= 2,
                    Family::D => t.rank >= 4,
                    Family::E7 => true,
                    _ => false,
                };
                if ok {
                    Ok(self)
                } else {
                    bad(format!("{} has no hermitian tube type magical case", t))
                }
            }
            MagicalCaseId::HermitianStar { n, .. } if n >= 2 => Ok(self),
            MagicalCaseId::HermitianStar { n, .. } => bad(format!("D:{} has no fork case", 2 * n)),
            MagicalCaseId::Flag { family, n, p } => {
                let ok = match family {
                    Family::B => n >= 2 && (2..=n).contains(&p),
                    Family::D => n >= 4 && (2..n).contains(&p),
                    _ => false,
                };
                if ok {
                    Ok(self)
                } else {
                    bad(format!("flag case {:?}:{},{} out of range", family, n, p))
                }
            }
            MagicalCaseId::Quaternionic(Family::F4 | Family::E6 | Family::E7 | Family::E8) => Ok(self),
            MagicalCaseId::Quaternionic(f) => bad(format!("{:?} has no quaternionic case", f)),
        }
    }

    /// Weighted Dynkin diagram of the case.
    pub fn labels(&self) -> DynkinLabels {
        let ty = self.algebra_type();
        let r = ty.rank;
        let mut l = vec![0i64; r];
        let mut set = |nodes: &[usize]| {
            for &i in nodes {
                l[i - 1] = 2;
            }
        };
        match *self {
            MagicalCaseId::Split(_) => set(&(1..=r).collect::<Vec<_>>()),
            MagicalCaseId::Hermitian(t) => match t.family {
                Family::A => set(&[r.div_ceil(2)]),
                Family::B | Family::D => set(&[1]),
                Family::C => set(&[r]),
                _ => set(&[7]),
            },
            MagicalCaseId::HermitianStar { tag, .. } => set(&[if tag == OrbitTag::I { r } else { r - 1 }]),
            MagicalCaseId::Flag { p, .. } => set(&(1..p).collect::<Vec<_>>()),
            MagicalCaseId::Quaternionic(f) => match f {
                Family::F4 => set(&[3, 4]),
                Family::E6 => set(&[3, 4]),
                Family::E7 => set(&[1, 2]),
                _ => set(&[7, 8]),
            },
        }
        DynkinLabels(l)
    }

    /// Canonical real form.
    pub fn canonical_real_form(&self) -> RealFormId {
        use RealFormId::*;
        let ty = self.algebra_type();
        let n = ty.rank;
        match *self {
            MagicalCaseId::Split(t) => match t.family {
                Family::A => SlR(n + 1),
                Family::B => So(n, n + 1),
                Family::C => SpR(2 * n),
                Family::D => So(n, n),
                f => Exceptional(f, n as i64),
            },
            MagicalCaseId::Hermitian(t) => match t.family {
                Family::A => Su(n.div_ceil(2), n.div_ceil(2)),
                Family::B => So(2, 2 * n - 1),
                Family::C => SpR(2 * n),
                Family::D => So(2, 2 * n - 2),
                _ => Exceptional(Family::E7, -25),
            },
            MagicalCaseId::HermitianStar { n, .. } => SoStar(4 * n),
            MagicalCaseId::Flag { p, .. } => So(p, self.flag_size().unwrap() - p),
            MagicalCaseId::Quaternionic(f) => Exceptional(
                f,
                match f {
                    Family::F4 => 4,
                    Family::E6 => 2,
                    Family::E7 => -5,
                    _ => -24,
                },
            ),
        }
    }

    /// Magical real orbit of the canonical real form, for classical types.
    pub fn real_orbit(&self) -> Option<RealOrbit> {
        use Sign::{Minus, Plus};
        let ty = self.algebra_type();
        let n = ty.rank;
        let d = match *self {
            MagicalCaseId::Split(t) => match t.family {
                Family::A => {
                    let d = SignedYoungDiagram::unsigned(&Partition::single(n + 1));
                    let tag = (n % 2 == 1).then_some(OrbitTag::I);
                    return Some(RealOrbit::new(d, tag));
                }
                Family::B => rows(&[(2 * n + 1, Minus, 1)]),
                Family::C => rows(&[(2 * n, Plus, 1)]),
                Family::D => rows(&[(2 * n - 1, Plus, 1), (1, Minus, 1)]),
                _ => return None,
            },
            MagicalCaseId::Hermitian(t) => match t.family {
                Family::A => rows(&[(2, Plus, n.div_ceil(2))]),
                Family::B => rows(&[(3, Plus, 1), (1, Minus, 2 * n - 2)]),
                Family::C => rows(&[(2, Plus, n)]),
                Family::D => rows(&[(3, Plus, 1), (1, Minus, 2 * n - 3)]),
                _ => return None,
            },
            MagicalCaseId::HermitianStar { n, tag } => rows(&[(2, if tag == OrbitTag::I { Plus } else { Minus }, n)]),
            MagicalCaseId::Flag { p, .. } => {
                let big = self.flag_size().unwrap();
                rows(&[(2 * p - 1, Plus, 1), (1, Minus, big - 2 * p + 1)])
            }
            MagicalCaseId::Quaternionic(_) => return None,
        };
        Some(RealOrbit::new(d, None))
    }

    /// Complex partition and very even tag, for classical types.
    pub fn complex_orbit(&self) -> Option<(Partition, Option<OrbitTag>)> {
        let o = self.real_orbit()?;
        let rf = self.canonical_real_form();
        let part = complex_partition(rf, &o.diagram);
        let tag = match *self {
            MagicalCaseId::HermitianStar { tag, .. } => Some(tag),
            _ => o.tag,
        };
        Some((part, tag))
    }
}

impl fmt::Display for MagicalCaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MagicalCaseId::Split(t) => write!(f, "split-{}", t),
            MagicalCaseId::Hermitian(t) => write!(f, "hermitian-{}", t),
            MagicalCaseId::HermitianStar { n, tag } => {
                write!(f, "hermitian*-D:{}{}", 2 * n, if tag == OrbitTag::II { ":alt" } else { "" })
            }
            MagicalCaseId::Flag { family, n, p } => write!(f, "flag-{:?}:{},{}", family, n, p),
            MagicalCaseId::Quaternionic(fam) => write!(f, "quat-{:?}", fam),
        }
    }
}

impl FromStr for MagicalCaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some((kind, rest)) = s.split_once('-') else {
            return Err(Error::Parse { pos: 0, msg: "expected `<case>-<type>`".into() });
        };
        let pos = kind.len() + 1;
        let id = match kind {
            "split" => MagicalCaseId::Split(rest.parse().map_err(|e| shift(e, pos))?),
            "hermitian" => MagicalCaseId::Hermitian(rest.parse().map_err(|e| shift(e, pos))?),
            "hermitian*" => {
                let (body, tag) = match rest.strip_suffix(":alt") {
                    Some(b) => (b, OrbitTag::II),
                    None => (rest, OrbitTag::I),
                };
                let ty: AlgebraType = body.parse().map_err(|e| shift(e, pos))?;
                if ty.family != Family::D || ty.rank % 2 == 1 {
                    return Err(Error::Parse { pos, msg: "expected D:2n".into() });
                }
                MagicalCaseId::HermitianStar { n: ty.rank / 2, tag }
            }
            "flag" => {
                let Some((ty, p)) = rest.split_once(',') else {
                    return Err(Error::Parse { pos, msg: "expected `flag-B:n,p`".into() });
                };
                let ty: AlgebraType = ty.parse().map_err(|e| shift(e, pos))?;
                let p: usize = p.trim().parse().map_err(|_| Error::Parse {
                    pos: pos + rest.find(',').unwrap() + 1,
                    msg: "expected an integer p".into(),
                })?;
                MagicalCaseId::Flag { family: ty.family, n: ty.rank, p }
            }
            "quat" => {
                let ty: AlgebraType = rest.parse().map_err(|e| shift(e, pos))?;
                MagicalCaseId::Quaternionic(ty.family)
            }
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown case kind `{}`", kind) }),
        };
        id.validate()
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub case_id: MagicalCaseId,
    pub labels: DynkinLabels,
    pub canonical_real_form: RealFormId,
    pub real_orbit: Option<RealOrbit>,
}

/// Largest rank listed for the split and hermitian families.
pub const CATALOG_MAX_RANK: usize = 8;
/// Largest orthogonal size listed for the flag families.
pub const CATALOG_MAX_FLAG: usize = 17;

/// Every magical case within the catalog bounds.
pub fn magical_catalog() -> Vec<CatalogEntry> {
    let mut ids = Vec::new();
    for r in 1..=CATALOG_MAX_RANK {
        ids.push(MagicalCaseId::Split(AlgebraType::a(r)));
    }
    for r in 2..=CATALOG_MAX_RANK {
        ids.push(MagicalCaseId::Split(AlgebraType::b(r)));
    }
    for r in 2..=CATALOG_MAX_RANK {
        ids.push(MagicalCaseId::Split(AlgebraType::c(r)));
    }
    for r in 4..=CATALOG_MAX_RANK {
        ids.push(MagicalCaseId::Split(AlgebraType::d(r)));
    }
    for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
        ids.push(MagicalCaseId::Split(AlgebraType::exceptional(f)));
    }
    for n in 2..=CATALOG_MAX_RANK {
        ids.push(MagicalCaseId::Hermitian(AlgebraType::a(2 * n - 1)));
        ids.push(MagicalCaseId::Hermitian(AlgebraType::b(n)));
        ids.push(MagicalCaseId::Hermitian(AlgebraType::c(n)));
        if n >= 4 {
            ids.push(MagicalCaseId::Hermitian(AlgebraType::d(n)));
        }
        for tag in [OrbitTag::I, OrbitTag::II] {
            ids.push(MagicalCaseId::HermitianStar { n, tag });
        }
    }
    ids.push(MagicalCaseId::Hermitian(AlgebraType::exceptional(Family::E7)));
    for big in 7..=CATALOG_MAX_FLAG {
        let (family, n) = if big % 2 == 1 { (Family::B, big / 2) } else { (Family::D, big / 2) };
        let top = if family == Family::B { n } else { n - 1 };
        for p in 3..=top {
            ids.push(MagicalCaseId::Flag { family, n, p });
        }
    }
    for f in [Family::F4, Family::E6, Family::E7, Family::E8] {
        ids.push(MagicalCaseId::Quaternionic(f));
    }
    ids.into_iter()
        .map(|id| CatalogEntry {
            case_id: id,
            labels: id.labels(),
            canonical_real_form: id.canonical_real_form(),
            real_orbit: id.real_orbit(),
        })
        .collect()
}

/// Complex classical type of a real form's complexification.
pub fn complex_type(rf: RealFormId) -> Result<AlgebraType> {
    let (kind, n) = rf.complex_matrix().ok_or_else(|| Error::Unsupported(format!("{} is exceptional", rf)))?;
    match kind {
        Classical::Sl => AlgebraType::new(Family::A, n - 1),
        Classical::So if n % 2 == 1 => AlgebraType::new(Family::B, n / 2),
        Classical::So => AlgebraType::new(Family::D, n / 2),
        Classical::Sp => AlgebraType::new(Family::C, n / 2),
    }
}

impl From<MagicalCaseId> for String {
    fn from(x: MagicalCaseId) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for MagicalCaseId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn criterion_examples() {
        let r = magical_criterion(RealFormId::SlR(3), &d("3")).unwrap();
        assert!(r.magical && r.criterion_value == 0);
        let r = magical_criterion(RealFormId::SuStar(4), &d("2")).unwrap();
        assert_eq!(r.criterion_value, -6);
        assert!(!r.magical);
        let r = magical_criterion(RealFormId::SoStar(8), &d("2+,2+")).unwrap();
        assert!(r.magical);
    }

    #[test]
    fn enumeration_examples() {
        let su22 = enumerate_magical(RealFormId::Su(2, 2), DEFAULT_CAP).unwrap();
        assert_eq!(su22.len(), 2);
        let so23 = enumerate_magical(RealFormId::So(2, 3), DEFAULT_CAP).unwrap();
        let got: Vec<String> = so23.iter().map(|o| o.diagram.to_string()).collect();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&"5-".to_string()) && got.contains(&"3+,1-,1-".to_string()));
        assert!(enumerate_magical(RealFormId::Sp(2, 2), DEFAULT_CAP).unwrap().is_empty());
        assert!(matches!(enumerate_magical(RealFormId::SlR(19), DEFAULT_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn dynkin_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let l = weighted_dynkin_from_partition(AlgebraType::a(4), &p("5"), None).unwrap();
        assert_eq!(l.0, vec![2, 2, 2, 2]);
        let l = weighted_dynkin_from_partition(AlgebraType::b(2), &p("3,1,1"), None).unwrap();
        assert_eq!(l.0, vec![2, 0]);
        let l = weighted_dynkin_from_partition(AlgebraType::b(4), &p("5,1^4"), None).unwrap();
        assert_eq!(l.0, vec![2, 2, 0, 0]);
        let a = weighted_dynkin_from_partition(AlgebraType::d(4), &p("2^4"), Some(OrbitTag::I)).unwrap();
        let b = weighted_dynkin_from_partition(AlgebraType::d(4), &p("2^4"), Some(OrbitTag::II)).unwrap();
        assert_eq!((a.0, b.0), (vec![0, 0, 0, 2], vec![0, 0, 2, 0]));
    }

    #[test]
    fn catalog_examples() {
        let cat = magical_catalog();
        let find = |s: &str| cat.iter().find(|e| e.case_id.to_string() == s).unwrap().clone();
        let f4 = find("quat-F4");
        assert_eq!(f4.labels.0, vec![0, 0, 2, 2]);
        assert_eq!(f4.canonical_real_form.to_string(), "f4:4");
        let e7 = find("hermitian-E7");
        assert_eq!(e7.labels.0, vec![0, 0, 0, 0, 0, 0, 2]);
        assert_eq!(e7.canonical_real_form.to_string(), "e7:-25");
        let g2 = find("split-G2");
        assert_eq!((g2.labels.0, g2.canonical_real_form.to_string()), (vec![2, 2], "g2:2".to_string()));
    }

    #[test]
    fn case_ids_round_trip() {
        for e in magical_catalog() {
            let s = e.case_id.to_string();
            assert_eq!(s.parse::<MagicalCaseId>().unwrap(), e.case_id, "{}", s);
        }
        assert!("flag-B:4,9".parse::<MagicalCaseId>().is_err());
        assert!("quat-G2".parse::<MagicalCaseId>().is_err());
    }
}
