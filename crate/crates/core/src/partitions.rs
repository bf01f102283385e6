//! Partitions, signed Young diagrams, real forms of classical algebras and
//! the centralizer data attached to nilpotent orbits.

use crate::error::{Error, Result};
use crate::matlie::Classical;
use crate::rootsys::{AlgebraType, Family};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A partition stored as multiplicities `r_i` of rows of length `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    r: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn new(multiplicities: BTreeMap<usize, usize>) -> Result<Self> {
        if multiplicities.contains_key(&0) {
            return Err(Error::InvalidPartition("rows of length 0".into()));
        }
        let r: BTreeMap<usize, usize> = multiplicities.into_iter().filter(|e| e.1 > 0).collect();
        if r.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        Ok(Partition { r })
    }

    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        let mut r = BTreeMap::new();
        for &k in rows {
            *r.entry(k).or_insert(0) += 1;
        }
        Self::new(r)
    }

    /// One row of length `n`.
    pub fn single(n: usize) -> Self {
        Partition { r: BTreeMap::from([(n, 1)]) }
    }

    pub fn size(&self) -> usize {
        self.r.iter().map(|(i, m)| i * m).sum()
    }

    /// `r_i`.
    pub fn r(&self, i: usize) -> usize {
        self.r.get(&i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.r
    }

    pub fn num_rows(&self) -> usize {
        self.r.values().sum()
    }

    pub fn largest(&self) -> usize {
        *self.r.keys().next_back().unwrap()
    }

    /// Row lengths in decreasing order.
    pub fn rows(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (&i, &m) in self.r.iter().rev() {
            out.extend(std::iter::repeat_n(i, m));
        }
        out
    }

    /// `s_j = sum_{i >= j} r_i` for `j = 1..=largest`.
    pub fn dual_sequence(&self) -> Vec<usize> {
        (1..=self.largest()).map(|j| self.r.range(j..).map(|e| e.1).sum()).collect()
    }

    pub fn dual(&self) -> Partition {
        Partition::from_rows(&self.dual_sequence()).unwrap()
    }

    /// Every row repeated twice.
    pub fn doubled(&self) -> Partition {
        Partition { r: self.r.iter().map(|(&i, &m)| (i, 2 * m)).collect() }
    }

    pub fn is_principal(&self) -> bool {
        self.r.len() == 1 && self.r.values().all(|&m| m == 1)
    }

    pub fn all_rows_even(&self) -> bool {
        self.r.keys().all(|i| i % 2 == 0)
    }

    /// All partitions of `n` in reverse lexicographic order of row lists.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition::from_rows(cur).unwrap());
                return;
            }
            for k in (1..=max.min(n)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.r.iter().rev().map(|(i, m)| if *m == 1 { i.to_string() } else { format!("{}^{}", i, m) }).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1` or `3,1^2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut r = BTreeMap::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let bad = |msg: &str| Error::Parse { pos, msg: msg.to_string() };
            let (len, mult) = match tok.trim().split_once('^') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (tok.trim(), "1"),
            };
            let len: usize = len.parse().map_err(|_| bad("expected a row length"))?;
            let mult: usize = mult.parse().map_err(|_| bad("expected a multiplicity"))?;
            if len == 0 {
                return Err(bad("row length must be positive"));
            }
            *r.entry(len).or_insert(0) += mult;
            pos += tok.len() + 1;
        }
        Partition::new(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Tag distinguishing the two real or complex orbits sharing one diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitTag {
    I,
    II,
}

/// Rows `(length, leading sign)` sorted by decreasing length, `+` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedYoungDiagram {
    rows: Vec<(usize, Sign)>,
}

impl SignedYoungDiagram {
    pub fn new(mut rows: Vec<(usize, Sign)>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(|r| r.0 == 0) {
            return Err(Error::InvalidPartition("empty diagram or empty row".into()));
        }
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(SignedYoungDiagram { rows })
    }

    /// Diagram with every row starting `+`, used for unsigned families.
    pub fn unsigned(p: &Partition) -> Self {
        Self::new(p.rows().into_iter().map(|k| (k, Sign::Plus)).collect()).unwrap()
    }

    /// `p_i` rows of length `i` start `+`, the rest of the `r_i` start `-`.
    pub fn from_counts(p: &Partition, plus: &BTreeMap<usize, usize>) -> Result<Self> {
        let mut rows = Vec::new();
        for (&i, &r) in p.multiplicities() {
            let pi = plus.get(&i).copied().unwrap_or(0);
            if pi > r {
                return Err(Error::InvalidPartition(format!("p_{} = {} exceeds r_{} = {}", i, pi, i, r)));
            }
            rows.extend(std::iter::repeat_n((i, Sign::Plus), pi));
            rows.extend(std::iter::repeat_n((i, Sign::Minus), r - pi));
        }
        Self::new(rows)
    }

    pub fn rows(&self) -> &[(usize, Sign)] {
        &self.rows
    }

    pub fn partition(&self) -> Partition {
        Partition::from_rows(&self.rows.iter().map(|r| r.0).collect::<Vec<_>>()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.0).sum()
    }

    /// `(p_i, q_i)`: rows of length `i` starting `+` and `-`.
    pub fn counts(&self, i: usize) -> (usize, usize) {
        let p = self.rows.iter().filter(|r| r.0 == i && r.1 == Sign::Plus).count();
        let q = self.rows.iter().filter(|r| r.0 == i && r.1 == Sign::Minus).count();
        (p, q)
    }

    /// Numbers of `+` and `-` boxes.
    pub fn signature(&self) -> (usize, usize) {
        let mut p = 0;
        let mut q = 0;
        for &(k, s) in &self.rows {
            let lead = k.div_ceil(2);
            let rest = k / 2;
            match s {
                Sign::Plus => {
                    p += lead;
                    q += rest;
                }
                Sign::Minus => {
                    q += lead;
                    p += rest;
                }
            }
        }
        (p, q)
    }

    pub fn flip(&self) -> Self {
        Self::new(self.rows.iter().map(|&(k, s)| (k, s.flip())).collect()).unwrap()
    }

    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().map(|r| r.0).collect();
        v.dedup();
        v
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|(k, s)| format!("{}{}", k, s.symbol())).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedYoungDiagram {
    type Err = Error;

    /// Accepts `5-` or `3+,1-,1-`; a missing sign means `+`.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            let (num, sign) = match t.chars().last() {
                Some('+') => (&t[..t.len() - 1], Sign::Plus),
                Some('-') => (&t[..t.len() - 1], Sign::Minus),
                _ => (t, Sign::Plus),
            };
            let k: usize = num.parse().map_err(|_| Error::Parse { pos, msg: "expected a row length".into() })?;
            rows.push((k, sign));
            pos += tok.len() + 1;
        }
        Self::new(rows)
    }
}

/// A noncompact real form of a simple Lie algebra. Classical variants are
/// named by the subscript of the usual notation: `SlR(n)` is `sl(n,R)`,
/// `SuStar(2m)` is `su*(2m)`, `SoStar(2m)` is `so*(2m)`, `SpR(2m)` is
/// `sp(2m,R)`, and `Sp(p, q)` is `sp(2p,2q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RealFormId {
    SlR(usize),
    SuStar(usize),
    Su(usize, usize),
    So(usize, usize),
    SoStar(usize),
    SpR(usize),
    Sp(usize, usize),
    /// Exceptional real form with its index `dim m - dim h`.
    Exceptional(Family, i64),
}

const EXCEPTIONAL_FORMS: &[(Family, i64, usize)] = &[
    (Family::G2, 2, 2),
    (Family::F4, 4, 4),
    (Family::F4, -20, 1),
    (Family::E6, 6, 6),
    (Family::E6, 2, 4),
    (Family::E6, -14, 2),
    (Family::E6, -26, 2),
    (Family::E7, 7, 7),
    (Family::E7, -5, 4),
    (Family::E7, -25, 3),
    (Family::E8, 8, 8),
    (Family::E8, -24, 4),
];

impl RealFormId {
    pub fn validate(self) -> Result<Self> {
        use RealFormId::*;
        let ok = match self {
            SlR(n) => n >= 2,
            SuStar(n) => n >= 4 && n % 2 == 0,
            Su(p, q) => p + q >= 2,
            So(p, q) => p + q >= 3,
            SoStar(n) => n >= 4 && n % 2 == 0,
            SpR(n) => n >= 2 && n % 2 == 0,
            Sp(p, q) => p + q >= 1,
            Exceptional(fam, idx) => EXCEPTIONAL_FORMS.iter().any(|e| e.0 == fam && e.1 == idx),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidType(format!("real form {}", self)))
        }
    }

    pub fn is_classical(&self) -> bool {
        !matches!(self, RealFormId::Exceptional(..))
    }

    /// Complexification as a matrix algebra `(kind, size)`.
    pub fn complex_matrix(&self) -> Option<(Classical, usize)> {
        use RealFormId::*;
        Some(match *self {
            SlR(n) | SuStar(n) => (Classical::Sl, n),
            Su(p, q) => (Classical::Sl, p + q),
            So(p, q) => (Classical::So, p + q),
            SoStar(n) => (Classical::So, n),
            SpR(n) => (Classical::Sp, n),
            Sp(p, q) => (Classical::Sp, 2 * (p + q)),
            Exceptional(..) => return None,
        })
    }

    /// Dimension of the complexification.
    pub fn dim(&self) -> usize {
        match self.complex_matrix() {
            Some((k, n)) => classical_dim(k, n),
            None => match self {
                RealFormId::Exceptional(f, _) => AlgebraType::exceptional(*f).dim(),
                _ => unreachable!(),
            },
        }
    }

    /// `dim m - dim h` for the complexified Cartan decomposition.
    pub fn delta(&self) -> i64 {
        use RealFormId::*;
        let d = |x: usize| x as i64;
        match *self {
            SlR(n) => d(n) - 1,
            Su(p, q) => 1 - (d(q) - d(p)).pow(2),
            SuStar(n) => -d(n) - 1,
            So(p, q) => (d(p + q) - (d(q) - d(p)).pow(2)) / 2,
            SoStar(n) => -d(n / 2),
            SpR(n) => d(n / 2),
            Sp(p, q) => -2 * (d(p) - d(q)).pow(2) - d(p) - d(q),
            Exceptional(_, idx) => idx,
        }
    }

    pub fn real_rank(&self) -> usize {
        use RealFormId::*;
        match *self {
            SlR(n) => n - 1,
            SuStar(n) => n / 2 - 1,
            Su(p, q) | So(p, q) | Sp(p, q) => p.min(q),
            SoStar(n) => n / 4,
            SpR(n) => n / 2,
            Exceptional(f, idx) => EXCEPTIONAL_FORMS.iter().find(|e| e.0 == f && e.1 == idx).map_or(0, |e| e.2),
        }
    }

    /// Number of boxes of a signed diagram describing a nilpotent orbit.
    pub fn diagram_size(&self) -> Option<usize> {
        use RealFormId::*;
        match *self {
            SlR(n) | SpR(n) => Some(n),
            SuStar(n) | SoStar(n) => Some(n / 2),
            Su(p, q) | So(p, q) | Sp(p, q) => Some(p + q),
            Exceptional(..) => None,
        }
    }

    /// Forms whose diagrams double to the complex partition.
    pub fn doubles_rows(&self) -> bool {
        matches!(self, RealFormId::SuStar(_) | RealFormId::SoStar(_) | RealFormId::Sp(..))
    }

    /// Forms classified by unsigned partitions.
    pub fn unsigned(&self) -> bool {
        matches!(self, RealFormId::SlR(_) | RealFormId::SuStar(_))
    }

    /// Conventional name such as `so(2,3)` or `e7(-5)`.
    pub fn math_name(&self) -> String {
        use RealFormId::*;
        match *self {
            SlR(n) => format!("sl({},R)", n),
            SuStar(n) => format!("su*({})", n),
            Su(p, q) => format!("su({},{})", p, q),
            So(p, q) => format!("so({},{})", p, q),
            SoStar(n) => format!("so*({})", n),
            SpR(n) => format!("sp({},R)", n),
            Sp(p, q) => format!("sp({},{})", 2 * p, 2 * q),
            Exceptional(f, idx) => format!("{}({})", format!("{:?}", f).to_lowercase(), idx),
        }
    }

    /// Every noncompact real form whose complexification is the given
    /// matrix algebra.
    pub fn forms_of(kind: Classical, n: usize) -> Vec<RealFormId> {
        use RealFormId::*;
        let mut out = Vec::new();
        match kind {
            Classical::Sl => {
                out.push(SlR(n));
                for p in 1..=n / 2 {
                    out.push(Su(p, n - p));
                }
                if n.is_multiple_of(2) && n >= 4 {
                    out.push(SuStar(n));
                }
            }
            Classical::So => {
                for p in 1..=n / 2 {
                    out.push(So(p, n - p));
                }
                if n.is_multiple_of(2) && n >= 4 {
                    out.push(SoStar(n));
                }
            }
            Classical::Sp => {
                out.push(SpR(n));
                for p in 1..=n / 4 {
                    out.push(Sp(p, n / 2 - p));
                }
            }
        }
        out.into_iter().filter(|f| f.validate().is_ok()).collect()
    }
}

pub fn classical_dim(kind: Classical, n: usize) -> usize {
    match kind {
        Classical::Sl => n * n - 1,
        Classical::So => n * (n - 1) / 2,
        Classical::Sp => n * (n + 1) / 2,
    }
}

impl fmt::Display for RealFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RealFormId::*;
        match *self {
            SlR(n) => write!(f, "sl:{}", n),
            SuStar(n) => write!(f, "su*:{}", n),
            Su(p, q) => write!(f, "su:{},{}", p, q),
            So(p, q) => write!(f, "so:{},{}", p, q),
            SoStar(n) => write!(f, "so*:{}", n),
            SpR(n) => write!(f, "spR:{}", n),
            Sp(p, q) => write!(f, "sp:{},{}", p, q),
            Exceptional(fam, idx) => write!(f, "{}:{}", format!("{:?}", fam).to_lowercase(), idx),
        }
    }
}

impl FromStr for RealFormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use RealFormId::*;
        let s = s.trim();
        let Some((fam, params)) = s.split_once(':') else {
            return Err(Error::Parse { pos: s.len(), msg: "expected ':' after the family".into() });
        };
        let base = fam.len() + 1;
        let nums: Vec<&str> = params.split(',').collect();
        let mut vals = Vec::new();
        let mut pos = base;
        for t in &nums {
            let v: i64 = t.trim().parse().map_err(|_| Error::Parse { pos, msg: "expected an integer".into() })?;
            vals.push(v);
            pos += t.len() + 1;
        }
        let arity = |k: usize| -> Result<()> {
            if vals.len() == k {
                Ok(())
            } else {
                Err(Error::Parse { pos: base, msg: format!("family {} takes {} parameter(s)", fam, k) })
            }
        };
        let nonneg = |v: i64| -> Result<usize> {
            usize::try_from(v).map_err(|_| Error::Parse { pos: base, msg: "parameters must be non-negative".into() })
        };
        let rf = match fam {
            "sl" | "su*" | "so*" | "spR" => {
                arity(1)?;
                let n = nonneg(vals[0])?;
                match fam {
                    "sl" => SlR(n),
                    "su*" => SuStar(n),
                    "so*" => SoStar(n),
                    _ => SpR(n),
                }
            }
            "su" | "so" | "sp" => {
                arity(2)?;
                let (p, q) = (nonneg(vals[0])?, nonneg(vals[1])?);
                match fam {
                    "su" => Su(p, q),
                    "so" => So(p, q),
                    _ => Sp(p, q),
                }
            }
            "g2" | "f4" | "e6" | "e7" | "e8" => {
                arity(1)?;
                let family = match fam {
                    "g2" => Family::G2,
                    "f4" => Family::F4,
                    "e6" => Family::E6,
                    "e7" => Family::E7,
                    _ => Family::E8,
                };
                Exceptional(family, vals[0])
            }
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown family '{}'", fam) }),
        };
        rf.validate()
    }
}

/// Real form tag of a simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealTag {
    pub label: String,
    pub real_rank: usize,
    pub compact: bool,
    /// A complex simple algebra viewed as real; its complexification has
    /// two copies of the factor.
    pub complex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub rank: usize,
    pub real: Option<RealTag>,
}

impl Factor {
    /// Dimension of the complexification.
    pub fn dim(&self) -> usize {
        let d = simple_dim(self.family, self.rank);
        match &self.real {
            Some(t) if t.complex => 2 * d,
            _ => d,
        }
    }

    pub fn complex_name(&self) -> String {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => format!("{:?}{}", self.family, self.rank),
            f => format!("{:?}", f),
        }
    }
}

fn simple_dim(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 2),
        Family::B | Family::C => n * (2 * n + 1),
        Family::D => n * (2 * n - 1),
        Family::E6 => 78,
        Family::E7 => 133,
        Family::E8 => 248,
        Family::F4 => 52,
        Family::G2 => 14,
    }
}

/// A reductive Lie algebra: a center plus simple factors. Real
/// descriptors tag every factor and record how much of the center is split.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReductiveType {
    pub torus_rank: usize,
    pub split_torus: usize,
    pub factors: Vec<Factor>,
}

impl ReductiveType {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn torus(rank: usize) -> Self {
        ReductiveType { torus_rank: rank, ..Self::default() }
    }

    pub fn split_torus(rank: usize) -> Self {
        ReductiveType { torus_rank: rank, split_torus: rank, factors: Vec::new() }
    }

    pub fn simple(family: Family, rank: usize) -> Self {
        ReductiveType { factors: vec![Factor { family, rank, real: None }], ..Self::default() }
    }

    pub fn real_simple(family: Family, rank: usize, label: &str, real_rank: usize, complex: bool) -> Self {
        let tag = RealTag { label: label.to_string(), real_rank, compact: real_rank == 0 && !complex, complex };
        ReductiveType { factors: vec![Factor { family, rank, real: Some(tag) }], ..Self::default() }
    }

    pub fn plus(mut self, other: ReductiveType) -> Self {
        self.torus_rank += other.torus_rank;
        self.split_torus += other.split_torus;
        self.factors.extend(other.factors);
        self.factors.sort_by_key(|a| (a.family, std::cmp::Reverse(a.rank)));
        self
    }

    /// Complex dimension.
    pub fn dim(&self) -> usize {
        self.torus_rank + self.factors.iter().map(Factor::dim).sum::<usize>()
    }

    pub fn is_compact(&self) -> bool {
        self.split_torus == 0 && self.factors.iter().all(|f| f.real.as_ref().is_none_or(|t| t.compact))
    }

    /// Real rank of a real descriptor: split center plus factor ranks.
    pub fn real_rank(&self) -> usize {
        self.split_torus + self.factors.iter().map(|f| f.real.as_ref().map_or(0, |t| t.real_rank)).sum::<usize>()
    }

    /// Dimension of the semisimple part.
    pub fn semisimple_dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }

    /// Sum of complex ranks.
    pub fn rank(&self) -> usize {
        self.torus_rank
            + self
                .factors
                .iter()
                .map(|f| if f.real.as_ref().is_some_and(|t| t.complex) { 2 * f.rank } else { f.rank })
                .sum::<usize>()
    }

    /// Complexification, forgetting real tags.
    pub fn complexified(&self) -> ReductiveType {
        let mut out = ReductiveType::torus(self.torus_rank);
        for f in &self.factors {
            let copies = if f.real.as_ref().is_some_and(|t| t.complex) { 2 } else { 1 };
            for _ in 0..copies {
                out = out.plus(ReductiveType::simple(f.family, f.rank));
            }
        }
        out
    }
}

impl ReductiveType {
    /// Name read as a real Lie algebra; a bare torus is compact.
    pub fn real_label(&self) -> String {
        self.label(true)
    }

    fn label(&self, force_real: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let compact_torus = self.torus_rank - self.split_torus;
        let is_real = force_real || self.split_torus > 0 || self.factors.iter().any(|x| x.real.is_some());
        if is_real {
            if self.split_torus > 0 {
                parts.push(if self.split_torus == 1 { "R".into() } else { format!("R^{}", self.split_torus) });
            }
            if compact_torus > 0 {
                parts.push(if compact_torus == 1 { "u(1)".into() } else { format!("u(1)^{}", compact_torus) });
            }
        } else if self.torus_rank > 0 {
            parts.push(if self.torus_rank == 1 { "C".into() } else { format!("C^{}", self.torus_rank) });
        }
        for x in &self.factors {
            parts.push(match &x.real {
                Some(t) => t.label.clone(),
                None => x.complex_name(),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(false))
    }
}

/// `so_n` over C, normalized to simple factors and tori.
pub fn complex_so(n: usize) -> ReductiveType {
    match n {
        0 | 1 => ReductiveType::trivial(),
        2 => ReductiveType::torus(1),
        3 => ReductiveType::simple(Family::A, 1),
        4 => ReductiveType::simple(Family::A, 1).plus(ReductiveType::simple(Family::A, 1)),
        6 => ReductiveType::simple(Family::A, 3),
        _ if n % 2 == 1 => ReductiveType::simple(Family::B, n / 2),
        _ => ReductiveType::simple(Family::D, n / 2),
    }
}

/// `sp_{2k}` over C.
pub fn complex_sp(two_k: usize) -> ReductiveType {
    match two_k / 2 {
        0 => ReductiveType::trivial(),
        1 => ReductiveType::simple(Family::A, 1),
        k => ReductiveType::simple(Family::C, k),
    }
}

/// `sl_n` over C.
pub fn complex_sl(n: usize) -> ReductiveType {
    if n <= 1 {
        ReductiveType::trivial()
    } else {
        ReductiveType::simple(Family::A, n - 1)
    }
}

/// `name(p,q)`, or `name(n)` for the compact form.
fn pq_label(name: &str, p: usize, q: usize, n: usize) -> String {
    if p.min(q) == 0 {
        format!("{}({})", name, n)
    } else {
        format!("{}({},{})", name, p, q)
    }
}

/// `so(p,q)`.
pub fn real_so(p: usize, q: usize) -> ReductiveType {
    let m = p.min(q);
    let label = pq_label("so", p, q, p + q);
    match p + q {
        0 | 1 => ReductiveType::trivial(),
        2 if m == 1 => ReductiveType::split_torus(1),
        2 => ReductiveType::torus(1),
        3 => ReductiveType::real_simple(Family::A, 1, &label, m, false),
        4 => match m {
            0 => ReductiveType::real_simple(Family::A, 1, "su(2)", 0, false).plus(ReductiveType::real_simple(
                Family::A,
                1,
                "su(2)",
                0,
                false,
            )),
            1 => ReductiveType::real_simple(Family::A, 1, "sl(2,C)", 1, true),
            _ => ReductiveType::real_simple(Family::A, 1, "sl(2,R)", 1, false).plus(ReductiveType::real_simple(
                Family::A,
                1,
                "sl(2,R)",
                1,
                false,
            )),
        },
        6 => ReductiveType::real_simple(Family::A, 3, &label, m, false),
        n if n % 2 == 1 => ReductiveType::real_simple(Family::B, n / 2, &label, m, false),
        n => ReductiveType::real_simple(Family::D, n / 2, &label, m, false),
    }
}

/// `so*(2r)`.
pub fn real_so_star(r: usize) -> ReductiveType {
    let label = format!("so*({})", 2 * r);
    match r {
        0 => ReductiveType::trivial(),
        1 => ReductiveType::torus(1),
        2 => ReductiveType::real_simple(Family::A, 1, "su(2)", 0, false).plus(ReductiveType::real_simple(
            Family::A,
            1,
            "sl(2,R)",
            1,
            false,
        )),
        3 => ReductiveType::real_simple(Family::A, 3, &label, 1, false),
        _ => ReductiveType::real_simple(Family::D, r, &label, r / 2, false),
    }
}

/// `sp(2k,R)`.
pub fn real_sp_r(two_k: usize) -> ReductiveType {
    let k = two_k / 2;
    let label = format!("sp({},R)", two_k);
    match k {
        0 => ReductiveType::trivial(),
        1 => ReductiveType::real_simple(Family::A, 1, &label, 1, false),
        _ => ReductiveType::real_simple(Family::C, k, &label, k, false),
    }
}

/// `sp(2p,2q)`.
pub fn real_sp_pq(p: usize, q: usize) -> ReductiveType {
    let label = if p.min(q) == 0 { format!("sp({})", p + q) } else { format!("sp({},{})", 2 * p, 2 * q) };
    match p + q {
        0 => ReductiveType::trivial(),
        1 => ReductiveType::real_simple(Family::A, 1, &label, 0, false),
        k => ReductiveType::real_simple(Family::C, k, &label, p.min(q), false),
    }
}

/// `sl(n,R)`.
pub fn real_sl_r(n: usize) -> ReductiveType {
    if n <= 1 {
        ReductiveType::trivial()
    } else {
        ReductiveType::real_simple(Family::A, n - 1, &format!("sl({},R)", n), n - 1, false)
    }
}

/// `su(p,q)`.
pub fn real_su(p: usize, q: usize) -> ReductiveType {
    if p + q <= 1 {
        ReductiveType::trivial()
    } else {
        ReductiveType::real_simple(Family::A, p + q - 1, &pq_label("su", p, q, p + q), p.min(q), false)
    }
}

/// `su*(2r)`.
pub fn real_su_star(r: usize) -> ReductiveType {
    match r {
        0 => ReductiveType::trivial(),
        1 => ReductiveType::real_simple(Family::A, 1, "su(2)", 0, false),
        _ => ReductiveType::real_simple(Family::A, 2 * r - 1, &format!("su*({})", 2 * r), r - 1, false),
    }
}

/// `sl(n,C)` as a real algebra.
pub fn real_sl_c(n: usize) -> ReductiveType {
    if n <= 1 {
        ReductiveType::trivial()
    } else {
        ReductiveType::real_simple(Family::A, n - 1, &format!("sl({},C)", n), n - 1, true)
    }
}

/// Exceptional real form as a simple factor.
pub fn real_exceptional(family: Family, index: i64) -> ReductiveType {
    let rf = RealFormId::Exceptional(family, index);
    let ty = AlgebraType::exceptional(family);
    let compact = index == -(ty.dim() as i64);
    let rank = if compact { 0 } else { rf.real_rank() };
    let mut t = ReductiveType::real_simple(family, ty.rank, &rf.math_name(), rank, false);
    t.factors[0].real.as_mut().unwrap().compact = compact;
    t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitValidity {
    pub valid: bool,
    /// Two orbits share this diagram.
    pub very_even: bool,
    pub reason: String,
}

impl OrbitValidity {
    fn ok(very_even: bool) -> Self {
        OrbitValidity { valid: true, very_even, reason: String::new() }
    }

    fn bad(reason: String) -> Self {
        OrbitValidity { valid: false, very_even: false, reason }
    }
}

/// Validity of a partition as a nilpotent orbit of `sl_n`, `so_n` or `sp_n`.
pub fn validate_classical_orbit(kind: Classical, n: usize, p: &Partition) -> Result<OrbitValidity> {
    if p.size() != n {
        return Err(Error::SizeMismatch { expected: n, got: p.size() });
    }
    Ok(match kind {
        Classical::Sl => OrbitValidity::ok(false),
        Classical::So => match p.multiplicities().iter().find(|(i, r)| *i % 2 == 0 && *r % 2 == 1) {
            Some((i, r)) => OrbitValidity::bad(format!("r_{} = {} is odd for an even row length", i, r)),
            None => OrbitValidity::ok(n.is_multiple_of(2) && p.all_rows_even()),
        },
        Classical::Sp => match p.multiplicities().iter().find(|(i, r)| *i % 2 == 1 && *r % 2 == 1) {
            Some((i, r)) => OrbitValidity::bad(format!("r_{} = {} is odd for an odd row length", i, r)),
            None => OrbitValidity::ok(false),
        },
    })
}

/// Classical matrix realization `(kind, size)` of a classical type.
pub fn matrix_kind(ty: AlgebraType) -> Result<(Classical, usize)> {
    let n = ty.matrix_size().ok_or_else(|| Error::Unsupported(format!("{} is exceptional", ty)))?;
    let kind = match ty.family {
        Family::A => Classical::Sl,
        Family::B | Family::D => Classical::So,
        _ => Classical::Sp,
    };
    Ok((kind, n))
}

pub fn validate_complex_orbit(ty: AlgebraType, p: &Partition) -> Result<OrbitValidity> {
    let (kind, n) = matrix_kind(ty)?;
    validate_classical_orbit(kind, n, p)
}

/// Validity of a signed diagram as a nilpotent orbit of a classical real
/// form.
pub fn validate_real_orbit(rf: RealFormId, d: &SignedYoungDiagram) -> Result<OrbitValidity> {
    use RealFormId::*;
    let size = rf.diagram_size().ok_or_else(|| Error::Unsupported(format!("{} is exceptional", rf)))?;
    if d.size() != size {
        return Err(Error::SizeMismatch { expected: size, got: d.size() });
    }
    let (sp, sq) = d.signature();
    let part = d.partition();
    let all_plus = d.rows().iter().all(|r| r.1 == Sign::Plus);
    let needs_signature = |p: usize, q: usize| -> Result<()> {
        if (sp, sq) == (p, q) {
            Ok(())
        } else {
            Err(Error::InvalidOrbit(format!("signature ({},{}) differs from ({},{})", sp, sq, p, q)))
        }
    };
    let leading_plus = |pred: fn(usize) -> bool| d.rows().iter().all(|&(k, s)| !pred(k) || s == Sign::Plus);
    let even_mult = |pred: fn(usize) -> bool| part.multiplicities().iter().all(|(i, r)| !pred(*i) || r % 2 == 0);
    let even = |k: usize| k.is_multiple_of(2);
    let odd = |k: usize| k % 2 == 1;
    Ok(match rf {
        SlR(_) | SuStar(_) => {
            if !all_plus {
                OrbitValidity::bad("unsigned family: rows must carry the + placeholder".into())
            } else {
                OrbitValidity::ok(matches!(rf, SlR(_)) && part.all_rows_even())
            }
        }
        Su(p, q) => {
            needs_signature(p, q)?;
            OrbitValidity::ok(false)
        }
        So(p, q) => {
            needs_signature(p, q)?;
            if !even_mult(even) {
                OrbitValidity::bad("even rows must occur with even multiplicity".into())
            } else if !leading_plus(even) {
                OrbitValidity::bad("even rows must start with +".into())
            } else {
                OrbitValidity::ok(part.all_rows_even())
            }
        }
        SoStar(_) => {
            if leading_plus(odd) {
                OrbitValidity::ok(false)
            } else {
                OrbitValidity::bad("odd rows must start with +".into())
            }
        }
        SpR(_) => {
            if !even_mult(odd) {
                OrbitValidity::bad("odd rows must occur with even multiplicity".into())
            } else if !leading_plus(odd) {
                OrbitValidity::bad("odd rows must start with +".into())
            } else {
                OrbitValidity::ok(false)
            }
        }
        Sp(p, q) => {
            needs_signature(p, q)?;
            if leading_plus(even) {
                OrbitValidity::ok(false)
            } else {
                OrbitValidity::bad("even rows must start with +".into())
            }
        }
        Exceptional(..) => unreachable!(),
    })
}

/// Partition of the complexified orbit.
pub fn complex_partition(rf: RealFormId, d: &SignedYoungDiagram) -> Partition {
    if rf.doubles_rows() {
        d.partition().doubled()
    } else {
        d.partition()
    }
}

/// `dim V(e)` and the centralizer `c` of a triple through a complex orbit.
pub fn classical_centralizer(kind: Classical, n: usize, p: &Partition) -> Result<(usize, ReductiveType)> {
    let v = validate_classical_orbit(kind, n, p)?;
    if !v.valid {
        return Err(Error::InvalidOrbit(v.reason));
    }
    let s2: usize = p.dual_sequence().iter().map(|s| s * s).sum();
    let odd: usize = p.multiplicities().iter().filter(|e| e.0 % 2 == 1).map(|e| e.1).sum();
    let r = p.multiplicities();
    Ok(match kind {
        Classical::Sl => {
            let mut c = ReductiveType::torus(r.len() - 1);
            for &ri in r.values() {
                c = c.plus(complex_sl(ri));
            }
            (s2 - 1, c)
        }
        Classical::So => {
            let mut c = ReductiveType::trivial();
            for (&i, &ri) in r {
                c = c.plus(if i % 2 == 0 { complex_sp(ri) } else { complex_so(ri) });
            }
            ((s2 - odd) / 2, c)
        }
        Classical::Sp => {
            let mut c = ReductiveType::trivial();
            for (&i, &ri) in r {
                c = c.plus(if i % 2 == 1 { complex_sp(ri) } else { complex_so(ri) });
            }
            ((s2 + odd) / 2, c)
        }
    })
}

pub fn complex_centralizer(ty: AlgebraType, p: &Partition) -> Result<(usize, ReductiveType)> {
    let (kind, n) = matrix_kind(ty)?;
    classical_centralizer(kind, n, p)
}

/// Real form `c^R` of the centralizer of a real sl2 triple.
pub fn real_triple_centralizer(rf: RealFormId, d: &SignedYoungDiagram) -> Result<ReductiveType> {
    use RealFormId::*;
    let v = validate_real_orbit(rf, d)?;
    if !v.valid {
        return Err(Error::InvalidOrbit(v.reason));
    }
    let lengths = d.lengths();
    let mut c = ReductiveType::trivial();
    match rf {
        SlR(_) => {
            c = ReductiveType::split_torus(lengths.len() - 1);
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(real_sl_r(pi + qi));
            }
        }
        SuStar(_) => {
            c = ReductiveType::split_torus(lengths.len() - 1);
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(real_su_star(pi + qi));
            }
        }
        Su(..) => {
            c = ReductiveType::torus(lengths.len() - 1);
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(real_su(pi, qi));
            }
        }
        So(..) => {
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(if i % 2 == 0 { real_sp_r(pi + qi) } else { real_so(pi, qi) });
            }
        }
        SoStar(_) => {
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(if i % 2 == 0 { real_sp_pq(pi, qi) } else { real_so_star(pi + qi) });
            }
        }
        SpR(_) => {
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(if i % 2 == 1 { real_sp_r(pi + qi) } else { real_so(pi, qi) });
            }
        }
        Sp(..) => {
            for &i in &lengths {
                let (pi, qi) = d.counts(i);
                c = c.plus(if i % 2 == 1 { real_sp_pq(pi, qi) } else { real_so_star(pi + qi) });
            }
        }
        Exceptional(..) => unreachable!(),
    }
    Ok(c)
}

/// A real nilpotent orbit: a signed diagram plus a tag when two orbits
/// share the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealOrbit {
    pub diagram: SignedYoungDiagram,
    pub tag: Option<OrbitTag>,
}

impl RealOrbit {
    pub fn new(diagram: SignedYoungDiagram, tag: Option<OrbitTag>) -> Self {
        RealOrbit { diagram, tag }
    }
}

impl fmt::Display for RealOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Some(t) => write!(f, "{} ({:?})", self.diagram, t),
            None => write!(f, "{}", self.diagram),
        }
    }
}

/// Every valid signed diagram of a classical real form.
pub fn real_orbits(rf: RealFormId) -> Result<Vec<RealOrbit>> {
    let size = rf.diagram_size().ok_or_else(|| Error::Unsupported(format!("{} is exceptional", rf)))?;
    let mut out = Vec::new();
    for part in Partition::all(size) {
        let lengths: Vec<(usize, usize)> = part.multiplicities().iter().map(|(&i, &r)| (i, r)).collect();
        let choices: Vec<usize> =
            if rf.unsigned() { vec![0; lengths.len()] } else { lengths.iter().map(|e| e.1).collect() };
        let mut idx = vec![0usize; lengths.len()];
        loop {
            let plus: BTreeMap<usize, usize> = if rf.unsigned() {
                lengths.iter().map(|&(i, r)| (i, r)).collect()
            } else {
                lengths.iter().zip(&idx).map(|(&(i, _), &k)| (i, k)).collect()
            };
            let d = SignedYoungDiagram::from_counts(&part, &plus)?;
            if let Ok(v) = validate_real_orbit(rf, &d) {
                if v.valid {
                    if v.very_even {
                        out.push(RealOrbit::new(d.clone(), Some(OrbitTag::I)));
                        out.push(RealOrbit::new(d, Some(OrbitTag::II)));
                    } else {
                        out.push(RealOrbit::new(d, None));
                    }
                }
            }
            let mut k = 0;
            while k < idx.len() && idx[k] == choices[k] {
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
            idx[k] += 1;
        }
    }
    Ok(out)
}

impl From<RealFormId> for String {
    fn from(x: RealFormId) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for RealFormId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(part("4").dual(), part("1^4"));
        let p = Partition::from_rows(&[3, 2]).unwrap();
        assert_eq!(p.dual_sequence(), vec![2, 2, 1]);
        let q = part("3,1,1");
        assert_eq!(q.dual().dual(), q);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn complex_validity() {
        assert!(validate_complex_orbit(AlgebraType::b(2), &part("3,1,1")).unwrap().valid);
        assert!(!validate_complex_orbit(AlgebraType::c(2), &part("3,1")).unwrap().valid);
        let v = validate_complex_orbit(AlgebraType::d(4), &part("4,4")).unwrap();
        assert!(v.valid && v.very_even);
        assert!(validate_complex_orbit(AlgebraType::d(4), &part("4")).is_err());
    }

    #[test]
    fn real_validity() {
        let d: SignedYoungDiagram = "3+,1-,1-".parse().unwrap();
        assert_eq!(d.signature(), (2, 3));
        assert!(validate_real_orbit(RealFormId::So(2, 3), &d).unwrap().valid);
        let d: SignedYoungDiagram = "2+,2+".parse().unwrap();
        assert!(validate_real_orbit(RealFormId::SpR(4), &d).unwrap().valid);
        let d: SignedYoungDiagram = "4+,1+,1-".parse().unwrap();
        assert!(!validate_real_orbit(RealFormId::So(3, 3), &d).unwrap().valid);
    }

    #[test]
    fn centralizer_examples() {
        let (v, c) = classical_centralizer(Classical::Sl, 3, &part("3")).unwrap();
        assert_eq!((v, c.dim()), (2, 0));
        let (_, c) = classical_centralizer(Classical::So, 9, &part("5,1^4")).unwrap();
        assert_eq!(c.dim(), 6);
        assert_eq!(c.factors.len(), 2);
        let (_, c) = classical_centralizer(Classical::Sp, 4, &part("2,2")).unwrap();
        assert_eq!((c.torus_rank, c.dim()), (1, 1));
        let (v, _) = classical_centralizer(Classical::Sp, 4, &part("1^4")).unwrap();
        assert_eq!(v, 10);
    }

    #[test]
    fn real_centralizer_examples() {
        let d: SignedYoungDiagram = "2+,2+".parse().unwrap();
        let c = real_triple_centralizer(RealFormId::Su(2, 2), &d).unwrap();
        assert!(c.is_compact());
        assert_eq!(c.dim(), 3);
        let d = SignedYoungDiagram::unsigned(&part("4"));
        let c = real_triple_centralizer(RealFormId::SlR(4), &d).unwrap();
        assert!(c.is_compact() && c.dim() == 0);
        let d: SignedYoungDiagram = "3+,1-,1-".parse().unwrap();
        let c = real_triple_centralizer(RealFormId::So(2, 3), &d).unwrap();
        assert!(c.is_compact());
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn real_form_grammar_round_trips() {
        for s in ["sl:4", "su*:6", "su:2,3", "so:2,3", "so*:8", "spR:6", "sp:1,2", "e7:-5", "g2:2"] {
            let rf: RealFormId = s.parse().unwrap();
            assert_eq!(rf.to_string(), s);
        }
        assert!("so*:7".parse::<RealFormId>().is_err());
        assert!("xx:3".parse::<RealFormId>().is_err());
        assert!(matches!("so:2".parse::<RealFormId>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn two_real_orbits_for_even_rows() {
        let orbits = real_orbits(RealFormId::SlR(2)).unwrap();
        assert_eq!(orbits.len(), 3);
    }
}
