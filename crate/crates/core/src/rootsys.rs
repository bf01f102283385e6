//! Root systems of simple Lie algebras, gradings by weighted Dynkin
//! diagrams and sl2 multiplicities.
//!
//! Node order:
//! - A_n, B_n, C_n, D_n: a chain `1 - 2 - ... - n`; for B_n the last node is
//!   short, for C_n it is long, and for D_n the node `n` hangs off `n-2`.
//! - E_n: a chain `1 - 2 - 3 - 5 - 6 - ... - n` with node 4 attached to 3.
//! - F4: `1 - 2 => 3 - 4` with 1, 2 short and 3, 4 long.
//! - G2: node 1 short, node 2 long.
//!
//! Inner products are normalized so short roots have squared length 2.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraType {
    pub family: Family,
    pub rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(AlgebraType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{:?} with rank {}", family, rank)))
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).unwrap()
    }
    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).unwrap()
    }
    pub fn c(n: usize) -> Self {
        Self::new(Family::C, n).unwrap()
    }
    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).unwrap()
    }
    pub fn exceptional(family: Family) -> Self {
        let rank = match family {
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 2,
            _ => panic!("{:?} is classical", family),
        };
        AlgebraType { family, rank }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Size of the defining matrix representation for classical types.
    pub fn matrix_size(&self) -> Option<usize> {
        let n = self.rank;
        match self.family {
            Family::A => Some(n + 1),
            Family::B => Some(2 * n + 1),
            Family::C | Family::D => Some(2 * n),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A:{}", self.rank),
            Family::B => write!(f, "B:{}", self.rank),
            Family::C => write!(f, "C:{}", self.rank),
            Family::D => write!(f, "D:{}", self.rank),
            fam => write!(f, "{:?}", fam),
        }
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    /// Accepts `A:3`, `A3`, `E8`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let exc = match t.to_ascii_uppercase().as_str() {
            "E6" => Some(Family::E6),
            "E7" => Some(Family::E7),
            "E8" => Some(Family::E8),
            "F4" => Some(Family::F4),
            "G2" => Some(Family::G2),
            _ => None,
        };
        if let Some(f) = exc {
            return Ok(Self::exceptional(f));
        }
        let mut chars = t.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown type `{}`", t) }),
        };
        let rest = chars.as_str();
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Parse { pos: t.len() - rest.len(), msg: format!("bad rank `{}`", rest) })?;
        Self::new(fam, rank)
    }
}

/// Symmetrized Gram matrix of the simple roots.
fn gram_matrix(ty: AlgebraType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 1, -1);
            link(&mut g, 1, 2, -1);
            link(&mut g, 2, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 4..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F4 => {
            g[0][0] = 2;
            g[1][1] = 2;
            g[2][2] = 4;
            g[3][3] = 4;
            link(&mut g, 0, 1, -1);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
        }
        Family::G2 => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub ty: AlgebraType,
    /// Gram matrix of simple roots.
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered by height then
    /// lexicographically.
    pub positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

/// Simple-root coordinates of a root.
pub type Root = Vec<i64>;

pub fn build_root_system(ty: AlgebraType) -> Result<RootSystem> {
    let ty = AlgebraType::new(ty.family, ty.rank)?;
    let n = ty.rank;
    let gram = gram_matrix(ty);
    let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect()).collect();
    let mut by_height: Vec<Vec<Root>> = vec![(0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()];
    let mut all: std::collections::HashSet<Root> = by_height[0].iter().cloned().collect();
    loop {
        let mut next: Vec<Root> = Vec::new();
        for beta in by_height.last().unwrap() {
            for i in 0..n {
                if beta.iter().filter(|&&c| c != 0).count() == 1 && beta[i] == 1 {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !all.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|k| beta[k] * cartan[k][i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        for r in &next {
            all.insert(r.clone());
        }
        by_height.push(next);
    }
    let positive: Vec<Root> = by_height.into_iter().flatten().collect();
    if positive.len() != ty.num_positive_roots() {
        return Err(Error::Internal(format!("{} produced {} positive roots", ty, positive.len())));
    }
    let index = positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    Ok(RootSystem { ty, gram, cartan, positive, index })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn dim(&self) -> usize {
        self.ty.dim()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `<a, b^vee> = 2(a,b)/(b,b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.norm(b)
    }

    pub fn positive_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        if r.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = r.iter().map(|c| -c).collect();
            self.index.contains_key(&neg)
        } else {
            self.index.contains_key(r)
        }
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().unwrap()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank()];
        r[i] = 1;
        r
    }

    pub fn is_long_simple(&self, i: usize) -> bool {
        let m = (0..self.rank()).map(|j| self.gram[j][j]).max().unwrap();
        self.gram[i][i] == m
    }

    /// `alpha(h)` for `h` with `alpha_i(h) = labels[i]`.
    pub fn weight(r: &[i64], labels: &[i64]) -> i64 {
        r.iter().zip(labels).map(|(a, l)| a * l).sum()
    }

    /// Exponents from the dual of the height partition of positive roots.
    /// For D_n with n even the exponent n-1 appears twice.
    pub fn exponents(&self) -> Vec<u32> {
        let mut count: BTreeMap<i64, usize> = BTreeMap::new();
        for r in &self.positive {
            *count.entry(Self::height(r)).or_default() += 1;
        }
        let top = *count.keys().last().unwrap();
        let mut out = Vec::new();
        for k in 1..=top {
            let here = count.get(&k).copied().unwrap_or(0);
            let above = count.get(&(k + 1)).copied().unwrap_or(0);
            for _ in 0..here.saturating_sub(above) {
                out.push(k as u32);
            }
        }
        out
    }
}

pub fn exponents(rs: &RootSystem) -> Vec<u32> {
    rs.exponents()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinLabels(pub Vec<i64>);

impl DynkinLabels {
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if let Some(l) = labels.iter().find(|l| !(0..=2).contains(*l)) {
            return Err(Error::InvalidLabels(format!("label {} not in {{0,1,2}}", l)));
        }
        Ok(DynkinLabels(labels))
    }

    pub fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.0.len() != rs.rank() {
            return Err(Error::SizeMismatch { expected: rs.rank(), got: self.0.len() });
        }
        Ok(())
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|l| l % 2 == 0)
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for DynkinLabels {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let v: i64 = part.trim().parse().map_err(|_| Error::Parse { pos, msg: format!("bad label `{}`", part) })?;
            out.push(v);
            pos += part.len() + 1;
        }
        DynkinLabels::new(out)
    }
}

/// Dimensions of the `ad_h` eigenspaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub dims: BTreeMap<i64, usize>,
    pub total: usize,
}

impl GradedDims {
    pub fn get(&self, j: i64) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn max_weight(&self) -> i64 {
        self.dims.keys().copied().max().unwrap_or(0)
    }
}

pub fn graded_dimensions(rs: &RootSystem, labels: &DynkinLabels) -> Result<GradedDims> {
    labels.check_rank(rs)?;
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    dims.insert(0, rs.rank());
    for r in &rs.positive {
        let w = RootSystem::weight(r, &labels.0);
        *dims.entry(w).or_default() += 1;
        *dims.entry(-w).or_default() += 1;
    }
    Ok(GradedDims { dims, total: rs.dim() })
}

/// Multiplicities of irreducible summands of `g` as a module over the
/// triple, keyed by highest weight `j` (summand dimension `j + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Data {
    pub by_weight: BTreeMap<u32, usize>,
}

impl Sl2Data {
    pub fn from_pairs(pairs: &[(u32, usize)]) -> Self {
        Sl2Data { by_weight: pairs.iter().filter(|p| p.1 > 0).map(|&(m, n)| (2 * m, n)).collect() }
    }

    pub fn n(&self, j: u32) -> usize {
        self.by_weight.get(&j).copied().unwrap_or(0)
    }

    pub fn n0(&self) -> usize {
        self.n(0)
    }

    /// `(m, n_{2m})` for even weights, including `m = 0` when `n_0 > 0`.
    pub fn pairs(&self) -> Vec<(u32, usize)> {
        self.by_weight.iter().filter(|(j, _)| *j % 2 == 0).map(|(j, n)| (j / 2, *n)).collect()
    }

    /// The `m_j` with `m_j > 0`.
    pub fn nonzero_m(&self) -> Vec<u32> {
        self.pairs().into_iter().filter(|p| p.0 > 0).map(|p| p.0).collect()
    }

    pub fn dim(&self) -> usize {
        self.by_weight.iter().map(|(j, n)| n * (*j as usize + 1)).sum()
    }

    pub fn is_even(&self) -> bool {
        self.by_weight.keys().all(|j| j % 2 == 0)
    }

    /// Graded dimensions reconstructed from the multiplicities.
    pub fn graded(&self) -> GradedDims {
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        for (&j, &n) in &self.by_weight {
            let j = j as i64;
            let mut w = -j;
            while w <= j {
                *dims.entry(w).or_default() += n;
                w += 2;
            }
        }
        GradedDims { dims, total: self.dim() }
    }
}

pub fn sl2_multiplicities(gd: &GradedDims) -> Result<Sl2Data> {
    for (&j, &d) in &gd.dims {
        if gd.get(-j) != d {
            return Err(Error::InvalidLabels(format!("grading not symmetric at {}", j)));
        }
    }
    let mut by_weight = BTreeMap::new();
    for j in 0..=gd.max_weight() {
        let n = gd.get(j) as i64 - gd.get(j + 2) as i64;
        if n < 0 {
            return Err(Error::InconsistentGrading { weight: j, value: n });
        }
        if n > 0 {
            by_weight.insert(j as u32, n as usize);
        }
    }
    Ok(Sl2Data { by_weight })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNode {
    pub root: Root,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetEdge {
    pub from: usize,
    pub to: usize,
    /// Zero-based simple root index.
    pub simple: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedPoset {
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<PosetEdge>,
}

pub fn root_poset(rs: &RootSystem, labels: &DynkinLabels) -> Result<WeightedPoset> {
    labels.check_rank(rs)?;
    let nodes: Vec<PosetNode> =
        rs.positive.iter().map(|r| PosetNode { root: r.clone(), weight: RootSystem::weight(r, &labels.0) }).collect();
    let mut edges = Vec::new();
    for (from, r) in rs.positive.iter().enumerate() {
        for i in 0..rs.rank() {
            let mut up = r.clone();
            up[i] += 1;
            if let Some(to) = rs.positive_index(&up) {
                edges.push(PosetEdge { from, to, simple: i });
            }
        }
    }
    Ok(WeightedPoset { nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<AlgebraType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(AlgebraType::a(n));
        }
        for n in 2..=8 {
            v.push(AlgebraType::b(n));
            v.push(AlgebraType::c(n));
        }
        for n in 3..=8 {
            v.push(AlgebraType::d(n));
        }
        for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
            v.push(AlgebraType::exceptional(f));
        }
        v
    }

    #[test]
    fn root_counts() {
        for ty in all_types() {
            let rs = build_root_system(ty).unwrap();
            assert_eq!(rs.num_positive(), ty.num_positive_roots(), "{}", ty);
            assert!(rs.positive.iter().all(|r| r.iter().all(|&c| c >= 0)));
        }
    }

    #[test]
    fn a3_cartan() {
        let rs = build_root_system(AlgebraType::a(3)).unwrap();
        assert_eq!(rs.cartan, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn f4_lengths() {
        let rs = build_root_system(AlgebraType::exceptional(Family::F4)).unwrap();
        let long: Vec<bool> = (0..4).map(|i| rs.is_long_simple(i)).collect();
        assert_eq!(long, vec![false, false, true, true]);
        assert_eq!(rs.highest_root(), &vec![2, 4, 3, 2]);
    }

    #[test]
    fn exponent_examples() {
        let f4 = build_root_system(AlgebraType::exceptional(Family::F4)).unwrap();
        assert_eq!(f4.exponents(), vec![1, 5, 7, 11]);
        let g2 = build_root_system(AlgebraType::exceptional(Family::G2)).unwrap();
        assert_eq!(g2.exponents(), vec![1, 5]);
        let a3 = build_root_system(AlgebraType::a(3)).unwrap();
        assert_eq!(a3.exponents(), vec![1, 2, 3]);
        let d4 = build_root_system(AlgebraType::d(4)).unwrap();
        assert_eq!(d4.exponents(), vec![1, 3, 3, 5]);
    }

    #[test]
    fn exponents_sum_to_dim() {
        for ty in all_types() {
            let rs = build_root_system(ty).unwrap();
            let e = rs.exponents();
            assert_eq!(e.len(), rs.rank());
            assert_eq!(e.iter().map(|m| 2 * *m as usize + 1).sum::<usize>(), rs.dim());
            assert_eq!(*e.last().unwrap() as i64, RootSystem::height(rs.highest_root()));
        }
    }

    #[test]
    fn parse_types() {
        assert_eq!("A:3".parse::<AlgebraType>().unwrap(), AlgebraType::a(3));
        assert_eq!("d5".parse::<AlgebraType>().unwrap(), AlgebraType::d(5));
        assert_eq!("E8".parse::<AlgebraType>().unwrap().rank, 8);
        assert!("D:2".parse::<AlgebraType>().is_err());
        assert!("X:2".parse::<AlgebraType>().is_err());
    }

    #[test]
    fn a2_all_two_multiplicities() {
        let rs = build_root_system(AlgebraType::a(2)).unwrap();
        let gd = graded_dimensions(&rs, &DynkinLabels(vec![2, 2])).unwrap();
        let s = sl2_multiplicities(&gd).unwrap();
        assert_eq!(s.n(2), 1);
        assert_eq!(s.n(4), 1);
        assert_eq!(s.n0(), 0);
    }

    #[test]
    fn inconsistent_grading_rejected() {
        let rs = build_root_system(AlgebraType::a(2)).unwrap();
        let gd = graded_dimensions(&rs, &DynkinLabels(vec![2, 0])).unwrap();
        assert!(sl2_multiplicities(&gd).is_ok());
        let bad = GradedDims { dims: [(-2, 3), (0, 1), (2, 3)].into_iter().collect(), total: 7 };
        assert!(matches!(sl2_multiplicities(&bad), Err(Error::InconsistentGrading { .. })));
    }

    #[test]
    fn g2_poset() {
        let rs = build_root_system(AlgebraType::exceptional(Family::G2)).unwrap();
        let p = root_poset(&rs, &DynkinLabels(vec![2, 2])).unwrap();
        let mut w: Vec<i64> = p.nodes.iter().map(|n| n.weight).collect();
        w.sort();
        assert_eq!(w, vec![2, 2, 4, 6, 8, 10]);
        let a1 = build_root_system(AlgebraType::a(1)).unwrap();
        let p = root_poset(&a1, &DynkinLabels(vec![2])).unwrap();
        assert_eq!(p.nodes.len(), 1);
        assert_eq!(p.nodes[0].weight, 2);
        assert!(p.edges.is_empty());
    }
}
