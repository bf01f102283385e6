//! Chevalley basis with signs fixed by extraspecial pairs.
//!
//! Basis order: `h_1..h_r`, then `e_a` for positive roots in root-system
//! order, then `e_{-a}` in the same order. `[e_a, e_{-a}] = h_a` is the
//! coroot, `N_{a,b} = +(p+1)` on extraspecial pairs and
//! `N_{-a,-b} = -N_{a,b}`.

use super::model::{LieModel, Source};
use crate::error::Result;
use crate::rootsys::{build_root_system, AlgebraType, Root, RootSystem};
use std::collections::HashMap;
use std::sync::Arc;

struct Constants<'a> {
    rs: &'a RootSystem,
    /// Signed roots: index `k < P` is positive root `k`, `P + k` its negative.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// Extraspecial pair for each non-simple positive root.
    extra: Vec<Option<(usize, usize)>>,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> Constants<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let p = rs.num_positive();
        let mut roots = rs.positive.clone();
        roots.extend(rs.positive.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut extra = vec![None; p];
        for (xi, x) in rs.positive.iter().enumerate() {
            for (ai, a) in rs.positive.iter().enumerate() {
                if ai >= xi {
                    break;
                }
                let b: Root = x.iter().zip(a).map(|(s, t)| s - t).collect();
                if let Some(bi) = rs.positive_index(&b) {
                    extra[xi] = Some((ai, bi));
                    break;
                }
            }
        }
        Constants { rs, roots, index, extra, memo: HashMap::new() }
    }

    fn p(&self) -> usize {
        self.rs.num_positive()
    }

    fn neg(&self, i: usize) -> usize {
        let p = self.p();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    fn is_pos(&self, i: usize) -> bool {
        i < self.p()
    }

    fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let s: Root = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.index.get(&s).copied()
    }

    fn norm(&self, i: usize) -> i64 {
        self.rs.norm(&self.roots[i])
    }

    /// Largest `p` with `b - p a` a root.
    fn string_down(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur: Root = self.roots[b].clone();
        loop {
            cur = cur.iter().zip(&self.roots[a]).map(|(x, y)| x - y).collect();
            if self.index.contains_key(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{x,y}`, zero when `x + y` is not a root.
    fn n(&mut self, x: usize, y: usize) -> i64 {
        let Some(z) = self.sum(x, y) else { return 0 };
        if let Some(&v) = self.memo.get(&(x, y)) {
            return v;
        }
        let v = match (self.is_pos(x), self.is_pos(y)) {
            (true, true) if x > y => -self.n(y, x),
            (true, true) => self.n_positive(x, y, z),
            (false, false) => {
                let (nx, ny) = (self.neg(x), self.neg(y));
                -self.n(nx, ny)
            }
            _ => {
                // N_{x,y}/|z|^2 = N_{y,-z}/|x|^2 = N_{-z,x}/|y|^2
                let nz = self.neg(z);
                let num = if self.is_pos(y) == self.is_pos(nz) {
                    self.n(y, nz) * self.norm(z)
                } else {
                    self.n(nz, x) * self.norm(z)
                };
                let den = if self.is_pos(y) == self.is_pos(nz) { self.norm(x) } else { self.norm(y) };
                assert_eq!(num % den, 0, "non-integral structure constant");
                num / den
            }
        };
        self.memo.insert((x, y), v);
        v
    }

    fn n_positive(&mut self, x: usize, y: usize, xi: usize) -> i64 {
        let (a, b) = self.extra[xi].expect("sum of positive roots is not simple");
        if (a, b) == (x, y) {
            return self.string_down(a, b) + 1;
        }
        let (na, nb) = (self.neg(a), self.neg(b));
        // Four-root relation with x + y - a - b = 0.
        let mut acc: i128 = 0;
        if let Some(ya) = self.sum(y, na) {
            let t = self.n(y, na) as i128 * self.n(x, nb) as i128;
            acc += t * (12 / self.norm(ya) as i128);
        }
        if let Some(xa) = self.sum(na, x) {
            let t = self.n(na, x) as i128 * self.n(y, nb) as i128;
            acc += t * (12 / self.norm(xa) as i128);
        }
        let num = acc * self.norm(xi) as i128;
        let den = 12 * self.n(a, b) as i128;
        assert_eq!(num % den, 0, "non-integral structure constant");
        (num / den) as i64
    }
}

pub fn chevalley_algebra(ty: AlgebraType) -> Result<LieModel> {
    let rs = build_root_system(ty)?;
    let r = rs.rank();
    let p = rs.num_positive();
    let dim = r + 2 * p;
    let mut c = Constants::new(&rs);
    let elem = |i: usize| r + i;
    let mut table: Vec<Vec<(u32, i64)>> = vec![Vec::new(); dim * dim];
    for i in 0..r {
        for k in 0..2 * p {
            let root = &c.roots[k];
            let w: i64 = (0..r).map(|j| root[j] * rs.cartan[j][i]).sum();
            if w != 0 {
                table[i * dim + elem(k)] = vec![(elem(k) as u32, w)];
                table[elem(k) * dim + i] = vec![(elem(k) as u32, -w)];
            }
        }
    }
    for x in 0..2 * p {
        for y in 0..2 * p {
            let entry = if y == c.neg(x) {
                // h_x = sum_i a_i (a_i, a_i)/(x, x) h_i, negated for negative x.
                let root = c.roots[x].clone();
                let nx = c.norm(x);
                (0..r).filter(|&i| root[i] != 0).map(|i| (i as u32, root[i] * rs.gram[i][i] / nx)).collect()
            } else {
                match c.sum(x, y) {
                    Some(z) => vec![(elem(z) as u32, c.n(x, y))],
                    None => Vec::new(),
                }
            };
            table[elem(x) * dim + elem(y)] = entry;
        }
    }
    let mut labels: Vec<String> = (1..=r).map(|i| format!("h{}", i)).collect();
    let fmt_root = |v: &Root| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("");
    for k in 0..p {
        labels.push(format!("e[{}]", fmt_root(&c.roots[k])));
    }
    for k in 0..p {
        labels.push(format!("f[{}]", fmt_root(&c.roots[k])));
    }
    let name = format!("chevalley({})", ty);
    Ok(LieModel::from_table(name, labels, (0..r).collect(), Source::Chevalley(Arc::new(rs)), table))
}

/// Basis index of the root vector for a signed root.
pub fn root_vector_index(rs: &RootSystem, root: &[i64]) -> Option<usize> {
    let r = rs.rank();
    let p = rs.num_positive();
    if root.iter().all(|&c| c <= 0) {
        let neg: Root = root.iter().map(|c| -c).collect();
        rs.positive_index(&neg).map(|k| r + p + k)
    } else {
        rs.positive_index(root).map(|k| r + k)
    }
}

/// Signed root of a basis element, `None` for Cartan elements.
pub fn basis_root(rs: &RootSystem, i: usize) -> Option<Root> {
    let r = rs.rank();
    let p = rs.num_positive();
    if i < r {
        None
    } else if i < r + p {
        Some(rs.positive[i - r].clone())
    } else {
        Some(rs.positive[i - r - p].iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn small_types_satisfy_jacobi() {
        for ty in [
            AlgebraType::a(1),
            AlgebraType::a(3),
            AlgebraType::b(3),
            AlgebraType::c(3),
            AlgebraType::d(4),
            AlgebraType::exceptional(Family::G2),
        ] {
            let m = chevalley_algebra(ty).unwrap();
            assert_eq!(m.dim(), ty.dim());
            assert!(m.antisymmetric(), "{}", ty);
            let rep = m.jacobi_exhaustive();
            assert!(rep.passed(), "{} fails Jacobi at {:?}", ty, rep.failure);
        }
    }

    #[test]
    fn structure_constants_are_string_lengths() {
        let m = chevalley_algebra(AlgebraType::exceptional(Family::G2)).unwrap();
        let rs = m.root_system().unwrap().clone();
        for x in 2..m.dim() {
            for y in 2..m.dim() {
                let (Some(a), Some(b)) = (basis_root(&rs, x), basis_root(&rs, y)) else { continue };
                let s: Root = a.iter().zip(&b).map(|(u, v)| u + v).collect();
                if !rs.is_root(&s) {
                    continue;
                }
                let mut p = 0;
                let mut cur = b.clone();
                loop {
                    cur = cur.iter().zip(&a).map(|(u, v)| u - v).collect();
                    if rs.is_root(&cur) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let n = m.bracket_basis(x, y)[0].1;
                assert_eq!(n.abs(), p + 1);
            }
        }
    }
}
