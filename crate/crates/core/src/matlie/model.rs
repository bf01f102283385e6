//! Lie algebras given by integer structure constants in a fixed basis.

use crate::linalg;
use crate::rootsys::RootSystem;
use crate::scalar::{Field, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Which classical family a matrix model realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Classical {
    Sl,
    So,
    Sp,
}

/// Sparse integer matrix, entries `(row, col, value)`.
pub type SparseMat = Vec<(usize, usize, i64)>;

#[derive(Debug, Clone)]
pub struct MatrixData {
    pub kind: Classical,
    /// Size of the defining representation.
    pub n: usize,
    /// Gram matrix of the invariant form (absent for `sl`).
    pub form: Option<Vec<Vec<i64>>>,
    pub basis: Vec<SparseMat>,
    /// Entry that determines each coordinate, with the basis value there.
    pub pivots: Vec<(usize, usize, i64)>,
}

#[derive(Debug, Clone)]
pub enum Source {
    Chevalley(Arc<RootSystem>),
    Matrix(MatrixData),
}

#[derive(Debug, Clone)]
pub struct LieModel {
    pub name: String,
    pub labels: Vec<String>,
    /// Indices of the standard Cartan subalgebra basis.
    pub cartan: Vec<usize>,
    pub source: Source,
    dim: usize,
    table: Vec<Vec<(u32, i64)>>,
}

/// Sparse integer vector in the model basis.
pub type IntVec = Vec<(usize, i64)>;

fn add_into(acc: &mut Vec<(usize, i64)>, k: usize, v: i64) {
    match acc.iter_mut().find(|(i, _)| *i == k) {
        Some(slot) => slot.1 += v,
        None => acc.push((k, v)),
    }
}

impl LieModel {
    pub(crate) fn from_table(
        name: String,
        labels: Vec<String>,
        cartan: Vec<usize>,
        source: Source,
        table: Vec<Vec<(u32, i64)>>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(table.len(), dim * dim);
        LieModel { name, labels, cartan, source, dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[b_i, b_j]` as sparse integer coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vec<F: Field>(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn zero<F: Field>(&self) -> Vec<F> {
        vec![F::zero(); self.dim]
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        let ys: Vec<usize> = (0..self.dim).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                let entries = self.bracket_basis(i, j);
                if entries.is_empty() {
                    continue;
                }
                let c = xi.mul(&y[j]);
                for &(k, s) in entries {
                    let t = c.mul_int(s);
                    out[k as usize] = out[k as usize].add(&t);
                }
            }
        }
        out
    }

    /// `[x, b_j]`.
    pub fn ad_basis<F: Field>(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(k, s) in self.bracket_basis(i, j) {
                let t = xi.mul_int(s);
                out[k as usize] = out[k as usize].add(&t);
            }
        }
        out
    }

    /// Matrix of `ad_x` restricted to `cols`, projected to `rows`.
    pub fn ad_block(&self, x: &[Q], rows: &[usize], cols: &[usize]) -> Vec<Vec<Q>> {
        let mut pos = vec![usize::MAX; self.dim];
        for (r, &i) in rows.iter().enumerate() {
            pos[i] = r;
        }
        let mut m = vec![vec![<Q as Field>::zero(); cols.len()]; rows.len()];
        for (c, &j) in cols.iter().enumerate() {
            let col = self.ad_basis(x, j);
            for (k, v) in col.into_iter().enumerate() {
                if !Field::is_zero(&v) {
                    assert!(pos[k] != usize::MAX, "ad_x leaves the target block");
                    m[pos[k]][c] = v;
                }
            }
        }
        m
    }

    pub fn bracket_int(&self, x: &IntVec, y: &IntVec) -> IntVec {
        let mut acc: Vec<(usize, i64)> = Vec::new();
        for &(i, a) in x {
            for &(j, b) in y {
                for &(k, s) in self.bracket_basis(i, j) {
                    add_into(&mut acc, k as usize, a * b * s);
                }
            }
        }
        acc.retain(|e| e.1 != 0);
        acc
    }

    /// Jacobi identity on the basis triple `(i, j, k)`.
    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let b = |t: usize| vec![(t, 1i64)];
        let mut acc: Vec<(usize, i64)> = Vec::new();
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            let yz = self.bracket_int(&b(y), &b(z));
            for (t, v) in self.bracket_int(&b(x), &yz) {
                add_into(&mut acc, t, v);
            }
        }
        acc.iter().all(|e| e.1 == 0)
    }

    pub fn antisymmetric(&self) -> bool {
        for i in 0..self.dim {
            if !self.bracket_basis(i, i).is_empty() {
                return false;
            }
            for j in 0..i {
                let mut a: Vec<(u32, i64)> = self.bracket_basis(i, j).to_vec();
                let mut b: Vec<(u32, i64)> = self.bracket_basis(j, i).iter().map(|&(k, v)| (k, -v)).collect();
                a.sort();
                b.sort();
                if a != b {
                    return false;
                }
            }
        }
        true
    }

    /// Checks Jacobi on every ordered triple `i < j < k`, which suffices
    /// given antisymmetry.
    pub fn jacobi_exhaustive(&self) -> JacobiReport {
        let mut checked = 0;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    checked += 1;
                    if !self.jacobi_holds(i, j, k) {
                        return JacobiReport { checked, failure: Some((i, j, k)) };
                    }
                }
            }
        }
        JacobiReport { checked, failure: None }
    }

    pub fn jacobi_sampled(&self, samples: usize, seed: u64) -> JacobiReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in 0..samples {
            let i = rng.gen_range(0..self.dim);
            let j = rng.gen_range(0..self.dim);
            let k = rng.gen_range(0..self.dim);
            if !self.jacobi_holds(i, j, k) {
                return JacobiReport { checked: t + 1, failure: Some((i, j, k)) };
            }
        }
        JacobiReport { checked: samples, failure: None }
    }

    /// Exhaustive up to dimension 78, sampled above.
    pub fn jacobi_check(&self, seed: u64) -> JacobiReport {
        if self.dim <= 78 {
            self.jacobi_exhaustive()
        } else {
            self.jacobi_sampled(100_000, seed)
        }
    }

    pub fn is_subalgebra(&self, basis: &[Vec<Q>]) -> bool {
        let mut ech = linalg::Echelon::new(self.dim);
        for v in basis {
            ech.insert(v);
        }
        for (a, x) in basis.iter().enumerate() {
            for y in &basis[a + 1..] {
                if !ech.contains(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn matrix(&self) -> Option<&MatrixData> {
        match &self.source {
            Source::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        match &self.source {
            Source::Chevalley(rs) => Some(rs),
            _ => None,
        }
    }

    /// Dense matrix of an element in a matrix model.
    pub fn to_matrix(&self, x: &[Q]) -> Option<Vec<Vec<Q>>> {
        let md = self.matrix()?;
        let mut m = vec![vec![<Q as Field>::zero(); md.n]; md.n];
        for (k, xk) in x.iter().enumerate() {
            if Field::is_zero(xk) {
                continue;
            }
            for &(r, c, v) in &md.basis[k] {
                m[r][c] = Field::add(&m[r][c], &xk.mul_int(v));
            }
        }
        Some(m)
    }

    /// Coordinates of a matrix, or `None` when it is not in the algebra.
    pub fn from_matrix(&self, m: &[Vec<Q>]) -> Option<Vec<Q>> {
        let md = self.matrix()?;
        let x: Vec<Q> = md.pivots.iter().map(|&(r, c, v)| Field::mul(&m[r][c], &<Q as Field>::from_int(v))).collect();
        if self.to_matrix(&x)?.as_slice() == m {
            Some(x)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub checked: usize,
    pub failure: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}
