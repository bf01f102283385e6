//! Matrix models of `sl_n`, `so_n` and `sp_{2m}`.
//!
//! Indices are zero-based and `a' = n - 1 - a`. Both `so` and `sp` use an
//! antidiagonal form so that the diagonal matrices in the algebra form a
//! Cartan subalgebra: `J[a][a'] = 1` for `so`, and `J[a][a'] = +1` for
//! `a < m`, `-1` otherwise for `sp`.

use super::model::{Classical, LieModel, MatrixData, Source, SparseMat};
use crate::error::{Error, Result};
use crate::scalar::{Field, Q};

fn mat_mul(a: &SparseMat, b: &SparseMat, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; n]; n];
    for &(i, k, x) in a {
        for &(k2, j, y) in b {
            if k == k2 {
                out[i][j] += x * y;
            }
        }
    }
    out
}

fn eps(a: usize, n: usize) -> i64 {
    if a < n / 2 {
        1
    } else {
        -1
    }
}

pub fn form_matrix(kind: Classical, n: usize) -> Option<Vec<Vec<i64>>> {
    match kind {
        Classical::Sl => None,
        Classical::So => Some((0..n).map(|i| (0..n).map(|j| i64::from(i + j == n - 1)).collect()).collect()),
        Classical::Sp => {
            Some((0..n).map(|i| (0..n).map(|j| if i + j == n - 1 { eps(i, n) } else { 0 }).collect()).collect())
        }
    }
}

pub fn classical_algebra(kind: Classical, n: usize) -> Result<LieModel> {
    if n < 2 || (kind == Classical::Sp && n % 2 == 1) {
        return Err(Error::InvalidType(format!("{:?} of size {}", kind, n)));
    }
    let pr = |a: usize| n - 1 - a;
    let mut basis: Vec<SparseMat> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pivots: Vec<(usize, usize, i64)> = Vec::new();
    match kind {
        Classical::Sl => {
            for i in 0..n - 1 {
                basis.push(vec![(i, i, 1), (n - 1, n - 1, -1)]);
                labels.push(format!("H{}", i + 1));
                pivots.push((i, i, 1));
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(vec![(i, j, 1)]);
                        labels.push(format!("E{},{}", i + 1, j + 1));
                        pivots.push((i, j, 1));
                    }
                }
            }
        }
        Classical::So | Classical::Sp => {
            let m = n / 2;
            for a in 0..m {
                basis.push(vec![(a, a, 1), (pr(a), pr(a), -1)]);
                labels.push(format!("H{}", a + 1));
                pivots.push((a, a, 1));
            }
            for a in 0..n {
                for b in a..n {
                    if b == pr(a) {
                        continue;
                    }
                    let mat: SparseMat = match kind {
                        Classical::So if a == b => continue,
                        Classical::So => vec![(pr(a), b, 1), (pr(b), a, -1)],
                        _ if a == b => vec![(pr(a), a, 1)],
                        _ => vec![(pr(a), b, eps(pr(a), n)), (pr(b), a, eps(pr(b), n))],
                    };
                    pivots.push(mat[0]);
                    labels.push(format!("X{},{}", a + 1, b + 1));
                    basis.push(mat);
                }
            }
        }
    }
    let cartan_dim = match kind {
        Classical::Sl => n - 1,
        _ => n / 2,
    };
    let expected = match kind {
        Classical::Sl => n * n - 1,
        Classical::So => n * (n - 1) / 2,
        Classical::Sp => n * (n + 1) / 2,
    };
    assert_eq!(basis.len(), expected);
    let data = MatrixData { kind, n, form: form_matrix(kind, n), basis, pivots };
    let dim = data.basis.len();
    let skeleton = LieModel::from_table(
        String::new(),
        labels.clone(),
        (0..cartan_dim).collect(),
        Source::Matrix(data.clone()),
        vec![Vec::new(); dim * dim],
    );
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let ab = mat_mul(&data.basis[i], &data.basis[j], n);
            let ba = mat_mul(&data.basis[j], &data.basis[i], n);
            let c: Vec<Vec<Q>> =
                (0..n).map(|r| (0..n).map(|s| <Q as Field>::from_int(ab[r][s] - ba[r][s])).collect()).collect();
            let x = skeleton.from_matrix(&c).expect("bracket left the algebra");
            table[i * dim + j] = x
                .iter()
                .enumerate()
                .filter(|(_, v)| !Field::is_zero(*v))
                .map(|(k, v)| {
                    assert!(v.is_integer());
                    (k as u32, i64::try_from(v.numer()).unwrap())
                })
                .collect();
        }
    }
    let name = format!(
        "{}({})",
        match kind {
            Classical::Sl => "sl",
            Classical::So => "so",
            Classical::Sp => "sp",
        },
        n
    );
    Ok(LieModel::from_table(name, labels, (0..cartan_dim).collect(), Source::Matrix(data), table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preserves_form(m: &LieModel) -> bool {
        let md = m.matrix().unwrap();
        let Some(j) = &md.form else { return true };
        let n = md.n;
        md.basis.iter().all(|b| {
            let mut x = vec![vec![0i64; n]; n];
            for &(r, c, v) in b {
                x[r][c] += v;
            }
            (0..n).all(|r| {
                (0..n).all(|c| {
                    let xtj: i64 = (0..n).map(|k| x[k][r] * j[k][c]).sum();
                    let jx: i64 = (0..n).map(|k| j[r][k] * x[k][c]).sum();
                    xtj + jx == 0
                })
            })
        })
    }

    #[test]
    fn dimensions() {
        assert_eq!(classical_algebra(Classical::Sl, 2).unwrap().dim(), 3);
        assert_eq!(classical_algebra(Classical::So, 5).unwrap().dim(), 10);
        assert_eq!(classical_algebra(Classical::Sp, 4).unwrap().dim(), 10);
        assert!(classical_algebra(Classical::Sp, 5).is_err());
    }

    #[test]
    fn models_are_lie_algebras() {
        for (k, n) in [
            (Classical::Sl, 3),
            (Classical::Sl, 4),
            (Classical::So, 4),
            (Classical::So, 5),
            (Classical::So, 6),
            (Classical::Sp, 4),
            (Classical::Sp, 6),
        ] {
            let m = classical_algebra(k, n).unwrap();
            assert!(preserves_form(&m), "{}", m.name);
            assert!(m.antisymmetric());
            assert!(m.jacobi_exhaustive().passed(), "{}", m.name);
        }
    }
}
