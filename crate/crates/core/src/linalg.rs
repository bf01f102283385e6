//! Fraction-free exact linear algebra over the rationals.
//!
//! Rows are cleared of denominators and kept primitive; elimination uses
//! integer cross-multiplication followed by content division.

use crate::scalar::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Clears denominators and divides out the content. Returns an all-zero row
/// unchanged.
pub fn primitive_row(row: &[Q]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> =
        row.iter().map(|x| if x.is_zero() { BigInt::zero() } else { x.numer() * (&l / x.denom()) }).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn leading(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// `row <- p*row - a*piv`, then primitive.
fn eliminate(row: &mut [BigInt], piv: &[BigInt], col: usize) {
    let a = row[col].clone();
    if a.is_zero() {
        return;
    }
    let p = piv[col].clone();
    let g = a.gcd(&p);
    let (a, p) = (&a / &g, &p / &g);
    for (x, y) in row.iter_mut().zip(piv) {
        if y.is_zero() {
            if !x.is_zero() {
                *x *= &p;
            }
        } else {
            *x = &*x * &p - &a * y;
        }
    }
    make_primitive(row);
}

/// Reduced row echelon form of an integer matrix. Returns the nonzero rows
/// and their pivot columns; pivots are positive and pivot columns are
/// cleared in every other row.
fn rref_int(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    rows.retain(|r| leading(r).is_some());
    let mut cur = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if cur == rows.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for r in cur..rows.len() {
            if !rows[r][col].is_zero() {
                let better = match best {
                    None => true,
                    Some(b) => rows[r][col].abs() < rows[b][col].abs(),
                };
                if better {
                    best = Some(r);
                }
            }
        }
        let Some(b) = best else { continue };
        rows.swap(cur, b);
        if rows[cur][col].is_negative() {
            for x in rows[cur].iter_mut() {
                *x = -&*x;
            }
        }
        let piv = rows[cur].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != cur {
                eliminate(row, &piv, col);
            }
        }
        pivots.push(col);
        cur += 1;
    }
    rows.truncate(cur);
    (rows, pivots)
}

fn to_int(m: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| primitive_row(r)).collect()
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    rref_int(to_int(m), ncols).1.len()
}

/// Basis of `{x : m x = 0}` as primitive integer vectors. `ncols` is needed
/// when `m` has no rows.
pub fn kernel(m: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (rows, pivots) = rref_int(to_int(m), ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Q::zero(); ncols];
        x[f] = Q::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !row[f].is_zero() {
                x[pc] = -Q::new(row[f].clone(), row[pc].clone());
            }
        }
        let p = primitive_row(&x);
        out.push(p.into_iter().map(Q::from_integer).collect());
    }
    out
}

/// One solution of `a x = b`, free variables set to zero.
pub fn solve(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    assert_eq!(a.len(), b.len());
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (rows, pivots) = rref_int(to_int(&aug), ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = Q::new(row[ncols].clone(), row[pc].clone());
    }
    Some(x)
}

pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let aug: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n);
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (rows, pivots) = rref_int(to_int(&aug), 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(
        rows.iter()
            .zip(&pivots)
            .map(|(row, &pc)| row[n..].iter().map(|x| Q::new(x.clone(), row[pc].clone())).collect())
            .collect(),
    )
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![Q::zero(); m];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            let mut s = Q::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    s += x * y;
                }
            }
            s
        })
        .collect()
}

pub fn transpose(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Incrementally built row space in semi-echelon form.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                eliminate(&mut v, row, *p);
            }
        }
        v
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let r = self.reduce(primitive_row(v));
        match leading(&r) {
            None => false,
            Some(p) => {
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, r));
                true
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        leading(&self.reduce(primitive_row(v))).is_none()
    }

    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|(_, r)| r.iter().cloned().map(Q::from_integer).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qr};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[q(3), q(5)], 2).unwrap();
        assert_eq!(x, vec![qr(4, 5), qr(7, 5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), m(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[q(1), q(1)], 2).is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[q(0), q(2), q(4)]));
        assert!(e.insert(&[qr(1, 2), q(1), q(0)]));
        assert!(!e.insert(&[q(1), q(4), q(4)]));
        assert!(e.contains(&[q(1), q(0), q(-4)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }
}
