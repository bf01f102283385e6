//! The involution attached to a triple and the bracket sweep deciding
//! whether it is a Lie algebra automorphism.

use super::model::LieModel;
use super::triple::Sl2Triple;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Field, Q};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `ad_h` eigenvalue of every basis element. Fails unless `ad_h` is
/// diagonal in the model basis.
pub fn basis_weights(model: &LieModel, h: &[Q]) -> Result<Vec<i64>> {
    (0..model.dim())
        .map(|j| {
            let col = model.ad_basis(h, j);
            let w = col[j].clone();
            if col.iter().enumerate().any(|(k, x)| k != j && !x.is_zero()) || !w.is_integer() {
                return Err(Error::Unsupported("ad_h is not diagonal in the model basis".into()));
            }
            w.to_integer().to_i64().ok_or_else(|| Error::Internal("weight overflow".into()))
        })
        .collect()
}

/// Basis indices grouped by weight.
pub fn weight_blocks(weights: &[i64]) -> BTreeMap<i64, Vec<usize>> {
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        out.entry(w).or_default().push(i);
    }
    out
}

/// Highest-weight vectors of weight `w`, as full coordinate vectors.
pub fn highest_weight_space(model: &LieModel, e: &[Q], blocks: &BTreeMap<i64, Vec<usize>>, w: i64) -> Vec<Vec<Q>> {
    let Some(cols) = blocks.get(&w) else { return Vec::new() };
    let ker = match blocks.get(&(w + 2)) {
        Some(rows) => linalg::kernel(&model.ad_block(e, rows, cols), cols.len()),
        None => (0..cols.len()).map(|i| (0..cols.len()).map(|j| q(i64::from(i == j))).collect()).collect(),
    };
    ker.into_iter()
        .map(|k| {
            let mut v = vec![q(0); model.dim()];
            for (c, &i) in cols.iter().enumerate() {
                v[i] = k[c].clone();
            }
            v
        })
        .collect()
}

/// One eigenvector `ad_f^k(v)` with `v` of highest weight `top`.
#[derive(Debug, Clone)]
pub struct Piece {
    pub top: i64,
    pub k: i64,
    pub sign: i8,
    pub vector: Vec<Q>,
}

#[derive(Debug, Clone)]
struct Block {
    weight: i64,
    indices: Vec<usize>,
    /// Eigenvectors restricted to the block, one per column position.
    pieces: Vec<usize>,
    /// Rows map block coordinates to eigen-coordinates.
    inverse: Vec<Vec<Q>>,
}

/// The involution acting by `+1` on the centralizer of the triple and by
/// `(-1)^(k+1)` on `ad_f^k(V_j)`, `j > 0`.
#[derive(Debug, Clone)]
pub struct InvolutionMap {
    dim: usize,
    pub weights: Vec<i64>,
    pub pieces: Vec<Piece>,
    blocks: Vec<Block>,
}

fn sign_of(top: i64, k: i64) -> i8 {
    if top == 0 || k % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Scales a rational vector to a primitive integer vector.
fn primitive_q(v: &[Q]) -> Vec<Q> {
    linalg::primitive_row(v).into_iter().map(Q::from_integer).collect()
}

pub fn sigma_e(model: &LieModel, t: &Sl2Triple<Q>) -> Result<InvolutionMap> {
    let dim = model.dim();
    let weights = basis_weights(model, &t.h)?;
    let blocks = weight_blocks(&weights);
    let f = primitive_q(&t.f);
    let mut pieces = Vec::new();
    for &w in blocks.keys().filter(|&&w| w >= 0) {
        for v in highest_weight_space(model, &t.e, &blocks, w) {
            let mut x = primitive_q(&v);
            for k in 0..=w {
                pieces.push(Piece { top: w, k, sign: sign_of(w, k), vector: x.clone() });
                if k < w {
                    x = primitive_q(&model.bracket(&f, &x));
                }
            }
        }
    }
    let mut out_blocks = Vec::new();
    for (&w, idx) in &blocks {
        let members: Vec<usize> = (0..pieces.len()).filter(|&p| pieces[p].top - 2 * pieces[p].k == w).collect();
        if members.len() != idx.len() {
            return Err(Error::Internal(format!(
                "weight {} has {} pieces for a block of size {}",
                w,
                members.len(),
                idx.len()
            )));
        }
        let m: Vec<Vec<Q>> =
            idx.iter().map(|&i| members.iter().map(|&p| pieces[p].vector[i].clone()).collect()).collect();
        let inverse =
            linalg::inverse(&m).ok_or_else(|| Error::Internal(format!("pieces do not span the weight-{} block", w)))?;
        out_blocks.push(Block { weight: w, indices: idx.clone(), pieces: members, inverse });
    }
    let s = InvolutionMap { dim, weights, pieces, blocks: out_blocks };
    let minus = |x: &[Q]| x.iter().map(|a| -a).collect::<Vec<Q>>();
    if s.apply(&t.e) != minus(&t.e) || s.apply(&t.f) != minus(&t.f) || s.apply(&t.h) != t.h {
        return Err(Error::Internal("involution does not act as expected on the triple".into()));
    }
    Ok(s)
}

impl InvolutionMap {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![q(0); self.dim];
        for b in &self.blocks {
            let xb: Vec<Q> = b.indices.iter().map(|&i| x[i].clone()).collect();
            if xb.iter().all(|v| v.is_zero()) {
                continue;
            }
            let c = linalg::mat_vec(&b.inverse, &xb);
            for (ci, &p) in c.iter().zip(&b.pieces) {
                if ci.is_zero() {
                    continue;
                }
                let piece = &self.pieces[p];
                let s = if piece.sign > 0 { ci.clone() } else { -ci };
                for &i in &b.indices {
                    if !piece.vector[i].is_zero() {
                        out[i] += &s * &piece.vector[i];
                    }
                }
            }
        }
        out
    }

    /// Applies the involution to real and imaginary parts separately.
    pub fn apply_gauss(&self, x: &[crate::scalar::GaussQ]) -> Vec<crate::scalar::GaussQ> {
        let re: Vec<Q> = x.iter().map(|z| z.re.clone()).collect();
        let im: Vec<Q> = x.iter().map(|z| z.im.clone()).collect();
        self.apply(&re).into_iter().zip(self.apply(&im)).map(|(a, b)| crate::scalar::GaussQ::new(a, b)).collect()
    }

    pub fn fixed_dim(&self) -> usize {
        self.pieces.iter().filter(|p| p.sign > 0).count()
    }

    pub fn squares_to_identity(&self) -> bool {
        (0..self.dim).all(|j| {
            let b: Vec<Q> = (0..self.dim).map(|i| q(i64::from(i == j))).collect();
            self.apply(&self.apply(&b)) == b
        })
    }

    /// Image of a basis element.
    pub fn on_basis(&self, j: usize) -> Vec<Q> {
        let b: Vec<Q> = (0..self.dim).map(|i| q(i64::from(i == j))).collect();
        self.apply(&b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleReport {
    pub magical: bool,
    /// First basis pair `(x, y)` with `sigma[x,y] != [sigma x, sigma y]`.
    pub witness: Option<(usize, usize)>,
    pub pairs_checked: usize,
    pub fixed_dim: usize,
}

fn to_i128(v: &[Q]) -> Option<Vec<(usize, i128)>> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            if !x.is_integer() {
                return None;
            }
            x.numer().to_i128().map(|n| (i, n))
        })
        .collect()
}

fn int_row(row: &[Q]) -> Option<Vec<i128>> {
    linalg::primitive_row(row).iter().map(|x: &BigInt| x.to_i128()).collect()
}

/// Annihilators of the `+1` and `-1` eigenspaces inside one block.
struct Annihilator {
    indices: Vec<usize>,
    rows: [Vec<Vec<i128>>; 2],
}

fn sign_slot(s: i8) -> usize {
    usize::from(s < 0)
}

/// Sweeps all pairs of eigenvectors; the bracket of eigenvectors with
/// signs `s, t` must lie in the eigenspace of sign `st`. Integer
/// arithmetic is checked and falls back to exact rationals on overflow.
pub fn is_magical_oracle(model: &LieModel, t: &Sl2Triple<Q>) -> Result<OracleReport> {
    let s = sigma_e(model, t)?;
    oracle_with(model, &s)
}

pub fn oracle_with(model: &LieModel, s: &InvolutionMap) -> Result<OracleReport> {
    let dim = model.dim();
    let mut ann: BTreeMap<i64, Annihilator> = BTreeMap::new();
    for b in &s.blocks {
        let mut rows: [Vec<Vec<i128>>; 2] = [Vec::new(), Vec::new()];
        let mut ok = true;
        for (r, &p) in b.pieces.iter().enumerate() {
            // Row r kills every eigenvector but piece p, so it annihilates
            // the eigenspace of the opposite sign.
            let slot = sign_slot(-s.pieces[p].sign);
            match int_row(&b.inverse[r]) {
                Some(row) => rows[slot].push(row),
                None => ok = false,
            }
        }
        if ok {
            ann.insert(b.weight, Annihilator { indices: b.indices.clone(), rows });
        }
    }
    let vecs: Vec<Option<Vec<(usize, i128)>>> = s.pieces.iter().map(|p| to_i128(&p.vector)).collect();
    let mut acc = vec![0i128; dim];
    let mut checked = 0;
    for a in 0..s.pieces.len() {
        for b in a..s.pieces.len() {
            let (pa, pb) = (&s.pieces[a], &s.pieces[b]);
            let w = (pa.top - 2 * pa.k) + (pb.top - 2 * pb.k);
            let target_sign = pa.sign * pb.sign;
            checked += 1;
            let fast = match (&vecs[a], &vecs[b], ann.get(&w)) {
                (Some(u), Some(v), Some(an)) => int_pair_ok(model, u, v, an, target_sign, &mut acc),
                (Some(u), Some(v), None) if !s.blocks.iter().any(|bl| bl.weight == w) => {
                    int_bracket_zero(model, u, v, &mut acc)
                }
                _ => None,
            };
            let ok = match fast {
                Some(ok) => ok,
                None => exact_pair_ok(model, s, &pa.vector, &pb.vector, target_sign),
            };
            if !ok {
                let witness = basis_witness(model, s, &pa.vector, &pb.vector);
                return Ok(OracleReport { magical: false, witness, pairs_checked: checked, fixed_dim: s.fixed_dim() });
            }
        }
    }
    Ok(OracleReport { magical: true, witness: None, pairs_checked: checked, fixed_dim: s.fixed_dim() })
}

fn int_bracket(model: &LieModel, u: &[(usize, i128)], v: &[(usize, i128)], acc: &mut [i128]) -> Option<Vec<usize>> {
    let mut touched = Vec::new();
    for &(i, x) in u {
        for &(j, y) in v {
            let xy = x.checked_mul(y)?;
            for &(k, c) in model.bracket_basis(i, j) {
                let k = k as usize;
                if acc[k] == 0 {
                    touched.push(k);
                }
                acc[k] = acc[k].checked_add(xy.checked_mul(c as i128)?)?;
            }
        }
    }
    touched.sort_unstable();
    touched.dedup();
    Some(touched)
}

fn clear(acc: &mut [i128], touched: &[usize]) {
    for &k in touched {
        acc[k] = 0;
    }
}

fn int_bracket_zero(model: &LieModel, u: &[(usize, i128)], v: &[(usize, i128)], acc: &mut [i128]) -> Option<bool> {
    let res = int_bracket(model, u, v, acc);
    let out = res.as_ref().map(|t| t.iter().all(|&k| acc[k] == 0));
    match res {
        Some(t) => clear(acc, &t),
        None => acc.iter_mut().for_each(|x| *x = 0),
    }
    out
}

fn int_pair_ok(
    model: &LieModel,
    u: &[(usize, i128)],
    v: &[(usize, i128)],
    an: &Annihilator,
    sign: i8,
    acc: &mut [i128],
) -> Option<bool> {
    let Some(touched) = int_bracket(model, u, v, acc) else {
        acc.iter_mut().for_each(|x| *x = 0);
        return None;
    };
    let mut result = Some(true);
    let nonzero: Vec<(usize, i128)> =
        an.indices.iter().enumerate().filter(|(_, &i)| acc[i] != 0).map(|(c, &i)| (c, acc[i])).collect();
    let inside: usize = nonzero.len();
    let total = touched.iter().filter(|&&k| acc[k] != 0).count();
    if inside != total {
        result = Some(false);
    } else {
        'rows: for row in &an.rows[sign_slot(sign)] {
            let mut dot: i128 = 0;
            for &(c, x) in &nonzero {
                match row[c].checked_mul(x).and_then(|y| dot.checked_add(y)) {
                    Some(d) => dot = d,
                    None => {
                        result = None;
                        break 'rows;
                    }
                }
            }
            if dot != 0 {
                result = Some(false);
                break;
            }
        }
    }
    clear(acc, &touched);
    result
}

fn exact_pair_ok(model: &LieModel, s: &InvolutionMap, u: &[Q], v: &[Q], sign: i8) -> bool {
    let br = model.bracket(u, v);
    let img = s.apply(&br);
    if sign > 0 {
        img == br
    } else {
        img.iter().zip(&br).all(|(a, b)| (a + b).is_zero())
    }
}

/// Refines an eigenvector failure to a pair of basis elements.
fn basis_witness(model: &LieModel, s: &InvolutionMap, u: &[Q], v: &[Q]) -> Option<(usize, usize)> {
    let su: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
    let sv: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    let mut cache: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
    for &x in &su {
        for &y in &sv {
            let (x, y) = (x.min(y), x.max(y));
            if !hom_holds_on_basis(model, s, x, y, &mut cache) {
                return Some((x, y));
            }
        }
    }
    None
}

fn hom_holds_on_basis(
    model: &LieModel,
    s: &InvolutionMap,
    x: usize,
    y: usize,
    cache: &mut BTreeMap<usize, Vec<Q>>,
) -> bool {
    for i in [x, y] {
        cache.entry(i).or_insert_with(|| s.on_basis(i));
    }
    let mut br = vec![q(0); model.dim()];
    for &(k, c) in model.bracket_basis(x, y) {
        br[k as usize] = q(c);
    }
    let lhs = s.apply(&br);
    let rhs = model.bracket(&cache[&x], &cache[&y]);
    lhs == rhs
}

/// Full check `sigma[b_x, b_y] = [sigma b_x, sigma b_y]` on basis pairs,
/// used to cross-check the eigenvector sweep on small models.
pub fn basis_sweep(model: &LieModel, s: &InvolutionMap) -> Option<(usize, usize)> {
    let mut cache = BTreeMap::new();
    for x in 0..model.dim() {
        for y in x + 1..model.dim() {
            if !hom_holds_on_basis(model, s, x, y, &mut cache) {
                return Some((x, y));
            }
        }
    }
    None
}
