//! sl2-triples: construction from partitions and weighted diagrams, and
//! Jacobson-Morozov completion.

use super::chevalley::root_vector_index;
use super::model::{Classical, LieModel};
use crate::classify::weighted_dynkin_from_partition;
use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{validate_classical_orbit, OrbitTag, Partition};
use crate::rootsys::{AlgebraType, DynkinLabels, Root, RootSystem};
use crate::scalar::{Field, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn vadd<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

pub fn vsub<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

pub fn vscale<F: Field>(s: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|a| s.mul(a)).collect()
}

pub fn vzero<F: Field>(x: &[F]) -> bool {
    x.iter().all(|a| a.is_zero())
}

/// Elements `f, h, e` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Triple<F> {
    pub f: Vec<F>,
    pub h: Vec<F>,
    pub e: Vec<F>,
}

impl<F: Field> Sl2Triple<F> {
    /// Name of the first failing relation.
    pub fn failure(&self, m: &LieModel) -> Option<&'static str> {
        let two = F::from_int(2);
        if m.bracket(&self.h, &self.e) != vscale(&two, &self.e) {
            Some("[h,e] = 2e")
        } else if m.bracket(&self.h, &self.f) != vscale(&two.neg(), &self.f) {
            Some("[h,f] = -2f")
        } else if m.bracket(&self.e, &self.f) != self.h {
            Some("[e,f] = h")
        } else if vzero(&self.e) {
            Some("e != 0")
        } else {
            None
        }
    }

    pub fn verify(&self, m: &LieModel) -> bool {
        self.failure(m).is_none()
    }

    pub fn check(self, m: &LieModel) -> Result<Self> {
        match self.failure(m) {
            None => Ok(self),
            Some(rel) => Err(Error::Internal(format!("triple fails {}", rel))),
        }
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn zeros(n: usize) -> Vec<Vec<Q>> {
    vec![vec![Q::from_integer(0.into()); n]; n]
}

/// Abstract model of the defining representation: Jordan blocks carrying
/// irreducible sl2-actions, with an invariant form for so and sp.
struct Abstract {
    e: Vec<Vec<Q>>,
    f: Vec<Vec<Q>>,
    weight: Vec<i64>,
    form: Option<Vec<Vec<Q>>>,
}

fn abstract_rep(kind: Classical, p: &Partition) -> Abstract {
    let n = p.size();
    let mut e = zeros(n);
    let mut f = zeros(n);
    let mut weight = vec![0i64; n];
    let mut form = zeros(n);
    let eps: i64 = if kind == Classical::Sp { -1 } else { 1 };
    let mut start = 0;
    let mut block = |k: usize, e: &mut Vec<Vec<Q>>, f: &mut Vec<Vec<Q>>, weight: &mut Vec<i64>| {
        let s = start;
        for i in 0..k {
            weight[s + i] = k as i64 - 1 - 2 * i as i64;
            if i > 0 {
                e[s + i - 1][s + i] = q(1);
            }
            if i + 1 < k {
                f[s + i + 1][s + i] = q(((i + 1) * (k - 1 - i)) as i64);
            }
        }
        start += k;
        s
    };
    // Alternating signs of the weight-zero self-pairings for so.
    let mut t = 1i64;
    for k in p.multiplicities().keys().copied().collect::<Vec<_>>() {
        let r = p.r(k);
        let self_dual = match kind {
            Classical::Sl => true,
            Classical::So => k % 2 == 1,
            Classical::Sp => k % 2 == 0,
        };
        if self_dual {
            for _ in 0..r {
                let s = block(k, &mut e, &mut f, &mut weight);
                let lambda = if kind == Classical::So {
                    let mid = (k - 1) / 2;
                    let l = if mid % 2 == 0 { t } else { -t };
                    t = -t;
                    l
                } else {
                    1
                };
                for i in 0..k {
                    let sgn = if i % 2 == 0 { 1 } else { -1 };
                    form[s + i][s + k - 1 - i] = q(sgn * lambda);
                }
            }
        } else {
            for _ in 0..r / 2 {
                let s = block(k, &mut e, &mut f, &mut weight);
                let s2 = block(k, &mut e, &mut f, &mut weight);
                for i in 0..k {
                    let sgn = if i % 2 == 0 { 1 } else { -1 };
                    form[s + i][s2 + k - 1 - i] = q(sgn);
                    form[s2 + k - 1 - i][s + i] = q(eps * sgn);
                }
            }
        }
    }
    let form = if kind == Classical::Sl { None } else { Some(form) };
    Abstract { e, f, weight, form }
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![q(0); n];
    v[i] = q(1);
    v
}

/// Change of basis whose columns are the model's basis vectors written in
/// the abstract basis, ordered by decreasing weight.
fn adapted_basis(kind: Classical, a: &Abstract) -> Result<Vec<Vec<Q>>> {
    let n = a.weight.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (-a.weight[i], i));
    let Some(g) = &a.form else {
        return Ok(linalg::transpose(&order.iter().map(|&i| unit(n, i)).collect::<Vec<_>>(), n));
    };
    let pr = |x: usize| n - 1 - x;
    let pair = |x: &[Q], y: &[Q]| -> Q {
        let mut s = q(0);
        for i in 0..n {
            if x[i] != q(0) {
                for j in 0..n {
                    if y[j] != q(0) {
                        s += &x[i] * &g[i][j] * &y[j];
                    }
                }
            }
        }
        s
    };
    let mut cols: Vec<Option<Vec<Q>>> = vec![None; n];
    let mut pos = 0;
    while pos < n && a.weight[order[pos]] > 0 {
        let w = a.weight[order[pos]];
        let xs: Vec<usize> = order.iter().copied().filter(|&i| a.weight[i] == w).collect();
        let ys: Vec<usize> = order.iter().copied().filter(|&i| a.weight[i] == -w).collect();
        let m: Vec<Vec<Q>> = xs.iter().map(|&x| ys.iter().map(|&y| g[x][y].clone()).collect()).collect();
        let inv = linalg::inverse(&m).ok_or_else(|| Error::Internal("degenerate weight pairing".into()))?;
        for (i, &x) in xs.iter().enumerate() {
            cols[pos + i] = Some(unit(n, x));
            let mut y = vec![q(0); n];
            for (j, &yj) in ys.iter().enumerate() {
                y[yj] = inv[j][i].clone();
            }
            cols[pr(pos + i)] = Some(y);
        }
        pos += xs.len();
    }
    let zero: Vec<usize> = order.iter().copied().filter(|&i| a.weight[i] == 0).collect();
    let mut rest = zero.clone();
    match kind {
        Classical::So => {
            while rest.len() >= 2 {
                let (x, y) = (unit(n, rest[0]), unit(n, rest[1]));
                let (gx, gy) = (pair(&x, &x), pair(&y, &y));
                if gx != q(1) || gy != q(-1) {
                    return Err(Error::Internal("unexpected weight-zero form".into()));
                }
                cols[pos] = Some(vadd(&x, &y));
                cols[pr(pos)] = Some(vscale(&Q::new(1.into(), 2.into()), &vsub(&x, &y)));
                rest.drain(..2);
                pos += 1;
            }
            if let Some(&z) = rest.first() {
                cols[pos] = Some(unit(n, z));
            }
        }
        _ => {
            let mut used = vec![false; n];
            for &x in &zero {
                if used[x] {
                    continue;
                }
                let y = zero
                    .iter()
                    .copied()
                    .find(|&y| !used[y] && y != x && g[x][y] != q(0))
                    .ok_or_else(|| Error::Internal("unpaired weight-zero vector".into()))?;
                used[x] = true;
                used[y] = true;
                let s = g[x][y].clone();
                cols[pos] = Some(unit(n, x));
                cols[pr(pos)] = Some(vscale(&(q(1) / s), &unit(n, y)));
                pos += 1;
            }
        }
    }
    let cols: Vec<Vec<Q>> = cols
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Internal("unfilled basis slot".into())))
        .collect::<Result<_>>()?;
    Ok(linalg::transpose(&cols, n))
}

fn conj(p: &[Vec<Q>], pinv: &[Vec<Q>], x: &[Vec<Q>]) -> Vec<Vec<Q>> {
    linalg::mat_mul(&linalg::mat_mul(pinv, x), p)
}

/// Diagonal labels `alpha_i(h)` of a diagonal element of a matrix model.
pub fn diagonal_labels(model: &LieModel, h: &[Q]) -> Option<Vec<Q>> {
    let md = model.matrix()?;
    let mat = model.to_matrix(h)?;
    let n = md.n;
    let d: Vec<Q> = (0..n).map(|i| mat[i][i].clone()).collect();
    let m = n / 2;
    let diff = |i: usize| &d[i] - &d[i + 1];
    Some(match md.kind {
        Classical::Sl => (0..n - 1).map(diff).collect(),
        Classical::So if n % 2 == 1 => {
            let mut l: Vec<Q> = (0..m - 1).map(diff).collect();
            l.push(d[m - 1].clone());
            l
        }
        Classical::So => {
            let mut l: Vec<Q> = (0..m - 1).map(diff).collect();
            l.push(&d[m - 2] + &d[m - 1]);
            l
        }
        Classical::Sp => {
            let mut l: Vec<Q> = (0..m - 1).map(diff).collect();
            l.push(&d[m - 1] * q(2));
            l
        }
    })
}

fn model_type(kind: Classical, n: usize) -> Option<AlgebraType> {
    let t = match kind {
        Classical::Sl => AlgebraType::new(crate::rootsys::Family::A, n - 1),
        Classical::So if n % 2 == 1 => AlgebraType::new(crate::rootsys::Family::B, n / 2),
        Classical::So => AlgebraType::new(crate::rootsys::Family::D, n / 2),
        Classical::Sp => AlgebraType::new(crate::rootsys::Family::C, n / 2),
    };
    t.ok()
}

/// Triple in a matrix model whose nilpositive element has Jordan type `p`,
/// with `h` diagonal and dominant. For very even orbits of `so_{4k}` the
/// tag selects the orbit.
pub fn triple_from_partition(model: &LieModel, p: &Partition, tag: Option<OrbitTag>) -> Result<Sl2Triple<Q>> {
    let md = model.matrix().ok_or_else(|| Error::Unsupported("partitions need a matrix model".into()))?;
    let (kind, n) = (md.kind, md.n);
    let v = validate_classical_orbit(kind, n, p)?;
    if !v.valid {
        return Err(Error::InvalidOrbit(v.reason));
    }
    if p.largest() <= 1 {
        return Err(Error::InvalidOrbit("the zero orbit has no triple".into()));
    }
    let a = abstract_rep(kind, p);
    let mut pm = adapted_basis(kind, &a)?;
    if let Some(g) = &a.form {
        let gram = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&pm, n), g), &pm);
        let j = md.form.as_ref().expect("form");
        if (0..n).any(|r| (0..n).any(|c| gram[r][c] != q(j[r][c]))) {
            return Err(Error::Internal("adapted basis does not realize the model form".into()));
        }
    }
    if v.very_even && kind == Classical::So {
        if let Some(ty) = model_type(kind, n).filter(|t| t.rank >= 3) {
            let want = weighted_dynkin_from_partition(ty, p, Some(tag.unwrap_or(OrbitTag::I)))?;
            let hd: Vec<Vec<Q>> = (0..n)
                .map(|r| (0..n).map(|c| if r == c { q(a_weight_at(&a, &pm, r)) } else { q(0) }).collect())
                .collect();
            let h = model.from_matrix(&hd).ok_or_else(|| Error::Internal("h outside the model".into()))?;
            let got = diagonal_labels(model, &h).expect("matrix model");
            if got.iter().zip(&want.0).any(|(x, y)| *x != q(*y)) {
                let m = n / 2;
                for row in pm.iter_mut() {
                    row.swap(m - 1, m);
                }
            }
        }
    }
    let pinv = linalg::inverse(&pm).ok_or_else(|| Error::Internal("singular change of basis".into()))?;
    let hmat: Vec<Vec<Q>> =
        (0..n).map(|r| (0..n).map(|c| if r == c { q(a_weight_at(&a, &pm, r)) } else { q(0) }).collect()).collect();
    let emat = conj(&pm, &pinv, &a.e);
    let fmat = conj(&pm, &pinv, &a.f);
    let into = |m: &[Vec<Q>]| model.from_matrix(m).ok_or_else(|| Error::Internal("element outside the model".into()));
    Sl2Triple { f: into(&fmat)?, h: into(&hmat)?, e: into(&emat)? }.check(model)
}

/// Weight of the `r`-th adapted basis vector.
fn a_weight_at(a: &Abstract, pm: &[Vec<Q>], r: usize) -> i64 {
    let n = a.weight.len();
    (0..n).find(|&i| pm[i][r] != q(0)).map(|i| a.weight[i]).expect("nonzero column")
}

/// Nilpotent element of Jordan type `p`.
pub fn nilpotent_from_partition(model: &LieModel, p: &Partition) -> Result<Vec<Q>> {
    Ok(triple_from_partition(model, p, None)?.e)
}

/// Completes a nilpotent `e` to a triple, with `h` in the standard Cartan
/// subalgebra when possible.
pub fn jm_complete(model: &LieModel, e: &[Q]) -> Result<Sl2Triple<Q>> {
    let dim = model.dim();
    if vzero(e) {
        return Err(Error::InvalidOrbit("zero element has no completion".into()));
    }
    let ad_e: Vec<Vec<Q>> = (0..dim).map(|j| model.ad_basis(e, j)).collect();
    let two_e: Vec<Q> = e.iter().map(|x| x * q(2)).collect();
    let r = model.cartan.len();
    // Unknowns (c, y): h = sum c_i h_i, [e, y] = h, [h, e] = 2e.
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(2 * dim);
    let mut rhs: Vec<Q> = Vec::with_capacity(2 * dim);
    for k in 0..dim {
        let mut row = vec![q(0); r + dim];
        for (i, &ci) in model.cartan.iter().enumerate() {
            if ci == k {
                row[i] = q(-1);
            }
        }
        for j in 0..dim {
            row[r + j] = ad_e[j][k].clone();
        }
        rows.push(row);
        rhs.push(q(0));
    }
    let he: Vec<Vec<Q>> = model.cartan.iter().map(|&ci| model.bracket(&model.basis_vec::<Q>(ci), e)).collect();
    for k in 0..dim {
        let mut row = vec![q(0); r + dim];
        for i in 0..r {
            row[i] = he[i][k].clone();
        }
        rows.push(row);
        rhs.push(two_e[k].clone());
    }
    let h = match linalg::solve(&rows, &rhs, r + dim) {
        Some(sol) => {
            let mut h = vec![q(0); dim];
            for (i, &ci) in model.cartan.iter().enumerate() {
                h[ci] = sol[i].clone();
            }
            h
        }
        None => {
            // ad_e^2 y = -2e, then h = [e, y].
            let ad_e_t = linalg::transpose(&ad_e, dim);
            let ad_e2 = linalg::mat_mul(&ad_e_t, &ad_e_t);
            let minus: Vec<Q> = two_e.iter().map(|x| -x).collect();
            let y =
                linalg::solve(&ad_e2, &minus, dim).ok_or_else(|| Error::Internal("element is not nilpotent".into()))?;
            model.bracket(e, &y)
        }
    };
    let f = complete_f(model, e, &h)?;
    Sl2Triple { f, h, e: e.to_vec() }.check(model)
}

/// The unique `f` with `[e,f] = h` and `[h,f] = -2f`.
fn complete_f(model: &LieModel, e: &[Q], h: &[Q]) -> Result<Vec<Q>> {
    let dim = model.dim();
    let ad_e: Vec<Vec<Q>> = (0..dim).map(|j| model.ad_basis(e, j)).collect();
    let ad_h: Vec<Vec<Q>> = (0..dim).map(|j| model.ad_basis(h, j)).collect();
    let mut rows = Vec::with_capacity(2 * dim);
    let mut rhs = Vec::with_capacity(2 * dim);
    for k in 0..dim {
        rows.push((0..dim).map(|j| ad_e[j][k].clone()).collect::<Vec<Q>>());
        rhs.push(h[k].clone());
    }
    for k in 0..dim {
        rows.push((0..dim).map(|j| if j == k { &ad_h[j][k] + q(2) } else { ad_h[j][k].clone() }).collect());
        rhs.push(q(0));
    }
    linalg::solve(&rows, &rhs, dim).ok_or_else(|| Error::Internal("no f completes the triple".into()))
}

/// Default retry bound for generic coefficients.
pub const DIAGRAM_RETRIES: usize = 32;

/// Element `h` of the Cartan subalgebra with `alpha_i(h) = labels_i`.
pub fn cartan_from_labels(model: &LieModel, labels: &DynkinLabels) -> Result<Vec<Q>> {
    let rs = model.root_system().ok_or_else(|| Error::Unsupported("labels need a Chevalley model".into()))?;
    labels.check_rank(rs)?;
    let r = rs.rank();
    let a: Vec<Vec<Q>> = (0..r).map(|j| (0..r).map(|i| q(rs.cartan[j][i])).collect()).collect();
    let b: Vec<Q> = labels.0.iter().map(|&l| q(l)).collect();
    let c = linalg::solve(&a, &b, r).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
    let mut h = vec![q(0); model.dim()];
    for (i, x) in c.into_iter().enumerate() {
        h[model.cartan[i]] = x;
    }
    Ok(h)
}

fn roots_of_weight(rs: &RootSystem, labels: &[i64], w: i64) -> Vec<Root> {
    rs.positive.iter().filter(|r| RootSystem::weight(r, labels) == w).cloned().collect()
}

fn neg(r: &[i64]) -> Root {
    r.iter().map(|c| -c).collect()
}

/// Triple with the given weighted diagram in a Chevalley model. The first
/// attempt takes every coefficient of `e` equal to one; later attempts use
/// seeded random integers.
pub fn triple_from_diagram(model: &LieModel, labels: &DynkinLabels, seed: u64, retries: usize) -> Result<Sl2Triple<Q>> {
    let h = cartan_from_labels(model, labels)?;
    let rs = model.root_system().expect("checked above");
    let pos = roots_of_weight(rs, &labels.0, 2);
    if pos.is_empty() {
        return Err(Error::NotRealizable(format!("no roots of weight 2 for labels {}", labels)));
    }
    let e_idx: Vec<usize> = pos.iter().map(|r| root_vector_index(rs, r).expect("root")).collect();
    let f_idx: Vec<usize> = pos.iter().map(|r| root_vector_index(rs, &neg(r)).expect("root")).collect();
    let zero_idx: Vec<usize> = (0..model.dim())
        .filter(|&i| match super::chevalley::basis_root(rs, i) {
            None => true,
            Some(r) => RootSystem::weight(&r, &labels.0) == 0,
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..retries.max(1) {
        let mut e = vec![q(0); model.dim()];
        for &i in &e_idx {
            e[i] = if attempt == 0 { q(1) } else { q(rng.gen_range(1..=9)) };
        }
        let m = model.ad_block(&e, &zero_idx, &f_idx);
        let rhs: Vec<Q> = zero_idx.iter().map(|&i| h[i].clone()).collect();
        if let Some(c) = linalg::solve(&m, &rhs, f_idx.len()) {
            let mut f = vec![q(0); model.dim()];
            for (k, &i) in f_idx.iter().enumerate() {
                f[i] = c[k].clone();
            }
            return Sl2Triple { f, h, e }.check(model);
        }
    }
    Err(Error::NotRealizable(format!("labels {} admit no triple after {} attempts", labels, retries.max(1))))
}

/// The simple root `a` and roots `b_1, b_2, b_3` spanning the `so_8`
/// subalgebra attached to the fourth-case diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedRoots {
    pub alpha: Root,
    pub betas: [Root; 3],
}

impl RedRoots {
    pub fn all(&self) -> Vec<Root> {
        let mut v = vec![self.alpha.clone()];
        v.extend(self.betas.iter().cloned());
        v
    }
}

fn radd(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn rsub(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Locates the red roots for the given labels and returns them with the
/// principal triple of their `so_8`, normalized as
/// `e = 10 e_a + 6 sum e_b`, `f = f_a + sum f_b`.
pub fn case4_triple(model: &LieModel, labels: &DynkinLabels) -> Result<(RedRoots, Sl2Triple<Q>)> {
    let rs = model.root_system().ok_or_else(|| Error::Unsupported("needs a Chevalley model".into()))?;
    labels.check_rank(rs)?;
    let l = &labels.0;
    let theta = rs.highest_root().clone();
    let w8 = roots_of_weight(rs, l, 8);
    let [top] = w8.as_slice() else {
        return Err(Error::NotRealizable("no unique root of weight 8".into()));
    };
    let alpha = rsub(&theta, top);
    if !(0..rs.rank()).any(|i| rs.simple_root(i) == alpha) {
        return Err(Error::NotRealizable("highest root minus weight-8 root is not simple".into()));
    }
    let cands: Vec<Root> = roots_of_weight(rs, l, 2)
        .into_iter()
        .filter(|b| {
            *b != alpha
                && rs.norm(b) == rs.norm(&alpha)
                && rs.is_root(&radd(&alpha, b))
                && !rs.is_root(&rsub(&alpha, b))
                && !rs.is_root(&rsub(b, &alpha))
        })
        .collect();
    let orth = |a: &Root, b: &Root| !rs.is_root(&radd(a, b)) && !rs.is_root(&rsub(a, b)) && !rs.is_root(&rsub(b, a));
    let h_target = cartan_from_labels(model, labels)?;
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            for k in j + 1..cands.len() {
                let (b1, b2, b3) = (&cands[i], &cands[j], &cands[k]);
                if !(orth(b1, b2) && orth(b1, b3) && orth(b2, b3)) {
                    continue;
                }
                let red = RedRoots { alpha: alpha.clone(), betas: [b1.clone(), b2.clone(), b3.clone()] };
                let mut e = vec![q(0); model.dim()];
                let mut f = vec![q(0); model.dim()];
                for (n, r) in red.all().iter().enumerate() {
                    let c = if n == 0 { 10 } else { 6 };
                    e[root_vector_index(rs, r).expect("root")] = q(c);
                    f[root_vector_index(rs, &neg(r)).expect("root")] = q(1);
                }
                let h = model.bracket(&e, &f);
                if h != h_target {
                    continue;
                }
                let t = Sl2Triple { f, h, e };
                if t.verify(model) {
                    return Ok((red, t));
                }
            }
        }
    }
    Err(Error::NotRealizable(format!("no red roots realize labels {}", labels)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlie::{chevalley_algebra, classical_algebra};
    use crate::rootsys::Family;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_rows(rows).unwrap()
    }

    fn power_ranks(model: &LieModel, e: &[Q]) -> Vec<usize> {
        let m = model.to_matrix(e).unwrap();
        let mut cur = m.clone();
        let mut out = Vec::new();
        loop {
            let r = linalg::rank(&cur);
            out.push(r);
            if r == 0 {
                return out;
            }
            cur = linalg::mat_mul(&cur, &m);
        }
    }

    #[test]
    fn jordan_type_from_ranks() {
        let sl3 = classical_algebra(Classical::Sl, 3).unwrap();
        assert_eq!(power_ranks(&sl3, &nilpotent_from_partition(&sl3, &p(&[3])).unwrap()), vec![2, 1, 0]);
        let sp4 = classical_algebra(Classical::Sp, 4).unwrap();
        assert_eq!(power_ranks(&sp4, &nilpotent_from_partition(&sp4, &p(&[2, 2])).unwrap()), vec![2, 0]);
    }

    #[test]
    fn sl3_principal_completion() {
        let sl3 = classical_algebra(Classical::Sl, 3).unwrap();
        let e = nilpotent_from_partition(&sl3, &p(&[3])).unwrap();
        let t = jm_complete(&sl3, &e).unwrap();
        let h = sl3.to_matrix(&t.h).unwrap();
        assert_eq!((h[0][0].clone(), h[1][1].clone(), h[2][2].clone()), (q(2), q(0), q(-2)));
        let f = sl3.to_matrix(&t.f).unwrap();
        assert_eq!((f[1][0].clone(), f[2][1].clone()), (q(2), q(2)));
    }

    #[test]
    fn sl2_standard_completion() {
        let sl2 = classical_algebra(Classical::Sl, 2).unwrap();
        let mut e = vec![q(0); 3];
        let i = sl2.labels.iter().position(|l| l == "E1,2").unwrap();
        e[i] = q(1);
        let t = jm_complete(&sl2, &e).unwrap();
        let f = sl2.to_matrix(&t.f).unwrap();
        assert_eq!(f, vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
        let h = sl2.to_matrix(&t.h).unwrap();
        assert_eq!(h, vec![vec![q(1), q(0)], vec![q(0), q(-1)]]);
    }

    #[test]
    fn so5_element_preserves_form() {
        let so5 = classical_algebra(Classical::So, 5).unwrap();
        let t = triple_from_partition(&so5, &p(&[3, 1, 1]), None).unwrap();
        let x = so5.to_matrix(&t.e).unwrap();
        let j = so5.matrix().unwrap().form.clone().unwrap();
        let jq: Vec<Vec<Q>> = j.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        let lhs = linalg::mat_mul(&linalg::transpose(&x, 5), &jq);
        let rhs = linalg::mat_mul(&jq, &x);
        assert!((0..5).all(|r| (0..5).all(|c| &lhs[r][c] + &rhs[r][c] == q(0))));
        let t2 = jm_complete(&so5, &t.e).unwrap();
        let h = so5.to_matrix(&t2.h).unwrap();
        let mut d: Vec<Q> = (0..5).map(|i| h[i][i].clone()).collect();
        d.sort();
        assert_eq!(d, vec![q(-2), q(0), q(0), q(0), q(2)]);
    }

    #[test]
    fn partition_triples_have_expected_diagrams() {
        for (kind, n) in [(Classical::Sl, 5), (Classical::So, 7), (Classical::So, 8), (Classical::Sp, 6)] {
            let model = classical_algebra(kind, n).unwrap();
            let ty = model_type(kind, n).unwrap();
            for part in Partition::all(n) {
                let v = validate_classical_orbit(kind, n, &part).unwrap();
                if !v.valid || part.largest() == 1 {
                    continue;
                }
                let tags: Vec<Option<OrbitTag>> =
                    if v.very_even { vec![Some(OrbitTag::I), Some(OrbitTag::II)] } else { vec![None] };
                for tag in tags {
                    let t = triple_from_partition(&model, &part, tag).unwrap();
                    let want = weighted_dynkin_from_partition(ty, &part, tag).unwrap();
                    let got = diagonal_labels(&model, &t.h).unwrap();
                    assert_eq!(got, want.0.iter().map(|&x| q(x)).collect::<Vec<_>>(), "{:?} {} {}", kind, n, part);
                }
            }
        }
    }

    #[test]
    fn diagram_triples() {
        let g2 = chevalley_algebra(AlgebraType::exceptional(Family::G2)).unwrap();
        assert!(triple_from_diagram(&g2, &DynkinLabels(vec![2, 2]), 1, 4).is_ok());
        let f4 = chevalley_algebra(AlgebraType::exceptional(Family::F4)).unwrap();
        let l = DynkinLabels(vec![0, 0, 2, 2]);
        assert!(triple_from_diagram(&f4, &l, 1, 4).is_ok());
        let (red, t) = case4_triple(&f4, &l).unwrap();
        assert!(t.verify(&f4));
        assert_eq!(red.betas.len(), 3);
        assert!(matches!(
            triple_from_diagram(&f4, &DynkinLabels(vec![0, 2, 0, 2]), 1, 2),
            Err(Error::NotRealizable(_)) | Ok(_)
        ));
    }
}
