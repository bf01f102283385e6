//! Centralizers of magical triples and the structural checks on them.

use super::chevalley::root_vector_index;
use super::model::LieModel;
use super::sigma::{basis_weights, highest_weight_space, is_magical_oracle, weight_blocks};
use super::triple::{case4_triple, vadd, vscale, vzero, Sl2Triple};
use crate::classify::MagicalCaseId;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::rootsys::{sl2_multiplicities, DynkinLabels, Family, GradedDims, Root, Sl2Data};
use crate::scalar::{Field, Q};
use std::collections::BTreeMap;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Centralizer of the triple, the weight-zero highest-weight vectors.
pub fn triple_centralizer(model: &LieModel, t: &Sl2Triple<Q>) -> Result<Vec<Vec<Q>>> {
    let blocks = weight_blocks(&basis_weights(model, &t.h)?);
    Ok(highest_weight_space(model, &t.e, &blocks, 0))
}

/// sl2-data of an `ad_h`-stable subspace, read off from graded dimensions.
pub fn sl2_data_of(model: &LieModel, h: &[Q], subspace: Option<&[Vec<Q>]>) -> Result<Sl2Data> {
    let weights = basis_weights(model, h)?;
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    let total;
    match subspace {
        None => {
            for &w in &weights {
                *dims.entry(w).or_default() += 1;
            }
            total = model.dim();
        }
        Some(basis) => {
            let blocks = weight_blocks(&weights);
            for (&w, idx) in &blocks {
                let mut ech = Echelon::new(idx.len());
                for v in basis {
                    let part: Vec<Q> = idx.iter().map(|&i| v[i].clone()).collect();
                    ech.insert(&part);
                }
                if ech.rank() > 0 {
                    dims.insert(w, ech.rank());
                }
            }
            total = dims.values().sum();
            if total != span_dim(basis) {
                return Err(Error::Internal("subspace is not ad_h-stable".into()));
            }
        }
    }
    sl2_multiplicities(&GradedDims { dims, total })
}

fn span_dim(basis: &[Vec<Q>]) -> usize {
    basis.first().map_or(0, |_| linalg::rank(basis))
}

fn echelon_of(dim: usize, vs: &[Vec<Q>]) -> Echelon {
    let mut e = Echelon::new(dim);
    for v in vs {
        e.insert(v);
    }
    e
}

/// Centralizer in `g` of a subspace contained in `g_0`.
fn centralizer_graded(model: &LieModel, weights: &[i64], xs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dim = model.dim();
    let mut out = Vec::new();
    for idx in weight_blocks(weights).values() {
        let n = idx.len();
        let mut k: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q(i64::from(i == j))).collect()).collect();
        for x in xs {
            if k.is_empty() {
                break;
            }
            let ad = model.ad_block(x, idx, idx);
            let kt = linalg::transpose(&k, n);
            let img = linalg::mat_mul(&ad, &kt);
            let ker = linalg::kernel(&img, k.len());
            k = ker
                .iter()
                .map(|c| {
                    let mut v = vec![q(0); n];
                    for (ci, kv) in c.iter().zip(&k) {
                        if !ci.is_zero() {
                            for j in 0..n {
                                v[j] += ci * &kv[j];
                            }
                        }
                    }
                    v
                })
                .collect();
        }
        for v in k {
            let mut full = vec![q(0); dim];
            for (c, &i) in idx.iter().enumerate() {
                full[i] = v[c].clone();
            }
            out.push(full);
        }
    }
    out
}

/// The centralizer `c` of the triple, the centralizer `z(c)` of `c`, the
/// center `c ∩ z(c)` and `g(e) = [z(c), z(c)]`.
#[derive(Debug, Clone)]
pub struct CentralizerData {
    pub c: Vec<Vec<Q>>,
    pub zc: Vec<Vec<Q>>,
    pub center: Vec<Vec<Q>>,
    pub ge: Vec<Vec<Q>>,
}

impl CentralizerData {
    pub fn ge_dim(&self) -> usize {
        self.ge.len()
    }

    pub fn center_dim(&self) -> usize {
        self.center.len()
    }
}

fn centralizers(model: &LieModel, t: &Sl2Triple<Q>) -> Result<CentralizerData> {
    let dim = model.dim();
    let weights = basis_weights(model, &t.h)?;
    let c = triple_centralizer(model, t)?;
    let zc = centralizer_graded(model, &weights, &c);
    let center = intersect(dim, &c, &zc);
    let mut ge = Echelon::new(dim);
    for (a, x) in zc.iter().enumerate() {
        for y in &zc[a + 1..] {
            ge.insert(&model.bracket(x, y));
        }
    }
    Ok(CentralizerData { c, zc, center, ge: ge.basis() })
}

/// Intersection of two spans.
fn intersect(dim: usize, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out = Echelon::new(dim);
    if a.is_empty() || b.is_empty() {
        return out.basis();
    }
    // Solve sum x_i a_i = sum y_j b_j.
    let ncols = a.len() + b.len();
    let rows: Vec<Vec<Q>> =
        (0..dim).map(|k| a.iter().map(|v| v[k].clone()).chain(b.iter().map(|v| -&v[k])).collect()).collect();
    for sol in linalg::kernel(&rows, ncols) {
        let mut v = vec![q(0); dim];
        for (i, ai) in a.iter().enumerate() {
            if !sol[i].is_zero() {
                v = vadd(&v, &vscale(&sol[i], ai));
            }
        }
        out.insert(&v);
    }
    out.basis()
}

/// Centralizer data of a magical triple. Non-magical input is refused.
pub fn centralizer_of_centralizer(model: &LieModel, t: &Sl2Triple<Q>) -> Result<CentralizerData> {
    let r = is_magical_oracle(model, t)?;
    if !r.magical {
        return Err(Error::NotMagical(format!("witness {:?}", r.witness)));
    }
    centralizers(model, t)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StructureCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct StructureReport {
    pub c_dim: usize,
    pub zc_dim: usize,
    pub center_dim: usize,
    pub ge_dim: usize,
    pub g_sl2: Sl2Data,
    pub ge_sl2: Sl2Data,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&StructureCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Exponents of `g(e)`.
    pub fn ge_exponents(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (&j, &n) in &self.ge_sl2.by_weight {
            for _ in 0..n {
                out.push(j / 2);
            }
        }
        out
    }
}

fn check(name: &str, passed: bool, detail: String) -> StructureCheck {
    StructureCheck { name: name.to_string(), passed, detail }
}

/// `Z_{2m} = ad_f^m(V_{2m})` for every `m > 0` with `V_{2m} != 0`.
pub fn z_spaces(model: &LieModel, t: &Sl2Triple<Q>) -> Result<BTreeMap<i64, Vec<Vec<Q>>>> {
    let blocks = weight_blocks(&basis_weights(model, &t.h)?);
    let mut out = BTreeMap::new();
    for &w in blocks.keys().filter(|&&w| w > 0 && w % 2 == 0) {
        let vs = highest_weight_space(model, &t.e, &blocks, w);
        if vs.is_empty() {
            continue;
        }
        let z: Vec<Vec<Q>> = vs
            .into_iter()
            .map(|mut v| {
                for _ in 0..w / 2 {
                    v = model.bracket(&t.f, &v);
                }
                v
            })
            .collect();
        out.insert(w / 2, z);
    }
    Ok(out)
}

fn simple_labels(model: &LieModel, h: &[Q]) -> Option<DynkinLabels> {
    let rs = model.root_system()?;
    let weights = basis_weights(model, h).ok()?;
    let l = (0..rs.rank()).map(|i| weights[root_vector_index(rs, &rs.simple_root(i)).expect("simple")]).collect();
    Some(DynkinLabels(l))
}

/// Structural checks on a magical triple: brackets of the `Z_{2m}`,
/// principality in `g(e)`, `[c, g(e)] = 0`, and for the fourth case the
/// `so_8` lemmas.
pub fn verify_structure(model: &LieModel, t: &Sl2Triple<Q>) -> Result<StructureReport> {
    let r = is_magical_oracle(model, t)?;
    if !r.magical {
        return Err(Error::NotMagical(format!("witness {:?}", r.witness)));
    }
    let dim = model.dim();
    let data = centralizers(model, t)?;
    let c_ech = echelon_of(dim, &data.c);
    let ge_ech = echelon_of(dim, &data.ge);
    let mut checks = Vec::new();

    let z = z_spaces(model, t)?;
    let mut ok_in_c = true;
    let mut ok_zero = true;
    let ms: Vec<i64> = z.keys().copied().collect();
    for (a, &mi) in ms.iter().enumerate() {
        for &mj in &ms[a..] {
            for x in &z[&mi] {
                for y in &z[&mj] {
                    let b = model.bracket(x, y);
                    if !c_ech.contains(&b) {
                        ok_in_c = false;
                    }
                    if mi != mj && !vzero(&b) {
                        ok_zero = false;
                    }
                }
            }
        }
    }
    checks.push(check(
        "z-brackets",
        ok_in_c && ok_zero,
        format!("m = {:?}: [Z, Z] in c: {}, distinct m bracket to 0: {}", ms, ok_in_c, ok_zero),
    ));

    let g_sl2 = sl2_data_of(model, &t.h, None)?;
    let ge_sl2 = sl2_data_of(model, &t.h, Some(&data.ge))?;
    let triple_in = [&t.f, &t.h, &t.e].iter().all(|v| ge_ech.contains(v));
    let ge0: Vec<Vec<Q>> = {
        let weights = basis_weights(model, &t.h)?;
        let idx: Vec<usize> = (0..dim).filter(|&i| weights[i] == 0).collect();
        let mut e = Echelon::new(dim);
        for v in &data.ge {
            let mut p = vec![q(0); dim];
            for &i in &idx {
                p[i] = v[i].clone();
            }
            e.insert(&p);
        }
        e.basis()
    };
    let abelian = ge0.iter().enumerate().all(|(a, x)| ge0[a + 1..].iter().all(|y| vzero(&model.bracket(x, y))));
    let principal = triple_in && ge_sl2.n0() == 0 && ge_sl2.is_even() && abelian;
    checks.push(check(
        "principal-in-ge",
        principal,
        format!("dim g(e) = {}, sl2-data {:?}, triple inside: {}", data.ge.len(), ge_sl2.by_weight, triple_in),
    ));

    let commute = data.c.iter().all(|x| data.ge.iter().all(|y| vzero(&model.bracket(x, y))));
    checks.push(check("c-commutes-with-ge", commute, String::new()));

    if let Some(labels) = simple_labels(model, &t.h) {
        let fam = model.root_system().map(|rs| rs.ty.family);
        if let Some(f @ (Family::F4 | Family::E6 | Family::E7 | Family::E8)) = fam {
            if MagicalCaseId::Quaternionic(f).labels() == labels {
                checks.extend(case4_checks(model, t, &labels, &data, &ge_sl2)?);
            }
        }
    }

    Ok(StructureReport {
        c_dim: data.c.len(),
        zc_dim: data.zc.len(),
        center_dim: data.center.len(),
        ge_dim: data.ge.len(),
        g_sl2,
        ge_sl2,
        checks,
    })
}

/// Subalgebra generated by the given elements.
pub fn generated_subalgebra(model: &LieModel, gens: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut ech = Echelon::new(model.dim());
    let mut basis: Vec<Vec<Q>> = Vec::new();
    for g in gens {
        if ech.insert(g) {
            basis.push(g.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let b = model.bracket(&basis[j], &basis[i]);
            if ech.insert(&b) {
                basis.push(b);
            }
        }
        i += 1;
    }
    basis
}

fn root_vec(model: &LieModel, r: &Root) -> Vec<Q> {
    let rs = model.root_system().expect("Chevalley model");
    model.basis_vec(root_vector_index(rs, r).expect("root"))
}

fn case4_checks(
    model: &LieModel,
    t: &Sl2Triple<Q>,
    labels: &DynkinLabels,
    data: &CentralizerData,
    ge_sl2: &Sl2Data,
) -> Result<Vec<StructureCheck>> {
    let (red, _) = case4_triple(model, labels)?;
    let mut out = Vec::new();
    let mut gens = Vec::new();
    for r in red.all() {
        gens.push(root_vec(model, &r));
        gens.push(root_vec(model, &r.iter().map(|c| -c).collect()));
    }
    let so8 = generated_subalgebra(model, &gens);
    out.push(check("red-roots-so8", so8.len() == 28, format!("generated dimension {}", so8.len())));

    let w2_w10 = ge_sl2.by_weight == [(2u32, 1usize), (10, 1)].into_iter().collect();
    out.push(check(
        "ge-is-w2-w10",
        data.ge.len() == 14 && w2_w10,
        format!("dim g(e) = {}, sl2-data {:?}", data.ge.len(), ge_sl2.by_weight),
    ));

    let rs = model.root_system().expect("Chevalley model");
    let ia = root_vector_index(rs, &red.alpha.iter().map(|c| -c).collect::<Vec<_>>()).expect("root");
    let mut ft = vec![q(0); model.dim()];
    ft[ia] = t.f[ia].clone();
    let fb: Vec<Q> = t.f.iter().zip(&ft).map(|(a, b)| a - b).collect();
    let ad = |x: &[Q], y: &[Q]| model.bracket(x, y);
    let fb3 = ad(&fb, &ad(&fb, &ad(&fb, &ft)));
    out.push(check("adfb3-nonzero", !vzero(&ft) && !vzero(&fb) && !vzero(&fb3), String::new()));

    let blocks = weight_blocks(&basis_weights(model, &t.h)?);
    let v6 = highest_weight_space(model, &t.e, &blocks, 6);
    let fbft = ad(&fb, &ft);
    let mut ok = !v6.is_empty();
    for phi in &v6 {
        let s = vadd(&fb, phi);
        let lhs = ad(&s, &ad(&s, &ad(&s, &ft)));
        let f3 = ad(&t.f, &ad(&t.f, &ad(&t.f, phi)));
        let rhs = vadd(&vadd(&fb3, &vscale(&q(3), &f3)), &ad(phi, &ad(phi, &fbft)));
        if lhs != rhs {
            ok = false;
        }
    }
    out.push(check("v6-identity", ok, format!("dim V_6 = {}", v6.len())));
    Ok(out)
}
