//! ASCII Dynkin diagrams and DOT root posets.

use magical::rootsys::{root_poset, RootSystem};
use magical::{AlgebraType, DynkinLabels, Family, Result};
use std::fmt::Write;

const STEP: usize = 4;

/// Bond between consecutive nodes of the main chain.
fn bond(ty: AlgebraType, i: usize) -> &'static str {
    let last = ty.rank - 1;
    match (ty.family, i) {
        (Family::B, k) if k + 1 == last => "=>=",
        (Family::C, k) if k + 1 == last => "=<=",
        (Family::F4, 1) => "=<=",
        (Family::G2, 0) => "#<#",
        _ => "---",
    }
}

/// Main chain and an optional node hanging below one chain position.
fn layout(ty: AlgebraType) -> (Vec<usize>, Option<(usize, usize)>) {
    let r = ty.rank;
    match ty.family {
        Family::D => ((1..r).collect(), Some((r, r - 3))),
        Family::E6 | Family::E7 | Family::E8 => {
            let mut chain = vec![1, 2, 3];
            chain.extend(5..=r);
            (chain, Some((4, 2)))
        }
        _ => ((1..=r).collect(), None),
    }
}

fn pad(line: &mut String, col: usize) {
    while line.chars().count() < col {
        line.push(' ');
    }
}

/// Three rows: labels, the diagram, node numbers; plus two rows for a
/// branch node.
pub fn dynkin_ascii(ty: AlgebraType, labels: &DynkinLabels) -> Result<String> {
    if labels.0.len() != ty.rank {
        return Err(magical::Error::SizeMismatch { expected: ty.rank, got: labels.0.len() });
    }
    let (chain, branch) = layout(ty);
    let (mut top, mut mid, mut low) = (String::new(), String::new(), String::new());
    for (k, &node) in chain.iter().enumerate() {
        let col = k * STEP;
        pad(&mut top, col);
        pad(&mut low, col);
        top.push_str(&labels.0[node - 1].to_string());
        low.push_str(&node.to_string());
        mid.push('o');
        if k + 1 < chain.len() {
            mid.push_str(bond(ty, k));
        }
    }
    let mut out = String::new();
    for line in [&top, &mid, &low] {
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    if let Some((node, at)) = branch {
        let col = at * STEP;
        let mut bar = String::new();
        pad(&mut bar, col);
        bar.push('|');
        let mut body = String::new();
        pad(&mut body, col);
        write!(body, "o {} ({})", labels.0[node - 1], node).unwrap();
        writeln!(out, "{}", bar).unwrap();
        writeln!(out, "{}", body).unwrap();
    }
    Ok(out)
}

fn coords(r: &[i64]) -> String {
    r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Hasse diagram of the positive roots. Nodes carry `root | weight`,
/// edges the one-based simple root added.
pub fn poset_dot(rs: &RootSystem, labels: &DynkinLabels) -> Result<String> {
    let p = root_poset(rs, labels)?;
    let mut out = String::new();
    writeln!(out, "digraph poset {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, n) in p.nodes.iter().enumerate() {
        writeln!(out, "  r{} [label=\"{} | {}\"];", i, coords(&n.root), n.weight).unwrap();
    }
    for e in &p.edges {
        writeln!(out, "  r{} -> r{} [label=\"{}\"];", e.from, e.to, e.simple + 1).unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// Roots grouped by weight, one line per weight.
pub fn poset_text(rs: &RootSystem, labels: &DynkinLabels) -> Result<String> {
    let p = root_poset(rs, labels)?;
    let mut by: std::collections::BTreeMap<i64, Vec<String>> = Default::default();
    for n in &p.nodes {
        by.entry(n.weight).or_default().push(format!("({})", coords(&n.root)));
    }
    let mut out = String::new();
    for (w, roots) in by {
        writeln!(out, "{:>3} [{}]: {}", w, roots.len(), roots.join(" ")).unwrap();
    }
    Ok(out)
}
