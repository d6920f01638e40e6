//! Deterministic text exports: DOT Hasse diagrams, rank data as JSON or
//! CSV, and chain decompositions as JSON.  Byte-stable for fixed inputs.

use serde_json::json;

use crate::chains::ChainDecomposition;
use crate::composition::Composition;
use crate::lattice::IdealLattice;
use crate::poset::{Ideal, LabeledPoset};

/// DOT digraph of the poset's Hasse diagram, one edge per cover, lower to
/// upper.  Nodes show the element and, when different, its label.
pub fn poset_dot(p: &LabeledPoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for e in 1..=p.n() {
        let label = p.label_of(e);
        if label == e {
            out.push_str(&format!("  x{e} [label=\"x{e}\"];\n"));
        } else {
            out.push_str(&format!("  x{e} [label=\"x{e}/{label}\"];\n"));
        }
    }
    for &(l, u) in p.covers() {
        out.push_str(&format!("  x{l} -> x{u};\n"));
    }
    out.push_str("}\n");
    out
}

fn ideal_labels(p: &LabeledPoset, ideal: Ideal) -> Vec<usize> {
    let mut labels: Vec<usize> = ideal.elements().iter().map(|&e| p.label_of(e)).collect();
    labels.sort_unstable();
    labels
}

fn label_set_name(p: &LabeledPoset, ideal: Ideal) -> String {
    let labels = ideal_labels(p, ideal);
    let inner: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// DOT digraph of the ideal lattice's Hasse diagram; nodes are ideals shown
/// as sorted label sets.
pub fn lattice_dot(l: &IdealLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, ideal) in l.ideals().iter().enumerate() {
        out.push_str(&format!(
            "  i{i} [label=\"{}\"];\n",
            label_set_name(l.poset(), *ideal)
        ));
    }
    for (i, _) in l.ideals().iter().enumerate() {
        for &j in l.covers_up(i) {
            out.push_str(&format!("  i{i} -> i{j};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Rank data as `{"alpha":[...],"ranks":[...]}`.
pub fn rank_json(alpha: &Composition, ranks: &[u64]) -> String {
    json!({ "alpha": alpha.parts(), "ranks": ranks }).to_string()
}

/// Rank data as two-column CSV.
pub fn rank_csv(ranks: &[u64]) -> String {
    let mut out = String::from("rank,count\n");
    for (k, c) in ranks.iter().enumerate() {
        out.push_str(&format!("{k},{c}\n"));
    }
    out
}

/// Chain decomposition as JSON: element count, classification, and each
/// chain as a list of ideals given by sorted label lists.
pub fn cd_json(p: &LabeledPoset, cd: &ChainDecomposition) -> String {
    let chains: Vec<Vec<Vec<usize>>> = cd
        .chains
        .iter()
        .map(|chain| chain.ideals.iter().map(|&i| ideal_labels(p, i)).collect())
        .collect();
    json!({
        "n": p.n(),
        "classification": cd.classification,
        "chains": chains,
    })
    .to_string()
}
