//! Ext quivers of blocks.
//!
//! An atypical block is a bi-infinite string L_i. Between neighbours there is
//! one arrow each way, both carrying the same label, and the labels alternate
//! x, y, x, … along the string. The block is equivalent to representations
//! of this quiver with relations xy = yx = 0; in the subcategory with
//! diagonal h-action one adds x² + y² = 0.

use crate::blocks::{adjacent_pair, same_module, BlockChain};
use crate::error::Result;
use crate::highest_weights::{rho_wt_at, SimpleModule};
use crate::rational::format_q;
use serde::Serialize;
use std::fmt::Write as _;

/// dim Ext¹(a, b) between simple integrable modules of one level.
///
/// Distinct modules: 1 if they are adjacent atypicals, else 0. Equal
/// modules: 0 if atypical, 1 if typical (the nilpotent action of the
/// Casimir shift gives a self-extension).
pub fn ext_dim(a: &SimpleModule, b: &SimpleModule) -> Result<u32> {
    if a.n() != b.n() || a.level != b.level {
        return Ok(0);
    }
    if same_module(a, b)? {
        return Ok(u32::from(a.is_typical()));
    }
    if a.is_typical() || b.is_typical() {
        return Ok(0);
    }
    let (l, u) = adjacent_pair(a)?;
    Ok(u32::from(same_module(&l, b)? || same_module(&u, b)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowLabel {
    X,
    Y,
}

impl std::fmt::Display for ArrowLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ArrowLabel::X => "x",
            ArrowLabel::Y => "y",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    /// Vertex positions in [`QuiverGraph::vertices`].
    pub src: usize,
    pub dst: usize,
    pub label: ArrowLabel,
}

/// A relation Σ (paths of length two) = 0; each path is a pair of arrow
/// indices (first, second). Zero relations have a single term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuiverVariant {
    /// Relations xy = yx = 0.
    F,
    /// Adds x² + y² = 0.
    F1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverVertex {
    /// Position i in the block chain.
    pub index: i64,
    /// ε-pairings of the ρ-shifted weight at the chain's reference set.
    pub b: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverGraph {
    pub vertices: Vec<QuiverVertex>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

/// Label of the edge between chain positions i and i + 1: x on the edge
/// leaving the singular base on the positive side, alternating from there.
fn edge_label(i: i64) -> ArrowLabel {
    if i.rem_euclid(2) == 0 {
        ArrowLabel::X
    } else {
        ArrowLabel::Y
    }
}

/// The quiver of the block restricted to the chain's window.
pub fn block_quiver(chain: &BlockChain, variant: QuiverVariant) -> Result<QuiverGraph> {
    let t = chain.reference.chain_index();
    let mut vertices = Vec::new();
    for i in chain.indices() {
        let m = chain.get(i).expect("index in window");
        let w = rho_wt_at(&m.rho_wt, m.sigma.chain_index(), t)?;
        vertices.push(QuiverVertex {
            index: i,
            b: w.eps_pairings().iter().map(format_q).collect(),
        });
    }
    let mut arrows = Vec::new();
    for p in 0..vertices.len().saturating_sub(1) {
        let label = edge_label(vertices[p].index);
        arrows.push(Arrow { src: p, dst: p + 1, label });
        arrows.push(Arrow { src: p + 1, dst: p, label });
    }
    // Arrows 2p (p → p+1) and 2p+1 (p+1 → p).
    let mut relations = Vec::new();
    for v in 1..vertices.len().saturating_sub(1) {
        let (into_from_left, out_to_left) = (2 * (v - 1), 2 * (v - 1) + 1);
        let (out_to_right, into_from_right) = (2 * v, 2 * v + 1);
        relations.push(Relation { terms: vec![(into_from_left, out_to_right)] });
        relations.push(Relation { terms: vec![(into_from_right, out_to_left)] });
        if variant == QuiverVariant::F1 {
            relations.push(Relation {
                terms: vec![(out_to_left, into_from_left), (out_to_right, into_from_right)],
            });
        }
    }
    Ok(QuiverGraph { vertices, arrows, relations })
}

/// Every path of length two through three distinct vertices is a declared
/// zero relation.
pub fn relations_forbid_three_steps(g: &QuiverGraph) -> bool {
    for (i, a) in g.arrows.iter().enumerate() {
        for (j, b) in g.arrows.iter().enumerate() {
            if a.dst != b.src || a.src == b.dst {
                continue;
            }
            let declared = g.relations.iter().any(|r| r.terms == [(i, j)]);
            if !declared {
                return false;
            }
        }
    }
    true
}

/// No indecomposable with three distinct composition factors stacked in
/// Loewy layers: checked on the F quiver of the window.
pub fn check_no_three_step(chain: &BlockChain) -> Result<bool> {
    Ok(relations_forbid_three_steps(&block_quiver(chain, QuiverVariant::F)?))
}

fn vertex_name(v: &QuiverVertex) -> String {
    format!("({})", v.b.join(","))
}

fn arrow_name(g: &QuiverGraph, a: usize) -> String {
    let a = &g.arrows[a];
    format!("{}→{}", vertex_name(&g.vertices[a.src]), vertex_name(&g.vertices[a.dst]))
}

impl QuiverGraph {
    /// Graphviz rendering; relations appear as comments.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph block {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{}\"];", vertex_name(v));
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.src, a.dst, a.label);
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|&(a, b)| format!("{} {}", arrow_name(self, a), arrow_name(self, b)))
                .collect();
            let _ = writeln!(s, "  // relation: {} = 0", terms.join(" + "));
        }
        s.push_str("}\n");
        s
    }

    /// Sidecar JSON: zero relations as composable arrow pairs, and sum
    /// relations (x² + y²) as lists of such pairs.
    pub fn relations_json(&self) -> serde_json::Value {
        let pair = |&(a, b): &(usize, usize)| serde_json::json!([arrow_name(self, a), arrow_name(self, b)]);
        let zero: Vec<_> = self.relations.iter().filter(|r| r.terms.len() == 1).map(|r| pair(&r.terms[0])).collect();
        let sums: Vec<_> = self
            .relations
            .iter()
            .filter(|r| r.terms.len() > 1)
            .map(|r| serde_json::Value::Array(r.terms.iter().map(pair).collect()))
            .collect();
        serde_json::json!({ "relations": zero, "sum_relations": sums })
    }
}
