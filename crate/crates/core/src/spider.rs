//! Thin spider recognition.
//!
//! A thin spider is a split graph C ∪ I with C a clique, I independent,
//! and a perfect pairing between them: every clique vertex has exactly one
//! neighbor in I and every independent vertex has exactly one neighbor
//! overall, its clique partner. Every thin spider has a unique efficient
//! dominating set, namely I.

use crate::graph::{EdOutcome, Graph, Vertex, VertexWeights};

/// Certificate that a graph is a thin spider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinSpiderCert {
    /// Clique side, ascending.
    pub clique: Vec<Vertex>,
    /// Independent side, ascending.
    pub independent: Vec<Vertex>,
    /// Pairs `(c, s)` with `s` the unique independent neighbor of clique
    /// vertex `c`, sorted by `c`.
    pub pairing: Vec<(Vertex, Vertex)>,
}

/// Recognizes thin spiders in O(n + m).
///
/// The candidate split is forced: I must be the degree-1 vertices and C
/// the rest. Requires |I| = |C| >= 2, C a clique, every degree-1 vertex
/// attached to C, and the attachment map a bijection onto C.
pub fn recognize_thin_spider(g: &Graph) -> Option<ThinSpiderCert> {
    let n = g.vertex_count();
    let mut independent = Vec::new();
    let mut clique = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 1 {
            independent.push(v);
        } else {
            clique.push(v);
        }
    }
    if independent.len() != clique.len() || clique.len() < 2 {
        return None;
    }
    let mut is_leaf = vec![false; n];
    for &s in &independent {
        is_leaf[s as usize] = true;
    }
    // partner counts per clique vertex; a leaf attached to a leaf is a K2
    // component, not a spider leg
    let mut partner_of = vec![Vertex::MAX; n];
    let mut partners = vec![0u32; n];
    for &s in &independent {
        let c = g.neighbors(s)[0];
        if is_leaf[c as usize] {
            return None;
        }
        partner_of[c as usize] = s;
        partners[c as usize] += 1;
    }
    if clique.iter().any(|&c| partners[c as usize] != 1) {
        return None;
    }
    if !g.is_clique(&clique) {
        return None;
    }
    let pairing = clique.iter().map(|&c| (c, partner_of[c as usize])).collect();
    Some(ThinSpiderCert {
        clique,
        independent,
        pairing,
    })
}

/// The unique efficient dominating set of a thin spider: its independent
/// side, with the total weight under `w`.
pub fn thin_spider_ed(cert: &ThinSpiderCert, w: &VertexWeights) -> EdOutcome {
    let total = w.total(&cert.independent);
    EdOutcome::found(cert.independent.clone(), total)
}
