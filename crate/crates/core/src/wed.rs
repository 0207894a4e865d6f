//! Weighted efficient domination on arbitrary graphs, lifted through the
//! modular decomposition tree.
//!
//! Any efficient dominating set meets each module (with an outside
//! neighbor) in at most one vertex, and that vertex must cover the whole
//! module, i.e. be universal inside it. That reduces the problem along
//! the tree:
//!
//!   Leaf v:    the e.d. is {v};
//!   Parallel:  an e.d. is the disjoint union of child e.d.s;
//!   Series:    an e.d. is one vertex universal in the node;
//!   Prime:     solve the quotient with the prime-graph algorithm, then
//!              replace each selected quotient vertex by the cheapest
//!              universal vertex of its module.
//!
//! Exactness holds on P5-free inputs; `Found` outputs are verified e.d.s
//! on any input.

use crate::graph::{EdOutcome, Graph, Vertex, VertexWeights};
use crate::mdtree::{decompose, MDTree, NodeId, NodeKind};
use crate::prime_ed::solve_prime;

/// Minimum-weight e.d. of `g`, or the class-conditional failure verdicts.
pub fn solve(g: &Graph, w: &VertexWeights) -> EdOutcome {
    assert_eq!(w.len(), g.vertex_count(), "weights must cover every vertex");
    if g.vertex_count() == 0 {
        return EdOutcome::found(Vec::new(), 0);
    }
    let tree = decompose(g);
    solve_node(&tree, tree.root, w)
}

fn solve_node(tree: &MDTree, id: NodeId, w: &VertexWeights) -> EdOutcome {
    let node = tree.node(id);
    match node.kind {
        NodeKind::Leaf => {
            let v = node.leaf_vertex.expect("leaf carries its vertex");
            EdOutcome::found(vec![v], w.get(v))
        }
        NodeKind::Parallel => {
            // every component must have its own e.d.
            let mut vertices = Vec::new();
            let mut total = 0u64;
            let mut unknown = false;
            let mut none = false;
            for &c in &node.children {
                match solve_node(tree, c, w) {
                    EdOutcome::Found { vertices: vs, total_weight } => {
                        vertices.extend(vs);
                        total += total_weight;
                    }
                    EdOutcome::NoneExists => none = true,
                    EdOutcome::NotP5FreeOrNoEd => unknown = true,
                }
            }
            if none {
                EdOutcome::NoneExists
            } else if unknown {
                EdOutcome::NotP5FreeOrNoEd
            } else {
                EdOutcome::found(vertices, total)
            }
        }
        NodeKind::Series => {
            // a join is dominated exactly once only by a single universal vertex
            match min_universal(tree, id, w) {
                Some((v, weight)) => EdOutcome::found(vec![v], weight),
                None => EdOutcome::NoneExists,
            }
        }
        NodeKind::Prime => {
            let quotient = node.quotient.as_ref().expect("prime node has a quotient");
            let picks: Vec<Option<(Vertex, u64)>> = node
                .children
                .iter()
                .map(|&c| min_universal(tree, c, w))
                .collect();
            // the e.d. of a prime P5-free quotient is unique, so module
            // eligibility cannot trade against weight: solve the quotient
            // set-blind, then price the selected modules
            let qw = VertexWeights::new(
                picks
                    .iter()
                    .map(|p| p.map(|(_, weight)| weight).unwrap_or(0))
                    .collect(),
            );
            match solve_prime(quotient, &qw) {
                EdOutcome::Found { vertices: qvs, .. } => {
                    let mut vertices = Vec::with_capacity(qvs.len());
                    let mut total = 0u64;
                    for qv in qvs {
                        match picks[qv as usize] {
                            Some((v, weight)) => {
                                vertices.push(v);
                                total += weight;
                            }
                            None => return EdOutcome::NoneExists,
                        }
                    }
                    EdOutcome::found(vertices, total)
                }
                other => other,
            }
        }
    }
}

/// Minimum-weight vertex of the node's module that is adjacent to every
/// other vertex of the module, with its weight. Ties go to the smallest
/// id. Computed structurally: leaves are universal in themselves, a
/// parallel node has no universal vertex, a series node inherits all
/// children's, and a prime node inherits from children whose quotient
/// vertex is universal in the quotient.
pub fn min_universal(tree: &MDTree, id: NodeId, w: &VertexWeights) -> Option<(Vertex, u64)> {
    let node = tree.node(id);
    match node.kind {
        NodeKind::Leaf => {
            let v = node.leaf_vertex.expect("leaf carries its vertex");
            Some((v, w.get(v)))
        }
        NodeKind::Parallel => None,
        NodeKind::Series => node
            .children
            .iter()
            .filter_map(|&c| min_universal(tree, c, w))
            .min_by_key(|&(v, weight)| (weight, v)),
        NodeKind::Prime => {
            let quotient = node.quotient.as_ref().expect("prime node has a quotient");
            let q = quotient.vertex_count();
            node.children
                .iter()
                .enumerate()
                .filter(|&(i, _)| quotient.degree(i as Vertex) == q - 1)
                .filter_map(|(_, &c)| min_universal(tree, c, w))
                .min_by_key(|&(v, weight)| (weight, v))
        }
    }
}
