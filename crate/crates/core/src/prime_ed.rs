//! Efficient domination on prime graphs, weakly robust, O(n + m).
//!
//! On a prime P5-free input the answer is exact: an e.d. exists iff one is
//! returned, and the returned set is the unique e.d. On any other input
//! the result is still one of the three outcomes, `Found` is always a
//! verified e.d., and failure is reported as the honest disjunction
//! `NotP5FreeOrNoEd` without deciding which side holds.

use crate::graph::{EdOutcome, Graph, VertexWeights};
use crate::spider::{recognize_thin_spider, thin_spider_ed};

/// Runs the prime-graph algorithm:
///
/// 1. if the graph is a thin spider, its degree-1 vertices are the unique
///    e.d.;
/// 2. otherwise take a minimum-degree vertex d; N(d) must be a clique,
///    then the minimum-degree vertex d' outside N[d]; N(d') must be a
///    clique; any failure ends with `NotP5FreeOrNoEd`;
/// 3. accept {d, d'} iff it verifies as an e.d.
///
/// Callers are expected to pass prime graphs (as certified by the
/// decomposition); no prime graph has fewer than 4 vertices, so smaller
/// inputs fall out of the promised class immediately.
pub fn solve_prime(g: &Graph, w: &VertexWeights) -> EdOutcome {
    assert_eq!(w.len(), g.vertex_count(), "weights must cover every vertex");
    if g.vertex_count() < 4 {
        return EdOutcome::NotP5FreeOrNoEd;
    }

    if let Some(cert) = recognize_thin_spider(g) {
        let outcome = thin_spider_ed(&cert, w);
        if let EdOutcome::Found { vertices, .. } = &outcome {
            // recognition already implies this set is an e.d.; the recheck
            // keeps Found sound no matter what the caller handed us
            debug_assert!(g.is_ed(vertices));
            if !g.is_ed(vertices) {
                return EdOutcome::NotP5FreeOrNoEd;
            }
        }
        return outcome;
    }

    let d = g
        .min_degree_vertex(&[])
        .expect("graph has at least 4 vertices");
    if !g.is_clique(g.neighbors(d)) {
        return EdOutcome::NotP5FreeOrNoEd;
    }
    let mut closed = vec![d];
    closed.extend_from_slice(g.neighbors(d));
    let d2 = match g.min_degree_vertex(&closed) {
        Some(v) => v,
        None => return EdOutcome::NotP5FreeOrNoEd,
    };
    if !g.is_clique(g.neighbors(d2)) {
        return EdOutcome::NotP5FreeOrNoEd;
    }

    let candidate = [d, d2];
    if g.is_ed(&candidate) {
        EdOutcome::found(vec![d, d2], w.get(d) + w.get(d2))
    } else {
        // on a prime P5-free graph this means "no e.d."; without that
        // promise only the disjunction is honest
        EdOutcome::NotP5FreeOrNoEd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, Vertex};
    use crate::mdtree::is_prime;
    use crate::testkit::{brute_force_wed, find_induced_p5};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        edges.push((n as Vertex - 1, 0));
        Graph::build(n, &edges).unwrap()
    }

    /// C6 on d1,a,x,d2,y,b with chords ab and xy: prime, P5-free, and
    /// {d1, d2} is its unique e.d. (ids 0..6 in that vertex order).
    fn h6() -> Graph {
        Graph::build(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5), (2, 4)],
        )
        .unwrap()
    }

    #[test]
    fn c5_reports_the_disjunction() {
        let c5 = cycle(5);
        assert_eq!(
            solve_prime(&c5, &VertexWeights::unit(5)),
            EdOutcome::NotP5FreeOrNoEd
        );
        // C5 is P5-free, so the verdict correctly certifies "no e.d."
        assert!(find_induced_p5(&c5).unwrap().is_none());
        assert_eq!(
            brute_force_wed(&c5, &VertexWeights::unit(5)).unwrap(),
            EdOutcome::NoneExists
        );
    }

    #[test]
    fn p4_solves_through_the_spider_branch() {
        assert_eq!(
            solve_prime(&path(4), &VertexWeights::unit(4)),
            EdOutcome::found(vec![0, 3], 2)
        );
    }

    #[test]
    fn h6_solves_through_the_min_degree_branch() {
        let g = h6();
        assert!(is_prime(&g));
        assert!(find_induced_p5(&g).unwrap().is_none());
        let degs: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degs, [2, 3, 3, 2, 3, 3]);
        assert_eq!(
            solve_prime(&g, &VertexWeights::unit(6)),
            EdOutcome::found(vec![0, 3], 2)
        );
        assert_eq!(
            brute_force_wed(&g, &VertexWeights::unit(6)).unwrap(),
            EdOutcome::found(vec![0, 3], 2)
        );
    }

    #[test]
    fn p5_itself_gets_only_the_weak_verdict() {
        // P5 has the e.d. {0, 3}, but P5 is not P5-free: the min-degree
        // branch picks {0, 4}, which fails verification
        let p5 = path(5);
        assert_eq!(
            solve_prime(&p5, &VertexWeights::unit(5)),
            EdOutcome::NotP5FreeOrNoEd
        );
        assert!(find_induced_p5(&p5).unwrap().is_some());
        assert!(brute_force_wed(&p5, &VertexWeights::unit(5)).unwrap().is_found());
    }

    #[test]
    fn tiny_inputs_are_outside_the_class() {
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(
            solve_prime(&k1, &VertexWeights::unit(1)),
            EdOutcome::NotP5FreeOrNoEd
        );
        let k3 = Graph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(
            solve_prime(&k3, &VertexWeights::unit(3)),
            EdOutcome::NotP5FreeOrNoEd
        );
    }

    #[test]
    fn found_set_ignores_weights() {
        let g = h6();
        let a = solve_prime(&g, &VertexWeights::unit(6));
        let b = solve_prime(&g, &VertexWeights::new(vec![100, 1, 1, 100, 1, 1]));
        match (a, b) {
            (
                EdOutcome::Found { vertices: va, total_weight: wa },
                EdOutcome::Found { vertices: vb, total_weight: wb },
            ) => {
                assert_eq!(va, vb);
                assert_eq!(wa, 2);
                assert_eq!(wb, 200);
            }
            other => panic!("expected Found on both, got {:?}", other),
        }
    }
}
