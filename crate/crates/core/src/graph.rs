//! Immutable undirected simple graphs in compressed sparse row form.
//!
//! Vertices are dense ids `0..n`. The representation is
//!
//!   offsets: prefix sums of degrees, length n+1
//!   targets: concatenated neighbor lists, length 2m, each list ascending
//!
//! so `neighbors(v) = targets[offsets[v]..offsets[v+1]]`. All query
//! operations run within an O(n + m) budget: set-valued checks use marker
//! arrays rather than pairwise adjacency probes.

use std::fmt;

/// Dense vertex id.
pub type Vertex = u32;

/// Construction errors. Malformed input is rejected, never repaired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Edge endpoint not in `0..n`.
    OutOfRange { v: Vertex, n: usize },
    /// Edge with both endpoints equal.
    SelfLoop { v: Vertex },
    /// The same unordered pair listed twice.
    DuplicateEdge { u: Vertex, v: Vertex },
    /// An operation that needs a nonempty vertex set got an empty one.
    EmptyVertexSet,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            GraphError::EmptyVertexSet => write!(f, "empty vertex set"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Immutable undirected simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count(), self.edge_count())?;
        if self.vertex_count() <= 16 {
            write!(f, " {:?}", self.edges().collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

impl Graph {
    /// Builds the canonical representation from an unordered edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops and duplicate edges
    /// (in either orientation).
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::OutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0 as Vertex; acc];
        for &(u, v) in edges {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            let row = &mut targets[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(GraphError::DuplicateEdge {
                        u: v.min(w[0] as usize) as Vertex,
                        v: v.max(w[0] as usize) as Vertex,
                    });
                }
            }
        }
        Ok(Graph { offsets, targets })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count() as Vertex
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Minimum-degree vertex among `V \ excluded`, ties to the smallest id.
    pub fn min_degree_vertex(&self, excluded: &[Vertex]) -> Option<Vertex> {
        let mut out = vec![false; self.vertex_count()];
        for &v in excluded {
            out[v as usize] = true;
        }
        let mut best: Option<Vertex> = None;
        for v in self.vertices() {
            if out[v as usize] {
                continue;
            }
            match best {
                Some(b) if self.degree(b) <= self.degree(v) => {}
                _ => best = Some(v),
            }
        }
        best
    }

    /// Whether `s` induces a complete subgraph.
    ///
    /// Marks `s` and counts marked neighbors per member; `s` is a clique
    /// iff every member sees `|s| - 1` marks. O(Σ deg(u) for u in s).
    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        if s.len() <= 1 {
            return true;
        }
        let mut mark = vec![false; self.vertex_count()];
        for &v in s {
            mark[v as usize] = true;
        }
        for &v in s {
            let seen = self
                .neighbors(v)
                .iter()
                .filter(|&&w| mark[w as usize])
                .count();
            if seen != s.len() - 1 {
                return false;
            }
        }
        true
    }

    /// Whether `d` is an efficient dominating set: every vertex has
    /// exactly one member of `d` in its closed neighborhood.
    pub fn is_ed(&self, d: &[Vertex]) -> bool {
        let mut hits = vec![0u32; self.vertex_count()];
        for &v in d {
            hits[v as usize] += 1;
            for &w in self.neighbors(v) {
                hits[w as usize] += 1;
            }
        }
        hits.iter().all(|&c| c == 1)
    }

    /// Subgraph induced by `s`, plus the relabeling: entry `i` of the
    /// returned vector is the original id of new vertex `i`. New ids
    /// follow the ascending order of `s`.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut ids: Vec<Vertex> = s.to_vec();
        ids.sort_unstable();
        ids.dedup();
        const UNMAPPED: Vertex = Vertex::MAX;
        let mut local = vec![UNMAPPED; self.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            local[v as usize] = i as Vertex;
        }
        let mut edges = Vec::new();
        for (i, &v) in ids.iter().enumerate() {
            for &w in self.neighbors(v) {
                let lw = local[w as usize];
                if lw != UNMAPPED && (i as Vertex) < lw {
                    edges.push((i as Vertex, lw));
                }
            }
        }
        let g = Graph::build(ids.len(), &edges).expect("induced edges are valid by construction");
        Ok((g, ids))
    }

    /// Complement graph on the same vertex set. O(n^2); intended for
    /// small graphs (test oracles, duality checks).
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            let mut nb = self.neighbors(u).iter().copied().peekable();
            for v in (u + 1)..n as Vertex {
                while let Some(&w) = nb.peek() {
                    if w < v {
                        nb.next();
                    } else {
                        break;
                    }
                }
                if nb.peek() != Some(&v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges).expect("complement edges are valid by construction")
    }
}

/// Non-negative integer vertex weights, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeights(Vec<u64>);

impl VertexWeights {
    pub fn new(weights: Vec<u64>) -> VertexWeights {
        VertexWeights(weights)
    }

    /// All-ones weights: the unweighted problem as a special case.
    pub fn unit(n: usize) -> VertexWeights {
        VertexWeights(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0[v as usize]
    }

    pub fn total(&self, vs: &[Vertex]) -> u64 {
        vs.iter().map(|&v| self.get(v)).sum()
    }
}

/// Outcome of a weighted efficient domination query.
///
/// `Found` carries the solution vertices in ascending order together with
/// their total weight. `NotP5FreeOrNoEd` is the weakly robust verdict: the
/// input is outside the promised class or has no efficient dominating set,
/// without saying which.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdOutcome {
    Found { vertices: Vec<Vertex>, total_weight: u64 },
    NoneExists,
    NotP5FreeOrNoEd,
}

impl EdOutcome {
    pub fn found(mut vertices: Vec<Vertex>, total_weight: u64) -> EdOutcome {
        vertices.sort_unstable();
        EdOutcome::Found { vertices, total_weight }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, EdOutcome::Found { .. })
    }
}

/// An efficient dominating set `D` together with the cells
/// `R_i = N(d_i) \ D` of the partition its closed neighborhoods induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationPartition {
    pub dominators: Vec<Vertex>,
    pub cells: Vec<Vec<Vertex>>,
}

impl DominationPartition {
    /// Builds the partition, or `None` if `d` is not an efficient
    /// dominating set of `g`.
    pub fn from_ed(g: &Graph, d: &[Vertex]) -> Option<DominationPartition> {
        if !g.is_ed(d) {
            return None;
        }
        let mut dominators: Vec<Vertex> = d.to_vec();
        dominators.sort_unstable();
        let mut in_d = vec![false; g.vertex_count()];
        for &v in &dominators {
            in_d[v as usize] = true;
        }
        let cells = dominators
            .iter()
            .map(|&di| {
                g.neighbors(di)
                    .iter()
                    .copied()
                    .filter(|&w| !in_d[w as usize])
                    .collect()
            })
            .collect();
        Some(DominationPartition { dominators, cells })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1) as Vertex).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        edges.push((n as Vertex - 1, 0));
        Graph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            for v in (u + 1)..n as Vertex {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_p4() {
        let g = path(4);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let degs: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degs, [1, 2, 2, 1]);
    }

    #[test]
    fn build_k1() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_c5() {
        let g = cycle(5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn build_rejects_malformed_input() {
        assert_eq!(
            Graph::build(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        );
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::build(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { v: 2, n: 2 })
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(path(4).degree(0), 1);
        assert!(cycle(5).vertices().all(|v| cycle(5).degree(v) == 2));
        // thin spider with k = 3: clique vertex degree is |C| - 1 + 1
        let spider = crate::testkit::gen_thin_spider(3).unwrap();
        assert_eq!(spider.degree(0), 3);
    }

    #[test]
    fn clique_checks() {
        let c5 = cycle(5);
        for v in c5.vertices() {
            assert!(!c5.is_clique(c5.neighbors(v)));
        }
        assert!(c5.is_clique(&[]));
        assert!(c5.is_clique(&[3]));
        let k4 = complete(4);
        assert!(k4.is_clique(&[0, 1, 2, 3]));
    }

    #[test]
    fn ed_checks() {
        let p4 = path(4);
        assert!(p4.is_ed(&[0, 3]));
        assert!(!p4.is_ed(&[0, 2]));
        let c5 = cycle(5);
        for mask in 0u32..32 {
            let d: Vec<Vertex> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            assert!(!c5.is_ed(&d), "C5 must have no e.d., got {:?}", d);
        }
        let k1 = Graph::build(1, &[]).unwrap();
        assert!(k1.is_ed(&[0]));
    }

    #[test]
    fn min_degree_selection() {
        let p4 = path(4);
        assert_eq!(p4.min_degree_vertex(&[]), Some(0));
        assert_eq!(p4.min_degree_vertex(&[0, 1]), Some(3));
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.min_degree_vertex(&[0]), None);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let (h, ids) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(ids, [0, 1, 2]);
        assert_eq!(h.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);

        let p4 = path(4);
        let all: Vec<Vertex> = p4.vertices().collect();
        let (copy, ids) = p4.induced_subgraph(&all).unwrap();
        assert_eq!(ids, all);
        assert_eq!(copy, p4);

        let (h, _) = p4.induced_subgraph(&[0, 3]).unwrap();
        assert_eq!(h.edge_count(), 0);

        assert_eq!(p4.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn complement_of_path() {
        let p4 = path(4);
        let c = p4.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), [(0, 2), (0, 3), (1, 3)]);
        assert_eq!(c.complement(), p4);
    }

    #[test]
    fn domination_partition_cells() {
        let p4 = path(4);
        let part = DominationPartition::from_ed(&p4, &[0, 3]).unwrap();
        assert_eq!(part.dominators, [0, 3]);
        assert_eq!(part.cells, vec![vec![1], vec![2]]);
        assert!(DominationPartition::from_ed(&p4, &[0, 2]).is_none());
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
                .flat_map(|u| ((u + 1)..n as Vertex).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        // Definition-based recount: |N[v] ∩ d| = 1 for every v.
        #[test]
        fn is_ed_matches_definition(g in arbitrary_graph(8), mask in 0u32..256) {
            let d: Vec<Vertex> = (0..g.vertex_count() as Vertex)
                .filter(|&v| mask >> v & 1 == 1)
                .collect();
            let expected = g.vertices().all(|v| {
                let mut hit = d.contains(&v) as usize;
                hit += g.neighbors(v).iter().filter(|w| d.contains(w)).count();
                hit == 1
            });
            prop_assert_eq!(g.is_ed(&d), expected);
        }

        #[test]
        fn is_clique_is_order_independent(g in arbitrary_graph(8), seed in 0u64..1000) {
            let mut s: Vec<Vertex> = g.vertices().filter(|&v| (seed >> v) & 1 == 1).collect();
            let before = g.is_clique(&s);
            // a fixed pseudo-shuffle
            s.reverse();
            let mid = s.len() / 2;
            if s.len() > 2 {
                s.swap(0, mid);
            }
            prop_assert_eq!(g.is_clique(&s), before);
        }

        #[test]
        fn rebuild_from_edges_is_identity(g in arbitrary_graph(9)) {
            let edges: Vec<_> = g.edges().collect();
            let rebuilt = Graph::build(g.vertex_count(), &edges).unwrap();
            prop_assert_eq!(rebuilt, g);
        }
    }
}
