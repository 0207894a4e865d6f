//! Independent oracles and generators backing the test suites.
//!
//! Everything here is deliberately naive and structurally unrelated to
//! the solver: the e.d. oracle is backtracking exact cover over closed
//! neighborhoods, the P5 finder enumerates ordered paths, and the catalog
//! enumerates small graphs up to isomorphism by augment-and-canonicalize.
//! Budget guards reject oversized inputs instead of degrading.

use std::collections::HashSet;
use std::fmt;

use crate::graph::{EdOutcome, Graph, Vertex, VertexWeights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TestkitError {
    BudgetExceeded { what: &'static str, limit: usize, got: usize },
    SpiderTooSmall { k: usize },
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for TestkitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestkitError::BudgetExceeded { what, limit, got } => {
                write!(f, "{what}: budget is {limit}, got {got}")
            }
            TestkitError::SpiderTooSmall { k } => {
                write!(f, "thin spider needs k >= 2, got {k}")
            }
            TestkitError::ArityMismatch { expected, got } => {
                write!(f, "substitute needs one part per quotient vertex ({expected}), got {got}")
            }
        }
    }
}

impl std::error::Error for TestkitError {}

const BRUTE_FORCE_MAX: usize = 24;
const P5_SEARCH_MAX: usize = 64;
const CATALOG_MAX: usize = 9;

/// Exact minimum-weight efficient domination by backtracking exact cover
/// over closed neighborhoods: pick the lowest uncovered vertex, try every
/// closed neighborhood containing it that avoids the covered set.
pub fn brute_force_wed(g: &Graph, w: &VertexWeights) -> Result<EdOutcome, TestkitError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX {
        return Err(TestkitError::BudgetExceeded {
            what: "brute_force_wed",
            limit: BRUTE_FORCE_MAX,
            got: n,
        });
    }
    if n == 0 {
        return Ok(EdOutcome::found(Vec::new(), 0));
    }
    let closed: Vec<u32> = g
        .vertices()
        .map(|v| {
            let mut mask = 1u32 << v;
            for &u in g.neighbors(v) {
                mask |= 1 << u;
            }
            mask
        })
        .collect();
    let full = (1u32 << n) - 1;

    struct Search<'a> {
        closed: &'a [u32],
        w: &'a VertexWeights,
        full: u32,
        best: Option<(u64, Vec<Vertex>)>,
        chosen: Vec<Vertex>,
    }
    impl Search<'_> {
        fn run(&mut self, covered: u32, weight: u64) {
            if covered == self.full {
                if self.best.as_ref().is_none_or(|(bw, _)| weight < *bw) {
                    self.best = Some((weight, self.chosen.clone()));
                }
                return;
            }
            if let Some((bw, _)) = &self.best {
                if weight >= *bw {
                    return;
                }
            }
            let v = covered.trailing_ones();
            let mut cands = self.closed[v as usize];
            while cands != 0 {
                let d = cands.trailing_zeros();
                cands &= cands - 1;
                if self.closed[d as usize] & covered == 0 {
                    self.chosen.push(d);
                    self.run(covered | self.closed[d as usize], weight + self.w.get(d));
                    self.chosen.pop();
                }
            }
        }
    }
    let mut search = Search {
        closed: &closed,
        w,
        full,
        best: None,
        chosen: Vec::new(),
    };
    search.run(0, 0);
    Ok(match search.best {
        Some((weight, vs)) => EdOutcome::found(vs, weight),
        None => EdOutcome::NoneExists,
    })
}

/// Finds some induced P5 as an ordered path, or `None`. Ordered-path
/// enumeration with the induced constraint checked at every extension.
pub fn find_induced_p5(g: &Graph) -> Result<Option<[Vertex; 5]>, TestkitError> {
    let n = g.vertex_count();
    if n > P5_SEARCH_MAX {
        return Err(TestkitError::BudgetExceeded {
            what: "find_induced_p5",
            limit: P5_SEARCH_MAX,
            got: n,
        });
    }
    fn extend(g: &Graph, path: &mut [Vertex; 5], depth: usize) -> bool {
        if depth == 5 {
            return true;
        }
        let last = path[depth - 1];
        'next: for &w in g.neighbors(last) {
            for i in 0..depth - 1 {
                if path[i] == w || g.has_edge(path[i], w) {
                    continue 'next;
                }
            }
            path[depth] = w;
            if extend(g, path, depth + 1) {
                return true;
            }
        }
        false
    }
    let mut path = [0 as Vertex; 5];
    for a in g.vertices() {
        for &b in g.neighbors(a) {
            path[0] = a;
            path[1] = b;
            if extend(g, &mut path, 2) {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

/// Thin spider on 2k vertices: clique 0..k, independent k..2k, vertex i
/// paired with k+i.
pub fn gen_thin_spider(k: usize) -> Result<Graph, TestkitError> {
    if k < 2 {
        return Err(TestkitError::SpiderTooSmall { k });
    }
    let mut edges = Vec::with_capacity(k * (k - 1) / 2 + k);
    for i in 0..k as Vertex {
        for j in (i + 1)..k as Vertex {
            edges.push((i, j));
        }
        edges.push((i, k as Vertex + i));
    }
    Ok(Graph::build(2 * k, &edges).expect("spider edges are valid by construction"))
}

/// Replaces quotient vertex i by `parts[i]`, joining two parts completely
/// whenever their quotient vertices are adjacent.
pub fn substitute(quotient: &Graph, parts: &[Graph]) -> Result<Graph, TestkitError> {
    if parts.len() != quotient.vertex_count() {
        return Err(TestkitError::ArityMismatch {
            expected: quotient.vertex_count(),
            got: parts.len(),
        });
    }
    let mut base = Vec::with_capacity(parts.len() + 1);
    let mut n = 0 as Vertex;
    for p in parts {
        base.push(n);
        n += p.vertex_count() as Vertex;
    }
    base.push(n);
    let mut edges = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for (u, v) in p.edges() {
            edges.push((base[i] + u, base[i] + v));
        }
    }
    for (qu, qv) in quotient.edges() {
        for u in base[qu as usize]..base[qu as usize + 1] {
            for v in base[qv as usize]..base[qv as usize + 1] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::build(n as usize, &edges).expect("substitution edges are valid by construction"))
}

/// All graphs on 1..=n_max vertices up to isomorphism, by repeatedly
/// adding one vertex to the previous level and deduplicating by canonical
/// code. Output is deterministic: size ascending, then code ascending.
pub fn catalog(n_max: usize) -> Result<Vec<Graph>, TestkitError> {
    if n_max > CATALOG_MAX {
        return Err(TestkitError::BudgetExceeded {
            what: "catalog",
            limit: CATALOG_MAX,
            got: n_max,
        });
    }
    let mut out = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    let mut level: Vec<Vec<u16>> = vec![vec![0u16]];
    out.push(graph_from_rows(&level[0]));
    for n in 2..=n_max {
        let mut seen: HashSet<u64> = HashSet::new();
        for rows in &level {
            for mask in 0u16..(1 << (n - 1)) {
                let mut next = rows.clone();
                next.push(mask);
                for i in 0..n - 1 {
                    if mask >> i & 1 == 1 {
                        next[i] |= 1 << (n - 1);
                    }
                }
                seen.insert(canonical_code(&next));
            }
        }
        let mut codes: Vec<u64> = seen.into_iter().collect();
        codes.sort_unstable();
        level = codes.iter().map(|&c| rows_from_code(n, c)).collect();
        out.extend(level.iter().map(|rows| graph_from_rows(rows)));
    }
    Ok(out)
}

fn graph_from_rows(rows: &[u16]) -> Graph {
    let n = rows.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rows[u] >> v & 1 == 1 {
                edges.push((u as Vertex, v as Vertex));
            }
        }
    }
    Graph::build(n, &edges).expect("bitmask rows are a valid graph")
}

fn rows_from_code(n: usize, code: u64) -> Vec<u16> {
    let total = n * (n - 1) / 2;
    let mut rows = vec![0u16; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - idx) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    rows
}

/// Canonical 0/1 code of the upper triangle, minimized over all vertex
/// orders compatible with an isomorphism-invariant coloring (degree
/// refined twice by neighbor color multisets). Exhaustive within color
/// classes with prefix pruning, so isomorphic graphs get equal codes.
fn canonical_code(rows: &[u16]) -> u64 {
    let n = rows.len();
    debug_assert!(n <= 9);
    if n <= 1 {
        return 0;
    }
    let mut color = vec![0u32; n];
    for v in 0..n {
        color[v] = rows[v].count_ones();
    }
    for _ in 0..2 {
        let mut keys: Vec<(u32, [u32; 8], usize)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb = [u32::MAX; 8];
            let mut cnt = 0;
            for u in 0..n {
                if rows[v] >> u & 1 == 1 {
                    nb[cnt] = color[u];
                    cnt += 1;
                }
            }
            nb[..cnt].sort_unstable();
            keys.push((color[v], nb, v));
        }
        let mut sorted: Vec<(u32, [u32; 8])> = keys.iter().map(|k| (k.0, k.1)).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for &(c, nb, v) in &keys {
            color[v] = sorted.binary_search(&(c, nb)).unwrap() as u32;
        }
    }

    // vertices grouped by color; position j must take a vertex of the
    // class designated by the sorted color sequence
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    let slot_color: Vec<u32> = order.iter().map(|&v| color[v]).collect();

    let total = n * (n - 1) / 2;
    struct Dfs<'a> {
        rows: &'a [u16],
        color: &'a [u32],
        slot_color: &'a [u32],
        n: usize,
        total: usize,
        perm: [usize; 9],
        used: u16,
        best: Option<u64>,
    }
    impl Dfs<'_> {
        fn go(&mut self, depth: usize, code: u64, bits: usize) {
            if depth == self.n {
                if self.best.is_none_or(|b| code < b) {
                    self.best = Some(code);
                }
                return;
            }
            let want = self.slot_color[depth];
            for x in 0..self.n {
                if self.used >> x & 1 == 1 || self.color[x] != want {
                    continue;
                }
                let mut appended = code;
                for i in 0..depth {
                    appended = appended << 1 | (self.rows[x] >> self.perm[i] & 1) as u64;
                }
                let new_bits = bits + depth;
                if let Some(b) = self.best {
                    if appended > b >> (self.total - new_bits) {
                        continue;
                    }
                }
                self.perm[depth] = x;
                self.used |= 1 << x;
                self.go(depth + 1, appended, new_bits);
                self.used &= !(1 << x);
            }
        }
    }
    let mut dfs = Dfs {
        rows,
        color: &color,
        slot_color: &slot_color,
        n,
        total,
        perm: [0; 9],
        used: 0,
        best: None,
    };
    dfs.go(0, 0, 0);
    dfs.best.expect("at least one ordering exists")
}
