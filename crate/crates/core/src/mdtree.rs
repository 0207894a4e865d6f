//! Modular decomposition.
//!
//! The tree has Leaf nodes for vertices and three internal node kinds:
//! Parallel (induced subgraph disconnected, children = components), Series
//! (complement disconnected, children = co-components) and Prime (children
//! = maximal proper modules, quotient graph has no module of its own).
//!
//! `decompose` is a recursive partition-refinement algorithm with worst
//! case O(n·(n+m)); the interface is the contract, so a worst-case-linear
//! engine can replace it later. On the structured inputs the solver cares
//! about (spiders, shallow substituted graphs) it runs in a constant
//! number of linear passes.
//!
//! For a connected graph with connected complement, the children of the
//! root are found in two steps with a minimum-degree pivot p:
//!
//!   1. the maximal modules avoiding p, by refining {N(p), V \ N[p]}
//!      with every vertex as a splitter until stable;
//!   2. the maximal module containing p, read off the strongly connected
//!      components of the digraph x -> y for y in N(p) Δ N(x): the unique
//!      source component is exactly the vertex set outside that module.

use crate::graph::{Graph, Vertex};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

/// One node of the decomposition tree.
///
/// `vertices` is the node's vertex set in ascending order. For Prime
/// nodes, `quotient` holds the quotient graph; its vertex `i` stands for
/// `children[i]` (children are ordered by smallest contained vertex).
#[derive(Debug, Clone)]
pub struct MDNode {
    pub kind: NodeKind,
    pub children: Vec<NodeId>,
    pub leaf_vertex: Option<Vertex>,
    pub vertices: Vec<Vertex>,
    pub quotient: Option<Graph>,
}

#[derive(Debug, Clone)]
pub struct MDTree {
    pub nodes: Vec<MDNode>,
    pub root: NodeId,
}

impl MDTree {
    pub fn node(&self, id: NodeId) -> &MDNode {
        &self.nodes[id]
    }

    /// Indented text dump, one line per node: kind and vertex set.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        self.dump_rec(self.root, 0, &mut out);
        out
    }

    fn dump_rec(&self, id: NodeId, depth: usize, out: &mut String) {
        let node = &self.nodes[id];
        for _ in 0..depth {
            out.push_str("  ");
        }
        let kind = match node.kind {
            NodeKind::Leaf => "Leaf",
            NodeKind::Parallel => "Parallel",
            NodeKind::Series => "Series",
            NodeKind::Prime => "Prime",
        };
        out.push_str(kind);
        out.push_str(" {");
        for (i, v) in node.vertices.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&v.to_string());
        }
        out.push_str("}\n");
        for &c in &node.children {
            self.dump_rec(c, depth + 1, out);
        }
    }
}

/// Computes the modular decomposition tree. Requires n >= 1.
pub fn decompose(g: &Graph) -> MDTree {
    assert!(g.vertex_count() >= 1, "decompose needs at least one vertex");
    let mut nodes = Vec::new();
    let ids: Vec<Vertex> = g.vertices().collect();
    let root = decompose_rec(g, &ids, &mut nodes);
    MDTree { nodes, root }
}

/// Whether `g` is prime: no homogeneous set at all, i.e. the tree is a
/// single Prime node over leaves.
pub fn is_prime(g: &Graph) -> bool {
    if g.vertex_count() < 4 {
        return false;
    }
    let tree = decompose(g);
    let root = tree.node(tree.root);
    root.kind == NodeKind::Prime && root.children.len() == g.vertex_count()
}

/// Independent oracle: the inclusion-minimal module containing `{u, v}`,
/// grown by repeatedly adding every outside vertex that distinguishes the
/// current set. Deliberately naive; used to validate `decompose`.
pub fn smallest_module_containing(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    assert_ne!(u, v);
    let n = g.vertex_count();
    let mut in_set = vec![false; n];
    in_set[u as usize] = true;
    in_set[v as usize] = true;
    let mut size = 2usize;
    loop {
        let mut grew = false;
        for w in 0..n {
            if in_set[w] {
                continue;
            }
            let hits = g
                .neighbors(w as Vertex)
                .iter()
                .filter(|&&x| in_set[x as usize])
                .count();
            if hits > 0 && hits < size {
                in_set[w] = true;
                size += 1;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    (0..n as Vertex).filter(|&w| in_set[w as usize]).collect()
}

fn decompose_rec(g: &Graph, ids: &[Vertex], nodes: &mut Vec<MDNode>) -> NodeId {
    let n = g.vertex_count();
    debug_assert_eq!(ids.len(), n);
    if n == 1 {
        nodes.push(MDNode {
            kind: NodeKind::Leaf,
            children: Vec::new(),
            leaf_vertex: Some(ids[0]),
            vertices: vec![ids[0]],
            quotient: None,
        });
        return nodes.len() - 1;
    }

    let comps = components(g);
    if comps.len() >= 2 {
        return push_internal(g, ids, nodes, NodeKind::Parallel, comps, None);
    }

    let cocomps = co_components(g);
    if cocomps.len() >= 2 {
        return push_internal(g, ids, nodes, NodeKind::Series, cocomps, None);
    }

    // connected with connected complement: the children are the maximal
    // proper modules and the quotient is prime
    let parts = maximal_modular_partition(g);
    let reps: Vec<Vertex> = parts.iter().map(|p| p[0]).collect();
    let (quotient, _) = g
        .induced_subgraph(&reps)
        .expect("quotient representatives are nonempty");
    push_internal(g, ids, nodes, NodeKind::Prime, parts, Some(quotient))
}

fn push_internal(
    g: &Graph,
    ids: &[Vertex],
    nodes: &mut Vec<MDNode>,
    kind: NodeKind,
    parts: Vec<Vec<Vertex>>,
    quotient: Option<Graph>,
) -> NodeId {
    let mut children = Vec::with_capacity(parts.len());
    for part in &parts {
        let (sub, local) = g.induced_subgraph(part).expect("parts are nonempty");
        let sub_ids: Vec<Vertex> = local.iter().map(|&l| ids[l as usize]).collect();
        children.push(decompose_rec(&sub, &sub_ids, nodes));
    }
    nodes.push(MDNode {
        kind,
        children,
        leaf_vertex: None,
        vertices: ids.to_vec(),
        quotient,
    });
    nodes.len() - 1
}

/// Connected components, each sorted, ordered by smallest member.
fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in g.vertices() {
        if seen[start as usize] {
            continue;
        }
        let mut comp = vec![start];
        seen[start as usize] = true;
        let mut qi = 0;
        while qi < comp.len() {
            let v = comp[qi];
            qi += 1;
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Components of the complement without materializing it: BFS where the
/// frontier expands to unvisited non-neighbors, tracked in a linked list.
/// O(n + m): every list probe either removes a vertex or crosses an edge.
fn co_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut next: Vec<usize> = (1..=n).collect();
    let mut prev: Vec<usize> = (0..n).map(|v| v.wrapping_sub(1)).collect();
    let mut head = 0usize;
    let unlink = |v: usize, head: &mut usize, next: &mut Vec<usize>, prev: &mut Vec<usize>| {
        if prev[v] == usize::MAX {
            *head = next[v];
        } else {
            next[prev[v]] = next[v];
        }
        if next[v] < n {
            prev[next[v]] = prev[v];
        }
    };
    let mut mark = vec![0u32; n];
    let mut stamp = 0u32;
    let mut comps = Vec::new();
    while head < n {
        let start = head;
        unlink(start, &mut head, &mut next, &mut prev);
        let mut comp = vec![start as Vertex];
        let mut qi = 0;
        while qi < comp.len() {
            let v = comp[qi];
            qi += 1;
            stamp += 1;
            for &w in g.neighbors(v) {
                mark[w as usize] = stamp;
            }
            let mut cur = head;
            while cur < n {
                let nxt = next[cur];
                if mark[cur] != stamp {
                    unlink(cur, &mut head, &mut next, &mut prev);
                    comp.push(cur as Vertex);
                }
                cur = nxt;
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// Partition of V into the maximal proper modules of a connected,
/// co-connected graph (singletons included). Parts sorted by smallest
/// member, each part sorted.
fn maximal_modular_partition(g: &Graph) -> Vec<Vec<Vertex>> {
    let pivot = g.min_degree_vertex(&[]).expect("graph is nonempty");
    let avoiding = max_modules_avoiding(g, pivot);

    // quotient on representatives: pivot plus one vertex per part
    let mut reps: Vec<Vertex> = vec![pivot];
    reps.extend(avoiding.iter().map(|p| p[0]));
    reps.sort_unstable();
    let (q0, rep_ids) = g.induced_subgraph(&reps).expect("representatives nonempty");
    let pivot_local = rep_ids
        .iter()
        .position(|&r| r == pivot)
        .expect("pivot is a representative") as Vertex;

    let outside = source_scc(&q0, pivot_local);
    let mut outside_rep = vec![false; g.vertex_count()];
    for &x in &outside {
        outside_rep[rep_ids[x as usize] as usize] = true;
    }

    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    let mut pivot_module = vec![pivot];
    for part in avoiding {
        if outside_rep[part[0] as usize] {
            parts.push(part);
        } else {
            pivot_module.extend(part);
        }
    }
    pivot_module.sort_unstable();
    parts.push(pivot_module);
    parts.sort_by_key(|p| p[0]);
    parts
}

/// Maximal modules of `g` not containing `pivot`: the coarsest partition
/// of V \ {pivot} refining {N(pivot), rest} in which no outside vertex
/// splits a part. Repeated linear passes; each pass tries every vertex as
/// a splitter and extracts the neighbor side of any part it cuts.
fn max_modules_avoiding(g: &Graph, pivot: Vertex) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    const NONE: u32 = u32::MAX;
    let mut part_of = vec![NONE; n];
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    let mut pos = vec![0u32; n];

    let seed = |vs: Vec<Vertex>, members: &mut Vec<Vec<Vertex>>, part_of: &mut Vec<u32>, pos: &mut Vec<u32>| {
        if vs.is_empty() {
            return;
        }
        let id = members.len() as u32;
        for (i, &v) in vs.iter().enumerate() {
            part_of[v as usize] = id;
            pos[v as usize] = i as u32;
        }
        members.push(vs);
    };
    let neighborhood: Vec<Vertex> = g.neighbors(pivot).to_vec();
    let mut in_nb = vec![false; n];
    for &v in &neighborhood {
        in_nb[v as usize] = true;
    }
    let rest: Vec<Vertex> = g
        .vertices()
        .filter(|&v| v != pivot && !in_nb[v as usize])
        .collect();
    seed(neighborhood, &mut members, &mut part_of, &mut pos);
    seed(rest, &mut members, &mut part_of, &mut pos);

    let mut bucket: Vec<Vec<Vertex>> = Vec::new();
    loop {
        let mut changed = false;
        for w in g.vertices() {
            if w == pivot {
                continue;
            }
            bucket.resize_with(members.len(), Vec::new);
            let own = part_of[w as usize];
            let mut touched: Vec<u32> = Vec::new();
            for &u in g.neighbors(w) {
                let pid = part_of[u as usize];
                if pid == NONE || pid == own {
                    continue;
                }
                if bucket[pid as usize].is_empty() {
                    touched.push(pid);
                }
                bucket[pid as usize].push(u);
            }
            for pid in touched {
                let grabbed = std::mem::take(&mut bucket[pid as usize]);
                if grabbed.len() == members[pid as usize].len() {
                    continue; // w sees the whole part, no split
                }
                // extract the neighbor side into a fresh part
                changed = true;
                let new_id = members.len() as u32;
                for (i, &u) in grabbed.iter().enumerate() {
                    let p = pos[u as usize] as usize;
                    let old = &mut members[pid as usize];
                    let last = old.pop().expect("part is nonempty");
                    if last != u {
                        old[p] = last;
                        pos[last as usize] = p as u32;
                    }
                    part_of[u as usize] = new_id;
                    pos[u as usize] = i as u32;
                }
                members.push(grabbed);
            }
        }
        if !changed {
            break;
        }
    }

    let mut parts: Vec<Vec<Vertex>> = members.into_iter().filter(|p| !p.is_empty()).collect();
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_by_key(|p| p[0]);
    parts
}

/// Vertices of the unique source component of the distinguisher digraph
/// D on V \ {pivot}, with arcs x -> y for y in N(pivot) Δ N(x) minus
/// {pivot, x}. A module containing the pivot and x must absorb every
/// vertex reachable from x, so the source component is exactly the
/// complement of the maximal proper module containing the pivot.
fn source_scc(g: &Graph, pivot: Vertex) -> Vec<Vertex> {
    let n = g.vertex_count();
    const UNSET: u32 = u32::MAX;
    let out_arcs = |x: Vertex| -> Vec<Vertex> {
        // symmetric difference of two sorted lists
        let a = g.neighbors(pivot);
        let b = g.neighbors(x);
        let mut res = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let y = if j >= b.len() || (i < a.len() && a[i] < b[j]) {
                let y = a[i];
                i += 1;
                y
            } else if i >= a.len() || b[j] < a[i] {
                let y = b[j];
                j += 1;
                y
            } else {
                i += 1;
                j += 1;
                continue;
            };
            if y != pivot && y != x {
                res.push(y);
            }
        }
        res
    };

    // iterative Tarjan
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut ncomp = 0u32;
    let mut counter = 0u32;
    struct Frame {
        v: Vertex,
        arcs: Vec<Vertex>,
        next: usize,
    }
    let mut frames: Vec<Frame> = Vec::new();
    for root in g.vertices() {
        if root == pivot || index[root as usize] != UNSET {
            continue;
        }
        index[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        frames.push(Frame { v: root, arcs: out_arcs(root), next: 0 });
        while let Some(top) = frames.last_mut() {
            if top.next < top.arcs.len() {
                let y = top.arcs[top.next];
                top.next += 1;
                if index[y as usize] == UNSET {
                    index[y as usize] = counter;
                    low[y as usize] = counter;
                    counter += 1;
                    stack.push(y);
                    on_stack[y as usize] = true;
                    frames.push(Frame { v: y, arcs: out_arcs(y), next: 0 });
                } else if on_stack[y as usize] {
                    let v = top.v;
                    low[v as usize] = low[v as usize].min(index[y as usize]);
                }
            } else {
                let v = top.v;
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.v;
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    loop {
                        let w = stack.pop().expect("tarjan stack is nonempty");
                        on_stack[w as usize] = false;
                        comp[w as usize] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }

    // a component is a source iff no arc enters it from another component
    let mut has_in = vec![false; ncomp as usize];
    for x in g.vertices() {
        if x == pivot {
            continue;
        }
        for y in out_arcs(x) {
            if comp[x as usize] != comp[y as usize] {
                has_in[comp[y as usize] as usize] = true;
            }
        }
    }
    let sources: Vec<u32> = (0..ncomp).filter(|&c| !has_in[c as usize]).collect();
    debug_assert_eq!(
        sources.len(),
        1,
        "connected co-connected input must yield a unique source component"
    );
    let source = sources[0];
    g.vertices()
        .filter(|&v| v != pivot && comp[v as usize] == source)
        .collect()
}
