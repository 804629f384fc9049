//! Undirected simple graphs with dense `0..n` vertex labels, the
//! constructions used throughout (complement, union, disjoint union, line
//! graph, OR product, vertex substitution) and structural queries
//! (bipartition, components, bridges, regularity, vertex transitivity).

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;

/// An immutable undirected simple graph.
///
/// Vertices are `0..n`; optional string names are metadata only. Adjacency
/// lists are sorted and symmetric, edges are stored as `(u, v)` with
/// `u < v` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::DomainError(alloc::format!("self-loop at {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, edges, names: None })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n], edges: Vec::new(), names: None }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Graph {
        debug_assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighborhood of `v` as a bitmask. Only valid for `n <= 64`.
    pub fn neighbors_set(&self, v: usize) -> VertexSet {
        debug_assert!(self.n <= 64);
        VertexSet::from_iter(self.adj[v].iter().copied())
    }

    /// Checks that `s` spans no edge.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors_set(v).is_disjoint(s))
    }

    /// Checks that `s` induces a complete subgraph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s;
            rest.remove(v);
            rest.is_subset_of(self.neighbors_set(v))
        })
    }

    // ---- constructions -------------------------------------------------

    /// Complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement edges are valid")
    }

    /// Union of two graphs on an identical vertex set: edge set is the
    /// union of the two edge sets.
    pub fn union_same_vertices(&self, other: &Graph) -> Result<Graph, Error> {
        if self.n != other.n {
            return Err(Error::VertexSetMismatch);
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Graph::new(self.n, &edges)
    }

    /// Disjoint union; part `i`'s labels are offset by the sizes of parts
    /// before it. Also returns the part index of every output vertex.
    pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>), Error> {
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut part_of = Vec::with_capacity(n);
        let mut offset = 0;
        for (i, g) in parts.iter().enumerate() {
            for &(u, v) in &g.edges {
                edges.push((u + offset, v + offset));
            }
            part_of.extend(core::iter::repeat(i).take(g.n));
            offset += g.n;
        }
        Ok((Graph::new(n, &edges)?, part_of))
    }

    /// Line graph: one vertex per edge of `self`, adjacent when the two
    /// edges share an endpoint. Vertex `i` of the result corresponds to
    /// `self.edges()[i]`; the correspondence is also returned explicitly.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>), Error> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        let m = self.edges.len();
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Ok((Graph::new(m, &edges)?, self.edges.clone()))
    }

    /// OR product of a nonempty list of factors. Vertices are tuples
    /// (encoded in mixed radix, last factor fastest); two distinct tuples
    /// are adjacent when some coordinate where they differ is an edge of
    /// the corresponding factor.
    pub fn or_product(factors: &[Graph]) -> Result<Graph, Error> {
        if factors.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut total: usize = 1;
        for g in factors {
            total = total
                .checked_mul(g.n)
                .filter(|&t| t <= 1 << 14)
                .ok_or(Error::SizeLimitExceeded {
                    what: "or_product",
                    limit: 1 << 14,
                    got: usize::MAX,
                })?;
        }
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut tuple = vec![0; factors.len()];
            for (k, g) in factors.iter().enumerate().rev() {
                tuple[k] = idx % g.n;
                idx /= g.n;
            }
            tuple
        };
        let mut edges = Vec::new();
        for x in 0..total {
            let tx = decode(x);
            for y in x + 1..total {
                let ty = decode(y);
                let adjacent = factors
                    .iter()
                    .zip(tx.iter().zip(ty.iter()))
                    .any(|(g, (&a, &b))| a != b && g.has_edge(a, b));
                if adjacent {
                    edges.push((x, y));
                }
            }
        }
        Graph::new(total, &edges)
    }

    /// Substitutes `f` for vertex `v`: `v` is removed and every vertex of
    /// `f` is joined to the former neighbors of `v`.
    ///
    /// Labels: old vertices `< v` keep their label, old vertices `> v`
    /// shift down by one, and `f`'s vertex `j` becomes `n - 1 + j`. The
    /// relabeling of the surviving `self` vertices is returned as a map.
    pub fn substitute(&self, v: usize, f: &Graph) -> Result<(Graph, VertexMap), Error> {
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        let relabel = |x: usize| if x < v { x } else { x - 1 };
        let base = self.n - 1;
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if a != v && b != v {
                edges.push((relabel(a), relabel(b)));
            }
        }
        for &(a, b) in &f.edges {
            edges.push((base + a, base + b));
        }
        for &u in &self.adj[v] {
            for j in 0..f.n {
                edges.push((relabel(u), base + j));
            }
        }
        let mut map = VertexMap::new();
        for x in 0..self.n {
            if x != v {
                map.insert(x, relabel(x));
            }
        }
        Ok((Graph::new(base + f.n, &edges)?, map))
    }

    /// Induced subgraph on `verts` (given in any order; output labels
    /// follow ascending input labels). Returns the old label of each new
    /// vertex alongside.
    pub fn induced_subgraph(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut old: Vec<usize> = verts.to_vec();
        old.sort_unstable();
        old.dedup();
        let index: BTreeMap<usize, usize> =
            old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                edges.push((a, b));
            }
        }
        (Graph::new(old.len(), &edges).expect("induced edges valid"), old)
    }

    // ---- structural queries --------------------------------------------

    /// Proper 2-coloring, if one exists. In each connected component the
    /// smallest vertex goes to part `A`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member; also the component index of each vertex.
    pub fn components(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            parts.push(members);
        }
        (parts, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().0.len() == 1
    }

    /// Bridges (edges whose removal disconnects their component), by DFS
    /// low-link. Output is sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut out = Vec::new();
        let mut timer = 0usize;
        // Iterative DFS; (vertex, parent-edge endpoint, neighbor cursor).
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, parent, ref mut cursor)) = stack.last_mut() {
                if *cursor < self.adj[u].len() {
                    let w = self.adj[u][*cursor];
                    *cursor += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push((p.min(u), p.max(u)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Set of neighbors of `d`, excluding nothing (callers intersect as
    /// needed).
    pub fn neighborhood(&self, d: &[usize]) -> Vec<usize> {
        let mut out = BTreeSet::new();
        for &v in d {
            out.extend(self.adj[v].iter().copied());
        }
        out.into_iter().collect()
    }

    /// `N(D)` for `D ⊆ A` of a bipartition `(A, B)`. Errors when the graph
    /// is not bipartite against the given parts or `D ⊄ A`.
    pub fn bipartite_neighborhood(
        &self,
        parts: (&[usize], &[usize]),
        d: &[usize],
    ) -> Result<Vec<usize>, Error> {
        let (a, b) = parts;
        if a.len() + b.len() != self.n {
            return Err(Error::NotBipartite);
        }
        let in_a: BTreeSet<usize> = a.iter().copied().collect();
        let in_b: BTreeSet<usize> = b.iter().copied().collect();
        for &(u, v) in &self.edges {
            if in_a.contains(&u) == in_a.contains(&v) {
                return Err(Error::NotBipartite);
            }
        }
        if !d.iter().all(|v| in_a.contains(v)) {
            return Err(Error::NotBipartite);
        }
        let nd = self.neighborhood(d);
        debug_assert!(nd.iter().all(|v| in_b.contains(v)));
        Ok(nd)
    }

    /// Decides vertex transitivity by backtracking automorphism search.
    /// Capped at 16 vertices.
    pub fn is_vertex_transitive(&self) -> Result<bool, Error> {
        const CAP: usize = 16;
        if self.n > CAP {
            return Err(Error::SizeLimitExceeded {
                what: "is_vertex_transitive",
                limit: CAP,
                got: self.n,
            });
        }
        if self.n <= 1 {
            return Ok(true);
        }
        if self.regularity().is_none() {
            return Ok(false);
        }
        Ok((1..self.n).all(|t| self.has_automorphism_mapping(0, t)))
    }

    fn has_automorphism_mapping(&self, src: usize, dst: usize) -> bool {
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        image[src] = dst;
        used[dst] = true;
        // Assign remaining vertices in label order, src pinned first.
        let order: Vec<usize> = core::iter::once(src)
            .chain((0..self.n).filter(|&v| v != src))
            .collect();
        self.extend_automorphism(&order, 1, &mut image, &mut used)
    }

    fn extend_automorphism(
        &self,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..self.n {
            if used[w] || self.degree(w) != self.degree(v) {
                continue;
            }
            for &u in order[..depth].iter() {
                if self.has_edge(v, u) != self.has_edge(w, image[u]) {
                    continue 'cand;
                }
            }
            image[v] = w;
            used[w] = true;
            if self.extend_automorphism(order, depth + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    /// True when some bijection `0..n -> 0..n` maps edges onto edges of
    /// `other`. Brute force over all permutations; test helper scale only.
    pub fn is_isomorphic_brute(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            let ok = self
                .edges
                .iter()
                .all(|&(u, v)| other.has_edge(perm[u], perm[v]));
            if ok {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// An injective partial map between vertex label spaces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    map: BTreeMap<usize, usize>,
}

impl VertexMap {
    pub fn new() -> Self {
        VertexMap { map: BTreeMap::new() }
    }

    pub fn insert(&mut self, from: usize, to: usize) {
        self.map.insert(from, to);
        debug_assert!(self.is_injective());
    }

    pub fn get(&self, from: usize) -> Option<usize> {
        self.map.get(&from).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    fn is_injective(&self) -> bool {
        let targets: BTreeSet<usize> = self.map.values().copied().collect();
        targets.len() == self.map.len()
    }
}

/// Aggregated structural facts, as consumed by reporting front ends.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub components: Vec<Vec<usize>>,
    pub bridges: Vec<(usize, usize)>,
    pub regularity: Option<usize>,
}

pub fn structure_queries(g: &Graph) -> StructureReport {
    StructureReport {
        bipartition: g.bipartition(),
        components: g.components().0,
        bridges: g.bridges(),
        regularity: g.regularity(),
    }
}
