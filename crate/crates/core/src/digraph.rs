//! Directed graphs on dense vertex ids `0..n`.
//!
//! Arcs are stored twice, as sorted out- and in-adjacency lists. A digon
//! `[u, v]` is nothing more than the two arcs `(u, v)` and `(v, u)`.
//! Every iteration order is ascending by vertex id.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A simple directed graph: no loops, no parallel arcs, digons allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arcs: usize,
}

/// An undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
}

/// An induced subdigraph together with the table mapping its local ids back
/// to the ids of the parent digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Digraph,
    /// `vertices[local] == parent id`, ascending.
    pub vertices: Vec<usize>,
}

impl Induced {
    pub fn to_parent(&self, local: usize) -> usize {
        self.vertices[local]
    }

    /// Restricts a colouring of the parent digraph to this subdigraph.
    pub fn restrict<T: Copy>(&self, parent_values: &[T]) -> Vec<T> {
        self.vertices.iter().map(|&v| parent_values[v]).collect()
    }
}

/// Per-vertex and global degree statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    /// `max(d⁺, d⁻)` for every vertex.
    pub d_max: Vec<usize>,
    /// `min(d⁺, d⁻)` for every vertex.
    pub d_min: Vec<usize>,
    pub delta_max: usize,
    pub delta_min: usize,
    /// Largest product `d⁺(v)·d⁻(v)`; the maximum geometric mean is its root.
    pub max_degree_product: usize,
}

impl DegreeProfile {
    /// Maximum geometric mean `max_v sqrt(d⁺(v)·d⁻(v))`.
    pub fn geometric_mean(&self) -> f64 {
        libm::sqrt(self.max_degree_product as f64)
    }
}

impl Digraph {
    /// Arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arcs: 0,
        }
    }

    /// Builds a digraph from a list of arcs, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Like [`Digraph::from_arcs`] but silently drops duplicate arcs.
    pub fn from_arcs_dedup<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::new(n);
        for (u, v) in arcs {
            match g.add_arc(u, v) {
                Ok(()) | Err(Error::DuplicateArc(..)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(g)
    }

    fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateArc(u, v)),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.arcs += 1;
                Ok(())
            }
        }
    }

    pub fn directed_cycle(n: usize) -> Self {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 2")
    }

    pub fn directed_path(n: usize) -> Self {
        Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn bidirected_cycle(n: usize) -> Self {
        Digraph::bidirect(&UndirectedGraph::cycle(n))
    }

    pub fn bidirected_path(n: usize) -> Self {
        Digraph::bidirect(&UndirectedGraph::path(n))
    }

    pub fn bidirected_complete(n: usize) -> Self {
        Digraph::bidirect(&UndirectedGraph::complete(n))
    }

    /// Replaces every edge of `g` by a digon.
    pub fn bidirect(g: &UndirectedGraph) -> Self {
        let arcs = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]);
        Digraph::from_arcs(g.order(), arcs).expect("undirected graph is simple")
    }

    /// `h1 ⇒ h2`: disjoint copies (h1 first) plus every arc from the copy of
    /// `h1` to the copy of `h2`.
    pub fn directed_join(h1: &Digraph, h2: &Digraph) -> Self {
        let (n1, n2) = (h1.order(), h2.order());
        let arcs = h1
            .arcs()
            .chain(h2.arcs().map(|(u, v)| (u + n1, v + n1)))
            .chain((0..n1).flat_map(move |u| (0..n2).map(move |v| (u, v + n1))));
        Digraph::from_arcs(n1 + n2, arcs).expect("join of simple digraphs is simple")
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn d_max(&self, v: usize) -> usize {
        self.out_degree(v).max(self.in_degree(v))
    }

    pub fn d_min(&self, v: usize) -> usize {
        self.out_degree(v).min(self.in_degree(v))
    }

    pub fn delta_max(&self) -> usize {
        (0..self.order()).map(|v| self.d_max(v)).max().unwrap_or(0)
    }

    pub fn delta_min(&self) -> usize {
        (0..self.order()).map(|v| self.d_min(v)).max().unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out.get(u).is_some_and(|o| o.binary_search(&v).is_ok())
    }

    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// True when `u` and `v` are joined by an arc in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, o)| o.iter().map(move |&v| (u, v)))
    }

    /// `N⁺(v) ∖ N⁻(v)`: heads of the simple arcs leaving `v`.
    pub fn simple_out(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v]
            .iter()
            .copied()
            .filter(move |&w| !self.has_arc(w, v))
    }

    /// `N⁻(v) ∖ N⁺(v)`: tails of the simple arcs entering `v`.
    pub fn simple_in(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v]
            .iter()
            .copied()
            .filter(move |&w| !self.has_arc(v, w))
    }

    /// `N(v) = N⁺(v) ∪ N⁻(v)`, ascending.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// No digons.
    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Every arc lies in a digon.
    pub fn is_bidirected(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let n = self.order();
        let out_degree: Vec<usize> = (0..n).map(|v| self.out_degree(v)).collect();
        let in_degree: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let d_max: Vec<usize> = (0..n).map(|v| out_degree[v].max(in_degree[v])).collect();
        let d_min: Vec<usize> = (0..n).map(|v| out_degree[v].min(in_degree[v])).collect();
        DegreeProfile {
            delta_max: d_max.iter().copied().max().unwrap_or(0),
            delta_min: d_min.iter().copied().max().unwrap_or(0),
            max_degree_product: (0..n)
                .map(|v| out_degree[v] * in_degree[v])
                .max()
                .unwrap_or(0),
            out_degree,
            in_degree,
            d_max,
            d_min,
        }
    }

    /// Undirected graph whose edges are the digons.
    pub fn digon_graph(&self) -> UndirectedGraph {
        let edges = self.arcs().filter(|&(u, v)| u < v && self.has_arc(v, u));
        UndirectedGraph::from_edges(self.order(), edges).expect("arcs are in range")
    }

    /// Undirected graph with an edge for every arc, direction forgotten.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        let edges = self.arcs().map(|(u, v)| (u.min(v), u.max(v)));
        UndirectedGraph::from_edges_dedup(self.order(), edges)
    }

    /// Copy of this digraph with the given arcs removed.
    pub fn without_arcs(&self, removed: &[(usize, usize)]) -> Digraph {
        let arcs = self.arcs().filter(|a| !removed.contains(a));
        Digraph::from_arcs(self.order(), arcs).expect("subset of a simple digraph")
    }

    /// Subdigraph induced by `vertices` (any order, duplicates ignored).
    pub fn induced(&self, vertices: &[usize]) -> Result<Induced> {
        let n = self.order();
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let arcs = keep.iter().flat_map(|&u| {
            self.out[u]
                .iter()
                .filter(|&&v| local[v] != usize::MAX)
                .map(|&v| (local[u], local[v]))
                .collect::<Vec<_>>()
        });
        let graph = Digraph::from_arcs(keep.len(), arcs).expect("induced arcs are simple");
        Ok(Induced {
            graph,
            vertices: keep,
        })
    }

    /// Subdigraph induced by the vertices for which `keep` holds.
    pub fn induced_by(&self, keep: impl Fn(usize) -> bool) -> Induced {
        let vertices: Vec<usize> = (0..self.order()).filter(|&v| keep(v)).collect();
        self.induced(&vertices).expect("vertices are in range")
    }

    /// Finds a directed cycle using only arcs accepted by `keep`.
    ///
    /// The cycle is returned as its vertex sequence `v0, v1, .., vl-1` with
    /// arcs `vi -> vi+1` and `vl-1 -> v0`.
    pub fn find_cycle_filtered(&self, keep: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.order();
        let mut state = vec![WHITE; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if state[root] != WHITE {
                continue;
            }
            state[root] = GREY;
            stack.push((root, 0));
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.out[v].get(*next) {
                    *next += 1;
                    if !keep(v, w) {
                        continue;
                    }
                    match state[w] {
                        WHITE => {
                            state[w] = GREY;
                            stack.push((w, 0));
                        }
                        GREY => {
                            let start = stack.iter().position(|&(x, _)| x == w).unwrap();
                            return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                        }
                        _ => {}
                    }
                } else {
                    state[v] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        self.find_cycle_filtered(|_, _| true)
    }

    /// No directed cycle; a digon counts as a cycle of length two.
    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Strongly connected components in reverse topological order of the
    /// condensation (sink components first), each sorted ascending.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        // Iterative Tarjan.
        let n = self.order();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut tarjan_stack: Vec<usize> = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut counter = 0;
        let mut comps = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            tarjan_stack.push(root);
            on_stack[root] = true;
            call.push((root, 0));
            while let Some(&mut (v, ref mut next)) = call.last_mut() {
                if let Some(&w) = self.out[v].get(*next) {
                    *next += 1;
                    if index[w] == usize::MAX {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        tarjan_stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = tarjan_stack.pop().unwrap();
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps
    }

    /// Connected when arc directions are ignored. The empty digraph counts
    /// as connected.
    pub fn is_weakly_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// Shortest directed path from any vertex of `sources` to a vertex
    /// satisfying `is_target`, through vertices accepted by `allowed` (the
    /// endpoints included).
    pub(crate) fn shortest_path_within(
        &self,
        sources: &[usize],
        is_target: impl Fn(usize) -> bool,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = alloc::collections::VecDeque::new();
        for &s in sources {
            if allowed(s) && !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            if is_target(v) {
                let mut path = vec![v];
                let mut cur = v;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.out[v] {
                if !seen[w] && allowed(w) {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        UndirectedGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateArc(u.min(v), u.max(v)));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        let p = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(p, v);
        let p = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(p, u);
    }

    pub fn path(n: usize) -> Self {
        UndirectedGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        UndirectedGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .unwrap()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `self` is a subgraph of `other` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &UndirectedGraph) -> bool {
        self.order() == other.order() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Connected components, each ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices` (ascending), relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> UndirectedGraph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = vertices
            .iter()
            .flat_map(|&u| {
                self.adj[u]
                    .iter()
                    .filter(|&&v| local[v] != usize::MAX && u < v)
                    .map(|&v| (local[u], local[v]))
                    .collect::<Vec<_>>()
            })
            .collect();
        UndirectedGraph::from_edges(vertices.len(), edges).expect("induced edges are simple")
    }
}
