//! Exhaustive enumeration of small digraphs and graphs up to isomorphism.
//!
//! A labelled (di)graph is kept when its adjacency bitmask is the smallest
//! over all vertex permutations.

use dicolour_core::{Digraph, UndirectedGraph};

/// Largest order supported by the bitmask encoding.
pub const MAX_ORDER: usize = 8;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| p[j] > p[i - 1])
            .expect("p[i] qualifies");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn pairs_directed(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

fn pairs_undirected(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Bit position of each pair after relabelling by every permutation.
struct Relabel {
    pairs: Vec<(usize, usize)>,
    maps: Vec<Vec<u32>>,
}

impl Relabel {
    fn new(n: usize, pairs: Vec<(usize, usize)>, directed: bool) -> Self {
        let index = |u: usize, v: usize| {
            let key = if directed || u < v { (u, v) } else { (v, u) };
            pairs.iter().position(|&p| p == key).expect("pair exists") as u32
        };
        let maps = permutations(n)
            .into_iter()
            .skip(1)
            .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
            .collect();
        Relabel { pairs, maps }
    }

    fn is_canonical(&self, mask: u64) -> bool {
        self.maps.iter().all(|map| {
            let mut image = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << map[b];
            }
            image >= mask
        })
    }

    fn decode(&self, mask: u64) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
    }
}

/// One representative of every isomorphism class of digraphs on `n`
/// vertices for which `keep` holds. `keep` must be invariant under
/// relabelling; it is checked before the more expensive canonicity test.
pub fn digraphs_where(n: usize, mut keep: impl FnMut(&Digraph) -> bool) -> Vec<Digraph> {
    assert!(n <= 5, "digraph enumeration is limited to 5 vertices");
    let r = Relabel::new(n, pairs_directed(n), true);
    let mut out = Vec::new();
    for mask in 0..1u64 << r.pairs.len() {
        let g = Digraph::from_arcs(n, r.decode(mask)).expect("pairs are valid arcs");
        if keep(&g) && r.is_canonical(mask) {
            out.push(g);
        }
    }
    out
}

pub fn all_digraphs(n: usize) -> Vec<Digraph> {
    digraphs_where(n, |_| true)
}

/// Representatives of the isomorphism classes of graphs on `n` vertices
/// with maximum degree at most `max_degree`.
pub fn graphs_with_max_degree(n: usize, max_degree: usize) -> Vec<UndirectedGraph> {
    assert!(
        n <= MAX_ORDER,
        "graph enumeration is limited to {MAX_ORDER} vertices"
    );
    let r = Relabel::new(n, pairs_undirected(n), false);
    let mut out = Vec::new();
    for mask in 0..1u64 << r.pairs.len() {
        let mut deg = [0usize; MAX_ORDER];
        let mut fits = true;
        for (u, v) in r.decode(mask) {
            deg[u] += 1;
            deg[v] += 1;
            if deg[u] > max_degree || deg[v] > max_degree {
                fits = false;
                break;
            }
        }
        if fits && r.is_canonical(mask) {
            out.push(
                UndirectedGraph::from_edges(n, r.decode(mask)).expect("pairs are valid edges"),
            );
        }
    }
    out
}

/// All `2^m` orientations of `g` (not reduced up to isomorphism).
pub fn orientations(g: &UndirectedGraph) -> Vec<Digraph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..1u64 << edges.len())
        .map(|mask| {
            let arcs =
                edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) });
            Digraph::from_arcs(g.order(), arcs).expect("one arc per edge")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], [0, 2, 1]);
    }

    // Known counts of digraphs without loops up to isomorphism (OEIS A000273)
    // and of graphs (A000088).
    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_digraphs(n).len()).collect();
        assert_eq!(counts, [1, 3, 16, 218]);
        let counts: Vec<usize> = (1..=5)
            .map(|n| graphs_with_max_degree(n, n).len())
            .collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        // Cubic graphs on 4 vertices: only K4.
        assert_eq!(
            graphs_with_max_degree(4, 3)
                .iter()
                .filter(|g| g.edge_count() == 6)
                .count(),
            1
        );
    }

    #[test]
    fn orientation_count() {
        let g = UndirectedGraph::cycle(4);
        let all = orientations(&g);
        assert_eq!(all.len(), 16);
        assert!(all.iter().all(|d| d.is_oriented() && d.arc_count() == 4));
    }
}
