//! Brute-force construction of the k-dicolouring graph on small digraphs.
//!
//! Colourings are enumerated by backtracking in lexicographic order (vertex
//! 0 most significant) and identified by their rank. Each one is also
//! encoded as a base-`k` integer, so lexicographic order is numeric order
//! and a neighbour is found by binary search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitGraph;
use crate::dicolouring::Dicolouring;
use crate::digraph::Digraph;
use crate::error::{Endpoint, Error, Result};
use crate::redicolouring::{RecolouringSequence, Step};

/// Search nodes (partial assignments) allowed unless stated otherwise.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1 << 24;

const UNSEEN: usize = usize::MAX;

/// The k-dicolouring graph of a digraph, with adjacency computed on demand.
#[derive(Debug, Clone)]
pub struct DicolouringGraph {
    n: usize,
    k: usize,
    codes: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DicolouringGraphSummary {
    pub colourings: usize,
    pub components: usize,
    /// `None` when the graph is disconnected (or empty).
    pub diameter: Option<usize>,
    /// Diameter of the largest component, the lowest-ranked one on ties.
    pub largest_component_diameter: usize,
    pub frozen: usize,
}

struct Enumerate<'a> {
    g: &'a BitGraph,
    k: usize,
    classes: Vec<u64>,
    code: u64,
    out: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Enumerate<'_> {
    fn extend(&mut self, v: usize) -> Result<()> {
        if v == self.g.order() {
            self.out.push(self.code);
            return Ok(());
        }
        for c in 0..self.k {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            if self.g.closes_cycle(v, self.classes[c]) {
                continue;
            }
            self.classes[c] |= 1 << v;
            let saved = self.code;
            self.code = self.code * self.k as u64 + c as u64;
            self.extend(v + 1)?;
            self.code = saved;
            self.classes[c] &= !(1 << v);
        }
        Ok(())
    }
}

fn check_size(n: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::precondition("k must be positive"));
    }
    // k^n must fit in a u64 code.
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc
            .checked_mul(k as u64)
            .ok_or(Error::TooLarge { n, max: 64 })?;
    }
    Ok(())
}

/// All valid k-dicolourings of `g` in lexicographic order.
pub fn enumerate_dicolourings(g: &Digraph, k: usize) -> Result<Vec<Dicolouring>> {
    enumerate_dicolourings_with_budget(g, k, DEFAULT_ORACLE_BUDGET)
}

pub fn enumerate_dicolourings_with_budget(
    g: &Digraph,
    k: usize,
    budget: u64,
) -> Result<Vec<Dicolouring>> {
    let d = build_dicolouring_graph_with_budget(g, k, budget)?;
    (0..d.len())
        .map(|i| Dicolouring::new(k, d.colouring(i)))
        .collect()
}

pub fn build_dicolouring_graph(g: &Digraph, k: usize) -> Result<DicolouringGraph> {
    build_dicolouring_graph_with_budget(g, k, DEFAULT_ORACLE_BUDGET)
}

pub fn build_dicolouring_graph_with_budget(
    g: &Digraph,
    k: usize,
    budget: u64,
) -> Result<DicolouringGraph> {
    let bits = BitGraph::new(g)?;
    let n = g.order();
    check_size(n, k)?;
    let mut e = Enumerate {
        g: &bits,
        k,
        classes: vec![0; k],
        code: 0,
        out: Vec::new(),
        nodes: 0,
        budget,
    };
    e.extend(0)?;
    Ok(DicolouringGraph { n, k, codes: e.out })
}

impl DicolouringGraph {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn place(&self, v: usize) -> u64 {
        (self.k as u64).pow((self.n - 1 - v) as u32)
    }

    /// Colours of the colouring with rank `i`, 1-based.
    pub fn colouring(&self, i: usize) -> Vec<usize> {
        let mut code = self.codes[i];
        let mut out = vec![0; self.n];
        for v in (0..self.n).rev() {
            out[v] = (code % self.k as u64) as usize + 1;
            code /= self.k as u64;
        }
        out
    }

    /// Rank of `colours`, if it is a valid k-dicolouring.
    pub fn index_of(&self, colours: &[usize]) -> Option<usize> {
        if colours.len() != self.n || colours.iter().any(|&c| c == 0 || c > self.k) {
            return None;
        }
        let code = colours
            .iter()
            .fold(0u64, |acc, &c| acc * self.k as u64 + (c - 1) as u64);
        self.codes.binary_search(&code).ok()
    }

    /// Ranks adjacent to `i`, ascending, each with the step leading there.
    pub fn neighbours(&self, i: usize) -> Vec<(usize, Step)> {
        let code = self.codes[i];
        let mut out = Vec::new();
        for v in 0..self.n {
            let place = self.place(v);
            let digit = (code / place) % self.k as u64;
            let base = code - digit * place;
            for c in 0..self.k as u64 {
                if c == digit {
                    continue;
                }
                if let Ok(j) = self.codes.binary_search(&(base + c * place)) {
                    out.push((j, Step::new(v, c as usize + 1)));
                }
            }
        }
        out.sort_unstable_by_key(|&(j, _)| j);
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbours(i).len()
    }

    /// Adjacent rank pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| {
                self.neighbours(i)
                    .into_iter()
                    .filter(move |&(j, _)| j > i)
                    .map(move |(j, _)| (i, j))
            })
            .collect()
    }

    /// BFS distances from `from`; `None` for unreachable ranks.
    pub fn distances(&self, from: usize) -> Vec<Option<usize>> {
        let (dist, _) = self.bfs(from, None);
        dist.into_iter()
            .map(|d| (d != UNSEEN).then_some(d))
            .collect()
    }

    fn bfs(&self, from: usize, stop: Option<usize>) -> (Vec<usize>, Vec<(usize, Step)>) {
        let mut dist = vec![UNSEEN; self.len()];
        let mut parent = vec![(UNSEEN, Step::new(0, 0)); self.len()];
        let mut queue = VecDeque::from([from]);
        dist[from] = 0;
        while let Some(i) = queue.pop_front() {
            if Some(i) == stop {
                break;
            }
            for (j, step) in self.neighbours(i) {
                if dist[j] == UNSEEN {
                    dist[j] = dist[i] + 1;
                    parent[j] = (i, step);
                    queue.push_back(j);
                }
            }
        }
        (dist, parent)
    }

    /// Connected components as ascending rank lists, ordered by lowest rank.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for (j, _) in self.neighbours(i) {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Largest eccentricity over the ranks in `component`.
    pub fn component_diameter(&self, component: &[usize]) -> usize {
        component
            .iter()
            .map(|&s| self.distances(s).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Ranks of colourings with no neighbour.
    pub fn frozen(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.neighbours(i).is_empty())
            .collect()
    }

    pub fn summary(&self) -> DicolouringGraphSummary {
        let comps = self.components();
        let largest = comps
            .iter()
            .enumerate()
            .max_by_key(|(i, c)| (c.len(), core::cmp::Reverse(*i)))
            .map(|(_, c)| self.component_diameter(c))
            .unwrap_or(0);
        DicolouringGraphSummary {
            colourings: self.len(),
            components: comps.len(),
            diameter: (comps.len() == 1).then_some(largest),
            largest_component_diameter: largest,
            frozen: self.frozen().len(),
        }
    }

    /// A geodesic between two ranks.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<Step>> {
        let (dist, parent) = self.bfs(from, Some(to));
        if dist[to] == UNSEEN {
            return None;
        }
        let mut steps = Vec::with_capacity(dist[to]);
        let mut at = to;
        while at != from {
            let (p, step) = parent[at];
            steps.push(step);
            at = p;
        }
        steps.reverse();
        Some(steps)
    }
}

fn locate(d: &DicolouringGraph, colours: &[usize], end: Endpoint) -> Result<usize> {
    if colours.len() != d.order() {
        return Err(Error::LengthMismatch {
            expected: d.order(),
            found: colours.len(),
        });
    }
    if let Some((vertex, &colour)) = colours
        .iter()
        .enumerate()
        .find(|(_, &c)| c == 0 || c > d.k())
    {
        return Err(Error::ColourOutOfRange { vertex, colour });
    }
    d.index_of(colours).ok_or(Error::InvalidColouring(end))
}

/// A shortest redicolouring sequence; `Unreachable` when `alpha` and `beta`
/// lie in different components.
pub fn shortest_sequence(
    g: &Digraph,
    k: usize,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RecolouringSequence> {
    shortest_sequence_with_budget(g, k, alpha, beta, DEFAULT_ORACLE_BUDGET)
}

pub fn shortest_sequence_with_budget(
    g: &Digraph,
    k: usize,
    alpha: &[usize],
    beta: &[usize],
    budget: u64,
) -> Result<RecolouringSequence> {
    let d = build_dicolouring_graph_with_budget(g, k, budget)?;
    shortest_in(&d, alpha, beta)
}

/// As [`shortest_sequence`] on an already built graph.
pub fn shortest_in(
    d: &DicolouringGraph,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RecolouringSequence> {
    let a = locate(d, alpha, Endpoint::Start)?;
    let b = locate(d, beta, Endpoint::Target)?;
    let steps = d.path(a, b).ok_or(Error::Unreachable)?;
    let bound = steps.len();
    crate::redicolouring::sequence(alpha, d.k(), steps, bound, "bfs")
}

/// Distance between two dicolourings in the k-dicolouring graph, `None` if
/// unreachable.
pub fn distance(g: &Digraph, k: usize, alpha: &[usize], beta: &[usize]) -> Result<Option<usize>> {
    match shortest_sequence(g, k, alpha, beta) {
        Ok(s) => Ok(Some(s.len())),
        Err(Error::Unreachable) => Ok(None),
        Err(e) => Err(e),
    }
}

/// All k-frozen dicolourings of `g`, in rank order.
pub fn frozen_set(g: &Digraph, k: usize) -> Result<Vec<Dicolouring>> {
    let d = build_dicolouring_graph(g, k)?;
    d.frozen()
        .into_iter()
        .map(|i| Dicolouring::new(k, d.colouring(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicolouring::{is_frozen, is_valid_colours};

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_dicolourings(&Digraph::directed_cycle(3), 2)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_dicolourings(&Digraph::bidirected_complete(4), 4)
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            enumerate_dicolourings(&Digraph::new(1), 3).unwrap().len(),
            3
        );
        assert_eq!(
            enumerate_dicolourings(&Digraph::new(0), 3).unwrap().len(),
            1
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 2), (3, 0)]).unwrap();
        let k = 3;
        let mut expected = Vec::new();
        for code in 0..81usize {
            let c: Vec<usize> = (0..4)
                .map(|v| (code / 3usize.pow(3 - v as u32)) % 3 + 1)
                .collect();
            if is_valid_colours(&g, &c) {
                expected.push(c);
            }
        }
        let got: Vec<Vec<usize>> = enumerate_dicolourings(&g, k)
            .unwrap()
            .into_iter()
            .map(Dicolouring::into_colours)
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn summaries() {
        let s = build_dicolouring_graph(&Digraph::directed_cycle(3), 2)
            .unwrap()
            .summary();
        assert_eq!(
            (s.colourings, s.components, s.diameter, s.frozen),
            (6, 1, Some(3), 0)
        );

        let s = build_dicolouring_graph(&Digraph::bidirected_complete(4), 4)
            .unwrap()
            .summary();
        assert_eq!(
            (s.colourings, s.components, s.diameter, s.frozen),
            (24, 24, None, 24)
        );
        assert_eq!(s.largest_component_diameter, 0);

        // Proper 3-colourings of a path on 3 vertices: 12, all mixing.
        let s = build_dicolouring_graph(&Digraph::bidirected_path(3), 3)
            .unwrap()
            .summary();
        assert_eq!((s.colourings, s.components, s.frozen), (12, 1, 0));
        assert!(s.diameter.is_some());
    }

    #[test]
    fn frozen_agrees_with_degree() {
        for (g, k) in [
            (Digraph::bidirected_complete(4), 4),
            (Digraph::bidirected_cycle(5), 3),
            (Digraph::directed_cycle(4), 2),
        ] {
            let d = build_dicolouring_graph(&g, k).unwrap();
            for i in 0..d.len() {
                let c = Dicolouring::new(k, d.colouring(i)).unwrap();
                assert_eq!(is_frozen(&g, &c), d.degree(i) == 0);
            }
        }
        assert!(frozen_set(&Digraph::directed_cycle(5), 2)
            .unwrap()
            .is_empty());
        assert_eq!(
            frozen_set(&Digraph::bidirected_complete(4), 4)
                .unwrap()
                .len(),
            24
        );
    }

    #[test]
    fn shortest_sequences() {
        let c3 = Digraph::directed_cycle(3);
        assert!(shortest_sequence(&c3, 2, &[1, 2, 1], &[1, 2, 1])
            .unwrap()
            .is_empty());
        let s = shortest_sequence(&c3, 2, &[1, 2, 1], &[2, 1, 2]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.final_colours(), [2, 1, 2]);
        assert_eq!(
            distance(&Digraph::directed_cycle(4), 2, &[1, 1, 2, 2], &[2, 2, 1, 1]).unwrap(),
            Some(4)
        );

        let k4 = Digraph::bidirected_complete(4);
        assert_eq!(
            shortest_sequence(&k4, 4, &[1, 2, 3, 4], &[2, 1, 3, 4]),
            Err(Error::Unreachable)
        );
        assert_eq!(
            shortest_sequence(&c3, 2, &[1, 1, 1], &[1, 2, 1]),
            Err(Error::InvalidColouring(Endpoint::Start))
        );
    }

    #[test]
    fn budget_is_enforced() {
        let g = Digraph::new(10);
        assert_eq!(
            build_dicolouring_graph_with_budget(&g, 3, 100).unwrap_err(),
            Error::BudgetExceeded(100)
        );
    }
}
