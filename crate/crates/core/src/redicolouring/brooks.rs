//! Redicolouring of connected digraphs with `Δ_max = Δ ≥ 3` and `k ≥ Δ + 1`
//! between non-frozen dicolourings.
//!
//! The vertices whose in- and out-neighbourhoods coincide induce a
//! bidirected digraph, handled by an undirected recolourer; every undirected
//! step is bridged into at most `Δ + 2` digraph steps. The remaining
//! vertices are finished with list redicolouring.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::list::{check_preconditions, list_steps};
use super::{check_endpoints, sequence, verify_sequence, RecolouringSequence, Step, Walk};
use crate::dicolouring::{blocked_witness, is_frozen, Dicolouring, ListAssignment, Palette};
use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Endpoint, Error, Result};
use crate::oracle::{build_dicolouring_graph_with_budget, shortest_in, DEFAULT_ORACLE_BUDGET};

/// Produces a recolouring sequence between two proper k-colourings of an
/// undirected graph, in the graph's own numbering.
pub trait UndirectedRecolourer {
    fn recolour(
        &self,
        g: &UndirectedGraph,
        k: usize,
        alpha: &[usize],
        beta: &[usize],
    ) -> Result<Vec<Step>>;
}

/// Shortest sequences by breadth-first search, one component at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsRecolourer {
    pub budget: u64,
}

impl Default for BfsRecolourer {
    fn default() -> Self {
        BfsRecolourer {
            budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

impl UndirectedRecolourer for BfsRecolourer {
    fn recolour(
        &self,
        g: &UndirectedGraph,
        k: usize,
        alpha: &[usize],
        beta: &[usize],
    ) -> Result<Vec<Step>> {
        let mut steps = Vec::new();
        for comp in g.components() {
            let a: Vec<usize> = comp.iter().map(|&v| alpha[v]).collect();
            let b: Vec<usize> = comp.iter().map(|&v| beta[v]).collect();
            if a == b {
                continue;
            }
            let d = Digraph::bidirect(&g.induced(&comp));
            for (c, end) in [(&a, Endpoint::Start), (&b, Endpoint::Target)] {
                if is_frozen(&d, &Dicolouring::new(k, c.clone())?) {
                    return Err(Error::FrozenEndpoint(end));
                }
            }
            let graph = build_dicolouring_graph_with_budget(&d, k, self.budget)?;
            let seq = shortest_in(&graph, &a, &b)?;
            steps.extend(
                seq.steps
                    .iter()
                    .map(|s| Step::new(comp[s.vertex], s.colour)),
            );
        }
        Ok(steps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksReport {
    pub sequence: RecolouringSequence,
    /// Digraph steps spent on each undirected step, in order.
    pub bridges: Vec<usize>,
    pub undirected_steps: usize,
    pub list_steps: usize,
    /// Simple arcs dropped because every cycle through them has a digon.
    pub removed_arcs: Vec<(usize, usize)>,
    /// Vertices with `N⁺ = N⁻` after the arc removal.
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

pub fn recolour_brooks(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
    k: usize,
) -> Result<BrooksReport> {
    recolour_brooks_with(g, alpha, beta, k, &BfsRecolourer::default())
}

pub fn recolour_brooks_with(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
    k: usize,
    recolourer: &dyn UndirectedRecolourer,
) -> Result<BrooksReport> {
    if g.order() == 0 || !g.is_weakly_connected() {
        return Err(Error::precondition(
            "input must be a non-empty connected digraph",
        ));
    }
    let delta = g.delta_max();
    if delta < 3 {
        return Err(Error::precondition("Δ_max must be at least 3"));
    }
    if k < delta + 1 {
        return Err(Error::precondition("k must be at least Δ_max + 1"));
    }
    let palette = Palette::Colours(k);
    check_endpoints(g, palette, alpha, beta)?;
    for (c, end) in [(alpha, Endpoint::Start), (beta, Endpoint::Target)] {
        if is_frozen(g, &Dicolouring::new(k, c.to_vec())?) {
            return Err(Error::FrozenEndpoint(end));
        }
    }

    let (d, removed_arcs) = prune(g);
    let n = d.order();
    let in_x: Vec<bool> = (0..n)
        .map(|v| d.out_neighbours(v) == d.in_neighbours(v))
        .collect();
    let x: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let y: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();

    let mut walk = Walk::new(&d, palette, alpha.to_vec());
    let mut bridges = Vec::new();
    if !x.is_empty() {
        let dx = d.induced(&x)?;
        let ug = dx.graph.underlying_graph();
        let undirected = recolourer.recolour(&ug, k, &dx.restrict(alpha), &dx.restrict(beta))?;
        // Replay the undirected walk to know each step's colour before and
        // after, then bridge it.
        let mut shadow = dx.restrict(alpha);
        for s in &undirected {
            if s.vertex >= x.len() || shadow[s.vertex] == s.colour || s.colour == 0 || s.colour > k
            {
                return Err(Error::internal(
                    "undirected recolourer returned an invalid step",
                ));
            }
            shadow[s.vertex] = s.colour;
            let before = walk.len();
            bridge(&d, &mut walk, x[s.vertex], s.colour)?;
            let cost = walk.len() - before;
            if cost > delta + 2 {
                return Err(Error::internal(format!(
                    "bridging a step cost {cost} > Δ + 2"
                )));
            }
            bridges.push(cost);
        }
        if shadow != dx.restrict(beta) {
            return Err(Error::internal(
                "undirected recolourer did not reach the target",
            ));
        }
    }

    let mut list_len = 0;
    if !y.is_empty() {
        let dy = d.induced(&y)?;
        let lists = ListAssignment::new(
            y.iter()
                .map(|&v| {
                    (1..=k)
                        .filter(|&c| !d.neighbours(v).iter().any(|&u| in_x[u] && beta[u] == c))
                        .collect()
                })
                .collect(),
        )?;
        check_preconditions(&dy.graph, &lists)?;
        let inner = list_steps(
            &dy.graph,
            &lists,
            &dy.restrict(walk.colours()),
            &dy.restrict(beta),
        )?;
        list_len = inner.len();
        walk.replay(&inner, |v| y[v])?;
    }

    let undirected_steps = bridges.len();
    let bound = (delta + 2) * undirected_steps + (y.len() + 3) * y.len();
    let seq = sequence(alpha, k, walk.into_steps(), bound, "brooks")?;
    // Steps were checked on the pruned digraph; both have the same
    // dicolourings, but check against the input anyway.
    verify_sequence(g, palette, &seq, beta).map_err(|f| Error::Internal(f.to_string()))?;
    Ok(BrooksReport {
        sequence: seq,
        bridges,
        undirected_steps,
        list_steps: list_len,
        removed_arcs,
        x,
        y,
    })
}

/// Drops simple arcs `uv` while `v` has no simple out-neighbour or `u` has
/// no simple in-neighbour: every cycle through such an arc has a digon.
fn prune(g: &Digraph) -> (Digraph, Vec<(usize, usize)>) {
    let mut d = g.clone();
    let mut removed = Vec::new();
    loop {
        let found = d.arcs().find(|&(u, v)| {
            !d.has_arc(v, u)
                && (d.simple_out(v).next().is_none() || d.simple_in(u).next().is_none())
        });
        match found {
            Some(a) => {
                d = d.without_arcs(&[a]);
                removed.push(a);
            }
            None => return (d, removed),
        }
    }
}

/// Recolours `v` (whose arcs are all digons) to `target`, moving vertices
/// outside the bidirected part as needed.
fn bridge(d: &Digraph, walk: &mut Walk<'_>, v: usize, target: usize) -> Result<()> {
    let c = walk.colour(v);
    if walk.can(v, target) {
        return walk.recolour(v, target);
    }
    for &u in d.out_neighbours(v) {
        if walk.colour(u) == target {
            if let Some(to) = walk.options(u).into_iter().next() {
                walk.recolour(u, to)?;
            }
        }
    }
    if walk.can(v, target) {
        return walk.recolour(v, target);
    }
    let blocked: Vec<usize> = d
        .out_neighbours(v)
        .iter()
        .copied()
        .filter(|&u| walk.colour(u) == target)
        .collect();
    let third = |walk: &Walk<'_>| {
        walk.options(v)
            .into_iter()
            .find(|&x| x != target)
            .ok_or_else(|| Error::internal(format!("vertex {v} has no third colour")))
    };
    match blocked.as_slice() {
        [] => Err(Error::internal(format!(
            "vertex {v} blocked without a neighbour of the target colour"
        ))),
        [y] => {
            let y = *y;
            let y_plus = d.simple_out(y).next().ok_or_else(|| {
                Error::internal(format!("vertex {y} has no simple out-neighbour"))
            })?;
            let c2 = walk.colour(y_plus);
            let witness = blocked_witness(d, walk.colours(), walk.palette(), y)?;
            let y_minus = witness
                .get(c2)
                .ok_or_else(|| {
                    Error::internal(format!(
                        "colour {c2} missing from the blocked structure of {y}"
                    ))
                })?
                .in_neighbour;
            let pivot = if !d.adjacent(v, y_plus) {
                Some(y_plus)
            } else if !d.adjacent(v, y_minus) {
                Some(y_minus)
            } else {
                None
            };
            match pivot {
                Some(p) => {
                    let to = walk.options(p).into_iter().next().ok_or_else(|| {
                        Error::internal(format!("vertex {p} on a monochromatic path is blocked"))
                    })?;
                    walk.recolour(p, to)?;
                    walk.recolour(y, c2)?;
                }
                None => {
                    let other = third(walk)?;
                    walk.recolour(v, other)?;
                    walk.recolour(y, c)?;
                }
            }
            walk.recolour(v, target)
        }
        many => {
            let other = third(walk)?;
            walk.recolour(v, other)?;
            for &s in many {
                walk.recolour(s, c)?;
            }
            walk.recolour(v, target)
        }
    }
}
