//! Certificates for `χ⃗(D) ≤ Δ_min(D)`: either such a dicolouring or a
//! subdigraph `K↔_r ⇒ K↔_s` with `r + s = Δ_min + 1` (a digon when
//! `Δ_min = 2`).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{members, BitGraph};
use crate::dicolouring::{
    colourable, find_dicritical_with_budget, Dicolouring, DEFAULT_NODE_BUDGET,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// The connected digraphs attaining `χ⃗ = Δ_max + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionClass {
    DirectedCycle,
    BidirectedOddCycle,
    BidirectedComplete,
    None,
}

/// Pattern match against the three obstruction families.
///
/// The single vertex counts as a bidirected complete graph and the digon as
/// a directed cycle; the bidirected triangle is an odd cycle.
pub fn classify_obstruction(g: &Digraph) -> Result<ObstructionClass> {
    let n = g.order();
    if n == 0 || !g.is_weakly_connected() {
        return Err(Error::precondition(
            "classification needs a non-empty connected digraph",
        ));
    }
    if n == 1 {
        return Ok(ObstructionClass::BidirectedComplete);
    }
    if (0..n).all(|v| g.out_degree(v) == 1 && g.in_degree(v) == 1) {
        // Connected and 1-diregular means a single directed cycle.
        return Ok(ObstructionClass::DirectedCycle);
    }
    if g.is_bidirected() {
        let ug = g.underlying_graph();
        if n >= 3 && n % 2 == 1 && (0..n).all(|v| ug.degree(v) == 2) {
            return Ok(ObstructionClass::BidirectedOddCycle);
        }
        if n >= 4 && (0..n).all(|v| ug.degree(v) == n - 1) {
            return Ok(ObstructionClass::BidirectedComplete);
        }
    }
    Ok(ObstructionClass::None)
}

/// A member of `F_Δ` inside a digraph, in its vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Digon(usize, usize),
    /// Every pair inside `r` and inside `s` is a digon and every arc from
    /// `r` to `s` is present.
    Join {
        r: Vec<usize>,
        s: Vec<usize>,
    },
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::Digon(u, v) => vec![*u, *v],
            Witness::Join { r, s } => r.iter().chain(s).copied().collect(),
        }
    }
}

/// Structural check that `w` is a copy of a member of `F_Δ` in `g`.
pub fn check_witness(g: &Digraph, w: &Witness, delta: usize) -> bool {
    let n = g.order();
    match w {
        Witness::Digon(u, v) => delta == 2 && u != v && *u < n && *v < n && g.is_digon(*u, *v),
        Witness::Join { r, s } => {
            if delta < 3 || r.len() + s.len() != delta + 1 {
                return false;
            }
            let mut all: Vec<usize> = r.iter().chain(s).copied().collect();
            all.sort_unstable();
            all.dedup();
            if all.len() != delta + 1 || all.iter().any(|&v| v >= n) {
                return false;
            }
            let clique = |part: &[usize]| {
                part.iter()
                    .all(|&a| part.iter().all(|&b| a == b || g.is_digon(a, b)))
            };
            clique(r) && clique(s) && r.iter().all(|&a| s.iter().all(|&b| g.has_arc(a, b)))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    /// A dicolouring with `k = Δ_min`.
    Colouring(Dicolouring),
    Witness(Witness),
}

/// Scans vertices in ascending order: `X` when `d⁺(v) ≤ Δ_min`, else `Y`.
/// Returns membership in `X`.
pub fn greedy_partition(g: &Digraph) -> Vec<bool> {
    let delta = g.delta_min();
    (0..g.order()).map(|v| g.out_degree(v) <= delta).collect()
}

/// `D̃`: arcs inside `X`, arcs inside `Y`, and every arc from `X` to `Y`
/// turned into a digon. Arcs from `Y` to `X` are dropped.
pub fn build_tilde(g: &Digraph, in_x: &[bool]) -> Result<Digraph> {
    let n = g.order();
    if in_x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: in_x.len(),
        });
    }
    let delta = g.delta_min();
    if let Some(v) = (0..n).find(|&v| {
        if in_x[v] {
            g.out_degree(v) > delta
        } else {
            g.in_degree(v) > delta
        }
    }) {
        return Err(Error::precondition(format!(
            "vertex {v} violates the degree condition of its side"
        )));
    }
    let mut arcs = Vec::new();
    for (u, v) in g.arcs() {
        match (in_x[u], in_x[v]) {
            (true, true) | (false, false) => arcs.push((u, v)),
            (true, false) => arcs.extend([(u, v), (v, u)]),
            (false, true) => {}
        }
    }
    Digraph::from_arcs_dedup(n, arcs)
}

pub fn brooks_certify(g: &Digraph) -> Result<CertifyOutcome> {
    brooks_certify_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Either a `Δ_min`-dicolouring or a member of `F_{Δ_min}`, following the
/// dicritical-subdigraph argument when no such colouring exists.
pub fn brooks_certify_with_budget(g: &Digraph, budget: u64) -> Result<CertifyOutcome> {
    let delta = g.delta_min();
    if delta < 2 {
        return Err(Error::precondition("certification needs Δ_min ≥ 2"));
    }
    if let Some(colours) = colourable(g, delta, budget)? {
        return Ok(CertifyOutcome::Colouring(Dicolouring::new(delta, colours)?));
    }
    let in_x = greedy_partition(g);
    let tilde = build_tilde(g, &in_x)?;
    let h = find_dicritical_with_budget(&tilde, delta + 1, budget)?;
    let hg = &h.graph;
    if (0..hg.order()).any(|v| hg.out_degree(v) != delta || hg.in_degree(v) != delta) {
        return Err(Error::internal(
            "dicritical subdigraph of the tilde graph is not diregular",
        ));
    }
    let class = classify_obstruction(hg)?;
    let witness = if delta == 2 {
        if class != ObstructionClass::BidirectedOddCycle {
            return Err(Error::internal(format!(
                "expected a bidirected odd cycle, found {class:?}"
            )));
        }
        let (a, b) = hg
            .arcs()
            .map(|(a, b)| (h.to_parent(a), h.to_parent(b)))
            .find(|&(a, b)| a < b && in_x[a] == in_x[b])
            .ok_or_else(|| {
                Error::internal("bidirected odd cycle split evenly between the sides")
            })?;
        Witness::Digon(a, b)
    } else {
        if class != ObstructionClass::BidirectedComplete || hg.order() != delta + 1 {
            return Err(Error::internal(format!(
                "expected a bidirected K{}, found {class:?}",
                delta + 1
            )));
        }
        let (r, s): (Vec<usize>, Vec<usize>) = h.vertices.iter().partition(|&&v| in_x[v]);
        canonical_join(g, r, s)
    };
    if !check_witness(g, &witness, delta) {
        return Err(Error::internal(
            "extracted witness fails the structural check",
        ));
    }
    Ok(CertifyOutcome::Witness(witness))
}

// A fully bidirected witness is reported with every vertex on the S side.
fn canonical_join(g: &Digraph, r: Vec<usize>, s: Vec<usize>) -> Witness {
    let mut all: Vec<usize> = r.iter().chain(&s).copied().collect();
    all.sort_unstable();
    let complete = all
        .iter()
        .all(|&a| all.iter().all(|&b| a == b || g.is_digon(a, b)));
    if complete {
        Witness::Join {
            r: Vec::new(),
            s: all,
        }
    } else {
        Witness::Join { r, s }
    }
}

/// Search for a member of `F_Δ` in `g`. `R` ranges over digon cliques of
/// each size in increasing order, then `S` over digon cliques dominated by
/// `R`. `budget` caps the number of search nodes.
pub fn find_fdelta(g: &Digraph, delta: usize, budget: u64) -> Result<Option<Witness>> {
    if delta < 2 {
        return Err(Error::precondition("F_Δ is defined for Δ ≥ 2"));
    }
    if delta == 2 {
        return Ok(g
            .arcs()
            .find(|&(u, v)| u < v && g.has_arc(v, u))
            .map(|(u, v)| Witness::Digon(u, v)));
    }
    let bits = BitGraph::new(g)?;
    let n = g.order();
    let digon: Vec<u64> = (0..n).map(|v| bits.out[v] & bits.inn[v]).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = CliqueSearch {
        digon: &digon,
        nodes: 0,
        budget,
    };
    for r in 0..=delta + 1 {
        let s = delta + 1 - r;
        let mut found = None;
        search.cliques(0, all, r, &mut |rs, search| {
            // Vertices outside R receiving an arc from every member of R.
            let mut dominated = all & !rs;
            for v in members(rs) {
                dominated &= bits.out[v];
            }
            let mut hit = None;
            search.cliques(0, dominated, s, &mut |ss, _| {
                hit = Some(ss);
                Ok(true)
            })?;
            if let Some(ss) = hit {
                found = Some((rs, ss));
                return Ok(true);
            }
            Ok(false)
        })?;
        if let Some((rs, ss)) = found {
            return Ok(Some(Witness::Join {
                r: members(rs),
                s: members(ss),
            }));
        }
    }
    Ok(None)
}

struct CliqueSearch<'a> {
    digon: &'a [u64],
    nodes: u64,
    budget: u64,
}

type Visit<'v, 'a> = dyn FnMut(u64, &mut CliqueSearch<'a>) -> Result<bool> + 'v;

impl<'a> CliqueSearch<'a> {
    // Calls `visit` on each `size`-clique (of the digon graph) drawn from
    // `candidates`, extending `chosen`; stops once `visit` returns true.
    fn cliques(
        &mut self,
        chosen: u64,
        candidates: u64,
        size: usize,
        visit: &mut Visit<'_, 'a>,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if size == 0 {
            return visit(chosen, self);
        }
        if (candidates.count_ones() as usize) < size {
            return Ok(false);
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.cliques(chosen | (1 << v), rest & self.digon[v], size - 1, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
