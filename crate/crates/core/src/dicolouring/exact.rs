//! Exact dichromatic number by backtracking over colour classes.

use alloc::vec;
use alloc::vec::Vec;

use super::Dicolouring;
use crate::bits::BitGraph;
use crate::digraph::{Digraph, Induced};
use crate::error::{Error, Result};

/// Search nodes allowed per [`colourable`] call unless stated otherwise.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

struct Search<'a> {
    g: &'a BitGraph,
    k: usize,
    classes: Vec<u64>,
    colours: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    // Vertices are coloured in index order; a colour may be opened only as
    // the next unused one, so vertex 0 always gets colour 1.
    fn extend(&mut self, v: usize, used: usize) -> Result<bool> {
        if v == self.g.order() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        for c in 0..(used + 1).min(self.k) {
            if self.g.closes_cycle(v, self.classes[c]) {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colours[v] = c + 1;
            if self.extend(v + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.classes[c] &= !(1 << v);
        }
        Ok(false)
    }
}

/// A `k`-dicolouring of `g` if one exists.
pub fn colourable(g: &Digraph, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    let bits = BitGraph::new(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Search {
        g: &bits,
        k,
        classes: vec![0; k],
        colours: vec![0; n],
        nodes: 0,
        budget,
    };
    Ok(if s.extend(0, 0)? {
        Some(s.colours)
    } else {
        None
    })
}

/// `χ⃗(g)` together with an optimal dicolouring.
pub fn exact_chi(g: &Digraph) -> Result<(usize, Dicolouring)> {
    exact_chi_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn exact_chi_with_budget(g: &Digraph, budget: u64) -> Result<(usize, Dicolouring)> {
    if g.order() == 0 {
        return Ok((0, Dicolouring::new(0, Vec::new())?));
    }
    for k in 1.. {
        if let Some(colours) = colourable(g, k, budget)? {
            return Ok((k, Dicolouring::new(k, colours)?));
        }
    }
    unreachable!("n colours always suffice")
}

fn chi_at_least(g: &Digraph, k: usize, budget: u64) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    Ok(colourable(g, k - 1, budget)?.is_none())
}

/// A `k`-dicritical induced subdigraph of `g`.
///
/// Vertices are scanned once in ascending order and dropped whenever the
/// rest still needs `k` colours. One pass is enough: a kept vertex stays
/// critical when further vertices are removed.
pub fn find_dicritical(g: &Digraph, k: usize) -> Result<Induced> {
    find_dicritical_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn find_dicritical_with_budget(g: &Digraph, k: usize, budget: u64) -> Result<Induced> {
    if !chi_at_least(g, k, budget)? {
        let (chi, _) = exact_chi_with_budget(g, budget)?;
        return Err(Error::ChiBelow { chi, k });
    }
    let mut keep: Vec<usize> = (0..g.order()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut without = keep.clone();
        without.remove(i);
        let sub = g.induced(&without)?;
        if chi_at_least(&sub.graph, k, budget)? {
            keep = without;
        } else {
            i += 1;
        }
    }
    g.induced(&keep)
}
