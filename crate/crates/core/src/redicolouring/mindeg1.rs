//! 2-redicolouring of oriented graphs with `Δ_min ≤ 1` in at most `n` steps.
//!
//! Strong components are handled separately. Inside one, the vertices split
//! into `X` (out-degree 1) and `Y` (in-degree 1). Unless the component is a
//! directed cycle, `X` spans in-trees and `Y` out-trees, and the arcs from
//! `X` to `Y` match the in-tree roots to the out-tree roots. Both endpoints
//! are first brought to agree on the matched pairs that need no swap, then
//! all leaves are unified, and finally the remaining pairs swap colours.

use alloc::vec;
use alloc::vec::Vec;

use super::cycle::{cycle_steps, is_directed_cycle};
use super::{check_endpoints, reverse_steps, sequence, RecolouringSequence, Step, Walk};
use crate::dicolouring::Palette;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// The vertex partition used on a strongly connected piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDeg1Partition {
    /// Vertices with out-degree 1 (ties included).
    pub x: Vec<usize>,
    /// The remaining vertices, all with in-degree 1.
    pub y: Vec<usize>,
    pub x_roots: Vec<usize>,
    pub y_roots: Vec<usize>,
    pub x_leaves: Vec<usize>,
    pub y_leaves: Vec<usize>,
    /// All arcs from `X` to `Y`, as `(x_root, y_root)`.
    pub matching: Vec<(usize, usize)>,
    /// Matched pairs with `α(x) = β(y) ≠ α(y) = β(x)`.
    pub swap_pairs: Vec<(usize, usize)>,
    /// The other matched pairs.
    pub other_pairs: Vec<(usize, usize)>,
}

fn side_has_cycle(g: &Digraph, in_x: &[bool], side: bool) -> bool {
    g.find_cycle_filtered(|u, v| in_x[u] == side && in_x[v] == side)
        .is_some()
}

impl MinDeg1Partition {
    /// Builds the partition of a strongly connected oriented graph with
    /// `Δ_min ≤ 1` whose two sides are acyclic.
    pub fn new(g: &Digraph, alpha: &[usize], beta: &[usize]) -> Result<Self> {
        let n = g.order();
        if n < 2 || g.strongly_connected_components().len() != 1 {
            return Err(Error::precondition(
                "partition needs a strongly connected digraph",
            ));
        }
        if !g.is_oriented() || g.delta_min() > 1 {
            return Err(Error::precondition(
                "partition needs an oriented graph with Δ_min ≤ 1",
            ));
        }
        let in_x: Vec<bool> = (0..n).map(|v| g.out_degree(v) == 1).collect();
        if side_has_cycle(g, &in_x, true) || side_has_cycle(g, &in_x, false) {
            return Err(Error::precondition(
                "one side of the partition contains a directed cycle",
            ));
        }
        let mut p = MinDeg1Partition {
            x: Vec::new(),
            y: Vec::new(),
            x_roots: Vec::new(),
            y_roots: Vec::new(),
            x_leaves: Vec::new(),
            y_leaves: Vec::new(),
            matching: Vec::new(),
            swap_pairs: Vec::new(),
            other_pairs: Vec::new(),
        };
        for v in 0..n {
            if in_x[v] {
                p.x.push(v);
                let w = g.out_neighbours(v)[0];
                if in_x[w] {
                    p.x_leaves.push(v);
                } else {
                    p.x_roots.push(v);
                    p.matching.push((v, w));
                }
            } else {
                p.y.push(v);
                if in_x[g.in_neighbours(v)[0]] {
                    p.y_roots.push(v);
                } else {
                    p.y_leaves.push(v);
                }
            }
        }
        for &(x, y) in &p.matching {
            if alpha[x] == beta[y] && alpha[y] == beta[x] && alpha[x] != alpha[y] {
                p.swap_pairs.push((x, y));
            } else {
                p.other_pairs.push((x, y));
            }
        }
        Ok(p)
    }

    /// Re-derives every structural claim about the partition from `g`.
    pub fn check(&self, g: &Digraph, alpha: &[usize], beta: &[usize]) -> bool {
        let n = g.order();
        let mut in_x = vec![None; n];
        for &v in &self.x {
            in_x[v] = Some(true);
        }
        for &v in &self.y {
            if in_x[v].is_some() {
                return false;
            }
            in_x[v] = Some(false);
        }
        if in_x.iter().any(Option::is_none) {
            return false;
        }
        let in_x: Vec<bool> = in_x.into_iter().map(|s| s == Some(true)).collect();
        if self.x.iter().any(|&v| g.out_degree(v) != 1)
            || self.y.iter().any(|&v| g.in_degree(v) != 1)
        {
            return false;
        }
        if side_has_cycle(g, &in_x, true) || side_has_cycle(g, &in_x, false) {
            return false;
        }
        // The X -> Y arcs are exactly the matching, and it pairs X_r with Y_r
        // perfectly.
        let mut cross: Vec<(usize, usize)> =
            g.arcs().filter(|&(u, v)| in_x[u] && !in_x[v]).collect();
        let mut m = self.matching.clone();
        cross.sort_unstable();
        m.sort_unstable();
        if cross != m || m.len() != self.x_roots.len() || m.len() != self.y_roots.len() {
            return false;
        }
        let mut xs: Vec<usize> = m.iter().map(|p| p.0).collect();
        let mut ys: Vec<usize> = m.iter().map(|p| p.1).collect();
        xs.sort_unstable();
        ys.sort_unstable();
        xs.dedup();
        ys.dedup();
        let mut xr = self.x_roots.clone();
        let mut yr = self.y_roots.clone();
        xr.sort_unstable();
        yr.sort_unstable();
        if xs != xr || ys != yr {
            return false;
        }
        // Roots are the only vertices leaving their side.
        let x_tree = self
            .x_leaves
            .iter()
            .all(|&v| in_x[g.out_neighbours(v)[0]] && !xr.contains(&v));
        let y_tree = self
            .y_leaves
            .iter()
            .all(|&v| !in_x[g.in_neighbours(v)[0]] && !yr.contains(&v));
        if !x_tree || !y_tree || self.x_leaves.len() + xr.len() != self.x.len() {
            return false;
        }
        if self.y_leaves.len() + yr.len() != self.y.len() {
            return false;
        }
        let swaps = |&(x, y): &(usize, usize)| {
            alpha[x] == beta[y] && alpha[y] == beta[x] && alpha[x] != alpha[y]
        };
        self.swap_pairs.iter().all(swaps)
            && !self.other_pairs.iter().any(swaps)
            && self.swap_pairs.len() + self.other_pairs.len() == m.len()
    }
}

/// Walk between two 2-dicolourings of an oriented graph with `Δ_min ≤ 1`,
/// of length at most `n`.
pub fn recolour_mindeg1(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RecolouringSequence> {
    if !g.is_oriented() {
        return Err(Error::precondition("digraph has a digon"));
    }
    if g.delta_min() > 1 {
        return Err(Error::precondition("Δ_min exceeds 1"));
    }
    check_endpoints(g, Palette::Colours(2), alpha, beta)?;
    let steps = mindeg1_steps(g, alpha, beta)?;
    if steps.len() > g.order() {
        return Err(Error::internal("sequence longer than the order"));
    }
    sequence(alpha, 2, steps, g.order(), "mindeg1")
}

pub(crate) fn mindeg1_steps(g: &Digraph, alpha: &[usize], beta: &[usize]) -> Result<Vec<Step>> {
    let mut walk = Walk::new(g, Palette::Colours(2), alpha.to_vec());
    for comp in g.strongly_connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(&comp)?;
        let a = sub.restrict(alpha);
        let b = sub.restrict(beta);
        let local = strong_steps(&sub.graph, &a, &b)?;
        walk.replay(&local, |v| sub.to_parent(v))?;
    }
    // What is left lies on no directed cycle.
    for v in 0..g.order() {
        if walk.colour(v) != beta[v] {
            walk.recolour(v, beta[v])?;
        }
    }
    Ok(walk.into_steps())
}

fn strong_steps(g: &Digraph, alpha: &[usize], beta: &[usize]) -> Result<Vec<Step>> {
    if alpha == beta {
        return Ok(Vec::new());
    }
    let in_x: Vec<bool> = (0..g.order()).map(|v| g.out_degree(v) == 1).collect();
    if side_has_cycle(g, &in_x, true) || side_has_cycle(g, &in_x, false) {
        // Nothing leaves a cycle of out-degree-1 vertices (dually for Y), so
        // strong connectivity makes the whole piece that cycle.
        if !is_directed_cycle(g) {
            return Err(Error::internal(
                "cycle inside one side is not the whole component",
            ));
        }
        return cycle_steps(g, alpha, beta);
    }
    let p = MinDeg1Partition::new(g, alpha, beta)?;
    let palette = Palette::Colours(2);
    let flip = |c: usize| 3 - c;

    let mut from_a = Walk::new(g, palette, alpha.to_vec());
    let mut from_b = Walk::new(g, palette, beta.to_vec());
    for &(x, y) in &p.other_pairs {
        let (ax, ay, bx, by) = (alpha[x], alpha[y], beta[x], beta[y]);
        if ax == ay {
            if bx == by {
                // Monochromatic on both sides: fix x on both, or x in α and
                // y in β when the two sides disagree.
                from_a.recolour(x, flip(ax))?;
                if bx == ax {
                    from_b.recolour(x, flip(bx))?;
                } else {
                    from_b.recolour(y, flip(by))?;
                }
            } else if bx == ax {
                from_a.recolour(y, flip(ay))?;
            } else {
                from_a.recolour(x, flip(ax))?;
            }
        } else if bx == by {
            if bx == ay {
                from_b.recolour(x, flip(bx))?;
            } else {
                from_b.recolour(y, flip(by))?;
            }
        }
        // ax != ay and bx != by: here ax == bx, nothing to do.
    }

    let leaves: Vec<usize> = p.x_leaves.iter().chain(&p.y_leaves).copied().collect();
    let count = |c: usize| {
        leaves
            .iter()
            .filter(|&&v| from_a.colour(v) == c && from_b.colour(v) == c)
            .count()
    };
    let leaf_colour = if count(1) <= count(2) { 2 } else { 1 };
    for &v in &leaves {
        for w in [&mut from_a, &mut from_b] {
            if w.colour(v) != leaf_colour {
                w.recolour(v, leaf_colour)?;
            }
        }
    }

    let a_end = from_a.colours().to_vec();
    let b_end = from_b.colours().to_vec();
    let mut middle = Walk::new(g, palette, a_end);
    for &(x, y) in &p.swap_pairs {
        let (first, second) = if middle.colour(x) == leaf_colour {
            (x, y)
        } else {
            (y, x)
        };
        middle.recolour(first, flip(leaf_colour))?;
        middle.recolour(second, leaf_colour)?;
    }
    if middle.colours() != b_end.as_slice() {
        return Err(Error::internal("swap phase did not reach the β side"));
    }

    let mut steps = from_a.into_steps();
    steps.extend(middle.into_steps());
    steps.extend(reverse_steps(beta, &from_b.into_steps()));
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicolouring::is_valid_colours;
    use crate::redicolouring::verify_sequence;

    fn two_colourings(g: &Digraph) -> Vec<Vec<usize>> {
        let n = g.order();
        (0..1usize << n)
            .map(|b| (0..n).map(|i| 1 + ((b >> i) & 1)).collect::<Vec<_>>())
            .filter(|c| is_valid_colours(g, c))
            .collect()
    }

    // A strongly connected oriented graph with Δ_min = 1 that is not a
    // cycle: paths 0 -> 1 -> 2 and 0 -> 3 -> 2 closed by 2 -> 0.
    fn theta() -> Digraph {
        Digraph::from_arcs(4, [(0, 1), (1, 2), (0, 3), (3, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn mirror_takes_exactly_n() {
        let c3 = Digraph::directed_cycle(3);
        let s = recolour_mindeg1(&c3, &[1, 2, 1], &[2, 1, 2]).unwrap();
        assert_eq!(s.len(), 3);
        let g = theta();
        for a in two_colourings(&g) {
            let m: Vec<usize> = a.iter().map(|&c| 3 - c).collect();
            assert_eq!(recolour_mindeg1(&g, &a, &m).unwrap().len(), 4);
        }
    }

    #[test]
    fn all_pairs_on_small_graphs() {
        let graphs = [
            theta(),
            Digraph::directed_cycle(4),
            Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
            // 0 -> 1 -> 2 -> 0 with a detour 1 -> 3 -> 4 -> 2
            Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 2)]).unwrap(),
        ];
        for g in &graphs {
            assert!(g.delta_min() <= 1);
            let all = two_colourings(g);
            for a in &all {
                for b in &all {
                    let s = recolour_mindeg1(g, a, b).unwrap();
                    assert!(s.len() <= g.order());
                    assert_eq!(verify_sequence(g, Palette::Colours(2), &s, b), Ok(()));
                }
            }
        }
    }

    #[test]
    fn partition_invariants() {
        let g = theta();
        for a in two_colourings(&g) {
            for b in two_colourings(&g) {
                let p = MinDeg1Partition::new(&g, &a, &b).unwrap();
                assert!(p.check(&g, &a, &b));
                assert_eq!(p.x.len() + p.y.len(), 4);
            }
        }
        let c3 = Digraph::directed_cycle(3);
        assert!(MinDeg1Partition::new(&c3, &[1, 2, 1], &[1, 2, 1]).is_err());
    }

    #[test]
    fn preconditions() {
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            recolour_mindeg1(&digon, &[1, 2], &[1, 2]),
            Err(Error::Precondition(_))
        ));
        let t5 = Digraph::from_arcs(5, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, (i + 2) % 5)]))
            .unwrap();
        let c = [1, 1, 2, 2, 2];
        assert!(matches!(
            recolour_mindeg1(&t5, &c, &c),
            Err(Error::Precondition(_))
        ));
    }
}
