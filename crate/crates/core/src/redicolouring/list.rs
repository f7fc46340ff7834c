//! List redicolouring when every vertex has a simple in-arc and a simple
//! out-arc and `|L(v)| ≥ d_max(v) + 1`.
//!
//! Each phase fixes the lowest vertex `v` still differing from the target,
//! using at most `n + 3` steps and never moving another vertex away from its
//! target colour.

use alloc::format;
use alloc::vec::Vec;

use super::{check_endpoints, first_difference, sequence, RecolouringSequence, Step, Walk};
use crate::dicolouring::{blocked_witness, diff, ListAssignment, Palette};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// L-redicolouring sequence from `alpha` to `beta` of length at most
/// `(n + 3) · diff(α, β)`.
pub fn list_redicolour(
    g: &Digraph,
    lists: &ListAssignment,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RecolouringSequence> {
    check_preconditions(g, lists)?;
    let palette = Palette::Lists(lists);
    check_endpoints(g, palette, alpha, beta)?;
    let n = g.order();
    let bound = (n + 3) * diff(alpha, beta);
    let steps = list_steps(g, lists, alpha, beta)?;
    if steps.len() > bound {
        return Err(Error::internal("list sequence exceeds its bound"));
    }
    sequence(alpha, lists.max_colour(), steps, bound, "list")
}

pub(crate) fn check_preconditions(g: &Digraph, lists: &ListAssignment) -> Result<()> {
    if lists.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: lists.len(),
        });
    }
    for v in 0..g.order() {
        if g.simple_out(v).next().is_none() || g.simple_in(v).next().is_none() {
            return Err(Error::precondition(format!(
                "vertex {v} needs both a simple in-arc and a simple out-arc"
            )));
        }
        if lists.list(v).len() < g.d_max(v) + 1 {
            return Err(Error::precondition(format!(
                "list of vertex {v} is shorter than d_max + 1"
            )));
        }
    }
    Ok(())
}

pub(crate) fn list_steps(
    g: &Digraph,
    lists: &ListAssignment,
    alpha: &[usize],
    beta: &[usize],
) -> Result<Vec<Step>> {
    let n = g.order();
    let mut walk = Walk::new(g, Palette::Lists(lists), alpha.to_vec());
    while let Some(v) = first_difference(walk.colours(), beta) {
        let before = walk.len();
        fix_vertex(g, lists, &mut walk, beta, v)?;
        if walk.len() - before > n + 3 {
            return Err(Error::internal(format!(
                "phase for vertex {v} took more than n + 3 steps"
            )));
        }
    }
    Ok(walk.into_steps())
}

/// A valid colour for `u`, preferring its target.
fn pick(walk: &Walk<'_>, beta: &[usize], u: usize) -> Option<usize> {
    let opts = walk.options(u);
    if opts.contains(&beta[u]) {
        return Some(beta[u]);
    }
    opts.into_iter().next()
}

fn fix_vertex(
    g: &Digraph,
    lists: &ListAssignment,
    walk: &mut Walk<'_>,
    beta: &[usize],
    v: usize,
) -> Result<()> {
    let c = walk.colour(v);
    let target = beta[v];
    if walk.can(v, target) {
        return walk.recolour(v, target);
    }

    // Break every cycle of length at least 3 through v whose other vertices
    // all have the target colour.
    loop {
        let cur = walk.colours();
        let path = g
            .out_neighbours(v)
            .iter()
            .copied()
            .filter(|&w| cur[w] == target)
            .find_map(|w| {
                g.shortest_path_within(
                    &[w],
                    |x| x != w && g.has_arc(x, v),
                    |x| cur[x] == target && x != v,
                )
            });
        let Some(path) = path else { break };
        let w = *path
            .iter()
            .find(|&&u| beta[u] != target)
            .ok_or_else(|| Error::internal("target colouring has a monochromatic cycle"))?;
        let to = pick(walk, beta, w).ok_or_else(|| {
            Error::internal(format!("vertex {w} on a monochromatic arc is blocked"))
        })?;
        walk.recolour(w, to)?;
    }

    // Move digon-neighbours off the target colour where possible.
    loop {
        let movable = g
            .out_neighbours(v)
            .iter()
            .copied()
            .filter(|&u| g.has_arc(u, v) && walk.colour(u) == target)
            .find_map(|u| pick(walk, beta, u).map(|to| (u, to)));
        match movable {
            Some((u, to)) => walk.recolour(u, to)?,
            None => break,
        }
    }
    if walk.can(v, target) {
        return walk.recolour(v, target);
    }

    let blocking: Vec<usize> = g
        .out_neighbours(v)
        .iter()
        .copied()
        .filter(|&u| g.has_arc(u, v) && walk.colour(u) == target)
        .collect();
    match blocking.as_slice() {
        [] => Err(Error::internal(format!(
            "vertex {v} blocked without a blocking digon"
        ))),
        [w] => swap_with_single(g, lists, walk, v, *w, c, target),
        many => {
            // Two digon-neighbours share the target colour, so v is free to
            // move to some third colour.
            let third = walk
                .options(v)
                .into_iter()
                .find(|&x| x != target)
                .ok_or_else(|| Error::internal(format!("vertex {v} unexpectedly blocked")))?;
            walk.recolour(v, third)?;
            for &s in many {
                walk.recolour(s, c)?;
            }
            walk.recolour(v, target)
        }
    }
}

/// `v` (colour `c`) must take colour `target`, held by its single blocked
/// digon-neighbour `w`.
fn swap_with_single(
    g: &Digraph,
    lists: &ListAssignment,
    walk: &mut Walk<'_>,
    v: usize,
    w: usize,
    c: usize,
    target: usize,
) -> Result<()> {
    if let Some(other) = walk.options(v).into_iter().next() {
        walk.recolour(v, other)?;
        walk.recolour(w, c)?;
        return walk.recolour(v, target);
    }

    let w_plus = g
        .simple_out(w)
        .next()
        .ok_or_else(|| Error::internal(format!("vertex {w} has no simple out-neighbour")))?;
    let c2 = walk.colour(w_plus);
    let witness = blocked_witness(g, walk.colours(), Palette::Lists(lists), w)?;
    let w_minus = witness
        .get(c2)
        .ok_or_else(|| {
            Error::internal(format!(
                "colour {c2} missing from the blocked structure of {w}"
            ))
        })?
        .in_neighbour;

    if !g.has_arc(v, w_minus) {
        // Park w⁻ on a colour absent from its in-neighbourhood.
        let park = free_colour(lists, walk, w_minus, g.in_neighbours(w_minus), c)?;
        walk.recolour(w_minus, park)?;
        walk.recolour(w, c2)?;
        walk.recolour(v, target)?;
        walk.recolour(w, c)?;
        walk.recolour(w_minus, c2)
    } else if !g.has_arc(w_plus, v) {
        let park = free_colour(lists, walk, w_plus, g.out_neighbours(w_plus), c)?;
        walk.recolour(w_plus, park)?;
        walk.recolour(w, c2)?;
        walk.recolour(v, target)?;
        walk.recolour(w, c)?;
        walk.recolour(w_plus, c2)
    } else {
        Err(Error::internal(format!(
            "vertex {v} is adjacent to both {w_plus} and {w_minus} while blocked"
        )))
    }
}

/// A colour of `L(u)` other than its own that no vertex of `side` carries,
/// avoiding `dodge` when there is a choice.
fn free_colour(
    lists: &ListAssignment,
    walk: &Walk<'_>,
    u: usize,
    side: &[usize],
    dodge: usize,
) -> Result<usize> {
    let own = walk.colour(u);
    let free: Vec<usize> = lists
        .list(u)
        .iter()
        .copied()
        .filter(|&x| x != own && !side.iter().any(|&s| walk.colour(s) == x))
        .collect();
    free.iter()
        .copied()
        .find(|&x| x != dodge)
        .or_else(|| free.first().copied())
        .ok_or_else(|| Error::internal(format!("vertex {u} has no colour free on one side")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicolouring::is_valid_colours;
    use crate::redicolouring::verify_sequence;
    use alloc::vec;

    fn all_colourings(g: &Digraph, lists: &ListAssignment) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for v in 0..g.order() {
            out = out
                .into_iter()
                .flat_map(|p| {
                    lists.list(v).iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.retain(|c| is_valid_colours(g, c));
        out
    }

    #[test]
    fn triangle_example() {
        let c3 = Digraph::directed_cycle(3);
        let l = ListAssignment::uniform(3, 2);
        let s = list_redicolour(&c3, &l, &[1, 2, 1], &[2, 1, 1]).unwrap();
        assert!(s.len() <= 12);
        assert_eq!(
            verify_sequence(&c3, Palette::Lists(&l), &s, &[2, 1, 1]),
            Ok(())
        );
        assert!(list_redicolour(&c3, &l, &[1, 2, 1], &[1, 2, 1])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn all_pairs_with_digons() {
        // A directed 4-cycle with one digon chord: every vertex keeps a
        // simple in- and out-arc.
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 0)]).unwrap();
        let lists =
            ListAssignment::new((0..4).map(|v| (1..=g.d_max(v) + 1).collect()).collect()).unwrap();
        let all = all_colourings(&g, &lists);
        for a in &all {
            for b in &all {
                let s = list_redicolour(&g, &lists, a, b).unwrap();
                assert_eq!(verify_sequence(&g, Palette::Lists(&lists), &s, b), Ok(()));
                assert!(s.len() <= 7 * diff(a, b));
            }
        }
    }

    #[test]
    fn preconditions() {
        let p = Digraph::directed_path(3);
        let l = ListAssignment::uniform(3, 3);
        assert!(matches!(
            list_redicolour(&p, &l, &[1, 1, 1], &[1, 1, 1]),
            Err(Error::Precondition(_))
        ));
        let c3 = Digraph::directed_cycle(3);
        let short = ListAssignment::uniform(3, 1);
        assert!(matches!(
            list_redicolour(&c3, &short, &[1, 1, 1], &[1, 1, 1]),
            Err(Error::Precondition(_))
        ));
    }
}
