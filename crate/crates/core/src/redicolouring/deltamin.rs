//! Redicolouring of oriented graphs with `Δ_min = Δ` and `k ≥ Δ + 1` in at
//! most `2Δn` steps, by induction on `Δ`.
//!
//! Both endpoints are walked to a common `(k-1)`-dicolouring `γ`. The walk
//! from `α` costs at most `2n`; the walk from `β` parks as many vertices as
//! possible on colour `k` and recurses on the rest with one colour less.

use alloc::vec::Vec;

use super::mindeg1::mindeg1_steps;
use super::{check_endpoints, reverse_steps, sequence, RecolouringSequence, Step, Walk};
use crate::certify::{brooks_certify, CertifyOutcome};
use crate::dicolouring::{greedy_dicolouring, Palette};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn recolour_deltamin(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
    k: usize,
) -> Result<RecolouringSequence> {
    if !g.is_oriented() {
        return Err(Error::precondition("input must be an oriented graph"));
    }
    let delta = g.delta_min();
    if delta == 0 {
        return Err(Error::precondition("Δ_min must be at least 1"));
    }
    if k < delta + 1 {
        return Err(Error::precondition("k must be at least Δ_min + 1"));
    }
    check_endpoints(g, Palette::Colours(k), alpha, beta)?;
    let bound = 2 * delta * g.order();
    let steps = solve(g, alpha, beta, k, delta)?;
    if steps.len() > bound {
        return Err(Error::internal("deltamin sequence exceeds 2Δn"));
    }
    sequence(alpha, k, steps, bound, "deltamin")
}

/// Steps from `alpha` to `beta` in the k-dicolouring graph of `g`, given
/// `Δ_min(g) ≤ delta < k`.
fn solve(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
    k: usize,
    delta: usize,
) -> Result<Vec<Step>> {
    if alpha == beta {
        return Ok(Vec::new());
    }
    let (there, back) = if delta <= 1 {
        let gamma = greedy_dicolouring(g).into_colours();
        (
            to_two_colours(g, alpha, &gamma, k)?,
            to_two_colours(g, beta, &gamma, k)?,
        )
    } else {
        let (there, gamma) = drop_top_colour(g, alpha, k)?;
        (there, from_beta(g, beta, &gamma, k, delta)?)
    };
    let mut steps = there;
    steps.extend(reverse_steps(beta, &back));
    Ok(steps)
}

/// At most `n` steps from `alpha` to the 2-dicolouring `gamma` when
/// `Δ_min(g) ≤ 1`.
fn to_two_colours(g: &Digraph, alpha: &[usize], gamma: &[usize], k: usize) -> Result<Vec<Step>> {
    let mut walk = Walk::new(g, Palette::Colours(k), alpha.to_vec());
    let h = g.induced_by(|v| alpha[v] <= 2);
    let inner = mindeg1_steps(&h.graph, &h.restrict(alpha), &h.restrict(gamma))?;
    walk.replay(&inner, |v| h.to_parent(v))?;
    for v in 0..g.order() {
        if walk.colour(v) != gamma[v] {
            walk.recolour(v, gamma[v])?;
        }
    }
    Ok(walk.into_steps())
}

/// Moves vertices whose colour satisfies `movable` to the first valid colour
/// of `targets` until nothing moves.
fn saturate(
    walk: &mut Walk<'_>,
    n: usize,
    movable: impl Fn(usize) -> bool,
    targets: &[usize],
) -> Result<()> {
    loop {
        let mut moved = false;
        for v in 0..n {
            if !movable(walk.colour(v)) {
                continue;
            }
            if let Some(&c) = targets
                .iter()
                .find(|&&c| c != walk.colour(v) && walk.can(v, c))
            {
                walk.recolour(v, c)?;
                moved = true;
            }
        }
        if !moved {
            return Ok(());
        }
    }
}

/// At most `2n` steps from `alpha` to a dicolouring avoiding colour `k`.
fn drop_top_colour(g: &Digraph, alpha: &[usize], k: usize) -> Result<(Vec<Step>, Vec<usize>)> {
    let n = g.order();
    let mut walk = Walk::new(g, Palette::Colours(k), alpha.to_vec());
    let middle: Vec<usize> = (3..k).collect();
    saturate(&mut walk, n, |c| c <= 2 || c == k, &middle)?;

    let h = g.induced_by(|v| !middle.contains(&walk.colour(v)));
    let gamma_h = two_colouring(&h.graph)?;

    saturate(&mut walk, n, |c| c <= 2, &[k])?;
    // Only vertices of H carry colours 1, 2 and k.
    let hat = g.induced_by(|v| walk.colour(v) <= 2);
    let gamma_of = |v: usize| h.vertices.binary_search(&v).ok().map(|i| gamma_h[i]);
    let target_hat: Vec<usize> = hat
        .vertices
        .iter()
        .map(|&v| gamma_of(v).ok_or_else(|| Error::internal("vertex coloured 1 or 2 outside H")))
        .collect::<Result<_>>()?;
    let inner = mindeg1_steps(&hat.graph, &hat.restrict(walk.colours()), &target_hat)?;
    walk.replay(&inner, |v| hat.to_parent(v))?;

    for v in 0..n {
        if walk.colour(v) == k {
            let c = gamma_of(v).ok_or_else(|| Error::internal("vertex coloured k outside H"))?;
            walk.recolour(v, c)?;
        }
    }
    let gamma = walk.colours().to_vec();
    Ok((walk.into_steps(), gamma))
}

/// A 2-dicolouring of an oriented graph with `Δ_min ≤ 2`.
fn two_colouring(h: &Digraph) -> Result<Vec<usize>> {
    match h.delta_min() {
        0 | 1 => Ok(greedy_dicolouring(h).into_colours()),
        2 => match brooks_certify(h)? {
            CertifyOutcome::Colouring(c) => Ok(c.into_colours()),
            CertifyOutcome::Witness(_) => Err(Error::internal(
                "oriented graph certified as an obstruction",
            )),
        },
        d => Err(Error::internal(alloc::format!(
            "remaining subgraph has Δ_min {d} > 2"
        ))),
    }
}

/// Steps from `beta` to `gamma` (which avoids colour `k`) of length at most
/// `2(delta - 1)n`.
fn from_beta(
    g: &Digraph,
    beta: &[usize],
    gamma: &[usize],
    k: usize,
    delta: usize,
) -> Result<Vec<Step>> {
    let n = g.order();
    let mut walk = Walk::new(g, Palette::Colours(k), beta.to_vec());
    saturate(&mut walk, n, |c| c != k, &[k])?;

    let j = g.induced_by(|v| walk.colour(v) != k);
    let inner = solve(
        &j.graph,
        &j.restrict(walk.colours()),
        &j.restrict(gamma),
        k - 1,
        delta - 1,
    )?;
    walk.replay(&inner, |v| j.to_parent(v))?;
    for v in 0..n {
        if walk.colour(v) == k {
            walk.recolour(v, gamma[v])?;
        }
    }
    Ok(walk.into_steps())
}
