//! 2-redicolouring of a directed cycle in exactly `diff(α, β)` steps.

use super::{check_endpoints, first_difference, sequence, RecolouringSequence, Walk};
use crate::dicolouring::Palette;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub(crate) fn is_directed_cycle(g: &Digraph) -> bool {
    let n = g.order();
    n >= 2
        && (0..n).all(|v| g.out_degree(v) == 1 && g.in_degree(v) == 1)
        && g.strongly_connected_components().len() == 1
}

/// Walk from `alpha` to `beta` on a directed cycle of length at least 3.
///
/// The lowest differing vertex is recoloured if it can be; otherwise every
/// other vertex carries its target colour, and some vertex holding that
/// colour wrongly is moved instead.
pub fn recolour_cycle(g: &Digraph, alpha: &[usize], beta: &[usize]) -> Result<RecolouringSequence> {
    if g.order() < 3 || !is_directed_cycle(g) {
        return Err(Error::precondition(
            "input is not a directed cycle of length at least 3",
        ));
    }
    let palette = Palette::Colours(2);
    check_endpoints(g, palette, alpha, beta)?;
    let steps = cycle_steps(g, alpha, beta)?;
    sequence(alpha, 2, steps, g.order(), "cycle")
}

pub(crate) fn cycle_steps(
    g: &Digraph,
    alpha: &[usize],
    beta: &[usize],
) -> Result<alloc::vec::Vec<super::Step>> {
    let mut walk = Walk::new(g, Palette::Colours(2), alpha.to_vec());
    while let Some(v) = first_difference(walk.colours(), beta) {
        let want = beta[v];
        if walk.can(v, want) {
            walk.recolour(v, want)?;
            continue;
        }
        let sub = (0..g.order())
            .find(|&u| u != v && walk.colour(u) == want && beta[u] != want)
            .ok_or_else(|| Error::internal("target colouring is monochromatic on the cycle"))?;
        walk.recolour(sub, beta[sub])?;
    }
    Ok(walk.into_steps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicolouring::diff;
    use crate::redicolouring::verify_sequence;

    #[test]
    fn examples() {
        let c3 = Digraph::directed_cycle(3);
        assert!(recolour_cycle(&c3, &[1, 2, 1], &[1, 2, 1])
            .unwrap()
            .is_empty());
        let s = recolour_cycle(&c3, &[1, 2, 1], &[2, 1, 1]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(
            verify_sequence(&c3, Palette::Colours(2), &s, &[2, 1, 1]),
            Ok(())
        );

        let c4 = Digraph::directed_cycle(4);
        let s = recolour_cycle(&c4, &[1, 1, 2, 2], &[2, 2, 1, 1]).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(
            verify_sequence(&c4, Palette::Colours(2), &s, &[2, 2, 1, 1]),
            Ok(())
        );
    }

    #[test]
    fn length_is_diff_on_all_pairs() {
        for n in 3..=6 {
            let g = Digraph::directed_cycle(n);
            let all: alloc::vec::Vec<alloc::vec::Vec<usize>> = (0..1usize << n)
                .map(|b| (0..n).map(|i| 1 + ((b >> i) & 1)).collect())
                .filter(|c: &alloc::vec::Vec<usize>| {
                    c.contains(&1) && c.contains(&2)
                })
                .collect();
            for a in &all {
                for b in &all {
                    let s = recolour_cycle(&g, a, b).unwrap();
                    assert_eq!(s.len(), diff(a, b));
                    assert_eq!(verify_sequence(&g, Palette::Colours(2), &s, b), Ok(()));
                }
            }
        }
    }

    #[test]
    fn rejects_non_cycles() {
        let p = Digraph::directed_path(3);
        assert!(matches!(
            recolour_cycle(&p, &[1, 1, 1], &[1, 1, 1]),
            Err(Error::Precondition(_))
        ));
        let c3 = Digraph::directed_cycle(3);
        assert!(recolour_cycle(&c3, &[1, 1, 1], &[1, 2, 1]).is_err());
    }
}
