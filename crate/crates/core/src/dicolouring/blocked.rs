//! Structure around a blocked vertex when the palette is large.
//!
//! If `|L(u)| >= d_max(u) + 1` and `u` cannot change colour, then for every
//! other colour `c` in its list, `u` has exactly one out-neighbour and one
//! in-neighbour coloured `c`, joined by a monochromatic path when distinct.
//! In particular `u` touches no monochromatic arc.

use alloc::format;
use alloc::vec::Vec;

use super::{is_blocked, Palette};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedColour {
    pub colour: usize,
    /// The unique out-neighbour coloured `colour`.
    pub out_neighbour: usize,
    /// The unique in-neighbour coloured `colour`.
    pub in_neighbour: usize,
    /// Monochromatic path from `out_neighbour` to `in_neighbour`; a single
    /// vertex when they coincide.
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedWitness {
    pub vertex: usize,
    pub per_colour: Vec<BlockedColour>,
}

impl BlockedWitness {
    pub fn get(&self, colour: usize) -> Option<&BlockedColour> {
        self.per_colour.iter().find(|b| b.colour == colour)
    }
}

/// Extracts the forced neighbourhood structure of a blocked vertex `v`.
pub fn blocked_witness(
    g: &Digraph,
    colours: &[usize],
    palette: Palette<'_>,
    v: usize,
) -> Result<BlockedWitness> {
    if palette.size(v) < g.d_max(v) + 1 {
        return Err(Error::precondition(format!(
            "vertex {v} has {} admissible colours, needs d_max + 1 = {}",
            palette.size(v),
            g.d_max(v) + 1
        )));
    }
    if !is_blocked(g, colours, palette, v) {
        return Err(Error::NotBlocked(v));
    }
    let own = colours[v];
    let touches_mono = g
        .out_neighbours(v)
        .iter()
        .chain(g.in_neighbours(v))
        .any(|&w| colours[w] == own);
    if touches_mono {
        return Err(Error::internal(format!(
            "blocked vertex {v} touches a monochromatic arc"
        )));
    }
    let mut per_colour = Vec::new();
    for c in palette.colours(v) {
        if c == own {
            continue;
        }
        let unique = |list: &[usize]| -> Result<usize> {
            let mut it = list.iter().copied().filter(|&w| colours[w] == c);
            match (it.next(), it.next()) {
                (Some(w), None) => Ok(w),
                _ => Err(Error::internal(format!(
                    "blocked vertex {v} does not have exactly one neighbour per side in colour {c}"
                ))),
            }
        };
        let out_neighbour = unique(g.out_neighbours(v))?;
        let in_neighbour = unique(g.in_neighbours(v))?;
        let path = g
            .shortest_path_within(&[out_neighbour], |x| x == in_neighbour, |x| colours[x] == c)
            .ok_or_else(|| {
                Error::internal(format!("no colour-{c} path closing the cycle at {v}"))
            })?;
        per_colour.push(BlockedColour {
            colour: c,
            out_neighbour,
            in_neighbour,
            path,
        });
    }
    Ok(BlockedWitness {
        vertex: v,
        per_colour,
    })
}
