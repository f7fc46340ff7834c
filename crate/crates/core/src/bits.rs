//! Bitmask adjacency for exhaustive searches on digraphs with at most 64
//! vertices.

use alloc::vec::Vec;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub(crate) const MAX_VERTICES: usize = 64;

pub(crate) struct BitGraph {
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

impl BitGraph {
    pub fn new(g: &Digraph) -> Result<Self> {
        let n = g.order();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mask = |list: &[usize]| list.iter().fold(0u64, |m, &w| m | (1 << w));
        Ok(BitGraph {
            out: (0..n).map(|v| mask(g.out_neighbours(v))).collect(),
            inn: (0..n).map(|v| mask(g.in_neighbours(v))).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    /// Would adding `v` to the acyclic vertex set `class` create a directed
    /// cycle? `class` must not contain `v`.
    pub fn closes_cycle(&self, v: usize, class: u64) -> bool {
        let targets = self.inn[v] & class;
        if targets == 0 {
            return false;
        }
        let mut reach = self.out[v] & class;
        let mut frontier = reach;
        while frontier != 0 {
            if reach & targets != 0 {
                return true;
            }
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.out[u] & class & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        reach & targets != 0
    }
}

pub(crate) fn members(mut set: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(set.count_ones() as usize);
    while set != 0 {
        out.push(set.trailing_zeros() as usize);
        set &= set - 1;
    }
    out
}
