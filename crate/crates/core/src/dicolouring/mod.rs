//! Dicolourings: colourings whose colour classes induce acyclic subdigraphs.
//!
//! Colours are the integers `1..=k`. Everything here works on plain colour
//! slices; [`Dicolouring`] bundles a slice with its palette size.

mod blocked;
mod exact;

use alloc::vec;
use alloc::vec::Vec;

pub use blocked::{blocked_witness, BlockedColour, BlockedWitness};
pub use exact::{
    colourable, exact_chi, exact_chi_with_budget, find_dicritical, find_dicritical_with_budget,
    DEFAULT_NODE_BUDGET,
};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A total colour assignment `vertex -> 1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dicolouring {
    k: usize,
    colours: Vec<usize>,
}

impl Dicolouring {
    /// Checks the range `1..=k`; acyclicity is checked separately by
    /// [`is_valid`].
    pub fn new(k: usize, colours: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k)
        {
            return Err(Error::ColourOutOfRange { vertex, colour });
        }
        Ok(Dicolouring { k, colours })
    }

    /// Palette size is the largest colour used (1 for an empty colouring).
    pub fn from_colours(colours: Vec<usize>) -> Result<Self> {
        let k = colours.iter().copied().max().unwrap_or(1).max(1);
        Dicolouring::new(k, colours)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn into_colours(self) -> Vec<usize> {
        self.colours
    }

    /// Same colours, different palette size.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Dicolouring::new(k, self.colours.clone())
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colours.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }
}

/// Per-vertex admissible colour sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; colour 0 is rejected.
    pub fn new(mut lists: Vec<Vec<usize>>) -> Result<Self> {
        for (vertex, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.first() == Some(&0) {
                return Err(Error::ColourOutOfRange { vertex, colour: 0 });
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `{1, .., k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn contains(&self, v: usize, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Largest colour appearing in any list.
    pub fn max_colour(&self) -> usize {
        self.lists
            .iter()
            .filter_map(|l| l.last())
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }
}

/// The colours a vertex may take: either `1..=k` everywhere or a list
/// assignment.
#[derive(Debug, Clone, Copy)]
pub enum Palette<'a> {
    Colours(usize),
    Lists(&'a ListAssignment),
}

impl Palette<'_> {
    pub fn contains(&self, v: usize, c: usize) -> bool {
        match self {
            Palette::Colours(k) => (1..=*k).contains(&c),
            Palette::Lists(l) => l.contains(v, c),
        }
    }

    pub fn size(&self, v: usize) -> usize {
        match self {
            Palette::Colours(k) => *k,
            Palette::Lists(l) => l.list(v).len(),
        }
    }

    /// Allowed colours of `v`, ascending.
    pub fn colours(&self, v: usize) -> Vec<usize> {
        match self {
            Palette::Colours(k) => (1..=*k).collect(),
            Palette::Lists(l) => l.list(v).to_vec(),
        }
    }

    /// Checks that `colours` has one in-palette entry per vertex.
    pub fn check(&self, n: usize, colours: &[usize]) -> Result<()> {
        if colours.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: colours.len(),
            });
        }
        if let Palette::Lists(l) = self {
            if l.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: l.len(),
                });
            }
        }
        match colours
            .iter()
            .enumerate()
            .find(|&(v, &c)| !self.contains(v, c))
        {
            Some((vertex, &colour)) => Err(Error::ColourOutOfRange { vertex, colour }),
            None => Ok(()),
        }
    }
}

/// A directed cycle all of whose vertices share a colour, if any.
pub fn monochromatic_cycle(g: &Digraph, colours: &[usize]) -> Option<Vec<usize>> {
    g.find_cycle_filtered(|u, v| colours[u] == colours[v])
}

/// Every colour class induces an acyclic subdigraph.
pub fn is_valid(g: &Digraph, c: &Dicolouring) -> bool {
    c.len() == g.order() && monochromatic_cycle(g, c.colours()).is_none()
}

/// Like [`is_valid`] but on a raw colour slice.
pub fn is_valid_colours(g: &Digraph, colours: &[usize]) -> bool {
    colours.len() == g.order() && monochromatic_cycle(g, colours).is_none()
}

/// Given a valid colouring, finds the colour-`c` path `w ..= u` that would
/// close a monochromatic cycle `v -> w ~> u -> v` if `v` were recoloured
/// `c`. `None` means the recolouring is valid.
pub fn recolour_conflict(g: &Digraph, colours: &[usize], v: usize, c: usize) -> Option<Vec<usize>> {
    if colours[v] == c {
        return None;
    }
    let sources: Vec<usize> = g
        .out_neighbours(v)
        .iter()
        .copied()
        .filter(|&w| colours[w] == c)
        .collect();
    if sources.is_empty() || !g.in_neighbours(v).iter().any(|&u| colours[u] == c) {
        return None;
    }
    g.shortest_path_within(&sources, |x| g.has_arc(x, v), |x| colours[x] == c && x != v)
}

/// Whether recolouring `v` to `c` keeps the (valid) colouring valid.
pub fn can_recolour(g: &Digraph, colours: &[usize], v: usize, c: usize) -> bool {
    colours[v] != c && recolour_conflict(g, colours, v, c).is_none()
}

/// Colours `c' != c(v)` within `palette` that `v` can move to.
pub fn recolour_options_in(
    g: &Digraph,
    colours: &[usize],
    palette: Palette<'_>,
    v: usize,
) -> Vec<usize> {
    palette
        .colours(v)
        .into_iter()
        .filter(|&c| c != colours[v] && can_recolour(g, colours, v, c))
        .collect()
}

/// Colours in `1..=k` other than `c(v)` that keep `c` a dicolouring.
pub fn recolour_options(g: &Digraph, c: &Dicolouring, v: usize) -> Vec<usize> {
    recolour_options_in(g, c.colours(), Palette::Colours(c.k()), v)
}

pub fn is_blocked(g: &Digraph, colours: &[usize], palette: Palette<'_>, v: usize) -> bool {
    palette
        .colours(v)
        .into_iter()
        .all(|c| c == colours[v] || !can_recolour(g, colours, v, c))
}

/// Every vertex is blocked: the colouring is isolated in the colouring graph.
pub fn is_frozen(g: &Digraph, c: &Dicolouring) -> bool {
    (0..g.order()).all(|v| is_blocked(g, c.colours(), Palette::Colours(c.k()), v))
}

/// Dicolouring with at most `Δ_min + 1` colours.
///
/// Vertices are inserted in reverse input order. A vertex with few enough
/// out-arcs takes a colour missing from its coloured out-neighbours,
/// otherwise one missing from its coloured in-neighbours; either way it ends
/// up on no monochromatic cycle.
pub fn greedy_dicolouring(g: &Digraph) -> Dicolouring {
    let n = g.order();
    let dmin = g.delta_min();
    let k = dmin + 1;
    let mut colours = vec![0usize; n];
    for v in (0..n).rev() {
        let side = if g.out_degree(v) <= dmin {
            g.out_neighbours(v)
        } else {
            g.in_neighbours(v)
        };
        let mut taken = vec![false; k + 1];
        for &w in side {
            taken[colours[w]] = true;
        }
        colours[v] = (1..=k)
            .find(|&c| !taken[c])
            .expect("side has at most Δ_min coloured neighbours");
    }
    Dicolouring { k, colours }
}

/// A list dicolouring chosen greedily: each vertex avoids the colours of its
/// already coloured out-neighbours. Succeeds whenever `|L(v)| > d⁺(v)`.
pub fn greedy_list_dicolouring(g: &Digraph, lists: &ListAssignment) -> Result<Vec<usize>> {
    let n = g.order();
    if lists.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: lists.len(),
        });
    }
    let mut colours = vec![0usize; n];
    for v in 0..n {
        let pick = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| !g.out_neighbours(v).iter().any(|&w| colours[w] == c));
        match pick {
            Some(c) => colours[v] = c,
            None => {
                return Err(Error::precondition(
                    "list too small for a greedy list dicolouring",
                ))
            }
        }
    }
    Ok(colours)
}

/// Number of vertices on which two colourings differ.
pub fn diff(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(k: usize, c: &[usize]) -> Dicolouring {
        Dicolouring::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn validity_examples() {
        let c3 = Digraph::directed_cycle(3);
        assert!(is_valid(&c3, &dc(2, &[1, 2, 1])));
        let mono = dc(1, &[1, 1, 1]);
        assert!(!is_valid(&c3, &mono));
        let mut w = monochromatic_cycle(&c3, mono.colours()).unwrap();
        w.sort();
        assert_eq!(w, vec![0, 1, 2]);
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(!is_valid(&digon, &dc(1, &[1, 1])));
    }

    #[test]
    fn colour_range_is_checked() {
        assert_eq!(
            Dicolouring::new(2, vec![1, 3]),
            Err(Error::ColourOutOfRange {
                vertex: 1,
                colour: 3
            })
        );
        assert!(Dicolouring::new(2, vec![0]).is_err());
    }

    #[test]
    fn greedy_examples() {
        let c3 = Digraph::directed_cycle(3);
        let g = greedy_dicolouring(&c3);
        assert_eq!(g.k(), 2);
        assert!(is_valid(&c3, &g));

        let k4 = Digraph::bidirected_complete(4);
        let g = greedy_dicolouring(&k4);
        assert_eq!(g.k(), 4);
        let mut cs = g.colours().to_vec();
        cs.sort();
        assert_eq!(cs, vec![1, 2, 3, 4]);

        let c5 = Digraph::bidirected_cycle(5);
        let g = greedy_dicolouring(&c5);
        assert_eq!(g.k(), 3);
        assert!(is_valid(&c5, &g));
    }

    #[test]
    fn recolour_options_examples() {
        let c3 = Digraph::directed_cycle(3);
        assert_eq!(recolour_options(&c3, &dc(2, &[1, 2, 1]), 0), vec![2]);
        let k4 = Digraph::bidirected_complete(4);
        let rainbow = dc(4, &[1, 2, 3, 4]);
        for v in 0..4 {
            assert!(recolour_options(&k4, &rainbow, v).is_empty());
        }
        assert!(is_frozen(&k4, &rainbow));
        let single = Digraph::new(1);
        assert_eq!(recolour_options(&single, &dc(3, &[2]), 0), vec![1, 3]);
    }

    #[test]
    fn directed_triangle_is_never_frozen_with_two_colours() {
        let c3 = Digraph::directed_cycle(3);
        for bits in 0..8usize {
            let c: Vec<usize> = (0..3).map(|i| 1 + ((bits >> i) & 1)).collect();
            let c = dc(2, &c);
            if is_valid(&c3, &c) {
                assert!(!is_frozen(&c3, &c));
            }
        }
    }

    #[test]
    fn conflict_path_closes_cycle() {
        let c4 = Digraph::directed_cycle(4);
        let colours = [1, 2, 2, 2];
        let p = recolour_conflict(&c4, &colours, 0, 2).unwrap();
        assert_eq!(p, vec![1, 2, 3]);
        assert!(recolour_conflict(&c4, &[1, 2, 1, 2], 0, 2).is_none());
    }

    #[test]
    fn greedy_list_respects_lists() {
        let c3 = Digraph::directed_cycle(3);
        let l = ListAssignment::new(vec![vec![2, 5], vec![5, 7], vec![5, 2]]).unwrap();
        let c = greedy_list_dicolouring(&c3, &l).unwrap();
        assert!(is_valid_colours(&c3, &c));
        assert!(Palette::Lists(&l).check(3, &c).is_ok());
    }
}
