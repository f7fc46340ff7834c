//! Redicolouring sequences: walks in the k-dicolouring graph where each step
//! changes the colour of one vertex and every intermediate colouring is a
//! dicolouring.

mod brooks;
mod cycle;
mod deltamin;
mod list;
mod mindeg1;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use brooks::{
    recolour_brooks, recolour_brooks_with, BfsRecolourer, BrooksReport, UndirectedRecolourer,
};
pub use cycle::recolour_cycle;
pub use deltamin::recolour_deltamin;
pub use list::list_redicolour;
pub use mindeg1::{recolour_mindeg1, MinDeg1Partition};

use crate::dicolouring::{
    can_recolour, is_valid_colours, recolour_options_in, Dicolouring, Palette,
};
use crate::digraph::Digraph;
use crate::error::{Endpoint, Error, Result};

/// Recolour `vertex` to `colour`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub vertex: usize,
    pub colour: usize,
}

impl Step {
    pub fn new(vertex: usize, colour: usize) -> Self {
        Step { vertex, colour }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolouringSequence {
    pub start: Dicolouring,
    pub steps: Vec<Step>,
    /// Length the producing algorithm guarantees for this instance.
    pub bound: usize,
    pub algorithm: String,
}

impl RecolouringSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The colouring reached after the last step.
    pub fn final_colours(&self) -> Vec<usize> {
        let mut c = self.start.colours().to_vec();
        for s in &self.steps {
            if s.vertex < c.len() {
                c[s.vertex] = s.colour;
            }
        }
        c
    }

    /// All colourings along the walk, start included.
    pub fn colourings(&self) -> Vec<Vec<usize>> {
        let mut cur = self.start.colours().to_vec();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(cur.clone());
        for s in &self.steps {
            cur[s.vertex] = s.colour;
            out.push(cur.clone());
        }
        out
    }
}

/// Why [`verify_sequence`] rejected a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultKind {
    InvalidStart,
    VertexOutOfRange,
    /// The step does not change the colour.
    NoChange,
    OutOfPalette,
    /// The step creates a monochromatic directed cycle.
    CreatesCycle,
    TargetMismatch,
    ExceedsBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceFault {
    /// Index of the offending step, if the fault belongs to one.
    pub step: Option<usize>,
    pub kind: FaultKind,
}

impl fmt::Display for SequenceFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            FaultKind::InvalidStart => "start is not a valid dicolouring in the palette",
            FaultKind::VertexOutOfRange => "vertex out of range",
            FaultKind::NoChange => "step keeps the current colour",
            FaultKind::OutOfPalette => "colour outside the palette",
            FaultKind::CreatesCycle => "step creates a monochromatic cycle",
            FaultKind::TargetMismatch => "final colouring differs from the target",
            FaultKind::ExceedsBound => "sequence is longer than its declared bound",
        };
        match self.step {
            Some(i) => write!(f, "step {i}: {what}"),
            None => f.write_str(what),
        }
    }
}

/// Replays `seq` from its start, checking every step, the final colouring
/// against `target`, and the declared bound.
pub fn verify_sequence(
    g: &Digraph,
    palette: Palette<'_>,
    seq: &RecolouringSequence,
    target: &[usize],
) -> core::result::Result<(), SequenceFault> {
    let n = g.order();
    let whole = |kind| SequenceFault { step: None, kind };
    let mut cur = seq.start.colours().to_vec();
    if palette.check(n, &cur).is_err() || !is_valid_colours(g, &cur) {
        return Err(whole(FaultKind::InvalidStart));
    }
    for (i, s) in seq.steps.iter().enumerate() {
        let at = |kind| SequenceFault {
            step: Some(i),
            kind,
        };
        if s.vertex >= n {
            return Err(at(FaultKind::VertexOutOfRange));
        }
        if cur[s.vertex] == s.colour {
            return Err(at(FaultKind::NoChange));
        }
        if !palette.contains(s.vertex, s.colour) {
            return Err(at(FaultKind::OutOfPalette));
        }
        if !can_recolour(g, &cur, s.vertex, s.colour) {
            return Err(at(FaultKind::CreatesCycle));
        }
        cur[s.vertex] = s.colour;
    }
    if cur != target {
        return Err(whole(FaultKind::TargetMismatch));
    }
    if seq.steps.len() > seq.bound {
        return Err(whole(FaultKind::ExceedsBound));
    }
    Ok(())
}

/// Swaps colours 1 and 2 everywhere.
pub fn mirror(c: &Dicolouring) -> Result<Dicolouring> {
    if c.k() != 2 {
        return Err(Error::precondition("mirror is defined for 2-dicolourings"));
    }
    Dicolouring::new(2, c.colours().iter().map(|&x| 3 - x).collect())
}

/// The steps of a walk from `start` in reverse: a walk from its end back to
/// `start`.
pub fn reverse_steps(start: &[usize], steps: &[Step]) -> Vec<Step> {
    let mut cur = start.to_vec();
    let mut back = Vec::with_capacity(steps.len());
    for s in steps {
        back.push(Step::new(s.vertex, cur[s.vertex]));
        cur[s.vertex] = s.colour;
    }
    back.reverse();
    back
}

/// Step-by-step builder that refuses any step leaving the space of
/// dicolourings.
pub(crate) struct Walk<'a> {
    g: &'a Digraph,
    palette: Palette<'a>,
    cur: Vec<usize>,
    steps: Vec<Step>,
}

impl<'a> Walk<'a> {
    pub fn new(g: &'a Digraph, palette: Palette<'a>, start: Vec<usize>) -> Self {
        Walk {
            g,
            palette,
            cur: start,
            steps: Vec::new(),
        }
    }

    pub fn colours(&self) -> &[usize] {
        &self.cur
    }

    pub fn colour(&self, v: usize) -> usize {
        self.cur[v]
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn palette(&self) -> Palette<'a> {
        self.palette
    }

    pub fn can(&self, v: usize, c: usize) -> bool {
        self.palette.contains(v, c) && can_recolour(self.g, &self.cur, v, c)
    }

    pub fn options(&self, v: usize) -> Vec<usize> {
        recolour_options_in(self.g, &self.cur, self.palette, v)
    }

    pub fn recolour(&mut self, v: usize, c: usize) -> Result<()> {
        if !self.can(v, c) {
            return Err(Error::internal(format!(
                "recolouring {v} from {} to {c} is not a valid step",
                self.cur[v]
            )));
        }
        self.cur[v] = c;
        self.steps.push(Step::new(v, c));
        Ok(())
    }

    /// Applies steps expressed in another numbering.
    pub fn replay(&mut self, steps: &[Step], to_here: impl Fn(usize) -> usize) -> Result<()> {
        for s in steps {
            self.recolour(to_here(s.vertex), s.colour)?;
        }
        Ok(())
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }
}

/// Checks that both endpoints are in-palette dicolourings of `g`.
pub(crate) fn check_endpoints(
    g: &Digraph,
    palette: Palette<'_>,
    alpha: &[usize],
    beta: &[usize],
) -> Result<()> {
    for (c, end) in [(alpha, Endpoint::Start), (beta, Endpoint::Target)] {
        palette.check(g.order(), c)?;
        if !is_valid_colours(g, c) {
            return Err(Error::InvalidColouring(end));
        }
    }
    Ok(())
}

pub(crate) fn sequence(
    start: &[usize],
    k: usize,
    steps: Vec<Step>,
    bound: usize,
    algorithm: &str,
) -> Result<RecolouringSequence> {
    Ok(RecolouringSequence {
        start: Dicolouring::new(k.max(1), start.to_vec())?,
        steps,
        bound,
        algorithm: String::from(algorithm),
    })
}

/// Lowest vertex on which the two colourings differ.
pub(crate) fn first_difference(a: &[usize], b: &[usize]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(start: &[usize], k: usize, steps: &[(usize, usize)]) -> RecolouringSequence {
        RecolouringSequence {
            start: Dicolouring::new(k, start.to_vec()).unwrap(),
            steps: steps.iter().map(|&(v, c)| Step::new(v, c)).collect(),
            bound: 10,
            algorithm: String::from("test"),
        }
    }

    #[test]
    fn verify_examples() {
        let c3 = Digraph::directed_cycle(3);
        let p = Palette::Colours(2);
        assert_eq!(
            verify_sequence(&c3, p, &seq(&[1, 2, 1], 2, &[]), &[1, 2, 1]),
            Ok(())
        );
        assert_eq!(
            verify_sequence(&c3, p, &seq(&[1, 2, 1], 2, &[(0, 2)]), &[2, 2, 1]),
            Ok(())
        );

        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let err = verify_sequence(&digon, p, &seq(&[1, 2], 2, &[(0, 2)]), &[2, 2]).unwrap_err();
        assert_eq!(
            err,
            SequenceFault {
                step: Some(0),
                kind: FaultKind::CreatesCycle
            }
        );
    }

    #[test]
    fn verify_faults() {
        let c3 = Digraph::directed_cycle(3);
        let p = Palette::Colours(2);
        let kind =
            |s: RecolouringSequence, t: &[usize]| verify_sequence(&c3, p, &s, t).unwrap_err().kind;
        assert_eq!(
            kind(seq(&[1, 1, 1], 2, &[]), &[1, 1, 1]),
            FaultKind::InvalidStart
        );
        assert_eq!(
            kind(seq(&[1, 2, 1], 2, &[(0, 1)]), &[1, 2, 1]),
            FaultKind::NoChange
        );
        assert_eq!(
            kind(seq(&[1, 2, 1], 3, &[(0, 3)]), &[3, 2, 1]),
            FaultKind::OutOfPalette
        );
        assert_eq!(
            kind(seq(&[1, 2, 1], 2, &[(5, 1)]), &[1, 2, 1]),
            FaultKind::VertexOutOfRange
        );
        assert_eq!(
            kind(seq(&[1, 2, 1], 2, &[]), &[2, 2, 1]),
            FaultKind::TargetMismatch
        );
        let mut long = seq(&[1, 2, 1], 2, &[(0, 2)]);
        long.bound = 0;
        assert_eq!(kind(long, &[2, 2, 1]), FaultKind::ExceedsBound);
    }

    #[test]
    fn mirror_examples() {
        let a = Dicolouring::new(2, vec![1, 2, 1]).unwrap();
        let m = mirror(&a).unwrap();
        assert_eq!(m.colours(), &[2, 1, 2]);
        assert_eq!(mirror(&m).unwrap(), a);
        assert!(mirror(&Dicolouring::new(3, vec![1]).unwrap()).is_err());
    }

    #[test]
    fn reversed_walk_returns_to_start() {
        let start = [1, 2, 1, 2];
        let steps = [Step::new(0, 2), Step::new(3, 1), Step::new(0, 1)];
        let back = reverse_steps(&start, &steps);
        let mut cur = start.to_vec();
        for s in steps.iter().chain(&back) {
            cur[s.vertex] = s.colour;
        }
        assert_eq!(cur, start);
        assert_eq!(
            back,
            vec![Step::new(0, 2), Step::new(3, 2), Step::new(0, 1)]
        );
    }
}
