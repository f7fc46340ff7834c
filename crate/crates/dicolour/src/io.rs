//! Text and JSON file formats.
//!
//! Digraphs use an edge list: a header line `n m`, then `m` lines `u v`.
//! Lines starting with `#` are ignored and a digon is written as two arcs.

use std::fmt::Write as _;

use dicolour_core::certify::Witness;
use dicolour_core::gadget::GadgetInstance;
use dicolour_core::oracle::DicolouringGraphSummary;
use dicolour_core::{Dicolouring, Digraph, ListAssignment, RecolouringSequence, Step};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: expected a header \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected two non-negative integers")]
    MalformedLine { line: usize },
    #[error("header declares {declared} arcs, found {found}")]
    ArcCount { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("vertex {vertex} listed more than once")]
    RepeatedVertex { vertex: usize },
    #[error("no colour given for vertex {vertex}")]
    MissingVertex { vertex: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] dicolour_core::Error),
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::MalformedHeader { .. } | FormatError::MissingHeader => "malformed-header",
            FormatError::MalformedLine { .. } => "malformed-line",
            FormatError::ArcCount { .. } => "arc-count-mismatch",
            FormatError::RepeatedVertex { .. } => "repeated-vertex",
            FormatError::MissingVertex { .. } => "missing-vertex",
            FormatError::Json(_) => "malformed-json",
            FormatError::Core(e) => e.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, FormatError>;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (n, m) = pair(header).ok_or(FormatError::MalformedHeader { line: hl })?;
    let mut arcs = Vec::with_capacity(m);
    for (line, l) in lines {
        arcs.push(pair(l).ok_or(FormatError::MalformedLine { line })?);
    }
    if arcs.len() != m {
        return Err(FormatError::ArcCount {
            declared: m,
            found: arcs.len(),
        });
    }
    Ok(Digraph::from_arcs(n, arcs)?)
}

/// Canonical text: header, then arcs in lexicographic order.
pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    pub k: usize,
    pub colours: Vec<usize>,
}

/// A colouring read from a file; `k` is known only for the JSON form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringFile {
    pub k: Option<usize>,
    pub colours: Vec<usize>,
}

impl ColouringFile {
    /// Bundles the colours with `k`, falling back to the file's own `k` and
    /// then to the largest colour used.
    pub fn with_k(&self, k: Option<usize>) -> Result<Dicolouring> {
        let k = k
            .or(self.k)
            .unwrap_or_else(|| self.colours.iter().copied().max().unwrap_or(1));
        Ok(Dicolouring::new(k, self.colours.clone())?)
    }
}

/// Reads either the `v c` text form (every vertex of `0..n` exactly once)
/// or the JSON form.
pub fn parse_colouring(text: &str, n: usize) -> Result<ColouringFile> {
    if text.trim_start().starts_with('{') {
        let j: ColouringJson = serde_json::from_str(text)?;
        if j.colours.len() != n {
            return Err(dicolour_core::Error::LengthMismatch {
                expected: n,
                found: j.colours.len(),
            }
            .into());
        }
        return Ok(ColouringFile {
            k: Some(j.k),
            colours: j.colours,
        });
    }
    let mut colours = vec![0; n];
    for (line, l) in content_lines(text) {
        let (v, c) = pair(l).ok_or(FormatError::MalformedLine { line })?;
        if v >= n {
            return Err(dicolour_core::Error::VertexOutOfRange { vertex: v, n }.into());
        }
        if colours[v] != 0 {
            return Err(FormatError::RepeatedVertex { vertex: v });
        }
        if c == 0 {
            return Err(dicolour_core::Error::ColourOutOfRange {
                vertex: v,
                colour: c,
            }
            .into());
        }
        colours[v] = c;
    }
    if let Some(vertex) = colours.iter().position(|&c| c == 0) {
        return Err(FormatError::MissingVertex { vertex });
    }
    Ok(ColouringFile { k: None, colours })
}

pub fn colouring_text(colours: &[usize]) -> String {
    colours
        .iter()
        .enumerate()
        .fold(String::new(), |mut s, (v, c)| {
            let _ = writeln!(s, "{v} {c}");
            s
        })
}

pub fn colouring_json(c: &Dicolouring) -> String {
    serde_json::to_string(&ColouringJson {
        k: c.k(),
        colours: c.colours().to_vec(),
    })
    .expect("plain struct serializes")
}

/// Lists as lines `v c1 c2 ...`, one per vertex.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment> {
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, l) in content_lines(text) {
        let nums: Vec<usize> = l
            .split_ascii_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| FormatError::MalformedLine { line })?;
        let (&v, colours) = nums
            .split_first()
            .ok_or(FormatError::MalformedLine { line })?;
        if v >= n {
            return Err(dicolour_core::Error::VertexOutOfRange { vertex: v, n }.into());
        }
        if lists[v].is_some() {
            return Err(FormatError::RepeatedVertex { vertex: v });
        }
        lists[v] = Some(colours.to_vec());
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(vertex, l)| l.ok_or(FormatError::MissingVertex { vertex }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ListAssignment::new(lists)?)
}

pub fn lists_text(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, l) in lists.lists().iter().enumerate() {
        let _ = write!(out, "{v}");
        for c in l {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub vertex: usize,
    pub colour: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub start: Vec<usize>,
    pub steps: Vec<StepJson>,
    pub bound: usize,
    pub algorithm: String,
}

impl From<&RecolouringSequence> for SequenceJson {
    fn from(s: &RecolouringSequence) -> Self {
        SequenceJson {
            start: s.start.colours().to_vec(),
            steps: s
                .steps
                .iter()
                .map(|st| StepJson {
                    vertex: st.vertex,
                    colour: st.colour,
                })
                .collect(),
            bound: s.bound,
            algorithm: s.algorithm.clone(),
        }
    }
}

impl SequenceJson {
    /// `k` defaults to the largest colour appearing anywhere.
    pub fn into_sequence(self, k: Option<usize>) -> Result<RecolouringSequence> {
        let top = self
            .start
            .iter()
            .copied()
            .chain(self.steps.iter().map(|s| s.colour))
            .max()
            .unwrap_or(1);
        Ok(RecolouringSequence {
            start: Dicolouring::new(k.unwrap_or(top).max(1), self.start)?,
            steps: self
                .steps
                .into_iter()
                .map(|s| Step::new(s.vertex, s.colour))
                .collect(),
            bound: self.bound,
            algorithm: self.algorithm,
        })
    }
}

pub fn sequence_json(s: &RecolouringSequence) -> String {
    serde_json::to_string(&SequenceJson::from(s)).expect("plain struct serializes")
}

pub fn parse_sequence(text: &str) -> Result<SequenceJson> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Digon {
        digon: [usize; 2],
    },
    Join {
        r: usize,
        s: usize,
        #[serde(rename = "R")]
        big_r: Vec<usize>,
        #[serde(rename = "S")]
        big_s: Vec<usize>,
    },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Digon(u, v) => WitnessJson::Digon { digon: [*u, *v] },
            Witness::Join { r, s } => WitnessJson::Join {
                r: r.len(),
                s: s.len(),
                big_r: r.clone(),
                big_s: s.clone(),
            },
        }
    }
}

pub fn witness_json(w: &Witness) -> String {
    serde_json::to_string(&WitnessJson::from(w)).expect("plain struct serializes")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub x: usize,
    #[serde(rename = "Sminus")]
    pub s_minus: Vec<usize>,
    #[serde(rename = "Splus")]
    pub s_plus: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMapJson {
    pub k: usize,
    pub blocks: Vec<BlockJson>,
}

pub fn block_map_json(g: &GadgetInstance) -> String {
    let map = BlockMapJson {
        k: g.k,
        blocks: g
            .blocks
            .iter()
            .map(|b| BlockJson {
                x: b.x,
                s_minus: b.s_minus.clone(),
                s_plus: b.s_plus.clone(),
            })
            .collect(),
    };
    serde_json::to_string(&map).expect("plain struct serializes")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub colourings: usize,
    pub components: usize,
    pub diameter: Option<usize>,
    pub frozen: usize,
}

pub fn summary_json(s: &DicolouringGraphSummary) -> String {
    serde_json::to_string(&SummaryJson {
        colourings: s.colourings,
        components: s.components,
        diameter: s.diameter,
        frozen: s.frozen,
    })
    .expect("plain struct serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_round_trip() {
        let g = parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Digraph::directed_cycle(3));
        let text = serialize_digraph(&g);
        assert_eq!(text, "3 3\n0 1\n1 2\n2 0\n");
        assert_eq!(serialize_digraph(&parse_digraph(&text).unwrap()), text);

        let commented = "# a digon\n2 2\n\n0 1\n# middle\n1 0\n";
        assert!(parse_digraph(commented).unwrap().is_digon(0, 1));
    }

    #[test]
    fn digraph_errors_have_distinct_codes() {
        let code = |t: &str| parse_digraph(t).unwrap_err().code();
        assert_eq!(code("2 2\n0 1\n0 1\n"), "duplicate-arc");
        assert_eq!(code("2 1\n0 0\n"), "self-loop");
        assert_eq!(code("2 1\n0 5\n"), "vertex-out-of-range");
        assert_eq!(code("two\n"), "malformed-header");
        assert_eq!(code(""), "malformed-header");
        assert_eq!(code("2 1\n0 x\n"), "malformed-line");
        assert_eq!(code("2 2\n0 1\n"), "arc-count-mismatch");
    }

    #[test]
    fn colourings() {
        let c = parse_colouring("0 1\n2 1\n1 2\n", 3).unwrap();
        assert_eq!(
            c,
            ColouringFile {
                k: None,
                colours: vec![1, 2, 1]
            }
        );
        assert_eq!(c.with_k(None).unwrap().k(), 2);
        assert_eq!(
            parse_colouring(&colouring_text(&[1, 2, 1]), 3)
                .unwrap()
                .colours,
            [1, 2, 1]
        );

        let d = Dicolouring::new(3, vec![1, 2, 3]).unwrap();
        let j = colouring_json(&d);
        assert_eq!(j, r#"{"k":3,"colours":[1,2,3]}"#);
        assert_eq!(parse_colouring(&j, 3).unwrap().with_k(None).unwrap(), d);

        assert_eq!(
            parse_colouring("0 1\n", 2).unwrap_err().code(),
            "missing-vertex"
        );
        assert_eq!(
            parse_colouring("0 1\n0 2\n", 1).unwrap_err().code(),
            "repeated-vertex"
        );
        assert_eq!(
            parse_colouring("0 0\n", 1).unwrap_err().code(),
            "colour-out-of-range"
        );
    }

    #[test]
    fn lists_round_trip() {
        let l = parse_lists("1 2 3\n0 1 2\n", 2).unwrap();
        assert_eq!(l.list(0), [1, 2]);
        assert_eq!(parse_lists(&lists_text(&l), 2).unwrap(), l);
    }

    #[test]
    fn sequence_json_fields() {
        let s = RecolouringSequence {
            start: Dicolouring::new(2, vec![1, 2, 1]).unwrap(),
            steps: vec![Step::new(0, 2)],
            bound: 3,
            algorithm: "cycle".into(),
        };
        let text = sequence_json(&s);
        assert_eq!(
            text,
            r#"{"start":[1,2,1],"steps":[{"vertex":0,"colour":2}],"bound":3,"algorithm":"cycle"}"#
        );
        assert_eq!(
            parse_sequence(&text)
                .unwrap()
                .into_sequence(Some(2))
                .unwrap(),
            s
        );
    }

    #[test]
    fn witness_shapes() {
        assert_eq!(witness_json(&Witness::Digon(0, 3)), r#"{"digon":[0,3]}"#);
        let w = Witness::Join {
            r: vec![],
            s: vec![0, 1, 2, 3],
        };
        assert_eq!(witness_json(&w), r#"{"r":0,"s":4,"R":[],"S":[0,1,2,3]}"#);
    }
}
