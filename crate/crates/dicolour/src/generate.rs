//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a spec
//! and seed give the same digraph on every platform.

use std::fmt;
use std::str::FromStr;

use dicolour_core::dicolouring::can_recolour;
use dicolour_core::gadget::build_gadget;
use dicolour_core::{Digraph, ListAssignment, UndirectedGraph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Attempts before a rejection-sampled family gives up.
pub const MAX_RETRIES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Family {
    DirectedCycle,
    BidirectedCycle,
    BidirectedPath,
    BidirectedComplete,
    Tournament,
    RandomOrientedDminle1,
    RandomOrientedDmin,
    RandomDigraph,
    GadgetOf,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::DirectedCycle,
        Family::BidirectedCycle,
        Family::BidirectedPath,
        Family::BidirectedComplete,
        Family::Tournament,
        Family::RandomOrientedDminle1,
        Family::RandomOrientedDmin,
        Family::RandomDigraph,
        Family::GadgetOf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DirectedCycle => "directed-cycle",
            Family::BidirectedCycle => "bidirected-cycle",
            Family::BidirectedPath => "bidirected-path",
            Family::BidirectedComplete => "bidirected-complete",
            Family::Tournament => "tournament",
            Family::RandomOrientedDminle1 => "random-oriented-dminle1",
            Family::RandomOrientedDmin => "random-oriented-dmin",
            Family::RandomDigraph => "random-digraph",
            Family::GadgetOf => "gadget-of",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenError::Parameters(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("no instance met the constraints after {0} attempts")]
    Exhausted(usize),
    #[error(transparent)]
    Core(#[from] dicolour_core::Error),
}

impl GenError {
    pub fn code(&self) -> &'static str {
        match self {
            GenError::Parameters(_) => "bad-parameters",
            GenError::Exhausted(_) => "generation-exhausted",
            GenError::Core(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// Δ_min target for `random-oriented-dmin`; `k` for `gadget-of`.
    pub delta: Option<usize>,
    /// Edge or arc probability; drawn per attempt from `[0.1, 0.9)` when
    /// absent.
    pub p: Option<f64>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            family,
            n,
            delta: None,
            p: None,
            seed,
        }
    }

    pub fn with_delta(mut self, delta: usize) -> Self {
        self.delta = Some(delta);
        self
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = Some(p);
        self
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(spec: &GeneratorSpec) -> Result<Digraph, GenError> {
    let n = spec.n;
    if let Some(p) = spec.p {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenError::Parameters(format!(
                "probability {p} outside [0, 1]"
            )));
        }
    }
    let mut rng = rng(spec.seed);
    let g = match spec.family {
        Family::DirectedCycle => {
            need(n >= 2, "a directed cycle needs n ≥ 2")?;
            Digraph::directed_cycle(n)
        }
        Family::BidirectedCycle => {
            need(n >= 3, "a bidirected cycle needs n ≥ 3")?;
            Digraph::bidirected_cycle(n)
        }
        Family::BidirectedPath => Digraph::bidirected_path(n),
        Family::BidirectedComplete => Digraph::bidirected_complete(n),
        Family::Tournament => orient(&UndirectedGraph::complete(n), &mut rng),
        Family::RandomOrientedDminle1 => rejection(&mut rng, |rng| {
            let p = spec.p.unwrap_or_else(|| rng.random_range(0.1..0.9));
            let g = orient(&random_graph(n, p, rng), rng);
            (g.delta_min() <= 1).then_some(g)
        })?,
        Family::RandomOrientedDmin => {
            let delta = spec.delta.ok_or_else(|| {
                GenError::Parameters("random-oriented-dmin needs a Δ_min target".into())
            })?;
            need(
                n > 2 * delta || delta == 0,
                "an oriented graph with Δ_min = Δ needs n ≥ 2Δ + 1",
            )?;
            rejection(&mut rng, |rng| {
                let p = spec.p.unwrap_or_else(|| rng.random_range(0.1..0.9));
                let g = orient(&random_graph(n, p, rng), rng);
                (g.delta_min() == delta).then_some(g)
            })?
        }
        Family::RandomDigraph => {
            let p = spec.p.unwrap_or_else(|| rng.random_range(0.1..0.9));
            random_digraph(n, p, &mut rng)
        }
        Family::GadgetOf => {
            let k = spec.delta.unwrap_or(2);
            let p = spec.p.unwrap_or_else(|| rng.random_range(0.1..0.9));
            build_gadget(&random_digraph(n, p, &mut rng), k)?.graph
        }
    };
    verify_family(spec, &g)?;
    Ok(g)
}

fn need(ok: bool, msg: &str) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError::Parameters(msg.into()))
    }
}

fn rejection(
    rng: &mut ChaCha8Rng,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Option<Digraph>,
) -> Result<Digraph, GenError> {
    (0..MAX_RETRIES)
        .find_map(|_| draw(rng))
        .ok_or(GenError::Exhausted(MAX_RETRIES))
}

/// Re-checks the family constraints on a generated digraph.
fn verify_family(spec: &GeneratorSpec, g: &Digraph) -> Result<(), GenError> {
    let ok = match spec.family {
        Family::Tournament | Family::RandomOrientedDminle1 | Family::RandomOrientedDmin => {
            g.is_oriented()
                && match spec.family {
                    Family::RandomOrientedDminle1 => g.delta_min() <= 1,
                    Family::RandomOrientedDmin => Some(g.delta_min()) == spec.delta,
                    _ => true,
                }
        }
        Family::BidirectedCycle | Family::BidirectedPath | Family::BidirectedComplete => {
            g.is_bidirected()
        }
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(GenError::Parameters(format!(
            "generated {} instance violates its constraints",
            spec.family
        )))
    }
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs independently.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges).expect("pairs are distinct and in range")
}

/// Orients every edge by a fair coin.
pub fn orient(g: &UndirectedGraph, rng: &mut ChaCha8Rng) -> Digraph {
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if rng.random_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    Digraph::from_arcs(g.order(), arcs).expect("one arc per edge")
}

/// Each ordered pair is an arc independently with probability `p`.
pub fn random_digraph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("pairs are distinct and in range")
}

/// A uniformly random digraph with `Δ_max = delta`, by rejection.
pub fn random_digraph_with_dmax(
    n: usize,
    delta: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Digraph, GenError> {
    need(n > delta, "Δ_max must be below n")?;
    rejection(rng, |rng| {
        let p = rng.random_range(0.1..0.7);
        let g = random_digraph(n, p, rng);
        (g.delta_max() == delta && g.is_weakly_connected()).then_some(g)
    })
}

/// A random dicolouring with colours from `lists`: vertices in random
/// order, each taking a random colour that keeps the partial colouring
/// acyclic. Needs `|L(v)| ≥ d_min(v) + 1`, which always leaves a choice.
pub fn random_list_dicolouring(
    g: &Digraph,
    lists: &ListAssignment,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // Uncoloured vertices hold 0, which no arc can make monochromatic.
    let mut colours = vec![0; n];
    for v in order {
        let choices: Vec<usize> = lists
            .list(v)
            .iter()
            .copied()
            .filter(|&c| can_recolour(g, &colours, v, c))
            .collect();
        colours[v] = *choices.choose(rng)?;
    }
    Some(colours)
}

pub fn random_dicolouring(g: &Digraph, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    random_list_dicolouring(g, &ListAssignment::uniform(g.order(), k), rng)
}

/// For each vertex a random `d_max(v) + 1 + extra` colours out of `1..=k`.
pub fn random_lists(
    g: &Digraph,
    k: usize,
    extra: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ListAssignment, GenError> {
    let mut lists = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let size = g.d_max(v) + 1 + extra;
        need(size <= k, "k is too small for the requested list sizes")?;
        let mut all: Vec<usize> = (1..=k).collect();
        all.shuffle(rng);
        all.truncate(size);
        lists.push(all);
    }
    Ok(ListAssignment::new(lists)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dicolour_core::dicolouring::is_valid_colours;

    #[test]
    fn deterministic_families() {
        assert_eq!(
            generate(&GeneratorSpec::new(Family::DirectedCycle, 5, 0)).unwrap(),
            Digraph::directed_cycle(5)
        );
        assert_eq!(
            generate(&GeneratorSpec::new(Family::BidirectedComplete, 4, 0))
                .unwrap()
                .arc_count(),
            12
        );
        assert!(generate(&GeneratorSpec::new(Family::DirectedCycle, 1, 0)).is_err());
    }

    #[test]
    fn seeded_families_repeat() {
        for family in Family::ALL {
            let spec = GeneratorSpec::new(family, 7, 11).with_delta(2);
            let a = generate(&spec).unwrap();
            assert_eq!(a, generate(&spec).unwrap(), "{family}");
        }
    }

    #[test]
    fn constraints_hold() {
        let g = generate(&GeneratorSpec::new(Family::RandomOrientedDminle1, 10, 7)).unwrap();
        assert!(g.is_oriented());
        assert!(g.degree_profile().delta_min <= 1);
        for d in 1..=3 {
            let g = generate(
                &GeneratorSpec::new(Family::RandomOrientedDmin, 9, d as u64).with_delta(d),
            )
            .unwrap();
            assert!(g.is_oriented());
            assert_eq!(g.delta_min(), d);
        }
        assert!(
            generate(&GeneratorSpec::new(Family::RandomOrientedDmin, 4, 0).with_delta(2)).is_err()
        );
        assert!(generate(&GeneratorSpec::new(Family::Tournament, 6, 3))
            .unwrap()
            .is_oriented());
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn random_colourings_are_valid() {
        let mut r = rng(5);
        for _ in 0..20 {
            let g = random_digraph(7, 0.5, &mut r);
            let k = g.delta_min() + 1;
            let c = random_dicolouring(&g, k, &mut r).unwrap();
            assert!(is_valid_colours(&g, &c));
            assert!(c.iter().all(|&x| (1..=k).contains(&x)));
        }
    }
}
