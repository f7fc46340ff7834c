//! Reduction from k-dicolourability to k-dicolourability with `Δ_min = k`
//! and small bidirected cliques. Each source vertex `x` becomes a block
//! `S_x⁻ ⇒ S_x⁺` of two bidirected complete graphs on `⌊(k+1)/2⌋` and
//! `⌈(k+1)/2⌉` vertices, and each source arc `xy` becomes all arcs from
//! `S_x⁺` to `S_y⁻`.

use alloc::format;
use alloc::vec::Vec;

use crate::dicolouring::{is_valid_colours, Dicolouring};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetBlock {
    pub x: usize,
    pub s_minus: Vec<usize>,
    pub s_plus: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub source: Digraph,
    pub k: usize,
    pub graph: Digraph,
    /// Block of source vertex `x` at index `x`; ids are contiguous with
    /// `S_x⁻` first.
    pub blocks: Vec<GadgetBlock>,
}

pub fn build_gadget(d: &Digraph, k: usize) -> Result<GadgetInstance> {
    if k < 2 {
        return Err(Error::precondition("the gadget needs k ≥ 2"));
    }
    let minus = k.div_ceil(2);
    let size = k + 1;
    let blocks: Vec<GadgetBlock> = (0..d.order())
        .map(|x| {
            let base = x * size;
            GadgetBlock {
                x,
                s_minus: (base..base + minus).collect(),
                s_plus: (base + minus..base + size).collect(),
            }
        })
        .collect();
    let mut arcs = Vec::new();
    for b in &blocks {
        for part in [&b.s_minus, &b.s_plus] {
            for &u in part.iter() {
                arcs.extend(part.iter().filter(|&&w| w != u).map(|&w| (u, w)));
            }
        }
        for &u in &b.s_minus {
            arcs.extend(b.s_plus.iter().map(|&w| (u, w)));
        }
    }
    for (x, y) in d.arcs() {
        for &u in &blocks[x].s_plus {
            arcs.extend(blocks[y].s_minus.iter().map(|&w| (u, w)));
        }
    }
    let graph = Digraph::from_arcs(d.order() * size, arcs)?;
    Ok(GadgetInstance {
        source: d.clone(),
        k,
        graph,
        blocks,
    })
}

impl GadgetInstance {
    /// Which block and part a vertex of the output belongs to: `(x, true)`
    /// for `S_x⁺`.
    pub fn locate(&self, v: usize) -> (usize, bool) {
        let size = self.k + 1;
        (v / size, v % size >= self.k.div_ceil(2))
    }
}

fn check_colouring(g: &Digraph, k: usize, colours: &[usize], what: &str) -> Result<()> {
    if colours.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: colours.len(),
        });
    }
    if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
        return Err(Error::ColourOutOfRange { vertex, colour });
    }
    if !is_valid_colours(g, colours) {
        return Err(Error::precondition(format!(
            "{what} colouring is not a dicolouring"
        )));
    }
    Ok(())
}

/// From a k-dicolouring of the source: in each block the lowest vertex of
/// each part takes `φ(x)`, the others take the remaining colours once each.
pub fn lift_dicolouring(g: &GadgetInstance, phi: &[usize]) -> Result<Dicolouring> {
    check_colouring(&g.source, g.k, phi, "source")?;
    let mut out = alloc::vec![0; g.graph.order()];
    for b in &g.blocks {
        let c = phi[b.x];
        out[b.s_minus[0]] = c;
        out[b.s_plus[0]] = c;
        let mut spare = (1..=g.k).filter(|&x| x != c);
        for &v in b.s_minus[1..].iter().chain(&b.s_plus[1..]) {
            out[v] = spare
                .next()
                .expect("k - 1 spare colours for k - 1 vertices");
        }
    }
    Dicolouring::new(g.k, out)
}

/// From a k-dicolouring of the output: each block has `k + 1` vertices, so
/// two share a colour, one in each part; that colour goes to `x`.
pub fn project_dicolouring(g: &GadgetInstance, phi: &[usize]) -> Result<Dicolouring> {
    check_colouring(&g.graph, g.k, phi, "gadget")?;
    let mut out = Vec::with_capacity(g.blocks.len());
    for b in &g.blocks {
        let c = b
            .s_minus
            .iter()
            .map(|&u| phi[u])
            .find(|c| b.s_plus.iter().any(|&w| phi[w] == *c))
            .ok_or_else(|| {
                Error::internal(format!(
                    "block {} has no colour shared across its parts",
                    b.x
                ))
            })?;
        out.push(c);
    }
    Dicolouring::new(g.k, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicolouring::is_valid;

    #[test]
    fn sizes_and_degrees() {
        let c3 = Digraph::directed_cycle(3);
        for k in 2..=5 {
            let g = build_gadget(&c3, k).unwrap();
            assert_eq!(g.graph.order(), (k + 1) * 3);
            assert_eq!(g.graph.delta_min(), k);
            for b in &g.blocks {
                assert_eq!(b.s_minus.len(), k.div_ceil(2));
                assert_eq!(b.s_plus.len(), (k + 2) / 2);
                for &v in &b.s_plus {
                    assert_eq!(g.graph.in_degree(v), k);
                    assert_eq!(g.locate(v), (b.x, true));
                }
                for &v in &b.s_minus {
                    assert_eq!(g.graph.out_degree(v), k);
                    assert_eq!(g.locate(v), (b.x, false));
                }
            }
        }
        assert!(build_gadget(&c3, 1).is_err());
    }

    #[test]
    fn digons_stay_inside_parts() {
        let g = build_gadget(&Digraph::bidirected_complete(3), 3).unwrap();
        for (u, v) in g.graph.arcs() {
            if g.graph.is_digon(u, v) {
                let (bu, pu) = g.locate(u);
                let (bv, pv) = g.locate(v);
                assert_eq!((bu, pu), (bv, pv));
            }
        }
    }

    #[test]
    fn lift_and_project() {
        let single = Digraph::new(1);
        let g = build_gadget(&single, 2).unwrap();
        let lifted = lift_dicolouring(&g, &[1]).unwrap();
        assert_eq!(lifted.colours(), &[1, 1, 2]);

        let c3 = Digraph::directed_cycle(3);
        let g = build_gadget(&c3, 2).unwrap();
        let lifted = lift_dicolouring(&g, &[1, 2, 1]).unwrap();
        assert!(is_valid(&g.graph, &lifted));
        let back = project_dicolouring(&g, lifted.colours()).unwrap();
        assert!(is_valid(&c3, &back));
        assert!(lift_dicolouring(&g, &[1, 1, 1]).is_err());
    }
}
