//! Automorphism groups of small graphs by colour refinement and
//! backtracking, plus the dictionary between automorphisms of Tutte's
//! 8-cage and automorphisms of `Sym_6`.
//!
//! The search individualizes one vertex at a time on a fixed "left" path and
//! tries every compatible target on the "right", refining both colourings
//! after each step. Every automorphism extending the current partial map
//! survives refinement, so enumeration is exhaustive; each leaf is checked
//! explicitly, so it is also exact.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::aut::AutomorphismTable;
use crate::error::{check_range, integrity, Result};
use crate::graph::Graph;
use crate::k6::TutteGraph;
use crate::perm::{Permutation, SymTable};

/// Largest vertex count accepted by [`automorphism_group`].
pub const MAX_ENGINE_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring(pub Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMode {
    /// Automorphisms must fix every colour class.
    Preserve,
    /// Colours 0 and 1 may be exchanged; all other colours are preserved.
    AllowSwap,
}

/// A vertex permutation given as the image of each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphAutomorphism(pub Vec<usize>);

impl GraphAutomorphism {
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism((0..n).collect())
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        GraphAutomorphism(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }
}

/// Refined vertex colouring with canonically numbered colours.
#[derive(Clone, PartialEq, Eq)]
struct Cells {
    color: Vec<u32>,
    count: usize,
}

impl Cells {
    fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.count];
        for &c in &self.color {
            h[c as usize] += 1;
        }
        h
    }

    fn is_discrete(&self) -> bool {
        self.count == self.color.len()
    }

    fn individualize(&self, v: usize) -> Cells {
        let mut next = self.clone();
        next.color[v] = self.count as u32;
        next.count += 1;
        next
    }
}

/// Renumbers colours by sorted key so that equal keys on isomorphic inputs
/// receive equal colours.
fn canonical_colors<K: Ord + Clone>(keys: &[K]) -> Cells {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let color = keys
        .iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect();
    Cells {
        color,
        count: sorted.len(),
    }
}

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| cells.color[w]).collect();
                nb.sort_unstable();
                (cells.color[v], nb)
            })
            .collect();
        let next = canonical_colors(&keys);
        if next.count == cells.count {
            return next;
        }
        cells = next;
    }
}

fn distance_profile(g: &Graph, v: usize) -> Vec<usize> {
    let mut profile: Vec<usize> = g
        .distances_from(v)
        .into_iter()
        .map(|d| d.unwrap_or(usize::MAX))
        .collect();
    profile.sort_unstable();
    profile
}

/// Vertices sharing an initial cell must agree on degree and distance
/// profile.
fn assert_refinement_sound(g: &Graph, cells: &Cells, profiles: &[Vec<usize>]) {
    let mut first: BTreeMap<u32, usize> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let rep = *first.entry(cells.color[v]).or_insert(v);
        assert_eq!(g.degree(rep), g.degree(v), "refinement merged unequal degrees");
        assert_eq!(profiles[rep], profiles[v], "refinement merged unequal distance profiles");
    }
}

struct Search<'a> {
    g: &'a Graph,
    found: Vec<GraphAutomorphism>,
}

impl Search<'_> {
    fn run(&mut self, left: &Cells, right: &Cells) {
        if left.is_discrete() {
            let mut by_color = vec![0usize; left.count];
            for (u, &c) in right.color.iter().enumerate() {
                by_color[c as usize] = u;
            }
            let map: Vec<usize> = left.color.iter().map(|&c| by_color[c as usize]).collect();
            if self.g.is_automorphism(&map) {
                self.found.push(GraphAutomorphism(map));
            }
            return;
        }
        let hist = left.histogram();
        let target = (0..left.count)
            .filter(|&c| hist[c] > 1)
            .min_by_key(|&c| (hist[c], c))
            .unwrap() as u32;
        let v = left.color.iter().position(|&c| c == target).unwrap();
        let left_next = refine(self.g, left.individualize(v));
        let left_hist = left_next.histogram();
        for u in (0..right.color.len()).filter(|&u| right.color[u] == target) {
            let right_next = refine(self.g, right.individualize(u));
            if right_next.histogram() == left_hist {
                self.run(&left_next, &right_next);
            }
        }
    }
}

/// Every automorphism of `g` respecting the colouring under `mode`, sorted.
pub fn automorphism_group(
    g: &Graph,
    coloring: Option<&VertexColoring>,
    mode: ColorMode,
) -> Result<Vec<GraphAutomorphism>> {
    let n = g.vertex_count();
    check_range("vertex count", n, 0, MAX_ENGINE_VERTICES)?;
    if let Some(c) = coloring {
        if c.0.len() != n {
            return Err(crate::Error::Precondition(format!(
                "colouring has {} entries for {n} vertices",
                c.0.len()
            )));
        }
    }
    if n == 0 {
        return Ok(vec![GraphAutomorphism(Vec::new())]);
    }
    let user = |v: usize| coloring.map_or(0, |c| c.0[v]);
    let seed_color = |v: usize| match (mode, user(v)) {
        (ColorMode::AllowSwap, 1) => 0,
        (_, c) => c,
    };
    let profiles: Vec<Vec<usize>> = (0..n).map(|v| distance_profile(g, v)).collect();
    let keys: Vec<(u32, usize, Vec<usize>)> = (0..n)
        .map(|v| (seed_color(v), g.degree(v), profiles[v].clone()))
        .collect();
    let start = refine(g, canonical_colors(&keys));
    if cfg!(debug_assertions) {
        assert_refinement_sound(g, &canonical_colors(&keys), &profiles);
    }

    let mut search = Search {
        g,
        found: Vec::new(),
    };
    search.run(&start, &start);
    let mut found = search.found;

    if mode == ColorMode::AllowSwap {
        found.retain(|a| {
            let preserves = (0..n).all(|v| user(a.apply(v)) == user(v));
            let swaps = (0..n).all(|v| {
                let c = user(v);
                let expect = match c {
                    0 => 1,
                    1 => 0,
                    other => other,
                };
                user(a.apply(v)) == expect
            });
            preserves || swaps
        });
    }
    found.sort();
    Ok(found)
}

/// Whether `a` maps every vertex of colour 0/1 into the other colour.
pub fn swaps_parts(coloring: &VertexColoring, a: &GraphAutomorphism) -> bool {
    (0..coloring.0.len()).all(|v| coloring.0[a.apply(v)] != coloring.0[v])
}

/// Number of part-swapping automorphisms that square to the identity.
pub fn involutive_swaps_count(g: &Graph, coloring: &VertexColoring) -> Result<usize> {
    Ok(automorphism_group(g, Some(coloring), ColorMode::AllowSwap)?
        .iter()
        .filter(|a| swaps_parts(coloring, a) && a.is_involution())
        .count())
}

/// The automorphism of `Sym_6` that acts on transpositions the way `a`
/// acts on the white vertices of the 8-cage (white vertices are K6 edges,
/// i.e. transpositions; black vertices are factors, i.e. triple
/// transpositions).
pub fn graph_aut_to_group_aut(
    sym: &SymTable,
    cage: &TutteGraph,
    a: &GraphAutomorphism,
) -> Result<AutomorphismTable> {
    if sym.degree() != 6 {
        return Err(crate::Error::Precondition("Sym_6 table required".into()));
    }
    if !cage.graph.is_automorphism(&a.0) {
        return Err(integrity("cage-automorphism", "map is not an automorphism of the 8-cage"));
    }
    let element_of = |vertex: usize| -> Permutation { cage.involution(vertex) };
    let image_of = |t: &Permutation| -> Result<usize> {
        let v = cage
            .white_vertex_of(t)
            .ok_or_else(|| integrity("cage-dictionary", format!("{t} is not a transposition")))?;
        Ok(sym.rank(&element_of(a.apply(v))))
    };
    let all_white_same_side = {
        let first = cage.part(a.apply(0));
        (0..cage.white_count()).all(|v| cage.part(a.apply(v)) == first)
    };
    if !all_white_same_side {
        return Err(integrity("cage-parts", "automorphism splits the white part"));
    }

    let gens: Vec<Permutation> = (1..6)
        .map(|i| Permutation::transposition(6, i, i + 1))
        .collect::<Result<_>>()?;
    let gen_idx: Vec<usize> = gens.iter().map(|p| sym.rank(p)).collect();
    let img_idx: Vec<usize> = gens.iter().map(image_of).collect::<Result<_>>()?;
    let table = AutomorphismTable::from_generator_images(sym, &gen_idx, &img_idx)
        .ok_or_else(|| integrity("cage-extension", "transposition map does not extend"))?;

    for v in 0..cage.white_count() {
        let t = element_of(v);
        if table.apply(sym.rank(&t)) != sym.rank(&element_of(a.apply(v))) {
            return Err(integrity(
                "cage-extension",
                format!("extension disagrees with the graph map on {t}"),
            ));
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphAutReport {
    pub graph: String,
    pub aut_order: usize,
    pub part_preserving_order: usize,
    pub part_swapping_involutions: usize,
}

/// Automorphism counts for the 8-cage, classified by their action on the
/// two parts.
pub fn cage_report(cage: &TutteGraph) -> Result<(GraphAutReport, Vec<GraphAutomorphism>)> {
    let coloring = cage.coloring();
    let all = automorphism_group(&cage.graph, Some(&coloring), ColorMode::AllowSwap)?;
    let preserving = all.iter().filter(|a| !swaps_parts(&coloring, a)).count();
    let swap_involutions = all
        .iter()
        .filter(|a| swaps_parts(&coloring, a) && a.is_involution())
        .count();
    Ok((
        GraphAutReport {
            graph: "tutte-8-cage".into(),
            aut_order: all.len(),
            part_preserving_order: preserving,
            part_swapping_involutions: swap_involutions,
        },
        all,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn cycle_automorphisms_are_dihedral() {
        for n in 3..9 {
            assert_eq!(automorphism_group(&cycle(n), None, ColorMode::Preserve).unwrap().len(), 2 * n);
        }
    }

    #[test]
    fn colours_restrict_the_group() {
        let c = VertexColoring(vec![0, 1, 0, 1, 0, 1]);
        let preserve = automorphism_group(&cycle(6), Some(&c), ColorMode::Preserve).unwrap();
        assert_eq!(preserve.len(), 6);
        let swap = automorphism_group(&cycle(6), Some(&c), ColorMode::AllowSwap).unwrap();
        assert_eq!(swap.len(), 12);
        assert_eq!(swap.iter().filter(|a| swaps_parts(&c, a)).count(), 6);
    }

    #[test]
    fn guard_and_empty_graph() {
        assert!(automorphism_group(&Graph::empty(65), None, ColorMode::Preserve).is_err());
        assert_eq!(automorphism_group(&Graph::empty(0), None, ColorMode::Preserve).unwrap().len(), 1);
        let bad = VertexColoring(vec![0, 0]);
        assert!(automorphism_group(&cycle(3), Some(&bad), ColorMode::Preserve).is_err());
    }

    #[test]
    fn petersen_graph_has_120_automorphisms() {
        let mut edges = Vec::new();
        for k in 0..5 {
            edges.push((k, (k + 1) % 5));
            edges.push((k, k + 5));
            edges.push((5 + k, 5 + (k + 2) % 5));
        }
        let g = Graph::new(10, &edges).unwrap();
        assert_eq!(automorphism_group(&g, None, ColorMode::Preserve).unwrap().len(), 120);
    }
}
