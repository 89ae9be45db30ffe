//! Exhaustive enumeration of `Aut(Sym_n)` for `3 ≤ n ≤ 6`.
//!
//! An automorphism is pinned down by where it sends `x = (1,2)` and
//! `y = (1,2,...,n)`. Each candidate pair of images (an involution and an
//! element of order `n`) is extended along the Cayley graph and kept only
//! if the extension is a well-defined bijective homomorphism.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{check_range, integrity, Result};
use crate::perm::{InvolutionClassId, PermRecord, Permutation, SymTable};

/// An automorphism stored as the image of every element, indexed by the
/// lexicographic rank used by [`SymTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutomorphismTable {
    n: usize,
    images: Vec<u16>,
}

impl AutomorphismTable {
    pub fn identity(sym: &SymTable) -> Self {
        AutomorphismTable {
            n: sym.degree(),
            images: (0..sym.order() as u16).collect(),
        }
    }

    /// Conjugation `x ↦ g x g⁻¹` by the element with index `g`.
    pub fn conjugation(sym: &SymTable, g: usize) -> Self {
        AutomorphismTable {
            n: sym.degree(),
            images: (0..sym.order()).map(|x| sym.conj(x, g) as u16).collect(),
        }
    }

    /// Builds the table from a raw image array, checking that it is a
    /// bijective homomorphism.
    pub fn from_images(sym: &SymTable, images: Vec<u16>) -> Result<Self> {
        let table = AutomorphismTable {
            n: sym.degree(),
            images,
        };
        if table.images.len() != sym.order() {
            return Err(integrity("automorphism-table", "wrong table length"));
        }
        if !table.is_bijective() {
            return Err(integrity("automorphism-table", "not a bijection"));
        }
        if !table.is_homomorphism(sym) {
            return Err(integrity("automorphism-table", "not a homomorphism"));
        }
        Ok(table)
    }

    /// Extends prescribed generator images to a full table.
    ///
    /// Returns `None` unless the generators generate the whole group and
    /// the induced map is a well-defined bijective homomorphism. Checking
    /// `f(g·s) = f(g)·f(s)` on every Cayley-graph edge is sufficient: it
    /// gives `f(g·w) = f(g)·f(w)` for every word `w` by induction.
    pub fn from_generator_images(
        sym: &SymTable,
        generators: &[usize],
        images: &[usize],
    ) -> Option<Self> {
        debug_assert_eq!(generators.len(), images.len());
        const UNSET: u16 = u16::MAX;
        let order = sym.order();
        let mut f = vec![UNSET; order];
        let id = sym.identity();
        f[id] = id as u16;
        let mut queue = Vec::with_capacity(order);
        queue.push(id);
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            let fg = f[g] as usize;
            for (&s, &fs) in generators.iter().zip(images) {
                let h = sym.mul(g, s);
                let fh = sym.mul(fg, fs) as u16;
                if f[h] == UNSET {
                    f[h] = fh;
                    queue.push(h);
                } else if f[h] != fh {
                    return None;
                }
            }
        }
        if queue.len() != order {
            return None;
        }
        let table = AutomorphismTable {
            n: sym.degree(),
            images: f,
        };
        table.is_bijective().then_some(table)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn apply_perm(&self, sym: &SymTable, p: &Permutation) -> Permutation {
        sym.element(self.apply(sym.rank(p))).clone()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AutomorphismTable) -> AutomorphismTable {
        AutomorphismTable {
            n: self.n,
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> AutomorphismTable {
        let mut inv = vec![0u16; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        AutomorphismTable {
            n: self.n,
            images: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&y| (y as usize) < seen.len() && !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Full `|G|²` homomorphism check.
    pub fn is_homomorphism(&self, sym: &SymTable) -> bool {
        let order = sym.order();
        (0..order).all(|a| {
            (0..order).all(|b| self.apply(sym.mul(a, b)) == sym.mul(self.apply(a), self.apply(b)))
        })
    }

    /// Images of `(1,2)` and `(1,2,...,n)`, the compact serialization.
    pub fn generator_images(&self, sym: &SymTable) -> GeneratorImages {
        let (x, y) = standard_generators(sym);
        GeneratorImages {
            transposition: PermRecord::from(sym.element(self.apply(x))),
            long_cycle: PermRecord::from(sym.element(self.apply(y))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorImages {
    /// Image of `(1,2)`.
    pub transposition: PermRecord,
    /// Image of `(1,2,...,n)`.
    pub long_cycle: PermRecord,
}

/// Indices of `(1,2)` and `(1,2,...,n)`.
pub fn standard_generators(sym: &SymTable) -> (usize, usize) {
    let n = sym.degree();
    let x = Permutation::transposition(n, 1, 2).expect("n >= 2");
    let cycle: Vec<usize> = (1..=n).collect();
    let y = Permutation::from_cycles(n, &[&cycle]).expect("valid cycle");
    (sym.rank(&x), sym.rank(&y))
}

/// The element `g` with `a = conjugation by g`, if any.
pub fn inner_witness(sym: &SymTable, a: &AutomorphismTable) -> Option<Permutation> {
    let (x, y) = standard_generators(sym);
    (0..sym.order())
        .filter(|&g| sym.conj(x, g) == a.apply(x) && sym.conj(y, g) == a.apply(y))
        .find(|&g| AutomorphismTable::conjugation(sym, g) == *a)
        .map(|g| sym.element(g).clone())
}

/// The involution class containing the image of `C_j`.
pub fn class_image(
    sym: &SymTable,
    a: &AutomorphismTable,
    id: InvolutionClassId,
) -> Result<InvolutionClassId> {
    id.validate()?;
    let mut images = BTreeSet::new();
    for x in crate::perm::involution_class(id)? {
        let img = a.apply_perm(sym, &x);
        let cls = img
            .involution_class()
            .ok_or_else(|| integrity("class-image", format!("{x} maps to non-involution {img}")))?;
        images.insert(cls);
    }
    match images.len() {
        1 => Ok(images.into_iter().next().unwrap()),
        k => Err(integrity(
            "class-image",
            format!("members of {id} land in {k} different classes"),
        )),
    }
}

/// The full automorphism group of `Sym_n` together with its inner subgroup.
pub struct AutomorphismGroup {
    sym: SymTable,
    automorphisms: Vec<AutomorphismTable>,
    inner: BTreeSet<AutomorphismTable>,
}

impl AutomorphismGroup {
    pub fn enumerate(n: usize) -> Result<Self> {
        check_range("degree", n, 3, 6)?;
        let sym = SymTable::new(n)?;
        let (x, y) = standard_generators(&sym);
        let n_order = sym.element(y).order();
        let involutions: Vec<usize> = (0..sym.order())
            .filter(|&g| sym.element(g).order() == 2)
            .collect();
        let long: Vec<usize> = (0..sym.order())
            .filter(|&g| sym.element(g).order() == n_order)
            .collect();

        let mut automorphisms = Vec::new();
        for &ix in &involutions {
            for &iy in &long {
                if let Some(t) = AutomorphismTable::from_generator_images(&sym, &[x, y], &[ix, iy]) {
                    automorphisms.push(t);
                }
            }
        }
        automorphisms.sort();
        automorphisms.dedup();

        let inner: BTreeSet<AutomorphismTable> = (0..sym.order())
            .map(|g| AutomorphismTable::conjugation(&sym, g))
            .collect();
        if let Some(bad) = inner.iter().find(|c| automorphisms.binary_search(c).is_err()) {
            return Err(integrity(
                "inner-in-aut",
                format!("conjugation map {:?} missing from search result", bad.generator_images(&sym)),
            ));
        }
        Ok(AutomorphismGroup {
            sym,
            automorphisms,
            inner,
        })
    }

    pub fn sym(&self) -> &SymTable {
        &self.sym
    }

    pub fn degree(&self) -> usize {
        self.sym.degree()
    }

    /// All automorphisms, sorted by table.
    pub fn automorphisms(&self) -> &[AutomorphismTable] {
        &self.automorphisms
    }

    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }

    /// Number of distinct conjugation maps.
    pub fn inner_order(&self) -> usize {
        self.inner.len()
    }

    pub fn out_order(&self) -> usize {
        self.order() / self.inner_order()
    }

    pub fn contains(&self, a: &AutomorphismTable) -> bool {
        self.automorphisms.binary_search(a).is_ok()
    }

    pub fn is_inner(&self, a: &AutomorphismTable) -> bool {
        self.inner.contains(a)
    }

    pub fn outer(&self) -> impl Iterator<Item = &AutomorphismTable> {
        self.automorphisms.iter().filter(|a| !self.is_inner(a))
    }

    /// Outer automorphisms whose square is the identity map.
    pub fn involutive_outer(&self) -> impl Iterator<Item = &AutomorphismTable> {
        self.outer().filter(|a| a.compose(a).is_identity())
    }

    pub fn involutive_outer_count(&self) -> usize {
        self.involutive_outer().count()
    }

    pub fn involutive_inner_count(&self) -> usize {
        self.inner
            .iter()
            .filter(|a| !a.is_identity() && a.compose(a).is_identity())
            .count()
    }

    pub fn report(&self) -> AutReport {
        let six = self.degree() == 6;
        AutReport {
            n: self.degree(),
            aut_order: self.order(),
            inn_order: self.inner_order(),
            out_order: self.out_order(),
            involutive_outer_count: six.then(|| self.involutive_outer_count()),
            sample_outer_generator_images: self
                .outer()
                .next()
                .map(|a| a.generator_images(&self.sym)),
        }
    }
}

/// `|Aut(Sym_n)| / |Inn(Sym_n)|` by exhaustive search.
pub fn out_order(n: usize) -> Result<usize> {
    Ok(AutomorphismGroup::enumerate(n)?.out_order())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutReport {
    pub n: usize,
    pub aut_order: usize,
    pub inn_order: usize,
    pub out_order: usize,
    pub involutive_outer_count: Option<usize>,
    pub sample_outer_generator_images: Option<GeneratorImages>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::InvolutionClassId;

    #[test]
    fn small_degrees_are_all_inner() {
        for (n, expected) in [(3, 6), (4, 24), (5, 120)] {
            let g = AutomorphismGroup::enumerate(n).unwrap();
            assert_eq!(g.order(), expected, "n = {n}");
            assert_eq!(g.inner_order(), expected);
            assert_eq!(g.out_order(), 1);
            assert!(g.outer().next().is_none());
        }
    }

    #[test]
    fn degree_guard() {
        assert!(AutomorphismGroup::enumerate(2).is_err());
        assert!(AutomorphismGroup::enumerate(7).is_err());
    }

    #[test]
    fn witnesses_for_inner_maps() {
        let sym = SymTable::new(5).unwrap();
        let id = AutomorphismTable::identity(&sym);
        assert!(inner_witness(&sym, &id).unwrap().is_identity());
        let t = Permutation::transposition(5, 1, 2).unwrap();
        let conj = AutomorphismTable::conjugation(&sym, sym.rank(&t));
        assert_eq!(inner_witness(&sym, &conj).unwrap(), t);
    }

    #[test]
    fn group_closure_at_four() {
        let g = AutomorphismGroup::enumerate(4).unwrap();
        for a in g.automorphisms() {
            assert!(g.contains(&a.inverse()));
            for b in g.automorphisms() {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn generator_extension_rejects_non_homomorphisms() {
        let sym = SymTable::new(4).unwrap();
        let (x, y) = standard_generators(&sym);
        // (1,2) -> (1,2)(3,4) with y fixed does not extend
        let bad = sym.rank(&Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap());
        assert!(AutomorphismTable::from_generator_images(&sym, &[x, y], &[bad, y]).is_none());
        let ok = AutomorphismTable::from_generator_images(&sym, &[x, y], &[x, y]).unwrap();
        assert!(ok.is_identity());
        assert!(AutomorphismTable::from_images(&sym, ok.images().to_vec()).is_ok());
    }

    #[test]
    fn inner_class_images_are_trivial() {
        let sym = SymTable::new(5).unwrap();
        let g = sym.rank(&Permutation::parse_cycles("(1,3,5)", 5).unwrap());
        let a = AutomorphismTable::conjugation(&sym, g);
        for j in 1..=2 {
            let id = InvolutionClassId::new(5, j).unwrap();
            assert_eq!(class_image(&sym, &a, id).unwrap(), id);
        }
    }
}
