//! The exceptional automorphism of `Sym_6` from antipodally labeled
//! icosahedra.
//!
//! The combinatorial model is the gyroelongated pentagonal bipyramid:
//!
//! | ids (1-based) | role                                  |
//! |---------------|---------------------------------------|
//! | 1             | top apex `T`                          |
//! | 2..=6         | upper ring `U0..U4`                   |
//! | 7..=11        | lower ring `L0..L4`, `Lk` sits between `Uk` and `Uk+1` |
//! | 12            | bottom apex `B`                       |
//!
//! Antipodes are `T <-> B` and `Uk <-> L(k+2 mod 5)`. Faces are listed
//! counterclockwise seen from outside: `(T, Uk, Uk+1)`, `(Uk+1, Uk, Lk)`,
//! `(Uk+1, Lk, Lk+1)` and `(B, Lk+1, Lk)`.
//!
//! A labeling assigns labels `1..6` to the six antipodal pairs and is stored
//! as a [`Permutation`] sending pair index to label. Rotations act on the
//! right (`L ↦ L ∘ ρ⁻¹`), relabelings on the left (`L ↦ σ ∘ L`).

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::aut::AutomorphismTable;
use crate::error::{integrity, Result};
use crate::graph::Graph;
use crate::perm::{enumerate_sym, PermRecord, Permutation, SymTable};

pub const LETTERS: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

/// Raw model data with 1-based vertex ids, as published in JSON exports and
/// accepted from fixture files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelTables {
    pub faces: Vec<[usize; 3]>,
    pub antipode: Vec<usize>,
}

impl ModelTables {
    pub fn standard() -> Self {
        const T: usize = 0;
        const B: usize = 11;
        let u = |k: usize| 1 + k % 5;
        let l = |k: usize| 6 + k % 5;
        let mut faces = Vec::with_capacity(20);
        for k in 0..5 {
            faces.push([T, u(k), u(k + 1)]);
        }
        for k in 0..5 {
            faces.push([u(k + 1), u(k), l(k)]);
            faces.push([u(k + 1), l(k), l(k + 1)]);
        }
        for k in 0..5 {
            faces.push([B, l(k + 1), l(k)]);
        }
        let mut antipode = vec![0; 12];
        antipode[T] = B;
        antipode[B] = T;
        for k in 0..5 {
            antipode[u(k)] = l(k + 2);
            antipode[l(k + 2)] = u(k);
        }
        ModelTables {
            faces: faces.iter().map(|f| f.map(|v| v + 1)).collect(),
            antipode: antipode.iter().map(|v| v + 1).collect(),
        }
    }
}

/// A validated combinatorial icosahedron with oriented faces.
#[derive(Clone, Debug)]
pub struct IcosahedronModel {
    faces: Vec<[usize; 3]>,
    antipode: Vec<usize>,
    skeleton: Graph,
    /// Antipodal pair index of each vertex, pairs ordered by least vertex.
    pair_of: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

fn normalize_face(f: [usize; 3]) -> [usize; 3] {
    // rotate so the least vertex comes first, keeping the cyclic order
    let k = (0..3).min_by_key(|&i| f[i]).unwrap();
    [f[k], f[(k + 1) % 3], f[(k + 2) % 3]]
}

fn sorted_face(f: [usize; 3]) -> [usize; 3] {
    let mut s = f;
    s.sort_unstable();
    s
}

pub fn build_model() -> IcosahedronModel {
    IcosahedronModel::from_tables(&ModelTables::standard()).expect("standard model is valid")
}

impl IcosahedronModel {
    /// Validates a model; each failure names the violated invariant.
    pub fn from_tables(t: &ModelTables) -> Result<Self> {
        if t.antipode.len() != 12 {
            return Err(integrity("icosa-vertex-count", format!("{} vertices", t.antipode.len())));
        }
        if t.faces.len() != 20 {
            return Err(integrity("icosa-face-count", format!("{} faces", t.faces.len())));
        }
        let bad_id = |v: usize| v == 0 || v > 12;
        if t.antipode.iter().any(|&v| bad_id(v)) || t.faces.iter().flatten().any(|&v| bad_id(v)) {
            return Err(integrity("icosa-vertex-ids", "vertex ids must lie in 1..=12"));
        }
        let faces: Vec<[usize; 3]> = t.faces.iter().map(|f| f.map(|v| v - 1)).collect();
        let antipode: Vec<usize> = t.antipode.iter().map(|v| v - 1).collect();

        let mut directed = BTreeSet::new();
        for f in &faces {
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(integrity("icosa-face-triangle", format!("degenerate face {f:?}")));
            }
            for i in 0..3 {
                if !directed.insert((f[i], f[(i + 1) % 3])) {
                    return Err(integrity(
                        "icosa-orientation",
                        format!("directed edge {}->{} used twice", f[i] + 1, f[(i + 1) % 3] + 1),
                    ));
                }
            }
        }
        if directed.iter().any(|&(a, b)| !directed.contains(&(b, a))) {
            return Err(integrity("icosa-orientation", "faces do not close up consistently"));
        }
        let edges: Vec<(usize, usize)> = directed.iter().copied().filter(|(a, b)| a < b).collect();
        let skeleton = Graph::new(12, &edges)?;
        if skeleton.edge_count() != 30 || !skeleton.is_regular(5) {
            return Err(integrity("icosa-degree", "skeleton must be 5-regular with 30 edges"));
        }

        if (0..12).any(|v| antipode[v] == v || antipode[antipode[v]] != v) {
            return Err(integrity("icosa-antipode-involution", "antipode is not a fixed-point-free involution"));
        }
        for v in 0..12 {
            if skeleton.distances_from(v)[antipode[v]] != Some(3) {
                return Err(integrity(
                    "icosa-antipode-distance",
                    format!("vertices {} and {} are not at distance 3", v + 1, antipode[v] + 1),
                ));
            }
        }
        let face_set: BTreeSet<[usize; 3]> = faces.iter().map(|&f| sorted_face(f)).collect();
        for f in &faces {
            let g = sorted_face(f.map(|v| antipode[v]));
            if !face_set.contains(&g) || g.iter().any(|v| f.contains(v)) {
                return Err(integrity(
                    "icosa-antipodal-faces",
                    format!("antipode of face {:?} is not a disjoint face", f.map(|v| v + 1)),
                ));
            }
        }

        let mut pairs: Vec<(usize, usize)> = (0..12)
            .filter(|&v| v < antipode[v])
            .map(|v| (v, antipode[v]))
            .collect();
        pairs.sort();
        let mut pair_of = vec![0; 12];
        for (p, &(a, b)) in pairs.iter().enumerate() {
            pair_of[a] = p;
            pair_of[b] = p;
        }
        Ok(IcosahedronModel {
            faces,
            antipode,
            skeleton,
            pair_of,
            pairs,
        })
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn antipode(&self, v: usize) -> usize {
        self.antipode[v]
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn pair_of(&self, v: usize) -> usize {
        self.pair_of[v]
    }

    /// Antipodal pairs as 0-based vertex ids.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn tables(&self) -> ModelTables {
        ModelTables {
            faces: self.faces.iter().map(|f| f.map(|v| v + 1)).collect(),
            antipode: self.antipode.iter().map(|v| v + 1).collect(),
        }
    }

    /// Label triples of the faces of `graph_faces` under `labeling`.
    fn triples_of(&self, faces: &[[usize; 3]], labeling: &Permutation) -> BTreeSet<[u8; 3]> {
        faces
            .iter()
            .map(|f| {
                let mut t = f.map(|v| labeling.image(self.pair_of[v]) as u8 + 1);
                t.sort_unstable();
                t
            })
            .collect()
    }
}

/// All adjacency-preserving bijections from `from` onto `to` (both on the
/// same vertex count), by backtracking in vertex order. Stops after `limit`
/// maps.
fn adjacency_maps(from: &Graph, to: &Graph, limit: usize) -> Vec<Vec<usize>> {
    fn extend(
        from: &Graph,
        to: &Graph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let v = map.len();
        if v == from.vertex_count() {
            out.push(map.clone());
            return;
        }
        for w in 0..to.vertex_count() {
            if used[w] || from.degree(v) != to.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| from.has_edge(u, v) == to.has_edge(map[u], w));
            if ok {
                used[w] = true;
                map.push(w);
                extend(from, to, map, used, limit, out);
                map.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    if from.vertex_count() == to.vertex_count() {
        extend(from, to, &mut Vec::new(), &mut vec![false; to.vertex_count()], limit, &mut out);
    }
    out
}

#[derive(Clone, Debug)]
pub struct RotationGroup {
    /// Orientation-preserving symmetries as vertex maps.
    pub rotations: Vec<Vec<usize>>,
    /// Size of the full symmetry group found on the way.
    pub full_order: usize,
    /// Induced permutation of the antipodal pairs, one per rotation.
    pub pair_actions: Vec<Permutation>,
}

/// Face-preserving vertex permutations, filtered to those carrying oriented
/// faces onto oriented faces.
pub fn rotation_group(m: &IcosahedronModel) -> Result<RotationGroup> {
    let face_set: BTreeSet<[usize; 3]> = m.faces.iter().map(|&f| sorted_face(f)).collect();
    let oriented: BTreeSet<[usize; 3]> = m.faces.iter().map(|&f| normalize_face(f)).collect();
    let symmetries: Vec<Vec<usize>> = adjacency_maps(&m.skeleton, &m.skeleton, usize::MAX)
        .into_iter()
        .filter(|s| m.faces.iter().all(|f| face_set.contains(&sorted_face(f.map(|v| s[v])))))
        .collect();
    if symmetries.len() != 120 {
        return Err(integrity("icosa-symmetry-count", format!("{} symmetries", symmetries.len())));
    }
    let mut rotations = Vec::new();
    for s in &symmetries {
        let kept = m
            .faces
            .iter()
            .filter(|f| oriented.contains(&normalize_face(f.map(|v| s[v]))))
            .count();
        match kept {
            20 => rotations.push(s.clone()),
            0 => {}
            _ => return Err(integrity("icosa-orientation", "symmetry mixes face orientations")),
        }
    }
    if rotations.len() != 60 {
        return Err(integrity("icosa-rotation-count", format!("{} rotations", rotations.len())));
    }
    let antipodal: Vec<usize> = m.antipode.clone();
    if rotations.contains(&antipodal) || !symmetries.contains(&antipodal) {
        return Err(integrity("icosa-antipodal-map", "antipodal map must be an orientation-reversing symmetry"));
    }
    let pair_actions = rotations
        .iter()
        .map(|r| {
            let images = (0..6).map(|p| m.pair_of[r[m.pairs[p].0]] as u8).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RotationGroup {
        rotations,
        full_order: symmetries.len(),
        pair_actions,
    })
}

/// An orbit of antipodal labelings under rotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingClass {
    /// Lexicographically least labeling in the orbit.
    pub representative: Permutation,
    pub size: usize,
    /// The 10 label triples appearing on faces.
    pub triples: BTreeSet<[u8; 3]>,
}

pub fn all_triples() -> BTreeSet<[u8; 3]> {
    let mut out = BTreeSet::new();
    for a in 1..=6u8 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                out.insert([a, b, c]);
            }
        }
    }
    out
}

/// The whole construction: model, rotations, the 12 classes, the dual
/// pairing, letters and the induced map `φ: Sym_X → Sym_A`.
pub struct IcosaConstruction {
    pub model: IcosahedronModel,
    pub rotations: RotationGroup,
    pub classes: Vec<LabelingClass>,
    class_of: HashMap<Permutation, usize>,
    /// `dual[c]` is the class with complementary triples.
    pub dual: Vec<usize>,
    /// Dual pairs in letter order; `pairs[k]` carries letter `LETTERS[k]`.
    pub pairs: Vec<(usize, usize)>,
    letter_of_class: Vec<usize>,
    sym: SymTable,
    phi: Vec<u16>,
}

impl IcosaConstruction {
    pub fn build() -> Result<Self> {
        Self::from_model(build_model())
    }

    pub fn from_model(model: IcosahedronModel) -> Result<Self> {
        let rotations = rotation_group(&model)?;
        let (classes, class_of) = labeling_classes(&model, &rotations)?;
        let dual = classes
            .iter()
            .map(|c| dual_index(&classes, c))
            .collect::<Result<Vec<_>>>()?;
        if (0..classes.len()).any(|c| dual[c] == c || dual[dual[c]] != c) {
            return Err(integrity("icosa-dual-involution", "dual is not a fixed-point-free involution"));
        }
        let mut pairs: Vec<(usize, usize)> = (0..classes.len())
            .filter(|&c| c < dual[c])
            .map(|c| (c, dual[c]))
            .collect();
        pairs.sort_by_key(|&(a, b)| {
            let ta: Vec<[u8; 3]> = classes[a].triples.iter().copied().collect();
            let tb: Vec<[u8; 3]> = classes[b].triples.iter().copied().collect();
            ta.min(tb)
        });
        if pairs.len() != 6 {
            return Err(integrity("icosa-dual-pairs", format!("{} dual pairs", pairs.len())));
        }
        let mut letter_of_class = vec![0; classes.len()];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            letter_of_class[a] = k;
            letter_of_class[b] = k;
        }
        let mut construction = IcosaConstruction {
            model,
            rotations,
            classes,
            class_of,
            dual,
            pairs,
            letter_of_class,
            sym: SymTable::new(6)?,
            phi: Vec::new(),
        };
        let sym = &construction.sym;
        let mut phi = Vec::with_capacity(sym.order());
        for sigma in sym.elements() {
            let image = construction.induced_letter_permutation(sigma)?;
            phi.push(sym.rank(&image) as u16);
        }
        construction.phi = phi;
        Ok(construction)
    }

    pub fn sym(&self) -> &SymTable {
        &self.sym
    }

    pub fn class_of(&self, labeling: &Permutation) -> usize {
        self.class_of[labeling]
    }

    pub fn letter_of_class(&self, c: usize) -> usize {
        self.letter_of_class[c]
    }

    /// The class of the labeling obtained by reading `c` on the
    /// distance-2 graph.
    pub fn dual_via_skeleton(&self, c: usize) -> Result<usize> {
        let m = &self.model;
        let d2 = m.skeleton.distance_graph(2);
        if d2.vertex_count() != 12 || d2.edge_count() != 30 || !d2.is_regular(5) {
            return Err(integrity("icosa-distance2-graph", "distance-2 graph is not 5-regular on 12 vertices"));
        }
        for v in 0..12 {
            if d2.distances_from(v)[m.antipode[v]] != Some(3) {
                return Err(integrity("icosa-distance2-antipode", "distance-2 graph changes antipodes"));
            }
        }
        let psi = adjacency_maps(&m.skeleton, &d2, 1)
            .pop()
            .ok_or_else(|| integrity("icosa-distance2-graph", "distance-2 graph is not an icosahedron"))?;
        let label = &self.classes[c].representative;
        let images = (0..6).map(|p| label.image(m.pair_of[psi[m.pairs[p].0]]) as u8).collect();
        let pulled = Permutation::from_images(images)?;
        Ok(self.class_of(&pulled))
    }

    /// `φ(σ)`: the permutation of dual pairs (letters) induced by relabeling.
    fn induced_letter_permutation(&self, sigma: &Permutation) -> Result<Permutation> {
        let mut images = vec![0u8; 6];
        for (k, &(a, b)) in self.pairs.iter().enumerate() {
            let ta = self.letter_of_class[self.class_of(&sigma.compose(&self.classes[a].representative)?)];
            let tb = self.letter_of_class[self.class_of(&sigma.compose(&self.classes[b].representative)?)];
            if ta != tb {
                return Err(integrity("icosa-phi", format!("{sigma} splits dual pair {}", LETTERS[k])));
            }
            images[k] = ta as u8;
        }
        Permutation::from_images(images)
            .map_err(|_| integrity("icosa-phi", format!("{sigma} does not permute the dual pairs")))
    }

    /// `φ(σ)` as a permutation of letter indices `0..6`.
    pub fn phi(&self, sigma: &Permutation) -> Permutation {
        self.sym.element(self.phi[self.sym.rank(sigma)] as usize).clone()
    }

    /// `φ` as a map on element indices; validated as a bijective
    /// homomorphism over all 720² pairs.
    pub fn phi_table(&self) -> Result<AutomorphismTable> {
        AutomorphismTable::from_images(&self.sym, self.phi.clone())
    }

    /// The automorphism `σ ↦ ι φ(σ) ι⁻¹` of `Sym_6`, where `ident = ι` sends
    /// letter index `k` to number `ι(k)`.
    pub fn outer_from_identification(&self, ident: &Permutation) -> AutomorphismTable {
        let g = self.sym.rank(ident);
        let images = self
            .phi
            .iter()
            .map(|&x| self.sym.conj(x as usize, g) as u16)
            .collect();
        AutomorphismTable::from_images(&self.sym, images).expect("conjugate of an isomorphism")
    }

    /// Every identification, in lexicographic order of `ident`.
    pub fn all_identifications(&self) -> Vec<AutomorphismTable> {
        self.sym
            .elements()
            .iter()
            .map(|ident| self.outer_from_identification(ident))
            .collect()
    }

    pub fn export(&self) -> IcosaExport {
        let m = &self.model;
        let transposition_images = (1..=6)
            .flat_map(|a| (a + 1..=6).map(move |b| (a, b)))
            .map(|(a, b)| {
                let t = Permutation::transposition(6, a, b).expect("valid transposition");
                let img = self.phi(&t);
                PhiEntry {
                    sigma: PermRecord::from(&t),
                    image: PermRecord::from(&img),
                    image_letters: letter_cycles(&img),
                }
            })
            .collect();
        IcosaExport {
            model: m.tables(),
            antipodal_pairs: m.pairs.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(k, c)| ClassRecord {
                    index: k,
                    representative: c.representative.one_based(),
                    size: c.size,
                    triples: c.triples.iter().copied().collect(),
                    dual: self.dual[k],
                    letter: LETTERS[self.letter_of_class[k]],
                })
                .collect(),
            dual_pairs: self
                .pairs
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| DualPairRecord {
                    letter: LETTERS[k],
                    classes: [a, b],
                })
                .collect(),
            phi: self
                .sym
                .elements()
                .iter()
                .map(|s| {
                    let img = self.phi(s);
                    PhiEntry {
                        sigma: PermRecord::from(s),
                        image: PermRecord::from(&img),
                        image_letters: letter_cycles(&img),
                    }
                })
                .collect(),
            transposition_images,
        }
    }
}

fn labeling_classes(
    m: &IcosahedronModel,
    rg: &RotationGroup,
) -> Result<(Vec<LabelingClass>, HashMap<Permutation, usize>)> {
    let inverses: Vec<Permutation> = rg.pair_actions.iter().map(Permutation::inverse).collect();
    let labelings = enumerate_sym(6)?;
    let mut class_of: HashMap<Permutation, usize> = HashMap::new();
    let mut classes = Vec::new();
    // labelings come in lexicographic order, so the first unseen one is the
    // least element of its orbit
    for l in &labelings {
        if class_of.contains_key(l) {
            continue;
        }
        let orbit: BTreeSet<Permutation> = inverses.iter().map(|ri| l.compose_unchecked(ri)).collect();
        if orbit.len() != 60 {
            return Err(integrity("icosa-orbit-size", format!("orbit of {l} has {} labelings", orbit.len())));
        }
        let idx = classes.len();
        for o in &orbit {
            class_of.insert(o.clone(), idx);
        }
        let triples = m.triples_of(&m.faces, l);
        if triples.len() != 10 {
            return Err(integrity("icosa-face-triples", format!("{} distinct triples", triples.len())));
        }
        classes.push(LabelingClass {
            representative: l.clone(),
            size: orbit.len(),
            triples,
        });
    }
    if classes.len() != 12 || class_of.len() != 720 {
        return Err(integrity("icosa-class-count", format!("{} classes", classes.len())));
    }
    Ok((classes, class_of))
}

fn dual_index(classes: &[LabelingClass], c: &LabelingClass) -> Result<usize> {
    let complement: BTreeSet<[u8; 3]> = all_triples().difference(&c.triples).copied().collect();
    classes
        .iter()
        .position(|d| d.triples == complement)
        .ok_or_else(|| integrity("icosa-dual", format!("no complementary class for {}", c.representative)))
}

/// Cycle notation over letters `a..f`.
pub fn letter_cycles(p: &Permutation) -> String {
    p.to_string()
        .chars()
        .map(|ch| match ch.to_digit(10) {
            Some(d) if (1..=6).contains(&d) => LETTERS[d as usize - 1],
            _ => ch,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub index: usize,
    /// Label of each antipodal pair, pairs in `antipodal_pairs` order.
    pub representative: Vec<usize>,
    pub size: usize,
    pub triples: Vec<[u8; 3]>,
    pub dual: usize,
    pub letter: char,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualPairRecord {
    pub letter: char,
    pub classes: [usize; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiEntry {
    pub sigma: PermRecord,
    pub image: PermRecord,
    pub image_letters: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IcosaExport {
    pub model: ModelTables,
    pub antipodal_pairs: Vec<[usize; 2]>,
    pub classes: Vec<ClassRecord>,
    pub dual_pairs: Vec<DualPairRecord>,
    pub phi: Vec<PhiEntry>,
    pub transposition_images: Vec<PhiEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn standard_model_invariants() {
        let m = build_model();
        assert_eq!(m.faces().len(), 20);
        assert_eq!(m.skeleton().vertex_count(), 12);
        assert_eq!(m.skeleton().edge_count(), 30);
        assert_eq!(m.pairs().len(), 6);
        for v in 0..12 {
            assert_eq!(m.skeleton().distances_from(v)[m.antipode(v)], Some(3));
        }
        assert_eq!(m.skeleton().girth(), Some(3));
    }

    fn expect_invariant(t: &ModelTables, name: &str) {
        match IcosahedronModel::from_tables(t) {
            Err(Error::Integrity { invariant, .. }) => assert_eq!(invariant, name),
            other => panic!("expected {name}, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_models_name_the_violation() {
        let mut t = ModelTables::standard();
        t.faces.pop();
        expect_invariant(&t, "icosa-face-count");

        let mut t = ModelTables::standard();
        t.faces[0].swap(1, 2);
        expect_invariant(&t, "icosa-orientation");

        let mut t = ModelTables::standard();
        t.antipode[0] = 2;
        t.antipode[1] = 1;
        t.antipode[11] = 12;
        expect_invariant(&t, "icosa-antipode-involution");

        // T <-> U0 and B <-> L2 is an involution but the distances are wrong
        let mut t = ModelTables::standard();
        t.antipode[0] = 2;
        t.antipode[1] = 1;
        t.antipode[11] = 9;
        t.antipode[8] = 12;
        expect_invariant(&t, "icosa-antipode-distance");
    }

    #[test]
    fn rotations() {
        let m = build_model();
        let rg = rotation_group(&m).unwrap();
        assert_eq!(rg.full_order, 120);
        assert_eq!(rg.rotations.len(), 60);
        assert!(rg.rotations.contains(&(0..12).collect::<Vec<_>>()));
        // only the identity rotation fixes every antipodal pair
        let fixing = rg.pair_actions.iter().filter(|p| p.is_identity()).count();
        assert_eq!(fixing, 1);
    }

    #[test]
    fn letter_rendering() {
        let p = Permutation::parse_cycles("(1,2)(3,4)(5,6)", 6).unwrap();
        assert_eq!(letter_cycles(&p), "(a,b)(c,d)(e,f)");
    }
}
