//! The complete graph `K_6` read through `Sym_6`: transpositions are edges,
//! triple transpositions are factors (perfect matchings), stars collect the
//! five edges at a vertex and factorizations split the 15 edges into five
//! factors. Edges and factors are the points and lines of `GQ(2,2)`, whose
//! incidence graph is Tutte's 8-cage.

use std::fmt;

use serde::Serialize;

use crate::aut::AutomorphismTable;
use crate::error::{integrity, Error, Result};
use crate::graph::Graph;
use crate::graph_auto::VertexColoring;
use crate::perm::{Permutation, SymTable};

/// An edge `{a, b}` of `K_6`, 1-based with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    a: u8,
    b: u8,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > 6 || b > 6 {
            return Err(Error::Precondition(format!("{{{a},{b}}} is not an edge of K6")));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge {
            a: a as u8,
            b: b as u8,
        })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a as usize, self.b as usize)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a as usize == v || self.b as usize == v
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        !other.contains(self.a as usize) && !other.contains(self.b as usize)
    }

    pub fn transposition(&self) -> Permutation {
        Permutation::transposition(6, self.a as usize, self.b as usize).expect("valid edge")
    }

    pub fn from_transposition(t: &Permutation) -> Option<Edge> {
        if t.degree() != 6 || !t.is_transposition() {
            return None;
        }
        let moved: Vec<usize> = (0..6).filter(|&k| t.image(k) != k).collect();
        Edge::new(moved[0] + 1, moved[1] + 1).ok()
    }

    /// The edge `{g(a), g(b)}`.
    pub fn permuted(&self, g: &Permutation) -> Edge {
        Edge::new(g.image(self.a as usize - 1) + 1, g.image(self.b as usize - 1) + 1)
            .expect("bijection keeps endpoints distinct")
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// A perfect matching of `K_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factor {
    edges: [Edge; 3],
}

impl Factor {
    pub fn new(mut edges: [Edge; 3]) -> Result<Self> {
        edges.sort();
        let disjoint = edges[0].is_disjoint(&edges[1])
            && edges[0].is_disjoint(&edges[2])
            && edges[1].is_disjoint(&edges[2]);
        if !disjoint {
            return Err(Error::Precondition(format!(
                "edges {} {} {} are not pairwise disjoint",
                edges[0], edges[1], edges[2]
            )));
        }
        Ok(Factor { edges })
    }

    pub fn edges(&self) -> &[Edge; 3] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn is_disjoint(&self, other: &Factor) -> bool {
        self.edges.iter().all(|e| !other.contains(e))
    }

    pub fn involution(&self) -> Permutation {
        let cycles: Vec<[usize; 2]> = self
            .edges
            .iter()
            .map(|e| [e.a as usize, e.b as usize])
            .collect();
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(6, &refs).expect("disjoint edges")
    }

    pub fn from_involution(s: &Permutation) -> Option<Factor> {
        if s.degree() != 6 || s.cycle_type().parts() != [2, 2, 2] {
            return None;
        }
        let mut edges = Vec::with_capacity(3);
        for c in s.cycles() {
            edges.push(Edge::new(c[0] + 1, c[1] + 1).ok()?);
        }
        Factor::new([edges[0], edges[1], edges[2]]).ok()
    }

    pub fn permuted(&self, g: &Permutation) -> Factor {
        Factor::new(self.edges.map(|e| e.permuted(g))).expect("bijection keeps matching")
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.edges[0], self.edges[1], self.edges[2])
    }
}

/// Five pairwise disjoint factors covering all 15 edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factorization {
    factors: [Factor; 5],
}

impl Factorization {
    pub fn new(mut factors: [Factor; 5]) -> Result<Self> {
        factors.sort();
        let mut covered: Vec<Edge> = factors.iter().flat_map(|f| f.edges).collect();
        covered.sort();
        covered.dedup();
        if covered.len() != 15 {
            return Err(Error::Precondition("factors do not partition the 15 edges".into()));
        }
        Ok(Factorization { factors })
    }

    pub fn factors(&self) -> &[Factor; 5] {
        &self.factors
    }

    pub fn contains(&self, f: &Factor) -> bool {
        self.factors.contains(f)
    }

    pub fn permuted(&self, g: &Permutation) -> Factorization {
        Factorization::new(self.factors.map(|f| f.permuted(g))).expect("bijection keeps partition")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The five edges at a vertex of `K_6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeStar {
    pub center: usize,
    pub edges: Vec<Edge>,
}

/// All 15 edges, lexicographically ordered.
pub fn edges() -> Vec<Edge> {
    let mut out = Vec::with_capacity(15);
    for a in 1..=6 {
        for b in a + 1..=6 {
            out.push(Edge::new(a, b).unwrap());
        }
    }
    out
}

/// All 15 perfect matchings, ordered by their sorted edge lists.
pub fn factors() -> Vec<Factor> {
    let es = edges();
    let mut out = Vec::new();
    for (i, e0) in es.iter().enumerate() {
        for (j, e1) in es.iter().enumerate().skip(i + 1) {
            for e2 in es.iter().skip(j + 1) {
                if let Ok(f) = Factor::new([*e0, *e1, *e2]) {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn stars() -> Vec<EdgeStar> {
    (1..=6)
        .map(|center| EdgeStar {
            center,
            edges: edges().into_iter().filter(|e| e.contains(center)).collect(),
        })
        .collect()
}

/// All partitions of the edges into five factors, by backtracking.
pub fn factorizations() -> Vec<Factorization> {
    fn extend(fs: &[Factor], chosen: &mut Vec<Factor>, start: usize, out: &mut Vec<Factorization>) {
        if chosen.len() == 5 {
            let arr: [Factor; 5] = chosen.clone().try_into().unwrap();
            out.push(Factorization::new(arr).expect("disjoint factors cover all edges"));
            return;
        }
        for k in start..fs.len() {
            if chosen.iter().all(|c| c.is_disjoint(&fs[k])) {
                chosen.push(fs[k]);
                extend(fs, chosen, k + 1, out);
                chosen.pop();
            }
        }
    }
    let fs = factors();
    let mut out = Vec::new();
    extend(&fs, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

/// Permutation of the six factorizations (in canonical order) induced by
/// relabeling the vertices of `K_6` with `g`.
pub fn factorization_action(g: &Permutation) -> Permutation {
    let fzs = factorizations();
    let images = fzs
        .iter()
        .map(|fz| fzs.binary_search(&fz.permuted(g)).unwrap() as u8)
        .collect();
    Permutation::from_images(images).expect("action permutes factorizations")
}

/// A point-line geometry with lines stored as sorted point-index lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    /// For each line, the indices of its points.
    pub incidence: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn is_incident(&self, point: usize, line: usize) -> bool {
        self.incidence[line].binary_search(&point).is_ok()
    }

    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&l| self.is_incident(point, l))
            .collect()
    }

    /// Points become lines and lines become points.
    pub fn dual(&self) -> IncidenceStructure {
        IncidenceStructure {
            points: self.lines.clone(),
            lines: self.points.clone(),
            incidence: (0..self.points.len()).map(|p| self.lines_through(p)).collect(),
        }
    }

    /// Checks the generalized quadrangle axioms with parameters `(s, t)`.
    pub fn check_gq(&self, s: usize, t: usize) -> Result<()> {
        for (l, pts) in self.incidence.iter().enumerate() {
            if pts.len() != s + 1 {
                return Err(integrity(
                    "gq-line-size",
                    format!("line {} has {} points", self.lines[l], pts.len()),
                ));
            }
        }
        for p in 0..self.points.len() {
            let k = self.lines_through(p).len();
            if k != t + 1 {
                return Err(integrity(
                    "gq-point-degree",
                    format!("point {} is on {k} lines", self.points[p]),
                ));
            }
        }
        for p in 0..self.points.len() {
            for q in p + 1..self.points.len() {
                let common = (0..self.lines.len())
                    .filter(|&l| self.is_incident(p, l) && self.is_incident(q, l))
                    .count();
                if common > 1 {
                    return Err(integrity(
                        "gq-two-points-one-line",
                        format!("points {} and {} share {common} lines", self.points[p], self.points[q]),
                    ));
                }
            }
        }
        for p in 0..self.points.len() {
            let through = self.lines_through(p);
            for l in 0..self.lines.len() {
                if self.is_incident(p, l) {
                    continue;
                }
                let meeting = through
                    .iter()
                    .filter(|&&m| self.incidence[m].iter().any(|&q| self.is_incident(q, l)))
                    .count();
                if meeting != 1 {
                    return Err(integrity(
                        "gq-unique-transversal",
                        format!(
                            "point {} has {meeting} lines meeting line {}",
                            self.points[p], self.lines[l]
                        ),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// `GQ(2,2)` with edges as points and factors as lines.
pub fn doily() -> Result<IncidenceStructure> {
    let es = edges();
    let fs = factors();
    let gq = IncidenceStructure {
        points: es.iter().map(Edge::to_string).collect(),
        lines: fs.iter().map(Factor::to_string).collect(),
        incidence: fs
            .iter()
            .map(|f| f.edges.iter().map(|e| es.binary_search(e).unwrap()).collect())
            .collect(),
    };
    if gq.points.len() != 15 || gq.lines.len() != 15 {
        return Err(integrity("doily-size", "expected 15 points and 15 lines"));
    }
    gq.check_gq(2, 2)?;
    Ok(gq)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    White,
    Black,
}

/// The incidence graph of the doily: vertices `0..15` are the edges of
/// `K_6` (white), vertices `15..30` are the factors (black).
#[derive(Clone, Debug)]
pub struct TutteGraph {
    pub graph: Graph,
    pub edges: Vec<Edge>,
    pub factors: Vec<Factor>,
}

impl TutteGraph {
    pub fn white_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part(&self, v: usize) -> Part {
        if v < self.edges.len() {
            Part::White
        } else {
            Part::Black
        }
    }

    /// The transposition (white) or triple transposition (black) a vertex
    /// stands for.
    pub fn involution(&self, v: usize) -> Permutation {
        match self.part(v) {
            Part::White => self.edges[v].transposition(),
            Part::Black => self.factors[v - self.edges.len()].involution(),
        }
    }

    pub fn white_vertex_of(&self, t: &Permutation) -> Option<usize> {
        let e = Edge::from_transposition(t)?;
        self.edges.binary_search(&e).ok()
    }

    pub fn black_vertex_of(&self, s: &Permutation) -> Option<usize> {
        let f = Factor::from_involution(s)?;
        self.factors
            .binary_search(&f)
            .ok()
            .map(|k| k + self.edges.len())
    }

    pub fn coloring(&self) -> VertexColoring {
        VertexColoring(
            (0..self.graph.vertex_count())
                .map(|v| match self.part(v) {
                    Part::White => 0,
                    Part::Black => 1,
                })
                .collect(),
        )
    }

    pub fn label(&self, v: usize) -> String {
        match self.part(v) {
            Part::White => format!("e{}", self.edges[v]),
            Part::Black => {
                let f = &self.factors[v - self.edges.len()];
                format!("f{}_{}_{}", f.edges[0], f.edges[1], f.edges[2])
            }
        }
    }

    /// Graphviz DOT, one filled circle per vertex coloured by part.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tutte_8_cage {\n  node [shape=circle, style=filled];\n");
        for v in 0..self.graph.vertex_count() {
            let (text, fill, font) = match self.part(v) {
                Part::White => (self.edges[v].to_string(), "white", "black"),
                Part::Black => (self.factors[v - self.edges.len()].to_string(), "black", "white"),
            };
            out.push_str(&format!(
                "  {} [label=\"{text}\", fillcolor={fill}, fontcolor={font}];\n",
                self.label(v)
            ));
        }
        for (a, b) in self.graph.edges() {
            out.push_str(&format!("  {} -- {};\n", self.label(a), self.label(b)));
        }
        out.push_str("}\n");
        out
    }
}

/// Tutte's 8-cage, checked to be 30-vertex, cubic, bipartite, girth 8.
pub fn tutte_graph() -> Result<TutteGraph> {
    let es = edges();
    let fs = factors();
    let mut adj = Vec::new();
    for (k, f) in fs.iter().enumerate() {
        for e in &f.edges {
            adj.push((es.binary_search(e).unwrap(), es.len() + k));
        }
    }
    let graph = Graph::new(es.len() + fs.len(), &adj)?;
    let cage = TutteGraph {
        graph,
        edges: es,
        factors: fs,
    };
    if cage.graph.vertex_count() != 30 {
        return Err(integrity("cage-order", format!("{} vertices", cage.graph.vertex_count())));
    }
    if !cage.graph.is_regular(3) {
        return Err(integrity("cage-cubic", "not 3-regular"));
    }
    let side = cage
        .graph
        .bipartition()
        .ok_or_else(|| integrity("cage-bipartite", "odd cycle found"))?;
    if (0..30).any(|v| (side[v] == side[0]) != (cage.part(v) == Part::White)) {
        return Err(integrity("cage-bipartite", "bipartition differs from the edge/factor split"));
    }
    match cage.graph.girth() {
        Some(8) => Ok(cage),
        other => Err(integrity("cage-girth", format!("girth {other:?}"))),
    }
}

/// DOT for an incidence structure drawn as its bipartite incidence graph:
/// points as white circles, lines as black boxes.
pub fn incidence_dot(name: &str, gq: &IncidenceStructure) -> String {
    let mut out = format!("graph {name} {{\n  node [style=filled];\n");
    for (p, label) in gq.points.iter().enumerate() {
        out.push_str(&format!(
            "  p{p} [label=\"{label}\", shape=circle, fillcolor=white];\n"
        ));
    }
    for (l, label) in gq.lines.iter().enumerate() {
        out.push_str(&format!(
            "  l{l} [label=\"{label}\", shape=box, fillcolor=black, fontcolor=white];\n"
        ));
    }
    for (l, pts) in gq.incidence.iter().enumerate() {
        for p in pts {
            out.push_str(&format!("  p{p} -- l{l};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// An incidence-preserving exchange of the doily's points and lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correlation {
    /// Edge index -> factor index.
    pub point_to_line: Vec<usize>,
    /// Factor index -> edge index.
    pub line_to_point: Vec<usize>,
}

impl Correlation {
    pub fn preserves_incidence(&self, gq: &IncidenceStructure) -> bool {
        (0..gq.points.len()).all(|p| {
            (0..gq.lines.len()).all(|l| {
                gq.is_incident(p, l) == gq.is_incident(self.line_to_point[l], self.point_to_line[p])
            })
        })
    }

    pub fn is_polarity(&self) -> bool {
        (0..self.point_to_line.len()).all(|p| self.line_to_point[self.point_to_line[p]] == p)
    }
}

/// Transports an automorphism of `Sym_6` that sends transpositions to
/// triple transpositions onto the doily.
pub fn correlation_from_automorphism(sym: &SymTable, a: &AutomorphismTable) -> Result<Correlation> {
    let es = edges();
    let fs = factors();
    let point_to_line = es
        .iter()
        .map(|e| {
            let img = a.apply_perm(sym, &e.transposition());
            Factor::from_involution(&img)
                .and_then(|f| fs.binary_search(&f).ok())
                .ok_or_else(|| {
                    Error::Precondition(format!("automorphism sends {} to {img}, not a factor", e.transposition()))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let line_to_point = fs
        .iter()
        .map(|f| {
            let img = a.apply_perm(sym, &f.involution());
            Edge::from_transposition(&img)
                .and_then(|e| es.binary_search(&e).ok())
                .ok_or_else(|| {
                    Error::Precondition(format!("automorphism sends {} to {img}, not an edge", f.involution()))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Correlation {
        point_to_line,
        line_to_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_sym, involution_class, InvolutionClassId};

    #[test]
    fn counts() {
        assert_eq!(edges().len(), 15);
        assert_eq!(factors().len(), 15);
        assert_eq!(stars().len(), 6);
        assert!(stars().iter().all(|s| s.edges.len() == 5));
        assert_eq!(factorizations().len(), 6);
    }

    #[test]
    fn invalid_edges_rejected() {
        assert!(Edge::new(1, 1).is_err());
        assert!(Edge::new(0, 3).is_err());
        assert!(Edge::new(2, 7).is_err());
        assert_eq!(Edge::new(4, 2).unwrap(), Edge::new(2, 4).unwrap());
        let e = |a, b| Edge::new(a, b).unwrap();
        assert!(Factor::new([e(1, 2), e(2, 3), e(4, 5)]).is_err());
    }

    #[test]
    fn edges_and_factors_match_involution_classes() {
        let c1 = involution_class(InvolutionClassId::new(6, 1).unwrap()).unwrap();
        let mut ts: Vec<Permutation> = edges().iter().map(Edge::transposition).collect();
        ts.sort();
        assert_eq!(ts, c1);
        let c3 = involution_class(InvolutionClassId::new(6, 3).unwrap()).unwrap();
        let mut ss: Vec<Permutation> = factors().iter().map(Factor::involution).collect();
        ss.sort();
        assert_eq!(ss, c3);
        for f in factors() {
            assert_eq!(Factor::from_involution(&f.involution()), Some(f));
        }
    }

    #[test]
    fn incidence_counts() {
        let fs = factors();
        for e in edges() {
            assert_eq!(fs.iter().filter(|f| f.contains(&e)).count(), 3);
        }
        let fzs = factorizations();
        for f in &fs {
            assert_eq!(fzs.iter().filter(|fz| fz.contains(f)).count(), 2);
        }
    }

    #[test]
    fn doily_and_dual_are_gq22() {
        let gq = doily().unwrap();
        assert_eq!(gq.points.len(), 15);
        assert_eq!(gq.lines.len(), 15);
        gq.dual().check_gq(2, 2).unwrap();
    }

    #[test]
    fn corrupted_geometry_is_named() {
        let mut gq = doily().unwrap();
        gq.incidence[0].pop();
        match gq.check_gq(2, 2) {
            Err(Error::Integrity { invariant, .. }) => assert_eq!(invariant, "gq-line-size"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tutte_graph_properties() {
        let cage = tutte_graph().unwrap();
        assert_eq!(cage.graph.vertex_count(), 30);
        assert_eq!(cage.graph.edge_count(), 45);
        assert_eq!(cage.graph.girth(), Some(8));
        let dot = cage.to_dot();
        assert!(dot.starts_with("graph tutte_8_cage {"));
        assert_eq!(dot.matches(" -- ").count(), 45);
        assert_eq!(dot.matches("fillcolor=black").count(), 15);
    }

    #[test]
    fn sym6_acts_faithfully_and_transitively_on_factorizations() {
        let sym = enumerate_sym(6).unwrap();
        let actions: Vec<Permutation> = sym.iter().map(factorization_action).collect();
        // faithful
        let mut distinct = actions.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 720);
        // homomorphism
        let g = &sym[17];
        let h = &sym[403];
        assert_eq!(
            factorization_action(&g.compose(h).unwrap()),
            factorization_action(g).compose(&factorization_action(h)).unwrap()
        );
        // transitive
        let orbit: std::collections::BTreeSet<usize> = actions.iter().map(|a| a.image(0)).collect();
        assert_eq!(orbit.len(), 6);
    }

    #[test]
    fn star_action_is_natural() {
        let g = Permutation::parse_cycles("(1,4,2)(5,6)", 6).unwrap();
        for s in stars() {
            let moved: Vec<Edge> = s.edges.iter().map(|e| e.permuted(&g)).collect();
            let target = g.image(s.center - 1) + 1;
            assert!(moved.iter().all(|e| e.contains(target)));
        }
    }
}
