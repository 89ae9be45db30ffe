use std::collections::BTreeSet;
use std::path::Path;

use outersix::aut::{class_image, AutomorphismGroup};
use outersix::graph_auto::{cage_report, graph_aut_to_group_aut};
use outersix::icosa::{all_triples, letter_cycles, IcosaConstruction, IcosahedronModel, ModelTables};
use outersix::involution::{lemma2_survey, maximal_independent_sets, stars};
use outersix::k6::{self, correlation_from_automorphism, doily, factorizations, incidence_dot, tutte_graph};
use outersix::perm::{enumerate_sym, involution_class};
use outersix::{Error, InvolutionClassId, Permutation};
use serde_json::{json, Value};

use crate::report::Report;

/// What a command produced: a report, or raw text (DOT) plus its report.
pub enum Output {
    Report(Report),
    Raw(String, Report),
}

fn cycles(ps: &[Permutation]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn classes(n: usize) -> Result<Report, Error> {
    let mut r = Report::new("classes", json!({ "n": n }));
    let all = enumerate_sym(n)?;
    let mut rows = Vec::new();
    for j in 1..=n / 2 {
        let id = InvolutionClassId::new(n, j)?;
        let formula = id.size();
        let counted = all.iter().filter(|p| p.involution_class() == Some(id)).count() as u64;
        let generated = involution_class(id)?.len() as u64;
        r.claim(
            format!("C_{j} in Sym_{n}: cycle type {}, size {formula}", id.cycle_type()),
            formula == counted && formula == generated,
        );
        rows.push(json!({
            "j": j,
            "cycle_type": id.cycle_type().parts(),
            "size": formula,
            "enumerated": counted,
        }));
    }
    r.findings = json!({ "rows": rows });
    Ok(r)
}

pub fn lemma1(n: usize) -> Result<Report, Error> {
    let mut r = Report::new("lemma1", json!({ "n": n }));
    let sets = maximal_independent_sets(n)?;
    let mut expected: Vec<Vec<Permutation>> = stars(n)?.into_iter().map(|s| s.members).collect();
    expected.sort();
    r.claim(format!("{} maximal independent sets of transpositions", sets.len()), sets.len() == n);
    r.claim("every maximal set is the star of one point", sets == expected);
    let found: Vec<Value> = sets
        .iter()
        .map(|s| {
            let anchor = (0..n).find(|&k| s.iter().all(|t| t.image(k) != k)).map(|k| k + 1);
            json!({ "anchor": anchor, "members": cycles(s) })
        })
        .collect();
    for f in &found {
        r.line(format!("point {}: {}", f["anchor"], f["members"]));
    }
    r.findings = json!({ "count": sets.len(), "sets": found });
    Ok(r)
}

pub fn lemma2(n_max: usize) -> Result<Report, Error> {
    let mut r = Report::new("lemma2", json!({ "n_max": n_max }));
    let survey = lemma2_survey(n_max)?;
    for row in &survey.rows {
        r.line(format!("C_{} in Sym_{}: spectrum {:?} {:?}", row.j, row.n, row.spectrum, row.status));
    }
    let c1_ok = survey
        .transposition_spectra
        .iter()
        .all(|t| t.n < 4 || t.spectrum == [1, 2, 3]);
    r.claim("transposition product orders are {1,2,3} for n >= 4", c1_ok);
    r.claim(format!("surviving classes: {:?}", survey.surviving), survey.passes());
    r.findings = serde_json::to_value(&survey).expect("survey serializes");
    Ok(r)
}

pub fn aut(n: usize) -> Result<Report, Error> {
    let mut r = Report::new("aut", json!({ "n": n }));
    if n == 2 {
        // Sym_2 is abelian of order 2; its automorphism group is trivial.
        r.line("Sym_2 has only the identity automorphism");
        r.findings = json!({
            "n": 2, "aut_order": 1, "inn_order": 1, "out_order": 1,
            "involutive_outer_count": null, "sample_outer_generator_images": null,
        });
        return Ok(r);
    }
    let g = AutomorphismGroup::enumerate(n)?;
    let rep = g.report();
    let fact: usize = (1..=n).product();
    r.claim(format!("|Inn(Sym_{n})| = {}", rep.inn_order), rep.inn_order == fact);
    let expected_out = if n == 6 { 2 } else { 1 };
    r.claim(format!("|Aut(Sym_{n})| = {}", rep.aut_order), rep.aut_order == fact * expected_out);
    r.claim(format!("|Out(Sym_{n})| = {}", rep.out_order), rep.out_order == expected_out);
    if let Some(k) = rep.involutive_outer_count {
        r.claim(format!("{k} involutive outer automorphisms"), k == 36);
    }
    if n == 6 {
        let (c1, c3) = (InvolutionClassId::new(6, 1)?, InvolutionClassId::new(6, 3)?);
        let ok = g.outer().all(|a| class_image(g.sym(), a, c1).ok() == Some(c3));
        r.claim("every outer automorphism sends transpositions to triple transpositions", ok);
    }
    r.findings = serde_json::to_value(&rep).expect("report serializes");
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum IcosaEmit {
    Labelings,
    Pairs,
    Phi,
}

/// Reads model tables from a JSON file; `None` gives the built-in model.
pub fn load_tables(path: Option<&Path>) -> Result<ModelTables, String> {
    let Some(p) = path else { return Ok(ModelTables::standard()) };
    let text = std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", p.display()))
}

fn icosa_claims(r: &mut Report, c: &IcosaConstruction) -> Result<(), Error> {
    r.claim(
        "12 labeling classes of 60 labelings",
        c.classes.len() == 12 && c.classes.iter().all(|k| k.size == 60),
    );
    let complementary = c.classes.iter().enumerate().all(|(k, class)| {
        let d = &c.classes[c.dual[k]];
        c.dual[c.dual[k]] == k
            && class.triples.is_disjoint(&d.triples)
            && class.triples.union(&d.triples).count() == all_triples().len()
    });
    r.claim("classes fall into 6 complementary dual pairs", complementary && c.pairs.len() == 6);
    let skeleton_ok = (0..c.classes.len()).all(|k| c.dual_via_skeleton(k).ok() == Some(c.dual[k]));
    r.claim("skeleton dual agrees with triple complement", skeleton_ok);
    let table = c.phi_table()?;
    let t = InvolutionClassId::new(6, 1)?;
    r.claim(
        "phi is an automorphism sending transpositions to triple transpositions",
        class_image(c.sym(), &table, t)? == InvolutionClassId::new(6, 3)?,
    );
    Ok(())
}

pub fn icosa(emit: IcosaEmit, tables: &ModelTables, model: Option<&Path>) -> Result<Report, Error> {
    let param = model.map(|p| p.display().to_string());
    let mut r = Report::new("icosa", json!({ "emit": format!("{emit:?}").to_lowercase(), "model": param }));
    let c = IcosaConstruction::from_model(IcosahedronModel::from_tables(tables)?)?;
    icosa_claims(&mut r, &c)?;
    let e = c.export();
    r.findings = match emit {
        IcosaEmit::Labelings => {
            for k in &e.classes {
                r.line(format!("class {:2} letter {} dual {:2} representative {:?}", k.index, k.letter, k.dual, k.representative));
            }
            json!({ "model": e.model, "antipodal_pairs": e.antipodal_pairs, "classes": e.classes })
        }
        IcosaEmit::Pairs => {
            for p in &e.dual_pairs {
                r.line(format!("{}: classes {} and {}", p.letter, p.classes[0], p.classes[1]));
            }
            json!({ "dual_pairs": e.dual_pairs })
        }
        IcosaEmit::Phi => {
            for t in &e.transposition_images {
                r.line(format!("{} -> {}", t.sigma.cycles, t.image_letters));
            }
            json!({ "transposition_images": e.transposition_images, "phi": e.phi })
        }
    };
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum K6Emit {
    Doily,
    Factors,
    Factorizations,
    Tutte,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum K6Format {
    Json,
    Dot,
    Text,
}

pub fn k6(emit: K6Emit, format: K6Format) -> Result<Output, Error> {
    let mut r = Report::new(
        "k6",
        json!({ "emit": format!("{emit:?}").to_lowercase(), "format": format!("{format:?}").to_lowercase() }),
    );
    if format == K6Format::Dot && !matches!(emit, K6Emit::Doily | K6Emit::Tutte) {
        return Err(Error::Precondition("dot output is available for doily and tutte only".into()));
    }
    let mut dot = None;
    match emit {
        K6Emit::Doily => {
            let gq = doily()?;
            r.claim("15 points, 15 lines", gq.points.len() == 15 && gq.lines.len() == 15);
            r.claim("generalized quadrangle of order (2,2)", gq.check_gq(2, 2).is_ok());
            r.claim("dual is a generalized quadrangle of order (2,2)", gq.dual().check_gq(2, 2).is_ok());
            for (l, pts) in gq.lines.iter().zip(&gq.incidence) {
                let names: Vec<&str> = pts.iter().map(|&p| gq.points[p].as_str()).collect();
                r.line(format!("{l}: {}", names.join(" ")));
            }
            dot = Some(incidence_dot("doily", &gq));
            r.findings = serde_json::to_value(&gq).expect("incidence serializes");
        }
        K6Emit::Factors => {
            let fs = k6::factors();
            r.claim(format!("{} one-factors of K6", fs.len()), fs.len() == 15);
            let names: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            r.text.extend(names.iter().cloned());
            r.findings = json!({ "factors": names });
        }
        K6Emit::Factorizations => {
            let fzs = factorizations();
            r.claim(format!("{} one-factorizations of K6", fzs.len()), fzs.len() == 6);
            let names: Vec<Vec<String>> = fzs
                .iter()
                .map(|fz| fz.factors().iter().map(|f| f.to_string()).collect())
                .collect();
            for n in &names {
                r.line(n.join(" "));
            }
            r.findings = json!({ "factorizations": names });
        }
        K6Emit::Tutte => {
            let cage = tutte_graph()?;
            let (rep, all) = cage_report(&cage)?;
            r.claim("30 vertices, 45 edges, cubic, girth 8",
                cage.graph.vertex_count() == 30 && cage.graph.edge_count() == 45 && cage.graph.girth() == Some(8));
            r.claim(format!("{} automorphisms", rep.aut_order), rep.aut_order == 1440);
            r.claim(format!("{} preserve the parts", rep.part_preserving_order), rep.part_preserving_order == 720);
            r.claim(
                format!("{} part-swapping involutions", rep.part_swapping_involutions),
                rep.part_swapping_involutions == 36,
            );
            let group = AutomorphismGroup::enumerate(6)?;
            let images: BTreeSet<_> = all
                .iter()
                .map(|a| graph_aut_to_group_aut(group.sym(), &cage, a))
                .collect::<Result<_, _>>()?;
            r.claim(
                "graph automorphisms correspond one-to-one with Aut(Sym_6)",
                images.len() == 1440 && images.iter().all(|t| group.contains(t)),
            );
            let labels: Vec<String> = (0..30).map(|v| cage.label(v)).collect();
            let edges: Vec<[usize; 2]> = cage.graph.edges().into_iter().map(|(a, b)| [a, b]).collect();
            dot = Some(cage.to_dot());
            r.findings = json!({ "vertices": labels, "edges": edges, "automorphisms": rep });
        }
    }
    Ok(match (format, dot) {
        (K6Format::Dot, Some(d)) => Output::Raw(d, r),
        _ => Output::Report(r),
    })
}

/// One named check inside `verify-all`.
fn check(r: &mut Report, rows: &mut Vec<Value>, name: &str, outcome: Result<Report, Error>) {
    let (passed, detail) = match outcome {
        Ok(sub) => {
            let failed: Vec<&String> = sub.text.iter().filter(|l| l.starts_with("[FAILED]")).collect();
            (sub.passed, failed.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; "))
        }
        Err(e) => (false, e.to_string()),
    };
    let line = if detail.is_empty() { name.to_string() } else { format!("{name}: {detail}") };
    r.claim(line, passed);
    rows.push(json!({ "check": name, "passed": passed, "detail": detail }));
}

pub fn verify_all(tables: &ModelTables, model: Option<&Path>) -> Report {
    let mut r = Report::new("verify-all", json!({ "model": model.map(|p| p.display().to_string()) }));
    let mut rows = Vec::new();
    check(&mut r, &mut rows, "involution class sizes", classes(6));
    for n in 3..=7 {
        check(&mut r, &mut rows, &format!("maximal independent sets n={n}"), lemma1(n));
    }
    check(&mut r, &mut rows, "product order survey", lemma2(11));
    for n in 3..=6 {
        check(&mut r, &mut rows, &format!("automorphisms of Sym_{n}"), aut(n));
    }
    check(&mut r, &mut rows, "icosahedral construction", icosa_all(tables));
    for emit in [K6Emit::Doily, K6Emit::Factors, K6Emit::Factorizations, K6Emit::Tutte] {
        let out = k6(emit, K6Format::Json).map(|o| match o {
            Output::Report(r) | Output::Raw(_, r) => r,
        });
        check(&mut r, &mut rows, &format!("K6 {emit:?}").to_lowercase(), out);
    }
    check(&mut r, &mut rows, "outer automorphisms as doily polarities", polarities());
    r.findings = json!({ "checks": rows });
    r
}

fn icosa_all(tables: &ModelTables) -> Result<Report, Error> {
    let mut r = Report::new("icosa", Value::Null);
    let c = IcosaConstruction::from_model(IcosahedronModel::from_tables(tables)?)?;
    icosa_claims(&mut r, &c)?;
    let g = AutomorphismGroup::enumerate(6)?;
    let built: BTreeSet<_> = c.all_identifications().into_iter().collect();
    let outer: BTreeSet<_> = g.outer().cloned().collect();
    r.claim("identifications give exactly the outer automorphisms", built == outer);
    let sample = c.phi(&Permutation::transposition(6, 1, 2)?);
    r.line(format!("(1,2) -> {}", letter_cycles(&sample)));
    Ok(r)
}

fn polarities() -> Result<Report, Error> {
    let mut r = Report::new("polarities", Value::Null);
    let g = AutomorphismGroup::enumerate(6)?;
    let gq = doily()?;
    let mut count = 0;
    let mut preserve = true;
    for a in g.outer() {
        let c = correlation_from_automorphism(g.sym(), a)?;
        preserve &= c.preserves_incidence(&gq);
        count += c.is_polarity() as usize;
    }
    r.claim("outer automorphisms act as incidence-preserving dualities", preserve);
    r.claim(format!("{count} polarities"), count == 36);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_six() {
        let r = classes(6).unwrap();
        assert!(r.passed);
        let sizes: Vec<u64> = r.findings["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row["size"].as_u64().unwrap())
            .collect();
        assert_eq!(sizes, [15, 45, 15]);
    }

    #[test]
    fn aut_two_is_trivial() {
        let r = aut(2).unwrap();
        assert!(r.passed);
        assert_eq!(r.findings["out_order"], 1);
    }

    #[test]
    fn factors_reject_dot() {
        assert!(k6(K6Emit::Factors, K6Format::Dot).is_err());
    }
}
