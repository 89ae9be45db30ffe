//! Involution-class machinery behind the two restriction arguments:
//! dependent transposition triples, maximal independent noncommuting
//! subsets of `C_1`, and the order spectra of products within `C_j`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::perm::{involution_class, InvolutionClassId, Permutation};

/// Largest degree accepted by the product-spectrum routines.
pub const MAX_SPECTRUM_DEGREE: usize = 11;

/// The transpositions moving a fixed anchor point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Star {
    pub n: usize,
    /// 1-based anchor point.
    pub anchor: usize,
    pub members: Vec<Permutation>,
}

impl Star {
    pub fn new(n: usize, anchor: usize) -> Result<Self> {
        check_range("anchor", anchor, 1, n)?;
        let mut members = (1..=n)
            .filter(|&b| b != anchor)
            .map(|b| Permutation::transposition(n, anchor, b))
            .collect::<Result<Vec<_>>>()?;
        members.sort();
        Ok(Star { n, anchor, members })
    }
}

pub fn stars(n: usize) -> Result<Vec<Star>> {
    (1..=n).map(|i| Star::new(n, i)).collect()
}

/// For noncommuting transpositions `x`, `y` returns `z = xyx`, which also
/// equals `yxy`.
pub fn dependent_closure(x: &Permutation, y: &Permutation) -> Result<Permutation> {
    if !x.is_transposition() || !y.is_transposition() {
        return Err(Error::Precondition(format!(
            "dependent_closure needs transpositions, got {x} and {y}"
        )));
    }
    let xy = x.compose(y)?;
    if xy == y.compose_unchecked(x) {
        return Err(Error::Precondition(format!("{x} and {y} commute")));
    }
    let z = xy.compose_unchecked(x);
    let z2 = y.compose_unchecked(x).compose_unchecked(y);
    if z != z2 || !z.is_transposition() {
        return Err(crate::error::integrity(
            "dependent-triple",
            format!("xyx = {z}, yxy = {z2}"),
        ));
    }
    Ok(z)
}

/// All inclusion-maximal subsets `S` of the transpositions of `Sym_n` whose
/// distinct members pairwise fail to commute and never contain `xyx` for
/// `x, y ∈ S`. Each set is sorted, and the list is sorted.
pub fn maximal_independent_sets(n: usize) -> Result<Vec<Vec<Permutation>>> {
    check_range("degree", n, 3, 7)?;
    let c1 = involution_class(InvolutionClassId::new(n, 1)?)?;
    let m = c1.len();
    let idx_of = |p: &Permutation| c1.iter().position(|q| q == p).expect("transposition");

    // noncommuting[a] bitmask; closure[a][b] = index of xyx for noncommuting pairs
    let mut noncommuting = vec![0u32; m];
    let mut closure = vec![vec![usize::MAX; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b && !c1[a].commutes_with(&c1[b]) {
                noncommuting[a] |= 1 << b;
                closure[a][b] = idx_of(&dependent_closure(&c1[a], &c1[b])?);
            }
        }
    }

    let admissible = |set: u32, cand: usize| -> bool {
        if set & (1 << cand) != 0 || noncommuting[cand] & set != set {
            return false;
        }
        // adding cand must not create a dependent triple inside the set
        let with = set | (1 << cand);
        let mut bits = set;
        while bits != 0 {
            let a = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if with & (1 << closure[a][cand]) != 0 {
                return false;
            }
            let mut rest = bits;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if closure[a][b] == cand {
                    return false;
                }
            }
        }
        true
    };

    let mut found = Vec::new();
    let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
    while let Some((set, next)) = stack.pop() {
        for cand in next..m {
            if admissible(set, cand) {
                stack.push((set | (1 << cand), cand + 1));
            }
        }
        if set != 0 && (0..m).all(|cand| !admissible(set, cand)) {
            found.push(set);
        }
    }

    let mut out: Vec<Vec<Permutation>> = found
        .into_iter()
        .map(|set| {
            (0..m)
                .filter(|&k| set & (1 << k) != 0)
                .map(|k| c1[k].clone())
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSpectrum {
    pub class_id: InvolutionClassId,
    pub orders: BTreeSet<u64>,
}

fn class_for_spectrum(id: InvolutionClassId) -> Result<Vec<Permutation>> {
    id.validate()?;
    check_range("degree", id.n, 2, MAX_SPECTRUM_DEGREE)?;
    involution_class(id)
}

/// Exact set of `order(xy)` over all ordered pairs `x, y ∈ C_j` (equal
/// pairs included).
///
/// Every pair is conjugate to one whose first entry is the class's least
/// element, so the sweep fixes `x` and ranges over `y`; the result is the
/// same set as the full `|C_j|²` sweep.
pub fn product_order_spectrum(id: InvolutionClassId) -> Result<OrderSpectrum> {
    let class = class_for_spectrum(id)?;
    let x = &class[0];
    let orders = class
        .iter()
        .map(|y| x.compose_unchecked(y).order())
        .collect();
    Ok(OrderSpectrum {
        class_id: id,
        orders,
    })
}

/// A pair `(x, y)` in `C_j` with `order(xy) = target`, if one exists.
pub fn exists_product_of_order(
    id: InvolutionClassId,
    target: u64,
) -> Result<Option<(Permutation, Permutation)>> {
    let class = class_for_spectrum(id)?;
    let x = &class[0];
    Ok(class
        .iter()
        .find(|y| x.compose_unchecked(y).order() == target)
        .map(|y| (x.clone(), y.clone())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SurveyStatus {
    Eliminated,
    Surviving,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub target: u64,
    pub x: Permutation,
    pub y: Permutation,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub j: usize,
    pub spectrum: Vec<u64>,
    pub status: SurveyStatus,
    pub witnesses: Vec<ProductWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranspositionSpectrum {
    pub n: usize,
    pub spectrum: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma2Survey {
    pub n_max: usize,
    pub transposition_spectra: Vec<TranspositionSpectrum>,
    pub rows: Vec<SurveyRow>,
    /// `(n, j)` with `j > 1` whose spectrum matches that of `C_1`.
    pub surviving: Vec<(usize, usize)>,
}

impl Lemma2Survey {
    /// True when `(6, 3)` is the only survivor, or there are none and the
    /// range stops below 6.
    pub fn passes(&self) -> bool {
        if self.n_max >= 6 {
            self.surviving == [(6, 3)]
        } else {
            self.surviving.is_empty()
        }
    }
}

fn witness(id: InvolutionClassId, target: u64) -> Result<Option<ProductWitness>> {
    Ok(exists_product_of_order(id, target)?.map(|(x, y)| {
        let product = x.compose_unchecked(&y).to_string();
        ProductWitness {
            target,
            x,
            y,
            product,
        }
    }))
}

/// Compares the spectrum of every `C_j` (`2 ≤ j`, `2j ≤ n ≤ n_max`) with the
/// spectrum of `C_1` in the same degree. Classes whose spectrum differs
/// cannot be the image of `C_1` under an automorphism.
pub fn lemma2_survey(n_max: usize) -> Result<Lemma2Survey> {
    check_range("n_max", n_max, 2, MAX_SPECTRUM_DEGREE)?;
    let mut transposition_spectra = Vec::new();
    let mut rows = Vec::new();
    let mut surviving = Vec::new();
    for n in 2..=n_max {
        let c1 = product_order_spectrum(InvolutionClassId::new(n, 1)?)?;
        transposition_spectra.push(TranspositionSpectrum {
            n,
            spectrum: c1.orders.iter().copied().collect(),
        });
        for j in 2..=n / 2 {
            let id = InvolutionClassId::new(n, j)?;
            let spectrum = product_order_spectrum(id)?;
            let status = if spectrum.orders == c1.orders {
                surviving.push((n, j));
                SurveyStatus::Surviving
            } else {
                SurveyStatus::Eliminated
            };
            let mut witnesses = Vec::new();
            witnesses.extend(witness(id, j as u64)?);
            if n > 2 * j {
                witnesses.extend(witness(id, 2 * j as u64 + 1)?);
            }
            rows.push(SurveyRow {
                n,
                j,
                spectrum: spectrum.orders.into_iter().collect(),
                status,
                witnesses,
            });
        }
    }
    Ok(Lemma2Survey {
        n_max,
        transposition_spectra,
        rows,
        surviving,
    })
}
