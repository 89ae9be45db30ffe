//! Permutations of `{1..n}` and their conjugacy-class data.
//!
//! Points are stored 0-based internally; everything user-facing (cycle
//! notation, JSON image arrays) is 1-based. Composition follows function
//! composition: `p.compose(&q)` applies `q` first, then `p`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_range, Error, Result};

/// Largest degree accepted by [`enumerate_sym`].
pub const MAX_ENUMERATION_DEGREE: usize = 10;

/// Largest degree for which [`SymTable`] builds a full multiplication table.
pub const MAX_TABLE_DEGREE: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "degree {n} too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (k, &v) in images.iter().enumerate() {
            let v = v as usize;
            if v >= n {
                return Err(Error::NotABijection {
                    degree: n,
                    detail: format!("image {} of point {} out of range", v + 1, k + 1),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection {
                    degree: n,
                    detail: format!("value {} appears twice", v + 1),
                });
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from a 1-based image array (the JSON form).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let zero = images
            .iter()
            .map(|&v| {
                if v == 0 || v > n {
                    Err(Error::NotABijection {
                        degree: n,
                        detail: format!("value {v} outside 1..{n}"),
                    })
                } else {
                    Ok((v - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(zero)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// The transposition swapping the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(n, &[&[a, b]])
    }

    /// Builds a product of disjoint cycles given in 1-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::NotABijection {
                        degree: n,
                        detail: format!("point {a} outside 1..{n}"),
                    });
                }
                if std::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::NotABijection {
                        degree: n,
                        detail: format!("point {a} appears in more than one cycle position"),
                    });
                }
                let b = cycle[(idx + 1) % cycle.len()];
                images[a - 1] = (b - 1) as u8;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `"(1,2)(3,4)"`; `"()"` is the identity.
    pub fn parse_cycles(input: &str, n: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unclosed '('"))?;
            let inner = &body[..close];
            if !inner.is_empty() {
                let pts = inner
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| err("bad point")))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(pts);
            }
            rest = &body[close + 1..];
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs).map_err(|e| err(&e.to_string()))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g ∘ self ∘ g⁻¹`, i.e. `self` with its points relabeled by `g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Permutation) -> Permutation {
        // (g p g⁻¹)(g(k)) = g(p(k))
        let mut out = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            out[g.images[k] as usize] = g.images[v as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && self
                .images
                .iter()
                .zip(other.images.iter())
                .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    /// Disjoint cycles as 0-based point lists, each starting at its least
    /// point, ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_transposition(&self) -> bool {
        self.moved_points() == 2
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(k, &v)| self.images[v as usize] as usize == k)
    }

    pub fn moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(k, &v)| k != v as usize)
            .count()
    }

    /// The involution class this element belongs to, if it is an involution.
    pub fn involution_class(&self) -> Option<InvolutionClassId> {
        if !self.is_involution() {
            return None;
        }
        let j = self.moved_points() / 2;
        Some(InvolutionClassId {
            n: self.degree(),
            i: self.degree() - 2 * j,
            j,
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (idx, p) in cycle.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self, self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// Report form of a permutation: 1-based images plus cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermRecord {
    pub images: Vec<usize>,
    pub cycles: String,
}

impl From<&Permutation> for PermRecord {
    fn from(p: &Permutation) -> Self {
        PermRecord {
            images: p.one_based(),
            cycles: p.to_string(),
        }
    }
}

/// Multiset of cycle lengths, sorted descending, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The class `C_j` of involutions with cycle structure `1^i 2^j` in `Sym_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvolutionClassId {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl InvolutionClassId {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        if j == 0 || 2 * j > n {
            return Err(Error::InvalidClass {
                n,
                i: n.saturating_sub(2 * j),
                j,
            });
        }
        Ok(InvolutionClassId { n, i: n - 2 * j, j })
    }

    pub fn validate(&self) -> Result<()> {
        if self.j == 0 || self.i + 2 * self.j != self.n {
            return Err(Error::InvalidClass {
                n: self.n,
                i: self.i,
                j: self.j,
            });
        }
        Ok(())
    }

    /// `n! / (i! · j! · 2^j)`.
    pub fn size(&self) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        fact(self.n) / (fact(self.i) * fact(self.j) * (1u64 << self.j))
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts = vec![2; self.j];
        parts.extend(std::iter::repeat(1).take(self.i));
        CycleType::new(parts)
    }
}

impl fmt::Display for InvolutionClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{} in Sym_{}", self.j, self.n)
    }
}

/// All involutions of the given class, in lexicographic order of images.
pub fn involution_class(id: InvolutionClassId) -> Result<Vec<Permutation>> {
    id.validate()?;
    check_range("degree", id.n, 2, u8::MAX as usize)?;
    let mut out = Vec::with_capacity(id.size() as usize);
    let mut images: Vec<u8> = (0..id.n as u8).collect();
    let mut used = vec![false; id.n];
    fill_involutions(&mut images, &mut used, 0, id.i, id.j, &mut out);
    out.sort();
    Ok(out)
}

fn fill_involutions(
    images: &mut Vec<u8>,
    used: &mut Vec<bool>,
    start: usize,
    fixed_left: usize,
    pairs_left: usize,
    out: &mut Vec<Permutation>,
) {
    let Some(k) = (start..images.len()).find(|&k| !used[k]) else {
        if fixed_left == 0 && pairs_left == 0 {
            out.push(Permutation::from_images_unchecked(images.clone()));
        }
        return;
    };
    used[k] = true;
    if fixed_left > 0 {
        images[k] = k as u8;
        fill_involutions(images, used, k + 1, fixed_left - 1, pairs_left, out);
    }
    if pairs_left > 0 {
        for m in k + 1..images.len() {
            if used[m] {
                continue;
            }
            used[m] = true;
            images[k] = m as u8;
            images[m] = k as u8;
            fill_involutions(images, used, k + 1, fixed_left, pairs_left - 1, out);
            images[m] = m as u8;
            used[m] = false;
        }
    }
    images[k] = k as u8;
    used[k] = false;
}

/// Every permutation of degree `n` in lexicographic order of images.
pub fn enumerate_sym(n: usize) -> Result<Vec<Permutation>> {
    check_range("degree", n, 1, MAX_ENUMERATION_DEGREE)?;
    let total: usize = (1..=n).product();
    let mut out = Vec::with_capacity(total);
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation::from_images_unchecked(cur.clone()));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Sym_n` for small `n` with elements indexed by lexicographic rank and a
/// precomputed multiplication table.
pub struct SymTable {
    n: usize,
    elements: Vec<Permutation>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl SymTable {
    pub fn new(n: usize) -> Result<Self> {
        check_range("degree", n, 1, MAX_TABLE_DEGREE)?;
        let elements = enumerate_sym(n)?;
        let order = elements.len();
        let mut mul = vec![0u16; order * order];
        let mut table = SymTable {
            n,
            elements,
            mul: Vec::new(),
            inv: Vec::new(),
        };
        for a in 0..order {
            for b in 0..order {
                let c = table.elements[a].compose_unchecked(&table.elements[b]);
                mul[a * order + b] = table.rank(&c) as u16;
            }
        }
        table.inv = table
            .elements
            .iter()
            .map(|p| table.rank(&p.inverse()) as u16)
            .collect();
        table.mul = mul;
        Ok(table)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Lexicographic rank (Lehmer code) of a permutation of this degree.
    pub fn rank(&self, p: &Permutation) -> usize {
        debug_assert_eq!(p.degree(), self.n);
        let imgs = p.images();
        let mut rank = 0usize;
        for i in 0..self.n {
            let smaller_later = imgs[i + 1..].iter().filter(|&&v| v < imgs[i]).count();
            rank = rank * (self.n - i) + smaller_later;
        }
        rank
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Index of `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }
}
