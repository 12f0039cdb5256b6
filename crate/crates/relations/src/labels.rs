//! Names for the series entering relation searches.
//!
//! A generator is a single series: either `Z(s)` for a composition `s`, or
//! an iterated q-derivative `D^l Z(2k+1)` of an odd depth-1 value. A
//! monomial label is a formal product of generators, stored as a sorted
//! multiset so that equal products compare equal. Compositions themselves
//! stay ordered tuples: `Z(2,3)` and `Z(3,2)` are distinct generators.

use std::fmt;

use qzeta::Composition;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("derivative generator needs an odd base weight >= 3, got {0}")]
    BadOddWeight(u32),
    #[error("parts range [{0},{1}] is empty or starts below 2")]
    BadPartsRange(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// The series `Z(s)`.
    Zeta(Composition),
    /// `(q d/dq)^level` applied to `Z(weight)` with `weight` odd.
    OddDerivative { level: u32, weight: u32 },
}

impl Generator {
    pub fn zeta(comp: Composition) -> Self {
        Generator::Zeta(comp)
    }

    pub fn odd_derivative(level: u32, weight: u32) -> Result<Self, LabelError> {
        if weight < 3 || weight % 2 == 0 {
            return Err(LabelError::BadOddWeight(weight));
        }
        Ok(Generator::OddDerivative { level, weight })
    }

    /// Each q-derivative raises the weight by one.
    pub fn weight(&self) -> u32 {
        match self {
            Generator::Zeta(comp) => comp.weight(),
            Generator::OddDerivative { level, weight } => weight + level,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Zeta(comp) => write!(f, "{comp}"),
            Generator::OddDerivative { level: 0, weight } => write!(f, "Z({weight})"),
            Generator::OddDerivative { level: 1, weight } => write!(f, "D Z({weight})"),
            Generator::OddDerivative { level, weight } => write!(f, "D^{level} Z({weight})"),
        }
    }
}

/// A formal product of generators; the empty product is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialLabel {
    factors: Vec<Generator>,
}

impl MonomialLabel {
    pub fn new(mut factors: Vec<Generator>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn one() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn single(g: Generator) -> Self {
        Self { factors: vec![g] }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(Generator::weight).sum()
    }

    /// Number of generator factors, counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for MonomialLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let mut j = i;
            while j < self.factors.len() && self.factors[j] == self.factors[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.factors[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// All compositions with parts in `[lo, hi]` and weight at most `max_weight`,
/// in lexicographic order. Requires `lo >= 2` so the parts stay admissible.
pub fn all_compositions(max_weight: u32, lo: u32, hi: u32) -> Vec<Composition> {
    assert!(lo >= 2, "composition parts start at 2");
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn extend(parts: &mut Vec<u32>, budget: u32, lo: u32, hi: u32, out: &mut Vec<Composition>) {
        for p in lo..=hi.min(budget) {
            parts.push(p);
            out.push(Composition::new(parts.clone()).expect("parts >= 2"));
            extend(parts, budget - p, lo, hi, out);
            parts.pop();
        }
    }
    extend(&mut parts, max_weight, lo, hi, &mut out);
    out
}

/// Multisets over `generators` with total weight at most `max_weight` and at
/// least `min_degree` factors. Nondecreasing index sequences make each
/// multiset appear exactly once.
fn multisets(
    generators: &[Generator],
    max_weight: u32,
    min_degree: usize,
) -> Vec<MonomialLabel> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn extend(
        generators: &[Generator],
        from: usize,
        budget: u32,
        min_degree: usize,
        chosen: &mut Vec<Generator>,
        out: &mut Vec<MonomialLabel>,
    ) {
        if chosen.len() >= min_degree {
            out.push(MonomialLabel::new(chosen.clone()));
        }
        for i in from..generators.len() {
            let w = generators[i].weight();
            if w > budget {
                continue;
            }
            chosen.push(generators[i].clone());
            extend(generators, i, budget - w, min_degree, chosen, out);
            chosen.pop();
        }
    }
    extend(generators, 0, max_weight, min_degree, &mut chosen, &mut out);
    out.sort_by(|a, b| (a.weight(), a).cmp(&(b.weight(), b)));
    out.dedup();
    out
}

/// All products of `Z(s)` with parts of `s` in `[lo, hi]`, of total weight at
/// most `max_weight`, including the empty product.
pub fn monomial_basis(max_weight: u32, lo: u32, hi: u32) -> Result<Vec<MonomialLabel>, LabelError> {
    if lo < 2 || hi < lo {
        return Err(LabelError::BadPartsRange(lo, hi));
    }
    let generators: Vec<Generator> = all_compositions(max_weight, lo, hi)
        .into_iter()
        .map(Generator::Zeta)
        .collect();
    Ok(multisets(&generators, max_weight, 0))
}

/// Products of derivative generators `D^l Z(2k+1)` of total weight at most
/// `max_weight` with at least `min_degree` factors.
pub fn oqz_basis(max_weight: u32, min_degree: usize) -> Vec<MonomialLabel> {
    let mut generators = Vec::new();
    let mut base = 3u32;
    while base <= max_weight {
        for level in 0..=(max_weight - base) {
            generators.push(Generator::OddDerivative { level, weight: base });
        }
        base += 2;
    }
    multisets(&generators, max_weight, min_degree)
}
