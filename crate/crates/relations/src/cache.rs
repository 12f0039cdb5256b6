//! Memoized q-series for labels.
//!
//! Relation searches evaluate the same monomials at many truncation orders;
//! the cache keeps the highest-order series seen per label and serves lower
//! orders by truncation, so raising N only recomputes what it must.

use std::collections::HashMap;

use exact_core::series::RationalSeries;
use qzeta::{zeta_q, Composition};

use crate::labels::{Generator, MonomialLabel};

#[derive(Debug, Default)]
pub struct SeriesCache {
    generators: HashMap<Generator, RationalSeries>,
    monomials: HashMap<MonomialLabel, RationalSeries>,
}

impl SeriesCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeta_series(&mut self, comp: &Composition, order: usize) -> RationalSeries {
        self.generator_series(&Generator::Zeta(comp.clone()), order)
    }

    pub fn generator_series(&mut self, generator: &Generator, order: usize) -> RationalSeries {
        if let Some(hit) = self.generators.get(generator) {
            if hit.order() >= order {
                return hit.truncate(order);
            }
        }
        let series = match generator {
            Generator::Zeta(comp) => zeta_q(comp, order),
            Generator::OddDerivative { level, weight } => {
                let base = Composition::new(vec![*weight]).expect("odd weight >= 3");
                let mut s = zeta_q(&base, order);
                for _ in 0..*level {
                    s = s.q_derive();
                }
                s
            }
        };
        self.generators.insert(generator.clone(), series.clone());
        series
    }

    pub fn monomial_series(&mut self, label: &MonomialLabel, order: usize) -> RationalSeries {
        if let Some(hit) = self.monomials.get(label) {
            if hit.order() >= order {
                return hit.truncate(order);
            }
        }
        let mut acc = RationalSeries::one(order);
        for generator in label.factors() {
            let factor = self.generator_series(generator, order);
            acc = acc.mul(&factor);
        }
        self.monomials.insert(label.clone(), acc.clone());
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;
    use num_traits::Zero;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn serves_truncations_without_recompute() {
        let mut cache = SeriesCache::new();
        let full = cache.zeta_series(&comp(&[2]), 30);
        let short = cache.zeta_series(&comp(&[2]), 10);
        assert_eq!(short.order(), 10);
        assert!(full.agrees_to(&short, 10));
        // Raising the order recomputes and still matches on the overlap.
        let longer = cache.zeta_series(&comp(&[2]), 40);
        assert!(longer.agrees_to(&full, 30));
    }

    #[test]
    fn derivative_generator_matches_manual_q_derive() {
        let mut cache = SeriesCache::new();
        let g = Generator::odd_derivative(2, 3).unwrap();
        let cached = cache.generator_series(&g, 20);
        let manual = zeta_q(&comp(&[3]), 20).q_derive().q_derive();
        assert_eq!(cached.coeffs(), manual.coeffs());
    }

    #[test]
    fn monomial_series_is_product_of_factors() {
        let mut cache = SeriesCache::new();
        let label = MonomialLabel::new(vec![
            Generator::zeta(comp(&[2])),
            Generator::zeta(comp(&[3])),
        ]);
        let series = cache.monomial_series(&label, 25);
        let oracle = zeta_q(&comp(&[2]), 25).mul(&zeta_q(&comp(&[3]), 25));
        assert_eq!(series.coeffs(), oracle.coeffs());
        let one = cache.monomial_series(&MonomialLabel::one(), 25);
        assert_eq!(one.coeff(0), rat(1));
        assert!(one.truncate(25).coeffs()[1..].iter().all(|c| c.is_zero()));
    }
}
