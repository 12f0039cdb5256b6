//! Bernoulli numbers, computed once and cached in a table.
//!
//! Convention: `B_1 = -1/2` (the generating function `x/(e^x - 1)`).

use crate::rational::{binomial, rat, Rational};
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Computes `B_0 .. B_max` by the defining recurrence
    /// `sum_{j=0}^{m} C(m+1, j) B_j = 0` for `m >= 1`.
    pub fn with_max(max: usize) -> Self {
        let mut values = Vec::with_capacity(max + 1);
        values.push(rat(1));
        for m in 1..=max {
            if m % 2 == 1 && m > 1 {
                values.push(Rational::zero());
                continue;
            }
            let mut acc = Rational::zero();
            for (j, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += Rational::from_integer(binomial(m as u64 + 1, j as u64)) * b;
                }
            }
            values.push(-acc / rat(m as i64 + 1));
        }
        Self { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, index: usize) -> &Rational {
        &self.values[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn table_matches_known_values() {
        let table = BernoulliTable::with_max(12);
        assert_eq!(table.get(0), &rat(1));
        assert_eq!(table.get(1), &ratio(-1, 2));
        assert_eq!(table.get(2), &ratio(1, 6));
        assert_eq!(table.get(4), &ratio(-1, 30));
        assert_eq!(table.get(6), &ratio(1, 42));
        assert_eq!(table.get(8), &ratio(-1, 30));
        assert_eq!(table.get(10), &ratio(5, 66));
        assert_eq!(table.get(12), &ratio(-691, 2730));
        for odd in [3, 5, 7, 9, 11] {
            assert!(table.get(odd).is_zero());
        }
    }

    #[test]
    fn generating_function_identity() {
        // x/(e^x - 1) = sum B_n x^n / n!.
        use crate::series::RationalSeries;
        let order = 14;
        let mut expm1_over_x = RationalSeries::zero(order);
        let mut fact = rat(1);
        for n in 0..=order {
            // coefficient of x^n in (e^x - 1)/x = 1/(n+1)!.
            fact *= rat(n as i64 + 1);
            expm1_over_x.set_coeff(n, fact.recip());
        }
        let inv = expm1_over_x.invert().unwrap();
        let table = BernoulliTable::with_max(order);
        let mut nfact = rat(1);
        for n in 0..=order {
            if n > 0 {
                nfact *= rat(n as i64);
            }
            assert_eq!(&(inv.coeff(n) * &nfact), table.get(n), "B_{n}");
        }
    }
}
