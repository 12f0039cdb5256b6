//! Descendent insertions: equivariant Chern character weights of a diagram.

use exact_core::rational::{factorial, Rational};
use num_traits::{One, Zero};
use partitions::PlanePartition;

use crate::form::LinearForm;
use crate::point::TPoint;
use crate::weights::rational_power;
use crate::DtError;

/// Weight of the box at `(i, j, k)`: the form `i t1 + j t2 + k t3`.
pub fn box_weight(b: (u32, u32, u32)) -> LinearForm {
    LinearForm::new(b.0 as i64, b.1 as i64, b.2 as i64)
}

/// `ch_k(pi)` at a point: `sum_boxes (w(box) + twist)^k / k!`. The twist is an
/// optional shift of every box weight by a fixed form; it defaults to zero.
pub fn descendent_value(
    pi: &PlanePartition,
    k: u32,
    twist: Option<&LinearForm>,
    t: &TPoint,
) -> Result<Rational, DtError> {
    let twist_value = twist.map(|f| f.eval(t)).unwrap_or_else(Rational::zero);
    let mut sum = Rational::zero();
    for b in pi.boxes() {
        let w = box_weight(b).eval(t) + &twist_value;
        sum += rational_power(&w, k as i64)?;
    }
    Ok(sum / Rational::from_integer(factorial(k)))
}

/// Product of descendent values over a multiset of indices.
pub fn insertion_value(
    pi: &PlanePartition,
    ks: &[u32],
    twist: Option<&LinearForm>,
    t: &TPoint,
) -> Result<Rational, DtError> {
    let mut out = Rational::one();
    for &k in ks {
        out *= descendent_value(pi, k, twist, t)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{rat, ratio};
    use partitions::enumerate_pp;

    #[test]
    fn ch0_counts_boxes() {
        let t = TPoint::from_integers(7, 13, -29);
        for n in 0..=4u32 {
            for pi in enumerate_pp(n) {
                assert_eq!(descendent_value(&pi, 0, None, &t).unwrap(), rat(n as i64));
            }
        }
    }

    #[test]
    fn ch1_examples() {
        let t = TPoint::from_integers(7, 13, -29);
        let single = enumerate_pp(1).into_iter().next().unwrap();
        assert_eq!(descendent_value(&single, 1, None, &t).unwrap(), rat(0));

        // The height-two column over a single cell has boxes (0,0,0), (0,0,1):
        // ch_1 = t3.
        let column = enumerate_pp(2)
            .into_iter()
            .find(|p| p.max_height() == 2)
            .unwrap();
        assert_eq!(descendent_value(&column, 1, None, &t).unwrap(), rat(-29));
    }

    #[test]
    fn factorial_normalization() {
        // Single box at the origin with twist f: ch_k = f(t)^k / k!.
        let t = TPoint::from_integers(2, 3, 5);
        let single = enumerate_pp(1).into_iter().next().unwrap();
        let twist = LinearForm::new(1, 1, 0);
        assert_eq!(descendent_value(&single, 3, Some(&twist), &t).unwrap(), ratio(125, 6));
    }

    #[test]
    fn insertion_is_a_product() {
        let t = TPoint::from_integers(3, 5, 11);
        for pi in enumerate_pp(3) {
            let a = descendent_value(&pi, 1, None, &t).unwrap();
            let b = descendent_value(&pi, 2, None, &t).unwrap();
            assert_eq!(insertion_value(&pi, &[1, 2], None, &t).unwrap(), a * b);
            assert_eq!(insertion_value(&pi, &[], None, &t).unwrap(), rat(1));
        }
    }
}
