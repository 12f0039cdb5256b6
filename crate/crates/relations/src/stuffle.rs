//! Quasi-shuffle expansion of products of Z values.
//!
//! Multiplying two nested sums interleaves the index chains; when two
//! indices collide the numerators multiply and the merged factor is
//! rewritten back into the standard basis by `diagonal_reduce`. The
//! expansion is exact: it must agree with series multiplication at every
//! order, which the tests check wholesale.

use std::collections::BTreeMap;

use exact_core::rational::{rat, Rational};
use num_traits::Zero;
use qzeta::Composition;

/// Rewrites `p_a(t) p_b(t) / (1-t)^{a+b}` as a combination of
/// `p_s(t)/(1-t)^s`.
///
/// Both even or mixed parity: the numerators multiply to `p_{a+b}`. Both
/// odd: `(1+t)^2 = (1-t)^2 + 4t` splits the product into `p_{a+b-2}` and
/// `4 p_{a+b}`. Every exponent produced has the parity of `a + b`.
pub fn diagonal_reduce(a: u32, b: u32) -> Vec<(u32, Rational)> {
    assert!(a >= 2 && b >= 2, "diagonal_reduce needs parts >= 2");
    if a % 2 == 1 && b % 2 == 1 {
        vec![(a + b - 2, rat(1)), (a + b, rat(4))]
    } else {
        vec![(a + b, rat(1))]
    }
}

fn stuffle_words(x: &[u32], y: &[u32]) -> BTreeMap<Vec<u32>, Rational> {
    let mut out = BTreeMap::new();
    if x.is_empty() {
        out.insert(y.to_vec(), rat(1));
        return out;
    }
    if y.is_empty() {
        out.insert(x.to_vec(), rat(1));
        return out;
    }
    let mut push = |head: &[u32], coeff: &Rational, tail: BTreeMap<Vec<u32>, Rational>| {
        for (word, c) in tail {
            let mut merged = head.to_vec();
            merged.extend(word);
            *out.entry(merged).or_insert_with(Rational::zero) += coeff * c;
        }
    };
    let one = rat(1);
    push(&[x[0]], &one, stuffle_words(&x[1..], y));
    push(&[y[0]], &one, stuffle_words(x, &y[1..]));
    for (s, c) in diagonal_reduce(x[0], y[0]) {
        push(&[s], &c, stuffle_words(&x[1..], &y[1..]));
    }
    out
}

/// Expands `Z(s) * Z(s')` as a rational combination of Z values.
pub fn stuffle_product(s: &Composition, t: &Composition) -> Vec<(Composition, Rational)> {
    stuffle_words(s.parts(), t.parts())
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(word, c)| (Composition::new(word).expect("merged parts stay >= 2"), c))
        .collect()
}
