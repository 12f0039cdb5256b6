//! Multiple q-zeta values as exact q-series.

use crate::composition::Composition;
use crate::eval::{multisum_with, Engine};
use crate::template::zeta_template;
use exact_core::rational::{rat, Rational};
use exact_core::ring::Ring;
use exact_core::series::RationalSeries;

/// `Z(s) = sum_{n_1 > ... > n_k >= 1} prod p_{s_i}(q^{n_i}) / (1-q^{n_i})^{s_i}`
/// truncated at `order`, via the chain dynamic program.
pub fn zeta_q(s: &Composition, order: usize) -> RationalSeries {
    multisum_with(&zeta_template(s), order, Engine::ChainDp)
        .expect("zeta templates are chain shaped")
}

/// Re-derivation of `Z(s)` by explicit chain enumeration, kept free of the
/// production evaluator's helpers so the two can check each other in tests.
/// Intended for small orders.
pub fn zeta_q_oracle(s: &Composition, order: usize) -> RationalSeries {
    let parts = s.parts();
    let k = parts.len();
    let mut total = RationalSeries::zero(order);
    let mut chain = vec![0usize; k];
    oracle_walk(parts, &mut chain, 0, 0, order, &mut total);
    total
}

fn oracle_walk(
    parts: &[u32],
    chain: &mut Vec<usize>,
    pos: usize,
    spent: usize,
    order: usize,
    total: &mut RationalSeries,
) {
    let k = parts.len();
    if pos == k {
        let mut term = vec![Rational::zero(); order + 1];
        term[0] = rat(1);
        for (i, &s) in parts.iter().enumerate() {
            term = oracle_mul(&term, &oracle_factor(s, chain[i], order), order);
        }
        for (e, c) in term.into_iter().enumerate() {
            if !c.is_zero() {
                total.add_to_coeff(e, &c);
            }
        }
        return;
    }
    // Strictly decreasing chain: n_pos must leave room for k-pos-1 smaller
    // values; its factor contributes valuation floor(s/2)*n_pos, and deeper
    // variables contribute at least their own floors.
    let tail_min: usize = (pos + 1..k)
        .map(|j| (parts[j] as usize / 2) * (k - j))
        .sum();
    let upper = if pos == 0 { usize::MAX } else { chain[pos - 1] - 1 };
    let v = parts[pos] as usize / 2;
    let mut n = k - pos;
    while n <= upper && spent + v * n + tail_min <= order {
        chain[pos] = n;
        oracle_walk(parts, chain, pos + 1, spent + v * n, order, total);
        n += 1;
    }
}

/// Dense coefficients of `p_s(q^n)/(1-q^n)^s` up to `order`, from the
/// explicit binomial series `(1-y)^{-s} = sum C(i+s-1, s-1) y^i`.
fn oracle_factor(s: u32, n: usize, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    let half = s as usize / 2;
    let odd = s % 2 == 1;
    let mut binom = rat(1);
    let mut i = 0usize;
    loop {
        let base = n * (i + half);
        if base > order {
            break;
        }
        out[base] += &binom;
        if odd && base + n <= order {
            out[base + n] += &binom;
        }
        i += 1;
        binom = binom * rat(i as i64 + s as i64 - 1) / rat(i as i64);
    }
    out
}

fn oracle_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}
