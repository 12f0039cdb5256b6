//! Torus characters: Laurent polynomials in `t1, t2, t3` with integer
//! coefficients, and the virtual tangent character of a monomial ideal.

use std::collections::BTreeMap;

use partitions::PlanePartition;

use crate::DtError;

/// A finite integer combination of monomials `t1^a t2^b t3^c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<(i32, i32, i32), i64>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: (i32, i32, i32), coeff: i64) -> Self {
        let mut ch = Self::zero();
        ch.add_term(exponent, coeff);
        ch
    }

    pub fn add_term(&mut self, exponent: (i32, i32, i32), coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: (i32, i32, i32)) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Sum of coefficients; the virtual rank of the character.
    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2), c1 * c2);
            }
        }
        out
    }

    /// Dual character: every exponent vector is negated.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term((-e.0, -e.1, -e.2), c);
        }
        out
    }

    /// Multiply by the monomial `t1^d0 t2^d1 t3^d2`.
    pub fn shift(&self, delta: (i32, i32, i32)) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term((e.0 + delta.0, e.1 + delta.1, e.2 + delta.2), c);
        }
        out
    }
}

/// Character of the coordinate ring quotient: one monomial per box, with the
/// box at position `(i, j, k)` (zero-indexed) contributing `t1^i t2^j t3^k`.
pub fn character_of(pi: &PlanePartition) -> Character {
    let mut ch = Character::zero();
    for (i, j, k) in pi.boxes() {
        ch.add_term((i as i32, j as i32, k as i32), 1);
    }
    ch
}

/// `(1 - t1)(1 - t2)(1 - t3)`.
fn vertex_factor() -> Character {
    let mut out = Character::monomial((0, 0, 0), 1);
    for axis in 0..3 {
        let mut e = (0, 0, 0);
        match axis {
            0 => e.0 = 1,
            1 => e.1 = 1,
            _ => e.2 = 1,
        }
        let mut factor = Character::monomial((0, 0, 0), 1);
        factor.add_term(e, -1);
        out = out.mul(&factor);
    }
    out
}

/// Virtual tangent character of the monomial ideal with diagram `pi`:
///
/// `T = Q - Qbar/(t1 t2 t3) + Q Qbar (1-t1)(1-t2)(1-t3)/(t1 t2 t3)`
///
/// where `Q` is the box character. Errors when a term survives with zero
/// exponent vector (a fixed weight would make localization ill defined); the
/// coefficient sum must vanish because the moduli space has virtual
/// dimension zero.
pub fn virtual_tangent(pi: &PlanePartition) -> Result<Character, DtError> {
    let q = character_of(pi);
    let qbar = q.bar();
    let kappa_inv = (-1, -1, -1);
    let t = q
        .sub(&qbar.shift(kappa_inv))
        .add(&q.mul(&qbar).mul(&vertex_factor()).shift(kappa_inv));
    if t.coeff((0, 0, 0)) != 0 {
        return Err(DtError::ZeroTangentWeight);
    }
    if t.rank() != 0 {
        return Err(DtError::VirtualRankNonzero { rank: t.rank() });
    }
    Ok(t)
}
