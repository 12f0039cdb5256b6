//! Multiple q-zeta values and general nested q-sums.
//!
//! The center of the crate is `Z(s)` for a composition `s = (s_1, ..., s_k)`
//! with all parts at least 2:
//!
//! `Z(s) = sum over n_1 > ... > n_k >= 1 of prod p_{s_i}(q^{n_i}) / (1 - q^{n_i})^{s_i}`
//!
//! where `p_s(t)` is `t^{s/2}` for even `s` and `t^{(s-1)/2}(1 + t)` for odd
//! `s`. Exact series expansion runs through a small template DSL
//! ([`SumTemplate`]) that also covers free (non-nested) sums with coupled
//! exponents; [`zeta_q`] is the chain-shaped specialization, and
//! [`zeta_q_oracle`] recomputes it by brute-force enumeration for
//! cross-checking.
//!
//! The numeric side evaluates `Z(s)` at points `q0` near 1, compares against
//! classical multiple zeta values, and expands `Z(2k+1)` in `-log q` with
//! exact Bernoulli correction coefficients.

pub mod asymptotics;
pub mod composition;
pub mod eval;
pub mod limit;
pub mod mzv;
pub mod numerator;
pub mod phi;
pub mod template;
pub mod zeta;

pub use asymptotics::{
    asymptotic_eval, asymptotic_expansion, optimal_truncation, AsymptoticEval,
    AsymptoticExpansion, AsymptoticsError,
};
pub use composition::{Composition, CompositionError};
pub use eval::{multisum, multisum_with, Engine};
pub use limit::{limit_check, zeta_q_point, LimitCheck, LimitError};
pub use mzv::{mzv_float, zeta_constant, MzvError};
pub use numerator::{numerator_poly, NumeratorError, NumeratorPolynomial};
pub use phi::phi_series;
pub use template::{
    zeta_template, SumSemantics, SumTemplate, TemplateError, TemplateFactor,
};
pub use zeta::{zeta_q, zeta_q_oracle};
