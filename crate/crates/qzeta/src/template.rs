//! A small DSL for nested q-sums.
//!
//! A template denotes `sum over n  prod_f  p_f(x_f) / (1 - x_f)^{s_f}` with
//! `x_f = q^{L_f(n)}` for a linear form `L_f(n) = sum_i a_{f,i} n_i` with
//! nonnegative integer coefficients. The bound variables either form a strict
//! chain `n_1 > n_2 > ... > n_k >= 1` or range freely over positive integers,
//! recorded in [`SumSemantics`]. Chain semantics covers multiple q-zeta
//! values; free semantics covers coupled sums such as
//! `sum_{k,l>0} q^{k+l} / ((1-q^k)(1-q^l)(1-q^{k+l}))`.
//!
//! Termination of coefficient extraction needs every variable to carry
//! positive total q-valuation: with `v_f` the valuation of `p_f`, the weight
//! `w_i = sum_f v_f a_{f,i}` must be >= 1 for each variable. Individual
//! coupling factors may have numerators with nonzero constant term (such as
//! `1/(1-q^{n_1+n_2})`) as long as the other factors cover their variables.

use crate::composition::Composition;
use crate::numerator::numerator_poly;
use exact_core::poly::Polynomial;
use exact_core::rational::render_rational;
use exact_core::ring::Ring;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSemantics {
    /// `n_1 > n_2 > ... > n_k >= 1`.
    Chain,
    /// Each `n_i >= 1` independently.
    Free,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TemplateError {
    #[error("a template needs at least one bound variable")]
    NoVariables,
    #[error("a template needs at least one factor")]
    NoFactors,
    #[error("factor {factor}: linear form has {got} coefficients, expected {expected}")]
    FormArity { factor: usize, got: usize, expected: usize },
    #[error("factor {factor}: linear form is identically zero")]
    ZeroForm { factor: usize },
    #[error("factor {factor}: numerator polynomial is zero")]
    ZeroNumerator { factor: usize },
    #[error("factor {factor}: denominator exponent must be at least 1")]
    ZeroDenominator { factor: usize },
    #[error("variable n_{} carries zero total q-valuation, so the sum does not terminate coefficientwise", var + 1)]
    UncoveredVariable { var: usize },
    #[error("the chain evaluator needs chain semantics and factor i matched to variable n_i")]
    NotChainShaped,
}

/// One factor `p(x) / (1 - x)^s` at `x = q^{L(n)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateFactor {
    pub numerator: Polynomial,
    pub den_power: u32,
    /// Coefficients `a_i` of `L(n) = sum a_i n_i`; length = variable count.
    pub form: Vec<u32>,
}

impl TemplateFactor {
    /// Valuation of the numerator in `x` (0 for a constant term).
    pub fn num_valuation(&self) -> usize {
        (0..=self.numerator.degree().unwrap_or(0))
            .position(|j| !self.numerator.coeff(j).is_zero())
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumTemplate {
    vars: usize,
    semantics: SumSemantics,
    factors: Vec<TemplateFactor>,
}

impl SumTemplate {
    pub fn new(
        vars: usize,
        semantics: SumSemantics,
        factors: Vec<TemplateFactor>,
    ) -> Result<Self, TemplateError> {
        if vars == 0 {
            return Err(TemplateError::NoVariables);
        }
        if factors.is_empty() {
            return Err(TemplateError::NoFactors);
        }
        for (idx, f) in factors.iter().enumerate() {
            if f.form.len() != vars {
                return Err(TemplateError::FormArity { factor: idx, got: f.form.len(), expected: vars });
            }
            if f.form.iter().all(|&a| a == 0) {
                return Err(TemplateError::ZeroForm { factor: idx });
            }
            if f.numerator.is_zero() {
                return Err(TemplateError::ZeroNumerator { factor: idx });
            }
            if f.den_power == 0 {
                return Err(TemplateError::ZeroDenominator { factor: idx });
            }
        }
        let template = Self { vars, semantics, factors };
        for (var, &w) in template.variable_weights().iter().enumerate() {
            if w == 0 {
                return Err(TemplateError::UncoveredVariable { var });
            }
        }
        Ok(template)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn semantics(&self) -> SumSemantics {
        self.semantics
    }

    pub fn factors(&self) -> &[TemplateFactor] {
        &self.factors
    }

    /// Total q-valuation weight per variable: `w_i = sum_f v_f a_{f,i}`.
    pub fn variable_weights(&self) -> Vec<usize> {
        let mut weights = vec![0usize; self.vars];
        for f in &self.factors {
            let v = f.num_valuation();
            for (i, &a) in f.form.iter().enumerate() {
                weights[i] += v * a as usize;
            }
        }
        weights
    }

    /// Whether the chain evaluator applies: chain semantics with factor `i`
    /// being a single-variable factor in `n_i`, one per variable, in order.
    pub fn is_chain_shaped(&self) -> bool {
        self.semantics == SumSemantics::Chain
            && self.factors.len() == self.vars
            && self.factors.iter().enumerate().all(|(i, f)| {
                f.form.iter().enumerate().all(|(j, &a)| if j == i { a == 1 } else { a == 0 })
            })
    }

    /// Canonical one-line text form, reparseable by the CLI.
    pub fn render(&self) -> String {
        let prefix = match self.semantics {
            SumSemantics::Chain => "",
            SumSemantics::Free => "free: ",
        };
        let factors: Vec<String> = self.factors.iter().map(|f| render_factor(f)).collect();
        format!("{prefix}{}", factors.join(" | "))
    }
}

fn render_form(form: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &a) in form.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let var = format!("n{}", i + 1);
        parts.push(if a == 1 { var } else { format!("{a}*{var}") });
    }
    parts.join("+")
}

fn render_numerator(poly: &Polynomial) -> String {
    let mut parts = Vec::new();
    for j in 0..=poly.degree().unwrap_or(0) {
        let c = poly.coeff(j);
        if c.is_zero() {
            continue;
        }
        let body = match j {
            0 => render_rational(&c),
            1 => "x".to_owned(),
            _ => format!("x^{j}"),
        };
        if j > 0 && c != exact_core::rational::rat(1) {
            parts.push(format!("{}*{}", render_rational(&c), body));
        } else {
            parts.push(body);
        }
    }
    parts.join("+")
}

fn render_factor(f: &TemplateFactor) -> String {
    format!(
        "num={}; den={}; L={}",
        render_numerator(&f.numerator),
        f.den_power,
        render_form(&f.form)
    )
}

impl fmt::Display for SumTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The chain template computing `Z(s)`: factor `i` is
/// `p_{s_i}(x)/(1-x)^{s_i}` at `x = q^{n_i}`.
pub fn zeta_template(s: &Composition) -> SumTemplate {
    let k = s.depth();
    let factors = s
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &si)| {
            let mut form = vec![0u32; k];
            form[i] = 1;
            TemplateFactor {
                numerator: numerator_poly(si).expect("parts >= 2").poly().clone(),
                den_power: si,
                form,
            }
        })
        .collect();
    SumTemplate::new(k, SumSemantics::Chain, factors).expect("zeta template is always valid")
}
