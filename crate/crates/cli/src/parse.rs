//! Text forms accepted on the command line.
//!
//! Every parser accepts the canonical rendering of its own output, so
//! parse-render round trips are the identity on canonical forms.

use dt_local::TPoint;
use exact_core::poly::Polynomial;
use exact_core::rational::{parse_rational, Rational};
use num_traits::Zero;
use partitions::PlanePartition;
use qzeta::{
    Composition, CompositionError, SumSemantics, SumTemplate, TemplateError, TemplateFactor,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error("malformed composition `{0}`: expected `Z(3,2,2)` or `3,2,2`")]
    CompositionSyntax(String),
    #[error("factor {factor}: missing `{key}=` (a factor reads `num=<poly>; den=<int>; L=<form>`)")]
    MissingKey { factor: usize, key: &'static str },
    #[error("factor {factor}: unknown key `{key}` (expected num, den, L)")]
    UnknownKey { factor: usize, key: String },
    #[error("factor {factor}: numerator must vanish at x = 0, otherwise the coefficientwise sum diverges")]
    ConstantNumerator { factor: usize },
    #[error("factor {factor}: malformed polynomial `{text}` (terms look like `x`, `x^2`, `3/2*x`)")]
    Polynomial { factor: usize, text: String },
    #[error("factor {factor}: malformed linear form `{text}` (terms look like `n1`, `2*n3`)")]
    Form { factor: usize, text: String },
    #[error("factor {factor}: unknown variable `{var}` (variables are n1, n2, ...)")]
    UnknownVariable { factor: usize, var: String },
    #[error("malformed t-point `{0}`: expected three comma-separated rationals, e.g. `7,13,-29`")]
    TPoint(String),
    #[error("t-point coordinates must all be nonzero")]
    ZeroCoordinate,
    #[error("malformed plane partition `{text}`: {reason}")]
    Diagram { text: String, reason: String },
    #[error("bad rational `{0}`")]
    Rational(String),
    #[error("bad range `{0}`: expected `lo,hi`")]
    Range(String),
}

/// Accepts `Z(3,2,2)` (case-insensitive prefix) or a bare list `3,2,2`.
pub fn parse_composition(text: &str) -> Result<Composition, ParseError> {
    let trimmed = text.trim();
    let inner = match trimmed.strip_prefix(['Z', 'z']) {
        Some(rest) => {
            let rest = rest.trim_start();
            rest.strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| ParseError::CompositionSyntax(text.to_owned()))?
        }
        None => trimmed,
    };
    if inner.trim().is_empty() {
        return Err(ParseError::CompositionSyntax(text.to_owned()));
    }
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| ParseError::CompositionSyntax(text.to_owned()))?;
    Ok(Composition::new(parts)?)
}

/// Grammar: optional `free:` prefix, then `|`-separated factors, each a
/// `;`-separated list `num=<poly in x>; den=<int>; L=<linear form in n1..nk>`.
/// Variables are implicitly chain-ordered `n1 > n2 > ... >= 1` unless the
/// free prefix asks for independent ranges.
pub fn parse_template(text: &str) -> Result<SumTemplate, ParseError> {
    let trimmed = text.trim();
    let (semantics, body) = match trimmed.strip_prefix("free:") {
        Some(rest) => (SumSemantics::Free, rest),
        None => (SumSemantics::Chain, trimmed),
    };
    let mut raw = Vec::new();
    for (idx, factor_text) in body.split('|').enumerate() {
        raw.push(parse_factor(idx, factor_text)?);
    }
    let vars = raw.iter().map(|(_, _, form)| form.len()).max().unwrap_or(0);
    let factors = raw
        .into_iter()
        .map(|(numerator, den_power, mut form)| {
            form.resize(vars, 0);
            TemplateFactor { numerator, den_power, form }
        })
        .collect();
    Ok(SumTemplate::new(vars, semantics, factors)?)
}

/// One factor; returns the form as a sparse-by-index dense vector trimmed
/// to the highest variable it mentions.
fn parse_factor(
    idx: usize,
    text: &str,
) -> Result<(Polynomial, u32, Vec<u32>), ParseError> {
    let mut numerator = None;
    let mut den_power = None;
    let mut form = None;
    for field in text.split(';') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| ParseError::UnknownKey { factor: idx, key: field.to_owned() })?;
        match key.trim() {
            "num" => numerator = Some(parse_poly(idx, value.trim())?),
            "den" => {
                den_power = Some(value.trim().parse::<u32>().map_err(|_| {
                    ParseError::Polynomial { factor: idx, text: value.trim().to_owned() }
                })?)
            }
            "L" => form = Some(parse_form(idx, value.trim())?),
            other => {
                return Err(ParseError::UnknownKey { factor: idx, key: other.to_owned() })
            }
        }
    }
    let numerator = numerator.ok_or(ParseError::MissingKey { factor: idx, key: "num" })?;
    let den_power = den_power.ok_or(ParseError::MissingKey { factor: idx, key: "den" })?;
    let form = form.ok_or(ParseError::MissingKey { factor: idx, key: "L" })?;
    if !numerator.coeff(0).is_zero() {
        return Err(ParseError::ConstantNumerator { factor: idx });
    }
    Ok((numerator, den_power, form))
}

/// Sum of signed terms `c`, `x`, `x^k`, `c*x^k` with rational `c`.
fn parse_poly(idx: usize, text: &str) -> Result<Polynomial, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || ParseError::Polynomial { factor: idx, text: text.to_owned() };
    if compact.is_empty() {
        return Err(err());
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in split_signed_terms(&compact) {
        let (coeff, degree) = parse_poly_term(&term).ok_or_else(err)?;
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, Rational::zero());
        }
        coeffs[degree] += coeff;
    }
    Ok(Polynomial::new(coeffs))
}

/// Splits at `+`/`-` that start a new term, keeping the sign attached.
fn split_signed_terms(compact: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with(['*', '/', '^']) {
            terms.push(std::mem::take(&mut cur));
        }
        if ch == '+' && cur.is_empty() {
            continue;
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    terms
}

fn parse_poly_term(term: &str) -> Option<(Rational, usize)> {
    match term.find('x') {
        None => parse_rational(term).ok().map(|c| (c, 0)),
        Some(pos) => {
            let (head, tail) = term.split_at(pos);
            let coeff = match head {
                "" => Rational::from_integer(1.into()),
                "-" => Rational::from_integer((-1).into()),
                c => parse_rational(c.strip_suffix('*').unwrap_or(c)).ok()?,
            };
            let degree = match &tail[1..] {
                "" => 1,
                exp => exp.strip_prefix('^')?.parse::<usize>().ok()?,
            };
            Some((coeff, degree))
        }
    }
}

/// Sum of terms `n3` or `2*n3`; coefficients are nonnegative integers.
fn parse_form(idx: usize, text: &str) -> Result<Vec<u32>, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |t: &str| ParseError::Form { factor: idx, text: t.to_owned() };
    if compact.is_empty() {
        return Err(err(text));
    }
    let mut coeffs: Vec<u32> = Vec::new();
    for term in compact.split('+') {
        let (coeff, var) = match term.split_once('*') {
            Some((c, v)) => (c.parse::<u32>().map_err(|_| err(term))?, v),
            None => (1, term),
        };
        let var_index = var
            .strip_prefix('n')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| ParseError::UnknownVariable { factor: idx, var: var.to_owned() })?;
        if coeffs.len() < var_index {
            coeffs.resize(var_index, 0);
        }
        coeffs[var_index - 1] += coeff;
    }
    Ok(coeffs)
}

/// Three comma-separated nonzero rationals, e.g. `7,13,-29` or `1/2,3,-4/5`.
pub fn parse_tpoint(text: &str) -> Result<TPoint, ParseError> {
    let coords = text
        .split(',')
        .map(|c| parse_rational(c.trim()).map_err(|_| ParseError::TPoint(text.to_owned())))
        .collect::<Result<Vec<Rational>, _>>()?;
    let [t1, t2, t3]: [Rational; 3] =
        coords.try_into().map_err(|_| ParseError::TPoint(text.to_owned()))?;
    if t1.is_zero() || t2.is_zero() || t3.is_zero() {
        return Err(ParseError::ZeroCoordinate);
    }
    Ok(TPoint::new(t1, t2, t3))
}

/// Rows of heights separated by `/`, e.g. `2 1 / 1`; `-` is the empty diagram.
pub fn parse_diagram(text: &str) -> Result<PlanePartition, ParseError> {
    let trimmed = text.trim();
    if trimmed == "-" || trimmed.is_empty() {
        return Ok(PlanePartition::empty());
    }
    let mut rows = Vec::new();
    for row in trimmed.split('/') {
        let heights = row
            .split_whitespace()
            .map(|h| h.parse::<u32>())
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|e| ParseError::Diagram { text: text.to_owned(), reason: e.to_string() })?;
        rows.push(heights);
    }
    PlanePartition::new(rows)
        .map_err(|e| ParseError::Diagram { text: text.to_owned(), reason: e.to_string() })
}

pub fn parse_rational_arg(text: &str) -> Result<Rational, ParseError> {
    parse_rational(text.trim()).map_err(|_| ParseError::Rational(text.to_owned()))
}

/// Comma-separated list of rationals (used for `--q0` schedules).
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    text.split(',').map(parse_rational_arg).collect()
}

/// `lo,hi` part range for basis construction.
pub fn parse_range(text: &str) -> Result<(u32, u32), ParseError> {
    let (lo, hi) = text.split_once(',').ok_or_else(|| ParseError::Range(text.to_owned()))?;
    let lo = lo.trim().parse::<u32>().map_err(|_| ParseError::Range(text.to_owned()))?;
    let hi = hi.trim().parse::<u32>().map_err(|_| ParseError::Range(text.to_owned()))?;
    Ok((lo, hi))
}

/// Comma-separated list of nonnegative integers (descendent indices).
pub fn parse_u32_list(text: &str) -> Result<Vec<u32>, ParseError> {
    text.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| ParseError::Rational(p.to_owned())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qzeta::zeta_template;

    #[test]
    fn compositions_in_both_text_forms() {
        let wrapped = parse_composition("Z(3,2,2)").unwrap();
        let bare = parse_composition("3, 2, 2").unwrap();
        assert_eq!(wrapped, bare);
        assert_eq!(wrapped.to_string(), "Z(3,2,2)");
        assert_eq!(parse_composition("Z(2)").unwrap().parts(), &[2]);
    }

    #[test]
    fn composition_parse_render_is_idempotent() {
        for text in ["Z(2)", "Z(3,2,2)", "Z(8)", "Z(2,2,2,2)"] {
            let c = parse_composition(text).unwrap();
            assert_eq!(c.to_string(), text);
            assert_eq!(parse_composition(&c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn small_parts_are_rejected_with_the_restriction() {
        let err = parse_composition("Z(1,2)").unwrap_err();
        assert!(err.to_string().contains("at least 2"), "{err}");
        assert!(parse_composition("Z()").is_err());
        assert!(parse_composition("Z(2").is_err());
        assert!(parse_composition("spam").is_err());
    }

    #[test]
    fn zeta_templates_round_trip_through_their_rendering() {
        for parts in [&[2][..], &[3, 2][..], &[5, 3, 2][..]] {
            let template = zeta_template(&Composition::new(parts.to_vec()).unwrap());
            let reparsed = parse_template(&template.render()).unwrap();
            assert_eq!(reparsed, template);
            assert_eq!(reparsed.render(), template.render());
        }
    }

    #[test]
    fn coupled_double_sum_parses_with_free_semantics() {
        let text = "free: num=x;den=1;L=n1 | num=x;den=1;L=n2 | num=x;den=1;L=n1+n2";
        let template = parse_template(text).unwrap();
        assert_eq!(template.vars(), 2);
        assert_eq!(template.semantics(), SumSemantics::Free);
        assert_eq!(template.factors().len(), 3);
        assert_eq!(template.factors()[2].form, vec![1, 1]);
        let reparsed = parse_template(&template.render()).unwrap();
        assert_eq!(reparsed, template);
    }

    #[test]
    fn chain_is_the_default_semantics() {
        let template = parse_template("num=x;den=2;L=n1").unwrap();
        assert_eq!(template.semantics(), SumSemantics::Chain);
        assert!(template.is_chain_shaped());
    }

    #[test]
    fn constant_numerators_are_rejected() {
        let err = parse_template("num=1;den=2;L=n1").unwrap_err();
        assert!(err.to_string().contains("vanish at x = 0"), "{err}");
        let err = parse_template("num=1+x;den=2;L=n1").unwrap_err();
        assert!(err.to_string().contains("vanish at x = 0"), "{err}");
    }

    #[test]
    fn template_field_errors_name_the_factor() {
        assert!(matches!(
            parse_template("num=x;den=1;L=n1 | num=x;L=n1").unwrap_err(),
            ParseError::MissingKey { factor: 1, key: "den" }
        ));
        assert!(matches!(
            parse_template("num=x;den=1;L=m1").unwrap_err(),
            ParseError::UnknownVariable { factor: 0, .. }
        ));
        assert!(matches!(
            parse_template("num=x;den=1;L=n1;extra=2").unwrap_err(),
            ParseError::UnknownKey { factor: 0, .. }
        ));
    }

    #[test]
    fn polynomials_with_signs_and_rational_coefficients() {
        let p = parse_poly(0, "x^2 + 3/2*x^3 - x^4").unwrap();
        assert_eq!(p.coeff(2), exact_core::rational::rat(1));
        assert_eq!(p.coeff(3), exact_core::rational::ratio(3, 2));
        assert_eq!(p.coeff(4), exact_core::rational::rat(-1));
        assert!(parse_poly(0, "x^").is_err());
        assert!(parse_poly(0, "y").is_err());
    }

    #[test]
    fn t_points_accept_integers_and_fractions() {
        let t = parse_tpoint("7, 13, -29").unwrap();
        assert_eq!(t.to_string(), "(7, 13, -29)");
        let t = parse_tpoint("1/2,3,-4/5").unwrap();
        assert_eq!(t.t1(), &exact_core::rational::ratio(1, 2));
        assert!(matches!(parse_tpoint("1,2").unwrap_err(), ParseError::TPoint(_)));
        assert!(matches!(parse_tpoint("0,1,2").unwrap_err(), ParseError::ZeroCoordinate));
    }

    #[test]
    fn diagrams_round_trip_through_their_text_form() {
        let pp = parse_diagram("2 1 / 1").unwrap();
        assert_eq!(pp.size(), 4);
        assert_eq!(pp.to_string(), "2 1 / 1");
        assert_eq!(parse_diagram(&pp.to_string()).unwrap(), pp);
        assert!(parse_diagram("-").unwrap().is_empty());
        assert!(parse_diagram("1 2").is_err());
    }

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_range("2, 8").unwrap(), (2, 8));
        assert!(parse_range("2").is_err());
        assert_eq!(parse_u32_list("0,1,2").unwrap(), vec![0, 1, 2]);
        assert_eq!(
            parse_rational_list("9/10,99/100").unwrap(),
            vec![exact_core::rational::ratio(9, 10), exact_core::rational::ratio(99, 100)]
        );
    }
}
