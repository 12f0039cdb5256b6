//! Relation verbs: stuffle expansions, span membership, derivative
//! closure, dimension profiles, and the dimension battery.

use serde_json::json;

use exact_core::rational::{render_rational, Rational};
use exact_core::series::RationalSeries;
use num_traits::One;
use qzeta::Composition;
use relations::{
    derivative_closure, filtered_dims, hilbert_coeffs, monomial_basis, parity_audit,
    stable_span_membership, stuffle_product, CertificateStatus, ClosureOutcome, Generator,
    Membership, MonomialLabel, RelationCertificate, SeriesCache, SpanReading,
};

use super::first_mismatch;
use crate::args::{
    ClosureArgs, Conjecture1Args, DimsArgs, Expectation, MembershipArgs, Reading, StuffleArgs,
};
use crate::parse::{parse_composition, parse_range};
use crate::report::{Check, Report};
use crate::CliError;

fn zeta_label(comp: &Composition) -> MonomialLabel {
    MonomialLabel::single(Generator::zeta(comp.clone()))
}

/// `2*Z(2,2) + Z(4)`-style right-hand side.
fn render_expansion(expansion: &[(Composition, Rational)]) -> String {
    let terms: Vec<String> = expansion
        .iter()
        .map(|(comp, coeff)| {
            if coeff.is_one() {
                comp.to_string()
            } else {
                format!("{}*{comp}", render_rational(coeff))
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn run_stuffle(args: &StuffleArgs) -> Result<Report, CliError> {
    let a = parse_composition(&args.a)?;
    let b = parse_composition(&args.b)?;
    let order = args.order;
    let mut report = Report::new("stuffle");
    report.param("a", &a);
    report.param("b", &b);
    report.param("order", order);

    let expansion = stuffle_product(&a, &b);
    report.line(format!("{a}*{b} = {}", render_expansion(&expansion)));

    let mut cache = SeriesCache::new();
    let lhs = cache.zeta_series(&a, order).mul(&cache.zeta_series(&b, order));
    let mut rhs = RationalSeries::zero(order);
    for (comp, coeff) in &expansion {
        rhs = rhs.add(&cache.zeta_series(comp, order).scale(coeff));
    }
    let detail = match first_mismatch(&lhs, &rhs) {
        None => format!("both sides agree exactly through q^{order}"),
        Some(n) => format!("sides first disagree at q^{n}"),
    };
    report.check(Check::of("expansion matches the series product", lhs == rhs, detail));

    // The expansion rearranged as a vanishing combination, for the audit
    // trail and the parity reading.
    let mut labels = vec![MonomialLabel::new(vec![
        Generator::zeta(a.clone()),
        Generator::zeta(b.clone()),
    ])];
    let mut coefficients = vec![Rational::one()];
    for (comp, coeff) in &expansion {
        labels.push(zeta_label(comp));
        coefficients.push(-coeff.clone());
    }
    let certificate =
        RelationCertificate::new(labels, coefficients, order, CertificateStatus::Candidate);
    let parity = parity_audit(std::slice::from_ref(&certificate));
    let weights: Vec<u32> = certificate.labels().iter().map(MonomialLabel::weight).collect();
    report.check(Check::of(
        "weight parity",
        parity.all_pass(),
        format!("support weights {weights:?} lie in one parity class"),
    ));

    let mut table = vec![vec!["label".to_owned(), "coefficient".to_owned()]];
    for (comp, coeff) in &expansion {
        table.push(vec![comp.to_string(), render_rational(coeff)]);
    }
    report.set_table(table);
    report.set_payload(json!({
        "a": a.to_string(),
        "b": b.to_string(),
        "order": order,
        "expansion": expansion.iter().map(|(comp, coeff)| json!({
            "label": comp.to_string(),
            "coefficient": render_rational(coeff),
        })).collect::<Vec<_>>(),
        "certificate": certificate.to_json(),
    }));
    Ok(report)
}

fn membership_payload(membership: &Membership) -> serde_json::Value {
    match membership {
        Membership::Member(cert) => json!({"status": "member", "certificate": cert.to_json()}),
        Membership::NotInSpan { order } => json!({"status": "not-in-span", "order": order}),
        Membership::Refuted(cert) => json!({"status": "refuted", "certificate": cert.to_json()}),
    }
}

pub fn run_membership(args: &MembershipArgs) -> Result<Report, CliError> {
    let comp = parse_composition(&args.target)?;
    let max_weight = args.max_weight.unwrap_or(comp.weight() + 2 * args.derive as u32);
    let (lo, hi) = match &args.parts {
        Some(text) => parse_range(text)?,
        None => (2, max_weight.max(2)),
    };
    let target_name = match args.derive {
        0 => comp.to_string(),
        1 => format!("D {comp}"),
        l => format!("D^{l} {comp}"),
    };
    let mut report = Report::new("relations membership");
    report.param("target", &target_name);
    report.param("max-weight", max_weight);
    report.param("parts", format!("{lo},{hi}"));
    report.param("order", args.order);
    report.param("margin", args.margin);

    let mut cache = SeriesCache::new();
    let mut target = cache.zeta_series(&comp, args.order + args.margin);
    for _ in 0..args.derive {
        target = target.q_derive();
    }
    let basis = monomial_basis(max_weight, lo, hi)?;
    report.param("basis-size", basis.len());
    let membership = stable_span_membership(&target, &basis, args.order, args.margin, &mut cache);

    let is_member = membership.is_member();
    let detail = match &membership {
        Membership::Member(cert) => {
            format!(
                "{target_name} = {} (verified through q^{})",
                cert.render(),
                cert.verified_order()
            )
        }
        Membership::NotInSpan { order } => format!(
            "the linear system through q^{order} is inconsistent; no higher order can repair it"
        ),
        Membership::Refuted(cert) => format!(
            "candidate {} matched through q^{} but failed within the margin",
            cert.render(),
            args.order
        ),
    };
    let expected_member = args.expect == Expectation::Member;
    report.check(Check::of("span membership", is_member == expected_member, detail));
    report.set_payload(json!({
        "target": target_name,
        "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "membership": membership_payload(&membership),
    }));
    Ok(report)
}

pub fn run_closure(args: &ClosureArgs) -> Result<Report, CliError> {
    let (lo, hi) = match &args.parts {
        Some(text) => parse_range(text)?,
        None => (2, args.max_weight + 2),
    };
    let mut report = Report::new("relations closure");
    report.param("max-weight", args.max_weight);
    report.param("parts", format!("{lo},{hi}"));
    report.param("order", args.order);
    report.param("margin", args.margin);

    let mut cache = SeriesCache::new();
    let closure =
        derivative_closure(args.max_weight, lo, hi, args.order, args.margin, &mut cache)?;
    let mut expressed = Vec::new();
    let mut entries = Vec::new();
    for entry in &closure.entries {
        let name = format!("q d/dq {}", entry.label);
        let (check, status) = match &entry.outcome {
            ClosureOutcome::ZeroDerivative => {
                (Check::pass(&name, "the derivative is identically zero"), json!({"status": "zero"}))
            }
            ClosureOutcome::Expressed(cert) => {
                let check = Check::pass(
                    &name,
                    format!("= {} (weight {})", cert.render(), entry.weight + 2),
                );
                expressed.push(cert.clone());
                (check, json!({"status": "expressed", "certificate": cert.to_json()}))
            }
            ClosureOutcome::NotInSpan { order } => (
                Check::fail(&name, format!("escapes the weight-{} span through q^{order}", entry.weight + 2)),
                json!({"status": "not-in-span", "order": order}),
            ),
            ClosureOutcome::Refuted(cert) => (
                Check::fail(&name, format!("candidate {} failed within the margin", cert.render())),
                json!({"status": "refuted", "certificate": cert.to_json()}),
            ),
        };
        report.check(check);
        entries.push(json!({"label": entry.label.to_string(), "weight": entry.weight, "outcome": status}));
    }
    let parity = parity_audit(&expressed);
    report.check(Check::of(
        "weight parity of the discovered relations",
        parity.all_pass(),
        format!("{} certificates, each supported on one parity class", expressed.len()),
    ));
    report.set_payload(json!({
        "order": closure.order,
        "margin": closure.margin,
        "entries": entries,
    }));
    Ok(report)
}

fn dims_common(
    report: &mut Report,
    max_weight: u32,
    lo: u32,
    hi: u32,
    order: usize,
    check_order: usize,
    reading: SpanReading,
) -> Result<relations::FilteredDims, CliError> {
    report.param("max-weight", max_weight);
    report.param("parts", format!("{lo},{hi}"));
    report.param("order", order);
    report.param("check-order", check_order);
    let mut cache = SeriesCache::new();
    Ok(filtered_dims(max_weight, lo, hi, order, check_order, reading, &mut cache)?)
}

pub fn run_dims(args: &DimsArgs) -> Result<Report, CliError> {
    let check_order = args.check_order.unwrap_or(args.order + 20);
    let (lo, hi) = match &args.parts {
        Some(text) => parse_range(text)?,
        None => (2, args.max_weight.max(2)),
    };
    let reading = match args.reading {
        Reading::Products => SpanReading::Products,
        Reading::Singles => SpanReading::SinglesOnly,
    };
    let mut report = Report::new("dims");
    report.param(
        "reading",
        match reading {
            SpanReading::Products => "products",
            SpanReading::SinglesOnly => "singles",
        },
    );
    let fd = dims_common(&mut report, args.max_weight, lo, hi, args.order, check_order, reading)?;

    let mut table =
        vec![vec!["weight".to_owned(), "dim".to_owned(), "graded".to_owned(), "stabilized".to_owned()]];
    report.line("weight  dim  graded  stabilized".to_owned());
    for w in 0..=args.max_weight as usize {
        report.line(format!(
            "{w:>6}  {:>3}  {:>6}  {}",
            fd.dims[w], fd.gr_dims[w], fd.stabilized[w]
        ));
        table.push(vec![
            w.to_string(),
            fd.dims[w].to_string(),
            fd.gr_dims[w].to_string(),
            fd.stabilized[w].to_string(),
        ]);
    }
    let unstable: Vec<usize> =
        (0..=args.max_weight as usize).filter(|&w| !fd.stabilized[w]).collect();
    let check = if unstable.is_empty() {
        Check::pass(
            "rank stabilization",
            format!("every filtered rank agrees between q^{} and q^{check_order}", args.order),
        )
    } else {
        Check::inconclusive(
            "rank stabilization",
            format!("ranks at weights {unstable:?} still move; raise the order"),
        )
    };
    report.check(check);
    report.set_table(table);
    report.set_payload(json!({
        "dims": fd.dims,
        "grDims": fd.gr_dims,
        "stabilized": fd.stabilized,
        "order": fd.order,
        "checkOrder": fd.check_order,
    }));
    Ok(report)
}

pub fn run_conjecture1(args: &Conjecture1Args) -> Result<Report, CliError> {
    let check_order = args.check_order.unwrap_or(args.order + 20);
    let mut report = Report::new("conjecture1");
    let fd = dims_common(
        &mut report,
        args.max_weight,
        2,
        args.max_weight.max(2),
        args.order,
        check_order,
        SpanReading::Products,
    )?;
    let forecast = hilbert_coeffs(args.max_weight);

    let mut table = vec![vec![
        "weight".to_owned(),
        "graded".to_owned(),
        "forecast".to_owned(),
        "stabilized".to_owned(),
        "verdict".to_owned(),
    ]];
    report.line("weight  graded  forecast  stabilized".to_owned());
    for w in 0..=args.max_weight as usize {
        let computed = fd.gr_dims[w];
        let expected = forecast.gr_dims[w];
        report.line(format!(
            "{w:>6}  {computed:>6}  {expected:>8}  {}",
            fd.stabilized[w]
        ));
        let check = if !fd.stabilized[w] {
            Check::inconclusive(
                format!("weight {w}"),
                format!("rank not stabilized between q^{} and q^{check_order}", args.order),
            )
        } else if computed == expected {
            Check::pass(
                format!("weight {w}"),
                format!("graded dimension {computed} matches the generating function"),
            )
        } else {
            report.finding(format!(
                "weight {w}: computed graded dimension {computed}, generating function forecasts {expected}"
            ));
            Check::fail(
                format!("weight {w}"),
                format!("computed {computed}, forecast {expected}"),
            )
        };
        let verdict = check.verdict;
        report.check(check);
        table.push(vec![
            w.to_string(),
            computed.to_string(),
            expected.to_string(),
            fd.stabilized[w].to_string(),
            verdict.as_str().to_owned(),
        ]);
    }
    report.set_table(table);
    report.set_payload(json!({
        "grDims": fd.gr_dims,
        "forecast": forecast.gr_dims,
        "dims": fd.dims,
        "stabilized": fd.stabilized,
        "order": fd.order,
        "checkOrder": fd.check_order,
    }));
    Ok(report)
}
