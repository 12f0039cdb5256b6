//! The `z` verb: series evaluation with optional oracle cross-checks.

use serde_json::json;

use exact_core::json::series_to_json;
use qzeta::{multisum_with, zeta_q, zeta_q_oracle, Engine, SumSemantics, SumTemplate};

use super::{coefficient_table, first_mismatch, Context};
use crate::args::ZArgs;
use crate::parse::{parse_composition, parse_template};
use crate::report::{Check, Report};
use crate::CliError;

pub fn run_z(args: &ZArgs, ctx: &Context) -> Result<Report, CliError> {
    let mut report = Report::new("z");
    let order = args.order;
    let series = if let Some(text) = &args.s {
        let comp = parse_composition(text)?;
        report.param("s", &comp);
        report.param("order", order);
        let key = json!({"s": comp.to_string()});
        let value = comp.clone();
        let series =
            ctx.cached_series(&mut report, "zeta", &key, order, move || zeta_q(&value, order))?;
        if args.oracle {
            let oracle = zeta_q_oracle(&comp, order);
            let detail = match first_mismatch(&series, &oracle) {
                None => format!("nested-chain evaluation matches the direct enumeration through q^{order}"),
                Some(n) => format!("first disagreement with the direct enumeration at q^{n}"),
            };
            report.check(Check::of("oracle agreement", oracle == series, detail));
        }
        series
    } else if let Some(text) = &args.template {
        let mut template = parse_template(text)?;
        if args.free && template.semantics() != SumSemantics::Free {
            template = SumTemplate::new(
                template.vars(),
                SumSemantics::Free,
                template.factors().to_vec(),
            )?;
        }
        report.param("template", template.render());
        report.param(
            "semantics",
            match template.semantics() {
                SumSemantics::Chain => "chain (n1 > n2 > ... >= 1)",
                SumSemantics::Free => "free (each ni >= 1 independently)",
            },
        );
        report.param("order", order);
        let key = json!({"template": template.render()});
        let value = template.clone();
        let series = ctx.cached_series(&mut report, "template", &key, order, move || {
            multisum_with(&value, order, Engine::Auto).expect("parsed templates are valid")
        })?;
        if args.oracle {
            if template.is_chain_shaped() {
                let oracle = multisum_with(&template, order, Engine::Enumerate)?;
                let detail = match first_mismatch(&series, &oracle) {
                    None => format!("chain recursion matches the direct enumeration through q^{order}"),
                    Some(n) => format!("first disagreement with the direct enumeration at q^{n}"),
                };
                report.check(Check::of("oracle agreement", oracle == series, detail));
            } else {
                report.line(
                    "oracle skipped: direct enumeration is already the only evaluator for this shape"
                        .to_owned(),
                );
            }
        }
        series
    } else {
        return Err(CliError::Usage("z needs --s or --template".to_owned()));
    };
    for (n, c) in series.coeffs().iter().enumerate() {
        report.line(format!("q^{n}: {}", exact_core::rational::render_rational(c)));
    }
    report.set_table(coefficient_table(&series));
    report.set_payload(series_to_json(&series));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::{Cli, Verb};
    use clap::Parser;

    fn z_args(argv: &[&str]) -> ZArgs {
        let mut full = vec!["qzeta", "z"];
        full.extend_from_slice(argv);
        match Cli::try_parse_from(full).unwrap().verb {
            Verb::Z(args) => args,
            _ => unreachable!(),
        }
    }

    #[test]
    fn divisor_sums_come_out_of_the_documented_example() {
        let ctx = Context::new(None);
        let report = run_z(&z_args(&["--s", "3", "--order", "5"]), &ctx).unwrap();
        let payload = report.payload().unwrap();
        assert_eq!(
            payload.to_string(),
            r#"{"order":5,"coeffs":["0","1","5","10","21","26"]}"#
        );
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn oracle_check_passes_for_a_depth_two_value() {
        let ctx = Context::new(None);
        let report = run_z(&z_args(&["--s", "Z(2,2)", "--order", "12", "--oracle"]), &ctx).unwrap();
        assert_eq!(report.checks().len(), 1);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn template_evaluation_matches_the_composition_route() {
        let ctx = Context::new(None);
        let direct = run_z(&z_args(&["--s", "Z(2)", "--order", "8"]), &ctx).unwrap();
        let template =
            run_z(&z_args(&["--template", "num=x;den=2;L=n1", "--order", "8", "--oracle"]), &ctx)
                .unwrap();
        assert_eq!(direct.payload(), template.payload());
        assert_eq!(template.exit_code(), 0);
    }

    #[test]
    fn free_flag_changes_the_summation_region() {
        let ctx = Context::new(None);
        let text = "num=x;den=2;L=n1 | num=x;den=2;L=n2";
        let chain = run_z(&z_args(&["--template", text, "--order", "6"]), &ctx).unwrap();
        let free = run_z(&z_args(&["--template", text, "--order", "6", "--free"]), &ctx).unwrap();
        assert_ne!(chain.payload(), free.payload());
    }

    #[test]
    fn missing_input_is_a_usage_error() {
        let ctx = Context::new(None);
        assert!(matches!(run_z(&z_args(&["--order", "4"]), &ctx), Err(CliError::Usage(_))));
    }
}
