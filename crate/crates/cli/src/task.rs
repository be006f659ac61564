//! Tasks shared by the subcommands and corpus entries.

use braidcert::braid::BraidWord;
use braidcert::certify::{
    certify_closed_braid_cover, certify_fibred_cover, certify_genus1_cover, certify_orbifold_cover,
    certify_satellite, Certificate, Companion, Hypotheses,
};
use braidcert::dehornoy::{compare_with, dehornoy_floor_with, sigma_sign_with, ReductionBudget};
use braidcert::fdtc::{fdtc_interval_with, FdtcKind, FdtcValue};
use braidcert::rational::{parse_rational, Rational};
use braidcert::threebraid::{baldwin_lspace_double_cover, normal_form, nt_type};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Clone, Debug)]
pub enum Task {
    /// Sign of the braid, or its comparison with `other`.
    Order {
        other: Option<BraidWord>,
    },
    Floor,
    Fdtc {
        tol: Rational,
    },
    Classify3,
    LSpace2,
    Cover {
        t: u64,
        tol: Rational,
        hyp: Hypotheses,
    },
    Genus1 {
        n: u64,
        hyp: Hypotheses,
    },
    Surgery {
        c: FdtcValue,
        n: i64,
        q: i64,
        genus: Option<i64>,
        cone: Option<i64>,
        hyp: Hypotheses,
    },
    Satellite {
        c: FdtcValue,
        companion_zero: bool,
        n: u64,
        hyp: Hypotheses,
    },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Order { .. } => "order",
            Task::Floor => "floor",
            Task::Fdtc { .. } => "fdtc",
            Task::Classify3 => "classify3",
            Task::LSpace2 => "lspace2",
            Task::Cover { .. } => "certify-cover",
            Task::Genus1 { .. } => "certify-genus1",
            Task::Surgery { .. } => "certify-surgery",
            Task::Satellite { .. } => "certify-satellite",
        }
    }

    pub fn needs_braid(&self) -> bool {
        !matches!(self, Task::Surgery { .. })
    }
}

/// Result of one task: a plain value or a certificate.
#[derive(Clone, Debug)]
pub enum Output {
    Value { json: Value, text: String },
    Certificate(Certificate),
}

pub fn fdtc_json(v: &FdtcValue) -> Value {
    match &v.kind {
        FdtcKind::Exact(x) => {
            json!({ "kind": "exact", "value": x.to_string(), "provenance": v.provenance })
        }
        FdtcKind::Interval { lo, hi } => {
            json!({ "kind": "interval", "lo": lo.to_string(), "hi": hi.to_string(), "provenance": v.provenance })
        }
    }
}

/// `p/q` for an exact value, `lo..hi` for an enclosure.
pub fn parse_fdtc_value(s: &str) -> Result<FdtcValue, CliError> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
            Ok(FdtcValue::interval(lo, hi, "given enclosure")?)
        }
        None => Ok(FdtcValue::exact(parse_rational(s)?, "given value")),
    }
}

pub fn run_task(
    task: &Task,
    braid: Option<&BraidWord>,
    budget: &ReductionBudget,
) -> Result<Output, CliError> {
    let b = || braid.ok_or(CliError::MissingBraid(task.name()));
    let value = |json: Value, text: String| Ok(Output::Value { json, text });
    match task {
        Task::Order { other: None } => {
            let sign = sigma_sign_with(b()?, budget)?;
            value(json!({ "sign": format!("{sign:?}") }), format!("{sign:?}"))
        }
        Task::Order { other: Some(v) } => {
            let ord = compare_with(b()?, v, budget)?;
            value(
                json!({ "ordering": format!("{ord:?}") }),
                format!("{ord:?}"),
            )
        }
        Task::Floor => {
            let f = dehornoy_floor_with(b()?, budget)?;
            value(json!({ "floor": f }), f.to_string())
        }
        Task::Fdtc { tol } => {
            let v = fdtc_interval_with(b()?, tol, budget)?;
            value(json!({ "fdtc": fdtc_json(&v) }), v.to_string())
        }
        Task::Classify3 => {
            let nf = normal_form(b()?)?;
            let json = json!({
                "normal_form": nf,
                "display": nf.to_string(),
                "nt_type": nt_type(&nf).to_string(),
                "central": nf.is_central(),
            });
            value(json, nf.to_string())
        }
        Task::LSpace2 => {
            let nf = normal_form(b()?)?;
            let status = baldwin_lspace_double_cover(&nf);
            value(
                json!({ "normal_form": nf.to_string(), "double_cover": status.to_string() }),
                status.to_string(),
            )
        }
        Task::Cover { t, tol, hyp } => Ok(Output::Certificate(certify_closed_braid_cover(
            b()?,
            *t,
            hyp,
            tol,
            budget,
        )?)),
        Task::Genus1 { n, hyp } => Ok(Output::Certificate(certify_genus1_cover(b()?, *n, hyp)?)),
        Task::Surgery {
            c,
            n,
            q,
            genus,
            cone,
            hyp,
        } => Ok(Output::Certificate(match cone {
            Some(m) => certify_orbifold_cover(c, *n, *q, *m, hyp)?,
            None => certify_fibred_cover(c, *genus, *n, *q, hyp)?,
        })),
        Task::Satellite {
            c,
            companion_zero,
            n,
            hyp,
        } => {
            let companion = Companion {
                fdtc: c.clone(),
                exact_zero: *companion_zero,
            };
            Ok(Output::Certificate(certify_satellite(
                b()?,
                &companion,
                *n,
                hyp,
                budget,
            )?))
        }
    }
}
