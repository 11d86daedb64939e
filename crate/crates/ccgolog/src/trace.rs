//! User-facing projection reports.
//!
//! Hidden names (the `$` flags and setters introduced by `par` and `prio`)
//! are left out of both the entries and the final valuation.

use std::fmt::Write as _;

use ccgolog_core::engine::Outcome;
use ccgolog_core::model::{ActionTerm, Real, TFunction, TimePoint, Value};
use ccgolog_core::ProjectionResult;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde_json::{json, Map, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Completed,
    Blocked,
    StepLimit,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Completed => "completed",
            Status::Blocked => "blocked",
            Status::StepLimit => "step-limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FluentValue {
    Discrete(Value),
    Continuous(TFunction),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocEntry {
    pub time: TimePoint,
    pub action: ActionTerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceDocument {
    pub status: Status,
    /// Number of transitions taken, tests and hidden actions included.
    pub steps: usize,
    /// Why projection stopped, when it did not complete.
    pub reason: Option<String>,
    pub entries: Vec<DocEntry>,
    pub final_fluents: Vec<(String, FluentValue)>,
    /// Start time of the last situation reached.
    pub end_time: TimePoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn hidden(name: &str) -> bool {
    name.starts_with('$')
}

impl TraceDocument {
    pub fn from_result(result: &ProjectionResult) -> Self {
        let (status, reason) = match &result.outcome {
            Outcome::Completed { .. } => (Status::Completed, None),
            Outcome::Blocked { reason, .. } => (Status::Blocked, Some(reason.to_string())),
            Outcome::StepLimit { .. } => {
                (Status::StepLimit, Some(format!("step limit of {} transitions reached", result.steps)))
            }
        };
        let s = result.situation();
        let v = s.valuation();
        let mut final_fluents: Vec<_> = v
            .continuous
            .iter()
            .map(|(k, f)| (k.clone(), FluentValue::Continuous(f.clone())))
            .chain(v.discrete.iter().map(|(k, x)| (k.clone(), FluentValue::Discrete(x.clone()))))
            .filter(|(k, _)| !hidden(k))
            .collect();
        final_fluents.sort_by(|a, b| a.0.cmp(&b.0));
        TraceDocument {
            status,
            steps: result.steps,
            reason,
            entries: result
                .trace
                .iter()
                .filter(|e| !e.action.is_hidden())
                .map(|e| DocEntry { time: e.time.clone(), action: e.action.clone() })
                .collect(),
            final_fluents,
            end_time: s.start().clone(),
        }
    }
}

/// `p/q` with an explicit denominator, `20/1` for integers.
pub fn rational(r: &Real) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with `places` digits, rounded half away from zero.
pub fn decimal(r: &Real, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r.abs() * Real::from_integer(scale.clone());
    let rounded = (scaled + Real::new(1.into(), 2.into())).floor().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && rounded.is_positive() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", width = places as usize)
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Bool(b) => Json::Bool(*b),
        Value::Real(r) => Json::String(rational(r)),
        Value::Symbol(s) => Json::String(s.clone()),
    }
}

fn tfunction_json(f: &TFunction) -> Json {
    match f {
        TFunction::Constant(x) => json!({ "kind": "constant", "x": rational(x) }),
        TFunction::Linear { x, rate, t0 } => {
            json!({ "kind": "linear", "x": rational(x), "v": rational(rate), "t0": rational(t0) })
        }
        TFunction::PiecewiseLinear(p) => json!({
            "kind": "piecewise",
            "breaks": p.breaks().iter().map(|(t, y)| json!([rational(t), rational(y)])).collect::<Vec<_>>(),
            "rate": rational(p.final_rate()),
        }),
    }
}

fn args_json(a: &ActionTerm) -> Vec<Json> {
    match a {
        ActionTerm::WaitFor(phi) => vec![Json::String(phi.to_string())],
        ActionTerm::Named { args, .. } => args.iter().map(value_json).collect(),
    }
}

pub fn to_json(doc: &TraceDocument) -> Json {
    let entries: Vec<Json> = doc
        .entries
        .iter()
        .map(|e| {
            json!({
                "t_rational": rational(e.time.value()),
                "t": decimal(e.time.value(), 6),
                "action": e.action.name(),
                "args": args_json(&e.action),
            })
        })
        .collect();
    let final_fluents: Map<String, Json> = doc
        .final_fluents
        .iter()
        .map(|(k, v)| {
            let v = match v {
                FluentValue::Discrete(x) => value_json(x),
                FluentValue::Continuous(f) => tfunction_json(f),
            };
            (k.clone(), v)
        })
        .collect();
    let mut out = json!({
        "status": doc.status.as_str(),
        "steps": doc.steps,
        "entries": entries,
        "final": final_fluents,
    });
    if let Some(reason) = &doc.reason {
        out["reason"] = Json::String(reason.clone());
    }
    out
}

/// Renders `doc`. The text form has one `<time>\t<action>` line per entry
/// followed by `;`-prefixed summary lines.
pub fn format_trace(doc: &TraceDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(doc)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for e in &doc.entries {
                let _ = writeln!(s, "{}\t{}", decimal(e.time.value(), 6), e.action.label());
            }
            let _ = writeln!(s, "; status {}", doc.status.as_str());
            let _ = writeln!(s, "; steps {}", doc.steps);
            if let Some(reason) = &doc.reason {
                let _ = writeln!(s, "; reason {reason}");
            }
            for (k, v) in &doc.final_fluents {
                let v = match v {
                    FluentValue::Discrete(x) => x.to_string(),
                    FluentValue::Continuous(f) => f.to_string(),
                };
                let _ = writeln!(s, "; final {k} {v}");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Real {
        Real::new(n.into(), d.into())
    }

    #[test]
    fn rationals_keep_denominators() {
        assert_eq!(rational(&q(20, 1)), "20/1");
        assert_eq!(rational(&q(-6, 4)), "-3/2");
    }

    #[test]
    fn decimals_round_half_away_from_zero() {
        assert_eq!(decimal(&q(0, 1), 6), "0.000000");
        assert_eq!(decimal(&q(20, 1), 6), "20.000000");
        assert_eq!(decimal(&q(1, 3), 6), "0.333333");
        assert_eq!(decimal(&q(2, 3), 6), "0.666667");
        assert_eq!(decimal(&q(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&q(-1, 1000), 2), "0.00");
        assert_eq!(decimal(&q(5, 2), 0), "3");
    }

    #[test]
    fn empty_trace() {
        let doc = TraceDocument {
            status: Status::Completed,
            steps: 0,
            reason: None,
            entries: vec![],
            final_fluents: vec![],
            end_time: TimePoint::zero(),
        };
        let j = to_json(&doc);
        assert_eq!(j["entries"], json!([]));
        assert_eq!(j["status"], "completed");
        assert_eq!(format_trace(&doc, Format::Text), "; status completed\n; steps 0\n");
    }
}
