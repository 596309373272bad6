//! `vzlef isolation`: per-module isolation verdicts, or the table of lowest
//! degrees of non-isolated modules checked against the claimed bound.

use serde_json::Value;
use vzlef_core::catalog::catalog;
use vzlef_core::isolation::{is_isolated, isolated_d0, min_degree_nonisolated, ClaimedBound, D0Status};
use vzlef_core::GroupKind;

use crate::args::IsolationArgs;
use crate::error::{CliError, Result};
use crate::table::{cell, Table};
use crate::{Context, Report};

fn isolation_anchor(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::U => "Prop Uisol",
        GroupKind::O => "Prop Oisol",
    }
}

fn d0_anchor(status: D0Status) -> &'static str {
    match status {
        D0Status::Isolated => "Prop isold=0",
        D0Status::CitedAutomorphic => "Prop isolq1",
        D0Status::NotCovered => "",
    }
}

pub fn run(ctx: &Context, a: &IsolationArgs) -> Result<Report> {
    let cap = a.enum_cap.unwrap_or(ctx.cfg.caps.enum_area);
    if a.thresholds {
        return thresholds(a, cap);
    }
    let (p, q) = (a.p.expect("required by clap"), a.q.expect("required by clap"));
    let mut t = Table::new(&["module", "degree", "isolated", "d0_status", "d0_anchor"]);
    for m in catalog(a.kind, p, q, cap)? {
        let d0 = isolated_d0(&m);
        t.push(
            vec![
                Value::from(m.label()),
                Value::from(m.degree),
                Value::from(is_isolated(&m)),
                cell(d0),
                Value::from(d0_anchor(d0)),
            ],
            isolation_anchor(a.kind),
        );
    }
    Ok(Report::new(t))
}

fn thresholds(a: &IsolationArgs, cap: usize) -> Result<Report> {
    if a.min_side == 0 {
        return Err(CliError::Usage("--min-side must be positive".into()));
    }
    let mut t = Table::new(&[
        "group",
        "claimed",
        "witness",
        "witness_ok",
        "exhaustive_min",
        "exhaustive_witness",
        "violations",
        "holds",
    ]);
    let mut failures = 0;
    for sum in 2 * a.min_side..=a.max_sum {
        for p in a.min_side..=sum - a.min_side {
            let q = sum - p;
            let th = min_degree_nonisolated(a.kind, p, q, cap)?;
            let claimed = match th.claimed {
                ClaimedBound::NoneIsolated => Value::from("none isolated"),
                ClaimedBound::AtLeast(b) => Value::from(format!("R >= {b}")),
                ClaimedBound::NotStated => Value::Null,
            };
            let holds = th.holds();
            failures += usize::from(!holds);
            let anchor = if th.claimed == ClaimedBound::NotStated { isolation_anchor(a.kind) } else { "Cor mino" };
            t.push(
                vec![
                    Value::from(format!("{}({p},{q})", a.kind)),
                    claimed,
                    cell(&th.witness),
                    Value::from(th.witness_ok),
                    cell(th.exhaustive_min),
                    cell(&th.exhaustive_witness),
                    cell(&th.violations),
                    Value::from(holds),
                ],
                anchor,
            );
        }
    }
    Ok(Report { table: t, failures, note: None })
}
