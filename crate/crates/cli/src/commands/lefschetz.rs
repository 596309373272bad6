//! `vzlef lefschetz`: verdicts for restriction, cup product, products of
//! classes and modular symbols.
//!
//! A query is written the same way on the command line and in a `--queries`
//! file:
//!
//! | mode | query | meaning |
//! | --- | --- | --- |
//! | restriction, cup | `3` | degree 3 |
//! | restriction, cup | `(1);(2,1)` | U component `A(λ,μ)` |
//! | restriction, cup | `(1,1)` | O component `A(λ)` |
//! | tensor | `2+1` | classes of degrees 2 and 1 |
//! | tensor | `[i,j,k,l]` / `[k,l]` | product components (U / O) |
//! | modular-symbol | `r=2` | class of `G(p,q)` in `G(p,q+2)` |
//!
//! Subgroups are `pair`, `codim:R` or `orthogonal`. Restriction defaults to
//! `pair` for degrees and `codim:1` for components; cup products default to
//! `codim:1`.

use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;
use serde_json::Value;
use vzlef_core::branching::TensorQuery;
use vzlef_core::lefschetz::{
    cup_verdict, modular_symbol_verdict, restriction_verdict, tensor_verdict, Anchor, Component, GroupSpec,
    ProductQuery, Query, Status, Subgroup, Verdict,
};
use vzlef_core::{GroupKind, Partition};

use crate::args::{LefschetzArgs, Mode};
use crate::commands::usizes;
use crate::error::{CliError, Result};
use crate::table::{cell, Table, COMPUTED};
use crate::{Context, Report};

/// One verdict request.
#[derive(Clone, Debug, PartialEq)]
pub struct QueryLine {
    pub mode: Mode,
    pub group: GroupSpec,
    pub subgroup: Option<String>,
    pub query: String,
    pub isotropic: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn mode_name(mode: Mode) -> String {
    mode.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

pub fn parse_mode(s: &str) -> Result<Mode> {
    Mode::from_str(s.trim(), true).map_err(|_| usage(format!("unknown mode `{s}`")))
}

pub fn parse_subgroup(s: &str) -> Result<Subgroup> {
    let s = s.trim();
    match s {
        "pair" => Ok(Subgroup::Pair),
        "orthogonal" => Ok(Subgroup::Orthogonal),
        _ => {
            let r = s
                .strip_prefix("codim:")
                .and_then(|r| r.trim().parse().ok())
                .ok_or_else(|| usage(format!("subgroup must be pair, codim:R or orthogonal, got `{s}`")))?;
            Ok(Subgroup::Codim(r))
        }
    }
}

pub fn subgroup_text(h: Subgroup) -> String {
    match h {
        Subgroup::Pair => "pair".into(),
        Subgroup::Codim(r) => format!("codim:{r}"),
        Subgroup::Orthogonal => "orthogonal".into(),
    }
}

fn partition(s: &str) -> Result<Partition> {
    s.parse().map_err(|e: vzlef_core::CoreError| usage(e.to_string()))
}

/// `λ;μ` for a U component, `λ` for an O component.
pub fn parse_component(kind: GroupKind, s: &str) -> Result<Component> {
    match (kind, s.split_once(';')) {
        (GroupKind::U, Some((l, m))) => Ok(Component::U { lambda: partition(l)?, mu: partition(m)? }),
        (GroupKind::O, None) => Ok(Component::O { lambda: partition(s)? }),
        (GroupKind::U, None) => Err(usage(format!("U components are written `λ;μ`, got `{s}`"))),
        (GroupKind::O, Some(_)) => Err(usage(format!("O components are written `λ`, got `{s}`"))),
    }
}

fn degree_or_component(kind: GroupKind, s: &str) -> Result<Query> {
    match s.trim().parse::<usize>() {
        Ok(k) => Ok(Query::Degree(k)),
        Err(_) => Ok(Query::Component(parse_component(kind, s.trim())?)),
    }
}

fn product_query(kind: GroupKind, s: &str) -> Result<ProductQuery> {
    let s = s.trim();
    if let Some((k, l)) = s.split_once('+') {
        let k = k.trim().parse().map_err(|_| usage(format!("bad degree in `{s}`")))?;
        let l = l.trim().parse().map_err(|_| usage(format!("bad degree in `{s}`")))?;
        return Ok(ProductQuery::Degrees(k, l));
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| usage(format!("tensor queries are `k+l` or `[...]`, got `{s}`")))?;
    let v = usizes(inner)?;
    match (kind, v.as_slice()) {
        (GroupKind::U, &[i, j, k, l]) => Ok(ProductQuery::Component(TensorQuery::U { i, j, k, l })),
        (GroupKind::O, &[k, l]) => Ok(ProductQuery::Component(TensorQuery::O { k, l })),
        _ => Err(usage(format!("U needs [i,j,k,l] and O needs [k,l], got `{s}`"))),
    }
}

/// Evaluates one query, returning the subgroup actually used.
pub fn evaluate(line: &QueryLine) -> Result<(Option<Subgroup>, Verdict)> {
    let g = line.group;
    let explicit = line.subgroup.as_deref().filter(|s| !s.trim().is_empty()).map(parse_subgroup).transpose()?;
    match line.mode {
        Mode::Restriction => {
            let q = degree_or_component(g.kind, &line.query)?;
            let h = explicit.unwrap_or(match q {
                Query::Degree(_) => Subgroup::Pair,
                Query::Component(_) => Subgroup::Codim(1),
            });
            Ok((Some(h), restriction_verdict(g, h, &q, line.isotropic)?))
        }
        Mode::Cup => {
            let q = degree_or_component(g.kind, &line.query)?;
            let h = explicit.unwrap_or(Subgroup::Codim(1));
            Ok((Some(h), cup_verdict(g, h, &q)?))
        }
        Mode::Tensor => Ok((None, tensor_verdict(g, product_query(g.kind, &line.query)?, line.isotropic))),
        Mode::ModularSymbol => {
            let s = line.query.trim();
            let r = s
                .strip_prefix("r=")
                .unwrap_or(s)
                .trim()
                .parse()
                .map_err(|_| usage(format!("modular-symbol queries are `r=R`, got `{s}`")))?;
            Ok((Some(Subgroup::Codim(r)), modular_symbol_verdict(g.kind, g.p, g.q, r, line.isotropic)))
        }
    }
}

/// Provenance of a verdict: its anchor, or `computed` when no statement applies.
pub fn provenance(v: &Verdict) -> &'static str {
    if v.anchor == Anchor::None {
        COMPUTED
    } else {
        v.anchor.label()
    }
}

fn qualifier_text(v: &Verdict) -> String {
    let q = &v.qualifiers;
    let mut out = Vec::new();
    if q.holomorphic_only {
        out.push("holomorphic-only");
    }
    if q.l2_cuspidal {
        out.push("l2-cuspidal");
    }
    if q.strongly_primitive {
        out.push("strongly-primitive");
    }
    out.join(";")
}

pub const COLUMNS: [&str; 12] = [
    "mode",
    "group",
    "subgroup",
    "query",
    "isotropic",
    "status",
    "anchor",
    "threshold",
    "target",
    "qualifiers",
    "prediction",
    "checks",
];

/// Appends the verdict row for `line`.
pub fn push_row(t: &mut Table, line: &QueryLine) -> Result<Verdict> {
    let (h, v) = evaluate(line)?;
    t.push(
        vec![
            Value::from(mode_name(line.mode)),
            Value::from(line.group.to_string()),
            h.map(|h| Value::from(subgroup_text(h))).unwrap_or(Value::Null),
            Value::from(line.query.trim()),
            Value::from(line.isotropic),
            Value::from(v.status.to_string()),
            Value::from(v.anchor.label()),
            Value::from(v.threshold.clone()),
            cell(&v.target_component),
            Value::from(qualifier_text(&v)),
            cell(v.prediction),
            cell(&v.checks),
        ],
        provenance(&v),
    );
    Ok(v)
}

#[derive(Debug, Deserialize)]
struct QueryRecord {
    mode: String,
    group: String,
    #[serde(default)]
    subgroup: String,
    query: String,
    #[serde(default)]
    isotropic: Option<bool>,
}

/// Reads a `--queries` CSV file.
pub fn read_queries(path: &Path) -> Result<Vec<QueryLine>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for rec in rdr.deserialize::<QueryRecord>() {
        let rec = rec.map_err(|e| usage(format!("{}: {e}", path.display())))?;
        out.push(QueryLine {
            mode: parse_mode(&rec.mode)?,
            group: rec.group.parse().map_err(|e: vzlef_core::CoreError| usage(e.to_string()))?,
            subgroup: Some(rec.subgroup).filter(|s| !s.is_empty()),
            query: rec.query,
            isotropic: rec.isotropic.unwrap_or(false),
        });
    }
    Ok(out)
}

fn lines_from_flags(a: &LefschetzArgs) -> Result<Vec<QueryLine>> {
    let group = a.group.ok_or_else(|| usage("--G is required"))?;
    let line =
        |query: String| QueryLine { mode: a.mode, group, subgroup: a.subgroup.clone(), query, isotropic: a.isotropic };
    let queries: Vec<String> = match a.mode {
        Mode::Restriction | Mode::Cup => match (&a.degree, &a.component) {
            (Some(d), None) => usizes(d)?.into_iter().map(|k| k.to_string()).collect(),
            (None, Some(c)) => vec![c.clone()],
            _ => return Err(usage("give --degree or --component")),
        },
        Mode::Tensor => match (&a.degrees, &a.tensor) {
            (Some(d), None) => match usizes(d)?.as_slice() {
                &[k, l] => vec![format!("{k}+{l}")],
                _ => return Err(usage("--degrees takes k,l")),
            },
            (None, Some(t)) => vec![format!("[{t}]")],
            _ => return Err(usage("give --degrees or --tensor")),
        },
        Mode::ModularSymbol => vec![format!("r={}", a.r.ok_or_else(|| usage("modular-symbol mode needs --r"))?)],
    };
    Ok(queries.into_iter().map(line).collect())
}

pub fn run(_ctx: &Context, a: &LefschetzArgs) -> Result<Report> {
    let lines = match &a.queries {
        Some(path) => read_queries(path)?,
        None => lines_from_flags(a)?,
    };
    let mut t = Table::new(&COLUMNS);
    let mut failures = 0;
    for line in &lines {
        let v = push_row(&mut t, line)?;
        failures += usize::from(v.status == Status::FailsCriterion);
    }
    Ok(Report { table: t, failures, note: None })
}
