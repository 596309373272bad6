//! `vzlef branch`: K-type restriction with its character oracle,
//! Littlewood-Richardson coefficients, Littlewood's `GL → O` rule and
//! tensor-product containment.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use vzlef_core::branching::{
    gl_to_o_mult, lr_coefficient, oracle_restrict_o, oracle_restrict_u, restrict_o, restrict_u_pair, tensor_contains,
    GlToO, TensorQuery,
};
use vzlef_core::lefschetz::GroupSpec;
use vzlef_core::partitions::{enumerate_compatible, enumerate_orthogonal};
use vzlef_core::{BoxContext, CompatiblePair, GroupKind, OrthoPartition, Partition};

use crate::args::{BranchCommand, RestrictArgs};
use crate::commands::usizes;
use crate::error::{CliError, Result};
use crate::table::{cell, Table, COMPUTED};
use crate::{Context, Report};

pub fn run(ctx: &Context, cmd: &BranchCommand) -> Result<Report> {
    match cmd {
        BranchCommand::Restrict(a) => restrict(ctx, a),
        BranchCommand::Lr { lambda, mu, nu } => {
            let mut t = Table::new(&["lambda", "mu", "nu", "coefficient"]);
            t.push(vec![cell(lambda), cell(mu), cell(nu), Value::from(lr_coefficient(lambda, mu, nu))], COMPUTED);
            Ok(Report::new(t))
        }
        BranchCommand::GlToO { lambda, mu, n } => {
            let mut t = Table::new(&["lambda", "mu", "n", "multiplicity"]);
            let m = match gl_to_o_mult(lambda, mu, *n) {
                GlToO::Multiplicity(m) => Value::from(m),
                GlToO::NeedsCharacterOracle => Value::from("needs character oracle"),
            };
            t.push(vec![cell(lambda), cell(mu), Value::from(*n), m], "Lemma resOU");
            Ok(Report::new(t))
        }
        BranchCommand::Tensor { group, tensor } => {
            let v = usizes(tensor)?;
            let (tq, anchor) = match (group.kind, v.as_slice()) {
                (GroupKind::U, &[i, j, k, l]) => (TensorQuery::U { i, j, k, l }, "Thm pdt cohomU"),
                (GroupKind::O, &[k, l]) => (TensorQuery::O { k, l }, "Thm pdt cohomO"),
                _ => return Err(CliError::Usage("U needs i,j,k,l and O needs k,l".into())),
            };
            let res = tensor_contains(group.p, group.q, tq);
            let mut t = Table::new(&["group", "tensor", "contains", "multiplicity", "target"]);
            t.push(
                vec![
                    Value::from(group.to_string()),
                    Value::from(tensor.clone()),
                    Value::from(res.contains),
                    Value::from(res.multiplicity),
                    cell(&res.target),
                ],
                anchor,
            );
            Ok(Report::new(t))
        }
    }
}

#[derive(Debug, Deserialize)]
struct RestrictRecord {
    group: String,
    lambda: Partition,
    #[serde(default)]
    mu: Option<Partition>,
    #[serde(default = "one")]
    r: usize,
}

fn one() -> usize {
    1
}

/// A module to restrict.
enum Source {
    U(CompatiblePair),
    O(OrthoPartition),
}

fn source(g: GroupSpec, lambda: &Partition, mu: Option<&Partition>) -> Result<Source> {
    let ctx = BoxContext::new(g.p, g.q)?;
    match (g.kind, mu) {
        (GroupKind::U, Some(mu)) => Ok(Source::U(CompatiblePair::new(lambda.clone(), mu.clone(), ctx)?)),
        (GroupKind::U, None) => Err(CliError::Usage("U restriction needs --mu".into())),
        (GroupKind::O, None) => Ok(Source::O(OrthoPartition::new(lambda.clone(), ctx)?)),
        (GroupKind::O, Some(_)) => Err(CliError::Usage("O restriction takes λ only".into())),
    }
}

/// One `--input` record: group, λ, optional μ, codimension.
type InputRow = (GroupSpec, Partition, Option<Partition>, usize);

fn read_input(path: &Path) -> Result<Vec<InputRow>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let recs: Vec<RestrictRecord> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    recs.into_iter()
        .map(|r| {
            let g: GroupSpec = r.group.parse().map_err(|e: vzlef_core::CoreError| CliError::Usage(e.to_string()))?;
            Ok((g, r.lambda, r.mu, r.r))
        })
        .collect()
}

fn restrict(ctx: &Context, a: &RestrictArgs) -> Result<Report> {
    let cap = a.enum_cap.unwrap_or(ctx.cfg.caps.enum_area);
    let mut jobs: Vec<(GroupSpec, Source, usize)> = Vec::new();
    if let Some(path) = &a.input {
        for (g, lambda, mu, r) in read_input(path)? {
            jobs.push((g, source(g, &lambda, mu.as_ref())?, r));
        }
    } else {
        let g = a.group.ok_or_else(|| CliError::Usage("--G is required".into()))?;
        match &a.lambda {
            Some(lambda) => jobs.push((g, source(g, lambda, a.mu.as_ref())?, a.r)),
            // Without λ, every module of the box.
            None => {
                let bx = BoxContext::new(g.p, g.q)?;
                match g.kind {
                    GroupKind::U => {
                        jobs.extend(enumerate_compatible(bx, cap)?.into_iter().map(|cp| (g, Source::U(cp), a.r)))
                    }
                    GroupKind::O => {
                        jobs.extend(enumerate_orthogonal(bx, cap)?.into_iter().map(|o| (g, Source::O(o), a.r)))
                    }
                }
            }
        }
    }
    let mut t = Table::new(&[
        "group",
        "r",
        "module",
        "contains",
        "multiplicity",
        "target",
        "oracle_multiplicity",
        "oracle_targets",
        "agree",
    ]);
    let mut failures = 0;
    for (g, src, r) in jobs {
        let (module, contains, mult, target, oracle, hits, anchor) = match &src {
            Source::U(cp) => {
                let res = restrict_u_pair(cp, r)?;
                let (m, hits) = oracle_restrict_u(cp, r)?;
                let hits: Vec<String> = hits.iter().map(|h| format!("A({},{})", h.lambda, h.mu)).collect();
                let target = res.target.map(|t| format!("A({},{})", t.lambda, t.mu));
                (format!("A({},{})", cp.lambda, cp.mu), res.contains, res.multiplicity, target, m, hits, "Lemma resU")
            }
            Source::O(o) => {
                let res = restrict_o(o, r)?;
                let (m, hits) = oracle_restrict_o(o, r)?;
                let hits: Vec<String> = hits.iter().map(|h| format!("A({})", h.lambda)).collect();
                let target = res.target.map(|t| format!("A({})", t.lambda));
                (format!("A({})", o.lambda), res.contains, res.multiplicity, target, m, hits, "Lemma resO")
            }
        };
        // Contained exactly when the oracle finds it, and then once.
        let agree = contains == (oracle >= 1) && (!contains || oracle == 1);
        failures += usize::from(!agree);
        t.push(
            vec![
                Value::from(g.to_string()),
                Value::from(r),
                Value::from(module),
                Value::from(contains),
                Value::from(mult),
                cell(target),
                Value::from(oracle),
                cell(hits),
                Value::from(agree),
            ],
            anchor,
        );
    }
    Ok(Report { table: t, failures, note: None })
}
