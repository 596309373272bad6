//! `vzlef geometry`: numerical checks on the bounded model. Every seeded
//! table carries its seed and sample count as columns.

use nalgebra::DMatrix;
use serde_json::Value;
use vzlef_core::lefschetz::{l2_cup_thresholds, theta_rank_condition, L2Convention};
use vzlef_core::GroupKind;
use vzlef_geometry::curvature::{jacobi_spectrum, lemma_corrected, lemma_literal, sample_unit_normals};
use vzlef_geometry::distance::distance_to_xv;
use vzlef_geometry::hessian::{
    hessian_normal_coords, hessian_numeric_check, hessian_profile, hessian_via_fiber, sample_points, HessianTarget,
};
use vzlef_geometry::integrals::mc_verify_integral;
use vzlef_geometry::model::op_norm;
use vzlef_geometry::thresholds::{counting_bound, dx_limit_bound, poincare_converges, poincare_threshold};
use vzlef_geometry::volume::{growth_rate, jacobi_density, volume_growth};

use crate::args::{GeometryCommand, HessianArgs, JacobiArgs, ThresholdArgs, VerifyIntegralArgs, VolumeArgs};
use crate::error::{check_cap, CliError, Result};
use crate::table::{cell, float, floats, Table, COMPUTED};
use crate::{Context, Report};

/// Slack on the `[0, 1]` range of the `½ log(B/A)` Hessian.
const UNIT_SLACK: f64 = 1e-6;

pub fn run(ctx: &Context, cmd: &GeometryCommand) -> Result<Report> {
    match cmd {
        GeometryCommand::VerifyIntegral(a) => verify_integral(ctx, a),
        GeometryCommand::Jacobi(a) => jacobi(ctx, a),
        GeometryCommand::Hessian(a) => hessian(ctx, a),
        GeometryCommand::Volume(a) => volume(a),
        GeometryCommand::Thresholds(a) => thresholds(a),
    }
}

fn verify_integral(ctx: &Context, a: &VerifyIntegralArgs) -> Result<Report> {
    let mc = &ctx.cfg.mc;
    let samples = a.samples.unwrap_or(mc.samples);
    check_cap("samples", samples, ctx.cfg.caps.samples)?;
    let seed = a.seed.unwrap_or(mc.seed);
    let batches = a.batches.unwrap_or(mc.batches);
    let rep = mc_verify_integral(a.s, a.p, a.n, samples, seed, batches)?;
    let pass = rep.within_ci && rep.rel_error <= ctx.cfg.tolerances.integral_rel;
    let mut t = Table::new(&[
        "s",
        "p",
        "n",
        "samples",
        "seed",
        "batches",
        "accepted",
        "estimate",
        "std_error",
        "ci_low",
        "ci_high",
        "closed_form",
        "rel_error",
        "within_ci",
        "pass",
    ]);
    t.push(
        vec![
            float(rep.s),
            Value::from(rep.p),
            Value::from(rep.n),
            Value::from(rep.samples),
            Value::from(rep.seed),
            Value::from(rep.batches),
            Value::from(rep.accepted),
            float(rep.estimate),
            float(rep.std_error),
            float(rep.ci.0),
            float(rep.ci.1),
            float(rep.closed_form),
            float(rep.rel_error),
            Value::from(rep.within_ci),
            Value::from(pass),
        ],
        COMPUTED,
    );
    Ok(Report { table: t, failures: usize::from(!pass), note: None })
}

/// `a,b;c,d` as a matrix with `;` between rows.
fn parse_matrix(s: &str) -> Result<DMatrix<f64>> {
    let rows: Vec<Vec<f64>> = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("bad number `{x}` in --y2"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage("--y2 rows must have equal nonzero length".into()));
    }
    Ok(DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]))
}

fn jacobi(ctx: &Context, a: &JacobiArgs) -> Result<Report> {
    let tol = ctx.cfg.tolerances.jacobi;
    let (directions, seed, samples) = match &a.y2 {
        Some(s) => {
            let y = parse_matrix(s)?;
            if y.shape() != (a.r, a.p) {
                return Err(CliError::Usage(format!("--y2 must be {}x{}, got {}x{}", a.r, a.p, y.nrows(), y.ncols())));
            }
            let n = y.norm();
            if n == 0.0 {
                return Err(CliError::Usage("--y2 must be nonzero".into()));
            }
            (vec![y / n], None, 1)
        }
        None => {
            let count = a.samples.unwrap_or(100);
            check_cap("directions", count, ctx.cfg.caps.directions)?;
            let seed = a.seed.unwrap_or(ctx.cfg.mc.seed);
            (sample_unit_normals(a.r, a.p, count, seed), Some(seed), count)
        }
    };
    let mut t = Table::new(&[
        "index",
        "seed",
        "samples",
        "lambda",
        "tangent",
        "normal",
        "stated_normal",
        "corrected_normal",
        "stated_gap",
        "corrected_gap",
        "stated_match",
        "corrected_match",
    ]);
    let mut failures = 0;
    for (i, y2) in directions.iter().enumerate() {
        let spec = jacobi_spectrum(y2, a.q)?;
        let stated = lemma_literal(&spec.lambda, a.q, a.r, a.p);
        let corrected = lemma_corrected(&spec.lambda, a.q, a.r, a.p);
        let gs = spec.gap(&stated).unwrap_or(f64::INFINITY);
        let gc = spec.gap(&corrected).unwrap_or(f64::INFINITY);
        failures += usize::from(gs > tol);
        t.push(
            vec![
                Value::from(i),
                cell(seed),
                Value::from(samples),
                floats(&spec.lambda),
                floats(&spec.tangent),
                floats(&spec.normal),
                floats(&stated.normal),
                floats(&corrected.normal),
                float(gs),
                float(gc),
                Value::from(gs <= tol),
                Value::from(gc <= tol),
            ],
            COMPUTED,
        );
    }
    Ok(Report { table: t, failures, note: None })
}

fn hessian(ctx: &Context, a: &HessianArgs) -> Result<Report> {
    check_cap("points", a.points, ctx.cfg.caps.points)?;
    if a.r == 0 || a.p == 0 {
        return Err(CliError::Usage("need p, r >= 1".into()));
    }
    if !(a.step > 0.0 && a.step < 1.0) {
        return Err(CliError::Usage("--step must lie in (0,1)".into()));
    }
    let tol = ctx.cfg.tolerances.hessian;
    let seed = a.seed.unwrap_or(ctx.cfg.mc.seed);
    let mut t = Table::new(&[
        "index",
        "seed",
        "points",
        "step",
        "distance_to_xv",
        "boundary_margin",
        "christoffel_dev",
        "normal_coords_dev",
        "half_log_ba_min",
        "half_log_ba_max",
        "criterion",
        "pass",
    ]);
    let mut failures = 0;
    for (i, z) in sample_points(a.p, a.q, a.r, a.points, seed, 0.0).iter().enumerate() {
        let f = distance_to_xv(z);
        let margin = 1.0 - op_norm(z.matrix());
        let ba = hessian_via_fiber(HessianTarget::HalfLogBa, z, a.step);
        let (lo, hi) = (ba[0], ba[ba.len() - 1]);
        let (chris, normal, criterion, pass) = if a.r == 1 {
            let check = hessian_numeric_check(z, a.step)?;
            let predicted = hessian_profile(HessianTarget::Distance, f, a.p, a.q, 1)?;
            let nc = hessian_normal_coords(HessianTarget::Distance, z, a.step);
            let nd = nc.iter().zip(&predicted).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            let pass = check.max_deviation <= tol;
            (float(check.max_deviation), float(nd), format!("christoffel_dev <= {tol}"), pass)
        } else {
            let pass = lo >= -UNIT_SLACK && hi <= 1.0 + UNIT_SLACK;
            (Value::Null, Value::Null, format!("half_log_ba in [-{UNIT_SLACK}, 1+{UNIT_SLACK}]"), pass)
        };
        failures += usize::from(!pass);
        t.push(
            vec![
                Value::from(i),
                Value::from(seed),
                Value::from(a.points),
                float(a.step),
                float(f),
                float(margin),
                chris,
                normal,
                float(lo),
                float(hi),
                Value::from(criterion),
                Value::from(pass),
            ],
            COMPUTED,
        );
    }
    Ok(Report { table: t, failures, note: None })
}

fn volume(a: &VolumeArgs) -> Result<Report> {
    let mut t = Table::new(&[
        "t",
        "p",
        "q",
        "r",
        "m",
        "exact",
        "normalized",
        "jacobi_numeric",
        "bound",
        "growth_rate",
        "normalization",
    ]);
    for &x in &a.t {
        if !(x >= 0.0 && x.is_finite()) {
            return Err(CliError::Usage(format!("radius must be nonnegative, got {x}")));
        }
        let v = volume_growth(x, a.p, a.q, a.r);
        // For r = 1 every unit normal direction is conjugate to e_1.
        let numeric = if a.r == 1 && a.p >= 1 {
            let mut y2 = DMatrix::zeros(1, a.p);
            y2[(0, 0)] = 1.0;
            Some(jacobi_density(x, a.q, &y2, 400)?)
        } else {
            None
        };
        t.push(
            vec![
                float(x),
                Value::from(a.p),
                Value::from(a.q),
                Value::from(a.r),
                Value::from(v.m),
                v.exact.map_or(Value::Null, float),
                v.normalized.map_or(Value::Null, float),
                numeric.map_or(Value::Null, float),
                float(v.bound),
                float(growth_rate(a.p, a.q, a.r)),
                Value::from(v.normalization),
            ],
            COMPUTED,
        );
    }
    Ok(Report::new(t))
}

fn thresholds(a: &ThresholdArgs) -> Result<Report> {
    let (p, q, r) = (a.p, a.q, a.r);
    let mut t = Table::new(&["quantity", "value"]);
    let mut row = |name: String, v: Value, prov: &str| t.push(vec![Value::from(name), v], prov);
    let [iso, gap] = l2_cup_thresholds(p, q, r);
    for th in [iso, gap] {
        let (label, prov) = match th.convention {
            L2Convention::Isomorphism => ("(q+pr-1)/2", "Thm cohom l2"),
            L2Convention::SpectralGap => ("(p+qr-1)/2", "Prop DX"),
        };
        row(format!("degree bound {label}"), float(th.bound_doubled as f64 / 2.0), prov);
        row(format!("largest degree k < {label}"), cell(th.max_degree), prov);
    }
    row("middle injective degree (p = 1)".into(), cell(iso.middle_injective_degree), "Thm cohom l2");
    row("identity map (r = 0)".into(), Value::from(iso.identity_map), "Thm cohom l2");
    for kind in [GroupKind::U, GroupKind::O] {
        row(
            format!("rank condition q >= r ({kind})"),
            Value::from(theta_rank_condition(kind, p, q, r)),
            "Thm cohom l2",
        );
    }
    let top = iso.max_degree.unwrap_or(-1) + 1;
    for k in 0..=top.max(0) as usize {
        row(format!("limit Donnelly-Xavier bound, k = {k}"), Value::from(dx_limit_bound(p, q, r, k)), "Prop DX");
    }
    let cb = counting_bound(p, q, r, a.t);
    row(format!("counting bound, t = {}", a.t), float(cb.value), COMPUTED);
    row("poincare threshold".into(), float(poincare_threshold(p, q, r)), COMPUTED);
    if let Some(w) = a.w {
        row(format!("poincare converges, w = {w}"), Value::from(poincare_converges(w, p, q, r)), COMPUTED);
    }
    Ok(Report::new(t))
}
