//! `vzlef catalog`: every cohomological module of a group, or the histogram of
//! primitive degrees.

use serde_json::Value;
use vzlef_core::catalog::{catalog, primitive_degree_histogram};
use vzlef_core::ModuleData;

use crate::args::CatalogArgs;
use crate::error::Result;
use crate::table::{cell, Table, COMPUTED};
use crate::{Context, Report};

pub fn run(ctx: &Context, a: &CatalogArgs) -> Result<Report> {
    let cap = a.enum_cap.unwrap_or(ctx.cfg.caps.enum_area);
    if a.histogram {
        let hist = primitive_degree_histogram(a.kind, a.p, a.q, cap)?;
        let mut t = Table::new(&["group", "degree", "count"]);
        let group = format!("{}({},{})", a.kind, a.p, a.q);
        for (d, n) in hist {
            t.push(vec![Value::from(group.clone()), Value::from(d), Value::from(n)], COMPUTED);
        }
        return Ok(Report::new(t));
    }
    let modules = catalog(a.kind, a.p, a.q, cap)?;
    let mut t = Table::new(&["module", "lambda", "mu", "signs", "degree", "levi", "lowest_ktype", "discrete_series"]);
    for m in &modules {
        let mu = match &m.data {
            ModuleData::U { pair } => pair.mu.clone(),
            ModuleData::O { orth, .. } => orth.complement(),
        };
        let (s1, s2) = m.signs();
        let levi: Vec<String> = m.levi.iter().map(|f| f.to_string()).collect();
        t.push(
            vec![
                Value::from(m.label()),
                cell(m.lambda()),
                cell(&mu),
                cell([s1, s2]),
                Value::from(m.degree),
                cell(levi),
                cell(&m.lowest_ktype),
                Value::from(m.discrete_series),
            ],
            COMPUTED,
        );
    }
    let mut report = Report::new(t);
    report.note = Some(format!("{} modules for {}({},{})", modules.len(), a.kind, a.p, a.q));
    Ok(report)
}
