//! Instance manifests and the `table` command.
//!
//! ```json
//! { "instances": [
//!     { "type": "A2", "lattice": "adjoint", "mu": "minuscule:1", "Y": [1],
//!       "checks": ["helam-iso", "adm-bijection"] } ] }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context as _, Result};
use lm_atlas_core::report::Status;
use lm_atlas_core::{par, Error as CoreError, NodeSet, RootDatum};
use serde::{Deserialize, Serialize};

use crate::{
    error_code, run_check, status_code, Check, Context, Format, VerifyParams, EXIT_FAIL,
    EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_RESOURCE,
};

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct Manifest {
    #[serde(default)]
    pub instances: Vec<ManifestInstance>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct ManifestInstance {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(default)]
    pub lattice: Option<String>,
    #[serde(default)]
    pub mu: Option<MuSpec>,
    #[serde(rename = "Y", default)]
    pub y: Option<Vec<usize>>,
    #[serde(default)]
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum MuSpec {
    Coords(Vec<i32>),
    Text(String),
}

impl MuSpec {
    fn as_text(&self) -> String {
        match self {
            MuSpec::Text(s) => s.clone(),
            MuSpec::Coords(v) => v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lattice: String,
    pub mu: Option<Vec<i32>>,
    #[serde(rename = "Y")]
    pub y: Option<Vec<usize>>,
    pub weyl_order: Option<usize>,
    pub min_reps: Option<usize>,
    pub two_rho: Option<i64>,
    pub adm_size: Option<usize>,
    pub components: Option<usize>,
    pub parahoric_components: Option<usize>,
    pub checks: BTreeMap<String, String>,
    pub status: String,
    pub error: Option<String>,
}

impl Row {
    fn blank(inst: &ManifestInstance) -> Self {
        Row {
            cartan_type: inst.cartan_type.clone(),
            lattice: inst.lattice.clone().unwrap_or_else(|| "adjoint".into()),
            mu: None,
            y: inst.y.clone(),
            weyl_order: None,
            min_reps: None,
            two_rho: None,
            adm_size: None,
            components: None,
            parahoric_components: None,
            checks: BTreeMap::new(),
            status: "pass".into(),
            error: None,
        }
    }
}

/// Severity used to pick the process exit code across rows.
fn severity(code: i32) -> u8 {
    match code {
        EXIT_PASS => 0,
        EXIT_INCONCLUSIVE => 1,
        EXIT_FAIL => 2,
        EXIT_RESOURCE => 3,
        _ => 4,
    }
}

pub fn load(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CoreError::Input(format!("reading {}: {e}", path.display())))?;
    let m: Manifest = serde_json::from_str(&text)
        .map_err(|e| CoreError::Input(format!("parsing {}: {e}", path.display())))?;
    Ok(m)
}

struct Prepared {
    datum: RootDatum,
    checks: Vec<Check>,
}

fn validate(inst: &ManifestInstance) -> Result<Prepared> {
    let args = crate::DatumArgs {
        cartan_type: inst.cartan_type.clone(),
        lattice: inst.lattice.clone().unwrap_or_else(|| "adjoint".into()),
    };
    let datum = crate::parse_datum(&args)?;
    if let Some(mu) = &inst.mu {
        datum.parse_coweight(&mu.as_text())?;
    }
    if let Some(y) = &inst.y {
        if y.iter().any(|&i| i == 0 || i > datum.rank()) {
            return Err(CoreError::Input(format!("Y = {y:?} out of range")).into());
        }
    }
    let checks = inst
        .checks
        .iter()
        .map(|c| c.parse::<Check>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Prepared { datum, checks })
}

fn build_row(inst: &ManifestInstance, prep: &Prepared, budget: Option<usize>) -> (Row, i32) {
    let mut row = Row::blank(inst);
    match fill_row(&mut row, inst, prep, budget) {
        Ok(code) => (row, code),
        Err(e) => {
            let code = error_code(&e);
            row.error = Some(format!("{e:#}"));
            row.status = "error".into();
            (row, code)
        }
    }
}

fn fill_row(row: &mut Row, inst: &ManifestInstance, prep: &Prepared, budget: Option<usize>) -> Result<i32> {
    let ctx = Context::new(&prep.datum, budget)?;
    let fin = ctx.aff.finite();
    row.weyl_order = Some(fin.order());
    let mut code = EXIT_PASS;
    let mu = inst.mu.as_ref().map(|m| ctx.coweight(&m.as_text())).transpose()?;
    let y = inst
        .y
        .as_ref()
        .map(|v| NodeSet::from_indices(v.iter().map(|i| i - 1)));
    if let Some(mu) = &mu {
        row.mu = Some(mu.0.to_vec());
        let j = ctx.datum.type_map(mu)?;
        row.min_reps = Some(fin.minimal_reps(j).len());
        row.two_rho = Some(ctx.datum.two_rho_pairing(mu) as i64);
        let adm = ctx.adm(mu)?;
        row.adm_size = Some(adm.len());
        row.components = Some(adm.maxima().len());
        if let Some(y) = y {
            row.parahoric_components = Some(adm.parahoric_project(&ctx.aff, y).maxima.len());
        }
    }
    let mut worst = Status::Pass;
    for &check in &prep.checks {
        let params = VerifyParams {
            mu: mu.clone(),
            j: None,
            y,
            bound: None,
        };
        let status = match run_check(&ctx, check, &params, &mut std::io::sink()) {
            Ok(r) => {
                worst = worst.worst(r.status);
                serde_json::to_value(r.status)?.as_str().unwrap_or("").to_string()
            }
            Err(e) => {
                let c = error_code(&e);
                if severity(c) > severity(code) {
                    code = c;
                }
                format!("error: {e:#}")
            }
        };
        row.checks.insert(check.name().to_string(), status);
    }
    let from_checks = status_code(worst);
    if severity(from_checks) > severity(code) {
        code = from_checks;
    }
    row.status = match code {
        EXIT_PASS => "pass",
        EXIT_FAIL => "fail",
        EXIT_INCONCLUSIVE => "inconclusive",
        _ => "error",
    }
    .into();
    Ok(code)
}

/// Evaluates every instance (validated up front, then in parallel).
pub fn evaluate(manifest: &Manifest, budget: Option<usize>) -> (Vec<Row>, i32) {
    let prepared: Vec<std::result::Result<Prepared, (String, i32)>> = manifest
        .instances
        .iter()
        .map(|i| validate(i).map_err(|e| (format!("{e:#}"), error_code(&e))))
        .collect();
    let indexed: Vec<usize> = (0..manifest.instances.len()).collect();
    let results: Vec<(Row, i32)> = par::map(&indexed, |&k| {
        let inst = &manifest.instances[k];
        match &prepared[k] {
            Ok(p) => build_row(inst, p, budget),
            Err((msg, code)) => {
                let mut row = Row::blank(inst);
                row.error = Some(msg.clone());
                row.status = "error".into();
                (row, *code)
            }
        }
    });
    let code = results
        .iter()
        .map(|(_, c)| *c)
        .max_by_key(|&c| severity(c))
        .unwrap_or(EXIT_PASS);
    (results.into_iter().map(|(r, _)| r).collect(), code)
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |x| x.to_string())
}

fn vec_cell<T: ToString>(v: &Option<Vec<T>>) -> String {
    v.as_ref().map_or("-".into(), |x| {
        format!("[{}]", x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    })
}

const COLUMNS: [&str; 12] = [
    "type", "lattice", "mu", "Y", "|W_0|", "|W^J|", "<mu,2rho>", "|Adm|", "components",
    "parahoric_components", "checks", "status",
];

fn cells(r: &Row) -> Vec<String> {
    let checks: Vec<String> = r.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let status = match &r.error {
        Some(e) => format!("error: {e}"),
        None => r.status.clone(),
    };
    vec![
        r.cartan_type.clone(),
        r.lattice.clone(),
        vec_cell(&r.mu),
        vec_cell(&r.y),
        cell(&r.weyl_order),
        cell(&r.min_reps),
        cell(&r.two_rho),
        cell(&r.adm_size),
        cell(&r.components),
        cell(&r.parahoric_components),
        if checks.is_empty() { "-".into() } else { checks.join(" ") },
        status,
    ]
}

pub fn render(rows: &[Row], format: Format, out: &mut String) -> Result<()> {
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&serde_json::json!({ "rows": rows }))?);
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str(&COLUMNS.join("\t"));
            out.push('\n');
            for r in rows {
                out.push_str(&cells(r).join("\t"));
                out.push('\n');
            }
        }
        Format::Text => {
            writeln!(out, "| {} |", COLUMNS.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(COLUMNS.len()))?;
            for r in rows {
                writeln!(out, "| {} |", cells(r).join(" | ").replace('\n', " "))?;
            }
        }
        Format::Dot => {
            return Err(CoreError::Input("table has no dot output".into())).context("--format");
        }
    }
    Ok(())
}

pub fn cmd_table(path: &Path, budget: Option<usize>, format: Format, out: &mut String) -> Result<i32> {
    let manifest = load(path)?;
    let (rows, code) = evaluate(&manifest, budget);
    render(&rows, format, out)?;
    Ok(code)
}
