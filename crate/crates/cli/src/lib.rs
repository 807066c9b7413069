//! The `lm-atlas` command line. [`run`] is the whole program; `main` only
//! wires it to the process streams so tests can drive it in-process.

pub mod cache;
pub mod manifest;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lm_atlas_core::report::{Report, Status};
use lm_atlas_core::weyl::DEFAULT_BUDGET;
use lm_atlas_core::{
    AdmissibleSet, AffineWeylGroup, CartanType, Coweight, Error as CoreError, FiniteWeylGroup,
    LatticeChoice, NodeSet, RootDatum, Wonderful,
};
use serde::Serialize;
use serde_json::json;

use crate::cache::Cache;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "lm-atlas",
    version,
    about = "Affine Weyl groups, admissible sets and wonderful-compactification orbit posets"
)]
pub struct Cli {
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Cap on enumerated elements (Weyl group, windows, admissible sets).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

#[derive(clap::Args, Debug, Clone)]
pub struct DatumArgs {
    /// Cartan type, e.g. A3, B2, D4, G2.
    #[arg(value_name = "TYPE")]
    pub cartan_type: String,
    #[arg(long, default_value = "adjoint")]
    pub lattice: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    HelamIso,
    AdmBijection,
    SliceFormulas,
    CorollaryCoverage,
    FiberPartition,
    BruhatOracle,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::HelamIso => "helam-iso",
            Check::AdmBijection => "adm-bijection",
            Check::SliceFormulas => "slice-formulas",
            Check::CorollaryCoverage => "corollary-coverage",
            Check::FiberPartition => "fiber-partition",
            Check::BruhatOracle => "bruhat-oracle",
        }
    }
}

impl FromStr for Check {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        <Check as ValueEnum>::from_str(s, true).map_err(|e| anyhow!(CoreError::Input(e)))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots, highest root, minuscule coweights, fundamental group.
    Roots {
        #[command(flatten)]
        datum: DatumArgs,
    },
    /// Admissible set Adm(mu), optionally projected to a parahoric level.
    Adm {
        #[command(flatten)]
        datum: DatumArgs,
        /// Dominant coweight: "1,0,2" or "minuscule:i".
        #[arg(long)]
        mu: String,
        /// Parahoric level Y, 1-based nodes ("1,3", "none", "all").
        #[arg(short = 'Y', long = "Y", visible_alias = "parahoric")]
        y: Option<String>,
    },
    /// Closure slice of the orbit poset at fixed J.
    OrbitPoset {
        #[command(flatten)]
        datum: DatumArgs,
        /// Minuscule coweight; sets J = I(mu) and shows the special fiber support.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(short = 'Y', long = "Y", visible_alias = "parahoric")]
        y: Option<String>,
    },
    /// Run one verification and print its JSON report.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(short = 'Y', long = "Y", visible_alias = "parahoric")]
        y: Option<String>,
        /// Length bound (bruhat-oracle) or <lambda,2rho> bound (fiber-partition).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// One row per manifest instance with sizes and check statuses.
    Table { manifest: PathBuf },
    /// Manage the Bruhat window cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    Clear,
    Stat,
    /// Build and store the window of a given length bound.
    Build {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        bound: usize,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Err(e) = lm_atlas_core::par::set_jobs(cli.jobs) {
        let _ = writeln!(err, "warning: --jobs ignored: {e}");
    }
    let mut buf = String::new();
    let result = dispatch(&cli, &mut buf, err);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            error_code(&e)
        }
    }
}

pub fn error_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<CoreError>() {
        Some(CoreError::Resource(_)) => EXIT_RESOURCE,
        _ => EXIT_INPUT,
    }
}

pub fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn dispatch(cli: &Cli, out: &mut String, err: &mut dyn Write) -> Result<i32> {
    let budget = cli.budget;
    match &cli.command {
        Command::Roots { datum } => cmd_roots(&parse_datum(datum)?, cli.format, out),
        Command::Adm { datum, mu, y } => {
            let ctx = Context::new(&parse_datum(datum)?, budget)?;
            let mu = ctx.coweight(mu)?;
            let y = y.as_deref().map(|s| parse_nodes(s, ctx.rank())).transpose()?;
            cmd_adm(&ctx, &mu, y, cli.format, out)
        }
        Command::OrbitPoset { datum, mu, j, y } => {
            let ctx = Context::new(&parse_datum(datum)?, budget)?;
            cmd_orbit_poset(&ctx, mu.as_deref(), j.as_deref(), y.as_deref(), cli.format, out)
        }
        Command::Verify {
            check,
            datum,
            mu,
            j,
            y,
            bound,
        } => {
            let ctx = Context::new(&parse_datum(datum)?, budget)?;
            let params = VerifyParams {
                mu: mu.as_deref().map(|m| ctx.coweight(m)).transpose()?,
                j: j.as_deref().map(|s| parse_nodes(s, ctx.rank())).transpose()?,
                y: y.as_deref().map(|s| parse_nodes(s, ctx.rank())).transpose()?,
                bound: *bound,
            };
            let report = run_check(&ctx, *check, &params, err)?;
            out.push_str(&serde_json::to_string_pretty(&report)?);
            out.push('\n');
            Ok(status_code(report.status))
        }
        Command::Table { manifest } => manifest::cmd_table(manifest, budget, cli.format, out),
        Command::Cache { action } => cmd_cache(action, budget, cli.format, out),
    }
}

pub fn parse_datum(args: &DatumArgs) -> Result<RootDatum> {
    let ty: CartanType = args.cartan_type.parse()?;
    let lattice: LatticeChoice = args.lattice.parse()?;
    Ok(RootDatum::build(ty, lattice)?)
}

/// 1-based node list: `"1,3"`, `"{1,3}"`, `"none"`/`""` (empty) or `"all"`.
pub fn parse_nodes(s: &str, rank: usize) -> Result<NodeSet> {
    let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    match t {
        "" | "none" | "empty" => return Ok(NodeSet::EMPTY),
        "all" => return Ok(NodeSet::full(rank)),
        _ => {}
    }
    let mut set = NodeSet::EMPTY;
    for part in t.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| CoreError::Input(format!("bad node '{part}' in '{s}'")))?;
        if i == 0 || i > rank {
            return Err(CoreError::Input(format!("node {i} out of range 1..={rank}")).into());
        }
        set.insert(i - 1);
    }
    Ok(set)
}

/// Groups built once per datum.
pub struct Context {
    pub datum: RootDatum,
    pub aff: Arc<AffineWeylGroup>,
    pub budget: Option<usize>,
    wonderful: std::sync::OnceLock<std::result::Result<Wonderful, String>>,
}

impl Context {
    pub fn new(datum: &RootDatum, budget: Option<usize>) -> Result<Self> {
        let cap = budget.map_or(DEFAULT_BUDGET, |b| b as u128);
        let fin = FiniteWeylGroup::generate_with_budget(datum, cap)?;
        Ok(Context {
            datum: datum.clone(),
            aff: Arc::new(AffineWeylGroup::new(Arc::new(fin))),
            budget,
            wonderful: std::sync::OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn coweight(&self, s: &str) -> Result<Coweight> {
        Ok(self.datum.parse_coweight(s)?)
    }

    pub fn wonderful(&self) -> Result<&Wonderful> {
        self.wonderful
            .get_or_init(|| Wonderful::new(self.aff.clone()).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| anyhow!(CoreError::Resource(e.clone())))
    }

    pub fn adm(&self, mu: &Coweight) -> Result<AdmissibleSet> {
        Ok(match self.budget {
            Some(b) => AdmissibleSet::compute_with_budget(&self.aff, mu, b)?,
            None => AdmissibleSet::compute(&self.aff, mu)?,
        })
    }

    pub fn window_budget(&self) -> usize {
        self.budget
            .unwrap_or(lm_atlas_core::affine_weyl::DEFAULT_WINDOW_BUDGET)
    }
}

fn cmd_roots(d: &RootDatum, format: Format, out: &mut String) -> Result<i32> {
    let ty = d.cartan_type();
    let minuscule: Vec<(usize, Coweight)> = d.list_minuscule();
    match format {
        Format::Json => {
            let v = json!({
                "datum": d.export(),
                "weyl_order": ty.weyl_order().to_string(),
                "highest_root": d.highest_root().to_vec(),
                "minuscule": minuscule
                    .iter()
                    .map(|(i, c)| json!({"node": i + 1, "coweight": c.0.to_vec()}))
                    .collect::<Vec<_>>(),
                "fundamental_group_order": d.fundamental_group_order(),
            });
            out.push_str(&serde_json::to_string_pretty(&v)?);
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str("root\theight\n");
            for r in d.positive_roots() {
                writeln!(out, "{}\t{}", Coweight(r.clone()), r.iter().sum::<i32>())?;
            }
        }
        Format::Text => {
            writeln!(out, "type {ty} ({})", d.lattice())?;
            writeln!(
                out,
                "rank {}, |W_0| = {}, positive roots: {}",
                d.rank(),
                ty.weyl_order(),
                d.positive_roots().len()
            )?;
            out.push_str("cartan matrix:\n");
            for row in d.cartan() {
                writeln!(out, "  {}", Coweight(row.iter().copied().collect()))?;
            }
            out.push_str("positive roots:\n");
            for r in d.positive_roots() {
                writeln!(out, "  {}  height {}", Coweight(r.clone()), r.iter().sum::<i32>())?;
            }
            writeln!(out, "highest root: {}", Coweight(d.highest_root().clone()))?;
            if minuscule.is_empty() {
                out.push_str("minuscule: none\n");
            } else {
                let parts: Vec<String> = minuscule
                    .iter()
                    .map(|(i, c)| format!("omega{}^ {}", i + 1, c))
                    .collect();
                writeln!(out, "minuscule: {}", parts.join(", "))?;
            }
            writeln!(out, "fundamental group order: {}", d.fundamental_group_order())?;
        }
        Format::Dot => bail!(CoreError::Input("roots has no dot output".into())),
    }
    Ok(EXIT_PASS)
}

fn cmd_adm(
    ctx: &Context,
    mu: &Coweight,
    y: Option<NodeSet>,
    format: Format,
    out: &mut String,
) -> Result<i32> {
    let aff = &*ctx.aff;
    let adm = ctx.adm(mu)?;
    match format {
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&adm.report(aff, y))?);
            out.push('\n');
        }
        Format::Dot => {
            let name = format!("Adm({mu}) {}", ctx.datum.cartan_type());
            out.push_str(&adm.hasse_export(aff).to_dot(&name));
        }
        Format::Tsv => {
            out.push_str("element\tlength\tquasi_coxeter\tmaximal\n");
            for (k, x) in adm.elements().iter().enumerate() {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    aff.format(x),
                    adm.length_at(k),
                    aff.format_quasi_coxeter(x),
                    adm.maxima().contains(&x)
                )?;
            }
        }
        Format::Text => {
            let r = adm.report(aff, y);
            writeln!(out, "Adm({mu}) in {} ({})", r.cartan_type, r.lattice)?;
            writeln!(out, "size {}", r.size)?;
            writeln!(out, "<mu,2rho> {}", r.two_rho)?;
            let hist: Vec<String> = r
                .length_histogram
                .iter()
                .enumerate()
                .map(|(l, c)| format!("{l}:{c}"))
                .collect();
            writeln!(out, "lengths {}", hist.join(" "))?;
            writeln!(out, "maxima ({}):", r.maxima.len())?;
            for m in &r.maxima {
                writeln!(out, "  {m}")?;
            }
            if let Some(p) = &r.classes {
                writeln!(
                    out,
                    "parahoric Y={}: {} classes, {} maximal",
                    NodeSet::from_indices(p.y.iter().map(|i| i - 1)),
                    p.classes.len(),
                    p.maxima.len()
                )?;
                for (k, c) in p.classes.iter().enumerate() {
                    writeln!(
                        out,
                        "  {}{}  length {}  size {}{}",
                        if p.maxima.contains(&k) { "* " } else { "  " },
                        c.representative,
                        c.length,
                        c.size,
                        if c.representative_admissible { "" } else { "  (rep not admissible)" }
                    )?;
                }
            }
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct SliceOutput {
    #[serde(rename = "type")]
    cartan_type: String,
    lattice: String,
    #[serde(rename = "J")]
    j: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    provenance: String,
    size: usize,
    members: Vec<String>,
    covers: Vec<(usize, usize)>,
    maxima: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<Report>,
}

fn cmd_orbit_poset(
    ctx: &Context,
    mu: Option<&str>,
    j: Option<&str>,
    y: Option<&str>,
    format: Format,
    out: &mut String,
) -> Result<i32> {
    let w = ctx.wonderful()?;
    let y_set = y.map(|s| parse_nodes(s, ctx.rank())).transpose()?.unwrap_or(NodeSet::EMPTY);
    let (slice, check) = match (mu, j) {
        (Some(m), _) => {
            let support = w.special_fiber_support(&ctx.coweight(m)?, y_set)?;
            (support.support, Some(support.report))
        }
        (None, Some(j)) => (w.p_closure_slice(parse_nodes(j, ctx.rank())?, y_set), None),
        (None, None) => bail!(CoreError::Input("orbit-poset needs --mu or --J".into())),
    };
    let hasse = w.slice_hasse(&slice);
    let maxima: Vec<String> = hasse.maximal().into_iter().map(|k| hasse.nodes[k].clone()).collect();
    match format {
        Format::Dot => out.push_str(&hasse.to_dot(&format!(
            "{} J={} Y={}",
            ctx.datum.cartan_type(),
            slice.j,
            y_set
        ))),
        Format::Tsv => out.push_str(&hasse.to_tsv()),
        Format::Json => {
            let o = SliceOutput {
                cartan_type: ctx.datum.cartan_type().to_string(),
                lattice: ctx.datum.lattice().to_string(),
                j: slice.j.to_one_based(),
                y: y_set.to_one_based(),
                provenance: slice.provenance.clone(),
                size: slice.len(),
                members: hasse.nodes.clone(),
                covers: hasse.edges.clone(),
                maxima,
                check,
            };
            out.push_str(&serde_json::to_string_pretty(&o)?);
            out.push('\n');
        }
        Format::Text => {
            writeln!(
                out,
                "{} J={} Y={}: {} labels, {} covers ({})",
                ctx.datum.cartan_type(),
                slice.j,
                y_set,
                slice.len(),
                hasse.edges.len(),
                slice.provenance
            )?;
            writeln!(out, "maximal ({}):", maxima.len())?;
            for m in &maxima {
                writeln!(out, "  {m}")?;
            }
            if let Some(r) = &check {
                writeln!(
                    out,
                    "weyl-point coverage {:.6} ({:?})",
                    r.coverage.unwrap_or(0.0),
                    r.status
                )?;
            }
        }
    }
    Ok(EXIT_PASS)
}

pub struct VerifyParams {
    pub mu: Option<Coweight>,
    pub j: Option<NodeSet>,
    pub y: Option<NodeSet>,
    pub bound: Option<usize>,
}

fn need_mu(p: &VerifyParams, check: Check) -> Result<&Coweight> {
    p.mu
        .as_ref()
        .ok_or_else(|| anyhow!(CoreError::Input(format!("{} needs --mu", check.name()))))
}

pub fn run_check(ctx: &Context, check: Check, p: &VerifyParams, err: &mut dyn Write) -> Result<Report> {
    let aff = &*ctx.aff;
    Ok(match check {
        Check::HelamIso => ctx.wonderful()?.verify_helam_poset_iso(need_mu(p, check)?)?,
        Check::AdmBijection => ctx.wonderful()?.verify_adm_bijection(need_mu(p, check)?)?,
        Check::SliceFormulas => ctx.wonderful()?.verify_slice_formulas(p.j, p.y),
        Check::CorollaryCoverage => {
            let j = match (p.j, &p.mu) {
                (Some(j), _) => j,
                (None, Some(mu)) => ctx.datum.type_map(mu)?,
                (None, None) => bail!(CoreError::Input("corollary-coverage needs --J or --mu".into())),
            };
            let w = ctx.wonderful()?;
            match p.y {
                Some(y) => w.corollary_coverage_report(j, y),
                None => merge_reports(
                    "corollary_coverage",
                    NodeSet::all_subsets(ctx.rank())
                        .map(|y| w.corollary_coverage_report(j, y))
                        .collect(),
                    lm_atlas_core::report::Instance::new(&ctx.datum).j(j),
                ),
            }
        }
        Check::FiberPartition => {
            let w = ctx.wonderful()?;
            match &p.mu {
                Some(mu) => w.verify_fiber_partition(mu)?,
                None => {
                    let bound = p.bound.unwrap_or(10) as i32;
                    let lambdas: Vec<Coweight> = ctx
                        .datum
                        .dominant_coweights_up_to(bound)
                        .into_iter()
                        .filter(|l| ctx.datum.two_rho_pairing(l) <= bound)
                        .collect();
                    let reports = lambdas
                        .iter()
                        .map(|l| w.verify_fiber_partition(l))
                        .collect::<lm_atlas_core::Result<Vec<_>>>()?;
                    merge_reports(
                        "fiber_partition",
                        reports,
                        lm_atlas_core::report::Instance::new(&ctx.datum),
                    )
                }
            }
        }
        Check::BruhatOracle => {
            let bound = match (p.bound, &p.mu) {
                (Some(b), _) => b,
                (None, Some(mu)) => ctx.datum.two_rho_pairing(mu) as usize + 2,
                (None, None) => 4,
            };
            let cache = Cache::from_env();
            let (window, hit) = cache.get_or_build(aff, bound, ctx.window_budget())?;
            let _ = writeln!(
                err,
                "window L={bound}: {} elements ({})",
                window.len(),
                if hit { "cache hit" } else { "built" }
            );
            bruhat_oracle_report(ctx, &window)
        }
    })
}

/// Window bits against the descent recursion on every ordered pair.
fn bruhat_oracle_report(ctx: &Context, window: &lm_atlas_core::BoundedWindow) -> Report {
    let aff = &*ctx.aff;
    let n = window.len();
    let mut report = Report::new("bruhat_oracle", lm_atlas_core::report::Instance::new(&ctx.datum));
    report.size("elements", n);
    report.size("pairs", n * n);
    report.size("bound", window.bound());
    report.size("covers", window.covers().len());
    let bad = lm_atlas_core::par::find_first(n, |w| {
        let x = &window.elements()[w];
        (0..n).find_map(|u| {
            let rec = aff.bruhat_leq(&window.elements()[u], x);
            (rec != window.leq_index(u, w)).then_some((u, w, rec))
        })
    });
    if let Some((u, w, rec)) = bad {
        report.fail(json!({
            "u": aff.format(&window.elements()[u]),
            "w": aff.format(&window.elements()[w]),
            "recursive": rec,
        }));
    }
    report
}

/// Folds several reports into one with the worst status.
pub fn merge_reports(check: &str, parts: Vec<Report>, instance: lm_atlas_core::report::Instance) -> Report {
    let mut r = Report::new(check, instance);
    let mut coverage: Option<f64> = None;
    let mut statuses = Vec::new();
    for p in &parts {
        r.status = r.status.worst(p.status);
        if r.counterexample.is_none() {
            if let Some(c) = &p.counterexample {
                r.counterexample = Some(json!({ "instance": p.instance, "detail": c }));
            }
        }
        if let Some(c) = p.coverage {
            coverage = Some(coverage.map_or(c, |m: f64| m.min(c)));
        }
        statuses.push(json!({ "instance": p.instance, "status": p.status, "coverage": p.coverage, "sizes": p.sizes }));
    }
    r.coverage = coverage;
    r.size("parts", parts.len());
    r.detail("parts", statuses);
    r
}

fn cmd_cache(action: &CacheAction, budget: Option<usize>, format: Format, out: &mut String) -> Result<i32> {
    let cache = Cache::from_env();
    match action {
        CacheAction::Clear => {
            let n = cache.clear()?;
            writeln!(out, "removed {n} entries from {}", cache.dir().display())?;
        }
        CacheAction::Stat => {
            let stats = cache.stat()?;
            if format == Format::Json {
                out.push_str(&serde_json::to_string_pretty(&json!({
                    "dir": cache.dir().display().to_string(),
                    "format_version": lm_atlas_core::affine_weyl::WINDOW_FORMAT_VERSION,
                    "entries": stats,
                }))?);
                out.push('\n');
            } else {
                writeln!(out, "cache {} ({} entries)", cache.dir().display(), stats.len())?;
                for s in stats {
                    writeln!(
                        out,
                        "  {}  {} bytes  {} elements  {}",
                        s.file,
                        s.bytes,
                        s.elements.map_or("?".into(), |e| e.to_string()),
                        if s.current { "current" } else { "stale" }
                    )?;
                }
            }
        }
        CacheAction::Build { datum, bound } => {
            let ctx = Context::new(&parse_datum(datum)?, budget)?;
            let w = lm_atlas_core::BoundedWindow::build(&ctx.aff, *bound, ctx.window_budget())?;
            let path = cache.store(&ctx.aff, &w)?;
            writeln!(out, "stored {} elements in {}", w.len(), path.display())?;
        }
    }
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_lists() {
        assert_eq!(parse_nodes("1,3", 3).unwrap(), NodeSet::from_indices([0, 2]));
        assert_eq!(parse_nodes("{2}", 3).unwrap(), NodeSet::from_indices([1]));
        assert_eq!(parse_nodes("none", 3).unwrap(), NodeSet::EMPTY);
        assert_eq!(parse_nodes("", 3).unwrap(), NodeSet::EMPTY);
        assert_eq!(parse_nodes("all", 2).unwrap(), NodeSet::full(2));
        assert!(parse_nodes("4", 3).is_err());
        assert!(parse_nodes("x", 3).is_err());
    }

    #[test]
    fn check_names() {
        assert_eq!(Check::HelamIso.name(), "helam-iso");
        assert_eq!("corollary-coverage".parse::<Check>().unwrap(), Check::CorollaryCoverage);
        assert!("nope".parse::<Check>().is_err());
    }
}
