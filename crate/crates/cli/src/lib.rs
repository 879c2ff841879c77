//! Batch front end: builds or loads groups, runs one family of checks on
//! each, and assembles a JSON report whose body is deterministic.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use fpg_core::algebra::{AlgebraContext, AugmentedSubalgebra};
use fpg_core::decomposition::{certify_indecomposable, recover_decomposition, BasisSearch};
use fpg_core::group::{
    build_named, catalog, direct_factor_oracle, direct_product, has_cyclic_factor_oracle, indecomposable_factors,
    DEFAULT_ORACLE_CAP,
};
use fpg_core::io::{group_file, load_input, GroupFile, LoadedInput, FORMAT_VERSION};
use fpg_core::lemmas::{
    babelian_checks, cyclic_factor_test, frattini_correspondence, lemma_identity_check, OmegaRoute, PropPart,
};
use fpg_core::{Error, FpVector, PGroup, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Catalog,
    Lemmas,
    CyclicFactor,
    Recover,
    Certify,
    Oracle,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub p: Option<u32>,
    pub inputs: Vec<PathBuf>,
    /// Catalog names (`D8`, `C2xQ8`, …) to run on instead of the whole catalog.
    pub catalog: Vec<String>,
    pub max_order: usize,
    pub oracle_cap: usize,
    pub enum_cap: u128,
    pub seed: u64,
    #[serde(skip)]
    pub workers: usize,
    #[serde(skip)]
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            p: None,
            inputs: Vec::new(),
            catalog: Vec::new(),
            max_order: 32,
            oracle_cap: DEFAULT_ORACLE_CAP,
            enum_cap: fpg_core::algebra::DEFAULT_ENUM_CAP,
            seed: 0,
            workers: 0,
            verbose: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if let Some(p) = self.p {
            fpg_core::Prime::new(p)?;
        }
        if self.max_order == 0 || self.oracle_cap == 0 || self.enum_cap == 0 {
            return Err(Error::Parse("caps and --max-order must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    CapExceeded,
    Error,
}

/// Result for one group.
#[derive(Clone, Debug, Serialize)]
pub struct GroupResult {
    pub name: String,
    pub fingerprint: fpg_core::group::Fingerprint,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub data: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportBody {
    pub format: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub results: Vec<GroupResult>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub passed: usize,
    pub failed: usize,
    pub cap_exceeded: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub total_ms: f64,
    pub per_group_ms: Vec<f64>,
}

/// `body` depends only on the configuration and inputs; `timing` holds
/// everything that does not.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope {
    pub body: ReportBody,
    pub timing: Timing,
}

impl ReportEnvelope {
    /// The body as canonical JSON (sorted keys).
    pub fn body_json(&self) -> String {
        let v = serde_json::to_value(&self.body).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

pub struct Outcome {
    pub exit_code: i32,
    pub envelope: Option<ReportEnvelope>,
    /// Set when the run stopped before producing a report.
    pub message: Option<String>,
}

/// A group to process, with optional factorization vectors.
pub struct Job {
    pub input: LoadedInput,
}

/// Loads the inputs, or builds catalog groups, in a stable order.
pub fn collect_jobs(cfg: &RunConfig) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for path in &cfg.inputs {
        jobs.push(Job { input: load_input(path)? });
    }
    for name in &cfg.catalog {
        jobs.push(Job { input: LoadedInput { group: build_named(name)?, factorization: None } });
    }
    if cfg.inputs.is_empty() && cfg.catalog.is_empty() {
        for e in catalog(cfg.p, cfg.max_order) {
            jobs.push(Job { input: LoadedInput { group: e.build(), factorization: None } });
        }
    }
    if let Some(p) = cfg.p {
        if let Some(j) = jobs.iter().find(|j| j.input.group.p().get() != p) {
            return Err(Error::PrimeMismatch(p, j.input.group.p().get()));
        }
    }
    Ok(jobs)
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let start = Instant::now();
    // anything failing before the per-group stage is an input problem
    let stop = |e: Error| Outcome {
        exit_code: if e.is_cap_exceeded() { EXIT_CAP } else { EXIT_PARSE },
        envelope: None,
        message: Some(e.to_string()),
    };
    if let Err(e) = cfg.validate() {
        return stop(e);
    }
    let jobs = match collect_jobs(cfg) {
        Ok(j) => j,
        Err(e) => return stop(e),
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().expect("thread pool");
    let timed: Vec<(GroupResult, f64)> = pool.install(|| {
        jobs.par_iter()
            .map(|job| {
                let t = Instant::now();
                let r = run_one(cfg, job);
                (r, t.elapsed().as_secs_f64() * 1e3)
            })
            .collect()
    });
    let (results, per_group_ms): (Vec<GroupResult>, Vec<f64>) = timed.into_iter().unzip();

    let mut summary = Summary { groups: results.len(), ..Summary::default() };
    for r in &results {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::CapExceeded => summary.cap_exceeded += 1,
            Status::Error => summary.errors += 1,
        }
    }
    let exit_code = if summary.cap_exceeded > 0 {
        EXIT_CAP
    } else if summary.failed + summary.errors > 0 {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    let body = ReportBody {
        format: FORMAT_VERSION,
        tool: "fpg",
        version: env!("CARGO_PKG_VERSION"),
        config: cfg.clone(),
        results,
        summary,
    };
    let timing = Timing { total_ms: start.elapsed().as_secs_f64() * 1e3, per_group_ms };
    Outcome { exit_code, envelope: Some(ReportEnvelope { body, timing }), message: None }
}

fn run_one(cfg: &RunConfig, job: &Job) -> GroupResult {
    let g = &job.input.group;
    let outcome = match cfg.command {
        Command::Catalog => Ok((true, json!({ "order": g.order(), "p": g.p().get() }))),
        Command::Lemmas => lemmas(g),
        Command::CyclicFactor => cyclic_factor(g, cfg.oracle_cap),
        Command::Recover => recover(job, cfg),
        Command::Certify => certify(g, cfg.oracle_cap),
        Command::Oracle => oracle(g, cfg.oracle_cap),
    };
    let (status, error, data) = match outcome {
        Ok((true, data)) => (Status::Pass, None, data),
        Ok((false, data)) => (Status::Fail, None, data),
        Err(e) if e.is_cap_exceeded() => (Status::CapExceeded, Some(e.to_string()), Value::Null),
        Err(e) => (Status::Error, Some(e.to_string()), Value::Null),
    };
    GroupResult { name: g.name().to_string(), fingerprint: g.fingerprint(), status, error, data }
}

/// Exponents `1..=log_p exp(G)`, with at least `1` so that trivial groups
/// still get checked.
fn levels(g: &PGroup) -> std::ops::RangeInclusive<u32> {
    1..=g.exponent_log().max(1)
}

fn lemmas(g: &PGroup) -> Result<(bool, Value)> {
    let ctx = AlgebraContext::new(g.clone());
    let mut reports = Vec::new();
    for i in levels(g) {
        reports.push(lemma_identity_check(&ctx, 1, i, 0, OmegaRoute::default())?);
        reports.push(lemma_identity_check(&ctx, 2, i, 0, OmegaRoute::default())?);
        for j in levels(g) {
            reports.push(lemma_identity_check(&ctx, 3, i, j, OmegaRoute::default())?);
        }
    }
    let frattini = frattini_correspondence(&ctx)?;
    let ok = reports.iter().all(|r| r.holds) && frattini.holds();
    Ok((ok, json!({ "identities": reports, "frattini": frattini })))
}

#[derive(Serialize)]
struct CyclicRow {
    i: u32,
    has_factor: bool,
    exponent: usize,
    oracle: bool,
    exp_r: usize,
    agrees: bool,
}

fn cyclic_factor(g: &PGroup, cap: usize) -> Result<(bool, Value)> {
    let mut rows = Vec::new();
    for i in levels(g) {
        let out = cyclic_factor_test(g, i)?;
        let oracle = has_cyclic_factor_oracle(g, i, cap)?;
        let exp_r = g.r_subquotient(i)?.group.abelian_invariants()?.exponent();
        rows.push(CyclicRow {
            i,
            has_factor: out.has_factor,
            exponent: out.exponent,
            oracle,
            exp_r,
            agrees: out.has_factor == oracle && out.exponent == exp_r,
        });
    }
    let ok = rows.iter().all(|r| r.agrees);
    Ok((ok, json!({ "id": "lemma4-cyclic", "levels": rows })))
}

fn recover(job: &Job, cfg: &RunConfig) -> Result<(bool, Value)> {
    let g = &job.input.group;
    let ctx = AlgebraContext::new(g.clone());
    let fact = job
        .input
        .tensor_factorization(&ctx)?
        .ok_or_else(|| Error::Precondition("input has no factorization".into()))?;
    let search = BasisSearch { enum_cap: cfg.enum_cap, seed: cfg.seed, ..BasisSearch::default() };
    let report = recover_decomposition(&ctx, &fact, search)?;
    let props: Vec<_> = [PropPart::A, PropPart::C, PropPart::D]
        .into_iter()
        .map(|part| babelian_checks(&ctx, &fact, part))
        .collect::<Result<_>>()?;
    let ok = report.verified && props.iter().all(|r| r.holds);
    Ok((ok, json!({ "decomposition": report, "proposition": props })))
}

fn certify(g: &PGroup, cap: usize) -> Result<(bool, Value)> {
    let cert = certify_indecomposable(g, cap)?;
    Ok((true, serde_json::to_value(cert).expect("certificate serializes")))
}

fn oracle(g: &PGroup, cap: usize) -> Result<(bool, Value)> {
    let pairs = direct_factor_oracle(g, cap)?;
    let factors = indecomposable_factors(g, cap)?;
    let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    Ok((true, json!({ "pairs": pairs, "indecomposable_factor_orders": orders })))
}

/// `A × G_0` with the coordinate factorization `k(A×1) ⊗ k(1×G_0)`.
pub fn product_with_factorization(a: &str, b: &str) -> Result<(PGroup, Vec<FpVector>, Vec<FpVector>)> {
    let (ga, gb) = (build_named(a)?, build_named(b)?);
    let g = direct_product(&ga, &gb)?.with_name(format!("{a}x{b}"));
    let nb = gb.order();
    let ctx = AlgebraContext::new(g.clone());
    let left: Vec<FpVector> = (0..ga.order()).map(|x| ctx.e(x * nb)).collect();
    let right: Vec<FpVector> = (0..nb).map(|y| ctx.e(y)).collect();
    // reject anything that is not a subalgebra before writing it out
    AugmentedSubalgebra::from_vectors(&ctx, &left)?;
    AugmentedSubalgebra::from_vectors(&ctx, &right)?;
    Ok((g, left, right))
}

/// The file emitted by `catalog --emit` or `catalog --emit-factorization`.
pub fn emit_file(name: Option<&str>, factorization: Option<(&str, &str)>) -> Result<GroupFile> {
    match (name, factorization) {
        (_, Some((a, b))) => {
            let (g, left, right) = product_with_factorization(a, b)?;
            Ok(group_file(&g, Some((&left, &right))))
        }
        (Some(n), None) => Ok(group_file(&build_named(n)?, None)),
        (None, None) => Err(Error::Parse("nothing to emit".into())),
    }
}
