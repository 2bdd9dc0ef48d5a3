//! The verification campaign: for every catalog group within the order cap
//! and every configured prime, decompose the group algebra into blocks,
//! compute defects and Hochschild cohomology dimensions, compare against the
//! bound table, and (optionally) run the four structural lemma checks.
//!
//! Reports are deterministic: the same configuration and catalog produce a
//! byte-identical report. Records are ordered by (group name, p, block
//! index); lemma records additionally by check name.

use crate::algebra::{splitting_degree, GroupAlgebra};
use crate::blocks::{block_decomposition, Block};
use crate::bounds::BoundTable;
use crate::catalog::load_catalog_dir;
use crate::cohomology::{hochschild_dims, trivial_resolution};
use crate::field::FiniteField;
use crate::lemmas::{
    central_quotient, pair_decomposition, pair_inequality, transfer_surjectivity, CheckStatus,
    LemmaCheck,
};
use crate::resolution::{Resolution, RESOLUTION_CAP};
use crate::{Error, Result};
use num_bigint::BigUint;
use serde::Serialize;
use std::path::Path;

/// Campaign configuration; serialized verbatim into the report's `config`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignConfig {
    pub primes: Vec<u64>,
    pub max_order: usize,
    pub max_n: usize,
    pub catalog: String,
    /// Multiplier on the computed splitting degree of each group algebra.
    pub field_scale: u32,
    pub check_lemmas: bool,
    /// Order cap for the two Brauer-pair lemma checks.
    pub pair_order_cap: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            primes: vec![2, 3],
            max_order: 16,
            max_n: 3,
            catalog: "data/catalog".to_string(),
            field_scale: 1,
            check_lemmas: false,
            pair_order_cap: 12,
        }
    }
}

/// One block's verification outcome.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockRecord {
    pub group: String,
    pub order: usize,
    pub p: u64,
    pub field_degree: u32,
    pub block_index: usize,
    pub dim: usize,
    pub center_dim: usize,
    pub defect: u32,
    /// dim HH^n for n = 0..=maxN; empty if the resolution hit its size cap.
    pub hh: Vec<usize>,
    /// Bound values as decimal strings; null where unavailable.
    pub f: Vec<Option<String>>,
    pub f_exceeds_u64: Vec<bool>,
    /// Per-degree "pass" | "fail" | "skipped".
    pub status: Vec<String>,
    /// Parallel to `status`: non-empty explanation where skipped.
    pub skip_reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaDegree {
    pub degree: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

/// One lemma check on one block.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaRecord {
    pub check: String,
    pub group: String,
    pub p: u64,
    pub block_index: usize,
    pub max_degree: usize,
    pub status: String,
    pub reason: String,
    pub degrees: Vec<LemmaDegree>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub config: CampaignConfig,
    pub results: Vec<BlockRecord>,
    pub lemma_checks: Vec<LemmaRecord>,
}

impl Report {
    /// Number of non-skipped failures (bound violations plus failed lemma
    /// checks); the campaign exit status is nonzero iff this is nonzero.
    pub fn failure_count(&self) -> usize {
        let bound_failures: usize = self
            .results
            .iter()
            .map(|r| r.status.iter().filter(|s| s.as_str() == "fail").count())
            .sum();
        let lemma_failures = self
            .lemma_checks
            .iter()
            .filter(|l| l.status == "fail")
            .count();
        bound_failures + lemma_failures
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    }
}

fn lemma_record(group: &str, p: u64, check: LemmaCheck) -> LemmaRecord {
    LemmaRecord {
        check: check.check.to_string(),
        group: group.to_string(),
        p,
        block_index: check.block_index,
        max_degree: check.max_degree,
        status: status_str(check.status).to_string(),
        reason: check.reason,
        degrees: check
            .degrees
            .into_iter()
            .map(|d| LemmaDegree {
                degree: d.degree,
                lhs: d.lhs,
                rhs: d.rhs,
                ok: d.ok,
            })
            .collect(),
    }
}

fn skipped_lemma_record(
    check: &'static str,
    group: &str,
    p: u64,
    block_index: usize,
    max_degree: usize,
    reason: &str,
) -> LemmaRecord {
    LemmaRecord {
        check: check.to_string(),
        group: group.to_string(),
        p,
        block_index,
        max_degree,
        status: "skipped".to_string(),
        reason: reason.to_string(),
        degrees: Vec::new(),
    }
}

fn run_block_lemmas(
    ga: &GroupAlgebra,
    res: &Resolution,
    block: &Block,
    config: &CampaignConfig,
) -> Result<Vec<LemmaCheck>> {
    Ok(vec![
        transfer_surjectivity(ga, res, block, config.max_n)?,
        pair_inequality(
            ga,
            res,
            block,
            config.max_n,
            config.pair_order_cap,
            RESOLUTION_CAP,
        )?,
        central_quotient(ga, res, block, config.max_n, RESOLUTION_CAP)?,
        pair_decomposition(ga, res, block, config.max_n, config.pair_order_cap)?,
    ])
}

/// Run the full campaign described by `config` and assemble the report.
pub fn run_verify(config: &CampaignConfig) -> Result<Report> {
    if config.field_scale == 0 {
        return Err(Error::CapExceeded("field scale must be at least 1".into()));
    }
    let dir = Path::new(&config.catalog);
    let entries = load_catalog_dir(dir)?;
    let mut primes = config.primes.clone();
    primes.sort_unstable();
    primes.dedup();
    let mut tables: Vec<BoundTable> = Vec::new();
    for &p in &primes {
        let mut max_d = 0u32;
        while (p as usize).pow(max_d + 1) <= config.max_order {
            max_d += 1;
        }
        tables.push(BoundTable::build(p, config.max_n, max_d, dir)?);
    }
    let u64_max = BigUint::from(u64::MAX);
    let mut results: Vec<BlockRecord> = Vec::new();
    let mut lemma_checks: Vec<LemmaRecord> = Vec::new();
    for entry in entries.iter().filter(|e| e.group.order <= config.max_order) {
        for (pi, &p) in primes.iter().enumerate() {
            let m = splitting_degree(&entry.group, p) * config.field_scale;
            let field = FiniteField::new(p, m)?;
            let ga = GroupAlgebra::new(entry.group.clone(), field);
            let blocks = block_decomposition(&ga)?;
            let res = match trivial_resolution(&ga, config.max_n + 1, RESOLUTION_CAP) {
                Ok(r) => Some(r),
                Err(Error::ResolutionTooLarge { .. }) => None,
                Err(e) => return Err(e),
            };
            let table = &tables[pi];
            for b in &blocks {
                let mut record = BlockRecord {
                    group: entry.group.name.clone(),
                    order: entry.group.order,
                    p,
                    field_degree: m,
                    block_index: b.index,
                    dim: b.dim,
                    center_dim: b.center_dim,
                    defect: b.defect,
                    hh: Vec::new(),
                    f: Vec::new(),
                    f_exceeds_u64: Vec::new(),
                    status: Vec::new(),
                    skip_reasons: Vec::new(),
                };
                for n in 0..=config.max_n {
                    let fv = table.f(n, b.defect);
                    record.f.push(fv.map(|v| v.to_string()));
                    record.f_exceeds_u64.push(fv.is_some_and(|v| *v > u64_max));
                }
                match &res {
                    Some(res) => {
                        let hh = hochschild_dims(&ga, res, &b.subspace, config.max_n)?;
                        assert_eq!(
                            hh[0], b.center_dim,
                            "{} p={} block {}: HH^0 must equal the center dimension",
                            record.group, p, b.index
                        );
                        for n in 0..=config.max_n {
                            match table.f(n, b.defect) {
                                Some(fv) => {
                                    let pass = BigUint::from(hh[n]) <= *fv;
                                    record
                                        .status
                                        .push(if pass { "pass" } else { "fail" }.to_string());
                                    record.skip_reasons.push(String::new());
                                }
                                None => {
                                    record.status.push("skipped".to_string());
                                    record.skip_reasons.push(format!(
                                        "f unavailable for defect {} (no complete catalog of order {}^{})",
                                        b.defect, p, b.defect
                                    ));
                                }
                            }
                        }
                        record.hh = hh;
                    }
                    None => {
                        for _ in 0..=config.max_n {
                            record.status.push("skipped".to_string());
                            record
                                .skip_reasons
                                .push("resolution size cap exceeded".to_string());
                        }
                    }
                }
                results.push(record);
                if config.check_lemmas {
                    match &res {
                        Some(res) => {
                            for check in run_block_lemmas(&ga, res, b, config)? {
                                lemma_checks.push(lemma_record(&entry.group.name, p, check));
                            }
                        }
                        None => {
                            for check in [
                                "transfer_surjectivity",
                                "pair_inequality",
                                "central_quotient",
                                "pair_decomposition",
                            ] {
                                lemma_checks.push(skipped_lemma_record(
                                    check,
                                    &entry.group.name,
                                    p,
                                    b.index,
                                    config.max_n,
                                    "resolution size cap exceeded",
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    results.sort_by(|a, b| {
        (&a.group, a.p, a.block_index).cmp(&(&b.group, b.p, b.block_index))
    });
    lemma_checks.sort_by(|a, b| {
        (&a.group, a.p, a.block_index, &a.check).cmp(&(&b.group, b.p, b.block_index, &b.check))
    });
    Ok(Report {
        config: config.clone(),
        results,
        lemma_checks,
    })
}

/// Pretty JSON with a trailing newline; byte-identical for identical reports.
pub fn report_to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// CSV flattening of the block records: one row per (block, degree). Lemma
/// checks are JSON-only.
pub fn report_to_csv(report: &Report) -> String {
    let mut out = String::from(
        "group,order,p,fieldDegree,blockIndex,dim,centerDim,defect,degree,hh,f,fExceedsU64,status,skipReason\n",
    );
    for r in &report.results {
        for n in 0..r.status.len() {
            let hh = r.hh.get(n).map(|v| v.to_string()).unwrap_or_default();
            let f = r.f[n].clone().unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.group,
                r.order,
                r.p,
                r.field_degree,
                r.block_index,
                r.dim,
                r.center_dim,
                r.defect,
                n,
                hh,
                f,
                r.f_exceeds_u64[n],
                r.status[n],
                r.skip_reasons[n]
            ));
        }
    }
    out
}
