//! Acceptance suite: one test per shipped claim, each printing a single
//! `ACCEPTANCE <name>: PASS|FAIL` line (run with `-- --nocapture` to see the
//! lines as they go by).

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use blockhh::lemmas::{central_quotient, pair_decomposition, transfer_surjectivity, CheckStatus};
use blockhh::resolution::RESOLUTION_CAP;
use blockhh::{
    block_decomposition, brauer_feit_term, c_max_subgroups, run_verify, BoundTable,
    CampaignConfig, FiniteField, GroupAlgebra,
};

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

fn criterion(name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {name}: PASS"),
        Err(e) => {
            println!("ACCEPTANCE {name}: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn campaign_config() -> CampaignConfig {
    CampaignConfig {
        primes: vec![2, 3],
        max_order: 16,
        max_n: 3,
        catalog: catalog_dir().display().to_string(),
        ..Default::default()
    }
}

fn splitting_algebra(group: std::sync::Arc<blockhh::FiniteGroup>, p: u64) -> GroupAlgebra {
    let m = blockhh::splitting_degree(&group, p);
    GroupAlgebra::new(group, FiniteField::new(p, m).unwrap())
}

#[test]
fn bound_function_exact_values() {
    criterion("bound_function_exact_values", || {
        let start = Instant::now();
        assert_eq!(brauer_feit_term(2, 1), BigUint::from(2u32));
        assert_eq!(brauer_feit_term(3, 1), BigUint::from(3u32));
        assert_eq!(brauer_feit_term(2, 2), BigUint::from(5u32));
        for p in [2u64, 3] {
            let table = BoundTable::build(p, 5, 3, &catalog_dir()).unwrap();
            // degree-zero/defect-zero seeds
            assert_eq!(table.f(0, 0), Some(&BigUint::from(1u32)));
            for n in 1..=5 {
                assert_eq!(table.f(n, 0), Some(&BigUint::from(0u32)), "f({n},0) at p={p}");
            }
            // monotonicity in the defect wherever both values exist
            for n in 0..=5 {
                for d in 1..=3u32 {
                    let (lo, hi) = (table.f(n, d - 1), table.f(n, d));
                    if let (Some(lo), Some(hi)) = (lo, hi) {
                        assert!(hi >= lo, "f({n},{d}) < f({n},{}) at p={p}", d - 1);
                    }
                }
            }
        }
        let table2 = BoundTable::build(2, 2, 2, &catalog_dir()).unwrap();
        assert_eq!(table2.f(1, 1), Some(&BigUint::from(4u32)));
        assert_eq!(table2.f(1, 2), Some(&BigUint::from(60u32)));
        assert!(start.elapsed() < Duration::from_secs(1), "criterion must finish in < 1 s");
    });
}

#[test]
fn subgroup_count_maxima() {
    criterion("subgroup_count_maxima", || {
        let start = Instant::now();
        let dir = catalog_dir();
        assert_eq!(c_max_subgroups(2, 1, &dir).unwrap(), Some(2));
        assert_eq!(c_max_subgroups(2, 2, &dir).unwrap(), Some(5));
        assert_eq!(c_max_subgroups(2, 3, &dir).unwrap(), Some(16));
        assert_eq!(c_max_subgroups(3, 1, &dir).unwrap(), Some(2));
        assert_eq!(c_max_subgroups(3, 2, &dir).unwrap(), Some(6));
        assert!(start.elapsed() < Duration::from_secs(10), "criterion must finish in < 10 s");
    });
}

#[test]
fn s3_block_decomposition() {
    criterion("s3_block_decomposition", || {
        let group = blockhh::catalog::find_group(&catalog_dir(), "S3").unwrap();
        let ga2 = splitting_algebra(group.clone(), 2);
        let blocks = block_decomposition(&ga2).unwrap();
        let mut dims: Vec<usize> = blocks.iter().map(|b| b.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 4]);
        let mut defects: Vec<u32> = blocks.iter().map(|b| b.defect).collect();
        defects.sort();
        assert_eq!(defects, vec![0, 1]);
        let ga3 = splitting_algebra(group, 3);
        let blocks = block_decomposition(&ga3).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].dim, 6);
        assert_eq!(blocks[0].center_dim, 3);
        assert_eq!(blocks[0].defect, 1);
    });
}

#[test]
fn bound_campaign_order_16() {
    criterion("bound_campaign_order_16", || {
        let start = Instant::now();
        let report = run_verify(&campaign_config()).unwrap();
        assert_eq!(report.failure_count(), 0, "the bound must hold with zero failures");
        assert!(!report.results.is_empty());
        for rec in &report.results {
            assert!(rec.order <= 16);
            for (n, status) in rec.status.iter().enumerate() {
                if rec.defect <= 3 {
                    // every block of defect <= 3 must be checked outright
                    assert_eq!(
                        status, "pass",
                        "{} p={} block {} degree {n}: expected a checked pass",
                        rec.group, rec.p, rec.block_index
                    );
                } else {
                    // defect 4: no complete catalog of order p^4 is bundled, so
                    // degrees >= 1 must be skipped (never failed); degree 0 is
                    // still checked against the defect-only seed bound
                    let expected = if n == 0 { "pass" } else { "skipped" };
                    assert_eq!(
                        status, expected,
                        "{} p={} block {} degree {n}",
                        rec.group, rec.p, rec.block_index
                    );
                    if n > 0 {
                        assert!(!rec.skip_reasons[n].is_empty());
                    }
                }
            }
        }
        assert!(
            start.elapsed() < Duration::from_secs(900),
            "criterion must finish in < 15 minutes"
        );
    });
}

#[test]
fn hh0_equals_center_and_brauer_feit() {
    criterion("hh0_equals_center_and_brauer_feit", || {
        let report = run_verify(&campaign_config()).unwrap();
        let mut seen = 0usize;
        for rec in &report.results {
            if rec.hh.is_empty() {
                continue; // not computed (resolution cap) — nothing to compare
            }
            assert_eq!(
                rec.hh[0], rec.center_dim,
                "{} p={} block {}: hh[0] != centerDim",
                rec.group, rec.p, rec.block_index
            );
            let bf = brauer_feit_term(rec.p, rec.defect);
            assert!(
                BigUint::from(rec.hh[0]) <= bf,
                "{} p={} block {}: hh[0] = {} exceeds the defect-{} seed bound {}",
                rec.group,
                rec.p,
                rec.block_index,
                rec.hh[0],
                rec.defect,
                bf
            );
            seen += 1;
        }
        assert!(seen > 0, "no computed blocks in the campaign report");
    });
}

#[test]
fn bimodule_route_equivalence() {
    criterion("bimodule_route_equivalence", || {
        let groups = blockhh::catalog::load_catalog_dir(&catalog_dir()).unwrap();
        let mut compared = 0usize;
        for entry in &groups {
            for p in [2u64, 3] {
                let cap = if p == 2 { 8 } else { 9 };
                if entry.group.order > cap {
                    continue;
                }
                let ga = splitting_algebra(entry.group.clone(), p);
                let res = blockhh::cohomology::trivial_resolution(&ga, 3, RESOLUTION_CAP).unwrap();
                for b in block_decomposition(&ga).unwrap() {
                    let conj =
                        blockhh::cohomology::hochschild_dims(&ga, &res, &b.subspace, 2).unwrap();
                    let oracle = blockhh::cohomology::hochschild_dims_bimodule_oracle(
                        &ga,
                        &b.idem,
                        &b.subspace,
                        2,
                        blockhh::cohomology::ENVELOPING_ORACLE_ORDER_CAP,
                        RESOLUTION_CAP,
                    )
                    .unwrap();
                    assert_eq!(
                        conj, oracle,
                        "{} p={p} block {}: conjugation and bimodule routes disagree",
                        ga.group.name, b.index
                    );
                    compared += 1;
                }
            }
        }
        assert!(compared >= 30, "expected to compare a real population, got {compared}");
    });
}

#[test]
fn transfer_surjectivity_principal_blocks() {
    criterion("transfer_surjectivity_principal_blocks", || {
        for (name, p) in [("S3", 3u64), ("S3", 2), ("C4", 2)] {
            let group = blockhh::catalog::find_group(&catalog_dir(), name).unwrap();
            let ga = splitting_algebra(group, p);
            let res = blockhh::cohomology::trivial_resolution(&ga, 3, RESOLUTION_CAP).unwrap();
            let blocks = block_decomposition(&ga).unwrap();
            // the principal block is the one acting as the identity on the
            // trivial module: its idempotent has augmentation 1
            let principal = blocks
                .iter()
                .find(|b| ga.augmentation(&b.idem) == 1)
                .expect("principal block exists");
            let check = transfer_surjectivity(&ga, &res, principal, 2).unwrap();
            assert_eq!(check.status, CheckStatus::Pass, "{name} p={p}: {}", check.reason);
            assert_eq!(check.degrees.len(), 3, "{name} p={p}");
            for deg in &check.degrees {
                assert!(deg.ok, "{name} p={p} degree {}", deg.degree);
                assert_eq!(
                    deg.lhs, deg.rhs,
                    "{name} p={p} degree {}: transfer image must fill the target",
                    deg.degree
                );
            }
        }
    });
}

#[test]
fn central_quotient_inequality_small_groups() {
    criterion("central_quotient_inequality_small_groups", || {
        for (name, p) in
            [("C4", 2u64), ("C2xC2", 2), ("Q8", 2), ("D8", 2), ("C9", 3), ("C3xC3", 3)]
        {
            let group = blockhh::catalog::find_group(&catalog_dir(), name).unwrap();
            let ga = splitting_algebra(group, p);
            let res = blockhh::cohomology::trivial_resolution(&ga, 3, RESOLUTION_CAP).unwrap();
            for b in block_decomposition(&ga).unwrap() {
                let check = central_quotient(&ga, &res, &b, 2, RESOLUTION_CAP).unwrap();
                assert_eq!(
                    check.status,
                    CheckStatus::Pass,
                    "{name} p={p} block {}: {}",
                    b.index,
                    check.reason
                );
                for deg in &check.degrees {
                    assert!(deg.ok, "{name} p={p} block {} degree {}", b.index, deg.degree);
                }
            }
        }
    });
}

#[test]
fn pair_decomposition_order_8() {
    criterion("pair_decomposition_order_8", || {
        let groups = blockhh::catalog::load_catalog_dir(&catalog_dir()).unwrap();
        let mut checked = 0usize;
        for entry in &groups {
            if entry.group.order > 8 {
                continue;
            }
            let ga = splitting_algebra(entry.group.clone(), 2);
            let res = blockhh::cohomology::trivial_resolution(&ga, 2, RESOLUTION_CAP).unwrap();
            for b in block_decomposition(&ga).unwrap() {
                let check = pair_decomposition(&ga, &res, &b, 1, 12).unwrap();
                assert_eq!(
                    check.status,
                    CheckStatus::Pass,
                    "{} block {}: {}",
                    ga.group.name,
                    b.index,
                    check.reason
                );
                for deg in &check.degrees {
                    assert!(deg.ok, "{} block {} degree {}", ga.group.name, b.index, deg.degree);
                    assert_eq!(deg.lhs, deg.rhs, "{} block {}", ga.group.name, b.index);
                }
                checked += 1;
            }
        }
        assert!(checked >= 14, "expected every block of every group of order <= 8");
    });
}

#[test]
fn determinism_and_field_stability() {
    criterion("determinism_and_field_stability", || {
        let base = campaign_config();
        let report1 = run_verify(&base).unwrap();
        let report2 = run_verify(&base).unwrap();
        assert_eq!(
            blockhh::report_to_json(&report1),
            blockhh::report_to_json(&report2),
            "repeated runs must be byte-identical"
        );
        let scaled_cfg = CampaignConfig { field_scale: 2, ..campaign_config() };
        let scaled = run_verify(&scaled_cfg).unwrap();
        assert_eq!(report1.results.len(), scaled.results.len());
        for (a, b) in report1.results.iter().zip(&scaled.results) {
            assert_eq!((&a.group, a.p, a.block_index), (&b.group, b.p, b.block_index));
            assert_eq!(b.field_degree, 2 * a.field_degree, "{} p={}", a.group, a.p);
            assert_eq!(a.dim, b.dim, "{} p={} block {}", a.group, a.p, a.block_index);
            assert_eq!(a.center_dim, b.center_dim, "{} p={}", a.group, a.p);
            assert_eq!(a.defect, b.defect, "{} p={}", a.group, a.p);
            assert_eq!(a.hh, b.hh, "{} p={} block {}", a.group, a.p, a.block_index);
            assert_eq!(a.f, b.f, "{} p={}", a.group, a.p);
            assert_eq!(a.status, b.status, "{} p={}", a.group, a.p);
        }
    });
}
