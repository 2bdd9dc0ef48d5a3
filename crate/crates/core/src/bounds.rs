//! The explicit bound function f(n, d) on Hochschild cohomology dimensions.
//!
//! Ingredients:
//! - the Brauer–Feit-style term floor(p^{2d}/4 + 1), used as the degree-0
//!   value f(0, d);
//! - c(d), the maximum number of subgroups over all groups of order p^d,
//!   computed by exhaustive enumeration over a catalog that declares itself
//!   complete for that order (never inferred);
//! - the recursion f(n, d) = p · c(d) · Σ_{i=0..n} f(i, d−1) for n ≥ 1,
//!   d ≥ 1, with f(0, 0) = 1 and f(n, 0) = 0 for n > 0, and the monotone
//!   normalization f(n, d) ≥ f(n, d−1) built into the table.
//!
//! Values grow fast, so everything is exact big-integer arithmetic. A missing
//! or incomplete catalog for some order p^d makes c(d) — and with it every
//! f(n, d) with n ≥ 1 at that d — `None` ("unavailable") rather than a guess.

use crate::catalog::{find_group, load_manifest};
use crate::group::all_subgroups;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::path::Path;

/// floor(p^{2d}/4 + 1), the degree-0 bound for a block of defect d.
pub fn brauer_feit_term(p: u64, d: u32) -> BigUint {
    BigUint::from(p).pow(2 * d) / BigUint::from(4u32) + BigUint::one()
}

/// c(d): the maximum subgroup count over all groups of order p^d, from a
/// catalog manifest that declares completeness for that order. Returns
/// `Ok(None)` when no complete manifest exists.
pub fn c_max_subgroups(p: u64, d: u32, catalog_dir: &Path) -> Result<Option<u64>> {
    if d == 0 {
        return Ok(Some(1));
    }
    let Some(manifest) = load_manifest(catalog_dir, p, d)? else {
        return Ok(None);
    };
    if !manifest.complete {
        return Ok(None);
    }
    let expected_order = (p as usize).pow(d);
    let mut max = 0u64;
    for name in &manifest.groups {
        let group = find_group(catalog_dir, name)?;
        if group.order != expected_order {
            return Err(Error::Catalog {
                file: format!("p{p}d{d}.manifest.json"),
                reason: format!(
                    "group {} has order {}, expected {}",
                    name, group.order, expected_order
                ),
            });
        }
        let count = all_subgroups(&group)?.len() as u64;
        max = max.max(count);
    }
    if manifest.groups.is_empty() {
        return Err(Error::Catalog {
            file: format!("p{p}d{d}.manifest.json"),
            reason: "manifest declares completeness but lists no groups".to_string(),
        });
    }
    Ok(Some(max))
}

/// Provenance of a c(d) entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CSource {
    ExactCatalog,
    Unavailable,
}

/// Tabulated bound values f(n, d) for 0 ≤ n ≤ max_n, 0 ≤ d ≤ max_d.
#[derive(Debug, Clone)]
pub struct BoundTable {
    pub p: u64,
    pub max_n: usize,
    pub max_d: u32,
    /// c[d] for d = 0..=max_d; `None` = no complete catalog for that order.
    pub c: Vec<Option<u64>>,
    /// f[n][d]; `None` = unavailable because some required c(d') is.
    pub f: Vec<Vec<Option<BigUint>>>,
}

impl BoundTable {
    /// Build the table, reading subgroup-count maxima from the catalog.
    pub fn build(p: u64, max_n: usize, max_d: u32, catalog_dir: &Path) -> Result<BoundTable> {
        let mut c = Vec::with_capacity(max_d as usize + 1);
        for d in 0..=max_d {
            c.push(c_max_subgroups(p, d, catalog_dir)?);
        }
        let mut f: Vec<Vec<Option<BigUint>>> = vec![vec![None; max_d as usize + 1]; max_n + 1];
        for n in 0..=max_n {
            // defect 0: a matrix algebra — center is one-dimensional and all
            // higher cohomology vanishes
            f[n][0] = Some(if n == 0 { BigUint::one() } else { BigUint::zero() });
        }
        for d in 1..=max_d as usize {
            f[0][d] = Some(brauer_feit_term(p, d as u32));
            for n in 1..=max_n {
                let recursion = c[d].and_then(|cd| {
                    let mut sum = BigUint::zero();
                    for fi in f.iter().take(n + 1) {
                        sum += fi[d - 1].as_ref()?;
                    }
                    Some(BigUint::from(p) * BigUint::from(cd) * sum)
                });
                // monotone normalization: f(n, d) ≥ f(n, d−1)
                f[n][d] = match (recursion, &f[n][d - 1]) {
                    (Some(v), Some(prev)) => Some(v.max(prev.clone())),
                    _ => None,
                };
            }
        }
        Ok(BoundTable {
            p,
            max_n,
            max_d,
            c,
            f,
        })
    }

    pub fn f(&self, n: usize, d: u32) -> Option<&BigUint> {
        self.f.get(n)?.get(d as usize)?.as_ref()
    }

    pub fn c(&self, d: u32) -> Option<u64> {
        *self.c.get(d as usize)?
    }

    pub fn c_source(&self, d: u32) -> CSource {
        if self.c(d).is_some() {
            CSource::ExactCatalog
        } else {
            CSource::Unavailable
        }
    }
}
