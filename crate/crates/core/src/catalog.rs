//! Loading groups and manifests from a catalog directory.
//!
//! A group file is JSON with a `name` and exactly one of:
//! * `generators`: permutation images, 1-based (`[2,1,3]` swaps the first two
//!   points of three) — the group is their closure, elements in BFS order;
//! * `table`: a full 0-based multiplication table with the identity at 0.
//!
//! A manifest `p{p}d{d}.manifest.json` lists the catalog's groups of order
//! p^d and records whether the list is complete up to isomorphism; complete
//! manifests are what make the subgroup-count maxima c(d) trustworthy.

use crate::group::{FiniteGroup, GROUP_ORDER_CAP};
use crate::{Error, Result};
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: String,
    #[serde(default)]
    generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub p: u64,
    pub d: u32,
    pub complete: bool,
    pub groups: Vec<String>,
}

/// A catalog entry: the loaded group plus its source file name.
pub struct CatalogGroup {
    pub file: String,
    pub group: Arc<FiniteGroup>,
}

/// Load one group file (either format).
pub fn load_group_file(path: &Path) -> Result<Arc<FiniteGroup>> {
    let text = std::fs::read_to_string(path)?;
    let file_label = path.display().to_string();
    let parsed: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Catalog {
        file: file_label.clone(),
        reason: e.to_string(),
    })?;
    match (parsed.generators, parsed.table) {
        (Some(gens), None) => {
            let degree = gens.first().map_or(0, |g| g.len());
            let mut zero_based = Vec::with_capacity(gens.len());
            for g in &gens {
                let mut img = Vec::with_capacity(g.len());
                for &v in g {
                    if v == 0 || v > degree {
                        return Err(Error::Catalog {
                            file: file_label,
                            reason: format!(
                                "generator image {v} out of range for 1-based points 1..={degree}"
                            ),
                        });
                    }
                    img.push(v - 1);
                }
                zero_based.push(img);
            }
            FiniteGroup::from_permutations(&parsed.name, degree, &zero_based, GROUP_ORDER_CAP)
        }
        (None, Some(table)) => FiniteGroup::from_table(&parsed.name, table),
        (Some(_), Some(_)) => Err(Error::Catalog {
            file: file_label,
            reason: "group file must have either generators or table, not both".into(),
        }),
        (None, None) => Err(Error::Catalog {
            file: file_label,
            reason: "group file needs a generators or table field".into(),
        }),
    }
}

/// Load every group file in a directory (manifests excluded),
/// sorted by (order, name).
pub fn load_catalog_dir(dir: &Path) -> Result<Vec<CatalogGroup>> {
    let mut files: Vec<PathBuf> = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
        if name.ends_with(".json") && !name.ends_with(".manifest.json") {
            files.push(path);
        }
    }
    files.sort();
    let mut out = Vec::with_capacity(files.len());
    for path in files {
        let group = load_group_file(&path)?;
        out.push(CatalogGroup {
            file: path
                .file_name()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string(),
            group,
        });
    }
    out.sort_by(|a, b| {
        (a.group.order, &a.group.name).cmp(&(b.group.order, &b.group.name))
    });
    Ok(out)
}

/// Load the manifest for (p, d) if the directory has one.
pub fn load_manifest(dir: &Path, p: u64, d: u32) -> Result<Option<Manifest>> {
    let path = dir.join(format!("p{p}d{d}.manifest.json"));
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path)?;
    let manifest: Manifest = serde_json::from_str(&text).map_err(|e| Error::Catalog {
        file: path.display().to_string(),
        reason: e.to_string(),
    })?;
    if manifest.p != p || manifest.d != d {
        return Err(Error::Catalog {
            file: path.display().to_string(),
            reason: format!(
                "manifest declares (p, d) = ({}, {}) but the file name says ({p}, {d})",
                manifest.p, manifest.d
            ),
        });
    }
    Ok(Some(manifest))
}

/// Resolve a `--group` argument: an existing file path, or a catalog name
/// (matched case-insensitively against the JSON name or the file stem).
pub fn find_group(catalog_dir: &Path, spec: &str) -> Result<Arc<FiniteGroup>> {
    let as_path = Path::new(spec);
    if as_path.is_file() {
        return load_group_file(as_path);
    }
    let in_catalog = catalog_dir.join(spec);
    if spec.ends_with(".json") && in_catalog.is_file() {
        return load_group_file(&in_catalog);
    }
    let want = spec.to_ascii_lowercase();
    let entries = load_catalog_dir(catalog_dir)?;
    for entry in &entries {
        let stem = entry.file.trim_end_matches(".json");
        if entry.group.name.to_ascii_lowercase() == want
            || stem.to_ascii_lowercase() == want
            || entry.file.to_ascii_lowercase() == want
        {
            return Ok(entry.group.clone());
        }
    }
    Err(Error::GroupNotFound(spec.to_string()))
}
