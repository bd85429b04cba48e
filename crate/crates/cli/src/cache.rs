//! On-disk JSON-lines cache for Schubert polynomials and products.
//!
//! Records are appended under an advisory lock. Unreadable lines and records
//! that fail a cheap consistency check are skipped with a warning; the cache
//! only ever saves work, so every result is the same with or without it.

use std::collections::HashSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use schubert_core::poly::{global_cache, SchubertExpansion, SparsePolynomial};
use schubert_core::{Monomial, Permutation};
use serde::{Deserialize, Serialize};

const FILE_NAME: &str = "cache.jsonl";

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Record {
    Polynomial {
        perm: Permutation,
        polynomial: SparsePolynomial,
    },
    Product {
        u: Permutation,
        v: Permutation,
        expansion: SchubertExpansion,
    },
}

impl Record {
    /// Rejects records that cannot be right: `𝔖_w` is homogeneous of degree
    /// `ℓ(w)` with leading monomial `x^{code(w)}` of coefficient 1, and every
    /// term of `𝔖_u𝔖_v` has length `ℓ(u) + ℓ(v)`.
    fn plausible(&self) -> bool {
        match self {
            Record::Polynomial { perm, polynomial } => {
                let lead = Monomial::new(perm.code());
                polynomial.homogeneous_degree() == Some(perm.length() as u32)
                    && polynomial
                        .leading_term()
                        .is_some_and(|(m, c)| *m == lead && *c == 1.into())
            }
            Record::Product { u, v, expansion } => expansion
                .iter()
                .all(|(w, c)| w.length() == u.length() + v.length() && *c > 0.into()),
        }
    }
}

#[derive(Default, Debug, Clone, Copy, PartialEq, Eq)]
pub struct FileStats {
    pub polynomials: usize,
    pub products: usize,
    pub skipped: usize,
}

pub struct DiskCache {
    dir: PathBuf,
    loaded_polys: HashSet<Permutation>,
    loaded_products: HashSet<(Permutation, Permutation)>,
}

/// The cache directory: `SCHUBERT_CACHE_DIR`, or `.schubert-cache` in the
/// working directory.
pub fn cache_dir() -> PathBuf {
    std::env::var_os("SCHUBERT_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".schubert-cache"))
}

fn warn(msg: impl std::fmt::Display) {
    eprintln!("warning: {msg}");
}

fn read_records(path: &Path, mut each: impl FnMut(Record)) -> FileStats {
    let mut stats = FileStats::default();
    let Ok(file) = File::open(path) else {
        return stats;
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(err) => {
                warn(format!("{}: stopped reading at line {}: {err}", path.display(), i + 1));
                stats.skipped += 1;
                break;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<Record>(&line) {
            Ok(r) if r.plausible() => {
                match r {
                    Record::Polynomial { .. } => stats.polynomials += 1,
                    Record::Product { .. } => stats.products += 1,
                }
                each(r);
            }
            Ok(_) => {
                warn(format!("{}: skipping inconsistent record on line {}", path.display(), i + 1));
                stats.skipped += 1;
            }
            Err(err) => {
                warn(format!("{}: skipping corrupt record on line {}: {err}", path.display(), i + 1));
                stats.skipped += 1;
            }
        }
    }
    stats
}

impl DiskCache {
    /// Loads every readable record into the in-memory cache.
    pub fn open(dir: PathBuf) -> Self {
        let mut cache = DiskCache {
            dir,
            loaded_polys: HashSet::new(),
            loaded_products: HashSet::new(),
        };
        let memory = global_cache();
        read_records(&cache.path(), |r| match r {
            Record::Polynomial { perm, polynomial } => {
                cache.loaded_polys.insert(perm.clone());
                memory.insert_polynomial(perm, polynomial);
            }
            Record::Product { u, v, expansion } => {
                cache.loaded_products.insert((u.clone(), v.clone()));
                memory.insert_product(u, v, expansion);
            }
        });
        cache
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    /// Appends everything computed since [`open`](Self::open). Failures to
    /// write are reported as warnings.
    pub fn save(&self) {
        if let Err(err) = self.try_save() {
            warn(format!(
                "cache directory {} is not writable ({err}); continuing without the cache",
                self.dir.display()
            ));
        }
    }

    fn try_save(&self) -> std::io::Result<()> {
        let memory = global_cache();
        let mut lines = String::new();
        for (perm, polynomial) in memory.polynomial_entries() {
            if !self.loaded_polys.contains(&perm) {
                let r = Record::Polynomial {
                    perm,
                    polynomial: (*polynomial).clone(),
                };
                lines.push_str(&serde_json::to_string(&r).expect("records serialize"));
                lines.push('\n');
            }
        }
        for ((u, v), expansion) in memory.product_entries() {
            if !self.loaded_products.contains(&(u.clone(), v.clone())) {
                let r = Record::Product {
                    u,
                    v,
                    expansion: (*expansion).clone(),
                };
                lines.push_str(&serde_json::to_string(&r).expect("records serialize"));
                lines.push('\n');
            }
        }
        if lines.is_empty() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir)?;
        let mut file = OpenOptions::new().create(true).append(true).open(self.path())?;
        file.lock()?;
        let result = file.write_all(lines.as_bytes()).and_then(|()| file.flush());
        file.unlock()?;
        result
    }
}

/// Record counts in the cache file at `dir`.
pub fn file_stats(dir: &Path) -> FileStats {
    read_records(&dir.join(FILE_NAME), |_| {})
}

/// Removes the cache file at `dir`, if present.
pub fn clear(dir: &Path) -> std::io::Result<bool> {
    match fs::remove_file(dir.join(FILE_NAME)) {
        Ok(()) => Ok(true),
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => Ok(false),
        Err(err) => Err(err),
    }
}
