//! On-disk cache of the monomial transition matrices.
//!
//! Layout (JSON): a header `{"format", "version", "sha256"}` and a list of
//! tables, each `{"degree", "basis", "partitions", "matrix"}` with rows and
//! columns in the library's canonical partition order and entries as
//! decimal strings. The checksum covers the serialized table list. A file
//! that fails any check is deleted and the tables are recomputed.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hessloc::algebra::partitions_of;
use hessloc::symring::{computed_to_m, install_to_m, Basis};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const FORMAT: &str = "hessloc-transition-cache";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Table {
    degree: usize,
    basis: String,
    partitions: Vec<Vec<usize>>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    sha256: String,
    tables: Vec<Table>,
}

pub struct Cache {
    path: PathBuf,
    loaded: BTreeSet<(usize, char)>,
}

fn checksum(tables: &[Table]) -> String {
    let body = serde_json::to_vec(tables).expect("tables serialize");
    hex::encode(Sha256::digest(body))
}

impl Cache {
    /// Load `path` if it exists. Corrupt files are reported on stderr and
    /// removed; nothing read from them is used.
    pub fn open(path: &Path) -> Cache {
        let mut cache = Cache {
            path: path.to_path_buf(),
            loaded: BTreeSet::new(),
        };
        match fs::read(path) {
            Ok(bytes) => match parse(&bytes) {
                Ok(tables) => cache.install(tables),
                Err(why) => {
                    eprintln!("warning: discarding cache {}: {why}", path.display());
                    let _ = fs::remove_file(path);
                }
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => eprintln!("warning: cannot read cache {}: {e}", path.display()),
        }
        cache
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn install(&mut self, tables: Loaded) {
        for (degree, basis, matrix) in tables {
            // above the current degree guard: skipped, and dropped on the next write
            if degree > hessloc::limits::max_degree() {
                continue;
            }
            match install_to_m(degree, basis, matrix) {
                Ok(_) => {
                    self.loaded.insert((degree, basis.letter()));
                }
                Err(e) => eprintln!("warning: cache table {basis} at degree {degree} ignored: {e}"),
            }
        }
    }

    /// Write every table computed in this process, if any is new. The file
    /// is written to a fresh temporary name and renamed into place.
    pub fn save(&self) -> std::io::Result<()> {
        let computed = computed_to_m();
        let new = computed
            .iter()
            .any(|(d, b, _)| !self.loaded.contains(&(*d, b.letter())));
        if !new {
            return Ok(());
        }
        let tables: Vec<Table> = computed
            .into_iter()
            .map(|(degree, basis, matrix)| Table {
                degree,
                basis: basis.letter().to_string(),
                partitions: partitions_of(degree)
                    .expect("degree within guard")
                    .iter()
                    .map(|p| p.parts().to_vec())
                    .collect(),
                matrix: matrix
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect(),
            })
            .collect();
        let file = CacheFile {
            format: FORMAT.into(),
            version: VERSION,
            sha256: checksum(&tables),
            tables,
        };
        let body = serde_json::to_vec(&file).map_err(std::io::Error::other)?;
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = self
            .path
            .with_extension(format!("tmp.{}", std::process::id()));
        let mut f = fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&tmp)?;
        let written = f.write_all(&body).and_then(|_| f.sync_all());
        drop(f);
        match written.and_then(|_| fs::rename(&tmp, &self.path)) {
            Ok(()) => Ok(()),
            Err(e) => {
                let _ = fs::remove_file(&tmp);
                Err(e)
            }
        }
    }
}

type Loaded = Vec<(usize, Basis, Vec<Vec<BigInt>>)>;

fn parse(bytes: &[u8]) -> Result<Loaded, String> {
    let file: CacheFile = serde_json::from_slice(bytes).map_err(|e| format!("unreadable: {e}"))?;
    if file.format != FORMAT {
        return Err(format!("unknown format {:?}", file.format));
    }
    if file.version != VERSION {
        return Err(format!("version {} is not {VERSION}", file.version));
    }
    if checksum(&file.tables) != file.sha256 {
        return Err("checksum mismatch".into());
    }
    let mut out = Vec::new();
    for t in file.tables {
        let basis: Basis = t.basis.parse().map_err(|e: hessloc::Error| e.to_string())?;
        let canonical: Vec<Vec<usize>> = match partitions_of(t.degree) {
            Ok(ps) => ps.iter().map(|p| p.parts().to_vec()).collect(),
            // beyond the guard: cannot be checked, so not used
            Err(_) => continue,
        };
        if canonical != t.partitions {
            return Err(format!(
                "degree {}: partitions out of canonical order",
                t.degree
            ));
        }
        let matrix = t
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.parse::<BigInt>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("degree {}: {e}", t.degree))?;
        out.push((t.degree, basis, matrix));
    }
    Ok(out)
}
