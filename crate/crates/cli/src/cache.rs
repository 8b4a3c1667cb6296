//! Structure tables, optionally cached on disk under `E8_CACHE_DIR`.

use std::path::PathBuf;

use e8_core::algebra::Algebra;
use e8_core::analysis::{StructureTable, GENERATOR_VERSION};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "E8_CACHE_DIR";

fn cache_path(algebra: Algebra) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty())?;
    let mut h = Sha256::new();
    h.update(GENERATOR_VERSION.as_bytes());
    h.update(b"\0");
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update(b"\0");
    h.update(algebra.name().as_bytes());
    let digest: String = h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect();
    Some(PathBuf::from(dir).join(format!("{}-{digest}.json", algebra.name())))
}

/// Cache problems never fail a command; the table is rebuilt instead.
pub fn load_table(algebra: Algebra) -> StructureTable {
    let path = cache_path(algebra);
    if let Some(p) = &path {
        if let Ok(text) = std::fs::read_to_string(p) {
            match StructureTable::from_json(&text) {
                Ok(t) if t.name() == algebra.name() && t.dim() == algebra.dim() => return t,
                _ => eprintln!("ignoring unreadable cache file {}", p.display()),
            }
        }
    }
    let table = StructureTable::build(algebra);
    if let Some(p) = &path {
        let tmp = p.with_extension(format!("tmp{}", std::process::id()));
        let written = p
            .parent()
            .map_or(Ok(()), std::fs::create_dir_all)
            .and_then(|_| std::fs::write(&tmp, table.to_json()))
            .and_then(|_| std::fs::rename(&tmp, p));
        if let Err(e) = written {
            eprintln!("could not write cache file {}: {e}", p.display());
            let _ = std::fs::remove_file(&tmp);
        }
    }
    table
}
