//! Content-addressed disk cache for reduced Groebner bases.
//!
//! One file per (ideal, order): the key hashes the ring description, the
//! monomial order, and the sorted canonical generator texts; the payload is
//! the reduced basis, one canonical polynomial per line. Files are safe to
//! delete at any time.

use crate::algebra::{parse_polynomial, MonomialOrder, Polynomial, Ring};
use crate::error::Result;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<DiskCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(DiskCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn key(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> String {
        let mut texts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        texts.sort();
        let mut hasher = Sha256::new();
        hasher.update(ring.to_string().as_bytes());
        hasher.update(b"\x00");
        hasher.update(order.name().as_bytes());
        for t in &texts {
            hasher.update(b"\x00");
            hasher.update(t.as_bytes());
        }
        hex::encode(hasher.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.gb"))
    }

    pub fn load(
        &self,
        ring: &Ring,
        gens: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<Option<Vec<Polynomial>>> {
        let path = self.path(&Self::key(ring, gens, order));
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut polys = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            match parse_polynomial(ring, line) {
                Ok(p) => polys.push(p),
                // a stale or foreign file: ignore the cache entry
                Err(_) => return Ok(None),
            }
        }
        Ok(Some(polys))
    }

    pub fn store(
        &self,
        ring: &Ring,
        gens: &[Polynomial],
        order: MonomialOrder,
        gb: &[Polynomial],
    ) -> Result<()> {
        let path = self.path(&Self::key(ring, gens, order));
        let mut text = String::new();
        for p in gb {
            text.push_str(&p.to_string());
            text.push('\n');
        }
        let tmp = path.with_extension("gb.tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Remove every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let mut removed = 0;
        for entry in fs::read_dir(&self.dir)? {
            let entry = entry?;
            let path = entry.path();
            if path.extension().map(|e| e == "gb").unwrap_or(false) {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}
