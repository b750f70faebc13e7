//! Ideals with per-order reduced Groebner basis caches.

use super::cache::DiskCache;
use super::engine::{buchberger, reduce_full, EPoly, Steps};
use crate::algebra::{MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// Knobs shared by every Groebner computation: the reduction-step budget and
/// an optional content-addressed disk cache.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub budget: u64,
    pub disk_cache: Option<Arc<DiskCache>>,
}

pub const DEFAULT_GB_BUDGET: u64 = 10_000_000;

impl Default for GbConfig {
    fn default() -> GbConfig {
        GbConfig { budget: DEFAULT_GB_BUDGET, disk_cache: None }
    }
}

type GbMap = BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>;

/// A finitely generated ideal. Clones share the Groebner cache, so reduced
/// bases are computed once per (ideal, order).
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Arc<Vec<Polynomial>>,
    cache: Arc<Mutex<GbMap>>,
}

impl Ideal {
    /// Build from generators; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same(ring) {
                return Err(ring.mismatch_error(g.ring()));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: Arc::new(kept),
            cache: Arc::new(Mutex::new(BTreeMap::new())),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis for `order`: monic, mutually reduced,
    /// sorted ascending by leading term. Unique, hence usable for equality.
    pub fn gb(&self, order: MonomialOrder, cfg: &GbConfig) -> Result<Arc<Vec<Polynomial>>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.get(&order) {
                return Ok(gb.clone());
            }
        }
        if let Some(disk) = &cfg.disk_cache {
            if let Some(polys) = disk.load(&self.ring, &self.gens, order)? {
                let gb = Arc::new(polys);
                self.cache.lock().unwrap().insert(order, gb.clone());
                return Ok(gb);
            }
        }
        let mut steps = Steps::new(cfg.budget);
        let basis = buchberger(&self.gens, &self.ring, order, None, &mut steps)?;
        let polys: Vec<Polynomial> =
            basis.into_iter().map(|e| e.into_poly(&self.ring)).collect();
        let gb = Arc::new(polys);
        if let Some(disk) = &cfg.disk_cache {
            disk.store(&self.ring, &self.gens, order, &gb)?;
        }
        self.cache.lock().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    /// Remainder of `f` modulo the reduced basis; zero iff `f` is a member.
    pub fn normal_form(
        &self,
        f: &Polynomial,
        order: MonomialOrder,
        cfg: &GbConfig,
    ) -> Result<Polynomial> {
        if !f.ring().same(&self.ring) {
            return Err(self.ring.mismatch_error(f.ring()));
        }
        let gb = self.gb(order, cfg)?;
        let basis: Vec<EPoly> = gb.iter().map(|p| EPoly::from_poly(p, order)).collect();
        let mut steps = Steps::new(cfg.budget);
        let red = reduce_full(EPoly::from_poly(f, order), &basis, order, &mut steps)?;
        Ok(red.into_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial, cfg: &GbConfig) -> Result<bool> {
        Ok(self.normal_form(f, MonomialOrder::DegRevLex, cfg)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, cfg: &GbConfig) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality through reduced-basis equality (degrevlex).
    pub fn equals(&self, other: &Ideal, cfg: &GbConfig) -> Result<bool> {
        if !self.ring.same(&other.ring) {
            return Err(self.ring.mismatch_error(&other.ring));
        }
        let a = self.gb(MonomialOrder::DegRevLex, cfg)?;
        let b = other.gb(MonomialOrder::DegRevLex, cfg)?;
        Ok(*a == *b)
    }

    /// Sum of ideals (concatenated generators).
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same(&other.ring) {
            return Err(self.ring.mismatch_error(&other.ring));
        }
        let mut gens = self.gens.as_ref().clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_polys(&self, polys: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.as_ref().clone();
        gens.extend(polys.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product ideal, generators deduplicated.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same(&other.ring) {
            return Err(self.ring.mismatch_error(&other.ring));
        }
        let mut gens = Vec::new();
        for f in self.gens.iter() {
            for g in other.gens.iter() {
                gens.push(f.mul(g)?);
            }
        }
        Ideal::new(&self.ring, dedupe(gens))
    }

    /// d-th power, built from monomial-in-generators multisets.
    pub fn power(&self, d: usize) -> Result<Ideal> {
        if d == 0 {
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        let mut acc = self.clone();
        for _ in 1..d {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Install a known reduced basis (used when a basis can be derived
    /// rather than computed, e.g. Frobenius twists of an existing basis).
    pub(crate) fn seed_gb(&self, order: MonomialOrder, gb: Vec<Polynomial>) {
        self.cache.lock().unwrap().insert(order, Arc::new(gb));
    }

    /// Numbered generator degrees, for homogeneous sanity checks.
    pub fn check_homogeneous(&self) -> Result<()> {
        for g in self.gens.iter() {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous(g.to_string()));
            }
        }
        Ok(())
    }
}

/// Deduplicate while keeping a deterministic order (sorted canonical text).
pub(crate) fn dedupe(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut tagged: Vec<(String, Polynomial)> =
        gens.into_iter().map(|g| (g.to_string(), g)).collect();
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    tagged.dedup_by(|a, b| a.0 == b.0);
    tagged.into_iter().map(|(_, g)| g).collect()
}
