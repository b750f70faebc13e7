//! Suite configuration: grids, primes, budgets, seeds, output control.

use crate::error::{Error, Result};
use serde::Serialize;
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 0x48414e4b; // "HANK"
pub const DEFAULT_PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    /// Row sizes t; the grid is every (t, n) with t <= n.
    pub t_values: Vec<usize>,
    /// Column sizes n.
    pub n_values: Vec<usize>,
    /// Extra (t, n) pairs appended to the grid for the characteristic-free
    /// suites. The Frobenius suites stay on the base grid: bracket powers
    /// scale degrees by q and dominate the budget.
    pub extra_pairs: Vec<(usize, usize)>,
    pub primes: Vec<u64>,
    pub e_max: u32,
    /// Restrict the symbolic-power exponents k; `None` means every valid k.
    pub k_values: Option<Vec<usize>>,
    /// Suites to run; empty means all.
    pub suites: Vec<String>,
    /// Groebner reduction-step budget.
    pub budget: u64,
    pub seed: u64,
    pub cache_dir: Option<PathBuf>,
    pub out: Option<PathBuf>,
    /// Worker threads for suite execution; 0 picks the scheduler default.
    pub workers: usize,
    /// Include per-record timings (breaks byte-for-byte reproducibility).
    pub include_timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            t_values: vec![2, 3, 4],
            n_values: vec![2, 3, 4],
            extra_pairs: vec![(2, 5)],
            primes: DEFAULT_PRIMES.to_vec(),
            e_max: 2,
            k_values: None,
            suites: Vec::new(),
            budget: crate::groebner::DEFAULT_GB_BUDGET,
            seed: DEFAULT_SEED,
            cache_dir: None,
            out: None,
            workers: 0,
            include_timings: false,
        }
    }
}

impl SuiteConfig {
    /// The base grid: (t, n) with t <= n from the configured ranges.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &t in &self.t_values {
            for &n in &self.n_values {
                if t >= 2 && t <= n {
                    out.push((t, n));
                }
            }
        }
        out
    }

    /// Base grid plus the extra pairs (deduplicated, ordered).
    pub fn pairs_extended(&self) -> Vec<(usize, usize)> {
        let mut out = self.pairs();
        for &(t, n) in &self.extra_pairs {
            if t >= 2 && t <= n && !out.contains(&(t, n)) {
                out.push((t, n));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn k_range(&self, t: usize, n: usize) -> Vec<usize> {
        let all: Vec<usize> = (1..=n - t + 2).collect();
        match &self.k_values {
            None => all,
            Some(ks) => all.into_iter().filter(|k| ks.contains(k)).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.t_values.is_empty() || self.n_values.is_empty() {
            return Err(Error::InvalidParameter("empty t or n range".into()));
        }
        for &p in &self.primes {
            if !crate::algebra::coeff::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p > (1 << 31) {
                return Err(Error::InvalidParameter(format!("prime {p} above 2^31")));
            }
        }
        if self.e_max == 0 {
            return Err(Error::InvalidParameter("e_max must be at least 1".into()));
        }
        if self.budget == 0 {
            return Err(Error::InvalidParameter("budget must be positive".into()));
        }
        Ok(())
    }

    /// Overlay `key = value` lines from a config file. Unknown keys error;
    /// values use the same syntax as the command-line flags.
    pub fn apply_kv_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "t" => self.t_values = parse_list(value)?,
                "n" => self.n_values = parse_list(value)?,
                "prime" | "primes" => {
                    self.primes = parse_list::<u64>(value)?;
                }
                "e-max" | "e_max" => self.e_max = parse_one(value)?,
                "k" => self.k_values = Some(parse_list(value)?),
                "suite" | "suites" => {
                    self.suites = value.split(',').map(|s| s.trim().to_string()).collect();
                }
                "budget" => self.budget = parse_one(value)?,
                "seed" => self.seed = parse_one(value)?,
                "cache-dir" | "cache_dir" => self.cache_dir = Some(PathBuf::from(value)),
                "out" => self.out = Some(PathBuf::from(value)),
                "workers" => self.workers = parse_one(value)?,
                "timings" => self.include_timings = parse_one::<u8>(value)? != 0,
                "extra-pairs" | "extra_pairs" => {
                    self.extra_pairs = parse_pairs(value)?;
                }
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "config line {}: unknown key `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(())
    }
}

fn parse_one<T: std::str::FromStr>(value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("cannot parse `{value}`")))
}

fn parse_list<T: std::str::FromStr>(value: &str) -> Result<Vec<T>> {
    value.split(',').map(|s| parse_one(s.trim())).collect()
}

/// Pairs written as `2x5,3x4`.
fn parse_pairs(value: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if value.trim().is_empty() || value.trim() == "none" {
        return Ok(out);
    }
    for chunk in value.split(',') {
        let (a, b) = chunk.trim().split_once('x').ok_or_else(|| {
            Error::InvalidParameter(format!("pair `{chunk}` should look like 2x5"))
        })?;
        out.push((parse_one(a.trim())?, parse_one(b.trim())?));
    }
    Ok(out)
}
