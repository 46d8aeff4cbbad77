//! Complete enumeration of admissible Mukai vectors `v = (r, h, s)`.
//!
//! Two of the conditions bound the search box:
//!
//! * nonemptiness `v² = h² − 2rs ≥ −2` gives `rs ≤ (h² + 2)/2`;
//! * inequality (1) reads `r + s + rs ≥ h²/2 + (r+1)k + 1`, and with the first
//!   bound this forces `s ≥ r(k−1) + k > 0`.
//!
//! Hence `r·(r(k−1) + k) ≤ (h² + 2)/2` and `s ∈ [r(k−1) + k, ⌊(h² + 2)/(2r)⌋]`.
//! Every candidate in the box is then run through the exact predicates, so the
//! bounds only prune.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::conditions::{admissibility_report, AdmissibilityReport};
use crate::error::{Error, Result};
use crate::lattice::{K3Surface, MukaiVector};

/// Inclusive ranges of `h²` (even) and `k` to scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub h_squared: (BigInt, BigInt),
    pub k: (u64, u64),
    /// Replaces the derived rank bound. Audit use only.
    pub r_max: Option<BigInt>,
}

impl SearchQuery {
    pub fn single(h_squared: impl Into<BigInt>, k: u64) -> Self {
        let h_squared = h_squared.into();
        Self {
            h_squared: (h_squared.clone(), h_squared),
            k: (k, k),
            r_max: None,
        }
    }

    pub fn ranges(h_squared: (BigInt, BigInt), k: (u64, u64)) -> Self {
        Self {
            h_squared,
            k,
            r_max: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = &self.h_squared;
        if lo > hi {
            return Err(Error::InvalidQuery(format!("empty h^2 range {lo}-{hi}")));
        }
        if lo.is_odd() || hi.is_odd() {
            return Err(Error::InvalidQuery(format!(
                "h^2 range endpoints must be even, got {lo}-{hi}"
            )));
        }
        if *lo < BigInt::from(2) {
            return Err(Error::InvalidQuery(format!("h^2 must be at least 2, got {lo}")));
        }
        let (k_lo, k_hi) = self.k;
        if k_lo > k_hi {
            return Err(Error::InvalidQuery(format!("empty k range {k_lo}-{k_hi}")));
        }
        if k_lo == 0 {
            return Err(Error::InvalidQuery("k must be at least 1".into()));
        }
        Ok(())
    }

    fn surfaces(&self) -> impl Iterator<Item = K3Surface> + '_ {
        let (lo, hi) = &self.h_squared;
        num_iter::range_step_inclusive(lo.clone(), hi.clone(), BigInt::from(2))
            .map(|h2| K3Surface::new(h2).expect("validated query"))
    }
}

/// Search box for one `(h², k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    k: u64,
    /// `(h² + 2)/2`, the largest admissible `rs`.
    budget: BigInt,
    pub r_max: BigInt,
}

impl SearchBounds {
    /// Smallest `s` allowed by the bounds: `r(k−1) + k`.
    pub fn s_min(&self, r: &BigInt) -> BigInt {
        let k = BigInt::from(self.k);
        r * (&k - 1) + k
    }

    /// Inclusive `s` interval for rank `r`; empty when `lo > hi`.
    pub fn s_range(&self, r: &BigInt) -> (BigInt, BigInt) {
        (self.s_min(r), self.budget.div_floor(r))
    }

    fn fits(&self, r: &BigInt) -> bool {
        r * self.s_min(r) <= self.budget
    }
}

pub fn search_bounds(surface: &K3Surface, k: u64) -> Result<SearchBounds> {
    if k == 0 {
        return Err(Error::NonPositivePoints);
    }
    let mut bounds = SearchBounds {
        k,
        budget: (surface.h_squared() + 2u32) / 2u32,
        r_max: BigInt::zero(),
    };
    // r·s_min(r) is strictly increasing and ≥ r, so the answer lies in [0, budget].
    let (mut lo, mut hi) = (BigInt::zero(), bounds.budget.clone());
    while lo < hi {
        let mid: BigInt = (&lo + &hi + 1u32) / 2u32;
        if bounds.fits(&mid) {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    bounds.r_max = lo;
    Ok(bounds)
}

/// One admissible vector with its full certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SearchHit {
    pub certificate: Certificate,
}

impl SearchHit {
    pub fn h_squared(&self) -> &BigInt {
        &self.certificate.input.h_squared
    }

    pub fn k(&self) -> u64 {
        self.certificate.input.k
    }

    pub fn vector(&self) -> MukaiVector {
        self.certificate.vector()
    }

    pub fn report(&self) -> &AdmissibilityReport {
        &self.certificate.report
    }

    fn sort_key(&self) -> (&BigInt, u64, &BigInt, &BigInt) {
        let input = &self.certificate.input;
        (&input.h_squared, input.k, &input.r, &input.s)
    }
}

struct RankTask {
    surface: K3Surface,
    k: u64,
    bounds: SearchBounds,
    r: BigInt,
}

impl RankTask {
    fn run(&self) -> Result<Vec<SearchHit>> {
        let (lo, hi) = self.bounds.s_range(&self.r);
        let mut hits = Vec::new();
        for s in num_iter::range_inclusive(lo, hi) {
            let v = MukaiVector::new(self.r.clone(), 1, s);
            if admissibility_report(&self.surface, &v, self.k)?.admissible {
                hits.push(SearchHit {
                    certificate: Certificate::build(&self.surface, &v, self.k)?,
                });
            }
        }
        Ok(hits)
    }
}

fn tasks(query: &SearchQuery) -> Result<Vec<RankTask>> {
    let mut tasks = Vec::new();
    for surface in query.surfaces() {
        for k in query.k.0..=query.k.1 {
            let bounds = search_bounds(&surface, k)?;
            let r_max = query.r_max.clone().unwrap_or_else(|| bounds.r_max.clone());
            for r in num_iter::range_inclusive(BigInt::one(), r_max) {
                tasks.push(RankTask {
                    surface: surface.clone(),
                    k,
                    bounds: bounds.clone(),
                    r,
                });
            }
        }
    }
    Ok(tasks)
}

/// All admissible `(h², k, r, 1, s)` in the query, sorted by `(h², k, r, s)`.
///
/// `workers > 1` spreads the rank slices over a thread pool; the result does not
/// depend on the worker count.
pub fn enumerate(query: &SearchQuery, workers: usize) -> Result<Vec<SearchHit>> {
    query.validate()?;
    if query.r_max.as_ref().is_some_and(|r| r.is_negative()) {
        return Err(Error::InvalidQuery("r_max must be non-negative".into()));
    }
    let tasks = tasks(query)?;
    let slices: Vec<Vec<SearchHit>> = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidQuery(format!("cannot start {workers} workers: {e}")))?;
        pool.install(|| tasks.par_iter().map(RankTask::run).collect::<Result<_>>())?
    } else {
        tasks.iter().map(RankTask::run).collect::<Result<_>>()?
    };
    let mut hits: Vec<SearchHit> = slices.into_iter().flatten().collect();
    hits.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(hits)
}
