//! Process-wide resource guards.
//!
//! Two independent caps exist: the largest `n` for which permutation,
//! coloring and edge-subset enumerations are attempted, and the largest
//! degree for which symmetric-function transition matrices are built.
//! Both can be overridden at runtime or through the environment variables
//! `HESSLOC_MAX_N` and `HESSLOC_MAX_DEGREE` (read by [`load_env`]).

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_N: usize = 8;
pub const DEFAULT_MAX_DEGREE: usize = 12;

pub const ENV_MAX_N: &str = "HESSLOC_MAX_N";
pub const ENV_MAX_DEGREE: &str = "HESSLOC_MAX_DEGREE";

static MAX_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_N);
static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

pub fn max_n() -> usize {
    MAX_N.load(Ordering::Relaxed)
}

pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

/// Panics if `n` is zero; guards must be positive.
pub fn set_max_n(n: usize) {
    assert!(n > 0, "guards must be positive");
    MAX_N.store(n, Ordering::Relaxed);
}

pub fn set_max_degree(d: usize) {
    assert!(d > 0, "guards must be positive");
    MAX_DEGREE.store(d, Ordering::Relaxed);
}

/// Apply overrides from the environment. Returns a parse error for values
/// that are not positive integers.
pub fn load_env() -> Result<()> {
    for (var, setter) in [
        (ENV_MAX_N, set_max_n as fn(usize)),
        (ENV_MAX_DEGREE, set_max_degree as fn(usize)),
    ] {
        if let Ok(raw) = std::env::var(var) {
            let v: usize =
                raw.trim().parse().ok().filter(|&v| v > 0).ok_or_else(|| {
                    Error::Parse(format!("{var}={raw:?} is not a positive integer"))
                })?;
            setter(v);
        }
    }
    Ok(())
}

pub(crate) fn check_n(what: &'static str, value: usize) -> Result<()> {
    let max = max_n();
    if value > max {
        return Err(Error::ResourceGuard { what, value, max });
    }
    Ok(())
}

pub(crate) fn check_degree(value: usize) -> Result<()> {
    let max = max_degree();
    if value > max {
        return Err(Error::ResourceGuard {
            what: "degree",
            value,
            max,
        });
    }
    Ok(())
}
