use std::path::{Path, PathBuf};

use clap::ValueEnum;
use hessloc::limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub max_n: usize,
    pub max_degree: usize,
    cache: Option<PathBuf>,
}

impl RunConfig {
    /// Unset guards fall back to the library defaults. `no_cache` wins over
    /// any cache path.
    pub fn new(
        format: Format,
        max_n: Option<usize>,
        max_degree: Option<usize>,
        cache: Option<PathBuf>,
        no_cache: bool,
    ) -> Self {
        RunConfig {
            format,
            max_n: max_n.unwrap_or(limits::DEFAULT_MAX_N),
            max_degree: max_degree.unwrap_or(limits::DEFAULT_MAX_DEGREE),
            cache: if no_cache { None } else { cache },
        }
    }

    pub fn apply_guards(&self) {
        limits::set_max_n(self.max_n);
        limits::set_max_degree(self.max_degree);
    }

    pub fn cache_path(&self) -> Option<&Path> {
        self.cache.as_deref()
    }
}
