//! One module per subcommand. Each returns a [`crate::Report`].

pub mod branch;
pub mod catalog;
pub mod geometry;
pub mod isolation;
pub mod lefschetz;

use crate::error::{CliError, Result};

/// Comma-separated unsigned integers.
pub(crate) fn usizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("expected integers, got `{s}`"))))
        .collect()
}
