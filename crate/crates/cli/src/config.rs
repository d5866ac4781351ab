//! Run configuration shared by all commands.

use std::path::PathBuf;

use clap::ValueEnum;
use nilbrauer::SlotBounds;

/// Environment variable overriding the slot cache directory.
pub const CACHE_ENV: &str = "NB_CACHE_DIR";

/// Output format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

/// Options common to every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` runs both parities where that makes sense.
    pub t: Option<u8>,
    pub q_prec: i64,
    pub xi_prec: usize,
    pub max_n: Option<usize>,
    pub max_f: Option<usize>,
    /// Maximum seed length for slot construction.
    pub l: usize,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            t: None,
            q_prec: 12,
            xi_prec: 10,
            max_n: None,
            max_f: None,
            l: SlotBounds::default().l,
            format: Format::Tsv,
            cache_dir: None,
        }
    }
}

impl RunConfig {
    /// The parities selected by `--t`, or both.
    pub fn ts(&self) -> Vec<u8> {
        match self.t {
            Some(t) => vec![t],
            None => vec![0, 1],
        }
    }

    pub fn bounds(&self) -> SlotBounds {
        SlotBounds {
            l: self.l,
            ..SlotBounds::default()
        }
    }
}
