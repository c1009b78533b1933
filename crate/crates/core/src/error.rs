//! Error type shared across the crate, with the exit-code mapping used by the CLI.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid token id {0} (vocabulary has 260 entries)")]
    InvalidToken(u32),

    #[error("empty corpus: no snippets found under the given directory")]
    EmptyCorpus,

    #[error("context length exceeded: position {position} >= max_positions {max_positions}")]
    ContextLength { position: usize, max_positions: usize },

    #[error("layer index {layer} out of range 1..={n_layers}")]
    LayerOutOfRange { layer: usize, n_layers: usize },

    #[error("cache incomplete at layer {layer}: holds {held} entries, expected {expected}")]
    CacheIncomplete { layer: usize, held: usize, expected: usize },

    #[error("training diverged during {stage} at epoch {epoch} (loss is not finite)")]
    TrainingDiverged { stage: &'static str, epoch: usize },

    #[error("checkpoint format error: {0}")]
    CheckpointFormat(String),

    #[error("empty generation context")]
    EmptyContext,

    #[error("empty reference sequence")]
    InvalidReference,

    #[error("empty decision log")]
    EmptyLog,

    #[error("empty evaluation set")]
    EmptyEvalSet,

    #[error("degenerate baseline: baseline score is zero")]
    DegenerateBaseline,

    #[error("config error: {0}")]
    Config(String),

    #[error("missing {what}: expected at {path} (run `{produced_by}` first)")]
    MissingArtifact {
        what: &'static str,
        path: PathBuf,
        produced_by: &'static str,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Machine-parseable category printed by the CLI on failure.
    pub fn category(&self) -> &'static str {
        match self {
            Error::MissingArtifact { .. } => "missing-dependency",
            Error::Config(_) => "config",
            Error::TrainingDiverged { .. } => "training-diverged",
            Error::Io(_) | Error::CheckpointFormat(_) | Error::EmptyCorpus => "io",
            _ => "internal",
        }
    }

    /// Process exit code for the CLI: missing-dependency 2, config 3,
    /// training-diverged 4, i/o 5, anything else 1.
    pub fn exit_code(&self) -> i32 {
        match self.category() {
            "missing-dependency" => 2,
            "config" => 3,
            "training-diverged" => 4,
            "io" => 5,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
