//! Early-exit code completion engine.
//!
//! The crate trains a small decoder-only transformer on a byte-level code
//! corpus, attaches intermediate LM heads to every layer, and trains a shared
//! three-way action classifier (stop / exit / continue) on top of the frozen
//! backbone. The generation loop can then emit tokens from intermediate
//! layers or halt a completion entirely, with per-round cost accounting and a
//! benchmark harness for threshold sweeps and tolerance-based selection.

pub mod backbone;
pub mod bench;
pub mod checkpoint;
pub mod config;
pub mod controller;
pub mod corpus;
pub mod dyninfer;
pub mod error;
pub mod exit_heads;
pub mod metrics;
pub mod nn;
pub mod pipeline;
pub mod serve;

pub use error::{Error, Result};
