//! Hierarchical action learning for weakly supervised action segmentation.
//!
//! A two-level latent model: fast visual latents `v` and slow, piecewise
//! constant action latents `c`. Training combines a variational bound, a
//! smoothness constraint that keeps `c` slower than `v`, and a classifier
//! fitted to transcript-aligned pseudo labels.

pub mod align;
pub mod config;
pub mod error;
pub mod experiment;
pub mod identcheck;
pub mod ingest;
pub mod linalg;
pub mod metrics;
pub mod net;
pub mod objective;
pub mod optim;
pub mod seed;
pub mod synthgen;
pub mod tape;
pub mod types;

pub use error::{HalError, Result};
