//! Upper and lower bounds on a sequence model's test-set accuracy, predicted
//! from unlabeled data.
//!
//! The pipeline trains an ensemble of binary *correctness discriminators* —
//! classifiers that judge whether a predicted output sequence is the right
//! one for a given input sentence — and aggregates their per-instance
//! verdicts with two voting rules. Counting an instance as correct when *any*
//! member says so gives an upper bound on the accuracy; counting it as
//! correct only when *every* member says so gives a lower bound. Positive
//! training pairs come from gold data; negative pairs are harvested from the
//! decoder beams of intermediate training checkpoints and from rule-based
//! noise.
//!
//! Modules, in pipeline order:
//!
//! - [`records`] — canonical data model and line-delimited serialization
//! - [`synth`] — synthetic parsing task and simulated noisy checkpoints
//! - [`harvest`] — discriminator training-set construction
//! - [`discriminator`] — hashed-feature logistic discriminators and ensembles
//! - [`estimator`] — verdict matrices, voting bounds, bootstrap intervals
//! - [`baselines`] — confidence-based estimators for comparison
//! - [`metrics`] — confusion counts, recall scores, estimation error

pub mod baselines;
pub mod discriminator;
pub mod estimator;
pub mod harvest;
pub mod metrics;
pub mod records;
pub mod synth;
pub mod text;

mod error;

pub use error::{Error, Result};
