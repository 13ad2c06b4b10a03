//! Measurement engine for turning ordinal ratings by multiple raters on
//! multiple survey items into a debiased, continuous latent score.
//!
//! The engine implements the many-facet Rasch partial credit model: every
//! comment (the object of measurement), survey item, item step, and rater is
//! located on one shared logit scale. Adjacent-category log-odds decompose
//! additively as `theta - delta - alpha - tau`, so rater severity can be
//! estimated and removed from the comment scores.
//!
//! Modules:
//! - [`model`]: domain types, the category probability kernel, and a
//!   model-based response simulator used as the testing oracle.
//! - [`estimate`]: joint maximum likelihood calibration with identification
//!   constraints, anchoring, and weighted-likelihood ability estimation.
//! - [`fit`]: infit/outfit mean-squares, discrimination, point-measure
//!   correlations, reliabilities, monotonicity checks, item correlations.
//! - [`filter`]: rater quality screening and the filter/refit loop.
//! - [`scorer`]: anchored scoring of predicted rating distributions via
//!   modal ratings or plausible-value sampling.
//! - [`io`]: delimited-text and JSON file formats plus dataset validation.

pub mod error;
pub mod estimate;
pub mod filter;
pub mod fit;
pub mod io;
pub mod model;
pub mod scorer;

pub use error::Error;
pub use model::{CommentSpec, FacetParameters, ItemSpec, RaterSpec, Response};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
