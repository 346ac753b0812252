//! Near-MDS codes over GF(2^m).
//!
//! Builds the twelve three-dimensional generator matrices of the oval
//! polynomial `x^2` family, computes their weight distributions by
//! exhaustive enumeration, classifies them as MDS/AMDS/NMDS, and measures
//! their minimum linear locality against the Singleton-like and
//! Cadambe-Mazumdar bounds for locally recoverable codes.
//!
//! ```
//! use nmds_core::{constructions::{build, ConstructionId}, codes, field::FieldContext};
//! use std::sync::Arc;
//!
//! let gf8 = Arc::new(FieldContext::new(3, None).unwrap());
//! let c = build(ConstructionId::C, &gf8);
//! let dist = codes::weight_distribution(&c).unwrap();
//! assert_eq!(dist.enumerator_string(), "1 + 70z^9 + 252z^10 + 42z^11 + 147z^12");
//! ```

pub mod codes;
pub mod constructions;
pub mod error;
pub mod field;
pub mod lrc;
pub mod matrix;
pub mod nmds;
pub mod par;
pub mod report;

pub use error::{CodeError, FieldError};
pub use par::Execution;
