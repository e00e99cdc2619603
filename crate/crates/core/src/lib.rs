//! Categories of partitions: the diagram calculus, truncated closure under the
//! category operations, W-depth analysis of one-row words, a classifier for
//! the hyperoctahedral categories and exact checks of the matrix
//! representations that separate them.

pub mod classify;
pub mod engine;
pub mod error;
pub mod lab;
pub mod named;
pub mod partition;
pub mod suite;
pub mod word;

pub use classify::{classify, ClassificationReport, Class, ClassifyOptions};
pub use engine::{CategoryClosure, ClosureOptions, MembershipAnswer, Mode};
pub use error::{Error, Result};
pub use named::Named;
pub use partition::{Corner, Partition};
pub use word::Word;
