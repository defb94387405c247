//! Binary Z-complementary pairs (ZCPs): exact correlation algebra, ZCZ
//! classification, recursive and Turyn-style constructions, an exhaustive
//! seed-pair search, and PMEPR evaluation of the resulting sequences.
//!
//! Sequences are stored bit-packed (one sign bit per element) and every
//! correlation is exact integer arithmetic.

pub mod analysis;
pub mod checks;
pub mod constructions;
pub mod error;
pub mod golden;
pub mod pmepr;
pub mod record;
pub mod seedsearch;
pub mod seq;
pub mod tables;

pub use analysis::{classify, is_gcp, type1_zcz_width, type2_zcz_width, ZcpClassification};
pub use constructions::{GolayNumber, TreeAddress};
pub use error::{Result, ZcpError};
pub use pmepr::{PmeprEstimator, PmeprReport};
pub use seedsearch::{SearchMode, SearchResult, SearchTask};
pub use seq::{BinarySequence, CorrelationProfile, SequencePair, Sign};
