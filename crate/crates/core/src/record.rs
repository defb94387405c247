//! Flat, schema-stable description of a pair for JSON and CSV output.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::seq::{BinarySequence, SequencePair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub length: usize,
    pub first: BinarySequence,
    pub second: BinarySequence,
    /// Signed sums `rho_first(t) + rho_second(t)` for `t = 0..length`.
    pub profile: Vec<i64>,
    pub type2_zcz: usize,
    pub type1_zcz: usize,
    pub is_gcp: bool,
    pub z_optimal_type2: bool,
    pub optimal_type2: bool,
    pub z_optimal_type1: bool,
    pub optimal_type1: bool,
    pub out_of_zone_max: u64,
}

pub const CSV_HEADER: &str = "length,first,second,profile,type2_zcz,type1_zcz,is_gcp,z_optimal_type2,optimal_type2,z_optimal_type1,optimal_type1,out_of_zone_max";

impl PairRecord {
    /// Measures the pair from scratch.
    pub fn analyze(pair: &SequencePair) -> Result<Self> {
        let profile = pair.profile()?;
        let c = profile.classify();
        Ok(PairRecord {
            length: c.length,
            first: pair.first.clone(),
            second: pair.second.clone(),
            profile: profile.sums().to_vec(),
            type2_zcz: c.type2_zcz,
            type1_zcz: c.type1_zcz,
            is_gcp: c.is_gcp,
            z_optimal_type2: c.z_optimal_type2,
            optimal_type2: c.optimal_type2,
            z_optimal_type1: c.z_optimal_type1,
            optimal_type1: c.optimal_type1,
            out_of_zone_max: c.out_of_zone_max,
        })
    }

    pub fn pair(&self) -> SequencePair {
        SequencePair::new(self.first.clone(), self.second.clone())
    }

    /// One CSV line; the profile is `;`-separated.
    pub fn csv_line(&self) -> String {
        let profile: Vec<String> = self.profile.iter().map(i64::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.length,
            self.first,
            self.second,
            profile.join(";"),
            self.type2_zcz,
            self.type1_zcz,
            self.is_gcp,
            self.z_optimal_type2,
            self.optimal_type2,
            self.z_optimal_type1,
            self.optimal_type1,
            self.out_of_zone_max
        )
    }
}
