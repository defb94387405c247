//! Zero-correlation-zone measurement and optimality classification.
//!
//! Type-II widths count the zero run ending at shift `N-1`; Type-I widths the
//! zero run starting at shift 1. Z-optimality compares the measured width with
//! the known upper bounds for the length class, and optimality additionally
//! requires the out-of-zone sums to sit exactly on their lower bounds.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::seq::{CorrelationProfile, SequencePair};

/// Measured ZCZ structure and optimality verdicts for an equal-length pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZcpClassification {
    pub length: usize,
    pub type2_zcz: usize,
    pub type1_zcz: usize,
    pub is_gcp: bool,
    /// Largest |sum| over shifts `1..=N-Z` (Type-II); zero for a GCP.
    pub out_of_zone_max: u64,
    pub z_optimal_type2: bool,
    pub optimal_type2: bool,
    pub z_optimal_type1: bool,
    pub optimal_type1: bool,
}

impl ZcpClassification {
    /// Short human label for the Type-II verdict.
    pub fn type2_label(&self) -> String {
        let n = self.length;
        if self.is_gcp {
            return format!("GCP (Z = N = {n})");
        }
        let parity = if n % 2 == 1 { "OB" } else { "EB" };
        let z = self.type2_zcz;
        if self.optimal_type2 {
            format!("optimal Type-II {parity}-ZCP, Z={z}")
        } else if self.z_optimal_type2 {
            format!("Z-optimal Type-II {parity}-ZCP, not optimal, Z={z}")
        } else {
            format!("Type-II {parity}-ZCP, Z={z} (not Z-optimal)")
        }
    }

    pub fn type1_label(&self) -> String {
        let n = self.length;
        if self.is_gcp {
            return format!("GCP (Z = N = {n})");
        }
        let parity = if n % 2 == 1 { "OB" } else { "EB" };
        let z = self.type1_zcz;
        let mut label = if self.optimal_type1 {
            format!("optimal Type-I {parity}-ZCP, Z={z}")
        } else if self.z_optimal_type1 {
            format!("Z-optimal Type-I {parity}-ZCP, not optimal, Z={z}")
        } else {
            format!("Type-I {parity}-ZCP, Z={z} (not Z-optimal)")
        };
        if let Some(note) = type1_note(n, z, self.is_gcp) {
            label.push_str(&format!(" [{note}]"));
        }
        label
    }
}

/// Even-length Type-I pairs below `Z = N/2` have no applicable floor.
pub fn type1_note(n: usize, z: usize, is_gcp: bool) -> Option<&'static str> {
    (!is_gcp && n.is_multiple_of(2) && 2 * z < n).then_some("bound not applicable")
}

impl CorrelationProfile {
    /// Largest nonzero shift in `1..N`, if any.
    fn last_nonzero(&self) -> Option<usize> {
        (1..self.len()).rev().find(|&t| self.get(t) != 0)
    }

    fn first_nonzero(&self) -> Option<usize> {
        (1..self.len()).find(|&t| self.get(t) != 0)
    }

    pub fn type2_zcz(&self) -> usize {
        match self.last_nonzero() {
            Some(t) => self.len() - t,
            None => self.len(),
        }
    }

    pub fn type1_zcz(&self) -> usize {
        self.first_nonzero().unwrap_or(self.len())
    }

    pub fn is_gcp(&self) -> bool {
        self.last_nonzero().is_none()
    }

    pub fn classify(&self) -> ZcpClassification {
        let n = self.len();
        let odd = n % 2 == 1;
        let gcp = self.is_gcp();
        let z2 = self.type2_zcz();
        let z1 = self.type1_zcz();
        let mag = |t: usize| self.get(t).unsigned_abs();

        if odd {
            let cap = n.div_ceil(2);
            assert!(
                z2 <= cap && z1 <= cap,
                "odd-length ZCZ bound violated: N={n}, type-II Z={z2}, type-I Z={z1}, cap={cap}"
            );
        } else if !gcp {
            if z1 > n - 2 {
                log::warn!("Type-I EB-ZCP exceeds N-2 bound: N={n}, Z={z1}");
            }
            if z2 > n - 1 {
                log::warn!("Type-II EB-ZCP exceeds N-1 bound: N={n}, Z={z2}");
            }
        }

        let out_of_zone_max = (1..=n - z2).map(mag).max().unwrap_or(0);

        let z_optimal_type2 = gcp || if odd { z2 == n.div_ceil(2) } else { z2 == n - 1 };
        let optimal_type2 =
            !gcp && z_optimal_type2 && if odd { (1..=(n - 1) / 2).all(|t| mag(t) == 2) } else { mag(1) == 4 };

        let z_optimal_type1 = gcp || if odd { z1 == n.div_ceil(2) } else { z1 + 2 == n };
        let optimal_type1 = !gcp
            && z_optimal_type1
            && if odd { (n.div_ceil(2)..n).all(|t| mag(t) == 2) } else { 2 * z1 >= n && mag(z1) == 4 };

        ZcpClassification {
            length: n,
            type2_zcz: z2,
            type1_zcz: z1,
            is_gcp: gcp,
            out_of_zone_max,
            z_optimal_type2,
            optimal_type2,
            z_optimal_type1,
            optimal_type1,
        }
    }
}

pub fn type2_zcz_width(p: &SequencePair) -> Result<usize> {
    Ok(p.profile()?.type2_zcz())
}

pub fn type1_zcz_width(p: &SequencePair) -> Result<usize> {
    Ok(p.profile()?.type1_zcz())
}

pub fn is_gcp(p: &SequencePair) -> Result<bool> {
    Ok(p.profile()?.is_gcp())
}

pub fn classify(p: &SequencePair) -> Result<ZcpClassification> {
    Ok(p.profile()?.classify())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ZcpError;

    fn pair(a: &str, b: &str) -> SequencePair {
        SequencePair::parse(a, b).unwrap()
    }

    #[test]
    fn widths_on_small_pairs() {
        let p = pair("+++", "++-");
        assert_eq!(p.profile().unwrap().magnitudes(), vec![6, 2, 0]);
        assert_eq!(type1_zcz_width(&p).unwrap(), 1);
        assert_eq!(type2_zcz_width(&p).unwrap(), 2);
        assert!(!is_gcp(&p).unwrap());

        let g = pair("++", "+-");
        assert_eq!(type2_zcz_width(&g).unwrap(), 2);
        assert_eq!(type1_zcz_width(&g).unwrap(), 2);
        assert!(is_gcp(&g).unwrap());
    }

    #[test]
    fn equal_members_are_never_gcp() {
        let c: crate::BinarySequence = "+-+++--".parse().unwrap();
        assert!(!is_gcp(&SequencePair::new(c.clone(), c)).unwrap());
    }

    #[test]
    fn length_one_is_trivial_gcp() {
        let c = classify(&pair("+", "-")).unwrap();
        assert!(c.is_gcp);
        assert_eq!((c.type1_zcz, c.type2_zcz), (1, 1));
        assert_eq!(c.out_of_zone_max, 0);
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(matches!(classify(&pair("++", "+++")), Err(ZcpError::LengthMismatch { .. })));
    }

    #[test]
    fn type1_even_note() {
        assert_eq!(type1_note(12, 1, false), Some("bound not applicable"));
        assert_eq!(type1_note(12, 6, false), None);
        assert_eq!(type1_note(12, 12, true), None);
        assert_eq!(type1_note(13, 1, false), None);
    }

    #[test]
    fn labels() {
        let c = classify(&pair("+++", "+--")).unwrap();
        assert_eq!(c.type2_label(), "optimal Type-II OB-ZCP, Z=2");
        let g = classify(&pair("+++-", "++-+")).unwrap();
        assert_eq!(g.type2_label(), "GCP (Z = N = 4)");
    }
}
