//! Published reference data: the "best possible" Type-II pairs up to length
//! 30, floor-meeting seed pairs, the Turyn-product PMEPR table, and the
//! worked examples. Entries are carried verbatim, including two zero-shift
//! misprints which are flagged with their corrected expectations.

use crate::analysis::ZcpClassification;
use crate::error::{Result, ZcpError};
use crate::seq::{BinarySequence, SequencePair};

/// Optimal length-14 Type-II EB-ZCP, profile `(28,4,0_12)`.
pub const OPTIMAL_14: (&str, &str) = ("+-+++++-+++--+", "+-++++-----++-");

/// Seeds of the length-13 optimal pair.
pub const FLOOR_SEEDS_6: (&str, &str) = ("+++++-", "++--+-+");

/// Length-3 Z-optimal pair used as the left factor in the PMEPR table.
pub const TRIPLE: (&str, &str) = ("+++", "+--");

/// Published length-30 Turyn product of `TRIPLE` with the length-10 GCP.
pub const PRODUCT_30: (&str, &str) = ("++++++---+++-+++++-++-+++--+--", "++-++---+++----++-------++++++");

/// Published PMEPR of each member of the length-13 example pair.
pub const LENGTH13_PMEPR_PRINTED: (f64, f64) = (2.4276, 2.4276);

/// Class label printed next to each Table II entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Gcp,
    OptimalOb,
    OptimalEb,
    ZOptimalEb,
    Eb,
}

impl PairKind {
    pub fn label(self) -> &'static str {
        match self {
            PairKind::Gcp => "GCP",
            PairKind::OptimalOb => "Optimal OB-ZCP",
            PairKind::OptimalEb => "Optimal EB-ZCP",
            PairKind::ZOptimalEb => "Z-optimal EB-ZCP",
            PairKind::Eb => "EB-ZCP",
        }
    }

    /// Whether a measured classification agrees with this label.
    pub fn matches(self, c: &ZcpClassification) -> bool {
        let odd = c.length % 2 == 1;
        match self {
            PairKind::Gcp => c.is_gcp,
            PairKind::OptimalOb => odd && c.optimal_type2,
            PairKind::OptimalEb => !odd && c.optimal_type2,
            PairKind::ZOptimalEb => !odd && !c.is_gcp && c.z_optimal_type2 && !c.optimal_type2,
            PairKind::Eb => !odd && !c.is_gcp && !c.z_optimal_type2,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TableTwoRow {
    pub n: usize,
    pub kind: PairKind,
    pub first: &'static str,
    pub second: &'static str,
    /// Magnitude profile exactly as printed.
    pub published: &'static str,
    /// Corrected profile when the printed one is a misprint.
    pub corrected: Option<&'static str>,
    /// The printed class label contradicts the printed profile.
    pub label_contradicts_profile: bool,
}

impl TableTwoRow {
    pub fn pair(&self) -> SequencePair {
        SequencePair::parse(self.first, self.second).expect("embedded pair")
    }

    pub fn is_erratum(&self) -> bool {
        self.corrected.is_some()
    }

    /// The profile the pair must reproduce.
    pub fn expected(&self) -> Vec<u64> {
        expand_profile(self.corrected.unwrap_or(self.published)).expect("embedded profile")
    }
}

const fn row(
    n: usize,
    kind: PairKind,
    first: &'static str,
    second: &'static str,
    published: &'static str,
) -> TableTwoRow {
    TableTwoRow { n, kind, first, second, published, corrected: None, label_contradicts_profile: false }
}

use PairKind::*;

pub const TABLE_II: [TableTwoRow; 22] = [
    row(2, Gcp, "++", "+-", "(4,0)"),
    row(3, OptimalOb, "+++", "++-", "(6,2,0)"),
    row(4, Gcp, "+++-", "++-+", "(8,0_3)"),
    row(5, OptimalOb, "---++", "--+--", "(10,2_2,0_2)"),
    row(6, OptimalEb, "++++--", "+++-++", "(12,4,0_4)"),
    row(7, OptimalOb, "--+-+--", "--++-++", "(14,2_3,0_3)"),
    row(8, Gcp, "+++-++-+", "+++---+-", "(16,0_7)"),
    row(9, OptimalOb, "+-+++++--", "+-++---++", "(18,2_4,0_4)"),
    row(10, Gcp, "++-+-+--++", "++-+++++--", "(20,0_9)"),
    row(12, ZOptimalEb, "++++--+++-++", "++++-----+--", "(24,8,0_10)"),
    row(14, Eb, "--+-+----++-++", "--+-+--++--+--", "(28,4_3,0_10)"),
    row(15, OptimalOb, "-++-+++++-+-+++", "-++-+++--+-+---", "(30,2_7,0_7)"),
    row(16, Gcp, "+++-++-++++---+-", "+++-++-+---+++-+", "(32,0_15)"),
    row(17, OptimalOb, "-++++-+-+-++--+++", "-++++-+--+--++---", "(34,2_8,0_8)"),
    row(18, Eb, "+-+++++--+-++---++", "+-+++++---+--+++--", "(36,4_4,0_13)"),
    TableTwoRow {
        n: 19,
        kind: OptimalOb,
        first: "+-+++++--++--+-+-++",
        second: "+-+++++----++-+-+--",
        published: "(22,2_9,0_9)",
        corrected: Some("(38,2_9,0_9)"),
        label_contradicts_profile: false,
    },
    TableTwoRow {
        n: 20,
        kind: Gcp,
        first: "++-+-+--++++-+++++--",
        second: "++-+-+--++--+-----++",
        published: "(20,0_9)",
        corrected: Some("(40,0_19)"),
        label_contradicts_profile: false,
    },
    row(21, OptimalOb, "-++-+-+++--++++++--++", "-++-+-+++-+------++--", "(42,2_10,0_10)"),
    row(24, ZOptimalEb, "++++--+++-++++++-----+--", "++++--+++-++----+++++-++", "(48,16,0_22)"),
    row(26, Gcp, "++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---", "(52,0_25)"),
    // Printed as Z-optimal, but its own profile gives Z = 25 < 27.
    TableTwoRow {
        n: 28,
        kind: ZOptimalEb,
        first: "--+-+----++-++--+-+--++--+--",
        second: "--+-+----++-++++-+-++--++-++",
        published: "(56,8_3,0_24)",
        corrected: None,
        label_contradicts_profile: true,
    },
    row(30, ZOptimalEb, "+-++-+-+-++--+-++--+---+++-++-", "+-++-+-+-++-+-+++-+-+++---+--+", "(60,20,0_28)"),
];

#[derive(Debug, Clone, Copy)]
pub struct SeedRow {
    pub n: usize,
    pub a: &'static str,
    pub b: &'static str,
}

impl SeedRow {
    pub fn seeds(&self) -> (BinarySequence, BinarySequence) {
        (self.a.parse().expect("embedded seed"), self.b.parse().expect("embedded seed"))
    }
}

const fn seed(n: usize, a: &'static str, b: &'static str) -> SeedRow {
    SeedRow { n, a, b }
}

/// Floor-meeting seed pairs `|rho_a + rho_b| = 1` on shifts `1..=N`.
pub const TABLE_III: [SeedRow; 12] = [
    seed(5, "++++-", "++--+-"),
    seed(6, "+++++-", "++--+-+"),
    seed(11, "++++++-+--+", "+-+---+++--+"),
    seed(12, "++++++-++--+", "++----++-+-+-"),
    seed(13, "+----+++-++-+", "------++--+-+-"),
    seed(14, "--++++---+--+-", "++++-+++-+-+--+"),
    seed(17, "-+-+---+++++++--+", "+++--++-++-++++-+-"),
    seed(18, "--++--+-+-+++++---", "+++-++++-+-++-++--+"),
    seed(21, "--+--+-++---+-+++---+", "-++---------+++-+-+--+"),
    seed(22, "+++-+----+---++-+--++-", "+++-+-----+-+----++--+-"),
    seed(23, "+---+---+---++++-+-++-+", "++----+-++-++-----+---+-"),
    seed(24, "-+-----+-+--+++-+--+---+", "-+---+----++-++---+++++-+"),
];

/// One row of the published PMEPR table: GCP length and the PMEPRs of
/// `(u, v)` for the length-3 and length-14 left factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PmeprRow {
    pub n2: u64,
    pub u3: f64,
    pub v3: f64,
    pub u14: f64,
    pub v14: f64,
}

const fn prow(n2: u64, u3: f64, v3: f64, u14: f64, v14: f64) -> PmeprRow {
    PmeprRow { n2, u3, v3, u14, v14 }
}

pub const TABLE_IV: [PmeprRow; 13] = [
    prow(1, 3.0000, 1.6667, 2.5714, 2.4119),
    prow(2, 2.8452, 2.6667, 2.1373, 2.5137),
    prow(4, 3.0000, 1.7387, 2.5714, 2.5102),
    prow(8, 3.2545, 3.0740, 2.5243, 2.5456),
    prow(10, 3.3333, 3.0200, 2.4851, 2.5570),
    prow(16, 3.0312, 3.2919, 2.5714, 2.5102),
    prow(20, 3.1834, 3.3159, 2.5669, 2.5549),
    prow(26, 3.2902, 3.2291, 2.5542, 2.5545),
    prow(32, 3.3290, 3.1483, 2.5714, 2.5373),
    prow(40, 3.3333, 3.0446, 2.5624, 2.5570),
    prow(52, 3.3064, 3.3189, 2.5682, 2.5549),
    prow(64, 3.2902, 3.3201, 2.5714, 2.5689),
    prow(80, 3.2037, 3.2667, 2.5669, 2.5695),
];

/// Oversampling factor at which the published PMEPR table is reproduced by
/// plain grid sampling.
pub const TABLE_IV_GRID_OVERSAMPLING: usize = 8;

/// Expands `(28,4_3,0_10)` into `[28, 4, 4, 4, 0, ...]`.
pub fn expand_profile(s: &str) -> Result<Vec<u64>> {
    let bad = || ZcpError::InvalidParameter(format!("malformed profile {s:?}"));
    let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    let mut out = Vec::new();
    for part in inner.split(',') {
        let (value, run) = match part.trim().split_once('_') {
            Some((v, r)) => (v, r.parse::<usize>().map_err(|_| bad())?),
            None => (part.trim(), 1),
        };
        let value: u64 = value.parse().map_err(|_| bad())?;
        out.extend(std::iter::repeat_n(value, run));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand() {
        assert_eq!(expand_profile("(6,2,0)").unwrap(), vec![6, 2, 0]);
        assert_eq!(expand_profile("(8,0_3)").unwrap(), vec![8, 0, 0, 0]);
        assert!(expand_profile("8,0").is_err());
        assert!(expand_profile("(8,x)").is_err());
    }

    #[test]
    fn embedded_lengths_consistent() {
        for r in TABLE_II {
            assert_eq!(r.first.len(), r.n);
            assert_eq!(r.second.len(), r.n);
            assert_eq!(r.expected().len(), r.n, "row {}", r.n);
        }
        for r in TABLE_III {
            assert_eq!((r.a.len(), r.b.len()), (r.n, r.n + 1));
        }
    }

    #[test]
    fn errata_rows_are_the_misprinted_ones() {
        let flagged: Vec<usize> = TABLE_II.iter().filter(|r| r.is_erratum()).map(|r| r.n).collect();
        assert_eq!(flagged, vec![19, 20]);
        // The printed zero-shift entries cannot be right for binary pairs.
        for r in TABLE_II.iter().filter(|r| r.is_erratum()) {
            let printed = expand_profile(r.published).unwrap();
            assert_ne!(printed[0], 2 * r.n as u64);
        }
    }
}
