//! Peak-to-mean envelope power ratio of the multicarrier signal
//! `S(t) = sum_k c_k exp(2 pi j k t)`, `t` in `[0, 1)`.
//!
//! The carrier offset only rotates the envelope by a global phase and the
//! subcarrier spacing only rescales time, so neither appears here. The
//! supremum is approximated on an `O*L` point grid obtained from a zero-padded
//! FFT, optionally followed by golden-section refinement of the continuous
//! envelope around the best grid peaks.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::constructions::{gcp_factory, table_iv_orientation, turyn_product, GolayNumber};
use crate::error::{Result, ZcpError};
use crate::golden;
use crate::seq::{BinarySequence, CorrelationProfile, SequencePair};

/// GCP lengths of the published PMEPR table.
pub const TABLE4_N2: [u64; 13] = [1, 2, 4, 8, 10, 16, 20, 26, 32, 40, 52, 64, 80];

pub const TABLE4_CSV_HEADER: &str = "N2,pmepr_u3,pmepr_v3,pmepr_u14,pmepr_v14,bound3,bound14";

const GOLDEN_ITERS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "oversampling", rename_all = "lowercase")]
pub enum PmeprEstimator {
    /// Maximum over the `O*L` grid only.
    Grid(usize),
    /// Grid maximum, then golden-section search between the neighbours of
    /// every grid peak that could still hide the true maximum.
    Refined(usize),
}

impl PmeprEstimator {
    pub fn oversampling(self) -> usize {
        match self {
            PmeprEstimator::Grid(o) | PmeprEstimator::Refined(o) => o,
        }
    }
}

impl Default for PmeprEstimator {
    fn default() -> Self {
        PmeprEstimator::Refined(128)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmeprReport {
    pub pmepr_first: f64,
    pub pmepr_second: f64,
    pub pmepr_pair: f64,
    /// `2 + (2/L) * sum |rho_c + rho_d|` over nonzero shifts.
    pub bound: f64,
    pub oversampling_factor: usize,
    pub sequence_length: usize,
    pub refined: bool,
}

fn check_oversampling(o: usize) -> Result<()> {
    if o < 2 {
        return Err(ZcpError::Oversampling(o));
    }
    Ok(())
}

/// `|S(t_m)|^2` at `t_m = m / (O L)` for `m = 0..O L`.
pub fn envelope_power(c: &BinarySequence, oversampling: usize) -> Result<Vec<f64>> {
    check_oversampling(oversampling)?;
    let m = c.len() * oversampling;
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for (slot, v) in buf.iter_mut().zip(c.iter()) {
        slot.re = f64::from(v);
    }
    // Forward transform evaluates S at -t; |S(-t)| = |S(t)| for real input.
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    Ok(buf.iter().map(|z| z.norm_sqr()).collect())
}

/// `|S(t)|^2` by direct summation.
pub fn envelope_power_at(c: &BinarySequence, t: f64) -> f64 {
    let (mut re, mut im) = (0.0, 0.0);
    for (k, v) in c.iter().enumerate() {
        let (s, co) = (2.0 * PI * k as f64 * t).sin_cos();
        re += f64::from(v) * co;
        im += f64::from(v) * s;
    }
    re * re + im * im
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..GOLDEN_ITERS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

/// Peak envelope power under the chosen estimator.
pub fn peak_power(c: &BinarySequence, estimator: PmeprEstimator) -> Result<f64> {
    let o = estimator.oversampling();
    let grid = envelope_power(c, o)?;
    let best = grid.iter().copied().fold(0.0, f64::max);
    if matches!(estimator, PmeprEstimator::Grid(_)) {
        return Ok(best);
    }
    // A continuous peak can exceed its nearest samples by at most a factor
    // of about 1/cos^2(pi/O); only grid peaks within that margin are refined.
    let cutoff = best * (PI / o as f64).cos().powi(2);
    let m = grid.len();
    let step = 1.0 / m as f64;
    let mut peak = best;
    for i in 0..m {
        let (prev, next) = (grid[(i + m - 1) % m], grid[(i + 1) % m]);
        let v = grid[i];
        if v < cutoff || v < prev || v < next {
            continue;
        }
        let t = i as f64 * step;
        peak = peak.max(golden_max(|x| envelope_power_at(c, x), t - step, t + step));
    }
    Ok(peak)
}

pub fn pmepr(c: &BinarySequence, estimator: PmeprEstimator) -> Result<f64> {
    Ok(peak_power(c, estimator)? / c.len() as f64)
}

/// Envelope bound from the pair's correlation sums.
pub fn sum_bound(profile: &CorrelationProfile) -> f64 {
    let l = profile.len() as f64;
    let total: u64 = profile.magnitudes().iter().skip(1).sum();
    2.0 + 2.0 * total as f64 / l
}

pub fn pmepr_pair(p: &SequencePair, estimator: PmeprEstimator) -> Result<PmeprReport> {
    let profile = p.profile()?;
    let (first, second) = rayon::join(|| pmepr(&p.first, estimator), || pmepr(&p.second, estimator));
    let (first, second) = (first?, second?);
    Ok(PmeprReport {
        pmepr_first: first,
        pmepr_second: second,
        pmepr_pair: first.max(second),
        bound: sum_bound(&profile),
        oversampling_factor: estimator.oversampling(),
        sequence_length: profile.len(),
        refined: matches!(estimator, PmeprEstimator::Refined(_)),
    })
}

/// Bound for the depth-1 recursive pair built from seeds of lengths `N`, `N+1`.
pub fn theorem7_bound(a: &BinarySequence, b: &BinarySequence) -> Result<f64> {
    let n = a.len();
    if b.len() != n + 1 || n == 0 {
        return Err(ZcpError::SeedLengths { a: n, b: b.len() });
    }
    let total: i64 = (1..=n as isize).map(|t| (a.aacf(t) + b.aacf(t)).abs()).sum();
    Ok(2.0 + 4.0 * total as f64 / (2 * n + 1) as f64)
}

/// Bound on any Turyn product of `zcp` with a GCP; independent of the GCP.
pub fn theorem8_bound(zcp: &SequencePair) -> Result<f64> {
    let profile = zcp.profile()?;
    let n = profile.len();
    let z = profile.type2_zcz();
    let total: u64 = (1..=n - z).map(|h| profile.get(h).unsigned_abs()).sum();
    Ok(2.0 + 2.0 * total as f64 / n as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table4Row {
    pub n2: u64,
    pub pmepr_u3: f64,
    pub pmepr_v3: f64,
    pub pmepr_u14: f64,
    pub pmepr_v14: f64,
    pub bound3: f64,
    pub bound14: f64,
}

impl Table4Row {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4}",
            self.n2, self.pmepr_u3, self.pmepr_v3, self.pmepr_u14, self.pmepr_v14, self.bound3, self.bound14
        )
    }
}

/// The two left factors of the table: the length-3 pair and the optimal
/// length-14 pair.
pub fn table4_factors() -> (SequencePair, SequencePair) {
    let p3 = SequencePair::parse(golden::TRIPLE.0, golden::TRIPLE.1).expect("embedded pair");
    let p14 = SequencePair::parse(golden::OPTIMAL_14.0, golden::OPTIMAL_14.1).expect("embedded pair");
    (p3, p14)
}

/// The pair `(u, v)` tabulated for left factor `zcp` and GCP length `n2`.
pub fn table4_product(zcp: &SequencePair, n2: u64) -> Result<SequencePair> {
    let gcp = table_iv_orientation(&gcp_factory(GolayNumber::decompose(n2)?)?);
    turyn_product(zcp, &gcp)
}

/// PMEPR of Turyn products with the factory GCP of each length in `n2s`.
pub fn table4(n2s: &[u64], estimator: PmeprEstimator) -> Result<Vec<Table4Row>> {
    check_oversampling(estimator.oversampling())?;
    let (p3, p14) = table4_factors();
    let bound3 = theorem8_bound(&p3)?;
    let bound14 = theorem8_bound(&p14)?;
    n2s.par_iter()
        .map(|&n2| {
            let r3 = pmepr_pair(&table4_product(&p3, n2)?, estimator)?;
            let r14 = pmepr_pair(&table4_product(&p14, n2)?, estimator)?;
            Ok(Table4Row {
                n2,
                pmepr_u3: r3.pmepr_first,
                pmepr_v3: r3.pmepr_second,
                pmepr_u14: r14.pmepr_first,
                pmepr_v14: r14.pmepr_second,
                bound3,
                bound14,
            })
        })
        .collect()
}

pub fn table4_csv(rows: &[Table4Row]) -> String {
    let mut out = String::from(TABLE4_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}
