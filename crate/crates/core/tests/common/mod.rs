//! Reference evaluations that share no code with the library: plain
//! nested loops over `i32` vectors and direct trigonometric sums.
#![allow(dead_code)]

use rand::Rng;
use zcp_core::{BinarySequence, SequencePair};

pub fn vals(s: &str) -> Vec<i32> {
    s.chars()
        .map(|c| match c {
            '+' => 1,
            '-' => -1,
            _ => panic!("bad symbol {c:?}"),
        })
        .collect()
}

pub fn to_str(v: &[i32]) -> String {
    v.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect()
}

pub fn random_vals(rng: &mut impl Rng, n: usize) -> Vec<i32> {
    (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect()
}

pub fn seq(v: &[i32]) -> BinarySequence {
    to_str(v).parse().unwrap()
}

pub fn pair(a: &[i32], b: &[i32]) -> SequencePair {
    SequencePair::new(seq(a), seq(b))
}

pub fn values(s: &BinarySequence) -> Vec<i32> {
    vals(&s.to_string())
}

/// `sum_i a_i b_{i+tau}` over valid indices.
pub fn cross(a: &[i32], b: &[i32], tau: i64) -> i64 {
    let mut s = 0;
    for i in 0..a.len() as i64 {
        let j = i + tau;
        if j >= 0 && j < b.len() as i64 {
            s += (a[i as usize] * b[j as usize]) as i64;
        }
    }
    s
}

pub fn auto(a: &[i32], tau: i64) -> i64 {
    cross(a, a, tau)
}

/// `rho_a(t) + rho_b(t)` for `t = 0..len`.
pub fn sums(a: &[i32], b: &[i32]) -> Vec<i64> {
    (0..a.len() as i64).map(|t| auto(a, t) + auto(b, t)).collect()
}

pub fn pair_sums(p: &SequencePair) -> Vec<i64> {
    sums(&values(&p.first), &values(&p.second))
}

/// Type-II width: `N` minus the largest nonzero shift.
pub fn type2_width(s: &[i64]) -> usize {
    (1..s.len()).rev().find(|&t| s[t] != 0).map_or(s.len(), |t| s.len() - t)
}

pub fn type1_width(s: &[i64]) -> usize {
    (1..s.len()).find(|&t| s[t] != 0).unwrap_or(s.len())
}

pub fn kron(outer: &[i32], inner: &[i32]) -> Vec<i32> {
    outer.iter().flat_map(|&o| inner.iter().map(move |&x| o * x)).collect()
}

pub fn golay_numbers(max: u64) -> Vec<u64> {
    (1..=max)
        .filter(|&n| {
            let mut m = n;
            let mut twos = 0;
            while m % 2 == 0 {
                m /= 2;
                twos += 1;
            }
            let mut odd = 0;
            for p in [5, 13] {
                while m % p == 0 {
                    m /= p;
                    odd += 1;
                }
            }
            m == 1 && twos >= odd
        })
        .collect()
}

/// `|S(t)|^2` for `S(t) = sum_k c_k exp(2 pi j k t)`.
pub fn envelope(c: &[i32], t: f64) -> f64 {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (k, &x) in c.iter().enumerate() {
        let ph = 2.0 * std::f64::consts::PI * k as f64 * t;
        re += x as f64 * ph.cos();
        im += x as f64 * ph.sin();
    }
    re * re + im * im
}

/// Grid maximum of the envelope over `m` equispaced points, divided by `L`.
pub fn grid_pmepr(c: &[i32], m: usize) -> f64 {
    (0..m).map(|i| envelope(c, i as f64 / m as f64)).fold(0.0, f64::max) / c.len() as f64
}
