//! Seeded randomized self-checks of the structural identities. Each check
//! compares the library against a plain nested-loop evaluation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{self, GolayNumber, TreeAddress};
use crate::error::Result;
use crate::seq::{BinarySequence, SequencePair, Sign};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub example: Option<String>,
}

impl CheckOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    example: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, example: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.example.is_none() {
                self.example = Some(what());
            }
        }
    }

    fn done(self) -> CheckOutcome {
        CheckOutcome { name: self.name, cases: self.cases, failures: self.failures, example: self.example }
    }
}

pub fn random_sequence(rng: &mut impl Rng, len: usize) -> BinarySequence {
    BinarySequence::from_fn(len, |_| if rng.gen() { Sign::Minus } else { Sign::Plus }).expect("len >= 1")
}

/// Nested-loop aperiodic cross-correlation, `tau` may be negative.
pub fn naive_accf(a: &[i32], b: &[i32], tau: isize) -> i64 {
    let mut s = 0i64;
    for (i, &x) in a.iter().enumerate() {
        let j = i as isize + tau;
        if j >= 0 && (j as usize) < b.len() {
            s += i64::from(x * b[j as usize]);
        }
    }
    s
}

fn naive_sums(p: &SequencePair) -> Vec<i64> {
    let (a, b) = (p.first.to_values(), p.second.to_values());
    (0..a.len() as isize).map(|t| naive_accf(&a, &a, t) + naive_accf(&b, &b, t)).collect()
}

fn correlation(rng: &mut ChaCha8Rng, cases: usize) -> Vec<CheckOutcome> {
    let mut packed = Tally::new("packed correlation equals nested loop");
    let mut sym = Tally::new("correlation symmetry");
    let mut rev = Tally::new("joint reversal preserves the profile");
    for _ in 0..cases {
        let n = rng.gen_range(1..=150);
        let m = rng.gen_range(1..=150);
        let a = random_sequence(rng, n);
        let b = random_sequence(rng, m);
        let (av, bv) = (a.to_values(), b.to_values());
        let tau = rng.gen_range(-(m as isize) - 2..=n as isize + 2);
        packed.record(a.accf(&b, tau) == naive_accf(&av, &bv, tau), || format!("{a} {b} tau={tau}"));
        sym.record(a.accf(&b, -tau) == b.accf(&a, tau) && a.aacf(tau) == a.aacf(-tau), || format!("{a} {b} tau={tau}"));
        let c = random_sequence(rng, n);
        let p = SequencePair::new(a.clone(), c.clone());
        let q = SequencePair::new(a.reverse(), c.reverse());
        rev.record(p.profile().ok() == q.profile().ok(), || format!("{p}"));
    }
    vec![packed.done(), sym.done(), rev.done()]
}

fn parity(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("seed sums are odd");
    for _ in 0..cases {
        let n = rng.gen_range(1..=64);
        let a = random_sequence(rng, n);
        let b = random_sequence(rng, n + 1);
        let ok = (1..=n as isize).all(|s| (a.aacf(s) + b.aacf(s)) % 2 != 0);
        t.record(ok, || format!("{a} {b}"));
    }
    t.done()
}

fn recursion(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("recursive pairs scale the seed sums by 2^k");
    for _ in 0..cases {
        let n = rng.gen_range(1..=64);
        let k = rng.gen_range(1..=5u32);
        let r = rng.gen_range(0..1u64 << k);
        let a = random_sequence(rng, n);
        let b = random_sequence(rng, n + 1);
        let pair =
            constructions::construct1(&a, &b, TreeAddress::new(k, r).expect("valid address")).expect("valid seeds");
        let sums = naive_sums(&pair);
        let ok = sums.len() == (n << k) + (1 << (k - 1))
            && (1..sums.len()).all(|s| {
                let want = if s <= n { (a.aacf(s as isize) + b.aacf(s as isize)) << k } else { 0 };
                sums[s] == want
            });
        t.record(ok, || format!("{a} {b} k={k} r={r}"));
    }
    t.done()
}

fn turyn(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("Turyn product ZCZ width N1*N2 - N1 + Z1");
    let golay = GolayNumber::all_up_to(40);
    let mut done = 0;
    while done < cases {
        let n1 = rng.gen_range(2..=16);
        let zcp = SequencePair::new(random_sequence(rng, n1), random_sequence(rng, n1));
        let Ok(profile) = zcp.profile() else { continue };
        if profile.is_gcp() {
            continue;
        }
        let g = golay[rng.gen_range(0..golay.len())];
        let gcp = constructions::gcp_factory(g).expect("factory");
        let Ok(prod) = constructions::turyn_product(&zcp, &gcp) else {
            // Only pairs whose members agree or disagree element-wise with
            // disjoint supports give binary outputs, which is always the case.
            t.record(false, || format!("non-binary product for {zcp}"));
            done += 1;
            continue;
        };
        let z1 = profile.type2_zcz();
        let n2 = g.value() as usize;
        let want = n1 * n2 - n1 + z1;
        let got = prod.profile().map(|p| p.type2_zcz()).unwrap_or(0);
        t.record(got == want, || format!("{zcp} x N2={n2}: Z={got}, want {want}"));
        done += 1;
    }
    t.done()
}

fn gcp_closure(max: u64) -> CheckOutcome {
    let mut t = Tally::new("factory output is complementary");
    for g in GolayNumber::all_up_to(max) {
        let ok = constructions::gcp_factory(g)
            .and_then(|p| p.profile())
            .map(|p| p.is_gcp() && p.len() as u64 == g.value())
            .unwrap_or(false);
        t.record(ok, || format!("N={}", g.value()));
    }
    t.done()
}

fn gcp_derived(max: u64) -> Vec<CheckOutcome> {
    let mut tcp = Tally::new("GCP-seeded pairs are optimal Type-II");
    let mut t1 = Tally::new("GCP-derived Type-I pairs are optimal");
    for g in GolayNumber::all_up_to(max) {
        let n = g.value() as usize;
        if n >= 2 {
            let ok = constructions::tcp1_pair(g)
                .and_then(|p| crate::classify(&p))
                .map(|c| c.length == 2 * n - 1 && c.type2_zcz == n && c.optimal_type2)
                .unwrap_or(false);
            tcp.record(ok, || format!("deletion form N={n}"));
        }
        for lambda in [Sign::Plus, Sign::Minus] {
            let ok = constructions::tcp2_pair(g, lambda)
                .and_then(|p| crate::classify(&p))
                .map(|c| c.length == 2 * n + 1 && c.type2_zcz == n + 1 && c.optimal_type2)
                .unwrap_or(false);
            tcp.record(ok, || format!("prefix form N={n} lambda={lambda}"));
            if n >= 2 {
                let ok = constructions::type1_obzcp_pair(g, lambda)
                    .and_then(|p| crate::classify(&p))
                    .map(|c| c.type1_zcz == n + 1 && c.optimal_type1)
                    .unwrap_or(false);
                t1.record(ok, || format!("Type-I N={n} lambda={lambda}"));
            }
        }
    }
    vec![tcp.done(), t1.done()]
}

/// Runs every check; `cases` scales the randomized ones.
pub fn run_all(seed: u64, cases: usize) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = correlation(&mut rng, cases);
    out.push(parity(&mut rng, cases));
    out.push(recursion(&mut rng, cases));
    out.push(turyn(&mut rng, cases.div_ceil(4)));
    out.push(gcp_closure(1040));
    out.extend(gcp_derived(208));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_at_seed_zero() {
        for c in run_all(0, 60).unwrap() {
            assert!(c.pass(), "{} failed: {:?}", c.name, c.example);
        }
    }

    #[test]
    fn naive_accf_handles_negative_shifts() {
        assert_eq!(naive_accf(&[1, -1], &[1, 1, 1], -1), -1);
        assert_eq!(naive_accf(&[1, -1], &[1, 1, 1], 1), 0);
        assert_eq!(naive_accf(&[1, -1], &[1, 1, 1], 5), 0);
    }
}
