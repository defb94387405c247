mod common;

use common::*;
use proptest::prelude::*;
use zcp_core::{BinarySequence, SequencePair};

fn signs(max: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop::bool::ANY, 1..=max)
        .prop_map(|v| v.into_iter().map(|b| if b { -1 } else { 1 }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn packed_matches_nested_loops(a in signs(200), b in signs(200), frac in -1.2f64..1.2) {
        let (sa, sb) = (seq(&a), seq(&b));
        let tau = (frac * a.len().max(b.len()) as f64) as i64;
        prop_assert_eq!(sa.accf(&sb, tau as isize), cross(&a, &b, tau));
        prop_assert_eq!(sa.aacf(tau as isize), auto(&a, tau));
    }

    #[test]
    fn cross_correlation_symmetry(a in signs(90), b in signs(90), tau in -100isize..100) {
        let (sa, sb) = (seq(&a), seq(&b));
        prop_assert_eq!(sa.accf(&sb, -tau), sb.accf(&sa, tau));
        prop_assert_eq!(sa.aacf(tau), sa.aacf(-tau));
    }

    #[test]
    fn energy_and_zero_tail(a in signs(130)) {
        let s = seq(&a);
        let n = a.len() as isize;
        prop_assert_eq!(s.aacf(0), n as i64);
        prop_assert_eq!(s.aacf(n), 0);
        prop_assert_eq!(s.aacf(-n - 3), 0);
    }

    #[test]
    fn joint_reversal_keeps_profile(a in signs(80), seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let b = random_vals(&mut rng, a.len());
        let p = pair(&a, &b);
        let q = SequencePair::new(p.first.reverse(), p.second.reverse());
        prop_assert_eq!(p.profile().unwrap(), q.profile().unwrap());
        prop_assert_eq!(p.profile().unwrap().sums().to_vec(), sums(&a, &b));
    }

    #[test]
    fn seed_sums_are_odd(a in signs(70), seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let b = random_vals(&mut rng, a.len() + 1);
        for t in 1..=a.len() as i64 {
            prop_assert!((auto(&a, t) + auto(&b, t)).rem_euclid(2) == 1);
        }
    }

    #[test]
    fn text_round_trip(a in signs(150)) {
        let s = seq(&a);
        prop_assert_eq!(s.to_string().parse::<BinarySequence>().unwrap(), s.clone());
        prop_assert_eq!(s.to_values(), a);
    }

    #[test]
    fn widths_match_oracle(a in signs(40), seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let b = random_vals(&mut rng, a.len());
        let p = pair(&a, &b);
        let s = sums(&a, &b);
        prop_assert_eq!(zcp_core::type2_zcz_width(&p).unwrap(), type2_width(&s));
        prop_assert_eq!(zcp_core::type1_zcz_width(&p).unwrap(), type1_width(&s));
    }
}

#[test]
fn structural_operations_match_oracle() {
    let a = vals("+--+-+++-");
    let b = vals("++-");
    let (sa, sb) = (seq(&a), seq(&b));
    let mut rev = a.clone();
    rev.reverse();
    assert_eq!(values(&sa.reverse()), rev);
    assert_eq!(values(&sa.negate()), a.iter().map(|x| -x).collect::<Vec<_>>());
    assert_eq!(values(&sa.concat(&sb)), [a.clone(), b.clone()].concat());
    assert_eq!(values(&sa.kronecker(&sb)), kron(&a, &b));
}
