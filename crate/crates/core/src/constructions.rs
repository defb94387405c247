//! Pair generators: the concatenation tree, the Turyn-style product, a GCP
//! factory for Golay-number lengths, and the GCP-derived optimal odd-length
//! pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZcpError};
use crate::seq::{BinarySequence, SequencePair, Sign};

/// Length-10 base GCP.
pub const GCP_10: (&str, &str) = ("++-+-+--++", "++-+++++--");
/// Length-26 base GCP.
pub const GCP_26: (&str, &str) = ("++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---");

/// Position `(k, r)` in the concatenation tree: depth `k >= 1`, index `r < 2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeAddress {
    depth: u32,
    index: u64,
}

impl TreeAddress {
    pub const MAX_DEPTH: u32 = 40;

    pub fn new(depth: u32, index: u64) -> Result<Self> {
        if depth < 1 {
            return Err(ZcpError::InvalidDepth { depth, min: 1 });
        }
        if depth > Self::MAX_DEPTH {
            return Err(ZcpError::InvalidParameter(format!(
                "tree depth {depth} exceeds the supported maximum {}",
                Self::MAX_DEPTH
            )));
        }
        if index >> depth != 0 {
            return Err(ZcpError::InvalidTreeIndex { depth, index });
        }
        Ok(TreeAddress { depth, index })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Index of the ancestor at `level` (1..=depth).
    fn ancestor(&self, level: u32) -> u64 {
        self.index >> (self.depth - level)
    }
}

/// An integer `2^a * 10^b * 26^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolayNumber {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl GolayNumber {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        let g = GolayNumber { a, b, c };
        g.checked_value().ok_or_else(|| ZcpError::InvalidParameter(format!("2^{a} 10^{b} 26^{c} overflows u64")))?;
        Ok(g)
    }

    fn checked_value(&self) -> Option<u64> {
        let p2 = 2u64.checked_pow(self.a)?;
        let p10 = 10u64.checked_pow(self.b)?;
        let p26 = 26u64.checked_pow(self.c)?;
        p2.checked_mul(p10)?.checked_mul(p26)
    }

    pub fn value(&self) -> u64 {
        self.checked_value().expect("validated on construction")
    }

    /// Factors `n` as `2^a 10^b 26^c`, if possible.
    pub fn decompose(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(ZcpError::NotGolayNumber(n));
        }
        let mut rest = n;
        let mut strip = |p: u64| {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            e
        };
        let fives = strip(5);
        let thirteens = strip(13);
        let twos = strip(2);
        if rest != 1 || twos < fives + thirteens {
            return Err(ZcpError::NotGolayNumber(n));
        }
        Ok(GolayNumber { a: twos - fives - thirteens, b: fives, c: thirteens })
    }

    /// All Golay numbers up to `max`, ascending.
    pub fn all_up_to(max: u64) -> Vec<GolayNumber> {
        let mut out: Vec<GolayNumber> = (1..=max).filter_map(|n| GolayNumber::decompose(n).ok()).collect();
        out.sort_by_key(|g| g.value());
        out
    }
}

impl fmt::Display for GolayNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn check_seeds(a: &BinarySequence, b: &BinarySequence) -> Result<()> {
    if b.len() != a.len() + 1 {
        return Err(ZcpError::SeedLengths { a: a.len(), b: b.len() });
    }
    Ok(())
}

/// One step of the tree: even children are `(c||d, c||-d)`, odd children `(d||c, d||-c)`.
fn tree_step(parent: &SequencePair, odd: bool) -> SequencePair {
    let (x, y) = if odd { (&parent.second, &parent.first) } else { (&parent.first, &parent.second) };
    SequencePair::new(x.concat(y), x.concat_negated(y))
}

/// The pair `(c_r^k, d_r^k)` grown from seeds of lengths `N` and `N+1`.
///
/// Level 1 holds `(a||b, a||-b)` and `(b||a, b||-a)`; each deeper level
/// concatenates the parent at index `r/2`. Output length is `2^k N + 2^(k-1)`.
pub fn construct1(seed_a: &BinarySequence, seed_b: &BinarySequence, addr: TreeAddress) -> Result<SequencePair> {
    check_seeds(seed_a, seed_b)?;
    let root = SequencePair::new(seed_a.clone(), seed_b.clone());
    let mut pair = tree_step(&root, addr.ancestor(1) & 1 == 1);
    for level in 2..=addr.depth() {
        pair = tree_step(&pair, addr.ancestor(level) & 1 == 1);
    }
    Ok(pair)
}

/// Depth-1 pair: length `2N+1`, Type-II ZCZ of width `N+1`.
pub fn theorem1_pair(seed_a: &BinarySequence, seed_b: &BinarySequence, r: u64) -> Result<SequencePair> {
    if r > 1 {
        return Err(ZcpError::InvalidTreeIndex { depth: 1, index: r });
    }
    construct1(seed_a, seed_b, TreeAddress::new(1, r)?)
}

/// The same depth-1 pair read as the `2N-1` family: seeds of lengths `N-1`
/// and `N` give a pair of length `2N-1` with ZCZ width `N`.
pub fn theorem1_variant_2n_minus_1(seed_a: &BinarySequence, seed_b: &BinarySequence) -> Result<SequencePair> {
    theorem1_pair(seed_a, seed_b, 0)
}

/// Depth `k >= 2` pair: length `2^k N + 2^(k-1)`, ZCZ width `2^k N + 2^(k-1) - N`.
pub fn theorem2_pair(seed_a: &BinarySequence, seed_b: &BinarySequence, k: u32, r: u64) -> Result<SequencePair> {
    if k < 2 {
        return Err(ZcpError::InvalidDepth { depth: k, min: 2 });
    }
    construct1(seed_a, seed_b, TreeAddress::new(k, r)?)
}

/// Turyn-style product of a Type-II ZCP `(c, d)` of length `N1` with a pair
/// `(e, f)` of length `N2`:
///
/// `u = e (x) (c+d)/2 + rev(f) (x) (d-c)/2`, `v = f (x) (c+d)/2 - rev(e) (x) (d-c)/2`.
///
/// The half-sum and half-difference vectors are ternary and have disjoint
/// supports, so every output element is a single signed product.
pub fn turyn_product(zcp: &SequencePair, other: &SequencePair) -> Result<SequencePair> {
    let n1 = zcp.common_len()?;
    let n2 = other.common_len()?;
    let c = zcp.first.to_values();
    let d = zcp.second.to_values();
    let half_sum: Vec<i32> = c.iter().zip(&d).map(|(x, y)| (x + y) / 2).collect();
    let half_diff: Vec<i32> = c.iter().zip(&d).map(|(x, y)| (y - x) / 2).collect();
    let e = other.first.to_values();
    let f = other.second.to_values();

    let mut u = Vec::with_capacity(n1 * n2);
    let mut v = Vec::with_capacity(n1 * n2);
    for i in 0..n2 {
        let (ei, fi) = (e[i], f[i]);
        let (er, fr) = (e[n2 - 1 - i], f[n2 - 1 - i]);
        for j in 0..n1 {
            u.push(ei * half_sum[j] + fr * half_diff[j]);
            v.push(fi * half_sum[j] - er * half_diff[j]);
        }
    }
    Ok(SequencePair::new(BinarySequence::from_values(&u)?, BinarySequence::from_values(&v)?))
}

/// Golay doubling `(x||y, x||-y)`; preserves complementarity.
pub fn golay_double(p: &SequencePair) -> Result<SequencePair> {
    p.common_len()?;
    Ok(tree_step(p, false))
}

fn base_pair(strs: (&str, &str)) -> SequencePair {
    SequencePair::parse(strs.0, strs.1).expect("embedded base pair")
}

/// A GCP of length `2^a 10^b 26^c`.
///
/// Starting from `((+), (+))`, the length-10 and length-26 base pairs are
/// folded in with [`turyn_product`] (all tens, then all twenty-sixes), and
/// `a` doublings are applied last. With this order the outputs for lengths
/// 2, 4, 8, 10, 16, 20 and 26 coincide with the classic tabulated pairs.
pub fn gcp_factory(n: GolayNumber) -> Result<SequencePair> {
    let one = BinarySequence::single(Sign::Plus);
    let mut pair = SequencePair::new(one.clone(), one);
    let ten = base_pair(GCP_10);
    let twenty_six = base_pair(GCP_26);
    for _ in 0..n.b {
        pair = turyn_product(&pair, &ten)?;
    }
    for _ in 0..n.c {
        pair = turyn_product(&pair, &twenty_six)?;
    }
    for _ in 0..n.a {
        pair = golay_double(&pair)?;
    }
    debug_assert_eq!(pair.first.len() as u64, n.value());
    Ok(pair)
}

/// The GCP `(e, -rev(f))`: the member orientation under which Turyn products
/// of the factory output match the published length-30 example and PMEPR table.
pub fn table_iv_orientation(gcp: &SequencePair) -> SequencePair {
    SequencePair::new(gcp.first.clone(), gcp.second.reverse().negate())
}

/// Seeds `(V(x, 0), y)` from a GCP `(x, y)` of length `N >= 2`.
pub fn tcp1_seeds(n: GolayNumber) -> Result<(BinarySequence, BinarySequence)> {
    if n.value() < 2 {
        return Err(ZcpError::WouldBeEmpty);
    }
    let gcp = gcp_factory(n)?;
    Ok((gcp.first.delete_at(0)?, gcp.second))
}

/// Optimal Type-II OB-ZCP of length `2N-1` with ZCZ width `N`.
pub fn tcp1_pair(n: GolayNumber) -> Result<SequencePair> {
    let (a, b) = tcp1_seeds(n)?;
    theorem1_pair(&a, &b, 0)
}

/// Seeds `(x, lambda || y)`.
pub fn tcp2_seeds(n: GolayNumber, lambda: Sign) -> Result<(BinarySequence, BinarySequence)> {
    let gcp = gcp_factory(n)?;
    Ok((gcp.first, gcp.second.prepend(lambda)))
}

/// Optimal Type-II OB-ZCP of length `2N+1` with ZCZ width `N+1`.
pub fn tcp2_pair(n: GolayNumber, lambda: Sign) -> Result<SequencePair> {
    let (a, b) = tcp2_seeds(n, lambda)?;
    theorem1_pair(&a, &b, 0)
}

/// Optimal Type-I OB-ZCP of length `2N+1`: `(x || y || lambda, x || -(y || -lambda))`.
pub fn type1_obzcp_pair(n: GolayNumber, lambda: Sign) -> Result<SequencePair> {
    let gcp = gcp_factory(n)?;
    let b = gcp.second.append(lambda);
    let b_hat = gcp.second.append(-lambda);
    Ok(SequencePair::new(gcp.first.concat(&b), gcp.first.concat_negated(&b_hat)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinarySequence {
        x.parse().unwrap()
    }

    #[test]
    fn golay_number_decomposition() {
        assert_eq!(GolayNumber::decompose(1).unwrap(), GolayNumber { a: 0, b: 0, c: 0 });
        assert_eq!(GolayNumber::decompose(20).unwrap(), GolayNumber { a: 1, b: 1, c: 0 });
        assert_eq!(GolayNumber::decompose(208).unwrap(), GolayNumber { a: 3, b: 0, c: 1 });
        assert_eq!(GolayNumber::decompose(260).unwrap(), GolayNumber { a: 0, b: 1, c: 1 });
        for bad in [0u64, 3, 5, 7, 13, 50, 65, 130] {
            assert_eq!(GolayNumber::decompose(bad), Err(ZcpError::NotGolayNumber(bad)));
        }
        assert_eq!(ZcpError::NotGolayNumber(7).to_string(), "7 is not of the form 2^a 10^b 26^c");
        let listed: Vec<u64> = GolayNumber::all_up_to(100).iter().map(|g| g.value()).collect();
        assert_eq!(listed, vec![1, 2, 4, 8, 10, 16, 20, 26, 32, 40, 52, 64, 80, 100]);
    }

    #[test]
    fn tree_address_validation() {
        assert!(TreeAddress::new(0, 0).is_err());
        assert!(TreeAddress::new(2, 4).is_err());
        assert!(TreeAddress::new(2, 3).is_ok());
    }

    #[test]
    fn construct1_first_levels() {
        let a = s("++");
        let b = s("+++");
        let p = construct1(&a, &b, TreeAddress::new(1, 0).unwrap()).unwrap();
        assert_eq!((p.first.to_string(), p.second.to_string()), ("+++++".into(), "++---".into()));
        let p = construct1(&a, &b, TreeAddress::new(2, 0).unwrap()).unwrap();
        assert_eq!((p.first.to_string(), p.second.to_string()), ("+++++++---".into(), "+++++--+++".into()));
        let p = construct1(&a, &b, TreeAddress::new(3, 0).unwrap()).unwrap();
        assert_eq!(p.first.to_string(), "+++++++---+++++--+++");
        assert_eq!(p.second.to_string(), "+++++++--------++---");
        let p = construct1(&a, &b, TreeAddress::new(1, 1).unwrap()).unwrap();
        assert_eq!((p.first.to_string(), p.second.to_string()), ("+++++".into(), "+++--".into()));
    }

    #[test]
    fn seed_length_check() {
        assert!(matches!(theorem1_pair(&s("++"), &s("++"), 0), Err(ZcpError::SeedLengths { a: 2, b: 2 })));
        assert!(matches!(theorem2_pair(&s("+"), &s("++"), 1, 0), Err(ZcpError::InvalidDepth { .. })));
        assert!(theorem1_pair(&s("+"), &s("++"), 2).is_err());
    }

    #[test]
    fn small_factory_outputs() {
        let g2 = gcp_factory(GolayNumber::decompose(2).unwrap()).unwrap();
        assert_eq!((g2.first.to_string(), g2.second.to_string()), ("++".into(), "+-".into()));
        let g1 = gcp_factory(GolayNumber::decompose(1).unwrap()).unwrap();
        assert_eq!(g1.first.len(), 1);
    }

    #[test]
    fn tcp1_rejects_length_one() {
        assert!(tcp1_pair(GolayNumber::decompose(1).unwrap()).is_err());
    }

    #[test]
    fn turyn_with_trivial_gcp_swaps_members() {
        let zcp = SequencePair::parse("+++", "+--").unwrap();
        let one = SequencePair::parse("+", "+").unwrap();
        let p = turyn_product(&zcp, &one).unwrap();
        assert_eq!(p.first, s("+--"));
        assert_eq!(p.second, s("+++"));
    }

    #[test]
    fn turyn_rejects_unequal_members() {
        let bad = SequencePair::parse("++", "+++").unwrap();
        let ok = SequencePair::parse("++", "+-").unwrap();
        assert!(turyn_product(&bad, &ok).is_err());
        assert!(turyn_product(&ok, &bad).is_err());
    }
}
