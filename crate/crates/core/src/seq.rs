//! Binary sequences over {+1, -1}, pairs of them, and aperiodic correlation.
//!
//! A [`BinarySequence`] packs one sign bit per element into `u64` words
//! (bit set means `-1`). Correlations are computed word-parallel: for two
//! aligned windows the products `c_k * d_{k+tau}` are `+1` where the bits agree
//! and `-1` where they differ, so a window contributes `width - 2 * popcount(x ^ y)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, ZcpError};

const WORD: usize = 64;

/// A single element value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    fn from_bit(bit: bool) -> Sign {
        if bit {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    // Sign bits multiply by xor.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bit(self.is_minus() ^ rhs.is_minus())
    }
}

impl FromStr for Sign {
    type Err = ZcpError;
    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(ZcpError::InvalidParameter(format!("sign must be one of +, -, +1, -1; got {other:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Append-only bit buffer used to assemble packed sequences.
#[derive(Debug, Default)]
struct BitBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitBuilder {
    fn with_capacity(bits: usize) -> Self {
        BitBuilder { words: Vec::with_capacity(bits.div_ceil(WORD)), len: 0 }
    }

    fn push(&mut self, bit: bool) {
        let off = self.len % WORD;
        if off == 0 {
            self.words.push(0);
        }
        if bit {
            *self.words.last_mut().unwrap() |= 1u64 << off;
        }
        self.len += 1;
    }

    /// Appends all of `seq`, optionally negated.
    fn extend(&mut self, seq: &BinarySequence, invert: bool) {
        let flip = if invert { u64::MAX } else { 0 };
        let off = self.len % WORD;
        let mut remaining = seq.len;
        for &w in &seq.words {
            let take = remaining.min(WORD);
            let mut w = w ^ flip;
            if take < WORD {
                w &= (1u64 << take) - 1;
            }
            if off == 0 {
                self.words.push(w);
            } else {
                *self.words.last_mut().unwrap() |= w << off;
                if take > WORD - off {
                    self.words.push(w >> (WORD - off));
                }
            }
            self.len += take;
            remaining -= take;
        }
        self.words.truncate(self.len.div_ceil(WORD));
    }

    fn finish(self) -> BinarySequence {
        debug_assert!(self.len > 0);
        BinarySequence { words: self.words, len: self.len }
    }
}

/// A nonempty sequence over {+1, -1}. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    // Invariant: bits at positions >= len in the last word are zero.
    words: Vec<u64>,
    len: usize,
}

impl BinarySequence {
    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> Sign) -> Result<Self> {
        if len == 0 {
            return Err(ZcpError::EmptySequence);
        }
        let mut b = BitBuilder::with_capacity(len);
        for i in 0..len {
            b.push(f(i).is_minus());
        }
        Ok(b.finish())
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        Self::from_fn(signs.len(), |i| signs[i])
    }

    /// Builds from integer values, rejecting anything other than +1 and -1.
    pub fn from_values(values: &[i32]) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if Sign::from_value(v).is_none() {
                return Err(ZcpError::NonBinaryOutput { position: i, value: v });
            }
        }
        Self::from_fn(values.len(), |i| Sign::from_value(values[i]).unwrap())
    }

    pub fn constant(len: usize, sign: Sign) -> Result<Self> {
        Self::from_fn(len, |_| sign)
    }

    pub fn single(sign: Sign) -> Self {
        Self::constant(1, sign).expect("length 1")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    fn bit(&self, i: usize) -> bool {
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn sign(&self, i: usize) -> Sign {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        Sign::from_bit(self.bit(i))
    }

    /// Element `i` as +1 or -1.
    pub fn get(&self, i: usize) -> i32 {
        self.sign(i).value()
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        (0..self.len).map(move |i| if self.bit(i) { -1 } else { 1 })
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(move |i| Sign::from_bit(self.bit(i)))
    }

    pub fn to_values(&self) -> Vec<i32> {
        self.iter().collect()
    }

    /// 64 elements starting at `start`, zero-padded past the end.
    #[inline]
    fn window(&self, start: usize) -> u64 {
        let w = start / WORD;
        let off = start % WORD;
        let lo = self.words.get(w).copied().unwrap_or(0);
        if off == 0 {
            lo
        } else {
            let hi = self.words.get(w + 1).copied().unwrap_or(0);
            (lo >> off) | (hi << (WORD - off))
        }
    }

    /// `sum_k self[k] * other[k + shift]` over every k where both indices exist.
    fn shifted_dot(&self, other: &BinarySequence, shift: usize) -> i64 {
        if shift >= other.len {
            return 0;
        }
        let overlap = self.len.min(other.len - shift);
        let mut mismatches = 0u64;
        let mut k = 0;
        while k < overlap {
            let width = (overlap - k).min(WORD);
            let mut x = self.window(k) ^ other.window(k + shift);
            if width < WORD {
                x &= (1u64 << width) - 1;
            }
            mismatches += u64::from(x.count_ones());
            k += WORD;
        }
        overlap as i64 - 2 * mismatches as i64
    }

    /// Aperiodic cross-correlation `rho_{c,d}(tau)`, defined for every integer shift.
    pub fn accf(&self, other: &BinarySequence, tau: isize) -> i64 {
        if tau >= 0 {
            self.shifted_dot(other, tau as usize)
        } else {
            other.shifted_dot(self, tau.unsigned_abs())
        }
    }

    /// Aperiodic autocorrelation `rho_c(tau)`; zero for `|tau| >= N`.
    pub fn aacf(&self, tau: isize) -> i64 {
        self.shifted_dot(self, tau.unsigned_abs())
    }

    pub fn reverse(&self) -> BinarySequence {
        let n = self.len;
        let mut b = BitBuilder::with_capacity(n);
        for i in (0..n).rev() {
            b.push(self.bit(i));
        }
        b.finish()
    }

    pub fn negate(&self) -> BinarySequence {
        let mut b = BitBuilder::with_capacity(self.len);
        b.extend(self, true);
        b.finish()
    }

    /// Horizontal concatenation `self || other`.
    pub fn concat(&self, other: &BinarySequence) -> BinarySequence {
        let mut b = BitBuilder::with_capacity(self.len + other.len);
        b.extend(self, false);
        b.extend(other, false);
        b.finish()
    }

    /// `self || -other`.
    pub fn concat_negated(&self, other: &BinarySequence) -> BinarySequence {
        let mut b = BitBuilder::with_capacity(self.len + other.len);
        b.extend(self, false);
        b.extend(other, true);
        b.finish()
    }

    /// Kronecker product: element `i * N2 + j` is `self[i] * other[j]`.
    pub fn kronecker(&self, other: &BinarySequence) -> BinarySequence {
        let mut b = BitBuilder::with_capacity(self.len * other.len);
        for i in 0..self.len {
            b.extend(other, self.bit(i));
        }
        b.finish()
    }

    /// Removes element `r` (the deletion function `V(c, r)`).
    pub fn delete_at(&self, r: usize) -> Result<BinarySequence> {
        if r >= self.len {
            return Err(ZcpError::IndexOutOfRange { index: r, len: self.len });
        }
        if self.len == 1 {
            return Err(ZcpError::WouldBeEmpty);
        }
        let mut b = BitBuilder::with_capacity(self.len - 1);
        for i in (0..self.len).filter(|&i| i != r) {
            b.push(self.bit(i));
        }
        Ok(b.finish())
    }

    pub fn prepend(&self, sign: Sign) -> BinarySequence {
        BinarySequence::single(sign).concat(self)
    }

    pub fn append(&self, sign: Sign) -> BinarySequence {
        self.concat(&BinarySequence::single(sign))
    }

    /// Builds from packed little-endian bits (bit set = -1), `len <= 64`.
    pub(crate) fn from_mask(mask: u64, len: usize) -> Result<Self> {
        if len > WORD {
            return Err(ZcpError::InvalidParameter(format!("mask encoding supports at most {WORD} elements")));
        }
        Self::from_fn(len, |i| Sign::from_bit((mask >> i) & 1 == 1))
    }
}

impl Ord for BinarySequence {
    /// Lexicographic with `+` before `-`; a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        for i in 0..common {
            match self.bit(i).cmp(&other.bit(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BinarySequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for BinarySequence {
    type Err = ZcpError;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = BitBuilder::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '+' => b.push(false),
                '-' => b.push(true),
                ch => return Err(ZcpError::InvalidCharacter { ch, position }),
            }
        }
        if b.len == 0 {
            return Err(ZcpError::EmptySequence);
        }
        Ok(b.finish())
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().map(Sign::as_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of sequences. Lengths may differ (seed pairs do).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SequencePair {
    pub first: BinarySequence,
    pub second: BinarySequence,
}

impl SequencePair {
    pub fn new(first: BinarySequence, second: BinarySequence) -> Self {
        SequencePair { first, second }
    }

    pub fn parse(first: &str, second: &str) -> Result<Self> {
        Ok(SequencePair::new(first.parse()?, second.parse()?))
    }

    /// The common length, or an error if the members differ.
    pub fn common_len(&self) -> Result<usize> {
        if self.first.len() != self.second.len() {
            return Err(ZcpError::LengthMismatch { first: self.first.len(), second: self.second.len() });
        }
        Ok(self.first.len())
    }

    /// `rho_first(tau) + rho_second(tau)` for `tau = 0..N-1`.
    pub fn profile(&self) -> Result<CorrelationProfile> {
        let n = self.common_len()?;
        let sums = (0..n as isize).map(|t| self.first.aacf(t) + self.second.aacf(t)).collect();
        Ok(CorrelationProfile { sums })
    }

    /// Aperiodic autocorrelation sum at a single shift; defined for unequal lengths too.
    pub fn aacs(&self, tau: isize) -> i64 {
        self.first.aacf(tau) + self.second.aacf(tau)
    }

    pub fn swapped(&self) -> SequencePair {
        SequencePair::new(self.second.clone(), self.first.clone())
    }
}

impl fmt::Display for SequencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.first, self.second)
    }
}

/// Signed autocorrelation sums of an equal-length pair, indexed by shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorrelationProfile {
    sums: Vec<i64>,
}

impl CorrelationProfile {
    pub fn from_sums(sums: Vec<i64>) -> Result<Self> {
        if sums.is_empty() {
            return Err(ZcpError::EmptySequence);
        }
        Ok(CorrelationProfile { sums })
    }

    /// Pair length N.
    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    pub fn get(&self, tau: usize) -> i64 {
        self.sums.get(tau).copied().unwrap_or(0)
    }

    pub fn magnitudes(&self) -> Vec<u64> {
        self.sums.iter().map(|s| s.unsigned_abs()).collect()
    }

    /// Compact rendering of the magnitudes with runs collapsed, e.g. `(28,4,0_12)`.
    pub fn compact(&self) -> String {
        let mags = self.magnitudes();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < mags.len() {
            let mut j = i + 1;
            while j < mags.len() && mags[j] == mags[i] {
                j += 1;
            }
            if j - i > 1 {
                parts.push(format!("{}_{}", mags[i], j - i));
            } else {
                parts.push(mags[i].to_string());
            }
            i = j;
        }
        format!("({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BinarySequence {
        x.parse().unwrap()
    }

    #[test]
    fn aacf_small_cases() {
        assert_eq!(s("+++").aacf(1), 2);
        assert_eq!(s("+--").aacf(2), -1);
        assert_eq!(s("+--").aacf(-2), -1);
        assert_eq!(s("+--").aacf(3), 0);
        assert_eq!(s("+--").aacf(0), 3);
    }

    #[test]
    fn accf_both_branches() {
        let c = s("++");
        let d = s("+-");
        assert_eq!(c.accf(&d, 1), -1);
        assert_eq!(c.accf(&d, -1), 1);
        assert_eq!(c.accf(&d, 2), 0);
        assert_eq!(c.accf(&d, -7), 0);
    }

    #[test]
    fn structural_ops() {
        assert_eq!(s("+--").reverse(), s("--+"));
        assert_eq!(s("+-").kronecker(&s("++")), s("++--"));
        assert_eq!(s("++").concat(&s("+++")), s("+++++"));
        assert_eq!(s("+-+").negate(), s("-+-"));
        assert_eq!(s("++").concat_negated(&s("+-")), s("++-+"));
        assert_eq!(s("+-").prepend(Sign::Minus), s("-+-"));
        assert_eq!(s("+-").append(Sign::Minus), s("+--"));
    }

    #[test]
    fn delete_at_branches() {
        assert_eq!(s("++-").delete_at(0).unwrap(), s("+-"));
        assert_eq!(s("+-+").delete_at(2).unwrap(), s("+-"));
        assert_eq!(s("+-++").delete_at(1).unwrap(), s("+++"));
        assert_eq!(s("+-").delete_at(2), Err(ZcpError::IndexOutOfRange { index: 2, len: 2 }));
        assert_eq!(s("-").delete_at(0), Err(ZcpError::WouldBeEmpty));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!("+-x".parse::<BinarySequence>(), Err(ZcpError::InvalidCharacter { ch: 'x', position: 2 }));
        assert_eq!("".parse::<BinarySequence>(), Err(ZcpError::EmptySequence));
        assert!("+ -".parse::<BinarySequence>().is_err());
    }

    #[test]
    fn profile_requires_equal_lengths() {
        let p = SequencePair::parse("++", "+++").unwrap();
        let err = p.profile().unwrap_err();
        assert!(err.to_string().starts_with("unequal lengths; profile undefined"));
    }

    #[test]
    fn negated_partner_doubles_autocorrelation() {
        let c = s("++-+---+-");
        let p = SequencePair::new(c.clone(), c.negate());
        let prof = p.profile().unwrap();
        for t in 0..c.len() {
            assert_eq!(prof.get(t), 2 * c.aacf(t as isize));
        }
    }

    #[test]
    fn word_boundaries() {
        // Lengths straddling one and two words exercise the window shifts.
        for n in [63usize, 64, 65, 127, 128, 129, 200] {
            let c =
                BinarySequence::from_fn(n, |i| if (i * 7 + i / 3) % 5 < 2 { Sign::Minus } else { Sign::Plus }).unwrap();
            let vals = c.to_values();
            for t in [0usize, 1, 31, 63, 64, 65, n - 1].into_iter().filter(|&t| t < n) {
                let naive: i64 = (0..n - t).map(|k| (vals[k] * vals[k + t]) as i64).sum();
                assert_eq!(c.aacf(t as isize), naive, "n={n} t={t}");
            }
            assert_eq!(c.reverse().reverse(), c);
            assert_eq!(c.negate().negate(), c);
            let cc = c.concat(&c.negate());
            assert_eq!(cc.len(), 2 * n);
            assert_eq!(cc.get(n), -c.get(0));
        }
    }

    #[test]
    fn ordering_plus_before_minus() {
        assert!(s("+-") < s("-+"));
        assert!(s("++") < s("+-"));
        assert!(s("+") < s("+-"));
    }

    #[test]
    fn compact_profile() {
        let p = SequencePair::parse("---++", "--+--").unwrap().profile().unwrap();
        assert_eq!(p.compact(), "(10,2_2,0_2)");
    }
}
