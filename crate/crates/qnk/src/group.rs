//! Z_2^n as bit vectors: elements, characters, generating sets, and the
//! character-sum eigenvalue evaluation for Cayley graphs of Z_2^n.
//!
//! Bit convention (fixed once, used everywhere): bit 0 of the word is
//! coordinate 1, so the generator e_i is `1 << (i - 1)` and the tail
//! generator flipping coordinates k..n occupies bits (k-1)..(n-1).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest dimension representable as a single machine word.
pub const MAX_DIMENSION: u32 = 64;

fn word_mask(n: u32) -> u64 {
    debug_assert!((1..=MAX_DIMENSION).contains(&n));
    if n == MAX_DIMENSION {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An element of Z_2^n packed into one word; bit i holds coordinate i+1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    bits: u64,
    n: u32,
}

impl GroupElement {
    pub fn new(bits: u64, n: u32) -> Result<Self> {
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(Error::DimensionOutOfRange {
                n,
                max: MAX_DIMENSION,
            });
        }
        if bits & !word_mask(n) != 0 {
            return Err(Error::BitsAboveDimension { bits, n });
        }
        Ok(Self { bits, n })
    }

    /// The identity (all-zero vector).
    pub fn identity(n: u32) -> Result<Self> {
        Self::new(0, n)
    }

    /// The standard basis vector e_i (1-indexed coordinate).
    pub fn standard_basis(i: u32, n: u32) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::WeightOutOfRange { t: i, r: i, n });
        }
        Self::new(1u64 << (i - 1), n)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// Hamming weight (number of one-coordinates).
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Group operation; every element is its own inverse.
    pub fn xor(self, other: Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Self {
            bits: self.bits ^ other.bits,
            n: self.n,
        })
    }
}

impl fmt::Display for GroupElement {
    /// Renders coordinates 1..n left to right, e.g. e_1 in Z_2^3 is "100".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({self})")
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.len() as u32;
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(Error::DimensionOutOfRange {
                n,
                max: MAX_DIMENSION,
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1u64 << i,
                '0' => {}
                other => {
                    return Err(Error::InvalidGeneratingSet(format!(
                        "group element strings are 0/1 only, found {other:?}"
                    )))
                }
            }
        }
        Self::new(bits, n)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Parameters of the enhanced hypercube Q_{n,k}.
///
/// Validation happens here once; the closed-form engines accept any valid
/// (n, k) with no word-size restriction (only explicit group elements and
/// graphs are capped at 64 coordinates).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnhancedParams {
    n: u32,
    k: u32,
}

impl EnhancedParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 2 || k < 1 || k > n - 1 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// Mask of the coordinates k..n flipped by the tail generator.
    /// Only meaningful for word-sized dimensions.
    pub fn tail_mask(self) -> Result<u64> {
        if self.n > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange {
                n: self.n,
                max: MAX_DIMENSION,
            });
        }
        let low = if self.k == 1 {
            0
        } else {
            word_mask(self.k - 1)
        };
        Ok(word_mask(self.n) ^ low)
    }
}

impl fmt::Display for EnhancedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{{{},{}}}", self.n, self.k)
    }
}

/// A duplicate-free, identity-free subset of Z_2^n.
///
/// Every element of Z_2^n is an involution, so any such subset is
/// automatically symmetric and defines an undirected Cayley graph. Arbitrary
/// subsets (not just the enhanced family) are allowed so the oracle can test
/// character-sum spectra on random sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    n: u32,
    elements: Vec<GroupElement>,
}

impl GeneratingSet {
    pub fn new(n: u32, elements: Vec<GroupElement>) -> Result<Self> {
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(Error::DimensionOutOfRange {
                n,
                max: MAX_DIMENSION,
            });
        }
        let mut seen = HashSet::with_capacity(elements.len());
        for el in &elements {
            if el.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: el.n(),
                });
            }
            if el.is_identity() {
                return Err(Error::InvalidGeneratingSet(
                    "the identity element is not allowed".into(),
                ));
            }
            if !seen.insert(el.bits()) {
                return Err(Error::InvalidGeneratingSet(format!(
                    "duplicate element {el}"
                )));
            }
        }
        Ok(Self { n, elements })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }
}

/// The enhanced-hypercube generating set {e_1, ..., e_n, eps_k} where eps_k
/// flips coordinates k..n simultaneously (so it has exactly n-k+1 one-bits).
pub fn build_enhanced_generating_set(params: EnhancedParams) -> Result<GeneratingSet> {
    let n = params.n();
    if n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange {
            n,
            max: MAX_DIMENSION,
        });
    }
    let mut elements = Vec::with_capacity(n as usize + 1);
    for i in 1..=n {
        elements.push(GroupElement::standard_basis(i, n)?);
    }
    elements.push(GroupElement::new(params.tail_mask()?, n)?);
    GeneratingSet::new(n, elements)
}

/// Sign contributed by character chi at element a, on raw bits.
/// This is the hot kernel behind `character_value`; enumeration loops use it
/// directly after checking dimensions once.
#[inline]
pub(crate) fn character_sign(chi_bits: u64, a_bits: u64) -> i64 {
    1 - 2 * ((chi_bits & a_bits).count_ones() as i64 & 1)
}

/// Value of the character indexed by `chi` at element `a`:
/// (-1)^(number of coordinates where both are 1). Always +1 or -1.
pub fn character_value(chi: GroupElement, a: GroupElement) -> Result<i32> {
    if chi.n() != a.n() {
        return Err(Error::DimensionMismatch {
            left: chi.n(),
            right: a.n(),
        });
    }
    Ok(character_sign(chi.bits(), a.bits()) as i32)
}

/// Adjacency eigenvalue of Cay(Z_2^n, S) attached to the character `chi`:
/// the character sum over the generating set. The result lies in
/// [-|S|, |S|] and has the same parity as |S|.
pub fn eigenvalue_by_character(chi: GroupElement, s: &GeneratingSet) -> Result<i64> {
    if chi.n() != s.n() {
        return Err(Error::DimensionMismatch {
            left: chi.n(),
            right: s.n(),
        });
    }
    let chi_bits = chi.bits();
    Ok(s.elements()
        .iter()
        .map(|el| character_sign(chi_bits, el.bits()))
        .sum())
}

/// Closed-form eigenvalue of Q_{n,k} for a character of weight t whose
/// restriction to coordinates k..n has weight r: n - 2t + (-1)^r.
pub fn eigenvalue_by_weight(t: u32, r: u32, params: EnhancedParams) -> Result<i64> {
    let n = params.n();
    if r > t || t > n {
        return Err(Error::WeightOutOfRange { t, r, n });
    }
    let sign = if r % 2 == 1 { -1 } else { 1 };
    Ok(n as i64 - 2 * t as i64 + sign)
}

/// The (t, r) weight pair of a character index: total weight and the weight
/// of its restriction to coordinates k..n.
pub fn weight_pair(chi: GroupElement, params: EnhancedParams) -> Result<(u32, u32)> {
    if chi.n() != params.n() {
        return Err(Error::DimensionMismatch {
            left: chi.n(),
            right: params.n(),
        });
    }
    let t = chi.weight();
    let r = (chi.bits() & params.tail_mask()?).count_ones();
    Ok((t, r))
}
