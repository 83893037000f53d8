//! Node labels, edges and adjacency of the locally twisted cube `LTQ_n`.
//!
//! A node of `LTQ_n` is an `n`-bit string `b_{n-1} … b_0`. `LTQ_2` is the
//! 4-cycle `00 - 01 - 11 - 10`. For `n >= 3`, `LTQ_n` is two copies of
//! `LTQ_{n-1}`, one with every label prefixed by `0` and one prefixed by `1`,
//! plus one cross edge per node joining `0 b_{n-2} … b_0` to
//! `1 (b_{n-2} ^ b_0) b_{n-3} … b_0`.
//!
//! Unrolling the recursion gives a closed form: the neighbors of `x` are
//! `x` with bit 0 flipped, `x` with bit 1 flipped, and for every `k >= 2`,
//! `x` with bit `k` flipped and bit `k-1` xor-ed with `b_0`. That rule backs
//! [`neighbors`] and [`is_adjacent`]; [`neighbors_recursive`] follows the
//! recursive construction literally and is kept as an oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: u32 = 30;
/// Smallest dimension for which `LTQ_n` is defined.
pub const MIN_DIM: u32 = 2;

pub(crate) fn check_dim(dim: u32, min: u32) -> Result<()> {
    if dim < min || dim > MAX_DIM {
        return Err(Error::Dimension {
            dim,
            min,
            max: MAX_DIM,
        });
    }
    Ok(())
}

/// An `n`-bit node label. `value` holds `b_{n-1} … b_0` with `b_{n-1}` as the
/// most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeLabel {
    dim: u32,
    value: u32,
}

impl NodeLabel {
    pub fn new(dim: u32, value: u32) -> Result<Self> {
        check_dim(dim, MIN_DIM)?;
        if u64::from(value) >= 1u64 << dim {
            return Err(Error::LabelRange { dim, value });
        }
        Ok(Self { dim, value })
    }

    /// Callers guarantee `value < 2^dim` and a supported `dim`.
    pub(crate) const fn from_raw(dim: u32, value: u32) -> Self {
        Self { dim, value }
    }

    /// Parses a binary string of exactly `dim` characters, most significant
    /// bit first.
    pub fn from_bits(dim: u32, bits: &str) -> Result<Self> {
        check_dim(dim, MIN_DIM)?;
        if bits.len() != dim as usize {
            return Err(Error::Format {
                input: bits.to_string(),
                reason: format!("expected {} bits, found {}", dim, bits.len()),
            });
        }
        let mut value = 0u32;
        for c in bits.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                other => {
                    return Err(Error::Format {
                        input: bits.to_string(),
                        reason: format!("illegal character {other:?}"),
                    })
                }
            };
            value = (value << 1) | bit;
        }
        Ok(Self { dim, value })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Bit `i`, where bit 0 is the least significant.
    pub fn bit(&self, i: u32) -> u32 {
        (self.value >> i) & 1
    }

    /// Binary rendering, exactly `dim` characters.
    pub fn to_bits(&self) -> String {
        format!("{:0width$b}", self.value, width = self.dim as usize)
    }

    /// Adds a new most significant bit, mapping a node of `LTQ_n` into the
    /// `prefix`-subcube of `LTQ_{n+1}`.
    pub fn prefixed(&self, prefix: u32) -> Result<Self> {
        Self::new(self.dim + 1, ((prefix & 1) << self.dim) | self.value)
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.dim as usize)
    }
}

impl FromStr for NodeLabel {
    type Err = Error;

    /// Parses a label whose dimension is its length.
    fn from_str(s: &str) -> Result<Self> {
        let dim = u32::try_from(s.len()).unwrap_or(u32::MAX);
        Self::from_bits(dim, s)
    }
}

impl Serialize for NodeLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Builds a label from a binary string. Same as [`NodeLabel::from_bits`].
pub fn make_label(dim: u32, bits: &str) -> Result<NodeLabel> {
    NodeLabel::from_bits(dim, bits)
}

/// `pattern` repeated `times` times: `("10", 2)` gives `"1010"`.
pub fn repeat_bits(pattern: &str, times: usize) -> String {
    pattern.repeat(times)
}

fn same_dim(x: &NodeLabel, y: &NodeLabel) -> Result<()> {
    if x.dim != y.dim {
        return Err(Error::DimensionMismatch {
            left: x.dim,
            right: y.dim,
        });
    }
    Ok(())
}

/// The endpoint of the cross edge at `x` joining the two `(n-1)`-subcubes.
pub fn cross_neighbor(x: NodeLabel) -> Result<NodeLabel> {
    if x.dim < 3 {
        return Err(Error::Dimension {
            dim: x.dim,
            min: 3,
            max: MAX_DIM,
        });
    }
    Ok(NodeLabel::from_raw(x.dim, twist_flip(x.value, x.dim - 1)))
}

/// Flips bit `k` and, for `k >= 2`, xors `b_0` into bit `k - 1`.
#[inline]
fn twist_flip(value: u32, k: u32) -> u32 {
    if k < 2 {
        value ^ (1 << k)
    } else {
        value ^ (1 << k) ^ ((value & 1) << (k - 1))
    }
}

/// The `dim` neighbors of `x`, ordered by the bit position that flips
/// (bit 0 first).
pub fn neighbors(x: NodeLabel) -> Vec<NodeLabel> {
    neighbor_values(x.value, x.dim)
        .map(|v| NodeLabel::from_raw(x.dim, v))
        .collect()
}

pub(crate) fn neighbor_values(value: u32, dim: u32) -> impl Iterator<Item = u32> {
    (0..dim).map(move |k| twist_flip(value, k))
}

/// Neighbors of `x` computed by following the recursive construction on
/// binary strings. Slow; used to cross-check [`neighbors`].
pub fn neighbors_recursive(x: NodeLabel) -> Vec<NodeLabel> {
    let bits: Vec<u8> = x.to_bits().bytes().map(|b| b - b'0').collect();
    let mut out: Vec<NodeLabel> = recursive_neighbor_strings(&bits)
        .into_iter()
        .map(|s| {
            let value = s.iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
            NodeLabel::from_raw(x.dim, value)
        })
        .collect();
    out.sort();
    out
}

// `bits` is MSB first.
fn recursive_neighbor_strings(bits: &[u8]) -> Vec<Vec<u8>> {
    let n = bits.len();
    if n == 2 {
        const LTQ2: [([u8; 2], [u8; 2]); 4] = [
            ([0, 0], [0, 1]),
            ([0, 0], [1, 0]),
            ([0, 1], [1, 1]),
            ([1, 0], [1, 1]),
        ];
        return LTQ2
            .iter()
            .filter_map(|(a, b)| {
                if a[..] == *bits {
                    Some(b.to_vec())
                } else if b[..] == *bits {
                    Some(a.to_vec())
                } else {
                    None
                }
            })
            .collect();
    }

    // Neighbors inside the copy of LTQ_{n-1} selected by the leading bit.
    let mut out: Vec<Vec<u8>> = recursive_neighbor_strings(&bits[1..])
        .into_iter()
        .map(|suffix| {
            let mut s = Vec::with_capacity(n);
            s.push(bits[0]);
            s.extend(suffix);
            s
        })
        .collect();

    // 0 b_{n-2} ... b_0 is joined to 1 (b_{n-2} ^ b_0) b_{n-3} ... b_0.
    let cross_of_zero = |zero: &[u8]| -> Vec<u8> {
        let mut s = zero.to_vec();
        s[0] = 1;
        s[1] = zero[1] ^ zero[n - 1];
        s
    };
    if bits[0] == 0 {
        out.push(cross_of_zero(bits));
    } else {
        // The rule keeps b_{n-3} ... b_0, so only two 0-side nodes can map here.
        for b in [0u8, 1] {
            let mut candidate = bits.to_vec();
            candidate[0] = 0;
            candidate[1] = b;
            if cross_of_zero(&candidate) == bits {
                out.push(candidate);
            }
        }
    }
    out
}

/// Whether `x` and `y` are joined by an edge of `LTQ_n`.
pub fn is_adjacent(x: NodeLabel, y: NodeLabel) -> Result<bool> {
    same_dim(&x, &y)?;
    Ok(adjacent_values(x.value, y.value))
}

#[inline]
pub(crate) fn adjacent_values(x: u32, y: u32) -> bool {
    let diff = x ^ y;
    if diff == 0 {
        return false;
    }
    if diff == 1 || diff == 2 {
        return true;
    }
    let k = 31 - diff.leading_zeros();
    k >= 2 && diff == (1 << k) | ((x & 1) << (k - 1))
}

/// Which `(n-1)`-subcube `x` belongs to, i.e. its most significant bit.
pub fn subcube_of(x: NodeLabel) -> Result<u32> {
    if x.dim < 3 {
        return Err(Error::Dimension {
            dim: x.dim,
            min: 3,
            max: MAX_DIM,
        });
    }
    Ok(x.bit(x.dim - 1))
}

/// True iff the labels are equal, differ in one bit, or differ in exactly
/// two adjacent bit positions.
pub fn successive_bits_property(x: NodeLabel, y: NodeLabel) -> Result<bool> {
    same_dim(&x, &y)?;
    let diff = x.value ^ y.value;
    if diff == 0 || diff.is_power_of_two() {
        return Ok(true);
    }
    let low = diff.trailing_zeros();
    Ok(diff == 0b11 << low)
}

/// An undirected edge stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: NodeLabel,
    b: NodeLabel,
}

impl Edge {
    pub fn new(x: NodeLabel, y: NodeLabel) -> Result<Self> {
        if !is_adjacent(x, y)? {
            return Err(Error::NotAdjacent(x.to_string(), y.to_string()));
        }
        Ok(Self::from_raw(x, y))
    }

    /// Callers guarantee adjacency and matching dimensions.
    pub(crate) fn from_raw(x: NodeLabel, y: NodeLabel) -> Self {
        if x.value <= y.value {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    pub fn a(&self) -> NodeLabel {
        self.a
    }

    pub fn b(&self) -> NodeLabel {
        self.b
    }

    pub fn contains(&self, x: NodeLabel) -> bool {
        self.a == x || self.b == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(serializer)
    }
}

/// Every edge of `LTQ_dim`, sorted.
pub fn edges(dim: u32) -> Result<Vec<Edge>> {
    check_dim(dim, MIN_DIM)?;
    let count = 1u32 << dim;
    let mut out = Vec::with_capacity(dim as usize * (count as usize / 2));
    for v in 0..count {
        for w in neighbor_values(v, dim) {
            if v < w {
                out.push(Edge {
                    a: NodeLabel::from_raw(dim, v),
                    b: NodeLabel::from_raw(dim, w),
                });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `LTQ_dim` as an implicit graph; adjacency is computed, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LtqGraph {
    dim: u32,
}

impl LtqGraph {
    pub fn new(dim: u32) -> Result<Self> {
        check_dim(dim, MIN_DIM)?;
        Ok(Self { dim })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn node_count(&self) -> usize {
        1usize << self.dim
    }

    pub fn edge_count(&self) -> usize {
        self.dim as usize * (1usize << (self.dim - 1))
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeLabel> + '_ {
        (0..1u32 << self.dim).map(move |v| NodeLabel::from_raw(self.dim, v))
    }

    pub fn neighbors(&self, x: NodeLabel) -> Result<Vec<NodeLabel>> {
        if x.dim != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.dim,
            });
        }
        Ok(neighbors(x))
    }

    pub fn edges(&self) -> Vec<Edge> {
        edges(self.dim).expect("dimension validated on construction")
    }
}
