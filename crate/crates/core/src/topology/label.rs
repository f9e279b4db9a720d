use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Widest label the packed representation can hold.
pub const MAX_LABEL_DIM: u32 = u64::BITS;

/// Mask selecting the low `bits` bits of a packed label.
#[inline]
pub const fn low_mask(bits: u32) -> u64 {
    if bits >= u64::BITS {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// An `dim`-bit vertex label `x_dim ... x_2 x_1`, packed with `x_1` as the
/// least significant bit.
///
/// Dimension 0 is the single empty label of the one-vertex cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    value: u64,
    dim: u32,
}

impl VertexLabel {
    pub fn new(value: u64, dim: u32) -> Result<Self> {
        if dim > MAX_LABEL_DIM {
            return Err(Error::Range(format!(
                "label dimension {dim} exceeds {MAX_LABEL_DIM}"
            )));
        }
        if value & !low_mask(dim) != 0 {
            return Err(Error::Range(format!(
                "label value {value} does not fit in {dim} bits"
            )));
        }
        Ok(Self { value, dim })
    }

    /// Builds a label without range checks; the caller guarantees
    /// `value < 2^dim`.
    #[inline]
    pub(crate) const fn from_raw(value: u64, dim: u32) -> Self {
        Self { value, dim }
    }

    /// The all-zero label of the given dimension.
    pub fn zero(dim: u32) -> Result<Self> {
        Self::new(0, dim)
    }

    #[inline]
    pub const fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub const fn dim(self) -> u32 {
        self.dim
    }

    /// Bit `x_i` for `1 <= i <= dim`.
    pub fn bit(self, i: u32) -> Result<u8> {
        if i == 0 || i > self.dim {
            return Err(Error::Range(format!(
                "bit index {i} outside 1..={}",
                self.dim
            )));
        }
        Ok(((self.value >> (i - 1)) & 1) as u8)
    }

    /// The top bit `x_dim`. Panics on the empty label.
    #[inline]
    pub(crate) fn top_bit(self) -> u64 {
        debug_assert!(self.dim > 0);
        (self.value >> (self.dim - 1)) & 1
    }

    /// The suffix `X_i = x_i ... x_1` as an `i`-bit label.
    pub fn suffix(self, i: u32) -> Result<Self> {
        if i > self.dim {
            return Err(Error::Range(format!(
                "suffix length {i} exceeds label dimension {}",
                self.dim
            )));
        }
        Ok(Self::from_raw(self.value & low_mask(i), i))
    }

    /// Prepends `bit` as the new most significant bit.
    pub fn prepend(self, bit: u8) -> Result<Self> {
        if self.dim >= MAX_LABEL_DIM {
            return Err(Error::Range("label already at maximum width".into()));
        }
        let b = u64::from(bit & 1);
        Ok(Self::from_raw(self.value | (b << self.dim), self.dim + 1))
    }

    /// All labels of dimension `dim` in increasing order.
    pub fn all(dim: u32) -> impl Iterator<Item = VertexLabel> {
        assert!(dim < 64, "enumerating 2^{dim} labels is not supported");
        (0..1u64 << dim).map(move |v| VertexLabel::from_raw(v, dim))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return Ok(());
        }
        write!(f, "{:0width$b}", self.value, width = self.dim as usize)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    /// Parses an MSB-first binary string; its length is the dimension.
    fn from_str(s: &str) -> Result<Self> {
        let dim = s.len();
        if dim > MAX_LABEL_DIM as usize {
            return Err(Error::Parse(format!("label '{s}' is wider than 64 bits")));
        }
        let mut value = 0u64;
        for c in s.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::Parse(format!("label '{s}' is not a binary string"))),
            };
            value = (value << 1) | bit;
        }
        Ok(Self::from_raw(value, dim as u32))
    }
}

/// Formats a raw vertex value as a binary string of width `dim`.
pub(crate) fn fmt_bits(value: u64, dim: u32) -> String {
    VertexLabel::from_raw(value, dim).to_string()
}
