//! Automorphisms of `VQ_n` as composable structural values.
//!
//! An [`Automorphism`] is a tree of a few primitive forms: the top-bit flip
//! (`sigma1`), the half-split map that applies one map of `VQ_{n-1}` per
//! half (`sigma0`), the `phi_i` lifts that transform the two bits below the
//! top of `VQ_{n-1}` and apply an inner map to the rest, compositions, and
//! explicit tables. Evaluation walks the tree, so a value can be applied at
//! any dimension up to 64 without materializing `2^n` entries.

mod base;
mod notation;
mod transport;
mod verify;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{is_crossing_dim, low_mask, VertexLabel, MAX_LABEL_DIM, MAX_SIZE_CAP};

pub use base::base_automorphism_table;
pub use transport::{
    transport, verify_vertex_transitivity, TransitivityReport, TransportFailure, VerifyLimits,
    VerifyMode,
};
pub use verify::{
    is_automorphism, is_automorphism_capped, is_automorphism_in, AutomorphismCheck, Witness,
};

/// Which of the four lifts `phi_0..phi_3`. The discriminant doubles as the
/// XOR mask applied to the two bits `x_{n-1} x_{n-2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhiIndex {
    /// `x_{n-1} x_{n-2}` unchanged.
    Zero = 0,
    /// `x_{n-2}` complemented.
    One = 1,
    /// `x_{n-1}` complemented.
    Two = 2,
    /// Both complemented.
    Three = 3,
}

impl PhiIndex {
    pub const ALL: [PhiIndex; 4] = [
        PhiIndex::Zero,
        PhiIndex::One,
        PhiIndex::Two,
        PhiIndex::Three,
    ];

    pub fn from_index(i: u8) -> Result<Self> {
        Self::ALL
            .get(i as usize)
            .copied()
            .ok_or_else(|| Error::Range(format!("phi index {i} outside 0..=3")))
    }

    /// The lift whose mask matches `pattern & 0b11`.
    pub(crate) fn from_mask(pattern: u64) -> Self {
        Self::ALL[(pattern & 0b11) as usize]
    }

    #[inline]
    pub fn index(self) -> u8 {
        self as u8
    }

    #[inline]
    fn mask(self) -> u64 {
        self as u64
    }

    /// The partner used on the other half of a `sigma0` at a crossing
    /// dimension.
    pub fn half_partner(self) -> Self {
        match self {
            PhiIndex::Zero => PhiIndex::Zero,
            PhiIndex::One => PhiIndex::One,
            PhiIndex::Two => PhiIndex::Three,
            PhiIndex::Three => PhiIndex::Two,
        }
    }
}

/// The structural form of an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Form {
    Identity,
    /// `x_n X_{n-1} -> !x_n X_{n-1}`.
    FlipTop,
    /// `x_n X_{n-1} -> x_n f(X_{n-1})` with `f = low` when `x_n = 0` and
    /// `f = high` when `x_n = 1`.
    HalfSplit {
        low: Arc<Automorphism>,
        high: Arc<Automorphism>,
    },
    /// Acts on `dim = n - 1` bits with `n = 3k`: the top two bits are XORed
    /// with the index mask, the low `n - 3` bits go through `inner`.
    PhiLift {
        index: PhiIndex,
        inner: Arc<Automorphism>,
    },
    /// `parts[0] ∘ parts[1] ∘ ...`; the last part is applied first.
    Compose(Vec<Automorphism>),
    /// `table[x]` is the image of `x`.
    Table(Arc<[u64]>),
}

/// A permutation of the `dim`-bit labels built from the forms above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    dim: u32,
    form: Form,
}

fn check_dim(dim: u32) -> Result<()> {
    if dim > MAX_LABEL_DIM {
        return Err(Error::Range(format!(
            "dimension {dim} exceeds {MAX_LABEL_DIM}"
        )));
    }
    Ok(())
}

impl Automorphism {
    pub fn identity(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            form: Form::Identity,
        })
    }

    /// `sigma1`: complement the top bit.
    pub fn sigma1(n: u32) -> Result<Self> {
        check_dim(n)?;
        if n < 1 {
            return Err(Error::Precondition("sigma1 needs n >= 1".into()));
        }
        Ok(Self {
            dim: n,
            form: Form::FlipTop,
        })
    }

    /// `phi_i` over `inner`, an automorphism of `VQ_{n-1}` for `n = 3k`.
    pub fn lift_phi(index: PhiIndex, inner: Automorphism, n: u32) -> Result<Self> {
        if !is_crossing_dim(n) {
            return Err(Error::Precondition(format!(
                "phi lifts are defined for n a positive multiple of 3, got n = {n}"
            )));
        }
        if inner.dim + 3 != n {
            return Err(Error::Contract(format!(
                "phi lift for n = {n} needs an inner map of dimension {}, got {}",
                n - 3,
                inner.dim
            )));
        }
        Ok(Self {
            dim: n - 1,
            form: Form::PhiLift {
                index,
                inner: Arc::new(inner),
            },
        })
    }

    /// `sigma0` on `VQ_n`: `half0` acts on the `x_n = 0` half, `half1` on the
    /// `x_n = 1` half.
    ///
    /// For `n` not a multiple of 3 both halves must be the same map. For
    /// `n = 3k` the halves must be lifts over one shared inner map with index
    /// pair `(0,0)`, `(1,1)`, `(3,2)` or `(2,3)`.
    pub fn sigma0(n: u32, half0: Automorphism, half1: Automorphism) -> Result<Self> {
        Self::check_halves(n, &half0, &half1)?;
        if is_crossing_dim(n) {
            match (&half0.form, &half1.form) {
                (
                    Form::PhiLift {
                        index: i0,
                        inner: a,
                    },
                    Form::PhiLift {
                        index: i1,
                        inner: b,
                    },
                ) => {
                    if a != b {
                        return Err(Error::Contract(
                            "sigma0 halves must share one inner automorphism".into(),
                        ));
                    }
                    if i0.half_partner() != *i1 {
                        return Err(Error::Contract(format!(
                            "illegal sigma0 pairing (phi_{}, phi_{}) at n = {n}",
                            i0.index(),
                            i1.index()
                        )));
                    }
                }
                _ => {
                    return Err(Error::Contract(format!(
                        "sigma0 at n = {n} needs phi lifts on both halves"
                    )))
                }
            }
        } else if half0 != half1 {
            return Err(Error::Contract(format!(
                "sigma0 at n = {n} needs the same automorphism on both halves"
            )));
        }
        Ok(Self::half_split(n, half0, half1))
    }

    /// `sigma0` without the pairing rule. Only dimensions are checked; the
    /// result need not be an automorphism.
    pub fn sigma0_unchecked(n: u32, half0: Automorphism, half1: Automorphism) -> Result<Self> {
        Self::check_halves(n, &half0, &half1)?;
        Ok(Self::half_split(n, half0, half1))
    }

    fn check_halves(n: u32, half0: &Automorphism, half1: &Automorphism) -> Result<()> {
        check_dim(n)?;
        if n < 1 {
            return Err(Error::Precondition("sigma0 needs n >= 1".into()));
        }
        if half0.dim + 1 != n || half1.dim + 1 != n {
            return Err(Error::Contract(format!(
                "sigma0 at n = {n} needs halves of dimension {}, got {} and {}",
                n - 1,
                half0.dim,
                half1.dim
            )));
        }
        Ok(())
    }

    fn half_split(n: u32, half0: Automorphism, half1: Automorphism) -> Self {
        Self {
            dim: n,
            form: Form::HalfSplit {
                low: Arc::new(half0),
                high: Arc::new(half1),
            },
        }
    }

    /// An explicit table; `table` must be a permutation of `0..2^dim`.
    pub fn from_table(dim: u32, table: Vec<u64>) -> Result<Self> {
        if dim > MAX_SIZE_CAP {
            return Err(Error::Resource {
                what: "table dimension",
                requested: u64::from(dim),
                cap: u64::from(MAX_SIZE_CAP),
            });
        }
        let size = 1usize << dim;
        if table.len() != size {
            return Err(Error::Contract(format!(
                "table for dimension {dim} needs {size} entries, got {}",
                table.len()
            )));
        }
        let mut seen = vec![false; size];
        for &t in &table {
            if t as usize >= size || std::mem::replace(&mut seen[t as usize], true) {
                return Err(Error::Contract(format!(
                    "table is not a permutation (entry {t})"
                )));
            }
        }
        Ok(Self {
            dim,
            form: Form::Table(table.into()),
        })
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Contract(format!(
                "cannot compose automorphisms of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        let mut parts = Vec::new();
        for a in [self, other] {
            match &a.form {
                Form::Compose(inner) => parts.extend(inner.iter().cloned()),
                _ => parts.push(a.clone()),
            }
        }
        Ok(Self {
            dim: self.dim,
            form: Form::Compose(parts),
        })
    }

    pub fn inverse(&self) -> Self {
        let form = match &self.form {
            Form::Identity | Form::FlipTop => self.form.clone(),
            Form::HalfSplit { low, high } => Form::HalfSplit {
                low: Arc::new(low.inverse()),
                high: Arc::new(high.inverse()),
            },
            Form::PhiLift { index, inner } => Form::PhiLift {
                index: *index,
                inner: Arc::new(inner.inverse()),
            },
            Form::Compose(parts) => {
                Form::Compose(parts.iter().rev().map(|p| p.inverse()).collect())
            }
            Form::Table(table) => {
                let mut inv = vec![0u64; table.len()];
                for (x, &y) in table.iter().enumerate() {
                    inv[y as usize] = x as u64;
                }
                Form::Table(inv.into())
            }
        };
        Self {
            dim: self.dim,
            form,
        }
    }

    /// Image of a packed label; `x` must be below `2^dim`.
    pub fn apply_raw(&self, x: u64) -> u64 {
        let dim = self.dim;
        match &self.form {
            Form::Identity => x,
            Form::FlipTop => x ^ (1u64 << (dim - 1)),
            Form::HalfSplit { low, high } => {
                let top = 1u64 << (dim - 1);
                let rest = x & low_mask(dim - 1);
                if x & top == 0 {
                    low.apply_raw(rest)
                } else {
                    top | high.apply_raw(rest)
                }
            }
            Form::PhiLift { index, inner } => {
                let shift = dim - 2;
                let head = (x >> shift) ^ index.mask();
                (head << shift) | inner.apply_raw(x & low_mask(shift))
            }
            Form::Compose(parts) => parts.iter().rev().fold(x, |acc, p| p.apply_raw(acc)),
            Form::Table(table) => table[x as usize],
        }
    }

    pub fn apply(&self, x: VertexLabel) -> Result<VertexLabel> {
        if x.dim() != self.dim {
            return Err(Error::Contract(format!(
                "label {x} has dimension {}, automorphism has dimension {}",
                x.dim(),
                self.dim
            )));
        }
        Ok(VertexLabel::from_raw(self.apply_raw(x.value()), self.dim))
    }

    /// The induced map as a table of `2^dim` images.
    pub fn to_table(&self) -> Result<Vec<u64>> {
        if self.dim > MAX_SIZE_CAP {
            return Err(Error::Resource {
                what: "table dimension",
                requested: u64::from(self.dim),
                cap: u64::from(MAX_SIZE_CAP),
            });
        }
        if let Form::Table(t) = &self.form {
            return Ok(t.to_vec());
        }
        Ok((0..1u64 << self.dim).map(|x| self.apply_raw(x)).collect())
    }

    /// The same map in explicit-table form.
    pub fn materialize(&self) -> Result<Self> {
        let table = self.to_table()?;
        Ok(Self {
            dim: self.dim,
            form: Form::Table(table.into()),
        })
    }
}
