//! The inductive construction of an automorphism carrying one vertex of
//! `VQ_n` onto another.
//!
//! For `n <= 3` the identity or `sigma1` is used when it suffices, and
//! otherwise a member of the exhaustively searched group. Above
//! that, a `sigma0` is built that fixes the top bit and moves `X_{n-1}` to
//! `Y_{n-1}` on the half containing `X`; when the top bits differ it is
//! followed by `sigma1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::base::{base_automorphism_table, BASE_MAX_DIM};
use super::verify::is_automorphism_in;
use super::{Automorphism, PhiIndex};
use crate::error::{Error, Result};
use crate::topology::{build_recursive_capped, is_crossing_dim, VertexLabel, DEFAULT_SIZE_CAP};

/// An automorphism `sigma` of `VQ_n` with `sigma(x) = y`.
pub fn transport(x: VertexLabel, y: VertexLabel) -> Result<Automorphism> {
    if x.dim() != y.dim() {
        return Err(Error::Contract(format!(
            "cannot transport {x} (dimension {}) to {y} (dimension {})",
            x.dim(),
            y.dim()
        )));
    }
    let n = x.dim();
    if n <= BASE_MAX_DIM {
        if x == y {
            return Automorphism::identity(n);
        }
        if n >= 1 && x.value() ^ y.value() == 1 << (n - 1) {
            return Automorphism::sigma1(n);
        }
        return base_automorphism_table(n)?
            .iter()
            .find(|a| a.apply_raw(x.value()) == y.value())
            .cloned()
            .ok_or_else(|| Error::Contract(format!("no base automorphism sends {x} to {y}")));
    }
    let half_map = sigma0_towards(x, y)?;
    if x.top_bit() == y.top_bit() {
        Ok(half_map)
    } else {
        Automorphism::sigma1(n)?.compose(&half_map)
    }
}

/// Transport on a suffix, with the identity when nothing has to move.
fn transport_or_identity(x: VertexLabel, y: VertexLabel) -> Result<Automorphism> {
    if x == y {
        Automorphism::identity(x.dim())
    } else {
        transport(x, y)
    }
}

/// A legal `sigma0` on `VQ_n` (`n >= 4`) whose half for `x_n` sends
/// `X_{n-1}` to `Y_{n-1}`.
fn sigma0_towards(x: VertexLabel, y: VertexLabel) -> Result<Automorphism> {
    let n = x.dim();
    if !is_crossing_dim(n) {
        let phi = transport_or_identity(x.suffix(n - 1)?, y.suffix(n - 1)?)?;
        return Automorphism::sigma0(n, phi.clone(), phi);
    }
    let inner = transport_or_identity(x.suffix(n - 3)?, y.suffix(n - 3)?)?;
    // Bits x_{n-1} x_{n-2} that have to be complemented select phi_i.
    let index = PhiIndex::from_mask((x.value() ^ y.value()) >> (n - 3));
    let own = Automorphism::lift_phi(index, inner.clone(), n)?;
    let other = Automorphism::lift_phi(index.half_partner(), inner, n)?;
    if x.top_bit() == 0 {
        Automorphism::sigma0(n, own, other)
    } else {
        Automorphism::sigma0(n, other, own)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum VerifyMode {
    /// Every target `Y` from the all-zero source.
    Full,
    /// `samples` uniformly random `(X, Y)` pairs.
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLimits {
    pub size_cap: u32,
    pub exhaustive_cap: u32,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
            exhaustive_cap: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportFailure {
    pub source: VertexLabel,
    pub target: VertexLabel,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub n: u32,
    pub mode: VerifyMode,
    pub checked: usize,
    pub verified: usize,
    pub failures: Vec<TransportFailure>,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified == self.checked
    }
}

/// Checks that [`transport`] yields a verified automorphism hitting the
/// target for every pair the mode selects.
pub fn verify_vertex_transitivity(
    n: u32,
    mode: VerifyMode,
    limits: VerifyLimits,
) -> Result<TransitivityReport> {
    let pairs: Vec<(u64, u64)> = match mode {
        VerifyMode::Full => {
            if n > limits.exhaustive_cap {
                return Err(Error::Resource {
                    what: "full verification dimension",
                    requested: u64::from(n),
                    cap: u64::from(limits.exhaustive_cap),
                });
            }
            (0..1u64 << n).map(|y| (0, y)).collect()
        }
        VerifyMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let count = 1u64 << n.min(63);
            (0..samples)
                .map(|_| (rng.gen_range(0..count), rng.gen_range(0..count)))
                .collect()
        }
    };
    let g = build_recursive_capped(n, limits.size_cap)?;

    let outcomes: Vec<Option<TransportFailure>> = pairs
        .par_iter()
        .map(|&(xv, yv)| {
            let source = VertexLabel::from_raw(xv, n);
            let target = VertexLabel::from_raw(yv, n);
            let fail = |reason: String| {
                Some(TransportFailure {
                    source,
                    target,
                    reason,
                })
            };
            let sigma = match transport(source, target) {
                Ok(s) => s,
                Err(e) => return fail(e.to_string()),
            };
            if sigma.apply_raw(xv) != yv {
                let image = VertexLabel::from_raw(sigma.apply_raw(xv), n);
                return fail(format!("image is {image}, not {target}"));
            }
            match is_automorphism_in(&sigma, &g) {
                Ok(check) if check.is_ok() => None,
                Ok(check) => fail(format!(
                    "{} violations, first {:?}",
                    check.violations,
                    check.witness()
                )),
                Err(e) => fail(e.to_string()),
            }
        })
        .collect();

    let failures: Vec<TransportFailure> = outcomes.into_iter().flatten().collect();
    Ok(TransitivityReport {
        n,
        mode,
        checked: pairs.len(),
        verified: pairs.len() - failures.len(),
        failures,
    })
}
