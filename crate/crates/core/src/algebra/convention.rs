use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which function-space reading is used for projection and inner product.
///
/// * `PaperDisk`: analytic terms pass through the projection unchanged and
///   `z^s z̄^t` with `1 ≤ t ≤ s` maps to `z^{s-t} / (2(s+1))`; monomials
///   are orthogonal with `⟨z^k, z^k⟩ = 1/(2(k+1))`. This reproduces the
///   hand computations of the worked examples but is not an orthogonal
///   projection.
/// * `Bergman`: the genuine orthogonal projection for area measure,
///   `z^s z̄^t ↦ (s-t+1)/(s+1) z^{s-t}`, with the same weights.
/// * `Circle`: the boundary Hardy space, `z^s z̄^t ↦ z^{s-t}`, orthonormal
///   monomials. Reproducing kernels `1/(1 - ᾱz)` live here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    #[default]
    PaperDisk,
    Bergman,
    Circle,
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::PaperDisk, Convention::Bergman, Convention::Circle];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::PaperDisk => "paper-disk",
            Convention::Bergman => "bergman",
            Convention::Circle => "circle",
        }
    }

    /// `⟨z^k, z^k⟩`.
    pub fn weight(self, k: usize) -> BigRational {
        match self {
            Convention::PaperDisk | Convention::Bergman => BigRational::new(1.into(), (2 * (k as u64 + 1)).into()),
            Convention::Circle => BigRational::one(),
        }
    }

    /// Coefficient `c` with `P(z^s z̄^t) = c z^{s-t}`, or `None` when `s < t`.
    pub fn projection_factor(self, s: usize, t: usize) -> Option<BigRational> {
        if s < t {
            return None;
        }
        Some(match self {
            Convention::PaperDisk if t == 0 => BigRational::one(),
            Convention::PaperDisk => BigRational::new(1.into(), (2 * (s as u64 + 1)).into()),
            Convention::Bergman => BigRational::new(((s - t + 1) as u64).into(), ((s + 1) as u64).into()),
            Convention::Circle => BigRational::one(),
        })
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "paper-disk" | "paperdisk" | "paper" => Ok(Convention::PaperDisk),
            "bergman" => Ok(Convention::Bergman),
            "circle" | "hardy" => Ok(Convention::Circle),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}
