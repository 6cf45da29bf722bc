use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Column vector with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExactVector {
    entries: Vec<Rational>,
}

impl ExactVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument(
                "vector dimension must be positive".into(),
            ));
        }
        Ok(ExactVector { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "vector dimension must be positive");
        ExactVector {
            entries: entries.iter().map(|&x| Rational::from(x)).collect(),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        ExactVector {
            entries: vec![Rational::zero(); dim],
        }
    }

    /// Canonical basis vector `e_k` of dimension `dim`.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[k] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn inner_product(&self, other: &ExactVector) -> Result<Rational> {
        inner_product(self, other)
    }

    pub fn norm_squared(&self) -> Rational {
        self.entries.iter().map(Rational::square).sum()
    }

    pub fn scaled(&self, factor: &Rational) -> ExactVector {
        ExactVector {
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    /// `self - factor * other`; panics on dimension mismatch.
    pub fn sub_scaled(&self, factor: &Rational, other: &ExactVector) -> ExactVector {
        assert_eq!(self.dim(), other.dim());
        ExactVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - &(factor * b))
                .collect(),
        }
    }

    /// Primitive integer representative of the ray through `self`: integer
    /// entries with gcd 1 and first nonzero entry positive. `None` for the
    /// zero vector.
    pub fn primitive_integer(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        Some(make_primitive(ints))
    }

    /// The canonical representative of the ray through `self`.
    pub fn canonical_ray(&self) -> Option<ExactVector> {
        self.primitive_integer().map(|ints| ExactVector {
            entries: ints.into_iter().map(Rational::from).collect(),
        })
    }

    /// Entries as `i64` when every entry is an integer that fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Divide by the content and flip the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
pub(crate) fn make_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
    ints
}

/// Exact real inner product `sum_k u_k v_k`.
pub fn inner_product(u: &ExactVector, v: &ExactVector) -> Result<Rational> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    Ok(u.entries.iter().zip(&v.entries).map(|(a, b)| a * b).sum())
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if x.is_integer() {
                write!(f, "{}", x.numer())?;
            } else {
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}
