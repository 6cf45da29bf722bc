use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::elimination::{bareiss_determinant, IntegerEchelon};
use super::{ExactVector, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| Rational::from(x)));
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(vectors: &[ExactVector], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            if v.dim() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: v.dim(),
                });
            }
            entries.extend_from_slice(v.entries());
        }
        Ok(ExactMatrix {
            rows: vectors.len(),
            cols,
            entries,
        })
    }

    /// `u v^T / scale`.
    pub fn outer(u: &ExactVector, v: &ExactVector, scale: &Rational) -> Self {
        let mut entries = Vec::with_capacity(u.dim() * v.dim());
        for a in u.entries() {
            for b in v.entries() {
                entries.push(&(a * b) / scale);
            }
        }
        ExactMatrix {
            rows: u.dim(),
            cols: v.dim(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn mul_vec(&self, v: &ExactVector) -> Result<ExactVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        let out = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.entries())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        ExactVector::new(out)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Each row scaled to integers (by the lcm of its denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    fn echelon(&self) -> IntegerEchelon {
        let mut e = IntegerEchelon::new(self.cols);
        for row in self.integer_rows() {
            e.insert(row);
        }
        e
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right null space, each vector in primitive integer form
    /// (content 1, first nonzero entry positive).
    pub fn null_space_basis(&self) -> Vec<ExactVector> {
        self.echelon()
            .null_space()
            .into_iter()
            .map(|x| ExactVector::new(x.into_iter().map(Rational::from).collect()).unwrap())
            .collect()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut scale = Rational::one();
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale = &scale * &Rational::from(lcm.clone());
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect();
        Ok(Rational::from(bareiss_determinant(rows)) / scale)
    }
}

/// Mutually orthogonal basis of the orthogonal complement of `span(vs)` in
/// dimension `dim`, each vector a primitive integer ray, sorted
/// lexicographically.
pub fn orthocomplement_basis(vs: &[ExactVector], dim: usize) -> Result<Vec<ExactVector>> {
    let kernel = if vs.is_empty() {
        (0..dim).map(|k| ExactVector::unit(dim, k)).collect()
    } else {
        ExactMatrix::from_row_vectors(vs, dim)?.null_space_basis()
    };
    // Gram-Schmidt over the rationals.
    let mut ortho: Vec<ExactVector> = Vec::with_capacity(kernel.len());
    for v in kernel {
        let mut w = v;
        for u in &ortho {
            let coeff = &w.inner_product(u)? / &u.norm_squared();
            if !coeff.is_zero() {
                w = w.sub_scaled(&coeff, u);
            }
        }
        ortho.push(
            w.canonical_ray()
                .expect("kernel basis vectors are independent"),
        );
    }
    ortho.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(ortho)
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn zero_matrix_null_space_is_everything() {
        let z = ExactMatrix::zeros(2, 3);
        assert_eq!(z.rank(), 0);
        let ns = z.null_space_basis();
        assert_eq!(ns.len(), 3);
        assert_eq!(ns[0], ExactVector::from_ints(&[1, 0, 0]));
    }

    #[test]
    fn rational_entries_rank_and_kernel() {
        let m = ExactMatrix::new(
            2,
            3,
            vec![
                Rational::new(1, 2),
                Rational::new(1, 3),
                Rational::zero(),
                Rational::one(),
                Rational::new(2, 3),
                Rational::zero(),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.null_space_basis();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(m.mul_vec(x).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_with_fractions() {
        let m = ExactMatrix::new(
            2,
            2,
            vec![
                Rational::new(1, 2),
                Rational::one(),
                Rational::zero(),
                Rational::new(2, 3),
            ],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), Rational::new(1, 3));
    }

    #[test]
    fn orthocomplement_examples() {
        let e = |k| ExactVector::unit(4, k);
        assert_eq!(
            orthocomplement_basis(&[e(0), e(1)], 4).unwrap(),
            vec![e(3), e(2)]
        );
        let oc = orthocomplement_basis(&[ExactVector::from_ints(&[0, 1, 1])], 3).unwrap();
        assert!(oc.contains(&ExactVector::from_ints(&[1, 0, 0])));
        assert!(oc.contains(&ExactVector::from_ints(&[0, 1, -1])));
        assert!(orthocomplement_basis(&[e(0), e(1), e(2), e(3)], 4)
            .unwrap()
            .is_empty());
        assert_eq!(orthocomplement_basis(&[], 3).unwrap().len(), 3);
    }

    #[test]
    fn orthocomplement_rejects_wrong_dimension() {
        assert!(orthocomplement_basis(&[ExactVector::from_ints(&[1, 0])], 3).is_err());
    }
}
