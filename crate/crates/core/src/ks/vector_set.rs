use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{ExactVector, Rational};

/// A labeled set of rays in dimension `d`.
///
/// Vectors are kept exactly as supplied (they need not be canonical), but no
/// two of them may span the same ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    dim: usize,
    vectors: Vec<ExactVector>,
    labels: Option<Vec<String>>,
    ray_index: HashMap<ExactVector, usize>,
}

impl VectorSet {
    pub fn new(dim: usize, vectors: Vec<ExactVector>, labels: Option<Vec<String>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidVectorSet("dimension must be positive".into()));
        }
        if let Some(labels) = &labels {
            if labels.len() != vectors.len() {
                return Err(Error::InvalidVectorSet(format!(
                    "{} labels for {} vectors",
                    labels.len(),
                    vectors.len()
                )));
            }
        }
        let mut ray_index = HashMap::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.dim() != dim {
                return Err(Error::InvalidVectorSet(format!(
                    "vector {i} has dimension {}, expected {dim}",
                    v.dim()
                )));
            }
            let ray = v
                .canonical_ray()
                .ok_or_else(|| Error::InvalidVectorSet(format!("vector {i} is zero")))?;
            if let Some(j) = ray_index.insert(ray, i) {
                return Err(Error::InvalidVectorSet(format!(
                    "vectors {j} and {i} span the same ray"
                )));
            }
        }
        Ok(VectorSet {
            dim,
            vectors,
            labels,
            ray_index,
        })
    }

    pub fn from_int_vectors(
        dim: usize,
        vectors: &[Vec<i64>],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let vs = vectors
            .iter()
            .map(|v| {
                if v.is_empty() {
                    Err(Error::InvalidVectorSet("empty vector".into()))
                } else {
                    Ok(ExactVector::from_ints(v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, vs, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &ExactVector {
        &self.vectors[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of vertex `i`, or its index when the set is unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Index of the vector spanning the same ray as `v`, if present.
    pub fn index_of_ray(&self, v: &ExactVector) -> Option<usize> {
        self.ray_index.get(&v.canonical_ray()?).copied()
    }

    /// Indices of `e_0, ..., e_{d-1}` when every canonical basis ray is in
    /// the set.
    pub fn canonical_basis_indices(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .map(|k| self.index_of_ray(&ExactVector::unit(self.dim, k)))
            .collect()
    }

    /// All vectors as `i64` rows; fails if an entry is not a machine integer.
    pub fn int_rows(&self) -> Result<Vec<Vec<i64>>> {
        self.vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.to_i64().ok_or_else(|| {
                    Error::InvalidVectorSet(format!("vector {i} is not an integer vector"))
                })
            })
            .collect()
    }

    pub fn norm_squared(&self, i: usize) -> Rational {
        self.vectors[i].norm_squared()
    }

    /// Append `v` unless its ray is already present; returns its index.
    pub(crate) fn push_ray(
        &mut self,
        v: ExactVector,
        label: impl FnOnce(usize) -> String,
    ) -> usize {
        if let Some(i) = self.index_of_ray(&v) {
            return i;
        }
        let i = self.vectors.len();
        self.ray_index
            .insert(v.canonical_ray().expect("nonzero"), i);
        self.vectors.push(v);
        if let Some(labels) = &mut self.labels {
            labels.push(label(i));
        }
        i
    }
}
