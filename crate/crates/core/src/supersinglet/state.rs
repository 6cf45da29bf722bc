use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::permutation::{factorial, levi_civita, Permutation};
use crate::error::{Error, Result};
use crate::linalg::{ExactVector, Rational};

/// Largest `d` for which the `d!`-term state is materialized.
pub const MAX_STATE_DIM: usize = 9;

/// `d` particles of `d` levels in the sparse form
/// `(1/sqrt(d!)) sum_pi sign(pi) |pi(0) ... pi(d-1)>`.
///
/// The `1/sqrt(d!)` normalization is implicit. Terms are kept in
/// lexicographic permutation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingletState {
    d: usize,
    terms: Vec<(Permutation, i8)>,
}

/// Build the totally antisymmetric state on `d` parties.
pub fn build_supersinglet(d: usize) -> Result<SupersingletState> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "supersinglet needs d >= 2, got {d}"
        )));
    }
    if d > MAX_STATE_DIM {
        return Err(Error::BudgetExceeded {
            what: "state dimension",
            requested: d as u64,
            limit: MAX_STATE_DIM as u64,
            advice: "the state has d! terms",
        });
    }
    let terms = Permutation::all(d)
        .into_iter()
        .map(|p| {
            let s = levi_civita(&p);
            (p, s)
        })
        .collect();
    Ok(SupersingletState { d, terms })
}

impl SupersingletState {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, i8)> {
        self.terms.iter().map(|(p, s)| (p, *s))
    }

    pub fn term_map(&self) -> BTreeMap<Permutation, i8> {
        self.terms.iter().cloned().collect()
    }

    pub fn coefficient(&self, p: &Permutation) -> Option<i8> {
        self.terms
            .binary_search_by(|(q, _)| q.cmp(p))
            .ok()
            .map(|i| self.terms[i].1)
    }

    /// Squared norm, exactly: `(number of terms) / d!`.
    pub fn norm_squared(&self) -> Rational {
        Rational::new(self.terms.len() as i64, factorial(self.d) as i64)
    }

    /// True when every sign matches the Levi-Civita symbol.
    pub fn is_supersinglet(&self) -> bool {
        self.terms.len() as u64 == factorial(self.d)
            && self.terms.iter().all(|(p, s)| levi_civita(p) == *s)
    }

    /// Flip one term's sign, producing a state that is no longer the
    /// supersinglet. Used for negative controls.
    pub fn flip_sign(&mut self, p: &Permutation) -> Result<()> {
        let i = self
            .terms
            .binary_search_by(|(q, _)| q.cmp(p))
            .map_err(|_| Error::InvalidPermutation(p.image().to_vec()))?;
        self.terms[i].1 = -self.terms[i].1;
        Ok(())
    }

    /// `sum_pi sign(pi) prod_i rows[i][pi(i)]` over integer rows, with
    /// overflow checks.
    pub(crate) fn contract_int(&self, rows: &[&[i64]]) -> Result<i128> {
        let mut total: i128 = 0;
        'terms: for (p, s) in &self.terms {
            let mut prod: i128 = i128::from(*s);
            for (row, &col) in rows.iter().zip(p.image()) {
                let x = row[col];
                if x == 0 {
                    continue 'terms;
                }
                prod = prod
                    .checked_mul(i128::from(x))
                    .ok_or(Error::Overflow("amplitude"))?;
            }
            total = total
                .checked_add(prod)
                .ok_or(Error::Overflow("amplitude"))?;
        }
        Ok(total)
    }

    fn contract_exact(&self, vectors: &[&ExactVector]) -> Rational {
        let mut total = Rational::zero();
        for (p, s) in &self.terms {
            let mut prod = Rational::from(i64::from(*s));
            for (v, &col) in vectors.iter().zip(p.image()) {
                let x = v.get(col);
                if x.is_zero() {
                    prod = Rational::zero();
                    break;
                }
                prod = &prod * x;
            }
            total += prod;
        }
        total
    }
}

/// Exact value of `<v_0| ... <v_{d-1}| S>` for unnormalized real vectors:
/// `numerator / sqrt(d! * norm_product)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Amplitude {
    pub numerator: Rational,
    pub norm_product: Rational,
    pub d_factorial: u64,
}

impl Amplitude {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn sign(&self) -> i8 {
        self.numerator.signum()
    }

    /// `numerator^2 / (d! * norm_product)`.
    pub fn probability(&self) -> Rational {
        self.numerator.square() / (Rational::from(self.d_factorial as i64) * &self.norm_product)
    }
}

/// Overlap of the product state `v_0 ⊗ ... ⊗ v_{d-1}` with `state`.
pub fn amplitude(state: &SupersingletState, party_vectors: &[&ExactVector]) -> Result<Amplitude> {
    let d = state.d;
    if party_vectors.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: party_vectors.len(),
        });
    }
    if let Some(v) = party_vectors.iter().find(|v| v.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: v.dim(),
        });
    }
    let ints: Option<Vec<Vec<i64>>> = party_vectors.iter().map(|v| v.to_i64()).collect();
    let numerator = match ints {
        Some(rows) => {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            match state.contract_int(&refs) {
                Ok(c) => Rational::from(BigInt::from(c)),
                Err(_) => state.contract_exact(party_vectors),
            }
        }
        None => state.contract_exact(party_vectors),
    };
    let norm_product = party_vectors.iter().map(|v| v.norm_squared()).product();
    Ok(Amplitude {
        numerator,
        norm_product,
        d_factorial: factorial(d),
    })
}

/// The state written in the product basis built from one orthogonal basis.
#[derive(Debug, Clone, Serialize)]
pub struct ProductBasisExpansion {
    pub basis: Vec<ExactVector>,
    /// Nonzero coefficients only, keyed by outcome tuple (indices into
    /// `basis`); every other tuple has amplitude exactly zero.
    pub coefficients: BTreeMap<Vec<usize>, Amplitude>,
    /// Number of outcome tuples evaluated (`d^d`).
    pub tuples_evaluated: usize,
}

impl ProductBasisExpansion {
    pub fn total_probability(&self) -> Rational {
        self.coefficients.values().map(Amplitude::probability).sum()
    }

    pub fn coefficient(&self, tuple: &[usize]) -> Option<&Amplitude> {
        self.coefficients.get(tuple)
    }
}

/// Expand `state` over every tuple of basis vectors.
pub fn reexpand_in_basis(
    state: &SupersingletState,
    basis: &[ExactVector],
) -> Result<ProductBasisExpansion> {
    let d = state.d;
    if basis.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: basis.len(),
        });
    }
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate().skip(i + 1) {
            if !u.inner_product(v)?.is_zero() {
                return Err(Error::NotOrthogonal(i, j));
            }
        }
    }
    let mut coefficients = BTreeMap::new();
    let mut tuple = vec![0usize; d];
    let total = d.pow(d as u32);
    for _ in 0..total {
        let vs: Vec<&ExactVector> = tuple.iter().map(|&t| &basis[t]).collect();
        let amp = amplitude(state, &vs)?;
        if !amp.is_zero() {
            coefficients.insert(tuple.clone(), amp);
        }
        advance_tuple(&mut tuple, d);
    }
    Ok(ProductBasisExpansion {
        basis: basis.to_vec(),
        coefficients,
        tuples_evaluated: total,
    })
}

/// Odometer increment over `[base]^len`, last position fastest.
pub(crate) fn advance_tuple(tuple: &mut [usize], base: usize) {
    for x in tuple.iter_mut().rev() {
        *x += 1;
        if *x < base {
            return;
        }
        *x = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_for_two_parties() {
        let s = build_supersinglet(2).unwrap();
        let m = s.term_map();
        assert_eq!(m.len(), 2);
        assert_eq!(m[&Permutation::new(vec![0, 1]).unwrap()], 1);
        assert_eq!(m[&Permutation::new(vec![1, 0]).unwrap()], -1);
    }

    #[test]
    fn three_party_signs() {
        let s = build_supersinglet(3).unwrap();
        for (p, sign) in s.terms() {
            let cyclic = matches!(p.image(), [0, 1, 2] | [1, 2, 0] | [2, 0, 1]);
            assert_eq!(sign, if cyclic { 1 } else { -1 }, "{p}");
        }
        assert!(build_supersinglet(1).is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(
            build_supersinglet(4).unwrap().norm_squared(),
            Rational::one()
        );
    }

    #[test]
    fn canonical_outcome_probability() {
        let s = build_supersinglet(4).unwrap();
        let e: Vec<ExactVector> = (0..4).map(|k| ExactVector::unit(4, k)).collect();
        let refs: Vec<&ExactVector> = e.iter().collect();
        assert_eq!(
            amplitude(&s, &refs).unwrap().probability(),
            Rational::new(1, 24)
        );
    }

    #[test]
    fn repeated_vector_gives_zero() {
        let s = build_supersinglet(4).unwrap();
        let d = ExactVector::from_ints(&[-1, 1, 1, 1]);
        let e = ExactVector::from_ints(&[1, 1, 1, -1]);
        let f = ExactVector::from_ints(&[1, 0, 0, 1]);
        assert!(amplitude(&s, &[&d, &d, &e, &f]).unwrap().is_zero());
    }

    #[test]
    fn rational_entries_take_the_exact_path() {
        let s = build_supersinglet(2).unwrap();
        let half = ExactVector::new(vec![Rational::new(1, 2), Rational::zero()]).unwrap();
        let e1 = ExactVector::unit(2, 1);
        let a = amplitude(&s, &[&half, &e1]).unwrap();
        assert_eq!(a.numerator, Rational::new(1, 2));
        assert_eq!(a.probability(), Rational::new(1, 2));
    }

    #[test]
    fn reexpansion_rejects_non_orthogonal_basis() {
        let s = build_supersinglet(2).unwrap();
        let basis = [
            ExactVector::from_ints(&[1, 0]),
            ExactVector::from_ints(&[1, 1]),
        ];
        assert!(matches!(
            reexpand_in_basis(&s, &basis),
            Err(Error::NotOrthogonal(0, 1))
        ));
    }

    #[test]
    fn dimension_mismatch() {
        let s = build_supersinglet(3).unwrap();
        let e = ExactVector::unit(2, 0);
        assert!(amplitude(&s, &[&e, &e, &e]).is_err());
        assert!(amplitude(&s, &[&e]).is_err());
    }
}
