//! Action of `U ⊗ ... ⊗ U` on the supersinglet.
//!
//! The antisymmetric state spans a one-dimensional representation, so
//! `U^{⊗d} |S> = det(U) |S>`; invariance holds exactly when `det(U) = 1`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::permutation::{factorial, levi_civita, Permutation};
use super::state::{advance_tuple, SupersingletState};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rational};

/// Largest `d` for which the `d^d` image components are computed.
pub const MAX_INVARIANCE_DIM: usize = 6;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Square complex matrix, row major.
pub type ComplexMatrix = Vec<Vec<Complex64>>;

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub d: usize,
    pub det_re: f64,
    pub det_im: f64,
    /// `max_i |(U^{⊗d} S)_i - S_i|`.
    pub deviation_from_state: f64,
    /// `max_i |(U^{⊗d} S)_i - det(U) S_i|`.
    pub deviation_from_det_state: f64,
    /// `max |U^† U - I|`.
    pub unitarity_deviation: f64,
    pub tolerance: f64,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.deviation_from_state < self.tolerance
    }

    pub fn det_covariant(&self) -> bool {
        self.deviation_from_det_state < self.tolerance
    }
}

fn check_square(d: usize, u: &[Vec<Complex64>]) -> Result<()> {
    if u.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: u.len(),
        });
    }
    if let Some(row) = u.iter().find(|r| r.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: row.len(),
        });
    }
    Ok(())
}

pub fn unitarity_deviation(u: &[Vec<Complex64>]) -> f64 {
    let d = u.len();
    let mut worst: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let g: Complex64 = (0..d).map(|k| u[k][i].conj() * u[k][j]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g - target).norm());
        }
    }
    worst
}

/// Determinant by LU decomposition with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub fn complex_determinant(u: &[Vec<Complex64>]) -> Complex64 {
    let n = u.len();
    let mut a: Vec<Vec<Complex64>> = u.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .unwrap();
        if a[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// Apply `U^{⊗d}` to the supersinglet componentwise and compare the image
/// with both `|S>` and `det(U)|S>`.
pub fn check_unitary_invariance(
    d: usize,
    u: &[Vec<Complex64>],
    tolerance: f64,
) -> Result<InvarianceReport> {
    if !(2..=MAX_INVARIANCE_DIM).contains(&d) {
        return Err(Error::BudgetExceeded {
            what: "invariance check dimension",
            requested: d as u64,
            limit: MAX_INVARIANCE_DIM as u64,
            advice: "the check enumerates all d^d output components; use d in 2..=6",
        });
    }
    check_square(d, u)?;
    let unitarity = unitarity_deviation(u);
    if unitarity > tolerance {
        return Err(Error::NonUnitary {
            deviation: unitarity,
            tolerance,
        });
    }
    let det = complex_determinant(u);
    let norm = 1.0 / (factorial(d) as f64).sqrt();
    let perms = Permutation::all(d);
    let signs: Vec<f64> = perms.iter().map(|p| f64::from(levi_civita(p))).collect();

    let mut worst_state: f64 = 0.0;
    let mut worst_det: f64 = 0.0;
    let mut target = vec![0usize; d];
    for _ in 0..d.pow(d as u32) {
        // (U^{⊗d} S)_t = sum_pi sign(pi)/sqrt(d!) prod_i U[t_i][pi(i)]
        let mut image = Complex64::new(0.0, 0.0);
        for (p, &s) in perms.iter().zip(&signs) {
            let mut prod = Complex64::new(s, 0.0);
            for (i, &col) in p.image().iter().enumerate() {
                prod *= u[target[i]][col];
            }
            image += prod;
        }
        image *= norm;
        let reference = match Permutation::new(target.clone()) {
            Ok(p) => f64::from(levi_civita(&p)) * norm,
            Err(_) => 0.0,
        };
        worst_state = worst_state.max((image - reference).norm());
        worst_det = worst_det.max((image - det * reference).norm());
        advance_tuple(&mut target, d);
    }
    Ok(InvarianceReport {
        d,
        det_re: det.re,
        det_im: det.im,
        deviation_from_state: worst_state,
        deviation_from_det_state: worst_det,
        unitarity_deviation: unitarity,
        tolerance,
    })
}

/// Haar-style random unitary with determinant 1: complex Gaussian entries,
/// Gram-Schmidt on the columns, then a global phase `det^{-1/d}`.
#[allow(clippy::needless_range_loop)]
pub fn random_special_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|_| {
            (0..d)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(rng);
                    let im: f64 = StandardNormal.sample(rng);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();
    for j in 0..d {
        for k in 0..j {
            let proj: Complex64 = (0..d).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..d {
                let v = cols[k][i];
                cols[j][i] -= proj * v;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut u: ComplexMatrix = (0..d)
        .map(|i| (0..d).map(|j| cols[j][i]).collect())
        .collect();
    let det = complex_determinant(&u);
    let phase = Complex64::from_polar(1.0, -det.arg() / d as f64);
    for row in u.iter_mut() {
        for z in row.iter_mut() {
            *z *= phase;
        }
    }
    u
}

/// [`random_special_unitary`] driven by a ChaCha generator seeded with `seed`.
pub fn seeded_special_unitary(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_special_unitary(d, &mut rng)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactActionReport {
    pub d: usize,
    pub det: Rational,
    /// `U^{⊗d}|S> == det(U)|S>` exactly.
    pub equals_det_times_state: bool,
    /// `U^{⊗d}|S> == |S>` exactly.
    pub equals_state: bool,
}

/// Exact version of the tensor-power check for rational matrices, comparing
/// coefficients scaled by `sqrt(d!)`.
pub fn check_exact_tensor_action(
    state: &SupersingletState,
    u: &ExactMatrix,
) -> Result<ExactActionReport> {
    let d = state.d();
    if u.rows() != d || u.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: u.rows(),
        });
    }
    if d > MAX_INVARIANCE_DIM {
        return Err(Error::BudgetExceeded {
            what: "invariance check dimension",
            requested: d as u64,
            limit: MAX_INVARIANCE_DIM as u64,
            advice: "the check enumerates all d^d output components; use d in 2..=6",
        });
    }
    let det = u.determinant()?;
    let mut eq_det = true;
    let mut eq_state = true;
    let mut target = vec![0usize; d];
    for _ in 0..d.pow(d as u32) {
        let mut image = Rational::zero();
        for (p, s) in state.terms() {
            let mut prod = Rational::from(i64::from(s));
            for (i, &col) in p.image().iter().enumerate() {
                let x = u.get(target[i], col);
                if x.is_zero() {
                    prod = Rational::zero();
                    break;
                }
                prod = &prod * x;
            }
            image += prod;
        }
        let reference = Permutation::new(target.clone())
            .ok()
            .and_then(|p| state.coefficient(&p))
            .map_or_else(Rational::zero, |s| Rational::from(i64::from(s)));
        eq_det &= image == &det * &reference;
        eq_state &= image == reference;
        advance_tuple(&mut target, d);
    }
    Ok(ExactActionReport {
        d,
        det,
        equals_det_times_state: eq_det,
        equals_state: eq_state,
    })
}

/// `U e_j = signs[j] e_{perm(j)}`.
pub fn signed_permutation_matrix(perm: &Permutation, signs: &[i64]) -> Result<ExactMatrix> {
    let d = perm.len();
    if signs.len() != d || signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::InvalidArgument(
            "signs must be ±1, one per column".into(),
        ));
    }
    let mut m = ExactMatrix::zeros(d, d);
    for (j, &i) in perm.image().iter().enumerate() {
        m.set(i, j, Rational::from(signs[j]));
    }
    Ok(m)
}

/// `U` as a complex matrix.
pub fn to_complex(u: &ExactMatrix) -> ComplexMatrix {
    (0..u.rows())
        .map(|i| {
            (0..u.cols())
                .map(|j| Complex64::new(u.get(i, j).to_f64(), 0.0))
                .collect()
        })
        .collect()
}
