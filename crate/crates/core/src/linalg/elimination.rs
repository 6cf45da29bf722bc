//! Fraction-free row reduction over the integers.
//!
//! Every row is kept primitive (content 1) after each update, which keeps the
//! entries small for the sign-and-zero matrices this crate produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
struct PivotRow {
    pivot: usize,
    entries: Vec<BigInt>,
    support: Vec<usize>,
}

/// Incrementally built echelon basis of a row space.
///
/// Rows are reduced against the existing basis in insertion order. The pivot
/// of a new independent row is its first nonzero column, so for a fixed row
/// order the result is deterministic.
#[derive(Debug, Clone)]
pub struct IntegerEchelon {
    cols: usize,
    rows: Vec<PivotRow>,
    pivot_of_col: Vec<Option<usize>>,
}

impl IntegerEchelon {
    pub fn new(cols: usize) -> Self {
        IntegerEchelon {
            cols,
            rows: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the current basis; returns the reduced row.
    pub fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(row.len(), self.cols, "row length must equal column count");
        for basis in &self.rows {
            let f = &row[basis.pivot];
            if f.is_zero() {
                continue;
            }
            let p = &basis.entries[basis.pivot];
            let g = p.gcd(f);
            let scale_row = p / &g;
            let scale_basis = f / &g;
            if !scale_row.is_one() {
                for x in row.iter_mut().filter(|x| !x.is_zero()) {
                    *x *= &scale_row;
                }
            }
            for &c in &basis.support {
                row[c] -= &basis.entries[c] * &scale_basis;
            }
            divide_content(&mut row);
        }
        row
    }

    /// Insert a row; returns `true` when it was linearly independent of the
    /// rows inserted so far.
    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        let row = self.reduce(row);
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let support = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, _)| c)
            .collect();
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(PivotRow {
            pivot,
            entries: row,
            support,
        });
        true
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| self.pivot_of_col[c].is_some())
            .collect()
    }

    /// Reduced row echelon form with integer entries: rows sorted by pivot
    /// column, every pivot column zero outside its own row.
    pub fn reduced_rows(&self) -> Vec<(usize, Vec<BigInt>)> {
        let mut rows: Vec<(usize, Vec<BigInt>)> = self
            .rows
            .iter()
            .map(|r| (r.pivot, r.entries.clone()))
            .collect();
        rows.sort_by_key(|(p, _)| *p);
        for i in (0..rows.len()).rev() {
            let (lower, upper) = rows.split_at_mut(i);
            let (pivot, pivot_row) = (&upper[0].0, &upper[0].1);
            let p = &pivot_row[*pivot];
            for (_, row) in lower.iter_mut() {
                let f = row[*pivot].clone();
                if f.is_zero() {
                    continue;
                }
                let g = p.gcd(&f);
                let scale_row = p / &g;
                let scale_basis = &f / &g;
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x = &*x * &scale_row - y * &scale_basis;
                }
                divide_content(row);
            }
        }
        rows
    }

    /// Primitive integer basis of `{x : Mx = 0}`, one vector per free
    /// column in increasing column order.
    pub fn null_space(&self) -> Vec<Vec<BigInt>> {
        let reduced = self.reduced_rows();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| self.pivot_of_col[c].is_none()) {
            let lcm = reduced
                .iter()
                .filter(|(_, r)| !r[free].is_zero())
                .fold(BigInt::one(), |acc, (p, r)| acc.lcm(&r[*p]));
            let mut x = vec![BigInt::zero(); self.cols];
            x[free] = lcm.clone();
            for (p, r) in &reduced {
                if !r[free].is_zero() {
                    x[*p] = -(&r[free] * &lcm) / &r[*p];
                }
            }
            basis.push(super::vector::make_primitive(x));
        }
        basis
    }
}

fn divide_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut().filter(|x| !x.is_zero()) {
        *x = &*x / &g;
    }
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign.is_negative() {
        -det
    } else {
        det
    }
}
