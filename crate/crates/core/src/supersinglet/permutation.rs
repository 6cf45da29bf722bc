use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection on `{0, ..., d-1}`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(image));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Number of pairs `i < j` with `image[i] > image[j]`.
    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// All permutations of `{0..d-1}` in lexicographic order.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..d).collect();
        let mut out = vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }

    /// Position in lexicographic order (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let p = &self.0;
        let n = p.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| p[j] < p[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Swap the values at positions `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Permutation {
        let mut p = self.0.clone();
        p.swap(i, j);
        Permutation(p)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// `+1` for even permutations, `-1` for odd ones.
pub fn levi_civita(p: &Permutation) -> i8 {
    if p.inversions().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// Digits run together when `d <= 10` (`"0123"`), comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.len() <= 10;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
