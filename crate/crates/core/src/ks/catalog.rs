//! Built-in vector sets.

use super::{Context, VectorSet};
use crate::error::{Error, Result};
use crate::linalg::ExactVector;

/// Labels of the 18-vector set, in order.
pub const CEG18_LABELS: [&str; 18] = [
    "1", "2", "3", "4", "5", "6", "7", "8", "9", "A", "B", "C", "D", "E", "F", "G", "H", "I",
];

const CEG18: [[i64; 4]; 18] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [1, -1, 0, 0],
    [1, 1, -1, -1],
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
    [1, 0, 1, 0],
    [1, 1, -1, 1],
    [-1, 1, 1, 1],
    [1, 1, 1, -1],
    [1, 0, 0, 1],
    [0, 1, -1, 0],
    [0, 1, 1, 0],
    [0, 0, 0, 1],
];

/// The nine tetrads, by index; every vector lies in exactly two of them.
const CEG18_TETRADS: [[usize; 4]; 9] = [
    [0, 1, 2, 3],
    [0, 15, 16, 17],
    [1, 8, 10, 17],
    [2, 4, 11, 13],
    [3, 4, 5, 6],
    [5, 7, 14, 16],
    [6, 7, 8, 9],
    [9, 10, 11, 12],
    [12, 13, 14, 15],
];

/// The 24-ray set in dimension 4, `v0..v23` (unnormalized).
const PERES24: [[i64; 4]; 24] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, -1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [1, 0, 1, 0],
    [1, 0, -1, 0],
    [0, 1, 0, 1],
    [0, 1, 0, -1],
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, 1, 1, -1],
    [1, 1, -1, 1],
    [1, -1, 1, 1],
    [-1, 1, 1, 1],
    [1, 0, 0, 1],
    [1, 0, 0, -1],
    [0, 1, 1, 0],
    [0, 1, -1, 0],
];

/// Conway-Kochen 31-ray set in dimension 3. `v0..v2` are the canonical basis
/// and `v3..v6` are `(0,1,-1), (0,1,1), (1,0,-1), (1,0,1)`, so that
/// `{0,3,4}` and `{1,5,6}` are triads; the rest follow in lexicographic order.
const CK31: [[i64; 3]; 31] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [0, 1, -1],
    [0, 1, 1],
    [1, 0, -1],
    [1, 0, 1],
    [0, 1, -2],
    [0, 1, 2],
    [0, 2, -1],
    [0, 2, 1],
    [1, -1, -2],
    [1, -1, -1],
    [1, -1, 0],
    [1, -1, 1],
    [1, -1, 2],
    [1, 0, -2],
    [1, 0, 2],
    [1, 1, -2],
    [1, 1, -1],
    [1, 1, 0],
    [1, 1, 1],
    [1, 1, 2],
    [1, 2, -1],
    [1, 2, 0],
    [1, 2, 1],
    [2, -1, -1],
    [2, -1, 0],
    [2, -1, 1],
    [2, 0, -1],
    [2, 0, 1],
];

fn to_rows<const D: usize>(vs: &[[i64; D]]) -> Vec<Vec<i64>> {
    vs.iter().map(|v| v.to_vec()).collect()
}

fn indexed_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// The 18-vector nine-tetrad set with its tetrads as contexts.
pub fn ceg18() -> (VectorSet, Vec<Context>) {
    let labels = CEG18_LABELS.iter().map(|s| s.to_string()).collect();
    let set =
        VectorSet::from_int_vectors(4, &to_rows(&CEG18), Some(labels)).expect("valid catalog set");
    let contexts = CEG18_TETRADS
        .iter()
        .map(|t| Context::new(t.to_vec(), &set).expect("catalog tetrads are bases"))
        .collect();
    (set, contexts)
}

pub fn peres24() -> VectorSet {
    VectorSet::from_int_vectors(4, &to_rows(&PERES24), Some(indexed_labels(24)))
        .expect("valid catalog set")
}

pub fn conway_kochen31() -> VectorSet {
    VectorSet::from_int_vectors(3, &to_rows(&CK31), Some(indexed_labels(31)))
        .expect("valid catalog set")
}

/// Union over `k in 0..=d-4` of the 24-ray set embedded in coordinates
/// `k..k+4`, deduplicated as rays (first occurrence wins).
pub fn merged_peres(d: usize) -> Result<VectorSet> {
    if d < 4 {
        return Err(Error::InvalidArgument(format!(
            "merged set needs d >= 4, got {d}"
        )));
    }
    let mut set = VectorSet::new(d, Vec::new(), Some(Vec::new()))?;
    for k in 0..=d - 4 {
        for (i, v) in PERES24.iter().enumerate() {
            let mut embedded = vec![0i64; d];
            embedded[k..k + 4].copy_from_slice(v);
            set.push_ray(ExactVector::from_ints(&embedded), |_| format!("v{i}^{k}"));
        }
    }
    Ok(set)
}

/// Window `k` copy of the vector `v_i` of the 24-ray set, embedded in
/// dimension `d`.
pub fn embedded_peres_vector(d: usize, k: usize, i: usize) -> ExactVector {
    let mut embedded = vec![0i64; d];
    embedded[k..k + 4].copy_from_slice(&PERES24[i]);
    ExactVector::from_ints(&embedded)
}

/// A named built-in set, optionally with a fixed context list.
#[derive(Debug, Clone)]
pub struct Builtin {
    pub name: String,
    pub set: VectorSet,
    pub contexts: Option<Vec<Context>>,
}

pub const BUILTIN_NAMES: [&str; 4] = ["ceg18", "peres24", "ck31", "merged-peres-<d>"];

/// Look up `ceg18`, `peres24`, `ck31` or `merged-peres-<d>`.
pub fn builtin(name: &str) -> Result<Builtin> {
    let (set, contexts) = match name {
        "ceg18" => {
            let (s, c) = ceg18();
            (s, Some(c))
        }
        "peres24" => (peres24(), None),
        "ck31" => (conway_kochen31(), None),
        other => match other.strip_prefix("merged-peres-").map(str::parse::<usize>) {
            Some(Ok(d)) => (merged_peres(d)?, None),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown builtin set {other:?}; expected one of {}",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        },
    };
    Ok(Builtin {
        name: name.to_string(),
        set,
        contexts,
    })
}
