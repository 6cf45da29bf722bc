use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ks::{Context, VectorSet};
use crate::linalg::make_primitive;
use crate::supersinglet::{advance_tuple, factorial, Permutation};

/// Why the unknowns are indexed by permutations only.
#[derive(Debug, Clone, Serialize)]
pub struct SupportRestriction {
    pub d: usize,
    /// `d!`, one coefficient per permutation.
    pub variables: usize,
    /// Indices of `e_0, ..., e_{d-1}` in the set.
    pub canonical_context: Vec<usize>,
    /// `d^d - d!` product-basis components forced to zero.
    pub excluded_components: u64,
    pub rationale: &'static str,
}

/// A perfect strategy never produces two equal outcomes in the canonical
/// context, so every coefficient outside the permutation tuples vanishes.
pub fn support_restriction_constraints(set: &VectorSet) -> Result<SupportRestriction> {
    let d = set.dim();
    let canonical = set
        .canonical_basis_indices()
        .ok_or(Error::CanonicalBasisMissing)?;
    Ok(SupportRestriction {
        d,
        variables: factorial(d) as usize,
        canonical_context: canonical,
        excluded_components: (d as u64).pow(d as u32) - factorial(d),
        rationale: "measuring the canonical basis on all parties must give distinct outcomes, \
                    so the state is supported on tuples that are permutations of 0..d",
    })
}

/// Where a constraint row came from: context `context` of the system and an
/// outcome tuple of vertex indices that is not a permutation of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub context: usize,
    pub tuple: Vec<usize>,
}

/// `sum_pi row[pi] * alpha_pi = 0`, primitive, with every tuple producing a
/// multiple of it.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintRow {
    #[serde(serialize_with = "serialize_sparse")]
    pub coefficients: Vec<BigInt>,
    pub provenance: Vec<Provenance>,
}

fn serialize_sparse<S: serde::Serializer>(
    row: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(None)?;
    for (c, x) in row.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        map.serialize_entry(&c.to_string(), &x.to_string())?;
    }
    map.end()
}

/// Integer rows of the vectors, scaled to primitive form.
fn integer_rows(set: &VectorSet, members: &[usize]) -> Vec<Vec<BigInt>> {
    members
        .iter()
        .map(|&v| {
            set.vector(v)
                .primitive_integer()
                .expect("set vectors are nonzero")
        })
        .collect()
}

fn raw_row(perms: &[Permutation], rows: &[&Vec<BigInt>]) -> Vec<BigInt> {
    perms
        .iter()
        .map(|p| {
            let mut prod = BigInt::one();
            for (r, &col) in rows.iter().zip(p.image()) {
                let x = &r[col];
                if x.is_zero() {
                    return BigInt::zero();
                }
                prod *= x;
            }
            prod
        })
        .collect()
}

/// The unscaled row `r[pi] = prod_i (v_{a_i})_{pi(i)}` for one outcome tuple,
/// with each vector taken as its primitive integer ray.
pub fn replay_row(set: &VectorSet, tuple: &[usize]) -> Vec<BigInt> {
    let d = set.dim();
    let perms = Permutation::all(d);
    let ints = integer_rows(set, tuple);
    raw_row(&perms, &ints.iter().collect::<Vec<_>>())
}

/// Rows for every outcome tuple of `context` that is not a permutation of
/// it. Zero rows are dropped and proportional rows merged.
pub fn pqs_constraint_rows(
    set: &VectorSet,
    context: &Context,
    context_id: usize,
) -> Result<Vec<ConstraintRow>> {
    let mut out = Vec::new();
    merge_rows(
        &mut out,
        &mut HashMap::new(),
        generate_rows(set, context)?,
        context_id,
    );
    Ok(out)
}

/// Primitive nonzero rows paired with their outcome tuples, in tuple order.
pub(crate) fn generate_rows(
    set: &VectorSet,
    context: &Context,
) -> Result<Vec<(Vec<usize>, Vec<BigInt>)>> {
    let d = set.dim();
    if context.len() != d {
        return Err(Error::InvalidContext {
            context: context.members().to_vec(),
            reason: format!("expected {d} members"),
        });
    }
    let perms = Permutation::all(d);
    let members = context.members();
    let ints = integer_rows(set, members);

    let total = d.pow(d as u32);
    let mut tuples = Vec::with_capacity(total);
    let mut t = vec![0usize; d];
    for _ in 0..total {
        let mut seen = vec![false; d];
        if !t.iter().all(|&i| !std::mem::replace(&mut seen[i], true)) {
            tuples.push(t.clone());
        }
        advance_tuple(&mut t, d);
    }
    let generated: Vec<(Vec<usize>, Vec<BigInt>)> = tuples
        .into_par_iter()
        .filter_map(|t| {
            let rows: Vec<&Vec<BigInt>> = t.iter().map(|&i| &ints[i]).collect();
            let row = raw_row(&perms, &rows);
            if row.iter().all(Zero::is_zero) {
                None
            } else {
                Some((t.iter().map(|&i| members[i]).collect(), make_primitive(row)))
            }
        })
        .collect();
    Ok(generated)
}

/// Append rows, merging those equal to an existing row.
pub(crate) fn merge_rows(
    out: &mut Vec<ConstraintRow>,
    index: &mut HashMap<Vec<BigInt>, usize>,
    rows: Vec<(Vec<usize>, Vec<BigInt>)>,
    context_id: usize,
) {
    for (tuple, row) in rows {
        let provenance = Provenance {
            context: context_id,
            tuple,
        };
        match index.get(&row) {
            Some(&i) => out[i].provenance.push(provenance),
            None => {
                index.insert(row.clone(), out.len());
                out.push(ConstraintRow {
                    coefficients: row,
                    provenance: vec![provenance],
                });
            }
        }
    }
}
