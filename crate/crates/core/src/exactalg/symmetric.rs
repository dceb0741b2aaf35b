use std::collections::BTreeSet;

use num_traits::One;

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::partitions::{enumerate_partitions, Partition};

/// `["x1", …, "xr"]`.
pub fn x_vars(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("x{}", i)).collect()
}

/// Distinct rearrangements of a sequence.
fn distinct_permutations(v: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut cur = v.to_vec();
    cur.sort_unstable();
    loop {
        out.insert(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The monomial symmetric polynomial `m_mu(vars^power)`.
///
/// Zero when `mu` has more parts than there are variables.
pub fn monomial_symmetric(mu: &Partition, vars: &[String], power: u32) -> MultiPoly {
    let r = vars.len();
    if mu.len() > r {
        return MultiPoly::zero_in(vars.to_vec());
    }
    let base: Vec<u32> = mu.padded(r).iter().map(|&p| p as u32 * power).collect();
    MultiPoly::from_terms(vars.to_vec(), distinct_permutations(&base).into_iter().map(|e| (e, Rational::one())))
        .expect("well formed terms")
}

/// `m_mu(x1², …, xr²)` for all `|mu| ≤ n`, in graded-lex partition order.
pub fn even_symmetrize_basis(r: usize, n: usize) -> Vec<MultiPoly> {
    let vars = x_vars(r);
    enumerate_partitions(n, r).iter().map(|mu| monomial_symmetric(mu, &vars, 2)).collect()
}
