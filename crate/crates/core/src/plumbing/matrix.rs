#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::VertexId;
use crate::{Error, Result};

/// Symmetric integer matrix indexed by vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    labels: Vec<VertexId>,
    rows: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureTriple {
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
}

impl SignatureTriple {
    pub fn sigma(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }
}

impl IntersectionMatrix {
    pub(crate) fn with_labels(labels: Vec<VertexId>, rows: Vec<Vec<i64>>) -> Self {
        IntersectionMatrix { labels, rows }
    }

    /// Wraps an arbitrary symmetric integer matrix, labelled `0..n`.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidGraph(format!("row {i} has length {}", r.len())));
            }
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidGraph(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        let labels = (0..n as u32).map(VertexId).collect();
        Ok(IntersectionMatrix { labels, rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// `xᵀ Q y` for integer vectors.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, row) in self.rows.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let ri: i128 = row.iter().zip(y).map(|(&q, &yj)| q as i128 * yj as i128).sum();
            acc += x[i] as i128 * ri;
        }
        acc
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Runs in `i128`
/// and redoes the computation in big integers if an intermediate overflows.
pub fn determinant(q: &IntersectionMatrix) -> BigInt {
    let m: Vec<Vec<i128>> = q
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(m) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(
            q.rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        let pivot = m[k][k];
        for i in k + 1..n {
            let mik = m[i][k];
            for j in k + 1..n {
                let t = m[i][j]
                    .checked_mul(pivot)?
                    .checked_sub(mik.checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    Some(sign * m[n - 1][n - 1])
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let mik = m[i][k].clone();
            for j in k + 1..n {
                let t = &m[i][j] * &pivot - &mik * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Symmetric congruence diagonalization over the rationals.
///
/// Returns the diagonal pivots and the size of the remaining zero block.
/// Pivots are chosen among nonzero diagonal entries with the fewest nonzero
/// off-diagonal entries, which on trees eliminates leaves first and creates
/// no fill-in. When every remaining diagonal entry vanishes, a row/column
/// with a nonzero off-diagonal entry is added into another to make one.
pub(crate) fn congruence_pivots(q: &IntersectionMatrix) -> (Vec<BigRational>, usize) {
    let n = q.dim();
    let mut a: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); n];
    for (i, row) in q.rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                a[i].insert(j, BigRational::from_integer(BigInt::from(x)));
            }
        }
    }
    let mut active: BTreeSet<usize> = (0..n).collect();
    let mut pivots = Vec::with_capacity(n);

    loop {
        let pick = active
            .iter()
            .filter(|&&i| a[i].contains_key(&i))
            .min_by_key(|&&i| a[i].len())
            .copied();
        let p = match pick {
            Some(p) => p,
            None => {
                // All remaining diagonal entries are zero.
                let Some((i, j)) = active.iter().find_map(|&i| {
                    a[i].keys().find(|&&j| j != i).map(|&j| (i, j))
                }) else {
                    break;
                };
                add_into(&mut a, i, j);
                i
            }
        };
        let d = a[p].remove(&p).unwrap();
        let nbrs: Vec<(usize, BigRational)> = std::mem::take(&mut a[p]).into_iter().collect();
        for (j, _) in &nbrs {
            a[*j].remove(&p);
        }
        for (j, aj) in &nbrs {
            for (k, ak) in &nbrs {
                if k < j {
                    continue;
                }
                let delta = aj * ak / &d;
                update(&mut a, *j, *k, -delta);
            }
        }
        active.remove(&p);
        pivots.push(d);
    }
    (pivots, active.len())
}

fn update(a: &mut [BTreeMap<usize, BigRational>], j: usize, k: usize, delta: BigRational) {
    let mut set = |r: usize, c: usize, delta: &BigRational| {
        let e = a[r].entry(c).or_insert_with(BigRational::zero);
        *e += delta;
        if e.is_zero() {
            a[r].remove(&c);
        }
    };
    set(j, k, &delta);
    if j != k {
        set(k, j, &delta);
    }
}

/// Congruence `e_i ← e_i + e_j` on a matrix whose diagonal entries at `i`, `j`
/// are zero and `a_ij ≠ 0`; afterwards `a_ii = 2 a_ij ≠ 0`.
fn add_into(a: &mut [BTreeMap<usize, BigRational>], i: usize, j: usize) {
    let aij = a[i].get(&j).cloned().unwrap_or_else(BigRational::zero);
    let ajj = a[j].get(&j).cloned().unwrap_or_else(BigRational::zero);
    let aii = a[i].get(&i).cloned().unwrap_or_else(BigRational::zero);
    let row_j: Vec<(usize, BigRational)> = a[j]
        .iter()
        .filter(|(&k, _)| k != i && k != j)
        .map(|(&k, v)| (k, v.clone()))
        .collect();
    for (k, v) in row_j {
        update(a, i, k, v);
    }
    // entry (i, j) gains a_jj
    update(a, i, j, ajj.clone());
    let new_ii = aii.clone() + &aij + &aij + &ajj;
    update(a, i, i, new_ii - aii);
}

/// Exact inertia `(b₊, b₋, b₀)`.
pub fn signature(q: &IntersectionMatrix) -> SignatureTriple {
    let (pivots, b_zero) = congruence_pivots(q);
    let b_plus = pivots.iter().filter(|p| p.is_positive()).count();
    SignatureTriple {
        b_plus,
        b_minus: pivots.len() - b_plus,
        b_zero,
    }
}

/// Dimension of the kernel of `Q mod 2`.
pub fn gf2_nullity(q: &IntersectionMatrix) -> usize {
    let n = q.dim();
    let rows: Vec<Vec<u64>> = q
        .rows
        .iter()
        .map(|r| {
            let mut bits = vec![0u64; n.div_ceil(64)];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 != 0 {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    n - crate::spin::gf2_rank(rows, n)
}
