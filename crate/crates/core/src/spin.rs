//! Characteristic vectors and the μ̄-invariant.
//!
//! A spin structure on `∂P(Γ)` corresponds to a `{0,1}` vector `w` with
//! `Q w ≡ diag(Q) (mod 2)`; then `μ̄ = (σ(Q) − wᵀQw) / 8`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::plumbing::{determinant, signature, star_plumbing, IntersectionMatrix, PlumbingGraph};
use crate::rational::{int, rem_euclid};
use crate::{Error, Execution, Rational, Result, SeifertInvariants};

/// `ε_v ∈ {0,1}` per vertex, in ascending label order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacteristicVector {
    bits: Vec<bool>,
}

impl CharacteristicVector {
    pub fn new(bits: Vec<bool>) -> Self {
        CharacteristicVector { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Indices with `ε_v = 1`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    pub fn to_bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    fn as_ints(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| b as i64).collect()
    }
}

impl fmt::Display for CharacteristicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl Serialize for CharacteristicVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bitstring())
    }
}

impl<'de> Deserialize<'de> for CharacteristicVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_bitstring(&s).ok_or_else(|| serde::de::Error::custom("expected a bitstring"))
    }
}

type BitRow = Vec<u64>;

fn bit(row: &BitRow, j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

fn flip(row: &mut BitRow, j: usize) {
    row[j / 64] ^= 1 << (j % 64);
}

fn xor_into(dst: &mut BitRow, src: &BitRow) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Reduced row echelon form over GF(2) on the first `cols` columns.
/// Returns the pivot column of each nonzero row, rows reordered in place.
fn rref(rows: &mut [BitRow], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && bit(row, c) {
                xor_into(row, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn gf2_rank(mut rows: Vec<BitRow>, cols: usize) -> usize {
    rref(&mut rows, cols).len()
}

pub fn is_characteristic(q: &IntersectionMatrix, w: &CharacteristicVector) -> bool {
    w.len() == q.dim()
        && q.rows().iter().enumerate().all(|(i, row)| {
            let s: i64 = row
                .iter()
                .zip(w.bits())
                .filter(|(_, &b)| b)
                .map(|(&x, _)| x)
                .sum();
            (s - row[i]).rem_euclid(2) == 0
        })
}

/// Every `{0,1}` solution of `Q x ≡ diag(Q) (mod 2)`, sorted
/// lexicographically in vertex order.
pub fn characteristic_solutions(q: &IntersectionMatrix) -> Result<Vec<CharacteristicVector>> {
    characteristic_solutions_with(q, Execution::default())
}

pub fn characteristic_solutions_with(
    q: &IntersectionMatrix,
    exec: Execution,
) -> Result<Vec<CharacteristicVector>> {
    if determinant(q).is_zero() {
        return Err(Error::Degenerate);
    }
    let n = q.dim();
    let words = (n + 1).div_ceil(64);
    let mut rows: Vec<BitRow> = q
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut b = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 != 0 {
                    flip(&mut b, j);
                }
            }
            if r[i] & 1 != 0 {
                flip(&mut b, n);
            }
            b
        })
        .collect();
    let pivots = rref(&mut rows, n);
    // The diagonal of a symmetric matrix always lies in its GF(2) column space.
    debug_assert!(rows[pivots.len()..].iter().all(|r| !bit(r, n)));

    let mut particular = vec![false; n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = bit(&rows[r], n);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel: Vec<Vec<bool>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![false; n];
            v[f] = true;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = bit(&rows[r], f);
            }
            v
        })
        .collect();

    assert!(kernel.len() < 63, "too many spin structures to enumerate");
    let masks: Vec<u64> = (0..1u64 << kernel.len()).collect();
    let mut out = exec.map(masks, |mask| {
        let mut v = particular.clone();
        for (k, basis) in kernel.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for (x, &b) in v.iter_mut().zip(basis) {
                    *x ^= b;
                }
            }
        }
        CharacteristicVector::new(v)
    });
    out.sort();
    Ok(out)
}

fn mubar_with_sigma(q: &IntersectionMatrix, sigma: i64, w: &CharacteristicVector) -> Result<Rational> {
    if !is_characteristic(q, w) {
        return Err(Error::NotCharacteristic);
    }
    let x = w.as_ints();
    let ww = q.pairing(&x, &x);
    Ok(Rational::new(sigma as i128 - ww, 8))
}

/// `μ̄ = (σ(P(Γ)) − w·w) / 8` for a characteristic `w`.
pub fn mubar(g: &PlumbingGraph, w: &CharacteristicVector) -> Result<Rational> {
    let q = g.intersection_matrix();
    mubar_with_sigma(&q, signature(&q).sigma(), w)
}

/// μ̄ for every spin structure of a plumbing graph, keyed by characteristic vector.
pub fn mubar_graph(g: &PlumbingGraph) -> Result<BTreeMap<CharacteristicVector, Rational>> {
    let q = g.intersection_matrix();
    let sols = characteristic_solutions(&q)?;
    let sigma = signature(&q).sigma();
    sols.into_iter()
        .map(|w| mubar_with_sigma(&q, sigma, &w).map(|m| (w, m)))
        .collect()
}

/// μ̄ for every spin structure of `Y`, keyed by characteristic vector on the
/// canonical star-shaped plumbing.
pub fn mubar_all(si: &SeifertInvariants) -> Result<BTreeMap<CharacteristicVector, Rational>> {
    mubar_graph(&star_plumbing(si)?)
}

/// Sorted multiset of μ̄ values over all spin structures.
pub fn mubar_multiset(g: &PlumbingGraph) -> Result<Vec<Rational>> {
    let mut v: Vec<Rational> = mubar_graph(g)?.into_values().collect();
    v.sort();
    Ok(v)
}

/// μ̄ of the `index`-th spin structure (in characteristic-vector order).
pub fn mubar_at(si: &SeifertInvariants, index: usize) -> Result<(CharacteristicVector, Rational)> {
    let all = mubar_all(si)?;
    let count = all.len();
    all.into_iter()
        .nth(index)
        .ok_or(Error::SpinIndexOutOfRange { index, count })
}

/// The Rokhlin invariant: μ̄ reduced into `[0, 2)`.
pub fn rokhlin(mu: &Rational) -> Rational {
    rem_euclid(mu, &int(2))
}
