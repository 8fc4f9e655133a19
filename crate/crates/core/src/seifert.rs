//! Seifert invariants `{b, (a_1,b_1), …, (a_n,b_n)}` of a Seifert fibration
//! over a genus-0 base orbifold.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{Error, Rational, Result};

/// Normalized Seifert invariants: `0 < b_i < a_i`, `gcd(a_i, b_i) = 1`.
///
/// The degree `b + Σ b_i/a_i` may be zero; operations that need a rational
/// homology sphere check it themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertInvariants {
    b: i64,
    pairs: Vec<(i64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeSign {
    Positive,
    Negative,
}

/// Geometric case distinctions used by the refined inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFlags {
    pub has_even_multiplicity: bool,
    pub deg_sign: DegreeSign,
    pub is_spherical: bool,
    pub is_integral_homology_sphere: bool,
    /// All `a_i` odd and `Σ b_i ≡ b (mod 2)`.
    pub all_odd_with_parity_match: bool,
}

/// A spin structure in the surgery description: values of a homomorphism
/// `c: H_1(S³ \ link; Z) → Z/2` on the general fiber `h` and the meridians `g_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeifertSpinAssignment {
    pub c_h: bool,
    pub c_g: Vec<bool>,
}

impl SeifertInvariants {
    /// Brings raw pairs into normalized form, moving integer parts of
    /// `b_i / a_i` into `b`. The degree is unchanged.
    pub fn normalize(b: i64, raw_pairs: &[(i64, i64)]) -> Result<Self> {
        let mut central = b;
        let mut pairs = Vec::with_capacity(raw_pairs.len());
        for &(a, bi) in raw_pairs {
            if a <= 1 {
                return Err(Error::BadMultiplicity(a));
            }
            if a.gcd(&bi) != 1 {
                return Err(Error::NonCoprime { a, b: bi });
            }
            let (q, r) = (bi.div_euclid(a), bi.rem_euclid(a));
            central = central
                .checked_add(q)
                .ok_or(Error::Overflow("normalize"))?;
            pairs.push((a, r));
        }
        Ok(SeifertInvariants { b: central, pairs })
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs.iter().map(|&(a, _)| a)
    }

    fn product(&self) -> i128 {
        self.pairs
            .iter()
            .try_fold(1i128, |acc, &(a, _)| acc.checked_mul(a as i128))
            .expect("product of multiplicities overflows i128")
    }

    /// `a_1···a_n · deg` as an exact integer.
    fn scaled_degree(&self) -> i128 {
        let prod = self.product();
        let mut acc = (self.b as i128) * prod;
        for &(a, bi) in &self.pairs {
            acc += (bi as i128) * (prod / a as i128);
        }
        acc
    }

    /// `deg Y = b + Σ b_i/a_i`.
    pub fn degree(&self) -> Rational {
        Rational::new(self.scaled_degree(), self.product())
    }

    pub fn is_rational_homology_sphere(&self) -> bool {
        !self.scaled_degree().is_zero()
    }

    fn require_rhs(&self) -> Result<()> {
        if self.is_rational_homology_sphere() {
            Ok(())
        } else {
            Err(Error::NotRationalHomologySphere)
        }
    }

    /// `|H_1(Y; Z)| = |a_1···a_n · deg|`.
    pub fn h1_order(&self) -> Result<u128> {
        self.require_rhs()?;
        Ok(self.scaled_degree().unsigned_abs())
    }

    /// The normalized invariants of `-Y`: `{-b-n, (a_i, a_i-b_i)}`.
    pub fn reverse_orientation(&self) -> Self {
        SeifertInvariants {
            b: -self.b - self.pairs.len() as i64,
            pairs: self.pairs.iter().map(|&(a, bi)| (a, a - bi)).collect(),
        }
    }

    /// The Brieskorn sphere `Σ(a_1,…,a_n)`: pairwise coprime multiplicities and
    /// `deg = -1/(a_1···a_n)`.
    pub fn brieskorn(mults: &[i64]) -> Result<Self> {
        for &a in mults {
            if a <= 1 {
                return Err(Error::BadMultiplicity(a));
            }
        }
        for (i, &a) in mults.iter().enumerate() {
            for &c in &mults[i + 1..] {
                if a.gcd(&c) != 1 {
                    return Err(Error::NotCoprime(a, c));
                }
            }
        }
        let prod: i128 = mults
            .iter()
            .try_fold(1i128, |acc, &a| acc.checked_mul(a as i128))
            .ok_or(Error::Overflow("brieskorn"))?;
        // Solve (prod/a_i) * b_i ≡ -1 (mod a_i) for each i; then b is forced.
        let mut pairs = Vec::with_capacity(mults.len());
        let mut acc: i128 = 0;
        for &a in mults {
            let a = a as i128;
            let m = prod / a;
            let inv = mod_inverse(m.rem_euclid(a), a);
            let bi = (-inv).rem_euclid(a);
            acc += m * bi;
            pairs.push((a as i64, bi as i64));
        }
        let b = (-1 - acc) / prod;
        debug_assert_eq!(b * prod + acc, -1);
        Ok(SeifertInvariants {
            b: b as i64,
            pairs,
        })
    }

    /// All solutions of
    /// `a_i c(g_i) + b_i c(h) ≡ a_i b_i`, `Σ c(g_i) + b c(h) ≡ b (mod 2)`.
    pub fn spin_structures(&self) -> Result<Vec<SeifertSpinAssignment>> {
        self.require_rhs()?;
        let mut out = Vec::new();
        for c_h in [false, true] {
            let h = c_h as i64;
            // Per pair: odd a_i forces c(g_i); even a_i (so b_i odd) needs c(h) = 0
            // and leaves c(g_i) free.
            let mut forced = vec![None; self.pairs.len()];
            let mut ok = true;
            for (i, &(a, bi)) in self.pairs.iter().enumerate() {
                if a % 2 != 0 {
                    forced[i] = Some((a * bi - bi * h).rem_euclid(2) == 1);
                } else if (bi * h).rem_euclid(2) != 0 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let free: Vec<usize> = (0..forced.len()).filter(|&i| forced[i].is_none()).collect();
            for mask in 0u64..(1u64 << free.len()) {
                let c_g: Vec<bool> = (0..forced.len())
                    .map(|i| match forced[i] {
                        Some(v) => v,
                        None => {
                            let k = free.iter().position(|&j| j == i).unwrap();
                            mask >> k & 1 == 1
                        }
                    })
                    .collect();
                let sum = c_g.iter().filter(|&&x| x).count() as i64 + self.b * h;
                if (sum - self.b).rem_euclid(2) == 0 {
                    out.push(SeifertSpinAssignment {
                        c_h,
                        c_g,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn case_flags(&self) -> Result<CaseFlags> {
        self.require_rhs()?;
        let has_even_multiplicity = self.multiplicities().any(|a| a % 2 == 0);
        let deg_sign = if self.scaled_degree().is_positive() {
            DegreeSign::Positive
        } else {
            DegreeSign::Negative
        };
        let bsum: i64 = self.pairs.iter().map(|&(_, bi)| bi).sum();
        let all_odd_with_parity_match =
            !has_even_multiplicity && (bsum - self.b).rem_euclid(2) == 0;
        Ok(CaseFlags {
            has_even_multiplicity,
            deg_sign,
            is_spherical: self.is_spherical(),
            is_integral_homology_sphere: self.h1_order()? == 1,
            all_odd_with_parity_match,
        })
    }

    /// Finite fundamental group: at most two exceptional fibers, or three with
    /// multiplicities {2,2,k}, {2,3,3}, {2,3,4}, {2,3,5}.
    fn is_spherical(&self) -> bool {
        let mut m: Vec<i64> = self.multiplicities().collect();
        m.sort_unstable();
        matches!(
            m.as_slice(),
            [] | [_] | [_, _] | [2, 2, _] | [2, 3, 3] | [2, 3, 4] | [2, 3, 5]
        )
    }
}

fn mod_inverse(x: i128, m: i128) -> i128 {
    let eg = x.extended_gcd(&m);
    debug_assert_eq!(eg.gcd, 1);
    eg.x.rem_euclid(m)
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.b)?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            write!(f, "{}{a}/{b}", if i == 0 { ";" } else { "," })?;
        }
        Ok(())
    }
}

impl fmt::Display for DegreeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeSign::Positive => "positive",
            DegreeSign::Negative => "negative",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn si(b: i64, pairs: &[(i64, i64)]) -> SeifertInvariants {
        SeifertInvariants::normalize(b, pairs).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(si(0, &[(2, 3)]), si(1, &[(2, 1)]));
        assert_eq!(si(1, &[(2, 1)]).b(), 1);
        let s = si(-1, &[(2, 1), (3, 1), (7, 1)]);
        assert_eq!(s.b(), -1);
        assert_eq!(s.pairs(), &[(2, 1), (3, 1), (7, 1)]);
        let s = si(-3, &[(5, 14)]);
        assert_eq!((s.b(), s.pairs()), (-1, &[(5, 4)][..]));
        assert_eq!(s.degree(), int(-3) + frac(14, 5));
        // negative raw b_i
        let s = si(0, &[(3, -1)]);
        assert_eq!((s.b(), s.pairs()), (-1, &[(3, 2)][..]));
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            SeifertInvariants::normalize(0, &[(4, 2)]),
            Err(Error::NonCoprime { a: 4, b: 2 })
        );
        assert_eq!(
            SeifertInvariants::normalize(0, &[(1, 1)]),
            Err(Error::BadMultiplicity(1))
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(si(-2, &[(2, 1), (3, 2), (5, 4)]).degree(), frac(-1, 30));
        assert_eq!(si(-1, &[(2, 1), (3, 1), (7, 1)]).degree(), frac(-1, 42));
        let s = si(0, &[]);
        assert_eq!(s.degree(), int(0));
        assert!(!s.is_rational_homology_sphere());
    }

    #[test]
    fn h1_examples() {
        assert_eq!(si(-1, &[(2, 1), (3, 1), (7, 1)]).h1_order(), Ok(1));
        assert_eq!(si(-2, &[]).h1_order(), Ok(2));
        assert_eq!(si(-1, &[(3, 1), (3, 1)]).h1_order(), Ok(3));
        assert_eq!(
            si(-1, &[(2, 1), (2, 1)]).h1_order(),
            Err(Error::NotRationalHomologySphere)
        );
    }

    #[test]
    fn reverse_examples() {
        let p = si(-2, &[(2, 1), (3, 2), (5, 4)]);
        let r = p.reverse_orientation();
        assert_eq!((r.b(), r.pairs()), (-1, &[(2, 1), (3, 1), (5, 1)][..]));
        assert_eq!(si(-2, &[]).reverse_orientation(), si(2, &[]));
        assert_eq!(r.reverse_orientation(), p);
    }

    #[test]
    fn brieskorn_examples() {
        let s = SeifertInvariants::brieskorn(&[2, 3, 5]).unwrap();
        assert_eq!(s, si(-2, &[(2, 1), (3, 2), (5, 4)]));
        let s = SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap();
        assert_eq!(s, si(-1, &[(2, 1), (3, 1), (7, 1)]));
        let s = SeifertInvariants::brieskorn(&[2, 3, 11]).unwrap();
        assert_eq!(s.degree(), frac(-1, 66));
        assert!(s.pairs().iter().all(|&(a, b)| 0 < b && b < a));
        assert_eq!(
            SeifertInvariants::brieskorn(&[2, 4, 7]),
            Err(Error::NotCoprime(2, 4))
        );
    }

    #[test]
    fn seifert_spin_examples() {
        let s = si(-1, &[(2, 1), (3, 1), (7, 1)]);
        assert_eq!(s.spin_structures().unwrap().len(), 1);
        let l = si(-2, &[]);
        let sp = l.spin_structures().unwrap();
        assert_eq!(sp.len(), 2);
        assert!(!sp[0].c_h);
        assert!(sp[1].c_h);
        let bad = si(-1, &[(2, 1), (2, 1)]);
        assert_eq!(bad.spin_structures(), Err(Error::NotRationalHomologySphere));
    }

    #[test]
    fn case_flag_examples() {
        let p = si(-2, &[(2, 1), (3, 2), (5, 4)]).case_flags().unwrap();
        assert!(p.is_spherical && p.has_even_multiplicity && p.is_integral_homology_sphere);
        assert_eq!(p.deg_sign, DegreeSign::Negative);

        let s = si(-1, &[(2, 1), (3, 1), (7, 1)]).case_flags().unwrap();
        assert!(!s.is_spherical && s.has_even_multiplicity);
        assert_eq!(s.deg_sign, DegreeSign::Negative);

        let l = si(-1, &[(3, 1), (3, 1)]).case_flags().unwrap();
        assert!(!l.all_odd_with_parity_match);
        assert!(!l.has_even_multiplicity);
        assert!(l.is_spherical);

        let m = si(0, &[(3, 1), (5, 1)]).case_flags().unwrap();
        assert!(m.all_odd_with_parity_match);
        assert_eq!(m.deg_sign, DegreeSign::Positive);
    }

    #[test]
    fn display_roundtrip_form() {
        assert_eq!(si(-1, &[(2, 1), (3, 1), (7, 1)]).to_string(), "-1;2/1,3/1,7/1");
        assert_eq!(si(-2, &[]).to_string(), "-2");
    }

    fn raw_pair() -> impl Strategy<Value = (i64, i64)> {
        (2i64..40, -100i64..100).prop_filter("coprime", |(a, b)| a.gcd(b) == 1)
    }

    proptest! {
        #[test]
        fn normalize_idempotent_and_degree_preserving(
            b in -20i64..20, raw in prop::collection::vec(raw_pair(), 0..5)
        ) {
            let s = SeifertInvariants::normalize(b, &raw).unwrap();
            let mut expected = int(b as i128);
            for &(a, bi) in &raw {
                expected += frac(bi as i128, a as i128);
            }
            prop_assert_eq!(s.degree(), expected);
            let again = SeifertInvariants::normalize(s.b(), s.pairs()).unwrap();
            prop_assert_eq!(&again, &s);
            let r = s.reverse_orientation();
            prop_assert_eq!(r.degree(), -s.degree());
            prop_assert_eq!(r.reverse_orientation(), s.clone());
            if s.is_rational_homology_sphere() {
                prop_assert_eq!(r.h1_order().unwrap(), s.h1_order().unwrap());
            }
        }

        #[test]
        fn brieskorn_is_zhs(k in 0usize..4) {
            let sets: [&[i64]; 4] = [&[2, 3, 5], &[2, 5, 7], &[3, 4, 5, 7], &[2, 3, 13]];
            let s = SeifertInvariants::brieskorn(sets[k]).unwrap();
            prop_assert_eq!(s.h1_order().unwrap(), 1);
            prop_assert!(s.degree() < int(0));
            prop_assert_eq!(s.spin_structures().unwrap().len(), 1);
        }
    }
}
