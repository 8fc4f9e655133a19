//! Inequalities constraining the intersection forms of spin 4-manifolds
//! bounded by a Seifert rational homology sphere, in terms of μ̄ and κ.
//!
//! Every check returns a [`ConstraintVerdict`] listing each rule it evaluated
//! with a citation, so a caller can see which inequality failed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{divisible_by, int};
use crate::seifert::{CaseFlags, DegreeSign};
use crate::{Execution, Rational, Result, SeifertInvariants};

/// `(b₂⁺, b₂⁻)` of a hypothetical spin 4-manifold `W` (with `b₁(W) = 0`
/// where a rule needs it).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FormCandidate {
    pub b2_plus: u32,
    pub b2_minus: u32,
}

impl FormCandidate {
    pub fn new(b2_plus: u32, b2_minus: u32) -> Self {
        FormCandidate { b2_plus, b2_minus }
    }

    pub fn sigma(&self) -> i64 {
        self.b2_plus as i64 - self.b2_minus as i64
    }

    pub fn rank(&self) -> u32 {
        self.b2_plus + self.b2_minus
    }

    fn plus(&self) -> Rational {
        int(self.b2_plus as i128)
    }

    fn minus(&self) -> Rational {
        int(self.b2_minus as i128)
    }

    /// `σ(W) / 8`.
    pub fn sigma8(&self) -> Rational {
        Rational::new(self.sigma() as i128, 8)
    }
}

impl fmt::Display for FormCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b2+={}, b2-={})", self.b2_plus, self.b2_minus)
    }
}

/// A κ value taken from published data or user input; never computed here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaRecord {
    #[serde(with = "crate::rational")]
    pub value: Rational,
    pub kg_split: Option<bool>,
    pub provenance: String,
}

impl KappaRecord {
    pub fn new(value: Rational, kg_split: Option<bool>, provenance: impl Into<String>) -> Self {
        KappaRecord {
            value,
            kg_split,
            provenance: provenance.into(),
        }
    }

    pub fn is_split(&self) -> bool {
        self.kg_split == Some(true)
    }
}

/// κ and μ̄ of the same spin structure satisfy `κ + μ̄ ∈ 2Z`.
pub fn kappa_congruent(kappa: &Rational, mu: &Rational) -> bool {
    divisible_by(&(kappa + mu), &int(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    MubarCongruence,
    MubarWindow,
    MubarSpherical,
    MubarEvenPositiveDegree,
    MubarEvenNegativeDegree,
    KoRefinement,
    KappaFillingMinus,
    KappaFillingPlusSplit,
    KappaPairWindow,
    KappaPairIntegral,
    CobordismLower,
    CobordismUpper,
    CobordismSplitSource,
    CobordismSplitTarget,
}

impl RuleId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::MubarCongruence => "mubar-congruence",
            RuleId::MubarWindow => "mubar-window",
            RuleId::MubarSpherical => "mubar-spherical",
            RuleId::MubarEvenPositiveDegree => "mubar-even-positive-degree",
            RuleId::MubarEvenNegativeDegree => "mubar-even-negative-degree",
            RuleId::KoRefinement => "ko-refinement",
            RuleId::KappaFillingMinus => "kappa-filling-minus",
            RuleId::KappaFillingPlusSplit => "kappa-filling-plus-split",
            RuleId::KappaPairWindow => "kappa-pair-window",
            RuleId::KappaPairIntegral => "kappa-pair-integral",
            RuleId::CobordismLower => "cobordism-lower",
            RuleId::CobordismUpper => "cobordism-upper",
            RuleId::CobordismSplitSource => "cobordism-split-source",
            RuleId::CobordismSplitTarget => "cobordism-split-target",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            RuleId::MubarCongruence => {
                "mu-bar(Y,s) = sigma(W)/8 mod 2 (orbifold 10/8 theorem of Fukumoto-Furuta on X U -W)"
            }
            RuleId::MubarWindow => {
                "-b2-(W) + sigma(W)/8 <= mu-bar(Y,s) <= b2+(W) + sigma(W)/8 (orbifold 10/8 theorem)"
            }
            RuleId::MubarSpherical => {
                "spherical Y, X = cone: 1 - b2- + sigma/8 <= mu-bar <= b2+ - 1 + sigma/8, or mu-bar = sigma/8"
            }
            RuleId::MubarEvenPositiveDegree => {
                "even multiplicity, deg Y > 0: mu-bar <= b2+ - 1 + sigma/8, or mu-bar = sigma/8"
            }
            RuleId::MubarEvenNegativeDegree => {
                "even multiplicity, deg Y < 0: 1 - b2- + sigma/8 <= mu-bar, or mu-bar = sigma/8"
            }
            RuleId::KoRefinement => {
                "J. Lin KO-theoretic constraint: if mu-bar - sigma/8 > 0 and divisible by 8, mu-bar <= b2+ + sigma/8 - 2"
            }
            RuleId::KappaFillingMinus => {
                "Manolescu: -kappa <= b2+ + sigma/8 - 1 (b2+ odd), - 2 (b2+ even > 0); -kappa <= b2+ + sigma/8 if b2+ = 0"
            }
            RuleId::KappaFillingPlusSplit => {
                "Manolescu, Floer K_G split: kappa <= b2- - sigma/8 - 1 (b2- odd), - 2 (b2- even > 0); kappa <= b2- - sigma/8 if b2- = 0"
            }
            RuleId::KappaPairWindow => "Seifert RHS: 0 <= kappa(Y,s) + kappa(-Y,s) <= 4",
            RuleId::KappaPairIntegral => "Seifert ZHS: kappa(Y) + kappa(-Y) in {0, 2, 4}",
            RuleId::CobordismLower => {
                "Manolescu: -b2- + sigma/8 - 1 <= kappa(Y0) - kappa(Y1), the -1 dropped when b2- is even"
            }
            RuleId::CobordismUpper => {
                "Manolescu: kappa(Y0) - kappa(Y1) <= b2+ + sigma/8 + 1, the +1 dropped when b2+ is even"
            }
            RuleId::CobordismSplitSource => {
                "Manolescu, Y0 Floer K_G split: kappa(Y0) - kappa(Y1) <= b2+ + sigma/8 - 1 (odd), - 2 (even > 0)"
            }
            RuleId::CobordismSplitTarget => {
                "Manolescu, Y1 Floer K_G split: kappa(Y1) - kappa(Y0) <= b2- - sigma/8 - 1 (odd), - 2 (even > 0)"
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutcome {
    pub rule: RuleId,
    pub citation: String,
    /// Rules whose hypotheses fail are recorded as satisfied and not applicable.
    pub applicable: bool,
    pub satisfied: bool,
    pub detail: String,
}

impl RuleOutcome {
    fn new(rule: RuleId, satisfied: bool, detail: impl Into<String>) -> Self {
        RuleOutcome {
            rule,
            citation: rule.citation().to_string(),
            applicable: true,
            satisfied,
            detail: detail.into(),
        }
    }

    fn vacuous(rule: RuleId, detail: impl Into<String>) -> Self {
        RuleOutcome {
            applicable: false,
            ..Self::new(rule, true, detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintVerdict {
    pub feasible: bool,
    pub rules: Vec<RuleOutcome>,
}

impl ConstraintVerdict {
    pub fn new(rules: Vec<RuleOutcome>) -> Self {
        ConstraintVerdict {
            feasible: rules.iter().all(|r| r.satisfied),
            rules,
        }
    }

    pub fn and(mut self, other: ConstraintVerdict) -> Self {
        self.rules.extend(other.rules);
        Self::new(self.rules)
    }

    pub fn rule(&self, id: RuleId) -> Option<&RuleOutcome> {
        self.rules.iter().find(|r| r.rule == id)
    }

    pub fn violated(&self) -> impl Iterator<Item = &RuleOutcome> {
        self.rules.iter().filter(|r| !r.satisfied)
    }
}

fn fmt_le(lhs: &Rational, rhs: &Rational) -> String {
    format!("{lhs} <= {rhs}")
}

/// The basic μ̄ constraints on any spin `W` with `∂W = Y`: the mod-2
/// congruence and the two-sided window.
pub fn mubar_bound_check(mu: &Rational, fc: &FormCandidate) -> ConstraintVerdict {
    ConstraintVerdict::new(vec![mubar_congruence(mu, fc), mubar_window(mu, fc)])
}

fn mubar_congruence(mu: &Rational, fc: &FormCandidate) -> RuleOutcome {
    let gap = mu - fc.sigma8();
    RuleOutcome::new(
        RuleId::MubarCongruence,
        divisible_by(&gap, &int(2)),
        format!("mu-bar - sigma/8 = {gap}"),
    )
}

fn mubar_window(mu: &Rational, fc: &FormCandidate) -> RuleOutcome {
    let s8 = fc.sigma8();
    let lo = s8 - fc.minus();
    let hi = s8 + fc.plus();
    RuleOutcome::new(
        RuleId::MubarWindow,
        lo <= *mu && *mu <= hi,
        format!("{lo} <= {mu} <= {hi}"),
    )
}

/// Sharper μ̄ constraints available from the geometry of `Y`. All applicable
/// refinements are conjoined with the basic ones; each refinement passes via
/// its sharpened window or the equality `μ̄ = σ/8`.
pub fn refined_mubar_bound_check(mu: &Rational, fc: &FormCandidate, flags: &CaseFlags) -> ConstraintVerdict {
    let mut rules = vec![mubar_congruence(mu, fc), mubar_window(mu, fc)];
    let s8 = fc.sigma8();
    let escape = *mu == s8;
    let one = int(1);
    let mut sharpened = |rule: RuleId, lo: Rational, hi: Rational| {
        let inside = lo <= *mu && *mu <= hi;
        rules.push(RuleOutcome::new(
            rule,
            inside || escape,
            format!(
                "{lo} <= {mu} <= {hi}: {inside}; mu-bar = sigma/8 = {s8}: {escape}"
            ),
        ));
    };
    if flags.is_spherical {
        sharpened(
            RuleId::MubarSpherical,
            one - fc.minus() + s8,
            fc.plus() - one + s8,
        );
    }
    if flags.has_even_multiplicity {
        match flags.deg_sign {
            DegreeSign::Positive => sharpened(
                RuleId::MubarEvenPositiveDegree,
                s8 - fc.minus(),
                fc.plus() - one + s8,
            ),
            DegreeSign::Negative => sharpened(
                RuleId::MubarEvenNegativeDegree,
                one - fc.minus() + s8,
                fc.plus() + s8,
            ),
        }
    }
    ConstraintVerdict::new(rules)
}

/// The KO-theoretic refinement: when `μ̄ − σ/8` is positive and divisible
/// by 8, `μ̄ ≤ b₂⁺ + σ/8 − 2`.
pub fn lin_rule_check(mu: &Rational, fc: &FormCandidate) -> ConstraintVerdict {
    let s8 = fc.sigma8();
    let gap = mu - s8;
    let rule = if gap > int(0) && divisible_by(&gap, &int(8)) {
        let hi = fc.plus() + s8 - int(2);
        RuleOutcome::new(RuleId::KoRefinement, *mu <= hi, fmt_le(mu, &hi))
    } else {
        RuleOutcome::vacuous(
            RuleId::KoRefinement,
            format!("mu-bar - sigma/8 = {gap} is not a positive multiple of 8"),
        )
    };
    ConstraintVerdict::new(vec![rule])
}

/// Why a κ window collapsed to `{−μ̄}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WindowCollapse {
    KgSplit,
    EvenMultiplicityPositiveDegree,
    AllOddParityMatchPositiveDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaWindow {
    #[serde(with = "crate::rational::vec")]
    pub values: Vec<Rational>,
    pub collapse: Option<WindowCollapse>,
    pub caveat: Option<String>,
}

impl KappaWindow {
    pub fn contains(&self, kappa: &Rational) -> bool {
        self.values.contains(kappa)
    }
}

/// Values of κ allowed by `0 ≤ κ + μ̄ ≤ 2` and `κ + μ̄ ∈ 2Z`, i.e.
/// `{−μ̄, 2 − μ̄}`, collapsing to `{−μ̄}` when `Y` is Floer K_G split or
/// `deg Y > 0` with an even multiplicity (or all-odd multiplicities with
/// `Σ b_i ≡ b`, for one designated spin structure).
pub fn kappa_window(mu: &Rational, flags: &CaseFlags, kg_split: Option<bool>) -> KappaWindow {
    let positive = flags.deg_sign == DegreeSign::Positive;
    let collapse = if kg_split == Some(true) {
        Some(WindowCollapse::KgSplit)
    } else if flags.has_even_multiplicity && positive {
        Some(WindowCollapse::EvenMultiplicityPositiveDegree)
    } else if flags.all_odd_with_parity_match && positive {
        Some(WindowCollapse::AllOddParityMatchPositiveDegree)
    } else {
        None
    };
    let caveat = (collapse == Some(WindowCollapse::AllOddParityMatchPositiveDegree)).then(|| {
        "kappa = -mu-bar is established only for the spin structure with c(h) = 0, c(g_i) = b_i; \
         that structure is not identified among the plumbing-side characteristic vectors"
            .to_string()
    });
    let values = match collapse {
        Some(_) => vec![-mu],
        None => vec![-mu, int(2) - mu],
    };
    KappaWindow {
        values,
        collapse,
        caveat,
    }
}

/// `0 ≤ κ(Y) + κ(−Y) ≤ 4`, and for integral homology spheres the sum is even.
pub fn kappa_pair_check(k_plus: &KappaRecord, k_minus: &KappaRecord, zhs: bool) -> ConstraintVerdict {
    let sum = k_plus.value + k_minus.value;
    let mut rules = vec![RuleOutcome::new(
        RuleId::KappaPairWindow,
        int(0) <= sum && sum <= int(4),
        format!("0 <= {sum} <= 4"),
    )];
    if zhs {
        rules.push(RuleOutcome::new(
            RuleId::KappaPairIntegral,
            [int(0), int(2), int(4)].contains(&sum),
            format!("{sum} in {{0, 2, 4}}"),
        ));
    }
    ConstraintVerdict::new(rules)
}

/// Parity-split slack: `1` if `b` is odd, `2` if even and positive, `0` if zero.
fn split_slack(b: u32) -> Rational {
    match b {
        0 => int(0),
        b if b % 2 == 1 => int(1),
        _ => int(2),
    }
}

/// Manolescu's bounds for a spin filling `W` of `Y` with `b₁(W) = 0`.
pub fn manolescu_bound_check(kappa: &KappaRecord, fc: &FormCandidate) -> ConstraintVerdict {
    let k = kappa.value;
    let s8 = fc.sigma8();
    let hi = fc.plus() + s8 - split_slack(fc.b2_plus);
    let mut rules = vec![RuleOutcome::new(
        RuleId::KappaFillingMinus,
        -k <= hi,
        fmt_le(&-k, &hi),
    )];
    if kappa.is_split() {
        let hi = fc.minus() - s8 - split_slack(fc.b2_minus);
        rules.push(RuleOutcome::new(
            RuleId::KappaFillingPlusSplit,
            k <= hi,
            fmt_le(&k, &hi),
        ));
    }
    ConstraintVerdict::new(rules)
}

/// Manolescu's estimates for a spin cobordism `W` with `b₁(W) = 0` from
/// `Y₀` to `Y₁`, including the K_G-split sharpenings.
pub fn cobordism_estimate_check(k0: &KappaRecord, k1: &KappaRecord, fc: &FormCandidate) -> ConstraintVerdict {
    let d = k0.value - k1.value;
    let s8 = fc.sigma8();
    let odd = |b: u32| int((b % 2) as i128);
    let lo = s8 - fc.minus() - odd(fc.b2_minus);
    let hi = fc.plus() + s8 + odd(fc.b2_plus);
    let mut rules = vec![
        RuleOutcome::new(RuleId::CobordismLower, lo <= d, fmt_le(&lo, &d)),
        RuleOutcome::new(RuleId::CobordismUpper, d <= hi, fmt_le(&d, &hi)),
    ];
    if k0.is_split() {
        rules.push(if fc.b2_plus == 0 {
            RuleOutcome::vacuous(RuleId::CobordismSplitSource, "b2+ = 0")
        } else {
            let hi = fc.plus() + s8 - split_slack(fc.b2_plus);
            RuleOutcome::new(RuleId::CobordismSplitSource, d <= hi, fmt_le(&d, &hi))
        });
    }
    if k1.is_split() {
        rules.push(if fc.b2_minus == 0 {
            RuleOutcome::vacuous(RuleId::CobordismSplitTarget, "b2- = 0")
        } else {
            let hi = fc.minus() - s8 - split_slack(fc.b2_minus);
            RuleOutcome::new(RuleId::CobordismSplitTarget, -d <= hi, fmt_le(&-d, &hi))
        });
    }
    ConstraintVerdict::new(rules)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleProfile {
    /// Only the basic μ̄ congruence and window.
    Generic,
    /// Basic rules plus every refinement the case flags allow.
    #[default]
    Auto,
}

/// All rules for one candidate: μ̄ bounds (per profile), the KO refinement,
/// and Manolescu's filling bounds when κ is known.
pub fn evaluate_form(
    mu: &Rational,
    flags: &CaseFlags,
    profile: RuleProfile,
    kappa: Option<&KappaRecord>,
    fc: &FormCandidate,
) -> ConstraintVerdict {
    let base = match profile {
        RuleProfile::Generic => mubar_bound_check(mu, fc),
        RuleProfile::Auto => refined_mubar_bound_check(mu, fc, flags),
    };
    let v = base.and(lin_rule_check(mu, fc));
    match kappa {
        Some(k) => v.and(manolescu_bound_check(k, fc)),
        None => v,
    }
}

/// Every `(b₂⁺, b₂⁻)` with `b₂⁺ + b₂⁻ ≤ max_rank`, ordered by rank then `b₂⁺`,
/// with its verdict.
pub fn scan_forms(
    mu: &Rational,
    flags: &CaseFlags,
    max_rank: u32,
    profile: RuleProfile,
    kappa: Option<&KappaRecord>,
    exec: Execution,
) -> Vec<(FormCandidate, ConstraintVerdict)> {
    let cands: Vec<FormCandidate> = (0..=max_rank)
        .flat_map(|r| (0..=r).map(move |p| FormCandidate::new(p, r - p)))
        .collect();
    exec.map(cands, |fc| (fc, evaluate_form(mu, flags, profile, kappa, &fc)))
}

/// [`scan_forms`] for the `spin_index`-th spin structure of `si`.
pub fn feasible_forms_scan(
    si: &SeifertInvariants,
    spin_index: usize,
    max_rank: u32,
    profile: RuleProfile,
    kappa: Option<&KappaRecord>,
) -> Result<Vec<(FormCandidate, ConstraintVerdict)>> {
    let (_, mu) = crate::spin::mubar_at(si, spin_index)?;
    let flags = si.case_flags()?;
    Ok(scan_forms(&mu, &flags, max_rank, profile, kappa, Execution::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn flags(si: &SeifertInvariants) -> CaseFlags {
        si.case_flags().unwrap()
    }

    fn fc(p: u32, m: u32) -> FormCandidate {
        FormCandidate::new(p, m)
    }

    fn k(v: Rational, split: Option<bool>) -> KappaRecord {
        KappaRecord::new(v, split, "test")
    }

    #[test]
    fn basic_examples() {
        assert!(mubar_bound_check(&int(-1), &fc(0, 8)).feasible);
        let v = mubar_bound_check(&int(1), &fc(0, 0));
        assert!(!v.feasible);
        assert!(!v.rule(RuleId::MubarCongruence).unwrap().satisfied);
        assert!(mubar_bound_check(&int(0), &fc(0, 0)).feasible);
    }

    #[test]
    fn refined_examples() {
        let p = SeifertInvariants::brieskorn(&[2, 3, 5]).unwrap();
        let v = refined_mubar_bound_check(&int(-1), &fc(0, 8), &flags(&p));
        assert!(v.feasible, "{v:?}");
        assert!(v.rule(RuleId::MubarSpherical).is_some());
        assert!(v.rule(RuleId::MubarEvenNegativeDegree).is_some());

        let s = SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap();
        let v = refined_mubar_bound_check(&int(1), &fc(2, 0), &flags(&s));
        assert!(!v.feasible);
        assert!(!v.rule(RuleId::MubarCongruence).unwrap().satisfied);

        let r = s.reverse_orientation();
        let v = refined_mubar_bound_check(&int(-1), &fc(1, 8), &flags(&r));
        assert!(!v.feasible);
        assert!(!v.rule(RuleId::MubarCongruence).unwrap().satisfied);
        assert!(v.rule(RuleId::MubarEvenPositiveDegree).is_some());
    }

    #[test]
    fn refined_sharpening_bites() {
        let s = SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap();
        assert!(refined_mubar_bound_check(&int(1), &fc(8, 0), &flags(&s)).feasible);
        assert!(refined_mubar_bound_check(&int(1), &fc(9, 1), &flags(&s)).feasible);
        assert!(refined_mubar_bound_check(&int(-1), &fc(0, 8), &flags(&s)).feasible);
        // generic lower bound is tight at -9, the sharpened one is -8
        assert!(mubar_bound_check(&int(-9), &fc(0, 8)).feasible);
        assert!(!refined_mubar_bound_check(&int(-9), &fc(0, 8), &flags(&s)).feasible);
    }

    #[test]
    fn kappa_window_examples() {
        let zhs = flags(&SeifertInvariants::brieskorn(&[2, 3, 11]).unwrap());
        assert_eq!(kappa_window(&int(0), &zhs, None).values, vec![int(0), int(2)]);
        let w = kappa_window(&int(1), &zhs, Some(true));
        assert_eq!(w.values, vec![int(-1)]);
        assert_eq!(w.collapse, Some(WindowCollapse::KgSplit));

        let lens = flags(&SeifertInvariants::normalize(-2, &[]).unwrap());
        let w = kappa_window(&frac(1, 8), &lens, None);
        assert_eq!(w.values, vec![frac(-1, 8), frac(15, 8)]);

        let rev = flags(&SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap().reverse_orientation());
        let w = kappa_window(&int(-1), &rev, None);
        assert_eq!(w.values, vec![int(1)]);
        assert_eq!(w.collapse, Some(WindowCollapse::EvenMultiplicityPositiveDegree));
        assert!(w.caveat.is_none());

        let odd = flags(&SeifertInvariants::normalize(0, &[(3, 1), (5, 1)]).unwrap());
        let w = kappa_window(&int(0), &odd, None);
        assert_eq!(w.collapse, Some(WindowCollapse::AllOddParityMatchPositiveDegree));
        assert!(w.caveat.is_some());
    }

    #[test]
    fn kappa_pair_examples() {
        assert!(kappa_pair_check(&k(int(2), Some(false)), &k(int(0), Some(false)), true).feasible);
        assert!(kappa_pair_check(&k(int(1), Some(true)), &k(int(-1), Some(true)), true).feasible);
        let v = kappa_pair_check(&k(int(3), None), &k(int(3), None), false);
        assert!(!v.feasible);
        let v = kappa_pair_check(&k(int(2), None), &k(int(1), None), true);
        assert!(!v.feasible);
        assert!(v.rule(RuleId::KappaPairWindow).unwrap().satisfied);
    }

    #[test]
    fn manolescu_examples() {
        let v = manolescu_bound_check(&k(int(2), Some(false)), &fc(0, 8));
        assert!(v.feasible);
        assert_eq!(v.rules.len(), 1);

        let v = manolescu_bound_check(&k(int(0), Some(true)), &fc(0, 1));
        let plus = v.rule(RuleId::KappaFillingPlusSplit).unwrap();
        assert!(plus.satisfied);
        assert_eq!(plus.detail, "0 <= 1/8");
        // -κ <= σ/8 = -1/8 fails: W cannot have form (0,1).
        assert!(!v.rule(RuleId::KappaFillingMinus).unwrap().satisfied);

        let v = manolescu_bound_check(&k(int(2), None), &fc(1, 0));
        assert!(v.feasible);
        assert_eq!(v.rules[0].detail, "-2 <= 1/8");

        // b2+ even positive: slack 2.
        let v = manolescu_bound_check(&k(int(0), None), &fc(2, 0));
        assert_eq!(v.rules[0].detail, "0 <= 1/4");
    }

    #[test]
    fn cobordism_examples() {
        assert!(cobordism_estimate_check(&k(int(1), None), &k(int(1), None), &fc(0, 0)).feasible);
        let v = cobordism_estimate_check(&k(int(2), None), &k(int(0), None), &fc(0, 0));
        assert!(!v.feasible);
        assert!(!v.rule(RuleId::CobordismUpper).unwrap().satisfied);

        let v = cobordism_estimate_check(&k(int(0), Some(true)), &k(int(0), None), &fc(2, 0));
        let r = v.rule(RuleId::CobordismSplitSource).unwrap();
        assert!(r.satisfied);
        assert_eq!(r.detail, "0 <= 1/4");

        let v = cobordism_estimate_check(&k(int(0), None), &k(int(0), Some(true)), &fc(0, 0));
        assert!(!v.rule(RuleId::CobordismSplitTarget).unwrap().applicable);
    }

    #[test]
    fn lin_examples() {
        let v = lin_rule_check(&int(0), &fc(1, 8));
        assert!(v.feasible && !v.rules[0].applicable);
        let v = lin_rule_check(&int(7), &fc(8, 16));
        assert!(v.rules[0].applicable && !v.feasible);
        assert_eq!(v.rules[0].detail, "7 <= 5");
        assert!(lin_rule_check(&int(1), &fc(10, 16)).feasible);
    }

    #[test]
    fn scan_examples() {
        let p = SeifertInvariants::brieskorn(&[2, 3, 5]).unwrap();
        let res = feasible_forms_scan(&p, 0, 8, RuleProfile::Auto, None).unwrap();
        assert_eq!(res.len(), 45);
        let e8 = res.iter().find(|(c, _)| *c == fc(0, 8)).unwrap();
        assert!(e8.1.feasible);

        let s = SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap();
        let res = feasible_forms_scan(&s, 0, 2, RuleProfile::Auto, None).unwrap();
        assert!(!res[0].1.feasible);
        assert!(res.iter().all(|(_, v)| !v.feasible));

        let res = feasible_forms_scan(&s, 0, 0, RuleProfile::Generic, None).unwrap();
        assert_eq!(res.len(), 1);
        let res = feasible_forms_scan(&SeifertInvariants::brieskorn(&[2, 3, 11]).unwrap(), 0, 0, RuleProfile::Generic, None).unwrap();
        assert!(res[0].1.feasible);
    }

    #[test]
    fn scan_is_execution_independent() {
        let s = SeifertInvariants::brieskorn(&[2, 3, 7]).unwrap();
        let f = flags(&s);
        let kap = k(int(1), Some(false));
        let a = scan_forms(&int(1), &f, 20, RuleProfile::Auto, Some(&kap), Execution::Sequential);
        let b = scan_forms(&int(1), &f, 20, RuleProfile::Auto, Some(&kap), Execution::default());
        assert_eq!(a, b);
    }

    fn any_flags() -> impl Strategy<Value = CaseFlags> {
        (any::<bool>(), any::<bool>(), any::<bool>(), any::<bool>(), any::<bool>()).prop_map(
            |(even, pos, sph, zhs, odd)| CaseFlags {
                has_even_multiplicity: even,
                deg_sign: if pos { DegreeSign::Positive } else { DegreeSign::Negative },
                is_spherical: sph,
                is_integral_homology_sphere: zhs,
                all_odd_with_parity_match: odd && !even,
            },
        )
    }

    proptest! {
        #[test]
        fn window_monotone_under_hyperbolic_stabilization(
            num in -200i128..200, den in prop::sample::select(vec![1i128, 2, 4, 8]),
            p in 0u32..20, m in 0u32..20,
        ) {
            let mu = Rational::new(num, den);
            if mubar_bound_check(&mu, &fc(p, m)).feasible {
                prop_assert!(mubar_bound_check(&mu, &fc(p + 1, m + 1)).feasible);
            }
        }

        #[test]
        fn refined_never_weaker(
            num in -200i128..200, den in prop::sample::select(vec![1i128, 2, 4, 8]),
            p in 0u32..20, m in 0u32..20, f in any_flags(),
        ) {
            let mu = Rational::new(num, den);
            if refined_mubar_bound_check(&mu, &fc(p, m), &f).feasible {
                prop_assert!(mubar_bound_check(&mu, &fc(p, m)).feasible);
            }
        }

        #[test]
        fn kappa_window_shape(
            num in -200i128..200, den in prop::sample::select(vec![1i128, 2, 4, 8]),
            f in any_flags(), split in prop::option::of(any::<bool>()),
        ) {
            let mu = Rational::new(num, den);
            let w = kappa_window(&mu, &f, split);
            prop_assert!(!w.values.is_empty());
            for v in &w.values {
                prop_assert!(-mu <= *v && *v <= int(2) - mu);
                prop_assert!(kappa_congruent(v, &mu));
            }
        }

        #[test]
        fn product_cobordism_passes(num in -50i128..50, split0 in prop::option::of(any::<bool>()), split1 in prop::option::of(any::<bool>())) {
            let v = Rational::new(num, 8);
            prop_assert!(cobordism_estimate_check(&k(v, split0), &k(v, split1), &fc(0, 0)).feasible);
        }
    }
}
