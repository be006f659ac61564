use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// Not an L-space, with a co-oriented taut foliation and left-orderable
    /// fundamental group.
    Excellent,
    /// An L-space whose fundamental group is not left-orderable.
    TotalLSpace,
    LSpace,
    NotLSpace,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Excellent => "Excellent",
            Verdict::TotalLSpace => "TotalLSpace",
            Verdict::LSpace => "LSpace",
            Verdict::NotLSpace => "NotLSpace",
            Verdict::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    FibredCoverSlope,
    FibredCoverGenusBound,
    OrbifoldCover,
    ClosedBraidNkCover,
    ClosedBraidEvenCover,
    ThreeBraidClassification,
    GenusOnePseudoAnosovZero,
    GenusOnePseudoAnosovTwisted,
    GenusOneReducible,
    GenusOnePeriodic,
    SatelliteZero,
    SatelliteNonzero,
    SatelliteNonnegative,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::FibredCoverSlope => "fibred-cover-slope",
            RuleId::FibredCoverGenusBound => "fibred-cover-genus-bound",
            RuleId::OrbifoldCover => "orbifold-cover",
            RuleId::ClosedBraidNkCover => "closed-braid-nk-cover",
            RuleId::ClosedBraidEvenCover => "closed-braid-even-cover",
            RuleId::ThreeBraidClassification => "three-braid-classification",
            RuleId::GenusOnePseudoAnosovZero => "genus-one-pseudo-anosov-zero",
            RuleId::GenusOnePseudoAnosovTwisted => "genus-one-pseudo-anosov-twisted",
            RuleId::GenusOneReducible => "genus-one-reducible",
            RuleId::GenusOnePeriodic => "genus-one-periodic",
            RuleId::SatelliteZero => "satellite-zero",
            RuleId::SatelliteNonzero => "satellite-nonzero",
            RuleId::SatelliteNonnegative => "satellite-nonnegative",
        }
    }

    /// Statement of the rule as it is applied.
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::FibredCoverSlope => {
                "hyperbolic fibred knot with monodromy h: the surgery X_n(K)(μ_n + qλ_n) on the \
                 n-fold cyclic cover of the exterior is excellent whenever |n·c(h) − q| ≥ 1"
            }
            RuleId::FibredCoverGenusBound => {
                "a nonzero coefficient of a pseudo-Anosov genus-g monodromy satisfies \
                 |c(h)| ≥ 1/(2(2g − 1)), so n ≥ 2(2g − 1) and q = 0 give |n·c(h) − q| ≥ 1"
            }
            RuleId::OrbifoldCover => {
                "the universal abelian cover of the orbifold with cone order m along the core \
                 of X(K)(pμ + qλ) is excellent whenever m·|p·c(h) − q| ≥ 1"
            }
            RuleId::ClosedBraidNkCover => {
                "pseudo-Anosov m-braid with |c(b)| ≥ N: the nk-fold cyclic branched cover of \
                 the closure is excellent for 2 ≤ n ≤ N, gcd(m, n) = 1 and every k ≥ 1"
            }
            RuleId::ClosedBraidEvenCover => {
                "pseudo-Anosov braid on an odd number of strands with |c(b)| ≥ 2: every even \
                 order cyclic branched cover of the closure is excellent"
            }
            RuleId::ThreeBraidClassification => {
                "conjugacy normal form of a 3-braid, which fixes its Nielsen–Thurston type and \
                 its fractional Dehn twist coefficient"
            }
            RuleId::GenusOnePseudoAnosovZero => {
                "genus-one open book with pseudo-Anosov monodromy and c(h) = 0: every n-fold \
                 cyclic branched cover of the binding with n ≥ 2 is a total L-space"
            }
            RuleId::GenusOnePseudoAnosovTwisted => {
                "genus-one open book with pseudo-Anosov monodromy C^d·h₀, d ≠ 0: c(h) = d/2 and \
                 |n·c(h)| ≥ 1, so the n-fold cyclic branched cover of the binding is excellent"
            }
            RuleId::GenusOneReducible => {
                "genus-one open book with reducible monodromy C^d·σ2^m, d ≠ 0: nd ≠ ±1, so the \
                 n-fold cyclic branched cover of the binding is excellent"
            }
            RuleId::GenusOnePeriodic => {
                "genus-one open book with periodic monodromy C^d·σ1^{-j}σ2^{-1}: writing \
                 n = Pk + r, the n-fold cyclic branched cover of the binding is a total L-space \
                 exactly when nd satisfies the residue condition for (j, r), and excellent \
                 otherwise"
            }
            RuleId::SatelliteZero => {
                "satellite of a fibred hyperbolic companion with c = 0 by a pseudo-Anosov \
                 braided pattern on m strands: the n-fold cyclic branched cover is excellent \
                 whenever gcd(m, n) = 1"
            }
            RuleId::SatelliteNonzero => {
                "satellite of a fibred hyperbolic companion with c ≠ 0 by a pseudo-Anosov \
                 braided pattern on m strands: the n-fold cyclic branched cover is excellent \
                 when gcd(m, n) = 1 and n ≥ 2/|c|"
            }
            RuleId::SatelliteNonnegative => {
                "satellite whose pattern braid and companion monodromy both have nonnegative \
                 coefficients: the n-fold cyclic branched cover is excellent for n ≥ 2 coprime \
                 to m"
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One applied rule with the inequalities that instantiate its hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Justification {
    pub rule: RuleId,
    pub citation: String,
    /// Facts established outside arithmetic, e.g. a classification result.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fact: Option<String>,
    pub checks: Vec<Check>,
}

impl Justification {
    pub fn new(rule: RuleId, checks: Vec<Check>) -> Self {
        Self {
            rule,
            citation: rule.citation().to_string(),
            fact: None,
            checks,
        }
    }

    pub fn with_fact(mut self, fact: impl Into<String>) -> Self {
        self.fact = Some(fact.into());
        self
    }
}

/// Outcome of a certifier. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub justifications: Vec<Justification>,
    /// User-asserted hypotheses the verdict depends on.
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn unknown(note: impl Into<String>) -> Self {
        Self {
            verdict: Verdict::Unknown,
            justifications: Vec::new(),
            assumptions: Vec::new(),
            notes: vec![note.into()],
        }
    }

    pub fn rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.justifications.iter().map(|j| j.rule)
    }

    /// Human-readable multi-line rendering.
    pub fn render_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict);
        for j in &self.justifications {
            out.push_str(&format!("  rule {}: {}\n", j.rule, j.citation));
            if let Some(fact) = &j.fact {
                out.push_str(&format!("    fact: {fact}\n"));
            }
            for c in &j.checks {
                out.push_str(&format!("    check: {c}\n"));
            }
        }
        for a in &self.assumptions {
            out.push_str(&format!("  assumes: {a}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}
