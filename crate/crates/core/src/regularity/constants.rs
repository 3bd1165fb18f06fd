//! The constant chain `eps << E0 << E1 << eta << delta << 1/f` and its inequalities.
//!
//! `S0`, `S1` and `gamma` only exist non-constructively, so they are inputs here.

use std::fmt;

use serde::Serialize;

use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantSchedule<T> {
    /// Pseudo-randomness parameter Enforcer plays for.
    pub epsilon: T,
    /// Regularity parameter of the first partition.
    pub e0: T,
    /// Regularity parameter of the refinement inside clusters.
    pub e1: T,
    pub eta: T,
    pub delta: T,
    /// Regularity needed by the embedding step.
    pub gamma: T,
    /// Order of the forbidden graph.
    pub f: u64,
    /// Its chromatic number.
    pub k: u64,
    pub s0: u64,
    pub s1: u64,
    /// Lower bound on the number of clusters.
    pub m: u64,
}

impl<T: Scalar> ConstantSchedule<T> {
    /// Fills the derived entries the way the selection order does:
    /// `eta = delta / 2`, `E1 = gamma`, `m = max(k, ceil(1 / E0))`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_selection_order(f: u64, k: u64, delta: T, gamma: T, s1: u64, e0: T, s0: u64, epsilon: T) -> Self {
        let inv = T::one() / e0.clone();
        let ceil = -((-inv).floor_int());
        Self {
            eta: delta.clone() / T::from_ratio(2, 1),
            e1: gamma.clone(),
            m: k.max(ceil.max(1) as u64),
            epsilon,
            e0,
            delta,
            gamma,
            f,
            k,
            s0,
            s1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Constraint {
    /// Real constants in `(0, 1)`, integer constants positive.
    #[serde(rename = "range")]
    Range,
    /// `delta >= 2 E0 + eps / 3`
    #[serde(rename = "(2)")]
    DeltaCoversE0,
    /// `eps <= 1 / (S0 S1)`
    #[serde(rename = "(3)")]
    EpsBelowClusterScale,
    /// `E0 <= delta / 2 + eps`
    #[serde(rename = "(4)")]
    E0BelowHalfDelta,
    /// `E0 S1 <= gamma`
    #[serde(rename = "(5)")]
    SlicedRegularity,
    /// `E1 = gamma` (strict mode only)
    #[serde(rename = "E1=gamma")]
    E1IsGamma,
    /// `eps >= 2 (ln n / n)^(1/3)` for a given `n`
    #[serde(rename = "jumbleg")]
    JumbleThreshold,
}

impl Constraint {
    pub fn label(&self) -> &'static str {
        match self {
            Constraint::Range => "range",
            Constraint::DeltaCoversE0 => "(2)",
            Constraint::EpsBelowClusterScale => "(3)",
            Constraint::E0BelowHalfDelta => "(4)",
            Constraint::SlicedRegularity => "(5)",
            Constraint::E1IsGamma => "E1=gamma",
            Constraint::JumbleThreshold => "jumbleg",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Also require `E1 = gamma`.
    pub strict: bool,
    /// Check the pseudo-randomness threshold for this board size.
    pub n: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantsValidation {
    pub valid: bool,
    /// Every evaluated constraint with its outcome, in evaluation order.
    pub checks: Vec<(Constraint, bool)>,
    pub violations: Vec<Constraint>,
}

pub fn validate_constants<T: Scalar>(c: &ConstantSchedule<T>, opts: ValidationOptions) -> ConstantsValidation {
    let two = T::from_ratio(2, 1);
    let three = T::from_ratio(3, 1);
    let open_unit = |x: &T| *x > T::zero() && *x < T::one();
    let reals = [&c.epsilon, &c.e0, &c.e1, &c.eta, &c.delta, &c.gamma];
    let ints = [c.f, c.k, c.s0, c.s1, c.m];

    let mut checks = vec![
        (
            Constraint::Range,
            reals.iter().all(|x| open_unit(x)) && ints.iter().all(|&i| i >= 1),
        ),
        (
            Constraint::DeltaCoversE0,
            c.delta >= two.clone() * c.e0.clone() + c.epsilon.clone() / three,
        ),
        (
            Constraint::EpsBelowClusterScale,
            c.epsilon.clone() * T::from_count(c.s0) * T::from_count(c.s1) <= T::one(),
        ),
        (
            Constraint::E0BelowHalfDelta,
            c.e0 <= c.delta.clone() / two.clone() + c.epsilon.clone(),
        ),
        (
            Constraint::SlicedRegularity,
            c.e0.clone() * T::from_count(c.s1) <= c.gamma,
        ),
    ];
    if opts.strict {
        checks.push((Constraint::E1IsGamma, c.e1 == c.gamma));
    }
    if let Some(n) = opts.n {
        checks.push((Constraint::JumbleThreshold, c.epsilon.to_f64() >= eps_of_n(n)));
    }
    let violations: Vec<Constraint> = checks.iter().filter(|(_, ok)| !ok).map(|(c, _)| *c).collect();
    ConstantsValidation {
        valid: violations.is_empty(),
        checks,
        violations,
    }
}

/// `2 (ln n / n)^(1/3)`, the smallest `eps` for which Maker is known to win the
/// pseudo-randomness game on `K_n` for large `n`.
pub fn eps_of_n(n: u64) -> f64 {
    let n = n as f64;
    2.0 * (n.ln() / n).cbrt()
}

/// `min(0.1, eps_of_n(n))`, used for empirical reporting at desk-scale `n`.
pub fn default_report_eps(n: u64) -> f64 {
    eps_of_n(n).min(0.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_rational, Rational};
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn base() -> ConstantSchedule<Rational> {
        ConstantSchedule {
            epsilon: q("0.001"),
            e0: q("0.01"),
            e1: q("0.2"),
            eta: q("0.05"),
            delta: q("0.1"),
            gamma: q("0.2"),
            f: 3,
            k: 3,
            s0: 10,
            s1: 10,
            m: 100,
        }
    }

    #[test]
    fn arithmetic_example_is_valid() {
        let v = validate_constants(&base(), ValidationOptions::default());
        assert!(v.valid, "{v:?}");
        assert_eq!(v.checks.len(), 5);
    }

    #[test]
    fn e0_equal_to_delta_breaks_four() {
        let mut c = base();
        c.e0 = c.delta;
        let v = validate_constants(&c, ValidationOptions::default());
        assert!(v.violations.contains(&Constraint::E0BelowHalfDelta));
    }

    #[test]
    fn boundary_of_three_holds() {
        let mut c = base();
        c.epsilon = Rational::new(1, 100);
        let v = validate_constants(&c, ValidationOptions::default());
        assert!(!v.violations.contains(&Constraint::EpsBelowClusterScale));
        c.epsilon = Rational::new(1, 100) + Rational::new(1, 1_000_000);
        let v = validate_constants(&c, ValidationOptions::default());
        assert!(v.violations.contains(&Constraint::EpsBelowClusterScale));
    }

    #[test]
    fn strict_and_threshold_options() {
        let mut c = base();
        c.e1 = q("0.1");
        assert!(validate_constants(&c, ValidationOptions::default()).valid);
        let v = validate_constants(&c, ValidationOptions { strict: true, n: None });
        assert_eq!(v.violations, vec![Constraint::E1IsGamma]);
        let v = validate_constants(&base(), ValidationOptions { strict: false, n: Some(200) });
        assert_eq!(v.violations, vec![Constraint::JumbleThreshold]);
    }

    #[test]
    fn eps_formula_exceeds_half_at_desk_scale() {
        assert!((eps_of_n(200) - 0.596).abs() < 1e-3);
        assert_eq!(default_report_eps(200), 0.1);
        assert!(eps_of_n(10_000_000) < 0.1);
    }

    #[test]
    fn lowering_eps_alone_can_break_four() {
        let mut c = base();
        c.e0 = c.delta / Rational::from_integer(2) + c.epsilon;
        let four = |c: &ConstantSchedule<Rational>| {
            !validate_constants(c, ValidationOptions::default()).violations.contains(&Constraint::E0BelowHalfDelta)
        };
        assert!(four(&c));
        c.epsilon /= Rational::from_integer(2);
        assert!(!four(&c));
    }

    proptest! {
        #[test]
        fn joint_shrinking_keeps_two_to_four(
            eps in 1i128..1000, e0 in 1i128..1000, delta in 1i128..1000, s in 1u64..50, num in 1i128..=100,
        ) {
            let mut c = base();
            c.epsilon = Rational::new(eps, 100_000);
            c.e0 = Rational::new(e0, 10_000);
            c.delta = Rational::new(delta, 1000);
            c.s0 = s;
            let factor = Rational::new(num, 100);
            let before = validate_constants(&c, ValidationOptions::default());
            c.epsilon *= factor;
            c.e0 *= factor;
            let after = validate_constants(&c, ValidationOptions::default());
            for (i, (constraint, ok)) in before.checks.iter().enumerate() {
                let kept = matches!(
                    constraint,
                    Constraint::DeltaCoversE0 | Constraint::EpsBelowClusterScale | Constraint::E0BelowHalfDelta
                );
                if kept && *ok {
                    prop_assert!(after.checks[i].1, "{constraint} lost");
                }
            }
        }
    }

    #[test]
    fn selection_order_fills_derived_constants() {
        let c = ConstantSchedule::from_selection_order(3, 3, q("0.05"), q("1e-3"), 100, q("9e-6"), 1000, q("1e-5"));
        assert_eq!(c.eta, q("0.025"));
        assert_eq!(c.e1, q("1e-3"));
        assert_eq!(c.m, 111_112);
        assert!(validate_constants(&c, ValidationOptions { strict: true, n: None }).valid);
    }
}
