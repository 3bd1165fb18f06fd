//! Pseudo-randomness and Szemerédi-regularity checks.
//!
//! Threshold comparisons follow their definitions literally: unbiasedness is
//! `<=`, pair regularity is strict `<`, cluster adjacency is `>=`.

mod cluster;
mod constants;
mod density_lemma;
mod embedding;
mod pair;
mod partition;
mod unbiased;

use serde::Serialize;

use crate::graph::VertexSet;
use crate::Rational;

pub use cluster::cluster_graph;
pub use constants::{
    default_report_eps, eps_of_n, validate_constants, ConstantSchedule, ConstantsValidation,
    Constraint, ValidationOptions,
};
pub use density_lemma::{check_density_lemma, DensityLemmaCheck};
pub use embedding::find_induced_embedding;
pub use pair::{
    is_regular_pair, is_regular_pair_limited, slicing_alpha, verify_slicing, SlicingCheck,
    DEFAULT_PAIR_EXACT_LIMIT,
};
pub use partition::Equipartition;
pub use unbiased::{
    check_p1, check_p2, check_p2_limited, is_unbiased, jumbleg_margin, JumbleMargin,
    DEFAULT_P2_EXACT_LIMIT,
};
pub(crate) use unbiased::random_disjoint_pair;

/// How a universally quantified check is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every qualifying pair is accounted for.
    Exact,
    /// Uniformly random qualifying pairs at the minimum qualifying size.
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Exact,
    Sampled,
}

impl From<SearchMode> for ModeKind {
    fn from(mode: SearchMode) -> Self {
        match mode {
            SearchMode::Exact => ModeKind::Exact,
            SearchMode::Sampled { .. } => ModeKind::Sampled,
        }
    }
}

/// Outcome of a pseudo-randomness or regular-pair check.
///
/// In exact mode a failing report always carries a witness. A passing sampled
/// report only means no violation was drawn.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport<T> {
    pub passed: bool,
    /// Worst deviation observed.
    pub deviation: T,
    pub witness: Option<(VertexSet, VertexSet)>,
    pub mode: ModeKind,
    /// Qualifying pairs covered (exact) or drawn (sampled).
    pub samples: u64,
}

#[derive(Serialize)]
struct FlatReport {
    passed: bool,
    mode: ModeKind,
    deviation_num: i128,
    deviation_den: i128,
    samples: u64,
    #[serde(rename = "witness_S")]
    witness_s: Option<Vec<usize>>,
    #[serde(rename = "witness_T")]
    witness_t: Option<Vec<usize>>,
}

impl RegularityReport<Rational> {
    /// Flat JSON object: `passed, mode, deviation_num, deviation_den, samples, witness_S, witness_T`.
    pub fn to_json(&self) -> String {
        let flat = FlatReport {
            passed: self.passed,
            mode: self.mode,
            deviation_num: *self.deviation.numer(),
            deviation_den: *self.deviation.denom(),
            samples: self.samples,
            witness_s: self.witness.as_ref().map(|(s, _)| s.to_vec()),
            witness_t: self.witness.as_ref().map(|(_, t)| t.to_vec()),
        };
        serde_json::to_string(&flat).expect("plain struct serializes")
    }
}

/// Largest fraction seen so far, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub(crate) struct WorstFraction {
    num: u128,
    den: u128,
    witness: Option<(VertexSet, VertexSet)>,
}

impl WorstFraction {
    pub(crate) fn new() -> Self {
        Self {
            num: 0,
            den: 1,
            witness: None,
        }
    }

    /// Records `num / den` if it beats the current worst; `make_witness` runs only then.
    #[inline]
    pub(crate) fn offer(&mut self, num: u128, den: u128, make_witness: impl FnOnce() -> (VertexSet, VertexSet)) {
        if self.witness.is_none() || num * self.den > self.num * den {
            self.num = num;
            self.den = den;
            self.witness = Some(make_witness());
        }
    }

    pub(crate) fn value<T: crate::Scalar>(&self) -> T {
        T::from_ratio(self.num as i64, self.den as i64)
    }

    pub(crate) fn into_witness(self) -> Option<(VertexSet, VertexSet)> {
        self.witness
    }
}
