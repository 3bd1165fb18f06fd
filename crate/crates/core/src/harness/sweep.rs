use std::fmt::Write as _;

use rayon::prelude::*;

use super::descriptor::{derive_seed, StrategySpec};
use crate::error::{Error, Result};
use crate::game::{play_match, Convention, GameRules, PropertyDetector, Role};
use crate::graph::{raw_bounds, TheoremBounds};
use crate::strategy::jumble_monitor;
use crate::Rational;

pub const CSV_HEADER: &str = "n,trial,seed,hit_round,lower,upper_main,violations";

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub n_step: usize,
    pub trials: usize,
    pub avoider: StrategySpec,
    pub enforcer: StrategySpec,
    pub property: PropertyDetector,
    pub convention: Convention,
    pub first_mover: Role,
    pub master_seed: u64,
    /// Parameter of the in-game jumble monitor.
    pub eps: Rational,
    pub monitor_pairs: usize,
}

impl SweepConfig {
    pub fn sizes(&self) -> Vec<usize> {
        (self.n_min..=self.n_max).step_by(self.n_step.max(1)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.n_step == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!(
                "empty size range {}..={} step {}",
                self.n_min, self.n_max, self.n_step
            )));
        }
        if self.n_min < 2 {
            return Err(Error::BoardTooSmall(self.n_min));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    /// `-1` when the property never appeared.
    pub hit_round: i64,
    pub lower: u64,
    pub upper_main: Rational,
    /// Fraction of monitor pairs violating the jumble margin at the end of the match.
    pub violations: f64,
}

impl SweepRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.4}",
            self.n,
            self.trial,
            self.seed,
            self.hit_round,
            self.lower,
            ratio_f64(&self.upper_main),
            self.violations
        )
    }
}

fn ratio_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Bounds matching the property: Turán index `k - 1` for families with minimum
/// chromatic number `k`, `k` for `nc:k`, and zero for `edge`.
pub fn bounds_for_property(property: &PropertyDetector, n: usize) -> TheoremBounds {
    let turan_k = match property {
        PropertyDetector::HasEdge => 1,
        PropertyDetector::Subgraph(f) | PropertyDetector::InducedSubgraph(f) => f.k() as u64 - 1,
        PropertyDetector::NotKColorable(k) => *k as u64,
    };
    if turan_k == 0 {
        return TheoremBounds {
            lower: 0,
            upper_main: Rational::from_integer(0),
        };
    }
    raw_bounds(n as u64, turan_k)
}

/// One match per `(n, trial)`, run in parallel and returned in `(n, trial)` order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes()
        .into_iter()
        .flat_map(|n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    jobs.par_iter().map(|&(n, trial)| run_one(cfg, n, trial)).collect()
}

fn run_one(cfg: &SweepConfig, n: usize, trial: usize) -> Result<SweepRow> {
    let index = ((n as u64) << 32) | trial as u64;
    let seed = derive_seed(cfg.master_seed, index);
    let rules = GameRules {
        n,
        convention: cfg.convention,
        first_mover: cfg.first_mover,
        property: cfg.property.clone(),
    };
    let mut avoider = cfg.avoider.build_for_match(cfg.master_seed, index, 0);
    let mut enforcer = cfg.enforcer.build_for_match(cfg.master_seed, index, 1);
    let transcript = play_match(avoider.as_mut(), enforcer.as_mut(), &rules, None, Some(seed))?;
    let state = transcript.replay()?;
    let monitor = jumble_monitor(&state, &cfg.eps, cfg.monitor_pairs, seed);
    let bounds = bounds_for_property(&cfg.property, n);
    Ok(SweepRow {
        n,
        trial,
        seed,
        hit_round: transcript.outcome.as_signed(),
        lower: bounds.lower,
        upper_main: bounds.upper_main,
        violations: monitor.fraction(),
    })
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv_line());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub n: usize,
    pub trials: usize,
    pub never: usize,
    /// Min, lower median and max over finite hitting rounds.
    pub hit_stats: Option<(i64, i64, i64)>,
    pub lower: u64,
    pub upper_main: Rational,
    /// `(median - upper_main) / n^2`.
    pub gap: Option<f64>,
}

pub fn summarize(rows: &[SweepRow]) -> Vec<SweepSummary> {
    let mut out: Vec<SweepSummary> = Vec::new();
    for chunk in rows.chunk_by(|a, b| a.n == b.n) {
        let n = chunk[0].n;
        let mut hits: Vec<i64> = chunk.iter().map(|r| r.hit_round).filter(|&h| h >= 0).collect();
        hits.sort_unstable();
        let hit_stats = (!hits.is_empty()).then(|| (hits[0], hits[(hits.len() - 1) / 2], hits[hits.len() - 1]));
        let upper = ratio_f64(&chunk[0].upper_main);
        out.push(SweepSummary {
            n,
            trials: chunk.len(),
            never: chunk.len() - hits.len(),
            hit_stats,
            lower: chunk[0].lower,
            upper_main: chunk[0].upper_main,
            gap: hit_stats.map(|(_, med, _)| (med as f64 - upper) / (n * n) as f64),
        });
    }
    out
}

impl SweepSummary {
    pub fn render(summaries: &[SweepSummary]) -> String {
        let mut out = String::from("n,trials,never,min,median,max,lower,upper_main,gap\n");
        for s in summaries {
            let (min, med, max) = match s.hit_stats {
                Some((a, b, c)) => (a.to_string(), b.to_string(), c.to_string()),
                None => ("-".into(), "-".into(), "-".into()),
            };
            let gap = s.gap.map_or("-".into(), |g| format!("{g:.5}"));
            let _ = writeln!(
                out,
                "{},{},{},{min},{med},{max},{},{},{gap}",
                s.n,
                s.trials,
                s.never,
                s.lower,
                ratio_f64(&s.upper_main)
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{parse_property, parse_strategy};

    fn config(property: &str, avoider: &str, enforcer: &str, ns: (usize, usize, usize), trials: usize) -> SweepConfig {
        SweepConfig {
            n_min: ns.0,
            n_max: ns.1,
            n_step: ns.2,
            trials,
            avoider: parse_strategy(avoider).unwrap(),
            enforcer: parse_strategy(enforcer).unwrap(),
            property: parse_property(property).unwrap(),
            convention: Convention::AvoiderEnforcer,
            first_mover: Role::Avoider,
            master_seed: 42,
            eps: Rational::new(1, 10),
            monitor_pairs: 50,
        }
    }

    #[test]
    fn has_edge_rows() {
        let rows = run_sweep(&config("edge", "random", "random", (2, 12, 5), 3)).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.hit_round == 1 && r.lower == 0));
        assert_eq!(rows.iter().map(|r| (r.n, r.trial)).collect::<Vec<_>>()[..4], [(2, 0), (2, 1), (2, 2), (7, 0)]);
    }

    #[test]
    fn turan_avoider_outlasts_the_lower_bound() {
        let rows = run_sweep(&config("subgraph:K3", "turan:2", "first", (6, 6, 1), 3)).unwrap();
        assert!(rows.iter().all(|r| r.lower == 4 && (r.hit_round >= 5 || r.hit_round == -1)));
    }

    #[test]
    fn bound_columns() {
        let p = parse_property("subgraph:K3").unwrap();
        for (n, lower) in [(40, 200), (60, 450), (80, 800)] {
            let b = bounds_for_property(&p, n);
            assert_eq!(b.lower, lower);
            assert_eq!(b.upper_main, Rational::from_integer(lower as i128));
        }
        let b = bounds_for_property(&parse_property("nc:2").unwrap(), 100);
        assert_eq!(b.lower, 1250);
        assert_eq!(bounds_for_property(&PropertyDetector::HasEdge, 9).upper_main, Rational::from_integer(0));
    }

    #[test]
    fn csv_is_deterministic() {
        let cfg = config("subgraph:K3", "random", "jumbleg:0.1", (5, 15, 5), 4);
        let a = rows_to_csv(&run_sweep(&cfg).unwrap());
        let b = rows_to_csv(&run_sweep(&cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
        let mut other = cfg.clone();
        other.master_seed = 43;
        assert_ne!(rows_to_csv(&run_sweep(&other).unwrap()), a);
    }

    #[test]
    fn summary_and_validation() {
        let rows = run_sweep(&config("subgraph:K3", "random", "first", (6, 8, 2), 5)).unwrap();
        let s = summarize(&rows);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].trials, 5);
        let (min, med, max) = s[0].hit_stats.unwrap();
        assert!(min <= med && med <= max);
        assert!(SweepSummary::render(&s).lines().count() == 3);
        let mut bad = config("edge", "first", "first", (5, 4, 1), 1);
        assert!(run_sweep(&bad).is_err());
        bad.n_max = 5;
        bad.trials = 0;
        assert!(run_sweep(&bad).is_err());
    }
}
