//! Descriptor languages for properties and strategies.
//!
//! Properties: `edge`, `subgraph:<name>`, `induced:<name>`, `nc:<k>`, `family:<path>`.
//! Strategies: `turan:<parts>`, `jumbleg:<eps>`, `random[:<seed>]`, `first`.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::game::PropertyDetector;
use crate::graph::{named_graph, parse_graph_text, Graph, GraphFamily};
use crate::strategy::{AvoiderTuran, EnforcerJumbleG, FirstAvailable, RandomStrategy, Strategy};
use crate::{parse_rational, Rational};

pub fn parse_property(desc: &str) -> Result<PropertyDetector> {
    let desc = desc.trim();
    if desc == "edge" {
        return Ok(PropertyDetector::HasEdge);
    }
    let (kind, arg) = desc
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("unknown property `{desc}`")))?;
    match kind {
        "subgraph" => Ok(PropertyDetector::Subgraph(GraphFamily::single(named_graph(arg)?, arg))),
        "induced" => Ok(PropertyDetector::InducedSubgraph(GraphFamily::single(named_graph(arg)?, arg))),
        "nc" => {
            let k: usize = arg.parse().map_err(|_| Error::Parse(format!("bad colour count `{arg}`")))?;
            if k == 0 {
                return Err(Error::InvalidK { k, min: 1 });
            }
            Ok(PropertyDetector::NotKColorable(k))
        }
        "family" => {
            let text = std::fs::read_to_string(Path::new(arg))
                .map_err(|e| Error::Parse(format!("cannot read family file `{arg}`: {e}")))?;
            Ok(PropertyDetector::Subgraph(parse_family(&text, desc)?))
        }
        _ => Err(Error::Parse(format!("unknown property `{desc}`"))),
    }
}

/// JSON array whose entries are graph text or graph names.
pub fn parse_family(json: &str, label: &str) -> Result<GraphFamily> {
    let entries: Vec<String> =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("family must be a JSON list of strings: {e}")))?;
    let members = entries
        .iter()
        .map(|s| if s.trim().contains(char::is_whitespace) { parse_graph_text(s) } else { named_graph(s) })
        .collect::<Result<Vec<Graph>>>()?;
    GraphFamily::new(members, label)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategySpec {
    Turan(usize),
    /// The rational and its original spelling.
    JumbleG(Rational, String),
    Random(Option<u64>),
    First,
}

impl fmt::Display for StrategySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategySpec::Turan(p) => write!(f, "turan:{p}"),
            StrategySpec::JumbleG(_, s) => write!(f, "jumbleg:{s}"),
            StrategySpec::Random(Some(s)) => write!(f, "random:{s}"),
            StrategySpec::Random(None) => f.write_str("random"),
            StrategySpec::First => f.write_str("first"),
        }
    }
}

pub fn parse_strategy(desc: &str) -> Result<StrategySpec> {
    let desc = desc.trim();
    let (kind, arg) = match desc.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (desc, None),
    };
    let spec = match (kind, arg) {
        ("first", None) => StrategySpec::First,
        ("random", None) => StrategySpec::Random(None),
        ("random", Some(s)) => StrategySpec::Random(Some(
            s.parse().map_err(|_| Error::Parse(format!("bad seed `{s}`")))?,
        )),
        ("turan", Some(p)) => {
            let parts = p.parse().map_err(|_| Error::Parse(format!("bad part count `{p}`")))?;
            AvoiderTuran::new(parts)?;
            StrategySpec::Turan(parts)
        }
        ("jumbleg", Some(e)) => {
            let eps = parse_rational(e).ok_or_else(|| Error::Parse(format!("bad eps `{e}`")))?;
            EnforcerJumbleG::new(eps, e)?;
            StrategySpec::JumbleG(eps, e.to_string())
        }
        _ => return Err(Error::Parse(format!("unknown strategy `{desc}`"))),
    };
    Ok(spec)
}

impl StrategySpec {
    /// Builds the strategy; `random` without its own seed draws from `seed`.
    pub fn build(&self, seed: u64) -> Box<dyn Strategy> {
        match self {
            StrategySpec::Turan(p) => Box::new(AvoiderTuran::new(*p).expect("validated on parse")),
            StrategySpec::JumbleG(eps, s) => Box::new(EnforcerJumbleG::new(*eps, s.clone()).expect("validated on parse")),
            StrategySpec::Random(own) => Box::new(RandomStrategy::new(own.unwrap_or(seed))),
            StrategySpec::First => Box::new(FirstAvailable),
        }
    }

    /// Builds an independent instance for one match of a batch.
    ///
    /// The stream depends on the strategy's own seed (or `master`), the match
    /// index and the seat, so no two matches or seats share a stream.
    pub fn build_for_match(&self, master: u64, match_index: u64, seat: u64) -> Box<dyn Strategy> {
        let base = match self {
            StrategySpec::Random(Some(s)) => *s,
            _ => master,
        };
        let seed = derive_seed(base, match_index.wrapping_mul(2).wrapping_add(seat));
        match self {
            StrategySpec::Random(_) => Box::new(RandomStrategy::new(seed)),
            other => other.build(seed),
        }
    }
}

/// One SplitMix64 step.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for stream `index` under `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}
