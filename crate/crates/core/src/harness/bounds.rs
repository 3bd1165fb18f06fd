use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{theorem_bounds, BoundVariant};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: u64,
    pub lower: u64,
    #[serde(serialize_with = "as_f64")]
    pub upper_main: Rational,
    /// `upper_main - lower`.
    #[serde(serialize_with = "as_f64")]
    pub gap: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub variant: BoundVariant,
    pub k: u64,
    pub rows: Vec<BoundsRow>,
    /// Qualifier on the whole table, e.g. for degenerate `k`.
    pub note: Option<String>,
    pub caption: Option<String>,
}

fn as_f64<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(*q.numer() as f64 / *q.denom() as f64)
}

/// Lower bound and leading upper term for each `n`.
///
/// Family tables need `k >= 2` (`k = 2` keeps only the last two inequalities);
/// NC tables need `k >= 1` (`k = 1` is the trivial game).
pub fn report_bounds(ns: &[u64], k: u64, variant: BoundVariant) -> Result<BoundsReport> {
    let (turan_k, note, caption) = match variant {
        BoundVariant::Family if k < 2 => return Err(Error::InvalidK { k: k as usize, min: 2 }),
        BoundVariant::Family if k == 2 => (
            1,
            Some("k = 2: last two inequalities only".to_string()),
            Some("bipartite family: tau_E(P_n(F)) <= t(n, F) also holds".to_string()),
        ),
        BoundVariant::Family => (k - 1, None, None),
        BoundVariant::Nc if k < 1 => return Err(Error::InvalidK { k: 0, min: 1 }),
        BoundVariant::Nc if k == 1 => (1, Some("k = 1: trivial game".to_string()), None),
        BoundVariant::Nc => (k, None, None),
    };
    let rows = ns
        .iter()
        .map(|&n| {
            let b = match variant {
                BoundVariant::Family if k >= 3 => theorem_bounds(n, k, variant)?,
                BoundVariant::Nc => theorem_bounds(n, k, variant)?,
                BoundVariant::Family => crate::graph::raw_bounds(n, turan_k),
            };
            Ok(BoundsRow {
                n,
                lower: b.lower,
                gap: b.upper_main - Rational::from_integer(b.lower as i128),
                upper_main: b.upper_main,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundsReport {
        variant,
        k,
        rows,
        note,
        caption,
    })
}

impl BoundsReport {
    pub fn to_text(&self) -> String {
        let variant = match self.variant {
            BoundVariant::Family => "family",
            BoundVariant::Nc => "nc",
        };
        let mut out = format!("variant={variant} k={}\n", self.k);
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "{:>8} {:>12} {:>14} {:>14}", "n", "lower", "upper_main", "gap");
        for r in &self.rows {
            let _ = writeln!(out, "{:>8} {:>12} {:>14} {:>14}", r.n, r.lower, r.upper_main, r.gap);
        }
        if let Some(caption) = &self.caption {
            let _ = writeln!(out, "{caption}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
