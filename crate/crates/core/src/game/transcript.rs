//! Match records and their JSON Lines form.
//!
//! ```text
//! {"type":"header","n":4,"convention":"avoider-enforcer","first_mover":"avoider","property":"edge","seed":7}
//! {"type":"move","round":1,"role":"avoider","u":0,"v":1}
//! {"type":"outcome","result":"hit","t":1}
//! ```

use serde::{Deserialize, Serialize};

use super::{Claim, Convention, GameRules, GameState, PropertyDetector, Role};
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// The Avoider seat's move in round `t` created the property.
    HitAtRound(usize),
    NeverHit,
}

impl Outcome {
    /// `t`, or `-1` for [`Outcome::NeverHit`].
    pub fn as_signed(&self) -> i64 {
        match self {
            Outcome::HitAtRound(t) => *t as i64,
            Outcome::NeverHit => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    /// 1-based round the move belongs to.
    pub round: usize,
    pub role: Role,
    pub edge: Edge,
    /// Played outside the strategy's main phase.
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscriptHeader {
    pub n: usize,
    pub convention: Convention,
    pub first_mover: Role,
    pub property: String,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct Transcript {
    pub rules: GameRules,
    pub seed: Option<u64>,
    pub moves: Vec<MoveRecord>,
    pub outcome: Outcome,
    pub final_claims: Vec<Claim>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Record {
    Header {
        n: usize,
        convention: Convention,
        first_mover: String,
        property: String,
        seed: Option<u64>,
    },
    Move {
        round: usize,
        role: String,
        u: usize,
        v: usize,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        fallback: bool,
    },
    Outcome {
        result: String,
        t: Option<usize>,
    },
}

impl Transcript {
    pub fn header(&self) -> TranscriptHeader {
        TranscriptHeader {
            n: self.rules.n,
            convention: self.rules.convention,
            first_mover: self.rules.first_mover,
            property: self.rules.property.to_string(),
            seed: self.seed,
        }
    }

    /// Replays the moves from an empty board.
    pub fn replay(&self) -> Result<GameState> {
        let mut state = GameState::new(self.rules.clone())?;
        for m in &self.moves {
            state.apply_move(m.role, m.edge)?;
        }
        Ok(state)
    }

    pub fn to_jsonl(&self) -> String {
        let conv = self.rules.convention;
        let mut records = vec![Record::Header {
            n: self.rules.n,
            convention: conv,
            first_mover: conv.role_name(self.rules.first_mover).into(),
            property: self.rules.property.to_string(),
            seed: self.seed,
        }];
        records.extend(self.moves.iter().map(|m| Record::Move {
            round: m.round,
            role: conv.role_name(m.role).into(),
            u: m.edge.u,
            v: m.edge.v,
            fallback: m.fallback,
        }));
        records.push(match self.outcome {
            Outcome::HitAtRound(t) => Record::Outcome {
                result: "hit".into(),
                t: Some(t),
            },
            Outcome::NeverHit => Record::Outcome {
                result: "never".into(),
                t: None,
            },
        });
        let mut out = String::new();
        for r in &records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// Parses JSON Lines, resolving the property descriptor with `resolve`, and
    /// replays the moves to rebuild the final claim map.
    pub fn from_jsonl(text: &str, resolve: impl Fn(&str) -> Result<PropertyDetector>) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let parse = |line: &str| serde_json::from_str::<Record>(line).map_err(|e| Error::Parse(e.to_string()));
        let Some(Record::Header {
            n,
            convention,
            first_mover,
            property,
            seed,
        }) = lines.next().map(parse).transpose()?
        else {
            return Err(Error::Parse("transcript must start with a header record".into()));
        };
        let role = |name: &str| {
            convention
                .parse_role(name)
                .ok_or_else(|| Error::Parse(format!("unknown role `{name}` for {convention}")))
        };
        let rules = GameRules {
            n,
            convention,
            first_mover: role(&first_mover)?,
            property: resolve(&property)?,
        };
        let mut moves = Vec::new();
        let mut outcome = None;
        for line in lines {
            if outcome.is_some() {
                return Err(Error::Parse("record after outcome".into()));
            }
            match parse(line)? {
                Record::Move {
                    round,
                    role: r,
                    u,
                    v,
                    fallback,
                } => moves.push(MoveRecord {
                    round,
                    role: role(&r)?,
                    edge: Edge::new(u, v)?,
                    fallback,
                }),
                Record::Outcome { result, t } => {
                    outcome = Some(match (result.as_str(), t) {
                        ("hit", Some(t)) => Outcome::HitAtRound(t),
                        ("never", None) => Outcome::NeverHit,
                        _ => return Err(Error::Parse(format!("bad outcome `{result}`"))),
                    })
                }
                Record::Header { .. } => return Err(Error::Parse("duplicate header".into())),
            }
        }
        let mut transcript = Self {
            rules,
            seed,
            moves,
            outcome: outcome.ok_or_else(|| Error::Parse("missing outcome record".into()))?,
            final_claims: Vec::new(),
        };
        transcript.final_claims = transcript.replay()?.claims().to_vec();
        Ok(transcript)
    }
}
