//! Explicit jump sequences that certify terminal states and solvability.
//!
//! Every generator returns a [`StrategyCertificate`], which is checked by
//! replaying its jumps before it is handed out.

mod cartesian;
mod complete;
mod hampath;
mod join;
mod product;

use serde::{Deserialize, Serialize};

use crate::engine::{Config, JumpSequence};
use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::{Error, Result};

pub use cartesian::cartesian_kk_solve;
pub use complete::{kk_solve_with_target, p2k3_clear, p2k3_vertex, Alternative, ChoiceSet};
pub use hampath::hampath_solve;
pub use join::solve_join;
pub use product::{product_compose, product_compose_with, weak_factor_condition, Finish};

/// What a certificate proves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimKind {
    /// Holes at an independent set of `value` vertices reduce to one peg, so
    /// that set is a terminal state and `F >= value`.
    FoolsAtLeast { value: usize },
    /// The start configuration reduces to one peg.
    Solvable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub description: String,
    #[serde(flatten)]
    pub kind: ClaimKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyCertificate {
    pub claim: Claim,
    pub graph: Graph,
    pub start: Config,
    pub sequence: JumpSequence,
    pub end: Config,
}

/// On-disk form of a certificate.
#[derive(Serialize, Deserialize)]
struct Document {
    claim: Claim,
    graph: String,
    start: String,
    jumps: JumpSequence,
    end: String,
}

/// Applies `seq` to `start` on `g`; the error names the first illegal jump.
pub fn replay(g: &Graph, start: &Config, seq: &JumpSequence) -> Result<Config> {
    if start.n() != g.n() {
        return Err(Error::Precondition(format!(
            "configuration has {} vertices, graph has {}",
            start.n(),
            g.n()
        )));
    }
    seq.replay(g, start)
}

impl StrategyCertificate {
    /// Replays the sequence and builds the certificate, failing if the result
    /// does not support the claim.
    pub(crate) fn build(graph: Graph, claim: Claim, start: Config, sequence: JumpSequence) -> Result<Self> {
        let end = replay(&graph, &start, &sequence).map_err(|e| Error::Strategy(e.to_string()))?;
        let cert = StrategyCertificate {
            claim,
            graph,
            start,
            sequence,
            end,
        };
        cert.check().map_err(|e| Error::Strategy(e.to_string()))?;
        Ok(cert)
    }

    /// Checks the replay and the claim.
    pub fn check(&self) -> Result<()> {
        let end = replay(&self.graph, &self.start, &self.sequence)?;
        let fail = |msg: String| Err(Error::Certificate(msg));
        if end != self.end {
            return fail(format!("replay ends at {}, certificate says {}", end.to_hex(), self.end.to_hex()));
        }
        if end.peg_count() != 1 {
            return fail(format!("{} pegs remain", end.peg_count()));
        }
        if let ClaimKind::FoolsAtLeast { value } = self.claim.kind {
            let holes = self.start.holes();
            if holes.len() != value {
                return fail(format!("{} starting holes for a claim of {value}", holes.len()));
            }
            if !self.graph.is_independent(holes) {
                return fail("the starting holes are not independent".into());
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Document {
            claim: self.claim.clone(),
            graph: write_graph6(&self.graph),
            start: self.start.to_hex(),
            jumps: self.sequence.clone(),
            end: self.end.to_hex(),
        })
        .expect("certificate serializes")
    }

    /// Parses a certificate without checking it.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))?;
        let graph = parse_graph6(&doc.graph)?;
        let n = graph.n();
        Ok(StrategyCertificate {
            claim: doc.claim,
            start: Config::from_hex(n, &doc.start)?,
            end: Config::from_hex(n, &doc.end)?,
            sequence: doc.jumps,
            graph,
        })
    }
}

/// Error for an unmet precondition.
fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Jump;
    use crate::graph::families::path;
    use crate::graph::VertexSet;

    #[test]
    fn replay_examples() {
        let g = path(3);
        let start = Config::new(3, VertexSet(0b011)).unwrap();
        let end = replay(&g, &start, &JumpSequence(vec![Jump::new(0, 1, 2)])).unwrap();
        assert_eq!(end.pegs(), VertexSet::singleton(2));
        let stale = JumpSequence(vec![Jump::new(0, 1, 2), Jump::new(0, 1, 2)]);
        assert!(matches!(replay(&g, &start, &stale), Err(Error::Replay { index: 1, .. })));
    }

    #[test]
    fn json_round_trip_and_tampering() {
        let g = path(3);
        let cert = StrategyCertificate::build(
            g,
            Claim {
                description: "P_3".into(),
                kind: ClaimKind::FoolsAtLeast { value: 1 },
            },
            Config::with_holes(3, VertexSet::singleton(2)).unwrap(),
            JumpSequence(vec![Jump::new(0, 1, 2)]),
        )
        .unwrap();
        let text = cert.to_json();
        let back = StrategyCertificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        back.check().unwrap();

        let mut bad = back.clone();
        bad.end = Config::new(3, VertexSet::singleton(0)).unwrap();
        assert!(matches!(bad.check(), Err(Error::Certificate(_))));
        let mut bad = back;
        bad.claim.kind = ClaimKind::FoolsAtLeast { value: 2 };
        assert!(bad.check().is_err());
        assert!(StrategyCertificate::from_json("{}").is_err());
    }
}
