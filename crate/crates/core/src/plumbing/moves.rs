//! Neumann moves on plumbing trees: ±1 blow-ups and blow-downs, and
//! absorption/splitting of 0-weighted valence-2 vertices.
//!
//! Every move returns a new graph; surviving vertices keep their labels.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{determinant, PlumbingGraph, VertexId};
use crate::{Error, Execution, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlowUpSite {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
    /// Only valid on the empty graph.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    BlowUp { site: BlowUpSite, sign: i64 },
    BlowDown(VertexId),
    ZeroAbsorb(VertexId),
    /// Inverse of [`Move::ZeroAbsorb`]: split `vertex` into
    /// `vertex(keep_weight) - 0 - new(weight - keep_weight)` and move the
    /// listed neighbors onto the new end.
    ZeroSplit {
        vertex: VertexId,
        keep_weight: i64,
        moved: Vec<VertexId>,
    },
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::MovePreconditionFailed(msg.into()))
}

/// Removes a ±1 vertex of valence ≤ 2. Neighbors' weights drop by the sign;
/// at valence 2 the two neighbors become adjacent.
pub fn blow_down(g: &PlumbingGraph, v: VertexId) -> Result<PlumbingGraph> {
    let Some(w) = g.weight(v) else {
        return fail(format!("no vertex {v}"));
    };
    if w != 1 && w != -1 {
        return fail(format!("{v} has weight {w}, need ±1"));
    }
    let nbrs: Vec<VertexId> = g.neighbors(v).collect();
    if nbrs.len() > 2 {
        return fail(format!("{v} has valence {}", nbrs.len()));
    }
    let mut out = g.clone();
    out.remove_vertex(v);
    for &u in &nbrs {
        out.set_weight(u, g.weight(u).unwrap() - w);
    }
    if let [a, b] = nbrs[..] {
        out.add_edge(a, b);
    }
    Ok(out)
}

/// Inserts a new vertex of weight `sign` (±1) at a vertex or inside an edge.
/// Adjacent old vertices gain `sign`.
pub fn blow_up(g: &PlumbingGraph, site: &BlowUpSite, sign: i64) -> Result<PlumbingGraph> {
    if sign != 1 && sign != -1 {
        return fail(format!("blow-up sign must be ±1, got {sign}"));
    }
    let mut out = g.clone();
    match *site {
        BlowUpSite::Vertex(v) => {
            let Some(w) = g.weight(v) else {
                return fail(format!("no vertex {v}"));
            };
            out.set_weight(v, w + sign);
            let n = out.add_vertex(sign);
            out.add_edge(v, n);
        }
        BlowUpSite::Edge(a, b) => {
            if !g.has_edge(a, b) {
                return fail(format!("no edge {a}-{b}"));
            }
            out.remove_edge(a, b);
            out.set_weight(a, g.weight(a).unwrap() + sign);
            out.set_weight(b, g.weight(b).unwrap() + sign);
            let n = out.add_vertex(sign);
            out.add_edge(a, n);
            out.add_edge(n, b);
        }
        BlowUpSite::Empty => {
            if !g.is_empty() {
                return fail("isolated blow-up needs the empty graph");
            }
            out.add_vertex(sign);
        }
    }
    Ok(out)
}

/// Removes a 0-weighted valence-2 vertex `v` and fuses its two neighbors:
/// the neighbor with the larger label is deleted, its weight is added to the
/// other, and its remaining edges are moved over.
pub fn zero_absorb(g: &PlumbingGraph, v: VertexId) -> Result<PlumbingGraph> {
    let Some(w) = g.weight(v) else {
        return fail(format!("no vertex {v}"));
    };
    if w != 0 {
        return fail(format!("{v} has weight {w}, need 0"));
    }
    let nbrs: Vec<VertexId> = g.neighbors(v).collect();
    let [keep, gone] = nbrs[..] else {
        return fail(format!("{v} has valence {}, need 2", nbrs.len()));
    };
    let mut out = g.clone();
    out.remove_vertex(v);
    let moved: Vec<VertexId> = g.neighbors(gone).filter(|&u| u != v).collect();
    out.remove_vertex(gone);
    out.set_weight(keep, g.weight(keep).unwrap() + g.weight(gone).unwrap());
    for u in moved {
        out.add_edge(keep, u);
    }
    Ok(out)
}

/// Splits `vertex` through a new 0-weighted vertex. The new far end gets a
/// label larger than any existing one, so [`zero_absorb`] on the new 0-vertex
/// undoes this exactly.
pub fn zero_split(
    g: &PlumbingGraph,
    vertex: VertexId,
    keep_weight: i64,
    moved: &[VertexId],
) -> Result<PlumbingGraph> {
    let Some(w) = g.weight(vertex) else {
        return fail(format!("no vertex {vertex}"));
    };
    for &u in moved {
        if !g.has_edge(vertex, u) {
            return fail(format!("{u} is not adjacent to {vertex}"));
        }
    }
    let mut out = g.clone();
    out.set_weight(vertex, keep_weight);
    let zero = out.add_vertex(0);
    let far = out.add_vertex(w - keep_weight);
    out.add_edge(vertex, zero);
    out.add_edge(zero, far);
    for &u in moved {
        out.remove_edge(vertex, u);
        out.add_edge(far, u);
    }
    Ok(out)
}

pub fn apply(g: &PlumbingGraph, m: &Move) -> Result<PlumbingGraph> {
    match m {
        Move::BlowUp { site, sign } => blow_up(g, site, *sign),
        Move::BlowDown(v) => blow_down(g, *v),
        Move::ZeroAbsorb(v) => zero_absorb(g, *v),
        Move::ZeroSplit {
            vertex,
            keep_weight,
            moved,
        } => zero_split(g, *vertex, *keep_weight, moved),
    }
}

/// Moves that shrink the graph and are applicable right now.
pub fn reductions(g: &PlumbingGraph) -> Vec<Move> {
    let mut out = Vec::new();
    for (v, w) in g.vertices() {
        let val = g.valence(v);
        if (w == 1 || w == -1) && val <= 2 {
            out.push(Move::BlowDown(v));
        }
        if w == 0 && val == 2 {
            out.push(Move::ZeroAbsorb(v));
        }
    }
    out
}

/// Draws one applicable move. Reductions are preferred half the time so that
/// sequences do not only grow.
pub fn random_move<R: Rng + ?Sized>(g: &PlumbingGraph, rng: &mut R) -> Move {
    if g.is_empty() {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        return Move::BlowUp {
            site: BlowUpSite::Empty,
            sign,
        };
    }
    let reds = reductions(g);
    if !reds.is_empty() && rng.gen_bool(0.5) {
        return reds.choose(rng).unwrap().clone();
    }
    let verts = g.labels();
    if rng.gen_bool(0.15) {
        let v = *verts.choose(rng).unwrap();
        let w = g.weight(v).unwrap();
        let keep_weight = rng.gen_range(w - 2..=w + 2);
        let moved = g.neighbors(v).filter(|_| rng.gen_bool(0.5)).collect();
        return Move::ZeroSplit {
            vertex: v,
            keep_weight,
            moved,
        };
    }
    let edges = g.edges();
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let k = rng.gen_range(0..verts.len() + edges.len());
    let site = if k < verts.len() {
        BlowUpSite::Vertex(verts[k])
    } else {
        let (a, b) = edges[k - verts.len()];
        BlowUpSite::Edge(a, b)
    };
    Move::BlowUp { site, sign }
}

/// Boundary invariants that every move must preserve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryInvariants {
    #[serde(with = "crate::rational::bigint")]
    pub det_abs: BigInt,
    #[serde(with = "crate::rational::vec")]
    pub mubar: Vec<Rational>,
}

pub fn boundary_invariants(g: &PlumbingGraph) -> Result<BoundaryInvariants> {
    Ok(BoundaryInvariants {
        det_abs: determinant(&g.intersection_matrix()).abs(),
        mubar: crate::spin::mubar_multiset(g)?,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MoveCheck {
    pub seed: u64,
    pub moves: Vec<Move>,
    pub before: BoundaryInvariants,
    /// Index of the first move after which the invariants differed.
    pub first_violation: Option<usize>,
    pub final_vertices: usize,
}

impl MoveCheck {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Applies `count` seeded random moves to `g`, comparing boundary invariants
/// after every move.
pub fn verify_random_moves(g: &PlumbingGraph, count: usize, seed: u64) -> Result<MoveCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let before = boundary_invariants(g)?;
    let mut cur = g.clone();
    let mut moves = Vec::with_capacity(count);
    let mut first_violation = None;
    for i in 0..count {
        let m = random_move(&cur, &mut rng);
        cur = apply(&cur, &m)?;
        moves.push(m);
        if first_violation.is_none() && boundary_invariants(&cur)? != before {
            first_violation = Some(i);
        }
    }
    Ok(MoveCheck {
        seed,
        moves,
        before,
        first_violation,
        final_vertices: cur.len(),
    })
}

/// Runs [`verify_random_moves`] for each `(graph, length, seed)` job.
pub fn verify_many(
    jobs: Vec<(PlumbingGraph, usize, u64)>,
    exec: Execution,
) -> Result<Vec<MoveCheck>> {
    exec.map(jobs, |(g, len, seed)| verify_random_moves(&g, len, seed))
        .into_iter()
        .collect()
}
