use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::IntersectionMatrix;
use crate::{Error, Rational, Result, SeifertInvariants};

/// Stable vertex label. Labels survive moves; new vertices get fresh labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A weighted tree. Vertex order everywhere (matrices, bit vectors) is
/// ascending label order.
#[derive(Clone, Debug, Default)]
pub struct PlumbingGraph {
    weights: BTreeMap<VertexId, i64>,
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    next_id: u32,
}

/// Equality ignores the label allocator state.
impl PartialEq for PlumbingGraph {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights && self.adj == other.adj
    }
}

impl Eq for PlumbingGraph {}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, weight: i64) -> VertexId {
        let id = VertexId(self.next_id);
        self.next_id += 1;
        self.weights.insert(id, weight);
        self.adj.insert(id, BTreeSet::new());
        id
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v);
        self.adj.get_mut(&u).expect("unknown vertex").insert(v);
        self.adj.get_mut(&v).expect("unknown vertex").insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        if let Some(ns) = self.adj.remove(&v) {
            for u in ns {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
        self.weights.remove(&v);
    }

    pub(crate) fn set_weight(&mut self, v: VertexId, w: i64) {
        *self.weights.get_mut(&v).expect("unknown vertex") = w;
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.weights.contains_key(&v)
    }

    pub fn weight(&self, v: VertexId) -> Option<i64> {
        self.weights.get(&v).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, i64)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Label the next added vertex will receive.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.next_id)
    }

    /// Connected with `|E| = |V| - 1` (the empty graph counts as a tree).
    pub fn is_tree(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        if self.edges().len() != n - 1 {
            return false;
        }
        let start = *self.weights.keys().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == n
    }

    pub fn labels(&self) -> Vec<VertexId> {
        self.weights.keys().copied().collect()
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let labels = self.labels();
        let index: BTreeMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = labels.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &v) in labels.iter().enumerate() {
            rows[i][i] = self.weights[&v];
            for u in self.neighbors(v) {
                rows[i][index[&u]] = 1;
            }
        }
        IntersectionMatrix::with_labels(labels, rows)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph plumbing {\n");
        for (v, w) in self.vertices() {
            let _ = writeln!(s, "  {} [label=\"{}\"];", v.0, w);
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {} -- {};", u.0, v.0);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices()
                .map(|(id, weight)| JsonVertex { id: id.0, weight })
                .collect(),
            edges: self.edges().into_iter().map(|(u, v)| [u.0, v.0]).collect(),
        }
    }

    /// Rebuilds a graph from its JSON form, keeping labels. Rejects non-trees.
    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let mut g = PlumbingGraph::new();
        for v in &j.vertices {
            let id = VertexId(v.id);
            if g.weights.insert(id, v.weight).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {}", v.id)));
            }
            g.adj.insert(id, BTreeSet::new());
            g.next_id = g.next_id.max(v.id + 1);
        }
        for &[u, v] in &j.edges {
            let (u, v) = (VertexId(u), VertexId(v));
            if u == v || !g.contains(u) || !g.contains(v) {
                return Err(Error::InvalidGraph(format!("bad edge {}-{}", u.0, v.0)));
            }
            g.add_edge(u, v);
        }
        if !g.is_tree() {
            return Err(Error::InvalidGraph("graph is not a tree".into()));
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: u32,
    pub weight: i64,
}

/// `{vertices: [{id, weight}], edges: [[id, id]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<[u32; 2]>,
}

/// Hirzebruch–Jung expansion `p/q = c_1 - 1/(c_2 - … - 1/c_k)`, all `c_j >= 2`.
pub fn neg_cont_frac(p: i64, q: i64) -> Result<Vec<i64>> {
    if !(q >= 1 && p > q && p.gcd(&q) == 1) {
        return Err(Error::BadFraction { p, q });
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q > 0 {
        let c = Integer::div_ceil(&p, &q);
        out.push(c);
        (p, q) = (q, c * q - p);
    }
    Ok(out)
}

/// Evaluates `c_1 - 1/(c_2 - … - 1/c_k)` exactly.
pub fn eval_neg_cont_frac(cs: &[i64]) -> Rational {
    let mut it = cs.iter().rev();
    let mut acc = Rational::from_integer(*it.next().expect("empty continued fraction") as i128);
    for &c in it {
        acc = Rational::from_integer(c as i128) - acc.recip();
    }
    acc
}

/// Star-shaped plumbing: center of weight `b`, and for each pair a leg with
/// weights `-c_{i1}, …, -c_{ik}` from `neg_cont_frac(a_i, b_i)`, the `-c_{i1}`
/// end adjacent to the center. The center is `v0`; legs follow in pair order.
pub fn star_plumbing(si: &SeifertInvariants) -> Result<PlumbingGraph> {
    if !si.is_rational_homology_sphere() {
        return Err(Error::NotRationalHomologySphere);
    }
    let mut g = PlumbingGraph::new();
    let center = g.add_vertex(si.b());
    for &(a, b) in si.pairs() {
        let mut prev = center;
        for c in neg_cont_frac(a, b)? {
            let v = g.add_vertex(-c);
            g.add_edge(prev, v);
            prev = v;
        }
    }
    Ok(g)
}
