//! Hypergraphs of matching-field ideals and the co-interval property.
//!
//! `H_a` is the 3-uniform hypergraph on the variables whose edges are the
//! supports of the generators of `M_a`. Relabelling its vertices (largest
//! `z` first, then the `y`s and `x`s of the top layer in block order) gives a
//! hypergraph `G_a` on `1..=m+k+l`, which is checked to be co-interval.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{Family, Monomial, VariableId};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::matching_field::{generators, sort_generators, BlockStructure};

/// A `d`-uniform hypergraph on integer vertices. Edges are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGraph {
    arity: usize,
    vertices: BTreeSet<usize>,
    edges: BTreeSet<Vec<usize>>,
}

impl DGraph {
    pub fn new<V, E>(arity: usize, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = usize>,
        E: IntoIterator<Item = Vec<usize>>,
    {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] < w[1]);
            if e.len() != arity || !distinct || !e.iter().all(|v| vertices.contains(v)) {
                return Err(Error::InvalidSubset(e));
            }
            set.insert(e);
        }
        Ok(Self { arity, vertices, edges: set })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Vec<usize>> {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_subgraph_of(&self, other: &DGraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Edges whose minimum vertex is `v`, with `v` removed.
    pub fn v_layer(&self, v: usize) -> Result<DGraph> {
        if self.arity < 2 {
            return Err(Error::ArityTooSmall);
        }
        let vertices = self.vertices.iter().copied().filter(|&u| u != v).collect();
        let edges = self.edges.iter().filter(|e| e[0] == v).map(|e| e[1..].to_vec()).collect();
        Ok(DGraph { arity: self.arity - 1, vertices, edges })
    }
}

impl fmt::Display for DGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| edge_label(e)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Concatenated vertex labels (`"357"`), comma-separated once any label
/// exceeds one digit.
pub fn edge_label(e: &[usize]) -> String {
    if e.iter().all(|&v| v < 10) {
        e.iter().map(|v| v.to_string()).collect()
    } else {
        e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Where the co-interval recursion failed: inside the layer reached by
/// removing `path` (in order), vertex `j`'s layer is not contained in vertex
/// `i`'s layer; `edge` is a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CointervalFailure {
    pub path: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub edge: Vec<usize>,
}

/// Recursive co-interval test over the vertices incident to an edge: for
/// incident `i < j` the `j`-layer is a subgraph of the `i`-layer, and every
/// layer is itself co-interval. Every 1-graph is co-interval.
pub fn is_cointerval(h: &DGraph) -> std::result::Result<(), CointervalFailure> {
    cointerval_rec(h, &mut Vec::new())
}

fn cointerval_rec(h: &DGraph, path: &mut Vec<usize>) -> std::result::Result<(), CointervalFailure> {
    if h.arity <= 1 {
        return Ok(());
    }
    // only vertices incident to some edge take part; an isolated vertex has
    // an empty layer and would otherwise block every later nonempty one
    let incident: BTreeSet<usize> = h.edges.iter().flatten().copied().collect();
    let layers: BTreeMap<usize, DGraph> =
        incident.iter().map(|&v| (v, h.v_layer(v).expect("arity >= 2"))).collect();
    for (&i, li) in &layers {
        for (&j, lj) in layers.range(i + 1..) {
            if let Some(e) = lj.edges.difference(&li.edges).next() {
                return Err(CointervalFailure { path: path.clone(), i, j, edge: e.clone() });
            }
        }
    }
    for (&v, layer) in &layers {
        path.push(v);
        cointerval_rec(layer, path)?;
        path.pop();
    }
    Ok(())
}

/// `H_a` with vertices encoded as variable positions (`x` in `0..n`, `y` in
/// `n..2n`, `z` in `2n..3n`), so each sorted edge reads `[x, y, z]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingHypergraph {
    n: usize,
    graph: DGraph,
}

pub fn hypergraph_h(a: &BlockStructure) -> Result<MatchingHypergraph> {
    let n = a.n();
    let edges = generators(a)?.into_iter().map(|t| t.variables().iter().map(|v| v.position(n)).collect());
    Ok(MatchingHypergraph { n, graph: DGraph::new(3, 0..3 * n, edges)? })
}

impl MatchingHypergraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &DGraph {
        &self.graph
    }

    pub fn variable(&self, v: usize) -> VariableId {
        VariableId::from_position(self.n, v)
    }

    /// Edges as `(x, y, z)` column indices.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.graph
            .edges
            .iter()
            .map(|e| (self.variable(e[0]).index, self.variable(e[1]).index, self.variable(e[2]).index))
            .collect()
    }

    /// `{x_i y_j : x_i y_j z_k ∈ E}`.
    pub fn z_layer(&self, k: usize) -> DGraph {
        let z = VariableId::z(k).position(self.n);
        let edges = self.graph.edges.iter().filter(|e| e[2] == z).map(|e| e[..2].to_vec());
        DGraph::new(2, (0..3 * self.n).filter(|&u| u != z), edges).expect("sub-edges are valid")
    }

    /// `{x_i : x_i y_l z_k ∈ E}`.
    pub fn zy_layer(&self, k: usize, l: usize) -> DGraph {
        let z = VariableId::z(k).position(self.n);
        let y = VariableId::y(l).position(self.n);
        let edges = self.graph.edges.iter().filter(|e| e[2] == z && e[1] == y).map(|e| vec![e[0]]);
        DGraph::new(1, (0..3 * self.n).filter(|&u| u != z && u != y), edges).expect("sub-edges are valid")
    }

    /// Distinct z-columns occurring in edges, ascending.
    pub fn z_values(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.triples().into_iter().map(|t| t.2).collect();
        s.into_iter().collect()
    }
}

/// Outcome of the layer-nesting checks on `H_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerContainment {
    /// For occurring z-columns `v < v'`: `z_v`-layer ⊆ `z_{v'}`-layer.
    pub z_chain_ok: bool,
    /// `(v, v', missing xy-edge as columns)`.
    pub z_witness: Option<(usize, usize, (usize, usize))>,
    /// In the top z-layer, y-columns in block order `y_j` before `y_m` give
    /// `(z, y_m)`-layer ⊆ `(z, y_j)`-layer.
    pub top_layer_nested: bool,
    /// `(z, y_j, y_m, missing x column)`.
    pub y_witness: Option<(usize, usize, usize, usize)>,
    /// The same y-nesting test for every other z-layer, reported only.
    pub other_layers_nested: Vec<(usize, bool)>,
}

impl LayerContainment {
    pub fn holds(&self) -> bool {
        self.z_chain_ok && self.top_layer_nested
    }
}

pub fn check_layer_containment(a: &BlockStructure) -> Result<LayerContainment> {
    let h = hypergraph_h(a)?;
    let zs = h.z_values();
    let mut z_witness = None;
    'outer: for (p, &v) in zs.iter().enumerate() {
        let lower = h.z_layer(v);
        for &w in &zs[p + 1..] {
            let upper = h.z_layer(w);
            if let Some(e) = lower.edges.difference(&upper.edges).next() {
                z_witness = Some((v, w, (h.variable(e[0]).index, h.variable(e[1]).index)));
                break 'outer;
            }
        }
    }

    let order = sort_generators(a)?;
    let y_nesting = |z: usize| -> Option<(usize, usize, usize, usize)> {
        let mut ys: Vec<usize> = Vec::new();
        for t in order.iter().filter(|t| t.z == z) {
            if !ys.contains(&t.y) {
                ys.push(t.y);
            }
        }
        for (p, &yj) in ys.iter().enumerate() {
            let earlier = h.zy_layer(z, yj);
            for &ym in &ys[p + 1..] {
                let later = h.zy_layer(z, ym);
                if let Some(e) = later.edges.difference(&earlier.edges).next() {
                    return Some((z, yj, ym, h.variable(e[0]).index));
                }
            }
        }
        None
    };

    let top = *zs.last().expect("n >= 3 gives at least one edge");
    let y_witness = y_nesting(top);
    let other_layers_nested = zs[..zs.len() - 1].iter().map(|&z| (z, y_nesting(z).is_none())).collect();
    Ok(LayerContainment {
        z_chain_ok: z_witness.is_none(),
        z_witness,
        top_layer_nested: y_witness.is_none(),
        y_witness,
        other_layers_nested,
    })
}

/// The relabelling `f` from variables of `H_a` to `1..=m+k+l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelabelMap {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    labels: BTreeMap<VariableId, usize>,
}

impl RelabelMap {
    pub fn label(&self, v: VariableId) -> Option<usize> {
        self.labels.get(&v).copied()
    }

    pub fn total(&self) -> usize {
        self.m + self.k + self.l
    }

    /// `(variable, label)` sorted by label.
    pub fn assignments(&self) -> Vec<(VariableId, usize)> {
        let mut v: Vec<(VariableId, usize)> = self.labels.iter().map(|(&k, &l)| (k, l)).collect();
        v.sort_by_key(|&(_, l)| l);
        v
    }
}

/// z-columns map to `1..=m` (largest first), the y-columns of the top
/// z-layer to `m+1..=m+k` in block order, and the x-columns of the first
/// `(z, y)`-layer to `m+k+1..=m+k+l` in block order.
pub fn relabel_f(a: &BlockStructure) -> Result<RelabelMap> {
    let h = hypergraph_h(a)?;
    let order = sort_generators(a)?;
    let mut labels = BTreeMap::new();

    let zs = h.z_values();
    let m = zs.len();
    for (i, &z) in zs.iter().rev().enumerate() {
        labels.insert(VariableId::z(z), i + 1);
    }

    let top = *zs.last().unwrap();
    let mut ys: Vec<usize> = Vec::new();
    for t in order.iter().filter(|t| t.z == top) {
        if !ys.contains(&t.y) {
            ys.push(t.y);
        }
    }
    let k = ys.len();
    for (i, &y) in ys.iter().enumerate() {
        labels.insert(VariableId::y(y), m + i + 1);
    }

    let first_y = ys[0];
    let xs: Vec<usize> = order.iter().filter(|t| t.z == top && t.y == first_y).map(|t| t.x).collect();
    let l = xs.len();
    for (i, &x) in xs.iter().enumerate() {
        labels.insert(VariableId::x(x), m + k + i + 1);
    }

    for (x, y, z) in h.triples() {
        for v in [VariableId::x(x), VariableId::y(y), VariableId::z(z)] {
            if !labels.contains_key(&v) {
                return Err(Error::RelabelNotTotal(v.to_string()));
            }
        }
    }
    Ok(RelabelMap { m, k, l, labels })
}

/// `G_a`: the image of `H_a` under `f`, on vertices `1..=m+k+l`.
pub fn graph_g(a: &BlockStructure) -> Result<DGraph> {
    let f = relabel_f(a)?;
    let h = hypergraph_h(a)?;
    let edges = h.triples().into_iter().map(|(x, y, z)| {
        [VariableId::z(z), VariableId::y(y), VariableId::x(x)].iter().map(|&v| f.label(v).unwrap()).collect()
    });
    DGraph::new(3, 1..=f.total(), edges)
}

/// `N_a`: the edges of `G_a` read as squarefree monomials in `t_1..t_{m+k+l}`
/// (variable `t_i` at position `i - 1`).
pub fn relabeled_ideal(a: &BlockStructure) -> Result<MonomialIdeal> {
    let g = graph_g(a)?;
    let nvars = g.vertices().len();
    let gens = g.edges().iter().map(|e| Monomial::from_vars(nvars, &e.iter().map(|v| v - 1).collect::<Vec<_>>())).collect();
    Ok(MonomialIdeal::new(nvars, gens))
}

/// Family of a hypergraph vertex, for display.
pub fn family_of(n: usize, v: usize) -> Family {
    VariableId::from_position(n, v).family
}
