//! Directed hypergraphs, their incidence arrays, and the set-theoretic
//! one-step frontier oracles that linear-algebraic traversal is judged
//! against.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::array::{AssociativeArray, KeySpace};
use crate::error::{Error, Result};
use crate::valueset::{ValueSet, Verdict};

/// A hyperedge: a key plus nonempty out- (initial) and in- (terminal)
/// vertex sets. Set members are kept in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperedge {
    pub key: String,
    pub out_set: Vec<String>,
    pub in_set: Vec<String>,
}

/// A directed hypergraph with fixed total orderings of vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedHypergraph {
    vertices: KeySpace,
    edge_space: KeySpace,
    edges: Vec<Hyperedge>,
}

impl DirectedHypergraph {
    pub fn new(vertices: KeySpace, edges: Vec<Hyperedge>) -> Result<Self> {
        let edge_space = KeySpace::new(edges.iter().map(|e| e.key.clone()))?;
        for edge in &edges {
            if edge.out_set.is_empty() || edge.in_set.is_empty() {
                return Err(Error::MalformedHypergraph(format!(
                    "edge `{}` must have nonempty out- and in-sets",
                    edge.key
                )));
            }
            for side in [&edge.out_set, &edge.in_set] {
                let mut seen = BTreeSet::new();
                for v in side {
                    if !vertices.contains(v) {
                        return Err(Error::KeyDomain {
                            key: v.clone(),
                            context: format!("edge `{}` vertex set", edge.key),
                        });
                    }
                    if !seen.insert(v.clone()) {
                        return Err(Error::MalformedHypergraph(format!(
                            "edge `{}` repeats vertex `{v}`",
                            edge.key
                        )));
                    }
                }
            }
        }
        Ok(DirectedHypergraph {
            vertices,
            edge_space,
            edges,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &[&str], &[&str])]) -> Result<Self> {
        let vs = KeySpace::new(vertices.iter().copied())?;
        let edges = edges
            .iter()
            .map(|(k, out, inn)| Hyperedge {
                key: k.to_string(),
                out_set: out.iter().map(|s| s.to_string()).collect(),
                in_set: inn.iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        Self::new(vs, edges)
    }

    pub fn vertices(&self) -> &KeySpace {
        &self.vertices
    }

    pub fn edge_space(&self) -> &KeySpace {
        &self.edge_space
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    fn check_vertices(&self, s: &[String]) -> Result<()> {
        for v in s {
            if !self.vertices.contains(v) {
                return Err(Error::KeyDomain {
                    key: v.clone(),
                    context: "hypergraph vertices".to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Which side of a hyperedge an incidence weight applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Out,
    In,
}

/// Optional nonzero weights for incidence positions; every position not
/// mentioned gets the default weight `1`.
#[derive(Clone, Debug, Default)]
pub struct IncidenceWeights<V> {
    weights: HashMap<(String, String, Side), V>,
}

impl<V: Clone> IncidenceWeights<V> {
    pub fn new() -> Self {
        IncidenceWeights {
            weights: HashMap::new(),
        }
    }

    pub fn set(&mut self, edge: &str, vertex: &str, side: Side, value: V) {
        self.weights
            .insert((edge.to_string(), vertex.to_string(), side), value);
    }

    pub fn get(&self, edge: &str, vertex: &str, side: Side) -> Option<&V> {
        self.weights
            .get(&(edge.to_string(), vertex.to_string(), side))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(String, String, Side), &V)> {
        self.weights.iter()
    }
}

/// Out- and in-incidence arrays of one hypergraph: rows are hyperedges,
/// columns are vertices, and the nonzero pattern marks the incidences.
#[derive(Clone, Debug)]
pub struct IncidencePair<V> {
    pub e_out: AssociativeArray<V>,
    pub e_in: AssociativeArray<V>,
}

/// Build the incidence pair. The default weight is `1` at every incidence;
/// supplied weights must be nonzero and must sit on true incidences,
/// otherwise the defining iff would break.
pub fn build_incidence<S: ValueSet>(
    vs: &S,
    g: &DirectedHypergraph,
    weights: &IncidenceWeights<S::Value>,
) -> Result<IncidencePair<S::Value>> {
    for ((edge, vertex, side), v) in weights.iter() {
        if vs.is_zero(v) {
            return Err(Error::InvalidWeight {
                edge: edge.clone(),
                vertex: vertex.clone(),
                reason: "weight is zero".to_string(),
            });
        }
        let pos = g.edge_space.position(edge).ok_or_else(|| Error::KeyDomain {
            key: edge.clone(),
            context: "hypergraph edges".to_string(),
        })?;
        let e = &g.edges[pos];
        let set = match side {
            Side::Out => &e.out_set,
            Side::In => &e.in_set,
        };
        if !set.contains(vertex) {
            return Err(Error::InvalidWeight {
                edge: edge.clone(),
                vertex: vertex.clone(),
                reason: "not an incidence".to_string(),
            });
        }
    }
    let mut e_out = AssociativeArray::new(g.edge_space.clone(), g.vertices.clone());
    let mut e_in = AssociativeArray::new(g.edge_space.clone(), g.vertices.clone());
    for edge in &g.edges {
        for v in &edge.out_set {
            let w = weights
                .get(&edge.key, v, Side::Out)
                .cloned()
                .unwrap_or_else(|| vs.one());
            e_out.set(&edge.key, v, w)?;
        }
        for v in &edge.in_set {
            let w = weights
                .get(&edge.key, v, Side::In)
                .cloned()
                .unwrap_or_else(|| vs.one());
            e_in.set(&edge.key, v, w)?;
        }
    }
    Ok(IncidencePair { e_out, e_in })
}

/// Check that the pair's nonzero patterns equal the incidence relations,
/// both directions. Returns the first violating (edge, vertex) position.
pub fn validate_incidence<S: ValueSet>(
    vs: &S,
    g: &DirectedHypergraph,
    pair: &IncidencePair<S::Value>,
) -> Result<Verdict<(String, String)>> {
    for (arr, side_name) in [(&pair.e_out, Side::Out), (&pair.e_in, Side::In)] {
        if !arr.rows().same_ordering(&g.edge_space) || !arr.cols().same_ordering(&g.vertices) {
            return Err(Error::Contraction {
                reason: "incidence key spaces do not match the hypergraph".to_string(),
            });
        }
        for edge in &g.edges {
            let set = match side_name {
                Side::Out => &edge.out_set,
                Side::In => &edge.in_set,
            };
            for v in g.vertices.keys() {
                let nonzero = !vs.is_zero(&arr.read(vs, &edge.key, v)?);
                if nonzero != set.contains(v) {
                    return Ok(Verdict::Fails((edge.key.clone(), v.clone())));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Edges with an initial vertex in `sources`, in edge order.
pub fn oracle_edge_frontier(g: &DirectedHypergraph, sources: &[String]) -> Result<Vec<String>> {
    g.check_vertices(sources)?;
    Ok(g.edges
        .iter()
        .filter(|e| e.out_set.iter().any(|v| sources.contains(v)))
        .map(|e| e.key.clone())
        .collect())
}

/// Terminal vertices of the edges reached from `sources`, in vertex order.
pub fn oracle_vertex_frontier(g: &DirectedHypergraph, sources: &[String]) -> Result<Vec<String>> {
    g.check_vertices(sources)?;
    let mut reached = BTreeSet::new();
    for e in &g.edges {
        if e.out_set.iter().any(|v| sources.contains(v)) {
            reached.extend(e.in_set.iter().cloned());
        }
    }
    Ok(g.vertices
        .keys()
        .iter()
        .filter(|v| reached.contains(*v))
        .cloned()
        .collect())
}

const VERTEX_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn nonempty_subsets(vertices: &[&str]) -> Vec<Vec<String>> {
    let n = vertices.len();
    (1..(1u32 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| vertices[i].to_string())
                .collect()
        })
        .collect()
}

/// Every hypergraph with `1..=max_vertices` vertices and `1..=max_edges`
/// hyperedges over canonical names, in deterministic order.
pub fn enumerate_hypergraphs(
    max_vertices: usize,
    max_edges: usize,
) -> Result<Vec<DirectedHypergraph>> {
    if max_vertices > 3 || max_edges > 2 {
        return Err(Error::BoundsExceeded(format!(
            "exhaustive mode allows up to 3 vertices and 2 edges, got {max_vertices}/{max_edges}"
        )));
    }
    if max_vertices == 0 || max_edges == 0 {
        return Err(Error::BoundsExceeded(
            "need at least one vertex and one edge".to_string(),
        ));
    }
    let mut out = Vec::new();
    for nv in 1..=max_vertices {
        let names: Vec<&str> = VERTEX_NAMES[..nv].to_vec();
        let subsets = nonempty_subsets(&names);
        let pairs: Vec<(Vec<String>, Vec<String>)> = subsets
            .iter()
            .flat_map(|o| subsets.iter().map(move |i| (o.clone(), i.clone())))
            .collect();
        for ne in 1..=max_edges {
            // every assignment of (out, in) pairs to the ne ordered edges
            let mut choice = vec![0usize; ne];
            loop {
                let edges: Vec<Hyperedge> = (0..ne)
                    .map(|e| Hyperedge {
                        key: format!("k{}", e + 1),
                        out_set: pairs[choice[e]].0.clone(),
                        in_set: pairs[choice[e]].1.clone(),
                    })
                    .collect();
                let vs = KeySpace::new(names.iter().copied())?;
                out.push(DirectedHypergraph::new(vs, edges)?);
                // odometer increment
                let mut slot = ne;
                loop {
                    if slot == 0 {
                        break;
                    }
                    slot -= 1;
                    choice[slot] += 1;
                    if choice[slot] < pairs.len() {
                        break;
                    }
                    choice[slot] = 0;
                }
                if choice.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// A random hypergraph within the given bounds, for seeded sweeps.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> DirectedHypergraph {
    let nv = rng.gen_range(1..=max_vertices.min(VERTEX_NAMES.len()));
    let ne = rng.gen_range(1..=max_edges);
    let names: Vec<&str> = VERTEX_NAMES[..nv].to_vec();
    let random_set = |rng: &mut R| -> Vec<String> {
        let size = rng.gen_range(1..=nv);
        let mut picked: Vec<&str> = names.clone();
        picked.shuffle(rng);
        let mut chosen: Vec<String> = picked[..size].iter().map(|s| s.to_string()).collect();
        chosen.sort_by_key(|v| names.iter().position(|n| n == v));
        chosen
    };
    let edges: Vec<Hyperedge> = (0..ne)
        .map(|e| Hyperedge {
            key: format!("k{}", e + 1),
            out_set: random_set(rng),
            in_set: random_set(rng),
        })
        .collect();
    DirectedHypergraph::new(KeySpace::new(names).unwrap(), edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valueset::TableValueSet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fig_1_1() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap()
    }

    fn fig_1_3() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a", "b", "c"], &[("k", &["a"], &["b", "c"])]).unwrap()
    }

    fn fig_1_6() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(
            &["a", "b"],
            &[
                ("k1", &["a"], &["a"]),
                ("k2", &["a"], &["b"]),
                ("k3", &["b"], &["b"]),
            ],
        )
        .unwrap()
    }

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn default_incidence_is_all_ones_and_validates() {
        let vs = TableValueSet::boolean();
        let g = fig_1_1();
        let pair = build_incidence(&vs, &g, &IncidenceWeights::new()).unwrap();
        assert_eq!(pair.e_out.read(&vs, "k", "a").unwrap(), vs.one());
        assert_eq!(pair.e_out.read(&vs, "k", "b").unwrap(), vs.one());
        assert_eq!(pair.e_in.read(&vs, "k", "a").unwrap(), vs.one());
        assert_eq!(pair.e_in.read(&vs, "k", "b").unwrap(), vs.zero());
        assert!(validate_incidence(&vs, &g, &pair).unwrap().holds());
    }

    #[test]
    fn self_loop_weight_lands_in_e_out() {
        let vs = TableValueSet::min_plus(6);
        let g = DirectedHypergraph::from_parts(&["a"], &[("k", &["a"], &["a"])]).unwrap();
        let w = vs.parse_value("3").unwrap();
        let mut weights = IncidenceWeights::new();
        weights.set("k", "a", Side::Out, w);
        let pair = build_incidence(&vs, &g, &weights).unwrap();
        assert_eq!(pair.e_out.read(&vs, "k", "a").unwrap(), w);
        assert_eq!(pair.e_in.read(&vs, "k", "a").unwrap(), vs.one());
    }

    #[test]
    fn zero_or_misplaced_weights_are_rejected() {
        let vs = TableValueSet::boolean();
        let g = fig_1_1();
        let mut zero_w = IncidenceWeights::new();
        zero_w.set("k", "a", Side::Out, vs.zero());
        assert!(build_incidence(&vs, &g, &zero_w).is_err());

        let mut misplaced = IncidenceWeights::new();
        misplaced.set("k", "b", Side::In, vs.one()); // b is not terminal
        assert!(build_incidence(&vs, &g, &misplaced).is_err());
    }

    #[test]
    fn validate_catches_broken_patterns() {
        let vs = TableValueSet::boolean();
        let g = fig_1_1();
        let mut pair = build_incidence(&vs, &g, &IncidenceWeights::new()).unwrap();
        // zero written at a true incidence
        pair.e_out.set("k", "a", vs.zero()).unwrap();
        match validate_incidence(&vs, &g, &pair).unwrap() {
            Verdict::Fails((k, v)) => {
                assert_eq!(k, "k");
                assert_eq!(v, "a");
            }
            Verdict::Holds => panic!("broken pattern must be caught"),
        }
        // nonzero at a non-incidence
        let mut pair2 = build_incidence(&vs, &g, &IncidenceWeights::new()).unwrap();
        pair2.e_in.set("k", "b", vs.one()).unwrap();
        assert!(!validate_incidence(&vs, &g, &pair2).unwrap().holds());
    }

    #[test]
    fn oracle_frontiers_match_figures() {
        let g1 = fig_1_1();
        assert_eq!(oracle_edge_frontier(&g1, &strs(&["a"])).unwrap(), strs(&["k"]));
        assert_eq!(oracle_edge_frontier(&g1, &[]).unwrap(), Vec::<String>::new());
        assert_eq!(
            oracle_edge_frontier(&g1, &strs(&["a", "b"])).unwrap(),
            strs(&["k"])
        );

        let g3 = fig_1_3();
        assert_eq!(
            oracle_vertex_frontier(&g3, &strs(&["a"])).unwrap(),
            strs(&["b", "c"])
        );
        assert_eq!(oracle_vertex_frontier(&g3, &[]).unwrap(), Vec::<String>::new());

        let g6 = fig_1_6();
        assert_eq!(
            oracle_vertex_frontier(&g6, &strs(&["a"])).unwrap(),
            strs(&["a", "b"])
        );

        assert!(oracle_vertex_frontier(&g1, &strs(&["zz"])).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_hypergraphs(1, 1).unwrap().len(), 1);
        // 2 vertices, up to 1 edge: 1 (nv=1) + 9 (nv=2) graphs
        let graphs = enumerate_hypergraphs(2, 1).unwrap();
        assert_eq!(graphs.len(), 10);
        // full bounds: nv=1: 1+1, nv=2: 9+81, nv=3: 49+2401
        assert_eq!(enumerate_hypergraphs(3, 2).unwrap().len(), 2542);
        assert!(enumerate_hypergraphs(4, 2).is_err());
        assert!(enumerate_hypergraphs(3, 3).is_err());
    }

    #[test]
    fn enumeration_contains_figure_graphs() {
        let graphs = enumerate_hypergraphs(3, 2).unwrap();
        // compare by structure; enumerated edge keys are canonical k1, k2
        let shape = |g: &DirectedHypergraph| {
            (
                g.vertices().keys().to_vec(),
                g.edges()
                    .iter()
                    .map(|e| (e.out_set.clone(), e.in_set.clone()))
                    .collect::<Vec<_>>(),
            )
        };
        let g11 = shape(&fig_1_1());
        let g13 = shape(&fig_1_3());
        assert!(graphs.iter().any(|g| shape(g) == g11));
        assert!(graphs.iter().any(|g| shape(g) == g13));
        // every enumerated graph validates its default incidence
        let vs = TableValueSet::boolean();
        for g in graphs.iter().take(200) {
            let pair = build_incidence(&vs, g, &IncidenceWeights::new()).unwrap();
            assert!(validate_incidence(&vs, g, &pair).unwrap().holds());
        }
    }

    #[test]
    fn oracle_monotone_and_unions_over_singletons() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let g = random_hypergraph(&mut rng, 5, 4);
            let all: Vec<String> = g.vertices().keys().to_vec();
            let small: Vec<String> = all.iter().take(1).cloned().collect();
            let f_small = oracle_vertex_frontier(&g, &small).unwrap();
            let f_all = oracle_vertex_frontier(&g, &all).unwrap();
            for v in &f_small {
                assert!(f_all.contains(v));
            }
            // union over singletons
            let mut union: BTreeSet<String> = BTreeSet::new();
            for s in &all {
                union.extend(oracle_vertex_frontier(&g, &[s.clone()]).unwrap());
            }
            let f_all_set: BTreeSet<String> = f_all.into_iter().collect();
            assert_eq!(union, f_all_set);
        }
    }
}
