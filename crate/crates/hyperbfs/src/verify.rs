//! Executable counterparts of the necessity proofs and desk-scale
//! verification harnesses.
//!
//! The figure constructions are parametric instance generators that
//! reproduce, entry for entry, the vectors and incidence arrays used to
//! prove that each algebraic condition is necessary. The harnesses sweep
//! every enumerated value set, compare its property profile against the
//! observed traversal behavior on the construction family plus enumerated
//! hypergraphs, and report agreement with a re-executable counterexample
//! whenever a side fails.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::array::{equal_as_map, fold_plus, AssociativeArray, KeySpace};
use crate::error::{Error, Result};
use crate::hypergraph::{
    build_incidence, enumerate_hypergraphs, oracle_edge_frontier, oracle_vertex_frontier,
    DirectedHypergraph, IncidencePair, IncidenceWeights, Side,
};
use crate::traversal::{
    bfs_edge_step, bfs_vertex_step, check_condition_dagger, check_condition_star, linalg_bfs,
    linalg_bfs_transposed, linalg_bfs_via_adjacency, FrontierVector,
};
use crate::valueset::{
    enumerate_value_sets, profile, EnumeratedValueSets, TableValueSet, ValueSet, Verdict,
};

/// Size limits for exhaustive hypergraph sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_vertices: 3,
            max_edges: 2,
        }
    }
}

/// The nine hypergraphs the necessity proofs are built on.
pub mod figures {
    use super::DirectedHypergraph;

    /// Two vertices, one hyperedge from `{a, b}` to `{a}`.
    pub fn fig1_1() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap()
    }

    /// One vertex with a self-looped hyperedge.
    pub fn fig1_2() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a"], &[("k", &["a"], &["a"])]).unwrap()
    }

    /// Three vertices, one hyperedge from `{a}` to `{b, c}`.
    pub fn fig1_3() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a", "b", "c"], &[("k", &["a"], &["b", "c"])]).unwrap()
    }

    /// One vertex with two self-looped hyperedges.
    pub fn fig1_4() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a"], &[("k1", &["a"], &["a"]), ("k2", &["a"], &["a"])])
            .unwrap()
    }

    /// Same shape as `fig1_2`; used on the vertex-step side.
    pub fn fig1_5() -> DirectedHypergraph {
        fig1_2()
    }

    /// Two vertices with a self-loop at `a`, an edge `a -> b`, and a
    /// self-loop at `b`.
    pub fn fig1_6() -> DirectedHypergraph {
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

    /// Same shape as `fig1_1`; used by all three convention proofs.
    pub fn fig2_1() -> DirectedHypergraph {
        fig1_1()
    }

    /// Three vertices, one hyperedge from `{a, b, c}` to `{a}`.
    pub fn fig2_2() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(&["a", "b", "c"], &[("k", &["a", "b", "c"], &["a"])])
            .unwrap()
    }

    /// Three vertices, two hyperedges: `{a, b} -> {a, c}` and `{c} -> {a, b}`.
    pub fn fig2_3() -> DirectedHypergraph {
        DirectedHypergraph::from_parts(
            &["a", "b", "c"],
            &[("k1", &["a", "b"], &["a", "c"]), ("k2", &["c"], &["a", "b"])],
        )
        .unwrap()
    }
}

/// Which equality or inequality a construction instance is designed to
/// exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedRelation {
    StarZeroSum,
    StarZeroDivisor,
    StarAnnihilator,
    DaggerZeroSum,
    DaggerZeroDivisor,
    DaggerAnnihilator,
    PlusComm,
    PlusAssoc,
    TimesComm,
    TimesAssoc,
    PlusAssocRegroup,
}

/// One fully instantiated proof construction: the graph, the vector (`v`
/// for edge-step instances, `e` for vertex-step instances), the incidence
/// arrays as displayed, and the parameters substituted in.
#[derive(Clone, Debug)]
pub struct ConstructionInstance<V> {
    pub label: &'static str,
    pub relation: ExpectedRelation,
    pub graph: DirectedHypergraph,
    pub vector: FrontierVector<V>,
    pub e_out: Option<AssociativeArray<V>>,
    pub e_in: Option<AssociativeArray<V>>,
    pub params: Vec<V>,
}

fn vector_of<S: ValueSet>(
    space: &KeySpace,
    values: &[(&str, S::Value)],
) -> FrontierVector<S::Value> {
    FrontierVector::from_values::<S, _>(
        space,
        values.iter().map(|(k, v)| (k.to_string(), v.clone())),
    )
    .expect("construction keys are static")
}

fn array_of<V: Clone + Eq>(
    rows: &KeySpace,
    cols: &KeySpace,
    entries: &[(&str, &str, V)],
) -> AssociativeArray<V> {
    AssociativeArray::from_entries(
        rows.clone(),
        cols.clone(),
        entries
            .iter()
            .map(|(r, c, v)| (r.to_string(), c.to_string(), v.clone())),
    )
    .expect("construction keys are static")
}

fn require_nonzero<S: ValueSet>(vs: &S, which: &str, v: &S::Value) -> Result<()> {
    if vs.is_zero(v) {
        return Err(Error::Parse {
            location: "construction parameters".to_string(),
            message: format!("parameter `{which}` must be nonzero"),
        });
    }
    Ok(())
}

/// Fig 1.1: `v = (1 1)`, `E_out` row `(v w)`; the product component is
/// `v + w`, which a zero sum collapses.
pub fn fig1_zero_sum_star<S: ValueSet>(
    vs: &S,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    let g = figures::fig1_1();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.1",
        relation: ExpectedRelation::StarZeroSum,
        vector: vector_of::<S>(&verts, &[("a", vs.one()), ("b", vs.one())]),
        e_out: Some(array_of(&edges, &verts, &[("k", "a", v.clone()), ("k", "b", w.clone())])),
        e_in: Some(array_of(&edges, &verts, &[("k", "a", vs.one())])),
        graph: g,
        params: vec![v.clone(), w.clone()],
    })
}

/// Fig 1.2: `v = (v)`, `E_out = (w)`; the component is `v * w`, which a
/// zero divisor collapses.
pub fn fig1_zero_divisor_star<S: ValueSet>(
    vs: &S,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    let g = figures::fig1_2();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.2",
        relation: ExpectedRelation::StarZeroDivisor,
        vector: vector_of::<S>(&verts, &[("a", v.clone())]),
        e_out: Some(array_of(&edges, &verts, &[("k", "a", w.clone())])),
        e_in: Some(array_of(&edges, &verts, &[("k", "a", vs.one())])),
        graph: g,
        params: vec![v.clone(), w.clone()],
    })
}

/// Fig 1.3: `v = (0 0 v)`, `E_out` row `(v 0 0)`; every product pair has a
/// zero operand, so the component `(0*v) + (0*0) + (v*0)` must be zero —
/// exactly what a non-annihilating zero breaks. Any `v` is allowed.
pub fn fig1_annihilator_star<S: ValueSet>(
    vs: &S,
    v: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig1_3();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.3",
        relation: ExpectedRelation::StarAnnihilator,
        vector: vector_of::<S>(&verts, &[("c", v.clone())]),
        e_out: Some(array_of(&edges, &verts, &[("k", "a", v.clone())])),
        e_in: Some(array_of(
            &edges,
            &verts,
            &[("k", "b", vs.one()), ("k", "c", vs.one())],
        )),
        graph: g,
        params: vec![v.clone()],
    })
}

/// Fig 1.4: `e = (1 1)`, `E_in` column `(v w)`; the vertex-step mirror of
/// the zero-sum construction.
pub fn fig1_zero_sum_dagger<S: ValueSet>(
    vs: &S,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    let g = figures::fig1_4();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.4",
        relation: ExpectedRelation::DaggerZeroSum,
        vector: vector_of::<S>(&edges, &[("k1", vs.one()), ("k2", vs.one())]),
        e_out: None,
        e_in: Some(array_of(
            &edges,
            &verts,
            &[("k1", "a", v.clone()), ("k2", "a", w.clone())],
        )),
        graph: g,
        params: vec![v.clone(), w.clone()],
    })
}

/// Fig 1.5: `e = (v)`, `E_in = (w)`; the vertex-step mirror of the
/// zero-divisor construction.
pub fn fig1_zero_divisor_dagger<S: ValueSet>(
    vs: &S,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    let g = figures::fig1_5();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.5",
        relation: ExpectedRelation::DaggerZeroDivisor,
        vector: vector_of::<S>(&edges, &[("k", v.clone())]),
        e_out: None,
        e_in: Some(array_of(&edges, &verts, &[("k", "a", w.clone())])),
        graph: g,
        params: vec![v.clone(), w.clone()],
    })
}

/// Fig 1.6: `e = (0 v 0)`, `E_in` rows `(v 0)`, `(0 1)`, `(0 1)`; the
/// vertex-step mirror of the annihilator construction. Any `v` is allowed.
pub fn fig1_annihilator_dagger<S: ValueSet>(
    vs: &S,
    v: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig1_6();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig1.6",
        relation: ExpectedRelation::DaggerAnnihilator,
        vector: vector_of::<S>(&edges, &[("k2", v.clone())]),
        e_out: None,
        e_in: Some(array_of(
            &edges,
            &verts,
            &[
                ("k1", "a", v.clone()),
                ("k2", "b", vs.one()),
                ("k3", "b", vs.one()),
            ],
        )),
        graph: g,
        params: vec![v.clone()],
    })
}

/// All six necessity constructions for the BFS validity conditions,
/// instantiated with `v, w`. Both parameters must be nonzero, as the
/// zero-sum and zero-divisor proofs require.
pub fn fig1_constructions<S: ValueSet>(
    vs: &S,
    v: &S::Value,
    w: &S::Value,
) -> Result<Vec<ConstructionInstance<S::Value>>> {
    Ok(vec![
        fig1_zero_sum_star(vs, v, w)?,
        fig1_zero_divisor_star(vs, v, w)?,
        fig1_annihilator_star(vs, v)?,
        fig1_zero_sum_dagger(vs, v, w)?,
        fig1_zero_divisor_dagger(vs, v, w)?,
        fig1_annihilator_dagger(vs, v)?,
    ])
}

/// Fig 2.1 with `v = (u v)`, all-ones `E_out`, `E_in` row `(1 0)`: the
/// result component at `a` is `u + v` under ordering `a < b` and `v + u`
/// under `b < a`.
pub fn fig2_plus_comm<S: ValueSet>(
    vs: &S,
    u: &S::Value,
    v: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig2_1();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig2.1-plus-comm",
        relation: ExpectedRelation::PlusComm,
        vector: vector_of::<S>(&verts, &[("a", u.clone()), ("b", v.clone())]),
        e_out: Some(array_of(
            &edges,
            &verts,
            &[("k", "a", vs.one()), ("k", "b", vs.one())],
        )),
        e_in: Some(array_of(&edges, &verts, &[("k", "a", vs.one())])),
        graph: g,
        params: vec![u.clone(), v.clone()],
    })
}

/// Fig 2.2 with `v = (u v w)`: the component at `a` is `u + (v + w)` under
/// `a < b < c` and `w + (u + v)` under `c < a < b`.
pub fn fig2_plus_assoc<S: ValueSet>(
    vs: &S,
    u: &S::Value,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig2_2();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig2.2-plus-assoc",
        relation: ExpectedRelation::PlusAssoc,
        vector: vector_of::<S>(
            &verts,
            &[("a", u.clone()), ("b", v.clone()), ("c", w.clone())],
        ),
        e_out: Some(array_of(
            &edges,
            &verts,
            &[
                ("k", "a", vs.one()),
                ("k", "b", vs.one()),
                ("k", "c", vs.one()),
            ],
        )),
        e_in: Some(array_of(&edges, &verts, &[("k", "a", vs.one())])),
        graph: g,
        params: vec![u.clone(), v.clone(), w.clone()],
    })
}

/// Fig 2.1 with `v = (x 0)`, `E_out` row `(y 0)`, all-ones `E_in`: the
/// row-vector convention produces `x * y` where the column-vector
/// convention produces `y * x`.
pub fn fig2_times_comm<S: ValueSet>(
    vs: &S,
    x: &S::Value,
    y: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig2_1();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig2.1-times-comm",
        relation: ExpectedRelation::TimesComm,
        vector: vector_of::<S>(&verts, &[("a", x.clone())]),
        e_out: Some(array_of(&edges, &verts, &[("k", "a", y.clone())])),
        e_in: Some(array_of(
            &edges,
            &verts,
            &[("k", "a", vs.one()), ("k", "b", vs.one())],
        )),
        graph: g,
        params: vec![x.clone(), y.clone()],
    })
}

/// Fig 2.1 with `v = (u 0)`, `E_out` row `(v 1)`, `E_in` row `(w 0)`: the
/// direct route yields `(u * v) * w` at `a` while the adjacency route
/// yields `u * (v * w)`. All three parameters must be nonzero.
pub fn fig2_times_assoc<S: ValueSet>(
    vs: &S,
    u: &S::Value,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    require_nonzero(vs, "u", u)?;
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    let g = figures::fig2_1();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig2.1-times-assoc",
        relation: ExpectedRelation::TimesAssoc,
        vector: vector_of::<S>(&verts, &[("a", u.clone())]),
        e_out: Some(array_of(
            &edges,
            &verts,
            &[("k", "a", v.clone()), ("k", "b", vs.one())],
        )),
        e_in: Some(array_of(&edges, &verts, &[("k", "a", w.clone())])),
        graph: g,
        params: vec![u.clone(), v.clone(), w.clone()],
    })
}

/// Fig 2.3 with `v = (u v w)`: the direct route puts `(u + v) + w` at `a`
/// while the adjacency route puts `u + (v + w)` there, exposing
/// non-associative addition through regrouping alone.
pub fn fig2_plus_assoc_regroup<S: ValueSet>(
    vs: &S,
    u: &S::Value,
    v: &S::Value,
    w: &S::Value,
) -> Result<ConstructionInstance<S::Value>> {
    let g = figures::fig2_3();
    let verts = g.vertices().clone();
    let edges = g.edge_space().clone();
    Ok(ConstructionInstance {
        label: "fig2.3-regroup",
        relation: ExpectedRelation::PlusAssocRegroup,
        vector: vector_of::<S>(
            &verts,
            &[("a", u.clone()), ("b", v.clone()), ("c", w.clone())],
        ),
        e_out: Some(array_of(
            &edges,
            &verts,
            &[
                ("k1", "a", vs.one()),
                ("k1", "b", vs.one()),
                ("k2", "c", vs.one()),
            ],
        )),
        e_in: Some(array_of(
            &edges,
            &verts,
            &[
                ("k1", "a", vs.one()),
                ("k1", "c", vs.one()),
                ("k2", "a", vs.one()),
                ("k2", "b", vs.one()),
            ],
        )),
        graph: g,
        params: vec![u.clone(), v.clone(), w.clone()],
    })
}

/// The five convention constructions instantiated with `u, v, w`. All
/// parameters must be nonzero (the regrouping proof requires it); the
/// individual builders accept zeros where the proofs do.
pub fn fig2_constructions<S: ValueSet>(
    vs: &S,
    u: &S::Value,
    v: &S::Value,
    w: &S::Value,
) -> Result<Vec<ConstructionInstance<S::Value>>> {
    require_nonzero(vs, "u", u)?;
    require_nonzero(vs, "v", v)?;
    require_nonzero(vs, "w", w)?;
    Ok(vec![
        fig2_plus_comm(vs, u, v)?,
        fig2_plus_assoc(vs, u, v, w)?,
        fig2_times_comm(vs, u, v)?,
        fig2_times_assoc(vs, u, v, w)?,
        fig2_plus_assoc_regroup(vs, u, v, w)?,
    ])
}

impl<V: Clone + Eq> ConstructionInstance<V> {
    fn incidence_pair(&self) -> Option<IncidencePair<V>> {
        Some(IncidencePair {
            e_out: self.e_out.clone()?,
            e_in: self.e_in.clone()?,
        })
    }

    /// The product component the proof display centers on: the single
    /// edge-step entry for Fig 1.1-1.3, the entry at vertex `a` for the
    /// vertex-step and convention instances.
    pub fn product_component<S>(&self, vs: &S) -> Result<V>
    where
        S: ValueSet<Value = V>,
    {
        match self.relation {
            ExpectedRelation::StarZeroSum
            | ExpectedRelation::StarZeroDivisor
            | ExpectedRelation::StarAnnihilator => {
                let e_out = self.e_out.as_ref().expect("star instances carry E_out");
                let e = bfs_edge_step(vs, &self.vector, e_out)?;
                e.value(vs, "k")
            }
            _ => {
                let e_in = self.e_in.as_ref().expect("instances carry E_in");
                let w = bfs_vertex_step(vs, &self.vector, e_in)?;
                w.value(vs, "a")
            }
        }
    }

    /// The paper's displayed symbolic expression for that component,
    /// evaluated directly from the operation tables.
    pub fn expected_component<S>(&self, vs: &S) -> V
    where
        S: ValueSet<Value = V>,
    {
        let zero = vs.zero();
        match self.relation {
            ExpectedRelation::StarZeroSum | ExpectedRelation::DaggerZeroSum => {
                vs.plus(&self.params[0], &self.params[1])
            }
            ExpectedRelation::StarZeroDivisor | ExpectedRelation::DaggerZeroDivisor => {
                vs.times(&self.params[0], &self.params[1])
            }
            ExpectedRelation::StarAnnihilator => {
                let v = &self.params[0];
                fold_plus(
                    vs,
                    &[vs.times(&zero, v), vs.times(&zero, &zero), vs.times(v, &zero)],
                )
            }
            ExpectedRelation::DaggerAnnihilator => {
                let v = &self.params[0];
                fold_plus(
                    vs,
                    &[vs.times(&zero, v), vs.times(v, &zero), vs.times(&zero, &zero)],
                )
            }
            _ => panic!("expected_component is defined for Figure-1 instances"),
        }
    }
}

/// Which alternate computation a convention counterexample compares the
/// direct LinAlgBFS against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    VertexReorder,
    EdgeReorder,
    Transposed,
    Adjacency,
}

/// A concrete, re-runnable witness that some empirical side failed.
#[derive(Clone, Debug)]
pub struct Counterexample {
    /// Compact, space-free rendering for report records.
    pub description: String,
    pub data: CounterexampleData,
}

#[derive(Clone, Debug)]
pub enum CounterexampleData {
    /// Condition (*) fails at `edge` for this vector and out-incidence.
    Star {
        vector: FrontierVector<usize>,
        e_out: AssociativeArray<usize>,
        edge: String,
    },
    /// Condition (dagger) fails at `vertex` for this vector and in-incidence.
    Dagger {
        vector: FrontierVector<usize>,
        e_in: AssociativeArray<usize>,
        vertex: String,
    },
    /// The BFS support differs from the set-theoretic frontier.
    BfsMismatch {
        graph: DirectedHypergraph,
        pair: IncidencePair<usize>,
        sources: Vec<String>,
        expected: Vec<String>,
        actual: Vec<String>,
    },
    /// An alternate route or reordering disagrees with the direct BFS.
    RouteMismatch {
        route: Route,
        vector: FrontierVector<usize>,
        pair: IncidencePair<usize>,
        permutation: Option<Vec<String>>,
    },
}

impl Counterexample {
    /// Re-run the recorded instance through the traversal operations and
    /// report whether the violation reproduces.
    pub fn replay(&self, vs: &TableValueSet) -> Result<bool> {
        match &self.data {
            CounterexampleData::Star { vector, e_out, edge } => {
                Ok(match check_condition_star(vs, vector, e_out)? {
                    Verdict::Fails(k) => k == *edge,
                    Verdict::Holds => false,
                })
            }
            CounterexampleData::Dagger { vector, e_in, vertex } => {
                Ok(match check_condition_dagger(vs, vector, e_in)? {
                    Verdict::Fails(a) => a == *vertex,
                    Verdict::Holds => false,
                })
            }
            CounterexampleData::BfsMismatch {
                graph,
                pair,
                sources,
                expected,
                ..
            } => {
                let v = FrontierVector::indicator(vs, graph.vertices(), sources)?;
                let w = linalg_bfs(vs, &v, pair)?;
                Ok(w.support(vs) != *expected)
            }
            CounterexampleData::RouteMismatch {
                route,
                vector,
                pair,
                permutation,
            } => {
                let base = linalg_bfs(vs, vector, pair)?;
                let other = match route {
                    Route::Transposed => linalg_bfs_transposed(vs, vector, pair)?,
                    Route::Adjacency => linalg_bfs_via_adjacency(vs, vector, pair)?,
                    Route::VertexReorder => {
                        let perm = permutation.as_ref().expect("reorder stores a permutation");
                        let space = KeySpace::new(perm.iter().cloned())?;
                        let v2 = vector.reorder(space.clone())?;
                        let pair2 = IncidencePair {
                            e_out: pair.e_out.reorder(pair.e_out.rows().clone(), space.clone())?,
                            e_in: pair.e_in.reorder(pair.e_in.rows().clone(), space)?,
                        };
                        linalg_bfs(vs, &v2, &pair2)?
                    }
                    Route::EdgeReorder => {
                        let perm = permutation.as_ref().expect("reorder stores a permutation");
                        let space = KeySpace::new(perm.iter().cloned())?;
                        let pair2 = IncidencePair {
                            e_out: pair.e_out.reorder(space.clone(), pair.e_out.cols().clone())?,
                            e_in: pair.e_in.reorder(space, pair.e_in.cols().clone())?,
                        };
                        linalg_bfs(vs, vector, &pair2)?
                    }
                };
                Ok(!equal_as_map(vs, base.as_array(), other.as_array()))
            }
        }
    }
}

fn render_values(vs: &TableValueSet, values: &[usize]) -> String {
    values
        .iter()
        .map(|v| vs.value_name(v))
        .collect::<Vec<_>>()
        .join(",")
}

fn render_set(keys: &[String]) -> String {
    format!("{{{}}}", keys.join(","))
}

// ---------------------------------------------------------------------------
// Shared sweep context
// ---------------------------------------------------------------------------

/// Everything about one enumerated hypergraph that does not depend on the
/// value set under test: weight assignments (as incidence pairs over value
/// indices), source subsets, and the set-theoretic frontiers.
struct GraphCase {
    index: usize,
    graph: DirectedHypergraph,
    /// One pair per weight assignment; values are carrier indices, valid
    /// for every enumerated value set of the same size.
    pairs: Vec<IncidencePair<usize>>,
    subsets: Vec<Vec<String>>,
    oracle_edges: Vec<Vec<String>>,
    oracle_vertices: Vec<Vec<String>>,
}

/// Sampled assignments per multi-edge graph, beyond the all-same-weight ones.
const SAMPLED_ASSIGNMENTS: usize = 6;
/// Full-sweep budget: below this many combinations, take them all.
const FULL_SWEEP_CAP: usize = 4096;

fn incidence_positions(g: &DirectedHypergraph) -> Vec<(String, String, Side)> {
    let mut out = Vec::new();
    for e in g.edges() {
        for v in &e.out_set {
            out.push((e.key.clone(), v.clone(), Side::Out));
        }
        for v in &e.in_set {
            out.push((e.key.clone(), v.clone(), Side::In));
        }
    }
    out
}

/// Weight assignments over the graph's incidence positions, drawn from the
/// nonzero carrier values. Single-edge graphs get the full cartesian sweep
/// (that is where the necessity arguments live); larger graphs get every
/// uniform assignment plus seeded random mixes.
fn weight_assignments(
    g: &DirectedHypergraph,
    nonzero: &[usize],
    seed: u64,
    case_index: usize,
) -> Vec<Vec<usize>> {
    let positions = incidence_positions(g).len();
    let full = nonzero.len().checked_pow(positions as u32);
    let take_full =
        g.edges().len() == 1 || matches!(full, Some(n) if n <= nonzero.len() * nonzero.len());
    if take_full && full.is_some_and(|n| n <= FULL_SWEEP_CAP) {
        let mut out = Vec::with_capacity(full.unwrap());
        let mut choice = vec![0usize; positions];
        loop {
            out.push(choice.iter().map(|&c| nonzero[c]).collect());
            let mut slot = positions;
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                choice[slot] += 1;
                if choice[slot] < nonzero.len() {
                    break;
                }
                choice[slot] = 0;
            }
        }
    }
    let mut out: Vec<Vec<usize>> = nonzero.iter().map(|&v| vec![v; positions]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(case_index as u64));
    for _ in 0..SAMPLED_ASSIGNMENTS {
        out.push((0..positions).map(|_| *nonzero.choose(&mut rng).unwrap()).collect());
    }
    out
}

fn build_case(
    vs: &TableValueSet,
    index: usize,
    graph: DirectedHypergraph,
    seed: u64,
) -> Result<GraphCase> {
    let nonzero = vs.nonzero_carrier()?;
    let assignments = weight_assignments(&graph, &nonzero, seed, index);
    let positions = incidence_positions(&graph);
    let mut pairs = Vec::with_capacity(assignments.len());
    for assignment in &assignments {
        let mut weights = IncidenceWeights::new();
        for ((edge, vertex, side), &value) in positions.iter().zip(assignment) {
            weights.set(edge, vertex, *side, value);
        }
        pairs.push(build_incidence(vs, &graph, &weights)?);
    }
    let nv = graph.vertices().len();
    let mut subsets = Vec::with_capacity(1 << nv);
    let mut oracle_edges = Vec::with_capacity(1 << nv);
    let mut oracle_vertices = Vec::with_capacity(1 << nv);
    for mask in 0..(1u32 << nv) {
        let subset: Vec<String> = graph
            .vertices()
            .keys()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, k)| k.clone())
            .collect();
        oracle_edges.push(oracle_edge_frontier(&graph, &subset)?);
        oracle_vertices.push(oracle_vertex_frontier(&graph, &subset)?);
        subsets.push(subset);
    }
    Ok(GraphCase {
        index,
        graph,
        pairs,
        subsets,
        oracle_edges,
        oracle_vertices,
    })
}

/// All `carrier_size^n` vectors over a space, as index-valued frontier
/// vectors (zeros left unstored).
fn all_vectors(space: &KeySpace, carrier_size: usize) -> Vec<FrontierVector<usize>> {
    let n = space.len();
    let total = carrier_size.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut v = FrontierVector::zero(space);
        let mut arr = v.as_array().clone();
        for key in space.keys() {
            let value = code % carrier_size;
            code /= carrier_size;
            if value != 0 {
                arr.set(crate::traversal::VECTOR_ROW_KEY, key, value).unwrap();
            }
        }
        v = FrontierVector::from_array(arr).unwrap();
        out.push(v);
    }
    out
}

struct SweepContext {
    cases: Vec<GraphCase>,
    /// keyed by vertex count / edge count
    vertex_vectors: HashMap<usize, Vec<FrontierVector<usize>>>,
    edge_vectors: HashMap<usize, Vec<FrontierVector<usize>>>,
    /// indicator vectors per vertex count, indexed by subset mask
    indicators: HashMap<usize, Vec<FrontierVector<usize>>>,
}

fn build_context(carrier_size: usize, bounds: &Bounds, seed: u64) -> Result<SweepContext> {
    // any enumerated set works as the representative: index conventions
    // (zero = 0, one = 1, nonzero = 1..n) are shared by all of them
    let representative = enumerate_value_sets(carrier_size)?
        .next()
        .expect("enumeration is nonempty");
    let graphs = enumerate_hypergraphs(bounds.max_vertices, bounds.max_edges)?;
    let mut cases = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.into_iter().enumerate() {
        cases.push(build_case(&representative, i, g, seed)?);
    }
    let mut vertex_vectors = HashMap::new();
    let mut edge_vectors = HashMap::new();
    let mut indicators = HashMap::new();
    for case in &cases {
        let nv = case.graph.vertices().len();
        vertex_vectors
            .entry(nv)
            .or_insert_with(|| all_vectors(case.graph.vertices(), carrier_size));
        let ne = case.graph.edge_space().len();
        edge_vectors
            .entry(ne)
            .or_insert_with(|| all_vectors(case.graph.edge_space(), carrier_size));
        indicators.entry(nv).or_insert_with(|| {
            (0..(1u32 << nv))
                .map(|mask| {
                    let support: Vec<String> = case
                        .graph
                        .vertices()
                        .keys()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, k)| k.clone())
                        .collect();
                    FrontierVector::indicator(&representative, case.graph.vertices(), &support)
                        .unwrap()
                })
                .collect()
        });
    }
    Ok(SweepContext {
        cases,
        vertex_vectors,
        edge_vectors,
        indicators,
    })
}

// ---------------------------------------------------------------------------
// Empirical sides of Theorem 2.1
// ---------------------------------------------------------------------------

fn star_counterexample(
    vs: &TableValueSet,
    inst: &ConstructionInstance<usize>,
) -> Result<Option<Counterexample>> {
    let e_out = inst.e_out.as_ref().expect("star instance");
    if let Verdict::Fails(edge) = check_condition_star(vs, &inst.vector, e_out)? {
        return Ok(Some(Counterexample {
            description: format!(
                "{}(params={}):star@{}",
                inst.label,
                render_values(vs, &inst.params),
                edge
            ),
            data: CounterexampleData::Star {
                vector: inst.vector.clone(),
                e_out: e_out.clone(),
                edge,
            },
        }));
    }
    Ok(None)
}

fn dagger_counterexample(
    vs: &TableValueSet,
    inst: &ConstructionInstance<usize>,
) -> Result<Option<Counterexample>> {
    let e_in = inst.e_in.as_ref().expect("dagger instance");
    if let Verdict::Fails(vertex) = check_condition_dagger(vs, &inst.vector, e_in)? {
        return Ok(Some(Counterexample {
            description: format!(
                "{}(params={}):dagger@{}",
                inst.label,
                render_values(vs, &inst.params),
                vertex
            ),
            data: CounterexampleData::Dagger {
                vector: inst.vector.clone(),
                e_in: e_in.clone(),
                vertex,
            },
        }));
    }
    Ok(None)
}

/// Condition (*) over the Figure-1 edge-step constructions (all parameter
/// choices) plus every enumerated (graph, weights, vector) instance.
fn empirical_star(vs: &TableValueSet, ctx: &SweepContext) -> Result<Option<Counterexample>> {
    let nonzero = vs.nonzero_carrier()?;
    for v in &nonzero {
        for w in &nonzero {
            for inst in [
                fig1_zero_sum_star(vs, v, w)?,
                fig1_zero_divisor_star(vs, v, w)?,
            ] {
                if let Some(cx) = star_counterexample(vs, &inst)? {
                    return Ok(Some(cx));
                }
            }
        }
    }
    for v in vs.carrier()? {
        let inst = fig1_annihilator_star(vs, &v)?;
        if let Some(cx) = star_counterexample(vs, &inst)? {
            return Ok(Some(cx));
        }
    }
    for case in &ctx.cases {
        let vectors = &ctx.vertex_vectors[&case.graph.vertices().len()];
        for pair in &case.pairs {
            for vector in vectors {
                if let Verdict::Fails(edge) = check_condition_star(vs, vector, &pair.e_out)? {
                    return Ok(Some(Counterexample {
                        description: format!("graph#{}:star@{}", case.index, edge),
                        data: CounterexampleData::Star {
                            vector: vector.clone(),
                            e_out: pair.e_out.clone(),
                            edge,
                        },
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Condition (dagger), mirrored.
fn empirical_dagger(vs: &TableValueSet, ctx: &SweepContext) -> Result<Option<Counterexample>> {
    let nonzero = vs.nonzero_carrier()?;
    for v in &nonzero {
        for w in &nonzero {
            for inst in [
                fig1_zero_sum_dagger(vs, v, w)?,
                fig1_zero_divisor_dagger(vs, v, w)?,
            ] {
                if let Some(cx) = dagger_counterexample(vs, &inst)? {
                    return Ok(Some(cx));
                }
            }
        }
    }
    for v in vs.carrier()? {
        let inst = fig1_annihilator_dagger(vs, &v)?;
        if let Some(cx) = dagger_counterexample(vs, &inst)? {
            return Ok(Some(cx));
        }
    }
    for case in &ctx.cases {
        let vectors = &ctx.edge_vectors[&case.graph.edge_space().len()];
        for pair in &case.pairs {
            for vector in vectors {
                if let Verdict::Fails(vertex) = check_condition_dagger(vs, vector, &pair.e_in)? {
                    return Ok(Some(Counterexample {
                        description: format!("graph#{}:dagger@{}", case.index, vertex),
                        data: CounterexampleData::Dagger {
                            vector: vector.clone(),
                            e_in: pair.e_in.clone(),
                            vertex,
                        },
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn bfs_case_counterexample(
    vs: &TableValueSet,
    case: &GraphCase,
    indicators: &[FrontierVector<usize>],
) -> Result<Option<Counterexample>> {
    for pair in &case.pairs {
        for (mask, indicator) in indicators.iter().enumerate() {
            let e = bfs_edge_step(vs, indicator, &pair.e_out)?;
            let edge_support = e.support(vs);
            if edge_support != case.oracle_edges[mask] {
                return Ok(Some(Counterexample {
                    description: format!(
                        "graph#{}:S={}:edges:expected={}:got={}",
                        case.index,
                        render_set(&case.subsets[mask]),
                        render_set(&case.oracle_edges[mask]),
                        render_set(&edge_support),
                    ),
                    data: CounterexampleData::BfsMismatch {
                        graph: case.graph.clone(),
                        pair: pair.clone(),
                        sources: case.subsets[mask].clone(),
                        expected: case.oracle_vertices[mask].clone(),
                        actual: bfs_vertex_step(vs, &e, &pair.e_in)?.support(vs),
                    },
                }));
            }
            let w = bfs_vertex_step(vs, &e, &pair.e_in)?;
            let support = w.support(vs);
            if support != case.oracle_vertices[mask] {
                return Ok(Some(Counterexample {
                    description: format!(
                        "graph#{}:S={}:vertices:expected={}:got={}",
                        case.index,
                        render_set(&case.subsets[mask]),
                        render_set(&case.oracle_vertices[mask]),
                        render_set(&support),
                    ),
                    data: CounterexampleData::BfsMismatch {
                        graph: case.graph.clone(),
                        pair: pair.clone(),
                        sources: case.subsets[mask].clone(),
                        expected: case.oracle_vertices[mask].clone(),
                        actual: support,
                    },
                }));
            }
        }
    }
    Ok(None)
}

fn empirical_bfs(vs: &TableValueSet, ctx: &SweepContext) -> Result<Option<Counterexample>> {
    for case in &ctx.cases {
        let indicators = &ctx.indicators[&case.graph.vertices().len()];
        if let Some(cx) = bfs_case_counterexample(vs, case, indicators)? {
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

/// Does one-step BFS agree with the set-theoretic frontier oracle on every
/// enumerated hypergraph within bounds, over the swept incidence-weight
/// assignments and all source sets? `None` means yes; otherwise the first
/// counterexample, re-runnable through the traversal operations.
pub fn empirical_bfs_validity(
    vs: &TableValueSet,
    bounds: &Bounds,
    seed: u64,
) -> Result<Option<Counterexample>> {
    let graphs = enumerate_hypergraphs(bounds.max_vertices, bounds.max_edges)?;
    for (i, graph) in graphs.into_iter().enumerate() {
        let case = build_case(vs, i, graph, seed)?;
        let indicators: Vec<FrontierVector<usize>> = case
            .subsets
            .iter()
            .map(|s| FrontierVector::indicator(vs, case.graph.vertices(), s))
            .collect::<Result<_>>()?;
        if let Some(cx) = bfs_case_counterexample(vs, &case, &indicators)? {
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Profile-vs-behavior outcome for one theorem side on one value set.
#[derive(Clone, Debug)]
pub struct ConditionRecord {
    /// `2.1.i`, `2.1.ii`, `2.1.iii`, `III.A`, `III.B`, `III.C`, `edge-order`.
    pub theorem: &'static str,
    pub profile_verdict: bool,
    pub empirical_verdict: bool,
    /// When false, the record is informational only (no paper-backed claim)
    /// and disagreement is not a failure.
    pub asserted: bool,
    pub witness: Option<Counterexample>,
}

impl ConditionRecord {
    pub fn agreement(&self) -> bool {
        self.profile_verdict == self.empirical_verdict
    }
}

/// Per-value-set verification outcome: provenance plus one record per
/// checked theorem side.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub value_set_id: String,
    pub seed: u64,
    pub bounds: Bounds,
    pub records: Vec<ConditionRecord>,
}

impl VerificationReport {
    /// All asserted records agree.
    pub fn all_agree(&self) -> bool {
        self.records.iter().all(|r| !r.asserted || r.agreement())
    }
}

// ---------------------------------------------------------------------------
// Theorem 2.1 harness
// ---------------------------------------------------------------------------

/// For every enumerated value set of the given carrier size, check that the
/// algebraic profile (side (iv)) agrees with the empirical verdicts for the
/// edge-step condition (i), the vertex-step condition (ii), and full BFS
/// validity (iii). Reports stream in enumeration order.
pub fn theorem_2_1_harness(
    carrier_size: usize,
    bounds: Bounds,
    seed: u64,
) -> Result<Theorem21Harness> {
    if carrier_size > 3 {
        return Err(Error::BoundsExceeded(format!(
            "exhaustive harness supports carrier sizes 2-3, got {carrier_size}"
        )));
    }
    let ctx = Arc::new(build_context(carrier_size, &bounds, seed)?);
    Ok(Theorem21Harness {
        sets: enumerate_value_sets(carrier_size)?,
        ctx,
        seed,
        bounds,
    })
}

pub struct Theorem21Harness {
    sets: EnumeratedValueSets,
    ctx: Arc<SweepContext>,
    seed: u64,
    bounds: Bounds,
}

impl Theorem21Harness {
    pub fn total(&self) -> u64 {
        self.sets.total()
    }
}

impl Iterator for Theorem21Harness {
    type Item = Result<VerificationReport>;

    fn next(&mut self) -> Option<Self::Item> {
        let vs = self.sets.next()?;
        Some(evaluate_theorem_2_1(&vs, &self.ctx, self.seed, self.bounds))
    }
}

fn evaluate_theorem_2_1(
    vs: &TableValueSet,
    ctx: &SweepContext,
    seed: u64,
    bounds: Bounds,
) -> Result<VerificationReport> {
    let prof = profile(vs)?;
    let iv = prof.bfs_valid();
    let star = empirical_star(vs, ctx)?;
    let dagger = empirical_dagger(vs, ctx)?;
    let bfs = empirical_bfs(vs, ctx)?;
    let records = vec![
        ConditionRecord {
            theorem: "2.1.i",
            profile_verdict: iv,
            empirical_verdict: star.is_none(),
            asserted: true,
            witness: star,
        },
        ConditionRecord {
            theorem: "2.1.ii",
            profile_verdict: iv,
            empirical_verdict: dagger.is_none(),
            asserted: true,
            witness: dagger,
        },
        ConditionRecord {
            theorem: "2.1.iii",
            profile_verdict: iv,
            empirical_verdict: bfs.is_none(),
            asserted: true,
            witness: bfs,
        },
    ];
    Ok(VerificationReport {
        value_set_id: vs.id().to_string(),
        seed,
        bounds,
        records,
    })
}

// ---------------------------------------------------------------------------
// Convention harness
// ---------------------------------------------------------------------------

fn permutations(keys: &[String]) -> Vec<Vec<String>> {
    if keys.len() <= 1 {
        return vec![keys.to_vec()];
    }
    let mut out = Vec::new();
    for (i, first) in keys.iter().enumerate() {
        let mut rest: Vec<String> = keys.to_vec();
        rest.remove(i);
        for tail in permutations(&rest) {
            let mut perm = vec![first.clone()];
            perm.extend(tail);
            out.push(perm);
        }
    }
    out
}

fn reorder_instance(
    vector: &FrontierVector<usize>,
    pair: &IncidencePair<usize>,
    perm: &[String],
) -> Result<(FrontierVector<usize>, IncidencePair<usize>)> {
    let space = KeySpace::new(perm.iter().cloned())?;
    Ok((
        vector.reorder(space.clone())?,
        IncidencePair {
            e_out: pair.e_out.reorder(pair.e_out.rows().clone(), space.clone())?,
            e_in: pair.e_in.reorder(pair.e_in.rows().clone(), space)?,
        },
    ))
}

/// Check reorder invariance of one instance over all vertex permutations.
fn vertex_reorder_counterexample(
    vs: &TableValueSet,
    label: &str,
    vector: &FrontierVector<usize>,
    pair: &IncidencePair<usize>,
) -> Result<Option<Counterexample>> {
    let base = linalg_bfs(vs, vector, pair)?;
    for perm in permutations(vector.space().keys()) {
        let (v2, pair2) = reorder_instance(vector, pair, &perm)?;
        let other = linalg_bfs(vs, &v2, &pair2)?;
        if !equal_as_map(vs, base.as_array(), other.as_array()) {
            return Ok(Some(Counterexample {
                description: format!("{label}:vertex-order={}", perm.join("<")),
                data: CounterexampleData::RouteMismatch {
                    route: Route::VertexReorder,
                    vector: vector.clone(),
                    pair: pair.clone(),
                    permutation: Some(perm),
                },
            }));
        }
    }
    Ok(None)
}

fn edge_reorder_counterexample(
    vs: &TableValueSet,
    label: &str,
    vector: &FrontierVector<usize>,
    pair: &IncidencePair<usize>,
) -> Result<Option<Counterexample>> {
    let base = linalg_bfs(vs, vector, pair)?;
    for perm in permutations(pair.e_out.rows().keys()) {
        let space = KeySpace::new(perm.iter().cloned())?;
        let pair2 = IncidencePair {
            e_out: pair.e_out.reorder(space.clone(), pair.e_out.cols().clone())?,
            e_in: pair.e_in.reorder(space, pair.e_in.cols().clone())?,
        };
        let other = linalg_bfs(vs, vector, &pair2)?;
        if !equal_as_map(vs, base.as_array(), other.as_array()) {
            return Ok(Some(Counterexample {
                description: format!("{label}:edge-order={}", perm.join("<")),
                data: CounterexampleData::RouteMismatch {
                    route: Route::EdgeReorder,
                    vector: vector.clone(),
                    pair: pair.clone(),
                    permutation: Some(perm),
                },
            }));
        }
    }
    Ok(None)
}

fn route_counterexample(
    vs: &TableValueSet,
    label: &str,
    route: Route,
    vector: &FrontierVector<usize>,
    pair: &IncidencePair<usize>,
) -> Result<Option<Counterexample>> {
    let base = linalg_bfs(vs, vector, pair)?;
    let other = match route {
        Route::Transposed => linalg_bfs_transposed(vs, vector, pair)?,
        Route::Adjacency => linalg_bfs_via_adjacency(vs, vector, pair)?,
        _ => unreachable!("reorders are handled separately"),
    };
    if equal_as_map(vs, base.as_array(), other.as_array()) {
        Ok(None)
    } else {
        Ok(Some(Counterexample {
            description: format!("{label}:{:?}", route),
            data: CounterexampleData::RouteMismatch {
                route,
                vector: vector.clone(),
                pair: pair.clone(),
                permutation: None,
            },
        }))
    }
}

/// Cases used for the conventions' corroborating sweep: every 1-edge case
/// and every case with at most 2 vertices, plus a seeded sample of the rest.
fn convention_case_indices(ctx: &SweepContext, seed: u64) -> Vec<usize> {
    let mut picked = Vec::new();
    let mut rest = Vec::new();
    for case in &ctx.cases {
        if case.graph.edge_space().len() == 1 || case.graph.vertices().len() <= 2 {
            picked.push(case.index);
        } else {
            rest.push(case.index);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x636f6e76);
    for _ in 0..200.min(rest.len()) {
        picked.push(rest[rng.gen_range(0..rest.len())]);
    }
    picked.sort_unstable();
    picked.dedup();
    picked
}

fn empirical_vertex_reorder(
    vs: &TableValueSet,
    ctx: &SweepContext,
    case_indices: &[usize],
) -> Result<Option<Counterexample>> {
    let carrier = vs.carrier()?;
    for u in &carrier {
        for v in &carrier {
            let inst = fig2_plus_comm(vs, u, v)?;
            let pair = inst.incidence_pair().expect("fig2 carries both arrays");
            if let Some(cx) = vertex_reorder_counterexample(vs, inst.label, &inst.vector, &pair)? {
                return Ok(Some(cx));
            }
            for w in &carrier {
                let inst = fig2_plus_assoc(vs, u, v, w)?;
                let pair = inst.incidence_pair().expect("fig2 carries both arrays");
                if let Some(cx) =
                    vertex_reorder_counterexample(vs, inst.label, &inst.vector, &pair)?
                {
                    return Ok(Some(cx));
                }
            }
        }
    }
    for &i in case_indices {
        let case = &ctx.cases[i];
        let vectors = &ctx.vertex_vectors[&case.graph.vertices().len()];
        let pair = &case.pairs[0];
        for vector in vectors {
            let label = format!("graph#{}", case.index);
            if let Some(cx) = vertex_reorder_counterexample(vs, &label, vector, pair)? {
                return Ok(Some(cx));
            }
        }
    }
    Ok(None)
}

fn empirical_edge_reorder(
    vs: &TableValueSet,
    ctx: &SweepContext,
    case_indices: &[usize],
) -> Result<Option<Counterexample>> {
    for &i in case_indices {
        let case = &ctx.cases[i];
        if case.graph.edge_space().len() < 2 {
            continue;
        }
        let vectors = &ctx.vertex_vectors[&case.graph.vertices().len()];
        let pair = &case.pairs[0];
        for vector in vectors {
            let label = format!("graph#{}", case.index);
            if let Some(cx) = edge_reorder_counterexample(vs, &label, vector, pair)? {
                return Ok(Some(cx));
            }
        }
    }
    Ok(None)
}

fn empirical_transposed(
    vs: &TableValueSet,
    ctx: &SweepContext,
    case_indices: &[usize],
) -> Result<Option<Counterexample>> {
    let carrier = vs.carrier()?;
    for x in &carrier {
        for y in &carrier {
            let inst = fig2_times_comm(vs, x, y)?;
            let pair = inst.incidence_pair().expect("fig2 carries both arrays");
            if let Some(cx) =
                route_counterexample(vs, inst.label, Route::Transposed, &inst.vector, &pair)?
            {
                return Ok(Some(cx));
            }
        }
    }
    for &i in case_indices {
        let case = &ctx.cases[i];
        let vectors = &ctx.vertex_vectors[&case.graph.vertices().len()];
        let pair = &case.pairs[0];
        for vector in vectors {
            let label = format!("graph#{}", case.index);
            if let Some(cx) = route_counterexample(vs, &label, Route::Transposed, vector, pair)? {
                return Ok(Some(cx));
            }
        }
    }
    Ok(None)
}

/// Regrouping equality over the construction family the associativity
/// theorem's proof covers: single-edge instances with one live source (all
/// nonzero parameter triples) plus the two-edge unit-weight instances.
/// On this family equality holds exactly when `times` is associative.
fn empirical_regrouping(vs: &TableValueSet) -> Result<Option<Counterexample>> {
    let nonzero = vs.nonzero_carrier()?;
    for u in &nonzero {
        for v in &nonzero {
            for w in &nonzero {
                let inst = fig2_times_assoc(vs, u, v, w)?;
                let pair = inst.incidence_pair().expect("fig2 carries both arrays");
                if let Some(cx) =
                    route_counterexample(vs, inst.label, Route::Adjacency, &inst.vector, &pair)?
                {
                    return Ok(Some(cx));
                }
            }
        }
    }
    let carrier = vs.carrier()?;
    for u in &carrier {
        for v in &carrier {
            for w in &carrier {
                let inst = fig2_plus_assoc_regroup(vs, u, v, w)?;
                let pair = inst.incidence_pair().expect("fig2 carries both arrays");
                if let Some(cx) =
                    route_counterexample(vs, inst.label, Route::Adjacency, &inst.vector, &pair)?
                {
                    return Ok(Some(cx));
                }
            }
        }
    }
    Ok(None)
}

/// Regrouping equality over arbitrary enumerated instances. This is
/// strictly stronger than associativity of `times`: once a sum of
/// products meets a further multiplication, the two routes also need
/// `times` to distribute over `plus`, which the value sets here are never
/// assumed to provide. Reported without assertion.
fn empirical_regrouping_general(
    vs: &TableValueSet,
    ctx: &SweepContext,
    case_indices: &[usize],
) -> Result<Option<Counterexample>> {
    for &i in case_indices {
        let case = &ctx.cases[i];
        let vectors = &ctx.vertex_vectors[&case.graph.vertices().len()];
        let pair = &case.pairs[0];
        for vector in vectors {
            let label = format!("graph#{}", case.index);
            if let Some(cx) = route_counterexample(vs, &label, Route::Adjacency, vector, pair)? {
                return Ok(Some(cx));
            }
        }
    }
    Ok(None)
}

/// For every enumerated value set passing the BFS validity conditions,
/// check the three convention theorems: vertex-reorder invariance against
/// `plus` associativity+commutativity, the transposed (column-vector) form
/// against `times` commutativity, and the adjacency regrouping against
/// `times` associativity (the latter only where `plus` is associative and
/// commutative, per that theorem's hypothesis, and over the construction
/// family its proof covers). Hyperedge-reorder invariance and regrouping
/// over arbitrary instances — which additionally needs `times` to
/// distribute over `plus` — are recorded but not asserted.
pub fn convention_harness(
    carrier_size: usize,
    bounds: Bounds,
    seed: u64,
) -> Result<ConventionHarness> {
    if carrier_size > 3 {
        return Err(Error::BoundsExceeded(format!(
            "exhaustive harness supports carrier sizes 2-3, got {carrier_size}"
        )));
    }
    let ctx = Arc::new(build_context(carrier_size, &bounds, seed)?);
    let case_indices = convention_case_indices(&ctx, seed);
    Ok(ConventionHarness {
        sets: enumerate_value_sets(carrier_size)?,
        ctx,
        case_indices,
        seed,
        bounds,
    })
}

pub struct ConventionHarness {
    sets: EnumeratedValueSets,
    ctx: Arc<SweepContext>,
    case_indices: Vec<usize>,
    seed: u64,
    bounds: Bounds,
}

impl Iterator for ConventionHarness {
    type Item = Result<VerificationReport>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let vs = self.sets.next()?;
            let prof = match profile(&vs) {
                Ok(p) => p,
                Err(e) => return Some(Err(e)),
            };
            if !prof.bfs_valid() {
                continue; // only BFS-valid value sets are eligible
            }
            return Some(evaluate_conventions(
                &vs,
                &prof,
                &self.ctx,
                &self.case_indices,
                self.seed,
                self.bounds,
            ));
        }
    }
}

fn evaluate_conventions(
    vs: &TableValueSet,
    prof: &crate::valueset::PropertyProfile<usize>,
    ctx: &SweepContext,
    case_indices: &[usize],
    seed: u64,
    bounds: Bounds,
) -> Result<VerificationReport> {
    let mut records = Vec::new();

    let reorder = empirical_vertex_reorder(vs, ctx, case_indices)?;
    records.push(ConditionRecord {
        theorem: "III.A",
        profile_verdict: prof.plus_assoc_comm(),
        empirical_verdict: reorder.is_none(),
        asserted: true,
        witness: reorder,
    });

    let transposed = empirical_transposed(vs, ctx, case_indices)?;
    records.push(ConditionRecord {
        theorem: "III.B",
        profile_verdict: prof.times_comm.holds(),
        empirical_verdict: transposed.is_none(),
        asserted: true,
        witness: transposed,
    });

    if prof.plus_assoc_comm() {
        let regroup = empirical_regrouping(vs)?;
        records.push(ConditionRecord {
            theorem: "III.C",
            profile_verdict: prof.times_assoc.holds(),
            empirical_verdict: regroup.is_none(),
            asserted: true,
            witness: regroup,
        });

        // informational: regrouping on arbitrary instances additionally
        // needs `times` to distribute over `plus`
        let regroup_general = empirical_regrouping_general(vs, ctx, case_indices)?;
        records.push(ConditionRecord {
            theorem: "III.C-general",
            profile_verdict: prof.times_assoc.holds(),
            empirical_verdict: regroup_general.is_none(),
            asserted: false,
            witness: regroup_general,
        });
    }

    // informational: the theorem speaks only of vertex reordering
    let edge_reorder = empirical_edge_reorder(vs, ctx, case_indices)?;
    records.push(ConditionRecord {
        theorem: "edge-order",
        profile_verdict: prof.plus_assoc_comm(),
        empirical_verdict: edge_reorder.is_none(),
        asserted: false,
        witness: edge_reorder,
    });

    Ok(VerificationReport {
        value_set_id: vs.id().to_string(),
        seed,
        bounds,
        records,
    })
}
