//! One-step linear-algebraic BFS: `w = (v plus.times E_out^T) plus.times E_in`,
//! its decomposition into an edge step and a vertex step, the zero-pattern
//! conditions that make each step graph-theoretically correct, and the
//! alternate formulations (transposed convention, adjacency route).

use crate::array::{
    array_product_sparse, array_product_strict, equal_as_map, fold_plus, AssociativeArray,
    KeySpace,
};
use crate::error::{Error, Result};
use crate::hypergraph::IncidencePair;
use crate::valueset::{AnnihilatorCertificate, ValueSet, Verdict};

/// Row key used for the single row of frontier vectors.
pub const VECTOR_ROW_KEY: &str = "_";

/// A one-row associative array over vertex keys (`v`, `w`) or edge keys (`e`).
#[derive(Clone, Debug)]
pub struct FrontierVector<V> {
    arr: AssociativeArray<V>,
}

impl<V: Clone + Eq> FrontierVector<V> {
    /// Wrap a one-row array.
    pub fn from_array(arr: AssociativeArray<V>) -> Result<Self> {
        if arr.rows().len() != 1 {
            return Err(Error::Contraction {
                reason: format!("frontier vector needs exactly one row, got {}", arr.rows().len()),
            });
        }
        Ok(FrontierVector { arr })
    }

    pub fn zero(space: &KeySpace) -> Self {
        let rows = KeySpace::new([VECTOR_ROW_KEY]).expect("static key");
        FrontierVector {
            arr: AssociativeArray::new(rows, space.clone()),
        }
    }

    /// Value `1` at the keys of `support`, `0` elsewhere.
    pub fn indicator<S>(vs: &S, space: &KeySpace, support: &[String]) -> Result<Self>
    where
        S: ValueSet<Value = V>,
    {
        let mut v = Self::zero(space);
        for key in support {
            if !space.contains(key) {
                return Err(Error::KeyDomain {
                    key: key.clone(),
                    context: "indicator key space".to_string(),
                });
            }
            v.arr.set(VECTOR_ROW_KEY, key, vs.one())?;
        }
        Ok(v)
    }

    /// A vector with explicit values at the given keys.
    pub fn from_values<S, I>(space: &KeySpace, values: I) -> Result<Self>
    where
        S: ValueSet<Value = V>,
        I: IntoIterator<Item = (String, V)>,
    {
        let mut v = Self::zero(space);
        for (key, value) in values {
            v.arr.set(VECTOR_ROW_KEY, &key, value)?;
        }
        Ok(v)
    }

    pub fn as_array(&self) -> &AssociativeArray<V> {
        &self.arr
    }

    /// The key space the vector ranges over.
    pub fn space(&self) -> &KeySpace {
        self.arr.cols()
    }

    pub fn value<S>(&self, vs: &S, key: &str) -> Result<V>
    where
        S: ValueSet<Value = V>,
    {
        let row = self.arr.rows().keys()[0].clone();
        self.arr.read(vs, &row, key)
    }

    /// Keys with nonzero values, in key-space order. The graph-theoretic
    /// answer of a traversal.
    pub fn support<S>(&self, vs: &S) -> Vec<String>
    where
        S: ValueSet<Value = V>,
    {
        let row = self.arr.rows().keys()[0].clone();
        self.arr
            .cols()
            .keys()
            .iter()
            .filter(|k| {
                !vs.is_zero(&self.arr.read(vs, &row, k).expect("key from own space"))
            })
            .cloned()
            .collect()
    }

    /// Same values under a permuted key ordering.
    pub fn reorder(&self, new_space: KeySpace) -> Result<Self> {
        let rows = self.arr.rows().clone();
        Ok(FrontierVector {
            arr: self.arr.reorder(rows, new_space)?,
        })
    }
}

/// `e = v plus.times E_out^T`: the edge step.
pub fn bfs_edge_step<S: ValueSet>(
    vs: &S,
    v: &FrontierVector<S::Value>,
    e_out: &AssociativeArray<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let product = array_product_strict(vs, v.as_array(), &e_out.transpose())?;
    FrontierVector::from_array(product)
}

/// `w = e plus.times E_in`: the vertex step.
pub fn bfs_vertex_step<S: ValueSet>(
    vs: &S,
    e: &FrontierVector<S::Value>,
    e_in: &AssociativeArray<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let product = array_product_strict(vs, e.as_array(), e_in)?;
    FrontierVector::from_array(product)
}

/// One-step BFS: `(v plus.times E_out^T) plus.times E_in`.
pub fn linalg_bfs<S: ValueSet>(
    vs: &S,
    v: &FrontierVector<S::Value>,
    pair: &IncidencePair<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let e = bfs_edge_step(vs, v, &pair.e_out)?;
    bfs_vertex_step(vs, &e, &pair.e_in)
}

/// Certified variant of [`linalg_bfs`] built on the sparse product.
pub fn linalg_bfs_sparse<S: ValueSet>(
    vs: &S,
    cert: &AnnihilatorCertificate,
    v: &FrontierVector<S::Value>,
    pair: &IncidencePair<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let e = array_product_sparse(vs, cert, v.as_array(), &pair.e_out.transpose())?;
    let w = array_product_sparse(vs, cert, &e, &pair.e_in)?;
    FrontierVector::from_array(w)
}

/// Condition on the edge step: the fold over each edge's column is `0`
/// exactly when every term has a `0` operand. The predicate side is taken
/// from the raw data, so arbitrary vectors and arrays are meaningful here.
/// Returns the first violating edge.
pub fn check_condition_star<S: ValueSet>(
    vs: &S,
    v: &FrontierVector<S::Value>,
    e_out: &AssociativeArray<S::Value>,
) -> Result<Verdict<String>> {
    if !v.space().same_ordering(e_out.cols()) {
        return Err(Error::Contraction {
            reason: "vector and out-incidence vertex orderings differ".to_string(),
        });
    }
    let zero = vs.zero();
    let mut terms = Vec::with_capacity(v.space().len());
    for k in e_out.rows().keys() {
        terms.clear();
        let mut all_pairs_have_zero = true;
        for a in v.space().keys() {
            let va = v.value(vs, a)?;
            let wa = e_out.read(vs, k, a)?;
            if va != zero && wa != zero {
                all_pairs_have_zero = false;
            }
            terms.push(vs.times(&va, &wa));
        }
        let fold_is_zero = fold_plus(vs, &terms) == zero;
        if fold_is_zero != all_pairs_have_zero {
            return Ok(Verdict::Fails(k.clone()));
        }
    }
    Ok(Verdict::Holds)
}

/// Mirror of [`check_condition_star`] for the vertex step: per-vertex fold
/// over edges against `E_in`. Returns the first violating vertex.
pub fn check_condition_dagger<S: ValueSet>(
    vs: &S,
    e: &FrontierVector<S::Value>,
    e_in: &AssociativeArray<S::Value>,
) -> Result<Verdict<String>> {
    if !e.space().same_ordering(e_in.rows()) {
        return Err(Error::Contraction {
            reason: "vector and in-incidence edge orderings differ".to_string(),
        });
    }
    let zero = vs.zero();
    let mut terms = Vec::with_capacity(e.space().len());
    for a in e_in.cols().keys() {
        terms.clear();
        let mut all_pairs_have_zero = true;
        for k in e.space().keys() {
            let ek = e.value(vs, k)?;
            let wk = e_in.read(vs, k, a)?;
            if ek != zero && wk != zero {
                all_pairs_have_zero = false;
            }
            terms.push(vs.times(&ek, &wk));
        }
        let fold_is_zero = fold_plus(vs, &terms) == zero;
        if fold_is_zero != all_pairs_have_zero {
            return Ok(Verdict::Fails(a.clone()));
        }
    }
    Ok(Verdict::Holds)
}

/// `A = E_out^T plus.times E_in`: the vertices-by-vertices adjacency array.
pub fn adjacency_array<S: ValueSet>(
    vs: &S,
    pair: &IncidencePair<S::Value>,
) -> Result<AssociativeArray<S::Value>> {
    array_product_strict(vs, &pair.e_out.transpose(), &pair.e_in)
}

/// The regrouped route `v plus.times (E_out^T plus.times E_in)`. Agrees
/// with [`linalg_bfs`] exactly when `times` is associative (given the BFS
/// validity conditions and an associative, commutative `plus`).
pub fn linalg_bfs_via_adjacency<S: ValueSet>(
    vs: &S,
    v: &FrontierVector<S::Value>,
    pair: &IncidencePair<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let adjacency = adjacency_array(vs, pair)?;
    FrontierVector::from_array(array_product_strict(vs, v.as_array(), &adjacency)?)
}

/// The column-vector convention `(E_in^T plus.times (E_out plus.times v^T))^T`,
/// transposed back to a row vector. Agrees with [`linalg_bfs`] exactly when
/// `times` is commutative (given the BFS validity conditions).
pub fn linalg_bfs_transposed<S: ValueSet>(
    vs: &S,
    v: &FrontierVector<S::Value>,
    pair: &IncidencePair<S::Value>,
) -> Result<FrontierVector<S::Value>> {
    let e_col = array_product_strict(vs, &pair.e_out, &v.as_array().transpose())?;
    let w_col = array_product_strict(vs, &pair.e_in.transpose(), &e_col)?;
    FrontierVector::from_array(w_col.transpose())
}

/// Convenience: do two frontier vectors agree as maps?
pub fn same_frontier<S: ValueSet>(
    vs: &S,
    a: &FrontierVector<S::Value>,
    b: &FrontierVector<S::Value>,
) -> bool {
    equal_as_map(vs, a.as_array(), b.as_array())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{build_incidence, DirectedHypergraph, IncidenceWeights};
    use crate::valueset::TableValueSet;

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn boolean_pair(g: &DirectedHypergraph) -> IncidencePair<usize> {
        build_incidence(&TableValueSet::boolean(), g, &IncidenceWeights::new()).unwrap()
    }

    #[test]
    fn indicator_shapes() {
        let vs = TableValueSet::boolean();
        let space = KeySpace::new(["a", "b"]).unwrap();
        let v = FrontierVector::indicator(&vs, &space, &strs(&["a", "b"])).unwrap();
        assert_eq!(v.value(&vs, "a").unwrap(), vs.one());
        assert_eq!(v.value(&vs, "b").unwrap(), vs.one());
        let empty = FrontierVector::indicator(&vs, &space, &[]).unwrap();
        assert_eq!(empty.support(&vs), Vec::<String>::new());
        assert!(FrontierVector::indicator(&vs, &space, &strs(&["zz"])).is_err());
    }

    #[test]
    fn edge_step_on_fig_1_1() {
        let vs = TableValueSet::boolean();
        let g = DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap();
        let pair = boolean_pair(&g);
        let v = FrontierVector::indicator(&vs, g.vertices(), &strs(&["a", "b"])).unwrap();
        let e = bfs_edge_step(&vs, &v, &pair.e_out).unwrap();
        assert_eq!(e.support(&vs), strs(&["k"]));

        let z = FrontierVector::zero(g.vertices());
        let ez = bfs_edge_step(&vs, &z, &pair.e_out).unwrap();
        assert_eq!(ez.support(&vs), Vec::<String>::new());
    }

    #[test]
    fn zero_sum_collapse_in_edge_step() {
        // 1 + (-1) = 0 hides the edge even though both vertices are sources
        let vs = TableValueSet::signed_saturating();
        let g = DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap();
        let one = vs.one();
        let minus = vs.parse_value("-1").unwrap();
        let mut weights = IncidenceWeights::new();
        weights.set("k", "a", crate::hypergraph::Side::Out, one);
        weights.set("k", "b", crate::hypergraph::Side::Out, minus);
        let pair = build_incidence(&vs, &g, &weights).unwrap();
        let v = FrontierVector::indicator(&vs, g.vertices(), &strs(&["a", "b"])).unwrap();
        let e = bfs_edge_step(&vs, &v, &pair.e_out).unwrap();
        assert_eq!(e.support(&vs), Vec::<String>::new());
        assert!(!check_condition_star(&vs, &v, &pair.e_out).unwrap().holds());
    }

    #[test]
    fn linalg_bfs_matches_oracle_on_figures() {
        let vs = TableValueSet::boolean();
        for (g, sources, expected) in [
            (
                DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap(),
                strs(&["a", "b"]),
                strs(&["a"]),
            ),
            (
                DirectedHypergraph::from_parts(&["a", "b", "c"], &[("k", &["a"], &["b", "c"])])
                    .unwrap(),
                strs(&["a"]),
                strs(&["b", "c"]),
            ),
            (
                DirectedHypergraph::from_parts(
                    &["a", "b"],
                    &[
                        ("k1", &["a"], &["a"]),
                        ("k2", &["a"], &["b"]),
                        ("k3", &["b"], &["b"]),
                    ],
                )
                .unwrap(),
                strs(&["a"]),
                strs(&["a", "b"]),
            ),
        ] {
            let pair = boolean_pair(&g);
            let v = FrontierVector::indicator(&vs, g.vertices(), &sources).unwrap();
            let w = linalg_bfs(&vs, &v, &pair).unwrap();
            assert_eq!(w.support(&vs), expected);
        }
    }

    #[test]
    fn non_annihilating_table_breaks_condition_star() {
        // Fig 1.3 shape: v = (0, 0, x), E_out row = (x, 0, 0); every product
        // pair contains a zero, yet the fold is nonzero because 0*x = x.
        let vs = TableValueSet::non_annihilating3();
        let x = vs.parse_value("x").unwrap();
        let space = KeySpace::new(["a", "b", "c"]).unwrap();
        let v = FrontierVector::from_values::<TableValueSet, _>(
            &space,
            [("c".to_string(), x)],
        )
        .unwrap();
        let mut e_out = AssociativeArray::new(KeySpace::new(["k"]).unwrap(), space.clone());
        e_out.set("k", "a", x).unwrap();
        match check_condition_star(&vs, &v, &e_out).unwrap() {
            Verdict::Fails(k) => assert_eq!(k, "k"),
            Verdict::Holds => panic!("(*) must fail for the non-annihilating table"),
        }
    }

    #[test]
    fn dagger_fails_on_zero_divisor_pair() {
        // Fig 1.5 shape: e = (d), E_in = (d); d*d = 0 hides the vertex.
        let vs = TableValueSet::zero_divisor3();
        let d = vs.parse_value("d").unwrap();
        let edges = KeySpace::new(["k"]).unwrap();
        let verts = KeySpace::new(["a"]).unwrap();
        let e = FrontierVector::from_values::<TableValueSet, _>(
            &edges,
            [("k".to_string(), d)],
        )
        .unwrap();
        let mut e_in = AssociativeArray::new(edges, verts);
        e_in.set("k", "a", d).unwrap();
        match check_condition_dagger(&vs, &e, &e_in).unwrap() {
            Verdict::Fails(a) => assert_eq!(a, "a"),
            Verdict::Holds => panic!("(dagger) must fail for a zero-divisor pair"),
        }
    }

    #[test]
    fn adjacency_array_on_fig_1_1() {
        let vs = TableValueSet::boolean();
        let g = DirectedHypergraph::from_parts(&["a", "b"], &[("k", &["a", "b"], &["a"])]).unwrap();
        let pair = boolean_pair(&g);
        let a = adjacency_array(&vs, &pair).unwrap();
        assert_eq!(a.read(&vs, "a", "a").unwrap(), vs.one());
        assert_eq!(a.read(&vs, "b", "a").unwrap(), vs.one());
        assert_eq!(a.read(&vs, "a", "b").unwrap(), vs.zero());
        assert_eq!(a.read(&vs, "b", "b").unwrap(), vs.zero());
    }

    #[test]
    fn alternate_routes_agree_for_boolean() {
        let vs = TableValueSet::boolean();
        let g = DirectedHypergraph::from_parts(
            &["a", "b", "c"],
            &[("k1", &["a", "b"], &["a", "c"]), ("k2", &["c"], &["a", "b"])],
        )
        .unwrap();
        let pair = boolean_pair(&g);
        let v = FrontierVector::indicator(&vs, g.vertices(), &strs(&["a", "c"])).unwrap();
        let direct = linalg_bfs(&vs, &v, &pair).unwrap();
        let adjacency = linalg_bfs_via_adjacency(&vs, &v, &pair).unwrap();
        let transposed = linalg_bfs_transposed(&vs, &v, &pair).unwrap();
        assert!(same_frontier(&vs, &direct, &adjacency));
        assert!(same_frontier(&vs, &direct, &transposed));
    }

    #[test]
    fn sparse_bfs_agrees_with_strict_when_certified() {
        let vs = TableValueSet::min_plus(6);
        let cert = AnnihilatorCertificate::certify(&vs).unwrap();
        let g = DirectedHypergraph::from_parts(
            &["a", "b", "c"],
            &[("k1", &["a"], &["b", "c"]), ("k2", &["b"], &["a"])],
        )
        .unwrap();
        let w2 = vs.parse_value("2").unwrap();
        let mut weights = IncidenceWeights::new();
        weights.set("k1", "a", crate::hypergraph::Side::Out, w2);
        let pair = build_incidence(&vs, &g, &weights).unwrap();
        let v = FrontierVector::indicator(&vs, g.vertices(), &strs(&["a"])).unwrap();
        let strict = linalg_bfs(&vs, &v, &pair).unwrap();
        let sparse = linalg_bfs_sparse(&vs, &cert, &v, &pair).unwrap();
        assert!(same_frontier(&vs, &strict, &sparse));
    }
}
