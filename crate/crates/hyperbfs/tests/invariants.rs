//! Cross-module property tests: product laws, route agreement for
//! conforming value sets, and sufficiency spot-checks on random instances.

use proptest::prelude::*;
use rand::seq::SliceRandom as _;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

use hyperbfs::verify::Bounds;
use hyperbfs::{
    adjacency_array, array_product_sparse, array_product_strict, build_incidence,
    enumerate_hypergraphs, equal_as_map, linalg_bfs, linalg_bfs_transposed,
    linalg_bfs_via_adjacency, oracle_vertex_frontier, random_hypergraph, AnnihilatorCertificate,
    AssociativeArray, FrontierVector, IncidencePair, IncidenceWeights, KeySpace, TableValueSet,
    ValueSet,
};

const ROW_NAMES: [&str; 4] = ["r1", "r2", "r3", "r4"];
const MID_NAMES: [&str; 4] = ["m1", "m2", "m3", "m4"];
const COL_NAMES: [&str; 4] = ["c1", "c2", "c3", "c4"];

fn space(names: &[&str], n: usize) -> KeySpace {
    KeySpace::new(names[..n].iter().copied()).unwrap()
}

fn array_from(
    space_rows: &KeySpace,
    space_cols: &KeySpace,
    values: &[usize],
    carrier_len: usize,
) -> AssociativeArray<usize> {
    let mut arr = AssociativeArray::new(space_rows.clone(), space_cols.clone());
    let mut i = 0;
    for r in space_rows.keys() {
        for c in space_cols.keys() {
            let v = values[i % values.len()] % carrier_len;
            i += 1;
            if v != 0 {
                arr.set(r, c, v).unwrap();
            }
        }
    }
    arr
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The certified sparse product always matches the strict one for
    /// annihilating value sets.
    #[test]
    fn sparse_equals_strict(
        nr in 1usize..=4, nm in 1usize..=4, nc in 1usize..=4,
        values in prop::collection::vec(0usize..8, 32),
        which in 0usize..3,
    ) {
        let vs = match which {
            0 => TableValueSet::boolean(),
            1 => TableValueSet::min_plus(6),
            _ => TableValueSet::builtin("nonneg").unwrap(),
        };
        let n = vs.carrier().unwrap().len();
        let cert = AnnihilatorCertificate::certify(&vs).unwrap();
        let (rows, mid, cols) = (space(&ROW_NAMES, nr), space(&MID_NAMES, nm), space(&COL_NAMES, nc));
        let a = array_from(&rows, &mid, &values, n);
        let b = array_from(&mid, &cols, &values[8..], n);
        let strict = array_product_strict(&vs, &a, &b).unwrap();
        let sparse = array_product_sparse(&vs, &cert, &a, &b).unwrap();
        prop_assert!(equal_as_map(&vs, &strict, &sparse));
    }

    /// Transposition is an involution and commutes with entry lookup.
    #[test]
    fn transpose_involution(
        nr in 1usize..=4, nc in 1usize..=4,
        values in prop::collection::vec(0usize..8, 16),
    ) {
        let (rows, cols) = (space(&ROW_NAMES, nr), space(&COL_NAMES, nc));
        let a = array_from(&rows, &cols, &values, 7);
        let tt = a.transpose().transpose();
        prop_assert!(tt.rows() == a.rows() && tt.cols() == a.cols());
        prop_assert_eq!(
            tt.stored_entries().collect::<Vec<_>>(),
            a.stored_entries().collect::<Vec<_>>()
        );
        let t = a.transpose();
        for (r, c, v) in a.stored_entries() {
            prop_assert_eq!(t.get(c, r).unwrap(), Some(v));
        }
    }

    /// The Boolean product agrees with a direct any-pair reachability scan.
    #[test]
    fn boolean_product_is_reachability(
        nr in 1usize..=4, nm in 1usize..=4, nc in 1usize..=4,
        values in prop::collection::vec(0usize..4, 32),
    ) {
        let vs = TableValueSet::boolean();
        let (rows, mid, cols) = (space(&ROW_NAMES, nr), space(&MID_NAMES, nm), space(&COL_NAMES, nc));
        let a = array_from(&rows, &mid, &values, 2);
        let b = array_from(&mid, &cols, &values[8..], 2);
        let product = array_product_strict(&vs, &a, &b).unwrap();
        for r in rows.keys() {
            for c in cols.keys() {
                let expected = mid.keys().iter().any(|m| {
                    a.get(r, m).unwrap().is_some() && b.get(m, c).unwrap().is_some()
                });
                prop_assert_eq!(product.get(r, c).unwrap().is_some(), expected);
            }
        }
    }

    /// For value sets with associative+commutative plus, the frontier is
    /// invariant under vertex reordering (checked on enumerated graphs).
    #[test]
    fn minplus_reorder_invariance(
        graph_index in 0usize..200,
        values in prop::collection::vec(0usize..8, 8),
        perm_seed in 0u64..1000,
    ) {
        let vs = TableValueSet::min_plus(6);
        let n = vs.carrier().unwrap().len();
        let graphs = enumerate_hypergraphs(3, 2).unwrap();
        let graph = &graphs[graph_index % graphs.len()];
        let pair = build_incidence(&vs, graph, &IncidenceWeights::new()).unwrap();
        let mut arr = AssociativeArray::new(KeySpace::new(["_"]).unwrap(), graph.vertices().clone());
        for (i, key) in graph.vertices().keys().iter().enumerate() {
            let v = values[i % values.len()] % n;
            if v != 0 {
                arr.set("_", key, v).unwrap();
            }
        }
        let v = FrontierVector::from_array(arr).unwrap();
        let base = linalg_bfs(&vs, &v, &pair).unwrap();

        let mut keys: Vec<String> = graph.vertices().keys().to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        keys.shuffle(&mut rng);
        let permuted = KeySpace::new(keys).unwrap();
        let pair2 = IncidencePair {
            e_out: pair.e_out.reorder(pair.e_out.rows().clone(), permuted.clone()).unwrap(),
            e_in: pair.e_in.reorder(pair.e_in.rows().clone(), permuted.clone()).unwrap(),
        };
        let moved = linalg_bfs(&vs, &v.reorder(permuted).unwrap(), &pair2).unwrap();
        prop_assert!(equal_as_map(&vs, base.as_array(), moved.as_array()));
    }
}

/// Sufficiency spot-check: for conforming semiring-like built-ins, 200
/// seeded random instances per convention show the alternate computations
/// agree with the direct one.
#[test]
fn conventions_hold_on_random_instances_for_conforming_builtins() {
    for name in ["boolean", "minplus"] {
        let vs = TableValueSet::builtin(name).unwrap();
        let carrier = vs.carrier().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..200 {
            let graph = random_hypergraph(&mut rng, 5, 4);
            let mut weights = IncidenceWeights::new();
            for edge in graph.edges() {
                for (side, set) in [
                    (hyperbfs::Side::Out, &edge.out_set),
                    (hyperbfs::Side::In, &edge.in_set),
                ] {
                    for vertex in set {
                        weights.set(
                            &edge.key,
                            vertex,
                            side,
                            carrier[rng.gen_range(1..carrier.len())],
                        );
                    }
                }
            }
            let pair = build_incidence(&vs, &graph, &weights).unwrap();
            let mut arr = AssociativeArray::new(
                KeySpace::new(["_"]).unwrap(),
                graph.vertices().clone(),
            );
            for key in graph.vertices().keys() {
                let v = carrier[rng.gen_range(0..carrier.len())];
                if !vs.is_zero(&v) {
                    arr.set("_", key, v).unwrap();
                }
            }
            let v = FrontierVector::from_array(arr).unwrap();
            let base = linalg_bfs(&vs, &v, &pair).unwrap();

            // transposed column-vector form: times is commutative
            let transposed = linalg_bfs_transposed(&vs, &v, &pair).unwrap();
            assert!(equal_as_map(&vs, base.as_array(), transposed.as_array()));

            // adjacency regrouping: both built-ins are full semirings
            let via = linalg_bfs_via_adjacency(&vs, &v, &pair).unwrap();
            assert!(equal_as_map(&vs, base.as_array(), via.as_array()));

            // vertex reorder: plus is associative and commutative
            let mut keys: Vec<String> = graph.vertices().keys().to_vec();
            keys.shuffle(&mut rng);
            let permuted = KeySpace::new(keys).unwrap();
            let pair2 = IncidencePair {
                e_out: pair.e_out.reorder(pair.e_out.rows().clone(), permuted.clone()).unwrap(),
                e_in: pair.e_in.reorder(pair.e_in.rows().clone(), permuted.clone()).unwrap(),
            };
            let moved = linalg_bfs(&vs, &v.reorder(permuted).unwrap(), &pair2).unwrap();
            assert!(equal_as_map(&vs, base.as_array(), moved.as_array()));
        }
    }
}

/// The adjacency array of a Boolean incidence pair contains exactly the
/// one-step reachability relation.
#[test]
fn boolean_adjacency_matches_pairwise_reachability() {
    let vs = TableValueSet::boolean();
    let mut rng = ChaCha8Rng::seed_from_u64(0xad7);
    for _ in 0..100 {
        let graph = random_hypergraph(&mut rng, 5, 4);
        let pair = build_incidence(&vs, &graph, &IncidenceWeights::new()).unwrap();
        let adj = adjacency_array(&vs, &pair).unwrap();
        for a in graph.vertices().keys() {
            for b in graph.vertices().keys() {
                // for ordinary edges, a row with a single out-vertex a
                // reaches b exactly when some edge goes a -> b; with
                // hyperedges the adjacency entry ORs all edges where a is
                // an out-vertex and b an in-vertex
                let expected = graph.edges().iter().any(|e| {
                    e.out_set.contains(a) && e.in_set.contains(b)
                });
                assert_eq!(adj.get(a, b).unwrap().is_some(), expected);
            }
        }
    }
}

/// Singleton-source frontiers union to the multi-source frontier over the
/// Boolean value set.
#[test]
fn boolean_frontiers_union_over_sources() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0501);
    for _ in 0..100 {
        let graph = random_hypergraph(&mut rng, 5, 4);
        let sources: Vec<String> = graph
            .vertices()
            .keys()
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        // hyperedges can require several sources at once, so the union of
        // singleton frontiers is a subset of the joint frontier
        let joint = oracle_vertex_frontier(&graph, &sources).unwrap();
        for s in &sources {
            for v in oracle_vertex_frontier(&graph, std::slice::from_ref(s)).unwrap() {
                assert!(joint.contains(&v));
            }
        }
    }
}

/// Bounds guards hold: the harness context never exceeds the requested
/// graph sizes.
#[test]
fn enumerated_graphs_respect_bounds() {
    let bounds = Bounds::default();
    for g in enumerate_hypergraphs(bounds.max_vertices, bounds.max_edges).unwrap() {
        assert!(g.vertices().len() <= bounds.max_vertices);
        assert!(g.edges().len() <= bounds.max_edges);
    }
}
