//! Weighted traversal: min-plus (tropical) weights compute shortest
//! one-step distances, with explicit incidence weights.

use hyperbfs::{
    build_incidence, linalg_bfs, DirectedHypergraph, FrontierVector, IncidenceWeights, Side,
    TableValueSet, ValueSet,
};

fn main() -> hyperbfs::Result<()> {
    let graph = DirectedHypergraph::from_parts(
        &["a", "b", "c"],
        &[("k1", &["a"], &["b"]), ("k2", &["a"], &["c"]), ("k3", &["b"], &["c"])],
    )?;
    // carrier {inf, 0, 1, ..., 6}; plus = min, times = saturating +
    let vs = TableValueSet::min_plus(6);
    let w = |n: &str| vs.parse_value(n).unwrap();

    let mut weights = IncidenceWeights::new();
    weights.set("k1", "b", Side::In, w("2"));
    weights.set("k2", "c", Side::In, w("5"));
    weights.set("k3", "c", Side::In, w("1"));
    // out-side entries default to the multiplicative identity 0
    let pair = build_incidence(&vs, &graph, &weights)?;

    // start at distance 0 from a
    let v = FrontierVector::from_values::<TableValueSet, _>(
        graph.vertices(),
        [("a".to_string(), w("0"))],
    )?;
    let frontier = linalg_bfs(&vs, &v, &pair)?;
    for key in graph.vertices().keys() {
        println!("{key}: {}", vs.value_name(&frontier.value(&vs, key)?));
    }
    // one step from a: b costs 2 via k1, c costs 5 via k2 (k3 fires only
    // once b is a source)
    assert_eq!(frontier.value(&vs, "b")?, w("2"));
    assert_eq!(frontier.value(&vs, "c")?, w("5"));

    // a second step from the reached frontier picks up the cheaper route
    let frontier2 = linalg_bfs(&vs, &frontier, &pair)?;
    println!("after two steps, c: {}", vs.value_name(&frontier2.value(&vs, "c")?));
    assert_eq!(frontier2.value(&vs, "c")?, w("3")); // 2 + 1 via b
    Ok(())
}
