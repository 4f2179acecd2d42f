//! One-step BFS over the Boolean value set, compared against the
//! set-theoretic frontier definition.

use hyperbfs::{
    build_incidence, linalg_bfs, oracle_edge_frontier, oracle_vertex_frontier, bfs_edge_step,
    DirectedHypergraph, FrontierVector, IncidenceWeights, TableValueSet,
};

fn main() -> hyperbfs::Result<()> {
    // a -> {b, c} via k1, {b, c} -> {d} via k2, plus a self-loop at d
    let graph = DirectedHypergraph::from_parts(
        &["a", "b", "c", "d"],
        &[
            ("k1", &["a"], &["b", "c"]),
            ("k2", &["b", "c"], &["d"]),
            ("k3", &["d"], &["d"]),
        ],
    )?;
    let vs = TableValueSet::boolean();
    // default weights: every incidence entry is 1
    let pair = build_incidence(&vs, &graph, &IncidenceWeights::new())?;

    for sources in [vec![], vec!["a".into()], vec!["b".into(), "d".into()]] {
        let sources: Vec<String> = sources;
        let v = FrontierVector::indicator(&vs, graph.vertices(), &sources)?;
        let e = bfs_edge_step(&vs, &v, &pair.e_out)?;
        let w = linalg_bfs(&vs, &v, &pair)?;
        println!("sources  {:?}", sources);
        println!("  edges     {:?}", e.support(&vs));
        println!("  frontier  {:?}", w.support(&vs));
        // the linear-algebraic result coincides with the set definition:
        // an edge fires when every out-vertex is a source, a vertex is
        // reached when some fired edge points at it
        assert_eq!(e.support(&vs), oracle_edge_frontier(&graph, &sources)?);
        assert_eq!(w.support(&vs), oracle_vertex_frontier(&graph, &sources)?);
    }
    println!("all frontiers match the set-theoretic definition");
    Ok(())
}
