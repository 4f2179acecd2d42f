//! The sparse product skips zero operands — sound only when zero
//! annihilates, so the fast path is gated behind a certificate.

use hyperbfs::{
    array_product_sparse, array_product_strict, build_incidence, equal_as_map, linalg_bfs,
    linalg_bfs_sparse, AnnihilatorCertificate, DirectedHypergraph, Error, FrontierVector,
    IncidenceWeights, TableValueSet, ValueSet,
};

fn main() -> hyperbfs::Result<()> {
    let graph = DirectedHypergraph::from_parts(
        &["a", "b", "c"],
        &[("k1", &["a"], &["b", "c"]), ("k2", &["b"], &["c"])],
    )?;

    // min-plus has an annihilating zero (inf + anything = inf), so the
    // certificate is granted and both paths agree
    let vs = TableValueSet::min_plus(6);
    let cert = AnnihilatorCertificate::certify(&vs)?;
    let pair = build_incidence(&vs, &graph, &IncidenceWeights::new())?;
    let v = FrontierVector::indicator(&vs, graph.vertices(), &["a".to_string()])?;
    let strict = linalg_bfs(&vs, &v, &pair)?;
    let sparse = linalg_bfs_sparse(&vs, &cert, &v, &pair)?;
    assert!(equal_as_map(&vs, strict.as_array(), sparse.as_array()));
    println!("minplus: sparse == strict, frontier {:?}", strict.support(&vs));

    // nonannihilating3 has 0 * x = x: skipping zeros would change answers,
    // so certification is refused
    let bad = TableValueSet::non_annihilating3();
    match AnnihilatorCertificate::certify(&bad) {
        Err(e @ Error::NotCertified(_)) => println!("refused: {e}"),
        other => panic!("expected refusal, got {other:?}"),
    }

    // and the refusal is not pedantry: a strict product really does differ
    // from one that skips zero operands
    let x = bad.parse_value("x").unwrap();
    let v = FrontierVector::from_values::<TableValueSet, _>(
        graph.vertices(),
        [("b".to_string(), x)],
    )?;
    let mut weights = IncidenceWeights::new();
    weights.set("k1", "a", hyperbfs::Side::Out, x);
    let pair = build_incidence(&bad, &graph, &weights)?;
    let strict = array_product_strict(&bad, v.as_array(), &pair.e_out.transpose())?;
    // forging a certificate for the wrong value set is rejected outright
    match array_product_sparse(&bad, &cert, v.as_array(), &pair.e_out.transpose()) {
        Err(Error::NotCertified(_)) => println!("mismatched certificate rejected"),
        other => panic!("expected rejection, got {other:?}"),
    }
    // strict keeps the 0 * x term, which here evaluates to x: edge k1 is
    // "reached" even though its only source vertex a carries 0
    let e = FrontierVector::from_array(strict)?;
    println!(
        "strict edge vector over nonannihilating3: k1={}, k2={}",
        bad.value_name(&e.value(&bad, "k1")?),
        bad.value_name(&e.value(&bad, "k2")?),
    );
    assert!(!bad.is_zero(&e.value(&bad, "k1")?));
    Ok(())
}
