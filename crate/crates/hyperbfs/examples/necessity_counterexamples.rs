//! Why each algebraic condition is necessary: for every built-in value
//! set that breaks one, a small parametric construction makes one-step
//! BFS disagree with the set-theoretic frontier.

use hyperbfs::verify::{empirical_bfs_validity, fig1_constructions, Bounds};
use hyperbfs::{profile, TableValueSet, ValueSet, Verdict};

fn main() -> hyperbfs::Result<()> {
    // signed: 1 + (-1) = 0, so a zero sum erases a live frontier entry
    // zerodivisor3: d * d = 0, so a product of nonzero weights vanishes
    // nonannihilating3: 0 * x = x, so dead entries spring back to life
    for name in ["signed", "zerodivisor3", "nonannihilating3"] {
        let vs = TableValueSet::builtin(name).unwrap();
        let prof = profile(&vs)?;
        println!("== {name}");
        println!("   bfs_valid (algebraic profile): {}", prof.bfs_valid());

        // run the six proof constructions over some nonzero parameters and
        // show which ones trip
        let nonzero = vs.nonzero_carrier()?;
        for v in &nonzero {
            for w in &nonzero {
                for inst in fig1_constructions(&vs, v, w)? {
                    let got = inst.product_component(&vs)?;
                    let is_zero = vs.is_zero(&got);
                    // the edge-step (star) instances require a nonzero
                    // component; the annihilator ones require zero
                    let broken = match inst.relation {
                        hyperbfs::verify::ExpectedRelation::StarAnnihilator
                        | hyperbfs::verify::ExpectedRelation::DaggerAnnihilator => !is_zero,
                        _ => is_zero,
                    };
                    if broken {
                        println!(
                            "   {} with ({},{}) yields component {}",
                            inst.label,
                            vs.value_name(v),
                            vs.value_name(w),
                            vs.value_name(&got)
                        );
                    }
                }
            }
        }

        // and a full empirical search produces a rerunnable witness
        let cx = empirical_bfs_validity(&vs, &Bounds::default(), 7)?
            .expect("non-conforming sets must fail");
        println!("   witness: {}", cx.description);
        assert!(cx.replay(&vs)?, "witness must reproduce");
    }

    // conforming sets never trip
    let boolean = TableValueSet::boolean();
    assert!(empirical_bfs_validity(&boolean, &Bounds::default(), 7)?.is_none());
    if let Verdict::Fails(w) = profile(&boolean)?.zero_sum_free {
        panic!("unexpected witness {w:?}");
    }
    println!("== boolean: no counterexample exists at these bounds");
    Ok(())
}
