//! When does the answer depend on bookkeeping conventions? Reordering
//! vertices, transposing to column vectors, and regrouping through the
//! adjacency array each hinge on a specific law of the value set.

use hyperbfs::format::render_report;
use hyperbfs::verify::{convention_harness, fig2_plus_comm, fig2_times_comm, Bounds};
use hyperbfs::{
    equal_as_map, linalg_bfs, linalg_bfs_transposed, IncidencePair, KeySpace, TableValueSet,
    ValueSet,
};

fn main() -> hyperbfs::Result<()> {
    // a conforming four-element set whose multiplication is NOT
    // commutative: on {x, y}, a * b = a (left projection), while plus is
    // max under 0 < 1 < x < y
    let leftmost = TableValueSet::from_tables(
        "leftmost4",
        &["0", "1", "x", "y"],
        "0",
        "1",
        &[
            &["0", "1", "x", "y"],
            &["1", "1", "x", "y"],
            &["x", "x", "x", "y"],
            &["y", "y", "y", "y"],
        ],
        &[
            &["0", "0", "0", "0"],
            &["0", "1", "x", "y"],
            &["0", "x", "x", "x"],
            &["0", "y", "y", "y"],
        ],
    )?;
    let x = leftmost.parse_value("x").unwrap();
    let y = leftmost.parse_value("y").unwrap();

    // row-vector vs column-vector form differ exactly where * does
    let inst = fig2_times_comm(&leftmost, &x, &y)?;
    let pair = IncidencePair {
        e_out: inst.e_out.clone().unwrap(),
        e_in: inst.e_in.clone().unwrap(),
    };
    let direct = linalg_bfs(&leftmost, &inst.vector, &pair)?;
    let transposed = linalg_bfs_transposed(&leftmost, &inst.vector, &pair)?;
    println!(
        "leftmost4, v=(x,0), E_out=(y,0): direct a={}, transposed a={}",
        leftmost.value_name(&direct.value(&leftmost, "a")?),
        leftmost.value_name(&transposed.value(&leftmost, "a")?),
    );
    assert!(!equal_as_map(&leftmost, direct.as_array(), transposed.as_array()));

    // whereas vertex reordering is harmless here: + is assoc and comm
    let inst = fig2_plus_comm(&leftmost, &x, &y)?;
    let pair = IncidencePair {
        e_out: inst.e_out.clone().unwrap(),
        e_in: inst.e_in.clone().unwrap(),
    };
    let base = linalg_bfs(&leftmost, &inst.vector, &pair)?;
    let flipped_space = KeySpace::new(["b", "a"])?;
    let flipped = linalg_bfs(
        &leftmost,
        &inst.vector.reorder(flipped_space.clone())?,
        &IncidencePair {
            e_out: pair.e_out.reorder(pair.e_out.rows().clone(), flipped_space.clone())?,
            e_in: pair.e_in.reorder(pair.e_in.rows().clone(), flipped_space)?,
        },
    )?;
    assert!(equal_as_map(&leftmost, base.as_array(), flipped.as_array()));
    println!("vertex reordering leaves the result unchanged");

    // the harness does this for every valid two-element set
    println!("\nconvention reports, carrier size 2:");
    for report in convention_harness(2, Bounds::default(), 42)? {
        print!("{}", render_report(&report?));
    }
    Ok(())
}
