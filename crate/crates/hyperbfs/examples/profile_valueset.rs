//! Exhaustive law checking: profile the built-in value sets and a custom
//! table, printing a witness for every failed property.

use hyperbfs::{profile, TableValueSet};
use hyperbfs::format::render_profile;

fn main() -> hyperbfs::Result<()> {
    for name in TableValueSet::BUILTIN_NAMES {
        let vs = TableValueSet::builtin(name).unwrap();
        let prof = profile(&vs)?;
        println!("== {name} (bfs_valid: {})", prof.bfs_valid());
        print!("{}", render_profile(&vs, &prof));
        println!();
    }

    // a custom three-element table: plus = max under 0 < x < 1,
    // times = min, so every law holds and BFS is valid
    let fuzzy = TableValueSet::from_tables(
        "fuzzy3",
        &["0", "x", "1"],
        "0",
        "1",
        &[
            &["0", "x", "1"],
            &["x", "x", "1"],
            &["1", "1", "1"],
        ],
        &[
            &["0", "0", "0"],
            &["0", "x", "x"],
            &["0", "x", "1"],
        ],
    )?;
    let prof = profile(&fuzzy)?;
    println!("== fuzzy3 (bfs_valid: {})", prof.bfs_valid());
    print!("{}", render_profile(&fuzzy, &prof));
    assert!(prof.bfs_valid());
    Ok(())
}
