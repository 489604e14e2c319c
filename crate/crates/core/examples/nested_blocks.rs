//! The 8 x 8 labelings that need more than one level of block division,
//! shown with their radix schemes and block layout.

use std::collections::BTreeSet;

use addtable::geometry::{decompose, enumerate_schemes, flat_patterns};
use addtable::render::render_blocks;

fn main() -> addtable::Result<()> {
    let flat: BTreeSet<_> = flat_patterns(8)?.into_iter().collect();
    let all = enumerate_schemes(8, 8)?;
    println!("8 x 8: {} flat, {} in total", flat.len(), all.len());
    for s in all.iter().filter(|s| !flat.contains(s)) {
        let scheme = decompose(s).expect("every solution has a scheme");
        println!("\n{s}\nscheme {scheme}");
        print!("{}", render_blocks(s));
    }
    Ok(())
}
