//! One 10 x 10 labeling in each view. Pass a path to also write an SVG.

use addtable::geometry::{RadixScheme, Side};
use addtable::render::{render, render_svg, View};

fn main() -> addtable::Result<()> {
    let scheme = RadixScheme::from_pairs(&[(2, Side::B), (2, Side::A), (5, Side::B), (5, Side::A)])?;
    let s = scheme.realize();
    println!("{s}  scheme {scheme}\n");
    for view in [View::Values, View::Path, View::Blocks] {
        println!("{}", render(&s, view));
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, render_svg(&s, View::Path)).expect("write svg");
        println!("wrote {path}");
    }
    Ok(())
}
