//! The seven labelings of a 10 x 10 addition table, with the generating
//! polynomials of each side.

use addtable::splitter::{enumerate_cyclotomic, solution_polynomials};

fn main() -> addtable::Result<()> {
    let sols = enumerate_cyclotomic(10, 10)?;
    println!("{} solutions", sols.len());
    for (k, s) in sols.iter().enumerate() {
        let (a, b) = solution_polynomials(s);
        println!("Solution {}: {s}", k + 1);
        println!("  a(x) = {}", a.to_ascending_string());
        println!("  b(x) = {}", b.to_ascending_string());
    }
    Ok(())
}
