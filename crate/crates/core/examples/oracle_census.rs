//! Solution counts for square tables by exhaustive search, checked against
//! the other two engines.

use addtable::geometry::enumerate_schemes;
use addtable::oracle::enumerate_bruteforce;
use addtable::splitter::enumerate_cyclotomic;

fn main() -> addtable::Result<()> {
    println!("{:>3} {:>6} {:>6}", "n", "count", "agree");
    for n in 2..=16 {
        let brute = enumerate_bruteforce(n, n)?;
        let agree = brute == enumerate_cyclotomic(n, n)? && brute == enumerate_schemes(n, n)?;
        println!("{n:>3} {:>6} {:>6}", brute.len(), agree);
    }
    Ok(())
}
