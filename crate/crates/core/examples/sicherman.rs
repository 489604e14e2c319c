//! Sicherman dice roll the same sums as a standard pair.

use addtable::dice::{face_polynomial, standard_die, sum_distribution};

fn main() -> addtable::Result<()> {
    let (d1, d2) = ([1, 3, 4, 5, 6, 8], [1, 2, 2, 3, 3, 4]);
    let odd = sum_distribution(&d1, &d2)?;
    let std = sum_distribution(&standard_die(6), &standard_die(6))?;
    println!("die 1: {}", face_polynomial(&d1)?);
    println!("die 2: {}", face_polynomial(&d2)?);
    for (sum, count) in &odd.counts {
        println!("{sum:>2}: {count} {}", "#".repeat(*count as usize));
    }
    println!("same as two standard dice: {}", odd == std);
    Ok(())
}
