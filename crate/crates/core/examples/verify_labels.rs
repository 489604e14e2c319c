//! Checking candidate labelings and reading why they fail.

use addtable::oracle::verify_splitting;

fn main() {
    let candidates: [(&[i64], &[i64]); 4] = [
        (&[0, 2, 20, 22, 40, 42, 60, 62, 80, 82], &[0, 1, 4, 5, 8, 9, 12, 13, 16, 17]),
        (&[0, 2, 20, 22, 40, 42, 60, 62, 80, 83], &[0, 1, 4, 5, 8, 9, 12, 13, 16, 17]),
        (&[0, 1], &[0, 1]),
        (&[0, 3, 6], &[0, 1]),
    ];
    for (a, b) in candidates {
        let v = verify_splitting(a, b, a.len(), b.len());
        match v.defect {
            None => println!("{a:?} + {b:?}: valid"),
            Some(d) => println!("{a:?} + {b:?}: {d}"),
        }
    }
}
