//! Cyclotomic polynomials for the divisors of 100, and the factorization of
//! x^100 - 1 they multiply back to.

use addtable::cyclotomic::{cyclotomic, divisors, factorize_unity};

fn main() -> addtable::Result<()> {
    for d in 1..=10 {
        println!("Phi_{d:<3} = {}", cyclotomic(d)?);
    }
    println!();
    let f = factorize_unity(100)?;
    for factor in &f.factors {
        println!("Phi_{:<3} = {}", factor.d, factor.phi);
    }
    println!("divisors of 100: {:?}", divisors(100));
    println!("product == x^100 - 1: {}", f.product()? == addtable::Poly::x_pow_minus_one(100));
    Ok(())
}
