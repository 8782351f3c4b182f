//! Smith normal form and finite abelian groups given by relations.
//!
//! ```sh
//! cargo run --example smith_form
//! ```

use capitulation::abgroup::{hermite_normal_form, smith_normal_form, AbelianGroup, Homomorphism, IntMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Z^3 / <(2,4,4), (-6,6,12), (10,-4,-16)>
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    let snf = smith_normal_form(&m)?;
    println!("relations:\n{m:?}");
    println!("diagonal {:?}", snf.diagonal());
    assert_eq!(snf.u.checked_mul(&m)?.checked_mul(&snf.v)?, snf.d);
    println!("U M V = D checked");
    println!("row HNF:\n{:?}", hermite_normal_form(&m)?);

    let (a, _) = AbelianGroup::from_cyclic_orders(&[4, 6, 10])?;
    println!("C4 x C6 x C10 = {a}");

    let doubling = Homomorphism::scalar(&a, 2);
    let ker = doubling.kernel()?;
    let img = doubling.image()?;
    println!("x -> 2x: |ker| = {}, |im| = {}", ker.order(), img.order());
    let (q, _) = img.quotient()?;
    println!("A / 2A = {q}");
    for p in [2, 3, 5] {
        println!("{p}-rank {}", a.rank(p));
    }
    Ok(())
}
