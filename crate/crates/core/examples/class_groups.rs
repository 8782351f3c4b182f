//! Class groups of imaginary quadratic orders from reduced forms.
//!
//! ```sh
//! cargo run --example class_groups -- -23 -84 -12451
//! ```

use capitulation::quadform::{
    class_group_structure, compose, enumerate_reduced, genus_two_rank, power, Discriminant,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let discs = if args.is_empty() { vec![-23, -84, -3299, -12451] } else { args };

    for v in discs {
        let d = Discriminant::new(v)?;
        let cg = class_group_structure(d)?;
        println!("D = {v}: h = {}, Cl = {}", cg.order, cg.describe());
        if d.is_fundamental() {
            println!("  genus theory predicts 2-rank {}, found {}", genus_two_rank(d)?, cg.p_rank(2));
        }
        for (g, &n) in cg.generators.iter().zip(&cg.invariant_factors) {
            println!("  generator {g} of order {n}: {g}^{n} = {}", power(g, n as u64, d)?);
        }
        let forms = enumerate_reduced(d);
        if forms.len() <= 8 {
            for f in &forms {
                let sq = compose(f, f, d)?;
                println!("  {f} * {f} = {sq}");
            }
        }
    }
    Ok(())
}
