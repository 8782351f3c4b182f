//! Idempotents of Z/p^m [G] and the decompositions they induce.
//!
//! ```sh
//! cargo run --example idempotents
//! ```

use capitulation::abgroup::{AbelianGroup, Homomorphism};
use capitulation::gmodule::{
    character_idempotents, cycle_decomposition, decompose_module, primitive_idempotents, GModule,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C4 over Z/25: all characters are rational since 4 | 5 - 1
    let c4 = AbelianGroup::cyclic(4);
    let chars = character_idempotents(&c4, 5, 2)?;
    println!("Z/25[C4]: {} character idempotents", chars.len());
    for e in &chars {
        let coeffs: Vec<u64> = e.terms().map(|(_, c)| c).collect();
        println!("  {coeffs:?} idempotent: {}", e.is_idempotent());
    }

    // C4 over Z/9: x^4 - 1 = (x - 1)(x + 1)(x^2 + 1) mod 3
    let prim = primitive_idempotents(&c4, 3, 2)?;
    println!("Z/9[C4]: {} primitive idempotents", prim.len());

    // C2 acting on (Z/9)^2 by swapping coordinates
    let a = AbelianGroup::new(vec![9, 9])?;
    let swap = Homomorphism::from_images(&a, &a, &[vec![0, 1], vec![1, 0]])?;
    let m = GModule::cyclic(&a, 2, 3, swap)?;
    let idems = primitive_idempotents(m.acting(), 3, m.exponent_valuation())?;
    for c in decompose_module(&m, &idems)? {
        println!("  component of order {} generated by {:?}", c.subgroup.order(), c.subgroup.generators());
    }
    let cycles = cycle_decomposition(&m)?;
    println!("cycles: {cycles:?}");
    for b in &cycles {
        println!("  <{b:?}> has order {}", m.submodule(std::slice::from_ref(b))?.order());
    }
    Ok(())
}
