//! Power-commutator presentations: consistency, collection and invariants.
//!
//! ```sh
//! cargo run --example pc_collection
//! ```

use capitulation::pcgroup::{parse_word, GroupInvariants, PcGroup, Presentation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the Heisenberg group mod 3: [g2, g1] = g3 central, all powers trivial
    let mut pres = Presentation::trivial_relations("heis27", 3, 3);
    pres.set_commutator(1, 0, vec![0, 0, 1]);
    let g = PcGroup::new(pres)?;
    println!("{}: order {}, abelian {}", g.name(), g.order(), g.is_abelian());

    for text in ["g2 g1", "g1^-1 g2^-1 g1 g2", "g1 g2 g1 g2 g1 g2", "g2^2 g1^2 g3"] {
        let w = parse_word(text)?;
        println!("{text:>20} -> {}", g.format_elem(g.collect(&w)?));
    }
    let (a, b) = (g.generator(0), g.generator(1));
    println!("[g1, g2] = {}", g.format_elem(g.commutator(a, b)));

    let inv = GroupInvariants::of(&g);
    println!("G/G' = {:?}, |G'| = {}, |Z| = {}", inv.abelianization, inv.derived_order, inv.center_order);
    println!("lower central series orders {:?}", inv.lower_central);

    // g1^3 = g2 forces g1 and g2 to commute, so [g2, g1] = g3 is inconsistent
    let mut bad = Presentation::trivial_relations("bad", 3, 3);
    bad.set_power(0, vec![0, 1, 0]);
    bad.set_commutator(1, 0, vec![0, 0, 1]);
    match PcGroup::new(bad) {
        Ok(_) => println!("unexpectedly consistent"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
