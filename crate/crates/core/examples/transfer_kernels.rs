//! Transfer kernels of the index-p subgroups above G' for catalog groups.
//! Without arguments, every catalog group with G/G' of rank 2.
//!
//! ```sh
//! cargo run --example transfer_kernels -- heis27 o81_3
//! ```

use capitulation::pcgroup::{builtin_catalog, capitulation_type, transfer};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = builtin_catalog();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<String> = if args.is_empty() {
        catalog.names().map(String::from).collect()
    } else {
        args.clone()
    };
    for name in &names {
        let g = catalog.group(name)?;
        let ab = g.abelianization()?;
        // by default only groups with two-generator abelianization
        if args.is_empty() && ab.group.ngens() != 2 {
            continue;
        }
        let tkt = capitulation_type(&g)?;
        let pattern = tkt.pattern().map_or("-".to_string(), |v| format!("{v:?}"));
        println!(
            "{name:8} |G| = {:4}  G/G' = {:8}  |ker| = {:?}  type {pattern}",
            g.order(),
            ab.group.to_string(),
            tkt.kernel_orders()
        );
        // the transfer to G' itself; trivial when G is metabelian
        let d = g.derived_subgroup();
        if d.derived(&g).order() == 1 && d.order() < g.order() {
            let t = transfer(&g, &d)?;
            let whole = t.kernel()?.is_whole();
            println!("{:8} transfer to G' kills G/G': {whole}", "");
        }
    }
    Ok(())
}
