//! Relative extension data from catalog groups: norm, lift, growth class
//! and the structure of the norm kernel.
//!
//! ```sh
//! cargo run --example norm_kernels -- o81_2
//! ```

use capitulation::gmodule::{
    classify_growth, f_property, make_relative_datum, norm_kernel_exponent, synthetic_wild_datum,
};
use capitulation::pcgroup::builtin_catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = builtin_catalog();
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        vec!["C3xC9".to_string(), "heis27".to_string(), "o81_2".to_string()]
    } else {
        names
    };
    for name in &names {
        let g = catalog.group(name)?;
        println!("{name}:");
        for (i, h) in g.subgroups_index_p_above_derived()?.iter().enumerate() {
            let d = make_relative_datum(&g, h)?;
            println!(
                "  H_{}: A_L = {}, A_K = {}, growth {}, exp ker N = {}, F-property {}",
                i + 1,
                d.a_l,
                d.a_k,
                classify_growth(&d)?,
                norm_kernel_exponent(&d)?,
                f_property(&d)?
            );
        }
    }
    let w = synthetic_wild_datum(3)?;
    println!(
        "synthetic {}: growth {}, violations {:?}",
        w.a_l,
        classify_growth(&w)?,
        w.violations()?
    );
    Ok(())
}
