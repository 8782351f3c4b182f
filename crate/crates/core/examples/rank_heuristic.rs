//! The norm-kernel rank distribution: exact closed form, Monte Carlo, and
//! the published p = 3 values.
//!
//! ```sh
//! cargo run --release --example rank_heuristic -- 3 100000
//! ```

use capitulation::heuristics::{
    compare_distributions, format_decimal, monte_carlo_rank_distribution, published_empirical_p3,
    predicted_rank_distribution, MonteCarloConfig, SamplerModel,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(Ok(3), |s| s.parse())?;
    let trials: u64 = args.next().map_or(Ok(20_000), |s| s.parse())?;

    let exact = predicted_rank_distribution(p, 3)?;
    println!("closed form p = {p}: {exact}");
    println!("mass beyond rank 6: {}", format_decimal(&exact.residual_mass(), 6));

    for model in [SamplerModel::Layered, SamplerModel::Cokernel { size: 8 }] {
        let cfg = MonteCarloConfig { model, kmax: 3 };
        let mc = monte_carlo_rank_distribution(p, trials, 42, &cfg)?;
        let tv = compare_distributions(&exact, &mc)?;
        println!("{model:?}: {mc}  TV = {}", format_decimal(&tv, 4));
    }
    if p == 3 {
        let emp = published_empirical_p3();
        println!(
            "published empirical {emp}  TV = {}",
            format_decimal(&compare_distributions(&exact, &emp)?, 4)
        );
    }
    Ok(())
}
