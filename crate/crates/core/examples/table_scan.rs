//! Verifies the embedded 5-rank table and runs a resumable scan into a
//! temporary store.
//!
//! ```sh
//! cargo run --release --example table_scan -- -20000
//! ```

use capitulation::capcli::{scan, verify_table, PatternClass, ScanParams, Store};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let from: i64 = std::env::args().nth(1).map_or(Ok(-13000), |s| s.parse())?;

    let verdicts = verify_table()?;
    let ok = verdicts.iter().filter(|v| v.rank_ok()).count();
    let pcap: Vec<usize> = verdicts
        .iter()
        .filter(|v| v.class == PatternClass::PCapitulation)
        .map(|v| v.row.row)
        .collect();
    println!("{} rows, {ok} with 5-rank 2, p-capitulation rows {pcap:?}", verdicts.len());

    let dir = std::env::temp_dir().join(format!("capitulation-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let store = Store::new(dir.join("store.tsv"));
    let params = ScanParams {
        from,
        to: -3,
        prime: 5,
        min_rank: 2,
        jobs: 4,
    };
    for pass in 1..=2 {
        let s = scan(&params, &store)?;
        println!(
            "pass {pass}: {} discriminants, {} added, {} stored, 5-rank 2 at {:?}",
            s.total,
            s.added,
            s.skipped,
            s.matches.iter().map(|r| r.discriminant).collect::<Vec<_>>()
        );
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
