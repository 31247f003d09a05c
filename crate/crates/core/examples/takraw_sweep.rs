// Every condition of the bicycle-kick scenario, with the fold checked
// against the exact oracle. Prints CSV suitable for plotting.
//
// cargo run --example takraw_sweep

use dsfusion::cli::report::sweep_csv;
use dsfusion::{builtin_takraw_scenario, oracle_fuse_all};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let scenario = builtin_takraw_scenario();
    let mut predictions = Vec::new();
    for (c, outcome) in scenario.sweep().into_iter().enumerate() {
        let p = outcome?;
        let oracle = oracle_fuse_all(&scenario.evidence_for(c + 1)?)?;
        let drift = oracle.max_abs_diff(&p.final_mass)?;
        assert!(drift < 1e-9);
        println!(
            "condition {}: {:<10} mass {:.4}  [Bel {:.4}, Pl {:.4}]  fold/oracle drift {drift:.1e}",
            p.condition,
            scenario.describe(&p.winner),
            p.winner_mass,
            p.winner_belief,
            p.winner_plausibility
        );
        predictions.push(p);
    }
    print!("\n{}", sweep_csv(&predictions));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
