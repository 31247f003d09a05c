// The ten-motion bicycle-kick chain for one condition, step by step.
//
// cargo run --example takraw_trace -- 1

use dsfusion::builtin_takraw_scenario;
use dsfusion::cli::report::render_fuse_table;

pub fn run_condition(condition: usize) -> Result<(), Box<dyn std::error::Error>> {
    let scenario = builtin_takraw_scenario();
    for (i, motion) in scenario.motions().iter().enumerate() {
        println!(
            "motion {:>2}: {:<26} {:<6} weight {}",
            i + 1,
            motion.name,
            motion.direction.to_string(),
            scenario.bpa()[condition - 1][i]
        );
    }
    let (report, prediction) = scenario.predict_traced(condition)?;
    println!(
        "{}",
        render_fuse_table(&scenario, &report, &prediction, true, 4)
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_condition(1)
}

#[allow(dead_code)]
fn main() {
    let condition = std::env::args()
        .nth(1)
        .map_or(1, |a| a.parse().expect("condition number"));
    run_condition(condition).unwrap();
}
