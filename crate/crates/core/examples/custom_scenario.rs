// Writing a scenario document by hand, predicting from it, and exporting
// the built-in scenario as a starting point.
//
// cargo run --example custom_scenario

use dsfusion::builtin_takraw_scenario;
use dsfusion::cli::{emit_scenario, parse_scenario};

const DOC: &str = r#"{
  "name": "serve",
  "frame": ["short", "deep", "wide"],
  "sources": [
    { "name": "hip opens early", "focal": ["wide"], "bpa": [0.6, 0.3] },
    { "name": "toe points down", "focal": ["short", "wide"], "bpa": [0.5, 0.4] },
    { "name": "long backswing", "focal": ["deep"], "bpa": [0.2, 0.7] }
  ]
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let scenario = parse_scenario(DOC)?;
    for p in scenario.sweep() {
        let p = p?;
        println!(
            "condition {}: {} (mass {:.4}, conflict per step {:?})",
            p.condition,
            scenario.describe(&p.winner),
            p.winner_mass,
            p.steps_conflict
        );
    }

    let exported = emit_scenario(&builtin_takraw_scenario());
    let reparsed = parse_scenario(&exported)?;
    assert_eq!(reparsed, builtin_takraw_scenario());
    println!(
        "built-in scenario document: {} bytes, {} sources",
        exported.len(),
        reparsed.motions().len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
