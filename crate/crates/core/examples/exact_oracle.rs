// Exact rational n-way combination and the order independence of the fold.
//
// cargo run --example exact_oracle

use dsfusion::{builtin_takraw_scenario, fuse_all, oracle_fuse_exact};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let scenario = builtin_takraw_scenario();
    let evidence = scenario.evidence_for(1)?;
    let exact = oracle_fuse_exact(&evidence)?;
    println!(
        "joint conflict = {} ≈ {:.6}",
        exact.conflict,
        num_f64(&exact.conflict)
    );
    for (mask, value) in &exact.masses {
        let subset = scenario.frame().subset_from_mask(*mask)?;
        println!(
            "{:<10} = {value}  ≈ {:.10}",
            subset.to_string(),
            num_f64(value)
        );
    }

    let forward = fuse_all(&evidence)?.final_mass;
    let mut reversed = evidence.clone();
    reversed.reverse();
    let backward = fuse_all(&reversed)?.final_mass;
    let oracle = exact.to_mass_function();
    println!("forward vs oracle:  {:.2e}", forward.max_abs_diff(&oracle)?);
    println!(
        "backward vs oracle: {:.2e}",
        backward.max_abs_diff(&oracle)?
    );
    Ok(())
}

fn num_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
