// Frames, subsets and the belief/plausibility interval of a mass function.
//
// cargo run --example belief_plausibility

use dsfusion::{Frame, MassFunction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["F", "L", "R", "B"])?;
    let front = frame.subset_of(&["F"])?;
    let left_back = frame.subset_of(&["L", "B"])?;

    let m = MassFunction::from_entries(
        &frame,
        [
            (front.clone(), 0.5),
            (left_back.clone(), 0.3),
            (frame.full(), 0.2),
        ],
    )?;
    println!("m = {m:?}");
    println!("core = {}", m.core());

    println!("{:<10} {:>8} {:>8}", "set", "Bel", "Pl");
    for a in frame.powerset().filter(|a| !a.is_empty()) {
        let bel = m.belief(&a)?;
        let pl = m.plausibility(&a)?;
        assert!(bel <= pl);
        assert!((pl - (1.0 - m.belief(&a.complement())?)).abs() < 1e-12);
        println!("{:<10} {bel:>8.4} {pl:>8.4}", a.to_string());
    }

    let vacuous = MassFunction::vacuous(&frame);
    println!(
        "vacuous: Bel({front}) = {}, Pl({front}) = {}",
        vacuous.belief(&front)?,
        vacuous.plausibility(&front)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
