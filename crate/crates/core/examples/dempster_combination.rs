// Dempster's rule on two pairs of sources, printed as cross-product tables.
//
// cargo run --example dempster_combination

use dsfusion::cli::render_trace;
use dsfusion::{combine, combine_traced, conflict, Error, Frame, MassFunction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let frame = Frame::new(["F", "L", "R", "B"])?;
    let front = frame.subset_of(&["F"])?;

    // Two agreeing simple supports reinforce each other.
    let m = MassFunction::simple_support(&front, 0.75)?;
    let trace = combine_traced(&m, &m)?;
    println!("{}", render_trace(&trace, 2));

    // A source for {L,B} conflicts with the accumulated front evidence.
    let acc = MassFunction::from_entries(
        &frame,
        [(front.clone(), 0.98734375), (frame.full(), 0.01265625)],
    )?;
    let lb = MassFunction::simple_support(&frame.subset_of(&["L", "B"])?, 0.45)?;
    println!("k = {:.6}", conflict(&acc, &lb)?);
    println!("{}", render_trace(&combine_traced(&acc, &lb)?, 4));

    // Categorical sources with disjoint cores cannot be combined.
    let f1 = MassFunction::simple_support(&front, 1.0)?;
    let b1 = MassFunction::simple_support(&frame.subset_of(&["B"])?, 1.0)?;
    match combine(&f1, &b1) {
        Err(Error::TotalConflict { k, .. }) => println!("refused: k = {k}"),
        other => return Err(format!("expected total conflict, got {other:?}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
