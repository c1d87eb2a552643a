// Three independent routes to the same outcome probabilities: multivector
// overlaps, the closed form, and a complex state vector.

use std::error::Error;

use epr_games::cli::verify;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = verify(200, 42, 1e-10);
    println!("samples        {}", report.samples);
    println!("max deviation  {:e}", report.max_deviation);
    match &report.first_failure {
        None => println!("all pipelines agree within {:e}", report.tol),
        Some(sample) => return Err(format!("disagreement:\n{sample}").into()),
    }

    // At zero tolerance rounding differences show up immediately.
    let strict = verify(1, 42, 0.0);
    if let Some(sample) = strict.first_failure {
        println!("zero tolerance trips on rounding:\n{sample}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
