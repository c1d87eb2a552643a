// Equilibria of a game across the whole entanglement range.

use std::error::Error;
use std::f64::consts::FRAC_PI_2;

use epr_games::{find_equilibria, EntanglementAngle, PayoffMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let game = PayoffMatrix::new(4.0, 0.0, 6.0, 1.0);
    println!("gamma   equilibria");
    for k in 0..=10 {
        let gamma = EntanglementAngle::new(k as f64 / 10.0 * FRAC_PI_2)?;
        let report = find_equilibria(&game, gamma);
        let cells: Vec<String> = report
            .equilibria
            .iter()
            .map(|e| {
                let tag = if e.strict { "" } else { "~" };
                format!("{tag}({:.3},{:.3})={:.3}", e.profile.x, e.profile.y, e.payoff_a)
            })
            .collect();
        println!("{:.4}  {}", gamma.radians(), cells.join("  "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
