// Entanglement pulls the stag hunt's two pure payoffs together and moves
// its mixed equilibrium toward one half.

use std::error::Error;
use std::f64::consts::FRAC_PI_2;

use epr_games::{embedded_payoff, sh_mixed_ne, EntanglementAngle, PayoffMatrix, StrategyProfile};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sh = PayoffMatrix::stag_hunt();
    let hare = StrategyProfile::new(0.0, 0.0)?;
    let stag = StrategyProfile::new(1.0, 1.0)?;
    println!("{:>8} {:>10} {:>10} {:>10}", "gamma", "Π(0,0)", "Π(1,1)", "x*");
    for k in 0..=8 {
        let gamma = EntanglementAngle::new(k as f64 / 8.0 * FRAC_PI_2)?;
        let mixed = sh_mixed_ne(&sh, gamma)?;
        println!(
            "{:>8.4} {:>10.4} {:>10.4} {:>10.6}",
            gamma.radians(),
            embedded_payoff(hare, gamma, &sh),
            embedded_payoff(stag, gamma, &sh),
            mixed.x
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
