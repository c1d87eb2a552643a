// Mutual cooperation becomes an equilibrium of the prisoners' dilemma once
// the entanglement passes a critical angle.

use std::error::Error;
use std::f64::consts::FRAC_PI_2;

use epr_games::{find_equilibria, pd_transition, EntanglementAngle, PayoffMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pd = PayoffMatrix::prisoners_dilemma();
    let t = pd_transition(&pd)?;
    println!("analytic  γ* = {:.12}", t.analytic);
    println!("bisection γ* = {:.12} ({} halvings)", t.bisected, t.iterations);

    for gamma in [0.0, t.analytic - 0.05, t.analytic + 0.05, FRAC_PI_2] {
        let report = find_equilibria(&pd, EntanglementAngle::new(gamma)?);
        let listed: Vec<String> = report
            .equilibria
            .iter()
            .map(|e| format!("{} ({:.3}, {:.3}) -> {:.3}", e.kind, e.profile.x, e.profile.y, e.payoff_a))
            .collect();
        println!("γ = {gamma:.4}: {}", listed.join("; "));
        assert_eq!(report.contains(1.0, 1.0, 0.0), gamma > t.analytic);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
