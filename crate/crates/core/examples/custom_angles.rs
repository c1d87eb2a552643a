// A configuration outside the classical embedding: equilibria come from the
// general gap relations and the correlation terms no longer vanish.

use std::error::Error;

use epr_games::game::ne_gap_alice;
use epr_games::{
    find_equilibria_general, DirectionPair, DirectionTerms, EntanglementAngle, EprConfig, PayoffMatrix,
    PlayerParams,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let game = PayoffMatrix::stag_hunt();
    let cfg = EprConfig {
        alice: PlayerParams::new(0.4, 0.2, 1.0),
        bob: PlayerParams::new(0.4, -0.3, 0.5),
        alice_directions: DirectionPair::new(0.0, 2.6),
        bob_directions: DirectionPair::new(0.1, 3.0),
        gamma: EntanglementAngle::new(1.0)?,
    };
    let terms = DirectionTerms::new(&cfg);
    println!("X = {:?}\nY = {:?}\nZ = {:?}", terms.x, terms.y, terms.z);

    let report = find_equilibria_general(&cfg, &game);
    for e in &report.equilibria {
        println!(
            "{} ({:.6}, {:.6})  Π_A = {:.6}  Π_B = {:.6}",
            e.kind, e.profile.x, e.profile.y, e.payoff_a, e.payoff_b
        );
        let worst = (0..=10)
            .map(|k| ne_gap_alice(e.profile.x, k as f64 / 10.0, e.profile.y, &cfg, &game))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        println!("  smallest gap against Alice's deviations: {worst:.3e}");
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
