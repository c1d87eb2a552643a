// Angle choices that make the unentangled game reproduce the classical
// bilinear payoff, whatever the free angles are set to.

use std::error::Error;

use epr_games::game::{embedded_probability, is_embedded, EmbeddingClass};
use epr_games::{
    embedding_solver, expected_payoff_alice, DirectionTerms, EmbeddingSolution, EntanglementAngle, PayoffMatrix,
    StrategyProfile,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let game = PayoffMatrix::new(5.0, -1.0, 2.0, 3.5);
    let canonical = embedding_solver(&game);
    let twisted = EmbeddingSolution {
        alice: EmbeddingClass::ZeroAzimuth { polar: 0.8, twist: 2.4 },
        bob: EmbeddingClass::FreeAzimuth { twist: -1.0, azimuth: 0.3 },
    };

    for (name, solution) in [("canonical", canonical), ("twisted", twisted)] {
        let cfg = solution.config(EntanglementAngle::NONE);
        let terms = DirectionTerms::new(&cfg);
        println!("{name}: X = {:?}, Y = {:?}, Z = {:?}", terms.x, terms.y, terms.z);
        assert!(is_embedded(&cfg, 1e-12));
        for (x, y) in [(0.0, 0.0), (1.0, 0.0), (0.3, 0.9)] {
            let p = expected_payoff_alice(StrategyProfile::new(x, y)?, &cfg, &game);
            let classical = game.g11
                + x * (game.g01 - game.g11)
                + y * (game.g10 - game.g11)
                + x * y * (game.g00 - game.g01 - game.g10 + game.g11);
            println!("  Π_A({x}, {y}) = {p:.12}  classical {classical:.12}");
        }
    }

    println!("embedded outcome probabilities at γ = 0.9, directions (1, 2):");
    let gamma = EntanglementAngle::new(0.9)?;
    for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        println!("  P{m}{n} = {:.6}", embedded_probability(m, n, 1, 2, gamma)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
