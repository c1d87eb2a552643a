// Build entangled states in the two-particle algebra and read off their
// kets and measurement statistics.

use std::error::Error;
use std::f64::consts::{FRAC_PI_2, PI};

use epr_games::ga::{two_particle_state, StateObservables};
use epr_games::oracle::{build_state, joint_probability};
use epr_games::{rotor_from_euler, EulerAngles, Rotor};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let flip = EulerAngles::new(PI, 0.0, 0.0);
    let cases = [
        ("bell", EulerAngles::IDENTITY),
        ("singlet-type", flip),
    ];
    for (name, bob) in cases {
        let psi = two_particle_state(&Rotor::IDENTITY, &Rotor::from_euler(bob), FRAC_PI_2)?;
        let ket = psi.to_ket();
        println!("{name}: amplitudes over |00>, |01>, |10>, |11>");
        for amp in ket {
            println!("  {:+.6} {:+.6}i", amp.re, amp.im);
        }

        let observables = StateObservables::new(&psi);
        let oracle = build_state(FRAC_PI_2, EulerAngles::IDENTITY, bob)?;
        for kappa in [0.0, FRAC_PI_2] {
            for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let ga = observables.outcome_probability(kappa, kappa, m, n)?;
                let qm = joint_probability(&oracle, m, n, kappa, kappa)?;
                println!("  κ = {kappa:.4}  P{m}{n} = {ga:.6}  (state vector {qm:.6})");
                assert!((ga - qm).abs() < 1e-10);
            }
        }
    }

    let r = rotor_from_euler(0.4, 1.1, -0.7);
    println!("rotor {}  |R R† - 1| = {:.1e}", r.value(), r.normalization_error());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
