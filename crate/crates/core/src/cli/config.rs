//! Game configuration files.
//!
//! ```toml
//! gamma = "pi/2"            # optional
//!
//! [payoffs]                 # Alice's G_mn; Bob's matrix is the transpose
//! g00 = 3
//! g01 = 0
//! g10 = 4
//! g11 = 2
//!
//! [alice]                   # optional, as is every key inside it
//! angles = [0, 0, 0]        # polar, twist, azimuth
//! directions = [0, "pi"]    # first, second
//!
//! [bob]
//! angles = ["30deg", 0, "-pi/4"]
//! ```
//!
//! An angle is a number of radians or a string: `"45deg"`, `"pi"`, `"-pi/4"`,
//! `"3pi/2"`, `"0.5pi"`. A `[payoffs_bob]` table is accepted only when it is
//! the transpose of `[payoffs]`.

use std::f64::consts::PI;
use std::path::Path;

use serde::Deserialize;

use crate::epr::{DirectionPair, EntanglementAngle, EprConfig, PlayerParams};
use crate::error::{Error, Result};
use crate::game::{EmbeddingSolution, PayoffMatrix};

/// Built-in games.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// Prisoners' dilemma (3, 0, 4, 2).
    PdPaper,
    /// Stag hunt (10, 0, 8, 7).
    ShPaper,
}

impl Preset {
    pub fn game(self) -> GameConfig {
        let payoffs = match self {
            Self::PdPaper => PayoffMatrix::prisoners_dilemma(),
            Self::ShPaper => PayoffMatrix::stag_hunt(),
        };
        GameConfig::embedded(payoffs)
    }
}

/// A parsed configuration: the game, the angle setup and an optional γ.
#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub payoffs: PayoffMatrix,
    pub alice: PlayerParams,
    pub bob: PlayerParams,
    pub alice_directions: DirectionPair,
    pub bob_directions: DirectionPair,
    pub gamma: Option<EntanglementAngle>,
    /// Some angle was given explicitly, so the embedding is not assumed.
    pub custom_angles: bool,
}

impl GameConfig {
    /// The game under the canonical embedding.
    pub fn embedded(payoffs: PayoffMatrix) -> Self {
        let cfg = EmbeddingSolution::CANONICAL.config(EntanglementAngle::NONE);
        Self {
            payoffs,
            alice: cfg.alice,
            bob: cfg.bob,
            alice_directions: cfg.alice_directions,
            bob_directions: cfg.bob_directions,
            gamma: None,
            custom_angles: false,
        }
    }

    pub fn epr_config(&self, gamma: EntanglementAngle) -> EprConfig {
        EprConfig {
            alice: self.alice,
            bob: self.bob,
            alice_directions: self.alice_directions,
            bob_directions: self.bob_directions,
            gamma,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        raw.resolve()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum AngleValue {
    Number(f64),
    Text(String),
}

impl AngleValue {
    fn radians(&self) -> Result<f64> {
        let value = match self {
            Self::Number(v) => *v,
            Self::Text(s) => parse_angle(s)?,
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::NonFiniteAngle(value))
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPayoffs {
    g00: f64,
    g01: f64,
    g10: f64,
    g11: f64,
}

impl RawPayoffs {
    fn matrix(&self) -> PayoffMatrix {
        PayoffMatrix::new(self.g00, self.g01, self.g10, self.g11)
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlayer {
    angles: Option<[AngleValue; 3]>,
    directions: Option<[AngleValue; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    gamma: Option<AngleValue>,
    payoffs: RawPayoffs,
    payoffs_bob: Option<RawPayoffs>,
    #[serde(default)]
    alice: RawPlayer,
    #[serde(default)]
    bob: RawPlayer,
}

impl RawConfig {
    fn resolve(self) -> Result<GameConfig> {
        let payoffs = self.payoffs.matrix();
        if !payoffs.is_finite() {
            return Err(Error::Config("payoffs must be finite".into()));
        }
        if let Some(bob) = &self.payoffs_bob {
            if bob.matrix() != payoffs.transpose() {
                return Err(Error::AsymmetricGame);
            }
        }
        let mut config = GameConfig::embedded(payoffs);
        config.gamma = self.gamma.map(|g| g.radians().and_then(EntanglementAngle::new)).transpose()?;

        let players = [
            (&self.alice, &mut config.alice, &mut config.alice_directions),
            (&self.bob, &mut config.bob, &mut config.bob_directions),
        ];
        for (raw, params, directions) in players {
            if let Some([a, b, c]) = &raw.angles {
                *params = PlayerParams::new(a.radians()?, b.radians()?, c.radians()?);
                config.custom_angles = true;
            }
            if let Some([first, second]) = &raw.directions {
                *directions = DirectionPair::new(first.radians()?, second.radians()?);
                config.custom_angles = true;
            }
        }
        Ok(config)
    }
}

/// Parse an angle in radians: a plain number, `<x>deg`, or a multiple of π
/// such as `pi`, `-pi/4`, `3pi/2`, `0.25pi`, `2*pi`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let bad = || Error::Config(format!("cannot parse angle {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase().replace('π', "pi");
    if let Some(deg) = s.strip_suffix("deg") {
        return deg.parse::<f64>().map(f64::to_radians).map_err(|_| bad());
    }
    let Some((coef, rest)) = s.split_once("pi") else {
        return s.parse::<f64>().map_err(|_| bad());
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match rest {
        "" => 1.0,
        r => r.strip_prefix('/').ok_or_else(bad)?.parse::<f64>().map_err(|_| bad())?,
    };
    if divisor == 0.0 {
        return Err(bad());
    }
    Ok(coef * PI / divisor)
}
