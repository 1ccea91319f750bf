//! Scenario input: built-in presets for the worked derivations and a
//! JSON file format for user-defined quantity sets and pin choices.
//!
//! Scenario files look like
//!
//! ```json
//! {
//!   "basis": ["L", "Θ", "T", "M"],
//!   "quantities": [
//!     { "name": "U", "dim": "L^-1 T^-1 M" },
//!     { "name": "nu", "symbol": "ν", "dim": "T^-1" }
//!   ],
//!   "pins": [
//!     { "invariant": 1, "quantity": "U", "value": "1" }
//!   ]
//! }
//! ```
//!
//! Exponents are written `p` or `p/q`; `symbol` defaults to the name;
//! pin invariant indices are 1-based in files. `pins` may be omitted, in
//! which case derivations fall back to the deterministic nullspace basis.

use serde::Deserialize;
use thiserror::Error;

use crate::dimension::{parse_dimension, DimensionBasis, DimensionError, Quantity, QuantitySet};
use crate::pi_solver::PinSpec;
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("invalid scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error("pin references unknown quantity `{0}`")]
    UnknownPinQuantity(String),
    #[error("pin invariant indices are 1-based; got 0")]
    ZeroInvariantIndex,
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

#[derive(Debug, Deserialize)]
struct ScenarioFile {
    basis: Vec<String>,
    quantities: Vec<QuantityDecl>,
    #[serde(default)]
    pins: Vec<PinDecl>,
}

#[derive(Debug, Deserialize)]
struct QuantityDecl {
    name: String,
    #[serde(default)]
    symbol: Option<String>,
    dim: String,
}

#[derive(Debug, Deserialize)]
struct PinDecl {
    invariant: usize,
    quantity: String,
    value: Rational,
}

/// Parses scenario JSON into a quantity set and an optional pin spec.
pub fn parse_scenario(text: &str) -> Result<(QuantitySet, Option<PinSpec>), ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text)?;
    let basis = DimensionBasis::new(file.basis)?;
    let mut quantities = Vec::with_capacity(file.quantities.len());
    for decl in &file.quantities {
        let dim = parse_dimension(&decl.dim, &basis)?;
        let symbol = decl.symbol.clone().unwrap_or_else(|| decl.name.clone());
        quantities.push(Quantity::new(decl.name.clone(), symbol, dim));
    }
    let set = QuantitySet::new(basis, quantities)?;
    if file.pins.is_empty() {
        return Ok((set, None));
    }
    let mut pins = PinSpec::new();
    for decl in &file.pins {
        if decl.invariant == 0 {
            return Err(ScenarioError::ZeroInvariantIndex);
        }
        let quantity = set
            .index_of(&decl.quantity)
            .ok_or_else(|| ScenarioError::UnknownPinQuantity(decl.quantity.clone()))?;
        pins = pins.pin(decl.invariant - 1, quantity, decl.value);
    }
    Ok((set, Some(pins)))
}

/// Built-in quantity sets and pin choices for the worked derivations.
pub mod presets {
    use super::*;

    fn quantity(basis: &DimensionBasis, name: &str, symbol: &str, dim: &str) -> Quantity {
        Quantity::new(
            name,
            symbol,
            parse_dimension(dim, basis).expect("preset dimensions are well-formed"),
        )
    }

    fn frequency_basis() -> DimensionBasis {
        DimensionBasis::new(vec!["L", "Θ", "T", "M"]).expect("labels are unique")
    }

    /// U, ν, T, c, k over (L, Θ, T, M): the classical-law hypothesis.
    pub fn rayleigh_jeans_set() -> QuantitySet {
        let basis = frequency_basis();
        let quantities = vec![
            quantity(&basis, "U", "U", "L^-1 T^-1 M"),
            quantity(&basis, "nu", "ν", "T^-1"),
            quantity(&basis, "T", "T", "Θ"),
            quantity(&basis, "c", "c", "L T^-1"),
            quantity(&basis, "k", "k", "L^2 Θ^-1 T^-2 M"),
        ];
        QuantitySet::new(basis, quantities).expect("preset is well-formed")
    }

    /// Pin x_{U,1} = 1 for the single classical invariant.
    pub fn rayleigh_jeans_pins() -> PinSpec {
        PinSpec::new().pin(0, 0, Rational::ONE)
    }

    /// U, ν, T, c, k, η over (L, Θ, T, M): the displacement-law
    /// hypothesis with a third dimensional constant of action.
    pub fn generalized_set() -> QuantitySet {
        let basis = frequency_basis();
        let quantities = vec![
            quantity(&basis, "U", "U", "L^-1 T^-1 M"),
            quantity(&basis, "nu", "ν", "T^-1"),
            quantity(&basis, "T", "T", "Θ"),
            quantity(&basis, "c", "c", "L T^-1"),
            quantity(&basis, "k", "k", "L^2 Θ^-1 T^-2 M"),
            quantity(&basis, "eta", "η", "L^2 T^-1 M"),
        ];
        QuantitySet::new(basis, quantities).expect("preset is well-formed")
    }

    /// Pins x_{U,1} = 1, x_{η,1} = N and x_{U,2} = 0, x_{η,2} = 1: the
    /// first invariant carries U explicitly, the second is ην/(kT).
    pub fn generalized_pins(n: Rational) -> PinSpec {
        PinSpec::new()
            .pin(0, 0, Rational::ONE)
            .pin(0, 5, n)
            .pin(1, 0, Rational::ZERO)
            .pin(1, 5, Rational::ONE)
    }

    /// U, λ, T, c, e, m, R, K over (L, Θ, T, M, A): the eight-quantity
    /// wavelength hypothesis with electron charge and mass, the gas
    /// constant, and a dielectric constant in an arbitrary system.
    pub fn jeans_set() -> QuantitySet {
        let basis = DimensionBasis::new(vec!["L", "Θ", "T", "M", "A"]).expect("labels are unique");
        let quantities = vec![
            quantity(&basis, "U", "U", "L^-1 T^-1 M"),
            quantity(&basis, "lambda", "λ", "L"),
            quantity(&basis, "T", "T", "Θ"),
            quantity(&basis, "c", "c", "L T^-1"),
            quantity(&basis, "e", "e", "L^3/2 T^-1 M^1/2 A^1/2"),
            quantity(&basis, "m", "m", "M"),
            quantity(&basis, "R", "R", "L^2 Θ^-1 T^-2 M"),
            quantity(&basis, "K", "K", "A"),
        ];
        QuantitySet::new(basis, quantities).expect("preset is well-formed")
    }

    /// The three pin triples (on U, m, R) of the worked eight-quantity
    /// derivation.
    pub fn jeans_pins() -> PinSpec {
        let r = |s: &str| s.parse::<Rational>().expect("literal rationals parse");
        PinSpec::new()
            .pin(0, 0, r("1"))
            .pin(0, 5, r("0"))
            .pin(0, 6, r("-1"))
            .pin(1, 0, r("0"))
            .pin(1, 5, r("-1"))
            .pin(1, 6, r("1"))
            .pin(2, 0, r("0"))
            .pin(2, 5, r("-2"))
            .pin(2, 6, r("1"))
    }

    /// T and k alone: rank equals the quantity count, so there is no
    /// invariant at all.
    pub fn temperature_boltzmann_set() -> QuantitySet {
        let basis = frequency_basis();
        let quantities = vec![
            quantity(&basis, "T", "T", "Θ"),
            quantity(&basis, "k", "k", "L^2 Θ^-1 T^-2 M"),
        ];
        QuantitySet::new(basis, quantities).expect("preset is well-formed")
    }
}

/// A derivation preset name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivePreset {
    RayleighJeans,
    Generalized,
    Jeans,
}

impl DerivePreset {
    pub fn from_name(name: &str) -> Result<DerivePreset, ScenarioError> {
        match name {
            "rayleigh-jeans" => Ok(DerivePreset::RayleighJeans),
            "generalized" => Ok(DerivePreset::Generalized),
            "jeans" => Ok(DerivePreset::Jeans),
            other => Err(ScenarioError::UnknownPreset(other.to_string())),
        }
    }

    pub fn names() -> [&'static str; 3] {
        ["rayleigh-jeans", "generalized", "jeans"]
    }

    /// The preset's quantity set and pin choice; `n` parameterizes the
    /// free exponent of the generalized hypothesis.
    pub fn instantiate(&self, n: Rational) -> (QuantitySet, PinSpec) {
        match self {
            DerivePreset::RayleighJeans => {
                (presets::rayleigh_jeans_set(), presets::rayleigh_jeans_pins())
            }
            DerivePreset::Generalized => (presets::generalized_set(), presets::generalized_pins(n)),
            DerivePreset::Jeans => (presets::jeans_set(), presets::jeans_pins()),
        }
    }
}

/// Value of the wavelength-exponent functional x_λ − 2x_U + x_e/2 on an
/// eight-quantity power vector.
///
/// Summing the length and time rows of the homogeneous system eliminates
/// everything else, so this functional vanishes on the entire nullspace:
/// with no electron-charge dependence (x_e = 0) the wavelength exponent
/// is locked to twice the density exponent, and no pin choice can reach
/// the λ^-4 or λ^-5 scaling a displacement law requires.
pub fn wavelength_constraint(powers: &[Rational]) -> Rational {
    assert_eq!(powers.len(), 8, "functional is defined on the eight-quantity set");
    let two = Rational::from(2);
    powers[1] - two * powers[0] + powers[4] / two
}

/// Nullspace-wide check of the wavelength-exponent lock.
#[derive(Debug, Clone)]
pub struct WavelengthConstraintReport {
    pub nullspace: Vec<Vec<Rational>>,
    pub functional_values: Vec<Rational>,
    pub holds: bool,
}

/// Evaluates the functional on every nullspace basis vector of the
/// eight-quantity system.
pub fn wavelength_constraint_report() -> WavelengthConstraintReport {
    let nullspace = crate::pi_solver::nullspace_basis(&presets::jeans_set());
    let functional_values: Vec<Rational> =
        nullspace.iter().map(|v| wavelength_constraint(v)).collect();
    let holds = functional_values.iter().all(Rational::is_zero);
    WavelengthConstraintReport {
        nullspace,
        functional_values,
        holds,
    }
}
