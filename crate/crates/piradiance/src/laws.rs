//! The generalized displacement law with pluggable universal functions:
//! spectral densities, analytic derivatives, peak location, the
//! red/violet/maximum criteria, and total energy density.
//!
//! Every law is U(ν,T) = (8πν²/c³)·kT·X^{−N}·Φ(X) with X = ην/(kT).
//! The classical law is the N = 0, Φ ≡ 1 member; the exponential and
//! Planck-distribution members provide the familiar named laws. Laws are
//! immutable value objects and all evaluation is pure.

use std::io;

use serde::Serialize;
use thiserror::Error;

use crate::numerics::{
    detect_divergence, find_root, integrate_semiinfinite, DivergenceVerdict, NumericsError,
    QUADRATURE_TOL,
};

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;

/// Reference constants behind the built-in law presets (k in J/K, η in J·s).
pub const PLANCK_K: f64 = 1.3806e-23;
pub const PLANCK_ETA: f64 = 6.6262e-34;
pub const WIEN_PASCHEN_K: f64 = 1.7963e-23;
pub const WIEN_PASCHEN_ETA: f64 = 9.1670e-34;
pub const THIESEN_K: f64 = 1.8768e-23;
pub const THIESEN_ETA: f64 = 7.9813e-34;
pub const RAYLEIGH_K: f64 = 1.5967e-23;
pub const RAYLEIGH_ETA: f64 = 5.4323e-34;

const LIMIT_TOL: f64 = 1e-6;
const PEAK_ROOT_TOL: f64 = 1e-13;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LawError {
    #[error("displacement exponent must be a real number below 3, got {0}")]
    InvalidDisplacementExponent(f64),
    #[error("{name} must be positive, got {value}")]
    NonPositiveConstant { name: &'static str, value: f64 },
    #[error("{name} must be positive and finite, got {value}")]
    Domain { name: &'static str, value: f64 },
    #[error("law has no maximum (monotone or stationary inflection)")]
    NoMaximum,
    #[error("energy integral is divergent")]
    DivergentIntegral,
    #[error("grid must be strictly increasing and positive")]
    GridNotIncreasing,
    #[error("spectrum is not temperature-invariant at ν/T = {nu_over_t}")]
    ScaleInvarianceViolated { nu_over_t: f64 },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// The dimensionless similarity function Φ(X) with its first two
/// derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "exponent")]
pub enum UniversalFunction {
    /// Φ(X) = exp(−X).
    Exponential,
    /// Φ(X) = 1/(exp(X) − 1), evaluated in the cancellation-free form.
    PlanckDistribution,
    /// Φ(X) = X^a.
    PowerLaw(f64),
    /// Φ ≡ 1; embeds the classical law in the generalized form.
    ConstantOne,
}

impl UniversalFunction {
    pub fn evaluate(&self, x: f64) -> f64 {
        match self {
            UniversalFunction::Exponential => (-x).exp(),
            UniversalFunction::PlanckDistribution => x.exp_m1().recip(),
            UniversalFunction::PowerLaw(a) => x.powf(*a),
            UniversalFunction::ConstantOne => 1.0,
        }
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match self {
            UniversalFunction::Exponential => -(-x).exp(),
            UniversalFunction::PlanckDistribution => {
                let phi = x.exp_m1().recip();
                -phi * (1.0 + phi)
            }
            UniversalFunction::PowerLaw(a) => a * x.powf(a - 1.0),
            UniversalFunction::ConstantOne => 0.0,
        }
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        match self {
            UniversalFunction::Exponential => (-x).exp(),
            UniversalFunction::PlanckDistribution => {
                let phi = x.exp_m1().recip();
                phi * (1.0 + phi) * (1.0 + 2.0 * phi)
            }
            UniversalFunction::PowerLaw(a) => a * (a - 1.0) * x.powf(a - 2.0),
            UniversalFunction::ConstantOne => 0.0,
        }
    }
}

/// A concrete instance of the generalized displacement law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiationLaw {
    name: String,
    n: f64,
    phi: UniversalFunction,
    k: f64,
    eta: f64,
    c: f64,
}

/// Kind of extremum the spectral density has in ν.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MaxKind {
    Maximum,
    Inflection,
    None,
}

/// Convergence verdict plus value of the energy integral ∫ X^{2−N}Φ dX.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyIntegral {
    pub verdict: DivergenceVerdict,
    pub value: Option<f64>,
}

/// Pass/fail/limit values for the heuristic admissibility criteria.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriteriaReport {
    pub law: String,
    /// Numerically evaluated limit of X^{−N}Φ(X) as X → 0⁺.
    pub red_limit: f64,
    pub red_pass: bool,
    /// X^{3−N}Φ(X) at the largest probe point.
    pub violet_witness: f64,
    pub violet_pass: bool,
    /// The strengthened decay exponent m = 3 − N + 1.
    pub violet_limit_exponent_m: f64,
    /// X^m Φ(X) at the largest probe point.
    pub strengthened_witness: f64,
    pub strengthened_violet_pass: bool,
    pub energy_integral: EnergyIntegral,
    pub max_kind: MaxKind,
    pub peak_x: Option<f64>,
}

/// Tolerances used when evaluating the criteria numerically.
#[derive(Debug, Clone, Copy)]
pub struct CriteriaTolerances {
    /// Tolerance for the numeric limit checks.
    pub limit: f64,
    /// Absolute tolerance for the energy integral.
    pub quadrature: f64,
}

impl Default for CriteriaTolerances {
    fn default() -> Self {
        CriteriaTolerances {
            limit: LIMIT_TOL,
            quadrature: QUADRATURE_TOL,
        }
    }
}

/// One point of a temperature-reduced spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumSample {
    pub nu_over_t: f64,
    pub u_over_t3: f64,
}

impl RadiationLaw {
    /// Builds a law, enforcing N < 3 and positive constants.
    pub fn new(
        name: impl Into<String>,
        n: f64,
        phi: UniversalFunction,
        k: f64,
        eta: f64,
        c: f64,
    ) -> Result<RadiationLaw, LawError> {
        if !n.is_finite() || n >= 3.0 {
            return Err(LawError::InvalidDisplacementExponent(n));
        }
        for (name, value) in [("k", k), ("eta", eta), ("c", c)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(LawError::NonPositiveConstant { name, value });
            }
        }
        Ok(RadiationLaw {
            name: name.into(),
            n,
            phi,
            k,
            eta,
            c,
        })
    }

    pub fn planck() -> RadiationLaw {
        RadiationLaw::new(
            "planck",
            -1.0,
            UniversalFunction::PlanckDistribution,
            PLANCK_K,
            PLANCK_ETA,
            SPEED_OF_LIGHT,
        )
        .expect("preset constants are valid")
    }

    pub fn wien_paschen() -> RadiationLaw {
        RadiationLaw::new(
            "wien-paschen",
            -1.0,
            UniversalFunction::Exponential,
            WIEN_PASCHEN_K,
            WIEN_PASCHEN_ETA,
            SPEED_OF_LIGHT,
        )
        .expect("preset constants are valid")
    }

    pub fn thiesen() -> RadiationLaw {
        RadiationLaw::new(
            "thiesen",
            -0.5,
            UniversalFunction::Exponential,
            THIESEN_K,
            THIESEN_ETA,
            SPEED_OF_LIGHT,
        )
        .expect("preset constants are valid")
    }

    pub fn rayleigh() -> RadiationLaw {
        RadiationLaw::new(
            "rayleigh",
            0.0,
            UniversalFunction::Exponential,
            RAYLEIGH_K,
            RAYLEIGH_ETA,
            SPEED_OF_LIGHT,
        )
        .expect("preset constants are valid")
    }

    pub fn rayleigh_jeans() -> RadiationLaw {
        RadiationLaw::new(
            "rayleigh-jeans",
            0.0,
            UniversalFunction::ConstantOne,
            PLANCK_K,
            PLANCK_ETA,
            SPEED_OF_LIGHT,
        )
        .expect("preset constants are valid")
    }

    pub fn from_name(name: &str) -> Option<RadiationLaw> {
        match name {
            "planck" => Some(RadiationLaw::planck()),
            "wien-paschen" => Some(RadiationLaw::wien_paschen()),
            "thiesen" => Some(RadiationLaw::thiesen()),
            "rayleigh" => Some(RadiationLaw::rayleigh()),
            "rayleigh-jeans" => Some(RadiationLaw::rayleigh_jeans()),
            _ => None,
        }
    }

    pub fn preset_names() -> [&'static str; 5] {
        ["planck", "wien-paschen", "thiesen", "rayleigh", "rayleigh-jeans"]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn displacement_exponent(&self) -> f64 {
        self.n
    }

    pub fn universal_function(&self) -> &UniversalFunction {
        &self.phi
    }

    pub fn boltzmann(&self) -> f64 {
        self.k
    }

    pub fn action(&self) -> f64 {
        self.eta
    }

    pub fn light_speed(&self) -> f64 {
        self.c
    }

    /// The similarity argument X = ην/(kT).
    pub fn similarity_argument(&self, nu: f64, t: f64) -> f64 {
        self.eta * nu / (self.k * t)
    }

    fn check_domain(nu: f64, t: f64) -> Result<(), LawError> {
        if !nu.is_finite() || nu <= 0.0 {
            return Err(LawError::Domain { name: "nu", value: nu });
        }
        if !t.is_finite() || t <= 0.0 {
            return Err(LawError::Domain { name: "T", value: t });
        }
        Ok(())
    }

    /// Monochromatic energy density U(ν, T).
    pub fn spectral_density(&self, nu: f64, t: f64) -> Result<f64, LawError> {
        Self::check_domain(nu, t)?;
        let x = self.similarity_argument(nu, t);
        let classical = 8.0 * std::f64::consts::PI * nu * nu * self.k * t / self.c.powi(3);
        Ok(classical * x.powf(-self.n) * self.phi.evaluate(x))
    }

    /// Analytic ∂U/∂ν and ∂²U/∂ν² at fixed T.
    pub fn spectral_density_derivatives(&self, nu: f64, t: f64) -> Result<(f64, f64), LawError> {
        Self::check_domain(nu, t)?;
        let alpha = 8.0 * std::f64::consts::PI * self.eta / self.c.powi(3);
        let beta = self.eta / (self.k * t);
        let x = beta * nu;
        let n = self.n;
        let prefactor = alpha / beta.powf(n + 1.0);
        let phi = self.phi.evaluate(x);
        let dphi = self.phi.derivative(x);
        let ddphi = self.phi.second_derivative(x);
        let first = prefactor * nu.powf(1.0 - n) * ((2.0 - n) * phi + x * dphi);
        let second = prefactor
            * nu.powf(-n)
            * ((1.0 - n) * (2.0 - n) * phi + 2.0 * (2.0 - n) * x * dphi + x * x * ddphi);
        Ok((first, second))
    }

    /// Location X_max of the spectral maximum; ν_max/T = X_max·k/η.
    pub fn find_peak(&self) -> Result<f64, LawError> {
        let n = self.n;
        match self.phi {
            UniversalFunction::Exponential if n < 2.0 => {
                // U' = 0 reduces to (2 − N) − X = 0 after the positive
                // factor Φ is stripped.
                let root = find_root(|x| (2.0 - n) - x, 1e-9, 2.0 * (2.0 - n) + 1.0, PEAK_ROOT_TOL)
                    .map_err(|_| LawError::NoMaximum)?;
                Ok(root)
            }
            UniversalFunction::PlanckDistribution => {
                // Stripping Φ > 0 leaves (2 − N) − X(1 + Φ(X)) = 0; for
                // N = −1 this is the X = 3(1 − exp(−X)) condition.
                let g = |x: f64| (2.0 - n) - x * (1.0 + self.phi.evaluate(x));
                find_root(g, 1e-9, 2.0 * (2.0 - n) + 10.0, PEAK_ROOT_TOL)
                    .map_err(|_| LawError::NoMaximum)
            }
            _ => Err(LawError::NoMaximum),
        }
    }

    /// ν_max/T for laws that have a maximum.
    pub fn displacement_constant(&self) -> Result<f64, LawError> {
        Ok(self.find_peak()? * self.k / self.eta)
    }

    /// Integrand of the energy integral, X^{2−N}·Φ(X).
    fn energy_integrand(&self) -> impl Fn(f64) -> f64 + '_ {
        let n = self.n;
        move |x: f64| x.powf(2.0 - n) * self.phi.evaluate(x)
    }

    /// Evaluates the red, violet, strengthened-violet, energy-integral
    /// and maximum criteria with default tolerances.
    pub fn evaluate_criteria(&self) -> CriteriaReport {
        self.evaluate_criteria_with(&CriteriaTolerances::default())
    }

    pub fn evaluate_criteria_with(&self, tol: &CriteriaTolerances) -> CriteriaReport {
        let n = self.n;

        // Red limit: X^{−N}Φ(X) on a decreasing geometric sequence; the
        // final point stands in for the limit.
        let red_sequence: Vec<f64> = (1..=8)
            .map(|i| {
                let x = 10f64.powi(-i);
                x.powf(-n) * self.phi.evaluate(x)
            })
            .collect();
        let red_limit = *red_sequence.last().expect("non-empty sequence");
        let red_pass = red_limit.is_finite() && (red_limit - 1.0).abs() <= tol.limit;

        // Violet limits on an increasing sequence; overflow counts as a
        // failure with the witness retained.
        let tail_witness = |exponent: f64| {
            let sequence: Vec<f64> = [10.0f64, 100.0, 1000.0]
                .iter()
                .map(|&x| x.powf(exponent) * self.phi.evaluate(x))
                .collect();
            *sequence.last().expect("non-empty sequence")
        };
        let violet_witness = tail_witness(3.0 - n);
        let violet_pass = violet_witness.is_finite() && violet_witness.abs() <= tol.limit;
        let strengthened_m = 3.0 - n + 1.0;
        let strengthened_witness = tail_witness(strengthened_m);
        let strengthened_violet_pass =
            strengthened_witness.is_finite() && strengthened_witness.abs() <= tol.limit;

        let integrand = self.energy_integrand();
        let verdict = detect_divergence(&integrand);
        let value = if verdict.is_divergent() {
            None
        } else {
            integrate_semiinfinite(&integrand, tol.quadrature)
                .ok()
                .map(|q| q.value)
        };

        let (max_kind, peak_x) = self.classify_extremum();

        CriteriaReport {
            law: self.name.clone(),
            red_limit,
            red_pass,
            violet_witness,
            violet_pass,
            violet_limit_exponent_m: strengthened_m,
            strengthened_witness,
            strengthened_violet_pass,
            energy_integral: EnergyIntegral { verdict, value },
            max_kind,
            peak_x,
        }
    }

    fn classify_extremum(&self) -> (MaxKind, Option<f64>) {
        match self.find_peak() {
            Ok(x) => {
                let nu_e = x * self.k / self.eta;
                let (_, second) = self
                    .spectral_density_derivatives(nu_e, 1.0)
                    .expect("peak lies in the domain");
                if second < 0.0 {
                    (MaxKind::Maximum, Some(x))
                } else {
                    (MaxKind::Inflection, Some(x))
                }
            }
            Err(_) => match self.phi {
                // A power law matching the stationarity condition makes U
                // constant in ν: stationary inflection everywhere.
                UniversalFunction::PowerLaw(a) if a == self.n - 2.0 => (MaxKind::Inflection, None),
                UniversalFunction::ConstantOne if self.n == 2.0 => (MaxKind::Inflection, None),
                _ => (MaxKind::None, None),
            },
        }
    }

    /// Total energy density E(T) = a·T⁴ with a from the energy integral.
    pub fn energy_density(&self, t: f64) -> Result<f64, LawError> {
        if !t.is_finite() || t <= 0.0 {
            return Err(LawError::Domain { name: "T", value: t });
        }
        Ok(self.radiation_constant()? * t.powi(4))
    }

    /// The constant a in E(T) = a·T⁴.
    pub fn radiation_constant(&self) -> Result<f64, LawError> {
        let integrand = self.energy_integrand();
        if detect_divergence(&integrand).is_divergent() {
            return Err(LawError::DivergentIntegral);
        }
        let integral = integrate_semiinfinite(&integrand, QUADRATURE_TOL)?;
        let k_over_c_eta = self.k / (self.c * self.eta);
        Ok(8.0 * std::f64::consts::PI * self.k * k_over_c_eta.powi(3) * integral.value)
    }

    /// Stefan's constant σ = c·a/4.
    pub fn stefan_constant(&self) -> Result<f64, LawError> {
        Ok(self.c * self.radiation_constant()? / 4.0)
    }

    /// Samples U/T³ over a strictly increasing positive ν/T grid.
    ///
    /// The reduced spectrum is computed at T = 1 and verified to be
    /// temperature-independent by re-evaluating at T = 300 and T = 6000.
    pub fn sample_spectrum(&self, nu_over_t_grid: &[f64]) -> Result<Vec<SpectrumSample>, LawError> {
        let increasing = nu_over_t_grid.windows(2).all(|w| w[0] < w[1]);
        if nu_over_t_grid.is_empty()
            || !increasing
            || !nu_over_t_grid.iter().all(|&x| x > 0.0 && x.is_finite())
        {
            return Err(LawError::GridNotIncreasing);
        }
        let mut samples = Vec::with_capacity(nu_over_t_grid.len());
        for &x in nu_over_t_grid {
            let reduced = self.spectral_density(x, 1.0)?;
            for t in [300.0, 6000.0] {
                let other = self.spectral_density(x * t, t)? / t.powi(3);
                let scale = reduced.abs().max(other.abs());
                // Subnormal tails carry no comparable precision.
                if scale > 1e-300 && (reduced - other).abs() > 1e-12 * scale {
                    return Err(LawError::ScaleInvarianceViolated { nu_over_t: x });
                }
            }
            if !reduced.is_finite() || reduced < 0.0 {
                return Err(LawError::Domain { name: "U", value: reduced });
            }
            samples.push(SpectrumSample {
                nu_over_t: x,
                u_over_t3: reduced,
            });
        }
        Ok(samples)
    }
}

/// Writes samples as CSV: `nu_over_T,U_over_T3` header, one row per
/// point, 17 significant digits, LF line endings.
pub fn write_spectrum_csv<W: io::Write>(samples: &[SpectrumSample], out: &mut W) -> io::Result<()> {
    out.write_all(b"nu_over_T,U_over_T3\n")?;
    for s in samples {
        writeln!(out, "{:.16e},{:.16e}", s.nu_over_t, s.u_over_t3)?;
    }
    Ok(())
}

/// Log-spaced grid of `n` points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2 && lo > 0.0 && hi > lo, "need n >= 2 and 0 < lo < hi");
    let (log_lo, log_hi) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (log_lo + (log_hi - log_lo) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}
