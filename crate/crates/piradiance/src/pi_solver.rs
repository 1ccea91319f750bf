//! Buckingham π-theorem machinery: rank of the dimensional matrix,
//! pinned solutions of the homogeneous exponent system, and the exact
//! nullspace basis.
//!
//! For a quantity set with dimensional matrix `G` (r rows, κ columns),
//! every non-dimensional product corresponds to a power vector `x` with
//! `G·x = 0`. There are `p = κ − rank(G)` independent invariants. A
//! [`PinSpec`] fixes `p` chosen exponents per invariant, which turns the
//! underdetermined homogeneous system into a uniquely solvable one; the
//! pin choice is validated eagerly before any solving.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dimension::QuantitySet;
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("invariant {invariant} has {got} pins, expected {expected}")]
    PinCountMismatch {
        invariant: usize,
        expected: usize,
        got: usize,
    },
    #[error("pin choice for invariant {invariant} leaves a singular subsystem")]
    SingularSubsystem { invariant: usize },
    #[error("invariant index {got} out of range: system has {num_invariants} invariants")]
    InvariantIndexOutOfRange { got: usize, num_invariants: usize },
    #[error("quantity index {got} out of range for a set of {len} quantities")]
    QuantityIndexOutOfRange { got: usize, len: usize },
    #[error("pinned invariants are linearly dependent")]
    DependentInvariants,
    #[error("scaling check requires exactly one invariant, system has {num_invariants}")]
    NotSingleInvariant { num_invariants: usize },
    #[error("pin value must be non-zero")]
    ZeroPinValue,
}

/// Chosen exponent values that close the underdetermined system.
///
/// Keys are `(quantity index j, invariant index i)`, both zero-based; a
/// well-formed spec carries exactly `p = κ − rank` pins for each of the
/// `p` invariants.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PinSpec {
    pins: BTreeMap<(usize, usize), Rational>,
}

impl PinSpec {
    pub fn new() -> PinSpec {
        PinSpec::default()
    }

    /// Adds a pin `x_{quantity, invariant} = value`.
    pub fn pin(mut self, invariant: usize, quantity: usize, value: Rational) -> PinSpec {
        self.pins.insert((quantity, invariant), value);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.pins.is_empty()
    }

    /// Pins grouped per invariant index, quantity-ordered within each.
    fn by_invariant(&self) -> BTreeMap<usize, Vec<(usize, Rational)>> {
        let mut grouped: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&(quantity, invariant), &value) in &self.pins {
            grouped.entry(invariant).or_default().push((quantity, value));
        }
        grouped
    }
}

/// A non-dimensional product of the set's quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiInvariant {
    powers: Vec<Rational>,
    formula: String,
}

impl PiInvariant {
    pub fn powers(&self) -> &[Rational] {
        &self.powers
    }

    pub fn formula(&self) -> &str {
        &self.formula
    }
}

/// The full solution: rank, invariant count, and the invariants.
#[derive(Debug, Clone)]
pub struct PiSystem {
    quantity_set: QuantitySet,
    rank: usize,
    invariants: Vec<PiInvariant>,
}

impl PiSystem {
    pub fn quantity_set(&self) -> &QuantitySet {
        &self.quantity_set
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_invariants(&self) -> usize {
        self.invariants.len()
    }

    pub fn invariants(&self) -> &[PiInvariant] {
        &self.invariants
    }
}

/// Result of checking that rescaling the single free pin only rescales
/// the invariant's exponent vector.
#[derive(Debug, Clone)]
pub struct ScalingCheck {
    pub alpha: Rational,
    pub base: PiInvariant,
    pub scaled: PiInvariant,
    pub holds: bool,
}

/// Rank of a dimensional matrix via exact rational elimination.
pub fn rank(matrix: &Matrix) -> usize {
    matrix.rank()
}

/// Exact basis of the solution space of `G·x = 0`.
///
/// Returns `κ − rank` vectors, one per free (non-pivot) column in
/// ascending column order; empty when κ equals the rank. Every vector is
/// non-dimensional by construction.
pub fn nullspace_basis(qs: &QuantitySet) -> Vec<Vec<Rational>> {
    let basis = qs.dimensional_matrix().nullspace_basis();
    for v in &basis {
        debug_assert!(qs
            .dimension_of_product(v)
            .expect("basis vector length matches set")
            .is_dimensionless());
    }
    basis
}

/// Solves the pinned system exactly, returning every invariant's full
/// power vector with pinned and solved entries merged.
pub fn solve_pinned(qs: &QuantitySet, pins: &PinSpec) -> Result<PiSystem, SolveError> {
    let matrix = qs.dimensional_matrix();
    let kappa = qs.len();
    let r = matrix.rank();
    let p = kappa - r;

    let grouped = pins.by_invariant();
    for (&invariant, group) in &grouped {
        if invariant >= p {
            return Err(SolveError::InvariantIndexOutOfRange {
                got: invariant,
                num_invariants: p,
            });
        }
        for &(quantity, _) in group {
            if quantity >= kappa {
                return Err(SolveError::QuantityIndexOutOfRange {
                    got: quantity,
                    len: kappa,
                });
            }
        }
    }
    for invariant in 0..p {
        let got = grouped.get(&invariant).map_or(0, Vec::len);
        if got != p {
            return Err(SolveError::PinCountMismatch {
                invariant,
                expected: p,
                got,
            });
        }
    }

    // Validate every pin choice before solving anything.
    let mut subsystems = Vec::with_capacity(p);
    for invariant in 0..p {
        let group = &grouped[&invariant];
        let pinned: Vec<usize> = group.iter().map(|&(q, _)| q).collect();
        let unpinned: Vec<usize> = (0..kappa).filter(|q| !pinned.contains(q)).collect();
        let sub = Matrix::from_rows(
            (0..matrix.rows())
                .map(|row| unpinned.iter().map(|&c| matrix.get(row, c)).collect())
                .collect(),
        );
        if sub.rank() != unpinned.len() {
            return Err(SolveError::SingularSubsystem { invariant });
        }
        subsystems.push((unpinned, sub));
    }

    let mut invariants = Vec::with_capacity(p);
    for invariant in 0..p {
        let group = &grouped[&invariant];
        let (unpinned, sub) = &subsystems[invariant];
        // Move the pinned columns to the right-hand side.
        let mut rhs = vec![Rational::ZERO; matrix.rows()];
        for &(quantity, value) in group {
            for (row, r) in rhs.iter_mut().enumerate() {
                *r -= matrix.get(row, quantity) * value;
            }
        }
        let solved = sub
            .solve_unique(&rhs)
            .ok_or(SolveError::SingularSubsystem { invariant })?;
        let mut powers = vec![Rational::ZERO; kappa];
        for (&col, &value) in unpinned.iter().zip(&solved) {
            powers[col] = value;
        }
        for &(quantity, value) in group {
            powers[quantity] = value;
        }
        assert!(
            qs.dimension_of_product(&powers)
                .expect("power vector length matches set")
                .is_dimensionless(),
            "solver produced a dimensional product"
        );
        let formula = render_formula(qs, &powers);
        invariants.push(PiInvariant { powers, formula });
    }

    if p > 0 {
        let stacked = Matrix::from_rows(invariants.iter().map(|i| i.powers.clone()).collect());
        if stacked.rank() != p {
            return Err(SolveError::DependentInvariants);
        }
    }

    Ok(PiSystem {
        quantity_set: qs.clone(),
        rank: r,
        invariants,
    })
}

/// Confirms that pinning the first quantity's exponent to `alpha` yields
/// exactly `alpha` times the exponent vector obtained from a unit pin.
pub fn verify_scaling_freedom(qs: &QuantitySet, alpha: Rational) -> Result<ScalingCheck, SolveError> {
    if alpha.is_zero() {
        return Err(SolveError::ZeroPinValue);
    }
    let matrix = qs.dimensional_matrix();
    let p = qs.len() - matrix.rank();
    if p != 1 {
        return Err(SolveError::NotSingleInvariant { num_invariants: p });
    }
    let base = solve_pinned(qs, &PinSpec::new().pin(0, 0, Rational::ONE))?;
    let scaled = solve_pinned(qs, &PinSpec::new().pin(0, 0, alpha))?;
    let base_inv = base.invariants[0].clone();
    let scaled_inv = scaled.invariants[0].clone();
    let holds = scaled_inv
        .powers
        .iter()
        .zip(&base_inv.powers)
        .all(|(&s, &b)| s == b * alpha);
    Ok(ScalingCheck {
        alpha,
        base: base_inv,
        scaled: scaled_inv,
        holds,
    })
}

/// Renders a power vector as a product formula: positive exponents form
/// the numerator, negative ones the denominator, both in quantity order.
pub fn render_formula(qs: &QuantitySet, powers: &[Rational]) -> String {
    let factor = |symbol: &str, exp: Rational| {
        if exp.is_one() {
            symbol.to_string()
        } else {
            format!("{symbol}^{exp}")
        }
    };
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (q, &p) in qs.quantities().iter().zip(powers) {
        if p.is_zero() {
            continue;
        }
        if p.is_negative() {
            denominator.push(factor(q.symbol(), p.abs()));
        } else {
            numerator.push(factor(q.symbol(), p));
        }
    }
    let num = if numerator.is_empty() {
        "1".to_string()
    } else {
        numerator.join(" ")
    };
    if denominator.is_empty() {
        num
    } else {
        format!("{num} / ({})", denominator.join(" "))
    }
}
