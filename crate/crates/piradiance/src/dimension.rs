//! Fundamental dimensions, quantity dimensions as rational exponent
//! vectors, and the dimensional matrix built from them.
//!
//! A [`DimensionBasis`] fixes an ordered set of fundamental-dimension
//! labels (rows of the dimensional matrix). A [`Dimension`] is one
//! exponent per basis entry. A [`QuantitySet`] is an ordered list of named
//! quantities over one basis (columns of the matrix). Everything is
//! immutable after construction and all operations are pure.

use std::fmt;

use thiserror::Error;

use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimensionError {
    #[error("unknown dimension label `{0}`")]
    UnknownLabel(String),
    #[error("malformed exponent in factor `{0}`")]
    MalformedExponent(String),
    #[error("dimension label `{0}` appears more than once in one expression")]
    DuplicateLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateBasisLabel(String),
    #[error("duplicate quantity name `{0}`")]
    DuplicateQuantityName(String),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("a quantity set needs at least one quantity")]
    EmptyQuantitySet,
}

/// Ordered labels of the fundamental dimensions; fixes the row order of
/// the dimensional matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionBasis {
    names: Vec<String>,
}

impl DimensionBasis {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<DimensionBasis, DimensionError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(DimensionError::DuplicateBasisLabel(n.clone()));
            }
        }
        Ok(DimensionBasis { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }
}

/// Exponent vector of a quantity over a basis, one rational per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimension {
    exponents: Vec<Rational>,
}

impl Dimension {
    pub fn new(exponents: Vec<Rational>) -> Dimension {
        Dimension { exponents }
    }

    pub fn dimensionless(basis_size: usize) -> Dimension {
        Dimension {
            exponents: vec![Rational::ZERO; basis_size],
        }
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_dimensionless(&self) -> bool {
        self.exponents.iter().all(Rational::is_zero)
    }

    /// Product of two dimensions: exponents add componentwise.
    pub fn multiply(&self, other: &Dimension) -> Result<Dimension, DimensionError> {
        self.combine(other, |a, b| a + b)
    }

    /// Quotient of two dimensions: exponents subtract componentwise.
    pub fn divide(&self, other: &Dimension) -> Result<Dimension, DimensionError> {
        self.combine(other, |a, b| a - b)
    }

    pub fn pow(&self, exponent: Rational) -> Dimension {
        Dimension {
            exponents: self.exponents.iter().map(|&e| e * exponent).collect(),
        }
    }

    fn combine(
        &self,
        other: &Dimension,
        op: impl Fn(Rational, Rational) -> Rational,
    ) -> Result<Dimension, DimensionError> {
        if self.len() != other.len() {
            return Err(DimensionError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(Dimension {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    /// Renders in basis order as `Label^p/q` factors separated by spaces,
    /// omitting zero exponents and the `^1` on unit exponents. The result
    /// re-parses to an equal dimension; dimensionless renders as "".
    pub fn render(&self, basis: &DimensionBasis) -> String {
        assert_eq!(self.len(), basis.len(), "dimension/basis size mismatch");
        let mut parts = Vec::new();
        for (label, &exp) in basis.names().iter().zip(&self.exponents) {
            if exp.is_zero() {
                continue;
            }
            if exp.is_one() {
                parts.push(label.clone());
            } else {
                parts.push(format!("{label}^{exp}"));
            }
        }
        parts.join(" ")
    }
}

/// Parses a whitespace-separated product of `Label^p/q` factors over the
/// given basis. An omitted exponent means 1; unmentioned basis entries
/// get 0; the empty string is dimensionless.
pub fn parse_dimension(expr: &str, basis: &DimensionBasis) -> Result<Dimension, DimensionError> {
    let mut exponents = vec![Rational::ZERO; basis.len()];
    let mut seen = vec![false; basis.len()];
    for factor in expr.split_whitespace() {
        let (label, exp) = match factor.split_once('^') {
            Some((label, exp_s)) => {
                let exp: Rational = exp_s
                    .parse()
                    .map_err(|_| DimensionError::MalformedExponent(factor.to_string()))?;
                (label, exp)
            }
            None => (factor, Rational::ONE),
        };
        let idx = basis
            .index_of(label)
            .ok_or_else(|| DimensionError::UnknownLabel(label.to_string()))?;
        if seen[idx] {
            return Err(DimensionError::DuplicateLabel(label.to_string()));
        }
        seen[idx] = true;
        exponents[idx] = exp;
    }
    Ok(Dimension::new(exponents))
}

/// A named quantity with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantity {
    name: String,
    symbol: String,
    dimension: Dimension,
}

impl Quantity {
    pub fn new<S: Into<String>>(name: S, symbol: S, dimension: Dimension) -> Quantity {
        Quantity {
            name: name.into(),
            symbol: symbol.into(),
            dimension,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn dimension(&self) -> &Dimension {
        &self.dimension
    }
}

/// Ordered quantities over one basis; fixes the column order of the
/// dimensional matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantitySet {
    basis: DimensionBasis,
    quantities: Vec<Quantity>,
}

impl QuantitySet {
    pub fn new(basis: DimensionBasis, quantities: Vec<Quantity>) -> Result<QuantitySet, DimensionError> {
        if quantities.is_empty() {
            return Err(DimensionError::EmptyQuantitySet);
        }
        for q in &quantities {
            if q.dimension.len() != basis.len() {
                return Err(DimensionError::LengthMismatch {
                    expected: basis.len(),
                    got: q.dimension.len(),
                });
            }
        }
        for (i, q) in quantities.iter().enumerate() {
            if quantities[..i].iter().any(|p| p.name == q.name) {
                return Err(DimensionError::DuplicateQuantityName(q.name.clone()));
            }
        }
        Ok(QuantitySet { basis, quantities })
    }

    pub fn basis(&self) -> &DimensionBasis {
        &self.basis
    }

    pub fn quantities(&self) -> &[Quantity] {
        &self.quantities
    }

    /// Number of quantities (columns of the dimensional matrix).
    pub fn len(&self) -> usize {
        self.quantities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quantities.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.quantities.iter().position(|q| q.name == name)
    }

    /// The dimensional matrix: entry (n, j) is the exponent of basis
    /// dimension n in quantity j.
    pub fn dimensional_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.basis.len(), self.quantities.len());
        for (j, q) in self.quantities.iter().enumerate() {
            for (n, &e) in q.dimension.exponents().iter().enumerate() {
                m.set(n, j, e);
            }
        }
        m
    }

    /// Dimension of the product of all quantities raised to `powers`.
    ///
    /// An all-zero result means the product is non-dimensional.
    pub fn dimension_of_product(&self, powers: &[Rational]) -> Result<Dimension, DimensionError> {
        if powers.len() != self.quantities.len() {
            return Err(DimensionError::LengthMismatch {
                expected: self.quantities.len(),
                got: powers.len(),
            });
        }
        let mut exponents = vec![Rational::ZERO; self.basis.len()];
        for (q, &p) in self.quantities.iter().zip(powers) {
            for (n, &e) in q.dimension.exponents().iter().enumerate() {
                exponents[n] += e * p;
            }
        }
        Ok(Dimension::new(exponents))
    }
}

impl fmt::Display for QuantitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.quantities.iter().map(|q| q.symbol()).collect();
        write!(f, "({})", names.join(", "))
    }
}
