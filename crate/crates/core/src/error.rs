//! Error type shared across the library.

use std::fmt;

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Binary series operation on operands with different variable tables
    /// or truncation orders.
    IncompatibleSeries,
    /// exp/log argument with a nonzero constant term.
    NonNilpotentArgument,
    /// Variable name not present in the series' variable table.
    UnknownVariable(String),
    /// Intersection matrix is not square or not symmetric.
    BadForm(String),
    /// Intersection matrix has determinant other than +-1.
    NotUnimodular(Rat),
    /// (chi, sigma, Q) data contradict each other.
    InconsistentTopology(String),
    /// Basis index or coordinate vector does not fit the manifold's b_2.
    UnknownBasis(String),
    /// The Dirac index formula does not evaluate to an integer.
    NonIntegralIndex(Rat),
    /// Operation requires n_a <= 0.
    PositiveIndex(i64),
    /// Characteristic-class input of the wrong homogeneous degree.
    DegreeMismatch { expected: u32 },
    /// Class is not expressible in the mu(t), Om, wp basis.
    BasisMismatch(String),
    /// A required power sum q_r is missing from the input table.
    IncompleteInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IncompatibleSeries => {
                write!(f, "IncompatibleSeries: operands differ in variable table or truncation order")
            }
            Error::NonNilpotentArgument => {
                write!(f, "NonNilpotentArgument: series argument has a nonzero constant term")
            }
            Error::UnknownVariable(v) => write!(f, "UnknownVariable: {v}"),
            Error::BadForm(msg) => write!(f, "BadForm: {msg}"),
            Error::NotUnimodular(det) => write!(f, "NotUnimodular: det(Q) = {det}"),
            Error::InconsistentTopology(msg) => write!(f, "InconsistentTopology: {msg}"),
            Error::UnknownBasis(msg) => write!(f, "UnknownBasis: {msg}"),
            Error::NonIntegralIndex(v) => write!(f, "NonIntegralIndex: n_a = {v}"),
            Error::PositiveIndex(n) => write!(f, "PositiveIndex: n_a = {n} > 0"),
            Error::DegreeMismatch { expected } => {
                write!(f, "DegreeMismatch: input not homogeneous of degree {expected}")
            }
            Error::BasisMismatch(msg) => write!(f, "BasisMismatch: {msg}"),
            Error::IncompleteInput(msg) => write!(f, "IncompleteInput: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
