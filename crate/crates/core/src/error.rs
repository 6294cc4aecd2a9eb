use core::fmt;

use crate::rootsys::Family;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No finite root system of this family and rank.
    InvalidType { family: Family, rank: usize },
    /// Simple-reflection (node) index outside `0..rank`.
    InvalidIndex { index: usize, rank: usize },
    /// Weight length does not match the rank of the root system.
    RankMismatch { expected: usize, found: usize },
    OrbitTooLarge { cap: usize },
    EnumerationTooLarge { cap: usize },
    /// A weight in a sequence is not minuscule for the root system.
    NotMinuscule,
    /// A list of points is not a minuscule path of the requested type.
    InvalidPath(&'static str),
    /// The operation only applies to non-dominant paths.
    NotApplicable,
    /// An internal post-condition failed. Always indicates a bug.
    AlgorithmInvariantViolated(&'static str),
    SequenceNotPeriodic { ell: usize, len: usize },
    NotInvariant,
    TypeMismatch,
    InvalidTableau(&'static str),
    InvalidContent,
    SizeMismatch { shape: u32, content: u32 },
    OracleTooLarge { len: usize, cap: usize },
    NotInRootLattice,
    PolynomialUnavailable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { family, rank } => {
                write!(f, "no finite root system of type {}{}", family, rank)
            }
            Error::InvalidIndex { index, rank } => {
                write!(f, "node index {} out of range for rank {}", index, rank)
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "weight has {} coordinates, expected {}", found, expected)
            }
            Error::OrbitTooLarge { cap } => write!(f, "Weyl orbit exceeds cap of {} elements", cap),
            Error::EnumerationTooLarge { cap } => {
                write!(f, "enumeration exceeds cap of {} elements", cap)
            }
            Error::NotMinuscule => f.write_str("weight is not minuscule"),
            Error::InvalidPath(why) => write!(f, "invalid path: {}", why),
            Error::NotApplicable => f.write_str("operation requires a non-dominant path"),
            Error::AlgorithmInvariantViolated(what) => {
                write!(f, "internal invariant violated: {}", what)
            }
            Error::SequenceNotPeriodic { ell, len } => {
                write!(f, "sequence of length {} is not invariant under rotation by {}", len, ell)
            }
            Error::NotInvariant => f.write_str("element is not a highest weight element of weight 0"),
            Error::TypeMismatch => f.write_str("operation requires type A with fundamental weights"),
            Error::InvalidTableau(why) => write!(f, "invalid tableau: {}", why),
            Error::InvalidContent => f.write_str("word content is not a partition"),
            Error::SizeMismatch { shape, content } => {
                write!(f, "shape has size {} but content has size {}", shape, content)
            }
            Error::OracleTooLarge { len, cap } => {
                write!(f, "q-Kostant oracle limited to {} parts, got {}", cap, len)
            }
            Error::NotInRootLattice => f.write_str("total weight is not in the root lattice"),
            Error::PolynomialUnavailable => {
                f.write_str("no sieving polynomial available outside type A; supply one")
            }
        }
    }
}

impl core::error::Error for Error {}
