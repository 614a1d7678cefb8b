//! Exact rational scalars and coordinate vectors.
//!
//! All arithmetic is over arbitrary-precision integers ([`num_bigint::BigInt`])
//! and reduced rationals ([`num_rational::BigRational`]); sign queries are
//! exact, with no tolerance anywhere. Orthogonal bases are kept as primitive
//! integer vectors instead of unit vectors: every predicate downstream depends
//! only on signs of inner products, which positive rescaling preserves, so
//! square roots never enter the computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact scalar: arbitrary-precision rational, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("linearly dependent input (vector {index} lies in the span of its predecessors)")]
    LinearlyDependent { index: usize },
}

/// Coordinate vector over [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<Rational>,
}

/// Coordinate vector over arbitrary-precision integers.
///
/// Frame vectors and rays are additionally primitive (their coordinates have
/// gcd 1); that invariant is enforced by [`primitive`] and by the validating
/// constructors in [`crate::cone`], not by this type itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector {
    coords: Vec<BigInt>,
}

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Exact inner product. Panics on dimension mismatch; use [`dot`] for the
    /// checked variant.
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "add: dimension mismatch");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "sub: dimension mismatch");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        IntVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// i-th standard basis vector of the given dimension.
    pub fn std_basis(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut coords = vec![BigInt::zero(); dim];
        coords[i] = BigInt::one();
        IntVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    /// gcd of the absolute values of the coordinates (zero for the zero
    /// vector).
    pub fn content(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact integer inner product; the workhorse of every sign test.
    pub fn dot_int(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot_int: dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn dot_vec(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot_vec: dimension mismatch");
        self.coords
            .iter()
            .zip(other.coords())
            .map(|(a, b)| b * a)
            .sum()
    }

    pub fn negated(&self) -> IntVector {
        IntVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// True iff `self == -other`, without allocating.
    pub fn is_negation_of(&self, other: &IntVector) -> bool {
        self.dim() == other.dim()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| {
                a.sign() == -b.sign() && a.magnitude() == b.magnitude()
            })
    }

    pub fn to_vector(&self) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Max bit length over the coordinates; used for coefficient-growth
    /// reporting.
    pub fn max_bits(&self) -> u64 {
        self.coords.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl From<&IntVector> for Vector {
    fn from(v: &IntVector) -> Vector {
        v.to_vector()
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Display for IntVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact inner product of two rational vectors.
pub fn dot(u: &Vector, v: &Vector) -> Result<Rational, ArithError> {
    if u.dim() != v.dim() {
        return Err(ArithError::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(u.dot(v))
}

/// Orthogonal projection of `v` off `u`: returns `v − (⟨v,u⟩/⟨u,u⟩)u`,
/// which is exactly orthogonal to `u`.
pub fn project_off(v: &Vector, u: &Vector) -> Result<Vector, ArithError> {
    if u.dim() != v.dim() {
        return Err(ArithError::DimensionMismatch {
            left: v.dim(),
            right: u.dim(),
        });
    }
    if u.is_zero() {
        return Err(ArithError::ZeroVector);
    }
    let coeff = v.dot(u) / u.dot(u);
    Ok(v.sub(&u.scale(&coeff)))
}

/// Canonical integer representative of the ray through `v`: clears
/// denominators and divides by the gcd, preserving direction.
pub fn primitive(v: &Vector) -> Result<IntVector, ArithError> {
    if v.is_zero() {
        return Err(ArithError::ZeroVector);
    }
    let lcm = v
        .coords()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v
        .coords()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let iv = IntVector::new(ints);
    let g = iv.content();
    Ok(IntVector::new(
        iv.coords().iter().map(|c| c / &g).collect(),
    ))
}

/// Gram–Schmidt orthogonalization with primitive rescaling at each step.
///
/// The k-th output spans the same flag as the k-th input (span of the first k
/// outputs equals span of the first k inputs) and is a positive multiple of
/// the k-th input minus a combination of earlier inputs, so the lexicographic
/// cone generated by the basis is unchanged.
pub fn orthogonalize(basis: &[Vector]) -> Result<Vec<IntVector>, ArithError> {
    let mut out: Vec<IntVector> = Vec::with_capacity(basis.len());
    for (index, v) in basis.iter().enumerate() {
        if let Some(first) = out.first() {
            if first.dim() != v.dim() {
                return Err(ArithError::DimensionMismatch {
                    left: first.dim(),
                    right: v.dim(),
                });
            }
        }
        let mut w = v.clone();
        for prev in &out {
            let pv = prev.to_vector();
            let coeff = w.dot(&pv) / pv.dot(&pv);
            w = w.sub(&pv.scale(&coeff));
        }
        if w.is_zero() {
            return Err(ArithError::LinearlyDependent { index });
        }
        out.push(primitive(&w)?);
    }
    Ok(out)
}

/// Gram–Schmidt that skips dependent inputs instead of failing; returns the
/// orthogonal primitive basis of the span of `vectors`.
pub(crate) fn orthogonalize_spanning(vectors: &[Vector]) -> Vec<IntVector> {
    let mut out: Vec<IntVector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for prev in &out {
            let pv = prev.to_vector();
            let coeff = w.dot(&pv) / pv.dot(&pv);
            w = w.sub(&pv.scale(&coeff));
        }
        if !w.is_zero() {
            out.push(primitive(&w).expect("nonzero residual"));
        }
    }
    out
}
