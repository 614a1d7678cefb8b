//! Seeded deterministic generators of rays, frames, and lattice elements.
//!
//! The stream is ChaCha8 keyed by the 64-bit seed, and coordinates are drawn
//! by reducing `next_u64` modulo the coefficient range, so outputs depend on
//! nothing but the documented cipher stream. Identical specs reproduce
//! identical values on every platform.

use crate::arith::{orthogonalize, IntVector, Vector};
use crate::cone::{ConeError, Frame, Ray};
use crate::lattice::{LatticeElement, LatticeError};
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

const MAX_RETRIES: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("exhausted {0} retries drawing a nonzero/independent vector")]
    RetriesExhausted(usize),
    #[error("signs and permutation must both have length {expected}")]
    LengthMismatch { expected: usize },
    #[error("not a permutation: index {0} repeated or out of range")]
    MalformedPermutation(usize),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Parameters of a deterministic draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub seed: u64,
    pub ambient_dim: usize,
    pub coefficient_bound: u32,
}

impl GenSpec {
    pub fn new(seed: u64, ambient_dim: usize) -> GenSpec {
        GenSpec {
            seed,
            ambient_dim,
            coefficient_bound: 20,
        }
    }

    pub fn with_bound(seed: u64, ambient_dim: usize, coefficient_bound: u32) -> GenSpec {
        assert!(ambient_dim >= 1);
        assert!(coefficient_bound >= 1);
        GenSpec {
            seed,
            ambient_dim,
            coefficient_bound,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// One coordinate, uniform-ish in `[-bound, bound]`; the slight modulo bias
/// is irrelevant for test generation and keeps the stream portable.
fn draw_coord(rng: &mut ChaCha8Rng, bound: u32) -> i64 {
    let width = 2 * bound as u64 + 1;
    (rng.next_u64() % width) as i64 - bound as i64
}

fn draw_int_vector(rng: &mut ChaCha8Rng, spec: &GenSpec) -> IntVector {
    IntVector::new(
        (0..spec.ambient_dim)
            .map(|_| BigInt::from(draw_coord(rng, spec.coefficient_bound)))
            .collect(),
    )
}

/// Deterministic primitive nonzero ray with coordinates bounded by the spec.
pub fn random_ray(spec: &GenSpec) -> Result<Ray, GenError> {
    let mut rng = spec.rng();
    random_ray_from(&mut rng, spec)
}

/// Ray drawn from an existing stream; used to draw many rays from one seed.
pub fn random_ray_from(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Ray, GenError> {
    for _ in 0..MAX_RETRIES {
        let v = draw_int_vector(rng, spec);
        if !v.is_zero() {
            return Ok(Ray::new(v)?);
        }
    }
    Err(GenError::RetriesExhausted(MAX_RETRIES))
}

/// Deterministic full-rank frame: draw integer vectors until they form a
/// basis, then orthogonalize to the canonical primitive frame.
pub fn random_frame(spec: &GenSpec) -> Result<Frame, GenError> {
    let mut rng = spec.rng();
    random_frame_from(&mut rng, spec)
}

pub fn random_frame_from(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Frame, GenError> {
    let mut basis: Vec<Vector> = Vec::with_capacity(spec.ambient_dim);
    let mut attempts = 0;
    while basis.len() < spec.ambient_dim {
        if attempts >= MAX_RETRIES {
            return Err(GenError::RetriesExhausted(MAX_RETRIES));
        }
        attempts += 1;
        let candidate = draw_int_vector(rng, spec).to_vector();
        basis.push(candidate);
        if orthogonalize(&basis).is_err() {
            basis.pop();
        }
    }
    let vectors = orthogonalize(&basis).expect("basis is independent by construction");
    Ok(Frame::new(spec.ambient_dim, vectors)?)
}

/// Deterministic lattice element over the standard reference.
pub fn random_element(spec: &GenSpec) -> Result<LatticeElement, GenError> {
    let frame = random_frame(spec)?;
    Ok(LatticeElement::over_standard(frame)?)
}

pub fn random_element_from(
    rng: &mut ChaCha8Rng,
    spec: &GenSpec,
) -> Result<LatticeElement, GenError> {
    let frame = random_frame_from(rng, spec)?;
    Ok(LatticeElement::over_standard(frame)?)
}

/// Structured element whose cone frame is `signs[i] · e_{perm[i]}`; `perm` is
/// a zero-based permutation of `0..d`.
pub fn signed_permutation_element(
    perm: &[usize],
    signs: &[i8],
) -> Result<LatticeElement, GenError> {
    let d = perm.len();
    if signs.len() != d {
        return Err(GenError::LengthMismatch { expected: d });
    }
    let mut seen = vec![false; d];
    for &p in perm {
        if p >= d || seen[p] {
            return Err(GenError::MalformedPermutation(p));
        }
        seen[p] = true;
    }
    let vectors: Vec<IntVector> = perm
        .iter()
        .zip(signs)
        .map(|(&p, &s)| {
            let e = IntVector::std_basis(d, p);
            if s < 0 {
                e.negated()
            } else {
                e
            }
        })
        .collect();
    let frame = Frame::new(d, vectors)?;
    Ok(LatticeElement::over_standard(frame)?)
}
