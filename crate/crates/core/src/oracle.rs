//! Independent ground truth for validating the lattice algorithms.
//!
//! In ambient dimension 2 every element over the standard reference is an arc
//! of the half-open semicircle `Φ⁺ = [0°, 180°)`: empty, full, an initial arc
//! from the `e₁` ray, or a terminal arc ending at (but excluding) the `−e₁`
//! ray. Positively oriented cone frames produce the half-open variants
//! `[0°, β)` and `[α, 180°)`; negatively oriented frames produce the closed
//! initial arcs `[0°, β]` and open terminal arcs `(α, 180°)`. The
//! `circle_classification_is_exhaustive` test establishes this by brute
//! force before anything else trusts it.
//!
//! All angular comparisons are 2×2 determinant signs on integer vectors; no
//! angles and no floating point.

use crate::arith::IntVector;
use crate::cone::{negate, Frame, Ray};
use crate::gen::{random_ray_from, GenSpec};
use crate::lattice::{member, LatticeElement, LatticeError};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("circle oracle requires ambient dimension 2, got {0}")]
    WrongDimension(usize),
    #[error("circle oracle requires the standard reference")]
    WrongReference,
    #[error("invalid arc boundary: {0}")]
    InvalidBoundary(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Symbolic classification of a dimension-2 element.
///
/// `Init` arcs start at the `e₁` ray (always included, since it lies in
/// `Φ⁺`) and run counterclockwise to the boundary direction; `Tail` arcs run
/// from the boundary direction to the excluded `−e₁` ray. The `closed` flag
/// says whether the boundary ray itself belongs to the arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcClass {
    Empty,
    Full,
    Init { boundary: IntVector, closed: bool },
    Tail { boundary: IntVector, closed: bool },
}

/// cross(u, v) > 0 iff v is counterclockwise from u (within a half turn).
fn cross(u: &IntVector, v: &IntVector) -> BigInt {
    let (ux, uy) = (&u.coords()[0], &u.coords()[1]);
    let (vx, vy) = (&v.coords()[0], &v.coords()[1]);
    ux * vy - uy * vx
}

fn in_closed_upper_half(b: &IntVector) -> bool {
    let y = &b.coords()[1];
    y.is_positive() || (y.is_zero() && b.coords()[0].is_positive())
}

impl ArcClass {
    pub fn init(boundary: IntVector, closed: bool) -> Result<ArcClass, OracleError> {
        Self::check_boundary(&boundary, closed, true)?;
        Ok(ArcClass::Init { boundary, closed })
    }

    pub fn tail(boundary: IntVector, closed: bool) -> Result<ArcClass, OracleError> {
        Self::check_boundary(&boundary, !closed, false)?;
        Ok(ArcClass::Tail { boundary, closed })
    }

    fn check_boundary(b: &IntVector, degenerate_ok: bool, init: bool) -> Result<(), OracleError> {
        if b.dim() != 2 {
            return Err(OracleError::InvalidBoundary(format!(
                "expected dimension 2, got {}",
                b.dim()
            )));
        }
        if !b.is_primitive() {
            return Err(OracleError::InvalidBoundary(format!("{b} is not primitive")));
        }
        if !in_closed_upper_half(b) {
            return Err(OracleError::InvalidBoundary(format!(
                "{b} is not in the closed upper half-plane"
            )));
        }
        // the e₁ direction itself only makes sense for the closed initial
        // arc (the single point) and the open terminal arc (everything else)
        if b.coords()[1].is_zero() && !degenerate_ok {
            return Err(OracleError::InvalidBoundary(format!(
                "boundary {b} at angle 0 denotes {} — use the dedicated class",
                if init { "the empty arc" } else { "the full arc" }
            )));
        }
        Ok(())
    }
}

fn check_circle_element(elem: &LatticeElement) -> Result<(), OracleError> {
    if elem.ambient_dim() != 2 {
        return Err(OracleError::WrongDimension(elem.ambient_dim()));
    }
    if *elem.reference() != Frame::standard(2) {
        return Err(OracleError::WrongReference);
    }
    Ok(())
}

/// Exact classification of a dimension-2 element over the standard reference.
///
/// The element is `{x ∈ Φ⁺ : ⟨x, v₂⟩ < 0} ∪ ({ray(−v₁)} ∩ Φ⁺)`: an open
/// semicircle's trace plus one endpoint. Which half-open or closed arc that
/// is follows from the endpoint direction `−v₁` and the frame orientation.
pub fn classify(elem: &LatticeElement) -> Result<ArcClass, OracleError> {
    check_circle_element(elem)?;
    let std = Frame::standard(2);
    if *elem.cone() == std {
        return Ok(ArcClass::Full);
    }
    if *elem.cone() == negate(&std) {
        return Ok(ArcClass::Empty);
    }
    let v1 = &elem.cone().vectors()[0];
    let v2 = &elem.cone().vectors()[1];
    let orientation = cross(v1, v2);
    let p = v1.negated(); // the endpoint the cone includes
    let py = p.coords()[1].clone();
    let class = if orientation.is_positive() {
        // the cone meets the circle in [angle(p), angle(p)+180°)
        if py.is_positive() {
            ArcClass::Tail {
                boundary: p,
                closed: true,
            }
        } else if py.is_negative() {
            ArcClass::Init {
                boundary: p.negated(),
                closed: false,
            }
        } else if p.coords()[0].is_positive() {
            ArcClass::Full // unreachable: that frame is the standard one
        } else {
            ArcClass::Empty // unreachable: that frame is the negated one
        }
    } else {
        // the cone meets the circle in (angle(p)−180°, angle(p)]
        if py.is_positive() {
            ArcClass::Init {
                boundary: p,
                closed: true,
            }
        } else if py.is_negative() {
            ArcClass::Tail {
                boundary: p.negated(),
                closed: false,
            }
        } else if p.coords()[0].is_positive() {
            // the single ray {e₁}
            ArcClass::Init {
                boundary: p,
                closed: true,
            }
        } else {
            // everything strictly between 0° and 180°
            ArcClass::Tail {
                boundary: p.negated(),
                closed: false,
            }
        }
    };
    Ok(class)
}

/// The dimension-2 element denoted by an arc class (inverse of [`classify`]).
pub fn element_for_class(class: &ArcClass) -> Result<LatticeElement, OracleError> {
    let std = Frame::standard(2);
    let rot_ccw = |v: &IntVector| {
        IntVector::new(vec![-v.coords()[1].clone(), v.coords()[0].clone()])
    };
    let rot_cw = |v: &IntVector| {
        IntVector::new(vec![v.coords()[1].clone(), -v.coords()[0].clone()])
    };
    let cone = match class {
        ArcClass::Full => std.clone(),
        ArcClass::Empty => negate(&std),
        ArcClass::Init { boundary, closed } => {
            ArcClass::check_boundary(boundary, *closed, true)?;
            if *closed {
                let v1 = boundary.negated();
                let v2 = rot_cw(&v1);
                Frame::new(2, vec![v1, v2]).expect("orthogonal primitive pair")
            } else {
                let v1 = boundary.clone();
                let v2 = rot_ccw(&v1);
                Frame::new(2, vec![v1, v2]).expect("orthogonal primitive pair")
            }
        }
        ArcClass::Tail { boundary, closed } => {
            ArcClass::check_boundary(boundary, !*closed, false)?;
            if *closed {
                let v1 = boundary.negated();
                let v2 = rot_ccw(&v1);
                Frame::new(2, vec![v1, v2]).expect("orthogonal primitive pair")
            } else {
                let v1 = boundary.clone();
                let v2 = rot_cw(&v1);
                Frame::new(2, vec![v1, v2]).expect("orthogonal primitive pair")
            }
        }
    };
    Ok(LatticeElement::over_standard(cone)?)
}

/// Direct membership of a ray in the arc denoted by a class; used as the
/// ground-truth membership predicate.
pub fn arc_member(x: &Ray, class: &ArcClass) -> bool {
    let v = x.vector();
    if !in_closed_upper_half(v) {
        return false; // not in Φ⁺
    }
    match class {
        ArcClass::Empty => false,
        ArcClass::Full => true,
        ArcClass::Init { boundary, closed } => {
            let c = cross(v, boundary);
            c.is_positive() || (c.is_zero() && *closed && v == boundary)
        }
        ArcClass::Tail { boundary, closed } => {
            let c = cross(boundary, v);
            c.is_positive() || (c.is_zero() && *closed && v == boundary)
        }
    }
}

/// Containment of classified arcs, decided by determinant signs.
pub fn arc_leq(a: &ArcClass, b: &ArcClass) -> bool {
    match (a, b) {
        (ArcClass::Empty, _) => true,
        (_, ArcClass::Full) => true,
        (ArcClass::Full, _) => false,
        (_, ArcClass::Empty) => false,
        (
            ArcClass::Init {
                boundary: b1,
                closed: c1,
            },
            ArcClass::Init {
                boundary: b2,
                closed: c2,
            },
        ) => {
            let c = cross(b1, b2);
            if c.is_positive() {
                true
            } else if c.is_negative() {
                false
            } else {
                !(*c1 && !*c2)
            }
        }
        (
            ArcClass::Tail {
                boundary: b1,
                closed: c1,
            },
            ArcClass::Tail {
                boundary: b2,
                closed: c2,
            },
        ) => {
            let c = cross(b2, b1);
            if c.is_positive() {
                true
            } else if c.is_negative() {
                false
            } else {
                !(*c1 && !*c2)
            }
        }
        // a nonempty initial arc contains the 0° ray, which no terminal arc
        // does; a terminal arc reaches arbitrarily close to 180°, which no
        // initial arc does
        (ArcClass::Init { .. }, ArcClass::Tail { .. }) => false,
        (ArcClass::Tail { .. }, ArcClass::Init { .. }) => false,
    }
}

/// Least upper bound of two arcs within the classification.
pub fn arc_join(a: &ArcClass, b: &ArcClass) -> ArcClass {
    match (a, b) {
        (ArcClass::Empty, other) | (other, ArcClass::Empty) => other.clone(),
        (ArcClass::Full, _) | (_, ArcClass::Full) => ArcClass::Full,
        (ArcClass::Init { .. }, ArcClass::Init { .. }) => {
            if arc_leq(a, b) {
                b.clone()
            } else {
                a.clone()
            }
        }
        (ArcClass::Tail { .. }, ArcClass::Tail { .. }) => {
            if arc_leq(a, b) {
                b.clone()
            } else {
                a.clone()
            }
        }
        // no element of the classification contains both the 0° ray and a
        // neighborhood of 180° except the full arc
        (ArcClass::Init { .. }, ArcClass::Tail { .. })
        | (ArcClass::Tail { .. }, ArcClass::Init { .. }) => ArcClass::Full,
    }
}

/// Complement within `Φ⁺`: initial/terminal swap, open/closed flip.
pub fn arc_complement(a: &ArcClass) -> ArcClass {
    match a {
        ArcClass::Empty => ArcClass::Full,
        ArcClass::Full => ArcClass::Empty,
        ArcClass::Init { boundary, closed } => ArcClass::Tail {
            boundary: boundary.clone(),
            closed: !closed,
        },
        ArcClass::Tail { boundary, closed } => ArcClass::Init {
            boundary: boundary.clone(),
            closed: !closed,
        },
    }
}

/// Greatest lower bound, by duality.
pub fn arc_meet(a: &ArcClass, b: &ArcClass) -> ArcClass {
    arc_complement(&arc_join(&arc_complement(a), &arc_complement(b)))
}

/// Verdict of the probabilistic subset refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FalsifierVerdict {
    VerifiedUpToSampling,
    Counterexample(Ray),
}

/// Samples rays looking for a member of `x` that is not a member of `y`;
/// refutes `x ⊆ y` when it finds one.
pub fn subset_falsifier(
    x: &LatticeElement,
    y: &LatticeElement,
    n_samples: usize,
    seed: u64,
) -> Result<FalsifierVerdict, LatticeError> {
    if x.reference() != y.reference() {
        return Err(LatticeError::ReferenceMismatch);
    }
    let spec = GenSpec::new(seed, x.ambient_dim());
    let mut rng = spec.rng();
    for _ in 0..n_samples {
        let ray = random_ray_from(&mut rng, &spec)
            .expect("ray drawing fails only with exhausted retries");
        if member(&ray, x) && !member(&ray, y) {
            return Ok(FalsifierVerdict::Counterexample(ray));
        }
    }
    Ok(FalsifierVerdict::VerifiedUpToSampling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{complement, join, leq, meet};
    use std::collections::HashMap;

    fn iv(x: i64, y: i64) -> IntVector {
        IntVector::from_i64(&[x, y])
    }

    fn elem(rows: &[&[i64]]) -> LatticeElement {
        LatticeElement::over_standard(Frame::from_i64_rows(rows).unwrap()).unwrap()
    }

    /// All primitive integer vectors with coordinates bounded by `bound`.
    fn primitive_vectors(bound: i64) -> Vec<IntVector> {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = iv(x, y);
                if v.is_primitive() {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Every valid dimension-2 cone frame with coordinates bounded by
    /// `bound`: in the plane, the second vector of an orthogonal pair is
    /// forced up to sign.
    fn all_frames(bound: i64) -> Vec<Frame> {
        let mut out = Vec::new();
        for v1 in primitive_vectors(bound) {
            let rot = IntVector::new(vec![-v1.coords()[1].clone(), v1.coords()[0].clone()]);
            for v2 in [rot.clone(), rot.negated()] {
                out.push(Frame::new(2, vec![v1.clone(), v2]).unwrap());
            }
        }
        out
    }

    /// The spec'd verification of the classification itself: every valid
    /// frame's membership set matches its classified arc exactly, on a grid
    /// fine enough to separate all boundaries, and no two distinct classes
    /// produce the same membership set.
    #[test]
    fn circle_classification_is_exhaustive() {
        // grid bound 10 separates the boundaries of all bound-5 frames: the
        // mediant of two distinct bound-5 directions has coordinates ≤ 10
        let grid: Vec<Ray> = primitive_vectors(10)
            .into_iter()
            .map(|v| Ray::new(v).unwrap())
            .collect();
        let mut signature_to_class: HashMap<Vec<bool>, ArcClass> = HashMap::new();
        let mut frames_checked = 0;
        for frame in all_frames(5) {
            let e = LatticeElement::over_standard(frame.clone()).unwrap();
            let class = classify(&e).expect("classification is total");
            let mut signature = Vec::with_capacity(grid.len());
            for ray in &grid {
                let actual = member(ray, &e);
                let predicted = arc_member(ray, &class);
                assert_eq!(
                    actual, predicted,
                    "frame {frame} classified {class:?} disagrees at ray {ray}"
                );
                signature.push(actual);
            }
            // the boundary rays themselves are on the grid only when small;
            // probe them explicitly as the critical points
            for v in frame.vectors() {
                for probe in [v.clone(), v.negated()] {
                    let ray = Ray::new(probe).unwrap();
                    assert_eq!(member(&ray, &e), arc_member(&ray, &class));
                }
            }
            if let Some(previous) = signature_to_class.get(&signature) {
                assert_eq!(
                    previous, &class,
                    "two classes share one membership set on the grid"
                );
            } else {
                signature_to_class.insert(signature, class);
            }
            frames_checked += 1;
        }
        assert!(frames_checked > 100);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&elem(&[&[0, 1], &[-1, 0]])).unwrap(),
            ArcClass::Init {
                boundary: iv(0, 1),
                closed: false
            }
        );
        assert_eq!(
            classify(&elem(&[&[-1, -1], &[1, -1]])).unwrap(),
            ArcClass::Tail {
                boundary: iv(1, 1),
                closed: true
            }
        );
        assert_eq!(classify(&elem(&[&[-1, 0], &[0, -1]])).unwrap(), ArcClass::Full);
        assert_eq!(classify(&elem(&[&[1, 0], &[0, 1]])).unwrap(), ArcClass::Empty);
        // reflection-type frames: the closed initial arc and the open
        // terminal arc
        assert_eq!(
            classify(&elem(&[&[-1, 0], &[0, 1]])).unwrap(),
            ArcClass::Init {
                boundary: iv(1, 0),
                closed: true
            }
        );
        assert_eq!(
            classify(&elem(&[&[1, 0], &[0, -1]])).unwrap(),
            ArcClass::Tail {
                boundary: iv(1, 0),
                closed: false
            }
        );
    }

    #[test]
    fn element_for_class_inverts_classify() {
        for b in primitive_vectors(6) {
            if !in_closed_upper_half(&b) {
                continue;
            }
            let degenerate = b.coords()[1].is_zero();
            let mut classes = vec![
                ArcClass::Init {
                    boundary: b.clone(),
                    closed: true,
                },
                ArcClass::Tail {
                    boundary: b.clone(),
                    closed: false,
                },
            ];
            if !degenerate {
                classes.push(ArcClass::Init {
                    boundary: b.clone(),
                    closed: false,
                });
                classes.push(ArcClass::Tail {
                    boundary: b.clone(),
                    closed: true,
                });
            }
            for class in classes {
                let e = element_for_class(&class).unwrap();
                assert_eq!(classify(&e).unwrap(), class);
            }
        }
        assert_eq!(
            classify(&element_for_class(&ArcClass::Full).unwrap()).unwrap(),
            ArcClass::Full
        );
        assert_eq!(
            classify(&element_for_class(&ArcClass::Empty).unwrap()).unwrap(),
            ArcClass::Empty
        );
    }

    #[test]
    fn arc_op_examples() {
        let init90 = ArcClass::Init {
            boundary: iv(0, 1),
            closed: false,
        };
        let init45 = ArcClass::Init {
            boundary: iv(1, 1),
            closed: false,
        };
        let tail45 = ArcClass::Tail {
            boundary: iv(1, 1),
            closed: true,
        };
        assert_eq!(arc_join(&init90, &tail45), ArcClass::Full);
        assert_eq!(arc_join(&init45, &init90), init90);
        assert_eq!(arc_complement(&ArcClass::Full), ArcClass::Empty);
        assert_eq!(
            arc_complement(&init90),
            ArcClass::Tail {
                boundary: iv(0, 1),
                closed: true
            }
        );
        assert_eq!(arc_complement(&arc_complement(&tail45)), tail45);
        assert_eq!(arc_meet(&init90, &tail45), ArcClass::Empty);
        assert!(arc_leq(&init45, &init90));
        assert!(!arc_leq(&init90, &init45));
        // open vs closed at the same boundary
        let init45_closed = ArcClass::Init {
            boundary: iv(1, 1),
            closed: true,
        };
        assert!(arc_leq(&init45, &init45_closed));
        assert!(!arc_leq(&init45_closed, &init45));
    }

    #[test]
    fn arc_ops_commute_with_lattice_ops_on_random_pairs() {
        for seed in 0..300u64 {
            let spec_a = GenSpec::new(seed * 2 + 1, 2);
            let spec_b = GenSpec::new(seed * 2 + 2, 2);
            let x = crate::gen::random_element(&spec_a).unwrap();
            let y = crate::gen::random_element(&spec_b).unwrap();
            let (cx, cy) = (classify(&x).unwrap(), classify(&y).unwrap());
            let joined = join(&x, &y).unwrap();
            assert_eq!(classify(&joined).unwrap(), arc_join(&cx, &cy));
            let met = meet(&x, &y).unwrap();
            assert_eq!(classify(&met).unwrap(), arc_meet(&cx, &cy));
            assert_eq!(leq(&x, &y).unwrap(), arc_leq(&cx, &cy));
            assert_eq!(classify(&complement(&x)).unwrap(), arc_complement(&cx));
        }
    }

    #[test]
    fn falsifier_finds_missing_arc() {
        let wide = elem(&[&[0, 1], &[-1, 0]]); // [0°, 90°)
        let narrow = elem(&[&[1, 1], &[-1, 1]]); // [0°, 45°)
        match subset_falsifier(&wide, &narrow, 10_000, 5).unwrap() {
            FalsifierVerdict::Counterexample(ray) => {
                assert!(member(&ray, &wide));
                assert!(!member(&ray, &narrow));
            }
            FalsifierVerdict::VerifiedUpToSampling => panic!("must find a counterexample"),
        }
        // the reverse direction really is a subset
        assert_eq!(
            subset_falsifier(&narrow, &wide, 10_000, 5).unwrap(),
            FalsifierVerdict::VerifiedUpToSampling
        );
        assert_eq!(
            subset_falsifier(&wide, &wide, 1_000, 5).unwrap(),
            FalsifierVerdict::VerifiedUpToSampling
        );
    }

    #[test]
    fn falsifier_never_contradicts_leq() {
        for seed in 0..50u64 {
            let x = crate::gen::random_element(&GenSpec::new(seed * 3 + 1, 3)).unwrap();
            let y = crate::gen::random_element(&GenSpec::new(seed * 3 + 2, 3)).unwrap();
            let j = join(&x, &y).unwrap();
            assert_eq!(
                subset_falsifier(&x, &j, 2_000, seed).unwrap(),
                FalsifierVerdict::VerifiedUpToSampling
            );
            if leq(&x, &y).unwrap() {
                assert_eq!(
                    subset_falsifier(&x, &y, 10_000, seed).unwrap(),
                    FalsifierVerdict::VerifiedUpToSampling
                );
            }
        }
    }

    #[test]
    fn arc_join_properties() {
        let family: Vec<ArcClass> = {
            let mut f = vec![ArcClass::Empty, ArcClass::Full];
            for b in primitive_vectors(3) {
                if !in_closed_upper_half(&b) {
                    continue;
                }
                let degenerate = b.coords()[1].is_zero();
                f.push(ArcClass::Init {
                    boundary: b.clone(),
                    closed: true,
                });
                f.push(ArcClass::Tail {
                    boundary: b.clone(),
                    closed: false,
                });
                if !degenerate {
                    f.push(ArcClass::Init {
                        boundary: b.clone(),
                        closed: false,
                    });
                    f.push(ArcClass::Tail {
                        boundary: b.clone(),
                        closed: true,
                    });
                }
            }
            f
        };
        for a in &family {
            assert_eq!(&arc_join(a, a), a, "idempotent");
            assert_eq!(arc_complement(&arc_complement(a)), *a, "involution");
            for b in &family {
                assert_eq!(arc_join(a, b), arc_join(b, a), "commutative");
                for c in family.iter().step_by(7) {
                    assert_eq!(
                        arc_join(a, &arc_join(b, c)),
                        arc_join(&arc_join(a, b), c),
                        "associative"
                    );
                }
            }
        }
    }
}
