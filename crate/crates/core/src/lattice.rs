//! The complete lattice of cone-induced sphere subsets.
//!
//! An element pairs a reference cone `E` with an inversion cone `D` over the
//! same span; it denotes the set of rays lying in both cones. With the
//! standard reference, these are exactly the subsets `D ∩ Φ⁺` of the positive
//! hemisphere, ordered by inclusion. Joins are computed recursively: nested
//! closures extend a sublattice join inside a boundary hyperplane, and all
//! remaining configurations reduce to the equator sublattice one dimension
//! down.

use crate::arith::{primitive, Vector};
use crate::cone::{
    cone_contains, halfspace_pair_contains, negate, restrict, ConeError, Frame, Ray, Subspace,
};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("elements have different references")]
    ReferenceMismatch,
    #[error("reference and cone frames span different subspaces")]
    SpanMismatch,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// A lattice element: reference cone (positive side) and inversion cone over
/// the same span. Equality of elements is equality of cone frames, which is
/// sound because the cone determining a given element is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeElement {
    reference: Frame,
    cone: Frame,
}

impl LatticeElement {
    pub fn new(reference: Frame, cone: Frame) -> Result<LatticeElement, LatticeError> {
        if reference.ambient_dim() != cone.ambient_dim()
            || reference.rank() != cone.rank()
        {
            return Err(LatticeError::SpanMismatch);
        }
        let span = reference.span();
        if !cone
            .vectors()
            .iter()
            .all(|v| span.contains(&v.to_vector()))
        {
            return Err(LatticeError::SpanMismatch);
        }
        Ok(LatticeElement { reference, cone })
    }

    /// Element over the standard reference of the given dimension.
    pub fn over_standard(cone: Frame) -> Result<LatticeElement, LatticeError> {
        let reference = Frame::standard(cone.ambient_dim());
        LatticeElement::new(reference, cone)
    }

    fn assemble(reference: Frame, cone: Frame) -> LatticeElement {
        debug_assert_eq!(reference.ambient_dim(), cone.ambient_dim());
        debug_assert_eq!(reference.rank(), cone.rank());
        LatticeElement { reference, cone }
    }

    pub fn reference(&self) -> &Frame {
        &self.reference
    }

    pub fn cone(&self) -> &Frame {
        &self.cone
    }

    pub fn ambient_dim(&self) -> usize {
        self.reference.ambient_dim()
    }

    /// Dimension of the span the element lives in.
    pub fn rank(&self) -> usize {
        self.reference.rank()
    }
}

/// Maximum element over the given reference: the whole positive hemisphere.
pub fn top(reference: &Frame) -> LatticeElement {
    LatticeElement::assemble(reference.clone(), reference.clone())
}

/// Minimum element over the given reference: the empty set.
pub fn bottom(reference: &Frame) -> LatticeElement {
    LatticeElement::assemble(reference.clone(), negate(reference))
}

pub fn is_top(elem: &LatticeElement) -> bool {
    elem.cone == elem.reference
}

pub fn is_bottom(elem: &LatticeElement) -> bool {
    elem.cone
        .vectors()
        .iter()
        .zip(elem.reference.vectors())
        .all(|(c, r)| c.is_negation_of(r))
}

/// Ray membership: the ray must lie in both the inversion cone and the
/// reference cone. Rays outside the span are never members.
pub fn member(x: &Ray, elem: &LatticeElement) -> bool {
    cone_contains(&elem.cone, x) && cone_contains(&elem.reference, x)
}

/// The complementary element (the rest of the positive hemisphere), obtained
/// by negating the inversion cone.
pub fn complement(elem: &LatticeElement) -> LatticeElement {
    LatticeElement::assemble(elem.reference.clone(), negate(&elem.cone))
}

fn ensure_same_reference(
    x: &LatticeElement,
    y: &LatticeElement,
) -> Result<(), LatticeError> {
    if x.reference != y.reference {
        return Err(LatticeError::ReferenceMismatch);
    }
    Ok(())
}

/// Restriction of an element to the hyperplane of its span orthogonal to the
/// last reference vector, as an element of the sublattice one rank down.
fn restrict_to_equator(elem: &LatticeElement) -> LatticeElement {
    debug_assert!(elem.rank() >= 2);
    let sub_ref = elem.reference.drop_last();
    let sprime = sub_ref.span();
    let cone = restrict(&elem.cone, &sprime).expect("equator lies in the cone span");
    LatticeElement::assemble(sub_ref, cone)
}

/// Decides `closure(X) ⊆ H_v` exactly. `v` may be any ambient vector; only
/// its projection onto the span of `X` matters.
pub fn closure_contains_halfspace(elem: &LatticeElement, v: &Vector) -> bool {
    assert_eq!(v.dim(), elem.ambient_dim(), "halfspace normal dimension");
    let span = elem.reference.span();
    closure_halfspace_inner(elem, &span.project(v))
}

fn closure_halfspace_inner(elem: &LatticeElement, v: &Vector) -> bool {
    // v is assumed to lie in the span of elem
    if v.is_zero() {
        return true; // H₀ is the whole space
    }
    if is_bottom(elem) {
        return true;
    }
    let e_star = elem.reference.last();
    let u = elem.cone.last();
    if u == e_star {
        // the closure is the full closed hemisphere below e*, whose only
        // containing halfspaces have normals on the nonnegative ray of e*
        return primitive(v).expect("nonzero") == *e_star;
    }
    if u.is_negation_of(e_star) {
        // the element lies in the equator sphere: restrict and project
        let restricted = restrict_to_equator(elem);
        let ev = e_star.to_vector();
        let coeff = v.dot(&ev) / ev.dot(&ev);
        return closure_halfspace_inner(&restricted, &v.sub(&ev.scale(&coeff)));
    }
    // generic case: the closure is H_u ∩ H_{e*} within the span
    halfspace_pair_contains(&u.to_vector(), &e_star.to_vector(), v)
        .expect("u and e* are non-parallel primitives")
}

/// Decides `closure(X) ⊆ closure(Y)` exactly.
pub fn closure_contains(
    x: &LatticeElement,
    y: &LatticeElement,
) -> Result<bool, LatticeError> {
    ensure_same_reference(x, y)?;
    Ok(closure_contains_inner(x, y))
}

fn closure_contains_inner(x: &LatticeElement, y: &LatticeElement) -> bool {
    if is_bottom(x) {
        return true;
    }
    if is_bottom(y) {
        return false; // x is nonempty, y closes to the empty set
    }
    let e_star = y.reference.last();
    let u_y = y.cone.last();
    if u_y == e_star {
        return true; // closure(Y) is the whole closed hemisphere
    }
    if u_y.is_negation_of(e_star) {
        // Y lies in the equator sphere; X must as well, then compare there
        if !x.cone.last().is_negation_of(e_star) {
            return false;
        }
        return closure_contains_inner(&restrict_to_equator(x), &restrict_to_equator(y));
    }
    closure_contains_halfspace(x, &u_y.to_vector())
}

/// Coefficient-growth log for a join: per recursion depth, the largest
/// coordinate bit-length among the participating cone frames.
#[derive(Debug, Clone, Default)]
pub struct JoinStats {
    pub max_bits_per_depth: Vec<u64>,
}

impl JoinStats {
    fn record(&mut self, depth: usize, x: &LatticeElement, y: &LatticeElement) {
        if self.max_bits_per_depth.len() <= depth {
            self.max_bits_per_depth.resize(depth + 1, 0);
        }
        let bits = x.cone.max_coord_bits().max(y.cone.max_coord_bits());
        if bits > self.max_bits_per_depth[depth] {
            self.max_bits_per_depth[depth] = bits;
        }
    }
}

/// Least upper bound of two elements over the same reference.
pub fn join(x: &LatticeElement, y: &LatticeElement) -> Result<LatticeElement, LatticeError> {
    ensure_same_reference(x, y)?;
    Ok(join_rec(x, y, 0, &mut None))
}

/// Join that additionally logs coefficient growth per recursion depth.
pub fn join_with_stats(
    x: &LatticeElement,
    y: &LatticeElement,
    stats: &mut JoinStats,
) -> Result<LatticeElement, LatticeError> {
    ensure_same_reference(x, y)?;
    let mut hook = Some(stats);
    Ok(join_rec(x, y, 0, &mut hook))
}

fn join_rec(
    x: &LatticeElement,
    y: &LatticeElement,
    depth: usize,
    stats: &mut Option<&mut JoinStats>,
) -> LatticeElement {
    if let Some(s) = stats.as_deref_mut() {
        s.record(depth, x, y);
    }
    if x == y {
        return x.clone();
    }
    if is_bottom(x) {
        return y.clone();
    }
    if is_bottom(y) {
        return x.clone();
    }
    if is_top(x) || is_top(y) {
        return top(&x.reference);
    }
    // Nested closures: the join lives over the boundary hyperplane of the
    // outer element and keeps its open side.
    if closure_contains_inner(x, y) {
        return boundary_extend(x, y, depth, stats);
    }
    if closure_contains_inner(y, x) {
        return boundary_extend(y, x, depth, stats);
    }
    // Remaining configurations reduce to the equator sublattice. When both
    // elements already lie in the equator the result does too; otherwise any
    // upper bound must contain the whole open upper half, and the least one
    // adds exactly that.
    debug_assert!(x.rank() >= 2, "rank-1 elements are top or bottom");
    let e_star = x.reference.last().clone();
    let both_equatorial = x.cone.last().is_negation_of(&e_star)
        && y.cone.last().is_negation_of(&e_star);
    let x1 = restrict_to_equator(x);
    let y1 = restrict_to_equator(y);
    let z1 = join_rec(&x1, &y1, depth + 1, stats);
    let appended = if both_equatorial { e_star.negated() } else { e_star };
    LatticeElement::assemble(x.reference.clone(), z1.cone.extended(appended))
}

/// Join for `closure(X) ⊆ closure(Y)`: join the traces on the hyperplane
/// `H(u_Y)` within the sublattice there, then append `u_Y`, which restores
/// the open halfspace below it.
fn boundary_extend(
    x: &LatticeElement,
    y: &LatticeElement,
    depth: usize,
    stats: &mut Option<&mut JoinStats>,
) -> LatticeElement {
    debug_assert!(x.rank() >= 2, "rank-1 elements are top or bottom");
    let u = y.cone.last().clone();
    let span = x.reference.span();
    let s = span.intersect_hyperplane(&u);
    let sub_ref = restrict(&x.reference, &s).expect("s lies in the reference span");
    let xr = LatticeElement::assemble(
        sub_ref.clone(),
        restrict(&x.cone, &s).expect("s lies in the cone span"),
    );
    let yr = LatticeElement::assemble(
        sub_ref,
        restrict(&y.cone, &s).expect("s lies in the cone span"),
    );
    let z = join_rec(&xr, &yr, depth + 1, stats);
    LatticeElement::assemble(x.reference.clone(), z.cone.extended(u))
}

/// Greatest lower bound, by duality through the complement.
pub fn meet(x: &LatticeElement, y: &LatticeElement) -> Result<LatticeElement, LatticeError> {
    let j = join(&complement(x), &complement(y))?;
    Ok(complement(&j))
}

/// Order test via join absorption: `x ≤ y` iff `x ∨ y = y`.
pub fn leq(x: &LatticeElement, y: &LatticeElement) -> Result<bool, LatticeError> {
    Ok(join(x, y)? == *y)
}

/// Left fold of join over a finite family; the empty family yields bottom.
pub fn join_all<'a, I>(reference: &Frame, elements: I) -> Result<LatticeElement, LatticeError>
where
    I: IntoIterator<Item = &'a LatticeElement>,
{
    let mut acc = bottom(reference);
    for e in elements {
        acc = join(&acc, e)?;
    }
    Ok(acc)
}

/// Left fold of meet over a finite family; the empty family yields top.
pub fn meet_all<'a, I>(reference: &Frame, elements: I) -> Result<LatticeElement, LatticeError>
where
    I: IntoIterator<Item = &'a LatticeElement>,
{
    let mut acc = top(reference);
    for e in elements {
        acc = meet(&acc, e)?;
    }
    Ok(acc)
}

/// Restriction of an element to a subspace of its span: both frames restrict,
/// giving an element of the corresponding sublattice.
pub fn restrict_element(
    elem: &LatticeElement,
    s: &Subspace,
) -> Result<LatticeElement, LatticeError> {
    let reference = restrict(&elem.reference, s)?;
    let cone = restrict(&elem.cone, s)?;
    Ok(LatticeElement::assemble(reference, cone))
}
