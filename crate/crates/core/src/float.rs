//! Binary64 shadow backend, for benchmarking only.
//!
//! Mirrors the exact join pipeline on `f64` vectors with a relative zero
//! tolerance in place of exact sign tests. Never used by the acceptance
//! suite: near-degenerate inputs make its sign decisions flip, which is the
//! comparison the `bench` command reports.

use crate::lattice::LatticeElement;

/// Relative zero tolerance for sign decisions.
pub const REL_TOL: f64 = 1e-9;

type FVec = Vec<f64>;

fn fdot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn fnorm(u: &[f64]) -> f64 {
    fdot(u, u).sqrt()
}

fn fscale(u: &[f64], c: f64) -> FVec {
    u.iter().map(|a| a * c).collect()
}

fn fsub(u: &[f64], v: &[f64]) -> FVec {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn is_zeroish(x: f64, scale: f64) -> bool {
    x.abs() <= REL_TOL * scale.max(1.0)
}

fn normalize(u: &[f64]) -> Option<FVec> {
    let n = fnorm(u);
    if is_zeroish(n, 1.0) {
        None
    } else {
        Some(fscale(u, 1.0 / n))
    }
}

/// Frame of unit vectors, tolerantly orthogonal.
#[derive(Debug, Clone)]
pub struct FloatFrame {
    pub vectors: Vec<FVec>,
}

#[derive(Debug, Clone)]
pub struct FloatElement {
    pub reference: FloatFrame,
    pub cone: FloatFrame,
}

/// Exact element lowered to the float backend (frame vectors normalized).
pub fn to_float(elem: &LatticeElement) -> FloatElement {
    let lower = |frame: &crate::cone::Frame| FloatFrame {
        vectors: frame
            .vectors()
            .iter()
            .map(|v| {
                let raw: FVec = v
                    .coords()
                    .iter()
                    .map(|c| {
                        // coordinates stay well inside f64 integer range for
                        // benchmark inputs; saturate otherwise
                        use num_traits::ToPrimitive;
                        c.to_f64().unwrap_or(f64::MAX)
                    })
                    .collect();
                normalize(&raw).expect("frame vectors are nonzero")
            })
            .collect(),
    };
    FloatElement {
        reference: lower(elem.reference()),
        cone: lower(elem.cone()),
    }
}

fn frames_equal(a: &FloatFrame, b: &FloatFrame, tol: f64) -> bool {
    a.vectors.len() == b.vectors.len()
        && a.vectors
            .iter()
            .zip(&b.vectors)
            .all(|(u, v)| fnorm(&fsub(u, v)) <= tol)
}

fn negate_frame(f: &FloatFrame) -> FloatFrame {
    FloatFrame {
        vectors: f.vectors.iter().map(|v| fscale(v, -1.0)).collect(),
    }
}

fn is_top(e: &FloatElement) -> bool {
    frames_equal(&e.cone, &e.reference, 1e-7)
}

fn is_bottom(e: &FloatElement) -> bool {
    frames_equal(&e.cone, &negate_frame(&e.reference), 1e-7)
}

/// Projection of `v` onto the orthogonal unit family `basis`.
fn project_onto(basis: &[FVec], v: &[f64]) -> FVec {
    let mut out = vec![0.0; v.len()];
    for b in basis {
        let c = fdot(b, v);
        for (o, bi) in out.iter_mut().zip(b) {
            *o += c * bi;
        }
    }
    out
}

/// Orthonormal basis of `span(vectors)` by tolerant Gram–Schmidt.
fn orthonormalize(vectors: &[FVec]) -> Vec<FVec> {
    let mut out: Vec<FVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &out {
            let c = fdot(&w, b);
            w = fsub(&w, &fscale(b, c));
        }
        if let Some(u) = normalize(&w) {
            out.push(u);
        }
    }
    out
}

/// Basis of the hyperplane of `span(basis)` orthogonal to `w`.
fn intersect_hyperplane(basis: &[FVec], w: &[f64]) -> Vec<FVec> {
    let projected: Vec<FVec> = basis
        .iter()
        .map(|b| {
            let c = fdot(b, w) / fdot(w, w);
            fsub(b, &fscale(w, c))
        })
        .collect();
    orthonormalize(&projected)
}

/// Float mirror of cone restriction.
fn restrict_frame(vectors: &[FVec], s: &[FVec]) -> Vec<FVec> {
    if s.is_empty() {
        return Vec::new();
    }
    if s.len() >= vectors.len() {
        return vectors.to_vec();
    }
    let last = vectors.last().unwrap();
    let w_raw = project_onto(s, last);
    match normalize(&w_raw) {
        None => restrict_frame(&vectors[..vectors.len() - 1], s),
        Some(w) => {
            let rest = intersect_hyperplane(s, &w);
            let mut out = restrict_frame(vectors, &rest);
            out.push(w);
            out
        }
    }
}

fn parallel_sign(u: &[f64], v: &[f64]) -> Option<f64> {
    // both unit-ish; parallel when |⟨u,v⟩| ≈ 1
    let c = fdot(u, v);
    if (c.abs() - 1.0).abs() <= 1e-7 {
        Some(c.signum())
    } else {
        None
    }
}

fn restrict_to_equator(e: &FloatElement) -> FloatElement {
    let sub_ref = FloatFrame {
        vectors: e.reference.vectors[..e.reference.vectors.len() - 1].to_vec(),
    };
    let cone = restrict_frame(&e.cone.vectors, &sub_ref.vectors);
    FloatElement {
        reference: sub_ref,
        cone: FloatFrame { vectors: cone },
    }
}

fn halfspace_pair_contains(u: &[f64], e: &[f64], v: &[f64]) -> bool {
    let uu = fdot(u, u);
    let ee = fdot(e, e);
    let ue = fdot(u, e);
    let det = uu * ee - ue * ue;
    if is_zeroish(det, uu * ee) {
        return false;
    }
    if is_zeroish(fnorm(v), 1.0) {
        return true;
    }
    let vu = fdot(v, u);
    let ve = fdot(v, e);
    let alpha = (vu * ee - ve * ue) / det;
    let beta = (ve * uu - vu * ue) / det;
    let residual_vec: FVec = v
        .iter()
        .zip(u.iter().zip(e))
        .map(|(vi, (ui, ei))| vi - alpha * ui - beta * ei)
        .collect();
    let residual = fnorm(&residual_vec);
    if residual > 1e-7 * fnorm(v).max(1.0) {
        return false;
    }
    alpha >= -REL_TOL && beta >= -REL_TOL
}

fn closure_halfspace(e: &FloatElement, v: &[f64]) -> bool {
    let vp = project_onto(&e.reference.vectors, v);
    if is_zeroish(fnorm(&vp), 1.0) {
        return true;
    }
    if is_bottom(e) {
        return true;
    }
    let e_star = e.reference.vectors.last().unwrap();
    let u = e.cone.vectors.last().unwrap();
    match parallel_sign(u, e_star) {
        Some(s) if s > 0.0 => {
            // hemisphere closure: need v on the nonnegative e* ray
            normalize(&vp)
                .map(|n| fnorm(&fsub(&n, e_star)) <= 1e-7)
                .unwrap_or(true)
        }
        Some(_) => {
            let r = restrict_to_equator(e);
            let c = fdot(&vp, e_star);
            let v2 = fsub(&vp, &fscale(e_star, c));
            closure_halfspace(&r, &v2)
        }
        None => halfspace_pair_contains(u, e_star, &vp),
    }
}

fn closure_contains(x: &FloatElement, y: &FloatElement) -> bool {
    if is_bottom(x) {
        return true;
    }
    if is_bottom(y) {
        return false;
    }
    let e_star = y.reference.vectors.last().unwrap();
    let u_y = y.cone.vectors.last().unwrap();
    match parallel_sign(u_y, e_star) {
        Some(s) if s > 0.0 => true,
        Some(_) => {
            let u_x = x.cone.vectors.last().unwrap();
            match parallel_sign(u_x, e_star) {
                Some(s) if s < 0.0 => {
                    closure_contains(&restrict_to_equator(x), &restrict_to_equator(y))
                }
                _ => false,
            }
        }
        None => closure_halfspace(x, u_y),
    }
}

fn top_of(reference: &FloatFrame) -> FloatElement {
    FloatElement {
        reference: reference.clone(),
        cone: reference.clone(),
    }
}

fn extended(frame: &FloatFrame, v: FVec) -> FloatFrame {
    let mut vectors = frame.vectors.clone();
    vectors.push(v);
    FloatFrame { vectors }
}

/// Float mirror of the exact join.
pub fn join_float(x: &FloatElement, y: &FloatElement) -> FloatElement {
    if x.cone.vectors.len() <= 1 {
        // rank-1 base: top or bottom only
        if is_bottom(x) {
            return y.clone();
        }
        return x.clone();
    }
    if frames_equal(&x.cone, &y.cone, 1e-7) {
        return x.clone();
    }
    if is_bottom(x) {
        return y.clone();
    }
    if is_bottom(y) {
        return x.clone();
    }
    if is_top(x) || is_top(y) {
        return top_of(&x.reference);
    }
    if closure_contains(x, y) {
        return boundary_extend(x, y);
    }
    if closure_contains(y, x) {
        return boundary_extend(y, x);
    }
    let e_star = x.reference.vectors.last().unwrap().clone();
    let a = fscale(&e_star, -1.0);
    let both_equatorial = [x, y].iter().all(|e| {
        parallel_sign(e.cone.vectors.last().unwrap(), &e_star)
            .map(|s| s < 0.0)
            .unwrap_or(false)
    });
    let x1 = restrict_to_equator(x);
    let y1 = restrict_to_equator(y);
    let z1 = join_float(&x1, &y1);
    let appended = if both_equatorial { a } else { e_star };
    FloatElement {
        reference: x.reference.clone(),
        cone: extended(&z1.cone, appended),
    }
}

fn boundary_extend(x: &FloatElement, y: &FloatElement) -> FloatElement {
    let u = y.cone.vectors.last().unwrap().clone();
    let s = intersect_hyperplane(&x.reference.vectors, &u);
    let sub_ref = FloatFrame {
        vectors: restrict_frame(&x.reference.vectors, &s),
    };
    let xr = FloatElement {
        reference: sub_ref.clone(),
        cone: FloatFrame {
            vectors: restrict_frame(&x.cone.vectors, &s),
        },
    };
    let yr = FloatElement {
        reference: sub_ref,
        cone: FloatFrame {
            vectors: restrict_frame(&y.cone.vectors, &s),
        },
    };
    let z = join_float(&xr, &yr);
    FloatElement {
        reference: x.reference.clone(),
        cone: extended(&z.cone, u),
    }
}

/// Whether the float result matches the exact result, vector by vector, after
/// normalizing the exact frame; used to report the disagreement rate.
pub fn agrees_with_exact(float_result: &FloatElement, exact_result: &LatticeElement) -> bool {
    let exact = to_float(exact_result);
    frames_equal(&float_result.cone, &exact.cone, 1e-6)
}
