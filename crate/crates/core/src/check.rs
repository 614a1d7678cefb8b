//! Property suites over seeded random elements, with minimal failing
//! witnesses. The CLI `check` command drives these; the deliberately broken
//! join implementation exists so the harness can prove it actually detects
//! violations.

use crate::gen::{random_element_from, random_ray_from, GenSpec};
use crate::lattice::{
    bottom, complement, is_bottom, join, join_all, member, LatticeElement,
};
use crate::oracle::{
    arc_complement, arc_join, arc_leq, arc_meet, classify, subset_falsifier, FalsifierVerdict,
};
use crate::cone::{Frame, Ray};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinImpl {
    Exact,
    /// Returns its left argument; exists to prove the suites catch a wrong
    /// join.
    DeliberatelyBroken,
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub dims: Vec<usize>,
    pub iters: usize,
    pub seed: u64,
    pub join_impl: JoinImpl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteOutcome {
    Passed,
    Skipped,
    Failed { witness: String },
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub outcome: SuiteOutcome,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, SuiteOutcome::Failed { .. })
    }
}

struct Ctx<'a> {
    config: &'a CheckConfig,
}

impl Ctx<'_> {
    fn joined(&self, x: &LatticeElement, y: &LatticeElement) -> LatticeElement {
        match self.config.join_impl {
            JoinImpl::Exact => join(x, y).expect("same reference by construction"),
            JoinImpl::DeliberatelyBroken => x.clone(),
        }
    }

    fn met(&self, x: &LatticeElement, y: &LatticeElement) -> LatticeElement {
        complement(&self.joined(&complement(x), &complement(y)))
    }

    fn below(&self, x: &LatticeElement, y: &LatticeElement) -> bool {
        self.joined(x, y) == *y
    }

    fn rng(&self, suite: u64, dim: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(
            self.config
                .seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(suite)
                .wrapping_add((dim as u64) << 32),
        )
    }
}

fn witness(parts: &[(&str, String)]) -> String {
    parts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn suite_lattice_axioms(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        let spec = GenSpec::new(0, dim);
        let mut rng = ctx.rng(1, dim);
        for it in 0..ctx.config.iters {
            let x = random_element_from(&mut rng, &spec).unwrap();
            let y = random_element_from(&mut rng, &spec).unwrap();
            let z = random_element_from(&mut rng, &spec).unwrap();
            cases += 1;
            let checks: [(&str, bool); 8] = [
                ("join idempotent", ctx.joined(&x, &x) == x),
                ("meet idempotent", ctx.met(&x, &x) == x),
                ("join commutative", ctx.joined(&x, &y) == ctx.joined(&y, &x)),
                ("meet commutative", ctx.met(&x, &y) == ctx.met(&y, &x)),
                (
                    "join associative",
                    ctx.joined(&x, &ctx.joined(&y, &z)) == ctx.joined(&ctx.joined(&x, &y), &z),
                ),
                (
                    "meet associative",
                    ctx.met(&x, &ctx.met(&y, &z)) == ctx.met(&ctx.met(&x, &y), &z),
                ),
                ("absorption join", ctx.joined(&x, &ctx.met(&x, &y)) == x),
                ("absorption meet", ctx.met(&x, &ctx.joined(&x, &y)) == x),
            ];
            for (law, ok) in checks {
                if !ok {
                    return SuiteResult {
                        name: "lattice-axioms",
                        cases,
                        outcome: SuiteOutcome::Failed {
                            witness: witness(&[
                                ("law", law.into()),
                                ("dim", dim.to_string()),
                                ("iter", it.to_string()),
                                ("X", x.cone().to_string()),
                                ("Y", y.cone().to_string()),
                                ("Z", z.cone().to_string()),
                            ]),
                        },
                    };
                }
            }
        }
    }
    SuiteResult {
        name: "lattice-axioms",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_duality(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        let spec = GenSpec::new(0, dim);
        let mut rng = ctx.rng(2, dim);
        for it in 0..ctx.config.iters {
            let x = random_element_from(&mut rng, &spec).unwrap();
            let y = random_element_from(&mut rng, &spec).unwrap();
            cases += 1;
            let involution = complement(&complement(&x)) == x;
            let reversing =
                ctx.below(&x, &y) == ctx.below(&complement(&y), &complement(&x));
            if !involution || !reversing {
                return SuiteResult {
                    name: "duality",
                    cases,
                    outcome: SuiteOutcome::Failed {
                        witness: witness(&[
                            (
                                "law",
                                if involution {
                                    "order-reversing".into()
                                } else {
                                    "involution".into()
                                },
                            ),
                            ("dim", dim.to_string()),
                            ("iter", it.to_string()),
                            ("X", x.cone().to_string()),
                            ("Y", y.cone().to_string()),
                        ]),
                    },
                };
            }
        }
    }
    SuiteResult {
        name: "duality",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_jtp(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        let spec = GenSpec::new(0, dim);
        let mut rng = ctx.rng(3, dim);
        let reference = Frame::standard(dim);
        for it in 0..ctx.config.iters {
            let b = random_element_from(&mut rng, &spec).unwrap();
            let not_b = complement(&b);
            let family_size = (it % 4) + 1;
            // each member is forced disjoint from B by meeting with its
            // complement
            let family: Vec<LatticeElement> = (0..family_size)
                .map(|_| {
                    let r = random_element_from(&mut rng, &spec).unwrap();
                    ctx.met(&r, &not_b)
                })
                .collect();
            cases += 1;
            let joined = match ctx.config.join_impl {
                JoinImpl::Exact => join_all(&reference, family.iter()).unwrap(),
                JoinImpl::DeliberatelyBroken => {
                    let mut acc = bottom(&reference);
                    for e in &family {
                        acc = ctx.joined(&acc, e);
                    }
                    acc
                }
            };
            if !ctx.below(&joined, &not_b) {
                return SuiteResult {
                    name: "jtp",
                    cases,
                    outcome: SuiteOutcome::Failed {
                        witness: witness(&[
                            ("dim", dim.to_string()),
                            ("iter", it.to_string()),
                            ("B", b.cone().to_string()),
                            ("join", joined.cone().to_string()),
                        ]),
                    },
                };
            }
        }
    }
    SuiteResult {
        name: "jtp",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_oracle_equivalence(ctx: &Ctx) -> SuiteResult {
    if !ctx.config.dims.contains(&2) {
        return SuiteResult {
            name: "oracle-equivalence",
            cases: 0,
            outcome: SuiteOutcome::Skipped,
        };
    }
    let spec = GenSpec::new(0, 2);
    let mut rng = ctx.rng(4, 2);
    let mut cases = 0;
    for it in 0..ctx.config.iters {
        let x = random_element_from(&mut rng, &spec).unwrap();
        let y = random_element_from(&mut rng, &spec).unwrap();
        cases += 1;
        let cx = classify(&x).unwrap();
        let cy = classify(&y).unwrap();
        let join_ok = classify(&ctx.joined(&x, &y)).unwrap() == arc_join(&cx, &cy);
        let meet_ok = classify(&ctx.met(&x, &y)).unwrap() == arc_meet(&cx, &cy);
        let leq_ok = ctx.below(&x, &y) == arc_leq(&cx, &cy);
        let compl_ok = classify(&complement(&x)).unwrap() == arc_complement(&cx);
        if !(join_ok && meet_ok && leq_ok && compl_ok) {
            let op = if !join_ok {
                "join"
            } else if !meet_ok {
                "meet"
            } else if !leq_ok {
                "leq"
            } else {
                "complement"
            };
            return SuiteResult {
                name: "oracle-equivalence",
                cases,
                outcome: SuiteOutcome::Failed {
                    witness: witness(&[
                        ("op", op.into()),
                        ("iter", it.to_string()),
                        ("X", x.cone().to_string()),
                        ("Y", y.cone().to_string()),
                    ]),
                },
            };
        }
    }
    SuiteResult {
        name: "oracle-equivalence",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_restriction(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        if dim < 2 {
            continue;
        }
        let spec = GenSpec::new(0, dim);
        let sub_spec = GenSpec::new(0, dim - 1);
        let mut rng = ctx.rng(5, dim);
        let s = crate::cone::Subspace::standard(dim, dim - 1);
        for it in 0..ctx.config.iters {
            let x = random_element_from(&mut rng, &spec).unwrap();
            let restricted = crate::lattice::restrict_element(&x, &s).unwrap();
            cases += 1;
            for _ in 0..200 {
                let flat = random_ray_from(&mut rng, &sub_spec).unwrap();
                let mut coords: Vec<i64> = Vec::with_capacity(dim);
                for c in flat.vector().coords() {
                    use num_traits::ToPrimitive;
                    coords.push(c.to_i64().expect("bounded coordinates"));
                }
                coords.push(0);
                let embedded = Ray::from_i64(&coords).unwrap();
                if member(&embedded, &restricted) != member(&embedded, &x) {
                    return SuiteResult {
                        name: "restriction",
                        cases,
                        outcome: SuiteOutcome::Failed {
                            witness: witness(&[
                                ("dim", dim.to_string()),
                                ("iter", it.to_string()),
                                ("X", x.cone().to_string()),
                                ("ray", embedded.to_string()),
                            ]),
                        },
                    };
                }
            }
        }
    }
    SuiteResult {
        name: "restriction",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_falsifier_cross_check(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        let spec = GenSpec::new(0, dim);
        let mut rng = ctx.rng(6, dim);
        for it in 0..ctx.config.iters {
            let x = random_element_from(&mut rng, &spec).unwrap();
            let y = random_element_from(&mut rng, &spec).unwrap();
            let j = ctx.joined(&x, &y);
            cases += 1;
            for operand in [&x, &y] {
                if let FalsifierVerdict::Counterexample(ray) =
                    subset_falsifier(operand, &j, 1000, ctx.config.seed ^ it as u64).unwrap()
                {
                    return SuiteResult {
                        name: "falsifier-cross-check",
                        cases,
                        outcome: SuiteOutcome::Failed {
                            witness: witness(&[
                                ("violation", "upper-bound".into()),
                                ("dim", dim.to_string()),
                                ("iter", it.to_string()),
                                ("X", operand.cone().to_string()),
                                ("join", j.cone().to_string()),
                                ("ray", ray.to_string()),
                            ]),
                        },
                    };
                }
            }
            if ctx.below(&x, &y) {
                if let FalsifierVerdict::Counterexample(ray) =
                    subset_falsifier(&x, &y, 1000, ctx.config.seed ^ (it as u64) << 1).unwrap()
                {
                    return SuiteResult {
                        name: "falsifier-cross-check",
                        cases,
                        outcome: SuiteOutcome::Failed {
                            witness: witness(&[
                                ("violation", "leq-vs-sampling".into()),
                                ("dim", dim.to_string()),
                                ("iter", it.to_string()),
                                ("X", x.cone().to_string()),
                                ("Y", y.cone().to_string()),
                                ("ray", ray.to_string()),
                            ]),
                        },
                    };
                }
            }
        }
    }
    SuiteResult {
        name: "falsifier-cross-check",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

fn suite_bottom_uniqueness(ctx: &Ctx) -> SuiteResult {
    let mut cases = 0;
    for &dim in &ctx.config.dims {
        let spec = GenSpec::new(0, dim);
        let mut rng = ctx.rng(7, dim);
        for it in 0..ctx.config.iters {
            let x = random_element_from(&mut rng, &spec).unwrap();
            cases += 1;
            let structural = x.cone() == &crate::cone::negate(x.reference());
            if is_bottom(&x) != structural {
                return SuiteResult {
                    name: "bottom-uniqueness",
                    cases,
                    outcome: SuiteOutcome::Failed {
                        witness: witness(&[
                            ("dim", dim.to_string()),
                            ("iter", it.to_string()),
                            ("X", x.cone().to_string()),
                        ]),
                    },
                };
            }
            if !is_bottom(&x) {
                let b = bottom(x.reference());
                if subset_falsifier(&x, &b, 10_000, ctx.config.seed ^ it as u64).unwrap()
                    == FalsifierVerdict::VerifiedUpToSampling
                {
                    return SuiteResult {
                        name: "bottom-uniqueness",
                        cases,
                        outcome: SuiteOutcome::Failed {
                            witness: witness(&[
                                ("violation", "no member ray found".into()),
                                ("dim", dim.to_string()),
                                ("iter", it.to_string()),
                                ("X", x.cone().to_string()),
                            ]),
                        },
                    };
                }
            }
        }
    }
    SuiteResult {
        name: "bottom-uniqueness",
        cases,
        outcome: SuiteOutcome::Passed,
    }
}

/// Runs every suite; with `iters == 0` all suites are reported skipped.
pub fn run_all(config: &CheckConfig) -> Vec<SuiteResult> {
    let names: [&'static str; 7] = [
        "lattice-axioms",
        "duality",
        "jtp",
        "oracle-equivalence",
        "restriction",
        "falsifier-cross-check",
        "bottom-uniqueness",
    ];
    if config.iters == 0 {
        return names
            .iter()
            .map(|n| SuiteResult {
                name: n,
                cases: 0,
                outcome: SuiteOutcome::Skipped,
            })
            .collect();
    }
    let ctx = Ctx { config };
    vec![
        suite_lattice_axioms(&ctx),
        suite_duality(&ctx),
        suite_jtp(&ctx),
        suite_oracle_equivalence(&ctx),
        suite_restriction(&ctx),
        suite_falsifier_cross_check(&ctx),
        suite_bottom_uniqueness(&ctx),
    ]
}
