use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{fail, Check, Context, VerifyConfig};
use crate::delta::{
    boundary_agreement, build_sequence, counter_diagonal_symmetry, crossing_equalities, eoc_pom_polynomial,
    marginal_difference_equations, marginal_triangle_alignment, paired_marginals, recurrence_identity,
    second_row_forms, sub_super_diagonals, zero_diagonal, Boundary, DeltaMatrix, Recurrence, Region,
};
use crate::grid::Grid;
use crate::poupard::{first_poupard_violation, poupard_triangle};
use crate::report::{CheckRecord, Counterexample, Outcome, Params};
use crate::series::{
    boundary_relations_check, closed_forms_required_n, edge_generating_functions, gf_required_n, lambda1_closed_forms,
    lambda_lhs, lambda_rhs, omega_lhs, omega_rhs, reindex_lambda, reindex_omega, reindex_required_n, series_equal, Var,
};
use crate::trees::{census_table, fold_trees, ha12_map, joint_distribution_bounded, tree_count, Census};

struct FnCheck {
    name: &'static str,
    description: &'static str,
    required: fn(&VerifyConfig) -> usize,
    run: fn(&Context) -> Vec<CheckRecord>,
}

impl Check for FnCheck {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn required_n(&self, config: &VerifyConfig) -> usize {
        (self.required)(config)
    }

    fn run(&self, ctx: &Context) -> Vec<CheckRecord> {
        (self.run)(ctx)
    }
}

fn n_max(c: &VerifyConfig) -> usize {
    c.n_max
}

pub(super) fn standard() -> Vec<Box<dyn Check>> {
    let table: [FnCheck; 12] = [
        FnCheck {
            name: "golden",
            description: "built matrices, triangle rows and the bijection pair match the fixtures",
            required: |c| c.n_max.max(5),
            run: golden,
        },
        FnCheck {
            name: "equivalence",
            description: "all nine build definitions agree",
            required: n_max,
            run: equivalence,
        },
        FnCheck {
            name: "enumeration",
            description: "tree enumeration reproduces the matrices",
            required: n_max,
            run: enumeration,
        },
        FnCheck {
            name: "symmetry",
            description: "counter-diagonal symmetry and the symmetric eoc/pom polynomial",
            required: n_max,
            run: symmetry,
        },
        FnCheck {
            name: "diagonals",
            description: "zero diagonal and equal sub/super diagonals",
            required: n_max,
            run: diagonals,
        },
        FnCheck {
            name: "crossing",
            description: "crossing equalities around each diagonal cell",
            required: n_max,
            run: crossing,
        },
        FnCheck {
            name: "marginals",
            description: "row/column sums, totals, second row and boundary values",
            required: n_max,
            run: marginals,
        },
        FnCheck {
            name: "bijection",
            description: "the relabelling map is injective and shifts eoc to pom",
            required: n_max,
            run: bijection,
        },
        FnCheck {
            name: "census",
            description: "structural censuses and the four recurrences",
            required: n_max,
            run: census,
        },
        FnCheck {
            name: "gf",
            description: "trivariate generating functions of both triangles",
            required: |c| gf_required_n(c.gf_cap),
            run: gf,
        },
        FnCheck {
            name: "poupard-matrices",
            description: "reindexed grids are Poupard matrices with the stated boundaries",
            required: |c| reindex_required_n(c.p_max, c.grid_size + 1),
            run: poupard_matrices,
        },
        FnCheck {
            name: "closed-forms",
            description: "bivariate closed forms of the reindexed grids",
            required: |c| closed_forms_required_n(c.closed_cap),
            run: closed_forms,
        },
    ];
    table.into_iter().map(|c| Box::new(c) as Box<dyn Check>).collect()
}

fn per_n(
    ctx: &Context,
    from: usize,
    mut f: impl FnMut(usize, &DeltaMatrix, Option<&DeltaMatrix>) -> Vec<CheckRecord>,
) -> Vec<CheckRecord> {
    (from..=ctx.config.n_max)
        .flat_map(|n| {
            let prev = (n > 1).then(|| ctx.matrix(n - 1));
            f(n, ctx.matrix(n), prev)
        })
        .collect()
}

fn matrices_equal(name: &str, expected: &DeltaMatrix, actual: &DeltaMatrix) -> Outcome {
    match expected.first_difference(actual) {
        None => Ok(()),
        Some((0, 0)) => Err(Counterexample::new(format!("{name} size"), expected.n(), actual.n())),
        Some((m, k)) => Err(Counterexample::new(
            format!("{name} f_{}({m},{k})", expected.n()),
            expected.get(m as i64, k as i64),
            actual.get(m as i64, k as i64),
        )),
    }
}

fn golden(ctx: &Context) -> Vec<CheckRecord> {
    let g = match &ctx.golden {
        Ok(g) => g,
        Err(e) => return vec![fail("golden.load", Params::none(), "fixtures", e)],
    };
    let mut records: Vec<CheckRecord> = g
        .matrices
        .iter()
        .filter(|m| m.n() <= ctx.config.n_max.max(1))
        .map(|m| {
            CheckRecord::timed("golden.matrix", Params::n(m.n()), || matrices_equal("golden", m, ctx.matrix(m.n())))
        })
        .collect();
    records.push(CheckRecord::timed("golden.triangle", Params::n(g.triangle.n_max()), || {
        let built = poupard_triangle(g.triangle.n_max());
        for (n, row) in g.triangle.rows().iter().enumerate() {
            if built.row(n) != row.as_slice() {
                return Err(Counterexample::new(
                    format!("triangle row {n}"),
                    crate::poupard::join(row, " "),
                    crate::poupard::join(built.row(n), " "),
                ));
            }
        }
        Ok(())
    }));
    records.push(CheckRecord::timed("golden.bijection", Params::n(g.bijection.0.n()), || {
        let (left, right) = &g.bijection;
        let image = ha12_map(left).map_err(|e| Counterexample::new("image", right, e))?;
        if &image != right {
            return Err(Counterexample::new("image", right, image));
        }
        Ok(())
    }));
    records
}

fn equivalence(ctx: &Context) -> Vec<CheckRecord> {
    let n_max = ctx.config.n_max;
    let strategies: Vec<_> = ctx.strategies.iter().collect();
    strategies
        .par_iter()
        .map(|s| {
            let name = format!("equivalence.{}", s.tag());
            CheckRecord::timed(name, Params::n(n_max), || {
                let built = build_sequence(n_max, *s)
                    .map_err(|e| Counterexample::new(format!("build with {}", s.tag()), "a unique solution", e))?;
                for n in 1..=n_max {
                    matrices_equal(s.tag(), ctx.matrix(n), built.get(n).expect("built"))?;
                }
                Ok(())
            })
        })
        .collect()
}

fn enumeration(ctx: &Context) -> Vec<CheckRecord> {
    let limit = ctx.config.enumeration_limit();
    let mut records = Vec::new();
    for n in 1..=ctx.config.n_max {
        if n > limit {
            let note = if ctx.config.force {
                "beyond the enumeration bound"
            } else {
                "enumeration capped; pass --force to extend"
            };
            records.push(CheckRecord::skipped("enumeration.distribution", Params::n(n), note));
            continue;
        }
        let mut distribution = None;
        records.push(CheckRecord::timed("enumeration.distribution", Params::n(n), || {
            let counted = joint_distribution_bounded(n, crate::trees::ENUMERATION_BOUND)
                .map_err(|e| Counterexample::new("enumeration", "a distribution", e))?;
            let outcome = matrices_equal("enumerated", ctx.matrix(n), &counted);
            distribution = Some(counted);
            outcome
        }));
        if let Some(counted) = distribution {
            let total = counted.total();
            let expected = tree_count(n);
            let record = CheckRecord::from_outcome(
                "enumeration.count",
                Params::n(n),
                if total == expected { Ok(()) } else { Err(Counterexample::new("tree count", &expected, &total)) },
            );
            records.push(record.with_note(format!("trees={total}")));
        }
    }
    records
}

fn symmetry(ctx: &Context) -> Vec<CheckRecord> {
    per_n(ctx, 1, |n, m, _| {
        vec![
            CheckRecord::timed("symmetry.counter-diagonal", Params::n(n), || counter_diagonal_symmetry(m)),
            CheckRecord::timed("symmetry.polynomial", Params::n(n), || {
                eoc_pom_polynomial(m).map(|_| ()).map_err(|e| Counterexample::new("g grid", "symmetric", e))
            }),
        ]
    })
}

fn diagonals(ctx: &Context) -> Vec<CheckRecord> {
    per_n(ctx, 1, |n, m, _| {
        vec![
            CheckRecord::timed("diagonals.zero", Params::n(n), || zero_diagonal(m)),
            CheckRecord::timed("diagonals.sub-super", Params::n(n), || sub_super_diagonals(m)),
        ]
    })
}

fn crossing(ctx: &Context) -> Vec<CheckRecord> {
    per_n(ctx, 1, |n, m, _| vec![CheckRecord::timed("crossing", Params::n(n), || crossing_equalities(m))])
}

fn marginals(ctx: &Context) -> Vec<CheckRecord> {
    let triangle = poupard_triangle(ctx.config.n_max);
    per_n(ctx, 1, |n, m, prev| {
        let params = Params::n(n);
        let mut records = vec![
            CheckRecord::timed("marginals.total", params, || {
                let (total, expected) = (m.total(), tree_count(n));
                if total == expected {
                    Ok(())
                } else {
                    Err(Counterexample::new(format!("total of M_{n}"), expected, total))
                }
            }),
            CheckRecord::timed("marginals.triangle", params, || marginal_triangle_alignment(m, &triangle)),
            CheckRecord::timed("marginals.paired", params, || paired_marginals(m)),
        ];
        if let Some(p) = prev {
            records.push(CheckRecord::timed("marginals.difference", params, || marginal_difference_equations(m, p)));
            records.push(CheckRecord::timed("marginals.second-row", params, || second_row_forms(m, p)));
            records.push(CheckRecord::timed("marginals.boundary", params, || {
                Boundary::ALL.into_iter().try_for_each(|b| boundary_agreement(m, p, b))
            }));
            records.push(crate::delta::factor_two_record(m, p));
        }
        records
    })
}

fn bijection(ctx: &Context) -> Vec<CheckRecord> {
    let limit = ctx.config.enumeration_limit();
    (1..=ctx.config.n_max)
        .map(|n| {
            if n > limit {
                return CheckRecord::skipped("bijection", Params::n(n), "enumeration capped; pass --force to extend");
            }
            CheckRecord::timed("bijection", Params::n(n), || {
                let (images, first_bad) = fold_trees(
                    n,
                    || (HashSet::new(), None),
                    |(seen, bad): &mut (HashSet<String>, Option<Counterexample>), t| {
                        if bad.is_some() {
                            return;
                        }
                        match ha12_map(t) {
                            Ok(image) => {
                                let (eoc, pom) = (t.eoc().expect("n >= 1"), image.pom().expect("n >= 1"));
                                if eoc != pom + 1 {
                                    *bad = Some(Counterexample::new(
                                        format!("tree {t}"),
                                        format!("pom = {}", eoc - 1),
                                        format!("pom = {pom}"),
                                    ));
                                }
                                seen.insert(image.to_string());
                            }
                            Err(e) => *bad = Some(Counterexample::new(format!("tree {t}"), "a tree", e)),
                        }
                    },
                    |(mut a, bad_a), (b, bad_b)| {
                        a.extend(b);
                        (a, bad_a.or(bad_b))
                    },
                );
                if let Some(c) = first_bad {
                    return Err(c);
                }
                let expected = tree_count(n);
                let distinct = BigInt::from(images.len());
                if distinct != expected {
                    return Err(Counterexample::new("distinct images", expected, distinct));
                }
                Ok(())
            })
        })
        .collect()
}

fn at(grid: &Grid, m: i64, k: i64) -> BigInt {
    let s = grid.rows() as i64;
    if m >= 1 && k >= 1 && m <= s && k <= s {
        grid.get(m as usize - 1, k as usize - 1).clone()
    } else {
        BigInt::zero()
    }
}

/// `Delta_m^2 T + 2 R1Witness = 0` on `L1 u U2`, `Delta_k^2 T + 2 (Outside + Inside) = 0` on `L2 u U1`.
fn census_identities(n: usize) -> Outcome {
    let counts = joint_distribution_bounded(n, crate::trees::ENUMERATION_BOUND)
        .map_err(|e| Counterexample::new("enumeration", "a distribution", e))?
        .to_grid();
    let table = |c: Census| census_table(n, c).map_err(|e| Counterexample::new(c.to_string(), "a table", e));
    let r1 = table(Census::R1Witness)?;
    let outside = table(Census::R2WitnessOutside)?;
    let inside = table(Census::R2WitnessInside)?;
    for region in [Region::L1, Region::U2] {
        for (m, k) in region.cells(n) {
            let r: BigInt = at(&counts, m, k) - at(&counts, m + 1, k) * 2 + at(&counts, m + 2, k) + at(&r1, m, k) * 2;
            if !r.is_zero() {
                return Err(Counterexample::new(format!("n={n} ({m},{k}) first census identity"), 0, r));
            }
        }
    }
    for region in [Region::L2, Region::U1] {
        for (m, k) in region.cells(n) {
            let witnesses = at(&outside, m, k) + at(&inside, m, k);
            let r: BigInt = at(&counts, m, k) - at(&counts, m, k + 1) * 2 + at(&counts, m, k + 2) + witnesses * 2;
            if !r.is_zero() {
                return Err(Counterexample::new(format!("n={n} ({m},{k}) second census identity"), 0, r));
            }
        }
    }
    Ok(())
}

fn census(ctx: &Context) -> Vec<CheckRecord> {
    let limit = ctx.config.enumeration_limit();
    let mut records: Vec<CheckRecord> = (2..=ctx.config.n_max)
        .map(|n| {
            if n > limit {
                CheckRecord::skipped("census.trees", Params::n(n), "enumeration capped; pass --force to extend")
            } else {
                CheckRecord::timed("census.trees", Params::n(n), || census_identities(n))
            }
        })
        .collect();
    records.extend(per_n(ctx, 2, |n, m, prev| {
        let p = prev.expect("n >= 2");
        vec![CheckRecord::timed("census.matrix-form", Params::n(n), || {
            Recurrence::ALL.into_iter().try_for_each(|r| recurrence_identity(m, p, r))
        })]
    }));
    records
}

fn gf(ctx: &Context) -> Vec<CheckRecord> {
    let cap = ctx.config.gf_cap;
    let params = Params::cap(cap);
    let (lrhs, orhs) = rayon::join(|| lambda_rhs(cap), || omega_rhs(cap));
    let rational = |s: &crate::series::TriSeries| -> Outcome {
        match s.terms().find(|(_, c)| !c.is_rational()) {
            None => Ok(()),
            Some(((i, j, k), c)) => Err(Counterexample::new(format!("x^{i} y^{j} z^{k}"), "rational", c)),
        }
    };
    vec![
        CheckRecord::timed("gf.lower", params, || {
            let lhs = lambda_lhs(cap, &ctx.reference).map_err(|e| Counterexample::new("matrices", "available", e))?;
            series_equal(&lhs, &lrhs)
        }),
        CheckRecord::timed("gf.upper", params, || {
            let lhs = omega_lhs(cap, &ctx.reference).map_err(|e| Counterexample::new("matrices", "available", e))?;
            series_equal(&lhs, &orhs)
        }),
        CheckRecord::timed("gf.rational", params, || rational(&lrhs).and_then(|_| rational(&orhs))),
        CheckRecord::timed("gf.swap-symmetry", params, || {
            series_equal(&lrhs.swap_vars(Var::Y, Var::Z), &lrhs)?;
            series_equal(&orhs.swap_vars(Var::X, Var::Z), &orhs)
        }),
    ]
}

fn poupard_matrices(ctx: &Context) -> Vec<CheckRecord> {
    let (p_max, size) = (ctx.config.p_max, ctx.config.grid_size);
    let mut records = Vec::new();
    for p in 0..=p_max {
        let params = Params::p(p);
        for (name, grid) in [
            ("poupard-matrices.lower", reindex_lambda(p, size, &ctx.reference)),
            ("poupard-matrices.upper", reindex_omega(p, size, &ctx.reference)),
        ] {
            records.push(match grid {
                Ok(g) => CheckRecord::timed(name, params, || match first_poupard_violation(&g) {
                    None => Ok(()),
                    Some((i, j, r)) => Err(Counterexample::new(format!("({i},{j})"), 0, r)),
                }),
                Err(e) => fail(name, params, "grid", e),
            });
        }
        match boundary_relations_check(p, size, &ctx.reference) {
            Ok(rs) => records.extend(rs),
            Err(e) => records.push(fail("poupard-matrices.boundary", params, "grid", e)),
        }
    }
    records
}

fn closed_forms(ctx: &Context) -> Vec<CheckRecord> {
    let cap = ctx.config.closed_cap;
    let mut records = match lambda1_closed_forms(cap, &ctx.reference) {
        Ok(rs) => rs,
        Err(e) => vec![fail("closed-forms", Params::cap(cap), "grids", e)],
    };
    records.push(match edge_generating_functions(cap, &ctx.reference) {
        Ok(outcome) => CheckRecord::from_outcome("closed-forms.edges", Params::cap(cap), outcome),
        Err(e) => fail("closed-forms.edges", Params::cap(cap), "grids", e),
    });
    records
}
