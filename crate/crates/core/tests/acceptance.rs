use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use treecalc::delta::{
    build_matrix, build_sequence, counter_diagonal_symmetry, crossing_equalities, eoc_pom_polynomial,
    factor_two_initial_condition, marginal_difference_equations, marginal_triangle_alignment, recurrence_identity,
    sub_super_diagonals, DeltaMatrix, DeltaSequence, Recurrence, Region, StrategyRegistry,
};
use treecalc::golden::Golden;
use treecalc::grid::Grid;
use treecalc::poupard::{is_poupard_matrix, poupard_triangle, tangent_numbers};
use treecalc::series::{
    boundary_relations_check, closed_forms_required_n, lambda1_closed_forms, lambda_lhs, lambda_rhs, omega_lhs,
    omega_rhs, reindex_lambda, reindex_omega, reindex_required_n, RootTwoScalar,
};
use treecalc::trees::{census_table, for_each_tree, ha12_map, joint_distribution, tree_count, Census};

type Verdict = Result<(), String>;

/// Name, check, and optional time limit in seconds.
type Criterion = (&'static str, fn() -> Verdict, Option<u64>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d1(n_max: usize) -> DeltaSequence {
    build_sequence(n_max, StrategyRegistry::catalog().get("d1").unwrap()).unwrap()
}

fn golden_matrices() -> Verdict {
    let golden = Golden::embedded().map_err(|e| e.to_string())?;
    let d1 = StrategyRegistry::catalog();
    for expected in &golden.matrices {
        let built = build_matrix(expected.n(), d1.get("d1").unwrap()).map_err(|e| e.to_string())?;
        ensure(&built == expected, || format!("M_{} differs at {:?}", expected.n(), built.first_difference(expected)))?;
    }
    ensure(golden.matrices.len() == 5, || "expected five fixtures".into())
}

fn nine_way_equivalence() -> Verdict {
    let registry = StrategyRegistry::catalog();
    let reference = d1(8);
    for s in registry.iter() {
        let seq = build_sequence(8, s).map_err(|e| format!("{}: {e}", s.tag()))?;
        ensure(seq == reference, || format!("{} disagrees with d1", s.tag()))?;
    }
    ensure(registry.iter().count() == 9, || "nine strategies".into())
}

fn enumeration_matches() -> Verdict {
    let reference = d1(6);
    for n in 1..=6 {
        let counted = joint_distribution(n).map_err(|e| e.to_string())?;
        ensure(&counted == reference.get(n).unwrap(), || format!("n={n} differs"))?;
    }
    Ok(())
}

fn count_identity() -> Verdict {
    let seq = d1(6);
    let tangents = tangent_numbers(7);
    let expected = [1u32, 4, 34, 496, 11056, 349504];
    for n in 1..=6 {
        let t = &tangents[n];
        let divisor = BigInt::from(1) << n;
        ensure((t % &divisor).is_zero(), || format!("T_{} not divisible by 2^{n}", 2 * n + 1))?;
        let total = seq.get(n).unwrap().total();
        ensure(total == t / &divisor, || format!("n={n}: total {total}"))?;
        ensure(total == BigInt::from(expected[n - 1]), || format!("n={n}: total {total}"))?;
    }
    Ok(())
}

fn symmetry() -> Verdict {
    for m in d1(8).iter() {
        counter_diagonal_symmetry(m).map_err(|c| c.to_string())?;
        let g = eoc_pom_polynomial(m).map_err(|e| e.to_string())?;
        ensure(g == g.transpose(), || format!("g_{} not symmetric", m.n()))?;
    }
    Ok(())
}

fn diagonals_and_crossings() -> Verdict {
    let seq = d1(8);
    for m in seq.iter() {
        sub_super_diagonals(m).map_err(|c| c.to_string())?;
        crossing_equalities(m).map_err(|c| c.to_string())?;
    }
    let m4 = seq.get(4).unwrap();
    let spot = [m4.get(4, 2) + m4.get(2, 4), m4.get(4, 3) + m4.get(2, 3), m4.get(3, 4) + m4.get(3, 2)];
    ensure(spot.iter().all(|v| v == &BigInt::from(20)), || format!("spot values {spot:?}"))
}

fn corrected_marginals() -> Verdict {
    let seq = d1(8);
    let triangle = poupard_triangle(8);
    let mut doubled_failures = 0;
    for n in 1..=8 {
        let m = seq.get(n).unwrap();
        marginal_triangle_alignment(m, &triangle).map_err(|c| c.to_string())?;
        if n > 1 {
            let prev = seq.get(n - 1).unwrap();
            marginal_difference_equations(m, prev).map_err(|c| c.to_string())?;
            if factor_two_initial_condition(m, prev).is_err() {
                doubled_failures += 1;
            }
        }
    }
    ensure(doubled_failures == 7, || format!("doubled initial value failed only {doubled_failures} of 7 times"))
}

fn bijection() -> Verdict {
    for n in 1..=5 {
        let mut images = std::collections::HashSet::new();
        let mut problem = None;
        for_each_tree(n, |t| match ha12_map(t) {
            Ok(image) => {
                if t.eoc().unwrap() != image.pom().unwrap() + 1 && problem.is_none() {
                    problem = Some(format!("eoc/pom shift fails for {t}"));
                }
                images.insert(image.to_string());
            }
            Err(e) => problem = problem.take().or(Some(e.to_string())),
        });
        if let Some(p) = problem {
            return Err(p);
        }
        ensure(BigInt::from(images.len()) == tree_count(n), || format!("n={n}: {} distinct images", images.len()))?;
    }
    Ok(())
}

fn at(grid: &Grid, m: i64, k: i64) -> BigInt {
    let s = grid.rows() as i64;
    if (1..=s).contains(&m) && (1..=s).contains(&k) {
        grid.get(m as usize - 1, k as usize - 1).clone()
    } else {
        BigInt::zero()
    }
}

fn census_identities() -> Verdict {
    for n in 2..=5 {
        let t = joint_distribution(n).map_err(|e| e.to_string())?.to_grid();
        let r1 = census_table(n, Census::R1Witness).map_err(|e| e.to_string())?;
        let outside = census_table(n, Census::R2WitnessOutside).map_err(|e| e.to_string())?;
        let inside = census_table(n, Census::R2WitnessInside).map_err(|e| e.to_string())?;
        for (m, k) in Region::L1.cells(n).chain(Region::U2.cells(n)) {
            let r: BigInt = at(&t, m, k) - at(&t, m + 1, k) * 2 + at(&t, m + 2, k) + at(&r1, m, k) * 2;
            ensure(r.is_zero(), || format!("n={n} ({m},{k}): residual {r}"))?;
        }
        for (m, k) in Region::L2.cells(n).chain(Region::U1.cells(n)) {
            let w = at(&outside, m, k) + at(&inside, m, k);
            let r: BigInt = at(&t, m, k) - at(&t, m, k + 1) * 2 + at(&t, m, k + 2) + w * 2;
            ensure(r.is_zero(), || format!("n={n} ({m},{k}): residual {r}"))?;
        }
    }
    let seq = d1(8);
    for n in 2..=8 {
        for r in Recurrence::ALL {
            recurrence_identity(seq.get(n).unwrap(), seq.get(n - 1).unwrap(), r).map_err(|c| c.to_string())?;
        }
    }
    Ok(())
}

fn generating_functions() -> Verdict {
    let seq = d1(6);
    let (lrhs, orhs) = (lambda_rhs(10), omega_rhs(10));
    ensure(lrhs.is_rational() && orhs.is_rational(), || "irrational coefficient".into())?;
    ensure(lambda_lhs(10, &seq).map_err(|e| e.to_string())? == lrhs, || "lower triangle series differ".into())?;
    ensure(omega_lhs(10, &seq).map_err(|e| e.to_string())? == orhs, || "upper triangle series differ".into())
}

fn grid_structure() -> Verdict {
    let seq = d1(reindex_required_n(5, 9).max(closed_forms_required_n(12)));
    for p in 0..=5 {
        let lam = reindex_lambda(p, 8, &seq).map_err(|e| e.to_string())?;
        let om = reindex_omega(p, 8, &seq).map_err(|e| e.to_string())?;
        ensure(is_poupard_matrix(&lam) && is_poupard_matrix(&om), || format!("p={p} grid is not a Poupard matrix"))?;
        for r in boundary_relations_check(p, 8, &seq).map_err(|e| e.to_string())? {
            ensure(r.passed(), || r.to_string())?;
        }
    }
    let records = lambda1_closed_forms(12, &seq).map_err(|e| e.to_string())?;
    for r in &records {
        ensure(r.passed(), || r.to_string())?;
    }
    ensure(records.len() >= 15, || format!("only {} closed-form records", records.len()))
}

fn tangents() -> Verdict {
    let t = tangent_numbers(7);
    let first: Vec<BigInt> = [1, 2, 16, 272, 7936].map(BigInt::from).to_vec();
    ensure(t[..5] == first[..], || format!("first five {:?}", &t[..5]))?;
    ensure(&t[5] >> 5 == tree_count(5) && (&t[5] % 32u32).is_zero(), || "T_11 / 2^5".into())?;
    ensure(&t[6] >> 6 == tree_count(6) && (&t[6] % 64u32).is_zero(), || "T_13 / 2^6".into())?;
    let seq = d1(1);
    ensure(seq.get(1).unwrap() == &DeltaMatrix::initial(), || "M_1".into())?;
    ensure(lambda_rhs(0).coefficient(0, 0, 0) == RootTwoScalar::integer(1), || "constant term".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("golden matrices n=1..5", golden_matrices, Some(1)),
        ("nine-way equivalence n<=8", nine_way_equivalence, Some(10)),
        ("enumeration equals build n<=6", enumeration_matches, Some(60)),
        ("entry totals equal T_(2n+1)/2^n", count_identity, None),
        ("counter-diagonal and polynomial symmetry n<=8", symmetry, None),
        ("sub/super diagonals and crossings n<=8", diagonals_and_crossings, None),
        ("corrected marginal equations n<=8", corrected_marginals, None),
        ("relabelling bijection n<=5", bijection, None),
        ("census identities n<=5, matrix forms n<=8", census_identities, None),
        ("generating functions at cap 10", generating_functions, Some(30)),
        ("reindexed grids and closed forms", grid_structure, None),
        ("tangent numbers", tangents, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(()), Some(secs)) if elapsed > Duration::from_secs(*secs) => {
                Err(format!("took {:.2}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (v, _) => v,
        };
        match verdict {
            Ok(()) => println!("criterion {:>2} PASS {name} ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({:.2}s): {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
