//! Bivariate closed forms of the reindexed grids, checked as exact series.

use num_rational::BigRational;

use super::reindex::{reindex_lambda, reindex_omega};
use super::scalar::RootTwoScalar;
use super::tri::{factorial, monomials, LinearForm, TriSeries, Var};
use crate::delta::DeltaSequence;
use crate::grid::Grid;
use crate::report::{CheckRecord, Counterexample, Outcome, Params};
use crate::Result;

/// Highest `p` for which the column and row closed forms are checked.
pub const MAX_P: usize = 4;

/// Matrices needed by [`lambda1_closed_forms`] at `cap`.
pub fn required_n(cap: usize) -> usize {
    cap.max(MAX_P) + 3
}

/// First monomial where two series differ.
pub fn series_equal(left: &TriSeries, right: &TriSeries) -> Outcome {
    if left.cap() != right.cap() {
        return Err(Counterexample::new("cap", left.cap(), right.cap()));
    }
    for (i, j, k) in monomials(left.cap()) {
        let (a, b) = (left.coefficient(i, j, k), right.coefficient(i, j, k));
        if a != b {
            return Err(Counterexample::new(format!("x^{i} y^{j} z^{k}"), b, a));
        }
    }
    Ok(())
}

fn r2(form: LinearForm) -> LinearForm {
    form.scale(&RootTwoScalar::sqrt2())
}

fn over_r2(form: LinearForm) -> LinearForm {
    form.scale(&RootTwoScalar::inv_sqrt2())
}

fn x_plus_y() -> LinearForm {
    LinearForm::x().add(&LinearForm::y())
}

fn x_minus_y() -> LinearForm {
    LinearForm::x().add(&LinearForm::y().scale(&RootTwoScalar::integer(-1)))
}

fn mul(a: &TriSeries, b: &TriSeries) -> TriSeries {
    a.mul(b).expect("equal caps")
}

fn add(a: &TriSeries, b: &TriSeries) -> TriSeries {
    a.add(b).expect("equal caps")
}

fn recip(a: &TriSeries) -> TriSeries {
    a.reciprocal().expect("unit constant term")
}

/// `sum_i c_i t^i / i!` as raw coefficients.
fn egf_coefficients(values: impl Iterator<Item = num_bigint::BigInt>) -> Vec<RootTwoScalar> {
    values.enumerate().map(|(i, v)| RootTwoScalar::rational(BigRational::new(v, factorial(i)))).collect()
}

fn column(grid: &Grid, j: usize, len: usize) -> Vec<RootTwoScalar> {
    egf_coefficients((0..len).map(|i| grid.get(i, j).clone()))
}

fn row(grid: &Grid, i: usize, len: usize) -> Vec<RootTwoScalar> {
    egf_coefficients((0..len).map(|j| grid.get(i, j).clone()))
}

/// Closed forms of the first lower grid, the first upper grid, and the
/// column/row expressions of the higher grids, all to total degree `cap`.
pub fn lambda1_closed_forms(cap: usize, matrices: &DeltaSequence) -> Result<Vec<CheckRecord>> {
    let size = cap.max(MAX_P) + 1;
    let lam1 = reindex_lambda(1, size, matrices)?;
    let om1 = reindex_omega(1, size, matrices)?;
    let grid1 = TriSeries::from_egf_grid(&lam1, cap)?;
    let omega_grid1 = TriSeries::from_egf_grid(&om1, cap)?;
    let params = Params::cap(cap);

    let cos_half_sum = TriSeries::cos(&over_r2(x_plus_y()), cap);
    let cos_sq = mul(&cos_half_sum, &cos_half_sum);
    let (sin_x, sin_y) = (TriSeries::sin(&r2(LinearForm::x()), cap), TriSeries::sin(&r2(LinearForm::y()), cap));
    let (cos_x, cos_y) = (TriSeries::cos(&r2(LinearForm::x()), cap), TriSeries::cos(&r2(LinearForm::y()), cap));
    let cosine_ratio = mul(&TriSeries::cos(&over_r2(x_minus_y()), cap), &recip(&cos_half_sum));

    let mut records = vec![
        CheckRecord::timed("closed-forms.initial-values", params, || {
            series_equal(&grid1.at_zero(Var::Y), &TriSeries::one(cap))?;
            series_equal(&grid1.at_zero(Var::X), &TriSeries::one(cap))
        }),
        CheckRecord::timed("closed-forms.cosine-ratio", params, || series_equal(&cosine_ratio, &grid1)),
        CheckRecord::timed("closed-forms.sine-ratio", params, || {
            let sin_sum = TriSeries::sin(&r2(x_plus_y()), cap);
            series_equal(&mul(&cosine_ratio, &sin_sum), &add(&sin_x, &sin_y))
        }),
        CheckRecord::timed("closed-forms.half-angle", params, || {
            let denom = recip(&cos_sq.scale(&RootTwoScalar::integer(2)));
            series_equal(&mul(&add(&cos_x, &cos_y), &denom), &cosine_ratio)
        }),
        CheckRecord::timed("closed-forms.tangent", params, || {
            let tan = mul(&TriSeries::sin(&over_r2(x_plus_y()), cap), &recip(&cos_half_sum));
            series_equal(&add(&cos_y, &mul(&tan, &sin_y)), &grid1)
        }),
        CheckRecord::timed("closed-forms.upper-first", params, || {
            let denom = recip(&cos_sq.scale(&RootTwoScalar::sqrt2()));
            series_equal(&mul(&sin_x, &denom), &omega_grid1)
        }),
    ];

    for p in 0..=MAX_P {
        let params = Params { p: Some(p), cap: Some(cap), n: None };
        if p >= 1 {
            let grid = TriSeries::from_egf_grid(&reindex_lambda(p, size, matrices)?, cap)?;
            let left = TriSeries::compose_univariate(&column(&lam1, p - 1, cap + 1), &x_plus_y(), cap);
            let right = TriSeries::compose_univariate(&column(&lam1, p, cap + 1), &x_plus_y(), cap);
            records.push(CheckRecord::timed("closed-forms.lower-columns", params, || {
                let expected = add(&mul(&left, &cos_y), &mul(&right, &sin_y).scale(&RootTwoScalar::inv_sqrt2()));
                series_equal(&expected, &grid)
            }));
        }
        let om = reindex_omega(p, size, matrices)?;
        let grid = TriSeries::from_egf_grid(&om, cap)?;
        let first_row = TriSeries::compose_univariate(&row(&om, 1, cap + 1), &x_plus_y(), cap);
        records.push(CheckRecord::timed("closed-forms.upper-rows", params, || {
            let expected = mul(&sin_x, &first_row).scale(&RootTwoScalar::inv_sqrt2());
            series_equal(&expected, &grid)
        }));
    }
    Ok(records)
}

/// `sqrt2 tan(x / sqrt2)` to total degree `cap`.
pub fn root_two_tangent(cap: usize) -> TriSeries {
    let hx = over_r2(LinearForm::x());
    mul(&TriSeries::sin(&hx, cap), &recip(&TriSeries::cos(&hx, cap))).scale(&RootTwoScalar::sqrt2())
}

/// Column 1 of the first lower grid has EGF `sqrt2 tan(x/sqrt2)`; row 1 of the
/// first upper grid has EGF `1/cos^2(y/sqrt2)`.
pub fn edge_generating_functions(cap: usize, matrices: &DeltaSequence) -> Result<Outcome> {
    let lam1 = reindex_lambda(1, cap + 1, matrices)?;
    let om1 = reindex_omega(1, cap + 2, matrices)?;
    let tan = root_two_tangent(cap);
    let c = TriSeries::cos(&over_r2(LinearForm::x()), cap);
    let sec_sq = recip(&mul(&c, &c));
    Ok((|| {
        for d in 0..=cap {
            let col = RootTwoScalar::integer(lam1.get(d, 1).clone());
            let egf = tan.egf_coefficient(d, 0, 0);
            if col != egf {
                return Err(Counterexample::new(format!("lambda^(1)_({d},1)"), egf, col));
            }
            let rw = RootTwoScalar::integer(om1.get(1, d).clone());
            let egf = sec_sq.egf_coefficient(d, 0, 0);
            if rw != egf {
                return Err(Counterexample::new(format!("omega^(1)_(1,{d})"), egf, rw));
            }
        }
        Ok(())
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{build_sequence, StrategyRegistry};
    use num_traits::One;

    #[test]
    fn closed_forms_hold() {
        let cap = 8;
        let s = build_sequence(required_n(cap), StrategyRegistry::catalog().get("d1").unwrap()).unwrap();
        for r in lambda1_closed_forms(cap, &s).unwrap() {
            assert!(r.passed(), "{r}");
        }
        edge_generating_functions(cap, &s).unwrap().unwrap();
        let g = TriSeries::from_egf_grid(&reindex_lambda(1, cap + 1, &s).unwrap(), cap).unwrap();
        assert_eq!(g.egf_coefficient(1, 1, 0), RootTwoScalar::one());
    }

    #[test]
    fn detects_difference() {
        let a = TriSeries::one(2);
        let b = TriSeries::monomial(2, 0, 1, 0, RootTwoScalar::one()).add(&a).unwrap();
        let c = series_equal(&a, &b).unwrap_err();
        assert_eq!(c.location, "x^0 y^1 z^0");
    }
}
