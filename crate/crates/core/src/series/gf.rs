//! The trivariate generating functions of the lower and upper triangles.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::RootTwoScalar;
use super::tri::{factorial, LinearForm, TriSeries};
use crate::delta::DeltaSequence;
use crate::Result;

fn sqrt2_times(form: LinearForm) -> LinearForm {
    form.scale(&RootTwoScalar::sqrt2())
}

/// `1 / (2 cos^2((x+y+z)/sqrt2))`
fn half_sec_squared(cap: usize) -> TriSeries {
    let c = TriSeries::cos(&LinearForm::sum().scale(&RootTwoScalar::inv_sqrt2()), cap);
    c.mul(&c).expect("equal caps").scale(&RootTwoScalar::integer(2)).reciprocal().expect("unit constant term")
}

/// `(cos sqrt2 x + cos sqrt2 y cos sqrt2 z) / (2 cos^2((x+y+z)/sqrt2))`
pub fn lambda_rhs(cap: usize) -> TriSeries {
    let cx = TriSeries::cos(&sqrt2_times(LinearForm::x()), cap);
    let cy = TriSeries::cos(&sqrt2_times(LinearForm::y()), cap);
    let cz = TriSeries::cos(&sqrt2_times(LinearForm::z()), cap);
    let numerator = cx.add(&cy.mul(&cz).expect("equal caps")).expect("equal caps");
    numerator.mul(&half_sec_squared(cap)).expect("equal caps")
}

/// `sin sqrt2 x sin sqrt2 z / (2 cos^2((x+y+z)/sqrt2))`
pub fn omega_rhs(cap: usize) -> TriSeries {
    let sx = TriSeries::sin(&sqrt2_times(LinearForm::x()), cap);
    let sz = TriSeries::sin(&sqrt2_times(LinearForm::z()), cap);
    sx.mul(&sz).expect("equal caps").mul(&half_sec_squared(cap)).expect("equal caps")
}

fn egf_term(value: &BigInt, i: usize, j: usize, k: usize) -> RootTwoScalar {
    RootTwoScalar::rational(BigRational::new(value.clone(), factorial(i) * factorial(j) * factorial(k)))
}

/// Largest `n` whose matrix contributes a monomial of total degree `2n-2 <= cap`.
pub fn required_n(cap: usize) -> usize {
    cap / 2 + 1
}

/// `sum f_n(m,k) x^{m-k-1} y^{k-1} z^{2n-m} / ((m-k-1)! (k-1)! (2n-m)!)` over `k+1 <= m`.
pub fn lambda_lhs(cap: usize, matrices: &DeltaSequence) -> Result<TriSeries> {
    let mut s = TriSeries::zero(cap);
    for n in 1..=required_n(cap) {
        let mat = matrices.get(n)?;
        let size = 2 * n;
        for m in 2..=size {
            for k in 1..m {
                let (i, j, l) = (m - k - 1, k - 1, size - m);
                s.set(i, j, l, egf_term(mat.get(m as i64, k as i64), i, j, l));
            }
        }
    }
    Ok(s)
}

/// `sum f_n(m,k) x^{2n-k} y^{k-m-1} z^{m-1} / ((2n-k)! (k-m-1)! (m-1)!)` over `m+1 <= k`.
pub fn omega_lhs(cap: usize, matrices: &DeltaSequence) -> Result<TriSeries> {
    let mut s = TriSeries::zero(cap);
    for n in 1..=required_n(cap) {
        let mat = matrices.get(n)?;
        let size = 2 * n;
        for k in 2..=size {
            for m in 1..k {
                let (i, j, l) = (size - k, k - m - 1, m - 1);
                s.set(i, j, l, egf_term(mat.get(m as i64, k as i64), i, j, l));
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{build_sequence, StrategyRegistry};
    use crate::series::Var;
    use num_traits::One;

    fn seq(n: usize) -> DeltaSequence {
        build_sequence(n, StrategyRegistry::catalog().get("d1").unwrap()).unwrap()
    }

    #[test]
    fn constant_terms() {
        assert_eq!(lambda_rhs(0).coefficient(0, 0, 0), RootTwoScalar::one());
        assert!(omega_rhs(0).is_zero());
        assert_eq!(lambda_rhs(0).dump(), "0 0 0 1/1 0/1\n");
    }

    #[test]
    fn lhs_spot_values() {
        let s = seq(4);
        let lam = lambda_lhs(6, &s).unwrap();
        assert_eq!(lam.egf_coefficient(1, 0, 5), RootTwoScalar::integer(4));
        assert_eq!(lam.coefficient(0, 0, 0), RootTwoScalar::one());
        let om = omega_lhs(6, &s).unwrap();
        assert_eq!(om.egf_coefficient(1, 0, 1), RootTwoScalar::one());
        assert!(lambda_lhs(8, &s).is_err());
    }

    #[test]
    fn both_sides_agree() {
        let cap = 6;
        let s = seq(required_n(cap));
        let rhs = lambda_rhs(cap);
        assert!(rhs.is_rational());
        assert_eq!(lambda_lhs(cap, &s).unwrap(), rhs);
        assert_eq!(rhs.swap_vars(Var::Y, Var::Z), rhs);
        let orhs = omega_rhs(cap);
        assert!(orhs.is_rational());
        assert_eq!(omega_lhs(cap, &s).unwrap(), orhs);
        assert_eq!(orhs.swap_vars(Var::X, Var::Z), orhs);
    }
}
