//! Lower and upper triangles recorded as infinite grids.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::delta::DeltaSequence;
use crate::grid::Grid;
use crate::report::{CheckRecord, Counterexample, Params};
use crate::Result;

/// `lambda^(p)_{i,j} = f_n(i+j+2, j+1)` with `2n = p+i+j+1`, zero when `i+j = p (mod 2)`.
pub fn reindex_lambda(p: usize, size: usize, matrices: &DeltaSequence) -> Result<Grid> {
    let mut g = Grid::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            if (i + j) % 2 == p % 2 {
                continue;
            }
            let n = (p + i + j).div_ceil(2);
            g.set(i, j, matrices.get(n)?.get((i + j + 2) as i64, (j + 1) as i64).clone());
        }
    }
    Ok(g)
}

/// `omega^(p)_{i,j} = f_n(p+1, p+j+2)` with `2n = p+i+j+2`, zero when `i+j != p (mod 2)`.
pub fn reindex_omega(p: usize, size: usize, matrices: &DeltaSequence) -> Result<Grid> {
    let mut g = Grid::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            if (i + j) % 2 != p % 2 {
                continue;
            }
            let n = (p + i + j + 2) / 2;
            g.set(i, j, matrices.get(n)?.get((p + 1) as i64, (p + j + 2) as i64).clone());
        }
    }
    Ok(g)
}

/// Largest `n` touched by `reindex_lambda`/`reindex_omega` for `p` and `size`.
pub fn required_n(p: usize, size: usize) -> usize {
    (p + 2 * size + 2) / 2
}

fn compare(location: String, expected: &BigInt, actual: &BigInt) -> std::result::Result<(), Counterexample> {
    if expected == actual {
        Ok(())
    } else {
        Err(Counterexample::new(location, expected, actual))
    }
}

/// First two columns of `lambda^(p)` from `lambda^(1)`, and row 1 of `omega^(p)` from `omega^(1)`.
pub fn boundary_relations_check(p: usize, size: usize, matrices: &DeltaSequence) -> Result<Vec<CheckRecord>> {
    let base = reindex_lambda(1, size.max(p + 1) + 1, matrices)?;
    let lam = reindex_lambda(p, size, matrices)?;
    let omega_base = reindex_omega(1, size.max(p + 1), matrices)?;
    let omega = reindex_omega(p, size.max(2), matrices)?;
    let params = Params { p: Some(p), ..Params::default() };
    let lambda_record = CheckRecord::timed("poupard-matrices.lambda-boundary", params, || {
        if p == 0 {
            return Ok(());
        }
        for i in 0..size {
            compare(format!("lambda^({p})_({i},0)"), base.get(i, p - 1), lam.get(i, 0))?;
            let expected = base.get(i + 1, p - 1) + base.get(i, p);
            compare(format!("lambda^({p})_({i},1)"), &expected, lam.get(i, 1))?;
        }
        Ok(())
    });
    let omega_record = CheckRecord::timed("poupard-matrices.omega-boundary", params, || {
        for j in 0..size {
            let expected = if p == 0 { BigInt::zero() } else { omega_base.get(p, j).clone() };
            compare(format!("omega^({p})_(1,{j})"), &expected, omega.get(1, j))?;
        }
        Ok(())
    });
    Ok(vec![lambda_record, omega_record])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{build_sequence, StrategyRegistry};
    use crate::poupard::{first_poupard_violation, is_poupard_matrix};

    fn seq(n: usize) -> DeltaSequence {
        build_sequence(n, StrategyRegistry::catalog().get("d1").unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn printed_grids() {
        let s = seq(required_n(5, 8));
        let lam = reindex_lambda(1, 7, &s).unwrap();
        assert_eq!(lam.row(0), ints(&[1, 0, 0, 0, 0, 0, 0]).as_slice());
        assert_eq!(&lam.row(1)[..6], ints(&[0, 1, 0, 1, 0, 4]).as_slice());
        assert_eq!(&lam.row(2)[..5], ints(&[0, 0, 2, 0, 8]).as_slice());
        assert_eq!(&lam.row(3)[..4], ints(&[0, 1, 0, 10]).as_slice());
        let om = reindex_omega(1, 7, &s).unwrap();
        assert_eq!(om.row(1), ints(&[1, 0, 1, 0, 4, 0, 34]).as_slice());
        assert!(reindex_omega(0, 8, &s).unwrap().is_zero());
        for p in 0..=5 {
            assert!(is_poupard_matrix(&reindex_lambda(p, 8, &s).unwrap()), "lambda p={p}");
            assert!(is_poupard_matrix(&reindex_omega(p, 8, &s).unwrap()), "omega p={p}");
        }
    }

    #[test]
    fn perturbation_detected() {
        let s = seq(required_n(1, 8));
        let mut lam = reindex_lambda(1, 8, &s).unwrap();
        let bumped = lam.get(3, 3) + 1;
        lam.set(3, 3, bumped);
        let (i, j, _) = first_poupard_violation(&lam).unwrap();
        assert!(i <= 3 && j <= 3);
    }

    #[test]
    fn boundary_relations() {
        let s = seq(required_n(5, 9));
        for p in 0..=5 {
            for r in boundary_relations_check(p, 8, &s).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
        let base = reindex_lambda(1, 4, &s).unwrap();
        let two = reindex_lambda(2, 4, &s).unwrap();
        assert_eq!(two.get(0, 0), base.get(0, 1));
        assert_eq!(two.get(1, 1), &(base.get(2, 1) + base.get(1, 2)));
    }

    #[test]
    fn missing_matrices() {
        assert!(reindex_lambda(1, 8, &seq(3)).is_err());
    }
}
