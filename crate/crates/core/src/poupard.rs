//! The one-dimensional Poupard triangle, tangent numbers and Poupard matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::grid::Grid;
use crate::series::{LinearForm, TriSeries, TrigKind};
use crate::{Error, Result};

/// Rows `f_n(1..=2n+1)` for `n = 0..=n_max`, stored 1-based through [`Triangle::get`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    rows: Vec<Vec<serde_json::Number>>,
}

impl Triangle {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `f_n(m)`, zero outside `1..=2n+1`.
    pub fn get(&self, n: usize, m: i64) -> BigInt {
        match self.rows.get(n) {
            Some(row) if m >= 1 && (m as usize) <= row.len() => row[m as usize - 1].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("[{}]", join(r, ","))).collect();
        format!("{{\"rows\":[{}]}}", rows.join(","))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: TriangleJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = parsed
            .rows
            .into_iter()
            .map(|r| r.iter().map(parse_number).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("triangle has no rows".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != 2 * n + 1 {
                return Err(Error::Parse(format!("row {n} has {} entries, expected {}", row.len(), 2 * n + 1)));
            }
        }
        Ok(Triangle { rows })
    }

    /// OEIS-style b-file: `index value` per line, rows read left to right, index from 0.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (index, value) in self.rows.iter().flatten().enumerate() {
            out.push_str(&format!("{index} {value}\n"));
        }
        out
    }
}

pub(crate) fn join(values: &[BigInt], sep: &str) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub(crate) fn parse_number(n: &serde_json::Number) -> Result<BigInt> {
    n.to_string().parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {n}")))
}

/// Rows `0..=n_max` of the triangle, each filled left to right from
/// `f_n(1) = 0`, `f_n(2) = sum f_{n-1}` via `f_n(m+2) = 2 f_n(m+1) - f_n(m) - 2 f_{n-1}(m)`.
pub fn poupard_triangle(n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(2 * n + 1);
        row.push(BigInt::zero());
        row.push(prev.iter().sum());
        for m in 1..=(2 * n - 1) {
            // 1-based m maps to index m-1
            let next = BigInt::from(2) * &row[m] - &row[m - 1] - BigInt::from(2) * &prev[m - 1];
            row.push(next);
        }
        rows.push(row);
    }
    Triangle { rows }
}

/// `T_1, T_3, ..., T_{2 count - 1}` from the exact expansion of `sin u / cos u`.
pub fn tangent_numbers(count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let cap = 2 * count - 1;
    let u = LinearForm::x();
    let sin = TriSeries::trig(TrigKind::Sin, &u, cap);
    let cos = TriSeries::trig(TrigKind::Cos, &u, cap);
    let tan = sin.mul(&cos.reciprocal().expect("cos has unit constant term")).expect("equal caps");
    (0..count)
        .map(|i| {
            let d = 2 * i + 1;
            let c = tan.egf_coefficient(d, 0, 0);
            assert!(c.is_rational(), "tan has rational coefficients");
            let r = c.rational_part();
            assert!(r.is_integer(), "tangent number T_{d} is not an integer");
            r.to_integer()
        })
        .collect()
}

/// First cell `(i, j)` (0-based) where
/// `g[i][j+2] - 2 g[i+1][j+1] + g[i+2][j] + 2 g[i][j] != 0`, with the residual.
pub fn first_poupard_violation(grid: &Grid) -> Option<(usize, usize, BigInt)> {
    if grid.rows() < 3 || grid.cols() < 3 {
        return None;
    }
    for i in 0..grid.rows() - 2 {
        for j in 0..grid.cols() - 2 {
            let residual = grid.get(i, j + 2) - BigInt::from(2) * grid.get(i + 1, j + 1)
                + grid.get(i + 2, j)
                + BigInt::from(2) * grid.get(i, j);
            if !residual.is_zero() {
                return Some((i, j, residual));
            }
        }
    }
    None
}

pub fn is_poupard_matrix(grid: &Grid) -> bool {
    first_poupard_violation(grid).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn table_rows() {
        let t = poupard_triangle(4);
        assert_eq!(t.row(0), ints(&[1]).as_slice());
        assert_eq!(t.row(1), ints(&[0, 1, 0]).as_slice());
        assert_eq!(t.row(2), ints(&[0, 1, 2, 1, 0]).as_slice());
        assert_eq!(t.row(3), ints(&[0, 4, 8, 10, 8, 4, 0]).as_slice());
        assert_eq!(t.row(4), ints(&[0, 34, 68, 94, 104, 94, 68, 34, 0]).as_slice());
    }

    #[test]
    fn row_invariants() {
        let t = poupard_triangle(12);
        let tangents = tangent_numbers(13);
        for n in 1..=12 {
            let row = t.row(n);
            assert!(row[0].is_zero() && row[2 * n].is_zero());
            for m in 0..row.len() {
                assert_eq!(row[m], row[row.len() - 1 - m], "row {n} symmetric");
            }
            for m in 1..=(2 * n - 1) as i64 {
                let d2: BigInt = t.get(n, m + 2) - 2 * t.get(n, m + 1) + t.get(n, m);
                let residual: BigInt = d2 + 2 * t.get(n - 1, m);
                assert!(residual.is_zero());
            }
            assert_eq!(t.row_sum(n), &tangents[n] >> n);
        }
    }

    #[test]
    fn row_five_sum() {
        assert_eq!(poupard_triangle(5).row_sum(5), BigInt::from(11056));
    }

    #[test]
    fn tangent_values() {
        let t = tangent_numbers(7);
        assert_eq!(t[..5], ints(&[1, 2, 16, 272, 7936])[..]);
        assert_eq!(t[5], BigInt::from(353792));
        assert_eq!(t[6], BigInt::from(22368256));
        for (k, tk) in t.iter().enumerate() {
            assert!((tk % (BigInt::one() << k)).is_zero());
        }
    }

    #[test]
    fn json_and_bfile() {
        let t = poupard_triangle(2);
        let json = t.to_json();
        assert_eq!(json, r#"{"rows":[[1],[0,1,0],[0,1,2,1,0]]}"#);
        assert_eq!(Triangle::from_json(&json).unwrap(), t);
        assert_eq!(t.to_bfile().lines().nth(5), Some("5 1"));
        assert!(Triangle::from_json(r#"{"rows":[[1],[0,1]]}"#).is_err());
    }

    #[test]
    fn poupard_predicate() {
        let mut g = Grid::zeros(6, 6);
        assert!(is_poupard_matrix(&g));
        g.set(2, 2, BigInt::one());
        let (i, j, residual) = first_poupard_violation(&g).unwrap();
        assert_eq!((i, j, residual), (0, 2, BigInt::one()));
        assert!(is_poupard_matrix(&Grid::zeros(2, 2)));
    }
}
