use std::fmt::Write as _;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::grid::Grid;
use crate::poupard::{join, parse_number};
use crate::{Error, Result};

static ZERO: BigInt = BigInt::ZERO;

/// `(2n)x(2n)` matrix of `f_n(m, k)`, 1-based, with cached row and column sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatrix {
    n: usize,
    cells: Vec<BigInt>,
    row_sums: Vec<BigInt>,
    col_sums: Vec<BigInt>,
}

#[derive(Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<serde_json::Number>>,
}

impl DeltaMatrix {
    pub fn from_rows(n: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = 2 * n;
        if n == 0 {
            return Err(Error::DimensionMismatch("n must be positive".into()));
        }
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(Error::DimensionMismatch(format!("expected a {size}x{size} grid for n = {n}")));
        }
        Ok(Self::from_cells(n, rows.into_iter().flatten().collect()))
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<BigInt>) -> Self {
        let size = 2 * n;
        debug_assert_eq!(cells.len(), size * size);
        let row_sums = (0..size).map(|i| cells[i * size..(i + 1) * size].iter().sum()).collect();
        let col_sums = (0..size).map(|j| (0..size).map(|i| &cells[i * size + j]).sum()).collect();
        DeltaMatrix { n, cells, row_sums, col_sums }
    }

    /// `M_1 = [[0, 0], [1, 0]]`.
    pub fn initial() -> Self {
        Self::from_cells(1, vec![BigInt::zero(), BigInt::zero(), BigInt::one(), BigInt::zero()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    fn in_range(&self, i: i64) -> bool {
        i >= 1 && i <= self.size() as i64
    }

    /// `f_n(m, k)`; zero outside `[1, 2n]^2`.
    pub fn get(&self, m: i64, k: i64) -> &BigInt {
        if self.in_range(m) && self.in_range(k) {
            &self.cells[(m as usize - 1) * self.size() + (k as usize - 1)]
        } else {
            &ZERO
        }
    }

    /// `f_n(m, .)`
    pub fn row_sum(&self, m: i64) -> &BigInt {
        if self.in_range(m) {
            &self.row_sums[m as usize - 1]
        } else {
            &ZERO
        }
    }

    /// `f_n(., k)`
    pub fn col_sum(&self, k: i64) -> &BigInt {
        if self.in_range(k) {
            &self.col_sums[k as usize - 1]
        } else {
            &ZERO
        }
    }

    pub fn total(&self) -> BigInt {
        self.row_sums.iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.cells.chunks(self.size()).map(<[BigInt]>::to_vec).collect()
    }

    pub fn to_grid(&self) -> Grid {
        Grid::from_rows(self.rows()).expect("square")
    }

    /// Nonnegative entries and a zero diagonal.
    pub fn check_invariants(&self) -> Result<()> {
        for m in 1..=self.size() as i64 {
            for k in 1..=self.size() as i64 {
                let v = self.get(m, k);
                if v.sign() == Sign::Minus {
                    return Err(Error::InvariantViolation(format!("f_{}({m},{k}) = {v} is negative", self.n)));
                }
                if m == k && !v.is_zero() {
                    return Err(Error::InvariantViolation(format!("diagonal f_{}({m},{m}) = {v}", self.n)));
                }
            }
        }
        Ok(())
    }

    /// First `(m, k)` where the two matrices differ.
    pub fn first_difference(&self, other: &DeltaMatrix) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        let size = self.size();
        self.cells.iter().zip(&other.cells).position(|(a, b)| a != b).map(|idx| (idx / size + 1, idx % size + 1))
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self.cells.chunks(self.size()).map(|r| format!("[{}]", join(r, ","))).collect();
        format!("{{\"n\":{},\"rows\":[{}]}}", self.n, rows.join(","))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = parsed
            .rows
            .iter()
            .map(|r| r.iter().map(parse_number).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed.n, rows)
    }

    /// One matrix row per line, comma separated, trailing newline.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.cells.chunks(self.size()) {
            out.push_str(&join(row, ","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split(',')
                    .map(|cell| {
                        cell.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad CSV cell `{cell}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rows.len() % 2 != 0 {
            return Err(Error::Parse(format!("CSV must have an even, positive number of rows, got {}", rows.len())));
        }
        Self::from_rows(rows.len() / 2, rows)
    }

    /// Right-aligned columns separated by a single space.
    pub fn to_pretty(&self) -> String {
        let strings: Vec<String> = self.cells.iter().map(ToString::to_string).collect();
        let width = strings.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in strings.chunks(self.size()) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}
