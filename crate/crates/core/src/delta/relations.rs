//! Index regions, the four partial difference equations and the boundary
//! conditions that seed each build.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::DeltaMatrix;
use crate::Error;

/// The four index triangles of the `(2n)x(2n)` square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `2 <= k+1 <= m <= 2n-2`
    L1,
    /// `4 <= k+3 <= m <= 2n`
    L2,
    /// `2 <= m+1 <= k <= 2n-2`
    U1,
    /// `4 <= m+3 <= k <= 2n`
    U2,
}

impl Region {
    pub const ALL: [Region; 4] = [Region::L1, Region::L2, Region::U1, Region::U2];

    pub fn contains(self, n: usize, m: i64, k: i64) -> bool {
        let two_n = 2 * n as i64;
        match self {
            Region::L1 => 1 <= k && k < m && m <= two_n - 2,
            Region::L2 => 4 <= k + 3 && k + 3 <= m && m <= two_n,
            Region::U1 => 1 <= m && m < k && k <= two_n - 2,
            Region::U2 => 4 <= m + 3 && m + 3 <= k && k <= two_n,
        }
    }

    /// Cells of the region in row-major order.
    pub fn cells(self, n: usize) -> impl Iterator<Item = (i64, i64)> {
        let size = 2 * n as i64;
        (1..=size).flat_map(move |m| (1..=size).map(move |k| (m, k))).filter(move |&(m, k)| self.contains(n, m, k))
    }
}

/// One linear relation `f(c0) - 2 f(c1) + f(c2) + constant = 0` over cells of `M_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub cells: [(i64, i64); 3],
    pub constant: BigInt,
}

impl Instance {
    pub const COEFFICIENTS: [i64; 3] = [1, -2, 1];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// `Delta_m^2 f_n(m,k) + 2 f_{n-1}(m,k) = 0` on L1.
    R1,
    /// `Delta_k^2 f_n(m,k) + 2 f_{n-1}(m,k) = 0` on U1.
    R2,
    /// `Delta_m^2 f_n(m,k) + 2 f_{n-1}(m,k-2) = 0` on U2.
    R3,
    /// `Delta_k^2 f_n(m,k) + 2 f_{n-1}(m-2,k) = 0` on L2.
    R4,
}

impl Recurrence {
    pub const ALL: [Recurrence; 4] = [Recurrence::R1, Recurrence::R2, Recurrence::R3, Recurrence::R4];

    pub fn region(self) -> Region {
        match self {
            Recurrence::R1 => Region::L1,
            Recurrence::R2 => Region::U1,
            Recurrence::R3 => Region::U2,
            Recurrence::R4 => Region::L2,
        }
    }

    fn stencil(self, m: i64, k: i64) -> [(i64, i64); 3] {
        match self {
            Recurrence::R1 | Recurrence::R3 => [(m, k), (m + 1, k), (m + 2, k)],
            Recurrence::R2 | Recurrence::R4 => [(m, k), (m, k + 1), (m, k + 2)],
        }
    }

    fn previous_cell(self, m: i64, k: i64) -> (i64, i64) {
        match self {
            Recurrence::R1 | Recurrence::R2 => (m, k),
            Recurrence::R3 => (m, k - 2),
            Recurrence::R4 => (m - 2, k),
        }
    }

    pub fn instance(self, m: i64, k: i64, prev: &DeltaMatrix) -> Instance {
        let (pm, pk) = self.previous_cell(m, k);
        Instance { cells: self.stencil(m, k), constant: prev.get(pm, pk) * 2 }
    }

    /// Every instance of this relation for `M_n` (`n = prev.n() + 1`).
    pub fn instances(self, prev: &DeltaMatrix) -> Vec<Instance> {
        let n = prev.n() + 1;
        self.region().cells(n).map(|(m, k)| self.instance(m, k, prev)).collect()
    }

    /// Left-hand side of the relation at `(m, k)` evaluated on actual matrices.
    pub fn residual(self, m: i64, k: i64, current: &DeltaMatrix, prev: &DeltaMatrix) -> BigInt {
        let inst = self.instance(m, k, prev);
        let [a, b, c] = inst.cells;
        current.get(a.0, a.1) - current.get(b.0, b.1) * 2 + current.get(c.0, c.1) + inst.constant
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Boundary data of `M_n` expressed through the marginals of `M_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// Columns `2n-1` and `2n`.
    I1,
    /// Rows `2n-1` and `2n`.
    I2,
    /// Rows 1 and 2.
    I3,
    /// Columns 1 and 2.
    I4,
    /// The 2x2 south-west corner.
    SW,
    /// The 2x2 north-east corner.
    NE,
}

impl Boundary {
    pub const ALL: [Boundary; 6] = [Boundary::I1, Boundary::I2, Boundary::I3, Boundary::I4, Boundary::SW, Boundary::NE];

    /// Cell values this condition prescribes for `M_n`, `n = prev.n() + 1`.
    pub fn assignments(self, prev: &DeltaMatrix) -> Vec<((usize, usize), BigInt)> {
        let size = 2 * (prev.n() + 1);
        let s = size as i64;
        let row = |i: i64| prev.row_sum(i).clone();
        let col = |j: i64| prev.col_sum(j).clone();
        let mut out = Vec::new();
        let mut put = |m: i64, k: i64, v: BigInt| out.push(((m as usize, k as usize), v));
        match self {
            Boundary::I1 => {
                for m in 1..=s {
                    put(m, s, BigInt::zero());
                    put(m, s - 1, row(m));
                }
            }
            Boundary::I2 => {
                for k in 1..=s {
                    put(s, k, row(k));
                    put(s - 1, k, row(k) + col(k));
                }
            }
            Boundary::I3 => {
                for k in 1..=s {
                    put(1, k, BigInt::zero());
                    put(2, k, row(k - 1));
                }
            }
            Boundary::I4 => {
                for m in 1..=s {
                    put(m, 1, row(m - 1));
                    let second = if m >= 3 { row(m - 1) + row(m - 2) } else { BigInt::zero() };
                    put(m, 2, second);
                }
            }
            Boundary::SW => {
                put(s - 1, 1, col(1));
                put(s - 1, 2, row(2) + col(2));
                put(s, 1, BigInt::zero());
                put(s, 2, col(1));
            }
            Boundary::NE => {
                put(1, s - 1, BigInt::zero());
                put(1, s, BigInt::zero());
                put(2, s - 1, row(2));
                put(2, s, BigInt::zero());
            }
        }
        out
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Recurrence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Recurrence::ALL
            .into_iter()
            .find(|r| r.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTag { kind: "recurrence", tag: s.into() })
    }
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Boundary::ALL
            .into_iter()
            .find(|b| b.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTag { kind: "boundary condition", tag: s.into() })
    }
}
