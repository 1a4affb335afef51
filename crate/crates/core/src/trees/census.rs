//! Counts of trees with the local structure behind the two partial
//! difference equations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::enumerate::fold_trees;
use super::tree::Tree;
use crate::grid::Grid;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Census {
    /// `eoc = m+1`, `pom = k`, and `m` is the parent of `m+1` and of the leaf `m+2`.
    R1Witness,
    /// `eoc = m`, `pom = k+1`, `k+1` is a child of `k` whose children are the
    /// leaf `k+2` and `2n+1`, and `m` lies outside the subtree of `k`.
    R2WitnessOutside,
    /// `eoc = m`, `pom = k+1`, `k+1` and the leaf `k+2` are both children of
    /// `k`, and `m` lies inside the subtree of `k`.
    R2WitnessInside,
}

impl Census {
    pub const ALL: [Census; 3] = [Census::R1Witness, Census::R2WitnessOutside, Census::R2WitnessInside];

    pub fn tag(self) -> &'static str {
        match self {
            Census::R1Witness => "r1-witness",
            Census::R2WitnessOutside => "r2-outside",
            Census::R2WitnessInside => "r2-inside",
        }
    }

    /// The single `(m, k)` a tree can witness, if any.
    pub fn cell(self, t: &Tree) -> Option<(usize, usize)> {
        let eoc = t.eoc().ok()?;
        let pom = t.pom().ok()?;
        match self {
            Census::R1Witness => {
                let m = eoc - 1;
                let ok = m >= 1 && t.parent(m + 1) == Some(m) && t.parent(m + 2) == Some(m) && t.is_leaf(m + 2);
                ok.then_some((m, pom))
            }
            Census::R2WitnessOutside => {
                let k = pom.checked_sub(1).filter(|&k| k >= 1)?;
                let ok = t.parent(k + 1) == Some(k)
                    && t.children(k + 1).map(|(a, b)| (a.min(b), a.max(b))) == Some((k + 2, t.size()))
                    && t.is_leaf(k + 2)
                    && !t.in_subtree(k, eoc);
                ok.then_some((eoc, k))
            }
            Census::R2WitnessInside => {
                let k = pom.checked_sub(1).filter(|&k| k >= 1)?;
                let ok = t.parent(k + 1) == Some(k)
                    && t.parent(k + 2) == Some(k)
                    && t.is_leaf(k + 2)
                    && t.in_subtree(k, eoc);
                ok.then_some((eoc, k))
            }
        }
    }

    pub fn witnesses(self, t: &Tree, m: usize, k: usize) -> bool {
        self.cell(t) == Some((m, k))
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Census {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Census::ALL
            .into_iter()
            .find(|c| c.tag() == lower || format!("{c:?}").to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::UnknownTag { kind: "census condition", tag: s.into() })
    }
}

/// `(2n)x(2n)` grid (0-based at `(m-1, k-1)`) of the census counts for every cell.
pub fn census_table(n: usize, condition: Census) -> Result<Grid> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let size = 2 * n;
    let counts = fold_trees(
        n,
        || vec![0u64; size * size],
        |acc, t| {
            if let Some((m, k)) = condition.cell(t) {
                if m <= size && k <= size {
                    acc[(m - 1) * size + (k - 1)] += 1;
                }
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(Grid::from_fn(size, size, |i, j| BigInt::from(counts[i * size + j])))
}

/// Number of trees on `2n+1` labels that witness `condition` at `(m, k)`.
pub fn structural_census(n: usize, m: usize, k: usize, condition: Census) -> Result<BigInt> {
    let table = census_table(n, condition)?;
    Ok(if m >= 1 && k >= 1 && m <= 2 * n && k <= 2 * n { table.get(m - 1, k - 1).clone() } else { BigInt::from(0) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_counts() {
        assert_eq!(structural_census(3, 3, 1, Census::R1Witness).unwrap(), BigInt::from(1));
        assert_eq!(structural_census(3, 2, 3, Census::R2WitnessInside).unwrap(), BigInt::from(0));
        let pair = structural_census(2, 4, 1, Census::R2WitnessOutside).unwrap()
            + structural_census(2, 4, 1, Census::R2WitnessInside).unwrap();
        assert_eq!(pair, BigInt::from(1));
        assert!(structural_census(0, 1, 1, Census::R1Witness).is_err());
    }

    #[test]
    fn tags() {
        assert_eq!("R2WitnessInside".parse::<Census>().unwrap(), Census::R2WitnessInside);
        assert_eq!("r1-witness".parse::<Census>().unwrap(), Census::R1Witness);
        assert!("r3".parse::<Census>().is_err());
    }
}
