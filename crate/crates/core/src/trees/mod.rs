//! Strictly ordered binary trees: enumeration, the eoc/pom statistics, their
//! joint distribution, the relabelling bijection and structural censuses.

mod bijection;
mod census;
mod enumerate;
mod tree;

pub use bijection::ha12_map;
pub use census::{census_table, structural_census, Census};
pub use enumerate::{enumerate_trees, fold_trees, for_each_tree, tree_count};
pub use tree::{Tree, TreeStats};

use num_bigint::BigInt;

use crate::delta::DeltaMatrix;
use crate::{Error, Result};

/// Default ceiling on `n` for enumeration-backed computations.
pub const ENUMERATION_BOUND: usize = 7;

/// `#{t : eoc(t) = m, pom(t) = k}` as a `(2n)x(2n)` matrix.
pub fn joint_distribution(n: usize) -> Result<DeltaMatrix> {
    joint_distribution_bounded(n, ENUMERATION_BOUND)
}

pub fn joint_distribution_bounded(n: usize, bound: usize) -> Result<DeltaMatrix> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if n > bound {
        return Err(Error::EnumerationLimit { n, bound });
    }
    let size = 2 * n;
    let counts = fold_trees(
        n,
        || vec![0u64; size * size],
        |acc, t| {
            let (m, k) = (t.eoc().expect("n >= 1"), t.pom().expect("n >= 1"));
            acc[(m - 1) * size + (k - 1)] += 1;
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    DeltaMatrix::from_rows(n, counts.chunks(size).map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributions() {
        assert_eq!(joint_distribution(1).unwrap(), DeltaMatrix::initial());
        assert_eq!(joint_distribution(2).unwrap().to_csv(), "0,0,0,0\n0,0,1,0\n1,1,0,0\n0,1,0,0\n");
        assert_eq!(joint_distribution(4).unwrap().total(), BigInt::from(496));
        assert_eq!(joint_distribution(0), Err(Error::EmptyTree));
        assert_eq!(joint_distribution_bounded(5, 4), Err(Error::EnumerationLimit { n: 5, bound: 4 }));
    }
}
