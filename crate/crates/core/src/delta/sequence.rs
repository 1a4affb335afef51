use super::matrix::DeltaMatrix;
use super::strategy::BuildStrategy;
use crate::{Error, Result};

/// `M_1, ..., M_{n_max}` built by one strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSequence {
    matrices: Vec<DeltaMatrix>,
}

impl DeltaSequence {
    /// Wraps matrices that must be `M_1, M_2, ...` in order.
    pub fn from_matrices(matrices: Vec<DeltaMatrix>) -> Result<Self> {
        for (i, m) in matrices.iter().enumerate() {
            if m.n() != i + 1 {
                return Err(Error::DimensionMismatch(format!("position {} holds M_{}", i + 1, m.n())));
            }
        }
        Ok(DeltaSequence { matrices })
    }

    pub fn max_n(&self) -> usize {
        self.matrices.len()
    }

    pub fn get(&self, n: usize) -> Result<&DeltaMatrix> {
        n.checked_sub(1).and_then(|i| self.matrices.get(i)).ok_or(Error::InsufficientMatrices { n })
    }

    pub fn iter(&self) -> impl Iterator<Item = &DeltaMatrix> {
        self.matrices.iter()
    }

    pub fn into_vec(self) -> Vec<DeltaMatrix> {
        self.matrices
    }
}

pub fn build_sequence(n_max: usize, strategy: &dyn BuildStrategy) -> Result<DeltaSequence> {
    let mut matrices = Vec::with_capacity(n_max);
    if n_max >= 1 {
        matrices.push(DeltaMatrix::initial());
    }
    for _ in 1..n_max {
        let next = strategy.next_matrix(matrices.last().expect("nonempty"))?;
        matrices.push(next);
    }
    Ok(DeltaSequence { matrices })
}

pub fn build_matrix(n: usize, strategy: &dyn BuildStrategy) -> Result<DeltaMatrix> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(build_sequence(n, strategy)?.matrices.pop().expect("n >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::StrategyRegistry;
    use num_bigint::BigInt;

    #[test]
    fn fig_values() {
        let reg = StrategyRegistry::catalog();
        let m4 = build_matrix(4, reg.get("d2").unwrap()).unwrap();
        assert_eq!(m4.get(4, 5), &BigInt::from(28));
        let d1 = build_matrix(5, reg.get("d1").unwrap()).unwrap();
        let d9 = build_matrix(5, reg.get("d9").unwrap()).unwrap();
        assert_eq!(d1, d9);
        assert_eq!(d1.get(5, 6), &BigInt::from(352));
    }

    #[test]
    fn sequence_access() {
        let reg = StrategyRegistry::catalog();
        let seq = build_sequence(3, reg.get("d1").unwrap()).unwrap();
        assert_eq!(seq.max_n(), 3);
        assert!(matches!(seq.get(4), Err(Error::InsufficientMatrices { n: 4 })));
        assert!(seq.get(0).is_err());
        assert!(build_matrix(0, reg.get("d1").unwrap()).is_err());
        assert!(DeltaSequence::from_matrices(vec![seq.get(2).unwrap().clone()]).is_err());
    }
}
