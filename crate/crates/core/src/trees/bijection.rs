use super::tree::Tree;
use crate::{Error, Result};

/// Relabels the minimal chain `a_1 < ... < a_j` to `a_2-1, ..., a_j-1, 2n+1`
/// and every other label `a` to `a-1`.
pub fn ha12_map(t: &Tree) -> Result<Tree> {
    let chain = t.minimal_chain()?;
    let size = t.size();
    let mut relabel: Vec<usize> = (0..=size).map(|a| a.saturating_sub(1)).collect();
    for w in chain.windows(2) {
        relabel[w[0]] = w[1] - 1;
    }
    relabel[*chain.last().expect("nonempty")] = size;
    let pairs: Vec<_> = t.internal_nodes().map(|(p, (a, b))| (relabel[p], relabel[a], relabel[b])).collect();
    Tree::from_pairs(t.n(), &pairs).map_err(|e| Error::InvariantViolation(format!("image of {t} is not a tree: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::enumerate_trees;
    use std::collections::HashSet;

    #[test]
    fn reference_pair() {
        let left = Tree::from_pairs(4, &[(1, 6, 2), (2, 4, 3), (4, 5, 9), (3, 7, 8)]).unwrap();
        let right = Tree::from_pairs(4, &[(1, 5, 2), (2, 3, 6), (3, 4, 8), (6, 9, 7)]).unwrap();
        let image = ha12_map(&left).unwrap();
        assert_eq!(image, right);
        assert_eq!(image.pom().unwrap(), 6);
    }

    #[test]
    fn fixed_point_and_injective() {
        let t = &enumerate_trees(1)[0];
        assert_eq!(&ha12_map(t).unwrap(), t);
        let trees = enumerate_trees(3);
        let images: HashSet<_> = trees.iter().map(|t| ha12_map(t).unwrap()).collect();
        assert_eq!(images.len(), 34);
        for t in &trees {
            assert_eq!(t.eoc().unwrap(), ha12_map(t).unwrap().pom().unwrap() + 1);
        }
        assert!(ha12_map(&enumerate_trees(0)[0]).is_err());
    }
}
