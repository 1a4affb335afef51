//! Streaming enumeration: the root of a label set is its minimum, and the
//! remaining labels split into two odd blocks with the smaller minimum first.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::tree::Tree;
use crate::poupard::tangent_numbers;

type Split = (u64, u64);

fn labels(mask: u64) -> Vec<u32> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

#[derive(Default)]
struct Splitter {
    memo: HashMap<u64, Arc<Vec<Split>>>,
}

impl Splitter {
    /// Ordered two-block splits of `rest`, first block holding its minimum.
    fn splits(&mut self, rest: u64) -> Arc<Vec<Split>> {
        if let Some(s) = self.memo.get(&rest) {
            return s.clone();
        }
        let low = rest & rest.wrapping_neg();
        let others = rest ^ low;
        let mut out = Vec::new();
        let mut sub = others;
        loop {
            let a = low | sub;
            let b = rest ^ a;
            if a.count_ones() % 2 == 1 && b != 0 && b.count_ones() % 2 == 1 {
                out.push((a, b));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        out.sort_by_key(|&(a, _)| labels(a));
        let out = Arc::new(out);
        self.memo.insert(rest, out.clone());
        out
    }

    fn walk(&mut self, pending: &mut Vec<u64>, tree: &mut Tree, visit: &mut dyn FnMut(&Tree)) {
        let Some(set) = pending.pop() else {
            visit(tree);
            return;
        };
        let root = set.trailing_zeros() as usize;
        let rest = set & !(1u64 << root);
        if rest == 0 {
            tree.clear_children(root);
            self.walk(pending, tree, visit);
        } else {
            for &(a, b) in self.splits(rest).iter() {
                tree.set_children(root, a.trailing_zeros() as usize, b.trailing_zeros() as usize);
                pending.push(b);
                pending.push(a);
                self.walk(pending, tree, visit);
                pending.pop();
                pending.pop();
            }
            tree.clear_children(root);
        }
        pending.push(set);
    }
}

fn all_labels(n: usize) -> u64 {
    assert!(2 * n + 1 < 64, "label sets are 64-bit masks");
    ((1u64 << (2 * n + 1)) - 1) << 1
}

/// Calls `visit` once for every tree on `2n+1` labels, in a fixed order.
/// The tree passed to `visit` is a reused buffer.
pub fn for_each_tree(n: usize, mut visit: impl FnMut(&Tree)) {
    let mut tree = Tree::blank(n);
    Splitter::default().walk(&mut vec![all_labels(n)], &mut tree, &mut visit);
}

/// The root's child blocks; enumeration partitions along these.
fn root_splits(n: usize) -> Vec<Split> {
    if n == 0 {
        return Vec::new();
    }
    Splitter::default().splits(all_labels(n) & !2).to_vec()
}

/// Folds `visit` over all trees in parallel, one fold per root split, then
/// merges the per-part accumulators with `merge`.
pub fn fold_trees<A, I, V, M>(n: usize, init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &Tree) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    if n == 0 {
        let mut acc = init();
        for_each_tree(0, |t| visit(&mut acc, t));
        return acc;
    }
    root_splits(n)
        .into_par_iter()
        .map(|(a, b)| {
            let mut acc = init();
            let mut tree = Tree::blank(n);
            tree.set_children(1, a.trailing_zeros() as usize, b.trailing_zeros() as usize);
            let mut pending = vec![b, a];
            Splitter::default().walk(&mut pending, &mut tree, &mut |t: &Tree| visit(&mut acc, t));
            acc
        })
        .reduce(&init, &merge)
}

/// All trees for small `n`, in enumeration order.
pub fn enumerate_trees(n: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for_each_tree(n, |t| out.push(t.clone()));
    out
}

/// `T_{2n+1} / 2^n` from the tangent series, without enumeration.
pub fn tree_count(n: usize) -> BigInt {
    let t = tangent_numbers(n + 1).pop().expect("count >= 1");
    let divisor = BigInt::from(1) << n;
    assert!((&t % &divisor) == BigInt::from(0), "T_{} not divisible by 2^{n}", 2 * n + 1);
    t / divisor
}
