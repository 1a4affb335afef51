use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Strictly ordered binary tree on labels `1..=2n+1` rooted at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    children: Vec<Option<(usize, usize)>>,
    parent: Vec<usize>,
}

/// Minimal chain and the two statistics of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub eoc: usize,
    pub pom: usize,
    pub chain: Vec<usize>,
}

impl Tree {
    /// Unvalidated buffer for in-place enumeration.
    pub(crate) fn blank(n: usize) -> Self {
        let len = 2 * n + 2;
        Tree { n, children: vec![None; len], parent: vec![0; len] }
    }

    pub(crate) fn set_children(&mut self, node: usize, a: usize, b: usize) {
        self.children[node] = Some((a, b));
        self.parent[a] = node;
        self.parent[b] = node;
    }

    pub(crate) fn clear_children(&mut self, node: usize) {
        self.children[node] = None;
    }

    /// Builds and validates a tree from `(parent, child, child)` triples.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, usize)]) -> Result<Self> {
        let size = 2 * n + 1;
        let mut tree = Tree::blank(n);
        for &(p, a, b) in pairs {
            for label in [p, a, b] {
                if label == 0 || label > size {
                    return Err(Error::InvalidTree(format!("label {label} outside 1..={size}")));
                }
            }
            if tree.children[p].is_some() {
                return Err(Error::InvalidTree(format!("node {p} listed twice")));
            }
            if a == b {
                return Err(Error::InvalidTree(format!("node {p} has the repeated child {a}")));
            }
            for c in [a, b] {
                if tree.parent[c] != 0 {
                    return Err(Error::InvalidTree(format!("node {c} has two parents")));
                }
                if c <= p {
                    return Err(Error::InvalidTree(format!("child {c} is not larger than its parent {p}")));
                }
            }
            tree.set_children(p, a.min(b), a.max(b));
        }
        if pairs.len() != n {
            return Err(Error::InvalidTree(format!("expected {n} internal nodes, found {}", pairs.len())));
        }
        if let Some(orphan) = (2..=size).find(|&l| tree.parent[l] == 0) {
            return Err(Error::InvalidTree(format!("node {orphan} has no parent")));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        2 * self.n + 1
    }

    pub fn children(&self, label: usize) -> Option<(usize, usize)> {
        self.children.get(label).copied().flatten()
    }

    pub fn parent(&self, label: usize) -> Option<usize> {
        match self.parent.get(label) {
            Some(&p) if p != 0 => Some(p),
            _ => None,
        }
    }

    pub fn is_leaf(&self, label: usize) -> bool {
        (1..=self.size()).contains(&label) && self.children(label).is_none()
    }

    /// Internal nodes with their child pairs in increasing parent order.
    pub fn internal_nodes(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        (1..=self.size()).filter_map(|l| self.children(l).map(|c| (l, c)))
    }

    /// Whether `label` lies in the subtree rooted at `root` (inclusive).
    pub fn in_subtree(&self, root: usize, label: usize) -> bool {
        let mut cur = label;
        while cur > root {
            match self.parent(cur) {
                Some(p) => cur = p,
                None => return false,
            }
        }
        cur == root
    }

    /// Root, then the smaller child at each step, ending at a leaf.
    pub fn minimal_chain(&self) -> Result<Vec<usize>> {
        if self.n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut chain = vec![1];
        let mut cur = 1;
        while let Some((a, _)) = self.children(cur) {
            chain.push(a);
            cur = a;
        }
        Ok(chain)
    }

    /// End of the minimal chain.
    pub fn eoc(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut cur = 1;
        while let Some((a, _)) = self.children(cur) {
            cur = a;
        }
        Ok(cur)
    }

    /// Parent of the maximum label `2n+1`.
    pub fn pom(&self) -> Result<usize> {
        self.parent(self.size()).ok_or(Error::EmptyTree)
    }

    pub fn stats(&self) -> Result<TreeStats> {
        let chain = self.minimal_chain()?;
        Ok(TreeStats { eoc: *chain.last().expect("nonempty"), pom: self.pom()?, chain })
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        if self.n > 0 {
            f.write_str(" ")?;
        }
        for (p, (a, b)) in self.internal_nodes() {
            write!(f, "{p}:({a},{b});")?;
        }
        Ok(())
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// Parses `n=<n>; <p>:(<a>,<b>);...` with optional whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |what: &str| Error::Parse(format!("{what} in tree `{s}`"));
        let body = compact.strip_prefix("n=").ok_or_else(|| bad("missing `n=`"))?;
        let (n_text, rest) = body.split_once(';').ok_or_else(|| bad("missing `;` after n"))?;
        let n: usize = n_text.parse().map_err(|_| bad("bad n"))?;
        let mut pairs = Vec::new();
        for entry in rest.split(';').filter(|e| !e.is_empty()) {
            let (p, kids) = entry.split_once(':').ok_or_else(|| bad("missing `:`"))?;
            let kids =
                kids.strip_prefix('(').and_then(|k| k.strip_suffix(')')).ok_or_else(|| bad("missing parentheses"))?;
            let (a, b) = kids.split_once(',').ok_or_else(|| bad("missing `,`"))?;
            let num = |t: &str| t.parse::<usize>().map_err(|_| bad("bad label"));
            pairs.push((num(p)?, num(a)?, num(b)?));
        }
        Tree::from_pairs(n, &pairs)
    }
}
