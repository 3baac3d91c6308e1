//! Labelled rooted trees: the value type shared with the burning module,
//! family enumeration (spanning trees, uprooted trees, leaf-1 trees) and the
//! psi bijection between uprooted trees and trees with a non-rooted leaf 1.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;

/// A rooted tree on an arbitrary finite label set, stored as a child ->
/// parent map. Edge labels and a root weight are carried when the tree comes
/// from a multigraph burn.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedLabelledTree {
    root: usize,
    parent: BTreeMap<usize, usize>,
    edge_label: Option<BTreeMap<usize, u64>>,
    root_weight: Option<u64>,
}

impl RootedLabelledTree {
    pub fn new(root: usize, parent: BTreeMap<usize, usize>) -> Result<Self> {
        if parent.contains_key(&root) {
            return Err(Error::BadTree(format!("root {root} has a parent")));
        }
        // every chain of parents must terminate at the root
        for &start in parent.keys() {
            let mut seen = BTreeSet::new();
            let mut v = start;
            while v != root {
                if !seen.insert(v) {
                    return Err(Error::BadTree(format!("cycle through {v}")));
                }
                v = *parent
                    .get(&v)
                    .ok_or_else(|| Error::BadTree(format!("{v} is disconnected from the root")))?;
            }
        }
        Ok(RootedLabelledTree { root, parent, edge_label: None, root_weight: None })
    }

    pub fn with_edge_labels(mut self, labels: BTreeMap<usize, u64>) -> Result<Self> {
        for child in labels.keys() {
            if !self.parent.contains_key(child) {
                return Err(Error::BadTree(format!("edge label on non-edge child {child}")));
            }
        }
        self.edge_label = Some(labels);
        Ok(self)
    }

    pub fn with_root_weight(mut self, weight: u64) -> Self {
        self.root_weight = Some(weight);
        self
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent_map(&self) -> &BTreeMap<usize, usize> {
        &self.parent
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent.get(&v).copied()
    }

    pub fn edge_labels(&self) -> Option<&BTreeMap<usize, u64>> {
        self.edge_label.as_ref()
    }

    pub fn root_weight(&self) -> Option<u64> {
        self.root_weight
    }

    pub fn labels(&self) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = self.parent.keys().copied().collect();
        set.extend(self.parent.values().copied());
        set.insert(self.root);
        set
    }

    pub fn children_of(&self, v: usize) -> Vec<usize> {
        self.parent.iter().filter_map(|(&c, &p)| (p == v).then_some(c)).collect()
    }

    /// True when `a` lies on the path from the root to `d`, `a != d`.
    /// The root itself is not counted as an ancestor.
    pub fn is_ancestor(&self, a: usize, d: usize) -> bool {
        if a == self.root {
            return false;
        }
        let mut v = d;
        while let Some(p) = self.parent_of(v) {
            if p == a {
                return true;
            }
            v = p;
        }
        false
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.parent.values().all(|&p| p != v)
    }

    /// Structural edge adjacency inside the tree (either direction).
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.parent_of(u) == Some(v) || self.parent_of(v) == Some(u)
    }

    /// Relabel every vertex through `map`, which must be injective on the
    /// label set.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let parent = self.parent.iter().map(|(&c, &p)| (map(c), map(p))).collect();
        let edge_label =
            self.edge_label.as_ref().map(|m| m.iter().map(|(&c, &l)| (map(c), l)).collect());
        RootedLabelledTree {
            root: map(self.root),
            parent,
            edge_label,
            root_weight: self.root_weight,
        }
    }
}

/// Root exceeds all of its children.
pub fn is_uprooted(tree: &RootedLabelledTree) -> bool {
    tree.children_of(tree.root()).iter().all(|&c| c < tree.root())
}

fn all_parent_maps(
    labels: &[usize],
    root: usize,
    allowed: &dyn Fn(usize, usize) -> bool,
) -> Vec<RootedLabelledTree> {
    let others: Vec<usize> = labels.iter().copied().filter(|&v| v != root).collect();
    let mut out = Vec::new();
    let mut assignment: Vec<usize> = Vec::new();
    backtrack(labels, root, &others, allowed, &mut assignment, &mut out);
    out
}

fn backtrack(
    labels: &[usize],
    root: usize,
    others: &[usize],
    allowed: &dyn Fn(usize, usize) -> bool,
    assignment: &mut Vec<usize>,
    out: &mut Vec<RootedLabelledTree>,
) {
    if assignment.len() == others.len() {
        let parent: BTreeMap<usize, usize> =
            others.iter().copied().zip(assignment.iter().copied()).collect();
        if let Ok(tree) = RootedLabelledTree::new(root, parent) {
            out.push(tree);
        }
        return;
    }
    let child = others[assignment.len()];
    for &p in labels {
        if p != child && allowed(p, child) {
            assignment.push(p);
            backtrack(labels, root, others, allowed, assignment, out);
            assignment.pop();
        }
    }
}

/// All rooted labelled trees on the given label set with the given root,
/// deterministic lexicographic order of parent vectors.
pub fn rooted_trees_on(labels: &[usize], root: usize) -> Vec<RootedLabelledTree> {
    all_parent_maps(labels, root, &|_, _| true)
}

/// All spanning trees of `graph` oriented away from `root`. In the
/// multigraph case parallel edges are counted separately: each structural
/// tree is expanded over all edge-label choices.
pub fn spanning_trees(graph: &RootedMultigraph, root: usize) -> Result<Vec<RootedLabelledTree>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let labels: Vec<usize> = (0..graph.vertex_count()).collect();
    let structural =
        all_parent_maps(&labels, root, &|p, c| graph.adjacency(p, c) > 0);
    if !graph.is_multigraph() {
        return Ok(structural);
    }
    let mut out = Vec::new();
    for tree in structural {
        let children: Vec<usize> = tree.parent_map().keys().copied().collect();
        let bounds: Vec<u64> = children
            .iter()
            .map(|&c| graph.adjacency(tree.parent_of(c).unwrap(), c) - 1)
            .collect();
        let mut choice = vec![0u64; children.len()];
        loop {
            let labels_map: BTreeMap<usize, u64> =
                children.iter().copied().zip(choice.iter().copied()).collect();
            out.push(tree.clone().with_edge_labels(labels_map)?);
            if !crate::ideal::increment(&mut choice, &bounds) {
                break;
            }
        }
    }
    Ok(out)
}

/// The uprooted trees on {1, ..., n}: root bigger than all its children.
pub fn uprooted_trees(n: usize) -> Vec<RootedLabelledTree> {
    let labels: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for &root in &labels {
        out.extend(rooted_trees_on(&labels, root).into_iter().filter(is_uprooted_ref));
    }
    out
}

fn is_uprooted_ref(t: &RootedLabelledTree) -> bool {
    is_uprooted(t)
}

/// Uprooted trees on {1, ..., n} with no edge between `i` and `j`.
pub fn uprooted_avoiding(n: usize, i: usize, j: usize) -> Result<Vec<RootedLabelledTree>> {
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::BadParameter(format!("avoiding pair ({i},{j}) on [{n}]")));
    }
    Ok(uprooted_trees(n).into_iter().filter(|t| !t.adjacent(i, j)).collect())
}

/// Trees on {1, ..., n} in which 1 is a leaf different from the root.
pub fn leaf1_trees(n: usize) -> Vec<RootedLabelledTree> {
    let labels: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for &root in &labels {
        if root == 1 {
            continue;
        }
        out.extend(rooted_trees_on(&labels, root).into_iter().filter(|t| t.is_leaf(1)));
    }
    out
}

/// Named families of rooted labelled trees on {1, ..., n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFamily {
    AllRooted,
    Uprooted,
    UprootedAvoiding(usize, usize),
    Leaf1,
    Leaf1Avoiding(usize, usize),
}

impl TreeFamily {
    pub fn enumerate(&self, n: usize) -> Result<Vec<RootedLabelledTree>> {
        match *self {
            TreeFamily::AllRooted => {
                let labels: Vec<usize> = (1..=n).collect();
                Ok(labels.iter().flat_map(|&r| rooted_trees_on(&labels, r)).collect())
            }
            TreeFamily::Uprooted => Ok(uprooted_trees(n)),
            TreeFamily::UprootedAvoiding(i, j) => uprooted_avoiding(n, i, j),
            TreeFamily::Leaf1 => Ok(leaf1_trees(n)),
            TreeFamily::Leaf1Avoiding(i, j) => {
                if i == j || i < 1 || j < 1 || i > n || j > n {
                    return Err(Error::BadParameter(format!("avoiding pair ({i},{j})")));
                }
                Ok(leaf1_trees(n).into_iter().filter(|t| !t.adjacent(i, j)).collect())
            }
        }
    }
}

/// Maximal subtree of `tree` containing `v` whose edges (taken in the tree's
/// own away-from-root orientation) all increase: repeatedly add any child w
/// of an included vertex u with w > u. The vertex `v` becomes the root of
/// the result.
pub fn max_increasing_subtree(tree: &RootedLabelledTree, v: usize) -> Result<RootedLabelledTree> {
    if !tree.labels().contains(&v) {
        return Err(Error::BadVertex(v));
    }
    let mut included = BTreeSet::from([v]);
    let mut parent = BTreeMap::new();
    let mut frontier = vec![v];
    while let Some(u) = frontier.pop() {
        for c in tree.children_of(u) {
            if c > u && included.insert(c) {
                parent.insert(c, u);
                frontier.push(c);
            }
        }
    }
    RootedLabelledTree::new(v, parent)
}

fn order_iso(from: &[usize], to: &[usize]) -> BTreeMap<usize, usize> {
    from.iter().copied().zip(to.iter().copied()).collect()
}

/// Roots of the forest left after removing the parent edges of `removed_keys`
/// from `tree`; also returns the pruned parent map.
fn prune(
    tree: &RootedLabelledTree,
    removed_keys: &BTreeSet<usize>,
) -> BTreeMap<usize, usize> {
    tree.parent_map()
        .iter()
        .filter(|(c, _)| !removed_keys.contains(c))
        .map(|(&c, &p)| (c, p))
        .collect()
}

fn forest_root(parent: &BTreeMap<usize, usize>, mut v: usize) -> usize {
    while let Some(&p) = parent.get(&v) {
        v = p;
    }
    v
}

/// The bijection from uprooted trees on [n] to trees with non-rooted leaf 1:
/// detach the maximal increasing subtree containing 1, shift its label set
/// from S0 to (S0 minus {1}) union {root}, and graft the detached components
/// back at their roots.
pub fn psi(tree: &RootedLabelledTree) -> Result<RootedLabelledTree> {
    if !is_uprooted(tree) {
        return Err(Error::BadTree("psi is defined on uprooted trees".into()));
    }
    let r = tree.root();
    let t0 = max_increasing_subtree(tree, 1)?;
    let s0: Vec<usize> = t0.labels().into_iter().collect();
    let detached: BTreeSet<usize> = s0.iter().copied().filter(|&x| x != 1).collect();

    let remaining = prune(tree, &detached);
    let mut shifted: Vec<usize> = detached.iter().copied().collect();
    shifted.push(r);
    shifted.sort_unstable();
    let iso = order_iso(&s0, &shifted);

    let mut parent = remaining;
    for (&c, &p) in t0.parent_map() {
        parent.insert(iso[&c], iso[&p]);
    }
    RootedLabelledTree::new(shifted[0], parent)
}

/// Inverse of [`psi`]: defined on trees with a non-rooted leaf 1.
pub fn psi_inverse(tree: &RootedLabelledTree) -> Result<RootedLabelledTree> {
    let r_prime = tree.root();
    if r_prime == 1 || !tree.is_leaf(1) {
        return Err(Error::BadTree("psi_inverse needs a non-rooted leaf 1".into()));
    }
    let t0 = max_increasing_subtree(tree, r_prime)?;
    let shifted: Vec<usize> = t0.labels().into_iter().collect();
    let detached: BTreeSet<usize> =
        shifted.iter().copied().filter(|&x| x != r_prime).collect();

    let remaining = prune(tree, &detached);
    let r = forest_root(&remaining, 1);
    if !shifted.contains(&r) {
        return Err(Error::BadTree("leaf 1 is not attached below the increasing subtree".into()));
    }
    let mut original: Vec<usize> = shifted.iter().copied().filter(|&x| x != r).collect();
    original.push(1);
    original.sort_unstable();
    let iso = order_iso(&shifted, &original);

    let mut parent = remaining;
    for (&c, &p) in t0.parent_map() {
        parent.insert(iso[&c], iso[&p]);
    }
    RootedLabelledTree::new(r, parent)
}

/// The classification of trees with non-rooted leaf 1 avoiding the edge 1~n,
/// according to where they sit in the image of psi restricted to uprooted
/// trees avoiding 1~n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvoidingImageClass {
    /// root = n
    A,
    /// root != n, root adjacent to n, and 1 is a descendant of n
    BPrime,
    /// root != n and root not adjacent to n
    BDoublePrime,
    /// in the complement of the image
    Outside,
}

pub fn classify_avoiding_image(tree: &RootedLabelledTree, n: usize) -> Result<AvoidingImageClass> {
    let labels: BTreeSet<usize> = (1..=n).collect();
    if tree.labels() != labels || tree.root() == 1 || !tree.is_leaf(1) || tree.adjacent(1, n) {
        return Err(Error::BadTree("input is outside the leaf-1, 1-not-adjacent-n family".into()));
    }
    let r = tree.root();
    if r == n {
        return Ok(AvoidingImageClass::A);
    }
    if !tree.adjacent(r, n) {
        return Ok(AvoidingImageClass::BDoublePrime);
    }
    if tree.is_ancestor(n, 1) {
        return Ok(AvoidingImageClass::BPrime);
    }
    Ok(AvoidingImageClass::Outside)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(root: usize, edges: &[(usize, usize)]) -> RootedLabelledTree {
        RootedLabelledTree::new(root, edges.iter().copied().collect()).unwrap()
    }

    #[test]
    fn tree_validation() {
        assert!(RootedLabelledTree::new(1, BTreeMap::from([(2, 3), (3, 2)])).is_err());
        assert!(RootedLabelledTree::new(1, BTreeMap::from([(1, 2)])).is_err());
        let t = tree(3, &[(2, 3), (1, 2)]);
        assert!(t.is_ancestor(2, 1));
        assert!(!t.is_ancestor(3, 1), "the root is not an ancestor");
        assert!(t.is_leaf(1));
    }

    #[test]
    fn spanning_tree_counts() {
        for n in 1..=4usize {
            let g = RootedMultigraph::complete(n).unwrap();
            let trees = spanning_trees(&g, 0).unwrap();
            assert_eq!(trees.len(), (n as u64 + 1).pow(n as u32 - 1) as usize, "n={n}");
        }
        let path = RootedMultigraph::new(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(spanning_trees(&path, 0).unwrap().len(), 1);
        let m = RootedMultigraph::complete_ab(2, 2, 1).unwrap();
        assert_eq!(spanning_trees(&m, 0).unwrap().len(), 2 * (2 + 2));
    }

    #[test]
    fn uprooted_counts() {
        assert_eq!(uprooted_trees(3).len(), 4);
        assert_eq!(uprooted_trees(4).len(), 27);
        let avoiding = uprooted_avoiding(3, 1, 3).unwrap();
        assert_eq!(avoiding.len(), 1);
        assert_eq!(avoiding[0], tree(3, &[(2, 3), (1, 2)]));
        assert_eq!(uprooted_avoiding(4, 3, 4).unwrap().len(), 17);
    }

    #[test]
    fn leaf1_count_matches_uprooted() {
        for n in 2..=5 {
            assert_eq!(leaf1_trees(n).len(), uprooted_trees(n).len(), "n={n}");
        }
    }

    #[test]
    fn increasing_subtree() {
        let star = tree(3, &[(1, 3), (2, 3)]);
        let sub = max_increasing_subtree(&star, 1).unwrap();
        assert_eq!(sub.labels(), BTreeSet::from([1]));

        let t = tree(2, &[(1, 2), (3, 1)]);
        let sub = max_increasing_subtree(&t, 1).unwrap();
        assert_eq!(sub.labels(), BTreeSet::from([1, 3]));
        assert_eq!(sub.root(), 1);

        let incr = tree(1, &[(2, 1), (3, 2)]);
        assert_eq!(max_increasing_subtree(&incr, 1).unwrap(), incr);
    }

    #[test]
    fn psi_fixed_point_when_one_is_a_leaf() {
        let chain = tree(3, &[(2, 3), (1, 2)]);
        assert_eq!(psi(&chain).unwrap(), chain);
    }

    #[test]
    fn psi_round_trip() {
        for n in 2..=5 {
            let mut images = BTreeSet::new();
            for t in uprooted_trees(n) {
                let image = psi(&t).unwrap();
                assert!(image.is_leaf(1) && image.root() != 1, "n={n} t={t:?}");
                assert_eq!(psi_inverse(&image).unwrap(), t, "n={n}");
                images.insert(image);
            }
            let b: BTreeSet<RootedLabelledTree> = leaf1_trees(n).into_iter().collect();
            assert_eq!(images, b, "psi is onto for n={n}");
        }
    }

    #[test]
    fn psi_preserves_one_n_avoidance() {
        for n in 3..=5 {
            for t in uprooted_avoiding(n, 1, n).unwrap() {
                assert!(!psi(&t).unwrap().adjacent(1, n), "n={n}");
            }
        }
    }

    #[test]
    fn avoiding_image_cases() {
        let a = tree(3, &[(2, 3), (1, 2)]);
        assert_eq!(classify_avoiding_image(&a, 3).unwrap(), AvoidingImageClass::A);
        // root 2, edge 2~4, 1 below 4: B'
        let bp = tree(2, &[(4, 2), (3, 4), (1, 3)]);
        assert_eq!(classify_avoiding_image(&bp, 4).unwrap(), AvoidingImageClass::BPrime);
        // root 2, 2 not adjacent to 4: B''
        let bpp = tree(2, &[(3, 2), (4, 3), (1, 3)]);
        assert_eq!(classify_avoiding_image(&bpp, 4).unwrap(), AvoidingImageClass::BDoublePrime);
        // root adjacent to n but 1 not below n: outside
        let out = tree(2, &[(4, 2), (3, 2), (1, 3)]);
        assert_eq!(classify_avoiding_image(&out, 4).unwrap(), AvoidingImageClass::Outside);
        // rejects an edge 1~n
        let bad = tree(3, &[(4, 3), (1, 4), (2, 3)]);
        assert!(classify_avoiding_image(&bad, 4).is_err());
    }

    #[test]
    fn avoiding_image_counts() {
        for n in 3..=5usize {
            let mut image = BTreeSet::new();
            for t in uprooted_avoiding(n, 1, n).unwrap() {
                image.insert(psi(&t).unwrap());
            }
            let mut a = 0usize;
            let mut bp = 0usize;
            let mut bpp = 0usize;
            let mut outside = 0usize;
            for t in TreeFamily::Leaf1Avoiding(1, n).enumerate(n).unwrap() {
                let class = classify_avoiding_image(&t, n).unwrap();
                let in_image = image.contains(&t);
                match class {
                    AvoidingImageClass::A => a += 1,
                    AvoidingImageClass::BPrime => bp += 1,
                    AvoidingImageClass::BDoublePrime => bpp += 1,
                    AvoidingImageClass::Outside => outside += 1,
                }
                assert_eq!(in_image, class != AvoidingImageClass::Outside, "n={n} t={t:?}");
            }
            let expected_a = (n - 1).pow(n as u32 - 3) * (n - 2);
            let total = (n - 1).pow(n as u32 - 3) * (n - 2) * (n - 2);
            assert_eq!(a, expected_a, "n={n}");
            assert_eq!(a + bp + bpp, total, "n={n}");
            assert_eq!(image.len(), total);
            let _ = outside;
        }
    }

    #[test]
    fn relabel_shifts() {
        let t = tree(1, &[(0, 1)]);
        let shifted = t.relabel(|v| v + 1);
        assert_eq!(shifted, tree(2, &[(1, 2)]));
    }
}
