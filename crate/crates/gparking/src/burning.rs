//! Depth-first burning of a rooted multigraph against a water assignment,
//! the induced bijection phi from parking functions to spanning trees, the
//! kappa statistic, and the spherical variant phi that lands in uprooted
//! trees.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;
use crate::parking::reduce_spf;
use crate::tree::RootedLabelledTree;

/// One step of the burning process. `Dampen` removes `count` parallel edges
/// between a burnt vertex and an unburnt one, paid for by the water at the
/// unburnt end; `Burn` crosses the surviving edge with the given label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BurnEvent {
    Dampen { from: usize, to: usize, count: u64 },
    Burn { from: usize, to: usize, label: u64 },
    Backtrack { at: usize },
}

#[derive(Debug, Clone)]
pub struct BurnOutcome {
    /// Vertices in the order they caught fire, starting with the root.
    pub burnt: Vec<usize>,
    /// The burnt subtree, rooted at the burn root. Edge labels are attached
    /// exactly when the graph has parallel edges.
    pub tree: RootedLabelledTree,
    /// Water left at each non-root vertex after the fire dies.
    pub residual: BTreeMap<usize, u64>,
    pub events: Vec<BurnEvent>,
}

impl BurnOutcome {
    /// True when every vertex burnt.
    pub fn complete(&self, graph: &RootedMultigraph) -> bool {
        self.burnt.len() == graph.vertex_count()
    }
}

/// Burn `graph` starting from `root`. `values[i]` is the water at the i-th
/// smallest non-root vertex. The fire does depth-first search; a burning
/// vertex always attacks its largest unburnt neighbour first. If the
/// neighbour holds fewer water units than there are remaining parallel
/// edges, the highest-labelled edges are dampened and the fire crosses the
/// next one; otherwise every remaining parallel edge is dampened.
pub fn burn(graph: &RootedMultigraph, root: usize, values: &[u64]) -> Result<BurnOutcome> {
    let nv = graph.vertex_count();
    if root >= nv {
        return Err(Error::BadVertex(root));
    }
    let others: Vec<usize> = (0..nv).filter(|&v| v != root).collect();
    if values.len() != others.len() {
        return Err(Error::DimensionMismatch(values.len(), others.len()));
    }
    let mut water: BTreeMap<usize, u64> =
        others.iter().copied().zip(values.iter().copied()).collect();
    let mut remaining: Vec<Vec<u64>> = graph.adjacency_matrix().to_vec();
    let multigraph = graph.is_multigraph();

    let mut burnt_mark = vec![false; nv];
    burnt_mark[root] = true;
    let mut burnt = vec![root];
    let mut parent = BTreeMap::new();
    let mut edge_labels = BTreeMap::new();
    let mut events = Vec::new();
    let mut stack = vec![root];

    while let Some(&i) = stack.last() {
        let target = (0..nv).rev().find(|&j| !burnt_mark[j] && remaining[i][j] > 0);
        let j = match target {
            Some(j) => j,
            None => {
                events.push(BurnEvent::Backtrack { at: i });
                stack.pop();
                continue;
            }
        };
        let rem = remaining[i][j];
        let p = water[&j];
        if p < rem {
            // edges between i and j still carry labels 0..rem-1; dampen the
            // top p of them and burn through the next one down
            if p > 0 {
                events.push(BurnEvent::Dampen { from: i, to: j, count: p });
            }
            let label = rem - p - 1;
            events.push(BurnEvent::Burn { from: i, to: j, label });
            water.insert(j, 0);
            remaining[i][j] = 0;
            remaining[j][i] = 0;
            burnt_mark[j] = true;
            burnt.push(j);
            parent.insert(j, i);
            edge_labels.insert(j, label);
            stack.push(j);
        } else {
            events.push(BurnEvent::Dampen { from: i, to: j, count: rem });
            water.insert(j, p - rem);
            remaining[i][j] = 0;
            remaining[j][i] = 0;
        }
    }

    let mut tree = RootedLabelledTree::new(root, parent)?;
    if multigraph {
        tree = tree.with_edge_labels(edge_labels)?;
    }
    Ok(BurnOutcome { burnt, tree, residual: water, events })
}

/// The burning bijection from parking functions to spanning trees: errors
/// unless the fire reaches every vertex.
pub fn phi(graph: &RootedMultigraph, values: &[u64]) -> Result<RootedLabelledTree> {
    let outcome = burn(graph, graph.root(), values)?;
    if !outcome.complete(graph) {
        return Err(Error::NotParkingFunction(values.to_vec()));
    }
    Ok(outcome.tree)
}

/// Number of inversions of a rooted tree: pairs (i, j) with i a non-root
/// proper ancestor of j and i > j.
pub fn inversions(tree: &RootedLabelledTree) -> u64 {
    let labels = tree.labels();
    let mut count = 0;
    for &j in &labels {
        for &i in &labels {
            if i > j && tree.is_ancestor(i, j) {
                count += 1;
            }
        }
    }
    count
}

/// kappa statistic with an explicit edge-multiplicity function: an inversion
/// (i, j) contributes the number of edges between the parent of i and j.
pub fn kappa(tree: &RootedLabelledTree, multiplicity: impl Fn(usize, usize) -> u64) -> u64 {
    let labels = tree.labels();
    let mut total = 0;
    for &j in &labels {
        for &i in &labels {
            if i > j && tree.is_ancestor(i, j) {
                total += multiplicity(tree.parent_of(i).expect("non-root ancestor"), j);
            }
        }
    }
    total
}

/// kappa of a tree whose labels are vertices of `graph`.
pub fn kappa_in(graph: &RootedMultigraph, tree: &RootedLabelledTree) -> u64 {
    kappa(tree, |u, v| graph.adjacency(u, v))
}

/// Sum of the edge labels of a multigraph burn tree.
pub fn edge_label_sum(tree: &RootedLabelledTree) -> u64 {
    tree.edge_labels().map(|m| m.values().sum()).unwrap_or(0)
}

/// The spherical burning map: reduce a spherical parking function, re-root
/// the root-deleted graph at the largest vertex whose reduced value lies
/// below the maximum multiplicity, and burn. The result is a tree on the
/// non-root vertices of `graph`; for multigraphs it carries edge labels and
/// the root weight.
pub fn phi_spherical(graph: &RootedMultigraph, values: &[u64]) -> Result<RootedLabelledTree> {
    let reduced = reduce_spf(graph, values)?;
    let verts = graph.non_root_vertices();
    // deleting a vertex keeps the root alive, so park the root elsewhere first
    let h = graph.with_root(verts[0])?.delete_vertex(graph.root())?;
    let b = h.max_multiplicity();
    let r_idx = match (0..reduced.len()).rev().find(|&i| reduced[i] < b) {
        Some(i) => i,
        None => {
            return Err(Error::PhiUndefined(
                "no vertex with reduced value below the multiplicity".into(),
            ))
        }
    };
    let hat: Vec<u64> = reduced
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| (i != r_idx).then_some(v))
        .collect();
    let outcome = burn(&h, r_idx, &hat)?;
    if !outcome.complete(&h) {
        return Err(Error::PhiUndefined("the fire did not reach every vertex".into()));
    }
    // restore the labels of the ambient graph
    let mut tree = outcome.tree.relabel(|v| verts[v]);
    if h.is_multigraph() {
        tree = tree.with_root_weight(reduced[r_idx]);
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::{enumerate_pf, enumerate_spf, rsum, sum};
    use crate::tree::{is_uprooted, spanning_trees, uprooted_avoiding, uprooted_trees};
    use std::collections::BTreeSet;

    #[test]
    fn burn_trace_on_a_triangle() {
        let g = RootedMultigraph::complete(2).unwrap();
        let out = burn(&g, 0, &[0, 0]).unwrap();
        assert_eq!(out.burnt, vec![0, 2, 1]);
        assert_eq!(out.tree.parent_of(2), Some(0));
        assert_eq!(out.tree.parent_of(1), Some(2));
        assert!(out.tree.edge_labels().is_none());
        assert_eq!(
            out.events,
            vec![
                BurnEvent::Burn { from: 0, to: 2, label: 0 },
                BurnEvent::Burn { from: 2, to: 1, label: 0 },
                BurnEvent::Backtrack { at: 1 },
                BurnEvent::Backtrack { at: 2 },
                BurnEvent::Backtrack { at: 0 },
            ]
        );
    }

    #[test]
    fn partial_burn_leaves_residual() {
        let g = RootedMultigraph::complete(2).unwrap();
        let out = burn(&g, 0, &[2, 2]).unwrap();
        assert_eq!(out.burnt, vec![0]);
        assert!(!out.complete(&g));
        assert_eq!(out.residual[&1], 1);
        assert_eq!(out.residual[&2], 1);
        assert!(phi(&g, &[2, 2]).is_err());
    }

    #[test]
    fn multigraph_edge_labels() {
        // two parallel edges 0~1: water 0 burns through the top edge
        let g = RootedMultigraph::new(vec![vec![0, 2], vec![2, 0]], 0).unwrap();
        let t = phi(&g, &[0]).unwrap();
        assert_eq!(t.edge_labels().unwrap()[&1], 1);
        let t = phi(&g, &[1]).unwrap();
        assert_eq!(t.edge_labels().unwrap()[&1], 0);
    }

    #[test]
    fn phi_is_a_bijection_onto_spanning_trees() {
        for g in [
            RootedMultigraph::complete(3).unwrap(),
            RootedMultigraph::complete_ab(2, 2, 2).unwrap(),
            RootedMultigraph::complete(4).unwrap().delete_edge(1, 3).unwrap(),
        ] {
            let pf = enumerate_pf(&g).unwrap();
            let images: BTreeSet<_> = pf.iter().map(|p| phi(&g, p).unwrap()).collect();
            assert_eq!(images.len(), pf.len(), "injective");
            let all: BTreeSet<_> = spanning_trees(&g, 0).unwrap().into_iter().collect();
            assert_eq!(images, all, "onto");
        }
    }

    #[test]
    fn rsum_equals_kappa_on_simple_graphs() {
        for g in [
            RootedMultigraph::complete(3).unwrap(),
            RootedMultigraph::complete(4).unwrap(),
            RootedMultigraph::complete(4).unwrap().delete_edge(2, 3).unwrap(),
        ] {
            for p in enumerate_pf(&g).unwrap() {
                let t = phi(&g, &p).unwrap();
                assert_eq!(rsum(&g, &p), kappa_in(&g, &t) as i64, "p={p:?}");
            }
        }
    }

    #[test]
    fn kappa_equals_inversions_on_complete_graphs() {
        let g = RootedMultigraph::complete(4).unwrap();
        for t in spanning_trees(&g, 0).unwrap() {
            assert_eq!(kappa_in(&g, &t), inversions(&t));
        }
    }

    #[test]
    fn rsum_equals_kappa_plus_labels_on_multigraphs() {
        for (n, a, b) in [(2, 1, 2), (2, 2, 3), (3, 2, 2)] {
            let g = RootedMultigraph::complete_ab(n, a, b).unwrap();
            for p in enumerate_pf(&g).unwrap() {
                let t = phi(&g, &p).unwrap();
                let expected = kappa_in(&g, &t) + edge_label_sum(&t);
                assert_eq!(rsum(&g, &p), expected as i64, "n={n} a={a} b={b} p={p:?}");
            }
        }
    }

    #[test]
    fn spherical_map_on_the_triangle() {
        let g = RootedMultigraph::complete(2).unwrap();
        let t = phi_spherical(&g, &[1, 1]).unwrap();
        assert_eq!(t.root(), 2);
        assert_eq!(t.parent_of(1), Some(2));
        assert!(t.root_weight().is_none());
    }

    #[test]
    fn spherical_bijection_onto_uprooted_trees() {
        for n in 2..=4usize {
            let g = RootedMultigraph::complete(n).unwrap();
            let spf = enumerate_spf(&g).unwrap();
            let images: BTreeSet<_> =
                spf.iter().map(|p| phi_spherical(&g, p).unwrap()).collect();
            assert_eq!(images.len(), spf.len());
            let all: BTreeSet<_> = uprooted_trees(n).into_iter().collect();
            assert_eq!(images, all, "n={n}");
        }
    }

    #[test]
    fn spherical_sum_statistic() {
        for n in 2..=4usize {
            let g = RootedMultigraph::complete(n).unwrap();
            for p in enumerate_spf(&g).unwrap() {
                let t = phi_spherical(&g, &p).unwrap();
                let binom = (n * (n - 1) / 2) as i64;
                assert_eq!(sum(&p) as i64, binom - kappa_in(&g, &t) as i64 + 1, "p={p:?}");
            }
        }
    }

    #[test]
    fn spherical_multigraph_statistic() {
        for (n, a, b) in [(3, 1, 2), (3, 2, 2), (4, 1, 2)] {
            let g = RootedMultigraph::complete_ab(n, a, b).unwrap();
            let spf = enumerate_spf(&g).unwrap();
            assert_eq!(
                spf.len() as u64,
                b.pow(n as u32) * ((n - 1) as u64).pow(n as u32 - 1)
            );
            let mut images = BTreeSet::new();
            for p in &spf {
                let t = phi_spherical(&g, p).unwrap();
                assert!(is_uprooted(&t));
                let omega = t.root_weight().unwrap();
                let lhs = rsum(&g, p) + omega as i64 + 1;
                let rhs = kappa_in(&g, &t) + edge_label_sum(&t);
                assert_eq!(lhs, rhs as i64, "n={n} a={a} b={b} p={p:?}");
                images.insert(t);
            }
            assert_eq!(images.len(), spf.len(), "injective");
        }
    }

    #[test]
    fn spherical_bijection_avoids_deleted_edge() {
        for n in 3..=4usize {
            let g = RootedMultigraph::complete(n).unwrap().delete_edge(1, n).unwrap();
            let spf = enumerate_spf(&g).unwrap();
            let images: BTreeSet<_> =
                spf.iter().map(|p| phi_spherical(&g, p).unwrap()).collect();
            assert_eq!(images.len(), spf.len());
            let all: BTreeSet<_> =
                uprooted_avoiding(n, 1, n).unwrap().into_iter().collect();
            assert_eq!(images, all, "n={n}");
        }
    }
}
