//! Recognizers and enumerators for G-parking, lambda-parking and spherical
//! G-parking functions.
//!
//! A parking function on a graph with non-root vertices v_1 < ... < v_n is a
//! length-n vector whose i-th entry is the value at v_i. For a graph rooted
//! at 0 this is simply (P(1), ..., P(n)).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;
use crate::ideal::{increment, parking_ideal, skeleton_ideal, MonomialIdeal};

/// A nonincreasing threshold vector for lambda-parking functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaVector(Vec<u64>);

impl LambdaVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadParameter("lambda must be nonempty".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameter("lambda must be nonincreasing".into()));
        }
        Ok(LambdaVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn is_gpf(graph: &RootedMultigraph, values: &[u64]) -> Result<bool> {
    Ok(!parking_ideal(graph).contains(values)?)
}

/// Independent second implementation straight from the cut-count definition:
/// every nonempty subset A of non-root vertices has a vertex i with
/// P(i) < d_A(i).
pub fn is_gpf_by_cuts(graph: &RootedMultigraph, values: &[u64]) -> Result<bool> {
    let verts = graph.non_root_vertices();
    let n = verts.len();
    if values.len() != n {
        return Err(Error::DimensionMismatch(values.len(), n));
    }
    for mask in 1u64..(1 << n) {
        let subset: Vec<usize> =
            (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        let ok = (0..n).any(|i| {
            mask >> i & 1 == 1 && values[i] < graph.d_a(&subset, verts[i]).expect("i in subset")
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All G-parking functions in lexicographic order. Errors when the parking
/// ideal is not Artinian (some vertex has no edge leaving it).
pub fn enumerate_pf(graph: &RootedMultigraph) -> Result<Vec<Vec<u64>>> {
    let ideal = parking_ideal(graph);
    ideal.standard_monomials()
}

pub fn is_lambda_pf(lambda: &LambdaVector, values: &[u64]) -> Result<bool> {
    let n = lambda.len();
    if values.len() != n {
        return Err(Error::DimensionMismatch(values.len(), n));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    // the j-th smallest value must be below lambda_{n-j+1}
    Ok(sorted.iter().enumerate().all(|(j, &p)| p < lambda.entries()[n - 1 - j]))
}

pub fn enumerate_lambda_pf(lambda: &LambdaVector) -> Result<Vec<Vec<u64>>> {
    let n = lambda.len();
    let bound = lambda.entries()[0].saturating_sub(1);
    let bounds = vec![bound; n];
    let mut out = Vec::new();
    let mut p = vec![0u64; n];
    loop {
        if is_lambda_pf(lambda, &p)? {
            out.push(p.clone());
        }
        if !increment(&mut p, &bounds) {
            break;
        }
    }
    Ok(out)
}

pub fn lambda_pf_count(lambda: &LambdaVector) -> Result<BigInt> {
    Ok(BigInt::from(enumerate_lambda_pf(lambda)?.len() as u64))
}

fn spherical_ideals(graph: &RootedMultigraph) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::BadParameter("spherical parking functions need n >= 2".into()));
    }
    Ok((parking_ideal(graph), skeleton_ideal(graph, n - 2)?))
}

/// P is spherical when x^P lies in the parking ideal but outside its
/// (n-2)-skeleton.
pub fn is_spherical(graph: &RootedMultigraph, values: &[u64]) -> Result<bool> {
    let (full, skeleton) = spherical_ideals(graph)?;
    Ok(full.contains(values)? && !skeleton.contains(values)?)
}

/// All spherical G-parking functions in lexicographic order. The enumeration
/// box comes from the pure powers of the (n-2)-skeleton.
pub fn enumerate_spf(graph: &RootedMultigraph) -> Result<Vec<Vec<u64>>> {
    let (full, skeleton) = spherical_ideals(graph)?;
    let bounds: Vec<u64> =
        skeleton.pure_power_bounds()?.into_iter().map(|d| d.saturating_sub(1)).collect();
    let mut out = Vec::new();
    let mut p = vec![0u64; graph.n()];
    loop {
        if full.contains(&p)? && !skeleton.contains(&p)? {
            out.push(p.clone());
        }
        if !increment(&mut p, &bounds) {
            break;
        }
    }
    Ok(out)
}

/// Exponent of x_i in the full-set generator m_[n]: the number of edges from
/// i to the root.
pub fn full_set_exponents(graph: &RootedMultigraph) -> Vec<u64> {
    graph
        .non_root_vertices()
        .iter()
        .map(|&v| graph.adjacency(v, graph.root()))
        .collect()
}

/// Reduced spherical parking function: divide x^P by m_[n].
pub fn reduce_spf(graph: &RootedMultigraph, values: &[u64]) -> Result<Vec<u64>> {
    if !is_spherical(graph, values)? {
        return Err(Error::NotSpherical(values.to_vec()));
    }
    let d = full_set_exponents(graph);
    Ok(values.iter().zip(&d).map(|(&p, &e)| p - e).collect())
}

pub fn sum(values: &[u64]) -> u64 {
    values.iter().sum()
}

/// rsum(P) = genus(G) - sum(P).
pub fn rsum(graph: &RootedMultigraph, values: &[u64]) -> i64 {
    graph.genus() - sum(values) as i64
}
