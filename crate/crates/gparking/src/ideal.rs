//! Monomial ideals over exponent vectors: parking ideals, skeleton ideals,
//! Alexander duality, standard monomials and K-polynomial verification.
//!
//! Generators are stored minimalized (no generator divides another) and
//! sorted lexicographically, so ideal equality is plain `==`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;

/// Exponent vector of a monomial over the ambient variables.
pub type Exponents = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient_n: usize,
    generators: Vec<Exponents>,
}

pub fn divides(g: &[u64], m: &[u64]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

impl MonomialIdeal {
    pub fn new(ambient_n: usize, gens: Vec<Exponents>) -> Result<Self> {
        for g in &gens {
            if g.len() != ambient_n {
                return Err(Error::DimensionMismatch(g.len(), ambient_n));
            }
        }
        Ok(MonomialIdeal { ambient_n, generators: minimalize(gens) })
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn contains(&self, m: &[u64]) -> Result<bool> {
        if m.len() != self.ambient_n {
            return Err(Error::DimensionMismatch(m.len(), self.ambient_n));
        }
        Ok(self.generators.iter().any(|g| divides(g, m)))
    }

    /// Colon ideal (I : x_var), `var` is a zero-based variable index.
    pub fn colon_var(&self, var: usize) -> Result<Self> {
        if var >= self.ambient_n {
            return Err(Error::BadVertex(var));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut h = g.clone();
                if h[var] > 0 {
                    h[var] -= 1;
                }
                h
            })
            .collect();
        Ok(MonomialIdeal { ambient_n: self.ambient_n, generators: minimalize(gens) })
    }

    /// Alexander dual with respect to `bound`: x^b lies in the dual iff
    /// x^{bound - min(b, bound)} is outside `self`. Computed by a scan of the
    /// box 0 <= b <= bound for minimal members.
    pub fn alexander_dual(&self, bound: &[u64]) -> Result<Self> {
        if bound.len() != self.ambient_n {
            return Err(Error::DimensionMismatch(bound.len(), self.ambient_n));
        }
        for g in &self.generators {
            for (i, (&gi, &ai)) in g.iter().zip(bound).enumerate() {
                if gi > ai {
                    return Err(Error::DualBoundExceeded(i));
                }
            }
        }
        let n = self.ambient_n;
        let dims: Vec<usize> = bound.iter().map(|&a| a as usize + 1).collect();
        let strides = strides(&dims);
        let size: usize = dims.iter().product();

        // Upward closure of the generators over the box: in_ideal[c] holds
        // exactly when some generator divides c.
        let mut in_ideal = vec![false; size];
        for g in &self.generators {
            in_ideal[index_of(g, &strides)] = true;
        }
        let mut point = vec![0u64; n];
        for idx in 0..size {
            if !in_ideal[idx] {
                for i in 0..n {
                    if point[i] > 0 && in_ideal[idx - strides[i]] {
                        in_ideal[idx] = true;
                        break;
                    }
                }
            }
            increment(&mut point, bound);
        }

        let member = |b: &[u64]| -> bool {
            let complement: Vec<u64> = bound.iter().zip(b).map(|(&a, &bi)| a - bi.min(a)).collect();
            !in_ideal[index_of(&complement, &strides)]
        };

        let mut gens = Vec::new();
        let mut b = vec![0u64; n];
        loop {
            if member(&b) {
                let minimal = (0..n).all(|i| {
                    if b[i] == 0 {
                        return true;
                    }
                    let mut lower = b.clone();
                    lower[i] -= 1;
                    !member(&lower)
                });
                if minimal {
                    gens.push(b.clone());
                }
            }
            if !increment(&mut b, bound) {
                break;
            }
        }
        Ok(MonomialIdeal { ambient_n: n, generators: minimalize(gens) })
    }

    /// Minimal exponent of a pure power of each variable among the
    /// generators; errors when some variable has none (non-Artinian ideal).
    pub fn pure_power_bounds(&self) -> Result<Vec<u64>> {
        let mut bounds = vec![None; self.ambient_n];
        for g in &self.generators {
            let support: Vec<usize> = (0..self.ambient_n).filter(|&i| g[i] > 0).collect();
            if let [i] = support[..] {
                let best = bounds[i].get_or_insert(g[i]);
                *best = (*best).min(g[i]);
            }
        }
        bounds
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or(Error::NotArtinian(i)))
            .collect()
    }

    /// All exponent vectors outside the ideal, in lexicographic order.
    pub fn standard_monomials(&self) -> Result<Vec<Exponents>> {
        let bounds: Vec<u64> =
            self.pure_power_bounds()?.into_iter().map(|d| d.saturating_sub(1)).collect();
        let mut out = Vec::new();
        let mut b = vec![0u64; self.ambient_n];
        loop {
            if !self.contains(&b)? {
                out.push(b.clone());
            }
            if !increment(&mut b, &bounds) {
                break;
            }
        }
        Ok(out)
    }

    pub fn dim_quotient(&self) -> Result<BigInt> {
        let bounds: Vec<u64> =
            self.pure_power_bounds()?.into_iter().map(|d| d.saturating_sub(1)).collect();
        let mut count: u64 = 0;
        let mut b = vec![0u64; self.ambient_n];
        loop {
            if !self.contains(&b)? {
                count += 1;
            }
            if !increment(&mut b, &bounds) {
                break;
            }
        }
        Ok(BigInt::from(count))
    }
}

/// The G-parking function ideal: one generator per nonempty subset A of the
/// non-root vertices, with exponent d_A(i) at each i in A.
pub fn parking_ideal(graph: &RootedMultigraph) -> MonomialIdeal {
    skeleton_ideal(graph, graph.n() - 1).expect("k = n-1 is always in range")
}

/// The k-skeleton subideal: only the generators with |A| <= k+1.
pub fn skeleton_ideal(graph: &RootedMultigraph, k: usize) -> Result<MonomialIdeal> {
    let n = graph.n();
    if k > n - 1 {
        return Err(Error::BadParameter(format!("skeleton index {k} out of 0..={}", n - 1)));
    }
    let verts = graph.non_root_vertices();
    let mut gens = Vec::new();
    for mask in 1u64..(1 << n) {
        if (mask.count_ones() as usize) > k + 1 {
            continue;
        }
        let subset: Vec<usize> =
            (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        let mut exps = vec![0u64; n];
        for (i, &v) in verts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                exps[i] = graph.d_a(&subset, v).expect("v is in the subset");
            }
        }
        gens.push(exps);
    }
    MonomialIdeal::new(n, gens)
}

/// Ideal generated by all distinct coordinate permutations of `u`
/// (`u` nondecreasing).
pub fn multipermutohedron_ideal(u: &[u64]) -> Result<MonomialIdeal> {
    if u.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParameter("u must be nondecreasing".into()));
    }
    let mut gens = std::collections::BTreeSet::new();
    let mut current = u.to_vec();
    permute_into(&mut current, 0, &mut gens);
    MonomialIdeal::new(u.len(), gens.into_iter().collect())
}

fn permute_into(v: &mut Vec<u64>, start: usize, out: &mut std::collections::BTreeSet<Exponents>) {
    if start == v.len() {
        out.insert(v.clone());
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permute_into(v, start + 1, out);
        v.swap(start, i);
    }
}

/// A row of a multigraded Betti table: homological index `i` (so the entry
/// describes beta_i of the ideal), multidegree, multiplicity.
#[derive(Debug, Clone)]
pub struct BettiEntry {
    pub index: usize,
    pub degree: Exponents,
    pub multiplicity: BigInt,
}

/// Verifies a multigraded Betti table against the Hilbert series of R/I:
/// as exact polynomials,
///   sum_{b std} x^b * prod_j (1 - x_j)  ==  1 - sum (-1)^i beta_{i,b} x^b.
pub fn kpolynomial_check(ideal: &MonomialIdeal, table: &[BettiEntry]) -> Result<bool> {
    let n = ideal.ambient_n();
    let std_monomials = ideal.standard_monomials()?;
    let mut lhs: BTreeMap<Exponents, BigInt> = BTreeMap::new();
    for b in std_monomials {
        *lhs.entry(b).or_insert_with(BigInt::zero) += 1;
    }
    for j in 0..n {
        let mut next: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (b, c) in &lhs {
            *next.entry(b.clone()).or_insert_with(BigInt::zero) += c;
            let mut up = b.clone();
            up[j] += 1;
            *next.entry(up).or_insert_with(BigInt::zero) -= c;
        }
        lhs = next;
    }
    lhs.retain(|_, c| !c.is_zero());

    let mut rhs: BTreeMap<Exponents, BigInt> = BTreeMap::new();
    rhs.insert(vec![0; n], BigInt::one());
    for entry in table {
        if entry.degree.len() != n {
            return Err(Error::DimensionMismatch(entry.degree.len(), n));
        }
        let signed = if entry.index % 2 == 0 {
            -entry.multiplicity.clone()
        } else {
            entry.multiplicity.clone()
        };
        *rhs.entry(entry.degree.clone()).or_insert_with(BigInt::zero) += signed;
    }
    rhs.retain(|_, c| !c.is_zero());

    Ok(lhs == rhs)
}

/// Render an exponent vector as a monomial string, e.g. `x1^2*x3`.
pub fn monomial_string(exps: &[u64]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn minimalize(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| i != j && h != g && divides(h, g)))
        .collect();
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

/// Advance `point` through the box 0..=bounds in lexicographic order with the
/// last coordinate fastest; returns false after the last point.
pub fn increment(point: &mut [u64], bounds: &[u64]) -> bool {
    for i in (0..point.len()).rev() {
        if point[i] < bounds[i] {
            point[i] += 1;
            return true;
        }
        point[i] = 0;
    }
    false
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

fn index_of(point: &[u64], strides: &[usize]) -> usize {
    point.iter().zip(strides).map(|(&p, &s)| p as usize * s).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn parking_ideal_k3() {
        let g = RootedMultigraph::complete(2).unwrap();
        let i = parking_ideal(&g);
        assert_eq!(i.generators(), &[vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn skeleton_zero_is_pure_powers() {
        let g = RootedMultigraph::complete(3).unwrap();
        let i = skeleton_ideal(&g, 0).unwrap();
        assert_eq!(i.generators(), &[vec![0, 0, 3], vec![0, 3, 0], vec![3, 0, 0]]);
        assert!(!i.contains(&[2, 2, 2]).unwrap());
        assert!(skeleton_ideal(&g, 3).is_err());
    }

    #[test]
    fn skeleton_multigraph_minimalizes() {
        let g = RootedMultigraph::complete_ab(2, 1, 2).unwrap();
        let i = skeleton_ideal(&g, 1).unwrap();
        assert_eq!(i.generators(), &[vec![0, 3], vec![1, 1], vec![3, 0]]);
    }

    #[test]
    fn contains_and_colon() {
        let g = RootedMultigraph::complete(2).unwrap();
        let i = parking_ideal(&g);
        assert!(i.contains(&[1, 1]).unwrap());
        let colon = i.colon_var(1).unwrap();
        assert_eq!(colon.generators(), &[vec![0, 1], vec![1, 0]]);
        // colon by the last variable equals the parking ideal of the
        // graph with one root edge to that vertex removed.
        let deleted = g.delete_edge(0, 2).unwrap();
        assert_eq!(colon, parking_ideal(&deleted));
    }

    #[test]
    fn alexander_dual_examples() {
        let perm = multipermutohedron_ideal(&[1, 2]).unwrap();
        assert_eq!(perm.generators(), &[vec![1, 2], vec![2, 1]]);
        let dual = perm.alexander_dual(&[2, 2]).unwrap();
        let g = RootedMultigraph::complete(2).unwrap();
        assert_eq!(dual, parking_ideal(&g));

        let i = ideal(2, &[&[1, 1]]);
        let d = i.alexander_dual(&[1, 1]).unwrap();
        assert_eq!(d.generators(), &[vec![0, 1], vec![1, 0]]);

        // involution
        let j = parking_ideal(&RootedMultigraph::complete(3).unwrap());
        let a = vec![3, 3, 3];
        assert_eq!(j.alexander_dual(&a).unwrap().alexander_dual(&a).unwrap(), j);

        let too_big = ideal(2, &[&[3, 0]]);
        assert!(too_big.alexander_dual(&[2, 2]).is_err());
    }

    #[test]
    fn multipermutohedron_counts() {
        assert_eq!(multipermutohedron_ideal(&[1, 1]).unwrap().generators().len(), 1);
        assert_eq!(multipermutohedron_ideal(&[1, 2, 2]).unwrap().generators().len(), 3);
        assert!(multipermutohedron_ideal(&[2, 1]).is_err());
    }

    #[test]
    fn standard_monomials_and_dims() {
        for n in 1..=4usize {
            let g = RootedMultigraph::complete(n).unwrap();
            let dim = parking_ideal(&g).dim_quotient().unwrap();
            assert_eq!(dim, BigInt::from(n as u64 + 1).pow(n as u32 - 1), "n={n}");
        }
        let g3 = RootedMultigraph::complete(3).unwrap();
        assert_eq!(skeleton_ideal(&g3, 1).unwrap().dim_quotient().unwrap(), BigInt::from(20));
        let g2 = RootedMultigraph::complete(2).unwrap();
        assert_eq!(skeleton_ideal(&g2, 0).unwrap().dim_quotient().unwrap(), BigInt::from(4));
    }

    #[test]
    fn non_artinian_is_an_error() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.standard_monomials().unwrap_err(), Error::NotArtinian(0));
    }

    #[test]
    fn kpolynomial_koszul() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let table = vec![
            BettiEntry { index: 0, degree: vec![1, 0], multiplicity: BigInt::one() },
            BettiEntry { index: 0, degree: vec![0, 1], multiplicity: BigInt::one() },
            BettiEntry { index: 1, degree: vec![1, 1], multiplicity: BigInt::one() },
        ];
        assert!(kpolynomial_check(&i, &table).unwrap());
        let mut bad = table;
        bad[2].multiplicity = BigInt::from(2);
        assert!(!kpolynomial_check(&i, &bad).unwrap());
    }

    #[test]
    fn monomial_strings() {
        assert_eq!(monomial_string(&[2, 0, 1]), "x1^2*x3");
        assert_eq!(monomial_string(&[0, 0]), "1");
    }
}
