//! Closed-form and determinantal counting formulas: Steck determinants, the
//! f/g polynomial family, closed skeleton dimensions, Betti numbers of
//! skeleton ideals of complete graphs via dual isolated subsets, and the
//! alternating bipartite count.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::BettiEntry;
use crate::parking::LambdaVector;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// n! / (p_1! p_2! ... p_r!) for parts summing to n.
pub fn multinomial(n: u64, parts: &[u64]) -> BigInt {
    debug_assert_eq!(parts.iter().sum::<u64>(), n);
    let mut out = factorial(n);
    for &p in parts {
        out /= factorial(p);
    }
    out
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let lead = m[col][col].clone();
        det *= &lead;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &lead;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Determinant of the matrix with (i,j) entry lambda_{n-i+1}^{j-i+1} over
/// (j-i+1)!, taken as zero below the first subdiagonal. `lambda` must be
/// nonincreasing and nonnegative.
pub fn steck_det(lambda: &[BigRational]) -> Result<BigRational> {
    let n = lambda.len();
    if n == 0 {
        return Err(Error::BadParameter("lambda must be nonempty".into()));
    }
    if lambda.iter().any(|l| l.is_negative()) {
        return Err(Error::BadParameter("lambda must be nonnegative".into()));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadParameter("lambda must be nonincreasing".into()));
    }
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if i > j + 1 {
                continue;
            }
            let e = (j + 1 - i) as u64;
            let base = &lambda[n - 1 - i];
            let mut pw = BigRational::one();
            for _ in 0..e {
                pw *= base;
            }
            *entry = pw / BigRational::from_integer(factorial(e));
        }
    }
    Ok(rational_det(m))
}

fn lambda_to_rationals(lambda: &LambdaVector) -> Vec<BigRational> {
    lambda.entries().iter().map(|&l| BigRational::from_integer(BigInt::from(l))).collect()
}

/// n! times the Steck determinant; the count of lambda-parking functions.
/// A non-integral product is an internal inconsistency, never rounded.
pub fn lambda_pf_count_steck(lambda: &LambdaVector) -> Result<BigInt> {
    let det = steck_det(&lambda_to_rationals(lambda))?;
    let count = det * BigRational::from_integer(factorial(lambda.len() as u64));
    if !count.is_integer() {
        return Err(Error::Inconsistent(format!("n! * steck_det = {count} is not an integer")));
    }
    Ok(count.to_integer())
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow_rat(base: &BigRational, e: u64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

/// The determinant definition of f_n: the Steck determinant of
/// (x+(n-1)b, ..., x+b, x).
pub fn f_steck_eval(n: usize, b: u64, x: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::BadParameter("f_n needs n >= 1".into()));
    }
    let lambda: Vec<BigRational> =
        (0..n).rev().map(|i| x + rat((i as u64 * b) as i64)).collect();
    steck_det(&lambda)
}

/// Closed form f_n(x) = x (x+nb)^{n-1} / n!.
pub fn f_poly_eval(n: usize, b: u64, x: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::BadParameter("f_n needs n >= 1".into()));
    }
    let shifted = x + rat((n as u64 * b) as i64);
    Ok(x * pow_rat(&shifted, n as u64 - 1) / BigRational::from_integer(factorial(n as u64)))
}

/// The determinant definition of g_{n;k}: the Steck determinant of
/// (x+kb, ..., x+b, x, ..., x) with n-k trailing copies of x.
pub fn g_steck_eval(n: usize, k: usize, b: u64, x: &BigRational) -> Result<BigRational> {
    if k < 1 || k + 2 > n {
        return Err(Error::BadParameter(format!("g needs 1 <= k <= n-2, got n={n} k={k}")));
    }
    let mut lambda: Vec<BigRational> =
        (1..=k).rev().map(|i| x + rat((i as u64 * b) as i64)).collect();
    lambda.extend(std::iter::repeat(x.clone()).take(n - k));
    steck_det(&lambda)
}

/// Closed form g_{n;k}(x) = sum_{j=0}^k (1/j!) x^{n-j}/(n-j)! (k-j+1)(k+1)^{j-1} b^j.
pub fn g_poly_eval(n: usize, k: usize, b: u64, x: &BigRational) -> Result<BigRational> {
    if k < 1 || k + 2 > n {
        return Err(Error::BadParameter(format!("g needs 1 <= k <= n-2, got n={n} k={k}")));
    }
    let kk = k as u64;
    let mut total = BigRational::zero();
    for j in 0..=kk {
        let mut term = pow_rat(x, n as u64 - j)
            / BigRational::from_integer(factorial(j) * factorial(n as u64 - j));
        term *= rat((kk - j + 1) as i64);
        // (k+1)^{j-1} has a negative exponent at j = 0
        if j == 0 {
            term /= rat((kk + 1) as i64);
        } else {
            term *= pow_rat(&rat((kk + 1) as i64), j - 1);
        }
        term *= pow_rat(&rat(b as i64), j);
        total += term;
    }
    Ok(total)
}

/// Closed-form dimension of R modulo the k-skeleton ideal of the complete
/// multigraph on n+1 vertices with root multiplicity a and inner
/// multiplicity b.
pub fn dim_skeleton_closed(n: usize, k: usize, a: u64, b: u64) -> Result<BigInt> {
    if n < 1 || a < 1 || b < 1 {
        return Err(Error::BadParameter(format!("need n, a, b >= 1, got n={n} a={a} b={b}")));
    }
    if k >= n {
        return Err(Error::BadParameter(format!("need k <= n-1, got n={n} k={k}")));
    }
    let big = |v: u64| BigInt::from(v);
    if k == 0 {
        // pure powers of exponent a+(n-1)b
        return Ok(big(a + (n as u64 - 1) * b).pow(n as u32));
    }
    if k == n - 1 {
        return Ok(big(a) * big(a + n as u64 * b).pow(n as u32 - 1));
    }
    let x = rat((a + (n as u64 - k as u64 - 1) * b) as i64);
    let dim = g_poly_eval(n, k, b, &x)? * BigRational::from_integer(factorial(n as u64));
    if !dim.is_integer() {
        return Err(Error::Inconsistent(format!("n! * g = {dim} is not an integer")));
    }
    Ok(dim.to_integer())
}

/// Indexing object for the Betti numbers of skeleton ideals of complete
/// graphs: a strictly increasing subset J of [n] together with its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedSubset {
    pub elements: Vec<usize>,
    pub kind: IsolatedKind,
    pub n: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsolatedKind {
    Type1,
    Type2,
}

impl IsolatedSubset {
    /// Dual weight. Type-1 subsets weigh t-1. For type-2 the stated weight
    /// (t-1)+(j_t-k) overshoots by one: with it the k=1 totals contradict
    /// their own closed form i*C(n+1,i+1) and the Euler characteristic of
    /// the resolution; (t-1)+(j_t-k-1) fixes both.
    pub fn dual_weight(&self) -> usize {
        let t = self.elements.len();
        match self.kind {
            IsolatedKind::Type1 => t - 1,
            IsolatedKind::Type2 => (t - 1) + self.elements[t - 1] - self.k - 1,
        }
    }

    /// The multigraded Betti multiplicity in degree b(J).
    pub fn multiplicity(&self) -> BigInt {
        match self.kind {
            IsolatedKind::Type1 => BigInt::one(),
            IsolatedKind::Type2 => {
                let t = self.elements.len();
                let jt = self.elements[t - 1] as u64;
                let jprev = if t >= 2 { self.elements[t - 2] as u64 } else { 0 };
                binomial(jt - jprev - 1, self.k as u64 - jprev)
            }
        }
    }

    /// The multidegree b(J): coordinates j_{alpha-1}+1 ..= j_alpha all take
    /// the value lambda_{j_alpha}, where lambda_i = n-i+1 for i <= k and
    /// n-k beyond.
    pub fn multidegree(&self) -> Vec<u64> {
        let lambda = |i: usize| -> u64 {
            if i <= self.k {
                (self.n - i + 1) as u64
            } else {
                (self.n - self.k) as u64
            }
        };
        let mut b = vec![0u64; self.n];
        let mut prev = 0usize;
        for &j in &self.elements {
            for coord in prev..j {
                b[coord] = lambda(j);
            }
            prev = j;
        }
        b
    }

    /// Number of distinct coordinate permutations of b(J); equals the
    /// telescoping product of binomials C(j_{alpha+1}, j_alpha) with
    /// j_{t+1} = n.
    pub fn permutation_count(&self) -> BigInt {
        let mut out = BigInt::one();
        let t = self.elements.len();
        for alpha in 0..t {
            let upper = if alpha + 1 < t { self.elements[alpha + 1] } else { self.n };
            out *= binomial(upper as u64, self.elements[alpha] as u64);
        }
        out
    }
}

/// All dual isolated subsets of weight i-1 for the k-skeleton in n
/// variables, type-1 before type-2, each in lexicographic order.
pub fn isolated_subsets(n: usize, k: usize, i: usize) -> Result<Vec<IsolatedSubset>> {
    if i < 1 || k >= n {
        return Err(Error::BadParameter(format!("need i >= 1 and k <= n-1, got n={n} k={k} i={i}")));
    }
    let mut out = Vec::new();
    // type-1: J subset of [k+1] of size i
    for set in combinations(k + 1, i) {
        out.push(IsolatedSubset { elements: set, kind: IsolatedKind::Type1, n, k });
    }
    // type-2: prefix subset of [k] of size t-1, last element j_t in (k+1, n]
    for jt in k + 2..=n {
        let needed = (i + k).checked_sub(jt);
        let size = match needed {
            Some(s) if s <= k => s,
            _ => continue,
        };
        for mut set in combinations(k, size) {
            set.push(jt);
            out.push(IsolatedSubset { elements: set, kind: IsolatedKind::Type2, n, k });
        }
    }
    Ok(out)
}

fn combinations(upper: usize, size: usize) -> Vec<Vec<usize>> {
    if size > upper {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(start: usize, upper: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..=upper {
            current.push(v);
            rec(v + 1, upper, size, current, out);
            current.pop();
        }
    }
    rec(1, upper, size, &mut current, &mut out);
    out
}

/// Multidegree and multiplicity of one isolated subset.
pub fn betti_multidegree(subset: &IsolatedSubset) -> (Vec<u64>, BigInt) {
    (subset.multidegree(), subset.multiplicity())
}

/// Total (i-1)-th Betti number of the k-skeleton ideal of the complete
/// graph on n+1 vertices: multiplicity times the permutation count, summed
/// over both types.
pub fn betti_total(n: usize, k: usize, i: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for subset in isolated_subsets(n, k, i)? {
        total += subset.multiplicity() * subset.permutation_count();
    }
    Ok(total)
}

/// The full multigraded Betti table of the k-skeleton ideal: one entry per
/// distinct coordinate permutation of each b(J), indexed by dual weight.
pub fn betti_table(n: usize, k: usize) -> Result<Vec<BettiEntry>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for subset in isolated_subsets(n, k, i)? {
            let (degree, multiplicity) = betti_multidegree(&subset);
            for permuted in distinct_permutations(&degree) {
                out.push(BettiEntry {
                    index: i - 1,
                    degree: permuted,
                    multiplicity: multiplicity.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn distinct_permutations(v: &[u64]) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    let mut v = v.to_vec();
    v.sort_unstable();
    permute(&mut v, 0, &mut out);
    out
}

fn permute(v: &mut Vec<u64>, at: usize, out: &mut BTreeSet<Vec<u64>>) {
    if at + 1 >= v.len() {
        out.insert(v.clone());
        return;
    }
    let mut seen = BTreeSet::new();
    for i in at..v.len() {
        if !seen.insert(v[i]) {
            continue;
        }
        v.swap(at, i);
        permute(v, at + 1, out);
        v.swap(at, i);
    }
}

/// One (s, t) pair indexing chains in the bipartite resolution: both tuples
/// nondecreasing, s_j <= m, t_j <= n, the final sums hit m and n, and the
/// total s_j + t_j strictly increases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPair {
    pub s: Vec<u64>,
    pub t: Vec<u64>,
}

impl GammaPair {
    fn mu(&self, m: u64, n: u64) -> BigInt {
        let mut out = BigInt::one();
        for j in 0..self.s.len() {
            let (sj, tj) = (self.s[j], self.t[j]);
            if sj >= m || tj >= n {
                continue;
            }
            let sprev = if j == 0 { 0 } else { self.s[j - 1] };
            let tprev = if j == 0 { 0 } else { self.t[j - 1] };
            out *= BigInt::from(n - tj).pow((sj - sprev) as u32);
            out *= BigInt::from(m - sj).pow((tj - tprev) as u32);
        }
        out
    }

    fn chain_count(&self, m: u64, n: u64) -> BigInt {
        multinomial(m, &increments(&self.s)) * multinomial(n, &increments(&self.t))
    }
}

fn increments(v: &[u64]) -> Vec<u64> {
    let mut prev = 0;
    v.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

/// All Gamma pairs of length i for the (m, n) bipartite count.
pub fn gamma_pairs(m: u64, n: u64, i: usize) -> Vec<GammaPair> {
    let mut out = Vec::new();
    let mut s = Vec::with_capacity(i);
    let mut t = Vec::with_capacity(i);
    fn rec(m: u64, n: u64, i: usize, s: &mut Vec<u64>, t: &mut Vec<u64>, out: &mut Vec<GammaPair>) {
        let j = s.len();
        if j == i {
            if *s.last().unwrap() == m && *t.last().unwrap() == n {
                out.push(GammaPair { s: s.clone(), t: t.clone() });
            }
            return;
        }
        let (sp, tp) = if j == 0 { (0, 0) } else { (s[j - 1], t[j - 1]) };
        for sj in sp..=m {
            for tj in tp..=n {
                let total = sj + tj;
                if total <= sp + tp {
                    continue;
                }
                // the remaining steps must each raise the total by >= 1
                if m + n - total < (i - j - 1) as u64 {
                    continue;
                }
                s.push(sj);
                t.push(tj);
                rec(m, n, i, s, t, out);
                s.pop();
                t.pop();
            }
        }
    }
    rec(m, n, i, &mut s, &mut t, &mut out);
    out
}

/// Number of spherical parking functions of the complete bipartite graph
/// K_{m+1,n} (root in the m-side), by the alternating chain count.
pub fn spf_bipartite_count(m: u64, n: u64) -> Result<BigInt> {
    if m < 1 || n < 1 {
        return Err(Error::BadParameter("bipartite count needs m, n >= 1".into()));
    }
    let mut total = BigInt::zero();
    for i in 1..=(m + n) as usize {
        let mut inner = BigInt::zero();
        for pair in gamma_pairs(m, n, i) {
            inner += pair.chain_count(m, n) * pair.mu(m, n);
        }
        if (m + n) as usize % 2 != i % 2 {
            total -= inner;
        } else {
            total += inner;
        }
    }
    Ok(total)
}

/// (n-1)^{n-3} (n-2)^2: the number of uprooted trees on [n] avoiding the
/// edge 1~n, equivalently of spherical parking functions of the complete
/// graph minus that edge.
pub fn un_prime_count(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::BadParameter("need n >= 3".into()));
    }
    Ok(BigInt::from(n as u64 - 1).pow(n as u32 - 3) * BigInt::from(n as u64 - 2).pow(2))
}

/// A single verified identity: both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Report {
    pub fn new(claim: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        let pass = lhs == rhs;
        Report { claim: claim.into(), lhs, rhs, pass }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {}: lhs = {}, rhs = {}",
            if self.pass { "pass" } else { "FAIL" },
            self.claim,
            self.lhs,
            self.rhs
        )
    }
}

/// Direct evaluations of the summation identities behind the closed
/// dimension counts, plus the avoided-edge tree count when small enough to
/// enumerate.
pub fn identity_checks(n: usize, a: u64, b: u64) -> Result<Vec<Report>> {
    if n < 2 || a < 1 || b < 1 {
        return Err(Error::BadParameter("identity checks need n >= 2, a, b >= 1".into()));
    }
    let mut reports = Vec::new();
    let big = |v: u64| BigInt::from(v);

    let sum_form = dim_skeleton_closed(n, n - 2, a, b)?;
    let closed = big(a) * big(a + n as u64 * b).pow(n as u32 - 1)
        + big(n as u64 - 1).pow(n as u32 - 1) * big(b).pow(n as u32);
    reports.push(Report::new(
        format!("skeleton dimension sum equals a(a+nb)^(n-1)+(n-1)^(n-1)b^n at n={n} a={a} b={b}"),
        sum_form,
        closed,
    ));

    if n >= 2 {
        let dim1 = dim_skeleton_closed(n, 1, a, b)?;
        let closed1 = big(a + (n as u64 - 2) * b).pow(n as u32 - 1) * big(a + (2 * n as u64 - 2) * b);
        reports.push(Report::new(
            format!("1-skeleton dimension equals (a+(n-2)b)^(n-1)(a+(2n-2)b) at n={n} a={a} b={b}"),
            dim1,
            closed1,
        ));
    }

    if (3..=7).contains(&n) {
        let trees = crate::tree::uprooted_avoiding(n, 1, n)?.len();
        reports.push(Report::new(
            format!("uprooted trees on [{n}] avoiding 1~{n} count (n-1)^(n-3)(n-2)^2"),
            BigInt::from(trees as u64),
            un_prime_count(n)?,
        ));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::RootedMultigraph;
    use crate::ideal::{kpolynomial_check, skeleton_ideal};
    use crate::parking::enumerate_lambda_pf;

    fn lv(entries: &[u64]) -> LambdaVector {
        LambdaVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn steck_examples() {
        let det = steck_det(&lambda_to_rationals(&lv(&[3, 2, 1]))).unwrap();
        assert_eq!(det, BigRational::new(BigInt::from(8), BigInt::from(3)));
        assert_eq!(lambda_pf_count_steck(&lv(&[3, 2, 1])).unwrap(), BigInt::from(16));
        assert_eq!(lambda_pf_count_steck(&lv(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(lambda_pf_count_steck(&lv(&[2, 2])).unwrap(), BigInt::from(4));
        assert!(steck_det(&[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn steck_matches_enumeration() {
        for entries in [vec![2, 1], vec![3, 3, 1], vec![4, 2, 2, 1], vec![5, 4, 2]] {
            let l = lv(&entries);
            let brute = enumerate_lambda_pf(&l).unwrap().len();
            assert_eq!(
                lambda_pf_count_steck(&l).unwrap(),
                BigInt::from(brute as u64),
                "{entries:?}"
            );
        }
    }

    #[test]
    fn f_and_g_closed_forms_match_determinants() {
        for n in 1..=6usize {
            for b in 1..=2u64 {
                for p in 0..=n as i64 {
                    let x = BigRational::new(BigInt::from(2 * p + 1), BigInt::from(2));
                    assert_eq!(
                        f_steck_eval(n, b, &x).unwrap(),
                        f_poly_eval(n, b, &x).unwrap(),
                        "f n={n} b={b} p={p}"
                    );
                    for k in 1..=n.saturating_sub(2) {
                        assert_eq!(
                            g_steck_eval(n, k, b, &x).unwrap(),
                            g_poly_eval(n, k, b, &x).unwrap(),
                            "g n={n} k={k} b={b} p={p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn g_special_cases() {
        // g_{n;1}(x) = x^{n-1}(x+nb)/n!
        let x = rat(2);
        let g = g_poly_eval(3, 1, 1, &x).unwrap();
        assert_eq!(g, BigRational::new(BigInt::from(10), BigInt::from(3)));
        // g_{n;n-2}(x) = [(x-b)(x+(n-1)b)^{n-1} + (n-1)^{n-1} b^n]/n!
        for n in 3..=6usize {
            for b in 1..=2u64 {
                for p in 0..=2i64 {
                    let x = rat(p + 1);
                    let closed = (&x - rat(b as i64))
                        * pow_rat(&(&x + rat(((n as u64 - 1) * b) as i64)), n as u64 - 1)
                        + BigRational::from_integer(
                            BigInt::from(n as u64 - 1).pow(n as u32 - 1)
                                * BigInt::from(b).pow(n as u32),
                        );
                    let closed = closed / BigRational::from_integer(factorial(n as u64));
                    assert_eq!(g_poly_eval(n, n - 2, b, &x).unwrap(), closed, "n={n} b={b} p={p}");
                }
            }
        }
    }

    #[test]
    fn dims_match_enumeration() {
        for n in 2..=4usize {
            for a in 1..=2u64 {
                for b in 1..=2u64 {
                    let g = RootedMultigraph::complete_ab(n, a, b).unwrap();
                    for k in 0..n {
                        let brute =
                            skeleton_ideal(&g, k).unwrap().dim_quotient().unwrap();
                        assert_eq!(
                            dim_skeleton_closed(n, k, a, b).unwrap(),
                            brute,
                            "n={n} k={k} a={a} b={b}"
                        );
                    }
                }
            }
        }
        assert_eq!(dim_skeleton_closed(3, 1, 1, 1).unwrap(), BigInt::from(20));
        assert_eq!(dim_skeleton_closed(2, 0, 1, 1).unwrap(), BigInt::from(4));
        assert_eq!(dim_skeleton_closed(3, 1, 1, 1).unwrap(), dim_skeleton_closed(3, 1, 1, 1).unwrap());
    }

    #[test]
    fn isolated_subset_small_case() {
        // n=3, k=1: weights 0, 1, 2 carry 6, 8, 3
        assert_eq!(betti_total(3, 1, 1).unwrap(), BigInt::from(6));
        assert_eq!(betti_total(3, 1, 2).unwrap(), BigInt::from(8));
        assert_eq!(betti_total(3, 1, 3).unwrap(), BigInt::from(3));
        let w0 = isolated_subsets(3, 1, 1).unwrap();
        assert_eq!(w0.len(), 2);
        assert_eq!(w0[0].elements, vec![1]);
        assert_eq!(w0[1].elements, vec![2]);
        assert!(isolated_subsets(3, 1, 4).unwrap().is_empty());
    }

    #[test]
    fn betti_k1_closed_form() {
        for n in 3..=6usize {
            for i in 1..=n {
                let expected = BigInt::from(i as u64) * binomial(n as u64 + 1, i as u64 + 1);
                assert_eq!(betti_total(n, 1, i).unwrap(), expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn betti_zero_counts_generators() {
        for n in 2..=5usize {
            let g = RootedMultigraph::complete(n).unwrap();
            for k in 0..n {
                let gens = skeleton_ideal(&g, k).unwrap().generators().len();
                assert_eq!(
                    betti_total(n, k, 1).unwrap(),
                    BigInt::from(gens as u64),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn betti_table_closes_the_hilbert_series() {
        for n in 2..=4usize {
            let g = RootedMultigraph::complete(n).unwrap();
            for k in 0..n {
                let ideal = skeleton_ideal(&g, k).unwrap();
                let table = betti_table(n, k).unwrap();
                assert!(kpolynomial_check(&ideal, &table).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for n in 2..=6usize {
            for k in 0..n {
                let mut alternating = BigInt::one();
                for i in 1..=n {
                    let term = betti_total(n, k, i).unwrap();
                    if i % 2 == 1 {
                        alternating -= term;
                    } else {
                        alternating += term;
                    }
                }
                assert_eq!(alternating, BigInt::zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bipartite_counts() {
        assert_eq!(spf_bipartite_count(1, 1).unwrap(), BigInt::from(1));
        for m in 1..=4u64 {
            for n in 1..=4u64 {
                assert_eq!(
                    spf_bipartite_count(m, n).unwrap(),
                    spf_bipartite_count(n, m).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn bipartite_matches_brute_force() {
        use crate::parking::enumerate_spf;
        for (m, n) in [(1u64, 1u64), (1, 2), (2, 2), (1, 3), (2, 3)] {
            let g = RootedMultigraph::complete_bipartite_ab(m as usize, n as usize, 1, 1).unwrap();
            let brute = enumerate_spf(&g).unwrap().len();
            assert_eq!(
                spf_bipartite_count(m, n).unwrap(),
                BigInt::from(brute as u64),
                "m={m} n={n}"
            );
        }
    }

    #[test]
    fn identity_reports() {
        for r in identity_checks(4, 1, 1).unwrap() {
            assert!(r.pass, "{r}");
        }
        let reports = identity_checks(4, 1, 1).unwrap();
        assert_eq!(reports[0].lhs, "152");
        for r in identity_checks(3, 2, 5).unwrap() {
            assert!(r.pass, "{r}");
        }
        assert_eq!(un_prime_count(4).unwrap(), BigInt::from(12));
    }
}
