//! Spherical parking counts on complete bipartite graphs: the signed chain
//! formula against brute-force enumeration, plus the b^(m+n) scaling under
//! uniform edge multiplication.

use num_bigint::BigInt;

use gparking::formulas::spf_bipartite_count;
use gparking::parking::enumerate_spf;
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    println!("|sPF(K_(m+1,n))| via the chain formula (rows m, columns n):");
    for m in 1..=4u64 {
        let row: Vec<String> =
            (1..=4u64).map(|n| spf_bipartite_count(m, n).map(|c| c.to_string())).collect::<gparking::Result<_>>()?;
        println!("  m={m}: {}", row.join("  "));
    }
    println!();

    for (m, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let g = RootedMultigraph::complete_bipartite_ab(m, n, 1, 1)?;
        let brute = enumerate_spf(&g)?.len();
        let closed = spf_bipartite_count(m as u64, n as u64)?;
        println!("m={m} n={n}: enumeration {brute}, formula {closed}");
        assert_eq!(BigInt::from(brute as u64), closed);

        let b = 2u64;
        let scaled = enumerate_spf(&RootedMultigraph::complete_bipartite_ab(m, n, 1, b)?)?.len();
        let expected = BigInt::from(b).pow((m + n) as u32) * &closed;
        println!("  with every edge doubled: {scaled} = {b}^{} * {closed}", m + n);
        assert_eq!(BigInt::from(scaled as u64), expected);
    }
    Ok(())
}
