//! Multigraded Betti numbers of skeleton ideals of complete graphs from the
//! dual isolated-subset formula, cross-checked against the K-polynomial of
//! the quotient.

use gparking::formulas::{betti_table, betti_total, isolated_subsets};
use gparking::ideal::{kpolynomial_check, skeleton_ideal};
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    let (n, k) = (4usize, 1usize);
    println!("skeleton order k={k} on the complete graph K_{}:", n + 1);
    for i in 1..=n {
        let subsets = isolated_subsets(n, k, i)?;
        println!("  homological position {i}: total Betti number {}", betti_total(n, k, i)?);
        for s in &subsets {
            println!(
                "    subset {:?} ({:?}), multiplicity {}, degree {:?}, {} permutations",
                s.elements,
                s.kind,
                s.multiplicity(),
                s.multidegree(),
                s.permutation_count(),
            );
        }
    }

    let g = RootedMultigraph::complete(n)?;
    let ideal = skeleton_ideal(&g, k)?;
    let table = betti_table(n, k)?;
    println!(
        "\nK-polynomial of the quotient closes with {} table entries: {}",
        table.len(),
        kpolynomial_check(&ideal, &table)?,
    );
    Ok(())
}
