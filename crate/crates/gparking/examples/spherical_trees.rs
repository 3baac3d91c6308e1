//! The spherical burning bijection: spherical parking functions of K_5 map
//! onto uprooted trees on [4], carrying sum(P) = C(n,2) - kappa + 1.
//! Deleting the edge (1,4) shrinks both sides to the avoiding family.

use std::collections::BTreeSet;

use gparking::burning::{kappa_in, phi_spherical};
use gparking::parking::{enumerate_spf, sum};
use gparking::tree::{uprooted_avoiding, uprooted_trees};
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    let n = 4usize;
    let g = RootedMultigraph::complete(n)?;
    let spf = enumerate_spf(&g)?;
    println!("{} spherical parking functions on K_5; first few images:", spf.len());
    let mut images = BTreeSet::new();
    for (idx, p) in spf.iter().enumerate() {
        let t = phi_spherical(&g, p)?;
        if idx < 6 {
            println!(
                "  P = {:?}  sum = {}  kappa = {}  tree root {} edges {:?}",
                p,
                sum(p),
                kappa_in(&g, &t),
                t.root(),
                t.parent_map(),
            );
        }
        images.insert(t);
    }
    let all: BTreeSet<_> = uprooted_trees(n).into_iter().collect();
    println!("images cover all {} uprooted trees: {}", all.len(), images == all);
    println!();

    let h = g.delete_edge(1, n)?;
    let spf = enumerate_spf(&h)?;
    let images: BTreeSet<_> =
        spf.iter().map(|p| phi_spherical(&h, p)).collect::<gparking::Result<_>>()?;
    let avoiding: BTreeSet<_> = uprooted_avoiding(n, 1, n)?.into_iter().collect();
    println!(
        "after deleting the edge (1,{n}): {} functions, {} avoiding trees, bijection: {}",
        spf.len(),
        avoiding.len(),
        images == avoiding,
    );
    Ok(())
}
