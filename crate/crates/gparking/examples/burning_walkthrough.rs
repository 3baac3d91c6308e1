//! Step through the depth-first burning process on the complete graph K_4,
//! showing the event log, the resulting spanning tree, and the statistic
//! rsum = kappa that makes the process a bijection.

use gparking::burning::{burn, kappa_in, BurnEvent};
use gparking::parking::{enumerate_pf, is_gpf, rsum};
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    let g = RootedMultigraph::complete(3)?;
    let p = [0u64, 1, 1];
    println!("burning K_4 rooted at 0 with P = {p:?} (a parking function: {})", is_gpf(&g, &p)?);
    let outcome = burn(&g, 0, &p)?;
    for event in &outcome.events {
        match event {
            BurnEvent::Dampen { from, to, count } => {
                println!("  {from} dampens {count} edge(s) toward {to}")
            }
            BurnEvent::Burn { from, to, label } => {
                println!("  fire spreads {from} -> {to} (edge label {label})")
            }
            BurnEvent::Backtrack { at } => println!("  backtrack at {at}"),
        }
    }
    println!("burnt order: {:?}", outcome.burnt);
    println!("tree edges (child -> parent): {:?}", outcome.tree.parent_map());
    println!();

    println!("the statistic: rsum(P) = kappa(tree) over all of PF(K_4)");
    for p in enumerate_pf(&g)? {
        let t = burn(&g, 0, &p)?.tree;
        println!("  P = {:?}  rsum = {}  kappa = {}", p, rsum(&g, &p), kappa_in(&g, &t));
    }
    Ok(())
}
