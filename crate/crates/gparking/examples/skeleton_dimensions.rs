//! Dimensions of the quotients by skeleton ideals of complete multigraphs:
//! brute-force standard monomial counts against the determinant-backed
//! closed forms, for every skeleton order k.

use gparking::formulas::dim_skeleton_closed;
use gparking::ideal::skeleton_ideal;
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    for (n, a, b) in [(3usize, 1u64, 1u64), (4, 1, 1), (4, 1, 2), (4, 2, 2)] {
        let g = RootedMultigraph::complete_ab(n, a, b)?;
        println!("complete multigraph on {} vertices, a={a}, b={b}:", n + 1);
        for k in 0..n {
            let ideal = skeleton_ideal(&g, k)?;
            let brute = ideal.dim_quotient()?;
            let closed = dim_skeleton_closed(n, k, a, b)?;
            println!(
                "  k={k}: {} generators, dim = {brute} (closed form {closed})",
                ideal.generators().len(),
            );
            assert_eq!(brute, closed);
        }
        println!();
    }
    Ok(())
}
