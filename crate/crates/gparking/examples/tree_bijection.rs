//! The detach-and-graft bijection between uprooted trees on [n] and trees in
//! which 1 is a non-rooted leaf, together with the classification of its
//! image when the edge 1~n is forbidden.

use gparking::tree::{
    classify_avoiding_image, leaf1_trees, psi, psi_inverse, uprooted_avoiding, uprooted_trees,
    AvoidingImageClass,
};

fn main() -> gparking::Result<()> {
    let n = 4usize;
    let uprooted = uprooted_trees(n);
    println!("{} uprooted trees on [{n}]; a few images under the bijection:", uprooted.len());
    for t in uprooted.iter().take(5) {
        let image = psi(t)?;
        assert_eq!(&psi_inverse(&image)?, t);
        println!(
            "  root {} edges {:?}  ->  root {} edges {:?}",
            t.root(),
            t.parent_map(),
            image.root(),
            image.parent_map(),
        );
    }
    println!("every image has 1 as a non-rooted leaf and the map round-trips.");
    println!();

    let avoiding = uprooted_avoiding(n, 1, n)?;
    let mut tallies = [0usize; 3];
    for t in leaf1_trees(n) {
        if t.adjacent(1, n) {
            continue;
        }
        match classify_avoiding_image(&t, n)? {
            AvoidingImageClass::A => tallies[0] += 1,
            AvoidingImageClass::BPrime => tallies[1] += 1,
            AvoidingImageClass::BDoublePrime => tallies[2] += 1,
            AvoidingImageClass::Outside => {}
        }
    }
    println!(
        "forbidding the edge 1~{n}: {} uprooted trees avoid it, and the image of the \
         bijection splits as {} (root = {n}) + {} (root adjacent to {n}) + {} (root not \
         adjacent to {n}) = {}",
        avoiding.len(),
        tallies[0],
        tallies[1],
        tallies[2],
        tallies.iter().sum::<usize>(),
    );
    Ok(())
}
