//! The star code L(5): substitute 0 -> 0, 2 -> 1, 1 -> * in
//! U(5) ∪ {0, (2,...,2)}, read each word as a discrete box of {0,1}^5,
//! and watch the Lucas cube vertex set select exactly one point from each
//! box except the all-ones one.

use lucastile::circulant::non_adjacent_row_sums;
use lucastile::selector::{
    canonical_vertex, selector_boxes, verify_discrete_partition, verify_selector,
    verify_selector_exhaustive, StarWord,
};

fn main() {
    let n = 5;
    println!("star code L({n}) from U({n}):");
    for word in non_adjacent_row_sums(n).unwrap().iter() {
        let star = StarWord::from_residues(word).unwrap();
        assert!(star.each_star_followed_by_one());
        println!("  {word}  ->  {star}");
    }
    println!("plus 00000 -> 00000 and 22222 -> 11111");

    println!("\nboxes and their canonical vertices (0 at every *):");
    for b in selector_boxes(n).unwrap() {
        if b.is_all_ones() {
            println!("  {}  [{} points]  — excluded, contains no vertex", b.source(), b.point_count());
            continue;
        }
        let v = canonical_vertex(&b).unwrap();
        println!("  {}  [{} points]  ->  {v}", b.source(), b.point_count());
    }

    for n in (3..=19usize).step_by(2) {
        assert!(verify_discrete_partition(n).unwrap());
        assert!(verify_selector(n).unwrap());
        if n <= 11 {
            assert!(verify_selector_exhaustive(n).unwrap());
        }
    }
    println!("\npartition of {{0,1}}^n and selector property verified for odd n <= 19");
}
