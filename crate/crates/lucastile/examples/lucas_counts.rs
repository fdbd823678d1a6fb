//! Lucas cube vertices and the three weight counts, brute force against
//! closed form, plus the substitution 2 -> 0 that identifies U(n) ∪ {0}
//! with the vertex set.

use lucastile::lucas::{
    closed_forms_match_enumeration, lucas_number, lucas_vertices, substitution_matches_vertices,
    weight_count, weight_count_one_at, weight_count_zero_at,
};

fn main() {
    let n = 7;
    let vertices = lucas_vertices(n);
    println!("Λ_{n} has {} vertices (L_{n} = {}):", vertices.len(), lucas_number(n as u64));
    for chunk in vertices.chunks(8) {
        let row: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
        println!("  {}", row.join(" "));
    }

    println!("\nweight counts at n = {n} (closed forms):");
    for k in 0..=n as u64 / 2 {
        println!(
            "  k = {k}: total {}, with 1 at position 1: {}, with 0 at position 1: {}",
            weight_count(n as u64, k),
            weight_count_one_at(n as u64, k, 1).unwrap(),
            weight_count_zero_at(n as u64, k, 1).unwrap(),
        );
    }

    for n in 2..=24usize {
        assert!(closed_forms_match_enumeration(n));
    }
    println!("\nclosed forms match brute-force enumeration for every weight and position, n <= 24");

    for n in (3..=25usize).step_by(2) {
        assert!(substitution_matches_vertices(n).unwrap());
    }
    println!("the 2 -> 0 substitution on U(n) ∪ {{0}} gives exactly the vertex set, odd n <= 25");
}
