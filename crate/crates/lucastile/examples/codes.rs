//! Build the circulant A(5) and every code set derived from it: the full
//! subset-sum sets V(A) and V(A^T), the parity-filtered halves Ve(A) and
//! Vo(A^T), the Lagarias-Shor tiling code V, and the non-adjacent-row
//! code U(5) whose ten words match the displayed matrix in the source
//! construction.

use lucastile::circulant::{
    filter_even_threes, filter_odd_zeros, lagarias_shor_code, non_adjacent_row_sums,
    subset_row_sums, CirculantMatrix,
};

fn main() {
    let n = 5;
    let a = CirculantMatrix::standard(n).unwrap();

    println!("A({n}) = circ(1,2,0,...,0):");
    for row in a.rows() {
        println!("  {row}");
    }

    let v_a = subset_row_sums(&a).unwrap();
    let v_at = subset_row_sums(&a.transpose()).unwrap();
    println!("\n|V(A)|   = {} (all subset sums, zero included)", v_a.len());
    println!("|V(A^T)| = {}", v_at.len());

    let ve = filter_even_threes(&v_a);
    let vo = filter_odd_zeros(&v_at);
    println!("|Ve(A)|  = {} (even number of 3s)", ve.len());
    println!("|Vo(A^T)| = {} (odd number of 0s)", vo.len());

    let code = lagarias_shor_code(n).unwrap();
    assert_eq!(code.len(), 1 << n);
    println!("\nLagarias-Shor code V = Ve(A) ∪ (Vo(A^T) + 2), {} words:", code.len());
    for chunk in code.words().chunks(8) {
        let row: Vec<String> = chunk.iter().map(|w| w.to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let u = non_adjacent_row_sums(n).unwrap();
    println!("\nU({n}) — sums of cyclically non-adjacent rows, {} words:", u.len());
    for word in u.iter() {
        println!("  {word}");
    }
}
