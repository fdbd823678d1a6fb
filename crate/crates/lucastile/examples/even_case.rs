//! The even-case machinery at n = 7: the sub-family G of F(7) built over
//! the first six rows, its exact volume split along the last axis, the
//! interior sums R, and the index-shift bijection that drops two
//! dimensions, mapping R onto the words of U(5) ∪ {0} ending in 0.

use lucastile::partition::{
    even_case_family, interior_row_sums_with_sets, reduce_interior_sum,
    verify_dimension_reduction, FactorSelect,
};

#[allow(clippy::manual_div_ceil)] // (2^{n-1}+2)/3 is an exact division, not a rounding
fn main() {
    let n = 7;
    let g = even_case_family(n).unwrap();
    let half = 1u128 << (n - 1);
    println!("G ⊂ F({n}) over rows r_1..r_{}: {} boxes", n - 1, g.len());
    println!("m(G) = {} = 2^{}", g.volume_sum(), n - 1);
    assert_eq!(g.volume_sum(), half);

    let lo = g.subfamily(n, FactorSelect::Lo).unwrap().volume_sum();
    let hi = g.subfamily(n, FactorSelect::Hi).unwrap().volume_sum();
    println!(
        "split along axis {n}: m(G^n_0) = {lo} = 2(2^{}-1)/3, m(G^n_2) = {hi} = (2^{}+2)/3",
        n - 1,
        n - 1
    );
    assert_eq!(lo, 2 * (half - 1) / 3);
    assert_eq!(hi, (half + 2) / 3);
    assert!(g.subfamily(n, FactorSelect::Full).unwrap().is_empty());

    println!("\ninterior sums R over rows r_2..r_{} and their reductions:", n - 3);
    for (set, word) in interior_row_sums_with_sets(n).unwrap() {
        let image = reduce_interior_sum(&word, &set).unwrap();
        println!("  I = {set:?}  sum = {word}  ->  {image}");
        assert_eq!(*image.entries().last().unwrap(), 0);
    }

    for n in (5..=17usize).step_by(2) {
        let check = verify_dimension_reduction(n).unwrap();
        assert!(check.ok());
        println!(
            "n = {n:>2}: bijection onto the last-entry-0 words of U({}) ∪ {{0}}, {} words each side",
            n - 2,
            check.source_count
        );
    }
}
