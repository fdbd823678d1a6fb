//! The partition F(n) of the base cube [0,2)^n. Only the tiles whose code
//! word avoids the entry 3 meet the base cube; for n = 5 that leaves 12
//! boxes: ten from U(5) and the two unit cubes [0,1)^5 and [1,2)^5. The
//! census M_k, the per-axis volume equations and the cylinder structure
//! all come out exactly.

use lucastile::lucas::weight_count;
use lucastile::partition::{base_cube_partition, FactorSelect};

fn main() {
    let n = 5;
    let f = base_cube_partition(n).unwrap();
    println!("F({n}): {} boxes, total volume {}", f.len(), f.volume_sum());
    assert_eq!(f.volume_sum(), 1 << n);
    assert!(f.covers_base_exactly_once());

    println!("\nboxes (source word, factors, volume):");
    for b in f.iter() {
        let factors: Vec<String> = b.factors().iter().map(|x| x.to_string()).collect();
        println!("  {}  {}  {}", b.source(), factors.join(" x "), b.volume());
    }

    println!("\ncensus M_k against C(n-k,k)·n/(n-k):");
    for (k, count) in f.weight_census() {
        let closed = if k == 0 {
            "2 (the two unit cubes)".to_string()
        } else {
            weight_count(n as u64, k as u64).to_string()
        };
        println!("  M_{k} = {count}, closed form {closed}");
    }

    let expect_full = ((1u128 << n) - 2) / 3;
    let expect_lo_hi = 2 * ((1u128 << n) + 1) / 3;
    println!("\nper-axis volumes (every axis agrees by circulant symmetry):");
    for i in 1..=n {
        let full = f.subfamily(i, FactorSelect::Full).unwrap().volume_sum();
        let lo_hi = f.subfamily(i, FactorSelect::LoOrHi).unwrap().volume_sum();
        println!("  axis {i}: m(F^i_1) = {full}, m(F^i_02) = {lo_hi}");
        assert_eq!(full, expect_full);
        assert_eq!(lo_hi, expect_lo_hi);
    }
    println!("  expected: (2^{n}-2)/3 = {expect_full}, 2(2^{n}+1)/3 = {expect_lo_hi}");

    for i in 1..=n {
        assert!(f.subfamily(i, FactorSelect::LoOrHi).unwrap().is_axis_cylinder(i).unwrap());
        assert!(f.subfamily(i, FactorSelect::Full).unwrap().is_axis_cylinder(i).unwrap());
    }
    println!("\nboth unions are i-cylinders for every axis i");
}
