//! Box partitions of the base cube induced by the tiling.
//!
//! Intersecting [0,2)^n with every cube of the tiling keeps exactly the
//! translates whose code word has no entry 3; each survivor contributes a
//! box whose i-th factor is [0,1), [0,2) or [1,2) according to whether the
//! word has 0, 1 or 2 at position i. The resulting family F(n) partitions
//! the base cube, and a box generated by a word with k ones has volume 2^k.
//!
//! The even-case machinery lives here too: the sub-family G built over the
//! first n-1 rows, the interior sums R over rows r_2..r_{n-3}, and the
//! index-shift bijection from R onto the words of U(n-2) ∪ {0} with last
//! entry 0 that drops two dimensions.
//!
//! All geometry is exact: boxes have integer endpoints, so partition and
//! cylinder checks run on the 2^n unit voxel grid of the base cube, and
//! volumes are integers.

use std::collections::BTreeMap;
use std::fmt;

use crate::circulant::{independent_sets, mask_row_sum, CirculantMatrix, CodeLabel, CodeSet};
use crate::error::{Error, Result};
use crate::residue::{ResidueVector, MAX_PACKED_DIM};

/// One coordinate factor of a box of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// [0,1), from source entry 0.
    Lo,
    /// [0,2), from source entry 1.
    Full,
    /// [1,2), from source entry 2.
    Hi,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::Lo => "[0,1)",
            Factor::Full => "[0,2)",
            Factor::Hi => "[1,2)",
        })
    }
}

/// Which factor(s) a subfamily selection matches at a coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSelect {
    Lo,
    Hi,
    Full,
    /// Lo or Hi, the union written F^i_{02}.
    LoOrHi,
}

impl FactorSelect {
    fn matches(self, factor: Factor) -> bool {
        match self {
            FactorSelect::Lo => factor == Factor::Lo,
            FactorSelect::Hi => factor == Factor::Hi,
            FactorSelect::Full => factor == Factor::Full,
            FactorSelect::LoOrHi => factor != Factor::Full,
        }
    }
}

/// A box of the partition together with the code word that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartBox {
    factors: Vec<Factor>,
    source: ResidueVector,
}

impl PartBox {
    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn source(&self) -> &ResidueVector {
        &self.source
    }

    /// Factor at 1-based coordinate `i`.
    pub fn factor(&self, i: usize) -> Result<Factor> {
        if i == 0 || i > self.dim() {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim(),
            });
        }
        Ok(self.factors[i - 1])
    }

    /// Number of full factors [0,2); the box volume is 2 to this power.
    pub fn full_count(&self) -> usize {
        self.factors.iter().filter(|&&f| f == Factor::Full).count()
    }

    /// Exact volume 2^(full factor count).
    pub fn volume(&self) -> u128 {
        1u128 << self.full_count()
    }

    /// Bitmasks describing the box on the unit voxel grid of [0,2)^n:
    /// `(hi, full)` where bit i-1 of `hi` marks a [1,2) factor and bit i-1
    /// of `full` marks a [0,2) factor. The box covers the voxels
    /// `hi | s` for every submask `s` of `full`.
    fn voxel_masks(&self) -> (u32, u32) {
        debug_assert!(self.dim() <= MAX_PACKED_DIM);
        let mut hi = 0u32;
        let mut full = 0u32;
        for (i, &f) in self.factors.iter().enumerate() {
            match f {
                Factor::Lo => {}
                Factor::Hi => hi |= 1 << i,
                Factor::Full => full |= 1 << i,
            }
        }
        (hi, full)
    }

    /// Visit each voxel (as a bitmask) covered by the box.
    fn for_each_voxel(&self, mut visit: impl FnMut(u32)) {
        let (hi, full) = self.voxel_masks();
        let mut s = full;
        loop {
            visit(hi | s);
            if s == 0 {
                break;
            }
            s = (s - 1) & full;
        }
    }
}

/// Which family a [`BoxFamily`] is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyLabel {
    /// The full partition of the base cube.
    F,
    /// The even-case sub-family over the first n-1 rows.
    G,
}

/// A finite family of boxes of common dimension, sorted by source word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxFamily {
    dim: usize,
    label: FamilyLabel,
    boxes: Vec<PartBox>,
}

impl BoxFamily {
    fn from_sources<I>(dim: usize, label: FamilyLabel, sources: I) -> Self
    where
        I: IntoIterator<Item = ResidueVector>,
    {
        let mut boxes: Vec<PartBox> = sources
            .into_iter()
            .map(|v| {
                intersect_with_base(&v).expect("partition sources never contain a 3")
            })
            .collect();
        boxes.sort_by(|a, b| a.source.cmp(&b.source));
        boxes.dedup_by(|a, b| a.source == b.source);
        Self { dim, label, boxes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> FamilyLabel {
        self.label
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[PartBox] {
        &self.boxes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PartBox> {
        self.boxes.iter()
    }

    /// Exact total volume of the family.
    pub fn volume_sum(&self) -> u128 {
        self.boxes.iter().map(PartBox::volume).sum()
    }

    /// The boxes whose factor at 1-based coordinate `i` matches `which`.
    pub fn subfamily(&self, i: usize, which: FactorSelect) -> Result<BoxFamily> {
        if i == 0 || i > self.dim {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim,
            });
        }
        let boxes = self
            .boxes
            .iter()
            .filter(|b| which.matches(b.factors[i - 1]))
            .cloned()
            .collect();
        Ok(BoxFamily {
            dim: self.dim,
            label: self.label,
            boxes,
        })
    }

    /// The census M_k: how many boxes have volume exactly 2^k.
    pub fn weight_census(&self) -> BTreeMap<u32, u64> {
        let mut census = BTreeMap::new();
        for b in &self.boxes {
            *census.entry(b.full_count() as u32).or_insert(0u64) += 1;
        }
        census
    }

    /// Does the family cover every unit voxel of [0,2)^n exactly once?
    pub fn covers_base_exactly_once(&self) -> bool {
        assert!(self.dim <= MAX_PACKED_DIM);
        let mut counts = vec![0u8; 1 << self.dim];
        for b in &self.boxes {
            b.for_each_voxel(|voxel| {
                counts[voxel as usize] = counts[voxel as usize].saturating_add(1);
            });
        }
        counts.iter().all(|&c| c == 1)
    }

    /// Is the union of this family an `i`-cylinder: does every axis-`i`
    /// voxel column meet it in both voxels or neither?
    pub fn is_axis_cylinder(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.dim {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim,
            });
        }
        assert!(self.dim <= MAX_PACKED_DIM);
        let mut covered = vec![false; 1 << self.dim];
        for b in &self.boxes {
            b.for_each_voxel(|voxel| covered[voxel as usize] = true);
        }
        let bit = 1u32 << (i - 1);
        for voxel in 0..covered.len() as u32 {
            if voxel & bit == 0 && covered[voxel as usize] != covered[(voxel | bit) as usize] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<'a> IntoIterator for &'a BoxFamily {
    type Item = &'a PartBox;
    type IntoIter = std::slice::Iter<'a, PartBox>;

    fn into_iter(self) -> Self::IntoIter {
        self.boxes.iter()
    }
}

/// Intersect the base cube with the cube translated by `v - 1`. Empty
/// (None) exactly when `v` contains a 3; otherwise entry 0 gives [0,1),
/// entry 1 gives [0,2) and entry 2 gives [1,2) per coordinate.
pub fn intersect_with_base(v: &ResidueVector) -> Option<PartBox> {
    let mut factors = Vec::with_capacity(v.dim());
    for &e in v.entries() {
        factors.push(match e {
            0 => Factor::Lo,
            1 => Factor::Full,
            2 => Factor::Hi,
            _ => return None,
        });
    }
    Some(PartBox {
        factors,
        source: v.clone(),
    })
}

/// The partition F(n) of [0,2)^n, generated by U(n) ∪ {0, (2,...,2)}.
pub fn base_cube_partition(n: usize) -> Result<BoxFamily> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "base_cube_partition",
            min: 3,
            n,
        });
    }
    let a = CirculantMatrix::standard(n)?;
    let mut sources: Vec<ResidueVector> = independent_sets(n, true)
        .into_iter()
        .filter(|&mask| mask != 0)
        .map(|mask| mask_row_sum(&a, mask))
        .collect();
    sources.push(ResidueVector::zero(n));
    sources.push(ResidueVector::constant(n, 2)?);
    Ok(BoxFamily::from_sources(n, FamilyLabel::F, sources))
}

/// The even-case sub-family G ⊂ F(n): boxes generated by sums over
/// nonempty independent sets of the cycle on the first n-1 row indices
/// (1 and n-1 treated as adjacent). Defined for odd n >= 3; the n = 3
/// degenerate case consists of the two single-row boxes.
pub fn even_case_family(n: usize) -> Result<BoxFamily> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "even_case_family",
            min: 3,
            n,
        });
    }
    let a = CirculantMatrix::standard(n)?;
    let sources: Vec<ResidueVector> = independent_sets(n - 1, true)
        .into_iter()
        .filter(|&mask| mask != 0)
        .map(|mask| mask_row_sum(&a, mask))
        .collect();
    Ok(BoxFamily::from_sources(n, FamilyLabel::G, sources))
}

/// Interior index sets: the independent subsets of the path {2,...,n-3}
/// (2 and n-3 not adjacent), empty set included, as sorted 1-based index
/// lists.
fn interior_index_sets(n: usize) -> Vec<Vec<usize>> {
    if n < 7 {
        // {2,...,n-3} has at most one element.
        return if n == 5 {
            vec![vec![], vec![2]]
        } else {
            vec![vec![]]
        };
    }
    independent_sets(n - 4, false)
        .into_iter()
        .map(|mask| {
            let mut set = Vec::new();
            for b in 0..n - 4 {
                if mask >> b & 1 == 1 {
                    set.push(b + 2);
                }
            }
            set
        })
        .collect()
}

/// The set R for the even case: all sums Σ_{i∈I} r_i over independent
/// subsets I of the path {2,...,n-3}, the empty sum included.
pub fn interior_row_sums(n: usize) -> Result<CodeSet> {
    let sums = interior_row_sums_with_sets(n)?;
    CodeSet::new(
        n,
        CodeLabel::InteriorSums,
        sums.into_iter().map(|(_, w)| w).collect(),
    )
}

/// Like [`interior_row_sums`] but keeping each word's generating index set.
pub fn interior_row_sums_with_sets(n: usize) -> Result<Vec<(Vec<usize>, ResidueVector)>> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "interior_row_sums",
            min: 5,
            n,
        });
    }
    let a = CirculantMatrix::standard(n)?;
    Ok(interior_index_sets(n)
        .into_iter()
        .map(|set| {
            let mut acc = ResidueVector::zero(n);
            for &i in &set {
                acc = acc.add(a.row(i).unwrap()).unwrap();
            }
            (set, acc)
        })
        .collect())
}

/// The dimension-dropping bijection: a word u = Σ_{i∈I} r_i over A(n)
/// with I ⊆ {2,...,n-3} maps to Σ_{i∈I-1} h_i over A(n-2). The image is a
/// word of U(n-2) ∪ {0} with last entry 0.
pub fn reduce_interior_sum(
    u: &ResidueVector,
    index_set: &[usize],
) -> Result<ResidueVector> {
    let n = u.dim();
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "reduce_interior_sum",
            min: 5,
            n,
        });
    }
    let mut prev: Option<usize> = None;
    for &i in index_set {
        if i < 2 || i > n - 3 {
            return Err(Error::MalformedIndexSet {
                reason: format!("index {i} outside {{2,...,{}}}", n - 3),
            });
        }
        if let Some(p) = prev {
            if i <= p {
                return Err(Error::MalformedIndexSet {
                    reason: "indices must be strictly increasing".into(),
                });
            }
            if i == p + 1 {
                return Err(Error::MalformedIndexSet {
                    reason: format!("indices {p} and {i} are adjacent"),
                });
            }
        }
        prev = Some(i);
    }
    let a = CirculantMatrix::standard(n)?;
    let mut check = ResidueVector::zero(n);
    for &i in index_set {
        check = check.add(a.row(i).unwrap()).unwrap();
    }
    if &check != u {
        return Err(Error::MalformedIndexSet {
            reason: "index set does not generate the given word".into(),
        });
    }
    let smaller = CirculantMatrix::standard(n - 2)?;
    let mut image = ResidueVector::zero(n - 2);
    for &i in index_set {
        image = image.add(smaller.row(i - 1).unwrap()).unwrap();
    }
    Ok(image)
}

/// Outcome of checking the dimension-dropping bijection exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCheck {
    pub n: usize,
    pub source_count: usize,
    pub target_count: usize,
    pub injective: bool,
    pub image_exact: bool,
}

impl BijectionCheck {
    pub fn ok(&self) -> bool {
        self.injective && self.image_exact && self.source_count == self.target_count
    }
}

/// Verify that the reduction map is a bijection from R onto the words of
/// U(n-2) ∪ {0} with last entry 0.
pub fn verify_dimension_reduction(n: usize) -> Result<BijectionCheck> {
    let sources = interior_row_sums_with_sets(n)?;
    let mut images = Vec::with_capacity(sources.len());
    for (set, word) in &sources {
        images.push(reduce_interior_sum(word, set)?);
    }
    let image_set = CodeSet::new(n - 2, CodeLabel::Custom, images.clone())?;
    let injective = image_set.len() == images.len();

    let mut targets = vec![ResidueVector::zero(n - 2)];
    targets.extend(
        crate::circulant::non_adjacent_row_sums(n - 2)?
            .iter()
            .filter(|w| *w.entries().last().unwrap() == 0)
            .cloned(),
    );
    let target_set = CodeSet::new(n - 2, CodeLabel::Custom, targets)?;

    Ok(BijectionCheck {
        n,
        source_count: sources.len(),
        target_count: target_set.len(),
        injective,
        image_exact: image_set.words() == target_set.words(),
    })
}
