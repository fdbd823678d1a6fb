//! The star code and the Lucas cube vertex set as a selector.
//!
//! Substituting 0 -> 0, 2 -> 1, 1 -> * in every word of U ∪ {0, (2,...,2)}
//! yields words over {0,1,*}; each denotes a discrete box of {0,1}^n whose
//! i-th factor is {0}, {1} or {0,1}. Together the boxes partition {0,1}^n,
//! and the Lucas cube vertex set meets every box except the all-ones one in
//! exactly one point: the point that picks 0 at every free coordinate.
//!
//! [`verify_selector`] works off a cover index over all of {0,1}^n (built
//! once, near-linear in the number of points); the quadratic
//! box-times-vertex scan [`verify_selector_exhaustive`] is kept as the
//! independent oracle for small n.

use std::fmt;

use crate::circulant::{non_adjacent_row_sums, CodeLabel, CodeSet};
use crate::error::{Error, Result};
use crate::lucas::{lucas_vertices, LucasVertex};
use crate::residue::{ResidueVector, MAX_PACKED_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarSymbol {
    Zero,
    One,
    Star,
}

impl fmt::Display for StarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarSymbol::Zero => "0",
            StarSymbol::One => "1",
            StarSymbol::Star => "*",
        })
    }
}

/// A word over {0,1,*} denoting a discrete box of {0,1}^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarWord {
    symbols: Vec<StarSymbol>,
}

impl StarWord {
    /// Apply the substitution 0 -> 0, 2 -> 1, 1 -> * to a word over
    /// {0,1,2}; an entry 3 has no image.
    pub fn from_residues(v: &ResidueVector) -> Result<Self> {
        let mut symbols = Vec::with_capacity(v.dim());
        for (position, &e) in v.entries().iter().enumerate() {
            symbols.push(match e {
                0 => StarSymbol::Zero,
                2 => StarSymbol::One,
                1 => StarSymbol::Star,
                _ => return Err(Error::UnexpectedThree { position }),
            });
        }
        Ok(Self { symbols })
    }

    pub fn dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[StarSymbol] {
        &self.symbols
    }

    /// Structural fact used by the selector proof: in words arising from U,
    /// every * is immediately followed (cyclically) by a 1.
    pub fn each_star_followed_by_one(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.symbols[i] != StarSymbol::Star || self.symbols[(i + 1) % n] == StarSymbol::One
        })
    }

    /// The discrete box this word denotes.
    pub fn to_box(&self) -> DiscreteBox {
        assert!(self.dim() <= MAX_PACKED_DIM);
        let mut fixed = 0u32;
        let mut ones = 0u32;
        for (i, &s) in self.symbols.iter().enumerate() {
            match s {
                StarSymbol::Zero => fixed |= 1 << i,
                StarSymbol::One => {
                    fixed |= 1 << i;
                    ones |= 1 << i;
                }
                StarSymbol::Star => {}
            }
        }
        DiscreteBox {
            source: self.clone(),
            fixed,
            ones,
        }
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A product of per-coordinate subsets {0}, {1} or {0,1} of {0,1}^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteBox {
    source: StarWord,
    /// Bit i-1 set iff coordinate i is fixed ({0} or {1}).
    fixed: u32,
    /// Bit i-1 set iff coordinate i is {1}; always a submask of `fixed`.
    ones: u32,
}

impl DiscreteBox {
    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn source(&self) -> &StarWord {
        &self.source
    }

    /// Number of points: 2^(number of * symbols).
    pub fn point_count(&self) -> u64 {
        1u64 << (self.dim() - self.fixed.count_ones() as usize)
    }

    pub fn contains(&self, point: u32) -> bool {
        point & self.fixed == self.ones && point >> self.dim() == 0
    }

    pub fn is_all_ones(&self) -> bool {
        self.dim() > 0 && self.ones == (1u32 << self.dim()) - 1
    }

    /// Visit each point of the box as a bitmask.
    fn for_each_point(&self, mut visit: impl FnMut(u32)) {
        let free = !self.fixed & ((1u32 << self.dim()) - 1);
        let mut s = free;
        loop {
            visit(self.ones | s);
            if s == 0 {
                break;
            }
            s = (s - 1) & free;
        }
    }
}

/// The star code of a code over {0,1,2}: the substitution applied to every
/// word, sorted lexicographically.
pub fn star_code(code: &CodeSet) -> Result<Vec<StarWord>> {
    let mut words = code
        .iter()
        .map(StarWord::from_residues)
        .collect::<Result<Vec<_>>>()?;
    words.sort();
    Ok(words)
}

/// U(n) ∪ {0, (2,...,2)}, the code whose star image partitions {0,1}^n.
fn selector_code(n: usize) -> Result<CodeSet> {
    let extras = CodeSet::new(
        n,
        CodeLabel::Custom,
        vec![ResidueVector::zero(n), ResidueVector::constant(n, 2)?],
    )?;
    non_adjacent_row_sums(n)?.union(&extras, CodeLabel::Custom)
}

/// The discrete boxes of the star code of U(n) ∪ {0, (2,...,2)}.
pub fn selector_boxes(n: usize) -> Result<Vec<DiscreteBox>> {
    Ok(star_code(&selector_code(n)?)?
        .into_iter()
        .map(|w| w.to_box())
        .collect())
}

/// Do the given boxes cover every point of {0,1}^n exactly once?
pub fn boxes_partition_discrete_cube(boxes: &[DiscreteBox], n: usize) -> bool {
    assert!((1..=MAX_PACKED_DIM).contains(&n));
    let mut counts = vec![0u8; 1 << n];
    for b in boxes {
        b.for_each_point(|p| counts[p as usize] = counts[p as usize].saturating_add(1));
    }
    counts.iter().all(|&c| c == 1)
}

/// Does the star code of U(n) ∪ {0, (2,...,2)} partition {0,1}^n?
pub fn verify_discrete_partition(n: usize) -> Result<bool> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "verify_discrete_partition",
            min: 3,
            n,
        });
    }
    Ok(boxes_partition_discrete_cube(&selector_boxes(n)?, n))
}

/// The point of `b` picking 0 at every free coordinate; always a Lucas
/// cube vertex. The all-ones box is rejected: it contains no vertex.
pub fn canonical_vertex(b: &DiscreteBox) -> Result<LucasVertex> {
    if b.is_all_ones() {
        return Err(Error::AllOnesBox);
    }
    LucasVertex::from_mask(b.ones, b.dim())
}

/// Indexed selector check: every Lucas vertex lies in exactly one box of
/// the family (all-ones box excluded), and every such box holds exactly
/// one vertex, its canonical one.
pub fn verify_selector(n: usize) -> Result<bool> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "verify_selector",
            min: 3,
            n,
        });
    }
    let boxes = selector_boxes(n)?;

    // Cover index: which box owns each point of {0,1}^n. Disjointness and
    // exhaustiveness are enforced while filling it.
    const FREE: u32 = u32::MAX;
    let mut owner = vec![FREE; 1 << n];
    for (id, b) in boxes.iter().enumerate() {
        let mut clash = false;
        b.for_each_point(|p| {
            if owner[p as usize] != FREE {
                clash = true;
            }
            owner[p as usize] = id as u32;
        });
        if clash {
            return Ok(false);
        }
    }
    if owner.contains(&FREE) {
        return Ok(false);
    }

    let mut hits = vec![0u32; boxes.len()];
    let mut hit_mask = vec![0u32; boxes.len()];
    for v in lucas_vertices(n) {
        let id = owner[v.mask() as usize] as usize;
        if boxes[id].is_all_ones() {
            return Ok(false);
        }
        hits[id] += 1;
        hit_mask[id] = v.mask();
    }
    for (id, b) in boxes.iter().enumerate() {
        if b.is_all_ones() {
            if hits[id] != 0 {
                return Ok(false);
            }
            continue;
        }
        if hits[id] != 1 || hit_mask[id] != canonical_vertex(b)?.mask() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quadratic oracle for [`verify_selector`]: test every vertex against
/// every box directly.
pub fn verify_selector_exhaustive(n: usize) -> Result<bool> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "verify_selector_exhaustive",
            min: 3,
            n,
        });
    }
    let boxes = selector_boxes(n)?;
    let vertices = lucas_vertices(n);
    for v in &vertices {
        let containing = boxes
            .iter()
            .filter(|b| !b.is_all_ones() && b.contains(v.mask()))
            .count();
        if containing != 1 {
            return Ok(false);
        }
    }
    for b in &boxes {
        if b.is_all_ones() {
            continue;
        }
        let inside: Vec<u32> = vertices
            .iter()
            .map(LucasVertex::mask)
            .filter(|&m| b.contains(m))
            .collect();
        if inside.len() != 1 || inside[0] != canonical_vertex(b)?.mask() {
            return Ok(false);
        }
    }
    Ok(true)
}
