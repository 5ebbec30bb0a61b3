//! Integer partitions and the combinatorial statistics consumed by the
//! identity weights: hooks, arms, legs, contents, kappa, n(lambda) and
//! Frobenius coordinates.

use std::cmp::Ordering;
use std::fmt;

/// A partition: weakly decreasing positive parts. The empty list is the
/// empty partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Partition {
    /// Builds a partition, panicking if parts are not weakly decreasing
    /// positive integers. Trailing zeros are stripped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part with 1-based index; 0 for i beyond the length.
    /// Every identity weight indexes beyond the diagram, so this accessor
    /// is the one used throughout.
    pub fn part(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.parts.len() {
            self.parts[i as usize - 1] as i64
        } else {
            0
        }
    }

    /// |lambda|, the sum of parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate partition: result_i = #{ j : lambda_j >= i }.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= i).count() as u32);
        }
        Partition { parts }
    }

    /// kappa(lambda) = sum lambda_i (lambda_i - 2i + 1).
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 * (p as i64 - 2 * (i as i64 + 1) + 1))
            .sum()
    }

    /// ||lambda||^2 = sum lambda_i^2.
    pub fn norm_sq(&self) -> i64 {
        self.parts.iter().map(|&p| (p as i64) * (p as i64)).sum()
    }

    /// n(lambda) = sum (i - 1) lambda_i.
    pub fn n_stat(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as i64 * p as i64)
            .sum()
    }

    /// Cells of the Young diagram as 1-based (row, column) pairs.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p as i64 {
                out.push((i as i64 + 1, j));
            }
        }
        out
    }

    /// True if the diagram of `other` is contained in the diagram of self.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i as i64 + 1) >= p as i64)
    }

    /// Frobenius coordinates (m_1,...,m_r | n_1,...,n_r).
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let mut m = Vec::new();
        let mut n = Vec::new();
        let mut i = 1i64;
        while self.part(i) - i >= 0 {
            m.push(self.part(i) - i);
            n.push(conj.part(i) - i);
            i += 1;
        }
        FrobeniusCoords { m, n }
    }

    /// Per-cell statistic tables; the convention lambda_i = 0 beyond the
    /// diagram makes these well defined for cells outside it too.
    pub fn cell_stats(&self) -> CellStats {
        CellStats {
            shape: self.clone(),
            conj: self.conjugate(),
        }
    }
}

/// Total order by size, then reverse-lexicographic on parts; used for
/// deterministic enumeration and as map keys in the Fock module.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub m: Vec<i64>,
    pub n: Vec<i64>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.m.len()
    }
}

/// Arm, leg, hook and content for a fixed shape. All accessors take
/// 1-based (row, column) and are defined outside the diagram as well.
pub struct CellStats {
    shape: Partition,
    conj: Partition,
}

impl CellStats {
    /// a(i,j) = lambda_i - j.
    pub fn arm(&self, i: i64, j: i64) -> i64 {
        self.shape.part(i) - j
    }

    /// l(i,j) = lambda^t_j - i.
    pub fn leg(&self, i: i64, j: i64) -> i64 {
        self.conj.part(j) - i
    }

    /// h(i,j) = lambda_i + lambda^t_j - i - j + 1.
    pub fn hook(&self, i: i64, j: i64) -> i64 {
        self.shape.part(i) + self.conj.part(j) - i - j + 1
    }

    /// c(i,j) = j - i.
    pub fn content(&self, i: i64, j: i64) -> i64 {
        j - i
    }
}

/// All partitions of size `d` in reverse-lexicographic order.
pub fn enumerate(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(d, d, &mut current, &mut out);
    out
}

/// All partitions of size at most `cap`, ordered by size then reverse-lex.
pub fn enumerate_up_to(cap: u32) -> Vec<Partition> {
    (0..=cap).flat_map(enumerate).collect()
}

/// Sub-partitions of `outer` (all partitions whose diagram fits inside).
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = outer.len();
    let mut current: Vec<u32> = Vec::new();
    fn rec(outer: &Partition, row: usize, rows: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == rows {
            out.push(Partition::new(current.clone()));
            return;
        }
        let above = if row == 0 {
            u32::MAX
        } else {
            current[row - 1]
        };
        let hi = (outer.parts()[row]).min(above);
        // a zero part ends the partition
        out.push(Partition::new(current.clone()));
        for p in 1..=hi {
            current.push(p);
            rec(outer, row + 1, rows, current, out);
            current.pop();
        }
    }
    if rows == 0 {
        return vec![Partition::empty()];
    }
    rec(outer, 0, rows, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}
