//! Integer partitions and set partitions.
//!
//! Provides:
//! * [`Partition`] with the usual statistics (size, length, rank, `z`,
//!   conjugate) and the multiset operations used throughout the crate
//!   (union, entrywise sum, decrement, part removal);
//! * [`total_cmp`], a total order refining dominance (longer partitions come
//!   first, ties broken lexicographically), and its conjugate [`dual_cmp`];
//! * [`all_partitions`], ascending under `total_cmp`;
//! * [`set_partitions`] of `{0, .., n-1}` in restricted-growth order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use num::One;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is the structural order on the part vectors and is used
/// only as a storage key; the combinatorial orders live in [`total_cmp`] and
/// [`dual_cmp`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from arbitrary parts: zeros are dropped and the
    /// rest is sorted decreasingly.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition `1^k`.
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Size minus length.
    pub fn rank(&self) -> usize {
        self.size() - self.len()
    }

    pub fn max_part(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// Distinct part values with multiplicities, largest value first.
    pub fn value_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// the product of `v^m * m!` over distinct parts `v` of multiplicity `m`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (v, m) in self.value_multiplicities() {
            for _ in 0..m {
                z *= v;
            }
            for k in 2..=m {
                z *= k;
            }
        }
        z
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        for j in 0.. {
            let h = self.0.iter().filter(|&&p| p > j).count();
            if h == 0 {
                break;
            }
            cols.push(h);
        }
        Partition(cols)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Entrywise sum, shorter argument padded with zeros.
    pub fn entrywise_sum(&self, other: &Partition) -> Partition {
        let n = self.0.len().max(other.0.len());
        let get = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
        Partition::new((0..n).map(|i| get(&self.0, i) + get(&other.0, i)).collect())
    }

    /// `self + 1^k` entrywise; requires `len() <= k` so the result has
    /// exactly `k` parts.
    pub fn oplus_ones(&self, k: usize) -> Partition {
        assert!(self.len() <= k, "oplus_ones needs at least len() many ones");
        self.entrywise_sum(&Partition::ones(k))
    }

    /// Each part decreased by one, zeros dropped.
    pub fn decremented(&self) -> Partition {
        Partition::new(self.0.iter().map(|&p| p - 1).collect())
    }

    /// Union with `1^(n - size)`; requires `n >= size`.
    pub fn padded_to(&self, n: usize) -> Partition {
        assert!(n >= self.size());
        self.union(&Partition::ones(n - self.size()))
    }

    /// Removes one occurrence of `value`, if present.
    pub fn remove_part(&self, value: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == value)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Cells `(i, j)` of the diagram, zero based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Arm length of the cell `(i, j)`.
    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.0[i] - j - 1
    }

    /// Leg length of the cell `(i, j)`.
    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.0.iter().skip(i + 1).filter(|&&p| p > j).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::ParsePartition(s.to_string()))?;
            if p == 0 {
                return Err(Error::ParsePartition(s.to_string()));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// Total order on partitions of equal size: longer partitions are smaller,
/// equal lengths compare lexicographically on the parts. It refines
/// dominance.
pub fn total_cmp(a: &Partition, b: &Partition) -> Ordering {
    debug_assert_eq!(a.size(), b.size(), "total order needs equal sizes");
    b.len()
        .cmp(&a.len())
        .then_with(|| a.parts().cmp(b.parts()))
}

pub fn total_leq(a: &Partition, b: &Partition) -> bool {
    total_cmp(a, b) != Ordering::Greater
}

/// Dual order: `a <=' b` iff `conjugate(b) <= conjugate(a)`.
pub fn dual_cmp(a: &Partition, b: &Partition) -> Ordering {
    total_cmp(&b.conjugate(), &a.conjugate())
}

pub fn dual_leq(a: &Partition, b: &Partition) -> bool {
    dual_cmp(a, b) != Ordering::Greater
}

/// Dominance: `a` is dominated by `b` (prefix sums of `a` never exceed
/// those of `b`). Requires equal sizes.
pub fn dominated_by(a: &Partition, b: &Partition) -> bool {
    debug_assert_eq!(a.size(), b.size());
    let mut sa = 0usize;
    let mut sb = 0usize;
    for i in 0..a.len().max(b.len()) {
        sa += a.parts().get(i).copied().unwrap_or(0);
        sb += b.parts().get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// All partitions of `n`, ascending under [`total_cmp`].
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            current.push(p);
            rec(rest - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.sort_by(total_cmp);
    out
}

/// Partitions of `n` with exactly `l` parts, ascending under [`total_cmp`].
pub fn partitions_with_length(n: usize, l: usize) -> Vec<Partition> {
    all_partitions(n).into_iter().filter(|p| p.len() == l).collect()
}

/// Set partitions of `{0, .., n-1}` as block lists, each block sorted and
/// blocks ordered by smallest element. Enumerated via restricted growth
/// strings in lexicographic order; `set_partitions(0)` is the single empty
/// partition.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, maxv: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rgs.len();
        if i == n {
            let blocks = maxv + 1;
            let mut part = vec![Vec::new(); blocks];
            for (elem, &b) in rgs.iter().enumerate() {
                part[b].push(elem);
            }
            out.push(part);
            return;
        }
        for v in 0..=maxv + 1 {
            rgs[i] = v;
            rec(i + 1, maxv.max(v), rgs, out);
        }
    }
    // rgs[0] is pinned to 0.
    rec(1, 0, &mut rgs, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn counts_match_partition_numbers() {
        let p: Vec<usize> = (0..=8).map(|n| all_partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn ascending_order_examples() {
        let p3: Vec<String> = all_partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, vec!["1,1,1", "2,1", "3"]);
        let p5: Vec<String> = all_partitions(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(p5, vec!["1,1,1,1,1", "2,1,1,1", "2,2,1", "3,1,1", "3,2", "4,1", "5"]);
    }

    #[test]
    fn total_refines_dominance() {
        for n in 1..=8 {
            let ps = all_partitions(n);
            for a in &ps {
                for b in &ps {
                    if a != b && dominated_by(a, b) {
                        assert_eq!(total_cmp(a, b), Ordering::Less, "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn dual_order_examples() {
        // Smaller max part means smaller in the dual order.
        assert_eq!(dual_cmp(&pt(&[1, 1, 1]), &pt(&[2, 1])), Ordering::Less);
        assert_eq!(dual_cmp(&pt(&[2, 1]), &pt(&[3])), Ordering::Less);
        // The two orders genuinely differ at size 6.
        assert_eq!(total_cmp(&pt(&[4, 1, 1]), &pt(&[3, 3])), Ordering::Less);
        assert_eq!(dual_cmp(&pt(&[3, 3]), &pt(&[4, 1, 1])), Ordering::Less);
    }

    #[test]
    fn dual_refines_dominance() {
        for n in 1..=8 {
            let ps = all_partitions(n);
            for a in &ps {
                for b in &ps {
                    if a != b && dominated_by(a, b) {
                        assert_eq!(dual_cmp(a, b), Ordering::Less, "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(pt(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(pt(&[3, 1]).z(), BigInt::from(3));
        assert_eq!(pt(&[1]).z(), BigInt::from(1));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
        assert_eq!(pt(&[4, 1]).rank(), 3);
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(pt(&[3, 1, 1]).conjugate(), pt(&[3, 1, 1]));
    }

    #[test]
    fn conjugate_involution_and_union_rule() {
        for n in 0..=7 {
            for p in all_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
        for a in all_partitions(4) {
            for b in all_partitions(3) {
                assert_eq!(
                    a.union(&b).conjugate(),
                    a.conjugate().entrywise_sum(&b.conjugate())
                );
            }
        }
    }

    #[test]
    fn pad_and_strip_round_trip() {
        for r in 0..=5 {
            for rho in all_partitions(r) {
                for k in rho.len()..=6 {
                    assert_eq!(rho.oplus_ones(k).decremented(), rho);
                }
            }
        }
    }

    #[test]
    fn arm_leg() {
        let p = pt(&[3, 2]);
        assert_eq!(p.arm(0, 0), 2);
        assert_eq!(p.leg(0, 0), 1);
        assert_eq!(p.arm(1, 1), 0);
        assert_eq!(p.leg(0, 2), 0);
        assert_eq!(p.cells().count(), 5);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), pt(&[3, 1, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(pt(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn set_partition_counts_and_order() {
        let bell: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203]);
        let sp3 = set_partitions(3);
        assert_eq!(sp3[0], vec![vec![0, 1, 2]]);
        assert_eq!(sp3[1], vec![vec![0, 1], vec![2]]);
        assert_eq!(sp3[2], vec![vec![0, 2], vec![1]]);
        assert_eq!(sp3[3], vec![vec![0], vec![1, 2]]);
        assert_eq!(sp3[4], vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn remove_part_and_sums() {
        assert_eq!(pt(&[3, 2]).remove_part(3), Some(pt(&[2])));
        assert_eq!(pt(&[3, 2]).remove_part(1), None);
        assert_eq!(pt(&[3]).entrywise_sum(&pt(&[1, 1])), pt(&[4, 1]));
        assert_eq!(pt(&[2, 1]).union(&pt(&[1, 1])), pt(&[2, 1, 1, 1]));
        assert_eq!(pt(&[2]).padded_to(4), pt(&[2, 1, 1]));
    }
}
