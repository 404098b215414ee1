//! Reconstruction of the full connection-coefficient table of a given
//! degree from marginal sums alone.
//!
//! The driver is the marginal form of associativity,
//! `sum_kappa c^lambda_(mu,kappa) mc^kappa_(nu,l) =
//!  sum_theta mc^lambda_(theta,l) c^theta_(mu,nu)`,
//! instantiated at the probe pairs of [`condition_pairs`]. Partitions of n
//! are processed by increasing corank (size minus length): the corank-0
//! coefficients are Kronecker deltas, and at corank r the probe equations
//! have the integer top-coefficient matrix of degree r as their matrix,
//! which is unimodular, so each stratum is recovered by one exact integer
//! solve. Unknowns whose index partition cannot be padded into degree n
//! must come out zero, and this is checked.

use std::collections::HashMap;
use std::sync::Arc;

use num::Zero;

use crate::connection::{c_table, CTable};
use crate::error::{Error, Result};
use crate::fh;
use crate::linalg::invert_unimodular;
use crate::partition::{all_partitions, Partition};
use crate::poly::IntPoly;

/// Supplier of marginal sums `mc^lambda_(mu, l)` for one degree.
pub trait MarginalSource {
    fn degree(&self) -> usize;
    fn marginal(&self, lambda: &Partition, mu: &Partition, l: usize) -> IntPoly;
}

/// Marginals read off a full coefficient table.
pub struct TableSource(pub Arc<CTable>);

impl MarginalSource for TableSource {
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn marginal(&self, lambda: &Partition, mu: &Partition, l: usize) -> IntPoly {
        self.0.marginal(lambda, mu, l)
    }
}

/// Stand-alone store of marginal sums; entries never written are zero.
#[derive(Debug, Clone)]
pub struct MarginalTable {
    n: usize,
    entries: HashMap<(Partition, Partition, usize), IntPoly>,
}

impl MarginalTable {
    pub fn new(n: usize) -> Self {
        MarginalTable {
            n,
            entries: HashMap::new(),
        }
    }

    pub fn insert(&mut self, lambda: Partition, mu: Partition, l: usize, value: IntPoly) {
        debug_assert_eq!(lambda.size(), self.n);
        debug_assert_eq!(mu.size(), self.n);
        if !value.is_zero() {
            self.entries.insert((lambda, mu, l), value);
        }
    }

    /// Extracts every non-zero marginal of a full table.
    pub fn from_connection_table(table: &CTable) -> Self {
        let n = table.degree();
        let mut out = MarginalTable::new(n);
        for lambda in table.partitions() {
            for mu in table.partitions() {
                for l in 1..=n {
                    out.insert(lambda.clone(), mu.clone(), l, table.marginal(lambda, mu, l));
                }
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition, usize), &IntPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl MarginalSource for MarginalTable {
    fn degree(&self) -> usize {
        self.n
    }

    fn marginal(&self, lambda: &Partition, mu: &Partition, l: usize) -> IntPoly {
        self.entries
            .get(&(lambda.clone(), mu.clone(), l))
            .cloned()
            .unwrap_or_else(IntPoly::zero)
    }
}

/// The probe pair of a corank-r index partition pi in degree n: the third
/// index is pi padded with ones up to size n, and the length cutoff keeps
/// exactly the lengths reaching corank r. Returned in the ascending order
/// of the partitions of r.
pub fn condition_pairs(n: usize, r: usize) -> Vec<(Partition, usize)> {
    assert!(r >= 1 && r < n, "corank must satisfy 1 <= r <= n - 1");
    all_partitions(r)
        .into_iter()
        .map(|pi| {
            let l = n - pi.len();
            (pi.padded_to(n), l)
        })
        .collect()
}

/// A fully reconstructed coefficient table of one degree, laid out like
/// the directly computed one.
pub struct ReconstructedTable {
    parts: Vec<Partition>,
    data: Vec<IntPoly>,
}

impl ReconstructedTable {
    pub fn degree(&self) -> usize {
        self.parts.last().map_or(0, Partition::size)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.parts
            .iter()
            .position(|q| q == p)
            .expect("partition of the table degree")
    }

    pub fn get(&self, li: usize, mi: usize, ni: usize) -> &IntPoly {
        let k = self.parts.len();
        &self.data[(li * k + mi) * k + ni]
    }

    pub fn get_parts(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> &IntPoly {
        self.get(self.index_of(lambda), self.index_of(mu), self.index_of(nu))
    }
}

/// Corank of a partition of n: its size minus its length.
fn corank(p: &Partition) -> usize {
    p.size() - p.len()
}

/// Rebuilds the full coefficient table of the source's degree from its
/// marginals, one corank stratum at a time.
pub fn reconstruct_all(source: &dyn MarginalSource) -> Result<ReconstructedTable> {
    let n = source.degree();
    assert!(n >= 1, "degree must be positive");
    let parts = all_partitions(n);
    let count = parts.len();
    let mut data = vec![IntPoly::zero(); count * count * count];
    let at = |li: usize, mi: usize, ni: usize| (li * count + mi) * count + ni;

    let ones_index = parts
        .iter()
        .position(|p| p.len() == n)
        .expect("the all-ones partition");
    for li in 0..count {
        data[at(li, li, ones_index)] = IntPoly::one();
    }

    for r in 1..n {
        let tables = fh::fh_tables(r)?;
        let q_inv = invert_unimodular(&tables.g)?;
        let rparts = tables.partitions();
        let pairs = condition_pairs(n, r);
        let probe_indices: Vec<usize> = pairs
            .iter()
            .map(|(nu, _)| parts.iter().position(|p| p == nu).expect("padded probe"))
            .collect();
        // Unknown slots: the index of rho padded into degree n, when rho
        // is short enough to pad.
        let unknown_indices: Vec<Option<usize>> = rparts
            .iter()
            .map(|rho| {
                if rho.len() <= n - r {
                    let kappa = rho.oplus_ones(n - r);
                    Some(parts.iter().position(|p| *p == kappa).expect("padded index"))
                } else {
                    None
                }
            })
            .collect();
        let lower: Vec<usize> = (0..count).filter(|&ki| corank(&parts[ki]) < r).collect();

        for li in 0..count {
            for mi in 0..count {
                let rhs: Vec<IntPoly> = pairs
                    .iter()
                    .zip(&probe_indices)
                    .map(|((_, l), &ni)| {
                        let mut y = IntPoly::zero();
                        for ti in 0..count {
                            let inner = &data[at(ti, mi, ni)];
                            if inner.is_zero() {
                                continue;
                            }
                            let mc = source.marginal(&parts[li], &parts[ti], *l);
                            if !mc.is_zero() {
                                y = y.add(&mc.mul(inner));
                            }
                        }
                        for &ki in &lower {
                            let known = &data[at(li, mi, ki)];
                            if known.is_zero() {
                                continue;
                            }
                            let mc = source.marginal(&parts[ki], &parts[ni], *l);
                            if !mc.is_zero() {
                                y = y.sub(&known.mul(&mc));
                            }
                        }
                        y
                    })
                    .collect();
                for (rho_idx, slot) in unknown_indices.iter().enumerate() {
                    let mut x = IntPoly::zero();
                    for (pi_idx, y) in rhs.iter().enumerate() {
                        if !y.is_zero() && !q_inv[rho_idx][pi_idx].is_zero() {
                            x = x.add(&y.scale(&q_inv[rho_idx][pi_idx]));
                        }
                    }
                    match slot {
                        Some(ki) => data[at(li, mi, *ki)] = x,
                        None => {
                            if !x.is_zero() {
                                return Err(Error::Inconsistent(format!(
                                    "reconstruction in degree {n} forced a non-zero \
                                     coefficient onto the unpaddable index {} at \
                                     [{} | {}]",
                                    rparts[rho_idx], parts[li], parts[mi]
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ReconstructedTable { parts, data })
}

/// Round trip: derive the marginals of the directly computed table, rebuild
/// the full table from them alone, and require exact agreement everywhere.
pub fn verify_roundtrip(n: usize) -> Result<()> {
    let direct = c_table(n)?;
    let marginals = MarginalTable::from_connection_table(&direct);
    let rebuilt = reconstruct_all(&marginals)?;
    let count = direct.partitions().len();
    for li in 0..count {
        for mi in 0..count {
            for ni in 0..count {
                if rebuilt.get(li, mi, ni) != direct.get(li, mi, ni) {
                    let parts = direct.partitions();
                    return Err(Error::Inconsistent(format!(
                        "reconstruction differs from the direct table at \
                         [{} | {} ; {}]: {} vs {}",
                        parts[li],
                        parts[mi],
                        parts[ni],
                        rebuilt.get(li, mi, ni),
                        direct.get(li, mi, ni)
                    )));
                }
            }
        }
    }
    Ok(())
}
