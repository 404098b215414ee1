//! Connection coefficients of the Jack basis on power sums, with
//! integrality certification.
//!
//! For partitions `lambda, mu, nu` of `n`, the coefficient is
//!
//! ```text
//! c^lambda_(mu,nu) = z_lambda alpha^len(lambda)
//!     sum_theta [p_lambda]J_theta [p_mu]J_theta [p_nu]J_theta / j_theta
//! ```
//!
//! a rational function of alpha which, after the substitution
//! `alpha = b + 1`, is certified to be a polynomial in `b` with integer
//! coefficients. Certification failure is treated as a contradiction of
//! the underlying theorem, not as a recoverable condition.
//!
//! The module also provides:
//! * marginal sums over the third index restricted to a fixed length;
//! * stable top coefficients extracted from marginals at the minimal
//!   padding degree, and the square matrix they form in one rank;
//! * small-cumulant linear combinations of products of coefficients and
//!   their scaled variant;
//! * verification routines for row sums, associativity, and marginal
//!   degree bounds.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::ZMatrix;
use crate::partition::{all_partitions, set_partitions, Partition};
use crate::poly::{IntPoly, UniPoly, Var};
use crate::ratfunc::RatFunc;
use crate::symfunc::{jack_set, JackSet};

fn class_weight(lambda: &Partition) -> RatFunc {
    RatFunc::from_poly(UniPoly::monomial(
        Var::Alpha,
        BigRational::from(lambda.z()),
        lambda.len(),
    ))
}

fn c_raw_indices(jack: &JackSet, li: usize, mi: usize, ni: usize) -> RatFunc {
    let count = jack.partitions().len();
    let mut acc = RatFunc::zero(Var::Alpha);
    for t in 0..count {
        let tl = jack.p_coeff(t, li);
        let tm = jack.p_coeff(t, mi);
        let tn = jack.p_coeff(t, ni);
        if tl.is_zero() || tm.is_zero() || tn.is_zero() {
            continue;
        }
        let term = tl
            .mul(tm)
            .mul(tn)
            .div(jack.norm(t))
            .expect("Jack norms are nonzero");
        acc = acc.add(&term);
    }
    acc.mul(&class_weight(&jack.partitions()[li]))
}

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(mu.size(), n));
    }
    if nu.size() != n {
        return Err(Error::SizeMismatch(nu.size(), n));
    }
    Ok(n)
}

fn context_label(lambda: &Partition, mu: &Partition, nu: &Partition) -> String {
    format!("c[{} | {} ; {}]", lambda, mu, nu)
}

/// The connection coefficient as a rational function of alpha.
pub fn c_raw(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<RatFunc> {
    let n = check_sizes(lambda, mu, nu)?;
    let jack = jack_set(n)?;
    let t = jack.tables();
    Ok(c_raw_indices(
        &jack,
        t.index_of(lambda),
        t.index_of(mu),
        t.index_of(nu),
    ))
}

/// The connection coefficient as a certified integer polynomial in `b`.
pub fn c_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<IntPoly> {
    c_raw(lambda, mu, nu)?.certify_integer_poly(&context_label(lambda, mu, nu))
}

/// All connection coefficients of one degree, certified.
pub struct CTable {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    data: Vec<IntPoly>,
}

impl CTable {
    fn compute(n: usize) -> Result<CTable> {
        let jack = jack_set(n)?;
        let parts = jack.partitions().to_vec();
        let count = parts.len();
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut pairs = Vec::new();
        for mi in 0..count {
            for ni in mi..count {
                pairs.push((mi, ni));
            }
        }
        type PairRows = Vec<((usize, usize), Vec<IntPoly>)>;
        let computed: Result<PairRows> = pairs
            .par_iter()
            .map(|&(mi, ni)| {
                let mut row = Vec::with_capacity(count);
                for li in 0..count {
                    let raw = c_raw_indices(&jack, li, mi, ni);
                    let poly = raw.certify_integer_poly(&context_label(
                        &parts[li], &parts[mi], &parts[ni],
                    ))?;
                    row.push(poly);
                }
                Ok(((mi, ni), row))
            })
            .collect();
        let mut data = vec![IntPoly::zero(); count * count * count];
        for ((mi, ni), row) in computed? {
            for (li, poly) in row.into_iter().enumerate() {
                data[(li * count + mi) * count + ni] = poly.clone();
                data[(li * count + ni) * count + mi] = poly;
            }
        }
        Ok(CTable {
            n,
            parts,
            index,
            data,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn get(&self, li: usize, mi: usize, ni: usize) -> &IntPoly {
        let count = self.parts.len();
        &self.data[(li * count + mi) * count + ni]
    }

    pub fn get_parts(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> &IntPoly {
        self.get(self.index[lambda], self.index[mu], self.index[nu])
    }

    /// Marginal sum over the third index restricted to length `l`.
    pub fn marginal(&self, lambda: &Partition, mu: &Partition, l: usize) -> IntPoly {
        let li = self.index[lambda];
        let mi = self.index[mu];
        let mut acc = IntPoly::zero();
        for (ni, nu) in self.parts.iter().enumerate() {
            if nu.len() == l {
                acc = acc.add(self.get(li, mi, ni));
            }
        }
        acc
    }
}

/// The memoized table of all certified coefficients of degree `n`.
pub fn c_table(n: usize) -> Result<Arc<CTable>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<CTable>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    if let Some(found) = guard.get(&n) {
        return Ok(found.clone());
    }
    let table = Arc::new(CTable::compute(n)?);
    guard.insert(n, table.clone());
    Ok(table)
}

/// Marginal sum computed without building the full degree table.
pub fn marginal_direct(lambda: &Partition, mu: &Partition, l: usize) -> Result<IntPoly> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(mu.size(), n));
    }
    let jack = jack_set(n)?;
    let t = jack.tables();
    let li = t.index_of(lambda);
    let mi = t.index_of(mu);
    let mut acc = IntPoly::zero();
    for (ni, nu) in jack.partitions().iter().enumerate() {
        if nu.len() != l {
            continue;
        }
        let poly = c_raw_indices(&jack, li, mi, ni)
            .certify_integer_poly(&context_label(lambda, mu, nu))?;
        acc = acc.add(&poly);
    }
    Ok(acc)
}

/// The stable top coefficient indexed by two partitions of the same rank
/// weight `r`: computed as the marginal
///
/// ```text
/// tc^rho_pi = mc^kappa_(nu, l),   kappa = rho + (1, .., 1),
///                                 nu = pi cup (1^(n-r)),  l = n - len(pi)
/// ```
///
/// at the minimal degree `n = r + max(len(rho), len(pi))`, where the
/// marginal degree bound forces a constant. A non-constant marginal is a
/// contradiction.
pub fn top_coefficient(rho: &Partition, pi: &Partition) -> Result<BigInt> {
    let r = rho.size();
    if pi.size() != r {
        return Err(Error::SizeMismatch(pi.size(), r));
    }
    let n = r + rho.len().max(pi.len());
    let kappa = rho.oplus_ones(n - r);
    let nu = pi.union(&Partition::ones(n - r));
    let l = n - pi.len();
    let mc = marginal_direct(&kappa, &nu, l)?;
    match mc.as_constant() {
        Some(c) => Ok(c),
        None => Err(Error::Inconsistent(format!(
            "top coefficient [{rho} | {pi}] is not constant: {mc}"
        ))),
    }
}

/// The square matrix of top coefficients of rank weight `r`, with rows
/// `pi` and columns `rho` both over the partitions of `r` in ascending
/// total order.
pub fn top_matrix(r: usize) -> Result<ZMatrix> {
    let parts = all_partitions(r);
    parts
        .iter()
        .map(|pi| parts.iter().map(|rho| top_coefficient(rho, pi)).collect())
        .collect()
}

/// Multi-factor connection coefficient: the weight of `p_lambda` in a
/// product of `k` class elements,
/// `z_lambda alpha^len sum_theta theta_lambda prod_i theta_(mu_i) / j_theta^(k-1)`.
pub fn c_multi_raw(lambda: &Partition, factors: &[Partition]) -> Result<RatFunc> {
    let n = lambda.size();
    for f in factors {
        if f.size() != n {
            return Err(Error::SizeMismatch(f.size(), n));
        }
    }
    let jack = jack_set(n)?;
    let t = jack.tables();
    let li = t.index_of(lambda);
    let fi: Vec<usize> = factors.iter().map(|f| t.index_of(f)).collect();
    let count = jack.partitions().len();
    let mut acc = RatFunc::zero(Var::Alpha);
    'theta: for th in 0..count {
        let mut term = jack.p_coeff(th, li).clone();
        if term.is_zero() {
            continue;
        }
        for &i in &fi {
            let c = jack.p_coeff(th, i);
            if c.is_zero() {
                continue 'theta;
            }
            term = term.mul(c);
        }
        for _ in 1..factors.len() {
            term = term.div(jack.norm(th)).expect("Jack norms are nonzero");
        }
        acc = acc.add(&term);
    }
    Ok(acc.mul(&class_weight(lambda)))
}

/// All ways to distribute the parts of `mu` into labeled groups with the
/// given size targets, each group returned as a partition. Equal parts
/// are not distinguished, so every multiset distribution appears once.
fn multiset_splits(mu: &Partition, sizes: &[usize]) -> Vec<Vec<Partition>> {
    let parts = mu.parts();
    let k = sizes.len();
    let mut remaining = sizes.to_vec();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut out = Vec::new();
    fn rec(
        i: usize,
        min_group: usize,
        parts: &[usize],
        remaining: &mut Vec<usize>,
        groups: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if i == parts.len() {
            if remaining.iter().all(|&r| r == 0) {
                out.push(
                    groups
                        .iter()
                        .map(|g| Partition::new(g.clone()))
                        .collect(),
                );
            }
            return;
        }
        for g in min_group..groups.len() {
            if remaining[g] < parts[i] {
                continue;
            }
            remaining[g] -= parts[i];
            groups[g].push(parts[i]);
            let next_min = if i + 1 < parts.len() && parts[i + 1] == parts[i] {
                g
            } else {
                0
            };
            rec(i + 1, next_min, parts, remaining, groups, out);
            groups[g].pop();
            remaining[g] += parts[i];
        }
    }
    rec(0, 0, parts, &mut remaining, &mut groups, &mut out);
    out
}

/// The small cumulant of a coefficient: the sum over set partitions of
/// the parts of `lambda`, with Moebius weight `(-1)^(s-1) (s-1)!` for `s`
/// blocks, of products of coefficients over all distributions of `mu` and
/// `nu` to the blocks.
pub fn cumulant(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<IntPoly> {
    check_sizes(lambda, mu, nu)?;
    if lambda.is_empty() {
        return Ok(IntPoly::one());
    }
    let positions = lambda.parts();
    let mut acc = IntPoly::zero();
    for blocks in set_partitions(positions.len()) {
        let s = blocks.len();
        let block_parts: Vec<Partition> = blocks
            .iter()
            .map(|b| Partition::new(b.iter().map(|&i| positions[i]).collect()))
            .collect();
        let sizes: Vec<usize> = block_parts.iter().map(|p| p.size()).collect();
        let mut weight: BigInt = (1..s as u64).map(BigInt::from).product();
        if s % 2 == 0 {
            weight = -weight;
        }
        let mut inner = IntPoly::zero();
        for mu_split in multiset_splits(mu, &sizes) {
            for nu_split in multiset_splits(nu, &sizes) {
                let mut prod = IntPoly::one();
                for (b, lam_b) in block_parts.iter().enumerate() {
                    let table = c_table(lam_b.size())?;
                    prod = prod.mul(table.get_parts(lam_b, &mu_split[b], &nu_split[b]));
                    if prod.is_zero() {
                        break;
                    }
                }
                inner = inner.add(&prod);
            }
        }
        acc = acc.add(&inner.scale(&weight));
    }
    Ok(acc)
}

/// Independent evaluation of [`cumulant`] by the logarithm expansion over
/// ordered tuples of nonempty sub-partitions: for `s` factors the weight
/// is `(-1)^(s-1) / s` times the multiplicity `z_lambda / prod z_i`.
/// Returns a polynomial in `b` with rational coefficients.
pub fn cumulant_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<UniPoly> {
    check_sizes(lambda, mu, nu)?;
    if lambda.is_empty() {
        return Ok(UniPoly::one(Var::B));
    }
    let len = lambda.len();
    let mut acc = UniPoly::zero(Var::B);
    // Ordered tuples of nonempty partitions with union lambda, built by
    // distributing the parts of lambda into s labeled groups.
    for s in 1..=len {
        let mut stratum = UniPoly::zero(Var::B);
        for tuple in ordered_covers(lambda, s) {
            let mult = BigRational::new(
                lambda.z(),
                tuple.iter().map(|p| p.z()).product::<BigInt>(),
            );
            let sizes: Vec<usize> = tuple.iter().map(|p| p.size()).collect();
            let mut inner = UniPoly::zero(Var::B);
            for mu_split in multiset_splits(mu, &sizes) {
                for nu_split in multiset_splits(nu, &sizes) {
                    let mut prod = UniPoly::one(Var::B);
                    for (i, lam_i) in tuple.iter().enumerate() {
                        let table = c_table(lam_i.size())?;
                        let c = table.get_parts(lam_i, &mu_split[i], &nu_split[i]);
                        prod = prod.mul(&c.to_unipoly(Var::B));
                        if prod.is_zero() {
                            break;
                        }
                    }
                    inner = inner.add(&prod);
                }
            }
            stratum = stratum.add(&inner.scale(&mult));
        }
        let sign = if s % 2 == 1 { 1 } else { -1 };
        let weight = BigRational::new(BigInt::from(sign), BigInt::from(s as i64));
        acc = acc.add(&stratum.scale(&weight));
    }
    Ok(acc)
}

/// Ordered tuples of `s` nonempty partitions whose multiset union is
/// `lambda`.
fn ordered_covers(lambda: &Partition, s: usize) -> Vec<Vec<Partition>> {
    let parts = lambda.parts();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); s];
    let mut out = Vec::new();
    fn rec(
        i: usize,
        min_group: usize,
        parts: &[usize],
        groups: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if i == parts.len() {
            if groups.iter().all(|g| !g.is_empty()) {
                out.push(
                    groups
                        .iter()
                        .map(|g| Partition::new(g.clone()))
                        .collect(),
                );
            }
            return;
        }
        for g in min_group..groups.len() {
            groups[g].push(parts[i]);
            let next_min = if i + 1 < parts.len() && parts[i + 1] == parts[i] {
                g
            } else {
                0
            };
            rec(i + 1, next_min, parts, groups, out);
            groups[g].pop();
        }
    }
    rec(0, 0, parts, &mut groups, &mut out);
    out
}

/// A cumulant rescaled by its forced power of `b + 1`:
/// `zh = cumulant / (1 + b)^(len(lambda) - 1)` (exact division is part of
/// the claim), and the full value is `h = (n / z_lambda) zh`.
pub struct HCoefficient {
    pub zh: IntPoly,
    pub scale_num: BigInt,
    pub scale_den: BigInt,
}

pub fn h_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<HCoefficient> {
    let n = check_sizes(lambda, mu, nu)?;
    let d = cumulant(lambda, mu, nu)?;
    let divisor = IntPoly::one_plus_b().pow(lambda.len().saturating_sub(1));
    let zh = if d.is_zero() {
        IntPoly::zero()
    } else {
        d.div_exact(&divisor)?
    };
    Ok(HCoefficient {
        zh,
        scale_num: BigInt::from(n as u64),
        scale_den: lambda.z(),
    })
}

/// Checks that summing a table row over `mu` gives
/// `(n! / z_nu) (1 + b)^(n - len(nu))` for every `(lambda, nu)`.
pub fn verify_row_sums(n: usize) -> Result<()> {
    let table = c_table(n)?;
    let parts = table.partitions().to_vec();
    let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
    for (li, lambda) in parts.iter().enumerate() {
        for (ni, nu) in parts.iter().enumerate() {
            let mut acc = IntPoly::zero();
            for mi in 0..parts.len() {
                acc = acc.add(table.get(li, mi, ni));
            }
            let scale = &factorial / nu.z();
            if (&factorial % nu.z()) != BigInt::zero() {
                return Err(Error::Inconsistent(format!(
                    "z_{nu} does not divide {n}!",
                )));
            }
            let expect = IntPoly::one_plus_b()
                .pow(n - nu.len())
                .scale(&scale);
            if acc != expect {
                return Err(Error::Inconsistent(format!(
                    "row sum over mu at [{lambda} | {nu}]: {acc} != {expect}"
                )));
            }
        }
    }
    Ok(())
}

/// Checks associativity through all three groupings of a triple product.
pub fn verify_associativity(n: usize) -> Result<()> {
    let table = c_table(n)?;
    let count = table.partitions().len();
    let grouped = |li: usize, first: usize, second: usize, outer: usize| {
        let mut acc = IntPoly::zero();
        for ki in 0..count {
            let inner = table.get(ki, first, second);
            if inner.is_zero() {
                continue;
            }
            acc = acc.add(&table.get(li, ki, outer).mul(inner));
        }
        acc
    };
    for li in 0..count {
        for mi in 0..count {
            for ni in 0..count {
                for ri in 0..count {
                    // (mu nu) rho vs (mu rho) nu vs (nu rho) mu.
                    let a = grouped(li, mi, ni, ri);
                    let b = grouped(li, mi, ri, ni);
                    let c = grouped(li, ni, ri, mi);
                    if a != b || b != c {
                        let parts = table.partitions();
                        return Err(Error::Inconsistent(format!(
                            "associativity fails at [{} | {} ; {} ; {}]",
                            parts[li], parts[mi], parts[ni], parts[ri]
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the marginal form of associativity:
/// `sum_kappa c^lambda_(mu,kappa) mc^kappa_(nu,l) =
///  sum_theta mc^lambda_(theta,l) c^theta_(mu,nu)`.
pub fn verify_marginal_associativity(n: usize) -> Result<()> {
    let table = c_table(n)?;
    let parts = table.partitions().to_vec();
    let count = parts.len();
    let lengths: Vec<usize> = (1..=n).collect();
    for li in 0..count {
        for mi in 0..count {
            for ni in 0..count {
                for &l in &lengths {
                    let mut lhs = IntPoly::zero();
                    for ki in 0..count {
                        let mc = table.marginal(&parts[ki], &parts[ni], l);
                        if mc.is_zero() {
                            continue;
                        }
                        lhs = lhs.add(&table.get(li, mi, ki).mul(&mc));
                    }
                    let mut rhs = IntPoly::zero();
                    for ti in 0..count {
                        let mc = table.marginal(&parts[li], &parts[ti], l);
                        if mc.is_zero() {
                            continue;
                        }
                        rhs = rhs.add(&mc.mul(table.get(ti, mi, ni)));
                    }
                    if lhs != rhs {
                        return Err(Error::Inconsistent(format!(
                            "marginal associativity fails at [{} | {} ; {}], l = {l}",
                            parts[li], parts[mi], parts[ni]
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks that every marginal has nonnegative integer coefficients and
/// degree at most `n - l + len(lambda) - len(mu)`.
pub fn verify_marginal_bounds(n: usize) -> Result<()> {
    let table = c_table(n)?;
    let parts = table.partitions().to_vec();
    for lambda in &parts {
        for mu in &parts {
            for l in 1..=n {
                let mc = table.marginal(lambda, mu, l);
                if mc.coeffs().iter().any(|c| c.is_negative()) {
                    return Err(Error::Inconsistent(format!(
                        "marginal [{lambda} | {mu}], l = {l} has a negative coefficient: {mc}"
                    )));
                }
                let bound = n as i64 - l as i64 + lambda.len() as i64 - mu.len() as i64;
                match mc.degree() {
                    None => {}
                    Some(d) if (d as i64) <= bound => {}
                    Some(d) => {
                        return Err(Error::Inconsistent(format!(
                            "marginal [{lambda} | {mu}], l = {l} has degree {d} > bound {bound}"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn degree_two_coefficients() {
        assert_eq!(
            c_coeff(&pt(&[2]), &pt(&[2]), &pt(&[2])).unwrap(),
            IntPoly::from_ints(&[0, 1])
        );
        assert_eq!(
            c_coeff(&pt(&[1, 1]), &pt(&[2]), &pt(&[2])).unwrap(),
            IntPoly::from_ints(&[1, 1])
        );
        assert_eq!(
            c_coeff(&pt(&[1, 1]), &pt(&[1, 1]), &pt(&[2])).unwrap(),
            IntPoly::zero()
        );
    }

    #[test]
    fn identity_column_is_kronecker() {
        for n in 1..=4 {
            let table = c_table(n).unwrap();
            let ones = Partition::ones(n);
            for lambda in table.partitions() {
                for mu in table.partitions() {
                    let expect = if lambda == mu {
                        IntPoly::one()
                    } else {
                        IntPoly::zero()
                    };
                    assert_eq!(
                        table.get_parts(lambda, mu, &ones),
                        &expect,
                        "c[{lambda} | {mu} ; 1^n]"
                    );
                }
            }
        }
    }

    #[test]
    fn table_matches_single_coefficients() {
        let table = c_table(3).unwrap();
        for lambda in table.partitions() {
            for mu in table.partitions() {
                for nu in table.partitions() {
                    assert_eq!(
                        table.get_parts(lambda, mu, nu),
                        &c_coeff(lambda, mu, nu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn symmetry_in_lower_indices() {
        let table = c_table(4).unwrap();
        let count = table.partitions().len();
        for li in 0..count {
            for mi in 0..count {
                for ni in 0..count {
                    assert_eq!(table.get(li, mi, ni), table.get(li, ni, mi));
                }
            }
        }
    }

    #[test]
    fn row_sums_small_degrees() {
        for n in 1..=4 {
            verify_row_sums(n).unwrap();
        }
    }

    #[test]
    fn associativity_small_degrees() {
        verify_associativity(3).unwrap();
    }

    #[test]
    fn marginal_example() {
        let mc = marginal_direct(&pt(&[4, 1]), &pt(&[2, 1, 1, 1]), 3).unwrap();
        assert_eq!(mc, IntPoly::from_ints(&[6]));
        let table = c_table(5).unwrap();
        assert_eq!(table.marginal(&pt(&[4, 1]), &pt(&[2, 1, 1, 1]), 3), mc);
    }

    #[test]
    fn marginal_bounds_small_degrees() {
        for n in 1..=4 {
            verify_marginal_bounds(n).unwrap();
        }
    }

    #[test]
    fn top_coefficients_rank_two_and_three() {
        // Rank 2, both orders fixed by hand: rows pi, columns rho.
        assert_eq!(top_coefficient(&pt(&[2]), &pt(&[2])).unwrap(), BigInt::from(3));
        assert_eq!(top_coefficient(&pt(&[1, 1]), &pt(&[2])).unwrap(), BigInt::from(2));
        assert_eq!(top_coefficient(&pt(&[2]), &pt(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(top_coefficient(&pt(&[1, 1]), &pt(&[1, 1])).unwrap(), BigInt::from(1));
        // The asymmetric rank-3 pair.
        assert_eq!(top_coefficient(&pt(&[2, 1]), &pt(&[3])).unwrap(), BigInt::from(1));
        assert_eq!(top_coefficient(&pt(&[3]), &pt(&[2, 1])).unwrap(), BigInt::from(6));
    }

    #[test]
    fn top_matrix_rank_three() {
        // Ascending rows pi and columns rho: [1^3], [2,1], [3].
        let q = top_matrix(3).unwrap();
        let expect: Vec<Vec<i64>> = vec![vec![1, 1, 1], vec![3, 4, 6], vec![0, 1, 4]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(q[i][j], BigInt::from(v), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn multiset_splits_enumerate_once() {
        let splits = multiset_splits(&pt(&[2, 1, 1]), &[2, 2]);
        // Either [2] with [1,1], or [1] twice is impossible at size 2 each:
        // [2],[1,1] and [1,1],[2].
        assert_eq!(splits.len(), 2);
        assert!(splits.contains(&vec![pt(&[2]), pt(&[1, 1])]));
        assert!(splits.contains(&vec![pt(&[1, 1]), pt(&[2])]));
        let splits = multiset_splits(&pt(&[1, 1]), &[1, 1]);
        assert_eq!(splits, vec![vec![pt(&[1]), pt(&[1])]]);
    }

    #[test]
    fn cumulant_degree_two_values() {
        // d[1,1 | 1,1 ; 1,1] = 1 - 1 = 0.
        assert_eq!(
            cumulant(&pt(&[1, 1]), &pt(&[1, 1]), &pt(&[1, 1])).unwrap(),
            IntPoly::zero()
        );
        // d[1,1 | 2 ; 2] = c[1,1 | 2 ; 2] = 1 + b (no splits of [2] into two blocks).
        assert_eq!(
            cumulant(&pt(&[1, 1]), &pt(&[2]), &pt(&[2])).unwrap(),
            IntPoly::from_ints(&[1, 1])
        );
        // Single-block lambda: cumulant equals the coefficient.
        assert_eq!(
            cumulant(&pt(&[2]), &pt(&[2]), &pt(&[2])).unwrap(),
            IntPoly::from_ints(&[0, 1])
        );
    }

    #[test]
    fn cumulant_matches_ordered_tuple_oracle() {
        for n in 1..=3 {
            let parts = all_partitions(n);
            for lambda in &parts {
                for mu in &parts {
                    for nu in &parts {
                        let d = cumulant(lambda, mu, nu).unwrap();
                        let oracle = cumulant_oracle(lambda, mu, nu).unwrap();
                        assert_eq!(
                            d.to_unipoly(Var::B),
                            oracle,
                            "cumulant [{lambda} | {mu} ; {nu}]"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn h_coefficient_values() {
        let h = h_coefficient(&pt(&[2]), &pt(&[2]), &pt(&[2])).unwrap();
        assert_eq!(h.zh, IntPoly::from_ints(&[0, 1]));
        assert_eq!(h.scale_num, BigInt::from(2));
        assert_eq!(h.scale_den, BigInt::from(2));
        let h = h_coefficient(&pt(&[1, 1]), &pt(&[2]), &pt(&[2])).unwrap();
        assert_eq!(h.zh, IntPoly::one());
        assert_eq!(h.scale_den, BigInt::from(2));
    }

    #[test]
    fn marginal_associativity_small_degree() {
        verify_marginal_associativity(3).unwrap();
    }
}
