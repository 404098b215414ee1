//! The graded Farahat-Higman algebra: symmetric-group class sums indexed
//! by reduced cyclic type, their top-degree structure constants, the four
//! bases c, f, m, g, and the transition matrices between them.
//!
//! Conventions used throughout:
//! - The reduced cyclic type of a permutation is its cycle type with every
//!   part decreased by one and zero parts dropped; it does not change when
//!   the permutation is embedded into a larger symmetric group.
//! - The class `C_lambda(n)` is the sum of all permutations of reduced type
//!   lambda in the group of degree n; it vanishes when
//!   `|lambda| + len(lambda) > n`.
//! - [`GradedElem`] is a homogeneous element written in the class basis;
//!   products keep only the top-degree terms, whose structure constants
//!   [`rho_top`] are independent of the group degree and are evaluated at
//!   the smallest degree admitting the target class.
//! - Displayed matrices put f-indexed labels in decreasing dual order
//!   ([r] first, [1^r] last) and c-, m- or g-indexed labels in increasing
//!   total order, except Q whose rows and columns both decrease.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

use crate::connection;
use crate::error::{Error, Result};
use crate::linalg::{det_z, invert_unimodular, matmul_z, ZMatrix};
use crate::partition::{all_partitions, dual_cmp, Partition};
use crate::symfunc::monomial_in_elementary;

/// A permutation of `{0, .., n-1}` stored as an image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| {
                let fresh = i < seen.len() && !seen[i];
                if fresh {
                    seen[i] = true;
                }
                fresh
            })
        });
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Function composition: `self.compose(other)` maps i to
    /// `self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            images[j] = i;
        }
        Perm(images)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.0[x];
            }
            lengths.push(len);
        }
        Partition::new(lengths)
    }

    /// Cycle type with each part reduced by one, fixed points dropped.
    pub fn reduced_type(&self) -> Partition {
        self.cycle_type().decremented()
    }
}

/// True when the class of reduced type `lambda` is non-zero in degree n.
pub fn class_is_valid(lambda: &Partition, n: usize) -> bool {
    lambda.size() + lambda.len() <= n
}

/// Cycle type in degree n of a permutation with reduced type `lambda`.
fn full_cycle_type(lambda: &Partition, n: usize) -> Partition {
    lambda.oplus_ones(lambda.len()).padded_to(n)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Number of permutations of reduced type `lambda` in degree n.
pub fn class_size(lambda: &Partition, n: usize) -> BigInt {
    if !class_is_valid(lambda, n) {
        return BigInt::zero();
    }
    factorial(n) / full_cycle_type(lambda, n).z()
}

/// Canonical class representative: cycles on consecutive blocks.
pub fn class_representative(lambda: &Partition, n: usize) -> Perm {
    assert!(class_is_valid(lambda, n), "class is zero in this degree");
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &part in lambda.parts() {
        let k = part + 1;
        for i in 0..k {
            images[start + i] = start + (i + 1) % k;
        }
        start += k;
    }
    Perm(images)
}

struct ClassEnumerator {
    images: Vec<usize>,
    assigned: Vec<bool>,
    remaining: Vec<(usize, usize)>,
    out: Vec<Perm>,
}

impl ClassEnumerator {
    fn run(&mut self) {
        let anchor = match self.assigned.iter().position(|&a| !a) {
            Some(x) => x,
            None => {
                self.out.push(Perm(self.images.clone()));
                return;
            }
        };
        for idx in 0..self.remaining.len() {
            let (len, count) = self.remaining[idx];
            if count == 0 {
                continue;
            }
            self.remaining[idx].1 -= 1;
            self.assigned[anchor] = true;
            if len == 1 {
                self.images[anchor] = anchor;
                self.run();
            } else {
                self.extend_cycle(anchor, anchor, len - 1);
            }
            self.assigned[anchor] = false;
            self.remaining[idx].1 += 1;
        }
    }

    fn extend_cycle(&mut self, anchor: usize, prev: usize, left: usize) {
        if left == 0 {
            self.images[prev] = anchor;
            self.run();
            return;
        }
        for y in anchor + 1..self.assigned.len() {
            if self.assigned[y] {
                continue;
            }
            self.assigned[y] = true;
            self.images[prev] = y;
            self.extend_cycle(anchor, y, left - 1);
            self.assigned[y] = false;
        }
    }
}

/// All permutations of reduced type `lambda` in degree n. Generation roots
/// every cycle at its smallest element and always opens the cycle of the
/// smallest unassigned point, so each permutation appears exactly once.
pub fn class_permutations(lambda: &Partition, n: usize) -> Vec<Perm> {
    if !class_is_valid(lambda, n) {
        return Vec::new();
    }
    let full = full_cycle_type(lambda, n);
    let mut enumerator = ClassEnumerator {
        images: vec![0; n],
        assigned: vec![false; n],
        remaining: full.value_multiplicities(),
        out: Vec::new(),
    };
    enumerator.run();
    enumerator.out
}

/// Structure constant of the center of the degree-n group algebra:
/// the coefficient of the kappa class in the product of the lambda and mu
/// classes. Counts, for a fixed representative of the kappa class, the
/// factorizations with prescribed reduced types, enumerating only the
/// smaller of the two classes.
pub fn rho(kappa: &Partition, lambda: &Partition, mu: &Partition, n: usize) -> BigInt {
    if !class_is_valid(kappa, n) || !class_is_valid(lambda, n) || !class_is_valid(mu, n) {
        return BigInt::zero();
    }
    let pi = class_representative(kappa, n);
    let count = if class_size(lambda, n) <= class_size(mu, n) {
        class_permutations(lambda, n)
            .iter()
            .filter(|sigma| sigma.inverse().compose(&pi).reduced_type() == *mu)
            .count()
    } else {
        class_permutations(mu, n)
            .iter()
            .filter(|tau| pi.compose(&tau.inverse()).reduced_type() == *lambda)
            .count()
    };
    BigInt::from(count)
}

type RhoMemo = Mutex<HashMap<(Partition, Partition, Partition), BigInt>>;

fn rho_top_memo() -> &'static RhoMemo {
    static MEMO: OnceLock<RhoMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Top-degree structure constant, requiring `|kappa| = |lambda| + |mu|`.
/// Independent of the group degree; evaluated at the smallest degree
/// admitting the kappa class.
pub fn rho_top(kappa: &Partition, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if kappa.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch(kappa.size(), lambda.size() + mu.size()));
    }
    let (a, b) = if (lambda.size(), lambda.parts()) <= (mu.size(), mu.parts()) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let key = (kappa.clone(), a.clone(), b.clone());
    if let Some(v) = rho_top_memo().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let n = kappa.size() + kappa.len();
    let value = rho(kappa, a, b, n);
    rho_top_memo()
        .lock()
        .unwrap()
        .insert(key, value.clone());
    Ok(value)
}

/// A homogeneous element of the graded algebra in the class basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElem {
    degree: usize,
    coeffs: HashMap<Partition, BigInt>,
}

impl GradedElem {
    pub fn zero(degree: usize) -> Self {
        GradedElem {
            degree,
            coeffs: HashMap::new(),
        }
    }

    /// The multiplicative unit: the empty class in degree zero.
    pub fn unit() -> Self {
        GradedElem::class(&Partition::empty())
    }

    /// The class basis element of `lambda`.
    pub fn class(lambda: &Partition) -> Self {
        let mut coeffs = HashMap::new();
        coeffs.insert(lambda.clone(), BigInt::one());
        GradedElem {
            degree: lambda.size(),
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, lambda: Partition, value: BigInt) {
        debug_assert_eq!(lambda.size(), self.degree);
        let entry = self.coeffs.entry(lambda).or_insert_with(BigInt::zero);
        *entry += value;
        if entry.is_zero() {
            let key: Vec<_> = self
                .coeffs
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.coeffs.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &GradedElem) -> GradedElem {
        assert_eq!(self.degree, other.degree, "mixed degrees in graded sum");
        let mut out = self.clone();
        for (lambda, v) in &other.coeffs {
            out.add_term(lambda.clone(), v.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigInt) -> GradedElem {
        if k.is_zero() {
            return GradedElem::zero(self.degree);
        }
        GradedElem {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, v)| (l.clone(), v * k))
                .collect(),
        }
    }

    /// Graded product: bilinear extension of the top-degree structure
    /// constants. Degrees add.
    pub fn multiply(&self, other: &GradedElem) -> GradedElem {
        let degree = self.degree + other.degree;
        let mut out = GradedElem::zero(degree);
        let targets = all_partitions(degree);
        for (t1, c1) in &self.coeffs {
            for (t2, c2) in &other.coeffs {
                for kappa in &targets {
                    let r = rho_top(kappa, t1, t2).expect("degrees add by construction");
                    if !r.is_zero() {
                        out.add_term(kappa.clone(), c1 * c2 * r);
                    }
                }
            }
        }
        out
    }
}

/// The degree-r generator f_r: the sum of all classes of degree r.
fn f_generator(r: usize) -> GradedElem {
    let mut out = GradedElem::zero(r);
    for lambda in all_partitions(r) {
        out.add_term(lambda, BigInt::one());
    }
    out
}

/// The elementary-type basis element f_lambda (product of the f_r over the
/// parts) in the class basis.
pub fn f_in_classes(lambda: &Partition) -> GradedElem {
    lambda
        .parts()
        .iter()
        .fold(GradedElem::unit(), |acc, &k| acc.multiply(&f_generator(k)))
}

/// The monomial-type basis element m_mu in the class basis, defined
/// through the integer monomial-to-elementary transition applied to the
/// f basis.
pub fn m_in_classes(mu: &Partition) -> Result<GradedElem> {
    let r = mu.size();
    let u = monomial_in_elementary(r)?;
    let parts = all_partitions(r);
    let mi = parts
        .iter()
        .position(|p| p == mu)
        .expect("mu is a partition of its own size");
    let mut out = GradedElem::zero(r);
    for (li, lambda) in parts.iter().enumerate() {
        if !u[li][mi].is_zero() {
            out = out.add(&f_in_classes(lambda).scaled(&u[li][mi]));
        }
    }
    Ok(out)
}

/// The basis element g_pi: the class of `pi - 1` times `f_{len(pi)}`.
pub fn g_in_classes(pi: &Partition) -> GradedElem {
    GradedElem::class(&pi.decremented()).multiply(&f_generator(pi.len()))
}

/// Top coefficient extracted from the g basis: the class-basis coefficient
/// of rho in g_pi. Must agree with the marginal route of the connection
/// module.
pub fn top_coefficient(rho: &Partition, pi: &Partition) -> Result<BigInt> {
    if rho.size() != pi.size() {
        return Err(Error::SizeMismatch(rho.size(), pi.size()));
    }
    Ok(g_in_classes(pi).coeff(rho))
}

/// All degree-r transition data between the four bases, rows and columns
/// in ascending total order, rows indexing the expressed element.
pub struct FhTables {
    parts: Vec<Partition>,
    /// `f[mu][lambda]` is the class-basis coefficient of f_mu.
    pub f: ZMatrix,
    /// Inverse of `f`: the f-basis coefficients of the classes.
    pub c_in_f: ZMatrix,
    /// `m_in_f[mu][lambda]` is the f-basis coefficient of m_mu.
    pub m_in_f: ZMatrix,
    /// `m_in_c = m_in_f * f`: the class-basis coefficients of the m basis.
    pub m_in_c: ZMatrix,
    /// Inverse of `m_in_c`: the m-basis coefficients of the classes.
    pub c_in_m: ZMatrix,
    /// `g[pi][rho]` is the class-basis coefficient of g_pi; equals the top
    /// coefficient table.
    pub g: ZMatrix,
    /// `g_in_f = g * c_in_f`: the f-basis coefficients of the g basis.
    pub g_in_f: ZMatrix,
}

impl FhTables {
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.parts
            .iter()
            .position(|q| q == p)
            .expect("partition of the table degree")
    }
}

fn elem_to_row(elem: &GradedElem, parts: &[Partition]) -> Vec<BigInt> {
    parts.iter().map(|p| elem.coeff(p)).collect()
}

fn fh_tables_memo() -> &'static Mutex<HashMap<usize, Arc<FhTables>>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<FhTables>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized degree-r tables. Both basis inversions certify unimodularity.
pub fn fh_tables(r: usize) -> Result<Arc<FhTables>> {
    if let Some(t) = fh_tables_memo().lock().unwrap().get(&r) {
        return Ok(t.clone());
    }
    let parts = all_partitions(r);
    let f: ZMatrix = parts
        .iter()
        .map(|mu| elem_to_row(&f_in_classes(mu), &parts))
        .collect();
    let c_in_f = invert_unimodular(&f)?;
    let u = monomial_in_elementary(r)?;
    let count = parts.len();
    let mut m_in_f = vec![vec![BigInt::zero(); count]; count];
    for mi in 0..count {
        for li in 0..count {
            m_in_f[mi][li] = u[li][mi].clone();
        }
    }
    let m_in_c = matmul_z(&m_in_f, &f);
    let c_in_m = invert_unimodular(&m_in_c)?;
    let g: ZMatrix = parts
        .iter()
        .map(|pi| elem_to_row(&g_in_classes(pi), &parts))
        .collect();
    let g_in_f = matmul_z(&g, &c_in_f);
    let tables = Arc::new(FhTables {
        parts,
        f,
        c_in_f,
        m_in_f,
        m_in_c,
        c_in_m,
        g,
        g_in_f,
    });
    fh_tables_memo()
        .lock()
        .unwrap()
        .insert(r, tables.clone());
    Ok(tables)
}

/// An integer matrix with explicit partition labels on rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMatrix {
    pub row_labels: Vec<Partition>,
    pub col_labels: Vec<Partition>,
    pub entries: ZMatrix,
}

fn ascending(r: usize) -> Vec<Partition> {
    all_partitions(r)
}

fn descending(r: usize) -> Vec<Partition> {
    let mut parts = all_partitions(r);
    parts.reverse();
    parts
}

/// Label order for f-indexed rows: decreasing dual order, [r] first.
fn f_display_order(r: usize) -> Vec<Partition> {
    let mut parts = all_partitions(r);
    parts.sort_by(|a, b| dual_cmp(b, a));
    parts
}

/// Assembles the displayed matrix whose entry (i, j) is the coefficient of
/// the row-label basis element inside the expressed column-label element,
/// reading from an internal table with rows indexing the expressed side.
fn display_from_internal(
    internal: &ZMatrix,
    parts: &[Partition],
    row_labels: Vec<Partition>,
    col_labels: Vec<Partition>,
) -> LabeledMatrix {
    let pos = |p: &Partition| parts.iter().position(|q| q == p).expect("label in degree");
    let entries = row_labels
        .iter()
        .map(|row| {
            let ri = pos(row);
            col_labels.iter().map(|col| internal[pos(col)][ri].clone()).collect()
        })
        .collect();
    LabeledMatrix {
        row_labels,
        col_labels,
        entries,
    }
}

/// The matrix of the m basis in the f basis: f-labels down the side, m
/// labels across the top. Upper unitriangular.
pub fn matrix_u(r: usize) -> Result<LabeledMatrix> {
    let t = fh_tables(r)?;
    Ok(display_from_internal(
        &t.m_in_f,
        &t.parts,
        f_display_order(r),
        ascending(r),
    ))
}

/// The matrix of the classes in the m basis, both sides in ascending total
/// order. Lower unitriangular.
pub fn matrix_l(r: usize) -> Result<LabeledMatrix> {
    let t = fh_tables(r)?;
    Ok(display_from_internal(
        &t.c_in_m,
        &t.parts,
        ascending(r),
        ascending(r),
    ))
}

/// The matrix of the classes in the f basis: f-labels down the side,
/// class labels across the top.
pub fn matrix_m(r: usize) -> Result<LabeledMatrix> {
    let t = fh_tables(r)?;
    Ok(display_from_internal(
        &t.c_in_f,
        &t.parts,
        f_display_order(r),
        ascending(r),
    ))
}

/// South-east block of [`matrix_m`]: rows with largest part at most i,
/// columns with at most i parts. Conjugation matches the two label sets,
/// so the block is square; for i >= r it is the whole matrix.
pub fn matrix_m_sub(r: usize, i: usize) -> Result<LabeledMatrix> {
    assert!(i >= 1, "block index must be positive");
    let full = matrix_m(r)?;
    let rows: Vec<usize> = (0..full.row_labels.len())
        .filter(|&k| full.row_labels[k].max_part() <= i)
        .collect();
    let cols: Vec<usize> = (0..full.col_labels.len())
        .filter(|&k| full.col_labels[k].len() <= i)
        .collect();
    Ok(LabeledMatrix {
        row_labels: rows.iter().map(|&k| full.row_labels[k].clone()).collect(),
        col_labels: cols.iter().map(|&k| full.col_labels[k].clone()).collect(),
        entries: rows
            .iter()
            .map(|&a| cols.iter().map(|&b| full.entries[a][b].clone()).collect())
            .collect(),
    })
}

/// The matrix of the g basis in the f basis: f-labels down the side, g
/// labels across the top. Block upper triangular with determinant one.
pub fn matrix_n(r: usize) -> Result<LabeledMatrix> {
    let t = fh_tables(r)?;
    Ok(display_from_internal(
        &t.g_in_f,
        &t.parts,
        f_display_order(r),
        ascending(r),
    ))
}

/// The top coefficient table: rows and columns in decreasing total order,
/// entry (pi, rho) the class-basis coefficient of rho in g_pi.
pub fn matrix_q(r: usize) -> Result<LabeledMatrix> {
    let t = fh_tables(r)?;
    let labels = descending(r);
    let pos = |p: &Partition| t.index_of(p);
    let entries = labels
        .iter()
        .map(|pi| labels.iter().map(|rho| t.g[pos(pi)][pos(rho)].clone()).collect())
        .collect();
    Ok(LabeledMatrix {
        row_labels: labels.clone(),
        col_labels: labels,
        entries,
    })
}

/// Checks the finite-degree structure constants against the b = 0
/// connection coefficients on padded cycle types, for every triple of
/// reduced types whose classes are non-zero in degree n.
pub fn verify_bridge(n: usize) -> Result<()> {
    let table = connection::c_table(n)?;
    let mut reduced = Vec::new();
    for r in 0..n {
        for p in all_partitions(r) {
            if class_is_valid(&p, n) {
                reduced.push(p);
            }
        }
    }
    let zero = BigInt::zero();
    let pad = |p: &Partition| p.oplus_ones(n - p.size());
    for kappa in &reduced {
        for lambda in &reduced {
            for mu in &reduced {
                let direct = rho(kappa, lambda, mu, n);
                let via_c = table
                    .get_parts(&pad(kappa), &pad(lambda), &pad(mu))
                    .eval(&zero);
                if direct != via_c {
                    return Err(Error::Inconsistent(format!(
                        "structure constant rho[{kappa} | {lambda}, {mu}] in degree {n} \
                         is {direct} but the padded coefficient at b = 0 is {via_c}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks that all top-degree structure constants of degree r agree at the
/// two smallest group degrees admitting the target class.
pub fn verify_stabilization(r: usize) -> Result<()> {
    for kappa in all_partitions(r) {
        let n = kappa.size() + kappa.len();
        for a in 0..=r {
            for lambda in all_partitions(a) {
                for mu in all_partitions(r - a) {
                    let first = rho(&kappa, &lambda, &mu, n);
                    let second = rho(&kappa, &lambda, &mu, n + 1);
                    if first != second {
                        return Err(Error::Inconsistent(format!(
                            "top structure constant rho[{kappa} | {lambda}, {mu}] \
                             changes between degrees {n} and {}: {first} vs {second}",
                            n + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks that the g-basis route and the marginal route produce the same
/// top coefficient table at degree r.
pub fn verify_two_path(r: usize) -> Result<()> {
    let via_marginals = connection::top_matrix(r)?;
    let t = fh_tables(r)?;
    if via_marginals != t.g {
        return Err(Error::Inconsistent(format!(
            "top coefficient tables of degree {r} disagree between the marginal \
             and the graded-algebra routes"
        )));
    }
    Ok(())
}

fn check_unitriangular(m: &LabeledMatrix, upper: bool, name: &str) -> Result<()> {
    let k = m.entries.len();
    for i in 0..k {
        for j in 0..k {
            let e = &m.entries[i][j];
            let expected_zero = if upper { j < i } else { j > i };
            if i == j && !e.is_one() {
                return Err(Error::Inconsistent(format!(
                    "{name} diagonal entry at {} is {e}, not 1",
                    m.row_labels[i]
                )));
            }
            if expected_zero && !e.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "{name} entry ({}, {}) should vanish but is {e}",
                    m.row_labels[i], m.col_labels[j]
                )));
            }
        }
    }
    Ok(())
}

/// Runs every matrix-level check at degree r: triangularity of U and L,
/// the factorization M = U L, the identity expressing the g-to-f matrix
/// through smaller class-to-f matrices, the block support of N, and the
/// determinant certificates for F, M blocks, N and Q.
pub fn verify_matrices(r: usize) -> Result<()> {
    let t = fh_tables(r)?;
    let u = matrix_u(r)?;
    let l = matrix_l(r)?;
    let m = matrix_m(r)?;
    let n = matrix_n(r)?;
    let q = matrix_q(r)?;
    check_unitriangular(&u, true, "m-in-f matrix")?;
    check_unitriangular(&l, false, "c-in-m matrix")?;
    if m.entries != matmul_z(&u.entries, &l.entries) {
        return Err(Error::Inconsistent(format!(
            "displayed factorization M = U L fails at degree {r}"
        )));
    }
    let det_f = det_z(&t.f);
    if !det_f.is_one() && det_f != BigInt::from(-1) {
        return Err(Error::Inconsistent(format!(
            "f-basis expansion matrix of degree {r} has determinant {det_f}"
        )));
    }
    for i in 1..=r {
        let block = matrix_m_sub(r, i)?;
        let det = det_z(&block.entries);
        if !det.is_one() {
            return Err(Error::Inconsistent(format!(
                "south-east block ({r}, {i}) of the class-to-f matrix has determinant {det}"
            )));
        }
    }
    let det_n = det_z(&n.entries);
    if !det_n.is_one() {
        return Err(Error::Inconsistent(format!(
            "g-to-f matrix of degree {r} has determinant {det_n}"
        )));
    }
    let det_q = det_z(&q.entries);
    if !det_q.is_one() && det_q != BigInt::from(-1) {
        return Err(Error::Inconsistent(format!(
            "top coefficient matrix of degree {r} has determinant {det_q}"
        )));
    }
    for (pi_idx, pi) in t.parts.iter().enumerate() {
        let sub = fh_tables(r - pi.len())?;
        for (li, lambda) in t.parts.iter().enumerate() {
            let entry = &t.g_in_f[pi_idx][li];
            let expected = match lambda.remove_part(pi.len()) {
                Some(rest) => {
                    sub.c_in_f[sub.index_of(&pi.decremented())][sub.index_of(&rest)].clone()
                }
                None => BigInt::zero(),
            };
            if *entry != expected {
                return Err(Error::Inconsistent(format!(
                    "g-to-f entry for (g_{pi}, f_{lambda}) is {entry}, but the \
                     degree-{} class-to-f table gives {expected}",
                    r - pi.len()
                )));
            }
        }
    }
    Ok(())
}
