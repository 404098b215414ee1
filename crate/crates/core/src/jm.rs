//! Jucys-Murphy elements and their symmetric-function evaluations inside
//! the symmetric-group algebra.
//!
//! The k-th Jucys-Murphy element is the sum of the transpositions moving k
//! and a smaller point; the first one is zero. Two exact checks connect
//! them to the class sums:
//! - the l-th elementary symmetric polynomial of all n of them equals the
//!   sum of the class sums over every reduced type of size l, on the nose;
//! - a monomial symmetric polynomial of them equals, in its top-degree
//!   part, the monomial-type basis element of the graded algebra, truncated
//!   to the classes that survive in degree n.
//!
//! Everything here expands full group-algebra elements, so degrees are
//! limited by a guard (default 8).

use std::collections::HashMap;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::fh::{self, class_is_valid, class_permutations, class_size, Perm};
use crate::partition::{all_partitions, Partition};

/// Largest group degree expanded without an explicit override.
pub const DEFAULT_JM_GUARD: usize = 8;

fn check_guard(n: usize, guard: Option<usize>) -> Result<()> {
    let limit = guard.unwrap_or(DEFAULT_JM_GUARD);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "group algebra expansion",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// A sparse element of the degree-n group algebra over the integers,
/// keyed by permutation image vectors. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebra {
    n: usize,
    terms: HashMap<Vec<usize>, BigInt>,
}

impl GroupAlgebra {
    pub fn zero(n: usize) -> Self {
        GroupAlgebra {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = GroupAlgebra::zero(n);
        out.add_term((0..n).collect(), BigInt::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, images: &[usize]) -> BigInt {
        self.terms.get(images).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, images: Vec<usize>, value: BigInt) {
        debug_assert_eq!(images.len(), self.n);
        if value.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(images) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GroupAlgebra) -> GroupAlgebra {
        assert_eq!(self.n, other.n, "mixed group degrees");
        let mut out = self.clone();
        for (images, v) in &other.terms {
            out.add_term(images.clone(), v.clone());
        }
        out
    }

    /// Product in the group algebra; term permutations compose as
    /// functions, left factor applied last.
    pub fn multiply(&self, other: &GroupAlgebra) -> GroupAlgebra {
        assert_eq!(self.n, other.n, "mixed group degrees");
        let mut out = GroupAlgebra::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let composed: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                out.add_term(composed, ca * cb);
            }
        }
        out
    }

    /// Groups the terms by reduced cyclic type, requiring a single
    /// coefficient across each class met in full.
    pub fn by_reduced_type(&self) -> Result<HashMap<Partition, BigInt>> {
        let mut sums: HashMap<Partition, (BigInt, BigInt)> = HashMap::new();
        for (images, v) in &self.terms {
            let reduced = Perm::from_images(images.clone()).reduced_type();
            let entry = sums
                .entry(reduced)
                .or_insert_with(|| (BigInt::zero(), BigInt::zero()));
            entry.0 += v;
            entry.1 += BigInt::one();
        }
        let mut out = HashMap::new();
        for (reduced, (total, seen)) in sums {
            let size = class_size(&reduced, self.n);
            if seen != size {
                return Err(Error::Inconsistent(format!(
                    "class of reduced type {reduced} in degree {} is met on {seen} of \
                     {size} permutations",
                    self.n
                )));
            }
            let per = &total / &size;
            if &per * &size != total {
                return Err(Error::Inconsistent(format!(
                    "class of reduced type {reduced} in degree {} carries a non-uniform \
                     coefficient",
                    self.n
                )));
            }
            out.insert(reduced, per);
        }
        Ok(out)
    }
}

/// The k-th Jucys-Murphy element of degree n: the sum of the transpositions
/// of k with each smaller point. Zero for k = 0.
pub fn jm_element(n: usize, k: usize) -> GroupAlgebra {
    assert!(k < n, "variable index out of range");
    let mut out = GroupAlgebra::zero(n);
    for j in 0..k {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(j, k);
        out.add_term(images, BigInt::one());
    }
    out
}

/// The sum of the class sums over all reduced types of size l in degree n.
pub fn class_sum_of_size(n: usize, l: usize) -> GroupAlgebra {
    let mut out = GroupAlgebra::zero(n);
    for lambda in all_partitions(l) {
        for p in class_permutations(&lambda, n) {
            out.add_term(p.images().to_vec(), BigInt::one());
        }
    }
    out
}

/// Elementary symmetric polynomials `e_0, .., e_lmax` of the n Jucys-Murphy
/// elements, by one pass of the standard one-variable-at-a-time recurrence.
pub fn elementary_jm(n: usize, lmax: usize) -> Vec<GroupAlgebra> {
    let mut rows: Vec<GroupAlgebra> = Vec::with_capacity(lmax + 1);
    rows.push(GroupAlgebra::identity(n));
    for l in 1..=lmax {
        let _ = l;
        rows.push(GroupAlgebra::zero(n));
    }
    for k in 1..n {
        let jk = jm_element(n, k);
        for l in (1..=lmax).rev() {
            let lifted = rows[l - 1].multiply(&jk);
            rows[l] = rows[l].add(&lifted);
        }
    }
    rows
}

/// Checks `e_l` of the Jucys-Murphy elements against the size-l class sums,
/// as an equality of full group-algebra elements.
pub fn verify_elementary(n: usize, l: usize, guard: Option<usize>) -> Result<()> {
    check_guard(n, guard)?;
    assert!((1..n).contains(&l), "need 1 <= l <= n - 1");
    let computed = &elementary_jm(n, l)[l];
    let expected = class_sum_of_size(n, l);
    if *computed != expected {
        return Err(Error::Inconsistent(format!(
            "elementary symmetric polynomial e_{l} of the degree-{n} Jucys-Murphy \
             elements differs from the size-{l} class sums"
        )));
    }
    Ok(())
}

/// Checks every admissible `e_l` of degree n in a single expansion pass.
pub fn verify_elementary_all(n: usize, guard: Option<usize>) -> Result<()> {
    check_guard(n, guard)?;
    assert!(n >= 2, "need at least one non-zero Jucys-Murphy element");
    let rows = elementary_jm(n, n - 1);
    for (l, row) in rows.iter().enumerate().skip(1) {
        if *row != class_sum_of_size(n, l) {
            return Err(Error::Inconsistent(format!(
                "elementary symmetric polynomial e_{l} of the degree-{n} Jucys-Murphy \
                 elements differs from the size-{l} class sums"
            )));
        }
    }
    Ok(())
}

fn distinct_arrangements(mu: &Partition, slots: usize) -> Vec<Vec<usize>> {
    let mut pool = mu.value_multiplicities();
    let mut current = Vec::with_capacity(slots);
    let mut out = Vec::new();
    fn recurse(
        pool: &mut Vec<(usize, usize)>,
        current: &mut Vec<usize>,
        slots: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == slots {
            out.push(current.clone());
            return;
        }
        for idx in 0..pool.len() {
            if pool[idx].1 == 0 {
                continue;
            }
            pool[idx].1 -= 1;
            current.push(pool[idx].0);
            recurse(pool, current, slots, out);
            current.pop();
            pool[idx].1 += 1;
        }
    }
    recurse(&mut pool, &mut current, slots, &mut out);
    out
}

/// The monomial symmetric polynomial m_mu evaluated on the n Jucys-Murphy
/// elements: one term per choice of distinct variables and distinct
/// exponent arrangement. The zero variable is skipped since its terms
/// vanish.
pub fn monomial_jm(n: usize, mu: &Partition) -> GroupAlgebra {
    let k = mu.len();
    let mut total = GroupAlgebra::identity(n);
    if k == 0 {
        return total;
    }
    total = GroupAlgebra::zero(n);
    let vars: Vec<GroupAlgebra> = (1..n).map(|i| jm_element(n, i)).collect();
    let arrangements = distinct_arrangements(mu, k);
    let mut chosen = Vec::with_capacity(k);
    fn subsets(
        start: usize,
        left: usize,
        vars: &[GroupAlgebra],
        chosen: &mut Vec<usize>,
        arrangements: &[Vec<usize>],
        total: &mut GroupAlgebra,
    ) {
        if left == 0 {
            for arrangement in arrangements {
                let mut product = GroupAlgebra::identity(vars[0].degree());
                for (slot, &exp) in arrangement.iter().enumerate() {
                    for _ in 0..exp {
                        product = product.multiply(&vars[chosen[slot]]);
                    }
                }
                *total = total.add(&product);
            }
            return;
        }
        for i in start..=vars.len() - left {
            chosen.push(i);
            subsets(i + 1, left - 1, vars, chosen, arrangements, total);
            chosen.pop();
        }
    }
    subsets(0, k, &vars, &mut chosen, &arrangements, &mut total);
    total
}

/// Checks the top-degree part of m_mu of the Jucys-Murphy elements against
/// the monomial-type basis element of the graded algebra, truncated to the
/// classes that survive in degree n. The top part consists of the terms
/// whose reduced type has full size |mu|; the coefficient must be constant
/// along every class it meets.
pub fn verify_monomial(n: usize, mu: &Partition, guard: Option<usize>) -> Result<()> {
    check_guard(n, guard)?;
    assert!(mu.size() < n, "need |mu| <= n - 1");
    let value = monomial_jm(n, mu);
    let mut top = GroupAlgebra::zero(n);
    for lambda in all_partitions(mu.size()) {
        for p in class_permutations(&lambda, n) {
            let c = value.coeff(p.images());
            if !c.is_zero() {
                top.add_term(p.images().to_vec(), c);
            }
        }
    }
    let by_class = top.by_reduced_type()?;
    let expected = fh::m_in_classes(mu)?;
    for lambda in all_partitions(mu.size()) {
        if !class_is_valid(&lambda, n) {
            continue;
        }
        let observed = by_class.get(&lambda).cloned().unwrap_or_else(BigInt::zero);
        let wanted = expected.coeff(&lambda);
        if observed != wanted {
            return Err(Error::Inconsistent(format!(
                "top part of m_{mu} of the degree-{n} Jucys-Murphy elements gives {observed} \
                 on the class of reduced type {lambda}, but the graded algebra gives {wanted}"
            )));
        }
    }
    Ok(())
}
