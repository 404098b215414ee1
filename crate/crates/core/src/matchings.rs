//! Perfect matchings on a 2n-point ground set and the matching counts that
//! realize the b = 0 and b = 1 specializations of the connection
//! coefficients.
//!
//! The ground set consists of n plain points `0..n` and n hatted points
//! `n..2n`, with the hat of plain point `i` encoded as `n + i`. Two
//! matchings delta_a, delta_b induce a partition `lambda_of(delta_a,
//! delta_b)`: the multiset of half-sizes of the connected components of the
//! multigraph whose edges are the pairs of both matchings.
//!
//! Fixing a canonical bipartite pair (delta_1, delta_2) with
//! `lambda_of(delta_1, delta_2) = lambda`, the count `a^lambda_{mu,nu}` is
//! the number of matchings delta with `lambda_of(delta_1, delta) = mu` and
//! `lambda_of(delta, delta_2) = nu`; restricting delta to bipartite
//! matchings gives `atilde`. These equal the connection coefficients
//! evaluated at b = 1 and b = 0 respectively, which [`verify_b01`] checks
//! exhaustively.

use std::collections::HashMap;

use num::{BigInt, One, Zero};
use rayon::prelude::*;

use crate::connection::c_table;
use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};

/// Largest n for which exhaustive matching enumeration runs by default.
pub const DEFAULT_MATCHING_GUARD: usize = 6;

fn check_guard(n: usize, guard: Option<usize>) -> Result<()> {
    let limit = guard.unwrap_or(DEFAULT_MATCHING_GUARD);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "matching enumeration",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// A perfect matching of the 2n points, stored as a partner array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    /// Builds a matching on 2n points from explicit pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(x, y) in pairs {
            if x >= 2 * n || y >= 2 * n || x == y {
                return Err(Error::Inconsistent(format!(
                    "invalid matching pair ({x}, {y}) on {} points",
                    2 * n
                )));
            }
            if partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::Inconsistent(format!(
                    "matching pairs a point twice: ({x}, {y})"
                )));
            }
            partner[x] = y;
            partner[y] = x;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Inconsistent(
                "matching leaves a point unpaired".into(),
            ));
        }
        Ok(Matching { partner })
    }

    /// The matching pairing each plain point with its own hat.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|x| (x + n) % (2 * n)).collect();
        Matching { partner }
    }

    /// Number of plain points n (half the ground set).
    pub fn half(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, x: usize) -> usize {
        self.partner[x]
    }

    /// True when every pair joins a plain point to a hatted point.
    pub fn is_bipartite(&self) -> bool {
        let n = self.half();
        (0..n).all(|i| self.partner[i] >= n)
    }

    /// Relabels plain points by `plain` and hatted points by `hatted`
    /// (both permutations of 0..n). Preserves bipartiteness and every
    /// `lambda_of` statistic against a matching relabeled the same way.
    pub fn relabel(&self, plain: &[usize], hatted: &[usize]) -> Matching {
        let n = self.half();
        let map = |x: usize| {
            if x < n {
                plain[x]
            } else {
                n + hatted[x - n]
            }
        };
        let mut partner = vec![0; 2 * n];
        for x in 0..2 * n {
            partner[map(x)] = map(self.partner[x]);
        }
        Matching { partner }
    }
}

/// Half-sizes of the connected components of the union multigraph,
/// as a partition of n.
pub fn lambda_of(a: &Matching, b: &Matching) -> Partition {
    let n = a.half();
    assert_eq!(n, b.half(), "matchings on different ground sets");
    let mut root: Vec<usize> = (0..2 * n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for x in 0..2 * n {
        for y in [a.partner(x), b.partner(x)] {
            let (rx, ry) = (find(&mut root, x), find(&mut root, y));
            if rx != ry {
                root[rx] = ry;
            }
        }
    }
    let mut size = vec![0usize; 2 * n];
    for x in 0..2 * n {
        size[find(&mut root, x)] += 1;
    }
    let halves: Vec<usize> = size.into_iter().filter(|&s| s > 0).map(|s| s / 2).collect();
    Partition::new(halves)
}

/// The fixed bipartite pair (delta_1, delta_2) with
/// `lambda_of(delta_1, delta_2) = lambda`.
///
/// delta_1 pairs each point with its hat; delta_2 pairs, inside each
/// consecutive block of size k, the i-th plain point with the hat of the
/// cyclically next plain point.
pub fn canonical_deltas(lambda: &Partition) -> (Matching, Matching) {
    let n = lambda.size();
    let delta_1 = Matching::identity(n);
    let mut pairs = Vec::with_capacity(n);
    let mut start = 0;
    for &k in lambda.parts() {
        for i in 0..k {
            pairs.push((start + i, n + start + (i + 1) % k));
        }
        start += k;
    }
    let delta_2 = Matching::from_pairs(n, &pairs).expect("canonical block pairs are a matching");
    assert_eq!(
        lambda_of(&delta_1, &delta_2),
        *lambda,
        "canonical pair must realize its partition"
    );
    (delta_1, delta_2)
}

/// All (2n-1)!! matchings, generated by always pairing the smallest
/// unmatched point first.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; 2 * n];
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let x = match partner.iter().position(|&p| p == usize::MAX) {
            Some(x) => x,
            None => {
                out.push(Matching {
                    partner: partner.clone(),
                });
                return;
            }
        };
        for y in x + 1..partner.len() {
            if partner[y] == usize::MAX {
                partner[x] = y;
                partner[y] = x;
                rec(partner, out);
                partner[x] = usize::MAX;
                partner[y] = usize::MAX;
            }
        }
    }
    rec(&mut partner, &mut out);
    out
}

/// All n! bipartite matchings, one per permutation sigma
/// (plain i paired with the hat of sigma(i)).
pub fn all_bipartite_matchings(n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Matching>) {
        if image.len() == n {
            let mut partner = vec![0; 2 * n];
            for (i, &j) in image.iter().enumerate() {
                partner[i] = n + j;
                partner[n + j] = i;
            }
            out.push(Matching { partner });
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                image.push(j);
                rec(n, image, used, out);
                image.pop();
                used[j] = false;
            }
        }
    }
    rec(n, &mut image, &mut used, &mut out);
    out
}

/// Counts matchings delta with `lambda_of(delta_1, delta) = mu` and
/// `lambda_of(delta, delta_2) = nu`, for an arbitrary bipartite reference
/// pair. Exposed so tests can confirm the counts do not depend on which
/// pair realizes lambda.
pub fn count_with_deltas(
    delta_1: &Matching,
    delta_2: &Matching,
    mu: &Partition,
    nu: &Partition,
    bipartite_only: bool,
) -> BigInt {
    let n = delta_1.half();
    let pool = if bipartite_only {
        all_bipartite_matchings(n)
    } else {
        all_matchings(n)
    };
    let hits = pool
        .iter()
        .filter(|d| lambda_of(delta_1, d) == *mu && lambda_of(d, delta_2) == *nu)
        .count();
    BigInt::from(hits)
}

/// The count a^lambda_{mu,nu} (or atilde when `bipartite_only`).
pub fn count_a(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    bipartite_only: bool,
    guard: Option<usize>,
) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    check_guard(lambda.size(), guard)?;
    let (delta_1, delta_2) = canonical_deltas(lambda);
    Ok(count_with_deltas(&delta_1, &delta_2, mu, nu, bipartite_only))
}

/// Full table of a^lambda_{mu,nu} (or atilde) for all triples of size n.
#[derive(Debug)]
pub struct MatchingCounts {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    counts: Vec<BigInt>,
    bipartite_only: bool,
}

impl MatchingCounts {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bipartite_only(&self) -> bool {
        self.bipartite_only
    }

    /// Index partitions in ascending total order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn get(&self, li: usize, mi: usize, ni: usize) -> &BigInt {
        let k = self.parts.len();
        &self.counts[(li * k + mi) * k + ni]
    }

    pub fn get_parts(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> &BigInt {
        self.get(self.index[lambda], self.index[mu], self.index[nu])
    }

    /// Sum of counts over nu of length l.
    pub fn marginal(&self, lambda: &Partition, mu: &Partition, l: usize) -> BigInt {
        let (li, mi) = (self.index[lambda], self.index[mu]);
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, nu)| nu.len() == l)
            .map(|(ni, _)| self.get(li, mi, ni))
            .sum()
    }
}

/// Classifies every matching (or every bipartite matching) against the
/// canonical pair of each lambda of size n.
pub fn matching_counts(
    n: usize,
    bipartite_only: bool,
    guard: Option<usize>,
) -> Result<MatchingCounts> {
    check_guard(n, guard)?;
    let parts = all_partitions(n);
    let k = parts.len();
    let index: HashMap<Partition, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let pool = if bipartite_only {
        all_bipartite_matchings(n)
    } else {
        all_matchings(n)
    };
    let blocks: Vec<Vec<BigInt>> = parts
        .par_iter()
        .map(|lambda| {
            let (delta_1, delta_2) = canonical_deltas(lambda);
            let mut tally = vec![0u64; k * k];
            for d in &pool {
                let mi = index[&lambda_of(&delta_1, d)];
                let ni = index[&lambda_of(d, &delta_2)];
                tally[mi * k + ni] += 1;
            }
            tally.into_iter().map(BigInt::from).collect()
        })
        .collect();
    let counts = blocks.into_iter().flatten().collect();
    Ok(MatchingCounts {
        n,
        parts,
        index,
        counts,
        bipartite_only,
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn odd_double_factorial(n: usize) -> BigInt {
    (1..=n).map(|i| BigInt::from(2 * i - 1)).product()
}

/// Checks the b = 1 and b = 0 specializations against exhaustive matching
/// counts: every triple, every marginal, and the per-lambda classification
/// totals (2n-1)!! and n!.
pub fn verify_b01(n: usize, guard: Option<usize>) -> Result<()> {
    let a = matching_counts(n, false, guard)?;
    let at = matching_counts(n, true, guard)?;
    let table = c_table(n)?;
    let parts = table.partitions().to_vec();
    let k = parts.len();
    let (one, zero) = (BigInt::one(), BigInt::zero());
    for li in 0..k {
        let mut total_a = BigInt::zero();
        let mut total_at = BigInt::zero();
        for mi in 0..k {
            for ni in 0..k {
                let c = table.get(li, mi, ni);
                let (av, atv) = (a.get(li, mi, ni), at.get(li, mi, ni));
                if c.eval(&one) != *av || c.eval(&zero) != *atv {
                    return Err(Error::Inconsistent(format!(
                        "c[{} | {} ; {}] evaluates to ({}, {}) at b = 1, 0 \
                         but the matching counts are ({}, {})",
                        parts[li],
                        parts[mi],
                        parts[ni],
                        c.eval(&one),
                        c.eval(&zero),
                        av,
                        atv
                    )));
                }
                total_a += av;
                total_at += atv;
            }
        }
        if total_a != odd_double_factorial(n) || total_at != factorial(n) {
            return Err(Error::Inconsistent(format!(
                "classification totals for lambda = {} are ({total_a}, {total_at}), \
                 expected ((2n-1)!!, n!)",
                parts[li]
            )));
        }
    }
    for lambda in &parts {
        for mu in &parts {
            for l in 1..=n {
                let mc = table.marginal(lambda, mu, l);
                if mc.eval(&one) != a.marginal(lambda, mu, l)
                    || mc.eval(&zero) != at.marginal(lambda, mu, l)
                {
                    return Err(Error::Inconsistent(format!(
                        "marginal mc[{lambda} | {mu} ; length {l}] disagrees with matching counts"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks the two-way pair counts: for all lambda, mu, nu, rho of size n,
/// sum_kappa a^lambda_{mu,kappa} a^kappa_{nu,rho} equals
/// sum_theta a^lambda_{theta,rho} a^theta_{mu,nu}, and the same for atilde.
pub fn verify_comb_multiplicativity(n: usize, guard: Option<usize>) -> Result<()> {
    for bipartite_only in [false, true] {
        let counts = matching_counts(n, bipartite_only, guard)?;
        let k = counts.partitions().len();
        for li in 0..k {
            for mi in 0..k {
                for ni in 0..k {
                    for ri in 0..k {
                        let via_kappa: BigInt =
                            (0..k).map(|ki| counts.get(li, mi, ki) * counts.get(ki, ni, ri)).sum();
                        let via_theta: BigInt =
                            (0..k).map(|ti| counts.get(li, ti, ri) * counts.get(ti, mi, ni)).sum();
                        if via_kappa != via_theta {
                            let p = counts.partitions();
                            return Err(Error::Inconsistent(format!(
                                "matching multiplicativity fails at ({}, {}, {}, {}) \
                                 (bipartite_only = {bipartite_only}): {via_kappa} vs {via_theta}",
                                p[li], p[mi], p[ni], p[ri]
                            )));
                        }
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

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn identity_matching_pairs_points_with_hats() {
        let m = Matching::identity(3);
        for i in 0..3 {
            assert_eq!(m.partner(i), i + 3);
            assert_eq!(m.partner(i + 3), i);
        }
        assert!(m.is_bipartite());
    }

    #[test]
    fn canonical_deltas_small_cases() {
        let (d1, d2) = canonical_deltas(&part(&[1]));
        assert_eq!(d1, d2);

        let (_, d2) = canonical_deltas(&part(&[2]));
        assert_eq!(d2.partner(0), 3);
        assert_eq!(d2.partner(1), 2);

        for lambda in [part(&[2, 1]), part(&[3, 2]), part(&[4, 1, 1])] {
            let (d1, d2) = canonical_deltas(&lambda);
            assert!(d1.is_bipartite() && d2.is_bipartite());
            assert_eq!(lambda_of(&d1, &d2), lambda);
        }
    }

    #[test]
    fn lambda_of_doubled_matching_is_all_ones() {
        for d in all_matchings(3) {
            assert_eq!(lambda_of(&d, &d), Partition::ones(3));
        }
    }

    #[test]
    fn lambda_of_single_four_cycle() {
        let d1 = Matching::identity(2);
        let d = Matching::from_pairs(2, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(lambda_of(&d1, &d), part(&[2]));
        assert!(!d.is_bipartite());
    }

    #[test]
    fn lambda_of_two_mixed_matchings() {
        // With plain points 0..4 and hat(i) = 4 + i: the pair
        // {{0,hat 2},{2,hat 3},{3,hat 0},{1,hat 1}} against
        // {{0,2},{hat 2,hat 3},{3,hat 1},{1,hat 0}} splits into two
        // components of half-size 2.
        let a = Matching::from_pairs(4, &[(0, 6), (2, 7), (3, 4), (1, 5)]).unwrap();
        let b = Matching::from_pairs(4, &[(0, 2), (6, 7), (3, 5), (1, 4)]).unwrap();
        assert_eq!(lambda_of(&a, &b), part(&[2, 2]));
        assert_eq!(lambda_of(&b, &a), part(&[2, 2]));
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(all_matchings(1).len(), 1);
        assert_eq!(all_matchings(2).len(), 3);
        assert_eq!(all_matchings(3).len(), 15);
        assert_eq!(all_matchings(4).len(), 105);
        assert_eq!(all_bipartite_matchings(3).len(), 6);
        assert_eq!(all_bipartite_matchings(4).len(), 24);
    }

    #[test]
    fn degree_two_tables_match_hand_enumeration() {
        let a = matching_counts(2, false, None).unwrap();
        let at = matching_counts(2, true, None).unwrap();
        let (p2, p11) = (part(&[2]), part(&[1, 1]));
        assert_eq!(a.get_parts(&p2, &p2, &p2), &BigInt::from(1));
        assert_eq!(a.get_parts(&p2, &p11, &p2), &BigInt::from(1));
        assert_eq!(a.get_parts(&p2, &p2, &p11), &BigInt::from(1));
        assert_eq!(a.get_parts(&p2, &p11, &p11), &BigInt::from(0));
        assert_eq!(a.get_parts(&p11, &p2, &p2), &BigInt::from(2));
        assert_eq!(a.get_parts(&p11, &p11, &p11), &BigInt::from(1));
        assert_eq!(at.get_parts(&p2, &p2, &p2), &BigInt::from(0));
        assert_eq!(at.get_parts(&p11, &p2, &p2), &BigInt::from(1));
        assert_eq!(at.get_parts(&p11, &p11, &p11), &BigInt::from(1));
    }

    #[test]
    fn single_count_matches_table() {
        assert_eq!(
            count_a(&part(&[1]), &part(&[1]), &part(&[1]), false, None).unwrap(),
            BigInt::from(1)
        );
        let a = matching_counts(3, false, None).unwrap();
        for lambda in a.partitions() {
            for mu in a.partitions() {
                for nu in a.partitions() {
                    assert_eq!(
                        &count_a(lambda, mu, nu, false, None).unwrap(),
                        a.get_parts(lambda, mu, nu)
                    );
                }
            }
        }
    }

    #[test]
    fn bipartite_identity_column_is_kronecker() {
        for n in 1..=4 {
            let at = matching_counts(n, true, None).unwrap();
            let ones = Partition::ones(n);
            for lambda in at.partitions() {
                for mu in at.partitions() {
                    let expected = BigInt::from(u64::from(lambda == mu));
                    assert_eq!(at.get_parts(lambda, mu, &ones), &expected);
                }
            }
        }
    }

    #[test]
    fn counts_do_not_depend_on_the_reference_pair() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(417);
        for n in 2..=4 {
            let counts = matching_counts(n, false, None).unwrap();
            let tilde = matching_counts(n, true, None).unwrap();
            for lambda in counts.partitions() {
                let (d1, d2) = canonical_deltas(lambda);
                let mut plain: Vec<usize> = (0..n).collect();
                let mut hatted: Vec<usize> = (0..n).collect();
                plain.shuffle(&mut rng);
                hatted.shuffle(&mut rng);
                let (r1, r2) = (d1.relabel(&plain, &hatted), d2.relabel(&plain, &hatted));
                assert!(r1.is_bipartite() && r2.is_bipartite());
                assert_eq!(lambda_of(&r1, &r2), *lambda);
                for mu in counts.partitions() {
                    for nu in counts.partitions() {
                        assert_eq!(
                            &count_with_deltas(&r1, &r2, mu, nu, false),
                            counts.get_parts(lambda, mu, nu)
                        );
                        assert_eq!(
                            &count_with_deltas(&r1, &r2, mu, nu, true),
                            tilde.get_parts(lambda, mu, nu)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn atilde_is_symmetric() {
        let at = matching_counts(4, true, None).unwrap();
        let k = at.partitions().len();
        for li in 0..k {
            for mi in 0..k {
                for ni in 0..k {
                    assert_eq!(at.get(li, mi, ni), at.get(li, ni, mi));
                }
            }
        }
    }

    #[test]
    fn specializations_agree_with_connection_coefficients() {
        for n in 1..=3 {
            verify_b01(n, None).unwrap();
        }
    }

    #[test]
    fn pair_counting_identities_hold() {
        for n in 1..=3 {
            verify_comb_multiplicativity(n, None).unwrap();
        }
    }

    #[test]
    fn guard_rejects_large_enumeration() {
        match matching_counts(7, false, None) {
            Err(Error::GuardExceeded {
                requested, limit, ..
            }) => {
                assert_eq!(requested, 7);
                assert_eq!(limit, DEFAULT_MATCHING_GUARD);
            }
            other => panic!("expected guard error, got {other:?}"),
        }
        assert!(matching_counts(3, false, Some(2)).is_err());
    }

    #[test]
    fn from_pairs_rejects_bad_input() {
        assert!(Matching::from_pairs(2, &[(0, 0), (1, 2)]).is_err());
        assert!(Matching::from_pairs(2, &[(0, 1), (0, 2)]).is_err());
        assert!(Matching::from_pairs(2, &[(0, 1)]).is_err());
    }
}
