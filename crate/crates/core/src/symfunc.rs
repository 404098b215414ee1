//! Symmetric function tables and the Jack basis.
//!
//! Everything is graded: a symmetric function of homogeneous degree `n` is
//! a coefficient vector over the partitions of `n` in ascending total
//! order. [`DegreeTables`] holds the integer expansion of power sums in
//! monomials and its rational inverse. [`JackSet`] holds the Jack
//! polynomials of degree `n` in the J-normalization (the coefficient of
//! `m_{1^n}` is `n!`), produced by Gram-Schmidt orthogonalization of the
//! monomial basis under the alpha-deformed power-sum inner product
//!
//! ```text
//! <p_lambda, p_mu> = delta z_lambda alpha^len(lambda)
//! ```
//!
//! with coefficients in the field of rational functions of alpha.
//!
//! Jack sets are memoized per degree and, when `JACKCC_CACHE_DIR` is set,
//! persisted across runs.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cache;
use crate::error::{Error, Result};
use crate::linalg::{invert_rational, matmul_q, to_rational, QMatrix, ZMatrix};
use crate::partition::{all_partitions, Partition};
use crate::poly::{UniPoly, Var};
use crate::ratfunc::RatFunc;

/// Expansion of `m_mu * p_r` in the monomial basis: the coefficient of
/// `m_nu` is the number of parts of `nu` from which subtracting `r`
/// (dropping the part when it reaches zero) recovers `mu`.
fn monomial_times_power(acc: &HashMap<Partition, BigInt>, r: usize) -> HashMap<Partition, BigInt> {
    let mut out: HashMap<Partition, BigInt> = HashMap::new();
    let single = Partition::new(vec![r]);
    for (mu, c) in acc {
        let mut candidates = vec![mu.union(&single)];
        for (value, _) in mu.value_multiplicities() {
            let mut parts = mu.parts().to_vec();
            let i = parts.iter().position(|&p| p == value).unwrap();
            parts[i] += r;
            candidates.push(Partition::new(parts));
        }
        candidates.sort();
        candidates.dedup();
        for nu in candidates {
            let mut count = 0usize;
            for (value, mult) in nu.value_multiplicities() {
                if value < r {
                    continue;
                }
                let mut parts = nu.parts().to_vec();
                let i = parts.iter().position(|&p| p == value).unwrap();
                parts[i] = value - r;
                if Partition::new(parts) == *mu {
                    count += mult;
                }
            }
            if count > 0 {
                *out.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(count);
            }
        }
    }
    out
}

/// Basis bookkeeping for one degree: the partition list in ascending total
/// order and the transition matrices between power sums and monomials.
pub struct DegreeTables {
    n: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_in_m[l][m]` is the coefficient of `m_{parts[m]}` in `p_{parts[l]}`.
    p_in_m: ZMatrix,
    /// `m_in_p[m][l]` is the coefficient of `p_{parts[l]}` in `m_{parts[m]}`.
    m_in_p: QMatrix,
}

impl DegreeTables {
    fn new(n: usize) -> Result<Self> {
        let parts = all_partitions(n);
        let count = parts.len();
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut p_in_m = vec![vec![BigInt::zero(); count]; count];
        for (li, lambda) in parts.iter().enumerate() {
            let mut acc = HashMap::from([(Partition::empty(), BigInt::one())]);
            for &r in lambda.parts() {
                acc = monomial_times_power(&acc, r);
            }
            for (mu, c) in acc {
                p_in_m[li][index[&mu]] = c;
            }
        }
        let m_in_p = invert_rational(&to_rational(&p_in_m))?;
        Ok(DegreeTables {
            n,
            parts,
            index,
            p_in_m,
            m_in_p,
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

    pub fn p_in_m(&self) -> &ZMatrix {
        &self.p_in_m
    }

    pub fn m_in_p(&self) -> &QMatrix {
        &self.m_in_p
    }
}

fn degree_memo() -> &'static Mutex<HashMap<usize, Arc<DegreeTables>>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn degree_tables(n: usize) -> Arc<DegreeTables> {
    let mut memo = degree_memo().lock().unwrap();
    memo.entry(n)
        .or_insert_with(|| Arc::new(DegreeTables::new(n).expect("power sums form a basis")))
        .clone()
}

type SparseQ = HashMap<Partition, BigRational>;

/// Power-sum expansion of the elementary symmetric function `e_r`, by the
/// Newton recurrence `r e_r = sum_i (-1)^(i-1) p_i e_(r-i)`.
pub fn elementary_in_p(r: usize) -> Arc<SparseQ> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<SparseQ>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = memo.lock().unwrap().get(&r) {
        return found.clone();
    }
    let result = if r == 0 {
        HashMap::from([(Partition::empty(), BigRational::one())])
    } else {
        let mut acc: SparseQ = HashMap::new();
        for i in 1..=r {
            let prev = elementary_in_p(r - i);
            let single = Partition::new(vec![i]);
            let sign = if i % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            for (mu, c) in prev.iter() {
                *acc.entry(mu.union(&single)).or_insert_with(BigRational::zero) += c * &sign;
            }
        }
        let scale = BigRational::from(BigInt::from(r as u64));
        acc.retain(|_, c| {
            *c /= &scale;
            !c.is_zero()
        });
        acc
    };
    let arc = Arc::new(result);
    memo.lock().unwrap().insert(r, arc.clone());
    arc
}

/// Power-sum expansion of the product `e_lambda = e_(lambda_1) e_(lambda_2) ...`.
pub fn elementary_product_in_p(lambda: &Partition) -> SparseQ {
    let mut acc: SparseQ = HashMap::from([(Partition::empty(), BigRational::one())]);
    for &part in lambda.parts() {
        let factor = elementary_in_p(part);
        let mut next: SparseQ = HashMap::new();
        for (a, ca) in &acc {
            for (b, cb) in factor.iter() {
                *next.entry(a.union(b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc = next;
    }
    acc
}

/// The integer matrix expressing monomials in the elementary basis:
/// `u[l][m]` is the coefficient of `e_{parts[l]}` in `m_{parts[m]}`, with
/// both indices running over the partitions of `r` in ascending total
/// order.
pub fn monomial_in_elementary(r: usize) -> Result<ZMatrix> {
    let tables = degree_tables(r);
    let parts = tables.partitions();
    let count = parts.len();
    let mut e_cols = vec![vec![BigRational::zero(); count]; count];
    for (li, lambda) in parts.iter().enumerate() {
        for (rho, c) in elementary_product_in_p(lambda) {
            e_cols[tables.index_of(&rho)][li] = c;
        }
    }
    let mut m_cols = vec![vec![BigRational::zero(); count]; count];
    for (mi, row) in tables.m_in_p().iter().enumerate() {
        for (li, value) in row.iter().enumerate() {
            m_cols[li][mi] = value.clone();
        }
    }
    let u_q = matmul_q(&invert_rational(&e_cols)?, &m_cols);
    u_q.iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::NonIntegral {
                            context: format!("monomial-in-elementary matrix, degree {r}"),
                            witness: c.to_string(),
                        })
                    }
                })
                .collect()
        })
        .collect()
}

/// The Jack polynomials of one degree, stored as power-sum coefficient
/// vectors over the field of rational functions of alpha.
pub struct JackSet {
    n: usize,
    tables: Arc<DegreeTables>,
    /// `coeffs_p[t][l]`: coefficient of `p_{parts[l]}` in `J_{parts[t]}`.
    coeffs_p: Vec<Vec<RatFunc>>,
    /// `norms[t] = <J_t, J_t>`.
    norms: Vec<RatFunc>,
}

fn inner_weight(lambda: &Partition) -> UniPoly {
    UniPoly::monomial(
        Var::Alpha,
        BigRational::from(lambda.z()),
        lambda.len(),
    )
}

fn inner_product(a: &[RatFunc], b: &[RatFunc], parts: &[Partition]) -> RatFunc {
    let mut acc = RatFunc::zero(Var::Alpha);
    for (i, lambda) in parts.iter().enumerate() {
        if a[i].is_zero() || b[i].is_zero() {
            continue;
        }
        let w = RatFunc::from_poly(inner_weight(lambda));
        acc = acc.add(&a[i].mul(&b[i]).mul(&w));
    }
    acc
}

impl JackSet {
    fn compute(n: usize) -> Result<Self> {
        let tables = degree_tables(n);
        let parts = tables.partitions().to_vec();
        let count = parts.len();
        let ones_index = 0;
        debug_assert_eq!(parts[ones_index], Partition::ones(n));
        let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
        let mut coeffs_p: Vec<Vec<RatFunc>> = Vec::with_capacity(count);
        let mut norms: Vec<RatFunc> = Vec::with_capacity(count);
        for t in 0..count {
            let mut v: Vec<RatFunc> = tables.m_in_p()[t]
                .iter()
                .map(|c| RatFunc::constant(Var::Alpha, c.clone()))
                .collect();
            for s in 0..t {
                let c = inner_product(&v, &coeffs_p[s], &parts)
                    .div(&norms[s])
                    .expect("previous norm is nonzero");
                if c.is_zero() {
                    continue;
                }
                for l in 0..count {
                    v[l] = v[l].sub(&c.mul(&coeffs_p[s][l]));
                }
            }
            // Scale so the coefficient of m_{1^n} is n!.
            let mut lead = RatFunc::zero(Var::Alpha);
            for (l, value) in v.iter().enumerate() {
                if value.is_zero() {
                    continue;
                }
                let c = BigRational::from(tables.p_in_m()[l][ones_index].clone());
                lead = lead.add(&value.scale(&c));
            }
            if lead.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "Jack polynomial {:?} has zero m_(1^n) coefficient",
                    parts[t]
                )));
            }
            let f = RatFunc::constant(Var::Alpha, BigRational::from(factorial.clone()))
                .div(&lead)?;
            for value in v.iter_mut() {
                *value = value.mul(&f);
            }
            let norm = inner_product(&v, &v, &parts);
            if norm.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "Jack polynomial {:?} has zero norm",
                    parts[t]
                )));
            }
            coeffs_p.push(v);
            norms.push(norm);
        }
        Ok(JackSet {
            n,
            tables,
            coeffs_p,
            norms,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> &DegreeTables {
        &self.tables
    }

    pub fn partitions(&self) -> &[Partition] {
        self.tables.partitions()
    }

    /// Coefficient of `p_lambda` in `J_theta`, by basis index.
    pub fn p_coeff(&self, theta: usize, lambda: usize) -> &RatFunc {
        &self.coeffs_p[theta][lambda]
    }

    /// The squared norm `<J_theta, J_theta>`.
    pub fn norm(&self, theta: usize) -> &RatFunc {
        &self.norms[theta]
    }

    /// Coefficient of `m_mu` in `J_theta`.
    pub fn m_coeff(&self, theta: usize, mu: &Partition) -> RatFunc {
        let mi = self.tables.index_of(mu);
        let mut acc = RatFunc::zero(Var::Alpha);
        for l in 0..self.partitions().len() {
            let c = &self.tables.p_in_m()[l][mi];
            if c.is_zero() || self.coeffs_p[theta][l].is_zero() {
                continue;
            }
            acc = acc.add(&self.coeffs_p[theta][l].scale(&BigRational::from(c.clone())));
        }
        acc
    }
}

/// Product formula for the squared norm of `J_theta`: over the cells of
/// the diagram, `prod (alpha a + l + 1)(alpha a + l + alpha)` with `a` the
/// arm and `l` the leg.
pub fn jack_norm_formula(theta: &Partition) -> UniPoly {
    let mut acc = UniPoly::one(Var::Alpha);
    for (i, j) in theta.cells() {
        let a = theta.arm(i, j) as i64;
        let l = theta.leg(i, j) as i64;
        acc = acc.mul(&UniPoly::from_ints(Var::Alpha, &[l + 1, a]));
        acc = acc.mul(&UniPoly::from_ints(Var::Alpha, &[l, a + 1]));
    }
    acc
}

#[derive(Serialize, Deserialize)]
struct RatFuncDto {
    num: Vec<String>,
    den: Vec<String>,
}

fn ratfunc_to_dto(r: &RatFunc) -> RatFuncDto {
    RatFuncDto {
        num: r.num().coeffs().iter().map(|c| c.to_string()).collect(),
        den: r.den().coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

fn dto_to_ratfunc(dto: &RatFuncDto) -> Result<RatFunc> {
    let parse = |v: &[String]| -> Result<UniPoly> {
        let coeffs = v
            .iter()
            .map(|s| {
                BigRational::from_str(s)
                    .map_err(|e| Error::Cache(format!("bad rational {s}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(Var::Alpha, coeffs))
    };
    RatFunc::new(parse(&dto.num)?, parse(&dto.den)?)
}

#[derive(Serialize, Deserialize)]
struct JackSetDto {
    n: usize,
    coeffs: Vec<Vec<RatFuncDto>>,
    norms: Vec<RatFuncDto>,
}

impl JackSet {
    fn to_dto(&self) -> JackSetDto {
        JackSetDto {
            n: self.n,
            coeffs: self
                .coeffs_p
                .iter()
                .map(|row| row.iter().map(ratfunc_to_dto).collect())
                .collect(),
            norms: self.norms.iter().map(ratfunc_to_dto).collect(),
        }
    }

    fn from_dto(dto: &JackSetDto) -> Result<Self> {
        let tables = degree_tables(dto.n);
        let count = tables.partitions().len();
        if dto.coeffs.len() != count || dto.norms.len() != count {
            return Err(Error::Cache("wrong entry count".into()));
        }
        let coeffs_p = dto
            .coeffs
            .iter()
            .map(|row| {
                if row.len() != count {
                    return Err(Error::Cache("wrong row length".into()));
                }
                row.iter().map(dto_to_ratfunc).collect()
            })
            .collect::<Result<Vec<Vec<RatFunc>>>>()?;
        let norms = dto.norms.iter().map(dto_to_ratfunc).collect::<Result<Vec<_>>>()?;
        Ok(JackSet {
            n: dto.n,
            tables,
            coeffs_p,
            norms,
        })
    }
}

/// The memoized Jack basis of degree `n`, loaded from the on-disk cache
/// when available.
pub fn jack_set(n: usize) -> Result<Arc<JackSet>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<JackSet>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    if let Some(found) = guard.get(&n) {
        return Ok(found.clone());
    }
    let key = format!("jack-n{n}");
    let mut loaded = None;
    if let Some(payload) = cache::get(&key) {
        if let Ok(dto) = serde_json::from_str::<JackSetDto>(&payload) {
            if let Ok(set) = JackSet::from_dto(&dto) {
                loaded = Some(set);
            }
        }
    }
    let set = match loaded {
        Some(set) => set,
        None => {
            let set = JackSet::compute(n)?;
            if let Ok(payload) = serde_json::to_string(&set.to_dto()) {
                let _ = cache::put(&key, &payload);
            }
            set
        }
    };
    let arc = Arc::new(set);
    guard.insert(n, arc.clone());
    Ok(arc)
}
