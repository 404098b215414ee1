//! End-to-end verification: golden displayed matrices, exhaustive
//! integrality and non-negativity at desk scale, agreement with the
//! matching and group-algebra oracles, unimodularity of every transition
//! matrix, reconstruction from marginals, and the cumulant family. Each
//! test is one verdict line; the non-negativity scan only reports.

use num::{BigInt, BigRational, One, Signed};

use jackcc::connection;
use jackcc::fh;
use jackcc::jm;
use jackcc::linalg::{det_z, matmul_z, z_from_i64, ZMatrix};
use jackcc::matchings;
use jackcc::partition::{all_partitions, dominated_by, Partition};
use jackcc::poly::UniPoly;
use jackcc::reconstruct;
use jackcc::symfunc::{jack_norm_formula, jack_set};
use jackcc::{RatFunc, Var};

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn parts_of(labels: &[&[usize]]) -> Vec<Partition> {
    labels.iter().map(|l| part(l)).collect()
}

fn assert_display(
    matrix: &fh::LabeledMatrix,
    rows: &[&[usize]],
    cols: &[&[usize]],
    entries: ZMatrix,
) {
    assert_eq!(matrix.row_labels, parts_of(rows));
    assert_eq!(matrix.col_labels, parts_of(cols));
    assert_eq!(matrix.entries, entries);
}

#[test]
fn golden_displayed_matrices_degree_three_and_five() {
    assert_display(
        &fh::matrix_q(3).unwrap(),
        &[&[3], &[2, 1], &[1, 1, 1]],
        &[&[3], &[2, 1], &[1, 1, 1]],
        z_from_i64(&[&[4, 1, 0], &[6, 4, 3], &[1, 1, 1]]),
    );
    assert_display(
        &fh::matrix_u(3).unwrap(),
        &[&[3], &[2, 1], &[1, 1, 1]],
        &[&[1, 1, 1], &[2, 1], &[3]],
        z_from_i64(&[&[1, -3, 3], &[0, 1, -3], &[0, 0, 1]]),
    );
    assert_display(
        &fh::matrix_l(3).unwrap(),
        &[&[1, 1, 1], &[2, 1], &[3]],
        &[&[1, 1, 1], &[2, 1], &[3]],
        z_from_i64(&[&[1, 0, 0], &[-1, 1, 0], &[2, -3, 1]]),
    );
    assert_display(
        &fh::matrix_m(3).unwrap(),
        &[&[3], &[2, 1], &[1, 1, 1]],
        &[&[1, 1, 1], &[2, 1], &[3]],
        z_from_i64(&[&[10, -12, 3], &[-7, 10, -3], &[2, -3, 1]]),
    );
    assert_display(
        &fh::matrix_m_sub(3, 2).unwrap(),
        &[&[2, 1], &[1, 1, 1]],
        &[&[2, 1], &[3]],
        z_from_i64(&[&[10, -3], &[-3, 1]]),
    );
    assert_display(
        &fh::matrix_n(5).unwrap(),
        &[
            &[5],
            &[4, 1],
            &[3, 2],
            &[3, 1, 1],
            &[2, 2, 1],
            &[2, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ],
        &[
            &[1, 1, 1, 1, 1],
            &[2, 1, 1, 1],
            &[2, 2, 1],
            &[3, 1, 1],
            &[3, 2],
            &[4, 1],
            &[5],
        ],
        z_from_i64(&[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, -4],
            &[0, 0, 3, -2, -12, 3, 0],
            &[0, 0, -1, 1, 0, 0, 4],
            &[0, 0, 0, 0, 10, -3, 2],
            &[0, 0, 0, 0, -3, 1, -4],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    );
}

#[test]
fn coefficients_certify_as_integer_polynomials_to_degree_six() {
    for n in 1..=6 {
        connection::c_table(n).unwrap();
    }
}

#[test]
fn matching_counts_match_evaluations_to_degree_five() {
    for n in 1..=5 {
        matchings::verify_b01(n, None).unwrap();
    }
}

#[test]
fn marginals_nonnegative_and_degree_bounded_to_degree_six() {
    for n in 1..=6 {
        connection::verify_marginal_bounds(n).unwrap();
    }
}

#[test]
fn products_associate_in_all_forms() {
    for n in 1..=4 {
        connection::verify_associativity(n).unwrap();
    }
    for n in 1..=5 {
        connection::verify_marginal_associativity(n).unwrap();
    }
    for n in 1..=4 {
        matchings::verify_comb_multiplicativity(n, None).unwrap();
    }
}

#[test]
fn displayed_matrices_are_unimodular_to_degree_six() {
    let one = BigInt::one();
    let minus_one = BigInt::from(-1);
    for r in 1..=6 {
        let q = det_z(&fh::matrix_q(r).unwrap().entries);
        assert!(q == one || q == minus_one, "Q det at degree {r} is {q}");
        let n = det_z(&fh::matrix_n(r).unwrap().entries);
        assert_eq!(n, one, "N det at degree {r}");
        for i in 1..=r {
            let m = det_z(&fh::matrix_m_sub(r, i).unwrap().entries);
            assert_eq!(m, one, "M block det at degree {r}, index {i}");
        }
        fh::verify_matrices(r).unwrap();
    }
}

#[test]
fn top_coefficients_agree_along_both_routes_to_degree_four() {
    for r in 1..=4 {
        fh::verify_two_path(r).unwrap();
    }
}

#[test]
fn marginals_rebuild_full_tables_to_degree_five() {
    for n in 1..=5 {
        reconstruct::verify_roundtrip(n).unwrap();
    }
}

#[test]
fn jucys_murphy_identities_to_degree_seven() {
    for n in 2..=7 {
        jm::verify_elementary_all(n, None).unwrap();
        for r in 0..=4.min(n - 1) {
            for mu in all_partitions(r) {
                jm::verify_monomial(n, &mu, None).unwrap();
            }
        }
    }
}

#[test]
fn finite_degree_bridge_and_stabilization() {
    for n in 2..=6 {
        fh::verify_bridge(n).unwrap();
    }
    for r in 1..=4 {
        fh::verify_stabilization(r).unwrap();
    }
}

#[test]
fn cumulants_certify_and_rescale_to_degree_five() {
    for n in 1..=5 {
        let parts = all_partitions(n);
        for lambda in &parts {
            for mu in &parts {
                for nu in &parts {
                    let d = connection::cumulant(lambda, mu, nu).unwrap();
                    let oracle = connection::cumulant_oracle(lambda, mu, nu).unwrap();
                    assert_eq!(d.to_unipoly(Var::B), oracle, "[{lambda}|{mu};{nu}]");
                    let h = connection::h_coefficient(lambda, mu, nu).unwrap();
                    if lambda.len() == 1 {
                        // The single-part prefactor n / z_[n] is 1, so the
                        // full value equals the rescaled one and is an
                        // integer polynomial outright.
                        assert_eq!(h.scale_num, h.scale_den);
                    }
                }
            }
        }
        connection::verify_row_sums(n).unwrap();
    }
}

#[test]
fn nonnegativity_scan_reports_to_degree_six() {
    println!("coefficient non-negativity scan (observed only, never asserted):");
    for n in 1..=6 {
        let table = connection::c_table(n).unwrap();
        let count = table.partitions().len();
        let mut total = 0usize;
        let mut negative = Vec::new();
        for li in 0..count {
            for mi in 0..count {
                for ni in 0..count {
                    total += 1;
                    let poly = table.get(li, mi, ni);
                    if poly.coeffs().iter().any(|c| c.is_negative()) {
                        let parts = table.partitions();
                        negative.push(format!(
                            "[{} | {} ; {}] = {}",
                            parts[li], parts[mi], parts[ni], poly
                        ));
                    }
                }
            }
        }
        if negative.is_empty() {
            println!("  n={n}: {total} coefficients, all non-negative");
        } else {
            println!(
                "  n={n}: {} of {total} coefficients have a negative entry:",
                negative.len()
            );
            for witness in negative.iter().take(5) {
                println!("    {witness}");
            }
        }
    }
}

#[test]
fn marginals_stable_under_padding() {
    for m in 1..=4 {
        let parts = all_partitions(m);
        for kappa in &parts {
            for nu in &parts {
                for l in 1..=m {
                    if kappa.rank() != nu.rank() + m - l {
                        continue;
                    }
                    let base = connection::marginal_direct(kappa, nu, l).unwrap();
                    for pad in 1..=2usize {
                        let padded = connection::marginal_direct(
                            &kappa.union(&Partition::ones(pad)),
                            &nu.union(&Partition::ones(pad)),
                            l + pad,
                        )
                        .unwrap();
                        assert_eq!(
                            base, padded,
                            "marginal at [{kappa} | {nu}], l = {l} moved under padding {pad}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn normalized_coefficients_symmetric_in_all_three_indices() {
    for n in 1..=4 {
        let parts = all_partitions(n);
        let normalized = |a: &Partition, b: &Partition, c: &Partition| -> RatFunc {
            let raw = connection::c_raw(a, b, c).unwrap();
            let weight = UniPoly::monomial(
                Var::Alpha,
                BigRational::from(a.z()),
                a.len(),
            );
            raw.div(&RatFunc::from_poly(weight)).unwrap()
        };
        for lambda in &parts {
            for mu in &parts {
                for nu in &parts {
                    let base = normalized(lambda, mu, nu);
                    for (x, y, z) in [
                        (lambda, nu, mu),
                        (mu, lambda, nu),
                        (mu, nu, lambda),
                        (nu, lambda, mu),
                        (nu, mu, lambda),
                    ] {
                        assert_eq!(
                            base,
                            normalized(x, y, z),
                            "normalized value moved under reindexing to [{x} | {y} ; {z}]"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn jack_expansions_orthogonal_with_formula_norms_to_degree_six() {
    for n in 1..=6 {
        let jack = jack_set(n).unwrap();
        let parts = jack.partitions().to_vec();
        let weights: Vec<RatFunc> = parts
            .iter()
            .map(|p| {
                RatFunc::from_poly(UniPoly::monomial(
                    Var::Alpha,
                    BigRational::from(p.z()),
                    p.len(),
                ))
            })
            .collect();
        for a in 0..parts.len() {
            for b in a..parts.len() {
                let mut inner = RatFunc::zero(Var::Alpha);
                for (li, weight) in weights.iter().enumerate() {
                    let term = jack.p_coeff(a, li).mul(jack.p_coeff(b, li)).mul(weight);
                    inner = inner.add(&term);
                }
                if a == b {
                    assert_eq!(
                        inner,
                        RatFunc::from_poly(jack_norm_formula(&parts[a])),
                        "norm of the expansion at {}",
                        parts[a]
                    );
                } else {
                    assert!(
                        inner.is_zero(),
                        "expansions at {} and {} are not orthogonal",
                        parts[a],
                        parts[b]
                    );
                }
            }
        }
        for (ti, theta) in parts.iter().enumerate() {
            for mu in &parts {
                if !dominated_by(mu, theta) {
                    assert!(
                        jack.m_coeff(ti, mu).is_zero(),
                        "expansion at {theta} has support outside dominance at {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn displayed_factorization_holds_to_degree_six() {
    for r in 1..=6 {
        let u = fh::matrix_u(r).unwrap();
        let l = fh::matrix_l(r).unwrap();
        let m = fh::matrix_m(r).unwrap();
        assert_eq!(m.entries, matmul_z(&u.entries, &l.entries));
        let f = fh::fh_tables(r).unwrap();
        let det_f = det_z(&f.f);
        assert!(det_f == BigInt::one() || det_f == BigInt::from(-1));
    }
}
