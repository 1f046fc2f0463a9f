//! Independent brute-force oracles checked against the library.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symtensor::spectra::{bareiss_determinant, eigenvalues_symmetric, trace_formula};
use symtensor::sympower::{ryser_permanent, DEFAULT_PERMANENT_CAP};
use symtensor::{enumerate_multisets, Matrix, Order, Rational};

/// Sum over all `k!` permutations.
fn naive_permanent(b: &Matrix<i64>) -> i64 {
    let k = b.dim();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut total = 0;
    loop {
        total += (0..k).map(|r| b[(r, perm[r])]).product::<i64>();
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return total;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Laplace expansion along the first row.
fn cofactor_determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * cofactor_determinant(&minor)
        })
        .sum()
}

fn random_int_rows(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
        .collect()
}

fn to_rational(rows: &[Vec<i64>]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

#[test]
fn ryser_matches_naive_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 1..=7 {
        for _ in 0..10 {
            let rows = random_int_rows(&mut rng, k);
            let naive = naive_permanent(&Matrix::from_rows(rows.clone()).unwrap());
            let ryser = ryser_permanent(&to_rational(&rows), DEFAULT_PERMANENT_CAP).unwrap();
            assert_eq!(
                ryser,
                BigRational::from_integer(naive.into()),
                "k={k} {rows:?}"
            );
            let float =
                ryser_permanent(&to_rational(&rows).map(symtensor::Weight::to_f64), 20).unwrap();
            assert!((float - naive as f64).abs() < 1e-6);
        }
    }
}

#[test]
fn ryser_respects_cap() {
    let m: Matrix<f64> = Matrix::identity(5);
    assert!(ryser_permanent(&m, 4).is_err());
    assert_eq!(ryser_permanent(&m, 5).unwrap(), 1.0);
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=6 {
        for _ in 0..10 {
            let rows = random_int_rows(&mut rng, n);
            let expected = cofactor_determinant(&rows);
            assert_eq!(
                bareiss_determinant(&to_rational(&rows)),
                BigRational::from_integer(expected.into())
            );
        }
    }
}

#[test]
fn trace_formula_matches_direct_multiset_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let n = 4;
        let mut a = Matrix::filled(n, 0.0);
        for i in 0..n {
            for j in i..n {
                let v: f64 = rng.gen_range(-2.0..2.0);
                a[(i, j)] = v;
                a[(j, i)] = v;
            }
        }
        let spec = eigenvalues_symmetric(&a).unwrap();
        for k in 1..=4 {
            let direct: f64 = enumerate_multisets(n, k, Order::Lex)
                .unwrap()
                .iter()
                .map(|t| {
                    t.entries()
                        .iter()
                        .map(|&i| spec.values()[i - 1])
                        .product::<f64>()
                })
                .sum();
            let h = trace_formula(&spec, k);
            assert!(
                (direct - h).abs() <= 1e-8 * direct.abs().max(1.0),
                "k={k}: {direct} vs {h}"
            );
        }
    }
}
