//! The two entry kernels: the literal orbit double sum (the reference
//! definition) and a permanent evaluated with Ryser's formula.
//!
//! Both produce the un-normalized core
//! `S[i][j] = sum over p in Orb(i), q in Orb(j) of prod_l A[p_l][q_l]`;
//! the entry of the symmetric power is `S[i][j] / sqrt(|Orb(i)| |Orb(j)|)`.
//!
//! Relabeling positions jointly shows
//! `S[i][j] = |Orb(i)| * perm(B) / (m(j)_1! ... m(j)_n!)` with
//! `B[l][m] = A[i_l][j_m]`, so the entry equals
//! `perm(B) / sqrt(prod m(i)! * prod m(j)!)`.

use num_rational::BigRational;

use crate::combinatorics::{enumerate_orbit, VertexMultiset};
use crate::error::{Error, Result};
use crate::graph::ExactWeight;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default largest `k` accepted by the permanent kernel.
pub const DEFAULT_PERMANENT_CAP: usize = 20;

/// An entry `core / sqrt(row_norm * col_norm)` of a symmetric power.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerEntry<T> {
    pub core: T,
    pub row_norm: u64,
    pub col_norm: u64,
}

impl<T: Scalar> PowerEntry<T> {
    pub fn value(&self) -> f64 {
        normalize(self.core.to_f64(), self.row_norm, self.col_norm)
    }
}

impl PowerEntry<BigRational> {
    pub fn exact(&self) -> ExactWeight {
        exact_normalize(&self.core, self.row_norm, self.col_norm)
    }
}

pub(crate) fn normalize(core: f64, row_norm: u64, col_norm: u64) -> f64 {
    if row_norm == 1 && col_norm == 1 {
        return core;
    }
    let prod = row_norm as u128 * col_norm as u128;
    core / (prod as f64).sqrt()
}

pub(crate) fn exact_normalize(core: &BigRational, row_norm: u64, col_norm: u64) -> ExactWeight {
    let prod = BigRational::new(1.into(), (row_norm as u128 * col_norm as u128).into());
    ExactWeight::from_rational_sqrt(core.clone(), prod).expect("positive radicand")
}

fn check_pair<T>(a: &Matrix<T>, i: &VertexMultiset, j: &VertexMultiset) -> Result<()> {
    for t in [i, j] {
        if t.n() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                got: t.n(),
            });
        }
    }
    if i.k() != j.k() {
        return Err(Error::DimensionMismatch {
            expected: i.k(),
            got: j.k(),
        });
    }
    Ok(())
}

fn zero_based(orbit: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    orbit
        .into_iter()
        .map(|t| t.into_iter().map(|e| e - 1).collect())
        .collect()
}

pub(crate) fn orbit_of(t: &VertexMultiset) -> Vec<Vec<usize>> {
    zero_based(enumerate_orbit(t))
}

/// Literal double sum over both orbits; costs `|Orb(i)| * |Orb(j)| * k`.
pub(crate) fn orbit_double_sum<T: Scalar>(
    a: &Matrix<T>,
    row_orbit: &[Vec<usize>],
    col_orbit: &[Vec<usize>],
) -> T {
    let mut total = T::zero();
    for p in row_orbit {
        for q in col_orbit {
            let mut prod = Some(T::one());
            for (&pl, &ql) in p.iter().zip(q) {
                let w = &a[(pl, ql)];
                if w.is_zero() {
                    prod = None;
                    break;
                }
                prod = prod.map(|acc| acc * w.clone());
            }
            if let Some(prod) = prod {
                total = total + prod;
            }
        }
    }
    total
}

/// Reference entry of `A^(⊙k)` by direct summation over orbits.
pub fn entry_orbit_sum<T: Scalar>(
    a: &Matrix<T>,
    i: &VertexMultiset,
    j: &VertexMultiset,
) -> Result<PowerEntry<T>> {
    check_pair(a, i, j)?;
    let core = orbit_double_sum(a, &orbit_of(i), &orbit_of(j));
    Ok(PowerEntry {
        core,
        row_norm: i.multiplicity().orbit_size()?,
        col_norm: j.multiplicity().orbit_size()?,
    })
}

/// Permanent of the `k x k` submatrix `A[rows][cols]` (rows/cols may repeat),
/// by Ryser's formula with Gray-code column updates: `O(2^k k)`.
pub(crate) fn ryser_submatrix<T: Scalar>(a: &Matrix<T>, rows: &[usize], cols: &[usize]) -> T {
    let k = rows.len();
    if k == 0 {
        return T::one();
    }
    let mut sums = vec![T::zero(); k];
    let mut total = T::zero();
    for step in 1u64..(1u64 << k) {
        let bit = step.trailing_zeros() as usize;
        let gray = step ^ (step >> 1);
        let col = cols[bit];
        let adding = gray & (1 << bit) != 0;
        for (s, &r) in sums.iter_mut().zip(rows) {
            let w = a[(r, col)].clone();
            *s = if adding { s.clone() + w } else { s.clone() - w };
        }
        let mut prod = T::one();
        for s in &sums {
            if s.is_zero() {
                prod = T::zero();
                break;
            }
            prod = prod * s.clone();
        }
        // sign (-1)^(k - |S|)
        if (gray.count_ones() as usize + k).is_multiple_of(2) {
            total = total + prod;
        } else {
            total = total - prod;
        }
    }
    total
}

pub fn ryser_permanent<T: Scalar>(b: &Matrix<T>, cap: usize) -> Result<T> {
    let k = b.dim();
    if k > cap || k >= 64 {
        return Err(Error::PermanentCap { k, cap });
    }
    let idx: Vec<usize> = (0..k).collect();
    Ok(ryser_submatrix(b, &idx, &idx))
}

/// Entry of `A^(⊙k)` through `perm(A[i|j])`.
pub fn entry_permanent<T: Scalar>(
    a: &Matrix<T>,
    i: &VertexMultiset,
    j: &VertexMultiset,
    cap: usize,
) -> Result<PowerEntry<T>> {
    check_pair(a, i, j)?;
    let k = i.k();
    if k > cap || k >= 64 {
        return Err(Error::PermanentCap { k, cap });
    }
    let (mi, mj) = (i.multiplicity(), j.multiplicity());
    let row_norm = mi.orbit_size()?;
    let col_norm = mj.orbit_size()?;
    let perm = ryser_submatrix(a, &i.indices(), &j.indices());
    let core = permanent_to_core(perm, row_norm, mj.factorial_product()?);
    Ok(PowerEntry {
        core,
        row_norm,
        col_norm,
    })
}

pub(crate) fn permanent_to_core<T: Scalar>(perm: T, row_norm: u64, col_fact: u64) -> T {
    if col_fact == 1 {
        perm * T::from_u64(row_norm)
    } else {
        perm * T::from_u64(row_norm) / T::from_u64(col_fact)
    }
}
