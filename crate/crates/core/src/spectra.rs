//! Eigenvalues of dense symmetric matrices and the spectral identities of
//! symmetric powers: eigenvalues of `A^(⊙k)` are the products
//! `λ_{i1} ... λ_{ik}` over nondecreasing index tuples, the trace is the
//! complete homogeneous symmetric polynomial `h_k(λ)`, and
//! `det A^(⊙k) = (det A)^C(n+k-1, n)`.

use num_traits::Float;

use crate::combinatorics::{binomial, enumerate_multisets, Order};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;

const MAX_SWEEPS: usize = 100;

fn cast<F: Float>(v: f64) -> F {
    F::from(v).expect("representable constant")
}

/// A sorted multiset of eigenvalues with its comparison tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<F> {
    values: Vec<F>,
    tol: F,
}

impl<F: Float> Spectrum<F> {
    pub fn new(mut values: Vec<F>) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        Self {
            values,
            tol: cast(DEFAULT_TOL),
        }
    }

    pub fn with_tol(mut self, tol: F) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn tol(&self) -> F {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> F {
        self.values.iter().fold(F::zero(), |a, &b| a + b)
    }

    /// Sort-and-zip comparison at the looser of the two tolerances.
    pub fn matches(&self, other: &Self) -> bool {
        spectra_match_at(self, other, self.tol.max(other.tol))
    }
}

pub fn spectra_match<F: Float>(a: &Spectrum<F>, b: &Spectrum<F>) -> bool {
    a.matches(b)
}

/// True iff equal length and `|a_i - b_i| <= tol * max(1, |a_i|, |b_i|)`.
pub fn spectra_match_at<F: Float>(a: &Spectrum<F>, b: &Spectrum<F>, tol: F) -> bool {
    a.len() == b.len()
        && a.values.iter().zip(&b.values).all(|(&x, &y)| {
            let scale = F::one().max(x.abs()).max(y.abs());
            (x - y).abs() <= tol * scale
        })
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm falls below
/// `max(1e-12, 4 eps) * ||M||_F`, for at most 100 sweeps.
pub fn eigenvalues_symmetric<F: Float>(m: &Matrix<F>) -> Result<Spectrum<F>> {
    let n = m.dim();
    let sym_tol = cast::<F>(1e-12).max(F::epsilon());
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (m[(i, j)], m[(j, i)]);
            let within = (x - y).abs() <= sym_tol * F::one().max(x.abs());
            if !within {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a = m.clone();
    let frob = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .fold(F::zero(), |acc, (i, j)| acc + m[(i, j)] * m[(i, j)])
        .sqrt();
    let threshold = cast::<F>(1e-12).max(cast::<F>(4.0) * F::epsilon()) * frob;
    let off_norm = |a: &Matrix<F>| {
        let mut s = F::zero();
        for i in 0..n {
            for j in i + 1..n {
                s = s + a[(i, j)] * a[(i, j)];
            }
        }
        (s + s).sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged {
        let off = off_norm(&a);
        if off > threshold {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(Spectrum::new((0..n).map(|i| a[(i, i)]).collect()))
}

fn rotate<F: Float>(a: &mut Matrix<F>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == F::zero() {
        return;
    }
    let n = a.dim();
    let two = cast::<F>(2.0);
    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
    let t = {
        let denom = theta.abs() + (theta * theta + F::one()).sqrt();
        let t = F::one() / denom;
        if theta < F::zero() {
            -t
        } else {
            t
        }
    };
    let c = F::one() / (t * t + F::one()).sqrt();
    let s = t * c;
    for r in 0..n {
        let (arp, arq) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = c * arp - s * arq;
        a[(r, q)] = s * arp + c * arq;
    }
    for r in 0..n {
        let (apr, aqr) = (a[(p, r)], a[(q, r)]);
        a[(p, r)] = c * apr - s * aqr;
        a[(q, r)] = s * apr + c * aqr;
    }
    a[(p, q)] = F::zero();
    a[(q, p)] = F::zero();
}

/// Products of eigenvalues over all nondecreasing k-tuples of indices.
pub fn predicted_power_spectrum<F: Float>(spec: &Spectrum<F>, k: usize) -> Result<Spectrum<F>> {
    let n = spec.len();
    let tuples = enumerate_multisets(n, k, Order::Lex)?;
    let values = tuples
        .iter()
        .map(|t| {
            t.entries()
                .iter()
                .fold(F::one(), |acc, &i| acc * spec.values[i - 1])
        })
        .collect();
    Ok(Spectrum::new(values).with_tol(spec.tol))
}

/// `h_k(λ)` via `h_k = (1/k) sum_{j=1..k} p_j h_{k-j}` with power sums `p_j`.
pub fn trace_formula<F: Float>(spec: &Spectrum<F>, k: usize) -> F {
    let power_sums: Vec<F> = (0..=k)
        .map(|j| {
            spec.values
                .iter()
                .fold(F::zero(), |acc, &l| acc + l.powi(j as i32))
        })
        .collect();
    let mut h = vec![F::one()];
    for m in 1..=k {
        let mut s = F::zero();
        for j in 1..=m {
            s = s + power_sums[j] * h[m - j];
        }
        h.push(s / cast(m as f64));
    }
    h[k]
}

/// A real number as sign and natural log of its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    /// -1, 0 or 1.
    pub sign: i8,
    /// `ln |x|`; negative infinity when `sign == 0`.
    pub log_abs: f64,
}

impl SignedLog {
    pub fn from_value(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            Self {
                sign: if x < 0.0 { -1 } else { 1 },
                log_abs: x.abs().ln(),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            sign: 0,
            log_abs: f64::NEG_INFINITY,
        }
    }

    pub fn value(&self) -> f64 {
        self.sign as f64 * self.log_abs.exp()
    }

    /// Same sign and magnitudes within relative error `rel`.
    pub fn approx_eq(&self, other: &Self, rel: f64) -> bool {
        self.sign == other.sign && (self.sign == 0 || (self.log_abs - other.log_abs).abs() <= rel)
    }
}

/// `(det A)^C(n+k-1, n)` in sign/log form.
pub fn det_formula(det_a: f64, n: usize, k: usize) -> Result<SignedLog> {
    let exponent = binomial((n + k - 1) as u64, n as u64).ok_or(Error::CountOverflow { n, k })?;
    let base = SignedLog::from_value(det_a);
    if base.sign == 0 {
        return Ok(base);
    }
    Ok(SignedLog {
        sign: if base.sign < 0 && exponent % 2 == 1 {
            -1
        } else {
            1
        },
        log_abs: base.log_abs * exponent as f64,
    })
}

/// Determinant by LU with partial pivoting, returned as sign/log.
pub fn log_determinant<F: Float>(m: &Matrix<F>) -> SignedLog {
    let n = m.dim();
    let mut a = m.clone();
    let mut sign = 1i8;
    let mut log_abs = 0.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| {
                a[(x, col)]
                    .abs()
                    .partial_cmp(&a[(y, col)].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty range");
        if a[(pivot, col)] == F::zero() {
            return SignedLog::zero();
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            sign = -sign;
        }
        let d = a[(col, col)];
        if d < F::zero() {
            sign = -sign;
        }
        log_abs += d.abs().to_f64().unwrap_or(f64::NAN).ln();
        for r in col + 1..n {
            let f = a[(r, col)] / d;
            for j in col..n {
                a[(r, j)] = a[(r, j)] - f * a[(col, j)];
            }
        }
    }
    SignedLog { sign, log_abs }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return T::zero();
            };
            for j in 0..n {
                let tmp = a[(k, j)].clone();
                a[(k, j)] = a[(swap, j)].clone();
                a[(swap, j)] = tmp;
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v =
                    a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn m(rows: Vec<Vec<f64>>) -> Matrix<f64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn golden_ratio_pair() {
        let s = eigenvalues_symmetric(&m(vec![vec![1.0, 1.0], vec![1.0, 0.0]])).unwrap();
        let r5 = 5f64.sqrt();
        assert!((s.values()[0] - (1.0 - r5) / 2.0).abs() < 1e-12);
        assert!((s.values()[1] - (1.0 + r5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let s = eigenvalues_symmetric(&m(vec![
            vec![3.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ]))
        .unwrap();
        assert_eq!(s.values(), &[-1.0, 2.0, 3.0]);
    }

    #[test]
    fn f32_works_too() {
        let a = Matrix::from_rows(vec![vec![2.0f32, 1.0], vec![1.0, 2.0]]).unwrap();
        let s = eigenvalues_symmetric(&a).unwrap();
        assert!((s.values()[0] - 1.0).abs() < 1e-6);
        assert!((s.values()[1] - 3.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_nonsymmetric() {
        let err = eigenvalues_symmetric(&m(vec![vec![0.0, 1.0], vec![0.0, 0.0]])).unwrap_err();
        assert_eq!(err, Error::NotSymmetric { row: 0, col: 1 });
    }

    #[test]
    fn eigenvalue_sum_is_trace() {
        let a = m(vec![
            vec![4.0, 1.0, -2.0, 0.5],
            vec![1.0, 0.0, 3.0, 1.0],
            vec![-2.0, 3.0, -1.0, 2.0],
            vec![0.5, 1.0, 2.0, 1.0],
        ]);
        let s = eigenvalues_symmetric(&a).unwrap();
        assert!((s.sum() - a.trace()).abs() < 1e-10);
    }

    #[test]
    fn matching_rules() {
        let a = Spectrum::new(vec![1.0, 2.0]);
        assert!(a.matches(&a.clone()));
        assert!(Spectrum::new(vec![0.0]).matches(&Spectrum::new(vec![1e-15])));
        assert!(!a.matches(&Spectrum::new(vec![1.0])));
        assert!(!a.matches(&Spectrum::new(vec![1.0, 2.1])));
        // order of construction does not matter
        assert!(Spectrum::new(vec![2.0, 1.0]).matches(&a));
    }

    #[test]
    fn predicted_spectrum_k1_is_identity() {
        let s = Spectrum::new(vec![-1.5, 0.25, 3.0]);
        assert_eq!(predicted_power_spectrum(&s, 1).unwrap(), s);
    }

    #[test]
    fn trace_formula_small() {
        let s = Spectrum::new(vec![1.0, -1.0]);
        assert!((trace_formula(&s, 2) - 1.0).abs() < 1e-15);
        assert_eq!(trace_formula(&s, 0), 1.0);
    }

    #[test]
    fn det_formula_signs() {
        assert_eq!(det_formula(1.0, 3, 4).unwrap().value(), 1.0);
        let d = det_formula(-1.0, 2, 2).unwrap();
        assert_eq!(d.sign, -1);
        assert_eq!(det_formula(0.0, 2, 2).unwrap().sign, 0);
        // exponent C(4, 2) = 6 is even
        assert_eq!(det_formula(-2.0, 2, 3).unwrap().sign, 1);
    }

    #[test]
    fn determinants_agree() {
        let a = m(vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 3.0, 1.0],
            vec![0.0, 1.0, -4.0],
        ]);
        let lu = log_determinant(&a);
        let q = a.map(|&x| <BigRational as Scalar>::from_f64(x).unwrap());
        let exact = bareiss_determinant(&q);
        assert_eq!(exact, BigRational::from_integer((-22).into()));
        assert!(lu.approx_eq(&SignedLog::from_value(-22.0), 1e-12));
        let singular = m(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        let q = singular.map(|&x| <BigRational as Scalar>::from_f64(x).unwrap());
        assert_eq!(bareiss_determinant(&q), BigRational::from_integer(0.into()));
    }
}
