//! Symmetric eigenvalues by cyclic Jacobi rotations, distance Laplacian
//! spectra with multiplicity clusters, interval counts, and the exact
//! spectrum of complete multipartite graphs.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, PartSizes};
use crate::metric::{apsp, distance_laplacian};
use crate::{Error, Result};

/// Sweep cap for [`eig_symmetric`].
pub const MAX_SWEEPS: usize = 50;

/// Numeric tolerances.
///
/// `solver` is the relative off-diagonal threshold of the Jacobi iteration.
/// `interval` snaps eigenvalues onto integer thresholds when counting and
/// clustering; it is deliberately much looser than `solver`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub solver: f64,
    pub interval: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            solver: 1e-9,
            interval: 1e-6,
        }
    }
}

/// Eigenvalues of a symmetric matrix in nonincreasing order.
///
/// Cyclic Jacobi: sweeps over all `(p, q)` pairs, annihilating each
/// off-diagonal entry with a plane rotation, until the off-diagonal
/// Frobenius norm is at most `tol * ||M||_F`.
#[allow(clippy::needless_range_loop)]
pub fn eig_symmetric(m: &[Vec<f64>], tol: f64) -> Result<Vec<f64>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSymmetric(i, row.len()));
        }
        for j in 0..i {
            if row[j] != m[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let frob = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let off_norm = |a: &[Vec<f64>]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p][q] * a[p][q];
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_norm(&a) <= tol * frob {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// A group of numerically equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Nonincreasing eigenvalue list with multiplicity clusters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    clusters: Vec<Cluster>,
}

impl Spectrum {
    /// Sorts `values` nonincreasing and clusters them: a new cluster starts
    /// whenever consecutive values differ by more than `snap * max(1, n)`.
    pub fn from_values(mut values: Vec<f64>, snap: f64) -> Self {
        values.sort_by(|x, y| y.total_cmp(x));
        let gap = snap * (values.len().max(1) as f64);
        let mut clusters = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[i - 1] - values[i] > gap {
                let members = &values[start..i];
                clusters.push(Cluster {
                    value: members.iter().sum::<f64>() / members.len() as f64,
                    multiplicity: members.len(),
                });
                start = i;
            }
        }
        Spectrum { values, clusters }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `i`-th largest eigenvalue, 1-based.
    pub fn eigenvalue(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Spectral radius.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Eigenvalues `v` with `lo - tol <= v <= hi + tol`.
    pub fn count_in_interval(&self, lo: f64, hi: f64, tol: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| v >= lo - tol && v <= hi + tol)
            .count()
    }

    /// Eigenvalues with `v < b - tol`; complements
    /// `count_in_interval(b, largest, tol)`.
    pub fn count_below(&self, b: f64, tol: f64) -> usize {
        self.values.iter().filter(|&&v| v < b - tol).count()
    }

    /// Eigenvalues with `v >= b - tol`.
    pub fn count_at_least(&self, b: f64, tol: f64) -> usize {
        self.values.iter().filter(|&&v| v >= b - tol).count()
    }

    /// Eigenvalues with `|v - x| <= tol`.
    pub fn count_at(&self, x: f64, tol: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| (v - x).abs() <= tol)
            .count()
    }
}

/// Distance Laplacian spectrum of a connected graph.
pub fn spectrum(g: &Graph, tol: Tolerances) -> Result<Spectrum> {
    let dl = distance_laplacian(&apsp(g)?);
    let values = eig_symmetric(&dl.to_f64(), tol.solver)?;
    Ok(Spectrum::from_values(values, tol.interval))
}

/// Exact distance Laplacian spectrum of `K_{l1,...,lk}`: `n + l_j` with
/// multiplicity `l_j - 1` for each part, `n` with multiplicity `k - 1`,
/// and a simple `0`.
pub fn multipartite_spectrum_closed_form(parts: &PartSizes) -> Result<Spectrum> {
    let n = parts.n();
    let k = parts.k();
    if k == 1 && n > 1 {
        return Err(Error::Disconnected(0, 1));
    }
    let mut values = Vec::with_capacity(n);
    for &l in parts.as_slice() {
        values.extend(std::iter::repeat_n((n + l) as f64, l - 1));
    }
    values.extend(std::iter::repeat_n(n as f64, k - 1));
    values.push(0.0);
    Ok(Spectrum::from_values(values, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, gen_named};
    use crate::metric::{apsp, distance_laplacian};
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    /// Number of eigenvalues below `x`, from the inertia of `M - xI`
    /// (count of negative pivots in an unpivoted symmetric elimination).
    /// `None` when a pivot vanishes; callers move `x` and retry.
    #[allow(clippy::needless_range_loop)]
    fn inertia_below(m: &[Vec<f64>], x: f64) -> Option<usize> {
        let n = m.len();
        let mut a: Vec<Vec<f64>> = m.to_vec();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] -= x;
        }
        let mut negatives = 0;
        for k in 0..n {
            let pivot = a[k][k];
            if pivot.abs() < 1e-9 {
                return None;
            }
            if pivot < 0.0 {
                negatives += 1;
            }
            for i in k + 1..n {
                let f = a[i][k] / pivot;
                for j in k + 1..n {
                    a[i][j] -= f * a[k][j];
                }
            }
        }
        Some(negatives)
    }

    /// Inertia count at some point of `(lo, hi)`, avoiding zero pivots.
    fn inertia_in_gap(m: &[Vec<f64>], lo: f64, hi: f64) -> usize {
        [0.5, 0.37, 0.61, 0.29, 0.73]
            .iter()
            .find_map(|t| inertia_below(m, lo + t * (hi - lo)))
            .expect("every probe hit a zero pivot")
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn tiny_matrices() {
        let d = vec![
            vec![3.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ];
        assert_eq!(eig_symmetric(&d, TOL).unwrap(), vec![3.0, 2.0, 1.0]);
        let k2 = vec![vec![1.0, -1.0], vec![-1.0, 1.0]];
        assert_close(&eig_symmetric(&k2, TOL).unwrap(), &[2.0, 0.0], 1e-12);
        let p3 = distance_laplacian(&apsp(&gen_named("path", &[3]).unwrap()).unwrap());
        assert_close(
            &eig_symmetric(&p3.to_f64(), TOL).unwrap(),
            &[5.0, 3.0, 0.0],
            1e-12,
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = vec![vec![1.0, 2.0], vec![2.5, 1.0]];
        assert_eq!(eig_symmetric(&m, TOL), Err(Error::NotSymmetric(1, 0)));
        let m = vec![vec![1.0, 2.0], vec![2.0]];
        assert!(eig_symmetric(&m, TOL).is_err());
    }

    #[test]
    fn zero_matrix_and_empty() {
        assert_eq!(
            eig_symmetric(&[vec![0.0; 3], vec![0.0; 3], vec![0.0; 3]], TOL).unwrap(),
            vec![0.0; 3]
        );
        assert!(eig_symmetric(&[], TOL).unwrap().is_empty());
    }

    #[test]
    fn closed_form_examples() {
        let s = multipartite_spectrum_closed_form(&PartSizes::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(s.values(), &[6.0, 6.0, 4.0, 0.0]);
        let s = multipartite_spectrum_closed_form(&PartSizes::new(vec![4, 4, 2]).unwrap()).unwrap();
        assert_eq!(
            s.values(),
            &[14.0, 14.0, 14.0, 14.0, 14.0, 14.0, 12.0, 10.0, 10.0, 0.0]
        );
        let s = multipartite_spectrum_closed_form(&PartSizes::new(vec![1; 6]).unwrap()).unwrap();
        assert_eq!(s.values(), &[6.0, 6.0, 6.0, 6.0, 6.0, 0.0]);
        assert_eq!(
            s.clusters(),
            &[
                Cluster {
                    value: 6.0,
                    multiplicity: 5
                },
                Cluster {
                    value: 0.0,
                    multiplicity: 1
                }
            ]
        );
        assert!(multipartite_spectrum_closed_form(&PartSizes::new(vec![3]).unwrap()).is_err());
        let single = multipartite_spectrum_closed_form(&PartSizes::new(vec![1]).unwrap()).unwrap();
        assert_eq!(single.values(), &[0.0]);
    }

    #[test]
    fn table_spectra() {
        let tol = Tolerances::default();
        let s = spectrum(&gen_named("K", &[2, 2, 1, 1, 1]).unwrap(), tol).unwrap();
        assert_close(s.values(), &[9.0, 9.0, 7.0, 7.0, 7.0, 7.0, 0.0], 1e-9);
        let s = spectrum(&gen_named("comp_S62", &[]).unwrap(), tol).unwrap();
        let head: Vec<f64> = s.values()[..6]
            .iter()
            .map(|v| (v * 1000.0).round() / 1000.0)
            .collect();
        assert_eq!(head, [16.429, 10.922, 9.0, 9.0, 9.0, 9.0]);
        let s = spectrum(&gen_named("path", &[8]).unwrap(), tol).unwrap();
        let head: Vec<f64> = s.values()[..6]
            .iter()
            .map(|v| (v * 1000.0).round() / 1000.0)
            .collect();
        assert_eq!(head, [38.446, 28.0, 25.016, 22.0, 19.787, 18.0]);
    }

    #[test]
    fn interval_counts() {
        let tol = Tolerances::default();
        let s = spectrum(&gen_named("K", &[4, 4, 2]).unwrap(), tol).unwrap();
        assert_eq!(s.count_in_interval(14.0, s.largest(), tol.interval), 6);
        let s = spectrum(&gen_named("path", &[8]).unwrap(), tol).unwrap();
        assert_eq!(s.count_in_interval(12.0, s.largest(), tol.interval), 7);
        assert_eq!(s.count_below(12.0, tol.interval), 1);
        assert_eq!(s.count_at(0.0, tol.interval), 1);
    }

    #[test]
    fn clustering_uses_scaled_gap() {
        let s = Spectrum::from_values(vec![1.0, 3.0, 3.0 + 1e-7, 0.0], 1e-6);
        assert_eq!(s.values()[0], 3.0 + 1e-7);
        let mults: Vec<usize> = s.clusters().iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, [2, 1, 1]);
        let total: usize = s.clusters().iter().map(|c| c.multiplicity).sum();
        assert_eq!(total, s.len());
    }

    #[test]
    fn closed_form_matches_numeric_for_small_parts() {
        for parts in [
            vec![1, 1],
            vec![2, 1],
            vec![3, 3],
            vec![5, 2, 2, 1],
            vec![4, 4, 4, 4],
        ] {
            let p = PartSizes::new(parts).unwrap();
            let exact = multipartite_spectrum_closed_form(&p).unwrap();
            let numeric = spectrum(&complete_multipartite(&p), Tolerances::default()).unwrap();
            assert_close(numeric.values(), exact.values(), 1e-8 * p.n() as f64);
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<f64>>> {
        (1usize..9).prop_flat_map(|n| {
            prop::collection::vec(-20i32..=20, n * (n + 1) / 2).prop_map(move |upper| {
                let mut m = vec![vec![0.0; n]; n];
                let mut k = 0;
                for i in 0..n {
                    for j in i..n {
                        m[i][j] = upper[k] as f64;
                        m[j][i] = upper[k] as f64;
                        k += 1;
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn jacobi_agrees_with_inertia_oracle(m in symmetric_matrix()) {
            let n = m.len();
            let vals = eig_symmetric(&m, TOL).unwrap();
            let trace: f64 = (0..n).map(|i| m[i][i]).sum();
            let frob2: f64 = m.iter().flatten().map(|x| x * x).sum();
            let scale = frob2.sqrt().max(1.0);
            prop_assert!((vals.iter().sum::<f64>() - trace).abs() <= 1e-9 * scale * n as f64);
            prop_assert!((vals.iter().map(|v| v * v).sum::<f64>() - frob2).abs() <= 1e-8 * scale * scale);
            // probe strictly inside every well separated gap, plus both ends
            let mut gaps = vec![(vals[0] + 0.5, vals[0] + 1.5, n), (vals[n - 1] - 1.5, vals[n - 1] - 0.5, 0)];
            for i in 1..n {
                if vals[i - 1] - vals[i] > 1e-3 {
                    gaps.push((vals[i], vals[i - 1], n - i));
                }
            }
            for (lo, hi, below) in gaps {
                prop_assert_eq!(inertia_in_gap(&m, lo, hi), below, "gap ({}, {})", lo, hi);
            }
        }

        #[test]
        fn interval_split_is_exact(vals in prop::collection::vec(0.0f64..40.0, 1..12), b in 0.0f64..40.0) {
            let s = Spectrum::from_values(vals, 1e-6);
            prop_assert_eq!(s.count_below(b, 1e-6) + s.count_in_interval(b, s.largest(), 1e-6), s.len());
        }
    }
}
