use num_bigint::BigInt;
use serde::Serialize;

use super::int::int_root_multiplicity;
use super::{sym_eigenvalues, IntMatrix, Result, DEFAULT_JACOBI_TOL};

/// Relative tolerance for merging eigenvalues into one spectrum entry.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    /// Which factor (or method) produced this eigenvalue; several when merged.
    pub provenance: Vec<String>,
}

/// Multiset of real eigenvalues: strictly increasing values with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    total_count: usize,
}

impl Spectrum {
    /// Clusters tagged values greedily after sorting: a value joins the current
    /// cluster when it lies within `tol · max(1, |v|)` of its predecessor. The
    /// cluster's value is the mean of its members.
    pub fn from_tagged(mut values: Vec<(f64, String)>, tol: f64) -> Self {
        values.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut sum = 0.0;
        let mut prev = f64::NAN;
        for (v, tag) in values {
            let joins = !entries.is_empty() && (v - prev).abs() <= tol * prev.abs().max(1.0);
            if joins {
                let e = entries.last_mut().expect("nonempty");
                e.multiplicity += 1;
                sum += v;
                e.value = sum / e.multiplicity as f64;
                if !tag.is_empty() && !e.provenance.contains(&tag) {
                    e.provenance.push(tag);
                }
            } else {
                sum = v;
                entries.push(SpectrumEntry {
                    value: v,
                    multiplicity: 1,
                    provenance: if tag.is_empty() { vec![] } else { vec![tag] },
                });
            }
            prev = v;
        }
        let total_count = entries.iter().map(|e| e.multiplicity).sum();
        Self {
            entries,
            total_count,
        }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total_count(&self) -> usize {
        self.total_count
    }

    pub fn is_empty(&self) -> bool {
        self.total_count == 0
    }

    /// Eigenvalues with multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn sum(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value * e.multiplicity as f64)
            .sum()
    }

    /// Total multiplicity of entries within `tol · max(1, |value|)` of `value`.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() <= tol * value.abs().max(1.0))
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Largest scaled gap `|a_k - b_k| / max(1, |b_k|)` between the sorted
    /// expansions, or `None` when the sizes differ.
    pub fn max_distance(&self, other: &Self) -> Option<f64> {
        if self.total_count != other.total_count {
            return None;
        }
        Some(
            self.expanded()
                .iter()
                .zip(other.expanded())
                .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
                .fold(0.0, f64::max),
        )
    }

    pub fn matches(&self, other: &Self, tol: f64) -> bool {
        self.max_distance(other).is_some_and(|d| d <= tol)
    }
}

/// Groups sorted values into a [`Spectrum`] with no provenance tags.
pub fn cluster_to_spectrum(values: &[f64], tol: f64) -> Spectrum {
    Spectrum::from_tagged(values.iter().map(|&v| (v, String::new())).collect(), tol)
}

/// One distinct eigenvalue of an integer matrix, exact when it is an integer.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvalue {
    pub value: f64,
    pub exact: Option<i64>,
    pub multiplicity: usize,
}

/// Distinct eigenvalues of a symmetric integer matrix, ascending.
///
/// Values come from the Jacobi solver and are clustered; a cluster close to an
/// integer `k` is snapped to `k` when `k` is a root of the exact characteristic
/// polynomial with exactly the cluster's multiplicity. Rational eigenvalues of
/// integer matrices are integers, so every rational eigenvalue ends up exact.
pub fn exact_eigenvalues(m: &IntMatrix) -> Result<Vec<Eigenvalue>> {
    if m.rows() == 0 {
        return Ok(vec![]);
    }
    let numeric = sym_eigenvalues(&m.to_dense(), DEFAULT_JACOBI_TOL)?;
    let spec = cluster_to_spectrum(&numeric, DEFAULT_CLUSTER_TOL);
    let poly = m.char_poly()?;
    Ok(spec
        .entries()
        .iter()
        .map(|e| {
            let k = e.value.round();
            let snapped = ((e.value - k).abs() < 1e-6)
                .then_some(k as i64)
                .filter(|&k| int_root_multiplicity(&poly, &BigInt::from(k)) == e.multiplicity);
            Eigenvalue {
                value: snapped.map_or(e.value, |k| k as f64),
                exact: snapped,
                multiplicity: e.multiplicity,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_merges_close_values() {
        let s = cluster_to_spectrum(&[0.0, 1e-12, 2.0], DEFAULT_CLUSTER_TOL);
        assert_eq!(s.entries().len(), 2);
        assert_eq!(s.entries()[0].multiplicity, 2);
        assert_eq!(s.entries()[1].multiplicity, 1);
        assert_eq!(s.total_count(), 3);
    }

    #[test]
    fn empty_input_gives_empty_spectrum() {
        let s = cluster_to_spectrum(&[], DEFAULT_CLUSTER_TOL);
        assert!(s.is_empty());
        assert!(s.entries().is_empty());
    }

    #[test]
    fn distance_requires_equal_sizes() {
        let a = cluster_to_spectrum(&[0.0, 1.0], DEFAULT_CLUSTER_TOL);
        let b = cluster_to_spectrum(&[0.0], DEFAULT_CLUSTER_TOL);
        assert_eq!(a.max_distance(&b), None);
        let c = cluster_to_spectrum(&[0.0, 1.0 + 1e-10], DEFAULT_CLUSTER_TOL);
        assert!(a.matches(&c, 1e-9));
    }

    #[test]
    fn snapping_to_integer_roots() {
        // A(C4): {2, 0, 0, -2}
        let c4 = IntMatrix::from_rows(&[
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        let e = exact_eigenvalues(&c4).unwrap();
        let got: Vec<_> = e.iter().map(|e| (e.exact, e.multiplicity)).collect();
        assert_eq!(got, vec![(Some(-2), 1), (Some(0), 2), (Some(2), 1)]);
    }
}
