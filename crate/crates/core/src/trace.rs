//! Trace statistics of square complex matrices, positive unital functionals
//! and a Jacobi eigenvalue oracle used for verification.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Relative tolerance for Hermitian checks, scaled by the largest entry.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Relative tolerance for discarding imaginary parts of traces.
pub const IMAG_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    /// Row-major entries.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("matrix order must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::Shape(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entry"));
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Shape(format!("row of length {} in a {n}x{n} matrix", row.len())));
        }
        let entries = rows.iter().flatten().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(n, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        SquareMatrix { n, entries }
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = Complex64::new(d, 0.0);
        }
        Self::new(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut Complex64 {
        &mut self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self - c I`.
    pub fn shifted(&self, c: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.at(i, i).re -= c;
        }
        out
    }

    pub fn scaled(&self, a: f64) -> Self {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(|z| z * a).collect(),
        }
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<Self> {
        self.same_order(other)?;
        let n = self.n;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &SquareMatrix) -> Result<Complex64> {
        self.same_order(other)?;
        let n = self.n;
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                sum += self.get(i, j) * other.get(j, i);
            }
        }
        Ok(sum)
    }

    fn same_order(&self, other: &SquareMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Shape(format!("order {} does not match order {}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |a_ij - conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.n;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_deviation() <= HERMITIAN_TOL * self.max_abs()
    }

    /// `(M + M*) / 2`, exactly Hermitian.
    fn hermitian_part(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            out.at(i, i).im = 0.0;
            for j in i + 1..n {
                let z = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                *out.at(i, j) = z;
                *out.at(j, i) = z.conj();
            }
        }
        out
    }

    fn require_hermitian(&self) -> Result<()> {
        let deviation = self.hermitian_deviation();
        if deviation > HERMITIAN_TOL * self.max_abs() {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(())
    }
}

/// `n`, `tr A` and `tr B^k` for `k = 2, 3, 4`, where `B = A - (tr A / n) I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CenteredTraces {
    pub n: usize,
    #[serde(rename = "trA")]
    pub tr_a: f64,
    #[serde(rename = "trB2")]
    pub tr_b2: f64,
    #[serde(rename = "trB3")]
    pub tr_b3: f64,
    #[serde(rename = "trB4")]
    pub tr_b4: f64,
}

impl CenteredTraces {
    pub fn mean(&self) -> f64 {
        self.tr_a / self.n as f64
    }

    /// Second central moment of the eigenvalues, `tr B^2 / n`.
    pub fn m2(&self) -> f64 {
        self.tr_b2 / self.n as f64
    }

    pub fn m3(&self) -> f64 {
        self.tr_b3 / self.n as f64
    }

    pub fn m4(&self) -> f64 {
        self.tr_b4 / self.n as f64
    }
}

fn real_part(z: Complex64, power: u32, scale: f64) -> Result<f64> {
    if z.im.abs() > IMAG_TOL * scale {
        return Err(Error::NonNegligibleImaginaryTrace { power, imag: z.im });
    }
    Ok(z.re)
}

/// Traces of `B^2`, `B^3`, `B^4` from two matrix products.
///
/// Bounds built on these values assume the spectrum of `A` is real. That is
/// guaranteed for Hermitian input and otherwise left to the caller.
pub fn centered_traces(a: &SquareMatrix) -> Result<CenteredTraces> {
    let n = a.order();
    let tr_a = real_part(a.trace(), 1, a.frobenius() * (n as f64).sqrt())?;
    let mut b = a.shifted(tr_a / n as f64);
    if a.is_hermitian() {
        // rounding asymmetry would otherwise dominate when B is tiny
        b = b.hermitian_part();
    }
    let b2 = b.mul(&b)?;
    let f = b.frobenius();
    let f2 = f * f;
    Ok(CenteredTraces {
        n,
        tr_a,
        tr_b2: real_part(b2.trace(), 2, f2)?,
        tr_b3: real_part(b2.trace_of_product(&b)?, 3, f2 * f)?,
        tr_b4: real_part(b2.trace_of_product(&b2)?, 4, f2 * f2)?,
    })
}

/// Trace statistics from a known spectrum.
pub fn spectrum_to_traces(eigenvalues: &[f64]) -> Result<CenteredTraces> {
    if eigenvalues.is_empty() {
        return Err(Error::Shape("spectrum must be nonempty".into()));
    }
    if eigenvalues.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("eigenvalue"));
    }
    let n = eigenvalues.len();
    let tr_a: f64 = eigenvalues.iter().sum();
    let mean = tr_a / n as f64;
    let (mut s2, mut s3, mut s4) = (0.0, 0.0, 0.0);
    for &x in eigenvalues {
        let d = x - mean;
        let d2 = d * d;
        s2 += d2;
        s3 += d2 * d;
        s4 += d2 * d2;
    }
    Ok(CenteredTraces {
        n,
        tr_a,
        tr_b2: s2,
        tr_b3: s3,
        tr_b4: s4,
    })
}

/// The functional `phi(A) = tr(W A)` for a density matrix `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityFunctional {
    weight: SquareMatrix,
}

impl DensityFunctional {
    pub fn new(weight: SquareMatrix) -> Result<Self> {
        let deviation = weight.hermitian_deviation();
        if deviation > HERMITIAN_TOL * weight.max_abs().max(1.0) {
            return Err(Error::InvalidFunctional(format!(
                "weight is not Hermitian (deviation {deviation:e})"
            )));
        }
        let tr = weight.trace();
        if (tr.re - 1.0).abs() > HERMITIAN_TOL || tr.im.abs() > HERMITIAN_TOL {
            return Err(Error::InvalidFunctional(format!("weight has trace {tr}, expected 1")));
        }
        let min = eigen_oracle(&weight)?[0];
        if min < -HERMITIAN_TOL {
            return Err(Error::InvalidFunctional(format!(
                "weight is not positive semidefinite (eigenvalue {min:e})"
            )));
        }
        Ok(DensityFunctional { weight })
    }

    /// `W = I / n`, the normalized trace.
    pub fn normalized_trace(n: usize) -> Self {
        DensityFunctional {
            weight: SquareMatrix::identity(n).scaled(1.0 / n as f64),
        }
    }

    /// `W = diag(p)`.
    pub fn diagonal(p: &[f64]) -> Result<Self> {
        Self::new(SquareMatrix::diagonal(p)?)
    }

    /// The vector state `W = v v* / |v|^2`.
    pub fn vector_state(v: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr <= 0.0 || !norm_sqr.is_finite() {
            return Err(Error::InvalidFunctional("state vector must be nonzero".into()));
        }
        let n = v.len();
        let entries = (0..n * n)
            .map(|k| v[k / n] * v[k % n].conj() / norm_sqr)
            .collect();
        Self::new(SquareMatrix::new(n, entries)?)
    }

    pub fn weight(&self) -> &SquareMatrix {
        &self.weight
    }

    pub fn order(&self) -> usize {
        self.weight.order()
    }

    pub fn apply(&self, a: &SquareMatrix) -> Result<Complex64> {
        self.weight.trace_of_product(a)
    }
}

/// `phi(A)` and `phi(B^k)` for `B = A - phi(A) I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionalMoments {
    #[serde(rename = "phiA")]
    pub phi_a: f64,
    #[serde(rename = "phiB2")]
    pub phi_b2: f64,
    #[serde(rename = "phiB3")]
    pub phi_b3: f64,
    #[serde(rename = "phiB4")]
    pub phi_b4: f64,
}

pub fn functional_moments(a: &SquareMatrix, phi: &DensityFunctional) -> Result<FunctionalMoments> {
    if a.order() != phi.order() {
        return Err(Error::Shape(format!(
            "matrix of order {} with functional of order {}",
            a.order(),
            phi.order()
        )));
    }
    a.require_hermitian()?;
    // phi of a Hermitian matrix is real; imaginary parts are rounding only
    let phi_a = phi.apply(a)?.re;
    let b = a.shifted(phi_a);
    let b2 = b.mul(&b)?;
    Ok(FunctionalMoments {
        phi_a,
        phi_b2: phi.apply(&b2)?.re,
        phi_b3: phi.weight.trace_of_product(&b2.mul(&b)?)?.re,
        phi_b4: phi.weight.trace_of_product(&b2.mul(&b2)?)?.re,
    })
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted ascending.
pub fn eigen_oracle(a: &SquareMatrix) -> Result<Vec<f64>> {
    a.require_hermitian()?;
    let n = a.order();
    let mut m = a.clone();
    let target = 1e-12 * a.frobenius();
    let off = |m: &SquareMatrix| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m.get(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&m) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, p, q);
            }
        }
        sweeps += 1;
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| m.get(i, i).re).collect();
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

/// Annihilates `a_pq` with a phase change on index `q` followed by a real
/// plane rotation.
fn rotate(m: &mut SquareMatrix, p: usize, q: usize) {
    let n = m.order();
    let apq = m.get(p, q);
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    for k in 0..n {
        *m.at(k, q) *= phase.conj();
    }
    for k in 0..n {
        *m.at(q, k) *= phase;
    }
    let (app, aqq) = (m.get(p, p).re, m.get(q, q).re);
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    for k in 0..n {
        let (kp, kq) = (m.get(k, p), m.get(k, q));
        *m.at(k, p) = kp * c - kq * s;
        *m.at(k, q) = kp * s + kq * c;
    }
    for k in 0..n {
        let (pk, qk) = (m.get(p, k), m.get(q, k));
        *m.at(p, k) = pk * c - qk * s;
        *m.at(q, k) = pk * s + qk * c;
    }
    *m.at(p, q) = Complex64::new(0.0, 0.0);
    *m.at(q, p) = Complex64::new(0.0, 0.0);
    m.at(p, p).im = 0.0;
    m.at(q, q).im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn a1() -> SquareMatrix {
        SquareMatrix::from_real_rows(&[
            vec![4.0, 0.0, 2.0, 3.0],
            vec![0.0, 5.0, 0.0, 1.0],
            vec![2.0, 0.0, 6.0, 0.0],
            vec![3.0, 1.0, 0.0, 7.0],
        ])
        .unwrap()
    }

    fn a2() -> SquareMatrix {
        SquareMatrix::from_real_rows(&[
            vec![1.0, 1.0, 0.0, 2.0],
            vec![0.0, 4.0, 0.0, 0.0],
            vec![0.0, 3.0, 1.0, 1.0],
            vec![2.0, 1.0, 2.0, 4.0],
        ])
        .unwrap()
    }

    #[test]
    fn traces_of_a1() {
        let t = centered_traces(&a1()).unwrap();
        assert_eq!(t.n, 4);
        assert_eq!(t.tr_a, 22.0);
        assert!((t.tr_b2 - 33.0).abs() < 1e-12);
        assert!((t.tr_b4 - 502.25).abs() < 1e-10);
    }

    #[test]
    fn trivial_traces() {
        let t = centered_traces(&SquareMatrix::identity(3)).unwrap();
        assert_eq!((t.tr_b2, t.tr_b3, t.tr_b4), (0.0, 0.0, 0.0));
        let t = centered_traces(&SquareMatrix::diagonal(&[0.0, 1.0]).unwrap()).unwrap();
        assert_eq!((t.tr_a, t.tr_b2, t.tr_b3, t.tr_b4), (1.0, 0.5, 0.0, 0.125));
    }

    #[test]
    fn non_hermitian_with_real_spectrum() {
        let t = centered_traces(&a2()).unwrap();
        let s = 33f64.sqrt() / 2.0;
        let known = spectrum_to_traces(&[1.0, 4.0, 2.5 - s, 2.5 + s]).unwrap();
        assert!((known.tr_b2 - 21.0).abs() < 1e-12);
        assert!((known.tr_b4 - 146.25).abs() < 1e-10);
        assert!((t.tr_b2 - known.tr_b2).abs() < 1e-12);
        assert!((t.tr_b3 - known.tr_b3).abs() < 1e-10);
        assert!((t.tr_b4 - known.tr_b4).abs() < 1e-10);
        assert!(matches!(eigen_oracle(&a2()), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn imaginary_trace_is_rejected() {
        let a = SquareMatrix::new(2, vec![c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(
            centered_traces(&a),
            Err(Error::NonNegligibleImaginaryTrace { power: 1, .. })
        ));
    }

    #[test]
    fn spectra() {
        let a3 = [-1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0];
        let t = spectrum_to_traces(&a3).unwrap();
        assert_eq!((t.n, t.tr_a, t.tr_b2, t.tr_b3, t.tr_b4), (9, 0.0, 4.0, 0.0, 4.0));
        let t = spectrum_to_traces(&[2.5; 6]).unwrap();
        assert_eq!((t.tr_b2, t.tr_b4), (0.0, 0.0));
        assert!(spectrum_to_traces(&[]).is_err());
    }

    #[test]
    fn oracle_small_cases() {
        let d = SquareMatrix::diagonal(&[3.0, 1.0, 2.0]).unwrap();
        assert_eq!(eigen_oracle(&d).unwrap(), [1.0, 2.0, 3.0]);
        let h = SquareMatrix::new(2, vec![c(2.0, 0.0), c(1.0, -1.0), c(1.0, 1.0), c(3.0, 0.0)]).unwrap();
        let e = eigen_oracle(&h).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-12 && (e[1] - 4.0).abs() < 1e-12, "{e:?}");
    }

    #[test]
    fn oracle_agrees_with_traces_on_a1() {
        let e = eigen_oracle(&a1()).unwrap();
        assert!(e[0] <= 3.7414);
        let from_spectrum = spectrum_to_traces(&e).unwrap();
        let direct = centered_traces(&a1()).unwrap();
        assert!((from_spectrum.tr_b2 - direct.tr_b2).abs() < 1e-9);
        assert!((from_spectrum.tr_b4 - direct.tr_b4).abs() < 1e-8);
    }

    #[test]
    fn functional_examples() {
        let phi = DensityFunctional::normalized_trace(4);
        let f = functional_moments(&a1(), &phi).unwrap();
        assert!((f.phi_b2 - 8.25).abs() < 1e-12);
        assert!((f.phi_b4 - 125.5625).abs() < 1e-10);

        let d = SquareMatrix::diagonal(&[0.0, 1.0]).unwrap();
        let f = functional_moments(&d, &DensityFunctional::diagonal(&[0.5, 0.5]).unwrap()).unwrap();
        assert_eq!((f.phi_a, f.phi_b2, f.phi_b4), (0.5, 0.25, 0.0625));

        let state = DensityFunctional::vector_state(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let f = functional_moments(&d, &state).unwrap();
        assert_eq!((f.phi_a, f.phi_b2), (0.0, 0.0));
    }

    #[test]
    fn functional_validation() {
        assert!(matches!(
            DensityFunctional::diagonal(&[0.5, 0.6]),
            Err(Error::InvalidFunctional(_))
        ));
        assert!(matches!(
            DensityFunctional::diagonal(&[1.5, -0.5]),
            Err(Error::InvalidFunctional(_))
        ));
        let skew = SquareMatrix::new(2, vec![c(0.5, 0.0), c(0.1, 0.0), c(0.0, 0.0), c(0.5, 0.0)]).unwrap();
        assert!(matches!(DensityFunctional::new(skew), Err(Error::InvalidFunctional(_))));
        let phi = DensityFunctional::normalized_trace(3);
        assert!(matches!(functional_moments(&a1(), &phi), Err(Error::Shape(_))));
        assert!(matches!(
            functional_moments(&a2(), &DensityFunctional::normalized_trace(4)),
            Err(Error::NotHermitian { .. })
        ));
    }
}
