#![allow(dead_code)]

use moment_bounds::trace::{DensityFunctional, SquareMatrix};
use num_complex::Complex64;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = Ratio<i128>;

pub fn q(n: i128, d: i128) -> Q {
    Ratio::new(n, d)
}

pub fn qi(n: i128) -> Q {
    Ratio::from_integer(n)
}

pub fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Exact `(mean, mu2, mu3, mu4)` by direct summation.
pub fn exact_moments(values: &[Q], weights: &[Q]) -> [Q; 4] {
    let mean: Q = values.iter().zip(weights).map(|(x, p)| x * p).sum();
    let mut mu = [qi(0); 3];
    for (x, p) in values.iter().zip(weights) {
        let d = x - mean;
        mu[0] += p * d * d;
        mu[1] += p * d * d * d;
        mu[2] += p * d * d * d * d;
    }
    [mean, mu[0], mu[1], mu[2]]
}

/// `(mean, mu2, mu3, mu4)` by naive floating point summation, for weights
/// that are not rational.
pub fn float_moments(values: &[f64], weights: &[f64]) -> [f64; 4] {
    let mean: f64 = values.iter().zip(weights).map(|(x, p)| x * p).sum();
    let mut mu = [0.0; 3];
    for (x, p) in values.iter().zip(weights) {
        let d = x - mean;
        mu[0] += p * d.powi(2);
        mu[1] += p * d.powi(3);
        mu[2] += p * d.powi(4);
    }
    [mean, mu[0], mu[1], mu[2]]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Random Hermitian matrix of order `n`, cycling through dense complex,
/// real symmetric, integer and repeated-eigenvalue constructions.
pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> SquareMatrix {
    match rng.gen_range(0..4) {
        0 => dense_hermitian(rng, n, true),
        1 => dense_hermitian(rng, n, false),
        2 => {
            let mut m = vec![Complex64::new(0.0, 0.0); n * n];
            for i in 0..n {
                for j in i..n {
                    let v = rng.gen_range(-5..=5) as f64;
                    m[i * n + j] = Complex64::new(v, 0.0);
                    m[j * n + i] = Complex64::new(v, 0.0);
                }
            }
            SquareMatrix::new(n, m).unwrap()
        }
        _ => {
            let levels = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
            let spectrum: Vec<f64> = (0..n).map(|_| levels[rng.gen_range(0..2)]).collect();
            with_spectrum(rng, &spectrum)
        }
    }
}

fn dense_hermitian(rng: &mut impl Rng, n: usize, complex: bool) -> SquareMatrix {
    let scale = 10f64.powf(rng.gen_range(-1.0..2.0));
    let shift = rng.gen_range(-20.0..20.0);
    let mut m = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        m[i * n + i] = Complex64::new(shift + scale * rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let im = if complex { rng.gen_range(-1.0..1.0) } else { 0.0 };
            let z = Complex64::new(rng.gen_range(-1.0..1.0), im) * scale;
            m[i * n + j] = z;
            m[j * n + i] = z.conj();
        }
    }
    SquareMatrix::new(n, m).unwrap()
}

/// `H diag(spectrum) H` for a random Householder reflection `H`.
pub fn with_spectrum(rng: &mut impl Rng, spectrum: &[f64]) -> SquareMatrix {
    let n = spectrum.len();
    let v: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let h: Vec<Complex64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            let id = if i == j { 1.0 } else { 0.0 };
            Complex64::new(id, 0.0) - v[i] * v[j].conj() * (2.0 / norm)
        })
        .collect();
    let h = SquareMatrix::new(n, h).unwrap();
    let d = SquareMatrix::diagonal(spectrum).unwrap();
    h.mul(&d).unwrap().mul(&h).unwrap()
}

/// `W = G G* / tr(G G*)` for a random complex `G` of random rank.
pub fn random_density(rng: &mut impl Rng, n: usize) -> DensityFunctional {
    let rank = rng.gen_range(1..=n);
    let g: Vec<Complex64> = (0..n * rank)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mut w = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            w[i * n + j] = (0..rank).map(|k| g[i * rank + k] * g[j * rank + k].conj()).sum();
        }
    }
    let tr: f64 = (0..n).map(|i| w[i * n + i].re).sum();
    for z in w.iter_mut() {
        *z /= tr;
    }
    // exact Hermitian symmetry despite rounding
    for i in 0..n {
        w[i * n + i].im = 0.0;
        for j in i + 1..n {
            w[j * n + i] = w[i * n + j].conj();
        }
    }
    DensityFunctional::new(SquareMatrix::new(n, w).unwrap()).unwrap()
}
