//! Root and span bounds for monic polynomials with all-real roots, from the
//! leading coefficients only.

use serde::Serialize;

use crate::bound::{Bound, Formula, Target};
use crate::error::{Error, Result};
use crate::inequalities::max_quartic_term;
use crate::numeric::{root, samuelson_quartic_constant};

/// Monic polynomial, coefficients from `x^n` down to the constant term.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::DegreeTooSmall {
                degree: coefficients.len().saturating_sub(1),
                min: 1,
            });
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("coefficient"));
        }
        if coefficients[0] != 1.0 {
            return Err(Error::NotMonic(coefficients[0]));
        }
        Ok(Polynomial { coefficients })
    }

    /// `prod (x - r_i)`.
    pub fn from_roots(roots: &[f64]) -> Result<Self> {
        if roots.iter().any(|r| !r.is_finite()) {
            return Err(Error::NonFinite("root"));
        }
        let mut c = vec![1.0];
        for &r in roots {
            c.push(0.0);
            for k in (1..c.len()).rev() {
                c[k] -= r * c[k - 1];
            }
        }
        Self::new(c)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Coefficients of `p(x + s)`, by repeated synthetic division.
    pub fn taylor_shift(&self, s: f64) -> Vec<f64> {
        let mut c = self.coefficients.clone();
        let n = self.degree();
        for i in 0..n {
            for j in 1..=n - i {
                c[j] += s * c[j - 1];
            }
        }
        c
    }
}

/// A polynomial recentered so its roots have mean zero:
/// `x^n + a2 x^{n-2} + a3 x^{n-3} + a4 x^{n-4} + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DepressedForm {
    pub degree: usize,
    /// Mean of the roots; original roots are depressed roots plus `shift`.
    pub shift: f64,
    pub a2: f64,
    pub a3: Option<f64>,
    pub a4: Option<f64>,
    /// Second central moment of the roots, `-2 a2 / n`.
    pub m2: f64,
    /// Fourth central moment of the roots, `2 (a2^2 - 2 a4) / n`.
    pub m4: Option<f64>,
}

impl DepressedForm {
    fn require_a4(&self) -> Result<f64> {
        self.a4.ok_or(Error::DegreeTooSmall {
            degree: self.degree,
            min: 4,
        })
    }

    /// `a2^2 - 2 a4`, half the fourth power sum of the roots.
    fn quartic_sum(&self) -> Result<f64> {
        let a4 = self.require_a4()?;
        Ok((self.a2 * self.a2 - 2.0 * a4).max(0.0))
    }
}

pub fn depress(p: &Polynomial) -> Result<DepressedForm> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let nf = n as f64;
    let shift = -p.coefficients()[1] / nf;
    let c = p.taylor_shift(shift);
    // crude root-magnitude scale for the feasibility tolerances
    let radius = p
        .coefficients()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.abs().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        + shift.abs();
    let r2 = radius * radius;
    let tol2 = 1e-12 * r2.max(1.0);
    let tol4 = 1e-12 * (r2 * r2).max(1.0);
    let a2 = c[2];
    let a3 = c.get(3).copied();
    let a4 = c.get(4).copied();
    let m2 = -2.0 * a2 / nf;
    if m2 < -tol2 {
        return Err(Error::NotRealRootFeasible(format!("second central moment of roots {m2:e} < 0")));
    }
    let m4 = match a4 {
        Some(a4) => {
            let m4 = 2.0 * (a2 * a2 - 2.0 * a4) / nf;
            if m4 < -tol4 {
                return Err(Error::NotRealRootFeasible(format!(
                    "fourth central moment of roots {m4:e} < 0"
                )));
            }
            Some(m4.max(0.0))
        }
        None => None,
    };
    Ok(DepressedForm {
        degree: n,
        shift,
        a2,
        a3,
        a4,
        m2: m2.max(0.0),
        m4,
    })
}

/// Upper bound on the smallest root and lower bound on the largest root,
/// `shift -+ (8 (n^2-3n+3) / (n^3 (n-1)^3) a2^4 / (a2^2 - 2 a4))^{1/4}`.
/// Stated for degree at least 5.
pub fn root_extreme_bounds(d: &DepressedForm) -> Result<(Bound, Bound)> {
    let n = d.degree;
    if n < 5 {
        return Err(Error::DegreeTooSmall { degree: n, min: 5 });
    }
    let q = d.quartic_sum()?;
    if q <= 0.0 {
        return Err(Error::ZeroFourthMoment);
    }
    let nf = n as f64;
    let a2sq = d.a2 * d.a2;
    let k = root(8.0 * samuelson_quartic_constant(n) / (nf * nf * nf) * a2sq * a2sq / q, 4);
    Ok((
        Bound::upper(Target::MinValue, Formula::Pgen3, d.shift - k),
        Bound::lower(Target::MaxValue, Formula::Pgen4, d.shift + k),
    ))
}

/// Lower bounds on the span in fixed order: pgen5, pgen6, pgen7, pgen8 (odd
/// degree only).
///
/// pgen7 needs `a2 (2 a4 - a2^2) >= 0`; a negative operand means the roots
/// are not all real, and the bound is emitted as 0 flagged degenerate.
pub fn span_bounds(d: &DepressedForm) -> Result<Vec<Bound>> {
    let n = d.degree;
    let a4 = d.require_a4()?;
    let nf = n as f64;
    let a2 = d.a2;
    let q = d.quartic_sum()?;
    let a2sq = a2 * a2;
    let span = |f, v| Bound::lower(Target::Span, f, v);

    let mut out = vec![span(Formula::Pgen5, root(8.0 * (q / nf + 6.0 * a2sq / (nf * nf)), 4))];
    let max = max_quartic_term(n)? as f64;
    out.push(span(Formula::Pgen6, root(2.0 * nf * nf * nf * q / max, 4)));
    let operand = a2 * (2.0 * a4 - a2sq);
    let pgen7 = span(Formula::Pgen7, root(243.0 / (nf * nf) * operand, 6));
    out.push(if operand < -1e-12 * (a2sq * a2.abs()).max(1.0) {
        span(Formula::Pgen7, 0.0).degenerate()
    } else {
        pgen7
    });
    if n % 2 == 1 {
        out.push(span(
            Formula::Pgen8,
            root(8.0 * nf / (nf * nf - 1.0) * (q + 6.0 * a2sq / nf), 4),
        ));
    }
    Ok(out)
}
