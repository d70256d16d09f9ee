//! Reports produced by the command-line front end, and their text and JSON
//! renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bound::{Bound, Formula, Target};
use crate::error::Error;
use crate::fixtures::{Fixture, FixtureKind};
use crate::inequalities::run_suite;
use crate::io::{self, InputError, MatrixInput, PolyInput};
use crate::poly::{depress, root_extreme_bounds, span_bounds};
use crate::sample::{validate_support, SupportInterval, WeightedSample};
use crate::spectral::{erratum_note, functional_spread_bounds, spectral_report};
use crate::trace::{
    centered_traces, eigen_oracle, functional_moments, spectrum_to_traces, DensityFunctional,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Sample,
    Matrix,
    Spectrum,
    Polynomial,
    Functional,
}

impl Subject {
    fn name(self) -> &'static str {
        match self {
            Subject::Sample => "sample",
            Subject::Matrix => "matrix",
            Subject::Spectrum => "spectrum",
            Subject::Polynomial => "polynomial",
            Subject::Functional => "functional",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quantity {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub subject: Subject,
    pub source: Option<String>,
    pub inputs_echo: Value,
    pub quantities: Vec<Quantity>,
    pub bounds: Vec<Bound>,
    pub diagnostics: Vec<String>,
    pub erratum_flags: Vec<String>,
}

impl Report {
    fn new(subject: Subject, inputs_echo: Value) -> Self {
        Report {
            subject,
            source: None,
            inputs_echo,
            quantities: Vec::new(),
            bounds: Vec::new(),
            diagnostics: Vec::new(),
            erratum_flags: Vec::new(),
        }
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    fn quantity(&mut self, name: &'static str, value: f64) {
        self.quantities.push(Quantity { name, value });
    }

    pub fn violations(&self) -> impl Iterator<Item = &Bound> {
        self.bounds.iter().filter(|b| b.holds() == Some(false))
    }

    pub fn bound(&self, formula: Formula) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.formula == formula)
    }

    /// 0 when no checked bound is violated, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.violations().next().is_some() {
            2
        } else {
            0
        }
    }
}

pub fn sample_report(
    sample: &WeightedSample,
    interval: Option<SupportInterval>,
) -> Result<Report, Error> {
    let interval = interval.unwrap_or_else(|| validate_support(sample));
    let suite = run_suite(sample, &interval)?;
    let mut r = Report::new(
        Subject::Sample,
        json!({
            "values": sample.values(),
            "weights": sample.weights(),
            "interval": [interval.lower(), interval.upper()],
        }),
    );
    let m = &suite.moments;
    r.quantity("n", sample.len() as f64);
    for (name, v) in [
        ("mean", m.mean),
        ("mu2", m.mu2),
        ("mu3", m.mu3),
        ("mu4", m.mu4),
        ("raw2", m.raw2),
        ("raw3", m.raw3),
        ("raw4", m.raw4),
    ] {
        r.quantity(name, v);
    }
    for (name, v) in [
        ("skewness", m.skewness),
        ("kurtosis", m.kurtosis),
        ("studentized_range", m.studentized_range),
        ("dispersion", m.dispersion),
    ] {
        if let Some(v) = v {
            r.quantity(name, v);
        }
    }
    r.bounds = suite.bounds;
    r.diagnostics = suite
        .skipped
        .iter()
        .map(|s| format!("{} skipped: {}", s.formula, s.reason))
        .collect();
    Ok(r)
}

#[derive(Debug, Clone, Default)]
pub struct MatrixOptions {
    pub with_oracle: bool,
    pub functional: Option<DensityFunctional>,
}

fn matrix_echo(m: &crate::trace::SquareMatrix) -> Value {
    let n = m.order();
    if m.entries().iter().all(|z| z.im == 0.0) {
        let rows: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).re).collect()).collect();
        json!({ "entries": rows })
    } else {
        let pairs: Vec<[f64; 2]> = m.entries().iter().map(|z| [z.re, z.im]).collect();
        json!({ "n": n, "entries": pairs })
    }
}

pub fn matrix_report(input: &MatrixInput, opts: &MatrixOptions) -> Result<Report, Error> {
    let (mut r, traces, spectrum) = match input {
        MatrixInput::Spectrum(eigs) => {
            let t = spectrum_to_traces(eigs)?;
            (Report::new(Subject::Spectrum, json!({ "eigenvalues": eigs })), t, Some(eigs.clone()))
        }
        MatrixInput::Matrix(a) => {
            let t = centered_traces(a)?;
            let spectrum = if opts.with_oracle { Some(eigen_oracle(a)?) } else { None };
            let subject = if opts.functional.is_some() { Subject::Functional } else { Subject::Matrix };
            let mut r = Report::new(subject, matrix_echo(a));
            if !a.is_hermitian() {
                r.diagnostics
                    .push("matrix is not Hermitian: bounds assume its spectrum is real".into());
            }
            (r, t, spectrum)
        }
    };
    r.quantity("n", traces.n as f64);
    r.quantity("trA", traces.tr_a);
    r.quantity("trB2", traces.tr_b2);
    r.quantity("trB3", traces.tr_b3);
    r.quantity("trB4", traces.tr_b4);
    if let Some(s) = &spectrum {
        r.quantity("lambda_min", s.iter().copied().fold(f64::INFINITY, f64::min));
        r.quantity("lambda_max", s.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    }
    if traces.n == 1 {
        r.diagnostics.push("order 1: every bound is trivial".into());
    }
    let spec = spectral_report(&traces, spectrum.as_deref());
    r.bounds.extend(spec.eigen_bounds);
    r.bounds.extend(spec.spread_lowers);
    r.bounds.extend(spec.condition_lowers);
    r.diagnostics.extend(spec.diagnostics);
    r.erratum_flags.extend(spec.erratum.map(String::from));

    if let Some(phi) = &opts.functional {
        let MatrixInput::Matrix(a) = input else {
            return Err(Error::InvalidFunctional("a functional needs a matrix, not a spectrum".into()));
        };
        let fm = functional_moments(a, phi)?;
        let fsb = functional_spread_bounds(&fm)?;
        r.inputs_echo["functional"] = matrix_echo(phi.weight());
        r.quantity("phiA", fm.phi_a);
        r.quantity("phiB2", fm.phi_b2);
        r.quantity("phiB3", fm.phi_b3);
        r.quantity("phiB4", fm.phi_b4);
        if !fsb.refinement_holds() {
            r.diagnostics.push(format!(
                "mgen10 refinement fails: {} > {}",
                fsb.cubic_term, fsb.middle_term
            ));
        }
        let mut bounds = fsb.bounds;
        bounds.push(fsb.cubic_bound);
        if let Some(s) = &spectrum {
            let min = s.iter().copied().fold(f64::INFINITY, f64::min);
            let max = s.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            bounds = bounds.into_iter().map(|b| b.against(max - min)).collect();
        }
        r.bounds.extend(bounds);
    }
    Ok(r)
}

pub fn poly_report(input: &PolyInput) -> Result<Report, Error> {
    let p = &input.polynomial;
    let mut echo = json!({ "coefficients": p.coefficients() });
    if let Some(roots) = &input.roots {
        echo["roots"] = json!(roots);
    }
    let mut r = Report::new(Subject::Polynomial, echo);
    let d = depress(p)?;
    r.quantity("degree", d.degree as f64);
    r.quantity("shift", d.shift);
    r.quantity("a2", d.a2);
    if let Some(a3) = d.a3 {
        r.quantity("a3", a3);
    }
    if let Some(a4) = d.a4 {
        r.quantity("a4", a4);
    }
    r.quantity("m2", d.m2);
    if let Some(m4) = d.m4 {
        r.quantity("m4", m4);
    }

    match root_extreme_bounds(&d) {
        Ok((lo, hi)) => r.bounds.extend([lo, hi]),
        Err(Error::DegreeTooSmall { .. }) => {
            r.diagnostics.push("pgen3/pgen4 skipped: n >= 5 required".into())
        }
        Err(e) => r.diagnostics.push(format!("pgen3/pgen4 skipped: {e}")),
    }
    match span_bounds(&d) {
        Ok(bounds) => {
            if bounds.iter().any(|b| b.formula == Formula::Pgen7 && b.degenerate) {
                r.diagnostics.push("pgen7: negative operand, roots are not all real".into());
            }
            r.bounds.extend(bounds);
        }
        Err(e) => r.diagnostics.push(format!("pgen5-pgen8 skipped: {e}")),
    }
    if let Some(m4) = d.m4 {
        let nf = d.degree as f64;
        r.erratum_flags.extend(erratum_note(d.degree, nf * d.m2, nf * m4).map(String::from));
    }
    if let Some(roots) = &input.roots {
        let min = roots.iter().copied().fold(f64::INFINITY, f64::min);
        let max = roots.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        r.quantity("root_min", min);
        r.quantity("root_max", max);
        for b in r.bounds.iter_mut() {
            *b = match b.target {
                Target::MinValue => b.against(min),
                Target::MaxValue => b.against(max),
                _ => b.against(max - min),
            };
        }
    }
    Ok(r)
}

/// Builds the report for a bundled fixture.
pub fn fixture_report(f: &Fixture) -> Result<Report, InputError> {
    let r = match f.kind {
        FixtureKind::Sample => sample_report(&io::parse_sample_json(f.json)?, None)?,
        FixtureKind::Matrix => {
            let opts = MatrixOptions {
                with_oracle: f.oracle,
                functional: None,
            };
            matrix_report(&io::parse_matrix_input(f.json)?, &opts)?
        }
        FixtureKind::Polynomial => poly_report(&io::parse_poly_json(f.json)?)?,
    };
    Ok(r.with_source(f.name))
}

/// Number formatting for text reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Significant digits.
    Significant(usize),
    /// Fixed decimals.
    Decimals(usize),
}

impl Precision {
    pub fn format(self, x: f64) -> String {
        let s = match self {
            Precision::Decimals(d) => format!("{x:.d$}"),
            Precision::Significant(digits) => significant(x, digits),
        };
        // avoid printing negative zero
        if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    }
}

fn significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= digits as i32 {
        let s = format!("{:.*e}", digits - 1, x);
        let (mantissa, e) = s.split_once('e').unwrap_or((&s, "0"));
        return format!("{}e{e}", trim_zeros(mantissa));
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn render_text(r: &Report, precision: Precision) -> String {
    let fmt = |x: f64| precision.format(x);
    let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), fmt);
    let mut out = String::new();
    match &r.source {
        Some(src) => writeln!(out, "subject: {} ({src})", r.subject.name()),
        None => writeln!(out, "subject: {}", r.subject.name()),
    }
    .unwrap();
    writeln!(out, "input: {}", r.inputs_echo).unwrap();
    if !r.quantities.is_empty() {
        writeln!(out, "quantities:").unwrap();
        for q in &r.quantities {
            let v = if matches!(q.name, "n" | "degree") {
                format!("{}", q.value)
            } else {
                fmt(q.value)
            };
            writeln!(out, "  {:<18} {v}", q.name).unwrap();
        }
    }
    writeln!(out, "bounds:").unwrap();
    writeln!(
        out,
        "  {:<10} {:<22} {:<6} {:>14} {:>14} {:>14}  status",
        "formula", "target", "dir", "value", "actual", "slack"
    )
    .unwrap();
    for b in &r.bounds {
        let mut status = match b.holds() {
            Some(true) => "ok",
            Some(false) => "VIOLATED",
            None => "-",
        }
        .to_string();
        if b.degenerate {
            status.push_str(" (degenerate)");
        }
        writeln!(
            out,
            "  {:<10} {:<22} {:<6} {:>14} {:>14} {:>14}  {status}",
            b.formula.tag(),
            b.target.key(),
            match b.direction {
                crate::bound::Direction::Lower => "lower",
                crate::bound::Direction::Upper => "upper",
            },
            fmt(b.value),
            opt(b.actual),
            opt(b.slack),
        )
        .unwrap();
    }
    if !r.diagnostics.is_empty() {
        writeln!(out, "diagnostics:").unwrap();
        for d in &r.diagnostics {
            writeln!(out, "  {d}").unwrap();
        }
    }
    if !r.erratum_flags.is_empty() {
        writeln!(out, "erratum:").unwrap();
        for e in &r.erratum_flags {
            writeln!(out, "  {e}").unwrap();
        }
    }
    out
}

pub fn render_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn violated_bound_sets_exit_code_two() {
        let mut r = Report::new(Subject::Sample, Value::Null);
        r.bounds.push(Bound::upper(Target::Mu2, Formula::Ge2, 0.25).against(0.2));
        assert_eq!(r.exit_code(), 0);
        r.bounds.push(Bound::upper(Target::Mu2, Formula::Ge2, 0.25).against(0.3));
        assert_eq!(r.exit_code(), 2);
        assert!(render_text(&r, Precision::Significant(6)).contains("VIOLATED"));
    }

    #[test]
    fn significant_digits() {
        let p = Precision::Significant(6);
        assert_eq!(p.format(3.841687604822), "3.84169");
        assert_eq!(p.format(22.0), "22");
        assert_eq!(p.format(502.25), "502.25");
        assert_eq!(p.format(-0.0), "0");
        assert_eq!(p.format(1.5e-7), "1.5e-7");
        assert_eq!(p.format(1234567.0), "1.23457e6");
        assert_eq!(Precision::Decimals(4).format(-1e-9), "0.0000");
        assert_eq!(Precision::Decimals(4).format(6.02640), "6.0264");
    }

    #[test]
    fn a1_fixture() {
        let r = fixture_report(fixture("a1.json").unwrap()).unwrap();
        assert_eq!(r.exit_code(), 0);
        let fixed = Precision::Decimals(4);
        let v = |f| fixed.format(r.bound(f).unwrap().value);
        assert_eq!(v(Formula::Magen1), "3.8417");
        assert_eq!(v(Formula::Mgen1), "3.7414");
        assert_eq!(v(Formula::Mgen2), "7.2586");
        assert_eq!(v(Formula::Magen2), "1.8633");
        assert_eq!(v(Formula::Mgen4), "1.9401");
        assert_eq!(v(Formula::Mgen11), "6.0264");
    }

    #[test]
    fn a3_fixture_flags_erratum() {
        let r = fixture_report(fixture("a3_spectrum.json").unwrap()).unwrap();
        assert_eq!(r.erratum_flags.len(), 1);
        let r = fixture_report(fixture("nonic.json").unwrap()).unwrap();
        assert_eq!(r.erratum_flags.len(), 1);
    }

    #[test]
    fn quartic_skips_root_bounds() {
        let r = fixture_report(fixture("quartic.json").unwrap()).unwrap();
        assert!(r.diagnostics.iter().any(|d| d.contains("n >= 5 required")));
        assert_eq!(r.bounds.len(), 3);
    }

    #[test]
    fn one_by_one_matrix() {
        let m = crate::trace::SquareMatrix::diagonal(&[2.0]).unwrap();
        let opts = MatrixOptions {
            with_oracle: true,
            functional: None,
        };
        let r = matrix_report(&MatrixInput::Matrix(m), &opts).unwrap();
        assert_eq!(r.exit_code(), 0);
        assert!(r.bounds.iter().all(|b| b.degenerate));
    }

    #[test]
    fn every_fixture_is_clean() {
        for f in crate::fixtures::FIXTURES {
            let r = fixture_report(f).unwrap();
            assert_eq!(r.exit_code(), 0, "{}", f.name);
            assert_eq!(render_text(&r, Precision::Significant(6)), render_text(&r, Precision::Significant(6)));
        }
    }
}
