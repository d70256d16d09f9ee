//! Reference inputs bundled with the crate and run by the `suite` command.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Sample,
    Matrix,
    Polynomial,
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    /// Compare matrix bounds against Jacobi eigenvalues.
    pub oracle: bool,
    pub json: &'static str,
}

macro_rules! fixture {
    ($name:literal, $kind:ident, $oracle:literal) => {
        Fixture {
            name: $name,
            kind: FixtureKind::$kind,
            oracle: $oracle,
            json: include_str!(concat!("../fixtures/", $name)),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("a1.json", Matrix, true),
    fixture!("a2.json", Matrix, false),
    fixture!("a2_spectrum.json", Matrix, false),
    fixture!("a3_spectrum.json", Matrix, false),
    fixture!("quartic.json", Polynomial, false),
    fixture!("nonic.json", Polynomial, false),
    fixture!("two_point_half.json", Sample, false),
    fixture!("two_point_third.json", Sample, false),
    fixture!("two_point_skewed.json", Sample, false),
    fixture!("three_zeros_one.json", Sample, false),
    fixture!("two_zeros_one.json", Sample, false),
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
