use std::fmt;
use std::str::FromStr;

use super::{TwoComplexFunction, SINGULARITY_THRESHOLD};
use crate::algebra::TwoComplex;
use crate::{Error, Result};

/// A polyline through twocomplex points. A closed path returns to its first
/// vertex implicitly, so the first vertex is not repeated at the end.
#[derive(Clone, Debug, PartialEq)]
pub struct Path {
    vertices: Vec<TwoComplex>,
    closed: bool,
}

impl Path {
    pub fn new(vertices: Vec<TwoComplex>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::Domain("a path needs at least 2 vertices".into()));
        }
        if closed && vertices.first() == vertices.last() {
            return Err(Error::Domain(
                "closed path must not repeat its first vertex at the end".into(),
            ));
        }
        if let Some(v) = vertices.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite vertex {v:?}")));
        }
        Ok(Path { vertices, closed })
    }

    pub fn open(vertices: Vec<TwoComplex>) -> Result<Self> {
        Path::new(vertices, false)
    }

    pub fn closed(vertices: Vec<TwoComplex>) -> Result<Self> {
        Path::new(vertices, true)
    }

    pub fn vertices(&self) -> &[TwoComplex] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Segments as `(start, end)` pairs, including the closing one.
    pub fn segments(&self) -> impl Iterator<Item = (TwoComplex, TwoComplex)> + '_ {
        let closing = self
            .closed
            .then(|| (self.vertices[self.vertices.len() - 1], self.vertices[0]));
        self.vertices
            .windows(2)
            .map(|w| (w[0], w[1]))
            .chain(closing)
    }
}

/// First line `open` or `closed`, then one vertex per line; `#` comments and
/// blank lines are skipped.
impl FromStr for Path {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let closed = match lines.next() {
            Some("closed") => true,
            Some("open") => false,
            Some(other) => {
                return Err(Error::Parse(format!(
                    "path file must start with `open` or `closed`, got {other:?}"
                )))
            }
            None => return Err(Error::Parse("empty path file".into())),
        };
        let vertices = lines.map(str::parse).collect::<Result<Vec<TwoComplex>>>()?;
        Path::new(vertices, closed)
    }
}

/// Which canonical coordinate a [`NodalLine`] holds constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    /// `v₊ = x + y`
    Plus,
    /// `v₋ = x − y`
    Minus,
}

/// The line `{u : v₊(u) = level}` or `{u : v₋(u) = level}`, parallel to a
/// nodal line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NodalLine {
    pub component: Canonical,
    pub level: f64,
}

impl NodalLine {
    fn coordinate(&self, u: TwoComplex) -> f64 {
        let c = u.to_canonical();
        match self.component {
            Canonical::Plus => c.v_plus,
            Canonical::Minus => c.v_minus,
        }
    }

    /// `|v(u) − level|`, the offset measured in the canonical coordinate.
    pub fn canonical_offset(&self, u: TwoComplex) -> f64 {
        (self.coordinate(u) - self.level).abs()
    }

    /// Euclidean distance from `u` to the line.
    pub fn distance(&self, u: TwoComplex) -> f64 {
        self.canonical_offset(u) * std::f64::consts::FRAC_1_SQRT_2
    }

    /// Smallest canonical offset over the segment `a → b`; zero if the
    /// segment crosses the line.
    pub fn segment_offset(&self, a: TwoComplex, b: TwoComplex) -> f64 {
        let (da, db) = (self.coordinate(a) - self.level, self.coordinate(b) - self.level);
        if da.signum() != db.signum() || da == 0.0 || db == 0.0 {
            0.0
        } else {
            da.abs().min(db.abs())
        }
    }
}

impl fmt::Display for NodalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.component {
            Canonical::Plus => '+',
            Canonical::Minus => '-',
        };
        write!(f, "x{op}y={}", crate::algebra::format_real(self.level))
    }
}

/// The two lines through `u0` parallel to the nodal lines `x = −y` and
/// `x = y`.
pub fn singular_lines(u0: TwoComplex) -> (NodalLine, NodalLine) {
    let c = u0.to_canonical();
    (
        NodalLine { component: Canonical::Plus, level: c.v_plus },
        NodalLine { component: Canonical::Minus, level: c.v_minus },
    )
}

/// A contour integral with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralResult {
    pub value: TwoComplex,
    /// Estimated absolute error (modulus) of `value`.
    pub error_estimate: f64,
    pub n_sub: usize,
}

/// Composite midpoint sum with `n` panels per segment, plus the sum of
/// `|f|·|Δu|` for the rounding floor.
fn midpoint_sum(f: &TwoComplexFunction, path: &Path, n: usize) -> Result<(TwoComplex, f64)> {
    let mut total = TwoComplex::ZERO;
    let mut magnitude = 0.0;
    for (a, b) in path.segments() {
        let du = (b - a) * (1.0 / n as f64);
        let mut seg = TwoComplex::ZERO;
        for k in 0..n {
            let t = (k as f64 + 0.5) / n as f64;
            let fu = f.eval(a + (b - a) * t)?;
            if !fu.is_finite() {
                return Err(Error::Overflow("integrand"));
            }
            seg += fu;
            magnitude += fu.modulus() * du.modulus();
        }
        total += seg * du;
    }
    Ok((total, magnitude))
}

/// `∫_path f(u) du` by the composite midpoint rule with `n_sub` panels per
/// segment.
///
/// The sum is repeated with `2·n_sub` panels and the two are combined by
/// Richardson extrapolation, `(4·I₂ₙ − Iₙ)/3`; the reported error is
/// `|I₂ₙ − Iₙ|/3` plus a rounding floor. Every segment must keep a canonical
/// distance of at least `1e-9` from the singular lines of `f`.
pub fn integrate(f: &TwoComplexFunction, path: &Path, n_sub: usize) -> Result<IntegralResult> {
    if n_sub == 0 {
        return Err(Error::Domain("n_sub must be at least 1".into()));
    }
    for (a, b) in path.segments() {
        for &s in f.singularities() {
            let (lp, lm) = singular_lines(s);
            for line in [lp, lm] {
                if line.segment_offset(a, b) < SINGULARITY_THRESHOLD {
                    return Err(Error::SingularPath(format!(
                        "segment {a} -> {b} meets the singular line {line} through {s}"
                    )));
                }
            }
        }
    }
    let (coarse, _) = midpoint_sum(f, path, n_sub)?;
    let (fine, magnitude) = midpoint_sum(f, path, 2 * n_sub)?;
    let value = (fine * 4.0 - coarse) * (1.0 / 3.0);
    let error_estimate = (fine - coarse).modulus() / 3.0 + 16.0 * f64::EPSILON * magnitude;
    Ok(IntegralResult { value, error_estimate, n_sub })
}
