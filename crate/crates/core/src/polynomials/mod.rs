//! Factorization of monic twocomplex polynomials.
//!
//! `P(u) = uᵐ + a₁u^{m−1} + … + a_m` splits in the idempotent base into two
//! monic real polynomials, one in `v₊` with coefficients `A_{l+}` and one in
//! `v₋` with `A_{l−}`. Each has a unique factorization into linear factors
//! over ℂ, but a root of `P` pairs any `v₊` root with any `v₋` root:
//! `u_l = e₊v_{l+} + e₋v_{l−}`. Every pairing gives a factorization
//! `P(u) = ∏ (u − u_l)`, so the factorization of `P` is not unique.
//! For `u² − 1` there are two: `(u − 1)(u + 1)` and `(u − δ)(u + δ)`.

pub mod roots;

pub use roots::{component_roots, eval_monic, expand_roots, REAL_TOL};

use std::collections::BTreeSet;
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{CanonicalPair, TwoComplex};
use crate::{Error, Result};

/// Default and recommended maximum degree for enumeration.
pub const DEFAULT_DEGREE_CAP: usize = 8;
/// Roots closer than this count as the same root when deduplicating.
pub const DEDUP_TOL: f64 = 1e-8;

/// Monic `uᵐ + a₁u^{m−1} + … + a_m`; `coeffs` holds `a₁…a_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoComplexPolynomial {
    coeffs: Vec<TwoComplex>,
}

/// Monic real polynomial `vᵐ + A₁v^{m−1} + … + A_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    pub coeffs: Vec<f64>,
}

/// A root `e₊v₊ + e₋v₋` with possibly complex components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComponentRoot {
    pub v_plus: Complex64,
    pub v_minus: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub roots: Vec<ComponentRoot>,
    /// Largest coefficient deviation of `∏ (u − u_l)` from the polynomial.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationSet {
    pub factorizations: Vec<Factorization>,
    /// Residual bound `1e-8·(1 + max|a_l|)` a factorization must meet.
    pub tolerance: f64,
}

impl TwoComplexPolynomial {
    pub fn new(coeffs: Vec<TwoComplex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("polynomial degree must be at least 1".into()));
        }
        if let Some(i) = coeffs.iter().position(|a| !a.is_finite()) {
            return Err(Error::Domain(format!("coefficient a{} is not finite", i + 1)));
        }
        Ok(TwoComplexPolynomial { coeffs })
    }

    /// `∏ (u − u_l)` expanded in the algebra.
    pub fn from_roots(roots: &[TwoComplex]) -> Result<Self> {
        let mut c = vec![TwoComplex::ONE];
        for &r in roots {
            c.push(TwoComplex::ZERO);
            for k in (1..c.len()).rev() {
                let prev = c[k - 1];
                c[k] -= r * prev;
            }
        }
        TwoComplexPolynomial::new(c.split_off(1))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[TwoComplex] {
        &self.coeffs
    }

    pub fn eval(&self, u: TwoComplex) -> TwoComplex {
        self.coeffs
            .iter()
            .fold(TwoComplex::ONE, |acc, &a| acc * u + a)
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|a| a.modulus()).fold(0.0, f64::max)
    }

    /// The `v₊` and `v₋` component polynomials.
    pub fn to_components(&self) -> (RealPolynomial, RealPolynomial) {
        let (plus, minus) = self
            .coeffs
            .iter()
            .map(|a| {
                let c = a.to_canonical();
                (c.v_plus, c.v_minus)
            })
            .unzip();
        (RealPolynomial { coeffs: plus }, RealPolynomial { coeffs: minus })
    }
}

impl RealPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn roots(&self) -> Result<Vec<Complex64>> {
        component_roots(&self.coeffs)
    }
}

/// Degree line, then `a₁…a_m` one per line in the literal format. `#`
/// comments and blank lines are skipped.
impl FromStr for TwoComplexPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let degree: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polynomial file".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the degree".into()))?;
        let coeffs = lines.map(str::parse).collect::<Result<Vec<TwoComplex>>>()?;
        if coeffs.len() != degree {
            return Err(Error::Parse(format!(
                "degree {degree} but {} coefficients",
                coeffs.len()
            )));
        }
        TwoComplexPolynomial::new(coeffs)
    }
}

impl ComponentRoot {
    pub fn new(v_plus: Complex64, v_minus: Complex64) -> Self {
        ComponentRoot { v_plus, v_minus }
    }

    pub fn from_twocomplex(u: TwoComplex) -> Self {
        let c = u.to_canonical();
        ComponentRoot::new(Complex64::new(c.v_plus, 0.0), Complex64::new(c.v_minus, 0.0))
    }

    /// Both imaginary parts below `1e-9`.
    pub fn is_real(&self) -> bool {
        self.v_plus.im.abs() < REAL_TOL && self.v_minus.im.abs() < REAL_TOL
    }

    /// The twocomplex number, if the root is real.
    pub fn to_twocomplex(&self) -> Option<TwoComplex> {
        self.is_real()
            .then(|| CanonicalPair::new(self.v_plus.re, self.v_minus.re).to_twocomplex())
    }

    fn distance(&self, other: &ComponentRoot) -> f64 {
        (self.v_plus - other.v_plus)
            .norm()
            .max((self.v_minus - other.v_minus).norm())
    }
}

impl Factorization {
    /// The roots as twocomplex numbers, or `None` if any is not real.
    pub fn real_roots(&self) -> Option<Vec<TwoComplex>> {
        self.roots.iter().map(ComponentRoot::to_twocomplex).collect()
    }

    /// Same multiset as `roots`, up to [`DEDUP_TOL`].
    pub fn matches(&self, roots: &[ComponentRoot]) -> bool {
        if roots.len() != self.roots.len() {
            return false;
        }
        let mut used = vec![false; roots.len()];
        self.roots.iter().all(|r| {
            let hit = (0..roots.len()).find(|&j| !used[j] && r.distance(&roots[j]) < DEDUP_TOL);
            hit.map(|j| used[j] = true).is_some()
        })
    }
}

impl FactorizationSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn all_verified(&self) -> bool {
        self.factorizations.iter().all(|f| f.residual < self.tolerance)
    }

    pub fn contains(&self, roots: &[ComponentRoot]) -> bool {
        self.factorizations.iter().any(|f| f.matches(roots))
    }
}

/// Expands `∏ (u − u_l)` componentwise in complex arithmetic and returns the
/// largest coefficient deviation from `p`, measured as the Euclidean norm of
/// the (complexified) `x` and `y` differences.
pub fn verify_factorization(p: &TwoComplexPolynomial, roots: &[ComponentRoot]) -> Result<f64> {
    if roots.len() != p.degree() {
        return Err(Error::Domain(format!(
            "{} roots for a degree-{} polynomial",
            roots.len(),
            p.degree()
        )));
    }
    let plus: Vec<Complex64> = roots.iter().map(|r| r.v_plus).collect();
    let minus: Vec<Complex64> = roots.iter().map(|r| r.v_minus).collect();
    let (cp, cm) = (expand_roots(&plus), expand_roots(&minus));
    Ok(cp
        .iter()
        .zip(&cm)
        .zip(p.coeffs())
        .map(|((&sp, &sm), a)| {
            let x = 0.5 * (sp + sm) - a.x();
            let y = 0.5 * (sp - sm) - a.y();
            (x.norm_sqr() + y.norm_sqr()).sqrt()
        })
        .fold(0.0, f64::max))
}

/// Groups values closer than [`DEDUP_TOL`]; returns a group id per index.
/// Ids increase with the input order, which is sorted.
fn group_ids(values: &[Complex64]) -> Vec<usize> {
    let mut ids = Vec::with_capacity(values.len());
    let mut reps: Vec<Complex64> = Vec::new();
    for &v in values {
        match reps.iter().position(|r| (r - v).norm() < DEDUP_TOL) {
            Some(id) => ids.push(id),
            None => {
                ids.push(reps.len());
                reps.push(v);
            }
        }
    }
    ids
}

/// Next lexicographic permutation in place; false after the last one.
fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every distinct factorization `P(u) = ∏ (u − u_l)`.
///
/// The `v₋` roots stay in sorted order while the `v₊` roots run through all
/// distinct permutations; pairings that give the same multiset of roots are
/// reported once. The output order is deterministic.
pub fn enumerate_factorizations(
    p: &TwoComplexPolynomial,
    max_degree: usize,
) -> Result<FactorizationSet> {
    let m = p.degree();
    if m > max_degree {
        return Err(Error::DegreeTooLarge { degree: m, cap: max_degree });
    }
    let (plus, minus) = p.to_components();
    let plus_roots = plus.roots()?;
    let minus_roots = minus.roots()?;
    let plus_ids = group_ids(&plus_roots);
    let minus_ids = group_ids(&minus_roots);

    // each entry maps a multiset key to one realising assignment of v+ indices
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    type Pairing = (Vec<(usize, usize)>, Vec<usize>);
    let mut found: Vec<Pairing> = Vec::new();
    // permute indices ordered by group id so equal roots are not permuted twice
    let mut perm: Vec<usize> = (0..m).collect();
    perm.sort_by_key(|&i| (plus_ids[i], i));
    let mut key_perm: Vec<usize> = perm.iter().map(|&i| plus_ids[i]).collect();
    loop {
        // rebuild the index assignment for the current id sequence
        let mut pool = perm.clone();
        let assignment: Vec<usize> = key_perm
            .iter()
            .map(|&id| {
                let pos = pool.iter().position(|&i| plus_ids[i] == id).expect("id present");
                pool.remove(pos)
            })
            .collect();
        let mut key: Vec<(usize, usize)> = (0..m)
            .map(|l| (plus_ids[assignment[l]], minus_ids[l]))
            .collect();
        key.sort_unstable();
        if seen.insert(key.clone()) {
            found.push((key, assignment));
        }
        if !next_permutation(&mut key_perm) {
            break;
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));

    let tolerance = 1e-8 * (1.0 + p.max_coeff_modulus());
    let factorizations = found
        .into_iter()
        .map(|(_, assignment)| {
            let mut roots: Vec<(usize, ComponentRoot)> = (0..m)
                .map(|l| {
                    let i = assignment[l];
                    (
                        plus_ids[i] * m + minus_ids[l],
                        ComponentRoot::new(plus_roots[i], minus_roots[l]),
                    )
                })
                .collect();
            roots.sort_by_key(|(k, _)| *k);
            let roots: Vec<ComponentRoot> = roots.into_iter().map(|(_, r)| r).collect();
            let residual = verify_factorization(p, &roots).expect("m roots");
            Factorization { roots, residual }
        })
        .collect();
    Ok(FactorizationSet { factorizations, tolerance })
}
