//! Curve and point domain model for y^2 = x^3 + a^3 over F_p, the
//! brute-force enumeration oracle, and the chord-tangent group law used for
//! structural sanity checks.

use std::fmt;

use thiserror::Error;

use crate::modmath::{sqrt_mod, FieldElement, PrimeError, PrimeModulus};

/// Default bound on p for O(p) enumeration work.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum CurveError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("prime {0} is not congruent to 1 modulo 6")]
    WrongResidue(u64),
    #[error("a = 0 (mod {p}) makes y^2 = x^3 + a^3 singular")]
    SingularCurve { p: u64, a: u64 },
    #[error("p = {p} exceeds the enumeration cap {cap}")]
    CapExceeded { p: u64, cap: u64 },
    #[error("modulus {0} exceeds 2^63 - 1")]
    ModulusTooLarge(u64),
}

impl From<PrimeError> for CurveError {
    fn from(e: PrimeError) -> Self {
        match e {
            PrimeError::NotPrime(n) => CurveError::NonPrime(n),
            // The only primes below 7 are 2, 3 and 5, none of which is
            // 1 (mod 6).
            PrimeError::TooSmall(n) => CurveError::WrongResidue(n),
            PrimeError::TooLarge(n) => CurveError::ModulusTooLarge(n),
        }
    }
}

/// Validated parameters (p, a) for y^2 = x^3 + a^3 over F_p with
/// p = 1 (mod 6) and a != 0, so the curve is nonsingular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveParams {
    modulus: PrimeModulus,
    a: FieldElement,
}

impl CurveParams {
    /// Validates p (prime, 1 mod 6) and a (nonzero after reduction).
    pub fn new(p: u64, a: u64) -> Result<Self, CurveError> {
        let modulus = PrimeModulus::new(p)?;
        if !modulus.is_one_mod_six() {
            return Err(CurveError::WrongResidue(p));
        }
        Self::with_modulus(modulus, a)
    }

    /// Same validation minus the residue-class requirement. This is the
    /// deliberate escape hatch for the mod-11 counterexample in the
    /// identities module; it stays crate-private so the public counting API
    /// cannot reach curves outside the p = 1 (mod 6) family.
    pub(crate) fn new_any_class(p: u64, a: u64) -> Result<Self, CurveError> {
        let modulus = PrimeModulus::new(p)?;
        Self::with_modulus(modulus, a)
    }

    fn with_modulus(modulus: PrimeModulus, a: u64) -> Result<Self, CurveError> {
        let a = modulus.element(a);
        if a.is_zero() {
            return Err(CurveError::SingularCurve {
                p: modulus.p(),
                a: a.value(),
            });
        }
        Ok(CurveParams { modulus, a })
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.modulus.p()
    }

    #[inline]
    pub fn a(&self) -> FieldElement {
        self.a
    }

    #[inline]
    pub fn a_cubed(&self) -> FieldElement {
        self.a.cube()
    }

    /// Discriminant -16 * 27 * a^6, nonzero for every constructible curve.
    pub fn discriminant(&self) -> FieldElement {
        let a6 = self.a_cubed().square();
        -(self.modulus.element(432) * a6)
    }

    /// Right-hand side x^3 + a^3.
    #[inline]
    pub fn rhs(&self, x: FieldElement) -> FieldElement {
        x.cube() + self.a_cubed()
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + {}^3 over F_{}", self.a, self.p())
    }
}

/// A point of E(F_p): the point at infinity or an affine pair.
///
/// The derived ordering is the canonical one: Infinity first, then affine
/// points lexicographically by (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl Point {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

/// The full set of rational points in canonical order: Infinity first, then
/// affine points lexicographic in (x, y). No duplicates; every member is on
/// the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub(crate) fn from_canonical(points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet { points }
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// True for Infinity, and for (x, y) iff y^2 = x^3 + a^3 (mod p).
pub fn is_on_curve(c: &CurveParams, point: &Point) -> bool {
    match point {
        Point::Infinity => true,
        Point::Affine { x, y } => y.square() == c.rhs(*x),
    }
}

/// Every rational point, found by solving y^2 = x^3 + a^3 per abscissa.
/// This is the ground-truth oracle for all counting methods.
pub fn enumerate_points(c: &CurveParams, cap: u64) -> Result<PointSet, CurveError> {
    let p = c.p();
    if p > cap {
        return Err(CurveError::CapExceeded { p, cap });
    }
    let m = c.modulus();
    let mut points = Vec::with_capacity(p as usize + 2);
    points.push(Point::Infinity);
    for x in 0..p {
        let x = m.element(x);
        for y in sqrt_mod(c.rhs(x)) {
            points.push(Point::affine(x, y));
        }
    }
    Ok(PointSet::from_canonical(points))
}

fn assert_on_curve(c: &CurveParams, point: &Point) {
    assert!(is_on_curve(c, point), "point {point} is not on {c}");
}

/// Group negation: Infinity maps to itself, (x, y) to (x, -y).
pub fn negate(c: &CurveParams, point: &Point) -> Point {
    assert_on_curve(c, point);
    match point {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::affine(*x, -*y),
    }
}

/// Chord-tangent addition with Infinity as identity.
pub fn add(c: &CurveParams, lhs: &Point, rhs: &Point) -> Point {
    assert_on_curve(c, lhs);
    assert_on_curve(c, rhs);
    let (x1, y1) = match lhs {
        Point::Infinity => return *rhs,
        Point::Affine { x, y } => (*x, *y),
    };
    let (x2, y2) = match rhs {
        Point::Infinity => return *lhs,
        Point::Affine { x, y } => (*x, *y),
    };
    // Vertical chord (includes the tangent at a 2-torsion point).
    if x1 == x2 && (y1 + y2).is_zero() {
        return Point::Infinity;
    }
    let slope = if x1 == x2 {
        // Doubling: (3x^2) / (2y); y != 0 here.
        let three_x_sq = (x1.square() + x1.square()) + x1.square();
        three_x_sq * (y1 + y1).inv()
    } else {
        (y2 - y1) * (x2 - x1).inv()
    };
    let x3 = slope.square() - x1 - x2;
    let y3 = slope * (x1 - x3) - y1;
    let sum = Point::affine(x3, y3);
    debug_assert!(is_on_curve(c, &sum));
    sum
}

/// k-fold sum by double-and-add; 0 * P = Infinity.
pub fn scalar_mul(c: &CurveParams, k: u64, point: &Point) -> Point {
    assert_on_curve(c, point);
    let mut acc = Point::Infinity;
    let mut base = *point;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = add(c, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = add(c, &base, &base);
        }
    }
    acc
}

#[cfg(test)]
/// O(p^2) full-grid scan, kept as a second oracle independent of sqrt_mod.
fn enumerate_points_full_scan(c: &CurveParams) -> Vec<Point> {
    let m = c.modulus();
    let p = c.p();
    assert!(p <= 500, "full scan is for small test curves only");
    let mut points = vec![Point::Infinity];
    for x in 0..p {
        for y in 0..p {
            let pt = Point::affine(m.element(x), m.element(y));
            if is_on_curve(c, &pt) {
                points.push(pt);
            }
        }
    }
    points
}

/// Re-exported for tests and the CLI: primes p = 1 (mod 6) in [lo, hi].
pub fn primes_one_mod_six(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| crate::modmath::is_prime_1mod6(n))
        .collect()
}
