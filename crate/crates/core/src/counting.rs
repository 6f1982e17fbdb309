//! Four independent point-counting methods and the trace/Hasse bookkeeping.
//!
//! The methods share the modular kernel but not intermediate results, so
//! their agreement is a genuine cross-check: enumeration solves per-x square
//! roots, the quadratic route sums the Legendre character, the rho route
//! counts ordinate pairs, and the cubic route classifies y^2 - a^3 by cube
//! residue class.

use crate::curve::{enumerate_points, CurveError, CurveParams, Point, PointSet};
use crate::modmath::{
    cube_roots_of_unity, cube_solution_count, legendre_symbol, sqrt_mod, QuadChar,
};

/// Per-curve record of all counting routes and the derived trace data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub p: u64,
    pub a: u64,
    /// Enumerated count; absent when p exceeds the enumeration cap.
    pub n_enum: Option<u64>,
    pub n_quad: u64,
    pub n_rho: u64,
    pub n_cubic: u64,
    /// delta = N - p - 1.
    pub delta: i64,
    /// delta^2 < 4p, checked in exact integers.
    pub hasse_ok: bool,
}

impl CountReport {
    /// Runs every counting method; enumeration is skipped (not failed) when
    /// p exceeds `enumeration_cap`.
    pub fn compute(c: &CurveParams, enumeration_cap: u64) -> Self {
        let n_enum = if c.p() <= enumeration_cap {
            Some(count_enumeration(c, enumeration_cap).expect("cap checked"))
        } else {
            None
        };
        let n_quad = count_quadratic_sum(c);
        let n_rho = count_rho(c);
        let n_cubic = count_cubic_sum(c);
        let (delta, hasse_ok) = trace_and_hasse(c, n_quad);
        CountReport {
            p: c.p(),
            a: c.a().value(),
            n_enum,
            n_quad,
            n_rho,
            n_cubic,
            delta,
            hasse_ok,
        }
    }

    /// True iff every computed method returned the same count.
    pub fn methods_agree(&self) -> bool {
        self.n_quad == self.n_rho
            && self.n_quad == self.n_cubic
            && self.n_enum.is_none_or(|n| n == self.n_quad)
    }

    /// The agreed count. Meaningful once `methods_agree` holds.
    pub fn n(&self) -> u64 {
        self.n_quad
    }
}

fn assert_count_bound(c: &CurveParams, n: u64) {
    // The curve can never carry more than 2p + 1 points.
    assert!(n <= 2 * c.p() + 1, "count {n} exceeds 2p+1 for p={}", c.p());
}

/// |E(F_p)| by exhaustive per-x enumeration, including Infinity.
pub fn count_enumeration(c: &CurveParams, cap: u64) -> Result<u64, CurveError> {
    let n = enumerate_points(c, cap)?.len() as u64;
    assert_count_bound(c, n);
    Ok(n)
}

/// N = p + 1 + sum over x of chi(x^3 + a^3).
pub fn count_quadratic_sum(c: &CurveParams) -> u64 {
    let m = c.modulus();
    let p = c.p();
    let mut chi_sum: i128 = 0;
    for x in 0..p {
        chi_sum += legendre_symbol(c.rhs(m.element(x))).value() as i128;
    }
    let n = (p as i128 + 1 + chi_sum) as u64;
    assert_count_bound(c, n);
    n
}

/// N = 4 + sum over x of rho(x), where rho(x) = 2 iff chi(x^3 + a^3) = 1.
///
/// The constant 4 absorbs the three y = 0 points (the cube roots of -a^3,
/// which exist and are distinct because p = 1 (mod 6) and a != 0) plus the
/// point at infinity.
pub fn count_rho(c: &CurveParams) -> u64 {
    let m = c.modulus();
    let p = c.p();
    #[cfg(debug_assertions)]
    {
        // The y = 0 abscissae are exactly {-a, -wa, -w^2 a}.
        let (_, w, w2) = cube_roots_of_unity(m);
        let roots = [-c.a(), -(w * c.a()), -(w2 * c.a())];
        debug_assert!(roots.iter().all(|r| c.rhs(*r).is_zero()));
        debug_assert!(roots[0] != roots[1] && roots[0] != roots[2] && roots[1] != roots[2]);
    }
    let mut n: u64 = 4;
    for x in 0..p {
        if legendre_symbol(c.rhs(m.element(x))) == QuadChar::Residue {
            n += 2;
        }
    }
    assert_count_bound(c, n);
    n
}

/// N = 1 + sum over y of f(y^2 - a^3), with f counting the cube roots of t:
/// 1 when p | t, 3 when t is a nonzero cubic residue, 0 otherwise.
pub fn count_cubic_sum(c: &CurveParams) -> u64 {
    let m = c.modulus();
    let p = c.p();
    let a3 = c.a_cubed();
    let mut n: u64 = 1;
    for y in 0..p {
        let t = m.element(y).square() - a3;
        n += cube_solution_count(t);
    }
    assert_count_bound(c, n);
    n
}

/// delta = N - p - 1 and the exact Hasse check delta^2 < 4p.
pub fn trace_and_hasse(c: &CurveParams, n: u64) -> (i64, bool) {
    let p = c.p();
    let delta = n as i128 - p as i128 - 1;
    let hasse_ok = delta * delta < 4 * p as i128;
    (
        i64::try_from(delta).expect("count out of supported range"),
        hasse_ok,
    )
}

/// The points with x = 0: a complementary pair {(0, y), (0, p-y)} when a is
/// a quadratic residue, none otherwise.
pub fn y_axis_points(c: &CurveParams) -> PointSet {
    let m = c.modulus();
    if !legendre_symbol(c.a()).is_residue() {
        return PointSet::from_canonical(Vec::new());
    }
    let x0 = m.element(0);
    let points: Vec<Point> = sqrt_mod(c.a_cubed())
        .into_iter()
        .map(|y| Point::affine(x0, y))
        .collect();
    debug_assert_eq!(points.len(), 2);
    PointSet::from_canonical(points)
}
