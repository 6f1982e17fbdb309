//! Modular-arithmetic kernel for prime fields: powers, inverses, quadratic
//! and cubic residue characters, square and cube roots, and deterministic
//! 64-bit primality.
//!
//! Everything is exact integer arithmetic. Intermediate products go through
//! `u128`, so moduli up to `2^63 - 1` never overflow.

use std::fmt;

use thiserror::Error;

/// Largest supported modulus. Keeping p below 2^63 leaves headroom for
/// double-width products in `u128` and exact signed sums in `i128`.
pub const MAX_MODULUS: u64 = i64::MAX as u64;

/// Smallest supported modulus.
pub const MIN_MODULUS: u64 = 7;

/// Moduli below this bound find cube roots by direct search; larger ones use
/// the Adleman-Manders-Miller descent. Both paths are exact.
pub const CUBE_ROOT_SEARCH_THRESHOLD: u64 = 1 << 20;

/// Deterministic Miller-Rabin witness set, valid for all n < 2^64.
const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum PrimeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is below the smallest supported modulus 7")]
    TooSmall(u64),
    #[error("modulus {0} exceeds 2^63 - 1")]
    TooLarge(u64),
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    base %= m;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test for the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MILLER_RABIN_BASES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let trailing = (n - 1).trailing_zeros();
    let d = (n - 1) >> trailing;
    'witness: for &a in &MILLER_RABIN_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// True iff n is prime and n = 1 (mod 6).
pub fn is_prime_1mod6(n: u64) -> bool {
    n % 6 == 1 && is_prime_u64(n)
}

/// A validated prime modulus p >= 7, p < 2^63.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus {
    p: u64,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if p > MAX_MODULUS {
            return Err(PrimeError::TooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(PrimeError::NotPrime(p));
        }
        if p < MIN_MODULUS {
            return Err(PrimeError::TooSmall(p));
        }
        Ok(PrimeModulus { p })
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn residue6(self) -> u64 {
        self.p % 6
    }

    #[inline]
    pub fn is_one_mod_six(self) -> bool {
        self.p % 6 == 1
    }

    /// Builds an element of F_p, reducing the value.
    #[inline]
    pub fn element(self, value: u64) -> FieldElement {
        FieldElement::new(value, self)
    }

    fn assert_one_mod_six(self) {
        assert!(
            self.is_one_mod_six(),
            "cubic-residue operations require p = 1 (mod 6), got p = {}",
            self.p
        );
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// An integer residue in [0, p-1] tied to its prime modulus.
///
/// The derived ordering compares by value first, which is what canonical
/// point ordering needs; elements from different fields never meet in
/// correct usage (arithmetic debug-asserts matching moduli).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    #[inline]
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        FieldElement {
            value: value % modulus.p,
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// base^exp by square-and-multiply; exp = 0 gives 1.
    pub fn pow(self, exp: u64) -> Self {
        FieldElement {
            value: pow_mod(self.value, exp, self.modulus.p),
            modulus: self.modulus,
        }
    }

    #[inline]
    pub fn square(self) -> Self {
        self * self
    }

    #[inline]
    pub fn cube(self) -> Self {
        self * self * self
    }

    /// Multiplicative inverse by Fermat's little theorem.
    ///
    /// Panics on zero, which has no inverse.
    pub fn inv(self) -> Self {
        assert!(
            !self.is_zero(),
            "attempted to invert 0 mod {}",
            self.modulus
        );
        self.pow(self.modulus.p - 2)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.p;
        let mut v = self.value + rhs.value; // < 2p < 2^64
        if v >= p {
            v -= p;
        }
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.p;
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + p - rhs.value
        };
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.modulus.p),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus.p - self.value
        };
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }
}

/// Value of the quadratic character (Legendre symbol).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadChar {
    NonResidue,
    Zero,
    Residue,
}

impl QuadChar {
    /// The symbol as the integer -1, 0 or +1.
    #[inline]
    pub fn value(self) -> i64 {
        match self {
            QuadChar::NonResidue => -1,
            QuadChar::Zero => 0,
            QuadChar::Residue => 1,
        }
    }

    #[inline]
    pub fn is_residue(self) -> bool {
        matches!(self, QuadChar::Residue)
    }
}

/// Legendre symbol by the Euler criterion: a^((p-1)/2) mapped to {-1, 0, +1}.
pub fn legendre_symbol(a: FieldElement) -> QuadChar {
    if a.is_zero() {
        return QuadChar::Zero;
    }
    let p = a.modulus().p();
    let e = a.pow((p - 1) / 2);
    if e.value() == 1 {
        QuadChar::Residue
    } else {
        debug_assert_eq!(e.value(), p - 1);
        QuadChar::NonResidue
    }
}

fn quadratic_nonresidue(m: PrimeModulus) -> FieldElement {
    // Deterministic scan; half of F_p* qualifies, so this terminates fast.
    for z in 2.. {
        let cand = m.element(z);
        if legendre_symbol(cand) == QuadChar::NonResidue {
            return cand;
        }
    }
    unreachable!()
}

/// Tonelli-Shanks square root of a nonzero quadratic residue.
fn tonelli_shanks(t: FieldElement) -> FieldElement {
    let m = t.modulus();
    let p = m.p();
    if p % 4 == 3 {
        return t.pow((p + 1) / 4);
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = quadratic_nonresidue(m);

    let mut order = s;
    let mut c = z.pow(q);
    let mut residual = t.pow(q);
    let mut root = t.pow((q + 1) >> 1);
    while residual.value() != 1 {
        // Least i with residual^(2^i) = 1; i < order for genuine residues.
        let mut i = 0u32;
        let mut probe = residual;
        while probe.value() != 1 {
            probe = probe.square();
            i += 1;
        }
        let b = c.pow(1u64 << (order - i - 1));
        root = root * b;
        c = b.square();
        residual = residual * c;
        order = i;
    }
    root
}

/// All y with y^2 = t (mod p), ascending: none for a nonresidue, {0} for
/// t = 0, and {y, p-y} otherwise.
pub fn sqrt_mod(t: FieldElement) -> Vec<FieldElement> {
    if t.is_zero() {
        return vec![t];
    }
    match legendre_symbol(t) {
        QuadChar::NonResidue => Vec::new(),
        QuadChar::Zero => unreachable!("zero handled above"),
        QuadChar::Residue => {
            let r = tonelli_shanks(t);
            debug_assert_eq!(r.square(), t);
            let mut roots = vec![r, -r];
            roots.sort();
            roots
        }
    }
}

/// Class of the cubic residue character, defined for p = 1 (mod 6).
///
/// `Class_k` means alpha^((p-1)/3) = w^k for the fixed nontrivial cube root
/// of unity w returned by [`cube_roots_of_unity`]. `Class0` is exactly the
/// nonzero cubic residues. The induced solution count does not depend on
/// which nontrivial root is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicCharClass {
    Zero,
    Class0,
    Class1,
    Class2,
}

/// The three solutions of x^3 = 1: (1, w, w^2) with w the smaller of the two
/// nontrivial roots. Both nontrivial roots satisfy w^2 + w + 1 = 0 (mod p).
///
/// Panics unless p = 1 (mod 6).
pub fn cube_roots_of_unity(m: PrimeModulus) -> (FieldElement, FieldElement, FieldElement) {
    m.assert_one_mod_six();
    let b = cubic_nonresidue(m);
    let u = b.pow((m.p() - 1) / 3);
    let u2 = u.square();
    debug_assert!(u.value() != 1 && u2.value() != 1 && u != u2);
    let w = if u.value() < u2.value() { u } else { u2 };
    (m.element(1), w, w.square())
}

fn cubic_nonresidue(m: PrimeModulus) -> FieldElement {
    let exp = (m.p() - 1) / 3;
    // Two thirds of F_p* qualifies.
    for b in 2.. {
        let cand = m.element(b);
        if cand.pow(exp).value() != 1 {
            return cand;
        }
    }
    unreachable!()
}

/// Cubic character class of alpha. Panics unless p = 1 (mod 6).
pub fn cubic_char_class(alpha: FieldElement) -> CubicCharClass {
    let m = alpha.modulus();
    m.assert_one_mod_six();
    if alpha.is_zero() {
        return CubicCharClass::Zero;
    }
    let e = alpha.pow((m.p() - 1) / 3);
    if e.value() == 1 {
        return CubicCharClass::Class0;
    }
    let (_, w, w2) = cube_roots_of_unity(m);
    if e == w {
        CubicCharClass::Class1
    } else {
        debug_assert_eq!(e, w2);
        CubicCharClass::Class2
    }
}

/// Number of solutions to x^3 = alpha: 1 for alpha = 0, 3 for a nonzero
/// cubic residue, 0 otherwise. Panics unless p = 1 (mod 6).
pub fn cube_solution_count(alpha: FieldElement) -> u64 {
    match cubic_char_class(alpha) {
        CubicCharClass::Zero => 1,
        CubicCharClass::Class0 => 3,
        CubicCharClass::Class1 | CubicCharClass::Class2 => 0,
    }
}

/// All x with x^3 = t (mod p), ascending. For a nonzero residue t the roots
/// are {x0, x0*w, x0*w^2}. Panics unless p = 1 (mod 6).
pub fn cube_roots(t: FieldElement) -> Vec<FieldElement> {
    let m = t.modulus();
    m.assert_one_mod_six();
    if t.is_zero() {
        return vec![t];
    }
    if cubic_char_class(t) != CubicCharClass::Class0 {
        return Vec::new();
    }
    let x0 = if m.p() < CUBE_ROOT_SEARCH_THRESHOLD {
        cube_root_by_search(t)
    } else {
        cube_root_amm(t)
    };
    let (_, w, w2) = cube_roots_of_unity(m);
    let mut roots = vec![x0, x0 * w, x0 * w2];
    roots.sort();
    debug_assert!(roots[0] != roots[1] && roots[1] != roots[2]);
    debug_assert!(roots.iter().all(|r| r.cube() == t));
    roots
}

/// Smallest cube root of a nonzero cubic residue, by exhaustive search.
fn cube_root_by_search(t: FieldElement) -> FieldElement {
    let m = t.modulus();
    for x in 1..m.p() {
        let cand = m.element(x);
        if cand.cube() == t {
            return cand;
        }
    }
    unreachable!("caller guarantees t is a cubic residue")
}

/// Adleman-Manders-Miller cube root of a nonzero cubic residue.
///
/// Writes p - 1 = 3^s * q with 3 ∤ q, lifts an initial root from the
/// prime-to-3 part, then corrects it inside the 3-Sylow subgroup by a
/// base-3 discrete-log descent.
fn cube_root_amm(t: FieldElement) -> FieldElement {
    let m = t.modulus();
    let p = m.p();
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(3) {
        q /= 3;
        s += 1;
    }
    debug_assert!(s >= 1);

    // Initial guess: x^3 = t * t^(c*q) for c in {1, 2}.
    let x = if q % 3 == 2 {
        t.pow((q + 1) / 3)
    } else {
        t.pow((2 * q + 1) / 3)
    };
    let err = x.cube() * t.inv();
    if err.value() == 1 {
        return x;
    }

    // err = t^(c*q) has order dividing 3^(s-1), so it is a cube inside the
    // 3-Sylow subgroup generated by g below. Solve h^k = err for h = g^3.
    let g = cubic_nonresidue(m).pow(q); // order exactly 3^s
    let h = g.cube(); // order 3^(s-1)
    let omega = g.pow(pow3(s - 1)); // primitive cube root of unity
    let omega2 = omega.square();
    let digits = s - 1;
    let h_inv = h.inv();
    let mut k: u64 = 0;
    for i in 0..digits {
        let e = (err * h_inv.pow(k)).pow(pow3(digits - 1 - i));
        let digit = if e.value() == 1 {
            0
        } else if e == omega {
            1
        } else {
            debug_assert_eq!(e, omega2);
            2
        };
        k += digit * pow3(i);
    }
    debug_assert_eq!(h.pow(k), err);
    x * g.pow(k).inv()
}

fn pow3(e: u32) -> u64 {
    3u64.pow(e)
}
