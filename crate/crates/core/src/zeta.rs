//! Zeta-function representation of a curve over F_q and exact lifting of
//! point counts to F_{q^r}.
//!
//! The conjugate roots of the numerator are never materialized: the power
//! sums t_r = alpha^r + beta^r obey the integer recurrence
//! t_r = a t_{r-1} - q t_{r-2} with t_0 = 2, t_1 = a, so every lifted count
//! N_r = q^r + 1 - t_r stays in exact integers.

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ZetaError {
    #[error("trace {trace} violates the Hasse bound for q = {q} (no curve has this count)")]
    HasseViolation { q: u64, trace: i64 },
    #[error("q^{r} with q = {q} exceeds the representable range")]
    Overflow { q: u64, r: u32 },
}

/// The rational form (1 - aT + qT^2) / ((1 - T)(1 - qT)) of the zeta
/// function, with a the Frobenius trace: N_1 = q + 1 - a.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZetaData {
    q: u64,
    trace: i64,
}

impl ZetaData {
    /// Builds the zeta data from the count over the base field; rejects
    /// counts outside the Hasse window (trace^2 >= 4q).
    pub fn from_count(q: u64, n1: u64) -> Result<Self, ZetaError> {
        let trace_wide = q as i128 + 1 - n1 as i128;
        let trace = i64::try_from(trace_wide).unwrap_or(i64::MAX);
        if trace_wide * trace_wide >= 4 * q as i128 {
            return Err(ZetaError::HasseViolation { q, trace });
        }
        Ok(ZetaData { q, trace })
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn trace(&self) -> i64 {
        self.trace
    }

    /// Coefficients (1, -a, q) of the numerator 1 - aT + qT^2.
    pub fn numerator(&self) -> (i64, i64, i64) {
        (1, -self.trace, self.q as i64)
    }

    /// N_1 through N_{r_max}: N_r = q^r + 1 - t_r with the power sums t_r
    /// run as an exact integer recurrence. Fails loudly instead of wrapping
    /// when q^r leaves the 64-bit count range.
    pub fn lift_counts(&self, r_max: u32) -> Result<Vec<u64>, ZetaError> {
        let q = self.q as i128;
        let a = self.trace as i128;
        let mut counts = Vec::with_capacity(r_max as usize);
        let mut t_prev: i128 = 2; // t_0
        let mut t_cur: i128 = a; // t_1
        let mut q_pow: i128 = 1;
        for r in 1..=r_max {
            let overflow = ZetaError::Overflow { q: self.q, r };
            q_pow = q_pow.checked_mul(q).ok_or(overflow)?;
            let n = q_pow.checked_add(1 - t_cur).ok_or(overflow)?;
            counts.push(u64::try_from(n).map_err(|_| overflow)?);
            if r < r_max {
                let next = a
                    .checked_mul(t_cur)
                    .and_then(|at| q.checked_mul(t_prev).and_then(|qt| at.checked_sub(qt)))
                    .ok_or(overflow)?;
                t_prev = t_cur;
                t_cur = next;
            }
        }
        Ok(counts)
    }

    /// Canonical rendering "(1 - aT + qT^2) / ((1 - T)(1 - qT))" with the
    /// signed coefficients substituted; zero middle terms are elided and a
    /// unit coefficient renders as bare T.
    pub fn rational_render(&self) -> String {
        let mut numerator = String::from("1");
        let linear = -self.trace;
        match linear.cmp(&0) {
            std::cmp::Ordering::Greater => {
                if linear == 1 {
                    numerator.push_str(" + T");
                } else {
                    numerator.push_str(&format!(" + {linear}T"));
                }
            }
            std::cmp::Ordering::Less => {
                if linear == -1 {
                    numerator.push_str(" - T");
                } else {
                    numerator.push_str(&format!(" - {}T", -linear));
                }
            }
            std::cmp::Ordering::Equal => {}
        }
        numerator.push_str(&format!(" + {}T^2", self.q));
        format!("({numerator}) / ((1 - T)(1 - {}T))", self.q)
    }
}
