//! Exact integer-coefficient polynomials and truncated power series in one
//! variable `t`.
//!
//! Every Poincaré and Hilbert series in this crate is carried by one of the
//! two types here. Coefficients are `i64` throughout; all arithmetic is
//! exact and there is no floating point anywhere in the workspace.
//!
//! Invariants:
//! - `Poly`: the trailing (highest-degree) stored coefficient is nonzero
//!   unless the polynomial is zero.
//! - `Series`: coefficients are exact for degrees `0..=truncation_order`;
//!   binary operations truncate to the minimum of the two orders.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Default truncation order used by all series identities.
pub const DEFAULT_TRUNCATION: usize = 24;

/// A polynomial in `t` with exact integer coefficients, stored densely
/// (degree 0 first, trailing coefficient nonzero).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// `c * t^d`
    pub fn monomial(c: i64, d: usize) -> Self {
        if c == 0 {
            return Poly::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0i64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + other.coeff(i);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Substitute `t -> t^s`. Requires `s >= 1`.
    pub fn substitute_power(&self, s: usize) -> Poly {
        assert!(s >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0i64; (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = *c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Evaluate at `t = -1` (the Euler-characteristic specialization).
    pub fn eval_signed(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { *c } else { -*c })
            .sum()
    }

    /// Evaluate at `t = 1` (total count).
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// View as a truncated series of order `n` (coefficients above `n` must
    /// be zero for the embedding to be faithful; they are dropped).
    pub fn to_series(&self, n: usize) -> Series {
        let mut coeffs = vec![0i64; n + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i);
        }
        Series { coeffs }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A power series in `t` truncated at a fixed order: coefficients are stored
/// (and exact) for degrees `0..=truncation_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<i64>, // length = truncation_order + 1
}

impl Series {
    pub fn zero(n: usize) -> Self {
        Series {
            coeffs: vec![0; n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Series::zero(n);
        s.coeffs[0] = 1;
        s
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least degree 0");
        Series { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Retruncate to order `n` (must not exceed the current order).
    pub fn truncate(&self, n: usize) -> Series {
        assert!(n <= self.truncation_order());
        Series {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![0i64; n + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs[i] + other.coeffs[i];
        }
        Series { coeffs }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![0i64; n + 1];
        for i in 0..=n {
            if self.coeffs[i] == 0 {
                continue;
            }
            for j in 0..=(n - i) {
                coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        Series { coeffs }
    }

    /// Exact division of series: returns `q` with `q * den = self` up to the
    /// common truncation order. The denominator must be a unit, i.e. have
    /// constant coefficient `+1` or `-1`.
    pub fn div_exact(&self, den: &Series) -> Result<Series, Error> {
        let d0 = den.coeff(0);
        if d0 != 1 && d0 != -1 {
            return Err(Error::NonUnitDenominator(d0));
        }
        let n = self.truncation_order().min(den.truncation_order());
        let mut q = vec![0i64; n + 1];
        for i in 0..=n {
            let mut acc = self.coeffs[i];
            #[allow(clippy::needless_range_loop)]
            for j in 0..i {
                acc -= q[j] * den.coeff(i - j);
            }
            // d0 = ±1 so the division below is exact.
            q[i] = acc / d0;
        }
        Ok(Series { coeffs: q })
    }

    /// Expansion of `prod_d 1/(1 - t^d)` over the given generator degrees,
    /// to order `n`. An empty degree list yields the constant series 1.
    pub fn from_generator_degrees(degrees: &[usize], n: usize) -> Series {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = 1;
        for &d in degrees {
            assert!(d >= 1, "generator degrees must be positive");
            for i in d..=n {
                coeffs[i] += coeffs[i - d];
            }
        }
        Series { coeffs }
    }

    /// `prod_d (1 - t^d)` as a series, to order `n`.
    pub fn from_relation_degrees(degrees: &[usize], n: usize) -> Series {
        let mut s = Series::one(n);
        for &d in degrees {
            let mut factor = Series::zero(n);
            factor.coeffs[0] = 1;
            if d <= n {
                factor.coeffs[d] = -1;
            }
            s = s.mul(&factor);
        }
        s
    }

    /// The polynomial with the same coefficients, if every stored
    /// coefficient beyond some degree is zero anyway. This does not prove
    /// the series is a polynomial, only that it looks like one to the
    /// truncation order.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Evaluate the stored coefficients at `t = 1`. Meaningful when the
    /// series is known to be a polynomial within the truncation order.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// True when `self` and `poly` agree coefficientwise up to the
    /// truncation order (and the polynomial has no higher terms).
    pub fn agrees_with_poly(&self, poly: &Poly) -> bool {
        if let Some(d) = poly.degree() {
            if d > self.truncation_order() {
                return false;
            }
        }
        (0..=self.truncation_order()).all(|i| self.coeff(i) == poly.coeff(i))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "0")?;
        } else {
            write!(f, "{p}")?;
        }
        write!(f, " + O(t^{})", self.truncation_order() + 1)
    }
}

/// Render a polynomial as LaTeX, e.g. `1 + 3t^{2} + 3t^{4} + t^{6}`.
pub fn poly_to_latex(p: &Poly) -> String {
    use core::fmt::Write;
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    let mut first = true;
    for (d, &c) in p.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if first {
            if c < 0 {
                out.push('-');
            }
            first = false;
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.unsigned_abs();
        match d {
            0 => {
                let _ = write!(out, "{a}");
            }
            _ => {
                if a != 1 {
                    let _ = write!(out, "{a}");
                }
                if d == 1 {
                    out.push('t');
                } else {
                    let _ = write!(out, "t^{{{d}}}");
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn add_basic() {
        // (1+t) + (1+t^2) = 2 + t + t^2
        assert_eq!(p(&[1, 1]).add(&p(&[1, 0, 1])), p(&[2, 1, 1]));
        // p + 0 = p
        assert_eq!(p(&[3, 0, 5]).add(&Poly::zero()), p(&[3, 0, 5]));
        // additive inverse collapses to zero
        let a = p(&[1, 0, 3, 0, 3, 0, 1]);
        assert_eq!(a.add(&a.neg()), Poly::zero());
    }

    #[test]
    fn mul_basic() {
        // (1+t^2)^3 = 1 + 3t^2 + 3t^4 + t^6
        let q = p(&[1, 0, 1]);
        assert_eq!(q.mul(&q).mul(&q), p(&[1, 0, 3, 0, 3, 0, 1]));
        assert_eq!(p(&[1, 2, 2, 1]).mul(&Poly::one()), p(&[1, 2, 2, 1]));
        // (1+t)(1+t+t^2) = 1 + 2t + 2t^2 + t^3, the length generating
        // function of the symmetric group on three letters
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1, 1])), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn substitute_power_basic() {
        assert_eq!(p(&[1, 1]).substitute_power(2), p(&[1, 0, 1]));
        assert_eq!(p(&[1, 2, 2, 1]).substitute_power(1), p(&[1, 2, 2, 1]));
        assert_eq!(
            p(&[1, 2, 2, 1]).substitute_power(2),
            p(&[1, 0, 2, 0, 2, 0, 1])
        );
    }

    #[test]
    fn eval_signed_basic() {
        assert_eq!(p(&[1, 0, 1]).eval_signed(), 2);
        assert_eq!(p(&[1, 1]).eval_signed(), 0);
        assert_eq!(p(&[1, 0, 3, 0, 3, 0, 1]).eval_signed(), 8);
    }

    #[test]
    fn generator_degrees() {
        // two generators of degree 2: 1 + 2t^2 + 3t^4
        assert_eq!(
            Series::from_generator_degrees(&[2, 2], 4),
            Series::from_coeffs(vec![1, 0, 2, 0, 3])
        );
        assert_eq!(Series::from_generator_degrees(&[], 4), Series::one(4));
        assert_eq!(
            Series::from_generator_degrees(&[4], 8),
            Series::from_coeffs(vec![1, 0, 0, 0, 1, 0, 0, 0, 1])
        );
    }

    #[test]
    fn div_exact_basic() {
        // (1 - t^4)/(1 - t^2) = 1 + t^2
        let num = Series::from_relation_degrees(&[4], 6);
        let den = Series::from_relation_degrees(&[2], 6);
        let q = num.div_exact(&den).unwrap();
        assert!(q.agrees_with_poly(&p(&[1, 0, 1])));
        // p / 1 = p
        let s = Series::from_generator_degrees(&[1, 2], 6);
        assert_eq!(s.div_exact(&Series::one(6)).unwrap(), s);
        // 1/(1-t^2)^2 divided by 1/((1-t^2)(1-t^4)) = (1-t^4)/(1-t^2) = 1+t^2
        let a = Series::from_generator_degrees(&[2, 2], 6);
        let b = Series::from_generator_degrees(&[2, 4], 6);
        assert!(a.div_exact(&b).unwrap().agrees_with_poly(&p(&[1, 0, 1])));
    }

    #[test]
    fn div_rejects_non_unit() {
        let s = Series::from_coeffs(vec![2, 1, 1]);
        assert!(matches!(
            Series::one(2).div_exact(&s),
            Err(Error::NonUnitDenominator(2))
        ));
    }

    #[test]
    fn display_matches_expected_format() {
        use alloc::format;
        assert_eq!(format!("{}", p(&[1, 0, 3, 0, 3, 0, 1])), "1 + 3t^2 + 3t^4 + t^6");
        assert_eq!(format!("{}", p(&[1, 1])), "1 + t");
        assert_eq!(format!("{}", Poly::zero()), "0");
        assert_eq!(format!("{}", p(&[0, -2, 1])), "-2t + t^2");
    }
}
