use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// Element of the Laurent polynomial ring over the integers, Z[t, 1/t].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    // exponent -> nonzero coefficient
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        LaurentPoly::from_coeffs(0, &[1, -1])
    }

    /// Dense coefficients starting at exponent `lowest`.
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(lowest + k as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_bigint_coeffs(lowest: i64, coeffs: &[BigInt]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(lowest + k as i64, c.clone());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// `self(-t)`.
    pub fn negate_variable(&self) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in self.terms() {
            let c = if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            p.add_term(e, c);
        }
        p
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in self.terms() {
            let c = Scalar::from_integer(c.clone());
            let tp = if e >= 0 {
                num_traits::pow(t.clone(), e as usize)
            } else {
                num_traits::pow(t.recip(), (-e) as usize)
            };
            acc += c * tp;
        }
        acc
    }

    /// Writes `self = (1 - t)^r * g` with `g(1) != 0`; returns `(r, g)`.
    /// The zero polynomial returns `None`.
    pub fn split_one_minus_t(&self) -> Option<(u32, LaurentPoly)> {
        if self.is_zero() {
            return None;
        }
        let mut g = self.clone();
        let mut r = 0;
        while g.eval(&Scalar::one()).is_zero() {
            g = g.div_one_minus_t();
            r += 1;
        }
        Some((r, g))
    }

    // Exact division by (1 - t); caller guarantees g(1) == 0.
    fn div_one_minus_t(&self) -> LaurentPoly {
        let lo = self.low_degree().unwrap();
        let hi = self.high_degree().unwrap();
        // self = (1 - t) q, q_e = sum_{k <= e} self_k
        let mut q = LaurentPoly::zero();
        let mut running = BigInt::zero();
        for e in lo..hi {
            running += self.coeff(e);
            q.add_term(e, running.clone());
        }
        debug_assert_eq!(&(&LaurentPoly::one_minus_t() * &q), self);
        q
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// A ratio of Laurent polynomials, read as a formal Laurent series in `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Order of the pole at `t = 1` and the leading value there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleData {
    /// Pole order (0 when the series is regular at `t = 1`).
    pub order: i64,
    /// `lim_{t->1} (1-t)^order * s(t)`; for order 1 this is the value the
    /// coefficients are eventually constant at.
    pub leading_value: Scalar,
}

impl RationalSeries {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, SeriesError> {
        if denominator.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn polynomial(p: LaurentPoly) -> Self {
        RationalSeries {
            numerator: p,
            denominator: LaurentPoly::one(),
        }
    }

    /// `numerator / (1 - t)^power`.
    pub fn over_one_minus_t_pow(numerator: LaurentPoly, power: u32) -> Self {
        RationalSeries {
            numerator,
            denominator: LaurentPoly::one_minus_t().pow(power),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> RationalSeries {
        RationalSeries {
            numerator: &self.numerator * p,
            denominator: self.denominator.clone(),
        }
    }

    /// `self(-t)`.
    pub fn negate_variable(&self) -> RationalSeries {
        RationalSeries {
            numerator: self.numerator.negate_variable(),
            denominator: self.denominator.negate_variable(),
        }
    }

    /// Lowest exponent in the expansion (may be negative).
    pub fn valuation_bound(&self) -> i64 {
        self.numerator.low_degree().unwrap_or(0) - self.denominator.low_degree().unwrap_or(0)
    }

    /// Coefficients of `t^0 .. t^n` of the formal expansion.
    pub fn expand(&self, n: usize) -> Vec<Scalar> {
        let shift = self.denominator.low_degree().expect("nonzero denominator");
        let d0 = Scalar::from_integer(self.denominator.coeff(shift));
        let inv = d0.recip();
        // self = num * t^-shift / d(t) with d(0) = d0 != 0
        let lo = self.valuation_bound().min(0);
        let len = (n as i64 - lo + 1) as usize;
        let mut out: Vec<Scalar> = vec![Scalar::zero(); len];
        for k in 0..len {
            let e = lo + k as i64;
            let mut acc = Scalar::from_integer(self.numerator.coeff(e + shift));
            for (de, dc) in self.denominator.terms() {
                let j = de - shift;
                if j == 0 || j > k as i64 {
                    continue;
                }
                acc -= Scalar::from_integer(dc.clone()) * &out[k - j as usize];
            }
            out[k] = acc * &inv;
        }
        out.split_off((-lo) as usize)
    }

    /// Expansion when all coefficients are integers.
    pub fn expand_integers(&self, n: usize) -> Option<Vec<BigInt>> {
        self.expand(n)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn pole_data(&self) -> PoleData {
        let (rd, gd) = self.denominator.split_one_minus_t().expect("nonzero denominator");
        match self.numerator.split_one_minus_t() {
            None => PoleData {
                order: 0,
                leading_value: Scalar::zero(),
            },
            // a zero at t = 1 is reported as pole order 0 with value s(1) = 0
            Some((rn, _)) if rn > rd => PoleData {
                order: 0,
                leading_value: Scalar::zero(),
            },
            Some((rn, gn)) => PoleData {
                order: (rd - rn) as i64,
                leading_value: gn.eval(&Scalar::one()) / gd.eval(&Scalar::one()),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_integer(x.into())).collect()
    }

    #[test]
    fn geometric_series() {
        let s = RationalSeries::over_one_minus_t_pow(LaurentPoly::one(), 1);
        assert_eq!(s.expand(3), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn quadric_hilbert_series() {
        let one_plus_t = LaurentPoly::from_coeffs(0, &[1, 1]);
        let s = RationalSeries::over_one_minus_t_pow(one_plus_t.clone(), 3);
        assert_eq!(s.expand(4), ints(&[1, 4, 9, 16, 25]));
        let dual = RationalSeries::over_one_minus_t_pow(one_plus_t.pow(3), 1);
        assert_eq!(dual.expand(7), ints(&[1, 4, 7, 8, 8, 8, 8, 8]));
    }

    #[test]
    fn negative_exponents_expand() {
        // t^-1 / (1 - t) = t^-1 + 1 + t + ...
        let s = RationalSeries::over_one_minus_t_pow(LaurentPoly::monomial(1, -1), 1);
        assert_eq!(s.expand(2), ints(&[1, 1, 1]));
        assert_eq!(s.valuation_bound(), -1);
    }

    #[test]
    fn non_unit_denominator_gives_rationals() {
        let s = RationalSeries::new(LaurentPoly::one(), LaurentPoly::from_coeffs(0, &[2, -1])).unwrap();
        let e = s.expand(2);
        assert_eq!(e[2], Scalar::new(1.into(), 8.into()));
        assert!(s.expand_integers(2).is_none());
    }

    #[test]
    fn pole_examples() {
        let s = RationalSeries::over_one_minus_t_pow(LaurentPoly::from_coeffs(0, &[2, 1]), 1);
        let pd = s.pole_data();
        assert_eq!(pd.order, 1);
        assert_eq!(pd.leading_value, Scalar::from_integer(3.into()));

        let h = RationalSeries::over_one_minus_t_pow(LaurentPoly::from_coeffs(0, &[1, 1]), 3);
        assert_eq!(h.pole_data().order, 3);

        let p = RationalSeries::polynomial(LaurentPoly::one_minus_t().pow(2));
        assert_eq!(p.pole_data().order, 0);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_coeffs(-1, &[2, 0, -1, 1]);
        assert_eq!(p.to_string(), "2t^-1 - t + t^2");
    }
}
