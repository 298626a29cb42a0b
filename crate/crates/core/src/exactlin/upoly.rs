use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_default();
                    let b = other.coeffs.get(i).cloned().unwrap_or_default();
                    a + b
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots over the algebraic closure, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Number of distinct roots over the algebraic closure; `None` for zero.
    pub fn distinct_root_count(&self) -> Option<usize> {
        self.degree()?;
        self.squarefree_part().degree()
    }

    /// Lagrange interpolation through distinct nodes (Newton divided differences).
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> UniPoly {
        let n = points.len();
        let xs: Vec<&Scalar> = points.iter().map(|p| &p.0).collect();
        let mut dd: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = xs[i] - xs[i - level];
                assert!(!den.is_zero(), "interpolation nodes must be distinct");
                dd[i] = num / den;
            }
        }
        let mut poly = UniPoly::zero();
        for i in (0..n).rev() {
            // poly = poly * (x - xs[i]) + dd[i]
            let lin = UniPoly::new(vec![-xs[i].clone(), Scalar::one()]);
            poly = poly.mul(&lin).add(&UniPoly::constant(dd[i].clone()));
        }
        poly
    }

    /// Rational roots via the rational root test on the integer-scaled
    /// polynomial. Gives up (returns only the root 0, if any) when the
    /// extreme coefficients exceed 10^12, since divisors are found by trial
    /// division.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let Some(deg) = self.degree() else { return out };
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let lo = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
        if lo > 0 {
            out.push(Scalar::zero());
        }
        let (Ok(a0), Ok(an)) = (i64::try_from(ints[lo].abs()), i64::try_from(ints[deg].abs())) else {
            return out;
        };
        if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
            return out;
        }
        for p in divisors(a0) {
            for q in divisors(an) {
                for r in [Scalar::new(p.into(), q.into()), Scalar::new((-p).into(), q.into())] {
                    if self.eval(&r).is_zero() {
                        out.push(r);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn divisors(n: i64) -> Vec<i64> {
    let mut d = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            d.push(k);
            d.push(n / k);
        }
        k += 1;
    }
    d
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_product() {
        // (x - 1)(3x - 7)(x + 2)
        let p = UniPoly::from_i64(&[-1, 1])
            .mul(&UniPoly::from_i64(&[-7, 3]))
            .mul(&UniPoly::from_i64(&[2, 1]));
        assert_eq!(p.rational_roots(), vec![q(-2), q(1), Scalar::new(7.into(), 3.into())]);
        assert!(UniPoly::from_i64(&[1, 0, 1]).rational_roots().is_empty());
        assert_eq!(UniPoly::from_i64(&[0, 0, 1]).rational_roots(), vec![q(0)]);
    }

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = UniPoly::from_i64(&[3, 0, -2, 5]);
        let pts: Vec<_> = (-2..2).map(|x| (q(x), p.eval(&q(x)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), p);
    }

    #[test]
    fn squarefree_counts_distinct_roots() {
        // (x-1)^2 (x+2) (x^2+1)
        let p = UniPoly::from_i64(&[-1, 1])
            .mul(&UniPoly::from_i64(&[-1, 1]))
            .mul(&UniPoly::from_i64(&[2, 1]))
            .mul(&UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(p.distinct_root_count(), Some(4));
        assert_eq!(UniPoly::from_i64(&[7]).distinct_root_count(), Some(0));
        assert_eq!(UniPoly::zero().distinct_root_count(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = UniPoly::from_i64(&[1, 2, 3, 4, 5]);
        let b = UniPoly::from_i64(&[1, 0, 2]);
        let (qq, r) = a.div_rem(&b);
        assert_eq!(qq.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
