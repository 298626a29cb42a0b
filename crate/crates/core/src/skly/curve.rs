use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, scalar, Scalar};

/// A point of the curve. The derived order puts `O` first and then compares
/// affine points lexicographically on `(x, y)`; labels rely on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine { x: Scalar, y: Scalar },
}

impl ECPoint {
    pub fn affine(x: Scalar, y: Scalar) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    /// Parses `"x,y"` or `"O"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("o") || s.eq_ignore_ascii_case("inf") {
            return Ok(ECPoint::Infinity);
        }
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"x,y\", got {s:?}")))?;
        Ok(ECPoint::affine(parse_scalar(x.trim())?, parse_scalar(y.trim())?))
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({}, {})", format_scalar(x), format_scalar(y)),
        }
    }
}

impl Serialize for ECPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `y² = x(x - e1)(x - e2)`, i.e. `y² = x³ + a2 x² + a4 x` with
/// `a2 = -(e1 + e2)` and `a4 = e1 e2`, together with the translation point `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    e1: Scalar,
    e2: Scalar,
    a2: Scalar,
    a4: Scalar,
    tau: ECPoint,
}

impl Curve {
    pub fn new(e1: Scalar, e2: Scalar, tau: ECPoint) -> Result<Self> {
        if e1.is_zero() || e2.is_zero() || e1 == e2 {
            return Err(Error::Invalid(format!(
                "0, {}, {} must be distinct for a nonsingular curve",
                format_scalar(&e1),
                format_scalar(&e2)
            )));
        }
        let a2 = -(&e1 + &e2);
        let a4 = &e1 * &e2;
        let c = Curve { e1, e2, a2, a4, tau };
        if !c.contains(&c.tau) {
            return Err(Error::Invalid(format!("tau = {} is not on the curve", c.tau)));
        }
        Ok(c)
    }

    /// Parses `"e1,e2"` and a point `"x,y"`.
    pub fn parse(curve: &str, tau: &str) -> Result<Self> {
        let (a, b) = curve
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"e1,e2\", got {curve:?}")))?;
        Curve::new(parse_scalar(a.trim())?, parse_scalar(b.trim())?, ECPoint::parse(tau)?)
    }

    /// A curve `y² = x³ + a x² + b x + c` is accepted only when the cubic
    /// splits over the rationals with a root at 0; otherwise the 2-torsion
    /// is not representable and the curve is rejected.
    pub fn from_weierstrass(a: Scalar, b: Scalar, c: Scalar, tau: ECPoint) -> Result<Self> {
        if !c.is_zero() {
            return Err(Error::Unsupported("curve must have the form y² = x(x - e1)(x - e2); shift x first".into()));
        }
        // x² + a x + b must have rational roots
        let disc = &a * &a - scalar(4) * &b;
        let root = rational_sqrt(&disc)
            .ok_or_else(|| Error::Unsupported("2-torsion is not rational for this curve".into()))?;
        let half = Scalar::new(1.into(), 2.into());
        let e1 = (-&a + &root) * &half;
        let e2 = (-&a - &root) * &half;
        Curve::new(e1, e2, tau)
    }

    pub fn roots(&self) -> (&Scalar, &Scalar) {
        (&self.e1, &self.e2)
    }

    pub fn tau(&self) -> &ECPoint {
        &self.tau
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    fn rhs(&self, x: &Scalar) -> Scalar {
        x * x * x + &self.a2 * x * x + &self.a4 * x
    }

    pub fn neg(&self, p: &ECPoint) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), -y.clone()),
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return ECPoint::Infinity;
            }
            // tangent: (3x² + 2 a2 x + a4) / 2y
            (scalar(3) * x1 * x1 + scalar(2) * &self.a2 * x1 + &self.a4) / (scalar(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - &self.a2 - x1 - x2;
        let y3 = -(y1 + &slope * (&x3 - x1));
        ECPoint::affine(x3, y3)
    }

    pub fn sub(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        self.add(p, &self.neg(q))
    }

    /// `n·P` by double-and-add; negative `n` allowed.
    pub fn mul(&self, n: i64, p: &ECPoint) -> ECPoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn sum(&self, points: &[ECPoint]) -> ECPoint {
        points.iter().fold(ECPoint::Infinity, |acc, p| self.add(&acc, p))
    }

    /// `E₂ = {O, (0,0), (e1,0), (e2,0)}`.
    pub fn two_torsion(&self) -> [ECPoint; 4] {
        let zero = Scalar::zero();
        [
            ECPoint::Infinity,
            ECPoint::affine(zero.clone(), zero.clone()),
            ECPoint::affine(self.e1.clone(), zero.clone()),
            ECPoint::affine(self.e2.clone(), zero),
        ]
    }

    pub fn is_two_torsion(&self, p: &ECPoint) -> bool {
        self.add(p, p).is_infinity()
    }
}

fn rational_sqrt(q: &Scalar) -> Option<Scalar> {
    if q < &Scalar::zero() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    let r = Scalar::new(n, d);
    (&r * &r == *q).then_some(r)
}
