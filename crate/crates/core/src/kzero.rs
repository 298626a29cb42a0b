//! The Grothendieck lattice of a smooth noncommutative quadric, in the basis
//! `a, ℓ, ℓ', p` (structure sheaf, the two line classes, a point), and the
//! class ring `ℤ[t, t⁻¹]/(1 - t)ⁿ⁺¹` of quantum `ℙⁿ`.
//!
//! Classes are row vectors and `t` acts on the right: `x ↦ x·T`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{scalar, Matrix, Scalar};

pub type Mat4 = [[i64; 4]; 4];

pub const BASIS_NAMES: [&str; 4] = ["a", "ℓ", "ℓ'", "p"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct K0Class(pub [i64; 4]);

impl K0Class {
    pub const A: K0Class = K0Class([1, 0, 0, 0]);
    pub const L: K0Class = K0Class([0, 1, 0, 0]);
    pub const L2: K0Class = K0Class([0, 0, 1, 0]);
    pub const P: K0Class = K0Class([0, 0, 0, 1]);

    pub fn zero() -> Self {
        K0Class([0; 4])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn basis(i: usize) -> Self {
        let mut v = [0; 4];
        v[i] = 1;
        K0Class(v)
    }

    /// `m = a - ℓ`.
    pub fn m() -> Self {
        Self::A - Self::L
    }

    /// `m' = a - ℓ'`.
    pub fn m2() -> Self {
        Self::A - Self::L2
    }

    /// JSON array form `[x, y, z, w]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(K0Class(serde_json::from_str(text)?))
    }
}

impl std::ops::Add for K0Class {
    type Output = K0Class;
    fn add(self, o: K0Class) -> K0Class {
        K0Class(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl std::ops::Sub for K0Class {
    type Output = K0Class;
    fn sub(self, o: K0Class) -> K0Class {
        K0Class(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl std::ops::Mul<K0Class> for i64 {
    type Output = K0Class;
    fn mul(self, x: K0Class) -> K0Class {
        K0Class(x.0.map(|c| self * c))
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.0.iter().zip(BASIS_NAMES) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else { "+" };
            match (first, *c < 0) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, _) => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for K0Class {
    type Err = Error;

    /// Accepts `"2a - ℓ + 3p"`, ASCII `l`/`l'`, a prime written as `'` or
    /// `′`, or a JSON array.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            return K0Class::from_json(s);
        }
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'ℓ' => 'l',
                '′' => '\'',
                c => c,
            })
            .collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty K0 class".into()));
        }
        if compact == "0" {
            return Ok(K0Class::zero());
        }
        let mut out = [0i64; 4];
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
            } else if i > 0 {
                return Err(Error::Parse(format!("expected + or - in {s:?}")));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if start == i {
                1
            } else {
                compact[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {s:?}")))?
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let idx = match bytes.get(i) {
                Some(b'a') => 0,
                Some(b'l') if bytes.get(i + 1) == Some(&b'\'') => {
                    i += 1;
                    2
                }
                Some(b'l') => 1,
                Some(b'p') => 3,
                _ => return Err(Error::Parse(format!("expected one of a, ℓ, ℓ', p in {s:?}"))),
            };
            i += 1;
            out[idx] += sign * coeff;
        }
        Ok(K0Class(out))
    }
}

fn mat_mul(x: &Mat4, y: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| x[i][k] * y[k][j]).sum()))
}

fn transpose(x: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i]))
}

fn identity() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)))
}

fn mat_sub(x: &Mat4, y: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[i][j] - y[i][j]))
}

fn is_zero_mat(x: &Mat4) -> bool {
    x.iter().all(|r| r.iter().all(|&c| c == 0))
}

/// The `t`-action `T` and the Euler form `G`, both indexed by `(a, ℓ, ℓ', p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K0Lattice {
    pub t: Mat4,
    pub g: Mat4,
    t_inv: Mat4,
}

impl Default for K0Lattice {
    fn default() -> Self {
        lattice_init()
    }
}

/// `at = a - ℓ - ℓ' + p`, `ℓt = ℓ - p`, `ℓ't = ℓ' - p`, `pt = p`, and the
/// Euler form with rows `(a,·) = (1,1,1,1)`, `(ℓ,·) = (-1,0,-1,0)`,
/// `(ℓ',·) = (-1,-1,0,0)`, `(p,·) = (1,0,0,0)`.
pub fn lattice_init() -> K0Lattice {
    let t = [[1, -1, -1, 1], [0, 1, 0, -1], [0, 0, 1, -1], [0, 0, 0, 1]];
    let g = [[1, 1, 1, 1], [-1, 0, -1, 0], [-1, -1, 0, 0], [1, 0, 0, 0]];
    // T = 1 + N with N³ = 0, so T⁻¹ = 1 - N + N²
    let n = mat_sub(&t, &identity());
    let n2 = mat_mul(&n, &n);
    let t_inv = std::array::from_fn(|i| std::array::from_fn(|j| identity()[i][j] - n[i][j] + n2[i][j]));
    K0Lattice { t, g, t_inv }
}

impl K0Lattice {
    fn apply(&self, x: K0Class, m: &Mat4) -> K0Class {
        K0Class(std::array::from_fn(|j| (0..4).map(|i| x.0[i] * m[i][j]).sum()))
    }

    /// `x·t^k`; negative `k` uses the inverse action.
    pub fn act_t(&self, x: K0Class, k: i64) -> K0Class {
        let m = if k < 0 { &self.t_inv } else { &self.t };
        (0..k.unsigned_abs()).fold(x, |acc, _| self.apply(acc, m))
    }

    /// `x·(1 - t)^k` for `k >= 0`.
    pub fn one_minus_t(&self, x: K0Class, k: u32) -> K0Class {
        (0..k).fold(x, |acc, _| acc - self.act_t(acc, 1))
    }

    /// `x·f(t)` for a polynomial `f` given by coefficients of `t⁰, t¹, …`.
    pub fn act_poly(&self, x: K0Class, coeffs: &[i64]) -> K0Class {
        let mut acc = K0Class::zero();
        let mut power = x;
        for &c in coeffs {
            acc = acc + c * power;
            power = self.act_t(power, 1);
        }
        acc
    }

    pub fn euler(&self, x: K0Class, y: K0Class) -> i64 {
        (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| x.0[i] * self.g[i][j] * y.0[j])
            .sum()
    }

    pub fn intersect(&self, x: K0Class, y: K0Class) -> i64 {
        -self.euler(x, y)
    }

    /// `h = ℓ + ℓ't`.
    pub fn h(&self) -> K0Class {
        K0Class::L + self.act_t(K0Class::L2, 1)
    }

    /// Class of the fat point `F_{ω+iτ}`: `ℓ - ℓ' + (i+1)p`. Panics if the
    /// closed form disagrees with `ℓ - ℓ't^{i+1}`, which would mean the
    /// lattice tables are wrong.
    pub fn fat_class(&self, i: u32) -> K0Class {
        let closed = K0Class::L - K0Class::L2 + (i64::from(i) + 1) * K0Class::P;
        let via_t = K0Class::L - self.act_t(K0Class::L2, i64::from(i) + 1);
        assert_eq!(closed, via_t, "fat point class disagrees with ℓ - ℓ't^(i+1)");
        closed
    }

    /// `(1 - T)^k` as a matrix acting on row vectors.
    pub fn one_minus_t_matrix(&self, k: u32) -> Mat4 {
        let n = mat_sub(&identity(), &self.t);
        (0..k).fold(identity(), |acc, _| mat_mul(&acc, &n))
    }

    /// Kernel of `x ↦ x(1 - t)` as a rational basis of row vectors.
    pub fn fixed_sublattice(&self) -> Vec<[i64; 4]> {
        let n = self.one_minus_t_matrix(1);
        // x·N = 0  ⇔  Nᵀ xᵀ = 0
        let m = Matrix::from_rows(
            transpose(&n)
                .iter()
                .map(|r| r.iter().map(|&c| scalar(c)).collect())
                .collect(),
        );
        let k = m.kernel_basis();
        (0..k.cols())
            .map(|c| {
                let col = k.column(c);
                let lcm = col.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
                let scale = Scalar::from(lcm);
                std::array::from_fn(|i| i64::try_from((&col[i] * &scale).to_integer()).expect("small kernel entries"))
            })
            .collect()
    }

    /// Intersection numbers among `ℓ, ℓ', h, p`.
    pub fn intersection_table(&self) -> IntersectionTable {
        let classes = [K0Class::L, K0Class::L2, self.h(), K0Class::P];
        IntersectionTable {
            names: ["ℓ", "ℓ'", "h", "p"].map(String::from),
            values: std::array::from_fn(|i| std::array::from_fn(|j| self.intersect(classes[i], classes[j]))),
        }
    }

    pub fn relation_suite(&self) -> RelationSuite {
        let mut checks = Vec::new();
        let mut push = |name: &str, holds: bool, detail: String| {
            checks.push(IdentityCheck {
                name: name.into(),
                holds,
                detail,
            })
        };
        let (a, l, l2, p) = (K0Class::A, K0Class::L, K0Class::L2, K0Class::P);

        let v = self.one_minus_t(l, 2);
        push("ℓ(1-t)² = 0", v.is_zero(), v.to_string());
        let v = self.one_minus_t(l, 1);
        push("ℓ(1-t) = ℓ'(1-t) = p", v == p && self.one_minus_t(l2, 1) == p, v.to_string());
        let v = self.one_minus_t(a, 1);
        push("a(1-t) = ℓ + ℓ't", v == self.h(), v.to_string());
        push(
            "ℓ + ℓ't = ℓ' + ℓt",
            self.h() == l2 + self.act_t(l, 1),
            self.h().to_string(),
        );
        let v = self.one_minus_t(a, 2) - 2 * self.one_minus_t(l, 1);
        push("a(1-t)² - 2ℓ(1-t) = 0", v.is_zero(), v.to_string());

        let cube = self.one_minus_t_matrix(3);
        let square = self.one_minus_t_matrix(2);
        push(
            "(1-t)³ = 0 and (1-t)² ≠ 0",
            is_zero_mat(&cube) && !is_zero_mat(&square),
            format!("a(1-t)² = {}", self.one_minus_t(a, 2)),
        );

        let kernel = self.fixed_sublattice();
        let expected = [p, l - l2];
        let spans = kernel.len() == 2 && saturated_span_equal(&kernel, &expected.map(|c| c.0));
        push(
            "ker(1-t) = ℤp ⊕ ℤ(ℓ-ℓ')",
            spans,
            format!("rank {}", kernel.len()),
        );

        // (1 + 4t - t²)a - 2(m + m')
        let v = self.act_poly(a, &[1, 4, -1]) - 2 * (K0Class::m() + K0Class::m2());
        push("(1 + 4t - t²)a - 2(m + m') = 0", v.is_zero(), v.to_string());

        let mm = self.euler(K0Class::m(), K0Class::m2());
        push("(m, m') = 0", mm == 0, mm.to_string());

        let mut serre_fail = None;
        let mut twist_fail = None;
        for i in 0..4 {
            for j in 0..4 {
                let (x, y) = (K0Class::basis(i), K0Class::basis(j));
                if serre_fail.is_none() && self.euler(x, y) != self.euler(y, self.act_t(x, 2)) {
                    serre_fail = Some(format!("({}, {})", BASIS_NAMES[i], BASIS_NAMES[j]));
                }
                if twist_fail.is_none() && self.euler(self.act_t(x, 1), self.act_t(y, 1)) != self.euler(x, y) {
                    twist_fail = Some(format!("({}, {})", BASIS_NAMES[i], BASIS_NAMES[j]));
                }
            }
        }
        push(
            "(x, y) = (y, xt²) on basis pairs",
            serre_fail.is_none(),
            serre_fail.unwrap_or_else(|| "16 pairs".into()),
        );
        let tgt = mat_mul(&mat_mul(&self.t, &self.g), &transpose(&self.t));
        push(
            "(xt, yt) = (x, y), i.e. T G Tᵀ = G",
            twist_fail.is_none() && tgt == self.g,
            twist_fail.unwrap_or_else(|| "16 pairs".into()),
        );

        let mut fat_fail = None;
        for i in 0..=10 {
            let f = self.fat_class(i);
            if self.euler(f, f) != 2 || self.intersect(f, f) != -2 {
                fat_fail = Some(format!("i = {i}: (F, F) = {}", self.euler(f, f)));
                break;
            }
        }
        push(
            "fat points: (F, F) = 2, F.F = -2 for i ≤ 10",
            fat_fail.is_none(),
            fat_fail.unwrap_or_else(|| "i = 0..10".into()),
        );

        // The variant a(1 - t²) - 2ℓ(1 - t) sometimes printed in the
        // presentation of K₀(Q) does not vanish here.
        let displayed = self.act_poly(a, &[1, 0, -1]) - 2 * self.one_minus_t(l, 1);
        RelationSuite {
            all_hold: checks.iter().all(|c| c.holds),
            checks,
            displayed_variant: DisplayedVariant {
                relation: "a(1-t²) - 2ℓ(1-t)".into(),
                value: displayed,
                vanishes: displayed.is_zero(),
                note: "presumed misprint for a(1-t)² - 2ℓ(1-t), which does vanish".into(),
            },
        }
    }
}

/// Whether the integer rows `a` and `b` span the same rank-2 sublattice
/// of `ℤ⁴`, assuming both have rank 2 and `b` is saturated.
fn saturated_span_equal(a: &[[i64; 4]], b: &[[i64; 4]]) -> bool {
    let minors = |r: &[[i64; 4]]| -> Vec<i64> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                out.push(r[0][i] * r[1][j] - r[0][j] * r[1][i]);
            }
        }
        out
    };
    let (ma, mb) = (minors(a), minors(b));
    // same rational span ⇔ Plücker vectors proportional; then compare indices
    let proportional = (0..6).all(|i| (0..6).all(|j| ma[i] * mb[j] == ma[j] * mb[i]));
    let gcd = |v: &[i64]| v.iter().fold(0i64, |g, &x| g.gcd(&x));
    proportional && gcd(&mb) == 1 && gcd(&ma) == 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionTable {
    pub names: [String; 4],
    pub values: [[i64; 4]; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisplayedVariant {
    pub relation: String,
    pub value: K0Class,
    pub vanishes: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationSuite {
    pub all_hold: bool,
    pub checks: Vec<IdentityCheck>,
    pub displayed_variant: DisplayedVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjNKind {
    Structure,
    Hyperplane,
    Line,
    Point,
}

impl ProjNKind {
    /// Power of `1 - t` in the class of the corresponding structure sheaf.
    pub fn codimension(self) -> usize {
        match self {
            ProjNKind::Structure => 0,
            ProjNKind::Hyperplane => 1,
            ProjNKind::Line => 2,
            ProjNKind::Point => 3,
        }
    }
}

impl FromStr for ProjNKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "structure" => Ok(ProjNKind::Structure),
            "hyperplane" => Ok(ProjNKind::Hyperplane),
            "line" => Ok(ProjNKind::Line),
            "point" => Ok(ProjNKind::Point),
            _ => Err(Error::Invalid(format!(
                "unknown class kind {s:?}; expected structure, hyperplane, line or point"
            ))),
        }
    }
}

/// An element of `ℤ[t, t⁻¹]/(1 - t)ⁿ⁺¹`, stored in powers of `u = 1 - t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjNClass {
    pub n: usize,
    /// Coefficients of `u⁰, …, uⁿ`.
    pub u_coeffs: Vec<i64>,
}

impl ProjNClass {
    /// Coefficients in powers of `t` (degree at most `n`) of the same class.
    pub fn t_coeffs(&self) -> Vec<i64> {
        // (1 - t)^k = Σ_j C(k, j) (-t)^j
        let mut out = vec![0i64; self.n + 1];
        for (k, &c) in self.u_coeffs.iter().enumerate() {
            let mut binom = 1i64;
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                *slot += c * sign * binom;
                binom = binom * (k - j) as i64 / (j as i64 + 1);
            }
        }
        out
    }
}

impl fmt::Display for ProjNClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.u_coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "(1-t)")?,
                (1, _) => write!(f, "{mag}(1-t)")?,
                (_, 1) => write!(f, "(1-t)^{k}")?,
                _ => write!(f, "{mag}(1-t)^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Class of the structure sheaf of a linear subspace of codimension given by
/// `kind`, twisted by `t^shift`, in `K₀(ℙⁿ) = ℤ[t, t⁻¹]/(1 - t)ⁿ⁺¹`.
pub fn projn_class(n: usize, kind: ProjNKind, shift: i64) -> ProjNClass {
    let len = n + 1;
    let mut u = vec![0i64; len];
    if kind.codimension() < len {
        u[kind.codimension()] = 1;
    }
    // t = 1 - u; t⁻¹ = Σ uᵏ truncated
    let factor: Vec<i64> = if shift >= 0 {
        let mut f = vec![0; len];
        f[0] = 1;
        if len > 1 {
            f[1] = -1;
        }
        f
    } else {
        vec![1; len]
    };
    for _ in 0..shift.unsigned_abs() {
        let mut next = vec![0i64; len];
        for (i, &x) in u.iter().enumerate() {
            for (j, &y) in factor.iter().enumerate() {
                if i + j < len {
                    next[i + j] += x * y;
                }
            }
        }
        u = next;
    }
    ProjNClass { n, u_coeffs: u }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_values() {
        let k = lattice_init();
        assert_eq!(k.euler(K0Class::A, K0Class::A), 1);
        assert_eq!(k.euler(K0Class::L, K0Class::L2), -1);
        assert_eq!(k.euler(K0Class::m(), K0Class::m2()), 0);
        assert_eq!(k.intersect(k.h(), K0Class::L), 1);
        assert_eq!(k.intersect(K0Class::P, k.h()), 0);
    }

    #[test]
    fn t_action() {
        let k = lattice_init();
        for e in -3..=3 {
            assert_eq!(k.act_t(K0Class::P, e), K0Class::P);
            assert_eq!(k.act_t(k.act_t(K0Class::A, e), -e), K0Class::A);
        }
        assert_eq!(k.act_t(K0Class::L, 1), K0Class::L - K0Class::P);
        assert_eq!(k.act_t(K0Class::A, 2), "a - 2ℓ - 2ℓ' + 4p".parse().unwrap());
    }

    #[test]
    fn fat_points() {
        let k = lattice_init();
        assert_eq!(k.fat_class(0), "l - l' + p".parse().unwrap());
        for i in 0..=5 {
            let f = k.fat_class(i);
            assert_eq!(k.euler(f, f), 2);
            assert_eq!(k.intersect(f, f), -2);
        }
    }

    #[test]
    fn suite_holds_and_flags_variant() {
        let s = lattice_init().relation_suite();
        for c in &s.checks {
            assert!(c.holds, "{} failed: {}", c.name, c.detail);
        }
        assert!(!s.displayed_variant.vanishes);
        assert_eq!(s.displayed_variant.value, "2ℓ + 2ℓ' - 6p".parse().unwrap());
    }

    #[test]
    fn fixed_sublattice_is_rank_two() {
        let k = lattice_init();
        assert!(!saturated_span_equal(&[[0, 0, 0, 1], [0, 2, -2, 0]], &[[0, 0, 0, 1], [0, 1, -1, 0]]));
        assert_eq!(k.fixed_sublattice().len(), 2);
    }

    #[test]
    fn class_parsing_and_printing() {
        for s in ["a - ℓ - ℓ' + p", "-2ℓ' + 3p", "0", "a"] {
            let c: K0Class = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("[1,0,-1,2]".parse::<K0Class>().unwrap(), K0Class([1, 0, -1, 2]));
        assert_eq!("2*a+l′".parse::<K0Class>().unwrap(), K0Class([2, 0, 1, 0]));
        assert!("2x".parse::<K0Class>().is_err());
        assert!("a b".parse::<K0Class>().is_err());
    }

    #[test]
    fn projective_space_classes() {
        assert_eq!(projn_class(3, ProjNKind::Line, 0).u_coeffs, vec![0, 0, 1, 0]);
        assert_eq!(projn_class(3, ProjNKind::Point, 0).to_string(), "(1-t)^3");
        assert_eq!(projn_class(3, ProjNKind::Hyperplane, 0).t_coeffs(), vec![1, -1, 0, 0]);
        // t · t⁻¹ = 1
        let t = projn_class(3, ProjNKind::Structure, 1);
        assert_eq!(t.u_coeffs, vec![1, -1, 0, 0]);
        let tinv = projn_class(3, ProjNKind::Structure, -1);
        assert_eq!(tinv.u_coeffs, vec![1, 1, 1, 1]);
        // point class is killed by one more (1-t)
        assert_eq!(projn_class(3, ProjNKind::Point, 5).u_coeffs, vec![0, 0, 0, 1]);
        assert!("curve".parse::<ProjNKind>().is_err());
    }
}
