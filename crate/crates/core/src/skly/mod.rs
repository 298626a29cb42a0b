//! The pencil of quadrics attached to a Sklyanin algebra, modelled through
//! the group law of an elliptic curve with a translation point `τ`.

mod curve;
mod pencil;

pub use curve::{Curve, ECPoint};
pub use pencil::{
    commutative_pencil_oracle, pencil_discriminant, FrameReport, PencilReport, PencilSample, RationalRootCheck,
};

use serde::Serialize;

use crate::error::{Error, Result};

/// Canonical representative of the pair `{z, -z - 2τ}`: the smaller point in
/// the order `O < affine`, affine points compared on `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PencilLabel(pub ECPoint);

impl std::fmt::Display for PencilLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q_{}", self.0)
    }
}

/// Line through two points of the curve, stored with `p <= q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SecantLine {
    pub p: ECPoint,
    pub q: ECPoint,
}

impl SecantLine {
    pub fn new(a: ECPoint, b: ECPoint) -> Self {
        if a <= b {
            SecantLine { p: a, q: b }
        } else {
            SecantLine { p: b, q: a }
        }
    }
}

impl Curve {
    /// The partner `-z - 2τ` of `z`.
    pub fn partner(&self, z: &ECPoint) -> ECPoint {
        let two_tau = self.mul(2, self.tau());
        self.neg(&self.add(z, &two_tau))
    }

    pub fn label(&self, z: &ECPoint) -> PencilLabel {
        let w = self.partner(z);
        PencilLabel(if *z <= w { z.clone() } else { w })
    }

    /// `Q_z` is singular iff `z + τ` is 2-torsion.
    pub fn is_singular(&self, z: &PencilLabel) -> bool {
        self.is_two_torsion(&self.add(&z.0, self.tau()))
    }

    /// Labels `Q_{ω-τ}` for `ω ∈ E₂`, in the order of [`Curve::two_torsion`].
    /// Collisions (possible when `τ` has small order) are kept, so the
    /// result is the multiset.
    pub fn singular_labels(&self) -> Vec<PencilLabel> {
        self.two_torsion()
            .iter()
            .map(|w| self.label(&self.sub(w, self.tau())))
            .collect()
    }

    pub fn line_on_quadric(&self, l: &SecantLine, z: &PencilLabel) -> bool {
        let s = self.add(&l.p, &l.q);
        s == z.0 || s == self.partner(&z.0)
    }

    /// Two lines on `Q_z` lie in the same ruling iff `p + q = p' + q'`.
    pub fn same_ruling(&self, l1: &SecantLine, l2: &SecantLine, z: &PencilLabel) -> Result<bool> {
        for l in [l1, l2] {
            if !self.line_on_quadric(l, z) {
                return Err(Error::Invalid(format!("line through {} and {} is not on {z}", l.p, l.q)));
            }
        }
        Ok(self.add(&l1.p, &l1.q) == self.add(&l2.p, &l2.q))
    }

    /// Partition of `lines` (all on `Q_z`) into rulings, in first-seen order.
    pub fn ruling_classes(&self, lines: &[SecantLine], z: &PencilLabel) -> Result<Vec<Vec<SecantLine>>> {
        let mut classes: Vec<Vec<SecantLine>> = Vec::new();
        for l in lines {
            let mut placed = false;
            for class in classes.iter_mut() {
                if self.same_ruling(&class[0], l, z)? {
                    class.push(l.clone());
                    placed = true;
                    break;
                }
            }
            if !placed {
                if !self.line_on_quadric(l, z) {
                    return Err(Error::Invalid(format!("line through {} and {} is not on {z}", l.p, l.q)));
                }
                classes.push(vec![l.clone()]);
            }
        }
        Ok(classes)
    }

    /// Lines `p + q = s` with `p` running over `points`.
    pub fn lines_with_sum(&self, s: &ECPoint, points: &[ECPoint]) -> Vec<SecantLine> {
        points.iter().map(|p| SecantLine::new(p.clone(), self.sub(s, p))).collect()
    }

    /// Sampled lines on `Q_z`: both families `p + q = z` and `p + q = -z - 2τ`.
    pub fn sample_lines(&self, z: &PencilLabel, points: &[ECPoint]) -> Vec<SecantLine> {
        let mut lines = self.lines_with_sum(&z.0, points);
        lines.extend(self.lines_with_sum(&self.partner(&z.0), points));
        lines
    }

    /// Four points are coplanar iff they sum to `O`.
    pub fn coplanar(&self, points: &[ECPoint; 4]) -> bool {
        self.sum(points).is_infinity()
    }

    /// The fourth point `-p - q - r` completing a plane section.
    pub fn complete_plane(&self, p: &ECPoint, q: &ECPoint, r: &ECPoint) -> ECPoint {
        self.neg(&self.sum(&[p.clone(), q.clone(), r.clone()]))
    }

    /// The line meets the fat point `F_{ω+iτ}` iff `p + q = ω + iτ`.
    pub fn fat_point_lines(&self, omega: &ECPoint, i: i64, l: &SecantLine) -> Result<bool> {
        if !self.is_two_torsion(omega) {
            return Err(Error::Invalid(format!("{omega} is not a 2-torsion point")));
        }
        let target = self.add(omega, &self.mul(i, self.tau()));
        Ok(self.add(&l.p, &l.q) == target)
    }

    /// Sums of the two lines in the exact sequence attached to `F_{ω+iτ}`:
    /// `ω + iτ` and `ω - (i + 2)τ`.
    pub fn fat_point_sequence_sums(&self, omega: &ECPoint, i: i64) -> (ECPoint, ECPoint) {
        (
            self.add(omega, &self.mul(i, self.tau())),
            self.sub(omega, &self.mul(i + 2, self.tau())),
        )
    }

    /// Points `nτ + ω` for `|n| <= range` and `ω ∈ E₂`.
    pub fn sample_points(&self, range: i64) -> Vec<ECPoint> {
        let mut out = Vec::new();
        for n in -range..=range {
            let base = self.mul(n, self.tau());
            for w in self.two_torsion() {
                out.push(self.add(&base, &w));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// `h⁰(F_{ω+iτ}) = i + 1`.
pub fn fat_point_h0(i: u64) -> u64 {
    i + 1
}
