//! Radical, center and semisimplicity of finite-dimensional algebras, and
//! the smoothness / ruling verdict read off from them.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::cliff::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{span_basis, Matrix, Scalar};

/// Radical via the trace criterion: `{x : tr(L_{xy}) = 0 for all y}`
/// (valid in characteristic zero).
///
/// The result is cross-checked: it must be a two-sided ideal, nilpotent, and
/// the quotient algebra must have a nondegenerate trace form.
pub fn radical(c: &FinDimAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let rad = radical_unverified(c);
    verify_radical(c, &rad)?;
    Ok(rad)
}

fn radical_unverified(c: &FinDimAlgebra) -> Vec<Vec<Scalar>> {
    c.trace_gram().kernel_basis().columns()
}

/// Runs the three radical cross-checks; any failure means an arithmetic bug.
pub fn verify_radical(c: &FinDimAlgebra, rad: &[Vec<Scalar>]) -> Result<()> {
    let n = c.dim();
    let fail = |what: &str| Err(Error::Invalid(format!("radical cross-verification failed: {what}")));
    if !is_two_sided_ideal(c, rad) {
        return fail("not a two-sided ideal");
    }
    // nilpotency: rad^k = 0 for some k <= n + 1
    let mut power = span_basis(rad, n);
    let mut steps = 0;
    while !power.is_empty() {
        let mut next = Vec::new();
        for x in &power {
            for r in rad {
                next.push(c.mul(x, r));
            }
        }
        let next = span_basis(&next, n);
        if next.len() == power.len() {
            return fail("not nilpotent");
        }
        power = next;
        steps += 1;
        if steps > n + 1 {
            return fail("not nilpotent");
        }
    }
    let q = quotient(c, rad);
    if q.dim() > 0 && q.trace_gram().det().is_zero() {
        return fail("quotient trace form is degenerate");
    }
    Ok(())
}

fn is_two_sided_ideal(c: &FinDimAlgebra, ideal: &[Vec<Scalar>]) -> bool {
    let n = c.dim();
    let base = span_basis(ideal, n);
    for x in ideal {
        for i in 0..n {
            let e = c.basis_vector(i);
            for v in [c.mul(&e, x), c.mul(x, &e)] {
                let mut with = base.clone();
                with.push(v);
                if span_basis(&with, n).len() != base.len() {
                    return false;
                }
            }
        }
    }
    true
}

/// Quotient algebra `c / ideal` on the complement of the ideal's pivot coordinates.
pub fn quotient(c: &FinDimAlgebra, ideal: &[Vec<Scalar>]) -> FinDimAlgebra {
    let n = c.dim();
    let basis = span_basis(ideal, n);
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|v| !v.is_zero()).unwrap())
        .collect();
    let keep: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let project = |x: &[Scalar]| -> Vec<Scalar> {
        let mut y = x.to_vec();
        for (row, &p) in basis.iter().zip(&pivots) {
            let f = y[p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in y.iter_mut().zip(row) {
                *a -= &f * b;
            }
        }
        keep.iter().map(|&k| y[k].clone()).collect()
    };
    let products = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| project(c.basis_product(i, j))).collect())
        .collect();
    let labels = keep.iter().map(|&k| c.labels()[k].clone()).collect();
    FinDimAlgebra::new_unchecked(labels, products, project(c.identity()))
}

/// Basis of the center.
pub fn center(c: &FinDimAlgebra) -> Vec<Vec<Scalar>> {
    let n = c.dim();
    if n == 0 {
        return Vec::new();
    }
    let mut stacked: Option<Matrix> = None;
    for j in 0..n {
        let e = c.basis_vector(j);
        // x ↦ x e_j - e_j x
        let m = c.right_mult(&e).add(&c.left_mult(&e).scale(&-Scalar::one()));
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    stacked.unwrap().kernel_basis().columns()
}

/// Basis of the two-sided ideal generated by all commutators `[e_i, e_j]`.
pub fn commutator_ideal(c: &FinDimAlgebra) -> Vec<Vec<Scalar>> {
    let n = c.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = c.mul(&c.basis_vector(i), &c.basis_vector(j));
            let b = c.mul(&c.basis_vector(j), &c.basis_vector(i));
            gens.push(a.iter().zip(&b).map(|(x, y)| x - y).collect());
        }
    }
    ideal_closure(c, gens)
}

fn ideal_closure(c: &FinDimAlgebra, gens: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let n = c.dim();
    let mut basis = span_basis(&gens, n);
    loop {
        let mut all = basis.clone();
        for x in &basis {
            for i in 0..n {
                let e = c.basis_vector(i);
                all.push(c.mul(&e, x));
                all.push(c.mul(x, &e));
            }
        }
        let next = span_basis(&all, n);
        if next.len() == basis.len() {
            return next;
        }
        basis = next;
    }
}

/// No one-dimensional representations over any extension field:
/// `rad + [C, C]C = C`.
pub fn one_dim_reps_absent(c: &FinDimAlgebra, rad: &[Vec<Scalar>]) -> bool {
    let mut all = rad.to_vec();
    all.extend(commutator_ideal(c));
    span_basis(&all, c.dim()).len() == c.dim()
}

/// Ruling count, or "n/a" when the algebra does not meet the preconditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RulingCount {
    Count(usize),
    NotApplicable,
}

impl Serialize for RulingCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RulingCount::Count(n) => s.serialize_u64(*n as u64),
            RulingCount::NotApplicable => s.serialize_str("n/a"),
        }
    }
}

impl std::fmt::Display for RulingCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RulingCount::Count(n) => write!(f, "{n}"),
            RulingCount::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Invariants used to compare algebras without an explicit isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantTuple {
    pub dim: usize,
    pub radical_dim: usize,
    pub center_dim: usize,
    pub ss_center_dim: usize,
    pub commutator_codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub radical_dim: usize,
    pub center_dim: usize,
    /// Dimension of the center of `C / rad C`.
    pub ss_center_dim: usize,
    pub commutator_codim: usize,
    pub one_dim_reps_absent: bool,
    pub ruling_count: RulingCount,
    pub smooth: bool,
}

impl AnalysisReport {
    pub fn invariants(&self) -> InvariantTuple {
        InvariantTuple {
            dim: self.dim,
            radical_dim: self.radical_dim,
            center_dim: self.center_dim,
            ss_center_dim: self.ss_center_dim,
            commutator_codim: self.commutator_codim,
        }
    }
}

/// Full analysis. `smooth` is semisimplicity; the ruling count is the
/// number of simple blocks over the algebraic closure, which for an
/// 8-dimensional algebra without one-dimensional modules equals the
/// dimension of the center of the semisimple quotient.
pub fn analyze(c: &FinDimAlgebra) -> Result<AnalysisReport> {
    let rad = radical(c)?;
    let q = quotient(c, &rad);
    let comm = commutator_ideal(c);
    let no_chars = one_dim_reps_absent(c, &rad);
    let ss_center_dim = center(&q).len();
    let ruling_count = if no_chars && c.dim() == 8 {
        RulingCount::Count(ss_center_dim)
    } else {
        RulingCount::NotApplicable
    };
    Ok(AnalysisReport {
        dim: c.dim(),
        radical_dim: rad.len(),
        center_dim: center(c).len(),
        ss_center_dim,
        commutator_codim: c.dim() - comm.len(),
        one_dim_reps_absent: no_chars,
        ruling_count,
        smooth: rad.is_empty(),
    })
}
