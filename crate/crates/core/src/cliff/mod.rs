//! The hypersurface `A = S/(z)`, its dual central element `w`, and the
//! eight-dimensional algebra `C(A) = A^![w^{-1}]_0`.

mod algebra;
mod mf;
mod oracle;

pub use algebra::{matrix_algebra, product_algebra, upper_triangular_algebra, AlgebraFile, FinDimAlgebra};
pub use mf::{
    linear_matrix_to_json, parse_linear_matrix, verify_matrix_factorization, LinearMatrix, MatrixFactorizationReport,
    MfWitness,
};
pub use oracle::{diagonalize_form, even_clifford_oracle, symmetric_form};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::findim::{self, InvariantTuple};
use crate::qalg::{self, koszul_dual, Element, GradedTable, QuadraticPresentation, RegularityCertificate};

/// Degree through which the dual algebra is built and `w` is certified.
pub const DUAL_DEGREE: usize = 8;

/// `S`, a lift of `z ∈ S_2` to `V ⊗ V`, and `A = S/(z)`.
#[derive(Debug, Clone)]
pub struct Hypersurface {
    s: QuadraticPresentation,
    z_lift: Vec<Scalar>,
    a: QuadraticPresentation,
}

impl Hypersurface {
    /// Any lift works: `R_A = R_S + k·lift` does not depend on the choice.
    pub fn new(s: QuadraticPresentation, z_lift: Vec<Scalar>) -> Result<Self> {
        let g = s.num_generators();
        if z_lift.len() != g * g {
            return Err(Error::Invalid(format!("z has {} coefficients, expected {}", z_lift.len(), g * g)));
        }
        if s.relation_span_contains(&z_lift) {
            return Err(Error::hypothesis("z nonzero in S_2", "z lies in the relation space of S"));
        }
        let mut rels = s.relations().to_vec();
        rels.push(z_lift.clone());
        let a = QuadraticPresentation::new(s.generators().to_vec(), rels)?;
        Ok(Hypersurface { s, z_lift, a })
    }

    pub fn s(&self) -> &QuadraticPresentation {
        &self.s
    }

    pub fn a(&self) -> &QuadraticPresentation {
        &self.a
    }

    pub fn z_lift(&self) -> &[Scalar] {
        &self.z_lift
    }

    /// Class of `z` in a table for `S`.
    pub fn z_in(&self, s_table: &GradedTable) -> Result<Element> {
        s_table.tensor(2, &self.z_lift)
    }

    /// Checks that `z` is central in `S` and regular through degree `bound`.
    pub fn check_z(&self, s_table: &GradedTable, bound: usize) -> Result<RegularityCertificate> {
        let z = self.z_in(s_table)?;
        let cert = qalg::is_regular_central(s_table, &z, bound)?;
        match cert {
            RegularityCertificate::Regular { .. } => Ok(cert),
            RegularityCertificate::NotCentral => Err(Error::hypothesis("z central in S", "z fails to commute with a generator")),
            RegularityCertificate::NotRegular { degree, side } => Err(Error::hypothesis(
                "z regular in S",
                format!("{side:?} multiplication by z is not injective on S_{degree}"),
            )),
        }
    }
}

/// The dual algebra `A^!` through degree 8 together with its central element `w`.
#[derive(Debug, Clone)]
pub struct DualCentral {
    pub table: GradedTable,
    pub w: Element,
    pub certificate: RegularityCertificate,
}

/// Finds `w ∈ A^!_2` spanning the kernel of `A^!_2 -> S^!_2`.
///
/// `w` is the class of any `v ∈ R_S^⊥` with `<v, z> = 1`; the normalization
/// makes `w` depend only on `z`. It is then certified central and regular
/// through degree 8.
pub fn find_w(h: &Hypersurface) -> Result<DualCentral> {
    let a_dual = koszul_dual(h.a());
    let s_dual = koszul_dual(h.s());
    let table = GradedTable::build(&a_dual, DUAL_DEGREE);

    // classes of R_S^⊥ in A^!_2 span R_S^⊥ / R_A^⊥
    let classes: Vec<Vec<Scalar>> = s_dual
        .relations()
        .iter()
        .map(|v| Ok(table.tensor(2, v)?.coords))
        .collect::<Result<_>>()?;
    let kernel_dim = crate::exactlin::span_rank(&classes, table.dim(2));
    if kernel_dim != 1 {
        return Err(Error::hypothesis(
            "ker(A^!_2 -> S^!_2) one-dimensional",
            format!("kernel has dimension {kernel_dim}"),
        ));
    }
    let pairing = |v: &[Scalar]| -> Scalar { v.iter().zip(h.z_lift()).map(|(a, b)| a * b).sum() };
    let v = s_dual
        .relations()
        .iter()
        .find(|v| !pairing(v).is_zero())
        .expect("R_S^⊥ pairs nontrivially with z ∉ R_S");
    let scale = pairing(v).recip();
    let w = table.tensor(2, v)?.scale(&scale);

    let certificate = qalg::is_regular_central(&table, &w, DUAL_DEGREE)?;
    match certificate {
        RegularityCertificate::Regular { .. } => Ok(DualCentral { table, w, certificate }),
        RegularityCertificate::NotCentral => Err(Error::hypothesis("w central in A^!", "w fails to commute with a generator")),
        RegularityCertificate::NotRegular { degree, side } => Err(Error::hypothesis(
            "w regular in A^!",
            format!("{side:?} multiplication by w is not injective on A^!_{degree}"),
        )),
    }
}

/// `C(A)` realized on `A^!_4`: `a * b` is the preimage of `ab ∈ A^!_8`
/// under multiplication by `w²`, and the identity is `w²`.
pub fn clifford_algebra(h: &Hypersurface) -> Result<FinDimAlgebra> {
    let dual = find_w(h)?;
    clifford_from_dual(&dual)
}

pub fn clifford_from_dual(dual: &DualCentral) -> Result<FinDimAlgebra> {
    let t = &dual.table;
    let (d4, d6, d8) = (t.dim(4), t.dim(6), t.dim(8));
    if d4 != d6 || d6 != d8 {
        return Err(Error::hypothesis(
            "dim A^!_{2n} stabilized at n = 2",
            format!("dims in degrees 4, 6, 8 are {d4}, {d6}, {d8}"),
        ));
    }
    let w = &dual.w;
    for n in [4, 6] {
        if t.left_mult_matrix(w, n)?.rank() != d4 {
            return Err(Error::hypothesis(
                "w: A^!_{2n} -> A^!_{2n+2} bijective",
                format!("multiplication by w is not bijective on A^!_{n}"),
            ));
        }
    }
    let w2 = t.multiply(w, w)?;
    let inv = t
        .left_mult_matrix(&w2, 4)?
        .inverse()
        .ok_or_else(|| Error::hypothesis("w² invertible on A^!_4", "multiplication by w² is singular"))?;

    // a normal word x_{i1}..x_{i4} acts on A^!_4 as L_{i1} L_{i2} L_{i3} L_{i4}
    let mut products = vec![vec![Vec::new(); d4]; d4];
    for (i, word) in t.basis_words(4).iter().enumerate() {
        let mut m = Matrix::identity(d4);
        for (k, &letter) in word.iter().rev().enumerate() {
            m = t.left_map(4 + k, letter).mul(&m);
        }
        let m = inv.mul(&m);
        for (j, row) in products[i].iter_mut().enumerate() {
            *row = m.column(j);
        }
    }
    let labels = t
        .basis_words(4)
        .iter()
        .map(|w| w.iter().map(|&i| t.generators()[i].as_str()).collect::<Vec<_>>().join(""))
        .collect();
    FinDimAlgebra::new(labels, products, w2.coords)
}

/// Side-by-side invariants of two algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantComparison {
    pub left: InvariantTuple,
    pub right: InvariantTuple,
    pub equal: bool,
}

/// Invariant comparison in place of an isomorphism test.
pub fn compare_invariants(c1: &FinDimAlgebra, c2: &FinDimAlgebra) -> Result<InvariantComparison> {
    let left = findim::analyze(c1)?.invariants();
    let right = findim::analyze(c2)?.invariants();
    Ok(InvariantComparison {
        left,
        right,
        equal: left == right,
    })
}

/// `w²` is the identity of `C(A)`; handy as a sanity check.
pub fn identity_is_w_squared(dual: &DualCentral, c: &FinDimAlgebra) -> Result<bool> {
    let w2 = dual.table.multiply(&dual.w, &dual.w)?;
    Ok(w2.coords == c.identity())
}

/// Helper for callers holding a quadratic form instead of a lift: the lift
/// `Σ q_ij x_i x_j` of a symmetric matrix.
pub fn lift_from_form(q: &Matrix) -> Vec<Scalar> {
    let n = q.rows();
    let mut v = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            v[i * n + j] = q[(i, j)].clone();
        }
    }
    v
}

/// `diag(entries)` as a symmetric matrix.
pub fn diagonal_form(entries: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(entries.len(), entries.len());
    for (i, &e) in entries.iter().enumerate() {
        m[(i, i)] = Scalar::from_integer(e.into());
    }
    m
}

/// `x0 x3 - x1 x2` as a symmetric matrix.
pub fn hyperbolic_form() -> Matrix {
    let half = Scalar::new(1.into(), 2.into());
    let mut m = Matrix::zeros(4, 4);
    m[(0, 3)] = half.clone();
    m[(3, 0)] = half.clone();
    m[(1, 2)] = -half.clone();
    m[(2, 1)] = -half;
    m
}
