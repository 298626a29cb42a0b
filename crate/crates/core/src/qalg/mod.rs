//! Quadratic algebras `T(V)/(R)`, built degree by degree.

mod presentation;
mod table;

pub use presentation::{default_names, sample_sklyanin_parameters, PresentationFile, QuadraticPresentation, Term};
pub use table::{Element, GradedTable};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{LaurentPoly, Matrix, RationalSeries, Scalar};

/// Quadratic dual: relations `R^⊥` for the pairing
/// `<x_i ⊗ x_j, x_k* ⊗ x_l*> = δ_ik δ_jl`. Generator names are kept.
pub fn koszul_dual(p: &QuadraticPresentation) -> QuadraticPresentation {
    let g = p.num_generators();
    let perp = if p.relations().is_empty() {
        Matrix::identity(g * g).columns()
    } else {
        Matrix::from_rows(p.relations().to_vec()).kernel_basis().columns()
    };
    QuadraticPresentation::new(p.generators().to_vec(), perp).expect("kernel basis is independent")
}

/// Basis of `{z ∈ A_2 : z x = x z for every generator x}`.
///
/// Since `A` is generated in degree one this is the degree-two part of the
/// center. Needs a table through degree 3.
pub fn central_quadratic_space(table: &GradedTable) -> Result<Vec<Element>> {
    if table.max_degree() < 3 {
        return Err(Error::DegreeOverflow {
            requested: 3,
            bound: table.max_degree(),
        });
    }
    let d2 = table.dim(2);
    let mut stacked: Option<Matrix> = None;
    for i in 0..table.num_generators() {
        // z x_i - x_i z
        let diff = table
            .right_map(2, i)
            .add(&table.left_map(2, i).scale(&-Scalar::from_integer(1.into())));
        stacked = Some(match stacked {
            None => diff,
            Some(s) => s.vstack(&diff),
        });
    }
    let ker = match stacked {
        Some(m) => m.kernel_basis(),
        None => Matrix::identity(d2),
    };
    Ok(ker
        .columns()
        .into_iter()
        .map(|coords| Element { degree: 2, coords })
        .collect())
}

/// Whether `z` commutes with every generator (degree `deg z + 1` check).
pub fn is_central(table: &GradedTable, z: &Element) -> Result<bool> {
    for i in 0..table.num_generators() {
        let x = table.generator(i);
        if table.multiply(z, &x)? != table.multiply(&x, z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the finite-degree regularity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegularityCertificate {
    /// Left and right multiplication by `z` are injective `A_n -> A_{n+d}`
    /// for every `n` up to `checked_through`.
    Regular { checked_through: usize },
    NotCentral,
    /// Multiplication by `z` fails to be injective on `A_degree`.
    NotRegular { degree: usize, side: Side },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl RegularityCertificate {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityCertificate::Regular { .. })
    }
}

/// Checks that `z` is central and that multiplication by it is injective on
/// `A_n` for all `n ≤ bound - deg z`.
pub fn is_regular_central(table: &GradedTable, z: &Element, bound: usize) -> Result<RegularityCertificate> {
    if bound > table.max_degree() {
        return Err(Error::DegreeOverflow {
            requested: bound,
            bound: table.max_degree(),
        });
    }
    if !is_central(table, z)? {
        return Ok(RegularityCertificate::NotCentral);
    }
    if z.is_zero() {
        return Ok(RegularityCertificate::NotRegular {
            degree: 0,
            side: Side::Left,
        });
    }
    let d = z.degree;
    for n in 0..=bound.saturating_sub(d) {
        if table.left_mult_matrix(z, n)?.rank() != table.dim(n) {
            return Ok(RegularityCertificate::NotRegular {
                degree: n,
                side: Side::Left,
            });
        }
        if table.right_mult_matrix(z, n)?.rank() != table.dim(n) {
            return Ok(RegularityCertificate::NotRegular {
                degree: n,
                side: Side::Right,
            });
        }
    }
    Ok(RegularityCertificate::Regular {
        checked_through: bound.saturating_sub(d),
    })
}

/// Coefficients of `H_{A^!}(t) H_A(-t) - 1` through degree `n`.
///
/// All zero is necessary (not sufficient) for `A` to be Koszul.
pub fn koszul_identity_check(p: &QuadraticPresentation, n: usize) -> Vec<i64> {
    let a = GradedTable::build(p, n).hilbert();
    let dual = GradedTable::build(&koszul_dual(p), n).hilbert();
    koszul_residual(&a, &dual)
}

/// Residual of the numerical Koszul identity from two dimension lists.
pub fn koszul_residual(a_dims: &[usize], dual_dims: &[usize]) -> Vec<i64> {
    let n = a_dims.len().min(dual_dims.len());
    (0..n)
        .map(|k| {
            let mut acc: i64 = 0;
            for i in 0..=k {
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                acc += dual_dims[i] as i64 * a_dims[k - i] as i64 * sign;
            }
            if k == 0 {
                acc - 1
            } else {
                acc
            }
        })
        .collect()
}

/// `(1 - t)^{-g}`, the Hilbert series of a polynomial ring / quantum `P^{g-1}`.
pub fn projective_space_series(g: u32) -> RationalSeries {
    RationalSeries::over_one_minus_t_pow(LaurentPoly::one(), g)
}

/// Summary of the checks run on a transcribed Sklyanin presentation.
#[derive(Debug, Clone, Serialize)]
pub struct SklyaninValidation {
    pub hilbert: Vec<usize>,
    pub expected: Vec<usize>,
    pub central_dim: usize,
    pub ok: bool,
}

/// Hilbert series must be `(1-t)^{-4}` through `degree` and the degree-two
/// center must be two-dimensional.
pub fn validate_sklyanin(p: &QuadraticPresentation, degree: usize) -> Result<SklyaninValidation> {
    let table = GradedTable::build(p, degree.max(3));
    let hilbert = table.hilbert();
    let expected: Vec<usize> = (0..=degree.max(3)).map(|n| binomial(n + 3, 3)).collect();
    let central_dim = central_quadratic_space(&table)?.len();
    let ok = hilbert == expected && central_dim == 2;
    Ok(SklyaninValidation {
        hilbert,
        expected,
        central_dim,
        ok,
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Element of `A_2` from a coefficient vector over all `g²` words.
pub fn quadratic_element(table: &GradedTable, lift: &[Scalar]) -> Result<Element> {
    table.tensor(2, lift)
}

/// Lift of a degree-two element to `V ⊗ V` (its normal-word expansion).
pub fn lift_quadratic(table: &GradedTable, z: &Element) -> Vec<Scalar> {
    let g = table.num_generators();
    let mut v = vec![Scalar::zero(); g * g];
    for (k, c) in z.coords.iter().enumerate() {
        let w = &table.basis_words(2)[k];
        v[w[0] * g + w[1]] += c;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar;

    #[test]
    fn exterior_algebra_is_dual_of_polynomial_ring() {
        let dual = koszul_dual(&QuadraticPresentation::commutative(4));
        assert_eq!(dual.relations().len(), 10);
        let t = GradedTable::build(&dual, 5);
        assert_eq!(t.hilbert(), vec![1, 4, 6, 4, 1, 0]);
    }

    #[test]
    fn double_dual_is_original() {
        let p = QuadraticPresentation::sklyanin(&scalar(2), &scalar(3), &crate::exactlin::ratio(-5, 7)).unwrap();
        assert!(koszul_dual(&koszul_dual(&p)).same_relation_space(&p));
    }

    #[test]
    fn center_of_free_algebra_is_trivial() {
        let t = GradedTable::build(&QuadraticPresentation::free(2), 3);
        assert!(central_quadratic_space(&t).unwrap().is_empty());
    }

    #[test]
    fn center_of_polynomial_ring_is_everything() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(4), 3);
        assert_eq!(central_quadratic_space(&t).unwrap().len(), 10);
    }

    #[test]
    fn zero_is_not_regular() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(4), 4);
        let cert = is_regular_central(&t, &t.zero(2), 4).unwrap();
        assert_eq!(
            cert,
            RegularityCertificate::NotRegular {
                degree: 0,
                side: Side::Left
            }
        );
    }

    #[test]
    fn square_is_regular_in_polynomial_ring() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(4), 5);
        let z = t.word(&[0, 0]).unwrap();
        assert!(is_regular_central(&t, &z, 5).unwrap().is_regular());
    }

    #[test]
    fn non_central_element_detected() {
        let t = GradedTable::build(&QuadraticPresentation::free(2), 3);
        let z = t.word(&[0, 1]).unwrap();
        assert_eq!(is_regular_central(&t, &z, 3).unwrap(), RegularityCertificate::NotCentral);
    }

    #[test]
    fn monomial_algebra_passes_koszul_identity() {
        let mut r = vec![scalar(0); 4];
        r[1] = scalar(1); // x0 x1
        let p = QuadraticPresentation::new(default_names(2), vec![r]).unwrap();
        assert!(koszul_identity_check(&p, 4).iter().all(|&c| c == 0));
    }

    #[test]
    fn binomials() {
        assert_eq!((0..6).map(|n| binomial(n + 3, 3)).collect::<Vec<_>>(), vec![1, 4, 10, 20, 35, 56]);
    }
}
