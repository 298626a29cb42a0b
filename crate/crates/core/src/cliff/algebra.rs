use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, Matrix, Scalar};

/// Finite-dimensional associative algebra given by structure constants:
/// `e_i e_j = Σ_k products[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    labels: Vec<String>,
    products: Vec<Vec<Vec<Scalar>>>,
    identity: Vec<Scalar>,
}

impl FinDimAlgebra {
    /// Validates shapes, the two-sided unit, and associativity on all basis triples.
    pub fn new(labels: Vec<String>, products: Vec<Vec<Vec<Scalar>>>, identity: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        let shape_ok = products.len() == n
            && products.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && identity.len() == n;
        if !shape_ok {
            return Err(Error::Invalid("structure constants have the wrong shape".into()));
        }
        let alg = FinDimAlgebra {
            labels,
            products,
            identity,
        };
        if let Some(i) = alg.unit_failure() {
            return Err(Error::Invalid(format!("identity is not a two-sided unit on basis element {i}")));
        }
        if let Some((i, j, k)) = alg.associativity_failure() {
            return Err(Error::Invalid(format!("associativity fails on basis triple ({i}, {j}, {k})")));
        }
        Ok(alg)
    }

    /// No unit or associativity checks; used for quotients built from a
    /// verified algebra.
    pub(crate) fn new_unchecked(labels: Vec<String>, products: Vec<Vec<Vec<Scalar>>>, identity: Vec<Scalar>) -> Self {
        FinDimAlgebra {
            labels,
            products,
            identity,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> &[Scalar] {
        &self.identity
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.products[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `tr(L_x)`.
    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // tr L_{e_i} = Σ_j (e_i e_j)_j
            for j in 0..self.dim() {
                acc += a * &self.products[i][j][j];
            }
        }
        acc
    }

    /// Gram matrix of the trace form `(x, y) ↦ tr(L_{xy})` on the basis.
    pub fn trace_gram(&self) -> Matrix {
        let n = self.dim();
        let traces: Vec<Scalar> = (0..n).map(|k| self.trace(&self.basis_vector(k))).collect();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero();
                for (c, t) in self.products[i][j].iter().zip(&traces) {
                    if !c.is_zero() && !t.is_zero() {
                        acc += c * t;
                    }
                }
                g[(i, j)] = acc;
            }
        }
        g
    }

    pub fn unit_failure(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let e = self.basis_vector(i);
            self.mul(&self.identity, &e) != e || self.mul(&e, &self.identity) != e
        })
    }

    /// First basis triple with `(e_i e_j) e_k != e_i (e_j e_k)`.
    ///
    /// Compared over a common denominator in integer arithmetic, which
    /// avoids a gcd per operation.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let lcm = self
            .products
            .iter()
            .flatten()
            .flatten()
            .filter(|v| !v.is_zero())
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let q: Vec<Vec<Vec<BigInt>>> = self
            .products
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect())
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // Σ_m q_ij^m q_mk = Σ_m q_jk^m q_im, coordinatewise
                    let mut diff = vec![BigInt::zero(); n];
                    for m in 0..n {
                        let a = &q[i][j][m];
                        if !a.is_zero() {
                            for (d, v) in diff.iter_mut().zip(&q[m][k]) {
                                if !v.is_zero() {
                                    *d += a * v;
                                }
                            }
                        }
                        let b = &q[j][k][m];
                        if !b.is_zero() {
                            for (d, v) in diff.iter_mut().zip(&q[i][m]) {
                                if !v.is_zero() {
                                    *d -= b * v;
                                }
                            }
                        }
                    }
                    if diff.iter().any(|d| !d.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn to_file(&self) -> AlgebraFile {
        let enc = |v: &[Scalar]| v.iter().map(format_scalar).collect::<Vec<_>>();
        AlgebraFile {
            labels: self.labels.clone(),
            identity: enc(&self.identity),
            products: self
                .products
                .iter()
                .map(|row| row.iter().map(|v| enc(v)).collect())
                .collect(),
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let dec = |v: &[String]| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>, _>>();
        let products = file
            .products
            .iter()
            .map(|row| row.iter().map(|v| dec(v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        FinDimAlgebra::new(file.labels.clone(), products, dec(&file.identity)?)
    }
}

/// Serialized structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub labels: Vec<String>,
    pub identity: Vec<String>,
    pub products: Vec<Vec<Vec<String>>>,
}

/// `n x n` matrix algebra over the rationals, basis `E_ab` in row-major order.
pub fn matrix_algebra(n: usize) -> FinDimAlgebra {
    let dim = n * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut products = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                // E_ab E_bd = E_ad
                products[idx(a, b)][idx(b, d)][idx(a, d)] = Scalar::one();
            }
        }
    }
    let mut identity = vec![Scalar::zero(); dim];
    for a in 0..n {
        identity[idx(a, a)] = Scalar::one();
    }
    let labels = (0..n)
        .flat_map(|a| (0..n).map(move |b| format!("E{a}{b}")))
        .collect();
    FinDimAlgebra::new(labels, products, identity).expect("matrix algebra")
}

/// Upper-triangular `n x n` matrices.
pub fn upper_triangular_algebra(n: usize) -> FinDimAlgebra {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let dim = pairs.len();
    let pos = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
    let mut products = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate() {
            if b == c {
                products[i][j][pos(a, d)] = Scalar::one();
            }
        }
    }
    let mut identity = vec![Scalar::zero(); dim];
    for a in 0..n {
        identity[pos(a, a)] = Scalar::one();
    }
    let labels = pairs.iter().map(|(a, b)| format!("E{a}{b}")).collect();
    FinDimAlgebra::new(labels, products, identity).expect("triangular algebra")
}

/// Direct product of algebras.
pub fn product_algebra(parts: &[FinDimAlgebra]) -> FinDimAlgebra {
    let dim: usize = parts.iter().map(FinDimAlgebra::dim).sum();
    let mut products = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    let mut identity = vec![Scalar::zero(); dim];
    let mut labels = Vec::with_capacity(dim);
    let mut offset = 0;
    for (p, part) in parts.iter().enumerate() {
        let n = part.dim();
        for i in 0..n {
            labels.push(format!("{}#{p}", part.labels[i]));
            identity[offset + i] = part.identity[i].clone();
            for j in 0..n {
                for k in 0..n {
                    products[offset + i][offset + j][offset + k] = part.products[i][j][k].clone();
                }
            }
        }
        offset += n;
    }
    FinDimAlgebra::new(labels, products, identity).expect("product of algebras")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_valid() {
        let m = matrix_algebra(2);
        assert_eq!(m.dim(), 4);
        // tr L_1 = 4 on M_2
        assert_eq!(m.trace(m.identity()), Scalar::from_integer(4.into()));
    }

    #[test]
    fn rejects_non_associative() {
        let mut m = matrix_algebra(2);
        m.products[1][2][0] = Scalar::from_integer(5.into());
        assert!(FinDimAlgebra::new(m.labels.clone(), m.products.clone(), m.identity.clone()).is_err());
    }

    #[test]
    fn file_roundtrip() {
        let a = upper_triangular_algebra(2);
        let back = FinDimAlgebra::from_file(&a.to_file()).unwrap();
        assert_eq!(a, back);
    }
}
