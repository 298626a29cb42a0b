use num_traits::{One, Zero};

use super::FinDimAlgebra;
use crate::exactlin::{Matrix, Scalar};

/// Symmetric matrix `q_ij = (z_ij + z_ji) / 2` of a lift `z ∈ V ⊗ V`.
pub fn symmetric_form(lift: &[Scalar], g: usize) -> Matrix {
    assert_eq!(lift.len(), g * g);
    let half = Scalar::new(1.into(), 2.into());
    let mut q = Matrix::zeros(g, g);
    for i in 0..g {
        for j in 0..g {
            q[(i, j)] = (&lift[i * g + j] + &lift[j * g + i]) * &half;
        }
    }
    q
}

/// Congruence diagonalization over the rationals: returns the diagonal of
/// `Pᵀ q P` for some invertible `P`.
pub fn diagonalize_form(q: &Matrix) -> Vec<Scalar> {
    let n = q.rows();
    assert_eq!(n, q.cols(), "form must be square");
    let mut m = q.clone();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                swap_basis(&mut m, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                // e_k <- e_k + e_j gives q_kk = 2 q_kj != 0
                add_basis(&mut m, k, j, &Scalar::one());
            } else {
                continue;
            }
        }
        let pivot = m[(k, k)].clone();
        for j in k + 1..n {
            if m[(k, j)].is_zero() {
                continue;
            }
            let f = -(&m[(k, j)] / &pivot);
            add_basis(&mut m, j, k, &f);
        }
    }
    (0..n).map(|i| m[(i, i)].clone()).collect()
}

fn swap_basis(m: &mut Matrix, a: usize, b: usize) {
    let n = m.rows();
    for i in 0..n {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
    for j in 0..n {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
}

// e_a <- e_a + f e_b, applied as a congruence
fn add_basis(m: &mut Matrix, a: usize, b: usize, f: &Scalar) {
    let n = m.rows();
    for i in 0..n {
        let v = &m[(i, b)] * f;
        m[(i, a)] += v;
    }
    for j in 0..n {
        let v = &m[(b, j)] * f;
        m[(a, j)] += v;
    }
}

/// Even Clifford algebra `C_0(q)` of a symmetric form on `k^n`.
///
/// After diagonalizing to `diag(q_1..q_n)` the basis is the even products
/// `e_S` (subsets `S` of even size, as bitmasks in increasing order) with
/// `e_i² = q_i` and `e_i e_j = -e_j e_i`. For `n = 4` the dimension is 8.
pub fn even_clifford_oracle(q: &Matrix) -> FinDimAlgebra {
    let diag = diagonalize_form(q);
    let n = diag.len();
    let blades: Vec<u32> = (0u32..1 << n).filter(|b| b.count_ones() % 2 == 0).collect();
    let dim = blades.len();
    let index = |b: u32| blades.iter().position(|&x| x == b).unwrap();
    let mut products = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for (i, &a) in blades.iter().enumerate() {
        for (j, &b) in blades.iter().enumerate() {
            let (sign, coeff) = blade_product(a, b, &diag);
            if coeff.is_zero() {
                continue;
            }
            let c = if sign { -coeff } else { coeff };
            products[i][j][index(a ^ b)] = c;
        }
    }
    let mut identity = vec![Scalar::zero(); dim];
    identity[index(0)] = Scalar::one();
    let labels = blades
        .iter()
        .map(|&b| {
            if b == 0 {
                "1".to_string()
            } else {
                (0..n).filter(|i| b >> i & 1 == 1).map(|i| format!("e{i}")).collect()
            }
        })
        .collect();
    FinDimAlgebra::new(labels, products, identity).expect("even Clifford algebra is associative")
}

// e_A e_B = (-1)^sign (Π_{i ∈ A∩B} q_i) e_{A xor B}
fn blade_product(a: u32, b: u32, diag: &[Scalar]) -> (bool, Scalar) {
    let mut swaps = 0;
    for i in 0..diag.len() {
        if a >> i & 1 == 1 {
            // elements of B smaller than i must move past e_i
            swaps += (b & ((1 << i) - 1)).count_ones();
        }
    }
    let mut coeff = Scalar::one();
    for (i, qi) in diag.iter().enumerate() {
        if (a & b) >> i & 1 == 1 {
            coeff *= qi;
        }
    }
    (swaps % 2 == 1, coeff)
}
