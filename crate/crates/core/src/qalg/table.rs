use num_traits::{One, Signed, Zero};

use super::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// Homogeneous element of a graded table: coordinates over the normal-word
/// basis of its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            degree: self.degree,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.degree, other.degree, "adding elements of different degree");
        Element {
            degree: self.degree,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-Scalar::one()))
    }
}

/// Degreewise model of a quadratic algebra through a fixed degree.
///
/// Degree `n + 1` is computed as `(V ⊗ A_n) / image(R ⊗ A_{n-1})`. Normal
/// words are the lexicographically smallest words that survive, so a word
/// is normal only if its tail (the word minus its first letter) is normal.
#[derive(Debug, Clone)]
pub struct GradedTable {
    generators: Vec<String>,
    max_degree: usize,
    words: Vec<Vec<Vec<usize>>>,
    // left[n][i]: A_n -> A_{n+1}, b -> x_i b
    left: Vec<Vec<Matrix>>,
    // right[n][j]: A_n -> A_{n+1}, b -> b x_j
    right: Vec<Vec<Matrix>>,
}

impl GradedTable {
    pub fn build(p: &QuadraticPresentation, max_degree: usize) -> GradedTable {
        let g = p.num_generators();
        let mut words: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        let mut left: Vec<Vec<Matrix>> = Vec::new();
        let mut right: Vec<Vec<Matrix>> = Vec::new();

        if max_degree >= 1 {
            words.push((0..g).map(|i| vec![i]).collect());
            let unit = |i: usize| {
                let mut m = Matrix::zeros(g, 1);
                m[(i, 0)] = Scalar::one();
                m
            };
            left.push((0..g).map(unit).collect());
            right.push((0..g).map(unit).collect());
        }

        for n in 1..max_degree {
            let dn = words[n].len();
            let dprev = words[n - 1].len();
            let width = g * dn;
            // rows: r ⊗ b for each relation r and basis word b of A_{n-1}
            let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(p.relations().len() * dprev);
            for rel in p.relations() {
                for b in 0..dprev {
                    let mut v = vec![Scalar::zero(); width];
                    for (idx, c) in rel.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (i, j) = (idx / g, idx % g);
                        let lj = &left[n - 1][j];
                        for k in 0..dn {
                            let e = &lj[(k, b)];
                            if !e.is_zero() {
                                v[i * dn + k] += c * e;
                            }
                        }
                    }
                    if v.iter().any(|x| !x.is_zero()) {
                        rows.push(v);
                    }
                }
            }

            // Column c of V⊗A_n is the word x_i w_k, i = c / dn, k = c % dn;
            // columns are in lex order, and reversing them makes the rref
            // eliminate the largest words first.
            let (pivot_cols, reduced) = if rows.is_empty() {
                (Vec::new(), Matrix::zeros(0, width))
            } else {
                let mut m = Matrix::zeros(rows.len(), width);
                for (r, row) in rows.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            m[(r, width - 1 - c)] = v.clone();
                        }
                    }
                }
                let (red, piv) = m.rref();
                (piv.iter().map(|&c| width - 1 - c).collect::<Vec<_>>(), red)
            };

            let mut is_pivot = vec![None; width];
            for (row, &c) in pivot_cols.iter().enumerate() {
                is_pivot[c] = Some(row);
            }
            let normal: Vec<usize> = (0..width).filter(|&c| is_pivot[c].is_none()).collect();
            let mut new_index = vec![usize::MAX; width];
            for (m, &c) in normal.iter().enumerate() {
                new_index[c] = m;
            }
            let dnext = normal.len();

            // projection V⊗A_n -> A_{n+1}
            let mut proj = Matrix::zeros(dnext, width);
            for c in 0..width {
                match is_pivot[c] {
                    None => proj[(new_index[c], c)] = Scalar::one(),
                    Some(row) => {
                        for &c2 in &normal {
                            let v = &reduced[(row, width - 1 - c2)];
                            if !v.is_zero() {
                                proj[(new_index[c2], c)] = -v.clone();
                            }
                        }
                    }
                }
            }

            let next_words: Vec<Vec<usize>> = normal
                .iter()
                .map(|&c| {
                    let mut w = vec![c / dn];
                    w.extend(&words[n][c % dn]);
                    w
                })
                .collect();

            let left_n: Vec<Matrix> = (0..g)
                .map(|i| {
                    let mut m = Matrix::zeros(dnext, dn);
                    for r in 0..dnext {
                        for k in 0..dn {
                            let v = &proj[(r, i * dn + k)];
                            if !v.is_zero() {
                                m[(r, k)] = v.clone();
                            }
                        }
                    }
                    m
                })
                .collect();

            // b = x_i b' with b' normal of degree n-1: b x_j = x_i (b' x_j)
            let right_n: Vec<Matrix> = (0..g)
                .map(|j| {
                    let mut m = Matrix::zeros(dnext, dn);
                    for (k, w) in words[n].iter().enumerate() {
                        let i = w[0];
                        let tail = words[n - 1]
                            .iter()
                            .position(|t| t[..] == w[1..])
                            .expect("tail of a normal word is normal");
                        let bx = right[n - 1][j].column(tail);
                        let col = left_n[i].mul_vec(&bx);
                        for (r, v) in col.into_iter().enumerate() {
                            m[(r, k)] = v;
                        }
                    }
                    m
                })
                .collect();

            words.push(next_words);
            left.push(left_n);
            right.push(right_n);
        }

        GradedTable {
            generators: p.generators().to_vec(),
            max_degree,
            words,
            left,
            right,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.words[n].len()
    }

    /// `[d_0, ..., d_N]`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn basis_words(&self, n: usize) -> &[Vec<usize>] {
        &self.words[n]
    }

    /// `x_i ·` as a map `A_n -> A_{n+1}`.
    pub fn left_map(&self, n: usize, i: usize) -> &Matrix {
        &self.left[n][i]
    }

    /// `· x_j` as a map `A_n -> A_{n+1}`.
    pub fn right_map(&self, n: usize, j: usize) -> &Matrix {
        &self.right[n][j]
    }

    pub fn one(&self) -> Element {
        Element {
            degree: 0,
            coords: vec![Scalar::one()],
        }
    }

    pub fn zero(&self, n: usize) -> Element {
        Element {
            degree: n,
            coords: vec![Scalar::zero(); self.dim(n)],
        }
    }

    pub fn basis_element(&self, n: usize, k: usize) -> Element {
        let mut e = self.zero(n);
        e.coords[k] = Scalar::one();
        e
    }

    pub fn generator(&self, i: usize) -> Element {
        self.basis_element(1, i)
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeOverflow {
                requested: n,
                bound: self.max_degree,
            });
        }
        Ok(())
    }

    /// Class of an arbitrary word `x_{i1} ... x_{in}`.
    pub fn word(&self, w: &[usize]) -> Result<Element> {
        self.check_degree(w.len())?;
        let mut e = self.one();
        for &i in w.iter().rev() {
            e = self.left_mul_generator(i, &e);
        }
        Ok(e)
    }

    /// Class of a tensor given as coefficients over all `g^n` words.
    pub fn tensor(&self, n: usize, coeffs: &[Scalar]) -> Result<Element> {
        self.check_degree(n)?;
        let g = self.num_generators();
        assert_eq!(coeffs.len(), g.pow(n as u32));
        let mut acc = self.zero(n);
        for (idx, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut w = vec![0; n];
            let mut rest = idx;
            for slot in w.iter_mut().rev() {
                *slot = rest % g;
                rest /= g;
            }
            acc = acc.add(&self.word(&w)?.scale(c));
        }
        Ok(acc)
    }

    fn left_mul_generator(&self, i: usize, e: &Element) -> Element {
        Element {
            degree: e.degree + 1,
            coords: self.left[e.degree][i].mul_vec(&e.coords),
        }
    }

    fn right_mul_generator(&self, e: &Element, j: usize) -> Element {
        Element {
            degree: e.degree + 1,
            coords: self.right[e.degree][j].mul_vec(&e.coords),
        }
    }

    /// `a · b`, by pushing `a` through the right-multiplication maps along
    /// each normal word of `b`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        let n = a.degree + b.degree;
        self.check_degree(n)?;
        let mut acc = self.zero(n);
        for (k, c) in b.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = a.clone();
            for &j in &self.words[b.degree][k] {
                e = self.right_mul_generator(&e, j);
            }
            acc = acc.add(&e.scale(c));
        }
        Ok(acc)
    }

    /// Matrix of `b ↦ z · b` from `A_n` to `A_{n + deg z}`: for each normal
    /// word `x_{i1}..x_{id}` of `z` the composite `L_{i1} ⋯ L_{id}`.
    pub fn left_mult_matrix(&self, z: &Element, n: usize) -> Result<Matrix> {
        let d = z.degree;
        self.check_degree(n + d)?;
        let mut acc = Matrix::zeros(self.dim(n + d), self.dim(n));
        for (k, c) in z.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Matrix::identity(self.dim(n));
            for (step, &i) in self.words[d][k].iter().rev().enumerate() {
                m = self.left[n + step][i].mul(&m);
            }
            acc = acc.add(&m.scale(c));
        }
        Ok(acc)
    }

    /// Matrix of `b ↦ b · z` from `A_n` to `A_{n + deg z}`.
    pub fn right_mult_matrix(&self, z: &Element, n: usize) -> Result<Matrix> {
        let d = z.degree;
        self.check_degree(n + d)?;
        let mut acc = Matrix::zeros(self.dim(n + d), self.dim(n));
        for (k, c) in z.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Matrix::identity(self.dim(n));
            for (step, &j) in self.words[d][k].iter().enumerate() {
                m = self.right[n + step][j].mul(&m);
            }
            acc = acc.add(&m.scale(c));
        }
        Ok(acc)
    }

    /// Human-readable form of an element, e.g. `x0*x3 - 1/2*x1*x2`; the
    /// expression parser reads it back.
    pub fn format_element(&self, e: &Element) -> String {
        let mut out = String::new();
        for (k, c) in e.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let w = self.words[e.degree][k]
                .iter()
                .map(|&i| self.generators[i].as_str())
                .collect::<Vec<_>>()
                .join("*");
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if w.is_empty() {
                out.push_str(&crate::exactlin::format_scalar(&mag));
            } else if mag.is_one() {
                out.push_str(&w);
            } else {
                out.push_str(&format!("{}*{}", crate::exactlin::format_scalar(&mag), w));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_dims_are_binomial() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(4), 4);
        assert_eq!(t.hilbert(), vec![1, 4, 10, 20, 35]);
    }

    #[test]
    fn normal_words_evaluate_to_themselves() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(3), 4);
        for n in 0..=4 {
            for (k, w) in t.basis_words(n).iter().enumerate() {
                assert_eq!(t.word(w).unwrap(), t.basis_element(n, k));
            }
        }
    }

    #[test]
    fn unit_and_commutation() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(4), 3);
        let b = t.word(&[2, 0]).unwrap();
        assert_eq!(t.multiply(&t.one(), &b).unwrap(), b);
        assert_eq!(t.multiply(&b, &t.one()).unwrap(), b);
        let xy = t.multiply(&t.generator(1), &t.generator(3)).unwrap();
        let yx = t.multiply(&t.generator(3), &t.generator(1)).unwrap();
        assert_eq!(xy, yx);
    }

    #[test]
    fn overflow_is_reported() {
        let t = GradedTable::build(&QuadraticPresentation::commutative(2), 2);
        let x = t.generator(0);
        let x2 = t.multiply(&x, &x).unwrap();
        assert!(matches!(t.multiply(&x2, &x), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn free_algebra_dims() {
        let t = GradedTable::build(&QuadraticPresentation::free(2), 4);
        assert_eq!(t.hilbert(), vec![1, 2, 4, 8, 16]);
    }
}
