use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, ratio, scalar, span_basis, Matrix, Scalar};

/// Quadratic algebra `T(V)/(R)`: generators and a relation subspace
/// `R` of `V ⊗ V`, stored as linearly independent vectors over the `g²`
/// words `x_i x_j` (index `i * g + j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPresentation {
    generators: Vec<String>,
    relations: Vec<Vec<Scalar>>,
}

impl QuadraticPresentation {
    /// Checks that the relations are independent vectors of length `g²`.
    pub fn new(generators: Vec<String>, relations: Vec<Vec<Scalar>>) -> Result<Self> {
        let g = generators.len();
        if g == 0 {
            return Err(Error::Invalid("presentation needs at least one generator".into()));
        }
        for (k, name) in generators.iter().enumerate() {
            if generators[..k].contains(name) {
                return Err(Error::Invalid(format!("duplicate generator name {name:?}")));
            }
        }
        if let Some(r) = relations.iter().find(|r| r.len() != g * g) {
            return Err(Error::Invalid(format!(
                "relation has {} coefficients, expected {}",
                r.len(),
                g * g
            )));
        }
        if !relations.is_empty() && Matrix::from_rows(relations.clone()).rank() != relations.len() {
            return Err(Error::Invalid("relations are linearly dependent".into()));
        }
        Ok(QuadraticPresentation {
            generators,
            relations,
        })
    }

    /// Like [`new`](Self::new) but first reduces the vectors to a basis of their span.
    pub fn from_spanning_set(generators: Vec<String>, spanning: &[Vec<Scalar>]) -> Result<Self> {
        let g = generators.len();
        let basis = span_basis(spanning, g * g);
        QuadraticPresentation::new(generators, basis)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[Vec<Scalar>] {
        &self.relations
    }

    pub fn word_index(&self, i: usize, j: usize) -> usize {
        i * self.generators.len() + j
    }

    /// Whether `v ∈ V⊗V` lies in the relation span.
    pub fn relation_span_contains(&self, v: &[Scalar]) -> bool {
        if self.relations.is_empty() {
            return v.iter().all(Zero::is_zero);
        }
        let m = Matrix::from_rows(self.relations.clone());
        let mut with = self.relations.clone();
        with.push(v.to_vec());
        Matrix::from_rows(with).rank() == m.rank()
    }

    /// Same relation subspace (possibly a different basis)?
    pub fn same_relation_space(&self, other: &QuadraticPresentation) -> bool {
        let g2 = self.generators.len().pow(2);
        if other.generators.len().pow(2) != g2 || self.relations.len() != other.relations.len() {
            return false;
        }
        span_basis(&self.relations, g2) == span_basis(&other.relations, g2)
    }

    /// Polynomial ring: relations `x_i x_j - x_j x_i`, `i < j`.
    pub fn commutative(g: usize) -> Self {
        let mut rels = Vec::new();
        for i in 0..g {
            for j in i + 1..g {
                let mut v = vec![Scalar::zero(); g * g];
                v[i * g + j] = Scalar::one();
                v[j * g + i] = -Scalar::one();
                rels.push(v);
            }
        }
        QuadraticPresentation::new(default_names(g), rels).expect("commutator relations are independent")
    }

    /// Free algebra on `g` generators.
    pub fn free(g: usize) -> Self {
        QuadraticPresentation::new(default_names(g), Vec::new()).expect("free algebra")
    }

    /// Four-generator Sklyanin algebra with parameters satisfying
    /// `α + β + γ + αβγ = 0` and `α, β, γ ∉ {0, ±1}`:
    ///
    /// ```text
    /// x0x1 - x1x0 = α(x2x3 + x3x2)    x0x1 + x1x0 = x2x3 - x3x2
    /// x0x2 - x2x0 = β(x3x1 + x1x3)    x0x2 + x2x0 = x3x1 - x1x3
    /// x0x3 - x3x0 = γ(x1x2 + x2x1)    x0x3 + x3x0 = x1x2 - x2x1
    /// ```
    ///
    /// The transcription is checked downstream by the Hilbert series and
    /// the dimension of the degree-two center (see `validate_sklyanin`).
    pub fn sklyanin(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<Self> {
        let constraint = alpha + beta + gamma + alpha * beta * gamma;
        if !constraint.is_zero() {
            return Err(Error::Invalid(format!(
                "Sklyanin parameters violate α+β+γ+αβγ=0 (value {})",
                format_scalar(&constraint)
            )));
        }
        let forbidden = [scalar(0), scalar(1), scalar(-1)];
        if [alpha, beta, gamma].iter().any(|p| forbidden.contains(p)) {
            return Err(Error::Invalid("Sklyanin parameters must avoid 0, 1, -1".into()));
        }
        let g = 4;
        let w = |i: usize, j: usize| i * g + j;
        let mut rels = Vec::new();
        // (i, j, k): x0 x_i against x_j x_k for cyclic (i, j, k)
        for (i, j, k, p) in [(1, 2, 3, alpha), (2, 3, 1, beta), (3, 1, 2, gamma)] {
            let mut minus = vec![Scalar::zero(); g * g];
            minus[w(0, i)] += scalar(1);
            minus[w(i, 0)] -= scalar(1);
            minus[w(j, k)] -= p.clone();
            minus[w(k, j)] -= p.clone();
            rels.push(minus);

            let mut plus = vec![Scalar::zero(); g * g];
            plus[w(0, i)] += scalar(1);
            plus[w(i, 0)] += scalar(1);
            plus[w(j, k)] -= scalar(1);
            plus[w(k, j)] += scalar(1);
            rels.push(plus);
        }
        QuadraticPresentation::new(default_names(g), rels)
    }

    /// `γ` completing `α + β + γ + αβγ = 0`.
    pub fn sklyanin_gamma(alpha: &Scalar, beta: &Scalar) -> Option<Scalar> {
        let den = Scalar::one() + alpha * beta;
        (!den.is_zero()).then(|| -(alpha + beta) / den)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(text)?;
        QuadraticPresentation::from_file(&file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        QuadraticPresentation::from_json(&text)
    }

    fn to_file(&self) -> PresentationFile {
        let g = self.generators.len();
        let relations = self
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| Term {
                        coef: format_scalar(c),
                        word: vec![self.generators[idx / g].clone(), self.generators[idx % g].clone()],
                    })
                    .collect()
            })
            .collect();
        PresentationFile {
            generators: self.generators.clone(),
            relations,
        }
    }

    fn from_file(file: &PresentationFile) -> Result<Self> {
        let g = file.generators.len();
        let index = |name: &str| {
            file.generators
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?} in relation")))
        };
        let mut rels = Vec::with_capacity(file.relations.len());
        for terms in &file.relations {
            let mut v = vec![Scalar::zero(); g * g];
            for t in terms {
                if t.word.len() != 2 {
                    return Err(Error::Invalid(format!(
                        "relation word {:?} is not quadratic",
                        t.word
                    )));
                }
                let idx = index(&t.word[0])? * g + index(&t.word[1])?;
                v[idx] += parse_scalar(&t.coef)?;
            }
            rels.push(v);
        }
        QuadraticPresentation::new(file.generators.clone(), rels)
    }
}

/// On-disk presentation format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<Term>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Term {
    #[serde(deserialize_with = "coef_string")]
    pub coef: String,
    pub word: Vec<String>,
}

// coefficients may be written as JSON integers or as strings
fn coef_string<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    let v = serde_json::Value::deserialize(d)?;
    match v {
        serde_json::Value::String(s) => Ok(s),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(serde::de::Error::custom(format!("bad coefficient {other}"))),
    }
}

pub fn default_names(g: usize) -> Vec<String> {
    (0..g).map(|i| format!("x{i}")).collect()
}

/// Default parameter triples used by examples and tests: `(2, 3, -5/7)` and `(3, 5, -1/2)`.
pub fn sample_sklyanin_parameters() -> Vec<(Scalar, Scalar, Scalar)> {
    vec![
        (scalar(2), scalar(3), ratio(-5, 7)),
        (scalar(3), scalar(5), ratio(-1, 2)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_dependent_relations() {
        let v = vec![scalar(1), scalar(0), scalar(0), scalar(-1)];
        let err = QuadraticPresentation::new(default_names(2), vec![v.clone(), v]);
        assert!(err.is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = QuadraticPresentation::sklyanin(&scalar(2), &scalar(3), &ratio(-5, 7)).unwrap();
        let back = QuadraticPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn integer_coefficients_accepted() {
        let text = r#"{"generators":["a","b"],"relations":[[{"coef":1,"word":["a","b"]},{"coef":"-1","word":["b","a"]}]]}"#;
        let p = QuadraticPresentation::from_json(text).unwrap();
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relations()[0][1], scalar(1));
        assert_eq!(p.relations()[0][2], scalar(-1));
    }

    #[test]
    fn sklyanin_parameter_checks() {
        assert!(QuadraticPresentation::sklyanin(&scalar(2), &scalar(3), &scalar(1)).is_err());
        let g = QuadraticPresentation::sklyanin_gamma(&scalar(3), &scalar(5)).unwrap();
        assert_eq!(g, ratio(-1, 2));
        assert_eq!(QuadraticPresentation::sklyanin(&scalar(2), &scalar(3), &ratio(-5, 7)).unwrap().relations().len(), 6);
    }
}
