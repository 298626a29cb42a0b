use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, LaurentPoly, Matrix, RationalSeries, Scalar};
use crate::qalg::{projective_space_series, Element, GradedTable, QuadraticPresentation};

/// Square matrix whose entries are linear forms, each a coefficient vector
/// over the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMatrix {
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl LinearMatrix {
    pub fn new(entries: Vec<Vec<Vec<Scalar>>>, g: usize) -> Result<Self> {
        let s = entries.len();
        for row in &entries {
            if row.len() != s {
                return Err(Error::Invalid("matrix factorization entries must form a square matrix".into()));
            }
            if row.iter().any(|e| e.len() != g) {
                return Err(Error::Invalid(format!("linear form entries need {g} coefficients")));
            }
        }
        Ok(LinearMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn element(&self, i: usize, j: usize) -> Element {
        Element {
            degree: 1,
            coords: self.entries[i][j].clone(),
        }
    }
}

/// First entry where a product differs from `z·I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfWitness {
    /// `"phi*psi"` or `"psi*phi"`.
    pub product: String,
    pub row: usize,
    pub col: usize,
    pub got: String,
    pub expected: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixFactorizationReport {
    pub verified: bool,
    pub witness: Option<MfWitness>,
    /// Hilbert series of `coker φ`, `s·H_A(t)/(1 + t) = s(1-t)^{1-g}`, as a string.
    pub cokernel_series: Option<String>,
    /// Expansion of that series.
    pub expected_dims: Vec<i64>,
    /// Cokernel dimensions computed directly from the table.
    pub cokernel_dims: Vec<i64>,
    /// `H_M(t)(1 - t²) = s·H_A(t)(1 - t)` through the table degree.
    pub periodicity_shadow_holds: bool,
    #[serde(skip)]
    pub series: Option<RationalSeries>,
}

/// Checks `φψ = ψφ = z·I` in a commutative table and, on success, compares
/// the cokernel dimensions of `φ` with `s·H_A(t)/(1+t) = s(1-t)H_S(t)`.
pub fn verify_matrix_factorization(
    s_pres: &QuadraticPresentation,
    table: &GradedTable,
    phi: &LinearMatrix,
    psi: &LinearMatrix,
    z: &Element,
) -> Result<MatrixFactorizationReport> {
    let g = s_pres.num_generators();
    if !s_pres.same_relation_space(&QuadraticPresentation::commutative(g)) {
        return Err(Error::Unsupported("matrix factorization verifier needs a commutative presentation".into()));
    }
    if phi.size() != psi.size() {
        return Err(Error::Invalid("phi and psi have different sizes".into()));
    }
    if z.degree != 2 {
        return Err(Error::Invalid("z must have degree 2".into()));
    }
    let s = phi.size();
    let zero = table.zero(2);
    for (name, a, b) in [("phi*psi", phi, psi), ("psi*phi", psi, phi)] {
        for i in 0..s {
            for k in 0..s {
                let mut acc = zero.clone();
                for j in 0..s {
                    acc = acc.add(&table.multiply(&a.element(i, j), &b.element(j, k))?);
                }
                let expected = if i == k { z.clone() } else { zero.clone() };
                if acc != expected {
                    return Ok(MatrixFactorizationReport {
                        verified: false,
                        witness: Some(MfWitness {
                            product: name.into(),
                            row: i,
                            col: k,
                            got: table.format_element(&acc),
                            expected: table.format_element(&expected),
                        }),
                        cokernel_series: None,
                        expected_dims: Vec::new(),
                        cokernel_dims: Vec::new(),
                        periodicity_shadow_holds: false,
                        series: None,
                    });
                }
            }
        }
    }

    // s·H_A/(1+t) with H_A = (1-t²)(1-t)^{-g} reduces to s(1-t)^{1-g}
    let h_s = projective_space_series(g as u32);
    let one_plus_t = LaurentPoly::from_coeffs(0, &[1, 1]);
    let one_minus_t2 = LaurentPoly::from_coeffs(0, &[1, 0, -1]);
    let h_a = h_s.scale(&one_minus_t2);
    let series = RationalSeries::over_one_minus_t_pow(LaurentPoly::monomial(s as i64, 0), g as u32 - 1);
    let n = table.max_degree();
    let to_ints = |v: Vec<Scalar>| -> Vec<i64> {
        v.into_iter()
            .map(|c| i64::try_from(c.to_integer()).expect("small Hilbert coefficients"))
            .collect()
    };
    let expected_dims = to_ints(series.expand(n));
    let unreduced = RationalSeries::new(
        h_a.numerator() * &LaurentPoly::monomial(s as i64, 0),
        h_a.denominator() * &one_plus_t,
    )?;
    let cokernel_dims = cokernel_dims(table, phi)?;

    // H_M (1 - t²) versus s H_A (1 - t), both truncated at n
    let h_m = series.scale(&one_minus_t2).expand(n);
    let rhs = h_a
        .scale(&LaurentPoly::monomial(s as i64, 0))
        .scale(&LaurentPoly::one_minus_t())
        .expand(n);
    let shadow = h_m == rhs && unreduced.expand(n) == series.expand(n) && cokernel_dims == expected_dims;

    Ok(MatrixFactorizationReport {
        verified: true,
        witness: None,
        cokernel_series: Some(format!("{s}(1-t)^-{}", g - 1)),
        expected_dims,
        cokernel_dims,
        periodicity_shadow_holds: shadow,
        series: Some(series),
    })
}

/// `dim (coker φ)_n = s·dim S_n - rank(φ: S_{n-1}^s -> S_n^s)`.
fn cokernel_dims(table: &GradedTable, phi: &LinearMatrix) -> Result<Vec<i64>> {
    let s = phi.size();
    let mut out = vec![s as i64];
    for n in 1..=table.max_degree() {
        let (dn, dprev) = (table.dim(n), table.dim(n - 1));
        let mut m = Matrix::zeros(s * dn, s * dprev);
        for i in 0..s {
            for j in 0..s {
                let entry = phi.element(i, j);
                if entry.is_zero() {
                    continue;
                }
                let block = table.left_mult_matrix(&entry, n - 1)?;
                for r in 0..dn {
                    for c in 0..dprev {
                        let v = &block[(r, c)];
                        if !v.is_zero() {
                            m[(i * dn + r, j * dprev + c)] = v.clone();
                        }
                    }
                }
            }
        }
        out.push((s * dn) as i64 - m.rank() as i64);
    }
    Ok(out)
}

/// JSON form: an `s x s` array of coefficient arrays, coefficients as
/// strings or integers.
pub fn parse_linear_matrix(text: &str, g: usize) -> Result<LinearMatrix> {
    let raw: Vec<Vec<Vec<serde_json::Value>>> = serde_json::from_str(text)?;
    let entries = raw
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|coeffs| coeffs.iter().map(json_scalar).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMatrix::new(entries, g)
}

pub fn linear_matrix_to_json(m: &LinearMatrix) -> String {
    let raw: Vec<Vec<Vec<String>>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|e| e.iter().map(format_scalar).collect()).collect())
        .collect();
    serde_json::to_string(&raw).expect("serializable")
}

fn json_scalar(v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => Ok(crate::exactlin::parse_scalar(s)?),
        serde_json::Value::Number(n) => Ok(crate::exactlin::parse_scalar(&n.to_string())?),
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}
