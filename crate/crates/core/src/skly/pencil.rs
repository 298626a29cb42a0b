//! Counting singular members of the pencil `z = Ω₁ + λΩ₂` through the
//! discriminant of the trace form of `C(A_λ)`.
//!
//! At each sample `λ` the determinant of the trace Gram matrix of `C(A_λ)`
//! is computed in the normal-word basis of `A^!_4`. On the set of `λ` where
//! the normal words of the dual table do not change, every coordinate is a
//! rational function of `λ`, so samples with a non-generic set of normal
//! words are discarded before interpolating.
//!
//! The determinant depends on the basis through a factor `det(P(λ))²`,
//! which can vanish at values of `λ` where `C(A_λ)` is semisimple. A linear
//! change of generators changes the normal words and moves those spurious
//! roots, while the genuine ones stay put. The count is therefore taken from
//! the gcd of the squarefree parts over several coordinate systems
//! ("frames"); rational roots of the gcd are then checked directly.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cliff::{clifford_from_dual, find_w, FinDimAlgebra, Hypersurface};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, Matrix, Scalar, UniPoly};
use crate::findim;
use crate::qalg::QuadraticPresentation;

const HOLDOUTS: usize = 3;
const FRAMES: usize = 2;

#[derive(Debug, Clone, Serialize)]
pub struct PencilSample {
    pub lambda: String,
    pub determinant: Option<String>,
    /// Normal words of the dual table agree with the majority of samples.
    pub generic: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FrameReport {
    /// Old generator `x_i` is `Σ_j change[i][j] y_j` in the new generators.
    pub change: Vec<Vec<i64>>,
    pub generic_samples: usize,
    pub holdouts_ok: bool,
    /// Coefficients of `d(λ)`, constant term first.
    pub polynomial: Vec<String>,
    pub squarefree_degree: Option<usize>,
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RationalRootCheck {
    pub lambda: String,
    /// Direct semisimplicity test of `C(A_λ)`.
    pub semisimple: bool,
    /// Root of the factor shared by all frames.
    pub in_common_factor: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PencilReport {
    /// Samples in the original generator order.
    pub samples: Vec<PencilSample>,
    /// `d(λ)` in the original generator order, constant term first.
    pub polynomial: Vec<String>,
    pub squarefree_degree: usize,
    pub frames: Vec<FrameReport>,
    /// Monic gcd of the squarefree parts over all frames, with rational
    /// roots at semisimple members divided out.
    pub common_factor: Vec<String>,
    pub finite_roots: usize,
    /// Whether the member `Ω₂` (λ = ∞) is singular; `None` if its `C(A)`
    /// could not be built.
    pub infinity_singular: Option<bool>,
    pub distinct_root_count: usize,
    pub rational_root_checks: Vec<RationalRootCheck>,
    /// `Ω₁` and `Ω₂` are proportional modulo the relations.
    pub degenerate: bool,
}

/// Counts singular members of the pencil `Ω₁ + λΩ₂` (lifts to `V ⊗ V`),
/// including `λ = ∞`.
pub fn pencil_discriminant(
    s: &QuadraticPresentation,
    omega1: &[Scalar],
    omega2: &[Scalar],
    samples: &[Scalar],
    degree_bound: usize,
) -> Result<PencilReport> {
    let g = s.num_generators();
    if omega1.len() != g * g || omega2.len() != g * g {
        return Err(Error::Invalid(format!("pencil generators need {} coefficients", g * g)));
    }
    if proportional_mod_relations(s, omega1, omega2) {
        return degenerate_report(s, omega1);
    }
    let needed = degree_bound + 1 + HOLDOUTS;
    if samples.len() < needed {
        return Err(Error::Invalid(format!(
            "{} samples given, degree bound {degree_bound} needs at least {needed}",
            samples.len()
        )));
    }

    let frames: Vec<Vec<Vec<i64>>> = (0..FRAMES).map(|k| frame_change(g, k)).collect();
    let jobs: Vec<(usize, usize)> = (0..frames.len())
        .flat_map(|f| (0..samples.len()).map(move |i| (f, i)))
        .collect();
    let results: Vec<SampleResult> = jobs
        .par_iter()
        .map(|&(f, i)| evaluate(s, omega1, omega2, &samples[i], &frames[f]))
        .collect();

    let mut frame_reports = Vec::new();
    let mut frame_polys = Vec::new();
    let mut first_samples = Vec::new();
    for (f, perm) in frames.iter().enumerate() {
        let chunk = &results[f * samples.len()..(f + 1) * samples.len()];
        let (sample_reports, fit) = fit_frame(samples, chunk, degree_bound, needed);
        if f == 0 {
            first_samples = sample_reports;
        }
        let report = match fit {
            Ok((poly, generic)) => {
                let sqf = poly.distinct_root_count();
                let r = FrameReport {
                    change: perm.clone(),
                    generic_samples: generic,
                    holdouts_ok: true,
                    polynomial: poly_strings(&poly),
                    squarefree_degree: sqf,
                    diagnostic: None,
                };
                frame_polys.push(Some(poly));
                r
            }
            Err((generic, diag)) => {
                frame_polys.push(None);
                FrameReport {
                    change: perm.clone(),
                    generic_samples: generic,
                    holdouts_ok: false,
                    polynomial: Vec::new(),
                    squarefree_degree: None,
                    diagnostic: Some(diag),
                }
            }
        };
        frame_reports.push(report);
    }

    let base = frame_polys[0].clone().ok_or_else(|| {
        Error::hypothesis(
            "trace discriminant interpolates with the given degree bound",
            frame_reports[0].diagnostic.clone().unwrap_or_default(),
        )
    })?;
    let fitted: Vec<&UniPoly> = frame_polys.iter().flatten().collect();
    if fitted.len() < 2 {
        return Err(Error::hypothesis(
            "trace discriminant interpolates in at least two frames",
            "only the original generator order produced a consistent fit; raise the degree bound or the sample count",
        ));
    }
    if base.is_zero() {
        return Err(Error::hypothesis(
            "generic member of the pencil is smooth",
            "the trace discriminant vanishes identically",
        ));
    }
    let mut common = fitted
        .iter()
        .map(|p| p.squarefree_part())
        .reduce(|a, b| a.gcd(&b))
        .expect("at least two frames")
        .monic();

    // every rational root of any frame's polynomial is checked directly
    let mut candidates: Vec<Scalar> = fitted.iter().flat_map(|p| p.squarefree_part().rational_roots()).collect();
    candidates.sort();
    candidates.dedup();
    let rational_root_checks: Vec<RationalRootCheck> = candidates
        .par_iter()
        .map(|r| {
            let lift = combine(omega1, omega2, r);
            let semisimple = analyze_member(s, &lift).map(|a| a.smooth).unwrap_or(false);
            RationalRootCheck {
                lambda: format_scalar(r),
                semisimple,
                in_common_factor: common.eval(r).is_zero(),
            }
        })
        .collect();
    for (r, check) in candidates.iter().zip(&rational_root_checks) {
        if check.semisimple && check.in_common_factor {
            let linear = UniPoly::new(vec![-r.clone(), Scalar::one()]);
            common = common.div_rem(&linear).0;
        }
    }
    let finite_roots = common.degree().unwrap_or(0);

    let infinity_singular = analyze_member(s, omega2).map(|c| !c.smooth).ok();
    let distinct_root_count = finite_roots + usize::from(infinity_singular == Some(true));

    Ok(PencilReport {
        samples: first_samples,
        squarefree_degree: base.distinct_root_count().unwrap_or(0),
        polynomial: poly_strings(&base),
        frames: frame_reports,
        common_factor: poly_strings(&common),
        finite_roots,
        infinity_singular,
        distinct_root_count,
        rational_root_checks,
        degenerate: false,
    })
}

struct SampleResult {
    det: Result<Scalar>,
    signature: Vec<Vec<Vec<usize>>>,
}

fn evaluate(s: &QuadraticPresentation, o1: &[Scalar], o2: &[Scalar], lambda: &Scalar, change: &[Vec<i64>]) -> SampleResult {
    let run = || -> Result<(Scalar, Vec<Vec<Vec<usize>>>)> {
        let rels = s.relations().iter().map(|r| substitute(r, change)).collect();
        let sp = QuadraticPresentation::new(s.generators().to_vec(), rels)?;
        let lift = substitute(&combine(o1, o2, lambda), change);
        let h = Hypersurface::new(sp, lift)?;
        let dual = find_w(&h)?;
        let c = clifford_from_dual(&dual)?;
        let signature = (2..=dual.table.max_degree())
            .map(|n| dual.table.basis_words(n).to_vec())
            .collect();
        Ok((c.trace_gram().det(), signature))
    };
    match run() {
        Ok((det, signature)) => SampleResult { det: Ok(det), signature },
        Err(e) => SampleResult {
            det: Err(e),
            signature: Vec::new(),
        },
    }
}

type FrameFit = std::result::Result<(UniPoly, usize), (usize, String)>;

fn fit_frame(samples: &[Scalar], chunk: &[SampleResult], degree_bound: usize, needed: usize) -> (Vec<PencilSample>, FrameFit) {
    let mut counts: HashMap<&Vec<Vec<Vec<usize>>>, usize> = HashMap::new();
    for r in chunk.iter().filter(|r| r.det.is_ok()) {
        *counts.entry(&r.signature).or_default() += 1;
    }
    // ties broken by first occurrence so the choice is deterministic
    let majority = chunk
        .iter()
        .filter(|r| r.det.is_ok())
        .max_by_key(|r| counts[&r.signature])
        .map(|r| r.signature.clone());
    let mut points = Vec::new();
    let reports = samples
        .iter()
        .zip(chunk)
        .map(|(lambda, r)| {
            let generic = r.det.is_ok() && Some(&r.signature) == majority.as_ref();
            if generic {
                points.push((lambda.clone(), r.det.as_ref().unwrap().clone()));
            }
            PencilSample {
                lambda: format_scalar(lambda),
                determinant: r.det.as_ref().ok().map(format_scalar),
                generic,
                error: r.det.as_ref().err().map(|e| e.to_string()),
            }
        })
        .collect();
    let generic = points.len();
    if generic < needed {
        return (
            reports,
            Err((generic, format!("only {generic} usable samples, {needed} needed"))),
        );
    }
    let poly = UniPoly::interpolate(&points[..degree_bound + 1]);
    let bad = points[degree_bound + 1..].iter().find(|(x, y)| poly.eval(x) != *y);
    let fit = match bad {
        None => Ok((poly, generic)),
        Some((x, _)) => Err((
            generic,
            format!(
                "degree <= {degree_bound} interpolant misses the held-out sample at {}; raise the degree bound",
                format_scalar(x)
            ),
        )),
    };
    (reports, fit)
}

fn combine(o1: &[Scalar], o2: &[Scalar], lambda: &Scalar) -> Vec<Scalar> {
    o1.iter().zip(o2).map(|(a, b)| a + lambda * b).collect()
}

/// Frame 0 is the identity; frame 1 is the shear `x_i = y_i + y_{i-1}`,
/// which moves every normal word while keeping coefficients small.
fn frame_change(g: usize, k: usize) -> Vec<Vec<i64>> {
    (0..g)
        .map(|i| (0..g).map(|j| i64::from(i == j || (k > 0 && j + 1 == i))).collect())
        .collect()
}

/// Rewrites a tensor `Σ v_ij x_i x_j` under `x_i = Σ_a M_ia y_a`: the
/// coefficient matrix becomes `Mᵀ V M`.
fn substitute(v: &[Scalar], m: &[Vec<i64>]) -> Vec<Scalar> {
    let g = m.len();
    let mut out = vec![Scalar::zero(); g * g];
    for i in 0..g {
        for j in 0..g {
            let c = &v[i * g + j];
            if c.is_zero() {
                continue;
            }
            for a in 0..g {
                if m[i][a] == 0 {
                    continue;
                }
                for b in 0..g {
                    if m[j][b] != 0 {
                        out[a * g + b] += c * Scalar::from_integer((m[i][a] * m[j][b]).into());
                    }
                }
            }
        }
    }
    out
}

fn proportional_mod_relations(s: &QuadraticPresentation, o1: &[Scalar], o2: &[Scalar]) -> bool {
    let g = s.num_generators();
    let mut rows = s.relations().to_vec();
    rows.push(o1.to_vec());
    rows.push(o2.to_vec());
    crate::exactlin::span_rank(&rows, g * g) < s.relations().len() + 2
}

fn analyze_member(s: &QuadraticPresentation, lift: &[Scalar]) -> Result<findim::AnalysisReport> {
    let c = member_algebra(s, lift)?;
    findim::analyze(&c)
}

fn member_algebra(s: &QuadraticPresentation, lift: &[Scalar]) -> Result<FinDimAlgebra> {
    let h = Hypersurface::new(s.clone(), lift.to_vec())?;
    clifford_from_dual(&find_w(&h)?)
}

// Ω₂ is a multiple of Ω₁: a single quadric, no parameter to vary.
fn degenerate_report(s: &QuadraticPresentation, omega1: &[Scalar]) -> Result<PencilReport> {
    let det = member_algebra(s, omega1)?.trace_gram().det();
    let poly = UniPoly::constant(det);
    Ok(PencilReport {
        samples: Vec::new(),
        polynomial: poly_strings(&poly),
        squarefree_degree: 0,
        frames: Vec::new(),
        common_factor: vec!["1".into()],
        finite_roots: 0,
        infinity_singular: None,
        distinct_root_count: 0,
        rational_root_checks: Vec::new(),
        degenerate: true,
    })
}

fn poly_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_scalar).collect()
}

/// Independent count for commutative pencils: distinct roots of
/// `det(M₁ + λM₂)`, plus one when `det M₂ = 0` (the member at infinity).
/// `None` when every member is singular.
pub fn commutative_pencil_oracle(m1: &Matrix, m2: &Matrix) -> Option<(UniPoly, usize)> {
    let n = m1.rows();
    let points: Vec<(Scalar, Scalar)> = (0..=n as i64)
        .map(|k| {
            let lambda = Scalar::from_integer(k.into());
            (lambda.clone(), m1.add(&m2.scale(&lambda)).det())
        })
        .collect();
    let poly = UniPoly::interpolate(&points);
    let count = poly.distinct_root_count()?;
    let at_infinity = m2.det().is_zero();
    Some((poly, count + usize::from(at_infinity)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliff::{diagonal_form, hyperbolic_form, lift_from_form};

    #[test]
    fn oracle_counts_roots_and_infinity() {
        // (5λ² - 1/4)(6λ² - 1/4)
        let (_, n) = commutative_pencil_oracle(&hyperbolic_form(), &diagonal_form(&[1, 2, 3, 5])).unwrap();
        assert_eq!(n, 4);
        let (_, m) = commutative_pencil_oracle(&diagonal_form(&[1, 1, 1, 1]), &diagonal_form(&[1, 2, 0, 0])).unwrap();
        // det(q1 + λq2) = (1+λ)(1+2λ); both rank drops at infinity count once
        assert_eq!(m, 3);
    }

    #[test]
    fn degenerate_pencil_is_constant() {
        let s = QuadraticPresentation::commutative(4);
        let q = lift_from_form(&diagonal_form(&[1, 1, 1, 1]));
        let q2: Vec<Scalar> = q.iter().map(|c| c * Scalar::from_integer(3.into())).collect();
        let r = pencil_discriminant(&s, &q, &q2, &[], 4).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.polynomial.len(), 1);
        assert_eq!(r.distinct_root_count, 0);
    }
}
