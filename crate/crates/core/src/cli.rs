//! Command-line driver. [`run`] takes the argument list and output sinks
//! and returns the process exit code, so it can be exercised from tests.
//!
//! Exit codes: 0 success, 1 a mathematical hypothesis failed (the message
//! names it), 2 bad arguments or input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cliff::{self, parse_linear_matrix, Hypersurface};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, Scalar};
use crate::expr::parse_homogeneous;
use crate::findim;
use crate::kzero::{self, K0Class, ProjNKind};
use crate::qalg::{self, GradedTable, QuadraticPresentation};
use crate::skly::{self, Curve, ECPoint};

#[derive(Debug, Parser)]
#[command(name = "ncquad", version, about = "Exact computations for noncommutative quadric surfaces")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of the graded pieces through degree N.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Quadratic dual presentation (relations R^⊥).
    Dual { file: PathBuf },
    /// Basis of the degree-two center.
    Center { file: PathBuf },
    /// Structure constants of C(A) for A = S/(z).
    Clifford {
        file: PathBuf,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Smoothness and ruling count of Proj S/(z).
    Smooth {
        file: PathBuf,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Number of singular members of the pencil Ω₁ + λΩ₂.
    Pencil {
        file: PathBuf,
        /// Defaults to the first central basis element.
        #[arg(long, default_value = "#0")]
        omega1: String,
        /// Defaults to the second central basis element.
        #[arg(long, default_value = "#1")]
        omega2: String,
        /// Number of integer sample points, centered on 0.
        #[arg(long, default_value_t = 41)]
        samples: usize,
        #[arg(long, default_value_t = 32)]
        degree_bound: usize,
    },
    /// The Grothendieck lattice of a smooth quadric.
    K0 {
        #[command(subcommand)]
        action: K0Action,
    },
    /// The pencil of quadrics of a Sklyanin algebra on y² = x(x-e1)(x-e2).
    Sklyanin {
        /// Nonzero 2-torsion abscissas "e1,e2".
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Translation point "x,y".
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[command(subcommand)]
        action: SklyaninAction,
    },
    /// Checks φψ = ψφ = z·I and the cokernel Hilbert series.
    MfVerify {
        file: PathBuf,
        /// JSON s×s array of linear forms, inline or a file path.
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum K0Action {
    /// Runs every lattice identity.
    Suite,
    /// Euler form and intersection table.
    Table,
    /// Class of the fat point with h⁰ = i + 1.
    Fat { i: u32 },
    /// Class of a linear subspace in K₀ of quantum ℙⁿ.
    Projn {
        n: usize,
        /// structure, hyperplane, line or point
        kind: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SklyaninAction {
    /// Labels of the four singular quadrics.
    Singular,
    /// Canonical label of Q_z and whether it is singular.
    Label {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Rulings among sampled lines on Q_z.
    Ruling {
        #[arg(allow_hyphen_values = true)]
        z: String,
        /// Sample points nτ + ω with |n| ≤ range.
        #[arg(long, default_value_t = 2)]
        range: i64,
    },
    /// Whether four points (separated by ';') lie on a plane.
    Coplanar {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Lines of the exact sequence for the fat point F_{ω+iτ}.
    Fat {
        #[arg(allow_hyphen_values = true)]
        omega: String,
        #[arg(allow_hyphen_values = true)]
        i: i64,
    },
}

/// Parses `args` (including the program name), executes, and writes the
/// report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = writeln!(out, "{}", if cli.json { report.json } else { report.text });
            0
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(out, "{}", error_json(&e));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Hypothesis { .. } => 1,
        _ => 2,
    }
}

fn error_json(e: &Error) -> String {
    let v = match e {
        Error::Hypothesis { hypothesis, detail } => json!({
            "error": {"kind": "hypothesis", "hypothesis": hypothesis, "detail": detail}
        }),
        other => json!({"error": {"kind": "input", "detail": other.to_string()}}),
    };
    serde_json::to_string_pretty(&v).expect("serializable")
}

struct Report {
    text: String,
    json: String,
}

impl Report {
    fn new(text: String, value: &impl Serialize) -> Self {
        Report {
            text,
            json: serde_json::to_string_pretty(value).expect("serializable"),
        }
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Hilbert { file, degree } => hilbert(file, *degree),
        Command::Dual { file } => dual(file),
        Command::Center { file } => center(file),
        Command::Clifford { file, z, degree } => clifford(file, z, *degree),
        Command::Smooth { file, z, degree } => smooth(file, z, *degree),
        Command::Pencil {
            file,
            omega1,
            omega2,
            samples,
            degree_bound,
        } => pencil(file, omega1, omega2, *samples, *degree_bound),
        Command::K0 { action } => k0(action),
        Command::Sklyanin { curve, tau, action } => sklyanin(curve, tau, action),
        Command::MfVerify {
            file,
            phi,
            psi,
            z,
            degree,
        } => mf_verify(file, phi, psi, z, *degree),
    }
}

fn hilbert(file: &Path, degree: usize) -> Result<Report> {
    let p = QuadraticPresentation::load(file)?;
    let dims = GradedTable::build(&p, degree).hilbert();
    let text = format!("dims through degree {degree}: {dims:?}");
    Ok(Report::new(text, &json!({"degree": degree, "dims": dims})))
}

fn dual(file: &Path) -> Result<Report> {
    let p = QuadraticPresentation::load(file)?;
    let d = qalg::koszul_dual(&p).to_json();
    Ok(Report {
        text: d.clone(),
        json: d,
    })
}

fn center(file: &Path) -> Result<Report> {
    let p = QuadraticPresentation::load(file)?;
    let t = GradedTable::build(&p, 3);
    let basis = qalg::central_quadratic_space(&t)?;
    let names: Vec<String> = basis.iter().map(|e| t.format_element(e)).collect();
    let mut text = format!("degree-two center has dimension {}", basis.len());
    for (k, n) in names.iter().enumerate() {
        text.push_str(&format!("\n  #{k}: {n}"));
    }
    let coords: Vec<Vec<String>> = basis
        .iter()
        .map(|e| e.coords.iter().map(format_scalar).collect())
        .collect();
    Ok(Report::new(text, &json!({"dim": basis.len(), "basis": names, "coords": coords})))
}

/// A degree-two element given as an expression in the generator names,
/// `#k` (the k-th central basis element) or a JSON coefficient vector over
/// the normal words of degree two. Returns a lift to `V ⊗ V`.
pub fn parse_z_spec(spec: &str, p: &QuadraticPresentation) -> Result<Vec<Scalar>> {
    let spec = spec.trim();
    let table = GradedTable::build(p, 3);
    if let Some(k) = spec.strip_prefix('#') {
        let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad central index {spec:?}")))?;
        let basis = qalg::central_quadratic_space(&table)?;
        let z = basis.get(k).ok_or_else(|| {
            Error::Invalid(format!("central basis has {} elements, no #{k}", basis.len()))
        })?;
        return Ok(qalg::lift_quadratic(&table, z));
    }
    if spec.starts_with('[') {
        let raw: Vec<serde_json::Value> = serde_json::from_str(spec)?;
        if raw.len() != table.dim(2) {
            return Err(Error::Invalid(format!(
                "z vector has {} entries, degree-two part has dimension {}",
                raw.len(),
                table.dim(2)
            )));
        }
        let coords = raw
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(parse_scalar(s)?),
                serde_json::Value::Number(n) => Ok(parse_scalar(&n.to_string())?),
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let z = crate::qalg::Element { degree: 2, coords };
        return Ok(qalg::lift_quadratic(&table, &z));
    }
    parse_homogeneous(spec, p.generators(), 2)
}

fn hypersurface(file: &Path, z: &str, degree: usize) -> Result<(Hypersurface, qalg::RegularityCertificate)> {
    if degree < 3 {
        return Err(Error::Invalid(format!("degree bound must be at least 3, got {degree}")));
    }
    let p = QuadraticPresentation::load(file)?;
    let lift = parse_z_spec(z, &p)?;
    let h = Hypersurface::new(p, lift)?;
    let table = GradedTable::build(h.s(), degree);
    let cert = h.check_z(&table, degree)?;
    Ok((h, cert))
}

fn clifford(file: &Path, z: &str, degree: usize) -> Result<Report> {
    let (h, cert) = hypersurface(file, z, degree)?;
    let dual = cliff::find_w(&h)?;
    let c = cliff::clifford_from_dual(&dual)?;
    let associative = c.associativity_failure().is_none();
    let w_squared = cliff::identity_is_w_squared(&dual, &c)?;
    let text = format!(
        "dim C(A) = {}\nbasis: {}\nassociative: {associative}\nidentity is w²: {w_squared}\nw = {}",
        c.dim(),
        c.labels().join(" "),
        dual.table.format_element(&dual.w)
    );
    Ok(Report::new(
        text,
        &json!({
            "dim": c.dim(),
            "z_certificate": cert,
            "w": dual.table.format_element(&dual.w),
            "associative": associative,
            "identity_is_w_squared": w_squared,
            "algebra": c.to_file(),
        }),
    ))
}

fn smooth(file: &Path, z: &str, degree: usize) -> Result<Report> {
    let (h, _) = hypersurface(file, z, degree)?;
    let c = cliff::clifford_algebra(&h)?;
    let r = findim::analyze(&c)?;
    let text = format!(
        "smooth: {}\nrulings: {}\ndim {}, radical {}, center {}, semisimple center {}, commutator codim {}\nno one-dimensional modules: {}",
        r.smooth,
        r.ruling_count,
        r.dim,
        r.radical_dim,
        r.center_dim,
        r.ss_center_dim,
        r.commutator_codim,
        r.one_dim_reps_absent
    );
    Ok(Report::new(text, &r))
}

fn pencil(file: &Path, omega1: &str, omega2: &str, samples: usize, degree_bound: usize) -> Result<Report> {
    let p = QuadraticPresentation::load(file)?;
    let o1 = parse_z_spec(omega1, &p)?;
    let o2 = parse_z_spec(omega2, &p)?;
    let half = (samples / 2) as i64;
    let points: Vec<Scalar> = (0..samples as i64).map(|k| Scalar::from_integer((k - half).into())).collect();
    let r = skly::pencil_discriminant(&p, &o1, &o2, &points, degree_bound)?;
    let infinity = match r.infinity_singular {
        Some(true) => "singular",
        Some(false) => "smooth",
        None => "unknown",
    };
    let text = format!(
        "singular members: {}\ncommon factor (constant term first): [{}]\nfinite roots: {}, member at infinity: {infinity}\nrational roots checked: {}",
        r.distinct_root_count,
        r.common_factor.join(", "),
        r.finite_roots,
        r.rational_root_checks
            .iter()
            .map(|c| format!("{} ({})", c.lambda, if c.semisimple { "smooth" } else { "singular" }))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(Report::new(text, &r))
}

fn k0(action: &K0Action) -> Result<Report> {
    let k = kzero::lattice_init();
    match action {
        K0Action::Suite => {
            let s = k.relation_suite();
            let mut text = String::new();
            for c in &s.checks {
                text.push_str(&format!("{} {} ({})\n", if c.holds { "ok  " } else { "FAIL" }, c.name, c.detail));
            }
            text.push_str(&format!(
                "note: {} = {} ({})",
                s.displayed_variant.relation, s.displayed_variant.value, s.displayed_variant.note
            ));
            let report = Report::new(text, &s);
            if s.all_hold {
                Ok(report)
            } else {
                Err(Error::hypothesis("K0 lattice identities", "an identity failed; see the suite report"))
            }
        }
        K0Action::Table => {
            let t = k.intersection_table();
            let mut text = String::from("Euler form on (a, ℓ, ℓ', p):\n");
            for (name, row) in kzero::BASIS_NAMES.iter().zip(k.g.iter()) {
                text.push_str(&format!("  {name:>2}: {row:?}\n"));
            }
            text.push_str("intersection numbers on (ℓ, ℓ', h, p):\n");
            for (name, row) in t.names.iter().zip(t.values.iter()) {
                text.push_str(&format!("  {name:>2}: {row:?}\n"));
            }
            Ok(Report::new(text.trim_end().to_string(), &json!({"euler": k.g, "t": k.t, "intersection": t})))
        }
        K0Action::Fat { i } => {
            let f = k.fat_class(*i);
            let text = format!(
                "class {f}\n(F, F) = {}\nF.F = {}",
                k.euler(f, f),
                k.intersect(f, f)
            );
            Ok(Report::new(
                text,
                &json!({"i": i, "class": f, "display": f.to_string(), "euler": k.euler(f, f), "self_intersection": k.intersect(f, f)}),
            ))
        }
        K0Action::Projn { n, kind, shift } => {
            let kind: ProjNKind = kind.parse()?;
            let c = kzero::projn_class(*n, kind, *shift);
            let text = format!("{c}\nin powers of t: {:?}", c.t_coeffs());
            Ok(Report::new(text, &json!({"n": n, "u_coeffs": c.u_coeffs, "t_coeffs": c.t_coeffs(), "display": c.to_string()})))
        }
    }
}

fn sklyanin(curve: &str, tau: &str, action: &SklyaninAction) -> Result<Report> {
    let c = Curve::parse(curve, tau)?;
    match action {
        SklyaninAction::Singular => {
            let labels = c.singular_labels();
            let text = labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Report::new(text, &json!({"count": labels.len(), "labels": labels})))
        }
        SklyaninAction::Label { z } => {
            let z = ECPoint::parse(z)?;
            check_on_curve(&c, &z)?;
            let label = c.label(&z);
            let singular = c.is_singular(&label);
            let text = format!("{label} ({})", if singular { "singular" } else { "smooth" });
            Ok(Report::new(text, &json!({"label": label, "singular": singular})))
        }
        SklyaninAction::Ruling { z, range } => {
            let z = ECPoint::parse(z)?;
            check_on_curve(&c, &z)?;
            let label = c.label(&z);
            let points = c.sample_points(*range);
            let lines = c.sample_lines(&label, &points);
            let classes = c.ruling_classes(&lines, &label)?;
            let text = format!(
                "{label}: {} sampled lines fall into {} ruling(s)",
                lines.len(),
                classes.len()
            );
            let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            Ok(Report::new(
                text,
                &json!({"label": label, "lines": lines.len(), "rulings": classes.len(), "class_sizes": sizes}),
            ))
        }
        SklyaninAction::Coplanar { points } => {
            let pts = points.split(';').map(ECPoint::parse).collect::<Result<Vec<_>>>()?;
            let pts: [ECPoint; 4] = pts
                .try_into()
                .map_err(|_| Error::Invalid("coplanar needs exactly four points".into()))?;
            for p in &pts {
                check_on_curve(&c, p)?;
            }
            let coplanar = c.coplanar(&pts);
            Ok(Report::new(format!("coplanar: {coplanar}"), &json!({"coplanar": coplanar})))
        }
        SklyaninAction::Fat { omega, i } => {
            let omega = ECPoint::parse(omega)?;
            if !c.is_two_torsion(&omega) {
                return Err(Error::Invalid(format!("{omega} is not a 2-torsion point")));
            }
            let (s1, s2) = c.fat_point_sequence_sums(&omega, *i);
            let k = kzero::lattice_init();
            let class: Option<K0Class> = u32::try_from(*i).ok().map(|i| k.fat_class(i));
            let h0 = u64::try_from(*i).ok().map(skly::fat_point_h0);
            let text = format!(
                "lines p + q = {s1} and p + q = {s2} on {}\nh0 = {}\nclass {}",
                c.label(&s1),
                h0.map_or("n/a".into(), |h| h.to_string()),
                class.map_or("n/a".into(), |f| f.to_string())
            );
            Ok(Report::new(
                text,
                &json!({
                    "quadric": c.label(&s1),
                    "sums": [s1, s2],
                    "h0": h0,
                    "class": class,
                }),
            ))
        }
    }
}

fn check_on_curve(c: &Curve, p: &ECPoint) -> Result<()> {
    if c.contains(p) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{p} is not on the curve")))
    }
}

fn read_inline_or_file(s: &str) -> Result<String> {
    if s.trim_start().starts_with('[') {
        Ok(s.to_string())
    } else {
        Ok(std::fs::read_to_string(s)?)
    }
}

fn mf_verify(file: &Path, phi: &str, psi: &str, z: &str, degree: usize) -> Result<Report> {
    let p = QuadraticPresentation::load(file)?;
    let g = p.num_generators();
    let phi = parse_linear_matrix(&read_inline_or_file(phi)?, g)?;
    let psi = parse_linear_matrix(&read_inline_or_file(psi)?, g)?;
    let lift = parse_z_spec(z, &p)?;
    let table = GradedTable::build(&p, degree.max(2));
    let z = table.tensor(2, &lift)?;
    let r = cliff::verify_matrix_factorization(&p, &table, &phi, &psi, &z)?;
    let text = match &r.witness {
        None => format!(
            "verified: φψ = ψφ = z·I\ncokernel series: {}\nexpected dims: {:?}\ncomputed dims: {:?}\nperiodicity check: {}",
            r.cokernel_series.as_deref().unwrap_or(""),
            r.expected_dims,
            r.cokernel_dims,
            r.periodicity_shadow_holds
        ),
        Some(w) => format!(
            "rejected: ({})[{}, {}] = {}, expected {}",
            w.product, w.row, w.col, w.got, w.expected
        ),
    };
    Ok(Report::new(text, &r))
}
