//! Counts the singular members of the pencil of central quadrics of a
//! Sklyanin algebra from the discriminant of C(A_λ), and runs the same
//! count on a commutative pencil against the determinant of the forms.
//! Run with --release: each pencil takes a few dozen Clifford computations.

use ncquad::cliff::{diagonal_form, hyperbolic_form, lift_from_form};
use ncquad::exactlin::{scalar, Scalar};
use ncquad::qalg::{central_quadratic_space, lift_quadratic, sample_sklyanin_parameters, GradedTable, QuadraticPresentation};
use ncquad::skly::{commutative_pencil_oracle, pencil_discriminant};

fn main() -> ncquad::Result<()> {
    let samples: Vec<Scalar> = (-20..=20).map(scalar).collect();
    let (a, b, c) = sample_sklyanin_parameters()[0].clone();
    let s = QuadraticPresentation::sklyanin(&a, &b, &c)?;
    let t = GradedTable::build(&s, 3);
    let center = central_quadratic_space(&t)?;
    let (o1, o2) = (lift_quadratic(&t, &center[0]), lift_quadratic(&t, &center[1]));
    let r = pencil_discriminant(&s, &o1, &o2, &samples, 32)?;
    println!("Sklyanin pencil: {} singular members", r.distinct_root_count);
    println!("  common factor: [{}]", r.common_factor.join(", "));
    for chk in &r.rational_root_checks {
        println!("  λ = {:>6}: {}", chk.lambda, if chk.semisimple { "smooth" } else { "singular" });
    }

    let (q1, q2) = (hyperbolic_form(), diagonal_form(&[1, 2, 3, 5]));
    let r = pencil_discriminant(
        &QuadraticPresentation::commutative(4),
        &lift_from_form(&q1),
        &lift_from_form(&q2),
        &samples,
        32,
    )?;
    let (_, oracle) = commutative_pencil_oracle(&q1, &q2).expect("pencil has a smooth member");
    println!("commutative pencil: {} singular members, determinant oracle {oracle}", r.distinct_root_count);
    Ok(())
}
