//! Graded dimensions of a few quadratic algebras and their quadratic duals,
//! and the numerical Koszul identity H_{A^!}(t) H_A(-t) = 1.

use ncquad::cliff::Hypersurface;
use ncquad::exactlin::{format_scalar, LaurentPoly, RationalSeries};
use ncquad::expr::parse_homogeneous;
use ncquad::qalg::{koszul_dual, koszul_residual, sample_sklyanin_parameters, validate_sklyanin, GradedTable, QuadraticPresentation};

fn main() -> ncquad::Result<()> {
    let s = QuadraticPresentation::commutative(4);
    println!("k[x0..x3]:         {:?}", GradedTable::build(&s, 6).hilbert());

    // A = S/(z) has series (1+t)(1-t)^{-3}
    let z = parse_homogeneous("x0*x3 - x1*x2", s.generators(), 2)?;
    let h = Hypersurface::new(s, z)?;
    let a_dims = GradedTable::build(h.a(), 8).hilbert();
    let predicted = RationalSeries::over_one_minus_t_pow(LaurentPoly::from_coeffs(0, &[1, 1]), 3).expand(8);
    println!("S/(x0x3 - x1x2):   {a_dims:?}");
    println!("(1+t)/(1-t)^3:     [{}]", predicted.iter().map(format_scalar).collect::<Vec<_>>().join(", "));

    let dual_dims = GradedTable::build(&koszul_dual(h.a()), 8).hilbert();
    println!("A^!:               {dual_dims:?}");
    println!("Koszul residual:   {:?}", koszul_residual(&a_dims, &dual_dims));

    for (a, b, c) in sample_sklyanin_parameters() {
        let p = QuadraticPresentation::sklyanin(&a, &b, &c)?;
        let v = validate_sklyanin(&p, 5)?;
        println!(
            "Sklyanin ({}, {}, {}): dims {:?}, degree-two center {}",
            format_scalar(&a),
            format_scalar(&b),
            format_scalar(&c),
            v.hilbert,
            v.central_dim
        );
    }
    Ok(())
}
