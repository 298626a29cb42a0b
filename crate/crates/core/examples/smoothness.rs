//! Smoothness of Proj S/(z) read off from C(A): semisimple means smooth,
//! and the number of simple blocks counts the rulings by lines.

use ncquad::cliff::{clifford_algebra, Hypersurface};
use ncquad::expr::parse_homogeneous;
use ncquad::findim::{analyze, radical, verify_radical};
use ncquad::qalg::QuadraticPresentation;

fn main() -> ncquad::Result<()> {
    let s = QuadraticPresentation::commutative(4);
    for z in ["x0*x3 - x1*x2", "x0^2 + 2*x1^2 + 3*x2^2 + 5*x3^2", "x0^2 + x1^2 - x2^2", "x0*x1"] {
        let h = Hypersurface::new(s.clone(), parse_homogeneous(z, s.generators(), 2)?)?;
        let c = clifford_algebra(&h)?;
        let rad = radical(&c)?;
        verify_radical(&c, &rad)?;
        let r = analyze(&c)?;
        println!(
            "{z:<32} smooth: {:<5} rulings: {:<3} radical dim {}",
            r.smooth, r.ruling_count, r.radical_dim
        );
    }
    Ok(())
}
