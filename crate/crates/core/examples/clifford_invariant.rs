//! Builds C(A) = A^![w^{-1}]_0 for quadrics in commutative k[x0..x3] and
//! compares it with the classical even Clifford algebra of the same form.

use ncquad::cliff::{
    clifford_from_dual, compare_invariants, diagonal_form, even_clifford_oracle, find_w, hyperbolic_form,
    identity_is_w_squared, lift_from_form, Hypersurface,
};
use ncquad::exactlin::Matrix;
use ncquad::qalg::QuadraticPresentation;

fn main() -> ncquad::Result<()> {
    let forms: [(&str, Matrix); 4] = [
        ("x0x3 - x1x2", hyperbolic_form()),
        ("x0² + x1² + x2² + x3²", diagonal_form(&[1, 1, 1, 1])),
        ("x0² + x1² + x2²", diagonal_form(&[1, 1, 1, 0])),
        ("x0² + x1²", diagonal_form(&[1, 1, 0, 0])),
    ];
    for (name, q) in forms {
        let h = Hypersurface::new(QuadraticPresentation::commutative(4), lift_from_form(&q))?;
        let dual = find_w(&h)?;
        let c = clifford_from_dual(&dual)?;
        let cmp = compare_invariants(&c, &even_clifford_oracle(&q))?;
        println!("{name}");
        println!("  w = {}", dual.table.format_element(&dual.w));
        println!("  dim C(A) = {}, identity is w²: {}", c.dim(), identity_is_w_squared(&dual, &c)?);
        println!("  C(A):   {:?}", cmp.left);
        println!("  oracle: {:?}", cmp.right);
        println!("  match: {}", cmp.equal);
    }
    Ok(())
}
