//! The adjugate matrix factorization of x0x3 - x1x2 and the Hilbert
//! series of its cokernel; a corrupted factor is rejected with a witness.

use ncquad::cliff::{parse_linear_matrix, verify_matrix_factorization};
use ncquad::expr::parse_homogeneous;
use ncquad::qalg::{GradedTable, QuadraticPresentation};

fn main() -> ncquad::Result<()> {
    let s = QuadraticPresentation::commutative(4);
    let table = GradedTable::build(&s, 6);
    let z = table.tensor(2, &parse_homogeneous("x0*x3 - x1*x2", s.generators(), 2)?)?;

    let phi = parse_linear_matrix("[[[1,0,0,0],[0,1,0,0]],[[0,0,1,0],[0,0,0,1]]]", 4)?;
    let psi = parse_linear_matrix("[[[0,0,0,1],[0,-1,0,0]],[[0,0,-1,0],[1,0,0,0]]]", 4)?;
    let r = verify_matrix_factorization(&s, &table, &phi, &psi, &z)?;
    println!("verified: {}", r.verified);
    println!("coker φ: {} = {:?}", r.cokernel_series.as_deref().unwrap_or("?"), r.expected_dims);
    println!("from ranks:        {:?}", r.cokernel_dims);

    let bad = parse_linear_matrix("[[[0,0,0,1],[0,1,0,0]],[[0,0,-1,0],[1,0,0,0]]]", 4)?;
    let r = verify_matrix_factorization(&s, &table, &phi, &bad, &z)?;
    if let Some(w) = r.witness {
        println!("corrupted ψ: ({})[{}][{}] = {}, expected {}", w.product, w.row, w.col, w.got, w.expected);
    }
    Ok(())
}
