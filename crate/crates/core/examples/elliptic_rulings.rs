//! The pencil of quadrics Q_z attached to y² = x³ - 25x with τ = (-4, 6):
//! the four singular members and the rulings by secant lines.

use ncquad::skly::{fat_point_h0, Curve};

fn main() -> ncquad::Result<()> {
    let c = Curve::parse("5,-5", "-4,6")?;
    let singular = c.singular_labels();
    println!("singular quadrics:");
    for l in &singular {
        println!("  {l}");
    }

    let points = c.sample_points(2);
    for n in [-2, 1, 3] {
        let z = c.label(&c.mul(n, c.tau()));
        let classes = c.ruling_classes(&c.sample_lines(&z, &points), &z)?;
        println!("{z}: {} ruling(s)", classes.len());
    }
    for z in &singular {
        let classes = c.ruling_classes(&c.sample_lines(z, &points), z)?;
        println!("{z}: {} ruling(s)", classes.len());
    }

    let omega = c.two_torsion()[1].clone();
    for i in 0..3 {
        let (s1, s2) = c.fat_point_sequence_sums(&omega, i);
        println!(
            "fat point at ω + {i}τ: h⁰ = {}, lines with p + q = {s1} and {s2}",
            fat_point_h0(i as u64)
        );
    }
    Ok(())
}
