//! The Grothendieck group of a smooth noncommutative quadric: t-action,
//! Euler form, intersection numbers, and the fat-point classes.

use ncquad::kzero::{lattice_init, projn_class, K0Class, ProjNKind};

fn main() {
    let k = lattice_init();
    let h = k.h();
    println!("h = ℓ + ℓ't = {h}");
    println!("a·t² = {}", k.act_t(K0Class::A, 2));
    println!("a·t⁻¹ = {}", k.act_t(K0Class::A, -1));

    let t = k.intersection_table();
    println!("intersection numbers on {:?}:", t.names);
    for row in t.values {
        println!("  {row:?}");
    }

    for i in 0..4 {
        let f = k.fat_class(i);
        println!("fat point, h⁰ = {}: {f}, F.F = {}", i + 1, k.intersect(f, f));
    }

    let suite = k.relation_suite();
    println!("{} identities, all hold: {}", suite.checks.len(), suite.all_hold);
    println!(
        "{} evaluates to {} in this lattice",
        suite.displayed_variant.relation, suite.displayed_variant.value
    );

    for kind in [ProjNKind::Hyperplane, ProjNKind::Line, ProjNKind::Point] {
        println!("{kind:?} in P^3: {}", projn_class(3, kind, 0));
    }
}
