//! The Schrödinger module of D(A) on A, its dual companion on A*, and the
//! structural isomorphisms connecting them to induction and the regular module.

use std::sync::Arc;

use drinfeld::double::build_double;
use drinfeld::io::resolve_spec;
use drinfeld::rep::{
    dual_schrodinger, find_iso, radford_induction, regular_module, schrodinger, tensor_module,
    trivial_module, FindIso,
};
use drinfeld::Result;

fn main() -> Result<()> {
    let a = resolve_spec("sweedler")?;
    let dq = build_double(&a)?;
    let schr = schrodinger(&dq)?;
    let dual_schr = dual_schrodinger(&dq)?;
    println!("{}: dim {}", schr.name, schr.dim);
    println!("{}: dim {}", dual_schr.name, dual_schr.dim);
    assert!(schr.validate()?.passed());
    assert!(dual_schr.validate()?.passed());
    println!("both module axioms verified exactly\n");

    // Schr(A) is the induction of the trivial module, via a ↦ 1⊗S⁻¹(a).
    let arc_a = Arc::new(a.clone());
    let induced = radford_induction(&dq, &trivial_module(&arc_a))?;
    let phi = a.antipode_inverse()?;
    assert!(drinfeld::rep::is_intertwiner(&schr, &induced, &phi));
    assert!(phi.inverse().is_ok());
    println!("Schr(A) ≅ I_A(k): the map a ↦ 1⊗S⁻¹(a) is an invertible intertwiner");

    // Schr ⊗ dualSchr is the regular D(A)-module; find an isomorphism by search.
    let tensor = tensor_module(&schr, &dual_schr)?;
    let regular = regular_module(&dq.h);
    match find_iso(&tensor, &regular)? {
        FindIso::Found(t) => {
            assert!(t.inverse().is_ok());
            println!("Schr ⊗ dualSchr ≅ regular D(A)-module (isomorphism found by search)");
        }
        other => panic!("expected an isomorphism, got {other:?}"),
    }
    Ok(())
}
