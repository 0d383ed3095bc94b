//! Tour of the builtin Hopf algebras: dimensions, Tr(S²), integrals, and the
//! unimodular / semisimple / cosemisimple predicates.

use drinfeld::io::resolve_spec;
use drinfeld::Result;

fn main() -> Result<()> {
    for spec in ["group:C2", "group:S3", "dualgroup:S3", "sweedler", "taft:3"] {
        let a = resolve_spec(spec)?;
        assert!(a.validate()?.passed());
        let ints = a.integrals()?;
        let preds = a.semisimplicity_predicates()?;
        println!("{spec}  ({})", a.name);
        println!("  dim = {}, Tr(S²) = {}", a.dim, a.trace_s_squared().to_text());
        let text = |v: &[drinfeld::Scalar]| {
            v.iter().map(|c| c.to_text()).collect::<Vec<_>>().join(", ")
        };
        println!("  left integral Λ   = [{}]", text(&ints.left_integral));
        println!("  dual integral λ   = [{}]", text(&ints.right_dual_integral));
        println!("  grouplike α       = [{}]", text(&ints.alpha));
        println!(
            "  unimodular={}  semisimple={}  cosemisimple={}",
            preds.unimodular, preds.semisimple, preds.cosemisimple
        );
        println!();
    }
    Ok(())
}
