//! Acceptance gate: twelve exact checks, one summary line each.

use drinfeld::hopf::Check;
use drinfeld::verify;

fn criterion(n: usize, label: &str, checks: Vec<Check>) -> bool {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    if failed.is_empty() {
        println!("PASS  criterion {n:2}: {label} ({} checks)", checks.len());
        true
    } else {
        println!("FAIL  criterion {n:2}: {label}");
        for f in failed {
            println!("        {}: {}", f.name, f.witness.clone().unwrap_or_default());
        }
        false
    }
}

#[test]
fn acceptance() {
    let start = std::time::Instant::now();
    let results = [
        criterion(
            1,
            "quantum dimensions equal Tr(S²) = 2, 6, 6, 0, 0 on the builtins",
            verify::check_quantum_dimensions(),
        ),
        criterion(
            2,
            "t₂,₂ dimensions of Schr(k[G]) equal |G|·#Conj for seven groups",
            verify::check_t22_group_table(),
        ),
        criterion(
            3,
            "20 fixed-seed random braids match the Gⁿ fixed-point oracle for C2 and S3",
            verify::check_oracle_equivalence(20),
        ),
        criterion(
            4,
            "t₂,₂ dimension of Schr(k^S3) = 36, separating k^S3 from k[S3]",
            verify::check_dual_group_separation(),
        ),
        criterion(
            5,
            "braided dimensions vanish on the braid suite for Sweedler and Taft(3)",
            verify::check_vanishing_non_cosemisimple(),
        ),
        criterion(
            6,
            "z = uS(u) action matches the α-twist and detects unimodularity",
            verify::check_z_detector(),
        ),
        criterion(
            7,
            "u and S(u) closed-form actions hold on all five builtins",
            verify::check_u_su_actions(),
        ),
        criterion(
            8,
            "torus closed forms match the braid pipeline for q ≤ 5, both sides",
            verify::check_torus_closed_forms(),
        ),
        criterion(
            9,
            "structural module isomorphisms are invertible intertwiners",
            verify::check_structural_isos(),
        ),
        criterion(
            10,
            "Hopf and quasitriangular axioms pass for builtins and doubles",
            {
                let mut cs = verify::check_axiom_suites();
                cs.extend(verify::check_module_validation());
                cs
            },
        ),
        criterion(
            11,
            "duality and transpose identities for partial braided traces",
            verify::check_duality_transpose(),
        ),
        criterion(
            12,
            "braided dimensions of Schr(k[C6]) and Schr(k[C2xC3]) coincide",
            verify::check_iso_invariance(),
        ),
    ];
    println!("elapsed: {:.2}s", start.elapsed().as_secs_f64());
    let failures = results.iter().filter(|ok| !**ok).count();
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
