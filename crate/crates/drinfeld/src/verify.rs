//! Named verification suites: every structural identity the engine relies on,
//! run as exact checks with witnesses.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::braid::{
    braided_dim, parse_braid, partial_trace_matrix, t2q_closed_form, torus_braid, trace_form,
    BraidWord, Orientation, Side,
};
use crate::double::{build_double, double_of_iso, phi_iso, validate_qt, QuasitriangularData};
use crate::error::Result;
use crate::field::{FieldDescriptor, Scalar};
use crate::hopf::{Check, HopfAlgebraData};
use crate::io::resolve_spec;
use crate::linalg::Matrix;
use crate::oracle::fy_fixed_points;
use crate::rep::{
    adjoint_module, co_induction, co_induction_trivial, coaction_of, dual_module,
    dual_schrodinger, find_iso, hom_basis, is_intertwiner, pullback_module, radford_induction,
    regular_module, restrict_to_base, schrodinger, tensor_module, trivial_module, FindIso,
    ModuleData,
};
use crate::zoo;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Axioms,
    Schrodinger,
    Traces,
    Theorems,
    All,
}

impl SuiteKind {
    pub fn parse(text: &str) -> Option<SuiteKind> {
        match text {
            "axioms" => Some(SuiteKind::Axioms),
            "schrodinger" => Some(SuiteKind::Schrodinger),
            "traces" => Some(SuiteKind::Traces),
            "theorems" => Some(SuiteKind::Theorems),
            "all" => Some(SuiteKind::All),
            _ => None,
        }
    }
}

fn chk(name: &str, body: impl FnOnce() -> Result<bool>) -> Check {
    match body() {
        Ok(true) => Check::ok(name),
        Ok(false) => Check::fail(name, "identity failed".into()),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// The five builtin algebras exercised throughout, with Tr(S²).
pub const BUILTINS: [(&str, i64); 5] = [
    ("group:C2", 2),
    ("group:S3", 6),
    ("dualgroup:S3", 6),
    ("sweedler", 0),
    ("taft:3", 0),
];

/// The standing braid test suite.
pub fn braid_suite() -> Vec<BraidWord> {
    ["1:", "2: 1", "2: -1", "2: 1 1", "2: 1 1 1", "3: 1 -2"]
        .iter()
        .map(|t| parse_braid(t).expect("well-formed suite braid"))
        .collect()
}

fn double_and_schr(spec: &str) -> Result<(QuasitriangularData, ModuleData)> {
    let a = resolve_spec(spec)?;
    let dq = build_double(&a)?;
    let schr = schrodinger(&dq)?;
    Ok((dq, schr))
}

/// α⁻¹ = α∘S as a covector.
fn alpha_inverse(a: &HopfAlgebraData) -> Result<Vec<Scalar>> {
    Ok(a.antipode.transpose().apply(&a.integrals()?.alpha))
}

/// The map a ↦ a₍₁₎⟨α⁻¹, a₍₂₎⟩ on A.
fn alpha_twist(a: &HopfAlgebraData, alpha_inv: &[Scalar]) -> Matrix {
    let mut m = Matrix::zero(a.field, a.dim, a.dim);
    for t in 0..a.dim {
        for (t1, t2, c) in a.comult_row(t) {
            let w = &alpha_inv[*t2] * c;
            if !w.is_zero() {
                let old = m.at(*t1, t).clone();
                *m.at_mut(*t1, t) = &old + &w;
            }
        }
    }
    m
}

/// Hopf axioms, double construction, quasitriangularity, and the Drinfel'd
/// element identities for every builtin.
pub fn check_axiom_suites() -> Vec<Check> {
    let mut out = Vec::new();
    for (spec, _) in BUILTINS {
        out.push(chk(&format!("Hopf axioms hold for {spec}"), || {
            Ok(resolve_spec(spec)?.validate()?.passed())
        }));
        out.push(chk(&format!("dual is involutive on {spec}"), || {
            let a = resolve_spec(spec)?;
            Ok(a.dual().dual().same_structure(&a))
        }));
        out.push(chk(&format!("Hopf axioms hold for the double of {spec}"), || {
            let a = resolve_spec(spec)?;
            Ok(build_double(&a)?.h.validate()?.passed())
        }));
        out.push(chk(
            &format!("quasitriangular identities (incl. Yang–Baxter) hold for the double of {spec}"),
            || {
                let a = resolve_spec(spec)?;
                Ok(validate_qt(&build_double(&a)?)?.passed())
            },
        ));
        out.push(chk(
            &format!("Drinfel'd element inverse and ℛ₂₁ℛ = Δ(u⁻¹)(u⊗u) hold for the double of {spec}"),
            || {
                let a = resolve_spec(spec)?;
                build_double(&a)?.drinfeld_elements()?;
                Ok(true)
            },
        ));
    }
    out.push(chk("φ and its dual compose to the identity on D(k[ℤ2]) and D(Sweedler)", || {
        for spec in ["group:C2", "sweedler"] {
            let a = resolve_spec(spec)?;
            let (phi_a, _) = phi_iso(&a)?;
            let (phi_astar, _) = phi_iso(&a.dual())?;
            if !phi_astar.matmul(&phi_a).is_identity() {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    out
}

/// Quantum dimensions: the right braided dimension of the Schrödinger module
/// at the identity braid equals Tr(S²).
pub fn check_quantum_dimensions() -> Vec<Check> {
    let one = parse_braid("1:").expect("identity braid");
    BUILTINS
        .iter()
        .map(|(spec, expect)| {
            chk(&format!("quantum dimension of Schr({spec}) = Tr(S²) = {expect}"), || {
                let a = resolve_spec(spec)?;
                let (dq, schr) = double_and_schr(spec)?;
                let v = braided_dim(&dq, &schr, &one, Side::Right, Orientation::Standard)?;
                Ok(v == a.trace_s_squared() && v == a.field.from_i64(*expect))
            })
        })
        .collect()
}

/// t_{2,2} braided dimensions of group-algebra Schrödinger modules equal
/// |G|·#Conj(G), both sides.
pub fn check_t22_group_table() -> Vec<Check> {
    let table = [
        ("C2", 4),
        ("C3", 9),
        ("C4", 16),
        ("C2xC2", 16),
        ("S3", 18),
        ("D4", 40),
        ("Q8", 40),
    ];
    let b = torus_braid(2, 2).expect("torus braid");
    table
        .iter()
        .map(|(g, expect)| {
            chk(&format!("t₂,₂ dimension of Schr(k[{g}]) = |G|·#Conj = {expect}"), || {
                let grp = zoo::make_group(g)?;
                if (grp.order * grp.conj_class_count()) as i64 != *expect {
                    return Ok(false);
                }
                let (dq, schr) = double_and_schr(&format!("group:{g}"))?;
                let expect = FieldDescriptor::Rationals.from_i64(*expect);
                for side in [Side::Left, Side::Right] {
                    if braided_dim(&dq, &schr, &b, side, Orientation::Standard)? != expect {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        })
        .collect()
}

/// Fixed-seed random braids for the oracle comparison: n ≤ 3 strands,
/// at most 6 letters.
pub fn random_braids(count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let strands = rng.gen_range(1..=3usize);
            let len = if strands == 1 { 0 } else { rng.gen_range(0..=6usize) };
            let letters = (0..len)
                .map(|_| {
                    let l = rng.gen_range(1..strands) as i32;
                    if rng.gen_bool(0.5) {
                        l
                    } else {
                        -l
                    }
                })
                .collect();
            BraidWord::new(strands, letters).expect("letters generated in range")
        })
        .collect()
}

/// Braided dimensions of group-algebra Schrödinger modules equal the
/// fixed-point counts of the combinatorial braid action on Gⁿ.
pub fn check_oracle_equivalence(count: usize) -> Vec<Check> {
    let braids = random_braids(count, 0x5EED_2024);
    ["C2", "S3"]
        .iter()
        .map(|g| {
            chk(
                &format!("Schr(k[{g}]) braided dimensions match the Gⁿ fixed-point oracle on {count} random braids"),
                || {
                    let grp = zoo::make_group(g)?;
                    let (dq, schr) = double_and_schr(&format!("group:{g}"))?;
                    for b in &braids {
                        let expect = FieldDescriptor::Rationals
                            .from_i64(fy_fixed_points(&grp, b)? as i64);
                        for side in [Side::Left, Side::Right] {
                            if braided_dim(&dq, &schr, b, side, Orientation::Standard)? != expect {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                },
            )
        })
        .collect()
}

/// The dual group algebra k^G has t_{2,2} dimension |G|², separating it from
/// k[G] when G is non-abelian.
pub fn check_dual_group_separation() -> Vec<Check> {
    vec![chk("t₂,₂ dimension of Schr(k^S3) = 36 ≠ 18 = that of Schr(k[S3])", || {
        let b = torus_braid(2, 2)?;
        let fq = FieldDescriptor::Rationals;
        let (dqd, schrd) = double_and_schr("dualgroup:S3")?;
        let vd = braided_dim(&dqd, &schrd, &b, Side::Left, Orientation::Standard)?;
        let (dqg, schrg) = double_and_schr("group:S3")?;
        let vg = braided_dim(&dqg, &schrg, &b, Side::Left, Orientation::Standard)?;
        Ok(vd == fq.from_i64(36) && vg == fq.from_i64(18) && vd != vg)
    })]
}

/// Braided dimensions of Schrödinger modules of non-cosemisimple algebras
/// vanish on the whole braid suite, both sides and both orientations.
pub fn check_vanishing_non_cosemisimple() -> Vec<Check> {
    ["sweedler", "taft:3"]
        .iter()
        .map(|spec| {
            chk(&format!("all braided dimensions of Schr({spec}) vanish on the braid suite"), || {
                let a = resolve_spec(spec)?;
                if a.semisimplicity_predicates()?.cosemisimple {
                    return Ok(false);
                }
                let (dq, schr) = double_and_schr(spec)?;
                for b in braid_suite() {
                    for side in [Side::Left, Side::Right] {
                        for orientation in [Orientation::Standard, Orientation::Reversed] {
                            if !braided_dim(&dq, &schr, &b, side, orientation)?.is_zero() {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            })
        })
        .collect()
}

/// z = uS(u) acts on the Schrödinger module by a ↦ a₍₁₎⟨α⁻¹,a₍₂₎⟩ and is the
/// identity exactly for unimodular base algebras.
pub fn check_z_detector() -> Vec<Check> {
    let mut out = Vec::new();
    for (spec, expect_identity) in [("sweedler", false), ("group:S3", true)] {
        out.push(chk(
            &format!("z-action on Schr({spec}) matches the α-twist and is{} the identity",
                if expect_identity { "" } else { " not" }),
            || {
                let a = resolve_spec(spec)?;
                let (dq, schr) = double_and_schr(spec)?;
                let z = dq.drinfeld_elements()?.z;
                let zm = schr.act_vec(&z);
                let closed = alpha_twist(&a, &alpha_inverse(&a)?);
                let unimodular = a.semisimplicity_predicates()?.unimodular;
                Ok(zm == closed
                    && zm.is_identity() == expect_identity
                    && unimodular == expect_identity)
            },
        ));
    }
    out
}

/// On Schr(A), u acts by a ↦ ΣS²(a₁)⟨α⁻¹,a₂⟩ and S(u) acts by S⁻².
pub fn check_u_su_actions() -> Vec<Check> {
    BUILTINS
        .iter()
        .map(|(spec, _)| {
            chk(&format!("u and S(u) closed-form actions hold on Schr({spec})"), || {
                let a = resolve_spec(spec)?;
                let (dq, schr) = double_and_schr(spec)?;
                let elems = dq.drinfeld_elements()?;
                let s2 = a.antipode.matmul(&a.antipode);
                let u_closed = s2.matmul(&alpha_twist(&a, &alpha_inverse(&a)?));
                let su_closed = s2.inverse()?;
                Ok(schr.act_vec(&elems.u) == u_closed && schr.act_vec(&elems.su) == su_closed)
            })
        })
        .collect()
}

/// The torus-braid closed forms agree with the generic braid-word pipeline
/// for q ∈ {0..5}, both sides.
pub fn check_torus_closed_forms() -> Vec<Check> {
    ["sweedler", "group:C3"]
        .iter()
        .map(|spec| {
            chk(&format!("t₂,q closed forms match the braid pipeline on Schr({spec}), q ≤ 5"), || {
                let (dq, schr) = double_and_schr(spec)?;
                for qexp in 0..=5u64 {
                    let b = torus_braid(2, qexp as i64)?;
                    for side in [Side::Left, Side::Right] {
                        let direct = braided_dim(&dq, &schr, &b, side, Orientation::Standard)?;
                        if direct != t2q_closed_form(&dq, &schr, qexp, side)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            })
        })
        .collect()
}

/// The tensor-shift map Φ(v⊗a⊗m) = Σ v⊗m₍₀₎⊗m₍₁₎a from I_A(V)⊗M to
/// I_A(V⊗M) as an explicit matrix.
fn induction_shift_phi(
    q: &QuasitriangularData,
    v: &ModuleData,
    m: &ModuleData,
) -> Result<(ModuleData, ModuleData, Matrix)> {
    let a = &q.base;
    let d = a.dim;
    let ia_v = radford_induction(q, v)?;
    let src = tensor_module(&ia_v, m)?;
    let ram = restrict_to_base(q, m);
    let vram = tensor_module(v, &ram)?;
    let tgt = radford_induction(q, &vram)?;
    let coact = coaction_of(q, m);
    let mut phi = Matrix::zero(a.field, tgt.dim, src.dim);
    for l in 0..v.dim {
        for t in 0..d {
            for mm in 0..m.dim {
                let col = (l * d + t) * m.dim + mm;
                for (m0, m1, c) in &coact[mm] {
                    let prod = a.multiply(&a.basis_vector(*m1), &a.basis_vector(t));
                    for (s, cs) in prod.iter().enumerate() {
                        if !cs.is_zero() {
                            let row = (l * m.dim + m0) * d + s;
                            let old = phi.at(row, col).clone();
                            *phi.at_mut(row, col) = &old + &(c * cs);
                        }
                    }
                }
            }
        }
    }
    Ok((src, tgt, phi))
}

/// The co-induction shift Ψ(a⊗m) = Σ a₁⊗a₂m from I^A(M) (M as a comodule)
/// to I^A(k)⊗M as an explicit matrix.
fn co_induction_shift_psi(
    q: &QuasitriangularData,
    m: &ModuleData,
) -> Result<(ModuleData, ModuleData, Matrix)> {
    let a = &q.base;
    let d = a.dim;
    let coact = coaction_of(q, m);
    let src = co_induction(q, format!("I^A({})", m.name), m.dim, &coact)?;
    let ia_k = co_induction_trivial(q)?;
    let tgt = tensor_module(&ia_k, m)?;
    let ram = restrict_to_base(q, m);
    let mut psi = Matrix::zero(a.field, tgt.dim, src.dim);
    for t in 0..d {
        for n in 0..m.dim {
            let col = t * m.dim + n;
            for (t1, t2, c) in a.comult_row(t) {
                let acted = ram.action[*t2].column(n);
                for (r, cr) in acted.iter().enumerate() {
                    if !cr.is_zero() {
                        let row = t1 * m.dim + r;
                        let old = psi.at(row, col).clone();
                        *psi.at_mut(row, col) = &old + &(c * cr);
                    }
                }
            }
        }
    }
    Ok((src, tgt, psi))
}

fn iso_found(result: FindIso) -> bool {
    matches!(result, FindIso::Found(_))
}

/// The structural module isomorphisms, each as an explicit invertible
/// intertwiner or a solver-found one.
pub fn check_structural_isos() -> Vec<Check> {
    let mut out = Vec::new();
    // Schr(A) ≅ I_A(k) via a ↦ 1⊗S⁻¹(a)
    for spec in ["sweedler", "group:C2", "group:S3"] {
        out.push(chk(&format!("Schr ≅ I_A(k) via 1⊗S⁻¹ for {spec}"), || {
            let a = resolve_spec(spec)?;
            let (dq, schr) = double_and_schr(spec)?;
            let arc_a = Arc::new(a.clone());
            let ia = radford_induction(&dq, &trivial_module(&arc_a))?;
            let phi = a.antipode_inverse()?;
            Ok(is_intertwiner(&schr, &ia, &phi) && phi.inverse().is_ok())
        }));
        out.push(chk(&format!("dualSchr ≅ I^A(k)* via S⁻¹⊗1 for {spec}"), || {
            let a = resolve_spec(spec)?;
            let dq = build_double(&a)?;
            let ds = dual_schrodinger(&dq)?;
            let dia = dual_module(&co_induction_trivial(&dq)?);
            let phi = a.antipode_inverse()?.transpose();
            Ok(is_intertwiner(&ds, &dia, &phi) && phi.inverse().is_ok())
        }));
    }
    for spec in ["sweedler", "group:C2"] {
        // pullback of the dual-side dual Schrödinger module along φ is Schr(A)
        out.push(chk(&format!("pullback of dualSchr(A*) along φ ≅ Schr(A), intertwiner S, for {spec}"), || {
            let a = resolve_spec(spec)?;
            let (dq, schr) = double_and_schr(spec)?;
            let (phi_mat, dq_astar) = phi_iso(&a)?;
            let pull = pullback_module(&phi_mat, &dual_schrodinger(&dq_astar)?, &dq.h)?;
            Ok(is_intertwiner(&pull, &schr, &a.antipode) && a.antipode.inverse().is_ok())
        }));
        out.push(chk(&format!("pullback of Schr(A*) along φ ≅ dualSchr(A) for {spec}"), || {
            let a = resolve_spec(spec)?;
            let dq = build_double(&a)?;
            let (phi_mat, dq_astar) = phi_iso(&a)?;
            let pull = pullback_module(&phi_mat, &schrodinger(&dq_astar)?, &dq.h)?;
            Ok(iso_found(find_iso(&pull, &dual_schrodinger(&dq)?)?))
        }));
        // tensor shifts on two instantiations each
        out.push(chk(&format!("induction tensor shift Φ is an invertible intertwiner for {spec}"), || {
            let a = resolve_spec(spec)?;
            let (dq, schr) = double_and_schr(spec)?;
            let arc_a = Arc::new(a.clone());
            for v in [trivial_module(&arc_a), adjoint_module(&arc_a)] {
                let (src, tgt, phi) = induction_shift_phi(&dq, &v, &schr)?;
                if !is_intertwiner(&src, &tgt, &phi) || phi.inverse().is_err() {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
        out.push(chk(&format!("co-induction tensor shift Ψ is an invertible intertwiner for {spec}"), || {
            let dq = build_double(&resolve_spec(spec)?)?;
            for m in [schrodinger(&dq)?, dual_schrodinger(&dq)?] {
                let (src, tgt, psi) = co_induction_shift_psi(&dq, &m)?;
                if !is_intertwiner(&src, &tgt, &psi) || psi.inverse().is_err() {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
        out.push(chk(&format!("Schr⊗Schr ≅ I_A(A_ad) for {spec}"), || {
            let a = resolve_spec(spec)?;
            let (dq, schr) = double_and_schr(spec)?;
            let arc_a = Arc::new(a.clone());
            let tensor = tensor_module(&schr, &schr)?;
            let ind = radford_induction(&dq, &adjoint_module(&arc_a))?;
            Ok(iso_found(find_iso(&tensor, &ind)?))
        }));
        out.push(chk(&format!("Schr⊗dualSchr ≅ the regular double module for {spec}"), || {
            let dq = build_double(&resolve_spec(spec)?)?;
            let tensor = tensor_module(&schrodinger(&dq)?, &dual_schrodinger(&dq)?)?;
            let reg = regular_module(&dq.h);
            Ok(iso_found(find_iso(&tensor, &reg)?))
        }));
    }
    out
}

/// All module constructions validate over their algebras.
pub fn check_module_validation() -> Vec<Check> {
    BUILTINS
        .iter()
        .map(|(spec, _)| {
            chk(&format!("Schrödinger and dual Schrödinger modules validate for {spec}"), || {
                let dq = build_double(&resolve_spec(spec)?)?;
                Ok(schrodinger(&dq)?.validate()?.passed()
                    && dual_schrodinger(&dq)?.validate()?.passed())
            })
        })
        .collect()
}

/// Duality and transpose identities for partial braided traces.
pub fn check_duality_transpose() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(chk("right braided dimension of M* equals reversed left of M on Schr(Sweedler)", || {
        let (dq, schr) = double_and_schr("sweedler")?;
        let dual = dual_module(&schr);
        for b in random_braids(6, 0xD0A1).into_iter().filter(|b| b.strands <= 2) {
            let lhs = braided_dim(&dq, &dual, &b, Side::Right, Orientation::Standard)?;
            let rhs = braided_dim(&dq, &schr, &b, Side::Left, Orientation::Reversed)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    out.push(chk("transpose relation between right and reversed-left partial traces", || {
        let (dq, schr) = double_and_schr("sweedler")?;
        let d = schr.dim;
        let fq = schr.algebra.field;
        let dual = dual_module(&schr);
        // module maps f: M⊗M → M⊗M as random hom-basis combinations
        let t2 = tensor_module(&schr, &schr)?;
        let basis = hom_basis(&t2, &t2)?;
        let mut rng = StdRng::seed_from_u64(0x44_44);
        for _ in 0..3 {
            let mut f = Matrix::zero(fq, d * d, d * d);
            for b in &basis {
                f = f.add(&b.scale(&fq.from_i64(rng.gen_range(-5..=5))));
            }
            // j_{X,Y}: Y*⊗X* → (X⊗Y)*, (β⊗α) ↦ (x⊗y ↦ α(x)β(y))
            let mut j = Matrix::zero(fq, d * d, d * d);
            for a_ix in 0..d {
                for b_ix in 0..d {
                    *j.at_mut(a_ix * d + b_ix, b_ix * d + a_ix) = fq.one();
                }
            }
            let g = j.inverse()?.matmul(&f.transpose()).matmul(&j);
            let form_r = trace_form(&dq, &dual, Side::Right, Orientation::Standard)?;
            let lhs = partial_trace_matrix(&form_r, &g, d, d, Side::Right);
            let form_l = trace_form(&dq, &schr, Side::Left, Orientation::Reversed)?;
            let rhs = partial_trace_matrix(&form_l, &f, d, d, Side::Left).transpose();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    out.push(chk("left and right braided dimensions agree and equal Tr(ρ(b)) for k[C2]", || {
        let (dq, schr) = double_and_schr("group:C2")?;
        let marc = Arc::new(schr.clone());
        for b in braid_suite() {
            let mut op = crate::braid::braid_operator(&dq, &marc, &b)?;
            let plain = op.matrix()?.trace();
            for side in [Side::Left, Side::Right] {
                if braided_dim(&dq, &schr, &b, side, Orientation::Standard)? != plain {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }));
    out
}

/// Braided dimensions are invariant under base-algebra isomorphism
/// (k[C6] ≅ k[C2×C3] through the induced double isomorphism).
pub fn check_iso_invariance() -> Vec<Check> {
    vec![chk("braided dimensions of Schr(k[C6]) and Schr(k[C2xC3]) coincide", || {
        let a6 = resolve_spec("group:C6")?;
        let a23 = resolve_spec("group:C2xC3")?;
        // Chinese-remainder group isomorphism i ↦ (i mod 2, i mod 3)
        let fq = FieldDescriptor::Rationals;
        let mut f = Matrix::zero(fq, 6, 6);
        for i in 0..6usize {
            *f.at_mut((i % 2) * 3 + (i % 3), i) = fq.one();
        }
        let (dq6, schr6) = double_and_schr("group:C6")?;
        let (dq23, schr23) = double_and_schr("group:C2xC3")?;
        let df = double_of_iso(&a6, &a23, &f)?;
        let pull = pullback_module(&df, &schr23, &dq6.h)?;
        if !iso_found(find_iso(&pull, &schr6)?) {
            return Ok(false);
        }
        for b in braid_suite() {
            for side in [Side::Left, Side::Right] {
                let v6 = braided_dim(&dq6, &schr6, &b, side, Orientation::Standard)?;
                let v23 = braided_dim(&dq23, &schr23, &b, side, Orientation::Standard)?;
                let vp = braided_dim(&dq6, &pull, &b, side, Orientation::Standard)?;
                if v6 != v23 || v6 != vp {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })]
}

/// Pullback-identified modules have pairwise equal braided dimensions.
pub fn check_pullback_braided_dims() -> Vec<Check> {
    ["group:C2", "sweedler"]
        .iter()
        .map(|spec| {
            chk(&format!("braided dimensions agree on the φ-pulled-back module for {spec}"), || {
                let a = resolve_spec(spec)?;
                let (dq, schr) = double_and_schr(spec)?;
                let (phi_mat, dq_astar) = phi_iso(&a)?;
                let pull = pullback_module(&phi_mat, &dual_schrodinger(&dq_astar)?, &dq.h)?;
                for b in braid_suite() {
                    for side in [Side::Left, Side::Right] {
                        let lhs = braided_dim(&dq, &schr, &b, side, Orientation::Standard)?;
                        let rhs = braided_dim(&dq, &pull, &b, side, Orientation::Standard)?;
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            })
        })
        .collect()
}

pub fn run_suite(kind: SuiteKind) -> Vec<Check> {
    let mut out = Vec::new();
    match kind {
        SuiteKind::Axioms => out.extend(check_axiom_suites()),
        SuiteKind::Schrodinger => {
            out.extend(check_module_validation());
            out.extend(check_structural_isos());
            out.extend(check_u_su_actions());
            out.extend(check_z_detector());
        }
        SuiteKind::Traces => {
            out.extend(check_quantum_dimensions());
            out.extend(check_torus_closed_forms());
            out.extend(check_duality_transpose());
            out.extend(check_pullback_braided_dims());
        }
        SuiteKind::Theorems => {
            out.extend(check_t22_group_table());
            out.extend(check_oracle_equivalence(8));
            out.extend(check_dual_group_separation());
            out.extend(check_vanishing_non_cosemisimple());
            out.extend(check_iso_invariance());
        }
        SuiteKind::All => {
            out.extend(run_suite(SuiteKind::Axioms));
            out.extend(run_suite(SuiteKind::Schrodinger));
            out.extend(run_suite(SuiteKind::Traces));
            out.extend(run_suite(SuiteKind::Theorems));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schrodinger_suite_passes() {
        for c in run_suite(SuiteKind::Schrodinger) {
            assert!(c.pass, "{}: {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn traces_suite_passes() {
        for c in run_suite(SuiteKind::Traces) {
            assert!(c.pass, "{}: {:?}", c.name, c.witness);
        }
    }
}
