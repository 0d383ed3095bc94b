//! The Drinfel'd double D(A) with its canonical R-matrix, Drinfel'd element,
//! and the structural isomorphisms D(f) and φ_A.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{
    tensor2_add, tensor3_add, validate_hopf_iso, Check, HopfAlgebraData, Report,
    Tensor2, Tensor3,
};
use crate::linalg::{Matrix, SparseRow};
use std::sync::Arc;

/// D(A) plus its factored R-matrix. The basis of `h` is e_i* ⋈ e_j at index
/// i·d + j, where d = dim A.
#[derive(Debug, Clone)]
pub struct QuasitriangularData {
    pub h: Arc<HopfAlgebraData>,
    pub base: HopfAlgebraData,
    pub base_dim: usize,
    /// ℛ = Σ_j α_j ⊗ β_j as vectors in h.
    pub rfactors: Vec<(Vec<Scalar>, Vec<Scalar>)>,
}

impl QuasitriangularData {
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.base_dim + j
    }

    pub fn split_index(&self, t: usize) -> (usize, usize) {
        (t / self.base_dim, t % self.base_dim)
    }

    /// ℛ⁻¹ = (S⊗id)ℛ.
    pub fn r_inverse_factors(&self) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
        self.rfactors
            .iter()
            .map(|(a, b)| (self.h.apply_antipode(a), b.clone()))
            .collect()
    }

    /// ℛ₂₁⁻¹, the R-matrix of the reversed braiding c̄.
    pub fn reversed_factors(&self) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
        self.rfactors
            .iter()
            .map(|(a, b)| (b.clone(), self.h.apply_antipode(a)))
            .collect()
    }

    pub fn r_tensor(&self) -> Tensor2 {
        factors_tensor(&self.rfactors)
    }

    /// Drinfel'd element u = Σ S(β_j)α_j of an arbitrary factored R-matrix.
    pub fn u_of(&self, factors: &[(Vec<Scalar>, Vec<Scalar>)]) -> Vec<Scalar> {
        let mut u = vec![self.h.field.zero(); self.h.dim];
        for (a, b) in factors {
            let term = self.h.multiply(&self.h.apply_antipode(b), a);
            for (t, c) in term.into_iter().enumerate() {
                u[t] = &u[t] + &c;
            }
        }
        u
    }

    /// u, u⁻¹, S(u), z = uS(u), with the closed-form inverse and the identity
    /// ℛ₂₁ℛ = Δ(u⁻¹)(u⊗u) checked exactly.
    pub fn drinfeld_elements(&self) -> Result<DrinfeldElements> {
        let h = &self.h;
        let u = self.u_of(&self.rfactors);
        // u⁻¹ = Σ β_j S²(α_j)
        let mut u_inv = vec![h.field.zero(); h.dim];
        for (a, b) in &self.rfactors {
            let s2a = h.apply_antipode(&h.apply_antipode(a));
            let term = h.multiply(b, &s2a);
            for (t, c) in term.into_iter().enumerate() {
                u_inv[t] = &u_inv[t] + &c;
            }
        }
        if h.multiply(&u, &u_inv) != h.unit || h.multiply(&u_inv, &u) != h.unit {
            return Err(Error::InverseCheckFailed);
        }
        // ℛ₂₁ℛ = Δ(u⁻¹)(u⊗u)
        let r21: Vec<_> = self
            .rfactors
            .iter()
            .map(|(a, b)| (b.clone(), a.clone()))
            .collect();
        let lhs = tensor2_mul(h, &factors_tensor(&r21), &self.r_tensor());
        let uu = outer(&u, &u);
        let rhs = tensor2_mul(h, &h.comult_vec(&u_inv), &uu);
        if lhs != rhs {
            return Err(Error::InverseCheckFailed);
        }
        let su = h.apply_antipode(&u);
        let z = h.multiply(&u, &su);
        Ok(DrinfeldElements { u, u_inv, su, z })
    }
}

#[derive(Debug, Clone)]
pub struct DrinfeldElements {
    pub u: Vec<Scalar>,
    pub u_inv: Vec<Scalar>,
    pub su: Vec<Scalar>,
    pub z: Vec<Scalar>,
}

fn outer(x: &[Scalar], y: &[Scalar]) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                tensor2_add(&mut t, (i, j), xi * yj);
            }
        }
    }
    t
}

fn factors_tensor(factors: &[(Vec<Scalar>, Vec<Scalar>)]) -> Tensor2 {
    let mut t = Tensor2::new();
    for (a, b) in factors {
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    tensor2_add(&mut t, (i, j), ai * bj);
                }
            }
        }
    }
    t
}

/// Componentwise product in H⊗H of sparse tensors.
pub fn tensor2_mul(h: &HopfAlgebraData, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a1, b1), c1) in x {
        for ((a2, b2), c2) in y {
            let c = c1 * c2;
            for (s, cs) in h.mult_row(*a1, *a2) {
                for (t, ct) in h.mult_row(*b1, *b2) {
                    tensor2_add(&mut out, (*s, *t), &(&c * cs) * ct);
                }
            }
        }
    }
    out
}

/// Componentwise product in H⊗H⊗H of sparse tensors.
pub fn tensor3_mul(h: &HopfAlgebraData, x: &Tensor3, y: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a1, b1, c1), s1) in x {
        for ((a2, b2, c2), s2) in y {
            let s = s1 * s2;
            for (p, cp) in h.mult_row(*a1, *a2) {
                let sp = &s * cp;
                for (q, cq) in h.mult_row(*b1, *b2) {
                    let spq = &sp * cq;
                    for (r, cr) in h.mult_row(*c1, *c2) {
                        tensor3_add(&mut out, (*p, *q, *r), &spq * cr);
                    }
                }
            }
        }
    }
    out
}

/// Build D(A) = A*^cop ⊗ A with the canonical quasitriangular structure.
pub fn build_double(a: &HopfAlgebraData) -> Result<QuasitriangularData> {
    a.validate_ok()?;
    let d = a.dim;
    let dd = d * d;
    let field = a.field;
    let astar = a.dual();
    let s_inv = a.antipode_inverse()?;
    let sstar_inv = astar.antipode_inverse()?;

    // Sweedler triples of Δ² in A and A*, cached per basis index.
    let trip_a: Vec<_> = (0..d).map(|j| a.comult_power(j, 3)).collect();
    let trip_astar: Vec<_> = (0..d).map(|k| astar.comult_power(k, 3)).collect();

    let idx = |i: usize, j: usize| i * d + j;

    // (e_i*⋈e_j)(e_k*⋈e_l) = Σ ⟨p'₁, S⁻¹(a₃)⟩⟨p'₃, a₁⟩ (e_i* p'₂) ⋈ (a₂ e_l)
    // with p' = e_k*, a = e_j.
    let mut mult = vec![SparseRow::new(); dd * dd];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // the (i,j,k)-dependent part, then tensor with e_l on the right
                let mut partial = Tensor2::new(); // (A*-index, A-index before ·e_l)
                for (ks, ck) in &trip_astar[k] {
                    let (k1, k2, k3) = (ks[0], ks[1], ks[2]);
                    for (js, cj) in &trip_a[j] {
                        let (j1, j2, j3) = (js[0], js[1], js[2]);
                        if k3 != j1 {
                            continue;
                        }
                        let s_entry = s_inv.at(k1, j3);
                        if s_entry.is_zero() {
                            continue;
                        }
                        let coeff = &(ck * cj) * s_entry;
                        for (s, cs) in astar.mult_row(i, k2) {
                            tensor2_add(&mut partial, (*s, j2), &coeff * cs);
                        }
                    }
                }
                for l in 0..d {
                    let mut row = SparseRow::new();
                    for ((s, j2), c) in &partial {
                        for (t, ct) in a.mult_row(*j2, l) {
                            row.push((idx(*s, *t), c * ct));
                        }
                    }
                    row.sort_by_key(|(t, _)| *t);
                    // merge duplicates
                    let mut merged = SparseRow::new();
                    for (t, c) in row {
                        match merged.last_mut() {
                            Some((lt, lc)) if *lt == t => {
                                *lc = &*lc + &c;
                            }
                            _ => merged.push((t, c)),
                        }
                    }
                    merged.retain(|(_, c)| !c.is_zero());
                    mult[idx(i, j) * dd + idx(k, l)] = merged;
                }
            }
        }
    }

    // unit = ε ⋈ 1
    let mut unit = vec![field.zero(); dd];
    for s in 0..d {
        for t in 0..d {
            let c = &a.counit[s] * &a.unit[t];
            if !c.is_zero() {
                unit[idx(s, t)] = c;
            }
        }
    }

    // Δ_D(p⋈a) = Σ (p₍₂₎⋈a₍₁₎)⊗(p₍₁₎⋈a₍₂₎): A*^cop ⊗ A componentwise.
    let mut comult = vec![Vec::new(); dd];
    for i in 0..d {
        for j in 0..d {
            let mut row = Vec::new();
            for (i1, i2, ci) in astar.comult_row(i) {
                for (j1, j2, cj) in a.comult_row(j) {
                    row.push((idx(*i2, *j1), idx(*i1, *j2), ci * cj));
                }
            }
            comult[idx(i, j)] = row;
        }
    }

    // ε_D(e_i*⋈e_j) = ⟨e_i*, 1⟩ ε(e_j)
    let mut counit = vec![field.zero(); dd];
    for i in 0..d {
        for j in 0..d {
            counit[idx(i, j)] = &a.unit[i] * &a.counit[j];
        }
    }

    // S_D(p⋈a) = Σ ⟨p₁,a₃⟩⟨p₃, S⁻¹(a₁)⟩ S*⁻¹(p₂) ⋈ S(a₂)
    let mut antipode = Matrix::zero(field, dd, dd);
    for i in 0..d {
        for j in 0..d {
            for (is, ci) in &trip_astar[i] {
                let (i1, i2, i3) = (is[0], is[1], is[2]);
                for (js, cj) in &trip_a[j] {
                    let (j1, j2, j3) = (js[0], js[1], js[2]);
                    if i1 != j3 {
                        continue;
                    }
                    let s_entry = s_inv.at(i3, j1);
                    if s_entry.is_zero() {
                        continue;
                    }
                    let coeff = &(ci * cj) * s_entry;
                    // S*⁻¹(e_{i2}*) ⊗ S(e_{j2})
                    for s in 0..d {
                        let cs = sstar_inv.at(s, i2);
                        if cs.is_zero() {
                            continue;
                        }
                        for t in 0..d {
                            let ct = a.antipode.at(t, j2);
                            if ct.is_zero() {
                                continue;
                            }
                            let v = antipode.at(idx(s, t), idx(i, j)).clone();
                            *antipode.at_mut(idx(s, t), idx(i, j)) =
                                &v + &(&(&coeff * cs) * ct);
                        }
                    }
                }
            }
        }
    }

    let mut labels = vec![String::new(); dd];
    for i in 0..d {
        for j in 0..d {
            labels[idx(i, j)] = format!("{}*⋈{}", a.basis[i], a.basis[j]);
        }
    }
    let h = HopfAlgebraData::new(
        format!("D({})", a.name),
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    );

    // ℛ = Σ_i (ε⋈e_i) ⊗ (e_i*⋈1)
    let mut rfactors = Vec::with_capacity(d);
    for i in 0..d {
        let mut alpha = vec![field.zero(); dd];
        for s in 0..d {
            if !a.counit[s].is_zero() {
                alpha[idx(s, i)] = a.counit[s].clone();
            }
        }
        let mut beta = vec![field.zero(); dd];
        for t in 0..d {
            if !a.unit[t].is_zero() {
                beta[idx(i, t)] = a.unit[t].clone();
            }
        }
        rfactors.push((alpha, beta));
    }

    Ok(QuasitriangularData {
        h: Arc::new(h),
        base: a.clone(),
        base_dim: d,
        rfactors,
    })
}

/// Check the quasitriangular axioms and the Yang–Baxter equation.
pub fn validate_qt(q: &QuasitriangularData) -> Result<Report> {
    let h = &q.h;
    let mut report = Report::default();
    let r = q.r_tensor();

    // Δcop(x)·ℛ = ℛ·Δ(x) on every basis x (avoids materializing ℛ⁻¹).
    let mut ok = Check::ok("Δcop·ℛ = ℛ·Δ");
    'outer: for x in 0..h.dim {
        let dx = h.comult_vec(&h.basis_vector(x));
        let mut dcop = Tensor2::new();
        for ((a, b), c) in &dx {
            tensor2_add(&mut dcop, (*b, *a), c.clone());
        }
        if tensor2_mul(h, &dcop, &r) != tensor2_mul(h, &r, &dx) {
            ok = Check::fail("Δcop·ℛ = ℛ·Δ", format!("fails on basis {x}"));
            break 'outer;
        }
    }
    report.push(ok);

    // ℛ·ℛ⁻¹ = 1⊗1 with ℛ⁻¹ = (S⊗id)ℛ.
    let r_inv = factors_tensor(&q.r_inverse_factors());
    let unit2 = outer(&h.unit, &h.unit);
    report.push(if tensor2_mul(h, &r, &r_inv) == unit2 && tensor2_mul(h, &r_inv, &r) == unit2 {
        Check::ok("ℛ·(S⊗id)ℛ = 1⊗1")
    } else {
        Check::fail("ℛ·(S⊗id)ℛ = 1⊗1", "inverse fails".into())
    });

    // (Δ⊗id)ℛ = ℛ₁₃ℛ₂₃ and (id⊗Δ)ℛ = ℛ₁₃ℛ₁₂.
    let mut r13 = Tensor3::new();
    let mut r23 = Tensor3::new();
    let mut r12 = Tensor3::new();
    let unit_sparse: Vec<(usize, &Scalar)> = h
        .unit
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    for ((a, b), c) in &r {
        for (e, ce) in &unit_sparse {
            tensor3_add(&mut r13, (*a, *e, *b), c * ce);
            tensor3_add(&mut r23, (*e, *a, *b), c * ce);
            tensor3_add(&mut r12, (*a, *b, *e), c * ce);
        }
    }
    let mut d1r = Tensor3::new();
    let mut d2r = Tensor3::new();
    for ((a, b), c) in &r {
        for (a1, a2, ca) in h.comult_row(*a) {
            tensor3_add(&mut d1r, (*a1, *a2, *b), c * ca);
        }
        for (b1, b2, cb) in h.comult_row(*b) {
            tensor3_add(&mut d2r, (*a, *b1, *b2), c * cb);
        }
    }
    report.push(if d1r == tensor3_mul(h, &r13, &r23) {
        Check::ok("(Δ⊗id)ℛ = ℛ₁₃ℛ₂₃")
    } else {
        Check::fail("(Δ⊗id)ℛ = ℛ₁₃ℛ₂₃", "coproduct axiom fails".into())
    });
    report.push(if d2r == tensor3_mul(h, &r13, &r12) {
        Check::ok("(id⊗Δ)ℛ = ℛ₁₃ℛ₁₂")
    } else {
        Check::fail("(id⊗Δ)ℛ = ℛ₁₃ℛ₁₂", "coproduct axiom fails".into())
    });

    // Yang–Baxter: ℛ₁₂ℛ₁₃ℛ₂₃ = ℛ₂₃ℛ₁₃ℛ₁₂.
    let lhs = tensor3_mul(h, &tensor3_mul(h, &r12, &r13), &r23);
    let rhs = tensor3_mul(h, &tensor3_mul(h, &r23, &r13), &r12);
    report.push(if lhs == rhs {
        Check::ok("Yang–Baxter")
    } else {
        Check::fail("Yang–Baxter", "YBE fails".into())
    });

    Ok(report)
}

/// φ_A : D(A) → D(A*)^cop, φ_A(p⋈a) = (ι(1)⋈p)·(ι(a)⋈ε), returned together
/// with the codomain double D(A*).
pub fn phi_iso(a: &HopfAlgebraData) -> Result<(Matrix, QuasitriangularData)> {
    let double_a = build_double(a)?;
    let astar = a.dual();
    let double_astar = build_double(&astar)?;
    let d = a.dim;
    let dd = d * d;
    let field = a.field;
    let idx = |i: usize, j: usize| i * d + j;
    let mut phi = Matrix::zero(field, dd, dd);
    for i in 0..d {
        for j in 0..d {
            // first factor: ι(1)⋈e_i*, second: ι(e_j)⋈ε_A
            let mut v1 = vec![field.zero(); dd];
            for s in 0..d {
                if !a.unit[s].is_zero() {
                    v1[idx(s, i)] = a.unit[s].clone();
                }
            }
            let mut v2 = vec![field.zero(); dd];
            for t in 0..d {
                if !a.counit[t].is_zero() {
                    v2[idx(j, t)] = a.counit[t].clone();
                }
            }
            let prod = double_astar.h.multiply(&v1, &v2);
            for (t, c) in prod.into_iter().enumerate() {
                *phi.at_mut(t, idx(i, j)) = c;
            }
        }
    }
    // Hopf iso onto the cop-structured codomain.
    let codomain = double_astar.h.coopposite()?;
    validate_hopf_iso(&double_a.h, &codomain, &phi)
        .map_err(|e| Error::NotIsomorphism(format!("φ_{}: {e}", a.name)))?;
    Ok((phi, double_astar))
}

/// D(f) = (f⁻¹)* ⊗ f : D(A) → D(B) for a Hopf isomorphism f: A → B.
pub fn double_of_iso(
    a: &HopfAlgebraData,
    b: &HopfAlgebraData,
    f: &Matrix,
) -> Result<Matrix> {
    validate_hopf_iso(a, b, f)?;
    let f_inv = f.inverse()?;
    let d = a.dim;
    let mut df = Matrix::zero(a.field, d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let c1 = f_inv.at(i, k);
                if c1.is_zero() {
                    continue;
                }
                for l in 0..d {
                    let c2 = f.at(l, j);
                    if !c2.is_zero() {
                        *df.at_mut(k * d + l, i * d + j) = c1 * c2;
                    }
                }
            }
        }
    }
    Ok(df)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::zoo;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    #[test]
    fn double_of_c2() {
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), q());
        let dq = build_double(&a).unwrap();
        assert_eq!(dq.h.dim, 4);
        assert!(dq.h.validate().unwrap().passed());
        assert!(dq.h.is_commutative());
        assert!(dq.h.is_cocommutative());
        assert!(validate_qt(&dq).unwrap().passed());
        // unit = ε⋈1 has support on indices (s, 0) with coefficient ε(e_s)=1
        assert_eq!(dq.h.unit, vec![q().one(), q().zero(), q().one(), q().zero()]);
    }

    #[test]
    fn double_of_sweedler() {
        let a = zoo::sweedler();
        let dq = build_double(&a).unwrap();
        assert_eq!(dq.h.dim, 16);
        assert!(dq.h.validate().unwrap().passed());
        assert!(validate_qt(&dq).unwrap().passed());
        let els = dq.drinfeld_elements().unwrap();
        assert_ne!(els.u, dq.h.unit);
        assert_eq!(dq.h.multiply(&els.u, &els.u_inv), dq.h.unit);
    }

    #[test]
    fn corrupted_r_fails() {
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), q());
        let mut dq = build_double(&a).unwrap();
        dq.rfactors.pop();
        assert!(!validate_qt(&dq).unwrap().passed());
        assert!(dq.drinfeld_elements().is_err());
    }

    #[test]
    fn phi_iso_small() {
        for a in [
            zoo::group_algebra(&zoo::make_group("C2").unwrap(), q()),
            zoo::sweedler(),
        ] {
            let (phi, double_astar) = phi_iso(&a).unwrap();
            // φ_{A*}∘φ_A = D(ι_A) = identity in these coordinates
            let (phi_star, _) = phi_iso(&a.dual()).unwrap();
            assert!(phi_star.matmul(&phi).is_identity(), "{}", a.name);
            // φ pushes ℛ to the codomain's ℛ₂₁ (the cop structure's R-matrix)
            let dq = build_double(&a).unwrap();
            let mut pushed = Tensor2::new();
            for ((s, t), c) in dq.r_tensor() {
                for (s2, cs) in crate::linalg::sparsify(&phi.column(s)) {
                    for (t2, ct) in crate::linalg::sparsify(&phi.column(t)) {
                        tensor2_add(&mut pushed, (s2, t2), &(&c * &cs) * &ct);
                    }
                }
            }
            let mut r21 = Tensor2::new();
            for ((s, t), c) in double_astar.r_tensor() {
                tensor2_add(&mut r21, (t, s), c);
            }
            assert_eq!(pushed, r21, "{}", a.name);
        }
    }

    #[test]
    fn double_of_identity_iso() {
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), q());
        let id = Matrix::identity(q(), 2);
        let df = double_of_iso(&a, &a, &id).unwrap();
        assert!(df.is_identity());
    }

    #[test]
    fn double_of_crt_iso() {
        let c6 = zoo::group_algebra(&zoo::make_group("C6").unwrap(), q());
        let c2c3 = zoo::group_algebra(&zoo::make_group("C2xC3").unwrap(), q());
        // i mod 6 ↦ (i mod 2, i mod 3) at index (i%2)*3 + (i%3)
        let mut f = Matrix::zero(q(), 6, 6);
        for i in 0..6 {
            *f.at_mut((i % 2) * 3 + (i % 3), i) = q().one();
        }
        let df = double_of_iso(&c6, &c2c3, &f).unwrap();
        // D(f) is a Hopf iso and maps ℛ_A to ℛ_B
        let da = build_double(&c6).unwrap();
        let db = build_double(&c2c3).unwrap();
        validate_hopf_iso(&da.h, &db.h, &df).unwrap();
        let mut pushed = Tensor2::new();
        for ((s, t), c) in da.r_tensor() {
            for (s2, cs) in crate::linalg::sparsify(&df.column(s)) {
                for (t2, ct) in crate::linalg::sparsify(&df.column(t)) {
                    tensor2_add(&mut pushed, (s2, t2), &(&c * &cs) * &ct);
                }
            }
        }
        assert_eq!(pushed, db.r_tensor());
    }

    #[test]
    fn double_of_antipode_iso() {
        // S is a Hopf iso A → A for commutative cocommutative involutory A.
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), q());
        let df = double_of_iso(&a, &a, &a.antipode).unwrap();
        let da = build_double(&a).unwrap();
        validate_hopf_iso(&da.h, &da.h, &df).unwrap();
    }

    #[test]
    fn r21_r_closed_form_taft() {
        let a = zoo::taft(3).unwrap();
        let dq = build_double(&a).unwrap();
        // drinfeld_elements internally checks ℛ₂₁ℛ = Δ(u⁻¹)(u⊗u)
        let els = dq.drinfeld_elements().unwrap();
        assert_eq!(dq.h.multiply(&els.u_inv, &els.u), dq.h.unit);
    }
}
