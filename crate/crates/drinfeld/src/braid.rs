//! Braid words, braid-group representations on tensor powers of a module,
//! categorical partial braided traces, and braided-dimension invariants.

use std::sync::Arc;

use crate::double::{tensor2_mul, QuasitriangularData};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{tensor2_add, Tensor2};
use crate::linalg::{local_apply, Matrix};
use crate::rep::{dual_module, ModuleData};

/// Hard cap on materialized tensor operators (entries of the full matrix).
pub const MAX_TENSOR_ENTRIES: u128 = 1_000_000;

/// A braid word: strand count plus signed generator letters (σ_i ↔ i,
/// σ_i⁻¹ ↔ −i); the empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::BadParameter("strand count must be ≥ 1".into()));
        }
        for &w in &letters {
            if w == 0 {
                return Err(Error::ZeroLetter);
            }
            if w.unsigned_abs() as usize > strands - 1 {
                return Err(Error::LetterOutOfRange(w, strands));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn to_text(&self) -> String {
        let letters: Vec<String> = self.letters.iter().map(|w| w.to_string()).collect();
        format!("{}: {}", self.strands, letters.join(" "))
    }
}

/// Parse the grammar `n ":" letters`, letters whitespace/comma-separated
/// nonzero integers; "1:" is the identity braid in B₁.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::ParseError(format!("missing ':' in braid word '{text}'")))?;
    let strands: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::ParseError(format!("bad strand count '{}'", head.trim())))?;
    if strands < 1 {
        return Err(Error::ParseError("strand count must be ≥ 1".into()));
    }
    let mut letters = Vec::new();
    for tok in tail.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let w: i32 = tok
            .parse()
            .map_err(|_| Error::ParseError(format!("bad letter '{tok}'")))?;
        letters.push(w);
    }
    BraidWord::new(strands, letters)
}

/// The (p,q)-torus braid t_{p,q} = (σ₁…σ_{p−1})^q ∈ B_p.
pub fn torus_braid(p: usize, q: i64) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::BadParameter("torus braid needs p ≥ 2".into()));
    }
    let run: Vec<i32> = (1..p as i32).collect();
    let mut letters = Vec::new();
    if q >= 0 {
        for _ in 0..q {
            letters.extend_from_slice(&run);
        }
    } else {
        let inv: Vec<i32> = run.iter().rev().map(|w| -w).collect();
        for _ in 0..(-q) {
            letters.extend_from_slice(&inv);
        }
    }
    BraidWord::new(p, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidingVariant {
    Standard,
    Inverse,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Standard,
    Reversed,
}

/// The braiding c_{M,N}: M⊗N → N⊗M, x⊗y ↦ τ(ℛ·(x⊗y)) = Σ (β_j·y)⊗(α_j·x),
/// its exact inverse, or the reversed braiding c̄_{M,N} = c_{N,M}⁻¹.
pub fn braiding_map(
    q: &QuasitriangularData,
    m: &ModuleData,
    n: &ModuleData,
    variant: BraidingVariant,
) -> Result<Matrix> {
    match variant {
        BraidingVariant::Standard => {
            let field = q.h.field;
            let (dm, dn) = (m.dim, n.dim);
            let mut out = Matrix::zero(field, dm * dn, dm * dn);
            for (a, b) in &q.rfactors {
                let am = m.act_vec(a);
                let bn = n.act_vec(b);
                for bp in 0..dn {
                    for bq in 0..dn {
                        let c1 = bn.at(bp, bq);
                        if c1.is_zero() {
                            continue;
                        }
                        for ap in 0..dm {
                            for aq in 0..dm {
                                let c2 = am.at(ap, aq);
                                if c2.is_zero() {
                                    continue;
                                }
                                let old = out.at(bp * dm + ap, aq * dn + bq).clone();
                                *out.at_mut(bp * dm + ap, aq * dn + bq) = &old + &(c1 * c2);
                            }
                        }
                    }
                }
            }
            Ok(out)
        }
        BraidingVariant::Inverse => braiding_map(q, m, n, BraidingVariant::Standard)?.inverse(),
        BraidingVariant::Reversed => braiding_map(q, n, m, BraidingVariant::Standard)?.inverse(),
    }
}

/// An endomorphism of M^{⊗n} given as a composite of local two-leg blocks,
/// with an optional materialized full matrix.
#[derive(Debug, Clone)]
pub struct BraidedOperator {
    pub module: Arc<ModuleData>,
    pub strands: usize,
    /// (leg position, d²×d² block), applied first-to-last.
    locals: Vec<(usize, Arc<Matrix>)>,
    cache: Option<Matrix>,
}

impl BraidedOperator {
    pub fn identity(module: Arc<ModuleData>, strands: usize) -> Self {
        BraidedOperator { module, strands, locals: Vec::new(), cache: None }
    }

    pub fn from_matrix(module: Arc<ModuleData>, strands: usize, matrix: Matrix) -> Self {
        BraidedOperator { module, strands, locals: Vec::new(), cache: Some(matrix) }
    }

    pub fn total_dim(&self) -> Result<usize> {
        let mut total: u128 = 1;
        for _ in 0..self.strands {
            total = total.saturating_mul(self.module.dim as u128);
            if total * total > MAX_TENSOR_ENTRIES {
                return Err(Error::EnumerationTooLarge(format!(
                    "materializing a {total}×{total} tensor operator exceeds {MAX_TENSOR_ENTRIES} entries"
                )));
            }
        }
        Ok(total as usize)
    }

    /// Apply the operator to a coordinate vector of M^{⊗n}.
    pub fn apply_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        if let Some(mat) = &self.cache {
            return mat.apply(v);
        }
        let d = self.module.dim;
        let mut cur = v.to_vec();
        for (pos, block) in &self.locals {
            let left = d.pow(*pos as u32);
            let right = d.pow((self.strands - pos - 2) as u32);
            cur = local_apply(block, &cur, left, right);
        }
        cur
    }

    /// Materialize (and cache) the full matrix, subject to the entry guard.
    pub fn matrix(&mut self) -> Result<&Matrix> {
        if self.cache.is_none() {
            let total = self.total_dim()?;
            let field = self.module.algebra.field;
            let mut mat = Matrix::zero(field, total, total);
            let mut basis = vec![field.zero(); total];
            for c in 0..total {
                basis[c] = field.one();
                let col = self.apply_vec(&basis);
                basis[c] = field.zero();
                for (r, s) in col.into_iter().enumerate() {
                    if !s.is_zero() {
                        *mat.at_mut(r, c) = s;
                    }
                }
            }
            self.cache = Some(mat);
        }
        Ok(self.cache.as_ref().unwrap())
    }
}

/// ρ_M(b) on M^{⊗n}: each positive letter applies c_{M,M} on the named pair
/// of adjacent legs, each negative letter applies c_{M,M}⁻¹; the first letter
/// acts first.
pub fn braid_operator(
    q: &QuasitriangularData,
    m: &Arc<ModuleData>,
    b: &BraidWord,
) -> Result<BraidedOperator> {
    braid_operator_oriented(q, m, b, Orientation::Standard)
}

pub fn braid_operator_oriented(
    q: &QuasitriangularData,
    m: &Arc<ModuleData>,
    b: &BraidWord,
    orientation: Orientation,
) -> Result<BraidedOperator> {
    // re-validate in case the word was constructed by hand
    let b = BraidWord::new(b.strands, b.letters.clone())?;
    let mut op = BraidedOperator::identity(m.clone(), b.strands);
    if b.letters.is_empty() {
        return Ok(op);
    }
    let pos_block = Arc::new(match orientation {
        Orientation::Standard => braiding_map(q, m, m, BraidingVariant::Standard)?,
        Orientation::Reversed => braiding_map(q, m, m, BraidingVariant::Reversed)?,
    });
    let neg_block = Arc::new(pos_block.inverse()?);
    for &w in &b.letters {
        let pos = w.unsigned_abs() as usize - 1;
        let block = if w > 0 { pos_block.clone() } else { neg_block.clone() };
        op.locals.push((pos, block));
    }
    Ok(op)
}

/// One categorical partial braided trace (standard braiding): contracts the
/// first (left) or last (right) tensor leg through n_X, c^{∓1}, and e_X.
pub fn partial_trace_step(
    q: &QuasitriangularData,
    f: &mut BraidedOperator,
    side: Side,
) -> Result<BraidedOperator> {
    partial_trace_oriented(q, f, side, Orientation::Standard)
}

/// The d×d contraction form of the categorical trace on X: the composite of
/// n_X, the braiding with X*, and e_X, reduced to the coefficients actually
/// contracted against the traced leg.
pub fn trace_form(
    q: &QuasitriangularData,
    x: &ModuleData,
    side: Side,
    orientation: Orientation,
) -> Result<Matrix> {
    let d = x.dim;
    let dual = dual_module(x);
    let field = x.algebra.field;
    let mut form = Matrix::zero(field, d, d);
    match side {
        Side::Right => {
            // c_{X,X*} (reversed orientation: c̄_{X,X*} = c_{X*,X}⁻¹)
            let c = match orientation {
                Orientation::Standard => braiding_map(q, x, &dual, BraidingVariant::Standard)?,
                Orientation::Reversed => braiding_map(q, x, &dual, BraidingVariant::Reversed)?,
            };
            // form[x,k] = Σ_j ⟨e_j*⊗e_j | c(e_x⊗e_k*)⟩
            for x in 0..d {
                for k in 0..d {
                    let mut acc = field.zero();
                    for j in 0..d {
                        acc = &acc + c.at(j * d + j, x * d + k);
                    }
                    *form.at_mut(x, k) = acc;
                }
            }
        }
        Side::Left => {
            // c⁻¹_{X*,X} (reversed orientation: c̄⁻¹_{X*,X} = c_{X,X*})
            let cinv = match orientation {
                Orientation::Standard => braiding_map(q, &dual, x, BraidingVariant::Inverse)?,
                Orientation::Reversed => braiding_map(q, x, &dual, BraidingVariant::Standard)?,
            };
            // form[b,a] = Σ_k ⟨e_b*⊗e_a | c⁻¹(n_X)⟩ with n_X = Σ_k e_k⊗e_k*
            for bi in 0..d {
                for a in 0..d {
                    let mut acc = field.zero();
                    for k in 0..d {
                        acc = &acc + cinv.at(bi * d + a, k * d + k);
                    }
                    *form.at_mut(bi, a) = acc;
                }
            }
        }
    }
    Ok(form)
}

/// Contract one leg of a matrix against a trace form. For `side` left the
/// input is f: X⊗Y → X⊗Z with the X-leg index-major; for right it is
/// f: Y⊗X → Z⊗X with the X-leg index-minor. Returns the dz×dy result.
pub fn partial_trace_matrix(
    form: &Matrix,
    f: &Matrix,
    dy: usize,
    dz: usize,
    side: Side,
) -> Matrix {
    let d = form.rows;
    let field = form.field;
    let mut g = Matrix::zero(field, dz, dy);
    match side {
        Side::Right => {
            // g[z,y] = Σ_{x,k} f[(z,x),(y,k)] · form[x,k]
            for z in 0..dz {
                for y in 0..dy {
                    let mut acc = field.zero();
                    for x in 0..d {
                        for k in 0..d {
                            let s = form.at(x, k);
                            if s.is_zero() {
                                continue;
                            }
                            let fv = f.at(z * d + x, y * d + k);
                            if !fv.is_zero() {
                                acc = &acc + &(fv * s);
                            }
                        }
                    }
                    *g.at_mut(z, y) = acc;
                }
            }
        }
        Side::Left => {
            // g[z,y] = Σ_{a,b} form[b,a] · f[(b,z),(a,y)]
            for z in 0..dz {
                for y in 0..dy {
                    let mut acc = field.zero();
                    for bi in 0..d {
                        for a in 0..d {
                            let s = form.at(bi, a);
                            if s.is_zero() {
                                continue;
                            }
                            let fv = f.at(bi * dz + z, a * dy + y);
                            if !fv.is_zero() {
                                acc = &acc + &(fv * s);
                            }
                        }
                    }
                    *g.at_mut(z, y) = acc;
                }
            }
        }
    }
    g
}

fn partial_trace_oriented(
    q: &QuasitriangularData,
    f: &mut BraidedOperator,
    side: Side,
    orientation: Orientation,
) -> Result<BraidedOperator> {
    if f.strands == 0 {
        return Err(Error::DimensionMismatch("partial trace of a 0-leg operator".into()));
    }
    let module = f.module.clone();
    let d = module.dim;
    let form = trace_form(q, &module, side, orientation)?;
    let fm = f.matrix()?;
    let rest = fm.rows / d;
    let g = partial_trace_matrix(&form, fm, rest, rest, side);
    Ok(BraidedOperator::from_matrix(module, f.strands - 1, g))
}

/// The braided dimension of M at b: the n-fold iterated partial braided
/// trace of ρ_M(b), cross-checked exactly against the Drinfel'd-element
/// closed form Tr((u^{∓1})^{⊗n}∘ρ_M(b)).
pub fn braided_dim(
    q: &QuasitriangularData,
    m: &ModuleData,
    b: &BraidWord,
    side: Side,
    orientation: Orientation,
) -> Result<Scalar> {
    let marc = Arc::new(m.clone());
    let mut op = braid_operator_oriented(q, &marc, b, orientation)?;
    let rho = op.matrix()?.clone();
    // categorical path: iterate the partial trace down to a 1×1 operator
    let mut cur = op;
    for _ in 0..b.strands {
        cur = partial_trace_oriented(q, &mut cur, side, orientation)?;
    }
    let categorical = cur.matrix()?.at(0, 0).clone();
    // closed form: u is the Drinfel'd element of the braiding actually used
    let factors = match orientation {
        Orientation::Standard => q.rfactors.clone(),
        Orientation::Reversed => q.reversed_factors(),
    };
    let u = q.u_of(&factors);
    let umat = m.act_vec(&u);
    let t = match side {
        Side::Right => umat,
        Side::Left => umat.inverse()?,
    };
    let d = m.dim;
    let total = rho.rows;
    let field = m.algebra.field;
    let mut closed = field.zero();
    for c in 0..total {
        let mut col = rho.column(c);
        for pos in 0..b.strands {
            let left = d.pow(pos as u32);
            let right = total / (left * d);
            col = local_apply(&t, &col, left, right);
        }
        closed = &closed + &col[c];
    }
    if categorical != closed {
        return Err(Error::ClosedFormMismatch(format!(
            "iterated partial trace {} ≠ Drinfel'd-element trace {} on {}",
            categorical.to_text(),
            closed.to_text(),
            m.name
        )));
    }
    Ok(categorical)
}

/// Direct evaluation of the t_{2,q} braided dimension from Drinfel'd-element
/// powers (q = 2m: a product of two traces over Δ(u^{−m}); q = 2m+1: a trace
/// over (u^{m∓1}⊗u^{m∓1})Δ(u^{−m})ℛ₂₁ composed with the flip).
pub fn t2q_closed_form(
    q: &QuasitriangularData,
    m: &ModuleData,
    qexp: u64,
    side: Side,
) -> Result<Scalar> {
    let h = &q.h;
    let field = h.field;
    let half = (qexp / 2) as i64;
    let p = match side {
        Side::Left => half - 1,
        Side::Right => half + 1,
    };
    let elems = q.drinfeld_elements()?;
    let pow = |base: i64| -> Vec<Scalar> {
        let (e, n) = if base >= 0 { (&elems.u, base) } else { (&elems.u_inv, -base) };
        let mut acc = h.unit.clone();
        for _ in 0..n {
            acc = h.multiply(&acc, e);
        }
        acc
    };
    let up = pow(p);
    let u_neg_m = pow(-half);
    let delta = h.comult_vec(&u_neg_m);
    if qexp % 2 == 0 {
        // Σ Tr(u^p·(u^{−m})₁) Tr(u^p·(u^{−m})₂)
        let mut traces = vec![None; h.dim];
        let tr_of = |j: usize, traces: &mut Vec<Option<Scalar>>| -> Scalar {
            if traces[j].is_none() {
                let x = h.multiply(&up, &h.basis_vector(j));
                traces[j] = Some(m.act_vec(&x).trace());
            }
            traces[j].clone().unwrap()
        };
        let mut acc = field.zero();
        for ((j, k), c) in &delta {
            let tj = tr_of(*j, &mut traces);
            let tk = tr_of(*k, &mut traces);
            acc = &acc + &(&(c * &tj) * &tk);
        }
        Ok(acc)
    } else {
        // Tr(((u^p⊗u^p)·Δ(u^{−m})·ℛ₂₁) ∘ τ) = Σ W_{ij} Tr(A_i A_j)
        let mut upup = Tensor2::new();
        for (i, a) in up.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in up.iter().enumerate() {
                if !b.is_zero() {
                    tensor2_add(&mut upup, (i, j), a * b);
                }
            }
        }
        let mut r21 = Tensor2::new();
        for (a, b) in &q.rfactors {
            for (i, bi) in b.iter().enumerate() {
                if bi.is_zero() {
                    continue;
                }
                for (j, aj) in a.iter().enumerate() {
                    if !aj.is_zero() {
                        tensor2_add(&mut r21, (i, j), bi * aj);
                    }
                }
            }
        }
        let w = tensor2_mul(h, &tensor2_mul(h, &upup, &delta), &r21);
        let mut acc = field.zero();
        for ((i, j), c) in &w {
            let prod = m.action[*i].matmul(&m.action[*j]).trace();
            acc = &acc + &(c * &prod);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::build_double;
    use crate::field::FieldDescriptor;
    use crate::rep::{is_intertwiner, schrodinger, tensor_module, trivial_module};
    use crate::zoo;

    fn fq() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    #[test]
    fn parse_and_torus() {
        let b = parse_braid("2: 1 1").unwrap();
        assert_eq!(b, BraidWord::new(2, vec![1, 1]).unwrap());
        let b = parse_braid("3: 1 -2 1").unwrap();
        assert_eq!(b.letters, vec![1, -2, 1]);
        assert_eq!(parse_braid("1:").unwrap().letters, Vec::<i32>::new());
        assert!(matches!(parse_braid("2: 2"), Err(Error::LetterOutOfRange(2, 2))));
        assert!(matches!(parse_braid("2: 0"), Err(Error::ZeroLetter)));
        assert!(matches!(parse_braid("nonsense"), Err(Error::ParseError(_))));
        assert_eq!(torus_braid(2, 2).unwrap(), parse_braid("2: 1 1").unwrap());
        assert_eq!(torus_braid(2, 3).unwrap(), parse_braid("2: 1 1 1").unwrap());
        assert_eq!(torus_braid(3, 1).unwrap(), parse_braid("3: 1 2").unwrap());
        assert_eq!(torus_braid(3, -1).unwrap(), parse_braid("3: -2 -1").unwrap());
        assert!(torus_braid(1, 1).is_err());
    }

    #[test]
    fn braiding_on_trivial_and_involutions() {
        let c2 = zoo::group_algebra(&zoo::make_group("C2").unwrap(), fq());
        let dq = build_double(&c2).unwrap();
        let triv = trivial_module(&dq.h.clone().into());
        let c = braiding_map(&dq, &triv, &triv, BraidingVariant::Standard).unwrap();
        assert!(c.is_identity());
        // c² = id on Schr(k[C2])⊗²
        let schr = schrodinger(&dq).unwrap();
        let c = braiding_map(&dq, &schr, &schr, BraidingVariant::Standard).unwrap();
        assert!(c.matmul(&c).is_identity());
        let cinv = braiding_map(&dq, &schr, &schr, BraidingVariant::Inverse).unwrap();
        assert!(c.matmul(&cinv).is_identity());
    }

    #[test]
    fn yang_baxter_on_sweedler() {
        let a = zoo::sweedler();
        let dq = build_double(&a).unwrap();
        let schr = schrodinger(&dq).unwrap();
        let c = braiding_map(&dq, &schr, &schr, BraidingVariant::Standard).unwrap();
        let id = Matrix::identity(fq(), schr.dim);
        let c1 = c.kron(&id);
        let c2 = id.kron(&c);
        assert_eq!(
            c1.matmul(&c2).matmul(&c1),
            c2.matmul(&c1).matmul(&c2)
        );
    }

    #[test]
    fn braid_relations_and_linearity() {
        let s3 = zoo::group_algebra(&zoo::make_group("S3").unwrap(), fq());
        let dq = build_double(&s3).unwrap();
        let schr = Arc::new(schrodinger(&dq).unwrap());
        let r1 = braid_operator(&dq, &schr, &parse_braid("3: 1 2 1").unwrap())
            .unwrap()
            .matrix()
            .unwrap()
            .clone();
        let r2 = braid_operator(&dq, &schr, &parse_braid("3: 2 1 2").unwrap())
            .unwrap()
            .matrix()
            .unwrap()
            .clone();
        assert_eq!(r1, r2);
        // ρ(σ₁σ₁⁻¹) = id
        let mut idop = braid_operator(&dq, &schr, &parse_braid("2: 1 -1").unwrap()).unwrap();
        assert!(idop.matrix().unwrap().is_identity());
        // braid operator commutes with the diagonal action (n = 2)
        let t2 = tensor_module(&schr, &schr).unwrap();
        let mut sigma = braid_operator(&dq, &schr, &parse_braid("2: 1").unwrap()).unwrap();
        assert!(is_intertwiner(&t2, &t2, sigma.matrix().unwrap()));
    }

    #[test]
    fn quantum_dimensions() {
        // right 1-dim of Schr(A) = Tr(S²)
        let one = parse_braid("1:").unwrap();
        let s3 = zoo::group_algebra(&zoo::make_group("S3").unwrap(), fq());
        let dq = build_double(&s3).unwrap();
        let schr = schrodinger(&dq).unwrap();
        let v = braided_dim(&dq, &schr, &one, Side::Right, Orientation::Standard).unwrap();
        assert_eq!(v, fq().from_i64(6));
        let sw = zoo::sweedler();
        let dq = build_double(&sw).unwrap();
        let schr = schrodinger(&dq).unwrap();
        for side in [Side::Left, Side::Right] {
            let v = braided_dim(&dq, &schr, &one, side, Orientation::Standard).unwrap();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn torus_values_match_oracle_predictions() {
        // t_{2,2} on Schr(k[S3]): 18 = |G|·#Conj(G)
        let s3 = zoo::group_algebra(&zoo::make_group("S3").unwrap(), fq());
        let dq = build_double(&s3).unwrap();
        let schr = schrodinger(&dq).unwrap();
        let b = torus_braid(2, 2).unwrap();
        let v = braided_dim(&dq, &schr, &b, Side::Left, Orientation::Standard).unwrap();
        assert_eq!(v, fq().from_i64(18));
        // and 12 for the trefoil
        let b3 = torus_braid(2, 3).unwrap();
        let v = braided_dim(&dq, &schr, &b3, Side::Right, Orientation::Standard).unwrap();
        assert_eq!(v, fq().from_i64(12));
    }

    #[test]
    fn t2q_matches_braided_dim() {
        let c3 = zoo::group_algebra(&zoo::make_group("C3").unwrap(), fq());
        let sw = zoo::sweedler();
        for a in [c3, sw] {
            let dq = build_double(&a).unwrap();
            let schr = schrodinger(&dq).unwrap();
            for qexp in 0..=3u64 {
                let b = torus_braid(2, qexp as i64).unwrap();
                for side in [Side::Left, Side::Right] {
                    let direct =
                        braided_dim(&dq, &schr, &b, side, Orientation::Standard).unwrap();
                    let closed = t2q_closed_form(&dq, &schr, qexp, side).unwrap();
                    assert_eq!(direct, closed, "{} q={qexp}", a.name);
                }
            }
        }
        // q=2 on Schr(k[C3]) is 9 = |C3|·#Conj
        let c3 = zoo::group_algebra(&zoo::make_group("C3").unwrap(), fq());
        let dq = build_double(&c3).unwrap();
        let schr = schrodinger(&dq).unwrap();
        assert_eq!(
            t2q_closed_form(&dq, &schr, 2, Side::Left).unwrap(),
            fq().from_i64(9)
        );
    }

    #[test]
    fn dual_right_equals_reversed_left() {
        // braided_dim(M*, b, right, standard) = braided_dim(M, b, left, reversed)
        let sw = zoo::sweedler();
        let dq = build_double(&sw).unwrap();
        let schr = schrodinger(&dq).unwrap();
        let dual = dual_module(&schr);
        for text in ["2: 1", "2: 1 1", "2: -1", "1:"] {
            let b = parse_braid(text).unwrap();
            let lhs = braided_dim(&dq, &dual, &b, Side::Right, Orientation::Standard).unwrap();
            let rhs = braided_dim(&dq, &schr, &b, Side::Left, Orientation::Reversed).unwrap();
            assert_eq!(lhs, rhs, "{text}");
        }
    }

    #[test]
    fn involutory_case_is_plain_trace() {
        let c2 = zoo::group_algebra(&zoo::make_group("C2").unwrap(), fq());
        let dq = build_double(&c2).unwrap();
        let schr = Arc::new(schrodinger(&dq).unwrap());
        for text in ["2: 1", "2: 1 1", "3: 1 -2"] {
            let b = parse_braid(text).unwrap();
            let plain = braid_operator(&dq, &schr, &b)
                .unwrap()
                .matrix()
                .unwrap()
                .trace();
            for side in [Side::Left, Side::Right] {
                let v = braided_dim(&dq, &schr, &b, side, Orientation::Standard).unwrap();
                assert_eq!(v, plain, "{text}");
            }
        }
    }

    #[test]
    fn guard_rejects_huge_operators() {
        let s3 = zoo::group_algebra(&zoo::make_group("S3").unwrap(), fq());
        let dq = build_double(&s3).unwrap();
        let schr = Arc::new(schrodinger(&dq).unwrap());
        // 6⁴ = 1296 legs squared = 1.7M entries > guard
        let b = BraidWord::new(4, vec![1]).unwrap();
        let mut op = braid_operator(&dq, &schr, &b).unwrap();
        assert!(matches!(op.matrix(), Err(Error::EnumerationTooLarge(_))));
    }
}
