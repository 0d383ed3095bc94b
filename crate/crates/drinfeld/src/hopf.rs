//! Finite-dimensional Hopf algebras given by exact structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::linalg::{axpy, Matrix, SparseRow};

/// A structure-constant Hopf algebra. Multiplication rows, the comultiplication
/// and the antipode matrix are all exact; nothing is ever approximated.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebraData {
    pub name: String,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    /// mult[i*dim+j] = coefficients of e_i · e_j.
    mult: Vec<SparseRow>,
    pub unit: Vec<Scalar>,
    /// comult[i] = terms (j, k, c) of Δ(e_i) = Σ c · e_j ⊗ e_k.
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

/// One named axiom check with an optional counterexample witness.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn ok(name: &str) -> Self {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: &str, witness: String) -> Self {
        Check { name: name.into(), pass: false, witness: Some(witness) }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }
}

/// Sparse 2-tensor in canonical form for exact comparison.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Sparse 3-tensor in canonical form.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

pub fn tensor2_add(t: &mut Tensor2, key: (usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}

pub fn tensor3_add(t: &mut Tensor3, key: (usize, usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}

/// ⟨p, a⟩ for a covector and a vector in dual coordinates.
pub fn pairing(p: &[Scalar], a: &[Scalar]) -> Scalar {
    let field = p
        .iter()
        .chain(a.iter())
        .next()
        .expect("nonempty vectors")
        .field();
    let mut acc = field.zero();
    for (x, y) in p.iter().zip(a) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

impl HopfAlgebraData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: FieldDescriptor,
        basis: Vec<String>,
        mult: Vec<SparseRow>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Self {
        let dim = basis.len();
        assert_eq!(mult.len(), dim * dim);
        let mut mult = mult;
        for row in &mut mult {
            row.sort_by_key(|(k, _)| *k);
        }
        let mut comult = comult;
        for row in &mut comult {
            row.sort_by_key(|(j, k, _)| (*j, *k));
        }
        HopfAlgebraData {
            name: name.into(),
            field,
            dim,
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
        }
    }

    pub fn mult_row(&self, i: usize, j: usize) -> &SparseRow {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_row(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, m) in self.mult_row(i, j) {
                    out[*k] = &out[*k] + &(&c * m);
                }
            }
        }
        out
    }

    /// Sparse product of two sparse vectors.
    pub fn multiply_sparse(&self, x: &SparseRow, y: &SparseRow) -> SparseRow {
        let mut out: SparseRow = vec![];
        for (i, xi) in x {
            for (j, yj) in y {
                let c = xi * yj;
                out = axpy(&out, &c, self.mult_row(*i, *j));
            }
        }
        out
    }

    pub fn comult_vec(&self, x: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_row(i) {
                tensor2_add(&mut t, (*j, *k), xi * c);
            }
        }
        t
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        pairing(&self.counit, x)
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(x)
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode.inverse()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Left-nested iterated coproduct of e_i with `legs` tensor legs.
    pub fn comult_power(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        let mut terms = vec![(vec![i], self.field.one())];
        for _ in 1..legs {
            let mut next = Vec::new();
            for (idxs, c) in &terms {
                for (j, k, d) in self.comult_row(idxs[0]) {
                    let mut nidx = Vec::with_capacity(idxs.len() + 1);
                    nidx.push(*j);
                    nidx.push(*k);
                    nidx.extend_from_slice(&idxs[1..]);
                    next.push((nidx, c * d));
                }
            }
            terms = next;
        }
        terms
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.mult_row(i, j) != self.mult_row(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self) -> bool {
        for i in 0..self.dim {
            let t: Tensor2 = {
                let mut t = Tensor2::new();
                for (j, k, c) in self.comult_row(i) {
                    tensor2_add(&mut t, (*j, *k), c.clone());
                }
                t
            };
            let mut flipped = Tensor2::new();
            for ((j, k), c) in &t {
                tensor2_add(&mut flipped, (*k, *j), c.clone());
            }
            if t != flipped {
                return false;
            }
        }
        true
    }

    /// Full axiom validation with witnesses.
    pub fn validate(&self) -> Result<Report> {
        let d = self.dim;
        if self.unit.len() != d
            || self.counit.len() != d
            || self.comult.len() != d
            || self.mult.len() != d * d
            || self.antipode.rows != d
            || self.antipode.cols != d
        {
            return Err(Error::DimensionMismatch(format!(
                "structure tensors inconsistent with dim {d} in '{}'",
                self.name
            )));
        }
        let mut report = Report::default();
        report.push(self.check_unit());
        report.push(self.check_associativity());
        report.push(self.check_counit());
        report.push(self.check_coassociativity());
        report.push(self.check_comult_algebra_map());
        report.push(self.check_counit_algebra_map());
        report.push(self.check_antipode());
        report.push(match self.antipode.inverse() {
            Ok(_) => Check::ok("antipode invertible"),
            Err(_) => Check::fail("antipode invertible", "singular antipode matrix".into()),
        });
        Ok(report)
    }

    pub fn validate_ok(&self) -> Result<()> {
        let report = self.validate()?;
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::InvalidAlgebra(format!(
                "'{}' fails {}: {}",
                self.name,
                c.name,
                c.witness.clone().unwrap_or_default()
            ))),
        }
    }

    fn check_unit(&self) -> Check {
        let unit_sparse: SparseRow = crate::linalg::sparsify(&self.unit);
        for i in 0..self.dim {
            let ei: SparseRow = vec![(i, self.field.one())];
            let left = self.multiply_sparse(&unit_sparse, &ei);
            let right = self.multiply_sparse(&ei, &unit_sparse);
            if left != ei || right != ei {
                return Check::fail("unit", format!("1·e_{i} or e_{i}·1 ≠ e_{i}"));
            }
        }
        Check::ok("unit")
    }

    fn check_associativity(&self) -> Check {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let row_ij = self.mult_row(i, j).clone();
                for k in 0..self.dim {
                    // (e_i e_j) e_k
                    let mut left: SparseRow = vec![];
                    for (t, c) in &row_ij {
                        left = axpy(&left, c, self.mult_row(*t, k));
                    }
                    // e_i (e_j e_k)
                    let mut right: SparseRow = vec![];
                    for (s, c) in self.mult_row(j, k) {
                        right = axpy(&right, c, self.mult_row(i, *s));
                    }
                    if left != right {
                        return Check::fail(
                            "associativity",
                            format!("(e_{i}e_{j})e_{k} ≠ e_{i}(e_{j}e_{k})"),
                        );
                    }
                }
            }
        }
        Check::ok("associativity")
    }

    fn check_counit(&self) -> Check {
        for i in 0..self.dim {
            let mut left = vec![self.field.zero(); self.dim];
            let mut right = vec![self.field.zero(); self.dim];
            for (j, k, c) in self.comult_row(i) {
                left[*k] = &left[*k] + &(&self.counit[*j] * c);
                right[*j] = &right[*j] + &(c * &self.counit[*k]);
            }
            let ei = self.basis_vector(i);
            if left != ei || right != ei {
                return Check::fail("counit", format!("(ε⊗id)Δ or (id⊗ε)Δ ≠ id on e_{i}"));
            }
        }
        Check::ok("counit")
    }

    fn check_coassociativity(&self) -> Check {
        for i in 0..self.dim {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for (j, k, c) in self.comult_row(i) {
                for (a, b, e) in self.comult_row(*j) {
                    tensor3_add(&mut left, (*a, *b, *k), c * e);
                }
                for (a, b, e) in self.comult_row(*k) {
                    tensor3_add(&mut right, (*j, *a, *b), c * e);
                }
            }
            if left != right {
                return Check::fail("coassociativity", format!("on e_{i}"));
            }
        }
        Check::ok("coassociativity")
    }

    fn check_comult_algebra_map(&self) -> Check {
        // Δ(1) = 1⊗1
        let mut unit_tensor = Tensor2::new();
        for (s, us) in self.unit.iter().enumerate() {
            if us.is_zero() {
                continue;
            }
            for (t, ut) in self.unit.iter().enumerate() {
                if !ut.is_zero() {
                    tensor2_add(&mut unit_tensor, (s, t), us * ut);
                }
            }
        }
        if self.comult_vec(&self.unit) != unit_tensor {
            return Check::fail("comult algebra map", "Δ(1) ≠ 1⊗1".into());
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                // Δ(e_i e_j)
                let mut lhs = Tensor2::new();
                for (k, c) in self.mult_row(i, j) {
                    for (a, b, e) in self.comult_row(*k) {
                        tensor2_add(&mut lhs, (*a, *b), c * e);
                    }
                }
                // Δ(e_i)Δ(e_j) with componentwise products
                let mut rhs = Tensor2::new();
                for (a1, b1, c1) in self.comult_row(i) {
                    for (a2, b2, c2) in self.comult_row(j) {
                        let c = c1 * c2;
                        for (s, cs) in self.mult_row(*a1, *a2) {
                            for (t, ct) in self.mult_row(*b1, *b2) {
                                tensor2_add(&mut rhs, (*s, *t), &(&c * cs) * ct);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Check::fail(
                        "comult algebra map",
                        format!("Δ(e_{i}e_{j}) ≠ Δ(e_{i})Δ(e_{j})"),
                    );
                }
            }
        }
        Check::ok("comult algebra map")
    }

    fn check_counit_algebra_map(&self) -> Check {
        if !self.counit_of(&self.unit).is_one() {
            return Check::fail("counit algebra map", "ε(1) ≠ 1".into());
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut lhs = self.field.zero();
                for (k, c) in self.mult_row(i, j) {
                    lhs = &lhs + &(c * &self.counit[*k]);
                }
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    return Check::fail(
                        "counit algebra map",
                        format!("ε(e_{i}e_{j}) ≠ ε(e_{i})ε(e_{j})"),
                    );
                }
            }
        }
        Check::ok("counit algebra map")
    }

    fn check_antipode(&self) -> Check {
        for i in 0..self.dim {
            let mut left = vec![self.field.zero(); self.dim];
            let mut right = vec![self.field.zero(); self.dim];
            for (j, k, c) in self.comult_row(i) {
                // S(e_j)·e_k and e_j·S(e_k)
                let sj = self.antipode.column(*j);
                for (s, cs) in crate::linalg::sparsify(&sj) {
                    for (t, m) in self.mult_row(s, *k) {
                        left[*t] = &left[*t] + &(&(c * &cs) * m);
                    }
                }
                let sk = self.antipode.column(*k);
                for (s, cs) in crate::linalg::sparsify(&sk) {
                    for (t, m) in self.mult_row(*j, s) {
                        right[*t] = &right[*t] + &(&(c * &cs) * m);
                    }
                }
            }
            let expected: Vec<Scalar> =
                self.unit.iter().map(|u| &self.counit[i] * u).collect();
            if left != expected || right != expected {
                return Check::fail("antipode", format!("convolution inverse fails on e_{i}"));
            }
        }
        Check::ok("antipode")
    }

    /// Equality of all structure constants, ignoring name and basis labels.
    pub fn same_structure(&self, other: &HopfAlgebraData) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// The dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> HopfAlgebraData {
        let d = self.dim;
        let mut mult = vec![SparseRow::new(); d * d];
        for k in 0..d {
            for (i, j, c) in self.comult_row(k) {
                mult[i * d + j].push((k, c.clone()));
            }
        }
        for row in &mut mult {
            row.sort_by_key(|(k, _)| *k);
        }
        let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.mult_row(i, j) {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        for row in &mut comult {
            row.sort_by_key(|(j, k, _)| (*j, *k));
        }
        HopfAlgebraData {
            name: format!("dual({})", self.name),
            field: self.field,
            dim: d,
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
        }
    }

    /// Opposite algebra (swapped multiplication), antipode S⁻¹.
    pub fn opposite(&self) -> Result<HopfAlgebraData> {
        let d = self.dim;
        let mut mult = vec![SparseRow::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                mult[i * d + j] = self.mult_row(j, i).clone();
            }
        }
        Ok(HopfAlgebraData {
            name: format!("op({})", self.name),
            field: self.field,
            dim: d,
            basis: self.basis.clone(),
            mult,
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode_inverse()?,
        })
    }

    /// Co-opposite coalgebra (swapped comultiplication legs), antipode S⁻¹.
    pub fn coopposite(&self) -> Result<HopfAlgebraData> {
        let comult = self
            .comult
            .iter()
            .map(|row| row.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect())
            .collect();
        Ok(HopfAlgebraData {
            name: format!("cop({})", self.name),
            field: self.field,
            dim: self.dim,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode_inverse()?,
        })
    }

    pub fn trace_s_squared(&self) -> Scalar {
        self.antipode.matmul(&self.antipode).trace()
    }

    /// Left integral Λ, right integral λ in A*, distinguished grouplikes α, g.
    pub fn integrals(&self) -> Result<IntegralData> {
        let d = self.dim;
        // Λ: nullspace of rows (L_{e_i} - ε(e_i)·id) over all i.
        let mut rows: Vec<SparseRow> = vec![];
        for i in 0..d {
            // row block: for output coordinate t, Σ_j mult[i][j]_t Λ_j - ε(e_i) Λ_t = 0
            let mut block: Vec<SparseRow> = vec![SparseRow::new(); d];
            for j in 0..d {
                for (t, c) in self.mult_row(i, j) {
                    block[*t].push((j, c.clone()));
                }
            }
            let eps = self.counit[i].clone();
            for (t, row) in block.iter_mut().enumerate() {
                row.sort_by_key(|(j, _)| *j);
                if !eps.is_zero() {
                    *row = axpy(row, &-&eps, &vec![(t, self.field.one())]);
                }
            }
            rows.extend(block.into_iter().filter(|r| !r.is_empty()));
        }
        let lam_space = crate::linalg::sparse_nullspace(self.field, d, &rows);
        if lam_space.len() != 1 {
            return Err(Error::IntegralSpaceNotOneDimensional(lam_space.len()));
        }
        let mut lambda_big = lam_space.into_iter().next().unwrap();
        normalize_leading(&mut lambda_big);

        // λ: right integral in A*, i.e. λ·p = ⟨p,1⟩λ in the dual algebra.
        let dual = self.dual();
        let mut rows: Vec<SparseRow> = vec![];
        for j in 0..d {
            let mut block: Vec<SparseRow> = vec![SparseRow::new(); d];
            for i in 0..d {
                for (t, c) in dual.mult_row(i, j) {
                    block[*t].push((i, c.clone()));
                }
            }
            let scale = self.unit[j].clone(); // ⟨e_j*, 1⟩
            for (t, row) in block.iter_mut().enumerate() {
                row.sort_by_key(|(i, _)| *i);
                if !scale.is_zero() {
                    *row = axpy(row, &-&scale, &vec![(t, self.field.one())]);
                }
            }
            rows.extend(block.into_iter().filter(|r| !r.is_empty()));
        }
        let dual_space = crate::linalg::sparse_nullspace(self.field, d, &rows);
        if dual_space.len() != 1 {
            return Err(Error::IntegralSpaceNotOneDimensional(dual_space.len()));
        }
        let mut lam_dual = dual_space.into_iter().next().unwrap();
        normalize_leading(&mut lam_dual);
        let pair = pairing(&lam_dual, &lambda_big);
        if !pair.is_zero() {
            let inv = pair.inv()?;
            for c in &mut lam_dual {
                *c = &*c * &inv;
            }
        }

        // α: Λ e_j = ⟨α, e_j⟩ Λ.
        let lead = lambda_big
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero integral");
        let mut alpha = vec![self.field.zero(); d];
        for j in 0..d {
            let ej = self.basis_vector(j);
            let prod = self.multiply(&lambda_big, &ej);
            let c = prod[lead].clone(); // Λ has leading coefficient 1
            let scaled: Vec<Scalar> = lambda_big.iter().map(|x| &c * x).collect();
            if prod != scaled {
                return Err(Error::InvalidAlgebra(format!(
                    "Λ·e_{j} not proportional to Λ in '{}'",
                    self.name
                )));
            }
            alpha[j] = c;
        }

        // g: e_i*·λ = ⟨e_i*, g⟩ λ in the dual algebra.
        let dlead = lam_dual
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero dual integral");
        let dlead_inv = lam_dual[dlead].inv()?;
        let mut g = vec![self.field.zero(); d];
        for i in 0..d {
            let ei = dual.basis_vector(i);
            let prod = dual.multiply(&ei, &lam_dual);
            let c = &prod[dlead] * &dlead_inv;
            let scaled: Vec<Scalar> = lam_dual.iter().map(|x| &c * x).collect();
            if prod != scaled {
                return Err(Error::InvalidAlgebra(format!(
                    "e_{i}*·λ not proportional to λ in '{}'",
                    self.name
                )));
            }
            g[i] = c;
        }

        Ok(IntegralData {
            left_integral: lambda_big,
            right_dual_integral: lam_dual,
            alpha,
            g_dist: g,
        })
    }

    pub fn semisimplicity_predicates(&self) -> Result<Predicates> {
        let ints = self.integrals()?;
        Ok(Predicates {
            unimodular: ints.alpha == self.counit,
            semisimple: !self.counit_of(&ints.left_integral).is_zero(),
            cosemisimple: !pairing(&ints.right_dual_integral, &self.unit).is_zero(),
        })
    }
}

fn normalize_leading(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().position(|c| !c.is_zero()) {
        let inv = v[lead].inv().expect("nonzero leading coefficient");
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
    }
}

#[derive(Debug, Clone)]
pub struct IntegralData {
    /// Λ, a left integral in A, leading coefficient 1.
    pub left_integral: Vec<Scalar>,
    /// λ, a right integral in A*, scaled so ⟨λ,Λ⟩ = 1 when possible.
    pub right_dual_integral: Vec<Scalar>,
    /// Distinguished grouplike of A*: Λa = ⟨α,a⟩Λ.
    pub alpha: Vec<Scalar>,
    /// Distinguished grouplike of A: pλ = ⟨p,g⟩λ.
    pub g_dist: Vec<Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub unimodular: bool,
    pub semisimple: bool,
    pub cosemisimple: bool,
}

/// Check that the matrix F: A → B is a Hopf algebra map (algebra map,
/// coalgebra map, unit/counit preserving) and invertible.
pub fn validate_hopf_iso(a: &HopfAlgebraData, b: &HopfAlgebraData, f: &Matrix) -> Result<()> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field, b.field)));
    }
    if f.rows != b.dim || f.cols != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "map is {}×{}, expected {}×{}",
            f.rows, f.cols, b.dim, a.dim
        )));
    }
    if f.apply(&a.unit) != b.unit {
        return Err(Error::NotHopfMap("F(1) ≠ 1".into()));
    }
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = f.apply(&a.multiply(&a.basis_vector(i), &a.basis_vector(j)));
            let rhs = b.multiply(&f.column(i), &f.column(j));
            if lhs != rhs {
                return Err(Error::NotHopfMap(format!(
                    "F(e_{i}e_{j}) ≠ F(e_{i})F(e_{j})"
                )));
            }
        }
    }
    for i in 0..a.dim {
        let fi = f.column(i);
        let lhs = b.comult_vec(&fi);
        let mut rhs = Tensor2::new();
        for (j, k, c) in a.comult_row(i) {
            let fj = f.column(*j);
            let fk = f.column(*k);
            for (s, cs) in crate::linalg::sparsify(&fj) {
                for (t, ct) in crate::linalg::sparsify(&fk) {
                    tensor2_add(&mut rhs, (s, t), &(c * &cs) * &ct);
                }
            }
        }
        if lhs != rhs {
            return Err(Error::NotHopfMap(format!("Δ∘F ≠ (F⊗F)∘Δ on e_{i}")));
        }
        if b.counit_of(&fi) != a.counit[i] {
            return Err(Error::NotHopfMap(format!("ε∘F ≠ ε on e_{i}")));
        }
    }
    f.inverse().map_err(|_| Error::NotIsomorphism("map not invertible".into()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn group_algebra_axioms() {
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), FieldDescriptor::Rationals);
        assert!(a.validate().unwrap().passed());
        assert!(a.dual().validate().unwrap().passed());
    }

    #[test]
    fn sweedler_axioms_and_corruption() {
        let a = zoo::sweedler();
        assert!(a.validate().unwrap().passed());
        // corrupt Δ(x) to x⊗x (basis order 1,x,g,gx: x has index 1)
        let mut bad = a.clone();
        bad.comult[1] = vec![(1, 1, a.field.one())];
        let report = bad.validate().unwrap();
        assert!(!report.passed());
        assert!(report.first_failure().unwrap().witness.is_some());
    }

    #[test]
    fn dual_is_involutive() {
        for a in [
            zoo::group_algebra(&zoo::make_group("S3").unwrap(), FieldDescriptor::Rationals),
            zoo::sweedler(),
        ] {
            let dd = a.dual().dual();
            assert_eq!(dd.mult, a.mult);
            assert_eq!(dd.comult, a.comult);
            assert_eq!(dd.unit, a.unit);
            assert_eq!(dd.counit, a.counit);
            assert_eq!(dd.antipode, a.antipode);
        }
    }

    #[test]
    fn variants_validate() {
        let a = zoo::sweedler();
        assert!(a.opposite().unwrap().validate().unwrap().passed());
        assert!(a.coopposite().unwrap().validate().unwrap().passed());
        let g = zoo::group_algebra(&zoo::make_group("C2").unwrap(), FieldDescriptor::Rationals);
        assert_eq!(g.antipode_inverse().unwrap(), g.antipode);
    }

    #[test]
    fn integrals_group_algebra() {
        let q = FieldDescriptor::Rationals;
        let a = zoo::group_algebra(&zoo::make_group("C2").unwrap(), q);
        let ints = a.integrals().unwrap();
        // Λ = 1 + g
        assert_eq!(ints.left_integral, vec![q.one(), q.one()]);
        assert_eq!(ints.alpha, a.counit);
        let p = a.semisimplicity_predicates().unwrap();
        assert!(p.unimodular && p.semisimple && p.cosemisimple);
    }

    #[test]
    fn integrals_sweedler() {
        let q = FieldDescriptor::Rationals;
        let a = zoo::sweedler();
        let ints = a.integrals().unwrap();
        // Λ = x + gx (basis 1,x,g,gx)
        assert_eq!(
            ints.left_integral,
            vec![q.zero(), q.one(), q.zero(), q.one()]
        );
        // α(g) = -1, α(x) = 0
        assert_eq!(ints.alpha, vec![q.one(), q.zero(), q.from_i64(-1), q.zero()]);
        // Λg = -Λ
        let g = a.basis_vector(2);
        let prod = a.multiply(&ints.left_integral, &g);
        let neg: Vec<_> = ints.left_integral.iter().map(|c| -c).collect();
        assert_eq!(prod, neg);
        let p = a.semisimplicity_predicates().unwrap();
        assert!(!p.unimodular && !p.semisimple && !p.cosemisimple);
        assert!(a.trace_s_squared().is_zero());
    }

    #[test]
    fn integrals_dual_group() {
        let q = FieldDescriptor::Rationals;
        let a = zoo::dual_group_algebra(&zoo::make_group("S3").unwrap(), q);
        let ints = a.integrals().unwrap();
        // Λ = δ_e
        let mut expect = vec![q.zero(); 6];
        expect[0] = q.one();
        assert_eq!(ints.left_integral, expect);
        let p = a.semisimplicity_predicates().unwrap();
        assert!(p.unimodular && p.semisimple && p.cosemisimple);
    }

    #[test]
    fn modular_group_algebra_not_semisimple() {
        let gf3 = FieldDescriptor::prime_field(3).unwrap();
        let a = zoo::group_algebra(&zoo::make_group("C3").unwrap(), gf3);
        assert!(a.validate().unwrap().passed());
        let p = a.semisimplicity_predicates().unwrap();
        assert!(!p.semisimple);
    }

    #[test]
    fn trace_s_squared_properties() {
        let q = FieldDescriptor::Rationals;
        let s3 = zoo::group_algebra(&zoo::make_group("S3").unwrap(), q);
        assert_eq!(s3.trace_s_squared(), q.from_i64(6));
        assert_eq!(s3.dual().trace_s_squared(), q.from_i64(6));
        let taft = zoo::taft(3).unwrap();
        assert!(taft.trace_s_squared().is_zero());
    }

    #[test]
    fn alpha_is_multiplicative() {
        for a in [zoo::sweedler(), zoo::taft(3).unwrap()] {
            let ints = a.integrals().unwrap();
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let mut lhs = a.field.zero();
                    for (k, c) in a.mult_row(i, j) {
                        lhs = &lhs + &(c * &ints.alpha[*k]);
                    }
                    assert_eq!(lhs, &ints.alpha[i] * &ints.alpha[j]);
                }
            }
        }
    }
}
