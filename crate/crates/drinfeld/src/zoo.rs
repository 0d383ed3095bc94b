//! Builtin finite groups and the concrete Hopf algebras the invariants are
//! exercised on.

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::hopf::{tensor2_add, HopfAlgebraData, Tensor2};
use crate::linalg::{Matrix, SparseRow};

/// A finite group as a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    /// cayley[i][j] = index of g_i g_j.
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub labels: Vec<String>,
}

impl FiniteGroup {
    fn from_table(name: String, cayley: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = cayley.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| cayley[e][i] == i && cayley[i][e] == i))
            .ok_or_else(|| Error::UnsupportedSpec(format!("{name}: no identity")))?;
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| cayley[i][j] == identity)
                .ok_or_else(|| Error::UnsupportedSpec(format!("{name}: no inverse for {i}")))?;
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]] {
                        return Err(Error::UnsupportedSpec(format!(
                            "{name}: not associative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, order: n, cayley, identity, inverse, labels })
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn conj_class_count(&self) -> usize {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = 0;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            classes += 1;
            for g in 0..n {
                let c = self.mul(self.mul(g, i), self.inv(g));
                seen[c] = true;
            }
        }
        classes
    }

    pub fn commuting_pair_count(&self) -> usize {
        let n = self.order;
        let mut count = 0;
        for i in 0..n {
            for j in 0..n {
                if self.mul(i, j) == self.mul(j, i) {
                    count += 1;
                }
            }
        }
        count
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnsupportedSpec("cyclic(0)".into()));
    }
    let cayley = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| if i == 0 { "e".into() } else { format!("g{i}") })
        .collect();
    FiniteGroup::from_table(format!("C{n}"), cayley, labels)
}

pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::UnsupportedSpec(format!("dihedral({n})")));
    }
    // element (i, j) = r^i s^j at index i + n*j; s r = r^{-1} s.
    let order = 2 * n;
    let idx = |i: usize, j: usize| i + n * j;
    let mut cayley = vec![vec![0; order]; order];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2 % n) % n };
                    cayley[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                }
            }
        }
    }
    let mut labels = vec![String::new(); order];
    for i in 0..n {
        for j in 0..2 {
            labels[idx(i, j)] = match (i, j) {
                (0, 0) => "e".into(),
                (_, 0) => format!("r{i}"),
                (0, _) => "s".into(),
                (_, _) => format!("r{i}s"),
            };
        }
    }
    FiniteGroup::from_table(format!("D{n}"), cayley, labels)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 4 {
        return Err(Error::UnsupportedSpec(format!("symmetric({n}) (supported: 1..=4)")));
    }
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        let mut next = vec![];
        for p in &perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    perms.sort();
    let order = perms.len();
    let index_of = |p: &Vec<usize>| perms.binary_search(p).unwrap();
    let mut cayley = vec![vec![0; order]; order];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            // (p∘q)(x) = p(q(x))
            let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            cayley[a][b] = index_of(&comp);
        }
    }
    let labels = perms
        .iter()
        .map(|p| {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(""))
        })
        .collect();
    FiniteGroup::from_table(format!("S{n}"), cayley, labels)
}

pub fn quaternion8() -> Result<FiniteGroup> {
    // elements: index = unit*2 + sign, units 1,i,j,k; sign 0 = +, 1 = −.
    let unit_mul = |a: usize, b: usize| -> (usize, usize) {
        // returns (unit, sign) of the product of units 0..4 = 1,i,j,k
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) => (0, 1),
            (2, 2) => (0, 1),
            (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let idx = |u: usize, s: usize| u * 2 + s;
    let mut cayley = vec![vec![0; 8]; 8];
    for u1 in 0..4 {
        for s1 in 0..2 {
            for u2 in 0..4 {
                for s2 in 0..2 {
                    let (u, s) = unit_mul(u1, u2);
                    cayley[idx(u1, s1)][idx(u2, s2)] = idx(u, (s + s1 + s2) % 2);
                }
            }
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroup::from_table(
        "Q8".into(),
        cayley,
        names.iter().map(|s| s.to_string()).collect(),
    )
}

pub fn product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let (n1, n2) = (g1.order, g2.order);
    let order = n1 * n2;
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut cayley = vec![vec![0; order]; order];
    for a1 in 0..n1 {
        for b1 in 0..n2 {
            for a2 in 0..n1 {
                for b2 in 0..n2 {
                    cayley[idx(a1, b1)][idx(a2, b2)] = idx(g1.mul(a1, a2), g2.mul(b1, b2));
                }
            }
        }
    }
    let mut labels = vec![String::new(); order];
    for a in 0..n1 {
        for b in 0..n2 {
            labels[idx(a, b)] = format!("({},{})", g1.labels[a], g2.labels[b]);
        }
    }
    FiniteGroup::from_table(format!("{}x{}", g1.name, g2.name), cayley, labels)
}

/// Parse a group spec string like "C2", "S3", "D4", "Q8", "C2xC2".
pub fn make_group(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some((left, right)) = spec.split_once('x') {
        return product(&make_group(left)?, &make_group(right)?);
    }
    if spec == "Q8" {
        return quaternion8();
    }
    let err = || Error::UnsupportedSpec(spec.to_string());
    if spec.len() < 2 || !spec.is_char_boundary(1) {
        return Err(err());
    }
    let (kind, num) = spec.split_at(1);
    let n: usize = num.parse().map_err(|_| err())?;
    match kind {
        "C" => cyclic(n),
        "D" => dihedral(n),
        "S" => symmetric(n),
        _ => Err(err()),
    }
}

pub fn group_stats(g: &FiniteGroup) -> (usize, usize) {
    (g.conj_class_count(), g.commuting_pair_count())
}

pub fn group_algebra(g: &FiniteGroup, field: FieldDescriptor) -> HopfAlgebraData {
    let n = g.order;
    let mut mult = vec![SparseRow::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = vec![(g.mul(i, j), field.one())];
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[g.identity] = field.one();
    let comult = (0..n).map(|i| vec![(i, i, field.one())]).collect();
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zero(field, n, n);
    for j in 0..n {
        *antipode.at_mut(g.inv(j), j) = field.one();
    }
    HopfAlgebraData::new(
        format!("k[{}]", g.name),
        field,
        g.labels.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
}

pub fn dual_group_algebra(g: &FiniteGroup, field: FieldDescriptor) -> HopfAlgebraData {
    let mut a = group_algebra(g, field).dual();
    a.name = format!("k^{}", g.name);
    a
}

/// Taft algebra on basis g^i x^j with x g = ω g x, over an explicit field and
/// root of unity of exact order n.
pub fn taft_with(n: usize, field: FieldDescriptor, omega: Scalar) -> Result<HopfAlgebraData> {
    if n < 2 {
        return Err(Error::BadParameter(format!("taft({n}): need n ≥ 2")));
    }
    if omega.pow(n as i64).map(|p| !p.is_one()).unwrap_or(true) {
        return Err(Error::RootOrderMismatch(omega.to_text()));
    }
    for k in 1..n {
        if omega.pow(k as i64).unwrap().is_one() {
            return Err(Error::RootOrderMismatch(omega.to_text()));
        }
    }
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut mult = vec![SparseRow::new(); d * d];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l < n {
                        let c = omega.pow((j * k) as i64).unwrap();
                        mult[idx(i, j) * d + idx(k, l)] = vec![(idx((i + k) % n, j + l), c)];
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); d];
    unit[idx(0, 0)] = field.one();
    let mut counit = vec![field.zero(); d];
    for i in 0..n {
        counit[idx(i, 0)] = field.one();
    }

    // helper: multiply two elements given the mult table above
    let multiply = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); d];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                for (k, c) in &mult[a * d + b] {
                    out[*k] = &out[*k] + &(&(xa * yb) * c);
                }
            }
        }
        out
    };

    // Δ as an algebra map from Δ(g) = g⊗g, Δ(x) = 1⊗x + x⊗g, computed in A⊗A.
    let tensor_mul = |s: &Tensor2, t: &Tensor2| -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a1, b1), c1) in s {
            for ((a2, b2), c2) in t {
                let c = c1 * c2;
                for (p, cp) in &mult[a1 * d + a2] {
                    for (q, cq) in &mult[b1 * d + b2] {
                        tensor2_add(&mut out, (*p, *q), &(&c * cp) * cq);
                    }
                }
            }
        }
        out
    };
    let mut dg = Tensor2::new();
    dg.insert((idx(1, 0), idx(1, 0)), field.one());
    let mut dx = Tensor2::new();
    dx.insert((idx(0, 0), idx(0, 1)), field.one());
    dx.insert((idx(0, 1), idx(1, 0)), field.one());
    let mut comult = vec![Vec::new(); d];
    for i in 0..n {
        for j in 0..n {
            let mut t = Tensor2::new();
            t.insert((idx(0, 0), idx(0, 0)), field.one());
            for _ in 0..i {
                t = tensor_mul(&t, &dg);
            }
            for _ in 0..j {
                t = tensor_mul(&t, &dx);
            }
            comult[idx(i, j)] = t.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        }
    }

    // S(g) = g^{n-1}, S(x) = -x g^{n-1}; S(g^i x^j) = S(x)^j S(g)^i.
    let mut sg = vec![field.zero(); d];
    sg[idx(n - 1, 0)] = field.one();
    let mut sx = vec![field.zero(); d];
    // -x·g^{n-1} = -ω^{n-1} g^{n-1} x
    sx[idx(n - 1, 1)] = -&omega.pow((n - 1) as i64).unwrap();
    let mut antipode = Matrix::zero(field, d, d);
    for i in 0..n {
        for j in 0..n {
            let mut v = vec![field.zero(); d];
            v[idx(0, 0)] = field.one();
            for _ in 0..j {
                v = multiply(&v, &sx);
            }
            for _ in 0..i {
                v = multiply(&v, &sg);
            }
            for (t, c) in v.into_iter().enumerate() {
                *antipode.at_mut(t, idx(i, j)) = c;
            }
        }
    }

    let labels = (0..n)
        .flat_map(|i| {
            (0..n).map(move |j| match (i, j) {
                (0, 0) => "1".into(),
                (_, 0) => format!("g{}", pow_label(i)),
                (0, _) => format!("x{}", pow_label(j)),
                _ => format!("g{}x{}", pow_label(i), pow_label(j)),
            })
        })
        .collect();
    Ok(HopfAlgebraData::new(
        format!("taft({n})"),
        field,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    ))
}

fn pow_label(e: usize) -> String {
    if e == 1 {
        String::new()
    } else {
        format!("^{e}")
    }
}

/// The 4-dimensional Sweedler algebra = taft(2, −1) over ℚ.
pub fn sweedler() -> HopfAlgebraData {
    let q = FieldDescriptor::Rationals;
    let mut a = taft_with(2, q, q.from_i64(-1)).expect("-1 has order 2 over Q");
    a.name = "sweedler".into();
    a.basis = vec!["1".into(), "x".into(), "g".into(), "gx".into()];
    a
}

/// taft(n) over ℚ(ζ_n) with ω = ζ_n.
pub fn taft(n: usize) -> Result<HopfAlgebraData> {
    let field = FieldDescriptor::cyclotomic(n as u64)?;
    let omega = field.root_of_unity().unwrap();
    taft_with(n, field, omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs_resolve() {
        for (spec, order, classes) in [
            ("C2", 2, 2),
            ("C3", 3, 3),
            ("C4", 4, 4),
            ("C6", 6, 6),
            ("C2xC2", 4, 4),
            ("C2xC3", 6, 6),
            ("S3", 6, 3),
            ("S4", 24, 5),
            ("D4", 8, 5),
            ("Q8", 8, 5),
        ] {
            let g = make_group(spec).unwrap();
            assert_eq!(g.order, order, "{spec}");
            assert_eq!(g.conj_class_count(), classes, "{spec}");
        }
        assert!(make_group("S5").is_err());
        assert!(make_group("F4").is_err());
    }

    #[test]
    fn burnside_identity() {
        for spec in ["C2", "C3", "C4", "C6", "C2xC2", "S3", "S4", "D4", "Q8"] {
            let g = make_group(spec).unwrap();
            let (classes, comm) = group_stats(&g);
            assert_eq!(g.order * classes, comm, "{spec}");
        }
    }

    #[test]
    fn stats_examples() {
        assert_eq!(group_stats(&make_group("C2").unwrap()), (2, 4));
        assert_eq!(group_stats(&make_group("S3").unwrap()), (3, 18));
        assert_eq!(group_stats(&make_group("Q8").unwrap()), (5, 40));
    }

    #[test]
    fn group_algebras_validate() {
        let q = FieldDescriptor::Rationals;
        for spec in ["C2", "C3", "S3", "D4", "Q8"] {
            let g = make_group(spec).unwrap();
            let a = group_algebra(&g, q);
            assert!(a.validate().unwrap().passed(), "{spec}");
            // involutory
            assert!(a.antipode.matmul(&a.antipode).is_identity(), "{spec}");
            let p = a.semisimplicity_predicates().unwrap();
            assert!(p.unimodular, "{spec}");
        }
    }

    #[test]
    fn dual_group_algebra_structure() {
        let q = FieldDescriptor::Rationals;
        let g = make_group("S3").unwrap();
        let a = dual_group_algebra(&g, q);
        assert!(a.validate().unwrap().passed());
        // pointwise algebra: δ_g δ_h = [g=h] δ_g, unit = Σ δ_g
        for i in 0..6 {
            for j in 0..6 {
                let prod = a.multiply(&a.basis_vector(i), &a.basis_vector(j));
                if i == j {
                    assert_eq!(prod, a.basis_vector(i));
                } else {
                    assert!(prod.iter().all(|c| c.is_zero()));
                }
            }
        }
        assert_eq!(a.unit, vec![q.one(); 6]);
        assert!(!a.is_cocommutative());
    }

    #[test]
    fn sweedler_relations() {
        let a = sweedler();
        assert!(a.validate().unwrap().passed());
        let q = a.field;
        // basis 1, x, g, gx; xg = -gx
        let x = a.basis_vector(1);
        let g = a.basis_vector(2);
        let xg = a.multiply(&x, &g);
        let gx = a.multiply(&g, &x);
        assert_eq!(xg, gx.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(a.multiply(&x, &x).iter().all(|c| c.is_zero()));
        assert_eq!(a.multiply(&g, &g), a.basis_vector(0));
        assert_eq!(a.trace_s_squared(), q.zero());
    }

    #[test]
    fn taft3_properties() {
        let a = taft(3).unwrap();
        assert_eq!(a.dim, 9);
        assert!(a.validate().unwrap().passed());
        let p = a.semisimplicity_predicates().unwrap();
        assert!(!p.unimodular && !p.cosemisimple);
        // S² scales x^j by ω^{-j}, so S has exact order 2n = 6
        let s2 = a.antipode.matmul(&a.antipode);
        assert!(!s2.is_identity());
        assert!(s2.matmul(&s2).matmul(&s2).is_identity());
    }

    #[test]
    fn taft_root_order_guard() {
        let q = FieldDescriptor::Rationals;
        assert!(matches!(
            taft_with(3, q, q.from_i64(-1)),
            Err(Error::RootOrderMismatch(_))
        ));
        assert!(matches!(
            taft_with(4, FieldDescriptor::cyclotomic(4).unwrap(), {
                let f = FieldDescriptor::cyclotomic(4).unwrap();
                f.one()
            }),
            Err(Error::RootOrderMismatch(_))
        ));
    }
}
