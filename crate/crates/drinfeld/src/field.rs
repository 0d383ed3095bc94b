//! Exact scalars over the rationals, prime fields and cyclotomic fields.
//!
//! A cyclotomic scalar is a rational coefficient vector of length deg(Φ_m),
//! kept reduced modulo the m-th cyclotomic polynomial so that equality is
//! plain componentwise comparison.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    Cyclotomic(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
            FieldDescriptor::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact division of polynomials with rational coefficients; the divisor must
/// divide evenly (used only for x^m - 1 over products of cyclotomics).
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigRational::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for (i, dc) in den.iter().enumerate() {
                let v = &rem[k + i] - &(&c * dc);
                rem[k + i] = v;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Monic coefficients of the m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    let mut num = vec![BigRational::zero(); m as usize + 1];
    num[0] = -BigRational::one();
    num[m as usize] = BigRational::one();
    let mut result = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            result = poly_div_exact(&result, &phi_d);
        }
    }
    cache.lock().unwrap().insert(m, result.clone());
    result
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadParameter(format!("{p} is not prime")));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    pub fn cyclotomic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadParameter("cyclotomic order must be >= 1".into()));
        }
        Ok(FieldDescriptor::Cyclotomic(m))
    }

    /// Extension degree over the prime field / rationals.
    pub fn degree(&self) -> usize {
        match self {
            FieldDescriptor::Cyclotomic(m) => euler_phi(*m) as usize,
            _ => 1,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        let repr = match self {
            FieldDescriptor::Rationals => Repr::Rat(BigRational::from(BigInt::from(n))),
            FieldDescriptor::PrimeField(p) => Repr::Mod(n.rem_euclid(*p as i64) as u64),
            FieldDescriptor::Cyclotomic(_) => {
                let mut v = vec![BigRational::zero(); self.degree()];
                v[0] = BigRational::from(BigInt::from(n));
                Repr::Cyc(v)
            }
        };
        Scalar { field: *self, repr }
    }

    pub fn from_rational(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        match self {
            FieldDescriptor::Rationals => Scalar {
                field: *self,
                repr: Repr::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))),
            },
            FieldDescriptor::PrimeField(_) => {
                let d = self.from_i64(den);
                &self.from_i64(num) * &d.inv().expect("denominator divisible by p")
            }
            FieldDescriptor::Cyclotomic(_) => {
                let mut v = vec![BigRational::zero(); self.degree()];
                v[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
                Scalar { field: *self, repr: Repr::Cyc(v) }
            }
        }
    }

    /// The canonical primitive root ζ_m in a cyclotomic field (class of x).
    pub fn root_of_unity(&self) -> Option<Scalar> {
        match self {
            FieldDescriptor::Cyclotomic(m) => {
                let deg = self.degree();
                let mut v = vec![BigRational::zero(); deg];
                if deg == 1 {
                    // Phi_1 = x - 1 gives zeta = 1; Phi_2 = x + 1 gives zeta = -1.
                    let phi = cyclotomic_polynomial(*m);
                    v[0] = -phi[0].clone();
                } else {
                    v[1] = BigRational::one();
                }
                Some(Scalar { field: *self, repr: Repr::Cyc(v) })
            }
            _ => None,
        }
    }

    /// Parse the canonical text form used by the JSON schema.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match self {
            FieldDescriptor::Rationals => Ok(Scalar {
                field: *self,
                repr: Repr::Rat(parse_rational(text)?),
            }),
            FieldDescriptor::PrimeField(p) => {
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad residue '{text}'")))?;
                Ok(Scalar {
                    field: *self,
                    repr: Repr::Mod(n.rem_euclid(*p as i64) as u64),
                })
            }
            FieldDescriptor::Cyclotomic(_) => {
                let deg = self.degree();
                if let Some(body) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    let mut coeffs = Vec::new();
                    if !body.trim().is_empty() {
                        for part in body.split(',') {
                            coeffs.push(parse_rational(part.trim())?);
                        }
                    }
                    if coeffs.len() > deg {
                        return Err(Error::ParseError(format!(
                            "cyclotomic coefficient list longer than degree {deg}"
                        )));
                    }
                    coeffs.resize(deg, BigRational::zero());
                    Ok(Scalar { field: *self, repr: Repr::Cyc(coeffs) })
                } else {
                    // Bare rationals embed as constants.
                    let c = parse_rational(text)?;
                    let mut v = vec![BigRational::zero(); deg];
                    v[0] = c;
                    Ok(Scalar { field: *self, repr: Repr::Cyc(v) })
                }
            }
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::ParseError(format!("bad rational '{text}'"));
    if let Some((n, d)) = text.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: BigInt = d.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = text.parse().map_err(|_| bad())?;
        Ok(BigRational::from(num))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
    Cyc(Vec<BigRational>),
}

/// An exact element of a declared field, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldDescriptor,
    repr: Repr,
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(n) => *n == 0,
            Repr::Cyc(v) => v.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &self.field.one()
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(
            self.field, other.field,
            "scalar field mismatch: {} vs {}",
            self.field, other.field
        );
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(r) => Repr::Rat(r.recip()),
            Repr::Mod(n) => {
                let p = self.field.characteristic();
                Repr::Mod(mod_pow(*n, p - 2, p))
            }
            Repr::Cyc(v) => {
                let m = match self.field {
                    FieldDescriptor::Cyclotomic(m) => m,
                    _ => unreachable!(),
                };
                Repr::Cyc(cyc_inverse(v, m))
            }
        };
        Ok(Scalar { field: self.field, repr })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: i64) -> Result<Scalar> {
        let mut base = if e < 0 {
            e = -e;
            self.inv()?
        } else {
            self.clone()
        };
        let mut acc = self.field.one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Canonical text form: "n" or "p/q", decimal residue, or "[c0,c1,...]".
    pub fn to_text(&self) -> String {
        match &self.repr {
            Repr::Rat(r) => rational_text(r),
            Repr::Mod(n) => n.to_string(),
            Repr::Cyc(v) => {
                let parts: Vec<String> = v.iter().map(rational_text).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }
}

fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut bb = b as u128 % p as u128;
    b = 0;
    let _ = b;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn cyc_reduce(mut v: Vec<BigRational>, m: u64) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    while v.len() > deg {
        let k = v.len() - 1;
        let c = v[k].clone();
        if !c.is_zero() {
            for (i, pc) in phi.iter().enumerate() {
                let idx = k - deg + i;
                let nv = &v[idx] - &(&c * pc);
                v[idx] = nv;
            }
        }
        v.pop();
    }
    v.resize(deg, BigRational::zero());
    v
}

/// Inverse modulo Φ_m via the extended Euclidean algorithm over Q[x].
fn cyc_inverse(v: &[BigRational], m: u64) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(m);
    // (r0, s0) and (r1, s1) with s·v ≡ r (mod phi).
    let mut r0 = phi.clone();
    let mut s0: Vec<BigRational> = vec![];
    let mut r1: Vec<BigRational> = trim(v.to_vec());
    let mut s1 = vec![BigRational::one()];
    while poly_deg(&r1) > 0 {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, trim(r));
        s0 = std::mem::replace(&mut s1, trim(s));
    }
    assert!(!r1.is_empty() && !r1[0].is_zero(), "non-invertible cyclotomic element");
    let lead = r1[0].clone();
    let inv: Vec<BigRational> = s1.iter().map(|c| c / &lead).collect();
    cyc_reduce(inv, m)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_deg(v: &[BigRational]) -> isize {
    v.len() as isize - 1
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let v = &out[i + j] + &(ai * bj);
            out[i + j] = v;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        let v = &out[i] - c;
        out[i] = v;
    }
    out
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = trim(den.to_vec());
    let mut rem = trim(num.to_vec());
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let lead = den[dd].clone();
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigRational::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for (i, dc) in den.iter().enumerate() {
                let v = &rem[k + i] - &(&c * dc);
                rem[k + i] = v;
            }
        }
        quot[k] = c;
    }
    (quot, trim(rem))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod((a + b) % p)
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Repr::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod((p - a) % p)
            }
            Repr::Cyc(a) => Repr::Cyc(a.iter().map(|c| -c).collect()),
        };
        Scalar { field: self.field, repr }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic() as u128;
                Repr::Mod((*a as u128 * *b as u128 % p) as u64)
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let m = match self.field {
                    FieldDescriptor::Cyclotomic(m) => m,
                    _ => unreachable!(),
                };
                Repr::Cyc(cyc_reduce(poly_mul(a, b), m))
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_scalar(field: FieldDescriptor, rng: &mut StdRng) -> Scalar {
        match field {
            FieldDescriptor::Cyclotomic(_) => {
                let zeta = field.root_of_unity().unwrap();
                let a = field.from_i64(rng.gen_range(-5..=5));
                let b = field.from_i64(rng.gen_range(-5..=5));
                &a + &(&b * &zeta)
            }
            _ => field.from_i64(rng.gen_range(-20..=20)),
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        let one = BigRational::one;
        let z = BigRational::zero;
        assert_eq!(cyclotomic_polynomial(1), vec![-one(), one()]);
        assert_eq!(cyclotomic_polynomial(2), vec![one(), one()]);
        assert_eq!(cyclotomic_polynomial(3), vec![one(), one(), one()]);
        assert_eq!(cyclotomic_polynomial(4), vec![one(), z(), one()]);
        assert_eq!(cyclotomic_polynomial(6), vec![one(), -one(), one()]);
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![one(), z(), -one(), z(), one()]
        );
    }

    #[test]
    fn field_axioms_randomized() {
        let fields = [
            FieldDescriptor::Rationals,
            FieldDescriptor::prime_field(7).unwrap(),
            FieldDescriptor::cyclotomic(5).unwrap(),
        ];
        let mut rng = StdRng::seed_from_u64(12);
        for field in fields {
            for _ in 0..40 {
                let a = random_scalar(field, &mut rng);
                let b = random_scalar(field, &mut rng);
                let c = random_scalar(field, &mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a + &(-&a), field.zero());
                if !a.is_zero() {
                    assert_eq!(&a * &a.inv().unwrap(), field.one());
                }
            }
        }
    }

    #[test]
    fn primitive_root_relations() {
        for m in [1u64, 2, 3, 4, 5, 6, 8, 12] {
            let field = FieldDescriptor::cyclotomic(m).unwrap();
            let zeta = field.root_of_unity().unwrap();
            assert_eq!(zeta.pow(m as i64).unwrap(), field.one(), "zeta_{m}^{m} != 1");
            // Phi_m(zeta) = 0 exactly.
            let phi = cyclotomic_polynomial(m);
            let mut acc = field.zero();
            for (i, c) in phi.iter().enumerate() {
                let term = Scalar {
                    field,
                    repr: Repr::Cyc(cyc_reduce(vec![c.clone()], m)),
                };
                acc = &acc + &(&term * &zeta.pow(i as i64).unwrap());
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta) != 0");
            // zeta has exact multiplicative order m.
            for k in 1..m {
                assert_ne!(zeta.pow(k as i64).unwrap(), field.one());
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let q = FieldDescriptor::Rationals;
        for s in ["0", "5", "-3", "7/2", "-22/7"] {
            assert_eq!(q.parse(s).unwrap().to_text(), s);
        }
        let gf = FieldDescriptor::prime_field(5).unwrap();
        assert_eq!(gf.parse("7").unwrap().to_text(), "2");
        let cyc = FieldDescriptor::cyclotomic(3).unwrap();
        let x = cyc.parse("[1/2,-1]").unwrap();
        assert_eq!(x.to_text(), "[1/2,-1]");
        assert_eq!(cyc.parse(&x.to_text()).unwrap(), x);
    }
}
