//! Exact coefficient arithmetic: arbitrary-precision rationals, odd prime
//! fields, and one layer of quadratic extension `k[x]`/(x^2 - t0).
//!
//! The quadratic layer is what fiber descent at a non-square t0 needs; it is
//! a rank-2 module over its base, not a general number-field tower. When t0
//! is a square the extension splits and inversion reports the zero divisor
//! it found instead of failing silently.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    QuadraticExt { base: Box<FieldSpec>, t0: Scalar },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::QuadraticExt { base, t0 } => {
                write!(f, "{base}[i]/(i^2 - ({}))", raw_scalar_string(t0))
            }
        }
    }
}

/// Context-free rendering; only used where no `Field` is in scope.
fn raw_scalar_string(s: &Scalar) -> String {
    match s {
        Scalar::Rat(q) => {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        }
        Scalar::Fp(a) => a.to_string(),
        Scalar::Quad(a, b) => format!("{} + {}*i", raw_scalar_string(a), raw_scalar_string(b)),
    }
}

/// An element of a coefficient field. Rationals are kept in lowest terms with
/// positive denominator; prime-field elements are reduced to [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
    /// a + b*i with i^2 = t0 of the ambient quadratic extension.
    Quad(Box<Scalar>, Box<Scalar>),
}

/// Arithmetic context for a [`FieldSpec`]. All scalar operations go through
/// a `Field` so that the modulus and extension data are in scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Validate a field description and return its arithmetic context.
pub fn field_make(spec: FieldSpec) -> Result<Field> {
    match &spec {
        FieldSpec::Rationals => {}
        FieldSpec::PrimeField(p) => {
            if *p == 2 {
                return Err(Error::CharacteristicTwo);
            }
            if !is_prime_u64(*p) {
                return Err(Error::NotPrime(*p));
            }
        }
        FieldSpec::QuadraticExt { base, t0 } => {
            if matches!(**base, FieldSpec::QuadraticExt { .. }) {
                return Err(Error::NestedExtension);
            }
            let base_field = field_make((**base).clone())?;
            base_field.check_scalar(t0)?;
            if base_field.is_zero(t0) {
                return Err(Error::ZeroExtensionModulus);
            }
        }
    }
    Ok(Field { spec })
}

impl Field {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    fn base(&self) -> Field {
        match &self.spec {
            FieldSpec::QuadraticExt { base, .. } => Field {
                spec: (**base).clone(),
            },
            _ => self.clone(),
        }
    }

    fn modulus_t0(&self) -> Option<&Scalar> {
        match &self.spec {
            FieldSpec::QuadraticExt { t0, .. } => Some(t0),
            _ => None,
        }
    }

    /// Whether scalars form a field (a split quadratic extension is only a ring).
    pub fn is_field(&self) -> bool {
        match &self.spec {
            FieldSpec::QuadraticExt { t0, .. } => !self.base().is_square(t0),
            _ => true,
        }
    }

    fn is_square(&self, s: &Scalar) -> bool {
        match (&self.spec, s) {
            (FieldSpec::Rationals, Scalar::Rat(q)) => {
                if q.is_negative() {
                    return false;
                }
                is_perfect_square(q.numer()) && is_perfect_square(q.denom())
            }
            (FieldSpec::PrimeField(p), Scalar::Fp(a)) => {
                *a == 0 || pow_mod(*a, (p - 1) / 2, *p) == 1
            }
            _ => false,
        }
    }

    pub fn check_scalar(&self, s: &Scalar) -> Result<()> {
        let ok = match (&self.spec, s) {
            (FieldSpec::Rationals, Scalar::Rat(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Fp(a)) => a < p,
            (FieldSpec::QuadraticExt { .. }, Scalar::Quad(a, b)) => {
                let base = self.base();
                base.check_scalar(a).is_ok() && base.check_scalar(b).is_ok()
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ScalarFieldMismatch(self.spec.to_string()))
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.spec {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Fp(0),
            FieldSpec::QuadraticExt { .. } => {
                let b = self.base();
                Scalar::Quad(Box::new(b.zero()), Box::new(b.zero()))
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &self.spec {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
            FieldSpec::QuadraticExt { .. } => {
                let b = self.base();
                Scalar::Quad(Box::new(b.from_i64(n)), Box::new(b.zero()))
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        self.div(&self.from_i64(num), &d)
    }

    /// The adjoined square root `i` of a quadratic extension.
    pub fn gen_i(&self) -> Result<Scalar> {
        match &self.spec {
            FieldSpec::QuadraticExt { .. } => {
                let b = self.base();
                Ok(Scalar::Quad(Box::new(b.zero()), Box::new(b.one())))
            }
            _ => Err(Error::Invalid("field has no adjoined square root".into())),
        }
    }

    /// Embed a base-field scalar into this field (identity unless quadratic).
    pub fn embed(&self, s: &Scalar) -> Scalar {
        match &self.spec {
            FieldSpec::QuadraticExt { .. } => {
                if matches!(s, Scalar::Quad(..)) {
                    s.clone()
                } else {
                    let b = self.base();
                    Scalar::Quad(Box::new(s.clone()), Box::new(b.zero()))
                }
            }
            _ => s.clone(),
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Fp(a) => *a == 0,
            Scalar::Quad(a, b) => {
                let base = self.base();
                base.is_zero(a) && base.is_zero(b)
            }
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        *s == self.one()
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (x, y) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                let p = self.prime();
                Scalar::Fp((a + b) % p)
            }
            (Scalar::Quad(a1, b1), Scalar::Quad(a2, b2)) => {
                let base = self.base();
                Scalar::Quad(Box::new(base.add(a1, a2)), Box::new(base.add(b1, b2)))
            }
            _ => panic!("scalar kinds do not match field {}", self.spec),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp(a) => {
                let p = self.prime();
                Scalar::Fp(if *a == 0 { 0 } else { p - a })
            }
            Scalar::Quad(a, b) => {
                let base = self.base();
                Scalar::Quad(Box::new(base.neg(a)), Box::new(base.neg(b)))
            }
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (x, y) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(mul_mod(*a, *b, self.prime())),
            (Scalar::Quad(a1, b1), Scalar::Quad(a2, b2)) => {
                // (a1 + b1 i)(a2 + b2 i) = a1 a2 + t0 b1 b2 + (a1 b2 + b1 a2) i
                let base = self.base();
                let t0 = self.modulus_t0().expect("quadratic field");
                let re = base.add(&base.mul(a1, a2), &base.mul(t0, &base.mul(b1, b2)));
                let im = base.add(&base.mul(a1, b2), &base.mul(b1, a2));
                Scalar::Quad(Box::new(re), Box::new(im))
            }
            _ => panic!("scalar kinds do not match field {}", self.spec),
        }
    }

    fn prime(&self) -> u64 {
        match self.spec {
            FieldSpec::PrimeField(p) => p,
            _ => panic!("not a prime field"),
        }
    }

    /// Multiplicative inverse. In a split quadratic extension a nonzero
    /// element of norm zero is a zero divisor; the complementary factor is
    /// reported in the error.
    pub fn invert(&self, x: &Scalar) -> Result<Scalar> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        match x {
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip())),
            Scalar::Fp(a) => {
                let p = self.prime();
                Ok(Scalar::Fp(pow_mod(*a, p - 2, p)))
            }
            Scalar::Quad(a, b) => {
                // (a + bi)^-1 = (a - bi) / (a^2 - t0 b^2)
                let base = self.base();
                let t0 = self.modulus_t0().expect("quadratic field");
                let norm = base.sub(&base.mul(a, a), &base.mul(t0, &base.mul(b, b)));
                let conj = Scalar::Quad(Box::new((**a).clone()), Box::new(base.neg(b)));
                if base.is_zero(&norm) {
                    return Err(Error::ZeroDivisor {
                        factor: self.display(&conj).to_string(),
                    });
                }
                let ninv = self.embed(&base.invert(&norm)?);
                Ok(self.mul(&conj, &ninv))
            }
        }
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        Ok(self.mul(x, &self.invert(y)?))
    }

    pub fn pow(&self, x: &Scalar, n: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn display<'a>(&'a self, s: &'a Scalar) -> ScalarDisplay<'a> {
        ScalarDisplay {
            field: self,
            scalar: s,
        }
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Scalar pretty-printer; quadratic scalars render as `a + b*i`.
pub struct ScalarDisplay<'a> {
    field: &'a Field,
    scalar: &'a Scalar,
}

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scalar {
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(a) => write!(f, "{a}"),
            Scalar::Quad(a, b) => {
                let base = self.field.base();
                if base.is_zero(b) {
                    return write!(f, "{}", base.display(a));
                }
                let bs = if base.is_one(b) {
                    "i".to_string()
                } else {
                    format!("{}*i", base.display(b))
                };
                if base.is_zero(a) {
                    write!(f, "{bs}")
                } else {
                    write!(f, "{} + {}", base.display(a), bs)
                }
            }
        }
    }
}

/// True when the scalar prints as a single token (no internal + or -).
pub fn scalar_is_atomic(field: &Field, s: &Scalar) -> bool {
    match s {
        Scalar::Rat(q) => !q.is_negative(),
        Scalar::Fp(_) => true,
        Scalar::Quad(a, b) => {
            let base = field.base();
            (base.is_zero(a) && scalar_is_atomic(&base, b) && base.is_one(b))
                || (base.is_zero(b) && scalar_is_atomic(&base, a))
        }
    }
}
