//! Prime field arithmetic and the quantum characteristic of a parameter.
//!
//! Bulk linear algebra works on raw `u32` residues through [`PrimeField`];
//! [`FieldElement`] is the checked, self-describing value type used at API
//! boundaries.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive). Products of two residues fit in a `u64`.
pub const MAX_MODULUS: u32 = 1 << 31;

/// The prime field F_p. Cheap to copy; all residue arithmetic goes through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidParameter(format!(
                "modulus {p} must be below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    /// Reduce an arbitrary signed integer into [0, p).
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.from_i64(v),
            p: self.p,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::InvalidParameter("zero has no multiplicative order".into()));
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }
}

/// A residue together with its modulus. Mixed-modulus arithmetic is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    pub fn new(field: PrimeField, v: i64) -> Self {
        field.element(v)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn same(&self, other: &Self) -> Result<PrimeField> {
        if self.p != other.p {
            return Err(Error::ContextMismatch(self.p, other.p));
        }
        Ok(self.field())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let f = self.same(other)?;
        Ok(Self { value: f.add(self.value, other.value), p: self.p })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let f = self.same(other)?;
        Ok(Self { value: f.sub(self.value, other.value), p: self.p })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let f = self.same(other)?;
        Ok(Self { value: f.mul(self.value, other.value), p: self.p })
    }

    pub fn neg(&self) -> Self {
        Self { value: self.field().neg(self.value), p: self.p }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { value: self.field().inv(self.value)?, p: self.p })
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self { value: self.field().pow(self.value, exp), p: self.p }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

/// The coefficient field together with the quantum parameter `q` and its
/// quantum characteristic `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldContext {
    field: PrimeField,
    q: u32,
    e: u32,
}

impl FieldContext {
    /// Rejects `q = 0` and `q = 1`.
    pub fn new(p: u32, q: i64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let q = field.from_i64(q);
        if q == 1 {
            return Err(Error::InvalidParameter("q must differ from 1".into()));
        }
        let e = quantum_characteristic(field, q)?;
        Ok(Self { field, q, e })
    }

    /// The smallest `q` in F_p whose quantum characteristic is `e`.
    pub fn with_characteristic(p: u32, e: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e = {e} must be at least 2")));
        }
        if (p - 1) % e != 0 {
            return Err(Error::InvalidParameter(format!(
                "no element of order {e} in F_{p}: {e} does not divide {}",
                p - 1
            )));
        }
        for q in 2..p {
            if field.order(q)? == e {
                return Ok(Self { field, q, e });
            }
        }
        Err(Error::InvalidParameter(format!("no q of order {e} in F_{p}")))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn q_element(&self) -> FieldElement {
        self.field.element(self.q as i64)
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> u32 {
        let k = k.rem_euclid(self.e as i64) as u64;
        self.field.pow(self.q, k)
    }

    /// Context for the reversed parameter `q^{-1}` over the same field.
    pub fn inverted(&self) -> Self {
        let q = self.field.inv(self.q).expect("q is nonzero");
        Self { field: self.field, q, e: self.e }
    }
}

/// Minimal `e ≥ 1` with `1 + q + ... + q^{e-1} = 0` in F_p.
///
/// For `q ≠ 1` this is the multiplicative order of `q`; for `q = 1` it is `p`.
pub fn quantum_characteristic(field: PrimeField, q: u32) -> Result<u32> {
    let q = q % field.modulus();
    if q == 0 {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    let mut sum = 0u32;
    let mut power = 1u32;
    let mut e = 0u32;
    loop {
        sum = field.add(sum, power);
        power = field.mul(power, q);
        e += 1;
        if sum == 0 {
            return Ok(e);
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        let f7 = f(7);
        assert_eq!(f7.element(3).add(&f7.element(5)).unwrap().value(), 1);
        assert_eq!(f7.element(2).mul(&f7.element(4)).unwrap().value(), 1);
        assert_eq!(f(5).element(0).neg().value(), 0);
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = f(7).element(3);
        let b = f(5).element(3);
        assert_eq!(a.add(&b), Err(Error::ContextMismatch(7, 5)));
        assert!(a.mul(&b).is_err());
        assert!(a.sub(&b).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(f(7).element(2).inverse().unwrap().value(), 4);
        assert_eq!(f(5).element(1).inverse().unwrap().value(), 1);
        assert_eq!(f(11).element(3).inverse().unwrap().value(), 4);
        assert_eq!(f(11).element(0).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quantum_characteristic_examples() {
        assert_eq!(quantum_characteristic(f(5), 2).unwrap(), 4);
        assert_eq!(quantum_characteristic(f(7), f(7).from_i64(-1)).unwrap(), 2);
        assert_eq!(quantum_characteristic(f(7), 2).unwrap(), 3);
        assert_eq!(quantum_characteristic(f(7), 1).unwrap(), 7);
        assert!(quantum_characteristic(f(7), 0).is_err());
    }

    #[test]
    fn context_rejects_bad_q() {
        assert!(FieldContext::new(7, 1).is_err());
        assert!(FieldContext::new(7, 0).is_err());
        assert!(FieldContext::new(8, 3).is_err());
        let ctx = FieldContext::new(7, 2).unwrap();
        assert_eq!(ctx.e(), 3);
        assert_eq!(ctx.field().pow(ctx.q(), ctx.e() as u64), 1);
        assert_eq!(ctx.inverted().q(), 4);
    }

    #[test]
    fn auto_q_is_smallest_of_order() {
        let ctx = FieldContext::with_characteristic(7, 3).unwrap();
        assert_eq!(ctx.q(), 2);
        let ctx = FieldContext::with_characteristic(5, 2).unwrap();
        assert_eq!(ctx.q(), 4);
        assert!(FieldContext::with_characteristic(7, 4).is_err());
    }

    #[test]
    fn inverse_round_trip_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for p in [2u32, 3, 5, 7, 101, 65537, 2147483629] {
            let fp = f(p);
            for _ in 0..1000 {
                let x = rng.gen_range(1..p);
                assert_eq!(fp.mul(x, fp.inv(x).unwrap()), 1);
            }
        }
    }

    #[test]
    fn characteristic_divides_group_order() {
        for p in [5u32, 7, 11, 13, 31, 101] {
            let fp = f(p);
            for q in 2..p {
                let e = quantum_characteristic(fp, q).unwrap();
                assert_eq!((p - 1) % e, 0, "p={p} q={q} e={e}");
                let mut s = 0;
                for k in 0..e {
                    s = fp.add(s, fp.pow(q, k as u64));
                }
                assert_eq!(s, 0);
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..101, b in 0u32..101, c in 0u32..101) {
            let fp = f(101);
            prop_assert_eq!(fp.mul(fp.mul(a, b), c), fp.mul(a, fp.mul(b, c)));
            prop_assert_eq!(fp.add(fp.add(a, b), c), fp.add(a, fp.add(b, c)));
            prop_assert_eq!(fp.mul(a, fp.add(b, c)), fp.add(fp.mul(a, b), fp.mul(a, c)));
            prop_assert_eq!(fp.add(a, fp.neg(a)), 0);
            prop_assert_eq!(fp.sub(a, b), fp.add(a, fp.neg(b)));
        }
    }
}
