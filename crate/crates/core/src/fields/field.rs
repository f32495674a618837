use super::poly;
use super::{EnumerableField, FieldOps, PrimeField};
use crate::error::invalid;

/// Largest order for which addition and multiplication tables are cached.
const TABLE_LIMIT: u32 = 256;

/// Element of `F_q = F_p[y]/(f)`.
///
/// The coefficient vector `(c_0, …, c_{e-1})` over `F_p` is packed into the
/// integer `Σ c_i p^i`, so the packed values are exactly `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(pub u32);

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// The field `F_q` with `q = p^e`.
#[derive(Debug, Clone)]
pub struct Field {
    base: PrimeField,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u32, e: u32) -> crate::Result<Self> {
        let base = PrimeField::new(p)?;
        if e == 0 {
            return invalid("extension degree must be at least 1");
        }
        let q = match u32::try_from(u64::from(p).checked_pow(e).unwrap_or(u64::MAX)) {
            Ok(q) if q < u32::MAX => q,
            _ => return invalid(format!("{p}^{e} does not fit the element encoding")),
        };
        let modulus = poly::smallest_irreducible(&base, e)?;
        let mut field = Self { base, e, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn prime(p: u32) -> crate::Result<Self> {
        Self::new(p, 1)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut t = Tables {
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
        };
        for a in 0..self.q {
            t.neg[a as usize] = self.slow_neg(a);
            for b in 0..self.q {
                t.add[a as usize * q + b as usize] = self.slow_add(a, b);
                let prod = self.slow_mul(a, b);
                t.mul[a as usize * q + b as usize] = prod;
                if prod == 1 {
                    t.inv[a as usize] = b;
                }
            }
        }
        t
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.base
    }

    /// Defining polynomial over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficients over `F_p` (length `e`), constant term first.
    pub fn coefficients(&self, a: Fq) -> Vec<u32> {
        let p = self.characteristic();
        let mut v = a.0;
        (0..self.e)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Fq {
        let p = self.characteristic();
        Fq(coeffs.iter().rev().fold(0, |acc, &c| acc * p + c % p))
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.coefficients(Fq(a)), self.coefficients(Fq(b)));
        let sum: Vec<u32> = x.iter().zip(&y).map(|(s, t)| self.base.add(s, t)).collect();
        self.from_coefficients(&sum).0
    }

    fn slow_neg(&self, a: u32) -> u32 {
        let x: Vec<u32> = self.coefficients(Fq(a)).iter().map(|c| self.base.neg(c)).collect();
        self.from_coefficients(&x).0
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let x = poly::trim(&self.base, self.coefficients(Fq(a)));
        let y = poly::trim(&self.base, self.coefficients(Fq(b)));
        let r = poly::mul_mod(&self.base, &x, &y, &self.modulus);
        self.from_coefficients(&r).0
    }

    fn slow_inv(&self, a: u32) -> Option<u32> {
        let x = poly::trim(&self.base, self.coefficients(Fq(a)));
        poly::inv_mod(&self.base, &x, &self.modulus).map(|r| self.from_coefficients(&r).0)
    }
}

impl FieldOps for Field {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        Fq(0)
    }

    fn one(&self) -> Fq {
        Fq(1)
    }

    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.add[(a.0 * self.q + b.0) as usize]),
            None => Fq(self.slow_add(a.0, b.0)),
        }
    }

    fn neg(&self, a: &Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.neg[a.0 as usize]),
            None => Fq(self.slow_neg(a.0)),
        }
    }

    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        match &self.tables {
            Some(t) => Fq(t.mul[(a.0 * self.q + b.0) as usize]),
            None => Fq(self.slow_mul(a.0, b.0)),
        }
    }

    fn inv(&self, a: &Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(Fq(t.inv[a.0 as usize])),
            None => self.slow_inv(a.0).map(Fq),
        }
    }
}

impl EnumerableField for Field {
    fn order(&self) -> u64 {
        u64::from(self.q)
    }

    fn element(&self, index: u64) -> Fq {
        Fq(index as u32)
    }
}
