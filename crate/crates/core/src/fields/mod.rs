//! Finite field tower `F_p ⊂ F_q ⊂ F_{q^m}`.
//!
//! `F_q` is built as `F_p[y]/(f)` and `F_{q^m}` as `F_q[x]/(g)`, where `f` and
//! `g` are the lexicographically smallest monic irreducible polynomials of the
//! requested degree. Candidates are ordered by reading their coefficients,
//! constant term first, as the digits of a base-`p` (resp. base-`q`) integer,
//! least significant digit first. Construction is therefore deterministic.
//!
//! Elements of `F_{q^m}` are dense coordinate vectors over `F_q` with respect
//! to the polynomial basis `1, α, …, α^{m-1}`; no logarithm tables are used.

mod ext;
mod field;
mod matrix;
pub mod poly;

pub use ext::{ExtElem, ExtField};
pub use field::{Field, Fq};
pub use matrix::{rank, rank_fq, Matrix, MatrixFq};

use std::fmt::Debug;

/// Arithmetic shared by every level of the tower.
pub trait FieldOps {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// A field small enough that its elements can be indexed by `u64`.
pub trait EnumerableField: FieldOps {
    fn order(&self) -> u64;
    /// Element with the given index in `0..order()`; index 0 is zero.
    fn element(&self, index: u64) -> Self::Elem;
}

/// The prime field `F_p`, elements stored as residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> crate::Result<Self> {
        if !is_prime(u64::from(p)) {
            return crate::error::invalid(format!("{p} is not prime"));
        }
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
}

impl FieldOps for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(*b)) % u64::from(self.p)) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) * u64::from(*b)) % u64::from(self.p)) as u32
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = u64::from(self.p);
        let (mut base, mut exp, mut acc) = (u64::from(*a) % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(acc as u32)
    }
}

impl EnumerableField for PrimeField {
    fn order(&self) -> u64 {
        u64::from(self.p)
    }

    fn element(&self, index: u64) -> u32 {
        index as u32
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// Splits `q = p^e` with `p` prime; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut rest, mut e) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Builds `F_{p^e}`.
pub fn field_make(p: u32, e: u32) -> crate::Result<Field> {
    Field::new(p, e)
}

/// Builds `F_q` from its order.
pub fn field_of_order(q: u64) -> crate::Result<Field> {
    match prime_power(q) {
        Some((p, e)) if p <= u64::from(u32::MAX) => Field::new(p as u32, e),
        _ => crate::error::invalid(format!("q = {q} is not a supported prime power")),
    }
}

/// Builds the degree-`m` extension of `base`.
pub fn ext_make(base: &Field, m: u32) -> crate::Result<ExtField> {
    ExtField::new(base.clone(), m)
}
