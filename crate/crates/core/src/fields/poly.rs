//! Dense univariate polynomials over a [`FieldOps`] field.
//!
//! A polynomial is a `Vec` of coefficients, constant term first, with no
//! trailing zeros; the zero polynomial is the empty vector.

use super::{EnumerableField, FieldOps};

pub type Poly<E> = Vec<E>;

pub fn trim<F: FieldOps>(f: &F, mut a: Poly<F::Elem>) -> Poly<F::Elem> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let len = a.len().max(b.len());
    let zero = f.zero();
    let out = (0..len)
        .map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, out)
}

pub fn sub<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let neg: Vec<_> = b.iter().map(|c| f.neg(c)).collect();
    add(f, a, &neg)
}

pub fn mul<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let prod = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &prod);
        }
    }
    trim(f, out)
}

/// Quotient and remainder of `a` by the nonzero polynomial `b`.
pub fn div_rem<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("trimmed polynomial has nonzero lead");
    let mut rem = trim(f, a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = f.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            let t = f.mul(&coef, c);
            rem[i + shift] = f.sub(&rem[i + shift], &t);
        }
        quot[shift] = coef;
        rem = trim(f, rem);
    }
    (trim(f, quot), rem)
}

pub fn rem<F: FieldOps>(f: &F, a: &[F::Elem], modulus: &[F::Elem]) -> Poly<F::Elem> {
    div_rem(f, a, modulus).1
}

pub fn mul_mod<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    modulus: &[F::Elem],
) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), modulus)
}

pub fn pow_mod<F: FieldOps>(
    f: &F,
    base: &[F::Elem],
    mut exp: u64,
    modulus: &[F::Elem],
) -> Poly<F::Elem> {
    let mut acc = rem(f, &[f.one()], modulus);
    let mut base = rem(f, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(f, &acc, &base, modulus);
        }
        base = mul_mod(f, &base, &base, modulus);
        exp >>= 1;
    }
    acc
}

/// Monic greatest common divisor.
pub fn gcd<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (mut a, mut b) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    make_monic(f, a)
}

fn make_monic<F: FieldOps>(f: &F, a: Poly<F::Elem>) -> Poly<F::Elem> {
    match a.last() {
        None => a,
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero lead");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
pub fn inv_mod<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    modulus: &[F::Elem],
) -> Option<Poly<F::Elem>> {
    let (mut r0, mut r1) = (modulus.to_vec(), rem(f, a, modulus));
    let (mut s0, mut s1): (Poly<F::Elem>, Poly<F::Elem>) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant iff gcd(a, modulus) = 1
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = f.inv(&r0[0])?;
    Some(rem(f, &s0.iter().map(|x| f.mul(x, &c)).collect::<Vec<_>>(), modulus))
}

/// Ben-Or irreducibility test for a monic `g` over a field of order `order`.
pub fn is_irreducible<F: FieldOps>(f: &F, g: &[F::Elem], order: u64) -> bool {
    let d = match degree(g) {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    let x = vec![f.zero(), f.one()];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = pow_mod(f, &h, order, g);
        let g_i = gcd(f, g, &sub(f, &h, &x));
        if degree(&g_i) != Some(0) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`.
///
/// Candidates `x^d + c_{d-1} x^{d-1} + … + c_0` are visited in increasing
/// order of the base-`order` integer whose digits are `c_0, c_1, …`
/// (least significant first).
pub fn smallest_irreducible<F: EnumerableField>(
    f: &F,
    d: u32,
) -> crate::Result<Poly<F::Elem>> {
    let order = f.order();
    let d = d as usize;
    let mut digits = vec![0u64; d];
    // the density of irreducibles is about 1/d, so this bound is generous
    let budget = 1_000_000u64.max(64 * d as u64);
    for _ in 0..budget {
        let mut cand: Vec<F::Elem> = digits.iter().map(|&i| f.element(i)).collect();
        cand.push(f.one());
        if is_irreducible(f, &cand, order) {
            return Ok(cand);
        }
        // increment base-`order` counter, least significant digit first
        let mut i = 0;
        loop {
            if i == d {
                return Err(crate::Error::NoIrreducible { degree: d as u32, order });
            }
            digits[i] += 1;
            if digits[i] < order {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
    Err(crate::Error::NoIrreducible { degree: d as u32, order })
}
