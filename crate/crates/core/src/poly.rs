//! Univariate polynomials over F_p (coefficients low to high), only as much
//! as root finding needs.

use crate::error::{Error, Result};
use crate::ffield::PrimeField;

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = f.inv(*b.last().expect("nonzero divisor")).expect("nonzero lead");
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = f.mul(*a.last().unwrap(), lead_inv);
        let neg = f.neg(factor);
        for (i, &c) in b.iter().enumerate() {
            a[i + shift] = f.mul_add(a[i + shift], neg, c);
        }
        a = trim(a);
    }
    a
}

fn mulmod(f: PrimeField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    rem(f, &out, m)
}

fn powmod(f: PrimeField, base: &[u32], mut exp: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        exp >>= 1;
    }
    acc
}

fn gcd(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = f.inv(lead).expect("nonzero");
        a.iter_mut().for_each(|c| *c = f.mul(*c, inv));
    }
    a
}

fn sub(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

fn div_exact(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = f.inv(*b.last().unwrap()).unwrap();
    let mut q = vec![0u32; a.len() + 1 - b.len()];
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let factor = f.mul(*a.last().unwrap(), lead_inv);
        q[shift] = factor;
        let neg = f.neg(factor);
        for (i, &c) in b.iter().enumerate() {
            a[i + shift] = f.mul_add(a[i + shift], neg, c);
        }
        a = trim(a);
    }
    q
}

/// Distinct roots in F_p of a nonzero polynomial, sorted ascending.
pub fn roots(f: PrimeField, poly: &[u32]) -> Result<Vec<u32>> {
    let poly = trim(poly.to_vec());
    if poly.is_empty() {
        return Err(Error::InvalidParameter("zero polynomial has every root".into()));
    }
    let p = f.modulus();
    if p <= 1 << 12 {
        let found = (0..p).filter(|&x| eval(f, &poly, x) == 0).collect();
        return Ok(found);
    }
    // g = gcd(poly, x^p - x) is the product of the distinct linear factors.
    let xp = powmod(f, &[0, 1], p as u64, &poly);
    let g = gcd(f, &poly, &sub(f, &xp, &[0, 1]));
    let mut out = Vec::new();
    split_linear(f, g, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn split_linear(f: PrimeField, g: Vec<u32>, out: &mut Vec<u32>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(f.mul(g[0], f.inv(g[1]).unwrap()))),
        _ => {
            let half = (f.modulus() as u64 - 1) / 2;
            for a in 0..f.modulus() {
                let h = powmod(f, &[a, 1], half, &g);
                let d = gcd(f, &g, &sub(f, &h, &[1]));
                if d.len() > 1 && d.len() < g.len() {
                    let other = div_exact(f, &g, &d);
                    split_linear(f, d, out);
                    split_linear(f, other, out);
                    return;
                }
            }
            unreachable!("equal-degree splitting always succeeds for odd p");
        }
    }
}

pub fn eval(f: PrimeField, poly: &[u32], x: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_small_and_large_prime() {
        for p in [7u32, 1_000_003] {
            let f = PrimeField::new(p).unwrap();
            // (x-1)(x-3)(x-5)
            let poly: Vec<u32> = [-15i64, 23, -9, 1].iter().map(|&c| f.from_i64(c)).collect();
            assert_eq!(roots(f, &poly).unwrap(), vec![1, 3, 5]);
            // both primes are 3 mod 4
            assert!(roots(f, &[1, 0, 1]).unwrap().is_empty());
        }
    }

    #[test]
    fn repeated_roots_reported_once() {
        let f = PrimeField::new(1_000_003).unwrap();
        // (x-2)^2 (x-4)
        let poly = vec![f.neg(16), 20, f.neg(8), 1];
        assert_eq!(roots(f, &poly).unwrap(), vec![2, 4]);
    }
}
