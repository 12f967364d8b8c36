//! Classical ElGamal over the integers modulo a prime.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ClassicError;

// Miller-Rabin witnesses; deterministic below 3.3e24.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// `base^exponent mod modulus`.
pub fn modpow(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> Result<BigUint, ClassicError> {
    if modulus < &BigUint::from(2u32) {
        return Err(ClassicError::SmallModulus);
    }
    Ok(base.modpow(exponent, modulus))
}

/// Miller-Rabin with fixed witnesses.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for w in WITNESSES {
        let w = BigUint::from(w);
        if n == &w {
            return true;
        }
        if n.is_multiple_of(&w) {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n - 1 is non-zero");
    let d = &n_minus_1 >> s;
    'witness: for w in WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Whether `g` generates the multiplicative group mod the prime `p`.
///
/// Factors `p - 1` by trial division, so only practical for small `p`.
/// Key generation does not require a primitive root.
pub fn is_primitive_root(g: &BigUint, p: &BigUint) -> bool {
    if g.is_zero() || g >= p {
        return false;
    }
    let n = p - 1u32;
    prime_factors(&n)
        .iter()
        .all(|q| !g.modpow(&(&n / q), p).is_one())
}

fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut f = BigUint::from(2u32);
    while &f * &f <= n {
        if n.is_multiple_of(&f) {
            while n.is_multiple_of(&f) {
                n /= &f;
            }
            out.push(f.clone());
        }
        f += 1u32;
    }
    if n > BigUint::one() {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicParams {
    p: BigUint,
    g: BigUint,
}

impl ClassicParams {
    pub fn new(p: BigUint, g: BigUint) -> Result<Self, ClassicError> {
        if p < BigUint::from(2u32) {
            return Err(ClassicError::SmallModulus);
        }
        if !is_probable_prime(&p) {
            return Err(ClassicError::NotPrime);
        }
        if g <= BigUint::one() || g >= p {
            return Err(ClassicError::BaseOutOfRange);
        }
        Ok(Self { p, g })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn g(&self) -> &BigUint {
        &self.g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicKeyPair {
    /// Private exponent.
    pub c: BigUint,
    /// Public value `g^c mod p`.
    pub d: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicCiphertext {
    pub r: BigUint,
    pub e: BigUint,
}

/// `d = g^c mod p` for `1 < c < p - 1`.
pub fn classic_keygen(params: &ClassicParams, c: BigUint) -> Result<ClassicKeyPair, ClassicError> {
    if c <= BigUint::one() || c >= params.p() - 1u32 {
        return Err(ClassicError::PrivateOutOfRange);
    }
    let d = params.g.modpow(&c, &params.p);
    Ok(ClassicKeyPair { c, d })
}

/// `(g^k mod p, m·d^k mod p)` for `m < p` and `1 <= k <= p - 2`.
pub fn classic_encrypt(
    params: &ClassicParams,
    d: &BigUint,
    m: &BigUint,
    k: &BigUint,
) -> Result<ClassicCiphertext, ClassicError> {
    let p = &params.p;
    if m >= p {
        return Err(ClassicError::MessageOutOfRange);
    }
    if d >= p {
        return Err(ClassicError::CiphertextOutOfRange);
    }
    if k.is_zero() || k > &(p - 2u32) {
        return Err(ClassicError::EphemeralOutOfRange);
    }
    let r = params.g.modpow(k, p);
    let e = m * d.modpow(k, p) % p;
    Ok(ClassicCiphertext { r, e })
}

/// `e · r^(p-1-c) mod p`.
pub fn classic_decrypt(
    params: &ClassicParams,
    c: &BigUint,
    ct: &ClassicCiphertext,
) -> Result<BigUint, ClassicError> {
    let p = &params.p;
    if c <= &BigUint::one() || c >= &(p - 1u32) {
        return Err(ClassicError::PrivateOutOfRange);
    }
    if &ct.r >= p || &ct.e >= p {
        return Err(ClassicError::CiphertextOutOfRange);
    }
    let exponent = p - 1u32 - c;
    Ok(&ct.e * ct.r.modpow(&exponent, p) % p)
}
