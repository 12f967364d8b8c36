//! ElGamal-style public-key encryption over quasigroup isotopies.
//!
//! The private key is an exponent triple `(m, n, k)`; the public key holds a
//! quasigroup `Q`, an isotopy `T` and its power `T^(m,n,k)`. A sender picks
//! ephemeral exponents `(r, s, t)`, publishes `T^(r,s,t)`, and encrypts with
//! the Markovski chain over the isotope `T^(mr,ns,kt)(Q)`. The receiver
//! rebuilds the same isotope from `T^(r,s,t)` and the private exponents,
//! because componentwise powers of a permutation commute.
//!
//! Exponents of a permutation only matter modulo its order, and the order
//! of a permutation is small, so every private exponent can be read back
//! from the public key by [`Permutation::discrete_log`](crate::perm::Permutation::discrete_log).
//! The scheme is a reference implementation, not a secure cipher.

use rand::Rng;

use crate::error::{CipherError, QuasigroupError, SchemeError};
use crate::markovski::{self, Leader, SymbolString};
use crate::quasigroup::{Isotopy, Quasigroup};

/// Upper bound (inclusive) for sampled exponents.
pub const MAX_SAMPLED_EXPONENT: u64 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    quasigroup: Quasigroup,
    base_isotopy: Isotopy,
    powered_isotopy: Isotopy,
    leader: Leader,
}

impl PublicKey {
    /// Assembles a public key from its parts, checking degrees and the
    /// leader range. Whether `powered_isotopy` really is a power of
    /// `base_isotopy` cannot be checked without the private key.
    pub fn new(
        quasigroup: Quasigroup,
        base_isotopy: Isotopy,
        powered_isotopy: Isotopy,
        leader: Leader,
    ) -> Result<Self, SchemeError> {
        let order = quasigroup.order();
        for t in [&base_isotopy, &powered_isotopy] {
            if t.degree() != order {
                return Err(QuasigroupError::DegreeMismatch {
                    order,
                    found: t.degree(),
                }
                .into());
            }
        }
        if leader.0 >= order {
            return Err(CipherError::LeaderOutOfRange {
                leader: leader.0,
                order,
            }
            .into());
        }
        Ok(Self {
            quasigroup,
            base_isotopy,
            powered_isotopy,
            leader,
        })
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.quasigroup
    }

    pub fn base_isotopy(&self) -> &Isotopy {
        &self.base_isotopy
    }

    pub fn powered_isotopy(&self) -> &Isotopy {
        &self.powered_isotopy
    }

    pub fn leader(&self) -> Leader {
        self.leader
    }

    pub fn order(&self) -> usize {
        self.quasigroup.order()
    }
}

/// An exponent triple with every component at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    a: u64,
    b: u64,
    c: u64,
}

impl Exponents {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, SchemeError> {
        for (name, v) in [("first", a), ("second", b), ("third", c)] {
            if v == 0 {
                return Err(SchemeError::ZeroExponent(name));
            }
        }
        Ok(Self { a, b, c })
    }

    /// Uniform in `[1, MAX_SAMPLED_EXPONENT]` per component.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut draw = || rng.gen_range(1..=MAX_SAMPLED_EXPONENT);
        Self {
            a: draw(),
            b: draw(),
            c: draw(),
        }
    }

    pub fn get(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    /// `t^(a,b,c)`.
    pub fn raise(&self, t: &Isotopy) -> Isotopy {
        t.pow(self.a, self.b, self.c)
    }

    /// True when some component of `t` that is not the identity becomes the
    /// identity after raising. Such a power leaks one component of the
    /// shared isotopy.
    pub fn is_degenerate_for(&self, t: &Isotopy) -> bool {
        let raised = self.raise(t);
        let degenerate = t
            .components()
            .iter()
            .zip(raised.components())
            .any(|(base, pow)| !base.is_identity() && pow.is_identity());
        degenerate
    }

    fn sample_non_degenerate<R: Rng + ?Sized>(t: &Isotopy, rng: &mut R) -> Self {
        loop {
            let e = Self::random(rng);
            if !e.is_degenerate_for(t) {
                return e;
            }
        }
    }
}

/// Private exponents `(m, n, k)`.
pub type PrivateKey = Exponents;
/// Ephemeral exponents `(r, s, t)`, fresh for every message.
pub type EphemeralExponents = Exponents;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    ephemeral_isotopy: Isotopy,
    body: SymbolString,
}

impl Ciphertext {
    pub fn new(ephemeral_isotopy: Isotopy, body: SymbolString) -> Result<Self, SchemeError> {
        if ephemeral_isotopy.degree() != body.order() {
            return Err(CipherError::OrderMismatch {
                order: ephemeral_isotopy.degree(),
                found: body.order(),
            }
            .into());
        }
        Ok(Self {
            ephemeral_isotopy,
            body,
        })
    }

    /// `T^(r,s,t)`.
    pub fn ephemeral_isotopy(&self) -> &Isotopy {
        &self.ephemeral_isotopy
    }

    pub fn body(&self) -> &SymbolString {
        &self.body
    }
}

/// Builds a key pair from explicit material.
pub fn keygen(
    quasigroup: Quasigroup,
    base_isotopy: Isotopy,
    private: PrivateKey,
    leader: Leader,
) -> Result<(PublicKey, PrivateKey), SchemeError> {
    let powered = private.raise(&base_isotopy);
    let public = PublicKey::new(quasigroup, base_isotopy, powered, leader)?;
    Ok((public, private))
}

/// Samples a quasigroup, base isotopy, non-degenerate private exponents and
/// leader of the given order.
pub fn keygen_random<R: Rng + ?Sized>(
    order: usize,
    rng: &mut R,
) -> Result<(PublicKey, PrivateKey), SchemeError> {
    let quasigroup = Quasigroup::random(order, rng)?;
    let base = Isotopy::random(order, rng)?;
    let private = Exponents::sample_non_degenerate(&base, rng);
    let leader = Leader(rng.gen_range(0..order));
    keygen(quasigroup, base, private, leader)
}

/// `apply_isotopy(q, known_power^(a,b,c))`.
///
/// The sender passes `T^(m,n,k)` with its ephemeral exponents, the receiver
/// passes `T^(r,s,t)` with its private exponents; both get the same table.
pub fn derive_shared_quasigroup(
    quasigroup: &Quasigroup,
    known_power: &Isotopy,
    exponents: &Exponents,
) -> Result<Quasigroup, SchemeError> {
    Ok(quasigroup.apply_isotopy(&exponents.raise(known_power))?)
}

/// Encrypts with explicit ephemeral exponents. Degenerate exponents are
/// accepted but logged.
pub fn encrypt(
    public: &PublicKey,
    plain: &SymbolString,
    ephemeral: &EphemeralExponents,
) -> Result<Ciphertext, SchemeError> {
    if ephemeral.is_degenerate_for(&public.base_isotopy) {
        log::warn!(
            "ephemeral exponents {:?} collapse a component of the isotopy to the identity",
            ephemeral.get()
        );
    }
    let shared = derive_shared_quasigroup(&public.quasigroup, &public.powered_isotopy, ephemeral)?;
    let body = markovski::encrypt(&shared, public.leader, plain)?;
    Ciphertext::new(ephemeral.raise(&public.base_isotopy), body)
}

/// Encrypts with freshly sampled, non-degenerate ephemeral exponents.
pub fn encrypt_random<R: Rng + ?Sized>(
    public: &PublicKey,
    plain: &SymbolString,
    rng: &mut R,
) -> Result<Ciphertext, SchemeError> {
    let ephemeral = Exponents::sample_non_degenerate(&public.base_isotopy, rng);
    encrypt(public, plain, &ephemeral)
}

pub fn decrypt(
    public: &PublicKey,
    private: &PrivateKey,
    ciphertext: &Ciphertext,
) -> Result<SymbolString, SchemeError> {
    let shared =
        derive_shared_quasigroup(&public.quasigroup, &ciphertext.ephemeral_isotopy, private)?;
    Ok(markovski::decrypt(&shared, public.leader, &ciphertext.body)?)
}
