//! An ElGamal-style public-key scheme built from quasigroup isotopies and
//! the Markovski chaining transformation, with a classical ElGamal for
//! comparison.
//!
//! The crate is `no_std` and needs only `alloc`. Randomness is always passed
//! in by the caller.
//!
//! ```
//! use qgelgamal::markovski::SymbolString;
//! use qgelgamal::scheme;
//! use rand_chacha::rand_core::SeedableRng;
//!
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let (public, private) = scheme::keygen_random(7, &mut rng).unwrap();
//! let plain = SymbolString::new(7, vec![6, 3, 0, 5, 1, 2, 4, 0, 3]).unwrap();
//! let ct = scheme::encrypt_random(&public, &plain, &mut rng).unwrap();
//! assert_eq!(scheme::decrypt(&public, &private, &ct).unwrap(), plain);
//! ```

#![no_std]

extern crate alloc;

pub mod classic;
pub mod codec;
pub mod error;
pub mod markovski;
pub mod perm;
pub mod quasigroup;
pub mod scheme;
pub mod worked_example;

pub use error::{CipherError, ClassicError, CodecError, PermError, QuasigroupError, SchemeError};
pub use markovski::{Leader, SymbolString};
pub use perm::{Permutation, Residue};
pub use quasigroup::{Isotopy, Quasigroup};
pub use scheme::{Ciphertext, EphemeralExponents, Exponents, PrivateKey, PublicKey};
