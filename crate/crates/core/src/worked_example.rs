//! Constants of the seven-element worked example and of two small classical
//! ElGamal runs. Used by the `demo` command and as test fixtures.
//!
//! Permutation exponents `15`, `18` and `30` below are the products
//! `5·3`, `3·6` and `6·5` of the ephemeral and private exponents. Since
//! `α` has order 12 and `β` order 4, `α^15 = α^3` and `β^18 = β^6`.

use crate::perm::Permutation;
use crate::quasigroup::Isotopy;

pub const ORDER: usize = 7;

pub const ALPHA: &str = "(2 3 4)(0 5 1 6)";
pub const BETA: &str = "(0 3 2 1)(5 6)";
pub const GAMMA: &str = "(1 2 3 6 0 5 4)";
pub const GAMMA_INVERSE: &str = "(1 4 5 0 6 3 2)";

/// Private exponents `(m, n, k)`.
pub const PRIVATE: (u64, u64, u64) = (3, 6, 5);
/// Ephemeral exponents `(r, s, t)`.
pub const EPHEMERAL: (u64, u64, u64) = (5, 3, 6);
/// Products `(m·r, n·s, k·t)`.
pub const SHARED: (u64, u64, u64) = (15, 18, 30);
pub const LEADER: usize = 3;

pub const PLAINTEXT: [usize; 9] = [6, 3, 0, 5, 1, 2, 4, 0, 3];
pub const CIPHERTEXT: [usize; 9] = [6, 2, 0, 0, 6, 5, 3, 1, 1];

/// Cycle forms of `α^3`, `β^6`, `γ^5` and `γ^-5`.
pub const PUBLIC_POWER_CYCLES: [&str; 4] = [
    "(0 6 1 5)",
    "(0 2)(1 3)",
    "(0 3 1 5 6 2 4)",
    "(0 4 2 6 5 1 3)",
];
/// One-line forms of `α^3`, `β^6`, `γ^5`.
pub const PUBLIC_POWER_IMAGES: [[usize; 7]; 3] = [
    [6, 5, 2, 3, 4, 0, 1],
    [2, 3, 0, 1, 4, 5, 6],
    [3, 5, 4, 1, 0, 6, 2],
];

/// One-line forms of `α^5`, `β^3`, `γ^6`.
pub const EPHEMERAL_IMAGES: [[usize; 7]; 3] = [
    [5, 6, 4, 2, 3, 1, 0],
    [1, 2, 3, 0, 4, 6, 5],
    [6, 4, 1, 2, 5, 0, 3],
];
/// Cycle forms of `α^5`, `β^3`, `γ^6`.
pub const EPHEMERAL_CYCLES: [&str; 3] = ["(0 5 1 6)(2 4 3)", "(0 1 2 3)(5 6)", "(0 6 3 2 1 4 5)"];

/// One-line forms of `α^15`, `β^18`, `γ^30`.
pub const SHARED_IMAGES: [[usize; 7]; 3] = [
    [6, 5, 2, 3, 4, 0, 1],
    [2, 3, 0, 1, 4, 5, 6],
    [4, 3, 6, 0, 2, 1, 5],
];
/// Cycle forms of `α^15`, `β^18`, `γ^30` and `γ^-30`.
pub const SHARED_CYCLES: [&str; 4] = [
    "(0 6 1 5)",
    "(0 2)(1 3)",
    "(0 4 2 6 5 1 3)",
    "(0 3 1 5 6 2 4)",
];

pub fn alpha() -> Permutation {
    Permutation::parse_cycles(ALPHA, ORDER).expect("valid constant")
}

pub fn beta() -> Permutation {
    Permutation::parse_cycles(BETA, ORDER).expect("valid constant")
}

pub fn gamma() -> Permutation {
    Permutation::parse_cycles(GAMMA, ORDER).expect("valid constant")
}

/// `T = (α, β, γ)`.
pub fn base_isotopy() -> Isotopy {
    Isotopy::new(alpha(), beta(), gamma()).expect("equal degrees")
}

/// Parameters and results of one classical ElGamal run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicRun {
    pub p: u64,
    pub g: u64,
    /// Private exponent.
    pub c: u64,
    /// Public value `g^c mod p`.
    pub d: u64,
    pub k: u64,
    pub m: u64,
    pub r: u64,
    pub e: u64,
}

/// `m = 15` sent with `p = 23`, `g = 5`.
pub const CLASSIC_1: ClassicRun = ClassicRun {
    p: 23,
    g: 5,
    c: 13,
    d: 21,
    k: 7,
    m: 15,
    r: 17,
    e: 12,
};

/// The letter "B" (66) sent with `p = 107`, `g = 2`.
pub const CLASSIC_2: ClassicRun = ClassicRun {
    p: 107,
    g: 2,
    c: 67,
    d: 94,
    k: 45,
    m: 66,
    r: 28,
    e: 9,
};

/// Base quasigroup.
pub const TABLE_2: [[usize; 7]; 7] = [
    [5, 2, 6, 4, 0, 3, 1],
    [1, 6, 5, 3, 4, 2, 0],
    [0, 5, 4, 6, 3, 1, 2],
    [4, 1, 3, 0, 2, 6, 5],
    [2, 4, 0, 1, 6, 5, 3],
    [6, 3, 1, 2, 5, 0, 4],
    [3, 0, 2, 5, 1, 4, 6],
];

/// After the row map α.
pub const TABLE_3: [[usize; 7]; 7] = [
    [6, 3, 1, 2, 5, 0, 4],
    [3, 0, 2, 5, 1, 4, 6],
    [4, 1, 3, 0, 2, 6, 5],
    [2, 4, 0, 1, 6, 5, 3],
    [0, 5, 4, 6, 3, 1, 2],
    [1, 6, 5, 3, 4, 2, 0],
    [5, 2, 6, 4, 0, 3, 1],
];

/// After α then the column map β.
pub const TABLE_4: [[usize; 7]; 7] = [
    [2, 6, 3, 1, 5, 4, 0],
    [5, 3, 0, 2, 1, 6, 4],
    [0, 4, 1, 3, 2, 5, 6],
    [1, 2, 4, 0, 6, 3, 5],
    [6, 0, 5, 4, 3, 2, 1],
    [3, 1, 6, 5, 4, 0, 2],
    [4, 5, 2, 6, 0, 1, 3],
];

/// Full isotope under T = (α, β, γ).
pub const TABLE_5: [[usize; 7]; 7] = [
    [1, 3, 2, 4, 0, 5, 6],
    [0, 2, 6, 1, 4, 3, 5],
    [6, 5, 4, 2, 1, 0, 3],
    [4, 1, 5, 6, 3, 2, 0],
    [3, 6, 0, 5, 2, 1, 4],
    [2, 4, 3, 0, 5, 6, 1],
    [5, 0, 1, 3, 6, 4, 2],
];

/// After α³.
pub const TABLE_6: [[usize; 7]; 7] = [
    [3, 0, 2, 5, 1, 4, 6],
    [6, 3, 1, 2, 5, 0, 4],
    [0, 5, 4, 6, 3, 1, 2],
    [4, 1, 3, 0, 2, 6, 5],
    [2, 4, 0, 1, 6, 5, 3],
    [5, 2, 6, 4, 0, 3, 1],
    [1, 6, 5, 3, 4, 2, 0],
];

/// After α³ then β⁶.
pub const TABLE_7: [[usize; 7]; 7] = [
    [2, 5, 3, 0, 1, 4, 6],
    [1, 2, 6, 3, 5, 0, 4],
    [4, 6, 0, 5, 3, 1, 2],
    [3, 0, 4, 1, 2, 6, 5],
    [0, 1, 2, 4, 6, 5, 3],
    [6, 4, 5, 2, 0, 3, 1],
    [5, 3, 1, 6, 4, 2, 0],
];

/// Isotope under the public power T^(3,6,5).
pub const TABLE_8: [[usize; 7]; 7] = [
    [6, 1, 0, 4, 3, 2, 5],
    [3, 6, 5, 0, 1, 4, 2],
    [2, 5, 4, 1, 0, 3, 6],
    [0, 4, 2, 3, 6, 5, 1],
    [4, 3, 6, 2, 5, 1, 0],
    [5, 2, 1, 6, 4, 0, 3],
    [1, 0, 3, 5, 2, 6, 4],
];

/// After α^15 (equal to α³).
pub const TABLE_9: [[usize; 7]; 7] = [
    [3, 0, 2, 5, 1, 4, 6],
    [6, 3, 1, 2, 5, 0, 4],
    [0, 5, 4, 6, 3, 1, 2],
    [4, 1, 3, 0, 2, 6, 5],
    [2, 4, 0, 1, 6, 5, 3],
    [5, 2, 6, 4, 0, 3, 1],
    [1, 6, 5, 3, 4, 2, 0],
];

/// After α^15 then β^18.
pub const TABLE_10: [[usize; 7]; 7] = [
    [2, 5, 3, 0, 1, 4, 6],
    [1, 2, 6, 3, 5, 0, 4],
    [4, 6, 0, 5, 3, 1, 2],
    [3, 0, 4, 1, 2, 6, 5],
    [0, 1, 2, 4, 6, 5, 3],
    [6, 4, 5, 2, 0, 3, 1],
    [5, 3, 1, 6, 4, 2, 0],
];

/// Shared quasigroup under T^(15,18,30).
pub const TABLE_11: [[usize; 7]; 7] = [
    [4, 6, 1, 3, 5, 0, 2],
    [5, 4, 2, 1, 6, 3, 0],
    [0, 2, 3, 6, 1, 5, 4],
    [1, 3, 0, 5, 4, 2, 6],
    [3, 5, 4, 0, 2, 6, 1],
    [2, 0, 6, 4, 3, 1, 5],
    [6, 1, 5, 2, 0, 4, 3],
];

/// Left division of the shared quasigroup.
pub const TABLE_12: [[usize; 7]; 7] = [
    [5, 2, 6, 3, 0, 4, 1],
    [6, 3, 2, 5, 1, 0, 4],
    [0, 4, 1, 2, 6, 5, 3],
    [2, 0, 5, 1, 4, 3, 6],
    [3, 6, 4, 0, 2, 1, 5],
    [1, 5, 0, 4, 3, 6, 2],
    [4, 1, 3, 6, 5, 2, 0],
];
