//! Markovski chaining transformation over a quasigroup.
//!
//! With leader `l`, plaintext `u1..uk` maps to `v1 = l·u1`,
//! `v(i+1) = v(i)·u(i+1)`. Decryption walks the same chain with left
//! division: `u1 = l\v1`, `u(i+1) = v(i)\v(i+1)`.

use alloc::vec::Vec;

use crate::error::CipherError;
use crate::quasigroup::Quasigroup;

/// Symbols over the alphabet `{0, .., order-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolString {
    order: usize,
    symbols: Vec<usize>,
}

impl SymbolString {
    pub fn new(order: usize, symbols: Vec<usize>) -> Result<Self, CipherError> {
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= order) {
            return Err(CipherError::SymbolOutOfRange {
                position,
                symbol,
                order,
            });
        }
        Ok(Self { order, symbols })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<usize> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// Initial element of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Leader(pub usize);

fn check(q: &Quasigroup, leader: Leader, input: &SymbolString) -> Result<(), CipherError> {
    let order = q.order();
    if input.order() != order {
        return Err(CipherError::OrderMismatch {
            order,
            found: input.order(),
        });
    }
    if leader.0 >= order {
        return Err(CipherError::LeaderOutOfRange {
            leader: leader.0,
            order,
        });
    }
    Ok(())
}

pub fn encrypt(
    q: &Quasigroup,
    leader: Leader,
    plain: &SymbolString,
) -> Result<SymbolString, CipherError> {
    check(q, leader, plain)?;
    let mut prev = leader.0;
    let symbols = plain
        .symbols()
        .iter()
        .map(|&u| {
            prev = q.op(prev, u);
            prev
        })
        .collect();
    Ok(SymbolString {
        order: q.order(),
        symbols,
    })
}

/// Inverts [`encrypt`] for the same quasigroup and leader.
pub fn decrypt(
    q: &Quasigroup,
    leader: Leader,
    cipher: &SymbolString,
) -> Result<SymbolString, CipherError> {
    check(q, leader, cipher)?;
    Ok(unchain(&q.left_division(), leader, cipher))
}

/// [`decrypt`] with the left-division table of the quasigroup already built.
pub fn decrypt_with_division(
    division: &Quasigroup,
    leader: Leader,
    cipher: &SymbolString,
) -> Result<SymbolString, CipherError> {
    check(division, leader, cipher)?;
    Ok(unchain(division, leader, cipher))
}

fn unchain(division: &Quasigroup, leader: Leader, cipher: &SymbolString) -> SymbolString {
    let mut prev = leader.0;
    let symbols = cipher
        .symbols()
        .iter()
        .map(|&v| {
            let u = division.op(prev, v);
            prev = v;
            u
        })
        .collect();
    SymbolString {
        order: division.order(),
        symbols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example as ex;
    use alloc::vec;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn syms(order: usize, s: &[usize]) -> SymbolString {
        SymbolString::new(order, s.to_vec()).unwrap()
    }

    fn xor() -> Quasigroup {
        Quasigroup::from_rows(&[[0, 1], [1, 0]]).unwrap()
    }

    /// Inverts each step by scanning the row of the previous symbol.
    fn brute_decrypt(q: &Quasigroup, leader: usize, cipher: &[usize]) -> Vec<usize> {
        let mut prev = leader;
        cipher
            .iter()
            .map(|&v| {
                let u = (0..q.order()).find(|&y| q.op(prev, y) == v).unwrap();
                prev = v;
                u
            })
            .collect()
    }

    #[test]
    fn worked_example_chain() {
        let q = Quasigroup::from_rows(&ex::TABLE_11).unwrap();
        let ct = encrypt(&q, Leader(3), &syms(7, &ex::PLAINTEXT)).unwrap();
        assert_eq!(ct.symbols(), &ex::CIPHERTEXT);
        let pt = decrypt(&q, Leader(3), &ct).unwrap();
        assert_eq!(pt.symbols(), &ex::PLAINTEXT);
    }

    #[test]
    fn empty_strings() {
        let q = Quasigroup::from_rows(&ex::TABLE_11).unwrap();
        assert!(encrypt(&q, Leader(3), &syms(7, &[])).unwrap().is_empty());
        assert!(decrypt(&q, Leader(3), &syms(7, &[])).unwrap().is_empty());
    }

    #[test]
    fn xor_examples() {
        assert_eq!(encrypt(&xor(), Leader(0), &syms(2, &[1, 0, 1])).unwrap().symbols(), &[1, 1, 0]);
        assert_eq!(decrypt(&xor(), Leader(0), &syms(2, &[1, 1, 0])).unwrap().symbols(), &[1, 0, 1]);
    }

    #[test]
    fn range_errors() {
        assert_eq!(
            SymbolString::new(2, vec![0, 2]),
            Err(CipherError::SymbolOutOfRange { position: 1, symbol: 2, order: 2 })
        );
        assert_eq!(
            encrypt(&xor(), Leader(2), &syms(2, &[0])),
            Err(CipherError::LeaderOutOfRange { leader: 2, order: 2 })
        );
        assert_eq!(
            decrypt(&xor(), Leader(0), &syms(3, &[0])),
            Err(CipherError::OrderMismatch { order: 2, found: 3 })
        );
    }

    #[test]
    fn exhaustive_small_orders_match_row_scan_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=4 {
            for _ in 0..8 {
                let q = Quasigroup::random(n, &mut rng).unwrap();
                for leader in 0..n {
                    for len in 0..=3u32 {
                        for idx in 0..n.pow(len) {
                            let msg: Vec<usize> =
                                (0..len).map(|i| idx / n.pow(i) % n).collect();
                            let ct = encrypt(&q, Leader(leader), &syms(n, &msg)).unwrap();
                            let pt = decrypt(&q, Leader(leader), &ct).unwrap();
                            assert_eq!(pt.symbols(), &msg[..]);
                            assert_eq!(brute_decrypt(&q, leader, ct.symbols()), msg);
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_both_ways(
            seed in any::<u64>(),
            n in 2usize..=32,
            leader in any::<usize>(),
            raw in proptest::collection::vec(any::<usize>(), 0..=512),
        ) {
            let q = Quasigroup::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let leader = Leader(leader % n);
            let m = syms(n, &raw.iter().map(|s| s % n).collect::<Vec<_>>());
            let ct = encrypt(&q, leader, &m).unwrap();
            prop_assert_eq!(ct.len(), m.len());
            prop_assert_eq!(&decrypt(&q, leader, &ct).unwrap(), &m);
            let back = decrypt(&q, leader, &m).unwrap();
            prop_assert_eq!(back.len(), m.len());
            prop_assert_eq!(encrypt(&q, leader, &back).unwrap(), m);
        }

        #[test]
        fn prefix_property(
            seed in any::<u64>(),
            n in 2usize..=16,
            raw in proptest::collection::vec(any::<usize>(), 0..=64),
            cut in any::<usize>(),
        ) {
            let q = Quasigroup::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let m: Vec<usize> = raw.iter().map(|s| s % n).collect();
            let cut = if m.is_empty() { 0 } else { cut % (m.len() + 1) };
            let full = encrypt(&q, Leader(0), &syms(n, &m)).unwrap();
            let part = encrypt(&q, Leader(0), &syms(n, &m[..cut])).unwrap();
            prop_assert_eq!(part.symbols(), &full.symbols()[..cut]);
        }
    }
}
