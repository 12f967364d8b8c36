//! Fixed-width byte to symbol conversion.
//!
//! Every byte becomes `width` base-`order` digits, most significant first,
//! where `width` is the smallest integer with `order^width >= 256`.

use alloc::vec::Vec;

use crate::error::CodecError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodecConfig {
    order: usize,
    width: usize,
}

impl CodecConfig {
    pub fn new(order: usize) -> Result<Self, CodecError> {
        if order < 2 {
            return Err(CodecError::OrderTooSmall(order));
        }
        let mut width = 1;
        let mut span = order;
        while span < 256 {
            span *= order;
            width += 1;
        }
        Ok(Self { order, width })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Digits per byte.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn encode(&self, bytes: &[u8]) -> Vec<usize> {
        let mut out = Vec::with_capacity(bytes.len() * self.width);
        for &b in bytes {
            let start = out.len();
            let mut v = usize::from(b);
            for _ in 0..self.width {
                out.push(v % self.order);
                v /= self.order;
            }
            out[start..].reverse();
        }
        out
    }

    pub fn decode(&self, symbols: &[usize]) -> Result<Vec<u8>, CodecError> {
        if !symbols.len().is_multiple_of(self.width) {
            return Err(CodecError::RaggedLength {
                len: symbols.len(),
                width: self.width,
            });
        }
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= self.order) {
            return Err(CodecError::SymbolOutOfRange {
                position,
                symbol,
                order: self.order,
            });
        }
        symbols
            .chunks_exact(self.width)
            .enumerate()
            .map(|(i, group)| {
                let value = group.iter().fold(0usize, |acc, &d| acc * self.order + d);
                u8::try_from(value).map_err(|_| CodecError::GroupOverflow {
                    offset: i * self.width,
                    value,
                })
            })
            .collect()
    }
}

pub fn encode(bytes: &[u8], order: usize) -> Result<Vec<usize>, CodecError> {
    Ok(CodecConfig::new(order)?.encode(bytes))
}

pub fn decode(symbols: &[usize], order: usize) -> Result<Vec<u8>, CodecError> {
    CodecConfig::new(order)?.decode(symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn widths() {
        let w = |n| CodecConfig::new(n).unwrap().width();
        assert_eq!(w(2), 8);
        assert_eq!(w(3), 6);
        assert_eq!(w(7), 3);
        assert_eq!(w(15), 3);
        assert_eq!(w(16), 2);
        assert_eq!(w(17), 2);
        assert_eq!(w(255), 2);
        assert_eq!(w(256), 1);
        assert_eq!(w(1000), 1);
        assert_eq!(CodecConfig::new(1), Err(CodecError::OrderTooSmall(1)));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&[0], 7).unwrap(), vec![0, 0, 0]);
        assert_eq!(encode(&[255], 7).unwrap(), vec![5, 1, 3]);
        assert_eq!(encode(b"B", 7).unwrap(), vec![1, 2, 3]);
        assert_eq!(encode(&[5], 2).unwrap(), vec![0, 0, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&[1, 2, 3], 7).unwrap(), b"B".to_vec());
        assert_eq!(decode(&[], 7).unwrap(), Vec::<u8>::new());
        assert_eq!(
            decode(&[5, 1, 4], 7),
            Err(CodecError::GroupOverflow { offset: 0, value: 256 })
        );
        assert_eq!(
            decode(&[1, 2], 7),
            Err(CodecError::RaggedLength { len: 2, width: 3 })
        );
        assert_eq!(
            decode(&[1, 2, 7], 7),
            Err(CodecError::SymbolOutOfRange { position: 2, symbol: 7, order: 7 })
        );
    }

    proptest! {
        #[test]
        fn round_trip(bytes in proptest::collection::vec(any::<u8>(), 0..256), order in 2usize..=256) {
            let cfg = CodecConfig::new(order).unwrap();
            let symbols = cfg.encode(&bytes);
            prop_assert_eq!(symbols.len(), bytes.len() * cfg.width());
            prop_assert!(symbols.iter().all(|&s| s < order));
            prop_assert_eq!(cfg.decode(&symbols).unwrap(), bytes);
        }

        #[test]
        fn width_is_minimal(order in 2usize..=300) {
            let w = CodecConfig::new(order).unwrap().width() as u32;
            prop_assert!(order.pow(w) >= 256);
            prop_assert!(order.pow(w - 1) < 256);
        }
    }
}
