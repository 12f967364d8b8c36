//! Finite permutations on `{0, .., n-1}`.
//!
//! Composition follows the left-action convention: `p.compose(&q)` maps
//! `x` to `p(q(x))`, so `q` is applied first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::PermError;

/// A bijection on `{0, .., degree-1}` stored in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Solution set `{ value + j * modulus }` of a discrete logarithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub value: BigUint,
    pub modulus: BigUint,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its one-line form, where `images[i]` is the
    /// image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(PermError::OutOfRange { point: x, degree });
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(PermError::RepeatedPoint(x));
            }
        }
        Ok(Self { images })
    }

    /// Uniformly random permutation (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        images.shuffle(rng);
        Ok(Self { images })
    }

    /// Parses disjoint-cycle notation such as `"(2 3 4)(0 5 1 6)"`.
    ///
    /// Points not mentioned are fixed; empty text (or `"()"`) is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut rest = text.trim_start();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Malformed(String::from("expected '('")))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Malformed(String::from("unclosed '('")))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(PermError::Malformed(String::from("nested '('")));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok
                    .parse()
                    .map_err(|_| PermError::Malformed(alloc::format!("bad point {tok:?}")))?;
                if point >= degree {
                    return Err(PermError::OutOfRange { point, degree });
                }
                if core::mem::replace(&mut seen[point], true) {
                    return Err(PermError::RepeatedPoint(point));
                }
                cycle.push(point);
            }
            for (i, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// Image of `x`. Panics if `x` is outside the carrier set.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Non-trivial cycles in canonical order: each starts at its smallest
    /// point, and cycles are sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    // Includes fixed points.
    fn all_cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        self.check_degree(other)?;
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// `self` composed with itself `e` times; negative exponents use the
    /// inverse. The exponent is reduced per cycle, so its size only costs
    /// one big-integer remainder per cycle.
    pub fn pow(&self, e: impl Into<BigInt>) -> Self {
        let e: BigInt = e.into();
        let mut images = vec![0; self.degree()];
        for cycle in self.all_cycles() {
            let len = cycle.len();
            let shift = e
                .mod_floor(&BigInt::from(len))
                .to_usize()
                .expect("remainder below cycle length");
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + shift) % len];
            }
        }
        Self { images }
    }

    /// Least `e >= 1` with `self^e = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.all_cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Finds every `e` with `self^e = target`.
    ///
    /// Each cycle of `self` forces `e` modulo its length; the congruences are
    /// merged with the Chinese remainder theorem. Returns `Ok(None)` when
    /// `target` is not in the cyclic subgroup generated by `self`.
    pub fn discrete_log(&self, target: &Self) -> Result<Option<Residue>, PermError> {
        self.check_degree(target)?;
        let mut value = BigInt::zero();
        let mut modulus = BigInt::one();
        for cycle in self.all_cycles() {
            let len = cycle.len();
            let mut position = vec![usize::MAX; self.degree()];
            for (i, &x) in cycle.iter().enumerate() {
                position[x] = i;
            }
            let shift = position[target.images[cycle[0]]];
            if shift == usize::MAX {
                return Ok(None);
            }
            let consistent = cycle
                .iter()
                .enumerate()
                .all(|(i, &x)| target.images[x] == cycle[(i + shift) % len]);
            if !consistent {
                return Ok(None);
            }
            match crt_merge(&value, &modulus, &BigInt::from(shift), &BigInt::from(len)) {
                Some((v, m)) => {
                    value = v;
                    modulus = m;
                }
                None => return Ok(None),
            }
        }
        Ok(Some(Residue {
            value: value.to_biguint().expect("non-negative residue"),
            modulus: modulus.to_biguint().expect("positive modulus"),
        }))
    }

    fn check_degree(&self, other: &Self) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

/// Solves `x ≡ a1 (mod m1)`, `x ≡ a2 (mod m2)` for possibly non-coprime
/// moduli. Result is `(x mod lcm, lcm)`.
fn crt_merge(a1: &BigInt, m1: &BigInt, a2: &BigInt, m2: &BigInt) -> Option<(BigInt, BigInt)> {
    let egcd = m1.extended_gcd(m2);
    let g = egcd.gcd;
    let diff = a2 - a1;
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let lcm = m1 / &g * m2;
    // m1 * x ≡ diff (mod m2)  =>  x = (diff / g) * inv(m1 / g) mod (m2 / g)
    let step = (&diff / &g * &egcd.x).mod_floor(&(m2 / &g));
    let x = (a1 + m1 * step).mod_floor(&lcm);
    Some((x, lcm))
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    const ALPHA: &str = "(2 3 4)(0 5 1 6)";
    const GAMMA: &str = "(1 2 3 6 0 5 4)";

    fn p(text: &str) -> Permutation {
        Permutation::parse_cycles(text, 7).unwrap()
    }

    fn brute_pow(p: &Permutation, e: u64) -> Permutation {
        let mut acc = Permutation::identity(p.degree());
        for _ in 0..e {
            acc = p.compose(&acc).unwrap();
        }
        acc
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p(ALPHA).images(), &[5, 6, 3, 4, 2, 1, 0]);
        assert_eq!(p("").images(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(p(GAMMA).images(), &[5, 2, 3, 6, 1, 4, 0]);
        assert_eq!(p("()"), Permutation::identity(7));
        assert_eq!(p(" (0 1) ( 2 3 ) "), p("(0 1)(2 3)"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(0 1", 3),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("0 1)", 3),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("((0 1))", 3),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 x)", 3),
            Err(PermError::Malformed(_))
        ));
        assert_eq!(
            Permutation::parse_cycles("(0 7)", 7),
            Err(PermError::OutOfRange { point: 7, degree: 7 })
        );
        assert_eq!(
            Permutation::parse_cycles("(0 1)(1 2)", 7),
            Err(PermError::RepeatedPoint(1))
        );
        assert_eq!(Permutation::parse_cycles("", 0), Err(PermError::ZeroDegree));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert_eq!(
            Permutation::from_images(vec![0, 0]),
            Err(PermError::RepeatedPoint(0))
        );
        assert_eq!(
            Permutation::from_images(vec![0, 2]),
            Err(PermError::OutOfRange { point: 2, degree: 2 })
        );
        assert_eq!(Permutation::from_images(vec![]), Err(PermError::ZeroDegree));
    }

    #[test]
    fn format_examples() {
        let alpha = Permutation::from_images(vec![5, 6, 3, 4, 2, 1, 0]).unwrap();
        assert_eq!(alpha.to_string(), "(0 5 1 6)(2 3 4)");
        assert_eq!(Permutation::identity(7).to_string(), "()");
        assert_eq!(Permutation::from_images(vec![1, 0]).unwrap().to_string(), "(0 1)");
    }

    #[test]
    fn compose_examples() {
        let alpha = p(ALPHA);
        assert_eq!(alpha.compose(&alpha).unwrap().to_string(), "(0 1)(2 4 3)(5 6)");
        assert_eq!(alpha.compose(&Permutation::identity(7)).unwrap(), alpha);
        let gamma = p(GAMMA);
        assert!(gamma.compose(&gamma.inverse()).unwrap().is_identity());
        assert_eq!(
            alpha.compose(&Permutation::identity(3)),
            Err(PermError::DegreeMismatch { left: 7, right: 3 })
        );
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // p(q(1)) = p(2) = 0
        assert_eq!(p.compose(&q).unwrap().apply(1), 0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(GAMMA).inverse(), p("(1 4 5 0 6 3 2)"));
        assert!(Permutation::identity(5).inverse().is_identity());
        let t = Permutation::from_images(vec![1, 0]).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn power_examples() {
        let alpha = p(ALPHA);
        assert_eq!(alpha.pow(5).images(), &[5, 6, 4, 2, 3, 1, 0]);
        assert_eq!(alpha.pow(15).to_string(), "(0 6 1 5)");
        assert!(alpha.pow(0).is_identity());
        assert_eq!(p(GAMMA).pow(30).to_string(), "(0 4 2 6 5 1 3)");
    }

    #[test]
    fn power_handles_negative_and_huge_exponents() {
        let alpha = p(ALPHA);
        assert_eq!(alpha.pow(-1), alpha.inverse());
        assert_eq!(alpha.pow(-5), alpha.pow(5).inverse());
        let huge: BigInt = BigInt::from(12u32).pow(40) + 7;
        assert_eq!(alpha.pow(huge), alpha.pow(7));
        assert_eq!(alpha.pow(u64::MAX), alpha.pow(u64::MAX % 12));
    }

    #[test]
    fn order_examples() {
        assert_eq!(p(ALPHA).order(), BigUint::from(12u32));
        assert_eq!(Permutation::identity(4).order(), BigUint::one());
        assert_eq!(p(GAMMA).order(), BigUint::from(7u32));
    }

    #[test]
    fn discrete_log_examples() {
        let alpha = p(ALPHA);
        let r = alpha.discrete_log(&p("(0 6 1 5)")).unwrap().unwrap();
        assert_eq!(r.value, BigUint::from(3u32));
        assert_eq!(r.modulus, BigUint::from(12u32));
        // brute force: 3 is the only exponent in 0..12
        let hits: Vec<u64> = (0..12)
            .filter(|&e| brute_pow(&alpha, e) == p("(0 6 1 5)"))
            .collect();
        assert_eq!(hits, vec![3]);

        let r = alpha.discrete_log(&Permutation::identity(7)).unwrap().unwrap();
        assert_eq!((r.value, r.modulus), (BigUint::zero(), BigUint::from(12u32)));

        let gamma = p(GAMMA);
        let r = gamma.discrete_log(&gamma.pow(30)).unwrap().unwrap();
        assert_eq!(r.to_string(), "2 (mod 7)");
    }

    #[test]
    fn discrete_log_not_found() {
        let alpha = p(ALPHA);
        // a transposition is not a power of alpha
        assert_eq!(alpha.discrete_log(&p("(0 1)")).unwrap(), None);
        // consistent per cycle but incompatible across cycles: (0 1)(2 3 4 5)
        let q = Permutation::parse_cycles("(0 1)(2 3)(4 5)", 6).unwrap();
        let target = Permutation::parse_cycles("(0 1)", 6).unwrap();
        assert_eq!(q.discrete_log(&target).unwrap(), None);
    }

    #[test]
    fn discrete_log_merges_non_coprime_cycles() {
        // cycle lengths 4 and 6: modulus 12
        let base = Permutation::parse_cycles("(0 1 2 3)(4 5 6 7 8 9)", 10).unwrap();
        for e in 0..12u32 {
            let r = base.discrete_log(&base.pow(e)).unwrap().unwrap();
            assert_eq!(r.value, BigUint::from(e));
            assert_eq!(r.modulus, BigUint::from(12u32));
        }
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn cycle_notation_round_trips(p in arb_perm(64)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
        }

        #[test]
        fn power_is_additive(p in arb_perm(24), a in -1000i64..1000, b in -1000i64..1000) {
            prop_assert_eq!(p.pow(a + b), p.pow(a).compose(&p.pow(b)).unwrap());
        }

        #[test]
        fn power_reduces_mod_order(p in arb_perm(24), e in any::<i64>()) {
            let order = BigInt::from(p.order());
            prop_assert!(p.pow(order.clone()).is_identity());
            prop_assert_eq!(p.pow(e), p.pow(BigInt::from(e).mod_floor(&order)));
        }

        #[test]
        fn powers_commute(p in arb_perm(24), a in 0i64..500, b in 0i64..500) {
            prop_assert_eq!(p.pow(a).pow(b), p.pow(b).pow(a));
            prop_assert_eq!(p.pow(a).pow(b), p.pow(a * b));
        }

        #[test]
        fn power_matches_repeated_composition(p in arb_perm(12), e in 0u64..40) {
            prop_assert_eq!(p.pow(e), brute_pow(&p, e));
        }

        #[test]
        fn discrete_log_recovers_exponent(p in arb_perm(64), e in any::<u64>()) {
            let r = p.discrete_log(&p.pow(e)).unwrap().unwrap();
            prop_assert_eq!(&r.modulus, &p.order());
            prop_assert_eq!(r.value, BigUint::from(e) % p.order());
        }
    }
}
