//! Finite quasigroups given by their Cayley tables, and isotopies acting on
//! them.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{PermError, QuasigroupError};
use crate::perm::Permutation;

/// A quasigroup of order `n` on `{0, .., n-1}`; its table is a Latin square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    order: usize,
    table: Vec<usize>,
}

impl Quasigroup {
    /// Validates a row-major Cayley table and wraps it.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, QuasigroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(QuasigroupError::ZeroOrder);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != order {
                return Err(QuasigroupError::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(QuasigroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            table.extend_from_slice(r);
        }
        let mut seen = vec![false; order];
        for row in 0..order {
            seen.fill(false);
            for col in 0..order {
                let value = table[row * order + col];
                if core::mem::replace(&mut seen[value], true) {
                    return Err(QuasigroupError::DuplicateInRow { row, value });
                }
            }
        }
        for col in 0..order {
            seen.fill(false);
            for row in 0..order {
                let value = table[row * order + col];
                if core::mem::replace(&mut seen[value], true) {
                    return Err(QuasigroupError::DuplicateInColumn { col, value });
                }
            }
        }
        Ok(Self { order, table })
    }

    /// Addition table of the cyclic group `Z_n`.
    pub fn cyclic(order: usize) -> Result<Self, QuasigroupError> {
        if order == 0 {
            return Err(QuasigroupError::ZeroOrder);
        }
        let table = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x + y) % order))
            .collect();
        Ok(Self { order, table })
    }

    /// Random quasigroup: the cyclic group table under a uniformly random
    /// isotopy. Not uniform over all Latin squares of the given order.
    pub fn random<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Result<Self, QuasigroupError> {
        let base = Self::cyclic(order)?;
        let t = Isotopy::random(order, rng)?;
        base.apply_isotopy(&t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `f(x, y)`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.table.chunks_exact(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// The (23)-parastrophe: `x \ z = y` exactly when `f(x, y) = z`.
    pub fn left_division(&self) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + self.op(x, y)] = y;
            }
        }
        Self { order: n, table }
    }

    /// Isotope `g(x, y) = γ⁻¹(f(α(x), β(y)))`.
    ///
    /// Row `x` of the result is row `α(x)` of `self`, column `y` is then taken
    /// from column `β(y)`, and finally every entry is replaced by its preimage
    /// under `γ`.
    pub fn apply_isotopy(&self, t: &Isotopy) -> Result<Self, QuasigroupError> {
        if t.degree() != self.order {
            return Err(QuasigroupError::DegreeMismatch {
                order: self.order,
                found: t.degree(),
            });
        }
        let n = self.order;
        let gamma_inv = t.gamma.inverse();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let src = self.row(t.alpha.apply(x));
            table.extend((0..n).map(|y| gamma_inv.apply(src[t.beta.apply(y)])));
        }
        Ok(Self { order: n, table })
    }
}

/// Triple of permutations acting on rows, columns and entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isotopy {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl Isotopy {
    pub fn new(
        alpha: Permutation,
        beta: Permutation,
        gamma: Permutation,
    ) -> Result<Self, QuasigroupError> {
        if alpha.degree() != beta.degree() || beta.degree() != gamma.degree() {
            return Err(QuasigroupError::IsotopyDegrees);
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn identity(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Self {
            alpha: id.clone(),
            beta: id.clone(),
            gamma: id,
        }
    }

    /// Three independent uniform permutations.
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<Self, QuasigroupError> {
        let sample = |rng: &mut R| {
            Permutation::random(degree, rng).map_err(|e| match e {
                PermError::ZeroDegree => QuasigroupError::ZeroOrder,
                _ => unreachable!("sampling only fails on degree 0"),
            })
        };
        Ok(Self {
            alpha: sample(rng)?,
            beta: sample(rng)?,
            gamma: sample(rng)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn components(&self) -> [&Permutation; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// `T^(a,b,c) = (α^a, β^b, γ^c)`.
    pub fn pow(&self, a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Self {
            alpha: self.alpha.pow(a),
            beta: self.beta.pow(b),
            gamma: self.gamma.pow(c),
        }
    }

    /// Componentwise `self ∘ other`. Applying `self` and then `other` to a
    /// quasigroup equals applying `self.compose(other)` once.
    pub fn compose(&self, other: &Self) -> Result<Self, QuasigroupError> {
        let wrap = |r: Result<Permutation, PermError>| r.map_err(|_| QuasigroupError::IsotopyDegrees);
        Ok(Self {
            alpha: wrap(self.alpha.compose(&other.alpha))?,
            beta: wrap(self.beta.compose(&other.beta))?,
            gamma: wrap(self.gamma.compose(&other.gamma))?,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            alpha: self.alpha.inverse(),
            beta: self.beta.inverse(),
            gamma: self.gamma.inverse(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example as ex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q2() -> Quasigroup {
        Quasigroup::from_rows(&ex::TABLE_2).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(q2().order(), 7);
        assert_eq!(q2().row(0), &[5, 2, 6, 4, 0, 3, 1]);
        assert!(Quasigroup::from_rows(&[[0, 1], [1, 0]]).is_ok());
        assert_eq!(
            Quasigroup::from_rows(&[[0, 1], [0, 1]]),
            Err(QuasigroupError::DuplicateInColumn { col: 0, value: 0 })
        );
    }

    #[test]
    fn validate_errors() {
        let empty: [[usize; 0]; 0] = [];
        assert_eq!(Quasigroup::from_rows(&empty), Err(QuasigroupError::ZeroOrder));
        assert_eq!(
            Quasigroup::from_rows(&[vec![0, 1], vec![1]]),
            Err(QuasigroupError::NotSquare { row: 1, len: 1, order: 2 })
        );
        assert_eq!(
            Quasigroup::from_rows(&[[0, 2], [1, 0]]),
            Err(QuasigroupError::EntryOutOfRange { row: 0, col: 1, value: 2, order: 2 })
        );
        assert_eq!(
            Quasigroup::from_rows(&[[0, 0], [1, 1]]),
            Err(QuasigroupError::DuplicateInRow { row: 0, value: 0 })
        );
    }

    #[test]
    fn left_division_examples() {
        let ld = Quasigroup::from_rows(&ex::TABLE_11).unwrap().left_division();
        assert_eq!(ld.row(3), &[2, 0, 5, 1, 4, 3, 6]);
        assert_eq!(ld.to_rows(), ex::TABLE_12.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let xor = Quasigroup::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(xor.left_division(), xor);
        // f(0, 4) = 0 in table 2
        assert_eq!(q2().left_division().op(0, 0), 4);
    }

    #[test]
    fn left_division_identities_exhaustive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            for _ in 0..4 {
                let q = Quasigroup::random(n, &mut rng).unwrap();
                let ld = q.left_division();
                assert!(Quasigroup::from_rows(&ld.to_rows()).is_ok());
                for x in 0..n {
                    for y in 0..n {
                        assert_eq!(ld.op(x, q.op(x, y)), y);
                        assert_eq!(q.op(x, ld.op(x, y)), y);
                    }
                }
            }
        }
    }

    #[test]
    fn apply_isotopy_examples() {
        let t = ex::base_isotopy();
        assert_eq!(q2().apply_isotopy(&t).unwrap().row(0), &[1, 3, 2, 4, 0, 5, 6]);
        assert_eq!(
            q2().apply_isotopy(&t.pow(3, 6, 5)).unwrap().row(0),
            &[6, 1, 0, 4, 3, 2, 5]
        );
        assert_eq!(q2().apply_isotopy(&Isotopy::identity(7)).unwrap(), q2());
        assert_eq!(
            q2().apply_isotopy(&t.pow(15, 18, 30)).unwrap().row(0),
            &[4, 6, 1, 3, 5, 0, 2]
        );
        assert_eq!(
            q2().apply_isotopy(&Isotopy::identity(3)),
            Err(QuasigroupError::DegreeMismatch { order: 7, found: 3 })
        );
    }

    #[test]
    fn isotopy_power_examples() {
        let t = ex::base_isotopy();
        let p = t.pow(3, 6, 5);
        assert_eq!(alloc::format!("{}", p.alpha), "(0 6 1 5)");
        assert_eq!(alloc::format!("{}", p.beta), "(0 2)(1 3)");
        assert_eq!(alloc::format!("{}", p.gamma), "(0 3 1 5 6 2 4)");
        assert_eq!(t.pow(1, 1, 1), t);
        let e = t.pow(5, 3, 6);
        assert_eq!(e.alpha.images(), &[5, 6, 4, 2, 3, 1, 0]);
        assert_eq!(e.beta.images(), &[1, 2, 3, 0, 4, 6, 5]);
        assert_eq!(e.gamma.images(), &[6, 4, 1, 2, 5, 0, 3]);
    }

    #[test]
    fn isotopy_new_checks_degrees() {
        assert_eq!(
            Isotopy::new(
                Permutation::identity(2),
                Permutation::identity(2),
                Permutation::identity(3)
            ),
            Err(QuasigroupError::IsotopyDegrees)
        );
    }

    #[test]
    fn random_generation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert_eq!(Quasigroup::random(1, &mut rng).unwrap().to_rows(), vec![vec![0]]);
        assert_eq!(Quasigroup::random(0, &mut rng), Err(QuasigroupError::ZeroOrder));
        assert_eq!(Isotopy::random(0, &mut rng), Err(QuasigroupError::ZeroOrder));
        assert_eq!(Isotopy::random(1, &mut rng).unwrap(), Isotopy::identity(1));

        let a = Quasigroup::random(4, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = Quasigroup::random(4, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert!(Quasigroup::from_rows(&a.to_rows()).is_ok());

        let s = Isotopy::random(6, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        assert_eq!(s, Isotopy::random(6, &mut ChaCha8Rng::seed_from_u64(2)).unwrap());
        for p in s.components() {
            assert!(Permutation::from_images(p.images().to_vec()).is_ok());
        }
    }

    #[test]
    fn isotopy_laws_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 2..=16 {
            let q = Quasigroup::random(n, &mut rng).unwrap();
            let t1 = Isotopy::random(n, &mut rng).unwrap();
            let t2 = Isotopy::random(n, &mut rng).unwrap();
            let once = q.apply_isotopy(&t1).unwrap();
            assert!(Quasigroup::from_rows(&once.to_rows()).is_ok());
            let twice = once.apply_isotopy(&t2).unwrap();
            assert_eq!(twice, q.apply_isotopy(&t1.compose(&t2).unwrap()).unwrap());
            assert_eq!(once.apply_isotopy(&t1.inverse()).unwrap(), q);
        }
    }

    #[test]
    fn isotopy_power_composes_exponents() {
        let t = ex::base_isotopy();
        assert_eq!(t.pow(5, 3, 6).pow(3, 6, 5), t.pow(15, 18, 30));
        assert_eq!(t.pow(3, 6, 5).pow(5, 3, 6), t.pow(15, 18, 30));
        let table = q2().apply_isotopy(&t.pow(5, 3, 6).pow(3, 6, 5)).unwrap();
        assert_eq!(table.to_rows(), ex::TABLE_11.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    }
}
