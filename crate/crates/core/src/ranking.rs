//! Strict rankings: total, transitive, antisymmetric preference orders,
//! stored as the rank-order list of alternatives (rank 1 first).

use crate::alts::Alt;
use crate::error::{Error, Result};

/// A strict ranking of `m` alternatives. `order()[0]` is the most preferred
/// alternative; rank values are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ranking {
    order: Vec<Alt>,
}

impl Ranking {
    /// Builds a ranking from the rank-order list; it must be a permutation of
    /// all `m` alternatives.
    pub fn from_order(order: Vec<Alt>, m: usize) -> Result<Self> {
        if order.len() != m {
            return Err(Error::NotAPermutation { m });
        }
        let mut seen = vec![false; m];
        for alt in &order {
            if alt.index() >= m || seen[alt.index()] {
                return Err(Error::NotAPermutation { m });
            }
            seen[alt.index()] = true;
        }
        Ok(Ranking { order })
    }

    /// Ranking built from raw `u8` indices, mostly for tests and fixtures.
    pub fn from_indices(indices: &[u8]) -> Result<Self> {
        Self::from_order(indices.iter().map(|&i| Alt(i)).collect(), indices.len())
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    /// Alternatives from rank 1 down to rank m.
    pub fn order(&self) -> &[Alt] {
        &self.order
    }

    /// 1-based rank of `x`; rank 1 is the most preferred.
    pub fn rank_of(&self, x: Alt) -> Result<usize> {
        self.order
            .iter()
            .position(|&a| a == x)
            .map(|p| p + 1)
            .ok_or(Error::UnknownAlternative {
                index: x.index(),
                m: self.m(),
            })
    }

    /// True iff `x` is strictly preferred to `y`. Both must belong to the
    /// ranking; out-of-range alternatives are treated as never preferred.
    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        let mut rx = usize::MAX;
        let mut ry = usize::MAX;
        for (pos, &a) in self.order.iter().enumerate() {
            if a == x {
                rx = pos;
            } else if a == y {
                ry = pos;
            }
        }
        rx < ry
    }

    pub fn top(&self) -> Alt {
        self.order[0]
    }

    pub fn bottom(&self) -> Alt {
        *self.order.last().expect("rankings are nonempty")
    }

    /// Alternative at the given 1-based rank.
    pub fn at_rank(&self, rank: usize) -> Result<Alt> {
        if rank == 0 || rank > self.m() {
            return Err(Error::StateOutOfRange {
                index: rank,
                n: self.m(),
            });
        }
        Ok(self.order[rank - 1])
    }

    /// The unordered pair of top-two alternatives, sorted by index.
    pub fn top_two(&self) -> (Alt, Alt) {
        let (a, b) = (self.order[0], self.order[1]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// The ranking with `y` pushed down one rank (swapped with its immediate
    /// successor), everything else fixed. `None` if `y` is already last.
    pub fn demote(&self, y: Alt) -> Option<Ranking> {
        let pos = self.order.iter().position(|&a| a == y)?;
        if pos + 1 >= self.order.len() {
            return None;
        }
        let mut order = self.order.clone();
        order.swap(pos, pos + 1);
        Some(Ranking { order })
    }

    /// Equality of the restrictions to `X ∖ {y}`: same relative order of all
    /// other alternatives.
    pub fn equal_off(&self, other: &Ranking, y: Alt) -> bool {
        let a = self.order.iter().filter(|&&v| v != y);
        let b = other.order.iter().filter(|&&v| v != y);
        a.eq(b)
    }

    /// Lexicographic index of this permutation among all m! orderings.
    pub fn lex_index(&self) -> u64 {
        let m = self.m();
        let mut remaining: Vec<Alt> = (0..m as u8).map(Alt).collect();
        let mut index = 0u64;
        for &alt in &self.order {
            let pos = remaining.iter().position(|&a| a == alt).unwrap();
            index = index * (remaining.len() as u64) + pos as u64;
            remaining.remove(pos);
        }
        // The loop accumulates in the mixed-radix (factorial) number system.
        index
    }

    /// Inverse of [`lex_index`]: the `index`-th permutation of `m`
    /// alternatives in lexicographic order.
    pub fn from_lex_index(m: usize, index: u64) -> Result<Self> {
        let total = factorial(m).ok_or(Error::Internal("m! overflow".into()))?;
        if index >= total {
            return Err(Error::Internal(format!(
                "permutation index {index} out of range for m={m}"
            )));
        }
        let mut remaining: Vec<Alt> = (0..m as u8).map(Alt).collect();
        let mut order = Vec::with_capacity(m);
        let mut rest = index;
        for k in (1..=m).rev() {
            let block = factorial(k - 1).unwrap();
            let pos = (rest / block) as usize;
            rest %= block;
            order.push(remaining.remove(pos));
        }
        Ok(Ranking { order })
    }
}

/// `m!` as u64, or `None` on overflow.
pub fn factorial(m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for i in 2..=m as u64 {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(idx: &[u8]) -> Ranking {
        Ranking::from_indices(idx).unwrap()
    }

    #[test]
    fn rank_of_basics() {
        // x ≻ y ≻ z
        let rk = r(&[0, 1, 2]);
        assert_eq!(rk.rank_of(Alt(0)).unwrap(), 1);
        assert_eq!(rk.rank_of(Alt(2)).unwrap(), 3);
        assert!(rk.rank_of(Alt(5)).is_err());
        assert!(rk.prefers(Alt(0), Alt(2)));
        assert!(!rk.prefers(Alt(2), Alt(0)));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Ranking::from_indices(&[0, 0, 1]).is_err());
        assert!(Ranking::from_indices(&[0, 1, 3]).is_err());
    }

    #[test]
    fn demote_swaps_with_successor() {
        let rk = r(&[0, 1, 2]);
        let d = rk.demote(Alt(1)).unwrap();
        assert_eq!(d.order(), &[Alt(0), Alt(2), Alt(1)]);
        assert!(rk.demote(Alt(2)).is_none());
        assert!(rk.equal_off(&d, Alt(1)));
        assert!(!rk.equal_off(&d, Alt(0)));
    }

    #[test]
    fn lex_index_round_trip() {
        for m in 1..=5usize {
            let total = factorial(m).unwrap();
            let mut seen = std::collections::HashSet::new();
            for i in 0..total {
                let rk = Ranking::from_lex_index(m, i).unwrap();
                assert_eq!(rk.lex_index(), i);
                assert!(seen.insert(rk.order().to_vec()));
            }
            assert_eq!(seen.len() as u64, total);
        }
    }

    #[test]
    fn lex_order_is_sorted() {
        // index order must agree with lexicographic order of the sequences
        let total = factorial(4).unwrap();
        let perms: Vec<_> = (0..total)
            .map(|i| Ranking::from_lex_index(4, i).unwrap())
            .collect();
        for w in perms.windows(2) {
            assert!(w[0].order() < w[1].order());
        }
    }
}
