//! Brute-force reference answers for every interval class, straight from the
//! definitions. Intervals are reported as position ranges of the first
//! permutation, which is what the search reports after relabeling.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::instance::{Interval, IntervalClass, SignedPermutation};

pub const DEFAULT_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the brute-force bound {bound}")]
    BruteForceBoundExceeded { n: usize, bound: usize },
    #[error("no permutations given")]
    Empty,
    #[error("permutations have different lengths")]
    LengthMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub class: IntervalClass,
    pub intervals: BTreeSet<Interval>,
}

pub fn oracle(perms: &[SignedPermutation], class: IntervalClass) -> Result<OracleReport, OracleError> {
    oracle_with_bound(perms, class, DEFAULT_BOUND)
}

pub fn oracle_with_bound(
    perms: &[SignedPermutation],
    class: IntervalClass,
    bound: usize,
) -> Result<OracleReport, OracleError> {
    let table = Table::new(perms, bound)?;
    let intervals = match class {
        IntervalClass::Common => table.common(),
        IntervalClass::Nested => table.nested(),
        IntervalClass::MaximalNested => table.maximal_nested(),
        IntervalClass::Conserved => table.conserved(),
        IntervalClass::IrreducibleConserved => table.irreducible_conserved(),
        IntervalClass::IrreducibleCommon => table.irreducible_common(),
        IntervalClass::SameSignCommon => table.same_sign(),
    };
    Ok(OracleReport { class, intervals })
}

pub fn oracle_common(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.common())
}

pub fn oracle_nested(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.nested())
}

pub fn oracle_maximal_nested(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.maximal_nested())
}

pub fn oracle_conserved(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.conserved())
}

pub fn oracle_irreducible_conserved(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.irreducible_conserved())
}

pub fn oracle_irreducible_common(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.irreducible_common())
}

pub fn oracle_same_sign(perms: &[SignedPermutation]) -> Result<BTreeSet<Interval>, OracleError> {
    Ok(Table::new(perms, DEFAULT_BOUND)?.same_sign())
}

struct Table<'a> {
    n: usize,
    perms: &'a [SignedPermutation],
    // common[t][x] for 1 <= t < x <= n, in positions of the first permutation
    common: Vec<Vec<bool>>,
}

impl<'a> Table<'a> {
    fn new(perms: &'a [SignedPermutation], bound: usize) -> Result<Self, OracleError> {
        let first = perms.first().ok_or(OracleError::Empty)?;
        let n = first.len();
        if n > bound {
            return Err(OracleError::BruteForceBoundExceeded { n, bound });
        }
        if perms.iter().any(|p| p.len() != n) {
            return Err(OracleError::LengthMismatch);
        }
        let mut common = vec![vec![false; n + 2]; n + 2];
        for (t, row) in common.iter_mut().enumerate().take(n + 1).skip(1) {
            for (x, cell) in row.iter_mut().enumerate().take(n + 1).skip(t + 1) {
                *cell = perms.iter().all(|p| {
                    let pos = (t..=x).map(|i| p.position_of(first.at(i)));
                    let (lo, hi) = pos.fold((usize::MAX, 0), |(lo, hi), q| (lo.min(q), hi.max(q)));
                    hi - lo == x - t
                });
            }
        }
        Ok(Table { n, perms, common })
    }

    fn collect(&self, keep: impl Fn(usize, usize) -> bool) -> BTreeSet<Interval> {
        let mut out = BTreeSet::new();
        for t in 1..=self.n {
            for x in t + 1..=self.n {
                if keep(t, x) {
                    out.insert(Interval::new(t, x));
                }
            }
        }
        out
    }

    fn common(&self) -> BTreeSet<Interval> {
        self.collect(|t, x| self.common[t][x])
    }

    fn nested_table(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut nested = vec![vec![false; n + 2]; n + 2];
        for len in 2..=n {
            for t in 1..=n + 1 - len {
                let x = t + len - 1;
                nested[t][x] = self.common[t][x] && (len == 2 || nested[t + 1][x] || nested[t][x - 1]);
            }
        }
        nested
    }

    fn nested(&self) -> BTreeSet<Interval> {
        let nested = self.nested_table();
        self.collect(|t, x| nested[t][x])
    }

    fn maximal_nested(&self) -> BTreeSet<Interval> {
        let nested = self.nested_table();
        self.collect(|t, x| nested[t][x] && !nested[t - 1][x] && !nested[t][x + 1])
    }

    fn is_conserved(&self, t: usize, x: usize) -> bool {
        if !self.common[t][x] {
            return false;
        }
        let first = &self.perms[0];
        let a1 = first.to_signed()[t - 1];
        let b1 = first.to_signed()[x - 1];
        self.perms.iter().all(|p| {
            let pos: Vec<usize> = (t..=x).map(|i| p.position_of(first.at(i))).collect();
            let lo = *pos.iter().min().unwrap();
            let hi = *pos.iter().max().unwrap();
            let signed = p.to_signed();
            let (ak, bk) = (signed[lo - 1], signed[hi - 1]);
            (ak == a1 && bk == b1) || (ak == -b1 && bk == -a1)
        })
    }

    fn conserved(&self) -> BTreeSet<Interval> {
        self.collect(|t, x| self.is_conserved(t, x))
    }

    /// Conserved intervals not covered by their proper conserved subintervals.
    fn irreducible_conserved(&self) -> BTreeSet<Interval> {
        let all = self.conserved();
        all.iter()
            .copied()
            .filter(|&outer| {
                let mut covered = vec![false; outer.x + 1];
                for inner in all.iter().filter(|&&i| i != outer && outer.contains(&i)) {
                    for c in &mut covered[inner.t..=inner.x] {
                        *c = true;
                    }
                }
                !covered[outer.t..=outer.x].iter().all(|&c| c)
            })
            .collect()
    }

    /// For each `w`, the common interval containing `w` and `w + 1` with the
    /// largest left end, then the smallest right end.
    fn irreducible_common(&self) -> BTreeSet<Interval> {
        let mut out = BTreeSet::new();
        for w in 1..self.n {
            let best = (1..=w)
                .rev()
                .find_map(|t| (w + 1..=self.n).find(|&x| self.common[t][x]).map(|x| Interval::new(t, x)));
            out.extend(best);
        }
        out
    }

    fn same_sign(&self) -> BTreeSet<Interval> {
        let first = &self.perms[0];
        self.collect(|t, x| {
            self.common[t][x]
                && self.perms.iter().all(|p| {
                    let s = p.sign_of(first.at(t));
                    (t..=x).all(|i| p.sign_of(first.at(i)) == s)
                })
        })
    }
}
