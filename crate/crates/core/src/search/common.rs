use super::{Filter, Step};
use crate::instance::{Interval, ProblemInstance, Sign};

/// Reports all of `Set_R(t)`.
pub(crate) struct CommonFilter;

impl Filter for CommonFilter {
    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let t = step.t;
        out.extend(step.stack.set_r(t).map(|x| Interval::new(t, x)));
    }
}

/// For one row of signs (indexed by element, slot 0 unused), the smallest
/// `x > t` whose sign differs from the sign of `t`, or `n + 1`.
pub fn first_sign_changes(signs: &[Sign]) -> Vec<usize> {
    let n = signs.len() - 1;
    let mut out = vec![n + 1; n + 2];
    for e in (1..n).rev() {
        out[e] = if signs[e + 1] != signs[e] { e + 1 } else { out[e + 1] };
    }
    out
}

/// Common intervals whose elements share one sign inside every permutation.
pub(crate) struct SameSignFilter {
    // limit[t]: first x > t that breaks sign uniformity in some row
    limit: Vec<usize>,
}

impl SameSignFilter {
    pub(crate) fn new(instance: &ProblemInstance) -> Self {
        let n = instance.n();
        // normalized signs are relative to the first row, so the first row's
        // own signs have to be checked separately
        let reference: Vec<Sign> = (0..=n).map(|e| if e == 0 { Sign::Plus } else { instance.reference_sign(e) }).collect();
        let mut limit = first_sign_changes(&reference);
        let mut row = vec![Sign::Plus; n + 1];
        for p in instance.perms().iter().skip(1) {
            for (e, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = p.sign_of(e);
            }
            for (l, c) in limit.iter_mut().zip(first_sign_changes(&row)) {
                *l = (*l).min(c);
            }
        }
        SameSignFilter { limit }
    }
}

impl Filter for SameSignFilter {
    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let t = step.t;
        let limit = self.limit[t];
        out.extend(
            step.stack
                .set_r(t)
                .take_while(|&x| x < limit)
                .map(|x| Interval::new(t, x)),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    #[test]
    fn sign_change_scan() {
        // elements 1..=5 with signs + + - - +
        let row = [P, P, P, M, M, P];
        assert_eq!(&first_sign_changes(&row)[1..5], &[3, 3, 5, 5]);
        let flat = [P, M, M, M];
        assert_eq!(&first_sign_changes(&flat)[1..3], &[4, 4]);
    }
}
