use super::{Filter, Step};
use crate::instance::Interval;
use crate::lr_stack::LrStack;
use crate::union_find::DisjointSets;

/// Irreducible common intervals: for each `w`, the first reported interval
/// containing `w` and `w + 1`.
///
/// `pending` holds the `w` still waiting for their interval, smallest on top.
/// An element on R becomes untrusty once it ended a reported interval; runs
/// of untrusty consecutive values (strips) are skipped in one step.
pub(crate) struct IrreducibleCommonFilter {
    pending: Vec<usize>,
    untrusty: Vec<bool>,
    strips: DisjointSets,
}

impl IrreducibleCommonFilter {
    pub(crate) fn new(n: usize) -> Self {
        IrreducibleCommonFilter {
            pending: Vec::new(),
            untrusty: vec![false; n + 2],
            strips: DisjointSets::new(n + 2),
        }
    }

    fn mark_untrusty(&mut self, x: usize, stack: &LrStack) {
        self.untrusty[x] = true;
        if self.untrusty[x - 1] {
            self.strips.union(x - 1, x);
        }
        if self.untrusty[x + 1] && stack.on_r(x + 1) {
            self.strips.union(x, x + 1);
        }
    }

    /// First R element after the strip of the untrusty `x`.
    fn skip_strip(&mut self, x: usize, stack: &LrStack) -> Option<usize> {
        stack.next_r(self.strips.max_of(x))
    }
}

impl Filter for IrreducibleCommonFilter {
    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let (t, stack) = (step.t, step.stack);
        self.pending.push(t);
        let (Some(xtop), Some(xbot)) = (stack.rtop(t), stack.rbot(t)) else {
            return;
        };
        let mut x = Some(xtop);
        while let (Some(v), Some(&w)) = (x, self.pending.last()) {
            if v > xbot {
                break;
            }
            if w < v {
                out.push(Interval::new(t, v));
                self.mark_untrusty(v, stack);
                while self.pending.last().is_some_and(|&w| w < v) {
                    self.pending.pop();
                }
                x = stack.next_r(v);
            } else if self.untrusty[v] {
                x = self.skip_strip(v, stack);
            } else {
                break;
            }
        }
    }
}
