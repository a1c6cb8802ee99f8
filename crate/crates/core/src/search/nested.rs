use super::{Filter, Step};
use crate::instance::Interval;
use crate::lr_stack::LrStack;

/// Nested intervals. `w[t]` holds the largest `x` reported for `t + 1`, or 0.
pub(crate) struct NestedFilter {
    w: Vec<usize>,
}

impl NestedFilter {
    pub(crate) fn new(n: usize) -> Self {
        NestedFilter { w: vec![0; n.max(1)] }
    }
}

/// `Set_R(t)` bounds after dropping a stale `w[t]`, or `None` when no nested
/// interval can start at `t`.
fn nested_window(w: &mut [usize], t: usize, stack: &LrStack) -> Option<(usize, usize)> {
    let xtop = stack.rtop(t)?;
    let xbot = stack.rbot(t)?;
    if xtop > w[t] {
        // w[t] was popped off R
        w[t] = 0;
    }
    (xtop == t + 1 || w[t] != 0).then_some((xtop, xbot))
}

impl Filter for NestedFilter {
    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let (t, stack) = (step.t, step.stack);
        let Some((xtop, xbot)) = nested_window(&mut self.w, t, stack) else {
            return;
        };
        let mut x = Some(xtop);
        while let Some(v) = x {
            if v > xbot || !(v == t + 1 || v <= self.w[t] || stack.on_r(v - 1)) {
                break;
            }
            out.push(Interval::new(t, v));
            self.w[t - 1] = v;
            x = stack.next_r(v);
        }
    }
}

/// Maximal nested intervals: nested ones that end at a gap (or at the last
/// nested endpoint) and do not extend one step to the left.
pub(crate) struct MaximalNestedFilter {
    w: Vec<usize>,
    // gap_end[r]: first w >= r on R with w + 1 off R, fixed when r is pushed
    gap_end: Vec<usize>,
}

impl MaximalNestedFilter {
    pub(crate) fn new(n: usize) -> Self {
        MaximalNestedFilter {
            w: vec![0; n.max(1)],
            gap_end: vec![0; n + 2],
        }
    }
}

impl Filter for MaximalNestedFilter {
    fn after_push(&mut self, t: usize, stack: &LrStack) {
        let e = t + 1;
        self.gap_end[e] = if stack.on_r(e + 1) { self.gap_end[e + 1] } else { e };
    }

    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let (t, stack, profile) = (step.t, step.stack, step.profile);
        let Some((xtop, xbot)) = nested_window(&mut self.w, t, stack) else {
            return;
        };
        // last nested right endpoint for t
        let y = self.gap_end[xtop.max(self.w[t])].min(xbot);
        self.w[t - 1] = y;
        let extends_left = |x: usize| t > 1 && profile.lower(t - 1) == t - 1 && profile.upper(t - 1) <= x;
        let mut x = self.gap_end[xtop].min(y);
        while !extends_left(x) {
            out.push(Interval::new(t, x));
            if x == y {
                break;
            }
            let next = stack.next_r(x).expect("x is above the end of Set_R(t)");
            x = self.gap_end[next].min(y);
        }
    }
}
