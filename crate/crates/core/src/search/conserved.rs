use super::{Filter, Step};
use crate::instance::{Interval, ProblemInstance};
use crate::lr_stack::LrStack;

const NIL: usize = usize::MAX;

/// Group id per element (slots 0..=n+1) such that two elements share a group
/// iff they carry the same sign in every permutation. Refines the partition
/// one permutation at a time.
pub fn sign_groups(instance: &ProblemInstance) -> Vec<usize> {
    let n = instance.n();
    let mut group = vec![0usize; n + 2];
    let mut groups = 1;
    let mut remap = Vec::new();
    for p in instance.perms().iter().skip(1) {
        remap.clear();
        remap.resize(2 * groups, NIL);
        let mut next_id = 0;
        for (e, g) in group.iter_mut().enumerate().take(n + 1).skip(1) {
            let key = 2 * *g + usize::from(!p.sign_of(e).is_positive());
            if remap[key] == NIL {
                remap[key] = next_id;
                next_id += 1;
            }
            *g = remap[key];
        }
        groups = next_id.max(1);
    }
    group
}

/// Whether, in every permutation, `t + 1` lies on the side of `t` that the
/// sign of `t` points to.
pub fn position(instance: &ProblemInstance, t: usize) -> bool {
    instance.perms().iter().all(|p| {
        let before = p.position_of(t) < p.position_of(t + 1);
        before == p.sign_of(t).is_positive()
    })
}

/// Conserved intervals, or only the shortest one per left endpoint.
pub(crate) struct ConservedFilter {
    group: Vec<usize>,
    // first[g]: smallest element of group g on R (may be stale until skipped)
    first: Vec<usize>,
    // chain[e]: next larger element of e's group that was on R when e arrived
    chain: Vec<usize>,
    position_ok: Vec<bool>,
    shortest_only: bool,
}

impl ConservedFilter {
    pub(crate) fn new(instance: &ProblemInstance, shortest_only: bool) -> Self {
        let n = instance.n();
        let group = sign_groups(instance);
        let position_ok = (0..n).map(|t| t >= 1 && position(instance, t)).collect();
        ConservedFilter {
            first: vec![NIL; n + 2],
            chain: vec![NIL; n + 2],
            group,
            position_ok,
            shortest_only,
        }
    }

    fn head(&mut self, g: usize, stack: &LrStack) -> usize {
        while self.first[g] != NIL && !stack.on_r(self.first[g]) {
            self.first[g] = self.chain[self.first[g]];
        }
        self.first[g]
    }
}

impl Filter for ConservedFilter {
    fn after_push(&mut self, t: usize, stack: &LrStack) {
        let e = t + 1;
        let g = self.group[e];
        self.chain[e] = self.head(g, stack);
        self.first[g] = e;
    }

    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>) {
        let (t, stack) = (step.t, step.stack);
        let Some(xbot) = stack.rbot(t) else {
            return;
        };
        let mut x = self.head(self.group[t], stack);
        if x == NIL || !self.position_ok[t] {
            return;
        }
        while x != NIL && x <= xbot {
            out.push(Interval::new(t, x));
            if self.shortest_only {
                break;
            }
            x = self.chain[x];
        }
    }
}
