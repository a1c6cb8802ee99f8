//! LR-Search: one right-to-left sweep over the adjacent pairs `(t, t+1)`,
//! keeping left/right endpoint candidates on an `L-R+` LR-stack, with a
//! per-class filter choosing which candidate intervals to report.

mod common;
mod conserved;
mod irreducible;
mod nested;

use thiserror::Error;

use crate::instance::{Interval, IntervalClass, ProblemInstance};
use crate::lr_stack::{LrStack, OpCounters, OrderType};
use crate::profile::{compute_bounds, MinMaxProfile};

pub use conserved::{position, sign_groups};
pub use common::first_sign_changes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{class} intervals need every permutation to start with +1 and end with +n")]
    MissingConservedEndpoints { class: IntervalClass },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReport {
    pub class: IntervalClass,
    pub n: usize,
    pub k: usize,
    /// Decreasing `t`, increasing `x` within each `t`.
    pub intervals: Vec<Interval>,
    pub op_counters: OpCounters,
}

impl IntervalReport {
    pub fn count(&self) -> usize {
        self.intervals.len()
    }
}

/// What a filter sees at the end of iteration `t`.
pub(crate) struct Step<'a> {
    pub t: usize,
    pub stack: &'a LrStack,
    pub profile: &'a MinMaxProfile,
}

/// Picks the reported intervals out of `Set_R(t)`. Filters only get a shared
/// reference to the stack; everything they remember lives in `self`.
pub(crate) trait Filter {
    /// Called right after `t + 1` was pushed on `R`.
    fn after_push(&mut self, _t: usize, _stack: &LrStack) {}

    fn emit(&mut self, step: &Step<'_>, out: &mut Vec<Interval>);
}

/// Runs the search for one class.
pub fn run(instance: &ProblemInstance, class: IntervalClass) -> Result<IntervalReport, SearchError> {
    run_inner(instance, class, false)
}

/// Same as [`run`], re-verifying the LR-stack after every operation in debug
/// builds. Quadratic; meant for tests.
pub fn run_verified(instance: &ProblemInstance, class: IntervalClass) -> Result<IntervalReport, SearchError> {
    run_inner(instance, class, true)
}

fn run_inner(instance: &ProblemInstance, class: IntervalClass, verify: bool) -> Result<IntervalReport, SearchError> {
    if !instance.supports(class) {
        return Err(SearchError::MissingConservedEndpoints { class });
    }
    let profile = compute_bounds(instance, class);
    let n = instance.n();
    let mut filter: Box<dyn Filter> = match class {
        IntervalClass::Common => Box::new(common::CommonFilter),
        IntervalClass::SameSignCommon => Box::new(common::SameSignFilter::new(instance)),
        IntervalClass::Nested => Box::new(nested::NestedFilter::new(n)),
        IntervalClass::MaximalNested => Box::new(nested::MaximalNestedFilter::new(n)),
        IntervalClass::Conserved => Box::new(conserved::ConservedFilter::new(instance, false)),
        IntervalClass::IrreducibleConserved => Box::new(conserved::ConservedFilter::new(instance, true)),
        IntervalClass::IrreducibleCommon => Box::new(irreducible::IrreducibleCommonFilter::new(n)),
    };
    let (intervals, op_counters) = sweep(n, &profile, filter.as_mut(), verify);
    Ok(IntervalReport {
        class,
        n,
        k: instance.k(),
        intervals,
        op_counters,
    })
}

/// Every candidate the sweep produces under the given bounds, unfiltered.
pub fn candidates(profile: &MinMaxProfile) -> Vec<Interval> {
    sweep(profile.n(), profile, &mut common::CommonFilter, false).0
}

fn sweep(n: usize, profile: &MinMaxProfile, filter: &mut dyn Filter, verify: bool) -> (Vec<Interval>, OpCounters) {
    // conserved bounds may reach 0 and n + 1
    let mut stack = LrStack::new(n + 2, OrderType::L_MINUS_R_PLUS);
    stack.set_checking(verify);
    let mut out = Vec::new();
    for t in (1..n).rev() {
        let (b, big) = (profile.lower(t), profile.upper(t));
        stack.pop_l(b);
        stack.pop_r(big);
        if big == t + 1 {
            stack.push_lr(b, t + 1);
            filter.after_push(t, &stack);
        }
        let step = Step {
            t,
            stack: &stack,
            profile,
        };
        filter.emit(&step, &mut out);
    }
    (out, stack.counters())
}
