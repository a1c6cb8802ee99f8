use std::collections::BTreeSet;

use common_intervals::gen::{random_rows, GenConfig};
use common_intervals::oracle::oracle_common;
use common_intervals::profile::{compute_bounds, BoundKind};
use common_intervals::search::{candidates, run};
use common_intervals::{validate, Interval, IntervalClass, ProblemInstance};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn set(report: &[Interval]) -> BTreeSet<Interval> {
    report.iter().copied().collect()
}

fn instance(rng: &mut ChaCha8Rng, conserved: bool) -> (Vec<Vec<i64>>, ProblemInstance) {
    let n = rng.gen_range(2..=12);
    let k = rng.gen_range(1..=4);
    let rows = random_rows(
        rng,
        GenConfig {
            n,
            k,
            signed: true,
            conserved,
        },
    );
    let class = if conserved { IntervalClass::Conserved } else { IntervalClass::Common };
    let inst = validate(&rows, class).unwrap();
    (rows, inst)
}

#[test]
fn relabeling_elements_does_not_change_the_answer() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..400 {
        let conserved = round % 2 == 0;
        let (rows, inst) = instance(&mut rng, conserved);
        let n = inst.n();
        // rename element e to sigma[e]; positions stay, so reports must agree
        let mut sigma: Vec<i64> = (1..=n as i64).collect();
        if conserved && n >= 2 {
            sigma[1..n - 1].shuffle(&mut rng);
        } else {
            sigma.shuffle(&mut rng);
        }
        let renamed: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v.signum() * sigma[v.unsigned_abs() as usize - 1]).collect())
            .collect();
        let other = validate(&renamed, if conserved { IntervalClass::Conserved } else { IntervalClass::Common }).unwrap();
        assert_eq!(inst.perms(), other.perms());
        assert!((1..=n).all(|e| inst.reference_sign(e) == other.reference_sign(e)));
        for class in IntervalClass::ALL.into_iter().filter(|&c| inst.supports(c) && other.supports(c)) {
            assert_eq!(run(&inst, class).unwrap(), run(&other, class).unwrap());
        }
    }
}

/// Unfiltered candidates are exactly the common intervals whose left end is
/// the running minimum of the lower bounds and whose right end is the running
/// maximum of the upper bounds.
#[test]
fn unfiltered_candidates_follow_the_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for round in 0..600 {
        let conserved = round % 2 == 1;
        let (_, inst) = instance(&mut rng, conserved);
        let class = if conserved { IntervalClass::Conserved } else { IntervalClass::Common };
        assert_eq!(BoundKind::from(class), if conserved { BoundKind::Conserved } else { BoundKind::Plain });
        let profile = compute_bounds(&inst, class);
        let common = oracle_common(inst.perms()).unwrap();
        let want: BTreeSet<Interval> = common
            .into_iter()
            .filter(|iv| {
                let (t, x) = (iv.t, iv.x);
                let min_b = (t..x).map(|w| profile.lower(w)).min().unwrap();
                let max_b = (t..x).map(|w| profile.upper(w)).max().unwrap();
                t == profile.lower(t) && t == min_b && x == profile.upper(x - 1) && x == max_b
            })
            .collect();
        assert_eq!(set(&candidates(&profile)), want);
    }
}

#[test]
fn reports_are_ordered_contained_and_linear_in_pushes() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for round in 0..600 {
        let (_, inst) = instance(&mut rng, round % 2 == 0);
        let n = inst.n();
        let mut sets = std::collections::HashMap::new();
        for class in IntervalClass::ALL.into_iter().filter(|&c| inst.supports(c)) {
            let report = run(&inst, class).unwrap();
            for w in report.intervals.windows(2) {
                let ordered = w[0].t > w[1].t || (w[0].t == w[1].t && w[0].x < w[1].x);
                assert!(ordered, "{class}: {:?} then {:?}", w[0], w[1]);
            }
            assert!(report.op_counters.pushes() <= 2 * (n as u64 + 1));
            sets.insert(class, set(&report.intervals));
        }
        let sub = |a: IntervalClass, b: IntervalClass| {
            if let (Some(x), Some(y)) = (sets.get(&a), sets.get(&b)) {
                assert!(x.is_subset(y), "{a} not inside {b}");
            }
        };
        sub(IntervalClass::MaximalNested, IntervalClass::Nested);
        sub(IntervalClass::Nested, IntervalClass::Common);
        sub(IntervalClass::IrreducibleCommon, IntervalClass::Common);
        sub(IntervalClass::SameSignCommon, IntervalClass::Common);
        sub(IntervalClass::IrreducibleConserved, IntervalClass::Conserved);
        sub(IntervalClass::Conserved, IntervalClass::Common);
        assert!(sets[&IntervalClass::IrreducibleCommon].len() < n.max(1));
        if let Some(irr) = sets.get(&IntervalClass::IrreducibleConserved) {
            assert!(irr.len() < n.max(1));
        }
    }
}

#[test]
fn all_positive_same_sign_equals_common() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=4);
        let rows = random_rows(
            &mut rng,
            GenConfig {
                n,
                k,
                signed: false,
                conserved: false,
            },
        );
        let inst = validate(&rows, IntervalClass::Common).unwrap();
        assert_eq!(
            run(&inst, IntervalClass::SameSignCommon).unwrap().intervals,
            run(&inst, IntervalClass::Common).unwrap().intervals
        );
    }
}

proptest! {
    #[test]
    fn identity_copies_have_every_interval(n in 1usize..40, k in 1usize..5) {
        let id: Vec<i64> = (1..=n as i64).collect();
        let inst = validate(&vec![id; k], IntervalClass::Conserved).unwrap();
        let pairs = n * n.saturating_sub(1) / 2;
        prop_assert_eq!(run(&inst, IntervalClass::Common).unwrap().count(), pairs);
        prop_assert_eq!(run(&inst, IntervalClass::Nested).unwrap().count(), pairs);
        prop_assert_eq!(run(&inst, IntervalClass::Conserved).unwrap().count(), pairs);
        prop_assert_eq!(run(&inst, IntervalClass::IrreducibleCommon).unwrap().count(), n.saturating_sub(1));
        prop_assert_eq!(run(&inst, IntervalClass::IrreducibleConserved).unwrap().count(), n.saturating_sub(1));
        let maximal = run(&inst, IntervalClass::MaximalNested).unwrap().intervals;
        if n >= 2 {
            prop_assert_eq!(maximal, vec![Interval::new(1, n)]);
        } else {
            prop_assert!(maximal.is_empty());
        }
    }
}
