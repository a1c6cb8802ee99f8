//! Paired monotone stacks `L` and `R` with an order-preserving cursor map from
//! `L` into `R`.
//!
//! Every element `a` on `L` points at an element `rtop(a)` on `R`. The block of
//! `R` from `rtop(a)` down to (excluding) `rtop(next_l(a))` is `Set_R(a)`; the
//! last cell of that block is `rbot(a)`. Blocks are never materialized, they
//! follow from the cursors and the adjacency links of `R`.
//!
//! Elements are small integers drawn from `0..universe`, so both stacks are
//! stored as intrusive linked lists over index arrays. `find_l` is optional:
//! when enabled, blocks are mirrored in a [`DisjointSets`] so the owner of any
//! `R` cell is found in near-constant time.

use thiserror::Error;

use crate::union_find::DisjointSets;

const NIL: usize = usize::MAX;

/// Order of a stack read from top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderType {
    pub l: Direction,
    pub r: Direction,
}

impl OrderType {
    /// `L` decreasing, `R` increasing: the interval search stack.
    pub const L_MINUS_R_PLUS: OrderType = OrderType {
        l: Direction::Decreasing,
        r: Direction::Increasing,
    };
    /// Both decreasing: the range-minimum sweep.
    pub const L_MINUS_R_MINUS: OrderType = OrderType {
        l: Direction::Decreasing,
        r: Direction::Decreasing,
    };
    pub const L_PLUS_R_PLUS: OrderType = OrderType {
        l: Direction::Increasing,
        r: Direction::Increasing,
    };
    /// `L` increasing, `R` decreasing: the range-maximum sweep.
    pub const L_PLUS_R_MINUS: OrderType = OrderType {
        l: Direction::Increasing,
        r: Direction::Decreasing,
    };
}

impl Direction {
    /// Whether `above`, already on a stack, prevents pushing `new` on it.
    fn blocks(self, above: usize, new: usize) -> bool {
        match self {
            Direction::Decreasing => above > new,
            Direction::Increasing => above < new,
        }
    }

    /// Whether `upper` may sit directly above `lower`.
    fn ordered(self, upper: usize, lower: usize) -> bool {
        match self {
            Direction::Decreasing => upper > lower,
            Direction::Increasing => upper < lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LrStackError {
    #[error("element {0} is not on R")]
    NotOnR(usize),
}

/// Push and pop tallies over the lifetime of a stack.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub push_l: u64,
    pub push_r: u64,
    pub pop_l: u64,
    pub pop_r: u64,
}

impl OpCounters {
    pub fn pushes(&self) -> u64 {
        self.push_l + self.push_r
    }

    pub fn pops(&self) -> u64 {
        self.pop_l + self.pop_r
    }
}

#[derive(Clone, Debug)]
struct BlockIndex {
    sets: DisjointSets,
    // owner[root] is the L element whose block contains the root
    owner: Links,
    pushed: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct LrStack {
    order: OrderType,
    l_top: usize,
    l_below: Links,
    on_l: Vec<bool>,
    l_len: usize,
    r_top: usize,
    r_bottom: usize,
    r_below: Links,
    r_above: Links,
    on_r: Vec<bool>,
    r_len: usize,
    rtop: Links,
    r_owner: Links,
    blocks: Option<BlockIndex>,
    counters: OpCounters,
    checking: bool,
}

impl LrStack {
    /// Stack over `0..universe` without `find_l` support.
    pub fn new(universe: usize, order: OrderType) -> Self {
        LrStack {
            order,
            l_top: NIL,
            l_below: Links::new(universe),
            on_l: vec![false; universe],
            l_len: 0,
            r_top: NIL,
            r_bottom: NIL,
            r_below: Links::new(universe),
            r_above: Links::new(universe),
            on_r: vec![false; universe],
            r_len: 0,
            rtop: Links::new(universe),
            r_owner: Links::new(universe),
            blocks: None,
            counters: OpCounters::default(),
            checking: false,
        }
    }

    /// Stack that answers [`find_l`](Self::find_l) through a union-find over
    /// the blocks. Each element may be pushed on `R` at most once.
    pub fn with_find(universe: usize, order: OrderType) -> Self {
        let mut s = Self::new(universe, order);
        s.blocks = Some(BlockIndex {
            sets: DisjointSets::new(universe),
            owner: Links::new(universe),
            pushed: vec![false; universe],
        });
        s
    }

    /// Re-verify the whole structure after every operation (debug builds only).
    pub fn set_checking(&mut self, on: bool) {
        self.checking = on;
    }

    pub fn order(&self) -> OrderType {
        self.order
    }

    pub fn universe(&self) -> usize {
        self.on_l.len()
    }

    pub fn counters(&self) -> OpCounters {
        self.counters
    }

    pub fn len_l(&self) -> usize {
        self.l_len
    }

    pub fn len_r(&self) -> usize {
        self.r_len
    }

    pub fn top_l(&self) -> Option<usize> {
        opt(self.l_top)
    }

    pub fn top_r(&self) -> Option<usize> {
        opt(self.r_top)
    }

    pub fn bottom_r(&self) -> Option<usize> {
        opt(self.r_bottom)
    }

    pub fn on_l(&self, u: usize) -> bool {
        self.on_l.get(u).copied().unwrap_or(false)
    }

    pub fn on_r(&self, u: usize) -> bool {
        self.on_r.get(u).copied().unwrap_or(false)
    }

    /// Element below `u` on `L`.
    pub fn next_l(&self, u: usize) -> Option<usize> {
        if self.on_l(u) {
            opt(self.l_below.get(u))
        } else {
            None
        }
    }

    /// Element below `u` on `R`.
    pub fn next_r(&self, u: usize) -> Option<usize> {
        if self.on_r(u) {
            opt(self.r_below.get(u))
        } else {
            None
        }
    }

    /// Element above `u` on `R`.
    pub fn prev_r(&self, u: usize) -> Option<usize> {
        if self.on_r(u) {
            opt(self.r_above.get(u))
        } else {
            None
        }
    }

    /// First cell of `Set_R(a)`, or `None` when `a` is not on `L`.
    pub fn rtop(&self, a: usize) -> Option<usize> {
        if self.on_l(a) {
            opt(self.rtop.get(a))
        } else {
            None
        }
    }

    /// Last cell of `Set_R(a)`.
    pub fn rbot(&self, a: usize) -> Option<usize> {
        self.rtop(a)?;
        match opt(self.l_below.get(a)).and_then(|below| opt(self.rtop.get(below))) {
            Some(next_block) => opt(self.r_above.get(next_block)),
            None => opt(self.r_bottom),
        }
    }

    /// Cells of `Set_R(a)` from top to bottom.
    pub fn set_r(&self, a: usize) -> SetR<'_> {
        SetR {
            stack: self,
            cur: self.rtop(a).unwrap_or(NIL),
            last: self.rbot(a).unwrap_or(NIL),
        }
    }

    pub fn iter_l(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(opt(self.l_top), move |&u| opt(self.l_below.get(u)))
    }

    pub fn iter_r(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(opt(self.r_top), move |&u| opt(self.r_below.get(u)))
    }

    /// Discards every `L`-blocking element for `a`; if any was found, `a`
    /// ends up on top of `L` owning the merged blocks from `top(R)` down.
    pub fn pop_l(&mut self, a: usize) {
        let mut found = false;
        let mut merged = NIL;
        while self.l_top != NIL && self.order.l.blocks(self.l_top, a) {
            let target = self.remove_l_top();
            if target != NIL {
                merged = self.merge_blocks(merged, target);
            }
            found = true;
        }
        if found {
            if !self.on_l[a] {
                self.push_l_raw(a);
            }
            let top = self.l_top;
            let old = self.rtop.get(top);
            if old != NIL {
                self.r_owner.set(old, NIL);
                merged = self.merge_blocks(merged, old);
            }
            if self.r_top != NIL {
                self.rtop.set(top, self.r_top);
                self.r_owner.set(self.r_top, top);
                if let Some(bi) = self.blocks.as_mut() {
                    if merged != NIL {
                        let root = bi.sets.find(merged);
                        bi.owner.set(root, top);
                    }
                }
            } else {
                self.rtop.set(top, NIL);
            }
        }
        self.after_op();
    }

    /// Discards every `R`-blocking element for `b`, moving cursors that
    /// pointed at discarded cells, then drops `L` elements left without a
    /// block. `b` itself is never pushed.
    pub fn pop_r(&mut self, b: usize) {
        while self.r_top != NIL && self.order.r.blocks(self.r_top, b) {
            let x = self.r_top;
            self.remove_r_top();
            let owner = self.r_owner.get(x);
            if owner != NIL {
                self.r_owner.set(x, NIL);
                let y = self.r_top;
                if y != NIL && self.r_owner.get(y) == NIL {
                    self.rtop.set(owner, y);
                    self.r_owner.set(y, owner);
                } else {
                    self.rtop.set(owner, NIL);
                }
            }
        }
        while self.l_top != NIL && self.rtop.get(self.l_top) == NIL {
            self.remove_l_top();
        }
        self.after_op();
    }

    /// Puts `a` on top of `L` and `b` on top of `R` (each only if not already
    /// there) and points `rtop(a)` at `b`. Callers must have cleared every
    /// blocking element first.
    pub fn push_lr(&mut self, a: usize, b: usize) {
        debug_assert!(
            self.l_top == NIL || self.l_top == a || !self.order.l.blocks(self.l_top, a),
            "push_lr({a}, {b}): L-blocking element {} present",
            self.l_top
        );
        debug_assert!(
            self.r_top == NIL || self.r_top == b || !self.order.r.blocks(self.r_top, b),
            "push_lr({a}, {b}): R-blocking element {} present",
            self.r_top
        );
        let new_a = self.l_top != a;
        if new_a {
            self.push_l_raw(a);
        }
        let new_b = self.r_top != b;
        if new_b {
            self.push_r_raw(b);
            let old = self.rtop.get(a);
            if old != NIL {
                self.r_owner.set(old, NIL);
            }
            self.rtop.set(a, b);
            self.r_owner.set(b, a);
            if let Some(bi) = self.blocks.as_mut() {
                let root = if old != NIL {
                    bi.sets.union(old, b)
                } else {
                    bi.sets.find(b)
                };
                bi.owner.set(root, a);
            }
        } else if new_a {
            debug_assert!(
                self.r_owner.get(b) == NIL,
                "push_lr({a}, {b}): {b} already heads the block of {}",
                self.r_owner.get(b)
            );
            self.rtop.set(a, b);
            self.r_owner.set(b, a);
            if let Some(bi) = self.blocks.as_mut() {
                let root = bi.sets.find(b);
                bi.owner.set(root, a);
            }
        }
        self.after_op();
    }

    /// The `L` element whose block contains `b`.
    pub fn find_l(&mut self, b: usize) -> Result<usize, LrStackError> {
        if !self.on_r(b) {
            return Err(LrStackError::NotOnR(b));
        }
        let owner = match self.blocks.as_mut() {
            Some(bi) => {
                let root = bi.sets.find(b);
                bi.owner.get(root)
            }
            None => self.find_l_scan(b).unwrap_or(NIL),
        };
        debug_assert!(owner != NIL, "cell {b} on R belongs to no block");
        Ok(owner)
    }

    /// Linear-time `find_l` by walking up `R` to the head of the block.
    pub fn find_l_scan(&self, b: usize) -> Option<usize> {
        if !self.on_r(b) {
            return None;
        }
        let mut u = b;
        while u != NIL {
            if self.r_owner.get(u) != NIL {
                return Some(self.r_owner.get(u));
            }
            u = self.r_above.get(u);
        }
        None
    }

    /// Full scan of every structural invariant.
    pub fn verify(&self) -> Result<(), String> {
        let l: Vec<usize> = self.iter_l().collect();
        let r: Vec<usize> = self.iter_r().collect();
        if l.len() != self.l_len || r.len() != self.r_len {
            return Err("length counters out of sync".into());
        }
        for w in l.windows(2) {
            if !self.order.l.ordered(w[0], w[1]) {
                return Err(format!("L not monotone at {} over {}", w[0], w[1]));
            }
        }
        for w in r.windows(2) {
            if !self.order.r.ordered(w[0], w[1]) {
                return Err(format!("R not monotone at {} over {}", w[0], w[1]));
            }
            if self.r_above.get(w[1]) != w[0] {
                return Err(format!("R back link broken at {}", w[1]));
            }
        }
        if r.last().copied().unwrap_or(NIL) != self.r_bottom {
            return Err("R bottom pointer stale".into());
        }
        let on_l_count = self.on_l.iter().filter(|&&b| b).count();
        let on_r_count = self.on_r.iter().filter(|&&b| b).count();
        if on_l_count != l.len() || on_r_count != r.len() {
            return Err("membership flags out of sync".into());
        }
        let mut r_index = vec![NIL; self.universe()];
        for (i, &x) in r.iter().enumerate() {
            r_index[x] = i;
        }
        let mut last = None;
        for &a in &l {
            let target = self.rtop.get(a);
            if target == NIL || !self.on_r[target] {
                return Err(format!("rtop({a}) does not point into R"));
            }
            if self.r_owner.get(target) != a {
                return Err(format!("owner of {target} is not {a}"));
            }
            let idx = r_index[target];
            if last.is_some_and(|p| p >= idx) {
                return Err(format!("rtop({a}) breaks order preservation"));
            }
            last = Some(idx);
        }
        if let (Some(&a), Some(&x)) = (l.first(), r.first()) {
            if self.rtop.get(a) != x {
                return Err(format!("rtop(top L = {a}) is not top R = {x}"));
            }
        }
        let owners = self.r_owner.iter().filter(|&o| o != NIL).count();
        if owners != l.len() {
            return Err("stray block heads on R".into());
        }
        if let Some(bi) = &self.blocks {
            for &x in &r {
                let fast = bi.owner.get(bi.sets.find_const(x));
                if Some(fast) != self.find_l_scan(x) {
                    return Err(format!("find_l({x}) disagrees with the block scan"));
                }
            }
        }
        Ok(())
    }

    fn after_op(&self) {
        if cfg!(debug_assertions) && self.checking {
            if let Err(e) = self.verify() {
                panic!("LR-stack invariant violated: {e}");
            }
        }
    }

    fn merge_blocks(&mut self, acc: usize, x: usize) -> usize {
        match self.blocks.as_mut() {
            Some(bi) if acc != NIL => {
                bi.sets.union(acc, x);
                acc
            }
            _ => x,
        }
    }

    fn push_l_raw(&mut self, a: usize) {
        debug_assert!(!self.on_l[a]);
        self.l_below.set(a, self.l_top);
        self.l_top = a;
        self.on_l[a] = true;
        self.rtop.set(a, NIL);
        self.l_len += 1;
        self.counters.push_l += 1;
    }

    /// Pops the top of `L`, returning its old `rtop` target.
    fn remove_l_top(&mut self) -> usize {
        let a = self.l_top;
        self.l_top = self.l_below.get(a);
        self.l_below.set(a, NIL);
        self.on_l[a] = false;
        let target = self.rtop.get(a);
        if target != NIL && self.r_owner.get(target) == a {
            self.r_owner.set(target, NIL);
        }
        self.rtop.set(a, NIL);
        self.l_len -= 1;
        self.counters.pop_l += 1;
        target
    }

    fn push_r_raw(&mut self, b: usize) {
        debug_assert!(!self.on_r[b]);
        if let Some(bi) = self.blocks.as_mut() {
            assert!(!bi.pushed[b], "element {b} pushed on R twice with find_l enabled");
            bi.pushed[b] = true;
        }
        self.r_below.set(b, self.r_top);
        self.r_above.set(b, NIL);
        if self.r_top != NIL {
            self.r_above.set(self.r_top, b);
        } else {
            self.r_bottom = b;
        }
        self.r_top = b;
        self.on_r[b] = true;
        self.r_len += 1;
        self.counters.push_r += 1;
    }

    fn remove_r_top(&mut self) {
        let x = self.r_top;
        self.r_top = self.r_below.get(x);
        if self.r_top != NIL {
            self.r_above.set(self.r_top, NIL);
        } else {
            self.r_bottom = NIL;
        }
        self.r_below.set(x, NIL);
        self.on_r[x] = false;
        self.r_len -= 1;
        self.counters.pop_r += 1;
    }
}

/// Index links stored as `u32` to keep the sweeps cache friendly.
#[derive(Clone, Debug)]
struct Links(Vec<u32>);

impl Links {
    fn new(len: usize) -> Self {
        assert!(len < u32::MAX as usize, "universe too large for u32 links");
        Links(vec![u32::MAX; len])
    }

    #[inline]
    fn get(&self, i: usize) -> usize {
        match self.0[i] {
            u32::MAX => NIL,
            v => v as usize,
        }
    }

    #[inline]
    fn set(&mut self, i: usize, v: usize) {
        self.0[i] = if v == NIL { u32::MAX } else { v as u32 };
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).map(|i| self.get(i))
    }
}

fn opt(u: usize) -> Option<usize> {
    (u != NIL).then_some(u)
}

/// Iterator over one block of `R`.
pub struct SetR<'a> {
    stack: &'a LrStack,
    cur: usize,
    last: usize,
}

impl Iterator for SetR<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.cur == NIL {
            return None;
        }
        let u = self.cur;
        self.cur = if u == self.last {
            NIL
        } else {
            self.stack.r_below.get(u)
        };
        Some(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stack(n: usize) -> LrStack {
        let mut s = LrStack::with_find(n + 2, OrderType::L_MINUS_R_PLUS);
        s.set_checking(true);
        s
    }

    fn l(s: &LrStack) -> Vec<usize> {
        s.iter_l().collect()
    }

    fn r(s: &LrStack) -> Vec<usize> {
        s.iter_r().collect()
    }

    /// The state reached after the t = 6, 5, 4 steps on `{Id_7, (7 2 1 3 6 4 5)}`:
    /// L = [4, 1], R = [5, 6, 7], Set_R(4) = {5, 6}, Set_R(1) = {7}.
    fn trace_at_four() -> LrStack {
        let mut s = stack(7);
        // t = 6: [1, 7]
        s.pop_l(1);
        s.pop_r(7);
        s.push_lr(1, 7);
        // t = 5: [4, 6]
        s.pop_l(4);
        s.pop_r(6);
        s.push_lr(4, 6);
        // t = 4: [4, 5]
        s.pop_l(4);
        s.pop_r(5);
        s.push_lr(4, 5);
        s
    }

    #[test]
    fn first_operations_on_empty_stack() {
        let mut s = stack(7);
        s.pop_l(1);
        s.pop_r(7);
        assert_eq!((s.len_l(), s.len_r()), (0, 0));
        s.push_lr(1, 7);
        assert_eq!((l(&s), r(&s)), (vec![1], vec![7]));
        assert_eq!(s.rtop(1), Some(7));
        s.push_lr(1, 7);
        assert_eq!((l(&s), r(&s)), (vec![1], vec![7]));
        assert_eq!(s.counters().pushes(), 2);
    }

    #[test]
    fn replay_reaches_documented_state() {
        let mut s = trace_at_four();
        assert_eq!(l(&s), vec![4, 1]);
        assert_eq!(r(&s), vec![5, 6, 7]);
        assert_eq!(s.set_r(4).collect::<Vec<_>>(), vec![5, 6]);
        assert_eq!(s.set_r(1).collect::<Vec<_>>(), vec![7]);
        assert_eq!((s.rbot(4), s.rbot(1)), (Some(6), Some(7)));
        assert_eq!(s.find_l(6), Ok(4));
        assert_eq!(s.find_l(5), Ok(4));
        assert_eq!(s.find_l(7), Ok(1));
        assert_eq!(s.find_l(3), Err(LrStackError::NotOnR(3)));
    }

    #[test]
    fn pop_l_replaces_blocking_top() {
        let mut s = trace_at_four();
        s.pop_l(3);
        assert_eq!(l(&s), vec![3, 1]);
        assert_eq!(s.rtop(3), Some(5));
        assert_eq!(s.set_r(3).collect::<Vec<_>>(), vec![5, 6]);
        assert_eq!(s.find_l(6), Ok(3));
        // own top is not blocking for itself
        s.pop_l(3);
        assert_eq!(l(&s), vec![3, 1]);
    }

    #[test]
    fn pop_r_discards_smaller_cells() {
        let mut s = trace_at_four();
        s.pop_l(3);
        s.pop_r(6);
        assert_eq!(r(&s), vec![6, 7]);
        assert_eq!(l(&s), vec![3, 1]);
        assert_eq!(s.rtop(3), Some(6));
        assert_eq!(s.set_r(3).collect::<Vec<_>>(), vec![6]);
        assert!(!s.on_r(6 - 1));
    }

    #[test]
    fn pop_r_cascades_to_l() {
        let mut s = stack(4);
        s.push_lr(2, 3);
        s.pop_r(4);
        assert_eq!((l(&s), r(&s)), (vec![], vec![]));
        s.pop_r(9 % 5);
        assert_eq!(s.counters().pops(), 2);
        let mut empty = stack(8);
        empty.pop_r(9);
        assert_eq!(empty.len_r(), 0);
    }

    #[test]
    fn adjacency_queries() {
        let s = trace_at_four();
        assert_eq!(s.next_r(5), Some(6));
        assert_eq!(s.next_r(7), None);
        assert_eq!(s.prev_r(6), Some(5));
        assert_eq!(s.next_l(4), Some(1));
        assert_eq!(s.top_l(), Some(4));
        assert_eq!(s.top_r(), Some(5));
        assert_eq!(stack(3).top_l(), None);
        assert_eq!(s.rtop(2), None);
        assert_eq!(s.rbot(2), None);
    }

    #[test]
    fn push_extends_existing_top_block() {
        let mut s = stack(7);
        s.push_lr(1, 7);
        s.push_lr(1, 6);
        assert_eq!(s.set_r(1).collect::<Vec<_>>(), vec![6, 7]);
        assert_eq!(s.find_l(7), Ok(1));
        s.push_lr(3, 5);
        assert_eq!(s.set_r(3).collect::<Vec<_>>(), vec![5]);
        assert_eq!(s.set_r(1).collect::<Vec<_>>(), vec![6, 7]);
        assert_eq!(s.find_l(6), Ok(1));
    }

    #[test]
    fn minimum_sweep_stack_tracks_prefix_minima() {
        // L-R-: L holds running minima, R holds positions.
        let p = [9usize, 5, 7, 2, 8];
        let mut s = LrStack::with_find(10, OrderType::L_MINUS_R_MINUS);
        s.set_checking(true);
        for (h, &v) in p.iter().enumerate() {
            s.pop_l(v);
            s.push_lr(v, h);
            for i in 0..=h {
                let want = *p[i..=h].iter().min().unwrap();
                assert_eq!(s.find_l(i), Ok(want));
            }
        }
    }

    #[test]
    fn increasing_l_orders_mirror() {
        let p = [1usize, 5, 3, 6, 2];
        let mut s = LrStack::with_find(10, OrderType::L_PLUS_R_MINUS);
        s.set_checking(true);
        for (h, &v) in p.iter().enumerate() {
            s.pop_l(v);
            s.push_lr(v, h);
            for i in 0..=h {
                assert_eq!(s.find_l(i), Ok(*p[i..=h].iter().max().unwrap()));
            }
        }
        let mut pp = LrStack::new(10, OrderType::L_PLUS_R_PLUS);
        pp.set_checking(true);
        pp.push_lr(2, 8);
        pp.pop_l(5);
        assert_eq!(pp.iter_l().collect::<Vec<_>>(), vec![5]);
        pp.push_lr(5, 4);
        pp.pop_r(6);
        assert_eq!(pp.iter_r().collect::<Vec<_>>(), vec![8]);
        assert_eq!(pp.set_r(5).collect::<Vec<_>>(), vec![8]);
    }

    proptest! {
        // Drive an L-R+ stack with the operation pattern of the interval search
        // over arbitrary bounds and check every invariant plus find_l.
        #[test]
        fn search_shaped_sequences_keep_invariants(
            bounds in prop::collection::vec((0usize..20, 0usize..22), 1..20)
        ) {
            let n = bounds.len() + 1;
            let mut s = LrStack::with_find(n + 2, OrderType::L_MINUS_R_PLUS);
            s.set_checking(true);
            for (i, &(lo, hi)) in bounds.iter().enumerate() {
                let t = n - 1 - i;
                let b = lo.min(t);
                let big = hi.clamp(t + 1, n + 1);
                s.pop_l(b);
                s.pop_r(big);
                if big == t + 1 {
                    s.push_lr(b, t + 1);
                }
                prop_assert!(s.verify().is_ok(), "{:?}", s.verify());
                let cells: Vec<usize> = s.iter_r().collect();
                for x in cells {
                    let scan = s.find_l_scan(x);
                    prop_assert_eq!(s.find_l(x).ok(), scan);
                }
            }
            prop_assert!(s.counters().pushes() <= 2 * (n as u64 + 1));
        }
    }
}
