//! MinMax-profiles: per adjacent pair `(t, t+1)`, the smallest and largest
//! values trapped between `t` and `t+1` in some permutation, turned into the
//! lower/upper bounds that drive the interval search.

use thiserror::Error;

use crate::instance::{IntervalClass, ProblemInstance, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("query ({q1}, {q2}) is outside 0 <= q1 <= q2 <= {n}")]
    QueryOutOfRange { q1: usize, q2: usize, n: usize },
    #[error("input is not a permutation of 1..={0}")]
    NotAPermutation(usize),
}

/// Position pairs `(q1, q2)` asking for the extremum of `p[q1..=q2]`.
/// Position 0 is a sentinel slot in front of the first element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuerySet {
    pub queries: Vec<(usize, usize)>,
}

impl QuerySet {
    pub fn new(queries: Vec<(usize, usize)>) -> Self {
        QuerySet { queries }
    }

    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    /// Query indices in lexicographic `(q2, q1)` order, by two stable
    /// counting-sort passes over keys in `0..=n`.
    pub fn sorted_order(&self, n: usize) -> Vec<usize> {
        let by_q1 = counting_sort(0..self.queries.len(), n, |i| self.queries[i].0);
        counting_sort(by_q1.into_iter(), n, |i| self.queries[i].1)
    }

    fn check(&self, n: usize) -> Result<(), ProfileError> {
        match self.queries.iter().find(|&&(q1, q2)| q1 > q2 || q2 > n) {
            Some(&(q1, q2)) => Err(ProfileError::QueryOutOfRange { q1, q2, n }),
            None => Ok(()),
        }
    }
}

fn counting_sort(
    items: impl Iterator<Item = usize> + Clone,
    max_key: usize,
    key: impl Fn(usize) -> usize,
) -> Vec<usize> {
    let mut start = vec![0usize; max_key + 2];
    for i in items.clone() {
        start[key(i) + 1] += 1;
    }
    for k in 1..start.len() {
        start[k] += start[k - 1];
    }
    let mut out = vec![0usize; start[max_key + 1]];
    for i in items {
        let k = key(i);
        out[start[k]] = i;
        start[k] += 1;
    }
    out
}

fn check_permutation(p: &[usize]) -> Result<(), ProfileError> {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    for &v in p {
        if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
            return Err(ProfileError::NotAPermutation(n));
        }
    }
    Ok(())
}

/// Offline range minima over a permutation of `1..=n`.
///
/// `answer[i]` is `min p[q1..=q2]` for the i-th query, with 1-based positions
/// and `n + 1` standing at position 0. One left-to-right sweep; queries are
/// answered in `(q2, q1)` order.
pub fn compute_inf(p: &[usize], queries: &QuerySet) -> Result<Vec<usize>, ProfileError> {
    check_permutation(p)?;
    queries.check(p.len())?;
    Ok(answer_sorted(p, queries, Extremum::Min))
}

/// Offline range maxima; mirror of [`compute_inf`] with sentinel 0.
pub fn compute_sup(p: &[usize], queries: &QuerySet) -> Result<Vec<usize>, ProfileError> {
    check_permutation(p)?;
    queries.check(p.len())?;
    Ok(answer_sorted(p, queries, Extremum::Max))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Extremum {
    Min,
    Max,
}

impl Extremum {
    fn sentinel(self, n: usize) -> usize {
        match self {
            Extremum::Min => n + 1,
            Extremum::Max => 0,
        }
    }

    /// Whether `above` on L must give way to the incoming `value`.
    fn blocks(self, above: u32, value: u32) -> bool {
        match self {
            Extremum::Min => above > value,
            Extremum::Max => above < value,
        }
    }
}

/// Marks a root in the parent array; the low bits index its L entry.
const ROOT: u32 = 1 << 31;

/// Stacks at most this deep are searched directly instead of through the
/// union-find, which keeps queries away from the per-position array.
const SHALLOW: usize = 32;

/// An L entry: the value, the first position and root of its block, and the
/// block size.
#[derive(Clone, Copy)]
struct Entry {
    value: u32,
    start: u32,
    root: u32,
    size: u32,
}

/// `S` fused `L-R-` (minimum) or `L+R-` (maximum) LR-stacks of a left-to-right
/// sweep over positions. Every position seen so far sits on R in order, so R
/// is implicit and each block of R is a range of positions. Blocks live in a
/// union-find (by size, with path halving) whose roots point at their L
/// entry instead of at themselves, so the only per-position state is one
/// parent word per side, and the sides of a position share a cache line.
struct PositionSweep<const S: usize> {
    kinds: [Extremum; S],
    l: [Vec<Entry>; S],
    parent: Vec<[u32; S]>,
}

impl<const S: usize> PositionSweep<S> {
    fn new(positions: usize, kinds: [Extremum; S]) -> Self {
        assert!(positions < ROOT as usize, "too many positions");
        PositionSweep {
            kinds,
            l: std::array::from_fn(|_| Vec::new()),
            parent: Vec::with_capacity(positions),
        }
    }

    /// Appends a position holding `values[side]` on each side: pops the
    /// blocking L elements, merges their blocks with the new position and
    /// hands the merged block to the new value.
    fn push(&mut self, values: [u32; S]) {
        let pos = self.parent.len() as u32;
        self.parent.push([0; S]);
        for (side, &value) in values.iter().enumerate() {
            let (mut root, mut size, mut start) = (pos, 1, pos);
            while let Some(&top) = self.l[side].last() {
                if !self.kinds[side].blocks(top.value, value) {
                    break;
                }
                self.l[side].pop();
                let (big, small) = if top.size >= size { (top.root, root) } else { (root, top.root) };
                self.parent[small as usize][side] = big;
                root = big;
                size += top.size;
                start = top.start;
            }
            self.parent[root as usize][side] = ROOT | self.l[side].len() as u32;
            self.l[side].push(Entry { value, start, root, size });
        }
    }

    /// Extremum of positions `q..` up to the last push, on every side.
    fn query(&mut self, q: usize) -> [u32; S] {
        debug_assert!(q < self.parent.len());
        std::array::from_fn(|side| {
            let l = &self.l[side];
            if l.len() <= SHALLOW {
                // blocks are consecutive ranges in stack order
                let i = l.partition_point(|e| e.start as usize <= q);
                return l[i - 1].value;
            }
            let mut x = q;
            loop {
                let p = self.parent[x][side];
                if p & ROOT != 0 {
                    return self.l[side][(p & !ROOT) as usize].value;
                }
                let g = self.parent[p as usize][side];
                if g & ROOT != 0 {
                    return self.l[side][(g & !ROOT) as usize].value;
                }
                self.parent[x][side] = g;
                x = g as usize;
            }
        })
    }
}

fn answer_sorted(p: &[usize], queries: &QuerySet, kind: Extremum) -> Vec<usize> {
    let n = p.len();
    let order = queries.sorted_order(n);
    let mut answers = vec![0usize; queries.len()];
    let mut sweep = PositionSweep::new(n + 1, [kind]);
    let mut due = order.into_iter().peekable();
    for h in 0..=n {
        sweep.push([if h == 0 { kind.sentinel(n) } else { p[h - 1] } as u32]);
        while let Some(&qi) = due.peek() {
            let (q1, q2) = queries.queries[qi];
            if q2 != h {
                break;
            }
            answers[qi] = sweep.query(q1)[0] as usize;
            due.next();
        }
    }
    answers
}

/// Minimum and maximum between `t` and `t + 1` for every `t` in `1..n`
/// (index `t - 1`).
///
/// The pair query for `t` is due at the position of whichever of `t`, `t + 1`
/// comes second, so at position `h` holding `v` only the pairs `(v - 1, v)`
/// and `(v, v + 1)` can be due. No sorting is needed, and both sweeps run in
/// the same pass.
fn pair_extrema(perm: &SignedPermutation, out: &mut [(u32, u32)]) {
    let n = perm.len();
    debug_assert_eq!(out.len(), n.saturating_sub(1));
    let mut sweep = PositionSweep::new(n + 1, [Extremum::Min, Extremum::Max]);
    sweep.push([Extremum::Min.sentinel(n) as u32, Extremum::Max.sentinel(n) as u32]);
    for h in 1..=n {
        let v = perm.at(h);
        sweep.push([v as u32; 2]);
        if v > 1 {
            let q = perm.position_of(v - 1);
            if q < h {
                let [m, big] = sweep.query(q);
                out[v - 2] = (m, big);
            }
        }
        if v < n {
            let q = perm.position_of(v + 1);
            if q < h {
                let [m, big] = sweep.query(q);
                out[v - 1] = (m, big);
            }
        }
    }
}

/// For every `t` in `1..n`, the position pair spanned by `t` and `t + 1` in `p`.
pub fn pair_queries(p: &SignedPermutation) -> QuerySet {
    let n = p.len();
    QuerySet::new(
        (1..n)
            .map(|t| {
                let (a, b) = (p.position_of(t), p.position_of(t + 1));
                (a.min(b), a.max(b))
            })
            .collect(),
    )
}

/// One query set per permutation, in instance order.
pub fn queries_for_profile(instance: &ProblemInstance) -> Vec<QuerySet> {
    instance.perms().iter().map(pair_queries).collect()
}

/// Bounds `b_t <= m_t` and `B_t >= M_t` for every adjacent pair `(t, t+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMaxProfile {
    n: usize,
    // index t - 1 for t in 1..n
    lower: Vec<u32>,
    upper: Vec<u32>,
    extrema: Option<(Vec<u32>, Vec<u32>)>,
}

impl MinMaxProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_t`, for `1 <= t < n`.
    pub fn lower(&self, t: usize) -> usize {
        self.lower[t - 1] as usize
    }

    /// `B_t`, for `1 <= t < n`.
    pub fn upper(&self, t: usize) -> usize {
        self.upper[t - 1] as usize
    }

    /// Aggregated `m_t`, when the profile was built with diagnostics.
    pub fn min_between(&self, t: usize) -> Option<usize> {
        self.extrema.as_ref().map(|(m, _)| m[t - 1] as usize)
    }

    /// Aggregated `M_t`, when the profile was built with diagnostics.
    pub fn max_between(&self, t: usize) -> Option<usize> {
        self.extrema.as_ref().map(|(_, big)| big[t - 1] as usize)
    }

    pub fn lower_bounds(&self) -> &[u32] {
        &self.lower
    }

    pub fn upper_bounds(&self) -> &[u32] {
        &self.upper
    }
}

/// Which bounding functions to derive from the extrema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `b = m`, `B = M`.
    Plain,
    /// Extrema that are not `t` / `t+1` themselves are pushed one step further
    /// out, so only delimiter-compatible pairs survive.
    Conserved,
}

impl From<IntervalClass> for BoundKind {
    fn from(class: IntervalClass) -> Self {
        if class.needs_conserved_endpoints() {
            BoundKind::Conserved
        } else {
            BoundKind::Plain
        }
    }
}

pub fn compute_bounds(instance: &ProblemInstance, class: IntervalClass) -> MinMaxProfile {
    build_profile(instance, class.into(), false)
}

/// Like [`compute_bounds`] but also keeps the aggregated extrema.
pub fn compute_bounds_with_extrema(instance: &ProblemInstance, class: IntervalClass) -> MinMaxProfile {
    build_profile(instance, class.into(), true)
}

fn build_profile(instance: &ProblemInstance, kind: BoundKind, keep_extrema: bool) -> MinMaxProfile {
    let n = instance.n();
    assert!(n < u32::MAX as usize, "too many elements");
    let pairs = n.saturating_sub(1) as u32;
    // the identity contributes m = t, M = t + 1, which is also the K = 1 answer
    let mut lower: Vec<u32> = (1..=pairs).collect();
    let mut upper: Vec<u32> = (2..=pairs + 1).collect();
    let mut extrema = keep_extrema.then(|| (lower.clone(), upper.clone()));
    let mut extrema_k = vec![(0u32, 0u32); pairs as usize];
    for perm in instance.perms().iter().skip(1) {
        pair_extrema(perm, &mut extrema_k);
        for (i, &(m, big)) in extrema_k.iter().enumerate() {
            let t = i as u32 + 1;
            let (u, v) = match kind {
                BoundKind::Plain => (m, big),
                BoundKind::Conserved => (
                    if m == t { m } else { m - 1 },
                    if big == t + 1 { big } else { big + 1 },
                ),
            };
            lower[i] = lower[i].min(u);
            upper[i] = upper[i].max(v);
            if let Some((em, eb)) = extrema.as_mut() {
                em[i] = em[i].min(m);
                eb[i] = eb[i].max(big);
            }
        }
    }
    MinMaxProfile {
        n,
        lower,
        upper,
        extrema,
    }
}
