//! Random instances for tests, benchmarks and the `gen` command.

use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub n: usize,
    pub k: usize,
    /// Random signs on every element.
    pub signed: bool,
    /// Every row starts with +1 and ends with +n.
    pub conserved: bool,
}

/// Raw signed rows. Half of the rows (on average) are a few signed reversals
/// away from the first row, the rest are uniform, so that small instances
/// have a fair number of non-trivial intervals.
pub fn random_rows<R: Rng + ?Sized>(rng: &mut R, cfg: GenConfig) -> Vec<Vec<i64>> {
    let n = cfg.n;
    let inner = if cfg.conserved {
        let lo = n.min(1);
        lo..n.saturating_sub(1).max(lo)
    } else {
        0..n
    };
    let mut first: Vec<i64> = (1..=n as i64).collect();
    first[inner.clone()].shuffle(rng);
    if cfg.signed {
        randomize_signs(rng, &mut first[inner.clone()]);
    }
    let mut rows = vec![first.clone()];
    for _ in 1..cfg.k {
        let mut row = first.clone();
        if rng.gen_bool(0.5) && inner.len() >= 2 {
            for _ in 0..rng.gen_range(1..=3) {
                let a = rng.gen_range(inner.clone());
                let b = rng.gen_range(inner.clone());
                let (a, b) = (a.min(b), a.max(b));
                row[a..=b].reverse();
                if cfg.signed {
                    row[a..=b].iter_mut().for_each(|v| *v = -*v);
                }
            }
        } else {
            row[inner.clone()].shuffle(rng);
            if cfg.signed {
                randomize_signs(rng, &mut row[inner.clone()]);
            }
        }
        rows.push(row);
    }
    rows
}

fn randomize_signs<R: Rng + ?Sized>(rng: &mut R, row: &mut [i64]) {
    for v in row {
        *v = if rng.gen_bool(0.5) { v.abs() } else { -v.abs() };
    }
}
