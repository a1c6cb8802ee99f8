//! Greedy reduction of a failing instance, for oracle mismatch reports.

/// Drops rows (never the first) and elements while `fails` keeps holding,
/// until no single removal does. With `keep_endpoints` the elements `1` and
/// `n` stay, so endpoint-framed instances remain framed.
pub fn shrink(rows: Vec<Vec<i64>>, keep_endpoints: bool, fails: impl Fn(&[Vec<i64>]) -> bool) -> Vec<Vec<i64>> {
    let mut cur = rows;
    loop {
        let mut progressed = false;
        let mut i = 1;
        while i < cur.len() {
            let mut cand = cur.clone();
            cand.remove(i);
            if fails(&cand) {
                cur = cand;
                progressed = true;
            } else {
                i += 1;
            }
        }
        let n = cur.first().map_or(0, Vec::len);
        let (lo, hi) = if keep_endpoints { (2, n.saturating_sub(1)) } else { (1, n) };
        // going down keeps the labels of untried elements stable
        for e in (lo..=hi).rev() {
            if cur[0].len() <= 1 {
                break;
            }
            let cand = remove_element(&cur, e as i64);
            if fails(&cand) {
                cur = cand;
                progressed = true;
            }
        }
        if !progressed {
            return cur;
        }
    }
}

/// Deletes `e` from every row and closes the gap in the labels.
pub fn remove_element(rows: &[Vec<i64>], e: i64) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .filter(|v| v.abs() != e)
                .map(|&v| if v.abs() > e { v - v.signum() } else { v })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removing_relabels() {
        let rows = vec![vec![1, 2, 3, 4], vec![-4, 2, -3, 1]];
        assert_eq!(remove_element(&rows, 2), vec![vec![1, 2, 3], vec![-3, -2, 1]]);
    }

    #[test]
    fn reduces_to_the_failing_core() {
        // "fails" whenever some row other than the first has a negative element
        let rows = vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 3, 2, -4, 5, 6],
            vec![6, 5, 4, 3, 2, 1],
        ];
        let fails = |r: &[Vec<i64>]| r.iter().skip(1).any(|row| row.iter().any(|&v| v < 0));
        let small = shrink(rows.clone(), false, fails);
        assert_eq!(small, vec![vec![1], vec![-1]]);
        let framed = shrink(rows, true, fails);
        assert_eq!(framed, vec![vec![1, 2, 3], vec![1, -2, 3]]);
    }
}
