use std::io::{self, Write};

use common_intervals::{IntervalReport, OpCounters};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonCounters {
    push_l: u64,
    push_r: u64,
    pop_l: u64,
    pop_r: u64,
}

impl From<OpCounters> for JsonCounters {
    fn from(c: OpCounters) -> Self {
        JsonCounters {
            push_l: c.push_l,
            push_r: c.push_r,
            pop_l: c.pop_l,
            pop_r: c.pop_r,
        }
    }
}

// field order is the key order of the output
#[derive(Serialize)]
struct JsonReport<'a> {
    class: &'a str,
    n: usize,
    k: usize,
    intervals: Vec<[usize; 2]>,
    count: usize,
    op_counters: JsonCounters,
}

/// `t x` per line in emission order, then `# N=<count>` if `footer`.
pub fn write_text(out: &mut impl Write, report: &IntervalReport, footer: bool) -> io::Result<()> {
    for iv in &report.intervals {
        writeln!(out, "{} {}", iv.t, iv.x)?;
    }
    if footer {
        writeln!(out, "# N={}", report.count())?;
    }
    Ok(())
}

pub fn write_json(out: &mut impl Write, report: &IntervalReport) -> io::Result<()> {
    let json = JsonReport {
        class: report.class.name(),
        n: report.n,
        k: report.k,
        intervals: report.intervals.iter().map(|iv| [iv.t, iv.x]).collect(),
        count: report.count(),
        op_counters: report.op_counters.into(),
    };
    serde_json::to_writer(&mut *out, &json)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use common_intervals::{run, validate, IntervalClass};

    fn report(rows: &[Vec<i64>], class: IntervalClass) -> IntervalReport {
        run(&validate(rows, class).unwrap(), class).unwrap()
    }

    #[test]
    fn text_lists_pairs_then_count() {
        let rows = vec![(1..=7).collect(), vec![7, 2, 1, 3, 6, 4, 5]];
        let mut buf = Vec::new();
        write_text(&mut buf, &report(&rows, IntervalClass::Common), true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[6], "1 7");
        assert_eq!(lines[7], "# N=7");
    }

    #[test]
    fn empty_report_has_only_the_footer() {
        let mut buf = Vec::new();
        write_text(&mut buf, &report(&[vec![1]], IntervalClass::Common), true).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "# N=0\n");
    }

    #[test]
    fn json_keys_keep_their_order() {
        let rows = vec![(1..=7).collect(), vec![1, -3, -2, 6, -4, -5, 7]];
        let mut buf = Vec::new();
        write_json(&mut buf, &report(&rows, IntervalClass::Conserved)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let keys = ["\"class\"", "\"n\"", "\"k\"", "\"intervals\"", "\"count\"", "\"op_counters\""];
        let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["class"], "conserved");
        assert_eq!(value["count"], 2);
        assert_eq!(value["intervals"], serde_json::json!([[2, 3], [1, 7]]));
    }
}
