//! Common intervals of K signed permutations and six of their subclasses,
//! found by a single right-to-left sweep over a pair of linked monotone
//! stacks, in time linear in the input plus the output.
//!
//! ```
//! use common_intervals::{search, validate, IntervalClass};
//!
//! let rows = vec![vec![1, 2, 3, 4, 5, 6, 7], vec![7, 2, 1, 3, 6, 4, 5]];
//! let inst = validate(&rows, IntervalClass::Nested).unwrap();
//! let report = search::run(&inst, IntervalClass::MaximalNested).unwrap();
//! let found: Vec<String> = report.intervals.iter().map(|i| i.to_string()).collect();
//! assert_eq!(found, ["(3..6)", "(1..3)"]);
//! ```

pub mod gen;
pub mod instance;
pub mod lr_stack;
pub mod oracle;
pub mod profile;
pub mod search;
pub mod union_find;

pub use instance::{
    parse_permutations, renumber, validate, Interval, IntervalClass, ProblemInstance, Sign, SignedPermutation,
    UnknownClass, ValidationError,
};
pub use lr_stack::{LrStack, OpCounters, OrderType};
pub use profile::{compute_bounds, compute_inf, compute_sup, MinMaxProfile, QuerySet};
pub use search::{run, IntervalReport, SearchError};
