//! Signed permutations, problem instances and interval classes.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Orientation of an element inside a signed permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    /// Sign product: `Plus` is the identity, two `Minus` cancel.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("no permutations given")]
    NoPermutations,
    #[error("permutation {perm} is empty")]
    Empty { perm: usize },
    #[error("permutation {perm} has length {found}, expected {expected}")]
    LengthMismatch {
        perm: usize,
        expected: usize,
        found: usize,
    },
    #[error("permutation {perm}: element {element} is outside 1..={n}")]
    OutOfRange { perm: usize, element: i64, n: usize },
    #[error("permutation {perm}: element {element} occurs more than once")]
    DuplicateElement { perm: usize, element: usize },
    #[error("permutation {perm} must start with +1 and end with +{n} for conserved intervals")]
    ConservedEndpointViolation { perm: usize, n: usize },
    #[error("the first permutation is not the positive identity")]
    NotIdentity,
}

/// A permutation of `1..=n` with one sign per element.
///
/// Signs are indexed by element, not by position: `sign_of(e)` is the sign
/// carried by the integer `e` wherever it sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    values: Vec<usize>,
    // index 0 unused in both
    signs: Vec<Sign>,
    // u32 keeps the random lookups of the bound sweeps in fewer cache lines
    inverse: Vec<u32>,
}

impl SignedPermutation {
    /// Builds from signed integers such as `[1, -3, -2, 6]`.
    pub fn from_signed(raw: &[i64]) -> Result<Self, ValidationError> {
        Self::from_signed_indexed(raw, 1)
    }

    fn from_signed_indexed(raw: &[i64], perm: usize) -> Result<Self, ValidationError> {
        let n = raw.len();
        if n == 0 {
            return Err(ValidationError::Empty { perm });
        }
        let mut values = Vec::with_capacity(n);
        let mut signs = vec![Sign::Plus; n + 1];
        let mut inverse = vec![0u32; n + 1];
        for (pos, &v) in raw.iter().enumerate() {
            let e = v.unsigned_abs() as usize;
            if v == 0 || e > n {
                return Err(ValidationError::OutOfRange {
                    perm,
                    element: v,
                    n,
                });
            }
            if inverse[e] != 0 {
                return Err(ValidationError::DuplicateElement { perm, element: e });
            }
            inverse[e] = u32::try_from(pos + 1).expect("permutation longer than u32::MAX");
            signs[e] = if v < 0 { Sign::Minus } else { Sign::Plus };
            values.push(e);
        }
        Ok(SignedPermutation {
            values,
            signs,
            inverse,
        })
    }

    /// Builds from element order and element-indexed signs (`signs[e - 1]`).
    pub fn from_parts(values: Vec<usize>, signs_by_element: &[Sign]) -> Result<Self, ValidationError> {
        let n = values.len();
        if signs_by_element.len() != n {
            return Err(ValidationError::LengthMismatch {
                perm: 1,
                expected: n,
                found: signs_by_element.len(),
            });
        }
        let raw: Vec<i64> = values
            .iter()
            .map(|&e| {
                let s = signs_by_element.get(e.wrapping_sub(1)).copied();
                match s {
                    Some(Sign::Minus) => -(e as i64),
                    _ => e as i64,
                }
            })
            .collect();
        Self::from_signed(&raw)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            values: (1..=n).collect(),
            signs: vec![Sign::Plus; n + 1],
            inverse: (0..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Elements in positional order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Element at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1]
    }

    /// 1-based position of element `e`.
    pub fn position_of(&self, e: usize) -> usize {
        self.inverse[e] as usize
    }

    pub fn sign_of(&self, e: usize) -> Sign {
        self.signs[e]
    }

    /// Signed integers in positional order, the inverse of [`from_signed`](Self::from_signed).
    pub fn to_signed(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|&e| match self.signs[e] {
                Sign::Plus => e as i64,
                Sign::Minus => -(e as i64),
            })
            .collect()
    }

    pub fn is_positive_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &e)| e == i + 1)
            && self.signs[1..].iter().all(|s| s.is_positive())
    }

    fn has_conserved_endpoints(&self) -> bool {
        let n = self.len();
        self.values[0] == 1
            && self.signs[1].is_positive()
            && self.values[n - 1] == n
            && self.signs[n].is_positive()
    }
}

/// An interval `(t..x)` of the identity, i.e. the value set `{t, ..., x}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub t: usize,
    pub x: usize,
}

impl Interval {
    pub fn new(t: usize, x: usize) -> Self {
        debug_assert!(t < x, "interval needs t < x, got ({t}..{x})");
        Interval { t, x }
    }

    pub fn len(&self) -> usize {
        self.x - self.t + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.t <= other.t && other.x <= self.x
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}..{})", self.t, self.x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalClass {
    Common,
    Nested,
    Conserved,
    IrreducibleCommon,
    SameSignCommon,
    MaximalNested,
    IrreducibleConserved,
}

impl IntervalClass {
    pub const ALL: [IntervalClass; 7] = [
        IntervalClass::Common,
        IntervalClass::Nested,
        IntervalClass::Conserved,
        IntervalClass::IrreducibleCommon,
        IntervalClass::SameSignCommon,
        IntervalClass::MaximalNested,
        IntervalClass::IrreducibleConserved,
    ];

    /// Whether the class requires `+1 ... +n` framing of every permutation.
    pub fn needs_conserved_endpoints(self) -> bool {
        matches!(
            self,
            IntervalClass::Conserved | IntervalClass::IrreducibleConserved
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            IntervalClass::Common => "common",
            IntervalClass::Nested => "nested",
            IntervalClass::Conserved => "conserved",
            IntervalClass::IrreducibleCommon => "irreducible-common",
            IntervalClass::SameSignCommon => "same-sign-common",
            IntervalClass::MaximalNested => "maximal-nested",
            IntervalClass::IrreducibleConserved => "irreducible-conserved",
        }
    }
}

impl fmt::Display for IntervalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown interval class `{0}`")]
pub struct UnknownClass(pub String);

impl FromStr for IntervalClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        IntervalClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// K signed permutations over `1..=n`, relabeled so that the first one is the
/// positive identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    n: usize,
    perms: Vec<SignedPermutation>,
    /// Signs the first permutation carried before relabeling, by new label.
    reference_signs: Vec<Sign>,
    conserved_endpoints: bool,
}

impl ProblemInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.perms.len()
    }

    /// Normalized permutations; `perms()[0]` is the positive identity.
    pub fn perms(&self) -> &[SignedPermutation] {
        &self.perms
    }

    /// Sign that element `e` carried in the first permutation before
    /// normalization. Only same-sign intervals look at this.
    pub fn reference_sign(&self, e: usize) -> Sign {
        self.reference_signs[e]
    }

    /// Whether every input permutation started with +1 and ended with +n.
    pub fn has_conserved_endpoints(&self) -> bool {
        self.conserved_endpoints
    }

    pub fn supports(&self, class: IntervalClass) -> bool {
        !class.needs_conserved_endpoints() || self.conserved_endpoints
    }

    /// The permutations as they would be written by a user: normalized
    /// permutations with the reference signs folded back onto every row.
    pub fn denormalized(&self) -> Vec<SignedPermutation> {
        self.perms
            .iter()
            .map(|p| {
                let signs: Vec<Sign> = (1..=self.n)
                    .map(|e| p.sign_of(e).times(self.reference_signs[e]))
                    .collect();
                SignedPermutation::from_parts(p.values.clone(), &signs)
                    .expect("relabeling keeps a permutation")
            })
            .collect()
    }
}

/// Parses raw signed rows into signed permutations over a common `1..=n`.
pub fn parse_permutations(raw: &[Vec<i64>]) -> Result<Vec<SignedPermutation>, ValidationError> {
    let first = raw.first().ok_or(ValidationError::NoPermutations)?;
    let n = first.len();
    raw.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.is_empty() {
                return Err(ValidationError::Empty { perm: i + 1 });
            }
            if row.len() != n {
                return Err(ValidationError::LengthMismatch {
                    perm: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            SignedPermutation::from_signed_indexed(row, i + 1)
        })
        .collect()
}

/// Relabels every element by its position in the first permutation.
///
/// Signs are made relative to the first permutation: the new sign of `e` in
/// `P_k` is its old sign times its old sign in `P_1`, so `P_1` becomes the
/// positive identity and "same sign as in `P_1`" is preserved. The original
/// `P_1` signs are kept as reference signs.
pub fn renumber(perms: Vec<SignedPermutation>) -> Result<ProblemInstance, ValidationError> {
    let first = perms.first().ok_or(ValidationError::NoPermutations)?;
    let n = first.len();
    for (i, p) in perms.iter().enumerate() {
        if p.len() != n {
            return Err(ValidationError::LengthMismatch {
                perm: i + 1,
                expected: n,
                found: p.len(),
            });
        }
    }
    let conserved_endpoints = perms.iter().all(SignedPermutation::has_conserved_endpoints);
    if first.is_positive_identity() {
        return Ok(ProblemInstance {
            n,
            perms,
            reference_signs: vec![Sign::Plus; n + 1],
            conserved_endpoints,
        });
    }

    let label = |e: usize| first.position_of(e);
    let mut reference_signs = vec![Sign::Plus; n + 1];
    for e in 1..=n {
        reference_signs[label(e)] = first.sign_of(e);
    }
    let relabeled = perms
        .iter()
        .map(|p| {
            let values: Vec<usize> = p.values.iter().map(|&e| label(e)).collect();
            let mut signs = vec![Sign::Plus; n];
            for e in 1..=n {
                signs[label(e) - 1] = p.sign_of(e).times(first.sign_of(e));
            }
            SignedPermutation::from_parts(values, &signs).expect("relabeling keeps a permutation")
        })
        .collect();
    Ok(ProblemInstance {
        n,
        perms: relabeled,
        reference_signs,
        conserved_endpoints,
    })
}

/// Parses, checks class preconditions and normalizes raw signed rows.
pub fn validate(raw: &[Vec<i64>], class: IntervalClass) -> Result<ProblemInstance, ValidationError> {
    let perms = parse_permutations(raw)?;
    if class.needs_conserved_endpoints() {
        let n = perms[0].len();
        if let Some(i) = perms.iter().position(|p| !p.has_conserved_endpoints()) {
            return Err(ValidationError::ConservedEndpointViolation { perm: i + 1, n });
        }
    }
    renumber(perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(raw: &[i64]) -> SignedPermutation {
        SignedPermutation::from_signed(raw).unwrap()
    }

    #[test]
    fn validate_accepts_well_formed_input() {
        let inst = validate(&[vec![1, 2, 3], vec![3, 2, 1]], IntervalClass::Common).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.k(), 2);
        assert!(inst.perms()[0].is_positive_identity());
    }

    #[test]
    fn validate_rejects_duplicates_and_out_of_range() {
        assert_eq!(
            validate(&[vec![1, 2], vec![2, 2]], IntervalClass::Common),
            Err(ValidationError::DuplicateElement { perm: 2, element: 2 })
        );
        assert!(matches!(
            validate(&[vec![1, 2], vec![1, 3]], IntervalClass::Common),
            Err(ValidationError::OutOfRange { perm: 2, element: 3, .. })
        ));
        assert!(matches!(
            validate(&[vec![1, 0]], IntervalClass::Common),
            Err(ValidationError::OutOfRange { element: 0, .. })
        ));
        assert!(matches!(
            validate(&[vec![1, 2], vec![1, 2, 3]], IntervalClass::Common),
            Err(ValidationError::LengthMismatch { perm: 2, .. })
        ));
        assert_eq!(validate(&[], IntervalClass::Common), Err(ValidationError::NoPermutations));
        assert_eq!(
            validate(&[vec![]], IntervalClass::Common),
            Err(ValidationError::Empty { perm: 1 })
        );
    }

    #[test]
    fn conserved_requires_positive_endpoints() {
        assert_eq!(
            validate(&[vec![1, 2, 3], vec![-1, 2, 3]], IntervalClass::Conserved),
            Err(ValidationError::ConservedEndpointViolation { perm: 2, n: 3 })
        );
        assert!(validate(&[vec![1, 2, 3], vec![-1, 2, 3]], IntervalClass::Common).is_ok());
        assert!(validate(&[vec![1, -2, 3], vec![1, 2, 3]], IntervalClass::IrreducibleConserved).is_ok());
    }

    #[test]
    fn identity_renumbering_is_a_no_op() {
        let p2 = perm(&[7, 2, 1, 3, 6, 4, 5]);
        let inst = renumber(vec![SignedPermutation::identity(7), p2.clone()]).unwrap();
        assert_eq!(inst.perms()[1], p2);
    }

    #[test]
    fn renumber_relabels_by_position_in_first() {
        let inst = renumber(vec![perm(&[2, 1, 3]), perm(&[3, 2, 1])]).unwrap();
        assert!(inst.perms()[0].is_positive_identity());
        assert_eq!(inst.perms()[1].values(), &[3, 1, 2]);
        assert!(inst.perms()[1].to_signed().iter().all(|&v| v > 0));
    }

    #[test]
    fn renumber_propagates_signs_multiplicatively() {
        let inst = renumber(vec![perm(&[1, -2]), perm(&[-2, 1])]).unwrap();
        assert_eq!(inst.perms()[0].to_signed(), vec![1, 2]);
        assert_eq!(inst.perms()[1].to_signed(), vec![2, 1]);
        assert_eq!(inst.reference_sign(2), Sign::Minus);
        assert_eq!(inst.denormalized()[1].to_signed(), vec![-2, 1]);
    }

    #[test]
    fn renumber_is_idempotent() {
        let inst = renumber(vec![perm(&[3, -1, 2, 4]), perm(&[-4, 2, 1, 3]), perm(&[2, 3, -4, 1])]).unwrap();
        let again = renumber(inst.perms().to_vec()).unwrap();
        assert_eq!(again.perms(), inst.perms());
    }

    #[test]
    fn single_element_and_single_permutation() {
        let inst = validate(&[vec![1]], IntervalClass::Common).unwrap();
        assert_eq!((inst.n(), inst.k()), (1, 1));
        let inst = validate(&[vec![-1]], IntervalClass::Common).unwrap();
        assert!(inst.perms()[0].is_positive_identity());
    }

    #[test]
    fn class_names_round_trip() {
        for c in IntervalClass::ALL {
            assert_eq!(c.name().parse::<IntervalClass>().unwrap(), c);
        }
        assert_eq!("Same_Sign_Common".parse::<IntervalClass>().unwrap(), IntervalClass::SameSignCommon);
        assert!("bogus".parse::<IntervalClass>().is_err());
    }
}
