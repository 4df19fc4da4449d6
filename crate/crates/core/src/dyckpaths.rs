//! t-Dyck paths, their correspondence with t-divisible flags, and
//! Fuss–Catalan numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::demazure::{tflag_ascent_check, PermutationWord};
use crate::error::{Error, Result};
use crate::partitions::{Flag, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// (0, t)
    U,
    /// (1, 0)
    R,
}

/// Steps from (0,0) to (tn,tn); validity is checked by [`is_valid_path`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TDyckPath {
    pub t: usize,
    pub n: usize,
    #[serde(with = "step_string")]
    pub steps: Vec<Step>,
}

mod step_string {
    use super::{parse_steps, steps_to_string, Step};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(steps: &[Step], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&steps_to_string(steps))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Step>, D::Error> {
        let text = String::deserialize(d)?;
        parse_steps(&text).map_err(serde::de::Error::custom)
    }
}

fn steps_to_string(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| match s {
            Step::U => 'U',
            Step::R => 'R',
        })
        .collect()
}

pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            'U' | 'u' => Ok(Step::U),
            'R' | 'r' => Ok(Step::R),
            other => Err(Error::Parse(format!("unexpected step {other:?}"))),
        })
        .collect()
}

impl TDyckPath {
    pub fn new(t: usize, n: usize, steps: Vec<Step>) -> Self {
        TDyckPath { t, n, steps }
    }

    pub fn parse(t: usize, n: usize, text: &str) -> Result<Self> {
        Ok(TDyckPath::new(t, n, parse_steps(text)?))
    }
}

impl fmt::Display for TDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_to_string(&self.steps))
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_steps(s)?.as_slice() {
            [step] => Ok(*step),
            _ => Err(Error::Parse(format!("expected a single step, got {s:?}"))),
        }
    }
}

/// tn R steps, n U steps, and x ≤ y after every step.
pub fn is_valid_path(p: &TDyckPath) -> bool {
    if p.t == 0 || p.n == 0 || p.steps.len() != (p.t + 1) * p.n {
        return false;
    }
    let (mut x, mut y) = (0usize, 0usize);
    for step in &p.steps {
        match step {
            Step::U => y += p.t,
            Step::R => x += 1,
        }
        if x > y {
            return false;
        }
    }
    x == p.t * p.n && y == p.t * p.n
}

/// All valid paths, lexicographic with U < R.
pub fn enumerate_paths(t: usize, n: usize) -> Vec<TDyckPath> {
    fn rec(t: usize, n: usize, ups: usize, rights: usize, steps: &mut Vec<Step>, out: &mut Vec<TDyckPath>) {
        if ups == n && rights == t * n {
            out.push(TDyckPath::new(t, n, steps.clone()));
            return;
        }
        if ups < n {
            steps.push(Step::U);
            rec(t, n, ups + 1, rights, steps, out);
            steps.pop();
        }
        if rights < t * ups {
            steps.push(Step::R);
            rec(t, n, ups, rights + 1, steps, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    if t > 0 && n > 0 {
        rec(t, n, 0, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// binom((t+1)n, n) / (tn + 1).
pub fn fuss_catalan(t: usize, n: usize) -> BigInt {
    let (t, n) = (t as u64, n as u64);
    let numerator = binomial((t + 1) * n, n);
    let denominator = BigInt::from(t * n + 1);
    assert!((&numerator % &denominator).is_zero(), "Fuss–Catalan division is exact");
    numerator / denominator
}

/// a_k is the height at which the k-th R step is taken.
pub fn path_to_flag(p: &TDyckPath) -> Result<Flag> {
    if !is_valid_path(p) {
        return Err(Error::InvalidPath(p.to_string()));
    }
    let mut y = 0;
    let mut entries = Vec::with_capacity(p.t * p.n);
    for step in &p.steps {
        match step {
            Step::U => y += p.t,
            Step::R => entries.push(y),
        }
    }
    Flag::new(entries)
}

/// Inverse of [`path_to_flag`]: U steps are inserted until the height
/// reaches a_k, then the k-th R step is taken.
pub fn flag_to_path(a: &Flag, twist: Twist) -> Result<TDyckPath> {
    let (t, n, tn) = (twist.t(), twist.n(), twist.tn());
    if a.len() != tn {
        return Err(Error::FlagTooShort {
            length: a.len(),
            required: tn,
        });
    }
    for (k, &v) in a.entries().iter().enumerate() {
        if v % t != 0 {
            return Err(Error::FlagNotDivisible { position: k + 1, value: v, t });
        }
        if v < k + 1 || v > tn {
            return Err(Error::FlagOutOfRange {
                position: k + 1,
                value: v,
                limit: tn,
            });
        }
    }
    let mut steps = Vec::with_capacity((t + 1) * n);
    let mut y = 0;
    for &v in a.entries() {
        while y < v {
            steps.push(Step::U);
            y += t;
        }
        steps.push(Step::R);
    }
    while y < tn {
        steps.push(Step::U);
        y += t;
    }
    Ok(TDyckPath::new(t, n, steps))
}

/// Brute-force count of w ∈ S_{tn} that avoid 312 and have t | w_k at every
/// ascent k.
pub fn count_qualified_permutations(t: usize, n: usize) -> Result<BigInt> {
    const LIMIT: usize = 10;
    let tn = t * n;
    if tn > LIMIT {
        return Err(Error::SizeGuard { size: tn, limit: LIMIT });
    }
    let count = PermutationWord::all(tn)
        .iter()
        .filter(|w| tflag_ascent_check(w, t))
        .count();
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(t: usize, n: usize, s: &str) -> TDyckPath {
        TDyckPath::parse(t, n, s).unwrap()
    }

    fn tw(t: usize, n: usize) -> Twist {
        Twist::new(t, n).unwrap()
    }

    #[test]
    fn validity() {
        assert!(is_valid_path(&path(2, 1, "URR")));
        assert!(!is_valid_path(&path(2, 1, "RUR")));
        assert!(is_valid_path(&path(1, 1, "UR")));
        assert!(!is_valid_path(&path(2, 1, "UR")));
        assert!(!is_valid_path(&path(1, 1, "UUR")));
        assert!(TDyckPath::parse(1, 1, "UX").is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_paths(2, 1).len(), 1);
        assert_eq!(enumerate_paths(1, 3).len(), 5);
        assert_eq!(enumerate_paths(2, 2).len(), 3);
        let paths: Vec<String> = enumerate_paths(1, 2).iter().map(ToString::to_string).collect();
        assert_eq!(paths, ["UURR", "URUR"]);
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(1, 4), BigInt::from(14));
        assert_eq!(fuss_catalan(5, 0), BigInt::one());
        assert_eq!(fuss_catalan(2, 2), BigInt::from(3));
        assert_eq!(fuss_catalan(2, 3), BigInt::from(12));
    }

    #[test]
    fn flag_examples() {
        let f = |v: &[usize]| Flag::new(v.to_vec()).unwrap();
        assert_eq!(path_to_flag(&path(2, 1, "URR")).unwrap(), f(&[2, 2]));
        assert_eq!(path_to_flag(&path(2, 2, "URURRR")).unwrap(), f(&[2, 4, 4, 4]));
        assert_eq!(flag_to_path(&f(&[2, 2]), tw(2, 1)).unwrap(), path(2, 1, "URR"));
        assert!(path_to_flag(&path(2, 1, "RUR")).is_err());
        assert!(matches!(
            flag_to_path(&f(&[2, 3]), tw(2, 1)),
            Err(Error::FlagNotDivisible { position: 2, .. })
        ));
        assert!(matches!(
            flag_to_path(&f(&[0, 2]), tw(2, 1)),
            Err(Error::FlagOutOfRange { position: 1, .. })
        ));
    }

    #[test]
    fn serde_uses_step_string() {
        let p = path(2, 1, "URR");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"t":2,"n":1,"steps":"URR"}"#);
        assert_eq!(serde_json::from_str::<TDyckPath>(&json).unwrap(), p);
    }

    #[test]
    fn qualified_counts() {
        assert_eq!(count_qualified_permutations(1, 3).unwrap(), BigInt::from(5));
        assert_eq!(count_qualified_permutations(2, 1).unwrap(), BigInt::one());
        assert_eq!(count_qualified_permutations(2, 2).unwrap(), BigInt::from(3));
        assert!(count_qualified_permutations(4, 3).is_err());
    }
}
