//! Partitions, skew shapes and flags, together with the beta-number
//! machinery behind t-cores, t-quotients and the residue-regrouping
//! permutation of a partition.
//!
//! Every construction here is relative to a fixed [`Twist`] `(t, n)`: beta
//! sequences always have exactly `tn` entries, so cores, quotients and signs
//! share one convention.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The non-zero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts, l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// True if the Young diagram of `self` contains that of `inner`.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(inner, self)
    }

    /// All partitions fitting in a `rows` x `cols` rectangle, in
    /// reverse-lexicographic order of their parts.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn grow(rows: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if prefix.len() == rows {
                out.push(Partition::new(prefix.clone()).expect("weakly decreasing by construction"));
                return;
            }
            for part in (0..=cap).rev() {
                prefix.push(part);
                grow(rows, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        grow(rows, cols, &mut Vec::with_capacity(rows), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn grow(outer: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            let i = prefix.len();
            if i == outer.len() {
                out.push(Partition::new(prefix.clone()).expect("weakly decreasing by construction"));
                return;
            }
            let cap = prefix.last().map_or(outer[i], |&p| p.min(outer[i]));
            for part in (0..=cap).rev() {
                prefix.push(part);
                grow(outer, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        grow(&self.parts, &mut Vec::with_capacity(self.len()), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// `μ_i ≤ λ_i` for every i, with zero padding.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.parts.iter().enumerate().all(|(i, &p)| p <= outer.part(i))
}

/// The pair λ/μ. Containment is not enforced: determinantal formulas are
/// meaningful (and vanish) for non-contained pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    /// The straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn is_contained(&self) -> bool {
        contains(&self.inner, &self.outer)
    }

    /// Number of boxes of λ/μ, or `None` when μ ⊄ λ.
    pub fn size(&self) -> Option<usize> {
        self.is_contained()
            .then(|| self.outer.size() - self.inner.size())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A weakly increasing sequence of non-negative integers bounding tableau
/// entries row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Flag {
    entries: Vec<usize>,
}

impl Flag {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotAFlag(entries));
        }
        Ok(Flag { entries })
    }

    /// The constant flag `(value, ..., value)`.
    pub fn constant(value: usize, len: usize) -> Self {
        Flag {
            entries: vec![value; len],
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest entry, zero for the empty flag.
    pub fn max(&self) -> usize {
        self.entries.last().copied().unwrap_or(0)
    }

    pub fn require_len(&self, required: usize) -> Result<()> {
        if self.len() < required {
            return Err(Error::FlagTooShort {
                length: self.len(),
                required,
            });
        }
        Ok(())
    }

    /// Every weakly increasing sequence of length `len` drawn from `values`
    /// (which must be sorted ascending), in lexicographic order.
    pub fn all_with_entries(len: usize, values: &[usize]) -> Vec<Flag> {
        fn grow(len: usize, values: &[usize], from: usize, prefix: &mut Vec<usize>, out: &mut Vec<Flag>) {
            if prefix.len() == len {
                out.push(Flag {
                    entries: prefix.clone(),
                });
                return;
            }
            for k in from..values.len() {
                prefix.push(values[k]);
                grow(len, values, k, prefix, out);
                prefix.pop();
            }
        }
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        let mut out = Vec::new();
        grow(len, values, 0, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Flag {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Flag::new(entries)
    }
}

impl From<Flag> for Vec<usize> {
    fn from(f: Flag) -> Self {
        f.entries
    }
}

impl Index<usize> for Flag {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        &self.entries[index]
    }
}

/// The fixed pair `(t, n)`: `t` is the order of the root of unity and `tn`
/// the number of variables being specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    t: usize,
    n: usize,
}

impl Twist {
    pub fn new(t: usize, n: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::NonPositiveParameter { name: "t" });
        }
        if n == 0 {
            return Err(Error::NonPositiveParameter { name: "n" });
        }
        Ok(Twist { t, n })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tn(&self) -> usize {
        self.t * self.n
    }

    fn check_length(&self, lam: &Partition) -> Result<()> {
        if lam.len() > self.tn() {
            return Err(Error::ShapeTooLong {
                length: lam.len(),
                limit: self.tn(),
            });
        }
        Ok(())
    }
}

/// β(λ) = (λ_1 + tn − 1, λ_2 + tn − 2, ..., λ_tn), strictly decreasing.
pub fn beta_sequence(lam: &Partition, twist: Twist) -> Result<Vec<usize>> {
    twist.check_length(lam)?;
    let tn = twist.tn();
    Ok((0..tn).map(|i| lam.part(i) + tn - 1 - i).collect())
}

/// Beta numbers of λ split by residue class mod t.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueData {
    pub t: usize,
    pub n: usize,
    pub beta: Vec<usize>,
    /// `counts[r]` is the number of beta entries congruent to r mod t.
    pub counts: Vec<usize>,
    /// One-line notation over {1, ..., tn}; position `sigma[j] - 1` of beta
    /// holds the j-th entry after regrouping.
    pub sigma: Vec<usize>,
    pub sign: i8,
}

impl ResidueData {
    /// Range of regrouped indices (0-based, into `sigma`) for residue r.
    pub fn block(&self, r: usize) -> std::ops::Range<usize> {
        let start: usize = self.counts[..r].iter().sum();
        start..start + self.counts[r]
    }

    /// Beta entries of residue r, in decreasing order.
    pub fn block_values(&self, r: usize) -> Vec<usize> {
        self.block(r).map(|j| self.beta[self.sigma[j] - 1]).collect()
    }
}

/// Parity sign of a permutation in one-line notation, by counting inversions.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Residue counts, the regrouping permutation σ_λ and its sign.
///
/// σ_λ lists the positions of β(λ) residue class by residue class, residues
/// ascending; since β(λ) is strictly decreasing, listing positions in
/// increasing order keeps each block strictly decreasing.
pub fn residue_data(lam: &Partition, twist: Twist) -> Result<ResidueData> {
    let beta = beta_sequence(lam, twist)?;
    let t = twist.t();
    let mut counts = vec![0; t];
    let mut sigma = Vec::with_capacity(beta.len());
    for (r, count) in counts.iter_mut().enumerate() {
        for (i, &b) in beta.iter().enumerate() {
            if b % t == r {
                *count += 1;
                sigma.push(i + 1);
            }
        }
    }
    let sign = permutation_sign(&sigma);
    Ok(ResidueData {
        t,
        n: twist.n(),
        beta,
        counts,
        sigma,
        sign,
    })
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|x, y| y.cmp(x));
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .collect();
    Partition::new(parts).expect("distinct beta numbers give a partition")
}

/// The t-core: slide the beads on each runner of the tn-bead abacus down to
/// the lowest free positions.
pub fn t_core(lam: &Partition, twist: Twist) -> Result<Partition> {
    let data = residue_data(lam, twist)?;
    let t = twist.t();
    let beta = (0..t)
        .flat_map(|r| (0..data.counts[r]).map(move |k| r + k * t))
        .collect();
    Ok(from_beta(beta))
}

/// The t-quotient (λ^(0), ..., λ^(t−1)): for residue r with beta entries
/// `b_1 > ... > b_m`, part k is `(b_k − r)/t − (m − k)`.
pub fn t_quotient(lam: &Partition, twist: Twist) -> Result<Vec<Partition>> {
    let data = residue_data(lam, twist)?;
    Ok(quotient_from_data(&data))
}

pub(crate) fn quotient_from_data(data: &ResidueData) -> Vec<Partition> {
    (0..data.t)
        .map(|r| {
            let values = data.block_values(r);
            let m = values.len();
            let parts = values
                .iter()
                .enumerate()
                .map(|(k, &b)| (b - r) / data.t - (m - 1 - k))
                .collect();
            Partition::new(parts).expect("beta numbers on one runner give a partition")
        })
        .collect()
}

/// ε_t(λ/μ): zero when the t-cores differ, otherwise sgn(σ_λ)·sgn(σ_μ).
pub fn epsilon_t(shape: &SkewShape, twist: Twist) -> Result<i8> {
    let outer = residue_data(&shape.outer, twist)?;
    let inner = residue_data(&shape.inner, twist)?;
    if t_core(&shape.outer, twist)? != t_core(&shape.inner, twist)? {
        return Ok(0);
    }
    Ok(outer.sign * inner.sign)
}

/// A pair of flags (lower, upper) attached to one residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagPair {
    pub lower: Flag,
    pub upper: Flag,
}

fn divide_entry(flag: &Flag, position: usize, t: usize) -> Result<usize> {
    let value = flag[position];
    if !value.is_multiple_of(t) {
        return Err(Error::FlagNotDivisible {
            position: position + 1,
            value,
            t,
        });
    }
    Ok(value / t)
}

/// The flags a^(r), b^(r) of each residue class: the lower flag is read
/// through σ_μ and the upper flag through σ_λ, then divided by t.
pub fn quotient_flags(a: &Flag, b: &Flag, shape: &SkewShape, twist: Twist) -> Result<Vec<FlagPair>> {
    let tn = twist.tn();
    let t = twist.t();
    a.require_len(tn)?;
    b.require_len(tn)?;
    for position in 0..tn {
        divide_entry(a, position, t)?;
        divide_entry(b, position, t)?;
    }
    let outer = residue_data(&shape.outer, twist)?;
    let inner = residue_data(&shape.inner, twist)?;
    if let Some(r) = (0..t).find(|&r| outer.counts[r] != inner.counts[r]) {
        return Err(Error::BlockMismatch {
            residue: r,
            outer: outer.counts[r],
            inner: inner.counts[r],
        });
    }
    (0..t)
        .map(|r| {
            let lower = inner
                .block(r)
                .map(|j| divide_entry(a, inner.sigma[j] - 1, t))
                .collect::<Result<Vec<_>>>()?;
            let upper = outer
                .block(r)
                .map(|j| divide_entry(b, outer.sigma[j] - 1, t))
                .collect::<Result<Vec<_>>>()?;
            let lower = Flag::new(lower).map_err(|e| {
                Error::Invariant(format!("quotient lower flag of residue {r} is not a flag: {e}"))
            })?;
            let upper = Flag::new(upper).map_err(|e| {
                Error::Invariant(format!("quotient upper flag of residue {r} is not a flag: {e}"))
            })?;
            Ok(FlagPair { lower, upper })
        })
        .collect()
}
