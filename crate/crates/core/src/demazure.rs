//! Demazure operators, key polynomials, 312-avoiding permutations and the
//! flag ↔ permutation bijection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Flag, Partition, SkewShape, Twist};
use crate::polyring::{extract_integer_form, phi_t_substitute, IntPolynomial};
use crate::schur::{jacobi_trudi, verify_main_theorem, JacobiTrudiSpec, MainTheoremReport};

/// A permutation of {1..n} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PermutationWord {
    one_line: Vec<usize>,
}

impl PermutationWord {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(PermutationWord { one_line })
    }

    pub fn identity(n: usize) -> Self {
        PermutationWord {
            one_line: (1..=n).collect(),
        }
    }

    /// The longest element [n, n−1, ..., 1].
    pub fn longest(n: usize) -> Self {
        PermutationWord {
            one_line: (1..=n).rev().collect(),
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        PermutationWord { one_line: inv }
    }

    /// All permutations of {1..n} in lexicographic order.
    pub fn all(n: usize) -> Vec<PermutationWord> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<PermutationWord>) {
            if current.len() == n {
                out.push(PermutationWord {
                    one_line: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for PermutationWord {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        PermutationWord::new(v)
    }
}

impl From<PermutationWord> for Vec<usize> {
    fn from(w: PermutationWord) -> Self {
        w.one_line
    }
}

impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// No i < j < k with w_j < w_k < w_i.
pub fn is_312_avoiding(w: &PermutationWord) -> bool {
    let v = w.one_line();
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            if v[j] >= v[i] {
                continue;
            }
            if (j + 1..n).any(|k| v[j] < v[k] && v[k] < v[i]) {
                return false;
            }
        }
    }
    true
}

/// 1-based ascent positions; position 1 always counts.
pub fn ascents(w: &PermutationWord) -> Vec<usize> {
    let v = w.one_line();
    if v.is_empty() {
        return Vec::new();
    }
    let mut out = vec![1];
    out.extend((1..v.len()).filter(|&k| v[k - 1] < v[k]).map(|k| k + 1));
    out
}

/// w_k is the largest value ≤ a_k not already used.
pub fn flag_to_permutation(a: &Flag) -> Result<PermutationWord> {
    let n = a.len();
    let mut used = vec![false; n + 1];
    let mut one_line = Vec::with_capacity(n);
    for (k, &bound) in a.entries().iter().enumerate() {
        if bound < k + 1 || bound > n {
            return Err(Error::FlagOutOfRange {
                position: k + 1,
                value: bound,
                limit: n,
            });
        }
        let value = (1..=bound)
            .rev()
            .find(|&v| !used[v])
            .ok_or_else(|| Error::Invariant(format!("no unused value below {bound}")))?;
        used[value] = true;
        one_line.push(value);
    }
    Ok(PermutationWord { one_line })
}

/// Prefix maxima; the inverse of [`flag_to_permutation`].
pub fn permutation_to_flag(w: &PermutationWord) -> Result<Flag> {
    if !is_312_avoiding(w) {
        return Err(Error::Contains312(w.one_line().to_vec()));
    }
    let entries = w
        .one_line()
        .iter()
        .scan(0, |max, &v| {
            *max = (*max).max(v);
            Some(*max)
        })
        .collect();
    Flag::new(entries)
}

/// 312-avoiding, and every ascent k has t | w_k.
pub fn tflag_ascent_check(w: &PermutationWord, t: usize) -> bool {
    is_312_avoiding(w) && t > 0 && ascents(w).iter().all(|&k| w.one_line()[k - 1].is_multiple_of(t))
}

/// Adjacent transpositions (1-based i for s_i) with w = s_{i_1} ⋯ s_{i_k},
/// read off a bubble sort of the one-line notation.
pub fn reduced_word(w: &PermutationWord) -> Vec<usize> {
    let mut v = w.one_line().to_vec();
    let mut swaps = Vec::new();
    for end in (1..v.len()).rev() {
        for i in 0..end {
            if v[i] > v[i + 1] {
                v.swap(i, i + 1);
                swaps.push(i + 1);
            }
        }
    }
    swaps.reverse();
    swaps
}

/// Product s_{i_1} ⋯ s_{i_k} in one-line notation.
pub fn permutation_from_word(n: usize, word: &[usize]) -> PermutationWord {
    // Right multiplication by s_i swaps positions i and i+1.
    let mut w = PermutationWord::identity(n);
    for &i in word {
        w.one_line.swap(i - 1, i);
    }
    w
}

/// π_i f = (x_i f − x_{i+1} s_i f) / (x_i − x_{i+1}) for 1-based `i`.
pub fn demazure_operator(f: &IntPolynomial, i: usize) -> Result<IntPolynomial> {
    let vars = f.vars();
    if i == 0 || i >= vars {
        return Err(Error::FlagOutOfRange {
            position: i,
            value: i,
            limit: vars.saturating_sub(1),
        });
    }
    let numerator = IntPolynomial::x(vars, i)
        .try_mul(f)?
        .try_sub(&IntPolynomial::x(vars, i + 1).try_mul(&f.swap_variables(i - 1, i))?)?;
    numerator.divide_by_difference(i - 1, i)
}

/// π_{i_1} ⋯ π_{i_k} f, the rightmost operator applied first.
pub fn apply_word(f: &IntPolynomial, word: &[usize]) -> Result<IntPolynomial> {
    word.iter().rev().try_fold(f.clone(), |acc, &i| demazure_operator(&acc, i))
}

/// κ_{λ,w} = π_w x^λ in the variables x_1..x_n, n = |w|.
pub fn key_polynomial(lam: &Partition, w: &PermutationWord) -> Result<IntPolynomial> {
    let n = w.len();
    if lam.len() > n {
        return Err(Error::ShapeTooLong {
            length: lam.len(),
            limit: n,
        });
    }
    let exps: Vec<u32> = lam.padded(n).into_iter().map(|p| p as u32).collect();
    apply_word(&IntPolynomial::int_monomial(&exps, 1), &reduced_word(w))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsReport {
    pub permutation: PermutationWord,
    pub flagged: IntPolynomial,
    pub key: IntPolynomial,
    pub equal: bool,
}

/// s_{λ/∅}(0, a) against κ_{λ, w_a}.
pub fn verify_ps_theorem(lam: &Partition, a: &Flag) -> Result<PsReport> {
    let n = a.len();
    let permutation = flag_to_permutation(a)?;
    let spec = JacobiTrudiSpec::new(SkewShape::straight(lam.clone()), Flag::constant(0, n), a.clone(), n)?;
    let flagged = jacobi_trudi(&spec)?.with_vars(n)?;
    let key = key_polynomial(lam, &permutation)?;
    Ok(PsReport {
        equal: flagged == key,
        permutation,
        flagged,
        key,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorollaryReport {
    pub flag: Flag,
    /// φ_t(κ_{λ,w}) rewritten in x_i = y_i^t.
    pub lhs: IntPolynomial,
    /// ε_t(λ/∅) Π_r κ_{λ^(r), w^(r)}, or 0 in the zero case.
    pub rhs: IntPolynomial,
    pub equal: bool,
    pub zero_case: bool,
    /// w^(r) per residue class, absent in the zero case.
    pub permutations: Vec<Option<PermutationWord>>,
    /// Residues whose quotient flag was raised to max(a_i, i) on rows below
    /// the quotient partition.
    pub lifted: Vec<usize>,
    /// Residues whose quotient flag fails a_i ≥ i on an occupied row.
    pub out_of_range: Vec<usize>,
    /// A non-zero side together with an out-of-range quotient flag.
    pub anomaly: bool,
    pub main_theorem: MainTheoremReport,
}

/// φ_t(κ_{λ,w}) against ε_t(λ/∅) Π_r κ_{λ^(r), w^(r)}, where the w^(r) come
/// from the quotient flags of a = permutation_to_flag(w).
pub fn corollary_factorization(lam: &Partition, w: &PermutationWord, twist: Twist) -> Result<CorollaryReport> {
    let (t, n, tn) = (twist.t(), twist.n(), twist.tn());
    if w.len() != tn {
        return Err(Error::FlagTooShort {
            length: w.len(),
            required: tn,
        });
    }
    if !tflag_ascent_check(w, t) {
        return Err(Error::AscentNotDivisible {
            perm: w.one_line().to_vec(),
            position: ascents(w)
                .into_iter()
                .find(|&k| !w.one_line()[k - 1].is_multiple_of(t))
                .unwrap_or(0),
            t,
        });
    }
    let flag = permutation_to_flag(w)?;
    let key = key_polynomial(lam, w)?;
    let phi = phi_t_substitute(&key, twist)?;
    let lhs = if phi.is_zero() {
        IntPolynomial::int_zero(n)
    } else {
        extract_integer_form(&phi)
            .map_err(|e| Error::TheoremViolation(format!("φ_t of the key polynomial for {w}: {e}")))?
    };
    let main_theorem = verify_main_theorem(&SkewShape::straight(lam.clone()), &Flag::constant(0, tn), &flag, twist)?;

    let mut permutations = Vec::new();
    let mut lifted = Vec::new();
    let mut out_of_range = Vec::new();
    let mut rhs = IntPolynomial::int_zero(n);
    if main_theorem.epsilon != 0 {
        for (r, (q, flags)) in main_theorem.quotients.iter().zip(&main_theorem.quotient_flags).enumerate() {
            let upper = flags.upper.entries();
            if upper.len() != n {
                return Err(Error::Invariant(format!("quotient flag {r} has {} rows, not {n}", upper.len())));
            }
            let rows = q.outer.len();
            if (0..rows).any(|i| upper[i] < i + 1) {
                out_of_range.push(r);
                permutations.push(None);
                continue;
            }
            let raised: Vec<usize> = upper.iter().enumerate().map(|(i, &v)| v.max(i + 1)).collect();
            if raised.as_slice() != upper {
                lifted.push(r);
            }
            permutations.push(Some(flag_to_permutation(&Flag::new(raised)?)?));
        }
        if out_of_range.is_empty() {
            rhs = IntPolynomial::int_one(n);
            for (q, w_r) in main_theorem.quotients.iter().zip(&permutations) {
                let w_r = w_r.as_ref().expect("every residue has a permutation");
                rhs = rhs.try_mul(&key_polynomial(&q.outer, w_r)?)?;
            }
            if main_theorem.epsilon < 0 {
                rhs = rhs.negate();
            }
        } else {
            permutations.iter_mut().for_each(|p| *p = None);
        }
    }
    let zero_case = rhs.is_zero();
    let anomaly = !out_of_range.is_empty() && !(lhs.is_zero() && main_theorem.rhs.is_zero());
    Ok(CorollaryReport {
        flag,
        equal: lhs == rhs && lhs == main_theorem.lhs,
        lhs,
        rhs,
        zero_case,
        permutations,
        lifted,
        out_of_range,
        anomaly,
        main_theorem,
    })
}
