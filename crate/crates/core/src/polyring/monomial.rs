use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial, one slot per ambient variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of x1, then x2, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, vars),
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// x_i for a 0-based variable index.
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut m = Monomial::one(vars);
        m.exps[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.exps
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Same exponents in an ambient of `vars` variables; dropped slots must
    /// be zero.
    pub fn resized(&self, vars: usize) -> Option<Monomial> {
        if self.exps.iter().skip(vars).any(|&e| e != 0) {
            return None;
        }
        let mut exps: SmallVec<[u32; 8]> = self.exps.iter().take(vars).copied().collect();
        exps.resize(vars, 0);
        Some(Monomial { exps })
    }

    /// Number of trailing variables that never occur, i.e. the smallest
    /// ambient this monomial fits in.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    /// Swaps the exponents of two (0-based) variables.
    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.swap(i, j);
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes `x1^2*x3`, or nothing for the unit monomial.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, var: &str) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{var}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::from_exponents(&[1, 0]);
        let x2 = Monomial::from_exponents(&[0, 1]);
        let x2sq = Monomial::from_exponents(&[0, 2]);
        let one = Monomial::one(2);
        assert!(x1 > x2);
        assert!(x2sq > x1);
        assert!(x2 > one);
    }

    #[test]
    fn resize_rejects_used_slots() {
        let m = Monomial::from_exponents(&[1, 0, 2]);
        assert_eq!(m.resized(2), None);
        assert_eq!(m.resized(4).unwrap().exponents(), &[1, 0, 2, 0]);
        assert_eq!(m.support_len(), 3);
        assert_eq!(Monomial::one(4).support_len(), 0);
    }
}
