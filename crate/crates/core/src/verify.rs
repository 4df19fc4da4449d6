//! Exhaustive and seeded verification sweeps. Each sweep enumerates its
//! instances up front, checks them in parallel, and reports in enumeration
//! order, so output is identical across runs and thread counts.

use std::collections::BTreeMap;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::demazure::{
    apply_word, corollary_factorization, demazure_operator, flag_to_permutation, key_polynomial,
    permutation_from_word, reduced_word, verify_ps_theorem, PermutationWord,
};
use crate::dyckpaths::{count_qualified_permutations, enumerate_paths, flag_to_path, fuss_catalan, path_to_flag};
use crate::error::{Error, Result};
use crate::partitions::{t_core, Flag, Partition, SkewShape, Twist};
use crate::polyring::{extract_integer_form, phi_t_substitute, IntPolynomial};
use crate::schur::{
    h_flagged, jacobi_trudi, littlewood_specialize, phi_by_entries, phi_of_flagged_schur, verify_main_theorem,
    JacobiTrudiSpec,
};
use crate::tableaux::schur_by_tableaux;

/// Upper bound on the number of instances any single sweep may visit.
pub const INSTANCE_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepReport {
    pub scope: String,
    pub instances: usize,
    pub failures: usize,
    pub counterexamples: Vec<Value>,
    #[serde(flatten)]
    pub details: BTreeMap<String, Value>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn collect(scope: &str, outcomes: Vec<Option<Value>>) -> Self {
        let instances = outcomes.len();
        let counterexamples: Vec<Value> = outcomes.into_iter().flatten().collect();
        SweepReport {
            scope: scope.to_string(),
            instances,
            failures: counterexamples.len(),
            counterexamples,
            details: BTreeMap::new(),
        }
    }

    /// Folds another report into this one, keeping instance order.
    pub fn absorb(&mut self, other: SweepReport) {
        self.instances += other.instances;
        self.failures += other.failures;
        self.counterexamples.extend(other.counterexamples);
    }
}

fn guard(instances: usize) -> Result<()> {
    if instances > INSTANCE_LIMIT {
        return Err(Error::SizeGuard {
            size: instances,
            limit: INSTANCE_LIMIT,
        });
    }
    Ok(())
}

/// Every μ ⊆ λ ⊆ (cols^rows).
pub fn nested_pairs(rows: usize, cols: usize) -> Vec<SkewShape> {
    Partition::in_box(rows, cols)
        .into_iter()
        .flat_map(|outer| {
            outer
                .subpartitions()
                .into_iter()
                .map(move |inner| SkewShape::new(outer.clone(), inner))
        })
        .collect()
}

/// Weakly increasing flags of length `len` with entries in {0, t, ..., tn}.
pub fn divisible_flags(len: usize, twist: Twist) -> Vec<Flag> {
    let values: Vec<usize> = (0..=twist.n()).map(|k| k * twist.t()).collect();
    Flag::all_with_entries(len, &values)
}

/// Random weakly increasing flag of length `len` with entries in 0..=max.
pub fn random_flag(rng: &mut ChaCha8Rng, len: usize, max: usize) -> Flag {
    let mut entries: Vec<usize> = (0..len).map(|_| rng.random_range(0..=max)).collect();
    entries.sort_unstable();
    Flag::new(entries).expect("sorted entries form a flag")
}

/// Seeded flag pairs shared by every shape in [`jacobi_trudi_sweep`].
pub fn random_flag_pairs(seed: u64, count: usize, len: usize, max: usize) -> Vec<(Flag, Flag)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_flag(&mut rng, len, max);
            let b = random_flag(&mut rng, len, max);
            (a, b)
        })
        .collect()
}

/// Determinant against tableau enumeration for every μ ⊆ λ ⊆ (cols^rows)
/// and `samples` seeded flag pairs with entries ≤ `max_entry`.
pub fn jacobi_trudi_sweep(rows: usize, cols: usize, samples: usize, max_entry: usize, seed: u64) -> Result<SweepReport> {
    let shapes = nested_pairs(rows, cols);
    guard(shapes.len().saturating_mul(samples))?;
    let flags = random_flag_pairs(seed, samples, rows, max_entry);
    let outcomes: Vec<Vec<Option<Value>>> = shapes
        .par_iter()
        .map(|shape| {
            flags
                .iter()
                .map(|(a, b)| {
                    let check = || -> Result<Option<(IntPolynomial, IntPolynomial)>> {
                        let spec = JacobiTrudiSpec::new(shape.clone(), a.clone(), b.clone(), rows)?;
                        let det = jacobi_trudi(&spec)?;
                        let tab = schur_by_tableaux(shape, a, b)?;
                        Ok((det != tab).then_some((det, tab)))
                    };
                    match check() {
                        Ok(None) => None,
                        Ok(Some((det, tab))) => Some(json!({
                            "outer": shape.outer, "inner": shape.inner, "a": a, "b": b,
                            "determinant": det, "tableaux": tab,
                        })),
                        Err(e) => Some(json!({
                            "outer": shape.outer, "inner": shape.inner, "a": a, "b": b,
                            "error": e.to_string(),
                        })),
                    }
                })
                .collect()
        })
        .collect();
    let mut report = SweepReport::collect("jacobi-trudi", outcomes.into_iter().flatten().collect());
    report.details.insert("flag_pairs".into(), json!(samples));
    report.details.insert("seed".into(), json!(seed));
    Ok(report)
}

/// Both sides of the factorization for every μ ⊆ λ ⊆ (cols^{tn}) and every
/// pair of flags with entries in {0, t, ..., tn}.
pub fn main_theorem_sweep(twist: Twist, cols: usize) -> Result<SweepReport> {
    let tn = twist.tn();
    let shapes = nested_pairs(tn, cols);
    let flags = divisible_flags(tn, twist);
    guard(shapes.len().saturating_mul(flags.len() * flags.len()))?;
    let outcomes: Vec<Vec<Option<Value>>> = shapes
        .par_iter()
        .map(|shape| {
            let mut out = Vec::with_capacity(flags.len() * flags.len());
            for a in &flags {
                for b in &flags {
                    let failure = match verify_main_theorem(shape, a, b, twist) {
                        Ok(report) if report.equal => None,
                        Ok(report) => Some(json!({
                            "outer": shape.outer, "inner": shape.inner, "a": a, "b": b, "report": report,
                        })),
                        Err(e) => Some(json!({
                            "outer": shape.outer, "inner": shape.inner, "a": a, "b": b, "error": e.to_string(),
                        })),
                    };
                    out.push(failure);
                }
            }
            out
        })
        .collect();
    let mut report = SweepReport::collect("main-theorem", outcomes.into_iter().flatten().collect());
    report.details.insert("t".into(), json!(twist.t()));
    report.details.insert("n".into(), json!(twist.n()));
    Ok(report)
}

/// φ_t applied to the full determinant against φ_t applied entrywise.
pub fn phi_routes_sweep(twist: Twist, cols: usize) -> Result<SweepReport> {
    let tn = twist.tn();
    let shapes = nested_pairs(tn, cols);
    let flags = divisible_flags(tn, twist);
    guard(shapes.len().saturating_mul(flags.len() * flags.len()))?;
    let outcomes: Vec<Vec<Option<Value>>> = shapes
        .par_iter()
        .map(|shape| {
            let mut out = Vec::new();
            for a in &flags {
                for b in &flags {
                    let whole = phi_of_flagged_schur(shape, a, b, twist);
                    let entries = phi_by_entries(shape, a, b, twist);
                    out.push((whole.is_err() || whole != entries).then(|| {
                        json!({
                            "outer": shape.outer, "inner": shape.inner, "a": a, "b": b,
                            "determinant": whole.map(|p| p.to_string()).unwrap_or_else(|e| e.to_string()),
                            "entrywise": entries.map(|p| p.to_string()).unwrap_or_else(|e| e.to_string()),
                        })
                    }));
                }
            }
            out
        })
        .collect();
    Ok(SweepReport::collect("phi-routes", outcomes.into_iter().flatten().collect()))
}

/// φ_t(h_k(u, v)) against h_{k/t}(u/t, v/t), or 0 when t ∤ k, for
/// k ∈ [k_min, k_max] and u, v ∈ {0, t, ..., max_multiple·t}.
pub fn lemma31_sweep(t: usize, k_min: i64, k_max: i64, max_multiple: usize) -> Result<SweepReport> {
    let twist = Twist::new(t, max_multiple.max(1))?;
    let n = twist.n();
    let mut instances = Vec::new();
    for k in k_min..=k_max {
        for u in 0..=max_multiple {
            for v in 0..=max_multiple {
                instances.push((k, u * t, v * t));
            }
        }
    }
    guard(instances.len())?;
    let outcomes = instances
        .par_iter()
        .map(|&(k, u, v)| {
            let check = || -> Result<bool> {
                let h = h_flagged(k, u, v);
                let phi = phi_t_substitute(&h, twist)?;
                if k.rem_euclid(t as i64) != 0 {
                    return Ok(phi.is_zero());
                }
                let expected = h_flagged(k / t as i64, u / t, v / t).with_vars(n)?;
                let actual = if phi.is_zero() {
                    IntPolynomial::int_zero(n)
                } else {
                    extract_integer_form(&phi)?
                };
                Ok(actual == expected)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(json!({ "t": t, "k": k, "u": u, "v": v })),
                Err(e) => Some(json!({ "t": t, "k": k, "u": u, "v": v, "error": e.to_string() })),
            }
        })
        .collect();
    Ok(SweepReport::collect("lemma31", outcomes))
}

/// Full-flag straight shapes λ ⊆ (cols^rows) with rows ≤ tn.
pub fn littlewood_sweep(twist: Twist, rows: usize, cols: usize) -> Result<SweepReport> {
    if rows > twist.tn() {
        return Err(Error::ShapeTooLong {
            length: rows,
            limit: twist.tn(),
        });
    }
    let shapes = Partition::in_box(rows, cols);
    guard(shapes.len())?;
    let outcomes = shapes
        .par_iter()
        .map(|lam| match littlewood_specialize(lam, twist) {
            Ok(report) if report.equal => None,
            Ok(report) => Some(json!({ "lambda": lam, "report": report })),
            Err(e) => Some(json!({ "lambda": lam, "error": e.to_string() })),
        })
        .collect();
    let mut report = SweepReport::collect("littlewood", outcomes);
    report.details.insert("t".into(), json!(twist.t()));
    report.details.insert("n".into(), json!(twist.n()));
    Ok(report)
}

/// Flags of length n with i ≤ a_i ≤ n.
pub fn valid_flags(n: usize) -> Vec<Flag> {
    let values: Vec<usize> = (1..=n).collect();
    Flag::all_with_entries(n, &values)
        .into_iter()
        .filter(|a| a.entries().iter().enumerate().all(|(i, &v)| v > i))
        .collect()
}

/// Flagged Schur polynomial against the key polynomial for every
/// λ ⊆ (cols^n) and every valid flag of length n.
pub fn ps_theorem_sweep(n: usize, cols: usize) -> Result<SweepReport> {
    let shapes = Partition::in_box(n, cols);
    let flags = valid_flags(n);
    guard(shapes.len() * flags.len())?;
    let instances: Vec<(&Partition, &Flag)> = shapes.iter().flat_map(|l| flags.iter().map(move |a| (l, a))).collect();
    let outcomes = instances
        .par_iter()
        .map(|&(lam, a)| match verify_ps_theorem(lam, a) {
            Ok(report) if report.equal => None,
            Ok(report) => Some(json!({ "lambda": lam, "a": a, "report": report })),
            Err(e) => Some(json!({ "lambda": lam, "a": a, "error": e.to_string() })),
        })
        .collect();
    Ok(SweepReport::collect("ps-theorem", outcomes))
}

/// κ_{λ, w₀} against the full-flag Jacobi–Trudi determinant.
pub fn longest_element_sweep(n: usize, cols: usize) -> Result<SweepReport> {
    let shapes = Partition::in_box(n, cols);
    guard(shapes.len())?;
    let outcomes = shapes
        .par_iter()
        .map(|lam| {
            let check = || -> Result<bool> {
                let key = key_polynomial(lam, &PermutationWord::longest(n))?;
                let spec = JacobiTrudiSpec::new(
                    SkewShape::straight(lam.clone()),
                    Flag::constant(0, n),
                    Flag::constant(n, n),
                    n,
                )?;
                Ok(key == jacobi_trudi(&spec)?)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(json!({ "lambda": lam })),
                Err(e) => Some(json!({ "lambda": lam, "error": e.to_string() })),
            }
        })
        .collect();
    Ok(SweepReport::collect("longest-element", outcomes))
}

/// A random polynomial in `vars` variables with at most `terms` terms of
/// degree ≤ `max_degree` and coefficients in [−5, 5].
pub fn random_polynomial(rng: &mut ChaCha8Rng, vars: usize, max_degree: u32, terms: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::int_zero(vars);
    for _ in 0..terms {
        let mut exps = vec![0u32; vars];
        let degree = rng.random_range(0..=max_degree);
        for _ in 0..degree {
            exps[rng.random_range(0..vars)] += 1;
        }
        let c: i64 = rng.random_range(-5..=5);
        acc = &acc + &IntPolynomial::int_monomial(&exps, c);
    }
    acc
}

/// A reduced word for w different from [`reduced_word`] whenever w has more
/// than one: descents are removed right to left instead of left to right.
pub fn alternate_reduced_word(w: &PermutationWord) -> Vec<usize> {
    let mut v = w.one_line().to_vec();
    let mut swaps = Vec::new();
    while let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] > v[i + 1]) {
        v.swap(i, i + 1);
        swaps.push(i + 1);
    }
    swaps.reverse();
    swaps
}

/// π_i² = π_i, the braid relations, and reduced-word independence of π_w on
/// seeded random polynomials.
pub fn demazure_relations_sweep(vars: usize, samples: usize, max_degree: u32, seed: u64) -> Result<SweepReport> {
    if vars < 2 {
        return Err(Error::NonPositiveParameter { name: "vars - 1" });
    }
    guard(samples)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys: Vec<IntPolynomial> = (0..samples)
        .map(|_| random_polynomial(&mut rng, vars, max_degree, 6))
        .collect();
    let perms = PermutationWord::all(vars);
    let outcomes = polys
        .par_iter()
        .map(|f| {
            let check = || -> Result<Vec<&'static str>> {
                let mut broken = Vec::new();
                for i in 1..vars {
                    let once = demazure_operator(f, i)?;
                    if demazure_operator(&once, i)? != once {
                        broken.push("idempotence");
                    }
                    for j in i + 1..vars {
                        let (lhs, rhs) = if j == i + 1 {
                            (apply_word(f, &[i, j, i])?, apply_word(f, &[j, i, j])?)
                        } else {
                            (apply_word(f, &[i, j])?, apply_word(f, &[j, i])?)
                        };
                        if lhs != rhs {
                            broken.push("braid");
                        }
                    }
                }
                for w in &perms {
                    let (first, second) = (reduced_word(w), alternate_reduced_word(w));
                    if permutation_from_word(vars, &second) != *w
                        || apply_word(f, &first)? != apply_word(f, &second)?
                    {
                        broken.push("reduced-word");
                    }
                }
                Ok(broken)
            };
            match check() {
                Ok(broken) if broken.is_empty() => None,
                Ok(broken) => Some(json!({ "polynomial": f, "broken": broken })),
                Err(e) => Some(json!({ "polynomial": f, "error": e.to_string() })),
            }
        })
        .collect();
    Ok(SweepReport::collect("demazure-relations", outcomes))
}

/// Flags of length tn with entries in {t, ..., tn} and a_i ≥ i.
pub fn qualified_flags(twist: Twist) -> Vec<Flag> {
    let values: Vec<usize> = (1..=twist.n()).map(|k| k * twist.t()).collect();
    Flag::all_with_entries(twist.tn(), &values)
        .into_iter()
        .filter(|a| a.entries().iter().enumerate().all(|(i, &v)| v > i))
        .collect()
}

/// The key-polynomial factorization for every λ ⊆ (cols^{tn}) and every
/// qualified permutation; shapes with a non-empty core must give 0.
pub fn corollary_sweep(twist: Twist, cols: usize) -> Result<SweepReport> {
    let shapes = Partition::in_box(twist.tn(), cols);
    let perms = qualified_flags(twist)
        .iter()
        .map(flag_to_permutation)
        .collect::<Result<Vec<_>>>()?;
    guard(shapes.len() * perms.len())?;
    let instances: Vec<(&Partition, &PermutationWord)> =
        shapes.iter().flat_map(|l| perms.iter().map(move |w| (l, w))).collect();
    let outcomes: Vec<(Option<Value>, bool, bool)> = instances
        .par_iter()
        .map(|&(lam, w)| {
            let check = || -> Result<(bool, bool, bool)> {
                let report = corollary_factorization(lam, w, twist)?;
                let empty_core = t_core(lam, twist)?.is_empty();
                let ok = report.equal && !report.anomaly && (empty_core || report.lhs.is_zero());
                Ok((ok, empty_core, !report.lifted.is_empty()))
            };
            match check() {
                Ok((true, empty_core, lifted)) => (None, empty_core, lifted),
                Ok((false, empty_core, lifted)) => (
                    Some(json!({
                        "lambda": lam, "w": w,
                        "report": corollary_factorization(lam, w, twist).ok(),
                    })),
                    empty_core,
                    lifted,
                ),
                Err(e) => (Some(json!({ "lambda": lam, "w": w, "error": e.to_string() })), false, false),
            }
        })
        .collect();
    let empty_core = outcomes.iter().filter(|o| o.1).count();
    let lifted = outcomes.iter().filter(|o| o.2).count();
    let mut report = SweepReport::collect("corollary", outcomes.into_iter().map(|o| o.0).collect());
    report.details.insert("empty_core_instances".into(), json!(empty_core));
    report.details.insert("lifted_instances".into(), json!(lifted));
    Ok(report)
}

/// Path count against Fuss–Catalan, flag ↔ path round trips, and, when
/// tn ≤ 10, the brute-force count of qualified permutations.
pub fn dyck_sweep(twist: Twist) -> Result<SweepReport> {
    let (t, n) = (twist.t(), twist.n());
    let paths = enumerate_paths(t, n);
    let expected = fuss_catalan(t, n);
    let mut outcomes = vec![(num_bigint::BigInt::from(paths.len()) != expected)
        .then(|| json!({ "check": "path-count", "paths": paths.len(), "fuss_catalan": expected.to_string() }))];
    for p in &paths {
        let back = path_to_flag(p).and_then(|a| flag_to_path(&a, twist).map(|q| (a, q)));
        outcomes.push(match back {
            Ok((_, q)) if q == *p => None,
            Ok((a, q)) => Some(json!({ "check": "path-round-trip", "path": p, "flag": a, "back": q })),
            Err(e) => Some(json!({ "check": "path-round-trip", "path": p, "error": e.to_string() })),
        });
    }
    let flags = qualified_flags(twist);
    outcomes.push(
        (flags.len() != paths.len())
            .then(|| json!({ "check": "flag-count", "flags": flags.len(), "paths": paths.len() })),
    );
    for a in &flags {
        let back = flag_to_path(a, twist).and_then(|p| path_to_flag(&p).map(|b| (p, b)));
        outcomes.push(match back {
            Ok((_, b)) if b == *a => None,
            Ok((p, b)) => Some(json!({ "check": "flag-round-trip", "flag": a, "path": p, "back": b })),
            Err(e) => Some(json!({ "check": "flag-round-trip", "flag": a, "error": e.to_string() })),
        });
    }
    let perms = if twist.tn() <= 10 {
        let count = count_qualified_permutations(t, n)?;
        outcomes.push(
            (count != expected)
                .then(|| json!({ "check": "permutation-count", "perms": count.to_string(), "fuss_catalan": expected.to_string() })),
        );
        Some(count)
    } else {
        None
    };
    let mut report = SweepReport::collect("dyck", outcomes);
    report.details.insert("paths".into(), json!(paths.len()));
    report.details.insert("fuss_catalan".into(), bigint_value(&expected));
    report
        .details
        .insert("perms".into(), perms.as_ref().map_or(Value::Null, bigint_value));
    Ok(report)
}

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
pub fn bigint_value(v: &num_bigint::BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tw(t: usize, n: usize) -> Twist {
        Twist::new(t, n).unwrap()
    }

    #[test]
    fn instance_enumerations() {
        assert_eq!(nested_pairs(1, 2).len(), 6);
        assert_eq!(divisible_flags(4, tw(2, 2)).len(), 15);
        assert_eq!(valid_flags(3).len(), 5);
        assert_eq!(qualified_flags(tw(2, 2)).len(), 3);
        let pairs = random_flag_pairs(7, 5, 3, 5);
        assert_eq!(pairs, random_flag_pairs(7, 5, 3, 5));
        assert!(pairs.iter().all(|(a, b)| a.max() <= 5 && b.len() == 3));
    }

    #[test]
    fn alternate_words_differ() {
        let w = PermutationWord::longest(3);
        assert_ne!(reduced_word(&w), alternate_reduced_word(&w));
        assert_eq!(permutation_from_word(3, &alternate_reduced_word(&w)), w);
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(main_theorem_sweep(tw(2, 1), 2).unwrap().passed());
        assert!(phi_routes_sweep(tw(2, 1), 2).unwrap().passed());
        assert!(lemma31_sweep(2, -2, 4, 2).unwrap().passed());
        assert!(littlewood_sweep(tw(2, 1), 2, 2).unwrap().passed());
        assert!(ps_theorem_sweep(2, 2).unwrap().passed());
        assert!(corollary_sweep(tw(2, 1), 2).unwrap().passed());
        assert!(jacobi_trudi_sweep(2, 2, 10, 3, 1).unwrap().passed());
        assert!(demazure_relations_sweep(3, 3, 3, 1).unwrap().passed());
    }

    #[test]
    fn dyck_report_fields() {
        let report = dyck_sweep(tw(2, 2)).unwrap();
        assert!(report.passed());
        assert_eq!(report.details["paths"], json!(3));
        assert_eq!(report.details["fuss_catalan"], json!(3));
        assert_eq!(report.details["perms"], json!(3));
    }

    #[test]
    fn guard_rejects_large_sweeps() {
        assert!(matches!(
            jacobi_trudi_sweep(4, 4, INSTANCE_LIMIT, 5, 0),
            Err(Error::SizeGuard { .. })
        ));
    }
}
