//! Brute-force sequence oracles and exact checks of the counting bounds.
//!
//! The oracles fill the first empty slot with every admissible symbol (or the
//! zero), trying symbols in increasing order, so solutions come out in
//! lexicographic order without a final sort. The top-level branches (one per
//! choice for slot 1) run in parallel and are concatenated in branch order.
//!
//! All bounds are evaluated with arbitrary-precision integers or rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::construct::{
    self, expanded_defect, indexed_assignment, seq_to_loop_matching, seq_to_matching,
    ConstructError, LoopChoice, LoopPolicy,
};
use crate::sem::{self, RotationMember};
use crate::sequences::{ExtendedSkolemSeq, LangfordSeq};

/// Environment variable overriding [`Guards::max_outputs`].
pub const GUARD_ENV: &str = "LANGFORD_FORGE_GUARD";

/// Limits beyond which the oracles refuse to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest order `m` handed to the backtracking oracles (`2m <= 32`).
    pub max_order: usize,
    /// Largest number of expansions a constructive census may generate.
    pub max_outputs: u64,
    /// Largest `n` for which `S_n` is enumerated.
    pub max_family_order: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_order: 16,
            max_outputs: 1_000_000,
            max_family_order: 13,
        }
    }
}

impl Guards {
    /// Defaults, with the census limit taken from [`GUARD_ENV`] when set.
    pub fn from_env() -> Result<Self, CensusError> {
        let mut g = Guards::default();
        if let Ok(raw) = std::env::var(GUARD_ENV) {
            g.max_outputs = raw
                .trim()
                .parse()
                .map_err(|_| CensusError::BadGuard { value: raw })?;
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum CensusError {
    #[error("{what} = {value} exceeds the guard {limit}")]
    TooLarge {
        what: &'static str,
        value: String,
        limit: String,
    },
    #[error("order {n} is even, an odd order is required")]
    EvenOrder { n: usize },
    #[error("m = {m} is not 0 or 1 mod 4")]
    BadResidue { m: usize },
    #[error("parameter {name} must be positive")]
    NonPositive { name: &'static str },
    #[error("cannot parse guard value {value:?}")]
    BadGuard { value: String },
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

fn too_large(what: &'static str, value: impl ToString, limit: impl ToString) -> CensusError {
    CensusError::TooLarge {
        what,
        value: value.to_string(),
        limit: limit.to_string(),
    }
}

const EMPTY: u32 = u32::MAX;

/// Pair placement problem: symbols `low..=high` twice each, `k` apart, plus
/// optionally one zero.
#[derive(Clone, Copy)]
struct PairProblem {
    len: usize,
    low: u32,
    high: u32,
    zero: bool,
    zero_at_ends: bool,
}

struct PairSearch<'a> {
    problem: PairProblem,
    slots: Vec<u32>,
    used: Vec<bool>,
    zero_left: bool,
    visit: &'a mut dyn FnMut(&[u32]),
}

impl PairSearch<'_> {
    fn new(problem: PairProblem, visit: &mut dyn FnMut(&[u32])) -> PairSearch<'_> {
        PairSearch {
            problem,
            slots: vec![EMPTY; problem.len],
            used: vec![false; (problem.high + 1) as usize],
            zero_left: problem.zero,
            visit,
        }
    }

    fn zero_allowed(&self, p: usize) -> bool {
        self.zero_left && (self.problem.zero_at_ends || (p != 0 && p + 1 != self.problem.len))
    }

    fn try_zero(&mut self, p: usize) {
        if self.zero_allowed(p) {
            self.slots[p] = 0;
            self.zero_left = false;
            self.run(p + 1);
            self.zero_left = true;
            self.slots[p] = EMPTY;
        }
    }

    fn try_symbol(&mut self, p: usize, k: u32) {
        let q = p + k as usize;
        if self.used[k as usize] || q >= self.problem.len || self.slots[q] != EMPTY {
            return;
        }
        self.used[k as usize] = true;
        self.slots[p] = k;
        self.slots[q] = k;
        self.run(p + 1);
        self.slots[p] = EMPTY;
        self.slots[q] = EMPTY;
        self.used[k as usize] = false;
    }

    fn run(&mut self, from: usize) {
        let Some(p) = (from..self.problem.len).find(|&p| self.slots[p] == EMPTY) else {
            (self.visit)(&self.slots);
            return;
        };
        self.try_zero(p);
        for k in self.problem.low..=self.problem.high {
            self.try_symbol(p, k);
        }
    }
}

/// Choices for the first slot: `None` is the zero.
fn first_choices(problem: PairProblem) -> Vec<Option<u32>> {
    let mut v = Vec::new();
    if problem.zero {
        v.push(None);
    }
    v.extend((problem.low..=problem.high).map(Some));
    v
}

fn run_branch(problem: PairProblem, first: Option<u32>, visit: &mut dyn FnMut(&[u32])) {
    let mut search = PairSearch::new(problem, visit);
    match first {
        None => search.try_zero(0),
        Some(k) => search.try_symbol(0, k),
    }
}

fn collect_solutions(problem: PairProblem) -> Vec<Vec<u32>> {
    first_choices(problem)
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            run_branch(problem, first, &mut |s| found.push(s.to_vec()));
            found
        })
        .flatten()
        .collect()
}

fn count_solutions(problem: PairProblem) -> u64 {
    first_choices(problem)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            run_branch(problem, first, &mut |_| count += 1);
            count
        })
        .sum()
}

fn langford_problem(m: usize, d: u32, guards: &Guards) -> Result<PairProblem, CensusError> {
    if m == 0 {
        return Err(CensusError::NonPositive { name: "m" });
    }
    if d == 0 {
        return Err(CensusError::NonPositive { name: "d" });
    }
    if m > guards.max_order {
        return Err(too_large("order", m, guards.max_order));
    }
    Ok(PairProblem {
        len: 2 * m,
        low: d,
        high: d + m as u32 - 1,
        zero: false,
        zero_at_ends: false,
    })
}

fn extended_problem(
    m: usize,
    include_trivial: bool,
    guards: &Guards,
) -> Result<PairProblem, CensusError> {
    if m == 0 {
        return Err(CensusError::NonPositive { name: "m" });
    }
    if m > guards.max_order {
        return Err(too_large("order", m, guards.max_order));
    }
    Ok(PairProblem {
        len: 2 * m + 1,
        low: 1,
        high: m as u32,
        zero: true,
        zero_at_ends: include_trivial,
    })
}

/// Every Langford sequence of order `m` and defect `d`, lexicographically.
pub fn brute_force_langford(
    m: usize,
    d: u32,
    guards: &Guards,
) -> Result<Vec<LangfordSeq>, CensusError> {
    let problem = langford_problem(m, d, guards)?;
    Ok(collect_solutions(problem)
        .into_iter()
        .map(|v| LangfordSeq::from_trusted(v, d))
        .collect())
}

pub fn brute_force_skolem(m: usize, guards: &Guards) -> Result<Vec<LangfordSeq>, CensusError> {
    brute_force_langford(m, 1, guards)
}

/// `λ_m^d` without materializing the sequences.
pub fn count_langford(m: usize, d: u32, guards: &Guards) -> Result<u64, CensusError> {
    Ok(count_solutions(langford_problem(m, d, guards)?))
}

/// Every extended Skolem sequence of order `m`; trivial ones (zero first or
/// last) only when `include_trivial` is set.
pub fn brute_force_extended(
    m: usize,
    include_trivial: bool,
    guards: &Guards,
) -> Result<Vec<ExtendedSkolemSeq>, CensusError> {
    let problem = extended_problem(m, include_trivial, guards)?;
    Ok(collect_solutions(problem)
        .into_iter()
        .map(ExtendedSkolemSeq::from_trusted)
        .collect())
}

pub fn count_extended(
    m: usize,
    include_trivial: bool,
    guards: &Guards,
) -> Result<u64, CensusError> {
    Ok(count_solutions(extended_problem(
        m,
        include_trivial,
        guards,
    )?))
}

/// A lower bound, either integral or an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Integer(BigUint),
    Rational(BigRational),
}

impl BoundValue {
    fn from_rational(r: BigRational) -> Self {
        if r.is_integer() {
            let n = r.to_integer();
            BoundValue::Integer(n.to_biguint().expect("bounds are nonnegative"))
        } else {
            BoundValue::Rational(r)
        }
    }

    /// Whether `count >= self`.
    pub fn is_met_by(&self, count: &BigUint) -> bool {
        match self {
            BoundValue::Integer(b) => count >= b,
            BoundValue::Rational(r) => BigRational::from_integer(count.clone().into()) >= *r,
        }
    }

    /// The bound as an integer, when it is one.
    pub fn as_integer(&self) -> Option<&BigUint> {
        match self {
            BoundValue::Integer(b) => Some(b),
            BoundValue::Rational(_) => None,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(b) => write!(f, "{b}"),
            BoundValue::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn ser_opt_dec<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

/// Which bound a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundName {
    /// `σ_m >= 2^⌊m/3⌋` for `m ≡ 0, 1 (mod 4)`.
    SkolemExponential,
    /// `λ_{mn}^{nd-(n-1)/2} >= |S_n|^m λ_m^d`.
    LangfordProduct,
    /// `λ_{mn}^{(n+1)/2} >= |S_n|^m 2^⌊m/3⌋`.
    SkolemProduct,
    /// `λ_{mn}^{(n+1)/2} >= (5/2·2^⌊(n-1)/3⌋+2)^m 2^⌊m/3⌋`.
    CycleProduct,
    /// `ε_{mn+(n-1)/2} >= 2|S_n|^m ε_m`.
    ExtendedProduct,
    /// SEM labeled cycles on `[1, n]` `>= 5/4·2^⌊(n-1)/3⌋+1`.
    CycleLabelings,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    /// Order of the sequences the bound talks about.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_defect: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub include_trivial: Option<bool>,
}

/// An exact count set against a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub format: u32,
    pub params: ReportParams,
    /// Brute-force count, when inside the guards.
    #[serde(serialize_with = "ser_opt_dec")]
    pub exact: Option<BigUint>,
    pub bound: BoundValue,
    pub bound_name: BoundName,
    /// `exact >= bound`; without an exact count, decided by a constructive
    /// census when one fits the guards, otherwise unknown.
    pub satisfied: Option<bool>,
    /// Distinct valid sequences produced by the constructive census.
    #[serde(
        serialize_with = "ser_opt_dec",
        skip_serializing_if = "Option::is_none"
    )]
    pub witnessed: Option<BigUint>,
    /// Factor values entering the bound, as decimal strings.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub factors: BTreeMap<&'static str, String>,
    /// False when the bound is evaluated outside the range it is proven for.
    pub in_range: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CountReport {
    fn new(bound_name: BoundName, params: ReportParams, bound: BoundValue) -> Self {
        CountReport {
            format: 1,
            params,
            exact: None,
            bound,
            bound_name,
            satisfied: None,
            witnessed: None,
            factors: BTreeMap::new(),
            in_range: true,
            notes: Vec::new(),
        }
    }

    fn settle(&mut self) {
        self.satisfied = match (&self.exact, &self.witnessed) {
            (Some(e), _) => Some(self.bound.is_met_by(e)),
            (None, Some(w)) if self.bound.is_met_by(w) => Some(true),
            _ => None,
        };
    }
}

fn require_odd(n: usize) -> Result<(), CensusError> {
    if n.is_multiple_of(2) {
        Err(CensusError::EvenOrder { n })
    } else {
        Ok(())
    }
}

fn require_residue(m: usize) -> Result<(), CensusError> {
    match m % 4 {
        0 | 1 if m > 0 => Ok(()),
        _ => Err(CensusError::BadResidue { m }),
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// `RS_n` under the family-order guard.
pub fn rotation_family(n: usize, guards: &Guards) -> Result<Vec<RotationMember>, CensusError> {
    if n == 0 {
        return Err(CensusError::NonPositive { name: "n" });
    }
    if n > guards.max_family_order {
        return Err(too_large("n", n, guards.max_family_order));
    }
    Ok(sem::enumerate_rsn(n))
}

fn exact_langford(m: usize, d: u32, guards: &Guards) -> Option<BigUint> {
    count_langford(m, d, guards).ok().map(BigUint::from)
}

/// `λ_{mn}^{d'} >= |S_n|^m λ_m^d` with `d' = nd-(n-1)/2`.
pub fn langford_product_bound(
    m: usize,
    n: usize,
    d: u32,
    guards: &Guards,
) -> Result<CountReport, CensusError> {
    require_odd(n)?;
    let sn = rotation_family(n, guards)?.len();
    let lambda = count_langford(m, d, guards)?;
    let bound = BigUint::from(sn).pow(m as u32) * lambda;
    let d_out = expanded_defect(d, n);
    let mut r = CountReport::new(
        BoundName::LangfordProduct,
        ReportParams {
            m: Some(m),
            n: Some(n),
            d: Some(d),
            output_order: Some(m * n),
            output_defect: Some(d_out),
            ..Default::default()
        },
        BoundValue::Integer(bound),
    );
    r.factors.insert("s_n", sn.to_string());
    r.factors.insert("lambda_m_d", lambda.to_string());
    r.exact = exact_langford(m * n, d_out, guards);
    if r.exact.is_none() {
        r.witnessed = constructive_census(m, n, d, guards)
            .ok()
            .map(|c| BigUint::from(c.sequences.len()));
    }
    r.settle();
    Ok(r)
}

/// `σ_m >= 2^⌊m/3⌋` for `m ≡ 0, 1 (mod 4)`.
pub fn skolem_exponential_bound(m: usize, guards: &Guards) -> Result<CountReport, CensusError> {
    require_residue(m)?;
    let mut r = CountReport::new(
        BoundName::SkolemExponential,
        ReportParams {
            m: Some(m),
            d: Some(1),
            output_order: Some(m),
            ..Default::default()
        },
        BoundValue::Integer(pow2(m / 3)),
    );
    r.exact = exact_langford(m, 1, guards);
    r.settle();
    Ok(r)
}

/// Shared part of the two Skolem-seeded Langford bounds.
fn skolem_seeded(
    name: BoundName,
    m: usize,
    n: usize,
    bound: BoundValue,
    guards: &Guards,
) -> CountReport {
    let d_out = (n as u32).div_ceil(2);
    let mut r = CountReport::new(
        name,
        ReportParams {
            m: Some(m),
            n: Some(n),
            d: Some(1),
            output_order: Some(m * n),
            output_defect: Some(d_out),
            ..Default::default()
        },
        bound,
    );
    r.exact = exact_langford(m * n, d_out, guards);
    if r.exact.is_none() {
        r.witnessed = constructive_census(m, n, 1, guards)
            .ok()
            .map(|c| BigUint::from(c.sequences.len()));
    }
    r
}

/// `λ_{mn}^{(n+1)/2} >= |S_n|^m 2^⌊m/3⌋` for `m ≡ 0, 1 (mod 4)`, `n` odd.
pub fn skolem_product_bound(
    m: usize,
    n: usize,
    guards: &Guards,
) -> Result<CountReport, CensusError> {
    require_residue(m)?;
    require_odd(n)?;
    let sn = rotation_family(n, guards)?.len();
    let bound = BigUint::from(sn).pow(m as u32) * pow2(m / 3);
    let mut r = skolem_seeded(
        BoundName::SkolemProduct,
        m,
        n,
        BoundValue::Integer(bound),
        guards,
    );
    r.factors.insert("s_n", sn.to_string());
    r.settle();
    Ok(r)
}

/// `5/4·2^⌊(n-1)/3⌋+1`, the lower estimate for SEM labeled odd cycles.
pub fn cycle_labeling_estimate(n: usize) -> BigRational {
    let p: BigRational = BigRational::from_integer(pow2((n - 1) / 3).into());
    BigRational::new(5.into(), 4.into()) * p + BigRational::one()
}

/// `λ_{mn}^{(n+1)/2} >= (5/2·2^⌊(n-1)/3⌋+2)^m 2^⌊m/3⌋`, evaluated exactly.
/// The cycle estimate behind it is only established for `n >= 11`; smaller
/// `n` are reported with `in_range = false`.
pub fn cycle_product_bound(
    m: usize,
    n: usize,
    guards: &Guards,
) -> Result<CountReport, CensusError> {
    require_residue(m)?;
    require_odd(n)?;
    let per_arc = BigRational::from_integer(2.into()) * cycle_labeling_estimate(n);
    let mut bound = num_traits::pow(per_arc.clone(), m);
    bound *= BigRational::from_integer(pow2(m / 3).into());
    let mut r = skolem_seeded(
        BoundName::CycleProduct,
        m,
        n,
        BoundValue::from_rational(bound),
        guards,
    );
    r.factors
        .insert("per_arc", BoundValue::from_rational(per_arc).to_string());
    if n < 11 {
        r.in_range = false;
        r.notes.push(format!(
            "cycle labeling estimate is only established for n >= 11, got n = {n}"
        ));
    }
    r.settle();
    Ok(r)
}

/// `ε_{mn+(n-1)/2} >= 2|S_n|^m ε_m`. The count is compared at order
/// `mn+(n-1)/2`, the order the extended expansion produces.
pub fn extended_product_bound(
    m: usize,
    n: usize,
    include_trivial: bool,
    guards: &Guards,
) -> Result<CountReport, CensusError> {
    require_odd(n)?;
    let sn = rotation_family(n, guards)?.len();
    let eps_all = count_extended(m, true, guards)?;
    let eps_nontrivial = count_extended(m, false, guards)?;
    let eps = if include_trivial {
        eps_all
    } else {
        eps_nontrivial
    };
    let bound = BigUint::from(2u32) * BigUint::from(sn).pow(m as u32) * eps;
    let out_order = m * n + (n - 1) / 2;
    let mut r = CountReport::new(
        BoundName::ExtendedProduct,
        ReportParams {
            m: Some(m),
            n: Some(n),
            output_order: Some(out_order),
            include_trivial: Some(include_trivial),
            ..Default::default()
        },
        BoundValue::Integer(bound),
    );
    r.factors.insert("s_n", sn.to_string());
    r.factors.insert("epsilon_m_all", eps_all.to_string());
    r.factors
        .insert("epsilon_m_nontrivial", eps_nontrivial.to_string());
    r.notes.push(format!(
        "count taken at the expansion output order mn+(n-1)/2 = {out_order}, not mn = {}",
        m * n
    ));
    r.exact = count_extended(out_order, include_trivial, guards)
        .ok()
        .map(BigUint::from);
    if r.exact.is_none() {
        r.witnessed = constructive_census_extended(m, n, include_trivial, guards)
            .ok()
            .map(|c| BigUint::from(c.sequences.len()));
    }
    r.settle();
    Ok(r)
}

/// SEM labeled cycles on `[1, n]` against `5/4·2^⌊(n-1)/3⌋+1` (established
/// for odd `n >= 11`).
pub fn cycle_labeling_bound(n: usize, guards: &Guards) -> Result<CountReport, CensusError> {
    require_odd(n)?;
    if n < 3 {
        return Err(CensusError::NonPositive { name: "n - 2" });
    }
    if n > guards.max_family_order {
        return Err(too_large("n", n, guards.max_family_order));
    }
    let count = sem::count_cycle_sem_labelings(n);
    let mut r = CountReport::new(
        BoundName::CycleLabelings,
        ReportParams {
            n: Some(n),
            ..Default::default()
        },
        BoundValue::from_rational(cycle_labeling_estimate(n)),
    );
    r.factors.insert("labelings", count.labelings.to_string());
    r.exact = Some(count.labeled_cycles.into());
    if n < 11 {
        r.in_range = false;
        r.notes.push(format!(
            "estimate is only established for n >= 11, got n = {n}"
        ));
    }
    r.settle();
    Ok(r)
}

/// Outputs of a constructive census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census<T> {
    /// Distinct sequences, sorted.
    pub sequences: BTreeSet<T>,
    /// Number of (sequence, assignment) pairs expanded.
    pub generated: u64,
}

impl<T> Census<T> {
    /// Distinct inputs gave distinct outputs.
    pub fn is_injective(&self) -> bool {
        self.generated == self.sequences.len() as u64
    }
}

/// All index tuples in `[0, base)^len`, last coordinate fastest.
fn index_tuples(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if base == 0 && len > 0 {
        0
    } else {
        base.pow(len as u32)
    };
    (0..total).map(move |mut t| {
        let mut digits = vec![0; len];
        for slot in digits.iter_mut().rev() {
            *slot = t % base;
            t /= base;
        }
        digits
    })
}

fn census_size(factor: usize, family: usize, m: usize, count: usize) -> Option<u64> {
    (BigUint::from(factor) * BigUint::from(family).pow(m as u32) * BigUint::from(count)).to_u64()
}

/// Expands every Langford sequence of order `m`, defect `d` under every
/// assignment into `RS_n`. Injectivity means the result has exactly
/// `|S_n|^m λ_m^d` members.
pub fn constructive_census(
    m: usize,
    n: usize,
    d: u32,
    guards: &Guards,
) -> Result<Census<LangfordSeq>, CensusError> {
    require_odd(n)?;
    let family = rotation_family(n, guards)?;
    let seeds = brute_force_langford(m, d, guards)?;
    match census_size(1, family.len(), m, seeds.len()) {
        Some(total) if total <= guards.max_outputs => {}
        _ => {
            let b = BigUint::from(family.len()).pow(m as u32) * seeds.len();
            return Err(too_large("census size", b, guards.max_outputs));
        }
    }
    let per_seed: Vec<Vec<LangfordSeq>> = seeds
        .par_iter()
        .map(|s| {
            let base = seq_to_matching(s).to_digraph();
            index_tuples(family.len(), m)
                .map(|idx| {
                    let h = indexed_assignment(base.clone(), &family, &idx, None)?;
                    construct::expand_langford(s, n, &h)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let generated = per_seed.iter().map(|v| v.len() as u64).sum();
    Ok(Census {
        sequences: per_seed.into_iter().flatten().collect(),
        generated,
    })
}

/// Expands every extended Skolem sequence of order `m` under every
/// assignment into `RS_n` and both canonical loop images.
pub fn constructive_census_extended(
    m: usize,
    n: usize,
    include_trivial: bool,
    guards: &Guards,
) -> Result<Census<ExtendedSkolemSeq>, CensusError> {
    require_odd(n)?;
    let family = rotation_family(n, guards)?;
    let seeds = brute_force_extended(m, include_trivial, guards)?;
    match census_size(2, family.len(), m, seeds.len()) {
        Some(total) if total <= guards.max_outputs => {}
        _ => {
            let b = BigUint::from(2u32) * BigUint::from(family.len()).pow(m as u32) * seeds.len();
            return Err(too_large("census size", b, guards.max_outputs));
        }
    }
    let loops = LoopChoice::BOTH
        .iter()
        .map(|c| c.digraph(n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(ConstructError::from)?;
    let per_seed: Vec<Vec<ExtendedSkolemSeq>> = seeds
        .par_iter()
        .map(|s| {
            let base = seq_to_loop_matching(s).to_digraph();
            let mut out = Vec::new();
            for r in &loops {
                for idx in index_tuples(family.len(), m) {
                    let h = indexed_assignment(base.clone(), &family, &idx, Some(r))?;
                    out.push(construct::expand_extended(s, n, &h, LoopPolicy::Canonical)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_, ConstructError>>()?;
    let generated = per_seed.iter().map(|v| v.len() as u64).sum();
    Ok(Census {
        sequences: per_seed.into_iter().flatten().collect(),
        generated,
    })
}

impl From<sem::SemError> for CensusError {
    fn from(e: sem::SemError) -> Self {
        CensusError::Construct(e.into())
    }
}

/// Whether a bound value is zero (empty seed family).
pub fn is_zero_bound(b: &BoundValue) -> bool {
    matches!(b, BoundValue::Integer(v) if v.is_zero())
}
