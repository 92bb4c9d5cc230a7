//! Super edge-magic (SEM) labeled digraphs.
//!
//! A digraph whose vertices are named by their labels `[1, p]` is SEM when
//! the sums `u + v` over its arcs (a loop at `u` contributing `2u`) are
//! pairwise distinct and form a run of consecutive integers. The families
//! used by the expansions are:
//!
//! * `S_n`: the SEM 1-regular digraphs of order `n`, i.e. permutations `π` of
//!   `[1, n]` whose sums `i + π(i)` are `n` consecutive distinct integers;
//! * `RS_n`: their quarter-turn rotations ([`Digraph::rotate`]).
//!
//! Every member of `RS_n` (`n` odd) has exactly one arc `(i, j)` with
//! `i - j = k` for each `|k| <= (n-1)/2`, which is what makes the product
//! spread differences evenly.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::digraphs::Digraph;

/// Largest order accepted by [`enumerate_sn`]; sums are tracked in a `u128`.
pub const MAX_SN_ORDER: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum SemError {
    #[error("order {n} is even, an odd order is required")]
    EvenOrder { n: usize },
    #[error("order {n} is too small, at least {min} is required")]
    TooSmall { n: usize, min: usize },
}

fn require_odd(n: usize, min: usize) -> Result<(), SemError> {
    if n.is_multiple_of(2) {
        return Err(SemError::EvenOrder { n });
    }
    if n < min {
        return Err(SemError::TooSmall { n, min });
    }
    Ok(())
}

/// A 1-regular digraph of order `n` given by the permutation `i -> pi(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermDigraph {
    pi: Vec<u32>,
}

impl PermDigraph {
    /// `pi` in one-line notation; `None` unless it is a permutation of `[1, n]`.
    pub fn new(pi: Vec<u32>) -> Option<Self> {
        let n = pi.len();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n + 1];
        for &v in &pi {
            let v = v as usize;
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(PermDigraph { pi })
    }

    /// Reads a 1-regular digraph back as a permutation.
    pub fn from_digraph(g: &Digraph) -> Option<Self> {
        if !g.is_one_regular() {
            return None;
        }
        let pi = (1..=g.order())
            .map(|u| g.out_neighbors(u).next().unwrap() as u32)
            .collect();
        Some(PermDigraph { pi })
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    /// One-line notation `(pi(1), ..., pi(n))`.
    pub fn pi(&self) -> &[u32] {
        &self.pi
    }

    /// The sums `i + pi(i)` in vertex order.
    pub fn sums(&self) -> Vec<usize> {
        self.pi
            .iter()
            .enumerate()
            .map(|(i, &v)| i + 1 + v as usize)
            .collect()
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_arcs(
            self.n(),
            self.pi
                .iter()
                .enumerate()
                .map(|(i, &v)| (i + 1, v as usize)),
        )
        .expect("a permutation is a valid digraph")
    }

    /// The rotation as a permutation: arc `(i, pi(i))` turns into
    /// `(pi(i), n+1-i)`.
    pub fn rotated(&self) -> PermDigraph {
        let n = self.n();
        let mut rho = vec![0u32; n];
        for (i, &v) in self.pi.iter().enumerate() {
            rho[v as usize - 1] = (n - i) as u32;
        }
        PermDigraph { pi: rho }
    }
}

/// A member of `RS_n` together with the `S_n` member it was rotated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMember {
    source: PermDigraph,
    digraph: Digraph,
}

impl RotationMember {
    pub fn from_source(source: PermDigraph) -> Self {
        let digraph = source.to_digraph().rotate();
        RotationMember { source, digraph }
    }

    pub fn source(&self) -> &PermDigraph {
        &self.source
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }
}

/// Minimum arc sum when `g` is SEM labeled by its vertex names.
pub fn sem_min_sum(g: &Digraph) -> Option<usize> {
    let mut sums: Vec<usize> = g.arcs().map(|(u, v)| u + v).collect();
    if sums.is_empty() {
        return None;
    }
    sums.sort_unstable();
    let min = sums[0];
    sums.iter()
        .enumerate()
        .all(|(i, &s)| s == min + i)
        .then_some(min)
}

/// Whether the vertex names of `g` form a super edge-magic labeling.
pub fn is_sem_labeled(g: &Digraph) -> bool {
    sem_min_sum(g).is_some()
}

/// The consecutive windows `[k, k+n-1]` a permutation of `[1, n]` could fill.
/// The sums of any permutation total `n(n+1)`, so at most one window fits
/// (none when `n` is even).
fn feasible_windows(n: usize) -> Vec<usize> {
    (2..=2 * n)
        .filter(|&k| n * k + n * (n - 1) / 2 == n * (n + 1))
        .collect()
}

struct SnSearch {
    n: usize,
    low: usize,
    high: usize,
    pi: Vec<u32>,
    used_values: u128,
    used_sums: u128,
}

impl SnSearch {
    fn run(&mut self, i: usize, out: &mut Vec<PermDigraph>) {
        if i > self.n {
            out.push(PermDigraph {
                pi: self.pi.clone(),
            });
            return;
        }
        let lo = self.low.saturating_sub(i).max(1);
        let hi = (self.high - i).min(self.n);
        for v in lo..=hi {
            let s = i + v;
            if self.used_values >> v & 1 == 1 || self.used_sums >> s & 1 == 1 {
                continue;
            }
            self.used_values |= 1 << v;
            self.used_sums |= 1 << s;
            self.pi[i - 1] = v as u32;
            self.run(i + 1, out);
            self.used_values &= !(1 << v);
            self.used_sums &= !(1 << s);
        }
    }
}

/// All members of `S_n`, sorted lexicographically by one-line notation.
///
/// Backtracks over `pi(1), pi(2), ...` inside each feasible sum window,
/// pruning on used values and used sums. Branches on `pi(1)` run in parallel.
///
/// # Panics
/// If `n` is 0 or exceeds [`MAX_SN_ORDER`].
pub fn enumerate_sn(n: usize) -> Vec<PermDigraph> {
    assert!((1..=MAX_SN_ORDER).contains(&n), "order {n} out of range");
    let branches: Vec<(usize, usize)> = feasible_windows(n)
        .into_iter()
        .flat_map(|k| (1..=n).map(move |v| (k, v)))
        .collect();
    let mut out: Vec<PermDigraph> = branches
        .into_par_iter()
        .map(|(k, v)| {
            let mut found = Vec::new();
            let s = 1 + v;
            if s < k || s > k + n - 1 {
                return found;
            }
            let mut search = SnSearch {
                n,
                low: k,
                high: k + n - 1,
                pi: vec![0; n],
                used_values: 1 << v,
                used_sums: 1 << s,
            };
            search.pi[0] = v as u32;
            search.run(2, &mut found);
            found
        })
        .flatten()
        .collect();
    out.sort();
    out
}

/// `RS_n`: rotations of [`enumerate_sn`], in the same order.
pub fn enumerate_rsn(n: usize) -> Vec<RotationMember> {
    enumerate_sn(n)
        .into_iter()
        .map(RotationMember::from_source)
        .collect()
}

/// Whether the arc differences `i - j` of `g` hit every integer of
/// `[-(n-1)/2, (n-1)/2]` exactly once.
pub fn check_difference_bijection(g: &Digraph) -> Result<bool, SemError> {
    let n = g.order();
    require_odd(n, 1)?;
    if g.arc_count() != n {
        return Ok(false);
    }
    let half = (n as i64 - 1) / 2;
    let mut hit = vec![false; n];
    for (i, j) in g.arcs() {
        let k = i as i64 - j as i64;
        if k.abs() > half {
            return Ok(false);
        }
        let slot = (k + half) as usize;
        if std::mem::replace(&mut hit[slot], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in `RS_n`. A 1-regular digraph is the rotation of some
/// `S_n` member exactly when its differences are bijective: un-rotating arc
/// `(i, j)` gives an arc with sum `n+1+(i-j)`.
pub fn is_rotation_member(g: &Digraph) -> bool {
    g.order() % 2 == 1 && g.is_one_regular() && check_difference_bijection(g) == Ok(true)
}

/// Labels `(f(v_1), ..., f(v_n))` of the standard SEM labeling of the odd
/// cycle `v_1 v_2 ... v_n v_1`: odd `i` gets `(i+1)/2`, even `i` gets
/// `(n+i+1)/2`.
pub fn canonical_cycle_labeling(n: usize) -> Result<Vec<usize>, SemError> {
    require_odd(n, 3)?;
    Ok((1..=n)
        .map(|i| {
            if i % 2 == 1 {
                i.div_ceil(2)
            } else {
                (n + i).div_ceil(2)
            }
        })
        .collect())
}

/// The two strong orientations of the canonically labeled cycle: the first
/// follows `v_1 -> v_2 -> ... -> v_n -> v_1`, the second is its reverse.
pub fn cycle_orientations(n: usize) -> Result<(Digraph, Digraph), SemError> {
    let f = canonical_cycle_labeling(n)?;
    let forward = Digraph::from_arcs(n, (0..n).map(|i| (f[i], f[(i + 1) % n])))
        .expect("labels are a permutation");
    let backward = forward.reversed();
    Ok((forward, backward))
}

/// Rotations `(R1, R2)` of the two cycle orientations. Each is one loop
/// plus `(n-1)/2` digons.
pub fn loop_digon_rotations(n: usize) -> Result<(Digraph, Digraph), SemError> {
    let (s1, s2) = cycle_orientations(n)?;
    Ok((s1.rotate(), s2.rotate()))
}

/// Exactly one loop and every other arc paired with its reverse.
pub fn is_loop_digon(g: &Digraph) -> bool {
    if !g.is_one_regular() || g.loops().len() != 1 {
        return false;
    }
    g.arcs().all(|(u, v)| g.has_arc(v, u))
}

/// Vertex carrying the loop of a loop-plus-digons digraph.
pub fn loop_vertex(g: &Digraph) -> Option<usize> {
    match g.loops().as_slice() {
        [c] => Some(*c),
        _ => None,
    }
}

/// SEM labelings of the cycle `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleLabelingCount {
    pub n: usize,
    /// Bijections `V(C_n) -> [1, n]` with consecutive distinct edge sums.
    pub labelings: u64,
    /// Distinct labeled cycles on `[1, n]`, i.e. labelings up to the `2n`
    /// symmetries of the cycle.
    pub labeled_cycles: u64,
}

struct CycleSearch {
    n: usize,
    low: usize,
    high: usize,
    first: usize,
    used_values: u128,
    used_sums: u128,
    count: u64,
}

impl CycleSearch {
    fn run(&mut self, placed: usize, prev: usize) {
        if placed == self.n {
            let s = prev + self.first;
            if s >= self.low && s <= self.high && self.used_sums >> s & 1 == 0 {
                self.count += 1;
            }
            return;
        }
        for v in 1..=self.n {
            let s = prev + v;
            if s < self.low || s > self.high {
                continue;
            }
            if self.used_values >> v & 1 == 1 || self.used_sums >> s & 1 == 1 {
                continue;
            }
            self.used_values |= 1 << v;
            self.used_sums |= 1 << s;
            self.run(placed + 1, v);
            self.used_values &= !(1 << v);
            self.used_sums &= !(1 << s);
        }
    }
}

/// Counts SEM labelings of `C_n` by backtracking around the cycle.
///
/// # Panics
/// If `n < 3` or `n` exceeds [`MAX_SN_ORDER`].
pub fn count_cycle_sem_labelings(n: usize) -> CycleLabelingCount {
    assert!((3..=MAX_SN_ORDER).contains(&n), "order {n} out of range");
    let labelings: u64 = feasible_windows(n)
        .into_iter()
        .flat_map(|k| (1..=n).map(move |v| (k, v)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, first)| {
            let mut search = CycleSearch {
                n,
                low: k,
                high: k + n - 1,
                first,
                used_values: 1 << first,
                used_sums: 0,
                count: 0,
            };
            search.run(1, first);
            search.count
        })
        .sum();
    CycleLabelingCount {
        n,
        labelings,
        labeled_cycles: labelings / (2 * n as u64),
    }
}
