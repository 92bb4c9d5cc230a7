//! Sequences as labeled directed matchings, and the two expansions.
//!
//! A Langford sequence of order `m` and defect `d` is the same thing as a
//! labeling of `m` disjoint arcs by `[1, 2m]` where each arc `(u, v)` has
//! `u < v` and the differences `v - u` are exactly `[d, d+m-1]`: the arc for
//! symbol `k` joins the two positions of `k`. Extended Skolem sequences add a
//! loop on the position of the zero.
//!
//! Expanding by an odd `n` multiplies the matching by order-`n` members of
//! `RS_n` (one per arc) and reads the product back as a sequence. Arc
//! `(u, v)` with difference `k` turns into `n` arcs whose differences are
//! exactly `[nk-(n-1)/2, nk+(n-1)/2]`, so a defect-`d` sequence of order `m`
//! becomes one of order `mn` and defect `nd-(n-1)/2`. For extended sequences
//! the loop is sent to a loop-plus-digons member; keeping the positive arc of
//! each digon yields an extended sequence of order `mn+(n-1)/2`.

use serde::Serialize;
use thiserror::Error;

use crate::digraphs::{oxh_product, Arc, ArcAssignment, Digraph, DigraphError};
use crate::sem::{self, RotationMember, SemError};
use crate::sequences::{
    validate_extended, validate_langford, ExtendedSkolemSeq, LangfordSeq, Sequence, SequenceError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum ConstructError {
    #[error("expansion order {n} is even")]
    EvenOrder { n: usize },
    #[error("image of arc ({u},{v}) is not a rotation super edge-magic digraph")]
    NotRotationMember { u: usize, v: usize },
    #[error("loop image is not one loop plus digons in the rotation family")]
    NotLoopDigon,
    #[error("loop image is neither of the two canonical cycle rotations")]
    NonCanonicalLoop,
    #[error("arc ({u},{v}) does not go from the smaller to the larger label")]
    NotIncreasing { u: usize, v: usize },
    #[error("vertex {vertex} is used more than once")]
    VertexReuse { vertex: usize },
    #[error("vertex {vertex} is outside [1,{order}]")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("difference {difference} occurs on more than one arc")]
    NotInjective { difference: usize },
    #[error("arc differences do not form a consecutive run")]
    NotConsecutive,
    #[error("matching has no arcs")]
    EmptyMatching,
    #[error("family index {index} out of range (family has {len} members)")]
    BadIndex { index: usize, len: usize },
    #[error("{count} indices given for {arcs} arcs")]
    IndexCount { count: usize, arcs: usize },
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// A labeled `mK2` (optionally with one loop) on vertices `[1, p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledMatching {
    arcs: Vec<Arc>,
    loop_vertex: Option<usize>,
}

impl LabeledMatching {
    /// Checks that arcs point upwards, are vertex disjoint (also from the
    /// loop) and together cover `[1, p]`.
    pub fn new(mut arcs: Vec<Arc>, loop_vertex: Option<usize>) -> Result<Self, ConstructError> {
        if arcs.is_empty() {
            return Err(ConstructError::EmptyMatching);
        }
        let order = 2 * arcs.len() + loop_vertex.is_some() as usize;
        let mut used = vec![false; order + 1];
        let mut mark = |vertex: usize| {
            if vertex == 0 || vertex > order {
                return Err(ConstructError::VertexOutOfRange { vertex, order });
            }
            if std::mem::replace(&mut used[vertex], true) {
                return Err(ConstructError::VertexReuse { vertex });
            }
            Ok(())
        };
        for &(u, v) in &arcs {
            if u >= v {
                return Err(ConstructError::NotIncreasing { u, v });
            }
            mark(u)?;
            mark(v)?;
        }
        if let Some(c) = loop_vertex {
            mark(c)?;
        }
        arcs.sort_unstable();
        Ok(LabeledMatching { arcs, loop_vertex })
    }

    /// Arcs sorted by source.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn loop_vertex(&self) -> Option<usize> {
        self.loop_vertex
    }

    /// Number of vertices `p`.
    pub fn order(&self) -> usize {
        2 * self.arcs.len() + self.loop_vertex.is_some() as usize
    }

    /// `v - u` for each arc, in arc order.
    pub fn differences(&self) -> Vec<usize> {
        self.arcs.iter().map(|&(u, v)| v - u).collect()
    }

    /// The matching as a digraph; the loop becomes the arc `(c, c)`.
    pub fn to_digraph(&self) -> Digraph {
        let loops = self.loop_vertex.map(|c| (c, c));
        Digraph::from_arcs(self.order(), self.arcs.iter().copied().chain(loops))
            .expect("matching is a valid digraph")
    }
}

/// The labeled matching of a Langford sequence.
pub fn seq_to_matching(s: &LangfordSeq) -> LabeledMatching {
    let arcs = (s.defect()..s.defect() + s.order() as u32)
        .map(|k| s.positions(k).expect("validated sequence"))
        .collect();
    LabeledMatching::new(arcs, None).expect("validated sequence")
}

/// The labeled matching plus loop of an extended Skolem sequence.
pub fn seq_to_loop_matching(s: &ExtendedSkolemSeq) -> LabeledMatching {
    let arcs = (1..=s.order() as u32)
        .map(|k| s.positions(k).expect("validated sequence"))
        .collect();
    LabeledMatching::new(arcs, Some(s.zero_pos())).expect("validated sequence")
}

/// Reads a matching back as a sequence: Langford (defect = smallest
/// difference) without a loop, extended Skolem with one.
pub fn matching_to_seq(m: &LabeledMatching) -> Result<Sequence, ConstructError> {
    let mut diffs = m.differences();
    diffs.sort_unstable();
    if let Some(w) = diffs.windows(2).find(|w| w[0] == w[1]) {
        return Err(ConstructError::NotInjective { difference: w[0] });
    }
    let low = diffs[0];
    if diffs.iter().enumerate().any(|(i, &k)| k != low + i) {
        return Err(ConstructError::NotConsecutive);
    }
    let mut values = vec![0u32; m.order()];
    for &(u, v) in m.arcs() {
        values[u - 1] = (v - u) as u32;
        values[v - 1] = (v - u) as u32;
    }
    match m.loop_vertex() {
        None => Ok(Sequence::Langford(LangfordSeq::from_trusted(
            values, low as u32,
        ))),
        Some(_) if low != 1 => Err(ConstructError::NotConsecutive),
        Some(_) => Ok(Sequence::Extended(ExtendedSkolemSeq::from_trusted(values))),
    }
}

fn require_odd(n: usize) -> Result<(), ConstructError> {
    if n.is_multiple_of(2) {
        Err(ConstructError::EvenOrder { n })
    } else {
        Ok(())
    }
}

/// Defect of the expansion of a defect-`d` sequence by odd `n`.
pub fn expanded_defect(d: u32, n: usize) -> u32 {
    n as u32 * d - (n as u32 - 1) / 2
}

/// Orients every product arc from the smaller to the larger label and drops
/// the reverse arc of each digon.
fn product_to_matching(product: &Digraph) -> Result<LabeledMatching, ConstructError> {
    let mut arcs = Vec::with_capacity(product.arc_count());
    let mut loop_vertex = None;
    for (x, y) in product.arcs() {
        if x == y {
            if loop_vertex.replace(x).is_some() {
                return Err(ConstructError::NotLoopDigon);
            }
        } else if x < y {
            arcs.push((x, y));
        } else if !product.has_arc(y, x) {
            arcs.push((y, x));
        }
    }
    LabeledMatching::new(arcs, loop_vertex)
}

/// Expands a Langford sequence of order `m` and defect `d` into one of order
/// `mn` and defect `nd-(n-1)/2`. Every arc image of `h` must be in `RS_n`.
pub fn expand_langford(
    s: &LangfordSeq,
    n: usize,
    h: &ArcAssignment,
) -> Result<LangfordSeq, ConstructError> {
    require_odd(n)?;
    let base = seq_to_matching(s).to_digraph();
    if h.base() != &base {
        return Err(DigraphError::BaseMismatch.into());
    }
    for ((u, v), img) in h.iter() {
        if img.order() != n || !sem::is_rotation_member(img) {
            return Err(ConstructError::NotRotationMember { u, v });
        }
    }
    let product = oxh_product(&base, h)?;
    let out = match matching_to_seq(&product_to_matching(&product)?)? {
        Sequence::Langford(l) => l,
        Sequence::Extended(_) => unreachable!("no loop in a Langford product"),
    };
    Ok(validate_langford(
        out.values(),
        expanded_defect(s.defect(), n),
    )?)
}

/// Which of the two canonical loop images to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LoopChoice {
    /// Rotation of `v_1 -> v_2 -> ... -> v_n -> v_1`.
    First,
    /// Rotation of the reverse orientation.
    Second,
}

impl LoopChoice {
    pub const BOTH: [LoopChoice; 2] = [LoopChoice::First, LoopChoice::Second];

    /// `1` or `2`.
    pub fn from_number(k: u8) -> Option<Self> {
        match k {
            1 => Some(LoopChoice::First),
            2 => Some(LoopChoice::Second),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            LoopChoice::First => 1,
            LoopChoice::Second => 2,
        }
    }

    /// The loop-plus-digons digraph this choice stands for at order `n`.
    pub fn digraph(self, n: usize) -> Result<Digraph, SemError> {
        let (r1, r2) = sem::loop_digon_rotations(n)?;
        Ok(match self {
            LoopChoice::First => r1,
            LoopChoice::Second => r2,
        })
    }
}

/// What the loop of an extended sequence may be sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoopPolicy {
    /// Only the two canonical cycle rotations.
    #[default]
    Canonical,
    /// Any loop-plus-digons member of `RS_n`.
    Permissive,
}

/// Expands an extended (or hooked) Skolem sequence of order `m` into one of
/// order `mn+(n-1)/2`. `h` covers every arc of the loop matching, loop
/// included; the output zero sits at `n(z-1)+c` where `z` is the input zero
/// and `c` the loop vertex of the loop image.
pub fn expand_extended(
    s: &ExtendedSkolemSeq,
    n: usize,
    h: &ArcAssignment,
    policy: LoopPolicy,
) -> Result<ExtendedSkolemSeq, ConstructError> {
    require_odd(n)?;
    let base = seq_to_loop_matching(s).to_digraph();
    if h.base() != &base {
        return Err(DigraphError::BaseMismatch.into());
    }
    let z = s.zero_pos();
    let canonical = match policy {
        LoopPolicy::Canonical => {
            let (r1, r2) = sem::loop_digon_rotations(n)?;
            Some([r1, r2])
        }
        LoopPolicy::Permissive => None,
    };
    for ((u, v), img) in h.iter() {
        if u == v {
            if img.order() != n || !sem::is_loop_digon(img) || !sem::is_rotation_member(img) {
                return Err(ConstructError::NotLoopDigon);
            }
            if let Some(allowed) = &canonical {
                if !allowed.contains(img) {
                    return Err(ConstructError::NonCanonicalLoop);
                }
            }
        } else if img.order() != n || !sem::is_rotation_member(img) {
            return Err(ConstructError::NotRotationMember { u, v });
        }
    }
    let product = oxh_product(&base, h)?;
    let out = match matching_to_seq(&product_to_matching(&product)?)? {
        Sequence::Extended(e) => e,
        Sequence::Langford(_) => unreachable!("the loop block keeps its loop"),
    };
    let out = validate_extended(out.values())?;
    debug_assert_eq!(
        out.zero_pos(),
        n * (z - 1) + sem::loop_vertex(h.image((z, z)).unwrap()).unwrap()
    );
    Ok(out)
}

/// Builds `h` over `base` from family indices, one per non-loop arc in
/// lexicographic arc order; loops get `loop_image`.
pub fn indexed_assignment(
    base: Digraph,
    family: &[RotationMember],
    indices: &[usize],
    loop_image: Option<&Digraph>,
) -> Result<ArcAssignment, ConstructError> {
    let n = family
        .first()
        .map(RotationMember::n)
        .or_else(|| loop_image.map(Digraph::order))
        .ok_or(ConstructError::BadIndex { index: 0, len: 0 })?;
    let arcs: Vec<Arc> = base.arcs().collect();
    let plain = arcs.iter().filter(|(u, v)| u != v).count();
    if indices.len() != plain {
        return Err(ConstructError::IndexCount {
            count: indices.len(),
            arcs: plain,
        });
    }
    if let Some(&index) = indices.iter().find(|&&i| i >= family.len()) {
        return Err(ConstructError::BadIndex {
            index,
            len: family.len(),
        });
    }
    let mut next = indices.iter();
    let mut images = std::collections::BTreeMap::new();
    for (u, v) in arcs {
        let img = if u == v {
            loop_image.cloned().ok_or(ConstructError::NotLoopDigon)?
        } else {
            family[*next.next().unwrap()].digraph().clone()
        };
        images.insert((u, v), img);
    }
    Ok(ArcAssignment::new(base, n, images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sem::enumerate_rsn;

    fn lf(values: &[u32], d: u32) -> LangfordSeq {
        validate_langford(values, d).unwrap()
    }

    fn ext(values: &[u32]) -> ExtendedSkolemSeq {
        validate_extended(values).unwrap()
    }

    fn g(order: usize, arcs: &[Arc]) -> Digraph {
        Digraph::from_arcs(order, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn sequence_matching_bijection() {
        let s = lf(&[4, 2, 3, 2, 4, 3, 1, 1], 1);
        let m = seq_to_matching(&s);
        assert_eq!(m.arcs(), &[(1, 5), (2, 4), (3, 6), (7, 8)]);
        assert_eq!(matching_to_seq(&m).unwrap(), Sequence::Langford(s));

        let e = ext(&[1, 1, 2, 0, 2]);
        let m = seq_to_loop_matching(&e);
        assert_eq!(m.arcs(), &[(1, 2), (3, 5)]);
        assert_eq!(m.loop_vertex(), Some(4));
        assert_eq!(matching_to_seq(&m).unwrap(), Sequence::Extended(e));

        let s = lf(&[1, 1], 1);
        assert_eq!(seq_to_matching(&s).arcs(), &[(1, 2)]);
    }

    #[test]
    fn matching_errors() {
        let m = LabeledMatching::new(vec![(1, 3), (2, 4)], None).unwrap();
        assert_eq!(
            matching_to_seq(&m),
            Err(ConstructError::NotInjective { difference: 2 })
        );
        assert_eq!(
            LabeledMatching::new(vec![(1, 4), (2, 4)], None),
            Err(ConstructError::VertexReuse { vertex: 4 })
        );
        assert_eq!(
            LabeledMatching::new(vec![(3, 1)], None),
            Err(ConstructError::NotIncreasing { u: 3, v: 1 })
        );
        assert_eq!(
            LabeledMatching::new(vec![(1, 5)], None),
            Err(ConstructError::VertexOutOfRange {
                vertex: 5,
                order: 2
            })
        );
        let gap = LabeledMatching::new(vec![(1, 2), (3, 6), (4, 5)], None);
        // differences 1, 3, 1 -> repeated
        assert!(matches!(
            matching_to_seq(&gap.unwrap()),
            Err(ConstructError::NotInjective { difference: 1 })
        ));
        let holes = LabeledMatching::new(vec![(1, 4), (2, 3), (5, 6)], None).unwrap();
        // differences 3, 1, 1
        assert!(matching_to_seq(&holes).is_err());
        let spread = LabeledMatching::new(vec![(1, 2), (3, 6), (4, 8), (5, 7)], None).unwrap();
        // differences 1, 3, 4, 2 -> consecutive, a Skolem sequence
        assert!(matches!(
            matching_to_seq(&spread),
            Ok(Sequence::Langford(_))
        ));
        let skip = LabeledMatching::new(vec![(1, 4), (2, 3)], None).unwrap();
        assert_eq!(matching_to_seq(&skip), Err(ConstructError::NotConsecutive));
    }

    #[test]
    fn perfect_langford_from_skolem() {
        let s = lf(&[4, 2, 3, 2, 4, 3, 1, 1], 1);
        let rs3 = enumerate_rsn(3);
        let base = seq_to_matching(&s).to_digraph();
        // arcs in order (1,5),(2,4),(3,6),(7,8)
        let h = indexed_assignment(base, &rs3, &[0, 0, 1, 1], None).unwrap();
        let out = expand_langford(&s, 3, &h).unwrap();
        assert_eq!(
            out.values(),
            &[12, 13, 11, 6, 7, 5, 10, 8, 9, 6, 5, 7, 12, 11, 13, 8, 10, 9, 4, 2, 3, 2, 4, 3]
        );
        assert_eq!(out.defect(), 2);
    }

    #[test]
    fn expansion_by_one_is_identity() {
        let s = lf(&[4, 2, 3, 2, 4, 3, 1, 1], 1);
        let base = seq_to_matching(&s).to_digraph();
        let h = ArcAssignment::constant(base, &g(1, &[(1, 1)]));
        assert_eq!(expand_langford(&s, 1, &h).unwrap(), s);
    }

    #[test]
    fn expansion_of_the_shortest_skolem() {
        let s = lf(&[1, 1], 1);
        let rs3 = enumerate_rsn(3);
        let base = seq_to_matching(&s).to_digraph();
        let h = ArcAssignment::constant(base, rs3[0].digraph());
        let out = expand_langford(&s, 3, &h).unwrap();
        // F1 = {(1,1),(2,3),(3,2)}: arcs (1,4),(2,6),(3,5) -> differences 3,4,2
        assert_eq!(out.values(), &[3, 4, 2, 3, 2, 4]);
        assert_eq!((out.order(), out.defect()), (3, 2));
    }

    #[test]
    fn expansion_rejects_bad_images() {
        let s = lf(&[1, 1], 1);
        let base = seq_to_matching(&s).to_digraph();
        let identity = g(3, &[(1, 1), (2, 2), (3, 3)]);
        let h = ArcAssignment::constant(base.clone(), &identity);
        assert_eq!(
            expand_langford(&s, 3, &h),
            Err(ConstructError::NotRotationMember { u: 1, v: 2 })
        );
        let h2 = ArcAssignment::constant(base, &g(2, &[(1, 2), (2, 1)]));
        assert_eq!(
            expand_langford(&s, 2, &h2),
            Err(ConstructError::EvenOrder { n: 2 })
        );
        let other = ArcAssignment::constant(g(2, &[(2, 1)]), &g(3, &[(1, 1), (2, 3), (3, 2)]));
        assert!(matches!(
            expand_langford(&s, 3, &other),
            Err(ConstructError::Digraph(DigraphError::BaseMismatch))
        ));
    }

    #[test]
    fn extended_expansion_example() {
        let s = ext(&[1, 1, 2, 0, 2]);
        let (r1, r2) = sem::loop_digon_rotations(5).unwrap();
        let r3 = g(5, &[(1, 3), (3, 4), (4, 2), (2, 1), (5, 5)]);
        let base = seq_to_loop_matching(&s).to_digraph();
        let mut images = std::collections::BTreeMap::new();
        images.insert((1, 2), r3);
        images.insert((3, 5), r2);
        images.insert((4, 4), r1);
        let h = ArcAssignment::new(base, 5, images).unwrap();
        let out = expand_extended(&s, 5, &h, LoopPolicy::Canonical).unwrap();
        assert_eq!(
            out.values(),
            &[7, 4, 6, 3, 5, 4, 3, 7, 6, 5, 11, 9, 12, 10, 8, 2, 0, 2, 1, 1, 9, 11, 8, 10, 12]
        );
        assert_eq!(out.zero_pos(), 17);
        assert_eq!(out.zero_pos(), 5 * (4 - 1) + 2);
    }

    #[test]
    fn extended_loop_checks() {
        let s = ext(&[1, 1, 0]);
        let rs3 = enumerate_rsn(3);
        let base = seq_to_loop_matching(&s).to_digraph();
        // n = 3: the canonical rotations are exactly the two members of RS_3
        for choice in LoopChoice::BOTH {
            let r = choice.digraph(3).unwrap();
            let h = indexed_assignment(base.clone(), &rs3, &[0], Some(&r)).unwrap();
            let out = expand_extended(&s, 3, &h, LoopPolicy::Canonical).unwrap();
            assert_eq!(out.order(), 4);
            let c = sem::loop_vertex(&r).unwrap();
            assert_eq!(out.zero_pos(), 3 * (3 - 1) + c);
        }
        let cycle = g(3, &[(1, 2), (2, 3), (3, 1)]);
        let h = indexed_assignment(base.clone(), &rs3, &[0], Some(&cycle)).unwrap();
        assert_eq!(
            expand_extended(&s, 3, &h, LoopPolicy::Permissive),
            Err(ConstructError::NotLoopDigon)
        );
    }

    #[test]
    fn permissive_loop_accepts_other_members() {
        let s = ext(&[1, 1, 2, 0, 2]);
        let rs5 = enumerate_rsn(5);
        let (r1, r2) = sem::loop_digon_rotations(5).unwrap();
        let others: Vec<&RotationMember> = rs5
            .iter()
            .filter(|r| sem::is_loop_digon(r.digraph()) && r.digraph() != &r1 && r.digraph() != &r2)
            .collect();
        let base = seq_to_loop_matching(&s).to_digraph();
        for r in others {
            let h = indexed_assignment(base.clone(), &rs5, &[0, 0], Some(r.digraph())).unwrap();
            assert_eq!(
                expand_extended(&s, 5, &h, LoopPolicy::Canonical),
                Err(ConstructError::NonCanonicalLoop)
            );
            let out = expand_extended(&s, 5, &h, LoopPolicy::Permissive).unwrap();
            assert_eq!(out.order(), 12);
        }
    }

    #[test]
    fn index_assignment_errors() {
        let s = lf(&[1, 1], 1);
        let rs3 = enumerate_rsn(3);
        let base = seq_to_matching(&s).to_digraph();
        assert_eq!(
            indexed_assignment(base.clone(), &rs3, &[2], None),
            Err(ConstructError::BadIndex { index: 2, len: 2 })
        );
        assert_eq!(
            indexed_assignment(base, &rs3, &[0, 1], None),
            Err(ConstructError::IndexCount { count: 2, arcs: 1 })
        );
    }
}
