//! Finite digraphs on `[1, p]` with loops allowed, stored as one adjacency
//! bitset per row, together with the quarter-turn rotation of the adjacency
//! matrix and the `⊗_h`-product.
//!
//! The product of `D` (order `p`) with a family of order-`n` digraphs under
//! an arc assignment `h` has vertex `(a, x)` flattened to `n(a-1)+x`, and arc
//! `((a,x),(b,y))` exactly when `(a,b)` is an arc of `D` and `(x,y)` is an arc
//! of `h(a,b)`. With a constant `h` its adjacency matrix is the Kronecker
//! product of the two adjacency matrices.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An arc `(u, v)` with 1-based endpoints.
pub type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum DigraphError {
    #[error("digraph order must be positive")]
    EmptyOrder,
    #[error("arc ({u},{v}) leaves the vertex set [1,{order}]")]
    VertexOutOfRange { u: usize, v: usize, order: usize },
    #[error("arc ({u},{v}) is listed twice")]
    DuplicateArc { u: usize, v: usize },
    #[error("image of arc ({u},{v}) has order {found}, expected {expected}")]
    OrderMismatch {
        u: usize,
        v: usize,
        expected: usize,
        found: usize,
    },
    #[error("arc ({u},{v}) has no image")]
    MissingArc { u: usize, v: usize },
    #[error("({u},{v}) is not an arc of the base digraph")]
    UnknownArc { u: usize, v: usize },
    #[error("assignment was built for a different base digraph")]
    BaseMismatch,
}

/// A digraph on vertices `1..=order`; at most one arc per ordered pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DigraphJson", into = "DigraphJson")]
pub struct Digraph {
    order: usize,
    rows: Vec<FixedBitSet>,
}

/// Wire form: `{"order": p, "arcs": [[u, v], ...]}`, arcs sorted.
#[derive(Serialize, Deserialize)]
struct DigraphJson {
    order: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = DigraphError;

    fn try_from(j: DigraphJson) -> Result<Self, Self::Error> {
        Digraph::from_arcs(j.order, j.arcs.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Digraph> for DigraphJson {
    fn from(g: Digraph) -> Self {
        DigraphJson {
            order: g.order,
            arcs: g.arcs().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Digraph {
    /// The arcless digraph of the given order.
    pub fn empty(order: usize) -> Result<Self, DigraphError> {
        if order == 0 {
            return Err(DigraphError::EmptyOrder);
        }
        Ok(Digraph {
            order,
            rows: vec![FixedBitSet::with_capacity(order); order],
        })
    }

    /// Builds a digraph from arcs; repeated arcs are rejected.
    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut g = Digraph::empty(order)?;
        for (u, v) in arcs {
            if !g.insert_arc(u, v)? {
                return Err(DigraphError::DuplicateArc { u, v });
            }
        }
        Ok(g)
    }

    /// Builds a digraph from a square 0/1 matrix (row `u-1`, column `v-1`).
    pub fn from_adjacency(matrix: &[Vec<u8>]) -> Result<Self, DigraphError> {
        let order = matrix.len();
        let mut g = Digraph::empty(order)?;
        for (i, row) in matrix.iter().enumerate() {
            for (j, &bit) in row.iter().enumerate() {
                if bit != 0 {
                    g.insert_arc(i + 1, j + 1)?;
                }
            }
        }
        Ok(g)
    }

    /// Inserts `(u, v)`; returns false if it was already present.
    pub fn insert_arc(&mut self, u: usize, v: usize) -> Result<bool, DigraphError> {
        if u == 0 || v == 0 || u > self.order || v > self.order {
            return Err(DigraphError::VertexOutOfRange {
                u,
                v,
                order: self.order,
            });
        }
        Ok(!self.rows[u - 1].put(v - 1))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.order && v <= self.order && self.rows[u - 1].contains(v - 1)
    }

    pub fn arc_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i + 1, j + 1)))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u - 1].ones().map(|j| j + 1)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.rows[u - 1].count_ones(..)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.rows.iter().filter(|r| r.contains(v - 1)).count()
    }

    /// Vertices carrying a loop.
    pub fn loops(&self) -> Vec<usize> {
        (1..=self.order).filter(|&u| self.has_arc(u, u)).collect()
    }

    /// Every vertex has in- and out-degree exactly one.
    pub fn is_one_regular(&self) -> bool {
        (1..=self.order).all(|u| self.out_degree(u) == 1)
            && self.arc_count() == self.order
            && (1..=self.order).all(|v| self.in_degree(v) == 1)
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| (0..self.order).map(|j| row.contains(j) as u8).collect())
            .collect()
    }

    /// Every arc turned around.
    pub fn reversed(&self) -> Digraph {
        let mut g = Digraph::empty(self.order).expect("order is positive");
        for (u, v) in self.arcs() {
            g.rows[v - 1].insert(u - 1);
        }
        g
    }

    /// Quarter-turn clockwise rotation of the adjacency matrix:
    /// entry `(i, j)` of the result is entry `(n+1-j, i)` of `self`, so arc
    /// `(u, v)` becomes `(v, n+1-u)`.
    pub fn rotate(&self) -> Digraph {
        let n = self.order;
        let mut g = Digraph::empty(n).expect("order is positive");
        for (u, v) in self.arcs() {
            g.rows[v - 1].insert(n - u);
        }
        g
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.order)?;
        f.debug_set().entries(self.arcs()).finish()?;
        f.write_str(")")
    }
}

/// An assignment `h` of an order-`n` digraph to every arc of a base digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcAssignment {
    base: Digraph,
    family_order: usize,
    images: BTreeMap<Arc, Digraph>,
}

impl ArcAssignment {
    /// Checks that `images` covers exactly the arcs of `base` and that every
    /// image has order `family_order`.
    pub fn new(
        base: Digraph,
        family_order: usize,
        images: BTreeMap<Arc, Digraph>,
    ) -> Result<Self, DigraphError> {
        if family_order == 0 {
            return Err(DigraphError::EmptyOrder);
        }
        for &(u, v) in images.keys() {
            if !base.has_arc(u, v) {
                return Err(DigraphError::UnknownArc { u, v });
            }
        }
        for (u, v) in base.arcs() {
            let img = images
                .get(&(u, v))
                .ok_or(DigraphError::MissingArc { u, v })?;
            if img.order() != family_order {
                return Err(DigraphError::OrderMismatch {
                    u,
                    v,
                    expected: family_order,
                    found: img.order(),
                });
            }
        }
        Ok(ArcAssignment {
            base,
            family_order,
            images,
        })
    }

    /// Every arc of `base` mapped to the same digraph.
    pub fn constant(base: Digraph, image: &Digraph) -> Self {
        let images = base.arcs().map(|a| (a, image.clone())).collect();
        ArcAssignment {
            family_order: image.order(),
            base,
            images,
        }
    }

    /// Builds the assignment arc by arc, in lexicographic arc order.
    pub fn from_fn<F>(base: Digraph, family_order: usize, mut f: F) -> Result<Self, DigraphError>
    where
        F: FnMut(Arc) -> Digraph,
    {
        let images = base.arcs().map(|a| (a, f(a))).collect();
        ArcAssignment::new(base, family_order, images)
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn family_order(&self) -> usize {
        self.family_order
    }

    pub fn image(&self, arc: Arc) -> Option<&Digraph> {
        self.images.get(&arc)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Arc, &Digraph)> {
        self.images.iter().map(|(&a, g)| (a, g))
    }
}

/// `D ⊗_h Γ`, with vertex `(a, x)` numbered `n(a-1)+x`.
pub fn oxh_product(d: &Digraph, h: &ArcAssignment) -> Result<Digraph, DigraphError> {
    if h.base() != d {
        return Err(DigraphError::BaseMismatch);
    }
    let n = h.family_order();
    let mut out = Digraph::empty(d.order() * n)?;
    for ((a, b), img) in h.iter() {
        for (x, y) in img.arcs() {
            out.rows[n * (a - 1) + x - 1].insert(n * (b - 1) + y - 1);
        }
    }
    Ok(out)
}

/// True iff `g` is exactly `expected_count` vertex-disjoint non-loop arcs
/// (isolated vertices allowed).
pub fn is_disjoint_arc_union(g: &Digraph, expected_count: usize) -> bool {
    if g.arc_count() != expected_count {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(g.order() + 1);
    for (u, v) in g.arcs() {
        if u == v || seen.put(u) || seen.put(v) {
            return false;
        }
    }
    true
}
