//! Explicit polytopes: the three classification families, the del Pezzo
//! hexagon, cross-polytopes and a non-terminal counterexample.
//!
//! The difference vectors in the families run over disjoint consecutive
//! pairs: `e1−e2, e3−e4, …` for [`FamilyId::P1`] and [`FamilyId::P2`], and
//! `e2−e3, e4−e5, …` for [`FamilyId::P3`]. Read that way each family is a
//! direct sum of del Pezzo hexagons with one small piece, and has exactly
//! `3d−1` vertices in every admissible dimension.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntVector;
use crate::polytope::Polytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    P1,
    P2,
    P3,
    DelPezzo2,
    Cross,
    Figure2,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::P1,
        FamilyId::P2,
        FamilyId::P3,
        FamilyId::DelPezzo2,
        FamilyId::Cross,
        FamilyId::Figure2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P1 => "p1",
            FamilyId::P2 => "p2",
            FamilyId::P3 => "p3",
            FamilyId::DelPezzo2 => "dp2",
            FamilyId::Cross => "cross",
            FamilyId::Figure2 => "fig2",
        }
    }

    /// Whether the family exists in dimension `d`.
    pub fn admits(self, d: usize) -> bool {
        match self {
            FamilyId::P1 => d >= 2 && d % 2 == 0,
            FamilyId::P2 | FamilyId::P3 => d >= 3 && d % 2 == 1,
            FamilyId::DelPezzo2 | FamilyId::Figure2 => d == 2,
            FamilyId::Cross => d >= 1,
        }
    }

    /// Dimension used when none is given; only the planar fixtures have one.
    pub fn default_dim(self) -> Option<usize> {
        match self {
            FamilyId::DelPezzo2 | FamilyId::Figure2 => Some(2),
            _ => None,
        }
    }

    /// Number of vertices of `construct(self, d)`.
    pub fn vertex_count(self, d: usize) -> usize {
        match self {
            FamilyId::P1 | FamilyId::P2 | FamilyId::P3 => 3 * d - 1,
            FamilyId::DelPezzo2 => 6,
            FamilyId::Cross => 2 * d,
            FamilyId::Figure2 => 5,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family '{s}'")))
    }
}

fn e(d: usize, i: usize) -> IntVector {
    let mut v = vec![0; d];
    v[i - 1] = 1;
    v
}

fn neg(v: &[i64]) -> IntVector {
    v.iter().map(|c| -c).collect()
}

/// `e_i − e_j`, 1-based.
fn diff(d: usize, i: usize, j: usize) -> IntVector {
    let mut v = e(d, i);
    v[j - 1] = -1;
    v
}

fn push_pm(out: &mut Vec<IntVector>, v: IntVector) {
    let n = neg(&v);
    out.push(v);
    out.push(n);
}

fn vertex_list(id: FamilyId, d: usize) -> Vec<IntVector> {
    let mut out = Vec::new();
    match id {
        FamilyId::P1 => {
            out.push(e(d, 1));
            for i in 2..=d {
                push_pm(&mut out, e(d, i));
            }
            for k in (1..d).step_by(2) {
                push_pm(&mut out, diff(d, k, k + 1));
            }
        }
        FamilyId::P2 => {
            for i in 1..d {
                push_pm(&mut out, e(d, i));
            }
            out.push(e(d, d));
            for k in (1..d - 1).step_by(2) {
                push_pm(&mut out, diff(d, k, k + 1));
            }
            out.push(diff(d, 1, d));
        }
        FamilyId::P3 => {
            for i in 1..=d {
                push_pm(&mut out, e(d, i));
            }
            for k in (2..d).step_by(2) {
                push_pm(&mut out, diff(d, k, k + 1));
            }
        }
        FamilyId::DelPezzo2 => {
            push_pm(&mut out, e(2, 1));
            push_pm(&mut out, e(2, 2));
            push_pm(&mut out, diff(2, 1, 2));
        }
        FamilyId::Cross => {
            for i in 1..=d {
                push_pm(&mut out, e(d, i));
            }
        }
        FamilyId::Figure2 => {
            out = vec![vec![-1, 0], vec![-1, 1], vec![1, 1], vec![1, 0], vec![0, -1]];
        }
    }
    out
}

/// Builds the family member of dimension `d`, vertices in the listed order.
pub fn construct(id: FamilyId, d: usize) -> Result<Polytope> {
    if !id.admits(d) {
        let need = match id {
            FamilyId::P1 => "an even dimension >= 2",
            FamilyId::P2 | FamilyId::P3 => "an odd dimension >= 3",
            FamilyId::DelPezzo2 | FamilyId::Figure2 => "dimension 2",
            FamilyId::Cross => "dimension >= 1",
        };
        return Err(Error::Domain(format!("family {id} needs {need}, got {d}")));
    }
    let verts = vertex_list(id, d);
    assert_eq!(verts.len(), id.vertex_count(d), "vertex count of {id}({d})");
    Polytope::new(d, verts)
}

/// Free sum: `(v,0)` for `v ∈ V(p)` followed by `(0,w)` for `w ∈ V(q)`.
pub fn direct_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if !p.origin_interior() || !q.origin_interior() {
        return Err(Error::Domain("direct sum needs the origin strictly inside both summands".into()));
    }
    let (a, b) = (p.dim(), q.dim());
    let mut verts = Vec::with_capacity(p.num_vertices() + q.num_vertices());
    for v in p.vertices() {
        let mut x = v.clone();
        x.resize(a + b, 0);
        verts.push(x);
    }
    for w in q.vertices() {
        let mut x = vec![0; a];
        x.extend_from_slice(w);
        verts.push(x);
    }
    Polytope::new(a + b, verts)
}
