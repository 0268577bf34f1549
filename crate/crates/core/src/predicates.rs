//! Reflexive, simplicial, terminal and smooth predicates, neighboring
//! facets, level distributions and special facets.
//!
//! Facets are addressed by their index in [`Polytope::facets`] and vertices
//! by their index in [`Polytope::vertices`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det, RatCovector, Rational};
use crate::polytope::Polytope;

pub fn is_simplicial(p: &Polytope) -> bool {
    p.facets().iter().all(|f| f.is_simplex(p.dim()))
}

/// Origin in the interior and every `u_F` integral. With primitive facet
/// normals the latter means every facet offset is 1.
pub fn is_reflexive(p: &Polytope) -> bool {
    p.facets().iter().all(|f| f.offset() == 1)
}

/// True iff the only lattice points of `p` are its vertices and the origin.
pub fn is_terminal(p: &Polytope) -> Result<bool> {
    if !p.origin_interior() {
        return Err(Error::Domain("terminality needs the origin in the interior".into()));
    }
    // vertices and the origin are always among the lattice points
    Ok(p.lattice_points().len() == p.num_vertices() + 1)
}

/// Simplicial, reflexive, and every facet's vertices form a lattice basis.
/// Non-simplicial input is simply not smooth.
pub fn is_smooth(p: &Polytope) -> bool {
    is_simplicial(p)
        && is_reflexive(p)
        && (0..p.facets().len()).all(|f| det(&p.vertex_matrix(f)).is_ok_and(|d| d.abs() == 1))
}

fn require_simplex(p: &Polytope, f: usize) -> Result<()> {
    if !p.facet(f).is_simplex(p.dim()) {
        return Err(Error::Domain(format!("facet {f} is not a simplex")));
    }
    Ok(())
}

fn require_origin(p: &Polytope) -> Result<()> {
    if !p.origin_interior() {
        return Err(Error::Domain("the origin is not in the interior".into()));
    }
    Ok(())
}

/// `u_F^v` for every vertex of a simplex facet, in the facet's vertex order.
pub fn dual_basis(p: &Polytope, f: usize) -> Result<Vec<RatCovector>> {
    require_simplex(p, f)?;
    p.facet(f)
        .dual_basis()
        .map(<[_]>::to_vec)
        .ok_or_else(|| Error::Domain(format!("facet {f} passes through the origin")))
}

/// The neighboring facet `N(F,v)` across the ridge opposite `v`, and the
/// neighboring vertex `n(F,v)` completing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborResult {
    pub facet: usize,
    pub vertex: usize,
}

pub fn neighbor(p: &Polytope, f: usize, v: usize) -> Result<NeighborResult> {
    require_simplex(p, f)?;
    let facet = p.facet(f);
    if !facet.contains_vertex(v) {
        return Err(Error::Domain(format!("vertex {v} is not on facet {f}")));
    }
    let ridge: Vec<usize> = facet.vertices().iter().copied().filter(|&w| w != v).collect();
    let (g, other) = p
        .facets()
        .iter()
        .enumerate()
        .find(|&(g, other)| g != f && ridge.iter().all(|&w| other.contains_vertex(w)))
        .ok_or_else(|| Error::Contradiction(format!("ridge opposite {v} of facet {f} lies on one facet")))?;
    let mut extra = other.vertices().iter().copied().filter(|w| !ridge.contains(w));
    match (extra.next(), extra.next()) {
        (Some(w), None) => Ok(NeighborResult { facet: g, vertex: w }),
        _ => Err(Error::Domain(format!("neighboring facet {g} is not a simplex"))),
    }
}

/// Histogram of `⟨u_F, v⟩` over the vertices of `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDistribution {
    pub facet: usize,
    pub counts: BTreeMap<i64, usize>,
}

impl LevelDistribution {
    pub fn count(&self, level: i64) -> usize {
        self.counts.get(&level).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// `Σ_i i·|H(F,i) ∩ V(P)|`, which equals `⟨u_F, ν_P⟩`.
    pub fn weighted_sum(&self) -> i64 {
        self.counts.iter().map(|(&i, &n)| i * n as i64).sum()
    }

    /// `|F| + Σ_{i ≤ −1} i·|H(F,i) ∩ V(P)|`; nonnegative on special facets.
    pub fn special_slack(&self) -> i64 {
        self.count(1) as i64
            + self
                .counts
                .range(..=-1)
                .map(|(&i, &n)| i * n as i64)
                .sum::<i64>()
    }

    pub fn min_level(&self) -> i64 {
        *self.counts.keys().next().expect("a polytope has vertices")
    }
}

/// Level distribution of facet `f`. Needs integral pairings, so `p` must be
/// reflexive.
pub fn levels(p: &Polytope, f: usize) -> Result<LevelDistribution> {
    require_origin(p)?;
    let facet = p.facet(f);
    let mut counts = BTreeMap::new();
    for v in p.vertices() {
        let level = facet
            .level(v)?
            .ok_or_else(|| Error::Domain(format!("facet {f} has a non-integral pairing")))?;
        *counts.entry(level).or_insert(0) += 1;
    }
    Ok(LevelDistribution { facet: f, counts })
}

/// `ν_P` is a nonnegative combination of the facet's vertices.
pub fn is_special(p: &Polytope, f: usize) -> Result<bool> {
    require_simplex(p, f)?;
    let nu = p.vertex_sum();
    let facet = p.facet(f);
    for &w in facet.vertices() {
        if facet.dual_coordinate(w, &nu)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indices of all special facets. At least one exists for every simplicial
/// polytope with the origin in its interior.
pub fn special_facets(p: &Polytope) -> Result<Vec<usize>> {
    if !is_simplicial(p) {
        return Err(Error::Domain("special facets are defined for simplicial polytopes".into()));
    }
    require_origin(p)?;
    let mut out = Vec::new();
    for f in 0..p.facets().len() {
        if is_special(p, f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// The three possible level distributions of a special facet of a
/// terminal simplicial reflexive `d`-polytope with `3d − 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
}

impl CaseTag {
    pub const ALL: [CaseTag; 3] = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3];

    /// Vertex counts at levels 1, 0, −1, −2.
    pub fn column(self, d: usize) -> [usize; 4] {
        match self {
            CaseTag::Case1 => [d, d, d - 1, 0],
            CaseTag::Case2 => [d, d, d - 2, 1],
            CaseTag::Case3 => [d, d - 1, d, 0],
        }
    }

    pub fn histogram(self, d: usize) -> BTreeMap<i64, usize> {
        self.column(d)
            .into_iter()
            .zip([1, 0, -1, -2])
            .filter(|&(n, _)| n > 0)
            .map(|(n, i)| (i, n))
            .collect()
    }

    pub fn number(self) -> u8 {
        match self {
            CaseTag::Case1 => 1,
            CaseTag::Case2 => 2,
            CaseTag::Case3 => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(CaseTag::Case1),
            2 => Some(CaseTag::Case2),
            3 => Some(CaseTag::Case3),
            _ => None,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Case{}", self.number())
    }
}

/// Which column of the case table the special facet `f` realizes.
///
/// Requires `3d − 1` vertices, a simplicial reflexive polytope and a special
/// facet. Terminality is assumed, not rechecked.
pub fn case_of(p: &Polytope, f: usize) -> Result<CaseTag> {
    let d = p.dim();
    if p.num_vertices() + 1 != 3 * d {
        return Err(Error::Domain(format!(
            "case table applies to 3d-1 = {} vertices, got {}",
            3 * d - 1,
            p.num_vertices()
        )));
    }
    if !is_simplicial(p) || !is_reflexive(p) {
        return Err(Error::Domain("case table applies to simplicial reflexive polytopes".into()));
    }
    if !is_special(p, f)? {
        return Err(Error::Domain(format!("facet {f} is not special")));
    }
    let dist = levels(p, f)?;
    CaseTag::ALL
        .into_iter()
        .find(|c| c.histogram(d) == dist.counts)
        .ok_or_else(|| {
            Error::Contradiction(format!(
                "special facet {f} has level distribution {:?}, matching no case",
                dist.counts
            ))
        })
}

/// `|det A_F|` for a simplex facet: `d!` times the volume of `conv({0} ∪ F)`.
pub fn normalized_volume(p: &Polytope, f: usize) -> Result<i64> {
    require_simplex(p, f)?;
    Ok(det(&p.vertex_matrix(f))?.abs())
}

/// `⟨u_F^v, x⟩` with `v` given as a vertex index.
pub fn dual_coordinate(p: &Polytope, f: usize, v: usize, x: &[i64]) -> Result<Rational> {
    p.facet(f).dual_coordinate(v, x)
}
