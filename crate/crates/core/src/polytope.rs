//! Lattice polytopes in vertex representation with eagerly computed facets.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hull::{self, RawFacet};
use crate::linalg::{
    self, dot, inverse, rank, rat_dot, IntMatrix, IntVector, LinalgError, RatCovector, Rational,
};

/// A facet of a polytope: the vertices on it and its supporting hyperplane
/// `⟨normal, x⟩ ≤ offset`, with `normal` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    vertices: Vec<usize>,
    normal: IntVector,
    offset: i64,
    // u_F^v for the facet's vertices, in the order of `vertices`
    dual_basis: Option<Vec<RatCovector>>,
}

impl Facet {
    fn from_raw(raw: RawFacet, points: &[IntVector], dim: usize) -> Result<Self> {
        let dual_basis = if raw.incident.len() == dim && raw.offset != 0 {
            let a = IntMatrix::new(raw.incident.iter().map(|&i| points[i].clone()).collect())?;
            let inv = inverse(&a)?;
            // a · inv = I, so column k of inv pairs to δ with the vertex in row k.
            Some((0..dim).map(|k| inv.iter().map(|row| row[k]).collect()).collect())
        } else {
            None
        };
        Ok(Self { vertices: raw.incident, normal: raw.normal, offset: raw.offset, dual_basis })
    }

    /// Sorted indices of the polytope vertices on this facet.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of vertex `v` within [`Facet::vertices`].
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn is_simplex(&self, dim: usize) -> bool {
        self.vertices.len() == dim
    }

    /// The functional `u_F` with `⟨u_F, F⟩ = 1`, defined when the origin lies
    /// strictly on the inner side of the facet.
    pub fn u_form(&self) -> Option<RatCovector> {
        (self.offset > 0).then(|| {
            self.normal.iter().map(|&a| Rational::new(a, self.offset)).collect()
        })
    }

    /// `⟨u_F, x⟩`.
    pub fn pairing(&self, x: &[i64]) -> Result<Rational> {
        if self.offset <= 0 {
            return Err(Error::Domain("facet hyperplane does not separate the origin".into()));
        }
        Ok(Rational::new(dot(&self.normal, x)?, self.offset))
    }

    /// `⟨u_F, x⟩` when it is an integer.
    pub fn level(&self, x: &[i64]) -> Result<Option<i64>> {
        let p = self.pairing(x)?;
        Ok(p.is_integer().then(|| p.to_integer()))
    }

    /// The basis `u_F^v` dual to the facet's vertices, when the facet is a
    /// simplex not through the origin.
    pub fn dual_basis(&self) -> Option<&[RatCovector]> {
        self.dual_basis.as_deref()
    }

    /// `⟨u_F^v, x⟩` for a vertex `v` of this facet.
    pub fn dual_coordinate(&self, v: usize, x: &[i64]) -> Result<Rational> {
        let basis = self
            .dual_basis
            .as_ref()
            .ok_or_else(|| Error::Domain("facet is not a simplex with linearly independent vertices".into()))?;
        let k = self
            .position(v)
            .ok_or_else(|| Error::Domain(format!("vertex {v} is not on the facet")))?;
        Ok(rat_dot(&basis[k], x)?)
    }
}

/// Vertex set of the dual polytope `P*`: the facet functionals of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytopeDual {
    pub dim: usize,
    pub vertices: Vec<RatCovector>,
}

impl RationalPolytopeDual {
    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|u| linalg::is_integral(u))
    }

    /// The dual as a lattice polytope in `M`, when every vertex is integral.
    pub fn to_lattice_polytope(&self) -> Result<Option<Polytope>> {
        let Some(points) = self
            .vertices
            .iter()
            .map(|u| linalg::to_integral(u))
            .collect::<Option<Vec<_>>>()
        else {
            return Ok(None);
        };
        Polytope::new(self.dim, points).map(Some)
    }
}

/// A full-dimensional lattice polytope given by its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
}

fn map_dim(e: LinalgError) -> Error {
    match e {
        LinalgError::Dimension(msg) => Error::Dimensionality(msg),
        other => Error::Linalg(other),
    }
}

/// All facets of `conv(vertices)` by ridge pivoting.
pub fn facet_enumeration(dim: usize, vertices: &[IntVector]) -> Result<Vec<Facet>> {
    hull::facets_by_pivoting(vertices, dim)
        .map_err(map_dim)?
        .into_iter()
        .map(|f| Facet::from_raw(f, vertices, dim))
        .collect()
}

/// Same as [`facet_enumeration`], testing every `d`-subset instead.
pub fn facet_enumeration_brute_force(dim: usize, vertices: &[IntVector]) -> Result<Vec<Facet>> {
    hull::facets_by_subsets(vertices, dim)
        .map_err(map_dim)?
        .into_iter()
        .map(|f| Facet::from_raw(f, vertices, dim))
        .collect()
}

impl Polytope {
    /// Strict constructor: every point must be a distinct vertex of the hull.
    pub fn new(dim: usize, points: Vec<IntVector>) -> Result<Self> {
        Self::build(dim, points, true)
    }

    /// Lenient constructor: duplicates and non-extreme points are dropped.
    pub fn hull_of(dim: usize, points: Vec<IntVector>) -> Result<Self> {
        Self::build(dim, points, false)
    }

    fn build(dim: usize, points: Vec<IntVector>, strict: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Validation("dimension must be at least 1".into()));
        }
        if points.is_empty() {
            return Err(Error::Validation("no points given".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::Validation(format!("point {p:?} does not have {dim} coordinates")));
        }
        let mut seen = HashSet::new();
        let mut unique = Vec::with_capacity(points.len());
        for p in points {
            if seen.insert(p.clone()) {
                unique.push(p);
            } else if strict {
                return Err(Error::Validation(format!("duplicate point {p:?}")));
            }
        }
        let raw = hull::facets_by_pivoting(&unique, dim).map_err(map_dim)?;

        // A point is a vertex iff the normals of the facets through it have rank d.
        let mut extreme = Vec::with_capacity(unique.len());
        for i in 0..unique.len() {
            let normals: Vec<IntVector> = raw
                .iter()
                .filter(|f| f.incident.binary_search(&i).is_ok())
                .map(|f| f.normal.clone())
                .collect();
            extreme.push(rank(&normals, dim)? == dim);
        }
        if strict {
            if let Some(i) = extreme.iter().position(|&e| !e) {
                return Err(Error::Validation(format!(
                    "point {:?} is not a vertex of the convex hull",
                    unique[i]
                )));
            }
        }
        let mut new_index = vec![usize::MAX; unique.len()];
        let mut vertices = Vec::new();
        for (i, p) in unique.into_iter().enumerate() {
            if extreme[i] {
                new_index[i] = vertices.len();
                vertices.push(p);
            }
        }
        let mut facets = raw
            .into_iter()
            .map(|mut f| {
                f.incident = f
                    .incident
                    .iter()
                    .filter(|&&i| extreme[i])
                    .map(|&i| new_index[i])
                    .collect();
                Facet::from_raw(f, &vertices, dim)
            })
            .collect::<Result<Vec<_>>>()?;
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(Self { dim, vertices, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[i64] {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &Facet {
        &self.facets[i]
    }

    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_slice() == x)
    }

    /// Index of the facet whose vertex set is exactly `vertices`.
    pub fn facet_with_vertices(&self, vertices: &[usize]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.facets.iter().position(|f| f.vertices == key)
    }

    /// Vertices of a facet as the rows of a matrix (`A_F`).
    pub fn vertex_matrix(&self, facet: usize) -> IntMatrix {
        let rows = self.facets[facet].vertices.iter().map(|&i| self.vertices[i].clone()).collect();
        IntMatrix::new(rows).expect("vertices share the ambient dimension")
    }

    /// True iff every facet hyperplane strictly separates the origin from
    /// its outer side.
    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset > 0)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets
            .iter()
            .all(|f| dot(&f.normal, x).is_ok_and(|v| v <= f.offset))
    }

    /// Integer points of the polytope in lexicographic order, found by
    /// scanning the bounding box of the vertices (cost proportional to the
    /// box volume).
    pub fn lattice_points(&self) -> Vec<IntVector> {
        let lo: Vec<i64> = (0..self.dim).map(|j| self.vertices.iter().map(|v| v[j]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..self.dim).map(|j| self.vertices.iter().map(|v| v[j]).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut x = lo.clone();
        loop {
            if self.contains(&x) {
                out.push(x.clone());
            }
            // odometer, last coordinate fastest
            let mut j = self.dim;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if x[j] < hi[j] {
                    x[j] += 1;
                    break;
                }
                x[j] = lo[j];
            }
        }
    }

    /// `ν_P`, the sum of all vertices.
    pub fn vertex_sum(&self) -> IntVector {
        let mut s = vec![0i64; self.dim];
        for v in &self.vertices {
            for (a, b) in s.iter_mut().zip(v) {
                *a = a.checked_add(*b).expect("vertex sum overflow");
            }
        }
        s
    }

    /// Vertex set of `P*`.
    pub fn dual_vertices(&self) -> Result<RationalPolytopeDual> {
        if !self.origin_interior() {
            return Err(Error::Domain("the origin is not in the interior".into()));
        }
        Ok(RationalPolytopeDual {
            dim: self.dim,
            vertices: self.facets.iter().map(|f| f.u_form().expect("offset > 0")).collect(),
        })
    }

    /// Image under `x ↦ x·t`. The map must be invertible.
    pub fn transformed(&self, t: &IntMatrix) -> Result<Self> {
        let pts = self.vertices.iter().map(|v| t.apply(v)).collect::<Result<Vec<_>, _>>()?;
        Self::new(self.dim, pts)
    }

    /// Vertices sorted lexicographically; a basis-dependent but
    /// order-independent key.
    pub fn sorted_vertices(&self) -> Vec<IntVector> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polytope {
        Polytope::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap()
    }

    fn figure2() -> Polytope {
        Polytope::new(2, vec![vec![-1, 0], vec![-1, 1], vec![1, 1], vec![1, 0], vec![0, -1]]).unwrap()
    }

    #[test]
    fn square_basics() {
        let p = square();
        assert_eq!(p.num_vertices(), 4);
        assert_eq!(p.facets().len(), 4);
        assert!(p.origin_interior());
        assert!(p.contains(&[0, 0]));
        assert!(!p.contains(&[2, 0]));
        assert_eq!(p.lattice_points().len(), 5);
        assert_eq!(p.vertex_sum(), vec![0, 0]);
        let dual = p.dual_vertices().unwrap();
        let mut dv: Vec<IntVector> = dual.vertices.iter().map(|u| linalg::to_integral(u).unwrap()).collect();
        dv.sort();
        assert_eq!(dv, vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]);
    }

    #[test]
    fn p1_dim2_pentagon() {
        let p = Polytope::new(2, vec![vec![1, 0], vec![0, 1], vec![0, -1], vec![1, -1], vec![-1, 1]]).unwrap();
        assert_eq!(p.num_vertices(), 5);
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.lattice_points().len(), 6);
    }

    #[test]
    fn figure2_points() {
        let p = figure2();
        assert_eq!(p.facets().len(), 5);
        assert!(p.facets().iter().all(|f| f.offset() == 1));
        assert!(p.contains(&[0, 1]));
        let pts = p.lattice_points();
        assert_eq!(pts.len(), 7);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn not_full_dimensional() {
        let e = Polytope::new(2, vec![vec![1, 0], vec![-1, 0]]).unwrap_err();
        assert!(matches!(e, Error::Dimensionality(_)));
    }

    #[test]
    fn strict_rejects_duplicates_and_interior_points() {
        let mut pts = square().vertices().to_vec();
        pts.push(vec![1, 0]);
        assert!(matches!(Polytope::new(2, pts.clone()), Err(Error::Validation(_))));
        let lenient = Polytope::hull_of(2, pts).unwrap();
        assert_eq!(lenient.num_vertices(), 4);

        let mut pts = square().vertices().to_vec();
        pts.push(vec![0, 0]);
        assert!(matches!(Polytope::new(2, pts.clone()), Err(Error::Validation(_))));
        assert_eq!(Polytope::hull_of(2, pts).unwrap(), square());
    }

    #[test]
    fn lenient_drops_boundary_points() {
        let pts = vec![vec![2, 0], vec![-2, 0], vec![0, 2], vec![0, -2], vec![1, 1]];
        let p = Polytope::hull_of(2, pts).unwrap();
        assert_eq!(p.num_vertices(), 4);
        assert!(p.facets().iter().all(|f| f.vertices().len() == 2));
    }

    #[test]
    fn dual_basis_pairs_to_delta() {
        let p = Polytope::new(2, vec![vec![1, 0], vec![1, -1], vec![-1, 0], vec![0, 1]]).unwrap();
        for f in p.facets() {
            for &v in f.vertices() {
                for &w in f.vertices() {
                    let expect = Rational::from_integer(i64::from(v == w));
                    assert_eq!(f.dual_coordinate(v, p.vertex(w)).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn origin_not_interior() {
        let p = Polytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!p.origin_interior());
        assert!(matches!(p.dual_vertices(), Err(Error::Domain(_))));
        assert!(p.facets().iter().any(|f| f.pairing(&[1, 1]).is_err()));
    }
}
