//! Facet enumeration of full-dimensional integer point sets.
//!
//! Facets are supporting hyperplanes `⟨a, x⟩ ≤ b` with `a` a primitive
//! integer vector, so a facet is identified by `(a, b)` alone.
//!
//! [`facets_by_pivoting`] walks the facet graph: starting from one facet it
//! rotates the facet hyperplane around each ridge until it hits the next
//! point set, which is the neighboring facet. Ridges of simplex facets are
//! read off directly; ridges of larger facets come from a recursive hull of
//! the facet projected into one dimension lower.
//!
//! [`facets_by_subsets`] is the exhaustive reference: it tries every
//! `d`-subset of the points as a candidate hyperplane.

use std::collections::HashMap;

use itertools::Itertools;

use crate::linalg::{affine_rank, content, dot, kernel_vector, narrow, IntVector, LinalgError};

/// A facet hyperplane together with the indices of the input points on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawFacet {
    pub normal: IntVector,
    pub offset: i64,
    /// Sorted indices into the input point list.
    pub incident: Vec<usize>,
}

/// Early-abort conditions for [`pivot_hull`]. A hull that violates one is
/// reported as `None` without finishing the walk.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct HullLimits {
    /// Largest admissible number of points on one facet.
    pub max_incident: Option<usize>,
    /// Required offset `b` of every (primitive) facet hyperplane.
    pub offset: Option<i64>,
}

type Result<T> = std::result::Result<T, LinalgError>;

fn require_full_dim(points: &[IntVector], dim: usize) -> Result<()> {
    if points.iter().any(|p| p.len() != dim) {
        return Err(LinalgError::Dimension(format!("all points must have length {dim}")));
    }
    let r = affine_rank(points)?;
    if r != dim {
        return Err(LinalgError::Dimension(format!(
            "points span an affine space of dimension {r}, not {dim}"
        )));
    }
    Ok(())
}

/// All facets of `conv(points)`, by ridge pivoting. Output is sorted.
pub fn facets_by_pivoting(points: &[IntVector], dim: usize) -> Result<Vec<RawFacet>> {
    require_full_dim(points, dim)?;
    let facets = pivot_hull(points, dim, None, HullLimits::default())?
        .expect("unlimited hull walk cannot abort");
    Ok(facets)
}

/// All facets of `conv(points)`, by testing every affinely independent
/// `d`-subset. Exponential in the point count; used as a reference.
pub fn facets_by_subsets(points: &[IntVector], dim: usize) -> Result<Vec<RawFacet>> {
    require_full_dim(points, dim)?;
    let mut found: HashMap<(IntVector, i64), ()> = HashMap::new();
    let mut out = Vec::new();
    for subset in (0..points.len()).combinations(dim) {
        let base = &points[subset[0]];
        let diffs: Vec<IntVector> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let chosen: Vec<IntVector> = subset.iter().map(|&i| points[i].clone()).collect();
        if affine_rank(&chosen)? != dim - 1 {
            continue;
        }
        let mut a = kernel_vector(&diffs, dim)?.expect("d-1 independent rows leave a kernel");
        let mut b = dot(&a, base)?;
        let vals = points.iter().map(|p| dot(&a, p)).collect::<Result<Vec<_>>>()?;
        let above = vals.iter().any(|&v| v > b);
        let below = vals.iter().any(|&v| v < b);
        if above && below {
            continue;
        }
        let incident = vals
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == b)
            .map(|(i, _)| i)
            .collect();
        if above {
            a.iter_mut().for_each(|x| *x = -*x);
            b = -b;
        }
        if found.insert((a.clone(), b), ()).is_some() {
            continue;
        }
        out.push(RawFacet { normal: a, offset: b, incident });
    }
    out.sort();
    Ok(out)
}

/// Rotates the supporting hyperplane `⟨a,x⟩ ≤ b` about the flat where it
/// meets `⟨g,x⟩ = beta` (with `⟨g,x⟩ ≤ beta` on the current face) until it
/// touches further points. Returns the new primitive hyperplane.
fn rotate(points: &[IntVector], a: &[i64], b: i64, g: &[i64], beta: i64) -> Result<(IntVector, i64)> {
    // The hyperplanes ⟨g − t·a, x⟩ ≤ beta − t·b contain the flat for every t;
    // t → −∞ recovers the current face, and each point off the face bounds t
    // from above by (beta − ⟨g,x⟩) / (b − ⟨a,x⟩).
    let mut best: Option<(i64, i64)> = None;
    for x in points {
        let q = b - dot(a, x)?;
        if q <= 0 {
            continue;
        }
        let p = beta - dot(g, x)?;
        let better = match best {
            None => true,
            Some((bp, bq)) => (p as i128) * (bq as i128) < (bp as i128) * (q as i128),
        };
        if better {
            best = Some((p, q));
        }
    }
    let (p, q) = best.ok_or_else(|| LinalgError::Domain("point set is not full-dimensional".into()))?;
    let mut normal = Vec::with_capacity(a.len());
    for (&gi, &ai) in g.iter().zip(a) {
        let v = (q as i128 * gi as i128)
            .checked_sub(p as i128 * ai as i128)
            .ok_or(LinalgError::Overflow)?;
        normal.push(narrow(v)?);
    }
    let off = (q as i128 * beta as i128)
        .checked_sub(p as i128 * b as i128)
        .ok_or(LinalgError::Overflow)?;
    let c = content(&normal);
    debug_assert!(c > 0);
    let off = narrow(off)?;
    debug_assert_eq!(off % c, 0);
    Ok((normal.iter().map(|x| x / c).collect(), off / c))
}

fn incident_set(points: &[IntVector], a: &[i64], b: i64) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if dot(a, p)? == b {
            out.push(i);
        }
    }
    Ok(out)
}

fn differences(points: &[IntVector], idx: &[usize]) -> Vec<IntVector> {
    let base = &points[idx[0]];
    idx[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect()
}

fn initial_facet(points: &[IntVector], dim: usize) -> Result<RawFacet> {
    let mut a = vec![0i64; dim];
    a[0] = -1;
    let mut b = points.iter().map(|p| -p[0]).max().expect("nonempty");
    let mut face = incident_set(points, &a, b)?;
    loop {
        let face_pts: Vec<IntVector> = face.iter().map(|&i| points[i].clone()).collect();
        if affine_rank(&face_pts)? == dim - 1 {
            return Ok(RawFacet { normal: a, offset: b, incident: face });
        }
        let mut rows = differences(points, &face);
        rows.push(a.clone());
        let g = kernel_vector(&rows, dim)?.expect("face of dimension < d-1 leaves a kernel");
        let beta = dot(&g, &points[face[0]])?;
        (a, b) = rotate(points, &a, b, &g, beta)?;
        face = incident_set(points, &a, b)?;
    }
}

/// In-facet ridge hyperplanes `(g, beta)` of one facet: `⟨g,x⟩ ≤ beta` on the
/// facet's points with equality exactly on the ridge.
fn ridges(points: &[IntVector], dim: usize, facet: &RawFacet) -> Result<Vec<(IntVector, i64)>> {
    let inc = &facet.incident;
    if inc.len() == dim {
        let mut out = Vec::with_capacity(dim);
        for skip in 0..dim {
            let ridge: Vec<usize> = inc.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            let mut rows = if ridge.len() > 1 { differences(points, &ridge) } else { Vec::new() };
            rows.push(facet.normal.clone());
            let mut g = kernel_vector(&rows, dim)?.expect("simplex ridge leaves a one-dimensional kernel");
            let mut beta = dot(&g, &points[ridge[0]])?;
            if dot(&g, &points[inc[skip]])? > beta {
                g.iter_mut().for_each(|x| *x = -*x);
                beta = -beta;
            }
            out.push((g, beta));
        }
        return Ok(out);
    }
    // Project the facet onto the coordinates other than one where the normal
    // is nonzero; this is injective on the facet hyperplane.
    let drop = facet.normal.iter().position(|&x| x != 0).expect("nonzero normal");
    let projected: Vec<IntVector> = inc
        .iter()
        .map(|&i| {
            points[i]
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != drop)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    let sub = if dim - 1 == 1 {
        line_facets(&projected)
    } else {
        pivot_hull(&projected, dim - 1, None, HullLimits::default())?.expect("unlimited")
    };
    Ok(sub
        .into_iter()
        .map(|f| {
            let mut g = f.normal;
            g.insert(drop, 0);
            (g, f.offset)
        })
        .collect())
}

fn line_facets(points: &[IntVector]) -> Vec<RawFacet> {
    let lo = points.iter().map(|p| p[0]).min().expect("nonempty");
    let hi = points.iter().map(|p| p[0]).max().expect("nonempty");
    let at = |v: i64| points.iter().enumerate().filter(|(_, p)| p[0] == v).map(|(i, _)| i).collect();
    let mut out = vec![
        RawFacet { normal: vec![-1], offset: -lo, incident: at(lo) },
        RawFacet { normal: vec![1], offset: hi, incident: at(hi) },
    ];
    out.sort();
    out
}

/// Facet-graph walk. `start` must be a facet of the hull when given.
/// Returns `None` as soon as a facet violates `limits`.
pub(crate) fn pivot_hull(
    points: &[IntVector],
    dim: usize,
    start: Option<RawFacet>,
    limits: HullLimits,
) -> Result<Option<Vec<RawFacet>>> {
    if dim == 1 {
        return Ok(Some(line_facets(points)));
    }
    let violates = |f: &RawFacet| {
        limits.max_incident.is_some_and(|m| f.incident.len() > m)
            || limits.offset.is_some_and(|o| f.offset != o)
    };
    let first = match start {
        Some(f) => f,
        None => initial_facet(points, dim)?,
    };
    if violates(&first) {
        return Ok(None);
    }
    let mut seen: HashMap<(IntVector, i64), usize> = HashMap::new();
    seen.insert((first.normal.clone(), first.offset), 0);
    let mut facets = vec![first];
    let mut next = 0;
    while next < facets.len() {
        let current = facets[next].clone();
        next += 1;
        for (g, beta) in ridges(points, dim, &current)? {
            let (a, b) = rotate(points, &current.normal, current.offset, &g, beta)?;
            if seen.contains_key(&(a.clone(), b)) {
                continue;
            }
            let incident = incident_set(points, &a, b)?;
            let facet = RawFacet { normal: a.clone(), offset: b, incident };
            if violates(&facet) {
                return Ok(None);
            }
            seen.insert((a, b), facets.len());
            facets.push(facet);
        }
    }
    facets.sort();
    Ok(Some(facets))
}
