//! Lattice isomorphism of simplicial polytopes and deduplication up to
//! isomorphism.
//!
//! An isomorphism `x ↦ x·T` maps a facet of `p` onto some facet of `q`, so
//! it is determined by where the vertices of one fixed anchor facet go.
//! The search expresses every vertex in the coordinates of the anchor facet
//! (`V·A⁻¹`), does the same for each candidate facet of `q`, and looks for
//! a column permutation matching the two coordinate tables as multisets of
//! rows. Matching prefixes are checked column by column, so most wrong
//! permutations die after one or two columns.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{det, radd, rat_dot, rmul, to_integral, IntMatrix, Rational};
use crate::polytope::Polytope;
use crate::predicates::{is_reflexive, is_simplicial, normalized_volume};

/// Basis-independent invariants; equal for isomorphic polytopes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub num_vertices: usize,
    pub num_lattice_points: usize,
    /// Facet volumes `|det A_F|`, sorted; 0 for non-simplex facets.
    pub facet_volumes: Vec<i64>,
    /// Each facet's row of `⟨u_F, v⟩` over all vertices, sorted, then the
    /// rows sorted.
    pub pairing_rows: Vec<Vec<i64>>,
    /// Same for each vertex's column.
    pub pairing_cols: Vec<Vec<i64>>,
}

fn pairing_matrix(p: &Polytope) -> Result<Vec<Vec<i64>>> {
    if !is_reflexive(p) {
        return Err(Error::Domain("pairing matrix is integral only for reflexive polytopes".into()));
    }
    // reflexive: every offset is 1, so ⟨u_F, v⟩ is the plain dot product
    p.facets()
        .iter()
        .map(|f| {
            p.vertices()
                .iter()
                .map(|v| crate::linalg::dot(f.normal(), v).map_err(Error::from))
                .collect()
        })
        .collect()
}

fn sorted_rows(m: impl Iterator<Item = Vec<i64>>) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = m
        .map(|mut r| {
            r.sort_unstable();
            r
        })
        .collect();
    rows.sort();
    rows
}

pub fn fingerprint(p: &Polytope) -> Result<Fingerprint> {
    let pm = pairing_matrix(p)?;
    let d = p.dim();
    let mut facet_volumes = (0..p.facets().len())
        .map(|f| if p.facet(f).is_simplex(d) { normalized_volume(p, f) } else { Ok(0) })
        .collect::<Result<Vec<_>>>()?;
    facet_volumes.sort_unstable();
    let n = p.num_vertices();
    let cols = (0..n).map(|j| pm.iter().map(|row| row[j]).collect::<Vec<_>>());
    Ok(Fingerprint {
        dim: d,
        num_vertices: n,
        num_lattice_points: p.lattice_points().len(),
        facet_volumes,
        pairing_rows: sorted_rows(pm.iter().cloned()),
        pairing_cols: sorted_rows(cols),
    })
}

/// Coordinates of every vertex with respect to the vertex basis of facet `f`.
fn facet_coordinates(p: &Polytope, f: usize) -> Result<Vec<Vec<Rational>>> {
    let facet = p.facet(f);
    let basis = facet
        .dual_basis()
        .ok_or_else(|| Error::Unsupported("facet is not a simplex spanning the space".into()))?;
    p.vertices()
        .iter()
        .map(|x| basis.iter().map(|u| rat_dot(u, x).map_err(Error::from)).collect())
        .collect()
}

fn prefix_multiset(rows: &[Vec<Rational>], cols: &[usize]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
    out.sort();
    out
}

struct Matcher<'a> {
    target: &'a [Vec<Rational>],
    source: &'a [Vec<Rational>],
    d: usize,
}

impl Matcher<'_> {
    /// Permutations `perm` with the `perm`-reordered columns of `source`
    /// equal to `target` as a row multiset, in lexicographic order.
    fn extend(&self, perm: &mut Vec<usize>, used: &mut [bool], found: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
        let k = perm.len();
        if k == self.d {
            return found(perm);
        }
        let want = prefix_multiset(self.target, &(0..=k).collect::<Vec<_>>());
        for c in 0..self.d {
            if used[c] {
                continue;
            }
            perm.push(c);
            if prefix_multiset(self.source, perm) == want {
                used[c] = true;
                let done = self.extend(perm, used, found)?;
                used[c] = false;
                if done {
                    return Ok(true);
                }
            }
            perm.pop();
        }
        Ok(false)
    }
}

fn check_simplicial(p: &Polytope) -> Result<()> {
    if !is_simplicial(p) {
        return Err(Error::Unsupported("isomorphism search needs simplicial polytopes".into()));
    }
    if !p.origin_interior() {
        return Err(Error::Domain("isomorphism search needs the origin in the interior".into()));
    }
    Ok(())
}

fn facet_row_key(p: &Polytope, f: usize) -> Result<Vec<Rational>> {
    let facet = p.facet(f);
    let mut row = p.vertices().iter().map(|v| facet.pairing(v)).collect::<Result<Vec<_>>>()?;
    row.sort();
    Ok(row)
}

/// A unimodular `T` with `V(p)·T = V(q)` as sets, if one exists.
pub fn find_isomorphism(p: &Polytope, q: &Polytope) -> Result<Option<IntMatrix>> {
    check_simplicial(p)?;
    check_simplicial(q)?;
    let d = p.dim();
    if d != q.dim() || p.num_vertices() != q.num_vertices() || p.facets().len() != q.facets().len() {
        return Ok(None);
    }
    let anchor = 0;
    let vol = normalized_volume(p, anchor)?;
    let key = facet_row_key(p, anchor)?;
    let target = facet_coordinates(p, anchor)?;
    let a_inv_cols = p.facet(anchor).dual_basis().expect("checked simplicial").to_vec();
    let want_vertices = q.sorted_vertices();

    for g in 0..q.facets().len() {
        if normalized_volume(q, g)? != vol || facet_row_key(q, g)? != key {
            continue;
        }
        let source = facet_coordinates(q, g)?;
        let g_verts = q.facet(g).vertices().to_vec();
        let mut witness = None;
        let matcher = Matcher { target: &target, source: &source, d };
        matcher.extend(&mut Vec::new(), &mut vec![false; d], &mut |perm| {
            // T = A⁻¹·B with B the images of the anchor vertices in order
            let b: Vec<&[i64]> = perm.iter().map(|&c| q.vertex(g_verts[c])).collect();
            let mut t_rows = Vec::with_capacity(d);
            for r in 0..d {
                let mut row = vec![Rational::from_integer(0); d];
                for (i, bi) in b.iter().enumerate() {
                    let coef = a_inv_cols[i][r];
                    for (slot, &bij) in row.iter_mut().zip(bi.iter()) {
                        *slot = radd(slot, &rmul(&coef, &Rational::from_integer(bij))?)?;
                    }
                }
                match to_integral(&row) {
                    Some(ir) => t_rows.push(ir),
                    None => return Ok(false),
                }
            }
            let t = IntMatrix::new(t_rows)?;
            if det(&t)?.abs() != 1 {
                return Ok(false);
            }
            let mut image = p.vertices().iter().map(|v| t.apply(v)).collect::<Result<Vec<_>, _>>()?;
            image.sort();
            if image == want_vertices {
                witness = Some(t);
                return Ok(true);
            }
            Ok(false)
        })?;
        if witness.is_some() {
            return Ok(witness);
        }
    }
    Ok(None)
}

pub fn are_isomorphic(p: &Polytope, q: &Polytope) -> Result<bool> {
    Ok(find_isomorphism(p, q)?.is_some())
}

/// One isomorphism class found by [`classify`].
#[derive(Debug, Clone)]
pub struct IsoClass {
    /// The member with the lexicographically smallest sorted vertex list,
    /// rebuilt with its vertices in sorted order.
    pub representative: Polytope,
    pub fingerprint: Fingerprint,
    /// Input positions of the members, ascending.
    pub members: Vec<usize>,
}

/// Partitions `ps` into isomorphism classes, ordered by fingerprint and
/// then by representative vertex list. The result does not depend on the
/// input order except through `members`.
pub fn classify(ps: &[Polytope]) -> Result<Vec<IsoClass>> {
    let prints = ps.par_iter().map(fingerprint).collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, fp) in prints.iter().enumerate() {
        groups.entry(fp).or_default().push(i);
    }
    let mut out = Vec::new();
    for (fp, idx) in groups {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in idx {
            let mut home = None;
            for (c, class) in classes.iter().enumerate() {
                if are_isomorphic(&ps[class[0]], &ps[i])? {
                    home = Some(c);
                    break;
                }
            }
            match home {
                Some(c) => classes[c].push(i),
                None => classes.push(vec![i]),
            }
        }
        let mut built = classes
            .into_iter()
            .map(|members| {
                let best = members
                    .iter()
                    .map(|&i| ps[i].sorted_vertices())
                    .min()
                    .expect("classes are non-empty");
                let representative = Polytope::new(fp.dim, best)?;
                Ok(IsoClass { representative, fingerprint: fp.clone(), members })
            })
            .collect::<Result<Vec<_>>>()?;
        built.sort_by(|a, b| a.representative.vertices().cmp(b.representative.vertices()));
        out.extend(built);
    }
    Ok(out)
}

/// One representative per isomorphism class, in [`classify`] order.
pub fn dedupe(ps: &[Polytope]) -> Result<Vec<Polytope>> {
    Ok(classify(ps)?.into_iter().map(|c| c.representative).collect())
}
