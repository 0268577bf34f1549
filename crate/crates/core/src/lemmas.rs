//! Checkable forms of the structural lemmas on simplicial reflexive
//! polytopes.
//!
//! Each check returns `Ok(true)` when the statement holds on the given
//! input. Preconditions that are part of a statement's hypotheses are
//! reported as [`Error::Domain`]; the checks themselves never assume the
//! conclusion. [`lemma_report`] runs everything applicable against one
//! polytope and collects witnesses for any failure.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rmul, radd, rsub, Rational};
use crate::polytope::Polytope;
use crate::predicates::{
    is_reflexive, is_simplicial, is_terminal, levels, neighbor, normalized_volume, special_facets,
};

fn level_of(p: &Polytope, f: usize, x: &[i64]) -> Result<i64> {
    p.facet(f)
        .level(x)?
        .ok_or_else(|| Error::Domain(format!("facet {f} has a non-integral pairing")))
}

fn vertices_at_level(p: &Polytope, f: usize, level: i64) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, v) in p.vertices().iter().enumerate() {
        if level_of(p, f, v)? == level {
            out.push(i);
        }
    }
    Ok(out)
}

/// `⟨u_{F'}, x⟩ = ⟨u_F, x⟩ + (⟨u_{F'}, v⟩ − 1)·⟨u_F^v, x⟩` for `F' = N(F,v)`.
pub fn check_uf_relation(p: &Polytope, f: usize, v: usize, x: &[i64]) -> Result<bool> {
    let nb = neighbor(p, f, v)?;
    let facet = p.facet(f);
    let other = p.facet(nb.facet);
    let lhs = other.pairing(x)?;
    let factor = rsub(&other.pairing(p.vertex(v))?, &Rational::one())?;
    let rhs = radd(&facet.pairing(x)?, &rmul(&factor, &facet.dual_coordinate(v, x)?)?)?;
    Ok(lhs == rhs)
}

/// For every `v ∈ V(F)` and vertex `x`: `⟨u_F, x⟩ − 1 ≤ ⟨u_F^v, x⟩`, and
/// equality puts `x` on `N(F,v)`.
pub fn check_coef_bound(p: &Polytope, f: usize) -> Result<bool> {
    Ok(coef_bound_witness(p, f)?.is_none())
}

fn coef_bound_witness(p: &Polytope, f: usize) -> Result<Option<String>> {
    let facet = p.facet(f);
    for &v in facet.vertices() {
        let nb = neighbor(p, f, v)?;
        for (xi, x) in p.vertices().iter().enumerate() {
            let lhs = rsub(&facet.pairing(x)?, &Rational::one())?;
            let rhs = facet.dual_coordinate(v, x)?;
            if lhs > rhs {
                return Ok(Some(format!("facet {f}, v = {:?}, x = {x:?}: {lhs} > {rhs}", p.vertex(v))));
            }
            if lhs == rhs && !p.facet(nb.facet).contains_vertex(xi) {
                return Ok(Some(format!(
                    "facet {f}, v = {:?}, x = {x:?}: equality but x is off the neighboring facet",
                    p.vertex(v)
                )));
            }
        }
    }
    Ok(None)
}

/// Every vertex `x` at level 0 equals `n(F,w)` for each `w` with
/// `⟨u_F^w, x⟩ < 0`, and there are at most `d` such vertices.
pub fn h0_neighbors_check(p: &Polytope, f: usize) -> Result<bool> {
    Ok(h0_neighbors_witness(p, f)?.is_none())
}

fn h0_neighbors_witness(p: &Polytope, f: usize) -> Result<Option<String>> {
    let h0 = vertices_at_level(p, f, 0)?;
    if h0.len() > p.dim() {
        return Ok(Some(format!("facet {f} has {} vertices at level 0", h0.len())));
    }
    let facet = p.facet(f);
    for &x in &h0 {
        for &w in facet.vertices() {
            if facet.dual_coordinate(w, p.vertex(x))?.is_negative() {
                let nb = neighbor(p, f, w)?;
                if nb.vertex != x {
                    return Ok(Some(format!(
                        "facet {f}: level-0 vertex {:?} has negative {:?}-coordinate but n(F,w) = {:?}",
                        p.vertex(x),
                        p.vertex(w),
                        p.vertex(nb.vertex)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// When `d` vertices lie at level 0, returns the map `y ↦ z_y` (vertex
/// indices) with `V(P) ∩ H(F,0) = {−y + z_y}`; `None` with fewer than `d`.
///
/// For terminal input the map always exists. A level-0 vertex set of size
/// `d` without this shape is a [`Error::Contradiction`], which is what a
/// non-terminal polytope can produce.
pub fn h0_structure(p: &Polytope, f: usize) -> Result<Option<BTreeMap<usize, usize>>> {
    let d = p.dim();
    let h0 = vertices_at_level(p, f, 0)?;
    if h0.len() < d {
        return Ok(None);
    }
    if h0.len() > d {
        return Err(Error::Contradiction(format!("facet {f} has {} > d vertices at level 0", h0.len())));
    }
    let fv = p.facet(f).vertices();
    let mut map = BTreeMap::new();
    for &x in &h0 {
        let xv = p.vertex(x);
        let found = fv.iter().flat_map(|&y| fv.iter().map(move |&z| (y, z))).find(|&(y, z)| {
            y != z
                && xv
                    .iter()
                    .zip(p.vertex(y).iter().zip(p.vertex(z)))
                    .all(|(&c, (&a, &b))| c == b - a)
        });
        match found {
            Some((y, z)) => {
                if map.insert(y, z).is_some() {
                    return Err(Error::Contradiction(format!(
                        "facet {f}: two level-0 vertices of the form -y+z share y = {:?}",
                        p.vertex(y)
                    )));
                }
            }
            None => {
                return Err(Error::Contradiction(format!(
                    "facet {f}: level-0 vertex {xv:?} is not of the form -y+z with y, z on the facet"
                )))
            }
        }
    }
    Ok(Some(map))
}

/// With `d` vertices at level 0, every vertex at level −1 is the negative of
/// a facet vertex.
pub fn hminus1_antipodal_check(p: &Polytope, f: usize) -> Result<bool> {
    let h0 = vertices_at_level(p, f, 0)?;
    if h0.len() != p.dim() {
        return Err(Error::Domain(format!(
            "facet {f} has {} vertices at level 0; the statement needs d = {}",
            h0.len(),
            p.dim()
        )));
    }
    let facet = p.facet(f);
    for x in vertices_at_level(p, f, -1)? {
        let neg: Vec<i64> = p.vertex(x).iter().map(|c| -c).collect();
        if !p.index_of(&neg).is_some_and(|i| facet.contains_vertex(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn exclusion_applies(p: &Polytope, f: usize, v1: usize, v2: usize) -> Result<bool> {
    let facet = p.facet(f);
    if v1 == v2 || !facet.contains_vertex(v1) || !facet.contains_vertex(v2) {
        return Ok(false);
    }
    let y1 = neighbor(p, f, v1)?.vertex;
    let y2 = neighbor(p, f, v2)?.vertex;
    let minus_one = -Rational::one();
    Ok(y1 != y2
        && level_of(p, f, p.vertex(y1))? == 0
        && level_of(p, f, p.vertex(y2))? == 0
        && facet.dual_coordinate(v1, p.vertex(y1))? == minus_one
        && facet.dual_coordinate(v2, p.vertex(y2))? == minus_one)
}

/// For distinct `v1, v2 ∈ V(F)` whose neighboring vertices are distinct,
/// at level 0, with coefficient −1: no vertex at level −1 has coefficient
/// −1 on both `v1` and `v2`.
pub fn exclusion_check(p: &Polytope, f: usize, v1: usize, v2: usize) -> Result<bool> {
    if !exclusion_applies(p, f, v1, v2)? {
        return Err(Error::Domain(format!(
            "vertices {v1}, {v2} of facet {f} do not satisfy the exclusion hypotheses"
        )));
    }
    let facet = p.facet(f);
    let minus_one = -Rational::one();
    for x in vertices_at_level(p, f, -1)? {
        let xv = p.vertex(x);
        if facet.dual_coordinate(v1, xv)? == minus_one && facet.dual_coordinate(v2, xv)? == minus_one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Vol N(F,v) = |⟨u_F^v, n(F,v)⟩| · Vol F` in normalized volumes.
pub fn volume_pivot_check(p: &Polytope, f: usize, v: usize) -> Result<bool> {
    let nb = neighbor(p, f, v)?;
    let coef = p.facet(f).dual_coordinate(v, p.vertex(nb.vertex))?.abs();
    let vf = Rational::from_integer(normalized_volume(p, f)?);
    let vn = Rational::from_integer(normalized_volume(p, nb.facet)?);
    Ok(vn == rmul(&coef, &vf)?)
}

/// Outcome of one lemma over all its instances in a polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub instances: usize,
    pub violations: Vec<String>,
}

impl LemmaCheck {
    fn new(name: &'static str, applicable: bool) -> Self {
        Self { name, applicable, instances: 0, violations: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(witness());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub simplicial_reflexive: bool,
    pub terminal: bool,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0
    }
}

const CHECK_NAMES: [&str; 12] = [
    "uf_relation",
    "coef_bound",
    "neighbor_involution",
    "h0_count",
    "h0_neighbors",
    "volume_pivot",
    "special_exists",
    "special_inequality",
    "vertex_bound",
    "exclusion",
    "h0_structure",
    "hminus1_antipodal",
];

const TERMINAL_ONLY: [&str; 2] = ["h0_structure", "hminus1_antipodal"];

fn idx(name: &str) -> usize {
    CHECK_NAMES.iter().position(|&n| n == name).expect("known check name")
}

/// Runs every lemma whose hypotheses `p` satisfies, over all facets,
/// facet vertices and polytope vertices.
pub fn lemma_report(p: &Polytope) -> Result<LemmaReport> {
    let d = p.dim();
    let base = is_simplicial(p) && is_reflexive(p);
    let terminal = base && is_terminal(p)?;
    let mut checks: Vec<LemmaCheck> = CHECK_NAMES
        .iter()
        .map(|&n| LemmaCheck::new(n, if TERMINAL_ONLY.contains(&n) { terminal } else { base }))
        .collect();
    if !base {
        return Ok(LemmaReport { simplicial_reflexive: false, terminal: false, checks });
    }
    let show = |i: usize| format!("{:?}", p.vertex(i));

    for f in 0..p.facets().len() {
        let facet = p.facet(f);
        for &v in facet.vertices() {
            for x in p.vertices() {
                let ok = check_uf_relation(p, f, v, x)?;
                checks[idx("uf_relation")].record(ok, || format!("facet {f}, v = {}, x = {x:?}", show(v)));
            }
            let nb = neighbor(p, f, v)?;
            let back = neighbor(p, nb.facet, nb.vertex)?;
            checks[idx("neighbor_involution")]
                .record(back.facet == f && back.vertex == v, || format!("facet {f}, v = {}", show(v)));
            let ok = volume_pivot_check(p, f, v)?;
            checks[idx("volume_pivot")].record(ok, || format!("facet {f}, v = {}", show(v)));
        }
        let w = coef_bound_witness(p, f)?;
        checks[idx("coef_bound")].record(w.is_none(), || w.clone().unwrap_or_default());

        let dist = levels(p, f)?;
        let n0 = dist.count(0);
        checks[idx("h0_count")].record(n0 <= d, || format!("facet {f}: {n0} level-0 vertices"));
        let w = h0_neighbors_witness(p, f)?;
        checks[idx("h0_neighbors")].record(w.is_none(), || w.clone().unwrap_or_default());

        for &v1 in facet.vertices() {
            for &v2 in facet.vertices() {
                if v1 < v2 && exclusion_applies(p, f, v1, v2)? {
                    let ok = exclusion_check(p, f, v1, v2)?;
                    checks[idx("exclusion")]
                        .record(ok, || format!("facet {f}, v1 = {}, v2 = {}", show(v1), show(v2)));
                }
            }
        }

        if terminal && n0 == d {
            let r = h0_structure(p, f);
            checks[idx("h0_structure")].record(matches!(r, Ok(Some(_))), || format!("{r:?}"));
            let ok = hminus1_antipodal_check(p, f)?;
            checks[idx("hminus1_antipodal")].record(ok, || format!("facet {f}"));
        }
    }

    let special = special_facets(p)?;
    checks[idx("special_exists")].record(!special.is_empty(), || "no special facet".into());
    for &f in &special {
        let slack = levels(p, f)?.special_slack();
        checks[idx("special_inequality")].record(slack >= 0, || format!("facet {f}: slack {slack}"));
    }
    let n = p.num_vertices();
    checks[idx("vertex_bound")].record(n <= 3 * d, || format!("{n} vertices > 3d = {}", 3 * d));

    Ok(LemmaReport { simplicial_reflexive: true, terminal, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rows: &[&[i64]]) -> Polytope {
        let d = rows[0].len();
        Polytope::new(d, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn facet_of(p: &Polytope, verts: &[&[i64]]) -> usize {
        let idx: Vec<usize> = verts.iter().map(|v| p.index_of(v).unwrap()).collect();
        p.facet_with_vertices(&idx).unwrap()
    }

    fn pentagon() -> Polytope {
        poly(&[&[1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]])
    }

    fn figure2() -> Polytope {
        poly(&[&[-1, 0], &[-1, 1], &[1, 1], &[1, 0], &[0, -1]])
    }

    #[test]
    fn uf_relation_worked_example() {
        let p = pentagon();
        let f = facet_of(&p, &[&[1, 0], &[0, 1]]);
        let e2 = p.index_of(&[0, 1]).unwrap();
        let nb = neighbor(&p, f, e2).unwrap();
        assert_eq!(p.facet(nb.facet).pairing(&[-1, 1]).unwrap(), Rational::from_integer(-1));
        assert!(check_uf_relation(&p, f, e2, &[-1, 1]).unwrap());
        assert!(check_uf_relation(&p, f, e2, &[1, 0]).unwrap());
        assert!(check_uf_relation(&p, f, e2, &[0, 1]).unwrap());
        assert!(check_uf_relation(&p, f, e2, &[5, -7]).unwrap());
    }

    #[test]
    fn coef_bound_square() {
        let sq = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let f = facet_of(&sq, &[&[1, 0], &[0, 1]]);
        let e1 = sq.index_of(&[1, 0]).unwrap();
        let facet = sq.facet(f);
        assert_eq!(facet.pairing(&[-1, 0]).unwrap() - 1, Rational::from_integer(-2));
        assert_eq!(facet.dual_coordinate(e1, &[-1, 0]).unwrap(), Rational::from_integer(-1));
        for f in 0..4 {
            assert!(check_coef_bound(&sq, f).unwrap());
        }
    }

    #[test]
    fn figure2_lemmas() {
        let p = figure2();
        for f in 0..p.facets().len() {
            assert!(check_coef_bound(&p, f).unwrap());
            assert!(h0_neighbors_check(&p, f).unwrap());
        }
        // facet through (-1,1), (1,1) contains the extra lattice point (0,1)
        let f = facet_of(&p, &[&[-1, 1], &[1, 1]]);
        assert!(matches!(h0_structure(&p, f), Err(Error::Contradiction(_))));
        let report = lemma_report(&p).unwrap();
        assert!(report.simplicial_reflexive);
        assert!(!report.terminal);
        assert!(report.is_clean());
        assert!(report.checks.iter().filter(|c| c.name.starts_with("h")).any(|c| !c.applicable));
    }

    #[test]
    fn h0_structure_pentagon() {
        let p = pentagon();
        let f = facet_of(&p, &[&[1, 0], &[0, 1]]);
        let e1 = p.index_of(&[1, 0]).unwrap();
        let e2 = p.index_of(&[0, 1]).unwrap();
        let map = h0_structure(&p, f).unwrap().unwrap();
        assert_eq!(map, BTreeMap::from([(e1, e2), (e2, e1)]));
        assert!(h0_neighbors_check(&p, f).unwrap());
        assert!(hminus1_antipodal_check(&p, f).unwrap());
    }

    #[test]
    fn antipodal_precondition() {
        let sq = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        assert!(matches!(hminus1_antipodal_check(&sq, 0), Err(Error::Domain(_))));
        assert!(h0_neighbors_check(&sq, 0).unwrap());
        assert_eq!(h0_structure(&sq, 0).unwrap(), None);
    }

    #[test]
    fn exclusion_preconditions() {
        let sq = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let f = facet_of(&sq, &[&[1, 0], &[0, 1]]);
        let (a, b) = (sq.index_of(&[1, 0]).unwrap(), sq.index_of(&[0, 1]).unwrap());
        // neighbors of the square's facets sit at level -1
        assert!(matches!(exclusion_check(&sq, f, a, b), Err(Error::Domain(_))));
        assert!(matches!(exclusion_check(&sq, f, a, a), Err(Error::Domain(_))));
    }

    #[test]
    fn volume_pivot_pentagon() {
        let p = pentagon();
        for f in 0..p.facets().len() {
            for &v in p.facet(f).vertices() {
                assert!(volume_pivot_check(&p, f, v).unwrap());
            }
        }
        let q = poly(&[&[1, 0], &[0, 1], &[-1, -2]]);
        for f in 0..q.facets().len() {
            for &v in q.facet(f).vertices() {
                assert!(volume_pivot_check(&q, f, v).unwrap());
            }
        }
    }

    #[test]
    fn report_on_non_reflexive_skips() {
        let p = poly(&[&[2, 0], &[-2, 0], &[0, 2], &[0, -2]]);
        let r = lemma_report(&p).unwrap();
        assert!(!r.simplicial_reflexive);
        assert!(r.checks.iter().all(|c| !c.applicable && c.instances == 0));
    }
}
