//! Exhaustive search for terminal simplicial reflexive `d`-polytopes with
//! `3d−1` vertices.
//!
//! Every such polytope has a special facet, and its level histogram is one
//! of three columns ([`CaseTag`]). The search fixes a special facet
//! `F = conv{e1,…,ed}` and chooses the vertices at levels 0, −1 and −2 from
//! [`candidate_vertices`]. Fixing `F` to the standard basis needs `V(F)` to
//! be a lattice basis; [`anchoring_note`] records why one can always pick
//! such a special facet.
//!
//! With pruning on, these consequences of the structural lemmas cut the
//! choices down (`F` is the standard basis, so `⟨u_F^{e_w}, x⟩ = x_w`):
//!
//! * `R1` a vertex with `x_w = ⟨u_F,x⟩ − 1` lies on `N(F,e_w)`, so it is
//!   `n(F,e_w)`; at most one chosen vertex per `w` has this property.
//! * `R2` with `d` vertices at level 0 they are `−e_y + e_{z(y)}` for a
//!   fixed-point-free map `z`.
//! * `R3` with `d` vertices at level 0 the level −1 vertices lie in `{−e_i}`.
//! * `R4` exclusion: if level-0 vertices `y1 ≠ y2` have `(y1)_{w1} = −1` and
//!   `(y2)_{w2} = −1`, no level −1 vertex has `x_{w1} = x_{w2} = −1`.
//! * `R5` in cases 2 and 3 `ν_P = 0`, so every facet is special and every
//!   vertex is at level `≥ −2` on every facet. Pivoting from `F` over `e_w`
//!   bounds `x_w ≤ 2, 1, 0` at levels `0, −1, −2`.
//! * `R6` in case 3, if the case 2 search is empty, no facet has a level −2
//!   vertex, so `−x ∈ P` and by terminality `−x ∈ V(P)` for every vertex:
//!   level −1 is `{−e_1,…,−e_d}` and level 0 is closed under negation.
//!
//! Specialness of `F` (`ν_P ≥ 0` coordinatewise) is part of the acceptance
//! test and is checked in both modes before any hull is built.
//!
//! A candidate set that passes is first run through a facet walk from `F`
//! that aborts on the first facet with more than `d` points or offset ≠ 1.
//! Whatever survives is rebuilt from scratch and must pass the full
//! predicate stack; the search bookkeeping is never trusted on its own.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{construct, FamilyId};
use crate::hull::{pivot_hull, HullLimits, RawFacet};
use crate::isomorphism::{are_isomorphic, classify};
use crate::linalg::{content, IntVector};
use crate::polytope::Polytope;
use crate::predicates::{
    case_of, is_reflexive, is_simplicial, is_smooth, is_special, is_terminal, levels, special_facets,
    CaseTag,
};

/// Largest dimension the search is expected to finish in reasonable time.
pub const MAX_SUPPORTED_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub dim: usize,
    /// Number of vertices; only `3d−1` is supported.
    pub target: usize,
    pub cases: BTreeSet<CaseTag>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub pruning: bool,
    /// Refuse dimensions above [`MAX_SUPPORTED_DIM`].
    pub strict: bool,
}

impl SearchConfig {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            target: (3 * dim).saturating_sub(1),
            cases: CaseTag::ALL.into_iter().collect(),
            jobs: 0,
            pruning: true,
            strict: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        if d < 2 {
            return Err(Error::Domain(format!("dimension must be at least 2, got {d}")));
        }
        if d > 63 {
            return Err(Error::Capability(format!("dimension {d} exceeds the 63-coordinate limit")));
        }
        if self.target > 3 * d {
            return Err(Error::Domain(format!(
                "{} vertices exceed the bound 3d = {} for simplicial reflexive polytopes",
                self.target,
                3 * d
            )));
        }
        if self.target != 3 * d - 1 {
            return Err(Error::Capability(format!(
                "only 3d-1 = {} vertices is supported, got {}",
                3 * d - 1,
                self.target
            )));
        }
        if self.strict && d > MAX_SUPPORTED_DIM {
            return Err(Error::Capability(format!(
                "dimension {d} is above the supported maximum {MAX_SUPPORTED_DIM}"
            )));
        }
        if self.cases.is_empty() {
            return Err(Error::Domain("no case selected".into()));
        }
        Ok(())
    }
}

/// Primitive `x` with `∑x = i` and every `x_j ≥ i−1`, nonzero, in
/// lexicographic order. These are the points the coefficient bound allows
/// at level `i` of the facet `conv{e1,…,ed}`.
pub fn candidate_vertices(d: usize, i: i64) -> Vec<IntVector> {
    let lo = i - 1;
    let hi = i - (d as i64 - 1) * (i - 1);
    let mut out = Vec::new();
    let mut x = vec![0i64; d];
    fill(&mut x, 0, i, lo, hi, &mut out);
    out.retain(|v| v.iter().any(|&c| c != 0) && content(v) == 1);
    out
}

fn fill(x: &mut Vec<i64>, j: usize, rest: i64, lo: i64, hi: i64, out: &mut Vec<IntVector>) {
    let d = x.len();
    if j + 1 == d {
        if (lo..=hi).contains(&rest) {
            x[j] = rest;
            out.push(x.clone());
        }
        return;
    }
    let left = (d - j - 1) as i64;
    for c in lo..=hi {
        let r = rest - c;
        if r < left * lo || r > left * hi {
            continue;
        }
        x[j] = c;
        fill(x, j + 1, r, lo, hi, out);
    }
}

/// Why fixing a special facet to the standard basis loses nothing.
pub fn anchoring_note(case: CaseTag) -> &'static str {
    match case {
        CaseTag::Case1 | CaseTag::Case2 => {
            "d vertices at level 0 on a terminal polytope have the form -y+z_y with y, z_y in V(F), \
             each with coefficient -1 on its pivot vertex, which makes V(F) a lattice basis; \
             a unimodular map sends it to e1..ed"
        }
        CaseTag::Case3 => {
            "<u_F, nu_P> = 0 forces nu_P = 0, so every facet is special and has at least d-1 vertices \
             at level 0; then some facet G has V(G) a lattice basis. G is special with slack 0, so its \
             column is case 2 or case 3 and the polytope is found by that case's search anchored at G"
        }
    }
}

#[derive(Debug, Clone)]
struct Cand {
    v: IntVector,
    /// Bits `w` with `x_w = level − 1`.
    tight: u64,
    /// Bits `w` with `x_w = −1`.
    minus_one: u64,
}

impl Cand {
    fn new(v: IntVector, level: i64) -> Self {
        let mut tight = 0;
        let mut minus_one = 0;
        for (w, &c) in v.iter().enumerate() {
            if c == level - 1 {
                tight |= 1 << w;
            }
            if c == -1 {
                minus_one |= 1 << w;
            }
        }
        Self { v, tight, minus_one }
    }
}

fn unit(d: usize, i: usize, sign: i64) -> IntVector {
    let mut v = vec![0; d];
    v[i] = sign;
    v
}

/// Subsets of `pool` of size `k` in lexicographic index order, each
/// accepted by `ok` when extended one element at a time.
fn subsets(
    pool: &[Cand],
    k: usize,
    ok: &dyn Fn(&[&Cand], &Cand) -> bool,
    emit: &mut dyn FnMut(&[&Cand]) -> Result<()>,
) -> Result<()> {
    fn rec<'a>(
        pool: &'a [Cand],
        k: usize,
        start: usize,
        chosen: &mut Vec<&'a Cand>,
        ok: &dyn Fn(&[&Cand], &Cand) -> bool,
        emit: &mut dyn FnMut(&[&Cand]) -> Result<()>,
    ) -> Result<()> {
        if chosen.len() == k {
            return emit(chosen);
        }
        let need = k - chosen.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            if ok(chosen, &pool[i]) {
                chosen.push(&pool[i]);
                rec(pool, k, i + 1, chosen, ok, emit)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    rec(pool, k, 0, &mut Vec::new(), ok, emit)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaseStats {
    pub case: Option<CaseTag>,
    /// Whether the case was asked for; a case 2 run done only to enable
    /// the case 3 rule `R6` is reported with `requested = false`.
    pub requested: bool,
    /// Level-0 vertex sets tried.
    pub branches: usize,
    /// Complete vertex sets generated.
    pub vertex_sets: usize,
    /// Sets with `F` special (`ν_P ≥ 0`).
    pub special: usize,
    /// Sets whose facet walk from `F` found a simplicial reflexive hull.
    pub hull_passed: usize,
    /// Sets accepted by the full recheck.
    pub survivors: usize,
    pub rules: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchorNote {
    pub case: CaseTag,
    pub justification: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    /// Representative vertices, sorted.
    pub vertices: Vec<IntVector>,
    /// Cases whose search produced a member of this class.
    pub found_in: Vec<CaseTag>,
    pub survivors: usize,
    pub smooth: bool,
    /// Expected families isomorphic to the class.
    pub families: Vec<FamilyId>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub target_vertices: usize,
    pub pruning: bool,
    pub anchoring: Vec<AnchorNote>,
    pub cases: Vec<CaseStats>,
    pub classes: Vec<ClassSummary>,
    #[serde(skip)]
    pub representatives: Vec<Polytope>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClassificationReport {
    pub fn case(&self, case: CaseTag) -> Option<&CaseStats> {
        self.cases.iter().find(|c| c.case == Some(case))
    }
}

/// Families the classification predicts in dimension `d`.
pub fn expected_families(d: usize) -> Vec<FamilyId> {
    if d % 2 == 0 {
        vec![FamilyId::P1]
    } else {
        vec![FamilyId::P2, FamilyId::P3]
    }
}

struct CaseSearch {
    d: usize,
    case: CaseTag,
    pruning: bool,
    /// `R6` is licensed.
    symmetric: bool,
}

struct BranchOut {
    vertex_sets: usize,
    special: usize,
    passed: Vec<Vec<IntVector>>,
}

impl CaseSearch {
    fn counts(&self) -> (usize, usize, usize) {
        let [_, n0, n1, n2] = self.case.column(self.d);
        (n0, n1, n2)
    }

    fn rules(&self) -> Vec<&'static str> {
        if !self.pruning {
            return Vec::new();
        }
        let (n0, _, _) = self.counts();
        let mut r = vec!["R1"];
        if n0 == self.d {
            r.extend(["R2", "R3"]);
        }
        r.push("R4");
        if self.case != CaseTag::Case1 {
            r.push("R5");
        }
        if self.symmetric {
            r.push("R6");
        }
        r
    }

    fn pool(&self, level: i64) -> Vec<Cand> {
        let d = self.d;
        let bound_r5 = self.pruning && self.case != CaseTag::Case1;
        candidate_vertices(d, level)
            .into_iter()
            .filter(|v| !bound_r5 || v.iter().all(|&c| c <= 2 + level))
            .map(|v| Cand::new(v, level))
            .collect()
    }

    fn level0_sets(&self) -> Result<Vec<Vec<Cand>>> {
        let d = self.d;
        let (n0, _, _) = self.counts();
        let mut out = Vec::new();
        if self.pruning && n0 == d {
            // R2: y ↦ z(y), z(y) ≠ y, odometer over the map
            let mut z = vec![0usize; d];
            loop {
                if (0..d).all(|y| z[y] != y) {
                    let set = (0..d)
                        .map(|y| {
                            let mut v = unit(d, y, -1);
                            v[z[y]] = 1;
                            Cand::new(v, 0)
                        })
                        .collect::<Vec<_>>();
                    let mut sorted = set;
                    sorted.sort_by(|a, b| a.v.cmp(&b.v));
                    out.push(sorted);
                }
                let mut j = d;
                loop {
                    if j == 0 {
                        return Ok(out);
                    }
                    j -= 1;
                    z[j] += 1;
                    if z[j] < d {
                        break;
                    }
                    z[j] = 0;
                }
            }
        }
        let pool = self.pool(0);
        let pruning = self.pruning;
        let ok = |chosen: &[&Cand], c: &Cand| {
            !pruning || chosen.iter().all(|x| x.tight & c.tight == 0)
        };
        subsets(&pool, n0, &ok, &mut |s| {
            let set: Vec<Cand> = s.iter().map(|&c| c.clone()).collect();
            if self.symmetric {
                let vs: BTreeSet<&IntVector> = set.iter().map(|c| &c.v).collect();
                let closed = set.iter().all(|c| vs.contains(&c.v.iter().map(|x| -x).collect::<Vec<_>>()));
                if !closed {
                    return Ok(());
                }
            }
            out.push(set);
            Ok(())
        })?;
        Ok(out)
    }

    fn run_branch(&self, level0: &[Cand], pool1: &[Cand], pool2: &[Cand]) -> Result<BranchOut> {
        let d = self.d;
        let (_, n1, n2) = self.counts();
        let pruning = self.pruning;
        let mask0 = level0.iter().fold(0u64, |m, c| m | c.tight);
        // R4 forbidden pairs: tight level-0 bits carried by different vertices
        let mut forb = vec![0u64; d];
        if pruning {
            for (a, ca) in level0.iter().enumerate() {
                for (b, cb) in level0.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    for w1 in 0..d {
                        if ca.tight >> w1 & 1 == 1 {
                            forb[w1] |= cb.tight;
                        }
                    }
                }
            }
        }
        let excluded = |c: &Cand| (0..d).any(|w| c.minus_one >> w & 1 == 1 && forb[w] & c.minus_one != 0);
        let mut out = BranchOut { vertex_sets: 0, special: 0, passed: Vec::new() };
        let ok1 = |chosen: &[&Cand], c: &Cand| {
            !pruning || (c.tight & mask0 == 0 && chosen.iter().all(|x| x.tight & c.tight == 0) && !excluded(c))
        };
        subsets(pool1, n1, &ok1, &mut |s1| {
            let mask1 = s1.iter().fold(mask0, |m, c| m | c.tight);
            let ok2 = |_: &[&Cand], c: &Cand| !pruning || c.tight & mask1 == 0;
            subsets(pool2, n2, &ok2, &mut |s2| {
                out.vertex_sets += 1;
                let mut nu = vec![1i64; d];
                for c in level0.iter().chain(s1.iter().copied()).chain(s2.iter().copied()) {
                    for (a, b) in nu.iter_mut().zip(&c.v) {
                        *a += b;
                    }
                }
                if nu.iter().any(|&x| x < 0) {
                    return Ok(());
                }
                out.special += 1;
                let mut pts: Vec<IntVector> = (0..d).map(|i| unit(d, i, 1)).collect();
                pts.extend(level0.iter().map(|c| c.v.clone()));
                pts.extend(s1.iter().map(|c| c.v.clone()));
                pts.extend(s2.iter().map(|c| c.v.clone()));
                if fast_hull(d, &pts)? {
                    out.passed.push(pts);
                }
                Ok(())
            })
        })?;
        Ok(out)
    }

    fn run(&self, requested: bool) -> Result<(CaseStats, Vec<Polytope>)> {
        let d = self.d;
        let (n0, n1, _) = self.counts();
        let branches = self.level0_sets()?;
        let pool1: Vec<Cand> = if self.pruning && n0 == d {
            (0..d).map(|i| Cand::new(unit(d, i, -1), -1)).collect()
        } else if self.symmetric {
            debug_assert_eq!(n1, d);
            (0..d).map(|i| Cand::new(unit(d, i, -1), -1)).collect()
        } else {
            self.pool(-1)
        };
        let pool2: Vec<Cand> = if self.pruning && self.case == CaseTag::Case2 {
            let mut v = Vec::new();
            for j in 0..d {
                for k in j + 1..d {
                    let mut x = unit(d, j, -1);
                    x[k] = -1;
                    v.push(Cand::new(x, -2));
                }
            }
            v.sort_by(|a, b| a.v.cmp(&b.v));
            v
        } else {
            self.pool(-2)
        };
        let outs = branches
            .par_iter()
            .map(|b| self.run_branch(b, &pool1, &pool2))
            .collect::<Result<Vec<_>>>()?;
        let mut stats = CaseStats {
            case: Some(self.case),
            requested,
            branches: branches.len(),
            rules: self.rules(),
            ..Default::default()
        };
        let mut passed = Vec::new();
        for o in outs {
            stats.vertex_sets += o.vertex_sets;
            stats.special += o.special;
            passed.extend(o.passed);
        }
        stats.hull_passed = passed.len();
        let accepted = passed
            .par_iter()
            .map(|pts| recheck(d, 3 * d - 1, self.case, pts))
            .collect::<Result<Vec<_>>>()?;
        let survivors: Vec<Polytope> = accepted.into_iter().flatten().collect();
        stats.survivors = survivors.len();
        Ok((stats, survivors))
    }
}

/// Facet walk from `conv{e1,…,ed}` (the first `d` points) that gives up on
/// the first non-simplex facet or facet off the hyperplane level 1; then
/// requires every point to lie on some facet.
fn fast_hull(d: usize, pts: &[IntVector]) -> Result<bool> {
    let start = RawFacet { normal: vec![1; d], offset: 1, incident: (0..d).collect() };
    let limits = HullLimits { max_incident: Some(d), offset: Some(1) };
    let Some(facets) = pivot_hull(pts, d, Some(start), limits)? else {
        return Ok(false);
    };
    let mut on_facet = vec![false; pts.len()];
    for f in &facets {
        for &i in &f.incident {
            on_facet[i] = true;
        }
    }
    Ok(on_facet.into_iter().all(|b| b))
}

/// Independent acceptance test: rebuild the hull without using `F` and
/// check every defining property.
fn recheck(d: usize, target: usize, case: CaseTag, pts: &[IntVector]) -> Result<Option<Polytope>> {
    let p = Polytope::hull_of(d, pts.to_vec())?;
    if p.num_vertices() != target || p.num_vertices() != pts.len() {
        return Ok(None);
    }
    if !(is_simplicial(&p) && is_reflexive(&p) && is_terminal(&p)?) {
        return Ok(None);
    }
    let basis: Vec<usize> = (0..d).map(|i| p.index_of(&unit(d, i, 1)).expect("basis point kept")).collect();
    let Some(f) = p.facet_with_vertices(&basis) else {
        return Ok(None);
    };
    if !is_special(&p, f)? {
        return Ok(None);
    }
    let found = case_of(&p, f)?;
    if found != case {
        return Err(Error::Contradiction(format!(
            "vertex set chosen for {case} has the {found} histogram: {pts:?}"
        )));
    }
    Ok(Some(p))
}

fn search(cfg: &SearchConfig) -> Result<ClassificationReport> {
    let start = Instant::now();
    let d = cfg.dim;
    let mut stats = Vec::new();
    let mut survivors: Vec<(CaseTag, Polytope)> = Vec::new();
    let mut case2_empty = None;
    for case in CaseTag::ALL {
        let requested = cfg.cases.contains(&case);
        let needed_for_r6 = case == CaseTag::Case2 && cfg.pruning && cfg.cases.contains(&CaseTag::Case3);
        if !requested && !needed_for_r6 {
            continue;
        }
        let symmetric = cfg.pruning && case == CaseTag::Case3 && case2_empty == Some(true);
        let s = CaseSearch { d, case, pruning: cfg.pruning, symmetric };
        let (st, found) = s.run(requested)?;
        if case == CaseTag::Case2 {
            case2_empty = Some(found.is_empty());
        }
        if requested {
            survivors.extend(found.into_iter().map(|p| (case, p)));
        }
        stats.push(st);
    }

    let polys: Vec<Polytope> = survivors.iter().map(|(_, p)| p.clone()).collect();
    let classes = classify(&polys)?;
    let expected = expected_families(d);
    let built = expected
        .iter()
        .filter(|id| id.admits(d))
        .map(|&id| construct(id, d).map(|p| (id, p)))
        .collect::<Result<Vec<_>>>()?;
    let mut summaries = Vec::new();
    let mut representatives = Vec::new();
    for c in classes {
        let found_in: BTreeSet<CaseTag> = c.members.iter().map(|&i| survivors[i].0).collect();
        let mut families = Vec::new();
        for (id, q) in &built {
            if are_isomorphic(&c.representative, q)? {
                families.push(*id);
            }
        }
        summaries.push(ClassSummary {
            vertices: c.representative.vertices().to_vec(),
            found_in: found_in.into_iter().collect(),
            survivors: c.members.len(),
            smooth: is_smooth(&c.representative),
            families,
        });
        representatives.push(c.representative);
    }
    Ok(ClassificationReport {
        dim: d,
        target_vertices: cfg.target,
        pruning: cfg.pruning,
        anchoring: cfg
            .cases
            .iter()
            .map(|&case| AnchorNote { case, justification: anchoring_note(case) })
            .collect(),
        cases: stats,
        classes: summaries,
        representatives,
        elapsed: start.elapsed(),
    })
}

/// All isomorphism classes of terminal simplicial reflexive `d`-polytopes
/// with `3d−1` vertices that have a special basis facet in one of the
/// selected cases. With all three cases this is every such polytope.
pub fn enumerate_3dm1(cfg: &SearchConfig) -> Result<ClassificationReport> {
    cfg.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if cfg.jobs > 0 {
        builder = builder.num_threads(cfg.jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Capability(format!("cannot start worker threads: {e}")))?;
    pool.install(|| search(cfg))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCertificate {
    pub dim: usize,
    pub passed: bool,
    pub expected_families: Vec<FamilyId>,
    pub checks: Vec<CertificateCheck>,
    /// Vertex lists of classes that failed a check.
    pub offending: Vec<Vec<IntVector>>,
    pub report: ClassificationReport,
}

/// Runs the full search in dimension `d` and checks the outcome against the
/// classification: one class for even `d` (≅ P1), two for odd `d`
/// (≅ P2, P3), all smooth, and no case 2 survivors.
pub fn verify_theorem(d: usize, jobs: usize) -> Result<TheoremCertificate> {
    let mut cfg = SearchConfig::new(d);
    cfg.jobs = jobs;
    verify_with(&cfg)
}

pub fn verify_with(cfg: &SearchConfig) -> Result<TheoremCertificate> {
    let report = enumerate_3dm1(cfg)?;
    let d = cfg.dim;
    let expected = expected_families(d);
    let mut checks = Vec::new();
    let mut offending = BTreeSet::new();

    let n = report.classes.len();
    checks.push(CertificateCheck {
        name: "class_count",
        passed: n == expected.len(),
        detail: format!("found {n}, expected {}", expected.len()),
    });

    let rough: Vec<&ClassSummary> = report.classes.iter().filter(|c| !c.smooth).collect();
    offending.extend(rough.iter().map(|c| c.vertices.clone()));
    checks.push(CertificateCheck {
        name: "all_smooth",
        passed: rough.is_empty(),
        detail: format!("{} non-smooth classes", rough.len()),
    });

    let unmatched: Vec<&ClassSummary> = report.classes.iter().filter(|c| c.families.len() != 1).collect();
    offending.extend(unmatched.iter().map(|c| c.vertices.clone()));
    let matched: BTreeSet<FamilyId> = report.classes.iter().flat_map(|c| c.families.iter().copied()).collect();
    let want: BTreeSet<FamilyId> = expected.iter().copied().collect();
    checks.push(CertificateCheck {
        name: "family_match",
        passed: unmatched.is_empty() && matched == want,
        detail: format!(
            "matched {:?}",
            report.classes.iter().map(|c| c.families.iter().map(|f| f.name()).collect::<Vec<_>>()).collect::<Vec<_>>()
        ),
    });

    let mut column_ok = true;
    for p in &report.representatives {
        for f in special_facets(p)? {
            let counts = levels(p, f)?.counts;
            if !CaseTag::ALL.iter().any(|c| c.histogram(d) == counts) {
                column_ok = false;
                offending.insert(p.vertices().to_vec());
            }
        }
    }
    checks.push(CertificateCheck {
        name: "special_facet_columns",
        passed: column_ok,
        detail: "every special facet of every class has a table column histogram".into(),
    });

    if let Some(c2) = report.case(CaseTag::Case2) {
        checks.push(CertificateCheck {
            name: "case2_empty",
            passed: c2.survivors == 0,
            detail: format!("{} case 2 survivors", c2.survivors),
        });
    }

    Ok(TheoremCertificate {
        dim: d,
        passed: checks.iter().all(|c| c.passed),
        expected_families: expected,
        checks,
        offending: offending.into_iter().collect(),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cases(c: &[CaseTag]) -> BTreeSet<CaseTag> {
        c.iter().copied().collect()
    }

    #[test]
    fn candidates_d3_level0() {
        let c = candidate_vertices(3, 0);
        assert_eq!(c.len(), 9);
        let ones = c.iter().filter(|v| v.iter().filter(|&&x| x == 0).count() == 1).count();
        assert_eq!(ones, 6);
        assert!(c.contains(&vec![2, -1, -1]) && c.contains(&vec![-1, -1, 2]));
    }

    #[test]
    fn candidates_match_box_scan() {
        for d in 2..=4usize {
            for i in [0i64, -1, -2] {
                let lo = i - 1;
                let hi = i - (d as i64 - 1) * (i - 1);
                let mut scan = Vec::new();
                let w = (hi - lo + 1) as usize;
                for code in 0..w.pow(d as u32) {
                    let mut c = code;
                    let mut x = vec![0; d];
                    for j in (0..d).rev() {
                        x[j] = lo + (c % w) as i64;
                        c /= w;
                    }
                    if x.iter().sum::<i64>() == i && x.iter().any(|&v| v != 0) && content(&x) == 1 {
                        scan.push(x);
                    }
                }
                assert_eq!(candidate_vertices(d, i), scan, "d={d} i={i}");
            }
        }
        let c = candidate_vertices(2, -1);
        for v in [[0, -1], [-1, 0], [1, -2], [-2, 1]] {
            assert!(c.contains(&v.to_vec()));
        }
        let c = candidate_vertices(4, -2);
        assert!(c.contains(&vec![-1, 0, -1, 0]));
    }

    #[test]
    fn config_validation() {
        assert!(matches!(SearchConfig::new(1).validate(), Err(Error::Domain(_))));
        let mut c = SearchConfig::new(3);
        c.target = 10;
        assert!(matches!(c.validate(), Err(Error::Domain(_))));
        c.target = 7;
        assert!(matches!(c.validate(), Err(Error::Capability(_))));
        let mut c = SearchConfig::new(5);
        c.strict = true;
        assert!(matches!(c.validate(), Err(Error::Capability(_))));
    }

    #[test]
    fn d2_one_class() {
        let r = enumerate_3dm1(&SearchConfig::new(2)).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].families, vec![FamilyId::P1]);
        assert!(r.classes[0].smooth);
    }

    #[test]
    fn d3_case2_empty() {
        let mut c = SearchConfig::new(3);
        c.cases = cases(&[CaseTag::Case2]);
        let r = enumerate_3dm1(&c).unwrap();
        assert_eq!(r.case(CaseTag::Case2).unwrap().survivors, 0);
        assert!(r.classes.is_empty());
    }

    #[test]
    fn d3_theorem() {
        let cert = verify_theorem(3, 0).unwrap();
        assert!(cert.passed, "{:#?}", cert.checks);
        assert_eq!(cert.report.classes.len(), 2);
    }
}
