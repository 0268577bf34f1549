//! JSON reports. Field order is declaration order and every array is
//! sorted, so equal inputs give byte-identical output.

use std::collections::BTreeMap;

use fanotope_core::lemmas::{lemma_report, LemmaReport};
use fanotope_core::predicates::{
    case_of, is_reflexive, is_simplicial, is_smooth, is_special, is_terminal, levels, special_facets,
};
use fanotope_core::{CaseTag, IntVector, Polytope, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub reflexive: bool,
    pub simplicial: bool,
    pub terminal: bool,
    pub smooth: bool,
}

impl Properties {
    pub fn of(p: &Polytope) -> Result<Self> {
        let reflexive = is_reflexive(p);
        Ok(Self {
            reflexive,
            simplicial: is_simplicial(p),
            terminal: p.origin_interior() && is_terminal(p)?,
            smooth: is_smooth(p),
        })
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        match name {
            "reflexive" => Some(self.reflexive),
            "simplicial" => Some(self.simplicial),
            "terminal" => Some(self.terminal),
            "smooth" => Some(self.smooth),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetLevels {
    pub vertices: Vec<IntVector>,
    pub normal: IntVector,
    pub special: Option<bool>,
    pub levels: BTreeMap<i64, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseTag>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub dim: usize,
    pub vertices: Vec<IntVector>,
    pub properties: Properties,
    pub vertex_sum: IntVector,
    pub facet_count: usize,
    /// Absent unless the polytope is simplicial with the origin inside.
    pub special_facet_count: Option<usize>,
    pub special_facets: Vec<FacetLevels>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaReport>,
}

fn facet_levels(p: &Polytope, f: usize, special: Option<bool>) -> Result<FacetLevels> {
    let facet = p.facet(f);
    let mut vertices: Vec<IntVector> = facet.vertices().iter().map(|&i| p.vertex(i).to_vec()).collect();
    vertices.sort();
    let d = p.dim();
    let case = if special == Some(true) && p.num_vertices() == 3 * d - 1 && is_reflexive(p) {
        case_of(p, f).ok()
    } else {
        None
    };
    Ok(FacetLevels {
        vertices,
        normal: facet.normal().to_vec(),
        special,
        levels: if is_reflexive(p) { levels(p, f)?.counts } else { BTreeMap::new() },
        case,
    })
}

fn special_ok(p: &Polytope) -> bool {
    is_simplicial(p) && p.origin_interior()
}

pub fn check_report(p: &Polytope, with_lemmas: bool) -> Result<CheckReport> {
    let (count, mut special) = if special_ok(p) {
        let sf = special_facets(p)?;
        let list = sf.iter().map(|&f| facet_levels(p, f, Some(true))).collect::<Result<Vec<_>>>()?;
        (Some(sf.len()), list)
    } else {
        (None, Vec::new())
    };
    special.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(CheckReport {
        dim: p.dim(),
        vertices: p.sorted_vertices(),
        properties: Properties::of(p)?,
        vertex_sum: p.vertex_sum(),
        facet_count: p.facets().len(),
        special_facet_count: count,
        special_facets: special,
        lemmas: if with_lemmas { Some(lemma_report(p)?) } else { None },
    })
}

/// Level histogram of every facet, sorted by facet vertices.
pub fn all_levels(p: &Polytope) -> Result<Vec<FacetLevels>> {
    let check = special_ok(p);
    let mut out = (0..p.facets().len())
        .map(|f| {
            let special = if check { Some(is_special(p, f)?) } else { None };
            facet_levels(p, f, special)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(out)
}
