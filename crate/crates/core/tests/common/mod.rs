#![allow(dead_code)]

use fanotope_core::families::{construct, direct_sum, FamilyId};
use fanotope_core::{IntMatrix, Polytope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every family member with `d ≤ max_d`, plus the planar fixtures and a
/// couple of direct sums.
pub fn corpus(max_d: usize) -> Vec<(String, Polytope)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for id in FamilyId::ALL {
            if id.admits(d) {
                out.push((format!("{id}({d})"), construct(id, d).unwrap()));
            }
        }
    }
    let v2 = construct(FamilyId::DelPezzo2, 2).unwrap();
    if max_d >= 4 {
        out.push(("dp2+dp2".into(), direct_sum(&v2, &v2).unwrap()));
    }
    if max_d >= 3 {
        out.push(("dp2+cross(1)".into(), direct_sum(&v2, &construct(FamilyId::Cross, 1).unwrap()).unwrap()));
    }
    out
}

/// Random unimodular matrix from elementary row operations, rejecting any
/// step that would push a coordinate of `p`'s image above `bound`.
pub fn random_unimodular(rng: &mut ChaCha8Rng, p: &Polytope, steps: usize, bound: i64) -> IntMatrix {
    let d = p.dim();
    let mut rows: Vec<Vec<i64>> = IntMatrix::identity(d).into_rows();
    let fits = |rows: &[Vec<i64>]| {
        let t = IntMatrix::new(rows.to_vec()).unwrap();
        p.vertices().iter().all(|v| t.apply(v).unwrap().iter().all(|c| c.abs() <= bound))
    };
    for _ in 0..steps {
        let mut next = rows.clone();
        let i = rng.gen_range(0..d);
        match rng.gen_range(0..3) {
            0 if d > 1 => {
                let j = (i + rng.gen_range(1..d)) % d;
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                for k in 0..d {
                    next[i][k] += s * rows[j][k];
                }
            }
            1 if d > 1 => next.swap(i, (i + 1) % d),
            _ => next[i].iter_mut().for_each(|c| *c = -*c),
        }
        if fits(&next) {
            rows = next;
        }
    }
    IntMatrix::new(rows).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The corpus for `max_d` followed by `images` random unimodular images of
/// its members, taken round-robin.
pub fn corpus_with_images(max_d: usize, images: usize, seed: u64) -> Vec<(String, Polytope)> {
    let base = corpus(max_d);
    let mut r = rng(seed);
    let mut out = base.clone();
    for k in 0..images {
        let (name, p) = &base[k % base.len()];
        let t = random_unimodular(&mut r, p, 12, 4);
        out.push((format!("{name}·T{k}"), p.transformed(&t).unwrap()));
    }
    out
}
