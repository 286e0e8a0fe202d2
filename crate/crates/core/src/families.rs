//! Generators for the named extremal families.
//!
//! Each maximal outer-planar family is given by an explicit chord set on the
//! boundary labeling. The fan places its apex at vertex 0; the near-fan and
//! the three `D` families place the high-degree vertex at a parameter `k` and
//! differ in which boundary vertices the apex misses:
//!
//! * `near_fan(n, k)`: apex adjacent to everything except `v0`; extra chord
//!   `{1, n-1}`. Maximum degree `n - 2` (for `n >= 6`).
//! * `d1(n, k)`: apex misses exactly `{v0, v1}`; extra chords `{2, n-1}` and
//!   `{1, n-1}`.
//! * `d2(n, k)`: apex misses exactly `{v0, v2}`; extra chords `{1, 3}` and
//!   `{1, n-1}`.
//! * `d3(n, j, k)`: apex misses exactly `{v0, v_{j+2}}`; extra chords
//!   `{1, n-1}` and `{j+1, j+3}`.
//!
//! The chord transcriptions are guarded by an enumeration-backed
//! exhaustiveness test (see `tests/invariants.rs`): for small orders the
//! near-fan instances realize exactly the Δ = n-2 isomorphism classes, and
//! the D-family instances cover all Δ = n-3 classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleGraph, GeneralGraph};

/// Fan: one apex (vertex 0) joined to every vertex of the boundary path
/// `1..n-1`. Maximum degree `n - 1`.
pub fn fan(n: usize) -> Result<CycleGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "fan requires order >= 3, got {n}"
        )));
    }
    CycleGraph::new(n, (2..n - 1).map(|i| (0, i)))
}

/// Near-fan: vertex `k` adjacent to every vertex except `v0`, plus the chord
/// `{1, n-1}` closing the triangle over the apex's missing neighbor.
pub fn near_fan(n: usize, k: usize) -> Result<CycleGraph> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "near_fan requires order >= 5, got {n}"
        )));
    }
    if !(2..=n - 2).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "near_fan apex must satisfy 2 <= k <= n-2, got k={k} for n={n}"
        )));
    }
    let apex_chords = (0..n).filter(|&i| i != 0 && i + 1 != k && i != k && i != k + 1);
    CycleGraph::new(n, apex_chords.map(|i| (k.min(i), k.max(i))).chain([(1, n - 1)]))
}

/// First Δ = n-3 family: vertex `k` adjacent to all of `2..n-1` except
/// itself, plus chords `{2, n-1}` and `{1, n-1}`.
pub fn d1(n: usize, k: usize) -> Result<CycleGraph> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "d1 requires order >= 7, got {n}"
        )));
    }
    if !(3..=n - 2).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "d1 apex must satisfy 3 <= k <= n-2, got k={k} for n={n}"
        )));
    }
    let apex_chords = (2..n).filter(|&i| i + 1 != k && i != k && i != k + 1);
    CycleGraph::new(
        n,
        apex_chords
            .map(|i| (k.min(i), k.max(i)))
            .chain([(2, n - 1), (1, n - 1)]),
    )
}

/// Second Δ = n-3 family: vertex `k` adjacent to `v1` and all of `3..n-1`
/// except itself, plus chords `{1, 3}` and `{1, n-1}`; its non-neighbors are
/// exactly `{v0, v2}`.
pub fn d2(n: usize, k: usize) -> Result<CycleGraph> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "d2 requires order >= 8, got {n}"
        )));
    }
    if !(4..=n - 2).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "d2 apex must satisfy 4 <= k <= n-2, got k={k} for n={n}"
        )));
    }
    let apex_chords = std::iter::once(1)
        .chain(3..n)
        .filter(|&i| i + 1 != k && i != k && i != k + 1);
    CycleGraph::new(
        n,
        apex_chords
            .map(|i| (k.min(i), k.max(i)))
            .chain([(1, 3), (1, n - 1)]),
    )
}

/// Third Δ = n-3 family: vertex `k` adjacent to everything except `v0` and
/// `v_{j+2}`, plus chords `{1, n-1}` and `{j+1, j+3}`.
pub fn d3(n: usize, j: usize, k: usize) -> Result<CycleGraph> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "d3 requires order >= 7, got {n}"
        )));
    }
    if j < 1 || j + 3 > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "d3 gap must satisfy 1 <= j and j+3 <= n-2, got j={j} for n={n}"
        )));
    }
    if !(2..=n - 2).contains(&k) || (j + 1..=j + 3).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "d3 apex must lie in 2..=n-2 outside {{j+1, j+2, j+3}}, got k={k}, j={j}, n={n}"
        )));
    }
    let apex_chords = (0..n).filter(|&i| i != 0 && i != j + 2 && i + 1 != k && i != k && i != k + 1);
    CycleGraph::new(
        n,
        apex_chords
            .map(|i| (k.min(i), k.max(i)))
            .chain([(1, n - 1), (j + 1, j + 3)]),
    )
}

/// Star `K_{1,n-1}`: center 0 adjacent to all other vertices.
pub fn star(n: usize) -> Result<GeneralGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star requires order >= 2, got {n}"
        )));
    }
    GeneralGraph::new(n, (1..n).map(|i| (0, i)))
}

/// Valid apex positions for `near_fan(n, ·)`.
pub fn near_fan_ks(n: usize) -> std::ops::RangeInclusive<usize> {
    2..=n.saturating_sub(2)
}

/// Valid apex positions for `d1(n, ·)`.
pub fn d1_ks(n: usize) -> std::ops::RangeInclusive<usize> {
    3..=n.saturating_sub(2)
}

/// Valid apex positions for `d2(n, ·)`.
pub fn d2_ks(n: usize) -> std::ops::RangeInclusive<usize> {
    4..=n.saturating_sub(2)
}

/// Valid `(j, k)` parameter pairs for `d3(n, ·, ·)`.
pub fn d3_params(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if n < 7 {
        return out;
    }
    for j in 1..=n - 5 {
        for k in 2..=n - 2 {
            if !(j + 1..=j + 3).contains(&k) {
                out.push((j, k));
            }
        }
    }
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Fan,
    NearFan,
    D1,
    D2,
    D3,
    Star,
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyTag::Fan => "fan",
            FamilyTag::NearFan => "near_fan",
            FamilyTag::D1 => "d1",
            FamilyTag::D2 => "d2",
            FamilyTag::D3 => "d3",
            FamilyTag::Star => "star",
        };
        f.write_str(s)
    }
}

/// A fully parameterized family instance.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub n: usize,
    pub k: Option<usize>,
    pub j: Option<usize>,
}

/// What a [`FamilySpec`] builds: all families are cycle-anchored except the
/// star.
#[derive(Clone, Debug)]
pub enum FamilyGraph {
    Cycle(CycleGraph),
    General(GeneralGraph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<FamilyGraph> {
        let need_k = || {
            self.k.ok_or_else(|| {
                Error::InvalidParameter(format!("family {} requires --k", self.tag))
            })
        };
        Ok(match self.tag {
            FamilyTag::Fan => FamilyGraph::Cycle(fan(self.n)?),
            FamilyTag::NearFan => FamilyGraph::Cycle(near_fan(self.n, need_k()?)?),
            FamilyTag::D1 => FamilyGraph::Cycle(d1(self.n, need_k()?)?),
            FamilyTag::D2 => FamilyGraph::Cycle(d2(self.n, need_k()?)?),
            FamilyTag::D3 => {
                let j = self.j.ok_or_else(|| {
                    Error::InvalidParameter("family d3 requires --j".into())
                })?;
                FamilyGraph::Cycle(d3(self.n, j, need_k()?)?)
            }
            FamilyTag::Star => FamilyGraph::General(star(self.n)?),
        })
    }

    pub fn scope_string(&self) -> String {
        let mut s = format!("family={} n={}", self.tag, self.n);
        if let Some(k) = self.k {
            s.push_str(&format!(" k={k}"));
        }
        if let Some(j) = self.j {
            s.push_str(&format!(" j={j}"));
        }
        s
    }
}
