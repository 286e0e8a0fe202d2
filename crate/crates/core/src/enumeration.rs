//! Exhaustive generation of maximal outer-planar graphs as polygon
//! triangulations, isomorphism-class deduplication, and flip-based local
//! search.
//!
//! Labeled triangulations of the `n`-gon are streamed in a fixed depth-first
//! order without materializing the full list (`n = 15` already has 2.7M of
//! them). Isomorphism testing reduces to dihedral symmetry: a maximal
//! outer-planar graph of order `n >= 4` has a unique Hamiltonian cycle, so any
//! isomorphism must map the boundary to the boundary and therefore acts on the
//! labels as one of the `2n` rotations/reflections of the polygon; `n = 3` is
//! a single class trivially. Canonical codes are the lexicographic minimum of
//! the adjacency bit string over that group, giving an O(n²)-per-graph
//! isomorphism key instead of general graph isomorphism.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CycleGraph, Graph};
use crate::graph6;
use crate::spectral::{qindex, DEFAULT_TOL};

/// A maximal outer-planar graph witnessed as such: exactly `n - 3` pairwise
/// non-crossing chords of the `n`-gon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation(CycleGraph);

impl Triangulation {
    pub fn new(g: CycleGraph) -> Result<Self> {
        if !g.is_maximal_outerplanar()? {
            return Err(Error::InvalidParameter(
                "not a polygon triangulation (need n-3 pairwise non-crossing chords)".into(),
            ));
        }
        Ok(Triangulation(g))
    }

    pub fn as_cycle_graph(&self) -> &CycleGraph {
        &self.0
    }

    pub fn into_cycle_graph(self) -> CycleGraph {
        self.0
    }

    /// Replaces `chord` by the opposite diagonal of the quadrilateral formed
    /// by its two incident triangles.
    pub fn flip(&self, chord: (usize, usize)) -> Result<Triangulation> {
        let (a, b) = (chord.0.min(chord.1), chord.0.max(chord.1));
        if !self.0.has_chord(a, b) {
            return Err(Error::EdgeMissing(a, b));
        }
        let n = self.0.n();
        // The triangle apex on each side of {a, b} is the unique vertex there
        // adjacent to both endpoints: two such vertices on one side would
        // force a crossing pair of chords.
        let inner = (a + 1..b)
            .find(|&x| self.0.has_edge(a, x) && self.0.has_edge(x, b))
            .expect("triangulation chord has an inner apex");
        let outer = (b + 1..n)
            .chain(0..a)
            .find(|&x| self.0.has_edge(a, x) && self.0.has_edge(x, b))
            .expect("triangulation chord has an outer apex");
        let g = self
            .0
            .remove_edge(a, b)?
            .add_edge(inner.min(outer), inner.max(outer))?;
        Triangulation::new(g)
    }
}

impl std::ops::Deref for Triangulation {
    type Target = CycleGraph;

    fn deref(&self) -> &CycleGraph {
        &self.0
    }
}

/// Total-order isomorphism key: the lexicographically smallest
/// upper-triangular adjacency bit string over all `2n` dihedral relabelings.
///
/// Equal codes are equivalent to isomorphism for maximal outer-planar graphs
/// (see the module docs for the uniqueness argument).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }
}

#[inline]
fn set_bit(words: &mut [u64], i: usize, j: usize) {
    // column-major upper-triangle position, MSB-first packing so that word
    // order compares like the bit string
    let pos = j * (j - 1) / 2 + i;
    words[pos / 64] |= 1 << (63 - pos % 64);
}

/// Applies the dihedral map `i -> i + shift` or `i -> shift - i` (mod n) to
/// the boundary labels. Cycle edges map to cycle edges, so the result is
/// again cycle-anchored.
pub fn relabel_dihedral(g: &CycleGraph, shift: usize, reflect: bool) -> CycleGraph {
    let n = g.n();
    let map = |v: usize| -> usize {
        if reflect {
            (shift + n - v % n) % n
        } else {
            (v + shift) % n
        }
    };
    CycleGraph::new(n, g.chords().map(|(a, b)| (map(a), map(b))))
        .expect("dihedral image of a chord is a chord")
}

pub fn canonical_code(g: &CycleGraph) -> CanonicalCode {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let nwords = nbits.div_ceil(64).max(1);

    // cycle edges are fixed (as a set) by every dihedral map
    let mut template = vec![0u64; nwords];
    if n >= 3 {
        for i in 0..n - 1 {
            set_bit(&mut template, i, i + 1);
        }
        set_bit(&mut template, 0, n - 1);
    }

    let chords: Vec<(usize, usize)> = g.chords().collect();
    let mut best: Option<Vec<u64>> = None;
    let mut cand = vec![0u64; nwords];
    for shift in 0..n.max(1) {
        for reflect in [false, true] {
            cand.copy_from_slice(&template);
            for &(a, b) in &chords {
                let x = if reflect {
                    (shift + n - a) % n
                } else {
                    (a + shift) % n
                };
                let y = if reflect {
                    (shift + n - b) % n
                } else {
                    (b + shift) % n
                };
                set_bit(&mut cand, x.min(y), x.max(y));
            }
            if best.as_deref().is_none_or(|b| cand.as_slice() < b) {
                best = Some(cand.clone());
            }
        }
    }
    CanonicalCode {
        n,
        words: best.unwrap_or(template),
    }
}

/// Streams every labeled triangulation of the `n`-gon exactly once.
///
/// Recursion scheme: the boundary edge `(0, n-1)` lies in exactly one
/// triangle; choosing its apex `t` (in increasing label order) splits the
/// polygon into the sub-polygons `a..t` and `t..b`, each triangulated
/// recursively. The iterator walks the decision tree with an odometer over
/// the per-interval apex choices, so memory stays O(n).
pub fn enumerate_labeled(n: usize) -> Result<TriangulationIter> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "triangulations need order >= 3, got {n}"
        )));
    }
    Ok(TriangulationIter {
        n,
        decisions: Vec::new(),
        frozen: 0,
        done: false,
    })
}

/// The sub-stream of [`enumerate_labeled`] whose triangle on the boundary
/// edge `(0, n-1)` has apex `first_apex`. The partitions over
/// `first_apex = 1..=n-2` are disjoint and their union is the full stream,
/// which is what makes class enumeration embarrassingly parallel.
pub fn enumerate_labeled_partition(n: usize, first_apex: usize) -> Result<TriangulationIter> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "triangulations need order >= 3, got {n}"
        )));
    }
    if !(1..=n - 2).contains(&first_apex) {
        return Err(Error::InvalidParameter(format!(
            "first apex must lie in 1..=n-2, got {first_apex}"
        )));
    }
    Ok(TriangulationIter {
        n,
        decisions: vec![(first_apex - 1, n - 2)],
        frozen: 1,
        done: false,
    })
}

pub struct TriangulationIter {
    n: usize,
    /// `(choice, bound)` per interval in depth-first order; every full path
    /// has exactly `n - 2` decisions (one per triangle).
    decisions: Vec<(usize, usize)>,
    /// Prefix pinned by a partition; the odometer never advances below it.
    frozen: usize,
    done: bool,
}

impl TriangulationIter {
    fn replay(&mut self) -> Triangulation {
        let n = self.n;
        let mut chords = Vec::with_capacity(n.saturating_sub(3));
        let mut stack = vec![(0usize, n - 1)];
        let mut di = 0;
        while let Some((a, b)) = stack.pop() {
            if b - a < 2 {
                continue;
            }
            let bound = b - a - 1;
            if di == self.decisions.len() {
                self.decisions.push((0, bound));
            } else {
                self.decisions[di].1 = bound;
            }
            let t = a + 1 + self.decisions[di].0;
            di += 1;
            if t - a >= 2 {
                chords.push((a, t));
            }
            if b - t >= 2 {
                chords.push((t, b));
            }
            stack.push((t, b));
            stack.push((a, t));
        }
        debug_assert_eq!(di, self.decisions.len());
        Triangulation(CycleGraph::new(n, chords).expect("generated chords are valid"))
    }

    fn advance(&mut self) {
        let mut i = self.decisions.len();
        loop {
            if i <= self.frozen {
                self.done = true;
                return;
            }
            i -= 1;
            let (choice, bound) = self.decisions[i];
            if choice + 1 < bound {
                self.decisions[i].0 = choice + 1;
                self.decisions.truncate(i + 1);
                return;
            }
        }
    }
}

impl Iterator for TriangulationIter {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        if self.done {
            return None;
        }
        let t = self.replay();
        self.advance();
        Some(t)
    }
}

/// One isomorphism class: its canonical code and the first representative
/// seen in the deterministic enumeration order.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub code: CanonicalCode,
    pub rep: Triangulation,
}

/// One representative per isomorphism class of maximal outer-planar graphs of
/// order `n`, in order of first appearance in the labeled stream.
///
/// The stream is split by first apex and the partitions are deduplicated in
/// parallel; the per-partition sets are then merged in partition order, so the
/// result is independent of thread count.
pub fn enumerate_classes(n: usize) -> Result<Vec<ClassRep>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "class enumeration needs order >= 3, got {n}"
        )));
    }
    let per_partition: Vec<Vec<ClassRep>> = (1..=n - 2)
        .into_par_iter()
        .map(|first| {
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for tri in enumerate_labeled_partition(n, first).expect("valid partition") {
                let code = canonical_code(&tri);
                if seen.insert(code.clone()) {
                    out.push(ClassRep { code, rep: tri });
                }
            }
            out
        })
        .collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for part in per_partition {
        for class in part {
            if seen.insert(class.code.clone()) {
                out.push(class);
            }
        }
    }
    Ok(out)
}

/// Keeps the classes whose maximum degree satisfies `pred`, preserving order.
pub fn filter_by_max_degree(classes: &[ClassRep], pred: impl Fn(usize) -> bool) -> Vec<ClassRep> {
    classes
        .iter()
        .filter(|c| pred(c.rep.max_degree()))
        .cloned()
        .collect()
}

/// Catalan numbers `C_0..=C_up_to` (`C_m` counts triangulations of an
/// `(m+2)`-gon), via the multiplicative recurrence.
pub fn catalan_table(up_to: usize) -> Result<Vec<u128>> {
    if up_to > 62 {
        return Err(Error::InvalidParameter(
            "Catalan numbers beyond C_62 overflow u128 here".into(),
        ));
    }
    let mut c = Vec::with_capacity(up_to + 1);
    c.push(1u128);
    for m in 0..up_to {
        let prev = c[m];
        c.push(prev * (4 * m as u128 + 2) / (m as u128 + 2));
    }
    Ok(c)
}

/// Uniform random labeled triangulation, by choosing each interval's apex
/// with probability proportional to the Catalan counts of the two
/// sub-polygons it induces.
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "triangulations need order >= 3, got {n}"
        )));
    }
    let cat = catalan_table(n - 2)?;
    let mut chords = Vec::with_capacity(n - 3);
    let mut stack = vec![(0usize, n - 1)];
    while let Some((a, b)) = stack.pop() {
        if b - a < 2 {
            continue;
        }
        let total = cat[b - a - 1];
        let r = rng.gen_range(0..total);
        let mut acc = 0u128;
        let mut apex = b - 1;
        for t in a + 1..b {
            acc += cat[t - a - 1] * cat[b - t - 1];
            if r < acc {
                apex = t;
                break;
            }
        }
        if apex - a >= 2 {
            chords.push((a, apex));
        }
        if b - apex >= 2 {
            chords.push((apex, b));
        }
        stack.push((apex, b));
        stack.push((a, apex));
    }
    Ok(Triangulation(
        CycleGraph::new(n, chords).expect("sampled chords are valid"),
    ))
}

#[derive(Clone, Debug)]
pub struct RestartSummary {
    pub initial_graph6: String,
    pub steps: usize,
    pub final_q: f64,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub best: Triangulation,
    pub best_q: f64,
    pub restarts: Vec<RestartSummary>,
}

/// Steepest-ascent hill climbing on the Q-index over diagonal flips, from
/// uniformly sampled restarts.
///
/// Each restart climbs while a strictly improving flip exists, up to `budget`
/// steps; exact Q-index ties among neighbors are broken by canonical code, so
/// a given seed replays the identical trajectory. A `budget` of 0 just scores
/// the initial samples.
pub fn flip_search_max_q(
    n: usize,
    restarts: usize,
    budget: usize,
    seed: u64,
) -> Result<SearchResult> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "flip search needs order >= 4, got {n}"
        )));
    }
    if restarts == 0 {
        return Err(Error::InvalidParameter("need at least one restart".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Triangulation, f64)> = None;
    let mut summaries = Vec::with_capacity(restarts);

    for _ in 0..restarts {
        let mut cur = random_triangulation(n, &mut rng)?;
        let mut cur_q = qindex(&*cur, DEFAULT_TOL)?.q;
        let initial_graph6 = graph6::encode(&*cur)?;
        let mut steps = 0;

        while steps < budget {
            let mut neighbors = Vec::with_capacity(n - 3);
            for chord in cur.chords().collect::<Vec<_>>() {
                let cand = cur.flip(chord)?;
                let q = qindex(&*cand, DEFAULT_TOL)?.q;
                neighbors.push((cand, q));
            }
            let top_q = neighbors
                .iter()
                .map(|(_, q)| *q)
                .fold(f64::NEG_INFINITY, f64::max);
            // negated so a NaN score never counts as an improvement
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(top_q > cur_q) {
                break; // plateau or local maximum
            }
            let chosen = neighbors
                .into_iter()
                .filter(|(_, q)| *q == top_q)
                .min_by_key(|(t, _)| canonical_code(t))
                .expect("at least one neighbor attains the maximum");
            cur = chosen.0;
            cur_q = top_q;
            steps += 1;
        }

        if best.as_ref().is_none_or(|(_, bq)| cur_q > *bq) {
            best = Some((cur.clone(), cur_q));
        }
        summaries.push(RestartSummary {
            initial_graph6,
            steps,
            final_q: cur_q,
        });
    }

    let (best, best_q) = best.expect("restarts >= 1");
    Ok(SearchResult {
        best,
        best_q,
        restarts: summaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{fan, near_fan};

    #[test]
    fn labeled_counts_small() {
        assert_eq!(enumerate_labeled(3).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 2);
        assert_eq!(enumerate_labeled(5).unwrap().count(), 5);
        assert_eq!(enumerate_labeled(6).unwrap().count(), 14);
        assert!(enumerate_labeled(2).is_err());
    }

    #[test]
    fn n4_triangulations_are_the_two_diagonals() {
        let all: Vec<_> = enumerate_labeled(4)
            .unwrap()
            .map(|t| t.chords().collect::<Vec<_>>())
            .collect();
        assert!(all.contains(&vec![(0, 2)]));
        assert!(all.contains(&vec![(1, 3)]));
    }

    #[test]
    fn partitions_cover_the_stream() {
        let n = 7;
        let whole: Vec<_> = enumerate_labeled(n).unwrap().collect();
        let mut pieces = Vec::new();
        for first in 1..=n - 2 {
            pieces.extend(enumerate_labeled_partition(n, first).unwrap());
        }
        assert_eq!(whole.len(), pieces.len());
        let a: HashSet<_> = whole.into_iter().collect();
        let b: HashSet<_> = pieces.into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn every_emitted_triangulation_is_maximal() {
        for tri in enumerate_labeled(8).unwrap() {
            assert!(tri.is_maximal_outerplanar().unwrap());
            let twos = tri.degrees().iter().filter(|&&d| d == 2).count();
            assert!(twos >= 2);
        }
    }

    #[test]
    fn canonical_code_identifies_rotations_and_reflections() {
        // the two n=4 triangulations are rotations of each other
        let a = CycleGraph::new(4, [(0, 2)]).unwrap();
        let b = CycleGraph::new(4, [(1, 3)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));

        // near-fan reflections coincide; distinct degree profiles do not
        let nf2 = near_fan(6, 2).unwrap();
        let nf3 = near_fan(6, 3).unwrap();
        let nf4 = near_fan(6, 4).unwrap();
        assert_eq!(canonical_code(&nf2), canonical_code(&nf4));
        assert_ne!(canonical_code(&nf2), canonical_code(&nf3));
    }

    #[test]
    fn class_counts_small() {
        let counts: Vec<usize> = (3..=9)
            .map(|n| enumerate_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 4, 12, 27]);
    }

    #[test]
    fn single_class_at_n5_is_the_fan() {
        let classes = enumerate_classes(5).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].code, canonical_code(&fan(5).unwrap()));
    }

    #[test]
    fn filter_partitions_by_degree() {
        let classes = enumerate_classes(7).unwrap();
        let hi = filter_by_max_degree(&classes, |d| d == 6);
        let mid = filter_by_max_degree(&classes, |d| d == 5);
        let lo = filter_by_max_degree(&classes, |d| d == 4);
        assert_eq!(hi.len(), 1);
        assert_eq!(mid.len(), 2);
        assert_eq!(lo.len(), 1);
        assert_eq!(hi.len() + mid.len() + lo.len(), classes.len());
    }

    #[test]
    fn flip_square() {
        let t = Triangulation::new(CycleGraph::new(4, [(0, 2)]).unwrap()).unwrap();
        let f = t.flip((0, 2)).unwrap();
        assert_eq!(f.chords().collect::<Vec<_>>(), vec![(1, 3)]);
        // flipping the replacement chord is an involution
        assert_eq!(f.flip((1, 3)).unwrap(), t);
        assert!(t.flip((1, 3)).is_err());
    }

    #[test]
    fn flip_fan_interior_chord() {
        let t = Triangulation::new(fan(6).unwrap()).unwrap();
        let f = t.flip((0, 3)).unwrap();
        assert_eq!(f.chords().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (2, 4)]);
        assert!(f.is_maximal_outerplanar().unwrap());
    }

    #[test]
    fn catalan_values() {
        let c = catalan_table(12).unwrap();
        assert_eq!(c[4], 14);
        assert_eq!(c[8], 1430);
        assert_eq!(c[12], 208012);
        assert!(catalan_table(63).is_err());
    }

    #[test]
    fn random_triangulation_is_valid_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let t = random_triangulation(9, &mut rng).unwrap();
            assert!(t.is_maximal_outerplanar().unwrap());
        }
        let a = random_triangulation(12, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let b = random_triangulation(12, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn search_reaches_the_fan_at_n6() {
        for seed in [0u64, 1, 42] {
            let res = flip_search_max_q(6, 3, 100, seed).unwrap();
            assert!((res.best_q - 6.9576).abs() < 1e-3, "seed {seed}: {}", res.best_q);
            assert_eq!(
                canonical_code(&res.best),
                canonical_code(&fan(6).unwrap())
            );
        }
    }

    #[test]
    fn search_budget_zero_returns_initial_sample() {
        let res = flip_search_max_q(8, 2, 0, 11).unwrap();
        assert!(res.restarts.iter().all(|r| r.steps == 0));
        // best is one of the initial samples
        let qs: Vec<f64> = res.restarts.iter().map(|r| r.final_q).collect();
        assert!(qs.contains(&res.best_q));
    }
}
