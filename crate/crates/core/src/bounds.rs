//! Constructive upper bounds on `D_Γ(X)`.
//!
//! Every construction here returns the labeling it built, and each one is
//! checked to be distinguishing under the full group before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::labeling::{is_distinguishing, Labeling};
use crate::perm::Permutation;
use crate::solver::{distinguishing_number, SearchOptions};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionData {
    /// `m(σ)` for each element, indexed like `PermGroup::elements`.
    pub moved: Vec<Vec<usize>>,
    /// Least `|m(σ)|` over non-identity elements.
    pub group_motion: usize,
}

pub fn motion_data(g: &PermGroup) -> Result<MotionData> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("group motion"));
    }
    let moved: Vec<Vec<usize>> = g.elements().iter().map(Permutation::moved_points).collect();
    let group_motion = moved.iter().map(Vec::len).filter(|&m| m > 0).min().expect("nontrivial group");
    Ok(MotionData { moved, group_motion })
}

/// Non-identity elements of `g` preserving `c`, in canonical order.
pub fn preservers_of(g: &PermGroup, c: &Labeling) -> Result<Vec<Permutation>> {
    if g.degree() != c.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: c.degree() });
    }
    Ok(g.elements().iter().filter(|s| !s.is_identity() && c.preserved_by(s)).cloned().collect())
}

/// A partition of `0..k` into blocks whose motion sets share a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPartition {
    /// Indices into the permutation list, ascending within each block.
    pub blocks: Vec<Vec<usize>>,
    /// One common moved point per block.
    pub witnesses: Vec<usize>,
}

impl GoodPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether this is a partition of `0..sigmas.len()` and every block's
    /// witness is moved by every member.
    pub fn is_good_for(&self, sigmas: &[Permutation]) -> bool {
        let mut seen = vec![false; sigmas.len()];
        for (block, &w) in self.blocks.iter().zip(&self.witnesses) {
            if block.is_empty() {
                return false;
            }
            for &i in block {
                if i >= sigmas.len() || core::mem::replace(&mut seen[i], true) || sigmas[i].apply(w) == w {
                    return false;
                }
            }
        }
        self.blocks.len() == self.witnesses.len() && seen.into_iter().all(|s| s)
    }
}

/// Point moved by every permutation in the list, if any (least such point).
pub fn common_moved_point(sigmas: &[Permutation]) -> Option<usize> {
    let first = sigmas.first()?;
    (0..first.degree()).find(|&x| sigmas.iter().all(|s| s.apply(x) != x))
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(k: usize) -> Self {
        Bits(vec![0; k.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Minimum good partition, found as a minimum cover of the indices by the
/// point stars `S_x = { i : x ∈ m(σ_i) }`. Among minimum covers the
/// lexicographically least sorted witness sequence wins; each index joins the
/// block of the first witness it moves.
pub fn min_good_partition(sigmas: &[Permutation]) -> Result<GoodPartition> {
    let k = sigmas.len();
    if k == 0 {
        return Ok(GoodPartition { blocks: Vec::new(), witnesses: Vec::new() });
    }
    let n = sigmas[0].degree();
    if let Some(bad) = sigmas.iter().find(|s| s.degree() != n) {
        return Err(Error::DegreeMismatch { left: n, right: bad.degree() });
    }
    if sigmas.iter().any(Permutation::is_identity) {
        return Err(Error::IdentityInMotionList);
    }
    let mut stars: Vec<Bits> = (0..n).map(|_| Bits::new(k)).collect();
    for (i, s) in sigmas.iter().enumerate() {
        for x in s.moved_points() {
            stars[x].set(i);
        }
    }
    let moved: Vec<Vec<usize>> = sigmas.iter().map(Permutation::moved_points).collect();

    let mut size = 1;
    let witnesses = loop {
        let mut search = CoverSearch { stars: &stars, moved: &moved, limit: size, best: None };
        let mut covered = vec![false; k];
        search.run(&mut covered, &mut Vec::new());
        if let Some(best) = search.best {
            break best;
        }
        size += 1;
    };

    let mut blocks = vec![Vec::new(); witnesses.len()];
    for (i, m) in moved.iter().enumerate() {
        let j = witnesses.iter().position(|w| m.contains(w)).expect("cover covers every index");
        blocks[j].push(i);
    }
    debug_assert!(blocks.iter().all(|b| !b.is_empty()), "a minimum cover has no redundant star");
    Ok(GoodPartition { blocks, witnesses })
}

struct CoverSearch<'a> {
    stars: &'a [Bits],
    moved: &'a [Vec<usize>],
    limit: usize,
    best: Option<Vec<usize>>,
}

impl CoverSearch<'_> {
    /// Branches on the least uncovered index over the points it moves. This
    /// reaches every irredundant cover of size `limit`.
    fn run(&mut self, covered: &mut Vec<bool>, chosen: &mut Vec<usize>) {
        let Some(first) = covered.iter().position(|&c| !c) else {
            let mut sorted = chosen.clone();
            sorted.sort_unstable();
            if self.best.as_ref().is_none_or(|b| sorted < *b) {
                self.best = Some(sorted);
            }
            return;
        };
        if chosen.len() == self.limit {
            return;
        }
        for &x in &self.moved[first] {
            let star = &self.stars[x];
            let newly: Vec<usize> = (0..covered.len()).filter(|&i| !covered[i] && star.get(i)).collect();
            for &i in &newly {
                covered[i] = true;
            }
            chosen.push(x);
            self.run(covered, chosen);
            chosen.pop();
            for &i in &newly {
                covered[i] = false;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionBound {
    /// `D_H(X) + t`.
    pub bound: u32,
    /// `D_H(X)`.
    pub subgroup_value: u32,
    /// The `H`-distinguishing labeling the construction started from.
    pub base_labeling: Labeling,
    /// Non-identity elements of `Γ` preserving the base labeling.
    pub preservers: Vec<Permutation>,
    pub partition: GoodPartition,
    /// Base labeling with witness `x_j` relabelled `D_H(X) + j`.
    pub labeling: Labeling,
}

impl MotionBound {
    pub fn t(&self) -> u32 {
        self.partition.len() as u32
    }
}

/// Motion-based bound `D_Γ(X) ≤ D_H(X) + t` starting from the solver's
/// `H`-distinguishing witness.
pub fn motion_bound(g: &PermGroup, h: &PermGroup, opts: SearchOptions) -> Result<MotionBound> {
    h.require_subgroup_of(g)?;
    let base = distinguishing_number(h, opts);
    motion_bound_from(g, base.value, base.witness)
}

/// Same construction from a given base labeling that uses `subgroup_value`
/// labels and is distinguishing under the subgroup.
pub fn motion_bound_from(g: &PermGroup, subgroup_value: u32, base: Labeling) -> Result<MotionBound> {
    let preservers = preservers_of(g, &base)?;
    let partition = min_good_partition(&preservers)?;
    let mut labels = base.labels().to_vec();
    for (j, &x) in partition.witnesses.iter().enumerate() {
        labels[x] = subgroup_value + j as u32 + 1;
    }
    let bound = subgroup_value + partition.len() as u32;
    let labeling = Labeling::new(labels, bound)?;
    let trivial = PermGroup::trivial(g.degree())?;
    if !is_distinguishing(g, &labeling, &trivial)? {
        return Err(Error::ConstructionFailed("motion bound"));
    }
    Ok(MotionBound { bound, subgroup_value, base_labeling: base, preservers, partition, labeling })
}

/// Best motion bound over every `D_H(X)`-labeling distinguishing under `H`,
/// taken up to renaming of labels. Returns the bound together with the
/// number of labelings considered.
pub fn motion_bound_over_labelings(g: &PermGroup, h: &PermGroup, opts: SearchOptions) -> Result<(MotionBound, usize)> {
    h.require_subgroup_of(g)?;
    let d = distinguishing_number(h, opts).value;
    let trivial = PermGroup::trivial(g.degree())?;
    let mut best: Option<MotionBound> = None;
    let mut considered = 0;
    let stream = crate::labeling::enumerate_labelings(g.degree(), d as usize, crate::labeling::EnumerationMode::Surjective, true);
    for c in stream {
        if !is_distinguishing(h, &c, &trivial)? {
            continue;
        }
        considered += 1;
        let candidate = motion_bound_from(g, d, c)?;
        if best.as_ref().is_none_or(|b| candidate.bound < b.bound) {
            best = Some(candidate);
        }
    }
    Ok((best.expect("a D_H-labeling distinguishing under H exists"), considered))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRepBound {
    /// `c + 1`.
    pub bound: u32,
    pub c: u32,
    /// `U`: least point of each orbit.
    pub orbit_reps: Vec<usize>,
    /// `|L|` for the pointwise stabilizer `L` of `U`.
    pub stabilizer_order: usize,
    /// `D_L(X∖U)` on the restricted action.
    pub restricted_value: u32,
    /// `D_L(X)`.
    pub stabilizer_value: u32,
    /// Set when no maximal nonidentity proper subgroup exists and `c` fell
    /// back to the trivial subgroup's value 1.
    pub degenerate: bool,
    pub labeling: Labeling,
}

struct RepConstruction {
    reps: Vec<usize>,
    stabilizer: PermGroup,
    restricted_value: u32,
    restricted_witness: (Labeling, Vec<usize>),
}

fn rep_construction(g: &PermGroup, opts: SearchOptions) -> Result<RepConstruction> {
    let reps = g.orbit_representatives();
    let stabilizer = g.pointwise_stabilizer(&reps)?;
    let (restricted, kept) = stabilizer.restrict_to_complement(&reps)?;
    let solved = distinguishing_number(&restricted, opts);
    Ok(RepConstruction { reps, stabilizer, restricted_value: solved.value, restricted_witness: (solved.witness, kept) })
}

/// Splits label classes until `target` labels are used or every class is a
/// singleton. Preservers of a refinement are preservers of the original.
fn refine_to(labels: &mut [u32], target: u32) {
    let mut used = labels.iter().copied().max().unwrap_or(0);
    while used < target {
        let Some(i) = (0..labels.len()).rev().find(|&i| labels[..i].contains(&labels[i])) else {
            return;
        };
        used += 1;
        labels[i] = used;
    }
}

fn finish_rep_bound(g: &PermGroup, c: u32, degenerate: bool, stabilizer_value: u32, rc: RepConstruction) -> Result<OrbitRepBound> {
    if rc.restricted_value > c {
        return Err(Error::ConstructionFailed("orbit-representative (D_L(X∖U) exceeds c)"));
    }
    let (witness, kept) = rc.restricted_witness;
    let mut inner = witness.labels().to_vec();
    refine_to(&mut inner, c);
    let mut labels = vec![c + 1; g.degree()];
    for (i, &p) in kept.iter().enumerate() {
        labels[p] = inner[i];
    }
    let labeling = Labeling::new(labels, c + 1)?;
    let trivial = PermGroup::trivial(g.degree())?;
    if !is_distinguishing(g, &labeling, &trivial)? {
        return Err(Error::ConstructionFailed("orbit-representative"));
    }
    Ok(OrbitRepBound {
        bound: c + 1,
        c,
        orbit_reps: rc.reps,
        stabilizer_order: rc.stabilizer.order(),
        restricted_value: rc.restricted_value,
        stabilizer_value,
        degenerate,
        labeling,
    })
}

/// Maximal-subgroup bound `D_Γ(X) ≤ c + 1` with `c = max D_{H_i}(X)` over the
/// maximal nonidentity subgroups. Pass `maximal` to skip subgroup enumeration.
pub fn maximal_subgroup_bound(
    g: &PermGroup,
    maximal: Option<&[PermGroup]>,
    subgroup_cap: usize,
    opts: SearchOptions,
) -> Result<OrbitRepBound> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("the maximal-subgroup bound"));
    }
    let owned;
    let list = match maximal {
        Some(list) => list,
        None => {
            owned = g.maximal_subgroups(subgroup_cap)?;
            &owned[..]
        }
    };
    for h in list {
        h.require_subgroup_of(g)?;
    }
    let degenerate = list.is_empty();
    let c = list.iter().map(|h| distinguishing_number(h, opts).value).max().unwrap_or(1);
    let rc = rep_construction(g, opts)?;
    let stabilizer_value = distinguishing_number(&rc.stabilizer, opts).value;
    finish_rep_bound(g, c, degenerate, stabilizer_value, rc)
}

/// Orbit-representative bound `D_Γ(X) ≤ D_L(X) + 1` where `L` fixes one
/// representative of each orbit.
pub fn orbit_rep_bound(g: &PermGroup, opts: SearchOptions) -> Result<OrbitRepBound> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("the orbit-representative bound"));
    }
    let rc = rep_construction(g, opts)?;
    let c = distinguishing_number(&rc.stabilizer, opts).value;
    finish_rep_bound(g, c, false, c, rc)
}

/// Least `k` with `order ≤ k!`.
pub fn tymoczko_bound(order: usize) -> u32 {
    let mut k = 1u32;
    let mut factorial: u128 = 1;
    while (order as u128) > factorial {
        k += 1;
        factorial *= k as u128;
    }
    k
}

/// `Some(2)` for nontrivial groups of odd order, `None` otherwise.
pub fn gluck_expectation(g: &PermGroup) -> Option<u32> {
    (g.order() % 2 == 1 && !g.is_trivial()).then_some(2)
}
