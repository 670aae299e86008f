//! Finite permutation groups held as a full element list.
//!
//! Element order is canonical: breadth-first from the identity, each layer
//! sorted by image array. Every "pick a representative" step downstream
//! (coset representatives, orbit representatives, witnesses) takes the least
//! candidate in this order.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 200;

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    lookup: BTreeMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    /// Two groups are equal when they have the same degree and element set.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.elements.iter().all(|e| other.contains(e))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closes `generators` under composition. Fails once more than `cap`
    /// elements have been found.
    pub fn close(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: bad.degree() });
        }
        let identity = Permutation::identity(degree)?;
        let mut lookup = BTreeMap::new();
        lookup.insert(identity.clone(), 0);
        let mut elements = vec![identity];
        if cap == 0 {
            return Err(Error::OrderCap { cap });
        }
        let mut layer_start = 0;
        while layer_start < elements.len() {
            let layer_end = elements.len();
            let mut next = BTreeSet::new();
            for e in &elements[layer_start..layer_end] {
                for g in generators {
                    let p = g.compose_unchecked(e);
                    if !lookup.contains_key(&p) {
                        next.insert(p);
                    }
                }
            }
            if elements.len() + next.len() > cap {
                return Err(Error::OrderCap { cap });
            }
            for p in next {
                lookup.insert(p.clone(), elements.len());
                elements.push(p);
            }
            layer_start = layer_end;
        }
        Ok(PermGroup { degree, generators: generators.to_vec(), elements, lookup })
    }

    pub fn trivial(degree: usize) -> Result<PermGroup> {
        Self::close(&[Permutation::identity(degree)?], 1)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in canonical order; index 0 is the identity.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|a| gens.iter().all(|b| a.compose_unchecked(b) == b.compose_unchecked(a)))
    }

    /// Sorted element list, the canonical key of the underlying set.
    pub fn sorted_elements(&self) -> Vec<Permutation> {
        self.lookup.keys().cloned().collect()
    }

    fn check_degree(&self, other: &PermGroup) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> Result<bool> {
        self.check_degree(g)?;
        Ok(self.order() <= g.order() && self.elements.iter().all(|e| g.contains(e)))
    }

    pub(crate) fn require_subgroup_of(&self, g: &PermGroup) -> Result<()> {
        if self.is_subgroup_of(g)? {
            Ok(())
        } else {
            Err(Error::NotSubgroup)
        }
    }

    /// Whether `self` is normal in `g`; conjugating generators suffices.
    pub fn is_normal_in(&self, g: &PermGroup) -> Result<bool> {
        self.require_subgroup_of(g)?;
        Ok(g.generators.iter().all(|s| self.generators.iter().all(|h| self.contains(&s.conjugate(h)))))
    }

    pub fn index_in(&self, g: &PermGroup) -> Result<usize> {
        self.require_subgroup_of(g)?;
        Ok(g.order() / self.order())
    }

    /// Representatives `σ_0 = id, σ_1, ..` of the left cosets `σH` of `self` in
    /// `g`, each the least element of `g` not yet covered.
    pub fn left_coset_reps(&self, g: &PermGroup) -> Result<Vec<Permutation>> {
        self.require_subgroup_of(g)?;
        let mut covered = vec![false; g.order()];
        let mut reps = Vec::new();
        for (i, s) in g.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            for h in &self.elements {
                let j = g.lookup[&s.compose_unchecked(h)];
                covered[j] = true;
            }
            reps.push(s.clone());
        }
        Ok(reps)
    }

    /// Subgroup consisting of the given elements of `self`, which must already
    /// form a subgroup. Generators are picked greedily in canonical order.
    pub fn subgroup_from_elements<'a, I>(&self, members: I) -> Result<PermGroup>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree)?;
        for p in members {
            if !current.contains(p) {
                gens.push(p.clone());
                current = PermGroup::close(&gens, self.order())?;
            }
        }
        Ok(current)
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        self.check_degree(other)?;
        self.subgroup_from_elements(self.elements.iter().filter(|e| other.contains(e)))
    }

    /// The group generated by `self` and `other` together.
    pub fn join(&self, other: &PermGroup, cap: usize) -> Result<PermGroup> {
        self.check_degree(other)?;
        let gens: Vec<Permutation> = self.generators.iter().chain(other.generators.iter()).cloned().collect();
        PermGroup::close(&gens, cap)
    }

    /// Whether the product set `self · other` is a subgroup, i.e. `HK = KH`.
    pub fn permutes_with(&self, other: &PermGroup, cap: usize) -> Result<bool> {
        let meet = self.intersection(other)?;
        let product_size = self.order() * other.order() / meet.order();
        Ok(self.join(other, cap)?.order() == product_size)
    }

    /// Subgroup generated by every commutator `aba⁻¹b⁻¹`, computed as the
    /// normal closure of the commutators of generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms: Vec<Permutation> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_of(&comms).expect("commutators lie in the group")
    }

    /// Smallest normal subgroup of `g` containing `self`.
    pub fn normal_closure(&self, g: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup_of(g)?;
        g.normal_closure_of(&self.generators)
    }

    fn normal_closure_of(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = seeds.iter().filter(|p| !p.is_identity()).cloned().collect();
        if gens.is_empty() {
            return PermGroup::trivial(self.degree);
        }
        let mut current = PermGroup::close(&gens, self.order())?;
        loop {
            let mut grew = false;
            for s in &self.generators {
                for h in gens.clone() {
                    let c = s.conjugate(&h);
                    if !current.contains(&c) {
                        gens.push(c);
                        current = PermGroup::close(&gens, self.order())?;
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(current);
            }
        }
    }

    /// Elements fixing each point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        if let Some(&p) = points.iter().find(|&&p| p >= self.degree) {
            return Err(Error::PointOutOfRange { point: p, degree: self.degree });
        }
        self.subgroup_from_elements(self.elements.iter().filter(|e| points.iter().all(|&p| e.apply(p) == p)))
    }

    /// Orbits on `{0..degree-1}`, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// The least point of every orbit.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        self.orbits().into_iter().map(|o| o[0]).collect()
    }

    /// The group acting on the points outside `removed`, which must be a union
    /// of orbits. Returned points are relabelled `0..` in ascending order; the
    /// second value maps new points back to old ones. Fails if nothing remains.
    pub fn restrict_to_complement(&self, removed: &[usize]) -> Result<(PermGroup, Vec<usize>)> {
        let kept: Vec<usize> = (0..self.degree).filter(|p| !removed.contains(p)).collect();
        if kept.is_empty() {
            return Err(Error::InvalidDegree);
        }
        let mut position = vec![usize::MAX; self.degree];
        for (i, &p) in kept.iter().enumerate() {
            position[p] = i;
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images = Vec::with_capacity(kept.len());
            for &p in &kept {
                let q = position[g.apply(p)];
                if q == usize::MAX {
                    return Err(Error::InvalidLabeling("restriction set is not invariant".into()));
                }
                images.push(q);
            }
            gens.push(Permutation::from_images(images)?);
        }
        Ok((PermGroup::close(&gens, self.order())?, kept))
    }

    /// Every subgroup exactly once, ordered by order and then by sorted
    /// element list.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<PermGroup>> {
        Ok(self.subgroup_lattice(cap)?.into_groups(self))
    }

    /// Proper nonidentity subgroups that are maximal under inclusion.
    pub fn maximal_subgroups(&self, cap: usize) -> Result<Vec<PermGroup>> {
        let lattice = self.subgroup_lattice(cap)?;
        let n = self.order();
        let proper: Vec<usize> = (0..lattice.sets.len()).filter(|&i| lattice.sizes[i] != n && lattice.sizes[i] != 1).collect();
        let maximal: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&i| !proper.iter().any(|&j| j != i && lattice.sizes[j] > lattice.sizes[i] && lattice.is_subset(i, j)))
            .collect();
        Ok(maximal.into_iter().map(|i| lattice.group(self, i)).collect())
    }

    fn subgroup_lattice(&self, cap: usize) -> Result<Lattice> {
        let n = self.order();
        if n > cap {
            return Err(Error::SubgroupCap { order: n, cap });
        }
        let table: Vec<Vec<usize>> =
            self.elements.iter().map(|a| self.elements.iter().map(|b| self.lookup[&a.compose_unchecked(b)]).collect()).collect();
        let words = n.div_ceil(64);
        let close = |gens: &[usize]| -> Vec<u64> {
            let mut bits = vec![0u64; words];
            bits[0] |= 1;
            let mut members = vec![0usize];
            let mut k = 0;
            while k < members.len() {
                let e = members[k];
                for &g in gens {
                    let p = table[g][e];
                    if bits[p / 64] & (1 << (p % 64)) == 0 {
                        bits[p / 64] |= 1 << (p % 64);
                        members.push(p);
                    }
                }
                k += 1;
            }
            bits
        };
        let mut seen: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut sets: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
        let trivial = close(&[]);
        seen.insert(trivial.clone(), 0);
        sets.push((trivial, Vec::new()));
        let mut k = 0;
        while k < sets.len() {
            let (bits, gens) = sets[k].clone();
            for g in 0..n {
                if bits[g / 64] & (1 << (g % 64)) != 0 {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(g);
                let next = close(&next_gens);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), sets.len());
                    sets.push((next, next_gens));
                }
            }
            k += 1;
        }
        let mut lattice = Lattice { sizes: Vec::new(), sets: Vec::new(), gens: Vec::new() };
        for (bits, gens) in sets {
            lattice.sizes.push(bits.iter().map(|w| w.count_ones() as usize).sum());
            lattice.sets.push(bits);
            lattice.gens.push(gens);
        }
        Ok(lattice)
    }
}

struct Lattice {
    sizes: Vec<usize>,
    sets: Vec<Vec<u64>>,
    gens: Vec<Vec<usize>>,
}

impl Lattice {
    fn is_subset(&self, a: usize, b: usize) -> bool {
        self.sets[a].iter().zip(&self.sets[b]).all(|(x, y)| x & !y == 0)
    }

    fn group(&self, parent: &PermGroup, i: usize) -> PermGroup {
        if self.gens[i].is_empty() {
            return PermGroup::trivial(parent.degree).expect("parent degree is positive");
        }
        let gens: Vec<Permutation> = self.gens[i].iter().map(|&g| parent.elements[g].clone()).collect();
        PermGroup::close(&gens, parent.order()).expect("subgroup of a closed group")
    }

    fn into_groups(self, parent: &PermGroup) -> Vec<PermGroup> {
        let mut groups: Vec<PermGroup> = (0..self.sets.len()).map(|i| self.group(parent, i)).collect();
        groups.sort_by_cached_key(|g| (g.order(), g.sorted_elements()));
        groups
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(s, n).unwrap()).collect();
        PermGroup::close(&gens, DEFAULT_CLOSURE_CAP).unwrap()
    }

    fn s3() -> PermGroup {
        group(&["(1 2 3)", "(1 2)"], 3)
    }

    fn a3() -> PermGroup {
        group(&["(1 2 3)"], 3)
    }

    fn s4() -> PermGroup {
        group(&["(1 2 3 4)", "(1 2)"], 4)
    }

    /// All n! bijections of n points, for small n.
    fn all_bijections(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation::from_images(cur.clone()).unwrap());
                return;
            }
            for x in 0..n {
                if !cur.contains(&x) {
                    cur.push(x);
                    rec(n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn closure_examples() {
        let g = s3();
        assert_eq!(g.order(), 6);
        for p in all_bijections(3) {
            assert!(g.contains(&p));
        }
        assert!(g.elements()[0].is_identity());
        assert_eq!(group(&["()"], 4).order(), 1);
        let c7 = parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap();
        assert_eq!(PermGroup::close(&[c7], 5), Err(Error::OrderCap { cap: 5 }));
        assert_eq!(PermGroup::close(&[], 5), Err(Error::EmptyGenerators));
    }

    #[test]
    fn closure_is_deterministic() {
        let a = s4();
        let b = s4();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn subgroup_and_normality() {
        let (s3, a3) = (s3(), a3());
        let c2 = group(&["(1 2)"], 3);
        let triv = PermGroup::trivial(3).unwrap();
        assert!(a3.is_subgroup_of(&s3).unwrap());
        assert!(!s3.is_subgroup_of(&a3).unwrap());
        assert!(triv.is_subgroup_of(&s3).unwrap());
        assert!(a3.is_normal_in(&s3).unwrap());
        assert!(!c2.is_normal_in(&s3).unwrap());
        assert!(s3.is_normal_in(&s3).unwrap());
        assert_eq!(s3.is_normal_in(&a3), Err(Error::NotSubgroup));
        assert!(matches!(s3.is_subgroup_of(&s4()), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn index_and_cosets() {
        let (s3, a3) = (s3(), a3());
        assert_eq!(a3.index_in(&s3).unwrap(), 2);
        assert_eq!(s3.index_in(&s3).unwrap(), 1);
        let reps = s3.left_coset_reps(&s3).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
        let s4 = s4();
        let c2 = group(&["(1 2)"], 4);
        assert_eq!(c2.index_in(&s4).unwrap(), 12);
        let reps = c2.left_coset_reps(&s4).unwrap();
        assert_eq!(reps.len(), 12);
        assert!(reps[0].is_identity());
        let mut all = BTreeSet::new();
        for r in &reps {
            for h in c2.elements() {
                assert!(all.insert(r.compose(h).unwrap()));
            }
        }
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(s3().derived_subgroup(), a3());
        assert!(group(&["(1 2 3 4 5)"], 5).derived_subgroup().is_trivial());
        let a4 = group(&["(1 2 3)", "(2 3 4)"], 4);
        assert_eq!(a4.order(), 12);
        assert_eq!(s4().derived_subgroup(), a4);
    }

    #[test]
    fn derived_matches_all_commutators() {
        for g in [s3(), s4(), group(&["(1 2 3 4)", "(1 3)"], 4), group(&["(1 2 3 4 5)", "(1 2 3)"], 5)] {
            let comms: Vec<Permutation> =
                g.elements().iter().flat_map(|a| g.elements().iter().map(move |b| Permutation::commutator(a, b))).collect();
            let brute = PermGroup::close(&comms, DEFAULT_CLOSURE_CAP).unwrap();
            let derived = g.derived_subgroup();
            assert_eq!(derived, brute);
            assert!(derived.is_normal_in(&g).unwrap());
        }
    }

    #[test]
    fn normal_closures() {
        let s3 = s3();
        let c2 = group(&["(1 2)"], 3);
        assert_eq!(c2.normal_closure(&s3).unwrap(), s3);
        assert_eq!(a3().normal_closure(&s3).unwrap(), a3());
        assert!(PermGroup::trivial(3).unwrap().normal_closure(&s3).unwrap().is_trivial());
    }

    #[test]
    fn stabilizers() {
        let s3 = s3();
        let st = s3.pointwise_stabilizer(&[0]).unwrap();
        assert_eq!(st, group(&["(2 3)"], 3));
        assert_eq!(s3.pointwise_stabilizer(&[]).unwrap(), s3);
        assert!(s3.pointwise_stabilizer(&[0, 1]).unwrap().is_trivial());
        assert!(matches!(s3.pointwise_stabilizer(&[3]), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(s3().orbits(), vec![vec![0, 1, 2]]);
        assert_eq!(s3().orbit_representatives(), vec![0]);
        let t = PermGroup::trivial(3).unwrap();
        assert_eq!(t.orbit_representatives(), vec![0, 1, 2]);
        let g = group(&["(1 2)"], 4);
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(g.orbit_representatives(), vec![0, 2, 3]);
    }

    #[test]
    fn subgroup_enumeration() {
        let s3 = s3();
        let subs = s3.all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let max = s3.maximal_subgroups(DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(max.len(), 4);
        assert!(max.contains(&a3()));

        let c5 = group(&["(1 2 3 4 5)"], 5);
        assert_eq!(c5.all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().len(), 2);
        assert!(c5.maximal_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().is_empty());

        let t = PermGroup::trivial(2).unwrap();
        assert_eq!(t.all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().len(), 1);
        assert!(t.maximal_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().is_empty());

        // S4 has 30 subgroups.
        assert_eq!(s4().all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().len(), 30);
        assert!(matches!(s4().all_subgroups(10), Err(Error::SubgroupCap { order: 24, cap: 10 })));
    }

    #[test]
    fn subgroup_enumeration_matches_subset_brute_force() {
        // Brute force over all subsets of a group of order 8 that contain the
        // identity and are closed under composition.
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let els = d4.elements().to_vec();
        let mut count = 0;
        for mask in 0u32..(1 << els.len()) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<&Permutation> = (0..els.len()).filter(|i| mask >> i & 1 == 1).map(|i| &els[i]).collect();
            let closed = members.iter().all(|a| {
                members.iter().all(|b| {
                    let c = a.compose(b).unwrap();
                    members.contains(&&c)
                })
            });
            if closed {
                count += 1;
            }
        }
        assert_eq!(count, 10);
        assert_eq!(d4.all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap().len(), count);
    }

    #[test]
    fn products_and_intersections() {
        let s3 = s3();
        let c2 = group(&["(1 2)"], 3);
        let c2b = group(&["(1 3)"], 3);
        assert!(c2.permutes_with(&a3(), DEFAULT_CLOSURE_CAP).unwrap());
        assert!(!c2.permutes_with(&c2b, DEFAULT_CLOSURE_CAP).unwrap());
        assert!(c2.intersection(&a3()).unwrap().is_trivial());
        assert_eq!(c2.join(&a3(), DEFAULT_CLOSURE_CAP).unwrap(), s3);
    }

    #[test]
    fn restriction_to_complement() {
        let st = s4().pointwise_stabilizer(&[0]).unwrap();
        let (r, kept) = st.restrict_to_complement(&[0]).unwrap();
        assert_eq!(kept, vec![1, 2, 3]);
        assert_eq!(r.degree(), 3);
        assert_eq!(r.order(), 6);
    }
}
