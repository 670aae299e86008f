//! Exact distinguishing numbers by exhaustive search over surjective
//! labelings, in increasing label count.
//!
//! The two "paper mode" routines keep the loop structure of the published
//! bound algorithms (ascending for the upper bound, descending for the lower
//! bound) and their literal acceptance tests, so they can be audited against
//! the exact solver rather than assumed equal to it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::group::PermGroup;
use crate::labeling::{preserves, EnumerationMode, Labeling, LabelingStream};
use crate::perm::Permutation;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Enumerate one labeling per label-renaming class instead of all of them.
    pub reduce_label_symmetry: bool,
    /// Keep scanning a label-count level after the first qualifying labeling.
    pub full_level_scan: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { reduce_label_symmetry: true, full_level_scan: false }
    }
}

impl SearchOptions {
    /// No symmetry reduction and full level scans; the brute-force reference.
    pub fn oracle() -> Self {
        SearchOptions { reduce_label_symmetry: false, full_level_scan: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    /// First qualifying labeling in enumeration order at `value` labels.
    pub witness: Labeling,
    /// Labelings tested.
    pub examined: u64,
}

struct Found {
    witness: Vec<u32>,
    examined: u64,
}

/// Scans the surjective `d`-labelings, returning the first accepted one.
fn scan_level<F>(n: usize, d: usize, opts: SearchOptions, mut accept: F) -> (Option<Vec<u32>>, u64)
where
    F: FnMut(&[u32]) -> bool,
{
    let mut stream = LabelingStream::new(n, d, EnumerationMode::Surjective, opts.reduce_label_symmetry);
    let mut examined = 0u64;
    let mut first = None;
    while let Some(labels) = stream.next_labels() {
        examined += 1;
        if first.is_none() && accept(labels) {
            first = Some(labels.to_vec());
            if !opts.full_level_scan {
                break;
            }
        }
    }
    (first, examined)
}

fn ascending<F>(n: usize, opts: SearchOptions, mut accept: F) -> Option<(u32, Found)>
where
    F: FnMut(&[u32]) -> bool,
{
    let mut examined = 0;
    for d in 1..=n {
        let (hit, count) = scan_level(n, d, opts, &mut accept);
        examined += count;
        if let Some(witness) = hit {
            return Some((d as u32, Found { witness, examined }));
        }
    }
    None
}

fn into_result(value: u32, found: Found) -> SolveResult {
    let witness = Labeling::new(found.witness, value).expect("enumerated labels are in range");
    SolveResult { value, witness, examined: found.examined }
}

/// `D_Γ(X)`: the least `d` admitting a surjective `d`-labeling preserved only
/// by the identity.
pub fn distinguishing_number(g: &PermGroup, opts: SearchOptions) -> SolveResult {
    let movers: Vec<&Permutation> = g.elements().iter().filter(|s| !s.is_identity()).collect();
    let (value, found) = ascending(g.degree(), opts, |labels| movers.iter().all(|s| !preserves(s, labels)))
        .expect("the all-distinct labeling is distinguishing for a faithful action");
    into_result(value, found)
}

/// `D_{Γ,H}(X)`: the least `d` admitting a surjective `d`-labeling whose
/// preservers in `g` all lie in `h`.
pub fn relative_distinguishing_number(g: &PermGroup, h: &PermGroup, opts: SearchOptions) -> Result<SolveResult> {
    h.require_subgroup_of(g)?;
    let outside: Vec<&Permutation> = g.elements().iter().filter(|s| !h.contains(s)).collect();
    let (value, found) = ascending(g.degree(), opts, |labels| outside.iter().all(|s| !preserves(s, labels)))
        .expect("the all-distinct labeling qualifies for every subgroup");
    Ok(into_result(value, found))
}

/// Ascending loop over `d = 1..|X|`, collecting `d` whenever some labeling in
/// `L_d` has `(Γ, φ) ⩽ H`; returns `min` of the collected set.
pub fn paper_upper_algorithm(g: &PermGroup, h: &PermGroup, opts: SearchOptions) -> Result<SolveResult> {
    h.require_subgroup_of(g)?;
    let n = g.degree();
    let mut collected: BTreeSet<u32> = BTreeSet::new();
    let mut witness: Option<Vec<u32>> = None;
    let mut examined = 0u64;
    for d in 1..=n {
        let (hit, count) = scan_level(n, d, opts, |labels| g.elements().iter().filter(|s| preserves(s, labels)).all(|s| h.contains(s)));
        examined += count;
        if let Some(labels) = hit {
            collected.insert(d as u32);
            witness.get_or_insert(labels);
            // Later levels cannot lower the minimum.
            if !opts.full_level_scan {
                break;
            }
        }
    }
    let value = *collected.first().expect("the all-distinct labeling qualifies for every subgroup");
    Ok(into_result(value, Found { witness: witness.expect("set nonempty"), examined }))
}

/// Descending loop over `d = |X|..1`, collecting `d` whenever some labeling in
/// `L_d` has `H ⩽ (Γ, φ)`; returns `max` of the collected set.
///
/// The result is whatever the loop produces; whether it really bounds
/// `D_{Γ,H}(X)` from below is for the caller to check.
pub fn paper_lower_algorithm(g: &PermGroup, h: &PermGroup, opts: SearchOptions) -> Result<SolveResult> {
    h.require_subgroup_of(g)?;
    let n = g.degree();
    let mut collected: BTreeSet<u32> = BTreeSet::new();
    let mut witness: Option<Vec<u32>> = None;
    let mut examined = 0u64;
    for d in (1..=n).rev() {
        let (hit, count) = scan_level(n, d, opts, |labels| h.elements().iter().all(|s| preserves(s, labels)));
        examined += count;
        if let Some(labels) = hit {
            collected.insert(d as u32);
            witness.get_or_insert(labels);
            // Lower levels cannot raise the maximum.
            if !opts.full_level_scan {
                break;
            }
        }
    }
    let value = *collected.last().expect("the constant labeling is preserved by every subgroup");
    Ok(into_result(value, Found { witness: witness.expect("set nonempty"), examined }))
}

/// `H ⩽ (Γ, φ)` exactly when `φ` is constant on every `H`-orbit, so the
/// descending loop stops at the number of `H`-orbits.
pub fn lower_algorithm_orbit_count(h: &PermGroup) -> u32 {
    h.orbits().len() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CLOSURE_CAP;
    use crate::labeling::is_distinguishing;
    use crate::perm::parse_cycles;
    use crate::Error;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(s, n).unwrap()).collect();
        PermGroup::close(&gens, DEFAULT_CLOSURE_CAP).unwrap()
    }

    /// Brute-force reference: every map into `{1..d}` (not only onto ones)
    /// for increasing `d`, checking the preserving set elementwise.
    fn brute_relative(g: &PermGroup, h: &PermGroup) -> u32 {
        let n = g.degree();
        for d in 1..=n as u32 {
            let mut labels = alloc::vec![1u32; n];
            loop {
                let ok = g.elements().iter().all(|s| h.contains(s) || !preserves(s, &labels));
                if ok {
                    return d;
                }
                let mut i = n;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if labels[i] < d {
                        labels[i] += 1;
                        break;
                    }
                    labels[i] = 1;
                }
                if labels.iter().all(|&l| l == 1) {
                    break;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn absolute_examples() {
        let s3 = group(&["(1 2 3)", "(1 2)"], 3);
        let r = distinguishing_number(&s3, SearchOptions::default());
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.to_text(), "1,2,3");
        assert_eq!(distinguishing_number(&PermGroup::trivial(3).unwrap(), SearchOptions::default()).value, 1);
        assert_eq!(distinguishing_number(&group(&["(1 2 3)"], 3), SearchOptions::default()).value, 2);
        assert_eq!(distinguishing_number(&group(&["(1 2 3 4)", "(1 2)"], 4), SearchOptions::oracle()).value, 4);
    }

    #[test]
    fn relative_examples() {
        let s3 = group(&["(1 2 3)", "(1 2)"], 3);
        let a3 = group(&["(1 2 3)"], 3);
        let h = group(&["(2 3)"], 3);
        let opts = SearchOptions::default();
        assert_eq!(relative_distinguishing_number(&s3, &s3, opts).unwrap().value, 1);
        let r = relative_distinguishing_number(&s3, &h, opts).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_text(), "1,2,2");
        assert_eq!(relative_distinguishing_number(&s3, &a3, SearchOptions::oracle()).unwrap().value, 3);
        assert_eq!(relative_distinguishing_number(&a3, &s3, opts), Err(Error::NotSubgroup));
    }

    #[test]
    fn upper_algorithm_examples() {
        let s3 = group(&["(1 2 3)", "(1 2)"], 3);
        let triv = PermGroup::trivial(3).unwrap();
        let opts = SearchOptions::default();
        assert_eq!(paper_upper_algorithm(&s3, &triv, opts).unwrap().value, 3);
        assert_eq!(paper_upper_algorithm(&s3, &s3, opts).unwrap().value, 1);
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let c4 = group(&["(1 2 3 4)"], 4);
        let exact = relative_distinguishing_number(&d4, &c4, opts).unwrap();
        let upper = paper_upper_algorithm(&d4, &c4, opts).unwrap();
        assert_eq!(upper.value, exact.value);
        assert_eq!(exact.value, brute_relative(&d4, &c4));
    }

    #[test]
    fn lower_algorithm_examples() {
        let opts = SearchOptions::default();
        let c2 = group(&["(1 2)"], 4);
        assert_eq!(paper_lower_algorithm(&c2, &c2, opts).unwrap().value, 3);
        assert_eq!(relative_distinguishing_number(&c2, &c2, opts).unwrap().value, 1);
        assert_eq!(lower_algorithm_orbit_count(&c2), 3);

        let s3 = group(&["(1 2 3)", "(1 2)"], 3);
        let a3 = group(&["(1 2 3)"], 3);
        assert_eq!(paper_lower_algorithm(&s3, &a3, opts).unwrap().value, 1);
        let triv = PermGroup::trivial(3).unwrap();
        assert_eq!(paper_lower_algorithm(&s3, &triv, SearchOptions::oracle()).unwrap().value, 3);
    }

    #[test]
    fn witnesses_verify_and_modes_agree() {
        let cases = [
            group(&["(1 2 3 4)", "(1 3)"], 4),
            group(&["(1 2 3 4 5)"], 5),
            group(&["(1 2 3 4 5)", "(2 5)(3 4)"], 5),
            group(&["(1 2)", "(3 4)"], 4),
            group(&["(1 2 3)", "(4 5)"], 5),
        ];
        for g in &cases {
            for h in g.all_subgroups(200).unwrap() {
                let fast = relative_distinguishing_number(g, &h, SearchOptions::default()).unwrap();
                let oracle = relative_distinguishing_number(g, &h, SearchOptions::oracle()).unwrap();
                assert_eq!(fast.value, oracle.value);
                assert_eq!(fast.value, brute_relative(g, &h));
                assert!(is_distinguishing(g, &fast.witness, &h).unwrap());
                assert!(is_distinguishing(g, &oracle.witness, &h).unwrap());
                assert_eq!(paper_upper_algorithm(g, &h, SearchOptions::default()).unwrap().value, fast.value);
                assert_eq!(paper_lower_algorithm(g, &h, SearchOptions::default()).unwrap().value, lower_algorithm_orbit_count(&h));
            }
        }
    }
}
