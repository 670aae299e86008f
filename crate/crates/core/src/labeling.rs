//! Labelings `X → {1..d}`, the subgroup of elements preserving one, and
//! streaming enumeration of labelings.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<u32>,
    label_count: u32,
}

impl Labeling {
    /// Checks that every label lies in `1..=label_count`.
    pub fn new(labels: Vec<u32>, label_count: u32) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidDegree);
        }
        if label_count == 0 {
            return Err(Error::InvalidLabeling(String::from("label count must be positive")));
        }
        if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > label_count) {
            return Err(Error::InvalidLabeling(format!("label {bad} outside 1..={label_count}")));
        }
        Ok(Labeling { labels, label_count })
    }

    /// Label count taken as the largest label present.
    pub fn from_labels(labels: Vec<u32>) -> Result<Self> {
        let d = labels.iter().copied().max().unwrap_or(0);
        Self::new(labels, d)
    }

    pub fn constant(degree: usize) -> Result<Self> {
        Self::new(vec![1; degree], 1)
    }

    /// Point `i` gets label `i + 1`.
    pub fn all_distinct(degree: usize) -> Result<Self> {
        Self::new((1..=degree as u32).collect(), degree as u32)
    }

    /// Parses comma-separated labels, e.g. `"1,2,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        for (i, part) in text.split(',').enumerate() {
            let value = part
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse { position: i, message: format!("label {:?} is not a positive integer", part.trim()) })?;
            labels.push(value);
        }
        Self::from_labels(labels)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    #[inline]
    pub fn label_count(&self) -> u32 {
        self.label_count
    }

    #[inline]
    pub fn label(&self, point: usize) -> u32 {
        self.labels[point]
    }

    /// Number of distinct labels actually used.
    pub fn used_labels(&self) -> u32 {
        let mut seen = vec![false; self.label_count as usize + 1];
        self.labels.iter().filter(|&&l| !core::mem::replace(&mut seen[l as usize], true)).count() as u32
    }

    pub fn is_surjective(&self) -> bool {
        self.used_labels() == self.label_count
    }

    pub fn preserved_by(&self, sigma: &Permutation) -> bool {
        preserves(sigma, &self.labels)
    }

    /// Renames labels so they appear in first-occurrence order `1, 2, 3, ..`.
    pub fn canonical_form(&self) -> Labeling {
        let mut rename = vec![0u32; self.label_count as usize + 1];
        let mut next = 0;
        let labels = self
            .labels
            .iter()
            .map(|&l| {
                if rename[l as usize] == 0 {
                    next += 1;
                    rename[l as usize] = next;
                }
                rename[l as usize]
            })
            .collect();
        Labeling { labels, label_count: next }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{l}"));
        }
        s
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `labels[σ(i)] == labels[i]` for every point.
#[inline]
pub fn preserves(sigma: &Permutation, labels: &[u32]) -> bool {
    sigma.images().iter().enumerate().all(|(i, &x)| labels[x] == labels[i])
}

fn check_degree(g: &PermGroup, phi: &Labeling) -> Result<()> {
    if g.degree() != phi.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: phi.degree() });
    }
    Ok(())
}

/// The subgroup `(Γ, φ)` of elements preserving `phi`.
pub fn preserving_subgroup(g: &PermGroup, phi: &Labeling) -> Result<PermGroup> {
    check_degree(g, phi)?;
    g.subgroup_from_elements(g.elements().iter().filter(|s| phi.preserved_by(s)))
}

/// Whether every element of `g` preserving `phi` lies in `h`.
pub fn is_distinguishing(g: &PermGroup, phi: &Labeling, h: &PermGroup) -> Result<bool> {
    check_degree(g, phi)?;
    h.require_subgroup_of(g)?;
    Ok(g.elements().iter().all(|s| h.contains(s) || !phi.preserved_by(s)))
}

/// Number of maps from `n` points onto `d` labels, by inclusion–exclusion
/// `Σ_j (−1)^j C(d, j) (d − j)^n`. `None` on overflow.
pub fn count_surjective_labelings(n: usize, d: usize) -> Option<u128> {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    let exp = u32::try_from(n).ok()?;
    for j in 0..=d {
        if j > 0 {
            binom = binom.checked_mul((d - j + 1) as i128)? / j as i128;
        }
        let power = ((d - j) as i128).checked_pow(exp)?;
        let term = binom.checked_mul(power)?;
        total = if j % 2 == 0 { total.checked_add(term)? } else { total.checked_sub(term)? };
    }
    u128::try_from(total).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Onto maps `X → {1..d}`.
    Surjective,
    /// All maps `X → {1..d}`.
    All,
}

/// Lexicographic stream of labelings of `n` points with labels in `1..=d`.
///
/// With `reduce_label_symmetry`, only labelings in first-occurrence form are
/// produced, one per orbit of the label-renaming action.
#[derive(Clone, Debug)]
pub struct LabelingStream {
    n: usize,
    d: u32,
    surjective: bool,
    reduced: bool,
    labels: Vec<u32>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl LabelingStream {
    pub fn new(n: usize, d: usize, mode: EnumerationMode, reduce_label_symmetry: bool) -> Self {
        let surjective = mode == EnumerationMode::Surjective;
        let done = n == 0 || d == 0 || (surjective && d > n) || d > u32::MAX as usize;
        LabelingStream {
            n,
            d: d as u32,
            surjective,
            reduced: reduce_label_symmetry,
            labels: vec![0; n],
            counts: vec![0; d + 1],
            started: false,
            done,
        }
    }

    fn missing(&self) -> usize {
        if self.surjective {
            self.counts[1..].iter().filter(|&&c| c == 0).count()
        } else {
            0
        }
    }

    fn prefix_max(&self, upto: usize) -> u32 {
        self.labels[..upto].iter().copied().max().unwrap_or(0)
    }

    /// Smallest admissible label at `pos` strictly greater than `above`, given
    /// that `labels[..pos]` is fixed and reflected in `counts`.
    fn next_value(&self, pos: usize, above: u32) -> Option<u32> {
        let upper = if self.reduced { (self.prefix_max(pos) + 1).min(self.d) } else { self.d };
        let remaining = self.n - pos - 1;
        let missing = self.missing();
        (above + 1..=upper).find(|&v| {
            let after = if self.surjective && self.counts[v as usize] == 0 { missing - 1 } else { missing };
            after <= remaining
        })
    }

    fn set(&mut self, pos: usize, v: u32) {
        let old = self.labels[pos];
        if old != 0 {
            self.counts[old as usize] -= 1;
        }
        self.labels[pos] = v;
        if v != 0 {
            self.counts[v as usize] += 1;
        }
    }

    /// Fills `labels[from..]` with the lexicographically least admissible tail.
    fn fill_from(&mut self, from: usize) -> bool {
        for pos in from..self.n {
            match self.next_value(pos, 0) {
                Some(v) => self.set(pos, v),
                None => return false,
            }
        }
        true
    }

    /// Advances to the next labeling and borrows it without allocating.
    pub fn next_labels(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill_from(0) {
                self.done = true;
                return None;
            }
            return Some(&self.labels);
        }
        let mut pos = self.n;
        while pos > 0 {
            pos -= 1;
            let mut current = self.labels[pos];
            self.set(pos, 0);
            while let Some(v) = self.next_value(pos, current) {
                self.set(pos, v);
                if self.fill_from(pos + 1) {
                    return Some(&self.labels);
                }
                for tail in pos..self.n {
                    self.set(tail, 0);
                }
                current = v;
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for LabelingStream {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let d = self.d;
        self.next_labels().map(|l| Labeling { labels: l.to_vec(), label_count: d })
    }
}

pub fn enumerate_labelings(n: usize, d: usize, mode: EnumerationMode, reduce_label_symmetry: bool) -> LabelingStream {
    LabelingStream::new(n, d, mode, reduce_label_symmetry)
}
