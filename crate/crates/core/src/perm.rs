//! Permutations of `{0, .., n-1}`.
//!
//! Points are 0-based internally; cycle notation (parsing and display) is
//! 1-based. Composition applies the right operand first:
//! `p.compose(&q)` maps `i` to `p(q(i))`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree);
        }
        Ok(Permutation { images: (0..degree).collect() })
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse { position: 0, message: format!("image {} repeated", x + 1) });
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images = Self::identity(degree)?.images;
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in *cycle {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if core::mem::replace(&mut used[x], true) {
                    return Err(Error::Parse { position: 0, message: format!("point {} repeated", x + 1) });
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose_unchecked(other).compose_unchecked(&self.inverse())
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.compose_unchecked(b).compose_unchecked(&a.inverse()).compose_unchecked(&b.inverse())
    }

    /// Points moved by the permutation, ascending.
    pub fn moved_points(&self) -> Vec<usize> {
        self.images.iter().enumerate().filter(|&(i, &x)| i != x).map(|(i, _)| i).collect()
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{}", x + 1));
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

/// Parses 1-based disjoint cycle notation such as `"(1 2 3)(4 5)"` or `"()"`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidDegree);
    }
    let bytes = text.as_bytes();
    let err = |position: usize, message: &str| Error::Parse { position, message: String::from(message) };
    let skip_ws = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        i
    };

    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut i = skip_ws(0);
    if i >= bytes.len() {
        return Err(err(i, "empty permutation; use \"()\" for the identity"));
    }
    let mut cycles_seen = 0usize;
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(err(i, "expected '('"));
        }
        i = skip_ws(i + 1);
        let mut cycle = Vec::new();
        loop {
            if i >= bytes.len() {
                return Err(err(i, "unclosed '('"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected a point number or ')'"));
            }
            let value: usize = text[start..i].parse().map_err(|_| err(start, "point number too large"))?;
            if value == 0 || value > degree {
                return Err(Error::Parse { position: start, message: format!("point {value} outside 1..={degree}") });
            }
            let p = value - 1;
            if core::mem::replace(&mut used[p], true) {
                return Err(Error::Parse { position: start, message: format!("point {value} repeated") });
            }
            cycle.push(p);
            if i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b')' {
                return Err(err(i, "expected whitespace or ')'"));
            }
            i = skip_ws(i);
        }
        if cycle.is_empty() && (cycles_seen > 0 || skip_ws(i) < bytes.len()) {
            return Err(err(i - 1, "\"()\" must stand alone"));
        }
        for (k, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(k + 1) % cycle.len()];
        }
        cycles_seen += 1;
        i = skip_ws(i);
    }
    Ok(Permutation { images })
}
