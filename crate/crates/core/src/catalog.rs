//! Built-in groups and actions with their subgroup pairs and the values
//! published for them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::audit::{Relation, Target};
use crate::group::{PermGroup, DEFAULT_CLOSURE_CAP};
use crate::perm::{parse_cycles, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the literature; confirmed only once the solver agrees.
    Published,
    /// Obtained here by brute force.
    Derived,
}

/// A value claimed for one quantity of an entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub claim_id: String,
    /// `"D"` for the action, `"D_graph"` for the associated cycle graph.
    pub quantity: String,
    pub relation: Relation,
    pub target: Target,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub label: String,
    /// Isomorphism type, used to pool actions of the same abstract group.
    pub abstract_group: String,
    pub generators: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub abstract_group: String,
    pub family: Family,
    pub degree: usize,
    pub declared_order: usize,
    /// Excluded from default runs.
    pub slow: bool,
    pub generators: Vec<Permutation>,
    pub subgroups: Vec<SubgroupSpec>,
    pub expected: Vec<Expected>,
}

impl CatalogEntry {
    /// Closes the generators and checks the declared order.
    pub fn build(&self) -> Result<PermGroup> {
        let g = PermGroup::close(&self.generators, DEFAULT_CLOSURE_CAP)?;
        if g.order() != self.declared_order {
            return Err(Error::ConstructionFailed("catalog group order"));
        }
        Ok(g)
    }

    pub fn build_subgroup(&self, spec: &SubgroupSpec, parent: &PermGroup) -> Result<PermGroup> {
        let h = PermGroup::close(&spec.generators, parent.order())?;
        h.require_subgroup_of(parent)?;
        Ok(h)
    }

    pub fn subgroup(&self, label: &str) -> Option<&SubgroupSpec> {
        self.subgroups.iter().find(|s| s.label == label)
    }
}

fn cyc(text: &str, n: usize) -> Permutation {
    parse_cycles(text, n).expect("catalog cycle literals are well formed")
}

fn gens(texts: &[&str], n: usize) -> Vec<Permutation> {
    texts.iter().map(|t| cyc(t, n)).collect()
}

fn rotation(n: usize, step: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + step) % n).collect()).expect("rotation is a bijection")
}

fn reflection(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection is a bijection")
}

fn sub(label: &str, abstract_group: &str, generators: Vec<Permutation>) -> SubgroupSpec {
    SubgroupSpec { label: label.to_string(), abstract_group: abstract_group.to_string(), generators }
}

fn expect_d(claim_id: &str, relation: Relation, target: Target, provenance: Provenance, note: &str) -> Expected {
    Expected { claim_id: claim_id.to_string(), quantity: String::from("D"), relation, target, provenance, note: note.to_string() }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Distinct values `⌈m^{1/k}⌉` for `k = 1, 2, ..`.
pub fn root_ceilings(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 1u32;
    loop {
        // least r with r^k >= m
        let mut r = 1u64;
        while r.checked_pow(k).is_some_and(|p| p < m) {
            r += 1;
        }
        if !out.contains(&r) {
            out.push(r);
        }
        if r <= 2 {
            break;
        }
        k += 1;
    }
    out.sort_unstable();
    out
}

fn dihedral_name(d: usize) -> String {
    match d {
        2 => String::from("C2xC2"),
        3 => String::from("S3"),
        _ => format!("D{d}"),
    }
}

fn cyclic_entry(n: usize) -> CatalogEntry {
    let r = rotation(n, 1);
    let subgroups =
        (2..n).filter(|d| n.is_multiple_of(*d)).map(|d| sub(&format!("C{d}"), &format!("C{d}"), vec![rotation(n, n / d)])).collect();
    CatalogEntry {
        name: format!("C{n}-rotation"),
        abstract_group: format!("C{n}"),
        family: Family::Cyclic(n),
        degree: n,
        declared_order: n,
        slow: false,
        generators: vec![r],
        subgroups,
        expected: vec![expect_d(
            "abelian-value-two",
            Relation::Eq,
            Target::Value(2),
            Provenance::Published,
            "nontrivial abelian groups have distinguishing set {2}",
        )],
    }
}

fn dihedral_entry(n: usize) -> CatalogEntry {
    let (r, s) = (rotation(n, 1), reflection(n));
    let mut subgroups = vec![sub(&format!("C{n}"), &format!("C{n}"), vec![r.clone()])];
    for d in (2..n).filter(|d| n.is_multiple_of(*d)) {
        subgroups.push(sub(&format!("D{d}"), &dihedral_name(d), vec![rotation(n, n / d), s.clone()]));
    }
    let set = if [3, 4, 5, 6, 10].contains(&n) { vec![2, 3] } else { vec![2] };
    let graph_value = if n <= 5 { 3 } else { 2 };
    CatalogEntry {
        name: format!("D{n}-natural"),
        abstract_group: dihedral_name(n),
        family: Family::Dihedral(n),
        degree: n,
        declared_order: 2 * n,
        slow: false,
        generators: vec![r, s],
        subgroups,
        expected: vec![
            expect_d(
                "dihedral-value-set",
                Relation::In,
                Target::Set(set),
                Provenance::Published,
                "dihedral distinguishing set is {2}, or {2,3} for n in {3,4,5,6,10}",
            ),
            Expected {
                claim_id: String::from("cycle-graph-value"),
                quantity: String::from("D_graph"),
                relation: Relation::Eq,
                target: Target::Value(graph_value),
                provenance: Provenance::Derived,
                note: format!("distinguishing number of the cycle graph C{n}"),
            },
        ],
    }
}

fn symmetric_entry(n: usize, slow: bool) -> CatalogEntry {
    let cycle: String = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
    let subgroups = match n {
        3 => vec![sub("A3", "C3", gens(&["(1 2 3)"], 3)), sub("C2", "C2", gens(&["(2 3)"], 3))],
        4 => vec![
            sub("A4", "A4", gens(&["(1 2 3)", "(2 3 4)"], 4)),
            sub("V4", "C2xC2", gens(&["(1 2)(3 4)", "(1 3)(2 4)"], 4)),
            sub("D4", "D4", gens(&["(1 2 3 4)", "(1 3)"], 4)),
            sub("S3", "S3", gens(&["(1 2 3)", "(1 2)"], 4)),
        ],
        5 => vec![
            sub("A5", "A5", gens(&["(1 2 3)", "(1 2 3 4 5)"], 5)),
            sub("S4", "S4", gens(&["(1 2 3 4)", "(1 2)"], 5)),
            sub("D5", "D5", gens(&["(1 2 3 4 5)", "(2 5)(3 4)"], 5)),
        ],
        _ => vec![
            sub(&format!("A{n}"), &format!("A{n}"), (3..=n).map(|i| cyc(&format!("(1 2 {i})"), n)).collect()),
            sub(&format!("S{}", n - 1), &format!("S{}", n - 1), vec![cyc(&cycle.replace(&format!(" {n})"), ")"), n), cyc("(1 2)", n)]),
        ],
    };
    let mut set = root_ceilings(n as u64);
    for v in root_ceilings(n as u64 - 1) {
        if !set.contains(&v) {
            set.push(v);
        }
    }
    set.sort_unstable();
    CatalogEntry {
        name: format!("S{n}-natural"),
        abstract_group: format!("S{n}"),
        family: Family::Symmetric(n),
        degree: n,
        declared_order: factorial(n),
        slow,
        generators: vec![cyc(&cycle, n), cyc("(1 2)", n)],
        subgroups,
        expected: vec![
            expect_d(
                "symmetric-natural-value",
                Relation::Eq,
                Target::Value(n as u64),
                Provenance::Published,
                "natural action: the k = 1 member of the symmetric distinguishing set",
            ),
            expect_d(
                "symmetric-value-set",
                Relation::In,
                Target::Set(set),
                Provenance::Published,
                "member of {ceil(n^(1/k))} u {ceil((n-1)^(1/k))}",
            ),
        ],
    }
}

fn alternating_entry(n: usize, slow: bool) -> CatalogEntry {
    let generators: Vec<Permutation> = (3..=n).map(|i| cyc(&format!("(1 2 {i})"), n)).collect();
    let subgroups = match n {
        3 => Vec::new(),
        4 => vec![sub("V4", "C2xC2", gens(&["(1 2)(3 4)", "(1 3)(2 4)"], 4)), sub("C3", "C3", gens(&["(1 2 3)"], 4))],
        5 => vec![
            sub("A4", "A4", gens(&["(1 2 3)", "(2 3 4)"], 5)),
            sub("D5", "D5", gens(&["(1 2 3 4 5)", "(2 5)(3 4)"], 5)),
            sub("C5", "C5", gens(&["(1 2 3 4 5)"], 5)),
        ],
        _ => vec![sub(&format!("A{}", n - 1), &format!("A{}", n - 1), (3..n).map(|i| cyc(&format!("(1 2 {i})"), n)).collect())],
    };
    let set = if n == 5 { vec![2, 3, 4] } else { root_ceilings(n as u64 - 1) };
    CatalogEntry {
        name: format!("A{n}-natural"),
        abstract_group: if n == 3 { String::from("C3") } else { format!("A{n}") },
        family: Family::Alternating(n),
        degree: n,
        declared_order: factorial(n) / 2,
        slow,
        generators,
        subgroups,
        expected: vec![
            expect_d(
                "alternating-natural-value",
                Relation::Eq,
                Target::Value(n as u64 - 1),
                Provenance::Published,
                "natural action: the k = 1 member of the alternating distinguishing set",
            ),
            expect_d(
                "alternating-value-set",
                Relation::In,
                Target::Set(set),
                Provenance::Published,
                "member of {ceil((n-1)^(1/k))}, or {2,3,4} for A5",
            ),
        ],
    }
}

/// Left-regular action of a group given by its elements and a multiplication
/// rule on element indices.
fn regular_generators(order: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize]) -> Vec<Permutation> {
    gens.iter()
        .map(|&g| Permutation::from_images((0..order).map(|x| mul(g, x)).collect()).expect("left multiplication is a bijection"))
        .collect()
}

fn regular_of(group: &PermGroup, gens: &[usize]) -> Vec<Permutation> {
    let els = group.elements();
    regular_generators(els.len(), |a, b| group.index_of(&els[a].compose(&els[b]).unwrap()).unwrap(), gens)
}

/// Quaternion units `1, i, j, k, -1, -i, -j, -k` as indices 0..8.
fn quaternion_mul(a: usize, b: usize) -> usize {
    // products of the basis units 1, i, j, k: (sign flip, unit)
    const TABLE: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let (flip, unit) = TABLE[a % 4][b % 4];
    let negative = (a >= 4) ^ (b >= 4) ^ flip;
    unit + if negative { 4 } else { 0 }
}

fn regular_entries() -> Vec<CatalogEntry> {
    let value_two = |note: &str| vec![expect_d("abelian-value-two", Relation::Eq, Target::Value(2), Provenance::Published, note)];
    let q8 = regular_generators(8, quaternion_mul, &[1, 2]);
    let q8_center = regular_generators(8, quaternion_mul, &[4]);
    let q8_i = regular_generators(8, quaternion_mul, &[1]);

    let d4 = PermGroup::close(&[rotation(4, 1), reflection(4)], 8).expect("D4 closes");
    let rot = d4.index_of(&rotation(4, 1)).unwrap();
    let refl = d4.index_of(&reflection(4)).unwrap();
    let half = d4.index_of(&rotation(4, 2)).unwrap();

    vec![
        CatalogEntry {
            name: String::from("C2xC2-regular"),
            abstract_group: String::from("C2xC2"),
            family: Family::Other,
            degree: 4,
            declared_order: 4,
            slow: false,
            generators: gens(&["(1 2)(3 4)", "(1 3)(2 4)"], 4),
            subgroups: vec![sub("C2a", "C2", gens(&["(1 2)(3 4)"], 4)), sub("C2b", "C2", gens(&["(1 3)(2 4)"], 4))],
            expected: value_two("nontrivial abelian groups have distinguishing set {2}"),
        },
        CatalogEntry {
            name: String::from("C6-regular"),
            abstract_group: String::from("C6"),
            family: Family::Other,
            degree: 6,
            declared_order: 6,
            slow: false,
            generators: gens(&["(1 2)(3 4)(5 6)", "(1 3 5)(2 4 6)"], 6),
            subgroups: vec![sub("C2", "C2", gens(&["(1 2)(3 4)(5 6)"], 6)), sub("C3", "C3", gens(&["(1 3 5)(2 4 6)"], 6))],
            expected: value_two("nontrivial abelian groups have distinguishing set {2}"),
        },
        CatalogEntry {
            name: String::from("Q8-regular"),
            abstract_group: String::from("Q8"),
            family: Family::Other,
            degree: 8,
            declared_order: 8,
            slow: false,
            generators: q8,
            subgroups: vec![sub("Z", "C2", q8_center), sub("C4", "C4", q8_i)],
            expected: Vec::new(),
        },
        CatalogEntry {
            name: String::from("D4-regular"),
            abstract_group: String::from("D4"),
            family: Family::Other,
            degree: 8,
            declared_order: 8,
            slow: false,
            generators: regular_of(&d4, &[rot, refl]),
            subgroups: vec![sub("C4", "C4", regular_of(&d4, &[rot])), sub("Z", "C2", regular_of(&d4, &[half]))],
            expected: vec![expect_d(
                "dihedral-value-set",
                Relation::In,
                Target::Set(vec![2, 3]),
                Provenance::Published,
                "dihedral distinguishing set is {2,3} for n = 4",
            )],
        },
    ]
}

fn other_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: String::from("F21-on-7"),
            abstract_group: String::from("C7:C3"),
            family: Family::Other,
            degree: 7,
            declared_order: 21,
            slow: false,
            // x -> x + 1 and x -> 2x on Z/7 with residue r at point r + 1
            generators: gens(&["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 7),
            subgroups: vec![sub("C7", "C7", gens(&["(1 2 3 4 5 6 7)"], 7)), sub("C3", "C3", gens(&["(2 3 5)(4 7 6)"], 7))],
            expected: vec![expect_d(
                "odd-order-value-two",
                Relation::Eq,
                Target::Value(2),
                Provenance::Published,
                "groups of odd order have distinguishing number 2",
            )],
        },
        CatalogEntry {
            name: String::from("C2-on-4"),
            abstract_group: String::from("C2"),
            family: Family::Other,
            degree: 4,
            declared_order: 2,
            slow: false,
            generators: gens(&["(1 2)"], 4),
            subgroups: vec![sub("G", "C2", gens(&["(1 2)"], 4))],
            expected: Vec::new(),
        },
        CatalogEntry {
            name: String::from("D6-on-5"),
            abstract_group: String::from("D6"),
            family: Family::Other,
            degree: 5,
            declared_order: 12,
            slow: false,
            generators: gens(&["(1 2 3)", "(1 2)", "(4 5)"], 5),
            subgroups: vec![
                sub("S3", "S3", gens(&["(1 2 3)", "(1 2)"], 5)),
                sub("C2", "C2", gens(&["(4 5)"], 5)),
                sub("C6", "C6", gens(&["(1 2 3)(4 5)"], 5)),
            ],
            expected: vec![expect_d(
                "dihedral-value-set",
                Relation::In,
                Target::Set(vec![2, 3]),
                Provenance::Published,
                "D6 is isomorphic to S3 x C2; dihedral set {2,3} for n = 6",
            )],
        },
    ]
}

/// The catalog, ordered by name. `include_slow` adds S6 and A6.
pub fn build_catalog(include_slow: bool) -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    entries.extend((3..=12).map(cyclic_entry));
    entries.extend((3..=12).map(dihedral_entry));
    entries.extend((3..=5).map(|n| symmetric_entry(n, false)));
    entries.extend((3..=5).map(|n| alternating_entry(n, false)));
    if include_slow {
        entries.push(symmetric_entry(6, true));
        entries.push(alternating_entry(6, true));
    }
    entries.extend(regular_entries());
    entries.extend(other_entries());
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    entries
}

pub fn find_entry<'a>(entries: &'a [CatalogEntry], name: &str) -> Option<&'a CatalogEntry> {
    entries.iter().find(|e| e.name == name)
}
