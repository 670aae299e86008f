//! Audit of published claims against exhaustive computation on the catalog.
//!
//! Every record carries the computed quantities and the claimed relations
//! side by side. A record is confirmed when every claimed relation holds on
//! the computed values, refuted when one fails, and not applicable when a
//! quantity the claim needs cannot be computed (undefined object, cap hit).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    common_moved_point, gluck_expectation, maximal_subgroup_bound, motion_bound_from, motion_bound_over_labelings, orbit_rep_bound,
    tymoczko_bound,
};
use crate::catalog::{CatalogEntry, Family, Provenance};
use crate::graph::{graph_distinguishing_number, Graph};
use crate::group::{PermGroup, DEFAULT_SUBGROUP_CAP};
use crate::labeling::{count_surjective_labelings, enumerate_labelings, preserving_subgroup, EnumerationMode, Labeling};
use crate::perm::Permutation;
use crate::solver::{
    distinguishing_number, lower_algorithm_orbit_count, paper_lower_algorithm, paper_upper_algorithm, relative_distinguishing_number,
    SearchOptions, SolveResult,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Le,
    Ge,
    In,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Target {
    Value(u64),
    Set(Vec<u64>),
    /// Another computed quantity of the same record.
    Quantity(String),
}

/// `quantity relation target`, e.g. `D le tymoczko`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub quantity: String,
    pub relation: Relation,
    pub target: Target,
}

impl Expectation {
    pub fn new(quantity: &str, relation: Relation, target: Target) -> Self {
        Expectation { quantity: quantity.to_string(), relation, target }
    }

    /// `None` when a quantity involved was not computed.
    pub fn holds(&self, computed: &BTreeMap<String, u64>) -> Option<bool> {
        let lhs = *computed.get(&self.quantity)?;
        let rhs = match &self.target {
            Target::Set(set) => return Some(set.contains(&lhs)),
            Target::Value(v) => *v,
            Target::Quantity(q) => *computed.get(q)?,
        };
        Some(match self.relation {
            Relation::Eq | Relation::In => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub claim_id: String,
    pub entry: String,
    pub instance: String,
    pub computed: BTreeMap<String, u64>,
    pub claimed: Vec<Expectation>,
    pub verdict: Verdict,
    /// Labeling backing the computed values, labels in point order.
    pub witness: Option<Vec<u32>>,
    pub elapsed_ms: Option<u64>,
    pub notes: String,
}

/// Claim families; each produces at least one record on the default catalog.
pub const CLAIM_IDS: &[&str] = &[
    "abelian-quotient-value-two",
    "abelian-value-two",
    "alternating-natural-value",
    "alternating-value-set",
    "catalog-max-subgroup-problem",
    "cycle-graph-value",
    "dihedral-value-set",
    "factorial-order-bound",
    "least-prime-index-value-two",
    "lower-algorithm-bound",
    "maximal-subgroup-bound",
    "maximal-subgroup-bound-sharpness",
    "metacyclic-bound",
    "motion-bound-best-labeling",
    "motion-bound-trivial-subgroup",
    "motion-common-point",
    "motion-partition-bound",
    "normal-closure-bound",
    "normal-direct-product-value",
    "odd-order-value-two",
    "orbit-stabilizer-bound",
    "preserving-subgroup-value",
    "product-subgroup-bound",
    "product-trivial-meet-bound",
    "quotient-action-equality",
    "relative-abelian-and-metacyclic",
    "relative-basic-identities",
    "relative-chain",
    "relative-overgroup-monotone",
    "relative-subgroup-monotone",
    "restriction-monotone",
    "surjection-count",
    "symmetric-natural-value",
    "symmetric-value-set",
    "upper-algorithm-exact",
];

/// Millisecond source for per-record timings.
pub trait Clock {
    fn now_ms(&self) -> u64;
}

#[derive(Clone, Copy)]
pub struct AuditConfig<'a> {
    pub opts: SearchOptions,
    pub subgroup_cap: usize,
    /// Largest order whose full subgroup lattice is used for chains and
    /// product pairs.
    pub lattice_cap: usize,
    /// Entries of at most this degree also get an oracle-mode solve.
    pub oracle_degree: usize,
    pub clock: Option<&'a (dyn Clock + Sync)>,
}

impl Default for AuditConfig<'_> {
    fn default() -> Self {
        AuditConfig { opts: SearchOptions::default(), subgroup_cap: DEFAULT_SUBGROUP_CAP, lattice_cap: 60, oracle_degree: 7, clock: None }
    }
}

/// Entry name used for records that belong to no single catalog entry.
pub const GLOBAL_ENTRY: &str = "*";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub confirmed: usize,
    pub refuted: usize,
    pub not_applicable: usize,
}

pub fn summarize(records: &[AuditRecord]) -> AuditSummary {
    let mut s = AuditSummary::default();
    for r in records {
        match r.verdict {
            Verdict::Confirmed => s.confirmed += 1,
            Verdict::Refuted => s.refuted += 1,
            Verdict::NotApplicable => s.not_applicable += 1,
        }
    }
    s
}

/// Canonical report order: entry, claim id, instance.
pub fn sort_records(records: &mut [AuditRecord]) {
    records.sort_by(|a, b| (&a.entry, &a.claim_id, &a.instance).cmp(&(&b.entry, &b.claim_id, &b.instance)));
}

/// Sequential full audit: every entry, then the cross-entry records.
pub fn run_audit(entries: &[CatalogEntry], config: &AuditConfig) -> Vec<AuditRecord> {
    let mut records: Vec<AuditRecord> = entries.iter().flat_map(|e| audit_entry(e, config)).collect();
    records.extend(audit_global(entries, config));
    sort_records(&mut records);
    records
}

struct Draft {
    computed: BTreeMap<String, u64>,
    claimed: Vec<Expectation>,
    witness: Option<Vec<u32>>,
    notes: Vec<String>,
}

impl Draft {
    fn new() -> Self {
        Draft { computed: BTreeMap::new(), claimed: Vec::new(), witness: None, notes: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl TryInto<u64>) -> &mut Self {
        let v = value.try_into().unwrap_or(u64::MAX);
        self.computed.insert(key.to_string(), v);
        self
    }

    fn claim(&mut self, quantity: &str, relation: Relation, target: Target) -> &mut Self {
        self.claimed.push(Expectation::new(quantity, relation, target));
        self
    }

    fn claim_q(&mut self, quantity: &str, relation: Relation, other: &str) -> &mut Self {
        self.claim(quantity, relation, Target::Quantity(other.to_string()))
    }

    fn witness(&mut self, l: &Labeling) -> &mut Self {
        self.witness = Some(l.labels().to_vec());
        self
    }

    fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }
}

fn verdict_of(computed: &BTreeMap<String, u64>, claimed: &[Expectation]) -> Verdict {
    let mut missing = claimed.is_empty();
    for e in claimed {
        match e.holds(computed) {
            Some(false) => return Verdict::Refuted,
            None => missing = true,
            Some(true) => {}
        }
    }
    if missing {
        Verdict::NotApplicable
    } else {
        Verdict::Confirmed
    }
}

type Key = (Vec<Permutation>, Vec<Permutation>);

/// Memoized solves keyed by the element sets of `(G, H)`.
struct Memo {
    opts: SearchOptions,
    relative: BTreeMap<Key, SolveResult>,
    absolute: BTreeMap<Vec<Permutation>, SolveResult>,
}

impl Memo {
    fn new(opts: SearchOptions) -> Self {
        Memo { opts, relative: BTreeMap::new(), absolute: BTreeMap::new() }
    }

    fn d(&mut self, g: &PermGroup) -> SolveResult {
        let opts = self.opts;
        self.absolute.entry(g.sorted_elements()).or_insert_with(|| distinguishing_number(g, opts)).clone()
    }

    fn rel(&mut self, g: &PermGroup, h: &PermGroup) -> Result<SolveResult> {
        let key = (g.sorted_elements(), h.sorted_elements());
        if let Some(r) = self.relative.get(&key) {
            return Ok(r.clone());
        }
        let r = relative_distinguishing_number(g, h, self.opts)?;
        self.relative.insert(key, r.clone());
        Ok(r)
    }
}

struct Auditor<'a> {
    entry: &'a str,
    config: &'a AuditConfig<'a>,
    memo: Memo,
    records: Vec<AuditRecord>,
}

impl<'a> Auditor<'a> {
    fn new(entry: &'a str, config: &'a AuditConfig<'a>) -> Self {
        Auditor { entry, config, memo: Memo::new(config.opts), records: Vec::new() }
    }

    fn record<F>(&mut self, claim_id: &str, instance: impl Into<String>, f: F)
    where
        F: FnOnce(&mut Memo) -> Result<Draft>,
    {
        let clock = self.config.clock;
        let start = clock.map(|c| c.now_ms());
        let outcome = f(&mut self.memo);
        let elapsed_ms = match (clock, start) {
            (Some(c), Some(s)) => Some(c.now_ms().saturating_sub(s)),
            _ => None,
        };
        let (computed, claimed, witness, notes, verdict) = match outcome {
            Ok(d) => {
                let verdict = verdict_of(&d.computed, &d.claimed);
                (d.computed, d.claimed, d.witness, d.notes.join("; "), verdict)
            }
            Err(e) => {
                let verdict = if matches!(e, Error::ConstructionFailed(_)) { Verdict::Refuted } else { Verdict::NotApplicable };
                (BTreeMap::new(), Vec::new(), None, e.to_string(), verdict)
            }
        };
        self.records.push(AuditRecord {
            claim_id: claim_id.to_string(),
            entry: self.entry.to_string(),
            instance: instance.into(),
            computed,
            claimed,
            verdict,
            witness,
            elapsed_ms,
            notes,
        });
    }
}

/// A subgroup under audit together with its display label.
#[derive(Clone)]
struct Named {
    label: String,
    group: PermGroup,
}

fn element_order(p: &Permutation) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = p.compose_unchecked(&q);
        k += 1;
    }
    k
}

fn is_cyclic(g: &PermGroup) -> bool {
    g.elements().iter().any(|e| element_order(e) == g.order())
}

/// Some normal cyclic `N` with `G/N` cyclic, searched over `lattice`.
fn is_metacyclic(g: &PermGroup, lattice: &[PermGroup]) -> bool {
    lattice.iter().any(|n| {
        if !is_cyclic(n) || !n.is_normal_in(g).unwrap_or(false) {
            return false;
        }
        let index = g.order() / n.order();
        g.elements().iter().any(|x| {
            let mut power = x.clone();
            let mut k = 1;
            while !n.contains(&power) {
                power = x.compose_unchecked(&power);
                k += 1;
            }
            k == index
        })
    })
}

fn least_prime_divisor(m: usize) -> Option<usize> {
    (2..=m).find(|p| m.is_multiple_of(*p))
}

fn describe(label: &str, g: &PermGroup) -> String {
    format!("{label}[{}]", g.order())
}

fn kind_note(entry: &CatalogEntry) -> &'static str {
    match entry.family {
        Family::Symmetric(_) | Family::Alternating(_) => "only the natural action of this abstract group is audited",
        _ => "",
    }
}

/// Records for one catalog entry.
pub fn audit_entry(entry: &CatalogEntry, config: &AuditConfig) -> Vec<AuditRecord> {
    let mut a = Auditor::new(&entry.name, config);
    let g = match entry.build() {
        Ok(g) => g,
        Err(e) => {
            a.record("factorial-order-bound", "construction", |_| Err(e));
            return a.records;
        }
    };
    let lattice = if g.order() <= config.lattice_cap { g.all_subgroups(config.subgroup_cap).ok() } else { None };

    entry_value_claims(&mut a, entry, &g);
    construction_claims(&mut a, &g, config);
    preserving_claims(&mut a, &g);
    if let Some(lattice) = &lattice {
        let metacyclic = is_metacyclic(&g, lattice);
        a.record("metacyclic-bound", "catalog action", |m| {
            let mut d = Draft::new();
            d.put("metacyclic", u64::from(metacyclic)).put("D", m.d(&g).value);
            if metacyclic {
                d.claim("D", Relation::Le, Target::Value(3));
            } else {
                d.note("group is not metacyclic; claim does not apply");
            }
            d.note("maximum over all faithful actions is not enumerable; catalog action only");
            Ok(d)
        });
    }

    let pairs = subgroup_pairs(entry, &g);
    for h in &pairs {
        pair_claims(&mut a, &g, h, lattice.as_deref());
    }
    monotonicity_claims(&mut a, &g, &pairs, lattice.as_deref());
    if let Some(lattice) = &lattice {
        product_claims(&mut a, &g, &pairs, lattice);
    }
    a.records
}

fn subgroup_pairs(entry: &CatalogEntry, g: &PermGroup) -> Vec<Named> {
    let mut out: Vec<Named> = Vec::new();
    for spec in &entry.subgroups {
        match entry.build_subgroup(spec, g) {
            Ok(h) => out.push(Named { label: spec.label.clone(), group: h }),
            Err(_) => continue,
        }
    }
    if !g.is_abelian() {
        let derived = g.derived_subgroup();
        let label = match out.iter().find(|n| n.group == derived) {
            Some(n) => format!("G'={}", n.label),
            None => String::from("G'"),
        };
        out.retain(|n| n.group != derived);
        out.push(Named { label, group: derived });
    }
    out
}

fn entry_value_claims(a: &mut Auditor, entry: &CatalogEntry, g: &PermGroup) {
    let oracle_degree = a.config.oracle_degree;
    a.record("factorial-order-bound", "catalog action", |m| {
        let solved = m.d(g);
        let mut d = Draft::new();
        d.put("D", solved.value).put("order", g.order()).put("tymoczko", tymoczko_bound(g.order()));
        d.claim_q("D", Relation::Le, "tymoczko").witness(&solved.witness);
        Ok(d)
    });

    for exp in &entry.expected {
        let provenance = match exp.provenance {
            Provenance::Published => "published value",
            Provenance::Derived => "derived value",
        };
        a.record(&exp.claim_id, "catalog action", |m| {
            let mut d = Draft::new();
            match exp.quantity.as_str() {
                "D" => {
                    let solved = m.d(g);
                    d.put("D", solved.value).witness(&solved.witness);
                    if g.degree() <= oracle_degree {
                        d.put("D_oracle", distinguishing_number(g, SearchOptions::oracle()).value);
                    }
                }
                "D_graph" => {
                    let Family::Dihedral(n) = entry.family else {
                        return Err(Error::InvalidGraph(String::from("no graph attached to this entry")));
                    };
                    let solved = graph_distinguishing_number(&Graph::cycle(n)?, SearchOptions::default())?;
                    d.put("D_graph", solved.value).witness(&solved.witness);
                }
                other => return Err(Error::InvalidLabeling(format!("unknown quantity {other}"))),
            }
            d.claimed.push(Expectation { quantity: exp.quantity.clone(), relation: exp.relation, target: exp.target.clone() });
            d.note(format!("{provenance}: {}", exp.note));
            let extra = kind_note(entry);
            if !extra.is_empty() {
                d.note(extra);
            }
            Ok(d)
        });
    }

    if !entry.expected.iter().any(|e| e.claim_id == "odd-order-value-two") {
        if let Some(expected) = gluck_expectation(g) {
            a.record("odd-order-value-two", "catalog action", |m| {
                let solved = m.d(g);
                let mut d = Draft::new();
                d.put("D", solved.value).put("order", g.order());
                d.claim("D", Relation::Eq, Target::Value(u64::from(expected))).witness(&solved.witness);
                Ok(d)
            });
        }
    }
}

fn construction_claims(a: &mut Auditor, g: &PermGroup, config: &AuditConfig) {
    if g.is_trivial() {
        return;
    }
    let (opts, cap) = (config.opts, config.subgroup_cap);
    a.record("maximal-subgroup-bound", "maximal nonidentity subgroups", |m| {
        let b = maximal_subgroup_bound(g, None, cap, opts)?;
        let mut d = Draft::new();
        d.put("c", b.c)
            .put("bound", b.bound)
            .put("labels", b.labeling.label_count())
            .put("D", m.d(g).value)
            .put("degenerate", u64::from(b.degenerate))
            .put("restricted_value", b.restricted_value)
            .put("stabilizer_value", b.stabilizer_value);
        d.claim_q("D", Relation::Le, "bound").claim_q("restricted_value", Relation::Le, "stabilizer_value");
        d.witness(&b.labeling);
        if b.degenerate {
            d.note("no maximal nonidentity proper subgroup; c taken as 1");
        }
        Ok(d)
    });
    if g.degree() == 3 && g.order() == 6 {
        a.record("maximal-subgroup-bound-sharpness", "cycle graph C3 with full automorphism group", |m| {
            let b = maximal_subgroup_bound(g, None, cap, opts)?;
            let mut d = Draft::new();
            d.put("c", b.c).put("bound", b.bound).put("D", m.d(g).value);
            d.claim("c", Relation::Eq, Target::Value(2)).claim("D", Relation::Eq, Target::Value(3)).claim_q("bound", Relation::Eq, "D");
            d.witness(&b.labeling);
            Ok(d)
        });
    }
    a.record("orbit-stabilizer-bound", "pointwise stabilizer of orbit representatives", |m| {
        let b = orbit_rep_bound(g, opts)?;
        let mut d = Draft::new();
        d.put("D_L", b.c)
            .put("bound", b.bound)
            .put("labels", b.labeling.label_count())
            .put("D", m.d(g).value)
            .put("stabilizer_order", b.stabilizer_order)
            .put("restricted_value", b.restricted_value)
            .put("orbit_reps", b.orbit_reps.len());
        d.claim_q("D", Relation::Le, "bound").claim_q("restricted_value", Relation::Le, "D_L");
        d.witness(&b.labeling);
        Ok(d)
    });
    a.record("motion-bound-trivial-subgroup", "H = 1 with constant labeling", |m| {
        let base = Labeling::constant(g.degree())?;
        let b = motion_bound_from(g, 1, base)?;
        let mut d = Draft::new();
        d.put("k", b.preservers.len()).put("order_minus_one", g.order() - 1).put("t", b.t()).put("bound", b.bound).put("D", m.d(g).value);
        d.claim_q("k", Relation::Eq, "order_minus_one").claim_q("D", Relation::Le, "bound");
        d.witness(&b.labeling);
        Ok(d)
    });
}

fn preserving_claims(a: &mut Auditor, g: &PermGroup) {
    let n = g.degree();
    let mut candidates: Vec<(&str, Labeling)> = Vec::new();
    let solved = a.memo.d(g);
    candidates.push(("minimal distinguishing labeling", solved.witness));
    if let Ok(l) = Labeling::all_distinct(n) {
        candidates.push(("all-distinct labeling", l));
    }
    if n >= 2 {
        let mut labels = vec![1u32; n];
        labels[n - 1] = 2;
        if let Ok(l) = Labeling::new(labels, 2) {
            candidates.push(("one point relabelled", l));
        }
    }
    for (instance, phi) in candidates {
        a.record("preserving-subgroup-value", instance, |m| {
            let p = preserving_subgroup(g, &phi)?;
            let closed = p.elements().iter().all(|x| p.elements().iter().all(|y| p.contains(&x.compose_unchecked(y))));
            let rel = m.rel(g, &p)?;
            let mut d = Draft::new();
            d.put("d", phi.label_count()).put("preserving_order", p.order()).put("is_subgroup", u64::from(closed)).put("D_rel", rel.value);
            d.claim("is_subgroup", Relation::Eq, Target::Value(1)).claim_q("D_rel", Relation::Eq, "d");
            d.witness(&rel.witness);
            d.note(format!("phi = {}", phi.to_text()));
            Ok(d)
        });
    }
}

fn pair_claims(a: &mut Auditor, g: &PermGroup, h: &Named, lattice: Option<&[PermGroup]>) {
    let opts = a.config.opts;
    let hg = &h.group;
    let inst = |s: &str| format!("H={} {s}", describe(&h.label, hg)).trim_end().to_string();

    a.record("restriction-monotone", inst(""), |m| {
        let mut d = Draft::new();
        d.put("D_H", m.d(hg).value).put("D", m.d(g).value);
        d.claim_q("D_H", Relation::Le, "D");
        Ok(d)
    });
    a.record("relative-basic-identities", inst(""), |m| {
        let r = m.rel(g, hg)?;
        let mut d = Draft::new();
        d.put("D_rel", r.value).put("D", m.d(g).value);
        d.claim_q("D_rel", Relation::Le, "D").claim("D_rel", Relation::Ge, Target::Value(1));
        d.witness(&r.witness);
        Ok(d)
    });
    a.record("upper-algorithm-exact", inst(""), |m| {
        let up = paper_upper_algorithm(g, hg, opts)?;
        let ex = m.rel(g, hg)?;
        let mut d = Draft::new();
        d.put("upper", up.value).put("exact", ex.value).put("examined", up.examined);
        d.claim_q("upper", Relation::Eq, "exact").witness(&up.witness);
        Ok(d)
    });
    a.record("lower-algorithm-bound", inst(""), |m| {
        let low = paper_lower_algorithm(g, hg, opts)?;
        let ex = m.rel(g, hg)?;
        let mut d = Draft::new();
        d.put("lower", low.value).put("exact", ex.value).put("h_orbits", lower_algorithm_orbit_count(hg)).put("examined", low.examined);
        d.claim_q("lower", Relation::Le, "exact").witness(&ex.witness);
        d.note(format!("loop output labeling {}", low.witness.to_text()));
        Ok(d)
    });

    if !hg.is_trivial() {
        a.record("motion-partition-bound", inst(""), |m| {
            let base = m.d(hg);
            let b = motion_bound_from(g, base.value, base.witness)?;
            let mut d = Draft::new();
            d.put("D_H", b.subgroup_value)
                .put("k", b.preservers.len())
                .put("t", b.t())
                .put("bound", b.bound)
                .put("labels", b.labeling.label_count())
                .put("D", m.d(g).value);
            d.claim_q("D", Relation::Le, "bound").witness(&b.labeling);
            Ok(d)
        });
        let common = {
            let base = a.memo.d(hg);
            crate::bounds::preservers_of(g, &base.witness).ok().filter(|p| !p.is_empty()).and_then(|p| common_moved_point(&p))
        };
        if let Some(x) = common {
            a.record("motion-common-point", inst(""), |m| {
                let base = m.d(hg);
                let b = motion_bound_from(g, base.value, base.witness)?;
                let mut d = Draft::new();
                d.put("D_H", b.subgroup_value).put("D_H_plus_1", b.subgroup_value + 1).put("t", b.t()).put("D", m.d(g).value);
                d.claim_q("D", Relation::Le, "D_H_plus_1").witness(&b.labeling);
                d.note(format!("every preserver moves point {}", x + 1));
                Ok(d)
            });
        }
        a.record("motion-bound-best-labeling", inst(""), |m| {
            let (b, considered) = motion_bound_over_labelings(g, hg, opts)?;
            let mut d = Draft::new();
            d.put("D_H", b.subgroup_value).put("t", b.t()).put("bound", b.bound).put("labelings", considered).put("D", m.d(g).value);
            d.claim_q("D", Relation::Le, "bound").witness(&b.labeling);
            d.note("labelings taken up to renaming of labels");
            Ok(d)
        });
    }

    let normal = hg.is_normal_in(g).unwrap_or(false);
    let proper = hg.order() < g.order();
    if normal {
        a.record("quotient-action-equality", inst(""), |m| {
            let r = m.rel(g, hg)?;
            let mut d = Draft::new();
            let well_defined = hg.is_trivial();
            d.put("D_rel", r.value).put("quotient_order", g.order() / hg.order()).put("action_well_defined", u64::from(well_defined));
            if well_defined {
                d.put("D_quotient", m.d(g).value);
            } else {
                d.note("coset action x -> s(x) depends on the representative when H moves points; quotient value undefined");
            }
            d.claim_q("D_rel", Relation::Eq, "D_quotient").witness(&r.witness);
            Ok(d)
        });
    }
    if proper {
        let index = g.order() / hg.order();
        if Some(index) == least_prime_divisor(g.order()) {
            a.record("least-prime-index-value-two", inst(""), |m| {
                let r = m.rel(g, hg)?;
                let mut d = Draft::new();
                d.put("D_rel", r.value).put("index", index);
                d.claim("D_rel", Relation::Eq, Target::Value(2)).witness(&r.witness);
                Ok(d)
            });
        }
        let derived = g.derived_subgroup();
        if normal && derived.is_subgroup_of(hg).unwrap_or(false) {
            a.record("abelian-quotient-value-two", inst(""), |m| {
                let r = m.rel(g, hg)?;
                let mut d = Draft::new();
                d.put("D_rel", r.value).put("quotient_order", index);
                d.claim("D_rel", Relation::Eq, Target::Value(2)).witness(&r.witness);
                Ok(d)
            });
        }
    }
    a.record("normal-closure-bound", inst(""), |m| {
        let n = hg.normal_closure(g)?;
        let rh = m.rel(g, hg)?;
        let rn = m.rel(g, &n)?;
        let mut d = Draft::new();
        d.put("D_rel", rh.value).put("D_rel_closure", rn.value).put("closure_order", n.order());
        d.claim_q("D_rel_closure", Relation::Le, "D_rel").witness(&rn.witness);
        d.note("quotient value read as the relative value at the normal closure");
        Ok(d)
    });
    if let Some(lattice) = lattice {
        let abelian_case = g.is_abelian() && !hg.is_trivial() && proper;
        let metacyclic = is_metacyclic(g, lattice);
        if abelian_case || metacyclic {
            a.record("relative-abelian-and-metacyclic", inst(""), |m| {
                let r = m.rel(g, hg)?;
                let mut d = Draft::new();
                d.put("D_rel", r.value).put("abelian", u64::from(g.is_abelian())).put("metacyclic", u64::from(metacyclic));
                if abelian_case {
                    d.claim("D_rel", Relation::Eq, Target::Value(2));
                }
                if metacyclic {
                    d.claim("D_rel", Relation::Le, Target::Value(3));
                }
                d.witness(&r.witness);
                Ok(d)
            });
        }
    }
}

/// Least-order proper overgroups, giving a maximal chain from 1 to G.
fn maximal_chain(g: &PermGroup, lattice: &[PermGroup]) -> Vec<PermGroup> {
    let mut chain = vec![lattice[0].clone()];
    loop {
        let current = chain.last().unwrap();
        if current.order() == g.order() {
            return chain;
        }
        let next = lattice
            .iter()
            .find(|k| k.order() > current.order() && current.is_subgroup_of(k).unwrap_or(false))
            .expect("G itself is an overgroup")
            .clone();
        chain.push(next);
    }
}

fn chain_record(a: &mut Auditor, g: &PermGroup, instance: String, chain: &[PermGroup]) {
    a.record("relative-chain", instance, |m| {
        let mut d = Draft::new();
        d.put("D", m.d(g).value);
        for (i, h) in chain.iter().enumerate() {
            d.put(&format!("v{i}"), m.rel(g, h)?.value);
        }
        for i in 1..chain.len() {
            d.claim_q(&format!("v{i}"), Relation::Le, &format!("v{}", i - 1));
        }
        d.claim_q("v0", Relation::Le, "D").claim(&format!("v{}", chain.len() - 1), Relation::Ge, Target::Value(1));
        Ok(d)
    });
}

fn monotonicity_claims(a: &mut Auditor, g: &PermGroup, pairs: &[Named], lattice: Option<&[PermGroup]>) {
    let Ok(trivial) = PermGroup::trivial(g.degree()) else { return };
    let whole = Named { label: String::from("G"), group: g.clone() };
    let one = Named { label: String::from("1"), group: trivial.clone() };

    for h in pairs {
        let chain = [trivial.clone(), h.group.clone(), g.clone()];
        chain_record(a, g, format!("1 < {} < G", describe(&h.label, &h.group)), &chain);
    }

    // (H1, H2) with H1 <= H2 among the trivial group, listed subgroups and G.
    let mut nodes: Vec<&Named> = vec![&one];
    nodes.extend(pairs.iter());
    nodes.push(&whole);
    for (i, h1) in nodes.iter().enumerate() {
        for h2 in nodes.iter().skip(i + 1) {
            if h1.group == h2.group || !h1.group.is_subgroup_of(&h2.group).unwrap_or(false) {
                continue;
            }
            let instance = format!("{} <= {}", describe(&h1.label, &h1.group), describe(&h2.label, &h2.group));
            a.record("relative-subgroup-monotone", instance, |m| {
                let mut d = Draft::new();
                d.put("D_rel_small", m.rel(g, &h1.group)?.value).put("D_rel_large", m.rel(g, &h2.group)?.value);
                d.claim_q("D_rel_large", Relation::Le, "D_rel_small");
                Ok(d)
            });
        }
    }

    // Overgroup triples H <= G1 <= G with G1 a listed subgroup.
    for g1 in pairs {
        let instance = format!("H=1 G1={} G2=G", describe(&g1.label, &g1.group));
        overgroup_record(a, instance, &trivial, &g1.group, g);
    }

    let Some(lattice) = lattice else { return };
    let chain = maximal_chain(g, lattice);
    let orders: Vec<String> = chain.iter().map(|h| h.order().to_string()).collect();
    chain_record(a, g, format!("maximal chain of orders {}", orders.join(" < ")), &chain);
    for i in 0..chain.len() {
        for j in i + 1..chain.len().saturating_sub(1) {
            let instance = format!("maximal chain H=#{i}[{}] G1=#{j}[{}] G2=G", chain[i].order(), chain[j].order());
            overgroup_record(a, instance, &chain[i], &chain[j], g);
        }
    }
}

fn overgroup_record(a: &mut Auditor, instance: String, h: &PermGroup, g1: &PermGroup, g2: &PermGroup) {
    a.record("relative-overgroup-monotone", instance, |m| {
        let mut d = Draft::new();
        d.put("D_rel_inner", m.rel(g1, h)?.value).put("D_rel_outer", m.rel(g2, h)?.value);
        d.claim_q("D_rel_inner", Relation::Le, "D_rel_outer");
        Ok(d)
    });
}

const PRODUCT_PAIRS_PER_ENTRY: usize = 4;

fn product_claims(a: &mut Auditor, g: &PermGroup, pairs: &[Named], lattice: &[PermGroup]) {
    let cap = a.config.subgroup_cap.max(g.order());
    let mut pool: Vec<Named> = pairs.iter().filter(|n| !n.group.is_trivial() && n.group.order() < g.order()).cloned().collect();
    for (i, k) in lattice.iter().enumerate() {
        if !k.is_trivial() && k.order() < g.order() && !pool.iter().any(|n| &n.group == k) {
            pool.push(Named { label: format!("K{i}"), group: k.clone() });
        }
    }

    let mut general = 0;
    let mut direct = 0;
    let mut trivial_meet = 0;
    for (i, h) in pool.iter().enumerate() {
        for k in pool.iter().skip(i + 1) {
            let (hg, kg) = (&h.group, &k.group);
            if hg.is_subgroup_of(kg).unwrap_or(true) || kg.is_subgroup_of(hg).unwrap_or(true) {
                continue;
            }
            if !hg.permutes_with(kg, cap).unwrap_or(false) {
                continue;
            }
            let Ok(meet) = hg.intersection(kg) else { continue };
            let Ok(hk) = hg.join(kg, cap) else { continue };
            let both_normal = hg.is_normal_in(&hk).unwrap_or(false) && kg.is_normal_in(&hk).unwrap_or(false);
            let instance = format!("H={} K={} HK[{}]", describe(&h.label, hg), describe(&k.label, kg), hk.order());

            if general < PRODUCT_PAIRS_PER_ENTRY {
                general += 1;
                a.record("product-subgroup-bound", instance.clone(), |m| {
                    let lhs = m.rel(&hk, hg)?;
                    let rhs = m.rel(kg, &meet)?;
                    let mut d = Draft::new();
                    d.put("D_rel_HK_H", lhs.value).put("D_rel_K_meet", rhs.value).put("meet_order", meet.order());
                    d.claim_q("D_rel_HK_H", Relation::Ge, "D_rel_K_meet").witness(&lhs.witness);
                    Ok(d)
                });
            }
            if meet.is_trivial() && trivial_meet < PRODUCT_PAIRS_PER_ENTRY {
                trivial_meet += 1;
                a.record("product-trivial-meet-bound", instance.clone(), |m| {
                    let lhs = m.rel(&hk, hg)?;
                    let mut d = Draft::new();
                    d.put("D_rel_HK_H", lhs.value).put("D_K", m.d(kg).value);
                    d.claim_q("D_rel_HK_H", Relation::Ge, "D_K").witness(&lhs.witness);
                    Ok(d)
                });
            }
            if meet.is_trivial() && both_normal && direct < PRODUCT_PAIRS_PER_ENTRY {
                direct += 1;
                a.record("normal-direct-product-value", instance, |m| {
                    let lhs = m.rel(&hk, hg)?;
                    let mut d = Draft::new();
                    d.put("D_rel_HK_H", lhs.value).put("D_K", m.d(kg).value);
                    d.claim_q("D_rel_HK_H", Relation::Eq, "D_K").witness(&lhs.witness);
                    Ok(d)
                });
            }
        }
    }
}

/// Records spanning several entries or none: the surjection-count identity
/// and the catalog-restricted subgroup-maximum problem.
pub fn audit_global(entries: &[CatalogEntry], config: &AuditConfig) -> Vec<AuditRecord> {
    let mut a = Auditor::new(GLOBAL_ENTRY, config);
    for n in 1..=6usize {
        for dl in 1..=n {
            a.record("surjection-count", format!("n={n} d={dl}"), |_| {
                let formula = count_surjective_labelings(n, dl).ok_or(Error::Overflow)?;
                let all = enumerate_labelings(n, dl, EnumerationMode::Surjective, false).count();
                let reduced = enumerate_labelings(n, dl, EnumerationMode::Surjective, true).count();
                let factorial: u64 = (1..=dl as u64).product();
                let mut d = Draft::new();
                d.put("formula", formula).put("enumerated", all).put("reduced_times_factorial", reduced as u64 * factorial);
                d.claim_q("formula", Relation::Eq, "enumerated");
                Ok(d)
            });
        }
    }
    let mut records = a.records;
    records.extend(max_subgroup_problem(entries, config));
    records
}

/// Largest catalog value over the actions of each abstract group.
fn catalog_maxima(entries: &[CatalogEntry], opts: SearchOptions) -> BTreeMap<String, (u32, usize)> {
    let mut out: BTreeMap<String, (u32, usize)> = BTreeMap::new();
    for e in entries {
        let Ok(g) = e.build() else { continue };
        let value = distinguishing_number(&g, opts).value;
        let slot = out.entry(e.abstract_group.clone()).or_insert((0, 0));
        slot.0 = slot.0.max(value);
        slot.1 += 1;
    }
    out
}

fn max_subgroup_problem(entries: &[CatalogEntry], config: &AuditConfig) -> Vec<AuditRecord> {
    let mut records = Vec::new();
    let mut maxima: Option<BTreeMap<String, (u32, usize)>> = None;
    for e in entries {
        let Family::Dihedral(n) = e.family else { continue };
        if n < 12 {
            continue;
        }
        let mut a = Auditor::new(&e.name, config);
        for spec in &e.subgroups {
            let Some(dd) = spec.label.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) else { continue };
            if ![3, 4, 5, 6, 10].contains(&dd) {
                continue;
            }
            let maxima = maxima.get_or_insert_with(|| catalog_maxima(entries, config.opts));
            let group_max = maxima.get(&e.abstract_group).copied();
            let sub_max = maxima.get(&spec.abstract_group).copied();
            let abstract_g = e.abstract_group.clone();
            let abstract_h = spec.abstract_group.clone();
            a.record("catalog-max-subgroup-problem", format!("H={}", spec.label), move |_| {
                let mut d = Draft::new();
                if let Some((v, actions)) = group_max {
                    d.put("Dbar_G_catalog", v).put("actions_G", actions);
                }
                if let Some((v, actions)) = sub_max {
                    d.put("Dbar_H_catalog", v).put("actions_H", actions);
                }
                d.claim("Dbar_G_catalog", Relation::Eq, Target::Value(2)).claim("Dbar_H_catalog", Relation::Eq, Target::Value(3));
                d.note(format!(
                    "partial: maxima over catalog actions of {abstract_g} and {abstract_h} only, not over all faithful actions"
                ));
                Ok(d)
            });
        }
        records.extend(a.records);
    }
    records
}
