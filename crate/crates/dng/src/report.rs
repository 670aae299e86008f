//! JSON shapes written by the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// `dist`, `dist-rel` and `graph dist`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub value: u32,
    pub witness: Vec<u32>,
    pub examined: u64,
    /// `null` unless timings were requested, so reports stay reproducible.
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub algo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<u32>,
}

/// `bounds`. `verified` means the constructed labeling re-checked as
/// distinguishing, or for closed-form bounds that `bound >= exact`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub method: String,
    pub bound: Option<u32>,
    pub exact: u32,
    pub labeling: Option<Vec<u32>>,
    pub verified: bool,
    pub details: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovedSet {
    pub element: String,
    /// 1-based points.
    pub moved: Vec<usize>,
}

/// `motion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotionReport {
    pub group_motion: usize,
    pub elements: Vec<MovedSet>,
}

/// `good-partition`. Block members are 1-based preserver indices, witnesses
/// 1-based points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub labeling: Vec<u32>,
    pub preservers: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    pub witnesses: Vec<usize>,
    pub t: usize,
}

/// `group info`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub orbits: Vec<Vec<usize>>,
    pub abelian: bool,
    pub derived_order: usize,
    pub motion: Option<usize>,
    /// Orders of the maximal nonidentity proper subgroups; `None` above the
    /// enumeration cap.
    pub maximal_subgroup_orders: Option<Vec<usize>>,
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
