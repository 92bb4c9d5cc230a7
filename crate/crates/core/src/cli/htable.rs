//! Arc assignment tables.
//!
//! A table is a JSON object keyed by arcs written `"u,v"`. Each value is
//! either `{"n": N, "index": I}`, naming member `I` of `RS_N` in canonical
//! order, or an inline digraph `{"order": N, "arcs": [...]}`. For extended
//! sequences the key `"L"` selects the loop image: `{"choice": 1}` or
//! `{"choice": 2}` for the two cycle rotations, or (permissive mode) any of
//! the forms above.
//!
//! For `RS_3`, index 0 is `{(1,1),(2,3),(3,2)}` and index 1 is
//! `{(1,2),(2,1),(3,3)}`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::construct::LoopChoice;
use crate::digraphs::{Arc, Digraph};
use crate::sem::RotationMember;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum HTableError {
    #[error("table is not a JSON object: {message}")]
    Json { message: String },
    #[error("key {key:?} is not of the form \"u,v\"")]
    BadKey { key: String },
    #[error("arc ({u},{v}) has no entry")]
    MissingArc { u: usize, v: usize },
    #[error("({u},{v}) is not an arc of the base")]
    UnknownArc { u: usize, v: usize },
    #[error("entry {key:?} does not name a valid family member or choice")]
    BadIndex { key: String },
    #[error("entry {key:?} has order {found}, expected {expected}")]
    OrderMismatch {
        key: String,
        expected: usize,
        found: usize,
    },
}

/// What the `"L"` entry asked for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopEntry {
    Choice(LoopChoice),
    Image(Digraph),
}

/// A parsed table: one image per arc, plus the optional loop entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTable {
    pub images: BTreeMap<Arc, Digraph>,
    pub loop_entry: Option<LoopEntry>,
}

fn parse_arc_key(key: &str) -> Option<Arc> {
    let (u, v) = key.split_once(',')?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(u) || !digits(v) {
        return None;
    }
    Some((u.parse().ok()?, v.parse().ok()?))
}

fn image_entry(
    key: &str,
    value: &Value,
    n: usize,
    family: &[RotationMember],
) -> Result<Digraph, HTableError> {
    let bad = || HTableError::BadIndex {
        key: key.to_string(),
    };
    let obj = value.as_object().ok_or_else(bad)?;
    if obj.contains_key("arcs") {
        let g: Digraph = serde_json::from_value(value.clone()).map_err(|_| bad())?;
        if g.order() != n {
            return Err(HTableError::OrderMismatch {
                key: key.to_string(),
                expected: n,
                found: g.order(),
            });
        }
        return Ok(g);
    }
    let order = obj.get("n").and_then(Value::as_u64).ok_or_else(bad)? as usize;
    if order != n {
        return Err(HTableError::OrderMismatch {
            key: key.to_string(),
            expected: n,
            found: order,
        });
    }
    let index = obj.get("index").and_then(Value::as_u64).ok_or_else(bad)? as usize;
    family
        .get(index)
        .map(|r| r.digraph().clone())
        .ok_or_else(bad)
}

/// Parses `text` as an assignment table over `base`, whose arc images live
/// in `RS_n` (`family`). When `loop_key` is false the `"L"` key is
/// rejected and loops of `base` are ordinary `"c,c"` entries; when true, loops
/// must come through `"L"` (or may be left to the caller).
pub fn parse_h_table(
    text: &str,
    base: &Digraph,
    n: usize,
    family: &[RotationMember],
    loop_key: bool,
) -> Result<HTable, HTableError> {
    let root: Value = if text.trim().is_empty() {
        Value::Object(Default::default())
    } else {
        serde_json::from_str(text).map_err(|e| HTableError::Json {
            message: e.to_string(),
        })?
    };
    let obj = root.as_object().ok_or_else(|| HTableError::Json {
        message: "top level must be an object".into(),
    })?;
    let base_loops = base.loops();
    let mut images = BTreeMap::new();
    let mut loop_entry = None;
    for (key, value) in obj {
        if key == "L" {
            if !loop_key || base_loops.is_empty() {
                return Err(HTableError::BadIndex { key: key.clone() });
            }
            let bad = || HTableError::BadIndex { key: key.clone() };
            loop_entry = Some(match value.as_object().and_then(|o| o.get("choice")) {
                Some(c) => LoopEntry::Choice(
                    c.as_u64()
                        .filter(|&k| k <= 2)
                        .and_then(|k| LoopChoice::from_number(k as u8))
                        .ok_or_else(bad)?,
                ),
                None => LoopEntry::Image(image_entry(key, value, n, family)?),
            });
            continue;
        }
        let (u, v) = parse_arc_key(key).ok_or_else(|| HTableError::BadKey { key: key.clone() })?;
        if !base.has_arc(u, v) || (loop_key && u == v) {
            return Err(HTableError::UnknownArc { u, v });
        }
        images.insert((u, v), image_entry(key, value, n, family)?);
    }
    for (u, v) in base.arcs() {
        if (u != v || !loop_key) && !images.contains_key(&(u, v)) {
            return Err(HTableError::MissingArc { u, v });
        }
    }
    Ok(HTable { images, loop_entry })
}
