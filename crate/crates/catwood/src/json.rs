//! JSON forms of the Catalan objects and of realizers.
//!
//! - plane tree: nested arrays, a vertex being the array of its children
//!   (`[[], [[]]]` is a root with a leaf child and a child of depth two);
//! - binary tree: `null` for a leaf, `[left, right]` for a node;
//! - non-crossing partition: array of blocks over `1..=n`;
//! - realizer: `{"n", "t0", "q_word", "p0", "p1", "p2"}` where parents of
//!   internal vertices are their indices and `-1`, `-2`, `-3` stand for
//!   `v0`, `v1`, `v2`.

use catwood_core::catalan::{BinaryTree, NoncrossingPartition, PlaneTree};
use catwood_core::realizer::{Color, Realizer};
use catwood_core::{phi, psi, DyckPath};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub fn plane_tree_to_json(t: &PlaneTree) -> Value {
    Value::Array(t.children.iter().map(plane_tree_to_json).collect())
}

pub fn plane_tree_from_json(v: &Value) -> Result<PlaneTree, CliError> {
    match v {
        Value::Array(children) => Ok(PlaneTree::node(
            children
                .iter()
                .map(plane_tree_from_json)
                .collect::<Result<_, _>>()?,
        )),
        other => Err(CliError::Format(format!(
            "plane tree vertex must be an array, got {other}"
        ))),
    }
}

pub fn binary_tree_to_json(t: &BinaryTree) -> Value {
    match t {
        BinaryTree::Leaf => Value::Null,
        BinaryTree::Node(l, r) => {
            Value::Array(vec![binary_tree_to_json(l), binary_tree_to_json(r)])
        }
    }
}

pub fn binary_tree_from_json(v: &Value) -> Result<BinaryTree, CliError> {
    match v {
        Value::Null => Ok(BinaryTree::Leaf),
        Value::Array(pair) if pair.len() == 2 => Ok(BinaryTree::node(
            binary_tree_from_json(&pair[0])?,
            binary_tree_from_json(&pair[1])?,
        )),
        other => Err(CliError::Format(format!(
            "binary tree node must be null or a pair, got {other}"
        ))),
    }
}

pub fn partition_to_json(p: &NoncrossingPartition) -> Value {
    serde_json::to_value(p.blocks()).expect("blocks serialise")
}

pub fn partition_from_json(v: &Value) -> Result<NoncrossingPartition, CliError> {
    let blocks: Vec<Vec<usize>> = serde_json::from_value(v.clone())
        .map_err(|e| CliError::Format(format!("partition: {e}")))?;
    let n = blocks.iter().map(Vec::len).sum();
    Ok(NoncrossingPartition::new(n, blocks)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizerJson {
    pub n: usize,
    pub t0: Value,
    pub q_word: String,
    pub p0: Vec<i64>,
    pub p1: Vec<i64>,
    pub p2: Vec<i64>,
}

fn encode_vertex(n: usize, v: usize) -> i64 {
    if v < n {
        v as i64
    } else {
        -((v - n) as i64) - 1
    }
}

fn parent_array(r: &Realizer, c: Color) -> Vec<i64> {
    (0..r.size())
        .map(|u| encode_vertex(r.size(), r.parent(c, u).expect("valid realizer")))
        .collect()
}

pub fn realizer_to_json(r: &Realizer) -> Result<RealizerJson, CliError> {
    let (p, q) = psi(r)?;
    Ok(RealizerJson {
        n: r.size(),
        t0: plane_tree_to_json(&PlaneTree::omega_inv(&p)),
        q_word: q.to_word(),
        p0: parent_array(r, Color::Zero),
        p1: parent_array(r, Color::One),
        p2: parent_array(r, Color::Two),
    })
}

/// Rebuilds the realizer from `t0` and `q_word` and checks that the stored
/// parent arrays agree with it.
pub fn realizer_from_json(j: &RealizerJson) -> Result<Realizer, CliError> {
    let p = plane_tree_from_json(&j.t0)?.omega()?;
    let q = DyckPath::parse_word(&j.q_word)?;
    if p.size() != j.n || q.size() != j.n {
        return Err(CliError::Format(format!(
            "n = {} but t0 has {} edges and q_word has size {}",
            j.n,
            p.size(),
            q.size()
        )));
    }
    let r = phi(&p, &q)?;
    for (c, stored) in [
        (Color::Zero, &j.p0),
        (Color::One, &j.p1),
        (Color::Two, &j.p2),
    ] {
        let computed = parent_array(&r, c);
        if *stored != computed {
            return Err(CliError::Format(format!(
                "p{c} does not match the realizer of (t0, q_word): stored {stored:?}, computed {computed:?}"
            )));
        }
    }
    Ok(r)
}

pub fn read_realizer(text: &str) -> Result<Realizer, CliError> {
    let j: RealizerJson =
        serde_json::from_str(text).map_err(|e| CliError::Format(format!("realizer JSON: {e}")))?;
    realizer_from_json(&j)
}
