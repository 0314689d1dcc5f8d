//! Browser bindings. Each export takes plain strings and returns canonical
//! JSON so the page script only needs `JSON.parse`.

use serde_json::json;
use wasm_bindgen::prelude::*;

use taquin::hms::{reassignment_sequence, rectify_assignment};
use taquin::json::to_canonical_string;
use taquin::partitions::{count_syt, hook_lengths};
use taquin::rsk::{insertion_tableau, rsk};
use taquin::{HmtState, Partition, Permutation};

fn render(v: serde_json::Value) -> Result<String, String> {
    to_canonical_string(&v).map_err(|e| e.to_string())
}

/// Count and hook lengths for a shape such as `"4,3,2,2"`.
pub fn count_json(shape: &str) -> Result<String, String> {
    let shape: Partition = shape.parse().map_err(|e: taquin::Error| e.to_string())?;
    render(json!({
        "shape": shape,
        "count": count_syt(&shape).to_string(),
        "hooks": hook_lengths(&shape),
    }))
}

/// RSK of a word such as `"7,8,2,3,5,4,1,6"` with every intermediate
/// insertion tableau.
pub fn rsk_json(word: &str) -> Result<String, String> {
    let pi: Permutation = word.parse().map_err(|e: taquin::Error| e.to_string())?;
    let (p, q) = rsk(&pi);
    let steps: Vec<_> = (1..=pi.len())
        .map(|k| insertion_tableau(&pi.word()[..k]).rows().to_vec())
        .collect();
    render(json!({"P": p.rows(), "Q": q.rows(), "steps": steps}))
}

/// Reassignment trace for a state given as HmtState JSON. An empty
/// completion list rectifies a skew state; otherwise the completions are
/// replayed on a normal state.
pub fn reassign_json(state: &str, completions: &str) -> Result<String, String> {
    let a0: HmtState = serde_json::from_str(state).map_err(|e| e.to_string())?;
    let completions: Vec<u32> = completions
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad task ID {t:?}")))
        .collect::<Result<_, _>>()?;
    let trace = if completions.is_empty() {
        rectify_assignment(&a0)
    } else {
        reassignment_sequence(&a0, &completions)
    }
    .map_err(|e| e.to_string())?;
    to_canonical_string(&trace).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn count(shape: &str) -> Result<String, JsError> {
    count_json(shape).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn insert_word(word: &str) -> Result<String, JsError> {
    rsk_json(word).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn reassign(state: &str, completions: &str) -> Result<String, JsError> {
    reassign_json(state, completions).map_err(|e| JsError::new(&e))
}
