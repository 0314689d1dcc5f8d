//! Bundled worked examples. Each scenario runs the library on a fixed input
//! and renders the result as canonical JSON; the committed golden files hold
//! the expected text.

use serde_json::{json, Value};

use crate::error::Result;
use crate::hms::{
    descent_pairs, maximally_embedded, naive_slide_up, reassignment_equivalent,
    reassignment_sequence, rectify_assignment, HmtState,
};
use crate::jdt::{backward_slide, forward_slide};
use crate::json::to_canonical_string;
use crate::partitions::Cell;
use crate::rsk::{insertion_tableau, knuth_equivalent, Permutation};
use crate::tableaux::{reverse_bump, row_insert, Tableau};

pub mod fixtures {
    pub const ROW_INSERTION: &str = include_str!("../fixtures/insertion_tableau.json");
    pub const SLIDE_EXAMPLE: &str = include_str!("../fixtures/slide_skew.json");
    pub const NORMAL_3X3: &str = include_str!("../fixtures/normal_3x3.json");
    pub const SKEW_T1: &str = include_str!("../fixtures/skew_t1.json");
    pub const SKEW_T2: &str = include_str!("../fixtures/skew_t2.json");
    pub const DESCENT_4X4: &str = include_str!("../fixtures/descent_4x4.json");
    pub const SKEW_4X4: &str = include_str!("../fixtures/skew_4x4.json");
    pub const SLID_UP_4X4: &str = include_str!("../fixtures/slid_up_4x4.json");
}

/// Scenario names paired with their golden text.
pub const GOLDEN: &[(&str, &str)] = &[
    (
        "row_insertion",
        include_str!("../golden/row_insertion.json"),
    ),
    (
        "reverse_bumping",
        include_str!("../golden/reverse_bumping.json"),
    ),
    ("slides", include_str!("../golden/slides.json")),
    (
        "completion_sequence",
        include_str!("../golden/completion_sequence.json"),
    ),
    (
        "skew_rectification",
        include_str!("../golden/skew_rectification.json"),
    ),
    (
        "knuth_pair_insertion",
        include_str!("../golden/knuth_pair_insertion.json"),
    ),
    (
        "slide_up_vs_rectify",
        include_str!("../golden/slide_up_vs_rectify.json"),
    ),
];

pub const SAMPLE_COMPLETIONS: [u32; 9] = [1, 3, 2, 5, 8, 4, 6, 7, 9];

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> T {
    serde_json::from_str(text).expect("bundled fixture parses")
}

fn grid(state: &HmtState) -> Value {
    json!(state.cells())
}

fn rows(t: &Tableau) -> Value {
    json!(t.rows())
}

/// Row insertion with the bumped value recorded at each row.
fn row_insertion() -> Result<Value> {
    let p: Tableau = parse(fixtures::ROW_INSERTION);
    let x = 5;
    let mut bumps = Vec::new();
    let mut carry = x;
    for row in p.normal_rows().expect("normal fixture") {
        match row.iter().find(|&&y| y > carry) {
            Some(&y) => {
                bumps.push(json!({"placed": carry, "bumped": y}));
                carry = y;
            }
            None => break,
        }
    }
    let (q, added) = row_insert(&p, x)?;
    Ok(json!({
        "input": rows(&p),
        "insert": x,
        "bumps": bumps,
        "result": rows(&q),
        "added_cell": added,
    }))
}

fn reverse_bumping() -> Result<Value> {
    let p: Tableau = parse(fixtures::ROW_INSERTION);
    let (q, added) = row_insert(&p, 5)?;
    let (restored, ejected) = reverse_bump(&q, added)?;
    Ok(json!({
        "input": rows(&q),
        "corner": added,
        "result": rows(&restored),
        "ejected": ejected,
        "restores_original": restored == p,
    }))
}

fn slides() -> Result<Value> {
    let p: Tableau = parse(fixtures::SLIDE_EXAMPLE);
    let fwd = forward_slide(&p, Cell::new(1, 1))?;
    let back = backward_slide(&p, Cell::new(2, 4))?;
    let undo = backward_slide(&fwd.tableau, fwd.vacated)?;
    Ok(json!({
        "input": p,
        "forward": {"start": [1, 1], "steps": fwd.steps, "result": fwd.tableau, "vacated": fwd.vacated},
        "backward": {"start": [2, 4], "steps": back.steps, "result": back.tableau, "vacated": back.vacated},
        "backward_undoes_forward": undo.tableau == p,
    }))
}

fn completion_sequence() -> Result<Value> {
    let a0: HmtState = parse(fixtures::NORMAL_3X3);
    let trace = reassignment_sequence(&a0, &SAMPLE_COMPLETIONS)?;
    let sequence: Vec<Value> = trace.states().into_iter().map(grid).collect();
    Ok(json!({
        "completions": SAMPLE_COMPLETIONS,
        "first_cascade": trace.events[0].relocations,
        "sequence": sequence,
        "trace": trace,
    }))
}

fn skew_rectification() -> Result<Value> {
    let t1: HmtState = parse(fixtures::SKEW_T1);
    let t2: HmtState = parse(fixtures::SKEW_T2);
    let mut out = serde_json::Map::new();
    for (name, s) in [("t1", &t1), ("t2", &t2)] {
        let (shape, embedded) = maximally_embedded(s)?;
        let trace = rectify_assignment(s)?;
        out.insert(
            name.to_string(),
            json!({
                "state": grid(s),
                "embedded_shape": shape,
                "embedded_rows": rows(&embedded),
                "reading_word": embedded.reading_word(),
                "events": trace.events.len(),
                "final": grid(trace.final_state()),
            }),
        );
    }
    out.insert(
        "equivalent".into(),
        json!(reassignment_equivalent(&t1, &t2)?),
    );
    Ok(Value::Object(out))
}

fn knuth_pair() -> Result<Value> {
    let pi = Permutation::new(vec![7, 8, 2, 3, 5, 4, 1, 6])?;
    let tau = Permutation::new(vec![7, 8, 2, 5, 3, 4, 1, 6])?;
    let prefixes = |w: &Permutation| -> Vec<Value> {
        (0..=w.len())
            .map(|k| rows(&insertion_tableau(&w.word()[..k])))
            .collect()
    };
    Ok(json!({
        "pi": {"word": pi.word(), "steps": prefixes(&pi)},
        "tau": {"word": tau.word(), "steps": prefixes(&tau)},
        "knuth_equivalent": knuth_equivalent(&pi, &tau)?,
        "same_insertion_tableau": insertion_tableau(pi.word()) == insertion_tableau(tau.word()),
    }))
}

fn slide_up_vs_rectify() -> Result<Value> {
    let b: HmtState = parse(fixtures::DESCENT_4X4);
    let c: HmtState = parse(fixtures::SKEW_4X4);
    let d = naive_slide_up(&c);
    let trace = rectify_assignment(&c)?;
    let e = trace.final_state();
    Ok(json!({
        "b": {"state": grid(&b), "class": b.classify()?, "descent_pairs": descent_pairs(&b)},
        "c": {"state": grid(&c), "class": c.classify()?},
        "d": {"state": grid(&d), "class": d.classify()?, "descent_pairs": descent_pairs(&d)},
        "e": {"state": grid(e), "class": e.classify()?, "descent_pairs": descent_pairs(e), "events": trace.events.len()},
    }))
}

/// Renders one scenario by name.
pub fn render(name: &str) -> Option<Result<String>> {
    let value = match name {
        "row_insertion" => row_insertion(),
        "reverse_bumping" => reverse_bumping(),
        "slides" => slides(),
        "completion_sequence" => completion_sequence(),
        "skew_rectification" => skew_rectification(),
        "knuth_pair_insertion" => knuth_pair(),
        "slide_up_vs_rectify" => slide_up_vs_rectify(),
        _ => return None,
    };
    Some(value.map(|v| to_canonical_string(&v).expect("JSON values serialize")))
}

/// Renders every scenario in golden order.
pub fn render_all() -> Result<Vec<(&'static str, String)>> {
    GOLDEN
        .iter()
        .map(|&(name, _)| render(name).expect("known scenario").map(|s| (name, s)))
        .collect()
}

/// Names of scenarios whose output differs from the golden text.
pub fn mismatches() -> Result<Vec<&'static str>> {
    Ok(render_all()?
        .into_iter()
        .zip(GOLDEN)
        .filter(|((_, got), (_, want))| got != want)
        .map(|((name, _), _)| name)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        let _: Tableau = parse(fixtures::ROW_INSERTION);
        let _: Tableau = parse(fixtures::SLIDE_EXAMPLE);
        for text in [
            fixtures::NORMAL_3X3,
            fixtures::SKEW_T1,
            fixtures::SKEW_T2,
            fixtures::DESCENT_4X4,
            fixtures::SKEW_4X4,
            fixtures::SLID_UP_4X4,
        ] {
            let _: HmtState = parse(text);
        }
    }

    #[test]
    fn every_scenario_renders() {
        assert_eq!(render_all().unwrap().len(), GOLDEN.len());
        assert!(render("nope").is_none());
    }
}
