#![allow(dead_code)]

pub mod criteria;
pub mod fixtures;
pub mod oracle;

use std::path::PathBuf;

use qci::algebra::Quandle;
use qci::diagram::{braid_closure, r1_insert, r2_insert, Diagram, Side};

pub const BASES: &[(&str, usize, &[i32])] = &[
    ("unknot", 1, &[]),
    ("trefoil", 2, &[1, 1, 1]),
    ("trefoil_mirror", 2, &[-1, -1, -1]),
    ("figure_eight", 3, &[1, -2, 1, -2]),
    ("hopf", 2, &[1, 1]),
    ("hopf_reversed", 2, &[-1, -1]),
    ("unlink2", 2, &[]),
];

/// Pairs of braid words differing by one braid relation, so their closures
/// differ by a single Reidemeister III move.
pub const R3_PAIRS: &[(&str, usize, &[i32], &[i32])] = &[
    ("unknot", 3, &[1, 2, 1, -2], &[2, 1, 2, -2]),
    ("trefoil", 3, &[1, 2, 1, 2], &[2, 1, 2, 2]),
    ("trefoil_mirror", 3, &[-1, -2, -1, -2], &[-2, -1, -2, -2]),
    ("figure_eight", 3, &[1, -2, -1, 1, 1, -2], &[-2, -1, 2, 1, 1, -2]),
    ("hopf", 3, &[1, 2, 1], &[2, 1, 2]),
    ("hopf_reversed", 3, &[-1, -2, -1], &[-2, -1, -2]),
    ("unlink2", 3, &[1, 2, 1, -2, -1], &[2, 1, 2, -2, -1]),
];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn regenerating() -> bool {
    std::env::var("QCI_REGENERATE_CORPUS").is_ok_and(|v| v == "1")
}

pub fn load(file: &str) -> Diagram {
    let path = corpus_dir().join(file);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Diagram::from_json_str(&text).unwrap()
}

pub fn base(name: &str) -> Diagram {
    load(&format!("{name}.json"))
}

pub fn r3_pair(name: &str) -> (Diagram, Diagram) {
    (load(&format!("r3/{name}_a.json")), load(&format!("r3/{name}_b.json")))
}

pub fn bases() -> Vec<(&'static str, Diagram)> {
    BASES.iter().map(|(n, _, _)| (*n, base(n))).collect()
}

/// The base diagram, kinks of both signs on its first semi-arc, a poke
/// between two semi-arcs sharing a region, and the curated R3 pair.
pub fn variants(name: &str) -> Vec<(String, Diagram)> {
    let d = base(name);
    let first = d.labels()[0];
    let mut out = vec![
        ("base".to_string(), d.clone()),
        ("r1+".to_string(), r1_insert(&d, first, 1, Side::Left).unwrap()),
        ("r1-".to_string(), r1_insert(&d, first, -1, Side::Right).unwrap()),
    ];
    if let Some(p) = poke(&d) {
        out.push(("r2".to_string(), p));
    }
    let (a, b) = r3_pair(name);
    out.push(("r3a".to_string(), a));
    out.push(("r3b".to_string(), b));
    out
}

pub fn poke(d: &Diagram) -> Option<Diagram> {
    let labels = d.labels();
    for &a in labels {
        for &b in labels {
            if a != b {
                if let Ok(p) = r2_insert(d, a, b, None) {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// Exhaustive count of colorings, assigning a color to every semi-arc and
/// checking the crossing relations directly on the rotation system.
pub fn oracle_coloring_count(d: &Diagram, q: &Quandle) -> usize {
    let e = d.semiarc_count();
    let n = q.size();
    let mut colors = vec![0usize; e];
    let mut count = 0;
    loop {
        let ok = d.crossings().iter().all(|x| {
            let [s0, s1, s2, s3] = x.slots.map(|a| colors[a]);
            s1 == s3 && if x.sign > 0 { q.op(s0, s1) == s2 } else { q.op(s2, s1) == s0 }
        }) && (0..e).all(|a| d.head(a).is_some() || colors[a] == colors[d.successor(a)]);
        if ok {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == e {
                return count;
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

pub fn build_corpus() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (name, strands, word) in BASES {
        out.push((format!("{name}.json"), braid_closure(*strands, word).unwrap().to_json_string()));
    }
    for (name, strands, a, b) in R3_PAIRS {
        out.push((format!("r3/{name}_a.json"), braid_closure(*strands, a).unwrap().to_json_string()));
        out.push((format!("r3/{name}_b.json"), braid_closure(*strands, b).unwrap().to_json_string()));
    }
    out
}
