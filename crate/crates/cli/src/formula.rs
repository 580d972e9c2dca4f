//! Human-readable projector formulas `∏ (1 − 𝒜/a)`.

use std::collections::{BTreeMap, BTreeSet};

use traceless::spectrum::AffineEigenvalue;

/// Nonzero values at `N`, descending, each with its simplest affine form.
fn factors(forms: &BTreeSet<AffineEigenvalue>, big_n: i64) -> Vec<(i64, AffineEigenvalue)> {
    let mut by_value: BTreeMap<i64, AffineEigenvalue> = BTreeMap::new();
    for f in forms {
        let v = f.at(big_n);
        if v != 0 {
            by_value.entry(v).and_modify(|g| *g = (*g).min(*f)).or_insert(*f);
        }
    }
    by_value.into_iter().rev().collect()
}

fn product(denominators: impl Iterator<Item = String>) -> String {
    let out: String = denominators
        .map(|d| {
            if d.contains(['+', '−', '-']) {
                format!("(1 − 𝒜/({d}))")
            } else {
                format!("(1 − 𝒜/{d})")
            }
        })
        .collect();
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

/// Three lines: the product in `N`, the same product at the given `N`, and
/// the concrete eigenvalue list.
pub fn emit(forms: &BTreeSet<AffineEigenvalue>, big_n: usize) -> String {
    let fs = factors(forms, big_n as i64);
    let symbolic = product(fs.iter().map(|(_, f)| f.symbolic("N")));
    let concrete = product(fs.iter().map(|(v, _)| v.to_string()));
    let list: Vec<String> = fs.iter().map(|(v, _)| v.to_string()).collect();
    format!("{symbolic}\nN = {big_n}: {concrete}\neigenvalues: [{}]\n", list.join(","))
}
