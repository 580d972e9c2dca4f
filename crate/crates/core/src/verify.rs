//! The exact oracle report behind `traceless verify`: spectrum
//! annihilation, idempotency, tracelessness, kernel identity, centrality,
//! equivariance and the Casimir cross-check, all at one `(m, n, N)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::rational::Q;
use crate::spectrum::{spec_a, SpectrumRequest};
use crate::tensor::hermitian::invert;
use crate::tensor::ops::{act_gl, trace};
use crate::tensor::oracle::{
    annihilation_check, build_operator_matrix_capped, casimir_matrix_units, kernel_dimension,
    shifted, OpSpec, OperatorMatrix,
};
use crate::tensor::projector::traceless_project;
use crate::tensor::DenseTensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub spectrum: BTreeSet<i64>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Small random rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 5`.
pub fn random_q(rng: &mut impl Rng) -> Q {
    Q::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=5).into(),
    )
}

pub fn random_tensor(m: usize, n: usize, big_n: usize, rng: &mut impl Rng) -> DenseTensor<Q> {
    DenseTensor::from_fn(m, n, big_n, |_| random_q(rng))
}

/// A random invertible integer matrix and its exact inverse, row-major.
pub fn random_invertible(big_n: usize, rng: &mut impl Rng) -> (Vec<Q>, Vec<Q>) {
    loop {
        let s: Vec<Q> = (0..big_n * big_n)
            .map(|_| Q::from_integer(rng.gen_range(-3i64..=3).into()))
            .collect();
        if let Ok(inv) = invert(big_n, &s) {
            return (s, inv);
        }
    }
}

/// Slot-level generators `τ_{ab′}`, `τ_{ab}`, `τ_{a′b′}` (1-based).
pub fn generators(m: usize, n: usize) -> Vec<OpSpec> {
    let arcs = (1..=m)
        .cartesian_product(1..=n)
        .map(|(a, b)| OpSpec::TauArc(a, b));
    let left = (1..=m)
        .tuple_combinations()
        .map(|(a, b)| OpSpec::TauLeft(a, b));
    let right = (1..=n)
        .tuple_combinations()
        .map(|(a, b)| OpSpec::TauRight(a, b));
    arcs.chain(left).chain(right).collect()
}

/// The matrix of `𝒫` from the matrix-free projector, checking that every
/// column is traceless on the way.
fn projector_matrix(m: usize, n: usize, big_n: usize) -> Result<(OperatorMatrix, usize)> {
    let dim = big_n.pow((m + n) as u32);
    let mut mat = OperatorMatrix::zeros(dim);
    let mut bad = 0;
    for x in 0..dim {
        let col = traceless_project(&DenseTensor::<Q>::basis(m, n, big_n, x))?;
        let traced = (1..=m)
            .cartesian_product(1..=n)
            .any(|(a, b)| !trace(&col, a, b).map(|t| t.is_zero()).unwrap_or(false));
        if traced {
            bad += 1;
        }
        for (y, v) in col.components().iter().enumerate() {
            mat.add_entry(y, x, v.clone());
        }
    }
    Ok((mat, bad))
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Runs every check at `(m, n, N)` with explicit matrices bounded by `cap`.
pub fn verify(m: usize, n: usize, big_n: usize, cap: usize, seed: u64) -> Result<VerifyReport> {
    let req = SpectrumRequest::new(m, n, big_n)?;
    let spectrum = spec_a(&req);
    let a = build_operator_matrix_capped(&OpSpec::A, m, n, big_n, cap)?;
    let mut checks = Vec::new();

    let annihilated = annihilation_check(&a, &spectrum);
    let empty: Vec<i64> = spectrum
        .iter()
        .copied()
        .filter(|&v| kernel_dimension(&shifted(&a, &Q::from_integer(v.into()))) == 0)
        .collect();
    checks.push(check(
        "spectrum-annihilation",
        annihilated && empty.is_empty(),
        if !annihilated {
            "product of (A - a) over the spectrum is nonzero".to_string()
        } else if !empty.is_empty() {
            format!("no eigenvector for {empty:?}")
        } else {
            format!(
                "annihilated by {} factors, each eigenvalue attained",
                spectrum.len()
            )
        },
    ));

    let (p, bad_cols) = projector_matrix(m, n, big_n)?;
    checks.push(check(
        "tracelessness",
        bad_cols == 0,
        format!(
            "{bad_cols} of {} projected basis tensors have a nonzero trace",
            p.dim()
        ),
    ));
    checks.push(check("idempotency", p.mul(&p) == p, "P^2 = P as matrices"));
    checks.push(check(
        "kernel",
        p.mul(&a).is_zero() && a.mul(&p).is_zero(),
        "P A = A P = 0 as matrices",
    ));

    let mut failing = Vec::new();
    for g in generators(m, n) {
        let gm = build_operator_matrix_capped(&g, m, n, big_n, cap)?;
        if !p.commutes_with(&gm) {
            failing.push(format!("{g:?}"));
        }
    }
    checks.push(check(
        "centrality",
        failing.is_empty(),
        if failing.is_empty() {
            "P commutes with every generator".to_string()
        } else {
            failing.join(", ")
        },
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equivariant = 0;
    for _ in 0..20 {
        let (s, s_inv) = random_invertible(big_n, &mut rng);
        let t = random_tensor(m, n, big_n, &mut rng);
        let lhs = traceless_project(&act_gl(&t, &s, &s_inv))?;
        let rhs = act_gl(&traceless_project(&t)?, &s, &s_inv);
        if lhs == rhs {
            equivariant += 1;
        }
    }
    checks.push(check(
        "equivariance",
        equivariant == 20,
        format!("{equivariant}/20 random S"),
    ));

    let c = build_operator_matrix_capped(&OpSpec::C, m, n, big_n, cap)?;
    let units = casimir_matrix_units(m, n, big_n, cap)?;
    checks.push(check(
        "casimir",
        c == units,
        "L + R - A + Nn equals the matrix-unit Casimir",
    ));

    Ok(VerifyReport {
        m,
        n,
        big_n,
        spectrum,
        checks,
    })
}
