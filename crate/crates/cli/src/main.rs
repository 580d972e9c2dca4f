use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use traceless::lr::{branch_coefficient, branch_upper_bound, lr_coefficient};
use traceless::rational::{format_q, parse_q, q_to_f64};
use traceless::spectrum::{
    is_saturated, restricted_affine, restricted_spec_union, spec_a, spec_a_affine, spec_a_tilde,
    AffineEigenvalue, SpectrumRequest,
};
use traceless::tensor::hermitian::apply_projector_hermitian;
use traceless::tensor::oracle::{bmap_rank_capped, BMAP_CAP, DEFAULT_CAP};
use traceless::tensor::projector::{apply_projector, restricted_factors, traceless_factors};
use traceless::tensor::{AnyMetric, AnyTensor};
use traceless::wbalgebra::{element_p, element_p_generic, WalledDiagram};
use traceless::{Error, Partition};

mod formula;

#[derive(Parser)]
#[command(name = "traceless", version, about = "Traceless projectors for mixed tensors")]
struct Cli {
    /// Print rational results as floating-point numbers.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Shape {
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'N')]
    big_n: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// spec(𝒜_{m,n}) at dimension N.
    Spectrum {
        #[command(flatten)]
        shape: Shape,
        /// Print the projector as a product of factors instead of JSON.
        #[arg(long)]
        formula: bool,
    },
    /// I(ρ,σ), or I(X) for a repeated `--restrict rho/sigma`.
    Restricted {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        rho: Option<Partition>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        sigma: Option<Partition>,
        #[arg(long = "restrict", allow_hyphen_values = true, value_parser = parse_pair)]
        pairs: Vec<(Partition, Partition)>,
        #[arg(short = 'N')]
        big_n: usize,
        #[arg(long)]
        formula: bool,
    },
    /// The alternative set spec̃ with the saturation flag.
    Tilde {
        #[command(flatten)]
        shape: Shape,
    },
    /// Littlewood–Richardson coefficient c^γ_{αβ}.
    Lrcoef {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        gamma: Partition,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        beta: Partition,
    },
    /// Branching coefficient c^{μν}_{ρσ}(N) and its upper bound.
    Branch {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        rho: Partition,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        sigma: Partition,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_partition)]
        nu: Partition,
        #[arg(short = 'N')]
        big_n: usize,
    },
    /// The splitting idempotent P_{m,n} in B_{m,n}(δ).
    WbIdempotent {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        /// A rational "p/q", or "generic" for numerator and denominator in δ.
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Project a tensor file onto its traceless part.
    Apply {
        #[command(flatten)]
        io: TensorIo,
    },
    /// Project with traces taken through a hermitian metric.
    ApplyHermitian {
        #[command(flatten)]
        io: TensorIo,
        /// Metric file `{"N","scalar","g"}`.
        #[arg(long)]
        metric: PathBuf,
    },
    /// Exact oracle report; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rank of the diagram map 𝔟 on B_{m,n}(N).
    BmapRank {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = BMAP_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
struct TensorIo {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: Option<PathBuf>,
    #[arg(long = "restrict", allow_hyphen_values = true, value_parser = parse_pair)]
    pairs: Vec<(Partition, Partition)>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    if s == "-" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(Partition, Partition), String> {
    let (rho, sigma) = s.split_once('/').ok_or_else(|| format!("expected rho/sigma, got {s:?}"))?;
    Ok((parse_partition(rho)?, parse_partition(sigma)?))
}

enum Failure {
    Validation(String),
    Refusal(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_refusal() {
            Failure::Refusal(e.to_string())
        } else {
            Failure::Validation(e.to_string())
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn request(s: &Shape) -> Result<SpectrumRequest, Error> {
    SpectrumRequest::new(s.m, s.n, s.big_n)
}

fn restricted_request(pairs: &[(Partition, Partition)], big_n: usize) -> Result<SpectrumRequest, Failure> {
    let (rho, sigma) = pairs.first().ok_or_else(|| Failure::Validation("no (rho, sigma) pair given".into()))?;
    if pairs.iter().any(|(r, s)| (r.size(), s.size()) != (rho.size(), sigma.size())) {
        return Err(Failure::Validation("all pairs must have the same sizes".into()));
    }
    Ok(SpectrumRequest::new(rho.size(), sigma.size(), big_n)?)
}

fn number(x: &traceless::Q, float: bool) -> Value {
    if float {
        json!(q_to_f64(x))
    } else {
        json!(format_q(x))
    }
}

fn diagram_terms<'a>(
    terms: impl Iterator<Item = (&'a WalledDiagram, Value)>,
) -> Value {
    terms.map(|(d, c)| json!({ "diagram": d, "coeff": c })).collect()
}

fn wb_idempotent(m: usize, n: usize, delta: &str, float: bool) -> Result<Value, Failure> {
    if delta == "generic" {
        let (num, den) = element_p_generic(m, n);
        let poly = |p: &traceless::Poly| -> Value { p.coeffs().iter().map(|c| number(c, float)).collect() };
        let terms = diagram_terms(num.terms().iter().map(|(d, c)| (d, poly(c))));
        return Ok(json!({ "m": m, "n": n, "delta": "generic", "numerator": terms, "denominator": poly(&den) }));
    }
    let d = parse_q(delta)?;
    let p = element_p(m, n, &d)?;
    let terms = diagram_terms(p.terms().iter().map(|(d, c)| (d, number(c, float))));
    Ok(json!({ "m": m, "n": n, "delta": format_q(&d), "terms": terms }))
}

fn factors_for(pairs: &[(Partition, Partition)], m: usize, n: usize, big_n: usize) -> Result<Vec<i64>, Error> {
    if pairs.is_empty() {
        traceless_factors(m, n, big_n)
    } else {
        restricted_factors(pairs, m, n, big_n)
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn project(t: AnyTensor, pairs: &[(Partition, Partition)], metric: Option<AnyMetric>) -> Result<AnyTensor, Error> {
    let (m, n, big_n) = t.shape();
    let f = factors_for(pairs, m, n, big_n)?;
    Ok(match metric {
        None => match t {
            AnyTensor::Rational(t) => AnyTensor::Rational(apply_projector(&t, &f)?),
            AnyTensor::Float(t) => AnyTensor::Float(apply_projector(&t, &f)?),
            AnyTensor::Complex(t) => AnyTensor::Complex(apply_projector(&t, &f)?),
            AnyTensor::Gaussian(t) => AnyTensor::Gaussian(apply_projector(&t, &f)?),
        },
        Some(g) => match (t.promote(g.kind())?, g) {
            (AnyTensor::Rational(t), AnyMetric::Rational(g)) => AnyTensor::Rational(apply_projector_hermitian(&t, &g, &f)?),
            (AnyTensor::Float(t), AnyMetric::Float(g)) => AnyTensor::Float(apply_projector_hermitian(&t, &g, &f)?),
            (AnyTensor::Complex(t), AnyMetric::Complex(g)) => AnyTensor::Complex(apply_projector_hermitian(&t, &g, &f)?),
            (AnyTensor::Gaussian(t), AnyMetric::Gaussian(g)) => {
                AnyTensor::Gaussian(apply_projector_hermitian(&t, &g, &f)?)
            }
            _ => unreachable!("tensor promoted to the metric's kind"),
        },
    })
}

fn apply(io: &TensorIo, metric: Option<&PathBuf>, float: bool) -> Result<Output, Failure> {
    let t = AnyTensor::parse(&read(&io.input)?)?;
    let metric = metric.map(|p| read(p).and_then(|s| Ok(AnyMetric::parse(&s)?))).transpose()?;
    let mut out = project(t, &io.pairs, metric)?;
    if float {
        if let AnyTensor::Rational(t) = &out {
            out = AnyTensor::Float(t.map(q_to_f64));
        }
    }
    let v = out.to_json();
    match &io.output {
        Some(path) => {
            fs::write(path, format!("{v}\n")).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))?;
            Ok(Output::Json(json!({ "written": path.display().to_string() })))
        }
        None => Ok(Output::Json(v)),
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let float = cli.float;
    Ok(match cli.cmd {
        Cmd::Spectrum { shape, formula } => {
            let req = request(&shape)?;
            if formula {
                let forms: BTreeSet<AffineEigenvalue> = spec_a_affine(&req).into_values().flatten().collect();
                Output::Text(formula::emit(&forms, shape.big_n))
            } else {
                Output::Json(json!(spec_a(&req)))
            }
        }
        Cmd::Restricted { rho, sigma, mut pairs, big_n, formula } => {
            match (rho, sigma) {
                (Some(r), Some(s)) => pairs.insert(0, (r, s)),
                (None, None) => {}
                _ => return Err(Failure::Validation("--rho and --sigma go together".into())),
            }
            let req = restricted_request(&pairs, big_n)?;
            if formula {
                let mut forms = BTreeSet::new();
                for (r, s) in &pairs {
                    forms.extend(restricted_affine(r, s, &req)?);
                }
                Output::Text(formula::emit(&forms, big_n))
            } else {
                Output::Json(json!(restricted_spec_union(&pairs, &req)?))
            }
        }
        Cmd::Tilde { shape } => {
            let req = request(&shape)?;
            Output::Json(json!({
                "spectrum": spec_a(&req),
                "tilde": spec_a_tilde(&req),
                "saturated": is_saturated(shape.m, shape.n, shape.big_n),
            }))
        }
        Cmd::Lrcoef { gamma, alpha, beta } => Output::Json(json!(lr_coefficient(&gamma, &alpha, &beta))),
        Cmd::Branch { rho, sigma, mu, nu, big_n } => {
            let c = branch_coefficient(&rho, &sigma, &mu, &nu, big_n)?;
            let bound = branch_upper_bound(&rho, &sigma, &mu, &nu, big_n);
            Output::Json(json!({ "coefficient": c, "upperBound": bound }))
        }
        Cmd::WbIdempotent { m, n, delta } => Output::Json(wb_idempotent(m, n, &delta, float)?),
        Cmd::Apply { io } => apply(&io, None, float)?,
        Cmd::ApplyHermitian { io, metric } => apply(&io, Some(&metric), float)?,
        Cmd::Verify { shape, cap, seed } => {
            let report = traceless::verify::verify(shape.m, shape.n, shape.big_n, cap, seed)?;
            let v = serde_json::to_value(&report).expect("report serializes");
            if !report.passed() {
                return Err(Failure::Verification(v));
            }
            Output::Json(v)
        }
        Cmd::BmapRank { shape, cap } => {
            let rank = bmap_rank_capped(shape.m, shape.n, shape.big_n, cap)?;
            let diagrams = (1..=shape.m + shape.n).product::<usize>();
            Output::Json(json!({ "rank": rank, "diagrams": diagrams, "injective": rank == diagrams }))
        }
    })
}

fn fail(code: u8, kind: &str, message: &str) -> ExitCode {
    eprintln!("{}", json!({ "error": kind, "message": message }));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(2, "validation", e.to_string().trim()),
    };
    match run(cli) {
        Ok(Output::Json(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(m)) => fail(2, "validation", &m),
        Err(Failure::Refusal(m)) => fail(3, "refusal", &m),
        Err(Failure::Verification(report)) => {
            println!("{report}");
            fail(1, "verification", "one or more checks failed")
        }
    }
}
