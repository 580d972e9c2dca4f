//! Tensor files: `{"m","n","N","scalar","components"}` with components
//! row-major over `(i₁…i_m, j₁…j_n)`. Metric files: `{"N","scalar","g"}`
//! with `g` row-major and entries encoded like tensor components.

use num_complex::{Complex, Complex64};
use serde_json::{json, Value};

use super::dense::DenseTensor;
use super::hermitian::HermitianMetric;
use super::scalar::ScalarKind;
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

/// A tensor of whichever scalar kind a file declared.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTensor {
    Rational(DenseTensor<Q>),
    Float(DenseTensor<f64>),
    Complex(DenseTensor<Complex64>),
    Gaussian(DenseTensor<Complex<Q>>),
}

fn parse_kind(s: &str) -> Result<ScalarKind> {
    match s {
        "rational" | "exact-rational" => Ok(ScalarKind::Rational),
        "float" => Ok(ScalarKind::Float),
        "complex" | "complex-float" => Ok(ScalarKind::Complex),
        "gaussian" => Ok(ScalarKind::Gaussian),
        other => Err(Error::Parse(format!("unknown scalar kind {other:?}"))),
    }
}

fn field_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("missing or invalid field {key:?}")))
}

fn rational(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap().into())),
        other => Err(Error::Parse(format!(
            "expected a rational \"p/q\", got {other}"
        ))),
    }
}

fn float(v: &Value) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::Parse(format!("expected a number, got {v}")))
}

fn complex(v: &Value) -> Result<Complex64> {
    pair(v).and_then(|(re, im)| Ok(Complex64::new(float(re)?, float(im)?)))
}

fn gaussian(v: &Value) -> Result<Complex<Q>> {
    pair(v).and_then(|(re, im)| Ok(Complex::new(rational(re)?, rational(im)?)))
}

fn read_kind(v: &Value) -> Result<ScalarKind> {
    match v.get("scalar").or_else(|| v.get("scalarKind")) {
        None => Ok(ScalarKind::Rational),
        Some(Value::String(s)) => parse_kind(s),
        Some(other) => Err(Error::Parse(format!("invalid scalar kind {other}"))),
    }
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing {key} array")))
}

fn pair(v: &Value) -> Result<(&Value, &Value)> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => Ok((re, im)),
        _ => Err(Error::Parse(format!("expected [re, im], got {v}"))),
    }
}

impl AnyTensor {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyTensor::Rational(_) => ScalarKind::Rational,
            AnyTensor::Float(_) => ScalarKind::Float,
            AnyTensor::Complex(_) => ScalarKind::Complex,
            AnyTensor::Gaussian(_) => ScalarKind::Gaussian,
        }
    }

    /// `(m, n, N)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        match self {
            AnyTensor::Rational(t) => (t.m(), t.n(), t.dim()),
            AnyTensor::Float(t) => (t.m(), t.n(), t.dim()),
            AnyTensor::Complex(t) => (t.m(), t.n(), t.dim()),
            AnyTensor::Gaussian(t) => (t.m(), t.n(), t.dim()),
        }
    }

    /// Accepts `scalar` or `scalarKind`, defaulting to rational.
    pub fn from_json(v: &Value) -> Result<Self> {
        let m = field_usize(v, "m")?;
        let n = field_usize(v, "n")?;
        let big_n = field_usize(v, "N")?;
        let kind = read_kind(v)?;
        let comps = array(v, "components")?;
        Ok(match kind {
            ScalarKind::Rational => AnyTensor::Rational(DenseTensor::new(
                m,
                n,
                big_n,
                comps.iter().map(rational).collect::<Result<_>>()?,
            )?),
            ScalarKind::Float => AnyTensor::Float(DenseTensor::new(
                m,
                n,
                big_n,
                comps.iter().map(float).collect::<Result<_>>()?,
            )?),
            ScalarKind::Complex => AnyTensor::Complex(DenseTensor::new(
                m,
                n,
                big_n,
                comps.iter().map(complex).collect::<Result<_>>()?,
            )?),
            ScalarKind::Gaussian => AnyTensor::Gaussian(DenseTensor::new(
                m,
                n,
                big_n,
                comps.iter().map(gaussian).collect::<Result<_>>()?,
            )?),
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_json(&parse_value(s)?)
    }

    /// Re-encodes in a wider scalar kind. Rational widens to anything,
    /// float to complex; other conversions are refused.
    pub fn promote(self, kind: ScalarKind) -> Result<Self> {
        Ok(match (self, kind) {
            (t, k) if t.kind() == k => t,
            (AnyTensor::Rational(t), ScalarKind::Float) => AnyTensor::Float(t.to_kind()),
            (AnyTensor::Rational(t), ScalarKind::Complex) => AnyTensor::Complex(t.to_kind()),
            (AnyTensor::Rational(t), ScalarKind::Gaussian) => AnyTensor::Gaussian(t.to_kind()),
            (AnyTensor::Float(t), ScalarKind::Complex) => {
                AnyTensor::Complex(t.map(|&x| Complex64::new(x, 0.0)))
            }
            (t, k) => {
                return Err(Error::InvalidArgument(format!(
                    "cannot convert a {:?} tensor to {k:?}",
                    t.kind()
                )))
            }
        })
    }

    pub fn to_json(&self) -> Value {
        let (m, n, big_n) = self.shape();
        let components: Vec<Value> = match self {
            AnyTensor::Rational(t) => t.components().iter().map(|x| json!(format_q(x))).collect(),
            AnyTensor::Float(t) => t.components().iter().map(|x| json!(x)).collect(),
            AnyTensor::Complex(t) => t.components().iter().map(|z| json!([z.re, z.im])).collect(),
            AnyTensor::Gaussian(t) => t
                .components()
                .iter()
                .map(|z| json!([format_q(&z.re), format_q(&z.im)]))
                .collect(),
        };
        json!({ "m": m, "n": n, "N": big_n, "scalar": self.kind(), "components": components })
    }
}

fn parse_value(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// A hermitian metric of whichever scalar kind a file declared.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMetric {
    Rational(HermitianMetric<Q>),
    Float(HermitianMetric<f64>),
    Complex(HermitianMetric<Complex64>),
    Gaussian(HermitianMetric<Complex<Q>>),
}

impl AnyMetric {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyMetric::Rational(_) => ScalarKind::Rational,
            AnyMetric::Float(_) => ScalarKind::Float,
            AnyMetric::Complex(_) => ScalarKind::Complex,
            AnyMetric::Gaussian(_) => ScalarKind::Gaussian,
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let big_n = field_usize(v, "N")?;
        let g = array(v, "g")?;
        Ok(match read_kind(v)? {
            ScalarKind::Rational => AnyMetric::Rational(HermitianMetric::new(
                big_n,
                g.iter().map(rational).collect::<Result<_>>()?,
            )?),
            ScalarKind::Float => AnyMetric::Float(HermitianMetric::new(
                big_n,
                g.iter().map(float).collect::<Result<_>>()?,
            )?),
            ScalarKind::Complex => AnyMetric::Complex(HermitianMetric::new(
                big_n,
                g.iter().map(complex).collect::<Result<_>>()?,
            )?),
            ScalarKind::Gaussian => AnyMetric::Gaussian(HermitianMetric::new(
                big_n,
                g.iter().map(gaussian).collect::<Result<_>>()?,
            )?),
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_json(&parse_value(s)?)
    }
}
