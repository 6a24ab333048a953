use crate::args::{Command, Format, Opts};
use gaussratio::cfrac_engine::{
    eval_cfrac_diag, gauss_cfrac_010, gauss_cfrac_011, series_to_cfrac, series_to_cfrac_in, CFrac,
};
use gaussratio::hyp2f1_core::{hyp2f1, Bank, Params, DEFAULT_TOL};
use gaussratio::integral_rep::{
    build_representation, build_representation_at_order, eval_representation_with, example12_identity,
    moment_identity_check_with, verify_example_with, EvalOptions, Moment, DEFAULT_MAX_NODES, CORPUS, Z_GRID,
};
use gaussratio::nevanlinna::{bp_sign_on_unit_interval, classify_gauss_ratio, pick_oracle, runckel_check};
use gaussratio::scalar::parse_rational;
use gaussratio::shift_engine::{boundary_im, derive_shifts, ratio, ratio_taylor, ratio_taylor_in, Shifts};
use gaussratio::{Complex64 as C, Error};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::f64::consts::PI;
use std::path::PathBuf;

const QUADRATURE_TOL: f64 = 1e-10;
const MAX_DEPTH: usize = 100_000;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Usage(msg.into()))
}

/// Validated request, echoed as `inputs`.
#[derive(Debug, Clone, Serialize)]
pub struct Inputs {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub n1: i64,
    pub n2: i64,
    pub m: i64,
    pub z: Option<[f64; 2]>,
    pub tol: f64,
    pub max_nodes: Option<usize>,
    pub seed: u64,
    pub example: Option<usize>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    #[serde(skip)]
    raw: [Option<String>; 3],
}

pub struct Outcome {
    pub result: Value,
    pub error_estimate: Option<f64>,
    pub nodes: Option<usize>,
    pub warnings: Vec<String>,
    pub csv: Option<String>,
}

impl Outcome {
    fn plain(result: Value) -> Self {
        Outcome { result, error_estimate: None, nodes: None, warnings: Vec::new(), csv: None }
    }
}

fn number(flag: &str, s: &str) -> Res<f64> {
    let v = if s.contains('/') {
        parse_rational(s).and_then(|q| q.to_f64())
    } else {
        s.trim().parse::<f64>().ok()
    };
    match v {
        Some(v) if v.is_finite() => Ok(v),
        _ => usage(format!("--{flag}: expected a finite number, got {s:?}")),
    }
}

fn finite(flag: &str, v: Option<f64>) -> Res<Option<f64>> {
    match v {
        Some(x) if !x.is_finite() => usage(format!("--{flag}: expected a finite number, got {x}")),
        _ => Ok(v),
    }
}

/// Checks flags against the command and fills in defaults.
pub fn resolve(cmd: &Command, o: &Opts) -> Res<Inputs> {
    let example = match (cmd, o.example) {
        (Command::VerifyExample { idx }, Some(e)) if e != *idx => {
            return usage(format!("--example {e} conflicts with verify-example {idx}"))
        }
        (Command::VerifyExample { idx }, _) => Some(*idx),
        (_, e) => e,
    };
    let entry = match example {
        Some(k) if !(1..=CORPUS.len()).contains(&k) => return usage(format!("no worked example {k}; expected 1–15")),
        Some(k) => Some(CORPUS[k - 1]),
        None => None,
    };
    let given = [("a", &o.a), ("b", &o.b), ("c", &o.c)];
    let mut abc = [None; 3];
    for (k, (flag, v)) in given.iter().enumerate() {
        abc[k] = match v {
            Some(s) => Some(number(flag, s)?),
            None => entry.map(|e| [e.params.0, e.params.1, e.params.2][k]),
        };
    }
    let needs_params = !matches!(cmd, Command::VerifyExample { .. });
    if needs_params {
        if let Some((flag, _)) = given.iter().zip(&abc).find(|(_, v)| v.is_none()).map(|(g, _)| g) {
            return usage(format!("{} requires --{flag} (or --example)", cmd.name()));
        }
    }
    let (e1, e2, em) = entry.map_or((0, 1, 1), |e| e.shifts);
    let z_re = finite("z-re", o.z.or(o.z_re))?;
    let z_im = finite("z-im", o.z_im)?;
    let z = match (z_re, z_im) {
        (None, None) => None,
        (re, im) => Some([re.unwrap_or(0.0), im.unwrap_or(0.0)]),
    };
    if matches!(cmd, Command::EvalRatio | Command::Eval2f1) && z.is_none() {
        return usage(format!("{} requires --z or --z-re/--z-im", cmd.name()));
    }
    let tol = match finite("tol", o.tol)? {
        Some(t) if t <= 0.0 => return usage(format!("--tol must be positive, got {t}")),
        Some(t) => t,
        None => match cmd {
            Command::IntegralRep { .. } | Command::VerifyExample { .. } | Command::Moments => QUADRATURE_TOL,
            _ => DEFAULT_TOL,
        },
    };
    if o.format == Format::Csv && !matches!(cmd, Command::Boundary { .. }) {
        return usage(format!("--format csv is only available for boundary, not {}", cmd.name()));
    }
    let mut extra = Map::new();
    match cmd {
        Command::Cfrac { terms, exact } => {
            extra.insert("terms".into(), json!(terms));
            extra.insert("exact".into(), json!(exact));
        }
        Command::Classify { draws } => {
            extra.insert("draws".into(), json!(draws));
        }
        Command::Boundary { x, x_from, x_to, points } => {
            finite("x", *x)?;
            finite("x-from", *x_from)?;
            finite("x-to", *x_to)?;
            let range = (x_from, x_to, points);
            match (x, range) {
                (Some(_), (None, None, None)) => {}
                (None, (Some(lo), Some(hi), Some(_))) if lo <= hi => {}
                (None, (Some(_), Some(_), Some(_))) => return usage("--x-from must not exceed --x-to"),
                _ => return usage("boundary requires either --x or all of --x-from, --x-to, --points"),
            }
            extra.insert("x".into(), json!(x));
            extra.insert("x_from".into(), json!(x_from));
            extra.insert("x_to".into(), json!(x_to));
            extra.insert("points".into(), json!(points));
        }
        Command::IntegralRep { order } => {
            extra.insert("order".into(), json!(order));
        }
        _ => {}
    }
    Ok(Inputs {
        a: abc[0],
        b: abc[1],
        c: abc[2],
        n1: o.n1.unwrap_or(e1),
        n2: o.n2.unwrap_or(e2),
        m: o.m.unwrap_or(em),
        z,
        tol,
        max_nodes: o.max_nodes,
        seed: o.seed,
        example,
        extra,
        raw: [o.a.clone(), o.b.clone(), o.c.clone()],
    })
}

impl Inputs {
    fn params(&self) -> Res<Params> {
        Ok(Params::new(self.a.unwrap(), self.b.unwrap(), self.c.unwrap())?)
    }

    fn shifts(&self) -> Shifts {
        derive_shifts(self.n1, self.n2, self.m)
    }

    fn z(&self) -> Option<C> {
        self.z.map(|[re, im]| C::new(re, im))
    }

    fn eval_options(&self) -> EvalOptions {
        EvalOptions { tol: self.tol, max_nodes: self.max_nodes.unwrap_or(DEFAULT_MAX_NODES) }
    }

    /// Exact parameters; example defaults are converted from their decimal value.
    fn exact_params(&self) -> Res<[BigRational; 3]> {
        let mut out = Vec::with_capacity(3);
        for (k, flag) in ["a", "b", "c"].iter().enumerate() {
            let text = match &self.raw[k] {
                Some(s) => s.clone(),
                None => format!("{}", [self.a, self.b, self.c][k].unwrap()),
            };
            match parse_rational(&text) {
                Some(q) => out.push(q),
                None => return usage(format!("--{flag}: {text:?} is not an exact rational")),
            }
        }
        Ok([out[0].clone(), out[1].clone(), out[2].clone()])
    }
}

fn complex(v: C) -> Value {
    json!({ "re": v.re, "im": v.im })
}

pub fn run(cmd: &Command, inp: &Inputs, format: Format) -> Res<Outcome> {
    match cmd {
        Command::EvalRatio => {
            let v = ratio(&inp.params()?, &inp.shifts(), inp.z().unwrap(), inp.tol)?;
            Ok(Outcome::plain(complex(v)))
        }
        Command::Eval2f1 => {
            let v = hyp2f1(&inp.params()?, inp.z().unwrap(), inp.tol)?;
            Ok(Outcome::plain(complex(v)))
        }
        Command::Cfrac { terms, exact } => cfrac(inp, *terms, *exact),
        Command::Classify { draws } => classify(inp, *draws),
        Command::Runckel => Ok(Outcome::plain(serde_json::to_value(runckel_check(&inp.params()?)).unwrap())),
        Command::Boundary { x, x_from, x_to, points } => boundary(inp, *x, (*x_from, *x_to, *points), format),
        Command::IntegralRep { order } => integral_rep(inp, *order),
        Command::VerifyExample { idx } => verify(inp, *idx),
        Command::Moments => moments(inp),
    }
}

fn cfrac(inp: &Inputs, terms: usize, exact: bool) -> Res<Outcome> {
    let s = inp.shifts();
    let count = 2 * (terms / 2 + 1) + 2;
    let (kind, alphas, frac, terminating) = if exact {
        let [a, b, c] = inp.exact_params()?;
        let series = ratio_taylor_in(&a, &b, &c, &s, count)?;
        let sf = series_to_cfrac_in(&series, terms)?;
        let floats: Vec<f64> = sf.alphas.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        let frac = if sf.terminating { CFrac::from_coeffs(floats)? } else { CFrac::truncated(floats) };
        let text: Vec<Value> = sf.alphas.iter().map(|q| json!(q.to_string())).collect();
        ("series_exact", text, frac, sf.terminating)
    } else {
        let p = inp.params()?;
        let (kind, frac) = match (s.n1, s.n2, s.m) {
            (0, 1, 1) => ("gauss_011", gauss_cfrac_011(&p)),
            (0, 1, 0) => ("gauss_010", gauss_cfrac_010(&p)),
            _ => ("series", series_to_cfrac(&ratio_taylor(&p, &s, count)?, terms)?),
        };
        let n = frac.last_index().map_or(terms, |l| l.min(terms));
        let alphas = frac.head(n + 1).into_iter().map(|v| json!(v)).collect();
        let terminating = frac.is_terminating();
        (kind, alphas, frac, terminating)
    };
    let mut out = Outcome::plain(Value::Null);
    let value = match inp.z() {
        Some(z) => {
            let v = eval_cfrac_diag(&frac, z, inp.tol, inp.max_nodes.unwrap_or(MAX_DEPTH))?;
            out.nodes = Some(v.depth);
            if v.tiny_substitutions > 0 {
                out.warnings.push(format!("{} vanishing denominators replaced during evaluation", v.tiny_substitutions));
            }
            complex(v.value)
        }
        None => Value::Null,
    };
    out.result = json!({ "kind": kind, "alphas": alphas, "terminating": terminating, "value": value });
    Ok(out)
}

fn classify(inp: &Inputs, draws: usize) -> Res<Outcome> {
    let s = inp.shifts();
    if (s.n1, s.n2, s.m) != (0, 1, 1) {
        return Err(Error::InvalidArgument(format!(
            "classify covers the Gauss ratio (n1, n2, m) = (0, 1, 1), got ({}, {}, {})",
            s.n1, s.n2, s.m
        ))
        .into());
    }
    let p = inp.params()?;
    let class = classify_gauss_ratio(&p)?;
    let mut out = Outcome::plain(Value::Null);
    if !class.certified {
        out.warnings.push("tail sign pattern was probed numerically".into());
    }
    let mut result = serde_json::to_value(class).unwrap();
    if draws > 0 {
        let e = f64::from(class.epsilon);
        let f = |z: C| Ok(e * ratio(&p, &s, z, inp.tol)?);
        let zf = |z: C| Ok(e * z * ratio(&p, &s, z, inp.tol)?);
        let k = pick_oracle(f, 2 * class.kappa + 4, draws, inp.seed)?;
        let l = pick_oracle(zf, 2 * class.lambda + 4, draws, inp.seed)?;
        if k.max > class.kappa || l.max > class.lambda {
            out.warnings.push(format!(
                "Pick oracle found ({}, {}) negative eigenvalues, above (κ, λ) = ({}, {})",
                k.max, l.max, class.kappa, class.lambda
            ));
        }
        result["pick"] = json!({ "kappa_max": k.max, "lambda_max": l.max, "draws": draws, "seed": inp.seed });
    }
    out.result = result;
    Ok(out)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    }
}

fn boundary(
    inp: &Inputs,
    x: Option<f64>,
    range: (Option<f64>, Option<f64>, Option<usize>),
    format: Format,
) -> Res<Outcome> {
    let p = inp.params()?;
    let s = inp.shifts();
    let sign = bp_sign_on_unit_interval(&p, &s).ok();
    let xs = match (x, range) {
        (Some(x), _) => vec![x],
        (None, (Some(lo), Some(hi), Some(n))) => linspace(lo, hi, n),
        _ => unreachable!("validated in resolve"),
    };
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let im = boundary_im(&p, &s, x, Bank::Upper, inp.tol)?;
        rows.push((x, im));
    }
    let mut out = Outcome::plain(Value::Null);
    if format == Format::Csv {
        let mut csv = String::from("x,density\n");
        for (x, im) in &rows {
            csv.push_str(&format!("{x},{}\n", im / PI));
        }
        out.csv = Some(csv);
    }
    let rows: Vec<Value> = rows.iter().map(|&(x, im)| json!({ "x": x, "im": im, "density": im / PI })).collect();
    out.result = json!({ "bp_sign": sign, "rows": rows });
    Ok(out)
}

fn integral_rep(inp: &Inputs, order: Option<usize>) -> Res<Outcome> {
    let p = inp.params()?;
    let s = inp.shifts();
    let rep = match order {
        Some(n) => build_representation_at_order(&p, &s, n)?,
        None => build_representation(&p, &s)?,
    };
    let mut out = Outcome::plain(Value::Null);
    let (value, direct) = match inp.z() {
        Some(z) => {
            let q = eval_representation_with(&rep, z, inp.eval_options())?;
            out.error_estimate = Some(q.abs_error_estimate);
            out.nodes = Some(q.nodes_used);
            let direct = ratio(&p, &s, z, DEFAULT_TOL).ok().map(complex);
            (complex(q.value), direct.unwrap_or(Value::Null))
        }
        None => (Value::Null, Value::Null),
    };
    out.result = json!({ "representation": rep, "value": value, "direct": direct });
    Ok(out)
}

fn verify(inp: &Inputs, idx: usize) -> Res<Outcome> {
    let p = Params::new(inp.a.unwrap(), inp.b.unwrap(), inp.c.unwrap())?;
    let grid = match inp.z() {
        Some(z) => vec![z],
        None => Z_GRID.to_vec(),
    };
    let report = verify_example_with(idx, &p, &grid, inp.eval_options())?;
    let mut out = Outcome::plain(Value::Null);
    let mut estimate = report.points.iter().map(|q| q.abs_error_estimate).fold(0.0, f64::max);
    let mut identity = Value::Null;
    if idx == 12 {
        let mut rows = Vec::new();
        let mut nodes = 0;
        for z in [1.0, 0.5, 3.0] {
            let q = example12_identity(C::new(z, 0.0), inp.tol.min(1e-12))?;
            let want = z / (1.0 + z).ln();
            nodes += q.nodes_used;
            estimate = estimate.max(q.abs_error_estimate);
            rows.push(json!({
                "z": z,
                "value": q.value.re,
                "expected": want,
                "residual": (q.value.re - want).abs() + q.value.im.abs(),
                "abs_error_estimate": q.abs_error_estimate,
            }));
        }
        out.nodes = Some(nodes);
        identity = Value::Array(rows);
    }
    out.error_estimate = Some(estimate);
    out.result = json!({ "report": report, "identity": identity });
    Ok(out)
}

fn moments(inp: &Inputs) -> Res<Outcome> {
    let rep = build_representation(&inp.params()?, &inp.shifts())?;
    let mut out = Outcome::plain(Value::Null);
    let mut result = Map::new();
    let mut estimate = 0.0f64;
    for (name, which) in [("z0", Moment::Z0), ("z1", Moment::Z1), ("z01", Moment::Z01)] {
        let v = match moment_identity_check_with(&rep, which, inp.eval_options()) {
            Ok(m) => {
                estimate = estimate.max(m.abs_error_estimate);
                json!({ "lhs": m.lhs, "rhs": m.rhs, "rel_error": m.rel_error(), "abs_error_estimate": m.abs_error_estimate })
            }
            Err(e) if e.is_precondition() => {
                out.warnings.push(format!("{name}: {e}"));
                Value::Null
            }
            Err(e) => return Err(e.into()),
        };
        result.insert(name.into(), v);
    }
    out.error_estimate = Some(estimate);
    out.result = Value::Object(result);
    Ok(out)
}
