//! Command dispatch and reports.

use std::collections::BTreeMap;
use std::fmt;

use derivkit::derivation::{forced_candidate, ode_residual, probe_polynomials, SingularWitness};
use derivkit::isotropy::isotropy_shamsuddin;
use derivkit::series::solve_through;
use derivkit::{
    Automorphism, BPoly, Derivation, OdeSolution, Point, RawEndo, ShamsuddinDerivation,
    SingularCertificate, UPoly,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::parse::{
    parse_pair, parse_point, parse_poly, parse_word, print_poly, ParseError, WordError,
};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{field}: {source}")]
    Parse {
        field: &'static str,
        source: ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(#[from] derivkit::Error),
}

impl CliError {
    /// 1 for domain errors, 2 for malformed input or usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse { .. } | CliError::Usage(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Simple,
    Isotropy,
    Commute,
    Conjugate,
    Flow,
    Stable,
    Singular,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Simple => "simple",
            Command::Isotropy => "isotropy",
            Command::Commute => "commute",
            Command::Conjugate => "conjugate",
            Command::Flow => "flow",
            Command::Stable => "stable",
            Command::Singular => "singular",
        }
    }
}

/// Raw textual inputs of a job, as given on the command line or stdin.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Inputs {
    pub a: Option<String>,
    pub b: Option<String>,
    pub dx: Option<String>,
    pub dy: Option<String>,
    pub word: Option<String>,
    pub map: Option<String>,
    pub point: Option<String>,
    pub poly: Option<String>,
}

impl Inputs {
    pub const KEYS: [&'static str; 8] = ["a", "b", "dx", "dy", "word", "map", "point", "poly"];

    pub fn slot(&mut self, key: &str) -> Option<&mut Option<String>> {
        Some(match key {
            "a" => &mut self.a,
            "b" => &mut self.b,
            "dx" => &mut self.dx,
            "dy" => &mut self.dy,
            "word" => &mut self.word,
            "map" => &mut self.map,
            "point" => &mut self.point,
            "poly" => &mut self.poly,
            _ => return None,
        })
    }

    /// Reads `key: value` lines; blank lines and `#` comments are skipped.
    /// Values already set take precedence over the text.
    pub fn merge_key_values(&mut self, text: &str) -> Result<(), CliError> {
        let mut seen = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(CliError::Usage(format!(
                    "stdin line {}: expected `key: value`",
                    n + 1
                )));
            };
            let key = key.trim();
            if seen.contains(&key.to_string()) {
                return Err(CliError::Usage(format!(
                    "stdin line {}: duplicate key `{key}`",
                    n + 1
                )));
            }
            seen.push(key.to_string());
            let slot = self.slot(key).ok_or_else(|| {
                CliError::Usage(format!(
                    "stdin line {}: unknown key `{key}` (expected one of {})",
                    n + 1,
                    Inputs::KEYS.join(", ")
                ))
            })?;
            if slot.is_none() {
                *slot = Some(value.trim().to_string());
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub inputs: Inputs,
    pub order: usize,
    pub probe_degree: usize,
}

/// Outcome of a job; serializes to the structured report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: BTreeMap<&'static str, String>,
    pub verdict: String,
    pub witness: Value,
    pub flags: Vec<String>,
    pub version: &'static str,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        for (k, v) in &self.inputs {
            writeln!(f, "input {k}: {v}")?;
        }
        writeln!(f, "verdict: {}", self.verdict)?;
        if let Value::Object(map) = &self.witness {
            for (k, v) in map {
                write_value(f, k, v)?;
            }
        }
        for flag in &self.flags {
            writeln!(f, "flag: {flag}")?;
        }
        Ok(())
    }
}

fn write_value(f: &mut fmt::Formatter<'_>, key: &str, v: &Value) -> fmt::Result {
    match v {
        Value::String(s) => writeln!(f, "{key}: {s}"),
        Value::Array(items) if key.ends_with("_coefficients") => {
            let parts: Vec<String> = items
                .iter()
                .map(|v| v.as_str().unwrap_or_default().to_string())
                .collect();
            writeln!(f, "{key}: {}", parts.join(", "))
        }
        Value::Array(items) => {
            for item in items {
                write_value(f, key, item)?;
            }
            Ok(())
        }
        Value::Null => Ok(()),
        other => writeln!(f, "{key}: {other}"),
    }
}

fn field<'a>(
    value: &'a Option<String>,
    name: &'static str,
    command: Command,
) -> Result<&'a str, CliError> {
    value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("`{}` needs --{name}", command.name())))
}

fn poly_field(text: &str, name: &'static str) -> Result<BPoly, CliError> {
    parse_poly(text).map_err(|source| CliError::Parse {
        field: name,
        source,
    })
}

fn x_poly_field(text: &str, name: &'static str) -> Result<UPoly, CliError> {
    poly_field(text, name)?
        .as_x_poly()
        .ok_or_else(|| CliError::Parse {
            field: name,
            source: ParseError::Semantic("expected a polynomial in x only".into()),
        })
}

struct Setup {
    inputs: BTreeMap<&'static str, String>,
}

impl Setup {
    fn record(&mut self, key: &'static str, value: impl fmt::Display) {
        self.inputs.insert(key, value.to_string());
    }

    /// `(a, b)` from `--a/--b`, or recognized from `--dx/--dy` of the form
    /// `1`, `a(x) y + b(x)`.
    fn shamsuddin(&mut self, job: &JobSpec) -> Result<ShamsuddinDerivation, CliError> {
        let i = &job.inputs;
        if i.a.is_some() || i.b.is_some() {
            let a = x_poly_field(field(&i.a, "a", job.command)?, "a")?;
            let b = x_poly_field(field(&i.b, "b", job.command)?, "b")?;
            self.record("a", &a);
            self.record("b", &b);
            return Ok(ShamsuddinDerivation::new(a, b));
        }
        let d = self.general(job)?;
        if *d.dx() != BPoly::one() || d.dy().degree_y().unwrap_or(0) > 1 {
            return Err(CliError::Usage(format!(
                "`{}` needs a derivation d/dx + (a(x)*y + b(x))*d/dy; give --a and --b",
                job.command.name()
            )));
        }
        Ok(ShamsuddinDerivation::new(
            d.dy().y_coeff(1),
            d.dy().y_coeff(0),
        ))
    }

    fn general(&mut self, job: &JobSpec) -> Result<Derivation, CliError> {
        let i = &job.inputs;
        let have_ab = i.a.is_some() || i.b.is_some();
        let have_d = i.dx.is_some() || i.dy.is_some();
        match (have_ab, have_d) {
            (true, true) => Err(CliError::Usage(
                "give either --a/--b or --dx/--dy, not both".into(),
            )),
            (true, false) => Ok(self.shamsuddin(job)?.to_derivation()),
            (false, _) => {
                let dx = poly_field(field(&i.dx, "dx", job.command)?, "dx")?;
                let dy = poly_field(field(&i.dy, "dy", job.command)?, "dy")?;
                self.record("dx", print_poly(&dx));
                self.record("dy", print_poly(&dy));
                Ok(Derivation::new(dx, dy))
            }
        }
    }

    fn word(&mut self, job: &JobSpec) -> Result<Automorphism, CliError> {
        let text = field(&job.inputs.word, "word", job.command)?;
        let w = parse_word(text).map_err(|e| match e {
            WordError::Parse(source) => CliError::Parse {
                field: "word",
                source,
            },
            WordError::Generator(e) => CliError::Domain(e),
        })?;
        self.record("word", &w);
        Ok(w)
    }

    fn endo(&mut self, job: &JobSpec) -> Result<RawEndo, CliError> {
        match (&job.inputs.word, &job.inputs.map) {
            (Some(_), Some(_)) => Err(CliError::Usage(
                "give either --word or --map, not both".into(),
            )),
            (Some(_), None) => Ok(self.word(job)?.expand()),
            (None, Some(text)) => {
                let e = parse_pair(text).map_err(|source| CliError::Parse {
                    field: "map",
                    source,
                })?;
                self.record("map", format!("{}; {}", e.f(), e.g()));
                Ok(e)
            }
            (None, None) => Err(CliError::Usage(format!(
                "`{}` needs --word or --map",
                job.command.name()
            ))),
        }
    }

    fn point(&mut self, job: &JobSpec) -> Result<Point, CliError> {
        let text = field(&job.inputs.point, "point", job.command)?;
        let p = parse_point(text).map_err(|source| CliError::Parse {
            field: "point",
            source,
        })?;
        self.record("point", format!("{}, {}", p.x, p.y));
        Ok(p)
    }
}

fn report(
    job: &JobSpec,
    setup: Setup,
    verdict: impl Into<String>,
    witness: Value,
    flags: Vec<String>,
) -> Report {
    Report {
        command: job.command.name(),
        inputs: setup.inputs,
        verdict: verdict.into(),
        witness,
        flags,
        version: SCHEMA_VERSION,
    }
}

/// Runs one job.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let mut setup = Setup {
        inputs: BTreeMap::new(),
    };
    match job.command {
        Command::Simple => {
            let sd = setup.shamsuddin(job)?;
            let (a, b) = (sd.a(), sd.b());
            let d = sd.to_derivation();
            let stable_probes: Vec<String> = probe_polynomials(job.probe_degree)
                .iter()
                .filter(|f| d.stabilizes_ideal(f).unwrap_or(false))
                .map(print_poly)
                .collect();
            setup.record("probe_degree", job.probe_degree);
            let (verdict, mut witness) = match sd.solve_ode() {
                OdeSolution::Unique(h) | OdeSolution::Family(h) => {
                    let line = BPoly::y() - BPoly::from_x(h.clone());
                    let reason = if a.is_zero() {
                        "a = 0: y - h with h' = b spans a stable ideal"
                    } else {
                        "y - h with h' = a*h + b spans a stable ideal"
                    };
                    (
                        "not simple",
                        json!({ "h": h.to_string(), "stable_ideal": print_poly(&line), "reason": reason }),
                    )
                }
                OdeSolution::NoSolution => {
                    let witness = match forced_candidate(a, b) {
                        Some(h) => json!({
                            "reason": "the only candidate h fails the equation h' = a*h + b",
                            "forced_candidate": h.to_string(),
                            "residual": ode_residual(a, b, &h).to_string(),
                        }),
                        None => json!({
                            "reason": "deg b < deg a, so h' = a*h + b has no polynomial solution",
                        }),
                    };
                    ("simple", witness)
                }
            };
            witness["stable_probes"] = json!(stable_probes);
            Ok(report(job, setup, verdict, witness, vec![]))
        }
        Command::Isotropy => {
            let sd = setup.shamsuddin(job)?;
            let desc = isotropy_shamsuddin(sd.a(), sd.b());
            let law = desc.group_law().ok().map(|l| l.formula());
            let witness = json!({
                "family": desc.family_name(),
                "parametrization": desc.parametrization(),
                "group_law": law,
                "notes": desc.notes(),
            });
            let flags = desc.flags().into_iter().map(String::from).collect();
            Ok(report(job, setup, desc.family_name(), witness, flags))
        }
        Command::Commute => {
            let d = setup.general(job)?;
            let e = setup.endo(job)?;
            let [rx, ry] = e.commutation_residuals(&d);
            if rx.is_zero() && ry.is_zero() {
                Ok(report(job, setup, "commutes", json!({}), vec![]))
            } else {
                let witness =
                    json!({ "residual_x": print_poly(&rx), "residual_y": print_poly(&ry) });
                Ok(report(job, setup, "does not commute", witness, vec![]))
            }
        }
        Command::Conjugate => {
            let d = setup.general(job)?;
            if job.inputs.map.is_some() {
                return Err(CliError::Usage(
                    "`conjugate` needs an invertible --word, not --map".into(),
                ));
            }
            let w = setup.word(job)?;
            let c = w.conjugate(&d);
            let witness = json!({ "dx": print_poly(c.dx()), "dy": print_poly(c.dy()) });
            let verdict = if c == d { "unchanged" } else { "changed" };
            Ok(report(job, setup, verdict, witness, vec![]))
        }
        Command::Flow => {
            let d = setup.general(job)?;
            let p = setup.point(job)?;
            setup.record("order", job.order);
            let s = solve_through(&d, &p, job.order)?;
            let coeffs =
                |v: &[derivkit::Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            let witness = json!({
                "phi": s.phi().to_string(),
                "psi": s.psi().to_string(),
                "phi_coefficients": coeffs(s.phi().coeffs()),
                "psi_coefficients": coeffs(s.psi().coeffs()),
            });
            Ok(report(job, setup, "solution", witness, vec![]))
        }
        Command::Stable => {
            let d = setup.general(job)?;
            let f = poly_field(field(&job.inputs.poly, "poly", job.command)?, "poly")?;
            setup.record("poly", print_poly(&f));
            match d.stable_cofactor(&f)? {
                Some(q) => Ok(report(
                    job,
                    setup,
                    "stable",
                    json!({ "quotient": print_poly(&q) }),
                    vec![],
                )),
                None => Ok(report(job, setup, "not stable", json!({}), vec![])),
            }
        }
        Command::Singular => {
            let d = setup.general(job)?;
            let (verdict, witness) = match d.certify_no_singular_points()? {
                SingularCertificate::NoSingularPoints => ("no singular points", json!({})),
                SingularCertificate::CommonFactor(c) => {
                    ("common factor", json!({ "common_factor": print_poly(&c) }))
                }
                SingularCertificate::SingularPointFound(w) => {
                    ("singular point found", witness_json(&w))
                }
            };
            Ok(report(job, setup, verdict, witness, vec![]))
        }
    }
}

fn witness_json(w: &SingularWitness) -> Value {
    json!({
        "point": w.point.as_ref().map(|p| format!("{}, {}", p.x, p.y)),
        "description": w.to_string(),
        "minimal_polynomial": w.x_min_poly.display_in("t").to_string(),
        "swapped": w.swapped,
    })
}
