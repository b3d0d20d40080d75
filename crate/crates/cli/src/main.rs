//! `cdindex`: flag enumeration, cd-indices, subdivisions and toric polynomials from JSON input.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cdindex::complex::{
    barycentric_subdivision, face_poset, find_shelling, is_gorenstein, make_boolean, make_boundary_simplex, make_cube3,
    make_polygon, make_simplex, make_stacked, verify_shelling, ShellingSearch, SimplicialComplex,
};
use cdindex::io;
use cdindex::poset::{is_eulerian, is_lower_eulerian};
use cdindex::toric::{toric, Morphism};
use cdindex::{
    ab_index, cd_index, decompose_cd, flag_f, flag_h, local_h, local_index, AbPolynomial, CdPolynomial, Error,
    FlagVector, GradedPoset, SubdivisionMap, UniPolynomial,
};

const EXIT_OK: u8 = 0;
const EXIT_IO: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "cdindex", version, about = "Flag enumeration, cd-index and toric h-polynomials of graded posets")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized searches.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for per-element computations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flag vectors, ab-index, cd-index or local indices of a poset or complex.
    Compute {
        /// Poset or complex JSON; `-` or omitted reads standard input.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Checks one property; exits 2 when it fails. Complexes get a maximum except for `lower-eulerian`.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        input: Option<String>,
    },
    /// cd-index decomposition of a subdivision over the faces of its base.
    Decompose {
        #[arg(long)]
        input: Option<String>,
    },
    /// Toric g- and h-polynomials of a bounded graded poset.
    Toric {
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = ToricWhat::Both)]
        what: ToricWhat,
    },
    /// Local h-polynomials of a strong formal subdivision.
    Localh {
        #[arg(long)]
        input: Option<String>,
    },
    /// The morphisms f and g applied to an ab- or cd-polynomial, or to the ab-index of a poset.
    Morphism {
        #[arg(long, value_enum)]
        what: MorphismWhat,
        /// Polynomial text such as `aa + 3*ab + 3*ba + bb` or `c^2 + 2*d`.
        #[arg(long, conflicts_with = "input")]
        poly: Option<String>,
        /// Poset or complex JSON, or a file holding polynomial text.
        #[arg(long)]
        input: Option<String>,
    },
    /// Writes a generated complex, poset or subdivision as JSON.
    Generate {
        #[arg(long, value_enum)]
        shape: Shape,
        /// Dimension for simplex, boundary, stacked and barycentric.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of sides of a polygon or rank of a boolean algebra.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Number of simplices of a stacked polytope.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Flagf,
    Flagh,
    Ab,
    Cd,
    Local,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Graded,
    Eulerian,
    LowerEulerian,
    Gorenstein,
    Shelling,
    StrongEulerian,
    StrongFormal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ToricWhat {
    G,
    H,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MorphismWhat {
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    Simplex,
    Boundary,
    Polygon,
    Cube,
    Boolean,
    Stacked,
    Barycentric,
}

/// A failed run: exit code and message for standard error.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::DuplicateId(_) | Error::UnknownId(_) | Error::CycleDetected => EXIT_IO,
            Error::DomainError(_) => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Report text and the exit code it carries.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: EXIT_OK }
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn read_input(path: Option<&str>) -> std::result::Result<String, Failure> {
    let io_err = |e: std::io::Error| Failure { code: EXIT_IO, message: format!("cannot read input: {e}") };
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(io_err),
    }
}

fn read_json(path: Option<&str>) -> std::result::Result<Value, Failure> {
    Ok(io::parse_json(&read_input(path)?)?)
}

/// A poset given directly, or the face poset of a complex with a maximum adjoined.
fn poset_input(v: &Value) -> std::result::Result<GradedPoset, Failure> {
    if v.get("facets").is_some() {
        Ok(face_poset(&io::complex_from_value(v)?, true))
    } else {
        Ok(io::poset_from_value(v)?)
    }
}

fn with_schema(mut body: Map<String, Value>) -> String {
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.append(&mut body);
    io::to_pretty(&Value::Object(out))
}

fn object(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn flag_text(f: &FlagVector) -> String {
    let mut s = String::new();
    for m in f.masks() {
        let _ = writeln!(s, "{} {}", io::mask_key(m), f.get(m));
    }
    s
}

fn require_eulerian(p: &GradedPoset) -> std::result::Result<(), Failure> {
    if is_eulerian(p)? {
        Ok(())
    } else {
        Err(Error::NotEulerian.into())
    }
}

fn compute(input: Option<&str>, what: What, format: Format) -> Outcome {
    let p = poset_input(&read_json(input)?)?;
    let json = format == Format::Json;
    let text = match what {
        What::Flagf | What::Flagh => {
            let (key, f) = if what == What::Flagf { ("flag_f", flag_f(&p)?) } else { ("flag_h", flag_h(&p)?) };
            if json {
                with_schema(object(vec![(key, io::flag_to_value(&f))]))
            } else {
                flag_text(&f)
            }
        }
        What::Ab => {
            let ab = ab_index(&p)?;
            if json {
                with_schema(object(vec![("ab", io::nc_to_value(&ab))]))
            } else {
                format!("{ab}\n")
            }
        }
        What::Cd => {
            require_eulerian(&p)?;
            let cd = cd_index(&p)?;
            if json {
                with_schema(object(vec![
                    ("verdicts", json!({ "eulerian": true })),
                    ("ab", io::nc_to_value(&ab_index(&p)?)),
                    ("cd", io::nc_to_value(&cd)),
                ]))
            } else {
                format!("{cd}\n")
            }
        }
        What::Local => {
            let l = local_index(&p)?;
            if json {
                with_schema(object(vec![
                    ("verdicts", json!({ "near_eulerian": true })),
                    ("local_ab", io::nc_to_value(&l.ab)),
                    ("local_cd", io::nc_to_value(&l.cd)),
                    ("local_flag", io::nc_to_value(&l.flag)),
                ]))
            } else {
                format!("local ab: {}\nlocal cd: {}\nlocal flag: {}\n", l.ab, l.cd, l.flag)
            }
        }
    };
    Ok(Report::ok(text))
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Graded => "graded",
        Property::Eulerian => "eulerian",
        Property::LowerEulerian => "lower-eulerian",
        Property::Gorenstein => "gorenstein",
        Property::Shelling => "shelling",
        Property::StrongEulerian => "strong-eulerian",
        Property::StrongFormal => "strong-formal",
    }
}

fn verdict(
    property: Property,
    holds: bool,
    details: Vec<String>,
    extra: Option<(&str, Value)>,
    format: Format,
) -> Report {
    let name = property_name(property);
    let text = if format == Format::Json {
        let mut body = object(vec![("property", json!(name)), ("holds", json!(holds)), ("details", json!(details))]);
        if let Some((k, v)) = extra {
            body.insert(k.into(), v);
        }
        with_schema(body)
    } else {
        let mut s = format!("{name}: {holds}\n");
        for d in &details {
            let _ = writeln!(s, "  {d}");
        }
        if let Some((k, Value::Array(items))) = &extra {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(s, "  {k}: {}", parts.join(" "));
        }
        s
    };
    Report { text, code: if holds { EXIT_OK } else { EXIT_VALIDATION } }
}

fn poset_verdict(property: Property, p: &GradedPoset) -> (bool, Vec<String>) {
    let result = match property {
        Property::Graded => Ok(p.is_graded()),
        Property::Eulerian => is_eulerian(p),
        _ => is_lower_eulerian(p),
    };
    match result {
        Ok(true) => (true, Vec::new()),
        Ok(false) => (false, vec![format!("poset is not {}", property_name(property))]),
        Err(e) => (false, vec![e.to_string()]),
    }
}

fn shelling_verdict(
    v: &Value,
    k: &SimplicialComplex,
    seed: u64,
) -> std::result::Result<(bool, Vec<String>, Value), Failure> {
    if let Some(order) = v.get("order") {
        let order: Vec<Vec<String>> = serde_json::from_value(order.clone())
            .map_err(|e| Failure { code: EXIT_IO, message: format!("bad shelling order: {e}") })?;
        let ok = verify_shelling(k, &order)?;
        let details = if ok { Vec::new() } else { vec!["given order is not a shelling".into()] };
        return Ok((ok, details, json!(order)));
    }
    Ok(match find_shelling(k, seed)? {
        ShellingSearch::Found(order) => (true, Vec::new(), json!(order)),
        ShellingSearch::Exhausted => (false, vec!["no shelling exists".into()], Value::Null),
        ShellingSearch::Cutoff => (false, vec!["search budget exhausted before a decision".into()], Value::Null),
    })
}

fn verify(input: Option<&str>, property: Property, format: Format, seed: u64) -> Outcome {
    let v = read_json(input)?;
    Ok(match property {
        Property::Graded | Property::Eulerian | Property::LowerEulerian => {
            let p = if property == Property::LowerEulerian {
                io::poset_or_complex_from_value(&v)?
            } else {
                poset_input(&v)?
            };
            let (holds, details) = poset_verdict(property, &p);
            verdict(property, holds, details, None, format)
        }
        Property::Gorenstein => {
            let holds = is_gorenstein(&io::complex_from_value(&v)?)?;
            let details = if holds { Vec::new() } else { vec!["complex is not Gorenstein".into()] };
            verdict(property, holds, details, None, format)
        }
        Property::Shelling => {
            let k = io::complex_from_value(&v)?;
            let (holds, details, order) = shelling_verdict(&v, &k, seed)?;
            verdict(property, holds, details, Some(("order", order)), format)
        }
        Property::StrongEulerian | Property::StrongFormal => {
            let m = io::subdivision_from_value(&v)?;
            let report = if property == Property::StrongEulerian {
                m.validate_strong_eulerian()
            } else {
                m.validate_strong_formal()
            };
            let details = report.failures.iter().map(|(e, r)| format!("{e}: {r}")).collect();
            verdict(property, report.valid, details, None, format)
        }
    })
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

fn subdivision_input(input: Option<&str>) -> std::result::Result<SubdivisionMap, Failure> {
    Ok(io::subdivision_from_value(&read_json(input)?)?)
}

fn decompose(input: Option<&str>, format: Format) -> Outcome {
    let m = subdivision_input(input)?;
    let d = decompose_cd(&m)?;
    let text = if format == Format::Json {
        let rows: Vec<Value> = d
            .rows
            .iter()
            .map(|r| {
                json!({
                    "sigma": r.sigma,
                    "rank": r.rank,
                    "local_cd": io::nc_to_value(&r.local_cd),
                    "upper_cd": io::nc_to_value(&r.upper_cd),
                })
            })
            .collect();
        with_schema(object(vec![
            ("verdicts", json!({ "strong_eulerian": true, "eulerian": true })),
            ("rows", json!(rows)),
            ("total", io::nc_to_value(&d.total)),
        ]))
    } else {
        let rows: Vec<Vec<String>> = d
            .rows
            .iter()
            .map(|r| vec![r.sigma.clone(), r.rank.to_string(), r.local_cd.to_string(), r.upper_cd.to_string()])
            .collect();
        format!("{}total: {}\n", table(&["sigma", "rank", "local_cd", "upper_cd"], &rows), d.total)
    };
    Ok(Report::ok(text))
}

fn toric_cmd(input: Option<&str>, what: ToricWhat, format: Format) -> Outcome {
    let p = poset_input(&read_json(input)?)?;
    let pair = toric(&p)?;
    let eulerian = is_eulerian(&p)?;
    let show_g = what != ToricWhat::H;
    let show_h = what != ToricWhat::G;
    let text = if format == Format::Json {
        let mut body = object(vec![("verdicts", json!({ "eulerian": eulerian })), ("rank", json!(pair.rank))]);
        if show_g {
            body.insert("g".into(), io::uni_to_value(&pair.g));
        }
        if show_h {
            body.insert("h".into(), io::uni_to_value(&pair.h));
        }
        with_schema(body)
    } else {
        let mut s = String::new();
        if show_g {
            let _ = writeln!(s, "g: {}", pair.g);
        }
        if show_h {
            let _ = writeln!(s, "h: {}", pair.h);
        }
        s
    };
    Ok(Report::ok(text))
}

fn localh(input: Option<&str>, format: Format) -> Outcome {
    let m = subdivision_input(input)?;
    let t = local_h(&m)?;
    let text = if format == Format::Json {
        let rows: Vec<Value> = t
            .rows
            .iter()
            .map(|r| json!({ "sigma": r.sigma, "rank": r.rank, "ell": io::uni_to_value(&r.ell) }))
            .collect();
        with_schema(object(vec![
            ("verdicts", json!({ "strong_formal": true })),
            ("rows", json!(rows)),
            ("h", io::uni_to_value(&t.h)),
        ]))
    } else {
        let rows: Vec<Vec<String>> =
            t.rows.iter().map(|r| vec![r.sigma.clone(), r.rank.to_string(), r.ell.to_string()]).collect();
        format!("{}h: {}\n", table(&["sigma", "rank", "ell"], &rows), t.h)
    };
    Ok(Report::ok(text))
}

enum MorphismInput {
    Ab(AbPolynomial),
    Cd(CdPolynomial),
}

fn parse_poly_text(s: &str) -> std::result::Result<MorphismInput, Failure> {
    let s = s.trim();
    if let Ok(p) = s.parse::<AbPolynomial>() {
        return Ok(MorphismInput::Ab(p));
    }
    Ok(MorphismInput::Cd(s.parse::<CdPolynomial>()?))
}

fn morphism(what: MorphismWhat, poly: Option<&str>, input: Option<&str>, format: Format) -> Outcome {
    let arg = match poly {
        Some(text) => parse_poly_text(text)?,
        None => {
            let raw = read_input(input)?;
            match io::parse_json(&raw) {
                Ok(v) => MorphismInput::Ab(ab_index(&poset_input(&v)?)?),
                Err(_) => parse_poly_text(&raw)?,
            }
        }
    };
    let mut m = Morphism::new();
    let value: UniPolynomial = match (&arg, what) {
        (MorphismInput::Ab(p), MorphismWhat::F) => m.f(p),
        (MorphismInput::Ab(p), MorphismWhat::G) => m.g(p),
        (MorphismInput::Cd(p), MorphismWhat::F) => m.f_cd(p),
        (MorphismInput::Cd(p), MorphismWhat::G) => m.g_cd(p),
    };
    let name = if what == MorphismWhat::F { "f" } else { "g" };
    let text = if format == Format::Json {
        let input = match &arg {
            MorphismInput::Ab(p) => json!({ "ab": io::nc_to_value(p) }),
            MorphismInput::Cd(p) => json!({ "cd": io::nc_to_value(p) }),
        };
        with_schema(object(vec![("input", input), (name, io::uni_to_value(&value))]))
    } else {
        format!("{value}\n")
    };
    Ok(Report::ok(text))
}

fn generate(shape: Shape, dim: usize, n: usize, k: usize, seed: u64) -> Outcome {
    let complex_json = |c: &SimplicialComplex| {
        let Value::Object(body) = io::complex_to_value(c) else { unreachable!("complex JSON is an object") };
        with_schema(body)
    };
    let poset_json = |p: &GradedPoset| {
        let Value::Object(body) = io::poset_to_value(p) else { unreachable!("poset JSON is an object") };
        with_schema(body)
    };
    let text = match shape {
        Shape::Simplex => complex_json(&make_simplex(dim)),
        Shape::Boundary => complex_json(&make_boundary_simplex(dim)?),
        Shape::Polygon => complex_json(&make_polygon(n)?),
        Shape::Cube => poset_json(&make_cube3()),
        Shape::Boolean => poset_json(&make_boolean(n)),
        Shape::Stacked => complex_json(&make_stacked(dim, k, seed)?.boundary),
        Shape::Barycentric => {
            let (_, m) = barycentric_subdivision(&make_simplex(dim))?;
            let Value::Object(body) = io::subdivision_to_value(&m) else {
                unreachable!("subdivision JSON is an object")
            };
            with_schema(body)
        }
    };
    Ok(Report::ok(text))
}

fn dispatch(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Compute { input, what } => compute(input.as_deref(), *what, f),
        Command::Verify { property, input } => verify(input.as_deref(), *property, f, cli.seed),
        Command::Decompose { input } => decompose(input.as_deref(), f),
        Command::Toric { input, what } => toric_cmd(input.as_deref(), *what, f),
        Command::Localh { input } => localh(input.as_deref(), f),
        Command::Morphism { what, poly, input } => morphism(*what, poly.as_deref(), input.as_deref(), f),
        Command::Generate { shape, dim, n, k } => generate(*shape, *dim, *n, *k, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match dispatch(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(EXIT_IO);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
