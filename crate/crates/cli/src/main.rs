use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use tdesign::admissibility::{steiner_half_reports, AdmissibilityReport};
use tdesign::boolfn::render_term;
use tdesign::codes::code_weight_distribution;
use tdesign::delsarte::{inner_distribution, johnson_design_check, oa_strength, relative_design_check};
use tdesign::exactmath::{binomial, krawtchouk_table};
use tdesign::fixtures::load_fixtures;
use tdesign::format::{parse_design, parse_point_sets, render_design};
use tdesign::pointset::masks_of_weight;
use tdesign::{anf, verify_bruteforce, verify_spectral, walsh_full, ExactRational, IncidenceStructure, PointSet};

const EXIT_NOT_DESIGN: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;
const EXIT_FIXTURE: u8 = 4;

#[derive(Parser)]
#[command(name = "tdesign", version, about = "Exact t-design verification and Walsh spectra")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a design file is a t-design.
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Walsh spectrum of the characteristic function, grouped by weight.
    Spectrum {
        #[arg(long)]
        design: PathBuf,
        /// `all`, or the largest weight to report.
        #[arg(long, default_value = "all")]
        weights: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Algebraic normal form of the characteristic function.
    Anf {
        #[arg(long)]
        design: PathBuf,
    },
    /// Krawtchouk values P_k(x) for length N.
    Krawtchouk { n: u32, k: Option<u32>, x: Option<u32> },
    /// Admissibility filters for ((n-2)/2, n, n/2, 1) over even n.
    Admissible {
        #[arg(value_name = "MIN")]
        min_pos: Option<u32>,
        #[arg(value_name = "MAX")]
        max_pos: Option<u32>,
        #[arg(long, conflicts_with = "min_pos")]
        min: Option<u32>,
        #[arg(long, conflicts_with = "max_pos")]
        max: Option<u32>,
        /// Also report the n that fail a filter.
        #[arg(long)]
        all: bool,
    },
    /// Weight distribution of the code built from the characteristic function.
    Code {
        #[arg(long)]
        design: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Orthogonal-array strength of a file whose rows are binary vectors.
    Oa {
        #[arg(long, alias = "array")]
        design: PathBuf,
    },
    /// Write and re-verify the reference designs.
    GenFixtures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Spectral,
    Bruteforce,
    Johnson,
    Relative,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Spectral => "spectral",
            Method::Bruteforce => "bruteforce",
            Method::Johnson => "johnson",
            Method::Relative => "relative",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// A failed command: exit code and message for standard error.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let result = match cli.command {
        Command::GenFixtures => gen_fixtures(output.as_deref()),
        command => run(command).and_then(|(text, code)| {
            match &output {
                Some(path) => fs::write(path, &text)?,
                None => print!("{text}"),
            }
            Ok(code)
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Verify { design, t, method } => verify(&read_design(&design)?, t, method),
        Command::Spectrum { design, weights, format } => spectrum(&read_design(&design)?, &weights, format),
        Command::Anf { design } => anf_report(&read_design(&design)?),
        Command::Krawtchouk { n, k, x } => krawtchouk_csv(n, k, x),
        Command::Admissible {
            min_pos,
            max_pos,
            min,
            max,
            all,
        } => admissible(min_pos.or(min).unwrap_or(8), max_pos.or(max).unwrap_or(150), all),
        Command::Code { design, format } => code(&read_design(&design)?, format),
        Command::Oa { design } => oa(&design),
        Command::GenFixtures => unreachable!("handled before dispatch"),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn read_design(path: &Path) -> Result<IncidenceStructure, Failure> {
    parse_design(&read_text(path)?).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn int(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("decimal integers are valid JSON numbers"))
}

fn rational(v: &ExactRational) -> Value {
    if v.is_integer() {
        int(&v.to_integer())
    } else {
        Value::String(v.to_string())
    }
}

fn points(p: &PointSet) -> Value {
    json!(p.points())
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

/// `lambda = b C(k, t) / C(n, t)` when integral.
fn inferred_lambda(d: &IncidenceStructure, t: u32) -> Option<BigInt> {
    let num = BigInt::from(d.b()) * binomial(d.k() as u64, t as i64);
    let den = binomial(d.n() as u64, t as i64);
    (&num % &den == BigInt::from(0)).then(|| num / den)
}

/// First `t`-subset whose block count differs from that of the first one.
fn count_witness(d: &IncidenceStructure, t: u32) -> Value {
    let masks: Vec<u64> = d.blocks().iter().map(PointSet::mask).collect();
    let count = |s: u64| masks.iter().filter(|&&b| s & !b == 0).count();
    let mut subsets = masks_of_weight(d.n(), t);
    let Some(first) = subsets.next() else {
        return Value::Null;
    };
    let reference = count(first);
    subsets
        .map(|s| (s, count(s)))
        .find(|&(_, c)| c != reference)
        .map_or(Value::Null, |(s, c)| {
            json!({
                "subset": points(&PointSet::new(d.n(), s).expect("mask within n")),
                "count": c,
                "reference_subset": points(&PointSet::new(d.n(), first).expect("mask within n")),
                "reference_count": reference,
            })
        })
}

fn verdict(d: &IncidenceStructure, t: u32, method: Method) -> Result<Value, Failure> {
    let (is_design, lambda, witness) = match method {
        Method::Spectral => {
            let v = verify_spectral(d, t)?;
            let witness = v.first_violation.map_or(Value::Null, |w| {
                json!({
                    "w": points(&w.w),
                    "weight": w.w.weight(),
                    "expected": rational(&w.expected),
                    "actual": w.actual,
                })
            });
            (v.is_design, v.lambda, witness)
        }
        Method::Bruteforce => match verify_bruteforce(d, t)? {
            Some(p) => (true, Some(p.lambda), Value::Null),
            None => (false, None, count_witness(d, t)),
        },
        Method::Johnson | Method::Relative => {
            let ok = if method == Method::Johnson {
                johnson_design_check(d, t)?
            } else {
                relative_design_check(d.blocks(), t)?
            };
            let witness = if ok { Value::Null } else { count_witness(d, t) };
            (ok, ok.then(|| inferred_lambda(d, t)).flatten(), witness)
        }
        Method::All => unreachable!("expanded by the caller"),
    };
    Ok(json!({
        "method": method.name(),
        "is_design": is_design,
        "t": t,
        "lambda": lambda.as_ref().map_or(Value::Null, int),
        "witness": witness,
    }))
}

fn verify(d: &IncidenceStructure, t: u32, method: Method) -> CmdResult {
    let methods = match method {
        Method::All => vec![Method::Bruteforce, Method::Spectral, Method::Johnson, Method::Relative],
        m => vec![m],
    };
    let verdicts = methods
        .into_iter()
        .map(|m| verdict(d, t, m))
        .collect::<Result<Vec<_>, _>>()?;
    let decisions: Vec<bool> = verdicts.iter().map(|v| v["is_design"] == Value::Bool(true)).collect();
    let agree = decisions.iter().all(|&x| x == decisions[0]);
    let mut head = verdicts[0].clone();
    if method == Method::All {
        let obj = head.as_object_mut().expect("verdicts are objects");
        obj.insert("method".into(), json!("all"));
        obj.insert("agree".into(), json!(agree));
        obj.insert("methods".into(), Value::Array(verdicts));
    }
    let code = match (agree, decisions[0]) {
        (false, _) => EXIT_DISAGREEMENT,
        (true, true) => 0,
        (true, false) => EXIT_NOT_DESIGN,
    };
    Ok((line(head), code))
}

fn spectrum(d: &IncidenceStructure, weights: &str, format: Format) -> CmdResult {
    let by_weight = walsh_full(&d.characteristic_function())?.by_weight();
    let by_weight = match weights {
        "all" => by_weight,
        w => {
            let max: u32 = w
                .parse()
                .map_err(|_| Failure(EXIT_INPUT, format!("--weights expects `all` or an integer, found `{w}`")))?;
            by_weight.truncated(max)
        }
    };
    let text = match format {
        Format::Csv => by_weight.to_csv(),
        Format::Json => {
            let rows: Vec<Value> = by_weight
                .rows()
                .map(|(w, v, m)| json!({"weight": w, "value": int(v), "multiplicity": int(m)}))
                .collect();
            line(json!({"n": d.n(), "rows": rows}))
        }
    };
    Ok((text, 0))
}

fn anf_report(d: &IncidenceStructure) -> CmdResult {
    let a = anf(&d.characteristic_function())?;
    let terms: Vec<String> = a.terms().iter().map(render_term).collect();
    let histogram: Map<String, Value> = a
        .degree_histogram()
        .iter()
        .map(|(deg, count)| (deg.to_string(), json!(count)))
        .collect();
    Ok((line(json!({"n": a.n(), "terms": terms, "degree_histogram": histogram})), 0))
}

fn krawtchouk_csv(n: u32, k: Option<u32>, x: Option<u32>) -> CmdResult {
    let table = krawtchouk_table(n)?;
    for (name, v) in [("k", k), ("x", x)] {
        if v.is_some_and(|v| v > n) {
            return Err(Failure(EXIT_INPUT, format!("{name} must be at most n = {n}")));
        }
    }
    let mut out = String::from("k,x,value\n");
    for kk in k.map_or(0..=n, |k| k..=k) {
        for xx in x.map_or(0..=n, |x| x..=x) {
            out.push_str(&format!("{kk},{xx},{}\n", table.get(kk, xx)));
        }
    }
    Ok((out, 0))
}

fn report_json(r: &AdmissibilityReport) -> Value {
    let failed: Vec<Value> = r
        .failed
        .iter()
        .map(|(name, witness)| {
            let w: Map<String, Value> = witness.iter().map(|(k, v)| (k.to_string(), int(v))).collect();
            json!({"filter": name, "witness": w})
        })
        .collect();
    json!({"n": r.n, "passed": r.passed, "failed": failed})
}

fn admissible(min: u32, max: u32, all: bool) -> CmdResult {
    let text: String = steiner_half_reports(min, max)?
        .iter()
        .filter(|r| all || r.admissible())
        .map(|r| line(report_json(r)))
        .collect();
    Ok((text, 0))
}

fn code(d: &IncidenceStructure, format: Format) -> CmdResult {
    let dist = code_weight_distribution(&d.characteristic_function())?;
    let text = match format {
        Format::Csv => dist.to_csv(),
        Format::Json => {
            let counts: Map<String, Value> = dist.counts.iter().map(|(w, c)| (w.to_string(), int(c))).collect();
            line(json!({
                "length": dist.length,
                "dimension": dist.dimension,
                "minimum_distance": dist.minimum_distance(),
                "counts": counts,
            }))
        }
    };
    Ok((text, 0))
}

fn oa(path: &Path) -> CmdResult {
    let file = parse_point_sets(&read_text(path)?, false)
        .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let strength = oa_strength(&file.rows)?;
    let inner = inner_distribution(&file.rows)?;
    let inner: Vec<Value> = inner.b.iter().map(rational).collect();
    Ok((
        line(json!({
            "n": file.n,
            "rows": file.rows.len(),
            "strength": strength,
            "inner_distribution": inner,
        })),
        0,
    ))
}

fn gen_fixtures(dir: Option<&Path>) -> Result<u8, Failure> {
    let dir = dir.ok_or_else(|| Failure(EXIT_INPUT, "gen-fixtures needs --output DIR".into()))?;
    let fixtures = load_fixtures().map_err(|e| Failure(EXIT_FIXTURE, e.to_string()))?;
    fs::create_dir_all(dir)?;
    for f in &fixtures {
        let text = render_design(&f.structure);
        if parse_design(&text).ok().as_ref() != Some(&f.structure) {
            return Err(Failure(EXIT_FIXTURE, format!("fixture {} does not round-trip", f.name)));
        }
        let path = dir.join(format!("{}.design", f.name));
        fs::write(&path, text)?;
        println!("{}", path.display());
    }
    Ok(0)
}
