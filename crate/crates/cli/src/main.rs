use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use braidcert::b3::{classify_closure, normal_form};
use braidcert::certify::{certify, sweep, CertificationReport, FamilyParams};
use braidcert::closure::{alexander_polynomial, components, linking_matrix};
use braidcert::markov::{validate_tower, TowerFile};
use braidcert::template::{builtin_template, per_component_beta_delta, TemplateFile, TemplateKind};
use braidcert::{BraidWord, BraidingAssignment, Sign};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Invariants, conjugacy and transverse-simplicity certificates for closed braids.
#[derive(Debug, Parser)]
#[command(name = "braidcert", version)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        env = "BRAIDCERT_FORMAT",
        value_enum,
        default_value = "text"
    )]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Strand count, when it should exceed the largest generator index plus one.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exponent sum, strand count, Bennequin number, permutation and Alexander polynomial.
    Invariants { word: String },
    /// Closure components and their linking numbers.
    Components { word: String },
    /// Decide conjugacy of two 3-braids.
    Conjugate { first: String, second: String },
    /// Recognize unknot and (2,k)-torus closures among 3-braids.
    Classify { word: String },
    /// Instantiate a flype template and tabulate per-component Bennequin numbers.
    Flype {
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        sign: i64,
        #[arg(long = "P", allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long = "R", allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long = "Q", allow_hyphen_values = true)]
        q: Option<String>,
        /// Template description file; replaces the block flags.
        #[arg(long)]
        template: Option<PathBuf>,
    },
    /// Check a Markov tower described by a JSON file.
    TowerValidate { file: PathBuf },
    /// Certify one member of the family.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Certify every admissible triple with entries up to `--max`.
    Sweep {
        #[arg(long)]
        max: i64,
    },
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Runtime(e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

struct Output {
    body: String,
    ok: bool,
}

struct Ctx {
    format: Format,
    strands: Option<usize>,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<BraidWord, Failure> {
        BraidWord::parse_with_strands(text, self.strands)
            .map_err(|e| usage(anyhow!("malformed word {text:?}: {e}")))
    }

    fn emit(&self, value: Value, text: String, ok: bool) -> Output {
        let body = match self.format {
            Format::Json => render_json(&value),
            Format::Text => text,
        };
        Output { body, ok }
    }
}

/// Keys come out sorted, so re-serializing parsed output reproduces it exactly.
fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn invariants(ctx: &Ctx, text: &str) -> Result<Output, Failure> {
    let w = ctx.word(text)?;
    let alex = alexander_polynomial(&w).to_string();
    let perm = w.underlying_permutation().to_string();
    let value = json!({
        "word": w,
        "strands": w.strands(),
        "exponent_sum": w.exponent_sum(),
        "bennequin": w.bennequin(),
        "permutation": perm,
        "components": components(&w).len(),
        "alexander": alex,
    });
    let text = format!(
        "word: {w}\ne={} b={} beta={}\npermutation: {perm}\ncomponents: {}\nalexander: {alex}\n",
        w.exponent_sum(),
        w.strands(),
        w.bennequin(),
        components(&w).len(),
    );
    Ok(ctx.emit(value, text, true))
}

fn components_cmd(ctx: &Ctx, text: &str) -> Result<Output, Failure> {
    let w = ctx.word(text)?;
    let parts = components(&w);
    let lk = linking_matrix(&w);
    let rows: Vec<Vec<i64>> = (0..lk.size())
        .map(|i| (0..lk.size()).map(|j| lk.get(i, j)).collect())
        .collect();
    let value = json!({ "word": w, "components": parts.parts, "linking_matrix": rows });
    let mut out = format!("word: {w}\n");
    for (k, c) in parts.parts.iter().enumerate() {
        let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        out += &format!(
            "L{} strands {{{}}} self_writhe={} beta={}\n",
            k + 1,
            members.join(","),
            c.self_writhe,
            c.beta
        );
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate().skip(i + 1) {
            out += &format!("lk(L{}, L{}) = {v}\n", i + 1, j + 1);
        }
    }
    Ok(ctx.emit(value, out, true))
}

fn conjugate(ctx: &Ctx, a: &str, b: &str) -> Result<Output, Failure> {
    let (w1, w2) = (ctx.word(a)?, ctx.word(b)?);
    let n1 = normal_form(&w1).map_err(usage)?;
    let n2 = normal_form(&w2).map_err(usage)?;
    let same = n1 == n2;
    let value = json!({ "conjugate": same, "normal_form_1": n1, "normal_form_2": n2 });
    let text = format!("conjugate: {same}\nnormal_form_1: {n1}\nnormal_form_2: {n2}\n");
    Ok(ctx.emit(value, text, true))
}

fn classify(ctx: &Ctx, text: &str) -> Result<Output, Failure> {
    let w = ctx.word(text)?;
    let class = classify_closure(&w).map_err(usage)?;
    let nf = normal_form(&w).map_err(usage)?;
    let value = json!({ "word": w, "normal_form": nf, "closure": class });
    Ok(ctx.emit(
        value,
        format!("normal_form: {nf}\nclosure: {class}\n"),
        true,
    ))
}

fn flype(
    ctx: &Ctx,
    sign: i64,
    blocks: [(&str, &Option<String>); 3],
    file: Option<&Path>,
) -> Result<Output, Failure> {
    let (t, a) = match file {
        Some(path) => {
            let raw = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(usage)?;
            let desc: TemplateFile = serde_json::from_str(&raw)
                .map_err(|e| usage(anyhow!("{}: {e}", path.display())))?;
            desc.resolve().map_err(usage)?
        }
        None => {
            let sign = Sign::of(sign).ok_or_else(|| usage(anyhow!("--sign must be 1 or -1")))?;
            let t = builtin_template(TemplateKind::flype(sign)).map_err(usage)?;
            let mut a = BraidingAssignment::new();
            for (id, text) in blocks {
                let text = text
                    .as_deref()
                    .ok_or_else(|| usage(anyhow!("missing --{id}")))?;
                let w = BraidWord::parse_with_strands(text, Some(2))
                    .map_err(|e| usage(anyhow!("block {id}: {e}")))?;
                a = a.with(id, w);
            }
            (t, a)
        }
    };
    let (plus, minus) = t.instantiate(&a).map_err(usage)?;
    let table = per_component_beta_delta(&t, &a).map_err(usage)?;
    let value = json!({ "plus": plus, "minus": minus, "beta_delta": table });
    let mut text = format!("plus:  {plus}\nminus: {minus}\ncomponent  beta+  beta-\n");
    for d in &table {
        let mark = if d.changed() { "  *" } else { "" };
        text += &format!(
            "{:<9} {:>6} {:>6}{mark}\n",
            d.component, d.beta_plus, d.beta_minus
        );
    }
    Ok(ctx.emit(value, text, true))
}

fn tower(ctx: &Ctx, path: &Path) -> Result<Output, Failure> {
    let raw = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    let file: TowerFile =
        serde_json::from_str(&raw).map_err(|e| usage(anyhow!("{}: {e}", path.display())))?;
    let result = file.into_tower().and_then(|t| validate_tower(&t));
    Ok(match result {
        Ok(report) => {
            let text = format!(
                "valid {:?} tower, {} states, betas {:?}\n",
                report.mode,
                report.betas.len(),
                report.betas
            );
            ctx.emit(json!({ "valid": true, "report": report }), text, true)
        }
        Err(e) => ctx.emit(
            json!({ "valid": false, "error": e.to_string() }),
            format!("invalid: {e}\n"),
            false,
        ),
    })
}

fn report_text(r: &CertificationReport) -> String {
    let FamilyParams { p, q, r: rr } = r.params;
    let mut s = format!(
        "(p,q,r) = ({p},{q},{rr})\nTX+ = {}\nTX- = {}\nbeta = {} / {}\n",
        r.tx_plus, r.tx_minus, r.checks.beta_plus, r.checks.beta_minus
    );
    match &r.verdict {
        braidcert::Verdict::Certified => s += "verdict: CERTIFIED_NOT_TRANSVERSALLY_SIMPLE\n",
        braidcert::Verdict::Failed { reasons } => {
            s += "verdict: FAILED\n";
            for reason in reasons {
                s += &format!("  {reason}\n");
            }
        }
    }
    s
}

fn certify_cmd(ctx: &Ctx, p: i64, q: i64, r: i64) -> Output {
    let report = certify(FamilyParams::new(p, q, r));
    let ok = report.verdict.is_certified();
    ctx.emit(to_value(&report), report_text(&report), ok)
}

fn sweep_cmd(ctx: &Ctx, max: i64) -> Result<Output, Failure> {
    if max < 2 {
        return Err(usage(anyhow!("--max must be at least 2")));
    }
    let reports = sweep(max, max, max);
    let ok = reports.iter().all(|r| r.verdict.is_certified());
    let certified = reports.iter().filter(|r| r.verdict.is_certified()).count();
    let mut text = String::new();
    for r in &reports {
        let FamilyParams { p, q, r: rr } = r.params;
        let status = if r.verdict.is_certified() {
            "CERTIFIED"
        } else {
            "FAILED"
        };
        text += &format!("({p},{q},{rr}) beta={} {status}\n", r.checks.beta_plus);
    }
    text += &format!("{certified}/{} certified\n", reports.len());
    Ok(ctx.emit(to_value(&reports), text, ok))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let ctx = Ctx {
        format: if cli.json { Format::Json } else { cli.format },
        strands: cli.n,
    };
    match &cli.command {
        Command::Invariants { word } => invariants(&ctx, word),
        Command::Components { word } => components_cmd(&ctx, word),
        Command::Conjugate { first, second } => conjugate(&ctx, first, second),
        Command::Classify { word } => classify(&ctx, word),
        Command::Flype {
            sign,
            p,
            r,
            q,
            template,
        } => flype(
            &ctx,
            *sign,
            [("P", p), ("R", r), ("Q", q)],
            template.as_deref(),
        ),
        Command::TowerValidate { file } => tower(&ctx, file),
        Command::Certify { p, q, r } => Ok(certify_cmd(&ctx, *p, *q, *r)),
        Command::Sweep { max } => sweep_cmd(&ctx, *max),
    }
}

fn one_line(e: &anyhow::Error) -> String {
    format!("{e:#}")
        .lines()
        .next()
        .unwrap_or_default()
        .to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("braidcert: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(out) => {
            if let Some(path) = out_path {
                if let Err(e) = fs::write(&path, &out.body) {
                    eprintln!("braidcert: writing {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", out.body);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("braidcert: {}", one_line(&e));
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("braidcert: {}", one_line(&e));
            ExitCode::from(1)
        }
    }
}
