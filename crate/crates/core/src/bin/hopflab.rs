use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hopflab::builders::{group_algebra_unchecked, Construction, GroupTable};
use hopflab::corpus::{self, ENTRIES, TWISTS};
use hopflab::ff::{Fe, Field, Modulus};
use hopflab::hopf::verify_axioms;
use hopflab::indicators::{indicator, indicator_table, operator_indicator, IndicatorTable, DEFAULT_TENSOR_BUDGET};
use hopflab::integrals::{compute_integral, verify_frobenius_identities, IntegralData, IntegralOptions};
use hopflab::io;
use hopflab::pipeline::{analyze, Analysis, PipelineOptions};
use hopflab::report::{Report, Status};
use hopflab::twist::{gauge_invariance_check, twisted_u_check, Twist};
use hopflab::wedderburn::verify_block_identities;
use hopflab::{Error, HopfAlgebra};

#[derive(Parser)]
#[command(name = "hopflab", version, about = "Integrals, Wedderburn data and Frobenius-Schur indicators of Hopf algebras over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Axioms, semisimplicity and the characteristic bound.
    Check(Common),
    /// Integral, dual integral, u and the distinguished group-like.
    Integrals(Common),
    /// Central primitive idempotents, block sizes and characters.
    Wedderburn(Common),
    /// Indicator table; with --module, both routes side by side.
    Indicators {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TENSOR_BUDGET)]
        tensor_budget: usize,
    },
    /// Twist validation, twisted u and indicator invariance.
    TwistCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        twist: PathBuf,
    },
    /// Every identity check on one algebra.
    Props(Common),
    /// Writes a group algebra, dual group algebra or Drinfeld double.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "group")]
        construction: String,
        /// Characteristic p.
        #[arg(long)]
        p: u64,
        /// Extension degree k.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Skip the semisimplicity and p^2 > dim guards (group algebras only).
        #[arg(long)]
        unchecked: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lists or regenerates the bundled corpus.
    Corpus {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Args)]
struct Common {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = "HOPFLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Allow one automatic retry over a larger field.
    #[arg(long)]
    extend_field: bool,
    /// Skip axiom checks while loading.
    #[arg(long)]
    no_verify: bool,
    /// Do not enforce p^2 > dim.
    #[arg(long)]
    allow_small_characteristic: bool,
    #[arg(long, default_value = "-4..6", value_parser = parse_range, allow_hyphen_values = true)]
    n_range: (i64, i64),
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad bound {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad bound {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

impl Common {
    fn options(&self) -> PipelineOptions {
        PipelineOptions {
            integrals: IntegralOptions {
                allow_small_characteristic: self.allow_small_characteristic,
            },
            extend_field: self.extend_field,
            seed: self.seed,
        }
    }
}

/// Failure modes mapped to exit codes: input problems give 2, failed
/// computations give 1.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Check(e.to_string())
    }
}

fn input_error(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

struct Output {
    format: Format,
    lines: Vec<String>,
    failed: bool,
}

impl Output {
    fn new(format: Format, command: &str, digest: &str) -> Output {
        let mut o = Output {
            format,
            lines: Vec::new(),
            failed: false,
        };
        let version = env!("CARGO_PKG_VERSION");
        match format {
            Format::Text => o.lines.push(format!("hopflab {version} {command} sha256:{digest}")),
            Format::JsonLines => o.record(json!({
                "record": "header",
                "tool": "hopflab",
                "version": version,
                "command": command,
                "input_sha256": digest,
            })),
        }
        o
    }

    fn record(&mut self, v: Value) {
        self.lines.push(v.to_string());
    }

    fn text(&mut self, s: impl Into<String>) {
        if let Format::Text = self.format {
            self.lines.push(s.into());
        }
    }

    fn json(&mut self, v: Value) {
        if let Format::JsonLines = self.format {
            self.record(v);
        }
    }

    fn report(&mut self, r: &Report) {
        for c in &r.checks {
            match self.format {
                Format::Text => {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skip => "SKIP",
                    };
                    match &c.witness {
                        Some(w) => self.lines.push(format!("{tag} {}: {w}", c.name)),
                        None => self.lines.push(format!("{tag} {}", c.name)),
                    }
                }
                Format::JsonLines => {
                    let mut v = json!({"record": "check", "name": c.name, "status": c.status});
                    if let Some(w) = &c.witness {
                        v["witness"] = json!(w);
                    }
                    self.record(v);
                }
            }
        }
        let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
        let (p, f, s) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
        self.failed |= f > 0;
        match self.format {
            Format::Text => self.lines.push(format!("{p} passed, {f} failed, {s} skipped")),
            Format::JsonLines => self.record(json!({"record": "summary", "passed": p, "failed": f, "skipped": s})),
        }
    }

    fn flush(&self) {
        let mut stdout = std::io::stdout().lock();
        for l in &self.lines {
            // a closed pipe downstream just ends the output
            if writeln!(stdout, "{l}").is_err() {
                return;
            }
        }
    }
}

fn element_json(f: &Field, a: &[Fe]) -> Value {
    json!(a.iter().map(|&x| f.format(x)).collect::<Vec<_>>())
}

fn element_text(f: &Field, a: &[Fe]) -> String {
    let terms: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| format!("{} b{i}", f.format(c)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn load(c: &Common, verify: bool) -> Result<(HopfAlgebra, String), Failure> {
    let (text, digest) = read(&c.file)?;
    let h = io::load_hopf(&text, verify && !c.no_verify).map_err(input_error)?;
    Ok((h, digest))
}

fn note_extension(out: &mut Output, a: &Analysis) {
    if let Some(from) = &a.extended_from {
        let to = a.algebra.field();
        out.text(format!("field extended from {from} to {to}"));
        out.json(json!({"record": "field_extension", "from_order": from.order(), "to_order": to.order()}));
    }
}

fn cmd_check(c: &Common) -> Result<Output, Failure> {
    let (text, digest) = read(&c.file)?;
    let h = io::parse_hopf(&text).map_err(input_error)?;
    let mut out = Output::new(c.format, "check", &digest);
    let f = h.field();
    out.text(format!("{f}, dim {}", h.dim()));
    out.json(json!({"record": "algebra", "p": f.characteristic(), "k": f.degree(), "dim": h.dim()}));
    let mut r = Report::new();
    r.extend_prefixed("axioms.", verify_axioms(&h));
    let p = f.characteristic();
    if c.allow_small_characteristic {
        r.skip("characteristic_squared_exceeds_dim", "--allow-small-characteristic");
    } else {
        r.record(
            "characteristic_squared_exceeds_dim",
            ((p as u128).pow(2) <= h.dim() as u128).then(|| format!("{p}^2 <= {}", h.dim())),
        );
    }
    match compute_integral(&h) {
        Ok(l) => {
            r.pass("integral_space_one_dimensional");
            let eps = h.counit(&l);
            r.record(
                "semisimple",
                eps.is_zero().then(|| "eps(Lambda) = 0: not semisimple".to_string()),
            );
        }
        Err(e) => {
            r.fail("integral_space_one_dimensional", e.to_string());
            r.skip("semisimple", "no integral");
        }
    }
    out.report(&r);
    Ok(out)
}

fn cmd_integrals(c: &Common) -> Result<Output, Failure> {
    let (h, digest) = load(c, true)?;
    let id = IntegralData::compute(&h, c.options().integrals)?;
    let mut out = Output::new(c.format, "integrals", &digest);
    let f = h.field();
    let rows = [
        ("integral", &id.integral),
        ("dual_integral", &id.dual_integral),
        ("u", &id.u),
        ("u_inverse", &id.u_inv),
        ("grouplike", &id.grouplike),
    ];
    for (name, v) in rows {
        out.text(format!("{name}: {}", element_text(f, v)));
        out.json(json!({"record": "element", "name": name, "coefficients": element_json(f, v)}));
    }
    out.text(format!("eps(integral): {}", f.format(id.eps_of_integral)));
    out.text(format!("dual integral side: {:?}", id.dual_side));
    out.json(json!({
        "record": "scalars",
        "eps_of_integral": f.format(id.eps_of_integral),
        "dual_side": format!("{:?}", id.dual_side),
    }));
    out.report(&verify_frobenius_identities(&h, &id));
    Ok(out)
}

fn cmd_wedderburn(c: &Common) -> Result<Output, Failure> {
    let (h, digest) = load(c, true)?;
    let a = analyze(&h, c.options())?;
    let mut out = Output::new(c.format, "wedderburn", &digest);
    note_extension(&mut out, &a);
    let f = a.algebra.field();
    let wd = &a.wedderburn;
    for i in 0..wd.len() {
        out.text(format!(
            "V{i}: dim {}, schur {}, lambda(e) {}",
            wd.dims[i],
            f.format(wd.schur[i]),
            f.format(wd.lambda_of_e[i])
        ));
        out.text(format!("  e{i} = {}", element_text(f, &wd.idempotents[i])));
        out.text(format!(
            "  chi{i} = ({})",
            wd.characters[i].iter().map(|&x| f.format(x)).collect::<Vec<_>>().join(", ")
        ));
        out.json(json!({
            "record": "block",
            "index": i,
            "dim": wd.dims[i],
            "idempotent": element_json(f, &wd.idempotents[i]),
            "character": element_json(f, &wd.characters[i]),
            "schur": f.format(wd.schur[i]),
            "lambda_of_idempotent": f.format(wd.lambda_of_e[i]),
        }));
    }
    out.report(&verify_block_identities(&a.algebra, wd, &a.integrals));
    Ok(out)
}

fn table_output(out: &mut Output, f: &Field, t: &IndicatorTable, dims: &[usize]) {
    let ns: Vec<i64> = t.ns().collect();
    let header: Vec<String> = ns.iter().map(|n| format!("{n:>6}")).collect();
    out.text(format!("{:<6}{:>4} {}", "", "dim", header.join("")));
    for (i, row) in t.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|&x| format!("{:>6}", f.format(x))).collect();
        out.text(format!("{:<6}{:>4} {}", format!("V{i}"), dims[i], cells.join("")));
        out.json(json!({"record": "indicators", "index": i, "dim": dims[i], "n": ns, "values": element_json(f, row)}));
    }
    let cells: Vec<String> = t.regular_row.iter().map(|&x| format!("{:>6}", f.format(x))).collect();
    out.text(format!("{:<6}{:>4} {}", "H", "", cells.join("")));
    out.json(json!({"record": "indicators", "index": "regular", "n": ns, "values": element_json(f, &t.regular_row)}));
}

fn cmd_indicators(c: &Common, module: Option<&Path>, budget: usize) -> Result<Output, Failure> {
    let (h, digest) = load(c, true)?;
    let module_text = module.map(read).transpose()?;
    let a = analyze(&h, c.options())?;
    let mut out = Output::new(c.format, "indicators", &digest);
    note_extension(&mut out, &a);
    let h = &a.algebra;
    let f = h.field();
    let t = indicator_table(h, &a.integrals, &a.wedderburn, c.n_range)?;
    table_output(&mut out, f, &t, &a.wedderburn.dims);
    let mut r = Report::new();
    if let Some((text, _)) = module_text {
        if a.extended_from.is_some() {
            return Err(Failure::Input("module files cannot be used with an extended field".into()));
        }
        let v = io::parse_module(&text, h, !c.no_verify).map_err(input_error)?;
        let chi = v.character();
        out.text(format!("module of dim {}: n, formula, operator", v.dim()));
        for n in c.n_range.0..=c.n_range.1 {
            let formula = indicator(h, &a.integrals, &chi, n);
            let operator = if n >= 1 {
                Some(operator_indicator(h, &a.integrals, &v, n as usize, budget))
            } else {
                None
            };
            let op_text = match &operator {
                Some(Ok(x)) => f.format(*x),
                Some(Err(e)) => format!("({e})"),
                None => "-".into(),
            };
            out.text(format!("{n:>4} {:>8} {:>8}", f.format(formula), op_text));
            let mut rec = json!({"record": "routes", "n": n, "formula": f.format(formula)});
            let name = format!("route_equivalence_n{n}");
            match operator {
                Some(Ok(x)) => {
                    rec["operator"] = json!(f.format(x));
                    r.record(name, (x != formula).then(|| format!("operator {} vs formula {}", f.format(x), f.format(formula))));
                }
                Some(Err(e)) => r.skip(name, e.to_string()),
                None => r.skip(name, "operator route is defined for n >= 1"),
            }
            out.json(rec);
        }
    }
    out.report(&r);
    Ok(out)
}

fn cmd_twist_check(c: &Common, twist: &Path) -> Result<Output, Failure> {
    let (h, digest) = load(c, true)?;
    let (text, _) = read(twist)?;
    let (j, j_inv) = io::parse_twist(&text, &h).map_err(input_error)?;
    let mut out = Output::new(c.format, "twist-check", &digest);
    let mut r = Report::new();
    let t = match Twist::validate(&h, j, j_inv) {
        Ok(t) => {
            r.pass("twist_valid");
            t
        }
        Err(e) => {
            r.fail("twist_valid", e.to_string());
            out.report(&r);
            return Ok(out);
        }
    };
    let id = IntegralData::compute(&h, c.options().integrals)?;
    r.extend(twisted_u_check(&h, &t, &id));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(c.seed);
    r.extend(gauge_invariance_check(&h, &t, c.n_range, &mut rng)?);
    out.report(&r);
    Ok(out)
}

fn cmd_props(c: &Common) -> Result<Output, Failure> {
    let (h, digest) = load(c, true)?;
    let a = analyze(&h, c.options())?;
    let mut out = Output::new(c.format, "props", &digest);
    note_extension(&mut out, &a);
    out.report(&a.identity_suite(c.n_range)?);
    Ok(out)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_build(group: &str, construction: &str, p: u64, k: usize, unchecked: bool, output: Option<&Path>) -> Result<(), Failure> {
    let g = GroupTable::by_name(group).map_err(input_error)?;
    let construction: Construction = construction.parse().map_err(input_error)?;
    let f = Field::new(p, k, Modulus::Auto).map_err(input_error)?;
    let h = if unchecked {
        if construction != Construction::GroupAlgebra {
            return Err(Failure::Input("--unchecked applies to group algebras only".into()));
        }
        group_algebra_unchecked(&g, &f)
    } else {
        construction.build(&g, &f)?
    };
    write_or_print(output, &io::serialize_hopf(&h))
}

fn cmd_corpus(out: Option<&Path>) -> Result<(), Failure> {
    let Some(dir) = out else {
        for e in ENTRIES {
            println!("{:<16} {:<6} {:?} GF({}^{})", e.name, e.group, e.construction, e.p, e.k);
        }
        for t in TWISTS {
            println!("{:<16} twist of {}", t.name, t.algebra);
        }
        return Ok(());
    };
    fs::create_dir_all(dir).map_err(|e| Failure::Input(e.to_string()))?;
    let put = |name: String, text: String| write_or_print(Some(&dir.join(name)), &text);
    for e in ENTRIES {
        put(e.file_name(), io::serialize_hopf(&e.build()?))?;
    }
    for t in TWISTS {
        let h = t.entry().build()?;
        let (j, j_inv) = t.build(&h)?;
        put(t.file_name(), io::serialize_twist(&h, &j, Some(&j_inv)))?;
    }
    let c3 = corpus::find("c3_gf7").expect("c3 entry");
    let negative = group_algebra_unchecked(&c3.group_table(), &Field::prime(3)?);
    put("c3_gf3.hopf".into(), io::serialize_hopf(&negative))?;
    Ok(())
}

fn run(cli: Cli) -> Result<Option<Output>, (Option<Format>, Failure)> {
    let fmt = |c: &Common| Some(c.format);
    match &cli.command {
        Command::Check(c) => cmd_check(c).map(Some).map_err(|e| (fmt(c), e)),
        Command::Integrals(c) => cmd_integrals(c).map(Some).map_err(|e| (fmt(c), e)),
        Command::Wedderburn(c) => cmd_wedderburn(c).map(Some).map_err(|e| (fmt(c), e)),
        Command::Indicators {
            common,
            module,
            tensor_budget,
        } => cmd_indicators(common, module.as_deref(), *tensor_budget)
            .map(Some)
            .map_err(|e| (fmt(common), e)),
        Command::TwistCheck { common, twist } => cmd_twist_check(common, twist).map(Some).map_err(|e| (fmt(common), e)),
        Command::Props(c) => cmd_props(c).map(Some).map_err(|e| (fmt(c), e)),
        Command::Build {
            group,
            construction,
            p,
            k,
            unchecked,
            output,
        } => cmd_build(group, construction, *p, *k, *unchecked, output.as_deref())
            .map(|_| None)
            .map_err(|e| (None, e)),
        Command::Corpus { out } => cmd_corpus(out.as_deref()).map(|_| None).map_err(|e| (None, e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(out)) => {
            out.flush();
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err((format, failure)) => {
            let (code, msg) = match failure {
                Failure::Input(m) => (2, m),
                Failure::Check(m) => (1, m),
            };
            match format {
                Some(Format::JsonLines) => println!("{}", json!({"record": "error", "message": msg})),
                _ => eprintln!("error: {msg}"),
            }
            ExitCode::from(code)
        }
    }
}
