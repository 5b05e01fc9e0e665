//! `kchar`: characters, classification, the boundedness gate, weight
//! enumeration and verification suites from the command line.
//!
//! Exit status: 0 on success, 1 if a verification suite fails, 2 on usage
//! or parameter errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kchar::gate::{self, SubalgebraDescriptor};
use kchar::module_id::{CharacterReport, ModuleId, ModuleJson};
use kchar::params::{parse_doubled, parse_rational};
use kchar::root_data::{self, Family, RootDatum};
use kchar::sl2sl2::{self, SctParams};
use kchar::sl3_principal::{self as sl3p, PrincipalSl3Id, Sl3Family};
use kchar::sl3_root::{self, RootCaseParams, Sign};
use kchar::sp4_principal::{self as sp4p, Sp4PrincipalId};
use kchar::sp4_root::{self, Sp4RootParams};
use kchar::verify::{self, Grid, SeededFault};
use kchar::{Error, Q};

#[derive(Parser)]
#[command(name = "kchar", version, about = "Exact sl(2)-characters of bounded (g, k)-modules in rank two")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed form and expansion of a module's k-character.
    Char(CharArgs),
    /// Simple bounded modules with a given central character.
    Classify(ModuleArgs),
    /// The necessary condition r_g <= b_k.
    Gate(GateArgs),
    /// Small simple modules of a simple Lie algebra.
    Enumerate(EnumArgs),
    /// Multiplicity-free modules of a case.
    Mfree(MfreeArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Case {
    Sl2sl2,
    #[value(name = "sl3-root")]
    Sl3Root,
    #[value(name = "sl3-principal")]
    Sl3Principal,
    #[value(name = "sp4-root")]
    Sp4Root,
    #[value(name = "sp4-principal")]
    Sp4Principal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Parameters shared by `char` and `classify`. Rationals accept `p/q`.
#[derive(Args)]
struct ModuleArgs {
    #[arg(long, value_enum)]
    case: Case,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    s: Option<u8>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// `+` or `-` (sl3-root).
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// I+, I-, J, I+tau, I-tau (sl3-principal).
    #[arg(long, allow_hyphen_values = true)]
    family: Option<String>,
    /// Select the lowest-weight partner L' (sp4-root).
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    m: ModuleArgs,
    #[arg(long, default_value_t = 128)]
    order: usize,
}

#[derive(Args)]
struct GateArgs {
    /// Simple ideals of g joined by `+`, e.g. `sl3` or `sl2+sl2`.
    #[arg(long)]
    g: String,
    /// k as summands joined by `+`: `sl2`, `gl2`, `so5`, `t1`, …
    #[arg(long)]
    k: String,
    /// Sum r over the simple ideals instead of taking the minimum.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    algebra: String,
    /// Nontrivial modules with dim V - 1 <= b_k.
    #[arg(long = "thA")]
    tha: bool,
    /// Restrict to modules without an invariant bilinear form.
    #[arg(long)]
    le52: bool,
    /// All dominant weights with dim V <= this bound.
    #[arg(long)]
    dim_at_most: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct MfreeArgs {
    #[arg(long, value_enum)]
    case: Case,
    #[arg(long, allow_hyphen_values = true, default_value = "21/2")]
    max_a: String,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run; all registered suites if omitted.
    #[arg(long)]
    suite: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    max_a: Option<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    order: Option<usize>,
    /// Corrupt the closed-form side at this exponent (harness self-test).
    #[arg(long)]
    seed_fault: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Failures mapped to exit codes.
enum Fail {
    Usage(String),
    Verify,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Fail>;

fn need<T>(v: Option<T>, flag: &str, case: &str) -> Res<T> {
    v.ok_or_else(|| Fail::Usage(format!("--{flag} is required for --case {case}")))
}

fn rational(v: Option<&String>, flag: &str, case: &str) -> Res<Q> {
    Ok(parse_rational(need(v, flag, case)?)?)
}

fn half(v: Option<&String>, flag: &str, case: &str) -> Res<i64> {
    Ok(parse_doubled(need(v, flag, case)?)?)
}

fn parse_sign(s: &str) -> Res<Sign> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "−" | "minus" => Ok(Sign::Minus),
        _ => Err(Fail::Usage(format!("--sign must be + or - (got {s})"))),
    }
}

fn parse_s(s: Option<u8>) -> Res<u8> {
    match s {
        Some(v @ (0 | 1)) => Ok(v),
        Some(v) => Err(Fail::Usage(format!("--s must be 0 or 1 (got {v})"))),
        None => Err(Fail::Usage("--s is required for --case sp4-principal".into())),
    }
}

fn module_id(m: &ModuleArgs) -> Res<ModuleId> {
    Ok(match m.case {
        Case::Sl2sl2 => {
            let a = match &m.a {
                Some(a) => parse_rational(a)?,
                None => Q::from_integer(0.into()),
            };
            ModuleId::Sl2Sl2(SctParams::new(a, need(m.n, "n", "sl2sl2")?))
        }
        Case::Sl3Root => {
            let sign = parse_sign(need(m.sign.as_deref(), "sign", "sl3-root")?)?;
            let a = need(m.a.as_ref(), "a", "sl3-root")?;
            let a: u32 = a.parse().map_err(|_| Fail::Usage(format!("--a must be a nonnegative integer (got {a})")))?;
            ModuleId::Sl3Root(RootCaseParams::new(sign, a, rational(m.b.as_ref(), "b", "sl3-root")?))
        }
        Case::Sl3Principal => {
            let fam = Sl3Family::parse(need(m.family.as_deref(), "family", "sl3-principal")?)?;
            let u = rational(m.u.as_ref(), "u", "sl3-principal")?;
            ModuleId::Sl3Principal(PrincipalSl3Id::new(fam, u, need(m.n, "n", "sl3-principal")?))
        }
        Case::Sp4Root => {
            let p = Sp4RootParams::new(half(m.a.as_ref(), "a", "sp4-root")?, half(m.b.as_ref(), "b", "sp4-root")?);
            ModuleId::Sp4Root(if m.dual { p.dual() } else { p })
        }
        Case::Sp4Principal => ModuleId::Sp4Principal(Sp4PrincipalId::new(
            half(m.a.as_ref(), "a", "sp4-principal")?,
            half(m.b.as_ref(), "b", "sp4-principal")?,
            parse_s(m.s)?,
        )),
    })
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn cmd_char(args: &CharArgs) -> Res<()> {
    let id = module_id(&args.m)?;
    let rep = CharacterReport::build(&id, args.order)?;
    match args.m.format {
        Format::Json => print_json(&rep),
        Format::Csv => {
            println!("exponent,multiplicity");
            for (i, c) in &rep.coeffs {
                println!("{i},{c}");
            }
        }
        Format::Text => {
            println!("{id}");
            println!("c = {}", id.closed_form()?);
            let nz: Vec<String> =
                rep.coeffs.iter().filter(|(_, c)| c != "0").map(|(i, c)| format!("{c}·V{i}")).collect();
            println!("to order {}: {}", rep.order, if nz.is_empty() { "0".into() } else { nz.join(" + ") });
        }
    }
    Ok(())
}

fn classify_ids(m: &ModuleArgs) -> Res<Vec<ModuleId>> {
    Ok(match m.case {
        Case::Sl3Principal => {
            let u = rational(m.u.as_ref(), "u", "sl3-principal")?;
            sl3p::classify_chi(&u, need(m.n, "n", "sl3-principal")?)?.into_iter().map(ModuleId::Sl3Principal).collect()
        }
        Case::Sp4Root => {
            let (a, b) = (half(m.a.as_ref(), "a", "sp4-root")?, half(m.b.as_ref(), "b", "sp4-root")?);
            sp4_root::classify(a, b)?.into_iter().map(ModuleId::Sp4Root).collect()
        }
        Case::Sp4Principal => {
            let (a, b) = (half(m.a.as_ref(), "a", "sp4-principal")?, half(m.b.as_ref(), "b", "sp4-principal")?);
            sp4p::classify(a, b)?.into_iter().map(ModuleId::Sp4Principal).collect()
        }
        Case::Sl3Root => {
            let a = need(m.a.as_ref(), "a", "sl3-root")?;
            let a: u32 = a.parse().map_err(|_| Fail::Usage(format!("--a must be a nonnegative integer (got {a})")))?;
            let b = rational(m.b.as_ref(), "b", "sl3-root")?;
            [Sign::Plus, Sign::Minus].into_iter().map(|s| ModuleId::Sl3Root(RootCaseParams::new(s, a, b.clone()))).collect()
        }
        Case::Sl2sl2 => vec![module_id(m)?],
    })
}

fn cmd_classify(m: &ModuleArgs) -> Res<()> {
    let ids = classify_ids(m)?;
    let rows: Vec<(ModuleId, std::result::Result<(), Error>)> = ids.into_iter().map(|id| {
        let v = id.check();
        (id, v)
    }).collect();
    if rows.iter().all(|(_, v)| v.is_err()) {
        let why = rows.first().and_then(|(_, v)| v.clone().err()).map(|e| e.to_string()).unwrap_or_default();
        return Err(Fail::Usage(format!("no simple bounded infinite-dimensional module: {why}")));
    }
    match m.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(id, ok)| {
                    json!({
                        "module": ModuleJson::of(id),
                        "name": id.to_string(),
                        "valid": ok.is_ok(),
                        "reason": ok.as_ref().err().map(|e| e.to_string()),
                    })
                })
                .collect();
            print_json(&v);
        }
        _ => {
            for (id, ok) in &rows {
                match ok {
                    Ok(()) => println!("{id}"),
                    Err(e) => println!("{id}  (not a module: {e})"),
                }
            }
        }
    }
    Ok(())
}

fn parse_g(s: &str) -> Res<Vec<RootDatum>> {
    s.split('+').map(|t| t.parse::<RootDatum>().map_err(Fail::from)).collect()
}

fn parse_k(s: &str) -> Res<SubalgebraDescriptor> {
    let mut summands = Vec::new();
    let mut central = 0;
    for t in s.split('+').map(str::trim) {
        let low = t.to_ascii_lowercase();
        if let Some(d) = low.strip_prefix('t').and_then(|r| r.parse::<usize>().ok()) {
            central += d;
        } else if low == "cartan" || low == "toral" {
            central += 1;
        } else if let Some(n) = low.strip_prefix("gl").and_then(|r| r.parse::<usize>().ok()) {
            if n >= 2 {
                summands.push((Family::A, n - 1));
            }
            central += 1;
        } else {
            let d: RootDatum = t.parse()?;
            summands.push((d.family(), d.rank()));
        }
    }
    if summands.is_empty() && central == 0 {
        return Err(Fail::Usage(format!("empty subalgebra `{s}`")));
    }
    Ok(SubalgebraDescriptor::new(summands, central, s))
}

fn cmd_gate(args: &GateArgs) -> Res<()> {
    let g = parse_g(&args.g)?;
    let k = parse_k(&args.k)?;
    let rs: Vec<u64> = g.iter().map(root_data::r_g).collect();
    let r = if args.strict { rs.iter().sum() } else { *rs.iter().min().expect("nonempty") };
    let ok = gate::necessary_condition(&g, &k, args.strict);
    let b = k.b();
    match args.format {
        Format::Json => print_json(&json!({
            "g": args.g, "k": args.k, "r_g": r, "b_k": b.to_string(), "pass": ok, "strict": args.strict
        })),
        _ => println!("{} ({r} {} {b})", if ok { "PASS" } else { "FAIL" }, if ok { "≤" } else { ">" }),
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumArgs) -> Res<()> {
    let d: RootDatum = args.algebra.parse()?;
    let ws = match (args.tha, args.dim_at_most) {
        (true, _) => gate::tha_candidates(&d),
        (false, Some(c)) => root_data::enumerate_dominant_dim_at_most(&d, c),
        (false, None) => return Err(Fail::Usage("pass --thA or --dim-at-most".into())),
    };
    let ws = if args.le52 { gate::le52_filter(&d, &ws) } else { ws };
    let rows = gate::with_dims(&d, &ws);
    match args.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(w, dim)| json!({"weight": w.0, "dim": dim, "self_dual": root_data::is_self_dual(&d, w)}))
                .collect();
            print_json(&json!({"algebra": d.name(), "modules": v}));
        }
        _ => {
            println!("{} ({} modules)", d.name(), rows.len());
            for (w, dim) in &rows {
                println!("{w}  dim {dim}");
            }
        }
    }
    Ok(())
}

fn cmd_mfree(args: &MfreeArgs) -> Res<()> {
    let a2_max = parse_doubled(&args.max_a)?;
    let ids: Vec<ModuleId> = match args.case {
        Case::Sp4Principal => sp4p::sp4_principal_mfree_scan(a2_max).into_iter().map(ModuleId::Sp4Principal).collect(),
        Case::Sp4Root => {
            let mut v = Vec::new();
            for a2 in (3..=a2_max).step_by(2) {
                for b2 in (-a2 + 2..a2).step_by(2) {
                    let p = Sp4RootParams::new(a2, b2);
                    if sp4_root::sp4_root_mfree(&p)? {
                        v.push(ModuleId::Sp4Root(p));
                        v.push(ModuleId::Sp4Root(p.dual()));
                    }
                }
            }
            v
        }
        Case::Sl3Principal => {
            let mut v = Vec::new();
            for n in 0..=args.n_max {
                for u in verify::sl3_principal_us() {
                    for f in [Sl3Family::IPlus, Sl3Family::IMinus, Sl3Family::J, Sl3Family::IPlusTau, Sl3Family::IMinusTau] {
                        let id = PrincipalSl3Id::new(f, u.clone(), n);
                        if sl3p::is_valid(&id) && sl3p::sl3_principal_mfree(&id)? {
                            v.push(ModuleId::Sl3Principal(id));
                        }
                    }
                }
            }
            v
        }
        Case::Sl3Root => {
            let amax = a2_max / 2;
            let mut v = Vec::new();
            for a in 0..=amax as u32 {
                for b in -amax - 2..=amax + 2 {
                    for s in [Sign::Plus, Sign::Minus] {
                        let p = RootCaseParams::new(s, a, Q::from_integer(b.into()));
                        if sl3_root::is_infinite_dimensional(&p) && sl3_root::in_mfree_families(&p) {
                            v.push(ModuleId::Sl3Root(p));
                        }
                    }
                }
            }
            v
        }
        Case::Sl2sl2 => {
            let mut v = Vec::new();
            for n in 0..=args.n_max {
                let p = SctParams::new(Q::from_integer(0.into()), n);
                if sl2sl2::sct_is_valid(&p) {
                    v.push(ModuleId::Sl2Sl2(p));
                }
            }
            v
        }
    };
    match args.format {
        Format::Json => {
            let v: Vec<Value> = ids.iter().map(|id| json!({"module": ModuleJson::of(id), "name": id.to_string()})).collect();
            print_json(&v);
        }
        _ => {
            println!("{} multiplicity-free modules", ids.len());
            for id in &ids {
                println!("{id}");
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Res<()> {
    let names: Vec<String> =
        if args.suite.is_empty() { verify::SUITES.iter().map(|s| s.to_string()).collect() } else { args.suite.clone() };
    let fault = args.seed_fault.map(|exponent| SeededFault { exponent });
    let mut reports = Vec::new();
    for name in &names {
        let mut g = Grid::default_for(name)?;
        if let Some(a) = &args.max_a {
            g.a_max = parse_rational(a)?;
        }
        if let Some(n) = args.n_max {
            g.n_max = n;
        }
        if let Some(o) = args.order {
            g.order = o;
        }
        reports.push(verify::run_suite_seeded(name, &g, fault)?);
    }
    match args.format {
        Format::Json => print_json(&reports),
        _ => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {} ({} grid points, {} checks)", r.suite, r.grid_points, r.checks.len());
                if let Some(c) = &r.first_counterexample {
                    println!("  first counterexample: {c}");
                }
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Fail::Verify)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Char(a) => cmd_char(a),
        Cmd::Classify(a) => cmd_classify(a),
        Cmd::Gate(a) => cmd_gate(a),
        Cmd::Enumerate(a) => cmd_enumerate(a),
        Cmd::Mfree(a) => cmd_mfree(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
