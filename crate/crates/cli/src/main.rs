//! Command-line front end: parse ring elements, apply screening maps and
//! kernel procedures, and run the randomized verification suites.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tscreen_core::json::{
    decomposition_to_json, element_to_json, screener_to_json, JsonMonomial, JsonScalar,
};
use tscreen_core::kernels::{
    decompose_hat, decompose_y, e_hat, e_y, in_kernel_intersection, EKind, KernelError,
};
use tscreen_core::parse::{parse_classical, parse_hat, parse_y, ParseError};
use tscreen_core::rings::Window;
use tscreen_core::screening::{nf_classical, nf_hat_f, nf_y, screen_l, YNfKind};
use tscreen_core::suites::run_suite;
use tscreen_core::{CartanData, Element, Monomial, Scalar, Screener};

#[derive(Parser)]
#[command(
    name = "tscreen",
    version,
    about = "Screening operators on deformed spectral-lattice Laurent rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ring {
    #[value(name = "hat")]
    Hat,
    #[value(name = "y")]
    Y,
    #[value(name = "classical")]
    Classical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "hatF")]
    HatF,
    #[value(name = "yF")]
    YF,
    #[value(name = "yFprime")]
    YFprime,
    #[value(name = "classicalF")]
    ClassicalF,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavor {
    #[value(name = "hat")]
    Hat,
    #[value(name = "y")]
    Y,
    #[value(name = "yprime")]
    YPrime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "text")]
    Text,
    #[value(name = "json")]
    Json,
}

#[derive(Args)]
struct Common {
    /// Cartan matrix: a named type (sl2, A2, B3, ...) or JSON {"C": [[...]], "r": [...]}
    #[arg(long, default_value = "sl2")]
    cartan: String,

    /// Spectral window as kmin:kmax
    #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
    window: String,

    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Sample count for the randomized suites
    #[arg(long, default_value_t = 200)]
    samples: u32,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its canonical form
    Eval {
        #[command(flatten)]
        common: Common,
        /// Ring to parse in
        #[arg(long, value_enum, default_value_t = Ring::Hat)]
        ring: Ring,
        expression: String,
    },
    /// Apply a screening map at a node and reduce modulo the chosen relations
    Screen {
        #[command(flatten)]
        common: Common,
        /// Relation family (and with it the ring)
        #[arg(long, value_enum)]
        kind: Kind,
        /// Node index
        #[arg(long)]
        i: String,
        expression: String,
    },
    /// Expand the canonical kernel element of a dominant monomial
    Epoly {
        #[command(flatten)]
        common: Common,
        /// Kernel-element family
        #[arg(long, value_enum)]
        flavor: Flavor,
        /// Node index
        #[arg(long)]
        i: String,
        monomial: String,
    },
    /// Kernel membership report, cross-checked through the screening map
    Kernel {
        #[command(flatten)]
        common: Common,
        /// Kernel family
        #[arg(long, value_enum)]
        flavor: Flavor,
        /// Node index, or "all" for the intersection over every node
        #[arg(long)]
        i: String,
        expression: String,
    },
    /// Run one named verification suite
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name (binom, leibniz, bicharacter, kernel-hat, kernel-y,
        /// kernel-classical, diagrams, involution, order, prop4, lemma7, lemma13)
        #[arg(long)]
        suite: String,
    },
}

enum CliError {
    /// Bad input: parse failure, unknown name, violated precondition. Exit 2.
    Input(String),
    /// A checked property failed on valid input. Exit 1.
    Property(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval { common, ring, expression } => cmd_eval(&common, ring, &expression),
        Command::Screen { common, kind, i, expression } => cmd_screen(&common, kind, &i, &expression),
        Command::Epoly { common, flavor, i, monomial } => cmd_epoly(&common, flavor, &i, &monomial),
        Command::Kernel { common, flavor, i, expression } => cmd_kernel(&common, flavor, &i, &expression),
        Command::Verify { common, suite } => cmd_verify(&common, &suite),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Property(msg)) => {
            eprintln!("property failure: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_cartan(spec: &str) -> Result<CartanData, CliError> {
    if spec.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(spec)
            .map_err(|e| CliError::Input(format!("bad cartan JSON: {e}")))?;
        let c: Vec<Vec<i64>> = serde_json::from_value(
            v.get("C").cloned().ok_or_else(|| CliError::Input("cartan JSON needs a \"C\" matrix".into()))?,
        )
        .map_err(|e| CliError::Input(format!("bad cartan matrix: {e}")))?;
        let r: Vec<i64> = serde_json::from_value(
            v.get("r").cloned().ok_or_else(|| CliError::Input("cartan JSON needs an \"r\" vector".into()))?,
        )
        .map_err(|e| CliError::Input(format!("bad symmetrizer vector: {e}")))?;
        CartanData::new(c, r).map_err(|e| CliError::Input(e.to_string()))
    } else {
        CartanData::named(spec).map_err(|e| CliError::Input(e.to_string()))
    }
}

fn parse_window(spec: &str) -> Result<Window, CliError> {
    let (lo, hi) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("bad window {spec:?}: expected kmin:kmax")))?;
    let kmin: i64 = lo
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("bad window bound {lo:?}")))?;
    let kmax: i64 = hi
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("bad window bound {hi:?}")))?;
    if kmin > kmax {
        return Err(CliError::Input(format!("window bounds out of order: {kmin} > {kmax}")));
    }
    Ok(Window::new(kmin, kmax))
}

fn parse_node(spec: &str, cd: &CartanData) -> Result<usize, CliError> {
    let i: usize = spec
        .parse()
        .map_err(|_| CliError::Input(format!("bad node index {spec:?}")))?;
    if i == 0 || i > cd.n() {
        return Err(CliError::Input(format!(
            "node index {i} out of range 1..={}",
            cd.n()
        )));
    }
    Ok(i)
}

fn emit(format: Format, text: String, value: Value) {
    use std::io::Write;
    let out = std::io::stdout();
    let res = match format {
        Format::Text => writeln!(out.lock(), "{text}"),
        Format::Json => writeln!(out.lock(), "{value}"),
    };
    if let Err(e) = res {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // The reader went away (e.g. piped into `head`); die quietly
            // with the conventional SIGPIPE status.
            std::process::exit(141);
        }
        panic!("failed writing to stdout: {e}");
    }
}

fn cmd_eval(common: &Common, ring: Ring, expression: &str) -> CliResult {
    let cd = parse_cartan(&common.cartan)?;
    parse_window(&common.window)?;
    match ring {
        Ring::Hat => {
            let x = parse_hat(&cd, expression)?;
            emit(common.format, x.to_string(), element_to_json(&x));
        }
        Ring::Y => {
            let x = parse_y(&cd, expression)?;
            emit(common.format, x.to_string(), element_to_json(&x));
        }
        Ring::Classical => {
            let x = parse_classical(&cd, expression)?;
            emit(common.format, x.to_string(), element_to_json(&x));
        }
    }
    Ok(())
}

fn cmd_screen(common: &Common, kind: Kind, node: &str, expression: &str) -> CliResult {
    let cd = parse_cartan(&common.cartan)?;
    parse_window(&common.window)?;
    let i = parse_node(node, &cd)?;
    match kind {
        Kind::HatF => {
            let x = parse_hat(&cd, expression)?;
            let s = nf_hat_f(&cd, &screen_l(&cd, i, &x));
            emit(common.format, s.to_string(), screener_to_json(&s, "hat"));
        }
        Kind::YF => {
            let x = parse_y(&cd, expression)?;
            let s = nf_y(&cd, YNfKind::Plain, &screen_l(&cd, i, &x));
            emit(common.format, s.to_string(), screener_to_json(&s, "y"));
        }
        Kind::YFprime => {
            let x = parse_y(&cd, expression)?;
            let s = nf_y(&cd, YNfKind::Prime, &screen_l(&cd, i, &x));
            emit(common.format, s.to_string(), screener_to_json(&s, "y"));
        }
        Kind::ClassicalF => {
            let x = parse_classical(&cd, expression)?;
            let s = nf_classical(&cd, &screen_l(&cd, i, &x));
            emit(common.format, s.to_string(), screener_to_json(&s, "classical"));
        }
    }
    Ok(())
}

/// Extracts the single coefficient-1 monomial an expansion command accepts.
fn single_monomial<M: Monomial, C: Scalar>(x: &Element<M, C>) -> Result<M, CliError> {
    let mut terms = x.iter();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if Scalar::is_one(c) => Ok(m.clone()),
        _ => Err(CliError::Input(
            "expected a single monomial with coefficient 1".into(),
        )),
    }
}

fn cmd_epoly(common: &Common, flavor: Flavor, node: &str, monomial: &str) -> CliResult {
    let cd = parse_cartan(&common.cartan)?;
    parse_window(&common.window)?;
    let i = parse_node(node, &cd)?;
    match flavor {
        Flavor::Hat => {
            let m = single_monomial(&parse_hat(&cd, monomial)?)?;
            let e = e_hat(&cd, i, &m)?;
            emit(common.format, e.to_string(), element_to_json(&e));
        }
        Flavor::Y | Flavor::YPrime => {
            let kind = if flavor == Flavor::Y { EKind::Plain } else { EKind::Prime };
            let m = single_monomial(&parse_y(&cd, monomial)?)?;
            let e = e_y::<tscreen_core::TPoly>(&cd, i, &m, kind)?;
            emit(common.format, e.to_string(), element_to_json(&e));
        }
    }
    Ok(())
}

/// Renders a dominant-part map as an element for the text report.
fn dominant_as_element<M: Monomial, C: Scalar>(
    dominant: &std::collections::BTreeMap<M, C>,
) -> Element<M, C> {
    let mut x = Element::zero();
    for (m, c) in dominant {
        x.add_term(m.clone(), c.clone());
    }
    x
}

/// Membership report through one node: decomposition against the canonical
/// kernel elements on one route, screening normal form on the other. The two
/// must agree; a disagreement is a property failure.
fn report_single<M, C>(
    format: Format,
    dec: &tscreen_core::kernels::Decomposition<M, C>,
    s: &Screener<M, C>,
    ring: &str,
) -> CliResult
where
    M: JsonMonomial,
    C: JsonScalar,
{
    let member = dec.is_complete();
    let text = format!(
        "member: {member}\ndominant_part: {}\nremainder: {}\nscreen_nf: {}",
        dominant_as_element(&dec.dominant),
        dec.remainder,
        s
    );
    let mut value = Map::new();
    value.insert("member".into(), json!(member));
    let dec_json = decomposition_to_json(dec);
    value.insert("dominant_part".into(), dec_json["dominant"].clone());
    value.insert("remainder".into(), dec_json["remainder"].clone());
    value.insert("screen_nf".into(), screener_to_json(s, ring));
    emit(format, text, Value::Object(value));

    if member != s.is_zero() {
        return Err(CliError::Property(format!(
            "membership routes disagree: decomposition remainder is {} but screening normal form is {}",
            if member { "zero" } else { "nonzero" },
            if s.is_zero() { "zero" } else { "nonzero" },
        )));
    }
    Ok(())
}

fn cmd_kernel(common: &Common, flavor: Flavor, node: &str, expression: &str) -> CliResult {
    let cd = parse_cartan(&common.cartan)?;
    let window = parse_window(&common.window)?;

    if node == "all" {
        // Intersection over every node: the constructive peeling verdict,
        // with each node's screening normal form reported alongside.
        let kind = match flavor {
            Flavor::Y => EKind::Plain,
            Flavor::YPrime => EKind::Prime,
            Flavor::Hat => {
                return Err(CliError::Input(
                    "--i all applies to the Y-ring kernels; use --flavor y or yprime".into(),
                ))
            }
        };
        let nf_kind = match kind {
            EKind::Plain => YNfKind::Plain,
            EKind::Prime => YNfKind::Prime,
        };
        let x = parse_y(&cd, expression)?;
        let member = in_kernel_intersection(&cd, &x, kind, window)?;
        let mut text = format!("member: {member}");
        let mut nf_map = Map::new();
        for j in cd.nodes() {
            let s = nf_y(&cd, nf_kind, &screen_l(&cd, j, &x));
            text.push_str(&format!("\nscreen_nf[{j}]: {s}"));
            nf_map.insert(j.to_string(), screener_to_json(&s, "y"));
        }
        let value = json!({"member": member, "screen_nf": Value::Object(nf_map)});
        emit(common.format, text, value);
        return Ok(());
    }

    let i = parse_node(node, &cd)?;
    match flavor {
        Flavor::Hat => {
            let x = parse_hat(&cd, expression)?;
            let dec = decompose_hat(&cd, i, &x)?;
            let s = nf_hat_f(&cd, &screen_l(&cd, i, &x));
            report_single(common.format, &dec, &s, "hat")
        }
        Flavor::Y | Flavor::YPrime => {
            let (kind, nf_kind) = if flavor == Flavor::Y {
                (EKind::Plain, YNfKind::Plain)
            } else {
                (EKind::Prime, YNfKind::Prime)
            };
            let x = parse_y(&cd, expression)?;
            let dec = decompose_y(&cd, i, &x, kind)?;
            let s = nf_y(&cd, nf_kind, &screen_l(&cd, i, &x));
            report_single(common.format, &dec, &s, "y")
        }
    }
}

fn cmd_verify(common: &Common, suite: &str) -> CliResult {
    let cd = parse_cartan(&common.cartan)?;
    let window = parse_window(&common.window)?;
    let report = run_suite(suite, &cd, &common.cartan, window, common.seed, common.samples)
        .map_err(|e| CliError::Input(e.to_string()))?;
    emit(common.format, report.to_string(), report.to_json());
    if !report.ok() {
        return Err(CliError::Property(format!(
            "suite {} failed {} of {} checks",
            report.suite,
            report.failed,
            report.passed + report.failed
        )));
    }
    Ok(())
}
