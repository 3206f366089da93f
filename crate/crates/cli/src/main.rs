//! Command-line harness for the diagram algebra library.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diagram_homology::homology::tor_checked;
use diagram_homology::summands::pointed_subsets;
use diagram_homology::verify::{self, ReportRecord, Setting};
use diagram_homology::{BasedModule, Diagram, Error, Family, Params, Ring};

use output::Format;

const EXIT_FAIL: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "diagram-homology", version, about = "Rook–Brauer and Motzkin algebras: enumeration, products, Tor and theorem checks")]
struct Cli {
    /// Output format for the record stream.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the stream here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Also store JSON lines under `<dir>/<command>/<config-hash>.jsonl`.
    #[arg(long, global = true)]
    reports_dir: Option<PathBuf>,
    /// Run every parallel loop sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the basis diagrams of an algebra.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Multiply two diagrams given in the text format.
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Tor of the trivial module (or `A/J_X` with `--X`).
    Tor {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long = "X", value_parser = parse_set)]
        set: Option<SetArg>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Theorem and lemma checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Tor(t, A/J_X) vanishes in positive degrees.
    Vanishing {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Comma list, empty for ∅; omitted means every subset of [n].
        #[arg(long = "X", value_parser = parse_set)]
        set: Option<SetArg>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Exactness of 0 → 𝒜 ⊕ ℬ → A/J_{X−x} → A/J_X → 0 and its t-tensored image.
    Resolution {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        pointed: Pointed,
    },
    /// Idempotent projections onto 𝒜, ℳ and 𝕐 summands.
    Summand {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// ℬ_{X,x} as a sum of ℳ (Rook–Brauer) or 𝕐 (Motzkin) modules.
    #[command(name = "decompose-B")]
    DecomposeB {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[command(flatten)]
        pointed: Pointed,
    },
    /// Tor of RS_n ⊗_{RS_m} t against RBr_n ⊗_{RBr_m} t.
    Shapiro {
        #[command(flatten)]
        alg: SizedArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Tor^{RBr_n}(t, t) against Tor^{RS_n}(t, t).
    MainTheorem {
        #[command(flatten)]
        alg: SizedArgs,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Tor^{M_n}(t, t) is t in degree 0 and zero above.
    Motzkin {
        #[command(flatten)]
        alg: SizedArgs,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// ι and π are algebra maps and π_*ι_* = id.
    Morphisms {
        #[command(flatten)]
        alg: SizedArgs,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Args, Debug)]
struct SizedArgs {
    #[arg(long)]
    n: usize,
    /// Z, Q, Fp:p or Zmod:m.
    #[arg(long, default_value = "Z", value_parser = parse_ring)]
    ring: Ring,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    epsilon: String,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[command(flatten)]
    sized: SizedArgs,
}

#[derive(Args, Debug)]
struct Pointed {
    /// Omitted means every X ⊆ [n].
    #[arg(long = "X", value_parser = parse_set)]
    set: Option<SetArg>,
    /// Omitted means every x ∈ X.
    #[arg(long)]
    x: Option<usize>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A subset of `[n]` written as a comma list, optionally in braces.
#[derive(Clone, Debug)]
struct SetArg(Vec<usize>);

fn parse_set(s: &str) -> Result<SetArg, String> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut v: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.sort_unstable();
    v.dedup();
    Ok(SetArg(v))
}

impl SizedArgs {
    fn setting(&self, family: Family) -> Result<Setting, Error> {
        let params = Params::parse(self.ring, &self.delta, &self.epsilon)?;
        Ok(Setting::new(family, self.n, self.ring, params))
    }
}

impl AlgebraArgs {
    fn setting(&self) -> Result<Setting, Error> {
        self.sized.setting(self.family)
    }
}

fn check_set(set: &[usize], n: usize) -> Result<(), Error> {
    match set.iter().find(|&&v| v == 0 || v > n) {
        Some(v) => Err(Error::InvalidSubmodule(format!("{v} is not in [{n}]"))),
        None => Ok(()),
    }
}

fn pointed_pairs(p: &Pointed, n: usize) -> Result<Vec<(Vec<usize>, usize)>, Error> {
    let all = pointed_subsets(n);
    if let Some(SetArg(set)) = &p.set {
        check_set(set, n)?;
    }
    let pairs: Vec<_> = all
        .into_iter()
        .filter(|(s, x)| p.set.as_ref().is_none_or(|want| &want.0 == s) && p.x.is_none_or(|want| want == *x))
        .collect();
    if pairs.is_empty() {
        return Err(Error::InvalidSubmodule("no x ∈ X matches the given --X/--x".into()));
    }
    Ok(pairs)
}

/// What a command produced.
enum Outcome {
    Records(Vec<ReportRecord>),
    Lines(Vec<String>),
}

fn run(command: &Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Enumerate { family, n } => Outcome::Lines(family.enumerate(*n).iter().map(Diagram::to_string).collect()),
        Command::Multiply { n, lhs, rhs } => {
            let (a, b): (Diagram, Diagram) = (lhs.parse()?, rhs.parse()?);
            if a.n() != *n || b.n() != *n {
                return Err(Error::StrandMismatch(a.n(), b.n().max(*n)));
            }
            Outcome::Lines(vec![a.multiply(&b)?.to_string()])
        }
        Command::Tor { alg, set, max_degree } => {
            let setting = alg.setting()?;
            let a = setting.algebra()?;
            let module = match set {
                None => BasedModule::trivial(&a),
                Some(SetArg(s)) => {
                    check_set(s, setting.n)?;
                    BasedModule::quotient_by_j(&a, s)?
                }
            };
            let report = tor_checked(&module, *max_degree)?;
            let records = report
                .groups
                .iter()
                .enumerate()
                .map(|(k, g)| ReportRecord {
                    check_id: "tor".into(),
                    family: setting.family.name().into(),
                    n: setting.n,
                    ring: setting.ring.to_string(),
                    delta: setting.params.delta.to_string(),
                    epsilon: setting.params.epsilon.to_string(),
                    set: set.as_ref().map(|s| diagram_homology::submodule::set_string(&s.0)),
                    x: None,
                    m: None,
                    degree: Some(k),
                    expected: String::new(),
                    computed: g.to_string(),
                    pass: true,
                })
                .collect();
            Outcome::Records(records)
        }
        Command::Verify(v) => Outcome::Records(run_verify(v)?),
    })
}

fn run_verify(v: &VerifyCommand) -> Result<Vec<ReportRecord>, Error> {
    match v {
        VerifyCommand::Vanishing { alg, set, max_degree } => {
            let setting = alg.setting()?;
            let sets = match set {
                Some(SetArg(s)) => {
                    check_set(s, setting.n)?;
                    vec![s.clone()]
                }
                None => (0u32..1 << setting.n)
                    .map(|mask| (1..=setting.n).filter(|v| mask & (1 << (v - 1)) != 0).collect())
                    .collect(),
            };
            verify::verify_vanishing(&setting, &sets, *max_degree)
        }
        VerifyCommand::Resolution { alg, pointed } => {
            let setting = alg.setting()?;
            let mut out = Vec::new();
            for (set, x) in pointed_pairs(pointed, setting.n)? {
                out.extend(verify::verify_resolution(&setting, &set, x)?);
            }
            Ok(out)
        }
        VerifyCommand::Summand { alg } => verify::verify_summands(&alg.setting()?),
        VerifyCommand::DecomposeB { alg, pointed } => {
            let setting = alg.setting()?;
            let mut out = Vec::new();
            for (set, x) in pointed_pairs(pointed, setting.n)? {
                out.extend(verify::verify_decompose_b(&setting, &set, x)?);
            }
            Ok(out)
        }
        VerifyCommand::Shapiro { alg, m, max_degree } => {
            verify::verify_shapiro(&alg.setting(Family::RookBrauer)?, *m, *max_degree)
        }
        VerifyCommand::MainTheorem { alg, max_degree } => {
            verify::verify_main_theorem(&alg.setting(Family::RookBrauer)?, *max_degree)
        }
        VerifyCommand::Motzkin { alg, max_degree } => verify::verify_motzkin(&alg.setting(Family::Motzkin)?, *max_degree),
        VerifyCommand::Morphisms { alg, max_degree } => {
            verify::verify_morphisms(&alg.setting(Family::RookBrauer)?, *max_degree)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Enumerate { .. } => "enumerate",
        Command::Multiply { .. } => "multiply",
        Command::Tor { .. } => "tor",
        Command::Verify(v) => match v {
            VerifyCommand::Vanishing { .. } => "vanishing",
            VerifyCommand::Resolution { .. } => "resolution",
            VerifyCommand::Summand { .. } => "summand",
            VerifyCommand::DecomposeB { .. } => "decompose-B",
            VerifyCommand::Shapiro { .. } => "shapiro",
            VerifyCommand::MainTheorem { .. } => "main-theorem",
            VerifyCommand::Motzkin { .. } => "motzkin",
            VerifyCommand::Morphisms { .. } => "morphisms",
        },
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("DIAGRAM_HOMOLOGY_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("DIAGRAM_HOMOLOGY_THREADS={v:?} is not a number"))?;
    if n == 0 {
        return Err("DIAGRAM_HOMOLOGY_THREADS must be at least 1".into());
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::LabelOutOfRange { .. }
            | Error::DuplicateLabel(_)
            | Error::BlockTooLarge(_)
            | Error::StrandMismatch(..)
            | Error::IndexOutOfRange(_)
            | Error::InvalidModulus(_)
            | Error::NotPrime(_)
            | Error::InvalidSubmodule(_)
            | Error::UnsupportedRing { .. }
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE);
    }
    if cli.sequential {
        diagram_homology::par::set_mode(diagram_homology::par::Mode::Sequential);
    }
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e @ Error::EpsilonNotUnit(_)) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_HYPOTHESIS);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_usage_error(&e) { EXIT_USAGE } else { EXIT_FAIL });
        }
    };
    let (text, pass) = match &outcome {
        Outcome::Lines(lines) => (output::render_lines(lines), true),
        Outcome::Records(records) => (output::render(records, cli.format), verify::all_pass(records)),
    };
    if let Err(e) = output::emit(&text, cli.output.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FAIL);
    }
    if let (Some(dir), Outcome::Records(records)) = (&cli.reports_dir, &outcome) {
        let config = format!("{:?}", cli.command);
        if let Err(e) = output::store(dir, command_name(&cli.command), &config, records) {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
