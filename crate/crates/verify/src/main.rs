use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac_verify::{run_suite, FormSelector, Group, RunConfig, Selection, VerifyError, CONFIG_ENV};

#[derive(Parser, Debug)]
#[command(name = "dirac-verify", version, about = "Verify symmetry claims for the Dirac-Coulomb equation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one claim group, or all of them.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Radial bound-state energies against the closed form.
    Spectrum,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Algebra,
    So8,
    Lorentz,
    Known,
    Fw,
    All,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Machine,
    Text,
}

#[derive(Args, Debug)]
struct Opts {
    /// TOML run configuration.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Grid points per axis (power of two, at least 16).
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Box side length.
    #[arg(long = "box", global = true)]
    box_len: Option<f64>,
    #[arg(long, global = true)]
    mass: Option<f64>,
    #[arg(long, global = true)]
    zalpha: Option<f64>,
    #[arg(long, global = true)]
    tol_exact_numeric: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// FW-A, FW-B or both.
    #[arg(long, global = true)]
    form: Option<FormSelector>,
    /// Comma-separated claim ids; restricts the selected group.
    #[arg(long, global = true, value_delimiter = ',')]
    claims: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t)]
    format: Format,
}

fn build_config(o: &Opts) -> Result<RunConfig, VerifyError> {
    let mut cfg = RunConfig::resolve(o.config.as_deref())?;
    if let Some(v) = o.grid {
        cfg.grid = v;
    }
    if let Some(v) = o.box_len {
        cfg.box_len = v;
    }
    if let Some(v) = o.mass {
        cfg.mass = v;
    }
    if let Some(v) = o.zalpha {
        cfg.zalpha = v;
    }
    if let Some(v) = o.tol_exact_numeric {
        cfg.tolerances.exact_numeric = v;
    }
    if let Some(v) = o.seed {
        cfg.seed = v;
    }
    if let Some(v) = o.form {
        cfg.form = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn selection(cmd: &Command, claims: &[String]) -> Result<Selection, VerifyError> {
    let groups = match cmd {
        Command::Spectrum => vec![Group::Spectrum],
        Command::Verify { target: Target::All } => Group::ALL.to_vec(),
        Command::Verify { target } => vec![format!("{target:?}").to_ascii_lowercase().parse()?],
    };
    if claims.is_empty() {
        return Ok(Selection::Groups(groups));
    }
    let registered = dirac_verify::registry::registered_claims();
    for id in claims {
        match registered.iter().find(|(r, _)| r == id) {
            None => return Err(VerifyError::UnknownClaim(id.clone())),
            Some((_, g)) if !groups.contains(g) => {
                return Err(VerifyError::Config(format!("{id} belongs to group {g}, not selected")));
            }
            _ => {}
        }
    }
    Ok(Selection::Ids(claims.to_vec()))
}

fn run(cli: &Cli) -> Result<i32, VerifyError> {
    let cfg = build_config(&cli.opts)?;
    let sel = selection(&cli.command, &cli.opts.claims)?;
    let report = run_suite(&cfg, &sel)?;
    let body = match cli.opts.format {
        Format::Machine => report.to_machine()?,
        Format::Text => report.to_text(),
    };
    match &cli.opts.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| VerifyError::Io { path: path.clone(), source: e })?;
            print!("{}", report.to_text());
        }
        None => print!("{body}"),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
