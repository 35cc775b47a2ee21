//! `riordan`: generate Riordan triangles and decide their positivity
//! properties with exact arithmetic.
//!
//! Exit status is 0 when a checked property holds, 1 when it fails (a
//! witness is printed) and 2 on any usage error.

mod input;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riordan_tp::{
    build_triangle, catalan_like_numbers, CheckRegistry, CheckRequest, Tail, TpOptions, TpOrder,
};

use input::{resolve, scalar_list, usage, SourceFlags, Usage};
use report::{check_payload, pairs_to_map, render_all, Document, Format, Payload, SCHEMA};

#[derive(Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact total-positivity tools for Riordan arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first rows of a triangle.
    Gen(GenArgs),
    /// Decide a property; exit 1 with a witness when it fails.
    Check(CheckArgs),
    /// Print the Catalan-like numbers C_0(a,b;s,t), C_1, ...
    CatalanLike(CatalanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TailArg {
    Zero,
    Repeat,
}

impl From<TailArg> for Tail {
    fn from(t: TailArg) -> Self {
        match t {
            TailArg::Zero => Tail::Zero,
            TailArg::Repeat => Tail::RepeatLast,
        }
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Named triangle: pascal, catalan, motzkin, ballot, schroder-large, schroder-little.
    #[arg(long, conflicts_with_all = ["z", "a", "params"])]
    name: Option<String>,
    /// Z-sequence prefix, comma separated.
    #[arg(
        long,
        requires = "a",
        conflicts_with = "params",
        allow_hyphen_values = true
    )]
    z: Option<String>,
    /// A-sequence prefix, comma separated.
    #[arg(
        long,
        requires = "z",
        conflicts_with = "params",
        allow_hyphen_values = true
    )]
    a: Option<String>,
    /// How the A/Z prefixes continue.
    #[arg(long, value_enum, default_value = "zero")]
    tail: TailArg,
    /// Recursive matrix a,b,s,t or tridiagonal coefficients a,b,r,s,t.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
}

impl SourceArgs {
    fn flags(&self) -> SourceFlags<'_> {
        SourceFlags {
            name: self.name.as_deref(),
            z: self.z.as_deref(),
            a: self.a.as_deref(),
            tail: self.tail.into(),
            params: self.params.as_deref(),
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Number of rows to print.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    rows: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: tp, tp2, jacobi-tp, jacobi-tp2, logconvex-col0, logconcave-rows, pf, hankel.
    subject: String,
    #[command(flatten)]
    source: SourceArgs,
    /// A finite sequence, comma separated (pf, hankel).
    #[arg(long, allow_hyphen_values = true)]
    seq: Option<String>,
    /// Minor order to test: a positive integer or "all".
    #[arg(long, value_parser = parse_order)]
    order: Option<TpOrder>,
    /// Leading window size; same as --window.
    #[arg(long, conflicts_with = "window", value_parser = clap::value_parser!(u64).range(1..))]
    rows: Option<u64>,
    /// Size of every leading principal window examined.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    window: u64,
    /// Enumerate all orders even past the size cap.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct CatalanArgs {
    /// a,b,s,t
    #[arg(long, allow_hyphen_values = true)]
    params: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

fn parse_order(s: &str) -> Result<TpOrder, String> {
    s.parse().map_err(usage)
}

struct Run {
    document: Document,
    format: Format,
    code: u8,
}

fn gen(args: &GenArgs, command: Vec<String>) -> Usage<Run> {
    let resolved = resolve(&args.source.flags())?;
    let spec = resolved
        .spec
        .ok_or("gen needs --name, --z/--a or --params")?;
    let rows = usize::try_from(args.rows).map_err(usage)?;
    let triangle = build_triangle(&spec, rows).map_err(usage)?;
    let mut parameters = resolved.parameters;
    parameters.push(("rows".into(), rows.to_string()));
    Ok(Run {
        document: Document {
            schema: SCHEMA,
            command,
            parameters: pairs_to_map(&parameters),
            result: Payload::Triangle {
                rows: triangle.rows().iter().map(|r| render_all(r)).collect(),
            },
        },
        format: args.format,
        code: 0,
    })
}

fn check(args: &CheckArgs, command: Vec<String>) -> Usage<Run> {
    let registry = CheckRegistry::builtin();
    if registry.get(&args.subject).is_none() {
        let known: Vec<_> = registry.names().collect();
        return Err(format!(
            "unknown check {:?}; expected one of {}",
            args.subject,
            known.join(", ")
        ));
    }
    let resolved = resolve(&args.source.flags())?;
    let sequence = args
        .seq
        .as_deref()
        .map(|s| scalar_list("seq", s))
        .transpose()?;
    let window = usize::try_from(args.rows.unwrap_or(args.window)).map_err(usage)?;
    let request = CheckRequest {
        spec: resolved.spec,
        recursive: resolved.recursive,
        jacobi: resolved.jacobi,
        sequence,
        order: args.order,
        window,
        options: if args.force {
            TpOptions::forced()
        } else {
            TpOptions::default()
        },
    };
    let outcome = registry.run(&args.subject, &request).map_err(usage)?;
    let mut parameters = resolved.parameters;
    if let Some(seq) = &request.sequence {
        parameters.push(("seq".into(), render_all(seq).join(",")));
    }
    if let Some(order) = request.order {
        parameters.push(("requested_order".into(), order.to_string()));
    }
    if args.force {
        parameters.push(("force".into(), "true".into()));
    }
    Ok(Run {
        document: Document {
            schema: SCHEMA,
            command,
            parameters: pairs_to_map(&parameters),
            result: check_payload(&args.subject, &outcome),
        },
        format: args.format,
        code: if outcome.holds { 0 } else { 1 },
    })
}

fn catalan_like(args: &CatalanArgs, command: Vec<String>) -> Usage<Run> {
    let p = input::recursive_params(&args.params)?;
    let count = usize::try_from(args.count).map_err(usage)?;
    let values = catalan_like_numbers(&p, count).map_err(usage)?;
    let parameters = vec![
        ("params".to_string(), p.to_string()),
        ("count".to_string(), count.to_string()),
    ];
    Ok(Run {
        document: Document {
            schema: SCHEMA,
            command,
            parameters: pairs_to_map(&parameters),
            result: Payload::Sequence {
                values: render_all(&values),
            },
        },
        format: args.format,
        code: 0,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let run = match &cli.command {
        Command::Gen(args) => gen(args, command),
        Command::Check(args) => check(args, command),
        Command::CatalanLike(args) => catalan_like(args, command),
    };
    match run {
        Ok(run) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if let Err(e) = run
                .document
                .write(run.format, &mut out)
                .and_then(|_| out.flush())
            {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(run.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
