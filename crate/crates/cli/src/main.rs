use clap::{Args, Parser, Subcommand};
use conical::dispatch::RegionTag;
use conical_cli::{
    evaluate, selftest_exit, sweep, worst_ierr, write_decision_table, write_regions, write_rows,
    write_selftest, Format, OrderList, Range, SweepSpec, EXIT_USAGE,
};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Conical functions P^m_{-1/2+i tau}(x).
#[derive(Parser)]
#[command(name = "conical", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate at one point.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        m: i32,
        #[arg(long, allow_negative_numbers = true)]
        tau: f64,
        /// Force a method instead of the dispatcher's choice.
        #[arg(long, value_parser = parse_tag)]
        method: Option<RegionTag>,
    },
    /// Evaluate over a grid; ranges are start:stop:count.
    Sweep {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_parser = parse_tag)]
        method: Option<RegionTag>,
    },
    /// Golden values and recurrence residuals.
    Selftest,
    /// Decision table, or method and region for each grid point.
    Regions {
        #[command(flatten)]
        grid: OptGrid,
    },
}

#[derive(Args)]
struct Grid {
    #[arg(long, allow_negative_numbers = true)]
    x: Range,
    /// Orders, e.g. 5 or 0,2,4 or 0..10.
    #[arg(long, allow_negative_numbers = true)]
    m: OrderList,
    #[arg(long, allow_negative_numbers = true)]
    tau: Range,
}

#[derive(Args)]
struct OptGrid {
    #[arg(long, allow_negative_numbers = true, requires_all = ["m", "tau"])]
    x: Option<Range>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["x", "tau"])]
    m: Option<OrderList>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["x", "m"])]
    tau: Option<Range>,
}

fn parse_tag(s: &str) -> Result<RegionTag, String> {
    s.parse()
}

fn run(cli: Cli, w: &mut dyn Write) -> io::Result<u8> {
    let f = cli.format;
    Ok(match cli.cmd {
        Cmd::Eval { x, m, tau, method } => {
            let rows = [evaluate(x, m, tau, method)];
            write_rows(w, &rows, f)?;
            worst_ierr(&rows)
        }
        Cmd::Sweep { grid, method } => {
            let spec = SweepSpec {
                x: grid.x,
                m: grid.m.0,
                tau: grid.tau,
            };
            let rows = sweep(&spec, method);
            write_rows(w, &rows, f)?;
            worst_ierr(&rows)
        }
        Cmd::Selftest => {
            let rep = conical::selftest::run();
            write_selftest(w, &rep, f)?;
            selftest_exit(&rep)
        }
        Cmd::Regions { grid } => {
            if let (Some(x), Some(m), Some(tau)) = (grid.x, grid.m, grid.tau) {
                let spec = SweepSpec { x, m: m.0, tau };
                write_regions(w, &sweep(&spec, None), f)?;
            } else {
                write_decision_table(w)?;
            }
            0
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut w: Box<dyn Write> = match &cli.out {
        Some(p) => match File::create(p) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("conical: cannot write {}: {e}", p.display());
                return ExitCode::from(EXIT_USAGE);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match run(cli, &mut w).and_then(|code| w.flush().map(|_| code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("conical: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
