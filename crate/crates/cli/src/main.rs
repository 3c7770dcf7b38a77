use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use codim3::datastore::load_database;
use codim3::report::{
    boxes, class_files, classify_file, csv_report, file_mismatches, grid_report, predominance_report, Predicates,
    Predominance,
};
use codim3::routine::{main_routine, RunOptions};
use codim3::sampler::SamplerConfig;
use codim3::{Error, FieldSpec, PrimeField, Rationals};

#[derive(Parser)]
#[command(name = "codim3", version, about = "Sample and classify grade 3 perfect ideals in k[x,y,z]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the main routine for COUNT iterations.
    Run(RunArgs),
    /// Classify every generator matrix in a file or directory.
    Classify {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        field_char: u32,
    },
    /// Print the observed-class grids of the database.
    Report {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long)]
        csv: bool,
        /// File of permissible cells, lines `m n H p q` or `m n BGT p r`.
        #[arg(long)]
        predicates: Option<PathBuf>,
    },
    /// Print the predominant class, or the short list, of every box.
    Predominant {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        #[arg(long, default_value_t = 7)]
        factor: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Directory holding data/ and log.txt.
    #[arg(long, default_value = ".")]
    dir: PathBuf,
    #[arg(long, default_value_t = 3)]
    field_char: u32,
    #[arg(long, default_value_t = 0)]
    check_in: u64,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    deg_seq: Vec<u32>,
    #[arg(long, default_value_t = 2)]
    low_deg: u32,
    #[arg(long, default_value_t = 8)]
    high_deg: u32,
    #[arg(long, default_value_t = 0)]
    num_terms: usize,
    #[arg(long, default_value_t = 5)]
    mn: usize,
    #[arg(long)]
    use_n: bool,
    #[arg(long, default_value_t = 10)]
    max_tries: u32,
    #[arg(long)]
    strict_terms: bool,
    #[arg(long, default_value_t = 12)]
    max_m: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long)]
    logging: bool,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            count: self.count,
            seed: self.seed,
            workers: self.workers,
            root: self.dir.clone(),
            config: SamplerConfig {
                field_char: self.field_char,
                check_in: self.check_in,
                deg_seq: self.deg_seq.clone(),
                low_deg: self.low_deg,
                high_deg: self.high_deg,
                num_terms: self.num_terms,
                mn: self.mn,
                use_n: self.use_n,
                max_tries: self.max_tries,
                strict_terms: self.strict_terms,
                max_m: self.max_m,
                max_n: self.max_n,
                logging: self.logging,
            },
        }
    }
}

fn warn_char_two(c: u32) {
    if c == 2 {
        eprintln!("warning: characteristic 2 realizes fewer classes than characteristic 3");
    }
}

fn classify(path: &Path, field_char: u32, out: &mut dyn Write) -> Result<u8, Error> {
    let spec = FieldSpec::new(field_char)?;
    warn_char_two(field_char);
    let files = if path.is_dir() {
        class_files(path)?
    } else {
        vec![path.to_path_buf()]
    };
    let mut status = 0;
    for file in files {
        let lines = if spec.is_rational() {
            classify_file(&file, Rationals)?
        } else {
            classify_file(&file, PrimeField::new(field_char)?)?
        };
        for l in &lines {
            let shown = match &l.result {
                Ok(p) => p.to_string(),
                Err(e) => format!("error: {e}"),
            };
            let _ = writeln!(out, "{}:{}: {shown}", file.display(), l.line);
            if l.result.is_err() {
                status = status.max(1);
            }
        }
        for problem in file_mismatches(&file, &lines) {
            if !problem.contains("error") && lines.iter().all(|l| l.result.is_ok()) {
                status = 3;
            }
            let _ = writeln!(out, "{}: mismatch: {problem}", file.display());
        }
    }
    Ok(status)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Run(args) => {
            warn_char_two(args.field_char);
            let summary = main_routine(&args.options(), &mut out)?;
            Ok(if summary.errors.is_empty() { 0 } else { 3 })
        }
        Command::Classify { path, field_char } => classify(&path, field_char, &mut out),
        Command::Report {
            dir,
            m,
            n,
            csv,
            predicates,
        } => {
            let db = load_database(&dir)?;
            let predicates = predicates.map(|p| Predicates::load(&p)).transpose()?;
            let selected = match (m, n) {
                (Some(m), Some(n)) => vec![(m, n)],
                _ => boxes(&db).into_iter().collect(),
            };
            if csv {
                let filter = m.zip(n);
                let _ = write!(out, "{}", csv_report(&db, filter));
                return Ok(0);
            }
            for (m, n) in selected {
                let (h, bgt) = grid_report(&db, m, n, predicates.as_ref());
                let _ = writeln!(out, "{}", h.to_text());
                let _ = writeln!(out, "{}", bgt.to_text());
            }
            Ok(0)
        }
        Command::Predominant { dir, factor } => {
            let db = load_database(&dir)?;
            for ((m, n), p) in predominance_report(&db, factor)? {
                let text = match p {
                    Predominance::Predominant(k) => format!("predominant {}", k.label()),
                    Predominance::ShortList(ks) => ks.iter().map(|k| k.label()).collect::<Vec<_>>().join(", "),
                };
                let _ = writeln!(out, "({m},{n}): {text}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
