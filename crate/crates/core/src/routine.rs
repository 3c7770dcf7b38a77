//! The main routine: sample, validate, classify and record `count` ideals.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::Instant;

use crate::datastore::{bucket_for, load_database, ClassDatabase, ClassKey};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::poly::Polynomial;
use crate::sampler::{validate_outcome, worker_rng, Sampler, SamplerConfig, Validation};
use crate::tor::classify_quotient;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub count: u64,
    pub seed: u64,
    pub workers: usize,
    /// Directory holding `data/` and `log.txt`.
    pub root: PathBuf,
    pub config: SamplerConfig,
}

impl RunOptions {
    pub fn new(count: u64, root: impl Into<PathBuf>) -> Self {
        Self {
            count,
            seed: 0,
            workers: 1,
            root: root.into(),
            config: SamplerConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSummary {
    pub started: String,
    pub finished: String,
    pub elapsed_secs: u64,
    pub iterations: u64,
    pub classified: u64,
    pub distinct: BTreeSet<ClassKey>,
    /// Classes absent from the database before this run, in order of discovery.
    pub new_classes: Vec<ClassKey>,
    /// Unclassified iterations per reason.
    pub skipped: BTreeMap<String, u64>,
    /// Iterations that hit an internal error.
    pub errors: Vec<(u64, String)>,
}

impl RunSummary {
    /// The closing banner.
    pub fn render(&self) -> String {
        let mut s = format!(
            "Main Routine finished:\nat {}\nran for {} seconds,\nclassified {} ideals,\ngenerated {} distinct classes,\ndiscovered {} new classes\n",
            self.finished,
            self.elapsed_secs,
            self.classified,
            self.distinct.len(),
            self.new_classes.len()
        );
        if !self.new_classes.is_empty() {
            let list: Vec<String> = self.new_classes.iter().map(ClassKey::to_string).collect();
            s.push_str(&format!("{{{}}}\n", list.join(", ")));
        }
        s
    }
}

/// What one iteration produced.
enum Iteration<F: Field> {
    Classified {
        key: ClassKey,
        generators: Vec<Polynomial<F>>,
        bucket: u8,
    },
    Skipped(String),
    Failed(String),
}

fn timestamp() -> String {
    chrono::Local::now().format("%Y-%m-%d %H:%M:%S").to_string()
}

fn start_banner(time: &str, cfg: &SamplerConfig) -> String {
    format!("Main Routine started at {time} with options:\n{}\n", cfg.option_table())
}

pub fn check_in_line(check_in: u64, i: u64) -> String {
    format!("Checking in every {check_in} ideals... done {i} so far")
}

struct Log {
    path: Option<PathBuf>,
}

impl Log {
    fn append(&self, text: &str) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| Error::io(path, e))?;
        f.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))?;
        f.flush().map_err(|e| Error::io(path, e))
    }
}

fn emit(out: &mut dyn Write, log: &Log, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::io("<stdout>", e))?;
    log.append(text)
}

/// Runs the routine, printing banners to `out`.
pub fn main_routine(opts: &RunOptions, out: &mut dyn Write) -> Result<RunSummary> {
    let cfg = &opts.config;
    cfg.validate()?;
    let spec = cfg.field_spec()?;
    if spec.is_rational() {
        run_typed(Rationals, opts, out)
    } else {
        run_typed(PrimeField::new(spec.characteristic())?, opts, out)
    }
}

fn run_typed<F: Field>(field: F, opts: &RunOptions, out: &mut dyn Write) -> Result<RunSummary> {
    let cfg = &opts.config;
    let clock = Instant::now();
    let mut db = load_database(&opts.root)?;
    let log = Log {
        path: cfg.logging.then(|| opts.root.join("log.txt")),
    };
    let started = timestamp();
    emit(out, &log, &start_banner(&started, cfg))?;

    let mut summary = RunSummary {
        started,
        finished: String::new(),
        elapsed_secs: 0,
        iterations: opts.count,
        classified: 0,
        distinct: BTreeSet::new(),
        new_classes: Vec::new(),
        skipped: BTreeMap::new(),
        errors: Vec::new(),
    };
    let workers = opts.workers.max(1) as u64;
    let count = opts.count;
    let result = std::thread::scope(|scope| -> Result<()> {
        let (tx, rx) = mpsc::sync_channel::<(u64, Iteration<F>)>(64 * workers as usize);
        for w in 0..workers.min(count) {
            let tx = tx.clone();
            let mut sampler = Sampler::new(field, cfg.clone(), worker_rng(opts.seed, w))?;
            scope.spawn(move || {
                let mut i = w;
                while i < count {
                    let result = iteration(&mut sampler);
                    if tx.send((i, result)).is_err() {
                        break;
                    }
                    i += workers;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut next = 0u64;
        for (i, result) in rx {
            pending.insert(i, result);
            while let Some(result) = pending.remove(&next) {
                if cfg.check_in > 0 && next > 0 && next.is_multiple_of(cfg.check_in) {
                    emit(out, &Log { path: None }, &format!("{}\n", check_in_line(cfg.check_in, next)))?;
                }
                record(&mut db, &mut summary, next, result)?;
                next += 1;
            }
        }
        Ok(())
    });
    summary.finished = timestamp();
    summary.elapsed_secs = clock.elapsed().as_secs();
    result?;
    emit(out, &log, &summary.render())?;
    Ok(summary)
}

fn record<F: Field>(db: &mut ClassDatabase, summary: &mut RunSummary, i: u64, result: Iteration<F>) -> Result<()> {
    match result {
        Iteration::Classified {
            key,
            generators,
            bucket,
        } => {
            let outcome = db.record(key, &generators, bucket)?;
            summary.classified += 1;
            summary.distinct.insert(key);
            if outcome.new_class {
                summary.new_classes.push(key);
            }
        }
        Iteration::Skipped(reason) => *summary.skipped.entry(reason).or_insert(0) += 1,
        Iteration::Failed(message) => {
            eprintln!("iteration {i}: {message}");
            summary.errors.push((i, message));
        }
    }
    Ok(())
}

fn iteration<F: Field>(sampler: &mut Sampler<F>) -> Iteration<F> {
    match try_iteration(sampler) {
        Ok(it) => it,
        Err(e) => Iteration::Failed(e.to_string()),
    }
}

fn try_iteration<F: Field>(sampler: &mut Sampler<F>) -> Result<Iteration<F>> {
    let outcome = sampler.generate()?;
    if let Some(reason) = outcome.failure {
        return Ok(Iteration::Skipped(reason.to_string()));
    }
    let cfg = sampler.config();
    let validated = match validate_outcome(outcome, cfg)? {
        Validation::Pass(v) => v,
        Validation::Fail(_) => return Ok(Iteration::Skipped("validation-failed".into())),
    };
    let profile = classify_quotient(&validated.quotient)?;
    if profile.m != validated.generators.len() || profile.n != validated.socle_dimension {
        return Err(Error::Internal(format!(
            "{profile} disagrees with {} minimal generators and type {}",
            validated.generators.len(),
            validated.socle_dimension
        )));
    }
    Ok(Iteration::Classified {
        key: profile.into(),
        bucket: bucket_for(&validated.generators, cfg.num_terms),
        generators: validated.generators,
    })
}

/// Convenience for callers that only need the database after a run.
pub fn run_quietly(opts: &RunOptions) -> Result<(RunSummary, ClassDatabase)> {
    let summary = main_routine(opts, &mut std::io::sink())?;
    Ok((summary, load_database(Path::new(&opts.root))?))
}
