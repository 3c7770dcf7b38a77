//! The on-disk class database under `data/`.
//!
//! `data/classDat.txt` holds one machine-readable line per recorded class,
//! `data/class.txt` the same rows in human-readable form, and
//! `data/{bucket}/m-n-Class-p-q-r.txt` the successively shorter
//! representatives of each class, one matrix per line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{human_list, matrix_string, Polynomial};
use crate::tor::{TorClass, TorProfile};

pub const BUCKETS: [u8; 5] = [0, 1, 2, 3, 4];
pub const MACHINE_INDEX: &str = "classDat.txt";
pub const HUMAN_INDEX: &str = "class.txt";

/// `(m, n, Class, p, q, r)`, ordered numerically by m and n, then
/// alphabetically by class, then by p, q, r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub m: usize,
    pub n: usize,
    pub class: TorClass,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl ClassKey {
    pub fn file_stem(&self) -> String {
        format!("{}-{}-{}-{}-{}-{}", self.m, self.n, self.class, self.p, self.q, self.r)
    }

    fn human_fields(&self) -> String {
        format!("{} {} {} {} {} {}", self.m, self.n, self.class, self.p, self.q, self.r)
    }
}

impl From<TorProfile> for ClassKey {
    fn from(t: TorProfile) -> Self {
        Self {
            m: t.m,
            n: t.n,
            class: t.class,
            p: t.p,
            q: t.q,
            r: t.r,
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{},{})", self.m, self.n, self.class, self.p, self.q, self.r)
    }
}

impl FromStr for ClassKey {
    type Err = Error;

    /// Parses `(m,n,C,p,q,r)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            token: s.to_string(),
            message: msg.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected (m,n,Class,p,q,r)"))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(bad("expected six fields"));
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad("expected a nonnegative integer"));
        Ok(Self {
            m: num(parts[0])?,
            n: num(parts[1])?,
            class: parts[2].parse()?,
            p: num(parts[3])?,
            q: num(parts[4])?,
            r: num(parts[5])?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    /// `matrix{{...}}` text of the shortest representative seen.
    pub best_generators: String,
    pub count: u64,
    pub bucket: u8,
}

impl ClassEntry {
    pub fn human_generators(&self) -> String {
        human_from_machine(&self.best_generators)
    }
}

/// Space-separated generator list with `*` and `^` dropped.
pub fn human_from_machine(matrix: &str) -> String {
    let body = matrix
        .trim()
        .strip_prefix("matrix{{")
        .and_then(|r| r.strip_suffix("}}"))
        .unwrap_or(matrix);
    body.split(',')
        .map(|g| g.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '^').collect::<String>())
        .collect::<Vec<_>>()
        .join(" ")
}

/// 0 for runs with random term counts, else the largest number of terms
/// of a generator, capped at 4.
pub fn bucket_for<F: Field>(gens: &[Polynomial<F>], num_terms: usize) -> u8 {
    if num_terms == 0 {
        return 0;
    }
    gens.iter().map(Polynomial::num_terms).max().unwrap_or(0).min(4) as u8
}

/// What a call to [`ClassDatabase::record`] changed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecordOutcome {
    /// The key had not been seen in any bucket.
    pub new_class: bool,
    /// The representative was replaced by a shorter one.
    pub shortened: bool,
}

/// In-memory mirror of `data/`, written through on every record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDatabase {
    data_dir: PathBuf,
    entries: BTreeMap<(ClassKey, u8), ClassEntry>,
}

/// Loads `root/data`, creating an empty database if it does not exist.
pub fn load_database(root: &Path) -> Result<ClassDatabase> {
    let data_dir = root.join("data");
    if !data_dir.exists() {
        fs::create_dir_all(&data_dir).map_err(|e| Error::io(&data_dir, e))?;
        return Ok(ClassDatabase {
            data_dir,
            entries: BTreeMap::new(),
        });
    }
    let mut entries = BTreeMap::new();
    let global = data_dir.join(MACHINE_INDEX);
    if global.exists() {
        let parsed = parse_index(&global)?;
        let mut by_key: BTreeMap<ClassKey, Vec<(usize, String, u64)>> = BTreeMap::new();
        for (line, key, gens, count) in parsed {
            by_key.entry(key).or_default().push((line, gens, count));
        }
        for (key, lines) in by_key {
            let stored: Vec<u8> = BUCKETS
                .iter()
                .copied()
                .filter(|b| data_dir.join(b.to_string()).join(format!("{}.txt", key.file_stem())).exists())
                .collect();
            let buckets = if stored.len() == lines.len() {
                stored
            } else if stored.is_empty() && lines.len() == 1 {
                vec![0]
            } else {
                return Err(Error::Load {
                    path: global.clone(),
                    line: lines[0].0,
                    message: format!(
                        "{key} has {} index lines but {} class files",
                        lines.len(),
                        stored.len()
                    ),
                });
            };
            for ((_, gens, count), bucket) in lines.into_iter().zip(buckets) {
                entries.insert(
                    (key, bucket),
                    ClassEntry {
                        best_generators: gens,
                        count,
                        bucket,
                    },
                );
            }
        }
    }
    for bucket in BUCKETS {
        let local = data_dir.join(bucket.to_string()).join(MACHINE_INDEX);
        if !local.exists() {
            continue;
        }
        for (line, key, gens, count) in parse_index(&local)? {
            if entries.contains_key(&(key, bucket)) {
                return Err(Error::Load {
                    path: local.clone(),
                    line,
                    message: format!("{key} is also listed in {}", global.display()),
                });
            }
            entries.insert(
                (key, bucket),
                ClassEntry {
                    best_generators: gens,
                    count,
                    bucket,
                },
            );
        }
    }
    Ok(ClassDatabase { data_dir, entries })
}

fn parse_index(path: &Path) -> Result<Vec<(usize, ClassKey, String, u64)>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (key, gens, count) = parse_index_line(line).map_err(|message| Error::Load {
            path: path.to_path_buf(),
            line: i + 1,
            message,
        })?;
        out.push((i + 1, key, gens, count));
    }
    Ok(out)
}

/// Parses `((m,n,C,p,q,r),(matrix{{...}},count))`.
fn parse_index_line(line: &str) -> std::result::Result<(ClassKey, String, u64), String> {
    let rest = line
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or("expected ((key),(matrix,count))")?;
    let (key_text, value) = rest.split_once("),(").ok_or("expected ((key),(matrix,count))")?;
    let key: ClassKey = format!("{key_text})").parse().map_err(|e: Error| e.to_string())?;
    let value = value.strip_suffix(')').ok_or("unterminated value")?;
    let (gens, count) = value.rsplit_once(',').ok_or("missing count")?;
    if !(gens.starts_with("matrix{{") && gens.ends_with("}}")) {
        return Err(format!("`{gens}` is not a generator matrix"));
    }
    let count: u64 = count.trim().parse().map_err(|_| format!("bad count `{count}`"))?;
    if count == 0 {
        return Err("count must be positive".into());
    }
    Ok((key, gens.to_string(), count))
}

impl ClassDatabase {
    pub fn data_dir(&self) -> &Path {
        &self.data_dir
    }

    pub fn entries(&self) -> &BTreeMap<(ClassKey, u8), ClassEntry> {
        &self.entries
    }

    pub fn get(&self, key: &ClassKey, bucket: u8) -> Option<&ClassEntry> {
        self.entries.get(&(*key, bucket))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_class(&self, key: &ClassKey) -> bool {
        self.entries.keys().any(|(k, _)| k == key)
    }

    /// Observation counts per class, summed over buckets.
    pub fn counts(&self) -> BTreeMap<ClassKey, u64> {
        let mut out = BTreeMap::new();
        for ((key, _), e) in &self.entries {
            *out.entry(*key).or_insert(0) += e.count;
        }
        out
    }

    pub fn class_file(&self, key: &ClassKey, bucket: u8) -> PathBuf {
        self.data_dir
            .join(bucket.to_string())
            .join(format!("{}.txt", key.file_stem()))
    }

    /// Records one observation of `key` with minimal generators `gens`.
    pub fn record<F: Field>(&mut self, key: ClassKey, gens: &[Polynomial<F>], bucket: u8) -> Result<RecordOutcome> {
        if gens.is_empty() {
            return Err(Error::Config("cannot record an empty generator list".into()));
        }
        if bucket > 4 {
            return Err(Error::Config(format!("bucket {bucket} is outside 0..=4")));
        }
        let machine = matrix_string(gens);
        let human = human_list(gens);
        let new_class = !self.contains_class(&key);
        let file = self.class_file(&key, bucket);
        let (entry, shortened) = match self.entries.get(&(key, bucket)) {
            None => {
                let dir = file.parent().expect("class file has a parent");
                fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
                write_atomic(&file, format!("{machine}\n").as_bytes())?;
                (
                    ClassEntry {
                        best_generators: machine,
                        count: 1,
                        bucket,
                    },
                    false,
                )
            }
            Some(old) => {
                let shorter = human.len() < old.human_generators().len();
                let mut entry = old.clone();
                entry.count += 1;
                if shorter {
                    let mut content = fs::read(&file).map_err(|e| Error::io(&file, e))?;
                    if !content.is_empty() && !content.ends_with(b"\n") {
                        content.push(b'\n');
                    }
                    content.extend_from_slice(machine.as_bytes());
                    content.push(b'\n');
                    write_atomic(&file, &content)?;
                    entry.best_generators = machine;
                }
                (entry, shorter)
            }
        };
        let mut next = self.entries.clone();
        next.insert((key, bucket), entry);
        self.write_indexes(&next)?;
        self.entries = next;
        Ok(RecordOutcome { new_class, shortened })
    }

    fn write_indexes(&self, entries: &BTreeMap<(ClassKey, u8), ClassEntry>) -> Result<()> {
        let mut machine = String::new();
        let mut human = String::new();
        for ((key, _), e) in entries {
            machine.push_str(&format!("({key},({},{}))\n", e.best_generators, e.count));
            human.push_str(&format!(
                "| {} {} | {} |\n",
                key.human_fields(),
                e.count,
                e.human_generators()
            ));
        }
        write_atomic(&self.data_dir.join(MACHINE_INDEX), machine.as_bytes())?;
        write_atomic(&self.data_dir.join(HUMAN_INDEX), human.as_bytes())
    }
}

/// Records into `db`; the free-function form of [`ClassDatabase::record`].
pub fn record_classification<F: Field>(
    db: &mut ClassDatabase,
    key: ClassKey,
    gens: &[Polynomial<F>],
    bucket: u8,
) -> Result<RecordOutcome> {
    db.record(key, gens, bucket)
}

fn write_atomic(path: &Path, content: &[u8]) -> Result<()> {
    let tmp = path.with_extension("txt.tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
    f.write_all(content).map_err(|e| Error::io(&tmp, e))?;
    drop(f);
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

/// Distinct class keys in a set of recorded entries.
pub fn distinct_classes(db: &ClassDatabase) -> BTreeSet<ClassKey> {
    db.entries.keys().map(|(k, _)| *k).collect()
}
