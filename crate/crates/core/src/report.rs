//! Reports over a class database: per-box grids, predominant classes, the
//! class G realizability predicate, and classification of stored files.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::datastore::{ClassDatabase, ClassKey, HUMAN_INDEX, MACHINE_INDEX};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::quotient_presentation;
use crate::poly::Ideal;
use crate::tor::{classify_quotient, TorClass, TorProfile};

impl ClassKey {
    /// Short class label: `B`, `C(3)`, `G(r)`, `H(p,q)` or `T`.
    pub fn label(&self) -> String {
        match self.class {
            TorClass::B => "B".into(),
            TorClass::C => "C(3)".into(),
            TorClass::G => format!("G({})", self.r),
            TorClass::H => format!("H({},{})", self.p, self.q),
            TorClass::T => "T".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    /// Class H, cells indexed by (p, q).
    H,
    /// Classes B, G and T, cells indexed by (p, r).
    Bgt,
}

impl GridKind {
    fn name(self) -> &'static str {
        match self {
            GridKind::H => "H",
            GridKind::Bgt => "BGT",
        }
    }

    fn column(self) -> &'static str {
        match self {
            GridKind::H => "q",
            GridKind::Bgt => "r",
        }
    }
}

/// Observation counts of the classes in one (m, n)-box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxGrid {
    pub m: usize,
    pub n: usize,
    pub kind: GridKind,
    pub rows: usize,
    pub cols: usize,
    pub cells: BTreeMap<(usize, usize), u64>,
    /// Cells the predicate file declares permissible, if one was given.
    pub permissible: Option<BTreeSet<(usize, usize)>>,
}

impl BoxGrid {
    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.cells.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn nonzero_cells(&self) -> Vec<(usize, usize)> {
        self.cells.iter().filter(|(_, &c)| c > 0).map(|(k, _)| *k).collect()
    }

    /// Row per p, column per q or r. Impermissible cells are shown as `.`
    /// when empty and with a trailing `!` when observed anyway.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "({},{}) {} grid, rows p, columns {}\n",
            self.m,
            self.n,
            self.kind.name(),
            self.kind.column()
        );
        s.push_str("p\\");
        s.push_str(self.kind.column());
        for b in 0..self.cols {
            let _ = write!(s, "\t{b}");
        }
        s.push('\n');
        for a in 0..self.rows {
            let _ = write!(s, "{a}");
            for b in 0..self.cols {
                let c = self.get(a, b);
                let allowed = self.permissible.as_ref().is_none_or(|p| p.contains(&(a, b)));
                let cell = match (allowed, c) {
                    (true, c) => c.to_string(),
                    (false, 0) => ".".into(),
                    (false, c) => format!("{c}!"),
                };
                let _ = write!(s, "\t{cell}");
            }
            s.push('\n');
        }
        s
    }
}

type CellSets = BTreeMap<(usize, usize, &'static str), BTreeSet<(usize, usize)>>;

/// Permissible cells per (m, n, grid), read from lines `m n H p q` or
/// `m n BGT p r`. `#` starts a comment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Predicates {
    cells: CellSets,
}

impl Predicates {
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut cells = CellSets::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Load {
                path: path.to_path_buf(),
                line: i + 1,
                message,
            };
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 5 {
                return Err(err("expected `m n H|BGT a b`".into()));
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a number")));
            let kind = match f[2] {
                "H" => "H",
                "BGT" => "BGT",
                other => return Err(err(format!("unknown grid `{other}`"))),
            };
            cells
                .entry((num(f[0])?, num(f[1])?, kind))
                .or_default()
                .insert((num(f[3])?, num(f[4])?));
        }
        Ok(Self { cells })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn for_grid(&self, m: usize, n: usize, kind: GridKind) -> Option<BTreeSet<(usize, usize)>> {
        self.cells.get(&(m, n, kind.name())).cloned()
    }
}

/// The H-grid and the BGT-grid of the (m, n)-box.
pub fn grid_report(db: &ClassDatabase, m: usize, n: usize, predicates: Option<&Predicates>) -> (BoxGrid, BoxGrid) {
    let mut h = BTreeMap::new();
    let mut bgt = BTreeMap::new();
    for (key, count) in db.counts() {
        if key.m != m || key.n != n {
            continue;
        }
        match key.class {
            TorClass::H => *h.entry((key.p, key.q)).or_insert(0) += count,
            TorClass::B | TorClass::G | TorClass::T => *bgt.entry((key.p, key.r)).or_insert(0) += count,
            TorClass::C => {}
        }
    }
    let build = |kind: GridKind, cells: BTreeMap<(usize, usize), u64>, cols: usize| {
        let rows = cells.keys().map(|k| k.0 + 1).max().unwrap_or(0).max(4);
        let cols = cells.keys().map(|k| k.1 + 1).max().unwrap_or(0).max(cols);
        BoxGrid {
            m,
            n,
            kind,
            rows,
            cols,
            cells,
            permissible: predicates.and_then(|p| p.for_grid(m, n, kind)),
        }
    };
    (build(GridKind::H, h, n + 1), build(GridKind::Bgt, bgt, m + 1))
}

/// The (m, n)-boxes present in the database.
pub fn boxes(db: &ClassDatabase) -> BTreeSet<(usize, usize)> {
    db.counts().keys().map(|k| (k.m, k.n)).collect()
}

/// `m,n,class,p,q,r,count` rows, optionally restricted to one box.
pub fn csv_report(db: &ClassDatabase, box_filter: Option<(usize, usize)>) -> String {
    let mut s = String::from("m,n,class,p,q,r,count\n");
    for (k, count) in db.counts() {
        if box_filter.is_some_and(|(m, n)| (k.m, k.n) != (m, n)) {
            continue;
        }
        let _ = writeln!(s, "{},{},{},{},{},{},{}", k.m, k.n, k.class, k.p, k.q, k.r, count);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predominance {
    Predominant(ClassKey),
    ShortList(Vec<ClassKey>),
}

/// A class is predominant when observed at least `factor` times as often as
/// every other class of its box. Otherwise every class observed at least
/// `1/factor` times as often as the most common one is listed.
pub fn predominant_classes(counts: &BTreeMap<ClassKey, u64>, factor: u64) -> Result<Predominance> {
    let max = *counts
        .values()
        .max()
        .ok_or_else(|| Error::Config("no classes to compare".into()))?;
    for (k, &c) in counts {
        if counts.iter().all(|(j, &d)| j == k || c >= factor.saturating_mul(d)) {
            return Ok(Predominance::Predominant(*k));
        }
    }
    Ok(Predominance::ShortList(
        counts
            .iter()
            .filter(|(_, &c)| factor.saturating_mul(c) >= max)
            .map(|(k, _)| *k)
            .collect(),
    ))
}

/// Predominance per box of the database.
pub fn predominance_report(db: &ClassDatabase, factor: u64) -> Result<Vec<((usize, usize), Predominance)>> {
    let mut per_box: BTreeMap<(usize, usize), BTreeMap<ClassKey, u64>> = BTreeMap::new();
    for (k, c) in db.counts() {
        per_box.entry((k.m, k.n)).or_default().insert(k, c);
    }
    per_box
        .into_iter()
        .map(|(b, counts)| Ok((b, predominant_classes(&counts, factor)?)))
        .collect()
}

/// Whether class G(r) is expected to be realizable in the (m, n)-box:
/// for n = 2, `2 <= r <= m - 5` or `r = m - 3`; for n >= 3, `2 <= r <= m - 4`.
pub fn g_conjecture_permissible(m: usize, n: usize, r: usize) -> bool {
    let (m, r) = (m as i64, r as i64);
    match n {
        0 | 1 => false,
        _ if r < 2 => false,
        2 => r <= m - 5 || r == m - 3,
        _ => r <= m - 4,
    }
}

/// One line of a classified file.
#[derive(Clone, Debug)]
pub struct FileLine {
    pub line: usize,
    pub text: String,
    pub result: std::result::Result<TorProfile, String>,
}

/// Classifies every `matrix{{...}}` line of a file.
pub fn classify_file<F: Field>(path: &Path, field: F) -> Result<Vec<FileLine>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| FileLine {
            line: i + 1,
            text: l.trim().to_string(),
            result: Ideal::parse(l, field)
                .and_then(|ideal| quotient_presentation(&ideal))
                .and_then(|q| classify_quotient(&q))
                .map_err(|e| e.to_string()),
        })
        .collect())
}

/// Problems found in a classified file: lines whose profile differs from
/// the first line's, or from the class encoded in the file name.
pub fn file_mismatches(path: &Path, lines: &[FileLine]) -> Vec<String> {
    let mut out = Vec::new();
    let named: Option<ClassKey> = path
        .file_stem()
        .and_then(|s| s.to_str())
        .and_then(|s| format!("({})", s.replace('-', ",")).parse().ok());
    let first = lines.iter().find_map(|l| l.result.as_ref().ok().copied());
    for l in lines {
        match &l.result {
            Err(e) => out.push(format!("line {}: {e}", l.line)),
            Ok(p) => {
                if let Some(k) = named {
                    if ClassKey::from(*p) != k {
                        out.push(format!("line {}: classified as {p}, file name says {k}", l.line));
                    }
                } else if first.is_some_and(|f| f != *p) {
                    out.push(format!("line {}: classified as {p}, line 1 gave {}", l.line, first.unwrap()));
                }
            }
        }
    }
    out
}

/// Text files under `dir` other than the index and log files, sorted.
pub fn class_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).map_err(|e| Error::io(&d, e))? {
            let path = entry.map_err(|e| Error::io(&d, e))?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "txt") {
                let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
                if ![MACHINE_INDEX, HUMAN_INDEX, "log.txt"].contains(&name) {
                    out.push(path);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(s: &str) -> ClassKey {
        s.parse().unwrap()
    }

    #[test]
    fn predominance_examples() {
        let h00 = key("(5,2,H,0,0,0)");
        let h10 = key("(5,2,H,1,0,0)");
        let b = key("(5,2,B,1,1,2)");
        let g2 = key("(5,2,G,0,1,2)");
        let counts = BTreeMap::from([(h00, 700), (h10, 99)]);
        assert_eq!(predominant_classes(&counts, 7).unwrap(), Predominance::Predominant(h00));
        let counts = BTreeMap::from([(b, 400), (h00, 300), (g2, 10)]);
        assert_eq!(predominant_classes(&counts, 7).unwrap(), Predominance::ShortList(vec![b, h00]));
        let single = BTreeMap::from([(g2, 1)]);
        assert_eq!(predominant_classes(&single, 7).unwrap(), Predominance::Predominant(g2));
        assert!(predominant_classes(&BTreeMap::new(), 7).is_err());
    }

    #[test]
    fn g_predicate() {
        assert!(g_conjecture_permissible(6, 2, 3));
        assert!(g_conjecture_permissible(8, 2, 5));
        assert!(!g_conjecture_permissible(6, 3, 3));
        assert!(g_conjecture_permissible(9, 2, 4));
        assert!(!g_conjecture_permissible(9, 2, 5));
        assert!(!g_conjecture_permissible(9, 4, 1));
    }

    #[test]
    fn labels() {
        assert_eq!(key("(5,2,H,0,0,0)").label(), "H(0,0)");
        assert_eq!(key("(8,2,G,0,1,5)").label(), "G(5)");
        assert_eq!(key("(3,1,C,3,1,3)").label(), "C(3)");
    }

    #[test]
    fn predicate_file() {
        let p = Predicates::parse("# comment\n5 2 H 0 0\n5 2 BGT 1 2\n", Path::new("p.txt")).unwrap();
        assert_eq!(p.for_grid(5, 2, GridKind::H), Some(BTreeSet::from([(0, 0)])));
        assert!(Predicates::parse("5 2 Q 0 0", Path::new("p.txt")).is_err());
    }
}
