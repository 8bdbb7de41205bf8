use std::io::Write;
use std::path::Path;

use fractal_fourier::numeric::{Grid, SampledSignal, SupportHint};
use fractal_fourier::Complex64;

use crate::config::fmt_num;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

/// A CSV document: `# key = value` comment lines, a header row, data rows.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub comments: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(comments: Vec<(String, String)>, columns: &[&str]) -> Self {
        Self {
            comments,
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, key: &str, value: impl Into<String>) {
        self.comments.push((key.into(), value.into()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn render(&self) -> CliResult<String> {
        let mut out = Vec::new();
        for (k, v) in &self.comments {
            // keep every comment on one line
            let v = v.replace('\n', " ");
            writeln!(out, "# {k} = {v}").expect("write to memory");
        }
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| CliError::input(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::input(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::input(e.to_string()))
    }
}

/// Write to a file, or stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|source| CliError::Write {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Columns `(abscissa, re, im)` from a commented CSV; `im` may be absent.
pub fn read_columns(path: &Path, abscissa: &str) -> CliResult<(Vec<f64>, Vec<Complex64>)> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let ctx = |msg: String| CliError::input(format!("{}: {msg}", path.display()));
    let headers = rdr.headers().map_err(|e| ctx(e.to_string()))?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let xi = col(abscissa).ok_or_else(|| ctx(format!("missing `{abscissa}` column")))?;
    let ri = col("re").ok_or_else(|| ctx("missing `re` column".into()))?;
    let ii = col("im");
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| ctx(e.to_string()))?;
        let num = |i: usize| -> CliResult<f64> {
            let s = rec.get(i).unwrap_or("");
            s.parse::<f64>()
                .map_err(|_| ctx(format!("row {}: `{s}` is not a number", line + 1)))
        };
        xs.push(num(xi)?);
        let im = match ii {
            Some(i) => num(i)?,
            None => 0.0,
        };
        vs.push(Complex64::new(num(ri)?, im));
    }
    if xs.is_empty() {
        return Err(ctx("no samples".into()));
    }
    Ok((xs, vs))
}

pub fn read_samples(path: &Path, support: SupportHint) -> CliResult<SampledSignal> {
    let (xs, vs) = read_columns(path, "x")?;
    let input = |e: fractal_fourier::Error| CliError::input(format!("{}: {e}", path.display()));
    let grid = Grid::new(xs).map_err(input)?;
    SampledSignal::new(grid, vs, support).map_err(input)
}

pub fn signal_table(comments: Vec<(String, String)>, s: &SampledSignal) -> Table {
    let mut t = Table::new(comments, &["x", "re", "im"]);
    for (&x, v) in s.grid().points().iter().zip(s.values()) {
        t.push(vec![Cell::Num(x), Cell::Num(v.re), Cell::Num(v.im)]);
    }
    t
}
