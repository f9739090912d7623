mod analyze;
mod communities;
mod dynamics;
mod generate;
mod motifs;
mod polynomial;
mod resistance;

use std::io::Read;
use std::path::Path;

use netphys::io::EdgeListDocument;
use netphys::Graph;

use crate::args::{Cli, Command};
use crate::error::{CliError, CliResult};

/// Runs the chosen verb and returns what should be written out.
pub fn run(cli: &Cli) -> CliResult<String> {
    let common = &cli.common;
    match &cli.command {
        Command::Analyze(args) => analyze::run(common, args),
        Command::Polynomial(args) => polynomial::run(common, args),
        Command::Generate { model } => generate::run(common, model),
        Command::Dynamics { model } => dynamics::run(common, model),
        Command::Resistance(args) => resistance::run(common, args),
        Command::Communities(args) => communities::run(common, args),
        Command::Motifs(args) => motifs::run(common, args),
    }
}

/// Reads an edge-list document from `path`, or standard input for `-`.
pub fn read_document(path: &Path) -> CliResult<EdgeListDocument> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::io("<stdin>", e))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?
    };
    Ok(EdgeListDocument::parse(&text)?)
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    Ok(read_document(path)?.to_graph()?)
}

/// `key: value` lines for the plain-text reports.
#[derive(Default)]
pub struct TextReport(String);

impl TextReport {
    pub fn line(&mut self, key: &str, value: impl TextValue) -> &mut Self {
        self.0.push_str(&format!("{key}: {}\n", value.text()));
        self
    }

    pub fn raw(&mut self, text: &str) -> &mut Self {
        self.0.push_str(text);
        if !text.ends_with('\n') {
            self.0.push('\n');
        }
        self
    }

    pub fn finish(&mut self) -> String {
        std::mem::take(&mut self.0)
    }
}

/// Shortest round-trip form, switching to exponent notation for very small
/// or very large magnitudes.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

/// Space-separated values.
pub fn join(values: &[f64]) -> String {
    values.iter().map(|&v| num(v)).collect::<Vec<_>>().join(" ")
}

pub trait TextValue {
    fn text(&self) -> String;
}

impl TextValue for f64 {
    fn text(&self) -> String {
        num(*self)
    }
}

impl TextValue for &f64 {
    fn text(&self) -> String {
        num(**self)
    }
}

macro_rules! display_text {
    ($($t:ty),*) => {
        $(impl TextValue for $t {
            fn text(&self) -> String {
                self.to_string()
            }
        })*
    };
}

display_text!(usize, u64, &u64, bool, &str, String, &String);
