//! Reports and their two renderings.
//!
//! Machine format: UTF-8 lines of `key = value`. The header keys
//! `schema_version`, `command` and `inputs_digest` come first, then
//! `[section]` blocks in a fixed order, and the final line is always
//! `timing_ms = N`. Values never contain newlines. Everything but the last
//! line is a pure function of the inputs.

use std::fmt::Write as _;
use std::time::Duration;

use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Default)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub title: String,
    pub sections: Vec<Section>,
    /// Preformatted text shown instead of the sections named here.
    pub text_body: Option<(String, Vec<String>)>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: String, inputs: &[u8], title: impl Into<String>) -> Self {
        Report {
            command,
            inputs_digest: digest(inputs),
            title: title.into(),
            sections: Vec::new(),
            text_body: None,
            exit_code: 0,
        }
    }

    pub fn section(&mut self, name: impl Into<String>) -> &mut Section {
        self.sections.push(Section::new(name));
        self.sections.last_mut().expect("just pushed")
    }

    pub fn render(&self, format: Format, elapsed: Duration) -> String {
        match format {
            Format::Machine => self.render_machine(elapsed),
            Format::Text => self.render_text(elapsed),
        }
    }

    fn render_machine(&self, elapsed: Duration) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "schema_version = {SCHEMA_VERSION}");
        let _ = writeln!(out, "command = {}", clean(&self.command));
        let _ = writeln!(out, "inputs_digest = {}", self.inputs_digest);
        let _ = writeln!(out, "exit_code = {}", self.exit_code);
        for s in &self.sections {
            let _ = writeln!(out, "[{}]", s.name);
            for (k, v) in &s.entries {
                let _ = writeln!(out, "{k} = {}", clean(v));
            }
        }
        let _ = writeln!(out, "timing_ms = {}", elapsed.as_millis());
        out
    }

    fn render_text(&self, elapsed: Duration) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let mut hidden: &[String] = &[];
        if let Some((body, replaced)) = &self.text_body {
            out.push_str(body);
            hidden = replaced;
        }
        for s in self.sections.iter().filter(|s| !hidden.contains(&s.name)) {
            let _ = writeln!(out, "{}:", s.name);
            let width = s.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &s.entries {
                let _ = writeln!(out, "  {k:<width$}  {v}");
            }
        }
        let _ = writeln!(out, "({} ms)", elapsed.as_millis());
        out
    }
}

fn clean(v: &str) -> String {
    v.replace('\n', "\\n")
}

/// Hex SHA-256.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_layout() {
        let mut r = Report::new("scenario x".into(), b"x", "title");
        r.section("a").put("k", "v\nw");
        let text = r.render(Format::Machine, Duration::from_millis(7));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "schema_version = 1");
        assert_eq!(lines[1], "command = scenario x");
        assert!(lines[2].starts_with("inputs_digest = ") && lines[2].len() == 16 + 64);
        assert_eq!(lines[4], "[a]");
        assert_eq!(lines[5], "k = v\\nw");
        assert_eq!(*lines.last().unwrap(), "timing_ms = 7");
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
