use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Result of one command: structured data plus its human rendering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    /// What failed, with the first failing degree where there is one.
    pub failure: Option<String>,
    pub data: Value,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, data: Value) -> Self {
        Self { command: command.into(), ok: true, failure: None, data, text: Vec::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.text.push(s.into());
        self
    }

    pub fn lines(&mut self, ls: impl IntoIterator<Item = String>) -> &mut Self {
        self.text.extend(ls);
        self
    }

    /// Records a failed check; the first one becomes the report's failure.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> &mut Self {
        if !ok {
            if self.ok {
                self.failure = Some(what());
            }
            self.ok = false;
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.join("\n");
                if !s.is_empty() {
                    s.push('\n');
                }
                match &self.failure {
                    None => s.push_str("status: ok\n"),
                    Some(f) => s.push_str(&format!("status: MISMATCH ({f})\n")),
                }
                s
            }
            Format::Json => {
                let v = serde_json::json!({
                    "command": self.command,
                    "ok": self.ok,
                    "failure": self.failure,
                    "data": self.data,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let fmt_row = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = vec![fmt_row(header.to_vec())];
    for r in rows {
        out.push(fmt_row(r.iter().map(String::as_str).collect()));
    }
    out
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
