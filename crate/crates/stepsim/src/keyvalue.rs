//! Line-oriented `[section]` / `key = value` document format shared by the
//! machine, problem, and calibration files.
//!
//! Rules: `#` starts a comment, blank lines are ignored, section headers are
//! bracketed, and every `key = value` line belongs to the most recent header.
//! Consumers fail fast on keys and sections they do not know.

use crate::error::{Error, Result};

/// One parsed section with its keys in file order.
#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

/// One `key = value` line.
#[derive(Debug, Clone)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

/// A whole document: ordered sections.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let mut doc = Document::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::parse(line_no, "unterminated section header"))?
                    .trim();
                if name.is_empty() {
                    return Err(Error::parse(line_no, "empty section name"));
                }
                doc.sections.push(Section {
                    name: name.to_string(),
                    line: line_no,
                    entries: Vec::new(),
                });
            } else if let Some(eq) = line.find('=') {
                let key = line[..eq].trim();
                let value = line[eq + 1..].trim();
                if key.is_empty() {
                    return Err(Error::parse(line_no, "missing key before `=`"));
                }
                let section = doc.sections.last_mut().ok_or_else(|| {
                    Error::parse(line_no, "key/value line before any [section] header")
                })?;
                section.entries.push(Entry {
                    key: key.to_string(),
                    value: value.to_string(),
                    line: line_no,
                });
            } else {
                return Err(Error::parse(
                    line_no,
                    format!("expected `[section]` or `key = value`, found `{line}`"),
                ));
            }
        }
        Ok(doc)
    }

    /// The unique section with this exact name.
    pub fn section(&self, name: &str) -> Result<&Section> {
        let mut found = None;
        for s in &self.sections {
            if s.name == name {
                if found.is_some() {
                    return Err(Error::parse(s.line, format!("duplicate section [{name}]")));
                }
                found = Some(s);
            }
        }
        found.ok_or_else(|| Error::parse(0, format!("missing required section [{name}]")))
    }
}

impl Section {
    fn find(&self, key: &str) -> Result<Option<&Entry>> {
        let mut found = None;
        for e in &self.entries {
            if e.key == key {
                if found.is_some() {
                    return Err(Error::parse(
                        e.line,
                        format!("duplicate key `{key}` in [{}]", self.name),
                    ));
                }
                found = Some(e);
            }
        }
        Ok(found)
    }

    pub fn required(&self, key: &str) -> Result<&str> {
        self.find(key)?
            .map(|e| e.value.as_str())
            .ok_or_else(|| {
                Error::parse(
                    self.line,
                    format!("section [{}] is missing required key `{key}`", self.name),
                )
            })
    }

    pub fn optional(&self, key: &str) -> Result<Option<&str>> {
        Ok(self.find(key)?.map(|e| e.value.as_str()))
    }

    /// Fail-fast check: every key must be in `known`.
    pub fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        for e in &self.entries {
            if !known.contains(&e.key.as_str()) {
                return Err(Error::parse(
                    e.line,
                    format!("unknown key `{}` in section [{}]", e.key, self.name),
                ));
            }
        }
        Ok(())
    }

    pub fn parse_f64(&self, key: &str) -> Result<f64> {
        let raw = self.required(key)?;
        parse_num(raw, self.entry_line(key), key)
    }

    pub fn parse_f64_opt(&self, key: &str) -> Result<Option<f64>> {
        match self.optional(key)? {
            Some(raw) => Ok(Some(parse_num(raw, self.entry_line(key), key)?)),
            None => Ok(None),
        }
    }

    pub fn parse_u64(&self, key: &str) -> Result<u64> {
        let raw = self.required(key)?;
        raw.parse::<u64>().map_err(|_| {
            Error::parse(
                self.entry_line(key),
                format!("key `{key}`: expected a non-negative integer, found `{raw}`"),
            )
        })
    }

    fn entry_line(&self, key: &str) -> usize {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .map(|e| e.line)
            .unwrap_or(self.line)
    }
}

fn parse_num(raw: &str, line: usize, key: &str) -> Result<f64> {
    raw.parse::<f64>().map_err(|_| {
        Error::parse(
            line,
            format!("key `{key}`: expected a number, found `{raw}`"),
        )
    })
}

/// Serialization helper: writes sections back out in canonical form.
/// Floats use the shortest representation that round-trips.
#[derive(Debug, Default)]
pub struct Writer {
    buf: String,
}

impl Writer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, text: &str) -> &mut Self {
        for line in text.lines() {
            self.buf.push_str("# ");
            self.buf.push_str(line);
            self.buf.push('\n');
        }
        self
    }

    pub fn section(&mut self, name: &str) -> &mut Self {
        if !self.buf.is_empty() {
            self.buf.push('\n');
        }
        self.buf.push('[');
        self.buf.push_str(name);
        self.buf.push_str("]\n");
        self
    }

    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.buf.push_str(key);
        self.buf.push_str(" = ");
        self.buf.push_str(&value.to_string());
        self.buf.push('\n');
        self
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_comments() {
        let doc = Document::parse("# hello\n[a]\nx = 1 # trailing\n\n[b]\ny = two words\n").unwrap();
        assert_eq!(doc.sections.len(), 2);
        assert_eq!(doc.section("a").unwrap().required("x").unwrap(), "1");
        assert_eq!(doc.section("b").unwrap().required("y").unwrap(), "two words");
    }

    #[test]
    fn reports_line_numbers() {
        let err = Document::parse("[a]\nbogus line\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn key_before_section_is_an_error() {
        let err = Document::parse("x = 1\n").unwrap_err();
        assert!(err.to_string().contains("before any"), "{err}");
    }

    #[test]
    fn duplicate_keys_rejected() {
        let doc = Document::parse("[a]\nx = 1\nx = 2\n").unwrap();
        let err = doc.section("a").unwrap().required("x").unwrap_err();
        assert!(err.to_string().contains("duplicate key"), "{err}");
    }

    #[test]
    fn unknown_key_rejected() {
        let doc = Document::parse("[a]\nx = 1\nz = 2\n").unwrap();
        let err = doc.section("a").unwrap().reject_unknown(&["x"]).unwrap_err();
        assert!(err.to_string().contains("unknown key `z`"), "{err}");
    }

    #[test]
    fn writer_round_trips() {
        let mut w = Writer::new();
        w.section("a").kv("x", 0.1).kv("y", "text");
        let out = w.finish();
        let doc = Document::parse(&out).unwrap();
        assert_eq!(doc.section("a").unwrap().parse_f64("x").unwrap(), 0.1);
    }
}
