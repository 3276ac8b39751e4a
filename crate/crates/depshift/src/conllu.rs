//! CoNLL-U reading: token/sentence model, streaming parser, and structural
//! validation.
//!
//! Only the columns the pipeline consumes are retained: FORM, LEMMA, UPOS,
//! HEAD and DEPREL. Multiword-token range lines (`3-4`) and empty nodes
//! (`3.1`) are dropped; basic-layer HEAD values never point at them, so
//! dropping them cannot dangle an edge. Plain and gzip-compressed files are
//! supported.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use flate2::read::MultiGzDecoder;

use crate::error::{Error, Result};
use crate::text::nfc;

/// One syntactic word from a CoNLL-U row.
///
/// `head` is `0` for the root, otherwise the 1-based `index` of the
/// governing token in the same sentence. Dependency relation subtypes are
/// preserved verbatim (e.g. `nsubj:pass`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub index: usize,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    pub head: usize,
    pub deprel: String,
}

/// A sentence: the tokens of one blank-line-separated block.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    /// Taken from a `# sent_id = ...` comment line when present.
    pub source_id: Option<String>,
}

impl Sentence {
    /// Look up a token by its 1-based CoNLL-U index.
    pub fn token_by_index(&self, index: usize) -> Option<&Token> {
        // Fast path: contiguous ids starting at 1.
        match index.checked_sub(1).and_then(|i| self.tokens.get(i)) {
            Some(t) if t.index == index => Some(t),
            _ => self.tokens.iter().find(|t| t.index == index),
        }
    }

    /// Serialize back to CoNLL-U, emitting only the five retained columns
    /// (`_` elsewhere). No trailing blank line.
    pub fn to_conllu(&self) -> String {
        let mut out = String::new();
        if let Some(id) = &self.source_id {
            out.push_str("# sent_id = ");
            out.push_str(id);
            out.push('\n');
        }
        for t in &self.tokens {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t_\t_\t{}\t{}\t_\t_\n",
                t.index, t.form, t.lemma, t.upos, t.head, t.deprel
            ));
        }
        out
    }
}

/// A recoverable per-sentence parse error. Carries the 1-based line number
/// of the first offending line; the whole block is reported as one error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    ColumnCount(usize),
    BadId(String),
    BadHead(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::ColumnCount(n) => write!(
                f,
                "line {}: expected 10 tab-separated columns, found {}",
                self.line, n
            ),
            ParseErrorKind::BadId(id) => {
                write!(f, "line {}: malformed token id {:?}", self.line, id)
            }
            ParseErrorKind::BadHead(h) => {
                write!(f, "line {}: non-integer HEAD {:?}", self.line, h)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Streaming sentence iterator over a CoNLL-U document.
///
/// Yields `Ok(Sentence)` per well-formed block and `Err(ParseError)` for a
/// block containing a malformed line, so the caller chooses between
/// skip-sentence and abort policies.
pub struct SentenceReader<R> {
    reader: R,
    line_no: usize,
    done: bool,
}

pub fn parse_document<R: BufRead>(reader: R) -> SentenceReader<R> {
    SentenceReader {
        reader,
        line_no: 0,
        done: false,
    }
}

/// Open a corpus file, transparently decompressing `.gz` input.
pub fn open_corpus(path: &Path) -> Result<SentenceReader<Box<dyn BufRead + Send>>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let reader: Box<dyn BufRead + Send> = if path.extension().is_some_and(|e| e == "gz") {
        Box::new(BufReader::new(MultiGzDecoder::new(file)))
    } else {
        Box::new(BufReader::new(file))
    };
    Ok(parse_document(reader))
}

enum Row {
    Token(Token),
    /// Multiword range or empty node; dropped.
    Ignored,
}

fn parse_row(line: &str, line_no: usize) -> std::result::Result<Row, ParseError> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 10 {
        return Err(ParseError {
            line: line_no,
            kind: ParseErrorKind::ColumnCount(cols.len()),
        });
    }
    let id = cols[0];
    if id.contains('-') || id.contains('.') {
        // Range line ("3-4") or empty node ("3.1").
        return Ok(Row::Ignored);
    }
    let index: usize = match id.parse() {
        Ok(i) if i >= 1 => i,
        _ => {
            return Err(ParseError {
                line: line_no,
                kind: ParseErrorKind::BadId(id.to_owned()),
            })
        }
    };
    let head: usize = cols[6].parse().map_err(|_| ParseError {
        line: line_no,
        kind: ParseErrorKind::BadHead(cols[6].to_owned()),
    })?;
    Ok(Row::Token(Token {
        index,
        form: nfc(cols[1]),
        lemma: nfc(cols[2]),
        upos: nfc(cols[3]),
        head,
        deprel: nfc(cols[7]),
    }))
}

impl<R: BufRead> Iterator for SentenceReader<R> {
    type Item = std::result::Result<Sentence, ParseError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut tokens = Vec::new();
        let mut source_id = None;
        let mut error: Option<ParseError> = None;
        let mut saw_row = false;
        let mut buf = String::new();
        loop {
            buf.clear();
            let n = match self.reader.read_line(&mut buf) {
                Ok(n) => n,
                // Treat an unreadable stream like EOF after reporting what we have;
                // callers that need IO errors surfaced should pre-validate the file.
                Err(_) => 0,
            };
            if n == 0 {
                self.done = true;
            } else {
                self.line_no += 1;
            }
            let line = buf.trim_end_matches(['\n', '\r']);
            if n > 0 && !line.is_empty() {
                if let Some(rest) = line.strip_prefix('#') {
                    if let Some(v) = rest.trim().strip_prefix("sent_id") {
                        if let Some(v) = v.trim_start().strip_prefix('=') {
                            source_id = Some(v.trim().to_owned());
                        }
                    }
                    continue;
                }
                saw_row = true;
                if error.is_none() {
                    match parse_row(line, self.line_no) {
                        Ok(Row::Token(t)) => tokens.push(t),
                        Ok(Row::Ignored) => {}
                        Err(e) => error = Some(e),
                    }
                }
                continue;
            }
            // Blank line or EOF: close the current block, if any.
            if let Some(e) = error.take() {
                return Some(Err(e));
            }
            if !tokens.is_empty() {
                return Some(Ok(Sentence { tokens, source_id }));
            }
            if self.done {
                return None;
            }
            // Blank line with nothing pending (or a comment/ignored-only
            // block): keep scanning.
            source_id = None;
            let _ = saw_row;
            saw_row = false;
        }
    }
}

/// A structural defect found by [`validate_sentence`]. Violations are data,
/// not failures: the caller decides whether to skip or abort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based index of the offending token.
    pub token: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    HeadOutOfRange(usize),
    SelfLoop,
    EmptyLemma,
    EmptyDeprel,
}

impl fmt::Display for Violation {
    fmt_violation!();
}

macro_rules! fmt_violation {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match &self.kind {
                ViolationKind::HeadOutOfRange(h) => {
                    write!(f, "token {}: head out of range ({})", self.token, h)
                }
                ViolationKind::SelfLoop => write!(f, "token {}: self-loop", self.token),
                ViolationKind::EmptyLemma => write!(f, "token {}: empty lemma", self.token),
                ViolationKind::EmptyDeprel => write!(f, "token {}: empty deprel", self.token),
            }
        }
    };
}
use fmt_violation;

/// Check head ranges, self-loops, and empty lemma/deprel fields.
/// An empty list means the sentence is structurally sound.
pub fn validate_sentence(sentence: &Sentence) -> Vec<Violation> {
    let mut violations = Vec::new();
    for t in &sentence.tokens {
        if t.head == t.index {
            violations.push(Violation {
                token: t.index,
                kind: ViolationKind::SelfLoop,
            });
        } else if t.head != 0 && sentence.token_by_index(t.head).is_none() {
            violations.push(Violation {
                token: t.index,
                kind: ViolationKind::HeadOutOfRange(t.head),
            });
        }
        if t.lemma.is_empty() || t.lemma == "_" {
            violations.push(Violation {
                token: t.index,
                kind: ViolationKind::EmptyLemma,
            });
        }
        if t.deprel.is_empty() || t.deprel == "_" {
            violations.push(Violation {
                token: t.index,
                kind: ViolationKind::EmptyDeprel,
            });
        }
    }
    violations
}
