//! Document ingestion: raw text or LaTeX in, clean lemma streams out, plus a
//! grammar-driven gibberish generator for building fake corpora.

mod gibberish;
mod latex;
mod lexicon;
mod tokenize;

pub use gibberish::{generate_gibberish, GibberishGrammar, GrammarError};
pub use latex::{strip_latex, LintReport, StrippedText};
pub use lexicon::Lexicon;
pub use tokenize::tokenize;

use std::path::PathBuf;

use thiserror::Error;

use crate::learn::Label;

/// A document before any processing.
#[derive(Debug, Clone)]
pub struct RawDocument {
    /// Unique id within a corpus.
    pub id: String,
    pub source_path: Option<PathBuf>,
    pub body: String,
    pub declared_class: Option<Label>,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, body: impl Into<String>) -> Self {
        RawDocument {
            id: id.into(),
            source_path: None,
            body: body.into(),
            declared_class: None,
        }
    }

    /// Treat the body as LaTeX when the source path says so.
    pub fn looks_like_latex(&self) -> bool {
        self.source_path
            .as_ref()
            .and_then(|p| p.extension())
            .is_some_and(|e| e.eq_ignore_ascii_case("tex"))
    }
}

/// Ordered lowercase lemmas after stopword removal and lemmatization.
///
/// Invariants: no lemma is empty, none is in the active stopword list, and
/// the order of the original text is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenStream {
    pub doc_id: String,
    pub lemmas: Vec<String>,
}

impl TokenStream {
    pub fn new(doc_id: impl Into<String>, lemmas: Vec<String>) -> Self {
        TokenStream {
            doc_id: doc_id.into(),
            lemmas,
        }
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("document {0} has an empty body")]
    EmptyBody(String),
    #[error("document {0} looks binary (control bytes in body)")]
    BinaryInput(String),
    #[error("lexicon has an empty stopword list")]
    EmptyStopwords,
    #[error("bad lexicon data: {0}")]
    LexiconParse(String),
}

/// Full preprocessing pipeline for one document: optional LaTeX stripping,
/// tokenization, stopword removal, lemmatization.
///
/// Returns the lemma stream together with the lint report from the stripping
/// stage (zeroed for plain-text input).
pub fn preprocess(doc: &RawDocument, lexicon: &Lexicon) -> Result<(TokenStream, LintReport), CorpusError> {
    if doc.body.is_empty() {
        return Err(CorpusError::EmptyBody(doc.id.clone()));
    }
    let (text, lint) = if doc.looks_like_latex() {
        let stripped = strip_latex(doc)?;
        (stripped.text, stripped.lint)
    } else {
        if latex::is_binary(&doc.body) {
            return Err(CorpusError::BinaryInput(doc.id.clone()));
        }
        (doc.body.clone(), LintReport::default())
    };
    let tokens = tokenize(&text);
    let kept = lexicon.remove_stopwords(&tokens)?;
    let stream = lexicon.lemmatize(&kept, &doc.id);
    Ok((stream, lint))
}
