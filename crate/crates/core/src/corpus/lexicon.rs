//! Stopword and lemmatization knowledge: a fixed stopword list, an irregular
//! lemma map, and ordered suffix rules.
//!
//! Lemmatization is lexicon-driven rather than tagger-driven: the exception
//! map is consulted first, then the first matching suffix rule, repeated to a
//! fixed point so that e.g. "meetings" -> "meeting" -> "meet". The whole
//! procedure is deterministic. It sits behind this one type so a heavier
//! tagger-based lemmatizer could replace it without touching callers.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use super::{CorpusError, TokenStream};

const BUNDLED_STOPWORDS: &str = include_str!("../../../../assets/lexicon/stopwords.txt");
const BUNDLED_EXCEPTIONS: &str = include_str!("../../../../assets/lexicon/lemma_exceptions.tsv");
const BUNDLED_RULES: &str = include_str!("../../../../assets/lexicon/suffix_rules.tsv");

/// One ordered suffix rule: replace `suffix` by `replacement` when the stem
/// before the suffix has at least `min_stem` characters. A rule whose
/// replacement equals its suffix pins matching words in place.
#[derive(Debug, Clone)]
pub struct SuffixRule {
    pub suffix: String,
    pub replacement: String,
    pub min_stem: usize,
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    stopwords: HashSet<String>,
    exceptions: HashMap<String, String>,
    rules: Vec<SuffixRule>,
}

impl Lexicon {
    /// The lexicon shipped with the crate (same content as the files under
    /// `assets/lexicon/`).
    pub fn bundled() -> Self {
        Self::from_strs(BUNDLED_STOPWORDS, BUNDLED_EXCEPTIONS, BUNDLED_RULES)
            .expect("bundled lexicon files are well-formed")
    }

    pub fn from_files(
        stopwords: &Path,
        exceptions: &Path,
        rules: &Path,
    ) -> Result<Self, CorpusError> {
        let read = |p: &Path| {
            fs::read_to_string(p)
                .map_err(|e| CorpusError::LexiconParse(format!("{}: {e}", p.display())))
        };
        Self::from_strs(&read(stopwords)?, &read(exceptions)?, &read(rules)?)
    }

    pub fn from_strs(
        stopwords: &str,
        exceptions: &str,
        rules: &str,
    ) -> Result<Self, CorpusError> {
        let stopwords: HashSet<String> = data_lines(stopwords)
            .map(|l| l.to_lowercase())
            .collect();
        if stopwords.is_empty() {
            return Err(CorpusError::EmptyStopwords);
        }

        let mut exc = HashMap::new();
        for (n, line) in data_lines(exceptions).enumerate() {
            let mut it = line.split('\t');
            match (it.next(), it.next()) {
                (Some(w), Some(l)) if !w.is_empty() && !l.is_empty() => {
                    if w.chars().any(|c| c.is_uppercase()) {
                        return Err(CorpusError::LexiconParse(format!(
                            "exception key '{w}' is not lowercase"
                        )));
                    }
                    exc.insert(w.to_string(), l.to_string());
                }
                _ => {
                    return Err(CorpusError::LexiconParse(format!(
                        "exception entry {n}: expected word<TAB>lemma, got '{line}'"
                    )))
                }
            }
        }

        let mut parsed = Vec::new();
        for (n, line) in data_lines(rules).enumerate() {
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 || fields[0].is_empty() {
                return Err(CorpusError::LexiconParse(format!(
                    "suffix rule {n}: expected suffix<TAB>replacement<TAB>min_stem, got '{line}'"
                )));
            }
            let min_stem = fields[2].parse::<usize>().map_err(|_| {
                CorpusError::LexiconParse(format!("suffix rule {n}: bad min_stem '{}'", fields[2]))
            })?;
            parsed.push(SuffixRule {
                suffix: fields[0].to_string(),
                replacement: fields[1].to_string(),
                min_stem,
            });
        }

        Ok(Lexicon {
            stopwords,
            exceptions: exc,
            rules: parsed,
        })
    }

    pub fn is_stopword(&self, word: &str) -> bool {
        self.stopwords.contains(word)
    }

    pub fn stopword_count(&self) -> usize {
        self.stopwords.len()
    }

    /// Drop stopwords, preserving order. Errors if the stopword list is
    /// empty, which can only mean a misconfigured lexicon.
    pub fn remove_stopwords(&self, tokens: &[String]) -> Result<Vec<String>, CorpusError> {
        if self.stopwords.is_empty() {
            return Err(CorpusError::EmptyStopwords);
        }
        Ok(tokens
            .iter()
            .filter(|t| !self.stopwords.contains(*t))
            .cloned()
            .collect())
    }

    /// Lemma of one lowercase word: exception map first, then the first
    /// matching suffix rule, iterated until nothing changes.
    pub fn lemma_of(&self, word: &str) -> String {
        let mut current = word.to_string();
        // Replacements never grow a word, so this terminates; the cap is a
        // guard against a pathological user-supplied rule set.
        for _ in 0..8 {
            let next = self.lemma_step(&current);
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    fn lemma_step(&self, word: &str) -> String {
        if let Some(lemma) = self.exceptions.get(word) {
            return lemma.clone();
        }
        for rule in &self.rules {
            if let Some(stem) = word.strip_suffix(rule.suffix.as_str()) {
                if stem.chars().count() >= rule.min_stem {
                    return format!("{stem}{}", rule.replacement);
                }
            }
        }
        word.to_string()
    }

    /// Map every token to its lemma. Lemmas that land on a stopword (e.g.
    /// "willing" -> "will") are dropped so the output stream honors the
    /// no-stopword invariant.
    pub fn lemmatize(&self, tokens: &[String], doc_id: &str) -> TokenStream {
        let lemmas = tokens
            .iter()
            .map(|t| self.lemma_of(t))
            .filter(|l| !l.is_empty() && !self.stopwords.contains(l))
            .collect();
        TokenStream::new(doc_id, lemmas)
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn bundled_lexicon_loads_with_a_real_stopword_list() {
        let lex = Lexicon::bundled();
        assert!(lex.stopword_count() >= 140);
        assert!(lex.is_stopword("the"));
        assert!(lex.is_stopword("mr"));
        assert!(!lex.is_stopword("before"), "'before' must survive");
        assert!(!lex.is_stopword("little"));
    }

    #[test]
    fn stopword_removal_preserves_order() {
        let lex = Lexicon::bundled();
        assert_eq!(
            lex.remove_stopwords(&words(&["network", "of", "networks"])).unwrap(),
            words(&["network", "networks"])
        );
        assert!(lex.remove_stopwords(&words(&["the", "of", "a"])).unwrap().is_empty());
    }

    #[test]
    fn empty_stopword_list_is_a_misconfiguration() {
        assert!(matches!(
            Lexicon::from_strs("# nothing here\n", "", "s\t\t3"),
            Err(CorpusError::EmptyStopwords)
        ));
    }

    #[test]
    fn plural_and_gerund_rules() {
        let lex = Lexicon::bundled();
        let stream = lex.lemmatize(&words(&["networks", "running"]), "d");
        assert_eq!(stream.lemmas, words(&["network", "run"]));
    }

    #[test]
    fn base_forms_are_fixed_points() {
        let lex = Lexicon::bundled();
        assert_eq!(lex.lemma_of("identify"), "identify");
        assert_eq!(lex.lemma_of("express"), "express");
        assert_eq!(lex.lemma_of("paris"), "paris");
        assert_eq!(lex.lemma_of("sally"), "sally");
    }

    #[test]
    fn lemmatization_runs_to_a_fixed_point() {
        let lex = Lexicon::bundled();
        assert_eq!(lex.lemma_of("meetings"), "meet");
        for w in ["networks", "running", "studies", "carried", "classes"] {
            let once = lex.lemma_of(w);
            assert_eq!(lex.lemma_of(&once), once, "lemma of '{w}' not stable");
        }
    }

    #[test]
    fn lemmas_landing_on_stopwords_are_dropped() {
        let lex = Lexicon::bundled();
        let stream = lex.lemmatize(&words(&["willing", "search"]), "d");
        assert_eq!(stream.lemmas, words(&["search"]));
    }

    #[test]
    fn malformed_rule_file_is_rejected() {
        let err = Lexicon::from_strs("the", "", "s only-two-fields");
        assert!(matches!(err, Err(CorpusError::LexiconParse(_))));
    }
}
