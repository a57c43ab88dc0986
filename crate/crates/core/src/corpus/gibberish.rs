//! Weighted context-free grammar expansion for generating gibberish articles.
//!
//! Stands in for the kind of template grammar that paper generators use: the
//! output is grammatical-looking, semantically empty prose. Generation is a
//! pure function of (grammar, seed, target length).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::RawDocument;
use crate::learn::Label;

const MAX_EXPANSION_DEPTH: usize = 128;
const MIN_TARGET_WORDS: usize = 50;

const BUNDLED_GRAMMAR: &str = include_str!("../../../../assets/grammar/scigen_like.grammar");

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("grammar line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("nonterminal {0} is referenced but never defined")]
    UndefinedNonterminal(String),
    #[error("nonterminal {0} cannot derive a terminal string; expansion would never terminate")]
    NoTerminalDerivation(String),
    #[error("expansion exceeded depth {MAX_EXPANSION_DEPTH}; grammar looks non-terminating")]
    ExpansionTooDeep,
    #[error("target_words must be at least {MIN_TARGET_WORDS}, got {0}")]
    TargetTooSmall(usize),
}

#[derive(Debug, Clone)]
struct Production {
    tokens: Vec<String>,
    weight: u32,
}

/// A weighted CFG over space-separated tokens. Tokens written in ALL_CAPS are
/// nonterminals; everything else is a terminal.
#[derive(Debug, Clone)]
pub struct GibberishGrammar {
    rules: BTreeMap<String, Vec<Production>>,
    start_symbol: String,
    vocabulary: BTreeSet<String>,
}

fn is_nonterminal(token: &str) -> bool {
    !token.is_empty()
        && token.chars().next().is_some_and(|c| c.is_ascii_uppercase())
        && token
            .chars()
            .all(|c| c.is_ascii_uppercase() || c.is_ascii_digit() || c == '_')
}

impl GibberishGrammar {
    /// The grammar shipped with the crate (same content as
    /// `assets/grammar/scigen_like.grammar`).
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_GRAMMAR).expect("bundled grammar is well-formed")
    }

    /// Parse `NONTERM -> alt | alt` lines; alternatives may end in `@weight`.
    /// The first left-hand side is the start symbol.
    pub fn parse(text: &str) -> Result<Self, GrammarError> {
        let mut rules: BTreeMap<String, Vec<Production>> = BTreeMap::new();
        let mut start_symbol = None;

        for (n, raw_line) in text.lines().enumerate() {
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| GrammarError::Parse {
                line: n + 1,
                msg: "expected 'NONTERM -> alternatives'".to_string(),
            })?;
            let lhs = lhs.trim();
            if !is_nonterminal(lhs) {
                return Err(GrammarError::Parse {
                    line: n + 1,
                    msg: format!("left-hand side '{lhs}' is not an ALL_CAPS nonterminal"),
                });
            }
            start_symbol.get_or_insert_with(|| lhs.to_string());
            for alt in rhs.split('|') {
                let mut tokens: Vec<String> =
                    alt.split_whitespace().map(str::to_string).collect();
                let mut weight = 1;
                if let Some(last) = tokens.last() {
                    if let Some(w) = last.strip_prefix('@') {
                        weight = w.parse::<u32>().map_err(|_| GrammarError::Parse {
                            line: n + 1,
                            msg: format!("bad weight '{last}'"),
                        })?;
                        if weight == 0 {
                            return Err(GrammarError::Parse {
                                line: n + 1,
                                msg: "weight must be positive".to_string(),
                            });
                        }
                        tokens.pop();
                    }
                }
                if tokens.is_empty() {
                    return Err(GrammarError::Parse {
                        line: n + 1,
                        msg: "empty alternative".to_string(),
                    });
                }
                rules
                    .entry(lhs.to_string())
                    .or_default()
                    .push(Production { tokens, weight });
            }
        }

        let start_symbol = start_symbol.ok_or(GrammarError::Parse {
            line: 0,
            msg: "grammar has no rules".to_string(),
        })?;

        let mut vocabulary = BTreeSet::new();
        for prods in rules.values() {
            for p in prods {
                for t in &p.tokens {
                    if is_nonterminal(t) {
                        if !rules.contains_key(t) {
                            return Err(GrammarError::UndefinedNonterminal(t.clone()));
                        }
                    } else {
                        vocabulary.insert(t.clone());
                    }
                }
            }
        }
        // A nonterminal can terminate if some production uses only terminals
        // and nonterminals already known to terminate.
        let mut terminating: BTreeSet<&str> = BTreeSet::new();
        loop {
            let mut changed = false;
            for (nt, prods) in &rules {
                if terminating.contains(nt.as_str()) {
                    continue;
                }
                let ok = prods.iter().any(|p| {
                    p.tokens
                        .iter()
                        .all(|t| !is_nonterminal(t) || terminating.contains(t.as_str()))
                });
                if ok {
                    terminating.insert(nt);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(nt) = rules.keys().find(|nt| !terminating.contains(nt.as_str())) {
            return Err(GrammarError::NoTerminalDerivation(nt.clone()));
        }

        Ok(GibberishGrammar {
            rules,
            start_symbol,
            vocabulary,
        })
    }

    pub fn start_symbol(&self) -> &str {
        &self.start_symbol
    }

    pub fn vocabulary(&self) -> &BTreeSet<String> {
        &self.vocabulary
    }

    fn expand(
        &self,
        symbol: &str,
        rng: &mut ChaCha8Rng,
        depth: usize,
        out: &mut Vec<String>,
    ) -> Result<(), GrammarError> {
        if depth > MAX_EXPANSION_DEPTH {
            return Err(GrammarError::ExpansionTooDeep);
        }
        let prods = &self.rules[symbol];
        let total: u64 = prods.iter().map(|p| u64::from(p.weight)).sum();
        let mut pick = rng.gen_range(0..total);
        let mut chosen = &prods[0];
        for p in prods {
            if pick < u64::from(p.weight) {
                chosen = p;
                break;
            }
            pick -= u64::from(p.weight);
        }
        for token in &chosen.tokens {
            if is_nonterminal(token) {
                self.expand(token, rng, depth + 1, out)?;
            } else {
                out.push(token.clone());
            }
        }
        Ok(())
    }

    fn sentence(&self, rng: &mut ChaCha8Rng) -> Result<String, GrammarError> {
        let mut tokens = Vec::new();
        self.expand(&self.start_symbol, rng, 0, &mut tokens)?;
        let mut text = String::new();
        for tok in &tokens {
            if !text.is_empty() && !matches!(tok.as_str(), "." | "," | ";" | ":" | "?" | "!") {
                text.push(' ');
            }
            text.push_str(tok);
        }
        // Sentence-initial capital.
        let mut chars: Vec<char> = text.chars().collect();
        if let Some(first) = chars.iter_mut().find(|c| c.is_alphabetic()) {
            *first = first.to_ascii_uppercase();
        }
        Ok(chars.into_iter().collect())
    }
}

/// Generate one gibberish document of roughly `target_words` words (within
/// 20% either way). Deterministic for a fixed (grammar, seed, target).
pub fn generate_gibberish(
    grammar: &GibberishGrammar,
    seed: u64,
    target_words: usize,
) -> Result<RawDocument, GrammarError> {
    if target_words < MIN_TARGET_WORDS {
        return Err(GrammarError::TargetTooSmall(target_words));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = target_words + target_words / 5;
    let lo = target_words - target_words / 5;

    let mut body = String::new();
    let mut words = 0usize;
    let mut sentences_in_para = 0usize;
    let mut para_break = 4 + rng.gen_range(0..4);
    let mut retries = 0usize;

    while words < target_words {
        let sent = grammar.sentence(&mut rng)?;
        let sent_words = sent.split_whitespace().count();
        if words + sent_words > hi {
            if words >= lo {
                break;
            }
            retries += 1;
            if retries <= 200 {
                continue;
            }
            // Pathologically long sentences for this target: hard-truncate.
            let take: Vec<&str> = sent.split_whitespace().take(hi - words).collect();
            push_sentence(&mut body, &take.join(" "), sentences_in_para > 0);
            break;
        }
        push_sentence(&mut body, &sent, sentences_in_para > 0);
        words += sent_words;
        sentences_in_para += 1;
        if sentences_in_para >= para_break {
            body.push_str("\n\n");
            sentences_in_para = 0;
            para_break = 4 + rng.gen_range(0..4);
        }
    }

    let mut doc = RawDocument::new(format!("gibberish-{seed}"), body);
    doc.declared_class = Some(Label::Fake);
    Ok(doc)
}

fn push_sentence(body: &mut String, sentence: &str, join: bool) {
    if join && !body.ends_with("\n\n") && !body.is_empty() {
        body.push(' ');
    }
    body.push_str(sentence);
}
