//! Word tokenization for plain text.

/// Split plain text into lowercase word tokens.
///
/// Tokens are maximal alphabetic runs. Apostrophes are allowed inside a run
/// and the run is then split at them, so possessives come out as a separate
/// `s` token ("Sally's" -> `sally`, `s`) that the stopword list later drops.
/// Digits, punctuation and hyphens all act as separators.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        if ch.is_alphabetic() {
            current.extend(ch.to_lowercase());
        } else if (ch == '\'' || ch == '\u{2019}') && !current.is_empty() {
            // Apostrophe inside a word: mark an internal split point.
            current.push('\'');
        } else {
            flush(&mut current, &mut tokens);
        }
    }
    flush(&mut current, &mut tokens);
    tokens
}

fn flush(current: &mut String, tokens: &mut Vec<String>) {
    if current.is_empty() {
        return;
    }
    for part in current.split('\'') {
        if !part.is_empty() {
            tokens.push(part.to_string());
        }
    }
    current.clear();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn possessives_split_into_word_and_s() {
        assert_eq!(
            tokenize("Sally's--so little, indeed"),
            vec!["sally", "s", "so", "little", "indeed"]
        );
    }

    #[test]
    fn empty_input_gives_no_tokens() {
        assert_eq!(tokenize(""), Vec::<String>::new());
    }

    #[test]
    fn abbreviations_split_at_periods() {
        assert_eq!(
            tokenize("Mr. Carmyle had been"),
            vec!["mr", "carmyle", "had", "been"]
        );
    }

    #[test]
    fn digits_and_hyphens_separate() {
        assert_eq!(
            tokenize("state-of-the-art 42 results"),
            vec!["state", "of", "the", "art", "results"]
        );
    }

    #[test]
    fn contractions_split_at_apostrophe() {
        assert_eq!(tokenize("don't stop"), vec!["don", "t", "stop"]);
    }
}
