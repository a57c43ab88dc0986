//! Best-effort LaTeX stripping: markup and math out, prose word order kept.

use super::{CorpusError, RawDocument};

/// Result of stripping one document.
#[derive(Debug, Clone)]
pub struct StrippedText {
    pub text: String,
    pub lint: LintReport,
}

/// Automated stand-in for a manual post-strip check: counts of characters
/// that should not survive in prose, plus recoverable-warning messages.
#[derive(Debug, Clone, Default)]
pub struct LintReport {
    /// Output characters that are neither alphabetic, whitespace nor common
    /// prose punctuation.
    pub residual_non_alpha: usize,
    /// Stray `$` or `\` characters that had to be scrubbed.
    pub stray_specials: usize,
    pub warnings: Vec<String>,
}

/// Environments whose entire content is discarded: math that happens to be
/// written in environment form, and float/table/verbatim blocks that carry no
/// running prose.
const DROP_ENVS: &[&str] = &[
    "equation", "equation*", "align", "align*", "alignat", "alignat*", "eqnarray", "eqnarray*",
    "displaymath", "math", "gather", "gather*", "multline", "multline*", "tabular", "tabular*",
    "table", "table*", "figure", "figure*", "verbatim", "verbatim*", "lstlisting", "tikzpicture",
    "thebibliography", "algorithm", "algorithmic",
];

/// Commands whose brace argument is dropped along with the command.
const DROP_ONE_ARG: &[&str] = &[
    "cite", "citep", "citet", "citealp", "citealt", "citeauthor", "citeyear", "ref", "eqref",
    "pageref", "autoref", "cref", "label", "includegraphics", "input", "include", "bibliography",
    "bibliographystyle", "usepackage", "documentclass", "vspace", "hspace", "pagestyle",
    "thispagestyle", "url", "graphicspath", "institute", "email", "titlerunning",
    "authorrunning", "keywords", "hypersetup",
];

/// Commands that consume two brace arguments.
const DROP_TWO_ARGS: &[&str] = &["setlength", "settowidth", "newcommand", "renewcommand", "providecommand"];

pub(crate) fn is_binary(body: &str) -> bool {
    body.chars()
        .any(|c| c.is_control() && c != '\n' && c != '\r' && c != '\t')
}

/// Strip LaTeX markup, math, comments and non-prose environments from a raw
/// document. The output contains no `\` or `$` characters; unbalanced markup
/// produces a warning in the lint report rather than an error.
pub fn strip_latex(doc: &RawDocument) -> Result<StrippedText, CorpusError> {
    if doc.body.is_empty() {
        return Err(CorpusError::EmptyBody(doc.id.clone()));
    }
    if is_binary(&doc.body) {
        return Err(CorpusError::BinaryInput(doc.id.clone()));
    }

    let chars: Vec<char> = doc.body.chars().collect();
    let mut out = String::with_capacity(chars.len());
    let mut lint = LintReport::default();
    let mut i = 0;

    while i < chars.len() {
        match chars[i] {
            '%' => {
                // Comment to end of line; the newline itself survives.
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '$' => {
                i = skip_dollar_math(&chars, i, &mut lint);
                out.push(' ');
            }
            '\\' => {
                i = handle_command(&chars, i, &mut out, &mut lint);
            }
            '{' | '}' => i += 1,
            '~' => {
                out.push(' ');
                i += 1;
            }
            c => {
                out.push(c);
                i += 1;
            }
        }
    }

    let text: String = out.split_whitespace().collect::<Vec<_>>().join(" ");
    lint.residual_non_alpha += text
        .chars()
        .filter(|c| !c.is_alphabetic() && !c.is_whitespace() && !".,;:!?'\"()-".contains(*c))
        .count();
    Ok(StrippedText { text, lint })
}

/// Skip `$...$` or `$$...$$`, returning the index after the closing delimiter.
fn skip_dollar_math(chars: &[char], start: usize, lint: &mut LintReport) -> usize {
    let display = chars.get(start + 1) == Some(&'$');
    let mut i = start + if display { 2 } else { 1 };
    while i < chars.len() {
        if chars[i] == '\\' {
            i += 2; // escaped character inside math
            continue;
        }
        if chars[i] == '$' {
            if display {
                if chars.get(i + 1) == Some(&'$') {
                    return i + 2;
                }
                i += 1;
                continue;
            }
            return i + 1;
        }
        i += 1;
    }
    lint.stray_specials += 1;
    lint.warnings.push("unterminated math delimiter".to_string());
    i
}

fn handle_command(chars: &[char], start: usize, out: &mut String, lint: &mut LintReport) -> usize {
    let Some(&next) = chars.get(start + 1) else {
        lint.stray_specials += 1;
        return start + 1;
    };
    if !next.is_ascii_alphabetic() {
        return match next {
            '[' => skip_until_seq(chars, start + 2, &['\\', ']'], lint),
            '(' => skip_until_seq(chars, start + 2, &['\\', ')'], lint),
            // Escaped specials and spacing commands become a word boundary.
            _ => {
                out.push(' ');
                start + 2
            }
        };
    }

    let mut i = start + 1;
    let mut name = String::new();
    while i < chars.len() && chars[i].is_ascii_alphabetic() {
        name.push(chars[i]);
        i += 1;
    }
    if i < chars.len() && chars[i] == '*' {
        name.push('*');
        i += 1;
    }

    match name.as_str() {
        "begin" => {
            let (env, after) = read_brace_group(chars, i, lint);
            let env = env.trim().to_string();
            if DROP_ENVS.contains(&env.as_str()) {
                skip_environment(chars, after, &env, lint)
            } else {
                out.push(' ');
                skip_optional_args(chars, after)
            }
        }
        "end" => {
            let (_, after) = read_brace_group(chars, i, lint);
            out.push(' ');
            after
        }
        "item" => {
            out.push(' ');
            skip_optional_args(chars, i)
        }
        "href" => {
            // Drop the URL argument, keep the display text for brace handling.
            let (_, after) = read_brace_group(chars, i, lint);
            after
        }
        n if DROP_ONE_ARG.contains(&n) => {
            let i = skip_optional_args(chars, i);
            let (_, after) = read_brace_group(chars, i, lint);
            out.push(' ');
            after
        }
        n if DROP_TWO_ARGS.contains(&n) => {
            let mut i = skip_optional_args(chars, i);
            for _ in 0..2 {
                let (_, after) = read_brace_group(chars, i, lint);
                i = skip_optional_args(chars, after);
            }
            out.push(' ');
            i
        }
        _ => {
            // Unknown command: drop its name, keep any brace-group content
            // (handled by the main loop), so \textbf{degree} keeps "degree".
            out.push(' ');
            skip_optional_args(chars, i)
        }
    }
}

/// Skip `[...]` groups (and the whitespace before them) after a command.
fn skip_optional_args(chars: &[char], mut i: usize) -> usize {
    loop {
        let mut j = i;
        while j < chars.len() && (chars[j] == ' ' || chars[j] == '\t') {
            j += 1;
        }
        if j < chars.len() && chars[j] == '[' {
            let mut depth = 1;
            j += 1;
            while j < chars.len() && depth > 0 {
                match chars[j] {
                    '[' => depth += 1,
                    ']' => depth -= 1,
                    _ => {}
                }
                j += 1;
            }
            i = j;
        } else {
            return i;
        }
    }
}

/// Read a balanced `{...}` group, returning its content and the index after
/// the closing brace. Missing or unbalanced braces produce a warning and a
/// best-effort result.
fn read_brace_group(chars: &[char], mut i: usize, lint: &mut LintReport) -> (String, usize) {
    while i < chars.len() && chars[i].is_whitespace() {
        i += 1;
    }
    if i >= chars.len() || chars[i] != '{' {
        return (String::new(), i);
    }
    let mut depth = 1;
    let mut content = String::new();
    i += 1;
    while i < chars.len() {
        match chars[i] {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return (content, i + 1);
                }
            }
            _ => {}
        }
        content.push(chars[i]);
        i += 1;
    }
    lint.warnings
        .push("unbalanced braces in command argument".to_string());
    (content, i)
}

/// Skip to the matching `\end{env}`, tolerating nested same-name environments.
fn skip_environment(chars: &[char], mut i: usize, env: &str, lint: &mut LintReport) -> usize {
    let begin_tag: Vec<char> = format!("\\begin{{{env}}}").chars().collect();
    let end_tag: Vec<char> = format!("\\end{{{env}}}").chars().collect();
    let mut depth = 1;
    while i < chars.len() {
        if chars[i] == '\\' {
            if matches_at(chars, i, &begin_tag) {
                depth += 1;
                i += begin_tag.len();
                continue;
            }
            if matches_at(chars, i, &end_tag) {
                depth -= 1;
                i += end_tag.len();
                if depth == 0 {
                    return i;
                }
                continue;
            }
        }
        i += 1;
    }
    lint.warnings
        .push(format!("unterminated environment '{env}'"));
    i
}

fn matches_at(chars: &[char], at: usize, pattern: &[char]) -> bool {
    chars.len() >= at + pattern.len() && chars[at..at + pattern.len()] == *pattern
}

/// Skip until the two-character sequence `seq` is found.
fn skip_until_seq(chars: &[char], mut i: usize, seq: &[char; 2], lint: &mut LintReport) -> usize {
    while i + 1 < chars.len() {
        if chars[i] == seq[0] && chars[i + 1] == seq[1] {
            return i + 2;
        }
        i += 1;
    }
    lint.warnings.push("unterminated math delimiter".to_string());
    chars.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip(body: &str) -> StrippedText {
        strip_latex(&RawDocument::new("t", body)).unwrap()
    }

    #[test]
    fn commands_unwrap_and_math_disappears() {
        assert_eq!(strip("the \\textbf{degree} $k(i)$ of a node").text, "the degree of a node");
    }

    #[test]
    fn citations_and_comments_drop() {
        assert_eq!(strip("A \\cite{x} B % comment\nC").text, "A B C");
    }

    #[test]
    fn display_math_and_environments_drop() {
        let s = strip(
            "Before \\[x^2 + y\\] after. \\begin{equation}\n a_{ij} = 1 \\end{equation} done. \
             \\begin{figure}\\includegraphics{f.png}\\caption{Nope}\\end{figure} end.",
        );
        assert_eq!(s.text, "Before after. done. end.");
    }

    #[test]
    fn neutral_environments_keep_their_prose() {
        let s = strip("\\begin{abstract}Short and clear.\\end{abstract}");
        assert_eq!(s.text, "Short and clear.");
    }

    #[test]
    fn nested_braces_inside_dropped_args() {
        let s = strip("x \\includegraphics[width=0.9\\linewidth]{a{b}c} y");
        assert_eq!(s.text, "x y");
    }

    #[test]
    fn output_never_contains_backslash_or_dollar() {
        let s = strip("\\LaTeX\\ tags and $math$ and \\foo{bar} and \\% done $unclosed");
        assert!(!s.text.contains('\\'), "got: {}", s.text);
        assert!(!s.text.contains('$'), "got: {}", s.text);
    }

    #[test]
    fn unbalanced_environment_is_a_warning_not_an_error() {
        let s = strip("a \\begin{tabular} 1 & 2");
        assert!(!s.lint.warnings.is_empty());
        assert_eq!(s.text, "a");
    }

    #[test]
    fn binary_input_is_an_error() {
        let doc = RawDocument::new("b", "abc\0def");
        assert!(matches!(strip_latex(&doc), Err(CorpusError::BinaryInput(_))));
    }
}
