//! `generate`: write a gibberish corpus plus its manifest.

use std::fs;

use serde::Serialize;

use gibnet::corpus::{generate_gibberish, GibberishGrammar};

use crate::artifacts::{csv_with_comments, write_atomic, write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct GenerateSummary {
    pub meta: Meta,
    pub count: usize,
    pub target_words: usize,
    pub manifest: String,
}

pub fn run(config: &RunConfig) -> Result<GenerateSummary, CliError> {
    let Some(gen) = &config.generate else {
        return Err(CliError::Config(
            "config has no [generate] section".into(),
        ));
    };
    let grammar_path = config.resolve_existing(&gen.grammar, "grammar")?;
    let grammar_text = fs::read_to_string(&grammar_path)
        .map_err(|e| CliError::Data(format!("{}: {e}", grammar_path.display())))?;
    let grammar = GibberishGrammar::parse(&grammar_text)?;

    let out_dir = config.resolve(&gen.out_dir);
    fs::create_dir_all(&out_dir)?;

    let mut manifest_rows = Vec::with_capacity(gen.count);
    for i in 0..gen.count {
        // Document seeds step off the master seed so the corpus is a pure
        // function of the config.
        let doc = generate_gibberish(&grammar, config.seed.wrapping_add(i as u64), gen.target_words)?;
        let id = format!("fake_{:03}", i + 1);
        let file_name = format!("{id}.txt");
        write_atomic(&out_dir.join(&file_name), doc.body.as_bytes())?;
        manifest_rows.push(format!("{id}\t{file_name}\tfake"));
    }

    let manifest_bytes = csv_with_comments(
        &config.artifact_comments(),
        "# id\tpath\tclass",
        manifest_rows,
    );
    let manifest_path = out_dir.join("manifest.tsv");
    write_atomic(&manifest_path, &manifest_bytes)?;

    let summary = GenerateSummary {
        meta: Meta::from_config(config),
        count: gen.count,
        target_words: gen.target_words,
        manifest: manifest_path.display().to_string(),
    };
    write_json_atomic(&config.output_path("generate_summary.json"), &summary)?;
    Ok(summary)
}
