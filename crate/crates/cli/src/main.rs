use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gibnet_cli::commands::{evaluate, generate, ingest, pca, relevance, report};
use gibnet_cli::config::{write_template, RunConfig};
use gibnet_cli::error::CliError;

/// Tell real prose from generated gibberish with word-adjacency-network
/// features.
#[derive(Parser)]
#[command(name = "gibnet", version, about)]
struct Cli {
    /// Run configuration file (TOML).
    #[arg(long, global = true, default_value = "gibnet.toml")]
    config: PathBuf,

    /// Write a commented default config to PATH and exit.
    #[arg(long, value_name = "PATH")]
    write_template: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the feature matrix from the corpus manifests.
    Ingest,
    /// Univariate and multivariate accuracy tables from the feature matrix.
    Evaluate,
    /// Exhaustive feature-relevance sweep and Spearman rank agreement.
    Relevance,
    /// Two-dimensional PCA scatter data for plotting.
    Pca,
    /// Generate a gibberish corpus from the configured grammar.
    Generate,
    /// Run evaluate, pca and (if enabled) relevance, bundling the results.
    Report,
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(path) = cli.write_template {
        write_template(&path)?;
        println!("wrote config template to {}", path.display());
        return Ok(());
    }
    let Some(command) = cli.command else {
        return Err(CliError::Config(
            "no command given; see `gibnet --help`".into(),
        ));
    };
    let config = RunConfig::load(&cli.config)?;
    match command {
        Command::Ingest => {
            let summary = ingest::run(&config)?;
            println!(
                "ingest: {} documents, {} accepted, {} rejected -> {}",
                summary.manifest_count,
                summary.accepted,
                summary.rejected.len(),
                config.output_path("features.csv").display()
            );
            for r in &summary.rejected {
                println!("  rejected {}: {}", r.id, r.reason);
            }
        }
        Command::Evaluate => {
            let out = evaluate::run(&config)?;
            println!(
                "evaluate: best univariate {:.4}, multivariate {:?}",
                out.best_univariate(),
                out.classifiers
                    .iter()
                    .zip(&out.multivariate)
                    .map(|(k, a)| format!("{}={a:.4}", k.as_str()))
                    .collect::<Vec<_>>()
            );
        }
        Command::Relevance => {
            let out = relevance::run(&config)?;
            for ranking in &out.rankings {
                let best = ranking
                    .rank
                    .iter()
                    .position(|&r| r == 1)
                    .map(|j| gibnet::metrics::FEATURE_NAMES[j])
                    .unwrap_or("?");
                println!(
                    "relevance[{}]: {} combinations, top feature {}",
                    ranking.classifier.as_str(),
                    ranking.n_combinations,
                    best
                );
            }
        }
        Command::Pca => {
            let out = pca::run(&config)?;
            println!(
                "pca: {} rows, explained variance {:?}",
                out.rows, out.explained
            );
        }
        Command::Generate => {
            let summary = generate::run(&config)?;
            println!(
                "generate: {} documents of ~{} words, manifest {}",
                summary.count, summary.target_words, summary.manifest
            );
        }
        Command::Report => {
            let summary = report::run(&config)?;
            println!(
                "report: best univariate {:.4}, best multivariate {:.4} -> {}",
                summary.best_univariate_accuracy,
                summary.best_multivariate_accuracy,
                config.output_path("report.json").display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gibnet: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
