//! Command-line entry point wiring the pipeline end to end.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use secc::config::RunConfig;
use secc::corpus::{Vocabulary, SOS};
use secc::dyninfer::{generate, generate_baseline, GenerationResult};
use secc::error::{Error, Result};
use secc::pipeline;
use secc::serve::{serve, ServeState};

#[derive(Parser)]
#[command(
    name = "secc",
    version,
    about = "Early-exit code completion: train, benchmark, and serve"
)]
struct Cli {
    /// Key=value config file (defaults apply when omitted)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override a config key, repeatable: --set seed=7
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    sets: Vec<String>,

    /// Exclude wall-clock columns from reports for byte-reproducible output
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tokenize the corpus directory and write the train/test splits
    Ingest,
    /// Train the transformer backbone on the train split
    TrainBackbone,
    /// Train the per-layer exit heads on the frozen backbone
    TrainHeads,
    /// Build gold action labels and train the shared classifier
    TrainController,
    /// Report the minimum layers needed to predict each token
    Profile,
    /// Run the threshold sweep, tolerance selection, and accuracy tables
    Sweep,
    /// Complete a context from a file, or interactively
    Generate {
        /// File whose bytes form the completion context
        #[arg(long)]
        context_file: Option<PathBuf>,
        /// STOP confidence threshold override
        #[arg(long)]
        alpha: Option<f64>,
        /// EXIT confidence threshold override
        #[arg(long)]
        beta: Option<f64>,
        /// Full-depth generation without the controller
        #[arg(long)]
        baseline: bool,
        /// Read contexts line by line from stdin
        #[arg(long)]
        interactive: bool,
        /// Include wall-clock timing in the output
        #[arg(long)]
        timing: bool,
    },
    /// Serve completions on a local TCP port, one request per connection
    Serve {
        #[arg(long)]
        port: Option<u16>,
    },
    /// Pretty-print a TSV report produced by profile or sweep
    Report { file: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}: {e}", e.category());
        std::process::exit(e.exit_code());
    }
}

fn print_losses(stage: &str, losses: &[f64]) {
    for (i, loss) in losses.iter().enumerate() {
        println!("{stage} epoch {}/{}: loss {loss:.6}", i + 1, losses.len());
    }
}

fn run(cli: Cli) -> Result<()> {
    let mut config = RunConfig::load(cli.config.as_deref(), &cli.sets)?;
    if cli.deterministic {
        config.set("deterministic", "true")?;
    }
    let config = config;
    match cli.command {
        Command::Ingest => {
            let summary = pipeline::ingest_stage(&config)?;
            println!(
                "ingested {} train + {} test snippets into {}",
                summary.train_snippets,
                summary.test_snippets,
                config.corpus_path().display()
            );
        }
        Command::TrainBackbone => {
            let losses = pipeline::train_backbone_stage(&config)?;
            print_losses("backbone", &losses);
            println!("saved {}", config.backbone_path().display());
        }
        Command::TrainHeads => {
            let losses = pipeline::train_heads_stage(&config)?;
            print_losses("heads", &losses);
            println!("saved {}", config.heads_path().display());
        }
        Command::TrainController => {
            let losses = pipeline::train_controller_stage(&config)?;
            print_losses("controller", &losses);
            println!("saved {}", config.classifier_path().display());
        }
        Command::Profile => {
            let profile = pipeline::profile_stage(&config)?;
            print!(
                "{}",
                secc::bench::profile_pretty(&profile, &config.echo())
            );
            println!(
                "wrote {} and profile.txt",
                config.out_dir.join("profile.tsv").display()
            );
        }
        Command::Sweep => {
            let artifacts = pipeline::sweep_stage(&config)?;
            println!(
                "swept {} rows over {} eval cases (baseline ROUGE-L {:.6})",
                artifacts.output.rows.len(),
                artifacts.cases,
                artifacts.output.baseline_rouge
            );
            println!(
                "wrote sweep.tsv, selection.tsv, sweep.txt, actions.tsv under {}",
                config.out_dir.display()
            );
        }
        Command::Generate {
            context_file,
            alpha,
            beta,
            baseline,
            interactive,
            timing,
        } => {
            let mut config = config;
            if let Some(a) = alpha {
                config.set("alpha", &a.to_string())?;
            }
            if let Some(b) = beta {
                config.set("beta", &b.to_string())?;
            }
            run_generate(&config, context_file, baseline, interactive, timing)?;
        }
        Command::Serve { port } => {
            let mut config = config;
            if let Some(p) = port {
                config.set("port", &p.to_string())?;
            }
            let engine = pipeline::load_engine(&config)?;
            let state = Arc::new(ServeState::new(engine, &config));
            let listener = std::net::TcpListener::bind(("127.0.0.1", config.port))?;
            println!("listening on {}", listener.local_addr()?);
            serve(state, listener)?;
        }
        Command::Report { file } => {
            let text = std::fs::read_to_string(&file)?;
            print!("{}", secc::bench::render_tsv_pretty(&text));
        }
    }
    Ok(())
}

fn complete_once(
    config: &RunConfig,
    engine: Option<&pipeline::Engine>,
    backbone_only: Option<&secc::backbone::BackboneModel>,
    text: &[u8],
    timing: bool,
) -> Result<GenerationResult> {
    let mut context = vec![SOS];
    context.extend(Vocabulary::encode(text));
    let gen_config = config.generation_config();
    let result = match (engine, backbone_only) {
        (Some(engine), _) => generate(
            &engine.backbone,
            &engine.heads,
            &engine.classifier,
            &context,
            &gen_config,
        )?,
        (None, Some(backbone)) => generate_baseline(backbone, &context, &gen_config)?,
        _ => unreachable!("one engine form is always loaded"),
    };
    println!("{}", result.text());
    println!("---");
    println!("stopped: {}", result.stopped);
    println!(
        "exit_layers: {}",
        result
            .per_token_exit_layer
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    println!("rounds: {}", result.rounds);
    println!("full_layers: {}", result.cost.full_layer_count);
    println!("attn_only: {}", result.cost.attn_only_count);
    println!(
        "layer_equivalents: {:.4}",
        result.cost.layer_equivalents()
    );
    if timing {
        println!("wall_us: {}", result.cost.wall_clock.as_micros());
    }
    Ok(result)
}

fn run_generate(
    config: &RunConfig,
    context_file: Option<PathBuf>,
    baseline: bool,
    interactive: bool,
    timing: bool,
) -> Result<()> {
    // baseline mode needs only the backbone; the controller path needs all three
    let (engine, backbone_only) = if baseline {
        (None, Some(pipeline::load_backbone(config)?))
    } else {
        (Some(pipeline::load_engine(config)?), None)
    };

    if let Some(path) = context_file {
        let text = std::fs::read(&path)?;
        complete_once(
            config,
            engine.as_ref(),
            backbone_only.as_ref(),
            &text,
            timing,
        )?;
        return Ok(());
    }
    if !interactive {
        return Err(Error::Config(
            "generate requires --context-file or --interactive".into(),
        ));
    }
    let stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    loop {
        print!("> ");
        stdout.flush()?;
        let mut line = String::new();
        if stdin.lock().read_line(&mut line)? == 0 {
            break;
        }
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if trimmed.is_empty() {
            break;
        }
        complete_once(
            config,
            engine.as_ref(),
            backbone_only.as_ref(),
            trimmed.as_bytes(),
            timing,
        )?;
    }
    Ok(())
}
