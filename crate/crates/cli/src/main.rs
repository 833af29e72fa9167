use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tonnetz::catalog::{build, CatalogKey};
use tonnetz::io::{self, Document, IoError, LoadMode, Loaded};
use tonnetz::report;
use tonnetz::tonnetz::find_transposition_symmetry;
use tonnetz::{classify, Interval, NoteStyle, SimplexId};

#[derive(Parser)]
#[command(name = "tonnetz", version, about = "Build, check and inspect generalized tonnetzes")]
struct Cli {
    /// Spell notes with ♯ and ♭ instead of ASCII.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog example as a document.
    Build {
        key: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check the coherence conditions. Exit code 1 if any fails.
    Verify { file: String },
    /// Print the chord of every face.
    Classify { file: String },
    /// Chord inventory of one or more documents, with coverage when several are given.
    Report {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The overview table for the B2, C2 and G2 examples.
    #[command(visible_alias = "table7")]
    Overview {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Look for an automorphism realising transposition by `interval` semitones.
    Symmetry {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        interval: i64,
    },
    /// Render a document as a DOT dual graph or an SVG net.
    Export {
        file: String,
        #[arg(long, conflicts_with = "svg", required_unless_present = "svg")]
        dot: bool,
        #[arg(long)]
        svg: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// List the catalog keys.
    List,
}

enum Failure {
    /// Verification failed or no symmetry exists.
    Negative(String),
    Usage(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Unverified(f) => Failure::Negative(format!("verification failed:\n{f}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load_lenient(path: &str) -> Result<Loaded, Failure> {
    let loaded = io::load(path, LoadMode::Unchecked)?;
    if let Err(f) = &loaded.verification {
        eprintln!("warning: {path} does not verify ({} failing conditions)", f.infeasible.len().max(1));
    }
    Ok(loaded)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    let style = if cli.unicode { NoteStyle::Unicode } else { NoteStyle::Ascii };
    match cli.command {
        Command::Build { key, output } => {
            let key: CatalogKey = key.parse().map_err(|e: tonnetz::catalog::CatalogError| Failure::Usage(e.to_string()))?;
            let entry = build(key).map_err(|e| Failure::Negative(e.to_string()))?;
            io::save(&Document::from_entry(&entry), &output)?;
        }
        Command::Verify { file } => {
            let loaded = io::load(&file, LoadMode::Unchecked)?;
            match loaded.verification {
                Ok(w) => {
                    let (v, e, f) = loaded.bundle.tonnetz.surface().f_vector();
                    println!("ok: f-vector ({v}, {e}, {f}), {} coherence conditions hold", w.assignments.len());
                }
                Err(f) => return Err(Failure::Negative(format!("{file} does not verify:\n{f}"))),
            }
        }
        Command::Classify { file } => {
            let t = load_lenient(&file)?.bundle.tonnetz;
            let s = t.surface();
            for (i, face) in s.faces().iter().enumerate() {
                let label = t.label(SimplexId::face(i));
                let notes = label.names(style).join(", ");
                let chord = classify(label);
                let chord = if cli.unicode { format!("{chord:#}") } else { chord.to_string() };
                println!("{}\t{{{notes}}}\t{chord}", face.name);
            }
        }
        Command::Report { files, format } => {
            let loaded = files.iter().map(|f| load_lenient(f)).collect::<Result<Vec<_>, _>>()?;
            let ts: Vec<_> = loaded.iter().map(|l| &l.bundle.tonnetz).collect();
            let inventories: Vec<_> = ts.iter().map(|t| report::inventory(t)).collect();
            let coverage = (ts.len() > 1).then(|| report::completeness(&ts));
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        inventories: &'a [report::Inventory],
                        coverage: &'a Option<report::Coverage>,
                    }
                    print!("{}", json(&Out { inventories: &inventories, coverage: &coverage }));
                }
                Format::Text => {
                    for (i, (file, inv)) in files.iter().zip(&inventories).enumerate() {
                        if i > 0 {
                            println!();
                        }
                        if files.len() > 1 {
                            println!("== {file}");
                        }
                        print!("{}", report::render_inventory(inv, style));
                    }
                    if let Some(c) = &coverage {
                        println!("\n== coverage");
                        print!("{}", report::render_coverage(c, style));
                    }
                }
            }
        }
        Command::Overview { format } => {
            let table = report::overview_table().map_err(|e| Failure::Negative(e.to_string()))?;
            match format {
                Format::Json => print!("{}", json(&table)),
                Format::Text => print!("{}", report::render_overview(&table, style)),
            }
        }
        Command::Symmetry { file, interval } => {
            let t = load_lenient(&file)?.bundle.tonnetz;
            let k = Interval::new(interval);
            let Some(a) = find_transposition_symmetry(&t, k) else {
                return Err(Failure::Negative(format!("no automorphism realises transposition by {}", k.semitones())));
            };
            let s = t.surface();
            println!("transposition by {} semitones, automorphism of order {}", k.semitones(), a.order());
            for (heading, perm, make) in [
                ("vertices", &a.vertex_perm, SimplexId::vertex as fn(usize) -> SimplexId),
                ("edges", &a.edge_perm, SimplexId::edge),
                ("faces", &a.face_perm, SimplexId::face),
            ] {
                println!("{heading}:");
                for (i, &j) in perm.iter().enumerate() {
                    println!("  {} -> {}", s.name(make(i)), s.name(make(j)));
                }
            }
        }
        Command::Export { file, dot, svg: _, output } => {
            let b = load_lenient(&file)?.bundle;
            let text = if dot {
                io::export_dot(&b.tonnetz, style)
            } else {
                let layout = b.layout.ok_or_else(|| Failure::Usage(format!("{file}: no layout, cannot draw an SVG")))?;
                io::export_svg(&b.tonnetz, &layout, style)
            };
            io::write_text(&output, &text)?;
        }
        Command::List => {
            for key in CatalogKey::ALL {
                let entry = build(key).map_err(|e| Failure::Negative(e.to_string()))?;
                let (v, e, f) = entry.tonnetz.surface().f_vector();
                println!("{:<10} ({v}, {e}, {f})  {}", key.as_str(), entry.provenance);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
