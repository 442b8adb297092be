use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superdiv::catalog::{export_catalog, lookup, ClassId};
use superdiv::classifier::{classify, enumerate, fusion_table, identify_constants, Classification};
use superdiv::matrix::word_to_matrix;
use superdiv::superdivision::{emit_table, verify_with_constants, TableFormat};
use superdiv::{Error, Grading, Presentation, Series, SignedWord};

#[derive(Parser)]
#[command(name = "superdiv", version, about = "Alphabetic presentations of graded superdivision algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFmt {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// The 3 division algebras and the 7 Z2-graded superdivision algebras.
    Tenfold,
    /// The 13 Z2xZ2-graded classes, one block each.
    Thirteen,
    /// Enumerate and classify one grading and series.
    Classify {
        /// none, z2 or z2z2
        #[arg(long)]
        grading: Grading,
        /// real, complex or quaternionic
        #[arg(long)]
        series: Series,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check every superdivision axiom on a presentation file.
    Verify { file: PathBuf },
    /// Name the catalog class of a presentation file.
    Identify { file: PathBuf },
    /// Multiplication table of a catalog class, e.g. D2_C4.
    Table {
        class: ClassId,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFmt,
    },
    /// Which S11 classes arise from given S01, S10 classes.
    Fusion {
        #[arg(long, default_value = "complex")]
        series: Series,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The signed permutation matrix of a word, e.g. -AX.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        word: SignedWord,
    },
    /// Write every catalog entry as a presentation file into a directory.
    Export { dir: PathBuf },
}

/// Exit status: 0 success, 1 a negative answer (invalid or unknown), 2 usage.
enum Failure {
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    text.parse().map_err(|e: Error| Failure::Usage(format!("{}: {e}", path.display())))
}

fn class_label(c: &Classification, k: usize) -> String {
    c.classes[k].class_id.map_or_else(|| "unknown".into(), |id| id.to_string())
}

fn classification_text(c: &Classification) -> String {
    let mut out = String::new();
    for (k, record) in c.classes.iter().enumerate() {
        let fp = &record.fingerprint;
        writeln!(out, "{} ({} presentations)", class_label(c, k), record.member_count()).unwrap();
        writeln!(out, "  squares: {}", fp.square_signs.join(" ")).unwrap();
        if !fp.projections.is_empty() {
            let p: Vec<String> = fp.projections.iter().map(|id| id.index.to_string()).collect();
            writeln!(out, "  projections: {}", p.join("/")).unwrap();
        }
        for line in record.representative.to_string().lines() {
            writeln!(out, "  {line}").unwrap();
        }
    }
    out
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Tenfold => {
            let mut out = String::new();
            for grading in [Grading::None, Grading::Z2] {
                for series in Series::ALL {
                    out += &classification_text(&classify(&enumerate(grading, series))?);
                }
            }
            Ok(out)
        }
        Command::Thirteen => {
            let mut out = String::new();
            for series in Series::ALL {
                out += &classification_text(&classify(&enumerate(Grading::Z2Z2, series))?);
            }
            Ok(out)
        }
        Command::Classify { grading, series, format } => {
            let c = classify(&enumerate(grading, series))?;
            Ok(match format {
                Format::Text => classification_text(&c),
                Format::Json => serde_json::to_string_pretty(&c.to_json()).expect("json") + "\n",
            })
        }
        Command::Verify { file } => {
            let p = read_presentation(&file)?;
            match verify_with_constants(&p) {
                Ok((report, _)) => {
                    let mut out = format!("valid: {} generators, word length {}\n", report.generators, report.word_length);
                    for s in report.sectors {
                        writeln!(
                            out,
                            "  sector {}: dimension {}, {}, {} oracle determinants nonzero",
                            s.sector, s.dimension, s.criterion, s.oracle_samples
                        )
                        .unwrap();
                    }
                    Ok(out)
                }
                Err(e) => Err(Failure::Negative(format!("invalid: {e}"))),
            }
        }
        Command::Identify { file } => {
            let p = read_presentation(&file)?;
            let (_, sc) = verify_with_constants(&p).map_err(|e| Failure::Negative(format!("invalid: {e}")))?;
            match identify_constants(&sc) {
                Ok((id, _)) => Ok(format!("{id}\n")),
                Err(Error::UnknownClass(_)) => Err(Failure::Negative("unknown".into())),
                Err(e) => Err(e.into()),
            }
        }
        Command::Table { class, format } => {
            let format = match format {
                TableFmt::Text => TableFormat::Text,
                TableFmt::Json => TableFormat::Json,
                TableFmt::Csv => TableFormat::Csv,
            };
            Ok(emit_table(&lookup(class)?.presentation, format)?)
        }
        Command::Fusion { series, format } => {
            let t = fusion_table(series)?;
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&t.to_json()).expect("json") + "\n",
                Format::Text => {
                    let mut out = String::new();
                    let n = t.size() as u8;
                    for a in 1..=n {
                        for b in 1..=n {
                            let cell = t.cell(a, b);
                            let outs: Vec<String> = cell.output_ids().iter().map(|id| id.index.to_string()).collect();
                            let flag = if cell.multiclass() { " (*)" } else { "" };
                            writeln!(out, "{a} x {b} -> {}{flag}", outs.join(",")).unwrap();
                        }
                    }
                    out
                }
            })
        }
        Command::Matrix { word } => Ok(word_to_matrix(&word).to_string()),
        Command::Export { dir } => {
            let paths = export_catalog(&dir)?;
            Ok(paths.iter().map(|p| format!("{}\n", p.display())).collect())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
