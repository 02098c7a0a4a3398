//! Command-line front end. Results go to stdout as TSV, diagnostics to
//! stderr. Exit status: 0 success, 1 validation/check failure or cap, 2 usage.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::complexify::{complexify, validate_parity};
use crate::fusion_ring::{monomial_expand, ring_product, word_to_generators, RingElement};
use crate::models::{patterns_of_len, Model, ModelName, PatternLetter};
use crate::partitions::{enumerate_partitions, partition_map, span_rank, Caps, PartitionError};
use crate::rep_ring::ComplexifiedEmbedding;
use crate::selftest;
use crate::words::{validate_fusion_set, word_fuse, FusionSet, Word};

#[derive(Parser, Debug)]
#[command(
    name = "freefusion",
    about = "Exact fusion rules of free quantum groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fusion-set axioms (and the parity grading, if given).
    Validate { file: PathBuf },
    /// Fuse two non-empty words.
    Fuse {
        file: PathBuf,
        left: String,
        right: String,
    },
    /// Ring product of two words; `1` is the unit.
    Product {
        file: PathBuf,
        left: String,
        right: String,
    },
    /// Both basis changes between a word and generator monomials.
    Expand { file: PathBuf, word: String },
    /// Emit the free complexification as a fusion-set file.
    Complexify { file: PathBuf },
    /// Decompose a tensor pattern of the fundamental, e.g. `U Ubar U`.
    Decompose {
        model: String,
        #[arg(required = true, num_args = 1..)]
        pattern: Vec<String>,
    },
    /// Irreducibles reached by tensor patterns up to a length, with dimensions.
    Dims {
        model: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        eval_n: Option<i64>,
    },
    /// Enumerate partitions of k upper and l lower points.
    Partitions {
        k: usize,
        l: usize,
        #[arg(long)]
        nc: bool,
        /// Also print every T_P matrix for this n.
        #[arg(long)]
        matrix: Option<usize>,
    },
    /// Rank of the span of the partition maps.
    Rank {
        k: usize,
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nc: bool,
    },
    /// Compare complexified fusion against the free-product recursion.
    Crosscheck {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Run every built-in verification.
    Selftest,
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<bool, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Check(format!("write failed: {e}"))
}

fn load(path: &PathBuf) -> Result<FusionSet, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    FusionSet::parse(&text).map_err(|e| Failure::Check(format!("{}: {e}", path.display())))
}

fn load_valid(path: &PathBuf) -> Result<FusionSet, Failure> {
    let set = load(path)?;
    let report = validate_fusion_set(&set);
    if !report.is_valid() {
        return Err(Failure::Check(format!(
            "{} is not a valid fusion set: {}",
            path.display(),
            report.render(&set).join("; ")
        )));
    }
    Ok(set)
}

/// Parses a dotted word argument; `allow_unit` accepts `1` as the empty word.
fn word_arg(set: &FusionSet, name: &str, text: &str, allow_unit: bool) -> Result<Word, Failure> {
    if allow_unit && text == "1" {
        return Ok(Word::empty());
    }
    if text.is_empty() {
        return Err(Failure::Usage(format!("argument {name}: empty word")));
    }
    set.parse_word(text)
        .map_err(|e| Failure::Usage(format!("argument {name} `{text}`: {e}")))
}

fn model_arg(text: &str) -> Result<Model, Failure> {
    let name: ModelName = text
        .parse()
        .map_err(|e: crate::models::ModelError| Failure::Usage(format!("argument MODEL: {e}")))?;
    Ok(Model::build(name))
}

fn partition_failure(e: PartitionError) -> Failure {
    match e {
        PartitionError::CapExceeded { .. } => Failure::Check(format!("cap exceeded: {e}")),
        other => Failure::Usage(other.to_string()),
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => {
            let set = load(&file)?;
            let report = validate_fusion_set(&set);
            let mut lines = report.render(&set);
            if set.has_parity() {
                let parity = validate_parity(&set).map_err(|e| Failure::Check(e.to_string()))?;
                lines.extend(parity.render(&set));
            }
            writeln!(out, "letters\t{}", set.len()).map_err(io)?;
            for l in &lines {
                writeln!(out, "violation\t{l}").map_err(io)?;
            }
            let ok = lines.is_empty();
            writeln!(out, "{}", if ok { "valid" } else { "invalid" }).map_err(io)?;
            Ok(ok)
        }
        Command::Fuse { file, left, right } => {
            let set = load_valid(&file)?;
            let v = word_arg(&set, "WORD1", &left, false)?;
            let w = word_arg(&set, "WORD2", &right, false)?;
            let fused = word_fuse(&set, &v, &w).map_err(|e| Failure::Usage(e.to_string()))?;
            match fused {
                Some(f) => writeln!(out, "{}", set.render_word(&f)).map_err(io)?,
                None => writeln!(out, "∅").map_err(io)?,
            }
            Ok(true)
        }
        Command::Product { file, left, right } => {
            let set = load_valid(&file)?;
            let v = word_arg(&set, "WORD1", &left, true)?;
            let w = word_arg(&set, "WORD2", &right, true)?;
            let prod = ring_product(&set, &RingElement::basis(v), &RingElement::basis(w));
            writeln!(out, "{}", prod.render(&set)).map_err(io)?;
            Ok(true)
        }
        Command::Expand { file, word } => {
            let set = load_valid(&file)?;
            let w = word_arg(&set, "WORD", &word, true)?;
            let expansion = monomial_expand(&set, w.letters());
            let generators = word_to_generators(&set, &w);
            writeln!(out, "monomial\t{}", expansion.render(&set)).map_err(io)?;
            writeln!(out, "word\t{}", generators.render(&set)).map_err(io)?;
            Ok(true)
        }
        Command::Complexify { file } => {
            let set = load(&file)?;
            let c = complexify(&set).map_err(|e| Failure::Check(e.to_string()))?;
            write!(out, "{}", c.set().to_source()).map_err(io)?;
            Ok(true)
        }
        Command::Decompose { model, pattern } => {
            let m = model_arg(&model)?;
            let pattern = pattern
                .iter()
                .map(|p| p.parse::<PatternLetter>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Usage(format!("argument PATTERN: {e}")))?;
            let d = m
                .decompose_fundamental_power(&pattern)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "label\tmultiplicity\tdim").map_err(io)?;
            for (label, mult) in d.iter() {
                writeln!(out, "{}\t{}\t{}", m.render(label), mult, m.dim(label)).map_err(io)?;
            }
            Ok(true)
        }
        Command::Dims {
            model,
            max_len,
            eval_n,
        } => {
            let m = model_arg(&model)?;
            if max_len == 0 {
                return Err(Failure::Usage("--max-len must be at least 1".into()));
            }
            if let Some(n) = eval_n {
                if n < 4 {
                    writeln!(
                        err,
                        "warning: n = {n} < 4; the fusion rules may degenerate for small n"
                    )
                    .map_err(io)?;
                }
            }
            let mut labels = BTreeSet::new();
            for len in 1..=max_len {
                for pattern in patterns_of_len(len) {
                    let d = m
                        .decompose_fundamental_power(&pattern)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    labels.extend(d.labels().cloned());
                }
            }
            match eval_n {
                Some(n) => writeln!(out, "label\tdim\tdim(n={n})").map_err(io)?,
                None => writeln!(out, "label\tdim").map_err(io)?,
            }
            for label in &labels {
                let dim = m.dim(label);
                match eval_n {
                    Some(n) => writeln!(out, "{}\t{}\t{}", m.render(label), dim, dim.eval(n)),
                    None => writeln!(out, "{}\t{}", m.render(label), dim),
                }
                .map_err(io)?;
            }
            Ok(true)
        }
        Command::Partitions { k, l, nc, matrix } => {
            let caps = Caps::default();
            let ps = enumerate_partitions(k, l, nc, &caps).map_err(partition_failure)?;
            for p in &ps {
                writeln!(out, "{p}").map_err(io)?;
                if let Some(n) = matrix {
                    let m = partition_map(p, n, &caps).map_err(partition_failure)?;
                    write!(out, "{}", m.to_tsv()).map_err(io)?;
                }
            }
            writeln!(out, "count\t{}", ps.len()).map_err(io)?;
            Ok(true)
        }
        Command::Rank { k, l, n, nc } => {
            let caps = Caps::default();
            let ps = enumerate_partitions(k, l, nc, &caps).map_err(partition_failure)?;
            let rank = span_rank(&ps, n, &caps).map_err(partition_failure)?;
            writeln!(out, "partitions\t{}", ps.len()).map_err(io)?;
            writeln!(out, "rank\t{rank}").map_err(io)?;
            Ok(true)
        }
        Command::Crosscheck { file, max_len } => {
            let set = load(&file)?;
            let c = complexify(&set).map_err(|e| Failure::Check(e.to_string()))?;
            let emb = ComplexifiedEmbedding::new(c).map_err(|e| Failure::Check(e.to_string()))?;
            let (checked, failures) = emb.crosscheck_all(max_len);
            writeln!(out, "pairs\t{checked}").map_err(io)?;
            writeln!(out, "mismatches\t{}", failures.len()).map_err(io)?;
            let s = emb.complexified().set();
            for f in &failures {
                writeln!(
                    out,
                    "mismatch\t{}\t{}",
                    s.render_word(&f.x),
                    s.render_word(&f.y)
                )
                .map_err(io)?;
            }
            Ok(failures.is_empty())
        }
        Command::Selftest => {
            let outcomes = selftest::run_all();
            for o in &outcomes {
                writeln!(out, "{}", o.line()).map_err(io)?;
            }
            Ok(outcomes.iter().all(|o| o.passed))
        }
    }
}
