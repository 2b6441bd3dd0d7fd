//! The `coxnf` command line, as a library so it can be driven in-process.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxnf::{
    render_munn_set, CoxeterSystem, Error, GraphGroup, GroupKind, GroupSpec, InverseMonoid, Letter, Oracle,
    RightAngledCoxeter, Word,
};

#[derive(Debug, Parser)]
#[command(
    name = "coxnf",
    version,
    about = "Geodesics and normal forms in Coxeter and graph groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Group specification file.
    #[arg(long, value_name = "FILE")]
    group: PathBuf,
    /// Answer with the brute-force oracle instead.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Geodesic length.
    Length {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Letters of the shortlex normal form.
    Alphabet {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Letter counts of the shortlex normal form (even Coxeter groups).
    Parikh {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Shortlex normal form (right-angled Coxeter and graph groups).
    Normalize {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Equality in the group.
    Equal {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Equality in the free partially commutative inverse monoid.
    FimEqual {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Munn set, one trace per line.
    Munn {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Compare an operation against the oracle.
    OracleCheck {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        op: Op,
        #[arg(num_args = 1..=2)]
        words: Vec<String>,
    },
}

/// Operations `oracle-check` can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Length,
    Alphabet,
    Parikh,
    Normalize,
    Equal,
}

impl Op {
    fn arity(self) -> usize {
        match self {
            Op::Equal => 2,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Op::Length => "length",
            Op::Alphabet => "alphabet",
            Op::Parikh => "parikh",
            Op::Normalize => "normalize",
            Op::Equal => "equal",
        }
    }
}

/// Failure with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad arguments, unreadable or malformed input: exit 2.
    Usage(String),
    /// Operation not defined for the group kind: exit 3.
    Kind(String),
    /// A broken internal invariant: exit 1.
    Fault(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Kind(_) => 3,
            Failure::Fault(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Kind(m) | Failure::Fault(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::KindMismatch { .. } => Failure::Kind(e.to_string()),
            Error::InternalFault(_) => Failure::Fault(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn refuse(op: &str, kind: GroupKind) -> Failure {
    Failure::Kind(format!("`{op}` is not available for kind {kind}"))
}

/// Parses `argv` (program name first), runs the command and writes its
/// output. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(lines) => {
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    return 1;
                }
            }
            0
        }
        Err(f) => {
            let _ = writeln!(err, "coxnf: {f}");
            f.exit_code()
        }
    }
}

fn load(path: &PathBuf) -> Result<GroupSpec, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    GroupSpec::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn execute(command: Command) -> Result<Vec<String>, Failure> {
    let (op, common, words) = match command {
        Command::Length { common, word } => (Op::Length, common, vec![word]),
        Command::Alphabet { common, word } => (Op::Alphabet, common, vec![word]),
        Command::Parikh { common, word } => (Op::Parikh, common, vec![word]),
        Command::Normalize { common, word } => (Op::Normalize, common, vec![word]),
        Command::Equal { common, left, right } => (Op::Equal, common, vec![left, right]),
        Command::FimEqual { common, left, right } => {
            let spec = load(&common.group)?;
            if common.oracle {
                return Err(Failure::Kind("no oracle for `fim-equal`".into()));
            }
            let u = spec.parse_word(&left)?;
            let v = spec.parse_word(&right)?;
            return fim_equal(&spec, &u, &v);
        }
        Command::Munn { common, word } => {
            let spec = load(&common.group)?;
            if common.oracle {
                return Err(Failure::Kind("no oracle for `munn`".into()));
            }
            let u = spec.parse_word(&word)?;
            return munn(&spec, &u);
        }
        Command::OracleCheck { group, op, words } => {
            let spec = load(&group)?;
            let words = parse_words(&spec, op, &words)?;
            return oracle_check(&spec, op, &words);
        }
    };
    let spec = load(&common.group)?;
    let words = parse_words(&spec, op, &words)?;
    if common.oracle {
        oracle_answer(&spec, op, &words)
    } else {
        answer(&spec, op, &words)
    }
}

fn parse_words(spec: &GroupSpec, op: Op, words: &[String]) -> Result<Vec<Word>, Failure> {
    if words.len() != op.arity() {
        return Err(Failure::Usage(format!(
            "`{}` takes {} word(s), got {}",
            op.name(),
            op.arity(),
            words.len()
        )));
    }
    words
        .iter()
        .map(|w| spec.parse_word(w).map_err(Failure::from))
        .collect()
}

fn render_letters(spec: &GroupSpec, letters: impl IntoIterator<Item = Letter>) -> String {
    letters
        .into_iter()
        .map(|l| spec.letter_name(l))
        .collect::<Vec<_>>()
        .join(",")
}

fn alphabet_line(spec: &GroupSpec, letters: Vec<Letter>) -> String {
    if letters.is_empty() {
        "alphabet".to_string()
    } else {
        format!("alphabet {}", render_letters(spec, letters))
    }
}

fn parikh_line(spec: &GroupSpec, counts: &[usize]) -> String {
    let parts: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(g, c)| format!("{}:{c}", spec.name(g)))
        .collect();
    format!("parikh {}", parts.join(","))
}

/// Normal form of a group element as letters, for the kinds that have one.
fn normal_form(spec: &GroupSpec, w: &Word) -> Result<Word, Failure> {
    match spec.kind() {
        GroupKind::Racg => Ok(RightAngledCoxeter::from_spec(spec)?.shortlex_word(w)),
        GroupKind::Graph => Ok(GraphGroup::from_spec(spec)?.shortlex(w)),
        kind => Err(refuse("normalize", kind)),
    }
}

/// Answers computed by the library algorithms.
pub fn answer(spec: &GroupSpec, op: Op, words: &[Word]) -> Result<Vec<String>, Failure> {
    let kind = spec.kind();
    let w = &words[0];
    let line = match (op, kind) {
        (_, GroupKind::Fim) => return Err(refuse(op.name(), kind)),
        (Op::Length, GroupKind::Graph) => format!("length {}", normal_form(spec, w)?.len()),
        (Op::Length, _) => {
            let system = CoxeterSystem::from_spec(spec)?;
            format!("length {}", system.geodesic_length(&w.generators())?)
        }
        (Op::Alphabet, GroupKind::Graph) => {
            let mut letters = normal_form(spec, w)?.0;
            letters.sort_by_key(|l| l.doubled_index());
            letters.dedup();
            alphabet_line(spec, letters)
        }
        (Op::Alphabet, GroupKind::Racg) => {
            let group = RightAngledCoxeter::from_spec(spec)?;
            let alpha = group.normal_form_alphabet(&w.generators());
            alphabet_line(spec, alpha.into_iter().map(Letter::new).collect())
        }
        (Op::Alphabet, _) => {
            let system = CoxeterSystem::from_spec(spec)?;
            let alpha = system.geodesic_alphabet(&w.generators());
            alphabet_line(spec, alpha.into_iter().map(Letter::new).collect())
        }
        (Op::Parikh, GroupKind::EvenCoxeter) => {
            let system = CoxeterSystem::from_spec(spec)?;
            parikh_line(spec, &system.parikh_even(&w.generators())?)
        }
        (Op::Parikh, _) => return Err(refuse("parikh", kind)),
        (Op::Normalize, _) => spec.render_word(normal_form(spec, w)?.letters()),
        (Op::Equal, GroupKind::Racg | GroupKind::Graph) => {
            (normal_form(spec, w)? == normal_form(spec, &words[1])?).to_string()
        }
        (Op::Equal, _) => {
            // u = v iff u·v⁻¹ = 1, and v⁻¹ is v reversed
            let system = CoxeterSystem::from_spec(spec)?;
            let mut uv = w.generators();
            uv.extend(words[1].generators().iter().rev());
            (system.geodesic_length(&uv)? == 0).to_string()
        }
    };
    Ok(vec![line])
}

/// Answers computed by the brute-force oracle.
pub fn oracle_answer(spec: &GroupSpec, op: Op, words: &[Word]) -> Result<Vec<String>, Failure> {
    let kind = spec.kind();
    if kind == GroupKind::Fim {
        return Err(refuse(op.name(), kind));
    }
    let oracle = Oracle::default();
    let w = &words[0];
    let to_letters = |raw: Vec<usize>| -> Vec<Letter> {
        if matches!(kind, GroupKind::Graph) {
            raw.into_iter().map(Letter::from_doubled_index).collect()
        } else {
            raw.into_iter().map(Letter::new).collect()
        }
    };
    let line = match op {
        Op::Length => format!("length {}", oracle.length(spec, w)?),
        Op::Alphabet => {
            let mut letters = to_letters(oracle.shortlex(spec, w)?);
            letters.sort_by_key(|l| l.doubled_index());
            letters.dedup();
            alphabet_line(spec, letters)
        }
        Op::Parikh => {
            if kind != GroupKind::EvenCoxeter {
                return Err(refuse("parikh", kind));
            }
            let mut counts = vec![0; spec.rank()];
            for g in oracle.shortlex(spec, w)? {
                counts[g] += 1;
            }
            parikh_line(spec, &counts)
        }
        Op::Normalize => {
            if !matches!(kind, GroupKind::Racg | GroupKind::Graph) {
                return Err(refuse("normalize", kind));
            }
            spec.render_word(&to_letters(oracle.shortlex(spec, w)?))
        }
        Op::Equal => oracle.equal(spec, w, &words[1])?.to_string(),
    };
    Ok(vec![line])
}

fn oracle_check(spec: &GroupSpec, op: Op, words: &[Word]) -> Result<Vec<String>, Failure> {
    let ours = answer(spec, op, words)?;
    let theirs = oracle_answer(spec, op, words)?;
    let verdict = if ours == theirs { "agree" } else { "disagree" };
    let mut lines = vec![verdict.to_string()];
    lines.extend(ours.iter().map(|l| format!("algorithm: {l}")));
    lines.extend(theirs.iter().map(|l| format!("oracle: {l}")));
    Ok(lines)
}

fn fim_equal(spec: &GroupSpec, u: &Word, v: &Word) -> Result<Vec<String>, Failure> {
    let monoid = InverseMonoid::from_spec(spec).map_err(|_| refuse("fim-equal", spec.kind()))?;
    Ok(vec![monoid.equal(u, v).to_string()])
}

fn munn(spec: &GroupSpec, u: &Word) -> Result<Vec<String>, Failure> {
    let monoid = InverseMonoid::from_spec(spec).map_err(|_| refuse("munn", spec.kind()))?;
    Ok(render_munn_set(spec, &monoid.munn_set(u)))
}
