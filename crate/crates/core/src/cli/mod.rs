//! Command-line front end.
//!
//! Sequences travel as comma text, everything else as one JSON object per
//! line carrying `"format":1`. Failures print `{"error":..,"detail":{..}}` on
//! stderr and exit 1; usage errors exit 2.
//!
//! `--h random:SEED` draws one `RS_n` index per arc, in lexicographic arc
//! order, from `ChaCha8Rng::seed_from_u64(SEED)` via `gen_range(0..|RS_n|)`.
//! `expand` skips the loop of an extended sequence, whose image comes from
//! `--loop-choice` (default 1); `product` treats loops like any other arc.

pub mod htable;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::census::{self, CensusError, CountReport, Guards};
use crate::construct::{self, ConstructError, LoopChoice, LoopPolicy};
use crate::digraphs::{oxh_product, ArcAssignment, Digraph, DigraphError};
use crate::sem::{self, RotationMember, SemError};
use crate::sequences::{self, Sequence, SequenceError};
use htable::{parse_h_table, HTableError, LoopEntry};

#[derive(Debug, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("input contains no sequence")]
    EmptyInput,
    #[error("malformed --h value {spec:?}")]
    BadHSpec { spec: String },
    #[error("index {index} out of range, the family has {len} members")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("malformed digraph in {path}: {message}")]
    BadDigraph { path: String, message: String },
    #[error("{flag} only applies to {applies_to}")]
    UnusedFlag {
        flag: &'static str,
        applies_to: &'static str,
    },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    HTable(#[from] HTableError),
}

/// The JSON written to stderr: wrapper variants are peeled off so the
/// innermost error name is reported, and `detail` is always an object.
pub fn error_json(e: &CliError) -> ErrorLine {
    const WRAPPERS: [&str; 6] = [
        "Sequence",
        "Digraph",
        "Sem",
        "Construct",
        "Census",
        "HTable",
    ];
    let mut v = serde_json::to_value(e).unwrap_or(Value::Null);
    loop {
        let inner = match v.get("error").and_then(Value::as_str) {
            Some(name) if WRAPPERS.contains(&name) => v.get("detail").cloned(),
            _ => None,
        };
        match inner {
            Some(d) if d.get("error").is_some() => v = d,
            _ => break,
        }
    }
    let mut map = match v {
        Value::Object(map) => map,
        _ => Default::default(),
    };
    let error = map.remove("error").unwrap_or(Value::Null);
    let detail = map
        .remove("detail")
        .unwrap_or_else(|| Value::Object(Default::default()));
    ErrorLine { error, detail }
}

/// Serializes with `error` ahead of `detail`.
#[derive(Debug, Serialize)]
pub struct ErrorLine {
    pub error: Value,
    pub detail: Value,
}

#[derive(Parser)]
#[command(
    name = "langford-forge",
    version,
    about = "Langford and extended Skolem sequences from super edge-magic products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Langford,
    Skolem,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "Sn")]
    Sn,
    #[value(name = "RSn")]
    RSn,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    SkolemExponential,
    LangfordProduct,
    SkolemProduct,
    CycleProduct,
    ExtendedProduct,
    CycleLabelings,
}

#[derive(Subcommand)]
enum Command {
    /// Validate one sequence per input line.
    Verify {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        defect: Option<u32>,
        /// Read from FILE instead of stdin.
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
    },
    /// List members of S_n or RS_n in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: Option<usize>,
    },
    /// The two loop-plus-digon rotations of the canonically labeled cycle.
    Rotations {
        #[arg(long)]
        n: usize,
    },
    /// The product of a base digraph with per-arc images.
    Product {
        /// Base digraph as JSON.
        #[arg(long, value_name = "FILE")]
        base: PathBuf,
        #[arg(long)]
        n: usize,
        /// constant:INDEX, random:SEED or table:FILE.
        #[arg(long = "h", value_name = "SPEC")]
        h: String,
    },
    /// Expand a Langford or extended Skolem sequence.
    Expand {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        defect: u32,
        /// constant:INDEX, random:SEED or table:FILE.
        #[arg(long = "h", value_name = "SPEC")]
        h: String,
        /// Loop image for extended input; overrides a table's "L" entry.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        loop_choice: Option<u8>,
        /// Accept any loop-plus-digons member of RS_n as the loop image.
        #[arg(long)]
        permissive_loop: bool,
    },
    /// Exact count against a lower bound.
    Count {
        #[arg(long, value_enum)]
        bound: BoundArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        defect: Option<u32>,
        #[arg(long)]
        include_trivial: bool,
    },
    /// Expand every seed sequence under every assignment.
    Census {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        defect: u32,
        /// Seeds are extended Skolem sequences.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        include_trivial: bool,
        /// Print the distinct sequences instead of the report.
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Usage(clap::Error),
    Invalid(CliError),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.into())
    }
}

fn usage(kind: ErrorKind, msg: String) -> Failure {
    Failure::Usage(Cli::command().error(kind, msg))
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let out: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut out = Vec::new();
    let result = dispatch(cli.command, stdin, &mut out);
    // Nothing partial reaches stdout on failure.
    match result {
        Ok(()) => match stdout.write_all(&out).and_then(|_| stdout.flush()) {
            Ok(()) => 0,
            Err(_) => 1,
        },
        Err(Failure::Usage(e)) => {
            let _ = write!(stderr, "{}", e.render());
            2
        }
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(
                stderr,
                "{}",
                serde_json::to_string(&error_json(&e)).expect("serializable")
            );
            1
        }
    }
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    let res = match path {
        Some(p) => fs::read_to_string(p).map(|t| text = t),
        None => stdin.read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|e| CliError::Io {
        path: path.map_or("<stdin>".into(), |p| p.display().to_string()),
        message: e.to_string(),
    })?;
    Ok(text)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    read_input(Some(path), &mut std::io::empty())
}

fn sequence_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter(|l| !l.trim().is_empty())
}

fn emit<T: Serialize>(out: &mut Vec<u8>, value: &T) {
    serde_json::to_writer(&mut *out, value).expect("serializable");
    out.push(b'\n');
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Result<(), Failure> {
    match cmd {
        Command::Verify {
            kind,
            defect,
            input,
        } => verify(kind, defect, input.as_deref(), stdin, out),
        Command::Enumerate { family, n, index } => enumerate(family, n, index, out),
        Command::Rotations { n } => rotations(n, out),
        Command::Product { base, n, h } => product(&base, n, &h, out),
        Command::Expand {
            input,
            n,
            defect,
            h,
            loop_choice,
            permissive_loop,
        } => {
            let text = read_input(input.as_deref(), stdin)?;
            let line = sequence_lines(&text).next().ok_or(CliError::EmptyInput)?;
            let values = sequences::parse_symbols(line.trim_end())?;
            let opts = ExpandOptions {
                n,
                defect,
                spec: &h,
                loop_choice: loop_choice.and_then(LoopChoice::from_number),
                permissive: permissive_loop,
            };
            let s = expand(&values, &opts)?;
            writeln!(out, "{s}").expect("vec write");
            Ok(())
        }
        Command::Count {
            bound,
            m,
            n,
            defect,
            include_trivial,
        } => count(bound, m, n, defect, include_trivial, out),
        Command::Census {
            m,
            n,
            defect,
            extended,
            include_trivial,
            list,
        } => census_cmd(m, n, defect, extended, include_trivial, list, out),
    }
}

#[derive(Serialize)]
struct VerifiedLangford {
    format: u32,
    valid: bool,
    m: usize,
    d: u32,
}

#[derive(Serialize)]
struct VerifiedExtended {
    format: u32,
    valid: bool,
    m: usize,
    zero_pos: usize,
    hooked: bool,
    trivial: bool,
}

fn verify(
    kind: Kind,
    defect: Option<u32>,
    input: Option<&Path>,
    stdin: &mut dyn Read,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    let d = match (kind, defect) {
        (Kind::Langford, d) => d.unwrap_or(1),
        (_, None | Some(1)) => 1,
        (_, Some(_)) => {
            return Err(CliError::UnusedFlag {
                flag: "--defect",
                applies_to: "--kind langford",
            }
            .into())
        }
    };
    let text = read_input(input, stdin)?;
    let mut seen = false;
    for line in sequence_lines(&text) {
        seen = true;
        let values = sequences::parse_symbols(line.trim_end())?;
        match kind {
            Kind::Langford | Kind::Skolem => {
                let s = sequences::validate_langford(&values, d)?;
                emit(
                    out,
                    &VerifiedLangford {
                        format: 1,
                        valid: true,
                        m: s.order(),
                        d: s.defect(),
                    },
                );
            }
            Kind::Extended => {
                let s = sequences::validate_extended(&values)?;
                emit(
                    out,
                    &VerifiedExtended {
                        format: 1,
                        valid: true,
                        m: s.order(),
                        zero_pos: s.zero_pos(),
                        hooked: s.is_hooked(),
                        trivial: s.is_trivial(),
                    },
                );
            }
        }
    }
    if !seen {
        return Err(CliError::EmptyInput.into());
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyMember<'a> {
    format: u32,
    family: &'static str,
    n: usize,
    index: usize,
    #[serde(flatten)]
    digraph: &'a Digraph,
}

fn family_guard(n: usize, guards: &Guards) -> Result<(), CensusError> {
    if n == 0 {
        return Err(CensusError::NonPositive { name: "n" });
    }
    if n > guards.max_family_order {
        return Err(CensusError::TooLarge {
            what: "n",
            value: n.to_string(),
            limit: guards.max_family_order.to_string(),
        });
    }
    Ok(())
}

fn enumerate(
    family: Family,
    n: usize,
    index: Option<usize>,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    let guards = Guards::from_env()?;
    family_guard(n, &guards)?;
    let (name, members): (&'static str, Vec<Digraph>) = match family {
        Family::Sn => (
            "Sn",
            sem::enumerate_sn(n)
                .iter()
                .map(|p| p.to_digraph())
                .collect(),
        ),
        Family::RSn => (
            "RSn",
            sem::enumerate_rsn(n)
                .into_iter()
                .map(|r| r.digraph().clone())
                .collect(),
        ),
    };
    let picked: Vec<usize> = match index {
        Some(i) if i >= members.len() => {
            return Err(CliError::IndexOutOfRange {
                index: i,
                len: members.len(),
            }
            .into())
        }
        Some(i) => vec![i],
        None => (0..members.len()).collect(),
    };
    for i in picked {
        emit(
            out,
            &FamilyMember {
                format: 1,
                family: name,
                n,
                index: i,
                digraph: &members[i],
            },
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct RotationLine<'a> {
    format: u32,
    name: &'static str,
    n: usize,
    #[serde(rename = "loop")]
    loop_vertex: usize,
    /// `labeling[i-1]` is the label of the `i`-th cycle vertex.
    labeling: &'a [usize],
    #[serde(flatten)]
    digraph: &'a Digraph,
}

fn rotations(n: usize, out: &mut Vec<u8>) -> Result<(), Failure> {
    if n.is_multiple_of(2) {
        return Err(SemError::EvenOrder { n }.into());
    }
    family_guard(n, &Guards::from_env()?)?;
    let labeling = sem::canonical_cycle_labeling(n)?;
    let (r1, r2) = sem::loop_digon_rotations(n)?;
    for (name, g) in [("R1", &r1), ("R2", &r2)] {
        emit(
            out,
            &RotationLine {
                format: 1,
                name,
                n,
                loop_vertex: sem::loop_vertex(g).expect("one loop"),
                labeling: &labeling,
                digraph: g,
            },
        );
    }
    Ok(())
}

enum HSpec {
    Constant(usize),
    Random(u64),
    Table(PathBuf),
}

fn parse_h_spec(spec: &str) -> Result<HSpec, CliError> {
    let bad = || CliError::BadHSpec {
        spec: spec.to_string(),
    };
    let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
    let digits = !arg.is_empty() && arg.bytes().all(|b| b.is_ascii_digit());
    match kind {
        "constant" if digits => arg.parse().map(HSpec::Constant).map_err(|_| bad()),
        "random" if digits => arg.parse().map(HSpec::Random).map_err(|_| bad()),
        "table" if !arg.is_empty() => Ok(HSpec::Table(PathBuf::from(arg))),
        _ => Err(bad()),
    }
}

fn odd_family(n: usize) -> Result<Vec<RotationMember>, CliError> {
    if n.is_multiple_of(2) {
        return Err(CensusError::EvenOrder { n }.into());
    }
    Ok(census::rotation_family(n, &Guards::from_env()?)?)
}

/// `count` family indices, one per arc in lexicographic arc order.
fn spec_indices(count: usize, family_len: usize, spec: &HSpec) -> Result<Vec<usize>, CliError> {
    match *spec {
        HSpec::Constant(i) if i < family_len => Ok(vec![i; count]),
        HSpec::Constant(i) => Err(CliError::IndexOutOfRange {
            index: i,
            len: family_len,
        }),
        HSpec::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count).map(|_| rng.gen_range(0..family_len)).collect())
        }
        HSpec::Table(_) => unreachable!("tables carry their own images"),
    }
}

fn plain_arcs(base: &Digraph) -> usize {
    base.arcs().filter(|(u, v)| u != v).count()
}

#[derive(Serialize)]
struct DigraphLine<'a> {
    format: u32,
    #[serde(flatten)]
    digraph: &'a Digraph,
}

fn product(base_path: &Path, n: usize, spec: &str, out: &mut Vec<u8>) -> Result<(), Failure> {
    let spec = parse_h_spec(spec)?;
    let text = read_file(base_path)?;
    let base: Digraph = serde_json::from_str(&text).map_err(|e| CliError::BadDigraph {
        path: base_path.display().to_string(),
        message: e.to_string(),
    })?;
    let family = odd_family(n)?;
    let h = match &spec {
        HSpec::Table(path) => {
            let t = parse_h_table(&read_file(path)?, &base, n, &family, false)?;
            ArcAssignment::new(base.clone(), n, t.images)?
        }
        _ => {
            // loops of a general base are ordinary arcs here
            let idx = spec_indices(base.arc_count(), family.len(), &spec)?;
            let images = base
                .arcs()
                .zip(idx)
                .map(|(a, i)| (a, family[i].digraph().clone()))
                .collect();
            ArcAssignment::new(base.clone(), n, images)?
        }
    };
    let g = oxh_product(&base, &h)?;
    emit(
        out,
        &DigraphLine {
            format: 1,
            digraph: &g,
        },
    );
    Ok(())
}

/// Options of a single expansion.
pub struct ExpandOptions<'a> {
    pub n: usize,
    pub defect: u32,
    /// `constant:INDEX`, `random:SEED` or `table:FILE`.
    pub spec: &'a str,
    pub loop_choice: Option<LoopChoice>,
    pub permissive: bool,
}

/// Expands `values` (Langford when of even length, extended Skolem
/// otherwise) and re-validates the result before returning it.
pub fn expand(values: &[u32], opts: &ExpandOptions) -> Result<Sequence, CliError> {
    let spec = parse_h_spec(opts.spec)?;
    let n = opts.n;
    let family = odd_family(n)?;
    if values.len().is_multiple_of(2) {
        if opts.loop_choice.is_some() || opts.permissive {
            return Err(CliError::UnusedFlag {
                flag: "--loop-choice/--permissive-loop",
                applies_to: "extended sequences",
            });
        }
        let s = sequences::validate_langford(values, opts.defect)?;
        let base = construct::seq_to_matching(&s).to_digraph();
        let h = match &spec {
            HSpec::Table(path) => {
                let t = parse_h_table(&read_file(path)?, &base, n, &family, true)?;
                ArcAssignment::new(base, n, t.images)?
            }
            _ => {
                let idx = spec_indices(plain_arcs(&base), family.len(), &spec)?;
                construct::indexed_assignment(base, &family, &idx, None)?
            }
        };
        let out = construct::expand_langford(&s, n, &h)?;
        let checked =
            sequences::validate_langford(out.values(), construct::expanded_defect(opts.defect, n))?;
        Ok(Sequence::Langford(checked))
    } else {
        if opts.defect != 1 {
            return Err(CliError::UnusedFlag {
                flag: "--defect",
                applies_to: "Langford sequences",
            });
        }
        let s = sequences::validate_extended(values)?;
        let base = construct::seq_to_loop_matching(&s).to_digraph();
        let z = s.zero_pos();
        let (mut images, table_loop) = match &spec {
            HSpec::Table(path) => {
                let t = parse_h_table(&read_file(path)?, &base, n, &family, true)?;
                (t.images, t.loop_entry)
            }
            _ => {
                let idx = spec_indices(plain_arcs(&base), family.len(), &spec)?;
                let images = base
                    .arcs()
                    .filter(|(u, v)| u != v)
                    .zip(idx)
                    .map(|(a, i)| (a, family[i].digraph().clone()))
                    .collect();
                (images, None)
            }
        };
        let loop_image = match (opts.loop_choice, table_loop) {
            (Some(c), _) | (None, Some(LoopEntry::Choice(c))) => c.digraph(n)?,
            (None, Some(LoopEntry::Image(g))) => g,
            (None, None) => LoopChoice::First.digraph(n)?,
        };
        images.insert((z, z), loop_image);
        let h = ArcAssignment::new(base, n, images)?;
        let policy = if opts.permissive {
            LoopPolicy::Permissive
        } else {
            LoopPolicy::Canonical
        };
        let out = construct::expand_extended(&s, n, &h, policy)?;
        let checked = sequences::validate_extended(out.values())?;
        Ok(Sequence::Extended(checked))
    }
}

fn need<T>(value: Option<T>, flag: &str, bound: &str) -> Result<T, Failure> {
    value.ok_or_else(|| {
        usage(
            ErrorKind::MissingRequiredArgument,
            format!("--bound {bound} requires {flag}"),
        )
    })
}

fn reject<T>(value: Option<T>, flag: &str, bound: &str) -> Result<(), Failure> {
    match value {
        Some(_) => Err(usage(
            ErrorKind::ArgumentConflict,
            format!("--bound {bound} does not take {flag}"),
        )),
        None => Ok(()),
    }
}

fn count(
    bound: BoundArg,
    m: Option<usize>,
    n: Option<usize>,
    defect: Option<u32>,
    include_trivial: bool,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    let name = bound
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let name = name.as_str();
    if include_trivial && !matches!(bound, BoundArg::ExtendedProduct) {
        return Err(usage(
            ErrorKind::ArgumentConflict,
            format!("--bound {name} does not take --include-trivial"),
        ));
    }
    let g = Guards::from_env()?;
    let report: CountReport = match bound {
        BoundArg::SkolemExponential => {
            reject(n, "--n", name)?;
            reject(defect, "--defect", name)?;
            census::skolem_exponential_bound(need(m, "--m", name)?, &g)?
        }
        BoundArg::LangfordProduct => census::langford_product_bound(
            need(m, "--m", name)?,
            need(n, "--n", name)?,
            need(defect, "--defect", name)?,
            &g,
        )?,
        BoundArg::SkolemProduct => {
            reject(defect, "--defect", name)?;
            census::skolem_product_bound(need(m, "--m", name)?, need(n, "--n", name)?, &g)?
        }
        BoundArg::CycleProduct => {
            reject(defect, "--defect", name)?;
            census::cycle_product_bound(need(m, "--m", name)?, need(n, "--n", name)?, &g)?
        }
        BoundArg::ExtendedProduct => {
            reject(defect, "--defect", name)?;
            census::extended_product_bound(
                need(m, "--m", name)?,
                need(n, "--n", name)?,
                include_trivial,
                &g,
            )?
        }
        BoundArg::CycleLabelings => {
            reject(m, "--m", name)?;
            reject(defect, "--defect", name)?;
            census::cycle_labeling_bound(need(n, "--n", name)?, &g)?
        }
    };
    emit(out, &report);
    Ok(())
}

#[derive(Serialize)]
struct CensusLine {
    #[serde(flatten)]
    report: CountReport,
    generated: u64,
    distinct: usize,
    injective: bool,
}

fn census_cmd(
    m: usize,
    n: usize,
    defect: u32,
    extended: bool,
    include_trivial: bool,
    list: bool,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    if include_trivial && !extended {
        return Err(usage(
            ErrorKind::ArgumentConflict,
            "--include-trivial requires --extended".into(),
        ));
    }
    if extended && defect != 1 {
        return Err(usage(
            ErrorKind::ArgumentConflict,
            "--defect does not apply with --extended".into(),
        ));
    }
    let g = Guards::from_env()?;
    let (lines, generated): (Vec<String>, u64) = if extended {
        let c = census::constructive_census_extended(m, n, include_trivial, &g)?;
        (
            c.sequences.iter().map(|s| s.to_string()).collect(),
            c.generated,
        )
    } else {
        let c = census::constructive_census(m, n, defect, &g)?;
        (
            c.sequences.iter().map(|s| s.to_string()).collect(),
            c.generated,
        )
    };
    if list {
        for l in &lines {
            writeln!(out, "{l}").expect("vec write");
        }
        return Ok(());
    }
    let report = if extended {
        census::extended_product_bound(m, n, include_trivial, &g)?
    } else {
        census::langford_product_bound(m, n, defect, &g)?
    };
    emit(
        out,
        &CensusLine {
            report,
            generated,
            distinct: lines.len(),
            injective: generated == lines.len() as u64,
        },
    );
    Ok(())
}
