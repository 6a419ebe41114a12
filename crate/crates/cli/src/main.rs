//! `dupcode` command-line tool.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dupcode::bounds::{bound_csv_row, bound_report, BOUND_CSV_HEADER};
use dupcode::channel::DEFAULT_CAP;
use dupcode::channel::{simulate, Noise};
use dupcode::correct::{enumerate_cijl, w_block_decode, w_block_encode, w_block_payloads};
use dupcode::detect::{cij_class, construct3_decode, construct3_encode, enumerate_code};
use dupcode::verify::{ecc_codewords, verify_ecc, verify_with_cap, Property, VerifyReport};
use dupcode::{
    ecc_decode, ecc_encode, phi, root, Alphabet, CijlSpec, Code, DetectCodeSpec, EccCode, Word, ZetaReading,
};
use serde::Serialize;

const USAGE: u8 = 1;
const CAP_EXCEEDED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "dupcode",
    version,
    about = "Codes for tandem-duplication channels with at most one substitution",
    after_help = "Words are digit strings for q <= 10 and comma-separated integers above that.\n\
                  Word arguments may be replaced by --in FILE (one word per line) or by stdin.\n\
                  Exit codes: 0 success, 1 usage or input error, 2 counterexample / non-member /\n\
                  decoding failure, 3 verification inconclusive, 4 resource cap exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print φ(x) as "head,tail"
    Transform(WordArgs),
    /// Print the duplication root rt(x)
    Root(WordArgs),
    /// Pass words through a seeded random duplication channel
    Simulate(SimulateArgs),
    /// List the codewords of a code, one per line
    Enumerate(EnumerateArgs),
    /// Report the C_{i,j} class of each word
    Member(MemberArgs),
    /// Encode payloads with an encoding construction
    Encode(CodecArgs),
    /// Decode channel outputs (or codewords) back to payloads
    Decode(CodecArgs),
    /// Exact counts and size bounds as JSON, or a CSV table
    Bounds(BoundsArgs),
    /// Brute-force check a code property up to a duplication horizon
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Params {
    /// Alphabet size
    #[arg(long)]
    q: u32,
    /// Duplication length
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct Io {
    /// Read input words from FILE, one per line
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to FILE instead of stdout
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    /// Output format (each command has its own default)
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct WordArgs {
    #[command(flatten)]
    params: Params,
    #[command(flatten)]
    io: Io,
    /// Input words
    words: Vec<String>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    params: Params,
    /// Number of duplications
    #[arg(long, default_value_t = 1)]
    dups: usize,
    #[arg(long, value_enum, default_value_t = NoiseArg::None)]
    noise: NoiseArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    io: Io,
    words: Vec<String>,
}

#[derive(Args)]
struct CodeArgs {
    /// Code construction
    #[arg(long, value_enum)]
    construction: Option<Construction>,
    /// Codeword length (tail length for aux, payload length for wblock)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, default_value_t = 0)]
    j: usize,
    /// Hamming coset index for cijl
    #[arg(long, default_value_t = 0)]
    l: usize,
    /// Redundancy parameter of the ecc construction
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Correction-sum reading for c3
    #[arg(long, value_enum, default_value_t = ZetaArg::Aligned)]
    zeta: ZetaArg,
    /// Largest number of words any enumeration may produce
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    params: Params,
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct MemberArgs {
    #[command(flatten)]
    params: Params,
    /// Expected class; without --i/--j any irreducible word is a member
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[command(flatten)]
    io: Io,
    words: Vec<String>,
}

#[derive(Args)]
struct CodecArgs {
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum, default_value_t = Codec::Ecc)]
    construction: Codec,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, value_enum, default_value_t = ZetaArg::Aligned)]
    zeta: ZetaArg,
    #[command(flatten)]
    io: Io,
    words: Vec<String>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    params: Params,
    /// Word length (the largest length with --table)
    #[arg(long)]
    n: usize,
    /// Emit a CSV row for every length from k to n
    #[arg(long)]
    table: bool,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: Params,
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[command(flatten)]
    code: CodeArgs,
    /// Largest duplication horizon to certify
    #[arg(long, default_value_t = 2)]
    tmax: usize,
    #[command(flatten)]
    io: Io,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum NoiseArg {
    None,
    Restricted,
    Unrestricted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// All irreducible words of length n
    Irr,
    /// Auxiliary k-switch-detecting code over rll(n)
    Aux,
    /// C_{i,j}, detects one noisy duplication
    Cij,
    /// Constructive subcode of C_{0,0}
    C3,
    /// C_{i,j} intersected with a Hamming coset
    Cijl,
    /// W block code (transform tails)
    Wblock,
    /// Single-substitution-correcting code
    Ecc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Codec {
    Ecc,
    C3,
    Wblock,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaArg {
    Aligned,
    SymbolDomain,
    TransformDomain,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Dup,
    #[value(name = "1nd")]
    OneNd,
    #[value(name = "1s-detect")]
    OneSDetect,
    #[value(name = "1s-correct")]
    OneSCorrect,
}

impl From<ZetaArg> for ZetaReading {
    fn from(z: ZetaArg) -> Self {
        match z {
            ZetaArg::Aligned => ZetaReading::Aligned,
            ZetaArg::SymbolDomain => ZetaReading::SymbolDomain,
            ZetaArg::TransformDomain => ZetaReading::TransformDomain,
        }
    }
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<dupcode::Error> for Failure {
    fn from(e: dupcode::Error) -> Self {
        let code = if matches!(e, dupcode::Error::ResourceCap { .. }) { CAP_EXCEEDED } else { USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

/// What a command produced: output text and exit status.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let output = match &cli.command {
        Command::Transform(a) | Command::Root(a) => a.io.output.clone(),
        Command::Simulate(a) => a.io.output.clone(),
        Command::Enumerate(a) => a.io.output.clone(),
        Command::Member(a) => a.io.output.clone(),
        Command::Encode(a) | Command::Decode(a) => a.io.output.clone(),
        Command::Bounds(a) => a.io.output.clone(),
        Command::Verify(a) => a.io.output.clone(),
    };
    match run(&cli.command).and_then(|o| emit(&o.text, output.as_ref()).map(|_| o.code)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("dupcode: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Transform(a) => transform_cmd(a),
        Command::Root(a) => root_cmd(a),
        Command::Simulate(a) => simulate_cmd(a),
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Member(a) => member_cmd(a),
        Command::Encode(a) => encode_cmd(a),
        Command::Decode(a) => decode_cmd(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn alphabet(p: &Params) -> Result<Alphabet, Failure> {
    if p.k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    Ok(Alphabet::new(p.q)?)
}

/// Words from the arguments, else from --in, else from stdin.
fn read_words(al: Alphabet, args: &[String], io_args: &Io) -> Result<Vec<Word>, Failure> {
    let text;
    let lines: Vec<&str> = if !args.is_empty() {
        if io_args.input.is_some() {
            return Err(usage("give words either as arguments or with --in, not both"));
        }
        args.iter().map(String::as_str).collect()
    } else {
        text = match &io_args.input {
            Some(p) => fs::read_to_string(p)?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
    };
    lines.into_iter().map(|l| Word::parse(l, al).map_err(Failure::from)).collect()
}

fn format_of(io_args: &Io, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = io_args.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(usage("this command does not support the requested --format"));
    }
    Ok(f)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut acc, l| {
        acc.push_str(&l);
        acc.push('\n');
        acc
    })
}

fn head_tail_separator(al: Alphabet) -> &'static str {
    // digits need no delimiter, so a comma is unambiguous only for q <= 10
    if al.size() <= 10 {
        ","
    } else {
        ";"
    }
}

fn transform_cmd(a: &WordArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    let words = read_words(al, &a.words, &a.io)?;
    let pairs = words.iter().map(|x| phi(x, a.params.k)).collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let sep = head_tail_separator(al);
            lines(pairs.iter().map(|p| format!("{}{sep}{}", p.head(), p.tail())))
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                word: &'a Word,
                head: &'a Word,
                tail: &'a Word,
            }
            let rows: Vec<Row> =
                words.iter().zip(&pairs).map(|(w, p)| Row { word: w, head: p.head(), tail: p.tail() }).collect();
            json(&rows)
        }
        Format::Csv => {
            let body = words.iter().zip(&pairs).map(|(w, p)| format!("\"{w}\",\"{}\",\"{}\"", p.head(), p.tail()));
            lines(std::iter::once("word,head,tail".to_string()).chain(body))
        }
    }))
}

fn root_cmd(a: &WordArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    let words = read_words(al, &a.words, &a.io)?;
    let roots = words.iter().map(|x| root(x, a.params.k)).collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(match fmt {
        Format::Text => lines(roots.iter().map(Word::to_string)),
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                word: &'a Word,
                root: &'a Word,
            }
            json(&words.iter().zip(&roots).map(|(word, root)| Row { word, root }).collect::<Vec<_>>())
        }
        Format::Csv => {
            let body = words.iter().zip(&roots).map(|(w, r)| format!("\"{w}\",\"{r}\""));
            lines(std::iter::once("word,root".to_string()).chain(body))
        }
    }))
}

fn simulate_cmd(a: &SimulateArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Text, &[Format::Text, Format::Json])?;
    let noise = match a.noise {
        NoiseArg::None => Noise::None,
        NoiseArg::Restricted => Noise::Restricted,
        NoiseArg::Unrestricted => Noise::Unrestricted,
    };
    let words = read_words(al, &a.words, &a.io)?;
    let mut runs = Vec::with_capacity(words.len());
    for (idx, x) in words.iter().enumerate() {
        // one independent stream per input word
        let seed = a.seed.wrapping_add(idx as u64);
        runs.push(simulate(x, a.params.k, a.dups, noise, seed)?);
    }
    Ok(Outcome::ok(match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Run<'a> {
                origin: &'a Word,
                output: &'a Word,
                events: Vec<String>,
            }
            let rows: Vec<Run> = runs
                .iter()
                .map(|(y, trace)| Run {
                    origin: &trace.origin,
                    output: y,
                    events: trace.events.iter().map(|e| e.to_string()).collect(),
                })
                .collect();
            json(&rows)
        }
        _ => {
            let mut out = String::new();
            for (y, trace) in &runs {
                writeln!(out, "{y}").unwrap();
                for e in &trace.events {
                    writeln!(out, "# {e}").unwrap();
                }
            }
            out
        }
    }))
}

fn need_n(c: &CodeArgs) -> Result<usize, Failure> {
    c.n.ok_or_else(|| usage("--n is required for this construction"))
}

/// Builds the code named by the flags.
fn build_code(p: &Params, c: &CodeArgs, construction: Construction) -> Result<Code, Failure> {
    let (q, k) = (p.q, p.k);
    let code = match construction {
        Construction::Irr => enumerate_code(&DetectCodeSpec::irreducible(q, k, need_n(c)?)?, c.cap)?,
        Construction::Aux => enumerate_code(&DetectCodeSpec::aux(q, k, need_n(c)?, c.i, c.j)?, c.cap)?,
        Construction::Cij => enumerate_code(&DetectCodeSpec::cij(q, k, need_n(c)?, c.i, c.j)?, c.cap)?,
        Construction::C3 => enumerate_code(&DetectCodeSpec::c3(q, k, need_n(c)?, c.zeta.into())?, c.cap)?,
        Construction::Cijl => enumerate_cijl(&CijlSpec::new(q, k, need_n(c)?, c.i, c.j, c.l)?, c.cap)?,
        Construction::Wblock => {
            let al = Alphabet::new(q)?;
            let payloads = w_block_payloads(al, k, need_n(c)?, c.cap)?;
            let words = payloads.iter().map(|u| w_block_encode(u, k)).collect::<Result<Vec<_>, _>>()?;
            Code::explicit(al, words)?
        }
        Construction::Ecc => ecc_codewords(&EccCode::new(q, k, c.r)?, c.cap)?,
    };
    Ok(code)
}

fn enumerate_cmd(a: &EnumerateArgs) -> Result<Outcome, Failure> {
    let fmt = format_of(&a.io, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    alphabet(&a.params)?;
    let code = build_code(&a.params, &a.code, a.code.construction.unwrap_or(Construction::Irr))?;
    let words = code.words().iter().map(Word::to_string);
    Ok(Outcome::ok(match fmt {
        Format::Text => lines(words),
        Format::Json => json(&code.words()),
        Format::Csv => lines(std::iter::once("codeword".to_string()).chain(words.map(|w| format!("\"{w}\"")))),
    }))
}

fn member_cmd(a: &MemberArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Json, &[Format::Text, Format::Json])?;
    if a.i.is_some() != a.j.is_some() {
        return Err(usage("--i and --j must be given together"));
    }
    #[derive(Serialize)]
    struct Record {
        member: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        i: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
    }
    let words = read_words(al, &a.words, &a.io)?;
    let mut records = Vec::with_capacity(words.len());
    for x in &words {
        let class = cij_class(x, a.params.k)?;
        let member = match (a.i, a.j) {
            (Some(i), Some(j)) => class == Some((i, j)),
            _ => class.is_some(),
        };
        records.push(Record { member, i: class.map(|c| c.0), j: class.map(|c| c.1) });
    }
    let code = if records.iter().all(|r| r.member) { 0 } else { 2 };
    let text = match fmt {
        Format::Text => lines(records.iter().map(|r| match (r.i, r.j) {
            (Some(i), Some(j)) => format!("{} {i} {j}", r.member),
            _ => format!("{} - -", r.member),
        })),
        _ if records.len() == 1 => json(&records[0]),
        _ => json(&records),
    };
    Ok(Outcome { text, code })
}

enum Codebook {
    Ecc(Box<EccCode>),
    C3 { k: usize, zeta: ZetaReading },
    Wblock { k: usize },
}

fn codebook(a: &CodecArgs) -> Result<Codebook, Failure> {
    alphabet(&a.params)?;
    let k = a.params.k;
    Ok(match a.construction {
        Codec::Ecc => Codebook::Ecc(Box::new(EccCode::new(a.params.q, k, a.r)?)),
        Codec::C3 => Codebook::C3 { k, zeta: a.zeta.into() },
        Codec::Wblock => Codebook::Wblock { k },
    })
}

fn encode_cmd(a: &CodecArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Text, &[Format::Text, Format::Json])?;
    let book = codebook(a)?;
    let payloads = read_words(al, &a.words, &a.io)?;
    let mut out = Vec::with_capacity(payloads.len());
    for u in &payloads {
        out.push(match &book {
            Codebook::Ecc(code) => ecc_encode(u, code)?,
            Codebook::C3 { k, zeta } => {
                // payload = head (k symbols) followed by an rll tail
                if u.len() < *k {
                    return Err(usage(format!("c3 payloads start with a {k}-symbol head")));
                }
                construct3_encode(&u.slice(0..*k), &u.slice(*k..u.len()), *k, *zeta)?
            }
            Codebook::Wblock { k } => w_block_encode(u, *k)?,
        });
    }
    Ok(Outcome::ok(match fmt {
        Format::Json => json(&out),
        _ => lines(out.iter().map(Word::to_string)),
    }))
}

#[derive(Serialize)]
struct DecodeReport {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    payload: Option<Word>,
    dedup_steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    corrected_position: Option<usize>,
}

impl DecodeReport {
    fn error(dedup_steps: usize) -> Self {
        DecodeReport { status: "error", payload: None, dedup_steps, corrected_position: None }
    }
}

fn decode_one(book: &Codebook, y: &Word) -> Result<DecodeReport, Failure> {
    Ok(match book {
        Codebook::Ecc(code) => {
            let r = ecc_decode(y, code);
            let status = if r.is_ok() { "ok" } else { "error" };
            DecodeReport {
                status,
                payload: r.payload,
                dedup_steps: r.dedup_steps,
                corrected_position: r.corrected_position,
            }
        }
        Codebook::C3 { k, zeta } => {
            // exact duplications are undone by taking the root
            let r = root(y, *k)?;
            let steps = (y.len() - r.len()) / k;
            match construct3_decode(&r, *k, *zeta) {
                Ok((head, tail)) => DecodeReport {
                    status: "ok",
                    payload: Some(head.concat(&tail)?),
                    dedup_steps: steps,
                    corrected_position: None,
                },
                Err(_) => DecodeReport::error(steps),
            }
        }
        Codebook::Wblock { k } => match w_block_decode(y, *k) {
            Ok(u) => DecodeReport { status: "ok", payload: Some(u), dedup_steps: 0, corrected_position: None },
            Err(_) => DecodeReport::error(0),
        },
    })
}

fn decode_cmd(a: &CodecArgs) -> Result<Outcome, Failure> {
    let al = alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Json, &[Format::Text, Format::Json])?;
    let book = codebook(a)?;
    let received = read_words(al, &a.words, &a.io)?;
    let reports = received.iter().map(|y| decode_one(&book, y)).collect::<Result<Vec<_>, _>>()?;
    let code = if reports.iter().all(|r| r.status == "ok") { 0 } else { 2 };
    let text = match fmt {
        Format::Text => lines(reports.iter().map(|r| r.payload.as_ref().map_or("error".to_string(), Word::to_string))),
        _ if reports.len() == 1 => json(&reports[0]),
        _ => json(&reports),
    };
    Ok(Outcome { text, code })
}

fn bounds_cmd(a: &BoundsArgs) -> Result<Outcome, Failure> {
    alphabet(&a.params)?;
    let (q, k) = (a.params.q, a.params.k);
    let default = if a.table { Format::Csv } else { Format::Json };
    let fmt = format_of(&a.io, default, &[Format::Json, Format::Csv])?;
    if a.n < k {
        return Err(usage("--n must be at least --k"));
    }
    let from = if a.table { k } else { a.n };
    let reports = (from..=a.n).map(|n| bound_report(q, k, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(match fmt {
        Format::Csv => lines(std::iter::once(BOUND_CSV_HEADER.to_string()).chain(reports.iter().map(bound_csv_row))),
        _ if reports.len() == 1 => json(&reports[0]),
        _ => json(&reports),
    }))
}

fn verify_cmd(a: &VerifyArgs) -> Result<Outcome, Failure> {
    alphabet(&a.params)?;
    let fmt = format_of(&a.io, Format::Json, &[Format::Text, Format::Json])?;
    let (property, default) = match a.property {
        PropertyArg::Dup => (Property::Duplication, Construction::Irr),
        PropertyArg::OneNd => (Property::OneNoisyDetect, Construction::Cij),
        PropertyArg::OneSDetect => (Property::OneSubDetect, Construction::Cijl),
        PropertyArg::OneSCorrect => (Property::OneSubCorrect, Construction::Cijl),
    };
    let construction = a.code.construction.unwrap_or(default);
    if construction == Construction::Aux {
        return Err(usage("aux codewords are transform tails, not channel inputs; verify cij instead"));
    }
    let report: VerifyReport = if construction == Construction::Ecc && property == Property::OneSubCorrect {
        verify_ecc(&EccCode::new(a.params.q, a.params.k, a.code.r)?, a.tmax, a.code.cap)?
    } else {
        let code = build_code(&a.params, &a.code, construction)?;
        verify_with_cap(property, &code, a.params.k, a.tmax, a.code.cap)?
    };
    let text = match fmt {
        Format::Text => {
            let status = match report.exit_code() {
                0 => "certified",
                2 => "counterexample",
                _ => "inconclusive",
            };
            format!(
                "{status} horizon={} pairs={} words={}\n",
                report.horizon, report.pairs_checked, report.words_checked
            )
        }
        _ => json(&report),
    };
    Ok(Outcome { text, code: report.exit_code() as u8 })
}
