//! `quartic`: command-line front end for the quartic-rings library.
//!
//! Records are passed as single arguments (`quartic psi "bqf 1 0 0 0 1"`);
//! single-record commands also accept records on stdin, one per line, and
//! report malformed input with its line number. Output is line-oriented and
//! byte-identical across identical invocations (timing goes to stderr).
//!
//! Exit codes: 0 success, 1 domain error (the message names the violated
//! precondition), 2 verification-suite failure.

use clap::{Parser, Subcommand, ValueEnum};
use quartic_rings::forms::{
    act_gl2_cubic_twisted, act_gl2_pair, act_gl2_quartic, act_gl3_pair, det_cubic_of_pair,
    disc_cubic, disc_quartic, quartic_invariants, rho,
};
use quartic_rings::report::CheckReport;
use quartic_rings::resolvent::{psi, psi_prime, pullback, reduce_to_a0};
use quartic_rings::rings::{
    bcf_from_cubic_ring, canonicalize_monogenized, cubic_ring_from_bcf, disc_ring,
    quartic_ring_from_bqf,
};
use quartic_rings::serial::{
    parse_bcf, parse_bqf, parse_gl2, parse_pair, parse_record, parse_ring, parse_tqf, print_bcf,
    print_bqf, print_mat3, print_pair, print_qpair, print_ring, Record,
};
use quartic_rings::suites::{run_suite, SuiteParams, SUITE_NAMES};
use quartic_rings::witness::{orbit_witness, print_witness};
use quartic_rings::words::parse_word;
use quartic_rings::Error;
use std::io::Read;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "quartic",
    about = "Exact arithmetic for binary quartic forms, quartic rings, and monogenic cubic resolvents",
    version
)]
struct Cli {
    /// Output format for key=value lines (records are unaffected)
    #[arg(long, global = true, value_enum, default_value_t = Format::Kv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Kv,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table of the quartic ring of a binary quartic form
    RingFromBqf { record: Option<String> },
    /// Multiplication table of the cubic ring of a binary cubic form
    RingFromBcf { record: Option<String> },
    /// Recover the binary cubic form of a rank-3 based ring
    BcfFromRing { record: Option<String> },
    /// Pair of ternary quadratic forms (A0, B_f) of a quartic form
    Psi { record: Option<String> },
    /// Rational pair (A0, B') equivariant without shift classes
    PsiPrime { record: Option<String> },
    /// Restrict a ternary quadratic form to the conic cut out by A0
    Pullback { record: Option<String> },
    /// Determinant binary cubic 4*Det(A*x - B*y) of a pair
    Detcubic { record: Option<String> },
    /// Act on a binary quartic form: `act-quartic <gl2> <bqf>`
    ActQuartic { gl2: String, bqf: String },
    /// Twisted action on a binary cubic form: `act-cubic <gl2> <bcf>`
    ActCubic { gl2: String, bcf: String },
    /// Image of a GL2 element under the homomorphism into SL3
    Rho { record: Option<String> },
    /// Act on a pair: `mat3` conjugates, `gl2` takes linear combinations
    ActPair { elem: String, pair: String },
    /// Invariants I, J and the discriminant of a binary quartic form
    Invariants { record: Option<String> },
    /// Discriminant of a `bqf`, `bcf`, or `ring` record
    Disc { record: Option<String> },
    /// Unipotent-orbit representative of a monogenized binary cubic form
    Canonicalize { record: Option<String> },
    /// SL3 matrix moving a 4*det = -1 ternary form to A0
    ReduceToA0 { record: Option<String> },
    /// Scan the stabilizer of A0 and match it against rho
    StabScan {
        #[arg(long, default_value_t = 1)]
        bound: i64,
    },
    /// Run a named verification suite (or `all`)
    Verify {
        /// One of the suite names, or `all`
        suite: String,
        /// Coefficient box for quartic sweeps
        #[arg(long = "box")]
        quartic_box: Option<i64>,
        /// Coefficient box for cubic sweeps
        #[arg(long)]
        cubic_box: Option<i64>,
        /// Generator word length
        #[arg(long)]
        words: Option<usize>,
        /// Entry bound for stabilizer/homomorphism/conjugator scans
        #[arg(long)]
        bound: Option<i64>,
        /// Coordinate box for the resolvent conditions
        #[arg(long)]
        coord_box: Option<i64>,
        /// Worker count; enumeration is sharded deterministically
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Stream all forms of a kind with coefficients in a box
    Enumerate {
        /// `quartics` or `cubics`
        kind: String,
        #[arg(long = "box", default_value_t = 2)]
        bound: i64,
    },
    /// Emit a machine-checkable orbit certificate for `word . f`
    OrbitWitness {
        bqf: String,
        /// Word over the generators S, U, T (and t for T^-1)
        #[arg(long, default_value = "")]
        word: String,
    },
}

struct Printer {
    tsv: bool,
}

impl Printer {
    fn kv(&self, pairs: &[(&str, String)]) {
        let line = if self.tsv {
            pairs
                .iter()
                .flat_map(|(k, v)| [k.to_string(), v.clone()])
                .collect::<Vec<_>>()
                .join("\t")
        } else {
            pairs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("{line}");
    }

    fn raw(&self, line: &str) {
        println!("{line}");
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let printer = Printer {
        tsv: cli.format == Format::Tsv,
    };
    match run(cli.command, &printer) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn reline(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

/// Apply `op` to the record argument, or to every line of stdin when the
/// argument is omitted; parse errors carry the stdin line number.
fn with_records(
    arg: Option<String>,
    printer: &Printer,
    op: impl Fn(&str, &Printer) -> Result<(), Error>,
) -> Result<i32, Error> {
    match arg {
        Some(rec) => {
            op(&rec, printer)?;
            Ok(0)
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("cannot read stdin: {e}"),
                })?;
            for (idx, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                op(line, printer).map_err(|e| reline(e, idx + 1))?;
            }
            Ok(0)
        }
    }
}

fn seed_from_env(params: &mut SuiteParams) -> Result<(), Error> {
    if let Ok(text) = std::env::var("RESOLVENT_SEED") {
        params.seed = text.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("RESOLVENT_SEED `{text}` is not an unsigned integer"),
        })?;
    }
    Ok(())
}

fn print_report(name: &str, report: &CheckReport, printer: &Printer) -> i32 {
    printer.kv(&[
        ("suite", name.to_string()),
        ("cases", report.cases.to_string()),
        ("failures", report.failures.len().to_string()),
    ]);
    for f in &report.failures {
        printer.kv(&[("fail", f.input.clone()), ("detail", f.detail.clone())]);
    }
    printer.kv(&[(
        "result",
        if report.pass() { "pass" } else { "fail" }.to_string(),
    )]);
    if report.pass() {
        0
    } else {
        2
    }
}

fn run(cmd: Command, printer: &Printer) -> Result<i32, Error> {
    match cmd {
        Command::RingFromBqf { record } => with_records(record, printer, |line, pr| {
            let f = parse_bqf(line)?;
            pr.raw(&print_ring(&quartic_ring_from_bqf(&f)));
            Ok(())
        }),
        Command::RingFromBcf { record } => with_records(record, printer, |line, pr| {
            let f = parse_bcf(line)?;
            pr.raw(&print_ring(&cubic_ring_from_bcf(&f)));
            Ok(())
        }),
        Command::BcfFromRing { record } => with_records(record, printer, |line, pr| {
            let r = parse_ring(line)?;
            pr.raw(&print_bcf(&bcf_from_cubic_ring(&r)?));
            Ok(())
        }),
        Command::Psi { record } => with_records(record, printer, |line, pr| {
            let f = parse_bqf(line)?;
            pr.raw(&print_pair(&psi(&f)));
            Ok(())
        }),
        Command::PsiPrime { record } => with_records(record, printer, |line, pr| {
            let f = parse_bqf(line)?;
            pr.raw(&print_qpair(&psi_prime(&f)));
            Ok(())
        }),
        Command::Pullback { record } => with_records(record, printer, |line, pr| {
            let q = parse_tqf(line)?;
            pr.raw(&print_bqf(&pullback(&q)));
            Ok(())
        }),
        Command::Detcubic { record } => with_records(record, printer, |line, pr| {
            let p = parse_pair(line)?;
            pr.raw(&print_bcf(&det_cubic_of_pair(&p)));
            Ok(())
        }),
        Command::ActQuartic { gl2, bqf } => {
            let g = parse_gl2(&gl2)?;
            let f = parse_bqf(&bqf)?;
            printer.raw(&print_bqf(&act_gl2_quartic(&g, &f)));
            Ok(0)
        }
        Command::ActCubic { gl2, bcf } => {
            let g = parse_gl2(&gl2)?;
            let f = parse_bcf(&bcf)?;
            printer.raw(&print_bcf(&act_gl2_cubic_twisted(&g, &f)));
            Ok(0)
        }
        Command::Rho { record } => with_records(record, printer, |line, pr| {
            let g = parse_gl2(line)?;
            pr.raw(&print_mat3(&rho(&g)));
            Ok(())
        }),
        Command::ActPair { elem, pair } => {
            let p = parse_pair(&pair)?;
            let moved = match parse_record(&elem)? {
                Record::Mat3Rec(h) => act_gl3_pair(&h, &p),
                Record::Gl2(g) => act_gl2_pair(&g, &p),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "act-pair needs a `mat3` or `gl2` record".into(),
                    })
                }
            };
            printer.raw(&print_pair(&moved));
            Ok(0)
        }
        Command::Invariants { record } => with_records(record, printer, |line, pr| {
            let f = parse_bqf(line)?;
            let (i, j) = quartic_invariants(&f);
            let disc = disc_quartic(&f);
            pr.kv(&[
                ("I", i.to_string()),
                ("J", j.to_string()),
                ("disc", disc.to_string()),
            ]);
            Ok(())
        }),
        Command::Disc { record } => with_records(record, printer, |line, pr| {
            let disc = match parse_record(line)? {
                Record::Bqf(f) => disc_quartic(&f),
                Record::Bcf(f) => disc_cubic(&f),
                Record::Ring(r) => disc_ring(&r),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "disc needs a `bqf`, `bcf`, or `ring` record".into(),
                    })
                }
            };
            pr.kv(&[("disc", disc.to_string())]);
            Ok(())
        }),
        Command::Canonicalize { record } => with_records(record, printer, |line, pr| {
            let f = parse_bcf(line)?;
            let (canon, n) = canonicalize_monogenized(&f)?;
            pr.raw(&print_bcf(&canon));
            pr.kv(&[("n", n.to_string())]);
            Ok(())
        }),
        Command::ReduceToA0 { record } => with_records(record, printer, |line, pr| {
            let q = parse_tqf(line)?;
            pr.raw(&print_mat3(&reduce_to_a0(&q)?));
            Ok(())
        }),
        Command::StabScan { bound } => {
            let start = Instant::now();
            let report = quartic_rings::resolvent::stabilizer_scan(bound);
            let code = print_report("stab-scan", &report, printer);
            eprintln!("elapsed_ms={}", start.elapsed().as_millis());
            Ok(code)
        }
        Command::Verify {
            suite,
            quartic_box,
            cubic_box,
            words,
            bound,
            coord_box,
            jobs,
        } => {
            let mut params = SuiteParams::default();
            if let Some(b) = quartic_box {
                params.quartic_box = b;
            }
            if let Some(b) = cubic_box {
                params.cubic_box = b;
            }
            if let Some(w) = words {
                params.word_len = w;
            }
            if let Some(b) = bound {
                params.stab_bound = b;
                params.rho_entry_bound = b;
                params.reduce_entry_bound = b;
            }
            if let Some(b) = coord_box {
                params.coord_box = b;
            }
            params.jobs = jobs;
            seed_from_env(&mut params)?;

            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut worst = 0;
            for name in names {
                let start = Instant::now();
                let report = run_suite(name, &params)?;
                worst = worst.max(print_report(name, &report, printer));
                eprintln!("elapsed_ms={}", start.elapsed().as_millis());
            }
            Ok(worst)
        }
        Command::Enumerate { kind, bound } => {
            match kind.as_str() {
                "quartics" => {
                    for f in quartic_rings::enumerate::quartics(bound) {
                        printer.raw(&print_bqf(&f));
                    }
                }
                "cubics" => {
                    for f in quartic_rings::enumerate::cubics(bound) {
                        printer.raw(&print_bcf(&f));
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unknown kind `{other}` (expected quartics or cubics)"),
                    })
                }
            }
            Ok(0)
        }
        Command::OrbitWitness { bqf, word } => {
            let f = parse_bqf(&bqf)?;
            let letters = parse_word(&word)?;
            let w = orbit_witness(&f, &letters);
            // also validate through the independent checker before emitting
            let report = quartic_rings::witness::check_witness(&w);
            if !report.pass() {
                return Err(Error::BadWitness(report.failures[0].detail.clone()));
            }
            print!("{}", print_witness(&w));
            Ok(0)
        }
    }
}
