//! The `netlab` command line. [`run`] does all the work and returns the
//! output and exit code, so the binary is a thin wrapper and tests can
//! drive commands in-process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::claims::{verify_claim, Verdict, CLAIM_TAGS};
use crate::error::{Error, Result};
use crate::filters::{filter_limits, ultrafilter_refine};
use crate::finite_top::{enumerate_topologies, FiniteSpace, PointSet};
use crate::io::{
    format_filter, format_space, parse_filter, parse_net, parse_sequence, parse_space,
};
use crate::nets::{cluster_points, net_limits};
use crate::sequences::{seq_limits, EpSequence};
use crate::symbolic::{
    cc_certificate, diagonal_certificate, fan_defeat_basis, franklin_build,
    franklin_check_open_reflection, omega1_certificate, ord_no_finite_subcover,
    product_certificate, CnfOrdinal, FanSet, FranklinPresentation, NatSet, PointwiseLimit,
    SetDescriptor, TagRegistry,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "netlab",
    version,
    about = "Convergence in finite and finitely presented topological spaces"
)]
struct Cli {
    /// `verdict` prints only the key=value block.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Verdict,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every topology on n ≤ 4 points.
    Enumerate { n: usize },
    /// Check a claim over every topology on exactly n points (`all` runs every claim).
    Verify {
        /// openseqopen, firstcountableseq, lemmaseq, seq-continuity, quotientseq,
        /// franklin, netsopen, netscontinuous, hausdorff-nets, compact-subnets,
        /// filter-net-limits, ultrafilter-refine, tychonoff-finite, or all.
        tag: String,
        /// Number of points.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Add elapsed_ms to each verdict block.
        #[arg(long)]
        timing: bool,
    },
    /// Build and self-check a counterexample certificate.
    Counterexample {
        #[arg(value_enum)]
        name: Counterexample,
        /// cc: comma-separated atoms of the finite set.
        #[arg(long, default_value = "a")]
        set: String,
        /// ordinal: the cover [0,α) for each listed α.
        #[arg(long, default_value = "w,5")]
        alphas: String,
        /// ordinal: a sequence of countable ordinals, `[prefix|cycle]`.
        #[arg(long, default_value = "[w^2,3|w,7]")]
        sequence: String,
        /// product: prefix terms, `;`-separated sets of `,`-separated atoms (`-` is empty).
        #[arg(long, default_value = "z")]
        prefix: String,
        /// product: cycle terms, same syntax as --prefix.
        #[arg(long, default_value = "a")]
        cycle: String,
        /// binary-digits: strictly increasing digit positions.
        #[arg(long, default_value = "0,1,2,3")]
        indices: String,
        /// fan: number of candidate apex neighbourhoods.
        #[arg(long, default_value_t = 3)]
        candidates: usize,
        /// franklin: base space file (default: Sierpiński space).
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// Limits and cluster points of a net.
    NetLimits {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        net: PathBuf,
    },
    /// Limits of a sequence literal `[prefix|cycle]`.
    SeqLimits {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        seq: String,
    },
    /// Limits of a filter.
    FilterLimits {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        filter: PathBuf,
    },
    /// Refine a filter to an ultrafilter.
    Refine {
        #[arg(long)]
        filter: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Counterexample {
    Cc,
    Ordinal,
    Product,
    BinaryDigits,
    Fan,
    Franklin,
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: EXIT_USAGE,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate { n } => enumerate(*n),
        Command::Verify { tag, n, timing } => verify(tag, *n, *timing, cli.format),
        Command::Counterexample {
            name,
            set,
            alphas,
            sequence,
            prefix,
            cycle,
            indices,
            candidates,
            space,
        } => {
            let cert = match name {
                Counterexample::Cc => cc(set)?,
                Counterexample::Ordinal => ordinal(alphas, sequence)?,
                Counterexample::Product => product(prefix, cycle)?,
                Counterexample::BinaryDigits => binary_digits(indices)?,
                Counterexample::Fan => fan(*candidates)?,
                Counterexample::Franklin => franklin(space.as_deref())?,
            };
            Ok(cert.render(cli.format))
        }
        Command::NetLimits { space, net } => {
            let s = read_space(space)?;
            let net = parse_net(&read(net)?)?;
            let lim = net_limits(&net, &s)?;
            let cl = cluster_points(&net, &s)?;
            Ok(Outcome::ok(match cli.format {
                Format::Plain => format!("limits: {lim}\ncluster points: {cl}\n"),
                Format::Verdict => format!("limits={lim}\ncluster_points={cl}\n"),
            }))
        }
        Command::SeqLimits { space, seq } => {
            let s = read_space(space)?;
            let seq: EpSequence = parse_sequence(seq)?;
            let lim = seq_limits(&seq, &s)?;
            Ok(Outcome::ok(match cli.format {
                Format::Plain => format!("limits of {seq}: {lim}\n"),
                Format::Verdict => format!("sequence={seq}\nlimits={lim}\n"),
            }))
        }
        Command::FilterLimits { space, filter } => {
            let s = read_space(space)?;
            let f = parse_filter(&read(filter)?)?;
            let lim = filter_limits(&f, &s)?;
            Ok(Outcome::ok(match cli.format {
                Format::Plain => format!("limits: {lim}\n"),
                Format::Verdict => format!("limits={lim}\n"),
            }))
        }
        Command::Refine { filter } => {
            let f = parse_filter(&read(filter)?)?;
            let u = ultrafilter_refine(&f);
            Ok(Outcome::ok(match cli.format {
                Format::Plain => format_filter(u.filter()),
                Format::Verdict => format!("kernel={}\npoint={}\n", f.kernel(), u.point()),
            }))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

fn read_space(path: &Path) -> Result<FiniteSpace> {
    parse_space(&read(path)?)
}

fn enumerate(n: usize) -> Result<Outcome> {
    let tops = enumerate_topologies(n)?;
    let mut out = String::new();
    for t in &tops {
        out.push_str(&format_space(t));
        out.push('\n');
    }
    let _ = writeln!(out, "count={}", tops.len());
    Ok(Outcome::ok(out))
}

fn verify(tag: &str, n: usize, timing: bool, format: Format) -> Result<Outcome> {
    let tags: Vec<&str> = if tag == "all" {
        CLAIM_TAGS
            .iter()
            .copied()
            .filter(|t| n <= crate::claims::max_n(t))
            .collect()
    } else {
        vec![tag]
    };
    let mut out = String::new();
    let mut failed = false;
    for (i, tag) in tags.iter().enumerate() {
        let start = Instant::now();
        let v = verify_claim(tag, n)?;
        let elapsed = start.elapsed().as_millis();
        failed |= !v.passed();
        if i > 0 {
            out.push('\n');
        }
        match format {
            Format::Plain => out.push_str(&plain_verdict(&v)),
            Format::Verdict => out.push_str(&v.block()),
        }
        if timing {
            let _ = writeln!(out, "elapsed_ms={elapsed}");
        }
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if failed { EXIT_CHECK_FAILED } else { EXIT_OK },
    })
}

fn plain_verdict(v: &Verdict) -> String {
    let mut out = format!(
        "{} {} on {} points: {} spaces, {} cases\n",
        if v.passed() { "PASS" } else { "FAIL" },
        v.claim,
        v.n,
        v.spaces,
        v.cases
    );
    if let Some(f) = &v.failure {
        let _ = writeln!(out, "  counterexample: {f}");
    } else if let Some(e) = &v.example {
        let _ = writeln!(out, "  example: {e}");
    }
    out
}

/// A counterexample's human-readable lines plus its verdict fields.
struct Certificate {
    name: &'static str,
    claim: &'static str,
    lines: Vec<String>,
    witness: String,
    checked: bool,
}

impl Certificate {
    fn render(&self, format: Format) -> Outcome {
        let mut out = String::new();
        if format == Format::Plain {
            for l in &self.lines {
                out.push_str(l);
                out.push('\n');
            }
            out.push('\n');
        }
        let _ = writeln!(out, "name={}", self.name);
        let _ = writeln!(out, "claim={}", self.claim);
        let _ = writeln!(out, "witness={}", self.witness);
        let _ = writeln!(out, "checked={}", self.checked);
        Outcome {
            stdout: out,
            stderr: String::new(),
            code: if self.checked {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            },
        }
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

fn cc(set: &str) -> Result<Certificate> {
    let atoms = split_list(set);
    if atoms.is_empty() {
        return Err(Error::EmptyInput("--set".into()));
    }
    let d = SetDescriptor::finite(atoms);
    let cert = cc_certificate(&d, &TagRegistry::default())?;
    let verdict = match (cert.sequentially_open, cert.open) {
        (true, false) => "sequentially open, not open",
        (true, true) => "sequentially open and open",
        (false, _) => "not sequentially open",
    };
    Ok(Certificate {
        name: "cc",
        claim: "countable-complement topology is not sequential",
        lines: vec![
            format!("space: uncountable set, countable-complement topology"),
            format!("set: {d}"),
            format!("complement {} is uncountable, so the set is not open", d.complement()),
            format!("a sequence converges only if eventually constant, so no sequence outside the set converges into it"),
            format!("verdict: {verdict}"),
        ],
        witness: format!("{d} {verdict}"),
        checked: cert.holds(),
    })
}

fn ordinal(alphas: &str, sequence: &str) -> Result<Certificate> {
    let alphas = split_list(alphas)
        .iter()
        .map(|a| a.parse::<CnfOrdinal>())
        .collect::<Result<Vec<_>>>()?;
    let x = ord_no_finite_subcover(&alphas)?;
    let uncovered = alphas.iter().all(|a| a <= &x);
    let seq: EpSequence<CnfOrdinal> = parse_sequence(sequence)?;
    let cert = omega1_certificate(&seq)?;
    let cover: Vec<String> = alphas.iter().map(|a| format!("[0,{a})")).collect();
    Ok(Certificate {
        name: "ordinal",
        claim: "[0,ω₁) is not compact; {ω₁} is sequentially open in [0,ω₁] but not open",
        lines: vec![
            format!("cover of [0,ω₁): {}, …", cover.join(" ∪ ")),
            format!("uncovered point: {x}"),
            format!("sequence {seq} is bounded by {} < ω₁", cert.bound),
            format!(
                "limits of the sequence: {}",
                if cert.limits.is_empty() {
                    "none".to_string()
                } else {
                    cert.limits
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            ),
            format!("{{ω₁}} open: {}", cert.singleton_open),
        ],
        witness: format!("uncovered={x} bound={}", cert.bound),
        checked: uncovered && cert.holds(),
    })
}

fn descriptor_terms(s: &str) -> Vec<SetDescriptor> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            if t == "-" {
                SetDescriptor::Empty
            } else {
                SetDescriptor::finite(split_list(t))
            }
        })
        .collect()
}

fn product(prefix: &str, cycle: &str) -> Result<Certificate> {
    let seq = EpSequence::new(descriptor_terms(prefix), descriptor_terms(cycle))?;
    let cert = product_certificate(&seq)?;
    let union: Vec<String> = cert.union.iter().cloned().collect();
    let (limit_line, witness) = match &cert.limit {
        PointwiseLimit::Converges(l) => {
            let l = SetDescriptor::Finite(l.clone());
            (format!("pointwise limit: {l}"), format!("limit={l}"))
        }
        PointwiseLimit::Diverges { atom } => (
            format!("diverges: coordinate {atom} is not eventually constant"),
            format!("diverges_at={atom}"),
        ),
    };
    Ok(Certificate {
        name: "product",
        claim: "pointwise limits of countable sets are countable and lie in the union of the terms",
        lines: vec![
            format!("sequence in {{0,1}}^I: {seq}"),
            limit_line,
            format!("union of terms: {{{}}}", union.join(",")),
        ],
        witness,
        checked: cert.holds(),
    })
}

fn binary_digits(indices: &str) -> Result<Certificate> {
    let indices = split_list(indices)
        .iter()
        .map(|k| {
            k.parse::<u32>()
                .map_err(|_| Error::parse(1, format!("`{k}` is not a digit position")))
        })
        .collect::<Result<Vec<_>>>()?;
    let cert = diagonal_certificate(&indices)?;
    let digits: String = cert
        .digits
        .iter()
        .map(|&(_, d)| char::from(b'0' + d))
        .collect();
    Ok(Certificate {
        name: "binary-digits",
        claim: "the binary-digit sequence in {0,1}^[0,1) has no convergent subsequence",
        lines: vec![
            format!("subsequence positions: {indices:?}"),
            format!("r = {}", cert.point),
            format!("digits of r at those positions: {digits}"),
            "the subsequence alternates at coordinate r, so it does not converge".to_string(),
        ],
        witness: format!("r={} digits={digits}", cert.point),
        checked: cert.alternates(),
    })
}

fn fan(k: usize) -> Result<Certificate> {
    // candidate j keeps spoke points ≥ j on every spoke
    let candidates: Vec<FanSet> = (0..k)
        .map(|j| FanSet {
            apex: true,
            exceptional: Default::default(),
            default: NatSet::Cofinite((0..j as u64).collect()),
        })
        .collect();
    let d = fan_defeat_basis(&candidates)?;
    let omitted: Vec<String> = d
        .omitted
        .iter()
        .map(|(i, n)| format!("({i},{n})"))
        .collect();
    Ok(Certificate {
        name: "fan",
        claim: "the sequential fan is not first countable at the apex",
        lines: vec![
            format!("{k} candidate neighbourhoods of the apex"),
            format!(
                "W keeps the apex and omits {}",
                if omitted.is_empty() {
                    "nothing".to_string()
                } else {
                    omitted.join(" ")
                }
            ),
            "candidate i contains the omitted point on spoke i, so no candidate lies inside W"
                .to_string(),
        ],
        witness: format!(
            "omitted={}",
            if omitted.is_empty() {
                "-".to_string()
            } else {
                omitted.join(",")
            }
        ),
        checked: d.verify(&candidates),
    })
}

fn franklin(space: Option<&Path>) -> Result<Certificate> {
    let base = match space {
        Some(p) => read_space(p)?,
        None => FiniteSpace::sierpinski(),
    };
    let p = FranklinPresentation::witness_complete(&base)?;
    let f = franklin_build(&p);
    let mut agree = f.is_surjective();
    let mut lines = vec![
        format!("base: {}", crate::claims::space_label(&base)),
        format!("{} copies of ω+1, one per sample sequence", f.copies()),
    ];
    let mut witness = String::from("-");
    for a in PointSet::all_subsets(base.carrier_size()) {
        let r = franklin_check_open_reflection(&p, &a)?;
        agree &= r.agrees();
        let detail = match r.failing_copy {
            Some(c) => {
                let trace = f.preimage(c, &a);
                if witness == "-" {
                    witness = format!("set={a} sample={} trace={trace}", p.samples()[c]);
                }
                format!("not open; trace on copy of {} is {trace}", p.samples()[c])
            }
            None => "open; every trace open".to_string(),
        };
        lines.push(format!(
            "set {a}: open in base={}, {detail}",
            r.open_in_base
        ));
    }
    Ok(Certificate {
        name: "franklin",
        claim: "a sequential space is a quotient of a sum of convergent sequences",
        lines,
        witness,
        checked: agree,
    })
}
