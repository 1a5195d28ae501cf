use std::fmt::Write as _;
use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bernstein_degree::combinatorics::{Partition, SignedPartitionPair};
use bernstein_degree::degree::{
    bernstein_degree_with, check_theta, corner_mismatches, exceptional_degree, exceptional_rows, hilbert_report,
    mp_conjecture_probe, not_identity_check, verify_all, CheckStatus, OracleLimits, Suite, VerifyLimits,
};
use bernstein_degree::dual_pair::{
    count_q_determinant, enumerate_q, q_collapse_check, sigma_admissible, Admissibility, Family, Setting, SigmaLabel,
};
use bernstein_degree::jellyfish::{enumerate_jellyfish, enumerate_maximal_jellyfish};
use bernstein_degree::plane_partitions::{count_p_product, enumerate_p, HermitianType};
use bernstein_degree::poset_paths::{enumerate_facets, Point};
use bernstein_degree::Error;

#[derive(Parser)]
#[command(
    name = "bdeg",
    version,
    about = "Bernstein degrees of unitary highest weight modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    #[arg(long, global = true, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true)]
    q: Option<u32>,
    #[arg(long, global = true)]
    n: Option<u32>,
    #[arg(long, global = true)]
    k: Option<u32>,
    /// Comma separated parts, e.g. 3,2,1
    #[arg(long, global = true)]
    sigma: Option<String>,
    #[arg(long, global = true)]
    sigma_plus: Option<String>,
    #[arg(long, global = true)]
    sigma_minus: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Oracle size cap
    #[arg(long, global = true)]
    limit: Option<u64>,
    /// Seed for randomized spot checks
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Upq,
    Mp,
    Ostar,
    SoEven,
    SoOdd,
    E6,
    E7,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Bernstein degree as #Q * #P with oracle cross-checks
    Degree,
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateWhat,
        /// For jellyfish: include the non-maximal ones
        #[arg(long)]
        all: bool,
    },
    Check {
        #[arg(value_enum)]
        what: CheckWhat,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
    },
    /// Hilbert series of the k-th orbit closure
    Hilbert,
    /// Run the cross-validation suites
    Verify {
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Q,
    P,
    Facets,
    Jellyfish,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckWhat {
    Not,
    Theta,
    Collapse,
    Conjecture,
    Exceptional,
}

enum Failure {
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Out = Result<(), Failure>;

fn missing(flag: &str) -> Error {
    Error::InvalidSetting(format!("--{flag} is required"))
}

impl Opts {
    fn family(&self) -> Result<FamilyArg, Error> {
        self.family.ok_or_else(|| missing("family"))
    }

    fn need(&self, v: Option<u32>, flag: &str) -> Result<u32, Error> {
        v.ok_or_else(|| missing(flag))
    }

    fn hermitian(&self) -> Result<HermitianType, Error> {
        let ty = match self.family()? {
            FamilyArg::Upq => HermitianType::UnitaryPQ {
                p: self.need(self.p, "p")?,
                q: self.need(self.q, "q")?,
            },
            FamilyArg::Mp => HermitianType::Metaplectic {
                n: self.need(self.n, "n")?,
            },
            FamilyArg::Ostar => HermitianType::StarOrthogonal {
                n: self.need(self.n, "n")?,
            },
            FamilyArg::SoEven => HermitianType::SoEven {
                n: self.need(self.n, "n")?,
            },
            FamilyArg::SoOdd => HermitianType::SoOdd {
                n: self.need(self.n, "n")?,
            },
            FamilyArg::E6 => HermitianType::E6,
            FamilyArg::E7 => HermitianType::E7,
        };
        ty.validate()?;
        Ok(ty)
    }

    fn setting(&self) -> Result<Setting, Error> {
        let k = self.need(self.k, "k")?;
        let family = match self.hermitian()? {
            HermitianType::UnitaryPQ { p, q } => Family::UnitaryPQ { p, q },
            HermitianType::Metaplectic { n } => Family::Metaplectic { n },
            HermitianType::StarOrthogonal { n } => Family::StarOrthogonal { n },
            ty => return Err(Error::Unsupported(format!("{ty} is not part of a dual pair"))),
        };
        Setting::new(family, k)
    }

    fn sigma(&self, family: Family) -> Result<SigmaLabel, Error> {
        let part = |s: &Option<String>| parse_partition(s.as_deref().unwrap_or(""));
        match family {
            Family::UnitaryPQ { .. } => {
                if self.sigma.is_some() {
                    return Err(Error::InvalidSetting(
                        "U(p,q) takes --sigma-plus and --sigma-minus".into(),
                    ));
                }
                Ok(SigmaLabel::Signed(SignedPartitionPair::new(
                    part(&self.sigma_plus)?,
                    part(&self.sigma_minus)?,
                )))
            }
            _ => {
                if self.sigma_plus.is_some() || self.sigma_minus.is_some() {
                    return Err(Error::InvalidSetting(
                        "--sigma-plus/--sigma-minus are for U(p,q) only".into(),
                    ));
                }
                Ok(SigmaLabel::Single(part(&self.sigma)?))
            }
        }
    }

    fn oracle_limits(&self) -> OracleLimits {
        let mut l = OracleLimits::default();
        if let Some(n) = self.limit {
            l.max_enumeration = n;
        }
        l
    }

    fn enumeration_cap(&self) -> u64 {
        self.limit.unwrap_or(100_000)
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<u32>()
                .map_err(|_| Error::InvalidSetting(format!("bad part {x:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}

fn points(ps: impl IntoIterator<Item = Point>) -> String {
    ps.into_iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes one report in the chosen format.
fn emit<T: Serialize>(format: Format, value: &T, text: &str, header: &[&str], rows: Vec<Vec<String>>) -> Out {
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidSetting(e.to_string()))?;
            println!("{s}");
        }
        Format::Text => print!("{text}"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            let io_err = |e: csv::Error| Error::InvalidSetting(e.to_string());
            w.write_record(header).map_err(io_err)?;
            for r in rows {
                w.write_record(&r).map_err(io_err)?;
            }
            w.flush().map_err(|e| Error::InvalidSetting(e.to_string()))?;
        }
    }
    Ok(())
}

fn verdict(passed: bool) -> Out {
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn too_large(what: &str, count: impl std::fmt::Display, cap: u64) -> Error {
    Error::TooLarge(format!("{what} has {count} elements, above --limit {cap}"))
}

fn cmd_degree(o: &Opts) -> Out {
    let setting = o.setting()?;
    let sigma = o.sigma(setting.family)?;
    let r = bernstein_degree_with(&setting, &sigma, &o.oracle_limits())?;
    let mut text = String::new();
    let _ = writeln!(text, "setting: {setting}");
    let _ = writeln!(text, "sigma: {sigma}");
    let _ = writeln!(text, "#Q = {}", r.q_count);
    let _ = writeln!(text, "#P = {}", r.p_count);
    let _ = writeln!(text, "degree = {}", r.degree);
    let _ = writeln!(text, "regime: {}", r.regime);
    if r.conjectural {
        let _ = writeln!(text, "CONJECTURAL: Mp window n+1 <= k <= 2n-2");
    }
    for c in &r.cross_checks {
        let _ = writeln!(text, "check {}: {:?} ({})", c.name, c.status, c.detail);
    }
    let checks = r
        .cross_checks
        .iter()
        .map(|c| format!("{}={:?}", c.name, c.status).to_lowercase())
        .collect::<Vec<_>>()
        .join(";");
    let row = vec![
        setting.family.to_string(),
        setting.k.to_string(),
        sigma.to_string(),
        r.q_count.to_string(),
        r.p_count.to_string(),
        r.degree.to_string(),
        r.regime.to_string(),
        r.conjectural.to_string(),
        checks,
    ];
    let header = [
        "family",
        "k",
        "sigma",
        "q_count",
        "p_count",
        "degree",
        "regime",
        "conjectural",
        "cross_checks",
    ];
    emit(o.format, &r, &text, &header, vec![row])?;
    verdict(r.cross_checks.iter().all(|c| c.status != CheckStatus::Fail))
}

fn cmd_enumerate(o: &Opts, what: EnumerateWhat, all: bool) -> Out {
    let cap = o.enumeration_cap();
    match what {
        EnumerateWhat::Q => {
            let setting = o.setting()?;
            let sigma = o.sigma(setting.family)?;
            let count = count_q_determinant(&setting, &sigma)?;
            if count > cap.into() {
                return Err(too_large("Q", count, cap).into());
            }
            let q = enumerate_q(&setting, &sigma)?;
            let text: String = q.iter().map(|t| format!("{t}\n")).collect();
            let rows = q
                .iter()
                .enumerate()
                .map(|(i, t)| vec![i.to_string(), t.to_string()])
                .collect();
            emit(o.format, &q, &text, &["index", "tableau"], rows)
        }
        EnumerateWhat::P => {
            let ty = o.hermitian()?;
            let k = o.need(o.k, "k")?;
            if let Ok(count) = count_p_product(&ty, k) {
                if count > cap.into() {
                    return Err(too_large("P", count, cap).into());
                }
            }
            let ps = enumerate_p(&ty, k)?;
            let text: String = ps.iter().map(|p| format!("{p}\n")).collect();
            let rows = ps
                .iter()
                .enumerate()
                .map(|(i, p)| vec![i.to_string(), p.to_string().trim_end().replace('\n', "/")])
                .collect();
            emit(o.format, &ps, &text, &["index", "rows"], rows)
        }
        EnumerateWhat::Facets => {
            let ty = o.hermitian()?;
            let k = o.need(o.k, "k")?;
            let count = count_p_product(&ty, k)?;
            if count > cap.into() {
                return Err(too_large("the facet list", count, cap).into());
            }
            let fs = enumerate_facets(ty, k)?;
            let text: String = fs
                .iter()
                .map(|f| format!("{}\n", points(f.points.iter().copied())))
                .collect();
            let rows = fs
                .iter()
                .enumerate()
                .map(|(i, f)| vec![i.to_string(), f.len().to_string(), points(f.points.iter().copied())])
                .collect();
            emit(o.format, &fs, &text, &["index", "size", "points"], rows)
        }
        EnumerateWhat::Jellyfish => {
            let setting = o.setting()?;
            let sigma = o.sigma(setting.family)?;
            let js = if all {
                enumerate_jellyfish(&setting, &sigma)?
            } else {
                enumerate_maximal_jellyfish(&setting, &sigma)?
            };
            if js.len() as u64 > cap {
                return Err(too_large("the jellyfish list", js.len(), cap).into());
            }
            let text: String = js
                .iter()
                .map(|j| format!("{} | {}\n", j.tableau, points(j.family.iter().copied())))
                .collect();
            let rows = js
                .iter()
                .enumerate()
                .map(|(i, j)| vec![i.to_string(), j.tableau.to_string(), points(j.family.iter().copied())])
                .collect();
            emit(o.format, &js, &text, &["index", "tableau", "family"], rows)
        }
    }
}

#[derive(Serialize)]
struct ThetaOutcome {
    group: HermitianType,
    k: u32,
    bijection: bool,
    corner_mismatches: usize,
    passed: bool,
}

fn cmd_check(o: &Opts, what: CheckWhat, a: Option<u32>, b: Option<u32>) -> Out {
    match what {
        CheckWhat::Not => {
            let setting = o.setting()?;
            let sigma = o.sigma(setting.family)?;
            let c = not_identity_check(&setting, &sigma)?;
            let text = format!(
                "#Q = {} dim U_sigma = {} #P = {} degree = {}: {}\n",
                c.q_count,
                c.dim_u_sigma,
                c.p_count,
                c.degree,
                if c.passed { "pass" } else { "FAIL" }
            );
            let row = vec![
                c.q_count.to_string(),
                c.dim_u_sigma.to_string(),
                c.p_count.to_string(),
                c.degree.to_string(),
                c.passed.to_string(),
            ];
            emit(
                o.format,
                &c,
                &text,
                &["q_count", "dim_u_sigma", "p_count", "degree", "passed"],
                vec![row],
            )?;
            verdict(c.passed)
        }
        CheckWhat::Theta => {
            let ty = o.hermitian()?;
            if !ty.is_dual_pair() {
                return Err(Error::Unsupported(format!("theta is defined for the dual-pair types, not {ty}")).into());
            }
            let k = o.need(o.k, "k")?;
            let bijection = check_theta(ty, k, 16)?;
            let bad = corner_mismatches(ty, k)?.len();
            let r = ThetaOutcome {
                group: ty,
                k,
                bijection,
                corner_mismatches: bad,
                passed: bijection && bad == 0,
            };
            let text = format!("{ty} k={k}: bijection {bijection}, corner mismatches {bad}\n");
            let row = vec![ty.to_string(), k.to_string(), bijection.to_string(), bad.to_string()];
            emit(
                o.format,
                &r,
                &text,
                &["group", "k", "bijection", "corner_mismatches"],
                vec![row],
            )?;
            verdict(r.passed)
        }
        CheckWhat::Collapse => {
            let setting = o.setting()?;
            let sigma = o.sigma(setting.family)?;
            let c = q_collapse_check(&setting, &sigma)?;
            let expected = c.expected.as_ref().map_or("-".to_string(), |x| x.to_string());
            let text = format!(
                "{setting} sigma={sigma} regime {}: #Q = {}, expected {expected}; {}: {}\n",
                c.regime,
                c.q_count,
                c.note,
                if c.passed { "pass" } else { "FAIL" }
            );
            let row = vec![
                c.regime.to_string(),
                c.q_count.to_string(),
                expected,
                c.passed.to_string(),
            ];
            emit(
                o.format,
                &c,
                &text,
                &["regime", "q_count", "expected", "passed"],
                vec![row],
            )?;
            verdict(c.passed)
        }
        CheckWhat::Conjecture => {
            let n = o.need(o.n, "n")?;
            let k = o.need(o.k, "k")?;
            let sigmas = match &o.sigma {
                Some(s) => vec![parse_partition(s)?],
                None => {
                    let setting = Setting::mp(n, k)?;
                    Partition::all_up_to(3)
                        .into_iter()
                        .filter(|s| {
                            sigma_admissible(&setting, &SigmaLabel::Single(s.clone())) == Admissibility::InSigma
                        })
                        .collect()
                }
            };
            let r = mp_conjecture_probe(n, k, &sigmas, &o.oracle_limits())?;
            let mut text = String::new();
            for e in &r.entries {
                let _ = writeln!(
                    text,
                    "CONJECTURAL Mp({},R) k={} sigma={}: #Q = {} #P = {} value = {}",
                    2 * n,
                    e.k,
                    e.sigma,
                    e.q_count,
                    e.p_count,
                    e.value
                );
            }
            for c in &r.boundary {
                let _ = writeln!(
                    text,
                    "boundary k={} sigma={}: probe {} proven {} {}",
                    c.k,
                    c.sigma,
                    c.probe_value,
                    c.proven_value,
                    if c.passed { "ok" } else { "MISMATCH" }
                );
            }
            let rows = r
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.k.to_string(),
                        e.sigma.to_string(),
                        e.q_count.to_string(),
                        e.p_count.to_string(),
                        e.value.to_string(),
                        e.conjectural.to_string(),
                    ]
                })
                .collect();
            emit(
                o.format,
                &r,
                &text,
                &["k", "sigma", "q_count", "p_count", "value", "conjectural"],
                rows,
            )?;
            verdict(r.passed)
        }
        CheckWhat::Exceptional => {
            let group = match o.family {
                Some(FamilyArg::E6) => Some(HermitianType::E6),
                Some(FamilyArg::E7) => Some(HermitianType::E7),
                None => None,
                Some(_) => return Err(Error::Unsupported("the exceptional table covers e6 and e7".into()).into()),
            };
            let mut out = Vec::new();
            for row in exceptional_rows() {
                if group.is_some_and(|g| g != row.group) || o.k.is_some_and(|k| k != row.k) {
                    continue;
                }
                let a_range = a.map_or(0..=4, |x| x..=x);
                let b_range = if row.uses_b { b.map_or(0..=4, |x| x..=x) } else { 0..=0 };
                for bb in b_range {
                    for aa in a_range.clone() {
                        out.push(exceptional_degree(&row, aa, bb)?);
                    }
                }
            }
            let mut text = String::new();
            for d in &out {
                let _ = writeln!(
                    text,
                    "{} a={} b={}: dim U_sigma = {} (polynomial {}) deg O = {} degree = {} {}",
                    d.h_group,
                    d.a,
                    d.b,
                    d.dim_u_sigma,
                    d.polynomial,
                    d.deg_orbit,
                    d.degree,
                    if d.agrees { "ok" } else { "MISMATCH" }
                );
            }
            let rows = out
                .iter()
                .map(|d| {
                    vec![
                        d.h_group.to_string(),
                        d.a.to_string(),
                        d.b.to_string(),
                        d.dim_u_sigma.to_string(),
                        d.polynomial.to_string(),
                        d.deg_orbit.to_string(),
                        d.degree.to_string(),
                        d.agrees.to_string(),
                    ]
                })
                .collect();
            let header = [
                "h_group",
                "a",
                "b",
                "dim_u_sigma",
                "polynomial",
                "deg_orbit",
                "degree",
                "agrees",
            ];
            emit(o.format, &out, &text, &header, rows)?;
            verdict(out.iter().all(|d| d.agrees))
        }
    }
}

fn cmd_hilbert(o: &Opts) -> Out {
    let ty = o.hermitian()?;
    let k = o.need(o.k, "k")?;
    let r = hilbert_report(&ty, k)?;
    let text = format!("{}\n#P = {}\n", r.rendered, r.p_count);
    let row = vec![
        ty.to_string(),
        k.to_string(),
        r.numerator.clone(),
        r.denominator_exponent.to_string(),
        r.p_count.to_string(),
    ];
    emit(
        o.format,
        &r,
        &text,
        &["group", "k", "numerator", "denominator_exponent", "p_count"],
        vec![row],
    )
}

fn cmd_verify(o: &Opts, only: &[String]) -> Out {
    let only = only.iter().map(|s| s.parse::<Suite>()).collect::<Result<Vec<_>, _>>()?;
    let mut limits = VerifyLimits::default();
    if let Some(n) = o.limit {
        limits.max_poset_points = n as usize;
    }
    let r = verify_all(&limits, &only, o.seed);
    let mut text = String::new();
    for s in &r.suites {
        let _ = writeln!(
            text,
            "[{}] {:>2} {:<12} {} cases, {} failures",
            if s.passed { "PASS" } else { "FAIL" },
            s.criterion,
            s.suite,
            s.cases,
            s.failure_count
        );
        for f in &s.failures {
            let _ = writeln!(text, "      {f}");
        }
    }
    if let Some(s) = &r.spot_checks {
        let _ = writeln!(
            text,
            "[{}]    spot checks seed {}: {} cases, {} failures",
            if s.passed { "PASS" } else { "FAIL" },
            s.seed,
            s.cases,
            s.failure_count
        );
    }
    let rows = r
        .suites
        .iter()
        .map(|s| {
            vec![
                s.criterion.to_string(),
                s.suite.to_string(),
                s.cases.to_string(),
                s.failure_count.to_string(),
                s.passed.to_string(),
            ]
        })
        .collect();
    emit(
        o.format,
        &r,
        &text,
        &["criterion", "suite", "cases", "failures", "passed"],
        rows,
    )?;
    verdict(r.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let result = match &cli.command {
        Command::Degree => cmd_degree(o),
        Command::Enumerate { what, all } => cmd_enumerate(o, *what, *all),
        Command::Check { what, a, b } => cmd_check(o, *what, *a, *b),
        Command::Hilbert => cmd_hilbert(o),
        Command::Verify { only } => cmd_verify(o, only),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e @ Error::Data { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
