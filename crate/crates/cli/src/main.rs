use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use qhp_core::comb::{self, CombError, CombSpec};
use qhp_core::dpd::{self, DpdSpec, FamilyRow};
use qhp_core::families::{self, BertinParams, FamilyError, Kbar};
use qhp_core::lattice::{snf, AbelianGroupInvariants, IntMatrix};
use qhp_core::surface::SurfaceError;

#[derive(Parser)]
#[command(
    name = "qhp",
    version,
    about = "Q-homology planes: comb surfaces, DPD presentations, families"
)]
struct Cli {
    /// Output format for reports on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Comb attachments on P1 x P1.
    #[command(subcommand)]
    Comb(CombCommand),
    /// DPD presentations.
    #[command(subcommand)]
    Dpd(DpdCommand),
    /// Bertin surface x^e z = x + y^d.
    Bertin {
        #[arg(long)]
        d: u64,
        #[arg(long = "e-exp", default_value_t = 1)]
        e_exp: u64,
    },
    /// Look up an affine line in the classification table.
    Classify {
        /// kbar(X): -inf, 0 or 1.
        #[arg(long, allow_hyphen_values = true)]
        kx: Option<Kbar>,
        /// kbar(X \ Γ): -inf, 0 or 1.
        #[arg(long, allow_hyphen_values = true)]
        kc: Option<Kbar>,
        /// Γ is a singular homology line.
        #[arg(long)]
        singular: bool,
        #[arg(long, requires = "singular")]
        k: Option<u32>,
        #[arg(long, requires = "singular")]
        l: Option<u32>,
    },
    /// Randomized self-checks of the lattice and comb code.
    Selftest {
        /// Overridden by QHP_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum CombCommand {
    /// Build X from a CombSpec file and report its invariants.
    Build {
        file: PathBuf,
        /// Write boundary.dot and one fiber_<point>.dot per point here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DpdCommand {
    /// Analyze a DPDSpec file.
    Analyze { file: PathBuf },
    /// Sweep the (e, m, n) family; ranges are `A..B` (inclusive) or `A`.
    Family {
        #[arg(long, value_parser = parse_range)]
        e: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u64>,
        /// Write the rows as CSV to this file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Failure classes, mapped onto the exit codes.
enum Failure {
    Input(anyhow::Error),
    Constraint(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Constraint(_) => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<CombError> for Failure {
    fn from(e: CombError) -> Self {
        match e {
            CombError::Schema(_) | CombError::InvalidCenter { .. } => Failure::Input(e.into()),
            CombError::Constraint(v) => Failure::Constraint(format!("constraint violation at {v}")),
            CombError::Surface(SurfaceError::DuplicateLabel(l)) => {
                Failure::Input(anyhow::anyhow!("duplicate curve label {l}"))
            }
            CombError::Inconsistent(_) | CombError::Surface(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::InvalidParams(_)
            | FamilyError::InconsistentKbar { .. }
            | FamilyError::Dpd(_) => Failure::Input(e.into()),
            FamilyError::Comb(c) => c.into(),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(Failure::Input)
}

fn print_json(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn comb_build(
    format: Format,
    file: &Path,
    dot: Option<&Path>,
    json_out: Option<&Path>,
) -> CmdResult {
    let spec = CombSpec::from_json(&read(file)?)?;
    let combed = comb::assemble_comb(&spec)?;

    if let Some(dir) = dot {
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))
            .map_err(Failure::Input)?;
        let graph = combed
            .boundary_graph()
            .map_err(|e| Failure::Internal(e.to_string()))?;
        write(&dir.join("boundary.dot"), &graph.to_dot("boundary"))?;
        for p in &spec.points {
            let g = combed
                .fiber_graph(&p.label)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            write(
                &dir.join(format!("fiber_{}.dot", p.label)),
                &g.to_dot(&format!("fiber {}", p.label)),
            )?;
        }
    }

    let validation = comb::validate_comb(&combed);
    if let Some(first) = validation.violations.first() {
        for v in &validation.violations[1..] {
            eprintln!("also violated at {v}");
        }
        return Err(CombError::Constraint(first.clone()).into());
    }
    let report = comb::affine_report(&combed)?;
    if let Some(path) = json_out {
        write(
            path,
            &serde_json::to_string_pretty(&report).expect("report serializes"),
        )?;
    }
    match format {
        Format::Json => print_json(&report),
        Format::Text => {
            println!("points: {}", spec.points.len());
            println!("e(X) = {}", report.euler_x);
            println!("Pic(X) = {}", report.pic_x);
            println!("Q-acyclic: {}", yes_no(report.q_acyclic));
            println!("Z-acyclic: {}", yes_no(report.z_acyclic));
            for af in &combed.affine_fibers {
                println!(
                    "fiber over {}: {} with multiplicity {}",
                    af.point, af.exceptional, af.multiplicity
                );
            }
            println!("boundary: {}", combed.boundary.join(" "));
        }
    }
    if !report.q_acyclic {
        return Err(Failure::Internal(format!(
            "valid comb is not Q-acyclic: e(X) = {}, Pic(X) = {}",
            report.euler_x, report.pic_x
        )));
    }
    Ok(())
}

fn dpd_analyze(format: Format, file: &Path) -> CmdResult {
    let spec = DpdSpec::from_json(&read(file)?).map_err(|e| Failure::Input(e.into()))?;
    let report = dpd::report(&spec);
    let family = dpd::recognize_family(&spec);
    let ml = dpd::ml_class(&spec, family);
    let canonical = family.map(dpd::canonical_class);
    let kbar = family.and_then(|p| dpd::kodaira_of_complement(p).ok());
    match format {
        Format::Json => print_json(&json!({
            "report": report,
            "family": family,
            "canonical_class": canonical,
            "ml_class": ml,
            "kbar_complement": kbar,
        })),
        Format::Text => {
            println!("{spec}");
            for f in &report.fibers {
                let kind = match &f.kind {
                    dpd::FiberKind::General => "general".to_string(),
                    dpd::FiberKind::Cross {
                        m_plus,
                        m_minus,
                        smooth,
                    } => {
                        format!(
                            "cross (m+, m-) = ({m_plus}, {m_minus}), {}",
                            if *smooth { "smooth" } else { "singular" }
                        )
                    }
                    dpd::FiberKind::Multiple { m } => format!("multiple, m = {m}"),
                };
                println!("fiber over {}: {kind}; D+ + D- = {}", f.point, f.sum);
            }
            println!(
                "l = {}, k = {}, e(X) = {}",
                report.l, report.k, report.euler
            );
            println!("Pic(X) (x) Q = 0: {}", yes_no(report.picq_trivial));
            println!("smooth: {}", yes_no(report.smooth_surface));
            println!("Q-acyclic: {}", yes_no(report.q_acyclic));
            match family {
                Some(p) => {
                    let k = canonical.expect("family member");
                    println!("family member {p}");
                    println!(
                        "K_X = {} [O_1] in Z/{}, trivial: {}",
                        k.residue,
                        p.m,
                        yes_no(k.is_trivial)
                    );
                    if let Some(kb) = kbar {
                        println!("kbar(X \\ Γ) = {kb}");
                    }
                }
                None => println!("not a member of the (e, m, n) family"),
            }
            print!("ML class: {}", ml.class);
            match &ml.note {
                Some(note) => println!(" ({note})"),
                None => println!(),
            }
        }
    }
    Ok(())
}

const CSV_HEADER: [&str; 10] = [
    "e",
    "m",
    "n",
    "l",
    "k",
    "euler",
    "q_acyclic",
    "K_trivial",
    "ml_class",
    "kbar_complement",
];

fn family_csv(rows: &[FamilyRow]) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.e.to_string(),
            r.m.to_string(),
            r.n.to_string(),
            r.l.to_string(),
            r.k.to_string(),
            r.euler.to_string(),
            r.q_acyclic.to_string(),
            r.k_trivial.to_string(),
            r.ml_class.to_string(),
            r.kbar_complement.map(|k| k.to_string()).unwrap_or_default(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn dpd_family(
    format: Format,
    e: RangeInclusive<u64>,
    m: RangeInclusive<u64>,
    n: RangeInclusive<u64>,
    out: Option<&Path>,
) -> CmdResult {
    let rows = dpd::family_sweep(e, m, n);
    let csv = family_csv(&rows)?;
    match (out, format) {
        (Some(path), _) => {
            write(path, &csv)?;
            if format == Format::Json {
                print_json(&rows);
            } else {
                println!("{} rows written to {}", rows.len(), path.display());
            }
        }
        (None, Format::Json) => print_json(&rows),
        (None, Format::Text) => print!("{csv}"),
    }
    Ok(())
}

fn bertin(format: Format, d: u64, e_exp: u64) -> CmdResult {
    let report = families::bertin_report(BertinParams::new(d, e_exp)?)?;
    match format {
        Format::Json => print_json(&report),
        Format::Text => {
            println!("X: {}", report.equation);
            print!("A1-ruling: {}", report.ruling);
            match report.multiple_fiber {
                Some(m) => println!(", unique multiple fiber over x = 0 of multiplicity {m}"),
                None => println!(", no multiple fiber"),
            }
            println!("A1*-fibration: {}", report.a1star_fibration);
            println!("Pic(X) = H_1(X; Z), declared: {}", report.declared_pic);
            println!("Pic(X) from the comb model: {}", report.lattice.pic_x);
            println!("e(X) = {}", report.lattice.euler_x);
            println!("agree: {}", yes_no(report.agrees));
        }
    }
    if !report.agrees {
        return Err(Failure::Internal(format!(
            "declared Pic(X) = {} but the comb model gives {}",
            report.declared_pic, report.lattice.pic_x
        )));
    }
    Ok(())
}

fn classify(
    format: Format,
    kx: Option<Kbar>,
    kc: Option<Kbar>,
    singular: bool,
    k: Option<u32>,
    l: Option<u32>,
) -> CmdResult {
    let (kx, kc) = match (kx, kc, singular) {
        (Some(x), Some(c), _) => (x, c),
        (x, c, true) => (x.unwrap_or(Kbar::NegInf), c.unwrap_or(Kbar::One)),
        _ => {
            return Err(Failure::Input(anyhow::anyhow!(
                "--kx and --kc are required without --singular"
            )))
        }
    };
    let entry = families::classify(kx, kc, singular)?;
    let note = families::zhp_note(kx);
    let singularity = match (k, l) {
        (Some(k), Some(l)) => Some(families::singular_line(k, l)?),
        (None, None) => None,
        _ => return Err(Failure::Input(anyhow::anyhow!("--k and --l go together"))),
    };
    match format {
        Format::Json => print_json(&json!({
            "entry": entry,
            "zhp_note": note,
            "singularity": singularity,
        })),
        Format::Text => {
            println!(
                "case ({}): (kbar(X), kbar(X \\ Γ)) = ({}, {})",
                entry.case_label, entry.kbar_x, entry.kbar_complement
            );
            println!("{}", entry.text);
            let d = entry.descriptor;
            let flags = [
                ("fiber-type line", d.fiber_type_line),
                ("family of lines", d.family_of_lines),
                ("unique line", d.unique_line),
                ("H[-1,1] with two lines", d.fujita_two_lines),
                ("unique A1*-fibration", d.unique_a1star_fibration),
                ("X = A2, Γ ~ V(x^k - y^l)", d.plane_with_cusp_line),
            ];
            let set: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
            println!("descriptor: {}", set.join(", "));
            if let Some(s) = singularity {
                println!(
                    "V(x^{} - y^{}): mu = {}, g = {}, weight {} under (l, k)",
                    s.k, s.l, s.mu, s.milnor_genus, s.weight
                );
            }
            if let Some(n) = note {
                println!("Z-homology plane: {n}");
            }
        }
    }
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    let data = (0..r * c)
        .map(|_| rng.gen_range(-20i64..=20).into())
        .collect();
    IntMatrix::new(r, c, data).expect("shape")
}

fn selftest(format: Format, seed: u64, cases: usize) -> CmdResult {
    let seed = match std::env::var("QHP_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("QHP_SEED={s:?} is not an integer"))?,
        Err(_) => seed,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures: Vec<String> = Vec::new();

    for i in 0..cases {
        let spec = comb::random_valid_spec(&mut rng, 4, 5);
        let checked = comb::build_comb(&spec).and_then(|c| {
            c.model.check_consistency()?;
            comb::affine_report(&c)
        });
        match checked {
            Ok(r) => {
                let orders: Vec<_> = r.multiplicities.iter().map(|&m| m.into()).collect();
                if r.euler_x != 1 || r.pic_x != AbelianGroupInvariants::from_cyclic_orders(&orders)
                {
                    failures.push(format!(
                        "comb {i}: e(X) = {}, Pic(X) = {}",
                        r.euler_x, r.pic_x
                    ));
                }
            }
            Err(e) => failures.push(format!("comb {i}: {e}\n{}", spec.to_json())),
        }
    }
    for i in 0..cases {
        let a = random_matrix(&mut rng);
        let r = snf(&a);
        let ok =
            r.u.checked_mul(&a)
                .and_then(|x| x.checked_mul(&r.v))
                .is_ok_and(|p| p == r.s)
                && [&r.u, &r.v].iter().all(|w| {
                    w.determinant()
                        .is_ok_and(|d| d == 1.into() || d == (-1).into())
                });
        if !ok {
            failures.push(format!("matrix {i}: U A V != S or U, V not unimodular"));
        }
    }
    for row in dpd::family_sweep(1..=6, 2..=7, 2..=7) {
        if !row.q_acyclic || row.euler != 1 {
            failures.push(format!(
                "family ({}, {}, {}) not Q-acyclic",
                row.e, row.m, row.n
            ));
        }
    }
    for f in families::fixtures() {
        match families::crosscheck_fixture(&f) {
            Ok(c) if c.agree => {}
            Ok(c) => failures.push(format!("{}: {}", f.params, c.diagnostics.join("; "))),
            Err(e) => failures.push(format!("{}: {e}", f.params)),
        }
    }
    for d in 1..=9 {
        match families::bertin_report(BertinParams { d, e_exp: 1 }) {
            Ok(r) if r.agrees => {}
            Ok(r) => failures.push(format!("Bertin d = {d}: Pic(X) = {}", r.lattice.pic_x)),
            Err(e) => failures.push(format!("Bertin d = {d}: {e}")),
        }
    }

    match format {
        Format::Json => print_json(&json!({ "seed": seed, "cases": cases, "failures": failures })),
        Format::Text => {
            println!("seed {seed}, {cases} random combs and matrices");
            for f in &failures {
                println!("FAIL {f}");
            }
            println!(
                "{}",
                if failures.is_empty() {
                    "all checks passed"
                } else {
                    "self-test failed"
                }
            );
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "{} self-checks failed",
            failures.len()
        )))
    }
}

fn run(cli: Cli) -> CmdResult {
    let f = cli.format;
    match cli.command {
        Command::Comb(CombCommand::Build { file, dot, json }) => {
            comb_build(f, &file, dot.as_deref(), json.as_deref())
        }
        Command::Dpd(DpdCommand::Analyze { file }) => dpd_analyze(f, &file),
        Command::Dpd(DpdCommand::Family { e, m, n, csv }) => dpd_family(f, e, m, n, csv.as_deref()),
        Command::Bertin { d, e_exp } => bertin(f, d, e_exp),
        Command::Classify {
            kx,
            kc,
            singular,
            k,
            l,
        } => classify(f, kx, kc, singular, k, l),
        Command::Selftest { seed, cases } => selftest(f, seed, cases),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(e) => eprintln!("error: {e:#}"),
                Failure::Constraint(msg) => eprintln!("error: {msg}"),
                Failure::Internal(msg) => eprintln!("internal inconsistency: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
