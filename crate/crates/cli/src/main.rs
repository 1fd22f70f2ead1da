//! Command-line front end for the linsys workbench.
//!
//! Exit codes: 0 success, 1 validation failure, 2 budget exhausted,
//! 3 internal solver/oracle mismatch, 4 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use linsys::audit::{audit_lemma, search_fl, verify_theorem1, FlStatus, LemmaId};
use linsys::catalog::{materialize, CatalogSpec};
use linsys::gen::{random_linear_system, triangle};
use linsys::invariants::{
    nu2_exact, nu2_oracle, nu_exact, nu_oracle, tau_exact, tau_oracle, InvariantCertificate,
};
use linsys::io::{parse_ls, write_ls};
use linsys::plane::{projective_plane, truncate};
use linsys::system::LinearSystem;
use linsys::Error;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_VALIDATION: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "linsys",
    version,
    about = "Exact workbench for finite linear systems",
    long_about = "Generators, exact transversal/matching/2-packing solvers with \
certificates, statement audits over reproducible catalogs, and exhaustive \
minimum-line search for intersecting r-partite systems with transversal \
number r-1."
)]
struct Cli {
    /// Worker threads for catalog audits and search; results are identical
    /// for every thread count.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance in `.ls` format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Validate a `.ls` file and report every violated invariant.
    Check { file: String },
    /// Compute exact invariants (with certificates) of a `.ls` file.
    Inv(InvArgs),
    /// Re-check a certificate file against a `.ls` instance.
    VerifyCert { file: String, cert: PathBuf },
    /// Audit a statement over a catalog of instances.
    Audit(AuditArgs),
    /// Search for the minimum line count with transversal number r-1.
    SearchFl(SearchFlArgs),
    /// Exhaustively verify the even-r lower bound 3(r-2)+1 on that count.
    VerifyT1(VerifyT1Args),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Projective plane of order q (q in {2,3,4,5,7,8,9,11,13,16}).
    Plane(PlaneArgs),
    /// Truncated projective plane: remove one point and its lines.
    Truncated(TruncatedArgs),
    /// The 3-line triangle witness.
    Triangle(OutArg),
    /// Seeded random linear system by rejection sampling.
    Random(RandomArgs),
}

#[derive(Args)]
struct PlaneArgs {
    #[arg(long)]
    q: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TruncatedArgs {
    #[arg(long)]
    q: usize,
    /// Point to remove (all choices give isomorphic results).
    #[arg(long, default_value_t = 0)]
    point: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OutArg {
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    seed: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum InvKind {
    Tau,
    Nu,
    Nu2,
    All,
}

#[derive(Args)]
struct InvArgs {
    #[arg(value_enum)]
    kind: InvKind,
    /// Instance path, or `-` for stdin.
    file: String,
    /// Cross-check against the exhaustive oracles (refused over caps).
    #[arg(long)]
    oracle: bool,
    /// Write certificates as JSON.
    #[arg(long)]
    cert_out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// One of T2, L3, C5, L4, L5, L6, C7, CONJ-ODD, CONJ-EVEN.
    #[arg(long)]
    lemma: String,
    /// Catalog spec, e.g. `random:count=500,seed=7`, `enum:max-m=6,max-r=6`,
    /// `planes:q=2..4`, `file:PATH`, `dir:PATH`.
    #[arg(long)]
    catalog: String,
    /// Enumeration node budget for `enum:` catalogs.
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchFlArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    max_lines: usize,
    /// Search node budget across all line counts.
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    /// Where to write the witness `.ls` (default fl-witness-r<R>.ls).
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyT1Args {
    /// Even r >= 4; the search runs line counts up to 3(r-2).
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: could not configure {} threads: {e}", cli.threads);
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SolverOracleMismatch(_) => EXIT_MISMATCH,
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        Error::UnknownLemma(_) | Error::Precondition(_) => EXIT_USAGE,
        _ => EXIT_VALIDATION,
    }
}

fn manifest(subcommand: &str, params: serde_json::Value) -> String {
    json!({
        "tool": "linsys",
        "version": env!("CARGO_PKG_VERSION"),
        "subcommand": subcommand,
        "params": params,
        "status": "complete",
    })
    .to_string()
}

fn emit(text: &str, out: Option<&PathBuf>) -> linsys::Result<()> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn read_instance(file: &str) -> linsys::Result<(LinearSystem, Option<linsys::SidePartition>)> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(file)?
    };
    parse_ls(&text)
}

fn run(command: Command) -> linsys::Result<u8> {
    match command {
        Command::Gen(gen) => run_gen(gen),
        Command::Check { file } => run_check(&file),
        Command::Inv(args) => run_inv(args),
        Command::VerifyCert { file, cert } => run_verify_cert(&file, &cert),
        Command::Audit(args) => run_audit(args),
        Command::SearchFl(args) => run_search_fl(args),
        Command::VerifyT1(args) => run_verify_t1(args),
    }
}

fn run_gen(gen: GenCommand) -> linsys::Result<u8> {
    let (text, out) = match gen {
        GenCommand::Plane(a) => {
            let plane = projective_plane(a.q)?;
            let header = vec![
                manifest("gen plane", json!({"q": a.q})),
                format!("projective plane of order {}", a.q),
            ];
            (write_ls(&plane.system, None, &header), a.out)
        }
        GenCommand::Truncated(a) => {
            let plane = projective_plane(a.q)?;
            let (sys, sides) = truncate(&plane, a.point)?;
            let header = vec![
                manifest("gen truncated", json!({"q": a.q, "point": a.point})),
                format!(
                    "truncated projective plane: order {}, removed point {}",
                    a.q, a.point
                ),
            ];
            (write_ls(&sys, Some(&sides), &header), a.out)
        }
        GenCommand::Triangle(a) => {
            let sys = triangle();
            let header = vec![manifest("gen triangle", json!({}))];
            (write_ls(&sys, None, &header), a.out)
        }
        GenCommand::Random(a) => {
            let sys = random_linear_system(a.n, a.m, a.r, a.seed)?;
            let header = vec![manifest(
                "gen random",
                json!({"n": a.n, "m": a.m, "r": a.r, "seed": a.seed}),
            )];
            (write_ls(&sys, None, &header), a.out)
        }
    };
    emit(&text, out.as_ref())?;
    Ok(EXIT_OK)
}

fn run_check(file: &str) -> linsys::Result<u8> {
    let (sys, sides) = read_instance(file)?;
    let report = sys.validate();
    println!("points {}", report.num_points);
    println!("lines {}", report.num_lines);
    println!("linear: {}", if report.is_linear() { "yes" } else { "no" });
    match report.uniform {
        Some(r) => println!("uniform r: {r}"),
        None => println!("uniform r: none"),
    }
    for i in &report.empty_lines {
        println!("violation: line {i} is empty");
    }
    for (i, j) in &report.duplicate_lines {
        println!("violation: lines {i} and {j} are identical");
    }
    for (i, j) in &report.nonlinear_pairs {
        println!(
            "violation: lines {i} and {j} share {} points",
            sys.line(*i).intersection_len(sys.line(*j))
        );
    }
    let mut ok = report.is_valid();
    if let Some(part) = sides {
        match part.check(&sys) {
            Ok(()) => println!("sides: valid {}-partition", part.r),
            Err(msg) => {
                println!("violation: sides row: {msg}");
                ok = false;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VALIDATION })
}

fn run_inv(args: InvArgs) -> linsys::Result<u8> {
    let (sys, _) = read_instance(&args.file)?;
    let report = sys.validate();
    if !report.is_valid() {
        let mut parts = Vec::new();
        if !report.nonlinear_pairs.is_empty() {
            parts.push(format!(
                "non-linear pairs {:?}",
                report.nonlinear_pairs
            ));
        }
        if !report.duplicate_lines.is_empty() {
            parts.push(format!("duplicate lines {:?}", report.duplicate_lines));
        }
        if !report.empty_lines.is_empty() {
            parts.push(format!("empty lines {:?}", report.empty_lines));
        }
        return Err(Error::Parse {
            line: 0,
            msg: format!("instance fails validation: {}", parts.join("; ")),
        });
    }
    println!("points {}", sys.num_points());
    println!("lines {}", sys.num_lines());
    match report.uniform {
        Some(r) => println!("uniform r: {r}"),
        None => println!("uniform r: none"),
    }
    println!(
        "intersecting: {}",
        if sys.is_intersecting() { "yes" } else { "no" }
    );

    let mut certs: Vec<InvariantCertificate> = Vec::new();
    let want = |k: InvKind| args.kind == k || args.kind == InvKind::All;
    if want(InvKind::Tau) {
        let cert = tau_exact(&sys);
        if args.oracle {
            let o = tau_oracle(&sys)?;
            if o != cert.value {
                return Err(Error::SolverOracleMismatch(format!(
                    "tau solver says {}, oracle says {o}",
                    cert.value
                )));
            }
        }
        println!("tau = {}  witness {:?}", cert.value, cert.witness);
        certs.push(cert);
    }
    if want(InvKind::Nu) {
        let cert = nu_exact(&sys);
        if args.oracle {
            let o = nu_oracle(&sys)?;
            if o != cert.value {
                return Err(Error::SolverOracleMismatch(format!(
                    "nu solver says {}, oracle says {o}",
                    cert.value
                )));
            }
        }
        println!("nu = {}  witness {:?}", cert.value, cert.witness);
        certs.push(cert);
    }
    if want(InvKind::Nu2) {
        let cert = nu2_exact(&sys);
        if args.oracle {
            let o = nu2_oracle(&sys)?;
            if o != cert.value {
                return Err(Error::SolverOracleMismatch(format!(
                    "nu2 solver says {}, oracle says {o}",
                    cert.value
                )));
            }
        }
        println!("nu2 = {}  witness {:?}", cert.value, cert.witness);
        certs.push(cert);
    }
    if args.oracle {
        println!("oracle cross-check: ok");
    }
    for cert in &certs {
        println!("[cert] {}", cert.to_json());
    }
    if let Some(path) = args.cert_out {
        let doc = json!({
            "manifest": serde_json::from_str::<serde_json::Value>(&manifest(
                "inv",
                json!({"kind": kind_name(args.kind), "oracle": args.oracle}),
            ))?,
            "certificates": certs,
        });
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(EXIT_OK)
}

fn kind_name(kind: InvKind) -> &'static str {
    match kind {
        InvKind::Tau => "tau",
        InvKind::Nu => "nu",
        InvKind::Nu2 => "nu2",
        InvKind::All => "all",
    }
}

fn run_verify_cert(file: &str, cert_path: &PathBuf) -> linsys::Result<u8> {
    let (sys, _) = read_instance(file)?;
    let text = std::fs::read_to_string(cert_path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let certs: Vec<InvariantCertificate> = if let Some(list) = value.get("certificates") {
        serde_json::from_value(list.clone())?
    } else {
        vec![serde_json::from_value(value)?]
    };
    if certs.is_empty() {
        return Err(Error::InvalidCertificate("no certificates in file".into()));
    }
    for cert in &certs {
        cert.verify(&sys)?;
        println!(
            "certificate ok: {} = {} with valid witness",
            match cert.kind {
                linsys::invariants::CertKind::Transversal => "tau",
                linsys::invariants::CertKind::Matching => "nu",
                linsys::invariants::CertKind::TwoPacking => "nu2",
            },
            cert.value
        );
    }
    Ok(EXIT_OK)
}

fn run_audit(args: AuditArgs) -> linsys::Result<u8> {
    let id: LemmaId = args.lemma.parse()?;
    let spec: CatalogSpec = args.catalog.parse()?;
    let items = materialize(&spec, args.budget)?;
    let report = audit_lemma(id, &items, &spec.to_string())?;
    let mut text = report.render_text();
    text.push_str(&format!(
        "[manifest] {}\n",
        manifest(
            "audit",
            json!({"lemma": id.to_string(), "catalog": spec.to_string(), "budget": args.budget}),
        )
    ));
    emit(&text, args.out.as_ref())?;
    Ok(EXIT_OK)
}

fn run_search_fl(args: SearchFlArgs) -> linsys::Result<u8> {
    let fl = search_fl(args.r, args.max_lines, args.budget)?;
    let mut text = fl.render_text();
    let witness_path = args
        .witness_out
        .unwrap_or_else(|| PathBuf::from(format!("fl-witness-r{}.ls", args.r)));
    if let Some(witness) = fl.witness_ls() {
        let mut body = format!(
            "# manifest: {}\n",
            manifest(
                "search-fl",
                json!({"r": args.r, "max_lines": args.max_lines, "budget": args.budget}),
            )
        );
        body.push_str(&witness);
        std::fs::write(&witness_path, body)?;
        text.push_str(&format!("witness written to {}\n", witness_path.display()));
        let cert_path = witness_path.with_extension("cert.json");
        let cert = &fl.witness.as_ref().expect("witness present").tau_cert;
        std::fs::write(&cert_path, cert.to_json())?;
        text.push_str(&format!("tau certificate written to {}\n", cert_path.display()));
    }
    text.push_str(&format!(
        "[manifest] {}\n",
        manifest(
            "search-fl",
            json!({"r": args.r, "max_lines": args.max_lines, "budget": args.budget}),
        )
    ));
    emit(&text, args.out.as_ref())?;
    Ok(match fl.status {
        FlStatus::BudgetExhausted => EXIT_BUDGET,
        _ => EXIT_OK,
    })
}

fn run_verify_t1(args: VerifyT1Args) -> linsys::Result<u8> {
    let (report, fl) = verify_theorem1(args.r, args.budget)?;
    let mut text = report.render_text();
    text.push_str("--- exhaustion log ---\n");
    for e in &fl.per_m {
        text.push_str(&format!(
            "m={}: classes={} realizable={} labeled={} nodes={} complete={}\n",
            e.m,
            e.classes,
            e.realizable,
            e.labeled,
            e.nodes,
            if e.complete { "yes" } else { "no" }
        ));
    }
    text.push_str(&format!(
        "[manifest] {}\n",
        manifest(
            "verify-t1",
            json!({"r": args.r, "budget": args.budget}),
        )
    ));
    emit(&text, args.out.as_ref())?;
    Ok(match fl.status {
        FlStatus::BudgetExhausted => EXIT_BUDGET,
        _ => EXIT_OK,
    })
}
