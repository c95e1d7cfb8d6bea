//! Command-line front end: argument parsing, file I/O and reporting for the
//! `hypertile` library.

pub mod json;
pub mod probe;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hypertile::absorb::{
    build_absorbing_family, count_absorbing_sets, epsilon_reduction, estimate_absorbing_sets, reachability_count,
    reachability_estimate, reachability_partition,
};
use hypertile::constructions::{check_certificate, generate, generate_general};
use hypertile::fractional::{format_fht, gadget_l1, gadget_l2, parse_fht, verify, L1Case, L2Case};
use hypertile::io::{format_part, read_h3g, read_part, write_h3g};
use hypertile::kspec::{check_gcd_fact, codegree_coefficient, threshold_coefficient};
use hypertile::lattice::{robust_edge_vectors, transferral_check, Threshold};
use hypertile::rational::{self, q};
use hypertile::tiler::{greedy_regular_tiling, has_perfect_tiling, max_tiling};
use hypertile::{classify, Barrier, Error, Hypergraph3, KSpec, Limits, Rational};
use serde_json::{json, Value};

use crate::probe::{probe, ProbeConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hypertile", version, about = "Perfect K_{a,b,c}-tilings of 3-uniform hypergraphs")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum vertex degree threshold coefficient for a perfect tiling.
    Threshold(AbcArg),
    /// Type classification of K_{a,b,c}.
    Classify(AbcArg),
    /// Generate a lower-bound construction and check its certificate.
    Construct(ConstructArgs),
    /// Maximum, perfect or greedy tilings of a host.
    Tile(TileArgs),
    /// Fractional hom-tilings.
    #[command(subcommand)]
    Fractional(FractionalCmd),
    /// Robust index vectors and the transferral check.
    Lattice(LatticeArgs),
    /// Remove vertices in many weak edges.
    Reduce(ReduceArgs),
    /// Reachability counts or the reachability partition.
    Reach(ReachArgs),
    /// Absorbing sets.
    #[command(subcommand)]
    Absorb(AbsorbCmd),
    /// Tileability of random hosts across a degree grid.
    Probe(ProbeArgs),
}

#[derive(Args, Debug)]
struct AbcArg {
    /// Class sizes a,b,c with a <= b <= c.
    #[arg(long, value_parser = parse_abc)]
    abc: KSpec,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// s1, s2, d1, d2, d3, t, or gen for the r-uniform space barrier.
    #[arg(long)]
    kind: String,
    #[arg(long, value_parser = parse_abc)]
    abc: Option<KSpec>,
    #[arg(long)]
    n: usize,
    /// Output .h3g path; a .cert report is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Uniformity of the general barrier.
    #[arg(long)]
    r: Option<usize>,
    /// Index i of the general barrier.
    #[arg(long)]
    i: Option<usize>,
    /// Part sizes a_1,...,a_r of the general barrier.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
}

#[derive(Args, Debug)]
struct TileArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_parser = parse_abc)]
    abc: KSpec,
    /// Decide whether a perfect tiling exists (exit 1 if not).
    #[arg(long, conflicts_with = "greedy")]
    perfect: bool,
    /// Greedy tiling of parts 1..3 of --parts.
    #[arg(long, requires_all = ["parts", "eps"])]
    greedy: bool,
    #[arg(long)]
    parts: Option<PathBuf>,
    #[arg(long, value_parser = parse_rational)]
    eps: Option<Rational>,
}

#[derive(Subcommand, Debug)]
enum FractionalCmd {
    /// Check a weighting against the three conditions.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, value_parser = parse_abc)]
        abc: KSpec,
    },
    /// Build a gadget member with its weighting.
    Gadget {
        #[arg(long, value_parser = parse_abc)]
        abc: KSpec,
        /// l1 or l2.
        #[arg(long)]
        family: String,
        #[arg(long = "case")]
        case_label: String,
        /// Writes <out>.h3g and <out>.fht.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("threshold").required(true).args(["mu", "min_count"])))]
struct LatticeArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    parts: PathBuf,
    #[arg(long, value_parser = parse_abc)]
    abc: KSpec,
    /// Robustness threshold mu (counts at least mu*n^s).
    #[arg(long, value_parser = parse_rational)]
    mu: Option<Rational>,
    /// Robustness threshold as a raw count.
    #[arg(long)]
    min_count: Option<u128>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_parser = parse_rational)]
    eps: Rational,
    /// Writes the reduced graph.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReachArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_parser = parse_abc)]
    abc: KSpec,
    #[arg(long, required_unless_present = "partition")]
    u: Option<usize>,
    #[arg(long, required_unless_present = "partition")]
    v: Option<usize>,
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Estimate from this many sampled candidates instead of counting.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the depth-1 reachability partition instead.
    #[arg(long, conflicts_with_all = ["u", "v"])]
    partition: bool,
    /// Witnesses needed to join a pair in the partition.
    #[arg(long, default_value_t = 1)]
    min_witnesses: u128,
}

#[derive(Subcommand, Debug)]
enum AbsorbCmd {
    /// Number of m-sets absorbing S.
    Count {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_abc)]
        abc: KSpec,
        #[arg(long = "S", value_delimiter = ',', required = true)]
        s: Vec<usize>,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random family of disjoint absorbing sets.
    Family {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_abc)]
        abc: KSpec,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = parse_rational)]
        p: Rational,
        #[arg(long, default_value_t = 1)]
        i0: usize,
    },
}

#[derive(Args, Debug)]
struct ProbeArgs {
    #[arg(long, value_parser = parse_abc)]
    abc: KSpec,
    #[arg(long)]
    n: usize,
    /// Target minimum-degree fractions.
    #[arg(long, value_delimiter = ',', required = true)]
    grid: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Constructions to replay as extra rows (s1, s2, d1, d2, d3, t).
    #[arg(long, value_delimiter = ',')]
    replay: Vec<String>,
}

fn parse_abc(s: &str) -> Result<KSpec, String> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad class size {t:?}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c] = parts[..] else {
        return Err("expected three sizes a,b,c".into());
    };
    classify(a, b, c).map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

/// What a subcommand produced.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: EXIT_OK }
    }

    fn verdict(text: String, json: Value, positive: bool) -> Self {
        Outcome {
            text,
            json,
            code: if positive { EXIT_OK } else { EXIT_NEGATIVE },
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_guard() => EXIT_GUARD,
        Error::NotApplicable(_) | Error::InfeasibleSize(_) => EXIT_NEGATIVE,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let limits = Limits::from_env();
    match dispatch(cli.command, &limits) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            out.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                println!("{}", json!({"error": e.to_string(), "exit_code": code}));
            }
            eprintln!("error: {e}");
            code
        }
    }
}

fn dispatch(cmd: Command, limits: &Limits) -> hypertile::Result<Outcome> {
    match cmd {
        Command::Threshold(a) => Ok(threshold(&a.abc)),
        Command::Classify(a) => Ok(classify_cmd(&a.abc)),
        Command::Construct(a) => construct(&a, limits),
        Command::Tile(a) => tile(&a, limits),
        Command::Fractional(FractionalCmd::Verify { file, weights, abc }) => fractional_verify(&file, &weights, &abc),
        Command::Fractional(FractionalCmd::Gadget {
            abc,
            family,
            case_label,
            out,
        }) => fractional_gadget(&abc, &family, &case_label, out.as_deref()),
        Command::Lattice(a) => lattice(&a, limits),
        Command::Reduce(a) => reduce(&a),
        Command::Reach(a) => reach(&a, limits),
        Command::Absorb(AbsorbCmd::Count {
            file,
            abc,
            s,
            m,
            samples,
            seed,
        }) => absorb_count(&file, &abc, &s, m, samples, seed, limits),
        Command::Absorb(AbsorbCmd::Family { file, abc, seed, p, i0 }) => absorb_family(&file, &abc, seed, &p, i0, limits),
        Command::Probe(a) => probe_cmd(&a, limits),
    }
}

fn approx(r: &Rational) -> String {
    format!("{} ≈ {:.5}", rational::to_string(r), rational::to_f64(r))
}

fn threshold(spec: &KSpec) -> Outcome {
    let t = threshold_coefficient(spec);
    let cd = codegree_coefficient(spec);
    let names: Vec<&str> = t.dominant.iter().map(Barrier::name).collect();
    let mut text = String::new();
    let _ = writeln!(text, "{spec}: {}", spec.type_class);
    let _ = writeln!(text, "f = {} ≈ {:.5}", t.f, t.f.to_f64());
    let _ = writeln!(text, "space barrier I = {}", approx(&t.space1));
    let _ = writeln!(text, "space barrier II = {}", approx(&t.space2));
    let _ = writeln!(text, "threshold = {} ≈ {:.5}", t.coefficient, t.coefficient.to_f64());
    let _ = writeln!(text, "dominant: {}", names.join(", "));
    let _ = writeln!(text, "codegree threshold = {}", approx(&cd));
    let value = json!({
        "spec": json::spec(spec),
        "f": json::exact(&t.f),
        "space1": json::rat(&t.space1),
        "space2": json::rat(&t.space2),
        "coefficient": json::exact(&t.coefficient),
        "dominant": t.dominant.iter().map(Barrier::code).collect::<Vec<_>>(),
        "codegree": json::rat(&cd),
    });
    Outcome::ok(text, value)
}

fn classify_cmd(spec: &KSpec) -> Outcome {
    let fact = check_gcd_fact(spec.a, spec.b, spec.c);
    let text = format!(
        "{spec}: {} (k = {}, gcd(a,b,c) = {}, gcd(b-a,c-b) = {})\ngcd(a+b,a+c,b+c) = 1: {fact}\n",
        spec.type_class, spec.k, spec.g, spec.d
    );
    let mut value = json::spec(spec);
    value["pair_sums_coprime"] = json!(fact);
    Outcome::ok(text, value)
}

fn cert_path(out: &Path) -> PathBuf {
    out.with_extension("cert")
}

fn construct(a: &ConstructArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    if a.kind == "gen" {
        return construct_general(a, limits);
    }
    let kind = Barrier::from_code(&a.kind)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown construction {:?}", a.kind)))?;
    let spec = a
        .abc
        .ok_or_else(|| Error::InvalidArgument("--abc is required for this construction".into()))?;
    let inst = generate(kind, &spec, a.n, limits)?;
    let cert = check_certificate(&inst, limits)?;
    let observed = inst.graph.min_vertex_degree();
    let sizes = inst.part_sizes();
    let mut report = String::new();
    let _ = writeln!(report, "kind: {} ({})", kind.code(), kind.name());
    let _ = writeln!(report, "spec: {spec}");
    let _ = writeln!(report, "n: {}", a.n);
    let _ = writeln!(report, "edges: {}", inst.graph.edge_count());
    let _ = writeln!(report, "part sizes: {sizes:?}");
    let _ = writeln!(report, "predicted min degree: {}", inst.predicted_min_degree);
    let _ = writeln!(report, "observed min degree: {observed}");
    let _ = writeln!(report, "copies checked: {}{}", cert.copies_checked, if cert.sampled { " (sampled)" } else { "" });
    let _ = writeln!(report, "arithmetic obstruction: {}", cert.arithmetic);
    let _ = writeln!(report, "detail: {}", cert.detail);
    let _ = writeln!(report, "certificate: {}", if cert.holds { "holds" } else { "FAILS" });
    let mut files = Vec::new();
    if let Some(out) = &a.out {
        write_h3g(out, &inst.graph)?;
        std::fs::write(out.with_extension("part"), format_part(&inst.parts))?;
        std::fs::write(cert_path(out), &report)?;
        files = vec![out.clone(), out.with_extension("part"), cert_path(out)];
    }
    let value = json!({
        "kind": kind.code(),
        "spec": json::spec(&spec),
        "n": a.n,
        "edges": inst.graph.edge_count(),
        "part_sizes": sizes,
        "predicted_min_degree": inst.predicted_min_degree.to_string(),
        "observed_min_degree": observed,
        "certificate": {
            "holds": cert.holds,
            "arithmetic": cert.arithmetic,
            "sampled": cert.sampled,
            "copies_checked": cert.copies_checked.to_string(),
            "counterexample": cert.counterexample.as_ref().map(json::copy),
            "detail": cert.detail,
        },
        "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    Ok(Outcome::verdict(report, value, cert.holds))
}

fn construct_general(a: &ConstructArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    let (Some(r), Some(i)) = (a.r, a.i) else {
        return Err(Error::InvalidArgument("gen needs --r, --i and --sizes".into()));
    };
    let g = generate_general(r, i, &a.sizes, a.n, limits)?;
    let mut degrees = Vec::new();
    for d in 1..r {
        degrees.push(g.min_degree(d)?);
    }
    let mut report = String::new();
    let _ = writeln!(report, "kind: gen ({r}-uniform space barrier, i = {i})");
    let _ = writeln!(report, "sizes: {:?}", g.sizes);
    let _ = writeln!(report, "n: {}, |A| = {}", g.n, g.a_size);
    let _ = writeln!(report, "edges: {}", g.edges.len());
    for (d, deg) in degrees.iter().enumerate() {
        let _ = writeln!(report, "min {}-degree: {deg}", d + 1);
    }
    let holds = g.edges_respect_rule() && g.arithmetic_holds();
    let _ = writeln!(report, "certificate: {}", if holds { "holds" } else { "FAILS" });
    let mut files = Vec::new();
    if let Some(out) = &a.out {
        if r == 3 {
            let h = Hypergraph3::from_edges(g.n, g.edges.iter().map(|e| [e[0], e[1], e[2]]))?;
            write_h3g(out, &h)?;
            files.push(out.clone());
        }
        std::fs::write(cert_path(out), &report)?;
        files.push(cert_path(out));
    }
    let value = json!({
        "kind": "gen",
        "r": r,
        "i": i,
        "sizes": g.sizes,
        "n": g.n,
        "a_size": g.a_size,
        "edges": g.edges.len(),
        "min_degrees": degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "certificate": {"holds": holds, "arithmetic": g.arithmetic_holds()},
        "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    Ok(Outcome::verdict(report, value, holds))
}

fn tiling_text(t: &hypertile::Tiling) -> String {
    let mut s = String::new();
    for c in t.copies() {
        let _ = writeln!(s, "  {:?} {:?} {:?}", c.class(0), c.class(1), c.class(2));
    }
    s
}

fn tile(a: &TileArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    let h = read_h3g(&a.file)?;
    let spec = a.abc;
    if a.greedy {
        let p = read_part(a.parts.as_ref().expect("required by clap"), h.n())?;
        if p.r() < 3 {
            return Err(Error::InvalidArgument("greedy needs parts 1, 2 and 3".into()));
        }
        let mut sets = [p.part(1).to_vec(), p.part(2).to_vec(), p.part(3).to_vec()];
        sets.sort_by_key(Vec::len);
        let eps = a.eps.expect("required by clap");
        let g = greedy_regular_tiling(&h, &sets[0], &sets[1], &sets[2], &spec, &eps)?;
        let text = format!(
            "greedy: {} copies, {} vertices left, stopped: {}, invariant kept: {}\n{}",
            g.tiling.len(),
            g.leftover(),
            json::stop(&g.stop),
            g.invariant_kept(),
            tiling_text(&g.tiling)
        );
        let value = json!({
            "mode": "greedy",
            "copies": g.tiling.len(),
            "covered": g.tiling.covered_count(),
            "leftover": g.leftover(),
            "residual": g.residual,
            "stop": json::stop(&g.stop),
            "steps": g.steps.len(),
            "invariant_kept": g.invariant_kept(),
            "tiling": json::tiling(&g.tiling),
        });
        return Ok(Outcome::ok(text, value));
    }
    if a.perfect {
        let found = has_perfect_tiling(&h, &spec, limits)?;
        let text = match &found {
            Some(t) => format!("perfect tiling with {} copies\n{}", t.len(), tiling_text(t)),
            None => "no perfect tiling\n".to_string(),
        };
        let value = json!({
            "mode": "perfect",
            "perfect": found.is_some(),
            "tiling": found.as_ref().map(json::tiling),
        });
        return Ok(Outcome::verdict(text, value, found.is_some()));
    }
    let t = max_tiling(&h, &spec, limits)?;
    let text = format!(
        "maximum tiling: {} copies covering {} of {} vertices\n{}",
        t.len(),
        t.covered_count(),
        h.n(),
        tiling_text(&t)
    );
    let value = json!({
        "mode": "max",
        "copies": t.len(),
        "covered": t.covered_count(),
        "n": h.n(),
        "tiling": json::tiling(&t),
    });
    Ok(Outcome::ok(text, value))
}

fn fractional_verify(file: &Path, weights: &Path, spec: &KSpec) -> hypertile::Result<Outcome> {
    let h = read_h3g(file)?;
    let ft = parse_fht(&std::fs::read_to_string(weights)?, h)?;
    let v = verify(&ft, spec)?;
    let mut text = String::new();
    let _ = writeln!(text, "valid: {}", v.valid);
    let _ = writeln!(text, "weight: {}", approx(&v.weight));
    if let Some(m) = &v.hmin {
        let _ = writeln!(text, "smallest positive weight: {}", rational::to_string(m));
    }
    if let Some(msg) = &v.violation {
        let _ = writeln!(text, "violation: {msg}");
    }
    let value = json!({
        "valid": v.valid,
        "weight": json::rat(&v.weight),
        "hmin": v.hmin.as_ref().map(json::rat),
        "violation": v.violation,
    });
    Ok(Outcome::verdict(text, value, v.valid))
}

fn fractional_gadget(spec: &KSpec, family: &str, label: &str, out: Option<&Path>) -> hypertile::Result<Outcome> {
    let (a, b, c) = (spec.a as i128, spec.b as i128, spec.c as i128);
    let k = spec.k as i128;
    let (g, bound) = match family {
        "l1" => {
            let case = L1Case::from_label(label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown L1 case {label:?}")))?;
            (gadget_l1(spec, case)?, q(k, 1) + q(1, a * b * c))
        }
        "l2" => {
            let case = L2Case::from_label(label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown L2 case {label:?}")))?;
            (gadget_l2(spec, case)?, q(2 * k, 1) + q(1, a * b * c * c))
        }
        _ => return Err(Error::InvalidArgument(format!("family must be l1 or l2, got {family:?}"))),
    };
    let v = verify(&g.tiling, spec)?;
    let floor = q(1, b * c * c);
    let ok = v.valid && g.weight >= bound && g.hmin.is_some_and(|m| m >= floor);
    let mut text = String::new();
    let _ = writeln!(text, "{spec} family {family} case {}", g.case_label);
    let _ = writeln!(text, "host: {} vertices, {} edges", g.graph.n(), g.graph.edge_count());
    let _ = writeln!(text, "family triples: {} (needs {})", g.family_triples, g.family_threshold);
    let _ = writeln!(text, "valid: {}", v.valid);
    let _ = writeln!(text, "weight: {} (bound {})", approx(&g.weight), rational::to_string(&bound));
    if let Some(m) = &g.hmin {
        let _ = writeln!(text, "smallest positive weight: {} (bound {})", rational::to_string(m), rational::to_string(&floor));
    }
    let mut files = Vec::new();
    if let Some(prefix) = out {
        let hp = prefix.with_extension("h3g");
        let wp = prefix.with_extension("fht");
        write_h3g(&hp, &g.graph)?;
        std::fs::write(&wp, format_fht(&g.tiling))?;
        files = vec![hp, wp];
    }
    let value = json!({
        "spec": json::spec(spec),
        "family": family,
        "case": g.case_label,
        "n": g.graph.n(),
        "edges": g.graph.edge_count(),
        "outside": g.outside,
        "family_triples": g.family_triples,
        "family_threshold": g.family_threshold,
        "valid": v.valid,
        "weight": json::rat(&g.weight),
        "weight_bound": json::rat(&bound),
        "hmin": g.hmin.as_ref().map(json::rat),
        "hmin_bound": json::rat(&floor),
        "bounds_hold": ok,
        "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    Ok(Outcome::verdict(text, value, ok))
}

fn lattice(a: &LatticeArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    let h = read_h3g(&a.file)?;
    let p = read_part(&a.parts, h.n())?;
    let t = match (&a.mu, a.min_count) {
        (Some(mu), _) => Threshold::Mu(*mu),
        (None, Some(m)) => Threshold::MinCount(m),
        (None, None) => unreachable!("clap requires one threshold"),
    };
    let edges = robust_edge_vectors(&h, &p, &t)?;
    let rep = transferral_check(&h, &p, &a.abc, &t, limits)?;
    let mut text = String::new();
    let _ = writeln!(text, "robust edge vectors (threshold {}):", edges.threshold);
    for (v, c) in edges.robust() {
        let _ = writeln!(text, "  {v}: {c}");
    }
    let _ = writeln!(text, "robust {} vectors (threshold {}):", a.abc, rep.census.threshold);
    for (v, c) in rep.census.robust() {
        let _ = writeln!(text, "  {v}: {c}");
    }
    let gens: Vec<String> = rep.basis.generators.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "lattice generators: {}", gens.join(" "));
    let missing: Vec<String> = rep.missing.iter().map(|(j, l)| format!("u{j}-u{l}")).collect();
    if rep.pass {
        let _ = writeln!(text, "transferral: pass");
    } else {
        let _ = writeln!(text, "transferral: fail (missing {})", missing.join(", "));
    }
    let census = |c: &hypertile::lattice::VectorCensus| {
        json!({
            "threshold": c.threshold.to_string(),
            "excluded": c.excluded.to_string(),
            "counts": c.counts.iter().map(|(v, n)| json!({"vector": v.0, "count": n.to_string()})).collect::<Vec<_>>(),
            "robust": c.robust_vectors().iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        })
    };
    let value = json!({
        "r": p.r(),
        "edge_census": census(&edges),
        "copy_census": census(&rep.census),
        "generators": rep.basis.generators.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        "transferral": rep.pass,
        "missing": rep.missing.iter().map(|&(j, l)| [j, l]).collect::<Vec<_>>(),
    });
    Ok(Outcome::verdict(text, value, rep.pass))
}

fn reduce(a: &ReduceArgs) -> hypertile::Result<Outcome> {
    let h = read_h3g(&a.file)?;
    let red = epsilon_reduction(&h, &a.eps)?;
    let g = red.guarantees_hold(&h, &a.eps);
    if let Some(out) = &a.out {
        write_h3g(out, &red.graph)?;
    }
    let text = format!(
        "weak edges: {}\nremoved vertices ({}): {:?}\nedges kept: {} of {}\nguarantees (removed, degree loss, shadow codegree): {:?}\n",
        red.weak_edges,
        red.removed.len(),
        red.removed,
        red.graph.edge_count(),
        h.edge_count(),
        g
    );
    let value = json!({
        "n": h.n(),
        "eps": json::rat(&a.eps),
        "weak_edges": red.weak_edges,
        "removed": red.removed,
        "edges_before": h.edge_count(),
        "edges_after": red.graph.edge_count(),
        "guarantees": {"removed": g[0], "degree": g[1], "shadow": g[2]},
    });
    Ok(Outcome::verdict(text, value, g.iter().all(|&x| x)))
}

fn reach(a: &ReachArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    let h = read_h3g(&a.file)?;
    if a.partition {
        let rp = reachability_partition(&h, &a.abc, a.min_witnesses, limits)?;
        let text = format!("{}links: {}\n", format_part(&rp.partition), rp.links.len());
        let value = json!({
            "parts": rp.partition.parts(),
            "links": rp.links.iter().map(|&(u, v, w)| json!([u, v, w.to_string()])).collect::<Vec<_>>(),
        });
        return Ok(Outcome::ok(text, value));
    }
    let (u, v) = (a.u.expect("required by clap"), a.v.expect("required by clap"));
    let rep = match a.samples {
        Some(s) => reachability_estimate(&h, u, v, &a.abc, a.i, s, a.seed, limits)?,
        None => reachability_count(&h, u, v, &a.abc, a.i, limits)?,
    };
    let text = format!(
        "{} witnesses of size {} for ({u}, {v}) out of {} candidates{}\nnormalized: {}\n",
        rep.witness_count,
        a.i * a.abc.k_usize() - 1,
        rep.total,
        if rep.sampled { format!(" (estimated from {} samples)", rep.samples) } else { String::new() },
        approx(&rep.normalized)
    );
    let value = json!({
        "u": u,
        "v": v,
        "i": a.i,
        "witnesses": rep.witness_count.to_string(),
        "total": rep.total.to_string(),
        "normalized": json::rat(&rep.normalized),
        "sampled": rep.sampled,
        "samples": rep.samples,
    });
    Ok(Outcome::ok(text, value))
}

fn absorb_count(
    file: &Path,
    spec: &KSpec,
    s: &[usize],
    m: usize,
    samples: Option<u64>,
    seed: u64,
    limits: &Limits,
) -> hypertile::Result<Outcome> {
    let h = read_h3g(file)?;
    let (count, rate, sampled) = match samples {
        Some(n) => {
            let (rate, est) = estimate_absorbing_sets(&h, s, m, spec, n, seed, limits)?;
            (est, Some(rate), true)
        }
        None => (count_absorbing_sets(&h, s, m, spec, limits)?, None, false),
    };
    let text = format!(
        "{}{count} absorbing {m}-sets for {s:?}\n",
        if sampled { "about " } else { "" }
    );
    let value = json!({
        "S": s,
        "m": m,
        "count": count.to_string(),
        "sampled": sampled,
        "rate": rate.as_ref().map(json::rat),
    });
    Ok(Outcome::ok(text, value))
}

fn absorb_family(file: &Path, spec: &KSpec, seed: u64, p: &Rational, i0: usize, limits: &Limits) -> hypertile::Result<Outcome> {
    let h = read_h3g(file)?;
    let fam = build_absorbing_family(&h, spec, i0, seed, p, None, limits)?;
    let mut text = format!(
        "{} disjoint absorbing {}-sets ({} sampled), disjoint: {}\n",
        fam.sets.len(),
        fam.m,
        fam.sampled,
        fam.is_disjoint()
    );
    for (a, s) in &fam.sets {
        let _ = writeln!(text, "  {a:?} absorbs {s:?}");
    }
    let value = json!({
        "m": fam.m,
        "sampled": fam.sampled,
        "disjoint": fam.is_disjoint(),
        "sets": fam.sets.iter().map(|(a, s)| json!({"set": a, "absorbs": s})).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, value))
}

fn probe_cmd(a: &ProbeArgs, limits: &Limits) -> hypertile::Result<Outcome> {
    let replay = a
        .replay
        .iter()
        .map(|c| Barrier::from_code(c).ok_or_else(|| Error::InvalidArgument(format!("unknown construction {c:?}"))))
        .collect::<hypertile::Result<Vec<_>>>()?;
    let cfg = ProbeConfig {
        spec: a.abc,
        n: a.n,
        density_grid: a.grid.clone(),
        trials: a.trials,
        seed: a.seed,
        replay,
    };
    let rows = probe(&cfg, limits)?;
    let mut text = format!("{} n={} trials={} seed={}\n", a.abc, a.n, a.trials, a.seed);
    let _ = writeln!(text, "{:>10} {:>6} {:>12} {:>10} {:>8}", "fraction", "source", "mean deg", "mean frac", "tileable");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>10.4} {:>6} {:>12.2} {:>10.4} {:>8.3}",
            r.fraction,
            r.barrier.map_or("random", |b| b.code()),
            rational::to_f64(&r.mean_min_degree),
            r.mean_fraction,
            r.share()
        );
    }
    let value = json!({
        "spec": json::spec(&a.abc),
        "n": a.n,
        "trials": a.trials,
        "seed": a.seed,
        "rows": rows.iter().map(|r| json!({
            "fraction": r.fraction,
            "source": r.barrier.map_or("random", |b| b.code()),
            "trials": r.trials,
            "mean_min_degree": json::rat(&r.mean_min_degree),
            "mean_fraction": r.mean_fraction,
            "tileable": r.tileable,
            "share": r.share(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, value))
}
