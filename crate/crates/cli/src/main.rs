//! Command-line front end: classify curves, print Betti tables, expand local
//! monodromy polynomials, analyze line arrangements, and verify the shipped
//! corpus of reference curves.
//!
//! Exit codes: 0 success, 1 computation error or corpus mismatch, 2 usage.

use clap::{Args, Parser, Subcommand};
use nearfree::arrangement::{LineArrangement, nearly_free_factorization_check};
use nearfree::betti::{BettiTable, ResolutionShape, betti_table, resolution_shape};
use nearfree::catalog;
use nearfree::jacobian::classify;
use nearfree::matrix::DEFAULT_QQ_MAX_COLS;
use nearfree::monodromy::{PuiseuxSequence, has_eigenvalue_of_order, le_delta, cuspidal_freeness_hypothesis};
use nearfree::poly::Curve;
use nearfree::report::{CorpusRecord, Report, ReportOptions, build_report, corpus_records, verify_all};
use nearfree::{Error, FieldMode, GuardConfig};
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nearfree", version, about = "Exact invariants of reduced plane curves", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Field for the linear algebra: "qq" (exact, with a two-prime fast path
    /// for large matrices) or "fp" (one prime, probabilistic)
    #[arg(long, default_value = "qq")]
    field: String,
    /// Prime modulus for --field=fp (sampled from the seed when omitted)
    #[arg(long)]
    prime: Option<u64>,
    /// Seed for every randomized step (prime sampling, reducedness lines,
    /// chart changes); recorded in the report
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reject curves of degree above this bound
    #[arg(long, default_value_t = 16)]
    max_degree: usize,
    /// Column threshold where exact elimination hands over to modular ranks
    #[arg(long, default_value_t = DEFAULT_QQ_MAX_COLS)]
    qq_threshold: usize,
}

impl CommonOpts {
    fn guard(&self) -> Result<GuardConfig, Error> {
        let mode = match self.field.as_str() {
            "qq" => FieldMode::Auto,
            "fp" => {
                let p = match self.prime {
                    Some(p) => {
                        if !nearfree::field::is_prime_u64(p) || p <= (1 << 30) {
                            return Err(Error::Validation(format!(
                                "--prime {p} must be a prime above 2^30"
                            )));
                        }
                        p
                    }
                    None => {
                        let mut rng = nearfree::field::rng_for(self.seed, &[0x636c69]);
                        nearfree::field::sample_prime(&mut rng)
                    }
                };
                FieldMode::Prime(p)
            }
            other => {
                return Err(Error::Validation(format!("unknown field '{other}' (use qq or fp)")));
            }
        };
        Ok(GuardConfig { mode, qq_max_cols: self.qq_threshold, seed: self.seed })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a curve: Hilbert function, Jacobian module, exponents
    Classify {
        /// Defining polynomial, e.g. "x^6 - y^5*z"
        poly: String,
        /// Also compute the total Milnor number (Groebner chart computation)
        #[arg(long)]
        with_mu: bool,
        /// Skip the Betti table (faster for large degrees)
        #[arg(long)]
        no_betti: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Graded Betti numbers of the Milnor algebra and the resolution shape
    Betti {
        poly: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Characteristic polynomial of local cusp monodromy from Puiseux pairs
    Monodromy {
        /// Puiseux pairs as "m1,n1;m2,n2"
        #[arg(long)]
        pairs: String,
        /// Also report whether some eigenvalue has exactly this order
        #[arg(long)]
        order: Option<u64>,
        /// Check the even-degree / eigenvalue-order hypothesis for this degree
        #[arg(long)]
        check_degree: Option<u64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Analyze a line arrangement (one linear form per line of the file)
    Arrangement {
        /// Path to the forms file, or "-" for stdin
        file: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Operations on the shipped corpus of reference curves
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List entry names
    List,
    /// Write the corpus serialization as JSON
    Export {
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Recompute every expected value; nonzero exit on any mismatch
    Verify {
        /// Verify a corpus file instead of the builtin catalog
        #[arg(long)]
        file: Option<String>,
        /// Only entries whose name contains this substring
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Syntax(_) => "syntax",
        Error::NotHomogeneous(..) => "not_homogeneous",
        Error::SingularMatrix => "singular_matrix",
        Error::DegenerateLine => "degenerate_line",
        Error::PrimeDisagreement => "prime_disagreement",
        Error::Validation(_) => "validation",
        Error::NoPlateau(_) => "no_plateau",
        Error::NegativeDimension { .. } => "negative_dimension",
        Error::CrossCheckFailure { .. } => "cross_check_failure",
        Error::DegreeMismatch => "degree_mismatch",
        Error::NotFinite => "not_finite",
        Error::RobustnessFailure { .. } => "robustness_failure",
        Error::ChartFailure(_) => "chart_failure",
        Error::NegativeMultiplicity { .. } => "negative_multiplicity",
        Error::UnitRootInMonodromy(_) => "unit_root_in_monodromy",
        Error::InconsistentTable(_) => "inconsistent_table",
        Error::ExponentMismatch(_) => "exponent_mismatch",
        Error::NotNearlyFree => "not_nearly_free",
        Error::UnknownName(_) => "unknown_name",
        Error::BadIdeal(_) => "bad_ideal",
        Error::DegreeBound(..) => "degree_bound",
    }
}

fn fail(e: Error, json: bool) -> ExitCode {
    if json {
        let doc = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        eprintln!("error: {e}");
    }
    ExitCode::from(1)
}

fn print_report(r: &Report) {
    println!("curve: {}", r.input);
    println!("degree: {}", r.degree);
    let c = &r.classification;
    match c.kind.as_str() {
        "smooth" => println!("classification: smooth (tau = 0)"),
        "free" => println!(
            "classification: free, exponents ({}, {})",
            c.d1.unwrap(),
            c.d2.unwrap()
        ),
        "almost_free" | "nearly_free" => println!(
            "classification: {}, exponents ({}, {}), b = {}",
            if c.kind == "almost_free" { "almost free" } else { "nearly free" },
            c.d1.unwrap(),
            c.d2.unwrap(),
            c.b.unwrap()
        ),
        _ => {
            let (k, v) = c.witness.unwrap();
            println!("classification: neither free nor nearly free (dim N(f)_{k} = {v})");
        }
    }
    print!("tau: {}", r.tau);
    if let Some(mu) = r.mu {
        print!("   mu: {mu}   defect: {}", r.defect.unwrap());
    }
    if let Some(mdr) = r.mdr {
        print!("   mdr: {mdr}   ct: {}", r.ct.unwrap());
    }
    println!("   st: {}", r.st);
    println!(
        "hilbert: [{}]",
        r.hilbert.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    println!(
        "n dims:  [{}]",
        r.n_dims.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    if let Some(betti) = &r.betti {
        println!("betti:   {}", format_betti(betti));
        println!("resolution: {}", format_resolution(betti));
    }
    let ch = &r.checks;
    println!(
        "checks: euler {}, plateau {}{}, symmetry {}, unimodality {}, ct-identity {}, tau-identity {}{}",
        ok(ch.euler),
        ok(ch.plateau),
        if ch.plateau_marginal { " (marginal)" } else { "" },
        ok(ch.n_symmetry),
        ok(ch.n_unimodal_block),
        ok(ch.ct_identity),
        ok(ch.tau_identity),
        match ch.shape_consistent {
            Some(s) => format!(", shape {}", ok(s)),
            None => String::new(),
        }
    );
    for note in &r.notes {
        println!("note: {note}");
    }
    print!("provenance: seed {}, field {}", r.provenance.seed, r.provenance.field);
    if let Some(p) = r.provenance.prime {
        print!(", prime {p}");
    }
    println!();
}

fn ok(b: bool) -> &'static str {
    if b { "ok" } else { "FAIL" }
}

fn format_betti(triples: &[(usize, usize, usize)]) -> String {
    triples
        .iter()
        .map(|(i, j, v)| format!("b[{i},{j}]={v}"))
        .collect::<Vec<_>>()
        .join("  ")
}

/// Render "0 -> F3 -> F2 -> F1 -> S" with F_i a sum of twisted modules.
fn format_resolution(triples: &[(usize, usize, usize)]) -> String {
    let module = |i: usize| -> String {
        let parts: Vec<String> = triples
            .iter()
            .filter(|(ii, _, _)| *ii == i)
            .map(|(_, j, v)| if *v == 1 { format!("S(-{j})") } else { format!("S(-{j})^{v}") })
            .collect();
        if parts.is_empty() { "0".into() } else { parts.join(" + ") }
    };
    format!("0 -> {} -> {} -> {} -> S", module(3), module(2), module(1))
}

fn shape_name(s: &ResolutionShape) -> String {
    match s {
        ResolutionShape::Free { d1, d2 } => format!("free shape, exponents ({d1}, {d2})"),
        ResolutionShape::NearlyFree { d1, d2, d3, b } => {
            format!("nearly free shape, generator degrees ({d1}, {d2}, {d3}), b = {b}")
        }
        ResolutionShape::Other => "outside the free and nearly free shapes".into(),
    }
}

fn shape_json(s: &ResolutionShape) -> serde_json::Value {
    match s {
        ResolutionShape::Free { d1, d2 } => json!({ "kind": "free", "d1": d1, "d2": d2 }),
        ResolutionShape::NearlyFree { d1, d2, d3, b } => {
            json!({ "kind": "nearly_free", "d1": d1, "d2": d2, "d3": d3, "b": b })
        }
        ResolutionShape::Other => json!({ "kind": "other" }),
    }
}

fn cmd_classify(poly: &str, with_mu: bool, no_betti: bool, common: &CommonOpts) -> Result<(), Error> {
    let opts = ReportOptions {
        cfg: common.guard()?,
        with_betti: !no_betti,
        with_mu,
        max_degree: common.max_degree,
    };
    let report = build_report(poly, &opts)?;
    if common.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print_report(&report);
    }
    Ok(())
}

fn cmd_betti(poly: &str, common: &CommonOpts) -> Result<(), Error> {
    let f = nearfree::parse_poly(poly)?;
    if f.degree() > common.max_degree {
        return Err(Error::DegreeBound(f.degree(), common.max_degree));
    }
    let cfg = common.guard()?;
    let curve = Curve::new(f, cfg.seed)?;
    let table: BettiTable = betti_table(&curve, &cfg)?;
    let shape = resolution_shape(&table, curve.degree())?;
    if common.json {
        let doc = json!({
            "input": poly,
            "degree": curve.degree(),
            "betti": table.as_triples(),
            "shape": shape_json(&shape),
            "provenance": { "seed": cfg.seed },
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("curve: {poly}");
        println!("betti: {}", format_betti(&table.as_triples()));
        println!("resolution: {}", format_resolution(&table.as_triples()));
        println!("shape: {}", shape_name(&shape));
    }
    Ok(())
}

fn cmd_monodromy(
    pairs: &str,
    order: Option<u64>,
    check_degree: Option<u64>,
    common: &CommonOpts,
) -> Result<(), Error> {
    let ps = PuiseuxSequence::parse(pairs)?;
    let delta = le_delta(&ps)?;
    let convention_sensitive = ps.pairs().len() >= 2;
    let expanded = delta.expand();
    if common.json {
        let doc = json!({
            "pairs": ps.pairs(),
            "factors": delta.factors().collect::<Vec<_>>(),
            "degree": delta.degree(),
            "coefficients": expanded.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "conventionSensitive": convention_sensitive,
            "orderQuery": order.map(|d| json!({
                "order": d,
                "present": has_eigenvalue_of_order(&delta, d),
            })),
            "hypothesis": check_degree.map(|d| {
                let verdict = cuspidal_freeness_hypothesis(d, std::slice::from_ref(&ps)).unwrap();
                json!({ "degree": d, "verdict": format!("{verdict:?}") })
            }),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("Delta(t) = {delta}");
        println!("degree: {}", delta.degree());
        println!(
            "coefficients: [{}]",
            expanded.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        );
        if convention_sensitive {
            println!(
                "note: more than one Puiseux pair; the pair order convention is taken as written (convention-sensitive)"
            );
        }
        if let Some(d) = order {
            println!(
                "eigenvalue of order {d}: {}",
                if has_eigenvalue_of_order(&delta, d) { "present" } else { "absent" }
            );
        }
        if let Some(d) = check_degree {
            let verdict = cuspidal_freeness_hypothesis(d, std::slice::from_ref(&ps))?;
            println!("degree-{d} hypothesis: {verdict:?}");
        }
    }
    Ok(())
}

fn cmd_arrangement(file: &str, common: &CommonOpts) -> Result<(), Error> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Syntax(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Syntax(format!("{file}: {e}")))?
    };
    let arr = LineArrangement::parse(&text)?;
    let cfg = common.guard()?;
    let curve = Curve::new(arr.product(), cfg.seed)?;
    let cls = classify(&curve, &cfg)?;
    let chi = arr.characteristic_polynomial();
    let factorization = match nearly_free_factorization_check(&arr, &cls) {
        Ok(v) => Some(v),
        Err(Error::NotNearlyFree) => None,
        Err(e) => return Err(e),
    };
    let points = arr.intersection_points();
    if common.json {
        let doc = json!({
            "lines": arr.forms().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "degree": arr.line_count(),
            "points": points.iter().map(|(p, m)| json!({
                "point": p.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "multiplicity": m,
            })).collect::<Vec<_>>(),
            "muTau": arr.mu_tau(),
            "charPoly": { "b1": chi.b1, "b2": chi.b2 },
            "classification": format!("{:?}", cls.kind),
            "factorization": factorization,
            "provenance": { "seed": cfg.seed },
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{} lines, {} intersection points", arr.line_count(), points.len());
        let mut mults: Vec<usize> = points.iter().map(|(_, m)| *m).collect();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        println!("point multiplicities: {mults:?}");
        println!("mu = tau = {}", arr.mu_tau());
        println!("chi(t) = {chi}");
        println!("classification: {:?}", cls.kind);
        match factorization {
            Some(v) => println!(
                "nearly-free factorization chi(t) - 1 = (t - d1)(t - (d2 - 1)): {}",
                if v { "holds" } else { "FAILS" }
            ),
            None => println!("nearly-free factorization: not applicable (not nearly free)"),
        }
    }
    Ok(())
}

fn cmd_corpus_verify(
    file: Option<&str>,
    filter: Option<&str>,
    common: &CommonOpts,
) -> Result<bool, Error> {
    let entries = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Syntax(format!("{path}: {e}")))?;
            let records: Vec<CorpusRecord> =
                serde_json::from_str(&text).map_err(|e| Error::Syntax(e.to_string()))?;
            records.iter().map(CorpusRecord::to_entry).collect::<Result<Vec<_>, _>>()?
        }
        None => catalog::all_entries(),
    };
    let entries: Vec<_> = match filter {
        Some(f) => entries.into_iter().filter(|e| e.name.contains(f)).collect(),
        None => entries,
    };
    if entries.is_empty() {
        return Err(Error::UnknownName("no corpus entries match the filter".into()));
    }
    let cfg = common.guard()?;
    let outcomes = verify_all(&entries, &cfg);
    let all_passed = outcomes.iter().all(|o| o.passed);
    if common.json {
        let doc = json!({
            "entries": outcomes,
            "passed": all_passed,
            "provenance": { "seed": cfg.seed },
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for o in &outcomes {
            println!("{} {} ({} checks)", if o.passed { "pass" } else { "FAIL" }, o.name, o.checked);
            for f in &o.failures {
                println!("      {f}");
            }
        }
        let passed = outcomes.iter().filter(|o| o.passed).count();
        println!("{passed}/{} entries verified", outcomes.len());
    }
    Ok(all_passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<bool, (Error, bool)> = match &cli.command {
        Command::Classify { poly, with_mu, no_betti, common } => {
            cmd_classify(poly, *with_mu, *no_betti, common).map(|()| true).map_err(|e| (e, common.json))
        }
        Command::Betti { poly, common } => {
            cmd_betti(poly, common).map(|()| true).map_err(|e| (e, common.json))
        }
        Command::Monodromy { pairs, order, check_degree, common } => {
            cmd_monodromy(pairs, *order, *check_degree, common)
                .map(|()| true)
                .map_err(|e| (e, common.json))
        }
        Command::Arrangement { file, common } => {
            cmd_arrangement(file, common).map(|()| true).map_err(|e| (e, common.json))
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in catalog::list() {
                    println!("{name}");
                }
                Ok(true)
            }
            CorpusAction::Export { output } => {
                let records = corpus_records();
                let text = serde_json::to_string_pretty(&records).unwrap();
                match output {
                    Some(path) => match std::fs::write(path, text) {
                        Ok(()) => Ok(true),
                        Err(e) => Err((Error::Syntax(format!("{path}: {e}")), false)),
                    },
                    None => {
                        println!("{text}");
                        Ok(true)
                    }
                }
            }
            CorpusAction::Verify { file, filter, common } => {
                cmd_corpus_verify(file.as_deref(), filter.as_deref(), common)
                    .map_err(|e| (e, common.json))
            }
        },
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err((e, json)) => fail(e, json),
    }
}
