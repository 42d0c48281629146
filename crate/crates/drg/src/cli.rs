//! Command-line surface: construction, spectra, local checks, feasibility
//! filtering, the scans, and theorem verification as batch commands.
//!
//! Tool errors and negative verdicts are distinct: `feasible` and
//! `spectrum` exit 0 with an "infeasible" verdict, while `verify` exits
//! nonzero when a check fails so it can gate CI.

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;
use std::path::{Path, PathBuf};

use crate::arrays::{feasibility, spectrum, Assumptions, IntersectionArray};
use crate::classification::{
    local_property, scan_diameter2, scan_diameter3plus, verify_props, verify_theorem_1_1,
    verify_theorem_1_2, with_thread_pool, Outcome, ScanResult, Status, VerificationReport,
};
use crate::constructions::{build, check_drg, FamilySpec};
use crate::exactlinalg::CharPoly;
use crate::graphcore::{format_native, isomorphic, parse_graph6, parse_native, Graph};

pub const EXIT_BAD_ARRAY: i32 = 3;
pub const EXIT_BAD_FAMILY: i32 = 4;
pub const EXIT_FILE: i32 = 5;
pub const EXIT_VERIFY_FAILED: i32 = 6;

const EXIT_CODES: &str = "Exit codes:
  0  success, including negative feasibility and spectrum verdicts
  2  argument parsing error
  3  malformed intersection-array literal
  4  unknown family or invalid construction parameters
  5  file read or graph parse error
  6  verification check failed (verify only; suitable for CI gating)";

#[derive(Parser)]
#[command(
    name = "drg",
    version,
    about = "Exact-arithmetic toolkit for distance-regular graphs",
    after_help = EXIT_CODES
)]
pub struct Cli {
    /// machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Build a graph family and print it in the native text format
    Construct {
        /// family: complete, multipartite, triangular, grid,
        /// grid-complement, paley, johnson, halved-cube, folded-cube,
        /// cycle, icosahedron, petersen, shrikhande, clebsch, schlafli,
        /// gosset, chang, symplectic-cover, doro, conway-smith
        family: String,
        /// integer parameters of the family
        params: Vec<u64>,
        /// complement the constructed graph
        #[arg(long)]
        complement: bool,
        /// write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact eigenvalues and multiplicities of an array or a graph file
    Spectrum {
        /// intersection array literal "{b0,..;c1,..}" or a graph file
        input: String,
    },
    /// Per-vertex local second-largest-eigenvalue check
    LocalCheck {
        file: PathBuf,
        /// threshold as an exact rational, e.g. 1 or 1/2
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Arithmetic feasibility filters for an intersection array
    Feasible {
        array: String,
        /// assume the graph contains an induced quadrangle
        #[arg(long)]
        quadrangle: bool,
    },
    /// Case-analysis scans with surviving and eliminated candidates
    Scan { which: ScanKind },
    /// Executable verification of the classification statements
    Verify { which: VerifyKind },
    /// Graph isomorphism test between two graph files
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ScanKind {
    Diam2,
    Diam3,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum VerifyKind {
    #[value(name = "thm-1-1")]
    Thm11,
    #[value(name = "thm-1-2")]
    Thm12,
    Props,
}

fn parse_family(name: &str, p: &[u64], complement: bool) -> Result<Graph, String> {
    let need = |n: usize| -> Result<(), String> {
        if p.len() == n {
            Ok(())
        } else {
            Err(format!("family {} takes {} parameter(s), got {}", name, n, p.len()))
        }
    };
    let spec = match name {
        "complete" => {
            need(1)?;
            FamilySpec::CompleteK(p[0] as usize)
        }
        "multipartite" => {
            need(2)?;
            FamilySpec::Multipartite(p[0] as usize, p[1] as usize)
        }
        "triangular" => {
            need(1)?;
            FamilySpec::Triangular(p[0] as usize)
        }
        "grid" => {
            need(1)?;
            FamilySpec::Grid(p[0] as usize)
        }
        "grid-complement" => {
            need(1)?;
            FamilySpec::GridComplement(p[0] as usize)
        }
        "paley" => {
            need(1)?;
            FamilySpec::Paley(p[0])
        }
        "johnson" => {
            need(2)?;
            FamilySpec::Johnson(p[0] as usize, p[1] as usize)
        }
        "halved-cube" => {
            need(1)?;
            FamilySpec::HalvedCube(p[0] as usize)
        }
        "folded-cube" => {
            need(1)?;
            FamilySpec::FoldedCube(p[0] as usize)
        }
        "cycle" => {
            need(1)?;
            FamilySpec::Cycle(p[0] as usize)
        }
        "icosahedron" => FamilySpec::Icosahedron,
        "petersen" => FamilySpec::Petersen,
        "shrikhande" => FamilySpec::Shrikhande,
        "clebsch" => {
            need(1)?;
            FamilySpec::Clebsch(p[0] as usize)
        }
        "schlafli" => FamilySpec::Schlafli,
        "gosset" => FamilySpec::Gosset,
        "chang" => {
            need(1)?;
            FamilySpec::Chang(p[0] as usize)
        }
        "symplectic-cover" => {
            need(3)?;
            FamilySpec::SymplecticCover {
                q: p[0],
                r: p[1],
                b: p[2],
            }
        }
        "doro" | "conway-smith" => FamilySpec::Named(name.into()),
        other => return Err(format!("unknown family {:?}", other)),
    };
    let g = build(&spec).map_err(|e| e.to_string())?;
    Ok(if complement { g.complement() } else { g })
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    let parsed = if text.trim_start().starts_with('n') {
        parse_native(&text)
    } else {
        parse_graph6(&text)
    };
    parsed.map_err(|e| format!("{}: {}", path.display(), e))
}

fn fail(code: i32, msg: &str) -> i32 {
    eprintln!("error: {}", msg);
    code
}

fn print_verification(r: &VerificationReport, json: bool) -> i32 {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("serializable"));
    } else {
        println!("verify {}: {:?}", r.name, r.status);
        for c in &r.checks {
            println!("  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        for n in &r.notes {
            println!("  note: {}", n);
        }
    }
    if r.status == Status::Fail {
        EXIT_VERIFY_FAILED
    } else {
        0
    }
}

fn print_scan(s: &ScanResult, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(s).expect("serializable"));
        return;
    }
    println!("scan {}", s.name);
    for case in &s.cases {
        println!("== {}", case.id);
        if !case.domain.is_empty() {
            println!("   domain: {}", case.domain.join(", "));
        }
        for note in &case.notes {
            println!("   note: {}", note);
        }
        for c in &case.candidates {
            match &c.outcome {
                Outcome::Surviving { note } => {
                    println!("   {} SURVIVING: {}", c.label, note)
                }
                Outcome::Eliminated {
                    filter,
                    provenance,
                    detail,
                    citation,
                } => {
                    println!(
                        "   {} eliminated [{} / {:?}]: {}{}",
                        c.label,
                        filter,
                        provenance,
                        detail,
                        citation
                            .as_ref()
                            .map(|c| format!(" ({})", c))
                            .unwrap_or_default()
                    );
                }
            }
            for t in &c.trail {
                println!("      - {}", t);
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    let json = cli.json;
    match cli.cmd {
        Cmd::Construct {
            family,
            params,
            complement,
            out,
        } => {
            let g = match parse_family(&family, &params, complement) {
                Ok(g) => g,
                Err(e) => return fail(EXIT_BAD_FAMILY, &e),
            };
            let text = format_native(&g);
            let rendered = if json {
                let arr = check_drg(&g)
                    .ok()
                    .and_then(|v| v.array().map(|a| a.to_string()));
                serde_json::to_string_pretty(&json!({
                    "family": family,
                    "params": params,
                    "complement": complement,
                    "n": g.n(),
                    "array": arr,
                    "graph": text,
                }))
                .expect("serializable")
            } else {
                text
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, rendered) {
                        return fail(EXIT_FILE, &format!("cannot write {}: {}", path.display(), e));
                    }
                }
                None => print!("{}", rendered),
            }
            0
        }
        Cmd::Spectrum { input } => with_thread_pool(|| {
            let entries: Vec<(String, String)> = if input.trim_start().starts_with('{') {
                let arr: IntersectionArray = match input.parse() {
                    Ok(a) => a,
                    Err(e) => return fail(EXIT_BAD_ARRAY, &e.to_string()),
                };
                match spectrum(&arr) {
                    Ok(sp) => sp
                        .entries
                        .iter()
                        .map(|e| {
                            (
                                e.theta.to_string(),
                                e.multiplicity
                                    .as_ref()
                                    .map(|m| m.to_string())
                                    .unwrap_or_else(|| "irrational".into()),
                            )
                        })
                        .collect(),
                    Err(e) => {
                        // well-formed but infeasible array: verdict, exit 0
                        if json {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&json!({
                                    "input": input,
                                    "verdict": "infeasible",
                                    "reason": e.to_string(),
                                }))
                                .expect("serializable")
                            );
                        } else {
                            println!("infeasible: {}", e);
                        }
                        return 0;
                    }
                }
            } else {
                let g = match load_graph(Path::new(&input)) {
                    Ok(g) => g,
                    Err(e) => return fail(EXIT_FILE, &e),
                };
                CharPoly::of(&g.adjacency_matrix())
                    .eigenvalues()
                    .into_iter()
                    .map(|(v, m)| (v.to_string(), m.to_string()))
                    .collect()
            };
            if json {
                let list: Vec<_> = entries
                    .iter()
                    .map(|(t, m)| json!({"eigenvalue": t, "multiplicity": m}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "input": input,
                        "spectrum": list,
                    }))
                    .expect("serializable")
                );
            } else {
                for (t, m) in entries {
                    println!("{} x {}", t, m);
                }
            }
            0
        }),
        Cmd::LocalCheck { file, t } => with_thread_pool(|| {
            let threshold: BigRational = match t.parse() {
                Ok(q) => q,
                Err(_) => return fail(EXIT_BAD_ARRAY, &format!("bad rational threshold {:?}", t)),
            };
            let g = match load_graph(&file) {
                Ok(g) => g,
                Err(e) => return fail(EXIT_FILE, &e),
            };
            let summary = local_property(&g, &threshold);
            if json {
                let per_vertex: Vec<_> = summary
                    .per_vertex
                    .iter()
                    .map(|v| {
                        json!({
                            "theta1": v.theta1.as_ref().map(|t| t.to_string()),
                            "m_x": v.m_x,
                            "passes": v.passes,
                            "local_connected": v.local_connected,
                            "complement_connected": v.complement_connected,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "file": file.display().to_string(),
                        "threshold": threshold.to_string(),
                        "all_pass": summary.all_pass(),
                        "max_m_x": summary.max_m_x(),
                        "failures": summary.failures(),
                        "per_vertex": per_vertex,
                    }))
                    .expect("serializable")
                );
            } else {
                println!(
                    "local-check {} at t = {}: {}",
                    file.display(),
                    threshold,
                    if summary.all_pass() { "all pass" } else { "FAIL" }
                );
                println!("  vertices: {}", summary.per_vertex.len());
                println!("  max m_x: {}", summary.max_m_x());
                if !summary.all_pass() {
                    println!("  failing vertices: {:?}", summary.failures());
                }
            }
            0
        }),
        Cmd::Feasible { array, quadrangle } => {
            let arr: IntersectionArray = match array.parse() {
                Ok(a) => a,
                Err(e) => return fail(EXIT_BAD_ARRAY, &e.to_string()),
            };
            let report = feasibility(
                &arr,
                Assumptions {
                    contains_quadrangle: quadrangle,
                },
            );
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                println!(
                    "feasible {}: {}",
                    report.array,
                    if report.surviving { "surviving" } else { "infeasible" }
                );
                for (name, verdict) in &report.filters {
                    println!("  {}: {:?}", name, verdict);
                }
            }
            0
        }
        Cmd::Scan { which } => with_thread_pool(|| {
            let result = match which {
                ScanKind::Diam2 => scan_diameter2(),
                ScanKind::Diam3 => scan_diameter3plus(),
            };
            print_scan(&result, json);
            0
        }),
        Cmd::Verify { which } => with_thread_pool(|| {
            let report = match which {
                VerifyKind::Thm11 => verify_theorem_1_1(),
                VerifyKind::Thm12 => verify_theorem_1_2(),
                VerifyKind::Props => verify_props(),
            };
            print_verification(&report, json)
        }),
        Cmd::Iso { a, b } => {
            let ga = match load_graph(&a) {
                Ok(g) => g,
                Err(e) => return fail(EXIT_FILE, &e),
            };
            let gb = match load_graph(&b) {
                Ok(g) => g,
                Err(e) => return fail(EXIT_FILE, &e),
            };
            match isomorphic(&ga, &gb) {
                Ok(ans) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({"isomorphic": ans}))
                                .expect("serializable")
                        );
                    } else {
                        println!("{}", if ans { "isomorphic" } else { "not isomorphic" });
                    }
                    0
                }
                Err(e) => fail(EXIT_FILE, &e.to_string()),
            }
        }
    }
}
