use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use twodist::coloring::{greedy_clique, greedy_color_count, parse_precolor, solve, Outcome, SolveOptions};
use twodist::embeddings::{k4_spectrum, w6_embeddings, w6_spectrum};
use twodist::exactnum::{interval::decimal, FieldElement, Tower};
use twodist::graphs::{catalog, from_json, to_dot, to_json, CatalogId};
use twodist::verify;
use twodist::Error;

#[derive(Parser)]
#[command(name = "twodist", version, about = "Exact two-distance graphs in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification case, or `all`.
    Verify {
        id: String,
        /// Include cases marked slow when running `all`.
        #[arg(long)]
        include_slow: bool,
        #[arg(long)]
        json: bool,
    },
    /// Chromatic number (or bounded colorability) of a graph file.
    Chromatic {
        file: String,
        /// Largest number of colors to try.
        #[arg(long)]
        max_k: Option<usize>,
        /// Fixed colors, e.g. `0:blue,1:blue` or `0:3,1:3`.
        #[arg(long)]
        precolor: Option<String>,
        /// Search-node budget per colorability query.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Two-distance embeddings of K4 or W6.
    Embed {
        template: Template,
        /// Report every value of d^2 (K4), or scan `LO HI` for W6.
        #[arg(long, num_args = 0..=2, value_names = ["LO", "HI"])]
        spectrum: Option<Vec<String>>,
        /// Squared distance over s3, q3 (fourth root of 3), s2, s5, s7, s11.
        #[arg(long)]
        d2: Option<String>,
        /// Cell width of the W6 spectrum scan.
        #[arg(long, default_value = "1/1000")]
        resolution: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a catalog graph as JSON, or as DOT.
    Export {
        id: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Template {
    K4,
    W6,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExhausted(_) => 3,
                _ => 2,
            }
        }
    };
    ExitCode::from(code)
}

fn run(cmd: Command) -> twodist::Result<u8> {
    match cmd {
        Command::Verify { id, include_slow, json } => {
            let reports = if id == "all" {
                verify::run_all(include_slow)
            } else {
                vec![verify::run_case(verify::find(&id)?)]
            };
            if json {
                let doc: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                for r in &reports {
                    print!("{}", r.human());
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                println!("{passed}/{} cases passed", reports.len());
            }
            Ok(verify::exit_code(&reports) as u8)
        }
        Command::Chromatic { file, max_k, precolor, budget, json } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Parse(format!("{file}: {e}")))?;
            let g = from_json(&text)?;
            let precolor = match precolor {
                Some(s) => parse_precolor(&s)?,
                None => Vec::new(),
            };
            let ag = g.abstract_graph();
            let lower = greedy_clique(ag)
                .len()
                .max(precolor.iter().map(|&(_, c)| c + 1).max().unwrap_or(0));
            let upper = max_k.unwrap_or_else(|| greedy_color_count(ag).max(lower));
            let opts = SolveOptions { precolor, budget };
            let budget = opts.budget;
            let mut nodes = 0;
            let start = std::time::Instant::now();
            let mut found = None;
            for k in lower..=upper {
                let r = solve(ag, k, &opts)?;
                nodes += r.nodes;
                match r.result {
                    Outcome::Colorable(c) => {
                        found = Some((k, c));
                        break;
                    }
                    Outcome::NotColorable => {}
                    Outcome::BudgetExhausted => return Err(Error::BudgetExhausted(budget.unwrap_or(nodes))),
                }
            }
            let ms = start.elapsed().as_millis();
            if json {
                let doc = match &found {
                    Some((k, c)) => json!({"vertices": g.len(), "chromatic": k, "coloring": c, "nodes": nodes, "ms": ms}),
                    None => json!({"vertices": g.len(), "chromatic": null, "not_colorable_with": upper, "nodes": nodes, "ms": ms}),
                };
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                match &found {
                    Some((k, c)) => {
                        println!("{k} colors suffice and fewer do not ({nodes} nodes, {ms} ms)");
                        println!("coloring: {c:?}");
                    }
                    None => println!("not {upper}-colorable ({nodes} nodes, {ms} ms)"),
                }
            }
            Ok(0)
        }
        Command::Embed { template, spectrum, d2, resolution, json } => match template {
            Template::K4 => {
                let s = k4_spectrum();
                let values: Vec<_> = s
                    .values
                    .iter()
                    .map(|v| {
                        let count = s.solutions_at(v).count();
                        json!({
                            "d2": v.closed_form(),
                            "polynomial": v.poly.to_string(),
                            "lo": decimal(&v.lo, 15),
                            "hi": decimal(&v.hi, 15),
                            "labelings": count,
                        })
                    })
                    .collect();
                if json {
                    println!("{}", serde_json::to_string_pretty(&values).expect("json"));
                } else {
                    for v in &values {
                        println!(
                            "d^2 = {} in [{}, {}], {} labelings",
                            v["d2"].as_str().unwrap_or("?"),
                            v["lo"].as_str().unwrap_or("?"),
                            v["hi"].as_str().unwrap_or("?"),
                            v["labelings"]
                        );
                    }
                }
                Ok(0)
            }
            Template::W6 => match (spectrum, d2) {
                (Some(bounds), None) if bounds.len() == 2 => {
                    let lo = rational(&bounds[0])?;
                    let hi = rational(&bounds[1])?;
                    let roots = w6_spectrum(&lo, &hi, &rational(&resolution)?)?;
                    if json {
                        println!("{}", serde_json::to_string_pretty(&roots).expect("json"));
                    } else {
                        for r in &roots {
                            println!(
                                "d^2 in [{}, {}], {} labelings, e.g. {}",
                                decimal(&r.lo, 12),
                                decimal(&r.hi, 12),
                                r.labelings.len(),
                                r.labelings[0]
                            );
                        }
                    }
                    Ok(0)
                }
                (None, Some(expr)) => {
                    let d2 = FieldElement::parse(&Tower::paper(), &expr)?;
                    let r = w6_embeddings(&d2)?;
                    if json {
                        let classes: Vec<_> = r.classes.iter().map(|c| c.label()).collect();
                        let doc = json!({
                            "d2": expr,
                            "counts": r.counts,
                            "classes": classes,
                            "solutions": r.solutions.iter().map(|s| s.label()).collect::<Vec<_>>(),
                        });
                        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                    } else {
                        println!("{} embeddings up to congruence and wheel symmetry", r.counts.full);
                        println!(
                            "labeled: {}, up to rotation: {}, rotation and reversal: {}, rotation and reflection: {}",
                            r.counts.raw, r.counts.rotation, r.counts.rotation_reversal, r.counts.rotation_reflection
                        );
                        for c in &r.classes {
                            println!("  {} (winding {})", c.label(), c.winding);
                        }
                    }
                    Ok(0)
                }
                _ => Err(Error::Parse("embed w6 takes either --d2 EXPR or --spectrum LO HI".into())),
            },
        },
        Command::Export { id, dot } => {
            let g = catalog(id.parse::<CatalogId>()?)?;
            if dot {
                print!("{}", to_dot(&g));
            } else {
                println!("{}", to_json(&g));
            }
            Ok(0)
        }
    }
}

fn rational(s: &str) -> twodist::Result<BigRational> {
    let x = FieldElement::parse(&Tower::rationals(), s)?;
    x.as_rational().cloned().ok_or_else(|| Error::Parse(format!("`{s}` is not rational")))
}
