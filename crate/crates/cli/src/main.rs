//! `hookline`: statistics, bijections, enumeration, polynomial identities,
//! verification suites, and figure rendering for 321-avoiding involutions and
//! their relatives.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on invalid
//! input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hookline_core::chain::{map_chain, parse_chain, TraceObject};
use hookline_core::distribution::{distribution, StatKind};
use hookline_core::partition::{BoxSpec, HookDecomposition, Partition};
use hookline_core::path::LatticePath;
use hookline_core::perm::{enumerate, members, Backend, PermClass, Permutation};
use hookline_core::poly::{self, APolyMethod};
use hookline_core::render::{render_with, RenderFormat, RenderObject, RenderOptions};
use hookline_core::tableau::StandardTableau;
use hookline_core::verify::run_suite_with_jobs;
use hookline_core::{Error, Result};

#[derive(Parser)]
#[command(name = "hookline", version, about = "Descent statistics, lattice-path bijections, and hook decompositions", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Descent statistics and class memberships of a permutation.
    Stats {
        /// One-line notation, e.g. "3 4 1 2" or "3,4,1,2".
        perm: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Trace a permutation through a chain of bijections.
    Map {
        /// Comma-separated stages, e.g. "rho,xi,psi-inv" or "s321".
        #[arg(long)]
        chain: String,
        perm: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Stream the members of a permutation class with an optional statistic.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// One of des, maj, comaj, descent-set.
        #[arg(long)]
        stat: Option<String>,
        /// "structural" (default where available) or "brute".
        #[arg(long)]
        backend: Option<String>,
        /// text, json, or csv.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Histogram of a statistic over a class, with closed-form comparison.
    Distribution {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stat: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Evaluate one of the named polynomials or counting formulas.
    Poly(PolyArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size cap; each check family also clamps to its own documented
        /// bound (brute-force oracles stop at 9-10, structural sweeps at 14).
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        /// Parallel workers; the report does not depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw a path, partition, tableau, or bijection pipeline.
    Render {
        /// path | partition | tableau | permutation-chain
        #[arg(long)]
        object: String,
        /// Box size n for partitions (default: smallest box that fits).
        #[arg(long = "box")]
        box_n: Option<usize>,
        /// ascii or svg.
        #[arg(long, default_value = "ascii")]
        format: String,
        /// Suppress peak labels on paths.
        #[arg(long)]
        no_peak_labels: bool,
        /// Suppress peel-order shading of hooks.
        #[arg(long)]
        no_hook_shading: bool,
        /// Suppress the surrounding box/grid.
        #[arg(long)]
        no_box_outline: bool,
        /// The object itself, e.g. "NNEE", "4,4,3,3,2", "1 2 5; 3 4".
        value: String,
    },
}

/// Parameters for `poly`; which ones are required depends on --id.
#[derive(Args)]
struct PolyArgs {
    /// qbinom, catalan, des-count, joint, maj, comaj, fib-maj, fib-des,
    /// double213-claim, double213-enum, superset, exact-des, apoly, des-set,
    /// limit-joint, limit-hd.
    #[arg(long)]
    id: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// A set such as "1,3" (used by superset, exact-des, limit-hd).
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    class: Option<String>,
    /// "direct" or "recurrence" (apoly only).
    #[arg(long)]
    method: Option<String>,
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Stats { perm, format } => stats(&perm, &format),
        Command::Map {
            chain,
            perm,
            format,
        } => map(&chain, &perm, &format),
        Command::Enumerate {
            class,
            n,
            stat,
            backend,
            format,
        } => enumerate_cmd(&class, n, stat.as_deref(), backend.as_deref(), &format),
        Command::Distribution {
            class,
            n,
            stat,
            format,
        } => distribution_cmd(&class, n, &stat, &format),
        Command::Poly(args) => poly_cmd(&args),
        Command::Verify { suite, max_n, jobs } => verify_cmd(&suite, max_n, jobs),
        Command::Render {
            object,
            box_n,
            format,
            no_peak_labels,
            no_hook_shading,
            no_box_outline,
            value,
        } => {
            let opts = RenderOptions {
                peak_labels: !no_peak_labels,
                hook_shading: !no_hook_shading,
                box_outline: !no_box_outline,
            };
            render_cmd(&object, box_n, &format, &opts, &value)
        }
    }
}

fn set_text(set: &[usize]) -> String {
    let words: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", words.join(","))
}

fn parse_set(text: &str) -> Result<Vec<usize>> {
    let mut set = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        set.push(
            tok.parse()
                .map_err(|_| Error::Parse(format!("non-integer element {tok:?}")))?,
        );
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn stats(perm: &str, format: &str) -> Result<ExitCode> {
    let p: Permutation = perm.parse()?;
    let profile = p.descent_profile();
    let classes: Vec<&str> = PermClass::ALL_CLASSES
        .iter()
        .filter(|c| c.contains(&p))
        .map(|c| c.name())
        .collect();
    match format {
        "json" => {
            let value = json!({
                "permutation": p.entries(),
                "n": p.n(),
                "descent_set": profile.descent_set,
                "ascent_set": profile.ascent_set,
                "maj": profile.maj,
                "comaj": profile.comaj,
                "involution": p.is_involution(),
                "classes": classes,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        "text" => {
            println!("permutation: {p}");
            println!("n: {}", p.n());
            println!("descent set: {}", set_text(&profile.descent_set));
            println!("ascent set: {}", set_text(&profile.ascent_set));
            println!("maj: {}", profile.maj);
            println!("comaj: {}", profile.comaj);
            println!(
                "involution: {}",
                if p.is_involution() { "yes" } else { "no" }
            );
            println!("classes: {}", classes.join(", "));
        }
        other => {
            return Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            })
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn map(chain: &str, perm: &str, format: &str) -> Result<ExitCode> {
    let stages = parse_chain(chain)?;
    let p: Permutation = perm.parse()?;
    let trace = map_chain(TraceObject::Perm(p), &stages)?;
    match format {
        "json" => {
            let entries: Vec<serde_json::Value> = trace
                .iter()
                .map(|e| {
                    json!({
                        "stage": e.stage,
                        "kind": e.object.kind(),
                        "value": e.object.to_string(),
                        "statistic": { "name": e.statistic_name, "set": e.statistic },
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).unwrap());
        }
        "text" => {
            for e in &trace {
                println!(
                    "{} ({}): {}   [{} = {}]",
                    e.stage,
                    e.object.kind(),
                    e.object,
                    e.statistic_name,
                    set_text(&e.statistic)
                );
            }
        }
        other => {
            return Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            })
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stat_value(p: &Permutation, stat: StatKind) -> serde_json::Value {
    match stat {
        StatKind::Des => json!(p.descent_set().len()),
        StatKind::Maj => json!(p.maj()),
        StatKind::Comaj => json!(p.comaj()),
        StatKind::DescentSet => json!(p.descent_set()),
    }
}

fn stat_display(p: &Permutation, stat: StatKind) -> String {
    match stat {
        StatKind::Des => p.descent_set().len().to_string(),
        StatKind::Maj => p.maj().to_string(),
        StatKind::Comaj => p.comaj().to_string(),
        StatKind::DescentSet => set_text(&p.descent_set()),
    }
}

fn enumerate_cmd(
    class: &str,
    n: usize,
    stat: Option<&str>,
    backend: Option<&str>,
    format: &str,
) -> Result<ExitCode> {
    let class: PermClass = class.parse()?;
    let stat: Option<StatKind> = stat.map(str::parse).transpose()?;
    let stream = match backend {
        None => members(class, n)?,
        Some("structural") => enumerate(class, n, Backend::Structural)?,
        Some("brute") => enumerate(class, n, Backend::Brute)?,
        Some(other) => {
            return Err(Error::Unknown {
                kind: "backend",
                name: other.to_string(),
            })
        }
    };
    match format {
        "json" => {
            let rows: Vec<serde_json::Value> = stream
                .map(|p| match stat {
                    None => json!({ "permutation": p.entries() }),
                    Some(s) => json!({ "permutation": p.entries(), s.name(): stat_value(&p, s) }),
                })
                .collect();
            println!("{}", serde_json::to_string(&rows).unwrap());
        }
        "csv" => {
            match stat {
                None => println!("permutation"),
                Some(s) => println!("permutation,{}", s.name()),
            }
            for p in stream {
                match stat {
                    None => println!("{p}"),
                    Some(s) => println!("{p},{}", stat_display(&p, s)),
                }
            }
        }
        "text" => {
            for p in stream {
                match stat {
                    None => println!("{p}"),
                    Some(s) => println!("{p}\t{} = {}", s.name(), stat_display(&p, s)),
                }
            }
        }
        other => {
            return Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            })
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn distribution_cmd(class: &str, n: usize, stat: &str, format: &str) -> Result<ExitCode> {
    let table = distribution(class.parse()?, n, stat.parse()?)?;
    match format {
        "text" => print!("{table}"),
        "csv" => {
            println!("value,count,closed_form");
            for row in &table.rows {
                let closed = row.closed_form.map(|v| v.to_string()).unwrap_or_default();
                println!("{},{},{}", row.key.replace(',', " "), row.count, closed);
            }
        }
        "json" => {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|r| json!({ "value": r.key, "count": r.count, "closed_form": r.closed_form }))
                .collect();
            let value = json!({
                "class": table.class.name(),
                "n": table.n,
                "stat": table.stat.name(),
                "rows": rows,
                "closed_form": table.closed_form,
                "matches": table.matches,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        other => {
            return Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            })
        }
    }
    Ok(ExitCode::SUCCESS)
}

enum PolyOutput {
    Q(poly::QPoly),
    Subset(poly::SubsetPoly),
    Count(u64),
    Counts(Vec<u64>),
}

fn require(name: &str, value: Option<usize>) -> Result<usize> {
    value.ok_or_else(|| Error::Unsupported(format!("--{name} is required for this --id")))
}

fn poly_cmd(args: &PolyArgs) -> Result<ExitCode> {
    let set = || -> Result<Vec<usize>> { parse_set(args.set.as_deref().unwrap_or("")) };
    let class = || -> Result<PermClass> {
        args.class
            .as_deref()
            .ok_or_else(|| Error::Unsupported("--class is required for this --id".into()))?
            .parse()
    };
    let out = match args.id.as_str() {
        "qbinom" => PolyOutput::Q(poly::q_binomial(
            require("n", args.n)?,
            require("j", args.j)?,
        )?),
        "catalan" => PolyOutput::Count(poly::catalan(require("n", args.n)? as u64)?),
        "des-count" => PolyOutput::Count(poly::des_count_formula(
            require("n", args.n)?,
            require("k", args.k)?,
        )?),
        "joint" => PolyOutput::Q(poly::joint_des_maj(
            require("n", args.n)?,
            require("k", args.k)?,
        )?),
        "maj" => PolyOutput::Q(poly::maj_poly(class()?, require("n", args.n)?)?),
        "comaj" => PolyOutput::Q(poly::comaj_poly(class()?, require("n", args.n)?)?),
        "fib-maj" => PolyOutput::Q(poly::fibonacci_maj(require("n", args.n)?)?),
        "fib-des" => PolyOutput::Counts(poly::fibonacci_des_counts(require("n", args.n)?)?),
        "double213-claim" => PolyOutput::Q(poly::double213_claim(require("n", args.n)?)?),
        "double213-enum" => PolyOutput::Q(poly::double213_enumerated(require("n", args.n)?)?),
        "superset" => PolyOutput::Count(poly::superset_count(require("n", args.n)?, &set()?)?),
        "exact-des" => {
            PolyOutput::Count(poly::exact_descent_count(require("n", args.n)?, &set()?)?)
        }
        "apoly" => {
            let method = match args.method.as_deref().unwrap_or("recurrence") {
                "direct" => APolyMethod::Direct,
                "recurrence" => APolyMethod::Recurrence,
                other => {
                    return Err(Error::Unknown {
                        kind: "method",
                        name: other.to_string(),
                    })
                }
            };
            let n = require("n", args.n)?;
            PolyOutput::Subset(poly::a_poly(n, args.m.unwrap_or(n), method)?)
        }
        "des-set" => PolyOutput::Subset(poly::descent_set_poly(class()?, require("n", args.n)?)?),
        "limit-joint" => PolyOutput::Q(poly::limit_joint_series(
            require("k", args.k)?,
            require("order", args.order)?,
        )?),
        "limit-hd" => PolyOutput::Count(poly::limit_hd_coefficient(&HookDecomposition::new(
            set()?,
        )?)?),
        other => {
            return Err(Error::Unknown {
                kind: "polynomial id",
                name: other.to_string(),
            })
        }
    };
    match (&out, args.format.as_str()) {
        (PolyOutput::Q(p), "text") => println!("{p}"),
        (PolyOutput::Q(p), "json") => println!("{}", serde_json::to_string(p).unwrap()),
        (PolyOutput::Subset(p), "text") => println!("{p}"),
        (PolyOutput::Subset(p), "json") => println!("{}", serde_json::to_string(p).unwrap()),
        (PolyOutput::Count(c), "text") => println!("{c}"),
        (PolyOutput::Count(c), "json") => println!("{}", json!({ "value": c })),
        (PolyOutput::Counts(v), "text") => {
            let words: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            println!("{}", words.join(" "));
        }
        (PolyOutput::Counts(v), "json") => println!("{}", json!({ "values": v })),
        (_, other) => {
            return Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            })
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(suite: &str, max_n: usize, jobs: usize) -> Result<ExitCode> {
    let report = run_suite_with_jobs(suite, max_n, jobs)?;
    print!("{}", report.render_text());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_cmd(
    object: &str,
    box_n: Option<usize>,
    format: &str,
    opts: &RenderOptions,
    value: &str,
) -> Result<ExitCode> {
    let format: RenderFormat = format.parse()?;
    let object = match object {
        "path" => RenderObject::Path(value.parse::<LatticePath>()?),
        "partition" => {
            let partition: Partition = value.parse()?;
            // smallest box holding the diagram unless one was given
            let minimal = 2 * partition.num_parts().max(partition.part(1));
            let box_n = box_n.unwrap_or(minimal);
            if !partition.fits_in(&BoxSpec::new(box_n)) {
                return Err(Error::DoesNotFit);
            }
            RenderObject::Partition { partition, box_n }
        }
        "tableau" => RenderObject::Tableau(value.parse::<StandardTableau>()?),
        "permutation-chain" | "chain" => RenderObject::PermChain(value.parse::<Permutation>()?),
        other => {
            return Err(Error::Unknown {
                kind: "render object",
                name: other.to_string(),
            })
        }
    };
    print!("{}", render_with(&object, format, opts)?);
    Ok(ExitCode::SUCCESS)
}
