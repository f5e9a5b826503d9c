use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use wedgelab::error::{Error, Result};
use wedgelab::field::FieldCtx;
use wedgelab::poly::IrrPoly;
use wedgelab::search::{self, OrbitEnd, PolySet};
use wedgelab::text::{format_field, parse_field, parse_poly, parse_poly_list};
use wedgelab::{blocks, dynamics, harness, quadratic, wedge};

/// Workbench for the wedge operator on irreducible polynomials: wedges,
/// dynatomic polynomials, blocks and block graphs, stable and periodic
/// 2-sets, and the counting experiments behind them.
#[derive(Parser)]
#[command(name = "wedgelab", version)]
struct Cli {
    /// Field spec: a prime "p", a prime power "p^k", or "Q"
    #[arg(long, global = true)]
    field: Option<String>,
    /// Emit JSON where the command supports it
    #[arg(long, global = true)]
    json: bool,
    /// Write the main payload to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute f ▷ g (minimal polynomial of f at a root of g)
    Wedge {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Dynatomic polynomial of f for period n
    Phi {
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: u32,
    },
    /// Classify the 2-set {f, g} (type I, II, III, or none)
    Classify {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Block decomposition of the degree-n extension, optionally as DOT
    Blocks {
        #[arg(long)]
        deg: usize,
        /// Write the block graph in DOT format to this file
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exhaustively enumerate stable 2-sets of degree n
    Stable2 {
        #[arg(long)]
        deg: usize,
    },
    /// Orbit of a set of polynomials under the self-image map
    Orbit {
        /// Semicolon-separated irreducible polynomials
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Polynomial graph of a set, in DOT format
    Graph {
        #[arg(long)]
        set: String,
        /// Write DOT here instead of the main output stream
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Construct every periodic quadratic 2-set of the given period
    Periodic {
        #[arg(long)]
        period: usize,
    },
    /// Closed-form stable/periodic 2-set counts for the field
    Counts,
    /// Stable 2-set table over all prime extensions with at most --max
    /// irreducibles
    Table3 {
        #[arg(long, default_value_t = 500)]
        max: u64,
    },
    /// Normalized-period experiment over admissible primes (CSV output)
    Artin {
        #[arg(long, default_value = "x^2+x-1")]
        f: String,
        #[arg(long, default_value = "x^2+2*x-1")]
        g: String,
        #[arg(long, default_value_t = 2000)]
        num_primes: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Wedge { f, g } => cmd_wedge(&cli, f, g),
        Cmd::Phi { f, n } => cmd_phi(&cli, f, *n),
        Cmd::Classify { f, g } => cmd_classify(&cli, f, g),
        Cmd::Blocks { deg, dot } => cmd_blocks(&cli, *deg, dot.as_deref()),
        Cmd::Stable2 { deg } => cmd_stable2(&cli, *deg),
        Cmd::Orbit { set, max_steps } => cmd_orbit(&cli, set, *max_steps),
        Cmd::Graph { set, dot } => cmd_graph(&cli, set, dot.as_deref()),
        Cmd::Periodic { period } => cmd_periodic(&cli, *period),
        Cmd::Counts => cmd_counts(&cli),
        Cmd::Table3 { max } => cmd_table3(&cli, *max),
        Cmd::Artin { f, g, num_primes } => cmd_artin(&cli, f, g, *num_primes),
    }
}

fn need_field(cli: &Cli) -> Result<FieldCtx> {
    match &cli.field {
        Some(spec) => parse_field(spec),
        None => Err(Error::input("--field is required for this command")),
    }
}

fn emit(cli: &Cli, payload: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, payload)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{payload}");
            if !payload.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn parse_irr(ctx: &FieldCtx, s: &str) -> Result<IrrPoly> {
    IrrPoly::new(parse_poly(ctx, s)?.to_monic()?)
}

fn parse_set(ctx: &FieldCtx, s: &str) -> Result<PolySet> {
    let members = parse_poly_list(ctx, s)?
        .into_iter()
        .map(|p| IrrPoly::new(p.to_monic()?))
        .collect::<Result<Vec<_>>>()?;
    PolySet::new(ctx, members)
}

fn cmd_wedge(cli: &Cli, f: &str, g: &str) -> Result<()> {
    let ctx = need_field(cli)?;
    let f = parse_poly(&ctx, f)?;
    let g = parse_irr(&ctx, g)?;
    let result = wedge::wedge(&f, &g)?;
    let oracle = if ctx.is_finite() {
        let o = wedge::wedge_oracle(&f, &g)?;
        if &o != result.h.poly() {
            return Err(Error::internal(format!(
                "matrix method and Frobenius oracle disagree: {} vs {o}",
                result.h
            )));
        }
        "agree".to_string()
    } else {
        "skipped (rational field)".to_string()
    };
    if cli.json {
        let payload = serde_json::json!({
            "field": format_field(&ctx),
            "f": f.to_string(),
            "g": g.to_string(),
            "h": result.h.to_string(),
            "r": result.r,
            "oracle": oracle,
        });
        emit(cli, &format!("{payload:#}\n"))
    } else {
        emit(
            cli,
            &format!("h = {}\nr = {}\noracle: {oracle}\n", result.h, result.r),
        )
    }
}

fn cmd_phi(cli: &Cli, f: &str, n: u32) -> Result<()> {
    let ctx = need_field(cli)?;
    let f = parse_poly(&ctx, f)?;
    let phi = dynamics::dynatomic(&f, n)?;
    emit(cli, &format!("{phi}\n"))
}

fn cmd_classify(cli: &Cli, f: &str, g: &str) -> Result<()> {
    let ctx = need_field(cli)?;
    let f = parse_irr(&ctx, f)?;
    let g = parse_irr(&ctx, g)?;
    let class = dynamics::classify_2set(&f, &g)?;
    let sink = match &class {
        dynamics::TwoSetType::TypeIII { sink } => Some(sink.to_string()),
        _ => None,
    };
    if cli.json {
        let payload = serde_json::json!({
            "field": format_field(&ctx),
            "f": f.to_string(),
            "g": g.to_string(),
            "type": class.label(),
            "sink": sink,
        });
        emit(cli, &format!("{payload:#}\n"))
    } else {
        let mut text = format!("type: {class}\n");
        if let Some(sink) = sink {
            text.push_str(&format!("sink: {sink}\n"));
        }
        emit(cli, &text)
    }
}

fn cmd_blocks(cli: &Cli, deg: usize, dot: Option<&std::path::Path>) -> Result<()> {
    let ctx = need_field(cli)?;
    let blocks = blocks::partition_blocks(&ctx, deg)?;
    let mut text = format!(
        "field F_{}, degree {deg}: {} blocks\n",
        ctx.order().map(|q| q.to_string()).unwrap_or_default(),
        blocks.len()
    );
    for b in &blocks {
        text.push_str(&format!(
            "block rep {} size {} disc {}\n",
            b.rep(),
            b.size(),
            b.disc()
        ));
    }
    if let Some(path) = dot {
        let graph = blocks::build_block_graph(&ctx, deg)?;
        std::fs::write(path, harness::block_graph_dot(&graph))?;
        text.push_str(&format!("block graph written to {}\n", path.display()));
    }
    emit(cli, &text)
}

fn cmd_stable2(cli: &Cli, deg: usize) -> Result<()> {
    let ctx = need_field(cli)?;
    let report = search::enumerate_stable_2sets(&ctx, deg)?;
    if cli.json {
        let payload = harness::stable2_json(&report, &format_field(&ctx));
        emit(cli, &format!("{payload:#}\n"))
    } else {
        let mut text = format!(
            "#E = {}; stable 2-sets: I = {}, II = {}, III = {}\n",
            report.universe, report.count_i, report.count_ii, report.count_iii
        );
        for pair in &report.pairs {
            text.push_str(&format!("{}  |  {}  ({})\n", pair.f, pair.g, pair.class));
        }
        emit(cli, &text)
    }
}

fn cmd_orbit(cli: &Cli, set: &str, max_steps: usize) -> Result<()> {
    let ctx = need_field(cli)?;
    let start = parse_set(&ctx, set)?;
    let info = search::orbit(&start, max_steps)?;
    let mut text = format!("transient: {}\n", info.transient);
    match &info.end {
        OrbitEnd::Cycle(states) => {
            text.push_str(&format!("period: {}\n", states.len()));
            for (i, s) in states.iter().enumerate() {
                text.push_str(&format!("cycle[{i}]: {}\n", s.encoding()));
            }
        }
        OrbitEnd::Collapsed(s) => {
            text.push_str(&format!("collapsed: {{{}}}\n", s.encoding()));
        }
    }
    emit(cli, &text)
}

fn cmd_graph(cli: &Cli, set: &str, dot: Option<&std::path::Path>) -> Result<()> {
    let ctx = need_field(cli)?;
    let start = parse_set(&ctx, set)?;
    let graph = search::build_graph(&start)?;
    let text = harness::graph_dot(&graph);
    match dot {
        Some(path) => {
            std::fs::write(path, &text)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => emit(cli, &text),
    }
}

fn cmd_periodic(cli: &Cli, period: usize) -> Result<()> {
    let ctx = need_field(cli)?;
    let records = quadratic::construct_periodic_sets(&ctx, period)?;
    if cli.json {
        let payload = serde_json::json!({
            "field": format_field(&ctx),
            "period": period,
            "cycles": records
                .iter()
                .map(|rec| {
                    serde_json::json!({
                        "zeta": rec.zeta.to_string(),
                        "zeta_order": rec.zeta_order,
                        "pairs": rec
                            .pairs
                            .iter()
                            .map(|(f, g)| vec![f.to_string(), g.to_string()])
                            .collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        });
        emit(cli, &format!("{payload:#}\n"))
    } else {
        let mut text = format!("{} cycle(s) of period {period}\n", records.len());
        for (i, rec) in records.iter().enumerate() {
            text.push_str(&format!(
                "cycle {i}: zeta = {} (order {})\n",
                rec.zeta, rec.zeta_order
            ));
            for (t, (f, g)) in rec.pairs.iter().enumerate() {
                text.push_str(&format!("  t={t}: {{{f}, {g}}}\n"));
            }
        }
        emit(cli, &text)
    }
}

fn cmd_counts(cli: &Cli) -> Result<()> {
    let ctx = need_field(cli)?;
    let q = ctx
        .order()
        .ok_or_else(|| Error::input("counts need a finite field"))?;
    let record = quadratic::counting_formulas(q)?;
    if cli.json {
        let payload = serde_json::json!({
            "q": q,
            "N_I": record.n_type_i,
            "N_II": record.n_type_ii,
            "N_III": record.n_type_iii,
            "periodic_upper_bound": record.periodic_upper_bound,
            "minimal_period_counts": (1..=14u64)
                .map(|t| record.minimal_period_count(t))
                .collect::<Vec<_>>(),
        });
        emit(cli, &format!("{payload:#}\n"))
    } else {
        let mut text = format!(
            "N_I = {}\nN_II = {}\nN_III = {}\nperiodic upper bound = {}\n",
            record.n_type_i, record.n_type_ii, record.n_type_iii, record.periodic_upper_bound
        );
        for t in 1..=14u64 {
            text.push_str(&format!(
                "minimal period count t={t}: {}\n",
                record.minimal_period_count(t)
            ));
        }
        emit(cli, &text)
    }
}

fn cmd_table3(cli: &Cli, max: u64) -> Result<()> {
    let rows = harness::table3(max)?;
    if cli.json {
        emit(cli, &format!("{:#}\n", serde_json::json!(rows)))
    } else {
        emit(cli, &harness::format_table3(&rows))
    }
}

fn cmd_artin(cli: &Cli, f: &str, g: &str, num_primes: usize) -> Result<()> {
    let quad = |s: &str| -> Result<harness::IntQuad> {
        let q = FieldCtx::rationals();
        let p = parse_poly(&q, s)?;
        if p.degree() != Some(2) || !p.is_monic() {
            return Err(Error::input("the experiment takes monic integer quadratics"));
        }
        let as_i64 = |fe: wedgelab::Fe| -> Result<i64> {
            match fe {
                wedgelab::Fe::Rat(r) if r.is_integer() => {
                    i64::try_from(r.to_integer()).map_err(|_| Error::input("coefficient too large"))
                }
                _ => Err(Error::input("the experiment takes integer coefficients")),
            }
        };
        Ok(harness::IntQuad { b: as_i64(p.coeff(1))?, r: as_i64(p.coeff(0))? })
    };
    let fq = quad(f)?;
    let gq = quad(g)?;
    let (rows, report) = harness::artin_experiment(fq, gq, num_primes)?;
    let csv = harness::artin_csv(&rows);
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &csv)?;
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => print!("{csv}"),
    }
    print!("{}", harness::format_dist_report(&report));
    Ok(())
}
