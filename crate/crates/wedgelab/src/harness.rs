//! Batch jobs behind the CLI: the stable-2-set table over all small prime
//! extensions, the prime-by-prime normalized-period experiment, and the
//! DOT/CSV exporters. Everything here is deterministic: identical inputs
//! produce byte-identical output.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::BlockGraph;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::numth::{self, PrimeStream};
use crate::poly::{count_irreducibles, is_irreducible, Poly};
use crate::search::{enumerate_stable_2sets, PolyGraph, StableReport};

/// One row of the stable-2-set table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: u64,
    pub n: usize,
    pub universe: usize,
    pub count_i: u64,
    pub count_ii: u64,
    pub count_iii: u64,
}

/// Sweep every prime-field extension `E(p^n)` with `n >= 2` and at most
/// `max_set_size` irreducibles, count stable 2-sets exhaustively, and keep
/// the rows with at least one stable set (all-zero extensions are
/// omitted).
pub fn table3(max_set_size: u64) -> Result<Vec<TableRow>> {
    let limit = BigUint::from(max_set_size);
    let mut jobs: Vec<(u64, usize)> = Vec::new();
    for p in PrimeStream::new() {
        if count_irreducibles(p, 2) > limit {
            break;
        }
        let mut n = 2usize;
        while count_irreducibles(p, n as u32) <= limit {
            jobs.push((p, n));
            n += 1;
        }
    }
    let mut rows = jobs
        .into_par_iter()
        .map(|(p, n)| {
            let ctx = FieldCtx::prime(p)?;
            let rep = enumerate_stable_2sets(&ctx, n)?;
            Ok(TableRow {
                p,
                n,
                universe: rep.universe,
                count_i: rep.count_i,
                count_ii: rep.count_ii,
                count_iii: rep.count_iii,
            })
        })
        .collect::<Result<Vec<TableRow>>>()?;
    rows.retain(|r| r.count_i + r.count_ii + r.count_iii > 0);
    rows.sort_by_key(|r| (r.p, r.n));
    Ok(rows)
}

pub fn format_table3(rows: &[TableRow]) -> String {
    let mut out = String::from("p\tn\t#E\tI\tII\tIII\n");
    for r in rows {
        let dash = |v: u64| if v == 0 { "-".to_string() } else { v.to_string() };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.p,
            r.n,
            r.universe,
            dash(r.count_i),
            dash(r.count_ii),
            dash(r.count_iii)
        ));
    }
    out
}

/// Monic integer quadratic `x^2 + bx + r`, the experiment's seed shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntQuad {
    pub b: i64,
    pub r: i64,
}

impl IntQuad {
    pub fn to_poly(self, ctx: &FieldCtx) -> Poly {
        Poly::from_coeffs(
            ctx,
            vec![ctx.from_i64(self.r), ctx.from_i64(self.b), ctx.one()],
        )
    }
}

/// Primes where both reductions stay irreducible and the pair stays
/// non-degenerate (sum and difference of the middle coefficients nonzero
/// mod p, so the skew coordinates u, v never vanish). Ascending,
/// sieve-generated.
pub fn admissible_primes(f: IntQuad, g: IntQuad, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    for p in PrimeStream::new() {
        if out.len() >= count {
            break;
        }
        if is_admissible(f, g, p)? {
            out.push(p);
        }
    }
    Ok(out)
}

fn is_admissible(f: IntQuad, g: IntQuad, p: u64) -> Result<bool> {
    let diff = (f.b - g.b).rem_euclid(p as i64);
    let sum = (f.b + g.b).rem_euclid(p as i64);
    if diff == 0 || sum == 0 {
        return Ok(false);
    }
    let ctx = FieldCtx::prime(p)?;
    Ok(is_irreducible(&f.to_poly(&ctx))? && is_irreducible(&g.to_poly(&ctx))?)
}

/// One prime of the experiment: the orbit's limit-cycle length, its
/// transient, and the normalized period `T(p) = t(p)/(p-1)` as an exact
/// reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinRow {
    pub p: u64,
    pub period: u64,
    pub transient: u64,
    pub t_num: u64,
    pub t_den: u64,
}

/// Orbit of the unordered pair `{x^2+bx+r, x^2+cx+r}` over `F_p` using the
/// quadratic recurrence `b' = c(b-c)`, `c' = -b(b-c)`, `r' = r(b-c)^2`.
/// Exact for admissible primes: along such orbits both members stay
/// irreducible quadratics with a common constant term.
pub fn int_pair_orbit(f: IntQuad, g: IntQuad, p: u64) -> Result<(u64, u64)> {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    if reduce(f.r - g.r) != 0 {
        return Err(Error::input("the experiment needs a common constant term"));
    }
    let (mut b, mut c, mut r) = (reduce(f.b), reduce(g.b), reduce(f.r));
    let key = |b: u64, c: u64, r: u64| (b.min(c), b.max(c), r);
    let mut seen: HashMap<(u64, u64, u64), u64> = HashMap::new();
    seen.insert(key(b, c, r), 0);
    let cap = 8 * (p + 100);
    for step in 1..=cap {
        let u = (b + p - c) % p;
        if u == 0 {
            return Err(Error::internal("orbit degenerated: equal middle coefficients"));
        }
        let nb = mul(c, u);
        let nc = mul((p - b) % p, u);
        let nr = mul(r, mul(u, u));
        b = nb;
        c = nc;
        r = nr;
        if let Some(&first) = seen.get(&key(b, c, r)) {
            return Ok((first, step - first));
        }
        seen.insert(key(b, c, r), step);
    }
    Err(Error::internal(format!("orbit did not close within {cap} steps")))
}

#[derive(Debug, Clone)]
pub struct DistReport {
    /// Distinct normalized periods with multiplicities, ascending by value.
    pub t_counts: Vec<((u64, u64), usize)>,
    /// Empirical distribution function sampled at the distinct T values:
    /// cumulative counts, ending at the total number of rows.
    pub edf: Vec<((u64, u64), usize)>,
    pub transient_hist: BTreeMap<u64, usize>,
    pub total: usize,
}

/// Run the experiment over the first `num_primes` admissible primes.
pub fn artin_experiment(
    f: IntQuad,
    g: IntQuad,
    num_primes: usize,
) -> Result<(Vec<ArtinRow>, DistReport)> {
    let primes = admissible_primes(f, g, num_primes)?;
    let rows = primes
        .into_par_iter()
        .map(|p| {
            let (transient, period) = int_pair_orbit(f, g, p)?;
            let d = numth::gcd(period, p - 1);
            Ok(ArtinRow {
                p,
                period,
                transient,
                t_num: period / d,
                t_den: (p - 1) / d,
            })
        })
        .collect::<Result<Vec<ArtinRow>>>()?;
    let report = build_dist_report(&rows);
    Ok((rows, report))
}

pub fn build_dist_report(rows: &[ArtinRow]) -> DistReport {
    let mut t_counts: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut transient_hist: BTreeMap<u64, usize> = BTreeMap::new();
    for row in rows {
        *t_counts.entry((row.t_num, row.t_den)).or_default() += 1;
        *transient_hist.entry(row.transient).or_default() += 1;
    }
    let mut t_counts: Vec<((u64, u64), usize)> = t_counts.into_iter().collect();
    // sort by the value of the fraction, not by encoding
    t_counts.sort_by(|((an, ad), _), ((bn, bd), _)| {
        (*an as u128 * *bd as u128).cmp(&(*bn as u128 * *ad as u128))
    });
    let mut edf = Vec::with_capacity(t_counts.len());
    let mut cum = 0usize;
    for &(t, count) in &t_counts {
        cum += count;
        edf.push((t, cum));
    }
    DistReport {
        t_counts,
        edf,
        transient_hist,
        total: rows.len(),
    }
}

pub fn format_dist_report(report: &DistReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("primes: {}\n", report.total));
    out.push_str("transient histogram:\n");
    for (t, count) in &report.transient_hist {
        out.push_str(&format!(
            "  transient {t}: {count} ({:.4})\n",
            *count as f64 / report.total as f64
        ));
    }
    out.push_str("distribution function steps (T, D(T)):\n");
    for ((num, den), cum) in &report.edf {
        out.push_str(&format!(
            "  {num}/{den}\t{:.6}\n",
            *cum as f64 / report.total as f64
        ));
    }
    out
}

/// CSV with columns `p,period,transient,T_num,T_den`.
pub fn artin_csv(rows: &[ArtinRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
}

pub fn parse_artin_csv(text: &str) -> Result<Vec<ArtinRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::input(format!("bad CSV row: {e}"))))
        .collect()
}

fn dot_escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// DOT text for a polynomial graph; vertices keep their canonical order
/// and arcs are labeled by the comma-joined actor set.
pub fn graph_dot(graph: &PolyGraph) -> String {
    let mut out = String::from("digraph wedge {\n");
    for v in &graph.vertices {
        out.push_str(&format!("  \"{}\";\n", dot_escape(&v.to_string())));
    }
    for arc in &graph.arcs {
        let label: Vec<String> = arc
            .omega
            .iter()
            .map(|&i| graph.vertices[i].to_string())
            .collect();
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            dot_escape(&graph.vertices[arc.from].to_string()),
            dot_escape(&graph.vertices[arc.to].to_string()),
            dot_escape(&label.join(","))
        ));
    }
    out.push_str("}\n");
    out
}

/// DOT text for a block graph; blocks are labeled by their canonical
/// representative and arcs by their shift sets.
pub fn block_graph_dot(graph: &BlockGraph) -> String {
    let mut out = String::from("digraph blocks {\n");
    for b in &graph.blocks {
        out.push_str(&format!(
            "  \"{}\" [label=\"{} (disc {}, size {})\"];\n",
            dot_escape(&b.rep().to_string()),
            dot_escape(&b.rep().to_string()),
            b.disc(),
            b.size()
        ));
    }
    for arc in &graph.arcs {
        let label: Vec<String> = arc.shifts.iter().map(|b| b.to_string()).collect();
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"b={}\"];\n",
            dot_escape(&graph.blocks[arc.from].rep().to_string()),
            dot_escape(&graph.blocks[arc.to].rep().to_string()),
            dot_escape(&label.join(","))
        ));
    }
    out.push_str("}\n");
    out
}

/// JSON form of a stable-2-set report:
/// `{field, degree, counts: {I, II, III}, sets: [{f, g, type}]}`.
pub fn stable2_json(report: &StableReport, field: &str) -> serde_json::Value {
    serde_json::json!({
        "field": field,
        "degree": report.degree,
        "counts": {
            "I": report.count_i,
            "II": report.count_ii,
            "III": report.count_iii,
        },
        "sets": report
            .pairs
            .iter()
            .map(|p| {
                serde_json::json!({
                    "f": p.f.to_string(),
                    "g": p.g.to_string(),
                    "type": p.class.label(),
                })
            })
            .collect::<Vec<_>>(),
    })
}
