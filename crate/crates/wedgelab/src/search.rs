//! The self-image map on sets of irreducible polynomials, orbit detection,
//! exhaustive stable-set enumeration, and polynomial graphs with arc
//! multiplicities.

use std::collections::{BTreeMap, HashMap};

use crate::dynamics::{classify_from_wedges, TwoSetType};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{enumerate_irreducibles, IrrPoly};
use crate::wedge::wedge;

/// A sorted, deduplicated set of irreducible polynomials over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySet {
    ctx: FieldCtx,
    members: Vec<IrrPoly>,
}

impl PolySet {
    pub fn new(ctx: &FieldCtx, mut members: Vec<IrrPoly>) -> Result<PolySet> {
        if members.iter().any(|m| m.ctx() != ctx) {
            return Err(Error::input("set members must share one field"));
        }
        members.sort();
        members.dedup();
        Ok(PolySet { ctx: ctx.clone(), members })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn members(&self) -> &[IrrPoly] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &IrrPoly) -> bool {
        self.members.binary_search(f).is_ok()
    }

    pub fn is_subset_of(&self, other: &PolySet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Canonical text encoding, used as a cycle-detection key.
    pub fn encoding(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        parts.join("|")
    }
}

/// All wedges `f_i ▷ f_j` over ordered pairs with `i != j`, deduplicated.
/// The self-action of a polynomial on itself is excluded (it only ever
/// produces `x`). Degrees may drop; nothing is discarded for degree
/// reasons.
pub fn self_image(set: &PolySet) -> Result<PolySet> {
    if set.len() < 2 {
        return Err(Error::input("the self-image map needs at least two polynomials"));
    }
    let mut out = Vec::new();
    for f in set.members() {
        for g in set.members() {
            if f == g {
                continue;
            }
            out.push(wedge(f.poly(), g)?.h);
        }
    }
    PolySet::new(set.ctx(), out)
}

/// Stability: the set contains its self-image.
pub fn is_stable(set: &PolySet) -> Result<bool> {
    Ok(self_image(set)?.is_subset_of(set))
}

#[derive(Debug, Clone)]
pub enum OrbitEnd {
    /// The orbit entered a cycle; the states are listed in orbit order
    /// starting at the first recurrent state.
    Cycle(Vec<PolySet>),
    /// The orbit reached a set too small to act on itself (fewer than two
    /// members), which is terminal.
    Collapsed(PolySet),
}

#[derive(Debug, Clone)]
pub struct OrbitInfo {
    /// Steps taken before the cycle (or the collapsed state) is reached.
    pub transient: usize,
    pub end: OrbitEnd,
}

impl OrbitInfo {
    /// Minimal period, or `None` for collapsed orbits.
    pub fn period(&self) -> Option<usize> {
        match &self.end {
            OrbitEnd::Cycle(states) => Some(states.len()),
            OrbitEnd::Collapsed(_) => None,
        }
    }
}

/// Iterate the self-image map from `start` until a state recurs or the
/// set collapses, recording every visited state (orbits at this scale are
/// short). `max_steps` is a safety bound.
pub fn orbit(start: &PolySet, max_steps: usize) -> Result<OrbitInfo> {
    if !start.ctx().is_finite() {
        return Err(Error::input("orbit detection needs a finite field"));
    }
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut states: Vec<PolySet> = vec![start.clone()];
    seen.insert(start.encoding(), 0);
    let mut cur = start.clone();
    for step in 1..=max_steps {
        if cur.len() < 2 {
            return Ok(OrbitInfo {
                transient: step - 1,
                end: OrbitEnd::Collapsed(cur),
            });
        }
        cur = self_image(&cur)?;
        if cur.len() < 2 {
            return Ok(OrbitInfo {
                transient: step,
                end: OrbitEnd::Collapsed(cur),
            });
        }
        if let Some(&first) = seen.get(&cur.encoding()) {
            let cycle = states[first..].to_vec();
            return Ok(OrbitInfo { transient: first, end: OrbitEnd::Cycle(cycle) });
        }
        seen.insert(cur.encoding(), step);
        states.push(cur.clone());
    }
    Err(Error::input(format!(
        "orbit did not close within {max_steps} steps"
    )))
}

/// One stable unordered pair with its classification.
#[derive(Debug, Clone)]
pub struct StablePair {
    pub f: IrrPoly,
    pub g: IrrPoly,
    pub class: TwoSetType,
}

#[derive(Debug, Clone)]
pub struct StableReport {
    pub q: u64,
    pub degree: usize,
    pub universe: usize,
    pub count_i: u64,
    pub count_ii: u64,
    pub count_iii: u64,
    pub pairs: Vec<StablePair>,
}

/// Exhaustive sweep over unordered pairs of monic irreducibles of degree
/// `n`, classifying every stable pair.
pub fn enumerate_stable_2sets(ctx: &FieldCtx, n: usize) -> Result<StableReport> {
    let q = ctx
        .order()
        .ok_or_else(|| Error::input("stable-set enumeration needs a finite field"))?;
    let all: Vec<IrrPoly> = enumerate_irreducibles(ctx, n)?.collect();
    let mut report = StableReport {
        q,
        degree: n,
        universe: all.len(),
        count_i: 0,
        count_ii: 0,
        count_iii: 0,
        pairs: Vec::new(),
    };
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let (f, g) = (&all[i], &all[j]);
            let w_fg = wedge(f.poly(), g)?.h;
            if &w_fg != f && &w_fg != g {
                continue; // already unstable; skip the second wedge
            }
            let w_gf = wedge(g.poly(), f)?.h;
            let class = classify_from_wedges(f, g, &w_fg, &w_gf);
            match class {
                TwoSetType::TypeI => report.count_i += 1,
                TwoSetType::TypeII => report.count_ii += 1,
                TwoSetType::TypeIII { .. } => report.count_iii += 1,
                TwoSetType::Unstable => continue,
            }
            report.pairs.push(StablePair { f: f.clone(), g: g.clone(), class });
        }
    }
    Ok(report)
}

/// Directed graph on a polynomial set: an arc `(g, h)` exists when some
/// vertex `f` satisfies `f ▷ g = h`, and carries the set `ω` of all such
/// actors. The acted-on polynomial may act on itself here (unlike in the
/// self-image map); `g ▷ g = x` simply never lands in a set that excludes
/// `x`.
#[derive(Debug, Clone)]
pub struct PolyGraph {
    pub vertices: Vec<IrrPoly>,
    pub arcs: Vec<GraphArc>,
}

/// Arc `vertices[from] -> vertices[to]` with actor indices `omega`.
#[derive(Debug, Clone)]
pub struct GraphArc {
    pub from: usize,
    pub to: usize,
    pub omega: Vec<usize>,
}

impl PolyGraph {
    pub fn arc(&self, from: usize, to: usize) -> Option<&GraphArc> {
        self.arcs.iter().find(|a| a.from == from && a.to == to)
    }
}

pub fn build_graph(set: &PolySet) -> Result<PolyGraph> {
    if set.is_empty() {
        return Err(Error::input("graphs need at least one vertex"));
    }
    let vertices: Vec<IrrPoly> = set.members().to_vec();
    let index: BTreeMap<&IrrPoly, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut arcs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, f) in vertices.iter().enumerate() {
        for (gi, g) in vertices.iter().enumerate() {
            let h = wedge(f.poly(), g)?.h;
            if let Some(&hi) = index.get(&h) {
                arcs.entry((gi, hi)).or_default().push(fi);
            }
        }
    }
    let arcs = arcs
        .into_iter()
        .map(|((from, to), mut omega)| {
            omega.sort_unstable();
            omega.dedup();
            GraphArc { from, to, omega }
        })
        .collect();
    Ok(PolyGraph { vertices, arcs })
}
