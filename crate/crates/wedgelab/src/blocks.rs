//! Blocks: orbits of irreducible polynomials under root shifts by ground
//! field elements, `f(x) -> f(x + b)`.
//!
//! All members of a block share one discriminant, so over a quadratic
//! extension blocks are classified by their discriminant. Wedging a block
//! member against its own shift is independent of the member chosen, which
//! makes the block self-map well defined; for quadratics (odd
//! characteristic) the induced block graph is complete and the shift maps
//! form a permutation group isomorphic to the squares of the field.

use std::collections::{BTreeMap, HashSet};

use num::bigint::{BigInt, BigUint};
use num::Zero;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};
use crate::numth;
use crate::poly::{enumerate_irreducibles, IrrPoly, Poly};
use crate::wedge::wedge;

/// A maximal set of irreducibles whose roots differ by ground field
/// elements, with the shared discriminant and the canonical (least)
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    rep: IrrPoly,
    members: Vec<IrrPoly>, // sorted, deduplicated
    disc: Fe,
}

impl Block {
    pub fn rep(&self) -> &IrrPoly {
        &self.rep
    }

    pub fn members(&self) -> &[IrrPoly] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn degree(&self) -> usize {
        self.rep.degree()
    }

    pub fn disc(&self) -> &Fe {
        &self.disc
    }

    pub fn contains(&self, f: &IrrPoly) -> bool {
        self.members.binary_search(f).is_ok()
    }
}

/// The block of `f`: all shifts `f(x + b)` over the ground field,
/// deduplicated. Finite fields only (over Q the orbit is infinite; the
/// shift itself is exposed through [`IrrPoly::shift`]).
pub fn block_of(f: &IrrPoly) -> Result<Block> {
    let ctx = f.ctx().clone();
    let q = ctx
        .order()
        .ok_or_else(|| Error::input("blocks are only materialized over finite fields"))?;
    let mut members: Vec<IrrPoly> = (0..q).map(|i| f.shift(&ctx.element(i))).collect();
    members.sort();
    members.dedup();
    let disc = f.disc().clone();
    if members.iter().any(|m| m.disc() != &disc) {
        return Err(Error::internal("block members must share one discriminant"));
    }
    debug_assert_eq!(q as usize % members.len(), 0);
    Ok(Block {
        rep: members[0].clone(),
        members,
        disc,
    })
}

/// Disjoint block cover of all monic irreducibles of degree `n`.
pub fn partition_blocks(ctx: &FieldCtx, n: usize) -> Result<Vec<Block>> {
    let mut seen: HashSet<IrrPoly> = HashSet::new();
    let mut blocks = Vec::new();
    for f in enumerate_irreducibles(ctx, n)? {
        if seen.contains(&f) {
            continue;
        }
        let block = block_of(&f)?;
        for m in block.members() {
            seen.insert(m.clone());
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Closed-form block count `(1/nq) sum_{d|n} mu(d) q^(n/d)`, valid for
/// `gcd(q, n) = 1` and `n > 1` (then every block has exactly `q` members).
pub fn count_blocks_formula(q: u64, n: u32) -> Result<BigUint> {
    if n <= 1 {
        return Err(Error::input("block count formula needs degree n > 1"));
    }
    if numth::gcd(q, n as u64) != 1 {
        return Err(Error::input(
            "block count formula needs gcd(q, n) = 1 (otherwise blocks vary in size)",
        ));
    }
    let mut acc = BigInt::zero();
    for d in numth::divisors(n as u64) {
        acc += BigInt::from(q).pow(n / d as u32) * numth::mobius(d);
    }
    let denom = BigInt::from(n) * BigInt::from(q);
    let (quot, rem) = num::Integer::div_rem(&acc, &denom);
    if !rem.is_zero() {
        return Err(Error::internal("block count formula must divide exactly"));
    }
    Ok(quot.to_biguint().expect("count is nonnegative"))
}

/// The block self-map: send the block of `f` to the block of
/// `f ▷ f(x + b)`, `b != 0`. Independent of the representative.
pub fn block_map(theta: &Block, b: &Fe) -> Result<Block> {
    let ctx = theta.rep.ctx();
    if ctx.is_zero(b) {
        return Err(Error::input("block map needs a nonzero shift"));
    }
    let f = theta.rep();
    let image = wedge(f.poly(), &f.shift(b))?.h;
    block_of(&image)
}

/// The unique right-left wedge invariant inside a quadratic block over odd
/// characteristic: `θ(x) = (x - 1/4)^2 - Δ/4` for the block discriminant Δ.
pub fn block_centre(theta: &Block) -> Result<IrrPoly> {
    let ctx = theta.rep.ctx().clone();
    if theta.degree() != 2 {
        return Err(Error::input("block centres exist for quadratic blocks"));
    }
    if ctx.characteristic() == 2 {
        return Err(Error::input("block centres need odd characteristic"));
    }
    let quarter = ctx.inv(&ctx.from_u64(4))?;
    let half = ctx.inv(&ctx.from_u64(2))?;
    // (x - 1/4)^2 - disc/4 = x^2 - (1/2) x + 1/16 - disc/4
    let constant = ctx.sub(
        &ctx.mul(&quarter, &quarter),
        &ctx.mul(theta.disc(), &quarter),
    );
    let centre = Poly::from_coeffs(&ctx, vec![constant, ctx.neg(&half), ctx.one()]);
    let centre = IrrPoly::new(centre)
        .map_err(|e| Error::internal(format!("block centre must be irreducible: {e}")))?;
    if !theta.contains(&centre) {
        return Err(Error::internal("block centre must lie in its block"));
    }
    Ok(centre)
}

/// Directed graph on blocks: an arc `Θ -> Θ'` carries every nonzero shift
/// `b` with `F_b(Θ) = Θ'`. Vertices cover the degree-`n` blocks plus any
/// lower-degree blocks their self-images fall into.
#[derive(Debug, Clone)]
pub struct BlockGraph {
    pub blocks: Vec<Block>,
    pub arcs: Vec<BlockArc>,
}

#[derive(Debug, Clone)]
pub struct BlockArc {
    pub from: usize,
    pub to: usize,
    pub shifts: Vec<Fe>,
}

pub fn build_block_graph(ctx: &FieldCtx, n: usize) -> Result<BlockGraph> {
    let q = ctx
        .order()
        .ok_or_else(|| Error::input("block graphs need a finite field"))?;
    let mut blocks = partition_blocks(ctx, n)?;
    let primary = blocks.len();
    let mut index: BTreeMap<IrrPoly, usize> =
        blocks.iter().enumerate().map(|(i, b)| (b.rep.clone(), i)).collect();
    let mut arcs: BTreeMap<(usize, usize), Vec<Fe>> = BTreeMap::new();
    for from in 0..primary {
        for bi in 1..q {
            let b = ctx.element(bi);
            let image = block_map(&blocks[from], &b)?;
            let to = match index.get(&image.rep) {
                Some(&i) => i,
                None => {
                    // the self-image dropped degree; record its block too
                    blocks.push(image.clone());
                    index.insert(image.rep.clone(), blocks.len() - 1);
                    blocks.len() - 1
                }
            };
            arcs.entry((from, to)).or_default().push(b);
        }
    }
    let arcs = arcs
        .into_iter()
        .map(|((from, to), shifts)| BlockArc { from, to, shifts })
        .collect();
    Ok(BlockGraph { blocks, arcs })
}
