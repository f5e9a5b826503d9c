//! Dynamics of a single polynomial and the classification of stable
//! 2-sets.
//!
//! The roots of a right wedge invariant of `f` (that is, `f ▷ g = g`) are
//! periodic points of `f`; the dynatomic polynomial of period `n` isolates
//! the points of essential period exactly `n` via a Möbius product over
//! `f^d(x) - x`. Left invariants (`g ▷ f = g`) come from preimages of zero
//! instead.

use std::fmt;

use crate::error::{Error, Result};
use crate::numth;
use crate::poly::{is_irreducible, IrrPoly, Poly};
use crate::wedge::wedge;

/// `n`-fold composition of `f` with itself; the zeroth iterate is `x`.
pub fn iterate(f: &Poly, n: u32) -> Poly {
    let mut acc = Poly::x(f.ctx());
    for _ in 0..n {
        acc = f.compose(&acc);
    }
    acc
}

/// Dynatomic polynomial of period `n`: the Möbius product over divisors
/// `d | n` of `(f^d(x) - x)^mu(n/d)`, evaluated as one exact division of
/// polynomial products. The division must leave no remainder; anything
/// else signals degenerate input.
pub fn dynatomic(f: &Poly, n: u32) -> Result<Poly> {
    if n < 1 {
        return Err(Error::input("dynatomic period must be at least 1"));
    }
    let ctx = f.ctx();
    let x = Poly::x(ctx);
    let mut numerator = Poly::one(ctx);
    let mut denominator = Poly::one(ctx);
    for d in numth::divisors(n as u64) {
        let term = iterate(f, d as u32).sub(&x);
        if term.is_zero() {
            return Err(Error::input(
                "dynatomic polynomial degenerates: f^d(x) = x identically",
            ));
        }
        match numth::mobius(n as u64 / d) {
            1 => numerator = numerator.mul(&term),
            -1 => denominator = denominator.mul(&term),
            _ => {}
        }
    }
    numerator.div_exact(&denominator)
}

/// `g` is a right invariant of `f` when `f ▷ g = g` (so `f` permutes the
/// roots of `g`).
pub fn is_right_invariant(f: &IrrPoly, g: &IrrPoly) -> Result<bool> {
    Ok(&wedge(f.poly(), g)?.h == g)
}

/// `g` is a left invariant of `f` when `g ▷ f = g` (the roots of `f` are
/// `g`-preimages of roots of `g`).
pub fn is_left_invariant(f: &IrrPoly, g: &IrrPoly) -> Result<bool> {
    Ok(&wedge(g.poly(), f)?.h == g)
}

/// Classification of an unordered pair `{f, g}` under the self-image map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoSetType {
    /// Two right invariants: `f ▷ g = g`, `g ▷ f = f`; a fixed 2-set.
    TypeI,
    /// Two left invariants: `f ▷ g = f`, `g ▷ f = g`; a fixed 2-set.
    TypeII,
    /// Mixed invariants; the self-image collapses onto the sink.
    TypeIII { sink: IrrPoly },
    /// The pair is not stable.
    Unstable,
}

impl TwoSetType {
    pub fn is_stable(&self) -> bool {
        !matches!(self, TwoSetType::Unstable)
    }

    pub fn label(&self) -> &'static str {
        match self {
            TwoSetType::TypeI => "I",
            TwoSetType::TypeII => "II",
            TwoSetType::TypeIII { .. } => "III",
            TwoSetType::Unstable => "none",
        }
    }
}

impl fmt::Display for TwoSetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Classify `{f, g}` by computing both wedges and pattern-matching.
pub fn classify_2set(f: &IrrPoly, g: &IrrPoly) -> Result<TwoSetType> {
    if f == g {
        return Err(Error::input("classification needs two distinct polynomials"));
    }
    let w_fg = wedge(f.poly(), g)?.h;
    let w_gf = wedge(g.poly(), f)?.h;
    Ok(classify_from_wedges(f, g, &w_fg, &w_gf))
}

/// Pattern table shared with the exhaustive enumerator (which computes the
/// wedges itself to short-circuit unstable pairs).
pub(crate) fn classify_from_wedges(
    f: &IrrPoly,
    g: &IrrPoly,
    w_fg: &IrrPoly,
    w_gf: &IrrPoly,
) -> TwoSetType {
    let fg_is_f = w_fg == f;
    let fg_is_g = w_fg == g;
    let gf_is_f = w_gf == f;
    let gf_is_g = w_gf == g;
    if fg_is_g && gf_is_f {
        TwoSetType::TypeI
    } else if fg_is_f && gf_is_g {
        TwoSetType::TypeII
    } else if fg_is_g && gf_is_g {
        TwoSetType::TypeIII { sink: g.clone() }
    } else if fg_is_f && gf_is_f {
        TwoSetType::TypeIII { sink: f.clone() }
    } else {
        TwoSetType::Unstable
    }
}

/// The family `{f(x^2), f(x^2) - x}` (characteristic not 2) or
/// `{f(x), f(x) - x}` (characteristic 2), stable of type I whenever both
/// members are irreducible.
#[derive(Debug, Clone)]
pub struct TypeIFamily {
    pub first: Poly,
    pub second: Poly,
    /// Both members irreducible, hence a genuine type I stable set.
    pub stable: bool,
}

pub fn type1_family(f: &Poly) -> Result<TypeIFamily> {
    if f.degree().unwrap_or(0) < 1 || !f.is_monic() {
        return Err(Error::input("the type I family needs a monic non-constant seed"));
    }
    let ctx = f.ctx();
    let first = if ctx.characteristic() == 2 {
        f.clone()
    } else {
        f.compose(&Poly::from_ints(ctx, &[0, 0, 1]))
    };
    let second = first.sub(&Poly::x(ctx));
    let stable = is_irreducible(&first).unwrap_or(false)
        && second.degree() == first.degree()
        && is_irreducible(&second).unwrap_or(false);
    Ok(TypeIFamily { first, second, stable })
}
