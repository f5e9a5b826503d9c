//! Dense univariate polynomials over a [`FieldCtx`]: ring arithmetic,
//! irreducibility testing, discriminants and resultants, enumeration of
//! monic irreducibles, and the affine substitution action
//! `f(x) -> a^(-deg f) f(ax + b)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};
use crate::numth;

/// Coefficients ascending by degree, trailing zeros stripped; the zero
/// polynomial has an empty coefficient vector (its degree is `None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<Fe>,
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        // lower degree first, then coefficient vectors with the constant
        // term most significant
        (self.coeffs.len(), &self.coeffs).cmp(&(other.coeffs.len(), &other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx, ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly::from_coeffs(ctx, vec![ctx.zero(), ctx.one()])
    }

    pub fn constant(ctx: &FieldCtx, c: Fe) -> Poly {
        Poly::from_coeffs(ctx, vec![c])
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(ctx: &FieldCtx, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().map(|c| ctx.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { ctx: ctx.clone(), coeffs }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(ctx, coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading_coeff(&self) -> Option<&Fe> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map(|c| self.ctx.is_one(c)).unwrap_or(false)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(&self.ctx, self.coeffs.iter().map(|c| self.ctx.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ctx.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.ctx.add(&out[i + j], &self.ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn scale(&self, c: &Fe) -> Poly {
        Poly::from_coeffs(
            &self.ctx,
            self.coeffs.iter().map(|a| self.ctx.mul(a, c)).collect(),
        )
    }

    /// Monic associate. Errors on the zero polynomial.
    pub fn to_monic(&self) -> Result<Poly> {
        let lc = self
            .leading_coeff()
            .ok_or_else(|| Error::input("zero polynomial has no monic associate"))?;
        if self.ctx.is_one(lc) {
            return Ok(self.clone());
        }
        let inv = self.ctx.inv(lc)?;
        Ok(self.scale(&inv))
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::input("division by the zero polynomial"))?;
        let lc_inv = self.ctx.inv(divisor.leading_coeff().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![self.ctx.zero(); rem.len() - dd];
        while rem.len() > dd {
            let lead = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            if !self.ctx.is_zero(&lead) {
                let c = self.ctx.mul(&lead, &lc_inv);
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = self.ctx.mul(&c, b);
                    rem[i + shift] = self.ctx.sub(&rem[i + shift], &t);
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().map(|c| self.ctx.is_zero(c)).unwrap_or(false) {
                rem.pop();
            }
        }
        Ok((
            Poly::from_coeffs(&self.ctx, quot),
            Poly::from_coeffs(&self.ctx, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::input("inexact polynomial division"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.to_monic().expect("nonzero")
        }
    }

    pub fn eval(&self, at: &Fe) -> Fe {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ctx.add(&self.ctx.mul(&acc, at), c);
        }
        acc
    }

    /// `f(g(x))` by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(&self.ctx, c.clone()));
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ctx.mul(&self.ctx.from_u64(i as u64), c))
            .collect();
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// `base^e mod m` for monic `m` of positive degree.
pub(crate) fn powmod_poly(base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let ctx = base.ctx();
    let mut acc = Poly::one(ctx).rem(m).expect("nonzero modulus");
    let mut b = base.rem(m).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m).expect("nonzero modulus");
        }
        b = b.mul(&b).rem(m).expect("nonzero modulus");
        e >>= 1;
    }
    acc
}

/// Resultant `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots of
/// `f`, computed by a Euclidean remainder chain (no root extraction).
/// For monic `g`, `Res(g, f)` is the product of `f` over the roots of `g`.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Fe> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::input("resultant of the zero polynomial"));
    }
    let ctx = f.ctx().clone();
    let mut a = f.clone();
    let mut b = g.clone();
    let mut sign_flips = 0u64;
    let mut scale = ctx.one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if da == 0 {
            // Res(c, b) = c^deg(b)
            let c = ctx.pow(a.leading_coeff().unwrap(), db as u64);
            let mut out = ctx.mul(&scale, &c);
            if sign_flips % 2 == 1 {
                out = ctx.neg(&out);
            }
            return Ok(out);
        }
        if db == 0 {
            let c = ctx.pow(b.leading_coeff().unwrap(), da as u64);
            let mut out = ctx.mul(&scale, &c);
            if sign_flips % 2 == 1 {
                out = ctx.neg(&out);
            }
            return Ok(out);
        }
        if da > db {
            // Res(a, b) = (-1)^(da db) Res(b, a)
            if (da * db) % 2 == 1 {
                sign_flips += 1;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // da <= db: Res(a, b) = lc(a)^(db - dr) Res(a, r) with r = b mod a
        let r = b.rem(&a)?;
        if r.is_zero() {
            return Ok(ctx.zero());
        }
        let dr = r.degree().unwrap();
        let factor = ctx.pow(a.leading_coeff().unwrap(), (db - dr) as u64);
        scale = ctx.mul(&scale, &factor);
        b = r;
    }
}

/// Discriminant of a monic polynomial of degree `n >= 1`, with the sign
/// convention `disc(f) = (-1)^(n(n-1)/2) Res(f, f')`. A quadratic
/// `x^2 + bx + c` yields `b^2 - 4c`; degree one yields 1.
pub fn discriminant(f: &Poly) -> Result<Fe> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::input("discriminant needs degree at least 1"))?;
    if !f.is_monic() {
        return Err(Error::input("discriminant convention fixed for monic input"));
    }
    let ctx = f.ctx().clone();
    let fp = f.derivative();
    if fp.is_zero() {
        return Ok(ctx.zero()); // inseparable (char p divides every exponent)
    }
    let res = resultant(f, &fp)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        ctx.neg(&res)
    } else {
        res
    })
}

/// Irreducibility over the coefficient field.
///
/// Finite fields use the deterministic distinct-degree criterion:
/// `f` of degree `n` is irreducible iff `x^(q^n) = x (mod f)` and
/// `gcd(x^(q^(n/l)) - x, f) = 1` for every prime `l | n`. Over the
/// rationals, degree is capped at 8 and the test combines modular
/// factorization patterns with a bounded integer-factor search.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::input("irreducibility needs degree at least 1"))?;
    if n == 1 {
        return Ok(true);
    }
    let monic = f.to_monic()?;
    if f.ctx().is_finite() {
        Ok(is_irreducible_finite(&monic))
    } else {
        is_irreducible_rational(&monic)
    }
}

fn is_irreducible_finite(f: &Poly) -> bool {
    let ctx = f.ctx();
    let q = ctx.order().expect("finite field");
    let n = f.degree().unwrap();
    if n == 1 {
        return true;
    }
    // monic quadratic over odd q: irreducible iff the discriminant is a
    // non-square
    if n == 2 && q % 2 == 1 {
        let b = f.coeff(1);
        let disc = ctx.sub(&ctx.mul(&b, &b), &ctx.mul(&ctx.from_u64(4), &f.coeff(0)));
        return !ctx.is_square(&disc).expect("finite field");
    }
    // small fields: a root scan is cheaper than the Frobenius ladder and
    // settles degrees 2 and 3 outright
    if q <= 64 {
        if (0..q).any(|i| ctx.is_zero(&f.eval(&ctx.element(i)))) {
            return false;
        }
        if n <= 3 {
            return true;
        }
    }
    let x = Poly::x(ctx);
    let checks: Vec<usize> = numth::factorize(n as u64)
        .iter()
        .map(|&(l, _)| n / l as usize)
        .collect();
    let mut y = x.rem(f).expect("positive degree");
    for m in 1..=n {
        y = powmod_poly(&y, q, f);
        if checks.contains(&m) {
            let g = y.sub(&x).gcd(f);
            if g.degree() != Some(0) {
                return false;
            }
        }
    }
    y == x.rem(f).unwrap()
}

/// Degrees (with multiplicity) of the irreducible factors of a monic
/// squarefree polynomial over a finite field, by distinct-degree splitting.
fn factor_degree_multiset(f: &Poly) -> Vec<usize> {
    let ctx = f.ctx();
    let q = ctx.order().expect("finite field");
    let x = Poly::x(ctx);
    let mut rest = f.clone();
    let mut degs = Vec::new();
    let mut h = x.rem(&rest).expect("positive degree");
    let mut d = 0usize;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            degs.push(rest.degree().unwrap());
            break;
        }
        h = powmod_poly(&h, q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if let Some(dg) = g.degree().filter(|&dg| dg > 0) {
            for _ in 0..dg / d {
                degs.push(d);
            }
            rest = rest.div_exact(&g).expect("gcd divides");
            if rest.degree().unwrap_or(0) > 0 {
                h = h.rem(&rest).expect("positive degree");
            }
        }
    }
    degs.sort_unstable();
    degs
}

const RATIONAL_DEGREE_CAP: usize = 8;

fn is_irreducible_rational(f: &Poly) -> Result<bool> {
    let n = f.degree().unwrap();
    if n > RATIONAL_DEGREE_CAP {
        return Err(Error::input(format!(
            "rational irreducibility supported up to degree {RATIONAL_DEGREE_CAP}"
        )));
    }
    // repeated factors mean reducible (char 0)
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Ok(false);
    }
    let z = integralize_monic(f);
    if z[0].is_zero() {
        return Ok(false); // x divides
    }
    // integer roots must divide the constant term
    for d in divisors_of_bigint(&z[0])? {
        for root in [BigInt::from(d), -BigInt::from(d)] {
            if eval_bigint(&z, &root).is_zero() {
                return Ok(false);
            }
        }
    }
    if n <= 3 {
        return Ok(true);
    }
    // candidate proper factor degrees, narrowed by factorization patterns
    // modulo primes where the reduction stays separable
    let mut candidates: BTreeSet<usize> = (2..=n / 2).collect();
    let mut usable = 0;
    for p in numth::PrimeStream::new() {
        if usable >= 20 || candidates.is_empty() {
            break;
        }
        let ctx_p = FieldCtx::prime(p)?;
        let fp = Poly::from_coeffs(
            &ctx_p,
            z.iter().map(|c| bigint_mod_p(c, p)).map(Fe::Prime).collect(),
        );
        if fp.degree() != Some(n) {
            continue; // cannot happen for monic input, kept for clarity
        }
        if fp.gcd(&fp.derivative()).degree() != Some(0) {
            continue; // not separable mod p
        }
        usable += 1;
        let degs = factor_degree_multiset(&fp);
        if degs == [n] {
            return Ok(true);
        }
        let sums = subset_sums(&degs, n);
        candidates.retain(|d| sums[*d]);
    }
    if candidates.is_empty() {
        return Ok(true);
    }
    // bounded search for an actual monic integer factor (Kronecker)
    for &d in &candidates {
        if kronecker_factor_exists(&z, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monic rational polynomial -> monic integer polynomial with the same
/// factorization shape, via `x -> x / d` and rescaling.
fn integralize_monic(f: &Poly) -> Vec<BigInt> {
    let n = f.degree().unwrap();
    let mut den = BigInt::one();
    for c in f.coeffs() {
        if let Fe::Rat(r) = c {
            den = den.lcm(r.denom());
        }
    }
    (0..=n)
        .map(|i| match f.coeff(i) {
            Fe::Rat(r) => {
                let scaled = &*r * num::BigRational::from_integer(den.pow((n - i) as u32));
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            }
            _ => unreachable!("rational context"),
        })
        .collect()
}

fn eval_bigint(coeffs: &[BigInt], at: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * at + c;
    }
    acc
}

fn bigint_mod_p(c: &BigInt, p: u64) -> u64 {
    let m = (c % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn divisors_of_bigint(v: &BigInt) -> Result<Vec<u64>> {
    let mag = v.abs();
    if mag > BigInt::from(1_000_000_000_000u64) {
        return Err(Error::input(
            "rational irreducibility certificate out of supported range",
        ));
    }
    let (_, digits) = mag.to_u64_digits();
    Ok(numth::divisors(digits.first().copied().unwrap_or(0).max(1)))
}

fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degs {
        for s in (0..=n.saturating_sub(d)).rev() {
            if reach[s] {
                reach[s + d] = true;
            }
        }
    }
    reach
}

/// Kronecker's method specialized to monic integer factors of degree `d`:
/// a factor's values at `d + 1` points divide the values of `f` there, so
/// interpolate every divisor combination and test divisibility.
fn kronecker_factor_exists(z: &[BigInt], d: usize) -> Result<bool> {
    let ctx = FieldCtx::rationals();
    let points: Vec<i64> = (0..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .take(d + 1)
        .collect();
    let mut divisor_lists: Vec<Vec<i64>> = Vec::new();
    let mut combos = 1usize;
    for &pt in &points {
        let val = eval_bigint(z, &BigInt::from(pt));
        let mut ds = Vec::new();
        for u in divisors_of_bigint(&val)? {
            ds.push(u as i64);
            ds.push(-(u as i64));
        }
        combos = combos.saturating_mul(ds.len());
        divisor_lists.push(ds);
    }
    if combos > 500_000 {
        return Err(Error::input(
            "rational irreducibility certificate out of supported range",
        ));
    }
    let f_q = Poly::from_coeffs(
        &ctx,
        z.iter()
            .map(|c| ctx.from_rational(c.clone(), BigInt::one()).unwrap())
            .collect(),
    );
    let mut pick = vec![0usize; points.len()];
    loop {
        let values: Vec<i64> = pick
            .iter()
            .zip(&divisor_lists)
            .map(|(&i, ds)| ds[i])
            .collect();
        if let Some(g) = interpolate_integer(&ctx, &points, &values, d) {
            if f_q.rem(&g).map(|r| r.is_zero()).unwrap_or(false) {
                return Ok(true);
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(false);
            }
            pick[i] += 1;
            if pick[i] < divisor_lists[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation; returns the polynomial only if it is monic of
/// degree exactly `d` with integer coefficients.
fn interpolate_integer(ctx: &FieldCtx, points: &[i64], values: &[i64], d: usize) -> Option<Poly> {
    let mut acc = Poly::zero(ctx);
    for (i, (&xi, &yi)) in points.iter().zip(values).enumerate() {
        let mut basis = Poly::constant(ctx, ctx.from_i64(yi));
        for (j, &xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = ctx.from_i64(xi - xj);
            let lin = Poly::from_coeffs(ctx, vec![ctx.from_i64(-xj), ctx.one()]);
            basis = basis.mul(&lin).scale(&ctx.inv(&denom).unwrap());
        }
        acc = acc.add(&basis);
    }
    if acc.degree() != Some(d) || !acc.is_monic() {
        return None;
    }
    let integral = acc.coeffs().iter().all(|c| match c {
        Fe::Rat(r) => r.is_integer(),
        _ => false,
    });
    integral.then_some(acc)
}

/// Exact count of monic irreducibles of degree `n` over `F_q`, by the
/// Möbius sum `(1/n) sum_{d|n} mu(d) q^(n/d)` in arbitrary precision.
pub fn count_irreducibles(q: u64, n: u32) -> BigUint {
    assert!(n >= 1);
    let mut acc = BigInt::zero();
    for d in numth::divisors(n as u64) {
        let term = BigInt::from(q).pow(n / d as u32);
        acc += term * numth::mobius(d);
    }
    (acc / BigInt::from(n))
        .to_biguint()
        .expect("Möbius sum of irreducible counts is nonnegative")
}

/// A monic polynomial certified irreducible, with its (nonzero)
/// discriminant cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrPoly {
    poly: Poly,
    disc: Fe,
}

impl IrrPoly {
    /// Validates monicity, irreducibility, and separability.
    pub fn new(poly: Poly) -> Result<IrrPoly> {
        if !poly.is_monic() {
            return Err(Error::input("irreducible polynomials are kept monic"));
        }
        if !is_irreducible(&poly)? {
            return Err(Error::input(format!(
                "polynomial is not irreducible: {poly}"
            )));
        }
        let disc = discriminant(&poly)?;
        if poly.degree() != Some(1) && poly.ctx().is_zero(&disc) {
            return Err(Error::input("inseparable polynomial (zero discriminant)"));
        }
        Ok(IrrPoly { poly, disc })
    }

    /// For callers that have already certified irreducibility (the
    /// enumeration sieve; its output is cross-checked against the counting
    /// formula and the per-candidate test elsewhere).
    pub(crate) fn new_certified(poly: Poly) -> IrrPoly {
        debug_assert!(poly.is_monic());
        let disc = discriminant(&poly).expect("monic, positive degree");
        IrrPoly { poly, disc }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn disc(&self) -> &Fe {
        &self.disc
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.poly.ctx()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("irreducible implies positive degree")
    }

    /// Root shift `f(x + b)`: the polynomial whose roots are the roots of
    /// `f` minus `b`... equivalently the orbit move `x -> x + b`.
    pub fn shift(&self, b: &Fe) -> IrrPoly {
        affine_apply(&self.ctx().one(), b, self).expect("shift preserves irreducibility")
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }
}

/// The substitution action `f(x) -> a^(-deg f) f(ax + b)` for `a != 0`;
/// preserves degree, monicity, and irreducibility, and rescales the
/// discriminant by `a^(n(n-1))`.
pub fn affine_apply(a: &Fe, b: &Fe, f: &IrrPoly) -> Result<IrrPoly> {
    let ctx = f.ctx().clone();
    if ctx.is_zero(a) {
        return Err(Error::input("affine substitution needs a != 0"));
    }
    let n = f.degree();
    let lin = Poly::from_coeffs(&ctx, vec![b.clone(), a.clone()]);
    let composed = f.poly().compose(&lin);
    let scale = ctx.pow(&ctx.inv(a)?, n as u64);
    let image = composed.scale(&scale);
    debug_assert!(image.is_monic() && image.degree() == Some(n));
    IrrPoly::new(image).map_err(|e| {
        Error::internal(format!("affine image of an irreducible must be irreducible: {e}"))
    })
}

/// Stream of every monic irreducible of degree `n` over a finite field, in
/// lexicographic coefficient order (constant term most significant).
///
/// Desk-sized coefficient spaces are sieved: every product of a
/// lower-degree irreducible with a monic cofactor is marked composite in a
/// bitset and the survivors stream out. Larger spaces fall back to testing
/// each candidate.
pub fn enumerate_irreducibles(ctx: &FieldCtx, n: usize) -> Result<IrreducibleIter> {
    if !ctx.is_finite() {
        return Err(Error::input("enumeration needs a finite field"));
    }
    if n < 1 {
        return Err(Error::input("degree must be at least 1"));
    }
    let q = ctx.order().unwrap();
    let total = q.checked_pow(n as u32).ok_or_else(|| {
        Error::input("coefficient space does not fit in 64 bits")
    })?;
    const SIEVE_LIMIT: u64 = 1 << 26;
    let composite = (total <= SIEVE_LIMIT).then(|| sieve_composites(ctx, n, total));
    Ok(IrreducibleIter {
        ctx: ctx.clone(),
        n,
        idx: 0,
        total,
        composite,
    })
}

/// Bitset over the monic degree-`n` coefficient space marking everything
/// with an irreducible factor of degree at most n/2, i.e. every monic
/// reducible.
fn sieve_composites(ctx: &FieldCtx, n: usize, total: u64) -> Vec<u64> {
    let mut bits = vec![0u64; (total as usize).div_ceil(64)];
    for d in 1..=n / 2 {
        let factors: Vec<IrrPoly> =
            enumerate_irreducibles(ctx, d).expect("finite, d >= 1").collect();
        let cofactors = ctx.order().unwrap().pow((n - d) as u32);
        for g in &factors {
            for hidx in 0..cofactors {
                let h = monic_from_index(ctx, n - d, hidx);
                let prod = g.poly().mul(&h);
                let idx = monic_to_index(ctx, &prod);
                bits[(idx / 64) as usize] |= 1 << (idx % 64);
            }
        }
    }
    bits
}

/// Monic polynomial of degree `n` whose low coefficients, read constant
/// term first, are the base-q digits of `idx` (most significant first).
fn monic_from_index(ctx: &FieldCtx, n: usize, idx: u64) -> Poly {
    let q = ctx.order().unwrap();
    let mut coeffs = vec![ctx.zero(); n + 1];
    coeffs[n] = ctx.one();
    let mut rest = idx;
    for slot in (0..n).rev() {
        coeffs[slot] = ctx.element(rest % q);
        rest /= q;
    }
    // sites always pass idx < q^n
    debug_assert_eq!(rest, 0);
    Poly { ctx: ctx.clone(), coeffs }
}

fn monic_to_index(ctx: &FieldCtx, f: &Poly) -> u64 {
    debug_assert!(f.is_monic());
    let n = f.degree().unwrap();
    let q = ctx.order().unwrap();
    (0..n).fold(0u64, |acc, i| acc * q + ctx.element_index(&f.coeff(i)))
}

pub struct IrreducibleIter {
    ctx: FieldCtx,
    n: usize,
    idx: u64,
    total: u64,
    composite: Option<Vec<u64>>,
}

impl Iterator for IrreducibleIter {
    type Item = IrrPoly;

    fn next(&mut self) -> Option<IrrPoly> {
        loop {
            if self.idx >= self.total {
                return None;
            }
            let idx = self.idx;
            self.idx += 1;
            match &self.composite {
                Some(bits) => {
                    if bits[(idx / 64) as usize] >> (idx % 64) & 1 == 0 {
                        let f = monic_from_index(&self.ctx, self.n, idx);
                        return Some(IrrPoly::new_certified(f));
                    }
                }
                None => {
                    let f = monic_from_index(&self.ctx, self.n, idx);
                    if is_irreducible_finite(&f) {
                        return Some(IrrPoly::new_certified(f));
                    }
                }
            }
        }
    }
}
