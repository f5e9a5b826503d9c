//! Field arithmetic: prime fields `F_p`, extension fields `F_{p^k}` behind a
//! fixed monic irreducible modulus, and arbitrary-precision rationals, all
//! behind one context type.
//!
//! A [`FieldCtx`] is immutable and cheap to clone (shared internals); all
//! element operations are pure functions, so contexts and elements can be
//! shared freely across threads.
//!
//! Canonical element order (used whenever a "least" representative is
//! needed): prime-field residues by integer value, extension elements by
//! coefficient vector with the constant term most significant, rationals by
//! (denominator, numerator).

use std::cmp::Ordering;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::numth;

/// Extension-field coefficient vector; inline for the small degrees this
/// crate lives at, spilling to the heap for larger ones.
pub type ExtCoeffs = SmallVec<[u64; 3]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Prime,
    Extension,
    Rational,
}

#[derive(Debug)]
struct Inner {
    kind: FieldKind,
    p: u64,            // characteristic; 0 for the rationals
    k: u32,            // extension degree; 1 for prime fields and Q
    q: u64,            // p^k; 0 for the rationals
    modulus: Vec<u64>, // monic irreducible over F_p, ascending, len k+1; empty otherwise
}

/// A field to compute in: `F_p`, `F_{p^k}`, or `Q`.
#[derive(Debug, Clone)]
pub struct FieldCtx(Arc<Inner>);

/// A field element in canonical form.
///
/// * `Prime(a)`: residue in `[0, p)`.
/// * `Ext(v)`: coefficient vector of length `k` over `F_p`, constant first.
/// * `Rat(r)`: reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fe {
    Prime(u64),
    Ext(ExtCoeffs),
    Rat(Box<BigRational>),
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.kind == other.0.kind
            && self.0.p == other.0.p
            && self.0.k == other.0.k
            && self.0.modulus == other.0.modulus
    }
}

impl Eq for FieldCtx {}

impl std::hash::Hash for FieldCtx {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.k.hash(state);
    }
}

impl Ord for Fe {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Fe::Prime(a), Fe::Prime(b)) => a.cmp(b),
            (Fe::Ext(a), Fe::Ext(b)) => a.cmp(b),
            (Fe::Rat(a), Fe::Rat(b)) => (a.denom(), a.numer()).cmp(&(b.denom(), b.numer())),
            // distinct variants never belong to one field; fall back to an
            // arbitrary but total order
            (Fe::Prime(_), _) => Ordering::Less,
            (_, Fe::Prime(_)) => Ordering::Greater,
            (Fe::Ext(_), _) => Ordering::Less,
            (_, Fe::Ext(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Raw polynomial arithmetic over F_p on bare coefficient vectors
/// (ascending, trailing zeros trimmed). Used for modulus selection and
/// extension-field element arithmetic.
mod fp {
    use super::{mulmod, powmod};

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(ai, bj, p)) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder modulo a monic divisor.
    pub fn rem_monic(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
        debug_assert!(m.last() == Some(&1));
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let c = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = mulmod(c, mi, p);
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
            trim(&mut r); // the top coefficient cancelled
        }
        r
    }

    pub fn make_monic(p: u64, a: &[u64]) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = powmod(lc, p - 2, p);
                a.iter().map(|&c| mulmod(c, inv, p)).collect()
            }
        }
    }

    pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let ym = make_monic(p, &y);
            let r = rem_monic(p, &x, &ym);
            x = ym;
            y = r;
        }
        make_monic(p, &x)
    }

    /// Inverse of `a` modulo the monic polynomial `m`, by extended Euclid.
    /// Returns `None` when gcd(a, m) != 1.
    pub fn inv_mod(p: u64, a: &[u64], m: &[u64]) -> Option<Vec<u64>> {
        // invariants: r0 = s0 * a (mod m), r1 = s1 * a (mod m)
        let mut r0 = m.to_vec();
        let mut r1 = rem_monic(p, a, m);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let lc = *r1.last().unwrap();
            let lc_inv = powmod(lc, p - 2, p);
            // divide r0 by r1: long division, tracking the combination
            let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
            let mut rem = r0.clone();
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let c = mulmod(*rem.last().unwrap(), lc_inv, p);
                q[shift] = c;
                for (i, &bi) in r1.iter().enumerate() {
                    let idx = i + shift;
                    rem[idx] = (rem[idx] + p - mulmod(c, bi, p)) % p;
                }
                trim(&mut rem);
            }
            trim(&mut q);
            // (r0, r1) <- (r1, r0 - q r1); (s0, s1) <- (s1, s0 - q s1)
            let qs1 = mul(p, &q, &s1);
            let mut s2 = sub(p, &s0, &qs1);
            s2 = rem_monic(p, &s2, m);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None; // gcd has positive degree
        }
        let scale = powmod(r0[0], p - 2, p);
        Some(s0.iter().map(|&c| mulmod(c, scale, p)).collect())
    }

    pub fn sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let ai = a.get(i).copied().unwrap_or(0);
                let bi = b.get(i).copied().unwrap_or(0);
                (ai + p - bi) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mulmod_poly(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        rem_monic(p, &mul(p, a, b), m)
    }

    /// `base^e mod m` with u64 exponent.
    pub fn powmod_poly(p: u64, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem_monic(p, base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod_poly(p, &acc, &b, m);
            }
            b = mulmod_poly(p, &b, &b, m);
            e >>= 1;
        }
        acc
    }

    /// Deterministic irreducibility over F_p: `f` monic of degree n is
    /// irreducible iff x^(p^n) = x (mod f) and gcd(x^(p^(n/l)) - x, f) = 1
    /// for every prime l | n.
    pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let check: Vec<usize> = crate::numth::factorize(n as u64)
            .iter()
            .map(|&(l, _)| n / l as usize)
            .collect();
        let x = vec![0u64, 1];
        let mut y = rem_monic(p, &x, f); // x^(p^0)
        for m in 1..=n {
            y = powmod_poly(p, &y, p, f);
            if check.contains(&m) {
                let diff = sub(p, &y, &x);
                let g = gcd(p, &diff, f);
                if g.len() != 1 {
                    return false;
                }
            }
        }
        let diff = sub(p, &y, &x);
        diff.is_empty()
    }
}

impl FieldCtx {
    /// The field `F_{p^k}`. For `k > 1` the modulus is the lexicographically
    /// least monic irreducible of degree `k` over `F_p` (coefficients
    /// compared from the constant term up).
    pub fn finite(p: u64, k: u32) -> Result<FieldCtx> {
        if !numth::is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        if k < 1 {
            return Err(Error::input("extension degree must be at least 1"));
        }
        let q = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or_else(|| {
            Error::input(format!("field order {p}^{k} does not fit in 64 bits"))
        })?;
        let (kind, modulus) = if k == 1 {
            (FieldKind::Prime, Vec::new())
        } else {
            (FieldKind::Extension, least_irreducible_modulus(p, k))
        };
        Ok(FieldCtx(Arc::new(Inner { kind, p, k, q, modulus })))
    }

    pub fn prime(p: u64) -> Result<FieldCtx> {
        FieldCtx::finite(p, 1)
    }

    pub fn rationals() -> FieldCtx {
        FieldCtx(Arc::new(Inner {
            kind: FieldKind::Rational,
            p: 0,
            k: 1,
            q: 0,
            modulus: Vec::new(),
        }))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn is_finite(&self) -> bool {
        self.0.kind != FieldKind::Rational
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.k
    }

    /// Field order `q = p^k`; `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.0.q)
    }

    /// Modulus coefficients (ascending) for extension fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        (self.0.kind == FieldKind::Extension).then_some(&self.0.modulus)
    }

    pub fn zero(&self) -> Fe {
        match self.0.kind {
            FieldKind::Prime => Fe::Prime(0),
            FieldKind::Extension => Fe::Ext(smallvec::smallvec![0; self.0.k as usize]),
            FieldKind::Rational => Fe::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        match self.0.kind {
            FieldKind::Prime => Fe::Prime(n % self.0.p),
            FieldKind::Extension => {
                let mut v: ExtCoeffs = smallvec::smallvec![0; self.0.k as usize];
                v[0] = n % self.0.p;
                Fe::Ext(v)
            }
            FieldKind::Rational => Fe::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        if n >= 0 {
            self.from_u64(n as u64)
        } else {
            self.neg(&self.from_u64(n.unsigned_abs()))
        }
    }

    pub fn from_rational(&self, num: BigInt, den: BigInt) -> Result<Fe> {
        if self.0.kind != FieldKind::Rational {
            return Err(Error::input("fractional literals only make sense over Q"));
        }
        if den.is_zero() {
            return Err(Error::input("zero denominator"));
        }
        Ok(Fe::Rat(Box::new(BigRational::new(num, den))))
    }

    /// The residue class of the generator `t` of an extension field.
    pub fn generator(&self) -> Result<Fe> {
        if self.0.kind != FieldKind::Extension {
            return Err(Error::input("generator t exists only in extension fields"));
        }
        let mut v: ExtCoeffs = smallvec::smallvec![0; self.0.k as usize];
        v[1] = 1;
        Ok(Fe::Ext(v))
    }

    /// Index of an element in canonical order; inverse of [`Self::element`].
    pub fn element_index(&self, a: &Fe) -> u64 {
        match a {
            Fe::Prime(x) => *x,
            Fe::Ext(v) => v.iter().fold(0, |acc, &d| acc * self.0.p + d),
            Fe::Rat(_) => panic!("Q is not enumerable"),
        }
    }

    /// Element with the given index in canonical order (finite fields).
    pub fn element(&self, idx: u64) -> Fe {
        debug_assert!(self.is_finite() && idx < self.0.q);
        match self.0.kind {
            FieldKind::Prime => Fe::Prime(idx),
            FieldKind::Extension => {
                // most significant digit is the constant coefficient
                let k = self.0.k as usize;
                let mut v: ExtCoeffs = smallvec::smallvec![0; k];
                let mut rest = idx;
                for slot in (0..k).rev() {
                    v[slot] = rest % self.0.p;
                    rest /= self.0.p;
                }
                Fe::Ext(v)
            }
            FieldKind::Rational => unreachable!(),
        }
    }

    /// All field elements in canonical order (finite fields only).
    pub fn elements(&self) -> Vec<Fe> {
        assert!(self.is_finite(), "cannot enumerate Q");
        (0..self.0.q).map(|i| self.element(i)).collect()
    }

    pub fn is_zero(&self, a: &Fe) -> bool {
        match a {
            Fe::Prime(x) => *x == 0,
            Fe::Ext(v) => v.iter().all(|&c| c == 0),
            Fe::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Fe) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        match (a, b) {
            (Fe::Prime(x), Fe::Prime(y)) => Fe::Prime((x + y) % self.0.p),
            (Fe::Ext(x), Fe::Ext(y)) => Fe::Ext(
                x.iter()
                    .zip(y)
                    .map(|(&u, &v)| (u + v) % self.0.p)
                    .collect(),
            ),
            (Fe::Rat(x), Fe::Rat(y)) => Fe::Rat(Box::new(&**x + &**y)),
            _ => panic!("mixed field elements"),
        }
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        match a {
            Fe::Prime(x) => Fe::Prime((self.0.p - x) % self.0.p),
            Fe::Ext(v) => Fe::Ext(v.iter().map(|&c| (self.0.p - c) % self.0.p).collect()),
            Fe::Rat(r) => Fe::Rat(Box::new(-&**r)),
        }
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        match (a, b) {
            (Fe::Prime(x), Fe::Prime(y)) => Fe::Prime(mulmod(*x, *y, self.0.p)),
            (Fe::Ext(x), Fe::Ext(y)) => Fe::Ext(self.ext_mul(x, y)),
            (Fe::Rat(x), Fe::Rat(y)) => Fe::Rat(Box::new(&**x * &**y)),
            _ => panic!("mixed field elements"),
        }
    }

    /// Schoolbook product reduced by the monic modulus, in a stack buffer
    /// for the degrees this crate actually runs at.
    fn ext_mul(&self, x: &[u64], y: &[u64]) -> ExtCoeffs {
        const SCRATCH: usize = 15; // supports k <= 8 inline
        let p = self.0.p;
        let k = self.0.k as usize;
        if 2 * k - 1 > SCRATCH {
            let prod = fp::mul(p, x, y);
            let mut red = fp::rem_monic(p, &prod, &self.0.modulus);
            red.resize(k, 0);
            return ExtCoeffs::from_vec(red);
        }
        let mut prod = [0u64; SCRATCH];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(xi, yj, p)) % p;
            }
        }
        // clear degrees k .. 2k-2 against the monic modulus
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            let shift = d - k;
            for (i, &mi) in self.0.modulus.iter().take(k).enumerate() {
                prod[i + shift] = (prod[i + shift] + p - mulmod(c, mi, p)) % p;
            }
        }
        ExtCoeffs::from_slice(&prod[..k])
    }

    pub fn inv(&self, a: &Fe) -> Result<Fe> {
        if self.is_zero(a) {
            return Err(Error::input("inversion of zero"));
        }
        Ok(match a {
            Fe::Prime(x) => Fe::Prime(powmod(*x, self.0.p - 2, self.0.p)),
            Fe::Ext(v) => {
                let mut t = v.to_vec();
                fp::trim(&mut t);
                let mut inv = fp::inv_mod(self.0.p, &t, &self.0.modulus)
                    .expect("element coprime to irreducible modulus");
                inv.resize(self.0.k as usize, 0);
                Fe::Ext(ExtCoeffs::from_vec(inv))
            }
            Fe::Rat(r) => Fe::Rat(Box::new(BigRational::one() / &**r)),
        })
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Result<Fe> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` by square-and-multiply; the exponent is nonnegative.
    pub fn pow(&self, a: &Fe, mut e: u64) -> Fe {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element of a finite field.
    pub fn multiplicative_order(&self, a: &Fe) -> Result<u64> {
        if !self.is_finite() {
            return Err(Error::input("multiplicative order needs a finite field"));
        }
        if self.is_zero(a) {
            return Err(Error::input("zero has no multiplicative order"));
        }
        let mut ord = self.0.q - 1;
        for (l, _) in numth::factorize(self.0.q - 1) {
            while ord.is_multiple_of(l) && self.is_one(&self.pow(a, ord / l)) {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Euler's criterion; in characteristic 2 every element is a square.
    /// Zero counts as a square.
    pub fn is_square(&self, a: &Fe) -> Result<bool> {
        if !self.is_finite() {
            return Err(Error::input("quadratic character needs a finite field"));
        }
        if self.is_zero(a) {
            return Ok(true);
        }
        if self.0.p == 2 {
            return Ok(true);
        }
        Ok(self.is_one(&self.pow(a, (self.0.q - 1) / 2)))
    }

    /// A square root when one exists; of the two roots `±s` the one with the
    /// smaller canonical encoding is returned.
    pub fn sqrt(&self, a: &Fe) -> Result<Option<Fe>> {
        if !self.is_finite() {
            return Err(Error::input("sqrt needs a finite field"));
        }
        if self.is_zero(a) {
            return Ok(Some(self.zero()));
        }
        if self.0.p == 2 {
            // squaring is a bijection; invert it with Frobenius
            return Ok(Some(self.pow(a, self.0.q / 2)));
        }
        if !self.is_square(a)? {
            return Ok(None);
        }
        let root = if self.0.q <= 1024 {
            // exhaustive scan keeps desk-scale fields dead simple
            let mut found = None;
            for i in 0..self.0.q {
                let s = self.element(i);
                if self.mul(&s, &s) == *a {
                    found = Some(s);
                    break;
                }
            }
            found.expect("square admitted by Euler's criterion")
        } else {
            self.tonelli_shanks(a)
        };
        let other = self.neg(&root);
        Ok(Some(if other < root { other } else { root }))
    }

    fn tonelli_shanks(&self, a: &Fe) -> Fe {
        let q = self.0.q;
        let mut m = q - 1;
        let mut s = 0u32;
        while m.is_multiple_of(2) {
            m /= 2;
            s += 1;
        }
        // deterministic non-residue: first in canonical order
        let z = (1..q)
            .map(|i| self.element(i))
            .find(|z| !self.is_one(&self.pow(z, (q - 1) / 2)))
            .expect("odd q has a quadratic non-residue");
        let mut c = self.pow(&z, m);
        let mut t = self.pow(a, m);
        let mut r = self.pow(a, m.div_ceil(2));
        let mut e = s;
        while !self.is_one(&t) {
            // least i with t^(2^i) = 1
            let mut i = 0u32;
            let mut probe = t.clone();
            while !self.is_one(&probe) {
                probe = self.mul(&probe, &probe);
                i += 1;
            }
            let b = self.pow(&c, 1u64 << (e - i - 1));
            r = self.mul(&r, &b);
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            e = i;
        }
        r
    }

    /// The element of maximal multiplicative order `q - 1` with least
    /// canonical encoding.
    pub fn primitive_element(&self) -> Result<Fe> {
        if !self.is_finite() {
            return Err(Error::input("primitive elements need a finite field"));
        }
        for i in 1..self.0.q {
            let a = self.element(i);
            if self.multiplicative_order(&a)? == self.0.q - 1 {
                return Ok(a);
            }
        }
        Err(Error::internal("finite field without primitive element"))
    }

    /// All elements of multiplicative order exactly `m`, in canonical order.
    /// Empty when `m` does not divide `q - 1`.
    pub fn roots_of_unity(&self, m: u64) -> Result<Vec<Fe>> {
        if m == 0 {
            return Err(Error::input("root-of-unity order must be positive"));
        }
        if !self.is_finite() {
            return Err(Error::input("roots of unity need a finite field"));
        }
        if !(self.0.q - 1).is_multiple_of(m) {
            return Ok(Vec::new());
        }
        let eta = self.primitive_element()?;
        let zeta = self.pow(&eta, (self.0.q - 1) / m);
        let mut out: Vec<Fe> = (1..=m)
            .filter(|&j| numth::gcd(j, m) == 1)
            .map(|j| self.pow(&zeta, j))
            .collect();
        out.sort();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
        Ok(out)
    }
}

fn least_irreducible_modulus(p: u64, k: u32) -> Vec<u64> {
    // enumerate (c0, .., c_{k-1}) lexicographically, c0 most significant
    let k = k as usize;
    let mut digits = vec![0u64; k];
    loop {
        let mut cand = digits.clone();
        cand.push(1);
        if fp::is_irreducible(p, &cand) {
            return cand;
        }
        // odometer with the last digit fastest
        let mut i = k;
        loop {
            if i == 0 {
                unreachable!("no irreducible of degree {k} over F_{p}");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_prime_and_extension_fields() {
        let f3 = FieldCtx::finite(3, 1).unwrap();
        assert_eq!(f3.kind(), FieldKind::Prime);
        assert_eq!(f3.order(), Some(3));

        // the unique monic irreducible quadratic over F_2
        let f4 = FieldCtx::finite(2, 2).unwrap();
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..])); // x^2 + x + 1

        // least lexicographic among the three irreducible quadratics over F_3
        let f9 = FieldCtx::finite(3, 2).unwrap();
        assert_eq!(f9.modulus(), Some(&[1, 0, 1][..])); // x^2 + 1

        assert!(FieldCtx::finite(4, 1).is_err());
        assert!(FieldCtx::finite(3, 0).is_err());
    }

    #[test]
    fn prime_field_inverses() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.inv(&Fe::Prime(4)).unwrap(), Fe::Prime(2));
        assert_eq!(f7.inv(&Fe::Prime(2)).unwrap(), Fe::Prime(4));
        assert!(f7.inv(&Fe::Prime(0)).is_err());
        // (u + v) / 2 with u = 1, v = 3 lands on b = 2
        let two_inv = f7.inv(&f7.from_u64(2)).unwrap();
        let b = f7.mul(&f7.from_u64(4), &two_inv);
        assert_eq!(b, Fe::Prime(2));
    }

    #[test]
    fn extension_generator_squares() {
        // F_4 = F_2[t]/(t^2 + t + 1): t * t = t + 1
        let f4 = FieldCtx::finite(2, 2).unwrap();
        let t = f4.generator().unwrap();
        assert_eq!(f4.mul(&t, &t), Fe::Ext(ExtCoeffs::from_slice(&[1, 1])));
        // and t^3 = 1
        assert!(f4.is_one(&f4.pow(&t, 3)));
    }

    #[test]
    fn inverses_work_everywhere() {
        for ctx in [
            FieldCtx::prime(13).unwrap(),
            FieldCtx::finite(2, 3).unwrap(),
            FieldCtx::finite(3, 2).unwrap(),
            FieldCtx::finite(5, 2).unwrap(),
        ] {
            let q = ctx.order().unwrap();
            for i in 1..q {
                let a = ctx.element(i);
                let inv = ctx.inv(&a).unwrap();
                assert!(ctx.is_one(&ctx.mul(&a, &inv)));
                // Lagrange: a^(q-1) = 1
                assert!(ctx.is_one(&ctx.pow(&a, q - 1)));
            }
        }
        let q = FieldCtx::rationals();
        let a = q.from_rational(BigInt::from(-3), BigInt::from(7)).unwrap();
        let inv = q.inv(&a).unwrap();
        assert!(q.is_one(&q.mul(&a, &inv)));
    }

    #[test]
    fn rational_canonical_form() {
        let q = FieldCtx::rationals();
        let a = q.from_rational(BigInt::from(2), BigInt::from(-4)).unwrap();
        match &a {
            Fe::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn squares_match_exhaustive_squaring() {
        // every finite field of odd order up to 49
        let mut fields = Vec::new();
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            fields.push(FieldCtx::prime(p).unwrap());
        }
        fields.push(FieldCtx::finite(3, 2).unwrap());
        fields.push(FieldCtx::finite(5, 2).unwrap());
        fields.push(FieldCtx::finite(3, 3).unwrap());
        fields.push(FieldCtx::finite(7, 2).unwrap());
        for ctx in fields {
            let q = ctx.order().unwrap();
            let mut squares = std::collections::HashSet::new();
            for i in 0..q {
                let a = ctx.element(i);
                squares.insert(ctx.mul(&a, &a));
            }
            for i in 0..q {
                let a = ctx.element(i);
                assert_eq!(ctx.is_square(&a).unwrap(), squares.contains(&a));
                match ctx.sqrt(&a).unwrap() {
                    Some(s) => {
                        assert_eq!(ctx.mul(&s, &s), a);
                        // canonical choice: no smaller root exists
                        let other = ctx.neg(&s);
                        assert!(s <= other || ctx.mul(&other, &other) != a);
                    }
                    None => assert!(!squares.contains(&a)),
                }
            }
        }
    }

    #[test]
    fn sqrt_examples_f7() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert!(f7.is_square(&Fe::Prime(2)).unwrap()); // 3^2 = 2
        assert!(!f7.is_square(&Fe::Prime(3)).unwrap());
        assert_eq!(f7.sqrt(&Fe::Prime(0)).unwrap(), Some(Fe::Prime(0)));
        assert_eq!(f7.sqrt(&Fe::Prime(2)).unwrap(), Some(Fe::Prime(3)));
    }

    #[test]
    fn tonelli_shanks_large_prime() {
        let ctx = FieldCtx::prime(104_729).unwrap(); // > 1024, exercises T-S
        for a0 in [2u64, 3, 5, 1234, 99_999] {
            let a = ctx.from_u64(a0);
            if let Some(s) = ctx.sqrt(&a).unwrap() {
                assert_eq!(ctx.mul(&s, &s), a);
            } else {
                assert!(!ctx.is_square(&a).unwrap());
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(
            FieldCtx::prime(7).unwrap().primitive_element().unwrap(),
            Fe::Prime(3)
        );
        assert_eq!(
            FieldCtx::prime(3).unwrap().primitive_element().unwrap(),
            Fe::Prime(2)
        );
        assert_eq!(
            FieldCtx::prime(5).unwrap().primitive_element().unwrap(),
            Fe::Prime(2)
        );
    }

    #[test]
    fn roots_of_unity_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(
            f7.roots_of_unity(6).unwrap(),
            vec![Fe::Prime(3), Fe::Prime(5)]
        );
        assert_eq!(f7.roots_of_unity(4).unwrap(), Vec::<Fe>::new()); // 4 does not divide 6
        assert_eq!(f7.roots_of_unity(1).unwrap(), vec![Fe::Prime(1)]);
        assert!(f7.roots_of_unity(0).is_err());
    }

    #[test]
    fn roots_of_unity_counts() {
        for ctx in [
            FieldCtx::prime(13).unwrap(),
            FieldCtx::finite(3, 2).unwrap(),
            FieldCtx::finite(2, 4).unwrap(),
        ] {
            let q = ctx.order().unwrap();
            for m in 1..=(q - 1) {
                let roots = ctx.roots_of_unity(m).unwrap();
                let expected = if (q - 1) % m == 0 {
                    numth::euler_phi(m)
                } else {
                    0
                };
                assert_eq!(roots.len() as u64, expected, "q={q} m={m}");
                for z in &roots {
                    assert_eq!(ctx.multiplicative_order(z).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn element_order_is_constant_first() {
        let f9 = FieldCtx::finite(3, 2).unwrap();
        let els = f9.elements();
        assert_eq!(els.len(), 9);
        assert_eq!(els[0], Fe::Ext(ExtCoeffs::from_slice(&[0, 0])));
        assert_eq!(els[1], Fe::Ext(ExtCoeffs::from_slice(&[0, 1]))); // t
        assert_eq!(els[3], Fe::Ext(ExtCoeffs::from_slice(&[1, 0]))); // 1 comes after all pure-t elements
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }
}
