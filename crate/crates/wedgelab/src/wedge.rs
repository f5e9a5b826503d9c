//! The wedge operator `h = f ▷ g`: the minimal polynomial of `f(α)` where
//! `α` is any root of the irreducible polynomial `g`.
//!
//! Construction is pure linear algebra, no root extraction: multiplication
//! by `f` is a linear map on `K[x]/(g)`, represented in the power basis by
//! a matrix `M` whose minimal polynomial is `h`. The characteristic
//! polynomial of `M` is `h^r`, so `deg h` divides `deg g` and the quotient
//! `r` measures how far `f` is from acting injectively on the roots.
//!
//! [`wedge_oracle`] recomputes the same polynomial over finite fields by
//! embedding a root and multiplying out the Frobenius conjugates of its
//! image; the two routes are kept independent so they can check each other.

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};
use crate::poly::{self, IrrPoly, Poly};

/// Square matrix over one field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    ctx: FieldCtx,
    n: usize,
    data: Vec<Fe>,
}

impl KMatrix {
    pub fn from_columns(ctx: &FieldCtx, cols: Vec<Vec<Fe>>) -> KMatrix {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n));
        let mut data = vec![ctx.zero(); n * n];
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                data[i * n + j] = v.clone();
            }
        }
        KMatrix { ctx: ctx.clone(), n, data }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> KMatrix {
        let mut data = vec![ctx.zero(); n * n];
        for i in 0..n {
            data[i * n + i] = ctx.one();
        }
        KMatrix { ctx: ctx.clone(), n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, row: usize, col: usize) -> &Fe {
        &self.data[row * self.n + col]
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Fe]) -> Vec<Fe> {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = self.ctx.zero();
                for (j, vj) in v.iter().enumerate() {
                    acc = self.ctx.add(&acc, &self.ctx.mul(self.at(i, j), vj));
                }
                acc
            })
            .collect()
    }
}

/// Matrix of multiplication by `f` on `K[x]/(g)` in the basis
/// `1, x, .., x^(n-1)`: column `k` holds the coefficients of
/// `f(x) * x^(k-1) mod g(x)`.
pub fn mult_matrix(f: &Poly, g: &IrrPoly) -> KMatrix {
    let ctx = g.ctx().clone();
    let n = g.degree();
    let gc = g.poly().coeffs();
    let fbar = f.rem(g.poly()).expect("g has positive degree");
    let mut col: Vec<Fe> = (0..n).map(|i| fbar.coeff(i)).collect();
    let mut cols = Vec::with_capacity(n);
    cols.push(col.clone());
    for _ in 1..n {
        // multiply by x and reduce by the monic modulus
        let top = col[n - 1].clone();
        for i in (1..n).rev() {
            col[i] = col[i - 1].clone();
        }
        col[0] = ctx.zero();
        if !ctx.is_zero(&top) {
            for i in 0..n {
                col[i] = ctx.sub(&col[i], &ctx.mul(&top, &gc[i]));
            }
        }
        cols.push(col.clone());
    }
    KMatrix::from_columns(&ctx, cols)
}

/// Minimal polynomial of a square matrix: the least common multiple of the
/// minimal polynomials of the standard basis vectors, each found from the
/// first linear dependency in its Krylov chain. Deterministic and exact.
pub fn min_poly_matrix(m: &KMatrix) -> Poly {
    let ctx = m.ctx().clone();
    let n = m.size();
    let mut acc = Poly::one(&ctx);
    for i in 0..n {
        if acc.degree() == Some(n) {
            break; // cannot grow past the matrix size
        }
        let mut e = vec![ctx.zero(); n];
        e[i] = ctx.one();
        let mp = min_poly_vector(m, e);
        let gcd = acc.gcd(&mp);
        acc = acc.mul(&mp).div_exact(&gcd).expect("gcd divides");
    }
    acc.to_monic().expect("nonzero")
}

fn min_poly_vector(m: &KMatrix, v0: Vec<Fe>) -> Poly {
    let ctx = m.ctx().clone();
    let n = m.size();
    // echelonized Krylov vectors with the polynomial that produced them
    let mut rows: Vec<(Vec<Fe>, Poly, usize)> = Vec::new();
    let mut w = v0;
    for degree in 0..=n {
        let mut combo = Poly::from_coeffs(&ctx, {
            let mut c = vec![ctx.zero(); degree + 1];
            c[degree] = ctx.one();
            c
        });
        let mut v = w.clone();
        for (u, q, piv) in &rows {
            let c = v[*piv].clone();
            if ctx.is_zero(&c) {
                continue;
            }
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi = ctx.sub(vi, &ctx.mul(&c, ui));
            }
            combo = combo.sub(&q.scale(&c));
        }
        match v.iter().position(|c| !ctx.is_zero(c)) {
            None => return combo, // first dependency: the minimal polynomial
            Some(piv) => {
                let inv = ctx.inv(&v[piv]).expect("pivot nonzero");
                let v: Vec<Fe> = v.iter().map(|c| ctx.mul(c, &inv)).collect();
                rows.push((v, combo.scale(&inv), piv));
            }
        }
        w = m.apply(&w);
    }
    unreachable!("a dependency appears by degree n")
}

/// Result of `f ▷ g`: the minimal polynomial `h` of `f(α)` and the
/// repetition count `r = deg g / deg h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeResult {
    pub h: IrrPoly,
    pub r: usize,
}

/// The wedge operator. `g` must be irreducible and separable (enforced by
/// [`IrrPoly`]); `f` may be any polynomial over the same field. The result
/// is independent of the choice of root of `g` by construction.
pub fn wedge(f: &Poly, g: &IrrPoly) -> Result<WedgeResult> {
    let n = g.degree();
    let m = mult_matrix(f, g);
    let h = min_poly_matrix(&m);
    let dh = h.degree().expect("minimal polynomial is nonzero");
    if dh == 0 || !n.is_multiple_of(dh) {
        return Err(Error::internal(format!(
            "minimal polynomial degree {dh} does not divide deg g = {n}"
        )));
    }
    debug_assert!(h.compose(f).rem(g.poly()).unwrap().is_zero());
    let h = IrrPoly::new(h).map_err(|e| {
        Error::internal(format!("wedge output must be irreducible: {e}"))
    })?;
    Ok(WedgeResult { h, r: n / dh })
}

/// Independent verification route for finite fields: embed a root `α` of
/// `g` in the quotient field `K[x]/(g)`, form `β = f(α)`, and multiply out
/// `(X - β)(X - β^q)(X - β^(q^2)) ..` over the distinct Frobenius
/// conjugates. Must equal `wedge(f, g).h`.
pub fn wedge_oracle(f: &Poly, g: &IrrPoly) -> Result<Poly> {
    let ctx = g.ctx().clone();
    let q = ctx
        .order()
        .ok_or_else(|| Error::input("the Frobenius oracle needs a finite field"))?;
    let gp = g.poly();
    let beta = f.rem(gp)?;
    let mut conjugates = Vec::new();
    let mut cur = beta.clone();
    loop {
        conjugates.push(cur.clone());
        cur = poly::powmod_poly(&cur, q, gp);
        if cur == beta {
            break;
        }
    }
    // product of (X - c) with coefficients living in K[x]/(g)
    let mut prod: Vec<Poly> = vec![Poly::one(&ctx)];
    for c in &conjugates {
        let mut next = vec![Poly::zero(&ctx); prod.len() + 1];
        for (i, coeff) in prod.iter().enumerate() {
            next[i + 1] = next[i + 1].add(coeff);
            next[i] = next[i].sub(&coeff.mul(c).rem(gp)?);
        }
        prod = next;
    }
    let mut out = Vec::with_capacity(prod.len());
    for coeff in prod {
        if coeff.degree().unwrap_or(0) > 0 {
            return Err(Error::internal(
                "Frobenius product has a non-scalar coefficient",
            ));
        }
        out.push(coeff.coeff(0));
    }
    Ok(Poly::from_coeffs(&ctx, out))
}
