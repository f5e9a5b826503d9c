//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`; cargo's own per-test lines mirror
//! them). Expected values are frozen from independent derivation: closed
//! formulas, exhaustive enumeration oracles, and frozen reference tables.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wedgelab::blocks::{block_of, count_blocks_formula, partition_blocks};
use wedgelab::dynamics::{classify_2set, TwoSetType};
use wedgelab::field::{Fe, FieldCtx};
use wedgelab::harness::{admissible_primes, artin_experiment, table3, IntQuad};
use wedgelab::poly::{affine_apply, enumerate_irreducibles, is_irreducible, IrrPoly, Poly};
use wedgelab::quadratic::{
    construct_periodic_sets, counting_formulas, minimal_cycle_orders, pair_to_state,
    state_to_pair, SkewState,
};
use wedgelab::search::{build_graph, enumerate_stable_2sets, is_stable, self_image, PolySet};
use wedgelab::wedge::{wedge, wedge_oracle};

fn fp(p: u64) -> FieldCtx {
    FieldCtx::prime(p).unwrap()
}

fn fq(p: u64, k: u32) -> FieldCtx {
    FieldCtx::finite(p, k).unwrap()
}

fn irr(ctx: &FieldCtx, coeffs: &[i64]) -> IrrPoly {
    IrrPoly::new(Poly::from_ints(ctx, coeffs)).unwrap()
}

fn rand_fe(rng: &mut ChaCha8Rng, ctx: &FieldCtx) -> Fe {
    ctx.element(rng.gen_range(0..ctx.order().unwrap()))
}

fn rand_nonzero(rng: &mut ChaCha8Rng, ctx: &FieldCtx) -> Fe {
    ctx.element(rng.gen_range(1..ctx.order().unwrap()))
}

fn rand_irr(rng: &mut ChaCha8Rng, ctx: &FieldCtx, deg: usize) -> IrrPoly {
    let q = ctx.order().unwrap();
    loop {
        let mut coeffs: Vec<Fe> = (0..deg).map(|_| ctx.element(rng.gen_range(0..q))).collect();
        coeffs.push(ctx.one());
        let cand = Poly::from_coeffs(ctx, coeffs);
        if is_irreducible(&cand).unwrap() {
            return IrrPoly::new(cand).unwrap();
        }
    }
}

fn pass(n: u32, name: &str, started: Instant) {
    println!(
        "acceptance criterion {n} ({name}): PASS [{} ms]",
        started.elapsed().as_millis()
    );
}

#[test]
fn criterion_01_figure_one_reproduction() {
    let started = Instant::now();
    let f3 = fp(3);
    let all: Vec<IrrPoly> = enumerate_irreducibles(&f3, 2).unwrap().collect();
    let f = irr(&f3, &[1, 0, 1]); // x^2 + 1
    let g = irr(&f3, &[2, 1, 1]); // x^2 + x + 2
    let h = irr(&f3, &[2, 2, 1]); // x^2 + 2x + 2
    assert_eq!(all, vec![f.clone(), g.clone(), h.clone()]);
    // the six wedge equations of the caption, all with target g
    for (act, on) in [(&h, &g), (&f, &g), (&f, &h), (&h, &f), (&g, &h), (&g, &f)] {
        assert_eq!(wedge(act.poly(), on).unwrap().h, g);
    }
    let triple = PolySet::new(&f3, all).unwrap();
    assert!(is_stable(&triple).unwrap());
    let image = self_image(&triple).unwrap();
    assert_eq!(image.members(), &[g.clone()]);
    pass(1, "figure 1 reproduction", started);
}

/// Reference table of stable 2-set counts: (p, n, #E, I, II, III).
const TABLE3_ROWS: [(u64, usize, usize, u64, u64, u64); 23] = [
    (2, 3, 2, 0, 0, 1),
    (2, 6, 9, 0, 0, 1),
    (2, 7, 18, 0, 0, 1),
    (2, 9, 56, 0, 0, 2),
    (2, 10, 99, 0, 1, 0),
    (2, 12, 335, 0, 0, 1),
    (3, 2, 3, 0, 0, 2),
    (3, 3, 8, 0, 3, 0),
    (3, 4, 18, 0, 0, 5),
    (3, 5, 48, 2, 0, 0),
    (3, 6, 116, 0, 0, 11),
    (3, 7, 312, 0, 1, 0),
    (5, 2, 10, 1, 0, 4),
    (5, 4, 150, 2, 1, 14),
    (7, 2, 21, 1, 0, 6),
    (7, 3, 112, 2, 0, 0),
    (11, 2, 55, 2, 0, 10),
    (11, 3, 440, 0, 4, 0),
    (13, 2, 78, 3, 0, 12),
    (17, 2, 136, 4, 0, 16),
    (19, 2, 171, 4, 0, 18),
    (23, 2, 253, 5, 0, 22),
    (29, 2, 406, 7, 0, 28),
];

#[test]
fn criterion_02_stable_2set_table_reproduction() {
    let started = Instant::now();
    // quick subset first: every extension with at most 150 irreducibles
    let quick = table3(150).unwrap();
    for row in &quick {
        assert!(row.universe <= 150);
        assert!(
            TABLE3_ROWS.contains(&(
                row.p,
                row.n,
                row.universe,
                row.count_i,
                row.count_ii,
                row.count_iii
            )),
            "unexpected quick row {row:?}"
        );
    }
    let quick_expected = TABLE3_ROWS.iter().filter(|r| r.2 <= 150).count();
    assert_eq!(quick.len(), quick_expected);
    println!(
        "  quick subset (#E <= 150): {} rows in {} ms",
        quick.len(),
        started.elapsed().as_millis()
    );

    let rows = table3(500).unwrap();
    // every reference row appears bit-exact
    for want in TABLE3_ROWS {
        assert!(
            rows.iter().any(|r| (
                r.p,
                r.n,
                r.universe,
                r.count_i,
                r.count_ii,
                r.count_iii
            ) == want),
            "missing row {want:?}"
        );
    }
    // all-zero extensions are omitted
    for (p, n) in [(2u64, 2usize), (2, 4), (2, 5), (2, 8), (2, 11), (5, 3)] {
        assert!(
            !rows.iter().any(|r| r.p == p && r.n == n),
            "all-zero extension ({p},{n}) must be omitted"
        );
    }
    // the sweep threshold (#E <= 500) also admits (31,2) with #E = 465,
    // which the reference table does not list; it must match the
    // counting theorem exactly and be the only surplus row
    for row in &rows {
        let key = (row.p, row.n, row.universe, row.count_i, row.count_ii, row.count_iii);
        if !TABLE3_ROWS.contains(&key) {
            assert_eq!(key, (31, 2, 465, 7, 0, 30), "unexpected surplus row {row:?}");
        }
    }
    assert_eq!(rows.len(), 24);
    pass(2, "stable 2-set table reproduction", started);
}

#[test]
fn criterion_03_counting_theorems_vs_exhaustive() {
    let started = Instant::now();
    // stable 2-set counts against the closed formulas, odd primes q <= 13
    for q in [3u64, 5, 7, 11, 13] {
        let ctx = fp(q);
        let report = enumerate_stable_2sets(&ctx, 2).unwrap();
        let formulas = counting_formulas(q).unwrap();
        assert_eq!(report.count_i, formulas.n_type_i, "N_I(q={q})");
        assert_eq!(report.count_ii, 0, "N_II(q={q})");
        assert_eq!(report.count_iii, q - 1, "N_III(q={q})");
    }
    // block counts against exhaustive partition
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let ctx = fq(p, k);
        let q = ctx.order().unwrap();
        for n in 2..=4usize {
            let blocks = partition_blocks(&ctx, n).unwrap();
            if num_gcd(q, n as u64) != 1 {
                assert!(count_blocks_formula(q, n as u32).is_err());
                continue;
            }
            let formula = count_blocks_formula(q, n as u32).unwrap();
            assert_eq!(formula, blocks.len().into(), "blocks q={q} n={n}");
            assert!(blocks.iter().all(|b| b.size() as u64 == q));
        }
    }
    pass(3, "counting theorems vs exhaustive search", started);
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn criterion_04_f7_six_cycle() {
    let started = Instant::now();
    let f7 = fp(7);
    let records = construct_periodic_sets(&f7, 6).unwrap();
    assert_eq!(records.len(), 1, "exactly one 6-cycle over F_7");
    let rec = &records[0];
    assert_eq!(rec.period, 6);

    // the reference cycle rows t = 0..5 as unordered pairs
    let expected: Vec<(IrrPoly, IrrPoly)> = [
        ([3i64, 2, 1], [3i64, 1, 1]),
        ([3, 1, 1], [3, 5, 1]),
        ([6, 1, 1], [6, 4, 1]),
        ([5, 2, 1], [5, 3, 1]),
        ([5, 4, 1], [5, 2, 1]),
        ([6, 4, 1], [6, 6, 1]),
    ]
    .iter()
    .map(|(a, b)| {
        let (x, y) = (irr(&f7, a), irr(&f7, b));
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    })
    .collect();
    // cyclic match: find the rotation aligning our record with the table
    let offset = (0..6)
        .find(|&k| rec.pairs[0] == expected[k])
        .expect("cycle must contain the expected first row");
    for i in 0..6 {
        assert_eq!(rec.pairs[i], expected[(offset + i) % 6], "row {i}");
    }

    // re-verify by direct wedge iteration through the set machinery
    for i in 0..6 {
        let cur = PolySet::new(&f7, vec![rec.pairs[i].0.clone(), rec.pairs[i].1.clone()]).unwrap();
        let next = self_image(&cur).unwrap();
        let want = &rec.pairs[(i + 1) % 6];
        let want = PolySet::new(&f7, vec![want.0.clone(), want.1.clone()]).unwrap();
        assert_eq!(next, want, "step {i}");
    }

    // u runs through the whole multiplicative group along the cycle
    let mut us: Vec<Fe> = Vec::new();
    for (f, g) in &rec.pairs {
        let s = pair_to_state(f.poly(), g.poly()).unwrap();
        us.push(s.u.clone());
        us.push(f7.neg(&s.u));
    }
    us.sort();
    us.dedup();
    assert_eq!(us.len(), 6);

    assert_eq!(counting_formulas(7).unwrap().minimal_period_count(6), 6);
    pass(4, "F_7 six-cycle", started);
}

#[test]
fn criterion_05_root_of_unity_orders_table() {
    let started = Instant::now();
    let expected: [&[u64]; 14] = [
        &[1],
        &[1],
        &[7],
        &[5],
        &[31],
        &[21, 7, 3],
        &[127],
        &[85, 17],
        &[511, 73],
        &[341, 31, 11],
        &[2047, 89, 23],
        &[1365, 455, 273, 195, 105, 91, 65, 39, 35, 15, 13],
        &[8191],
        &[5461, 127, 43],
    ];
    for (t, want) in expected.iter().enumerate() {
        assert_eq!(
            minimal_cycle_orders(t as u64 + 1),
            want.to_vec(),
            "period {}",
            t + 1
        );
    }
    pass(5, "root-of-unity order table", started);
}

#[test]
fn criterion_06_rational_type_one_set() {
    let started = Instant::now();
    let q = FieldCtx::rationals();
    let a = irr(&q, &[1, 0, 0, 0, 1]); // x^4 + 1
    let b = irr(&q, &[1, -1, 0, 0, 1]); // x^4 - x + 1
    assert_eq!(wedge(a.poly(), &b).unwrap().h, b);
    assert_eq!(wedge(b.poly(), &a).unwrap().h, a);
    assert_eq!(classify_2set(&a, &b).unwrap(), TwoSetType::TypeI);
    pass(6, "rational type I set", started);
}

#[test]
fn criterion_07_algebraic_identity_suite() {
    let started = Instant::now();
    let fields = vec![fp(3), fp(5), fp(7), fq(3, 2), fp(11), fp(13)];
    const PER_FIELD: usize = 100; // 6 fields x 100 >= 500 instances per identity
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for ctx in &fields {
        let q = ctx.order().unwrap();
        let quadratics: Vec<IrrPoly> = enumerate_irreducibles(ctx, 2).unwrap().collect();
        let cubics: Vec<IrrPoly> = enumerate_irreducibles(ctx, 3).unwrap().collect();
        let pick = |rng: &mut ChaCha8Rng, pool: &[IrrPoly]| -> IrrPoly {
            pool[rng.gen_range(0..pool.len())].clone()
        };
        for _ in 0..PER_FIELD {
            // --- G-action (i): affine maps send blocks to blocks ---
            let f = if rng.gen_bool(0.5) {
                pick(&mut rng, &quadratics)
            } else {
                pick(&mut rng, &cubics)
            };
            let a = rand_nonzero(&mut rng, ctx);
            let b = rand_fe(&mut rng, ctx);
            let image = affine_apply(&a, &b, &f).unwrap();
            let mut mapped: Vec<IrrPoly> = block_of(&f)
                .unwrap()
                .members()
                .iter()
                .map(|m| affine_apply(&a, &b, m).unwrap())
                .collect();
            mapped.sort();
            assert_eq!(mapped, block_of(&image).unwrap().members());

            // --- G-action (ii): equivariance with rescaling by a^(deg f) ---
            let g = if rng.gen_bool(0.5) {
                pick(&mut rng, &quadratics)
            } else {
                pick(&mut rng, &cubics)
            };
            let n = f.degree() as u64;
            let lhs = wedge(
                affine_apply(&a, &b, &f).unwrap().poly(),
                &affine_apply(&a, &b, &g).unwrap(),
            )
            .unwrap()
            .h;
            let rhs = affine_apply(&ctx.pow(&a, n), &ctx.zero(), &wedge(f.poly(), &g).unwrap().h)
                .unwrap();
            assert_eq!(lhs, rhs);

            // --- G-action (iii): discriminant rescaling ---
            let n = f.degree() as u64;
            let lhs = ctx.mul(image.disc(), &ctx.pow(&a, n * (n - 1)));
            assert_eq!(&lhs, f.disc());

            // --- G-action (iv): block members share their self-wedges ---
            let c = rand_fe(&mut rng, ctx);
            let sibling = f.shift(&c);
            let shift = rand_nonzero(&mut rng, ctx);
            assert_eq!(
                wedge(f.poly(), &f.shift(&shift)).unwrap().h,
                wedge(sibling.poly(), &sibling.shift(&shift)).unwrap().h
            );

            // --- quadratic identities (i) and (ii) ---
            let f2 = pick(&mut rng, &quadratics);
            let b2 = rand_nonzero(&mut rng, ctx);
            let w = wedge(f2.poly(), &f2.shift(&b2)).unwrap().h;
            let bsq = ctx.mul(&b2, &b2);
            let expected = Poly::from_coeffs(
                ctx,
                vec![
                    ctx.sub(&ctx.mul(&bsq, &bsq), &ctx.mul(&bsq, f2.disc())),
                    ctx.neg(&ctx.add(&bsq, &bsq)),
                    ctx.one(),
                ],
            );
            assert_eq!(w.poly(), &expected, "(x-b^2)^2 - b^2 disc f");
            let four = ctx.from_u64(4);
            assert_eq!(
                w.disc(),
                &ctx.mul(&ctx.mul(&four, &bsq), f2.disc()),
                "disc(f >> shift) = (2b)^2 disc f"
            );

            // --- quadratic identity (iii): same block iff a = ±c ---
            let a3 = rand_nonzero(&mut rng, ctx);
            let c3 = rand_nonzero(&mut rng, ctx);
            let b3 = rand_fe(&mut rng, ctx);
            let w1 = wedge(f2.poly(), &f2.shift(&a3)).unwrap().h;
            let base = f2.shift(&b3);
            let w2 = wedge(base.poly(), &f2.shift(&ctx.add(&b3, &c3))).unwrap().h;
            let same_block =
                block_of(&w1).unwrap().rep() == block_of(&w2).unwrap().rep();
            let plus_minus = a3 == c3 || a3 == ctx.neg(&c3);
            assert_eq!(same_block, plus_minus);
            if plus_minus {
                assert_eq!(w1, w2);
            }

            // --- discriminant exchange along the skew step ---
            let (fq_, gq_) = random_common_constant_pair(&mut rng, ctx, q);
            let s = pair_to_state(fq_.poly(), gq_.poly()).unwrap();
            let u2 = ctx.mul(&s.u, &s.u);
            let f_next = wedge(fq_.poly(), &gq_).unwrap().h;
            let g_next = wedge(gq_.poly(), &fq_).unwrap().h;
            assert_eq!(f_next.disc(), &ctx.mul(&u2, gq_.disc()));
            assert_eq!(g_next.disc(), &ctx.mul(&u2, fq_.disc()));

            // --- transition root formula ---
            let g2 = pick(&mut rng, &quadratics);
            let bt = rand_nonzero(&mut rng, ctx);
            let h = wedge(f2.poly(), &f2.shift(&bt)).unwrap().h;
            let l = wedge(g2.poly(), &g2.shift(&bt)).unwrap().h;
            let root = ctx.mul(&ctx.mul(&bt, &bt), &ctx.sub(g2.disc(), f2.disc()));
            assert_eq!(
                h.poly().sub(l.poly()),
                Poly::constant(ctx, root.clone()),
                "h(alpha) = b^2 (disc g - disc f)"
            );
            if f2.disc() != g2.disc() {
                let w = wedge(h.poly(), &l).unwrap();
                assert_eq!(w.h.degree(), 1, "transition collapses to the ground field");
                assert_eq!(
                    w.h.poly(),
                    &Poly::from_coeffs(ctx, vec![ctx.neg(&root), ctx.one()])
                );
            }

            // --- skew closed form vs step iteration, t <= 14 ---
            let state = SkewState::new(
                ctx,
                rand_nonzero(&mut rng, ctx),
                rand_nonzero(&mut rng, ctx),
                rand_nonzero(&mut rng, ctx),
            );
            let mut iterated = state.clone();
            for t in 1..=14u64 {
                iterated = iterated.step();
                assert_eq!(state.closed_form(t).unwrap(), iterated, "t={t}");
            }
        }
    }
    pass(7, "algebraic identity suite", started);
}

/// Random pair of irreducible monic quadratics with a common constant term
/// and distinct middle coefficients.
fn random_common_constant_pair(
    rng: &mut ChaCha8Rng,
    ctx: &FieldCtx,
    q: u64,
) -> (IrrPoly, IrrPoly) {
    loop {
        let r = ctx.element(rng.gen_range(1..q));
        let b = ctx.element(rng.gen_range(0..q));
        let c = ctx.element(rng.gen_range(0..q));
        if b == c {
            continue;
        }
        let f = Poly::from_coeffs(ctx, vec![r.clone(), b, ctx.one()]);
        let g = Poly::from_coeffs(ctx, vec![r, c, ctx.one()]);
        if is_irreducible(&f).unwrap() && is_irreducible(&g).unwrap() {
            return (IrrPoly::new(f).unwrap(), IrrPoly::new(g).unwrap());
        }
    }
}

#[test]
fn criterion_08_wedge_oracle_equivalence() {
    let started = Instant::now();
    let fields = vec![fp(2), fp(3), fq(2, 2), fp(5), fp(7), fq(3, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e55ed);
    let mut checked = 0usize;
    for ctx in &fields {
        let q = ctx.order().unwrap();
        for _ in 0..180 {
            let dg = rng.gen_range(1..=6usize);
            let g = rand_irr(&mut rng, ctx, dg);
            let df = rng.gen_range(0..=8usize);
            let f = Poly::from_coeffs(
                ctx,
                (0..=df).map(|_| ctx.element(rng.gen_range(0..q))).collect(),
            );
            let w = wedge(&f, &g).unwrap();
            let o = wedge_oracle(&f, &g).unwrap();
            assert_eq!(w.h.poly(), &o, "q={q} f={f} g={g}");
            assert_eq!(w.h.degree() * w.r, g.degree());
            checked += 1;
        }
    }
    assert!(checked >= 1000, "checked {checked} pairs");
    pass(8, "wedge oracle equivalence", started);
}

#[test]
fn criterion_09_artin_experiment_reduced_scale() {
    let started = Instant::now();
    let f = IntQuad { b: 1, r: -1 }; // x^2 + x - 1
    let g = IntQuad { b: 2, r: -1 }; // x^2 + 2x - 1

    // admissible residues mod 40 are exactly {3, 13, 27, 37}
    let primes = admissible_primes(f, g, 2000).unwrap();
    assert_eq!(primes.len(), 2000);
    let mut residues: Vec<u64> = primes.iter().map(|p| p % 40).collect();
    residues.sort_unstable();
    residues.dedup();
    assert_eq!(residues, vec![3, 13, 27, 37]);

    let (rows, report) = artin_experiment(f, g, 2000).unwrap();
    assert_eq!(rows.len(), 2000);

    // exactly one prime has T(p) = 1, and it is 163
    let full: Vec<u64> = rows
        .iter()
        .filter(|r| r.t_num == r.t_den)
        .map(|r| r.p)
        .collect();
    assert_eq!(full, vec![163]);

    // transients lie in {0, 1, 2} with proportions near (3/8, 3/8, 1/4)
    let total = rows.len() as f64;
    assert!(report.transient_hist.keys().all(|&t| t <= 2));
    let prop = |t: u64| *report.transient_hist.get(&t).unwrap_or(&0) as f64 / total;
    let (p0, p1, p2) = (prop(0), prop(1), prop(2));
    println!("  transient proportions: {p0:.4} {p1:.4} {p2:.4}");
    assert!((p0 - 0.375).abs() <= 0.05, "transient-0 proportion {p0}");
    assert!((p1 - 0.375).abs() <= 0.05, "transient-1 proportion {p1}");
    assert!((p2 - 0.250).abs() <= 0.05, "transient-2 proportion {p2}");

    // denominator structure of the normalized periods
    let odd_denominator = rows.iter().filter(|r| r.t_den % 2 == 1).count();
    let odd_reciprocal = rows
        .iter()
        .filter(|r| r.t_num == 1 && r.t_den % 2 == 1)
        .count();
    let literal = odd_denominator as f64 / total;
    let reciprocal = odd_reciprocal as f64 / total;
    println!("  odd reduced denominators: {odd_denominator}/2000 = {literal:.4}");
    println!("  odd-reciprocal step locations (T = 1/odd): {odd_reciprocal}/2000 = {reciprocal:.4}");
    if literal > 0.01 {
        println!("acceptance criterion 9 (artin experiment at reduced scale): FAIL");
        println!("  the <= 1% bound on odd denominators cannot hold: every observed");
        println!("  limit-cycle period is even, and half the admissible primes have");
        println!("  p = 3 (mod 8), which forces an odd reduced denominator; the");
        println!("  distribution's step locations at odd reciprocals carry {reciprocal:.4}");
        println!("  of the mass at this scale (vanishing as the prime count grows).");
    }
    assert!(
        literal <= 0.01,
        "fraction of T values with odd denominator = {literal:.4} (odd-reciprocal fraction = {reciprocal:.4}); \
         the stated bound conflicts with the period parity structure; see the analysis above"
    );
    pass(9, "artin experiment at reduced scale", started);
}

#[test]
fn criterion_10_degree_invariance_and_multiplicity_bounds() {
    let started = Instant::now();
    // prime-degree blocks keep their degree under self-wedging when the
    // characteristic differs from the degree
    for (p, k, n) in [
        (2u64, 1u32, 3usize),
        (3, 1, 2),
        (2, 2, 3),
        (5, 1, 2),
        (5, 1, 3),
        (3, 1, 5),
    ] {
        let ctx = fq(p, k);
        let q = ctx.order().unwrap();
        assert_ne!(p as usize, n);
        for block in partition_blocks(&ctx, n).unwrap() {
            let f = block.rep();
            for bi in 1..q {
                let b = ctx.element(bi);
                assert_eq!(
                    wedge(f.poly(), &f.shift(&b)).unwrap().h.degree(),
                    n,
                    "q={q} n={n}"
                );
            }
        }
    }
    // arc multiplicity in extension graphs is bounded by the degree
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        let ctx = fq(p, k);
        for n in [2usize, 3] {
            let members: Vec<IrrPoly> = enumerate_irreducibles(&ctx, n).unwrap().collect();
            if members.is_empty() {
                continue;
            }
            let graph = build_graph(&PolySet::new(&ctx, members).unwrap()).unwrap();
            for arc in &graph.arcs {
                assert!(
                    arc.omega.len() <= n,
                    "q={} n={n} multiplicity {}",
                    ctx.order().unwrap(),
                    arc.omega.len()
                );
            }
        }
    }
    pass(10, "degree invariance and multiplicity bounds", started);
}

#[test]
fn cross_check_periodic_counts_match_enumeration() {
    // the period-1 construction agrees with the type-I census used in
    // criterion 3, tying the two counting routes together
    let started = Instant::now();
    for q in [5u64, 7, 11, 13] {
        let ctx = fp(q);
        let fixed = construct_periodic_sets(&ctx, 1).unwrap();
        let report = enumerate_stable_2sets(&ctx, 2).unwrap();
        assert_eq!(fixed.len() as u64, report.count_i, "q={q}");
        for rec in &fixed {
            let (f, g) = &rec.pairs[0];
            assert_eq!(classify_2set(f, g).unwrap(), TwoSetType::TypeI);
            // both members reconstruct through the skew coordinates
            let s = pair_to_state(f.poly(), g.poly()).unwrap();
            let (f2, g2) = state_to_pair(&s).unwrap();
            assert_eq!((&f2, &g2), (f.poly(), g.poly()));
        }
    }
    println!(
        "cross-check (periodic construction vs stable-set census): PASS [{} ms]",
        started.elapsed().as_millis()
    );
}
