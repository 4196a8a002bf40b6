//! Verification suites run by `sgrank verify`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sgrank::groebner::{buchberger, monomial_ideal_dimension, Ideal};
use sgrank::polyring::{parse_polynomial, Field, Matrix, Monomial, MonomialOrder, Polynomial, Ring, DEFAULT_PRIME};
use sgrank::rank::{gr_with, matrix_rank, sgr_with, RankOptions};
use sgrank::strata::{
    binary_cubic_coefficients, binary_cubic_discriminant, line_tangency, membership_s, random_form, sample_c_ir,
    sample_reducible, sample_secant_tangential, sample_tangential, ProjectiveLine, Tangency,
};
use sgrank::tensor::{
    big_cw, complete_homogeneous_cubic, identity_tensor, max_compressibility, small_cw, sym_matrix_mult,
    table1_normal_form, GeneralTensor, Hypergraph, SymmetricTensor,
};

pub const SUITES: &[&str] =
    &["identity", "paper-values", "sm", "matrices", "lemmas", "strata", "discriminant", "tangency", "engine"];

/// Settings shared by every case.
pub struct Ctx {
    pub field: Field,
    pub timeout: Duration,
    pub seed: u64,
}

/// `Ok` carries a short description of what held, `Err` what did not.
type Outcome = Result<String, String>;

pub struct Case {
    pub name: String,
    check: Box<dyn Fn(&Ctx) -> Outcome + Send + Sync>,
}

pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

fn case(name: impl Into<String>, check: impl Fn(&Ctx) -> Outcome + Send + Sync + 'static) -> Case {
    Case { name: name.into(), check: Box::new(check) }
}

/// The cases of a named suite, or `None` for an unknown name. `all` is
/// every suite in order.
pub fn cases(suite: &str) -> Option<Vec<Case>> {
    Some(match suite {
        "identity" => identity(),
        "paper-values" => paper_values(),
        "sm" => sm(),
        "matrices" => matrices(),
        "lemmas" => lemmas(),
        "strata" => strata(),
        "discriminant" => discriminant(),
        "tangency" => tangency(),
        "engine" => engine(),
        "all" => SUITES.iter().flat_map(|s| cases(s).expect("known suite")).collect(),
        _ => return None,
    })
}

/// Runs the cases on the current rayon pool, keeping their order.
pub fn run(cases: &[Case], ctx: &Ctx) -> Vec<CaseResult> {
    cases
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let out = (c.check)(ctx);
            let (passed, detail) = match out {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CaseResult { name: c.name.clone(), passed, detail, elapsed: start.elapsed() }
        })
        .collect()
}

fn opts(ctx: &Ctx) -> RankOptions {
    RankOptions::with_timeout(ctx.timeout)
}

fn sgr_in(f: &Polynomial, ctx: &Ctx) -> Result<usize, String> {
    let f = f.change_field(ctx.field).map_err(|e| e.to_string())?;
    sgr_with(&f, &opts(ctx)).map(|c| c.codim).map_err(|e| e.to_string())
}

fn gr_in(t: &GeneralTensor, ctx: &Ctx) -> Result<usize, String> {
    let t = t.change_field(ctx.field).map_err(|e| e.to_string())?;
    gr_with(&t, t.order() - 1, &opts(ctx)).map(|c| c.codim).map_err(|e| e.to_string())
}

fn expect(what: &str, got: usize, want: usize) -> Outcome {
    if got == want {
        Ok(format!("{what} = {got}"))
    } else {
        Err(format!("{what} = {got}, expected {want}"))
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn rng(ctx: &Ctx, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(stream))
}

fn q(v: i64) -> sgrank::polyring::FieldElement {
    Field::Rational.from_i64(v)
}

fn identity() -> Vec<Case> {
    let mut out = Vec::new();
    for d in [3usize, 4] {
        for n in 0..=6usize {
            out.push(case(format!("identity d={d} n={n}"), move |ctx| {
                for k in 1..=n + 1 {
                    let f = identity_tensor(k, n, d).and_then(|t| t.to_polynomial()).map_err(err)?;
                    let s = sgr_in(&f, ctx)?;
                    if s != k {
                        return Err(format!("k={k}: sgr = {s}"));
                    }
                }
                Ok(format!("sgr = k for k = 1..={}", n + 1))
            }));
        }
    }
    out
}

fn tensor_case(name: String, t: sgrank::Result<SymmetricTensor>, want: usize) -> Case {
    case(name, move |ctx| {
        let t = t.as_ref().map_err(err)?;
        expect("sgr", sgr_in(&t.to_polynomial().map_err(err)?, ctx)?, want)
    })
}

fn poly_case(name: String, f: sgrank::Result<Polynomial>, want: usize) -> Case {
    case(name, move |ctx| expect("sgr", sgr_in(f.as_ref().map_err(err)?, ctx)?, want))
}

fn paper_values() -> Vec<Case> {
    let mut out = Vec::new();
    for q in 1..=4 {
        for n in q + 1..=5 {
            out.push(tensor_case(format!("big_cw q={q} n={n}"), big_cw(q, n), 2));
        }
    }
    for q in 2..=4 {
        for n in q..=5 {
            out.push(tensor_case(format!("small_cw q={q} n={n}"), small_cw(q, n), 2));
            out.push(tensor_case(format!("max_compressibility q={q} n={n}"), max_compressibility(q, n), 2));
        }
    }
    for n in 2..=5 {
        out.push(poly_case(format!("h3 n={n}"), complete_homogeneous_cubic(n), n + 1));
    }
    for (n, v) in [(2, 1), (2, 2), (3, 1), (4, 1)] {
        out.push(poly_case(format!("normal form n={n} variant {v}"), table1_normal_form(n, v), 2));
    }
    out.push(case("binary 3*x0^2*x1: sgr 1, gr 2", |ctx| {
        let f = parse_polynomial("3*x0^2*x1", Ring::rational(2)).map_err(err)?;
        let t = SymmetricTensor::from_polynomial(&f, 3).map_err(err)?.to_general();
        let (s, g) = (sgr_in(&f, ctx)?, gr_in(&t, ctx)?);
        if (s, g) == (1, 2) {
            Ok(format!("sgr = {s}, gr = {g}"))
        } else {
            Err(format!("sgr = {s}, gr = {g}"))
        }
    }));
    out.push(case("big_cw q=2 n=3: gr 3", |ctx| {
        expect("gr", gr_in(&big_cw(2, 3).map_err(err)?.to_general(), ctx)?, 3)
    }));
    out.push(poly_case("sym_matrix_mult m=2".into(), sym_matrix_mult(2), 2));
    out.push(case("triangle graph", |ctx| {
        let h = Hypergraph::parse("1 2\n2 3\n1 3\n").map_err(err)?;
        expect("sgr", sgr_in(&h.tensor().and_then(|t| t.to_polynomial()).map_err(err)?, ctx)?, 3)
    }));
    out.push(case("single 3-edge on 3 vertices", |ctx| {
        // V(x1*x2, x0*x2, x0*x1) is the union of the coordinate axes
        let h = Hypergraph::parse("1 2 3\n").map_err(err)?;
        expect("sgr", sgr_in(&h.tensor().and_then(|t| t.to_polynomial()).map_err(err)?, ctx)?, 2)
    }));
    out
}

fn sm() -> Vec<Case> {
    vec![
        poly_case("sym_matrix_mult m=2".into(), sym_matrix_mult(2), 2),
        case("sym_matrix_mult m=3 (recorded)", |ctx| {
            let f = sym_matrix_mult(3).map_err(err)?;
            Ok(format!("sgr = {}", sgr_in(&f, ctx)?))
        }),
        case(format!("sym_matrix_mult m=4 over Fp:{DEFAULT_PRIME}"), |ctx| {
            let f = sym_matrix_mult(4).map_err(err)?;
            let fp = Ctx { field: Field::Prime(DEFAULT_PRIME), timeout: ctx.timeout, seed: ctx.seed };
            expect("sgr", sgr_in(&f, &fp)?, 8)
        }),
    ]
}

/// A random symmetric `m x m` integer matrix with entries in `[-3, 3]`.
#[allow(clippy::needless_range_loop)]
fn random_symmetric(m: usize, rng: &mut impl Rng) -> Matrix {
    let mut a = vec![vec![q(0); m]; m];
    for i in 0..m {
        for j in i..m {
            let v = q(rng.gen_range(-3..=3));
            a[i][j] = v.clone();
            a[j][i] = v;
        }
    }
    a
}

/// Low rank is common: `B^T D B` with a random diagonal `D` of size `r`.
fn random_symmetric_of_rank_at_most(m: usize, r: usize, rng: &mut impl Rng) -> Matrix {
    let b: Vec<Vec<i64>> = (0..r).map(|_| (0..m).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let d: Vec<i64> = (0..r).map(|_| [-2, -1, 1, 2][rng.gen_range(0..4)]).collect();
    (0..m).map(|i| (0..m).map(|j| q((0..r).map(|k| b[k][i] * d[k] * b[k][j]).sum())).collect()).collect()
}

fn matrices() -> Vec<Case> {
    (0..10u64)
        .map(|batch| {
            case(format!("symmetric matrices {}-{}", batch * 10, batch * 10 + 9), move |ctx| {
                let mut rng = rng(ctx, 100 + batch);
                let mut ranks = Vec::new();
                for i in 0..10 {
                    let m = rng.gen_range(1..=6);
                    let a = loop {
                        let a = if i % 2 == 0 {
                            random_symmetric(m, &mut rng)
                        } else {
                            let r = rng.gen_range(1..=m);
                            random_symmetric_of_rank_at_most(m, r, &mut rng)
                        };
                        if a.iter().flatten().any(|v| !v.is_zero()) {
                            break a;
                        }
                    };
                    let t = GeneralTensor::from_matrix(&a).map_err(err)?;
                    let f = t.to_symmetric().and_then(|s| s.to_polynomial()).map_err(err)?;
                    let (s, g, r) = (sgr_in(&f, ctx)?, gr_in(&t, ctx)?, matrix_rank(&a));
                    if s != r || g != r {
                        return Err(format!("m={m}: sgr {s}, gr {g}, rank {r}"));
                    }
                    ranks.push(r);
                }
                Ok(format!("sgr = gr = rank for ranks {ranks:?}"))
            })
        })
        .collect()
}

/// A random cubic in `nvars` variables keeping each monomial of a dense
/// random form with probability 2/5.
fn random_cubic(nvars: usize, rng: &mut impl Rng) -> Polynomial {
    loop {
        let dense = random_form(nvars, 3, rng);
        let kept: Vec<_> = dense.terms().iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        let f = Polynomial::from_terms(dense.ring(), kept).expect("terms of a valid polynomial");
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_matrix(m: usize, deficient: bool, rng: &mut impl Rng) -> Matrix {
    let mut a: Vec<Vec<i64>> = (0..m).map(|_| (0..m).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    if deficient && m >= 2 {
        let (r0, r1) = (a[0].clone(), a[1].clone());
        a[m - 1] = r0.iter().zip(&r1).map(|(x, y)| x - y).collect();
    }
    a.into_iter().map(|r| r.into_iter().map(q).collect()).collect()
}

fn cubic_tensor(f: &Polynomial) -> Result<SymmetricTensor, String> {
    SymmetricTensor::from_polynomial(f, 3).map_err(err)
}

fn lemmas() -> Vec<Case> {
    let mut out = Vec::new();
    for batch in 0..5u64 {
        out.push(case(format!("monotone under matrix action, batch {batch}"), move |ctx| {
            let mut rng = rng(ctx, 200 + batch);
            for i in 0..10 {
                let n = rng.gen_range(2..=4);
                let t = cubic_tensor(&random_cubic(n, &mut rng))?;
                let a = random_matrix(n, i % 3 == 0, &mut rng);
                let image = t.apply_matrix(&a).map_err(err)?;
                if image.is_zero() {
                    continue;
                }
                let (before, after) = (
                    sgr_in(&t.to_polynomial().map_err(err)?, ctx)?,
                    sgr_in(&image.to_polynomial().map_err(err)?, ctx)?,
                );
                if after > before {
                    return Err(format!("sgr(A.T) = {after} > sgr(T) = {before}"));
                }
                if after != before && matrix_rank(&a) == n {
                    return Err(format!("invertible A but sgr(A.T) = {after} != sgr(T) = {before}"));
                }
            }
            Ok("sgr(A.T) <= sgr(T) on 10 actions, equal when A is invertible".into())
        }));
    }
    for batch in 0..3u64 {
        out.push(case(format!("additive on direct sums, batch {batch}"), move |ctx| {
            let mut rng = rng(ctx, 300 + batch);
            for _ in 0..10 {
                let s = cubic_tensor(&random_cubic(rng.gen_range(1..=3), &mut rng))?;
                let t = cubic_tensor(&random_cubic(rng.gen_range(1..=3), &mut rng))?;
                let sum = s.direct_sum(&t).map_err(err)?;
                let [a, b, c] = [&s, &t, &sum].map(|x| x.to_polynomial().map_err(err).and_then(|f| sgr_in(&f, ctx)));
                let (a, b, c) = (a?, b?, c?);
                if c != a + b {
                    return Err(format!("sgr(S+T) = {c}, sgr(S) + sgr(T) = {a} + {b}"));
                }
            }
            Ok("sgr(S (+) T) = sgr(S) + sgr(T) on 10 pairs".into())
        }));
        out.push(case(format!("subadditive, batch {batch}"), move |ctx| {
            let mut rng = rng(ctx, 400 + batch);
            for _ in 0..10 {
                let n = rng.gen_range(2..=4);
                let (f, g) = (random_cubic(n, &mut rng), random_cubic(n, &mut rng));
                let h = f.add(&g).map_err(err)?;
                if h.is_zero() {
                    continue;
                }
                let (a, b, c) = (sgr_in(&f, ctx)?, sgr_in(&g, ctx)?, sgr_in(&h, ctx)?);
                if c > a + b {
                    return Err(format!("sgr(S+T) = {c} > {a} + {b}"));
                }
            }
            Ok("sgr(S+T) <= sgr(S) + sgr(T) on 10 pairs".into())
        }));
        out.push(case(format!("sgr <= gr, batch {batch}"), move |ctx| {
            let mut rng = rng(ctx, 500 + batch);
            for _ in 0..10 {
                let f = random_cubic(rng.gen_range(2..=4), &mut rng);
                let (s, g) = (sgr_in(&f, ctx)?, gr_in(&cubic_tensor(&f)?.to_general(), ctx)?);
                if s > g {
                    return Err(format!("sgr {s} > gr {g} for {f}"));
                }
            }
            Ok("sgr <= gr on 10 cubics".into())
        }));
    }
    out
}

fn chain_ok(f: &Polynomial, n: usize, ctx: &Ctx) -> Result<(), String> {
    let f = f.change_field(ctx.field).map_err(err)?;
    let members = (0..=n + 1).map(|r| membership_s(&f, r).map_err(err)).collect::<Result<Vec<_>, _>>()?;
    if members.windows(2).any(|w| w[0] && !w[1]) || !members[n + 1] {
        return Err(format!("membership chain broken: {members:?}"));
    }
    Ok(())
}

fn strata() -> Vec<Case> {
    let mut out = Vec::new();
    for batch in 0..10u64 {
        out.push(case(format!("tangential seeds {}-{}", batch * 10, batch * 10 + 9), move |ctx| {
            for seed in batch * 10..batch * 10 + 10 {
                let n = 1 + (seed % 4) as usize;
                let f = sample_tangential(n, 3, ctx.seed + seed).map_err(err)?;
                let s = sgr_in(&f, ctx)?;
                if s != 1 {
                    return Err(format!("seed {seed}, n={n}: sgr = {s}"));
                }
            }
            Ok("all sgr = 1".into())
        }));
    }
    for n in 1..=3usize {
        for r in 1..=n {
            out.push(case(format!("secant r={r} n={n}, 100 seeds"), move |ctx| {
                let mut equal = 0;
                let mut missed = Vec::new();
                for seed in 0..100 {
                    let f = sample_secant_tangential(r, n, ctx.seed + seed).map_err(err)?;
                    let s = sgr_in(&f, ctx)?;
                    if s > r {
                        return Err(format!("seed {seed}: sgr = {s} > {r}"));
                    }
                    if s == r {
                        equal += 1;
                    } else {
                        missed.push(seed);
                    }
                }
                let msg = format!("sgr <= r always, sgr = r on {equal}/100 (other seeds {missed:?})");
                if equal >= 95 {
                    Ok(msg)
                } else {
                    Err(msg)
                }
            }));
        }
    }
    for batch in 0..5u64 {
        out.push(case(format!("C_ir n=3 seeds {}-{}", batch * 10, batch * 10 + 9), move |ctx| {
            for seed in batch * 10..batch * 10 + 10 {
                let s = sgr_in(&sample_c_ir(3, ctx.seed + seed).map_err(err)?, ctx)?;
                if s != 2 {
                    return Err(format!("seed {seed}: sgr = {s}"));
                }
            }
            Ok("all sgr = 2".into())
        }));
        out.push(case(format!("reducible 2*1 n=3 seeds {}-{}", batch * 10, batch * 10 + 9), move |ctx| {
            for seed in batch * 10..batch * 10 + 10 {
                let s = sgr_in(&sample_reducible(2, 1, 3, ctx.seed + seed).map_err(err)?, ctx)?;
                if s != 2 {
                    return Err(format!("seed {seed}: sgr = {s}"));
                }
            }
            Ok("all sgr = 2".into())
        }));
    }
    out.push(case("membership chain on samples", |ctx| {
        for seed in 0..10 {
            let s = ctx.seed + seed;
            chain_ok(&sample_tangential(3, 3, s).map_err(err)?, 3, ctx)?;
            chain_ok(&sample_secant_tangential(2, 3, s).map_err(err)?, 3, ctx)?;
            chain_ok(&sample_c_ir(3, s).map_err(err)?, 3, ctx)?;
            chain_ok(&sample_reducible(2, 1, 3, s).map_err(err)?, 3, ctx)?;
        }
        Ok("membership in S_r implies S_(r+1), every sample in S_(n+1)".into())
    }));
    out
}

fn binary_cubic(a: [i64; 4]) -> Polynomial {
    let terms = (0..4u16).map(|k| (Monomial::from_exponents(&[3 - k, k]), q(a[k as usize])));
    Polynomial::from_terms(Ring::rational(2), terms).expect("valid terms")
}

fn discriminant_agrees(f: &Polynomial, ctx: &Ctx) -> Outcome {
    let [a1, a2, a3, a4] = binary_cubic_coefficients(f).map_err(err)?;
    let disc = binary_cubic_discriminant(&a1, &a2, &a3, &a4);
    let s = sgr_in(f, ctx)?;
    if disc.is_zero() == (s <= 1) {
        Ok(format!("disc {disc}, sgr {s}"))
    } else {
        Err(format!("{f}: disc {disc} but sgr {s}"))
    }
}

fn discriminant() -> Vec<Case> {
    let crafted: [(&str, [i64; 4]); 10] = [
        ("x^3 + y^3", [1, 0, 0, 1]),
        ("x^2*y", [0, 1, 0, 0]),
        ("x^3", [1, 0, 0, 0]),
        ("y^3", [0, 0, 0, 1]),
        ("x*y^2", [0, 0, 1, 0]),
        ("x^2*(x + y)", [1, 1, 0, 0]),
        ("(x + y)^3", [1, 3, 3, 1]),
        ("x*(x^2 - 3*y^2)", [1, 0, -3, 0]),
        ("x*y*(x - y)", [0, 1, -1, 0]),
        ("(x - y)^2*(x + 2*y)", [1, 0, -3, 2]),
    ];
    let mut out: Vec<Case> = crafted
        .into_iter()
        .map(|(name, a)| case(format!("crafted {name}"), move |ctx| discriminant_agrees(&binary_cubic(a), ctx)))
        .collect();
    for batch in 0..4u64 {
        out.push(case(format!("random binary cubics, batch {batch}"), move |ctx| {
            let mut rng = rng(ctx, 700 + batch);
            let mut singular = 0;
            for i in 0..50 {
                // half uniform coefficients, half with a forced square factor
                let f = if i % 2 == 0 {
                    let a = loop {
                        let a: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5));
                        if a.iter().any(|&v| v != 0) {
                            break a;
                        }
                    };
                    binary_cubic(a)
                } else {
                    let l = random_form(2, 1, &mut rng);
                    let m = random_form(2, 1, &mut rng);
                    l.mul(&l).and_then(|l2| l2.mul(&m)).map_err(err)?
                };
                discriminant_agrees(&f, ctx)?;
                if sgr_in(&f, ctx)? <= 1 {
                    singular += 1;
                }
            }
            Ok(format!("disc = 0 <=> sgr <= 1 on 50 cubics ({singular} singular)"))
        }));
    }
    out
}

fn tangency() -> Vec<Case> {
    vec![
        case("rank-one cubics at n=2: 20 lines each tangent or contained", |ctx| {
            let mut rng = rng(ctx, 800);
            for seed in 0..20 {
                let f = sample_tangential(2, 3, ctx.seed + seed).map_err(err)?;
                for _ in 0..20 {
                    let line = ProjectiveLine::random(2, &mut rng);
                    if line_tangency(&f, &line).map_err(err)? == Tangency::Transversal {
                        return Err(format!("{f} has a transversal line {line:?}"));
                    }
                }
            }
            Ok("400 lines, none transversal".into())
        }),
        case("smooth cubics at n=2: a transversal line within 20 trials", |ctx| {
            let mut rng = rng(ctx, 801);
            let mut tries = Vec::new();
            while tries.len() < 10 {
                let f = random_form(3, 3, &mut rng);
                if sgr_in(&f, ctx)? != 3 {
                    continue;
                }
                let hit = (1..=20).find(|_| {
                    matches!(line_tangency(&f, &ProjectiveLine::random(2, &mut rng)), Ok(Tangency::Transversal))
                });
                match hit {
                    Some(k) => tries.push(k),
                    None => return Err(format!("no transversal line for {f}")),
                }
            }
            Ok(format!("trials needed: {tries:?}"))
        }),
    ]
}

/// Dimension of a monomial ideal by checking every coordinate subspace.
fn brute_force_dimension(nvars: usize, gens: &[Monomial]) -> i64 {
    let masks: Vec<u64> = gens.iter().map(Monomial::support_mask).collect();
    if masks.contains(&0) {
        return -1;
    }
    // the subspace spanned by the variables in `s` lies in V(I) iff every
    // generator involves a variable outside `s`
    (0u64..1 << nvars)
        .filter(|s| masks.iter().all(|m| m & !s != 0))
        .map(|s| i64::from(s.count_ones()))
        .max()
        .unwrap_or(-1)
}

/// Ideals checked for field and order independence.
fn engine_ideals(ctx: &Ctx) -> Result<Vec<(String, Polynomial)>, String> {
    let mut fs: Vec<(String, Polynomial)> = Vec::new();
    let mut push = |name: String, f: sgrank::Result<Polynomial>| -> Result<(), String> {
        fs.push((name, f.map_err(err)?));
        Ok(())
    };
    for k in 1..=4 {
        push(format!("identity k={k}"), identity_tensor(k, 3, 3).and_then(|t| t.to_polynomial()))?;
    }
    for (q, n) in [(1, 2), (2, 3), (3, 5)] {
        push(format!("big_cw {q},{n}"), big_cw(q, n).and_then(|t| t.to_polynomial()))?;
        push(format!("small_cw {q},{n}"), small_cw(q, n).and_then(|t| t.to_polynomial()))?;
    }
    push("h3 n=4".into(), complete_homogeneous_cubic(4))?;
    for (n, v) in [(2, 1), (2, 2), (3, 1), (4, 1)] {
        push(format!("normal form {n},{v}"), table1_normal_form(n, v))?;
    }
    push("sM(2)".into(), sym_matrix_mult(2))?;
    push("sM(3)".into(), sym_matrix_mult(3))?;
    for s in 0..5 {
        let seed = ctx.seed + s;
        push(format!("tangential seed {seed}"), sample_tangential(3, 3, seed))?;
        push(format!("secant r=2 seed {seed}"), sample_secant_tangential(2, 3, seed))?;
        push(format!("C_ir seed {seed}"), sample_c_ir(3, seed))?;
        push(format!("reducible seed {seed}"), sample_reducible(2, 1, 3, seed))?;
    }
    let mut rng = rng(ctx, 900);
    for i in 0..10 {
        push(format!("random cubic {i}"), Ok(random_cubic(4, &mut rng)))?;
    }
    Ok(fs)
}

fn engine() -> Vec<Case> {
    vec![
        case("monomial ideal dimension vs brute force", |ctx| {
            let mut rng = rng(ctx, 1000);
            for _ in 0..300 {
                let n = rng.gen_range(1..=6);
                let gens: Vec<Monomial> = (0..rng.gen_range(1..=5))
                    .map(|_| {
                        let e: Vec<u16> =
                            (0..n).map(|_| if rng.gen_bool(0.35) { rng.gen_range(1..=2) } else { 0 }).collect();
                        Monomial::from_exponents(&e)
                    })
                    .collect();
                let want = brute_force_dimension(n, &gens);
                let direct = monomial_ideal_dimension(n, &gens);
                let ring = Ring::new(n, ctx.field);
                let polys: Vec<Polynomial> =
                    gens.iter().map(|m| Polynomial::monomial(ring, m.clone(), ctx.field.one())).collect();
                let via_gb = buchberger(&Ideal::new(polys).map_err(err)?).dimension();
                if direct != want || via_gb != want {
                    return Err(format!("{gens:?}: brute force {want}, direct {direct}, basis {via_gb}"));
                }
            }
            Ok("300 random monomial ideals agree".into())
        }),
        case("QQ vs Fp and grevlex vs lex", |ctx| {
            let fs = engine_ideals(ctx)?;
            let prime = Field::Prime(DEFAULT_PRIME);
            for (name, f) in &fs {
                let mut dims = Vec::new();
                for (field, order) in [
                    (Field::Rational, MonomialOrder::Grevlex),
                    (prime, MonomialOrder::Grevlex),
                    (Field::Rational, MonomialOrder::Lex),
                ] {
                    let g = f.change_field(field).map_err(err)?;
                    let o = RankOptions { order, budget: opts(ctx).budget };
                    dims.push(sgr_with(&g, &o).map_err(err)?.codim);
                }
                if dims.windows(2).any(|w| w[0] != w[1]) {
                    return Err(format!("{name}: QQ/grevlex, Fp/grevlex, QQ/lex give {dims:?}"));
                }
            }
            Ok(format!("{} ideals agree", fs.len()))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_oracle() {
        let m = |e: &[u16]| Monomial::from_exponents(e);
        assert_eq!(brute_force_dimension(3, &[m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])]), 1);
        assert_eq!(brute_force_dimension(2, &[m(&[0, 0])]), -1);
        assert_eq!(brute_force_dimension(3, &[m(&[2, 0, 0])]), 2);
    }

    #[test]
    fn every_suite_is_known() {
        for s in SUITES {
            assert!(!cases(s).unwrap().is_empty());
        }
        assert!(cases("nope").is_none());
    }
}
