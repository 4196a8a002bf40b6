//! The loci `S_{d,r}` of forms with symmetric geometric rank at most `r`:
//! membership, seeded samplers for their known components, the binary
//! cubic discriminant, and tangency of lines to a hypersurface.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{Field, FieldElement, Monomial, Polynomial, Ring};
use crate::rank::{matrix_rank, sgr};

/// Sampler coefficients are uniform integers in `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 5;

/// A linear form `sum a_i x_i`, stored by its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a linear form needs at least one coefficient".into()));
        }
        let field = coeffs[0].field();
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::RingMismatch("coefficients over different fields".into()));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    /// True when one is a scalar multiple of the other (zero is
    /// proportional to everything).
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        self.coeffs.len() == other.coeffs.len() && rank_of(&[&self.coeffs, &other.coeffs]) < 2
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let ring = Ring::new(self.coeffs.len(), self.coeffs[0].field());
        Polynomial::linear_form(ring, &self.coeffs).expect("length matches ring")
    }

    /// Uniform coefficients in `[-COEFF_BOUND, COEFF_BOUND]`, resampled
    /// until nonzero.
    pub fn random<R: Rng>(nvars: usize, rng: &mut R) -> LinearForm {
        loop {
            let coeffs: Vec<FieldElement> =
                (0..nvars).map(|_| Field::Rational.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))).collect();
            let l = LinearForm { coeffs };
            if !l.is_zero() {
                return l;
            }
        }
    }
}

fn rank_of(rows: &[&Vec<FieldElement>]) -> usize {
    matrix_rank(&rows.iter().map(|r| (*r).clone()).collect::<Vec<_>>())
}

/// The line through two independent points of projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveLine {
    p: Vec<FieldElement>,
    q: Vec<FieldElement>,
}

impl ProjectiveLine {
    pub fn new(p: Vec<FieldElement>, q: Vec<FieldElement>) -> Result<Self> {
        if p.len() != q.len() || p.is_empty() {
            return Err(Error::ShapeMismatch {
                expected: format!("two points with {} coordinates", p.len()),
                found: format!("{} coordinates", q.len()),
            });
        }
        if rank_of(&[&p, &q]) < 2 {
            return Err(Error::InvalidParameter("points are proportional".into()));
        }
        Ok(ProjectiveLine { p, q })
    }

    pub fn points(&self) -> (&[FieldElement], &[FieldElement]) {
        (&self.p, &self.q)
    }

    /// A line through two random integer points of `P^n`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> ProjectiveLine {
        loop {
            let p = LinearForm::random(n + 1, rng).coeffs;
            let q = LinearForm::random(n + 1, rng).coeffs;
            if let Ok(l) = ProjectiveLine::new(p, q) {
                return l;
            }
        }
    }
}

/// True iff `sgr(f) <= r`.
pub fn membership_s(f: &Polynomial, r: usize) -> Result<bool> {
    Ok(sgr(f)? <= r)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn product(factors: &[&Polynomial]) -> Polynomial {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, f| acc.mul(f).expect("same ring"))
}

/// `L^{d-1} M` for random non-proportional linear forms in `n+1` variables.
pub fn sample_tangential(n: usize, d: u32, seed: u64) -> Result<Polynomial> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidParameter(format!("tangential sampler needs n >= 1, d >= 2 (n={n}, d={d})")));
    }
    let mut rng = rng_for(seed);
    loop {
        let l = LinearForm::random(n + 1, &mut rng);
        let m = LinearForm::random(n + 1, &mut rng);
        if !l.is_proportional(&m) {
            return Ok(l.to_polynomial().pow(d - 1).mul(&m.to_polynomial()).expect("same ring"));
        }
    }
}

/// `L_1^2 M_1 + ... + L_r^2 M_r` for random linear forms; `sgr <= r` always.
pub fn sample_secant_tangential(r: usize, n: usize, seed: u64) -> Result<Polynomial> {
    if r < 1 || r > n + 1 {
        return Err(Error::InvalidParameter(format!("secant sampler needs 1 <= r <= n+1 (r={r}, n={n})")));
    }
    if r == 1 {
        return sample_tangential(n, 3, seed);
    }
    let mut rng = rng_for(seed);
    loop {
        let mut f = Polynomial::zero(Ring::rational(n + 1));
        for _ in 0..r {
            let l = LinearForm::random(n + 1, &mut rng).to_polynomial();
            let m = LinearForm::random(n + 1, &mut rng).to_polynomial();
            f = f.add(&product(&[&l, &l, &m]))?;
        }
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// `L_1^2 M_1 + L_2^2 M_2 + L_1 L_2 M_3` with `L_1, L_2` independent,
/// `M_1, M_2` nonzero and `M_1, M_2, M_3` not all proportional.
pub fn sample_c_ir(n: usize, seed: u64) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("C_ir sampler needs n >= 2 (n={n})")));
    }
    let mut rng = rng_for(seed);
    loop {
        let l1 = LinearForm::random(n + 1, &mut rng);
        let l2 = LinearForm::random(n + 1, &mut rng);
        let m1 = LinearForm::random(n + 1, &mut rng);
        let m2 = LinearForm::random(n + 1, &mut rng);
        let m3 = LinearForm::random(n + 1, &mut rng);
        if l1.is_proportional(&l2) || rank_of(&[&m1.coeffs, &m2.coeffs, &m3.coeffs]) < 2 {
            continue;
        }
        let (l1, l2) = (l1.to_polynomial(), l2.to_polynomial());
        let f = product(&[&l1, &l1, &m1.to_polynomial()])
            .add(&product(&[&l2, &l2, &m2.to_polynomial()]))?
            .add(&product(&[&l1, &l2, &m3.to_polynomial()]))?;
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// A form of degree `d` in `nvars` variables with every coefficient drawn
/// uniformly, resampled until nonzero.
pub fn random_form<R: Rng>(nvars: usize, d: u32, rng: &mut R) -> Polynomial {
    let ring = Ring::rational(nvars);
    let monos = monomials_of_degree(nvars, d);
    loop {
        let terms =
            monos.iter().map(|m| (m.clone(), Field::Rational.from_i64(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))));
        let f = Polynomial::from_terms(ring, terms).expect("valid terms");
        if !f.is_zero() {
            return f;
        }
    }
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, d as u16, &mut vec![0; nvars], &mut out);
    out
}

/// `G * H` for random dense forms of degrees `d1` and `d2`.
pub fn sample_reducible(d1: u32, d2: u32, n: usize, seed: u64) -> Result<Polynomial> {
    if d1 < 1 || d2 < 1 || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "reducible sampler needs d1, d2, n >= 1 (d1={d1}, d2={d2}, n={n})"
        )));
    }
    let mut rng = rng_for(seed);
    let g = random_form(n + 1, d1, &mut rng);
    let h = random_form(n + 1, d2, &mut rng);
    g.mul(&h)
}

/// Discriminant of `a1 x^3 + a2 x^2 y + a3 x y^2 + a4 y^3`:
/// `a2^2 a3^2 - 4 a1 a3^3 - 4 a2^3 a4 + 18 a1 a2 a3 a4 - 27 a1^2 a4^2`.
pub fn binary_cubic_discriminant(
    a1: &FieldElement,
    a2: &FieldElement,
    a3: &FieldElement,
    a4: &FieldElement,
) -> FieldElement {
    let f = a1.field();
    let k = |v: i64| f.from_i64(v);
    let t1 = a2.pow(2).mul(&a3.pow(2));
    let t2 = k(4).mul(a1).mul(&a3.pow(3));
    let t3 = k(4).mul(&a2.pow(3)).mul(a4);
    let t4 = k(18).mul(a1).mul(a2).mul(a3).mul(a4);
    let t5 = k(27).mul(&a1.pow(2)).mul(&a4.pow(2));
    t1.sub(&t2).sub(&t3).add(&t4).sub(&t5)
}

/// Coefficients `(a1, a2, a3, a4)` of a binary cubic in `x0, x1`.
pub fn binary_cubic_coefficients(f: &Polynomial) -> Result<[FieldElement; 4]> {
    if f.nvars() != 2 {
        return Err(Error::ShapeMismatch { expected: "2 variables".into(), found: format!("{}", f.nvars()) });
    }
    if f.terms().iter().any(|(m, _)| m.degree() != 3) {
        return Err(Error::NotHomogeneous);
    }
    let c = |a: u16| f.coeff(&Monomial::from_exponents(&[a, 3 - a]));
    Ok([c(3), c(2), c(1), c(0)])
}

/// How a line meets a hypersurface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tangency {
    /// Some intersection point has multiplicity at least two.
    Tangent,
    /// The line meets the hypersurface in `d` distinct points.
    Transversal,
    /// The line lies inside the hypersurface.
    Contained,
}

/// The binary form `f(s*p + t*q)` in variables `(s, t)`.
pub fn restrict_to_line(f: &Polynomial, line: &ProjectiveLine) -> Result<Polynomial> {
    if line.p.len() != f.nvars() {
        return Err(Error::ShapeMismatch {
            expected: format!("points in {} coordinates", f.nvars()),
            found: format!("{}", line.p.len()),
        });
    }
    let field = f.field();
    let ring = Ring::new(2, field);
    let coords = |v: &FieldElement| match v.as_rational() {
        _ if v.field() == field => Ok(v.clone()),
        Some(q) => field.from_rational(q),
        None => Err(Error::RingMismatch(format!("line over {} but form over {field}", v.field()))),
    };
    let images = line
        .p
        .iter()
        .zip(&line.q)
        .map(|(a, b)| Polynomial::linear_form(ring, &[coords(a)?, coords(b)?]))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = Polynomial::zero(ring);
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(ring, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = t.mul(&images[i].pow(u32::from(e)))?;
            }
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Whether `line` is tangent to `V(f)`: the restriction of `f` to the line
/// has a repeated root in `P^1`.
pub fn line_tangency(f: &Polynomial, line: &ProjectiveLine) -> Result<Tangency> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.total_degree().expect("nonzero") as usize;
    let g = restrict_to_line(f, line)?;
    if g.is_zero() {
        return Ok(Tangency::Contained);
    }
    // dehomogenize at t = 1; the root t = 0 has multiplicity d - deg
    let mut u = vec![f.field().zero(); d + 1];
    for (m, c) in g.terms() {
        u[usize::from(m.exponents()[0])] = c.clone();
    }
    let u = trim(u);
    let at_infinity = d - (u.len() - 1);
    if at_infinity >= 2 || univariate_gcd(u.clone(), derivative(&u)).len() > 1 {
        Ok(Tangency::Tangent)
    } else {
        Ok(Tangency::Transversal)
    }
}

/// Drops leading zero coefficients (index = power).
fn trim(mut u: Vec<FieldElement>) -> Vec<FieldElement> {
    while u.len() > 1 && u.last().is_some_and(FieldElement::is_zero) {
        u.pop();
    }
    u
}

fn derivative(u: &[FieldElement]) -> Vec<FieldElement> {
    if u.len() <= 1 {
        return vec![u[0].field().zero()];
    }
    let f = u[0].field();
    trim(u.iter().enumerate().skip(1).map(|(k, c)| c.mul(&f.from_i64(k as i64))).collect())
}

fn is_zero_poly(u: &[FieldElement]) -> bool {
    u.len() == 1 && u[0].is_zero()
}

/// Remainder of `a` by nonzero `b`.
fn rem(mut a: Vec<FieldElement>, b: &[FieldElement]) -> Vec<FieldElement> {
    let lead = b.last().expect("nonzero divisor").inv();
    while a.len() >= b.len() && !is_zero_poly(&a) {
        let shift = a.len() - b.len();
        let c = a.last().expect("nonempty").mul(&lead);
        for (k, bk) in b.iter().enumerate() {
            a[shift + k] = a[shift + k].sub(&c.mul(bk));
        }
        a.pop();
        if a.is_empty() {
            return vec![c.field().zero()];
        }
        a = trim(a);
    }
    a
}

/// Monic-free gcd by the Euclidean algorithm; the zero polynomial is `[0]`.
fn univariate_gcd(mut a: Vec<FieldElement>, mut b: Vec<FieldElement>) -> Vec<FieldElement> {
    while !is_zero_poly(&b) {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::tensor::{complete_homogeneous_cubic, small_cw, table1_normal_form};
    use proptest::prelude::*;

    fn poly(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Ring::rational(n)).unwrap()
    }

    fn q(v: i64) -> FieldElement {
        Field::Rational.from_i64(v)
    }

    fn line(p: &[i64], r: &[i64]) -> ProjectiveLine {
        ProjectiveLine::new(p.iter().map(|&v| q(v)).collect(), r.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let f = poly("x0^2*x2 + 2*x0*x1*x2 + x1^2*x2", 3);
        assert!(membership_s(&f, 1).unwrap());
        let h = complete_homogeneous_cubic(2).unwrap();
        assert!(!membership_s(&h, 2).unwrap());
        assert!(membership_s(&h, 3).unwrap());
        assert!(membership_s(&poly("x0^3", 3), 1).unwrap());
    }

    #[test]
    fn samplers_are_deterministic() {
        assert_eq!(sample_tangential(3, 3, 7).unwrap(), sample_tangential(3, 3, 7).unwrap());
        assert_ne!(sample_tangential(3, 3, 7).unwrap(), sample_tangential(3, 3, 8).unwrap());
        assert_eq!(sample_secant_tangential(1, 3, 7).unwrap(), sample_tangential(3, 3, 7).unwrap());
        assert_eq!(sample_c_ir(3, 1).unwrap(), sample_c_ir(3, 1).unwrap());
    }

    #[test]
    fn sampler_parameter_errors() {
        assert!(sample_tangential(0, 3, 1).is_err());
        assert!(sample_secant_tangential(4, 2, 1).is_err());
        assert!(sample_secant_tangential(0, 2, 1).is_err());
        assert!(sample_c_ir(1, 1).is_err());
        assert!(sample_reducible(0, 1, 2, 1).is_err());
    }

    #[test]
    fn sampled_ranks() {
        for seed in 0..10 {
            assert_eq!(sgr(&sample_tangential(3, 3, seed).unwrap()).unwrap(), 1);
            assert!(sgr(&sample_secant_tangential(2, 3, seed).unwrap()).unwrap() <= 2);
            assert_eq!(sgr(&sample_c_ir(3, seed).unwrap()).unwrap(), 2);
            assert_eq!(sgr(&sample_reducible(2, 1, 3, seed).unwrap()).unwrap(), 2);
        }
    }

    #[test]
    fn forced_square_factor_is_tangential() {
        let l = poly("x0 + 2*x1 - x2", 3);
        let m = poly("x1 + x2", 3);
        assert_eq!(sgr(&product(&[&l, &l, &m])).unwrap(), 1);
        assert_eq!(sgr(&small_cw(2, 2).unwrap().to_polynomial().unwrap()).unwrap(), 2);
    }

    #[test]
    fn table_forms_fit_the_c_ir_shape() {
        assert_eq!(sgr(&table1_normal_form(2, 1).unwrap()).unwrap(), 2);
        assert_eq!(sgr(&table1_normal_form(3, 1).unwrap()).unwrap(), 2);
    }

    #[test]
    fn discriminant_examples() {
        let d = |a: [i64; 4]| binary_cubic_discriminant(&q(a[0]), &q(a[1]), &q(a[2]), &q(a[3]));
        assert_eq!(d([1, 0, 0, 1]), q(-27));
        assert!(d([0, 1, 0, 0]).is_zero());
        assert!(d([1, 0, 0, 0]).is_zero());
        // x*y*(x - y) has distinct roots
        assert!(!d([1, -1, 0, 0]).is_zero() || !d([0, 1, -1, 0]).is_zero());
        let c = binary_cubic_coefficients(&poly("2*x0^3 - x0*x1^2 + 5*x1^3", 2)).unwrap();
        assert_eq!(c, [q(2), q(0), q(-1), q(5)]);
        assert_eq!(sgr(&poly("x0^3 + x1^3", 2)).unwrap(), 2);
        assert_eq!(sgr(&poly("x0^2*x1", 2)).unwrap(), 1);
    }

    #[test]
    fn tangency_examples() {
        let f = poly("x0^2*x1", 3);
        // meets V(x0) at (0:1:1), where x0 restricts to s
        assert_eq!(line_tangency(&f, &line(&[1, 0, 0], &[0, 1, 1])).unwrap(), Tangency::Tangent);
        let conic = poly("x0^2 + x1^2 + x2^2", 3);
        assert_eq!(line_tangency(&conic, &line(&[1, 2, 0], &[0, 1, 3])).unwrap(), Tangency::Transversal);
        // x0 + i x1 is not rational, but x0 = 0, x1 = 0 gives a double point of x0^2 + x1^2
        let pair = poly("x0^2 + x1^2", 3);
        assert_eq!(line_tangency(&pair, &line(&[1, 0, 0], &[0, 0, 1])).unwrap(), Tangency::Tangent);
        assert_eq!(line_tangency(&f, &line(&[0, 1, 0], &[0, 0, 1])).unwrap(), Tangency::Contained);
        // a double root at infinity: restriction s*t^2 style
        assert_eq!(line_tangency(&f, &line(&[0, 1, 0], &[1, 0, 0])).unwrap(), Tangency::Tangent);
        assert!(ProjectiveLine::new(vec![q(1), q(2)], vec![q(2), q(4)]).is_err());
    }

    #[test]
    fn tangential_forms_are_tangent_to_random_lines() {
        let mut rng = rng_for(99);
        for seed in 0..5 {
            let f = sample_tangential(2, 3, seed).unwrap();
            for _ in 0..10 {
                let l = ProjectiveLine::random(2, &mut rng);
                assert_ne!(line_tangency(&f, &l).unwrap(), Tangency::Transversal);
            }
        }
    }

    #[test]
    fn univariate_helpers() {
        // (u - 1)^2 (u + 2) = u^3 - 3u + 2
        let p = vec![q(2), q(-3), q(0), q(1)];
        assert_eq!(univariate_gcd(p.clone(), derivative(&p)).len(), 2);
        let sq = vec![q(-1), q(0), q(1)];
        assert_eq!(univariate_gcd(sq.clone(), derivative(&sq)).len(), 1);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn discriminant_detects_rank_one(a in prop::array::uniform4(-3i64..=3)) {
            prop_assume!(a.iter().any(|&v| v != 0));
            let f = Polynomial::from_terms(
                Ring::rational(2),
                (0..4u16).map(|k| (Monomial::from_exponents(&[3 - k, k]), q(a[k as usize]))),
            ).unwrap();
            let disc = binary_cubic_discriminant(&q(a[0]), &q(a[1]), &q(a[2]), &q(a[3]));
            prop_assert_eq!(disc.is_zero(), sgr(&f).unwrap() <= 1);
        }

        #[test]
        fn tangency_matches_discriminant_of_restriction(seed in 0u64..1000) {
            let mut rng = rng_for(seed);
            let f = random_form(3, 3, &mut rng);
            let l = ProjectiveLine::random(2, &mut rng);
            let g = restrict_to_line(&f, &l).unwrap();
            let t = line_tangency(&f, &l).unwrap();
            if g.is_zero() {
                prop_assert_eq!(t, Tangency::Contained);
            } else {
                let [a1, a2, a3, a4] = binary_cubic_coefficients(&g).unwrap();
                let disc = binary_cubic_discriminant(&a1, &a2, &a3, &a4);
                prop_assert_eq!(t == Tangency::Tangent, disc.is_zero());
            }
        }

        #[test]
        fn quadric_membership_is_matrix_rank(entries in prop::collection::vec(-2i64..=2, 10), r in 0usize..5) {
            // upper triangle of a symmetric 4x4 matrix
            let mut a = vec![vec![q(0); 4]; 4];
            let pairs = (0..4).flat_map(|i| (i..4).map(move |j| (i, j)));
            for ((i, j), v) in pairs.zip(entries) {
                a[i][j] = q(v);
                a[j][i] = q(v);
            }
            let ring = Ring::rational(4);
            let x: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ring, i).unwrap()).collect();
            let mut f = Polynomial::zero(ring);
            for i in 0..4 {
                for j in 0..4 {
                    f = f.add(&x[i].mul(&x[j]).unwrap().scale(&a[i][j])).unwrap();
                }
            }
            prop_assume!(!f.is_zero());
            prop_assert_eq!(membership_s(&f, r).unwrap(), matrix_rank(&a) <= r);
            if membership_s(&f, r).unwrap() {
                prop_assert!(membership_s(&f, r + 1).unwrap());
            }
        }
    }
}
