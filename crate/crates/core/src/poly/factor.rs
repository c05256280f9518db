//! Irreducible factorization in `Q[x]`.
//!
//! A squarefree primitive integer polynomial is factored modulo a random prime
//! `p` larger than twice the Mignotte bound (distinct-degree, then
//! Cantor-Zassenhaus equal-degree splitting). Since every integer factor has
//! coefficients below that bound, true factors are recovered directly from
//! products of modular factors by symmetric lifting, with no Hensel step.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;

use super::{Rational, UPoly};

/// `poly = unit * prod f_i^{m_i}` with monic irreducible, pairwise distinct `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(UPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }
}

impl UPoly {
    /// Factorization into monic irreducibles over the rationals. The zero
    /// polynomial yields unit zero and no factors.
    pub fn factor(&self) -> Factorization {
        let unit = self.lead().cloned().unwrap_or_else(Rational::zero);
        let mut factors = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            for f in factor_squarefree(&part) {
                factors.push((f, mult));
            }
        }
        factors.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
        Factorization { unit, factors }
    }

    /// True for polynomials of degree at least one with no proper factor.
    pub fn is_irreducible(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return false;
        }
        let fac = self.factor();
        fac.factors.len() == 1 && fac.factors[0].1 == 1
    }
}

/// Monic irreducible factors of a squarefree polynomial.
fn factor_squarefree(f: &UPoly) -> Vec<UPoly> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    let (_, ints) = f.primitive_integer();
    // Strip the factor x first so that the constant term is nonzero.
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    let mut out = Vec::new();
    if low > 0 {
        out.push(UPoly::x());
    }
    let core: Vec<BigInt> = ints[low..].to_vec();
    if core.len() > 1 {
        for g in zassenhaus(&core) {
            out.push(int_poly_to_upoly(&g).monic());
        }
    }
    out
}

fn int_poly_to_upoly(p: &[BigInt]) -> UPoly {
    UPoly::new(
        p.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

/// Irreducible factors (primitive, positive lead) of a squarefree primitive
/// integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let lc0 = f[n].abs();
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = &lc0 * &norm1 * (BigInt::one() << n);
    let bits = (bound * 2u32).bits() + 2;

    let mut rng = StdRng::seed_from_u64(0x5eed_f00d ^ n as u64);
    let field = loop {
        let p = random_prime(bits, &mut rng);
        let zp = Zp::new(p);
        if zp.reduce(&f[n]).is_zero() {
            continue;
        }
        let fm = zp.poly(f);
        let dfm = zp.derivative(&fm);
        if zp.degree(&zp.gcd(&fm, &dfm)) == Some(0) {
            break zp;
        }
    };

    let monic = field.monic(&field.poly(f));
    let mut modular = Vec::new();
    for (g, d) in field.distinct_degree(&monic) {
        field.equal_degree(&g, d, &mut rng, &mut modular);
    }

    let mut remaining = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= modular.len() {
        match try_subsets(&field, &remaining, &modular, size) {
            Some((factor, used)) => {
                remaining = int_exact_div(&remaining, &factor).expect("factor divides");
                let mut idx = used;
                idx.sort_unstable_by(|a, b| b.cmp(a));
                for i in idx {
                    modular.remove(i);
                }
                found.push(factor);
            }
            None => size += 1,
        }
    }
    if remaining.len() > 1 {
        found.push(make_positive(remaining));
    }
    found
}

/// Looks for a subset of `size` modular factors whose lifted product divides `f`.
fn try_subsets(
    field: &Zp,
    f: &[BigInt],
    modular: &[Vec<BigUint>],
    size: usize,
) -> Option<(Vec<BigInt>, Vec<usize>)> {
    let lc = field.reduce(f.last().expect("nonzero"));
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let mut prod = vec![lc.clone()];
        for &i in &idx {
            prod = field.mul(&prod, &modular[i]);
        }
        let lifted = primitive(field.symmetric_lift(&prod));
        if int_exact_div(f, &lifted).is_some() {
            return Some((make_positive(lifted), idx));
        }
        // next combination
        let mut k = size;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            if idx[k] < modular.len() - size + k {
                idx[k] += 1;
                for j in k + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

fn make_positive(p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(Signed::is_negative) {
        p.into_iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// Exact division of integer polynomials, `None` unless the quotient is integral.
fn int_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (fp, gp) = (int_poly_to_upoly(f), int_poly_to_upoly(g));
    if gp.degree().unwrap_or(0) == 0 {
        return None;
    }
    let q = fp.exact_div(&gp)?;
    q.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

fn random_prime(bits: u64, rng: &mut StdRng) -> BigUint {
    loop {
        let mut cand = rng.gen_biguint(bits);
        cand.set_bit(bits - 1, true);
        cand.set_bit(0, true);
        if is_probable_prime(&cand, rng) {
            return cand;
        }
    }
}

fn is_probable_prime(n: &BigUint, rng: &mut StdRng) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigUint::from(small);
        if *n == s {
            return true;
        }
        if (n % &s).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let r = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> r;
    'witness: for _ in 0..24 {
        let a = rng.gen_biguint_range(&two, &n1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Dense polynomial arithmetic over the prime field `Z/p`.
struct Zp {
    p: BigUint,
}

impl Zp {
    fn new(p: BigUint) -> Self {
        Zp { p }
    }

    fn reduce(&self, a: &BigInt) -> BigUint {
        let p = BigInt::from_biguint(Sign::Plus, self.p.clone());
        a.mod_floor(&p).to_biguint().expect("nonnegative")
    }

    fn poly(&self, f: &[BigInt]) -> Vec<BigUint> {
        self.trim(f.iter().map(|c| self.reduce(c)).collect())
    }

    fn trim(&self, mut v: Vec<BigUint>) -> Vec<BigUint> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    fn degree(&self, a: &[BigUint]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    fn inv(&self, a: &BigUint) -> BigUint {
        a.modpow(&(&self.p - 2u32), &self.p)
    }

    fn symmetric_lift(&self, a: &[BigUint]) -> Vec<BigInt> {
        let half = &self.p >> 1;
        let p = BigInt::from_biguint(Sign::Plus, self.p.clone());
        a.iter()
            .map(|c| {
                let v = BigInt::from_biguint(Sign::Plus, c.clone());
                if *c > half {
                    v - &p
                } else {
                    v
                }
            })
            .collect()
    }

    fn derivative(&self, a: &[BigUint]) -> Vec<BigUint> {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| (c * BigUint::from(k)) % &self.p)
                .collect(),
        )
    }

    fn sub(&self, a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
        let n = a.len().max(b.len());
        let zero = BigUint::zero();
        self.trim(
            (0..n)
                .map(|k| {
                    let x = a.get(k).unwrap_or(&zero);
                    let y = b.get(k).unwrap_or(&zero);
                    (x + &self.p - y) % &self.p
                })
                .collect(),
        )
    }

    fn mul(&self, a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.trim(out.into_iter().map(|c| c % &self.p).collect())
    }

    fn monic(&self, a: &[BigUint]) -> Vec<BigUint> {
        match a.last() {
            None => Vec::new(),
            Some(l) => {
                let inv = self.inv(l);
                a.iter().map(|c| (c * &inv) % &self.p).collect()
            }
        }
    }

    fn div_rem(&self, a: &[BigUint], m: &[BigUint]) -> (Vec<BigUint>, Vec<BigUint>) {
        let dm = m.len() - 1;
        let inv = self.inv(&m[dm]);
        let mut rem = a.to_vec();
        if rem.len() <= dm {
            return (Vec::new(), rem);
        }
        let mut quot = vec![BigUint::zero(); rem.len() - dm];
        for k in (0..quot.len()).rev() {
            let c = (&rem[k + dm] * &inv) % &self.p;
            if c.is_zero() {
                continue;
            }
            for (j, mc) in m.iter().enumerate() {
                let t = (&c * mc) % &self.p;
                rem[k + j] = (&rem[k + j] + &self.p - t) % &self.p;
            }
            quot[k] = c;
        }
        rem.truncate(dm);
        (self.trim(quot), self.trim(rem))
    }

    fn rem(&self, a: &[BigUint], m: &[BigUint]) -> Vec<BigUint> {
        self.div_rem(a, m).1
    }

    fn gcd(&self, a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !r1.is_empty() {
            let r = self.rem(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        self.monic(&r0)
    }

    fn pow_mod(&self, base: &[BigUint], exp: &BigUint, m: &[BigUint]) -> Vec<BigUint> {
        let mut result = vec![BigUint::one()];
        let mut b = self.rem(base, m);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
        }
        self.rem(&result, m)
    }

    /// Splits a monic squarefree `f` into products of irreducibles of equal degree.
    fn distinct_degree(&self, f: &[BigUint]) -> Vec<(Vec<BigUint>, usize)> {
        let x = vec![BigUint::zero(), BigUint::one()];
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let mut h = self.rem(&x, &f);
        let mut d = 0;
        while self.degree(&f).unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = self.pow_mod(&h, &self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if self.degree(&g).unwrap_or(0) > 0 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        if self.degree(&f).unwrap_or(0) > 0 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Cantor-Zassenhaus splitting of a product of irreducibles of degree `d`.
    fn equal_degree(&self, g: &[BigUint], d: usize, rng: &mut StdRng, out: &mut Vec<Vec<BigUint>>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.to_vec());
            return;
        }
        let exp = (self.p.pow(d as u32) - 1u32) >> 1;
        loop {
            let a: Vec<BigUint> = (0..n).map(|_| rng.gen_biguint_below(&self.p)).collect();
            let a = self.trim(a);
            if self.degree(&a).unwrap_or(0) == 0 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &exp, g), &[BigUint::one()]);
            let u = self.gcd(&b, g);
            let du = self.degree(&u).unwrap_or(0);
            if du > 0 && du < n {
                let v = self.div_rem(g, &u).0;
                self.equal_degree(&u, d, rng, out);
                self.equal_degree(&self.monic(&v), d, rng, out);
                return;
            }
        }
    }
}
