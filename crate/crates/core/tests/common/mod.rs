//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls `eval_at` or the closed forms under test: values are
//! recomputed from the raw terms, sets are enumerated, sums are looped.

#![allow(dead_code)]

use std::cmp::Ordering;

use grossone::grossnum::rational::{frac, int};
use grossone::setalgebra::{
    ap_nat, couples_count, evens, integers_set, naturals, odds, GrossAP, GrossSet,
};
use grossone::{series, GrossNumber, GrossTerm, Rational};
use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn g() -> GrossNumber {
    GrossNumber::grossone()
}

pub fn num(s: &str) -> GrossNumber {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn rpow(r: &Rational, e: u64) -> Rational {
    let e = u32::try_from(e).expect("small exponent");
    Rational::new(Pow::pow(r.numer(), e), Pow::pow(r.denom(), e))
}

/// `n` with `G := t`, from the terms alone. `None` for fractional powers
/// of `G`.
pub fn subst(n: &GrossNumber, t: u64) -> Option<Rational> {
    let tr = int(t);
    let mut acc = Rational::zero();
    for term in n.terms() {
        if !term.gpow().is_integer() {
            return None;
        }
        let p = term.gpow().to_integer().to_i64()?;
        let tp = rpow(&tr, p.unsigned_abs());
        let tp = if p < 0 { tp.recip() } else { tp };
        let bt = if term.base().is_one() { Rational::one() } else { rpow(term.base(), t) };
        acc += term.coeff() * tp * bt;
    }
    Some(acc)
}

pub fn subst_int(n: &GrossNumber, t: u64) -> i64 {
    let v = subst(n, t).expect("integer powers");
    assert!(v.is_integer(), "{n} at {t} is {v}");
    v.to_integer().to_i64().expect("fits")
}

#[derive(Clone, Copy)]
pub struct Shape {
    pub max_terms: usize,
    /// allow `G^(p/2)`
    pub half_powers: bool,
    /// allow exponential factors `b^G`
    pub exponentials: bool,
}

pub const RING_SHAPE: Shape = Shape { max_terms: 5, half_powers: false, exponentials: true };

pub fn random_term(r: &mut ChaCha8Rng, shape: Shape) -> GrossTerm {
    let mut c = 0;
    while c == 0 {
        c = r.random_range(-9i64..=9);
    }
    let coeff = frac(c, r.random_range(1i64..=4));
    let bases = [frac(1, 1), frac(1, 1), frac(1, 1), frac(1, 2), frac(2, 1), frac(3, 1), frac(2, 3)];
    let base = if shape.exponentials { bases.choose(r).unwrap().clone() } else { Rational::one() };
    let gpow = if shape.half_powers && r.random_bool(0.3) {
        frac(r.random_range(-5i64..=5), 2)
    } else {
        int(r.random_range(-3i64..=3))
    };
    GrossTerm::new(coeff, base, gpow).expect("positive base")
}

pub fn random_number(r: &mut ChaCha8Rng, shape: Shape) -> GrossNumber {
    let n = r.random_range(0..=shape.max_terms);
    GrossNumber::normalize((0..n).map(|_| random_term(r, shape)).collect::<Vec<_>>())
}

/// Ring laws on `count` random triples, checked symbolically and through
/// substitution at a few points.
pub fn ring_axiom_failures(count: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    let zero = GrossNumber::zero();
    let one = GrossNumber::one();
    for i in 0..count {
        let (a, b, c) = (
            random_number(&mut r, RING_SHAPE),
            random_number(&mut r, RING_SHAPE),
            random_number(&mut r, RING_SHAPE),
        );
        let laws: [(&str, GrossNumber, GrossNumber); 9] = [
            ("add assoc", &(&a + &b) + &c, &a + &(&b + &c)),
            ("add comm", &a + &b, &b + &a),
            ("mul assoc", &(&a * &b) * &c, &a * &(&b * &c)),
            ("mul comm", &a * &b, &b * &a),
            ("distrib", &a * &(&b + &c), &(&a * &b) + &(&a * &c)),
            ("add zero", &a + &zero, a.clone()),
            ("mul one", &a * &one, a.clone()),
            ("add inverse", &a + &(-&a), zero.clone()),
            ("sub", &(&a - &b) + &b, a.clone()),
        ];
        for (name, l, rr) in &laws {
            if l != rr {
                bad.push(format!("triple {i}: {name}: {l} != {rr} (a={a}, b={b}, c={c})"));
            }
        }
        // homomorphism into the rationals at finite points
        for t in [3u64, 8] {
            let (sa, sb) = (subst(&a, t).unwrap(), subst(&b, t).unwrap());
            if subst(&(&a + &b), t).unwrap() != &sa + &sb || subst(&(&a * &b), t).unwrap() != &sa * &sb {
                bad.push(format!("triple {i}: substitution at {t} disagrees (a={a}, b={b})"));
            }
        }
    }
    bad
}

fn sign_of(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

/// Symbolic order against substitution: while `t` doubles from 16 to
/// 2^20, the sign of `a - b` at `t` must agree with `compare(a, b)` at
/// three consecutive points. A disagreement resets the run.
pub fn order_sweep_failures(count: usize, seed: u64) -> Vec<String> {
    let shape = Shape { max_terms: 4, half_powers: false, exponentials: true };
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for i in 0..count {
        let a = random_number(&mut r, shape);
        // pairs that share a leading part exercise the lower terms
        let b = if r.random_bool(0.3) {
            let lead: Vec<GrossTerm> = a.terms().iter().take(1).cloned().collect();
            &GrossNumber::normalize(lead) + &random_number(&mut r, shape)
        } else {
            random_number(&mut r, shape)
        };
        let want = a.compare(&b);
        let diff = &a - &b;
        let mut run = 0;
        let mut t = 16u64;
        while t <= 1 << 20 && run < 3 {
            let v = subst(&diff, t).unwrap();
            if sign_of(&v) == want {
                run += 1;
            } else {
                run = 0;
            }
            t *= 2;
        }
        if run < 3 {
            bad.push(format!("pair {i}: compare({a}, {b}) = {want:?} not confirmed by substitution"));
        }
    }
    bad
}

/// Canonical strings of random numbers parse back to the same number and
/// print identically.
pub fn round_trip_failures(count: usize, seed: u64) -> Vec<String> {
    let shape = Shape { max_terms: 5, half_powers: true, exponentials: true };
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..count {
        let n = random_number(&mut r, shape);
        let s = n.to_string();
        match s.parse::<GrossNumber>() {
            Ok(back) if back == n && back.to_string() == s => {}
            Ok(back) => bad.push(format!("{s} came back as {back}")),
            Err(e) => bad.push(format!("{s}: {e}")),
        }
    }
    bad
}

// ---------------------------------------------------------------- sets

/// A set enumerated at `G := t`, in increasing order.
fn enumerate_ap(ap: &GrossAP, t: u64) -> Vec<i64> {
    let first = subst_int(ap.first(), t);
    let step = ap.step().to_i64().unwrap();
    let count = subst_int(ap.count(), t);
    (0..count).map(|i| first + i * step).collect()
}

fn residue_class(k: i64, n: i64, t: i64) -> Vec<i64> {
    (1..=t).filter(|x| x % n == k % n).collect()
}

fn check_ap(label: &str, ap: &GrossAP, expected: &[i64], t: u64, bad: &mut Vec<String>) {
    let got = enumerate_ap(ap, t);
    if got != expected {
        bad.push(format!("{label} at {t}: {ap} enumerates to {} elements, expected {}", got.len(), expected.len()));
        return;
    }
    if let Some(&last) = expected.last() {
        if subst_int(&ap.last_element(), t) != last {
            bad.push(format!("{label} at {t}: last element"));
        }
    }
}

fn divisors(t: u64, limit: u64) -> Vec<i64> {
    (1..=limit.min(t)).filter(|d| t.is_multiple_of(*d)).map(|d| d as i64).collect()
}

/// Residue classes, their intersections, the integers, scaled and
/// adjusted sets, all enumerated with `G := t` (which must be divisible
/// by every modulus used).
pub fn set_oracle_failures(t: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let ti = t as i64;
    let moduli = divisors(t, 12);

    let mut classes = Vec::new();
    for &n in &moduli {
        for k in 1..=n {
            let ap = ap_nat(k, n).unwrap();
            let members = residue_class(k, n, ti);
            check_ap(&format!("N({k},{n})"), &ap, &members, t, &mut bad);
            classes.push((k, n, ap, members));
        }
    }

    for (k1, n1, a, ma) in &classes {
        for (k2, n2, b, mb) in &classes {
            if n1 > n2 || (n1 == n2 && k1 > k2) {
                continue;
            }
            let expected: Vec<i64> = ma.iter().copied().filter(|x| mb.binary_search(x).is_ok()).collect();
            let label = format!("N({k1},{n1}) & N({k2},{n2})");
            match a.intersect(b) {
                Ok(Some(ap)) => check_ap(&label, &ap, &expected, t, &mut bad),
                Ok(None) if expected.is_empty() => {}
                Ok(None) => bad.push(format!("{label} at {t}: empty, expected {}", expected.len())),
                Err(e) => bad.push(format!("{label}: {e}")),
            }
        }
    }

    // finite probes stay at or below t: every finite number is below G
    for (k, n, ap, members) in classes.iter().step_by(3) {
        for x in [-5, 0, 1, 2, *k, k + n, ti / 2, ti - 1, ti] {
            if ap.member(&BigInt::from(x)) != members.binary_search(&x).is_ok() {
                bad.push(format!("member(N({k},{n}), {x}) at {t}"));
            }
        }
        // probes near the top are gross: G + c
        for c in -2 * n..=2 * n {
            let x = GrossNumber::linear(1, c);
            if ap.contains(&x) != members.binary_search(&(ti + c)).is_ok() {
                bad.push(format!("contains(N({k},{n}), {x}) at {t}"));
            }
        }
    }

    let z = integers_set();
    let zs: Vec<i64> = (-ti..=ti).collect();
    check_ap("Z", &z, &zs, t, &mut bad);

    let e2 = naturals().scale(&BigInt::from(2)).unwrap();
    let e2s: Vec<i64> = (1..=ti).map(|x| 2 * x).collect();
    check_ap("2N", &e2, &e2s, t, &mut bad);
    let outside = e2s.iter().filter(|&&x| x > ti).count() as i64;
    let tail = GrossAP::new(GrossNumber::linear(1, 2), BigInt::from(2), g().scale(&frac(1, 2))).unwrap();
    if subst_int(tail.count(), t) != outside {
        bad.push(format!("2N outside N at {t}"));
    }
    let three_odds = odds().scale(&BigInt::from(3)).unwrap();
    let tos: Vec<i64> = residue_class(1, 2, ti).iter().map(|x| 3 * x).collect();
    check_ap("3*odds", &three_odds, &tos, t, &mut bad);

    let card = |s: &GrossSet| subst_int(&s.cardinality(), t);
    let minus7 = GrossSet::from(ap_nat(1, 3).unwrap()).remove_finite(&[BigInt::from(7)]).unwrap();
    let m7 = residue_class(1, 3, ti).into_iter().filter(|&x| x != 7).count() as i64;
    if card(&minus7) != m7 {
        bad.push(format!("N(1,3) - {{7}} at {t}"));
    }
    if t.is_multiple_of(55) {
        let b12 = ap_nat(4, 5).unwrap().intersect(&ap_nat(3, 11).unwrap()).unwrap().unwrap();
        let mut b: Vec<i64> = (1..=ti).filter(|x| x % 5 == 4 && x % 11 == 3).collect();
        for x in [3, 4, 5, 69] {
            if !b.contains(&x) {
                b.push(x);
            }
        }
        let sym = GrossSet::from(b12).union_finite(&[3, 4, 5, 69].map(BigInt::from));
        if card(&sym) != b.len() as i64 {
            bad.push(format!("B at {t}: {} vs {}", card(&sym), b.len()));
        }
    }
    let (ev, od) = (GrossSet::from(evens()), GrossSet::from(odds()));
    let pairs = residue_class(2, 2, ti).len() as i64 * residue_class(1, 2, ti).len() as i64;
    if subst_int(&couples_count(&ev, &od), t) != pairs {
        bad.push(format!("E x O at {t}"));
    }
    bad
}

// -------------------------------------------------------------- series

fn r(n: i64) -> Rational {
    int(n)
}

/// Partial sums `q + q^2 + ... + q^k` for every `k <= max_k`. The
/// numerator over `den^k` is kept as an integer, so no gcd per step.
fn geometric_prefixes(q: &Rational, max_k: u64) -> Vec<Rational> {
    let (a, b) = (q.numer(), q.denom());
    let (mut num, mut ak, mut bk) = (BigInt::zero(), BigInt::one(), BigInt::one());
    let mut out = vec![Rational::zero()];
    for _ in 0..max_k {
        ak *= a;
        bk *= b;
        num = num * b + &ak;
        out.push(Rational::new(num.clone(), bk.clone()));
    }
    out
}

fn direct_geometric(q: &Rational, k: u64) -> Rational {
    geometric_prefixes(q, k).pop().expect("k + 1 entries")
}

fn direct_grandi(k: u64) -> Rational {
    (0..k).map(|i| if i % 2 == 0 { r(1) } else { r(-1) }).sum()
}

/// The rearranged sequence `+1 +1 -1 +1 +1 -1 ...` built from `k/2`
/// positive and `k/2` negative units, negatives appended once the
/// positives run out.
fn direct_grandi_rearranged(k: u64) -> Rational {
    let (mut pos, mut neg) = (k / 2, k / 2);
    let mut acc = 0i64;
    let mut slot = 0;
    while pos > 0 || neg > 0 {
        let want_pos = slot % 3 != 2;
        if (want_pos && pos > 0) || neg == 0 {
            pos -= 1;
            acc += 1;
        } else {
            neg -= 1;
            acc -= 1;
        }
        slot += 1;
    }
    r(acc)
}

fn direct_triangular(n: u64) -> Rational {
    r((1..=n as i64).sum())
}

struct Check<'a> {
    bad: &'a mut Vec<String>,
}

impl Check<'_> {
    fn eq(&mut self, label: String, closed: &GrossNumber, t: u64, direct: Rational) {
        match subst(closed, t) {
            Some(v) if v == direct => {}
            Some(v) => self.bad.push(format!("{label}: closed form {closed} gives {v}, summation {direct}")),
            None => self.bad.push(format!("{label}: cannot substitute {closed}")),
        }
    }
}

/// Every closed form against a loop, for finite lengths up to `max_k` and
/// for gross lengths with `G := t`.
pub fn series_oracle_failures(max_k: u64, t: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let mut c = Check { bad: &mut bad };
    let qs = [frac(1, 2), frac(2, 1), frac(-1, 3), frac(3, 2)];

    let geo_table: Vec<Vec<Rational>> = qs.iter().map(|q| geometric_prefixes(q, max_k)).collect();
    let two_table = geometric_prefixes(&r(2), max_k);

    for k in 1..=max_k {
        let kg = GrossNumber::from(k as i64);
        let ki = k as i64;
        // finite lengths: the closed form is a constant, substitute anything
        let ap = series::ap_sum(&GrossNumber::from(3), &GrossNumber::from(-2), &kg).unwrap();
        c.eq(format!("ap_sum k={k}"), &ap, 1, (0..ki).map(|i| r(3 - 2 * i)).sum());
        c.eq(format!("tri k={k}"), &series::triangular(&kg).unwrap(), 1, direct_triangular(k));
        for (q, table) in qs.iter().zip(&geo_table) {
            let gs = series::geometric(q, &kg).unwrap();
            c.eq(format!("geo q={q} k={k}"), &gs, 1, table[k as usize].clone());
        }
        let x2 = series::powers_of_two_sum(&kg).unwrap();
        c.eq(format!("x2 k={k}"), &x2, 1, &two_table[k as usize] / r(2));
        let gr = series::grandi(&kg).unwrap();
        c.eq(format!("grandi k={k}"), &GrossNumber::from(i64::from(gr.value)), 1, direct_grandi(k));
        if k % 2 == 0 {
            c.eq(format!("grandirr k={k}"), &series::grandi_rearranged(&kg).unwrap(), 1, direct_grandi_rearranged(k));
            let audit = series::ramanujan_audit_at(&kg).unwrap();
            c.eq(format!("ramanujan n={k}"), &audit.rhs, 1, r(-3) * direct_triangular(k));
            if !audit.consistent {
                c.bad.push(format!("ramanujan n={k}: inconsistent"));
            }
        }
        // infinitesimal addends: T(k) = k * G^-2, summed at G := t
        let ts = series::infinitesimal_sum(&kg).unwrap();
        let tt = rpow(&r(t as i64), 2).recip();
        c.eq(format!("tsum k={k}"), &ts, t, (0..k).map(|_| tt.clone()).sum());
    }

    // gross lengths, with G := t
    let lengths = ["G", "G - 1", "2*G", "G/2", "G/2 + 3", "2*G - 2"];
    for src in lengths {
        let k = num(src);
        let kt = subst_int(&k, t) as u64;
        c.eq(format!("tri({src})"), &series::triangular(&k).unwrap(), t, direct_triangular(kt));
        let ap = series::ap_sum(&g(), &GrossNumber::from(-1), &k).unwrap();
        c.eq(format!("ap_sum(G,-1,{src})"), &ap, t, (0..kt as i64).map(|i| r(t as i64 - i)).sum());
        for q in &qs {
            match series::geometric(q, &k) {
                Ok(gs) => c.eq(format!("geo({q}, {src})"), &gs, t, direct_geometric(q, kt)),
                // q^G has no meaning for q < 0, and q^(G/2) has no rational base
                Err(_) if q.is_negative() => {}
                Err(grossone::Error::ExponentNotLinearInGrossone(_)) if src.starts_with("G/2") => {}
                Err(e) => c.bad.push(format!("geo({q}, {src}): {e}")),
            }
        }
        let gr = series::grandi(&k).unwrap();
        c.eq(format!("grandi({src})"), &GrossNumber::from(i64::from(gr.value)), t, direct_grandi(kt));
        if kt.is_multiple_of(2) {
            let rr = series::grandi_rearranged(&k).unwrap();
            c.eq(format!("grandirr({src})"), &rr, t, direct_grandi_rearranged(kt));
            let audit = series::ramanujan_audit_at(&k).unwrap();
            c.eq(format!("ramanujan({src})"), &audit.rhs, t, r(-3) * direct_triangular(kt));
        }
    }
    for src in ["G", "3*G", "G + 2"] {
        let k = num(src);
        let kt = subst_int(&k, t) as u64;
        let x2 = series::powers_of_two_sum(&k).unwrap();
        c.eq(format!("x2({src})"), &x2, t, direct_geometric(&r(2), kt) / r(2));
    }
    let ts = series::infinitesimal_sum(&num("2*G")).unwrap();
    let tt = rpow(&r(t as i64), 2).recip();
    c.eq("tsum(2*G)".into(), &ts, t, (0..2 * t).map(|_| tt.clone()).sum());
    bad
}

/// Sign of `x` as -1, 0, 1.
pub fn signum(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
