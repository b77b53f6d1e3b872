//! Formal gradings `c0 + c1·μ + c2·μβ/α`, their quotient by a grading period,
//! and Poincaré polynomials as graded multisets.
//!
//! `μ` and `β/α` stay formal everywhere; [`Grading::evaluate`] is the only
//! place they receive values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
pub struct Grading<T = i64> {
    pub c0: Rational<T>,
    pub c1: Rational<T>,
    pub c2: Rational<T>,
}

impl<T: Integer> Grading<T> {
    pub fn new(c0: Rational<T>, c1: Rational<T>, c2: Rational<T>) -> Self {
        Grading { c0, c1, c2 }
    }

    /// Integer coefficients.
    pub fn ints(c0: i64, c1: i64, c2: i64) -> Self {
        Grading::new(Rational::int(c0), Rational::int(c1), Rational::int(c2))
    }

    pub fn zero() -> Self {
        Self::ints(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.c0.is_integer() && self.c1.is_integer() && self.c2.is_integer()
    }

    fn coefficients(&self) -> [&Rational<T>; 3] {
        [&self.c0, &self.c1, &self.c2]
    }

    pub fn scale(&self, k: &Rational<T>) -> Self {
        Grading::new(&self.c0 * k, &self.c1 * k, &self.c2 * k)
    }

    /// `c0 + c1·mu + c2·mu·beta_over_alpha`.
    pub fn evaluate(&self, mu: &Rational<T>, beta_over_alpha: &Rational<T>) -> Rational<T> {
        &(&self.c0 + &(&self.c1 * mu)) + &(&(&self.c2 * mu) * beta_over_alpha)
    }

    /// Representative of `self + Z·period` whose coefficient in the first
    /// nonzero slot of the period lies in `[0, |p|)`.
    ///
    /// Only that one slot is reduced, so for periods with several nonzero
    /// slots two gradings are identified exactly when their difference is an
    /// integer multiple of the period.
    pub fn canonicalize(&self, period: &GradingPeriod<T>) -> Self {
        let p = &period.0;
        let Some(k) = p.coefficients().iter().position(|c| !c.is_zero()) else {
            return self.clone();
        };
        let pk = p.coefficients()[k].clone();
        let steps = (self.coefficients()[k] / &pk.abs()).floor();
        let mut m = Rational::from_integer(steps);
        if pk.is_negative() {
            m = -m;
        }
        self - &p.scale(&m)
    }
}

impl<T: Integer> PartialOrd for Grading<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Integer> Ord for Grading<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c0
            .cmp(&other.c0)
            .then_with(|| self.c1.cmp(&other.c1))
            .then_with(|| self.c2.cmp(&other.c2))
    }
}

impl<T: Integer> Add for &Grading<T> {
    type Output = Grading<T>;
    fn add(self, rhs: &Grading<T>) -> Grading<T> {
        Grading::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl<T: Integer> Sub for &Grading<T> {
    type Output = Grading<T>;
    fn sub(self, rhs: &Grading<T>) -> Grading<T> {
        Grading::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl<T: Integer> Add for Grading<T> {
    type Output = Grading<T>;
    fn add(self, rhs: Grading<T>) -> Grading<T> {
        &self + &rhs
    }
}

impl<T: Integer> Sub for Grading<T> {
    type Output = Grading<T>;
    fn sub(self, rhs: Grading<T>) -> Grading<T> {
        &self - &rhs
    }
}

impl<T: Integer> Neg for &Grading<T> {
    type Output = Grading<T>;
    fn neg(self) -> Grading<T> {
        Grading::new(-&self.c0, -&self.c1, -&self.c2)
    }
}

impl<T: Integer> Neg for Grading<T> {
    type Output = Grading<T>;
    fn neg(self) -> Grading<T> {
        -&self
    }
}

impl<T: Integer> fmt::Display for Grading<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grading(self, false))
    }
}

/// The subgroup `Z·period` that gradings are taken modulo.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent, bound = "T: Integer")]
pub struct GradingPeriod<T = i64>(pub Grading<T>);

impl<T: Integer> GradingPeriod<T> {
    pub fn zero() -> Self {
        GradingPeriod(Grading::zero())
    }

    pub fn new(g: Grading<T>) -> Self {
        GradingPeriod(g)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn grading(&self) -> &Grading<T> {
        &self.0
    }
}

impl<T: Integer> Default for GradingPeriod<T> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Finite multiset of gradings, keyed by canonical form for its period.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(
    bound = "T: Integer",
    into = "PolynomialRepr<T>",
    try_from = "PolynomialRepr<T>"
)]
pub struct PoincarePolynomial<T: Integer = i64> {
    period: GradingPeriod<T>,
    terms: BTreeMap<Grading<T>, u64>,
}

impl<T: Integer> PoincarePolynomial<T> {
    pub fn zero(period: GradingPeriod<T>) -> Self {
        PoincarePolynomial {
            period,
            terms: BTreeMap::new(),
        }
    }

    /// Drops zero dimensions, canonicalizes keys and merges collisions.
    pub fn from_dimensions<I>(dims: I, period: GradingPeriod<T>) -> Self
    where
        I: IntoIterator<Item = (Grading<T>, u64)>,
    {
        let mut p = Self::zero(period);
        for (g, d) in dims {
            p.add_term(&g, d);
        }
        p
    }

    pub fn add_term(&mut self, g: &Grading<T>, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        *self.terms.entry(g.canonicalize(&self.period)).or_insert(0) += multiplicity;
    }

    pub fn period(&self) -> &GradingPeriod<T> {
        &self.period
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Grading<T>, u64)> {
        self.terms.iter().map(|(g, m)| (g, *m))
    }

    pub fn multiplicity(&self, g: &Grading<T>) -> u64 {
        self.terms
            .get(&g.canonicalize(&self.period))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total_dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Numeric instantiation: each exponent evaluated, then reduced modulo
    /// the evaluated period when that is nonzero. Returns a sorted multiset.
    pub fn evaluate(
        &self,
        mu: &Rational<T>,
        beta_over_alpha: &Rational<T>,
    ) -> Vec<(Rational<T>, u64)> {
        let p = self.period.0.evaluate(mu, beta_over_alpha).abs();
        let mut out: BTreeMap<Rational<T>, u64> = BTreeMap::new();
        for (g, m) in &self.terms {
            let mut v = g.evaluate(mu, beta_over_alpha);
            if !p.is_zero() {
                let steps = Rational::from_integer((&v / &p).floor());
                v = &v - &(&steps * &p);
            }
            *out.entry(v).or_insert(0) += m;
        }
        out.into_iter().collect()
    }

    /// Terms in the order used for display: exponents without a `μβ/α`
    /// part first, then by decreasing constant.
    pub fn display_terms(&self) -> Vec<(&Grading<T>, u64)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| {
            (!a.c2.is_zero())
                .cmp(&!b.c2.is_zero())
                .then_with(|| b.c0.cmp(&a.c0))
                .then_with(|| a.c1.cmp(&b.c1))
                .then_with(|| a.c2.cmp(&b.c2))
        });
        v
    }
}

impl<T: Integer> PartialEq for PoincarePolynomial<T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<T: Integer> Eq for PoincarePolynomial<T> {}

impl<T: Integer> fmt::Display for PoincarePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .display_terms()
            .into_iter()
            .map(|(g, m)| {
                let power = if *g == Grading::zero() {
                    "1".to_string()
                } else if *g == Grading::ints(1, 0, 0) {
                    "t".to_string()
                } else {
                    format!("t^{{{}}}", render_grading(g, true))
                };
                if m == 1 {
                    power
                } else if power == "1" {
                    m.to_string()
                } else {
                    format!("{m}{power}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
struct PolynomialRepr<T: Integer> {
    period: Grading<T>,
    terms: Vec<TermRepr<T>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
struct TermRepr<T: Integer> {
    grading: Grading<T>,
    multiplicity: u64,
}

impl<T: Integer> From<PoincarePolynomial<T>> for PolynomialRepr<T> {
    fn from(p: PoincarePolynomial<T>) -> Self {
        PolynomialRepr {
            period: p.period.0,
            terms: p
                .terms
                .into_iter()
                .map(|(grading, multiplicity)| TermRepr {
                    grading,
                    multiplicity,
                })
                .collect(),
        }
    }
}

impl<T: Integer> TryFrom<PolynomialRepr<T>> for PoincarePolynomial<T> {
    type Error = String;
    fn try_from(r: PolynomialRepr<T>) -> Result<Self, String> {
        if r.terms.iter().any(|t| t.multiplicity == 0) {
            return Err("polynomial multiplicities must be positive".into());
        }
        Ok(Self::from_dimensions(
            r.terms.into_iter().map(|t| (t.grading, t.multiplicity)),
            GradingPeriod(r.period),
        ))
    }
}

const MINUS: &str = "\u{2212}";

fn magnitude<T: Integer>(q: &Rational<T>) -> String {
    let a = q.abs();
    if a.is_integer() {
        a.to_string()
    } else {
        format!("({a})")
    }
}

/// Coefficient in front of a symbol: `1` is dropped.
fn coefficient<T: Integer>(q: &Rational<T>) -> String {
    let a = q.abs();
    if a == Rational::int(1) {
        String::new()
    } else {
        magnitude(&a)
    }
}

/// Human-readable `c0 + c1·μ + c2·μβ/α` with zero terms omitted and the
/// `c1 = ±c2` cases grouped as `cμ(1 ± β/α)`. `compact` drops the spaces
/// around signs, for use inside exponents.
pub fn render_grading<T: Integer>(g: &Grading<T>, compact: bool) -> String {
    let (plus, minus) = if compact {
        ("+".to_string(), MINUS.to_string())
    } else {
        (" + ".to_string(), format!(" {MINUS} "))
    };
    // (is_negative, magnitude text)
    let mut mu_terms: Vec<(bool, String)> = Vec::new();
    if !g.c1.is_zero() && g.c1 == g.c2 {
        mu_terms.push((
            g.c1.is_negative(),
            format!("{}μ(1{plus}β/α)", coefficient(&g.c1)),
        ));
    } else if !g.c1.is_zero() && g.c1 == -&g.c2 {
        mu_terms.push((
            g.c1.is_negative(),
            format!("{}μ(1{minus}β/α)", coefficient(&g.c1)),
        ));
    } else {
        if !g.c1.is_zero() {
            mu_terms.push((g.c1.is_negative(), format!("{}μ", coefficient(&g.c1))));
        }
        if !g.c2.is_zero() {
            mu_terms.push((g.c2.is_negative(), format!("{}μβ/α", coefficient(&g.c2))));
        }
    }
    let constant = (!g.c0.is_zero()).then(|| (g.c0.is_negative(), magnitude(&g.c0)));

    let mut terms = Vec::new();
    if g.c2.is_zero() && !g.c1.is_zero() {
        terms.extend(mu_terms);
        terms.extend(constant);
    } else {
        terms.extend(constant);
        terms.extend(mu_terms);
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, text)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push_str(MINUS),
            (0, false) => {}
            (_, true) => out.push_str(&minus),
            (_, false) => out.push_str(&plus),
        }
        out.push_str(&text);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type G = Grading<i64>;
    type Q = Rational<i64>;

    fn period(c0: i64, c1: i64, c2: i64) -> GradingPeriod<i64> {
        GradingPeriod::new(G::ints(c0, c1, c2))
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            G::ints(2, 2, 2).canonicalize(&period(0, 0, 2)),
            G::ints(2, 2, 0)
        );
        assert_eq!(
            G::ints(-3, 0, -2).canonicalize(&GradingPeriod::zero()),
            G::ints(-3, 0, -2)
        );
        assert_eq!(
            G::ints(2, 2, 2).canonicalize(&period(0, 0, 2)),
            G::ints(2, 2, 0).canonicalize(&period(0, 0, 2))
        );
        assert_eq!(
            G::ints(-3, 0, -3).canonicalize(&period(0, 0, 2)),
            G::ints(-3, 0, 1)
        );
        assert_eq!(
            G::ints(7, 1, 0).canonicalize(&period(-3, 0, 0)),
            G::ints(1, 1, 0)
        );
        assert_eq!(
            G::ints(5, 1, 1).canonicalize(&period(2, 0, 1)),
            G::ints(1, 1, -1)
        );
    }

    #[test]
    fn evaluate_examples() {
        let ba = Q::from_i64(2, 5);
        assert_eq!(
            G::ints(-3, 0, -2).evaluate(&Q::int(1), &ba),
            Q::from_i64(-19, 5)
        );
        assert_eq!(
            G::ints(0, 2, 0).evaluate(&Q::int(1), &Q::from_i64(7, 3)),
            Q::int(2)
        );
        assert_eq!(
            G::ints(2, 2, 2).evaluate(&Q::int(1), &ba),
            Q::from_i64(24, 5)
        );
    }

    #[test]
    fn polynomial_from_dimensions() {
        let p = PoincarePolynomial::from_dimensions(
            [
                (G::ints(1, 0, 0), 1),
                (G::ints(-2, 2, 0), 1),
                (G::ints(9, 9, 9), 0),
            ],
            GradingPeriod::zero(),
        );
        assert_eq!(p.total_dimension(), 2);
        assert_eq!(p.to_string(), "t + t^{2μ−2}");
        assert!(PoincarePolynomial::<i64>::from_dimensions([], GradingPeriod::zero()).is_zero());

        let q = PoincarePolynomial::from_dimensions([(G::ints(2, 2, 2), 1)], period(0, 0, 2));
        assert_eq!(q.terms().collect::<Vec<_>>(), vec![(&G::ints(2, 2, 0), 1)]);

        let merged = PoincarePolynomial::from_dimensions(
            [(G::ints(2, 2, 2), 1), (G::ints(2, 2, 0), 2)],
            period(0, 0, 2),
        );
        assert_eq!(merged.multiplicity(&G::ints(2, 2, 4)), 3);
        assert_eq!(merged.to_string(), "3t^{2μ+2}");
    }

    #[test]
    fn render_examples() {
        assert_eq!(G::ints(-3, 0, -2).to_string(), "−3 − 2μβ/α");
        assert_eq!(G::zero().to_string(), "0");
        assert_eq!(G::ints(2, 2, 2).to_string(), "2 + 2μ(1 + β/α)");
        assert_eq!(render_grading(&G::ints(-4, 2, -2), true), "−4+2μ(1−β/α)");
        assert_eq!(render_grading(&G::ints(0, 2, 2), true), "2μ(1+β/α)");
        assert_eq!(render_grading(&G::ints(0, -1, 0), false), "−μ");
        assert_eq!(render_grading(&G::ints(1, 0, 1), false), "1 + μβ/α");
        let half = G::new(Q::from_i64(1, 2), Q::zero(), Q::from_i64(-3, 2));
        assert_eq!(render_grading(&half, false), "(1/2) − (3/2)μβ/α");
    }

    #[test]
    fn serde_shapes() {
        let g = G::ints(-3, 0, -2);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"c0":"-3","c1":"0","c2":"-2"}"#
        );
        let p = PoincarePolynomial::from_dimensions(
            [(G::ints(1, 0, 0), 1), (G::ints(-2, 2, 0), 1)],
            GradingPeriod::zero(),
        );
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"period":{"c0":"0","c1":"0","c2":"0"},"terms":["#,
                r#"{"grading":{"c0":"-2","c1":"2","c2":"0"},"multiplicity":1},"#,
                r#"{"grading":{"c0":"1","c1":"0","c2":"0"},"multiplicity":1}]}"#
            )
        );
        let back: PoincarePolynomial<i64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn grading() -> impl Strategy<Value = G> {
        (-20i64..20, -20i64..20, -20i64..20, 1i64..4).prop_map(|(a, b, c, d)| {
            G::new(Q::new(a, d).unwrap(), Q::int(b), Q::new(c, d).unwrap())
        })
    }

    fn any_period() -> impl Strategy<Value = GradingPeriod<i64>> {
        prop_oneof![
            Just(GradingPeriod::zero()),
            (1i64..6).prop_map(|k| period(0, 0, k)),
            (-6i64..-1).prop_map(|k| period(0, 0, k)),
            (1i64..6, -3i64..3).prop_map(|(a, b)| period(a, b, 0)),
        ]
    }

    proptest! {
        #[test]
        fn canonical_form_is_constant_on_cosets(g in grading(), p in any_period(), k in -5i64..=5) {
            let c = g.canonicalize(&p);
            prop_assert_eq!(c.canonicalize(&p), c.clone());
            let shifted = &g + &p.0.scale(&Q::int(k));
            prop_assert_eq!(shifted.canonicalize(&p), c);
        }

        #[test]
        fn evaluate_is_additive(g in grading(), h in grading(), mu in -5i64..5, ba in 1i64..7) {
            let mu = Q::int(mu);
            let ba = Q::from_i64(ba, 7);
            prop_assert_eq!((&g + &h).evaluate(&mu, &ba), g.evaluate(&mu, &ba) + h.evaluate(&mu, &ba));
        }

        #[test]
        fn polynomial_ignores_insertion_order(
            terms in proptest::collection::vec((grading(), 0u64..3), 0..8),
            p in any_period(),
        ) {
            let a = PoincarePolynomial::from_dimensions(terms.clone(), p.clone());
            let mut rev = terms;
            rev.reverse();
            let b = PoincarePolynomial::from_dimensions(rev, p);
            prop_assert_eq!(a, b);
        }
    }
}
