//! Truncated Laurent series in one variable t with coefficients in the
//! fraction field over the zeta-constant symbols.
//!
//! A series knows its truncation degree: coefficients are exact for every
//! degree up to `trunc` and unknown beyond it. The valuation of a sum is
//! recomputed by discarding leading coefficients exactly when they are
//! identically-zero fractions — never by numeric approximation.

use crate::error::EisenError;
use crate::poly::SymbolFraction;
use std::collections::BTreeMap;

/// How firmly a pole order is known.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Certainty {
    /// The leading coefficient is a nonzero rational multiple of a single
    /// monomial in symbols axiomatized nonzero.
    Certified,
    /// The leading coefficient is nonzero as a polynomial, but only the
    /// algebraic independence of the symbol set guarantees a nonzero value.
    Symbolic,
}

impl Certainty {
    pub fn as_str(self) -> &'static str {
        match self {
            Certainty::Certified => "CERTIFIED",
            Certainty::Symbolic => "SYMBOLIC",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PoleOrder {
    pub order: u32,
    pub certainty: Certainty,
}

/// A truncated Laurent series. `coeffs[k]` is the coefficient of
/// t^(valuation + k); the leading stored coefficient is nonzero, or the
/// series is zero-to-truncation and `coeffs` is empty.
#[derive(Clone, Debug)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<SymbolFraction>,
    trunc: i64,
}

impl LaurentSeries {
    /// The zero series (exactly zero up to the given truncation).
    pub fn zero(trunc: i64) -> Self {
        LaurentSeries {
            valuation: trunc + 1,
            coeffs: Vec::new(),
            trunc,
        }
    }

    pub fn one(trunc: i64) -> Self {
        LaurentSeries::monomial(0, SymbolFraction::one(), trunc)
    }

    pub fn monomial(degree: i64, coeff: SymbolFraction, trunc: i64) -> Self {
        let mut map = BTreeMap::new();
        map.insert(degree, coeff);
        LaurentSeries::from_map(map, trunc)
    }

    /// Normalizing constructor: drops degrees above `trunc` and identically
    /// zero leading coefficients.
    pub fn from_map(map: BTreeMap<i64, SymbolFraction>, trunc: i64) -> Self {
        let mut entries: Vec<(i64, SymbolFraction)> =
            map.into_iter().filter(|(d, _)| *d <= trunc).collect();
        while let Some((_, c)) = entries.first() {
            if c.is_zero() {
                entries.remove(0);
            } else {
                break;
            }
        }
        match entries.first() {
            None => LaurentSeries::zero(trunc),
            Some((val, _)) => {
                let valuation = *val;
                let mut coeffs =
                    vec![SymbolFraction::zero(); usize::try_from(trunc - valuation + 1).unwrap()];
                for (d, c) in entries {
                    coeffs[usize::try_from(d - valuation).unwrap()] = c;
                }
                LaurentSeries {
                    valuation,
                    coeffs,
                    trunc,
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation (lowest nonzero degree), `None` for the zero series
    /// (the +∞ marker).
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.valuation)
        }
    }

    pub fn truncation(&self) -> i64 {
        self.trunc
    }

    /// Coefficient of t^degree (zero fraction for absent degrees ≤ trunc;
    /// degrees above the truncation are unknown and panic in debug builds).
    pub fn coeff(&self, degree: i64) -> SymbolFraction {
        debug_assert!(degree <= self.trunc, "coefficient beyond truncation");
        if self.is_zero() || degree < self.valuation {
            return SymbolFraction::zero();
        }
        let k = usize::try_from(degree - self.valuation).unwrap();
        self.coeffs.get(k).cloned().unwrap_or_else(SymbolFraction::zero)
    }

    /// The value at t = 0 of a series with no pole; `None` if there is a
    /// pole (negative valuation with nonzero leading coefficient).
    pub fn value_at_zero(&self) -> Option<SymbolFraction> {
        match self.valuation() {
            None => Some(SymbolFraction::zero()),
            Some(v) if v < 0 => None,
            Some(_) => Some(self.coeff(0)),
        }
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut map = BTreeMap::new();
        for (d, c) in self.iter().chain(other.iter()) {
            if d > trunc {
                continue;
            }
            let entry = map.entry(d).or_insert_with(SymbolFraction::zero);
            *entry = entry.add(&c);
        }
        LaurentSeries::from_map(map, trunc)
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add(&other.neg())
    }

    /// Cauchy product. The result truncation is
    /// min(x.trunc + y.val, y.trunc + x.val): beyond it the unknown tails
    /// would contribute.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let my_val = self.valuation().unwrap_or(self.trunc + 1);
        let other_val = other.valuation().unwrap_or(other.trunc + 1);
        let trunc = (self.trunc + other_val).min(other.trunc + my_val);
        if self.is_zero() || other.is_zero() {
            return LaurentSeries::zero(trunc);
        }
        let mut map: BTreeMap<i64, SymbolFraction> = BTreeMap::new();
        for (d1, c1) in self.iter() {
            if c1.is_zero() {
                continue;
            }
            for (d2, c2) in other.iter() {
                let d = d1 + d2;
                if d > trunc {
                    break;
                }
                if c2.is_zero() {
                    continue;
                }
                let entry = map.entry(d).or_insert_with(SymbolFraction::zero);
                *entry = entry.add(&c1.mul(&c2));
            }
        }
        LaurentSeries::from_map(map, trunc)
    }

    pub fn scale(&self, c: &SymbolFraction) -> LaurentSeries {
        let mut map = BTreeMap::new();
        for (d, k) in self.iter() {
            map.insert(d, k.mul(c));
        }
        LaurentSeries::from_map(map, self.trunc)
    }

    /// Multiplicative inverse of a series with a nonzero leading
    /// coefficient. Writing x = c·t^v·(1 + u) with u of positive valuation,
    /// the inverse is c⁻¹·t^(−v)·Σ (−u)^j; relative precision is preserved,
    /// so the result is truncated at trunc − 2·valuation.
    pub fn invert(&self) -> Result<LaurentSeries, EisenError> {
        if self.is_zero() {
            return Err(EisenError::DivisionByZeroSeries);
        }
        let v = self.valuation;
        let lead = self.coeffs[0].clone();
        let lead_inv = lead
            .invert()
            .ok_or(EisenError::DivisionByZeroSeries)?;
        let rel_trunc = self.trunc - v; // u is known to this relative degree
        // u = x / (c t^v) - 1, as a map from relative degree >= 1
        let mut u: BTreeMap<i64, SymbolFraction> = BTreeMap::new();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if !c.is_zero() {
                u.insert(k as i64, c.mul(&lead_inv));
            }
        }
        // geometric series sum_j (-u)^j up to relative degree rel_trunc
        let mut acc: BTreeMap<i64, SymbolFraction> = BTreeMap::new();
        acc.insert(0, SymbolFraction::one());
        let mut power: BTreeMap<i64, SymbolFraction> = acc.clone(); // u^0
        for _ in 0..rel_trunc.max(0) {
            // power <- power * (-u), truncated
            let mut next: BTreeMap<i64, SymbolFraction> = BTreeMap::new();
            for (d1, c1) in &power {
                for (d2, c2) in &u {
                    let d = d1 + d2;
                    if d > rel_trunc {
                        continue;
                    }
                    let entry = next.entry(d).or_insert_with(SymbolFraction::zero);
                    *entry = entry.sub(&c1.mul(c2));
                }
            }
            if next.is_empty() {
                break;
            }
            for (d, c) in &next {
                let entry = acc.entry(*d).or_insert_with(SymbolFraction::zero);
                *entry = entry.add(c);
            }
            power = next;
        }
        let out_trunc = self.trunc - 2 * v;
        let mut map = BTreeMap::new();
        for (d, c) in acc {
            map.insert(d - v, c.mul(&lead_inv));
        }
        Ok(LaurentSeries::from_map(map, out_trunc))
    }

    /// The substitution t ↦ −t (an involutive ring homomorphism).
    pub fn negate_variable(&self) -> LaurentSeries {
        let mut map = BTreeMap::new();
        for (d, c) in self.iter() {
            let c = if d.rem_euclid(2) == 1 { c.neg() } else { c };
            map.insert(d, c);
        }
        LaurentSeries::from_map(map, self.trunc)
    }

    /// Restrict to a smaller truncation degree.
    pub fn restrict(&self, trunc: i64) -> LaurentSeries {
        let trunc = trunc.min(self.trunc);
        let mut map = BTreeMap::new();
        for (d, c) in self.iter() {
            if d <= trunc {
                map.insert(d, c);
            }
        }
        LaurentSeries::from_map(map, trunc)
    }

    /// Integer power (non-negative).
    pub fn pow(&self, k: u32) -> LaurentSeries {
        let mut acc = LaurentSeries::one(self.trunc);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Pole order with a certification flag. The zero series is
    /// holomorphic and certified; otherwise the order is −valuation when
    /// negative and 0 when the series is holomorphic, certified exactly
    /// when the leading coefficient is certified nonzero by the symbol
    /// axioms.
    pub fn pole_order(&self) -> PoleOrder {
        match self.valuation() {
            None => PoleOrder {
                order: 0,
                certainty: Certainty::Certified,
            },
            Some(v) => {
                let order = if v < 0 { (-v) as u32 } else { 0 };
                let certainty = if self.coeffs[0].is_certified_nonzero() {
                    Certainty::Certified
                } else {
                    Certainty::Symbolic
                };
                PoleOrder { order, certainty }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, SymbolFraction)> + '_ {
        let val = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (val + k as i64, c.clone()))
    }

    /// Text rendering, e.g. `c[-1]^2 * t^-2 + 2*c[0] + O(t^3)`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (d, c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            let coeff = c.to_string();
            let part = match d {
                0 => coeff,
                1 => format!("{coeff} * t"),
                _ => format!("{coeff} * t^{d}"),
            };
            parts.push(part);
        }
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        format!("{body} + O(t^{})", self.trunc + 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let valuation = match self.valuation() {
            None => serde_json::Value::Null,
            Some(v) => serde_json::json!(v),
        };
        let coeffs: Vec<serde_json::Value> = self
            .iter()
            .map(|(_, c)| {
                serde_json::json!({
                    "num": c.num().to_string(),
                    "den": c.den().to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "valuation": valuation,
            "coeffs": coeffs,
            "trunc": self.trunc,
        })
    }
}

/// Equality up to the common truncation degree: the comparison restricts
/// both sides to min(trunc) and compares coefficients as fractions.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        let trunc = self.trunc.min(other.trunc);
        let lo = match (self.valuation(), other.valuation()) {
            (None, None) => return true,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if lo > trunc {
            return true;
        }
        (lo..=trunc).all(|d| self.coeff(d) == other.coeff(d))
    }
}

impl Eq for LaurentSeries {}

impl std::fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{SymbolFraction, SymbolPolynomial};
    use crate::rat::rat_int;
    use crate::symbols::ZetaSymbol;

    fn csym(k: i64) -> SymbolFraction {
        SymbolFraction::symbol(ZetaSymbol::c(k))
    }

    /// Direct construction of the expansion of L(t,1): c_{-1}/t + c_0 + …
    fn l_at_zero(trunc: i64) -> LaurentSeries {
        let mut map = BTreeMap::new();
        for k in -1..=trunc {
            map.insert(k, csym(k));
        }
        LaurentSeries::from_map(map, trunc)
    }

    /// L(1+t,1) = L(−t,1) = −c_{-1}/t + c_0 − c_1 t + …
    fn l_at_one(trunc: i64) -> LaurentSeries {
        l_at_zero(trunc).negate_variable()
    }

    #[test]
    fn gamma_has_valuation_zero_and_leading_two_c0() {
        let g = l_at_zero(5).add(&l_at_one(5));
        assert_eq!(g.valuation(), Some(0));
        assert_eq!(g.coeff(0), csym(0).scale(&rat_int(2)));
        // odd coefficients vanish identically
        for d in [1i64, 3, 5] {
            assert!(g.coeff(d).is_zero(), "odd degree {d}");
        }
        assert_eq!(g.coeff(2), csym(2).scale(&rat_int(2)));
    }

    #[test]
    fn add_zero_and_exact_cancellation() {
        let x = l_at_zero(4);
        assert_eq!(x.add(&LaurentSeries::zero(4)), x);
        let cancelled = LaurentSeries::monomial(-1, csym(-1), 4)
            .add(&LaurentSeries::monomial(-1, csym(-1).neg(), 4));
        assert!(cancelled.is_zero());
        assert_eq!(cancelled.pole_order().order, 0);
    }

    #[test]
    fn product_of_the_two_pole_series() {
        // L(t)·L(1+t): valuation −2, leading −c_{-1}²
        let p = l_at_zero(4).mul(&l_at_one(4));
        assert_eq!(p.valuation(), Some(-2));
        assert_eq!(p.coeff(-2), csym(-1).mul(&csym(-1)).neg());
        let po = p.pole_order();
        assert_eq!(po.order, 2);
        assert_eq!(po.certainty, Certainty::Certified);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let x = l_at_zero(4);
        assert_eq!(x.mul(&LaurentSeries::one(6)), x);
    }

    #[test]
    fn gamma_squared_is_even_with_leading_4c0sq() {
        let g = l_at_zero(6).add(&l_at_one(6));
        let gg = g.mul(&g);
        assert_eq!(gg.valuation(), Some(0));
        assert_eq!(gg.coeff(0), csym(0).mul(&csym(0)).scale(&rat_int(4)));
        for d in [1i64, 3, 5] {
            assert!(gg.coeff(d).is_zero());
        }
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(
            LaurentSeries::one(4).invert().unwrap(),
            LaurentSeries::one(4)
        );
        // invert(L(2+t)) has leading coefficient 1/v20
        let l2 = LaurentSeries::from_map(
            (0..=4)
                .map(|k| (k, SymbolFraction::symbol(ZetaSymbol::v(2, k as u32))))
                .collect(),
            4,
        );
        let inv = l2.invert().unwrap();
        assert_eq!(inv.valuation(), Some(0));
        assert_eq!(
            inv.coeff(0),
            SymbolFraction::symbol(ZetaSymbol::v(2, 0)).invert().unwrap()
        );
        assert_eq!(l2.mul(&inv), LaurentSeries::one(4));
        // invert(L(t)) has valuation +1 and leading 1/c_{-1}
        let inv = l_at_zero(4).invert().unwrap();
        assert_eq!(inv.valuation(), Some(1));
        assert_eq!(inv.coeff(1), csym(-1).invert().unwrap());
        assert_eq!(l_at_zero(4).mul(&inv), LaurentSeries::one(4));
        assert!(matches!(
            LaurentSeries::zero(3).invert(),
            Err(EisenError::DivisionByZeroSeries)
        ));
    }

    #[test]
    fn pole_order_reports() {
        let g = l_at_zero(4).add(&l_at_one(4));
        assert_eq!(
            g.pole_order(),
            PoleOrder {
                order: 0,
                certainty: Certainty::Certified
            }
        );
        assert_eq!(
            LaurentSeries::zero(2).pole_order(),
            PoleOrder {
                order: 0,
                certainty: Certainty::Certified
            }
        );
        // a multi-term leading coefficient is only symbolically nonzero
        let mixed = LaurentSeries::monomial(-1, csym(-1).add(&csym(0)), 3);
        assert_eq!(
            mixed.pole_order(),
            PoleOrder {
                order: 1,
                certainty: Certainty::Symbolic
            }
        );
    }

    #[test]
    fn negate_variable_is_involutive_and_fixes_gamma() {
        let x = l_at_zero(5);
        assert_eq!(x.negate_variable().negate_variable(), x);
        let g = l_at_zero(5).add(&l_at_one(5));
        assert_eq!(g.negate_variable(), g);
        // homomorphism on a product
        let a = l_at_zero(5);
        let b = l_at_one(5);
        assert_eq!(
            a.mul(&b).negate_variable(),
            a.negate_variable().mul(&b.negate_variable())
        );
    }

    #[test]
    fn render_and_json() {
        let x = LaurentSeries::monomial(-2, csym(-1).mul(&csym(-1)), 0);
        let s = x.render();
        assert!(s.contains("c[-1]^2 * t^-2"), "{s}");
        assert!(s.ends_with("+ O(t^1)"), "{s}");
        let j = x.to_json();
        assert_eq!(j["valuation"], serde_json::json!(-2));
        assert_eq!(j["trunc"], serde_json::json!(0));
        assert_eq!(j["coeffs"][0]["num"], serde_json::json!("c[-1]^2"));
        let z = LaurentSeries::zero(2).to_json();
        assert_eq!(z["valuation"], serde_json::Value::Null);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_fraction() -> impl Strategy<Value = SymbolFraction> {
            let syms = prop_oneof![
                Just(ZetaSymbol::c(-1)),
                Just(ZetaSymbol::c(0)),
                Just(ZetaSymbol::c(1)),
                Just(ZetaSymbol::v(2, 0)),
            ];
            (proptest::collection::vec((syms, -3i64..=3), 0..3)).prop_map(|terms| {
                let mut p = SymbolPolynomial::zero();
                for (s, c) in terms {
                    p = p.add(&SymbolPolynomial::symbol(s).scale(&rat_int(c)));
                }
                p = p.add(&SymbolPolynomial::constant(rat_int(1)));
                SymbolFraction::from_poly(p)
            })
        }

        fn arb_series() -> impl Strategy<Value = LaurentSeries> {
            proptest::collection::vec((-2i64..=4, arb_fraction()), 0..5).prop_map(|terms| {
                let mut map = BTreeMap::new();
                for (d, c) in terms {
                    map.insert(d, c);
                }
                LaurentSeries::from_map(map, 4)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn units_invert(a in arb_series()) {
                if !a.is_zero() {
                    let inv = a.invert().unwrap();
                    let prod = a.mul(&inv);
                    prop_assert_eq!(prod.clone(), LaurentSeries::one(prod.truncation()));
                }
            }

            #[test]
            fn negate_variable_is_ring_hom(a in arb_series(), b in arb_series()) {
                prop_assert_eq!(
                    a.add(&b).negate_variable(),
                    a.negate_variable().add(&b.negate_variable())
                );
                prop_assert_eq!(
                    a.mul(&b).negate_variable(),
                    a.negate_variable().mul(&b.negate_variable())
                );
            }
        }
    }
}
