//! Multivariate polynomials over ℚ in the zeta-constant symbols, and their
//! fraction field. These are the coefficients of every Laurent series in
//! the crate.
//!
//! Fractions are compared by cross-multiplication (num₁·den₂ = num₂·den₁ as
//! polynomials), so no multivariate gcd is ever needed; a light common-
//! monomial reduction keeps the representatives small.

use crate::rat::{rat_int, Rat};
use crate::symbols::ZetaSymbol;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A multiset of symbols (exponent map, no zero exponents stored).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(BTreeMap<ZetaSymbol, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn symbol(s: ZetaSymbol) -> Self {
        let mut m = BTreeMap::new();
        m.insert(s, 1);
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (s, e) in &other.0 {
            *out.entry(*s).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = BTreeMap::new();
        for (s, e) in &self.0 {
            if let Some(f) = other.0.get(s) {
                out.insert(*s, (*e).min(*f));
            }
        }
        Monomial(out)
    }

    /// Exact division; caller guarantees divisibility.
    fn div(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (s, e) in &other.0 {
            let cur = out.get_mut(s).expect("monomial division must be exact");
            assert!(*cur >= *e, "monomial division must be exact");
            *cur -= e;
            if *cur == 0 {
                out.remove(s);
            }
        }
        Monomial(out)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&ZetaSymbol, &u32)> {
        self.0.iter()
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial: canonical monomial ordering, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymbolPolynomial(BTreeMap<Monomial, Rat>);

impl SymbolPolynomial {
    pub fn zero() -> Self {
        SymbolPolynomial(BTreeMap::new())
    }

    pub fn one() -> Self {
        SymbolPolynomial::constant(rat_int(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        SymbolPolynomial(m)
    }

    pub fn symbol(s: ZetaSymbol) -> Self {
        SymbolPolynomial::term(Monomial::symbol(s), rat_int(1))
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut map = BTreeMap::new();
        if !c.is_zero() {
            map.insert(m, c);
        }
        SymbolPolynomial(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1
            && self
                .0
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    /// The (monomial, coefficient) pair if the polynomial has exactly one
    /// term.
    pub fn single_term(&self) -> Option<(&Monomial, &Rat)> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.0.iter()
    }

    pub fn add(&self, other: &SymbolPolynomial) -> SymbolPolynomial {
        let mut out = self.0.clone();
        for (m, c) in &other.0 {
            let entry = out.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(m);
            }
        }
        SymbolPolynomial(out)
    }

    pub fn neg(&self) -> SymbolPolynomial {
        SymbolPolynomial(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &SymbolPolynomial) -> SymbolPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymbolPolynomial) -> SymbolPolynomial {
        let mut out: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                let m = m1.mul(m2);
                let entry = out.entry(m).or_insert_with(Rat::zero);
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        SymbolPolynomial(out)
    }

    pub fn scale(&self, c: &Rat) -> SymbolPolynomial {
        if c.is_zero() {
            return SymbolPolynomial::zero();
        }
        SymbolPolynomial(self.0.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    /// Common monomial factor of all terms (for fraction reduction).
    fn monomial_content(&self) -> Option<Monomial> {
        let mut iter = self.0.keys();
        let mut acc = iter.next()?.clone();
        for m in iter {
            acc = acc.gcd(m);
            if acc.is_one() {
                break;
            }
        }
        Some(acc)
    }

    fn div_monomial(&self, m: &Monomial) -> SymbolPolynomial {
        SymbolPolynomial(self.0.iter().map(|(k, c)| (k.div(m), c.clone())).collect())
    }

    /// Leading coefficient in the canonical monomial order.
    fn leading_coeff(&self) -> Option<&Rat> {
        self.0.values().next()
    }
}

impl std::fmt::Display for SymbolPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::rat::rat_display;
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.0 {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", rat_display(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rat_display(&mag))?;
            }
        }
        Ok(())
    }
}

/// An element of the fraction field: numerator / denominator with a nonzero
/// denominator. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct SymbolFraction {
    num: SymbolPolynomial,
    den: SymbolPolynomial,
}

impl SymbolFraction {
    pub fn new(num: SymbolPolynomial, den: SymbolPolynomial) -> Self {
        assert!(!den.is_zero(), "fraction denominator must be nonzero");
        let mut num = num;
        let mut den = den;
        if num.is_zero() {
            return SymbolFraction {
                num,
                den: SymbolPolynomial::one(),
            };
        }
        // cancel the common monomial content
        if let (Some(a), Some(b)) = (num.monomial_content(), den.monomial_content()) {
            let g = a.gcd(&b);
            if !g.is_one() {
                num = num.div_monomial(&g);
                den = den.div_monomial(&g);
            }
        }
        // make the denominator's leading coefficient 1
        let lead = den.leading_coeff().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        SymbolFraction { num, den }
    }

    pub fn from_poly(p: SymbolPolynomial) -> Self {
        SymbolFraction {
            num: p,
            den: SymbolPolynomial::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        SymbolFraction::from_poly(SymbolPolynomial::constant(c))
    }

    pub fn zero() -> Self {
        SymbolFraction::from_rat(rat_int(0))
    }

    pub fn one() -> Self {
        SymbolFraction::from_rat(rat_int(1))
    }

    pub fn symbol(s: ZetaSymbol) -> Self {
        SymbolFraction::from_poly(SymbolPolynomial::symbol(s))
    }

    pub fn num(&self) -> &SymbolPolynomial {
        &self.num
    }

    pub fn den(&self) -> &SymbolPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &SymbolFraction) -> SymbolFraction {
        SymbolFraction::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> SymbolFraction {
        SymbolFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &SymbolFraction) -> SymbolFraction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymbolFraction) -> SymbolFraction {
        SymbolFraction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rat) -> SymbolFraction {
        SymbolFraction::new(self.num.scale(c), self.den.clone())
    }

    /// Multiplicative inverse; `None` for the zero fraction.
    pub fn invert(&self) -> Option<SymbolFraction> {
        if self.is_zero() {
            return None;
        }
        Some(SymbolFraction::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &SymbolFraction) -> Option<SymbolFraction> {
        other.invert().map(|inv| self.mul(&inv))
    }

    /// A single monomial with rational coefficient, if the fraction reduces
    /// to `c · M / N` with monomial M, N: returns (numerator monomial,
    /// denominator monomial, coefficient).
    pub fn as_monomial_ratio(&self) -> Option<(&Monomial, &Monomial, Rat)> {
        let (nm, nc) = self.num.single_term()?;
        let (dm, dc) = self.den.single_term()?;
        Some((nm, dm, nc / dc))
    }

    /// Whether the axioms on the symbol set certify this fraction nonzero:
    /// it is a nonzero rational multiple of a ratio of monomials whose
    /// symbols are all axiomatized nonzero.
    pub fn is_certified_nonzero(&self) -> bool {
        match self.as_monomial_ratio() {
            Some((nm, dm, c)) => {
                !c.is_zero()
                    && nm.symbols().all(|(s, _)| s.is_axiomatized_nonzero())
                    && dm.symbols().all(|(s, _)| s.is_axiomatized_nonzero())
            }
            None => false,
        }
    }
}

impl PartialEq for SymbolFraction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for SymbolFraction {}

impl std::fmt::Display for SymbolFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let den = if self.den.num_terms() > 1 {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{num}/{den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn c(k: i64) -> SymbolPolynomial {
        SymbolPolynomial::symbol(ZetaSymbol::c(k))
    }

    #[test]
    fn poly_arithmetic() {
        let p = c(-1).add(&c(0));
        let q = c(-1).sub(&c(0));
        let prod = p.mul(&q);
        // (a+b)(a-b) = a^2 - b^2
        let a2 = c(-1).mul(&c(-1));
        let b2 = c(0).mul(&c(0));
        assert_eq!(prod, a2.sub(&b2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn fraction_equality_by_cross_multiplication() {
        // (c0 * c-1) / c-1 == c0
        let f = SymbolFraction::new(c(0).mul(&c(-1)), c(-1));
        let g = SymbolFraction::from_poly(c(0));
        assert_eq!(f, g);
        // reduction keeps the representative small
        assert!(f.den().is_one());
    }

    #[test]
    fn fraction_field_ops() {
        let half = SymbolFraction::from_rat(rat(1, 2));
        let two = SymbolFraction::from_rat(rat(2, 1));
        assert_eq!(half.mul(&two), SymbolFraction::one());
        let x = SymbolFraction::new(c(0), c(-1));
        let y = x.invert().unwrap();
        assert_eq!(x.mul(&y), SymbolFraction::one());
        assert!(SymbolFraction::zero().invert().is_none());
        assert_eq!(x.sub(&x), SymbolFraction::zero());
    }

    #[test]
    fn certification_rules() {
        let ok = SymbolFraction::new(c(-1).mul(&c(0)), SymbolPolynomial::symbol(ZetaSymbol::v(2, 0)));
        assert!(ok.is_certified_nonzero());
        let unknown_symbol = SymbolFraction::from_poly(c(1));
        assert!(!unknown_symbol.is_certified_nonzero());
        let multi_term = SymbolFraction::from_poly(c(-1).add(&c(0)));
        assert!(!multi_term.is_certified_nonzero());
        assert!(!SymbolFraction::zero().is_certified_nonzero());
    }

    #[test]
    fn display_forms() {
        let p = c(-1).mul(&c(-1)).scale(&rat(-1, 1));
        assert_eq!(p.to_string(), "-c[-1]^2");
        let f = SymbolFraction::new(c(0).scale(&rat(2, 1)), SymbolPolynomial::symbol(ZetaSymbol::v(2, 0)));
        assert_eq!(f.to_string(), "2*c[0]/v[2][0]");
        let g = SymbolFraction::new(c(0).add(&c(1)), c(-1).add(&SymbolPolynomial::one()));
        assert_eq!(g.to_string(), "(c[0] + c[1])/(1 + c[-1])");
    }
}
