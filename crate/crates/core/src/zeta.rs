//! Completed global L-functions as formal symbols.
//!
//! The analytic inputs are axiomatized once, here: for a unitary character
//! λ the completed L(x, λ) is holomorphic and non-vanishing for x > 1,
//! non-vanishing at x = 1 with a simple pole exactly when λ is trivial,
//! holomorphic on 0 < x < 1, non-vanishing at x = 0 with a simple pole
//! exactly when λ is trivial, and holomorphic non-vanishing for x < 0. For
//! the trivial character the functional equation L(x) = L(1−x) canonicalizes
//! every integer argument to a base ≥ 1, and the completed zeta has no real
//! zeros, so order-0 factors are units on the real line.

use crate::error::EisenError;
use crate::rat::{rat_int, Rat};
use crate::series::LaurentSeries;
use crate::symbols::ZetaSymbol;
use num::{One, Zero};
use std::collections::BTreeMap;

/// The character of an L-factor: the ratio χμ⁻¹ is either trivial (χ = μ)
/// or not; nothing finer is needed for pole bookkeeping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FactorChar {
    Trivial,
    Nontrivial,
}

impl FactorChar {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorChar::Trivial => "trivial",
            FactorChar::Nontrivial => "nontrivial",
        }
    }
}

/// The order of L(x, λ) at a rational point x, plus a non-vanishing flag.
///
/// Returns order −1 (simple pole) exactly for the trivial character at
/// x ∈ {0, 1}, order 0 otherwise. The flag is true when the value is known
/// nonzero: always for the trivial character (no real zeros), and for a
/// nontrivial character whenever x lies outside the open interval (0, 1)
/// (inside it, vanishing is not ruled out by the axioms and no implemented
/// formula depends on it).
pub fn order_at(char_: FactorChar, x: &Rat) -> (i32, bool) {
    let zero = Rat::zero();
    let one = Rat::one();
    match char_ {
        FactorChar::Trivial => {
            if *x == zero || *x == one {
                (-1, false)
            } else {
                (0, true)
            }
        }
        FactorChar::Nontrivial => {
            let nonzero_known = *x <= zero || *x >= one;
            (0, nonzero_known)
        }
    }
}

/// Canonicalize a trivial-character argument through the functional
/// equation x ↦ 1−x: returns (base, sign) with base = max(x, 1−x) and the
/// expansion direction L(x + t) = (base series)(sign·t). Two integer
/// arguments name the same L-value exactly when their bases agree.
pub fn canonical_argument(x: &Rat) -> (Rat, i8) {
    let reflected = Rat::one() - x;
    if *x >= reflected {
        (x.clone(), 1)
    } else {
        (reflected, -1)
    }
}

/// Truncated Laurent expansion of L(x + t, 1) at an integer argument x.
///
/// x = 0 expands as Σ_{k≥−1} c_k t^k; x = 1 as Σ c_k (−t)^k via the
/// functional equation; any other integer canonicalizes to a base b ≥ 2 and
/// expands as Σ_{k≥0} v_{b,k} (sign·t)^k.
pub fn laurent_expand(char_: FactorChar, x: i64, trunc: i64) -> Result<LaurentSeries, EisenError> {
    if char_ == FactorChar::Nontrivial {
        return Err(EisenError::NontrivialExpansion);
    }
    let mut map = BTreeMap::new();
    match x {
        0 => {
            for k in -1..=trunc {
                map.insert(k, crate::poly::SymbolFraction::symbol(ZetaSymbol::c(k)));
            }
        }
        1 => {
            for k in -1..=trunc {
                let sym = crate::poly::SymbolFraction::symbol(ZetaSymbol::c(k));
                let coeff = if k.rem_euclid(2) == 1 { sym.neg() } else { sym };
                map.insert(k, coeff);
            }
        }
        _ => {
            let (base, sign) = canonical_argument(&rat_int(x));
            let base = crate::rat::as_i64(&base).expect("integer base");
            debug_assert!(base >= 2);
            for k in 0..=trunc.max(0) {
                if k > trunc {
                    break;
                }
                let sym = crate::poly::SymbolFraction::symbol(ZetaSymbol::v(base, k as u32));
                let coeff = if sign < 0 && k.rem_euclid(2) == 1 {
                    sym.neg()
                } else {
                    sym
                };
                map.insert(k, coeff);
            }
        }
    }
    Ok(LaurentSeries::from_map(map, trunc))
}

/// γ(t) = L(t, 1) + L(1+t, 1) = 2 Σ c_{2k} t^{2k}: the even, holomorphic,
/// non-vanishing cancellation kernel of every orbit sum.
pub fn gamma(trunc: i64) -> LaurentSeries {
    let a = laurent_expand(FactorChar::Trivial, 0, trunc).expect("trivial char");
    let b = laurent_expand(FactorChar::Trivial, 1, trunc).expect("trivial char");
    a.add(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SymbolFraction;
    use crate::rat::rat;
    use crate::series::Certainty;

    #[test]
    fn order_at_the_stated_points() {
        // simple pole at 0 and 1 for the trivial character only
        assert_eq!(order_at(FactorChar::Trivial, &rat_int(1)), (-1, false));
        assert_eq!(order_at(FactorChar::Trivial, &rat_int(0)), (-1, false));
        assert_eq!(order_at(FactorChar::Trivial, &rat_int(3)), (0, true));
        assert_eq!(order_at(FactorChar::Trivial, &rat_int(-2)), (0, true));
        assert_eq!(order_at(FactorChar::Trivial, &rat(1, 2)), (0, true));
        assert_eq!(order_at(FactorChar::Nontrivial, &rat_int(0)), (0, true));
        assert_eq!(order_at(FactorChar::Nontrivial, &rat_int(1)), (0, true));
        // vanishing unknown strictly inside (0, 1) for a nontrivial character
        assert_eq!(order_at(FactorChar::Nontrivial, &rat(1, 2)), (0, false));
    }

    #[test]
    fn canonicalization() {
        assert_eq!(canonical_argument(&rat_int(0)), (rat_int(1), -1));
        assert_eq!(canonical_argument(&rat_int(1)), (rat_int(1), 1));
        assert_eq!(canonical_argument(&rat_int(-2)), (rat_int(3), -1));
        assert_eq!(canonical_argument(&rat(1, 2)), (rat(1, 2), 1));
        // idempotent on the base, involutive under x ↦ 1−x
        for k in -6..=6i64 {
            let x = rat_int(k);
            let (base, _) = canonical_argument(&x);
            assert_eq!(canonical_argument(&base).0, base);
            let (rbase, _) = canonical_argument(&(Rat::one() - &x));
            assert_eq!(rbase, base);
        }
    }

    fn csym(k: i64) -> SymbolFraction {
        SymbolFraction::symbol(ZetaSymbol::c(k))
    }

    #[test]
    fn expansion_at_zero() {
        let s = laurent_expand(FactorChar::Trivial, 0, 1).unwrap();
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.coeff(-1), csym(-1));
        assert_eq!(s.coeff(0), csym(0));
        assert_eq!(s.coeff(1), csym(1));
    }

    #[test]
    fn expansion_at_one_flips_odd_signs() {
        let s = laurent_expand(FactorChar::Trivial, 1, 1).unwrap();
        assert_eq!(s.coeff(-1), csym(-1).neg());
        assert_eq!(s.coeff(0), csym(0));
        assert_eq!(s.coeff(1), csym(1).neg());
    }

    #[test]
    fn expansion_at_negative_one_uses_base_two() {
        let s = laurent_expand(FactorChar::Trivial, -1, 1).unwrap();
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.coeff(0), SymbolFraction::symbol(ZetaSymbol::v(2, 0)));
        assert_eq!(s.coeff(1), SymbolFraction::symbol(ZetaSymbol::v(2, 1)).neg());
    }

    #[test]
    fn nontrivial_expansion_is_rejected() {
        assert!(matches!(
            laurent_expand(FactorChar::Nontrivial, 0, 2),
            Err(EisenError::NontrivialExpansion)
        ));
    }

    #[test]
    fn gamma_is_certified_holomorphic_nonzero() {
        let g = gamma(6);
        let po = g.pole_order();
        assert_eq!(po.order, 0);
        assert_eq!(po.certainty, Certainty::Certified);
        for d in (1..=5i64).step_by(2) {
            assert!(g.coeff(d).is_zero());
        }
    }

    /// order_at equals the valuation of the expansion for every
    /// trivial-character integer argument.
    #[test]
    fn order_matches_expansion_valuation() {
        for x in -6..=7i64 {
            let (ord, _) = order_at(FactorChar::Trivial, &rat_int(x));
            let s = laurent_expand(FactorChar::Trivial, x, 3).unwrap();
            assert_eq!(i64::from(ord), s.valuation().unwrap(), "x={x}");
        }
    }
}
