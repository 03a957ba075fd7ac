//! Inverse normalizing factors r(Λ_s, w)⁻¹ built two independent ways, the
//! exact pole order at each critical point, and the extremal shuffle sets
//! W_α, W_α⁰ with the bound b_α.
//!
//! Route one multiplies one factor per negative root (per inversion of the
//! shuffle). Route two is the telescoped product over i = m_w(w), …, m,
//! using j_i = w(i) − i + m. Their agreement after reduction is the
//! cross-implementation oracle for the whole construction.

use crate::error::EisenError;
use crate::lambda::AffineExponent;
use crate::rat::{as_i64, rat, rat_int, rat_str, Rat};
use crate::series::LaurentSeries;
use crate::shuffle::Shuffle;
use crate::zeta::{canonical_argument, laurent_expand, order_at, FactorChar};
use num::Zero;
use std::collections::BTreeMap;

/// One completed-L symbol with an argument affine in s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LFactor {
    pub char_: FactorChar,
    pub arg: AffineExponent,
}

impl LFactor {
    pub fn new(char_: FactorChar, arg: AffineExponent) -> Self {
        LFactor { char_, arg }
    }

    /// Render symbolically (`L(s+3/2, chi*mu^-1)`) or, at a substituted
    /// point, by value (`L(2, 1)`).
    pub fn render(&self, point: Option<&Rat>) -> String {
        let char_str = match self.char_ {
            FactorChar::Trivial => "1",
            FactorChar::Nontrivial => "chi*mu^-1",
        };
        match point {
            None => format!("L({}, {char_str})", self.arg),
            Some(s) => format!("L({}, {char_str})", crate::rat::rat_display(&self.arg.eval(s))),
        }
    }
}

/// A formal numerator/denominator multiset of L-factors, optionally pinned
/// to a substituted value of s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaProduct {
    num: Vec<LFactor>,
    den: Vec<LFactor>,
    point: Option<Rat>,
}

impl ZetaProduct {
    pub fn one() -> Self {
        ZetaProduct {
            num: Vec::new(),
            den: Vec::new(),
            point: None,
        }
    }

    pub fn new(num: Vec<LFactor>, den: Vec<LFactor>) -> Self {
        ZetaProduct {
            num,
            den,
            point: None,
        }
    }

    pub fn num(&self) -> &[LFactor] {
        &self.num
    }

    pub fn den(&self) -> &[LFactor] {
        &self.den
    }

    pub fn point(&self) -> Option<&Rat> {
        self.point.as_ref()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    /// Pin the product to a rational value of s.
    pub fn substitute(&self, s: Rat) -> ZetaProduct {
        ZetaProduct {
            num: self.num.clone(),
            den: self.den.clone(),
            point: Some(s),
        }
    }

    /// The cancellation key of a factor. Symbolic products compare by exact
    /// affine argument; substituted products canonicalize trivial-character
    /// arguments through the functional equation first (two integer
    /// arguments name the same L-value iff their bases agree).
    fn factor_key(&self, f: &LFactor) -> (FactorChar, Rat, Rat) {
        match &self.point {
            None => (f.char_, f.arg.s_coeff.clone(), f.arg.constant.clone()),
            Some(s) => {
                let v = f.arg.eval(s);
                let v = if f.char_ == FactorChar::Trivial {
                    canonical_argument(&v).0
                } else {
                    v
                };
                (f.char_, Rat::zero(), v)
            }
        }
    }

    /// Cancel factors present in both multisets. After this, no factor
    /// (compared by character and canonicalized argument) appears on both
    /// sides.
    pub fn reduce(&self) -> ZetaProduct {
        let mut counts: BTreeMap<(FactorChar, Rat, Rat), (i64, LFactor)> = BTreeMap::new();
        for f in &self.num {
            let k = self.factor_key(f);
            counts.entry(k).or_insert((0, f.clone())).0 += 1;
        }
        for f in &self.den {
            let k = self.factor_key(f);
            counts.entry(k).or_insert((0, f.clone())).0 -= 1;
        }
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (_, (net, f)) in counts {
            if net > 0 {
                num.extend(std::iter::repeat(f).take(net as usize));
            } else if net < 0 {
                den.extend(std::iter::repeat(f).take((-net) as usize));
            }
        }
        ZetaProduct {
            num,
            den,
            point: self.point.clone(),
        }
    }

    /// Multiset equality after reduction; both sides must share the
    /// substitution state.
    pub fn reduced_eq(&self, other: &ZetaProduct) -> bool {
        let a = self.reduce();
        let b = other.reduce();
        a.num == b.num && a.den == b.den && a.point == b.point
    }

    /// Exact pole order at the substituted point, from the order axioms:
    /// the negative of Σ ord(num) − Σ ord(den).
    pub fn pole_order(&self) -> Result<i64, EisenError> {
        let s = self.point.as_ref().ok_or_else(|| {
            EisenError::InvalidArgument("pole_order requires a substituted point".into())
        })?;
        let mut valuation: i64 = 0;
        for f in &self.num {
            valuation += i64::from(order_at(f.char_, &f.arg.eval(s)).0);
        }
        for f in &self.den {
            valuation -= i64::from(order_at(f.char_, &f.arg.eval(s)).0);
        }
        Ok((-valuation).max(0))
    }

    /// Laurent expansion at s = point + t. Every factor must carry the
    /// trivial character and an integer argument at the point (which is
    /// automatic at critical points).
    pub fn laurent(&self, trunc: i64) -> Result<LaurentSeries, EisenError> {
        let s = self.point.as_ref().ok_or_else(|| {
            EisenError::InvalidArgument("laurent expansion requires a substituted point".into())
        })?;
        // headroom: each pole factor shifts the reachable degree by one
        let factors = (self.num.len() + self.den.len()) as i64;
        let work_trunc = trunc + factors + 2;
        let mut acc = LaurentSeries::one(work_trunc);
        for f in &self.num {
            acc = acc.mul(&expand_factor(f, s, work_trunc)?);
        }
        for f in &self.den {
            acc = acc.mul(&expand_factor(f, s, work_trunc)?.invert()?);
        }
        if acc.truncation() < trunc {
            return Err(EisenError::IncreaseTruncation(format!(
                "product truncation fell to {} below the requested {trunc}",
                acc.truncation()
            )));
        }
        Ok(acc.restrict(trunc))
    }

    pub fn render(&self) -> String {
        let side = |fs: &[LFactor]| -> String {
            if fs.is_empty() {
                "1".to_string()
            } else {
                fs.iter()
                    .map(|f| f.render(self.point.as_ref()))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        if self.den.is_empty() && self.num.is_empty() {
            "1".to_string()
        } else if self.den.is_empty() {
            side(&self.num)
        } else {
            format!("{} / {}", side(&self.num), side(&self.den))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factor_json = |f: &LFactor| match &self.point {
            None => serde_json::json!({
                "arg": f.arg.to_string(),
                "char": f.char_.as_str(),
            }),
            Some(s) => serde_json::json!({
                "arg": rat_str(&f.arg.eval(s)),
                "char": f.char_.as_str(),
            }),
        };
        serde_json::json!({
            "num": self.num.iter().map(factor_json).collect::<Vec<_>>(),
            "den": self.den.iter().map(factor_json).collect::<Vec<_>>(),
            "point": match &self.point {
                None => serde_json::Value::Null,
                Some(s) => serde_json::Value::String(rat_str(s)),
            },
        })
    }
}

fn expand_factor(f: &LFactor, s: &Rat, trunc: i64) -> Result<LaurentSeries, EisenError> {
    let v = f.arg.eval(s);
    let x = as_i64(&v).ok_or_else(|| {
        EisenError::InvalidArgument(format!(
            "factor argument {} is not an integer at s = {}",
            f.arg,
            rat_str(s)
        ))
    })?;
    laurent_expand(f.char_, x, trunc)
}

/// A critical point s = (m+n)/2 − α of the constant term, with the
/// character dichotomy χ = μ recorded. α ranges over 0 ≤ α ≤ ⌊(m+n)/2⌋;
/// the top value α = (m+n)/2 (s = 0, forcing m = n for the pole analysis)
/// is admitted for the m = n = α study even though the headline pole range
/// stops below it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalPoint {
    m: usize,
    n: usize,
    alpha: usize,
    char_equal: bool,
    s: Rat,
}

impl CriticalPoint {
    pub fn new(m: usize, n: usize, alpha: usize, char_equal: bool) -> Result<Self, EisenError> {
        if m == 0 || n == 0 {
            return Err(EisenError::InvalidArgument(
                "block sizes must be positive".into(),
            ));
        }
        if m > n {
            return Err(EisenError::InvalidArgument(format!(
                "the standing hypothesis m <= n fails: m={m}, n={n}"
            )));
        }
        if alpha > (m + n) / 2 {
            return Err(EisenError::InvalidArgument(format!(
                "alpha must satisfy 0 <= alpha <= floor((m+n)/2), got alpha={alpha} for m={m}, n={n}"
            )));
        }
        let s = rat((m + n) as i64, 2) - rat_int(alpha as i64);
        Ok(CriticalPoint {
            m,
            n,
            alpha,
            char_equal,
            s,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn char_equal(&self) -> bool {
        self.char_equal
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    pub fn factor_char(&self) -> FactorChar {
        if self.char_equal {
            FactorChar::Trivial
        } else {
            FactorChar::Nontrivial
        }
    }

    pub fn is_alpha_m_n(&self) -> bool {
        self.alpha == self.m && self.m == self.n
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "alpha": self.alpha,
            "s": rat_str(&self.s),
            "char_equal": self.char_equal,
        })
    }
}

/// r(Λ_s, w)⁻¹ as the product over negative roots: one numerator factor
/// L(s + (m+n)/2 + i − j, χμ⁻¹) per inversion (i, j) of the shuffle, and
/// the same factors shifted by one in the denominator. The empty inversion
/// set gives the empty product (the constant 1).
pub fn r_inverse_root_product(w: &Shuffle, char_: FactorChar) -> ZetaProduct {
    let half_sum = rat((w.m() + w.n()) as i64, 2);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, j) in w.inversion_pairs() {
        let c = &half_sum + rat_int(i as i64 - j as i64);
        num.push(LFactor::new(char_, AffineExponent::s_plus(c.clone())));
        den.push(LFactor::new(
            char_,
            AffineExponent::s_plus(c + rat_int(1)),
        ));
    }
    ZetaProduct::new(num, den)
}

/// r(Λ_s, w)⁻¹ in telescoped form: the product over i = m_w(w), …, m of
/// L(s + (n−m)/2 + 2i − w(i), χμ⁻¹) / L(s + (n−m)/2 + i, χμ⁻¹).
/// Reduces to the root product — the cross-implementation oracle.
pub fn r_inverse_telescoped(w: &Shuffle, char_: FactorChar) -> ZetaProduct {
    let half_diff = rat(w.n() as i64 - w.m() as i64, 2);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in w.first_raised()..=w.m() {
        let wn = &half_diff + rat_int(2 * i as i64 - w.image(i) as i64);
        let wd = &half_diff + rat_int(i as i64);
        num.push(LFactor::new(char_, AffineExponent::s_plus(wn)));
        den.push(LFactor::new(char_, AffineExponent::s_plus(wd)));
    }
    ZetaProduct::new(num, den)
}

/// Exact pole order of r(Λ_s, w)⁻¹ at a critical point, by the
/// combinatorial count: the number of i ∈ [m_w(w), m] with
/// n−α−1 ≤ w(i) − 2i ≤ n−α, less one for the denominator's simple pole in
/// the α = m = n, m_w = 1 case. Differing characters give no pole at all.
pub fn pole_order_at(w: &Shuffle, pt: &CriticalPoint) -> i64 {
    if !pt.char_equal() {
        return 0;
    }
    let n = pt.n() as i64;
    let alpha = pt.alpha() as i64;
    let mut count = 0i64;
    for i in w.first_raised()..=w.m() {
        let d = w.image(i) as i64 - 2 * i as i64;
        if n - alpha - 1 <= d && d <= n - alpha {
            count += 1;
        }
    }
    let correction = if pt.is_alpha_m_n() && w.first_raised() == 1 {
        1
    } else {
        0
    };
    let order = count - correction;
    debug_assert!(order >= 0, "pole order cannot be negative: w={w}");
    order
}

/// The maximal pole order over all shuffles at the point:
/// min(m, α+1) − 1 when α = m = n, else min(m, α+1).
pub fn b_alpha(pt: &CriticalPoint) -> u32 {
    let base = pt.m().min(pt.alpha() + 1) as u32;
    if pt.is_alpha_m_n() {
        base - 1
    } else {
        base
    }
}

fn matches_w_alpha(w: &Shuffle, pt: &CriticalPoint) -> bool {
    let n = pt.n() as i64;
    let alpha = pt.alpha() as i64;
    let upto = pt.m().min(pt.alpha() + 1);
    (1..=upto).all(|i| {
        let target = 2 * i as i64 + n - alpha;
        let v = w.image(i) as i64;
        v == target || v == target - 1
    })
}

/// W_α: the shuffles with w(i) = 2i + n − α − ε_i, ε_i ∈ {0, 1}, for every
/// i ≤ min(m, α+1). Exactly the shuffles where the pole order b_α is
/// attained.
pub fn w_alpha_set(pt: &CriticalPoint, shuffles: &[Shuffle]) -> Vec<Shuffle> {
    shuffles
        .iter()
        .filter(|w| matches_w_alpha(w, pt))
        .cloned()
        .collect()
}

/// W_α⁰: the subset of W_α with ε_i = 1 for every i < min(m, α+1) (the
/// distinguished subrepresentatives). Nonempty always; a singleton exactly
/// when m ≥ α + 1.
pub fn w_alpha_zero_set(pt: &CriticalPoint, shuffles: &[Shuffle]) -> Vec<Shuffle> {
    let n = pt.n() as i64;
    let alpha = pt.alpha() as i64;
    let upto = pt.m().min(pt.alpha() + 1);
    w_alpha_set(pt, shuffles)
        .into_iter()
        .filter(|w| (1..upto).all(|i| w.image(i) as i64 == 2 * i as i64 + n - alpha - 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use crate::shuffle::enumerate_shuffles;

    fn affine(c: Rat) -> AffineExponent {
        AffineExponent::s_plus(c)
    }

    fn trivial_product(num_consts: &[Rat], den_consts: &[Rat]) -> ZetaProduct {
        ZetaProduct::new(
            num_consts
                .iter()
                .map(|c| LFactor::new(FactorChar::Trivial, affine(c.clone())))
                .collect(),
            den_consts
                .iter()
                .map(|c| LFactor::new(FactorChar::Trivial, affine(c.clone())))
                .collect(),
        )
    }

    #[test]
    fn root_product_identity_is_one() {
        let id = Shuffle::identity(3, 2);
        assert!(r_inverse_root_product(&id, FactorChar::Trivial).is_one());
        assert!(r_inverse_telescoped(&id, FactorChar::Trivial).is_one());
    }

    #[test]
    fn root_product_gl2() {
        // single inversion (1,2): L(s)/L(s+1)
        let w = Shuffle::new(vec![2, 1], 1, 1).unwrap();
        let got = r_inverse_root_product(&w, FactorChar::Trivial);
        let expected = trivial_product(&[rat_int(0)], &[rat_int(1)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn root_product_reduces_for_w0_on_gl4() {
        let w = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        let got = r_inverse_root_product(&w, FactorChar::Trivial).reduce();
        // L(s-1)L(s) / L(s+1)L(s+2)
        let expected = trivial_product(
            &[rat_int(-1), rat_int(0)],
            &[rat_int(1), rat_int(2)],
        );
        assert!(got.reduced_eq(&expected), "got {}", got.render());
    }

    #[test]
    fn telescoped_w0_on_gl4() {
        let w = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        let got = r_inverse_telescoped(&w, FactorChar::Trivial);
        // [L(s-1)/L(s+1)]·[L(s)/L(s+2)]
        let expected = trivial_product(
            &[rat_int(-1), rat_int(0)],
            &[rat_int(1), rat_int(2)],
        );
        assert!(got.reduced_eq(&expected), "got {}", got.render());
    }

    #[test]
    fn telescoped_half_integer_arguments() {
        // m=2, n=3, w = longest: L(s-3/2)L(s-1/2) / L(s+3/2)L(s+5/2)
        let w = Shuffle::longest(2, 3);
        let got = r_inverse_telescoped(&w, FactorChar::Trivial);
        let expected = trivial_product(
            &[rat(-3, 2), rat(-1, 2)],
            &[rat(3, 2), rat(5, 2)],
        );
        assert!(got.reduced_eq(&expected), "got {}", got.render());
    }

    /// The telescoping oracle at desk scale (the full grid lives in the
    /// acceptance suite).
    #[test]
    fn telescoped_equals_root_product_up_to_rank_7() {
        for rank in 2..=7usize {
            for m in 1..rank {
                let n = rank - m;
                for w in enumerate_shuffles(m, n).unwrap() {
                    let a = r_inverse_root_product(&w, FactorChar::Trivial);
                    let b = r_inverse_telescoped(&w, FactorChar::Trivial);
                    assert!(a.reduced_eq(&b), "w={w} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn pole_orders_at_examples() {
        let pt = CriticalPoint::new(2, 2, 1, true).unwrap();
        assert_eq!(pole_order_at(&Shuffle::identity(2, 2), &pt), 0);
        let w0 = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        assert_eq!(pole_order_at(&w0, &pt), 2);
        let pt = CriticalPoint::new(1, 1, 0, true).unwrap();
        let w = Shuffle::new(vec![2, 1], 1, 1).unwrap();
        assert_eq!(pole_order_at(&w, &pt), 1);
        // differing characters never produce a pole
        let pt = CriticalPoint::new(2, 2, 1, false).unwrap();
        assert_eq!(pole_order_at(&w0, &pt), 0);
    }

    #[test]
    fn pole_order_matches_laurent_valuation_on_small_grid() {
        for rank in 2..=6usize {
            for m in 1..=rank / 2 {
                let n = rank - m;
                let shuffles = enumerate_shuffles(m, n).unwrap();
                for alpha in 0..=rank / 2 {
                    let pt = CriticalPoint::new(m, n, alpha, true).unwrap();
                    for w in &shuffles {
                        let combinatorial = pole_order_at(w, &pt);
                        let series = r_inverse_telescoped(w, FactorChar::Trivial)
                            .substitute(pt.s().clone())
                            .laurent(2)
                            .unwrap();
                        let valuation = series.valuation().expect("factor products are nonzero");
                        assert_eq!(
                            combinatorial,
                            -valuation.min(0),
                            "w={w} m={m} n={n} alpha={alpha}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn substituted_pole_order_equals_order_axioms() {
        let pt = CriticalPoint::new(2, 2, 1, true).unwrap();
        let w0 = Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap();
        let zp = r_inverse_telescoped(&w0, FactorChar::Trivial).substitute(pt.s().clone());
        assert_eq!(zp.pole_order().unwrap(), 2);
    }

    #[test]
    fn w_alpha_examples() {
        // alpha = 0: singleton with the block-swap pattern
        for (m, n) in [(1, 1), (2, 3), (3, 3)] {
            let pt = CriticalPoint::new(m, n, 0, true).unwrap();
            let shuffles = enumerate_shuffles(m, n).unwrap();
            let wa = w_alpha_set(&pt, &shuffles);
            assert_eq!(wa, vec![Shuffle::longest(m, n)]);
            assert_eq!(b_alpha(&pt), 1);
            assert_eq!(w_alpha_zero_set(&pt, &shuffles), wa);
        }
        // m=n=2, alpha=1
        let pt = CriticalPoint::new(2, 2, 1, true).unwrap();
        let shuffles = enumerate_shuffles(2, 2).unwrap();
        let wa = w_alpha_set(&pt, &shuffles);
        assert_eq!(
            wa,
            vec![
                Shuffle::new(vec![2, 4, 1, 3], 2, 2).unwrap(),
                Shuffle::new(vec![3, 4, 1, 2], 2, 2).unwrap(),
            ]
        );
        assert_eq!(b_alpha(&pt), 2);
        // m=n=alpha=2: b reduced by the denominator pole
        let pt = CriticalPoint::new(2, 2, 2, true).unwrap();
        assert_eq!(b_alpha(&pt), 1);
    }

    #[test]
    fn w_alpha_zero_at_2_2_1_is_the_distinguished_element() {
        // epsilon_1 = 1 forces w(1) = 2·1 + n − α − 1 = 2
        let pt = CriticalPoint::new(2, 2, 1, true).unwrap();
        let shuffles = enumerate_shuffles(2, 2).unwrap();
        let w0 = w_alpha_zero_set(&pt, &shuffles);
        assert_eq!(w0, vec![Shuffle::new(vec![2, 4, 1, 3], 2, 2).unwrap()]);
    }

    #[test]
    fn w_alpha_zero_counts() {
        // m >= alpha+1 -> singleton; m < alpha+1 -> the epsilon at
        // i = min(m, alpha+1) stays free
        let pt = CriticalPoint::new(1, 3, 2, true).unwrap();
        let shuffles = enumerate_shuffles(1, 3).unwrap();
        assert_eq!(w_alpha_zero_set(&pt, &shuffles).len(), 2);
        let pt = CriticalPoint::new(3, 3, 1, true).unwrap();
        let shuffles = enumerate_shuffles(3, 3).unwrap();
        assert_eq!(w_alpha_zero_set(&pt, &shuffles).len(), 1);
    }

    #[test]
    fn max_pole_order_is_attained_exactly_on_w_alpha_small_grid() {
        for rank in 2..=7usize {
            for m in 1..=rank / 2 {
                let n = rank - m;
                let shuffles = enumerate_shuffles(m, n).unwrap();
                for alpha in 0..=rank / 2 {
                    let pt = CriticalPoint::new(m, n, alpha, true).unwrap();
                    let b = i64::from(b_alpha(&pt));
                    let max = shuffles
                        .iter()
                        .map(|w| pole_order_at(w, &pt))
                        .max()
                        .unwrap();
                    assert_eq!(max, b, "m={m} n={n} alpha={alpha}");
                    let argmax: Vec<Shuffle> = shuffles
                        .iter()
                        .filter(|w| pole_order_at(w, &pt) == b)
                        .cloned()
                        .collect();
                    assert_eq!(argmax, w_alpha_set(&pt, &shuffles), "m={m} n={n} alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn w_alpha_first_raised_dichotomy() {
        for rank in 2..=7usize {
            for m in 1..=rank / 2 {
                let n = rank - m;
                let shuffles = enumerate_shuffles(m, n).unwrap();
                for alpha in 0..=rank / 2 {
                    let pt = CriticalPoint::new(m, n, alpha, true).unwrap();
                    for w in w_alpha_set(&pt, &shuffles) {
                        let mw = w.first_raised();
                        assert!(mw <= 2, "w={w}");
                        if mw == 2 {
                            assert!(pt.is_alpha_m_n(), "m_w=2 only when alpha=m=n, w={w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_cancels_across_functional_equation_only_at_points() {
        // symbolic: L(s)/L(s+1) stays a genuine ratio …
        let p = trivial_product(&[rat_int(0)], &[rat_int(1)]);
        let r = p.reduce();
        assert_eq!(r.num().len(), 1);
        assert_eq!(r.den().len(), 1);
        // … but at s = 0 it becomes L(0)/L(1), one value through the
        // functional equation, and cancels
        let at = p.substitute(rat_int(0)).reduce();
        assert!(at.is_one(), "got {}", at.render());
        // unequal canonical bases never cancel
        let q = trivial_product(&[rat_int(0)], &[rat_int(2)]).substitute(rat(1, 2));
        let qr = q.reduce();
        assert_eq!(qr.num().len(), 1);
        assert_eq!(qr.den().len(), 1);
    }

    #[test]
    fn json_shape() {
        let w = Shuffle::longest(2, 3);
        let j = r_inverse_telescoped(&w, FactorChar::Trivial).to_json();
        assert_eq!(j["num"][0]["arg"], serde_json::json!("s-3/2"));
        assert_eq!(j["num"][0]["char"], serde_json::json!("trivial"));
        assert_eq!(j["point"], serde_json::Value::Null);
        let pt = CriticalPoint::new(2, 3, 1, true).unwrap();
        let j = r_inverse_telescoped(&w, FactorChar::Trivial)
            .substitute(pt.s().clone())
            .to_json();
        assert_eq!(j["point"], serde_json::json!("3/2"));
        assert_eq!(j["num"][0]["arg"], serde_json::json!("0/1"));
    }
}
