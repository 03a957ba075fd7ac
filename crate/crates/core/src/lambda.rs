//! The induced character tuple Λ_s and the Weyl action on it.

use crate::error::EisenError;
use crate::rat::{rat, rat_int, rat_str, Rat};
use crate::shuffle::Shuffle;
use num::Zero;

/// An exponent affine in s: `s_coeff·s + constant`, with exact rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineExponent {
    pub s_coeff: Rat,
    pub constant: Rat,
}

impl AffineExponent {
    pub fn new(s_coeff: Rat, constant: Rat) -> Self {
        AffineExponent { s_coeff, constant }
    }

    /// `s + c` for integer-plus-half-type constants used by L-factor
    /// arguments.
    pub fn s_plus(constant: Rat) -> Self {
        AffineExponent::new(rat_int(1), constant)
    }

    pub fn constant(value: Rat) -> Self {
        AffineExponent::new(rat_int(0), value)
    }

    pub fn eval(&self, s: &Rat) -> Rat {
        &self.s_coeff * s + &self.constant
    }

    pub fn shift(&self, delta: &Rat) -> Self {
        AffineExponent::new(self.s_coeff.clone(), &self.constant + delta)
    }
}

impl std::fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::rat::rat_display;
        use num::One;
        if self.s_coeff.is_zero() {
            return write!(f, "{}", rat_display(&self.constant));
        }
        if self.s_coeff.is_one() {
            write!(f, "s")?;
        } else if self.s_coeff == -Rat::one() {
            write!(f, "-s")?;
        } else {
            write!(f, "{}*s", rat_display(&self.s_coeff))?;
        }
        if self.constant.is_zero() {
            return Ok(());
        }
        if self.constant > Rat::zero() {
            write!(f, "+{}", rat_display(&self.constant))
        } else {
            write!(f, "{}", rat_display(&self.constant))
        }
    }
}

/// Which of the two inducing characters an entry of Λ_s carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CharTag {
    Chi,
    Mu,
}

impl CharTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CharTag::Chi => "CHI",
            CharTag::Mu => "MU",
        }
    }
}

/// The (m+n)-tuple of (character tag, affine exponent) pairs housing the
/// inducing character of the principal series:
/// entry i (i ≤ m) is (χ, (s−(m−1))/2 + (i−1)),
/// entry m+j is (μ, (−s−(n−1))/2 + (j−1)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaTuple {
    entries: Vec<(CharTag, AffineExponent)>,
    m: usize,
    n: usize,
}

impl LambdaTuple {
    pub fn standard(m: usize, n: usize) -> Self {
        let mut entries = Vec::with_capacity(m + n);
        for i in 1..=m {
            let c = rat(-(m as i64 - 1), 2) + rat_int(i as i64 - 1);
            entries.push((CharTag::Chi, AffineExponent::new(rat(1, 2), c)));
        }
        for j in 1..=n {
            let c = rat(-(n as i64 - 1), 2) + rat_int(j as i64 - 1);
            entries.push((CharTag::Mu, AffineExponent::new(rat(-1, 2), c)));
        }
        LambdaTuple { entries, m, n }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry access.
    pub fn entry(&self, i: usize) -> &(CharTag, AffineExponent) {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[(CharTag, AffineExponent)] {
        &self.entries
    }

    /// Substitute a rational s, keeping the tags.
    pub fn substitute(&self, s: &Rat) -> Vec<(CharTag, Rat)> {
        self.entries
            .iter()
            .map(|(tag, e)| (*tag, e.eval(s)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(tag, e)| {
                    serde_json::json!({
                        "tag": tag.as_str(),
                        "s_coeff": rat_str(&e.s_coeff),
                        "const": rat_str(&e.constant),
                    })
                })
                .collect(),
        )
    }
}

/// The Weyl action on character tuples: the entry of `w(Λ)` at position i
/// is the entry of Λ at position w⁻¹(i). This is the single action
/// convention used everywhere in the crate; it satisfies
/// `apply_weyl(id) = id` and `apply_weyl(w1∘w2) = apply_weyl(w1)∘apply_weyl(w2)`.
///
/// `perm` is given by its 1-based images (`perm[k] = w(k+1)`), so any
/// permutation — not only a shuffle — can act.
pub fn apply_weyl(perm: &[usize], lam: &LambdaTuple) -> Result<LambdaTuple, EisenError> {
    if perm.len() != lam.len() {
        return Err(EisenError::LengthMismatch {
            perm_len: perm.len(),
            tuple_len: lam.len(),
        });
    }
    let rank = perm.len();
    let mut inv = vec![0usize; rank];
    let mut seen = vec![false; rank + 1];
    for (k, &v) in perm.iter().enumerate() {
        if v < 1 || v > rank || seen[v] {
            return Err(EisenError::InvalidArgument(format!(
                "not a permutation of 1..={rank}: {perm:?}"
            )));
        }
        seen[v] = true;
        inv[v - 1] = k + 1;
    }
    let entries = (1..=rank)
        .map(|i| lam.entry(inv[i - 1]).clone())
        .collect();
    Ok(LambdaTuple {
        entries,
        m: lam.m,
        n: lam.n,
    })
}

/// The substituted tuple used to compare Λ_s-images of shuffles at a point:
/// position i carries the entry of Λ_s at w⁻¹(i), evaluated at s. With
/// `char_equal` the two tags name the same character and are dropped from
/// the key.
pub fn image_key(w: &Shuffle, s: &Rat, char_equal: bool) -> Vec<(u8, Rat)> {
    let lam = LambdaTuple::standard(w.m(), w.n());
    let inv = w.inverse_images();
    (1..=w.rank())
        .map(|i| {
            let (tag, e) = lam.entry(inv[i - 1]);
            let t = if char_equal {
                0
            } else {
                match tag {
                    CharTag::Chi => 1,
                    CharTag::Mu => 2,
                }
            };
            (t, e.eval(s))
        })
        .collect()
}
