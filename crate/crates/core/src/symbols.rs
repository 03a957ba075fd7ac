//! Abstract zeta constants: the coefficient symbols of completed-zeta
//! Laurent and Taylor expansions.
//!
//! `C(k)` is the coefficient of t^k in the expansion of L(t, 1) at t = 0
//! (k ≥ −1; the residue is C(−1)). `V { base, order }` is the order-th
//! Taylor coefficient of L(base + t, 1) at an integer base ≥ 2. The whole
//! symbol set is treated as algebraically independent, and C(−1), C(0), and
//! every V { base, 0 } are axiomatized nonzero; those axioms are what let a
//! monomial leading coefficient certify a pole order.

/// One abstract zeta constant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ZetaSymbol {
    /// Laurent coefficient c_k of L(t, 1) at t = 0, k ≥ −1.
    C(i64),
    /// Taylor coefficient of L(base + t, 1), base ≥ 2, at order `order`.
    V { base: i64, order: u32 },
}

impl ZetaSymbol {
    pub fn c(k: i64) -> Self {
        assert!(k >= -1, "c-symbols start at the residue index -1");
        ZetaSymbol::C(k)
    }

    pub fn v(base: i64, order: u32) -> Self {
        assert!(base >= 2, "v-symbol bases are canonical (>= 2)");
        ZetaSymbol::V { base, order }
    }

    /// Whether the symbol is axiomatized nonzero: the residue c_{-1}, the
    /// constant term c_0, and every unit value v_{b,0}.
    pub fn is_axiomatized_nonzero(self) -> bool {
        matches!(self, ZetaSymbol::C(-1) | ZetaSymbol::C(0) | ZetaSymbol::V { order: 0, .. })
    }
}

impl std::fmt::Display for ZetaSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZetaSymbol::C(k) => write!(f, "c[{k}]"),
            ZetaSymbol::V { base, order } => write!(f, "v[{base}][{order}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(ZetaSymbol::c(-1).to_string(), "c[-1]");
        assert_eq!(ZetaSymbol::c(2).to_string(), "c[2]");
        assert_eq!(ZetaSymbol::v(3, 1).to_string(), "v[3][1]");
    }

    #[test]
    fn nonzero_axioms() {
        assert!(ZetaSymbol::c(-1).is_axiomatized_nonzero());
        assert!(ZetaSymbol::c(0).is_axiomatized_nonzero());
        assert!(!ZetaSymbol::c(1).is_axiomatized_nonzero());
        assert!(ZetaSymbol::v(2, 0).is_axiomatized_nonzero());
        assert!(!ZetaSymbol::v(2, 1).is_axiomatized_nonzero());
    }

    #[test]
    fn ordering_is_c_then_v() {
        assert!(ZetaSymbol::c(-1) < ZetaSymbol::c(0));
        assert!(ZetaSymbol::c(99) < ZetaSymbol::v(2, 0));
        assert!(ZetaSymbol::v(2, 1) < ZetaSymbol::v(3, 0));
    }
}
