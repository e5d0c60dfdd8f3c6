//! Extended reals with explicitly tagged infinities.
//!
//! Risk values live in `(-inf, +inf]` and gauge norms in `[0, +inf]`; both
//! ends are legitimate outcomes, not sentinel floats, so infinity arithmetic
//! stays auditable.

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_pos_inf(self) -> bool {
        matches!(self, ExtReal::PosInf)
    }

    /// Sum with the convention that opposite infinities are a caller bug.
    /// Use `checked_add` where operands can genuinely conflict.
    pub fn add(self, rhs: ExtReal) -> ExtReal {
        self.checked_add(rhs)
            .expect("ExtReal::add on opposite infinities")
    }

    pub fn checked_add(self, rhs: ExtReal) -> Option<ExtReal> {
        use ExtReal::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Some(Finite(a + b)),
            (PosInf, NegInf) | (NegInf, PosInf) => None,
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (NegInf, _) | (_, NegInf) => Some(NegInf),
        }
    }

    pub fn sub_finite(self, rhs: f64) -> ExtReal {
        match self {
            ExtReal::Finite(v) => ExtReal::Finite(v - rhs),
            other => other,
        }
    }

    /// Scale by a nonnegative factor; `0 * inf = 0` (conic-combination rule).
    pub fn scale(self, c: f64) -> ExtReal {
        debug_assert!(c >= 0.0);
        match self {
            ExtReal::Finite(v) => ExtReal::Finite(c * v),
            _ if c == 0.0 => ExtReal::Finite(0.0),
            inf => inf,
        }
    }

    pub fn max(self, rhs: ExtReal) -> ExtReal {
        if self >= rhs {
            self
        } else {
            rhs
        }
    }

    pub fn min(self, rhs: ExtReal) -> ExtReal {
        if self <= rhs {
            self
        } else {
            rhs
        }
    }

    /// Renders `inf`/`-inf` literals and 17 significant digits for finite
    /// values, matching the CSV contract.
    pub fn to_csv(self) -> String {
        match self {
            ExtReal::PosInf => "inf".to_string(),
            ExtReal::NegInf => "-inf".to_string(),
            ExtReal::Finite(v) => format_g17(v),
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use ExtReal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.partial_cmp(b),
            (NegInf, NegInf) | (PosInf, PosInf) => Some(Ordering::Equal),
            (NegInf, _) | (_, PosInf) => Some(Ordering::Less),
            (PosInf, _) | (_, NegInf) => Some(Ordering::Greater),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::PosInf => write!(f, "inf"),
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        if v.is_nan() {
            panic!("NaN is not an extended real");
        } else if v == f64::INFINITY {
            ExtReal::PosInf
        } else if v == f64::NEG_INFINITY {
            ExtReal::NegInf
        } else {
            ExtReal::Finite(v)
        }
    }
}

/// 17 significant digits, enough to round-trip any f64 and stay byte-stable.
pub fn format_g17(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering() {
        assert!(ExtReal::NegInf < ExtReal::Finite(-1e300));
        assert!(ExtReal::Finite(1e300) < ExtReal::PosInf);
        assert!(ExtReal::Finite(1.0) < ExtReal::Finite(2.0));
    }

    #[test]
    fn conic_scale_of_infinity() {
        assert_eq!(ExtReal::PosInf.scale(0.0), ExtReal::Finite(0.0));
        assert_eq!(ExtReal::PosInf.scale(2.0), ExtReal::PosInf);
    }

    #[test]
    fn opposite_infinities_checked() {
        assert_eq!(ExtReal::PosInf.checked_add(ExtReal::NegInf), None);
        assert_eq!(
            ExtReal::PosInf.checked_add(ExtReal::Finite(-1.0)),
            Some(ExtReal::PosInf)
        );
    }
}
