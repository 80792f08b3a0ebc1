//! Scalar arithmetic over a clodum (complete lattice-ordered double monoid).
//!
//! A clodum equips a bounded chain of scalars with four operations: the
//! lattice join ∨ and meet ∧, a "multiplication" ⋆ that distributes over ∨
//! (a scalar dilation) and a dual multiplication ⋆′ that distributes over ∧
//! (a scalar erosion). Four instances are built in:
//!
//! | name          | carrier   | ⋆       | ⋆′                | e  | e′ | ⊥   | ⊤   |
//! |---------------|-----------|---------|-------------------|----|----|-----|-----|
//! | max-plus      | [−∞,+∞]   | +       | +′                | 0  | 0  | −∞  | +∞  |
//! | max-times     | [0,+∞]    | ×       | ×′                | 1  | 1  | 0   | +∞  |
//! | max-min       | [0,1]     | min     | max               | 1  | 0  | 0   | 1   |
//! | product-tnorm | [0,1]     | a·b     | a+b−ab            | 1  | 0  | 0   | 1   |
//!
//! Max-plus and max-times are clogs: their finite scalars form a group under
//! ⋆, the two multiplications coincide except at ⊥⋆⊤ (which is ⊥ for ⋆ and ⊤
//! for ⋆′), and conjugation a ↦ a* inverts the group element and swaps the
//! bounds. Sentinel combinations are resolved by explicit case analysis, never
//! by IEEE arithmetic on infinities.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default absolute-plus-relative comparison tolerance for finite scalars.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A scalar of a complete weighted lattice: the least element, a finite
/// (group) element, or the greatest element. What `Bottom` and `Top` mean
/// numerically depends on the clodum (−∞/+∞ for max-plus, 0/1 for max-min).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Bottom,
    Finite(f64),
    Top,
}

impl Scalar {
    pub fn is_bottom(self) -> bool {
        matches!(self, Scalar::Bottom)
    }

    pub fn is_top(self) -> bool {
        matches!(self, Scalar::Top)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Scalar::Finite(_))
    }

    /// Total order of the chain ⊥ < finite < ⊤, finite values by magnitude.
    pub fn total_cmp(&self, other: &Scalar) -> Ordering {
        use Scalar::*;
        match (self, other) {
            (Bottom, Bottom) | (Top, Top) => Ordering::Equal,
            (Bottom, _) => Ordering::Less,
            (_, Bottom) => Ordering::Greater,
            (Top, _) => Ordering::Greater,
            (_, Top) => Ordering::Less,
            (Finite(a), Finite(b)) => a.total_cmp(b),
        }
    }

    pub fn join(self, other: Scalar) -> Scalar {
        if self.total_cmp(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn meet(self, other: Scalar) -> Scalar {
        if self.total_cmp(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn le(self, other: Scalar) -> bool {
        self.total_cmp(&other) != Ordering::Greater
    }

    pub fn lt(self, other: Scalar) -> bool {
        self.total_cmp(&other) == Ordering::Less
    }

    /// Sentinels compare exactly; finite values with an absolute-plus-relative
    /// tolerance. A sentinel never approximates a finite value.
    pub fn approx_eq(self, other: Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Bottom, Scalar::Bottom) | (Scalar::Top, Scalar::Top) => true,
            (Scalar::Finite(a), Scalar::Finite(b)) => {
                (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
            }
            _ => false,
        }
    }

    /// `self ≤ other` up to tolerance (true also when approximately equal).
    pub fn le_tol(self, other: Scalar, tol: f64) -> bool {
        self.le(other) || self.approx_eq(other, tol)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Bottom => write!(f, "bot"),
            Scalar::Top => write!(f, "top"),
            Scalar::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// One of the built-in scalar cloduma. Instances are plain values: cheap to
/// copy, immutable, and shareable across threads. All arithmetic lives here
/// so that sentinel cases are decided by the case table of the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clodum {
    MaxPlus,
    MaxTimes,
    MaxMin,
    ProductTnorm,
}

impl Clodum {
    /// Look up a built-in instance by its canonical name.
    pub fn from_name(name: &str) -> Result<Clodum> {
        match name {
            "max-plus" => Ok(Clodum::MaxPlus),
            "max-times" => Ok(Clodum::MaxTimes),
            "max-min" => Ok(Clodum::MaxMin),
            "product-tnorm" => Ok(Clodum::ProductTnorm),
            other => Err(Error::UnknownClodum(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Clodum::MaxPlus => "max-plus",
            Clodum::MaxTimes => "max-times",
            Clodum::MaxMin => "max-min",
            Clodum::ProductTnorm => "product-tnorm",
        }
    }

    pub fn carrier(self) -> &'static str {
        match self {
            Clodum::MaxPlus => "[-inf,+inf]",
            Clodum::MaxTimes => "[0,+inf]",
            Clodum::MaxMin | Clodum::ProductTnorm => "[0,1]",
        }
    }

    /// Whether the finite scalars form a group under ⋆ (max-plus, max-times).
    pub fn is_clog(self) -> bool {
        matches!(self, Clodum::MaxPlus | Clodum::MaxTimes)
    }

    /// All four built-ins carry a lattice negation satisfying the
    /// De Morgan-with-⋆ laws, so conjugation is total on them.
    pub fn is_self_conjugate(self) -> bool {
        true
    }

    pub fn bottom(self) -> Scalar {
        Scalar::Bottom
    }

    pub fn top(self) -> Scalar {
        Scalar::Top
    }

    /// Identity of ⋆.
    pub fn unit(self) -> Scalar {
        match self {
            Clodum::MaxPlus => Scalar::Finite(0.0),
            Clodum::MaxTimes => Scalar::Finite(1.0),
            Clodum::MaxMin | Clodum::ProductTnorm => Scalar::Top,
        }
    }

    /// Identity of ⋆′.
    pub fn dual_unit(self) -> Scalar {
        match self {
            Clodum::MaxPlus => Scalar::Finite(0.0),
            Clodum::MaxTimes => Scalar::Finite(1.0),
            Clodum::MaxMin | Clodum::ProductTnorm => Scalar::Bottom,
        }
    }

    /// Validate a raw number against the carrier and canonicalize the carrier
    /// bounds to the sentinels.
    pub fn scalar(self, v: f64) -> Result<Scalar> {
        if v.is_nan() {
            return Err(self.outside(v));
        }
        match self {
            Clodum::MaxPlus => Ok(self.canon(v)),
            Clodum::MaxTimes => {
                if v < 0.0 {
                    Err(self.outside(v))
                } else {
                    Ok(self.canon(v))
                }
            }
            Clodum::MaxMin | Clodum::ProductTnorm => {
                if !(0.0..=1.0).contains(&v) {
                    Err(self.outside(v))
                } else {
                    Ok(self.canon(v))
                }
            }
        }
    }

    fn outside(self, value: f64) -> Error {
        Error::OutsideCarrier {
            value,
            carrier: self.carrier(),
            clodum: self.name(),
        }
    }

    /// Canonicalize an in-carrier number; used internally on arithmetic
    /// results so overflow/underflow lands on the proper sentinel.
    fn canon(self, v: f64) -> Scalar {
        match self {
            Clodum::MaxPlus => {
                if v == f64::NEG_INFINITY {
                    Scalar::Bottom
                } else if v == f64::INFINITY {
                    Scalar::Top
                } else {
                    Scalar::Finite(v)
                }
            }
            Clodum::MaxTimes => {
                if v <= 0.0 {
                    Scalar::Bottom
                } else if v == f64::INFINITY {
                    Scalar::Top
                } else {
                    Scalar::Finite(v)
                }
            }
            Clodum::MaxMin | Clodum::ProductTnorm => {
                if v <= 0.0 {
                    Scalar::Bottom
                } else if v >= 1.0 {
                    Scalar::Top
                } else {
                    Scalar::Finite(v)
                }
            }
        }
    }

    /// Numeric value of a scalar under this instance's carrier.
    pub fn to_f64(self, s: Scalar) -> f64 {
        match (self, s) {
            (_, Scalar::Finite(v)) => v,
            (Clodum::MaxPlus, Scalar::Bottom) => f64::NEG_INFINITY,
            (Clodum::MaxPlus, Scalar::Top) => f64::INFINITY,
            (Clodum::MaxTimes, Scalar::Bottom) => 0.0,
            (Clodum::MaxTimes, Scalar::Top) => f64::INFINITY,
            (Clodum::MaxMin | Clodum::ProductTnorm, Scalar::Bottom) => 0.0,
            (Clodum::MaxMin | Clodum::ProductTnorm, Scalar::Top) => 1.0,
        }
    }

    pub fn join(self, a: Scalar, b: Scalar) -> Scalar {
        a.join(b)
    }

    pub fn meet(self, a: Scalar, b: Scalar) -> Scalar {
        a.meet(b)
    }

    /// The multiplication ⋆: null ⊥, identity e, distributes over ∨.
    /// For clogs the sentinel rows follow the clog case table; in particular
    /// ⊥⋆⊤ = ⊥.
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        use Scalar::*;
        match self {
            Clodum::MaxPlus => match (a, b) {
                (Bottom, _) | (_, Bottom) => Bottom,
                (Top, _) | (_, Top) => Top,
                (Finite(x), Finite(y)) => self.canon(x + y),
            },
            Clodum::MaxTimes => match (a, b) {
                (Bottom, _) | (_, Bottom) => Bottom,
                (Top, _) | (_, Top) => Top,
                (Finite(x), Finite(y)) => self.canon(x * y),
            },
            // min: ⊥ absorbs, ⊤ is the unit.
            Clodum::MaxMin => a.meet(b),
            Clodum::ProductTnorm => match (a, b) {
                (Bottom, _) | (_, Bottom) => Bottom,
                (Top, x) | (x, Top) => x,
                (Finite(x), Finite(y)) => self.canon(x * y),
            },
        }
    }

    /// The dual multiplication ⋆′: null ⊤, identity e′, distributes over ∧.
    /// For clogs it coincides with ⋆ on finite scalars but ⊥⋆′⊤ = ⊤.
    pub fn dual_mul(self, a: Scalar, b: Scalar) -> Scalar {
        use Scalar::*;
        match self {
            Clodum::MaxPlus => match (a, b) {
                (Top, _) | (_, Top) => Top,
                (Bottom, _) | (_, Bottom) => Bottom,
                (Finite(x), Finite(y)) => self.canon(x + y),
            },
            Clodum::MaxTimes => match (a, b) {
                (Top, _) | (_, Top) => Top,
                (Bottom, _) | (_, Bottom) => Bottom,
                (Finite(x), Finite(y)) => self.canon(x * y),
            },
            // max: ⊤ absorbs, ⊥ is the unit.
            Clodum::MaxMin => a.join(b),
            // probabilistic sum a+b−ab = 1−(1−a)(1−b)
            Clodum::ProductTnorm => match (a, b) {
                (Top, _) | (_, Top) => Top,
                (Bottom, x) | (x, Bottom) => x,
                (Finite(x), Finite(y)) => self.canon(x + y - x * y),
            },
        }
    }

    /// Lattice negation a ↦ a*: involutive, swaps ⊥ and ⊤, and turns ⋆ into
    /// ⋆′ (De Morgan laws).
    pub fn conjugate(self, a: Scalar) -> Scalar {
        match (self, a) {
            (_, Scalar::Bottom) => Scalar::Top,
            (_, Scalar::Top) => Scalar::Bottom,
            (Clodum::MaxPlus, Scalar::Finite(v)) => Scalar::Finite(-v),
            (Clodum::MaxTimes, Scalar::Finite(v)) => self.canon(1.0 / v),
            (Clodum::MaxMin | Clodum::ProductTnorm, Scalar::Finite(v)) => self.canon(1.0 - v),
        }
    }

    /// Scalar adjoint erosion of ⋆: ⋆♯(a,w) = sup{v : a⋆v ≤ w}. Forms a
    /// scalar adjunction with ⋆, i.e. a⋆v ≤ w ⇔ v ≤ ⋆♯(a,w). For clogs this
    /// is a*⋆′w.
    pub fn adj_erosion(self, a: Scalar, w: Scalar) -> Scalar {
        use Scalar::*;
        match self {
            Clodum::MaxPlus | Clodum::MaxTimes => self.dual_mul(self.conjugate(a), w),
            Clodum::MaxMin => {
                if w.lt(a) {
                    w
                } else {
                    Top
                }
            }
            Clodum::ProductTnorm => match (a, w) {
                (Bottom, _) => Top,
                (_, Top) => Top,
                (Top, w) => w,
                (_, Bottom) => Bottom,
                (Finite(x), Finite(y)) => {
                    if y >= x {
                        Top
                    } else {
                        self.canon(y / x)
                    }
                }
            },
        }
    }

    /// Scalar adjoint dilation of ⋆′: (a,v) ↦ inf{w : a⋆′w ≥ v}. Forms the
    /// dual adjunction a⋆′w ≥ v ⇔ w ≥ adj_dilation(a,v). For clogs this is
    /// a*⋆v.
    pub fn adj_dilation(self, a: Scalar, v: Scalar) -> Scalar {
        use Scalar::*;
        match self {
            Clodum::MaxPlus | Clodum::MaxTimes => self.mul(self.conjugate(a), v),
            Clodum::MaxMin => {
                if v.total_cmp(&a) == Ordering::Greater {
                    v
                } else {
                    Bottom
                }
            }
            Clodum::ProductTnorm => match (a, v) {
                (Top, _) => Bottom,
                (_, Bottom) => Bottom,
                (Bottom, v) => v,
                (_, Top) => Top,
                (Finite(x), Finite(y)) => {
                    if y <= x {
                        Bottom
                    } else {
                        self.canon((y - x) / (1.0 - x))
                    }
                }
            },
        }
    }

    /// k-fold ⋆-root: the x with x⋆x⋆…⋆x (k times) = a. All four built-ins
    /// are radicable; for max-min the idempotence of min makes the root a
    /// itself.
    pub fn kth_root(self, a: Scalar, k: u32) -> Scalar {
        assert!(k >= 1, "kth_root requires k >= 1");
        match (self, a) {
            (_, Scalar::Bottom) => Scalar::Bottom,
            (_, Scalar::Top) => Scalar::Top,
            (Clodum::MaxPlus, Scalar::Finite(v)) => Scalar::Finite(v / k as f64),
            (Clodum::MaxTimes | Clodum::ProductTnorm, Scalar::Finite(v)) => {
                self.canon(v.powf(1.0 / k as f64))
            }
            (Clodum::MaxMin, s) => s,
        }
    }

    /// k-fold ⋆′-root, used by the dual (minimum cycle mean) eigenproblem.
    pub fn dual_kth_root(self, a: Scalar, k: u32) -> Scalar {
        assert!(k >= 1, "dual_kth_root requires k >= 1");
        match (self, a) {
            (_, Scalar::Bottom) => Scalar::Bottom,
            (_, Scalar::Top) => Scalar::Top,
            (Clodum::MaxPlus, Scalar::Finite(v)) => Scalar::Finite(v / k as f64),
            (Clodum::MaxTimes, Scalar::Finite(v)) => self.canon(v.powf(1.0 / k as f64)),
            (Clodum::MaxMin, s) => s,
            // x ⋆′ … ⋆′ x = 1−(1−x)^k = a  ⟹  x = 1−(1−a)^(1/k)
            (Clodum::ProductTnorm, Scalar::Finite(v)) => {
                self.canon(1.0 - (1.0 - v).powf(1.0 / k as f64))
            }
        }
    }

    /// Absolute-value seminorm μ(a) = a ∨ a*.
    pub fn seminorm(self, a: Scalar) -> Scalar {
        a.join(self.conjugate(a))
    }

    /// Parse the textual scalar format: decimal literals, "-inf", "+inf"
    /// (also plain "inf"), validated against the carrier.
    pub fn parse_scalar(self, token: &str) -> Result<Scalar> {
        let v = match token {
            "-inf" => f64::NEG_INFINITY,
            "+inf" | "inf" => f64::INFINITY,
            t => t
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("not a scalar literal: `{t}`")))?,
        };
        self.scalar(v)
    }

    /// Render a scalar in the textual format accepted by `parse_scalar`.
    /// Finite values round-trip exactly.
    pub fn format_scalar(self, s: Scalar) -> String {
        let v = self.to_f64(s);
        if v == f64::NEG_INFINITY {
            "-inf".to_string()
        } else if v == f64::INFINITY {
            "+inf".to_string()
        } else {
            format!("{v}")
        }
    }

    /// All built-in instances, in declaration order.
    pub fn all() -> [Clodum; 4] {
        [
            Clodum::MaxPlus,
            Clodum::MaxTimes,
            Clodum::MaxMin,
            Clodum::ProductTnorm,
        ]
    }
}

impl std::str::FromStr for Clodum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Clodum::from_name(s)
    }
}

impl fmt::Display for Clodum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Scalar::{Bottom, Finite, Top};

    const TOL: f64 = DEFAULT_TOLERANCE;

    #[test]
    fn max_plus_table_rows() {
        let c = Clodum::MaxPlus;
        let g = Finite(2.5);
        // ⋆ rows
        assert_eq!(c.mul(Bottom, Bottom), Bottom);
        assert_eq!(c.mul(Bottom, g), Bottom);
        assert_eq!(c.mul(Bottom, Top), Bottom);
        assert_eq!(c.mul(Top, Bottom), Bottom);
        assert_eq!(c.mul(Top, g), Top);
        assert_eq!(c.mul(Top, Top), Top);
        // ⋆′ rows
        assert_eq!(c.dual_mul(Bottom, Bottom), Bottom);
        assert_eq!(c.dual_mul(Bottom, g), Bottom);
        assert_eq!(c.dual_mul(Bottom, Top), Top);
        assert_eq!(c.dual_mul(Top, Bottom), Top);
        assert_eq!(c.dual_mul(Top, g), Top);
        assert_eq!(c.dual_mul(Top, Top), Top);
        // 3 ⋆ 5 = 8
        assert_eq!(c.mul(Finite(3.0), Finite(5.0)), Finite(8.0));
    }

    #[test]
    fn identities_and_nulls() {
        for c in Clodum::all() {
            for s in [Bottom, c.unit(), c.dual_unit(), Finite(0.5), Top] {
                if !matches!(c, Clodum::MaxPlus) && matches!(s, Finite(v) if !(0.0..=1.0).contains(&v))
                {
                    continue;
                }
                assert_eq!(c.mul(s, c.unit()), s, "{c}: a⋆e = a for {s}");
                assert_eq!(c.mul(s, Bottom), Bottom, "{c}: a⋆⊥ = ⊥ for {s}");
                assert_eq!(c.dual_mul(s, c.dual_unit()), s, "{c}: a⋆′e′ = a for {s}");
                assert_eq!(c.dual_mul(s, Top), Top, "{c}: a⋆′⊤ = ⊤ for {s}");
            }
        }
    }

    #[test]
    fn conjugation_golden() {
        assert_eq!(Clodum::MaxPlus.conjugate(Finite(3.0)), Finite(-3.0));
        assert_eq!(Clodum::MaxPlus.conjugate(Bottom), Top);
        assert_eq!(Clodum::MaxPlus.conjugate(Top), Bottom);
        assert!(Clodum::MaxMin
            .conjugate(Finite(0.3))
            .approx_eq(Finite(0.7), TOL));
        assert_eq!(Clodum::MaxTimes.conjugate(Finite(4.0)), Finite(0.25));
        // involutive
        for c in Clodum::all() {
            for s in [Bottom, Finite(0.3), Top] {
                assert!(c.conjugate(c.conjugate(s)).approx_eq(s, TOL));
            }
        }
    }

    #[test]
    fn adjoint_erosion_golden() {
        // max-plus: ⋆♯(3,5) = 2
        assert_eq!(
            Clodum::MaxPlus.adj_erosion(Finite(3.0), Finite(5.0)),
            Finite(2.0)
        );
        // max-min: ⋆♯(0.7, 0.4) = 0.4, ⋆♯(a,w) = 1 when w ≥ a
        assert_eq!(
            Clodum::MaxMin.adj_erosion(Finite(0.7), Finite(0.4)),
            Finite(0.4)
        );
        assert_eq!(Clodum::MaxMin.adj_erosion(Finite(0.3), Finite(0.4)), Top);
        // product t-norm: ⋆♯(0.5, 0.2) = 0.4
        assert!(Clodum::ProductTnorm
            .adj_erosion(Finite(0.5), Finite(0.2))
            .approx_eq(Finite(0.4), TOL));
    }

    #[test]
    fn min_boundary_is_identity() {
        let c = Clodum::MaxMin;
        for v in [0.0, 0.25, 0.5, 1.0] {
            let s = c.scalar(v).unwrap();
            assert_eq!(c.mul(s, Top), s); // min(a,1) = a
        }
    }

    /// Exhaustive adjunction check on the 0.1 grid of [0,1] under min.
    #[test]
    fn max_min_grid_adjunction() {
        let c = Clodum::MaxMin;
        let grid: Vec<Scalar> = (0..=10).map(|i| c.scalar(i as f64 / 10.0).unwrap()).collect();
        for &a in &grid {
            for &v in &grid {
                for &w in &grid {
                    let lhs = c.mul(a, v).le(w);
                    let rhs = v.le(c.adj_erosion(a, w));
                    assert_eq!(lhs, rhs, "a={a:?} v={v:?} w={w:?}");
                }
            }
        }
    }

    /// Adjunction laws at every sentinel/finite combination, all instances.
    #[test]
    fn adjunction_sentinel_corners() {
        for c in Clodum::all() {
            let samples = [Bottom, Finite(0.3), Finite(0.8), Top];
            for &a in &samples {
                for &v in &samples {
                    for &w in &samples {
                        let lhs = c.mul(a, v).le(w);
                        let rhs = v.le(c.adj_erosion(a, w));
                        assert_eq!(lhs, rhs, "{c}: erosion adjunction a={a:?} v={v:?} w={w:?}");
                        let dl = c.dual_mul(a, w).total_cmp(&v) != Ordering::Less;
                        let dr = w.total_cmp(&c.adj_dilation(a, v)) != Ordering::Less;
                        assert_eq!(dl, dr, "{c}: dilation adjunction a={a:?} v={v:?} w={w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn kth_root_round_trip() {
        for c in Clodum::all() {
            let a = if c == Clodum::MaxPlus {
                c.scalar(7.3).unwrap()
            } else {
                c.scalar(0.37).unwrap()
            };
            for k in 1..=6u32 {
                let r = c.kth_root(a, k);
                let mut acc = c.unit();
                for _ in 0..k {
                    acc = c.mul(acc, r);
                }
                assert!(acc.approx_eq(a, TOL), "{c}: k={k} got {acc:?} want {a:?}");
            }
        }
    }

    #[test]
    fn carrier_validation() {
        assert!(Clodum::MaxTimes.scalar(-1.0).is_err());
        assert!(Clodum::MaxMin.scalar(1.5).is_err());
        assert!(Clodum::MaxPlus.scalar(f64::NAN).is_err());
        assert_eq!(Clodum::MaxTimes.scalar(0.0).unwrap(), Bottom);
        assert_eq!(Clodum::MaxMin.scalar(1.0).unwrap(), Top);
        assert_eq!(Clodum::MaxPlus.scalar(f64::INFINITY).unwrap(), Top);
    }

    #[test]
    fn parse_and_format_round_trip() {
        let c = Clodum::MaxPlus;
        for tok in ["-inf", "+inf", "3.25", "-0.1", "0"] {
            let s = c.parse_scalar(tok).unwrap();
            let back = c.parse_scalar(&c.format_scalar(s)).unwrap();
            assert_eq!(s, back);
        }
        assert!(c.parse_scalar("abc").is_err());
        assert!(Clodum::from_name("max-plus").is_ok());
        assert!(Clodum::from_name("min-plus").is_err());
    }
}
