use serde::{Serialize, Serializer};

use super::BilinearForm;
use crate::error::{Error, Result};
use crate::scalar::{GroupValue, Scalar};
use crate::vector::Vector;

/// Set of ν-values `β` for which `w = v₁ + β v₂` is g-isotropic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StripResult {
    /// Closed interval; a missing bound is unbounded on that side.
    Interval {
        #[serde(serialize_with = "lower_bound")]
        lo: Option<GroupValue>,
        #[serde(serialize_with = "upper_bound")]
        hi: Option<GroupValue>,
    },
    Point { at: GroupValue },
    /// Every `β` works.
    All,
    Empty { note: String },
}

fn lower_bound<S: Serializer>(b: &Option<GroupValue>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match b {
        Some(g) => ser.serialize_str(&g.to_string()),
        None => ser.serialize_str("-inf"),
    }
}

fn upper_bound<S: Serializer>(b: &Option<GroupValue>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match b {
        Some(g) => ser.serialize_str(&g.to_string()),
        None => ser.serialize_str("inf"),
    }
}

impl StripResult {
    pub fn contains(&self, beta: GroupValue) -> bool {
        match self {
            StripResult::Interval { lo, hi } => {
                lo.is_none_or(|lo| lo <= beta) && hi.is_none_or(|hi| beta <= hi)
            }
            StripResult::Point { at } => *at == beta,
            StripResult::All => true,
            StripResult::Empty { .. } => false,
        }
    }

    /// Both finite endpoints and one interior point (or the point itself).
    pub fn samples(&self) -> Vec<GroupValue> {
        let one = GroupValue::from_int(1);
        match self {
            StripResult::Interval { lo, hi } => match (*lo, *hi) {
                (Some(lo), Some(hi)) => vec![lo, lo.midpoint(hi), hi],
                (None, Some(hi)) => vec![hi - one, hi],
                (Some(lo), None) => vec![lo, lo + one],
                (None, None) => vec![GroupValue::ZERO],
            },
            StripResult::Point { at } => vec![*at],
            StripResult::All => vec![GroupValue::from_int(-1), GroupValue::ZERO, one],
            StripResult::Empty { .. } => Vec::new(),
        }
    }

    fn reflect(self) -> Self {
        match self {
            StripResult::Interval { lo, hi } => StripResult::Interval {
                lo: hi.map(|h| -h),
                hi: lo.map(|l| -l),
            },
            StripResult::Point { at } => StripResult::Point { at: -at },
            other => other,
        }
    }
}

/// `v₁ + β v₂` for tangible `β`.
pub(crate) fn strip_vector(v1: &Vector, v2: &Vector, beta: GroupValue) -> Result<Vector> {
    v1.add(&v2.scale(Scalar::Tangible(beta)))
}

/// The g-isotropic strip of the pair `(v₁, v₂)` under a supertropically
/// symmetric form.
pub fn isotropic_strip(form: &BilinearForm, v1: &Vector, v2: &Vector) -> Result<StripResult> {
    form.require_symmetric("the isotropic strip")?;
    let a11 = form.norm(v1)?;
    let a22 = form.norm(v2)?;
    let alpha = form.eval(v1, v2)? + form.eval(v2, v1)?;
    let result = if a11.nu_cmp(a22).is_gt() {
        strip_ordered(a22, alpha, a11).reflect()
    } else {
        strip_ordered(a11, alpha, a22)
    };
    for beta in result.samples() {
        let w = strip_vector(v1, v2, beta)?;
        let q = form.norm(&w)?;
        if !q.is_ghost_or_zero() {
            return Err(Error::Domain(format!(
                "strip sample β = {beta} gives ⟨w,w⟩ = {q}, which is not in G₀"
            )));
        }
    }
    Ok(result)
}

/// Strip for `α₁₁ ≤_ν α₂₂`.
fn strip_ordered(a11: Scalar, alpha: Scalar, a22: Scalar) -> StripResult {
    let Some(n22) = a22.nu_value() else {
        return if alpha.is_zero() {
            StripResult::Empty {
                note: "all Gram entries vanish; the pair spans a degenerate plane".into(),
            }
        } else {
            StripResult::All
        };
    };
    match alpha.nu_value() {
        Some(na) if alpha.square().nu_cmp(a11 * a22).is_gt() => StripResult::Interval {
            lo: a11.nu_value().map(|n11| n11 - na),
            hi: Some(na - n22),
        },
        _ => match a11.nu_value() {
            Some(n11) => StripResult::Point {
                at: GroupValue((n11 - n22).rational() / num_rational::Ratio::from_integer(2)),
            },
            None if a22.is_ghost() => StripResult::All,
            None => StripResult::Empty {
                note: "v1 lies in the radical of the pair; only β = -inf is isotropic".into(),
            },
        },
    }
}
