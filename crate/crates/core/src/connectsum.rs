//! Orders and rational classical invariants under connected sum, plus an
//! oracle that recomputes a connected sum from the disjoint union of two
//! surgery presentations.

use serde::Serialize;

use crate::exact::{checked_lcm, Integer, Rational};
use crate::surgery::{
    build_q, transform_invariants, KnotData, PushoffSign, RationalInvariants, SurgeryPresentation,
};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer + Serialize")]
pub struct SummandInvariants<T = i64> {
    pub order: T,
    pub tb_q: Rational<T>,
    pub rot_q: Rational<T>,
    pub sl_q: Rational<T>,
}

impl<T: Integer> From<RationalInvariants<T>> for SummandInvariants<T> {
    fn from(r: RationalInvariants<T>) -> Self {
        SummandInvariants {
            order: r.order,
            tb_q: r.tb_q,
            rot_q: r.rot_q,
            sl_q: r.sl_q,
        }
    }
}

/// `o(K1 # K2) = lcm(o(K1), o(K2))`.
pub fn connect_order<T: Integer>(o1: &T, o2: &T) -> Result<T> {
    checked_lcm(o1, o2)
}

/// `tb_Q(L1 # L2) = tb_Q(L1) + tb_Q(L2) + 1`; the same shift holds for `sl_Q`.
pub fn connect_tb<T: Integer>(x: &Rational<T>, y: &Rational<T>) -> Rational<T> {
    &(x + y) + &Rational::int(1)
}

/// Rotation numbers add, for Seifert surfaces glued as `Σ1 # Σ2`.
pub fn connect_rot<T: Integer>(x: &Rational<T>, y: &Rational<T>) -> Rational<T> {
    x + y
}

pub fn connect_invariants<T: Integer>(
    x: &SummandInvariants<T>,
    y: &SummandInvariants<T>,
) -> Result<SummandInvariants<T>> {
    Ok(SummandInvariants {
        order: connect_order(&x.order, &y.order)?,
        tb_q: connect_tb(&x.tb_q, &y.tb_q),
        rot_q: connect_rot(&x.rot_q, &y.rot_q),
        sl_q: connect_tb(&x.sl_q, &y.sl_q),
    })
}

/// Presentation of `K1 # K2` in `M1 # M2`: the two surgery links side by
/// side, unlinked from each other, with the `S³` invariants of the knot
/// combined as `tb + 1`, `rot` additive, `sl + 1`.
pub fn disjoint_union<T: Integer>(
    p1: &SurgeryPresentation<T>,
    p2: &SurgeryPresentation<T>,
) -> Result<SurgeryPresentation<T>> {
    let (n1, n2) = (p1.len(), p2.len());
    let mut linking = vec![vec![T::zero(); n1 + n2]; n1 + n2];
    for (i, row) in p1.linking().iter().enumerate() {
        linking[i][..n1].clone_from_slice(row);
    }
    for (i, row) in p2.linking().iter().enumerate() {
        linking[n1 + i][n1..].clone_from_slice(row);
    }
    let (k1, k2) = (p1.knot(), p2.knot());
    let one = T::one();
    let add = |a: &T, b: &T| a.checked_add(b).ok_or(crate::Error::Overflow);
    let knot = KnotData {
        lk: k1.lk.iter().chain(&k2.lk).cloned().collect(),
        tb: add(&add(&k1.tb, &k2.tb)?, &one)?,
        rot: add(&k1.rot, &k2.rot)?,
        sl: add(&add(&k1.sl, &k2.sl)?, &one)?,
    };
    SurgeryPresentation::new(
        p1.components()
            .iter()
            .chain(p2.components())
            .cloned()
            .collect(),
        linking,
        knot,
    )
}

/// Both computation routes for a connected sum and their comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer + Serialize")]
pub struct OracleReport<T = i64> {
    pub pushoff: PushoffSign,
    pub summands: [SummandInvariants<T>; 2],
    /// Connect-sum formulas applied to the per-summand results.
    pub formula: SummandInvariants<T>,
    /// Surgery formulas applied to the combined presentation.
    pub surgery: SummandInvariants<T>,
    /// For invertible `Q1`, `Q2`: whether the combined witness equals
    /// `((o/o1) a1, (o/o2) a2)`. `None` when a block is singular.
    pub coefficient_split: Option<bool>,
    pub pass: bool,
}

pub fn oracle_check<T: Integer>(
    p1: &SurgeryPresentation<T>,
    p2: &SurgeryPresentation<T>,
    pushoff: PushoffSign,
) -> Result<OracleReport<T>> {
    let r1 = transform_invariants(p1, pushoff)?;
    let r2 = transform_invariants(p2, pushoff)?;
    let combined = transform_invariants(&disjoint_union(p1, p2)?, pushoff)?;

    let invertible =
        |p: &SurgeryPresentation<T>| -> Result<bool> { Ok(!build_q(p)?.determinant()?.is_zero()) };
    let coefficient_split = if invertible(p1)? && invertible(p2)? {
        let o = &combined.order;
        let scale = |a: &[T], oi: &T| -> Vec<T> {
            let f = o.clone() / oi.clone();
            a.iter().map(|x| x.clone() * f.clone()).collect()
        };
        let mut expected = scale(&r1.coefficients, &r1.order);
        expected.extend(scale(&r2.coefficients, &r2.order));
        Some(expected == combined.coefficients)
    } else {
        None
    };

    let s1 = SummandInvariants::from(r1);
    let s2 = SummandInvariants::from(r2);
    let formula = connect_invariants(&s1, &s2)?;
    let surgery = SummandInvariants::from(combined);
    let pass = formula == surgery && coefficient_split != Some(false);
    Ok(OracleReport {
        pushoff,
        summands: [s1, s2],
        formula,
        surgery,
        coefficient_split,
        pass,
    })
}
