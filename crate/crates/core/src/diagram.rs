//! Regions of a labelled Lagrangian diagram, formal capping surfaces, and
//! the grading period `2 r(S) + 2μ n(S)` they determine.
//!
//! Regions are labels carrying a defect and a rotation; their geometry is
//! not modelled.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{Integer, Rational};
use crate::grading::{Grading, GradingPeriod};
use crate::{Error, Result};

/// A defect `constant + beta_over_alpha·(β/α)`, with `β/α` kept formal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "T: Integer", from = "DefectRepr<T>")]
pub struct Defect<T = i64> {
    pub constant: Rational<T>,
    pub beta_over_alpha: Rational<T>,
}

impl<T: Integer> Defect<T> {
    pub fn zero() -> Self {
        Defect {
            constant: Rational::zero(),
            beta_over_alpha: Rational::zero(),
        }
    }

    pub fn plain(q: Rational<T>) -> Self {
        Defect {
            constant: q,
            beta_over_alpha: Rational::zero(),
        }
    }

    /// `k·β/α`.
    pub fn formal(k: Rational<T>) -> Self {
        Defect {
            constant: Rational::zero(),
            beta_over_alpha: k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.beta_over_alpha.is_zero()
    }

    fn weighted_add(&self, c: &Rational<T>, other: &Defect<T>) -> Defect<T> {
        Defect {
            constant: &self.constant + &(c * &other.constant),
            beta_over_alpha: &self.beta_over_alpha + &(c * &other.beta_over_alpha),
        }
    }
}

impl<T: Integer> fmt::Display for Defect<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.constant.is_zero(), self.beta_over_alpha.is_zero()) {
            (_, true) => write!(f, "{}", self.constant),
            (true, false) => write!(f, "{}·β/α", self.beta_over_alpha),
            (false, false) => write!(f, "{} + {}·β/α", self.constant, self.beta_over_alpha),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged, bound = "T: Integer")]
enum DefectRepr<T: Integer> {
    Plain(Rational<T>),
    Formal {
        #[serde(default = "Rational::zero")]
        constant: Rational<T>,
        #[serde(default = "Rational::zero")]
        beta_over_alpha: Rational<T>,
    },
}

impl<T: Integer> From<DefectRepr<T>> for Defect<T> {
    fn from(r: DefectRepr<T>) -> Self {
        match r {
            DefectRepr::Plain(q) => Defect::plain(q),
            DefectRepr::Formal {
                constant,
                beta_over_alpha,
            } => Defect {
                constant,
                beta_over_alpha,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer")]
pub struct Region<T = i64> {
    pub id: String,
    pub defect: Defect<T>,
    pub rotation: Rational<T>,
}

/// Integer weight per region; regions not listed carry weight zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CappingSurface<T = i64> {
    pub coefficients: BTreeMap<String, T>,
}

impl<T: Integer> CappingSurface<T> {
    pub fn new<I, S>(coefficients: I) -> Self
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
    {
        CappingSurface {
            coefficients: coefficients
                .into_iter()
                .map(|(k, v)| (k.into(), v))
                .collect(),
        }
    }
}

/// Defect and rotation of a capping surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct CappingTotals<T = i64> {
    pub defect: Defect<T>,
    pub rotation: Rational<T>,
}

/// `n(S) = Σ c_j n(R_j)` and `r(S) = Σ c_j r(R_j)`.
pub fn capping_defect_and_rotation<T: Integer>(
    surface: &CappingSurface<T>,
    regions: &[Region<T>],
) -> Result<CappingTotals<T>> {
    let mut by_id = BTreeMap::new();
    for r in regions {
        if by_id.insert(r.id.as_str(), r).is_some() {
            return Err(Error::InvalidDiagram(format!(
                "duplicate region id {:?}",
                r.id
            )));
        }
    }
    let mut defect = Defect::zero();
    let mut rotation = Rational::zero();
    for (id, c) in &surface.coefficients {
        let region = by_id
            .get(id.as_str())
            .ok_or_else(|| Error::IndexMismatch(id.clone()))?;
        let c = Rational::from_integer(c.clone());
        defect = defect.weighted_add(&c, &region.defect);
        rotation = &rotation + &(&c * &region.rotation);
    }
    Ok(CappingTotals { defect, rotation })
}

/// The period `2 r(S) + 2μ n(S)`: the plain part of the defect lands on
/// `μ`, the `β/α` part on `μβ/α`.
pub fn grading_period<T: Integer>(defect: &Defect<T>, rotation: &Rational<T>) -> GradingPeriod<T> {
    let two = Rational::int(2);
    GradingPeriod::new(Grading::new(
        &two * rotation,
        &two * &defect.constant,
        &two * &defect.beta_over_alpha,
    ))
}

/// A diagram file: regions plus one capping surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer + Serialize + serde::de::DeserializeOwned")]
pub struct Diagram<T = i64> {
    pub regions: Vec<Region<T>>,
    pub capping: Vec<CappingEntry<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Integer + Serialize + serde::de::DeserializeOwned")]
pub struct CappingEntry<T = i64> {
    pub region: String,
    pub coefficient: T,
}

impl<T: Integer> Diagram<T> {
    pub fn capping_surface(&self) -> Result<CappingSurface<T>> {
        let mut seen = BTreeSet::new();
        for e in &self.capping {
            if !seen.insert(e.region.as_str()) {
                return Err(Error::InvalidDiagram(format!(
                    "region {:?} listed twice in capping surface",
                    e.region
                )));
            }
        }
        Ok(CappingSurface::new(
            self.capping
                .iter()
                .map(|e| (e.region.clone(), e.coefficient.clone())),
        ))
    }

    pub fn totals(&self) -> Result<CappingTotals<T>> {
        capping_defect_and_rotation(&self.capping_surface()?, &self.regions)
    }

    pub fn period(&self) -> Result<GradingPeriod<T>> {
        let t = self.totals()?;
        Ok(grading_period(&t.defect, &t.rotation))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = Rational<i64>;

    fn region(id: &str, defect: Defect<i64>, rotation: Q) -> Region<i64> {
        Region {
            id: id.into(),
            defect,
            rotation,
        }
    }

    #[test]
    fn zero_capping() {
        let regions = vec![region("R1", Defect::formal(Q::int(1)), Q::int(2))];
        let t =
            capping_defect_and_rotation(&CappingSurface::new([("R1", 0i64)]), &regions).unwrap();
        assert!(t.defect.is_zero());
        assert!(t.rotation.is_zero());
        assert!(grading_period(&t.defect, &t.rotation).is_zero());
    }

    #[test]
    fn single_formal_defect() {
        let regions = vec![region("R2", Defect::formal(Q::int(1)), Q::int(0))];
        let t =
            capping_defect_and_rotation(&CappingSurface::new([("R2", 1i64)]), &regions).unwrap();
        assert_eq!(t.defect, Defect::formal(Q::int(1)));
        assert_eq!(
            grading_period(&t.defect, &t.rotation),
            GradingPeriod::new(Grading::ints(0, 0, 2))
        );
    }

    #[test]
    fn plain_weighted_sum() {
        let regions = vec![
            region("A", Defect::plain(Q::from_i64(1, 2)), Q::int(0)),
            region("B", Defect::plain(Q::from_i64(1, 3)), Q::int(0)),
        ];
        let s = CappingSurface::new([("A", 2i64), ("B", -1)]);
        let t = capping_defect_and_rotation(&s, &regions).unwrap();
        assert_eq!(t.defect, Defect::plain(Q::from_i64(2, 3)));
    }

    #[test]
    fn pure_rotation_period() {
        let p = grading_period(&Defect::<i64>::zero(), &Q::int(3));
        assert_eq!(p, GradingPeriod::new(Grading::ints(6, 0, 0)));
    }

    #[test]
    fn unknown_region_is_an_error() {
        let regions = vec![region("A", Defect::zero(), Q::int(0))];
        let s = CappingSurface::new([("Z", 1i64)]);
        assert_eq!(
            capping_defect_and_rotation(&s, &regions),
            Err(Error::IndexMismatch("Z".into()))
        );
    }

    #[test]
    fn diagram_json() {
        let text = r#"{
            "regions": [
                {"id": "R1", "defect": "0", "rotation": "0"},
                {"id": "R2", "defect": {"beta_over_alpha": "1"}, "rotation": 0}
            ],
            "capping": [{"region": "R1", "coefficient": 1}, {"region": "R2", "coefficient": 1}]
        }"#;
        let d: Diagram<i64> = serde_json::from_str(text).unwrap();
        assert_eq!(
            d.period().unwrap(),
            GradingPeriod::new(Grading::ints(0, 0, 2))
        );

        let dup = r#"{"regions": [{"id": "R1", "defect": "0", "rotation": "0"}],
            "capping": [{"region": "R1", "coefficient": 1}, {"region": "R1", "coefficient": 2}]}"#;
        let d: Diagram<i64> = serde_json::from_str(dup).unwrap();
        assert!(matches!(d.period(), Err(Error::InvalidDiagram(_))));
    }

    fn regions_strategy() -> impl Strategy<Value = Vec<Region<i64>>> {
        proptest::collection::vec((-6i64..6, -6i64..6, 1i64..4, -6i64..6), 1..5).prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(i, (c, k, d, r))| {
                    region(
                        &format!("R{i}"),
                        Defect {
                            constant: Q::new(c, d).unwrap(),
                            beta_over_alpha: Q::int(k),
                        },
                        Q::int(r),
                    )
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn totals_are_linear(
            regions in regions_strategy(),
            w1 in proptest::collection::vec(-5i64..5, 5),
            w2 in proptest::collection::vec(-5i64..5, 5),
        ) {
            let surf = |w: &[i64]| CappingSurface::new(
                regions.iter().zip(w).map(|(r, c)| (r.id.clone(), *c)),
            );
            let sum: Vec<i64> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
            let t1 = capping_defect_and_rotation(&surf(&w1), &regions).unwrap();
            let t2 = capping_defect_and_rotation(&surf(&w2), &regions).unwrap();
            let t = capping_defect_and_rotation(&surf(&sum), &regions).unwrap();
            prop_assert_eq!(&t.rotation, &(t1.rotation + t2.rotation));
            prop_assert_eq!(&t.defect.constant, &(t1.defect.constant + t2.defect.constant));
            prop_assert_eq!(
                &t.defect.beta_over_alpha,
                &(t1.defect.beta_over_alpha + t2.defect.beta_over_alpha)
            );
        }

        #[test]
        fn zero_period_is_identity(c0 in -9i64..9, c1 in -9i64..9, c2 in -9i64..9) {
            let p = grading_period(&Defect::<i64>::zero(), &Q::int(0));
            let g = Grading::ints(c0, c1, c2);
            prop_assert_eq!(g.canonicalize(&p), g);
        }
    }
}
