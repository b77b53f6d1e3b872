//! Surgery presentations of knots and the rational classical invariants of
//! the knot in the surgered manifold.
//!
//! A presentation is a knot `K` in `S³` together with a surgery link
//! `L_1, ..., L_n` with topological coefficients `α_i/β_i` (measured against
//! the Seifert longitude) and rotation numbers `rot_i`. With
//! `Q_ii = α_i`, `Q_ij = β_j lk(L_i, L_j)` and `l_i = lk(K, L_i)`, let `o` be
//! the least positive integer with `o·l = Q a` for an integer vector `a`. Then
//!
//! ```text
//! tb_Q  = tb  - (1/o) Σ a_i β_i l_i
//! rot_Q = rot - (1/o) Σ a_i β_i rot_i
//! sl_Q  = sl  - (1/o) Σ a_i β_i (l_i ∓ rot_i)
//! ```
//!
//! where `∓` is `-` for the positive transverse push-off. `rot_Q` and `sl_Q`
//! are relative to the rational Seifert class singled out by `a`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{solve_order_system, IntMatrix, Integer, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct SurgeryComponent<T = i64> {
    pub alpha: T,
    pub beta: T,
    pub rot: T,
}

/// The knot's linking numbers with the surgery link and its classical
/// invariants in `S³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct KnotData<T = i64> {
    pub lk: Vec<T>,
    pub tb: T,
    pub rot: T,
    pub sl: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    bound(
        serialize = "T: Integer + Serialize",
        deserialize = "T: Integer + Deserialize<'de>"
    ),
    try_from = "RawPresentation<T>"
)]
pub struct SurgeryPresentation<T = i64> {
    components: Vec<SurgeryComponent<T>>,
    linking: Vec<Vec<T>>,
    knot: KnotData<T>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation<T> {
    components: Vec<SurgeryComponent<T>>,
    #[serde(default = "Vec::new")]
    linking: Vec<Vec<T>>,
    knot: KnotData<T>,
}

impl<T: Integer> TryFrom<RawPresentation<T>> for SurgeryPresentation<T> {
    type Error = Error;
    fn try_from(r: RawPresentation<T>) -> Result<Self> {
        SurgeryPresentation::new(r.components, r.linking, r.knot)
    }
}

impl<T: Integer> SurgeryPresentation<T> {
    /// Validates coprime coefficients and a symmetric, zero-diagonal linking
    /// matrix matching the component count. An empty `linking` is read as
    /// all zeros.
    pub fn new(
        components: Vec<SurgeryComponent<T>>,
        linking: Vec<Vec<T>>,
        knot: KnotData<T>,
    ) -> Result<Self> {
        let n = components.len();
        let linking = if linking.is_empty() {
            vec![vec![T::zero(); n]; n]
        } else {
            linking
        };
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        for (i, c) in components.iter().enumerate() {
            if !c.alpha.gcd(&c.beta).is_one() {
                return bad(format!(
                    "component {i}: gcd({}, {}) is not 1",
                    c.alpha, c.beta
                ));
            }
        }
        if linking.len() != n || linking.iter().any(|r| r.len() != n) {
            return bad(format!("linking matrix must be {n}x{n}"));
        }
        for i in 0..n {
            if !linking[i][i].is_zero() {
                return bad(format!("linking matrix diagonal entry {i} is not zero"));
            }
            for j in 0..i {
                if linking[i][j] != linking[j][i] {
                    return bad(format!("linking matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        if knot.lk.len() != n {
            return bad(format!(
                "knot has {} linking numbers for {n} components",
                knot.lk.len()
            ));
        }
        Ok(SurgeryPresentation {
            components,
            linking,
            knot,
        })
    }

    /// Knot in `S³` with no surgery.
    pub fn unsurgered(tb: T, rot: T, sl: T) -> Self {
        SurgeryPresentation {
            components: Vec::new(),
            linking: Vec::new(),
            knot: KnotData {
                lk: Vec::new(),
                tb,
                rot,
                sl,
            },
        }
    }

    pub fn components(&self) -> &[SurgeryComponent<T>] {
        &self.components
    }

    pub fn linking(&self) -> &[Vec<T>] {
        &self.linking
    }

    pub fn knot(&self) -> &KnotData<T> {
        &self.knot
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Which transverse push-off the self-linking number refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PushoffSign {
    #[serde(rename = "pos")]
    Positive,
    #[serde(rename = "neg")]
    Negative,
}

impl PushoffSign {
    pub fn sign(self) -> i64 {
        match self {
            PushoffSign::Positive => 1,
            PushoffSign::Negative => -1,
        }
    }

    /// `tb ∓ rot` for this push-off.
    pub fn self_linking<T: Integer>(self, tb: &Rational<T>, rot: &Rational<T>) -> Rational<T> {
        match self {
            PushoffSign::Positive => tb - rot,
            PushoffSign::Negative => tb + rot,
        }
    }
}

impl FromStr for PushoffSign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pos" | "+" | "positive" => Ok(PushoffSign::Positive),
            "neg" | "-" | "negative" => Ok(PushoffSign::Negative),
            _ => Err(format!("expected pos or neg, got {s:?}")),
        }
    }
}

impl fmt::Display for PushoffSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PushoffSign::Positive => "pos",
            PushoffSign::Negative => "neg",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer + Serialize")]
pub struct RationalInvariants<T = i64> {
    pub order: T,
    /// Lattice witness `a` with `Q a = o l`.
    pub coefficients: Vec<T>,
    pub tb_q: Rational<T>,
    pub rot_q: Rational<T>,
    pub sl_q: Rational<T>,
}

/// `Q_ii = α_i`, `Q_ij = β_j l_ij`.
pub fn build_q<T: Integer>(p: &SurgeryPresentation<T>) -> Result<IntMatrix<T>> {
    let n = p.len();
    let mut q = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                p.components[i].alpha.clone()
            } else {
                p.linking[i][j]
                    .checked_mul(&p.components[j].beta)
                    .ok_or(Error::Overflow)?
            };
            q.set(i, j, v);
        }
    }
    Ok(q)
}

pub fn transform_invariants<T: Integer>(
    p: &SurgeryPresentation<T>,
    pushoff: PushoffSign,
) -> Result<RationalInvariants<T>> {
    let q = build_q(p)?;
    let sol = solve_order_system(&q, &p.knot.lk)?;
    let mut tb_corr = Rational::<T>::zero();
    let mut rot_corr = Rational::<T>::zero();
    for ((a, c), l) in sol.coefficients.iter().zip(&p.components).zip(&p.knot.lk) {
        let ab = Rational::from_integer(a.clone()).checked_mul_int(&c.beta)?;
        tb_corr = tb_corr.checked_add(&ab.checked_mul_int(l)?)?;
        rot_corr = rot_corr.checked_add(&ab.checked_mul_int(&c.rot)?)?;
    }
    let inv_o = Rational::new(T::one(), sol.order.clone())?;
    let tb_corr = tb_corr.checked_mul(&inv_o)?;
    let rot_corr = rot_corr.checked_mul(&inv_o)?;
    // Σ a β (l ∓ rot) = tb_corr ∓ rot_corr
    let sl_corr = pushoff.self_linking(&tb_corr, &rot_corr);

    let int = |x: &T| Rational::from_integer(x.clone());
    Ok(RationalInvariants {
        tb_q: int(&p.knot.tb).checked_sub(&tb_corr)?,
        rot_q: int(&p.knot.rot).checked_sub(&rot_corr)?,
        sl_q: int(&p.knot.sl).checked_sub(&sl_corr)?,
        order: sol.order,
        coefficients: sol.coefficients,
    })
}

/// Converts a contact surgery coefficient to the topological one for a
/// Legendrian with Thurston–Bennequin number `tb`.
pub fn contact_to_topological<T: Integer>(contact: &Rational<T>, tb: &T) -> Rational<T> {
    contact + &Rational::from_integer(tb.clone())
}

/// Seifert invariants `(g, b; (α_1, β_1), ..., (α_r, β_r))` with `α_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer + Serialize")]
pub struct SeifertInvariants<T = i64> {
    genus: u64,
    b: T,
    pairs: Vec<(T, T)>,
}

impl<T: Integer> SeifertInvariants<T> {
    pub fn new(genus: u64, b: T, pairs: Vec<(T, T)>) -> Result<Self> {
        if let Some((a, _)) = pairs.iter().find(|(a, _)| !a.is_positive()) {
            return Err(Error::InvalidSeifert(format!(
                "alpha must be positive, got {a}"
            )));
        }
        Ok(SeifertInvariants { genus, b, pairs })
    }

    /// Seifert invariants of `L(α, β)`: `(0, 1; (α, β))`.
    pub fn lens_space(alpha: T, beta: T) -> Result<Self> {
        Self::new(0, T::one(), vec![(alpha, beta)])
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }
}

/// Parses `g,b,α1/β1,α2/β2,...`.
impl<T: Integer> FromStr for SeifertInvariants<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidSeifert(format!("{what} in {s:?}"));
        let mut parts = s.split(',').map(str::trim);
        let genus = parts
            .next()
            .and_then(|g| g.parse::<u64>().ok())
            .ok_or_else(|| bad("bad genus"))?;
        let b = parts
            .next()
            .and_then(|b| b.parse::<T>().ok())
            .ok_or_else(|| bad("bad b"))?;
        let pairs = parts
            .map(|p| {
                let (a, b) = p
                    .split_once('/')
                    .ok_or_else(|| bad("expected alpha/beta"))?;
                let a = a.trim().parse::<T>().map_err(|_| bad("bad alpha"))?;
                let b = b.trim().parse::<T>().map_err(|_| bad("bad beta"))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(genus, b, pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct EulerNumber<T = i64> {
    pub value: Rational<T>,
    /// An `S¹`-invariant transverse contact form exists iff this holds.
    pub negative: bool,
}

/// `e(M) = -b - Σ β_i/α_i`.
pub fn euler_number<T: Integer>(s: &SeifertInvariants<T>) -> Result<EulerNumber<T>> {
    let mut e = Rational::from_integer(s.b.clone()).checked_neg()?;
    for (a, b) in &s.pairs {
        e = e.checked_sub(&Rational::new(b.clone(), a.clone())?)?;
    }
    Ok(EulerNumber {
        negative: e.is_negative(),
        value: e,
    })
}
