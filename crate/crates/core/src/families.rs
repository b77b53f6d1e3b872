//! The two Legendrian twist-knot families `Λ(l, n−l)` (prime) and
//! `Λ'(l, n−l)` (a connected sum with a fiber) in `L(α, β)`: generators and
//! gradings, differentials, closed-form Poincaré polynomials, classical
//! invariants and the classification atlas.
//!
//! Crossing labels for `n` twists: `1, 2` at the clasp, `3..=n+3` at the
//! tear drops and `n+4..=2n+3` in the twist region. Each label carries an
//! `a` and a `b` generator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::dga::{self, Augmentation, Dga, Generator, LinearComplex};
use crate::exact::{Integer, Rational, Word, WordSum};
use crate::grading::{Grading, GradingPeriod, PoincarePolynomial};
use crate::surgery::{KnotData, SurgeryComponent, SurgeryPresentation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `Λ(l, n−l)`, gradings well defined in `Z`.
    #[serde(rename = "prime")]
    PrimeTwist,
    /// `Λ'(l, n−l) = E(l, n−l) # F`, gradings modulo `2μβ/α`.
    #[serde(rename = "ls")]
    LsTwist,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" => Ok(FamilyKind::PrimeTwist),
            "ls" => Ok(FamilyKind::LsTwist),
            _ => Err(Error::InvalidFamily(format!(
                "unknown family {s:?}, expected prime or ls"
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::PrimeTwist => "prime",
            FamilyKind::LsTwist => "ls",
        })
    }
}

/// `L(α, β)` with `0 < β < α` coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Lens {
    alpha: i64,
    beta: i64,
}

impl Lens {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if !(0 < beta && beta < alpha) {
            return Err(Error::InvalidFamily(format!(
                "need 0 < β < α, got L({alpha}, {beta})"
            )));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::InvalidFamily(format!(
                "α = {alpha} and β = {beta} are not coprime"
            )));
        }
        Ok(Lens { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn beta_over_alpha<T: Integer>(&self) -> Rational<T> {
        Rational::from_i64(self.beta, self.alpha)
    }

    pub fn alpha_over_beta<T: Integer>(&self) -> Rational<T> {
        Rational::from_i64(self.alpha, self.beta)
    }
}

impl TryFrom<(i64, i64)> for Lens {
    type Error = Error;
    fn try_from((a, b): (i64, i64)) -> Result<Self> {
        Lens::new(a, b)
    }
}

impl From<Lens> for (i64, i64) {
    fn from(l: Lens) -> Self {
        (l.alpha, l.beta)
    }
}

/// Parses `A/B`.
impl FromStr for Lens {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("lens space must be written A/B, got {s:?}"));
        let (a, b) = s.split_once('/').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Lens::new(a, b)
    }
}

impl fmt::Display for Lens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: u32,
    pub l: u32,
    pub lens: Lens,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: u32, l: u32, lens: Lens) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidFamily(format!("need n ≥ 3, got {n}")));
        }
        if l < 1 || l >= n {
            return Err(Error::InvalidFamily(format!(
                "need 1 ≤ l ≤ {}, got {l}",
                n - 1
            )));
        }
        Ok(FamilySpec { kind, n, l, lens })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingLabels {
    pub clasp: [u32; 2],
    pub teardrop: RangeInclusive<u32>,
    pub twist: RangeInclusive<u32>,
}

impl CrossingLabels {
    pub fn new(n: u32) -> Self {
        CrossingLabels {
            clasp: [1, 2],
            teardrop: 3..=n + 3,
            twist: n + 4..=2 * n + 3,
        }
    }

    /// `2n + 3`, i.e. `4k+5` for `n = 2k+1` and `4k+3` for `n = 2k`.
    pub fn count(&self) -> u32 {
        *self.twist.end()
    }
}

/// Gradings of the four clasp generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct ClaspGradings<T = i64> {
    pub a1: Grading<T>,
    pub b1: Grading<T>,
    pub a2: Grading<T>,
    pub b2: Grading<T>,
}

impl<T: Integer> ClaspGradings<T> {
    pub fn to_vec(&self) -> Vec<Grading<T>> {
        vec![
            self.a1.clone(),
            self.b1.clone(),
            self.a2.clone(),
            self.b2.clone(),
        ]
    }
}

/// The l-dependent gradings, with `k = ⌊n/2⌋`. These do not depend on the
/// lens space since `μ` and `β/α` are formal.
pub fn clasp_gradings<T: Integer>(kind: FamilyKind, n: u32, l: u32) -> ClaspGradings<T> {
    let k = i64::from(n / 2);
    let l = i64::from(l);
    let d = 2 * k - 2 * l;
    let g = Grading::ints;
    let (odd, prime) = (n % 2 == 1, kind == FamilyKind::PrimeTwist);
    let [a1, b1, a2, b2] = match (odd, prime) {
        (true, true) => [
            g(d + 5, 0, 0),
            g(-d + 6, 2, 0),
            g(-d - 3, 2, -2),
            g(d + 2, 0, 2),
        ],
        (false, true) => [
            g(-d - 1, 0, -2),
            g(d, 2, 2),
            g(d + 1, 0, 2),
            g(-d - 2, 2, -2),
        ],
        (true, false) => [
            g(d + 5, 0, 0),
            g(-d + 6, 2, 0),
            g(-d - 3, 2, 0),
            g(d + 2, 0, 0),
        ],
        (false, false) => [g(-d - 1, 0, 0), g(d, 2, 0), g(d + 1, 0, 0), g(-d - 2, 2, 0)],
    };
    ClaspGradings { a1, b1, a2, b2 }
}

/// `2r(S) + 2μ n(S)` for the capping surfaces of each family: zero for the
/// prime family, `2μβ/α` for the other.
pub fn family_period<T: Integer>(kind: FamilyKind) -> GradingPeriod<T> {
    match kind {
        FamilyKind::PrimeTwist => GradingPeriod::zero(),
        FamilyKind::LsTwist => GradingPeriod::new(Grading::ints(0, 0, 2)),
    }
}

fn teardrop_a<T: Integer>() -> Grading<T> {
    Grading::ints(1, 0, 0)
}

fn teardrop_b<T: Integer>() -> Grading<T> {
    Grading::ints(-2, 2, 0)
}

fn twist_a<T: Integer>() -> Grading<T> {
    Grading::ints(-1, 2, 0)
}

fn twist_b<T: Integer>() -> Grading<T> {
    Grading::zero()
}

/// All generators in label order: `a1, b1, a2, b2, a3, b3, ...`.
pub fn generators<T: Integer>(spec: &FamilySpec) -> Vec<Generator<T>> {
    let labels = CrossingLabels::new(spec.n);
    let clasp = clasp_gradings::<T>(spec.kind, spec.n, spec.l);
    let mut out = vec![
        Generator::new("a1", clasp.a1),
        Generator::new("b1", clasp.b1),
        Generator::new("a2", clasp.a2),
        Generator::new("b2", clasp.b2),
    ];
    for i in labels.teardrop.clone() {
        out.push(Generator::new(format!("a{i}"), teardrop_a()));
        out.push(Generator::new(format!("b{i}"), teardrop_b()));
    }
    for i in labels.twist {
        out.push(Generator::new(format!("a{i}"), twist_a()));
        out.push(Generator::new(format!("b{i}"), twist_b()));
    }
    out
}

/// Linearized differential. With tear-drop labels `t_0..t_m` and twist
/// labels `w_1..w_m`: `a_{t_j} ↦ b_{w_j} + b_{w_{j+1}}` (one term at either
/// end), `a_{w_j} ↦ b_{t_{j−1}} + b_{t_j}`; clasp generators are cycles.
fn chain_differential(n: u32) -> BTreeMap<String, BTreeSet<String>> {
    let labels = CrossingLabels::new(n);
    let t: Vec<u32> = labels.teardrop.collect();
    let w: Vec<u32> = labels.twist.collect();
    let m = w.len();
    let b = |i: u32| format!("b{i}");
    let mut d = BTreeMap::new();
    for (j, tj) in t.iter().enumerate() {
        let mut img = BTreeSet::new();
        if j >= 1 {
            img.insert(b(w[j - 1]));
        }
        if j < m {
            img.insert(b(w[j]));
        }
        d.insert(format!("a{tj}"), img);
    }
    for (j, wj) in w.iter().enumerate() {
        d.insert(format!("a{wj}"), BTreeSet::from([b(t[j]), b(t[j + 1])]));
    }
    d
}

pub fn linear_complex<T: Integer>(spec: &FamilySpec) -> LinearComplex<T> {
    LinearComplex::new(
        generators(spec),
        family_period(spec.kind),
        chain_differential(spec.n),
    )
    .expect("family names are distinct and declared")
}

/// The full differential, available for the prime 4-twist knots only:
/// `∂a3 = 1 + b8`, `∂a4 = 1 + b8 b9`, `∂a5 = 1 + b9 b10`, `∂a6 = 1 + b10 b11`,
/// `∂a7 = 1 + b11`, and the twist chords with their linear differentials.
pub fn full_dga<T: Integer>(spec: &FamilySpec) -> Option<Dga<T>> {
    if spec.kind != FamilyKind::PrimeTwist || spec.n != 4 {
        return None;
    }
    let labels = CrossingLabels::new(spec.n);
    let t: Vec<u32> = labels.teardrop.collect();
    let w: Vec<u32> = labels.twist.collect();
    let b = |i: u32| format!("b{i}");
    let mut d = BTreeMap::new();
    for (j, tj) in t.iter().enumerate() {
        let product = Word::new(
            w[j.saturating_sub(1)..(j + 1).min(w.len())]
                .iter()
                .map(|&i| b(i)),
        );
        d.insert(
            format!("a{tj}"),
            WordSum::from_words([Word::unit(), product]),
        );
    }
    for (j, wj) in w.iter().enumerate() {
        d.insert(
            format!("a{wj}"),
            &WordSum::generator(b(t[j])) + &WordSum::generator(b(t[j + 1])),
        );
    }
    Some(
        Dga::new(generators(spec), family_period(spec.kind), d).expect("family names are declared"),
    )
}

/// `t + t^{2μ−2} + t^{|a1|} + t^{|b1|} + t^{|a2|} + t^{|b2|}`.
pub fn closed_form<T: Integer>(spec: &FamilySpec) -> PoincarePolynomial<T> {
    let mut terms = vec![teardrop_a(), teardrop_b()];
    terms.extend(clasp_gradings(spec.kind, spec.n, spec.l).to_vec());
    PoincarePolynomial::from_dimensions(terms.into_iter().map(|g| (g, 1)), family_period(spec.kind))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct ClassicalInvariants<T = i64> {
    pub tb_q: Rational<T>,
    pub rot_q: Rational<T>,
    /// The same values as expressions in `α`, `β` and `rot(Λ₀)`.
    pub tb_q_formula: String,
    pub rot_q_formula: String,
}

/// `Λ`: `(1, 0)` for even `n`, `(−3, 0)` for odd `n`. `Λ'`: the same `tb`
/// shifted by `α/β` and `rot = (α/β) rot(Λ₀)`, where `rot0` is the rotation
/// number of the surgery unknot.
pub fn classical_invariants<T: Integer>(spec: &FamilySpec, rot0: i64) -> ClassicalInvariants<T> {
    let base = twist_tb(spec.n);
    match spec.kind {
        FamilyKind::PrimeTwist => ClassicalInvariants {
            tb_q: Rational::int(base),
            rot_q: Rational::int(0),
            tb_q_formula: Rational::<T>::int(base).to_string(),
            rot_q_formula: "0".into(),
        },
        FamilyKind::LsTwist => {
            let ab = spec.lens.alpha_over_beta::<T>();
            ClassicalInvariants {
                tb_q: &Rational::int(base) + &ab,
                rot_q: &ab * &Rational::int(rot0),
                tb_q_formula: format!("{base} + α/β"),
                rot_q_formula: "(α/β)·rot(Λ₀)".into(),
            }
        }
    }
}

/// Thurston–Bennequin number of the `n`-twist Legendrian `E(l, n−l)` in `S³`.
pub fn twist_tb(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct FamilyInstance<T: Integer = i64> {
    pub spec: FamilySpec,
    pub crossings: u32,
    pub generators: Vec<Generator<T>>,
    /// The full algebra when known (prime family, `n = 4`).
    pub dga: Option<Dga<T>>,
    pub complex: LinearComplex<T>,
    pub closed_form: PoincarePolynomial<T>,
    pub classical: ClassicalInvariants<T>,
}

pub fn generate<T: Integer>(spec: &FamilySpec, rot0: i64) -> FamilyInstance<T> {
    FamilyInstance {
        spec: *spec,
        crossings: CrossingLabels::new(spec.n).count(),
        generators: generators(spec),
        dga: full_dga(spec),
        complex: linear_complex(spec),
        closed_form: closed_form(spec),
        classical: classical_invariants(spec, rot0),
    }
}

/// What the homology pipeline produced for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct PipelineResult<T: Integer = i64> {
    /// Present when the full algebra was searched.
    pub augmentations: Option<Vec<Augmentation>>,
    pub polynomial: PoincarePolynomial<T>,
}

/// Validation, augmentation search, linearization and homology when the full
/// algebra is known; otherwise homology of the stored linear complex.
pub fn pipeline<T: Integer>(instance: &FamilyInstance<T>) -> Result<PipelineResult<T>> {
    let Some(d) = &instance.dga else {
        let report = instance.complex.as_dga().validate();
        if !report.is_valid() || !instance.complex.squares_to_zero() {
            return Err(Error::InvalidDga(format!("{:?}", report.violations)));
        }
        return Ok(PipelineResult {
            augmentations: None,
            polynomial: dga::homology_polynomial(&instance.complex),
        });
    };
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDga(format!("{:?}", report.violations)));
    }
    let augs = dga::find_augmentations(d, dga::DEFAULT_SEARCH_BOUND)?;
    let [e] = augs.as_slice() else {
        return Err(Error::InvalidDga(format!(
            "expected one augmentation, found {}",
            augs.len()
        )));
    };
    let polynomial = dga::homology_polynomial(&dga::linearize(d, e)?);
    Ok(PipelineResult {
        augmentations: Some(augs),
        polynomial,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct AtlasEntry<T: Integer = i64> {
    pub l: u32,
    pub polynomial: PoincarePolynomial<T>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MirrorComparison {
    pub l: u32,
    pub mirror: u32,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct NumericWitness<T = i64> {
    pub mu: Rational<T>,
    pub beta_over_alpha: Rational<T>,
    pub distinct: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct AtlasReport<T: Integer = i64> {
    pub kind: FamilyKind,
    pub n: u32,
    pub lens: Lens,
    /// Values of `l` whose polynomials are compared.
    pub classified: Vec<u32>,
    pub entries: Vec<AtlasEntry<T>>,
    pub distinct: usize,
    /// `n − 1` for the prime family, `⌈n/2⌉` for the other.
    pub expected: usize,
    /// `P(l)` against `P(n − l)` over every `1 ≤ l ≤ n − 1`.
    pub full_range: Vec<MirrorComparison>,
    /// The classified polynomials instantiated at `μ = 1`, `β/α = 2/5`.
    pub witness: NumericWitness<T>,
}

fn polynomial_key<T: Integer>(p: &PoincarePolynomial<T>) -> Vec<(Grading<T>, u64)> {
    p.terms().map(|(g, m)| (g.clone(), m)).collect()
}

pub fn atlas<T: Integer>(kind: FamilyKind, n: u32, lens: Lens) -> Result<AtlasReport<T>> {
    let upper = match kind {
        FamilyKind::PrimeTwist => n - 1,
        FamilyKind::LsTwist => n.div_ceil(2),
    };
    FamilySpec::new(kind, n, 1, lens)?;
    let polys: Vec<PoincarePolynomial<T>> = (1..n)
        .map(|l| closed_form(&FamilySpec { kind, n, l, lens }))
        .collect();
    let classified: Vec<u32> = (1..=upper).collect();
    let entries: Vec<AtlasEntry<T>> = classified
        .iter()
        .map(|&l| {
            let polynomial = polys[l as usize - 1].clone();
            AtlasEntry {
                l,
                rendered: polynomial.to_string(),
                polynomial,
            }
        })
        .collect();
    let distinct = entries
        .iter()
        .map(|e| polynomial_key(&e.polynomial))
        .collect::<BTreeSet<_>>()
        .len();
    let full_range = (1..n)
        .map(|l| MirrorComparison {
            l,
            mirror: n - l,
            equal: polys[l as usize - 1] == polys[(n - l) as usize - 1],
        })
        .collect();
    let (mu, ba) = (Rational::int(1), Rational::from_i64(2, 5));
    let witness = NumericWitness {
        distinct: entries
            .iter()
            .map(|e| e.polynomial.evaluate(&mu, &ba))
            .collect::<BTreeSet<_>>()
            .len(),
        mu,
        beta_over_alpha: ba,
    };
    Ok(AtlasReport {
        kind,
        n,
        lens,
        classified,
        entries,
        distinct,
        expected: upper as usize,
        full_range,
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    S3,
    Lens,
}

/// Whether the two partitions of `n` give isotopic knots: in `S³` when the
/// unordered pairs agree, in a lens space only when the ordered pairs do.
pub fn s3_equivalence(l: u32, l2: u32, n: u32, ambient: Ambient) -> Result<bool> {
    for x in [l, l2] {
        if x < 1 || x >= n {
            return Err(Error::InvalidFamily(format!(
                "need 1 ≤ l ≤ {}, got {x}",
                n.saturating_sub(1)
            )));
        }
    }
    Ok(match ambient {
        Ambient::S3 => l == l2 || l == n - l2,
        Ambient::Lens => l == l2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Integer")]
pub struct DecompositionReport<T = i64> {
    pub spec: FamilySpec,
    pub tb_e: i64,
    pub rot_e: i64,
    pub tb_q: Rational<T>,
    pub rot_q: Rational<T>,
    /// `F`'s invariants solved from the connected-sum formulas.
    pub tb_q_f: Rational<T>,
    pub rot_q_f: Rational<T>,
    /// Expected `(α/β − 1, (α/β) rot(Λ₀))`.
    pub expected_tb_q_f: Rational<T>,
    pub expected_rot_q_f: Rational<T>,
    pub pass: bool,
}

/// Checks `Λ' = E # F` against `tb_Q = tb(E) + tb_Q(F) + 1` and
/// `rot_Q = rot(E) + rot_Q(F)`.
pub fn decomposition_check<T: Integer>(
    spec: &FamilySpec,
    rot0: i64,
) -> Result<DecompositionReport<T>> {
    if spec.kind != FamilyKind::LsTwist {
        return Err(Error::InvalidFamily(
            "decomposition applies to the ls family".into(),
        ));
    }
    let inv = classical_invariants::<T>(spec, rot0);
    let (tb_e, rot_e) = (twist_tb(spec.n), 0);
    let tb_q_f = &(&inv.tb_q - &Rational::int(tb_e)) - &Rational::int(1);
    let rot_q_f = &inv.rot_q - &Rational::int(rot_e);
    let ab = spec.lens.alpha_over_beta::<T>();
    let expected_tb_q_f = &ab - &Rational::int(1);
    let expected_rot_q_f = &ab * &Rational::int(rot0);
    let recombined_tb = crate::connectsum::connect_tb(&Rational::int(tb_e), &tb_q_f);
    let recombined_rot = crate::connectsum::connect_rot(&Rational::int(rot_e), &rot_q_f);
    let pass = tb_q_f == expected_tb_q_f
        && rot_q_f == expected_rot_q_f
        && recombined_tb == inv.tb_q
        && recombined_rot == inv.rot_q;
    Ok(DecompositionReport {
        spec: *spec,
        tb_e,
        rot_e,
        tb_q: inv.tb_q,
        rot_q: inv.rot_q,
        tb_q_f,
        rot_q_f,
        expected_tb_q_f,
        expected_rot_q_f,
        pass,
    })
}

/// A surgery presentation of the instance: `E(l, n−l)` with the lens space
/// as surgery on an unknot of rotation `rot0`. The prime knot sits in a ball
/// away from the unknot; `Λ'` links it once.
///
/// The `S³` data is `tb(E)` and `rot = 0`, so `sl = tb` for either push-off.
pub fn surgery_presentation(spec: &FamilySpec, rot0: i64) -> Result<SurgeryPresentation<i64>> {
    let tb = twist_tb(spec.n);
    let lk = match spec.kind {
        FamilyKind::PrimeTwist => 0,
        FamilyKind::LsTwist => 1,
    };
    SurgeryPresentation::new(
        vec![SurgeryComponent {
            alpha: spec.lens.alpha,
            beta: spec.lens.beta,
            rot: rot0,
        }],
        vec![],
        KnotData {
            lk: vec![lk],
            tb,
            rot: 0,
            sl: tb,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::{transform_invariants, PushoffSign};

    type Q = Rational<i64>;

    fn lens52() -> Lens {
        Lens::new(5, 2).unwrap()
    }

    fn spec(kind: FamilyKind, n: u32, l: u32) -> FamilySpec {
        FamilySpec::new(kind, n, l, lens52()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(FamilyKind::PrimeTwist, 2, 1, lens52()).is_err());
        assert!(FamilySpec::new(FamilyKind::PrimeTwist, 4, 4, lens52()).is_err());
        assert!(FamilySpec::new(FamilyKind::PrimeTwist, 4, 0, lens52()).is_err());
        assert!(Lens::new(4, 2).is_err());
        assert!(Lens::new(3, 3).is_err());
        assert_eq!("7/3".parse::<Lens>().unwrap(), Lens::new(7, 3).unwrap());
        assert!("7".parse::<Lens>().is_err());
    }

    #[test]
    fn crossing_counts() {
        for k in 1..8u32 {
            assert_eq!(CrossingLabels::new(2 * k + 1).count(), 4 * k + 5);
            assert_eq!(CrossingLabels::new(2 * k).count(), 4 * k + 3);
        }
        let g = generators::<i64>(&spec(FamilyKind::PrimeTwist, 4, 1));
        assert_eq!(g.len(), 2 * 11);
    }

    #[test]
    fn prime_four_twist_gradings() {
        let expected = [
            [(-3, 0, -2), (2, 2, 2), (3, 0, 2), (-4, 2, -2)],
            [(-1, 0, -2), (0, 2, 2), (1, 0, 2), (-2, 2, -2)],
            [(1, 0, -2), (-2, 2, 2), (-1, 0, 2), (0, 2, -2)],
        ];
        for (l, want) in (1..=3).zip(expected) {
            let got = clasp_gradings::<i64>(FamilyKind::PrimeTwist, 4, l).to_vec();
            let want: Vec<_> = want
                .iter()
                .map(|&(a, b, c)| Grading::ints(a, b, c))
                .collect();
            assert_eq!(got, want, "l = {l}");
        }
    }

    #[test]
    fn odd_and_ls_display_values() {
        // n = 2k+1 with k = 2, l = 1: |a1| = 2k − 2l + 5 = 7
        let c = clasp_gradings::<i64>(FamilyKind::PrimeTwist, 5, 1);
        assert_eq!(c.a1, Grading::ints(7, 0, 0));
        assert_eq!(c.a2, Grading::ints(-5, 2, -2));
        // n = 2k with k = 3, l = 2: |a1| = −2k + 2l − 1, |b1| = 2k − 2l + 2μ
        let c = clasp_gradings::<i64>(FamilyKind::LsTwist, 6, 2);
        assert_eq!(c.a1, Grading::ints(-3, 0, 0));
        assert_eq!(c.b1, Grading::ints(2, 2, 0));
    }

    #[test]
    fn chain_pattern_for_four_twists() {
        let d = chain_differential(4);
        let set = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(d["a3"], set(&["b8"]));
        assert_eq!(d["a4"], set(&["b8", "b9"]));
        assert_eq!(d["a7"], set(&["b11"]));
        assert_eq!(d["a8"], set(&["b3", "b4"]));
        assert_eq!(d["a11"], set(&["b6", "b7"]));
        assert!(!d.contains_key("a1"));
    }

    #[test]
    fn full_dga_only_for_prime_four() {
        let s = spec(FamilyKind::PrimeTwist, 4, 2);
        let d = full_dga::<i64>(&s).unwrap();
        assert_eq!(d.boundary("a4").unwrap().to_string(), "1 + b8 b9");
        assert_eq!(d.boundary("a7").unwrap().to_string(), "1 + b11");
        assert!(d.validate().is_valid());
        assert!(full_dga::<i64>(&spec(FamilyKind::PrimeTwist, 5, 2)).is_none());
        assert!(full_dga::<i64>(&spec(FamilyKind::LsTwist, 4, 2)).is_none());
    }

    #[test]
    fn golden_polynomials() {
        let golden = [
            "t + t^{2μ−2} + t^{3+2μβ/α} + t^{2+2μ(1+β/α)} + t^{−3−2μβ/α} + t^{−4+2μ(1−β/α)}",
            "t + t^{2μ−2} + t^{1+2μβ/α} + t^{2μ(1+β/α)} + t^{−1−2μβ/α} + t^{−2+2μ(1−β/α)}",
        ];
        for (l, want) in (1..=2).zip(golden) {
            let inst = generate::<i64>(&spec(FamilyKind::PrimeTwist, 4, l), 0);
            let out = pipeline(&inst).unwrap();
            assert_eq!(
                out.augmentations.unwrap(),
                vec![Augmentation::new(["b8", "b9", "b10", "b11"])]
            );
            assert_eq!(out.polynomial, inst.closed_form);
            assert_eq!(out.polynomial.to_string(), want);
        }
    }

    #[test]
    fn pipeline_matches_closed_form() {
        for kind in [FamilyKind::PrimeTwist, FamilyKind::LsTwist] {
            for n in 3..=9 {
                for l in 1..n {
                    let inst = generate::<i64>(&spec(kind, n, l), 0);
                    assert_eq!(
                        pipeline(&inst).unwrap().polynomial,
                        inst.closed_form,
                        "{kind} {n} {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn classical_values() {
        let inv = classical_invariants::<i64>(&spec(FamilyKind::PrimeTwist, 4, 1), 0);
        assert_eq!((inv.tb_q, inv.rot_q), (Q::int(1), Q::int(0)));
        let inv = classical_invariants::<i64>(&spec(FamilyKind::PrimeTwist, 5, 3), 0);
        assert_eq!(inv.tb_q, Q::int(-3));
        let inv = classical_invariants::<i64>(&spec(FamilyKind::LsTwist, 4, 1), 0);
        assert_eq!((inv.tb_q, inv.rot_q), (Q::from_i64(7, 2), Q::int(0)));
        assert_eq!(inv.tb_q_formula, "1 + α/β");
        let inv = classical_invariants::<i64>(&spec(FamilyKind::LsTwist, 5, 1), 2);
        assert_eq!((inv.tb_q, inv.rot_q), (Q::from_i64(-1, 2), Q::int(5)));
    }

    #[test]
    fn atlas_counts() {
        let a = atlas::<i64>(FamilyKind::PrimeTwist, 4, lens52()).unwrap();
        assert_eq!((a.distinct, a.expected, a.witness.distinct), (3, 3, 3));
        let a = atlas::<i64>(FamilyKind::PrimeTwist, 3, lens52()).unwrap();
        assert_eq!(a.distinct, 2);
        let a = atlas::<i64>(FamilyKind::LsTwist, 4, lens52()).unwrap();
        assert_eq!(
            (a.distinct, a.expected, a.classified.clone()),
            (2, 2, vec![1, 2])
        );
        assert_eq!(a.full_range.len(), 3);
        assert!(a.full_range.iter().find(|c| c.l == 2).unwrap().equal);
    }

    #[test]
    fn partition_equivalence() {
        assert!(s3_equivalence(1, 3, 4, Ambient::S3).unwrap());
        assert!(!s3_equivalence(1, 3, 4, Ambient::Lens).unwrap());
        assert!(s3_equivalence(2, 2, 4, Ambient::S3).unwrap());
        assert!(s3_equivalence(2, 2, 4, Ambient::Lens).unwrap());
        assert!(s3_equivalence(0, 2, 4, Ambient::S3).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let r = decomposition_check::<i64>(&spec(FamilyKind::LsTwist, 4, 1), 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.tb_q_f, Q::from_i64(3, 2));
        let r = decomposition_check::<i64>(&spec(FamilyKind::LsTwist, 5, 2), 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.tb_q, Q::from_i64(-1, 2));
        assert!(decomposition_check::<i64>(&spec(FamilyKind::PrimeTwist, 4, 1), 0).is_err());
    }

    #[test]
    fn prime_surgery_path_matches_listed_invariants() {
        for n in 3..=8 {
            let s = spec(FamilyKind::PrimeTwist, n, 1);
            let p = surgery_presentation(&s, 0).unwrap();
            let r = transform_invariants(&p, PushoffSign::Positive).unwrap();
            let inv = classical_invariants::<i64>(&s, 0);
            assert_eq!((r.tb_q, r.rot_q), (inv.tb_q, inv.rot_q));
        }
    }
}
