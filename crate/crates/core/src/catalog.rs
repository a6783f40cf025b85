//! Every displayed grading on the small composition superalgebras, with a verifier.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::abelian::{AbElement, AbGroup, AbelianError};
use crate::constructions::{self as cons, CanonicalBasis, ConstructionError, OkuboVariant};
use crate::fields::FieldSpec;
use crate::gradings::{self, Grading, GradingError, GradingTriple};
use crate::linalg::{self, Matrix, Vector};
use crate::search::{self, MapMode, SearchBudget, SearchError, SearchOutcome};
use crate::superalgebra::{Morphism, MorphismFlag, SuperAlgebra};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry {id} needs {condition}, got {field}")]
    FieldConditionUnmet { id: String, condition: String, field: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, CatalogError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    B12,
    B42,
    /// super split quaternion algebra, odd part spanned by `u1, v1`
    SuperQuaternion,
    /// `CD(CD(K,1),1)` with `K = F1 + Fw`, odd half `Qu`
    DoubledK,
    SuperCayley,
    /// Petersson twist of [`AlgebraKind::DoubledK`] by `φ(u) = w·u`
    OkuboK,
    OkuboNst,
    OkuboOmega,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 8] = [
        AlgebraKind::B12,
        AlgebraKind::B42,
        AlgebraKind::SuperQuaternion,
        AlgebraKind::DoubledK,
        AlgebraKind::SuperCayley,
        AlgebraKind::OkuboK,
        AlgebraKind::OkuboNst,
        AlgebraKind::OkuboOmega,
    ];

    pub fn key(self) -> &'static str {
        match self {
            AlgebraKind::B12 => "b12",
            AlgebraKind::B42 => "b42",
            AlgebraKind::SuperQuaternion => "squat",
            AlgebraKind::DoubledK => "cdk",
            AlgebraKind::SuperCayley => "scayley",
            AlgebraKind::OkuboK => "okubo-k",
            AlgebraKind::OkuboNst => "okubo-nst",
            AlgebraKind::OkuboOmega => "okubo-omega",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            AlgebraKind::B12 => "B(1,2)",
            AlgebraKind::B42 => "B(4,2)",
            AlgebraKind::SuperQuaternion => "super split quaternion algebra",
            AlgebraKind::DoubledK => "Cayley superalgebra K + Kv + Ku + K(vu)",
            AlgebraKind::SuperCayley => "super split Cayley algebra",
            AlgebraKind::OkuboK => "Okubo superalgebra with φ(u) = w·u",
            AlgebraKind::OkuboNst => "Okubo superalgebra twisted by τ_nst",
            AlgebraKind::OkuboOmega => "Okubo superalgebra twisted by τ_ω",
        }
    }

    pub fn condition(self) -> FieldCondition {
        match self {
            AlgebraKind::B12 | AlgebraKind::B42 => FieldCondition::Char3,
            AlgebraKind::OkuboOmega => FieldCondition::Char2Omega,
            _ => FieldCondition::Char2,
        }
    }

    pub fn is_okubo(self) -> bool {
        matches!(self, AlgebraKind::OkuboK | AlgebraKind::OkuboNst | AlgebraKind::OkuboOmega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldCondition {
    Char3,
    Char2,
    /// characteristic 2 and a primitive cube root of unity in F
    Char2Omega,
}

impl FieldCondition {
    pub fn holds(self, f: FieldSpec) -> bool {
        match self {
            FieldCondition::Char3 => f.characteristic() == 3,
            FieldCondition::Char2 => f.characteristic() == 2,
            FieldCondition::Char2Omega => f.characteristic() == 2 && f.primitive_cube_root().is_some(),
        }
    }

    /// Smallest field satisfying the condition.
    pub fn default_field(self) -> FieldSpec {
        match self {
            FieldCondition::Char3 => FieldSpec::GF3,
            FieldCondition::Char2 => FieldSpec::GF2,
            FieldCondition::Char2Omega => FieldSpec::GF4,
        }
    }

    /// Finite fields from the supported list satisfying the condition.
    pub fn test_fields(self) -> Vec<FieldSpec> {
        match self {
            FieldCondition::Char3 => vec![FieldSpec::GF3, FieldSpec::GF9],
            FieldCondition::Char2 => vec![FieldSpec::GF2, FieldSpec::GF4],
            FieldCondition::Char2Omega => vec![FieldSpec::GF4],
        }
    }
}

impl fmt::Display for FieldCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldCondition::Char3 => "char 3",
            FieldCondition::Char2 => "char 2",
            FieldCondition::Char2Omega => "char 2 with ω in F",
        })
    }
}

/// Degree assignment on the defining basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// group, then degree coordinates per basis name; unnamed elements get degree 0
    Names(&'static str, &'static [(&'static str, &'static [i64])]),
    /// `deg u_i = g_i`, `deg v_i = -g_i` on the canonical basis
    Triple(&'static str, [&'static [i64]; 3]),
    Main,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub algebra: AlgebraKind,
    pub layout: Layout,
    pub group: &'static str,
    pub coarsening_of: &'static [&'static str],
}

const fn entry(
    id: &'static str,
    description: &'static str,
    algebra: AlgebraKind,
    layout: Layout,
    group: &'static str,
    coarsening_of: &'static [&'static str],
) -> CatalogEntry {
    CatalogEntry { id, description, algebra, layout, group, coarsening_of }
}

use AlgebraKind as A;
use Layout::{Names, Triple};

const CDK_Z2SQ: &[(&str, &[i64])] =
    &[("v", &[1, 0]), ("wv", &[1, 0]), ("u", &[0, 1]), ("wu", &[0, 1]), ("vu", &[1, 1]), ("wvu", &[1, 1])];
const CDK_Z2: &[(&str, &[i64])] = &[("v", &[1]), ("wv", &[1]), ("vu", &[1]), ("wvu", &[1])];

/// Labeled displays, in order of appearance.
pub const LABELED: [CatalogEntry; 29] = [
    entry("eq1", "Z-grading on B(1,2): u in degree 1, v in degree -1", A::B12, Names("Z", &[("u", &[1]), ("v", &[-1])]), "Z", &[]),
    entry(
        "eq2",
        "5-grading on B(4,2): u, v in degrees ±1, x, y in degrees ±2",
        A::B42,
        Names("Z", &[("u", &[1]), ("v", &[-1]), ("x", &[2]), ("y", &[-2])]),
        "Z",
        &[],
    ),
    entry(
        "eq3",
        "Z4-grading on B(4,2): u in 1, x and y in 2, v in 3",
        A::B42,
        Names("Z4", &[("u", &[1]), ("v", &[3]), ("x", &[2]), ("y", &[2])]),
        "Z4",
        &["eq2"],
    ),
    entry(
        "eq4",
        "Z3-grading on B(4,2): u and y in 1, v and x in 2",
        A::B42,
        Names("Z3", &[("u", &[1]), ("y", &[1]), ("v", &[2]), ("x", &[2])]),
        "Z3",
        &["eq2"],
    ),
    entry(
        "eq5",
        "Z-grading on the super split quaternions: u1 in 1, v1 in -1",
        A::SuperQuaternion,
        Names("Z", &[("u1", &[1]), ("v1", &[-1])]),
        "Z",
        &[],
    ),
    entry("eq6", "Z2^2-grading K, Kv, Ku, K(vu) on a doubled Cayley superalgebra", A::DoubledK, Names("Z2^2", CDK_Z2SQ), "Z2^2", &[]),
    entry("eq7", "Cartan Z^2-grading on the super split Cayley algebra", A::SuperCayley, Triple("Z^2", [&[1, 0], &[0, 1], &[-1, -1]]), "Z^2", &[]),
    entry("cor1eq3", "Z2-grading K + Ku, Kv + K(vu) on a doubled Cayley superalgebra", A::DoubledK, Names("Z2", CDK_Z2), "Z2", &["eq6"]),
    entry("cor1eq5", "3-grading with γ = (1,-1,0) on the super split Cayley algebra", A::SuperCayley, Triple("Z", [&[1], &[-1], &[0]]), "Z", &["eq7"]),
    entry("cor1eq6", "3-grading with γ = (0,-1,1) on the super split Cayley algebra", A::SuperCayley, Triple("Z", [&[0], &[-1], &[1]]), "Z", &["eq7"]),
    entry("cor1eq7", "5-grading with γ = (1,1,-2) on the super split Cayley algebra", A::SuperCayley, Triple("Z", [&[1], &[1], &[-2]]), "Z", &["eq7"]),
    entry("cor1eq8", "5-grading with γ = (-2,1,1) on the super split Cayley algebra", A::SuperCayley, Triple("Z", [&[-2], &[1], &[1]]), "Z", &["eq7"]),
    entry("cor1eq9", "Z3-grading with γ = (1,1,1) on the super split Cayley algebra", A::SuperCayley, Triple("Z3", [&[1], &[1], &[1]]), "Z3", &["eq7"]),
    entry("cor1eq10", "Z4-grading with γ = (1,1,2) on the super split Cayley algebra", A::SuperCayley, Triple("Z4", [&[1], &[1], &[2]]), "Z4", &["eq7"]),
    entry("cor1eq11", "Z4-grading with γ = (2,1,1) on the super split Cayley algebra", A::SuperCayley, Triple("Z4", [&[2], &[1], &[1]]), "Z4", &["eq7"]),
    entry(
        "cor1eq12",
        "Z x Z2-grading with γ = ((0,1),(1,0),(-1,1)) on the super split Cayley algebra",
        A::SuperCayley,
        Triple("Z x Z2", [&[0, 1], &[1, 0], &[-1, 1]]),
        "Z x Z2",
        &["eq7"],
    ),
    entry(
        "cor1eq13",
        "Z x Z2-grading with γ = ((-1,1),(1,0),(0,1)) on the super split Cayley algebra",
        A::SuperCayley,
        Triple("Z x Z2", [&[-1, 1], &[1, 0], &[0, 1]]),
        "Z x Z2",
        &["eq7"],
    ),
    entry("okuboeq1", "Z2^2-grading K, K^⊥, Ku, K^⊥u on an Okubo superalgebra", A::OkuboK, Names("Z2^2", CDK_Z2SQ), "Z2^2", &[]),
    entry("okuboeq2", "Z2-grading K + Ku, K^⊥ + K^⊥u on an Okubo superalgebra", A::OkuboK, Names("Z2", CDK_Z2), "Z2", &["okuboeq1"]),
    entry("okuboeq3", "Cartan Z^2-grading on the τ_ω Okubo superalgebra", A::OkuboOmega, Triple("Z^2", [&[1, 0], &[0, 1], &[-1, -1]]), "Z^2", &[]),
    entry("okuboeq4", "3-grading with γ = (1,-1,0) on the τ_ω Okubo superalgebra", A::OkuboOmega, Triple("Z", [&[1], &[-1], &[0]]), "Z", &["okuboeq3"]),
    entry("okuboeq5", "3-grading with γ = (0,-1,1) on the τ_ω Okubo superalgebra", A::OkuboOmega, Triple("Z", [&[0], &[-1], &[1]]), "Z", &["okuboeq3"]),
    entry("okuboeq6", "5-grading with γ = (1,1,-2) on the τ_nst Okubo superalgebra", A::OkuboNst, Triple("Z", [&[1], &[1], &[-2]]), "Z", &["okuboeq3"]),
    entry("okuboeq7", "5-grading with γ = (-2,1,1) on the τ_ω Okubo superalgebra", A::OkuboOmega, Triple("Z", [&[-2], &[1], &[1]]), "Z", &["okuboeq3"]),
    entry("okuboeq8", "Z3-grading with γ = (1,1,1) on the τ_nst Okubo superalgebra", A::OkuboNst, Triple("Z3", [&[1], &[1], &[1]]), "Z3", &["okuboeq3"]),
    entry("okuboeq9", "Z4-grading with γ = (1,1,2) on the τ_nst Okubo superalgebra", A::OkuboNst, Triple("Z4", [&[1], &[1], &[2]]), "Z4", &["okuboeq3"]),
    entry("okuboeq10", "Z4-grading with γ = (2,1,1) on the τ_ω Okubo superalgebra", A::OkuboOmega, Triple("Z4", [&[2], &[1], &[1]]), "Z4", &["okuboeq3"]),
    entry(
        "okuboeq11",
        "Z x Z2-grading with γ = ((0,1),(1,0),(-1,1)) on the τ_ω Okubo superalgebra",
        A::OkuboOmega,
        Triple("Z x Z2", [&[0, 1], &[1, 0], &[-1, 1]]),
        "Z x Z2",
        &["okuboeq3"],
    ),
    entry(
        "okuboeq12",
        "Z x Z2-grading with γ = ((-1,1),(1,0),(0,1)) on the τ_ω Okubo superalgebra",
        A::OkuboOmega,
        Triple("Z x Z2", [&[-1, 1], &[1, 0], &[0, 1]]),
        "Z x Z2",
        &["okuboeq3"],
    ),
];

const fn main_trivial(kind: AlgebraKind, main_id: &'static str, trivial_id: &'static str) -> [CatalogEntry; 2] {
    [
        entry(main_id, "main Z2-grading by parity", kind, Layout::Main, "Z2", &[]),
        entry(trivial_id, "trivial grading", kind, Layout::Trivial, "0", &[]),
    ]
}

const EXTRA: [[CatalogEntry; 2]; 8] = [
    main_trivial(A::B12, "b12-main", "b12-trivial"),
    main_trivial(A::B42, "b42-main", "b42-trivial"),
    main_trivial(A::SuperQuaternion, "squat-main", "squat-trivial"),
    main_trivial(A::DoubledK, "cdk-main", "cdk-trivial"),
    main_trivial(A::SuperCayley, "scayley-main", "scayley-trivial"),
    main_trivial(A::OkuboK, "okubo-k-main", "okubo-k-trivial"),
    main_trivial(A::OkuboNst, "okubo-nst-main", "okubo-nst-trivial"),
    main_trivial(A::OkuboOmega, "okubo-omega-main", "okubo-omega-trivial"),
];

/// All entries: the labeled displays followed by main and trivial per algebra.
pub fn entries() -> Vec<CatalogEntry> {
    LABELED.iter().cloned().chain(EXTRA.iter().flatten().cloned()).collect()
}

pub fn lookup(id: &str) -> Result<CatalogEntry> {
    entries().into_iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))
}

/// Cases of the classification that cannot be built over a finite field.
#[derive(Debug, Clone, Serialize)]
pub struct NotInstantiable {
    pub id: &'static str,
    pub description: &'static str,
    pub reason: &'static str,
}

pub const NOT_INSTANTIABLE: [NotInstantiable; 2] = [
    NotInstantiable {
        id: "hurwitz-nonsplit-even",
        description: "8-dimensional Hurwitz superalgebra whose even part is a division quaternion algebra",
        reason: "quaternion algebras over finite fields are split, and doubling is only available in characteristic 2",
    },
    NotInstantiable {
        id: "okubo-nonsplit-even",
        description: "Okubo superalgebra whose even part is a division quaternion algebra",
        reason: "quaternion algebras over finite fields are split, and doubling is only available in characteristic 2",
    },
];

/// An algebra together with the data its gradings are written in.
#[derive(Debug, Clone)]
pub struct BuiltAlgebra {
    pub kind: AlgebraKind,
    pub algebra: SuperAlgebra,
    /// The Hurwitz product: the algebra itself, or the untwisted product of an Okubo superalgebra.
    pub hurwitz: SuperAlgebra,
    pub phi: Option<Morphism>,
    pub basis: Option<CanonicalBasis>,
}

fn doubled_k(field: FieldSpec) -> std::result::Result<SuperAlgebra, ConstructionError> {
    let one = field.one();
    let q = cons::cayley_dickson(&cons::k_w(field)?, one, "v", false)?;
    cons::cayley_dickson(&q, one, "u", true)
}

/// `φ = 1` on the even part and `φ(x·u) = x·(w·u)`.
fn okubo_k_phi(c: &SuperAlgebra) -> std::result::Result<Morphism, ConstructionError> {
    let wu = c.b("wu");
    let images: Vec<Vector> = (0..c.dim())
        .map(|i| {
            if c.is_odd(i) {
                let name = &c.names()[i];
                let x = name.strip_suffix('u').filter(|s| !s.is_empty()).map_or_else(|| c.b("1"), |s| c.b(s));
                c.mul(&x, &wu)
            } else {
                c.basis(i)
            }
        })
        .collect();
    cons::check_order3_automorphism(c, &Morphism::from_images(c.field(), &images))
}

pub fn build_algebra(kind: AlgebraKind, field: FieldSpec) -> Result<BuiltAlgebra> {
    let plain = |alg: SuperAlgebra, basis: Option<CanonicalBasis>| BuiltAlgebra {
        kind,
        hurwitz: alg.clone(),
        algebra: alg,
        phi: None,
        basis,
    };
    Ok(match kind {
        AlgebraKind::B12 => plain(cons::b12(field)?, None),
        AlgebraKind::B42 => plain(cons::b42(field)?, None),
        AlgebraKind::SuperQuaternion => {
            let (a, cb) = cons::super_split_quaternion(field)?;
            plain(a, Some(cb))
        }
        AlgebraKind::DoubledK => plain(doubled_k(field)?, None),
        AlgebraKind::SuperCayley => {
            let (a, cb) = cons::super_split_cayley(field)?;
            plain(a, Some(cb))
        }
        AlgebraKind::OkuboK => {
            let c = doubled_k(field)?;
            let phi = okubo_k_phi(&c)?;
            let s = cons::petersson_twist(&c, &phi)?;
            BuiltAlgebra { kind, algebra: s, hurwitz: c, phi: Some(phi), basis: None }
        }
        AlgebraKind::OkuboNst | AlgebraKind::OkuboOmega => {
            let variant = if kind == AlgebraKind::OkuboNst { OkuboVariant::Nst } else { OkuboVariant::Omega };
            let o = cons::okubo_super(field, variant)?;
            BuiltAlgebra { kind, algebra: o.algebra, hurwitz: o.hurwitz, phi: Some(o.phi), basis: Some(o.basis) }
        }
    })
}

/// The entry's decomposition on an already built algebra, not validated.
pub fn layout_grading(entry: &CatalogEntry, built: &BuiltAlgebra) -> Result<Grading> {
    let alg = &built.algebra;
    Ok(match entry.layout {
        Layout::Main => Grading::main(alg),
        Layout::Trivial => Grading::trivial(alg),
        Layout::Names(group, degrees) => {
            let group: AbGroup = group.parse()?;
            let degrees: Vec<(&str, AbElement)> = degrees.iter().map(|(n, d)| (*n, group.element(d))).collect();
            Grading::from_basis_degrees(alg, &group, &degrees)?
        }
        Layout::Triple(group, coords) => {
            let group: AbGroup = group.parse()?;
            let gamma = GradingTriple::from_coords(&group, coords)?;
            let cb = built.basis.as_ref().ok_or_else(|| CatalogError::Invalid("algebra has no canonical basis".into()))?;
            let z = group.zero();
            let g = |i: usize| gamma.get(i).clone();
            let degrees = [z.clone(), z, g(0), g(1), g(2), g(0).neg(), g(1).neg(), g(2).neg()];
            Grading::from_vector_degrees(alg, &group, cb.vectors(), &degrees)?
        }
    })
}

fn check_field(entry: &CatalogEntry, field: FieldSpec) -> Result<()> {
    let cond = entry.algebra.condition();
    if cond.holds(field) {
        Ok(())
    } else {
        Err(CatalogError::FieldConditionUnmet { id: entry.id.into(), condition: cond.to_string(), field: field.to_string() })
    }
}

/// Build the algebra and the validated grading of an entry.
pub fn build_entry(id: &str, field: FieldSpec) -> Result<(SuperAlgebra, Grading)> {
    let e = lookup(id)?;
    let (built, g) = build_entry_full(&e, field)?;
    Ok((built.algebra, g))
}

pub fn build_entry_full(entry: &CatalogEntry, field: FieldSpec) -> Result<(BuiltAlgebra, Grading)> {
    check_field(entry, field)?;
    let built = build_algebra(entry.algebra, field)?;
    let g = layout_grading(entry, &built)?;
    gradings::validate(&built.algebra, &g).map_err(|v| CatalogError::Invalid(format!("{}: {v}", entry.id)))?;
    Ok((built, g))
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>, outcome: std::result::Result<(), String>) -> Self {
        match outcome {
            Ok(()) => CheckResult { name: name.into(), pass: true, detail: None },
            Err(d) => CheckResult { name: name.into(), pass: false, detail: Some(d) },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub field: String,
    pub algebra: String,
    pub claimed_group: String,
    pub universal_group: String,
    pub injective: bool,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

fn invariant_under(alg: &SuperAlgebra, g: &Grading, m: &Morphism, skip_zero: bool) -> std::result::Result<(), String> {
    for c in g.components() {
        if skip_zero && c.degree.is_zero() {
            continue;
        }
        let space = c.part.subspace(alg);
        if let Some(v) = c.part.vectors().find(|v| !space.contains(&m.apply(v))) {
            return Err(format!("image of {} leaves degree {}", alg.format(v), c.degree));
        }
    }
    Ok(())
}

fn conjugation(alg: &SuperAlgebra) -> std::result::Result<Morphism, String> {
    let images: Vec<Vector> =
        (0..alg.dim()).map(|i| alg.conjugate(&alg.basis(i))).collect::<std::result::Result<_, _>>().map_err(|e| e.to_string())?;
    Ok(Morphism::from_images(alg.field(), &images))
}

/// Verify an entry, which need not come from the static catalog.
pub fn verify_entry_data(entry: &CatalogEntry, field: FieldSpec) -> Result<EntryReport> {
    check_field(entry, field)?;
    let built = build_algebra(entry.algebra, field)?;
    let alg = &built.algebra;
    let g = layout_grading(entry, &built)?;
    let mut checks = Vec::new();
    let valid = gradings::validate(alg, &g).map_err(|v| v.to_string());
    let is_valid = valid.is_ok();
    checks.push(CheckResult::new("validates", valid));
    let (ug_text, injective) = match gradings::universal_group_of_parts(alg, &g.parts()) {
        Some(ug) => (ug.group.to_string(), ug.injective),
        None => ("none".to_string(), false),
    };
    checks.push(CheckResult::new(
        "universal-group",
        if ug_text == entry.group && injective {
            Ok(())
        } else {
            Err(format!("claimed {}, computed {ug_text} (injective: {injective})", entry.group))
        },
    ));
    for fine_id in entry.coarsening_of {
        let fine_entry = lookup(fine_id)?;
        let fine = layout_grading(&fine_entry, &built)?;
        checks.push(CheckResult::new(
            format!("coarsening-of:{fine_id}"),
            if gradings::is_refinement(alg, &fine, &g) { Ok(()) } else { Err(format!("{fine_id} does not refine {}", entry.id)) },
        ));
    }
    if is_valid {
        checks.push(CheckResult::new("orthogonality", gradings::check_orthogonality(alg, &g)));
    }
    match &built.phi {
        Some(phi) => checks.push(CheckResult::new("phi-invariant", invariant_under(alg, &g, phi, false))),
        None => {
            let conj = conjugation(alg).and_then(|m| invariant_under(alg, &g, &m, true));
            checks.push(CheckResult::new("conjugation-invariant", conj));
            let transfer = cons::para_hurwitz(alg)
                .map_err(|e| e.to_string())
                .and_then(|p| gradings::validate(&p, &g).map_err(|v| v.to_string()));
            checks.push(CheckResult::new("para-hurwitz-transfer", transfer));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(EntryReport {
        id: entry.id.to_string(),
        field: field.to_string(),
        algebra: entry.algebra.description().to_string(),
        claimed_group: entry.group.to_string(),
        universal_group: ug_text,
        injective,
        checks,
        pass,
    })
}

pub fn verify_entry(id: &str, field: FieldSpec) -> Result<EntryReport> {
    verify_entry_data(&lookup(id)?, field)
}

#[derive(Debug, Clone, Serialize)]
pub struct ListRow {
    pub id: &'static str,
    pub description: &'static str,
    pub algebra: &'static str,
    pub field_condition: String,
    pub claimed_group: &'static str,
    pub coarsening_of: Vec<&'static str>,
}

pub fn list() -> Vec<ListRow> {
    entries()
        .into_iter()
        .map(|e| ListRow {
            id: e.id,
            description: e.description,
            algebra: e.algebra.key(),
            field_condition: e.algebra.condition().to_string(),
            claimed_group: e.group,
            coarsening_of: e.coarsening_of.to_vec(),
        })
        .collect()
}

/// Groups used to test the isomorphism criteria.
pub const ISO_TEST_GROUPS: [&str; 5] = ["Z4", "Z6", "Z2^2", "Z3^2", "Z2 x Z4"];

#[derive(Debug, Clone, Serialize)]
pub struct IsoCase {
    pub left: String,
    pub right: String,
    pub expected: bool,
    /// `explicit`, or a search outcome label
    pub observed: String,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoFamilyReport {
    pub algebra: String,
    pub group: String,
    pub pairs: usize,
    pub positive: usize,
    pub positive_ok: usize,
    pub negative: usize,
    pub negative_proven: usize,
    pub budget_exhausted: usize,
    pub search_nodes: u64,
    /// Pairs where the computation disagrees with the claimed criterion.
    pub counterexamples: Vec<IsoCase>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub field: String,
    pub families: Vec<IsoFamilyReport>,
    pub pass: bool,
}

/// Whether `m` maps every component of `ga` into the component of the same degree in `gb`.
pub fn is_graded_map(alg: &SuperAlgebra, m: &Morphism, ga: &Grading, gb: &Grading) -> bool {
    ga.components().iter().all(|c| match gb.component(&c.degree) {
        Some(d) => {
            let target = d.part.subspace(alg);
            c.part.vectors().all(|v| target.contains(&m.apply(v)))
        }
        None => false,
    })
}

fn elements_of_order_at_most(group: &AbGroup, bound: u64) -> Result<Vec<AbElement>> {
    Ok(group.elements()?.into_iter().filter(|g| g.order().is_some_and(|o| o <= bound)).collect())
}

const ISO_FLAGS: [MorphismFlag; 3] = [MorphismFlag::AlgebraHom, MorphismFlag::Isometry, MorphismFlag::ParityPreserving];

fn named_map(alg: &SuperAlgebra, images: &[(&str, i64, &str)]) -> Morphism {
    let f = alg.field();
    let mut cols: Vec<Vector> = (0..alg.dim()).map(|i| alg.basis(i)).collect();
    for (src, sign, tgt) in images {
        let i = alg.index_of(src).expect("basis name");
        cols[i] = linalg::scale(f.from_int(*sign), &alg.b(tgt));
    }
    Morphism::from_images(f, &cols)
}

/// The isomorphism `Γ(G,g) → Γ(G,-g)`: `u ↦ v`, `v ↦ -u`, extended to the even part.
pub fn negation_map(kind: AlgebraKind, alg: &SuperAlgebra) -> Morphism {
    match kind {
        AlgebraKind::B12 => named_map(alg, &[("u", 1, "v"), ("v", -1, "u")]),
        AlgebraKind::B42 => {
            named_map(alg, &[("u", 1, "v"), ("v", -1, "u"), ("e1", 1, "e2"), ("e2", 1, "e1"), ("x", -1, "y"), ("y", -1, "x")])
        }
        _ => named_map(alg, &[("u1", 1, "v1"), ("v1", 1, "u1"), ("e1", 1, "e2"), ("e2", 1, "e1")]),
    }
}

fn on_basis(alg: &SuperAlgebra, cb: &CanonicalBasis, images: [(i64, usize); 8]) -> Morphism {
    let f = alg.field();
    let src = cb.vectors();
    let binv = Matrix::from_columns(f, alg.dim(), src).inverse().expect("canonical basis is a basis");
    let cols: Vec<Vector> = images.iter().map(|&(s, t)| linalg::scale(f.from_int(s), &src[t])).collect();
    Morphism::linear(Matrix::from_columns(f, alg.dim(), &cols).mul(&binv))
}

/// `u1 ↔ u2`, `v1 ↔ v2`, `u3 ↦ -u3`, `v3 ↦ -v3`: realizes `σ = (12)`.
pub fn swap_map(alg: &SuperAlgebra, cb: &CanonicalBasis) -> Morphism {
    on_basis(alg, cb, [(1, 0), (1, 1), (1, 3), (1, 2), (-1, 4), (1, 6), (1, 5), (-1, 7)])
}

/// `e1 ↔ e2`, `u_i ↔ v_i`: realizes `ε = -1`.
pub fn flip_map(alg: &SuperAlgebra, cb: &CanonicalBasis) -> Morphism {
    on_basis(alg, cb, [(1, 1), (1, 0), (1, 5), (1, 6), (1, 7), (1, 2), (1, 3), (1, 4)])
}

struct Tally {
    report: IsoFamilyReport,
}

impl Tally {
    fn new(algebra: &str, group: &AbGroup) -> Self {
        Tally {
            report: IsoFamilyReport {
                algebra: algebra.to_string(),
                group: group.to_string(),
                pairs: 0,
                positive: 0,
                positive_ok: 0,
                negative: 0,
                negative_proven: 0,
                budget_exhausted: 0,
                search_nodes: 0,
                counterexamples: Vec::new(),
            },
        }
    }

    fn record(&mut self, left: String, right: String, expected: bool, observed: String, isomorphic: Option<bool>) {
        let r = &mut self.report;
        r.pairs += 1;
        let consistent = isomorphic == Some(expected);
        if expected {
            r.positive += 1;
            if consistent {
                r.positive_ok += 1;
            }
        } else {
            r.negative += 1;
            if consistent {
                r.negative_proven += 1;
            }
        }
        if isomorphic.is_none() {
            r.budget_exhausted += 1;
        }
        if !consistent {
            r.counterexamples.push(IsoCase { left, right, expected, observed, consistent });
        }
    }
}

/// `Some(true)` found, `Some(false)` proven none, `None` out of budget.
fn search_iso(alg: &SuperAlgebra, ga: &Grading, gb: &Grading, budget: SearchBudget, nodes: &mut u64) -> Result<(Option<bool>, String)> {
    let rep = search::find_graded_map(alg, ga, alg, gb, MapMode::Isomorphism, budget)?;
    *nodes += rep.nodes;
    let iso = match rep.outcome {
        SearchOutcome::Found(_) => Some(true),
        SearchOutcome::ProvenNone => Some(false),
        SearchOutcome::BudgetExhausted => None,
    };
    Ok((iso, rep.outcome.label().to_string()))
}

fn explicit_ok(alg: &SuperAlgebra, m: &Morphism, ga: &Grading, gb: &Grading) -> bool {
    m.clone().verify(alg, alg, &ISO_FLAGS).is_ok() && is_graded_map(alg, m, ga, gb)
}

/// `Γ(G,g) ≅ Γ(G,h)` exactly when `g = ±h`, on a B(1,2)-like algebra.
fn iso_family_single(kind: AlgebraKind, alg: &SuperAlgebra, group: &AbGroup, budget: SearchBudget) -> Result<IsoFamilyReport> {
    let mut t = Tally::new(kind.key(), group);
    let els = group.elements()?;
    let grade = |g: &AbElement| -> Result<Grading> {
        let grading = if kind == AlgebraKind::B42 {
            Grading::from_basis_degrees(alg, group, &[("u", g.clone()), ("v", g.neg()), ("x", g.times(2)), ("y", g.times(-2))])?
        } else {
            return Ok(gradings::gamma_grading_b12(alg, g)?);
        };
        gradings::validate(alg, &grading).map_err(|v| CatalogError::Invalid(v.to_string()))?;
        Ok(grading)
    };
    let neg = negation_map(kind, alg);
    let id = Morphism::identity(alg);
    let mut nodes = 0;
    for g in &els {
        let ga = grade(g)?;
        for h in &els {
            let gb = grade(h)?;
            let expected = g == h || *g == h.neg();
            let (iso, observed) = if expected {
                let m = if g == h { &id } else { &neg };
                (Some(explicit_ok(alg, m, &ga, &gb)), "explicit".to_string())
            } else {
                search_iso(alg, &ga, &gb, budget, &mut nodes)?
            };
            t.record(g.to_string(), h.to_string(), expected, observed, iso);
        }
    }
    t.report.search_nodes = nodes;
    Ok(t.report)
}

fn explicit_triple_map(alg: &SuperAlgebra, cb: &CanonicalBasis, a: &GradingTriple, b: &GradingTriple) -> Option<Morphism> {
    let id = Morphism::identity(alg);
    let sw = swap_map(alg, cb);
    let fl = flip_map(alg, cb);
    [(a.clone(), id), (a.swapped(), sw.clone()), (a.negated(), fl.clone()), (a.swapped().negated(), fl.compose(&sw))]
        .into_iter()
        .find(|(t, _)| t == b)
        .map(|(_, m)| m)
}

/// `Γ(G,γ) ≅ Γ(G,γ')` exactly when `γ ∼ γ'`, on an 8-dimensional algebra with a canonical basis.
fn iso_family_triples(built: &BuiltAlgebra, group: &AbGroup, budget: SearchBudget) -> Result<IsoFamilyReport> {
    let alg = &built.algebra;
    let cb = built.basis.as_ref().ok_or_else(|| CatalogError::Invalid("no canonical basis".into()))?;
    let mut t = Tally::new(built.kind.key(), group);
    let els = elements_of_order_at_most(group, 4)?;
    let mut triples = Vec::new();
    for g1 in &els {
        for g2 in &els {
            let g3 = g1.add(g2).neg();
            if els.contains(&g3) {
                let tr = GradingTriple::new(g1.clone(), g2.clone(), g3)?;
                let grading = layout_grading_triple(alg, cb, &tr)?;
                if gradings::validate(alg, &grading).is_ok() {
                    triples.push((tr, grading));
                }
            }
        }
    }
    let mut nodes = 0;
    for (a, ga) in &triples {
        for (b, gb) in &triples {
            let expected = gradings::gamma_equiv(a, b);
            let (iso, observed) = match (expected, explicit_triple_map(alg, cb, a, b)) {
                (true, Some(m)) if explicit_ok(alg, &m, ga, gb) => (Some(true), "explicit".to_string()),
                // the explicit map failed; let the search decide
                _ => search_iso(alg, ga, gb, budget, &mut nodes)?,
            };
            t.record(a.to_string(), b.to_string(), expected, observed, iso);
        }
    }
    t.report.search_nodes = nodes;
    Ok(t.report)
}

fn layout_grading_triple(alg: &SuperAlgebra, cb: &CanonicalBasis, gamma: &GradingTriple) -> Result<Grading> {
    let z = gamma.group().zero();
    let g = |i: usize| gamma.get(i).clone();
    let degrees = [z.clone(), z, g(0), g(1), g(2), g(0).neg(), g(1).neg(), g(2).neg()];
    Ok(Grading::from_vector_degrees(alg, gamma.group(), cb.vectors(), &degrees)?)
}

/// Algebras whose isomorphism criterion is tested over a field of the given characteristic.
pub fn iso_algebras(field: FieldSpec) -> Vec<AlgebraKind> {
    match field.characteristic() {
        3 => vec![AlgebraKind::B12, AlgebraKind::B42],
        2 => {
            let mut v = vec![AlgebraKind::SuperQuaternion, AlgebraKind::SuperCayley];
            if FieldCondition::Char2Omega.holds(field) {
                v.push(AlgebraKind::OkuboOmega);
            }
            v
        }
        _ => vec![],
    }
}

pub fn verify_iso_family(kind: AlgebraKind, field: FieldSpec, group: &AbGroup, budget: SearchBudget) -> Result<IsoFamilyReport> {
    let built = build_algebra(kind, field)?;
    match kind {
        AlgebraKind::B12 | AlgebraKind::B42 | AlgebraKind::SuperQuaternion => {
            iso_family_single(kind, &built.algebra, group, budget)
        }
        _ => iso_family_triples(&built, group, budget),
    }
}

/// Run the isomorphism criteria for every algebra applicable to `field` over the test groups.
pub fn verify_iso_theorems(field: FieldSpec, budget: SearchBudget) -> Result<IsoReport> {
    if !field.is_finite() {
        return Err(SearchError::InfiniteField(field.to_string()).into());
    }
    let mut families = Vec::new();
    for kind in iso_algebras(field) {
        for g in ISO_TEST_GROUPS {
            families.push(verify_iso_family(kind, field, &g.parse()?, budget)?);
        }
    }
    let pass = families.iter().all(|f| f.counterexamples.is_empty());
    Ok(IsoReport { field: field.to_string(), families, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn static_ids() {
        let ids: Vec<&str> = LABELED.iter().map(|e| e.id).collect();
        let mut expected: Vec<String> = (1..=7).map(|i| format!("eq{i}")).collect();
        expected.push("cor1eq3".into());
        expected.extend((5..=13).map(|i| format!("cor1eq{i}")));
        expected.extend((1..=12).map(|i| format!("okuboeq{i}")));
        assert_eq!(ids, expected);
        let all = entries();
        assert_eq!(all.len(), 29 + 16);
        let mut uniq: Vec<&str> = all.iter().map(|e| e.id).collect();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), all.len());
        for kind in AlgebraKind::ALL {
            assert!(all.iter().any(|e| e.algebra == kind && e.layout == Layout::Main));
            assert!(all.iter().any(|e| e.algebra == kind && e.layout == Layout::Trivial));
        }
    }

    #[test]
    fn field_conditions() {
        assert!(matches!(build_entry("eq1", FieldSpec::GF2), Err(CatalogError::FieldConditionUnmet { .. })));
        assert!(matches!(build_entry("okuboeq3", FieldSpec::GF2), Err(CatalogError::FieldConditionUnmet { .. })));
        let (_, g) = build_entry("eq2", FieldSpec::GF3).unwrap();
        assert_eq!(g.components().len(), 5);
    }

    #[test]
    fn every_entry_verifies_on_default_field() {
        for e in entries() {
            let f = e.algebra.condition().default_field();
            let r = verify_entry_data(&e, f).unwrap();
            assert!(r.pass, "{}: {:?}", e.id, r.checks);
        }
    }

    #[test]
    fn json_round_trip() {
        for e in entries() {
            for f in e.algebra.condition().test_fields() {
                let (built, g) = build_entry_full(&e, f).unwrap();
                let back = Grading::from_json(&built.algebra, &g.to_json(&built.algebra)).unwrap();
                assert!(back.same_as(&built.algebra, &g), "{} over {f}", e.id);
            }
        }
    }

    #[test]
    fn wrong_group_is_reported() {
        let mut e = lookup("eq4").unwrap();
        e.group = "Z4";
        let r = verify_entry_data(&e, FieldSpec::GF3).unwrap();
        assert!(!r.pass);
        assert!(r.checks.iter().any(|c| c.name == "universal-group" && !c.pass));
    }

    #[test]
    fn okubo_k_phi_is_order_three() {
        let b = build_algebra(AlgebraKind::OkuboK, FieldSpec::GF2).unwrap();
        let phi = b.phi.unwrap();
        assert!(!phi.is_identity());
        assert!(phi.pow(3).is_identity());
    }

    #[test]
    fn b12_iso_over_gf3() {
        let r = verify_iso_family(AlgebraKind::B12, FieldSpec::GF3, &AbGroup::cyclic(4), SearchBudget::default()).unwrap();
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        assert_eq!(r.positive, 4 + 2);
    }
}
