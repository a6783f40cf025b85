//! Abelian group gradings compatible with the parity of a superalgebra.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{presentation_to_group, AbElement, AbGroup, AbHom, AbelianError};
use crate::constructions::CanonicalBasis;
use crate::fields::Scalar;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::superalgebra::SuperAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("triple does not sum to zero")]
    TripleNotZeroSum,
    #[error("support of size {0} is too large to enumerate coarsenings")]
    SupportTooLarge(usize),
    #[error("degree {0} is not in the grading group")]
    WrongGroup(String),
    #[error("invalid grading: {0}")]
    Invalid(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

type Result<T> = std::result::Result<T, GradingError>;

/// A subspace given by parity-homogeneous basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub even: Vec<Vector>,
    pub odd: Vec<Vector>,
}

impl Part {
    pub fn new(even: Vec<Vector>, odd: Vec<Vector>) -> Self {
        Part { even, odd }
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.even.iter().chain(self.odd.iter())
    }

    pub fn subspace(&self, alg: &SuperAlgebra) -> Subspace {
        Subspace::span(alg.field(), alg.dim(), &self.vectors().cloned().collect::<Vec<_>>())
    }

    fn merge(&self, other: &Part) -> Part {
        let mut p = self.clone();
        p.even.extend(other.even.iter().cloned());
        p.odd.extend(other.odd.iter().cloned());
        p
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub degree: AbElement,
    pub part: Part,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    group: AbGroup,
    components: Vec<Component>,
}

/// Sort key for subspaces.
fn subspace_key(s: &Subspace) -> String {
    format!("{:?}", s.basis())
}

impl Grading {
    /// Components with equal degree are merged; zero components are dropped.
    pub fn new(group: AbGroup, components: Vec<Component>) -> Result<Self> {
        let mut merged: Vec<Component> = Vec::new();
        for c in components {
            if c.degree.group() != &group {
                return Err(GradingError::WrongGroup(c.degree.to_string()));
            }
            if c.part.dim() == 0 {
                continue;
            }
            match merged.iter_mut().find(|m| m.degree == c.degree) {
                Some(m) => m.part = m.part.merge(&c.part),
                None => merged.push(c),
            }
        }
        Ok(Grading { group, components: merged })
    }

    /// Grading assigning `degrees[i]` to `vectors[i]`.
    pub fn from_vector_degrees(alg: &SuperAlgebra, group: &AbGroup, vectors: &[Vector], degrees: &[AbElement]) -> Result<Self> {
        let comps = vectors
            .iter()
            .zip(degrees)
            .map(|(v, d)| {
                let part = match alg.homogeneous_parity(v) {
                    Some(true) => Part::new(vec![], vec![v.clone()]),
                    Some(false) => Part::new(vec![v.clone()], vec![]),
                    None => return Err(GradingError::Invalid(format!("{} is not homogeneous", alg.format(v)))),
                };
                Ok(Component { degree: d.clone(), part })
            })
            .collect::<Result<Vec<_>>>()?;
        Grading::new(group.clone(), comps)
    }

    /// Grading on the coordinate basis, degrees given per basis name.
    pub fn from_basis_degrees(alg: &SuperAlgebra, group: &AbGroup, degrees: &[(&str, AbElement)]) -> Result<Self> {
        let mut all = vec![group.zero(); alg.dim()];
        for (name, d) in degrees {
            let i = alg.index_of(name).ok_or_else(|| GradingError::Invalid(format!("no basis element {name}")))?;
            all[i] = d.clone();
        }
        let vectors: Vec<Vector> = (0..alg.dim()).map(|i| alg.basis(i)).collect();
        Grading::from_vector_degrees(alg, group, &vectors, &all)
    }

    pub fn trivial(alg: &SuperAlgebra) -> Self {
        let group = AbGroup::trivial();
        let part = Part::new(
            alg.even_indices().iter().map(|&i| alg.basis(i)).collect(),
            alg.odd_indices().iter().map(|&i| alg.basis(i)).collect(),
        );
        Grading::new(group.clone(), vec![Component { degree: group.zero(), part }]).expect("trivial grading")
    }

    /// The `Z2`-grading by parity.
    pub fn main(alg: &SuperAlgebra) -> Self {
        let group = AbGroup::cyclic(2);
        let even = Part::new(alg.even_indices().iter().map(|&i| alg.basis(i)).collect(), vec![]);
        let odd = Part::new(vec![], alg.odd_indices().iter().map(|&i| alg.basis(i)).collect());
        Grading::new(
            group.clone(),
            vec![Component { degree: group.zero(), part: even }, Component { degree: group.element(&[1]), part: odd }],
        )
        .expect("main grading")
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, g: &AbElement) -> Option<&Component> {
        self.components.iter().find(|c| &c.degree == g)
    }

    pub fn support(&self) -> Vec<AbElement> {
        self.components.iter().map(|c| c.degree.clone()).collect()
    }

    pub fn parts(&self) -> Vec<Part> {
        self.components.iter().map(|c| c.part.clone()).collect()
    }

    /// Component subspaces, sorted so that equal decompositions compare equal.
    pub fn decomposition_key(&self, alg: &SuperAlgebra) -> Vec<Subspace> {
        decomposition_key(alg, &self.parts())
    }

    /// Same components with the same degrees, regardless of order.
    pub fn same_as(&self, alg: &SuperAlgebra, other: &Grading) -> bool {
        self.group == other.group
            && self.components.len() == other.components.len()
            && self.components.iter().all(|c| {
                other.component(&c.degree).map(|d| d.part.subspace(alg) == c.part.subspace(alg)).unwrap_or(false)
            })
    }

    pub fn to_json(&self, alg: &SuperAlgebra) -> GradingJson {
        GradingJson {
            group: self.group.to_string(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    degree: c.degree.to_string(),
                    parity: c.part.even.iter().map(|_| 0).chain(c.part.odd.iter().map(|_| 1)).collect(),
                    basis: c.part.vectors().map(|v| alg.format(v)).collect(),
                })
                .collect(),
        }
    }

    /// Read a grading written by [`Grading::to_json`]; `parity` is ignored.
    pub fn from_json(alg: &SuperAlgebra, j: &GradingJson) -> Result<Self> {
        let group: AbGroup = j.group.parse()?;
        let mut vectors = Vec::new();
        let mut degrees = Vec::new();
        for c in &j.components {
            let d = group.parse_element(&c.degree)?;
            for b in &c.basis {
                vectors.push(alg.parse_element(b).map_err(|e| GradingError::Invalid(e.to_string()))?);
                degrees.push(d.clone());
            }
        }
        Grading::from_vector_degrees(alg, &group, &vectors, &degrees)
    }

    pub fn describe(&self, alg: &SuperAlgebra) -> String {
        let mut s = format!("{}-grading:", self.group);
        for c in &self.components {
            let names: Vec<String> = c.part.vectors().map(|v| alg.format(v)).collect();
            s.push_str(&format!(" [{}: {}]", c.degree, names.join(", ")));
        }
        s
    }
}

fn decomposition_key(alg: &SuperAlgebra, parts: &[Part]) -> Vec<Subspace> {
    let mut v: Vec<Subspace> = parts.iter().map(|p| p.subspace(alg)).collect();
    v.sort_by_key(subspace_key);
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub degree: String,
    #[serde(default)]
    pub parity: Vec<u8>,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingJson {
    pub group: String,
    pub components: Vec<ComponentJson>,
}

/// Where a validation failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingViolation {
    NotDirectSum,
    RepeatedDegree(String),
    NotHomogeneous(String),
    Product { g: String, h: String, product: String },
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingViolation::NotDirectSum => write!(f, "components do not form a direct sum decomposition"),
            GradingViolation::RepeatedDegree(d) => write!(f, "degree {d} repeated"),
            GradingViolation::NotHomogeneous(v) => write!(f, "{v} is stored with the wrong parity"),
            GradingViolation::Product { g, h, product } => write!(f, "{product} in A^{g} A^{h} leaves A^({g}+{h})"),
        }
    }
}

/// Coordinates with respect to the concatenated part bases, with the part of each coordinate.
struct PartCoords {
    inverse: Matrix,
    owner: Vec<usize>,
}

impl PartCoords {
    fn new(alg: &SuperAlgebra, parts: &[Part]) -> Option<Self> {
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            for v in p.vectors() {
                cols.push(v.clone());
                owner.push(k);
            }
        }
        if cols.len() != alg.dim() {
            return None;
        }
        let inverse = Matrix::from_columns(alg.field(), alg.dim(), &cols).inverse()?;
        Some(PartCoords { inverse, owner })
    }

    /// Parts on which `v` has a nonzero projection.
    fn parts_of(&self, v: &[Scalar]) -> Vec<usize> {
        let c = self.inverse.apply(v);
        let mut out: Vec<usize> = c.iter().zip(&self.owner).filter(|(x, _)| !x.is_zero()).map(|(_, &k)| k).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn check_parities(alg: &SuperAlgebra, parts: &[Part]) -> std::result::Result<(), GradingViolation> {
    for p in parts {
        for v in &p.even {
            if !alg.is_even_element(v) {
                return Err(GradingViolation::NotHomogeneous(alg.format(v)));
            }
        }
        for v in &p.odd {
            if !alg.is_odd_element(v) {
                return Err(GradingViolation::NotHomogeneous(alg.format(v)));
            }
        }
    }
    Ok(())
}

/// Direct sum, distinct degrees, parity and `A^g A^h ⊆ A^(g+h)`.
pub fn validate(alg: &SuperAlgebra, grading: &Grading) -> std::result::Result<(), GradingViolation> {
    let parts = grading.parts();
    check_parities(alg, &parts)?;
    let coords = PartCoords::new(alg, &parts).ok_or(GradingViolation::NotDirectSum)?;
    let comps = grading.components();
    for (i, c) in comps.iter().enumerate() {
        if comps[..i].iter().any(|d| d.degree == c.degree) {
            return Err(GradingViolation::RepeatedDegree(c.degree.to_string()));
        }
    }
    for a in comps {
        for b in comps {
            let target = a.degree.add(&b.degree);
            let allowed = comps.iter().position(|c| c.degree == target);
            for x in a.part.vectors() {
                for y in b.part.vectors() {
                    let p = alg.mul(x, y);
                    let owners = coords.parts_of(&p);
                    let ok = owners.is_empty() || (owners.len() == 1 && Some(owners[0]) == allowed);
                    if !ok {
                        return Err(GradingViolation::Product {
                            g: a.degree.to_string(),
                            h: b.degree.to_string(),
                            product: alg.format(&p),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Universal group of a set-grading together with the degrees of its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalGroup {
    pub group: AbGroup,
    pub degrees: Vec<AbElement>,
    /// Distinct parts receive distinct degrees.
    pub injective: bool,
}

/// Relations `s1 + s2 = s3` whenever `0 ≠ A^s1 A^s2 ⊆ A^s3`, or `None` if some product
/// meets more than one part (not a set-grading) or the parts are not a decomposition.
pub fn set_grading_relations(alg: &SuperAlgebra, parts: &[Part]) -> Option<Vec<(usize, usize, usize)>> {
    check_parities(alg, parts).ok()?;
    let coords = PartCoords::new(alg, parts)?;
    let mut rel = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            let mut target: Option<usize> = None;
            for x in a.vectors() {
                for y in b.vectors() {
                    for k in coords.parts_of(&alg.mul(x, y)) {
                        match target {
                            None => target = Some(k),
                            Some(t) if t == k => {}
                            Some(_) => return None,
                        }
                    }
                }
            }
            if let Some(k) = target {
                rel.push((i, j, k));
            }
        }
    }
    Some(rel)
}

/// Universal group of a decomposition, if it is a set-grading.
pub fn universal_group_of_parts(alg: &SuperAlgebra, parts: &[Part]) -> Option<UniversalGroup> {
    let rel = set_grading_relations(alg, parts)?;
    let n = parts.len();
    let rows: Vec<Vec<i64>> = rel
        .iter()
        .map(|&(i, j, k)| {
            let mut r = vec![0i64; n];
            r[i] += 1;
            r[j] += 1;
            r[k] -= 1;
            r
        })
        .collect();
    let (group, degrees) = presentation_to_group(n, &rows);
    let injective = (0..n).all(|i| (0..i).all(|j| degrees[i] != degrees[j]));
    Some(UniversalGroup { group, degrees, injective })
}

pub fn universal_group(alg: &SuperAlgebra, grading: &Grading) -> UniversalGroup {
    universal_group_of_parts(alg, &grading.parts()).expect("valid grading is a set-grading")
}

/// The decomposition regraded by its universal group, if that is injective.
pub fn realize(alg: &SuperAlgebra, parts: &[Part]) -> Option<Grading> {
    let ug = universal_group_of_parts(alg, parts)?;
    if !ug.injective {
        return None;
    }
    let comps = parts.iter().zip(&ug.degrees).map(|(p, d)| Component { degree: d.clone(), part: p.clone() }).collect();
    Grading::new(ug.group, comps).ok()
}

/// Grading induced by a homomorphism of the grading group.
pub fn induce(grading: &Grading, alpha: &AbHom) -> Result<Grading> {
    if alpha.source() != grading.group() {
        return Err(GradingError::WrongGroup(alpha.source().to_string()));
    }
    let comps = grading
        .components()
        .iter()
        .map(|c| Ok(Component { degree: alpha.apply(&c.degree)?, part: c.part.clone() }))
        .collect::<Result<Vec<_>>>()?;
    Grading::new(alpha.target().clone(), comps)
}

/// Every component of `fine` lies inside a component of `coarse`.
pub fn is_refinement(alg: &SuperAlgebra, fine: &Grading, coarse: &Grading) -> bool {
    let coarse_spaces: Vec<Subspace> = coarse.components().iter().map(|c| c.part.subspace(alg)).collect();
    fine.components()
        .iter()
        .all(|c| coarse_spaces.iter().any(|s| s.contains_subspace(&c.part.subspace(alg))))
}

/// Set partitions of `0..n` in restricted-growth order.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut blocks = vec![Vec::new(); max];
            for (k, &l) in labels.iter().enumerate() {
                blocks[l].push(k);
            }
            out.push(blocks);
            return;
        }
        for l in 0..=max {
            labels.push(l);
            rec(i + 1, n, labels, max.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

pub const MAX_COARSENING_SUPPORT: usize = 8;

/// All coarsenings realized over their universal groups, the grading itself included.
pub fn coarsenings(alg: &SuperAlgebra, grading: &Grading) -> Result<Vec<Grading>> {
    let n = grading.components().len();
    if n > MAX_COARSENING_SUPPORT {
        return Err(GradingError::SupportTooLarge(n));
    }
    let parts = grading.parts();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        let merged: Vec<Part> = blocks
            .iter()
            .map(|b| b[1..].iter().fold(parts[b[0]].clone(), |acc, &k| acc.merge(&parts[k])))
            .collect();
        if let Some(g) = realize(alg, &merged) {
            if seen.insert(decomposition_key(alg, &merged)) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// `(g1, g2, g3)` with `g1 + g2 + g3 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingTriple {
    g: [AbElement; 3],
}

impl GradingTriple {
    pub fn new(g1: AbElement, g2: AbElement, g3: AbElement) -> Result<Self> {
        if g1.group() != g2.group() || g2.group() != g3.group() {
            return Err(GradingError::WrongGroup(g2.group().to_string()));
        }
        if !g1.add(&g2).add(&g3).is_zero() {
            return Err(GradingError::TripleNotZeroSum);
        }
        Ok(GradingTriple { g: [g1, g2, g3] })
    }

    /// Triple from coordinates in `group`.
    pub fn from_coords(group: &AbGroup, g: [&[i64]; 3]) -> Result<Self> {
        GradingTriple::new(group.element(g[0]), group.element(g[1]), group.element(g[2]))
    }

    pub fn group(&self) -> &AbGroup {
        self.g[0].group()
    }

    pub fn get(&self, i: usize) -> &AbElement {
        &self.g[i]
    }

    pub fn swapped(&self) -> Self {
        GradingTriple { g: [self.g[1].clone(), self.g[0].clone(), self.g[2].clone()] }
    }

    pub fn negated(&self) -> Self {
        GradingTriple { g: [self.g[0].neg(), self.g[1].neg(), self.g[2].neg()] }
    }
}

impl fmt::Display for GradingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.g[0], self.g[1], self.g[2])
    }
}

/// `γ' = (ε g_σ(1), ε g_σ(2), ε g3)` for some transposition-or-identity σ and sign ε.
pub fn gamma_equiv(a: &GradingTriple, b: &GradingTriple) -> bool {
    [a.clone(), a.swapped(), a.negated(), a.swapped().negated()].iter().any(|t| t == b)
}

/// `deg 1 = 0`, `deg u = g`, `deg v = -g` on `B(1,2)` or on a 4-dimensional canonical basis.
pub fn gamma_grading_b12(alg: &SuperAlgebra, g: &AbElement) -> Result<Grading> {
    let group = g.group().clone();
    let grading = if alg.index_of("u").is_some() {
        Grading::from_basis_degrees(alg, &group, &[("u", g.clone()), ("v", g.neg())])?
    } else {
        Grading::from_basis_degrees(alg, &group, &[("u1", g.clone()), ("v1", g.neg())])?
    };
    validate(alg, &grading).map_err(|e| GradingError::Invalid(e.to_string()))?;
    Ok(grading)
}

/// `deg e_j = 0`, `deg u_i = g_i`, `deg v_i = -g_i` on a canonical basis of dimension 8.
pub fn gamma_grading_dim8(alg: &SuperAlgebra, cb: &CanonicalBasis, gamma: &GradingTriple) -> Result<Grading> {
    if cb.dim() != 8 {
        return Err(GradingError::Invalid("needs an 8-dimensional canonical basis".into()));
    }
    let z = gamma.group().zero();
    let g = |i: usize| gamma.get(i).clone();
    let degrees = [z.clone(), z, g(0), g(1), g(2), g(0).neg(), g(1).neg(), g(2).neg()];
    let grading = Grading::from_vector_degrees(alg, gamma.group(), cb.vectors(), &degrees)?;
    validate(alg, &grading).map_err(|e| GradingError::Invalid(e.to_string()))?;
    Ok(grading)
}

/// `b(A^g, A^h) = 0` unless `g + h = 0`, and `b` pairs `A^g` with `A^-g` nondegenerately.
pub fn check_orthogonality(alg: &SuperAlgebra, grading: &Grading) -> std::result::Result<(), String> {
    let comps = grading.components();
    for a in comps {
        let mut paired = false;
        for b in comps {
            let sum = a.degree.add(&b.degree);
            let rows: Vec<Vector> = a.part.vectors().map(|x| b.part.vectors().map(|y| alg.eval_b(x, y)).collect()).collect();
            let m = Matrix::from_rows(alg.field(), b.part.dim(), &rows);
            if sum.is_zero() {
                if a.part.dim() != b.part.dim() || m.det().is_zero() {
                    return Err(format!("b does not pair degree {} with {}", a.degree, b.degree));
                }
                paired = true;
            } else if !m.is_zero() {
                return Err(format!("b(A^{}, A^{}) != 0", a.degree, b.degree));
            }
        }
        if !paired {
            return Err(format!("degree {} has no partner of opposite degree", a.degree));
        }
    }
    Ok(())
}

/// Degree and subspace of each component.
pub fn component_spaces(alg: &SuperAlgebra, grading: &Grading) -> Vec<(AbElement, Subspace)> {
    grading.components().iter().map(|c| (c.degree.clone(), c.part.subspace(alg))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as cons;
    use crate::fields::FieldSpec;

    fn z() -> AbGroup {
        AbGroup::free(1)
    }

    fn eq2(b: &SuperAlgebra) -> Grading {
        let z = z();
        let d = |k: i64| z.element(&[k]);
        Grading::from_basis_degrees(b, &z, &[("u", d(1)), ("v", d(-1)), ("x", d(2)), ("y", d(-2))]).unwrap()
    }

    #[test]
    fn b12_and_b42_gradings() {
        let f = FieldSpec::GF3;
        let b = cons::b12(f).unwrap();
        let g = gamma_grading_b12(&b, &z().element(&[1])).unwrap();
        assert_eq!(validate(&b, &g), Ok(()));
        let bad = Grading::from_basis_degrees(&b, &z(), &[("u", z().element(&[1])), ("v", z().element(&[1]))]).unwrap();
        assert!(matches!(validate(&b, &bad), Err(GradingViolation::Product { .. })));
        let ug = universal_group(&b, &g);
        assert_eq!(ug.group.to_string(), "Z");
        let b42 = cons::b42(f).unwrap();
        let g2 = eq2(&b42);
        assert_eq!(validate(&b42, &g2), Ok(()));
        assert_eq!(g2.support().len(), 5);
        let ug = universal_group(&b42, &g2);
        assert!(ug.injective);
        assert_eq!(ug.group, AbGroup::free(1));
        assert!(check_orthogonality(&b42, &g2).is_ok());
    }

    #[test]
    fn b42_coarsenings() {
        let b42 = cons::b42(FieldSpec::GF3).unwrap();
        let g2 = eq2(&b42);
        let cs = coarsenings(&b42, &g2).unwrap();
        let mut groups: Vec<String> = cs.iter().map(|g| g.group().to_string()).collect();
        groups.sort();
        assert_eq!(groups, vec!["0", "Z", "Z2", "Z3", "Z4"]);
        for c in &cs {
            assert!(is_refinement(&b42, &g2, c));
        }
        let z4 = cs.iter().find(|g| g.group().to_string() == "Z4").unwrap();
        let z3 = cs.iter().find(|g| g.group().to_string() == "Z3").unwrap();
        assert!(!is_refinement(&b42, z4, z3));
        let b = cons::b12(FieldSpec::GF3).unwrap();
        let g1 = gamma_grading_b12(&b, &z().element(&[1])).unwrap();
        assert_eq!(coarsenings(&b, &g1).unwrap().len(), 3);
        assert_eq!(coarsenings(&b, &Grading::trivial(&b)).unwrap().len(), 1);
    }

    #[test]
    fn induced_gradings() {
        let f = FieldSpec::GF2;
        let (c, cb) = cons::split_hurwitz(8, f).unwrap();
        let z2 = AbGroup::free(2);
        let cartan = GradingTriple::from_coords(&z2, [&[1, 0], &[0, 1], &[-1, -1]]).unwrap();
        let g = gamma_grading_dim8(&c, &cb, &cartan).unwrap();
        assert_eq!(universal_group(&c, &g).group, z2);
        let alpha = AbHom::from_matrix(&z2, &z(), &[vec![1, 1]]).unwrap();
        let induced = induce(&g, &alpha).unwrap();
        let expected = gamma_grading_dim8(&c, &cb, &GradingTriple::from_coords(&z(), [&[1], &[1], &[-2]]).unwrap()).unwrap();
        assert!(induced.same_as(&c, &expected));
        let zero = AbHom::from_matrix(&z2, &AbGroup::trivial(), &[]).unwrap();
        assert_eq!(induce(&g, &zero).unwrap().components().len(), 1);
        assert!(induce(&g, &AbHom::identity(&z2)).unwrap().same_as(&c, &g));
        let b = cons::b12(FieldSpec::GF3).unwrap();
        let g1 = gamma_grading_b12(&b, &z().element(&[1])).unwrap();
        let to_z2 = AbHom::from_matrix(&z(), &AbGroup::cyclic(2), &[vec![1]]).unwrap();
        assert!(induce(&g1, &to_z2).unwrap().same_as(&b, &Grading::main(&b)));
    }

    #[test]
    fn triples() {
        let zz = z();
        let t = GradingTriple::from_coords(&zz, [&[1], &[1], &[-2]]).unwrap();
        assert!(gamma_equiv(&t, &t.swapped()));
        assert!(gamma_equiv(&t, &t.negated()));
        let t2 = GradingTriple::from_coords(&zz, [&[1], &[-2], &[1]]).unwrap();
        assert!(!gamma_equiv(&t, &t2));
        assert_eq!(GradingTriple::from_coords(&zz, [&[1], &[1], &[1]]), Err(GradingError::TripleNotZeroSum));
        let (sc, scb) = cons::super_split_cayley(FieldSpec::GF2).unwrap();
        let k = AbGroup::product_of_cyclic(&[2, 2]);
        let t = GradingTriple::from_coords(&k, [&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(gamma_grading_dim8(&sc, &scb, &t).is_ok());
        let zero = GradingTriple::from_coords(&k, [&[0, 0], &[0, 0], &[0, 0]]).unwrap();
        assert_eq!(gamma_grading_dim8(&sc, &scb, &zero).unwrap().components().len(), 1);
    }

    #[test]
    fn partitions_count() {
        assert_eq!(set_partitions(7).len(), 877);
        assert_eq!(set_partitions(1).len(), 1);
    }
}
