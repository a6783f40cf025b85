//! Backtracking searches over finite fields: graded isomorphisms, automorphisms,
//! grading enumeration and refinement checks.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::axioms;
use crate::fields::{FieldSpec, Scalar};
use crate::gradings::{self, Grading, Part};
use crate::linalg::{self, Matrix, PairedEchelon, Subspace, Vector};
use crate::superalgebra::{Morphism, MorphismFlag, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search needs a finite field, got {0}")]
    InfiniteField(String),
    #[error("algebras have different dimensions")]
    DimensionMismatch,
    #[error("dimension {0} is too large for exhaustive enumeration")]
    DimensionTooLarge(usize),
    #[error("node budget exhausted after {0} nodes")]
    BudgetExhausted(u64),
}

type Result<T> = std::result::Result<T, SearchError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 2_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapMode {
    /// Components go to components.
    Equivalence,
    /// Components go to components of the same degree.
    Isomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Morphism),
    ProvenNone,
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::ProvenNone => "proven-none",
            SearchOutcome::BudgetExhausted => "budget-exhausted",
        }
    }

    pub fn found(&self) -> Option<&Morphism> {
        match self {
            SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

fn need_finite(field: FieldSpec) -> Result<()> {
    if field.is_finite() {
        Ok(())
    } else {
        Err(SearchError::InfiniteField(field.to_string()))
    }
}

/// Which component each vector of a graded algebra lies in.
struct Locator {
    inverse: Matrix,
    owner: Vec<usize>,
}

impl Locator {
    fn new(alg: &SuperAlgebra, parts: &[Part]) -> Self {
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (k, p) in parts.iter().enumerate() {
            for v in p.vectors() {
                cols.push(v.clone());
                owner.push(k);
            }
        }
        let inverse = Matrix::from_columns(alg.field(), alg.dim(), &cols).inverse().expect("grading is a direct sum");
        Locator { inverse, owner }
    }

    /// The unique component containing a nonzero `v`, if there is one.
    fn locate(&self, v: &[Scalar]) -> Option<usize> {
        let c = self.inverse.apply(v);
        let mut found = None;
        for (x, &k) in c.iter().zip(&self.owner) {
            if !x.is_zero() {
                match found {
                    None => found = Some(k),
                    Some(j) if j == k => {}
                    Some(_) => return None,
                }
            }
        }
        found
    }
}

struct Side<'a> {
    alg: &'a SuperAlgebra,
    parts: Vec<Part>,
    locator: Locator,
}

impl<'a> Side<'a> {
    fn new(alg: &'a SuperAlgebra, grading: &Grading) -> Self {
        let parts = grading.parts();
        let locator = Locator::new(alg, &parts);
        Side { alg, parts, locator }
    }

    fn dims(&self, k: usize) -> (usize, usize) {
        (self.parts[k].even.len(), self.parts[k].odd.len())
    }
}

#[derive(Clone)]
struct State {
    pairs: Vec<(Vector, Vector)>,
    domain: PairedEchelon,
    images: PairedEchelon,
    sigma: Vec<Option<usize>>,
    used: Vec<bool>,
}

struct Engine<'a> {
    src: Side<'a>,
    tgt: Side<'a>,
    /// Graded basis of the source in search order.
    generators: Vec<(Vector, usize)>,
    /// Nonzero candidates per target component and parity.
    candidates: Vec<[Vec<Vector>; 2]>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
}

impl<'a> Engine<'a> {
    fn new(a: &'a SuperAlgebra, ga: &Grading, b: &'a SuperAlgebra, gb: &Grading, budget: SearchBudget) -> Self {
        let src = Side::new(a, ga);
        let tgt = Side::new(b, gb);
        let mut generators: Vec<(Vector, usize)> = Vec::new();
        for odd in [false, true] {
            for (k, p) in src.parts.iter().enumerate() {
                let vs = if odd { &p.odd } else { &p.even };
                generators.extend(vs.iter().map(|v| (v.clone(), k)));
            }
        }
        let f = b.field();
        let candidates = tgt
            .parts
            .iter()
            .map(|p| {
                let span = |vs: &[Vector]| -> Vec<Vector> {
                    Subspace::span(f, b.dim(), vs).elements().into_iter().filter(|v| !linalg::is_zero(v)).collect()
                };
                [span(&p.even), span(&p.odd)]
            })
            .collect();
        Engine { src, tgt, generators, candidates, budget: budget.max_nodes, nodes: 0, exhausted: false }
    }

    fn initial_state(&self, sigma: Vec<Option<usize>>) -> State {
        let f = self.src.alg.field();
        let mut used = vec![false; self.tgt.parts.len()];
        for t in sigma.iter().flatten() {
            used[*t] = true;
        }
        State { pairs: Vec::new(), domain: PairedEchelon::new(f), images: PairedEchelon::new(f), sigma, used }
    }

    /// Add `v -> w` and everything it forces through products; false on contradiction.
    fn insert(&self, state: &mut State, v: Vector, w: Vector) -> bool {
        let (a, b) = (self.src.alg, self.tgt.alg);
        let n = b.dim();
        let mut queue = vec![(v, w)];
        while let Some((v, w)) = queue.pop() {
            if let Some(known) = state.domain.evaluate(&v, n) {
                if known != w {
                    return false;
                }
                continue;
            }
            let pv = a.homogeneous_parity(&v);
            if pv.is_none() || pv != b.homogeneous_parity(&w) {
                return false;
            }
            let (Some(s), Some(t)) = (self.src.locator.locate(&v), self.tgt.locator.locate(&w)) else {
                return false;
            };
            match state.sigma[s] {
                Some(t0) if t0 != t => return false,
                Some(_) => {}
                None => {
                    if state.used[t] || self.src.dims(s) != self.tgt.dims(t) {
                        return false;
                    }
                    state.sigma[s] = Some(t);
                    state.used[t] = true;
                }
            }
            if pv == Some(false) && a.q0_even(&v) != b.q0_even(&w) {
                return false;
            }
            if a.eval_b(&v, &v) != b.eval_b(&w, &w) {
                return false;
            }
            for (p, fp) in &state.pairs {
                if a.eval_b(&v, p) != b.eval_b(&w, fp) || a.eval_b(p, &v) != b.eval_b(fp, &w) {
                    return false;
                }
            }
            if !state.images.insert(&w, &[]) {
                return false;
            }
            state.domain.insert(&v, &w);
            state.pairs.push((v.clone(), w.clone()));
            for (p, fp) in &state.pairs {
                queue.push((a.mul(p, &v), b.mul(fp, &w)));
                queue.push((a.mul(&v, p), b.mul(&w, fp)));
            }
        }
        true
    }

    fn morphism(&self, state: &State) -> Morphism {
        let (a, b) = (self.src.alg, self.tgt.alg);
        let images: Vec<Vector> =
            (0..a.dim()).map(|i| state.domain.evaluate(&a.basis(i), b.dim()).expect("complete assignment")).collect();
        Morphism::from_images(a.field(), &images)
    }

    fn accept(&self, state: &State) -> Option<Morphism> {
        let m = self.morphism(state);
        let m = m
            .verify(
                self.src.alg,
                self.tgt.alg,
                &[MorphismFlag::AlgebraHom, MorphismFlag::Isometry, MorphismFlag::ParityPreserving],
            )
            .ok()?;
        m.matrix().inverse()?;
        Some(m)
    }

    /// Depth-first search; `sink` returns false to stop.
    fn dfs(&mut self, state: State, sink: &mut dyn FnMut(Morphism) -> bool) -> bool {
        let next = self.generators.iter().position(|(g, _)| state.domain.evaluate(g, 0).is_none());
        let Some(idx) = next else {
            return match self.accept(&state) {
                Some(m) => sink(m),
                None => true,
            };
        };
        let (g, s) = self.generators[idx].clone();
        let parity = usize::from(self.src.alg.is_odd_element(&g) && !linalg::is_zero(&g));
        let targets: Vec<usize> = match state.sigma[s] {
            Some(t) => vec![t],
            None => (0..self.tgt.parts.len())
                .filter(|&t| !state.used[t] && self.src.dims(s) == self.tgt.dims(t))
                .collect(),
        };
        for t in targets {
            for ci in 0..self.candidates[t][parity].len() {
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.exhausted = true;
                    return false;
                }
                let w = self.candidates[t][parity][ci].clone();
                let mut child = state.clone();
                if self.insert(&mut child, g.clone(), w) && !self.dfs(child, sink) {
                    return false;
                }
            }
        }
        true
    }

    /// Seed with unit or unique para-unit.
    fn seed(&self, state: &mut State) -> bool {
        let (a, b) = (self.src.alg, self.tgt.alg);
        match (a.unit(), b.unit()) {
            (Some(x), Some(y)) => return self.insert(state, x.clone(), y.clone()),
            (None, None) => {}
            _ => return false,
        }
        if let (Ok(pa), Ok(pb)) = (axioms::find_para_units(a), axioms::find_para_units(b)) {
            if pa.len() != pb.len() {
                return false;
            }
            if pa.len() == 1 {
                return self.insert(state, pa[0].clone(), pb[0].clone());
            }
        }
        true
    }
}

/// Degrees, component dimensions and the zero pattern of component products agree.
fn same_graded_invariants(a: &SuperAlgebra, ga: &Grading, b: &SuperAlgebra, gb: &Grading) -> Option<Vec<Option<usize>>> {
    if ga.group() != gb.group() || ga.components().len() != gb.components().len() {
        return None;
    }
    let mut sigma = Vec::new();
    for c in ga.components() {
        let t = gb.components().iter().position(|d| d.degree == c.degree)?;
        let d = &gb.components()[t];
        if (c.part.even.len(), c.part.odd.len()) != (d.part.even.len(), d.part.odd.len()) {
            return None;
        }
        sigma.push(Some(t));
    }
    let zero = |alg: &SuperAlgebra, p: &Part, q: &Part| p.vectors().all(|x| q.vectors().all(|y| linalg::is_zero(&alg.mul(x, y))));
    for (i, ci) in ga.components().iter().enumerate() {
        for (j, cj) in ga.components().iter().enumerate() {
            let (ti, tj) = (sigma[i]?, sigma[j]?);
            if zero(a, &ci.part, &cj.part) != zero(b, &gb.components()[ti].part, &gb.components()[tj].part) {
                return None;
            }
        }
    }
    Some(sigma)
}

/// A verified isomorphism of superalgebras carrying the components of `ga` onto those of `gb`.
pub fn find_graded_map(
    a: &SuperAlgebra,
    ga: &Grading,
    b: &SuperAlgebra,
    gb: &Grading,
    mode: MapMode,
    budget: SearchBudget,
) -> Result<SearchReport> {
    need_finite(a.field())?;
    if a.dim() != b.dim() || a.field() != b.field() {
        return Err(SearchError::DimensionMismatch);
    }
    let none = SearchReport { outcome: SearchOutcome::ProvenNone, nodes: 0 };
    let sigma = match mode {
        MapMode::Isomorphism => match same_graded_invariants(a, ga, b, gb) {
            Some(s) => s,
            None => return Ok(none),
        },
        MapMode::Equivalence => {
            if ga.components().len() != gb.components().len() {
                return Ok(none);
            }
            vec![None; ga.components().len()]
        }
    };
    let mut engine = Engine::new(a, ga, b, gb, budget);
    let mut state = engine.initial_state(sigma);
    if !engine.seed(&mut state) {
        return Ok(none);
    }
    let mut found = None;
    engine.dfs(state, &mut |m| {
        found = Some(m);
        false
    });
    let outcome = match (found, engine.exhausted) {
        (Some(m), _) => SearchOutcome::Found(m),
        (None, true) => SearchOutcome::BudgetExhausted,
        (None, false) => SearchOutcome::ProvenNone,
    };
    Ok(SearchReport { outcome, nodes: engine.nodes })
}

/// All automorphisms (isometric, parity preserving) fixing the components of `constraints`.
pub fn enumerate_automorphisms(s: &SuperAlgebra, constraints: Option<&Grading>, budget: SearchBudget) -> Result<Vec<Morphism>> {
    need_finite(s.field())?;
    let trivial = Grading::trivial(s);
    let g = constraints.unwrap_or(&trivial);
    let sigma = (0..g.components().len()).map(Some).collect();
    let mut engine = Engine::new(s, g, s, g, budget);
    let mut state = engine.initial_state(sigma);
    let mut out = Vec::new();
    if !engine.seed(&mut state) {
        return Ok(out);
    }
    engine.dfs(state, &mut |m| {
        out.push(m);
        true
    });
    if engine.exhausted {
        return Err(SearchError::BudgetExhausted(engine.nodes));
    }
    Ok(out)
}

/// Subspaces of the span of `basis` (given as vectors of the ambient space).
fn subspaces_of(field: FieldSpec, ambient: usize, basis: &[Vector]) -> Vec<Subspace> {
    linalg::enumerate_subspaces(field, basis.len())
        .into_iter()
        .map(|s| {
            let vs: Vec<Vector> = s.basis().iter().map(|c| linalg::combine(field, ambient, c, basis)).collect();
            Subspace::span(field, ambient, &vs)
        })
        .collect()
}

/// Unordered decompositions of the span of `basis` into nonzero subspaces.
pub fn direct_sum_decompositions(field: FieldSpec, ambient: usize, basis: &[Vector]) -> Vec<Vec<Subspace>> {
    let subs: Vec<Subspace> = subspaces_of(field, ambient, basis).into_iter().filter(|s| s.dim() > 0).collect();
    let total = basis.len();
    fn rec(subs: &[Subspace], start: usize, acc: &mut Vec<usize>, sum: &Subspace, total: usize, out: &mut Vec<Vec<Subspace>>) {
        if sum.dim() == total {
            out.push(acc.iter().map(|&i| subs[i].clone()).collect());
            return;
        }
        for i in start..subs.len() {
            let next = sum.sum(&subs[i]);
            if next.dim() == sum.dim() + subs[i].dim() {
                acc.push(i);
                rec(subs, i + 1, acc, &next, total, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if total == 0 {
        out.push(vec![]);
        return out;
    }
    rec(&subs, 0, &mut Vec::new(), &Subspace::zero(field, ambient), total, &mut out);
    out
}

/// Partial injective matchings of `0..m` into `0..n`.
fn partial_matchings(m: usize, n: usize) -> Vec<Vec<Option<usize>>> {
    fn rec(i: usize, m: usize, n: usize, used: &mut Vec<bool>, acc: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if i == m {
            out.push(acc.clone());
            return;
        }
        acc.push(None);
        rec(i + 1, m, n, used, acc, out);
        acc.pop();
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                acc.push(Some(j));
                rec(i + 1, m, n, used, acc, out);
                acc.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, m, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

pub const MAX_ENUMERATION_DIM: usize = 4;

/// Result of [`enumerate_all_gradings`]; the enumeration is exhaustive when it returns.
#[derive(Debug, Clone)]
pub struct GradingEnumeration {
    pub gradings: Vec<Grading>,
    pub decompositions_tried: u64,
}

/// Every parity-compatible group grading, each over its universal group.
pub fn enumerate_all_gradings(s: &SuperAlgebra) -> Result<GradingEnumeration> {
    let f = s.field();
    need_finite(f)?;
    if s.dim() > MAX_ENUMERATION_DIM {
        return Err(SearchError::DimensionTooLarge(s.dim()));
    }
    let n = s.dim();
    let even: Vec<Vector> = s.even_indices().iter().map(|&i| s.basis(i)).collect();
    let odd: Vec<Vector> = s.odd_indices().iter().map(|&i| s.basis(i)).collect();
    let evens = direct_sum_decompositions(f, n, &even);
    let odds = direct_sum_decompositions(f, n, &odd);
    let mut seen = HashSet::new();
    let mut gradings = Vec::new();
    let mut tried = 0;
    for e in &evens {
        for o in &odds {
            for matching in partial_matchings(e.len(), o.len()) {
                tried += 1;
                let mut parts: Vec<Part> = Vec::new();
                let mut taken = vec![false; o.len()];
                for (i, m) in matching.iter().enumerate() {
                    let odd_part = match m {
                        Some(j) => {
                            taken[*j] = true;
                            o[*j].basis().to_vec()
                        }
                        None => vec![],
                    };
                    parts.push(Part::new(e[i].basis().to_vec(), odd_part));
                }
                for (j, sub) in o.iter().enumerate() {
                    if !taken[j] {
                        parts.push(Part::new(vec![], sub.basis().to_vec()));
                    }
                }
                if let Some(g) = gradings::realize(s, &parts) {
                    if seen.insert(g.decomposition_key(s)) {
                        gradings.push(g);
                    }
                }
            }
        }
    }
    Ok(GradingEnumeration { gradings, decompositions_tried: tried })
}

/// Unordered splits of a part into two nonzero parity-homogeneous pieces.
fn splits(field: FieldSpec, ambient: usize, part: &Part) -> Vec<(Part, Part)> {
    let es = subspaces_of(field, ambient, &part.even);
    let os = subspaces_of(field, ambient, &part.odd);
    let (ne, no) = (part.even.len(), part.odd.len());
    let complement = |subs: &[Subspace], total: usize, i: usize| -> Vec<usize> {
        (0..subs.len())
            .filter(|&j| subs[i].dim() + subs[j].dim() == total && subs[i].sum(&subs[j]).dim() == total)
            .collect()
    };
    let e_comp: Vec<Vec<usize>> = (0..es.len()).map(|i| complement(&es, ne, i)).collect();
    let o_comp: Vec<Vec<usize>> = (0..os.len()).map(|i| complement(&os, no, i)).collect();
    let mut out = Vec::new();
    for (i1, e_js) in e_comp.iter().enumerate() {
        for &i2 in e_js {
            for (k1, o_js) in o_comp.iter().enumerate() {
                for &k2 in o_js {
                    // each unordered split once; both pieces nonzero
                    if (i1, k1) >= (i2, k2) || es[i1].dim() + os[k1].dim() == 0 || es[i2].dim() + os[k2].dim() == 0 {
                        continue;
                    }
                    out.push((
                        Part::new(es[i1].basis().to_vec(), os[k1].basis().to_vec()),
                        Part::new(es[i2].basis().to_vec(), os[k2].basis().to_vec()),
                    ));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub enum FineOutcome {
    /// No split of one or two components yields a group grading.
    Fine,
    /// A proper refinement found by splitting components.
    Refinable(Grading),
}

#[derive(Debug, Clone)]
pub struct FineReport {
    pub outcome: FineOutcome,
    pub splits_tried: u64,
}

/// Try every split of one component into two nonzero parity-homogeneous pieces, then
/// every simultaneous split of two components.
pub fn fine_check(s: &SuperAlgebra, grading: &Grading, budget: SearchBudget) -> Result<FineReport> {
    let f = s.field();
    need_finite(f)?;
    let n = s.dim();
    let parts = grading.parts();
    let all_splits: Vec<Vec<(Part, Part)>> = parts.iter().map(|p| if p.dim() < 2 { vec![] } else { splits(f, n, p) }).collect();
    let mut tried = 0u64;
    let mut attempt = |replaced: &[usize], pieces: &[&(Part, Part)]| -> Result<Option<Grading>> {
        tried += 1;
        if tried > budget.max_nodes {
            return Err(SearchError::BudgetExhausted(tried));
        }
        let mut refined: Vec<Part> =
            parts.iter().enumerate().filter(|(i, _)| !replaced.contains(i)).map(|(_, q)| q.clone()).collect();
        for (a, b) in pieces {
            refined.push(a.clone());
            refined.push(b.clone());
        }
        Ok(gradings::realize(s, &refined))
    };
    for (k, sp) in all_splits.iter().enumerate() {
        for x in sp {
            if let Some(g) = attempt(&[k], &[x])? {
                return Ok(FineReport { outcome: FineOutcome::Refinable(g), splits_tried: tried });
            }
        }
    }
    for k in 0..parts.len() {
        for l in k + 1..parts.len() {
            for x in &all_splits[k] {
                for y in &all_splits[l] {
                    if let Some(g) = attempt(&[k, l], &[x, y])? {
                        return Ok(FineReport { outcome: FineOutcome::Refinable(g), splits_tried: tried });
                    }
                }
            }
        }
    }
    Ok(FineReport { outcome: FineOutcome::Fine, splits_tried: tried })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbGroup;
    use crate::constructions::{self as cons, OkuboVariant};
    use crate::gradings::GradingTriple;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn b12_cyclic_isomorphisms() {
        let f = FieldSpec::GF3;
        let b = cons::b12(f).unwrap();
        let z6 = AbGroup::cyclic(6);
        let g = |k| gradings::gamma_grading_b12(&b, &z6.element(&[k])).unwrap();
        let r = find_graded_map(&b, &g(1), &b, &g(5), MapMode::Isomorphism, budget()).unwrap();
        let m = r.outcome.found().unwrap();
        assert_eq!(m.apply(&b.b("u")), linalg::scale(m.apply(&b.b("u"))[2], &b.b("v")));
        let r = find_graded_map(&b, &g(1), &b, &g(2), MapMode::Isomorphism, budget()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::ProvenNone);
        let r = find_graded_map(&b, &g(1), &b, &g(1), MapMode::Isomorphism, budget()).unwrap();
        assert!(r.outcome.found().is_some());
        // the inverse of a hit is a hit the other way
        let m = find_graded_map(&b, &g(1), &b, &g(5), MapMode::Isomorphism, budget()).unwrap().outcome.found().unwrap().clone();
        let inv = m.inverse().unwrap();
        assert!(inv.verify(&b, &b, &[MorphismFlag::AlgebraHom]).is_ok());
    }

    #[test]
    fn automorphism_lists() {
        let (k, _) = cons::split_hurwitz(2, FieldSpec::GF2).unwrap();
        assert_eq!(enumerate_automorphisms(&k, None, budget()).unwrap().len(), 2);
        let f = FieldSpec::GF3;
        let b = cons::b12(f).unwrap();
        let g1 = gradings::gamma_grading_b12(&b, &AbGroup::free(1).element(&[1])).unwrap();
        let autos = enumerate_automorphisms(&b, Some(&g1), budget()).unwrap();
        assert_eq!(autos.len(), 2);
        for a in &autos {
            let lu = a.apply(&b.b("u"))[1];
            assert_eq!(a.apply(&b.b("v")), linalg::scale(lu.inv().unwrap(), &b.b("v")));
        }
        let o = cons::okubo_super(FieldSpec::GF2, OkuboVariant::Nst).unwrap();
        let autos = enumerate_automorphisms(&o.hurwitz, Some(&Grading::main(&o.hurwitz)), budget()).unwrap();
        assert!(autos.iter().any(|m| m.matrix() == o.phi.matrix()));
        assert!(autos.iter().any(|m| m.is_identity()));
    }

    #[test]
    fn enumeration_of_gradings() {
        let f = FieldSpec::GF3;
        for l in [1, 2] {
            let (s, _) = cons::b12_lambda(f, f.from_int(l)).unwrap();
            let e = enumerate_all_gradings(&s).unwrap();
            let mut groups: Vec<String> = e.gradings.iter().map(|g| g.group().to_string()).collect();
            groups.sort();
            assert_eq!(groups, vec!["0", "Z2"]);
        }
        let b = cons::b12(f).unwrap();
        let all = enumerate_all_gradings(&b).unwrap().gradings;
        assert!(all.iter().any(|g| g.group() == &AbGroup::free(1)));
        for g in &all {
            for c in gradings::coarsenings(&b, g).unwrap() {
                assert!(all.iter().any(|h| h.decomposition_key(&b) == c.decomposition_key(&b)));
            }
        }
        assert_eq!(direct_sum_decompositions(FieldSpec::GF2, 2, &[linalg::unit_vector(FieldSpec::GF2, 2, 0), linalg::unit_vector(FieldSpec::GF2, 2, 1)]).len(), 4);
    }

    #[test]
    fn fine_checks() {
        let f = FieldSpec::GF2;
        let (c, cb) = cons::super_split_cayley(f).unwrap();
        let cartan = GradingTriple::from_coords(&AbGroup::free(2), [&[1, 0], &[0, 1], &[-1, -1]]).unwrap();
        let g = gradings::gamma_grading_dim8(&c, &cb, &cartan).unwrap();
        assert!(matches!(fine_check(&c, &g, budget()).unwrap().outcome, FineOutcome::Fine));
        match fine_check(&c, &Grading::main(&c), budget()).unwrap().outcome {
            FineOutcome::Refinable(w) => assert!(gradings::is_refinement(&c, &w, &Grading::main(&c))),
            FineOutcome::Fine => panic!("main grading is not fine"),
        }
        let b = cons::b12(FieldSpec::GF3).unwrap();
        assert!(matches!(fine_check(&b, &Grading::trivial(&b), budget()).unwrap().outcome, FineOutcome::Refinable(_)));
    }
}
