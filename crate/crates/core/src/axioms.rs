//! Decision procedures for the composition, Hurwitz and symmetric identities.

use serde::Serialize;
use thiserror::Error;

use crate::fields::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::superalgebra::{Morphism, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// How an identity was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Every pair of elements.
    Exhaustive,
    /// Every first argument, the second by its quadratic form on basis vectors and pairs.
    ExhaustiveLeft,
    /// Basis vectors and pairwise sums in both arguments.
    Polarized,
    /// Basis tuples of a multilinear identity.
    Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Item number of the failing clause, when the axiom has several.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub item: Option<u8>,
    pub elements: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<CheckMode>,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomReport {
    fn new(axiom: &str) -> Self {
        AxiomReport { axiom: axiom.into(), pass: true, mode: None, checked: 0, witness: None }
    }

    fn fail(mut self, item: Option<u8>, alg: &SuperAlgebra, elements: &[&[Scalar]], detail: impl Into<String>) -> Self {
        self.pass = false;
        self.witness = Some(Witness {
            item,
            elements: elements.iter().map(|e| alg.format(e)).collect(),
            detail: detail.into(),
        });
        self
    }

    fn fail_plain(mut self, detail: impl Into<String>) -> Self {
        self.pass = false;
        self.witness = Some(Witness { item: None, elements: vec![], detail: detail.into() });
        self
    }
}

/// Above this many pairs or elements the checks switch to a cheaper complete scheme.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 20;

fn space_size(field: FieldSpec, dim: usize) -> Option<u128> {
    let q = field.order()? as u128;
    let mut acc: u128 = 1;
    for _ in 0..dim {
        acc = acc.checked_mul(q)?;
    }
    Some(acc)
}

fn even_basis(alg: &SuperAlgebra) -> Vec<Vector> {
    alg.even_indices().iter().map(|&i| alg.basis(i)).collect()
}

/// Basis vectors followed by all sums of two distinct basis vectors.
pub fn basis_and_pair_sums(basis: &[Vector]) -> Vec<Vector> {
    let mut out = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(linalg::add(&basis[i], &basis[j]));
        }
    }
    out
}

/// Even elements, in the enumeration order of their coordinates.
fn even_elements(alg: &SuperAlgebra) -> Vec<Vector> {
    let eb = even_basis(alg);
    linalg::all_vectors(alg.field(), eb.len())
        .map(|c| linalg::combine(alg.field(), alg.dim(), &c, &eb))
        .collect()
}

/// `q0(xy) = q0(x) q0(y)` on the even part.
fn multiplicativity(alg: &SuperAlgebra, report: AxiomReport, item: Option<u8>) -> AxiomReport {
    let f = alg.field();
    let mut report = report;
    let eb = even_basis(alg);
    let size = space_size(f, eb.len());
    let check = |x: &[Scalar], y: &[Scalar]| alg.q0_even(&alg.mul(x, y)) == alg.q0_even(x) * alg.q0_even(y);
    match size {
        Some(n) if n * n <= EXHAUSTIVE_LIMIT => {
            report.mode = Some(CheckMode::Exhaustive);
            let elems = even_elements(alg);
            for x in &elems {
                for y in &elems {
                    report.checked += 1;
                    if !check(x, y) {
                        return report.fail(item, alg, &[x, y], "q(xy) != q(x)q(y)");
                    }
                }
            }
        }
        Some(n) if n <= EXHAUSTIVE_LIMIT => {
            // for fixed x, y -> q(xy) - q(x)q(y) is a quadratic form: test its values and polar on the basis
            report.mode = Some(CheckMode::ExhaustiveLeft);
            for x in even_elements(alg) {
                let qx = alg.q0_even(&x);
                let xy: Vec<Vector> = eb.iter().map(|y| alg.mul(&x, y)).collect();
                for i in 0..eb.len() {
                    report.checked += 1;
                    if alg.q0_even(&xy[i]) != qx * alg.q0_even(&eb[i]) {
                        return report.fail(item, alg, &[&x, &eb[i]], "q(xy) != q(x)q(y)");
                    }
                    for j in i + 1..eb.len() {
                        report.checked += 1;
                        if alg.eval_b(&xy[i], &xy[j]) != qx * alg.eval_b(&eb[i], &eb[j]) {
                            let y = linalg::add(&eb[i], &eb[j]);
                            return report.fail(item, alg, &[&x, &y], "q(xy) != q(x)q(y)");
                        }
                    }
                }
            }
        }
        _ => {
            report.mode = Some(CheckMode::Polarized);
            let probes = basis_and_pair_sums(&eb);
            for x in &probes {
                for y in &probes {
                    report.checked += 1;
                    if !check(x, y) {
                        return report.fail(item, alg, &[x, y], "q(xy) != q(x)q(y)");
                    }
                }
            }
        }
    }
    report
}

/// Unit, regular superform and multiplicativity of the even norm.
pub fn check_hurwitz(alg: &SuperAlgebra) -> AxiomReport {
    let report = AxiomReport::new("hurwitz");
    if alg.unit().is_none() {
        return report.fail_plain("no unit");
    }
    if !alg.is_regular_superform() {
        return report.fail_plain("superform is not regular");
    }
    multiplicativity(alg, report, None)
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// The three clauses of a composition superalgebra.
pub fn check_composition_super(alg: &SuperAlgebra) -> AxiomReport {
    let f = alg.field();
    let report = AxiomReport::new("composition");
    if !alg.is_regular_superform() {
        return report.fail_plain("superform is not regular");
    }
    let mut report = multiplicativity(alg, report, Some(1));
    if !report.pass {
        return report;
    }
    let n = alg.dim();
    let basis: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
    for x in basis_and_pair_sums(&even_basis(alg)) {
        let qx = alg.q0_even(&x);
        let left: Vec<Vector> = basis.iter().map(|y| alg.mul(&x, y)).collect();
        let right: Vec<Vector> = basis.iter().map(|y| alg.mul(y, &x)).collect();
        for i in 0..n {
            for j in 0..n {
                report.checked += 1;
                let rhs = qx * alg.polar()[(i, j)];
                if alg.eval_b(&left[i], &left[j]) != rhs {
                    return report.fail(Some(2), alg, &[&x, &basis[i], &basis[j]], "b(xy, xz) != q(x)b(y, z)");
                }
                if alg.eval_b(&right[i], &right[j]) != rhs {
                    return report.fail(Some(2), alg, &[&x, &basis[i], &basis[j]], "b(yx, zx) != q(x)b(y, z)");
                }
            }
        }
    }
    let prod: Vec<Vec<Vector>> = (0..n).map(|i| (0..n).map(|j| alg.basis_product(i, j)).collect()).collect();
    let p = |i: usize| alg.is_odd(i);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    report.checked += 1;
                    let s1 = sign((p(x) && p(y)) ^ (p(x) && p(z)) ^ (p(y) && p(z)));
                    let s2 = sign(p(y) && p(z));
                    let lhs = alg.eval_b(&prod[x][y], &prod[z][t]) + f.from_int(s1) * alg.eval_b(&prod[z][y], &prod[x][t]);
                    let rhs = f.from_int(s2) * alg.polar()[(x, z)] * alg.polar()[(y, t)];
                    if lhs != rhs {
                        return report.fail(
                            Some(3),
                            alg,
                            &[&basis[x], &basis[y], &basis[z], &basis[t]],
                            "linearized composition identity fails",
                        );
                    }
                }
            }
        }
    }
    report.mode = Some(CheckMode::Basis);
    report
}

/// `b(xy, z) = b(x, yz)` on basis triples.
pub fn check_symmetric(alg: &SuperAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new("symmetric");
    report.mode = Some(CheckMode::Basis);
    let n = alg.dim();
    for x in 0..n {
        for y in 0..n {
            let xy = alg.basis_product(x, y);
            for z in 0..n {
                report.checked += 1;
                let yz = alg.basis_product(y, z);
                if alg.eval_b(&xy, &alg.basis(z)) != alg.eval_b(&alg.basis(x), &yz) {
                    return report.fail(None, alg, &[&alg.basis(x), &alg.basis(y), &alg.basis(z)], "b(xy, z) != b(x, yz)");
                }
            }
        }
    }
    report
}

/// `x·y = (1*x)*(y*1)` on basis pairs and `φ(x) = x̄*1` on basis vectors, where
/// `s` is the Petersson twist of the unital `c` by `phi`.
pub fn check_remark_identities(s: &SuperAlgebra, c: &SuperAlgebra, phi: &Morphism) -> AxiomReport {
    let mut report = AxiomReport::new("remark");
    report.mode = Some(CheckMode::Basis);
    let Some(one) = c.unit() else {
        return report.fail_plain("Hurwitz algebra has no unit");
    };
    let n = c.dim();
    let left: Vec<Vector> = (0..n).map(|i| s.mul(one, &c.basis(i))).collect();
    let right: Vec<Vector> = (0..n).map(|i| s.mul(&c.basis(i), one)).collect();
    for i in 0..n {
        for j in 0..n {
            report.checked += 1;
            if c.basis_product(i, j) != s.mul(&left[i], &right[j]) {
                return report.fail(Some(1), c, &[&c.basis(i), &c.basis(j)], "x·y != (1*x)*(y*1)");
            }
        }
    }
    for i in 0..n {
        report.checked += 1;
        let bar = c.conjugate(&c.basis(i)).expect("unit exists");
        if phi.image(i) != s.mul(&bar, one) {
            return report.fail(Some(2), c, &[&c.basis(i)], "φ(x) != x̄*1");
        }
    }
    report
}

fn is_para_unit(alg: &SuperAlgebra, e: &[Scalar]) -> bool {
    if alg.mul(e, e) != e {
        return false;
    }
    (0..alg.dim()).all(|i| {
        let x = alg.basis(i);
        let target = linalg::sub(&linalg::scale(alg.eval_b(e, &x), e), &x);
        alg.mul(e, &x) == target && alg.mul(&x, e) == target
    })
}

/// Even idempotents `e` with `e*x = x*e = b(e,x)e - x`, by scanning the even part.
pub fn find_para_units_scan(alg: &SuperAlgebra) -> Result<Vec<Vector>, AxiomError> {
    if !alg.field().is_finite() {
        return Err(AxiomError::Unsupported("scan needs a finite field".into()));
    }
    Ok(even_elements(alg).into_iter().filter(|e| is_para_unit(alg, e)).collect())
}

/// Para-units by solving the defining equations: `e` lies in the subspace where left and
/// right multiplication agree, and on a line `e = t z` the equations are linear in `t, t^2`.
pub fn find_para_units_algebraic(alg: &SuperAlgebra) -> Result<Vec<Vector>, AxiomError> {
    let f = alg.field();
    let n = alg.dim();
    let eb = even_basis(alg);
    let m = eb.len();
    // columns: coefficients c_k of e = sum c_k eb_k; rows: coordinates of e*x - x*e for each basis x
    let mut rows = Vec::new();
    for i in 0..n {
        let x = alg.basis(i);
        let cols: Vec<Vector> = eb.iter().map(|v| linalg::sub(&alg.mul(v, &x), &alg.mul(&x, v))).collect();
        for r in 0..n {
            rows.push(cols.iter().map(|c| c[r]).collect::<Vector>());
        }
    }
    let commuting = Matrix::from_rows(f, m, &rows).kernel();
    let z: Vec<Vector> = commuting.iter().map(|c| linalg::combine(f, n, c, &eb)).collect();
    match z.len() {
        0 => Ok(vec![]),
        1 => {
            // t (z*x) - t^2 b(z,x) z + x = 0 for all basis x
            let z = &z[0];
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for i in 0..n {
                let x = alg.basis(i);
                let zx = alg.mul(z, &x);
                let bz = linalg::scale(alg.eval_b(z, &x), z);
                for r in 0..n {
                    lhs.push(vec![zx[r], -bz[r]]);
                    rhs.push(-x[r]);
                }
            }
            let a = Matrix::from_rows(f, 2, &lhs);
            let Some(sol) = a.solve(&rhs) else {
                return Ok(vec![]);
            };
            if a.rank() < 2 {
                return Err(AxiomError::Unsupported("para-unit equations are not determined on the line".into()));
            }
            let (t, s) = (sol[0], sol[1]);
            let e = linalg::scale(t, z);
            Ok(if t * t == s && is_para_unit(alg, &e) { vec![e] } else { vec![] })
        }
        _ if f.is_finite() => {
            let space = Subspace::span(f, n, &z);
            Ok(space.elements().into_iter().filter(|e| is_para_unit(alg, e)).collect())
        }
        _ => Err(AxiomError::Unsupported("commuting even subspace of dimension >= 2 over Q".into())),
    }
}

/// Para-units, by scan over finite fields and algebraically over Q.
pub fn find_para_units(alg: &SuperAlgebra) -> Result<Vec<Vector>, AxiomError> {
    if alg.field().is_finite() {
        find_para_units_scan(alg)
    } else {
        find_para_units_algebraic(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{self as cons, OkuboVariant};

    #[test]
    fn split_cayley_is_hurwitz() {
        let (c, _) = cons::split_hurwitz(8, FieldSpec::GF2).unwrap();
        let r = check_hurwitz(&c);
        assert!(r.pass);
        assert_eq!(r.mode, Some(CheckMode::Exhaustive));
        assert_eq!(r.checked, 65536);
        let (c4, _) = cons::split_hurwitz(4, FieldSpec::GF4).unwrap();
        assert!(check_hurwitz(&c4).pass);
        let (cq, _) = cons::split_hurwitz(8, FieldSpec::Q).unwrap();
        let r = check_hurwitz(&cq);
        assert!(r.pass && r.mode == Some(CheckMode::Polarized));
    }

    #[test]
    fn corrupted_structure_constant_fails() {
        let f = FieldSpec::GF3;
        let (c, _) = cons::split_hurwitz(8, f).unwrap();
        let bad = c
            .with_product(|i, j| if (i, j) == (2, 3) { c.b("v1") } else { c.basis_product(i, j) })
            .unwrap();
        let r = check_hurwitz(&bad);
        assert!(!r.pass);
        assert!(r.witness.is_some());
        assert!(!check_composition_super(&bad).pass);
    }

    #[test]
    fn super_examples() {
        let b42 = cons::b42(FieldSpec::GF3).unwrap();
        assert!(check_hurwitz(&b42).pass);
        assert!(check_composition_super(&b42).pass);
        let b12 = cons::b12(FieldSpec::GF3).unwrap();
        assert!(check_hurwitz(&b12).pass);
        assert!(check_composition_super(&b12).pass);
        let p = cons::para_hurwitz(&b12).unwrap();
        assert!(check_composition_super(&p).pass);
        assert!(check_symmetric(&p).pass);
        let o = cons::okubo_super(FieldSpec::GF2, OkuboVariant::Nst).unwrap();
        assert!(check_composition_super(&o.algebra).pass);
        assert!(check_symmetric(&o.algebra).pass);
    }

    #[test]
    fn symmetric_examples() {
        let (c, _) = cons::split_hurwitz(8, FieldSpec::GF2).unwrap();
        assert!(!check_symmetric(&c).pass);
        assert!(check_symmetric(&cons::para_hurwitz(&c).unwrap()).pass);
        let f = FieldSpec::GF3;
        let (s, _) = cons::b12_lambda(f, f.one()).unwrap();
        assert!(check_symmetric(&s).pass);
    }

    #[test]
    fn remark_identities() {
        for (f, v) in [(FieldSpec::GF4, OkuboVariant::Omega), (FieldSpec::GF2, OkuboVariant::Nst)] {
            let o = cons::okubo_super(f, v).unwrap();
            assert!(check_remark_identities(&o.algebra, &o.hurwitz, &o.phi).pass);
            let r = check_remark_identities(&o.algebra, &o.hurwitz, &o.phi.pow(2));
            assert!(!r.pass);
            assert_eq!(r.witness.unwrap().item, Some(2));
        }
    }

    #[test]
    fn para_units() {
        let (c, _) = cons::split_hurwitz(8, FieldSpec::GF2).unwrap();
        let p = cons::para_hurwitz(&c).unwrap();
        assert_eq!(find_para_units(&p).unwrap(), vec![c.unit().unwrap().clone()]);
        assert_eq!(find_para_units_algebraic(&p).unwrap(), vec![c.unit().unwrap().clone()]);
        let o = cons::okubo_super(FieldSpec::GF2, OkuboVariant::Nst).unwrap();
        assert!(find_para_units(&o.algebra).unwrap().is_empty());
        assert!(find_para_units_algebraic(&o.algebra).unwrap().is_empty());
        let (k, _) = cons::split_hurwitz(2, FieldSpec::GF4).unwrap();
        let pk = cons::para_hurwitz(&k).unwrap();
        let scan = find_para_units_scan(&pk).unwrap();
        assert_eq!(scan.len(), 3);
        assert_eq!(find_para_units_algebraic(&pk).unwrap(), scan);
        let (cq, _) = cons::split_hurwitz(4, FieldSpec::Q).unwrap();
        let pq = cons::para_hurwitz(&cq).unwrap();
        assert_eq!(find_para_units(&pq).unwrap(), vec![cq.unit().unwrap().clone()]);
    }
}
