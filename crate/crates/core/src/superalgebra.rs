//! Finite-dimensional superalgebras carrying a quadratic superform.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fields::{FieldError, FieldSpec, Scalar};
use crate::linalg::{self, Matrix, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperError {
    #[error("product {0} * {1} does not respect parity")]
    ParityViolation(String, String),
    #[error("polar form pairs even {0} with odd {1}")]
    PolarNotEven(String, String),
    #[error("polar form on the even part is not the polarization of q0 at ({0}, {1})")]
    PolarMismatch(String, String),
    #[error("polar form on the odd part is not alternating at ({0}, {1})")]
    OddNotAlternating(String, String),
    #[error("q0 evaluated on an element with odd components")]
    OddArgument,
    #[error("algebra has no unit")]
    NoUnit,
    #[error("{flag} check failed at {witness}")]
    CheckFailed { flag: MorphismFlag, witness: String },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("malformed algebra description: {0}")]
    Malformed(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismFlag {
    AlgebraHom,
    Isometry,
    ParityPreserving,
    InvolutionCommuting,
}

impl fmt::Display for MorphismFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MorphismFlag::AlgebraHom => "algebra-hom",
            MorphismFlag::Isometry => "isometry",
            MorphismFlag::ParityPreserving => "parity-preserving",
            MorphismFlag::InvolutionCommuting => "involution-commuting",
        };
        f.write_str(s)
    }
}

pub const ALL_FLAGS: [MorphismFlag; 4] = [
    MorphismFlag::AlgebraHom,
    MorphismFlag::Isometry,
    MorphismFlag::ParityPreserving,
    MorphismFlag::InvolutionCommuting,
];

/// Structure constants, parity and quadratic superform on a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    field: FieldSpec,
    names: Vec<String>,
    odd: Vec<bool>,
    /// `table[i * dim + j]` holds the sparse coordinates of `b_i * b_j`.
    table: Vec<Vec<(usize, Scalar)>>,
    q0: Vec<Scalar>,
    polar: Matrix,
    unit: Option<Vector>,
}

impl SuperAlgebra {
    /// Build and validate. `products` lists `(i, j, b_i * b_j)`; missing pairs are zero.
    /// `q0` gives the quadratic form on every basis vector (ignored on odd ones).
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        odd: Vec<bool>,
        products: &[(usize, usize, Vector)],
        q0: Vec<Scalar>,
        polar: Matrix,
    ) -> Result<Self, SuperError> {
        let n = names.len();
        if odd.len() != n || q0.len() != n || polar.rows() != n || polar.cols() != n {
            return Err(SuperError::Malformed("inconsistent dimensions".into()));
        }
        let mut table = vec![Vec::new(); n * n];
        for (i, j, v) in products {
            if *i >= n || *j >= n || v.len() != n {
                return Err(SuperError::Malformed(format!("bad product entry ({i}, {j})")));
            }
            let sparse: Vec<(usize, Scalar)> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, *c)).collect();
            table[i * n + j] = sparse;
        }
        let q0 = q0.iter().zip(&odd).map(|(v, &o)| if o { field.zero() } else { *v }).collect();
        let mut alg = SuperAlgebra { field, names, odd, table, q0, polar, unit: None };
        alg.validate()?;
        alg.unit = alg.solve_unit();
        Ok(alg)
    }

    /// Same space and superform, new product given as a function on basis pairs.
    pub fn with_product(&self, f: impl Fn(usize, usize) -> Vector) -> Result<Self, SuperError> {
        let n = self.dim();
        let products: Vec<(usize, usize, Vector)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, f(i, j))).collect();
        SuperAlgebra::new(self.field, self.names.clone(), self.odd.clone(), &products, self.q0.clone(), self.polar.clone())
    }

    fn validate(&self) -> Result<(), SuperError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let want = self.odd[i] ^ self.odd[j];
                if self.table[i * n + j].iter().any(|(k, _)| self.odd[*k] != want) {
                    return Err(SuperError::ParityViolation(self.names[i].clone(), self.names[j].clone()));
                }
                let b = self.polar[(i, j)];
                match (self.odd[i], self.odd[j]) {
                    (false, true) | (true, false) => {
                        if !b.is_zero() {
                            return Err(SuperError::PolarNotEven(self.names[i].clone(), self.names[j].clone()));
                        }
                    }
                    (false, false) => {
                        let expected = if i == j { self.q0[i] + self.q0[i] } else { self.polar[(j, i)] };
                        if b != expected {
                            return Err(SuperError::PolarMismatch(self.names[i].clone(), self.names[j].clone()));
                        }
                    }
                    (true, true) => {
                        let ok = if i == j { b.is_zero() } else { b == -self.polar[(j, i)] };
                        if !ok {
                            return Err(SuperError::OddNotAlternating(self.names[i].clone(), self.names[j].clone()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn solve_unit(&self) -> Option<Vector> {
        // e * b_i = b_i = b_i * e, linear in e
        let n = self.dim();
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for k in 0..n {
                let left: Vector = (0..n).map(|j| self.coeff(j, i, k)).collect();
                let right: Vector = (0..n).map(|j| self.coeff(i, j, k)).collect();
                let target = if i == k { self.field.one() } else { self.field.zero() };
                rows.push(left);
                rhs.push(target);
                rows.push(right);
                rhs.push(target);
            }
        }
        Matrix::from_rows(self.field, n, &rows).solve(&rhs)
    }

    fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        let n = self.dim();
        self.table[i * n + j].iter().find(|(kk, _)| *kk == k).map_or(self.field.zero(), |(_, c)| *c)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn parity(&self) -> &[bool] {
        &self.odd
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.odd[i]).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.odd[i]).collect()
    }

    pub fn polar(&self) -> &Matrix {
        &self.polar
    }

    pub fn q0_values(&self) -> &[Scalar] {
        &self.q0
    }

    pub fn zero(&self) -> Vector {
        linalg::zero_vector(self.field, self.dim())
    }

    pub fn basis(&self, i: usize) -> Vector {
        linalg::unit_vector(self.field, self.dim(), i)
    }

    /// Basis vector by name; panics on unknown names.
    pub fn b(&self, name: &str) -> Vector {
        self.basis(self.index_of(name).unwrap_or_else(|| panic!("no basis vector {name}")))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero();
        for (k, c) in &self.table[i * self.dim() + j] {
            v[*k] = *c;
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = *xi * *yj;
                for (k, s) in &self.table[i * n + j] {
                    out[*k] += c * *s;
                }
            }
        }
        out
    }

    pub fn is_even_element(&self, x: &[Scalar]) -> bool {
        x.iter().zip(&self.odd).all(|(c, &o)| !o || c.is_zero())
    }

    pub fn is_odd_element(&self, x: &[Scalar]) -> bool {
        x.iter().zip(&self.odd).all(|(c, &o)| o || c.is_zero())
    }

    /// `Some(false)` for nonzero even, `Some(true)` for nonzero odd, `None` otherwise.
    pub fn homogeneous_parity(&self, x: &[Scalar]) -> Option<bool> {
        if linalg::is_zero(x) {
            None
        } else if self.is_even_element(x) {
            Some(false)
        } else if self.is_odd_element(x) {
            Some(true)
        } else {
            None
        }
    }

    pub fn eval_b(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    let p = self.polar[(i, j)];
                    if !p.is_zero() {
                        acc += *xi * *yj * p;
                    }
                }
            }
        }
        acc
    }

    /// Quadratic form on the even part, valid in every characteristic.
    pub fn eval_q0(&self, x: &[Scalar]) -> Result<Scalar, SuperError> {
        if !self.is_even_element(x) {
            return Err(SuperError::OddArgument);
        }
        Ok(self.q0_even(x))
    }

    /// `q0` of the even component of `x`.
    pub fn q0_even(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        let n = self.dim();
        for i in 0..n {
            if self.odd[i] || x[i].is_zero() {
                continue;
            }
            acc += x[i] * x[i] * self.q0[i];
            for j in i + 1..n {
                if !self.odd[j] && !x[j].is_zero() {
                    acc += x[i] * x[j] * self.polar[(i, j)];
                }
            }
        }
        acc
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn conjugate(&self, x: &[Scalar]) -> Result<Vector, SuperError> {
        let one = self.unit.as_ref().ok_or(SuperError::NoUnit)?;
        let t = self.eval_b(x, one);
        Ok(linalg::sub(&linalg::scale(t, one), x))
    }

    pub fn is_regular_superform(&self) -> bool {
        let odd = self.odd_indices();
        if !odd.is_empty() {
            let rows: Vec<Vector> = odd.iter().map(|&i| odd.iter().map(|&j| self.polar[(i, j)]).collect()).collect();
            if Matrix::from_rows(self.field, odd.len(), &rows).det().is_zero() {
                return false;
            }
        }
        let even = self.even_indices();
        if even.is_empty() {
            return true;
        }
        let rows: Vec<Vector> = even.iter().map(|&i| even.iter().map(|&j| self.polar[(i, j)]).collect()).collect();
        let radical = Matrix::from_rows(self.field, even.len(), &rows).kernel();
        match radical.len() {
            0 => true,
            1 => {
                let mut v = self.zero();
                for (k, &i) in even.iter().enumerate() {
                    v[i] = radical[0][k];
                }
                !self.q0_even(&v).is_zero()
            }
            _ => false,
        }
    }

    /// Human-readable element, e.g. `e1 + 2u3`.
    pub fn format(&self, x: &[Scalar]) -> String {
        format_combination(&self.names, x)
    }

    /// Inverse of [`SuperAlgebra::format`].
    pub fn parse_element(&self, text: &str) -> Result<Vector, SuperError> {
        let bad = || SuperError::Malformed(format!("cannot parse element `{text}`"));
        let mut out = self.zero();
        let t = text.trim();
        if t == "0" {
            return Ok(out);
        }
        let normalized = t.replace(" - ", " + -");
        for term in normalized.split(" + ") {
            let term = term.trim();
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            // longest basis name that leaves a readable coefficient
            let mut hit = None;
            for (i, name) in self.names.iter().enumerate() {
                if let Some(prefix) = body.strip_suffix(name.as_str()) {
                    let coeff = prefix.strip_prefix('(').and_then(|p| p.strip_suffix(')')).unwrap_or(prefix);
                    let c = if coeff.is_empty() { Some(self.field.one()) } else { self.field.parse_scalar(coeff).ok() };
                    if let Some(c) = c {
                        if hit.as_ref().is_none_or(|(j, _): &(usize, Scalar)| self.names[*j].len() < name.len()) {
                            hit = Some((i, c));
                        }
                    }
                }
            }
            let (i, c) = hit.ok_or_else(bad)?;
            out[i] += if neg { -c } else { c };
        }
        Ok(out)
    }

    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    structure.push((i, j, *k, c.to_string()));
                }
            }
        }
        AlgebraJson {
            field: self.field.to_string(),
            dim: n,
            basis: self.names.clone(),
            parity: self.odd.iter().map(|&o| u8::from(o)).collect(),
            structure,
            q0_values: (0..n).map(|i| (!self.odd[i]).then(|| self.q0[i].to_string())).collect(),
            polar: (0..n).map(|i| (0..n).map(|j| self.polar[(i, j)].to_string()).collect()).collect(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self, SuperError> {
        let field: FieldSpec = j.field.parse()?;
        let n = j.dim;
        if j.basis.len() != n || j.parity.len() != n || j.q0_values.len() != n || j.polar.len() != n {
            return Err(SuperError::Malformed("inconsistent dimensions".into()));
        }
        let mut products: Vec<(usize, usize, Vector)> = Vec::new();
        for (i, jj, k, c) in &j.structure {
            if *i >= n || *jj >= n || *k >= n {
                return Err(SuperError::Malformed(format!("index out of range in ({i}, {jj}, {k})")));
            }
            let c = field.parse_scalar(c)?;
            match products.iter_mut().find(|(a, b, _)| a == i && b == jj) {
                Some((_, _, v)) => v[*k] += c,
                None => {
                    let mut v = linalg::zero_vector(field, n);
                    v[*k] = c;
                    products.push((*i, *jj, v));
                }
            }
        }
        let q0 = j
            .q0_values
            .iter()
            .map(|v| v.as_deref().map_or(Ok(field.zero()), |s| field.parse_scalar(s)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows = Vec::with_capacity(n);
        for r in &j.polar {
            if r.len() != n {
                return Err(SuperError::Malformed("polar form is not square".into()));
            }
            rows.push(r.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vector, _>>()?);
        }
        let polar = Matrix::from_rows(field, n, &rows);
        SuperAlgebra::new(field, j.basis.clone(), j.parity.iter().map(|&p| p == 1).collect(), &products, q0, polar)
    }
}

pub fn format_combination(names: &[String], x: &[Scalar]) -> String {
    let mut parts = Vec::new();
    for (c, name) in x.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_string();
        let term = if c.is_one() {
            name.clone()
        } else if coeff.contains(['+', '/']) || coeff[1..].contains('-') {
            format!("({coeff}){name}")
        } else if coeff == "-1" {
            format!("-{name}")
        } else {
            format!("{coeff}{name}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Interchange format: scalars are strings in the field's notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// 0 for even, 1 for odd
    pub parity: Vec<u8>,
    /// `(i, j, k, c)`: `b_i * b_j` has coefficient `c` on `b_k`
    pub structure: Vec<(usize, usize, usize, String)>,
    pub q0_values: Vec<Option<String>>,
    pub polar: Vec<Vec<String>>,
}

/// Linear map given by the images of the source basis (matrix columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    matrix: Matrix,
    flags: BTreeSet<MorphismFlag>,
}

impl Morphism {
    /// Unverified linear map.
    pub fn linear(matrix: Matrix) -> Self {
        Morphism { matrix, flags: BTreeSet::new() }
    }

    pub fn from_images(field: FieldSpec, images: &[Vector]) -> Self {
        let rows = images.first().map_or(0, Vec::len);
        Morphism::linear(Matrix::from_columns(field, rows, images))
    }

    pub fn identity(a: &SuperAlgebra) -> Self {
        Morphism::linear(Matrix::identity(a.field(), a.dim()))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn flags(&self) -> &BTreeSet<MorphismFlag> {
        &self.flags
    }

    pub fn has(&self, flag: MorphismFlag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.apply(x)
    }

    pub fn image(&self, i: usize) -> Vector {
        self.matrix.column(i)
    }

    /// `self` after `other`; flags are dropped.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism::linear(self.matrix.mul(&other.matrix))
    }

    pub fn pow(&self, e: u32) -> Morphism {
        Morphism::linear(self.matrix.pow(e))
    }

    pub fn inverse(&self) -> Option<Morphism> {
        self.matrix.inverse().map(Morphism::linear)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.field(), self.matrix.rows())
    }

    /// Verify the requested flags on basis vectors and pairs, recording each one that passes.
    pub fn verify(
        mut self,
        src: &SuperAlgebra,
        tgt: &SuperAlgebra,
        checks: &[MorphismFlag],
    ) -> Result<Morphism, SuperError> {
        if self.matrix.cols() != src.dim() || self.matrix.rows() != tgt.dim() {
            return Err(SuperError::DimensionMismatch(src.dim(), tgt.dim()));
        }
        let n = src.dim();
        let img: Vec<Vector> = (0..n).map(|i| self.image(i)).collect();
        for &flag in checks {
            let fail = |witness: String| SuperError::CheckFailed { flag, witness };
            match flag {
                MorphismFlag::ParityPreserving => {
                    for i in 0..n {
                        let ok = if src.is_odd(i) { tgt.is_odd_element(&img[i]) } else { tgt.is_even_element(&img[i]) };
                        if !ok {
                            return Err(fail(src.names[i].clone()));
                        }
                    }
                }
                MorphismFlag::AlgebraHom => {
                    for i in 0..n {
                        for j in 0..n {
                            if self.apply(&src.basis_product(i, j)) != tgt.mul(&img[i], &img[j]) {
                                return Err(fail(format!("({}, {})", src.names[i], src.names[j])));
                            }
                        }
                    }
                }
                MorphismFlag::Isometry => {
                    for i in 0..n {
                        if !src.is_odd(i) && tgt.q0_even(&img[i]) != src.q0[i] {
                            return Err(fail(format!("q0({})", src.names[i])));
                        }
                        for j in 0..n {
                            if tgt.eval_b(&img[i], &img[j]) != src.polar[(i, j)] {
                                return Err(fail(format!("b({}, {})", src.names[i], src.names[j])));
                            }
                        }
                    }
                }
                MorphismFlag::InvolutionCommuting => {
                    for i in 0..n {
                        let lhs = self.apply(&src.conjugate(&src.basis(i))?);
                        let rhs = tgt.conjugate(&img[i])?;
                        if lhs != rhs {
                            return Err(fail(src.names[i].clone()));
                        }
                    }
                }
            }
            self.flags.insert(flag);
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split2(f: FieldSpec) -> SuperAlgebra {
        let e = |i| linalg::unit_vector(f, 2, i);
        let polar = Matrix::from_rows(f, 2, &[vec![f.zero(), f.one()], vec![f.one(), f.zero()]]);
        SuperAlgebra::new(
            f,
            vec!["e1".into(), "e2".into()],
            vec![false, false],
            &[(0, 0, e(0)), (1, 1, e(1))],
            vec![f.zero(), f.zero()],
            polar,
        )
        .unwrap()
    }

    #[test]
    fn unit_conjugation_and_forms() {
        let f = FieldSpec::GF3;
        let a = split2(f);
        let one = a.unit().unwrap().clone();
        assert_eq!(one, vec![f.one(), f.one()]);
        assert_eq!(a.conjugate(&a.b("e1")).unwrap(), a.b("e2"));
        assert_eq!(a.conjugate(&one).unwrap(), one);
        assert_eq!(a.eval_q0(&one).unwrap(), f.one());
        assert!(a.eval_q0(&a.zero()).unwrap().is_zero());
        assert!(a.is_regular_superform());
        assert!(a.mul(&a.zero(), &one).iter().all(Scalar::is_zero));
    }

    #[test]
    fn validation_rejects_bad_data() {
        let f = FieldSpec::GF3;
        let polar = Matrix::identity(f, 2);
        // b(e, e) must equal 2 q0(e)
        let err = SuperAlgebra::new(f, vec!["a".into(), "b".into()], vec![false, false], &[], vec![f.zero(), f.zero()], polar);
        assert!(matches!(err, Err(SuperError::PolarMismatch(..))));
        let err = SuperAlgebra::new(
            f,
            vec!["a".into(), "u".into()],
            vec![false, true],
            &[(0, 0, linalg::unit_vector(f, 2, 1))],
            vec![f.zero(), f.zero()],
            Matrix::zeros(f, 2, 2),
        );
        assert!(matches!(err, Err(SuperError::ParityViolation(..))));
    }

    #[test]
    fn degenerate_form_is_not_regular() {
        let f = FieldSpec::GF2;
        let a = SuperAlgebra::new(
            f,
            vec!["a".into(), "b".into()],
            vec![false, false],
            &[],
            vec![f.zero(), f.zero()],
            Matrix::zeros(f, 2, 2),
        )
        .unwrap();
        assert!(!a.is_regular_superform());
        assert!(a.unit().is_none());
        assert_eq!(a.conjugate(&a.b("a")), Err(SuperError::NoUnit));
    }

    #[test]
    fn morphism_checks() {
        let f = FieldSpec::GF2;
        let a = split2(f);
        let id = Morphism::identity(&a).verify(&a, &a, &ALL_FLAGS).unwrap();
        assert_eq!(id.flags().len(), 4);
        let swap = Morphism::from_images(f, &[a.b("e2"), a.b("e1")]).verify(&a, &a, &ALL_FLAGS).unwrap();
        assert!(swap.has(MorphismFlag::AlgebraHom));
        let bad = Morphism::from_images(f, &[a.b("e1"), a.b("e1")]).verify(&a, &a, &[MorphismFlag::AlgebraHom]);
        assert!(matches!(bad, Err(SuperError::CheckFailed { flag: MorphismFlag::AlgebraHom, .. })));
    }

    #[test]
    fn json_round_trip() {
        let a = split2(FieldSpec::GF4);
        let j = a.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SuperAlgebra::from_json(&back).unwrap(), a);
    }

    #[test]
    fn formatting() {
        let f = FieldSpec::GF3;
        let names: Vec<String> = vec!["e1".into(), "u1".into(), "v1".into()];
        assert_eq!(format_combination(&names, &[f.one(), f.from_int(2), f.zero()]), "e1 + 2u1");
        let q = FieldSpec::Q;
        assert_eq!(format_combination(&names, &[q.from_int(-1), q.zero(), q.one()]), "-e1 + v1");
        assert_eq!(format_combination(&names, &[q.zero(), q.zero(), q.zero()]), "0");
    }
}
