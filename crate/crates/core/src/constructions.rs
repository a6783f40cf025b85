//! Named algebras and automorphisms built from exact structure constants.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fields::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::superalgebra::{Morphism, MorphismFlag, SuperAlgebra, SuperError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("construction needs characteristic {required}, field {field} has characteristic {got}")]
    WrongCharacteristic { required: u32, got: u32, field: String },
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("input is not a Hurwitz algebra: {0}")]
    NotHurwitz(String),
    #[error("field {0} has no primitive cube root of unity")]
    NoCubeRoot(String),
    #[error("bad automorphism: {0}")]
    BadAutomorphism(String),
    #[error("seed is not a nonzero isotropic element")]
    NotIsotropic,
    #[error("algebra is not split: {0}")]
    NotSplit(String),
    #[error("unknown construction `{0}`")]
    Unknown(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Super(#[from] SuperError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn need_char(field: FieldSpec, p: u32) -> Result<()> {
    if field.characteristic() == p {
        Ok(())
    } else {
        Err(ConstructionError::WrongCharacteristic { required: p, got: field.characteristic(), field: field.to_string() })
    }
}

pub const SPLIT8_NAMES: [&str; 8] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];

/// The product table of a canonical basis as signed index pairs, `None` for zero.
fn split8_product(i: usize, j: usize) -> Option<(i64, usize)> {
    // indices: e1 0, e2 1, u1..u3 2..4, v1..v3 5..7
    const E1: usize = 0;
    const E2: usize = 1;
    let u = |k: usize| 1 + k;
    let v = |k: usize| 4 + k;
    match (i, j) {
        (E1, E1) => Some((1, E1)),
        (E2, E2) => Some((1, E2)),
        (E1, 2..=4) => Some((1, j)),
        (E2, 5..=7) => Some((1, j)),
        (2..=4, E2) => Some((1, i)),
        (5..=7, E1) => Some((1, i)),
        (2..=4, 5..=7) if j - 5 == i - 2 => Some((-1, E1)),
        (5..=7, 2..=4) if i - 5 == j - 2 => Some((-1, E2)),
        (2..=4, 2..=4) if i != j => {
            // u_a u_b = ±v_c with sign of the cyclic order
            let (a, b) = (i - 1, j - 1);
            let c = 6 - a - b;
            let sign = if (a % 3) + 1 == b { 1 } else { -1 };
            Some((sign, v(c)))
        }
        (5..=7, 5..=7) if i != j => {
            let (a, b) = (i - 4, j - 4);
            let c = 6 - a - b;
            let sign = if (a % 3) + 1 == b { 1 } else { -1 };
            Some((sign, u(c)))
        }
        _ => None,
    }
}

/// Basis vectors of a split Hurwitz algebra realizing the multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    /// `e1, e2, u1.., v1..` in that order (2, 4 or 8 vectors).
    vectors: Vec<Vector>,
}

impl CanonicalBasis {
    pub fn new(vectors: Vec<Vector>) -> Self {
        assert!(matches!(vectors.len(), 2 | 4 | 8));
        CanonicalBasis { vectors }
    }

    /// The coordinate basis of an algebra built by [`split_hurwitz`].
    pub fn standard(field: FieldSpec, dim: usize) -> Self {
        CanonicalBasis { vectors: (0..dim).map(|i| linalg::unit_vector(field, dim, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn e1(&self) -> &Vector {
        &self.vectors[0]
    }

    pub fn e2(&self) -> &Vector {
        &self.vectors[1]
    }

    /// `u_i`, 1-based.
    pub fn u(&self, i: usize) -> &Vector {
        let k = (self.dim() - 2) / 2;
        assert!((1..=k).contains(&i));
        &self.vectors[1 + i]
    }

    /// `v_i`, 1-based.
    pub fn v(&self, i: usize) -> &Vector {
        let k = (self.dim() - 2) / 2;
        assert!((1..=k).contains(&i));
        &self.vectors[1 + k + i]
    }

    /// Map sending the standard split algebra onto this basis.
    pub fn as_morphism(&self, field: FieldSpec) -> Morphism {
        Morphism::from_images(field, &self.vectors)
    }

    /// First pair `(i, j)` whose product differs from the table, if any.
    pub fn table_mismatch(&self, alg: &SuperAlgebra) -> Option<(usize, usize)> {
        let f = alg.field();
        let reference = split_table_algebra(f, self.dim());
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let expected = reference.basis_product(i, j);
                let expected = linalg::combine(f, alg.dim(), &expected, &self.vectors);
                if alg.mul(&self.vectors[i], &self.vectors[j]) != expected {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Table products and the norm values `q(e_i)=0`, `b(e1,e2)=1`, `b(u_i,v_j)=δ_ij`, `q(u_i)=q(v_i)=0`.
    pub fn verify(&self, alg: &SuperAlgebra) -> bool {
        if self.table_mismatch(alg).is_some() {
            return false;
        }
        let reference = split_table_algebra(alg.field(), self.dim());
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| alg.eval_b(&self.vectors[i], &self.vectors[j]) == reference.polar()[(i, j)])
                && (!alg.is_even_element(&self.vectors[i]) || alg.q0_even(&self.vectors[i]) == reference.q0_values()[i])
        })
    }
}

fn split_names(dim: usize) -> Vec<&'static str> {
    match dim {
        2 => vec!["e1", "e2"],
        4 => vec!["e1", "e2", "u1", "v1"],
        8 => SPLIT8_NAMES.to_vec(),
        _ => unreachable!(),
    }
}

fn split8_index(name: &str) -> usize {
    SPLIT8_NAMES.iter().position(|n| *n == name).expect("split name")
}

fn split_table_algebra(field: FieldSpec, dim: usize) -> SuperAlgebra {
    build_split(field, dim, &vec![false; dim]).expect("split table is consistent")
}

fn build_split(field: FieldSpec, dim: usize, odd: &[bool]) -> std::result::Result<SuperAlgebra, SuperError> {
    let names = split_names(dim);
    let big: Vec<usize> = names.iter().map(|n| split8_index(n)).collect();
    let mut products = Vec::new();
    for (i, &bi) in big.iter().enumerate() {
        for (j, &bj) in big.iter().enumerate() {
            if let Some((sign, k)) = split8_product(bi, bj) {
                let kk = big.iter().position(|&x| x == k).expect("closed under products");
                let mut v = linalg::zero_vector(field, dim);
                v[kk] = field.from_int(sign);
                products.push((i, j, v));
            }
        }
    }
    let mut polar = Matrix::zeros(field, dim, dim);
    polar[(0, 1)] = field.one();
    polar[(1, 0)] = field.one();
    let k = (dim - 2) / 2;
    for i in 0..k {
        let (a, b) = (2 + i, 2 + k + i);
        polar[(a, b)] = field.one();
        // odd pairs are alternating; in the characteristic 2 super case -1 = 1
        polar[(b, a)] = if odd[a] { -field.one() } else { field.one() };
    }
    SuperAlgebra::new(
        field,
        names.iter().map(|s| s.to_string()).collect(),
        odd.to_vec(),
        &products,
        vec![field.zero(); dim],
        polar,
    )
}

/// Split Hurwitz algebra of dimension 2, 4 or 8 (trivial odd part) with its canonical basis.
pub fn split_hurwitz(dim: usize, field: FieldSpec) -> Result<(SuperAlgebra, CanonicalBasis)> {
    if !matches!(dim, 2 | 4 | 8) {
        return Err(ConstructionError::Unsupported(format!("split Hurwitz algebra of dimension {dim}")));
    }
    Ok((build_split(field, dim, &vec![false; dim])?, CanonicalBasis::standard(field, dim)))
}

/// Split Cayley algebra as a superalgebra with even part `e1, e2, u3, v3` (characteristic 2).
pub fn super_split_cayley(field: FieldSpec) -> Result<(SuperAlgebra, CanonicalBasis)> {
    need_char(field, 2)?;
    let odd = [false, false, true, true, false, true, true, false];
    Ok((build_split(field, 8, &odd)?, CanonicalBasis::standard(field, 8)))
}

/// Split quaternions as a superalgebra with even part `e1, e2` (characteristic 2).
pub fn super_split_quaternion(field: FieldSpec) -> Result<(SuperAlgebra, CanonicalBasis)> {
    need_char(field, 2)?;
    Ok((build_split(field, 4, &[false, false, true, true])?, CanonicalBasis::standard(field, 4)))
}

/// `K = F1 + Fw` with `w^2 + w + 1 = 0`, normed by `q(a + bw) = a^2 - ab + b^2`.
pub fn k_w(field: FieldSpec) -> Result<SuperAlgebra> {
    let one = field.one();
    let z = field.zero();
    let products = vec![
        (0, 0, vec![one, z]),
        (0, 1, vec![z, one]),
        (1, 0, vec![z, one]),
        (1, 1, vec![-one, -one]),
    ];
    let polar = Matrix::from_rows(field, 2, &[vec![one + one, -one], vec![-one, one + one]]);
    Ok(SuperAlgebra::new(field, vec!["1".into(), "w".into()], vec![false, false], &products, vec![one, one], polar)?)
}

fn doubled_name(n: &str, letter: &str) -> String {
    if n == "1" {
        letter.to_string()
    } else {
        format!("{n}{letter}")
    }
}

/// Cayley-Dickson doubling `Q + Qu` with `(a+bu)(c+du) = (ac - α d̄b) + (da + bc̄)u`
/// and `q(bu) = -α q(b)`. With `odd_half` the new half `Qu` is the odd part.
pub fn cayley_dickson(q: &SuperAlgebra, alpha: Scalar, letter: &str, odd_half: bool) -> Result<SuperAlgebra> {
    let field = q.field();
    need_char(field, 2)?;
    if alpha.is_zero() {
        return Err(ConstructionError::ZeroAlpha);
    }
    if !q.odd_indices().is_empty() {
        return Err(ConstructionError::NotHurwitz("doubling input must have trivial odd part".into()));
    }
    let allowed: &[usize] = if odd_half { &[2, 4] } else { &[1, 2, 4] };
    if !allowed.contains(&q.dim()) {
        return Err(ConstructionError::Unsupported(format!("doubling of a {}-dimensional algebra", q.dim())));
    }
    if q.unit().is_none() || !q.is_regular_superform() {
        return Err(ConstructionError::NotHurwitz("no unit or degenerate norm".into()));
    }
    let m = q.dim();
    let n = 2 * m;
    let conj: Vec<Vector> = (0..m).map(|i| q.conjugate(&q.basis(i))).collect::<std::result::Result<_, _>>()?;
    let embed = |v: &Vector, shift: usize| -> Vector {
        let mut out = linalg::zero_vector(field, n);
        out[shift..shift + m].copy_from_slice(v);
        out
    };
    let mut products = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let qi = q.basis(i);
            let qj = q.basis(j);
            products.push((i, j, embed(&q.mul(&qi, &qj), 0)));
            products.push((i, m + j, embed(&q.mul(&qj, &qi), m)));
            products.push((m + i, j, embed(&q.mul(&qi, &conj[j]), m)));
            products.push((m + i, m + j, embed(&linalg::scale(-alpha, &q.mul(&conj[j], &qi)), 0)));
        }
    }
    let mut polar = Matrix::zeros(field, n, n);
    for i in 0..m {
        for j in 0..m {
            polar[(i, j)] = q.polar()[(i, j)];
            polar[(m + i, m + j)] = -alpha * q.polar()[(i, j)];
        }
    }
    let mut q0 = q.q0_values().to_vec();
    q0.extend(q.q0_values().iter().map(|v| -alpha * *v));
    let mut names: Vec<String> = q.names().to_vec();
    names.extend(q.names().iter().map(|nm| doubled_name(nm, letter)));
    let mut odd = vec![false; m];
    odd.extend(std::iter::repeat_n(odd_half, m));
    Ok(SuperAlgebra::new(field, names, odd, &products, q0, polar)?)
}

/// `B(1,2)` on the basis `1, u, v` with `(u, v) = 1`.
pub fn b12(field: FieldSpec) -> Result<SuperAlgebra> {
    need_char(field, 3)?;
    let one = field.one();
    let e = |i| linalg::unit_vector(field, 3, i);
    let products = vec![
        (0, 0, e(0)),
        (0, 1, e(1)),
        (0, 2, e(2)),
        (1, 0, e(1)),
        (2, 0, e(2)),
        (1, 2, e(0)),
        (2, 1, linalg::neg(&e(0))),
    ];
    let mut polar = Matrix::zeros(field, 3, 3);
    polar[(0, 0)] = one + one;
    polar[(1, 2)] = one;
    polar[(2, 1)] = -one;
    let q0 = vec![one, field.zero(), field.zero()];
    Ok(SuperAlgebra::new(field, vec!["1".into(), "u".into(), "v".into()], vec![false, true, true], &products, q0, polar)?)
}

/// `B(4,2)` on the basis `e1, e2, x, y, u, v` (matrix units and `V = F^2`).
pub fn b42(field: FieldSpec) -> Result<SuperAlgebra> {
    need_char(field, 3)?;
    let names = ["e1", "e2", "x", "y", "u", "v"];
    let idx = |s: &str| names.iter().position(|n| *n == s).unwrap();
    let mut products = Vec::new();
    let mut put = |a: &str, b: &str, sign: i64, c: &str| {
        let mut v = linalg::zero_vector(field, 6);
        v[idx(c)] = field.from_int(sign);
        products.push((idx(a), idx(b), v));
    };
    // End(V): e1 = E11, e2 = E22, x = E12, y = E21
    for (a, b, c) in [
        ("e1", "e1", "e1"),
        ("e2", "e2", "e2"),
        ("e1", "x", "x"),
        ("x", "e2", "x"),
        ("e2", "y", "y"),
        ("y", "e1", "y"),
        ("x", "y", "e1"),
        ("y", "x", "e2"),
    ] {
        put(a, b, 1, c);
    }
    // w·φ = φ(w)
    for (a, b, s, c) in [("u", "e1", 1, "u"), ("u", "y", 1, "v"), ("v", "e2", 1, "v"), ("v", "x", 1, "u")] {
        put(a, b, s, c);
    }
    // φ·w = φ̄(w)
    for (a, b, s, c) in [("e1", "v", 1, "v"), ("e2", "u", 1, "u"), ("x", "v", -1, "u"), ("y", "u", -1, "v")] {
        put(a, b, s, c);
    }
    for (a, b, s, c) in [("u", "u", -1, "x"), ("v", "v", 1, "y"), ("u", "v", -1, "e2"), ("v", "u", 1, "e1")] {
        put(a, b, s, c);
    }
    let one = field.one();
    let mut polar = Matrix::zeros(field, 6, 6);
    polar[(0, 1)] = one;
    polar[(1, 0)] = one;
    polar[(2, 3)] = -one;
    polar[(3, 2)] = -one;
    polar[(4, 5)] = one;
    polar[(5, 4)] = -one;
    Ok(SuperAlgebra::new(
        field,
        names.iter().map(|s| s.to_string()).collect(),
        vec![false, false, false, false, true, true],
        &products,
        vec![field.zero(); 6],
        polar,
    )?)
}

fn conjugates(c: &SuperAlgebra) -> Result<Vec<Vector>> {
    if c.unit().is_none() {
        return Err(ConstructionError::NotHurwitz("no unit".into()));
    }
    if !c.is_regular_superform() {
        return Err(ConstructionError::NotHurwitz("norm is not regular".into()));
    }
    Ok((0..c.dim()).map(|i| c.conjugate(&c.basis(i))).collect::<std::result::Result<_, _>>()?)
}

/// `x * y = x̄ · ȳ`
pub fn para_hurwitz(c: &SuperAlgebra) -> Result<SuperAlgebra> {
    let bar = conjugates(c)?;
    Ok(c.with_product(|i, j| c.mul(&bar[i], &bar[j]))?)
}

/// Check that `phi` is a parity-preserving algebra automorphism with `phi^3 = 1`.
pub fn check_order3_automorphism(c: &SuperAlgebra, phi: &Morphism) -> Result<Morphism> {
    let verified = phi
        .clone()
        .verify(c, c, &[MorphismFlag::AlgebraHom, MorphismFlag::ParityPreserving])
        .map_err(|e| ConstructionError::BadAutomorphism(e.to_string()))?;
    if phi.matrix().inverse().is_none() {
        return Err(ConstructionError::BadAutomorphism("not invertible".into()));
    }
    if !phi.pow(3).is_identity() {
        return Err(ConstructionError::BadAutomorphism("order does not divide 3".into()));
    }
    Ok(verified)
}

/// `x * y = φ(x̄) · φ²(ȳ)`
pub fn petersson_twist(c: &SuperAlgebra, phi: &Morphism) -> Result<SuperAlgebra> {
    let bar = conjugates(c)?;
    check_order3_automorphism(c, phi)?;
    let phi2 = phi.pow(2);
    let left: Vec<Vector> = bar.iter().map(|x| phi.apply(x)).collect();
    let right: Vec<Vector> = bar.iter().map(|x| phi2.apply(x)).collect();
    Ok(c.with_product(|i, j| c.mul(&left[i], &right[j]))?)
}

/// Automorphism given on a canonical basis by images written in that basis.
fn on_canonical_basis(c: &SuperAlgebra, cb: &CanonicalBasis, images: &[Vec<(i64, usize)>]) -> Morphism {
    let f = c.field();
    let n = cb.dim();
    let b = Matrix::from_columns(f, c.dim(), cb.vectors());
    let mut t = Matrix::zeros(f, n, n);
    for (col, terms) in images.iter().enumerate() {
        for &(s, row) in terms {
            t[(row, col)] += f.from_int(s);
        }
    }
    let binv = b.inverse().expect("canonical basis is a basis");
    Morphism::linear(b.mul(&t).mul(&binv))
}

fn on_canonical_basis_scalar(c: &SuperAlgebra, cb: &CanonicalBasis, diag: &[Scalar]) -> Morphism {
    let f = c.field();
    let b = Matrix::from_columns(f, c.dim(), cb.vectors());
    let mut t = Matrix::zeros(f, diag.len(), diag.len());
    for (i, d) in diag.iter().enumerate() {
        t[(i, i)] = *d;
    }
    Morphism::linear(b.mul(&t).mul(&b.inverse().expect("basis")))
}

fn verify_tau(c: &SuperAlgebra, m: Morphism) -> Result<Morphism> {
    let m = m
        .verify(c, c, &[MorphismFlag::AlgebraHom, MorphismFlag::Isometry, MorphismFlag::InvolutionCommuting])
        .map_err(|e| ConstructionError::BadAutomorphism(e.to_string()))?;
    if !m.pow(3).is_identity() {
        return Err(ConstructionError::BadAutomorphism("order does not divide 3".into()));
    }
    Ok(m.clone().verify(c, c, &[MorphismFlag::ParityPreserving]).unwrap_or(m))
}

fn need8(cb: &CanonicalBasis) -> Result<()> {
    if cb.dim() == 8 {
        Ok(())
    } else {
        Err(ConstructionError::Unsupported("τ maps need an 8-dimensional canonical basis".into()))
    }
}

/// `u_i -> u_{i+1}`, `v_i -> v_{i+1}`
pub fn tau_st(c: &SuperAlgebra, cb: &CanonicalBasis) -> Result<Morphism> {
    need8(cb)?;
    let images = vec![
        vec![(1, 0)],
        vec![(1, 1)],
        vec![(1, 3)],
        vec![(1, 4)],
        vec![(1, 2)],
        vec![(1, 6)],
        vec![(1, 7)],
        vec![(1, 5)],
    ];
    verify_tau(c, on_canonical_basis(c, cb, &images))
}

/// `u1 -> u2, u2 -> -u1-u2, v1 -> -v1+v2, v2 -> -v1`, identity elsewhere.
pub fn tau_nst(c: &SuperAlgebra, cb: &CanonicalBasis) -> Result<Morphism> {
    need8(cb)?;
    let images = vec![
        vec![(1, 0)],
        vec![(1, 1)],
        vec![(1, 3)],
        vec![(-1, 2), (-1, 3)],
        vec![(1, 4)],
        vec![(-1, 5), (1, 6)],
        vec![(-1, 5)],
        vec![(1, 7)],
    ];
    verify_tau(c, on_canonical_basis(c, cb, &images))
}

/// `u_i -> ω^i u_i`, `v_i -> ω^{-i} v_i`
pub fn tau_omega(c: &SuperAlgebra, cb: &CanonicalBasis) -> Result<Morphism> {
    need8(cb)?;
    let f = c.field();
    let w = f.primitive_cube_root().ok_or_else(|| ConstructionError::NoCubeRoot(f.to_string()))?;
    let w2 = w * w;
    let one = f.one();
    let diag = [one, one, w, w2, one, w2, w, one];
    verify_tau(c, on_canonical_basis_scalar(c, cb, &diag))
}

/// `φ(u) = u`, `φ(v) = λu + v` on `B(1,2)`.
pub fn b12_phi(b: &SuperAlgebra, lambda: Scalar) -> Morphism {
    let f = b.field();
    let mut img_v = b.b("v");
    img_v[1] = lambda;
    Morphism::from_images(f, &[b.b("1"), b.b("u"), img_v])
}

/// Petersson twist of `B(1,2)` by [`b12_phi`]; returns the twisted algebra and φ.
pub fn b12_lambda(field: FieldSpec, lambda: Scalar) -> Result<(SuperAlgebra, Morphism)> {
    let b = b12(field)?;
    let phi = check_order3_automorphism(&b, &b12_phi(&b, lambda))?;
    let s = petersson_twist(&b, &phi)?;
    Ok((s, phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OkuboVariant {
    Nst,
    Omega,
}

impl fmt::Display for OkuboVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OkuboVariant::Nst => "nst",
            OkuboVariant::Omega => "omega",
        })
    }
}

impl FromStr for OkuboVariant {
    type Err = ConstructionError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nst" => Ok(OkuboVariant::Nst),
            "omega" => Ok(OkuboVariant::Omega),
            other => Err(ConstructionError::Unsupported(format!("variant `{other}`"))),
        }
    }
}

/// Okubo superalgebra with the data it was built from.
#[derive(Debug, Clone)]
pub struct Okubo {
    /// Petersson product `*`.
    pub algebra: SuperAlgebra,
    /// The super split Cayley algebra `(S, ·)`.
    pub hurwitz: SuperAlgebra,
    pub phi: Morphism,
    pub basis: CanonicalBasis,
    pub variant: OkuboVariant,
}

pub fn okubo_super(field: FieldSpec, variant: OkuboVariant) -> Result<Okubo> {
    let (c, cb) = super_split_cayley(field)?;
    let phi = match variant {
        OkuboVariant::Nst => tau_nst(&c, &cb)?,
        OkuboVariant::Omega => tau_omega(&c, &cb)?,
    };
    let s = petersson_twist(&c, &phi)?;
    Ok(Okubo { algebra: s, hurwitz: c, phi, basis: cb, variant })
}

/// `e1`, `e2 = 1 - e1` and the Peirce spaces of a split Hurwitz algebra.
#[derive(Debug, Clone)]
pub struct PeirceDecomposition {
    pub e1: Vector,
    pub e2: Vector,
    pub k: Subspace,
    pub u: Subspace,
    pub v: Subspace,
}

/// `U = {x : e1 x = x = x e2, e2 x = 0 = x e1}` and symmetrically `V`.
pub fn peirce_decomposition(c: &SuperAlgebra, e1: &[Scalar]) -> Result<PeirceDecomposition> {
    let f = c.field();
    let n = c.dim();
    let one = c.unit().ok_or_else(|| ConstructionError::NotHurwitz("no unit".into()))?.clone();
    let e2 = linalg::sub(&one, e1);
    let left = |e: &[Scalar]| -> Matrix {
        Matrix::from_columns(f, n, &(0..n).map(|i| c.mul(e, &c.basis(i))).collect::<Vec<_>>())
    };
    let right = |e: &[Scalar]| -> Matrix {
        Matrix::from_columns(f, n, &(0..n).map(|i| c.mul(&c.basis(i), e)).collect::<Vec<_>>())
    };
    let id = Matrix::identity(f, n);
    let stack = |ms: &[Matrix]| -> Matrix {
        let rows: Vec<Vector> = ms.iter().flat_map(|m| (0..m.rows()).map(|r| m.row(r)).collect::<Vec<_>>()).collect();
        Matrix::from_rows(f, n, &rows)
    };
    let (l1, l2, r1, r2) = (left(e1), left(&e2), right(e1), right(&e2));
    let u = stack(&[l1.sub(&id), r2.sub(&id), l2.clone(), r1.clone()]).kernel();
    let v = stack(&[l2.sub(&id), r1.sub(&id), l1, r2]).kernel();
    Ok(PeirceDecomposition {
        k: Subspace::span(f, n, &[e1.to_vec(), e2.clone()]),
        e1: e1.to_vec(),
        e2,
        u: Subspace::span(f, n, &u),
        v: Subspace::span(f, n, &v),
    })
}

fn enumerate(field: FieldSpec, n: usize) -> Result<impl Iterator<Item = Vector>> {
    if !field.is_finite() {
        return Err(ConstructionError::Unsupported("search-based step needs a finite field".into()));
    }
    Ok(linalg::all_vectors(field, n))
}

/// Complete `u1, u2` (spanning `U` with `u3` chosen in `u3_space`) to a canonical basis.
fn complete_from_u(c: &SuperAlgebra, e1: &[Scalar], e2: &[Scalar], u1: Vector, u2: Vector, u3_space: &Subspace) -> Result<CanonicalBasis> {
    let f = c.field();
    let u12 = c.mul(&u1, &u2);
    let u3 = u3_space
        .elements()
        .into_iter()
        .find(|w| c.eval_b(&u12, w) == f.one())
        .ok_or_else(|| ConstructionError::NotSplit("no u3 with q(u1u2, u3) = 1".into()))?;
    let v1 = c.mul(&u2, &u3);
    let v2 = c.mul(&u3, &u1);
    let v3 = c.mul(&u1, &u2);
    Ok(CanonicalBasis::new(vec![e1.to_vec(), e2.to_vec(), u1, u2, u3, v1, v2, v3]))
}

/// Canonical basis of a split Cayley algebra grown from an isotropic seed.
pub fn canonical_basis_find(c: &SuperAlgebra, a: &[Scalar]) -> Result<CanonicalBasis> {
    let f = c.field();
    if c.dim() != 8 {
        return Err(ConstructionError::Unsupported("canonical basis search needs dimension 8".into()));
    }
    if linalg::is_zero(a) || !c.is_even_element(a) || !c.q0_even(a).is_zero() {
        return Err(ConstructionError::NotIsotropic);
    }
    let b = enumerate(f, 8)?
        .find(|b| c.conjugate(b).map(|bb| c.eval_b(a, &bb) == f.one()).unwrap_or(false))
        .ok_or_else(|| ConstructionError::NotHurwitz("no b with q(a, b̄) = 1".into()))?;
    let e1 = c.mul(a, &b);
    let p = peirce_decomposition(c, &e1)?;
    if p.u.dim() != 3 || p.v.dim() != 3 {
        return Err(ConstructionError::NotHurwitz("Peirce spaces are not 3-dimensional".into()));
    }
    let (u1, u2) = (p.u.basis()[0].clone(), p.u.basis()[1].clone());
    let cb = complete_from_u(c, &e1, &p.e2, u1, u2, &p.u)?;
    if !cb.verify(c) {
        return Err(ConstructionError::NotHurwitz("resulting basis fails the multiplication table".into()));
    }
    Ok(cb)
}

/// Canonical basis of the super split Cayley algebra in which an order-3 automorphism
/// fixing the even part acts as `τ_nst`, or as `τ_ω` when the field contains `ω`.
pub fn adapt_basis_to_automorphism(c: &SuperAlgebra, phi: &Morphism) -> Result<(CanonicalBasis, OkuboVariant)> {
    let f = c.field();
    if c.dim() != 8 || c.odd_indices().len() != 4 {
        return Err(ConstructionError::Unsupported("expects the super split Cayley algebra".into()));
    }
    check_order3_automorphism(c, phi)?;
    let bad = |m: &str| ConstructionError::BadAutomorphism(m.into());
    if c.even_indices().iter().any(|&i| phi.image(i) != c.basis(i)) {
        return Err(bad("does not fix the even part"));
    }
    let fixed = phi.matrix().sub(&Matrix::identity(f, 8)).kernel();
    if fixed.iter().any(|v| !linalg::is_zero(&odd_part(c, v))) || fixed.len() > 4 {
        return Err(bad("has fixed points on the odd part"));
    }
    let one = c.unit().expect("Hurwitz").clone();
    let even = Subspace::span(f, 8, &c.even_indices().iter().map(|&i| c.basis(i)).collect::<Vec<_>>());
    let e1 = even
        .elements()
        .into_iter()
        .find(|e| !linalg::is_zero(e) && *e != one && c.mul(e, e) == *e)
        .ok_or_else(|| ConstructionError::NotSplit("even part has no nontrivial idempotent".into()))?;
    let p = peirce_decomposition(c, &e1)?;
    let odd_space = Subspace::span(f, 8, &c.odd_indices().iter().map(|&i| c.basis(i)).collect::<Vec<_>>());
    let u_odd = p.u.intersection(&odd_space);
    let u_even = p.u.intersection(&even);
    match f.primitive_cube_root() {
        Some(w) => {
            let eigen = |lambda: Scalar| -> Option<Vector> {
                let m = phi.matrix().sub(&Matrix::identity(f, 8).scaled(lambda));
                Subspace::span(f, 8, &m.kernel()).intersection(&u_odd).basis().first().cloned()
            };
            let u1 = eigen(w).ok_or_else(|| bad("no ω-eigenvector in U"))?;
            let u2 = eigen(w * w).ok_or_else(|| bad("no ω²-eigenvector in U"))?;
            let cb = complete_from_u(c, &e1, &p.e2, u1, u2, &u_even)?;
            Ok((cb, OkuboVariant::Omega))
        }
        None => {
            let u1 = u_odd.basis().first().cloned().ok_or_else(|| bad("odd part of U is zero"))?;
            let u2 = phi.apply(&u1);
            let cb = complete_from_u(c, &e1, &p.e2, u1, u2, &u_even)?;
            Ok((cb, OkuboVariant::Nst))
        }
    }
}

fn odd_part(c: &SuperAlgebra, v: &[Scalar]) -> Vector {
    v.iter().enumerate().map(|(i, x)| if c.is_odd(i) { *x } else { c.field().zero() }).collect()
}

/// Parameters accepted by [`build`].
#[derive(Debug, Clone, Default)]
pub struct BuildParams {
    pub alpha: Option<Scalar>,
    pub lambda: Option<Scalar>,
    pub variant: Option<String>,
}

pub const CONSTRUCTION_IDS: [&str; 12] = [
    "split2", "split4", "split8", "cd", "b12", "b42", "para", "petersson", "b12lambda", "okubo-nst", "okubo-omega", "p8",
];

/// Build a construction by its identifier.
///
/// `cd` doubles the split algebra of dimension `variant` (2 or 4, default 4) by `alpha` (default 1).
/// `para` takes the base construction id in `variant` (default `split8`).
/// `petersson` twists the split Cayley algebra by `τ_nst` or `τ_ω` (`variant` nst|omega).
pub fn build(id: &str, field: FieldSpec, params: &BuildParams) -> Result<SuperAlgebra> {
    match id {
        "split2" => Ok(split_hurwitz(2, field)?.0),
        "split4" => Ok(split_hurwitz(4, field)?.0),
        "split8" => Ok(split_hurwitz(8, field)?.0),
        "cd" => {
            let base = match params.variant.as_deref().unwrap_or("4") {
                "2" => 2,
                "4" => 4,
                other => return Err(ConstructionError::Unsupported(format!("cd base dimension `{other}`"))),
            };
            let alpha = params.alpha.unwrap_or(field.one());
            cayley_dickson(&split_hurwitz(base, field)?.0, alpha, "u", true)
        }
        "b12" => b12(field),
        "b42" => b42(field),
        "para" => {
            let base = params.variant.clone().unwrap_or_else(|| "split8".into());
            if base == "para" {
                return Err(ConstructionError::Unsupported("para of para".into()));
            }
            let inner = BuildParams { variant: None, ..params.clone() };
            para_hurwitz(&build(&base, field, &inner)?)
        }
        "petersson" => {
            let (c, cb) = split_hurwitz(8, field)?;
            let phi = match params.variant.as_deref().unwrap_or("nst").parse::<OkuboVariant>()? {
                OkuboVariant::Nst => tau_nst(&c, &cb)?,
                OkuboVariant::Omega => tau_omega(&c, &cb)?,
            };
            petersson_twist(&c, &phi)
        }
        "p8" => {
            let (c, cb) = split_hurwitz(8, field)?;
            petersson_twist(&c, &tau_st(&c, &cb)?)
        }
        "b12lambda" => Ok(b12_lambda(field, params.lambda.unwrap_or(field.one()))?.0),
        "okubo-nst" => Ok(okubo_super(field, OkuboVariant::Nst)?.algebra),
        "okubo-omega" => Ok(okubo_super(field, OkuboVariant::Omega)?.algebra),
        other => Err(ConstructionError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_table_entries() {
        let f = FieldSpec::GF2;
        let (c, _) = split_hurwitz(8, f).unwrap();
        assert_eq!(c.mul(&c.b("v1"), &c.b("v2")), c.b("u3"));
        assert_eq!(c.mul(&c.b("u1"), &c.b("u2")), c.b("v3"));
        let f3 = FieldSpec::GF3;
        let (c3, _) = split_hurwitz(8, f3).unwrap();
        assert_eq!(c3.mul(&c3.b("u1"), &c3.b("v1")), linalg::scale(f3.from_int(-1), &c3.b("e1")));
        assert_eq!(c3.mul(&c3.b("u3"), &c3.b("u1")), c3.b("v2"));
        assert_eq!(c3.mul(&c3.b("v3"), &c3.b("v2")), linalg::neg(&c3.b("u1")));
        let (q4, _) = split_hurwitz(4, f3).unwrap();
        assert_eq!(q4.mul(&q4.b("u1"), &q4.b("v1")), vec![f3.from_int(2), f3.zero(), f3.zero(), f3.zero()]);
        let (k, _) = split_hurwitz(2, FieldSpec::Q).unwrap();
        assert!(linalg::is_zero(&k.mul(&k.b("e1"), &k.b("e2"))));
    }

    #[test]
    fn split_norm_and_conjugation() {
        let f = FieldSpec::GF3;
        let (c, cb) = split_hurwitz(8, f).unwrap();
        assert_eq!(c.eval_b(&c.b("e1"), &c.b("e2")), f.one());
        assert!(c.eval_q0(&c.b("u1")).unwrap().is_zero());
        assert_eq!(c.conjugate(&c.b("e1")).unwrap(), c.b("e2"));
        assert_eq!(c.conjugate(&c.b("u1")).unwrap(), linalg::neg(&c.b("u1")));
        assert!(cb.verify(&c));
        // x x̄ = q(x) 1 for x = u1 + v1
        let x = linalg::add(&c.b("u1"), &c.b("v1"));
        let xx = c.mul(&x, &c.conjugate(&x).unwrap());
        assert_eq!(xx, linalg::scale(c.q0_even(&x), c.unit().unwrap()));
    }

    #[test]
    fn cayley_dickson_examples() {
        let f = FieldSpec::GF2;
        let (q, _) = split_hurwitz(2, f).unwrap();
        let c = cayley_dickson(&q, f.one(), "u", true).unwrap();
        assert_eq!(c.names(), &["e1", "e2", "e1u", "e2u"]);
        // u = e1u + e2u squares to 1
        let u = linalg::add(&c.b("e1u"), &c.b("e2u"));
        assert_eq!(c.mul(&u, &u), c.unit().unwrap().clone());
        assert_eq!(c.mul(&c.b("e1"), &c.b("e1")), c.b("e1"));
        assert!(c.is_regular_superform());
        assert_eq!(cayley_dickson(&q, f.zero(), "u", true), Err(ConstructionError::ZeroAlpha));
        let q3 = split_hurwitz(2, FieldSpec::GF3).unwrap().0;
        assert!(matches!(cayley_dickson(&q3, FieldSpec::GF3.one(), "u", true), Err(ConstructionError::WrongCharacteristic { .. })));
    }

    #[test]
    fn b12_and_b42_products() {
        let f = FieldSpec::GF3;
        let b = b12(f).unwrap();
        assert_eq!(b.mul(&b.b("u"), &b.b("v")), b.b("1"));
        assert_eq!(b.mul(&b.b("v"), &b.b("u")), linalg::scale(f.from_int(2), &b.b("1")));
        assert!(b.is_regular_superform());
        let c = b42(f).unwrap();
        assert_eq!(c.mul(&c.b("u"), &c.b("v")), linalg::neg(&c.b("e2")));
        assert_eq!(c.mul(&c.b("e1"), &c.b("x")), c.b("x"));
        assert_eq!(c.mul(&c.b("x"), &c.b("e2")), c.b("x"));
        assert_eq!(c.unit().unwrap(), &linalg::add(&c.b("e1"), &c.b("e2")));
        assert!(c.is_regular_superform());
        assert!(matches!(b12(FieldSpec::GF2), Err(ConstructionError::WrongCharacteristic { .. })));
    }

    #[test]
    fn para_and_petersson() {
        let f = FieldSpec::GF3;
        let (k, _) = split_hurwitz(2, f).unwrap();
        let p = para_hurwitz(&k).unwrap();
        assert_eq!(p.mul(&k.b("e1"), &k.b("e1")), k.b("e2"));
        let one = k.unit().unwrap().clone();
        assert_eq!(p.mul(&one, &one), one);
        let (c, _) = split_hurwitz(8, f).unwrap();
        let id = Morphism::identity(&c);
        assert_eq!(petersson_twist(&c, &id).unwrap(), para_hurwitz(&c).unwrap());
    }

    #[test]
    fn tau_maps() {
        let f = FieldSpec::GF4;
        let (c, cb) = split_hurwitz(8, f).unwrap();
        let nst = tau_nst(&c, &cb).unwrap();
        assert_eq!(nst.apply(&c.b("v1")), linalg::add(&linalg::neg(&c.b("v1")), &c.b("v2")));
        let w = f.primitive_cube_root().unwrap();
        let om = tau_omega(&c, &cb).unwrap();
        assert_eq!(om.apply(&c.b("v2")), linalg::scale(w, &c.b("v2")));
        assert!(om.has(MorphismFlag::AlgebraHom) && om.has(MorphismFlag::Isometry));
        let st = tau_st(&c, &cb).unwrap();
        assert!(st.pow(3).is_identity());
        let (sc, scb) = super_split_cayley(f).unwrap();
        assert!(tau_nst(&sc, &scb).unwrap().has(MorphismFlag::ParityPreserving));
        assert!(!tau_st(&sc, &scb).unwrap().has(MorphismFlag::ParityPreserving));
        let (c2, cb2) = split_hurwitz(8, FieldSpec::GF2).unwrap();
        assert!(matches!(tau_omega(&c2, &cb2), Err(ConstructionError::NoCubeRoot(_))));
        // over GF(3) the τ maps are still automorphisms of the ordinary algebra
        let (c3, cb3) = split_hurwitz(8, FieldSpec::GF3).unwrap();
        assert!(tau_nst(&c3, &cb3).is_ok());
    }

    #[test]
    fn b12_lambda_twist() {
        let f = FieldSpec::GF3;
        let (s0, _) = b12_lambda(f, f.zero()).unwrap();
        assert_eq!(s0, para_hurwitz(&b12(f).unwrap()).unwrap());
        let (s1, phi) = b12_lambda(f, f.one()).unwrap();
        assert!(phi.pow(3).is_identity());
        assert!(!linalg::is_zero(&s1.mul(&s1.b("u"), &s1.b("u"))) || !linalg::is_zero(&s1.mul(&s1.b("v"), &s1.b("v"))));
    }

    #[test]
    fn okubo_basics() {
        for (f, v) in [(FieldSpec::GF2, OkuboVariant::Nst), (FieldSpec::GF4, OkuboVariant::Omega), (FieldSpec::GF4, OkuboVariant::Nst)] {
            let o = okubo_super(f, v).unwrap();
            assert!(o.phi.pow(3).is_identity());
            assert_eq!(o.algebra.parity(), o.hurwitz.parity());
        }
        assert!(matches!(okubo_super(FieldSpec::GF2, OkuboVariant::Omega), Err(ConstructionError::NoCubeRoot(_))));
    }

    #[test]
    fn canonical_basis_from_seeds() {
        let f = FieldSpec::GF2;
        let (c, _) = split_hurwitz(8, f).unwrap();
        let cb = canonical_basis_find(&c, &c.b("u1")).unwrap();
        assert!(cb.verify(&c));
        assert_eq!(canonical_basis_find(&c, &c.unit().unwrap().clone()), Err(ConstructionError::NotIsotropic));
        assert_eq!(canonical_basis_find(&c, &c.zero()), Err(ConstructionError::NotIsotropic));
        let f3 = FieldSpec::GF3;
        let (c3, _) = split_hurwitz(8, f3).unwrap();
        let seed = linalg::add(&c3.b("e1"), &c3.b("u2"));
        assert!(canonical_basis_find(&c3, &seed).unwrap().verify(&c3));
    }

    #[test]
    fn adapt_recovers_variants() {
        let f = FieldSpec::GF2;
        let o = okubo_super(f, OkuboVariant::Nst).unwrap();
        let (cb, label) = adapt_basis_to_automorphism(&o.hurwitz, &o.phi).unwrap();
        assert_eq!(label, OkuboVariant::Nst);
        assert!(cb.verify(&o.hurwitz));
        assert_eq!(cb.as_morphism(f).compose(&tau_nst(&split_hurwitz(8, f).unwrap().0, &CanonicalBasis::standard(f, 8)).unwrap()).matrix(),
            o.phi.compose(&cb.as_morphism(f)).matrix());
        let g4 = FieldSpec::GF4;
        let o4 = okubo_super(g4, OkuboVariant::Omega).unwrap();
        let (cb4, label4) = adapt_basis_to_automorphism(&o4.hurwitz, &o4.phi).unwrap();
        assert_eq!(label4, OkuboVariant::Omega);
        assert!(cb4.verify(&o4.hurwitz));
        let id = Morphism::identity(&o.hurwitz);
        assert!(matches!(adapt_basis_to_automorphism(&o.hurwitz, &id), Err(ConstructionError::BadAutomorphism(_))));
    }

    #[test]
    fn build_ids() {
        let p = BuildParams::default();
        for id in CONSTRUCTION_IDS {
            let field = match id {
                "b12" | "b42" | "b12lambda" => FieldSpec::GF3,
                "okubo-omega" => FieldSpec::GF4,
                _ => FieldSpec::GF2,
            };
            let field = if id == "para" { FieldSpec::GF3 } else { field };
            assert!(build(id, field, &p).is_ok(), "{id}");
        }
        assert!(matches!(build("nope", FieldSpec::GF2, &p), Err(ConstructionError::Unknown(_))));
    }
}
