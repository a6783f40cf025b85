//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("element does not belong to group {0}")]
    WrongGroup(String),
    #[error("homomorphism does not respect torsion: generator of order {order} maps to an element of order {image}")]
    TorsionViolation { order: u64, image: String },
    #[error("cannot parse group or degree from `{0}`")]
    Parse(String),
    #[error("group {0} is infinite")]
    Infinite(String),
}

/// Result of [`smith_normal_form`]: `d = u * m * v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub d: Vec<Vec<i128>>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

impl Snf {
    /// Diagonal entries (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<i128> {
        let n = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..n).map(|i| self.d[i][i]).collect()
    }
}

fn ck(x: Option<i128>) -> i128 {
    x.expect("integer overflow in Smith normal form")
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0i128, |acc, k| ck(acc.checked_add(ck(row[k].checked_mul(b[k][j]))))))
                .collect()
        })
        .collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ck(ck(a[i][j].checked_mul(a[k][k])).checked_sub(ck(a[i][k].checked_mul(a[k][j]))));
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Smith normal form with unimodular transforms. Diagonal entries are
/// nonnegative and form a divisibility chain.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut d: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let row_op = |d: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, target: usize, src: usize, f: i128| {
        // row[target] -= f * row[src]
        for j in 0..d[target].len() {
            d[target][j] = ck(d[target][j].checked_sub(ck(f.checked_mul(d[src][j]))));
        }
        for j in 0..u[target].len() {
            u[target][j] = ck(u[target][j].checked_sub(ck(f.checked_mul(u[src][j]))));
        }
    };
    let col_op = |d: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, target: usize, src: usize, f: i128| {
        for row in d.iter_mut() {
            row[target] = ck(row[target].checked_sub(ck(f.checked_mul(row[src]))));
        }
        for row in v.iter_mut() {
            row[target] = ck(row[target].checked_sub(ck(f.checked_mul(row[src]))));
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&d[i][t], &d[t][t]);
                if q != 0 {
                    row_op(&mut d, &mut u, i, t, q);
                }
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&d[t][j], &d[t][t]);
                if q != 0 {
                    col_op(&mut d, &mut v, j, t, q);
                }
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let p = d[t][t];
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % p != 0));
            match offending {
                Some(i) => row_op(&mut d, &mut u, t, i, -1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    Snf { d, u, v }
}

/// `Z^rank x Z_{d1} x ... x Z_{dk}` with `d1 | d2 | ...` and every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbGroup {
    rank: usize,
    torsion: Vec<u64>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbGroup { rank, torsion: Vec::new() }
    }

    /// `Z_n`, with `n = 0` meaning `Z`.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            n => AbGroup { rank: 0, torsion: vec![n] },
        }
    }

    /// Product of cyclic groups of the given orders (0 meaning `Z`), canonicalized.
    pub fn product_of_cyclic(orders: &[u64]) -> Self {
        let n = orders.len();
        let rels: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| {
                let mut r = vec![0; n];
                r[i] = o as i64;
                r
            })
            .collect();
        presentation_to_group(n, &rels).0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of coordinates: free ones first, then one per invariant factor.
    pub fn ncoords(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Modulus of coordinate `i`, 0 for free coordinates.
    pub fn modulus(&self, i: usize) -> u64 {
        if i < self.rank {
            0
        } else {
            self.torsion[i - self.rank]
        }
    }

    pub fn zero(&self) -> AbElement {
        AbElement { group: self.clone(), coords: vec![0; self.ncoords()] }
    }

    /// Element with the given coordinates, torsion coordinates reduced.
    pub fn element(&self, coords: &[i64]) -> AbElement {
        assert_eq!(coords.len(), self.ncoords(), "coordinate count for {self}");
        let coords = coords
            .iter()
            .enumerate()
            .map(|(i, &c)| match self.modulus(i) {
                0 => c,
                m => c.rem_euclid(m as i64),
            })
            .collect();
        AbElement { group: self.clone(), coords }
    }

    /// Canonical generator `i` (coordinate order).
    pub fn generator(&self, i: usize) -> AbElement {
        let mut c = vec![0; self.ncoords()];
        c[i] = 1;
        self.element(&c)
    }

    pub fn elements(&self) -> Result<Vec<AbElement>, AbelianError> {
        let total = self.order().ok_or_else(|| AbelianError::Infinite(self.to_string()))?;
        Ok((0..total)
            .map(|mut idx| {
                let coords: Vec<i64> = self
                    .torsion
                    .iter()
                    .map(|&m| {
                        let c = idx % m;
                        idx /= m;
                        c as i64
                    })
                    .collect();
                AbElement { group: self.clone(), coords }
            })
            .collect())
    }

    /// Parse a degree string as printed by [`AbElement`]'s `Display`.
    pub fn parse_element(&self, s: &str) -> Result<AbElement, AbelianError> {
        let err = || AbelianError::Parse(s.to_string());
        let s = s.trim();
        let body = s.strip_suffix(&format!(" mod {}", self.torsion.first().copied().unwrap_or(0))).unwrap_or(s);
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let coords: Vec<i64> = if self.ncoords() == 0 {
            if body != "0" {
                return Err(err());
            }
            Vec::new()
        } else {
            body.split(',').map(|c| c.trim().parse().map_err(|_| err())).collect::<Result<_, _>>()?
        };
        if coords.len() != self.ncoords() {
            return Err(err());
        }
        Ok(self.element(&coords))
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 { format!("Z{d}") } else { format!("Z{d}^{run}") });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl FromStr for AbGroup {
    type Err = AbelianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AbelianError::Parse(s.to_string());
        if s.trim() == "0" {
            return Ok(AbGroup::trivial());
        }
        let mut orders = Vec::new();
        for part in s.split(" x ") {
            let part = part.trim();
            let rest = part.strip_prefix('Z').ok_or_else(err)?;
            let (base, exp) = match rest.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| err())?),
                None => (rest, 1),
            };
            let order = if base.is_empty() { 0 } else { base.parse::<u64>().map_err(|_| err())? };
            if order == 1 {
                return Err(err());
            }
            orders.extend(std::iter::repeat_n(order, exp));
        }
        let g = AbGroup::product_of_cyclic(&orders);
        if g.to_string() != s.trim() {
            // only canonical spellings are accepted
            return Err(err());
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbElement {
    group: AbGroup,
    coords: Vec<i64>,
}

impl AbElement {
    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &AbElement) {
        assert_eq!(self.group, other.group, "elements of different groups");
    }

    pub fn add(&self, other: &AbElement) -> AbElement {
        self.check_same(other);
        let c: Vec<i64> = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.element(&c)
    }

    pub fn neg(&self) -> AbElement {
        let c: Vec<i64> = self.coords.iter().map(|a| -a).collect();
        self.group.element(&c)
    }

    pub fn sub(&self, other: &AbElement) -> AbElement {
        self.add(&other.neg())
    }

    pub fn times(&self, k: i64) -> AbElement {
        let c: Vec<i64> = self.coords.iter().map(|a| a * k).collect();
        self.group.element(&c)
    }

    /// Order of the element; `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        let mut ord = 1u64;
        for (i, &c) in self.coords.iter().enumerate() {
            let m = self.group.modulus(i);
            if m == 0 {
                if c != 0 {
                    return None;
                }
            } else {
                ord = ord.lcm(&(m / (c as u64).gcd(&m)));
            }
        }
        Some(ord)
    }
}

impl fmt::Display for AbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coords.len(), self.group.rank) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "{}", self.coords[0]),
            (1, _) => write!(f, "{} mod {}", self.coords[0], self.group.torsion[0]),
            _ => {
                let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// `Z^n` modulo the row span of `relations`, with the image of every generator.
pub fn presentation_to_group(n_generators: usize, relations: &[Vec<i64>]) -> (AbGroup, Vec<AbElement>) {
    for r in relations {
        assert_eq!(r.len(), n_generators, "relation length");
    }
    if n_generators == 0 {
        return (AbGroup::trivial(), Vec::new());
    }
    let rels: Vec<Vec<i64>> = if relations.is_empty() { vec![vec![0; n_generators]] } else { relations.to_vec() };
    let snf = smith_normal_form(&rels);
    let diag = snf.diagonal();
    // modulus of every new coordinate: d_i for i < rank of diagonal, 0 beyond
    let moduli: Vec<i128> = (0..n_generators).map(|i| diag.get(i).copied().unwrap_or(0)).collect();
    let free_idx: Vec<usize> = (0..n_generators).filter(|&i| moduli[i] == 0).collect();
    let tors_idx: Vec<usize> = (0..n_generators).filter(|&i| moduli[i] >= 2).collect();
    let group = AbGroup {
        rank: free_idx.len(),
        torsion: tors_idx.iter().map(|&i| moduli[i] as u64).collect(),
    };
    let images = (0..n_generators)
        .map(|j| {
            let row = &snf.v[j];
            let coords: Vec<i64> = free_idx
                .iter()
                .chain(&tors_idx)
                .map(|&i| i64::try_from(row[i]).expect("coordinate fits in i64"))
                .collect();
            group.element(&coords)
        })
        .collect();
    (group, images)
}

/// Homomorphism given by the images of the canonical generators of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbHom {
    source: AbGroup,
    target: AbGroup,
    images: Vec<AbElement>,
}

impl AbHom {
    pub fn from_images(source: &AbGroup, target: &AbGroup, images: Vec<AbElement>) -> Result<Self, AbelianError> {
        assert_eq!(images.len(), source.ncoords(), "one image per source generator");
        for (i, img) in images.iter().enumerate() {
            if img.group() != target {
                return Err(AbelianError::WrongGroup(target.to_string()));
            }
            let m = source.modulus(i);
            if m != 0 && !img.times(m as i64).is_zero() {
                return Err(AbelianError::TorsionViolation { order: m, image: img.to_string() });
            }
        }
        Ok(AbHom { source: source.clone(), target: target.clone(), images })
    }

    /// Integer matrix whose columns are the images of the source generators.
    pub fn from_matrix(source: &AbGroup, target: &AbGroup, matrix: &[Vec<i64>]) -> Result<Self, AbelianError> {
        let images = (0..source.ncoords())
            .map(|j| {
                let col: Vec<i64> = matrix.iter().map(|row| row[j]).collect();
                target.element(&col)
            })
            .collect();
        Self::from_images(source, target, images)
    }

    pub fn identity(g: &AbGroup) -> Self {
        let images = (0..g.ncoords()).map(|i| g.generator(i)).collect();
        AbHom { source: g.clone(), target: g.clone(), images }
    }

    pub fn source(&self) -> &AbGroup {
        &self.source
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.target.ncoords())
            .map(|r| self.images.iter().map(|img| img.coords()[r]).collect())
            .collect()
    }

    pub fn apply(&self, x: &AbElement) -> Result<AbElement, AbelianError> {
        if x.group() != &self.source {
            return Err(AbelianError::WrongGroup(self.source.to_string()));
        }
        let mut acc = self.target.zero();
        for (c, img) in x.coords().iter().zip(&self.images) {
            acc = acc.add(&img.times(*c));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_diagonal_chain(d: &[Vec<i128>]) -> bool {
        let rows = d.len();
        let cols = d.first().map_or(0, Vec::len);
        for i in 0..rows {
            for j in 0..cols {
                if i != j && d[i][j] != 0 {
                    return false;
                }
            }
        }
        let diag: Vec<i128> = (0..rows.min(cols)).map(|i| d[i][i]).collect();
        diag.iter().all(|&x| x >= 0)
            && diag.windows(2).all(|w| if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 })
    }

    fn check_snf(m: &[Vec<i64>]) -> Snf {
        let snf = smith_normal_form(m);
        let mm: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        assert_eq!(mat_mul(&mat_mul(&snf.u, &mm), &snf.v), snf.d);
        assert_eq!(det(&snf.u).abs(), 1);
        assert_eq!(det(&snf.v).abs(), 1);
        assert!(is_diagonal_chain(&snf.d), "{:?}", snf.d);
        snf
    }

    fn minors_gcd(m: &[Vec<i64>], k: usize) -> i128 {
        let rows = m.len();
        let cols = m[0].len();
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|b| b.count_ones() as usize == k)
            .map(|b| (0..n).filter(|i| b >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&[vec![2, 0], vec![0, 3]]).diagonal(), vec![1, 6]);
        assert_eq!(check_snf(&[vec![0, 0], vec![0, 0]]).diagonal(), vec![0, 0]);
        assert_eq!(check_snf(&[vec![1, 0], vec![0, 1]]).diagonal(), vec![1, 1]);
        assert_eq!(check_snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).diagonal(), vec![2, 6, 12]);
    }

    #[test]
    fn presentations() {
        let (g, p) = presentation_to_group(2, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(g.to_string(), "Z2^2");
        assert_ne!(p[0], p[1]);
        let (g, _) = presentation_to_group(3, &[vec![1, 1, -1]]);
        assert_eq!(g.to_string(), "Z^2");
        let (g, _) = presentation_to_group(2, &[]);
        assert_eq!(g.to_string(), "Z^2");
        let (g, p) = presentation_to_group(1, &[vec![4]]);
        assert_eq!(g.to_string(), "Z4");
        assert_eq!(p[0].order(), Some(4));
        let (g, _) = presentation_to_group(2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(g.to_string(), "0");
        let (g, _) = presentation_to_group(2, &[vec![0, 2]]);
        assert_eq!(g.to_string(), "Z x Z2");
    }

    #[test]
    fn group_strings_round_trip() {
        for s in ["Z", "Z^2", "Z3", "Z4", "Z2", "Z2^2", "Z x Z2", "Z3^2", "Z2 x Z4", "0"] {
            let g: AbGroup = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("Z6 x Z2".parse::<AbGroup>().is_err());
        assert_eq!(AbGroup::product_of_cyclic(&[2, 3]).to_string(), "Z6");
    }

    #[test]
    fn element_arithmetic_and_display() {
        let z3 = AbGroup::cyclic(3);
        assert_eq!(z3.element(&[1]).order(), Some(3));
        assert_eq!(z3.element(&[-1]).to_string(), "2 mod 3");
        let z = AbGroup::cyclic(0);
        assert_eq!(z.element(&[1]).order(), None);
        assert_eq!(z.element(&[-2]).to_string(), "-2");
        let z2 = AbGroup::free(2);
        assert_eq!(z2.element(&[1, 0]).to_string(), "(1,0)");
        assert_eq!(z2.parse_element("(1,-1)").unwrap(), z2.element(&[1, -1]));
        let z4 = AbGroup::cyclic(4);
        assert_eq!(z4.parse_element("3 mod 4").unwrap(), z4.element(&[3]));
        assert_eq!(AbGroup::trivial().zero().to_string(), "0");
        assert_eq!(AbGroup::product_of_cyclic(&[2, 4]).elements().unwrap().len(), 8);
    }

    #[test]
    fn homomorphisms() {
        let z = AbGroup::cyclic(0);
        let z4 = AbGroup::cyclic(4);
        let a = AbHom::from_images(&z, &z4, vec![z4.element(&[1])]).unwrap();
        assert_eq!(a.apply(&z.element(&[2])).unwrap(), z4.element(&[2]));
        let z2 = AbGroup::free(2);
        let s = AbHom::from_matrix(&z2, &z, &[vec![1, 1]]).unwrap();
        assert_eq!(s.apply(&z2.element(&[1, 1])).unwrap(), z.element(&[2]));
        assert!(matches!(s.apply(&z.element(&[1])), Err(AbelianError::WrongGroup(_))));
        // Z3 -> Z4 nonzero map is not a homomorphism
        let z3 = AbGroup::cyclic(3);
        assert!(AbHom::from_images(&z3, &z4, vec![z4.element(&[1])]).is_err());
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-5i64..=5, c), r))
    }

    proptest! {
        #[test]
        fn snf_is_valid(m in small_matrix(6)) {
            check_snf(&m);
        }

        #[test]
        fn snf_matches_minor_gcds(m in small_matrix(4)) {
            let diag = check_snf(&m).diagonal();
            let mut prev = 1i128;
            for k in 1..=diag.len() {
                let g = minors_gcd(&m, k);
                let prod: i128 = diag[..k].iter().product();
                prop_assert_eq!(prod, g);
                if g != 0 {
                    prop_assert_eq!(diag[k - 1], g / prev);
                    prev = g;
                }
            }
        }

        #[test]
        fn presentation_round_trip(rank in 0usize..3, tors in prop::collection::vec(2u64..7, 0..3)) {
            let mut orders: Vec<u64> = tors.clone();
            orders.extend(std::iter::repeat_n(0, rank));
            let g = AbGroup::product_of_cyclic(&orders);
            let (h, _) = presentation_to_group(g.ncoords(), &g.torsion().iter().enumerate().map(|(i, &d)| {
                let mut r = vec![0i64; g.ncoords()];
                r[g.rank() + i] = d as i64;
                r
            }).collect::<Vec<_>>());
            prop_assert_eq!(&h, &g);
            prop_assert_eq!(g.rank(), rank);
            let expected: u64 = tors.iter().product();
            prop_assert_eq!(g.torsion().iter().product::<u64>(), expected);
        }
    }
}
