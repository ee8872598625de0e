//! Finite-type Cartan data, roots, coroots, weights and Weyl group elements.
//!
//! The pairing convention is `A[i][j] = <α_i, α_j∨>`, so the simple root
//! `α_j` has fundamental-weight coordinates given by row `j` of `A`.
//! Weights live in the fundamental-weight basis, roots in the simple-root
//! basis and coroots in the simple-coroot basis. All arithmetic is exact.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

/// A coroot in the simple-coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coroot(pub Vec<i64>);

impl Root {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// `Some(i)` (1-based) when the root is `±α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (k, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 | -1 if found.is_none() => found = Some(k + 1),
                _ => return None,
            }
        }
        found
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    /// Prints `α1+α2`, `2α1+3α2` or `-(α1+α2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            return write!(f, "-({})", -self);
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "α{}", k + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Q::zero(); n])
    }

    pub fn rho(n: usize) -> Self {
        Weight(vec![Q::one(); n])
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i - 1] = Q::one();
        w
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight(c.iter().map(|&x| q(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// `<λ, β∨>`.
    pub fn pair(&self, coroot: &Coroot) -> Q {
        self.0.iter().zip(&coroot.0).map(|(c, &d)| c * d).sum()
    }

    /// `<λ, α_i∨>` for a 1-based index.
    pub fn pair_simple(&self, i: usize) -> Q {
        self.0[i - 1]
    }

    /// Parses `"1,0,2"` or `"1/2,-1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| parse_q(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coeffs))
    }
}

pub fn parse_q(t: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("`{t}` is not a rational number"));
    match t.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
        None => t.parse::<i64>().map(q).map_err(|_| bad()),
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<Q> for &Weight {
    type Output = Weight;
    fn mul(self, k: Q) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A generalized Cartan matrix of finite type, `A[i][j] = <α_i, α_j∨>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    name: Option<String>,
    matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Builds from a type string such as `A3`, `B2`, `C3`, `D4`, `E6`, `F4`, `G2`.
    pub fn from_type(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        // Squared lengths and off-diagonal symmetric form entries.
        let mut len = vec![2i64; n];
        let mut bonds: Vec<(usize, usize, i64)> = Vec::new();
        let chain = |bonds: &mut Vec<(usize, usize, i64)>, upto: usize| {
            for i in 1..upto {
                bonds.push((i, i + 1, -1));
            }
        };
        match (letter, n) {
            ('A', 1..) => chain(&mut bonds, n),
            ('B', 2..) => {
                len = vec![4; n];
                len[n - 1] = 2;
                for i in 1..n {
                    bonds.push((i, i + 1, -2));
                }
            }
            ('C', 2..) => {
                len[n - 1] = 4;
                chain(&mut bonds, n - 1);
                bonds.push((n - 1, n, -2));
            }
            ('D', 3..) => {
                chain(&mut bonds, n - 1);
                bonds.push((n - 2, n, -1));
            }
            ('E', 6..=8) => {
                bonds.extend([(1, 3, -1), (2, 4, -1), (3, 4, -1)]);
                for i in 4..n {
                    bonds.push((i, i + 1, -1));
                }
            }
            ('F', 4) => {
                len = vec![4, 4, 2, 2];
                bonds.extend([(1, 2, -2), (2, 3, -2), (3, 4, -1)]);
            }
            ('G', 2) => {
                len = vec![2, 6];
                bonds.push((1, 2, -3));
            }
            _ => return Err(unknown()),
        }
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            form[i][i] = len[i];
        }
        for (i, j, b) in bonds {
            form[i - 1][j - 1] = b;
            form[j - 1][i - 1] = b;
        }
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[i][j] / form[j][j]).collect())
            .collect();
        let mut d = Self::from_matrix(matrix)?;
        d.name = Some(format!("{letter}{n}"));
        Ok(d)
    }

    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::InvalidMatrix(format!("A[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j {
                    if row[j] > 0 {
                        return Err(Error::InvalidMatrix(format!("A[{i}][{j}] > 0")));
                    }
                    if (row[j] == 0) != (matrix[j][i] == 0) {
                        return Err(Error::InvalidMatrix(format!(
                            "A[{i}][{j}] and A[{j}][{i}] disagree on vanishing"
                        )));
                    }
                }
            }
        }
        Ok(CartanDatum { name: None, matrix })
    }

    /// Accepts a JSON matrix such as `[[2,-1],[-1,2]]`.
    pub fn from_json(s: &str) -> Result<Self> {
        let m: Vec<Vec<i64>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_matrix(m)
    }

    /// Type string or JSON matrix.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Self::from_json(s)
        } else {
            Self::from_type(s)
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `<α_i, α_j∨>` for 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }
}

/// A Weyl group element as an integer matrix acting on simple-root
/// coordinates: column `j` is the image of `α_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    m: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let m = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement { m }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m.len())
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root(
            self.m
                .iter()
                .map(|row| row.iter().zip(&r.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// The product `self · other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.m.len();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.m[i][k] * other.m[k][j]).sum())
                    .collect()
            })
            .collect();
        WeylElement { m }
    }
}

/// Positive roots, coroots and the Weyl group action of a finite-type datum.
#[derive(Clone, Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<Root>,
    coroots: Vec<Coroot>,
    lookup: HashMap<Root, usize>,
    root_weights: Vec<Weight>,
    reflections: Vec<WeylElement>,
    // (A^T)^{-1}: fundamental-weight coordinates to simple-root coordinates.
    to_root_basis: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        let pairs = positive_roots(&datum)?;
        let (roots, coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let lookup = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let n = datum.rank();
        let a = datum.matrix();
        let root_weights: Vec<Weight> = roots
            .iter()
            .map(|r| {
                Weight(
                    (0..n)
                        .map(|i| q((0..n).map(|j| r.0[j] * a[j][i]).sum()))
                        .collect(),
                )
            })
            .collect();
        let mut rs = RootSystem {
            to_root_basis: invert_transpose(a),
            datum,
            roots,
            coroots,
            lookup,
            root_weights,
            reflections: Vec::new(),
        };
        rs.reflections = (0..rs.roots.len()).map(|b| rs.build_reflection(b)).collect();
        Ok(rs)
    }

    pub fn from_type(s: &str) -> Result<Self> {
        Self::new(CartanDatum::parse(s)?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, b: usize) -> &Root {
        &self.roots[b]
    }

    pub fn coroot(&self, b: usize) -> &Coroot {
        &self.coroots[b]
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.lookup.get(r).copied()
    }

    /// Index of the simple root `α_i` (1-based `i`).
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.lookup[&Root::simple(self.rank(), i)]
    }

    /// `β` in fundamental-weight coordinates.
    pub fn root_weight(&self, b: usize) -> &Weight {
        &self.root_weights[b]
    }

    pub fn simple_root_weight(&self, i: usize) -> &Weight {
        self.root_weight(self.simple_root_index(i))
    }

    /// Any element of the root lattice in fundamental-weight coordinates.
    pub fn root_lattice_weight(&self, r: &Root) -> Weight {
        let n = self.rank();
        let a = self.datum.matrix();
        Weight((0..n).map(|i| q((0..n).map(|j| r.0[j] * a[j][i]).sum())).collect())
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        self.to_root_basis
            .iter()
            .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `<ρ, β∨>` for a positive root index.
    pub fn rho_pair(&self, b: usize) -> i64 {
        self.coroots[b].0.iter().sum()
    }

    /// `s_β(μ) = μ - <μ,β∨> β`.
    pub fn reflect(&self, b: usize, mu: &Weight) -> Weight {
        self.affine_reflect(b, 0, mu)
    }

    /// `s_{β,h}(μ) = μ - (<μ,β∨> - h) β`.
    pub fn affine_reflect(&self, b: usize, h: i64, mu: &Weight) -> Weight {
        let c = mu.pair(&self.coroots[b]) - q(h);
        mu - &(&self.root_weights[b] * c)
    }

    /// Simple reflection `s_i` on a weight.
    pub fn simple_reflect(&self, i: usize, mu: &Weight) -> Weight {
        self.reflect(self.simple_root_index(i), mu)
    }

    /// The reflection `s_β` as a Weyl group element.
    pub fn reflection(&self, b: usize) -> &WeylElement {
        &self.reflections[b]
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        self.reflection(self.simple_root_index(i))
    }

    /// Product `s_{i1} s_{i2} ⋯` of simple reflections.
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(self.rank()), |w, &i| {
            w.compose(self.simple_reflection(i))
        })
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.roots.iter().filter(|r| w.apply(r).is_negative()).count()
    }

    /// Whether `w ⋖ w s_β` in Bruhat order.
    pub fn is_cover(&self, w: &WeylElement, b: usize) -> bool {
        self.length(&w.compose(&self.reflections[b])) == self.length(w) + 1
    }

    /// Action on weights through simple-root coordinates.
    pub fn act(&self, w: &WeylElement, mu: &Weight) -> Weight {
        let x = self.weight_to_root_coords(mu);
        let n = self.rank();
        let y: Vec<Q> = (0..n)
            .map(|i| (0..n).map(|k| x[k] * w.m[i][k]).sum())
            .collect();
        let a = self.datum.matrix();
        Weight((0..n).map(|i| (0..n).map(|j| y[j] * a[j][i]).sum()).collect())
    }

    /// Looks up a signed root: `(index, true)` for `β`, `(index, false)` for `-β`.
    pub fn signed_index(&self, r: &Root) -> Option<(usize, bool)> {
        if r.is_negative() {
            self.root_index(&-r).map(|b| (b, false))
        } else {
            self.root_index(r).map(|b| (b, true))
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn build_reflection(&self, b: usize) -> WeylElement {
        let n = self.rank();
        let beta = &self.roots[b];
        let co = &self.coroots[b];
        let a = self.datum.matrix();
        // s_β(α_j) = α_j - <α_j, β∨> β
        let mut m = WeylElement::identity(n).m;
        for j in 0..n {
            let p: i64 = (0..n).map(|k| co.0[k] * a[j][k]).sum();
            for i in 0..n {
                m[i][j] -= p * beta.0[i];
            }
        }
        WeylElement { m }
    }
}

/// Every positive root paired with its coroot, ordered by height
/// with ties broken so that `α_1` comes first.
#[allow(clippy::needless_range_loop)]
pub fn positive_roots(datum: &CartanDatum) -> Result<Vec<(Root, Coroot)>> {
    let n = datum.rank();
    let a = datum.matrix();
    let bound = 4 * n * n;
    let mut found: HashMap<Root, Coroot> = HashMap::new();
    let mut queue: Vec<(Root, Coroot)> = (1..=n)
        .map(|i| (Root::simple(n, i), Coroot(Root::simple(n, i).0)))
        .collect();
    for (r, c) in &queue {
        found.insert(r.clone(), c.clone());
    }
    while let Some((r, c)) = queue.pop() {
        for i in 0..n {
            // <β, α_i∨> and <α_i, β∨>
            let p: i64 = (0..n).map(|j| r.0[j] * a[j][i]).sum();
            let pc: i64 = (0..n).map(|k| c.0[k] * a[i][k]).sum();
            let mut r2 = r.clone();
            r2.0[i] -= p;
            let mut c2 = c.clone();
            c2.0[i] -= pc;
            if r2.is_positive() && !found.contains_key(&r2) {
                if !c2.0.iter().all(|&x| x >= 0) {
                    return Err(Error::InvalidMatrix("inconsistent coroot closure".into()));
                }
                found.insert(r2.clone(), c2.clone());
                if found.len() > bound {
                    return Err(Error::InfiniteRootSystem);
                }
                queue.push((r2, c2));
            } else if !r2.is_positive() && !r2.is_negative() {
                return Err(Error::InfiniteRootSystem);
            }
        }
    }
    let mut out: Vec<(Root, Coroot)> = found.into_iter().collect();
    out.sort_by(|(x, _), (y, _)| x.height().cmp(&y.height()).then_with(|| y.cmp(x)));
    Ok(out)
}

#[allow(clippy::needless_range_loop)]
fn invert_transpose(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| q(a[j][i]))
                .chain((0..n).map(|j| q(i64::from(i == j))))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("finite-type Cartan matrices are invertible");
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..2 * n {
                    let v = m[col][k] * f;
                    m[r][k] -= v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}
