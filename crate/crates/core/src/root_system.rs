//! Root data of split simple groups.
//!
//! Simple roots are numbered as in Bourbaki for every family. The Cartan
//! matrix is stored with `cartan[i][j] = <α_i^∨, α_j>`, so row `i` lists the
//! pairings of the `i`-th simple coroot with the simple roots:
//!
//! | type | non-simply-laced entries (1-based)           | highest root            |
//! |------|----------------------------------------------|-------------------------|
//! | A_n  | –                                            | α1 + … + αn             |
//! | B_n  | `<α_n^∨, α_{n-1}> = -2` (α_n short)          | α1 + 2α2 + … + 2αn      |
//! | C_n  | `<α_{n-1}^∨, α_n> = -2` (α_n long)           | 2α1 + … + 2α_{n-1} + αn |
//! | D_n  | α_{n-2} joined to α_{n-1} and α_n            | α1 + 2α2 + … + α_{n-1} + αn |
//! | E_n  | chain 1-3-4-5-…, α2 joined to α4             | (E6) 1,2,2,3,2,1        |
//! | F_4  | `<α_3^∨, α_2> = -2` (α1, α2 long)            | 2α1 + 3α2 + 4α3 + 2α4   |
//! | G_2  | `<α_1^∨, α_2> = -3` (α1 short)               | 3α1 + 2α2               |
//!
//! Roots are kept in simple-root coordinates, coroots in simple-coroot
//! coordinates. Coweights are stored in the basis of the chosen lattice:
//! fundamental coweights for the adjoint lattice, simple coroots for the
//! simply connected one. Internally the affine and Weyl code works with
//! fundamental-coweight coordinates ("ω-coordinates"), obtained with
//! [`RootDatum::to_fundamental`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::{Error, NodeSet, Result};

/// Integer vector of length `rank`.
pub type Vector = SmallVec<[i32; 8]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=15).contains(&rank),
            Family::B | Family::C => (2..=15).contains(&rank),
            Family::D => (3..=15).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::Input(format!("no Cartan type {family:?}{rank}")))
        }
    }

    /// Order of the Weyl group, from the closed forms.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the closed forms.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the fundamental group of the adjoint group, `|X_*/Q^∨|`.
    pub fn fundamental_group_order(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, n) => n + 1,
            (Family::B | Family::C, _) => 2,
            (Family::D, _) => 4,
            (Family::E, 6) => 3,
            (Family::E, 7) => 2,
            _ => 1,
        }
    }

    fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Input(format!("bad Cartan type '{s}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Input(format!("bad Cartan type '{s}'")))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeChoice {
    /// Coweight lattice `X_*`, basis of fundamental coweights.
    #[default]
    Adjoint,
    /// Coroot lattice `Q^∨`, basis of simple coroots.
    SimplyConnected,
}

impl fmt::Display for LatticeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeChoice::Adjoint => "adjoint",
            LatticeChoice::SimplyConnected => "simply_connected",
        })
    }
}

impl FromStr for LatticeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "adjoint" | "ad" => Ok(LatticeChoice::Adjoint),
            "simply_connected" | "sc" => Ok(LatticeChoice::SimplyConnected),
            _ => Err(Error::Input(format!("unknown lattice '{s}'"))),
        }
    }
}

/// A coweight in the basis of the datum's lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coweight(pub Vector);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(smallvec::smallvec![0; rank])
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<&[i32]> for Coweight {
    fn from(c: &[i32]) -> Self {
        Coweight(c.iter().copied().collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vector(f, &self.0)
    }
}

pub(crate) fn write_vector(f: &mut impl fmt::Write, v: &[i32]) -> fmt::Result {
    f.write_char('[')?;
    for (k, c) in v.iter().enumerate() {
        if k > 0 {
            f.write_char(',')?;
        }
        write!(f, "{c}")?;
    }
    f.write_char(']')
}

/// Immutable root datum of a split simple group.
#[derive(Clone, Debug)]
pub struct RootDatum {
    cartan_type: CartanType,
    lattice: LatticeChoice,
    cartan: Vec<Vec<i32>>,
    /// `(α_i, α_i) / 2`, normalised so short roots have 1.
    half_norms: Vec<i32>,
    positive_roots: Vec<Vector>,
    positive_coroots: Vec<Vector>,
    root_index: HashMap<Vector, usize>,
    rho2: Vector,
}

/// JSON export of a datum. Field names are fixed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DatumExport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lattice: String,
    pub positive_roots: Vec<Vec<i32>>,
    pub cartan: Vec<Vec<i32>>,
}

impl RootDatum {
    pub fn build(cartan_type: CartanType, lattice: LatticeChoice) -> Result<Self> {
        // Re-validate: the fields are public.
        let cartan_type = CartanType::new(cartan_type.family, cartan_type.rank)?;
        let cartan = cartan_type.cartan_matrix();
        let half_norms = symmetrizer(&cartan);
        let positive_roots = positive_roots_by_strings(&cartan);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let positive_coroots = positive_roots
            .iter()
            .map(|r| coroot_of(r, &cartan, &half_norms))
            .collect();
        let n = cartan_type.rank;
        let rho2 = positive_roots.iter().fold(smallvec::smallvec![0; n], |acc: Vector, r| {
            acc.iter().zip(r).map(|(a, b)| a + b).collect()
        });
        Ok(RootDatum {
            cartan_type,
            lattice,
            cartan,
            half_norms,
            positive_roots,
            positive_coroots,
            root_index,
            rho2,
        })
    }

    /// Adjoint datum for a type string like `"A3"`.
    pub fn adjoint(ty: &str) -> Result<Self> {
        RootDatum::build(ty.parse()?, LatticeChoice::Adjoint)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn lattice(&self) -> LatticeChoice {
        self.lattice
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn simple_roots(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn half_norms(&self) -> &[i32] {
        &self.half_norms
    }

    /// Positive roots in simple-root coordinates, sorted by height and then by
    /// descending coordinate vector (so `α1` precedes `α2`).
    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    /// Coroot of each positive root, in simple-coroot coordinates, aligned
    /// with [`positive_roots`](Self::positive_roots).
    pub fn positive_coroots(&self) -> &[Vector] {
        &self.positive_coroots
    }

    pub fn root_index(&self, root: &[i32]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn highest_root(&self) -> &Vector {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn highest_coroot(&self) -> &Vector {
        self.positive_coroots.last().expect("nonempty root system")
    }

    pub fn coxeter_number(&self) -> i32 {
        self.highest_root().iter().sum::<i32>() + 1
    }

    /// Sum of positive roots, in simple-root coordinates.
    pub fn rho2(&self) -> &Vector {
        &self.rho2
    }

    /// `<α^∨, β>` for a coroot `α^∨` (simple-coroot coords) and root `β`.
    pub fn coroot_root_pairing(&self, coroot: &[i32], root: &[i32]) -> i32 {
        let mut s = 0;
        for (i, &c) in coroot.iter().enumerate() {
            if c != 0 {
                s += c * self.cartan[i].iter().zip(root).map(|(a, b)| a * b).sum::<i32>();
            }
        }
        s
    }

    /// A coroot (simple-coroot coordinates) written in ω-coordinates.
    pub fn coroot_to_fundamental(&self, coroot: &[i32]) -> Vector {
        (0..self.rank())
            .map(|j| (0..self.rank()).map(|i| coroot[i] * self.cartan[i][j]).sum())
            .collect()
    }

    /// Coordinates of `λ` in the fundamental-coweight basis.
    pub fn to_fundamental(&self, lambda: &Coweight) -> Vector {
        match self.lattice {
            LatticeChoice::Adjoint => lambda.0.clone(),
            LatticeChoice::SimplyConnected => self.coroot_to_fundamental(&lambda.0),
        }
    }

    /// Inverse of [`to_fundamental`](Self::to_fundamental); `None` if the
    /// vector does not lie in the datum's lattice.
    pub fn from_fundamental(&self, omega: &[i32]) -> Option<Coweight> {
        match self.lattice {
            LatticeChoice::Adjoint => Some(Coweight::from(omega)),
            LatticeChoice::SimplyConnected => {
                // Solve A^T x = omega over the integers via the adjugate.
                let n = self.rank();
                let at: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..n).map(|j| self.cartan[j][i] as i64).collect())
                    .collect();
                let det = determinant(&at);
                let b: Vec<i64> = omega.iter().map(|&c| c as i64).collect();
                let mut x = Vector::new();
                for k in 0..n {
                    let mut m = at.clone();
                    for (i, row) in m.iter_mut().enumerate() {
                        row[k] = b[i];
                    }
                    let num = determinant(&m);
                    if num % det != 0 {
                        return None;
                    }
                    x.push((num / det) as i32);
                }
                Some(Coweight(x))
            }
        }
    }

    /// Whether ω-coordinates lie in the datum's lattice.
    pub fn contains_fundamental(&self, omega: &[i32]) -> bool {
        self.from_fundamental(omega).is_some()
    }

    /// `<λ, α>` for a coweight in lattice coordinates and a root in
    /// simple-root coordinates.
    pub fn pairing(&self, lambda: &Coweight, alpha: &[i32]) -> i32 {
        pair_fundamental(&self.to_fundamental(lambda), alpha)
    }

    /// `<λ, 2ρ> = Σ_{α>0} <λ, α>`.
    pub fn two_rho_pairing(&self, lambda: &Coweight) -> i32 {
        let w = self.to_fundamental(lambda);
        self.positive_roots.iter().map(|a| pair_fundamental(&w, a)).sum()
    }

    pub fn is_dominant(&self, lambda: &Coweight) -> bool {
        self.to_fundamental(lambda).iter().all(|&c| c >= 0)
    }

    /// `I(λ) = {i : <λ, α_i> = 0}` for dominant `λ`.
    pub fn type_map(&self, lambda: &Coweight) -> Result<NodeSet> {
        let w = self.to_fundamental(lambda);
        if w.iter().any(|&c| c < 0) {
            return Err(Error::Domain(format!("coweight {lambda} is not dominant")));
        }
        Ok(NodeSet::from_indices(
            w.iter().enumerate().filter(|(_, &c)| c == 0).map(|(i, _)| i),
        ))
    }

    /// All root pairings lie in `{-1, 0, 1}`.
    pub fn is_minuscule(&self, lambda: &Coweight) -> bool {
        let w = self.to_fundamental(lambda);
        self.positive_roots
            .iter()
            .all(|a| pair_fundamental(&w, a).abs() <= 1)
    }

    /// Nonzero minuscule fundamental coweights lying in the lattice, as
    /// `(0-based node, coweight)`. These are the `ω_i^∨` whose simple root
    /// has coefficient 1 in the highest root.
    pub fn list_minuscule(&self) -> Vec<(usize, Coweight)> {
        let theta = self.highest_root();
        (0..self.rank())
            .filter(|&i| theta[i] == 1)
            .filter_map(|i| {
                let mut omega: Vector = smallvec::smallvec![0; self.rank()];
                omega[i] = 1;
                self.from_fundamental(&omega).map(|c| (i, c))
            })
            .collect()
    }

    /// Fundamental coweight `ω_i^∨` in lattice coordinates, if it lies in
    /// the lattice.
    pub fn fundamental_coweight(&self, i: usize) -> Option<Coweight> {
        let mut omega: Vector = smallvec::smallvec![0; self.rank()];
        omega[i] = 1;
        self.from_fundamental(&omega)
    }

    /// The fundamental coweights as ω-coordinate unit vectors.
    pub fn fundamental_coweights(&self) -> Vec<Vector> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| (i == j) as i32).collect())
            .collect()
    }

    /// `|X_*/Q^∨|` for the adjoint lattice, 1 for the simply connected one.
    pub fn fundamental_group_order(&self) -> usize {
        match self.lattice {
            LatticeChoice::Adjoint => {
                let m: Vec<Vec<i64>> = self
                    .cartan
                    .iter()
                    .map(|r| r.iter().map(|&c| c as i64).collect())
                    .collect();
                determinant(&m).unsigned_abs() as usize
            }
            LatticeChoice::SimplyConnected => 1,
        }
    }

    pub fn export(&self) -> DatumExport {
        DatumExport {
            cartan_type: self.cartan_type.to_string(),
            lattice: self.lattice.to_string(),
            positive_roots: self.positive_roots.iter().map(|r| r.to_vec()).collect(),
            cartan: self.cartan.clone(),
        }
    }

    /// Dominant coweights (lattice coordinates) with `<λ, 2ρ> <= bound`, in
    /// increasing ω-coordinate lexicographic order.
    pub fn dominant_coweights_up_to(&self, bound: i32) -> Vec<Coweight> {
        let n = self.rank();
        // <ω_i^∨, 2ρ> for each i: the i-th coordinate of 2ρ.
        let weights: Vec<i32> = self.rho2.to_vec();
        let mut out = Vec::new();
        let mut cur: Vector = smallvec::smallvec![0; n];
        fn rec(
            i: usize,
            budget: i32,
            weights: &[i32],
            cur: &mut Vector,
            out: &mut Vec<Vector>,
        ) {
            if i == weights.len() {
                out.push(cur.clone());
                return;
            }
            let mut c = 0;
            while c * weights[i] <= budget {
                cur[i] = c;
                rec(i + 1, budget - c * weights[i], weights, cur, out);
                c += 1;
            }
            cur[i] = 0;
        }
        let mut omegas = Vec::new();
        rec(0, bound, &weights, &mut cur, &mut omegas);
        omegas.sort();
        for w in omegas {
            if let Some(c) = self.from_fundamental(&w) {
                out.push(c);
            }
        }
        out
    }

    /// Parse `"minuscule:i"` (1-based node) or a comma-separated coordinate
    /// list in the lattice basis.
    pub fn parse_coweight(&self, s: &str) -> Result<Coweight> {
        let s = s.trim();
        if let Some(idx) = s.strip_prefix("minuscule:") {
            let i: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad minuscule index '{idx}'")))?;
            if i == 0 || i > self.rank() {
                return Err(Error::Input(format!("node {i} out of range")));
            }
            return self
                .list_minuscule()
                .into_iter()
                .find(|(k, _)| *k == i - 1)
                .map(|(_, c)| c)
                .ok_or_else(|| {
                    Error::Domain(format!(
                        "ω{i}^∨ is not a minuscule coweight of {} ({})",
                        self.cartan_type, self.lattice
                    ))
                });
        }
        let coords: std::result::Result<Vector, _> = s
            .trim_matches(|c| c == '[' || c == ']')
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect();
        let coords = coords.map_err(|_| Error::Input(format!("bad coweight '{s}'")))?;
        if coords.len() != self.rank() {
            return Err(Error::Input(format!(
                "coweight '{s}' has {} coordinates, rank is {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(Coweight(coords))
    }
}

/// `<λ, α>` with `λ` in ω-coordinates and `α` in simple-root coordinates.
pub fn pair_fundamental(omega: &[i32], alpha: &[i32]) -> i32 {
    omega.iter().zip(alpha).map(|(a, b)| a * b).sum()
}

fn symmetrizer(cartan: &[Vec<i32>]) -> Vec<i32> {
    let n = cartan.len();
    // Scale so every ratio (1, 2, 3) stays integral, then reduce.
    let mut d = vec![0i64; n];
    d[0] = 36;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j] == 0 {
                d[j] = d[i] * cartan[i][j] as i64 / cartan[j][i] as i64;
                stack.push(j);
            }
        }
    }
    let g = d.iter().fold(0, |g, &x| gcd(g, x));
    d.iter().map(|&x| (x / g) as i32).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `α^∨ = α / d_α` in simple-coroot coordinates, where `α_i = d_i α_i^∨`.
fn coroot_of(root: &[i32], cartan: &[Vec<i32>], d: &[i32]) -> Vector {
    let n = root.len();
    // (α, α) / 2 = Σ c_i c_j d_i A_ij / 2.
    let mut norm2 = 0;
    for i in 0..n {
        for j in 0..n {
            norm2 += root[i] * root[j] * d[i] * cartan[i][j];
        }
    }
    let d_alpha = norm2 / 2;
    (0..n).map(|i| root[i] * d[i] / d_alpha).collect()
}

/// Positive roots by simple root strings, processed height by height: for a
/// positive root `β` and simple `α_i`, `β + α_i` is a root iff `q > 0` where
/// `p` is the length of the downward `α_i`-string through `β` and
/// `p - q = <α_i^∨, β>`.
fn positive_roots_by_strings(cartan: &[Vec<i32>]) -> Vec<Vector> {
    let n = cartan.len();
    let mut layers: Vec<Vec<Vector>> = vec![(0..n)
        .map(|i| (0..n).map(|j| (i == j) as i32).collect())
        .collect()];
    let mut known: std::collections::HashSet<Vector> = layers[0].iter().cloned().collect();
    loop {
        let mut next: Vec<Vector> = Vec::new();
        for beta in layers.last().unwrap() {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        known.insert(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let mut roots: Vec<Vector> = layers.into_iter().flatten().collect();
    roots.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
