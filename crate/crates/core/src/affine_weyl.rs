//! The extended affine Weyl group `W̃ = X_* ⋊ W_0`.
//!
//! An element `t_λ w` is stored as the pair `(λ, w)` with `λ` in
//! ω-coordinates; multiplication is `(λ, w)(λ', w') = (λ + wλ', ww')` and the
//! element acts on `X_* ⊗ R` by `v ↦ λ + w(v)`.
//!
//! Length convention: the base alcove is the one in the antidominant chamber,
//! `{v : -1 < <v, α> < 0 for α > 0}`, so that
//!
//! ```text
//! ℓ(t_λ w) = Σ_{α>0, w⁻¹α>0} |<λ,α>| + Σ_{α>0, w⁻¹α<0} |<λ,α> + 1|
//! ```
//!
//! which gives `ℓ(t_λ) = <λ, 2ρ>` for dominant `λ`. The affine simple
//! reflection is `s_0 = t_{-θ^∨} s_θ`, the reflection in `<v, θ> = -1`. With
//! these choices `x t_μ y⁻¹` carries `{(x, y) : y ≤ x}` onto the admissible
//! set.
//!
//! Affine simple reflections are numbered `0..=rank`: `0` is `s_0` and `i + 1`
//! is the finite reflection with 0-based node `i`.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::root_system::{pair_fundamental, write_vector, Coweight, RootDatum, Vector};
use crate::weyl::{FiniteWeylGroup, WeylElement};
use crate::{par, Error, Result};

/// Default cap on the number of elements in a [`BoundedWindow`].
pub const DEFAULT_WINDOW_BUDGET: usize = 60_000;

/// Bumped whenever the serialised window layout changes.
pub const WINDOW_FORMAT_VERSION: u32 = 1;

/// `t_λ · w` with `λ` in ω-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineElement {
    pub translation: Vector,
    pub finite: WeylElement,
}

impl AffineElement {
    pub fn new(translation: Vector, finite: WeylElement) -> Self {
        AffineElement {
            translation,
            finite,
        }
    }
}

/// Image of the translation part in `X_*/Q^∨`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OmegaClass {
    /// 0 for the trivial class, otherwise the 1-based node `i` of the
    /// minuscule coweight `ω_i^∨` in this class.
    pub label: usize,
    /// Canonical representative in ω-coordinates (Hermite-reduced modulo
    /// the coroot lattice).
    pub representative: Vector,
    /// Order of the class in `X_*/Q^∨`.
    pub order: usize,
}

/// Counts of the root decomposition attached to a dominant coweight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPartition {
    pub lambda: Vec<i32>,
    /// Roots `α` (both signs) with `<λ, α> = 0`: the Levi `L_J`, `J = I(λ)`.
    pub levi: usize,
    /// Roots with `<λ, α> ≤ -1`: the unipotent radical of `P_J^-`.
    pub negative: usize,
    /// Roots with `<λ, α> ≥ 1`: the unipotent radical of `P_J`.
    pub positive: usize,
    pub total_roots: usize,
    /// `|{(α, n) : α > 0, 1 ≤ n ≤ <λ, α>}|`, the dimension of the coset
    /// `K_1 / (K_1 ∩ s_λ K_1 s_{-λ})`.
    pub coset_count: i64,
    /// `<λ, 2ρ>`.
    pub two_rho: i64,
    /// `<λ, 2ρ> - ℓ(w_S)`, reported alongside the coset count.
    pub minus_longest: i64,
}

pub struct AffineWeylGroup {
    finite: Arc<FiniteWeylGroup>,
    rank: usize,
    /// θ^∨ in ω-coordinates.
    theta_coroot: Vector,
    s_theta: WeylElement,
    left_s_theta: Vec<u32>,
    /// `w⁻¹θ > 0`.
    inv_theta_positive: FixedBitSet,
    /// Bitmask of positive roots `α` with `w⁻¹α < 0`.
    inv_negative_roots: Vec<u128>,
    /// Simple reflection `s_i` permutes the positive roots other than `α_i`.
    simple_root_perm: Vec<Vec<u16>>,
    hnf: Vec<Vec<i64>>,
    omega: Vec<(OmegaClass, AffineElement)>,
}

impl fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineWeylGroup")
            .field("type", &self.datum().cartan_type())
            .field("lattice", &self.datum().lattice())
            .finish()
    }
}

impl AffineWeylGroup {
    pub fn new(finite: Arc<FiniteWeylGroup>) -> Self {
        let datum = finite.datum().clone();
        let n = datum.rank();
        let roots = datum.positive_roots();
        assert!(roots.len() <= 128, "positive roots must fit a u128 mask");
        let theta = datum.highest_root().clone();
        let theta_coroot = datum.coroot_to_fundamental(datum.highest_coroot());

        // s_θ: the reflection with matrix λ ↦ λ - <λ, θ> θ^∨.
        let mut m = vec![0i32; n * n];
        for j in 0..n {
            for k in 0..n {
                m[j * n + k] = (j == k) as i32 - theta_coroot[j] * theta[k];
            }
        }
        let s_theta = finite.from_matrix(&m).expect("s_θ lies in W_0");
        let left_s_theta = finite.elements().map(|w| finite.mul(s_theta, w).0).collect();

        let simple_root_perm: Vec<Vec<u16>> = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        let img = finite.act_on_root(finite.simple_reflection(i), r);
                        datum.root_index(&img).map(|k| k as u16).unwrap_or(u16::MAX)
                    })
                    .collect()
            })
            .collect();
        let simple_index: Vec<usize> = (0..n)
            .map(|i| {
                let e: Vector = (0..n).map(|j| (i == j) as i32).collect();
                datum.root_index(&e).unwrap()
            })
            .collect();

        // N(w⁻¹) = {α > 0 : w⁻¹α < 0}; for w = s·v with ℓ(w) = ℓ(v) + 1,
        // N(w⁻¹) = s(N(v⁻¹)) ∪ {α_s}.
        let total = finite.order();
        let mut inv_negative_roots = vec![0u128; total];
        for w in finite.elements().skip(1) {
            let s = finite.word(w)[0] as usize;
            let v = finite.left_mul_simple(s, w);
            let prev = inv_negative_roots[v.idx()];
            let mut mask = 1u128 << simple_index[s];
            let mut bits = prev;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mask |= 1u128 << simple_root_perm[s][k];
            }
            inv_negative_roots[w.idx()] = mask;
        }
        let theta_idx = roots.len() - 1;
        let mut inv_theta_positive = FixedBitSet::with_capacity(total);
        for w in finite.elements() {
            if inv_negative_roots[w.idx()] >> theta_idx & 1 == 0 {
                inv_theta_positive.insert(w.idx());
            }
        }

        let hnf = hermite_normal_form(
            datum
                .cartan()
                .iter()
                .map(|r| r.iter().map(|&c| c as i64).collect())
                .collect(),
        );

        let mut group = AffineWeylGroup {
            finite,
            rank: n,
            theta_coroot,
            s_theta,
            left_s_theta,
            inv_theta_positive,
            inv_negative_roots,
            simple_root_perm,
            hnf,
            omega: Vec::new(),
        };
        group.omega = group.compute_omega();
        group
    }

    /// Convenience constructor: builds the finite group with the default budget.
    pub fn from_datum(datum: &RootDatum) -> Result<Self> {
        Ok(Self::new(Arc::new(FiniteWeylGroup::generate(datum)?)))
    }

    fn compute_omega(&self) -> Vec<(OmegaClass, AffineElement)> {
        let d = self.datum();
        let mut out = vec![(self.omega_class_of(&self.identity()), self.identity())];
        for (i, _) in d.list_minuscule() {
            let mut omega: Vector = smallvec::smallvec![0; self.rank];
            omega[i] = 1;
            let mut x = AffineElement::new(omega, WeylElement::IDENTITY);
            while let Some(s) = self.first_left_descent(&x) {
                x = self.left_mul_simple(s, &x);
            }
            out.push((self.omega_class_of(&x), x));
        }
        out
    }

    pub fn finite(&self) -> &FiniteWeylGroup {
        &self.finite
    }

    pub fn finite_arc(&self) -> &Arc<FiniteWeylGroup> {
        &self.finite
    }

    pub fn datum(&self) -> &RootDatum {
        self.finite.datum()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(smallvec::smallvec![0; self.rank], WeylElement::IDENTITY)
    }

    /// `t_λ` for a coweight in lattice coordinates.
    pub fn translation(&self, lambda: &Coweight) -> AffineElement {
        AffineElement::new(self.datum().to_fundamental(lambda), WeylElement::IDENTITY)
    }

    /// `t_λ` for `λ` in ω-coordinates.
    pub fn translation_fundamental(&self, omega: &[i32]) -> AffineElement {
        AffineElement::new(omega.iter().copied().collect(), WeylElement::IDENTITY)
    }

    /// `w ∈ W_0` viewed in `W̃`.
    pub fn from_finite(&self, w: WeylElement) -> AffineElement {
        AffineElement::new(smallvec::smallvec![0; self.rank], w)
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let moved = self.finite.act(a.finite, &b.translation);
        AffineElement::new(
            a.translation.iter().zip(&moved).map(|(x, y)| x + y).collect(),
            self.finite.mul(a.finite, b.finite),
        )
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let winv = self.finite.inverse(a.finite);
        let moved = self.finite.act(winv, &a.translation);
        AffineElement::new(moved.iter().map(|c| -c).collect(), winv)
    }

    /// Iwahori–Matsumoto length.
    pub fn length(&self, x: &AffineElement) -> usize {
        let inv = self.inv_negative_roots[x.finite.idx()];
        self.datum()
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let m = pair_fundamental(&x.translation, a);
                if inv >> k & 1 == 1 {
                    (m + 1).unsigned_abs() as usize
                } else {
                    m.unsigned_abs() as usize
                }
            })
            .sum()
    }

    /// Whether affine simple reflection `s` (0 = `s_0`) is a left descent.
    #[inline]
    pub fn is_left_descent(&self, x: &AffineElement, s: usize) -> bool {
        if s == 0 {
            let m = pair_fundamental(&x.translation, self.datum().highest_root());
            m < -1 || (m == -1 && self.inv_theta_positive.contains(x.finite.idx()))
        } else {
            let i = s - 1;
            let m = x.translation[i];
            m > 0 || (m == 0 && self.finite.is_left_descent(x.finite, i))
        }
    }

    /// Smallest-index left descent, `None` exactly on `Ω`.
    #[inline]
    pub fn first_left_descent(&self, x: &AffineElement) -> Option<usize> {
        (0..=self.rank).find(|&s| self.is_left_descent(x, s))
    }

    pub fn left_descents(&self, x: &AffineElement) -> Vec<usize> {
        (0..=self.rank).filter(|&s| self.is_left_descent(x, s)).collect()
    }

    /// `s · x` for an affine simple reflection.
    pub fn left_mul_simple(&self, s: usize, x: &AffineElement) -> AffineElement {
        let a = self.datum().cartan();
        if s == 0 {
            // t_{-θ^∨} s_θ t_λ w = t_{-θ^∨ + s_θ λ} s_θ w
            let m = pair_fundamental(&x.translation, self.datum().highest_root());
            let lam = x
                .translation
                .iter()
                .zip(&self.theta_coroot)
                .map(|(l, t)| l - (m + 1) * t)
                .collect();
            AffineElement::new(lam, WeylElement(self.left_s_theta[x.finite.idx()]))
        } else {
            let i = s - 1;
            let li = x.translation[i];
            let lam = x
                .translation
                .iter()
                .enumerate()
                .map(|(j, &l)| l - li * a[i][j])
                .collect();
            AffineElement::new(lam, self.finite.left_mul_simple(i, x.finite))
        }
    }

    /// `x · s` for an affine simple reflection.
    pub fn right_mul_simple(&self, x: &AffineElement, s: usize) -> AffineElement {
        self.mul(x, &self.simple(s))
    }

    /// Affine simple reflection as an element (`0` is `s_0 = t_{-θ^∨} s_θ`).
    pub fn simple(&self, s: usize) -> AffineElement {
        if s == 0 {
            AffineElement::new(self.theta_coroot.iter().map(|c| -c).collect(), self.s_theta)
        } else {
            self.from_finite(self.finite.simple_reflection(s - 1))
        }
    }

    /// Left-greedy reduced decomposition `x = s_{i1} ⋯ s_{ik} · τ`, `τ ∈ Ω`.
    pub fn left_reduced_word(&self, x: &AffineElement) -> (Vec<u8>, AffineElement) {
        let mut word = Vec::new();
        let mut y = x.clone();
        while let Some(s) = self.first_left_descent(&y) {
            word.push(s as u8);
            y = self.left_mul_simple(s, &y);
        }
        (word, y)
    }

    /// Quasi-Coxeter decomposition `x = τ · w_a` with `τ ∈ Ω` and the
    /// ShortLex word of `w_a ∈ W_a` (smallest affine index first).
    pub fn quasi_coxeter(&self, x: &AffineElement) -> (OmegaClass, Vec<u8>) {
        let class = self.omega_component(x);
        let tau = self.omega_element(&class);
        let wa = self.mul(&self.inverse(&tau), x);
        let (word, rest) = self.left_reduced_word(&wa);
        debug_assert_eq!(rest, self.identity());
        (class, word)
    }

    /// Canonical image of `λ` (ω-coordinates) in `X_*/Q^∨`.
    fn reduce_mod_coroots(&self, lambda: &[i32]) -> Vector {
        let mut v: Vec<i64> = lambda.iter().map(|&c| c as i64).collect();
        for (i, row) in self.hnf.iter().enumerate() {
            let p = row[i];
            let q = v[i].div_euclid(p);
            if q != 0 {
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj -= q * rj;
                }
            }
        }
        v.into_iter().map(|c| c as i32).collect()
    }

    fn omega_class_of(&self, x: &AffineElement) -> OmegaClass {
        let rep = self.reduce_mod_coroots(&x.translation);
        let mut order = 1;
        let mut acc = rep.clone();
        while acc.iter().any(|&c| c != 0) {
            acc = self.reduce_mod_coroots(
                &acc.iter().zip(&rep).map(|(a, b)| a + b).collect::<Vector>(),
            );
            order += 1;
        }
        let label = if rep.iter().all(|&c| c == 0) {
            0
        } else {
            self.datum()
                .list_minuscule()
                .into_iter()
                .find(|(i, _)| {
                    let mut e: Vector = smallvec::smallvec![0; self.rank];
                    e[*i] = 1;
                    self.reduce_mod_coroots(&e) == rep
                })
                .map(|(i, _)| i + 1)
                .expect("every class of X_*/Q^∨ contains a minuscule coweight")
        };
        OmegaClass {
            label,
            representative: rep,
            order,
        }
    }

    pub fn omega_component(&self, x: &AffineElement) -> OmegaClass {
        self.omega_class_of(x)
    }

    /// The length-zero elements, one per class of `X_*/Q^∨`.
    pub fn omega_elements(&self) -> impl Iterator<Item = (&OmegaClass, &AffineElement)> {
        self.omega.iter().map(|(c, x)| (c, x))
    }

    pub fn omega_element(&self, class: &OmegaClass) -> AffineElement {
        self.omega
            .iter()
            .find(|(c, _)| c.representative == class.representative)
            .map(|(_, x)| x.clone())
            .expect("class comes from this group")
    }

    /// `u ≤ x` in the Bruhat order of `W̃`, by the descent recursion on a
    /// left descent of `x` (smallest affine index first). Elements in
    /// different `Ω`-components are incomparable.
    pub fn bruhat_leq(&self, u: &AffineElement, x: &AffineElement) -> bool {
        if self.reduce_mod_coroots(&u.translation) != self.reduce_mod_coroots(&x.translation) {
            return false;
        }
        self.bruhat_leq_same_component(u, x, self.length(u), self.length(x))
    }

    /// Same as [`bruhat_leq`](Self::bruhat_leq) with known lengths and `Ω`
    /// components already matched.
    pub fn bruhat_leq_same_component(
        &self,
        u: &AffineElement,
        x: &AffineElement,
        mut lu: usize,
        mut lx: usize,
    ) -> bool {
        if lu >= lx {
            return lu == lx && u == x;
        }
        let mut u = u.clone();
        let mut x = x.clone();
        loop {
            if lu >= lx {
                return lu == lx && u == x;
            }
            let s = self
                .first_left_descent(&x)
                .expect("positive length has a descent");
            if self.is_left_descent(&u, s) {
                u = self.left_mul_simple(s, &u);
                lu -= 1;
            }
            x = self.left_mul_simple(s, &x);
            lx -= 1;
        }
    }

    /// `{u : u ≤ x}`, by deleting letters from the left-greedy reduced word
    /// of `x` one position at a time (right to left), deduplicating as it
    /// goes. Sorted by [`sort_key`](Self::sort_key).
    pub fn lower_interval(&self, x: &AffineElement) -> Vec<AffineElement> {
        let (word, tau) = self.left_reduced_word(x);
        let mut set: HashSet<AffineElement> = HashSet::new();
        set.insert(tau);
        for &s in word.iter().rev() {
            let new: Vec<AffineElement> = set
                .iter()
                .map(|u| self.left_mul_simple(s as usize, u))
                .collect();
            set.extend(new);
        }
        let mut out: Vec<AffineElement> = set.into_iter().collect();
        self.sort(&mut out);
        out
    }

    /// Deterministic order: length, then translation, then finite index.
    pub fn sort_key(&self, x: &AffineElement) -> (usize, Vector, WeylElement) {
        (self.length(x), x.translation.clone(), x.finite)
    }

    pub fn sort(&self, xs: &mut [AffineElement]) {
        xs.sort_by_cached_key(|x| self.sort_key(x));
    }

    /// `W_0 t_λ W_0`, sorted.
    pub fn translation_double_coset(&self, lambda: &Coweight) -> Vec<AffineElement> {
        let t = self.translation(lambda);
        let fin = &self.finite;
        let mut set: HashSet<AffineElement> = HashSet::new();
        for a in fin.elements() {
            let at = self.mul(&self.from_finite(a), &t);
            for b in fin.elements() {
                set.insert(AffineElement::new(at.translation.clone(), fin.mul(a, b)));
            }
        }
        let mut out: Vec<_> = set.into_iter().collect();
        self.sort(&mut out);
        out
    }

    /// `W_0 · λ` in ω-coordinates, sorted and deduplicated.
    pub fn orbit(&self, lambda: &Coweight) -> Vec<Vector> {
        let l = self.datum().to_fundamental(lambda);
        let mut v: Vec<Vector> = self.finite.elements().map(|w| self.finite.act(w, &l)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Root-count decomposition for dominant `λ`.
    pub fn affine_root_partition(&self, lambda: &Coweight) -> Result<RootPartition> {
        let d = self.datum();
        if !d.is_dominant(lambda) {
            return Err(Error::Domain(format!("coweight {lambda} is not dominant")));
        }
        let omega = d.to_fundamental(lambda);
        let (mut levi, mut negative, mut positive) = (0, 0, 0);
        let mut coset_count = 0i64;
        for a in d.positive_roots() {
            let m = pair_fundamental(&omega, a);
            for v in [m, -m] {
                match v {
                    0 => levi += 1,
                    v if v < 0 => negative += 1,
                    _ => positive += 1,
                }
            }
            coset_count += (1..=m).count() as i64;
        }
        let two_rho = d.two_rho_pairing(lambda) as i64;
        Ok(RootPartition {
            lambda: lambda.0.to_vec(),
            levi,
            negative,
            positive,
            total_roots: 2 * d.positive_roots().len(),
            coset_count,
            two_rho,
            minus_longest: two_rho - d.positive_roots().len() as i64,
        })
    }

    /// `"t[λ]·word"`, `λ` in lattice coordinates, `word` the ShortLex word of
    /// the finite part.
    pub fn format(&self, x: &AffineElement) -> String {
        let mut s = String::from("t");
        let lam = self
            .datum()
            .from_fundamental(&x.translation)
            .map(|c| c.0)
            .unwrap_or_else(|| x.translation.clone());
        write_vector(&mut s, &lam).unwrap();
        s.push('·');
        s.push_str(&self.finite.format(x.finite));
        s
    }

    /// `"omega[k]·word"` with the ShortLex affine word (`s0` is the affine
    /// reflection).
    pub fn format_quasi_coxeter(&self, x: &AffineElement) -> String {
        let (class, word) = self.quasi_coxeter(x);
        let mut s = String::new();
        write!(s, "omega[{}]·", class.label).unwrap();
        if word.is_empty() {
            s.push('e');
        } else {
            for (k, &l) in word.iter().enumerate() {
                if k > 0 {
                    s.push('.');
                }
                write!(s, "s{l}").unwrap();
            }
        }
        s
    }

    /// Parses the `"t[λ]·word"` form (`*` also accepted as separator).
    pub fn parse(&self, s: &str) -> Result<AffineElement> {
        let bad = || Error::Input(format!("bad affine element '{s}'"));
        let rest = s.trim().strip_prefix('t').ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let lam = self.datum().parse_coweight(&rest[..=close])?;
        let tail = rest[close + 1..].trim_start_matches(['·', '*', ' ']);
        let w = if tail.is_empty() {
            WeylElement::IDENTITY
        } else {
            self.finite.parse(tail)?
        };
        let omega = self.datum().to_fundamental(&lam);
        Ok(AffineElement::new(omega, w))
    }

    /// Inverse-root bitmask accessor for tests and oracles.
    pub fn inversion_mask(&self, w: WeylElement) -> u128 {
        self.inv_negative_roots[w.idx()]
    }

    #[doc(hidden)]
    pub fn simple_root_permutation(&self, i: usize) -> &[u16] {
        &self.simple_root_perm[i]
    }
}

/// Upper-triangular Hermite normal form of a nonsingular integer matrix
/// (row lattice), positive diagonal.
fn hermite_normal_form(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let n = rows.len();
    for c in 0..n {
        loop {
            // pivot: smallest nonzero |entry| in column c among rows c..
            let pivot = (c..n)
                .filter(|&r| rows[r][c] != 0)
                .min_by_key(|&r| rows[r][c].abs());
            let Some(p) = pivot else { break };
            rows.swap(c, p);
            let mut done = true;
            for r in c + 1..n {
                if rows[r][c] != 0 {
                    let q = rows[r][c] / rows[c][c];
                    let pivot_row = rows[c].clone();
                    for (a, b) in rows[r].iter_mut().zip(&pivot_row) {
                        *a -= q * b;
                    }
                    if rows[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[c][c] < 0 {
            for v in rows[c].iter_mut() {
                *v = -*v;
            }
        }
    }
    rows
}

/// Elements of `W̃` of length at most `bound`, with their Bruhat order.
pub struct BoundedWindow {
    bound: usize,
    elements: Vec<AffineElement>,
    lengths: Vec<u32>,
    index: HashMap<AffineElement, u32>,
    rows: Vec<FixedBitSet>,
}

/// Serialised [`BoundedWindow`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WindowData {
    pub format_version: u32,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lattice: String,
    pub bound: usize,
    pub elements: Vec<(Vec<i32>, u32)>,
    /// Lower-interval bitsets, as 64-bit blocks.
    pub rows: Vec<Vec<u64>>,
}

impl BoundedWindow {
    /// Enumerates by left multiplication from `Ω`, keeping only
    /// length-increasing steps.
    pub fn build(aff: &AffineWeylGroup, bound: usize, budget: usize) -> Result<Self> {
        let seeds = aff.omega_elements().map(|(_, x)| x.clone()).collect();
        Self::build_from(aff, seeds, bound, budget)
    }

    /// Window restricted to one `Ω`-component.
    pub fn build_component(
        aff: &AffineWeylGroup,
        class: &OmegaClass,
        bound: usize,
        budget: usize,
    ) -> Result<Self> {
        Self::build_from(aff, vec![aff.omega_element(class)], bound, budget)
    }

    fn build_from(
        aff: &AffineWeylGroup,
        seeds: Vec<AffineElement>,
        bound: usize,
        budget: usize,
    ) -> Result<Self> {
        let mut seen: HashSet<AffineElement> = HashSet::new();
        let mut layer: Vec<AffineElement> = seeds;
        let mut all: Vec<AffineElement> = Vec::new();
        for x in &layer {
            seen.insert(x.clone());
        }
        for len in 0..=bound {
            all.extend(layer.iter().cloned());
            if all.len() > budget {
                return Err(Error::Resource(format!(
                    "window of length {bound} for {} exceeds {budget} elements",
                    aff.datum().cartan_type()
                )));
            }
            if len == bound {
                break;
            }
            let mut next = Vec::new();
            for x in &layer {
                for s in 0..=aff.rank() {
                    if !aff.is_left_descent(x, s) {
                        let y = aff.left_mul_simple(s, x);
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            layer = next;
        }
        aff.sort(&mut all);
        let lengths: Vec<u32> = all.iter().map(|x| aff.length(x) as u32).collect();
        let index: HashMap<AffineElement, u32> = all
            .iter()
            .enumerate()
            .map(|(k, x)| (x.clone(), k as u32))
            .collect();
        let total = all.len();

        // [e, x] = [e, sx] ∪ s·[e, sx] layer by layer.
        let mut rows: Vec<FixedBitSet> = Vec::with_capacity(total);
        let mut start = 0;
        while start < total {
            let len = lengths[start];
            let end = (start..total).find(|&k| lengths[k] != len).unwrap_or(total);
            let layer_rows: Vec<FixedBitSet> = par::map_range(end - start, |k| {
                let x = &all[start + k];
                let mut row = FixedBitSet::with_capacity(total);
                match aff.first_left_descent(x) {
                    None => row.insert(start + k),
                    Some(s) => {
                        let below = index[&aff.left_mul_simple(s, x)] as usize;
                        row.union_with(&rows[below]);
                        for u in rows[below].ones() {
                            row.insert(index[&aff.left_mul_simple(s, &all[u])] as usize);
                        }
                    }
                }
                row
            });
            rows.extend(layer_rows);
            start = end;
        }
        Ok(BoundedWindow {
            bound,
            elements: all,
            lengths,
            index,
            rows,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AffineElement] {
        &self.elements
    }

    pub fn length_at(&self, k: usize) -> usize {
        self.lengths[k] as usize
    }

    pub fn index_of(&self, x: &AffineElement) -> Option<usize> {
        self.index.get(x).map(|&k| k as usize)
    }

    /// Element counts per length.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut v = vec![0; self.bound + 1];
        for &l in &self.lengths {
            v[l as usize] += 1;
        }
        v
    }

    /// Memoised `u ≤ w`; both must lie in the window.
    pub fn bruhat_leq(&self, u: &AffineElement, w: &AffineElement) -> Result<bool> {
        let miss = |x: &AffineElement| {
            Error::Resource(format!(
                "element outside the length-{} window: {:?}",
                self.bound, x
            ))
        };
        let iu = self.index_of(u).ok_or_else(|| miss(u))?;
        let iw = self.index_of(w).ok_or_else(|| miss(w))?;
        Ok(self.rows[iw].contains(iu))
    }

    pub fn leq_index(&self, u: usize, w: usize) -> bool {
        self.rows[w].contains(u)
    }

    pub fn lower_interval_indices(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[w].ones()
    }

    /// Covering pairs `(u, w)`, `u ⋖ w`, by index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for w in 0..self.len() {
            for u in self.rows[w].ones() {
                if self.lengths[u] + 1 == self.lengths[w] {
                    out.push((u, w));
                }
            }
        }
        out.sort();
        out
    }

    pub fn to_data(&self, aff: &AffineWeylGroup) -> WindowData {
        WindowData {
            format_version: WINDOW_FORMAT_VERSION,
            cartan_type: aff.datum().cartan_type().to_string(),
            lattice: aff.datum().lattice().to_string(),
            bound: self.bound,
            elements: self
                .elements
                .iter()
                .map(|x| (x.translation.to_vec(), x.finite.0))
                .collect(),
            rows: self
                .rows
                .iter()
                .map(|r| r.as_slice().iter().map(|&b| b as u64).collect())
                .collect(),
        }
    }

    /// Rebuilds from serialised data; rejects a version or datum mismatch.
    pub fn from_data(aff: &AffineWeylGroup, data: WindowData) -> Result<Self> {
        if data.format_version != WINDOW_FORMAT_VERSION {
            return Err(Error::Input(format!(
                "window format {} (expected {WINDOW_FORMAT_VERSION})",
                data.format_version
            )));
        }
        if data.cartan_type != aff.datum().cartan_type().to_string()
            || data.lattice != aff.datum().lattice().to_string()
        {
            return Err(Error::Input("window belongs to a different datum".into()));
        }
        let total = data.elements.len();
        if data.rows.len() != total {
            return Err(Error::Input("window rows do not match elements".into()));
        }
        let elements: Vec<AffineElement> = data
            .elements
            .into_iter()
            .map(|(t, w)| AffineElement::new(t.into_iter().collect(), WeylElement(w)))
            .collect();
        if elements
            .iter()
            .any(|x| x.finite.idx() >= aff.finite().order() || x.translation.len() != aff.rank())
        {
            return Err(Error::Input("window element out of range".into()));
        }
        let lengths = elements.iter().map(|x| aff.length(x) as u32).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, x)| (x.clone(), k as u32))
            .collect();
        let rows = data
            .rows
            .into_iter()
            .map(|blocks| {
                let blocks: Vec<usize> = blocks.into_iter().map(|b| b as usize).collect();
                let mut set = FixedBitSet::with_capacity_and_blocks(total, blocks);
                set.grow(total);
                set
            })
            .collect();
        Ok(BoundedWindow {
            bound: data.bound,
            elements,
            lengths,
            index,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff(ty: &str) -> AffineWeylGroup {
        AffineWeylGroup::from_datum(&RootDatum::adjoint(ty).unwrap()).unwrap()
    }

    /// Counts affine hyperplanes `<v, α> = k` strictly separating a generic
    /// point `p = -ρ^∨/h` of the base alcove from its image `x(p)`. All
    /// quantities are scaled by the Coxeter number `h` to stay integral.
    fn hyperplane_count(g: &AffineWeylGroup, x: &AffineElement) -> usize {
        let d = g.datum();
        let h = d.coxeter_number();
        let n = d.rank();
        let p_scaled: Vector = smallvec::smallvec![-1; n];
        let moved = g.finite().act(x.finite, &p_scaled);
        let image: Vec<i32> = (0..n).map(|j| h * x.translation[j] + moved[j]).collect();
        d.positive_roots()
            .iter()
            .map(|a| {
                let lo = pair_fundamental(&p_scaled, a);
                let hi = pair_fundamental(&image, a);
                let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
                ((lo + 1)..hi).filter(|v| v % h == 0).count()
            })
            .sum()
    }

    #[test]
    fn identity_and_translations() {
        let g = aff("A1");
        assert_eq!(g.length(&g.identity()), 0);
        let w = g.translation(&Coweight::from(&[1][..]));
        assert_eq!(g.length(&w), 1);
    }

    #[test]
    fn length_matches_hyperplane_count_a2() {
        let g = aff("A2");
        let w1 = Coweight::from(&[1, 0][..]);
        let mut values = Vec::new();
        for w in g.finite().elements() {
            let x = AffineElement::new(g.datum().to_fundamental(&w1), w);
            assert_eq!(g.length(&x), hyperplane_count(&g, &x));
            values.push(g.length(&x));
        }
        assert_eq!(values[0], 2);
    }

    #[test]
    fn length_matches_hyperplane_count_everywhere() {
        for ty in ["A3", "B2", "C3", "G2", "D4"] {
            let g = aff(ty);
            let n = g.rank();
            for lam in g.datum().dominant_coweights_up_to(6) {
                for w in g.finite().elements() {
                    for sign in [1, -1] {
                        let t: Vector = g
                            .finite()
                            .act(w, &lam.0)
                            .iter()
                            .map(|c| sign * c)
                            .collect();
                        let x = AffineElement::new(t, g.finite().elements().nth((w.idx() * 7) % g.finite().order()).unwrap());
                        assert_eq!(g.length(&x), hyperplane_count(&g, &x), "{ty}");
                    }
                }
            }
            assert_eq!(n, g.datum().rank());
        }
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for ty in ["A1", "A3", "B3", "C2", "G2", "F4", "D4"] {
            let g = aff(ty);
            for s in 0..=g.rank() {
                let x = g.simple(s);
                assert_eq!(g.length(&x), 1, "{ty} s{s}");
                assert_eq!(g.mul(&x, &x), g.identity());
                assert_eq!(g.left_mul_simple(s, &g.identity()), x);
            }
        }
    }

    #[test]
    fn fast_descents_agree_with_length() {
        for ty in ["A2", "B2", "G2", "A3"] {
            let g = aff(ty);
            let w = BoundedWindow::build(&g, 5, 100_000).unwrap();
            for x in w.elements() {
                for s in 0..=g.rank() {
                    let y = g.mul(&g.simple(s), x);
                    assert_eq!(g.left_mul_simple(s, x), y);
                    assert_eq!(g.is_left_descent(x, s), g.length(&y) < g.length(x), "{ty}");
                }
            }
        }
    }

    #[test]
    fn omega_classes() {
        let g = aff("A2");
        let e = g.omega_component(&g.identity());
        assert_eq!(e.label, 0);
        assert_eq!(e.order, 1);
        let t1 = g.translation(&Coweight::from(&[1, 0][..]));
        let c = g.omega_component(&t1);
        assert_eq!((c.label, c.order), (1, 3));
        let coroot = g.translation_fundamental(&[2, -1]);
        assert_eq!(g.omega_component(&coroot).label, 0);
        for ty in ["A1", "A4", "B3", "C3", "D4", "D5", "E6", "G2"] {
            let g = aff(ty);
            let om: Vec<_> = g.omega_elements().collect();
            assert_eq!(om.len(), g.datum().cartan_type().fundamental_group_order(), "{ty}");
            for (_, x) in om {
                assert_eq!(g.length(x), 0);
            }
        }
        // the finite group acts trivially on X_*/Q^∨
        let g = aff("D4");
        for w in g.finite().elements() {
            for i in [0usize, 2, 3] {
                let mut e: Vector = smallvec::smallvec![0; 4];
                e[i] = 1;
                let moved = g.translation_fundamental(&g.finite().act(w, &e));
                assert_eq!(
                    g.omega_component(&moved),
                    g.omega_component(&g.translation_fundamental(&e))
                );
            }
        }
    }

    #[test]
    fn a1_bruhat_examples() {
        let g = aff("A1");
        let t = g.translation(&Coweight::from(&[1][..]));
        let tau = g.omega_element(&g.omega_component(&t));
        assert!(g.bruhat_leq(&tau, &t));
        assert!(g.bruhat_leq(&t, &t));
        assert!(!g.bruhat_leq(&t, &tau));
        assert!(!g.bruhat_leq(&g.identity(), &t));
        assert_eq!(g.lower_interval(&t), vec![tau.clone(), t.clone()]);
        assert_eq!(g.lower_interval(&tau), vec![tau]);
    }

    #[test]
    fn length_subadditive_and_additive_on_regular_translations() {
        let g = aff("A2");
        let w = BoundedWindow::build(&g, 4, 100_000).unwrap();
        for x in w.elements() {
            for y in w.elements() {
                let xy = g.mul(x, y);
                assert!(g.length(&xy) <= g.length(x) + g.length(y));
            }
        }
        for lam in g.datum().dominant_coweights_up_to(8) {
            if lam.0.iter().all(|&c| c >= 1) {
                let t = g.translation(&lam);
                for v in g.finite().elements() {
                    let x = g.from_finite(v);
                    assert_eq!(g.length(&g.mul(&t, &x)), g.length(&t) + g.length(&x));
                    assert_eq!(g.length(&g.mul(&x, &t)), g.length(&t) - g.length(&x));
                }
            }
        }
    }

    #[test]
    fn regular_interval_matches_window_scan() {
        let g = aff("A2");
        let t = g.translation(&Coweight::from(&[2, 1][..]));
        assert_eq!(g.length(&t), 6);
        let w = BoundedWindow::build(&g, 6, 100_000).unwrap();
        let scan: Vec<AffineElement> = w
            .elements()
            .iter()
            .filter(|u| w.bruhat_leq(u, &t).unwrap())
            .cloned()
            .collect();
        assert_eq!(g.lower_interval(&t), scan);
    }

    #[test]
    fn window_errors_outside_bound() {
        let g = aff("A1");
        let w = BoundedWindow::build(&g, 2, 1000).unwrap();
        let far = g.translation(&Coweight::from(&[4][..]));
        assert!(matches!(w.bruhat_leq(&far, &far), Err(Error::Resource(_))));
        assert!(matches!(BoundedWindow::build(&g, 50, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn window_profile_is_stable() {
        let g = aff("A2");
        let a = BoundedWindow::build(&g, 6, 100_000).unwrap();
        let b = BoundedWindow::build(&g, 6, 100_000).unwrap();
        assert_eq!(a.length_profile(), b.length_profile());
        assert_eq!(a.elements(), b.elements());
        // affine A2: 1, 3, 6, 9, ... elements of length 0, 1, 2, 3 per Ω-class
        assert_eq!(&a.length_profile()[..4], &[3, 9, 18, 27]);
    }

    #[test]
    fn window_round_trip() {
        let g = aff("B2");
        let w = BoundedWindow::build(&g, 5, 100_000).unwrap();
        let data = w.to_data(&g);
        let json = serde_json::to_string(&data).unwrap();
        let back = BoundedWindow::from_data(&g, serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.elements(), w.elements());
        for a in 0..w.len() {
            for b in 0..w.len() {
                assert_eq!(w.leq_index(a, b), back.leq_index(a, b));
            }
        }
        let mut stale = data.clone();
        stale.format_version += 1;
        assert!(BoundedWindow::from_data(&g, stale).is_err());
        assert!(BoundedWindow::from_data(&aff("A2"), data).is_err());
    }

    #[test]
    fn formatting() {
        let g = aff("A2");
        let x = AffineElement::new(smallvec::smallvec![1, 0], g.finite().parse("s1.s2").unwrap());
        assert_eq!(g.format(&x), "t[1,0]·s1.s2");
        assert_eq!(g.parse("t[1,0]·s1.s2").unwrap(), x);
        assert_eq!(g.parse("t[0,0]").unwrap(), g.identity());
        assert_eq!(g.format_quasi_coxeter(&g.identity()), "omega[0]·e");
        assert_eq!(g.format_quasi_coxeter(&g.simple(0)), "omega[0]·s0");
        let t = g.translation(&Coweight::from(&[1, 0][..]));
        assert!(g.format_quasi_coxeter(&t).starts_with("omega[1]·"));
    }

    #[test]
    fn quasi_coxeter_words_are_reduced() {
        let g = aff("C2");
        let w = BoundedWindow::build(&g, 5, 100_000).unwrap();
        for x in w.elements() {
            let (class, word) = g.quasi_coxeter(x);
            assert_eq!(word.len(), g.length(x));
            let mut y = g.omega_element(&class);
            for &s in &word {
                y = g.right_mul_simple(&y, s as usize);
            }
            assert_eq!(&y, x);
        }
    }

    #[test]
    fn root_partition_examples() {
        let g = aff("A2");
        let zero = g.affine_root_partition(&Coweight::zero(2)).unwrap();
        assert_eq!((zero.levi, zero.coset_count), (6, 0));
        let p = g.affine_root_partition(&Coweight::from(&[1, 0][..])).unwrap();
        assert_eq!((p.levi, p.negative, p.positive, p.coset_count), (2, 2, 2, 2));
        assert_eq!(p.minus_longest, -1);
        let reg = g.affine_root_partition(&Coweight::from(&[1, 2][..])).unwrap();
        assert_eq!(reg.levi, 0);
        assert_eq!(reg.coset_count, reg.two_rho);
        assert!(g.affine_root_partition(&Coweight::from(&[-1, 0][..])).is_err());
    }

    #[test]
    fn simply_connected_group_has_trivial_omega() {
        let d = RootDatum::build("A2".parse().unwrap(), crate::LatticeChoice::SimplyConnected).unwrap();
        let g = AffineWeylGroup::from_datum(&d).unwrap();
        assert_eq!(g.omega_elements().count(), 1);
        let t = g.translation(&Coweight::from(&[1, 1][..]));
        assert_eq!(g.length(&t), 4);
        assert_eq!(g.format(&t), "t[1,1]·e");
    }
}
