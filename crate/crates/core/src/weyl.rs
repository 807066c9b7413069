//! The finite Weyl group `W_0`, fully enumerated.
//!
//! Elements are identified by their action on the coweight lattice (an
//! integer matrix in the fundamental-coweight basis); after enumeration each
//! element is referred to by its position in the deterministic order
//! (length, then ShortLex reduced word). [`WeylElement`] is that position.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::root_system::{RootDatum, Vector};
use crate::{par, Error, NodeSet, Result};

/// Default cap on `|W_0|` for [`FiniteWeylGroup::generate`].
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Groups up to this order get a fully precomputed Bruhat bitset.
pub const BRUHAT_CACHE_LIMIT: usize = 20_000;

/// Index of an element in its group's deterministic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElement(pub u32);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

pub struct FiniteWeylGroup {
    datum: RootDatum,
    rank: usize,
    matrices: Vec<i32>,
    lengths: Vec<u16>,
    words: Vec<Vec<u8>>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    left_descents: Vec<u16>,
    right_descents: Vec<u16>,
    bruhat: Option<Vec<FixedBitSet>>,
    index: HashMap<Vec<i32>, u32>,
}

impl fmt::Debug for FiniteWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteWeylGroup")
            .field("type", &self.datum.cartan_type())
            .field("order", &self.order())
            .finish()
    }
}

impl FiniteWeylGroup {
    /// Enumerates `W_0` with the default element budget.
    pub fn generate(datum: &RootDatum) -> Result<Self> {
        Self::generate_with_budget(datum, DEFAULT_BUDGET)
    }

    /// Breadth-first closure of the identity under left multiplication by
    /// simple reflections.
    pub fn generate_with_budget(datum: &RootDatum, budget: u128) -> Result<Self> {
        let order = datum.cartan_type().weyl_order();
        if order > budget {
            return Err(Error::Resource(format!(
                "Weyl group of {} has order {order}, budget is {budget}",
                datum.cartan_type()
            )));
        }
        let n = datum.rank();
        let a = datum.cartan();

        // Discovery order: BFS layers = lengths.
        let mut mats: Vec<Vec<i32>> = vec![identity(n)];
        let mut lens: Vec<u16> = vec![0];
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        index.insert(mats[0].clone(), 0);
        let mut tmp_left: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut head = 0;
        while head < mats.len() {
            for (i, row) in tmp_left.iter_mut().enumerate() {
                let m = left_reflect(&mats[head], i, a, n);
                let id = match index.get(&m) {
                    Some(&id) => id,
                    None => {
                        let id = mats.len() as u32;
                        index.insert(m.clone(), id);
                        mats.push(m);
                        lens.push(lens[head] + 1);
                        id
                    }
                };
                row.push(id);
            }
            head += 1;
        }
        let total = mats.len();
        debug_assert_eq!(total as u128, order);

        // ShortLex word: smallest left descent, then recurse.
        let mut tmp_words: Vec<Vec<u8>> = vec![Vec::new(); total];
        for w in 1..total {
            let i = (0..n)
                .find(|&i| lens[tmp_left[i][w] as usize] < lens[w])
                .expect("nonidentity element has a left descent");
            let rest = &tmp_words[tmp_left[i][w] as usize];
            let mut word = Vec::with_capacity(rest.len() + 1);
            word.push(i as u8);
            word.extend_from_slice(rest);
            tmp_words[w] = word;
        }
        let mut perm: Vec<usize> = (0..total).collect();
        perm.sort_by(|&x, &y| lens[x].cmp(&lens[y]).then_with(|| tmp_words[x].cmp(&tmp_words[y])));
        let mut new_id = vec![0u32; total];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }

        let mut matrices = Vec::with_capacity(total * n * n);
        let mut lengths = Vec::with_capacity(total);
        let mut words = Vec::with_capacity(total);
        for &old in &perm {
            matrices.extend_from_slice(&mats[old]);
            lengths.push(lens[old]);
            words.push(std::mem::take(&mut tmp_words[old]));
        }
        let left: Vec<Vec<u32>> = (0..n)
            .map(|i| perm.iter().map(|&old| new_id[tmp_left[i][old] as usize]).collect())
            .collect();
        let index: HashMap<Vec<i32>, u32> = index
            .into_iter()
            .map(|(m, old)| (m, new_id[old as usize]))
            .collect();
        let right: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..total)
                    .map(|w| {
                        let m = right_reflect(&matrices[w * n * n..(w + 1) * n * n], i, a, n);
                        index[&m]
                    })
                    .collect()
            })
            .collect();
        let desc = |table: &Vec<Vec<u32>>| -> Vec<u16> {
            (0..total)
                .map(|w| {
                    (0..n).fold(0u16, |m, i| {
                        if lengths[table[i][w] as usize] < lengths[w] {
                            m | (1 << i)
                        } else {
                            m
                        }
                    })
                })
                .collect()
        };
        let left_descents = desc(&left);
        let right_descents = desc(&right);

        let mut group = FiniteWeylGroup {
            datum: datum.clone(),
            rank: n,
            matrices,
            lengths,
            words,
            left,
            right,
            inverse: Vec::new(),
            left_descents,
            right_descents,
            bruhat: None,
            index,
        };
        group.inverse = (0..total)
            .map(|w| {
                let mut x = 0u32;
                for &i in group.words[w].iter().rev() {
                    x = group.right[i as usize][x as usize];
                }
                x
            })
            .collect();
        if total <= BRUHAT_CACHE_LIMIT {
            group.bruhat = Some(group.build_bruhat_rows());
        }
        Ok(group)
    }

    /// Lower-interval rows, one length layer at a time:
    /// `[e, w] = [e, sw] ∪ s·[e, sw]` for a left descent `s` of `w`.
    fn build_bruhat_rows(&self) -> Vec<FixedBitSet> {
        let total = self.order();
        let mut rows: Vec<FixedBitSet> = Vec::with_capacity(total);
        let mut id_row = FixedBitSet::with_capacity(total);
        id_row.insert(0);
        rows.push(id_row);
        let mut start = 1;
        while start < total {
            let len = self.lengths[start];
            let end = (start..total)
                .find(|&w| self.lengths[w] != len)
                .unwrap_or(total);
            let layer: Vec<FixedBitSet> = par::map_range(end - start, |k| {
                let w = start + k;
                let s = self.words[w][0] as usize;
                let below = &rows[self.left[s][w] as usize];
                let mut row = below.clone();
                for u in below.ones() {
                    row.insert(self.left[s][u] as usize);
                }
                row
            });
            rows.extend(layer);
            start = end;
        }
        rows
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::IDENTITY
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        WeylElement(self.left[i][0])
    }

    #[inline]
    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[w.idx()] as usize
    }

    /// ShortLex-minimal reduced word, 0-based letters.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.idx()]
    }

    /// Action matrix on ω-coordinates, row-major.
    pub fn matrix(&self, w: WeylElement) -> &[i32] {
        let nn = self.rank * self.rank;
        &self.matrices[w.idx() * nn..(w.idx() + 1) * nn]
    }

    /// Looks an element up by its action matrix.
    pub fn from_matrix(&self, m: &[i32]) -> Option<WeylElement> {
        self.index.get(m).map(|&i| WeylElement(i))
    }

    #[inline]
    pub fn left_mul_simple(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[i][w.idx()])
    }

    #[inline]
    pub fn right_mul_simple(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[i][w.idx()])
    }

    #[inline]
    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.idx()])
    }

    /// `ℓ(s_i w) < ℓ(w)`, equivalently `w^{-1}(α_i) < 0`.
    #[inline]
    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.left_descents[w.idx()] >> i & 1 == 1
    }

    /// `ℓ(w s_i) < ℓ(w)`, equivalently `w(α_i) < 0`.
    #[inline]
    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.right_descents[w.idx()] >> i & 1 == 1
    }

    pub fn left_descent_set(&self, w: WeylElement) -> NodeSet {
        NodeSet::from_bits(self.left_descents[w.idx()])
    }

    pub fn right_descent_set(&self, w: WeylElement) -> NodeSet {
        NodeSet::from_bits(self.right_descents[w.idx()])
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        let mut x = a.0;
        for &i in &self.words[b.idx()] {
            x = self.right[i as usize][x as usize];
        }
        WeylElement(x)
    }

    /// Element from a word of 0-based letters (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        let mut x = 0u32;
        for &i in word {
            x = self.right[i][x as usize];
        }
        WeylElement(x)
    }

    /// `w·λ` for `λ` in ω-coordinates.
    pub fn act(&self, w: WeylElement, lambda: &[i32]) -> Vector {
        let m = self.matrix(w);
        let n = self.rank;
        (0..n)
            .map(|j| (0..n).map(|k| m[j * n + k] * lambda[k]).sum())
            .collect()
    }

    /// `w(β)` for a root in simple-root coordinates.
    pub fn act_on_root(&self, w: WeylElement, root: &[i32]) -> Vector {
        let a = self.datum.cartan();
        let mut b: Vector = root.iter().copied().collect();
        for &i in self.words[w.idx()].iter().rev() {
            let i = i as usize;
            let p: i32 = (0..self.rank).map(|j| a[i][j] * b[j]).sum();
            b[i] -= p;
        }
        b
    }

    /// `u ≤ w` in Bruhat order. Uses the precomputed bitset when present,
    /// otherwise the descent recursion.
    #[inline]
    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> bool {
        match &self.bruhat {
            Some(rows) => rows[w.idx()].contains(u.idx()),
            None => self.bruhat_leq_recursive(u, w),
        }
    }

    pub fn has_bruhat_cache(&self) -> bool {
        self.bruhat.is_some()
    }

    /// Descent criterion: for a left descent `s` of `w`, `u ≤ w` iff
    /// `su ≤ sw` when `su < u`, and iff `u ≤ sw` otherwise.
    pub fn bruhat_leq_recursive(&self, mut u: WeylElement, mut w: WeylElement) -> bool {
        loop {
            let (lu, lw) = (self.length(u), self.length(w));
            if lu >= lw {
                return u == w;
            }
            let s = self.left_descents[w.idx()].trailing_zeros() as usize;
            if self.is_left_descent(u, s) {
                u = self.left_mul_simple(s, u);
            }
            w = self.left_mul_simple(s, w);
        }
    }

    /// `{u : u ≤ w}` as a bitset over element indices.
    pub fn lower_interval(&self, w: WeylElement) -> FixedBitSet {
        match &self.bruhat {
            Some(rows) => rows[w.idx()].clone(),
            None => {
                let mut row = FixedBitSet::with_capacity(self.order());
                row.insert(0);
                for &s in self.words[w.idx()].iter().rev() {
                    let cur: Vec<usize> = row.ones().collect();
                    for u in cur {
                        row.insert(self.left[s as usize][u] as usize);
                    }
                }
                row
            }
        }
    }

    /// Elements of the parabolic subgroup `W_J`, in group order.
    pub fn parabolic_subgroup(&self, j: NodeSet) -> Vec<WeylElement> {
        self.elements()
            .filter(|&w| self.word(w).iter().all(|&i| j.contains(i as usize)))
            .collect()
    }

    pub fn in_parabolic(&self, w: WeylElement, j: NodeSet) -> bool {
        self.word(w).iter().all(|&i| j.contains(i as usize))
    }

    /// Minimal-length element of the coset `W_Y y`.
    pub fn min_coset_rep(&self, y_set: NodeSet, y: WeylElement) -> WeylElement {
        let mut x = y;
        loop {
            let d = self.left_descent_set(x).bits() & y_set.bits();
            if d == 0 {
                return x;
            }
            x = self.left_mul_simple(d.trailing_zeros() as usize, x);
        }
    }

    /// Minimal-length element of the coset `w W_J`.
    pub fn min_right_coset_rep(&self, w: WeylElement, j: NodeSet) -> WeylElement {
        let mut x = w;
        loop {
            let d = self.right_descent_set(x).bits() & j.bits();
            if d == 0 {
                return x;
            }
            x = self.right_mul_simple(x, d.trailing_zeros() as usize);
        }
    }

    pub fn is_min_right_coset_rep(&self, w: WeylElement, j: NodeSet) -> bool {
        self.right_descent_set(w).bits() & j.bits() == 0
    }

    /// `W^J`: elements with no right descent in `J`, in group order.
    pub fn minimal_reps(&self, j: NodeSet) -> Vec<WeylElement> {
        self.elements()
            .filter(|&w| self.is_min_right_coset_rep(w, j))
            .collect()
    }

    /// `w = w^J · w_J` with `w^J ∈ W^J`, `w_J ∈ W_J`.
    pub fn parabolic_decompose(&self, w: WeylElement, j: NodeSet) -> (WeylElement, WeylElement) {
        let min = self.min_right_coset_rep(w, j);
        let part = self.mul(self.inverse(min), w);
        (min, part)
    }

    /// Longest element `w_J` of `W_J`.
    pub fn longest_element(&self, j: NodeSet) -> WeylElement {
        let mut x = WeylElement::IDENTITY;
        loop {
            let asc = !self.right_descent_set(x).bits() & j.bits();
            if asc == 0 {
                return x;
            }
            x = self.right_mul_simple(x, asc.trailing_zeros() as usize);
        }
    }

    /// Serialised form: `"s1.s2.s1"`, identity `"e"`.
    pub fn format(&self, w: WeylElement) -> String {
        format_word(self.word(w))
    }

    /// Parses the serialised form (any word, reduced or not).
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let letters = parse_word(s, self.rank)?;
        Ok(self.from_word(&letters))
    }
}

pub(crate) fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut out = String::with_capacity(word.len() * 3);
    for (k, &i) in word.iter().enumerate() {
        if k > 0 {
            out.push('.');
        }
        out.push('s');
        out.push_str(&(i as usize + 1).to_string());
    }
    out
}

/// Parses `"s1.s2"` / `"e"` into 0-based letters; `s0` is rejected here.
pub(crate) fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('.')
        .map(|tok| {
            let i: usize = tok
                .trim()
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Input(format!("bad letter '{tok}'")))?;
            if i == 0 || i > rank {
                return Err(Error::Input(format!("letter '{tok}' out of range")));
            }
            Ok(i - 1)
        })
        .collect()
}

fn identity(n: usize) -> Vec<i32> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// `s_i · M`: `(s_i λ)_j = λ_j - A_ij λ_i`.
fn left_reflect(m: &[i32], i: usize, a: &[Vec<i32>], n: usize) -> Vec<i32> {
    let mut out = m.to_vec();
    for j in 0..n {
        if a[i][j] != 0 {
            for k in 0..n {
                out[j * n + k] -= a[i][j] * m[i * n + k];
            }
        }
    }
    out
}

/// `M · s_i`: only column `i` changes.
fn right_reflect(m: &[i32], i: usize, a: &[Vec<i32>], n: usize) -> Vec<i32> {
    let mut out = m.to_vec();
    for j in 0..n {
        let s: i32 = (0..n).map(|l| m[j * n + l] * a[i][l]).sum();
        out[j * n + i] -= s;
    }
    out
}
