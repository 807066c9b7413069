//! Independent oracles shared by the oracle tests and the acceptance suite.
//! Each one recomputes from a definition rather than from the fast paths.

#![allow(dead_code)]

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use lm_atlas_core::root_system::pair_fundamental;
use lm_atlas_core::{AffineElement, AffineWeylGroup, Coweight, FiniteWeylGroup, WeylElement};

/// Down-sets from the reflection definition: `u ≤ w` iff `u` is reached
/// from `w` by right multiplications by reflections that lower the length.
pub fn reflection_order(g: &FiniteWeylGroup) -> Vec<FixedBitSet> {
    let mut reflections: Vec<WeylElement> = Vec::new();
    for w in g.elements() {
        for i in 0..g.rank() {
            let t = g.mul(g.mul(w, g.simple_reflection(i)), g.inverse(w));
            if !reflections.contains(&t) {
                reflections.push(t);
            }
        }
    }
    assert_eq!(reflections.len(), g.datum().positive_roots().len());
    let mut down: Vec<FixedBitSet> = Vec::with_capacity(g.order());
    for w in g.elements() {
        let mut row = FixedBitSet::with_capacity(g.order());
        row.insert(w.idx());
        for &t in &reflections {
            let v = g.mul(w, t);
            if g.length(v) < g.length(w) {
                row.union_with(&down[v.idx()]);
            }
        }
        down.push(row);
    }
    down
}

/// All products of subwords of the stored reduced word.
pub fn subword_products(g: &FiniteWeylGroup, w: WeylElement) -> HashSet<WeylElement> {
    let word = g.word(w);
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let letters: Vec<usize> = (0..word.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| word[k] as usize)
            .collect();
        out.insert(g.from_word(&letters));
    }
    out
}

/// `{u : u ≤ x}` as all products `τ · (subword)` of `x = τ · s_{i1} ⋯ s_{ik}`.
pub fn affine_subwords(g: &AffineWeylGroup, x: &AffineElement) -> HashSet<AffineElement> {
    let (class, word) = g.quasi_coxeter(x);
    let tau = g.omega_element(&class);
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut y = tau.clone();
        for (k, &s) in word.iter().enumerate() {
            if mask >> k & 1 == 1 {
                y = g.right_mul_simple(&y, s as usize);
            }
        }
        out.insert(y);
    }
    out
}

/// Alcove-walk count: hyperplanes `<v, α> = k` separating `-ρ∨/h` from its
/// image, with everything scaled by `h`.
pub fn hyperplanes(g: &AffineWeylGroup, x: &AffineElement) -> usize {
    let d = g.datum();
    let h = d.coxeter_number();
    let n = d.rank();
    let p: Vec<i32> = vec![-1; n];
    let moved = g.finite().act(x.finite, &p);
    let image: Vec<i32> = (0..n).map(|j| h * x.translation[j] + moved[j]).collect();
    d.positive_roots()
        .iter()
        .map(|a| {
            let (lo, hi) = {
                let a0 = pair_fundamental(&p, a);
                let a1 = pair_fundamental(&image, a);
                (a0.min(a1), a0.max(a1))
            };
            ((lo + 1)..hi).filter(|v| v % h == 0).count()
        })
        .sum()
}

/// Downward closure of the translations by deleting single letters from
/// reduced words until nothing new appears.
pub fn adm_by_deletion(g: &AffineWeylGroup, mu: &Coweight) -> HashSet<AffineElement> {
    let mut seen: HashSet<AffineElement> = HashSet::new();
    let mut stack: Vec<AffineElement> = g
        .orbit(mu)
        .iter()
        .map(|lam| g.translation_fundamental(lam))
        .collect();
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        let (class, word) = g.quasi_coxeter(&x);
        for skip in 0..word.len() {
            let mut y = g.omega_element(&class);
            for (k, &s) in word.iter().enumerate() {
                if k != skip {
                    y = g.right_mul_simple(&y, s as usize);
                }
            }
            if !seen.contains(&y) {
                stack.push(y);
            }
        }
    }
    seen
}
