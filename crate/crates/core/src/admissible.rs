//! Kottwitz–Rapoport admissible sets
//! `Adm(μ) = {w ∈ W̃ : w ≤ t_λ for some λ ∈ W_0·μ}`.

use std::collections::{BTreeMap, HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::affine_weyl::{AffineElement, AffineWeylGroup};
use crate::poset::Hasse;
use crate::root_system::Coweight;
use crate::{par, Error, NodeSet, Result};

/// Default cap on `|Adm(μ)|`.
pub const DEFAULT_ADM_BUDGET: usize = 2_000_000;

pub struct AdmissibleSet {
    mu: Coweight,
    elements: Vec<AffineElement>,
    lengths: Vec<usize>,
    index: HashMap<AffineElement, usize>,
    maxima: Vec<usize>,
}

/// One two-sided class `W_Y x W_Y ∩ Adm(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParahoricClass {
    /// Maximal-length element of the whole double coset `W_Y x W_Y`.
    pub representative: String,
    pub length: usize,
    /// Whether that maximal element itself lies in `Adm(μ)`.
    pub representative_admissible: bool,
    /// Number of elements of `Adm(μ)` in the class.
    pub size: usize,
    /// Longest members of the class inside `Adm(μ)`.
    pub top: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParahoricProjection {
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
    pub classes: Vec<ParahoricClass>,
    /// Indices into `classes` of the Bruhat-maximal classes.
    pub maxima: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lattice: String,
    pub mu: Vec<i32>,
    pub size: usize,
    pub two_rho: i64,
    pub maxima: Vec<String>,
    pub length_histogram: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ParahoricProjection>,
}

impl AdmissibleSet {
    pub fn compute(aff: &AffineWeylGroup, mu: &Coweight) -> Result<Self> {
        Self::compute_with_budget(aff, mu, DEFAULT_ADM_BUDGET)
    }

    /// Union of the lower intervals of `t_λ`, `λ ∈ W_0·μ`, one interval per
    /// worker.
    pub fn compute_with_budget(aff: &AffineWeylGroup, mu: &Coweight, budget: usize) -> Result<Self> {
        let d = aff.datum();
        if mu.0.len() != d.rank() {
            return Err(Error::Input(format!("coweight {mu} has the wrong rank")));
        }
        if !d.is_dominant(mu) {
            return Err(Error::Domain(format!("coweight {mu} is not dominant")));
        }
        let orbit = aff.orbit(mu);
        let intervals = par::map(&orbit, |lam| {
            aff.lower_interval(&aff.translation_fundamental(lam))
        });
        let mut set: HashSet<AffineElement> = HashSet::new();
        for iv in intervals {
            set.extend(iv);
            if set.len() > budget {
                return Err(Error::Resource(format!(
                    "Adm({mu}) for {} exceeds {budget} elements",
                    d.cartan_type()
                )));
            }
        }
        let mut elements: Vec<AffineElement> = set.into_iter().collect();
        aff.sort(&mut elements);
        let lengths: Vec<usize> = elements.iter().map(|x| aff.length(x)).collect();
        let index: HashMap<AffineElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, x)| (x.clone(), k))
            .collect();
        let mut maxima: Vec<usize> = orbit
            .iter()
            .map(|lam| index[&aff.translation_fundamental(lam)])
            .collect();
        maxima.sort();
        Ok(AdmissibleSet {
            mu: mu.clone(),
            elements,
            lengths,
            index,
            maxima,
        })
    }

    pub fn mu(&self) -> &Coweight {
        &self.mu
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
        self.lengths[k]
    }

    pub fn contains(&self, x: &AffineElement) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &AffineElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// The translations `t_λ`, `λ ∈ W_0·μ`, which are the maximal elements.
    pub fn maxima(&self) -> Vec<&AffineElement> {
        self.maxima.iter().map(|&k| &self.elements[k]).collect()
    }

    /// Maximal elements found by comparing every pair, independent of how
    /// the set was generated.
    pub fn bruhat_maxima(&self, aff: &AffineWeylGroup) -> Vec<&AffineElement> {
        let n = self.len();
        let flags = par::map_range(n, |u| {
            !(0..n).any(|w| {
                self.lengths[w] > self.lengths[u]
                    && aff.bruhat_leq_same_component(
                        &self.elements[u],
                        &self.elements[w],
                        self.lengths[u],
                        self.lengths[w],
                    )
            })
        });
        (0..n).filter(|&k| flags[k]).map(|k| &self.elements[k]).collect()
    }

    pub fn length_histogram(&self) -> Vec<usize> {
        let top = self.lengths.iter().copied().max().unwrap_or(0);
        let mut h = vec![0; top + 1];
        for &l in &self.lengths {
            h[l] += 1;
        }
        h
    }

    /// `{u : u ≤ elements[w]}` as a bitset over this set's indices.
    pub fn down_sets(&self, aff: &AffineWeylGroup) -> Vec<FixedBitSet> {
        let n = self.len();
        par::map_range(n, |w| {
            let mut row = FixedBitSet::with_capacity(n);
            for u in aff.lower_interval(&self.elements[w]) {
                row.insert(self.index[&u]);
            }
            row
        })
    }

    /// Cover relations of the restricted Bruhat order.
    pub fn hasse_export(&self, aff: &AffineWeylGroup) -> Hasse {
        let nodes = self.elements.iter().map(|x| aff.format(x)).collect();
        Hasse::from_graded(nodes, &self.lengths, |u, w| {
            aff.bruhat_leq_same_component(
                &self.elements[u],
                &self.elements[w],
                self.lengths[u],
                self.lengths[w],
            )
        })
    }

    /// Partitions `Adm(μ)` into classes `W_Y x W_Y ∩ Adm(μ)`.
    pub fn parahoric_project(&self, aff: &AffineWeylGroup, y: NodeSet) -> ParahoricProjection {
        let keys: Vec<AffineElement> =
            par::map(&self.elements, |x| double_coset_max(aff, x, y));
        let mut groups: BTreeMap<(usize, AffineElement), Vec<usize>> = BTreeMap::new();
        for (k, key) in keys.into_iter().enumerate() {
            groups.entry((aff.length(&key), key)).or_default().push(k);
        }
        let reps: Vec<(usize, AffineElement)> = groups.keys().cloned().collect();
        let classes: Vec<ParahoricClass> = groups
            .into_iter()
            .map(|((len, rep), members)| {
                let top_len = members.iter().map(|&k| self.lengths[k]).max().unwrap();
                ParahoricClass {
                    representative: aff.format(&rep),
                    length: len,
                    representative_admissible: self.contains(&rep),
                    size: members.len(),
                    top: members
                        .iter()
                        .filter(|&&k| self.lengths[k] == top_len)
                        .map(|&k| aff.format(&self.elements[k]))
                        .collect(),
                }
            })
            .collect();
        let maxima = (0..reps.len())
            .filter(|&a| {
                !(0..reps.len()).any(|b| {
                    reps[b].0 > reps[a].0
                        && aff.bruhat_leq_same_component(&reps[a].1, &reps[b].1, reps[a].0, reps[b].0)
                })
            })
            .collect();
        ParahoricProjection {
            y: y.to_one_based(),
            classes,
            maxima,
        }
    }

    pub fn report(&self, aff: &AffineWeylGroup, parahoric: Option<NodeSet>) -> AdmReport {
        let d = aff.datum();
        AdmReport {
            cartan_type: d.cartan_type().to_string(),
            lattice: d.lattice().to_string(),
            mu: self.mu.0.to_vec(),
            size: self.len(),
            two_rho: d.two_rho_pairing(&self.mu) as i64,
            maxima: self.maxima().into_iter().map(|x| aff.format(x)).collect(),
            length_histogram: self.length_histogram(),
            classes: parahoric.map(|y| self.parahoric_project(aff, y)),
        }
    }
}

/// Maximal element of `W_Y x W_Y`, by ascending on both sides.
pub fn double_coset_max(aff: &AffineWeylGroup, x: &AffineElement, y: NodeSet) -> AffineElement {
    let mut cur = x.clone();
    let mut len = aff.length(&cur);
    loop {
        let mut moved = false;
        for j in y.iter() {
            let left = aff.left_mul_simple(j + 1, &cur);
            let l = aff.length(&left);
            if l > len {
                cur = left;
                len = l;
                moved = true;
            }
            let right = aff.right_mul_simple(&cur, j + 1);
            let l = aff.length(&right);
            if l > len {
                cur = right;
                len = l;
                moved = true;
            }
        }
        if !moved {
            return cur;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootDatum;

    fn aff(ty: &str) -> AffineWeylGroup {
        AffineWeylGroup::from_datum(&RootDatum::adjoint(ty).unwrap()).unwrap()
    }

    fn minuscule(g: &AffineWeylGroup, i: usize) -> Coweight {
        g.datum().parse_coweight(&format!("minuscule:{i}")).unwrap()
    }

    #[test]
    fn trivial_mu() {
        let g = aff("A2");
        let adm = AdmissibleSet::compute(&g, &Coweight::zero(2)).unwrap();
        assert_eq!(adm.len(), 1);
        assert_eq!(adm.maxima(), vec![&g.identity()]);
        let h = adm.hasse_export(&g);
        assert_eq!((h.nodes.len(), h.edges.len()), (1, 0));
    }

    #[test]
    fn a1_example() {
        let g = aff("A1");
        let adm = AdmissibleSet::compute(&g, &minuscule(&g, 1)).unwrap();
        assert_eq!(adm.len(), 3);
        let plus = g.translation(&Coweight::from(&[1][..]));
        let minus = g.translation(&Coweight::from(&[-1][..]));
        assert!(adm.contains(&plus) && adm.contains(&minus));
        let h = adm.hasse_export(&g);
        assert_eq!(h.edges.len(), 2);
        assert_eq!(h.edges.iter().filter(|e| e.0 == 0).count(), 2);
        assert_eq!(adm.length_histogram(), vec![1, 2]);
    }

    #[test]
    fn type_a_sizes() {
        for n in 2..=6 {
            let g = aff(&format!("A{}", n - 1));
            let adm = AdmissibleSet::compute(&g, &minuscule(&g, 1)).unwrap();
            assert_eq!(adm.len(), (1 << n) - 1);
        }
    }

    #[test]
    fn maxima_counts() {
        let g = aff("A2");
        assert_eq!(AdmissibleSet::compute(&g, &minuscule(&g, 1)).unwrap().maxima().len(), 3);
        let g = aff("C2");
        let adm = AdmissibleSet::compute(&g, &minuscule(&g, 2)).unwrap();
        assert_eq!(adm.maxima().len(), 4);
        let mut a: Vec<_> = adm.maxima();
        let mut b = adm.bruhat_maxima(&g);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn downward_closed_and_one_component() {
        let g = aff("B2");
        let adm = AdmissibleSet::compute(&g, &Coweight::from(&[1, 1][..])).unwrap();
        let class = g.omega_component(&adm.elements()[0]);
        for x in adm.elements() {
            assert_eq!(g.omega_component(x), class);
            for s in g.left_descents(x) {
                assert!(adm.contains(&g.left_mul_simple(s, x)));
            }
        }
        let top = g.datum().two_rho_pairing(adm.mu()) as usize;
        for (k, x) in adm.elements().iter().enumerate() {
            assert_eq!(adm.length_at(k) == top, adm.maxima().contains(&x));
        }
    }

    #[test]
    fn parahoric_classes() {
        let g = aff("A1");
        let adm = AdmissibleSet::compute(&g, &minuscule(&g, 1)).unwrap();
        let p = adm.parahoric_project(&g, NodeSet::full(1));
        assert_eq!(p.classes.len(), 1);
        assert_eq!(p.classes[0].size, 3);
        let p = adm.parahoric_project(&g, NodeSet::EMPTY);
        assert_eq!(p.classes.len(), 3);
        assert!(p.classes.iter().all(|c| c.size == 1 && c.representative_admissible));
        assert_eq!(p.maxima.len(), 2);
    }

    #[test]
    fn parahoric_matches_double_coset_scan() {
        let g = aff("A2");
        let adm = AdmissibleSet::compute(&g, &minuscule(&g, 1)).unwrap();
        let y = NodeSet::from_indices([0]);
        let p = adm.parahoric_project(&g, y);
        // brute force: close each element under two-sided multiplication by W_Y
        let wy: Vec<AffineElement> = g
            .finite()
            .parabolic_subgroup(y)
            .into_iter()
            .map(|w| g.from_finite(w))
            .collect();
        let mut seen: HashSet<AffineElement> = HashSet::new();
        let mut classes = 0;
        for x in adm.elements() {
            if seen.contains(x) {
                continue;
            }
            classes += 1;
            for a in &wy {
                for b in &wy {
                    seen.insert(g.mul(&g.mul(a, x), b));
                }
            }
        }
        assert_eq!(p.classes.len(), classes);
        assert_eq!(p.classes.iter().map(|c| c.size).sum::<usize>(), adm.len());
    }

    #[test]
    fn rejects_non_dominant() {
        let g = aff("A2");
        assert!(matches!(
            AdmissibleSet::compute(&g, &Coweight::from(&[1, -1][..])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            AdmissibleSet::compute_with_budget(&g, &Coweight::from(&[3, 3][..]), 10),
            Err(Error::Resource(_))
        ));
    }
}
