//! `B×B`-orbits of the wonderful compactification, labelled `[J, x, y]` with
//! `x ∈ W^J`, `y ∈ W_0`, and the He–Lam map `(x, y) ↦ x t_μ y⁻¹` into the
//! extended affine Weyl group.
//!
//! Closures are encoded as label sets only. Inside a fixed `J` the closure
//! order is `(x', y') ⪯_J (x, y)` iff `xu ≤ x'` and `y' ≤ yu` for some
//! `u ∈ W_J`; every such test is an exhaustive scan over `W_J`.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use serde_json::json;

use crate::admissible::AdmissibleSet;
use crate::affine_weyl::{AffineElement, AffineWeylGroup};
use crate::poset::Hasse;
use crate::report::{Instance, Report, Status};
use crate::root_system::Coweight;
use crate::weyl::{FiniteWeylGroup, WeylElement, BRUHAT_CACHE_LIMIT};
use crate::{par, Error, NodeSet, Result};

/// `[J, x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrbitLabel {
    pub j: NodeSet,
    pub x: WeylElement,
    pub y: WeylElement,
}

/// A set of pairs `(x, y) ∈ W^J × W_0`, with a tag naming how it was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSet {
    pub j: NodeSet,
    pub provenance: String,
    members: Vec<(WeylElement, WeylElement)>,
}

impl SliceSet {
    fn new(j: NodeSet, provenance: &str, mut members: Vec<(WeylElement, WeylElement)>) -> Self {
        members.sort();
        members.dedup();
        SliceSet {
            j,
            provenance: provenance.to_string(),
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[(WeylElement, WeylElement)] {
        &self.members
    }

    pub fn contains(&self, x: WeylElement, y: WeylElement) -> bool {
        self.members.binary_search(&(x, y)).is_ok()
    }

    /// Same members, ignoring provenance.
    pub fn same_members(&self, other: &SliceSet) -> bool {
        self.j == other.j && self.members == other.members
    }
}

/// Support of the special fiber at parahoric level `Y`, with the check of
/// its Weyl-point underapproximation.
#[derive(Clone, Debug)]
pub struct FiberSupport {
    pub support: SliceSet,
    pub report: Report,
}

/// Subset of `W^J × W_0` as one bitset over `W_0` per element of `W^J`.
type PairSet = Vec<FixedBitSet>;

pub struct Wonderful {
    aff: Arc<AffineWeylGroup>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    /// `W_J` for every `J`, indexed by the bitmask.
    parabolic: Vec<Vec<WeylElement>>,
}

impl Wonderful {
    pub fn new(aff: Arc<AffineWeylGroup>) -> Result<Self> {
        let fin = aff.finite();
        let n = fin.order();
        if n > BRUHAT_CACHE_LIMIT {
            return Err(Error::Resource(format!(
                "orbit posets for {} need |W_0| ≤ {BRUHAT_CACHE_LIMIT}, got {n}",
                fin.datum().cartan_type()
            )));
        }
        let down: Vec<FixedBitSet> = fin.elements().map(|w| fin.lower_interval(w)).collect();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (w, row) in down.iter().enumerate() {
            for u in row.ones() {
                up[u].insert(w);
            }
        }
        let parabolic = NodeSet::all_subsets(fin.rank())
            .map(|j| fin.parabolic_subgroup(j))
            .collect();
        Ok(Wonderful {
            aff,
            down,
            up,
            parabolic,
        })
    }

    pub fn from_affine(aff: AffineWeylGroup) -> Result<Self> {
        Self::new(Arc::new(aff))
    }

    pub fn affine(&self) -> &AffineWeylGroup {
        &self.aff
    }

    pub fn finite(&self) -> &FiniteWeylGroup {
        self.aff.finite()
    }

    fn leq(&self, u: WeylElement, w: WeylElement) -> bool {
        self.down[w.idx()].contains(u.idx())
    }

    fn w_j(&self, j: NodeSet) -> &[WeylElement] {
        &self.parabolic[j.bits() as usize]
    }

    fn full(&self) -> NodeSet {
        NodeSet::full(self.finite().rank())
    }

    fn instance(&self) -> Instance {
        Instance::new(self.aff.datum())
    }

    /// `[J, x, y]`, checking `x ∈ W^J`.
    pub fn label(&self, j: NodeSet, x: WeylElement, y: WeylElement) -> Result<OrbitLabel> {
        if !self.finite().is_min_right_coset_rep(x, j) {
            return Err(Error::Domain(format!(
                "{} is not minimal in its W_J-coset for J = {j}",
                self.finite().format(x)
            )));
        }
        Ok(OrbitLabel { j, x, y })
    }

    pub fn format_label(&self, l: &OrbitLabel) -> String {
        let f = self.finite();
        format!("[{},{},{}]", l.j, f.format(l.x), f.format(l.y))
    }

    fn format_pair(&self, x: WeylElement, y: WeylElement) -> String {
        let f = self.finite();
        format!("({},{})", f.format(x), f.format(y))
    }

    /// Whether orbit `a` lies in the closure of orbit `b`.
    pub fn closure_leq(&self, a: &OrbitLabel, b: &OrbitLabel) -> bool {
        if !a.j.is_subset(b.j) {
            return false;
        }
        let f = self.finite();
        self.w_j(b.j).iter().any(|&u| {
            self.leq(f.mul(b.x, u), a.x) && self.leq(a.y, f.mul(b.y, u))
        })
    }

    /// `q ⪯_J p` for `p = (x, y)`, `q = (x', y')`.
    pub fn preceq(
        &self,
        j: NodeSet,
        p: (WeylElement, WeylElement),
        q: (WeylElement, WeylElement),
    ) -> Result<bool> {
        for x in [p.0, q.0] {
            self.label(j, x, WeylElement::IDENTITY)?;
        }
        Ok(self.preceq_unchecked(j, p, q))
    }

    fn preceq_unchecked(
        &self,
        j: NodeSet,
        (x, y): (WeylElement, WeylElement),
        (x2, y2): (WeylElement, WeylElement),
    ) -> bool {
        let f = self.finite();
        self.w_j(j)
            .iter()
            .any(|&u| self.leq(f.mul(x, u), x2) && self.leq(y2, f.mul(y, u)))
    }

    /// `{q : q ⪯_J p}` over the universe `reps × W_0`.
    fn down_set(&self, j: NodeSet, reps: &[WeylElement], (x, y): (WeylElement, WeylElement)) -> PairSet {
        let f = self.finite();
        let mut rows = vec![FixedBitSet::with_capacity(f.order()); reps.len()];
        for &u in self.w_j(j) {
            let above = &self.up[f.mul(x, u).idx()];
            let below = &self.down[f.mul(y, u).idx()];
            for (k, &x2) in reps.iter().enumerate() {
                if above.contains(x2.idx()) {
                    rows[k].union_with(below);
                }
            }
        }
        rows
    }

    fn rep_index(&self, reps: &[WeylElement], x: WeylElement) -> usize {
        reps.binary_search(&x).expect("x lies in W^J")
    }

    /// `closure(B) ∩ Z'_J`: pairs with `y ≤ x`.
    pub fn b_closure_slice(&self, j: NodeSet) -> SliceSet {
        let f = self.finite();
        let members = f
            .minimal_reps(j)
            .into_iter()
            .flat_map(|x| self.down[x.idx()].ones().map(move |y| (x, WeylElement(y as u32))))
            .collect();
        SliceSet::new(j, "y <= x", members)
    }

    /// The same slice from the closure criterion applied to `[S, 1, 1]`.
    pub fn b_closure_slice_via_closure(&self, j: NodeSet) -> SliceSet {
        let top = OrbitLabel {
            j: self.full(),
            x: WeylElement::IDENTITY,
            y: WeylElement::IDENTITY,
        };
        self.slice_below(j, &top, "closure of [S,1,1]")
    }

    /// `closure(P_Y) ∩ Z'_J`: pairs with `min(W_Y y) ≤ x`.
    pub fn p_closure_slice(&self, j: NodeSet, y_set: NodeSet) -> SliceSet {
        let f = self.finite();
        let reps = f.minimal_reps(j);
        let members = reps
            .iter()
            .flat_map(|&x| {
                f.elements()
                    .filter(move |&y| self.leq(f.min_coset_rep(y_set, y), x))
                    .map(move |y| (x, y))
            })
            .collect();
        SliceSet::new(j, "min(W_Y y) <= x", members)
    }

    /// The same slice from the closure criterion applied to `[S, 1, w_Y]`.
    pub fn p_closure_slice_via_closure(&self, j: NodeSet, y_set: NodeSet) -> SliceSet {
        let top = OrbitLabel {
            j: self.full(),
            x: WeylElement::IDENTITY,
            y: self.finite().longest_element(y_set),
        };
        self.slice_below(j, &top, "closure of [S,1,w_Y]")
    }

    fn slice_below(&self, j: NodeSet, top: &OrbitLabel, provenance: &str) -> SliceSet {
        let f = self.finite();
        let reps = f.minimal_reps(j);
        let found: Vec<Vec<(WeylElement, WeylElement)>> = par::map(&reps, |&x| {
            f.elements()
                .filter(|&y| self.closure_leq(&OrbitLabel { j, x, y }, top))
                .map(|y| (x, y))
                .collect()
        });
        SliceSet::new(j, provenance, found.into_iter().flatten().collect())
    }

    fn require_minuscule(&self, mu: &Coweight) -> Result<NodeSet> {
        let d = self.aff.datum();
        if mu.0.len() != d.rank() {
            return Err(Error::Input(format!("coweight {mu} has the wrong rank")));
        }
        if !d.is_minuscule(mu) {
            return Err(Error::Domain(format!(
                "{mu} is not a minuscule coweight of {}",
                d.cartan_type()
            )));
        }
        d.type_map(mu)
    }

    /// `Q_μ = {(x, y) ∈ W^{I(μ)} × W_0 : y ≤ x}`.
    pub fn q_mu(&self, mu: &Coweight) -> Result<SliceSet> {
        let j = self.require_minuscule(mu)?;
        let mut s = self.b_closure_slice(j);
        s.provenance = "Q_mu".into();
        Ok(s)
    }

    /// `x t_μ y⁻¹ = t_{x(μ)} · x y⁻¹`.
    pub fn helam_map(&self, mu: &Coweight, x: WeylElement, y: WeylElement) -> AffineElement {
        let f = self.finite();
        let omega = self.aff.datum().to_fundamental(mu);
        AffineElement::new(f.act(x, &omega), f.mul(x, f.inverse(y)))
    }

    /// Checks that the He–Lam map is a bijection onto `W_0 t_μ W_0` and that
    /// `q ⪯ p ⟺ φ(q) ≤ φ(p)` for all ordered pairs. On failure the reversed
    /// orientation `q ⪯ p ⟺ φ(p) ≤ φ(q)` is tested as well.
    pub fn verify_helam_poset_iso(&self, mu: &Coweight) -> Result<Report> {
        let j = self.require_minuscule(mu)?;
        let f = self.finite();
        let aff = &*self.aff;
        let mut report = Report::new("helam_iso", self.instance().mu(&mu.0).j(j));
        let reps = f.minimal_reps(j);
        let w = f.order();
        let universe: Vec<(WeylElement, WeylElement)> = reps
            .iter()
            .flat_map(|&x| f.elements().map(move |y| (x, y)))
            .collect();
        let images: Vec<AffineElement> = par::map(&universe, |&(x, y)| self.helam_map(mu, x, y));
        let lengths: Vec<usize> = par::map(&images, |x| aff.length(x));
        report.size("W^J", reps.len());
        report.size("W_0", w);
        report.size("elements", universe.len());
        report.size("ordered_pairs", universe.len() * universe.len());

        let distinct: HashSet<&AffineElement> = images.iter().collect();
        let coset = aff.translation_double_coset(mu);
        report.size("double_coset", coset.len());
        if distinct.len() != images.len() {
            let mut seen = HashSet::new();
            let k = images.iter().position(|x| !seen.insert(x)).unwrap();
            report.fail(json!({
                "reason": "not injective",
                "image": aff.format(&images[k]),
            }));
            return Ok(report);
        }
        if let Some(missing) = coset.iter().find(|x| !distinct.contains(x)) {
            report.fail(json!({
                "reason": "image misses the double coset",
                "element": aff.format(missing),
            }));
            return Ok(report);
        }

        let n = universe.len();
        // For each p, the first q where ⪯ and ≤ disagree (forward orientation).
        let first_bad = par::find_first(n, |pi| {
            let down = self.down_set(j, &reps, universe[pi]);
            (0..n).find_map(|qi| {
                let (x2, y2) = universe[qi];
                let pre = down[qi / w].contains(y2.idx());
                debug_assert_eq!(x2, reps[qi / w]);
                let br = aff.bruhat_leq_same_component(&images[qi], &images[pi], lengths[qi], lengths[pi]);
                (pre != br).then_some((pi, qi, pre, br))
            })
        });
        match first_bad {
            None => {
                report.detail("orientation", "q ⪯ p iff φ(q) ≤ φ(p)");
            }
            Some((pi, qi, pre, br)) => {
                let (p, q) = (universe[pi], universe[qi]);
                report.fail(json!({
                    "p": self.format_pair(p.0, p.1),
                    "q": self.format_pair(q.0, q.1),
                    "phi_p": aff.format(&images[pi]),
                    "phi_q": aff.format(&images[qi]),
                    "q_preceq_p": pre,
                    "phi_q_leq_phi_p": br,
                }));
                let reversed = par::find_first(n, |pi| {
                    let down = self.down_set(j, &reps, universe[pi]);
                    (0..n).find(|&qi| {
                        let pre = down[qi / w].contains(universe[qi].1.idx());
                        let br = aff.bruhat_leq_same_component(
                            &images[pi],
                            &images[qi],
                            lengths[pi],
                            lengths[qi],
                        );
                        pre != br
                    })
                })
                .is_none();
                report.detail("reversed_orientation_holds", reversed);
            }
        }
        Ok(report)
    }

    /// Checks `φ(Q_μ) = Adm(μ)` as sets.
    pub fn verify_adm_bijection(&self, mu: &Coweight) -> Result<Report> {
        let q = self.q_mu(mu)?;
        let aff = &*self.aff;
        let adm = AdmissibleSet::compute(aff, mu)?;
        let mut report = Report::new("adm_bijection", self.instance().mu(&mu.0).j(q.j));
        let images: Vec<AffineElement> = q
            .members()
            .iter()
            .map(|&(x, y)| self.helam_map(mu, x, y))
            .collect();
        let image_set: HashSet<&AffineElement> = images.iter().collect();
        report.size("Q_mu", q.len());
        report.size("image", image_set.len());
        report.size("Adm", adm.len());
        if let Some(k) = images.iter().position(|x| !adm.contains(x)) {
            let (x, y) = q.members()[k];
            report.fail(json!({
                "reason": "image outside Adm(mu)",
                "pair": self.format_pair(x, y),
                "image": aff.format(&images[k]),
            }));
        } else if let Some(x) = adm.elements().iter().find(|x| !image_set.contains(x)) {
            report.fail(json!({
                "reason": "Adm(mu) element not hit",
                "element": aff.format(x),
            }));
        } else if image_set.len() != q.len() {
            report.fail(json!({ "reason": "not injective on Q_mu" }));
        }
        Ok(report)
    }

    /// The label of `(c, d)·h'_J`: `[J, c^J, d (c_J)⁻¹]` where `c = c^J c_J`.
    pub fn weyl_point_normalize(&self, c: WeylElement, d: WeylElement, j: NodeSet) -> OrbitLabel {
        let f = self.finite();
        let (min, part) = f.parabolic_decompose(c, j);
        OrbitLabel {
            j,
            x: min,
            y: f.mul(d, f.inverse(part)),
        }
    }

    /// Union of the `⪯_J`-down-sets of the given labels.
    fn downward_closure(&self, j: NodeSet, reps: &[WeylElement], points: &[(WeylElement, WeylElement)]) -> PairSet {
        let partial: Vec<PairSet> = par::map(points, |&p| self.down_set(j, reps, p));
        let mut acc = vec![FixedBitSet::with_capacity(self.finite().order()); reps.len()];
        for rows in partial {
            for (a, r) in acc.iter_mut().zip(&rows) {
                a.union_with(r);
            }
        }
        acc
    }

    fn pairs_of(&self, reps: &[WeylElement], set: &PairSet) -> Vec<(WeylElement, WeylElement)> {
        reps.iter()
            .zip(set)
            .flat_map(|(&x, row)| row.ones().map(move |y| (x, WeylElement(y as u32))))
            .collect()
    }

    /// Containment plus coverage of the Weyl-point approximation against
    /// `target`; fills `report`.
    fn coverage_check(
        &self,
        report: &mut Report,
        j: NodeSet,
        reps: &[WeylElement],
        points: Vec<(WeylElement, WeylElement)>,
        target: &SliceSet,
    ) {
        let mut points = points;
        points.sort();
        points.dedup();
        let closure = self.downward_closure(j, reps, &points);
        let covered = self.pairs_of(reps, &closure);
        report.size("weyl_points", points.len());
        report.size("covered", covered.len());
        report.size("slice", target.len());
        if let Some(&(x, y)) = covered.iter().find(|&&(x, y)| !target.contains(x, y)) {
            report.fail(json!({
                "reason": "label outside the closure slice",
                "label": self.format_label(&OrbitLabel { j, x, y }),
            }));
        }
        let coverage = if target.is_empty() {
            1.0
        } else {
            covered.len() as f64 / target.len() as f64
        };
        report.coverage = Some(coverage);
        if report.status == Status::Pass && covered.len() < target.len() {
            report.status = Status::Inconclusive;
        }
    }

    /// Compares `⋃_{w ∈ W^J} ⪯_J`-closures of the Weyl points of
    /// `(P_Y w, P_Y w)·h'_J` with `closure(P_Y) ∩ Z'_J`.
    pub fn corollary_coverage_report(&self, j: NodeSet, y_set: NodeSet) -> Report {
        let f = self.finite();
        let reps = f.minimal_reps(j);
        let wy = self.w_j(y_set);
        let points: Vec<(WeylElement, WeylElement)> = reps
            .iter()
            .flat_map(|&w| {
                wy.iter().flat_map(move |&a| {
                    wy.iter().map(move |&b| {
                        let l = self.weyl_point_normalize(f.mul(a, w), f.mul(b, w), j);
                        (l.x, l.y)
                    })
                })
            })
            .collect();
        let target = self.p_closure_slice(j, y_set);
        let mut report = Report::new("corollary_coverage", self.instance().j(j).y(y_set));
        self.coverage_check(&mut report, j, &reps, points, &target);
        report
    }

    /// `closure(P_Y) ∩ Z'_{I(μ)}`, with the Weyl-point approximation built
    /// from `(P_Y x, P_Y y)·h'_{I(μ)}`, `(x, y) ∈ Q_μ`, checked against it.
    pub fn special_fiber_support(&self, mu: &Coweight, y_set: NodeSet) -> Result<FiberSupport> {
        let q = self.q_mu(mu)?;
        let j = q.j;
        let f = self.finite();
        let reps = f.minimal_reps(j);
        let wy = self.w_j(y_set);
        let points: Vec<(WeylElement, WeylElement)> = q
            .members()
            .iter()
            .flat_map(|&(x, y)| {
                wy.iter().flat_map(move |&a| {
                    wy.iter().map(move |&b| {
                        let l = self.weyl_point_normalize(f.mul(a, x), f.mul(b, y), j);
                        (l.x, l.y)
                    })
                })
            })
            .collect();
        let mut support = self.p_closure_slice(j, y_set);
        support.provenance = "special fiber support".into();
        let mut report = Report::new("fiber_support", self.instance().mu(&mu.0).j(j).y(y_set));
        self.coverage_check(&mut report, j, &reps, points, &support);
        Ok(FiberSupport { support, report })
    }

    /// `⪯_J`-down-sets of the slice members, restricted to the slice.
    fn slice_down_sets(&self, slice: &SliceSet) -> Vec<FixedBitSet> {
        let reps = self.finite().minimal_reps(slice.j);
        let m = slice.members();
        par::map(m, |&p| {
            let down = self.down_set(slice.j, &reps, p);
            let mut row = FixedBitSet::with_capacity(m.len());
            for (k, &(x, y)) in m.iter().enumerate() {
                if down[self.rep_index(&reps, x)].contains(y.idx()) {
                    row.insert(k);
                }
            }
            row
        })
    }

    /// `⪯_J`-maximal members of a slice.
    pub fn preceq_maxima(&self, slice: &SliceSet) -> Vec<(WeylElement, WeylElement)> {
        let down = self.slice_down_sets(slice);
        let m = slice.members();
        (0..m.len())
            .filter(|&a| !(0..m.len()).any(|b| b != a && down[b].contains(a)))
            .map(|a| m[a])
            .collect()
    }

    /// Hasse diagram of `⪯_J` on a slice.
    pub fn slice_hasse(&self, slice: &SliceSet) -> Hasse {
        let nodes = slice
            .members()
            .iter()
            .map(|&(x, y)| self.format_label(&OrbitLabel { j: slice.j, x, y }))
            .collect();
        Hasse::from_down_sets(nodes, &self.slice_down_sets(slice))
    }

    /// Both slice formulas against their closure-criterion counterparts, for
    /// every `J` (or the given one) and every `Y` (or the given one).
    pub fn verify_slice_formulas(&self, j: Option<NodeSet>, y: Option<NodeSet>) -> Report {
        let rank = self.finite().rank();
        let js: Vec<NodeSet> = j.map_or_else(|| NodeSet::all_subsets(rank).collect(), |j| vec![j]);
        let ys: Vec<NodeSet> = y.map_or_else(|| NodeSet::all_subsets(rank).collect(), |y| vec![y]);
        let mut instance = self.instance();
        if let Some(j) = j {
            instance = instance.j(j);
        }
        if let Some(y) = y {
            instance = instance.y(y);
        }
        let mut report = Report::new("slice_formulas", instance);
        let mut b_checked = 0;
        let mut p_checked = 0;
        for &j in &js {
            let direct = self.b_closure_slice(j);
            let raw = self.b_closure_slice_via_closure(j);
            b_checked += 1;
            if !direct.same_members(&raw) {
                report.fail(json!({
                    "slice": "B",
                    "J": j.to_one_based(),
                    "sizes": [direct.len(), raw.len()],
                }));
            }
            for &y_set in &ys {
                let direct = self.p_closure_slice(j, y_set);
                let raw = self.p_closure_slice_via_closure(j, y_set);
                p_checked += 1;
                if !direct.same_members(&raw) {
                    report.fail(json!({
                        "slice": "P_Y",
                        "J": j.to_one_based(),
                        "Y": y_set.to_one_based(),
                        "sizes": [direct.len(), raw.len()],
                    }));
                }
            }
        }
        report.size("b_slices", b_checked);
        report.size("p_slices", p_checked);
        report
    }

    /// Root-count decomposition check for one dominant coweight.
    pub fn verify_fiber_partition(&self, lambda: &Coweight) -> Result<Report> {
        let p = self.aff.affine_root_partition(lambda)?;
        let mut report = Report::new("fiber_partition", self.instance().mu(&lambda.0));
        report.size("levi", p.levi);
        report.size("negative", p.negative);
        report.size("positive", p.positive);
        report.size("roots", p.total_roots);
        report.detail("coset_count", p.coset_count);
        report.detail("two_rho", p.two_rho);
        report.detail("minus_longest", p.minus_longest);
        if p.levi + p.negative + p.positive != p.total_roots {
            report.fail(json!({ "reason": "(a)+(b)+(c) != |roots|" }));
        } else if p.negative != p.positive {
            report.fail(json!({ "reason": "(b) != (c)" }));
        } else if p.coset_count != p.two_rho {
            report.fail(json!({ "reason": "coset count != <lambda, 2rho>" }));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootDatum;

    fn wonderful(ty: &str) -> Wonderful {
        let aff = AffineWeylGroup::from_datum(&RootDatum::adjoint(ty).unwrap()).unwrap();
        Wonderful::from_affine(aff).unwrap()
    }

    fn mu(w: &Wonderful, i: usize) -> Coweight {
        w.affine().datum().parse_coweight(&format!("minuscule:{i}")).unwrap()
    }

    fn ns(ix: &[usize]) -> NodeSet {
        NodeSet::from_indices(ix.iter().map(|i| i - 1))
    }

    #[test]
    fn closure_examples() {
        let w = wonderful("A2");
        let f = w.finite();
        let all: Vec<WeylElement> = f.elements().collect();
        for &x in &all {
            for &y in &all {
                let a = OrbitLabel { j: NodeSet::EMPTY, x, y };
                assert!(w.closure_leq(&a, &a));
                for &x2 in &all {
                    for &y2 in &all {
                        let b = OrbitLabel { j: NodeSet::EMPTY, x: x2, y: y2 };
                        assert_eq!(w.closure_leq(&b, &a), f.bruhat_leq(x, x2) && f.bruhat_leq(y2, y));
                    }
                }
            }
        }
        let big = OrbitLabel { j: ns(&[1]), x: WeylElement::IDENTITY, y: WeylElement::IDENTITY };
        let small = OrbitLabel { j: ns(&[2]), x: WeylElement::IDENTITY, y: WeylElement::IDENTITY };
        assert!(!w.closure_leq(&small, &big));
    }

    #[test]
    fn preceq_rejects_non_minimal() {
        let w = wonderful("A2");
        let s2 = w.finite().simple_reflection(1);
        let e = WeylElement::IDENTITY;
        assert!(matches!(w.preceq(ns(&[2]), (s2, e), (e, e)), Err(Error::Domain(_))));
        assert!(w.preceq(ns(&[2]), (e, e), (e, e)).unwrap());
    }

    #[test]
    fn preceq_table_matches_brute_force() {
        let w = wonderful("A2");
        let f = w.finite();
        let j = ns(&[2]);
        let reps = f.minimal_reps(j);
        let wj = f.parabolic_subgroup(j);
        assert_eq!(reps.len(), 3);
        for &x in &reps {
            for y in f.elements() {
                let down = w.down_set(j, &reps, (x, y));
                for (k, &x2) in reps.iter().enumerate() {
                    for y2 in f.elements() {
                        let brute = wj.iter().any(|&u| {
                            f.bruhat_leq_recursive(f.mul(x, u), x2)
                                && f.bruhat_leq_recursive(y2, f.mul(y, u))
                        });
                        assert_eq!(down[k].contains(y2.idx()), brute);
                        assert_eq!(w.preceq(j, (x, y), (x2, y2)).unwrap(), brute);
                    }
                }
            }
        }
    }

    #[test]
    fn slices() {
        let w = wonderful("A2");
        let j = ns(&[2]);
        let b = w.b_closure_slice(j);
        assert!(b.same_members(&w.b_closure_slice_via_closure(j)));
        assert!(b.contains(WeylElement::IDENTITY, WeylElement::IDENTITY));
        let p_empty = w.p_closure_slice(j, NodeSet::EMPTY);
        assert!(p_empty.same_members(&b));
        let p_full = w.p_closure_slice(j, NodeSet::full(2));
        assert_eq!(p_full.len(), 3 * 6);
        let p1 = w.p_closure_slice(j, ns(&[1]));
        assert!(p1.same_members(&w.p_closure_slice_via_closure(j, ns(&[1]))));
        assert!(w.verify_slice_formulas(None, None).passed());
    }

    #[test]
    fn q_mu_and_helam() {
        let w = wonderful("A1");
        let m = mu(&w, 1);
        let q = w.q_mu(&m).unwrap();
        assert_eq!(q.len(), 3);
        let e = WeylElement::IDENTITY;
        assert_eq!(w.helam_map(&m, e, e), w.affine().translation(&m));
        let s = w.finite().simple_reflection(0);
        let conj = w.helam_map(&m, s, s);
        assert_eq!(conj.finite, e);
        assert!(w.q_mu(&Coweight::from(&[2][..])).is_err());
    }

    #[test]
    fn helam_iso_small() {
        for (ty, i) in [("A1", 1), ("A2", 1), ("A2", 2), ("B2", 1), ("C2", 2), ("A3", 2)] {
            let w = wonderful(ty);
            let r = w.verify_helam_poset_iso(&mu(&w, i)).unwrap();
            assert!(r.passed(), "{ty} {i}: {:?}", r.counterexample);
            let r = w.verify_adm_bijection(&mu(&w, i)).unwrap();
            assert!(r.passed(), "{ty} {i}: {:?}", r.counterexample);
        }
    }

    #[test]
    fn normalize() {
        let w = wonderful("A2");
        let f = w.finite();
        let j = ns(&[2]);
        let s2 = f.simple_reflection(1);
        let e = WeylElement::IDENTITY;
        let l = w.weyl_point_normalize(s2, e, j);
        assert_eq!((l.x, l.y), (e, s2));
        for c in f.elements() {
            for d in f.elements() {
                let l = w.weyl_point_normalize(c, d, j);
                assert!(f.is_min_right_coset_rep(l.x, j));
                assert_eq!(w.weyl_point_normalize(l.x, l.y, j), l);
            }
        }
    }

    #[test]
    fn coverage() {
        let w = wonderful("A2");
        let r = w.corollary_coverage_report(ns(&[2]), NodeSet::EMPTY);
        assert_eq!(r.status, Status::Pass);
        let r = w.corollary_coverage_report(ns(&[2]), NodeSet::full(2));
        assert_eq!(r.coverage, Some(1.0));
        let r = w.corollary_coverage_report(ns(&[2]), ns(&[1]));
        assert_ne!(r.status, Status::Fail);
    }

    #[test]
    fn fiber_support_at_iwahori_level() {
        let w = wonderful("A1");
        let m = mu(&w, 1);
        let s = w.special_fiber_support(&m, NodeSet::EMPTY).unwrap();
        assert_eq!(s.support.len(), 3);
        assert_eq!(s.report.status, Status::Pass);
        let w = wonderful("A2");
        let m = mu(&w, 1);
        let s = w.special_fiber_support(&m, NodeSet::EMPTY).unwrap();
        assert!(s.support.same_members(&w.q_mu(&m).unwrap()));
        let max = w.preceq_maxima(&s.support);
        assert_eq!(max.len(), 3);
        assert!(max.iter().all(|(x, y)| x == y));
    }

    #[test]
    fn hasse_of_slice() {
        let w = wonderful("A1");
        let q = w.q_mu(&mu(&w, 1)).unwrap();
        let h = w.slice_hasse(&q);
        assert_eq!(h.nodes.len(), 3);
        assert_eq!(h.edges.len(), 2);
    }
}
