//! Theorem-level checks. Each returns report records, one per compared value.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraMorphism, BasedAlgebra, Family};
use crate::error::{Error, Result};
use crate::homology::{coinvariants, composite_is_identity, tor, tor_complex, uct_prediction, BarChainMap};
use crate::induced::{check_quotient_tensor_iso, compare_induced, free_orbits_of_quotient_by_jm, induced_module};
use crate::linalg::{ChainComplex, HomologyGroup, SparseMatrix};
use crate::module::{BasedModule, ModuleMap};
use crate::resolution::check_resolution;
use crate::ring::{Params, Ring};
use crate::submodule::set_string;
use crate::summands::{decompose_b, summand_check, summand_instances};

/// One compared value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    #[serde(rename = "check-id")]
    pub check_id: String,
    pub family: String,
    pub n: usize,
    pub ring: String,
    pub delta: String,
    pub epsilon: String,
    #[serde(rename = "X")]
    pub set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub degree: Option<usize>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl ReportRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Family, size, ring and parameters of one verification run.
#[derive(Clone, Debug)]
pub struct Setting {
    pub family: Family,
    pub n: usize,
    pub ring: Ring,
    pub params: Params,
}

impl Setting {
    pub fn new(family: Family, n: usize, ring: Ring, params: Params) -> Setting {
        Setting { family, n, ring, params }
    }

    pub fn with_ints(family: Family, n: usize, ring: Ring, delta: i64, epsilon: i64) -> Setting {
        Setting::new(family, n, ring, Params::new(ring, delta, epsilon))
    }

    pub fn algebra(&self) -> Result<Arc<BasedAlgebra>> {
        BasedAlgebra::new(self.family, self.n, self.ring, self.params.clone())
    }

    fn of_family(&self, family: Family) -> Setting {
        Setting { family, ..self.clone() }
    }

    /// The theorems assume `ε` is invertible.
    pub fn require_unit_epsilon(&self) -> Result<()> {
        if self.params.epsilon_invertible(self.ring) {
            Ok(())
        } else {
            Err(Error::EpsilonNotUnit(self.ring.to_string()))
        }
    }

    fn record(&self, check: &str) -> ReportRecord {
        ReportRecord {
            check_id: check.to_string(),
            family: self.family.name().to_string(),
            n: self.n,
            ring: self.ring.to_string(),
            delta: self.params.delta.to_string(),
            epsilon: self.params.epsilon.to_string(),
            set: None,
            x: None,
            m: None,
            degree: None,
            expected: String::new(),
            computed: String::new(),
            pass: false,
        }
    }

    fn compare(&self, check: &str, degree: Option<usize>, expected: impl ToString, computed: impl ToString) -> ReportRecord {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        ReportRecord { degree, pass: expected == computed, expected, computed, ..self.record(check) }
    }

    fn flag(&self, check: &str, ok: bool, detail: impl ToString) -> ReportRecord {
        ReportRecord {
            expected: "true".into(),
            computed: ok.to_string(),
            pass: ok,
            ..self.record(check)
        }
        .with_detail(detail)
    }
}

impl ReportRecord {
    fn with_set(mut self, set: &[usize]) -> Self {
        self.set = Some(set_string(set));
        self
    }

    fn with_x(mut self, x: usize) -> Self {
        self.x = Some(x);
        self
    }

    fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    fn with_degree(mut self, k: usize) -> Self {
        self.degree = Some(k);
        self
    }

    /// Appends a note to `computed` without changing the verdict.
    fn with_detail(mut self, detail: impl ToString) -> Self {
        let d = detail.to_string();
        if !d.is_empty() {
            self.computed = format!("{} ({d})", self.computed);
            self.expected = format!("{} ({d})", self.expected);
        }
        self
    }
}

/// Whether every record passed.
pub fn all_pass(records: &[ReportRecord]) -> bool {
    records.iter().all(|r| r.pass)
}

/// `Tor^{RS_n}_k(t, t)` for `n ≤ 2` from a resolution written by hand: the
/// trivial group for `n ≤ 1`, and for the order-two group the periodic
/// resolution `… → R[C_2] →(1+σ) R[C_2] →(1−σ) R[C_2]`, which tensors down
/// to `R ←0− R ←2− R ←0− R ← …`.
pub fn symmetric_group_oracle(n: usize, ring: Ring, max_degree: usize) -> Result<Vec<HomologyGroup>> {
    if n > 2 {
        return Err(Error::Precondition("the hand-written oracle covers n ≤ 2".into()));
    }
    if n <= 1 {
        return Ok((0..=max_degree)
            .map(|k| if k == 0 { HomologyGroup::free(ring, 1) } else { HomologyGroup::zero(ring) })
            .collect());
    }
    let top = max_degree + 1;
    let mats = (1..=top)
        .map(|k| {
            let c = if k % 2 == 0 { ring.from_i64(2) } else { ring.zero() };
            SparseMatrix::from_triplets(ring, 1, 1, [(0, 0, c)].into_iter().filter(|(_, _, c)| !ring.is_zero(c)))
        })
        .collect::<Result<Vec<_>>>()?;
    let c = ChainComplex::from_matrices(ring, 0, vec![1; top + 1], mats)?;
    (0..=max_degree as i64).map(|k| c.homology_at(k)).collect()
}

fn tor_records(setting: &Setting, check: &str, groups: &[HomologyGroup], expected: &[HomologyGroup]) -> Vec<ReportRecord> {
    groups
        .iter()
        .zip(expected)
        .enumerate()
        .map(|(k, (g, e))| setting.compare(check, Some(k), e, g))
        .collect()
}

/// `Tor_0` agrees with the coinvariants computed from their presentation.
fn degree_zero_record(setting: &Setting, module: &BasedModule, groups: &[HomologyGroup]) -> Result<ReportRecord> {
    Ok(setting.compare("degree-zero", Some(0), coinvariants(module)?, &groups[0]))
}

/// `Tor(t, A/J_X)` vanishes in degrees `1..=max_degree` and is `t` in degree 0.
pub fn verify_vanishing(setting: &Setting, sets: &[Vec<usize>], max_degree: usize) -> Result<Vec<ReportRecord>> {
    setting.require_unit_epsilon()?;
    let a = setting.algebra()?;
    let per_set = crate::par::map(sets, |set| -> Result<Vec<ReportRecord>> {
        let module = BasedModule::quotient_by_j(&a, set)?;
        let groups = tor(&module, max_degree)?;
        let expected: Vec<HomologyGroup> = (0..=max_degree)
            .map(|k| if k == 0 { HomologyGroup::free(setting.ring, 1) } else { HomologyGroup::zero(setting.ring) })
            .collect();
        let mut out = tor_records(setting, "vanishing", &groups, &expected);
        out.push(degree_zero_record(setting, &module, &groups)?);
        out.extend(uct_records(setting, &groups, |a| BasedModule::quotient_by_j(a, set))?);
        Ok(out.into_iter().map(|r| r.with_set(set)).collect())
    });
    Ok(per_set.into_iter().collect::<Result<Vec<_>>>()?.concat())
}

/// `Tor^{RBr_n}(t, t)` against `Tor^{RS_n}(t, t)`, against the hand-written
/// oracle for `n ≤ 2`, and against the universal coefficient prediction from
/// `Z` to `F_p` for `p ∈ {2, 3, 5}` when the ring is `Z`.
pub fn verify_main_theorem(setting: &Setting, max_degree: usize) -> Result<Vec<ReportRecord>> {
    setting.require_unit_epsilon()?;
    let setting = &setting.of_family(Family::RookBrauer);
    let rbr = setting.algebra()?;
    let sym = setting.of_family(Family::SymGroupAlgebra).algebra()?;
    let trivial = BasedModule::trivial(&rbr);
    let (big, small) = crate::par::join(|| tor(&trivial, max_degree), || tor(&BasedModule::trivial(&sym), max_degree));
    let (big, small) = (big?, small?);
    let mut out = tor_records(setting, "main-theorem", &big, &small);
    out.push(degree_zero_record(setting, &trivial, &big)?);
    if setting.n <= 2 {
        let oracle = symmetric_group_oracle(setting.n, setting.ring, max_degree)?;
        out.extend(tor_records(setting, "group-oracle", &big, &oracle));
    }
    out.extend(uct_records(setting, &big, |a| Ok(BasedModule::trivial(a)))?);
    Ok(out)
}

/// Over `Z`: the same module over `F_p`, `p ∈ {2, 3, 5}`, has the dimensions
/// the universal coefficient theorem predicts from the integral groups.
fn uct_records(
    setting: &Setting,
    integral: &[HomologyGroup],
    module: impl Fn(&Arc<BasedAlgebra>) -> Result<BasedModule>,
) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    if setting.ring != Ring::Integers {
        return Ok(out);
    }
    let max_degree = integral.len() - 1;
    for p in [2u64, 3, 5] {
        let fp = Ring::prime_field(p)?;
        let params = Params { delta: fp.coerce(&setting.params.delta)?, epsilon: fp.coerce(&setting.params.epsilon)? };
        let reduced = Setting::new(setting.family, setting.n, fp, params);
        let groups = tor(&module(&reduced.algebra()?)?, max_degree)?;
        let predicted = uct_prediction(integral, p)?;
        for (k, (d, g)) in predicted.iter().zip(&groups).enumerate() {
            out.push(reduced.compare("universal-coefficients", Some(k), format!("F{p}^{d}"), format!("F{p}^{}", g.free_rank)));
        }
    }
    Ok(out)
}

/// `Tor^{M_n}(t, t)` is `t` in degree 0 and vanishes above.
pub fn verify_motzkin(setting: &Setting, max_degree: usize) -> Result<Vec<ReportRecord>> {
    setting.require_unit_epsilon()?;
    let setting = &setting.of_family(Family::Motzkin);
    let a = setting.algebra()?;
    let trivial = BasedModule::trivial(&a);
    let groups = tor(&trivial, max_degree)?;
    let expected: Vec<HomologyGroup> = (0..=max_degree)
        .map(|k| if k == 0 { HomologyGroup::free(setting.ring, 1) } else { HomologyGroup::zero(setting.ring) })
        .collect();
    let mut out = tor_records(setting, "motzkin", &groups, &expected);
    out.push(degree_zero_record(setting, &trivial, &groups)?);
    out.extend(uct_records(setting, &groups, |a| Ok(BasedModule::trivial(a)))?);
    Ok(out)
}

/// `π` and `ι` are algebra maps, `π ∘ ι = id` on the algebra, and over a
/// field `π_* ι_* = id` with `ι_*` an isomorphism in degrees `0..=max_degree`.
pub fn verify_morphisms(setting: &Setting, max_degree: usize) -> Result<Vec<ReportRecord>> {
    let setting = &setting.of_family(Family::RookBrauer);
    let rbr = setting.algebra()?;
    let sym = setting.of_family(Family::SymGroupAlgebra).algebra()?;
    let mut out = Vec::new();
    let pi = AlgebraMorphism::projection(rbr.clone(), sym.clone());
    let iota = AlgebraMorphism::inclusion(sym.clone(), rbr.clone());
    out.push(setting.flag("pi-multiplicative", pi.is_ok(), pi.as_ref().err().map_or(String::new(), Error::to_string)));
    out.push(setting.flag("iota-multiplicative", iota.is_ok(), iota.as_ref().err().map_or(String::new(), Error::to_string)));
    let (Ok(pi), Ok(iota)) = (pi, iota) else {
        return Ok(out);
    };
    out.push(setting.flag("pi-after-iota", iota.then(&pi)?.is_identity(), ""));
    if setting.ring.is_field() {
        let (ts, tr) = (BasedModule::trivial(&sym), BasedModule::trivial(&rbr));
        let one = ModuleMap::identity(&ts);
        let i = BarChainMap::new(&iota, &ts, &tr, one.clone(), max_degree + 1)?;
        let p = BarChainMap::new(&pi, &tr, &ts, one, max_degree + 1)?;
        out.extend(induced_records(setting, "morphism", &i, &p, max_degree)?);
    }
    Ok(out)
}

/// Per degree: `π_* ι_* = id` and `ι_*` is an isomorphism.
fn induced_records(
    setting: &Setting,
    prefix: &str,
    i: &BarChainMap,
    p: &BarChainMap,
    max_degree: usize,
) -> Result<Vec<ReportRecord>> {
    let small = i.source().complex()?;
    let big = i.target().complex()?;
    let mut out = Vec::new();
    for k in 1..=max_degree {
        i.check_commutes(k)?;
        p.check_commutes(k)?;
    }
    for k in 0..=max_degree {
        let id = composite_is_identity(i, p, &small, k)?;
        out.push(setting.flag(&format!("{prefix}-pi-iota-identity"), id, "").with_degree(k));
        let iso = i.induced(&small, &big, k)?.is_isomorphism()?;
        out.push(setting.flag(&format!("{prefix}-iota-isomorphism"), iso, "").with_degree(k));
    }
    Ok(out)
}

/// Shapiro analogue for `RS_n ⊗_{RS_m} t` and `RBr_n ⊗_{RBr_m} t`: the box
/// module against its presentation, the free-orbit and quotient-tensor
/// lemmas, Tor on both sides, and (over a field, `n ≤ 2`) the maps induced
/// by `ι` and `π` on that Tor.
pub fn verify_shapiro(setting: &Setting, m: usize, max_degree: usize) -> Result<Vec<ReportRecord>> {
    setting.require_unit_epsilon()?;
    let setting = &setting.of_family(Family::RookBrauer);
    let n = setting.n;
    if m > n {
        return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    let rbr = setting.algebra()?;
    let sym = setting.of_family(Family::SymGroupAlgebra).algebra()?;
    let mut out = Vec::new();
    let cmp = compare_induced(&rbr, m)?;
    out.push(setting.compare("induced-oracle", None, format!("rank {}", cmp.oracle_free_rank), format!("rank {}", cmp.box_rank)));
    out.push(setting.flag("induced-well-defined", cmp.isomorphic(), ""));
    let orbits = free_orbits_of_quotient_by_jm(&rbr, m);
    out.push(setting.flag("free-orbits", orbits.is_ok(), orbits.as_ref().err().map_or(String::new(), Error::to_string)));
    let iso = check_quotient_tensor_iso(&rbr, m);
    out.push(setting.flag("quotient-tensor", iso.is_ok(), iso.as_ref().err().map_or(String::new(), Error::to_string)));
    let (big, big_boxes) = induced_module(&rbr, m)?;
    let (small, small_boxes) = induced_module(&sym, m)?;
    let (tb, ts) = crate::par::join(|| tor(&big, max_degree), || tor(&small, max_degree));
    let (tb, ts) = (tb?, ts?);
    out.extend(tor_records(setting, "shapiro", &tb, &ts));
    out.push(degree_zero_record(setting, &big, &tb)?);
    out.push(degree_zero_record(&setting.of_family(Family::SymGroupAlgebra), &small, &ts)?);
    if setting.ring.is_field() && n <= 2 {
        let ring = setting.ring;
        let position = |boxes: &[crate::induced::BoxDiagram], b: &crate::induced::BoxDiagram| boxes.iter().position(|c| c == b);
        let g = ModuleMap::from_columns(
            small.rank(),
            big.rank(),
            small_boxes
                .iter()
                .map(|b| position(&big_boxes, b).map(|i| vec![(i, ring.one())]).ok_or_else(|| Error::Precondition(format!("{b} is not a box of the larger module"))))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let h = ModuleMap::from_columns(
            big.rank(),
            small.rank(),
            big_boxes.iter().map(|b| position(&small_boxes, b).map(|i| vec![(i, ring.one())]).unwrap_or_default()).collect(),
        )?;
        let iota = AlgebraMorphism::inclusion(sym.clone(), rbr.clone())?;
        let pi = AlgebraMorphism::projection(rbr.clone(), sym.clone())?;
        let i = BarChainMap::new(&iota, &small, &big, g, max_degree + 1)?;
        let p = BarChainMap::new(&pi, &big, &small, h, max_degree + 1)?;
        out.extend(induced_records(setting, "shapiro", &i, &p, max_degree)?);
    }
    Ok(out.into_iter().map(|r| r.with_m(m)).collect())
}

/// Idempotent summands for every instance at this `n`.
pub fn verify_summands(setting: &Setting) -> Result<Vec<ReportRecord>> {
    setting.require_unit_epsilon()?;
    let a = setting.algebra()?;
    let instances = summand_instances(&a);
    let reports = crate::par::map(&instances, |s| summand_check(&a, s));
    reports
        .into_iter()
        .map(|r| {
            let r = r?;
            let detail = format!(
                "{}: idempotent {}, surjective {}, splits {}, equivariant {}, ranks {} → {}",
                r.summand, r.idempotent, r.surjective, r.splits, r.equivariant, r.source_rank, r.target_rank
            );
            Ok(setting.flag("summand", r.passes(), detail))
        })
        .collect()
}

/// The decomposition of `ℬ_{X,x}`.
pub fn verify_decompose_b(setting: &Setting, set: &[usize], x: usize) -> Result<Vec<ReportRecord>> {
    let a = setting.algebra()?;
    let r = decompose_b(&a, set, x)?;
    let parts: Vec<String> = r.summands.iter().map(|(name, rank)| format!("{name}:{rank}")).collect();
    let total: usize = r.summands.iter().map(|p| p.1).sum();
    Ok(vec![
        setting.compare("decompose-B-rank", None, r.target_rank, total).with_set(set).with_x(x),
        setting.flag("decompose-B-bijective", r.bijective, parts.join(" ⊕ ")).with_set(set).with_x(x),
        setting.flag("decompose-B-equivariant", r.equivariant, "").with_set(set).with_x(x),
    ])
}

/// Exactness of the inductive resolution and of its `t ⊗` image.
pub fn verify_resolution(setting: &Setting, set: &[usize], x: usize) -> Result<Vec<ReportRecord>> {
    let a = setting.algebra()?;
    let r = check_resolution(&a, set, x)?;
    let homology: Vec<String> = r.homology.iter().map(ToString::to_string).collect();
    let tensored: Vec<String> = r.tensored_homology.iter().map(ToString::to_string).collect();
    let ranks = format!("ranks {:?}", r.ranks);
    Ok(vec![
        setting.flag("resolution-equivariant", r.equivariant, &ranks).with_set(set).with_x(x),
        setting.compare("resolution-exact", None, "[0, 0, 0]", format!("[{}]", homology.join(", "))).with_set(set).with_x(x),
        setting
            .compare("resolution-tensored", None, "t-ranks [0, 1, 1], free, exact", {
                let ok = r.tensored_is_identity();
                if ok {
                    "t-ranks [0, 1, 1], free, exact".to_string()
                } else {
                    format!("t-ranks {:?}, free {}, homology [{}]", r.tensored_ranks, r.tensored_free, tensored.join(", "))
                }
            })
            .with_set(set)
            .with_x(x),
    ])
}

/// Bar complex for `Tor` over this setting's algebra with trivial coefficients.
pub fn trivial_tor_complex(setting: &Setting, max_degree: usize) -> Result<ChainComplex> {
    tor_complex(&BasedModule::trivial(&setting.algebra()?), max_degree)
}
