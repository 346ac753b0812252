//! Minimum linear locality of NMDS codes and their duals, and optimality
//! against the Singleton-like and Cadambe-Mazumdar bounds for locally
//! recoverable codes.
//!
//! Repair relations for a code are its dual codewords: if `h ∈ C⊥` and
//! `h_i ≠ 0` then `c_i = Σ_{j ≠ i} (h_j / h_i) c_j` (signs vanish in
//! characteristic 2). For the dual code the roles swap and the relations are
//! codewords of `C` itself.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::codes::{self, LinearCode, MinWeightCodewords, MinWeightDual, SupportSet};
use crate::error::CodeError;
use crate::field::{FieldContext, FieldElement};
use crate::nmds::{self, CodeClass};
use crate::par::Execution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    /// Supports of the minimum-weight dual codewords cover `[n]`: `r = d⊥ - 1`.
    UnionCovers,
    /// They do not; for NMDS codes `r = d⊥`.
    NmdsFallback,
    /// Those supports have empty common intersection: dual locality `d - 1`.
    IntersectionEmpty,
    /// Nonempty intersection: dual locality `d`.
    IntersectionFallback,
}

impl Mechanism {
    pub fn as_str(self) -> &'static str {
        match self {
            Mechanism::UnionCovers => "union-covers",
            Mechanism::NmdsFallback => "nmds-fallback",
            Mechanism::IntersectionEmpty => "intersection-empty",
            Mechanism::IntersectionFallback => "intersection-fallback",
        }
    }
}

/// A linear repair function: `c_coordinate = Σ_j coefficients[j] · c_{repair_set[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairWitness {
    pub coordinate: usize,
    pub repair_set: Vec<usize>,
    pub coefficients: Vec<FieldElement>,
}

impl RepairWitness {
    /// From a parity relation `h` (orthogonal to every codeword) with `h_i ≠ 0`.
    pub fn from_relation(ctx: &FieldContext, i: usize, h: &[FieldElement]) -> Option<Self> {
        let lead = ctx.inv(h[i]).ok()?;
        let (repair_set, coefficients) = h
            .iter()
            .enumerate()
            .filter(|&(j, v)| j != i && !v.is_zero())
            .map(|(j, &v)| (j, ctx.mul(v, lead)))
            .unzip();
        Some(RepairWitness {
            coordinate: i,
            repair_set,
            coefficients,
        })
    }

    pub fn recover(&self, ctx: &FieldContext, word: &[FieldElement]) -> FieldElement {
        self.repair_set
            .iter()
            .zip(&self.coefficients)
            .fold(FieldElement::ZERO, |acc, (&j, &a)| {
                acc.add(ctx.mul(a, word[j]))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalityReport {
    pub r: usize,
    pub mechanism: Mechanism,
    /// Union of the supports of the minimum-weight dual codewords.
    pub union_of_supports: SupportSet,
    /// Their common intersection.
    pub intersection_of_supports: SupportSet,
    /// `max_i` over coordinates of (lightest relation through `i`) − 1, when
    /// computed directly; `None` if the relations were not enumerated.
    pub direct_r: Option<usize>,
    /// One repair function per coordinate.
    pub repair: Vec<RepairWitness>,
}

impl LocalityReport {
    pub fn witness(&self, coordinate: usize) -> Option<&RepairWitness> {
        self.repair.iter().find(|w| w.coordinate == coordinate)
    }

    /// Largest repair set used.
    pub fn max_repair_size(&self) -> usize {
        self.repair
            .iter()
            .map(|w| w.repair_set.len())
            .max()
            .unwrap_or(0)
    }
}

fn union_and_intersection(n: usize, supports: &[SupportSet]) -> (SupportSet, SupportSet) {
    let mut union = BTreeSet::new();
    let mut inter: Option<BTreeSet<usize>> = None;
    for s in supports {
        union.extend(s.indices().iter().copied());
        let set: BTreeSet<usize> = s.indices().iter().copied().collect();
        inter = Some(match inter {
            None => set,
            Some(prev) => prev.intersection(&set).copied().collect(),
        });
    }
    let inter = inter.unwrap_or_else(|| (0..n).collect());
    (
        SupportSet::new(union.into_iter().collect()),
        SupportSet::new(inter.into_iter().collect()),
    )
}

fn require_nmds(class: &CodeClass) -> Result<(), CodeError> {
    if class.is_nmds() {
        Ok(())
    } else {
        Err(CodeError::NotNmds(format!("class {}", class.tag.as_str())))
    }
}

/// A dual codeword of weight `k + 1` through coordinate `i`: express column
/// `i` in the first basis of `k` other columns.
fn basis_relation(code: &LinearCode, i: usize) -> Option<Vec<FieldElement>> {
    let n = code.n();
    let k = code.k();
    let g = code.generator();
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let mut chosen: Vec<usize> = Vec::new();
    for &j in &others {
        let mut trial = chosen.clone();
        trial.push(j);
        if g.select_columns(&trial).rank() == trial.len() {
            chosen = trial;
            if chosen.len() == k {
                break;
            }
        }
    }
    if chosen.len() < k {
        return None;
    }
    let mut cols = chosen.clone();
    cols.push(i);
    let ns = g.select_columns(&cols).null_space();
    let rel = ns.row(0);
    let mut h = vec![FieldElement::ZERO; n];
    for (&c, &v) in cols.iter().zip(rel) {
        h[c] = v;
    }
    (!h[i].is_zero()).then_some(h)
}

/// Locality of the code from its minimum-weight (weight 3) dual codewords.
pub fn locality_of_code_from(
    code: &LinearCode,
    class: &CodeClass,
    dual: &MinWeightDual,
) -> Result<LocalityReport, CodeError> {
    require_nmds(class)?;
    let n = code.n();
    let d_dual = class.d_dual.expect("NMDS codes have a nonzero dual");
    let supports = dual.supports();
    let (union, inter) = union_and_intersection(n, &supports);
    let (r, mechanism) = if union == SupportSet::full(n) {
        (d_dual - 1, Mechanism::UnionCovers)
    } else {
        (d_dual, Mechanism::NmdsFallback)
    };
    let ctx = code.field();
    let mut repair = Vec::with_capacity(n);
    for i in 0..n {
        let relation = match dual.codewords.iter().find(|h| h.support.contains(i)) {
            Some(h) => h.to_vector(n),
            None => basis_relation(code, i).ok_or_else(|| {
                CodeError::Shape(format!("coordinate {i} has no repair relation"))
            })?,
        };
        debug_assert!(code.is_parity_check(&relation));
        repair.push(RepairWitness::from_relation(ctx, i, &relation).expect("h_i != 0"));
    }
    Ok(LocalityReport {
        r,
        mechanism,
        union_of_supports: union,
        intersection_of_supports: inter,
        direct_r: Some(repair.iter().map(|w| w.repair_set.len()).max().unwrap_or(0)),
        repair,
    })
}

pub fn locality_of_code(code: &LinearCode) -> Result<LocalityReport, CodeError> {
    let class = nmds::classify(code)?;
    require_nmds(&class)?;
    let dual = codes::min_weight_dual_codewords(code)?;
    locality_of_code_from(code, &class, &dual)
}

/// Locality of the dual code via the intersection of the weight-3 dual
/// supports. `lightest` (from [`codes::lightest_codewords_covering`]) gives
/// the repair functions and a direct value of the locality; `primal_min`
/// gives the union test on `B_d(C)` for the cross-check.
pub fn locality_of_dual_from(
    code: &LinearCode,
    class: &CodeClass,
    dual: &MinWeightDual,
    lightest: &[Option<Vec<FieldElement>>],
) -> Result<LocalityReport, CodeError> {
    require_nmds(class)?;
    let n = code.n();
    let (union, inter) = union_and_intersection(n, &dual.supports());
    let (r, mechanism) = if inter.is_empty() {
        (class.d - 1, Mechanism::IntersectionEmpty)
    } else {
        (class.d, Mechanism::IntersectionFallback)
    };
    let ctx = code.field();
    let mut repair = Vec::with_capacity(n);
    for (i, c) in lightest.iter().enumerate() {
        let c = c
            .as_ref()
            .ok_or_else(|| CodeError::Shape(format!("coordinate {i} is zero on the code")))?;
        repair.push(RepairWitness::from_relation(ctx, i, c).expect("c_i != 0"));
    }
    let direct_r = repair.iter().map(|w| w.repair_set.len()).max();
    Ok(LocalityReport {
        r,
        mechanism,
        union_of_supports: union,
        intersection_of_supports: inter,
        direct_r,
        repair,
    })
}

pub fn locality_of_dual(code: &LinearCode) -> Result<LocalityReport, CodeError> {
    let class = nmds::classify(code)?;
    require_nmds(&class)?;
    let dual = codes::min_weight_dual_codewords(code)?;
    let lightest = codes::lightest_codewords_covering(code, Execution::default())?;
    locality_of_dual_from(code, &class, &dual, &lightest)
}

/// Whether the minimum-weight codewords of `C` cover every coordinate; by
/// the union criterion applied to `C⊥` this is equivalent to the dual
/// having locality `d - 1`.
pub fn primal_min_supports_cover(n: usize, primal: &MinWeightCodewords) -> bool {
    let (union, _) = union_and_intersection(n, &primal.supports());
    union == SupportSet::full(n)
}

/// Right-hand side `n - k - ⌈k/r⌉ + 2` of the Singleton-like bound.
pub fn singleton_like_bound(n: usize, k: usize, r: usize) -> i64 {
    assert!(r >= 1, "locality must be positive");
    n as i64 - k as i64 - k.div_ceil(r) as i64 + 2
}

/// Singleton upper bound on the dimension of a length-`len` code with
/// distance `d`; zero when no such code exists.
fn singleton_dimension(len: i64, d: usize) -> i64 {
    (len - d as i64 + 1).max(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmBound {
    pub value: i64,
    pub t: usize,
    /// No `t` leaves a residual length of at least `d`, so every term is `r·t`.
    pub degenerate: bool,
}

/// `min_t [r t + K(n - t(r+1), d)]` over `1 <= t <= max(1, ⌊(n-1)/(r+1)⌋)`,
/// with `K(n', d) = max(n' - d + 1, 0)` the Singleton dimension bound. `K`
/// upper-bounds the true optimal dimension, so a code meeting this value
/// meets the Cadambe-Mazumdar bound.
pub fn cm_bound_dimension(n: usize, d: usize, _q: u32, r: usize) -> CmBound {
    assert!(r >= 1, "locality must be positive");
    let t_max = (n.saturating_sub(1) / (r + 1)).max(1);
    let (value, t) = (1..=t_max)
        .map(|t| {
            let residual = n as i64 - (t * (r + 1)) as i64;
            ((r * t) as i64 + singleton_dimension(residual, d), t)
        })
        .min()
        .expect("t range is nonempty");
    CmBound {
        value,
        t,
        degenerate: n < r + 1 + d,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub singleton_like_rhs: i64,
    pub cm_rhs: i64,
    pub cm_t: usize,
    pub cm_degenerate: bool,
    pub d_optimal: bool,
    pub almost_d_optimal: bool,
    pub k_optimal: bool,
}

impl OptimalityReport {
    pub fn evaluate(n: usize, k: usize, d: usize, q: u32, r: usize) -> Self {
        let sl = singleton_like_bound(n, k, r);
        let cm = cm_bound_dimension(n, d, q, r);
        OptimalityReport {
            n,
            k,
            d,
            r,
            singleton_like_rhs: sl,
            cm_rhs: cm.value,
            cm_t: cm.t,
            cm_degenerate: cm.degenerate,
            d_optimal: d as i64 == sl,
            almost_d_optimal: d as i64 == sl - 1,
            k_optimal: k as i64 == cm.value,
        }
    }

    pub fn flags(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if self.d_optimal {
            f.push("d-optimal");
        }
        if self.almost_d_optimal {
            f.push("almost-d-optimal");
        }
        if self.k_optimal {
            f.push("k-optimal");
        }
        f
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrcClassification {
    pub code: OptimalityReport,
    pub dual: OptimalityReport,
}

pub fn classify_lrc_from(
    class: &CodeClass,
    q: u32,
    locality_code: &LocalityReport,
    locality_dual: &LocalityReport,
) -> LrcClassification {
    let (n, k, d) = (class.n, class.k, class.d);
    let d_dual = class.d_dual.expect("NMDS codes have a nonzero dual");
    LrcClassification {
        code: OptimalityReport::evaluate(n, k, d, q, locality_code.r),
        dual: OptimalityReport::evaluate(n, n - k, d_dual, q, locality_dual.r),
    }
}

pub fn classify_lrc(code: &LinearCode) -> Result<LrcClassification, CodeError> {
    let class = nmds::classify(code)?;
    require_nmds(&class)?;
    let dual = codes::min_weight_dual_codewords(code)?;
    let lightest = codes::lightest_codewords_covering(code, Execution::default())?;
    let loc = locality_of_code_from(code, &class, &dual)?;
    let loc_dual = locality_of_dual_from(code, &class, &dual, &lightest)?;
    Ok(classify_lrc_from(&class, code.q(), &loc, &loc_dual))
}

/// Outcome of erasing one coordinate and rebuilding it from its repair set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairOutcome {
    pub coordinate: usize,
    pub repair_set: Vec<usize>,
    pub coefficients: Vec<FieldElement>,
    pub original: FieldElement,
    pub recovered: FieldElement,
}

impl RepairOutcome {
    pub fn ok(&self) -> bool {
        self.original == self.recovered
    }
}

/// Erases `coordinate` of `word` and recovers it from the witness repair set.
pub fn repair_coordinate(
    ctx: &FieldContext,
    locality: &LocalityReport,
    word: &[FieldElement],
    coordinate: usize,
) -> Result<RepairOutcome, CodeError> {
    let w = locality.witness(coordinate).ok_or_else(|| {
        CodeError::Shape(format!(
            "no repair set of size {} covers coordinate {coordinate}",
            locality.r
        ))
    })?;
    let mut erased = word.to_vec();
    erased[coordinate] = FieldElement::ZERO;
    Ok(RepairOutcome {
        coordinate,
        repair_set: w.repair_set.clone(),
        coefficients: w.coefficients.clone(),
        original: word[coordinate],
        recovered: w.recover(ctx, &erased),
    })
}
