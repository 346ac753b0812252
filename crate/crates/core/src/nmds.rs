//! MDS / AMDS / NMDS classification, the NMDS weight-distribution
//! recurrences, and the minimum-weight pairing between an NMDS code and its
//! dual.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::codes::{
    self, binomial, LinearCode, MinWeightCodewords, MinWeightDual, SupportSet, WeightDistribution,
};
use crate::error::CodeError;
use crate::par::Execution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassTag {
    #[serde(rename = "MDS")]
    Mds,
    /// AMDS with a non-AMDS dual.
    #[serde(rename = "AMDS-only")]
    AmdsOnly,
    #[serde(rename = "NMDS")]
    Nmds,
    #[serde(rename = "other")]
    Other,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Mds => "MDS",
            ClassTag::AmdsOnly => "AMDS-only",
            ClassTag::Nmds => "NMDS",
            ClassTag::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeClass {
    pub tag: ClassTag,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `None` when the dual is the zero code.
    pub d_dual: Option<usize>,
    /// Singleton defect `n - k + 1 - d`.
    pub defect: i64,
    pub dual_defect: Option<i64>,
}

impl CodeClass {
    pub fn is_nmds(&self) -> bool {
        self.tag == ClassTag::Nmds
    }
}

/// Classifies from a primal distribution; the dual distance comes from the
/// MacWilliams transform.
pub fn classify_from_distribution(
    n: usize,
    k: usize,
    q: u32,
    dist: &WeightDistribution,
) -> Result<CodeClass, CodeError> {
    let d = dist.minimum_distance().ok_or(CodeError::ZeroCode)?;
    let d_dual = if k == n {
        None
    } else {
        codes::macwilliams(dist, n, k, q)?.minimum_distance()
    };
    let defect = n as i64 - k as i64 + 1 - d as i64;
    let dual_defect = d_dual.map(|dd| k as i64 + 1 - dd as i64);
    let tag = match (defect, dual_defect) {
        (0, _) => ClassTag::Mds,
        (1, Some(1)) => ClassTag::Nmds,
        (1, _) => ClassTag::AmdsOnly,
        _ => ClassTag::Other,
    };
    Ok(CodeClass {
        tag,
        n,
        k,
        d,
        d_dual,
        defect,
        dual_defect,
    })
}

pub fn classify(code: &LinearCode) -> Result<CodeClass, CodeError> {
    let dist = codes::weight_distribution(code)?;
    classify_from_distribution(code.n(), code.k(), code.q(), &dist)
}

/// `Σ_{j<s} (-1)^j C(top, j) (q^{s-j} - 1)`
fn alternating_sum(top: usize, s: usize, q: u32) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    for j in 0..s {
        let term = binomial(top, j) * (q.pow((s - j) as u32) - BigInt::one());
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn non_negative(v: BigInt, what: &str) -> Result<BigUint, CodeError> {
    if v.is_negative() {
        Err(CodeError::InconsistentDistribution(format!(
            "{what} = {v} is negative"
        )))
    } else {
        Ok(v.to_biguint().expect("non-negative"))
    }
}

/// Full dual distribution of an `[n, k, n-k]` NMDS code from `A⊥_k` alone:
/// `A⊥_{k+s} = C(n, k+s) Σ_{j<s} (-1)^j C(k+s, j)(q^{s-j} - 1) + (-1)^s C(n-k, s) A⊥_k`.
pub fn nmds_dual_distribution_from_ak(
    n: usize,
    k: usize,
    q: u32,
    a_k_dual: &BigUint,
) -> Result<WeightDistribution, CodeError> {
    if k > n {
        return Err(CodeError::Shape(format!("k = {k} exceeds n = {n}")));
    }
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    if k == 0 {
        return Ok(WeightDistribution::from_counts(counts));
    }
    counts[k] = a_k_dual.clone();
    let seed = BigInt::from(a_k_dual.clone());
    for s in 1..=n - k {
        let mut v = binomial(n, k + s) * alternating_sum(k + s, s, q);
        let tail = binomial(n - k, s) * &seed;
        if s % 2 == 0 {
            v += tail;
        } else {
            v -= tail;
        }
        counts[k + s] = non_negative(v, &format!("A⊥_{}", k + s))?;
    }
    Ok(WeightDistribution::from_counts(counts))
}

/// Full primal distribution of an `[n, k, n-k]` NMDS code from `A_{n-k}`:
/// `A_{n-k+s} = C(n, k-s) Σ_{j<s} (-1)^j C(n-k+s, j)(q^{s-j} - 1) + (-1)^s C(k, s) A_{n-k}`.
pub fn nmds_primal_distribution_from_ank(
    n: usize,
    k: usize,
    q: u32,
    a_nk: &BigUint,
) -> Result<WeightDistribution, CodeError> {
    if k > n {
        return Err(CodeError::Shape(format!("k = {k} exceeds n = {n}")));
    }
    let d = n - k;
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    if d == 0 {
        return Ok(WeightDistribution::from_counts(counts));
    }
    counts[d] = a_nk.clone();
    let seed = BigInt::from(a_nk.clone());
    for s in 1..=k {
        let mut v = binomial(n, k - s) * alternating_sum(d + s, s, q);
        let tail = binomial(k, s) * &seed;
        if s % 2 == 0 {
            v += tail;
        } else {
            v -= tail;
        }
        counts[d + s] = non_negative(v, &format!("A_{}", d + s))?;
    }
    Ok(WeightDistribution::from_counts(counts))
}

/// A canonical minimum-weight codeword and its disjoint-support dual partner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub primal_support: SupportSet,
    /// `None` if no partner exists.
    pub dual_support: Option<SupportSet>,
    /// Number of projective dual classes with disjoint support; 1 when the
    /// partner is unique up to scalar.
    pub partners: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    pub primal_count: u64,
    pub dual_count: u64,
    pub counts_equal: bool,
    pub all_unique: bool,
    pub pairings: Vec<Pairing>,
}

impl PairingReport {
    pub fn ok(&self) -> bool {
        self.counts_equal && self.all_unique
    }
}

pub fn check_pairing_from(
    class: &CodeClass,
    primal: &MinWeightCodewords,
    dual: &MinWeightDual,
) -> Result<PairingReport, CodeError> {
    if !class.is_nmds() {
        return Err(CodeError::NotNmds(format!("class {}", class.tag.as_str())));
    }
    let dual_supports = dual.supports();
    let pairings: Vec<Pairing> = primal
        .canonical
        .iter()
        .map(|c| {
            let s = SupportSet::of_elements(c);
            let mut hits = dual_supports.iter().filter(|t| t.is_disjoint(&s));
            let first = hits.next().cloned();
            let partners = first.iter().count() + hits.count();
            Pairing {
                primal_support: s,
                dual_support: first,
                partners,
            }
        })
        .collect();
    let primal_count = primal.count();
    let dual_count = dual.total_count();
    Ok(PairingReport {
        primal_count,
        dual_count,
        counts_equal: primal_count == dual_count,
        all_unique: pairings.iter().all(|p| p.partners == 1),
        pairings,
    })
}

/// Checks that minimum-weight codewords of an NMDS code pair one-to-one (up
/// to scalars) with disjoint-support minimum-weight dual codewords. The
/// dual side is found through column triples, so `d⊥` must be 3.
pub fn check_min_weight_pairing(code: &LinearCode) -> Result<PairingReport, CodeError> {
    let class = classify(code)?;
    if !class.is_nmds() {
        return Err(CodeError::NotNmds(format!("class {}", class.tag.as_str())));
    }
    let primal = codes::min_weight_codewords(code, Execution::default())?;
    let dual = codes::min_weight_dual_codewords(code)?;
    check_pairing_from(&class, &primal, &dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::constructions::{build, ConstructionId};
    use crate::field::FieldContext;
    use crate::matrix::MatrixGF;

    fn gf(m: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::new(m, None).unwrap())
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn classify_examples() {
        let c = build(ConstructionId::C, &gf(3));
        assert_eq!(classify(&c).unwrap().tag, ClassTag::Nmds);
        let full = LinearCode::new(MatrixGF::identity(gf(3), 4)).unwrap();
        let class = classify(&full).unwrap();
        assert_eq!((class.tag, class.d, class.d_dual), (ClassTag::Mds, 1, None));
        let e = build(ConstructionId::E, &gf(2));
        let class = classify(&e).unwrap();
        assert_eq!(
            (class.n, class.k, class.d, class.d_dual),
            (5, 3, 2, Some(3))
        );
        assert_eq!(class.tag, ClassTag::Nmds);
    }

    #[test]
    fn amds_only_and_other() {
        // [4,2,2] with a zero column: the dual contains e_3
        let f = gf(2);
        let m = MatrixGF::from_rows(f.clone(), &[vec![1, 0, 1, 0], vec![0, 1, 1, 0]]).unwrap();
        let class = classify(&LinearCode::new(m).unwrap()).unwrap();
        assert_eq!(class.tag, ClassTag::AmdsOnly);
        let rep = MatrixGF::from_rows(f, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!(
            classify(&LinearCode::new(rep).unwrap()).unwrap().tag,
            ClassTag::Other
        );
    }

    #[test]
    fn primal_recurrence_examples() {
        let c = nmds_primal_distribution_from_ank(12, 3, 8, &big(70)).unwrap();
        assert_eq!(&c.counts()[9..], &[big(70), big(252), big(42), big(147)]);
        let e1bar = nmds_primal_distribution_from_ank(10, 3, 8, &big(49)).unwrap();
        assert_eq!(
            &e1bar.counts()[7..],
            &[big(49), big(168), big(147), big(147)]
        );
        // E at q = 4 is [5, 3, 2]
        let e = build(ConstructionId::E, &gf(2));
        let exhaustive = codes::weight_distribution(&e).unwrap();
        assert_eq!(
            nmds_primal_distribution_from_ank(5, 3, 4, &big(6)).unwrap(),
            exhaustive
        );
    }

    #[test]
    fn dual_recurrence_matches_macwilliams() {
        let ctx = gf(3);
        for (id, seed) in [(ConstructionId::C, 70), (ConstructionId::D, 56)] {
            let code = build(id, &ctx);
            let wd = codes::weight_distribution(&code).unwrap();
            let mw = codes::macwilliams(&wd, code.n(), 3, 8).unwrap();
            let rec = nmds_dual_distribution_from_ak(code.n(), 3, 8, &big(seed)).unwrap();
            assert_eq!(mw, rec, "{id}");
        }
    }

    #[test]
    fn recurrence_degenerate_and_inconsistent() {
        let empty = nmds_dual_distribution_from_ak(3, 3, 8, &big(0)).unwrap();
        assert_eq!(empty.n(), 3);
        assert_eq!(empty.total(), big(1));
        // a wildly large seed drives some count negative
        assert!(nmds_primal_distribution_from_ank(12, 3, 8, &big(10_000)).is_err());
    }

    #[test]
    fn pairing_examples() {
        let ctx = gf(3);
        for (id, count) in [(ConstructionId::C, 70), (ConstructionId::D, 56)] {
            let r = check_min_weight_pairing(&build(id, &ctx)).unwrap();
            assert_eq!((r.primal_count, r.dual_count), (count, count));
            assert!(r.ok());
        }
        let r = check_min_weight_pairing(&build(ConstructionId::E, &gf(2))).unwrap();
        assert_eq!((r.primal_count, r.dual_count), (6, 6));
        assert!(r.ok());
    }

    #[test]
    fn pairing_rejects_non_nmds() {
        let full = LinearCode::new(MatrixGF::identity(gf(3), 3)).unwrap();
        assert!(matches!(
            check_min_weight_pairing(&full),
            Err(CodeError::NotNmds(_))
        ));
    }
}
