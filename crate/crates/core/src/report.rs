//! Full per-construction analysis and its serializable report.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::codes::{self, LinearCode, MinWeightCodewords, MinWeightDual};
use crate::constructions::{self, ConstructionId, FieldCheck, VerificationReport};
use crate::error::CodeError;
use crate::field::FieldContext;
use crate::lrc::{self, LocalityReport, LrcClassification, Mechanism};
use crate::nmds::{self, ClassTag, CodeClass, PairingReport};
use crate::par::Execution;

/// Closed-form `(r_code, r_dual)` for a construction over `GF(q)`.
pub fn expected_localities(id: ConstructionId, q: usize) -> (usize, usize) {
    use ConstructionId::*;
    match id {
        C | C1 | D1 => (2, q),
        D | D2 => (2, q - 1),
        E => (2, q - 3),
        E1 | E2 => (3, q - 3),
        E1bar => (2, q - 2),
        F1 | F2 => (3, q - 2),
        F3 => (3, q - 1),
    }
}

/// Optimality flags claimed for `(code, dual)`.
pub fn expected_flags(id: ConstructionId) -> (&'static [&'static str], &'static [&'static str]) {
    use ConstructionId::*;
    const DK: &[&str] = &["d-optimal", "k-optimal"];
    const AK: &[&str] = &["almost-d-optimal", "k-optimal"];
    match id {
        C | C1 | D | D1 | D2 | E | E1bar => (DK, if id == D1 { AK } else { DK }),
        E1 | E2 | F1 | F2 => (AK, DK),
        F3 => (AK, AK),
    }
}

/// Everything computed for one construction at one field size.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub code: LinearCode,
    pub verification: VerificationReport,
    pub class: CodeClass,
    /// Present when the code is NMDS.
    pub nmds: Option<NmdsAnalysis>,
    pub checks: Vec<FieldCheck>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct NmdsAnalysis {
    pub primal_min: MinWeightCodewords,
    pub dual_min: MinWeightDual,
    pub pairing: PairingReport,
    pub locality_code: LocalityReport,
    pub locality_dual: LocalityReport,
    /// `∪ B_d(C) = [n]`, the direct union test for the dual.
    pub primal_union_covers: bool,
    pub lrc: LrcClassification,
}

impl Analysis {
    pub fn theorem_backed(&self) -> bool {
        self.verification.theorem_backed
    }

    /// Checks that failed, regardless of whether they are binding.
    pub fn failing(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Passing unless a theorem-backed expectation failed.
    pub fn pass(&self) -> bool {
        !self.theorem_backed() || self.checks.iter().all(|c| c.pass)
    }

    pub fn report(&self) -> ConstructionReport {
        ConstructionReport::from_analysis(self)
    }
}

fn check(name: &str, expected: impl ToString, observed: impl ToString) -> FieldCheck {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    FieldCheck {
        name: name.into(),
        pass: expected == observed,
        expected,
        observed,
    }
}

fn flag_string(flags: &[&str]) -> String {
    if flags.is_empty() {
        "none".into()
    } else {
        flags.join("+")
    }
}

pub fn analyze(id: ConstructionId, ctx: &Arc<FieldContext>) -> Result<Analysis, CodeError> {
    analyze_with(id, ctx, Execution::default())
}

pub fn analyze_with(
    id: ConstructionId,
    ctx: &Arc<FieldContext>,
    exec: Execution,
) -> Result<Analysis, CodeError> {
    let code = constructions::build(id, ctx);
    let verification = constructions::verify_code(id, ctx, &code, exec)?;
    let (n, k, q) = (code.n(), code.k(), code.q());
    let class = nmds::classify_from_distribution(n, k, q, &verification.distribution)?;
    let mut checks = verification.checks.clone();
    let mut warnings = verification.warnings.clone();
    checks.push(check("class", ClassTag::Nmds.as_str(), class.tag.as_str()));

    if !class.is_nmds() {
        warnings.push(format!(
            "{id} at q = {q} is {}; locality not evaluated",
            class.tag.as_str()
        ));
        return Ok(Analysis {
            code,
            verification,
            class,
            nmds: None,
            checks,
            warnings,
        });
    }

    let dual_from_macwilliams = codes::macwilliams(&verification.distribution, n, k, q)?;
    let dual_from_recurrence =
        nmds::nmds_dual_distribution_from_ak(n, k, q, &dual_from_macwilliams.get(k))?;
    checks.push(check(
        "dual_recurrence",
        dual_from_recurrence.enumerator_string(),
        dual_from_macwilliams.enumerator_string(),
    ));
    checks.push(check(
        "dual_weight3_macwilliams",
        verification.dual_weight3_count,
        dual_from_macwilliams.get(3),
    ));

    let primal_min = MinWeightCodewords {
        weight: class.d,
        canonical: codes::codewords_of_weight(&code, class.d, exec)?,
        multiplicity: q as u64 - 1,
    };
    let dual_min = codes::min_weight_dual_codewords_with(&code, exec)?;
    let pairing = nmds::check_pairing_from(&class, &primal_min, &dual_min)?;
    checks.push(check("pairing", true, pairing.ok()));

    let lightest = codes::lightest_codewords_covering(&code, exec)?;
    let locality_code = lrc::locality_of_code_from(&code, &class, &dual_min)?;
    let locality_dual = lrc::locality_of_dual_from(&code, &class, &dual_min, &lightest)?;
    let primal_union_covers = lrc::primal_min_supports_cover(n, &primal_min);
    let (r_code, r_dual) = expected_localities(id, q as usize);
    checks.push(check("locality_code", r_code, locality_code.r));
    checks.push(check("locality_dual", r_dual, locality_dual.r));
    checks.push(check(
        "locality_dual_direct",
        locality_dual.r,
        locality_dual
            .direct_r
            .map_or("none".into(), |r| r.to_string()),
    ));
    checks.push(check(
        "locality_dual_union",
        locality_dual.mechanism == Mechanism::IntersectionEmpty,
        primal_union_covers,
    ));

    let lrc = lrc::classify_lrc_from(&class, q, &locality_code, &locality_dual);
    let (flags_code, flags_dual) = expected_flags(id);
    checks.push(check(
        "flags_code",
        flag_string(flags_code),
        flag_string(&lrc.code.flags()),
    ));
    checks.push(check(
        "flags_dual",
        flag_string(flags_dual),
        flag_string(&lrc.dual.flags()),
    ));

    Ok(Analysis {
        code,
        verification,
        class,
        nmds: Some(NmdsAnalysis {
            primal_min,
            dual_min,
            pairing,
            locality_code,
            locality_dual,
            primal_union_covers,
            lrc,
        }),
        checks,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalitySummary {
    pub code: Option<usize>,
    pub dual: Option<usize>,
    pub mechanism_code: Option<Mechanism>,
    pub mechanism_dual: Option<Mechanism>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub sl_rhs_code: Option<i64>,
    pub sl_rhs_dual: Option<i64>,
    pub cm_rhs_code: Option<i64>,
    pub cm_rhs_dual: Option<i64>,
    /// `code:<flag>` and `dual:<flag>` entries.
    pub flags: Vec<String>,
}

/// Serializable summary of an [`Analysis`]. Counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub key: String,
    pub id: ConstructionId,
    pub m: u32,
    pub q: u32,
    pub modulus: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_dual: Option<usize>,
    pub class: ClassTag,
    pub distribution: BTreeMap<usize, String>,
    pub dual_weight3_count: String,
    pub pairing_ok: bool,
    pub locality: LocalitySummary,
    pub bounds: BoundsSummary,
    pub theorem_backed: bool,
    pub pass: bool,
    pub failing: Vec<String>,
    pub warnings: Vec<String>,
}

impl ConstructionReport {
    pub fn from_analysis(a: &Analysis) -> Self {
        let v = &a.verification;
        let nm = a.nmds.as_ref();
        let mut flags = Vec::new();
        if let Some(nm) = nm {
            for (side, rep) in [("code", &nm.lrc.code), ("dual", &nm.lrc.dual)] {
                flags.extend(rep.flags().into_iter().map(|f| format!("{side}:{f}")));
                if rep.cm_degenerate {
                    flags.push(format!("{side}:cm-degenerate"));
                }
            }
        }
        ConstructionReport {
            key: format!("{}@{}", v.id, v.m),
            id: v.id,
            m: v.m,
            q: v.q,
            modulus: format!("0x{:x}", a.code.field().modulus()),
            n: a.code.n(),
            k: a.code.k(),
            d: v.d,
            d_dual: a.class.d_dual,
            class: a.class.tag,
            distribution: v
                .distribution
                .nonzero()
                .map(|(w, c)| (w, c.to_string()))
                .collect(),
            dual_weight3_count: v.dual_weight3_count.to_string(),
            pairing_ok: nm.is_some_and(|nm| nm.pairing.ok()),
            locality: LocalitySummary {
                code: nm.map(|nm| nm.locality_code.r),
                dual: nm.map(|nm| nm.locality_dual.r),
                mechanism_code: nm.map(|nm| nm.locality_code.mechanism),
                mechanism_dual: nm.map(|nm| nm.locality_dual.mechanism),
            },
            bounds: BoundsSummary {
                sl_rhs_code: nm.map(|nm| nm.lrc.code.singleton_like_rhs),
                sl_rhs_dual: nm.map(|nm| nm.lrc.dual.singleton_like_rhs),
                cm_rhs_code: nm.map(|nm| nm.lrc.code.cm_rhs),
                cm_rhs_dual: nm.map(|nm| nm.lrc.dual.cm_rhs),
                flags,
            },
            theorem_backed: a.theorem_backed(),
            pass: a.pass(),
            failing: a.failing().map(|c| c.name.clone()).collect(),
            warnings: a.warnings.clone(),
        }
    }
}
