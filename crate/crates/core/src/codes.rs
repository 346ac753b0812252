//! Linear codes over GF(q): exhaustive codeword enumeration, weight
//! distributions, low-weight dual codewords found as column dependencies,
//! and the MacWilliams transform.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CodeError;
use crate::field::{FieldContext, FieldElement};
use crate::matrix::MatrixGF;
use crate::par::{fold_chunks, Execution};

/// Upper limit on `q^k` for exhaustive enumeration.
pub const ENUMERATION_GUARD: u64 = 1 << 34;

/// Sorted, 0-indexed coordinate set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SupportSet(Vec<usize>);

impl SupportSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SupportSet(indices)
    }

    pub fn of_elements(word: &[FieldElement]) -> Self {
        SupportSet(
            word.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn full(n: usize) -> Self {
        SupportSet((0..n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_disjoint(&self, other: &SupportSet) -> bool {
        !self.0.iter().any(|&i| other.contains(i))
    }

    /// `[n]` minus this set.
    pub fn complement(&self, n: usize) -> SupportSet {
        SupportSet((0..n).filter(|&i| !self.contains(i)).collect())
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A linear code given by a full-row-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: MatrixGF,
}

impl LinearCode {
    pub fn new(generator: MatrixGF) -> Result<Self, CodeError> {
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(CodeError::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    /// The code spanned by the rows of `m`, dependent rows dropped.
    pub fn spanned_by(m: &MatrixGF) -> Self {
        LinearCode {
            generator: m.row_space_basis(),
        }
    }

    /// The `[n, 0]` code.
    pub fn zero(field: Arc<FieldContext>, n: usize) -> Self {
        LinearCode {
            generator: MatrixGF::zeros(field, 0, n),
        }
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self.generator.null_space(),
        }
    }

    /// Same set of codewords, compared through the unique RREF.
    pub fn same_codewords(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.n() == other.n()
            && self.k() == other.k()
            && self.generator.rref() == other.generator.rref()
    }

    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        self.generator.left_mul(message)
    }

    /// Whether `word` is orthogonal to every generator row.
    pub fn is_parity_check(&self, word: &[FieldElement]) -> bool {
        let f = self.field();
        (0..self.k()).all(|r| {
            self.generator
                .row(r)
                .iter()
                .zip(word)
                .fold(FieldElement::ZERO, |acc, (&g, &h)| acc.add(f.mul(g, h)))
                .is_zero()
        })
    }

    /// Number of codewords, `q^k`, if it fits in `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(self.k() as u32)
    }

    fn check_guard(&self) -> Result<(), CodeError> {
        match self.size() {
            Some(s) if s <= ENUMERATION_GUARD => Ok(()),
            _ => Err(CodeError::TooLarge {
                q: self.q(),
                k: self.k(),
            }),
        }
    }
}

/// Precomputed `s · row_r` for every row and scalar, laid out flat so one
/// codeword is an XOR of `k` slices.
struct Enumerator {
    n: usize,
    k: usize,
    q: usize,
    scaled: Vec<u16>,
}

impl Enumerator {
    fn new(code: &LinearCode) -> Result<Self, CodeError> {
        code.check_guard()?;
        let (n, k, q) = (code.n(), code.k(), code.q() as usize);
        let f = code.field();
        let mut scaled = vec![0u16; k * q * n];
        for r in 0..k {
            let row = code.generator.row(r);
            for s in f.elements() {
                let base = (r * q + s.value() as usize) * n;
                for (j, &g) in row.iter().enumerate() {
                    scaled[base + j] = f.mul(s, g).value();
                }
            }
        }
        Ok(Enumerator { n, k, q, scaled })
    }

    fn slice(&self, row: usize, scalar: usize) -> &[u16] {
        let base = (row * self.q + scalar) * self.n;
        &self.scaled[base..base + self.n]
    }

    /// Number of message prefixes (all but the last message symbol).
    fn chunks(&self) -> usize {
        if self.k == 0 {
            1
        } else {
            self.q.pow(self.k as u32 - 1)
        }
    }

    /// Visits the codewords whose message prefix is `chunk`, in lexicographic
    /// message order. The message index is `chunk * q + last`.
    fn visit_chunk(&self, chunk: usize, mut visit: impl FnMut(u64, &[u16])) {
        if self.k == 0 {
            visit(0, &vec![0u16; self.n]);
            return;
        }
        let mut prefix = vec![0u16; self.n];
        let mut rest = chunk;
        for r in (0..self.k - 1).rev() {
            let digit = rest % self.q;
            rest /= self.q;
            if digit != 0 {
                for (p, &v) in prefix.iter_mut().zip(self.slice(r, digit)) {
                    *p ^= v;
                }
            }
        }
        let mut word = vec![0u16; self.n];
        for last in 0..self.q {
            for ((w, &p), &v) in word
                .iter_mut()
                .zip(&prefix)
                .zip(self.slice(self.k - 1, last))
            {
                *w = p ^ v;
            }
            visit((chunk * self.q + last) as u64, &word);
        }
    }
}

#[inline]
fn weight_of(word: &[u16]) -> usize {
    word.iter().filter(|&&v| v != 0).count()
}

#[inline]
fn is_canonical(word: &[u16]) -> bool {
    word.iter().find(|&&v| v != 0) == Some(&1)
}

fn to_elements(word: &[u16]) -> Vec<FieldElement> {
    // values come from field arithmetic, so they are in range
    word.iter().map(|&v| FieldElement::from_bits(v)).collect()
}

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "distribution needs an A_0 entry");
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::from_counts(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, weight: usize) -> BigUint {
        self.counts.get(weight).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn minimum_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    /// `(weight, count)` for every nonzero entry, increasing weight.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `1 + 70z^9 + 252z^10 + ...`
    pub fn enumerator_string(&self) -> String {
        self.nonzero()
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}z"),
                _ => format!("{c}z^{i}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enumerator_string())
    }
}

pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution, CodeError> {
    weight_distribution_with(code, Execution::default())
}

/// Exhaustive weight distribution over all `q^k` messages.
pub fn weight_distribution_with(
    code: &LinearCode,
    exec: Execution,
) -> Result<WeightDistribution, CodeError> {
    let e = Enumerator::new(code)?;
    let n = e.n;
    let counts = fold_chunks(
        exec,
        e.chunks(),
        || vec![0u64; n + 1],
        |mut acc, chunk| {
            e.visit_chunk(chunk, |_, w| acc[weight_of(w)] += 1);
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(WeightDistribution::from_u64(&counts))
}

pub fn minimum_distance(code: &LinearCode) -> Result<usize, CodeError> {
    if code.k() == 0 {
        return Err(CodeError::ZeroCode);
    }
    weight_distribution(code)?
        .minimum_distance()
        .ok_or(CodeError::ZeroCode)
}

/// Minimum-weight codewords, one canonical representative (first nonzero
/// coordinate equal to 1) per projective class.
#[derive(Clone, Debug)]
pub struct MinWeightCodewords {
    pub weight: usize,
    pub canonical: Vec<Vec<FieldElement>>,
    /// Scalar multiples per class, `q - 1`.
    pub multiplicity: u64,
}

impl MinWeightCodewords {
    pub fn count(&self) -> u64 {
        self.canonical.len() as u64 * self.multiplicity
    }

    pub fn supports(&self) -> Vec<SupportSet> {
        let set: BTreeSet<SupportSet> = self
            .canonical
            .iter()
            .map(|c| SupportSet::of_elements(c))
            .collect();
        set.into_iter().collect()
    }
}

/// Canonical codewords of weight exactly `weight`, in message order.
pub fn codewords_of_weight(
    code: &LinearCode,
    weight: usize,
    exec: Execution,
) -> Result<Vec<Vec<FieldElement>>, CodeError> {
    let e = Enumerator::new(code)?;
    let mut found = fold_chunks(
        exec,
        e.chunks(),
        Vec::new,
        |mut acc: Vec<(u64, Vec<FieldElement>)>, chunk| {
            e.visit_chunk(chunk, |idx, w| {
                if weight_of(w) == weight && is_canonical(w) {
                    acc.push((idx, to_elements(w)));
                }
            });
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    found.sort_by_key(|(idx, _)| *idx);
    Ok(found.into_iter().map(|(_, w)| w).collect())
}

pub fn min_weight_codewords(
    code: &LinearCode,
    exec: Execution,
) -> Result<MinWeightCodewords, CodeError> {
    let d = minimum_distance(code)?;
    Ok(MinWeightCodewords {
        weight: d,
        canonical: codewords_of_weight(code, d, exec)?,
        multiplicity: code.q() as u64 - 1,
    })
}

/// Deduplicated supports of all codewords of weight `d(code)`.
pub fn min_weight_supports(code: &LinearCode) -> Result<Vec<SupportSet>, CodeError> {
    Ok(min_weight_codewords(code, Execution::default())?.supports())
}

/// For every coordinate, a lowest-weight canonical codeword that is nonzero
/// there (`None` if the coordinate is identically zero on the code).
pub fn lightest_codewords_covering(
    code: &LinearCode,
    exec: Execution,
) -> Result<Vec<Option<Vec<FieldElement>>>, CodeError> {
    let e = Enumerator::new(code)?;
    let n = e.n;
    type Best = Vec<Option<(usize, u64, Vec<u16>)>>;
    let better = |cand: &(usize, u64), cur: &Option<(usize, u64, Vec<u16>)>| match cur {
        None => true,
        Some((w, idx, _)) => (cand.0, cand.1) < (*w, *idx),
    };
    let best: Best = fold_chunks(
        exec,
        e.chunks(),
        || vec![None; n],
        |mut acc: Best, chunk| {
            e.visit_chunk(chunk, |idx, w| {
                if !is_canonical(w) {
                    return;
                }
                let wt = weight_of(w);
                for (i, &v) in w.iter().enumerate() {
                    if v != 0 && better(&(wt, idx), &acc[i]) {
                        acc[i] = Some((wt, idx, w.to_vec()));
                    }
                }
            });
            acc
        },
        |a: Best, b: Best| {
            a.into_iter()
                .zip(b)
                .map(|(x, y)| match (&x, &y) {
                    (_, None) => x,
                    (None, _) => y,
                    (Some((wx, ix, _)), Some((wy, iy, _))) => {
                        if (wx, ix) <= (wy, iy) {
                            x
                        } else {
                            y
                        }
                    }
                })
                .collect()
        },
    );
    Ok(best
        .into_iter()
        .map(|b| b.map(|(_, _, w)| to_elements(&w)))
        .collect())
}

/// Result of the bounded dual-distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DualDistance {
    Exactly(usize),
    /// No dependency of full support on `cap` or fewer columns.
    Exceeds(usize),
}

impl DualDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            DualDistance::Exactly(d) => Some(d),
            DualDistance::Exceeds(_) => None,
        }
    }
}

impl fmt::Display for DualDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualDistance::Exactly(d) => write!(f, "{d}"),
            DualDistance::Exceeds(c) => write!(f, "> {c}"),
        }
    }
}

/// `det[u v w]` for three columns of height 3. Signs vanish in characteristic 2.
#[inline]
fn det3(
    f: &FieldContext,
    u: &[FieldElement],
    v: &[FieldElement],
    w: &[FieldElement],
) -> FieldElement {
    let minor = |a: usize, b: usize| f.mul(v[a], w[b]).add(f.mul(v[b], w[a]));
    f.mul(u[0], minor(1, 2))
        .add(f.mul(u[1], minor(0, 2)))
        .add(f.mul(u[2], minor(0, 1)))
}

/// Smallest `w <= min(cap, 3)` such that some `w` generator columns admit a
/// dependency with all coefficients nonzero. Larger weights are not searched.
pub fn dual_distance_exact(code: &LinearCode, cap: usize) -> DualDistance {
    let cap = cap.clamp(1, 3);
    let g = code.generator();
    let n = code.n();
    let columns: Vec<Vec<FieldElement>> = (0..n).map(|c| g.column(c)).collect();
    let zero = |c: &Vec<FieldElement>| c.iter().all(|v| v.is_zero());
    if columns.iter().any(zero) {
        return DualDistance::Exactly(1);
    }
    if cap == 1 {
        return DualDistance::Exceeds(1);
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.select_columns(&[i, j]).rank() < 2 {
                return DualDistance::Exactly(2);
            }
        }
    }
    if cap == 2 {
        return DualDistance::Exceeds(2);
    }
    // all pairs independent, so any singular triple has a full-support dependency
    let has_triple = fold_chunks(
        Execution::default(),
        n,
        || false,
        |found, i| {
            found
                || (i + 1..n)
                    .any(|j| (j + 1..n).any(|l| triple_singular(code, &columns, [i, j, l])))
        },
        |a, b| a || b,
    );
    if has_triple {
        DualDistance::Exactly(3)
    } else {
        DualDistance::Exceeds(3)
    }
}

fn triple_singular(code: &LinearCode, columns: &[Vec<FieldElement>], t: [usize; 3]) -> bool {
    if code.k() == 3 {
        det3(code.field(), &columns[t[0]], &columns[t[1]], &columns[t[2]]).is_zero()
    } else {
        code.generator().select_columns(&t).rank() < 3
    }
}

/// A dual codeword stored on its support; `coefficients[j]` sits at
/// `support.indices()[j]`. Canonical: the first coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCodeword {
    pub support: SupportSet,
    pub coefficients: Vec<FieldElement>,
}

impl DualCodeword {
    pub fn to_vector(&self, n: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::ZERO; n];
        for (&i, &c) in self.support.indices().iter().zip(&self.coefficients) {
            v[i] = c;
        }
        v
    }

    pub fn coefficient_at(&self, i: usize) -> Option<FieldElement> {
        self.support
            .indices()
            .iter()
            .position(|&j| j == i)
            .map(|p| self.coefficients[p])
    }
}

/// Canonical dual codeword on columns `t`, if they carry a one-dimensional
/// dependency with every coefficient nonzero.
fn triple_dependency(code: &LinearCode, t: [usize; 3]) -> Option<DualCodeword> {
    let sub = code.generator().select_columns(&t);
    let ns = sub.null_space();
    if ns.rows() != 1 {
        return None;
    }
    let coeffs = ns.row(0);
    if coeffs.iter().any(|c| c.is_zero()) {
        return None;
    }
    let f = code.field();
    let lead = f.inv(coeffs[0]).expect("nonzero");
    Some(DualCodeword {
        support: SupportSet::new(t.to_vec()),
        coefficients: coeffs.iter().map(|&c| f.mul(c, lead)).collect(),
    })
}

/// Every dual codeword of weight 3, one canonical representative per
/// support, in lexicographic support order. Assumes no two generator
/// columns are dependent.
pub fn weight_three_dual_codewords(code: &LinearCode, exec: Execution) -> Vec<DualCodeword> {
    let n = code.n();
    let g = code.generator();
    let columns: Vec<Vec<FieldElement>> = (0..n).map(|c| g.column(c)).collect();
    let mut out = fold_chunks(
        exec,
        n,
        Vec::new,
        |mut acc: Vec<DualCodeword>, i| {
            for j in i + 1..n {
                for l in j + 1..n {
                    if triple_singular(code, &columns, [i, j, l]) {
                        if let Some(h) = triple_dependency(code, [i, j, l]) {
                            acc.push(h);
                        }
                    }
                }
            }
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    out.sort_by(|a, b| a.support.cmp(&b.support));
    out
}

#[derive(Clone, Debug)]
pub struct MinWeightDual {
    pub codewords: Vec<DualCodeword>,
    /// Each canonical representative stands for `q - 1` codewords.
    pub multiplicity: u64,
}

impl MinWeightDual {
    pub fn total_count(&self) -> u64 {
        self.codewords.len() as u64 * self.multiplicity
    }

    pub fn supports(&self) -> Vec<SupportSet> {
        self.codewords.iter().map(|c| c.support.clone()).collect()
    }
}

/// Minimum-weight dual codewords of a code whose dual distance is 3.
pub fn min_weight_dual_codewords(code: &LinearCode) -> Result<MinWeightDual, CodeError> {
    min_weight_dual_codewords_with(code, Execution::default())
}

pub fn min_weight_dual_codewords_with(
    code: &LinearCode,
    exec: Execution,
) -> Result<MinWeightDual, CodeError> {
    match dual_distance_exact(code, 3) {
        DualDistance::Exactly(3) => {}
        other => return Err(CodeError::DualDistanceNotThree(other.to_string())),
    }
    Ok(MinWeightDual {
        codewords: weight_three_dual_codewords(code, exec),
        multiplicity: code.q() as u64 - 1,
    })
}

/// Rows `C(r, 0..=r)` of Pascal's triangle as exact integers.
fn binomial_row(r: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(r + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for s in 1..=r {
        c = c * BigInt::from(r - s + 1) / BigInt::from(s);
        row.push(c.clone());
    }
    row
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for s in 1..=k {
        c = c * BigInt::from(n - k + s) / BigInt::from(s);
    }
    c
}

/// Dual weight distribution of an `[n, k]` code over GF(q):
/// `A⊥_j = q^{-k} Σ_i A_i K_j(i)` with Krawtchouk polynomials
/// `K_j(i) = Σ_s (-1)^s (q-1)^{j-s} C(i, s) C(n-i, j-s)`.
pub fn macwilliams(
    dist: &WeightDistribution,
    n: usize,
    k: usize,
    q: u32,
) -> Result<WeightDistribution, CodeError> {
    if dist.n() != n {
        return Err(CodeError::InconsistentDistribution(format!(
            "distribution has length {}, code has {n}",
            dist.n()
        )));
    }
    let size = BigUint::from(q).pow(k as u32);
    if dist.total() != size {
        return Err(CodeError::InconsistentDistribution(format!(
            "counts sum to {}, expected q^k = {size}",
            dist.total()
        )));
    }
    let qm1 = BigInt::from(q - 1);
    let mut powers = vec![BigInt::one(); n + 1];
    for e in 1..=n {
        powers[e] = &powers[e - 1] * &qm1;
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in dist.nonzero() {
        let a = BigInt::from(a.clone());
        let bi = binomial_row(i);
        let bni = binomial_row(n - i);
        for (j, slot) in acc.iter_mut().enumerate() {
            let mut kr = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = &powers[j - s] * &bi[s] * &bni[j - s];
                if s % 2 == 0 {
                    kr += term;
                } else {
                    kr -= term;
                }
            }
            *slot += &a * kr;
        }
    }
    let size = BigInt::from(size);
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            if v.is_negative() || !(&v % &size).is_zero() {
                Err(CodeError::InconsistentDistribution(format!(
                    "dual count A_{j} = {v}/{size} is not a non-negative integer"
                )))
            } else {
                Ok((v / &size).to_biguint().expect("non-negative"))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeightDistribution::from_counts(counts))
}

/// Convenience: `A_i` as `u64` where it fits.
pub fn count_u64(dist: &WeightDistribution, weight: usize) -> Option<u64> {
    dist.get(weight).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(m: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::new(m, None).unwrap())
    }

    fn all_ones(field: Arc<FieldContext>, n: usize) -> LinearCode {
        LinearCode::new(MatrixGF::from_rows(field, &[vec![1; n]]).unwrap()).unwrap()
    }

    #[test]
    fn zero_code_distribution() {
        let z = LinearCode::zero(gf(3), 5);
        let d = weight_distribution(&z).unwrap();
        assert_eq!(
            d.counts(),
            WeightDistribution::from_u64(&[1, 0, 0, 0, 0, 0]).counts()
        );
        assert!(matches!(minimum_distance(&z), Err(CodeError::ZeroCode)));
    }

    #[test]
    fn repetition_code() {
        let c = all_ones(gf(3), 6);
        assert_eq!(minimum_distance(&c).unwrap(), 6);
        assert_eq!(min_weight_supports(&c).unwrap(), vec![SupportSet::full(6)]);
    }

    #[test]
    fn full_space_dual_is_zero_code() {
        let f = gf(2);
        let full = LinearCode::new(MatrixGF::identity(f, 4)).unwrap();
        let d = full.dual();
        assert_eq!((d.n(), d.k()), (4, 0));
        let wd = weight_distribution(&full).unwrap();
        let dual = macwilliams(&wd, 4, 4, 4).unwrap();
        assert_eq!(
            dual.counts(),
            WeightDistribution::from_u64(&[1, 0, 0, 0, 0]).counts()
        );
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = gf(2);
        let m = MatrixGF::from_rows(f, &[vec![1, 2, 3], vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            LinearCode::new(m),
            Err(CodeError::RankDeficient { rank: 1, .. })
        ));
    }

    #[test]
    fn guard_refuses_large_enumeration() {
        let f = gf(8);
        let big = LinearCode::new(MatrixGF::identity(f, 5)).unwrap();
        assert!(matches!(
            weight_distribution(&big),
            Err(CodeError::TooLarge { .. })
        ));
    }

    #[test]
    fn identity_extended_has_no_dependent_triple() {
        let f = gf(3);
        let id = LinearCode::new(MatrixGF::identity(f, 3)).unwrap();
        assert_eq!(dual_distance_exact(&id, 3), DualDistance::Exceeds(3));
        assert!(matches!(
            min_weight_dual_codewords(&id),
            Err(CodeError::DualDistanceNotThree(_))
        ));
    }

    #[test]
    fn dual_distance_small_weights() {
        let f = gf(3);
        let zero_col = LinearCode::new(
            MatrixGF::from_rows(f.clone(), &[vec![1, 0, 1], vec![0, 0, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(dual_distance_exact(&zero_col, 3), DualDistance::Exactly(1));
        let prop =
            LinearCode::new(MatrixGF::from_rows(f, &[vec![1, 2, 0], vec![1, 2, 1]]).unwrap())
                .unwrap();
        assert_eq!(dual_distance_exact(&prop, 3), DualDistance::Exactly(2));
        assert_eq!(dual_distance_exact(&prop, 1), DualDistance::Exceeds(1));
    }

    #[test]
    fn macwilliams_rejects_inconsistent_input() {
        // A_1 would be (6 - 30) / 16
        let bogus = WeightDistribution::from_u64(&[1, 0, 15]);
        assert!(matches!(
            macwilliams(&bogus, 2, 2, 4),
            Err(CodeError::InconsistentDistribution(_))
        ));
        let wrong_total = WeightDistribution::from_u64(&[1, 1, 1]);
        assert!(macwilliams(&wrong_total, 2, 1, 4).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 3), BigInt::from(220));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial_row(4), [1, 4, 6, 4, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn enumerator_string_format() {
        let d = WeightDistribution::from_u64(&[1, 0, 3, 4]);
        assert_eq!(d.enumerator_string(), "1 + 3z^2 + 4z^3");
    }
}
