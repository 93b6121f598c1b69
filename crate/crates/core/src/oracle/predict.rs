//! Closed-form predictions for the graph families with known resolutions.
//!
//! Regularity statements are max-formulas over index tuples; they are
//! evaluated here by brute force so the code reads like the statements.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Citation tag of a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Powers of the cover ideal of `K_{m,n}`.
    CompleteBipartite,
    /// The Cohen-Macaulay bipartite family on `x1..xn, y1..yn`.
    CmBipartite,
    /// `J_G` for `K_{U1,V} ∪ K_{U2,V2}`, first power.
    NestedBipartiteFirst,
    /// Powers of the nested bipartite cover ideal.
    NestedBipartitePowers,
    /// One of the closed-form cases derived from the nested max-formula.
    NestedClosedForm,
    /// Powers of the cover ideal of `K_3`, or complete tripartite graphs.
    Tripartite,
    /// Powers of the cover ideal of `K_4`, or complete 4-partite graphs.
    FourPartite,
    /// Depth of `R/J^s` for the complete graph `K_m`.
    CompleteGraphDepth,
    /// Conjectured Betti numbers of powers of the cover ideal of `K_m`.
    CompleteGraphBettiConjecture,
    /// Conjectured regularity of powers for complete `m`-partite graphs.
    MultipartiteRegConjecture,
}

impl Source {
    pub fn is_conjecture(self) -> bool {
        matches!(
            self,
            Source::CompleteGraphBettiConjecture | Source::MultipartiteRegConjecture
        )
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(v.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Reg,
    BettiVector,
    Mu,
    Pdim,
    Depth,
    HilbertNumerator,
    /// 1 when the grevlex generator order gives linear quotients.
    LinearQuotients,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Vector(Vec<i64>),
    /// Coefficients in increasing degree.
    Polynomial(Vec<i64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Vector(v) | Value::Polynomial(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub source: Source,
    pub quantity: Quantity,
    pub params: BTreeMap<String, i64>,
    pub value: Value,
    /// Name of the closed-form case, when the prediction is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

impl Prediction {
    pub fn new(source: Source, quantity: Quantity, params: &[(&str, i64)], value: Value) -> Self {
        Prediction {
            source,
            quantity,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value,
            case: None,
        }
    }

    pub fn is_conjecture(&self) -> bool {
        self.source.is_conjecture()
    }
}

/// Exact binomial coefficient; zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All tuples of `len` non-negative integers with sum `total`, in
/// lexicographic order.
pub fn compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(total - first, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::with_capacity(len), &mut out);
    out
}

fn arg(ok: bool, msg: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg.into()))
    }
}

/// `reg(J^s) = sn + m - 1` for `K_{m,n}` with `m <= n`.
pub fn predict_reg_complete_bipartite(m: usize, n: usize, s: usize) -> Result<i64> {
    arg(m >= 1 && m <= n, "complete bipartite prediction needs 1 <= m <= n")?;
    arg(s >= 1, "power must be at least 1")?;
    Ok((s * n + m) as i64 - 1)
}

/// `beta_i = C(m-1, i-1) C(s+m-i, m-1)` for `i = 1..m`, cut after the last
/// nonzero entry. Proven for `m = 3, 4`; conjectured in general for
/// `s >= m-1`.
pub fn predict_betti_km_power(m: usize, s: usize) -> Result<Vec<i64>> {
    arg(m >= 3, "complete graph prediction needs m >= 3")?;
    arg(s >= 1, "power must be at least 1")?;
    let (m, s) = (m as i64, s as i64);
    let mut v: Vec<i64> = (1..=m)
        .map(|i| binomial(m - 1, i - 1) * binomial(s + m - i, m - 1))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    Ok(v)
}

/// `depth R/J^s = max(0, m - s - 1)` for the cover ideal of `K_m`.
pub fn predict_depth_km_power(m: usize, s: usize) -> i64 {
    (m as i64 - s as i64 - 1).max(0)
}

/// Where a multipartite regularity value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipartiteRange {
    Theorem,
    Conjecture,
}

/// The parameter range in which the multipartite max-formula is claimed.
pub fn multipartite_range(parts: usize, s: usize) -> Option<MultipartiteRange> {
    match parts {
        3 if s >= 2 => Some(MultipartiteRange::Theorem),
        4 if s >= 3 => Some(MultipartiteRange::Theorem),
        m if m >= 5 && s + 1 >= m => Some(MultipartiteRange::Conjecture),
        _ => None,
    }
}

/// Maximum of `alpha + k (n_m - 1)` over tuples `l` with `sum l = s` and
/// `l_1 >= k`, for `k = 0..m-1`, where
/// `alpha = sum_i (s - l_{m+1-i}) n_i`.
///
/// The formula is evaluated regardless of whether `s` lies in the claimed
/// range; see [`multipartite_range`].
pub fn multipartite_max_formula(part_sizes: &[usize], s: usize) -> Result<i64> {
    let m = part_sizes.len();
    arg(m >= 2, "multipartite prediction needs at least two parts")?;
    arg(part_sizes.iter().all(|&n| n >= 1), "part sizes must be positive")?;
    arg(s >= 1, "power must be at least 1")?;
    let n_last = part_sizes[m - 1] as i64;
    let mut best = i64::MIN;
    for l in compositions(s, m) {
        let alpha: i64 = (0..m)
            .map(|i| (s - l[m - 1 - i]) as i64 * part_sizes[i] as i64)
            .sum();
        let kmax = l[0].min(m - 1) as i64;
        best = best.max(alpha + kmax * (n_last - 1));
        best = best.max(alpha);
    }
    Ok(best)
}

/// Multipartite regularity prediction with its provenance, or `None` when
/// no statement covers `(parts, s)`.
pub fn predict_reg_multipartite(
    part_sizes: &[usize],
    s: usize,
) -> Result<Option<(i64, MultipartiteRange)>> {
    let value = multipartite_max_formula(part_sizes, s)?;
    Ok(multipartite_range(part_sizes.len(), s).map(|r| (value, r)))
}

/// Nested bipartite regularity. `s = 1` uses
/// `max(n + m2 - 1, m + n1 - 1)`; larger `s` maximizes the four shift
/// families of the explicit resolution.
pub fn predict_reg_nested_bipartite(
    n1: usize,
    n2: usize,
    m1: usize,
    m2: usize,
    s: usize,
) -> Result<i64> {
    arg(n1 >= 1 && n2 >= 1 && m1 >= 1 && m2 >= 1, "block sizes must be positive")?;
    arg(s >= 1, "power must be at least 1")?;
    let (n1, n2, m1, m2, si) = (n1 as i64, n2 as i64, m1 as i64, m2 as i64, s as i64);
    if s == 1 {
        let (n, m) = (n1 + n2, m1 + m2);
        return Ok((n + m2 - 1).max(m + n1 - 1));
    }
    let mut best = i64::MIN;
    for i in 0..=si {
        for j in 0..=i {
            best = best.max((si - j) * n1 + (si - i) * n2 + j * m1 + i * m2);
            if j < i {
                best = best.max((si - j) * n1 + (si - i) * n2 + (j + 1) * m1 + i * m2 - 1);
                best = best.max((si - j) * n1 + (si - i + 1) * n2 + j * m1 + i * m2 - 1);
                if i < si {
                    best = best
                        .max((si - j) * n1 + (si - i) * n2 + (j + 1) * m1 + (i + 1) * m2 - 2);
                }
            }
        }
    }
    Ok(best)
}

/// A named closed form for nested bipartite regularity, valid for `s >= 2`
/// when its precondition holds.
#[derive(Debug, Clone, Copy)]
pub struct NestedClosedForm {
    pub name: &'static str,
    pub applies: fn(i64, i64, i64, i64) -> bool,
    pub value: fn(i64, i64, i64, i64, i64) -> i64,
}

/// The closed forms whose derivations are worked out in full.
pub const NESTED_CLOSED_FORMS: [NestedClosedForm; 4] = [
    NestedClosedForm {
        name: "m1 = m2 = 1: ns",
        applies: |_, _, m1, m2| m1 == 1 && m2 == 1,
        value: |n1, n2, _, _, s| (n1 + n2) * s,
    },
    NestedClosedForm {
        name: "all blocks equal to l > 1: 2ls + 2l - 2",
        applies: |n1, n2, m1, m2| n1 == n2 && n2 == m1 && m1 == m2 && n1 > 1,
        value: |l, _, _, _, s| 2 * l * s + 2 * l - 2,
    },
    NestedClosedForm {
        name: "n1 >= m2 >= n2 = m1: (n1+m2)s + n2+m1-2",
        applies: |n1, n2, m1, m2| n2 == m1 && n1 >= m2 && m2 >= n2,
        value: |n1, n2, m1, m2, s| (n1 + m2) * s + n2 + m1 - 2,
    },
    NestedClosedForm {
        name: "n1 >= n2 = m1 >= m2 or n2 = m1 >= n1 >= m2: ns + 2m2 - 2",
        applies: |n1, n2, m1, m2| n2 == m1 && ((n1 >= n2 && n2 >= m2) || (n2 >= n1 && n1 >= m2)),
        value: |n1, n2, _, m2, s| (n1 + n2) * s + 2 * m2 - 2,
    },
];

/// Tabulated closed forms for the `n2 = m1` case given without derivation.
pub const NESTED_TABLE_FORMS: [NestedClosedForm; 3] = [
    NestedClosedForm {
        name: "n2 = m1 <= n1 <= m2: (n1+m2)s + m1+n2-2",
        applies: |n1, n2, m1, m2| n2 == m1 && m1 <= n1 && n1 <= m2,
        value: |n1, n2, m1, m2, s| (n1 + m2) * s + m1 + n2 - 2,
    },
    NestedClosedForm {
        name: "n1 <= n2 = m1 <= m2: (m1+m2)s + n1+m2-2",
        applies: |n1, n2, m1, m2| n2 == m1 && n1 <= n2 && m1 <= m2,
        value: |n1, _, m1, m2, s| (m1 + m2) * s + n1 + m2 - 2,
    },
    NestedClosedForm {
        name: "n1 <= m2 <= n2 = m1: (m1+m2)s + n1+m2-2",
        applies: |n1, n2, m1, m2| n2 == m1 && n1 <= m2 && m2 <= n2,
        value: |n1, _, m1, m2, s| (m1 + m2) * s + n1 + m2 - 2,
    },
];

/// `(mu(J_G), pdim R/J_G, slope of reg J_G^s)` for the Cohen-Macaulay
/// bipartite family: `(2^{n-1} + 1, n, n)`.
pub fn predict_mu_and_pdim_cm_family(n: usize) -> Result<(i64, i64, i64)> {
    arg((2..=62).contains(&n), "family parameter must satisfy 2 <= n <= 62")?;
    Ok(((1i64 << (n - 1)) + 1, n as i64, n as i64))
}

/// `(C(s+2,2), 2C(s+1,2), C(s,2))` with trailing zeros removed (so `s = 1`
/// gives `(3, 2)`).
pub fn predict_betti_p4_power(s: usize) -> Result<Vec<i64>> {
    arg(s >= 1, "power must be at least 1")?;
    let s = s as i64;
    let mut v = vec![binomial(s + 2, 2), 2 * binomial(s + 1, 2), binomial(s, 2)];
    while v.last() == Some(&0) {
        v.pop();
    }
    Ok(v)
}

/// Reduced Hilbert numerator of `R/I^s` for `K_3`, over `(1-t)`:
/// `sum_{i<2s} (i+1) t^i - (C(s+2,2) - 2s - 1) t^{2s}`.
pub fn predict_hilbert_k3(s: usize) -> Vec<i64> {
    let si = s as i64;
    let mut c: Vec<i64> = (0..2 * s).map(|i| i as i64 + 1).collect();
    c.push(-(binomial(si + 2, 2) - 2 * si - 1));
    trim_zeros(c)
}

/// Reduced Hilbert numerator of `R/I^s` for `K_4`, over `(1-t)^2`:
/// `sum_{i<3s} (i+1) t^i - (C(s+3,3) - 3s - 1) t^{3s} + C(s,3) t^{3s+1}`.
pub fn predict_hilbert_k4(s: usize) -> Vec<i64> {
    let si = s as i64;
    let mut c: Vec<i64> = (0..3 * s).map(|i| i as i64 + 1).collect();
    c.push(-(binomial(si + 3, 3) - 3 * si - 1));
    c.push(binomial(si, 3));
    trim_zeros(c)
}

fn trim_zeros(mut c: Vec<i64>) -> Vec<i64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}
