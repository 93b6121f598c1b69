//! Monomials over a positively graded polynomial ring and monomial ideals
//! given by their minimal generators.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Degree of each ring variable. All entries are positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading(Vec<u32>);

impl Grading {
    pub fn new(var_degrees: Vec<u32>) -> Result<Self> {
        if var_degrees.is_empty() {
            return Err(Error::InvalidIdeal("grading has no variables".into()));
        }
        if var_degrees.contains(&0) {
            return Err(Error::InvalidIdeal("variable degrees must be >= 1".into()));
        }
        Ok(Grading(var_degrees))
    }

    /// The standard grading on `n` variables.
    pub fn standard(n: usize) -> Self {
        Grading(vec![1; n.max(1)])
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|&d| d == 1)
    }

    pub fn degree_of(&self, exps: &[u32]) -> u64 {
        exps.iter()
            .zip(&self.0)
            .map(|(&e, &d)| e as u64 * d as u64)
            .sum()
    }
}

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Monomial(e)
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(num_vars: usize, support: &[usize]) -> Self {
        let mut e = vec![0; num_vars];
        for &v in support {
            e[v] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn degree(&self, grading: &Grading) -> u64 {
        grading.degree_of(&self.0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison with `x1 > x2 > ...`, using the
    /// weighted degree from `grading`.
    pub fn grevlex_cmp(&self, other: &Monomial, grading: &Grading) -> Ordering {
        self.degree(grading)
            .cmp(&other.degree(grading))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        // smaller exponent in the last differing variable wins
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }

    /// Renders with caller-supplied variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .join("*")
    }
}

/// Text form `x1^2*x3` with 1-based variable indices; `1` is the unit.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.0.len()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

impl Monomial {
    /// Parses the text form in a ring with `num_vars` variables.
    pub fn parse(text: &str, num_vars: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; num_vars];
        if text == "1" {
            return Ok(Monomial(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                ),
                None => (factor, 1),
            };
            let index: usize = var
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad variable '{var}'")))?;
            if index == 0 || index > num_vars {
                return Err(Error::Parse(format!(
                    "variable x{index} outside x1..x{num_vars}"
                )));
            }
            exps[index - 1] = exps[index - 1].checked_add(exp).ok_or(Error::Overflow)?;
        }
        Ok(Monomial(exps))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses with as many variables as the largest index mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let max_index = s
            .split('*')
            .filter_map(|f| {
                f.trim()
                    .split('^')
                    .next()
                    .and_then(|v| v.strip_prefix('x'))
                    .and_then(|i| i.parse::<usize>().ok())
            })
            .max()
            .unwrap_or(1);
        Monomial::parse(s, max_index)
    }
}

/// A nonzero proper monomial ideal, held as its minimal generators in
/// canonical (ascending graded reverse lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    grading: Grading,
    gens: Vec<Monomial>,
}

/// Outcome of a linear-quotients check along a generator ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearQuotients {
    pub holds: bool,
    /// Position (within the ordering) of the first generator whose colon
    /// ideal needs a generator of degree at least two.
    pub first_failure: Option<usize>,
}

/// Reduces a list of monomials to its minimal elements under divisibility.
pub fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by_key(|m| m.total_degree());
    let mut seen = HashSet::new();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monos.len());
    for m in monos {
        if !seen.insert(m.clone()) {
            continue;
        }
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing and sorting them.
    pub fn new(grading: Grading, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidIdeal("the zero ideal is not modelled".into()));
        }
        let n = grading.num_vars();
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != n) {
            return Err(Error::InvalidIdeal(format!(
                "generator {bad} has {} exponents, ring has {n} variables",
                bad.num_vars()
            )));
        }
        if gens.iter().any(Monomial::is_one) {
            return Err(Error::InvalidIdeal("the unit ideal is not modelled".into()));
        }
        let mut gens = minimalize(gens);
        gens.sort_by(|a, b| a.grevlex_cmp(b, &grading));
        Ok(MonomialIdeal { grading, gens })
    }

    pub fn with_standard_grading(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.first().map(Monomial::num_vars).unwrap_or(0);
        MonomialIdeal::new(Grading::standard(n), gens)
    }

    /// Builds from text monomials such as `["x1*x2", "x3^2"]`.
    pub fn parse(grading: Grading, gens: &[&str]) -> Result<Self> {
        let n = grading.num_vars();
        let gens = gens
            .iter()
            .map(|g| Monomial::parse(g, n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(grading, gens)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn num_vars(&self) -> usize {
        self.grading.num_vars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// Largest weighted degree of a minimal generator.
    pub fn max_generator_degree(&self) -> u64 {
        self.gens
            .iter()
            .map(|g| g.degree(&self.grading))
            .max()
            .unwrap_or(0)
    }

    pub fn min_generator_degree(&self) -> u64 {
        self.gens
            .iter()
            .map(|g| g.degree(&self.grading))
            .min()
            .unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Product ideal `self * other`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.grading != other.grading {
            return Err(Error::InvalidIdeal("product of ideals in different rings".into()));
        }
        let gens = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.grading.clone(), gens)
    }

    /// `I^s`, from all multiset products of `s` generators.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::InvalidArgument(
                "power 0 is the unit ideal, which is not modelled".into(),
            ));
        }
        let one = Monomial::one(self.num_vars());
        let gens = self
            .gens
            .iter()
            .combinations_with_replacement(s as usize)
            .map(|combo| {
                combo
                    .into_iter()
                    .try_fold(one.clone(), |acc, g| acc.checked_mul(g))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.grading.clone(), gens)
    }

    /// `(I : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::InvalidIdeal("colon by monomial of wrong length".into()));
        }
        if self.contains(m) {
            return Err(Error::UnitIdeal);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(self.grading.clone(), gens)
    }

    /// Checks whether `(f_1, ..., f_{j-1}) : f_j` is generated by variables for
    /// every `j`, where `f` is the generator list permuted by `order`.
    pub fn has_linear_quotients(&self, order: &[usize]) -> Result<LinearQuotients> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.gens.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(
                "ordering is not a permutation of the generators".into(),
            ));
        }
        for j in 1..order.len() {
            let fj = &self.gens[order[j]];
            let earlier: Vec<Monomial> = order[..j].iter().map(|&i| self.gens[i].clone()).collect();
            let colon = MonomialIdeal::new(self.grading.clone(), earlier)?.colon_by_monomial(fj)?;
            if colon.gens.iter().any(|g| g.total_degree() >= 2) {
                return Ok(LinearQuotients {
                    holds: false,
                    first_failure: Some(j),
                });
            }
        }
        Ok(LinearQuotients {
            holds: true,
            first_failure: None,
        })
    }

    /// Linear quotients along the canonical ascending grevlex order.
    pub fn has_linear_quotients_grevlex(&self) -> LinearQuotients {
        let order: Vec<usize> = (0..self.gens.len()).collect();
        self.has_linear_quotients(&order)
            .expect("identity order is a permutation")
    }

    /// Monomial regular-sequence criterion: generators pairwise coprime.
    pub fn is_complete_intersection(&self) -> bool {
        self.gens
            .iter()
            .tuple_combinations()
            .all(|(a, b)| a.is_coprime(b))
    }

    /// Alexander dual of a squarefree ideal in the standard grading: the
    /// ideal of minimal transversals of the generator supports.
    pub fn alexander_dual_squarefree(&self) -> Result<MonomialIdeal> {
        if !self.grading.is_standard() {
            return Err(Error::InvalidIdeal(
                "Alexander dual needs the standard grading".into(),
            ));
        }
        if !self.is_squarefree() {
            return Err(Error::InvalidIdeal(
                "Alexander dual needs a squarefree ideal".into(),
            ));
        }
        let n = self.num_vars();
        if n > 64 {
            return Err(Error::TooLarge {
                what: "ring",
                size: n,
                limit: 64,
            });
        }
        let edges: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let transversals = minimal_transversals(&edges);
        let gens = transversals
            .into_iter()
            .map(|t| Monomial::squarefree(n, &mask_bits(t)))
            .collect();
        MonomialIdeal::new(self.grading.clone(), gens)
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_generators().join(", "))
    }
}

/// Minimal hitting sets of a family of nonempty sets, by Berge's
/// incremental product.
fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &e in edges {
        let mut next: Vec<u64> = Vec::new();
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    next.push(t | low);
                    bits &= bits - 1;
                }
            }
        }
        next.sort_unstable_by_key(|t| t.count_ones());
        next.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(next.len());
        for t in next {
            if !kept.iter().any(|&k| k & !t == 0) {
                kept.push(t);
            }
        }
        current = kept;
    }
    current
}

fn mask_bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Cover ideal `J_G`: one generator per minimal vertex cover.
///
/// In compressed mode the ring has one variable per part of the graph's
/// partition, of degree equal to the part size, and each cover (which must be a
/// union of parts) becomes the product of its parts' variables.
pub fn cover_ideal(g: &Graph, compressed: bool) -> Result<MonomialIdeal> {
    cover_ideal_bounded(g, compressed, crate::graph::DEFAULT_MAX_VERTICES)
}

/// [`cover_ideal`] with an explicit bound on the number of vertices for the
/// cover enumeration.
pub fn cover_ideal_bounded(g: &Graph, compressed: bool, max_vertices: usize) -> Result<MonomialIdeal> {
    let covers = g.minimal_vertex_covers_bounded(max_vertices)?;
    if !compressed {
        let n = g.vertex_count();
        let gens = covers
            .iter()
            .map(|c| Monomial::squarefree(n, &c.vertices))
            .collect();
        return MonomialIdeal::new(Grading::standard(n), gens);
    }
    let parts = g.parts().ok_or_else(|| {
        Error::InvalidIdeal("compressed cover ideal needs a graph with parts".into())
    })?;
    let grading = Grading::new(parts.iter().map(|p| p.len() as u32).collect())?;
    let mut gens = Vec::with_capacity(covers.len());
    for c in &covers {
        let mut exps = vec![0u32; parts.len()];
        let mut covered = 0;
        for (k, part) in parts.iter().enumerate() {
            let inside = part.iter().filter(|&&v| c.contains(v)).count();
            if inside == part.len() {
                exps[k] = 1;
                covered += inside;
            } else if inside != 0 {
                return Err(Error::InvalidIdeal(format!(
                    "minimal cover {:?} splits part {k}; graph cannot be compressed",
                    c.vertices
                )));
            }
        }
        debug_assert_eq!(covered, c.len());
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(grading, gens)
}

/// Edge ideal `I(G)` in the standard grading.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let n = g.vertex_count();
    let gens = g
        .edges()
        .map(|(a, b)| Monomial::squarefree(n, &[a, b]))
        .collect();
    MonomialIdeal::new(Grading::standard(n), gens)
}
