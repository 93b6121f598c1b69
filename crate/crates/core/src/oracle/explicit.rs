//! Explicit minimal free resolutions for three small families, written out
//! basis element by basis element, plus a validator that checks them against
//! the engine.
//!
//! * `K3`: powers of `(x1x2, x1x3, x2x3)`, length 3.
//! * `K4`: powers of the cover ideal of `K_4`, length 4 for `s >= 3`.
//! * `P4`: powers of `(X1X2, X1Y2, Y1Y2)` in `K[X1, X2, Y1, Y2]`, length 3.
//!
//! With a non-standard grading the same matrices resolve the compressed
//! cover ideals of complete tripartite, 4-partite and nested bipartite graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{rngs::StdRng, Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Grading, Monomial, MonomialIdeal};
use crate::oracle::predict::compositions;
use crate::resolution::linalg::rank_mod_p;
use crate::resolution::BettiTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    K3,
    K4,
    P4,
}

impl Family {
    pub fn num_vars(self) -> usize {
        match self {
            Family::K3 => 3,
            Family::K4 | Family::P4 => 4,
        }
    }

    /// Generators of the base ideal in the family's own variables.
    pub fn base_ideal(self, grading: Grading) -> Result<MonomialIdeal> {
        let gens: &[&str] = match self {
            Family::K3 => &["x1*x2", "x1*x3", "x2*x3"],
            Family::K4 => &["x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"],
            // X1 = x1, X2 = x2, Y1 = x3, Y2 = x4
            Family::P4 => &["x1*x2", "x1*x4", "x3*x4"],
        };
        MonomialIdeal::parse(grading, gens)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::K3 => "K3",
            Family::K4 => "K4",
            Family::P4 => "P4",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "K3" => Ok(Family::K3),
            "K4" => Ok(Family::K4),
            "P4" => Ok(Family::P4),
            _ => Err(Error::Parse(format!("unknown complex family '{s}' (expected K3, K4 or P4)"))),
        }
    }
}

/// One nonzero entry `coeff * mono` in row `row` of a column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub row: usize,
    pub coeff: i64,
    pub mono: Monomial,
}

/// A map `R^cols -> R^rows` stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMap {
    pub rows: usize,
    pub cols: Vec<Vec<Term>>,
}

impl SparseMap {
    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }
}

#[derive(Debug, Clone)]
pub struct ExplicitComplex {
    pub family: Family,
    pub power: u32,
    pub grading: Grading,
    /// `labels[k]` names the basis of the free module in homological degree
    /// `k`; `labels[0]` is the single generator of `R`.
    pub labels: Vec<Vec<String>>,
    /// `maps[k]` is the differential from degree `k + 1` to degree `k`.
    pub maps: Vec<SparseMap>,
}

/// Indexes basis elements of one free module by a key and keeps the columns.
struct Level<K> {
    index: HashMap<K, usize>,
    labels: Vec<String>,
    cols: Vec<Vec<Term>>,
}

impl<K: std::hash::Hash + Eq + Clone> Level<K> {
    fn new() -> Self {
        Level {
            index: HashMap::new(),
            labels: Vec::new(),
            cols: Vec::new(),
        }
    }

    fn reserve(&mut self, key: K, label: String) {
        let idx = self.labels.len();
        let prev = self.index.insert(key, idx);
        assert!(prev.is_none(), "duplicate basis element {label}");
        self.labels.push(label);
        self.cols.push(Vec::new());
    }

    fn idx(&self, key: &K) -> usize {
        *self
            .index
            .get(key)
            .expect("differential refers to a basis element outside the index range")
    }

    fn len(&self) -> usize {
        self.labels.len()
    }
}

fn var(n: usize, i: usize) -> Monomial {
    Monomial::var(n, i - 1)
}

fn term<K: std::hash::Hash + Eq + Clone>(
    target: &Level<K>,
    coeff: i64,
    mono: Monomial,
    key: K,
) -> Term {
    Term {
        row: target.idx(&key),
        coeff,
        mono,
    }
}

fn finish<K>(rows: usize, level: Level<K>) -> (Vec<String>, SparseMap) {
    (
        level.labels,
        SparseMap {
            rows,
            cols: level.cols,
        },
    )
}

type L3 = [usize; 3];
type L4 = [usize; 4];

fn tuples3(s: usize, min_first: usize) -> Vec<L3> {
    compositions(s, 3)
        .into_iter()
        .filter(|l| l[0] >= min_first)
        .map(|l| [l[0], l[1], l[2]])
        .collect()
}

fn tuples4(s: usize, min_first: usize) -> Vec<L4> {
    compositions(s, 4)
        .into_iter()
        .filter(|l| l[0] >= min_first)
        .map(|l| [l[0], l[1], l[2], l[3]])
        .collect()
}

/// Builds the explicit complex for `family` and power `s`. Trailing zero
/// modules (when `s` is below the length of the full resolution) are
/// omitted.
pub fn build_explicit_complex(family: Family, s: u32, grading: &Grading) -> Result<ExplicitComplex> {
    if s == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    if grading.num_vars() != family.num_vars() {
        return Err(Error::InvalidArgument(format!(
            "{family} complex lives in {} variables, grading has {}",
            family.num_vars(),
            grading.num_vars()
        )));
    }
    let (labels, maps) = match family {
        Family::K3 => build_k3(s as usize),
        Family::K4 => build_k4(s as usize),
        Family::P4 => build_p4(s as usize),
    };
    let mut labels_all = vec![vec!["1".to_string()]];
    let mut maps_all = Vec::new();
    for (l, m) in labels.into_iter().zip(maps) {
        if m.cols.is_empty() {
            break;
        }
        labels_all.push(l);
        maps_all.push(m);
    }
    Ok(ExplicitComplex {
        family,
        power: s,
        grading: grading.clone(),
        labels: labels_all,
        maps: maps_all,
    })
}

fn first_map<K: std::hash::Hash + Eq + Clone>(level: &mut Level<K>, gens: Vec<(K, Monomial)>) {
    for (key, mono) in gens {
        let c = level.idx(&key);
        level.cols[c].push(Term { row: 0, coeff: 1, mono });
    }
}

fn build_k3(s: usize) -> (Vec<Vec<String>>, Vec<SparseMap>) {
    let x = |i| var(3, i);
    let f = |l: L3| Monomial::new(vec![(s - l[2]) as u32, (s - l[1]) as u32, (s - l[0]) as u32]);

    let mut b1: Level<L3> = Level::new();
    for l in tuples3(s, 0) {
        b1.reserve(l, format!("e_{{{},{},{}}}", l[0], l[1], l[2]));
    }
    let gens = tuples3(s, 0).into_iter().map(|l| (l, f(l))).collect();
    first_map(&mut b1, gens);

    // (1, l) is e_{1,(l2+1,l3),l1-1}; (2, l) is e_{2,(l1,l2),l3}
    let mut b2: Level<(u8, L3)> = Level::new();
    for l in tuples3(s, 1) {
        let [l1, l2, l3] = l;
        b2.reserve((1, l), format!("e_{{1,({},{}),{}}}", l2 + 1, l3, l1 - 1));
        b2.reserve((2, l), format!("e_{{2,({},{}),{}}}", l1, l2, l3));
    }
    for l in tuples3(s, 1) {
        let [l1, l2, l3] = l;
        let c1 = b2.idx(&(1, l));
        b2.cols[c1] = vec![
            term(&b1, 1, x(2), [l1 - 1, l2 + 1, l3]),
            term(&b1, -1, x(1), [l1 - 1, l2, l3 + 1]),
        ];
        let c2 = b2.idx(&(2, l));
        b2.cols[c2] = vec![
            term(&b1, 1, x(3), l),
            term(&b1, -1, x(2), [l1 - 1, l2 + 1, l3]),
        ];
    }

    let mut b3: Level<L3> = Level::new();
    for l in tuples3(s, 2) {
        b3.reserve(l, format!("H_{{{},{},{}}}", l[0], l[1], l[2]));
    }
    for l in tuples3(s, 2) {
        let [l1, l2, l3] = l;
        let c = b3.idx(&l);
        // E_l; the leading coefficient is x1, which makes the composite with
        // the second differential vanish
        b3.cols[c] = vec![
            term(&b2, -1, x(1), (2, [l1 - 1, l2, l3 + 1])),
            term(&b2, 1, x(2), (2, [l1 - 1, l2 + 1, l3])),
            term(&b2, 1, x(2), (1, [l1 - 1, l2 + 1, l3])),
            term(&b2, -1, x(3), (1, l)),
        ];
    }

    let n1 = b1.len();
    let n2 = b2.len();
    let (la1, m1) = finish(1, b1);
    let (la2, m2) = finish(n1, b2);
    let (la3, m3) = finish(n2, b3);
    (vec![la1, la2, la3], vec![m1, m2, m3])
}

fn build_k4(s: usize) -> (Vec<Vec<String>>, Vec<SparseMap>) {
    let x = |i| var(4, i);
    let f = |l: L4| {
        Monomial::new(vec![
            (s - l[3]) as u32,
            (s - l[2]) as u32,
            (s - l[1]) as u32,
            (s - l[0]) as u32,
        ])
    };

    let mut b1: Level<L4> = Level::new();
    for l in tuples4(s, 0) {
        b1.reserve(l, format!("e_{{{},{},{},{}}}", l[0], l[1], l[2], l[3]));
    }
    first_map(&mut b1, tuples4(s, 0).into_iter().map(|l| (l, f(l))).collect());

    // Keys (t, l) with l1 >= 1:
    //   (1, l) is e_{(1,l1-1,l2),l3+1,l4}
    //   (2, l) is e_{(2,l1-1,l4),l2+1,l3}
    //   (3, l) is e_{(3,l3,l4),l1,l2}
    let mut b2: Level<(u8, L4)> = Level::new();
    for l in tuples4(s, 1) {
        let [l1, l2, l3, l4] = l;
        b2.reserve((1, l), format!("e_{{(1,{},{}),{},{}}}", l1 - 1, l2, l3 + 1, l4));
        b2.reserve((2, l), format!("e_{{(2,{},{}),{},{}}}", l1 - 1, l4, l2 + 1, l3));
        b2.reserve((3, l), format!("e_{{(3,{},{}),{},{}}}", l3, l4, l1, l2));
    }
    for l in tuples4(s, 1) {
        let [l1, l2, l3, l4] = l;
        let c = b2.idx(&(1, l));
        b2.cols[c] = vec![
            term(&b1, 1, x(2), [l1 - 1, l2, l3 + 1, l4]),
            term(&b1, -1, x(1), [l1 - 1, l2, l3, l4 + 1]),
        ];
        let c = b2.idx(&(2, l));
        b2.cols[c] = vec![
            term(&b1, 1, x(3), [l1 - 1, l2 + 1, l3, l4]),
            term(&b1, -1, x(2), [l1 - 1, l2, l3 + 1, l4]),
        ];
        let c = b2.idx(&(3, l));
        b2.cols[c] = vec![
            term(&b1, 1, x(4), l),
            term(&b1, -1, x(3), [l1 - 1, l2 + 1, l3, l4]),
        ];
    }

    // Second-syzygy labels in written form converted to keys of b2.
    let e1 = |a: usize, b: usize, c: usize, d: usize| (1u8, [a + 1, b, c - 1, d]);
    let e2 = |a: usize, d: usize, b: usize, c: usize| (2u8, [a + 1, b - 1, c, d]);
    let e3 = |c: usize, d: usize, a: usize, b: usize| (3u8, [a, b, c, d]);

    let mut b3: Level<(u8, L4)> = Level::new();
    for l in tuples4(s, 2) {
        for k in 1..=3u8 {
            b3.reserve((k, l), format!("E_{{{},{},{},{},{}}}", k, l[0], l[1], l[2], l[3]));
        }
    }
    for l in tuples4(s, 2) {
        let [l1, l2, l3, l4] = l;
        let c = b3.idx(&(1, l));
        b3.cols[c] = vec![
            term(&b2, 1, x(4), e2(l1 - 1, l4, l2 + 1, l3)),
            term(&b2, 1, x(4), e1(l1 - 1, l2, l3 + 1, l4)),
            term(&b2, -1, x(3), e3(l3, l4, l1 - 1, l2 + 1)),
            term(&b2, -1, x(3), e2(l1 - 2, l4, l2 + 2, l3)),
            term(&b2, -1, x(3), e1(l1 - 2, l2 + 1, l3 + 1, l4)),
            term(&b2, 1, x(1), e3(l3, l4 + 1, l1 - 1, l2)),
        ];
        let c = b3.idx(&(2, l));
        b3.cols[c] = vec![
            term(&b2, 1, x(4), e1(l1 - 1, l2, l3 + 1, l4)),
            term(&b2, -1, x(3), e1(l1 - 2, l2 + 1, l3 + 1, l4)),
            term(&b2, -1, x(2), e3(l3 + 1, l4, l1 - 1, l2)),
            term(&b2, 1, x(1), e3(l3, l4 + 1, l1 - 1, l2)),
        ];
        let c = b3.idx(&(3, l));
        b3.cols[c] = vec![
            term(&b2, 1, x(3), e1(l1 - 2, l2 + 1, l3 + 1, l4)),
            term(&b2, -1, x(2), e2(l1 - 2, l4, l2 + 1, l3 + 1)),
            term(&b2, -1, x(2), e1(l1 - 2, l2, l3 + 2, l4)),
            term(&b2, 1, x(1), e2(l1 - 2, l4 + 1, l2 + 1, l3)),
        ];
    }

    let mut b4: Level<L4> = Level::new();
    for l in tuples4(s, 3) {
        b4.reserve(l, format!("G_{{{},{},{},{}}}", l[0], l[1], l[2], l[3]));
    }
    for l in tuples4(s, 3) {
        let [l1, l2, l3, l4] = l;
        let c = b4.idx(&l);
        b4.cols[c] = vec![
            term(&b3, 1, x(4), (3, l)),
            term(&b3, -1, x(3), (2, [l1 - 1, l2 + 1, l3, l4])),
            term(&b3, -1, x(3), (3, [l1 - 1, l2 + 1, l3, l4])),
            term(&b3, 1, x(2), (1, [l1 - 1, l2, l3 + 1, l4])),
            term(&b3, -1, x(1), (1, [l1 - 1, l2, l3, l4 + 1])),
            term(&b3, 1, x(1), (2, [l1 - 1, l2, l3, l4 + 1])),
        ];
    }

    let (n1, n2, n3) = (b1.len(), b2.len(), b3.len());
    let (la1, m1) = finish(1, b1);
    let (la2, m2) = finish(n1, b2);
    let (la3, m3) = finish(n2, b3);
    let (la4, m4) = finish(n3, b4);
    (vec![la1, la2, la3, la4], vec![m1, m2, m3, m4])
}

fn build_p4(s: usize) -> (Vec<Vec<String>>, Vec<SparseMap>) {
    // variables X1, X2, Y1, Y2
    let (x1, x2, y1, y2) = (var(4, 1), var(4, 2), var(4, 3), var(4, 4));
    // M_{i,j} = (X1X2)^{s-i} (X1Y2)^{i-j} (Y1Y2)^j
    let m = |i: usize, j: usize| Monomial::new(vec![(s - j) as u32, (s - i) as u32, j as u32, i as u32]);

    let mut b1: Level<(usize, usize)> = Level::new();
    let mut gens = Vec::new();
    for i in 0..=s {
        for j in 0..=i {
            b1.reserve((i, j), format!("e_{{{i},{j}}}"));
            gens.push(((i, j), m(i, j)));
        }
    }
    first_map(&mut b1, gens);

    let mut b2: Level<(u8, usize, usize)> = Level::new();
    for i in 1..=s {
        for p in 0..i {
            b2.reserve((1, i, p), format!("e_{{1,{i},{p}}}"));
        }
        for q in 0..i {
            b2.reserve((2, i, q), format!("e_{{2,{i},{q}}}"));
        }
    }
    for i in 1..=s {
        for p in 0..i {
            let c = b2.idx(&(1, i, p));
            b2.cols[c] = vec![
                term(&b1, 1, y1.clone(), (i, p)),
                term(&b1, -1, x1.clone(), (i, p + 1)),
            ];
        }
        for q in 0..i {
            let c = b2.idx(&(2, i, q));
            b2.cols[c] = vec![
                term(&b1, 1, x2.clone(), (i, q)),
                term(&b1, -1, y2.clone(), (i - 1, q)),
            ];
        }
    }

    let mut b3: Level<(usize, usize)> = Level::new();
    for i in 1..s {
        for j in 0..i {
            b3.reserve((i, j), format!("E_{{{i},{j}}}"));
        }
    }
    for i in 1..s {
        for j in 0..i {
            let c = b3.idx(&(i, j));
            b3.cols[c] = vec![
                term(&b2, 1, y2.clone(), (1, i, j)),
                term(&b2, -1, x2.clone(), (1, i + 1, j)),
                term(&b2, 1, y1.clone(), (2, i + 1, j)),
                term(&b2, -1, x1.clone(), (2, i + 1, j + 1)),
            ];
        }
    }

    let (n1, n2) = (b1.len(), b2.len());
    let (la1, m1) = finish(1, b1);
    let (la2, m2) = finish(n1, b2);
    let (la3, m3) = finish(n2, b3);
    (vec![la1, la2, la3], vec![m1, m2, m3])
}

impl ExplicitComplex {
    /// Ranks of the free modules `F_0, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut v = vec![1];
        v.extend(self.maps.iter().map(SparseMap::num_cols));
        v
    }

    /// Multidegree of every basis element, obtained by following the first
    /// entry of each column. `None` if some column is empty.
    pub fn multidegrees(&self) -> Option<Vec<Vec<Monomial>>> {
        let n = self.grading.num_vars();
        let mut out = vec![vec![Monomial::one(n)]];
        for map in &self.maps {
            let prev = out.last().unwrap();
            let mut level = Vec::with_capacity(map.num_cols());
            for col in &map.cols {
                let t = col.first()?;
                level.push(prev[t.row].checked_mul(&t.mono).ok()?);
            }
            out.push(level);
        }
        Some(out)
    }

    /// Weighted degree of every basis element.
    pub fn shifts(&self) -> Option<Vec<Vec<u64>>> {
        Some(
            self.multidegrees()?
                .iter()
                .map(|lv| lv.iter().map(|m| m.degree(&self.grading)).collect())
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexValidation {
    pub family: Family,
    pub power: u32,
    pub grading: Vec<u32>,
    pub ranks: Vec<usize>,
    pub checks: Vec<ComplexCheck>,
}

impl ComplexValidation {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &'static str, failures: Vec<String>) -> ComplexCheck {
    let passed = failures.is_empty();
    let detail = if passed {
        "ok".to_string()
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{} problem(s): {}", failures.len(), shown.join("; "))
    };
    ComplexCheck { name, passed, detail }
}

/// Runs the five structural checks: composites vanish, the first map hits the
/// minimal generators of `ideal`, entries are non-units, multidegrees match
/// the engine table, and the last map is injective.
///
/// `ideal` must be the power the complex was built for and `table` its
/// engine Betti table.
pub fn validate_explicit_complex(
    c: &ExplicitComplex,
    ideal: &MonomialIdeal,
    table: &BettiTable,
) -> ComplexValidation {
    let checks = vec![
        check("d_squared_zero", composites_vanish(c)),
        check("generators", generator_match(c, ideal)),
        check("minimality", minimality(c)),
        check("shifts", shift_match(c, table)),
        check("injective", last_map_injective(c)),
    ];
    ComplexValidation {
        family: c.family,
        power: c.power,
        grading: c.grading.degrees().to_vec(),
        ranks: c.ranks(),
        checks,
    }
}

fn composites_vanish(c: &ExplicitComplex) -> Vec<String> {
    let mut failures = Vec::new();
    for k in 0..c.maps.len().saturating_sub(1) {
        let (a, b) = (&c.maps[k], &c.maps[k + 1]);
        for (j, col) in b.cols.iter().enumerate() {
            let mut acc: BTreeMap<(usize, Monomial), i64> = BTreeMap::new();
            for t in col {
                for u in &a.cols[t.row] {
                    let mono = t.mono.checked_mul(&u.mono).expect("exponent overflow");
                    *acc.entry((u.row, mono)).or_insert(0) += t.coeff * u.coeff;
                }
            }
            if acc.values().any(|&v| v != 0) {
                failures.push(format!(
                    "d{}(d{}({})) != 0",
                    k + 1,
                    k + 2,
                    c.labels[k + 2][j]
                ));
            }
        }
    }
    failures
}

fn generator_match(c: &ExplicitComplex, ideal: &MonomialIdeal) -> Vec<String> {
    let Some(first) = c.maps.first() else {
        return vec!["complex has no maps".into()];
    };
    let mut images: Vec<Monomial> = Vec::new();
    let mut failures = Vec::new();
    for (j, col) in first.cols.iter().enumerate() {
        match col.as_slice() {
            [t] if t.coeff == 1 => images.push(t.mono.clone()),
            _ => failures.push(format!("{} is not sent to a monomial", c.labels[1][j])),
        }
    }
    images.sort();
    let mut gens = ideal.generators().to_vec();
    gens.sort();
    if images != gens {
        failures.push(format!(
            "first map has {} images, ideal has {} minimal generators, sets differ",
            images.len(),
            gens.len()
        ));
    }
    failures
}

fn minimality(c: &ExplicitComplex) -> Vec<String> {
    let mut failures = Vec::new();
    for (k, map) in c.maps.iter().enumerate() {
        for (j, col) in map.cols.iter().enumerate() {
            if col.is_empty() {
                failures.push(format!("{} maps to zero", c.labels[k + 1][j]));
            }
            for t in col {
                if t.coeff == 0 || t.mono.is_one() {
                    failures.push(format!("unit or zero entry in d{}({})", k + 1, c.labels[k + 1][j]));
                }
            }
        }
    }
    failures
}

fn shift_match(c: &ExplicitComplex, table: &BettiTable) -> Vec<String> {
    let mut failures = Vec::new();
    let Some(md) = c.multidegrees() else {
        return vec!["a column is empty, degrees undefined".into()];
    };
    // homogeneity: every entry of a column lands in the same multidegree
    for (k, map) in c.maps.iter().enumerate() {
        for (j, col) in map.cols.iter().enumerate() {
            for t in col {
                if md[k][t.row].checked_mul(&t.mono).ok().as_ref() != Some(&md[k + 1][j]) {
                    failures.push(format!("d{}({}) is not homogeneous", k + 1, c.labels[k + 1][j]));
                }
            }
        }
    }
    let mut ours: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for (i, level) in md.iter().enumerate() {
        for m in level {
            *ours.entry((i, m.clone())).or_insert(0) += 1;
        }
    }
    if &ours != table.multigraded() {
        let ranks = c.ranks();
        let engine = table.betti_vector();
        failures.push(format!(
            "multigraded Betti numbers differ (complex ranks {ranks:?}, engine {engine:?})"
        ));
    }
    failures
}

const INJECTIVITY_PRIME: u64 = 2_147_483_647;

fn last_map_injective(c: &ExplicitComplex) -> Vec<String> {
    let Some(map) = c.maps.last() else {
        return vec!["complex has no maps".into()];
    };
    let n = c.grading.num_vars();
    let p = INJECTIVITY_PRIME;
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    // A full-rank evaluation proves generic full rank; a handful of random
    // points makes a false negative vanishingly unlikely.
    for _ in 0..4 {
        let point: Vec<u64> = (0..n).map(|_| rng.gen_range(1..p)).collect();
        let mut dense = vec![vec![0u64; map.num_cols()]; map.rows];
        for (j, col) in map.cols.iter().enumerate() {
            for t in col {
                let mut v = 1u64;
                for (k, &e) in t.mono.exponents().iter().enumerate() {
                    for _ in 0..e {
                        v = v * point[k] % p;
                    }
                }
                let signed = if t.coeff >= 0 {
                    v * (t.coeff as u64 % p) % p
                } else {
                    (p - v) * ((-t.coeff) as u64 % p) % p
                };
                dense[t.row][j] = (dense[t.row][j] + signed) % p;
            }
        }
        if rank_mod_p(dense, p) == map.num_cols() {
            return Vec::new();
        }
    }
    vec![format!(
        "last map (d{}) has a kernel at every sampled point",
        c.maps.len()
    )]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::{betti_table, BettiOptions};

    fn validate(family: Family, s: u32, grading: Grading) -> ComplexValidation {
        let c = build_explicit_complex(family, s, &grading).unwrap();
        let ideal = family.base_ideal(grading).unwrap().power(s).unwrap();
        let t = betti_table(&ideal, &BettiOptions::default()).unwrap();
        validate_explicit_complex(&c, &ideal, &t)
    }

    #[test]
    fn sizes_match_binomials() {
        let g3 = Grading::standard(3);
        let g4 = Grading::standard(4);
        assert_eq!(build_explicit_complex(Family::K3, 2, &g3).unwrap().ranks(), vec![1, 6, 6, 1]);
        assert_eq!(build_explicit_complex(Family::P4, 3, &g4).unwrap().ranks(), vec![1, 10, 12, 3]);
        assert_eq!(
            build_explicit_complex(Family::K4, 3, &g4).unwrap().ranks(),
            vec![1, 20, 30, 12, 1]
        );
        assert_eq!(build_explicit_complex(Family::K3, 1, &g3).unwrap().ranks(), vec![1, 3, 2]);
        assert_eq!(build_explicit_complex(Family::K4, 2, &g4).unwrap().ranks(), vec![1, 10, 12, 3]);
    }

    #[test]
    fn k3_square_passes() {
        let v = validate(Family::K3, 2, Grading::standard(3));
        assert!(v.all_passed(), "{v:?}");
    }

    #[test]
    fn p4_weighted_shifts() {
        let v = validate(Family::P4, 2, Grading::new(vec![2, 1, 1, 1]).unwrap());
        assert!(v.all_passed(), "{v:?}");
        let c = build_explicit_complex(Family::P4, 2, &Grading::new(vec![2, 1, 1, 1]).unwrap()).unwrap();
        let shifts = c.shifts().unwrap();
        let (n1, n2, m1, m2, s) = (2u64, 1, 1, 1, 2);
        for (k, label) in c.labels[2].iter().enumerate() {
            let idx: Vec<u64> = label
                .trim_start_matches("e_{")
                .trim_end_matches('}')
                .split(',')
                .map(|t| t.parse().unwrap())
                .collect();
            let (kind, i, j) = (idx[0], idx[1], idx[2]);
            let expect = if kind == 1 {
                (s - j) * n1 + (s - i) * n2 + (j + 1) * m1 + i * m2
            } else {
                (s - j) * n1 + (s - i + 1) * n2 + j * m1 + i * m2
            };
            assert_eq!(shifts[2][k], expect, "{label}");
        }
    }

    #[test]
    fn x3_leading_coefficient_breaks_exactness() {
        let mut c = build_explicit_complex(Family::K3, 3, &Grading::standard(3)).unwrap();
        let last = c.maps.last_mut().unwrap();
        last.cols[0][0].mono = Monomial::var(3, 2);
        let ideal = Family::K3.base_ideal(Grading::standard(3)).unwrap().power(3).unwrap();
        let t = betti_table(&ideal, &BettiOptions::default()).unwrap();
        let v = validate_explicit_complex(&c, &ideal, &t);
        assert!(!v.checks[0].passed);
    }

    #[test]
    fn grading_length_checked() {
        assert!(build_explicit_complex(Family::K4, 3, &Grading::standard(3)).is_err());
    }
}
