use std::collections::BTreeMap;

use crate::error::Result;
use crate::ideal::{Grading, Monomial, MonomialIdeal};

use super::hilbert::{HilbertSeries, Polynomial};
use super::koszul::{reduced_homology_ranks, upper_koszul_complex};
use super::lattice::lcm_lattice;
use super::Field;

pub const DEFAULT_LATTICE_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    pub field: Field,
    pub lattice_cap: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            field: Field::DEFAULT,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

impl BettiOptions {
    pub fn with_field(field: Field) -> Self {
        BettiOptions {
            field,
            ..Default::default()
        }
    }
}

/// Graded Betti numbers of `R/I`: `beta_{0,0} = 1` and
/// `beta_{i+1,b}(R/I) = beta_{i,b}(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: Field,
    grading: Grading,
    multigraded: BTreeMap<(usize, Monomial), usize>,
    coarse: BTreeMap<(usize, u64), usize>,
}

/// Castelnuovo-Mumford regularity in both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regularity {
    pub quotient: i64,
    pub ideal: i64,
}

/// Multigraded Betti numbers of `R/I` from upper Koszul homology at every
/// point of the lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, opts.lattice_cap)?;
    let field = opts.field;
    let per_point = |b: &Monomial| -> Result<Vec<(usize, usize)>> {
        let complex = upper_koszul_complex(ideal, b)?;
        let ranks = reduced_homology_ranks(&complex, field);
        // ranks[q] is H̃_{q-1}, which is beta_q(I) = beta_{q+1}(R/I)
        Ok(ranks
            .into_iter()
            .enumerate()
            .filter(|&(_, r)| r > 0)
            .map(|(q, r)| (q + 1, r))
            .collect())
    };
    #[cfg(feature = "parallel")]
    let results: Vec<Result<Vec<(usize, usize)>>> = {
        use rayon::prelude::*;
        lattice.par_iter().map(per_point).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Vec<(usize, usize)>>> = lattice.iter().map(per_point).collect();

    let mut multigraded = BTreeMap::new();
    multigraded.insert((0, Monomial::one(ideal.num_vars())), 1);
    for (b, res) in lattice.iter().zip(results) {
        for (i, r) in res? {
            multigraded.insert((i, b.clone()), r);
        }
    }
    Ok(BettiTable::from_multigraded(
        field,
        ideal.grading().clone(),
        multigraded,
    ))
}

impl BettiTable {
    pub fn from_multigraded(
        field: Field,
        grading: Grading,
        multigraded: BTreeMap<(usize, Monomial), usize>,
    ) -> BettiTable {
        let mut coarse = BTreeMap::new();
        for ((i, b), &r) in &multigraded {
            *coarse.entry((*i, b.degree(&grading))).or_insert(0) += r;
        }
        BettiTable {
            field,
            grading,
            multigraded,
            coarse,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn num_vars(&self) -> usize {
        self.grading.num_vars()
    }

    pub fn get(&self, i: usize, j: u64) -> usize {
        self.coarse.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `(i, j, beta_{i,j})` triples in increasing order.
    pub fn entries(&self) -> Vec<(usize, u64, usize)> {
        self.coarse.iter().map(|(&(i, j), &r)| (i, j, r)).collect()
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.multigraded
    }

    /// Nonzero `(j, beta_{i,j})` at homological index `i`.
    pub fn shifts(&self, i: usize) -> Vec<(u64, usize)> {
        self.coarse
            .range((i, 0)..=(i, u64::MAX))
            .map(|(&(_, j), &r)| (j, r))
            .collect()
    }

    /// Total Betti numbers `beta_0, ..., beta_pdim`.
    pub fn betti_vector(&self) -> Vec<usize> {
        let mut v = vec![0; self.pdim() + 1];
        for (&(i, _), &r) in &self.coarse {
            v[i] += r;
        }
        v
    }

    /// Projective dimension of `R/I`.
    pub fn pdim(&self) -> usize {
        self.coarse.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Depth via Auslander-Buchsbaum.
    pub fn depth(&self) -> usize {
        self.num_vars() - self.pdim()
    }

    /// Largest shift at homological index `i`.
    pub fn max_shift(&self, i: usize) -> Option<u64> {
        self.shifts(i).last().map(|&(j, _)| j)
    }

    pub fn regularity(&self) -> Regularity {
        let quotient = self
            .coarse
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0);
        let ideal = self
            .coarse
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .map(|&(i, j)| j as i64 - i as i64 + 1)
            .max()
            .unwrap_or(0);
        Regularity { quotient, ideal }
    }

    /// True when every shift at index `i >= 1` equals `d + i - 1`.
    pub fn is_linear(&self) -> bool {
        let mut shifts = self.coarse.keys().filter(|&&(i, _)| i >= 1);
        let Some(&(i0, j0)) = shifts.next() else {
            return true;
        };
        let d = j0 as i64 - i0 as i64 + 1;
        self.coarse
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .all(|&(i, j)| j as i64 == d + i as i64 - 1)
    }

    /// `sum_{i,j} (-1)^i beta_{i,j} t^j`.
    pub fn hilbert_numerator(&self) -> Polynomial {
        let top = self.coarse.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut c = vec![0i64; top + 1];
        for (&(i, j), &r) in &self.coarse {
            let r = r as i64;
            c[j as usize] += if i % 2 == 0 { r } else { -r };
        }
        Polynomial::new(c)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.hilbert_numerator(), &self.grading)
    }

    /// Grid with columns `i` and rows `j - i`, in the usual layout.
    pub fn to_grid(&self) -> String {
        let cols = self.pdim() + 1;
        let max_row = self
            .coarse
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0);
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..cols).map(|i| i.to_string()));
        rows.push(header);
        let mut total = vec!["total:".to_string()];
        total.extend(self.betti_vector().iter().map(|b| b.to_string()));
        rows.push(total);
        for r in 0..=max_row {
            let mut line = vec![format!("{r}:")];
            let mut any = false;
            for i in 0..cols {
                let j = r + i as i64;
                let b = if j >= 0 { self.get(i, j as u64) } else { 0 };
                any |= b > 0;
                line.push(if b == 0 { ".".to_string() } else { b.to_string() });
            }
            if any {
                rows.push(line);
            }
        }
        let ncols = cols + 1;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in rows {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::cover_ideal;
    use crate::graph::Graph;

    fn complete_cover(m: usize) -> MonomialIdeal {
        cover_ideal(&Graph::complete_multipartite(&vec![1; m]).unwrap(), false).unwrap()
    }

    #[test]
    fn triangle_cover_ideal_resolution() {
        let t = betti_table(&complete_cover(3), &BettiOptions::default()).unwrap();
        assert_eq!(t.entries(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!(t.regularity(), Regularity { quotient: 1, ideal: 2 });
    }

    #[test]
    fn triangle_fourth_power() {
        let t = betti_table(&complete_cover(3).power(4).unwrap(), &BettiOptions::default()).unwrap();
        assert_eq!(t.entries(), vec![(0, 0, 1), (1, 8, 15), (2, 9, 20), (3, 10, 6)]);
    }

    #[test]
    fn k4_first_power() {
        let t = betti_table(&complete_cover(4), &BettiOptions::default()).unwrap();
        assert_eq!(t.entries(), vec![(0, 0, 1), (1, 3, 4), (2, 4, 3)]);
        assert_eq!(t.pdim(), 2);
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let i = MonomialIdeal::parse(Grading::standard(2), &["x1", "x2"]).unwrap();
        let t = betti_table(&i, &BettiOptions::default()).unwrap();
        assert_eq!(t.regularity().ideal, 1);
        assert_eq!(t.entries(), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
        let h = t.hilbert_series();
        assert_eq!(h.reduced_numerator, Polynomial::new(vec![1]));
        assert_eq!(h.reduced_denominator_power, 0);
    }

    #[test]
    fn grid_layout() {
        let t = betti_table(&complete_cover(3).power(2).unwrap(), &BettiOptions::default()).unwrap();
        let grid = t.to_grid();
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["0", "1", "2", "3"]);
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["total:", "1", "6", "6", "1"]);
        assert_eq!(lines[2].split_whitespace().collect::<Vec<_>>(), ["0:", "1", ".", ".", "."]);
        assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["3:", ".", "6", "6", "1"]);
    }

    #[test]
    fn lattice_cap_propagates() {
        let opts = BettiOptions {
            lattice_cap: 3,
            ..Default::default()
        };
        assert!(betti_table(&complete_cover(3).power(2).unwrap(), &opts)
            .unwrap_err()
            .is_resource_cap());
    }
}
