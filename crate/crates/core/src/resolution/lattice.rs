use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// All lcms of nonempty subsets of the minimal generators, in lexicographic
/// order of exponent vectors.
///
/// Built as the closure of the generators under joining with a generator,
/// which reaches every subset lcm. Fails once more than `cap` elements appear.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                if g.divides(m) {
                    continue;
                }
                let joined = m.lcm(g);
                if seen.insert(joined.clone()) {
                    if seen.len() > cap {
                        return Err(Error::TooLarge {
                            what: "lcm lattice",
                            size: seen.len(),
                            limit: cap,
                        });
                    }
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Grading;

    fn subset_lcms(ideal: &MonomialIdeal) -> Vec<Monomial> {
        let gens = ideal.generators();
        let mut all: HashSet<Monomial> = HashSet::new();
        for mask in 1u32..1 << gens.len() {
            let mut acc = Monomial::one(ideal.num_vars());
            for (k, g) in gens.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    acc = acc.lcm(g);
                }
            }
            all.insert(acc);
        }
        let mut v: Vec<_> = all.into_iter().collect();
        v.sort();
        v
    }

    #[test]
    fn two_variables() {
        let i = MonomialIdeal::parse(Grading::standard(2), &["x1", "x2"]).unwrap();
        let l = lcm_lattice(&i, 100).unwrap();
        let exps: Vec<&[u32]> = l.iter().map(|m| m.exponents()).collect();
        assert_eq!(exps, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
    }

    #[test]
    fn triangle_lattice() {
        let i = MonomialIdeal::parse(Grading::standard(3), &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        let l = lcm_lattice(&i, 100).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.contains(&Monomial::new(vec![1, 1, 1])));
        assert_eq!(l, subset_lcms(&i));
    }

    #[test]
    fn closure_matches_subset_enumeration() {
        let tri = MonomialIdeal::parse(Grading::standard(3), &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        let sq = tri.power(2).unwrap();
        assert_eq!(sq.mu(), 6);
        assert_eq!(lcm_lattice(&sq, 1000).unwrap(), subset_lcms(&sq));
        let other = MonomialIdeal::parse(
            Grading::standard(4),
            &["x1^2*x2", "x2*x3^3", "x1*x4", "x3*x4^2", "x2^2*x4"],
        )
        .unwrap();
        assert_eq!(lcm_lattice(&other, 1000).unwrap(), subset_lcms(&other));
    }

    #[test]
    fn cap_is_enforced() {
        let tri = MonomialIdeal::parse(Grading::standard(3), &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        let err = lcm_lattice(&tri.power(3).unwrap(), 5).unwrap_err();
        assert!(err.is_resource_cap());
    }
}
