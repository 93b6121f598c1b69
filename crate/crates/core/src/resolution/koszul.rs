use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

use super::linalg::rank;
use super::Field;

/// Largest support for which an upper Koszul complex is materialized.
pub const MAX_SUPPORT: usize = 24;

/// A simplicial complex on at most 64 vertices; faces are bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Closes `faces` under taking subsets.
    pub fn from_faces(vertex_count: usize, faces: &[u64]) -> Self {
        let mut all = std::collections::HashSet::new();
        for &f in faces {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut faces: Vec<u64> = all.into_iter().collect();
        faces.sort_by_key(|f| (f.count_ones(), *f));
        SimplicialComplex {
            vertex_count,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Faces ordered by size, then by bitmask.
    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.binary_search_by_key(&(face.count_ones(), face), |f| (f.count_ones(), *f)).is_ok()
    }

    /// Dimension, or `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.last().map(|f| f.count_ones() as isize - 1)
    }
}

/// `K^b(I)`: squarefree `τ <= b` with `x^(b-τ)` in `I`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let support = b.support_mask();
    if support.count_ones() as usize > MAX_SUPPORT {
        return Err(Error::TooLarge {
            what: "upper Koszul support",
            size: support.count_ones() as usize,
            limit: MAX_SUPPORT,
        });
    }
    let n = ideal.num_vars();
    let mut faces = Vec::new();
    let mut tau = support;
    let mut shifted = b.exponents().to_vec();
    loop {
        for (i, e) in shifted.iter_mut().enumerate() {
            *e = b.exponents()[i] - ((tau >> i) & 1) as u32;
        }
        if ideal.contains(&Monomial::new(shifted.clone())) {
            faces.push(tau);
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & support;
    }
    faces.sort_by_key(|f| (f.count_ones(), *f));
    Ok(SimplicialComplex {
        vertex_count: n,
        faces,
    })
}

/// Ranks of reduced homology `H̃_{-1}, H̃_0, ..., H̃_dim` over `field`.
/// The void complex has no nonzero homology and yields an empty list.
pub fn reduced_homology_ranks(c: &SimplicialComplex, field: Field) -> Vec<usize> {
    let Some(dim) = c.dimension() else {
        return Vec::new();
    };
    let top = (dim + 1) as usize;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in &c.faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    // boundary_rank[q] = rank of the map from size-q faces to size-(q-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    for q in 1..=top {
        if by_size[q].is_empty() || by_size[q - 1].is_empty() {
            continue;
        }
        let mut m = vec![vec![0i64; by_size[q].len()]; by_size[q - 1].len()];
        for (col, &face) in by_size[q].iter().enumerate() {
            let mut sign = 1;
            let mut bits = face;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                let row = index[q - 1][&(face & !low)];
                m[row][col] = sign;
                sign = -sign;
                bits &= bits - 1;
            }
        }
        boundary_rank[q] = rank(&m, field);
    }
    (0..=top)
        .map(|q| by_size[q].len() - boundary_rank[q] - boundary_rank[q + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Grading;

    #[test]
    fn homology_of_basic_complexes() {
        let two_points = SimplicialComplex::from_faces(2, &[0b01, 0b10]);
        assert_eq!(reduced_homology_ranks(&two_points, Field::Rational), vec![0, 1]);
        let hollow = SimplicialComplex::from_faces(3, &[0b011, 0b101, 0b110]);
        assert_eq!(reduced_homology_ranks(&hollow, Field::DEFAULT), vec![0, 0, 1]);
        let simplex = SimplicialComplex::from_faces(4, &[0b1111]);
        assert!(reduced_homology_ranks(&simplex, Field::Rational)
            .iter()
            .all(|&r| r == 0));
        let empty_face_only = SimplicialComplex::from_faces(3, &[0]);
        assert_eq!(reduced_homology_ranks(&empty_face_only, Field::Rational), vec![1]);
        let void = SimplicialComplex::from_faces(3, &[]);
        assert!(void.is_void());
        assert!(reduced_homology_ranks(&void, Field::Rational).is_empty());
    }

    #[test]
    fn sphere_and_projective_plane() {
        // boundary of the 3-simplex: H̃_2 = 1
        let sphere = SimplicialComplex::from_faces(4, &[0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(reduced_homology_ranks(&sphere, Field::Rational), vec![0, 0, 0, 1]);
        // 6-vertex RP^2: torsion shows up only in characteristic 2
        let tris: [[usize; 3]; 10] = [
            [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
            [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
        ];
        let faces: Vec<u64> = tris
            .iter()
            .map(|t| t.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let rp2 = SimplicialComplex::from_faces(6, &faces);
        assert_eq!(reduced_homology_ranks(&rp2, Field::Rational), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_ranks(&rp2, Field::Prime(2)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn upper_koszul_examples() {
        let i = MonomialIdeal::parse(Grading::standard(2), &["x1", "x2"]).unwrap();
        let k = upper_koszul_complex(&i, &Monomial::new(vec![1, 1])).unwrap();
        assert_eq!(k.faces(), &[0, 0b01, 0b10]);
        assert_eq!(reduced_homology_ranks(&k, Field::Rational), vec![0, 1]);

        let tri = MonomialIdeal::parse(Grading::standard(3), &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        let k = upper_koszul_complex(&tri, &Monomial::new(vec![1, 1, 1])).unwrap();
        // x^(b - τ) lies in I exactly for |τ| <= 1
        assert_eq!(k.faces(), &[0, 0b001, 0b010, 0b100]);
        assert_eq!(reduced_homology_ranks(&k, Field::Rational), vec![0, 2]);

        for g in tri.generators() {
            let k = upper_koszul_complex(&tri, g).unwrap();
            assert_eq!(k.faces(), &[0]);
        }
    }

    #[test]
    fn upper_koszul_is_downward_closed() {
        let i = MonomialIdeal::parse(
            Grading::standard(4),
            &["x1^2*x2", "x2*x3^2", "x1*x4", "x3*x4^2"],
        )
        .unwrap();
        let b = Monomial::new(vec![2, 1, 2, 2]);
        let k = upper_koszul_complex(&i, &b).unwrap();
        let closed = SimplicialComplex::from_faces(4, k.faces());
        assert_eq!(k, closed);
        for &f in k.faces() {
            assert!(k.contains(f));
        }
    }
}
