//! Circulant graphs and their connection sets.
//!
//! A circulant graph on `Z_n` is described by a connection set `S`, a subset
//! of `{1, ..., n-1}` closed under `a -> n - a`. Vertices `i` and `j` are
//! adjacent exactly when `(j - i) mod n` lies in `S`. The set is stored in
//! canonical form: the full symmetric set, sorted ascending. The generator
//! half-set (elements up to `n/2`) is always derived, never stored.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A symmetric subset of `Z_n \ {0}`; the defining datum of a circulant graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "SetRepr")]
pub struct ConnectionSet {
    n: usize,
    elements: Vec<usize>,
}

/// Wire form: `{"n": 12, "set": [1, 2, 10, 11]}`.
#[derive(Serialize, Deserialize)]
struct SetRepr {
    n: usize,
    set: Vec<usize>,
}

impl From<ConnectionSet> for SetRepr {
    fn from(cs: ConnectionSet) -> Self {
        SetRepr { n: cs.n, set: cs.elements }
    }
}

impl<'de> Deserialize<'de> for ConnectionSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SetRepr::deserialize(deserializer)?;
        ConnectionSet::new(repr.n, &repr.set).map_err(serde::de::Error::custom)
    }
}

impl ConnectionSet {
    /// Builds the symmetric closure of `generators` inside `Z_n \ {0}`.
    ///
    /// Every residue must lie in `1..=n-1`; the result contains each generator
    /// together with its additive inverse, sorted ascending with no duplicates.
    pub fn new(n: usize, generators: &[usize]) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall(n));
        }
        let mut present = vec![false; n];
        for &g in generators {
            if g == 0 || g >= n {
                return Err(Error::ResidueOutOfRange { residue: g, max: n - 1, n });
            }
            present[g] = true;
            present[n - g] = true;
        }
        let elements = (1..n).filter(|&r| present[r]).collect();
        Ok(ConnectionSet { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The full symmetric set, sorted ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.elements.binary_search(&r).is_ok()
    }

    /// The generator half-set: elements up to `n/2` inclusive.
    pub fn generators(&self) -> Vec<usize> {
        self.elements.iter().copied().filter(|&a| 2 * a <= self.n).collect()
    }

    /// Number of generator pairs `s`; the self-inverse element `n/2` is not counted.
    pub fn generator_count(&self) -> usize {
        self.elements.iter().filter(|&&a| 2 * a < self.n).count()
    }

    /// True when `n` is even and `n/2` is an element.
    pub fn has_self_inverse(&self) -> bool {
        self.n % 2 == 0 && self.contains(self.n / 2)
    }

    /// Maps each generator `a` to `k - a` on an even order `n = 2k` and closes
    /// symmetrically. Requires every generator to lie in `1..=k-1`; applying
    /// the map twice returns the original set.
    pub fn complement_shift(&self) -> Result<Self> {
        if self.n % 2 != 0 {
            return Err(Error::OddOrder(self.n));
        }
        let k = self.n / 2;
        if self.contains(k) {
            return Err(Error::SelfInverseGenerator(k));
        }
        let shifted: Vec<usize> = self.generators().iter().map(|&a| k - a).collect();
        ConnectionSet::new(self.n, &shifted)
    }
}

/// A circulant graph, fully described by its connection set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CirculantGraph {
    set: ConnectionSet,
}

impl CirculantGraph {
    pub fn new(set: ConnectionSet) -> Self {
        CirculantGraph { set }
    }

    pub fn from_generators(n: usize, generators: &[usize]) -> Result<Self> {
        Ok(CirculantGraph::new(ConnectionSet::new(n, generators)?))
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.set
    }

    /// The regularity degree, `|S|`.
    pub fn degree(&self) -> usize {
        self.set.len()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        self.set.contains((j + n - i % n) % n)
    }

    /// First row of the adjacency matrix as 0/1 entries.
    pub fn first_row(&self) -> Vec<u64> {
        let mut row = vec![0u64; self.n()];
        for &h in self.set.elements() {
            row[h] = 1;
        }
        row
    }

    /// Dense adjacency matrix; row `i` is the first row rotated by `i`.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let first = self.first_row();
        (0..n)
            .map(|i| (0..n).map(|j| first[(j + n - i) % n] as i64).collect())
            .collect()
    }

    /// First row of the squared adjacency matrix, i.e. counts of length-2
    /// walks from vertex 0 to each vertex.
    pub fn square_row(&self) -> Vec<u64> {
        let n = self.n();
        let mut row = vec![0u64; n];
        for &a in self.set.elements() {
            for &b in self.set.elements() {
                row[(a + b) % n] += 1;
            }
        }
        row
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_adds_inverses() {
        let cs = ConnectionSet::new(12, &[1, 2]).unwrap();
        assert_eq!(cs.elements(), &[1, 2, 10, 11]);
        assert_eq!(cs.generator_count(), 2);
        assert!(!cs.has_self_inverse());
    }

    #[test]
    fn closure_keeps_symmetric_input() {
        let cs = ConnectionSet::new(5, &[1, 4]).unwrap();
        assert_eq!(cs.elements(), &[1, 4]);
    }

    #[test]
    fn self_inverse_element_is_single() {
        let cs = ConnectionSet::new(8, &[4]).unwrap();
        assert_eq!(cs.elements(), &[4]);
        assert_eq!(cs.generator_count(), 0);
        assert!(cs.has_self_inverse());
        assert_eq!(cs.len(), 1);
    }

    #[test]
    fn rejects_invalid_residues() {
        assert!(matches!(ConnectionSet::new(12, &[0]), Err(Error::ResidueOutOfRange { .. })));
        assert!(matches!(ConnectionSet::new(12, &[12]), Err(Error::ResidueOutOfRange { .. })));
        assert!(matches!(ConnectionSet::new(12, &[13]), Err(Error::ResidueOutOfRange { .. })));
        assert!(matches!(ConnectionSet::new(1, &[]), Err(Error::OrderTooSmall(1))));
    }

    #[test]
    fn complement_shift_examples() {
        let cs = ConnectionSet::new(12, &[1, 2]).unwrap();
        assert_eq!(cs.complement_shift().unwrap().elements(), &[4, 5, 7, 8]);

        let cs = ConnectionSet::new(18, &[1, 2, 3, 4]).unwrap();
        assert_eq!(
            cs.complement_shift().unwrap().elements(),
            &[5, 6, 7, 8, 10, 11, 12, 13]
        );
    }

    #[test]
    fn complement_shift_is_involution() {
        let cs = ConnectionSet::new(14, &[1, 3]).unwrap();
        let shifted = cs.complement_shift().unwrap();
        assert_eq!(shifted.elements(), &[4, 6, 8, 10]);
        assert_eq!(shifted.complement_shift().unwrap(), cs);
    }

    #[test]
    fn complement_shift_rejections() {
        let odd = ConnectionSet::new(9, &[1]).unwrap();
        assert_eq!(odd.complement_shift(), Err(Error::OddOrder(9)));
        let with_half = ConnectionSet::new(12, &[1, 6]).unwrap();
        assert_eq!(with_half.complement_shift(), Err(Error::SelfInverseGenerator(6)));
    }

    #[test]
    fn set_size_matches_generator_count() {
        let cs = ConnectionSet::new(12, &[1, 2]).unwrap();
        assert_eq!(cs.len(), 2 * cs.generator_count());
        let cs = ConnectionSet::new(12, &[1, 6]).unwrap();
        assert_eq!(cs.len(), 2 * cs.generator_count() + 1);
    }

    #[test]
    fn adjacency_and_rows() {
        let g = CirculantGraph::from_generators(5, &[1]).unwrap();
        assert_eq!(g.degree(), 2);
        assert!(g.is_adjacent(0, 1));
        assert!(g.is_adjacent(4, 0));
        assert!(!g.is_adjacent(0, 2));
        assert_eq!(g.first_row(), vec![0, 1, 0, 0, 1]);
        assert_eq!(g.square_row(), vec![2, 0, 1, 1, 0]);
        let a = g.adjacency();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(a[i][j], a[j][i]);
                assert_eq!(a[i][j], g.is_adjacent(i, j) as i64);
            }
        }
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let g = CirculantGraph::from_generators(12, &[2, 1]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":12,"set":[1,2,10,11]}"#);
        let back: CirculantGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        // Deserialization re-validates.
        assert!(serde_json::from_str::<CirculantGraph>(r#"{"n":12,"set":[0]}"#).is_err());
    }
}
