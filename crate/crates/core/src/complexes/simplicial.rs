use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{fmt_set, VertexSet};
use crate::{Check, Error, Result};

/// Abstract simplicial complex on the vertex universe `1..=n`, stored by its
/// inclusion-maximal faces. Vertices of the universe that appear in no facet
/// are ghost vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Why a pure complex fails to be a pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudomanifoldDefect {
    /// A codimension-one face lying in `facets.len() != 2` facets.
    RidgeCount { ridge: VertexSet, facets: Vec<VertexSet> },
    /// The facet-adjacency graph has several components; each entry lists
    /// the facets of one component.
    Disconnected { components: Vec<Vec<VertexSet>> },
}

impl std::fmt::Display for PseudomanifoldDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::RidgeCount { ridge, facets } => write!(
                f,
                "ridge {} lies in {} facet(s)",
                fmt_set(ridge),
                facets.len()
            ),
            Self::Disconnected { components } => {
                write!(f, "facet graph has {} components", components.len())
            }
        }
    }
}

impl SimplicialComplex {
    /// The complex generated by `faces`: its facets are the inclusion-maximal
    /// members of the list.
    pub fn closure<I, F>(faces: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut list: Vec<VertexSet> = faces
            .into_iter()
            .map(|f| f.into_iter().collect())
            .collect();
        if list.is_empty() {
            return Err(Error::Input("a complex needs at least one face".into()));
        }
        for face in &list {
            if let Some(&v) = face.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Input(format!("vertex {v} outside 1..={n}")));
            }
        }
        list.sort();
        list.dedup();
        let facets: Vec<VertexSet> = list
            .iter()
            .filter(|f| !list.iter().any(|g| g != *f && f.is_subset(g)))
            .cloned()
            .collect();
        Ok(Self { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == k)
    }

    /// `max |facet| - 1`; the complex `{∅}` has dimension -1.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn contains_face(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        let used: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        (1..=self.n).filter(|v| !used.contains(v)).collect()
    }

    /// Every nonempty face, in lexicographic order.
    pub fn nonempty_faces(&self) -> Vec<VertexSet> {
        let mut faces = BTreeSet::new();
        for facet in &self.facets {
            let verts: Vec<usize> = facet.iter().copied().collect();
            for mask in 1u64..(1u64 << verts.len()) {
                let face: VertexSet = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
            }
        }
        faces.into_iter().collect()
    }

    /// Codimension-one faces of a pure complex, each with the facets
    /// containing it. For a 0-dimensional complex the only ridge is `∅`,
    /// which lies in every facet.
    pub fn ridges(&self) -> BTreeMap<VertexSet, Vec<VertexSet>> {
        let mut map: BTreeMap<VertexSet, Vec<VertexSet>> = BTreeMap::new();
        for facet in &self.facets {
            for &v in facet {
                let mut ridge = facet.clone();
                ridge.remove(&v);
                map.entry(ridge).or_default().push(facet.clone());
            }
        }
        map
    }

    /// Connected components of the graph on facets where two facets are
    /// adjacent when they share a ridge. Components are listed by their
    /// smallest facet.
    pub fn facet_components(&self) -> Vec<Vec<VertexSet>> {
        let index: BTreeMap<&VertexSet, usize> =
            self.facets.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut adjacency = vec![Vec::new(); self.facets.len()];
        for holders in self.ridges().values() {
            for a in holders {
                for b in holders {
                    if a != b {
                        adjacency[index[a]].push(index[b]);
                    }
                }
            }
        }
        components(&adjacency)
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.facets[i].clone()).collect())
            .collect()
    }

    /// Decides whether this pure complex is a pseudomanifold: every ridge in
    /// exactly two facets, and the facet-adjacency graph connected.
    pub fn is_pseudomanifold(&self) -> Result<Check<PseudomanifoldDefect>> {
        if !self.is_pure() {
            return Err(Error::Precondition(
                "pseudomanifold test needs a pure complex".into(),
            ));
        }
        if let Some((ridge, facets)) = self.ridges().into_iter().find(|(_, f)| f.len() != 2) {
            return Ok(Check::Fails(PseudomanifoldDefect::RidgeCount { ridge, facets }));
        }
        let components = self.facet_components();
        if components.len() > 1 {
            return Ok(Check::Fails(PseudomanifoldDefect::Disconnected { components }));
        }
        Ok(Check::Holds)
    }
}

/// Connected components of an undirected graph given by adjacency lists,
/// each sorted, ordered by smallest node.
pub(crate) fn components(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adjacency.len()];
    let mut out = Vec::new();
    for start in 0..adjacency.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
