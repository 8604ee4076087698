use std::collections::BTreeSet;

use super::simplicial::{components, SimplicialComplex};
use super::{fmt_set, VertexSet};
use crate::{Check, Error, Result};

/// A nonempty family of `m`-subsets of `1..=n` (a fundamental set of type
/// `(m, n)`). Members are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalSet {
    m: usize,
    n: usize,
    members: Vec<VertexSet>,
}

/// A member `P` and index `k` for which the substitutes `k'` in `P` with
/// `(P \ {k'}) ∪ {k}` in the family are not exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstituteViolation {
    pub member: VertexSet,
    pub k: usize,
    pub substitutes: Vec<usize>,
}

impl std::fmt::Display for SubstituteViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "P = {}, k = {} has {} substitute(s)",
            fmt_set(&self.member),
            self.k,
            self.substitutes.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityDefect {
    NotSeu(SubstituteViolation),
    /// The replacement graph splits into these member groups.
    Disconnected { components: Vec<Vec<VertexSet>> },
}

/// Graph on the members of a fundamental set, joining members that differ
/// in exactly one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplacementGraph {
    pub nodes: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
}

impl ReplacementGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Node-index components, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.adjacency())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl FundamentalSet {
    pub fn new<I, F>(m: usize, n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        if m > n {
            return Err(Error::Input(format!("member size {m} exceeds n = {n}")));
        }
        let set: BTreeSet<VertexSet> = members
            .into_iter()
            .map(|p| p.into_iter().collect())
            .collect();
        if set.is_empty() {
            return Err(Error::Input("a fundamental set needs a member".into()));
        }
        for p in &set {
            if p.len() != m {
                return Err(Error::Input(format!(
                    "member {} has {} elements, expected {m}",
                    fmt_set(p),
                    p.len()
                )));
            }
            if let Some(&v) = p.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Input(format!("element {v} outside 1..={n}")));
            }
        }
        Ok(Self {
            m,
            n,
            members: set.into_iter().collect(),
        })
    }

    /// The complements of the facets of a pure complex.
    pub fn from_complex(complex: &SimplicialComplex) -> Result<Self> {
        if !complex.is_pure() {
            return Err(Error::Precondition(
                "only pure complexes have a dual fundamental set".into(),
            ));
        }
        let n = complex.n();
        let m = n - complex.facets()[0].len();
        Self::new(
            m,
            n,
            complex.facets().iter().map(|f| complement(f, n)),
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn contains(&self, member: &VertexSet) -> bool {
        self.members.binary_search(member).is_ok()
    }

    /// The pure complex of dimension `n - m - 1` whose facets are the
    /// complements of the members.
    pub fn associated_complex(&self) -> Result<SimplicialComplex> {
        if self.m == self.n {
            return Err(Error::Degenerate(
                "members equal the whole vertex set; complements are empty".into(),
            ));
        }
        SimplicialComplex::closure(
            self.members.iter().map(|p| complement(p, self.n)),
            self.n,
        )
    }

    /// Elements contained in every member; they are the ghost vertices of
    /// the associated complex.
    pub fn indispensable_elements(&self) -> VertexSet {
        let mut iter = self.members.iter();
        let first = iter.next().expect("nonempty").clone();
        iter.fold(first, |acc, p| acc.intersection(p).copied().collect())
    }

    /// Every `k'` in `member` with `(member \ {k'}) ∪ {k}` in the family.
    pub fn substitutes(&self, member: &VertexSet, k: usize) -> Vec<usize> {
        member
            .iter()
            .copied()
            .filter(|&kp| {
                let mut q = member.clone();
                q.remove(&kp);
                q.insert(k);
                q.len() == self.m && self.contains(&q)
            })
            .collect()
    }

    fn first_violation(&self, accept: impl Fn(usize) -> bool) -> Option<SubstituteViolation> {
        for p in &self.members {
            for k in 1..=self.n {
                let subs = self.substitutes(p, k);
                if !accept(subs.len()) {
                    return Some(SubstituteViolation {
                        member: p.clone(),
                        k,
                        substitutes: subs,
                    });
                }
            }
        }
        None
    }

    /// Substitute existence: every `(P, k)` admits some `k'`.
    pub fn check_se(&self) -> Check<SubstituteViolation> {
        self.first_violation(|count| count >= 1).into()
    }

    /// Substitute existence and uniqueness: every `(P, k)` admits exactly
    /// one `k'`.
    pub fn check_seu(&self) -> Check<SubstituteViolation> {
        self.first_violation(|count| count == 1).into()
    }

    /// Under substitute uniqueness every node has degree `n - m`: each
    /// `k ∉ P` yields exactly one neighbour and distinct `k` yield distinct
    /// neighbours. (A valence of `n - m - 1` is sometimes quoted for this
    /// graph; it undercounts by one.)
    pub fn replacement_graph(&self) -> ReplacementGraph {
        let mut edges = Vec::new();
        for (i, p) in self.members.iter().enumerate() {
            for (j, q) in self.members.iter().enumerate().skip(i + 1) {
                if p.symmetric_difference(q).count() == 2 {
                    edges.push((i, j));
                }
            }
        }
        ReplacementGraph {
            nodes: self.members.clone(),
            edges,
        }
    }

    /// Minimality for substitute uniqueness, decided as "SEU holds and the
    /// replacement graph is connected", and cross-checked against the
    /// pseudomanifold test on the associated complex. Needs `n > m`.
    pub fn is_seu_minimal(&self) -> Result<Check<MinimalityDefect>> {
        let via_graph = self.seu_minimal_via_graph()?;
        let via_complex = self.seu_minimal_via_complex()?;
        if via_graph.holds() != via_complex {
            return Err(Error::TheoremViolation(format!(
                "SEU-minimality ({}) disagrees with the pseudomanifold test ({via_complex}) for {self}",
                via_graph.holds()
            )));
        }
        Ok(via_graph)
    }

    /// Combinatorial route: (SEU) plus connectivity of the replacement graph.
    pub fn seu_minimal_via_graph(&self) -> Result<Check<MinimalityDefect>> {
        self.require_proper()?;
        if let Check::Fails(v) = self.check_seu() {
            return Ok(Check::Fails(MinimalityDefect::NotSeu(v)));
        }
        let graph = self.replacement_graph();
        let comps = graph.components();
        if comps.len() > 1 {
            let components = comps
                .into_iter()
                .map(|c| c.into_iter().map(|i| graph.nodes[i].clone()).collect())
                .collect();
            return Ok(Check::Fails(MinimalityDefect::Disconnected { components }));
        }
        Ok(Check::Holds)
    }

    /// Dual route: the associated complex is a pseudomanifold.
    pub fn seu_minimal_via_complex(&self) -> Result<bool> {
        self.require_proper()?;
        Ok(self.associated_complex()?.is_pseudomanifold()?.holds())
    }

    fn require_proper(&self) -> Result<()> {
        if self.n <= self.m {
            return Err(Error::Precondition(format!(
                "minimality needs n > M, got type ({}, {})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// Splits a family with substitute uniqueness into its SEU-minimal parts
    /// (the components of the replacement graph).
    pub fn decompose_seu(&self) -> Result<Vec<FundamentalSet>> {
        if let Check::Fails(v) = self.check_seu() {
            return Err(Error::Precondition(format!(
                "substitute uniqueness fails: {v}"
            )));
        }
        let graph = self.replacement_graph();
        Ok(graph
            .components()
            .into_iter()
            .map(|c| FundamentalSet {
                m: self.m,
                n: self.n,
                members: c.into_iter().map(|i| graph.nodes[i].clone()).collect(),
            })
            .collect())
    }
}

impl std::fmt::Display for FundamentalSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let members: Vec<String> = self.members.iter().map(fmt_set).collect();
        write!(f, "({}, {}) {{{}}}", self.m, self.n, members.join(", "))
    }
}

fn complement(set: &VertexSet, n: usize) -> VertexSet {
    (1..=n).filter(|v| !set.contains(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::vset;

    fn fs(m: usize, n: usize, members: &[&[usize]]) -> FundamentalSet {
        FundamentalSet::new(m, n, members.iter().map(|p| p.iter().copied())).unwrap()
    }

    fn square() -> FundamentalSet {
        fs(2, 4, &[&[3, 4], &[1, 4], &[1, 2], &[2, 3]])
    }

    fn all_pairs_of_three() -> FundamentalSet {
        fs(2, 3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn two_triangles() -> FundamentalSet {
        let facets = [[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]];
        FundamentalSet::new(
            4,
            6,
            facets.iter().map(|f| complement(&vset(f), 6)),
        )
        .unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert!(FundamentalSet::new(2, 3, Vec::<Vec<usize>>::new()).is_err());
        assert!(FundamentalSet::new(2, 3, [vec![1]]).is_err());
        assert!(FundamentalSet::new(4, 3, [vec![1, 2, 3, 4]]).is_err());
        assert!(FundamentalSet::new(1, 3, [vec![4]]).is_err());
    }

    #[test]
    fn associated_complex_examples() {
        let c = square().associated_complex().unwrap();
        assert_eq!(
            c.facets(),
            &[vset(&[1, 2]), vset(&[1, 4]), vset(&[2, 3]), vset(&[3, 4])]
        );
        let c = fs(1, 3, &[&[1]]).associated_complex().unwrap();
        assert_eq!(c.facets(), &[vset(&[2, 3])]);
        let c = all_pairs_of_three().associated_complex().unwrap();
        assert_eq!(c.facets(), &[vset(&[1]), vset(&[2]), vset(&[3])]);
        assert!(matches!(
            fs(2, 2, &[&[1, 2]]).associated_complex(),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn complementation_round_trips() {
        for e in [square(), all_pairs_of_three(), two_triangles(), fs(1, 3, &[&[1]])] {
            let back = FundamentalSet::from_complex(&e.associated_complex().unwrap()).unwrap();
            assert_eq!(back, e);
        }
    }

    #[test]
    fn indispensable_examples() {
        assert_eq!(fs(2, 3, &[&[1, 2], &[1, 3]]).indispensable_elements(), vset(&[1]));
        assert!(square().indispensable_elements().is_empty());
        assert_eq!(fs(2, 4, &[&[2, 4]]).indispensable_elements(), vset(&[2, 4]));
        let e = fs(2, 4, &[&[1, 2], &[1, 3]]);
        assert_eq!(
            e.indispensable_elements(),
            e.associated_complex().unwrap().ghost_vertices()
        );
    }

    #[test]
    fn se_examples() {
        assert!(square().check_se().holds());
        assert_eq!(
            fs(2, 3, &[&[1, 2]]).check_se(),
            Check::Fails(SubstituteViolation {
                member: vset(&[1, 2]),
                k: 3,
                substitutes: vec![]
            })
        );
        assert!(all_pairs_of_three().check_se().holds());
    }

    #[test]
    fn seu_examples() {
        assert!(square().check_seu().holds());
        let v = all_pairs_of_three().check_seu().into_witness().unwrap();
        assert_eq!((v.member, v.k, v.substitutes), (vset(&[1, 2]), 3, vec![1, 2]));
        assert!(!fs(2, 3, &[&[1, 2]]).check_seu().holds());
    }

    #[test]
    fn replacement_graph_examples() {
        let g = square().replacement_graph();
        assert_eq!(g.edges.len(), 4);
        assert!((0..4).all(|i| g.degree(i) == 2));
        assert!(g.is_connected());

        let g = fs(2, 4, &[&[1, 2]]).replacement_graph();
        assert!(g.edges.is_empty());
        assert_eq!(g.components().len(), 1);

        let g = two_triangles().replacement_graph();
        assert_eq!(g.components().len(), 2);
        assert!((0..6).all(|i| g.degree(i) == 2), "degree n - M = 2");
    }

    #[test]
    fn minimality_examples() {
        assert!(square().is_seu_minimal().unwrap().holds());
        assert!(matches!(
            two_triangles().is_seu_minimal().unwrap(),
            Check::Fails(MinimalityDefect::Disconnected { .. })
        ));
        assert!(matches!(
            all_pairs_of_three().is_seu_minimal().unwrap(),
            Check::Fails(MinimalityDefect::NotSeu(_))
        ));
        assert!(matches!(
            fs(2, 2, &[&[1, 2]]).is_seu_minimal(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(square().decompose_seu().unwrap(), vec![square()]);
        let parts = two_triangles().decompose_seu().unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.members().len() == 3));
        assert!(parts.iter().all(|p| p.is_seu_minimal().unwrap().holds()));
        assert!(matches!(
            all_pairs_of_three().decompose_seu(),
            Err(Error::Precondition(_))
        ));
    }
}
