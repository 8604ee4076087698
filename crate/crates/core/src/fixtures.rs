//! Small named realizations, fundamental sets and studiable systems used by
//! tests, examples and the CLI. Points are listed in vertex-label order.

use crate::arith::{int, Rational};
use crate::bosio::StudiableSystem;
use crate::complexes::{FundamentalSet, SimplicialComplex};
use crate::geometry::Realization;

fn realize(facets: &[&[usize]], points: &[&[i64]]) -> Realization {
    let complex = SimplicialComplex::closure(facets.iter().map(|f| f.iter().copied()), points.len())
        .expect("fixture complex");
    Realization::new(complex, int_points(points), None).expect("fixture realization")
}

fn int_points(points: &[&[i64]]) -> Vec<Vec<Rational>> {
    points
        .iter()
        .map(|p| p.iter().map(|&v| int(v)).collect())
        .collect()
}

/// Boundary of the square with vertices `e1, e2, -e1, -e2`.
pub fn square() -> Realization {
    realize(
        &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]],
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
    )
}

pub fn convex_pentagon() -> Realization {
    realize(
        &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]],
        &[&[3, 0], &[1, 3], &[-2, 2], &[-2, -2], &[1, -3]],
    )
}

/// A pentagon with a reflex vertex at `(-1, 0)`; its kernel is a proper
/// part of the enclosed region.
pub fn nonconvex_pentagon() -> Realization {
    realize(
        &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]],
        &[&[2, -2], &[2, 2], &[-2, 2], &[-1, 0], &[-2, -2]],
    )
}

/// Boundary of the cross-polytope: vertices `1..3 = e_i`, `4..6 = -e_i`.
pub fn octahedron() -> Realization {
    let mut facets = Vec::new();
    for a in [1, 4] {
        for b in [2, 5] {
            for c in [3, 6] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    let complex = SimplicialComplex::closure(facets, 6).expect("fixture complex");
    let points = int_points(&[
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
        &[-1, 0, 0],
        &[0, -1, 0],
        &[0, 0, -1],
    ]);
    Realization::new(complex, points, None).expect("fixture realization")
}

/// A triangle boundary that does not surround the origin. No edge is
/// collinear with the origin, so (simpl) holds and (Sep) fails.
pub fn triangle_around_outside() -> Realization {
    realize(&[&[1, 2], &[2, 3], &[1, 3]], &[&[1, -1], &[3, 0], &[1, 2]])
}

/// The triangle `(1,0), (3,0), (1,2)`: the edge `{1,2}` lies on a line
/// through the origin, so (simpl) already fails.
pub fn triangle_on_axis() -> Realization {
    realize(&[&[1, 2], &[2, 3], &[1, 3]], &[&[1, 0], &[3, 0], &[1, 2]])
}

/// Two edges `e1 - e2 - (-e1)`: weakly starshaped, not a pseudomanifold.
pub fn path() -> Realization {
    realize(&[&[1, 2], &[2, 3]], &[&[1, 0], &[0, 1], &[-1, 0]])
}

/// The square's dual pair: facet complements and the Gale vectors `a, b, a, b`.
pub fn square_system() -> StudiableSystem {
    let fs = FundamentalSet::new(2, 4, [[3, 4], [1, 4], [1, 2], [2, 3]]).expect("fixture set");
    StudiableSystem::new(fs, int_points(&[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]))
        .expect("fixture system")
}

/// Two opposite rays in `Q^1`.
pub fn opposite_rays_system() -> StudiableSystem {
    let fs = FundamentalSet::new(1, 2, [[1], [2]]).expect("fixture set");
    StudiableSystem::new(fs, int_points(&[&[1], &[-1]])).expect("fixture system")
}

/// Complements of two disjoint triangle boundaries on six vertices: (SEU)
/// holds but the set is not minimal.
pub fn two_triangles() -> FundamentalSet {
    complement_set(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]], 6)
}

/// Complements of the six-vertex real projective plane: (SEU)-minimal, but
/// the associated complex triangulates no part of a sphere, so no choice of
/// vectors satisfies the imbrication condition.
pub fn projective_plane() -> FundamentalSet {
    complement_set(
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[3, 4, 6],
            &[2, 4, 5],
            &[3, 5, 6],
            &[2, 4, 6],
        ],
        6,
    )
}

/// The fundamental set whose associated complex has the given facets.
pub fn complement_set(facets: &[&[usize]], n: usize) -> FundamentalSet {
    let complex = SimplicialComplex::closure(facets.iter().map(|f| f.iter().copied()), n)
        .expect("fixture complex");
    FundamentalSet::from_complex(&complex).expect("pure fixture complex")
}

/// Every named realization, by name.
pub fn realizations() -> Vec<(&'static str, Realization)> {
    vec![
        ("square", square()),
        ("convex_pentagon", convex_pentagon()),
        ("nonconvex_pentagon", nonconvex_pentagon()),
        ("octahedron", octahedron()),
        ("triangle_around_outside", triangle_around_outside()),
        ("triangle_on_axis", triangle_on_axis()),
        ("path", path()),
    ]
}
