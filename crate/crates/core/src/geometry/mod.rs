//! Realizations of pure complexes in `Q^{d+1}` and the starshapedness
//! predicates on them.
//!
//! All predicates judge the realization at the origin. Use
//! [`Realization::centered`] to move a realization's base point there first.
//!
//! Homogenization appends the coordinate 1 last: `x ↦ (x, 1)`. The facet
//! form `phi_J(x) = det(p̃_{j1}, .., p̃_{j(d+1)}, x̃)` takes the facet's
//! points in increasing label order followed by `x̃`, and vanishes exactly
//! on the affine hull of the facet.

mod kernel;
mod predicates;
mod rationalize;
mod ray;
mod realization;

pub use kernel::{kernel, FacetHalfspace, KernelDescription};
pub(crate) use predicates::open_cones_meet;
pub use predicates::{
    check_sep, check_simpl, check_weakly_starshaped, is_starshaped_at_origin, SepWitness,
    StarshapeDefect, WeakStarDefect,
};
pub use rationalize::{
    facet_sign_vector, normalize_to_lattice, rationalize, LatticeRealization,
    DEFAULT_MAX_DENOMINATOR,
};
pub use ray::{ray_cast, sample_directions, RayCast};
pub use realization::{phi, Realization};
