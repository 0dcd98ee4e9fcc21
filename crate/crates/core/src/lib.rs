//! Closed-form spectra of arrow-bordered circulant (abc) matrices
//!
//! ```text
//!            [ -nc  b  b  ...  b ]
//! m_n(a,b,c) = [  b                ]
//!            [  :   circ(c,a,0,...,0,a) ]
//!            [  b                ]
//! ```
//!
//! together with their parent families (circulant and regular arrowhead
//! matrices), the analysis of the eigenlines `lambda(c)` (crossings,
//! transition and extreme points) and the weighted wheel graphs whose
//! adjacency matrices they are. The [`oracle`] module is an independent dense
//! Jacobi eigensolver used to check every closed form.

pub mod abc;
pub mod arrowhead;
pub mod circulant;
pub mod error;
pub mod matrices;
pub mod oracle;
pub mod special_points;
pub mod verification;
pub mod wheelgraph;

pub use abc::{
    abc_eigenbasis, abc_spectrum, crossing_abscissas, multiplicity_profile, small_n_spectrum,
    spectrum_cardinality, AbcEigenbasis, AbcSpectrum, EigenGroup, EigenLabel, MultiplicityProfile,
};
pub use arrowhead::{arrowhead_eigenvalues, arrowhead_spectrum_cardinality, ArrowheadSpectrum};
pub use circulant::{circulant_eigenpairs, ComplexEigenpair};
pub use error::{Error, Result};
pub use matrices::{
    materialize_abc, materialize_arrowhead, materialize_circulant, normalize_b, AbcParams,
    ArrowheadParams, CirculantParams, DenseMatrix, DenseSymmetricMatrix, SmallOrderVariant,
};
pub use oracle::{count_near, jacobi_eigenvalues, residual, OracleSpectrum};
pub use special_points::{
    classify_configuration, extreme_eigenvalues, extreme_extrema, limit_transition_curve,
    special_points, Configuration, ExtremeBranch, ExtremeEigenvalues, ExtremeExtremum, Point,
    Regime, SpecialPoints,
};
pub use wheelgraph::{build_wheel, wheel_adjacency, WeightedWheel, WheelKind};
