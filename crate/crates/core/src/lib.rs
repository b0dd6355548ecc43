//! Extended affine Weyl group of type C~2 for Sp4: group arithmetic,
//! Iwahori-Hecke class polynomials, the conjugacy-class catalog with its
//! closed-form degree tables, and affine Deligne-Lusztig nonemptiness and
//! dimension via the dimension-equals-degree formula.


pub mod adlv;
pub mod classes;
pub mod coweight;
pub mod degrees;
pub mod element;
pub mod hecke;
pub mod lambda;
pub mod laurent;
pub mod weyl;

pub use classes::{classify, catalog, ClassId, ClassInvariants};
pub use coweight::{cw, Coweight, PositiveRoot, RatCoweight};
pub use element::{
    ball, conjugacy_orbit, elt, parse_element, print_element, ExtAffineElement, Gen, ReducedWord,
};
pub use hecke::{ClassPolyCtx, ClassPolyVector, HeckeElement, ShiftOutcome, Side};
pub use adlv::{adlv, enumerate_b, matching_classes, AdlvAnswer, BLabel};
pub use degrees::{closed_form_degree, closed_form_table, Unmatched};
pub use laurent::{Degree, Laurent};
