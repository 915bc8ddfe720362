//! Exact rational and polynomial arithmetic.

pub mod bipoly;
pub mod modp;
pub mod primes;
pub mod rational;
pub mod resultant;
pub mod squarefree;
pub mod unipoly;

pub use bipoly::{resultant_main_exact, resultant_main_modular, BiPoly};
pub use modp::{factor_mod_p, PrimePoly};
pub use rational::{is_square_rational, Rational};
pub use resultant::{cubic_discriminant, discriminant, resultant, sylvester_resultant};
pub use squarefree::{is_square_polynomial, is_squarefree, squarefree_decompose, SquarefreeDecomposition};
pub use unipoly::{gcd_poly, UniPoly};
