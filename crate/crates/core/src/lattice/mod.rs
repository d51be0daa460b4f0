//! Changemaker vectors and the lattice-embedding obstruction.
//!
//! A negative-definite Gram matrix `G` of rank `n` and a changemaker `σ ∈ Z^{n+1}` of norm `p`
//! admit an embedding when there are vectors `v₁..v_n ∈ Z^{n+1}` with `⟨vᵢ, σ⟩ = 0` and
//! `⟨vᵢ, vⱼ⟩ = Gᵢⱼ` under the negative-definite pairing `⟨x, y⟩ = −Σ xₖyₖ`. Internally the
//! search works with the positive-definite negation `−G` and ordinary dot products.

mod changemaker;
mod embed;
mod gram;

pub use changemaker::{enumerate_changemakers, genus_from_changemaker, is_changemaker, max_changemaker_norm, Changemaker};
pub use embed::{
    changemaker_obstruction, embed_in_complement, embed_in_complement_naive, ChangemakerVerdict, Embedding,
    ObstructionOptions, SearchStats,
};
pub use gram::{integer_rank, GramMatrix};
