//! Seeded generators for test inputs: random matrices, weights, and elements
//! that are group invertible (or deliberately not) by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Mat, Weight};
use crate::scalar::StarScalar;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Signs on the diagonal of the middle factor of a generated weight g*·d·g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    /// d = I: positive definite.
    Definite,
    /// d has at least one −1 (when dim ≥ 2, also at least one +1).
    Indefinite,
}

pub fn random_mat<S: StarScalar>(dim: usize, seed: u64) -> Mat<S> {
    random_mat_with(dim, &mut rng_from_seed(seed))
}

pub fn random_mat_with<S: StarScalar, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Mat<S> {
    Mat::from_fn(dim, |_, _| S::sample(rng))
}

/// Rejection-samples until invertible.
pub fn random_invertible_with<S: StarScalar, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Mat<S> {
    loop {
        let m = random_mat_with(dim, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_weight<S: StarScalar>(dim: usize, signature: Signature, seed: u64) -> Weight<S> {
    random_weight_with(dim, signature, &mut rng_from_seed(seed))
}

/// g*·d·g with g random invertible and d = diag(±1).
pub fn random_weight_with<S: StarScalar, R: Rng + ?Sized>(
    dim: usize,
    signature: Signature,
    rng: &mut R,
) -> Weight<S> {
    let g = random_invertible_with::<S, _>(dim, rng);
    let signs: Vec<S> = match signature {
        Signature::Definite => vec![S::one(); dim],
        Signature::Indefinite => {
            let negative = rng.gen_range(0..dim);
            let keep_positive = if dim > 1 {
                Some((negative + rng.gen_range(1..dim)) % dim)
            } else {
                None
            };
            (0..dim)
                .map(|i| {
                    if i == negative || (Some(i) != keep_positive && rng.gen_bool(0.5)) {
                        -S::one()
                    } else {
                        S::one()
                    }
                })
                .collect()
        }
    };
    let w = &(&g.star() * &Mat::diag(signs)) * &g;
    Weight::new(w).expect("g*dg is Hermitian and invertible")
}

pub fn random_group_invertible<S: StarScalar>(dim: usize, rank: usize, seed: u64) -> Mat<S> {
    random_group_invertible_with(dim, rank, &mut rng_from_seed(seed))
}

/// u·blockdiag(c, 0)·u⁻¹ with c an invertible `rank × rank` block.
pub fn random_group_invertible_with<S: StarScalar, R: Rng + ?Sized>(
    dim: usize,
    rank: usize,
    rng: &mut R,
) -> Mat<S> {
    assert!(rank <= dim, "rank exceeds dimension");
    let c = if rank > 0 {
        Some(random_invertible_with::<S, _>(rank, rng))
    } else {
        None
    };
    let core = Mat::from_fn(dim, |i, j| match &c {
        Some(c) if i < rank && j < rank => c.get(i, j).clone(),
        _ => S::zero(),
    });
    conjugate_randomly(&core, rng)
}

/// u·blockdiag(c, J)·u⁻¹ with J a nonzero nilpotent block, so a ∉ a²R.
/// Requires dim ≥ 2.
pub fn random_non_group_invertible_with<S: StarScalar, R: Rng + ?Sized>(
    dim: usize,
    rng: &mut R,
) -> Mat<S> {
    assert!(dim >= 2, "a nilpotent block needs dim >= 2");
    let rank = rng.gen_range(0..=dim - 2);
    let mut core = Mat::zeros(dim);
    if rank > 0 {
        let c = random_invertible_with::<S, _>(rank, rng);
        for i in 0..rank {
            for j in 0..rank {
                core.set(i, j, c.get(i, j).clone());
            }
        }
    }
    // Jordan block of size ≥ 2 at eigenvalue 0.
    for i in rank..dim - 1 {
        core.set(i, i + 1, S::one());
    }
    conjugate_randomly(&core, rng)
}

fn conjugate_randomly<S: StarScalar, R: Rng + ?Sized>(core: &Mat<S>, rng: &mut R) -> Mat<S> {
    let u = random_invertible_with::<S, _>(core.dim(), rng);
    let u_inv = u.inverse().expect("u is invertible");
    &(&u * core) * &u_inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational, F3};

    #[test]
    fn weights_are_hermitian_and_invertible() {
        for seed in 0..20 {
            for sig in [Signature::Definite, Signature::Indefinite] {
                let w = random_weight::<GaussianRational>(3, sig, seed);
                assert!(w.mat().is_hermitian());
                assert!(w.mat().is_invertible());
            }
        }
    }

    #[test]
    fn group_invertible_extremes() {
        let full = random_group_invertible::<GaussianRational>(3, 3, 7);
        assert!(full.is_invertible());
        assert!(random_group_invertible::<GaussianRational>(3, 0, 7).is_zero());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_mat::<F3>(3, 11), random_mat::<F3>(3, 11));
        assert_eq!(
            random_weight::<GaussianRational>(2, Signature::Indefinite, 5),
            random_weight::<GaussianRational>(2, Signature::Indefinite, 5)
        );
    }
}
