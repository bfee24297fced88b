//! Seeded randomized trials over catalog algebras: random valid Rota-Baxter representations
//! and random perturbations, checked against the structural identities.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{sample_pool, CatalogEntry};
use crate::algebra::AlgebraMorphism;
use crate::cohomology::{
    cohomology_rb, is_antiderivation, phi_matrix, rb0_matrix, rb1_matrix, zigzag_matrix, RbCochain1,
};
use crate::linalg::{add_vectors, kernel_basis, scale_vector, unit_vector, Matrix, SubspaceBasis, Vector};
use crate::rational::Rational;
use crate::rep::{RbRepresentation, Representation};
use crate::rota_baxter::RbOperator;

pub const TRIAL_SEED: u64 = 0x4a4a_5242_2024;

pub const PROPERTIES: [&str; 10] = [
    "d1 after delta0 vanishes",
    "d_tilde1 after delta_tilde0 vanishes",
    "d_tilde0 after phi2 equals phi1 after delta0",
    "d_RB1 after delta_RB0 vanishes",
    "paired iff operator and compatibility identities hold",
    "graph is a subalgebra iff paired",
    "semidirect operator identity iff compatibility holds",
    "degree-1 cocycles are exactly the antiderivations",
    "inner antiderivations lie in the antiderivation space",
    "dim H1 is invariant under conjugation by automorphisms",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyTally {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// Index of the first failing trial.
    pub first_failure: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialSummary {
    pub algebra: &'static str,
    pub trials: usize,
    pub properties: Vec<PropertyTally>,
}

impl TrialSummary {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }
}

fn pool_with_zero() -> Vec<Rational> {
    let mut p = sample_pool();
    p.push(Rational::zero());
    p
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    sample_pool().choose(rng).expect("pool").clone()
}

/// A random operator from the entry's families that passes the operator identity.
pub fn random_operator(entry: &CatalogEntry, rng: &mut ChaCha8Rng) -> RbOperator {
    let pool = pool_with_zero();
    for _ in 0..10_000 {
        let fam = entry.families.choose(rng).expect("families");
        let point: Vec<Rational> = (0..fam.params.len()).map(|_| pool.choose(rng).expect("pool").clone()).collect();
        if let Ok((w, op)) = fam.evaluate(entry.algebra.dim(), &point) {
            let rb = RbOperator::new(entry.algebra.clone(), w, op).expect("shapes");
            if rb.check().holds {
                return rb;
            }
        }
    }
    RbOperator::new(entry.algebra.clone(), Rational::zero(), Matrix::zeros(entry.algebra.dim(), entry.algebra.dim()))
        .expect("zero operator")
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let pool = pool_with_zero();
    Matrix::from_fn(rows, cols, |_, _| pool.choose(rng).expect("pool").clone())
}

/// A random valid representation of the operator, from a few structurally different kinds.
pub fn random_representation(rb: &RbOperator, rng: &mut ChaCha8Rng) -> RbRepresentation {
    let adj = RbRepresentation::adjoint(rb).expect("catalog algebras satisfy the axioms");
    match rng.gen_range(0..4) {
        0 => adj,
        1 => {
            let extra = RbRepresentation::new(
                Representation::zero(rb.algebra().clone(), 1),
                rb.clone(),
                random_matrix(1, 1, rng),
            )
            .expect("same base");
            RbRepresentation::direct_sum(&[adj, extra]).expect("same base")
        }
        2 => RbRepresentation::new(Representation::zero(rb.algebra().clone(), 2), rb.clone(), random_matrix(2, 2, rng))
            .expect("same base"),
        _ => {
            if rb.weight().is_zero() {
                adj.dual().expect("weight zero")
            } else {
                adj.reflect().expect("valid operator")
            }
        }
    }
}

fn perturb(m: &Matrix, rng: &mut ChaCha8Rng) -> Matrix {
    let mut out = m.clone();
    let (r, c) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    let bump = nonzero(rng);
    out[(r, c)] = &out[(r, c)] + &bump;
    out
}

/// `id + u w^T` with `u` annihilating the algebra and `w` vanishing on all products; such maps
/// are multiplicative, and invertible unless `w . u = -1`.
pub fn random_automorphism(rb: &RbOperator, rng: &mut ChaCha8Rng) -> Option<AlgebraMorphism> {
    let a = rb.algebra();
    let n = a.dim();
    let left: Vec<Matrix> = (0..n).map(|i| a.left_multiplication(&unit_vector(n, i)).expect("dims")).collect();
    let ann = kernel_basis(&Matrix::vstack(&left.iter().collect::<Vec<_>>()));
    let products: Vec<Vector> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| a.basis_product(i, j)).collect();
    let square = SubspaceBasis::span(n, &products).expect("dims");
    let w_space = if square.dim() == 0 {
        SubspaceBasis::full(n)
    } else {
        kernel_basis(&Matrix::from_rows(square.vectors().to_vec()).expect("rectangular"))
    };
    let combo = |basis: &SubspaceBasis, rng: &mut ChaCha8Rng| -> Vector {
        basis
            .vectors()
            .iter()
            .fold(vec![Rational::zero(); n], |acc, v| add_vectors(&acc, &scale_vector(&nonzero(rng), v)))
    };
    if ann.dim() == 0 || w_space.dim() == 0 {
        return None;
    }
    let (u, w) = (combo(&ann, rng), combo(&w_space, rng));
    let outer = Matrix::from_fn(n, n, |r, c| &u[r] * &w[c]);
    let psi = AlgebraMorphism::endomorphism(a.clone(), Matrix::identity(n).add(&outer)).ok()?;
    (psi.check().holds && psi.map.inverse().is_some()).then_some(psi)
}

#[derive(Default)]
struct Tallies(Vec<(usize, usize, Option<usize>)>);

impl Tallies {
    fn record(&mut self, prop: usize, trial: usize, ok: bool) {
        if self.0.is_empty() {
            self.0 = vec![(0, 0, None); PROPERTIES.len()];
        }
        let t = &mut self.0[prop];
        t.0 += 1;
        if !ok {
            t.1 += 1;
            t.2.get_or_insert(trial);
        }
    }
}

fn cohomology_dims(rr: &RbRepresentation) -> Option<usize> {
    cohomology_rb(rr, 1).ok().map(|r| r.dim_cohomology)
}

/// Runs `trials` seeded trials on one catalog algebra.
pub fn run_trials(entry: &CatalogEntry, trials: usize, seed: u64) -> TrialSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ entry.id.bytes().fold(0u64, |h, b| h.rotate_left(8) ^ b as u64));
    let mut t = Tallies::default();
    for trial in 0..trials {
        let base = random_operator(entry, &mut rng);
        let rr = random_representation(&base, &mut rng);
        let rb = rr.rb().clone();
        let (n, m) = (rb.dim(), rr.module_dim());

        let d1 = zigzag_matrix(&rr, 1, false, false).expect("valid");
        let dl0 = zigzag_matrix(&rr, 0, true, false).expect("valid");
        t.record(0, trial, d1.mul(&dl0).is_zero());
        let dt1 = zigzag_matrix(&rr, 1, false, true).expect("valid");
        let dlt0 = zigzag_matrix(&rr, 0, true, true).expect("valid");
        t.record(1, trial, dt1.mul(&dlt0).is_zero());
        let dt0 = zigzag_matrix(&rr, 0, false, true).expect("valid");
        let lhs = dt0.mul(&phi_matrix(&rr, 0, true).expect("valid"));
        let rhs = phi_matrix(&rr, 1, false).expect("valid").mul(&dl0);
        t.record(2, trial, lhs == rhs);
        let rb1 = rb1_matrix(&rr, false).expect("valid");
        let rb0 = rb0_matrix(&rr, true).expect("valid");
        t.record(3, trial, rb1.mul(&rb0).is_zero());

        // Valid instance plus one perturbation of I and one of T.
        let variants = [
            rr.clone(),
            RbRepresentation::new(
                rr.rep().clone(),
                RbOperator::new(rb.algebra().clone(), rb.weight().clone(), perturb(rb.op(), &mut rng)).expect("shape"),
                rr.t_op().clone(),
            )
            .expect("same base"),
            RbRepresentation::new(rr.rep().clone(), rb.clone(), perturb(rr.t_op(), &mut rng)).expect("same base"),
        ];
        for v in &variants {
            let direct = v.rb().check().holds && v.check_compatibility().holds;
            let paired = v.check_paired().expect("representation is valid");
            t.record(4, trial, paired.paired == direct);
            t.record(5, trial, paired.graph_subalgebra == paired.paired);
            t.record(6, trial, v.semidirect_product().check().holds == direct);
        }

        // Cocycle membership against the antiderivation identities, on a kernel combination and a perturbation.
        let z = kernel_basis(&rb1);
        let mut x = vec![Rational::zero(); n * m + m];
        for b in z.vectors() {
            x = add_vectors(&x, &scale_vector(&nonzero(&mut rng), b));
        }
        let mut y = x.clone();
        let k = rng.gen_range(0..y.len());
        y[k] = &y[k] + &nonzero(&mut rng);
        for v in [&x, &y] {
            let c = RbCochain1::unflatten(n, m, v).expect("shape");
            let anti = is_antiderivation(&rr, &c.f.to_matrix().expect("degree 1"), &c.g).expect("shape");
            t.record(7, trial, anti == z.contains(v));
        }
        let inner = rb0.mul_vec(&(0..m).map(|_| nonzero(&mut rng)).collect::<Vec<_>>());
        t.record(8, trial, z.contains(&inner));

        if let Some(psi) = random_automorphism(&rb, &mut rng) {
            let conj = rb.conjugate(&psi).expect("automorphism");
            let a1 = cohomology_dims(&RbRepresentation::adjoint(&rb).expect("valid"));
            let a2 = cohomology_dims(&RbRepresentation::adjoint(&conj).expect("valid"));
            t.record(9, trial, conj.check().holds && a1.is_some() && a1 == a2);
        }
    }
    let properties = PROPERTIES
        .iter()
        .zip(t.0.iter().chain(std::iter::repeat(&(0, 0, None))))
        .map(|(name, &(checked, failures, first_failure))| PropertyTally { name, checked, failures, first_failure })
        .collect();
    TrialSummary { algebra: entry.id, trials, properties }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get;

    #[test]
    fn small_run_holds() {
        let s = run_trials(get("dim2").unwrap(), 5, TRIAL_SEED);
        assert!(s.all_hold(), "{s:?}");
        assert_eq!(s, run_trials(get("dim2").unwrap(), 5, TRIAL_SEED));
    }
}
