//! Weighted Rota-Baxter operators and their polynomial constraint systems.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{AlgebraMorphism, JjAlgebra};
use crate::check::{CheckOutcome, Witness};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, image_basis, scale_vector, sub_vectors, unit_vector, Matrix, Vector};
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbOperator {
    algebra: JjAlgebra,
    weight: Rational,
    op: Matrix,
}

impl RbOperator {
    /// Checks shapes only; use [`RbOperator::check`] for the operator identity.
    pub fn new(algebra: JjAlgebra, weight: Rational, op: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} operator on an algebra of dimension {n}",
                op.rows(),
                op.cols()
            )));
        }
        Ok(RbOperator { algebra, weight, op })
    }

    pub fn algebra(&self) -> &JjAlgebra {
        &self.algebra
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn op(&self) -> &Matrix {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `I(x) I(y) - I(I(x) y + x I(y) + weight x y)` for coordinate vectors.
    pub fn residual(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let a = &self.algebra;
        let (ix, iy) = (self.op.mul_vec(x), self.op.mul_vec(y));
        let lhs = a.mul_unchecked(&ix, &iy);
        let inner = add_vectors(
            &add_vectors(&a.mul_unchecked(&ix, y), &a.mul_unchecked(x, &iy)),
            &scale_vector(&self.weight, &a.mul_unchecked(x, y)),
        );
        sub_vectors(&lhs, &self.op.mul_vec(&inner))
    }

    /// The operator identity on basis pairs `i <= j`.
    pub fn check(&self) -> CheckOutcome {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let r = self.residual(&unit_vector(n, i), &unit_vector(n, j));
                if r.iter().any(|c| !c.is_zero()) {
                    return CheckOutcome::fail(Witness::Pair(i, j));
                }
            }
        }
        CheckOutcome::pass()
    }

    pub fn require_rb(&self) -> Result<()> {
        match self.check().witness {
            Some(w) => Err(Error::NotRotaBaxter(w)),
            None => Ok(()),
        }
    }

    /// `x *_I y = I(x) y + x I(y) + weight x y`, on the raw operator (no check).
    pub(crate) fn derived_unchecked(&self) -> JjAlgebra {
        let n = self.dim();
        let a = &self.algebra;
        let mut consts = Vec::with_capacity(n * n * n);
        for i in 0..n {
            let ie = self.op.column(i);
            for j in 0..n {
                let je = self.op.column(j);
                let v = add_vectors(
                    &add_vectors(&a.mul_unchecked(&ie, &unit_vector(n, j)), &a.mul_unchecked(&unit_vector(n, i), &je)),
                    &scale_vector(&self.weight, &a.basis_product(i, j)),
                );
                consts.extend(v);
            }
        }
        JjAlgebra::from_constants(n, consts).expect("n^3 constants")
    }

    /// Derived algebra `(A, *_I)`.
    pub fn derived_algebra(&self) -> Result<JjAlgebra> {
        self.require_rb()?;
        Ok(self.derived_unchecked())
    }

    /// The same operator viewed on the derived algebra.
    pub fn derived_rb(&self) -> Result<RbOperator> {
        Ok(RbOperator { algebra: self.derived_algebra()?, weight: self.weight.clone(), op: self.op.clone() })
    }

    /// `mu I` with weight `mu * weight`.
    pub fn scale(&self, mu: &Rational) -> Result<RbOperator> {
        self.require_rb()?;
        Ok(RbOperator { algebra: self.algebra.clone(), weight: mu * &self.weight, op: self.op.scale(mu) })
    }

    /// `psi^-1 I psi` for an automorphism `psi` of the underlying algebra.
    pub fn conjugate(&self, psi: &AlgebraMorphism) -> Result<RbOperator> {
        if psi.source != self.algebra || psi.target != self.algebra {
            return Err(Error::NotAutomorphism("map is not an endomorphism of this algebra".into()));
        }
        if let Some(w) = psi.check().witness {
            return Err(Error::NotAutomorphism(format!("not multiplicative at {w}")));
        }
        let inv = psi.map.inverse().ok_or_else(|| Error::NotAutomorphism("matrix is singular".into()))?;
        Ok(RbOperator {
            algebra: self.algebra.clone(),
            weight: self.weight.clone(),
            op: inv.mul(&self.op).mul(&psi.map),
        })
    }

    /// `-weight id - I`, same weight.
    pub fn reflect(&self) -> Result<RbOperator> {
        self.require_rb()?;
        Ok(self.reflect_unchecked())
    }

    pub(crate) fn reflect_unchecked(&self) -> RbOperator {
        let n = self.dim();
        let op = Matrix::scalar(n, &-&self.weight).sub(&self.op);
        RbOperator { algebra: self.algebra.clone(), weight: self.weight.clone(), op }
    }

    /// For `I^2 = -I`: does `I(x) I(y) = -weight I(x y)` hold on the image of `I`?
    pub fn check_quasi_idempotent_identity(&self) -> Result<bool> {
        if self.op.mul(&self.op) != self.op.neg() {
            return Err(Error::HypothesisNotMet("operator does not satisfy I^2 = -I".into()));
        }
        let im = image_basis(&self.op);
        let v = im.vectors();
        let minus_w = -&self.weight;
        for a in 0..v.len() {
            for b in a..v.len() {
                let lhs = self.algebra.mul_unchecked(&self.op.mul_vec(&v[a]), &self.op.mul_vec(&v[b]));
                let rhs = scale_vector(&minus_w, &self.op.mul_vec(&self.algebra.mul_unchecked(&v[a], &v[b])));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Quadratic equations on the `n^2` entries of an unknown operator.
/// Variable `r * n + c` is entry `x_{r,c}` (row `r`, column `c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    pub dim: usize,
    pub num_vars: usize,
    pub polys: Vec<Poly>,
    /// `(i, j, k)` for each retained polynomial: pair `(e_i, e_j)`, output coordinate `k`.
    pub origins: Vec<(usize, usize, usize)>,
}

pub fn variable_name(dim: usize, var: usize) -> String {
    format!("x_{{{},{}}}", var / dim, var % dim)
}

impl PolySystem {
    pub fn eval(&self, assignment: &[Rational]) -> Result<Vector> {
        if assignment.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "assignment of length {} for {} unknowns",
                assignment.len(),
                self.num_vars
            )));
        }
        self.polys.iter().map(|p| p.eval(assignment)).collect()
    }

    pub fn vanishes_at(&self, assignment: &[Rational]) -> Result<bool> {
        Ok(self.eval(assignment)?.iter().all(Rational::is_zero))
    }

    /// Residuals at many assignments, evaluated in parallel.
    pub fn eval_many(&self, assignments: &[Vector]) -> Result<Vec<Vector>> {
        assignments.par_iter().map(|a| self.eval(a)).collect()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polys {
            writeln!(f, "{}", p.to_string_with(|v| variable_name(self.dim, v)))?;
        }
        Ok(())
    }
}

/// Matrix entries of an operator in variable order.
pub fn operator_assignment(op: &Matrix) -> Vector {
    op.entries().to_vec()
}

pub fn rb_constraint_system(a: &JjAlgebra, weight: &Rational) -> Result<PolySystem> {
    a.require_axioms()?;
    let n = a.dim();
    let nv = n * n;
    // Image of e_c under the unknown operator: column c.
    let image: Vec<Vec<Poly>> = (0..n).map(|c| (0..n).map(|r| Poly::var(nv, r * n + c)).collect()).collect();
    let mul = |x: &[Poly], y: &[Poly]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(nv); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = a.c(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &xy.scale(c);
                    }
                }
            }
        }
        out
    };
    let apply = |v: &[Poly]| -> Vec<Poly> {
        (0..n)
            .map(|r| {
                let mut acc = Poly::zero(nv);
                for (c, vc) in v.iter().enumerate() {
                    if !vc.is_zero() {
                        acc = &acc + &(&Poly::var(nv, r * n + c) * vc);
                    }
                }
                acc
            })
            .collect()
    };
    let unit = |i: usize| -> Vec<Poly> {
        (0..n).map(|k| if k == i { Poly::constant(nv, Rational::one()) } else { Poly::zero(nv) }).collect()
    };
    let mut polys = Vec::new();
    let mut origins = Vec::new();
    for i in 0..n {
        for j in i..n {
            let lhs = mul(&image[i], &image[j]);
            let eij: Vec<Poly> = a.basis_product(i, j).iter().map(|c| Poly::constant(nv, c * weight)).collect();
            let inner: Vec<Poly> = mul(&image[i], &unit(j))
                .iter()
                .zip(mul(&unit(i), &image[j]))
                .zip(&eij)
                .map(|((p, q), r)| &(p + &q) + r)
                .collect();
            let rhs = apply(&inner);
            for k in 0..n {
                let p = &lhs[k] - &rhs[k];
                if !p.is_zero() {
                    polys.push(p);
                    origins.push((i, j, k));
                }
            }
        }
    }
    Ok(PolySystem { dim: n, num_vars: nv, polys, origins })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ProductEntry;
    use crate::rational::q;

    fn dim2() -> JjAlgebra {
        JjAlgebra::from_products(2, &[ProductEntry { i: 0, j: 0, result: vec![(1, q(1, 1))] }], true).unwrap()
    }

    fn rb(op: &[&[i64]], w: i64) -> RbOperator {
        RbOperator::new(dim2(), Rational::from_int(w), Matrix::from_ints(op)).unwrap()
    }

    #[test]
    fn operator_identity() {
        assert!(rb(&[&[1, 0], &[0, 1]], -1).check().holds);
        assert!(rb(&[&[0, 0], &[1, 2]], 0).check().holds);
        let third = RbOperator::new(
            dim2(),
            q(1, 1),
            Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 3)]]).unwrap(),
        )
        .unwrap();
        assert!(third.check().holds);
        assert_eq!(rb(&[&[1, 0], &[0, 0]], 0).check().witness, Some(Witness::Pair(0, 0)));
        assert!(RbOperator::new(dim2(), q(0, 1), Matrix::identity(3)).is_err());
    }

    #[test]
    fn derived_products() {
        let d = rb(&[&[2, 0], &[3, 1]], 0).derived_algebra().unwrap();
        assert_eq!(d.basis_product(0, 0), vec![q(0, 1), q(4, 1)]);
        assert_eq!(d.basis_product(0, 1), vec![q(0, 1), q(0, 1)]);
        assert_eq!(d.basis_product(1, 1), vec![q(0, 1), q(0, 1)]);
        assert_eq!(rb(&[&[1, 0], &[0, 1]], -1).derived_algebra().unwrap(), dim2());
        assert!(rb(&[&[0, 0], &[0, 0]], 0).derived_algebra().unwrap().constants().iter().all(Rational::is_zero));
        assert!(matches!(rb(&[&[1, 0], &[0, 0]], 0).derived_algebra(), Err(Error::NotRotaBaxter(_))));
    }

    #[test]
    fn elementary_constructions() {
        let r = RbOperator::new(
            dim2(),
            q(1, 1),
            Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 3)]]).unwrap(),
        )
        .unwrap();
        let s = r.scale(&q(2, 1)).unwrap();
        assert_eq!(s.weight(), &q(2, 1));
        assert!(s.check().holds);
        let f = r.reflect().unwrap();
        assert_eq!(f.op(), &Matrix::from_rows(vec![vec![q(-2, 1), q(0, 1)], vec![q(0, 1), q(-4, 3)]]).unwrap());
        assert!(f.check().holds);
        assert_eq!(f.reflect().unwrap(), r);
        let base = rb(&[&[0, 0], &[1, 2]], 0);
        let psi = AlgebraMorphism::endomorphism(dim2(), Matrix::from_ints(&[&[1, 0], &[5, 1]])).unwrap();
        assert!(base.conjugate(&psi).unwrap().check().holds);
        let singular = AlgebraMorphism::endomorphism(dim2(), Matrix::zeros(2, 2)).unwrap();
        assert!(matches!(base.conjugate(&singular), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn quasi_idempotent() {
        assert!(rb(&[&[0, 0], &[0, 0]], 0).check_quasi_idempotent_identity().unwrap());
        let minus_id = rb(&[&[-1, 0], &[0, -1]], 1);
        assert!(minus_id.check().holds);
        assert!(minus_id.check_quasi_idempotent_identity().unwrap());
        assert!(matches!(
            rb(&[&[1, 0], &[0, 1]], -1).check_quasi_idempotent_identity(),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn constraint_system_matches_check() {
        assert!(rb_constraint_system(&JjAlgebra::zero(3), &q(1, 1)).unwrap().polys.is_empty());
        let sys = rb_constraint_system(&dim2(), &q(1, 1)).unwrap();
        assert!(sys.polys.iter().all(|p| p.total_degree() <= 2));
        let first_pair: Vec<String> = sys
            .polys
            .iter()
            .zip(&sys.origins)
            .filter(|(_, o)| (o.0, o.1) == (0, 0))
            .map(|(p, _)| p.to_string_with(|v| variable_name(2, v)))
            .collect();
        assert!(first_pair.contains(&"1*x_{0,0}*x_{0,0} + -2*x_{0,0}*x_{1,1} + -1*x_{1,1}".to_string()));
        let sys0 = rb_constraint_system(&dim2(), &q(0, 1)).unwrap();
        let last = sys0.origins.iter().position(|o| (o.0, o.1) == (1, 1)).unwrap();
        assert_eq!(sys0.polys[last].to_string_with(|v| variable_name(2, v)), "1*x_{0,1}*x_{0,1}");
        assert!(sys0.vanishes_at(&operator_assignment(&Matrix::from_ints(&[&[0, 0], &[1, 2]]))).unwrap());
        assert!(sys0.vanishes_at(&vec![q(0, 1); 4]).unwrap());
        assert!(!sys0.vanishes_at(&operator_assignment(&Matrix::from_ints(&[&[1, 0], &[0, 0]]))).unwrap());
        assert!(sys0.eval(&[q(0, 1)]).is_err());
    }
}
