//! Jacobi-Jordan algebras given by structure constants.

use crate::check::{CheckOutcome, Witness};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, axpy, unit_vector, zero_vector, Matrix, SubspaceBasis, Vector};
use crate::rational::Rational;

/// `e_i * e_j = sum_k c[i][j][k] e_k`, stored densely at `(i * n + j) * n + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JjAlgebra {
    dim: usize,
    consts: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: CheckOutcome,
    pub jacobi: CheckOutcome,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.commutative.holds && self.jacobi.holds
    }
}

/// One listed product `e_i * e_j = sum c e_k`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub result: Vec<(usize, Rational)>,
}

impl JjAlgebra {
    pub fn zero(dim: usize) -> Self {
        JjAlgebra { dim, consts: vec![Rational::zero(); dim * dim * dim] }
    }

    /// Raw constructor; no symmetry or identity is imposed.
    pub fn from_constants(dim: usize, consts: Vec<Rational>) -> Result<Self> {
        if consts.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!("{} structure constants for dimension {dim}", consts.len())));
        }
        Ok(JjAlgebra { dim, consts })
    }

    /// Builds an algebra from listed products. The `(j, i)` mirror of a listed `(i, j)` is implied.
    /// If both orders are listed with different values, `strict` rejects the input; otherwise the
    /// symmetric part `(c_ij + c_ji) / 2` is kept.
    pub fn from_products(dim: usize, products: &[ProductEntry], strict: bool) -> Result<Self> {
        let mut listed = vec![None::<Vector>; dim * dim];
        for p in products {
            if p.i >= dim || p.j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "product (e{}, e{}) outside dimension {dim}",
                    p.i + 1,
                    p.j + 1
                )));
            }
            let slot = &mut listed[p.i * dim + p.j];
            if slot.is_some() {
                return Err(Error::Parse(format!("product (e{}, e{}) listed twice", p.i + 1, p.j + 1)));
            }
            let mut v = zero_vector(dim);
            for (k, c) in &p.result {
                if *k >= dim {
                    return Err(Error::DimensionMismatch(format!("basis index e{} outside dimension {dim}", k + 1)));
                }
                v[*k] += c;
            }
            *slot = Some(v);
        }
        let mut alg = Self::zero(dim);
        let half = Rational::new(1, 2);
        for i in 0..dim {
            for j in i..dim {
                let v = match (&listed[i * dim + j], &listed[j * dim + i]) {
                    (Some(a), Some(b)) if a != b => {
                        if strict {
                            return Err(Error::AsymmetricInput(i, j));
                        }
                        add_vectors(a, b).iter().map(|x| x * &half).collect()
                    }
                    (Some(a), _) | (None, Some(a)) => a.clone(),
                    (None, None) => continue,
                };
                for (k, c) in v.iter().enumerate() {
                    alg.consts[(i * dim + j) * dim + k] = c.clone();
                    alg.consts[(j * dim + i) * dim + k] = c.clone();
                }
            }
        }
        Ok(alg)
    }

    /// Listed form for files: pairs `i <= j` with nonzero products, in lexicographic order.
    pub fn products(&self) -> Vec<ProductEntry> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let result: Vec<(usize, Rational)> =
                    (0..n).filter_map(|k| Some((k, self.c(i, j, k).clone())).filter(|(_, c)| !c.is_zero())).collect();
                if !result.is_empty() {
                    out.push(ProductEntry { i, j, result });
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.consts
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let n = self.dim;
        self.consts[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        let n = self.dim;
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "multiplying vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                axpy(&mut out, &s, &self.consts[(i * n + j) * n..(i * n + j + 1) * n]);
            }
        }
        out
    }

    /// Cyclic sum `(x y) z + (y z) x + (z x) y` at basis vectors.
    fn jacobi_sum(&self, i: usize, j: usize, l: usize) -> Vector {
        let n = self.dim;
        let e = |k| unit_vector(n, k);
        let t1 = self.mul_unchecked(&self.basis_product(i, j), &e(l));
        let t2 = self.mul_unchecked(&self.basis_product(j, l), &e(i));
        let t3 = self.mul_unchecked(&self.basis_product(l, i), &e(j));
        add_vectors(&add_vectors(&t1, &t2), &t3)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let mut comm = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if (0..n).any(|k| self.c(i, j, k) != self.c(j, i, k)) {
                    comm = Some(Witness::Pair(i, j));
                    break 'outer;
                }
            }
        }
        // With commutativity the cyclic sum is symmetric in its arguments, so sorted triples suffice.
        let mut jac = None;
        'outer2: for i in 0..n {
            let j0 = if comm.is_none() { i } else { 0 };
            for j in j0..n {
                let l0 = if comm.is_none() { j } else { 0 };
                for l in l0..n {
                    if !self.jacobi_sum(i, j, l).iter().all(Rational::is_zero) {
                        jac = Some(Witness::Triple(i, j, l));
                        break 'outer2;
                    }
                }
            }
        }
        AxiomReport {
            commutative: CheckOutcome::from_first_failure(comm),
            jacobi: CheckOutcome::from_first_failure(jac),
        }
    }

    pub fn require_axioms(&self) -> Result<()> {
        let r = self.check_axioms();
        if let Some(w) = r.commutative.witness {
            return Err(Error::AxiomViolation(format!("commutativity fails at {w}")));
        }
        if let Some(w) = r.jacobi.witness {
            return Err(Error::AxiomViolation(format!("Jacobi identity fails at {w}")));
        }
        Ok(())
    }

    /// Matrix of `y -> x * y`.
    pub fn left_multiplication(&self, x: &[Rational]) -> Result<Matrix> {
        let n = self.dim;
        if x.len() != n {
            return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {n}", x.len())));
        }
        let cols: Vec<Vector> = (0..n).map(|j| self.mul_unchecked(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Closure of a subspace under the product, tested on pairs of basis vectors.
    pub fn is_subalgebra(&self, span: &SubspaceBasis) -> bool {
        if span.ambient_dim() != self.dim {
            return false;
        }
        let v = span.vectors();
        (0..v.len()).all(|a| (a..v.len()).all(|b| span.contains(&self.mul_unchecked(&v[a], &v[b]))))
    }
}

/// Linear map between algebras; columns are images of source basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: JjAlgebra,
    pub target: JjAlgebra,
    pub map: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: JjAlgebra, target: JjAlgebra, map: Matrix) -> Result<Self> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map between algebras of dimensions {} and {}",
                map.rows(),
                map.cols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn endomorphism(algebra: JjAlgebra, map: Matrix) -> Result<Self> {
        Self::new(algebra.clone(), algebra, map)
    }

    /// `phi(e_i * e_j) = phi(e_i) * phi(e_j)` for all `i <= j`.
    pub fn check(&self) -> CheckOutcome {
        let n = self.source.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.map.column(i)).collect();
        for i in 0..n {
            for j in i..n {
                let lhs = self.map.mul_vec(&self.source.basis_product(i, j));
                let rhs = self.target.mul_unchecked(&cols[i], &cols[j]);
                if lhs != rhs {
                    return CheckOutcome::fail(Witness::Pair(i, j));
                }
            }
        }
        CheckOutcome::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    pub(crate) fn dim2() -> JjAlgebra {
        JjAlgebra::from_products(2, &[ProductEntry { i: 0, j: 0, result: vec![(1, q(1, 1))] }], true).unwrap()
    }

    fn dim3() -> JjAlgebra {
        JjAlgebra::from_products(3, &[ProductEntry { i: 0, j: 1, result: vec![(2, q(1, 1))] }], true).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn products() {
        let a = dim2();
        assert_eq!(a.multiply(&v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(a.multiply(&v(&[3, 5]), &v(&[0, 0])).unwrap(), v(&[0, 0]));
        assert_eq!(dim3().multiply(&v(&[1, 1, 0]), &v(&[1, 1, 0])).unwrap(), v(&[0, 0, 2]));
        assert!(a.multiply(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn axioms() {
        assert!(dim2().check_axioms().holds());
        assert!(JjAlgebra::zero(3).check_axioms().holds());
        let bad =
            JjAlgebra::from_products(2, &[ProductEntry { i: 1, j: 1, result: vec![(1, q(1, 1))] }], true).unwrap();
        let r = bad.check_axioms();
        assert!(r.commutative.holds);
        assert_eq!(r.jacobi.witness, Some(Witness::Triple(1, 1, 1)));
    }

    #[test]
    fn asymmetric_input() {
        let entries = [
            ProductEntry { i: 0, j: 1, result: vec![(0, q(1, 1))] },
            ProductEntry { i: 1, j: 0, result: vec![(0, q(3, 1))] },
        ];
        assert_eq!(JjAlgebra::from_products(2, &entries, true), Err(Error::AsymmetricInput(0, 1)));
        let sym = JjAlgebra::from_products(2, &entries, false).unwrap();
        assert_eq!(sym.c(1, 0, 0), &q(2, 1));
        assert_eq!(sym.c(0, 1, 0), &q(2, 1));
    }

    #[test]
    fn left_multiplication_matrices() {
        let a = dim2();
        assert!(a.left_multiplication(&v(&[0, 0])).unwrap().is_zero());
        assert_eq!(a.left_multiplication(&v(&[1, 0])).unwrap(), Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        let l = dim3().left_multiplication(&v(&[2, 5, 7])).unwrap();
        assert_eq!(l, Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[5, 2, 0]]));
    }

    #[test]
    fn morphisms_and_subalgebras() {
        let a = dim2();
        for m in [Matrix::identity(2), Matrix::zeros(2, 2), Matrix::from_ints(&[&[1, 0], &[7, 1]])] {
            assert!(AlgebraMorphism::endomorphism(a.clone(), m).unwrap().check().holds);
        }
        let not = AlgebraMorphism::endomorphism(a.clone(), Matrix::from_ints(&[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(not.check().witness, Some(Witness::Pair(0, 0)));
        assert!(a.is_subalgebra(&SubspaceBasis::full(2)));
        assert!(a.is_subalgebra(&SubspaceBasis::zero(2)));
        assert!(!a.is_subalgebra(&SubspaceBasis::span(2, &[v(&[1, 0])]).unwrap()));
    }
}
