//! Representations, Rota-Baxter representations and the structures they induce.

use crate::algebra::JjAlgebra;
use crate::check::{CheckOutcome, Witness};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, zero_vector, Matrix, SubspaceBasis, Vector};
use crate::rational::Rational;
use crate::rota_baxter::{operator_assignment, rb_constraint_system, RbOperator};

/// `rho(e_i)` as `m x m` matrices, one per algebra basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: JjAlgebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: JjAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} action matrix on a module of dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Representation { algebra, dim, action })
    }

    pub fn zero(algebra: JjAlgebra, dim: usize) -> Self {
        let action = vec![Matrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, dim, action }
    }

    /// `rho(x) y = x * y`.
    pub fn adjoint(algebra: &JjAlgebra) -> Result<Self> {
        algebra.require_axioms()?;
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.left_multiplication(&unit_vector(n, i))).collect::<Result<_>>()?;
        Ok(Representation { algebra: algebra.clone(), dim: n, action })
    }

    pub fn algebra(&self) -> &JjAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `rho(x)` for a coordinate vector `x`.
    pub fn rho(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (xi, m) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi));
            }
        }
        out
    }

    /// `rho(e_i e_j) = -rho(e_i) rho(e_j) - rho(e_j) rho(e_i)` for `i <= j`.
    pub fn check(&self) -> CheckOutcome {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i..n {
                let lhs = self.rho(&self.algebra.basis_product(i, j));
                let anti = self.action[i].mul(&self.action[j]).add(&self.action[j].mul(&self.action[i]));
                if !lhs.add(&anti).is_zero() {
                    return CheckOutcome::fail(Witness::Pair(i, j));
                }
            }
        }
        CheckOutcome::pass()
    }

    fn require_rep(&self) -> Result<()> {
        match self.check().witness {
            Some(w) => Err(Error::PrerequisiteFailed(format!("representation identity fails at {w}"))),
            None => Ok(()),
        }
    }

    /// Action of the doubled algebra on `V + V`:
    /// `(x, y)(u, v) = (rho(x) u, rho(x) v + rho(y) u + weight rho(y) v)`.
    pub fn doubled(&self, weight: &Rational) -> Result<Representation> {
        let algebra = doubling(&self.algebra, weight)?;
        let m = self.dim;
        let mut action = Vec::with_capacity(2 * self.action.len());
        for r in &self.action {
            action.push(Matrix::block_diag(&[r, r]));
        }
        for r in &self.action {
            let mut b = Matrix::zeros(2 * m, 2 * m);
            b.set_block(m, 0, r);
            b.set_block(m, m, &r.scale(weight));
            action.push(b);
        }
        Ok(Representation { algebra, dim: 2 * m, action })
    }
}

/// Algebra on `A + V` with `(x, u)(y, v) = (x y, rho(x) v + rho(y) u)`.
pub fn semidirect_algebra(rep: &Representation) -> JjAlgebra {
    let (n, m) = (rep.algebra.dim(), rep.dim);
    let d = n + m;
    let mut consts = vec![Rational::zero(); d * d * d];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in rep.algebra.basis_product(i, j).into_iter().enumerate() {
                consts[(i * d + j) * d + k] = c;
            }
        }
        for b in 0..m {
            for a in 0..m {
                let c = rep.action[i][(a, b)].clone();
                consts[(i * d + n + b) * d + n + a] = c.clone();
                consts[((n + b) * d + i) * d + n + a] = c;
            }
        }
    }
    JjAlgebra::from_constants(d, consts).expect("d^3 constants")
}

/// Algebra on `A + A` with `(x, x')(y, y') = (x y, x y' + x' y + weight x' y')`.
pub fn doubling(a: &JjAlgebra, weight: &Rational) -> Result<JjAlgebra> {
    a.require_axioms()?;
    Ok(doubling_with(a, [Rational::one(), Rational::one(), weight.clone()]))
}

/// Doubling with the second component taken literally as `x y' + x y' + weight x' y'`.
/// Only used to show that this reading breaks commutativity.
pub fn doubling_repeated_term(a: &JjAlgebra, weight: &Rational) -> JjAlgebra {
    doubling_with(a, [Rational::from_int(2), Rational::zero(), weight.clone()])
}

/// `coeffs` gives the factors on `x y'`, `x' y`, `x' y'` in the second slot.
fn doubling_with(a: &JjAlgebra, coeffs: [Rational; 3]) -> JjAlgebra {
    let [c_xy2, c_x2y, c_x2y2] = coeffs;
    let n = a.dim();
    let d = 2 * n;
    let mut consts = vec![Rational::zero(); d * d * d];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j).into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                consts[(i * d + j) * d + k] = c.clone();
                consts[(i * d + n + j) * d + n + k] = &c * &c_xy2;
                consts[((n + i) * d + j) * d + n + k] = &c * &c_x2y;
                consts[((n + i) * d + n + j) * d + n + k] = &c * &c_x2y2;
            }
        }
    }
    JjAlgebra::from_constants(d, consts).expect("d^3 constants")
}

/// Semidirect product of the doubling with the doubled representation, on `A + A + V + V`.
pub fn quadruple_semidirect(rep: &Representation, weight: &Rational) -> Result<JjAlgebra> {
    Ok(semidirect_algebra(&rep.doubled(weight)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairedReport {
    pub paired: bool,
    pub graph_subalgebra: bool,
}

/// Decides whether `(I, T)` is a paired operator for `rep` at `weight`, by two routes:
/// the defining identities, and closure of the graph inside the quadruple algebra.
pub fn check_paired(rep: &Representation, weight: &Rational, i_op: &Matrix, t_op: &Matrix) -> Result<PairedReport> {
    rep.algebra.require_axioms()?;
    rep.require_rep()?;
    let (n, m) = (rep.algebra.dim(), rep.dim);
    if i_op.rows() != n || i_op.cols() != n || t_op.rows() != m || t_op.cols() != m {
        return Err(Error::DimensionMismatch("operator shapes do not match the representation".into()));
    }
    let rb_ok = rb_constraint_system(&rep.algebra, weight)?.vanishes_at(&operator_assignment(i_op))?;
    let compat_ok = (0..n).all(|i| compat_defect(rep, weight, i_op, t_op, i).is_zero());
    let quad = quadruple_semidirect(rep, weight)?;
    let d = 2 * n + 2 * m;
    let mut gens: Vec<Vector> = Vec::with_capacity(n + m);
    for i in 0..n {
        let mut v = zero_vector(d);
        for (r, c) in i_op.column(i).into_iter().enumerate() {
            v[r] = c;
        }
        v[n + i] = Rational::one();
        gens.push(v);
    }
    for j in 0..m {
        let mut v = zero_vector(d);
        for (r, c) in t_op.column(j).into_iter().enumerate() {
            v[2 * n + r] = c;
        }
        v[2 * n + m + j] = Rational::one();
        gens.push(v);
    }
    let graph = SubspaceBasis::span(d, &gens)?;
    Ok(PairedReport { paired: rb_ok && compat_ok, graph_subalgebra: quad.is_subalgebra(&graph) })
}

/// `rho(I e_i) T - T (rho(I e_i) + rho(e_i) T + weight rho(e_i))`.
fn compat_defect(rep: &Representation, weight: &Rational, i_op: &Matrix, t_op: &Matrix, i: usize) -> Matrix {
    let r_ie = rep.rho(&i_op.column(i));
    let r = &rep.action[i];
    let inner = r_ie.add(&r.mul(t_op)).add(&r.scale(weight));
    r_ie.mul(t_op).sub(&t_op.mul(&inner))
}

/// A representation together with `T` on the module, over a Rota-Baxter operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbRepresentation {
    rep: Representation,
    rb: RbOperator,
    t_op: Matrix,
}

impl RbRepresentation {
    pub fn new(rep: Representation, rb: RbOperator, t_op: Matrix) -> Result<Self> {
        if rep.algebra() != rb.algebra() {
            return Err(Error::MixedBase);
        }
        if t_op.rows() != rep.dim() || t_op.cols() != rep.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} module operator on a module of dimension {}",
                t_op.rows(),
                t_op.cols(),
                rep.dim()
            )));
        }
        Ok(RbRepresentation { rep, rb, t_op })
    }

    /// `V = A`, `rho = ad`, `T = I`.
    pub fn adjoint(rb: &RbOperator) -> Result<Self> {
        let rep = Representation::adjoint(rb.algebra())?;
        Ok(RbRepresentation { rep, t_op: rb.op().clone(), rb: rb.clone() })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn rb(&self) -> &RbOperator {
        &self.rb
    }

    pub fn t_op(&self) -> &Matrix {
        &self.t_op
    }

    pub fn weight(&self) -> &Rational {
        self.rb.weight()
    }

    pub fn algebra(&self) -> &JjAlgebra {
        self.rb.algebra()
    }

    pub fn module_dim(&self) -> usize {
        self.rep.dim()
    }

    /// The compatibility identity alone, without checking the base structures.
    pub fn check_compatibility(&self) -> CheckOutcome {
        let m = self.rep.dim();
        for i in 0..self.algebra().dim() {
            let defect = compat_defect(&self.rep, self.weight(), self.rb.op(), &self.t_op, i);
            if let Some(u) = (0..m).find(|&u| (0..m).any(|r| !defect[(r, u)].is_zero())) {
                return CheckOutcome::fail(Witness::Mixed(i, u));
            }
        }
        CheckOutcome::pass()
    }

    /// Compatibility identity, after confirming the representation and operator identities.
    pub fn check(&self) -> Result<CheckOutcome> {
        self.rep.require_rep()?;
        if let Some(w) = self.rb.check().witness {
            return Err(Error::PrerequisiteFailed(format!("Rota-Baxter identity fails at {w}")));
        }
        Ok(self.check_compatibility())
    }

    /// True iff the representation, operator and compatibility identities all hold.
    pub fn is_valid(&self) -> bool {
        self.check().map(|c| c.holds).unwrap_or(false)
    }

    /// Block-diagonal sum; all summands must share one operator.
    pub fn direct_sum(parts: &[RbRepresentation]) -> Result<RbRepresentation> {
        let first = parts.first().ok_or_else(|| Error::Parameter("direct sum of no summands".into()))?;
        if parts.iter().any(|p| p.rb != first.rb) {
            return Err(Error::MixedBase);
        }
        let n = first.algebra().dim();
        let action =
            (0..n).map(|i| Matrix::block_diag(&parts.iter().map(|p| &p.rep.action[i]).collect::<Vec<_>>())).collect();
        let dim = parts.iter().map(|p| p.rep.dim).sum();
        let t_op = Matrix::block_diag(&parts.iter().map(|p| &p.t_op).collect::<Vec<_>>());
        Ok(RbRepresentation {
            rep: Representation { algebra: first.algebra().clone(), dim, action },
            rb: first.rb.clone(),
            t_op,
        })
    }

    /// Module `gl(V)` with `rho(x) f = sign * f rho(x)` and `T(f) = -weight f - f T`.
    /// Matrices `f` are flattened row-major, so right multiplication by `R` is `kron(I, R^T)`.
    pub fn hat_gl(&self, sign: &Rational) -> RbRepresentation {
        let m = self.rep.dim;
        let id = Matrix::identity(m);
        let action = self.rep.action.iter().map(|r| id.kron(&r.transpose()).scale(sign)).collect();
        let t_op = Matrix::scalar(m * m, &-self.weight()).sub(&id.kron(&self.t_op.transpose()));
        RbRepresentation {
            rep: Representation { algebra: self.algebra().clone(), dim: m * m, action },
            rb: self.rb.clone(),
            t_op,
        }
    }

    /// Dual module: `rho*(x) = rho(x)^T`, `T* = -T^T`. Weight must be zero.
    pub fn dual(&self) -> Result<RbRepresentation> {
        if !self.weight().is_zero() {
            return Err(Error::NonzeroWeight(self.weight().to_string()));
        }
        let action = self.rep.action.iter().map(Matrix::transpose).collect();
        Ok(RbRepresentation {
            rep: Representation { algebra: self.algebra().clone(), dim: self.rep.dim, action },
            rb: self.rb.clone(),
            t_op: self.t_op.transpose().neg(),
        })
    }

    /// Over the derived operator, with `rho_bar(x) = rho(I x) + rho(x) T + weight rho(x)`.
    pub fn bar(&self) -> Result<RbRepresentation> {
        let rb = self.rb.derived_rb()?;
        let action = (0..self.algebra().dim())
            .map(|i| {
                let r = &self.rep.action[i];
                self.rep.rho(&self.rb.op().column(i)).add(&r.mul(&self.t_op)).add(&r.scale(self.weight()))
            })
            .collect();
        Ok(self.over_derived(rb, action))
    }

    /// Over the derived operator, with `rho_tilde(x) = rho(I x) - T rho(x)`.
    pub fn tilde(&self) -> Result<RbRepresentation> {
        let rb = self.rb.derived_rb()?;
        Ok(self.over_derived(rb, self.tilde_action()))
    }

    pub(crate) fn tilde_action(&self) -> Vec<Matrix> {
        (0..self.algebra().dim())
            .map(|i| self.rep.rho(&self.rb.op().column(i)).sub(&self.t_op.mul(&self.rep.action[i])))
            .collect()
    }

    fn over_derived(&self, rb: RbOperator, action: Vec<Matrix>) -> RbRepresentation {
        RbRepresentation {
            rep: Representation { algebra: rb.algebra().clone(), dim: self.rep.dim, action },
            rb,
            t_op: self.t_op.clone(),
        }
    }

    /// Pairs the reflected operator `-weight id - I` with `-weight id - T`.
    pub fn reflect(&self) -> Result<RbRepresentation> {
        let rb = self.rb.reflect()?;
        let t_op = Matrix::scalar(self.rep.dim, &-self.weight()).sub(&self.t_op);
        Ok(RbRepresentation { rep: self.rep.clone(), rb, t_op })
    }

    /// Operator `I + T` on the semidirect product algebra `A + V`. No identities are checked,
    /// so the result can be used to test the converse direction.
    pub fn semidirect_product(&self) -> RbOperator {
        let algebra = semidirect_algebra(&self.rep);
        let op = Matrix::block_diag(&[self.rb.op(), &self.t_op]);
        RbOperator::new(algebra, self.weight().clone(), op).expect("block operator matches dimension")
    }

    /// Paired-operator report for this representation's own `(I, T)`.
    pub fn check_paired(&self) -> Result<PairedReport> {
        check_paired(&self.rep, self.weight(), self.rb.op(), &self.t_op)
    }
}
