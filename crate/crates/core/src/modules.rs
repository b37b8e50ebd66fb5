//! Modules and comodules over a Frobenius algebra, and the conversions
//! between them.
//!
//! A module is stored as one `d × d` matrix per basis element of `A`
//! acting on column vectors; the side only changes which composition law
//! the matrices satisfy. A comodule is a single coaction matrix.
//!
//! For a right module with structure map `m`, the coaction is
//! `∇_m = (m ⊗ A) ∘ (M ⊗ δ) ∘ (M ⊗ 1_A)`, i.e. `v ↦ Σ_j v·e_j ⊗ e_j^#`,
//! and for a right comodule the action is
//! `m_∇ = (M ⊗ ε) ∘ (M ⊗ μ) ∘ (∇ ⊗ A)`. Left versions are mirrored.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::frobenius::FrobeniusData;
use crate::linalg::{self, kron, vector, Matrix, SpanBuilder, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Right => write!(f, "right"),
            Side::Left => write!(f, "left"),
        }
    }
}

/// A failed module or comodule law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub location: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.location)
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::AxiomViolation(v.to_string())
    }
}

/// A module given by the action matrices of the basis elements.
///
/// `action[i]` is `v ↦ v·e_i` on a right module and `v ↦ e_i·v` on a left one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    side: Side,
    field: Field,
    dim: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(side: Side, field: Field, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for m in &action {
            if m.field() != field {
                return Err(Error::fields(field, m.field()));
            }
            if m.shape() != (dim, dim) {
                return Err(Error::dims("module action", format!("({dim}, {dim})"), format!("{:?}", m.shape())));
            }
        }
        Ok(ModuleRep { side, field, dim, action })
    }

    /// `A` acting on itself by multiplication from the given side.
    pub fn regular(alg: &AlgebraPresentation, side: Side) -> Self {
        let action = match side {
            Side::Right => alg.right_regular_basis(),
            Side::Left => alg.left_regular_basis(),
        };
        ModuleRep {
            side,
            field: alg.field(),
            dim: alg.dim(),
            action,
        }
    }

    /// The free module `A^k`, copies laid out consecutively.
    pub fn free(alg: &AlgebraPresentation, side: Side, rank: usize) -> Self {
        let reg = ModuleRep::regular(alg, side);
        let id = Matrix::identity(alg.field(), rank);
        let action = reg.action.iter().map(|m| kron(&id, m).expect("same field")).collect();
        ModuleRep {
            side,
            field: alg.field(),
            dim: rank * alg.dim(),
            action,
        }
    }

    pub fn zero(alg: &AlgebraPresentation, side: Side) -> Self {
        ModuleRep {
            side,
            field: alg.field(),
            dim: 0,
            action: vec![Matrix::zeros(alg.field(), 0, 0); alg.dim()],
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, a: &[Scalar]) -> Result<Matrix> {
        Matrix::linear_combination(self.field, (self.dim, self.dim), a, &self.action)
    }

    /// The structure map as one matrix: `M ⊗ A → M` (right) or `A ⊗ N → N` (left).
    pub fn structure_map(&self) -> Matrix {
        let n = self.action.len();
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d, d * n);
        for (i, rho) in self.action.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    let col = match self.side {
                        Side::Right => c * n + i,
                        Side::Left => i * d + c,
                    };
                    m[(r, col)] = rho[(r, c)].clone();
                }
            }
        }
        m
    }

    /// Inverse of [`structure_map`](Self::structure_map).
    pub fn from_structure_map(side: Side, alg_dim: usize, dim: usize, m: &Matrix) -> Result<Self> {
        if m.shape() != (dim, dim * alg_dim) {
            return Err(Error::dims("structure map", format!("({dim}, {})", dim * alg_dim), format!("{:?}", m.shape())));
        }
        let action = (0..alg_dim)
            .map(|i| {
                Matrix::from_fn(m.field(), dim, dim, |r, c| {
                    let col = match side {
                        Side::Right => c * alg_dim + i,
                        Side::Left => i * dim + c,
                    };
                    m[(r, col)].clone()
                })
            })
            .collect();
        ModuleRep::new(side, m.field(), dim, action)
    }

    /// The submodule on an invariant subspace, in its canonical basis.
    pub fn submodule(&self, sub: &Subspace) -> Result<ModuleRep> {
        let action = self
            .action
            .iter()
            .map(|m| sub.restrict(m))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::AxiomViolation("subspace is not a submodule".into()))?;
        ModuleRep::new(self.side, self.field, sub.dim(), action)
    }

    /// The quotient by an invariant subspace, with basis the images of the
    /// standard vectors at the non-pivot coordinates.
    pub fn quotient(&self, sub: &Subspace) -> Result<ModuleRep> {
        for m in &self.action {
            if !sub.is_invariant(m)? {
                return Err(Error::AxiomViolation("subspace is not a submodule".into()));
            }
        }
        let mut keep = vec![true; self.dim];
        for &p in sub.pivots() {
            keep[p] = false;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| keep[c]).collect();
        let q = free.len();
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(self.field, q, q);
                for (j, &c) in free.iter().enumerate() {
                    let r = sub.residual(&m.col(c))?;
                    for (i, &f) in free.iter().enumerate() {
                        out[(i, j)] = r[f].clone();
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleRep::new(self.side, self.field, q, action)
    }

    /// The dual `Hom(M, K)` with transposed action, a module on the other side.
    pub fn dual(&self) -> ModuleRep {
        ModuleRep {
            side: self.side.opposite(),
            field: self.field,
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// A comodule: `M → M ⊗ A` (right, `(d·n) × d`) or `N → A ⊗ N` (left, `(n·d) × d`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleRep {
    side: Side,
    dim: usize,
    coaction: Matrix,
}

impl ComoduleRep {
    pub fn new(side: Side, dim: usize, alg_dim: usize, coaction: Matrix) -> Result<Self> {
        if coaction.shape() != (dim * alg_dim, dim) {
            return Err(Error::dims("coaction", format!("({}, {dim})", dim * alg_dim), format!("{:?}", coaction.shape())));
        }
        Ok(ComoduleRep { side, dim, coaction })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }
}

/// Checks the unit and associativity laws; the report names the first
/// failing pair of basis elements.
pub fn check_module(alg: &AlgebraPresentation, rep: &ModuleRep) -> std::result::Result<(), Violation> {
    let n = alg.dim();
    if rep.field != alg.field() || rep.action.len() != n {
        return Err(Violation {
            law: "shape",
            location: format!("expected {n} action matrices over {}", alg.field()),
        });
    }
    let unit = rep.action_of(alg.unit()).map_err(|e| Violation {
        law: "shape",
        location: e.to_string(),
    })?;
    if !unit.is_identity() {
        return Err(Violation {
            law: "unit law",
            location: "1_A".into(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Matrix::zeros(rep.field, rep.dim, rep.dim);
            for (k, c) in alg.basis_product(i, j) {
                lhs = lhs.add(&rep.action[*k].scale(c)).expect("same shape");
            }
            let rhs = match rep.side {
                Side::Right => rep.action[j].mul(&rep.action[i]),
                Side::Left => rep.action[i].mul(&rep.action[j]),
            }
            .expect("same shape");
            if lhs != rhs {
                return Err(Violation {
                    law: "associativity",
                    location: format!("({}, {})", alg.basis_names()[i], alg.basis_names()[j]),
                });
            }
        }
    }
    Ok(())
}

/// Checks coassociativity and the counit law of a comodule.
pub fn check_comodule(fd: &FrobeniusData, co: &ComoduleRep) -> std::result::Result<(), Violation> {
    let field = fd.field();
    let n = fd.dim();
    let d = co.dim;
    let shape_err = |e: Error| Violation {
        law: "shape",
        location: e.to_string(),
    };
    let id_d = Matrix::identity(field, d);
    let id_n = Matrix::identity(field, n);
    let delta = fd.coproduct_matrix();
    let eps = fd.counit_matrix();
    let nabla = &co.coaction;
    let (lhs, rhs, counit) = match co.side {
        Side::Right => (
            kron(&id_d, delta).and_then(|m| m.mul(nabla)),
            kron(nabla, &id_n).and_then(|m| m.mul(nabla)),
            kron(&id_d, &eps).and_then(|m| m.mul(nabla)),
        ),
        Side::Left => (
            kron(delta, &id_d).and_then(|m| m.mul(nabla)),
            kron(&id_n, nabla).and_then(|m| m.mul(nabla)),
            kron(&eps, &id_d).and_then(|m| m.mul(nabla)),
        ),
    };
    if lhs.map_err(shape_err)? != rhs.map_err(shape_err)? {
        return Err(Violation {
            law: "coassociativity",
            location: format!("{} comodule of dim {d}", co.side),
        });
    }
    if !counit.map_err(shape_err)?.is_identity() {
        return Err(Violation {
            law: "counit law",
            location: format!("{} comodule of dim {d}", co.side),
        });
    }
    Ok(())
}

/// The comodule structure `∇_m` of a module.
pub fn module_to_comodule(fd: &FrobeniusData, rep: &ModuleRep) -> Result<ComoduleRep> {
    check_module(fd.algebra(), rep)?;
    let field = fd.field();
    let n = fd.dim();
    let d = rep.dim;
    let id_d = Matrix::identity(field, d);
    let id_n = Matrix::identity(field, n);
    let unit = Matrix::column(field, fd.algebra().unit());
    let delta = fd.coproduct_matrix();
    let m = rep.structure_map();
    let coaction = match rep.side {
        Side::Right => {
            let insert_unit = kron(&id_d, &unit)?;
            let split = kron(&id_d, delta)?;
            let act = kron(&m, &id_n)?;
            act.mul(&split)?.mul(&insert_unit)?
        }
        Side::Left => {
            let insert_unit = kron(&unit, &id_d)?;
            let split = kron(delta, &id_d)?;
            let act = kron(&id_n, &m)?;
            act.mul(&split)?.mul(&insert_unit)?
        }
    };
    let co = ComoduleRep::new(rep.side, d, n, coaction)?;
    check_comodule(fd, &co).map_err(|v| Error::VerificationFailed(format!("converted comodule: {v}")))?;
    Ok(co)
}

/// The module structure `m_∇` of a comodule.
pub fn comodule_to_module(fd: &FrobeniusData, co: &ComoduleRep) -> Result<ModuleRep> {
    check_comodule(fd, co)?;
    let field = fd.field();
    let n = fd.dim();
    let d = co.dim;
    let id_d = Matrix::identity(field, d);
    let id_n = Matrix::identity(field, n);
    let mu = fd.algebra().multiplication_matrix();
    let eps = fd.counit_matrix();
    let structure = match co.side {
        Side::Right => {
            let co_a = kron(&co.coaction, &id_n)?;
            let mult = kron(&id_d, &mu)?;
            let count = kron(&id_d, &eps)?;
            count.mul(&mult)?.mul(&co_a)?
        }
        Side::Left => {
            let a_co = kron(&id_n, &co.coaction)?;
            let mult = kron(&mu, &id_d)?;
            let count = kron(&eps, &id_d)?;
            count.mul(&mult)?.mul(&a_co)?
        }
    };
    let rep = ModuleRep::from_structure_map(co.side, n, d, &structure)?;
    check_module(fd.algebra(), &rep).map_err(|v| Error::VerificationFailed(format!("converted module: {v}")))?;
    Ok(rep)
}

/// Whether `f: M → N` (a `d_N × d_M` matrix) commutes with the actions.
pub fn is_module_map(f: &Matrix, m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    if m.side != n.side {
        return Err(Error::SideMismatch(format!("{} vs {}", m.side, n.side)));
    }
    if f.shape() != (n.dim, m.dim) {
        return Err(Error::dims("module map", format!("({}, {})", n.dim, m.dim), format!("{:?}", f.shape())));
    }
    for (rm, rn) in m.action.iter().zip(&n.action) {
        if f.mul(rm)? != rn.mul(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `f: M → N` commutes with the coactions.
pub fn is_comodule_map(f: &Matrix, m: &ComoduleRep, n: &ComoduleRep, alg_dim: usize) -> Result<bool> {
    if m.side != n.side {
        return Err(Error::SideMismatch(format!("{} vs {}", m.side, n.side)));
    }
    if f.shape() != (n.dim, m.dim) {
        return Err(Error::dims("comodule map", format!("({}, {})", n.dim, m.dim), format!("{:?}", f.shape())));
    }
    let id_n = Matrix::identity(f.field(), alg_dim);
    let lifted = match m.side {
        Side::Right => kron(f, &id_n)?,
        Side::Left => kron(&id_n, f)?,
    };
    Ok(lifted.mul(&m.coaction)? == n.coaction.mul(f)?)
}

/// `Hom_A(M, N)` as a subspace of row-major `d_N × d_M` matrices.
pub fn module_hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Subspace> {
    if m.side != n.side {
        return Err(Error::SideMismatch(format!("{} vs {}", m.side, n.side)));
    }
    let field = m.field;
    let (dm, dn) = (m.dim, n.dim);
    let id_m = Matrix::identity(field, dm);
    let id_n = Matrix::identity(field, dn);
    // vec(f ρ) = (I ⊗ ρᵀ) vec(f), vec(ρ f) = (ρ ⊗ I) vec(f) for row-major vec.
    let blocks = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(rm, rn)| kron(&id_n, &rm.transpose())?.sub(&kron(rn, &id_m)?))
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::vstack_all(field, dn * dm, &blocks)?;
    Ok(linalg::kernel(&system))
}

/// Comodule maps `M → N` as a subspace of row-major `d_N × d_M` matrices.
pub fn comodule_hom_space(m: &ComoduleRep, n: &ComoduleRep, alg_dim: usize) -> Result<Subspace> {
    if m.side != n.side {
        return Err(Error::SideMismatch(format!("{} vs {}", m.side, n.side)));
    }
    let field = m.coaction.field();
    let (dm, dn) = (m.dim, n.dim);
    let id_a = Matrix::identity(field, alg_dim);
    let mut cols = Vec::with_capacity(dn * dm);
    for r in 0..dn {
        for c in 0..dm {
            let mut e = Matrix::zeros(field, dn, dm);
            e[(r, c)] = field.one();
            let lifted = match m.side {
                Side::Right => kron(&e, &id_a)?,
                Side::Left => kron(&id_a, &e)?,
            };
            let diff = lifted.mul(&m.coaction)?.sub(&n.coaction.mul(&e)?)?;
            cols.push(diff.data().to_vec());
        }
    }
    if cols.is_empty() {
        return Ok(Subspace::zero(field, 0));
    }
    let system = Matrix::from_rows(field, dn * alg_dim * dm, &cols)?.transpose();
    Ok(linalg::kernel(&system))
}

/// Reshapes a row-major vector into a `rows × cols` matrix.
pub fn hom_vector_to_matrix(field: Field, v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |r, c| v[r * cols + c].clone())
}

/// Least subspace containing `seeds` and stable under every matrix in
/// `actions`, with the number of rounds until it stabilised.
pub fn action_closure(field: Field, ambient: usize, actions: &[Matrix], seeds: &[Vec<Scalar>]) -> Result<(Subspace, usize)> {
    for m in actions {
        if m.shape() != (ambient, ambient) {
            return Err(Error::dims("action", format!("({ambient}, {ambient})"), format!("{:?}", m.shape())));
        }
    }
    let mut span = SpanBuilder::new(field, ambient);
    let mut frontier = Vec::new();
    for s in seeds {
        if s.len() != ambient {
            return Err(Error::dims("closure seed", ambient, s.len()));
        }
        if span.insert(s) {
            frontier.push(s.clone());
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for m in actions {
                let w = m.mul_vec(v)?;
                if span.insert(&w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok((span.finish(), rounds))
}

/// Deterministic random modules: submodules and quotients of `A^k`
/// (`k ∈ {1, 2}`) generated by sparse random vectors, of dimension at most
/// `max_dim` and never zero.
pub fn random_modules(alg: &AlgebraPresentation, side: Side, seed: u64, count: usize, max_dim: usize) -> Vec<ModuleRep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = alg.field();
    let n = alg.dim();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let rank = rng.random_range(1..=3usize);
        let free = ModuleRep::free(alg, side, rank);
        let gens = rng.random_range(1..=3usize);
        let seeds: Vec<Vec<Scalar>> = (0..gens)
            .map(|_| {
                (0..rank * n)
                    .map(|_| {
                        if rng.random_bool(0.35) {
                            field.from_i64(rng.random_range(-1..=1))
                        } else {
                            field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        if seeds.iter().all(|s| vector::is_zero(s)) {
            continue;
        }
        let Ok((sub, _)) = action_closure(field, rank * n, free.action(), &seeds) else {
            continue;
        };
        let candidate = if rng.random_bool(0.5) {
            free.submodule(&sub)
        } else {
            free.quotient(&sub)
        };
        let Ok(m) = candidate else {
            continue;
        };
        if m.dim() == 0 || m.dim() > max_dim {
            continue;
        }
        let m = if rng.random_bool(0.5) { random_change_of_basis(&m, &mut rng) } else { m };
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Conjugates the action by a random unipotent upper-triangular matrix.
fn random_change_of_basis(m: &ModuleRep, rng: &mut ChaCha8Rng) -> ModuleRep {
    let field = m.field;
    let d = m.dim;
    let p = Matrix::from_fn(field, d, d, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => field.one(),
        std::cmp::Ordering::Less => field.from_i64(rng.random_range(-1..=1)),
        std::cmp::Ordering::Greater => field.zero(),
    });
    let p_inv = linalg::inverse(&p).expect("square").expect("unipotent");
    let action = m
        .action
        .iter()
        .map(|a| p_inv.mul(a).and_then(|x| x.mul(&p)).expect("same shape"))
        .collect();
    ModuleRep { action, ..m.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin, Builtin};
    use crate::frobenius::{find_frobenius, SearchStrategy};

    const Q: Field = Field::Rational;

    fn fd(name: &str, param: Option<usize>) -> FrobeniusData {
        let b = Builtin::parse(name, param).unwrap();
        find_frobenius(&b.build(Q).unwrap(), &SearchStrategy::BuiltinDefault(b)).unwrap()
    }

    #[test]
    fn regular_modules_pass() {
        let alg = builtin("exterior2", None, Q).unwrap();
        for side in [Side::Right, Side::Left] {
            assert_eq!(check_module(&alg, &ModuleRep::regular(&alg, side)), Ok(()));
            assert_eq!(check_module(&alg, &ModuleRep::free(&alg, side, 2)), Ok(()));
        }
    }

    #[test]
    fn perturbed_action_is_reported() {
        let alg = builtin("exterior2", None, Q).unwrap();
        let mut action = ModuleRep::regular(&alg, Side::Right).action().to_vec();
        action[1][(0, 0)] = Q.one();
        let bad = ModuleRep::new(Side::Right, Q, 4, action).unwrap();
        let v = check_module(&alg, &bad).unwrap_err();
        assert_eq!(v.law, "associativity");
    }

    #[test]
    fn regular_coaction_is_the_coproduct() {
        let fd = fd("exterior2", None);
        for side in [Side::Right, Side::Left] {
            let co = module_to_comodule(&fd, &ModuleRep::regular(fd.algebra(), side)).unwrap();
            assert_eq!(co.coaction(), fd.coproduct_matrix());
            assert_eq!(co.coaction().col(0), fd.delta_one());
        }
    }

    #[test]
    fn dual_numbers_coaction() {
        let fd = fd("trunc_poly", Some(2));
        let co = module_to_comodule(&fd, &ModuleRep::regular(fd.algebra(), Side::Right)).unwrap();
        // ∇(x) = x⊗x, flat 3
        assert_eq!(co.coaction().col(1), vector::unit(Q, 4, 3));
    }

    #[test]
    fn comodule_round_trips() {
        let fd = fd("exterior2", None);
        for side in [Side::Right, Side::Left] {
            let reg = ModuleRep::regular(fd.algebra(), side);
            let delta = ComoduleRep::new(side, 4, 4, fd.coproduct_matrix().clone()).unwrap();
            assert_eq!(comodule_to_module(&fd, &delta).unwrap(), reg);
            for m in random_modules(fd.algebra(), side, 11, 4, 8) {
                let co = module_to_comodule(&fd, &m).unwrap();
                assert_eq!(comodule_to_module(&fd, &co).unwrap(), m);
                assert_eq!(module_to_comodule(&fd, &comodule_to_module(&fd, &co).unwrap()).unwrap(), co);
            }
        }
    }

    #[test]
    fn module_maps() {
        let alg = builtin("exterior2", None, Q).unwrap();
        let fd = fd("exterior2", None);
        let reg = ModuleRep::regular(&alg, Side::Right);
        let co = module_to_comodule(&fd, &reg).unwrap();
        let id = Matrix::identity(Q, 4);
        assert!(is_module_map(&id, &reg, &reg).unwrap());
        assert!(is_comodule_map(&id, &co, &co, 4).unwrap());
        // left multiplication commutes with the right action
        let lx = alg.left_regular(&alg.basis_vector(1)).unwrap();
        assert!(is_module_map(&lx, &reg, &reg).unwrap());
        // right multiplication by x does not: (1·x)·y ≠ (1·y)·x
        let rx = alg.right_regular(&alg.basis_vector(1)).unwrap();
        assert!(!is_module_map(&rx, &reg, &reg).unwrap());
        assert!(!is_comodule_map(&rx, &co, &co, 4).unwrap());
        let left = ModuleRep::regular(&alg, Side::Left);
        assert!(is_module_map(&id, &reg, &left).is_err());
    }

    #[test]
    fn hom_spaces_agree_with_comodule_maps() {
        let fd = fd("trunc_poly", Some(3));
        for side in [Side::Right, Side::Left] {
            let ms = random_modules(fd.algebra(), side, 4, 3, 5);
            for m in &ms {
                for n in &ms {
                    let cm = module_to_comodule(&fd, m).unwrap();
                    let cn = module_to_comodule(&fd, n).unwrap();
                    let mods = module_hom_space(m, n).unwrap();
                    assert_eq!(mods, comodule_hom_space(&cm, &cn, 3).unwrap());
                }
            }
        }
    }

    #[test]
    fn hom_spaces() {
        let alg = builtin("matrix", Some(2), Q).unwrap();
        let reg = ModuleRep::regular(&alg, Side::Right);
        let hom = module_hom_space(&reg, &reg).unwrap();
        assert_eq!(hom.dim(), 4);
        let id: Vec<Scalar> = Matrix::identity(Q, 4).data().to_vec();
        assert!(hom.contains(&id).unwrap());
        let zero = ModuleRep::zero(&alg, Side::Right);
        assert_eq!(module_hom_space(&zero, &reg).unwrap().dim(), 0);
        assert_eq!(module_hom_space(&reg, &zero).unwrap().dim(), 0);
    }

    #[test]
    fn dual_module_is_a_module() {
        let alg = builtin("group_sym3", None, Q).unwrap();
        for m in random_modules(&alg, Side::Right, 3, 3, 12) {
            let d = m.dual();
            assert_eq!(d.side(), Side::Left);
            assert_eq!(check_module(&alg, &d), Ok(()));
        }
    }

    #[test]
    fn closure_terminates_within_ambient_rounds() {
        let alg = builtin("trunc_poly", Some(4), Q).unwrap();
        let reg = ModuleRep::regular(&alg, Side::Left);
        let (s, rounds) = action_closure(Q, 4, reg.action(), &[alg.basis_vector(1)]).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(rounds <= 4);
        let (z, _) = action_closure(Q, 4, reg.action(), &[vector::zeros(Q, 4)]).unwrap();
        assert_eq!(z.dim(), 0);
    }
}
