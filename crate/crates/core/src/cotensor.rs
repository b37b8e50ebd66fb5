//! Cotensor products and the comparison with `Hom` over `A^e`.
//!
//! For a right comodule `M` and a left comodule `N`, `M □ N` is the kernel
//! of `φ = ∇_m ⊗ N − M ⊗ ∇_n : M ⊗ N → M ⊗ A ⊗ N`. The cyclic
//! `A^e`-submodule `D ⊆ A ⊗ A` generated by `T∘δ(1)` controls it:
//! `M □ N ≅ Hom_{A^e}(D, N ⊗ M)`, with the isomorphism given in
//! coordinates by swapping the tensor factors.

use crate::algebra::{enveloping, EnvelopingAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::frobenius::{delta_image, FrobeniusData};
use crate::linalg::{self, kron, swap, Matrix, Subspace};
use crate::modules::{action_closure, check_module, module_to_comodule, ModuleRep, Side};

#[derive(Clone, Debug)]
pub struct CotensorResult {
    /// `M ⊗ N → M ⊗ A ⊗ N`.
    pub phi: Matrix,
    /// `ker φ ⊆ M ⊗ N`.
    pub box_space: Subspace,
}

#[derive(Clone, Debug)]
pub struct GeneratedSubmodule {
    pub generator: Vec<Scalar>,
    pub span: Subspace,
    pub action_stable: bool,
    /// Rounds of `span ← span + Σ ρ_i(span)` until nothing new appeared.
    pub rounds: usize,
}

#[derive(Clone, Debug)]
pub struct CompareD {
    pub equal: bool,
    pub d: Subspace,
    pub delta_a: Subspace,
}

/// Both sides of `M □ N ≅ Hom_{A^e}(D, N ⊗ M)` and the coordinate maps
/// between them.
#[derive(Clone, Debug)]
pub struct CotensorHomIso {
    pub box_space: Subspace,
    /// Values `f(T∘δ(1)) ∈ N ⊗ M` of the homomorphisms out of `D`.
    pub hom_space: Subspace,
    /// Hom side to cotensor side, in the stored bases.
    pub sigma: Matrix,
    /// Cotensor side to hom side, in the stored bases.
    pub tau: Matrix,
    pub verified: bool,
}

fn require_side(rep: &ModuleRep, side: Side, what: &str) -> Result<()> {
    if rep.side() != side {
        return Err(Error::SideMismatch(format!("{what} must be a {side} module, got {}", rep.side())));
    }
    Ok(())
}

/// `M □ N` for a right module `M` and a left module `N`, both viewed as
/// comodules.
pub fn cotensor(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep) -> Result<CotensorResult> {
    require_side(m, Side::Right, "M")?;
    require_side(n, Side::Left, "N")?;
    let field = fd.field();
    let nabla_m = module_to_comodule(fd, m)?;
    let nabla_n = module_to_comodule(fd, n)?;
    let lhs = kron(nabla_m.coaction(), &Matrix::identity(field, n.dim()))?;
    let rhs = kron(&Matrix::identity(field, m.dim()), nabla_n.coaction())?;
    let phi = lhs.sub(&rhs)?;
    let box_space = linalg::kernel(&phi);
    Ok(CotensorResult { phi, box_space })
}

/// The least subspace containing `generator` and stable under `actions`.
pub fn generate_submodule(field: Field, actions: &[Matrix], generator: &[Scalar]) -> Result<GeneratedSubmodule> {
    let (span, rounds) = action_closure(field, generator.len(), actions, &[generator.to_vec()])?;
    let mut action_stable = true;
    for a in actions {
        action_stable &= span.is_invariant(a)?;
    }
    Ok(GeneratedSubmodule {
        generator: generator.to_vec(),
        span,
        action_stable,
        rounds,
    })
}

/// `A^e`-action matrices on `A ⊗ A` for a generating set of `A^e`.
fn aa_generator_actions(env: &EnvelopingAlgebra) -> Vec<Matrix> {
    let all = env.action_on_aa();
    env.algebra().algebra_generators().into_iter().map(|i| all[i].clone()).collect()
}

/// `D`, the `A^e`-submodule of `A ⊗ A` generated by `T∘δ(1)`.
pub fn d_module(fd: &FrobeniusData) -> Result<GeneratedSubmodule> {
    let env = enveloping(fd.algebra());
    generate_submodule(fd.field(), &aa_generator_actions(&env), &fd.swapped_delta_one())
}

/// Compares `D` with `δ(A)` inside `A ⊗ A`.
pub fn compare_d_delta_a(fd: &FrobeniusData) -> Result<CompareD> {
    let d = d_module(fd)?.span;
    let delta_a = delta_image(fd);
    Ok(CompareD {
        equal: d == delta_a,
        d,
        delta_a,
    })
}

/// The annihilator `{r ∈ R : r·g = 0}` of `g` under the action of a ring
/// with basis action matrices `source_action`.
pub fn annihilator(source_action: &[Matrix], g: &[Scalar]) -> Result<Subspace> {
    let field = source_action.first().map(Matrix::field).ok_or_else(|| Error::InvalidParameter("empty ring".into()))?;
    let cols = source_action.iter().map(|a| a.mul_vec(g)).collect::<Result<Vec<_>>>()?;
    let orbit = Matrix::from_rows(field, g.len(), &cols)?.transpose();
    Ok(linalg::kernel(&orbit))
}

/// `Hom_R(R·g, X)` realised as the values at `g`: the vectors `e ∈ X` killed
/// by the annihilator of `g`.
///
/// `source_action` and `target_action` are the basis action matrices of
/// the same ring `R` on the ambient space of `g` and on `X`.
pub fn hom_from_cyclic(source_action: &[Matrix], g: &[Scalar], target_action: &[Matrix], target_dim: usize) -> Result<Subspace> {
    if source_action.len() != target_action.len() {
        return Err(Error::dims("hom_from_cyclic", source_action.len(), target_action.len()));
    }
    let field = source_action.first().map(Matrix::field).ok_or_else(|| Error::InvalidParameter("empty ring".into()))?;
    if target_dim == 0 {
        return Ok(Subspace::zero(field, 0));
    }
    let ann = annihilator(source_action, g)?;
    let blocks = ann
        .basis_vectors()
        .iter()
        .map(|r| Matrix::linear_combination(field, (target_dim, target_dim), r, target_action))
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::vstack_all(field, target_dim, &blocks)?;
    Ok(linalg::kernel(&system))
}

/// Computes both sides of `M □ N ≅ Hom_{A^e}(D, N ⊗ M)` independently and
/// checks that the factor swap is a bijection between them.
pub fn cotensor_hom_iso(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep) -> Result<CotensorHomIso> {
    let box_space = cotensor(fd, m, n)?.box_space;
    check_module(fd.algebra(), m)?;
    check_module(fd.algebra(), n)?;
    let field = fd.field();
    let env = enveloping(fd.algebra());
    let target = env.action_on_tensor(n.action(), m.action())?;
    let hom_space = hom_from_cyclic(&env.action_on_aa(), &fd.swapped_delta_one(), &target, n.dim() * m.dim())?;

    let swap_nm = swap(field, n.dim(), m.dim());
    let swap_mn = swap(field, m.dim(), n.dim());
    let sigma = hom_space.restrict_to(&swap_nm, &box_space).map_err(|_| {
        Error::VerificationFailed("a homomorphism value does not swap into M □ N".into())
    })?;
    let tau = box_space.restrict_to(&swap_mn, &hom_space).map_err(|_| {
        Error::VerificationFailed("a cotensor element does not swap into Hom(D, N ⊗ M)".into())
    })?;
    let round_trips = sigma.mul(&tau)?.is_identity() && tau.mul(&sigma)?.is_identity();
    if box_space.dim() != hom_space.dim() || !round_trips {
        return Err(Error::VerificationFailed(format!(
            "σ and τ are not inverse: dim M □ N = {}, dim Hom = {}",
            box_space.dim(),
            hom_space.dim()
        )));
    }
    Ok(CotensorHomIso {
        box_space,
        hom_space,
        sigma,
        tau,
        verified: true,
    })
}
