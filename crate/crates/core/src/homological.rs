//! Derived functors: free resolutions, `Ext` over `A^e`, `Cotor` through
//! injective coresolutions, and Hochschild cohomology from the bar complex.
//!
//! Only cohomology dimensions are reported. Every complex is checked for
//! `d∘d = 0` and every resolution for exactness and equivariance as it is
//! built.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{enveloping, AlgebraPresentation};
use crate::cotensor::{annihilator, cotensor, d_module};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::frobenius::FrobeniusData;
use crate::linalg::{self, kron, vector, Matrix, SpanBuilder, Subspace};
use crate::modules::{ModuleRep, Side};
use crate::par::{self, Execution};

const GENERATOR_SEED: u64 = 0x5eed;

/// Largest `n^(max_deg+2) · dim X` accepted by [`hochschild`].
pub const HOCHSCHILD_CAP: usize = 10_000;

/// `F_L → … → F_1 → F_0 → M → 0` with `F_k` free of rank `ranks[k]` over a
/// ring of dimension `ring_dim`, copies laid out consecutively.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub side: Side,
    pub ring_dim: usize,
    pub ranks: Vec<usize>,
    /// `differentials[k - 1]` is `d_k : F_k → F_{k-1}`.
    pub differentials: Vec<Matrix>,
    /// `F_0 → M`.
    pub augmentation: Matrix,
    pub length: usize,
}

impl Resolution {
    pub fn free_dim(&self, k: usize) -> usize {
        self.ranks[k] * self.ring_dim
    }
}

/// `C^0 → C^1 → …` with `d^k : C^k → C^{k+1}`; cohomology is reported in
/// every degree that has an outgoing differential.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    spaces: Vec<usize>,
    differentials: Vec<Matrix>,
    cohomology: Vec<usize>,
}

impl CochainComplex {
    pub fn new(spaces: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        Self::new_with(spaces, differentials, Execution::default())
    }

    pub fn new_with(spaces: Vec<usize>, differentials: Vec<Matrix>, exec: Execution) -> Result<Self> {
        if differentials.len() + 1 != spaces.len() {
            return Err(Error::dims("cochain complex", spaces.len().saturating_sub(1), differentials.len()));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.shape() != (spaces[k + 1], spaces[k]) {
                return Err(Error::dims("cochain differential", format!("({}, {})", spaces[k + 1], spaces[k]), format!("{:?}", d.shape())));
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k].mul_with(&differentials[k - 1], exec)?.is_zero() {
                return Err(Error::VerificationFailed(format!("d∘d ≠ 0 at degree {k}")));
            }
        }
        let ranks: Vec<usize> = par::map(exec, &differentials, |d| linalg::rank_with(d, Execution::Sequential));
        let cohomology = (0..differentials.len())
            .map(|k| spaces[k] - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
            .collect();
        Ok(CochainComplex {
            spaces,
            differentials,
            cohomology,
        })
    }

    pub fn spaces(&self) -> &[usize] {
        &self.spaces
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// `dim ker d^k − dim im d^{k−1}` for each degree with a differential.
    pub fn cohomology(&self) -> &[usize] {
        &self.cohomology
    }

    /// Re-checks `d∘d = 0`.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0]).map(|m| m.is_zero()).unwrap_or(false))
    }
}

/// `kron(I_r, l) · m` without forming the Kronecker product.
fn block_left(l: &Matrix, r: usize, m: &Matrix) -> Matrix {
    let s = l.rows();
    debug_assert_eq!(m.rows(), r * s);
    let field = m.field();
    let mut out = Matrix::zeros(field, m.rows(), m.cols());
    for c in 0..r {
        for i in 0..s {
            for k in 0..s {
                let a = &l[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..m.cols() {
                    let b = &m[(c * s + k, j)];
                    if !b.is_zero() {
                        out[(c * s + i, j)] = &out[(c * s + i, j)] + &(a * b);
                    }
                }
            }
        }
    }
    out
}

/// `m · kron(I_r, l)`.
fn block_right(m: &Matrix, l: &Matrix, r: usize) -> Matrix {
    block_left(&l.transpose(), r, &m.transpose()).transpose()
}

/// `kron(I_r, l) · v`.
fn block_apply(l: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    let s = l.cols();
    v.chunks(s).flat_map(|chunk| l.mul_vec(chunk).expect("block length")).collect()
}

/// Where the module being covered lives: a module in its own coordinates,
/// or a submodule of a free module.
enum Ambient<'a> {
    Module(&'a [Matrix]),
    Free(&'a [Matrix]),
}

impl Ambient<'_> {
    fn act(&self, u: usize, v: &[Scalar]) -> Vec<Scalar> {
        match self {
            Ambient::Module(a) => a[u].mul_vec(v).expect("module action"),
            Ambient::Free(reg) => block_apply(&reg[u], v),
        }
    }
}

/// Adds the submodule generated by `v` to `span`.
fn absorb(span: &mut SpanBuilder, ambient: &Ambient, gens_idx: &[usize], v: &[Scalar]) {
    if !span.insert(v) {
        return;
    }
    let mut frontier = vec![v.to_vec()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for &g in gens_idx {
                let w = ambient.act(g, v);
                if span.insert(&w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
}

/// Deterministic generating set. Candidates are combinations of the
/// canonical basis of `sub` with coefficients from a fixed-seed generator,
/// which generically need as few generators as the module allows; a
/// candidate that adds nothing new is replaced by the first basis vector
/// not yet generated. Finally drop, first to last, any generator the
/// others already account for.
fn choose_generators(field: Field, ambient: &Ambient, gens_idx: &[usize], sub: &Subspace) -> Vec<Vec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(GENERATOR_SEED);
    let basis = sub.basis_vectors();
    let mut full = SpanBuilder::new(field, sub.ambient_dim());
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    while full.dim() < sub.dim() {
        let mut candidate = vector::zeros(field, sub.ambient_dim());
        for b in &basis {
            vector::axpy(&mut candidate, &field.from_i64(rng.random_range(-1..=1)), b);
        }
        if full.contains(&candidate) {
            candidate = basis.iter().find(|b| !full.contains(b)).expect("span is short of sub").clone();
        }
        absorb(&mut full, ambient, gens_idx, &candidate);
        chosen.push(candidate);
    }
    let mut i = 0;
    while chosen.len() > 1 && i < chosen.len() {
        let mut rest = SpanBuilder::new(field, sub.ambient_dim());
        for (j, g) in chosen.iter().enumerate() {
            if j != i {
                absorb(&mut rest, ambient, gens_idx, g);
            }
        }
        if rest.dim() == sub.dim() {
            chosen.remove(i);
        } else {
            i += 1;
        }
    }
    chosen
}

/// Free resolution of `module` over `ring` through `F_max_deg`.
///
/// At each step the current module (a submodule of the previous free
/// module) is covered by a free module on greedily chosen generators, and
/// the kernel of the cover becomes the next module. Exactness and
/// equivariance are checked before returning.
pub fn free_resolution(ring: &AlgebraPresentation, module: &ModuleRep, max_deg: usize) -> Result<Resolution> {
    free_resolution_with(ring, module, max_deg, Execution::default())
}

pub fn free_resolution_with(ring: &AlgebraPresentation, module: &ModuleRep, max_deg: usize, exec: Execution) -> Result<Resolution> {
    let field = ring.field();
    if module.field() != field {
        return Err(Error::fields(field, module.field()));
    }
    let s = ring.dim();
    if module.action().len() != s {
        return Err(Error::dims("module over ring", s, module.action().len()));
    }
    let side = module.side();
    let regular = ModuleRep::regular(ring, side);
    let reg = regular.action();
    let gens_idx = ring.algebra_generators();

    let mut ranks = Vec::new();
    let mut differentials = Vec::new();
    let mut augmentation = None;
    let mut current = Subspace::full(field, module.dim());
    for k in 0..=max_deg {
        let ambient = if k == 0 { Ambient::Module(module.action()) } else { Ambient::Free(reg) };
        let gens = choose_generators(field, &ambient, &gens_idx, &current);
        let r = gens.len();
        // column c*s + u is e_u acting on generator c
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|c| (0..s).map(move |u| (c, u))).collect();
        let cols = par::map(exec, &pairs, |&(c, u)| ambient.act(u, &gens[c]));
        let map = if cols.is_empty() {
            Matrix::zeros(field, current.ambient_dim(), 0)
        } else {
            Matrix::from_rows(field, current.ambient_dim(), &cols)?.transpose()
        };
        current = linalg::kernel_with(&map, exec);
        ranks.push(r);
        if k == 0 {
            augmentation = Some(map);
        } else {
            differentials.push(map);
        }
    }
    let res = Resolution {
        side,
        ring_dim: s,
        ranks,
        differentials,
        augmentation: augmentation.expect("degree 0 is always built"),
        length: max_deg,
    };
    check_resolution(ring, module, &res)?;
    Ok(res)
}

/// Exactness at every computed degree and equivariance of every map.
pub fn check_resolution(ring: &AlgebraPresentation, module: &ModuleRep, res: &Resolution) -> Result<()> {
    let fail = |what: String| Err(Error::VerificationFailed(what));
    let eps = &res.augmentation;
    if linalg::rank(eps) != module.dim() {
        return fail("augmentation is not surjective".into());
    }
    let mut maps: Vec<&Matrix> = vec![eps];
    maps.extend(res.differentials.iter());
    for k in 0..res.differentials.len() {
        let (outer, inner) = (maps[k], maps[k + 1]);
        if !outer.mul(inner)?.is_zero() {
            return fail(format!("composite of consecutive maps is nonzero at F_{k}"));
        }
        if linalg::rank(outer) + linalg::rank(inner) != res.free_dim(k) {
            return fail(format!("resolution is not exact at F_{k}"));
        }
    }
    let regular = ModuleRep::regular(ring, res.side);
    for &u in &ring.algebra_generators() {
        let l = &regular.action()[u];
        if block_right(eps, l, res.ranks[0]) != module.action()[u].mul(eps)? {
            return fail(format!("augmentation is not equivariant for {}", ring.basis_names()[u]));
        }
        for (k, d) in res.differentials.iter().enumerate() {
            if block_right(d, l, res.ranks[k + 1]) != block_left(l, res.ranks[k], d) {
                return fail(format!("d_{} is not equivariant for {}", k + 1, ring.basis_names()[u]));
            }
        }
    }
    Ok(())
}

/// Applies `Hom_R(−, X)` to a free resolution: `Hom(F_k, X) = X^{r_k}` by
/// evaluating at the generators, and `d^k(f)(1_c') = f(d_{k+1}(1_c'))`.
pub fn hom_complex(ring: &AlgebraPresentation, res: &Resolution, target: &ModuleRep) -> Result<CochainComplex> {
    let field = ring.field();
    let s = res.ring_dim;
    let dx = target.dim();
    let spaces: Vec<usize> = res.ranks.iter().map(|r| r * dx).collect();
    let mut differentials = Vec::with_capacity(res.differentials.len());
    for (k, d) in res.differentials.iter().enumerate() {
        let (r_src, r_dst) = (res.ranks[k], res.ranks[k + 1]);
        let targets: Vec<usize> = (0..r_dst).collect();
        let rows = par::map(Execution::default(), &targets, |&c_new| -> Result<Vec<Matrix>> {
            let mut unit_c = vector::zeros(field, r_dst * s);
            unit_c[c_new * s..(c_new + 1) * s].clone_from_slice(ring.unit());
            let w = d.mul_vec(&unit_c)?;
            (0..r_src)
                .map(|c| Matrix::linear_combination(field, (dx, dx), &w[c * s..(c + 1) * s], target.action()))
                .collect()
        });
        let mut m = Matrix::zeros(field, r_dst * dx, r_src * dx);
        for (c_new, blocks) in rows.into_iter().enumerate() {
            for (c, block) in blocks?.into_iter().enumerate() {
                for i in 0..dx {
                    for j in 0..dx {
                        m[(c_new * dx + i, c * dx + j)] = block[(i, j)].clone();
                    }
                }
            }
        }
        differentials.push(m);
    }
    CochainComplex::new(spaces, differentials)
}

fn require_side(rep: &ModuleRep, side: Side, what: &str) -> Result<()> {
    if rep.side() != side {
        return Err(Error::SideMismatch(format!("{what} must be a {side} module, got {}", rep.side())));
    }
    Ok(())
}

/// `D` as a left `A^e`-module in its canonical basis.
pub fn d_as_module(fd: &FrobeniusData) -> Result<ModuleRep> {
    let env = enveloping(fd.algebra());
    let d = d_module(fd)?.span;
    let action = env.action_on_aa().iter().map(|m| d.restrict(m)).collect::<Result<Vec<_>>>()?;
    ModuleRep::new(Side::Left, fd.field(), d.dim(), action)
}

/// `N ⊗ M` as a left `A^e`-module: `(b⊗b')·(n⊗m) = bn ⊗ mb'`.
pub fn tensor_bimodule(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    require_side(m, Side::Right, "M")?;
    require_side(n, Side::Left, "N")?;
    let env = enveloping(fd.algebra());
    let action = env.action_on_tensor(n.action(), m.action())?;
    ModuleRep::new(Side::Left, fd.field(), n.dim() * m.dim(), action)
}

/// `Ext^k_{A^e}(D, N ⊗ M)` for `k = 0..=max_deg`.
pub fn ext(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep, max_deg: usize) -> Result<CochainComplex> {
    let x = tensor_bimodule(fd, m, n)?;
    let env = enveloping(fd.algebra());
    let d = d_as_module(fd)?;
    let res = free_resolution(env.algebra(), &d, max_deg + 1)?;
    hom_complex(env.algebra(), &res, &x)
}

/// `0 → M → I^0 → I^1 → …` with each `I^k` the dual of a free module.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub modules: Vec<ModuleRep>,
    /// `M → I^0`.
    pub coaugmentation: Matrix,
    /// `maps[k] : I^k → I^{k+1}`.
    pub maps: Vec<Matrix>,
}

/// Dualises a free resolution of `M*`; since `A* ≅ A`, each term is
/// injective.
pub fn injective_coresolution(fd: &FrobeniusData, m: &ModuleRep, max_deg: usize) -> Result<Coresolution> {
    let alg = fd.algebra();
    let dual = m.dual();
    let res = free_resolution(alg, &dual, max_deg)?;
    let free_side = dual.side();
    let modules = res
        .ranks
        .iter()
        .map(|&r| ModuleRep::free(alg, free_side, r).dual())
        .collect();
    let co = Coresolution {
        modules,
        coaugmentation: res.augmentation.transpose(),
        maps: res.differentials.iter().map(Matrix::transpose).collect(),
    };
    check_coresolution(m, &co)?;
    Ok(co)
}

/// Injectivity of the coaugmentation, exactness and equivariance.
pub fn check_coresolution(m: &ModuleRep, co: &Coresolution) -> Result<()> {
    let fail = |what: String| Err(Error::VerificationFailed(what));
    if linalg::rank(&co.coaugmentation) != m.dim() {
        return fail("coaugmentation is not injective".into());
    }
    let mut maps: Vec<&Matrix> = vec![&co.coaugmentation];
    maps.extend(co.maps.iter());
    for k in 0..co.maps.len() {
        let (first, second) = (maps[k], maps[k + 1]);
        if !second.mul(first)?.is_zero() {
            return fail(format!("composite of consecutive maps is nonzero at I^{k}"));
        }
        if linalg::rank(first) + linalg::rank(second) != co.modules[k].dim() {
            return fail(format!("coresolution is not exact at I^{k}"));
        }
    }
    let mut sources = vec![m];
    sources.extend(co.modules.iter());
    for (k, f) in maps.iter().enumerate() {
        for (a, b) in sources[k].action().iter().zip(co.modules[k].action()) {
            if f.mul(a)? != b.mul(f)? {
                return fail(format!("map into I^{k} is not equivariant"));
            }
        }
    }
    Ok(())
}

/// Restricts `f` to a map between subspaces, checking it lands in `target`.
fn restricted(f: &Matrix, source: &Subspace, target: &Subspace) -> Result<Matrix> {
    if source.dim() == 0 || target.dim() == 0 {
        return Ok(Matrix::zeros(f.field(), target.dim(), source.dim()));
    }
    source.restrict_to(f, target)
}

/// `Cotor^k(M, N)` for `k = 0..=max_deg`, coresolving `M`: the cohomology
/// of `I^• □ N`.
pub fn cotor_direct(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep, max_deg: usize) -> Result<CochainComplex> {
    require_side(m, Side::Right, "M")?;
    require_side(n, Side::Left, "N")?;
    let co = injective_coresolution(fd, m, max_deg + 1)?;
    let boxes = par::map(Execution::default(), &co.modules, |i| cotensor(fd, i, n).map(|c| c.box_space))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let id_n = Matrix::identity(fd.field(), n.dim());
    let differentials = co
        .maps
        .iter()
        .enumerate()
        .map(|(k, f)| restricted(&kron(f, &id_n)?, &boxes[k], &boxes[k + 1]))
        .collect::<Result<Vec<_>>>()?;
    CochainComplex::new(boxes.iter().map(Subspace::dim).collect(), differentials)
}

/// `Cotor^k(M, N)` computed by coresolving `N` instead: the cohomology of
/// `M □ I^•`.
pub fn cotor_balanced(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep, max_deg: usize) -> Result<CochainComplex> {
    require_side(m, Side::Right, "M")?;
    require_side(n, Side::Left, "N")?;
    let co = injective_coresolution(fd, n, max_deg + 1)?;
    let boxes = par::map(Execution::default(), &co.modules, |i| cotensor(fd, m, i).map(|c| c.box_space))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let id_m = Matrix::identity(fd.field(), m.dim());
    let differentials = co
        .maps
        .iter()
        .enumerate()
        .map(|(k, f)| restricted(&kron(&id_m, f)?, &boxes[k], &boxes[k + 1]))
        .collect::<Result<Vec<_>>>()?;
    CochainComplex::new(boxes.iter().map(Subspace::dim).collect(), differentials)
}

/// Action of `e ⊗ 1` (left multiplication) and `1 ⊗ e` (right
/// multiplication) on a left `A^e`-module, for each basis element `e`.
fn bimodule_sides(alg: &AlgebraPresentation, x: &ModuleRep) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let n = alg.dim();
    let unit = alg.unit();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        let e = alg.basis_vector(i);
        left.push(x.action_of(&vector_kron(&e, unit))?);
        right.push(x.action_of(&vector_kron(unit, &e))?);
    }
    Ok((left, right))
}

fn vector_kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

/// The Hochschild differential `d^k : Hom(A^{⊗k}, X) → Hom(A^{⊗k+1}, X)`,
/// cochains indexed by `(tuple, x)` with the first tensor factor most
/// significant.
pub fn bar_differential(alg: &AlgebraPresentation, left: &[Matrix], right: &[Matrix], dx: usize, k: usize, exec: Execution) -> Matrix {
    let field = alg.field();
    let n = alg.dim();
    let nk = n.pow(k as u32);
    let cols = nk * dx;
    let tuples: Vec<usize> = (0..nk * n).collect();
    let sign = |i: usize| if i.is_multiple_of(2) { field.one() } else { -field.one() };
    let blocks = par::map(exec, &tuples, |&s| {
        let mut block = Matrix::zeros(field, dx, cols);
        let digits: Vec<usize> = (0..=k).map(|i| (s / n.pow((k - i) as u32)) % n).collect();
        // a_0 · f(a_1, …, a_k)
        let t = s % nk;
        let l = &left[digits[0]];
        for y in 0..dx {
            for x in 0..dx {
                let a = &l[(y, x)];
                if !a.is_zero() {
                    block[(y, t * dx + x)] = &block[(y, t * dx + x)] + a;
                }
            }
        }
        // (−1)^i f(…, a_{i−1} a_i, …)
        for i in 1..=k {
            let sg = sign(i);
            for (p, c) in alg.basis_product(digits[i - 1], digits[i]) {
                let mut t = 0;
                for (j, &d) in digits.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    t = t * n + if j == i - 1 { *p } else { d };
                }
                let coef = &sg * c;
                for y in 0..dx {
                    block[(y, t * dx + y)] = &block[(y, t * dx + y)] + &coef;
                }
            }
        }
        // (−1)^{k+1} f(a_0, …, a_{k−1}) · a_k
        let t = s / n;
        let sg = sign(k + 1);
        let r = &right[digits[k]];
        for y in 0..dx {
            for x in 0..dx {
                let a = &r[(y, x)];
                if !a.is_zero() {
                    block[(y, t * dx + x)] = &block[(y, t * dx + x)] + &(&sg * a);
                }
            }
        }
        block
    });
    let mut data = Vec::with_capacity(nk * n * dx * cols);
    for b in blocks {
        data.extend_from_slice(b.data());
    }
    Matrix::from_parts(field, nk * n * dx, cols, data)
}

/// `H^k(A, X)` for `k = 0..=max_deg` from the bar complex.
pub fn hochschild(alg: &AlgebraPresentation, x: &ModuleRep, max_deg: usize) -> Result<CochainComplex> {
    hochschild_with(alg, x, max_deg, Execution::default())
}

pub fn hochschild_with(alg: &AlgebraPresentation, x: &ModuleRep, max_deg: usize, exec: Execution) -> Result<CochainComplex> {
    hochschild_capped(alg, x, max_deg, HOCHSCHILD_CAP, exec)
}

/// As [`hochschild_with`] with an explicit bound on `n^{max_deg+2} · dim X`.
pub fn hochschild_capped(alg: &AlgebraPresentation, x: &ModuleRep, max_deg: usize, cap: usize, exec: Execution) -> Result<CochainComplex> {
    let n = alg.dim();
    if x.action().len() != n * n {
        return Err(Error::dims("A^e-module", n * n, x.action().len()));
    }
    require_side(x, Side::Left, "X")?;
    let size = (n as u128).saturating_pow(max_deg as u32 + 2).saturating_mul(x.dim() as u128);
    if size > cap as u128 {
        return Err(Error::TooLarge(format!(
            "bar complex through degree {max_deg}: n^{} · dim X = {size} exceeds {cap}",
            max_deg + 2
        )));
    }
    let (left, right) = bimodule_sides(alg, x)?;
    let dx = x.dim();
    let spaces: Vec<usize> = (0..=max_deg + 1).map(|k| n.pow(k as u32) * dx).collect();
    let differentials = (0..=max_deg).map(|k| bar_differential(alg, &left, &right, dx, k, exec)).collect();
    CochainComplex::new_with(spaces, differentials, exec)
}

/// Outcome of comparing `Cotor` with Hochschild cohomology.
#[derive(Clone, Debug)]
pub struct CotorHochschild {
    pub ext: Vec<usize>,
    pub hochschild: Vec<usize>,
    /// `1 ↦ δ(1)` extends to an `A^e`-isomorphism `A → D`.
    pub d_iso: bool,
}

impl CotorHochschild {
    pub fn holds(&self) -> bool {
        self.d_iso && self.ext == self.hochschild
    }
}

/// Checks that `1_A ↦ δ(1)` gives an isomorphism `A ≅ D` of `A^e`-modules:
/// the annihilator of `1_A` kills `δ(1)`, the induced map is injective and
/// its image is `D`.
pub fn d_isomorphic_to_a(fd: &FrobeniusData) -> Result<bool> {
    let alg = fd.algebra();
    let env = enveloping(alg);
    let on_a = env.action_on_algebra();
    let on_aa = env.action_on_aa();
    let g = fd.delta_one();
    for r in annihilator(&on_a, alg.unit())?.basis_vectors() {
        let acted = Matrix::linear_combination(fd.field(), (g.len(), g.len()), &r, &on_aa)?.mul_vec(g)?;
        if !vector::is_zero(&acted) {
            return Ok(false);
        }
    }
    // a ↦ (a ⊗ 1)·δ(1)
    let id = Matrix::identity(fd.field(), alg.dim());
    let cols = alg
        .left_regular_basis()
        .iter()
        .map(|l| kron(l, &id)?.mul_vec(g))
        .collect::<Result<Vec<_>>>()?;
    let phi = Matrix::from_rows(fd.field(), g.len(), &cols)?.transpose();
    let d = d_module(fd)?.span;
    Ok(linalg::rank(&phi) == alg.dim() && linalg::image(&phi) == d)
}

/// For a symmetric Frobenius algebra, compares `Ext_{A^e}(D, N ⊗ M)` with
/// `H^*(A, N ⊗ M)` and checks `D ≅ A`.
pub fn verify_cotor_is_hochschild(fd: &FrobeniusData, m: &ModuleRep, n: &ModuleRep, max_deg: usize) -> Result<CotorHochschild> {
    if !fd.is_symmetric() {
        return Err(Error::HypothesisViolated("the Frobenius form is not symmetric".into()));
    }
    let x = tensor_bimodule(fd, m, n)?;
    let hh = hochschild(fd.algebra(), &x, max_deg)?;
    let ext = ext(fd, m, n, max_deg)?;
    Ok(CotorHochschild {
        ext: ext.cohomology().to_vec(),
        hochschild: hh.cohomology().to_vec(),
        d_iso: d_isomorphic_to_a(fd)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Builtin;
    use crate::cotensor::cotensor;
    use crate::frobenius::{find_frobenius, SearchStrategy};
    use crate::modules::random_modules;

    const Q: Field = Field::Rational;

    fn frob(name: &str, param: Option<usize>, field: Field) -> FrobeniusData {
        let b = Builtin::parse(name, param).unwrap();
        find_frobenius(&b.build(field).unwrap(), &SearchStrategy::BuiltinDefault(b)).unwrap()
    }

    fn regulars(fd: &FrobeniusData) -> (ModuleRep, ModuleRep) {
        (ModuleRep::regular(fd.algebra(), Side::Right), ModuleRep::regular(fd.algebra(), Side::Left))
    }

    #[test]
    fn free_module_resolves_in_one_step() {
        let alg = Builtin::parse("exterior2", None).unwrap().build(Q).unwrap();
        let free = ModuleRep::free(&alg, Side::Left, 2);
        let res = free_resolution(&alg, &free, 2).unwrap();
        assert_eq!(res.ranks, vec![2, 0, 0]);
        assert_eq!(linalg::rank(&res.augmentation), 8);
    }

    #[test]
    fn multiplication_kernel_over_matrix_algebra() {
        let fd = frob("matrix", Some(2), Q);
        let env = enveloping(fd.algebra());
        let a = ModuleRep::new(Side::Left, Q, 4, env.action_on_algebra()).unwrap();
        let res = free_resolution(env.algebra(), &a, 1).unwrap();
        assert_eq!(res.ranks[0], 1);
        assert_eq!(linalg::kernel(&res.augmentation).dim(), 12);
    }

    #[test]
    fn dual_numbers_simple_module_is_periodic() {
        let fd = frob("trunc_poly", Some(2), Q);
        // k = A / (x)
        let a = ModuleRep::regular(fd.algebra(), Side::Right);
        let x = Subspace::span(Q, 2, &[vector::from_ints(Q, &[0, 1])]).unwrap();
        let k = a.quotient(&x).unwrap();
        let co = injective_coresolution(&fd, &k, 3).unwrap();
        let dims: Vec<usize> = co.modules.iter().map(ModuleRep::dim).collect();
        assert_eq!(dims, vec![2, 2, 2, 2]);
        let co = injective_coresolution(&fd, &a, 2).unwrap();
        let dims: Vec<usize> = co.modules.iter().map(ModuleRep::dim).collect();
        assert_eq!(dims, vec![2, 0, 0]);
        let z = ModuleRep::zero(fd.algebra(), Side::Right);
        assert!(injective_coresolution(&fd, &z, 2).unwrap().modules.iter().all(|m| m.dim() == 0));
    }

    #[test]
    fn complex_rejects_nonzero_square() {
        let one = Matrix::identity(Q, 1);
        assert!(CochainComplex::new(vec![1, 1, 1], vec![one.clone(), one]).is_err());
        let c = CochainComplex::new(vec![1, 1, 1], vec![Matrix::identity(Q, 1), Matrix::zeros(Q, 1, 1)]).unwrap();
        assert_eq!(c.cohomology(), &[0, 0]);
    }

    #[test]
    fn ext_and_cotor_on_regular_modules() {
        for (name, param, field) in [("exterior2", None, Q), ("matrix", Some(2), Q), ("trunc_poly", Some(2), Field::Prime(2))] {
            let fd = frob(name, param, field);
            let (a_r, a_l) = regulars(&fd);
            let e = ext(&fd, &a_r, &a_l, 2).unwrap();
            let c = cotor_direct(&fd, &a_r, &a_l, 2).unwrap();
            let b = cotor_balanced(&fd, &a_r, &a_l, 2).unwrap();
            let boxed = cotensor(&fd, &a_r, &a_l).unwrap().box_space.dim();
            assert_eq!(e.cohomology()[0], boxed, "{name}");
            assert_eq!(e.cohomology(), c.cohomology(), "{name}");
            assert_eq!(c.cohomology(), b.cohomology(), "{name}");
            // A is an injective comodule
            assert_eq!(&c.cohomology()[1..], &[0, 0]);
        }
    }

    #[test]
    fn ext_agrees_with_cotor_on_random_samples() {
        let fd = frob("exterior2", None, Q);
        let ms = random_modules(fd.algebra(), Side::Right, 21, 2, 4);
        let ns = random_modules(fd.algebra(), Side::Left, 22, 2, 4);
        for m in &ms {
            for n in &ns {
                let e = ext(&fd, m, n, 2).unwrap();
                let c = cotor_direct(&fd, m, n, 2).unwrap();
                assert_eq!(e.cohomology(), c.cohomology());
                assert_eq!(c.cohomology(), cotor_balanced(&fd, m, n, 2).unwrap().cohomology());
            }
        }
    }

    #[test]
    fn hochschild_examples() {
        let fd2 = frob("matrix", Some(2), Q);
        let env = enveloping(fd2.algebra());
        let a = ModuleRep::new(Side::Left, Q, 4, env.action_on_algebra()).unwrap();
        assert_eq!(hochschild(fd2.algebra(), &a, 2).unwrap().cohomology(), &[1, 0, 0]);

        // F2[C2] = F2[x]/(x²): every Hochschild group has dimension 2
        let f2 = Field::Prime(2);
        let fd = frob("group_cyclic", Some(2), f2);
        let env = enveloping(fd.algebra());
        let a = ModuleRep::new(Side::Left, f2, 2, env.action_on_algebra()).unwrap();
        assert_eq!(hochschild(fd.algebra(), &a, 3).unwrap().cohomology(), &[2, 2, 2, 2]);
        let (a_r, a_l) = regulars(&fd);
        let check = verify_cotor_is_hochschild(&fd, &a_r, &a_l, 2).unwrap();
        assert!(check.holds(), "{check:?}");
    }

    #[test]
    fn hochschild_cap() {
        let fd = frob("matrix", Some(3), Q);
        let env = enveloping(fd.algebra());
        let a = ModuleRep::new(Side::Left, Q, 9, env.action_on_algebra()).unwrap();
        assert!(matches!(hochschild(fd.algebra(), &a, 2), Err(Error::TooLarge(_))));
    }

    #[test]
    fn cotor_is_hochschild() {
        let fd = frob("group_cyclic", Some(3), Q);
        let (a_r, a_l) = regulars(&fd);
        let check = verify_cotor_is_hochschild(&fd, &a_r, &a_l, 2).unwrap();
        assert!(check.holds(), "{check:?}");
        assert_eq!(check.ext, vec![3, 0, 0]);

        let ext2 = frob("exterior2", None, Q);
        let (a_r, a_l) = regulars(&ext2);
        assert!(matches!(verify_cotor_is_hochschild(&ext2, &a_r, &a_l, 2), Err(Error::HypothesisViolated(_))));
    }
}
