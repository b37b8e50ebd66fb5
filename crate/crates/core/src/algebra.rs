//! Finite-dimensional unital associative algebras given by structure
//! constants, their regular representations, the enveloping algebra
//! `A^e = A ⊗ A^op`, and a small catalog of builtin examples.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{kron, vector, Matrix, SpanBuilder};

/// An algebra with basis `e_0 … e_{n-1}` and `e_i · e_j = Σ_k c[i][j][k] e_k`.
///
/// Products of basis elements are stored sparsely. Construction through
/// [`AlgebraPresentation::new`] checks associativity and the unit law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: Field,
    basis_names: Vec<String>,
    // products[i * n + j]: nonzero (k, c[i][j][k]) sorted by k
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

impl AlgebraPresentation {
    /// Builds and verifies an algebra from structure-constant triples.
    /// Repeated `(i, j, k)` triples are summed; omitted ones are zero.
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(field, basis_names, structure, unit)?;
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Like [`new`](Self::new) but only validates shapes and fields, not the
    /// algebra axioms. Use [`check_axioms`](Self::check_axioms) afterwards.
    pub fn new_unchecked(
        field: Field,
        basis_names: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = basis_names.len();
        if unit.len() != n {
            return Err(Error::dims("algebra unit", n, unit.len()));
        }
        if let Some(s) = unit.iter().find(|s| s.field() != field) {
            return Err(Error::fields(field, s.field()));
        }
        let mut dense = vec![field.zero(); n * n * n];
        for (i, j, k, c) in structure {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::dims("structure constant index", format!("< {n}"), format!("({i}, {j}, {k})")));
            }
            if c.field() != field {
                return Err(Error::fields(field, c.field()));
            }
            let slot = &mut dense[(i * n + j) * n + k];
            *slot = &*slot + c;
        }
        let products = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !dense[ij * n + k].is_zero())
                    .map(|k| (k, dense[ij * n + k].clone()))
                    .collect()
            })
            .collect();
        Ok(AlgebraPresentation {
            field,
            basis_names,
            products,
            unit,
        })
    }

    fn from_products(field: Field, basis_names: Vec<String>, products: Vec<Vec<(usize, Scalar)>>, unit: Vec<Scalar>) -> Self {
        AlgebraPresentation {
            field,
            basis_names,
            products,
            unit,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), i)
    }

    /// Sparse expansion of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(|| self.field.zero(), |(_, c)| c.clone())
    }

    /// All nonzero structure constants `(i, j, k, c)`, in index order.
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Overwrites one structure constant without any checks.
    pub fn set_structure_constant_unchecked(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let n = self.dim();
        let entry = &mut self.products[i * n + j];
        entry.retain(|(kk, _)| *kk != k);
        if !c.is_zero() {
            entry.push((k, c));
            entry.sort_by_key(|(kk, _)| *kk);
        }
    }

    fn check_vec(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::dims("algebra element", self.dim(), x.len()));
        }
        if let Some(s) = x.iter().find(|s| s.field() != self.field) {
            return Err(Error::fields(self.field, s.field()));
        }
        Ok(())
    }

    /// Bilinear product `x · y`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vector::zeros(self.field, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `b ↦ a·b`.
    pub fn left_regular(&self, a: &[Scalar]) -> Result<Matrix> {
        self.check_vec(a)?;
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, j)] = &m[(*k, j)] + &(ai * c);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `b ↦ b·a`.
    pub fn right_regular(&self, a: &[Scalar]) -> Result<Matrix> {
        self.check_vec(a)?;
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.basis_product(j, i) {
                    m[(*k, j)] = &m[(*k, j)] + &(ai * c);
                }
            }
        }
        Ok(m)
    }

    /// `left_regular(e_i)` for every basis element.
    pub fn left_regular_basis(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.left_regular(&self.basis_vector(i)).expect("basis vector"))
            .collect()
    }

    /// `right_regular(e_i)` for every basis element.
    pub fn right_regular_basis(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.right_regular(&self.basis_vector(i)).expect("basis vector"))
            .collect()
    }

    /// Matrix of `μ: A ⊗ A → A`.
    pub fn multiplication_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, i * n + j)] = c.clone();
                }
            }
        }
        m
    }

    /// Checks the unit law and associativity on basis elements, naming the
    /// first failing location.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul_unchecked(&self.unit, &e) != e || self.mul_unchecked(&e, &self.unit) != e {
                return Err(Error::AxiomViolation(format!(
                    "unit law fails at basis element {}",
                    self.basis_names[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let eij = self.basis_product(i, j);
                for k in 0..n {
                    // (e_i e_j) e_k
                    let mut lhs = vector::zeros(self.field, n);
                    for (m, c) in eij {
                        for (t, d) in self.basis_product(*m, k) {
                            lhs[*t] = &lhs[*t] + &(c * d);
                        }
                    }
                    // e_i (e_j e_k)
                    let mut rhs = vector::zeros(self.field, n);
                    for (m, c) in self.basis_product(j, k) {
                        for (t, d) in self.basis_product(i, *m) {
                            rhs[*t] = &rhs[*t] + &(c * d);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::AxiomViolation(format!(
                            "associativity fails at ({}, {}, {})",
                            self.basis_names[i], self.basis_names[j], self.basis_names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Indices of basis elements that generate `A` as a unital algebra,
    /// chosen greedily in basis order.
    ///
    /// A subspace stable under these elements is stable under all of `A`,
    /// so closures and equivariance checks only need their actions.
    pub fn algebra_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let left = self.left_regular_basis();
        let mut span = SpanBuilder::new(self.field, n);
        span.insert(&self.unit);
        let mut gens = Vec::new();
        for i in 0..n {
            if span.dim() == n {
                break;
            }
            if span.contains(&self.basis_vector(i)) {
                continue;
            }
            gens.push(i);
            // words in the chosen generators, by repeated left multiplication
            let mut frontier = span.vectors().to_vec();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for v in &frontier {
                    for &g in &gens {
                        let w = left[g].mul_vec(v).expect("square");
                        if span.insert(&w) {
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
        }
        gens
    }

    /// Human-readable form of a vector in `A^{⊗k}`, e.g. `x⊗xy - xy⊗x`.
    pub fn format_tensor(&self, v: &[Scalar], factors: usize) -> String {
        let names: Vec<&[String]> = vec![&self.basis_names; factors];
        format_tensor_with(&names, v)
    }
}

/// Formats a vector in `X_1 ⊗ … ⊗ X_k` using the factors' basis names.
pub fn format_tensor_with(names: &[&[String]], v: &[Scalar]) -> String {
    let dims: Vec<usize> = names.iter().map(|n| n.len()).collect();
    let mut terms = Vec::new();
    for (flat, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rem = flat;
        let mut idx = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let label = idx
            .iter()
            .enumerate()
            .map(|(k, &i)| names[k][i].as_str())
            .collect::<Vec<_>>()
            .join("⊗");
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        let body = if mag == "1" { label } else { format!("{mag}·{label}") };
        terms.push((neg, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra of dim {} over {} with basis [{}]", self.dim(), self.field, self.basis_names.join(", "))
    }
}

/// `A^e = A ⊗ A^op`, with basis `e_i ⊗ e_j` at flat index `i·n + j` and
/// product `(a⊗a')(b⊗b') = ab ⊗ b'a'`.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra {
    base: AlgebraPresentation,
    algebra: AlgebraPresentation,
}

impl EnvelopingAlgebra {
    pub fn new(base: &AlgebraPresentation) -> Self {
        let n = base.dim();
        let field = base.field();
        let names: Vec<String> = (0..n * n)
            .map(|u| format!("{}⊗{}", base.basis_names[u / n], base.basis_names[u % n]))
            .collect();
        let mut products = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        // (e_i⊗e_j)(e_k⊗e_l) = e_i e_k ⊗ e_l e_j
                        let mut entry = Vec::new();
                        for (p, c) in base.basis_product(i, k) {
                            for (q, d) in base.basis_product(l, j) {
                                entry.push((p * n + q, c * d));
                            }
                        }
                        entry.sort_by_key(|(u, _)| *u);
                        products.push(entry);
                    }
                }
            }
        }
        let mut unit = vector::zeros(field, n * n);
        for (i, a) in base.unit().iter().enumerate() {
            for (j, b) in base.unit().iter().enumerate() {
                unit[i * n + j] = a * b;
            }
        }
        EnvelopingAlgebra {
            base: base.clone(),
            algebra: AlgebraPresentation::from_products(field, names, products, unit),
        }
    }

    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    /// `A^e` as an algebra in its own right.
    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Action matrices of every `e_i ⊗ e_j` on `N ⊗ M` for a left module `N`
    /// (matrices `left[i]`: `v ↦ e_i·v`) and a right module `M` (matrices
    /// `right[j]`: `v ↦ v·e_j`), under `(b⊗b')·(n⊗m) = bn ⊗ mb'`.
    pub fn action_on_tensor(&self, left: &[Matrix], right: &[Matrix]) -> Result<Vec<Matrix>> {
        let n = self.base.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::dims("action_on_tensor", n, format!("{} / {}", left.len(), right.len())));
        }
        let mut out = Vec::with_capacity(n * n);
        for l in left {
            for r in right {
                out.push(kron(l, r)?);
            }
        }
        Ok(out)
    }

    /// Action of `A^e` on `A ⊗ A`: `(b⊗b')·(x⊗y) = bx ⊗ yb'`.
    pub fn action_on_aa(&self) -> Vec<Matrix> {
        self.action_on_tensor(&self.base.left_regular_basis(), &self.base.right_regular_basis())
            .expect("regular actions have matching shapes")
    }

    /// Action of `A^e` on `A`: `(b⊗b')·a = b a b'`.
    pub fn action_on_algebra(&self) -> Vec<Matrix> {
        let left = self.base.left_regular_basis();
        let right = self.base.right_regular_basis();
        let mut out = Vec::with_capacity(left.len() * right.len());
        for l in &left {
            for r in &right {
                out.push(l.mul(r).expect("square matrices"));
            }
        }
        out
    }
}

/// Convenience wrapper for [`EnvelopingAlgebra::new`].
pub fn enveloping(alg: &AlgebraPresentation) -> EnvelopingAlgebra {
    EnvelopingAlgebra::new(alg)
}

/// The builtin algebra catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Exterior algebra on `x, y`, basis `(1, x, y, xy)`.
    Exterior2,
    /// Group algebra of the cyclic group of order `k`.
    GroupCyclic(usize),
    /// Group algebra of the symmetric group on three letters.
    GroupSym3,
    /// Full matrix algebra `M_k`, basis of matrix units.
    Matrix(usize),
    /// `K[x]/(x^k)`.
    TruncPoly(usize),
}

const SYM3: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
const SYM3_NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

impl Builtin {
    /// Parses `name` with an optional size parameter; `name` may also carry
    /// the parameter inline, as in `group_cyclic(3)`.
    pub fn parse(name: &str, param: Option<usize>) -> Result<Self> {
        let (base, inline) = match name.split_once('(') {
            Some((b, rest)) => {
                let p = rest
                    .strip_suffix(')')
                    .and_then(|d| d.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::UnknownBuiltin(name.into()))?;
                (b, Some(p))
            }
            None => (name, None),
        };
        let param = inline.or(param);
        let need = |p: Option<usize>| -> Result<usize> {
            let k = p.ok_or_else(|| Error::InvalidParameter(format!("builtin '{base}' needs a size parameter")))?;
            if k == 0 {
                return Err(Error::InvalidParameter(format!("builtin '{base}' needs a positive size")));
            }
            Ok(k)
        };
        match base {
            "exterior2" => Ok(Builtin::Exterior2),
            "group_cyclic" => Ok(Builtin::GroupCyclic(need(param)?)),
            "group_sym3" => Ok(Builtin::GroupSym3),
            "matrix" => Ok(Builtin::Matrix(need(param)?)),
            "trunc_poly" => Ok(Builtin::TruncPoly(need(param)?)),
            _ => Err(Error::UnknownBuiltin(name.into())),
        }
    }

    pub fn build(&self, field: Field) -> Result<AlgebraPresentation> {
        let one = field.one();
        let s = |n: i64| field.from_i64(n);
        let (names, structure, unit): (Vec<String>, Vec<(usize, usize, usize, Scalar)>, Vec<Scalar>) = match *self {
            Builtin::Exterior2 => {
                let names = ["1", "x", "y", "xy"].map(String::from).to_vec();
                let mut st = Vec::new();
                for i in 0..4 {
                    st.push((0, i, i, one.clone()));
                    if i > 0 {
                        st.push((i, 0, i, one.clone()));
                    }
                }
                st.push((1, 2, 3, s(1)));
                st.push((2, 1, 3, s(-1)));
                (names, st, vector::unit(field, 4, 0))
            }
            Builtin::GroupCyclic(k) => {
                let names = (0..k)
                    .map(|a| match a {
                        0 => "1".to_string(),
                        1 => "g".to_string(),
                        _ => format!("g^{a}"),
                    })
                    .collect();
                let mut st = Vec::new();
                for a in 0..k {
                    for b in 0..k {
                        st.push((a, b, (a + b) % k, one.clone()));
                    }
                }
                (names, st, vector::unit(field, k, 0))
            }
            Builtin::GroupSym3 => {
                let names = SYM3_NAMES.map(String::from).to_vec();
                let mut st = Vec::new();
                for (a, p) in SYM3.iter().enumerate() {
                    for (b, q) in SYM3.iter().enumerate() {
                        // (p∘q)(x) = p(q(x))
                        let pq = [p[q[0]], p[q[1]], p[q[2]]];
                        let c = SYM3.iter().position(|r| *r == pq).expect("closed under composition");
                        st.push((a, b, c, one.clone()));
                    }
                }
                (names, st, vector::unit(field, 6, 0))
            }
            Builtin::Matrix(k) => {
                let names = (0..k * k).map(|u| format!("E{}{}", u / k + 1, u % k + 1)).collect();
                let mut st = Vec::new();
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            // E_ij E_jl = E_il
                            st.push((i * k + j, j * k + l, i * k + l, one.clone()));
                        }
                    }
                }
                let mut unit = vector::zeros(field, k * k);
                for i in 0..k {
                    unit[i * k + i] = one.clone();
                }
                (names, st, unit)
            }
            Builtin::TruncPoly(k) => {
                let names = (0..k)
                    .map(|a| match a {
                        0 => "1".to_string(),
                        1 => "x".to_string(),
                        _ => format!("x^{a}"),
                    })
                    .collect();
                let mut st = Vec::new();
                for a in 0..k {
                    for b in 0..k - a {
                        st.push((a, b, a + b, one.clone()));
                    }
                }
                (names, st, vector::unit(field, k, 0))
            }
        };
        AlgebraPresentation::new(field, names, &structure, unit)
    }

    /// The canonical Frobenius functional: coefficient of `xy`, of the group
    /// identity, of the top power `x^{k-1}`, or the matrix trace.
    pub fn default_counit(&self, field: Field) -> Vec<Scalar> {
        match *self {
            Builtin::Exterior2 => vector::unit(field, 4, 3),
            Builtin::GroupCyclic(k) => vector::unit(field, k, 0),
            Builtin::GroupSym3 => vector::unit(field, 6, 0),
            Builtin::Matrix(k) => {
                let mut v = vector::zeros(field, k * k);
                for i in 0..k {
                    v[i * k + i] = field.one();
                }
                v
            }
            Builtin::TruncPoly(k) => vector::unit(field, k, k - 1),
        }
    }

    /// Order of the group for group algebras.
    pub fn group_order(&self) -> Option<usize> {
        match *self {
            Builtin::GroupCyclic(k) => Some(k),
            Builtin::GroupSym3 => Some(6),
            _ => None,
        }
    }

    /// Whether the algebra is known to be semisimple over `field`
    /// (matrix algebras always; group algebras when the order is invertible).
    pub fn is_semisimple_over(&self, field: Field) -> bool {
        match *self {
            Builtin::Matrix(_) => true,
            Builtin::TruncPoly(1) => true,
            Builtin::GroupCyclic(_) | Builtin::GroupSym3 => {
                let ord = self.group_order().expect("group") as u64;
                field.characteristic() == 0 || !ord.is_multiple_of(field.characteristic())
            }
            _ => false,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Exterior2 => write!(f, "exterior2"),
            Builtin::GroupCyclic(k) => write!(f, "group_cyclic({k})"),
            Builtin::GroupSym3 => write!(f, "group_sym3"),
            Builtin::Matrix(k) => write!(f, "matrix({k})"),
            Builtin::TruncPoly(k) => write!(f, "trunc_poly({k})"),
        }
    }
}

/// Builds a builtin algebra by name.
pub fn builtin(name: &str, param: Option<usize>, field: Field) -> Result<AlgebraPresentation> {
    Builtin::parse(name, param)?.build(field)
}
