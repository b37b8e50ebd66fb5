//! The theorem suite: every structural check run over a grid of builtin
//! algebras and fields, with seeded random modules.

use std::fmt;

use crate::algebra::{enveloping, AlgebraPresentation, Builtin};
use crate::cotensor::{compare_d_delta_a, cotensor, cotensor_hom_iso};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::frobenius::{
    counit_composites, delta_image, discover_frobenius, is_bimodule_map, is_coassociative, verify_frobenius_data, FrobeniusData,
};
use crate::homological::{
    check_coresolution, check_resolution, cotor_balanced, cotor_direct, d_as_module, ext, free_resolution, hochschild,
    injective_coresolution, tensor_bimodule, verify_cotor_is_hochschild, CochainComplex, HOCHSCHILD_CAP,
};
use crate::modules::{
    comodule_hom_space, comodule_to_module, module_hom_space, module_to_comodule, random_modules, ModuleRep, Side,
};
use crate::par::{self, Execution};

/// One named family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub key: &'static str,
    pub title: &'static str,
}

pub const CHECKS: [Check; 10] = [
    Check { key: "axioms", title: "algebra axioms" },
    Check { key: "comult", title: "δ coassociative, counital, A^e-linear" },
    Check { key: "modcomod", title: "module ⇄ comodule round trips" },
    Check { key: "aboxa", title: "A□A = δ(A)" },
    Check { key: "symmdelta", title: "symmetric ⇒ D = δ(A)" },
    Check { key: "cotensorhom", title: "M□N ≅ Hom(D, N⊗M)" },
    Check { key: "cotorext", title: "Cotor = Ext, degrees 0..2" },
    Check { key: "cotorhoch", title: "symmetric ⇒ Ext = Hochschild" },
    Check { key: "semisimple", title: "semisimple ⇒ higher cohomology 0" },
    Check { key: "exactness", title: "d∘d = 0, resolutions exact" },
];

/// Resolves `--only` filters. Matching ignores case, punctuation and any
/// `prefix:` before the name, so `modcomod`, `th:modcomod` and `ModComod`
/// all select the same check.
pub fn select_checks(only: &[String]) -> Result<Vec<Check>> {
    if only.is_empty() {
        return Ok(CHECKS.to_vec());
    }
    let mut out = Vec::new();
    for raw in only.iter().flat_map(|s| s.split(',')) {
        let tail = raw.rsplit(':').next().unwrap_or(raw);
        let norm: String = tail.chars().filter(char::is_ascii_alphanumeric).collect::<String>().to_ascii_lowercase();
        let check = CHECKS
            .iter()
            .find(|c| c.key == norm)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check '{raw}'; known: {}", keys())))?;
        if !out.contains(check) {
            out.push(*check);
        }
    }
    Ok(out)
}

fn keys() -> String {
    CHECKS.iter().map(|c| c.key).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub cells: Vec<(Builtin, Field)>,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Random modules per side and cell.
    pub samples: usize,
    pub max_deg: usize,
    /// Corrupt one structure constant of every algebra before checking.
    pub inject_fault: bool,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cells: default_cells(),
            checks: CHECKS.to_vec(),
            seed: 0,
            samples: 5,
            max_deg: 2,
            inject_fault: false,
            exec: Execution::default(),
        }
    }
}

/// `{exterior2, C2, C3, M2, k[x]/x², k[x]/x³} × {ℚ, GF(2), GF(3)}`.
pub fn default_cells() -> Vec<(Builtin, Field)> {
    let algebras = [
        Builtin::Exterior2,
        Builtin::GroupCyclic(2),
        Builtin::GroupCyclic(3),
        Builtin::Matrix(2),
        Builtin::TruncPoly(2),
        Builtin::TruncPoly(3),
    ];
    let fields = [Field::Rational, Field::Prime(2), Field::Prime(3)];
    algebras.iter().flat_map(|a| fields.iter().map(move |f| (*a, *f))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub algebra: String,
    pub field: Field,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {:<12} {:<16} {:<3} {}", self.check, self.algebra, self.field.to_string(), self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// `(check, passed cells, total cells)` in suite order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for o in &self.outcomes {
            match out.iter_mut().find(|(k, _, _)| *k == o.check) {
                Some(e) => {
                    e.1 += o.passed as usize;
                    e.2 += 1;
                }
                None => out.push((o.check, o.passed as usize, 1)),
            }
        }
        out.sort_by_key(|(k, _, _)| CHECKS.iter().position(|c| c.key == *k));
        out
    }
}

/// Breaks associativity by bumping one structure constant. Tries
/// `c[n-1][n-1][0]` first, then other slots, and returns the corrupted
/// algebra with the location of the change.
pub fn inject_fault(alg: &AlgebraPresentation) -> (AlgebraPresentation, String) {
    let n = alg.dim();
    let one = alg.field().one();
    for i in (0..n).rev() {
        for j in (0..n).rev() {
            for k in 0..n {
                let mut bad = alg.clone();
                let c = &alg.structure_constant(i, j, k) + &one;
                bad.set_structure_constant_unchecked(i, j, k, c);
                if bad.check_axioms().is_err() {
                    let names = alg.basis_names();
                    return (bad, format!("c[{}][{}][{}]", names[i], names[j], names[k]));
                }
            }
        }
    }
    (alg.clone(), "no corruptible constant".into())
}

/// Runs the selected checks over every cell, cells in parallel.
pub fn run(config: &VerifyConfig) -> VerifyReport {
    let cells = par::map(config.exec, &config.cells, |&(b, f)| run_cell(config, b, f));
    VerifyReport {
        outcomes: cells.into_iter().flatten().collect(),
    }
}

struct Samples {
    right: Vec<ModuleRep>,
    left: Vec<ModuleRep>,
}

impl Samples {
    fn new(alg: &AlgebraPresentation, seed: u64, count: usize) -> Self {
        Samples {
            right: random_modules(alg, Side::Right, seed, count, 6),
            left: random_modules(alg, Side::Left, seed.wrapping_add(1), count, 6),
        }
    }

    /// `(M, N)` pairs: the regular pair, then samples zipped.
    fn zipped<'a>(&'a self, reg: &'a (ModuleRep, ModuleRep)) -> Vec<(&'a ModuleRep, &'a ModuleRep)> {
        let mut out = vec![(&reg.0, &reg.1)];
        out.extend(self.right.iter().zip(&self.left));
        out
    }

    /// Every sample `M` against every sample `N`, plus the regular pair.
    fn product<'a>(&'a self, reg: &'a (ModuleRep, ModuleRep)) -> Vec<(&'a ModuleRep, &'a ModuleRep)> {
        let mut out = vec![(&reg.0, &reg.1)];
        for m in &self.right {
            for n in &self.left {
                out.push((m, n));
            }
        }
        out
    }
}

type CheckResult = Result<String>;

fn fail(msg: impl Into<String>) -> Error {
    Error::VerificationFailed(msg.into())
}

fn run_cell(config: &VerifyConfig, builtin: Builtin, field: Field) -> Vec<CheckOutcome> {
    let outcome = |check: &'static str, res: CheckResult| CheckOutcome {
        algebra: builtin.to_string(),
        field,
        check,
        passed: res.is_ok(),
        detail: match res {
            Ok(d) => d,
            Err(e) => e.to_string(),
        },
    };
    let not_run = |why: &str| -> Vec<CheckOutcome> {
        config
            .checks
            .iter()
            .filter(|c| c.key != "axioms")
            .map(|c| outcome(c.key, Err(fail(format!("not run: {why}")))))
            .collect()
    };

    let mut out = Vec::new();
    let alg = match builtin.build(field) {
        Ok(a) => a,
        Err(e) => {
            out.push(outcome("axioms", Err(e)));
            return out;
        }
    };
    let (alg, fault) = if config.inject_fault {
        let (bad, at) = inject_fault(&alg);
        (bad, Some(at))
    } else {
        (alg, None)
    };
    let axioms = alg.check_axioms().map(|_| format!("dim {}", alg.dim())).map_err(|e| match &fault {
        Some(at) => fail(format!("{e} (injected fault at {at})")),
        None => e,
    });
    let axioms_ok = axioms.is_ok();
    if config.checks.iter().any(|c| c.key == "axioms") {
        out.push(outcome("axioms", axioms));
    }
    if !axioms_ok {
        out.extend(not_run("algebra fails its axioms"));
        return out;
    }
    let fd = match discover_frobenius(&alg, Some(builtin), config.seed) {
        Ok(fd) => fd,
        Err(e) => {
            out.extend(not_run(&format!("no Frobenius structure: {e}")));
            return out;
        }
    };
    let samples = Samples::new(&alg, config.seed, config.samples);
    let reg = (ModuleRep::regular(&alg, Side::Right), ModuleRep::regular(&alg, Side::Left));
    let ctx = Ctx {
        builtin,
        field,
        fd: &fd,
        samples: &samples,
        reg: &reg,
        max_deg: config.max_deg,
    };
    for check in config.checks.iter().filter(|c| c.key != "axioms") {
        let res = match check.key {
            "comult" => check_comult(&ctx),
            "modcomod" => check_modcomod(&ctx),
            "aboxa" => check_aboxa(&ctx),
            "symmdelta" => check_symmdelta(&ctx),
            "cotensorhom" => check_cotensorhom(&ctx),
            "cotorext" => check_cotorext(&ctx),
            "cotorhoch" => check_cotorhoch(&ctx),
            "semisimple" => check_semisimple(&ctx),
            "exactness" => check_exactness(&ctx),
            _ => unreachable!("checks come from CHECKS"),
        };
        out.push(outcome(check.key, res));
    }
    out
}

struct Ctx<'a> {
    builtin: Builtin,
    field: Field,
    fd: &'a FrobeniusData,
    samples: &'a Samples,
    reg: &'a (ModuleRep, ModuleRep),
    max_deg: usize,
}

fn check_comult(ctx: &Ctx) -> CheckResult {
    let fd = ctx.fd;
    verify_frobenius_data(fd)?;
    let (l, r) = counit_composites(fd)?;
    if !l.is_identity() || !r.is_identity() {
        return Err(fail("counit law"));
    }
    if !is_coassociative(fd)? {
        return Err(fail("coassociativity"));
    }
    if !is_bimodule_map(fd)? {
        return Err(fail("δ is not a map of A^e-modules"));
    }
    Ok(format!("ε = {}, symmetric: {}", fd.algebra().format_tensor(fd.counit(), 1), fd.is_symmetric()))
}

pub fn round_trips(fd: &FrobeniusData, modules: &[&ModuleRep]) -> Result<usize> {
    let n = fd.dim();
    let mut count = 0;
    for m in modules {
        let co = module_to_comodule(fd, m)?;
        let back = comodule_to_module(fd, &co)?;
        if &back != *m {
            return Err(fail(format!("m_(∇_m) ≠ m on a {} module of dim {}", m.side(), m.dim())));
        }
        if module_to_comodule(fd, &back)? != co {
            return Err(fail(format!("∇_(m_∇) ≠ ∇ on a {} module of dim {}", m.side(), m.dim())));
        }
        count += 1;
    }
    // module maps and comodule maps coincide
    for a in modules {
        for b in modules {
            if a.side() != b.side() {
                continue;
            }
            let mods = module_hom_space(a, b)?;
            let comods = comodule_hom_space(&module_to_comodule(fd, a)?, &module_to_comodule(fd, b)?, n)?;
            if mods != comods {
                return Err(fail(format!("module maps ≠ comodule maps between dims {} and {}", a.dim(), b.dim())));
            }
        }
    }
    Ok(count)
}

fn check_modcomod(ctx: &Ctx) -> CheckResult {
    let mut modules: Vec<&ModuleRep> = vec![&ctx.reg.0, &ctx.reg.1];
    modules.extend(ctx.samples.right.iter());
    modules.extend(ctx.samples.left.iter());
    let count = round_trips(ctx.fd, &modules)?;
    Ok(format!("{count} modules, both sides"))
}

fn check_aboxa(ctx: &Ctx) -> CheckResult {
    let boxed = cotensor(ctx.fd, &ctx.reg.0, &ctx.reg.1)?.box_space;
    if boxed != delta_image(ctx.fd) {
        return Err(fail("A□A ≠ δ(A)"));
    }
    Ok(format!("dim {}", boxed.dim()))
}

fn check_symmdelta(ctx: &Ctx) -> CheckResult {
    let cmp = compare_d_delta_a(ctx.fd)?;
    let verdict = if cmp.equal { "equal" } else { "not equal" };
    if ctx.fd.is_symmetric() && !cmp.equal {
        return Err(fail("symmetric but D ≠ δ(A)"));
    }
    let signs_survive = ctx.field.characteristic() != 2;
    if ctx.builtin == Builtin::Exterior2 && signs_survive && cmp.equal {
        return Err(fail("exterior algebra away from characteristic 2 should have D ≠ δ(A)"));
    }
    Ok(format!("D {verdict} δ(A), symmetric: {}", ctx.fd.is_symmetric()))
}

fn check_cotensorhom(ctx: &Ctx) -> CheckResult {
    let pairs = ctx.samples.product(ctx.reg);
    let dims = pairs
        .iter()
        .map(|(m, n)| cotensor_hom_iso(ctx.fd, m, n).map(|iso| iso.box_space.dim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{} pairs, dims {:?}", pairs.len(), dims))
}

fn check_cotorext(ctx: &Ctx) -> CheckResult {
    let pairs = ctx.samples.zipped(ctx.reg);
    let mut all = Vec::new();
    for (m, n) in &pairs {
        let e = ext(ctx.fd, m, n, ctx.max_deg)?;
        let c = cotor_direct(ctx.fd, m, n, ctx.max_deg)?;
        let b = cotor_balanced(ctx.fd, m, n, ctx.max_deg)?;
        let boxed = cotensor(ctx.fd, m, n)?.box_space.dim();
        if e.cohomology() != c.cohomology() {
            return Err(fail(format!("Ext {:?} ≠ Cotor {:?}", e.cohomology(), c.cohomology())));
        }
        if b.cohomology() != c.cohomology() {
            return Err(fail(format!("Cotor depends on the resolved side: {:?} vs {:?}", c.cohomology(), b.cohomology())));
        }
        if e.cohomology()[0] != boxed {
            return Err(fail(format!("Ext^0 = {} but dim M□N = {boxed}", e.cohomology()[0])));
        }
        all.push(e.cohomology().to_vec());
    }
    Ok(format!("{} pairs, dims {:?}", pairs.len(), all))
}

/// Pairs whose bar complex fits under the cap.
fn hochschild_pairs<'a>(ctx: &'a Ctx) -> Vec<(&'a ModuleRep, &'a ModuleRep)> {
    let n = ctx.fd.dim();
    let limit = HOCHSCHILD_CAP / n.pow(ctx.max_deg as u32 + 2).max(1);
    let mut pairs: Vec<_> = ctx
        .samples
        .product(ctx.reg)
        .into_iter()
        .filter(|(m, n)| m.dim() * n.dim() <= limit)
        .collect();
    pairs.truncate(ctx.samples.right.len().max(1));
    pairs
}

fn check_cotorhoch(ctx: &Ctx) -> CheckResult {
    if !ctx.fd.is_symmetric() {
        return match verify_cotor_is_hochschild(ctx.fd, &ctx.reg.0, &ctx.reg.1, ctx.max_deg) {
            Err(Error::HypothesisViolated(_)) => Ok("not symmetric: hypothesis refused".into()),
            Err(e) => Err(e),
            Ok(_) => Err(fail("non-symmetric algebra was not refused")),
        };
    }
    let pairs = hochschild_pairs(ctx);
    if pairs.is_empty() {
        return Err(fail("no sample pair fits the bar-complex cap"));
    }
    let mut all = Vec::new();
    for (m, n) in &pairs {
        let r = verify_cotor_is_hochschild(ctx.fd, m, n, ctx.max_deg)?;
        if !r.d_iso {
            return Err(fail("1 ↦ δ(1) does not give A ≅ D"));
        }
        if r.ext != r.hochschild {
            return Err(fail(format!("Ext {:?} ≠ HH {:?}", r.ext, r.hochschild)));
        }
        all.push(r.ext);
    }
    Ok(format!("{} pairs, dims {:?}", pairs.len(), all))
}

fn check_semisimple(ctx: &Ctx) -> CheckResult {
    if !ctx.builtin.is_semisimple_over(ctx.field) {
        return Ok("not semisimple: nothing to check".into());
    }
    let higher_zero = |c: &CochainComplex| c.cohomology().iter().skip(1).all(|&d| d == 0);
    for (m, n) in ctx.samples.zipped(ctx.reg) {
        let e = ext(ctx.fd, m, n, ctx.max_deg)?;
        let c = cotor_direct(ctx.fd, m, n, ctx.max_deg)?;
        if !higher_zero(&e) || !higher_zero(&c) {
            return Err(fail(format!("higher cohomology {:?} / {:?}", e.cohomology(), c.cohomology())));
        }
    }
    for (m, n) in hochschild_pairs(ctx) {
        let h = hochschild(ctx.fd.algebra(), &tensor_bimodule(ctx.fd, m, n)?, ctx.max_deg)?;
        if !higher_zero(&h) {
            return Err(fail(format!("Hochschild {:?}", h.cohomology())));
        }
    }
    Ok("all degrees ≥ 1 vanish".into())
}

fn check_exactness(ctx: &Ctx) -> CheckResult {
    let fd = ctx.fd;
    let env = enveloping(fd.algebra());
    let d = d_as_module(fd)?;
    let res = free_resolution(env.algebra(), &d, ctx.max_deg + 1)?;
    check_resolution(env.algebra(), &d, &res)?;
    let mut complexes = 0;
    for (m, n) in ctx.samples.zipped(ctx.reg) {
        let co = injective_coresolution(fd, m, ctx.max_deg + 1)?;
        check_coresolution(m, &co)?;
        let mut built = vec![ext(fd, m, n, ctx.max_deg)?, cotor_direct(fd, m, n, ctx.max_deg)?];
        if (m.dim() * n.dim()) * fd.dim().pow(ctx.max_deg as u32 + 2) <= HOCHSCHILD_CAP {
            built.push(hochschild(fd.algebra(), &tensor_bimodule(fd, m, n)?, ctx.max_deg)?);
        }
        for c in &built {
            if !c.is_complex() {
                return Err(fail("d∘d ≠ 0"));
            }
        }
        complexes += built.len();
    }
    Ok(format!("{complexes} complexes, resolution ranks {:?}", res.ranks))
}
