use proptest::prelude::*;

use froblab::cotensor::generate_submodule;
use froblab::frobenius::{is_bimodule_map, is_coassociative, verify_frobenius_data};
use froblab::homological::{cotor_direct, ext};
use froblab::io::{algebra_from_json, algebra_to_json, derived_from_json, derived_to_json, module_from_json, module_to_json};
use froblab::linalg::{kernel, kron, rank, rref, tensor_permute, Matrix};
use froblab::modules::{check_module, comodule_to_module, module_to_comodule, random_modules};
use froblab::{enveloping, find_frobenius, Builtin, Field, ModuleRep, Scalar, SearchStrategy, Side, Subspace};

const FIELDS: [Field; 4] = [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)];

fn builtins() -> Vec<Builtin> {
    vec![
        Builtin::Exterior2,
        Builtin::GroupCyclic(2),
        Builtin::GroupCyclic(3),
        Builtin::GroupSym3,
        Builtin::Matrix(2),
        Builtin::TruncPoly(2),
        Builtin::TruncPoly(3),
    ]
}

fn cell() -> impl Strategy<Value = (Builtin, Field)> {
    (0..builtins().len(), 0..FIELDS.len()).prop_map(|(b, f)| (builtins()[b], FIELDS[f]))
}

fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |xs| Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(xs[i * cols + j])))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (0..FIELDS.len(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(FIELDS[f], r, c))
}

fn vector(field: Field, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, n).prop_map(move |xs| xs.into_iter().map(|x| field.from_i64(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, pivots) = rref(&m);
        let (rr, pivots2) = rref(&r);
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn span_is_canonical(m in any_matrix(), shift in 0usize..5) {
        let s = Subspace::from_spanning_rows(&m);
        let mut rows = m.row_vectors();
        let len = rows.len();
        rows.rotate_left(shift % len);
        let field = m.field();
        let two = field.from_i64(2);
        let doubled: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|x| if field.characteristic() == 2 { x.clone() } else { &two * x }).collect()).collect();
        prop_assert_eq!(Subspace::span(field, m.cols(), &doubled).unwrap(), s);
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in (0..FIELDS.len(), 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(f, p, q, r, s, t, u)| {
                let f = FIELDS[f];
                (matrix(f, p, q), matrix(f, s, t), matrix(f, q, r), matrix(f, t, u))
            })
    ) {
        let lhs = kron(&a, &b).unwrap().mul(&kron(&c, &d).unwrap()).unwrap();
        let rhs = kron(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_permute_composes(
        dims in prop::collection::vec(1usize..4, 3),
        p in Just(vec![0usize, 1, 2]).prop_shuffle(),
        q in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let f = Field::Rational;
        let first = tensor_permute(f, &dims, &p).unwrap();
        let mid: Vec<usize> = p.iter().map(|&i| dims[i]).collect();
        let second = tensor_permute(f, &mid, &q).unwrap();
        let composed: Vec<usize> = q.iter().map(|&k| p[k]).collect();
        prop_assert_eq!(second.mul(&first).unwrap(), tensor_permute(f, &dims, &composed).unwrap());
        let inverse: Vec<usize> = (0..3).map(|k| p.iter().position(|&x| x == k).unwrap()).collect();
        prop_assert!(tensor_permute(f, &mid, &inverse).unwrap().mul(&first).unwrap().is_identity());
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map(
        (a, b, c, d) in (-50i64..50, 1i64..30, -50i64..50, 1i64..30),
        pi in 1usize..4,
    ) {
        let field = FIELDS[pi];
        let p = field.characteristic() as i64;
        prop_assume!(b % p != 0 && d % p != 0);
        let q = Field::Rational;
        let x = q.from_ratio(a, b).unwrap();
        let y = q.from_ratio(c, d).unwrap();
        let red = |s: &Scalar| field.from_rational(s.as_rational().unwrap()).unwrap();
        prop_assert_eq!(red(&(&x + &y)), &red(&x) + &red(&y));
        prop_assert_eq!(red(&(&x * &y)), &red(&x) * &red(&y));
        prop_assert_eq!(red(&x), field.from_ratio(a, b).unwrap());
    }

    #[test]
    fn left_regular_is_multiplicative(((b, f), x, y) in cell().prop_flat_map(|(b, f)| {
        let n = b.build(f).unwrap().dim();
        (Just((b, f)), vector(f, n), vector(f, n))
    })) {
        let alg = b.build(f).unwrap();
        let lx = alg.left_regular(&x).unwrap();
        let ly = alg.left_regular(&y).unwrap();
        let xy = alg.multiply(&x, &y).unwrap();
        prop_assert_eq!(alg.left_regular(&xy).unwrap(), lx.mul(&ly).unwrap());
        prop_assert_eq!(alg.right_regular(&xy).unwrap(), alg.right_regular(&y).unwrap().mul(&alg.right_regular(&x).unwrap()).unwrap());
    }

    #[test]
    fn enveloping_action_is_a_representation((b, f) in cell(), i in 0usize..64, j in 0usize..64) {
        let alg = b.build(f).unwrap();
        let env = enveloping(&alg);
        let ae = env.algebra();
        let (u, v) = (i % ae.dim(), j % ae.dim());
        let act = env.action_on_aa();
        let uv = ae.multiply(&ae.basis_vector(u), &ae.basis_vector(v)).unwrap();
        let lhs = Matrix::linear_combination(f, act[0].shape(), &uv, &act).unwrap();
        prop_assert_eq!(lhs, act[u].mul(&act[v]).unwrap());
    }

    #[test]
    fn searched_functionals_are_frobenius((b, f) in cell(), seed in any::<u64>()) {
        let alg = b.build(f).unwrap();
        let found = match f {
            Field::Rational => find_frobenius(&alg, &SearchStrategy::Randomized { seed, max_tries: 200 }),
            _ => find_frobenius(&alg, &SearchStrategy::Exhaustive { max_candidates: 1_000_000 }),
        };
        let fd = found.unwrap();
        verify_frobenius_data(&fd).unwrap();
        prop_assert!(is_coassociative(&fd).unwrap());
        prop_assert!(is_bimodule_map(&fd).unwrap());
    }

    #[test]
    fn module_round_trips((b, f) in cell(), seed in any::<u64>(), left in any::<bool>()) {
        let alg = b.build(f).unwrap();
        let fd = find_frobenius(&alg, &SearchStrategy::BuiltinDefault(b)).unwrap();
        let side = if left { Side::Left } else { Side::Right };
        for m in random_modules(&alg, side, seed, 2, 6) {
            prop_assert!(check_module(&alg, &m).is_ok());
            let co = module_to_comodule(&fd, &m).unwrap();
            let back = comodule_to_module(&fd, &co).unwrap();
            prop_assert_eq!(&back, &m);
            let again = module_to_comodule(&fd, &back).unwrap();
            prop_assert_eq!(again.coaction(), co.coaction());
        }
    }

    #[test]
    fn json_round_trips((b, f) in cell(), seed in any::<u64>(), dims in prop::collection::vec(0usize..20, 0..5)) {
        let alg = b.build(f).unwrap();
        prop_assert_eq!(&algebra_from_json(&algebra_to_json(&alg)).unwrap(), &alg);
        for m in random_modules(&alg, Side::Left, seed, 2, 6) {
            prop_assert_eq!(module_from_json(&module_to_json(&m), f).unwrap(), m);
        }
        let r = derived_from_json(&derived_to_json("cotor", &dims)).unwrap();
        prop_assert_eq!(r.dims, dims);
    }

    #[test]
    fn generated_submodules_are_closed_and_monotone(((b, f), g) in cell().prop_flat_map(|(b, f)| {
        let n = b.build(f).unwrap().dim();
        (Just((b, f)), vector(f, n))
    })) {
        let alg = b.build(f).unwrap();
        let reg = ModuleRep::regular(&alg, Side::Left);
        let sub = generate_submodule(f, reg.action(), &g).unwrap();
        prop_assert!(sub.action_stable);
        prop_assert!(sub.rounds <= alg.dim() + 1);
        prop_assert!(sub.span.contains(&g).unwrap());
        for a in reg.action() {
            prop_assert!(sub.span.is_invariant(a).unwrap());
        }
        for h in sub.span.basis_vectors() {
            let inner = generate_submodule(f, reg.action(), &h).unwrap();
            prop_assert!(inner.span.is_subspace_of(&sub.span).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cotor_equals_ext((b, f) in cell(), seed in any::<u64>()) {
        let alg = b.build(f).unwrap();
        let fd = find_frobenius(&alg, &SearchStrategy::BuiltinDefault(b)).unwrap();
        let ms = random_modules(&alg, Side::Right, seed, 1, 5);
        let ns = random_modules(&alg, Side::Left, seed.wrapping_add(1), 1, 5);
        for (m, n) in ms.iter().zip(&ns) {
            let c = cotor_direct(&fd, m, n, 2).unwrap();
            let e = ext(&fd, m, n, 2).unwrap();
            prop_assert_eq!(c.cohomology(), e.cohomology());
        }
    }
}
