use std::path::Path;
use std::process::{Command, Output};

use froblab::frobenius::delta_image;
use froblab::io::{algebra_to_json, counit_to_json, derived_from_json, module_to_json};
use froblab::modules::random_modules;
use froblab::{builtin, find_frobenius, Builtin, Field, ModuleRep, SearchStrategy, Side};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobenius-lab"))
        .args(args)
        .env_remove("FROBLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn frobenius_examples() {
    let o = run(&["frobenius", "--builtin", "exterior2", "--field", "Q"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("delta_one: 1⊗xy - x⊗y + y⊗x + xy⊗1"));

    let o = run(&["frobenius", "--builtin", "matrix", "--param", "2", "--json"]);
    assert_eq!(json(&o)["symmetric"], true);

    let o = run(&["frobenius", "--builtin", "group_cyclic", "--param", "3"]);
    assert!(stdout(&o).contains("delta_one: 1⊗1 + g⊗g^2 + g^2⊗g"));
}

#[test]
fn cotensor_of_regular_pair_is_delta_image() {
    let o = run(&["cotensor", "--builtin", "exterior2", "--M", "regular", "--N", "regular", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["cotensor_dim"], 4);
    let b = Builtin::Exterior2;
    let fd = find_frobenius(&b.build(Field::Rational).unwrap(), &SearchStrategy::BuiltinDefault(b)).unwrap();
    let expected: Vec<Vec<String>> = delta_image(&fd)
        .basis_vectors()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    assert_eq!(v["basis"], serde_json::to_value(expected).unwrap());
}

#[test]
fn compare_d_verdicts() {
    let q = run(&["compareD", "--builtin", "exterior2", "--field", "Q"]);
    assert!(stdout(&q).contains("D vs δ(A): not equal"));
    let f2 = run(&["compareD", "--builtin", "exterior2", "--field", "Fp:2", "--json"]);
    assert_eq!(json(&f2)["equal"], true);
}

#[test]
fn derived_functors_agree_and_parse() {
    let args = ["--builtin", "trunc_poly", "--param", "2", "--field", "F3", "--json"];
    let mut results = Vec::new();
    for cmd in ["ext", "cotor", "hochschild"] {
        let o = run(&[&[cmd][..], &args[..]].concat());
        assert!(o.status.success(), "{cmd}: {}", stderr(&o));
        let r = derived_from_json(&stdout(&o)).unwrap();
        assert_eq!(r.functor, cmd);
        assert_eq!(r.dims.len(), 3);
        results.push(r.dims);
    }
    assert_eq!(results[0], results[1]);
    assert_eq!(results[0], results[2]);
}

#[test]
fn module_and_algebra_files() {
    let dir = tempfile::tempdir().unwrap();
    let alg = builtin("trunc_poly", Some(3), Field::Rational).unwrap();
    let a = write(dir.path(), "alg.json", &algebra_to_json(&alg));
    let m = random_modules(&alg, Side::Right, 4, 1, 4).remove(0);
    let n = random_modules(&alg, Side::Left, 5, 1, 4).remove(0);
    let mf = write(dir.path(), "m.json", &module_to_json(&m));
    let nf = write(dir.path(), "n.json", &module_to_json(&n));

    let hom = run(&["hom", "--algebra", &a, "--M", &mf, "--N", &nf, "--json"]);
    assert!(hom.status.success(), "{}", stderr(&hom));
    let v = json(&hom);
    assert_eq!(v["hom_dim"], v["cotensor_dim"]);
    assert_eq!(v["isomorphism_verified"], true);

    let e = derived_from_json(&stdout(&run(&["ext", "--algebra", &a, "--M", &mf, "--N", &nf, "--json"]))).unwrap();
    let c = derived_from_json(&stdout(&run(&["cotor", "--algebra", &a, "--M", &mf, "--N", &nf, "--json"]))).unwrap();
    assert_eq!(e.dims, c.dims);
    assert_eq!(e.dims[0], v["hom_dim"].as_u64().unwrap() as usize);
}

#[test]
fn input_errors_exit_two_with_distinct_messages() {
    let dir = tempfile::tempdir().unwrap();
    let alg = builtin("exterior2", None, Field::Rational).unwrap();
    let a = write(dir.path(), "alg.json", &algebra_to_json(&alg));
    let left = write(dir.path(), "left.json", &module_to_json(&ModuleRep::regular(&alg, Side::Left)));
    let broken = write(dir.path(), "broken.json", "{\"side\": \"right\"");

    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["cotensor", "--builtin", "exterior2", "--M", &left], "side mismatch"),
        (vec!["cotensor", "--algebra", &a, "--field", "F3"], "field mismatch"),
        (vec!["cotensor", "--builtin", "exterior2", "--M", &broken], "parse error"),
        (vec!["ext", "--builtin", "nonsense"], "unknown builtin"),
        (vec!["ext", "--builtin", "exterior2", "--field", "Fp:4"], "not a supported prime"),
        (vec!["ext", "--builtin", "matrix"], "needs a size parameter"),
        (vec!["verify", "--only", "bogus"], "unknown check"),
    ];
    for (args, needle) in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn degenerate_counit_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = Field::Rational;
    let eps = [f.one(), f.zero(), f.zero(), f.zero()];
    let c = write(dir.path(), "eps.json", &counit_to_json(&eps, None));
    let o = run(&["frobenius", "--builtin", "exterior2", "--counit", &c]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degenerate"));
}

#[test]
fn json_is_deterministic() {
    let args = ["verify", "--builtin", "trunc_poly", "--param", "2", "--field", "Q", "--only", "cotensorhom", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let seeded = |s: &str| {
        Command::new(env!("CARGO_BIN_EXE_frobenius-lab"))
            .args(args)
            .env("FROBLAB_SEED", s)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(seeded("7"), seeded("7"));
    assert_eq!(seeded("7"), stdout(&run(&[&args[..], &["--seed", "7"]].concat())).into_bytes());
}

#[test]
fn verify_only_and_fault_injection() {
    let o = run(&["verify", "--only", "th:modcomod", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 18);
    assert!(outcomes.iter().all(|x| x["check"] == "modcomod"));

    let o = run(&["verify", "--builtin", "exterior2", "--field", "Q", "--only", "axioms", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL axioms"));
    assert!(out.contains("associativity"), "{out}");
    assert!(out.contains("injected fault at c["), "{out}");
}
