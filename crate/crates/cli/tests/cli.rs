use std::process::Command;

use b3lift::eval::eval;
use b3lift::expr::{parse, print, Expr};
use b3lift::{run_args, EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use b3lift_core::cyclo::MuScalar;
use b3lift_core::datum::{canonical_datum, Root};
use b3lift_core::pbwalg::{Normalizer, RewriteSystem};
use proptest::prelude::*;

const EXPRESSIONS: &str = include_str!("corpus/expressions.txt");
const MALFORMED: &str = include_str!("corpus/malformed.txt");

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn corpus(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

#[test]
fn corpus_round_trips() {
    let mut n = 0;
    for line in corpus(EXPRESSIONS) {
        let e = parse(line).unwrap_or_else(|err| panic!("{line}: {err}"));
        let printed = print(&e);
        let again = parse(&printed).unwrap();
        assert_eq!(again, e, "{line} -> {printed}");
        assert_eq!(print(&again), printed);
        n += 1;
    }
    assert_eq!(n, 50);
}

#[test]
fn canonical_spacing() {
    let e = parse("y2*y1 - q^-1 * y1*y2").unwrap();
    assert!(matches!(e, Expr::Sub(..)));
    assert_eq!(print(&e), "y2*y1 - q^-1*y1*y2");
    assert_eq!(print(&parse("[y3,[y3,y2]_c]_c").unwrap()), "[y3, [y3, y2]_c]_c");
    assert_eq!(print(&parse("y1 - (y2 - y3)").unwrap()), "y1 - (y2 - y3)");
    assert_eq!(print(&parse("(y1 - y2) - y3").unwrap()), "y1 - y2 - y3");
    assert_eq!(print(&parse("-(y1 y2)").unwrap()), "-(y1*y2)");
    assert_eq!(print(&parse("mu[y21]").unwrap()), "mu[a21]");
    assert_eq!(print(&parse("q^(-1)").unwrap()), "q^-1");
}

#[test]
fn nested_commutator_tree() {
    let e = parse("[y3,[y3,y2]_c]_c").unwrap();
    let Expr::Comm(a, b) = e else { panic!("not a commutator") };
    assert_eq!(*a, Expr::Gen(Root::Y3));
    assert_eq!(*b, Expr::Comm(Box::new(Expr::Gen(Root::Y3)), Box::new(Expr::Gen(Root::Y2))));
}

#[test]
fn precedence() {
    let e = parse("2 y1^2 + y2").unwrap();
    let want = Expr::Add(
        Box::new(Expr::Mul(
            Box::new(Expr::Int(2)),
            Box::new(Expr::Pow(Box::new(Expr::Gen(Root::Y1)), 2)),
        )),
        Box::new(Expr::Gen(Root::Y2)),
    );
    assert_eq!(e, want);
    assert_eq!(parse("-y1 y2").unwrap(), parse("(-y1)*y2").unwrap());
    assert_eq!(parse("y1 -y2").unwrap(), parse("y1 - y2").unwrap());
}

#[test]
fn malformed_inputs_have_positions() {
    let mut n = 0;
    for line in corpus(MALFORMED) {
        let err = parse(line).expect_err(line);
        assert!(err.column >= 1 && err.column <= line.chars().count() + 1, "{line}: {err}");
        assert!(!err.expected.is_empty(), "{line}");
        n += 1;
    }
    assert_eq!(n, 25);
    let err = parse("y1 +").unwrap_err();
    assert_eq!(err.column, 5);
    assert_eq!(err.found, "end of input");
    assert!(err.expected.contains(&"generator"));
    let err = parse("y1 + y4").unwrap_err();
    assert_eq!(err.column, 6);
    assert_eq!(err.found, "`y4`");
    let err = parse("[y1, y2]_d").unwrap_err();
    assert_eq!((err.column, err.expected.as_slice()), (10, &["`c`"][..]));
    assert_eq!(parse("y1 $").unwrap_err().to_string(),
        "parse error at column 4: expected one of integer, `q`, generator, `g[`, `mu[`, `(`, `[`, found character `$`");
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    for line in corpus(MALFORMED) {
        let (out, err, code) = run_args(["b3lift", "normalize", "canonical:3", "-e", line]);
        assert_eq!(code, EXIT_USAGE, "{line}");
        assert!(out.is_empty());
        assert!(err.starts_with("error: parse error at column"), "{line}: {err}");
    }
}

#[test]
fn corpus_evaluates() {
    let d = canonical_datum(3).unwrap();
    let rs = RewriteSystem::<MuScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    for line in corpus(EXPRESSIONS) {
        let r = eval(&mut nz, &parse(line).unwrap());
        if line == "[y1 + y2, y3]_c" {
            assert!(r.is_err());
        } else {
            assert!(r.is_ok(), "{line}: {:?}", r.err());
        }
    }
}

#[test]
fn rendered_normal_forms_parse_back() {
    let d = canonical_datum(5).unwrap();
    let rs = RewriteSystem::<MuScalar>::serre(&d);
    let mut nz = Normalizer::new(&rs);
    for line in corpus(EXPRESSIONS).filter(|l| *l != "[y1 + y2, y3]_c") {
        let x = eval(&mut nz, &parse(line).unwrap()).unwrap();
        let text = x.render(&d);
        let y = eval(&mut nz, &parse(&text).unwrap_or_else(|e| panic!("{text}: {e}"))).unwrap();
        assert_eq!(x, y, "{line} -> {text}");
    }
}

#[test]
fn identities_through_the_language() {
    let check = |expr: &str, want: &str| {
        let (out, err, code) = run_args(["b3lift", "normalize", "canonical:7", "-e", expr]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert_eq!(out.trim_end(), want, "{expr}");
    };
    check("[y2, y1]_c - y21", "0");
    check("[y32, y1]_c - y31", "0");
    check("[y3,[y3,y2]_c]_c", "yt32");
    check("g[1,0,0]^-1 g[1,0,0]", "1");
    check("y1^7", "y1^7");
    let (out, _, _) = run_args(["b3lift", "normalize", "canonical:7", "-e", "y1^7", "--mode", "nichols"]);
    assert_eq!(out, "0\n");
}

#[test]
fn lifting_example() {
    let (out, _, code) = run_args(["b3lift", "normalize", "canonical:3", "-e", "y1^3", "--mode", "lifting"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "-mu[a1] + mu[a1]*g[3,0,0]\n");
    let file = data("lifting3.json");
    let (out, _, _) = run_args(["b3lift", "normalize", &file, "-e", "y1^3", "--mode", "lifting"]);
    assert_eq!(out, "-1 + g[3,0,0]\n");
}

#[test]
fn semantic_errors_exit_with_usage_code() {
    for expr in ["y1^-1", "g[1,0]", "1/0", "[y1 + y2, y3]_c", "(y1 + g[1,0,0])^-1"] {
        let (_, err, code) = run_args(["b3lift", "normalize", "canonical:3", "-e", expr]);
        assert_eq!(code, EXIT_USAGE, "{expr}: {err}");
    }
    let (_, _, code) = run_args(["b3lift", "validate", "no/such/file.json"]);
    assert_eq!(code, EXIT_USAGE);
    let (_, _, code) = run_args(["b3lift", "frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    let (_, _, code) = run_args(["b3lift", "verify", "--suite", "deg9"]);
    assert_eq!(code, EXIT_USAGE);
    let (_, _, code) = run_args(["b3lift", "normalize", &data("broken3.json"), "-e", "y1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn exit_codes() {
    let (out, _, code) = run_args(["b3lift", "verify", "--suite", "deg2", "--tier", "fast"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().filter(|l| l.starts_with("CHECK ")).count() >= 10);
    assert!(out.lines().all(|l| !l.contains(" FAIL")));
    let (out, _, code) = run_args(["b3lift", "validate", &data("broken3.json")]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("Cartan { i: 1, j: 3 }"));
    let (out, _, code) = run_args(["b3lift", "--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Usage"));
}

#[test]
fn json_report_shape() {
    let (out, _, code) = run_args(["b3lift", "--json", "verify", "--suite", "deg1"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "b3lift-report/1");
    assert_eq!(v["command"], "verify");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["datum"]["N"], 3);
    let checks = v["result"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(v["result"]["jobs"].as_array().unwrap().iter().all(|j| j["millis"].as_f64().is_some()));
    let (out, _, code) = run_args(["b3lift", "--json", "normalize", "canonical:3", "-e", "y1 +"]);
    assert_eq!(code, EXIT_USAGE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn dims_reports_the_total() {
    let (out, _, code) = run_args(["b3lift", "dims", &data("canonical3.json"), "--upto", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "degree 0: 1\ndegree 1: 3\ndegree 2: 8\n\
         dim A = N^9 * |G| = 3^9 * 729 = 19683 * 729 = 14348907\n\
         pbw exponent box: 19683 points\n"
    );
}

#[test]
fn reruns_are_byte_identical() {
    let runs = [
        vec!["b3lift", "verify", "--suite", "deg3"],
        vec!["b3lift", "coproduct", "canonical:5", "-e", "y31 + q y21"],
        vec!["b3lift", "u-alpha", "canonical:7", "--root", "all"],
        vec!["b3lift", "--json", "confluence", "canonical:3", "--mode", "lifting"],
    ];
    for args in runs {
        let first = run_args(args.clone());
        assert_eq!(first.2, EXIT_OK, "{args:?}");
        for _ in 0..2 {
            assert_eq!(run_args(args.clone()), first, "{args:?}");
        }
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_b3lift");
    let st = Command::new(bin).args(["validate", "canonical:3"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(st.stdout).unwrap().starts_with("valid datum"));
    let st = Command::new(bin).args(["validate", &data("broken3.json")]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_FAILED));
    let st = Command::new(bin).args(["normalize", "canonical:3", "-e", "(("]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_USAGE));
    let st = Command::new(bin)
        .env("B3LIFT_STEP_BUDGET", "2")
        .args(["normalize", "canonical:7", "-e", "y1 y2 y3 y1 y2 y3"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(EXIT_BUDGET));
    let st = Command::new(bin)
        .args(["--step-budget", "3", "normalize", "canonical:7", "-e", "y1 y2 y3 y1 y2 y3"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(EXIT_BUDGET));
    assert!(String::from_utf8(st.stderr).unwrap().contains("step budget of 3"));
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..20).prop_map(Expr::Int),
        (0u64..9, 1u64..9).prop_map(|(a, b)| Expr::Frac(a, b)),
        Just(Expr::Q),
        (0usize..9).prop_map(|i| Expr::Gen(Root::ALL[i])),
        prop::collection::vec(-9i64..9, 3).prop_map(Expr::Group),
        (0usize..9).prop_map(|i| Expr::Mu(Root::ALL[i])),
    ];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), -4i64..5).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Comm(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_is_identity(e in arb_expr()) {
        let s = print(&e);
        prop_assert_eq!(parse(&s).unwrap(), e);
    }

    #[test]
    fn garbage_never_panics(s in "[y1-3q+*^()\\[\\],_c0-9 -]{0,16}") {
        match parse(&s) {
            Ok(e) => prop_assert_eq!(parse(&print(&e)).unwrap(), e),
            Err(err) => prop_assert!(err.column <= s.chars().count() + 1),
        }
    }
}
