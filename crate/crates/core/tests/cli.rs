use std::sync::Arc;

use alcove_crystals::cli::{run, Outcome};
use alcove_crystals::crystalgraph::CrystalGraph;
use alcove_crystals::littelmann::PLPath;
use alcove_crystals::rootsys::RootSystem;

fn alcove(args: &str) -> Outcome {
    run(std::iter::once("alcove").chain(args.split_whitespace()))
}

fn ok(args: &str) -> String {
    let o = alcove(args);
    assert_eq!(o.code, 0, "{args}: {}", o.stderr);
    o.stdout
}

#[test]
fn binf_transcript() {
    let out = ok("binf --type A3 --fstring 2,1,3,2,2,1,3,2 --show positions,weight,projection,hw-string");
    assert_eq!(
        out,
        "positions: ((α2, -2), (α2+α3, -2), (α1+α2, -2), (α1+α2+α3, -2))\n\
         weight: (0, -4, 0)\n\
         projection: k=2 ((α2, 0), (α2+α3, 2), (α1+α2, 2), (α1+α2+α3, 4))\n\
         hw-string: [2, 1, 2, 1, 3, 2, 3, 2]\n"
    );
}

#[test]
fn project_and_lift_round_trip() {
    let out = ok("project --type A3 --fstring 2,1,3,2,2,1,3,2 --k 3");
    assert_eq!(out, "((α2, 1), (α2+α3, 4), (α1+α2, 4), (α1+α2+α3, 7))\nindices: [12, 21, 24, 26]\n");
    let out = ok("project --type A3 --fstring 2,1,3,2,2,1,3,2 --k 4");
    assert!(out.starts_with("((α2, 2), (α2+α3, 6), (α1+α2, 6), (α1+α2+α3, 10))"));
    let back = ok("lift --type A3 --k 3 --element 12,21,24,26");
    assert_eq!(back, "((α2, -2), (α2+α3, -2), (α1+α2, -2), (α1+α2+α3, -2))\n");
    // below the minimal k the projection vanishes
    assert_eq!(ok("project --type A3 --fstring 2,1,3,2,2,1,3,2 --k 1"), "0\n");
}

#[test]
fn vertex_lists() {
    assert_eq!(
        ok("crystal --type A3 --weight 2,0,0 --list-vertices"),
        "[[], [0], [3], [0, 1], [0, 4], [3, 4], [0, 1, 2], [0, 1, 5], [0, 4, 5], [3, 4, 5]]\n"
    );
    assert_eq!(ok("crystal --type A3 --weight 1,0,0 --list-vertices"), "[[], [0], [0, 1], [0, 1, 2]]\n");
}

#[test]
fn verify_passes() {
    let out = ok("verify --suite all --type A2 --depth 4");
    assert!(!out.is_empty());
    ok("verify --type B2 --weight 1,1");
}

#[test]
fn exit_codes() {
    assert_eq!(alcove("").code, 2);
    assert_eq!(alcove("frobnicate").code, 2);
    assert_eq!(alcove("crystal --type X9 --weight 1").code, 2);
    assert_eq!(alcove("crystal --type A2 --weight 1,0,0").code, 2);
    assert_eq!(alcove("crystal --type A2 --weight -1,0").code, 2);
    assert_eq!(alcove("crystal --type A2").code, 2, "B(∞) needs a depth");
    assert_eq!(alcove("binf --type A2 --fstring 1,x").code, 2);
    assert_eq!(alcove("binf --type A2 --fstring 3").code, 2);
    assert_eq!(alcove("binf --type A2 --show bogus").code, 2);
    assert_eq!(alcove("--help").code, 0);
    assert_eq!(alcove("chain --type A2 --weight 1,1 --roots 1,3,2,3").code, 0);
    let bad = alcove("chain --type A2 --weight 1,1 --roots 3,3,1,2");
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("valid: false"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        "export --type A3 --weight 1,1,0",
        "export --type A2 --depth 4 --format json",
        "export --type A2 --weight 1,1 --model path --dual --format json",
        "verify --type A2 --weight 2,1",
        "binf --type G2 --fstring 1,2,2,1,2 --show positions,stats,path",
    ] {
        let a = alcove(args);
        assert_eq!(a, alcove(args), "{args}");
        assert_eq!(a.code, 0, "{args}: {}", a.stderr);
    }
}

#[test]
fn graph_json_round_trips() {
    let r = Arc::new(RootSystem::from_type("A2").unwrap());
    for args in [
        "export --type A2 --weight 2,1 --format json",
        "export --type A2 --weight 1,1 --dual --format json",
        "export --type A2 --depth 3 --format json",
        "export --type A2 --weight 1,1 --model path --format json",
    ] {
        let text = ok(args);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let g = CrystalGraph::from_json(&r, &v).unwrap();
        assert_eq!(format!("{}\n", g.to_json()), text, "{args}");
        assert!(g.check_axioms().is_clean());
    }
}

#[test]
fn path_json_round_trips() {
    let text = ok("path-image --type A3 --fstring 2,1,3,2,2,1,3,2 --format json");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let p = PLPath::from_json(3, &v).unwrap();
    assert_eq!(p.to_json(), v);
    assert_eq!(p.weight().to_string(), "(0, 4, 0)");
    let dual = ok("path-image --type A3 --dual --estring 2,1,3,2,2,1,3,2 --format json");
    let q = PLPath::from_json(3, &serde_json::from_str(&dual).unwrap()).unwrap();
    assert_eq!(q.weight().to_string(), "(0, -4, 0)");
}

#[test]
fn chain_json() {
    let text = ok("chain --type A2 --weight 1,1 --format json");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[0], serde_json::json!({"root": [0, 1], "level": 0}));
    let r = Arc::new(RootSystem::from_type("A2").unwrap());
    let lam = alcove_crystals::rootsys::Weight::from_ints(&[1, 1]);
    let c = alcove_crystals::chains::LambdaChain::from_json(&r, &lam, &v).unwrap();
    assert!(c.validate());
    assert_eq!(c.to_json(), v);
}
