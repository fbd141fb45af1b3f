//! End-to-end tests of the command-line interface: exit codes, file
//! formats and the stability of the JSON reports.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_repvar")
}

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn fixture_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("repvar-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const DYCK_GRP: &str = "gens a,b; rel a^3, b^3, (a b)^3;\n";
const DYCK_RHO0: &str = "\
gen a = [[zeta(3), 0], [0, zeta(3)^2]];\n\
gen b = [[zeta(3), 0], [0, zeta(3)^2]];\n";
const TREFOIL_GRP: &str = "gens x,y; rel x^2 = y^3; ab x=3, y=2;\n";
const TREFOIL_TRIVIAL: &str = "gen x = [[1]]; gen y = [[1]];\n";

#[test]
fn cohomology_json_report() {
    let dir = fixture_dir("cohomology");
    write(&dir, "dyck.grp", DYCK_GRP);
    write(&dir, "rho0.rep", DYCK_RHO0);
    let out = run(
        &[
            "cohomology",
            "--presentation",
            "dyck.grp",
            "--rep",
            "rho0.rep",
            "--format",
            "json",
        ],
        &dir,
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["z1"], 4);
    assert_eq!(v["b1"], 2);
    assert_eq!(v["h1"], 2);
    // deterministic output
    let again = run(
        &[
            "cohomology",
            "--presentation",
            "dyck.grp",
            "--rep",
            "rho0.rep",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn check_rep_exit_codes() {
    let dir = fixture_dir("checkrep");
    write(&dir, "dyck.grp", DYCK_GRP);
    write(&dir, "good.rep", DYCK_RHO0);
    write(
        &dir,
        "bad.rep",
        "gen a = [[1, 0], [0, 1]];\ngen b = [[zeta(12)^2, 0], [0, zeta(12)^10]];\n",
    );
    let ok = run(
        &["check-rep", "--presentation", "dyck.grp", "--rep", "good.rep"],
        &dir,
    );
    assert_eq!(ok.status.code(), Some(0));

    let bad = run(
        &["check-rep", "--presentation", "dyck.grp", "--rep", "bad.rep"],
        &dir,
    );
    assert_eq!(bad.status.code(), Some(1), "verdict violated exits 1");
    let text = String::from_utf8_lossy(&bad.stdout);
    assert!(text.contains("relator"), "diagnostic names the relator: {text}");

    let missing = run(
        &["check-rep", "--presentation", "nope.grp", "--rep", "good.rep"],
        &dir,
    );
    assert_eq!(missing.status.code(), Some(2), "input errors exit 2");
}

#[test]
fn alexander_with_evaluations() {
    let dir = fixture_dir("alexander");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    write(&dir, "trivial.rep", TREFOIL_TRIVIAL);
    let out = run(
        &[
            "alexander",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "trivial.rep",
            "--lambda",
            "zeta(6)",
            "--lambda",
            "2",
            "--format",
            "json",
            "--field-order",
            "12",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // coefficient map for t^2 - t + 1
    assert_eq!(v["delta1"]["0"], "1");
    assert_eq!(v["delta1"]["1"], "-1");
    assert_eq!(v["delta1"]["2"], "1");
    let evals = v["evaluations"].as_array().unwrap();
    assert_eq!(evals[0]["is_root"], true);
    assert_eq!(evals[0]["is_simple"], true);
    assert_eq!(evals[1]["is_root"], false);
}

#[test]
fn deform_condition_verdict_exit_codes() {
    let dir = fixture_dir("deform");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    let root = run(
        &[
            "deform-condition",
            "--presentation",
            "trefoil.grp",
            "--lambda",
            "zeta(12)",
        ],
        &dir,
    );
    assert_eq!(root.status.code(), Some(0));
    let non_root = run(
        &[
            "deform-condition",
            "--presentation",
            "trefoil.grp",
            "--lambda",
            "1",
        ],
        &dir,
    );
    assert_eq!(non_root.status.code(), Some(1), "negative verdict exits 1");
}

#[test]
fn obstruction_command() {
    let dir = fixture_dir("obstruction");
    write(&dir, "dyck.grp", DYCK_GRP);
    write(&dir, "rho0.rep", DYCK_RHO0);
    write(
        &dir,
        "z1.coc",
        "gen a = [[0, 0], [0, 0]];\ngen b = [[0, 1], [0, 0]];\n",
    );
    write(
        &dir,
        "mixed.coc",
        "gen a = [[0, 0], [0, 0]];\ngen b = [[0, 1], [1, 0]];\n",
    );
    let fine = run(
        &[
            "obstruction",
            "--presentation",
            "dyck.grp",
            "--rep",
            "rho0.rep",
            "--cocycle",
            "z1.coc",
            "--order",
            "3",
        ],
        &dir,
    );
    assert_eq!(fine.status.code(), Some(0), "{}", String::from_utf8_lossy(&fine.stderr));
    let blocked = run(
        &[
            "obstruction",
            "--presentation",
            "dyck.grp",
            "--rep",
            "rho0.rep",
            "--cocycle",
            "mixed.coc",
            "--order",
            "2",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(blocked.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&blocked.stdout).unwrap();
    assert_eq!(v["obstructed_at"], 2);
}

#[test]
fn irreducible_and_character() {
    let dir = fixture_dir("irr");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    write(
        &dir,
        "alpha1.rep",
        "gen x = [[zeta(12)^3, 0], [1, -zeta(12)^3]];\n\
         gen y = [[zeta(12)^2, zeta(12)^10 - zeta(12)^2], [0, zeta(12)^10]];\n",
    );
    let irr = run(
        &[
            "irreducible",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "alpha1.rep",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(irr.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&irr.stdout).unwrap();
    assert_eq!(v["verdict"], "irreducible");

    let ch = run(
        &[
            "character",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "alpha1.rep",
            "--words",
            "x, y, x y^-1",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(ch.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ch.stdout).unwrap();
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    assert_eq!(values[0]["trace"], "0"); // tr(alpha_1(x)) = i - i = 0
}

#[test]
fn metabelian_command() {
    let dir = fixture_dir("metab");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    let out = run(
        &[
            "metabelian",
            "--presentation",
            "trefoil.grp",
            "--alpha",
            "zeta(6)",
            "--rank",
            "2",
            "--lambda",
            "zeta(12)",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["solution_dim"], 2);
    assert!(v["first_solution_rep"]["sl"]["images"].is_array());
}

#[test]
fn catalog_run_exit_codes() {
    let dir = fixture_dir("catalog");
    let ok = run(&["catalog", "run", "lubotzky_magid"], &dir);
    assert_eq!(ok.status.code(), Some(0));
    let unknown = run(&["catalog", "run", "unknown"], &dir);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn regularity_command() {
    let dir = fixture_dir("regularity");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    // diag(2,3,1/6)^phi is infinitesimally regular
    write(
        &dir,
        "diag.rep",
        "gen x = [[8, 0, 0], [0, 27, 0], [0, 0, 1/216]];\n\
         gen y = [[4, 0, 0], [0, 9, 0], [0, 0, 1/36]];\n",
    );
    let out = run(
        &[
            "regularity",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "diag.rep",
            "--boundary-tori",
            "1",
            "--format",
            "json",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["regular"], true);
    assert_eq!(v["h1"], 2);
    assert_eq!(v["predicted_component_dim"], 8);
}

#[test]
fn module_spec_variants() {
    let dir = fixture_dir("modules");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    write(&dir, "trivial.rep", TREFOIL_TRIVIAL);
    // one-dimensional twist at an Alexander root: h1 jumps to 1
    let out = run(
        &[
            "cohomology",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "trivial.rep",
            "--module",
            "one-dim:zeta(6)",
            "--format",
            "json",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["h1"], 1);
    assert_eq!(v["module_dim"], 1);

    // metabelian torsion module at the same root: two cocycle witnesses
    let out = run(
        &[
            "cocycles",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "trivial.rep",
            "--module",
            "metabelian:zeta(6),2",
            "--format",
            "json",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["z1"], 2);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);

    // hom module of two rank-1 representations
    write(&dir, "alpha.rep", TREFOIL_TRIVIAL);
    let out = run(
        &[
            "cohomology",
            "--presentation",
            "trefoil.grp",
            "--rep",
            "trivial.rep",
            "--module",
            "hom:alpha.rep,alpha.rep",
            "--format",
            "json",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn text_and_json_report_identical_numbers() {
    let dir = fixture_dir("textjson");
    write(&dir, "dyck.grp", DYCK_GRP);
    write(&dir, "rho0.rep", DYCK_RHO0);
    let args = [
        "cohomology",
        "--presentation",
        "dyck.grp",
        "--rep",
        "rho0.rep",
    ];
    let text = run(&args, &dir);
    let json = run(&[&args[..], &["--format", "json"]].concat(), &dir);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let line = String::from_utf8_lossy(&text.stdout);
    for key in ["h0", "z1", "b1", "h1", "h2_complex"] {
        let needle = format!("{key} = {}", v[key]);
        assert!(line.contains(&needle), "`{needle}` missing from `{line}`");
    }
}

#[test]
fn field_order_gate() {
    let dir = fixture_dir("fieldgate");
    write(&dir, "trefoil.grp", TREFOIL_GRP);
    // zeta(5) does not embed into the default Q(zeta_24)
    let out = run(
        &[
            "deform-condition",
            "--presentation",
            "trefoil.grp",
            "--lambda",
            "zeta(5)",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("zeta(5)"), "names the offending order: {err}");
}
