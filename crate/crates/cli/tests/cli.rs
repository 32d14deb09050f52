use std::process::{Command, Output};

fn rdzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const HEADER: &str = "n,r,d,D,family,p,lhs,rhs_num,rhs_den,equal,h,verdict";

#[test]
fn scan_csv_row() {
    let o = rdzeta(&[
        "scan",
        "--family",
        "T35",
        "--max-n",
        "30",
        "--max-abs-r",
        "40",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some(HEADER));
    assert!(text
        .lines()
        .any(|l| l == "18,-3,321,321,T35,,1980,1980,1,true,3,criterion-and-h3"));
}

#[test]
fn empty_scan_prints_header_only() {
    let o = rdzeta(&["scan", "--family", "T43", "--max-d", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format!("{HEADER}\n"));
}

#[test]
fn output_independent_of_jobs() {
    let base = ["scan", "--family", "T42", "--max-d", "20000"];
    let one = rdzeta(&[&base[..], &["--jobs", "1"]].concat());
    let four = rdzeta(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn jsonl_has_csv_keys() {
    let o = rdzeta(&[
        "scan", "--family", "T43", "--max-d", "100", "--format", "jsonl",
    ]);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("\"d\":85")).unwrap();
    for key in HEADER.split(',') {
        assert!(
            line.contains(&format!("\"{key}\":")),
            "{key} missing in {line}"
        );
    }
    assert!(line.contains("\"verdict\":\"criterion-and-h3\""));
}

#[test]
fn table_format() {
    let o = rdzeta(&[
        "scan", "--family", "T43", "--max-d", "700", "--format", "table",
    ]);
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("h(d)"));
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()
            == [
                "25",
                "4",
                "629",
                "5",
                "2",
                "2900",
                "2900",
                "criterion-and-h3"
            ]));
}

#[test]
fn one_shot_values() {
    assert_eq!(
        stdout(&rdzeta(&["zeta", "--d", "321"])),
        "d=321 D=321\nsum=1980\nzeta=33\n"
    );
    assert_eq!(
        stdout(&rdzeta(&["class-number", "--d", "85", "--narrow"])),
        "h=2\nh+=2\nN(eps)=-1\n"
    );
    assert_eq!(
        stdout(&rdzeta(&[
            "dedekind", "--index", "3", "--h", "1", "--k", "4", "--raw"
        ])),
        "-3/128\n"
    );
    assert_eq!(
        stdout(&rdzeta(&[
            "rhs", "--family", "T33", "--n", "16", "--r", "1"
        ])),
        "lhs=1200\nrhs=1200\nequal=true\n"
    );
    let o = rdzeta(&["partial-zeta", "--n", "18", "--r", "-3", "--class", "over2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d=321 kind=wide\nclosed=7\nlang+=7\nlang-=7\n");
    let o = rdzeta(&[
        "partial-zeta",
        "--n",
        "9",
        "--r",
        "4",
        "--p",
        "3",
        "--class",
        "overp",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("d=85 kind=|r|=4\nclosed=7/10\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(rdzeta(&["scan", "--family", "T99"]).status.code(), Some(2));
    assert_eq!(
        rdzeta(&["scan", "--family", "T33", "--max-d", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdzeta(&["rhs", "--family", "T34", "--n", "1", "--r", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdzeta(&["class-number", "--d", "20"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rdzeta(&["dedekind", "--index", "4", "--h", "1", "--k", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rdzeta(&["check-remark41", "--max-d", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn fixture_commands() {
    let o = rdzeta(&["verify-tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("all fixtures pass"));
    let o = rdzeta(&["check-remark41", "--max-d", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("h=1 d=53 n=7 r=4: consistent"));
    assert!(stdout(&o).contains("h=1 d=5 n=1 r=4: out of scope"));
}
