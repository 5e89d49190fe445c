//! End-to-end tests against the compiled binary: exit codes, piping,
//! and output discipline.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use exactalg_cli::doc::{parse_document, Body};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exactalg"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn exit_codes_separate_answers_usage_and_failures() {
    // Success, including mathematically negative answers.
    assert_eq!(code(&run(&["example", "mu2_char2"])), 0);
    assert_eq!(code(&run(&["exact", "mu2_tensor_char2"])), 0);
    assert_eq!(code(&run(&["projective", "mu2_tensor_char2"])), 0);

    // Usage problems: unknown instances, conflicting flags, bad input.
    assert_eq!(code(&run(&["example", "bogus"])), 1);
    assert_eq!(code(&run(&["example", "mu2_char2", "--field", "3"])), 1);
    assert_eq!(code(&run(&["verify", "bogus"])), 1);

    // Verification failures: a decomposition that cannot exist.
    assert_eq!(code(&run(&["decompose", "mu2_tensor_char2"])), 2);
}

#[test]
fn json_mode_emits_exactly_one_parseable_document() {
    let output = run(&["example", "sweedler4_Q", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let text = String::from_utf8(output.stdout).unwrap();
    let doc = parse_document(&text).expect("stdout is one document");
    assert!(matches!(doc.body, Body::Hopf(_)));
    assert_eq!(text, doc.to_json(), "output is the canonical rendering");
}

#[test]
fn documents_pipe_between_commands() {
    let producer = run(&["example", "mu2_tensor_char2", "--format", "json"]);
    assert_eq!(code(&producer), 0);

    let mut consumer = Command::new(env!("CARGO_BIN_EXE_exactalg"))
        .args(["radical", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("the binary runs");
    consumer
        .stdin
        .take()
        .unwrap()
        .write_all(&producer.stdout)
        .unwrap();
    let output = consumer.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));

    let doc = parse_document(&String::from_utf8(output.stdout).unwrap()).unwrap();
    match doc.body {
        Body::Subspace(data) => {
            // The plain Jacobson radical of the char-2 tensor square is
            // three-dimensional; only its stable core has dimension two.
            assert_eq!(data.basis.len(), 3);
            assert_eq!(data.ambient, 4);
        }
        other => panic!("expected a subspace document, got {:?}", other),
    }
}
