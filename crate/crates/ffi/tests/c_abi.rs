use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Directory holding the library artifacts for the current profile.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().expect("test binary path");
    exe.parent().and_then(Path::parent).expect("profile dir").to_path_buf()
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(manifest_dir().join("include/fibword.h")).unwrap();
    for name in [
        "typedef struct FwWord FwWord;",
        "typedef struct FwClaims FwClaims;",
        "FW_STATUS_OK = 0",
        "FW_STATUS_NULL_POINTER = 1",
        "FW_STATUS_INVALID_ARGUMENT = 2",
        "FW_STATUS_BUFFER_TOO_SMALL = 3",
        "FW_STATUS_INTERNAL = 4",
        "fw_word_generate(",
        "fw_word_copy(",
        "fw_word_free(",
        "fw_claims_run(",
        "fw_claims_free(",
        "fw_string_free(",
        "fw_last_error_message(",
        "fw_cli_run(",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = artifact_dir().join("libfibword_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out_dir = std::env::temp_dir().join(format!("fibword-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{}{}", stdout, String::from_utf8_lossy(&run.stderr));
    assert!(stdout.starts_with("ok 0.1.0"), "{stdout}");
    let _ = std::fs::remove_dir_all(&out_dir);
}
