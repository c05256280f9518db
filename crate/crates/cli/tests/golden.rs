mod support;

use support::{golden_path, run_json, GOLDEN};

#[test]
fn structured_output_matches_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (stem, args) in GOLDEN {
        let out = run_json(args);
        assert!(
            out.status.success(),
            "{stem}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let got = String::from_utf8(out.stdout).unwrap();
        let path = golden_path(stem);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want =
            std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if got != want {
            mismatches.push(format!("{stem}:\n--- want\n{want}\n--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn golden_documents_have_the_schema_fields() {
    for (stem, _) in GOLDEN {
        let text = std::fs::read_to_string(golden_path(stem)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in [
            "command", "inputs", "verdict", "witness", "flags", "version",
        ] {
            assert!(v.get(key).is_some(), "{stem} lacks {key}");
        }
    }
}
