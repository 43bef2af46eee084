//! Walks the registered reference cases: prints what each case claims,
//! recomputes every pinned number, and shows the pass/fail verdicts.
//!
//! With `--write-fixtures DIR` it also exports every case's matrices as
//! interchange files (the copies shipped in `fixtures/` were produced this
//! way), so the same inputs can be replayed through the command line.

use tracegap::cases::{reference_cases, reproduce};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    println!("registered reference cases");
    println!("==========================");
    for case in reference_cases() {
        println!("\n{} ({})", case.name, case.id);
        println!("  {}", case.description);
        for row in case.reproduce().expect("registered case evaluates") {
            let diff = row
                .difference
                .map_or_else(|| "-".to_string(), |d| format!("{d:.3e}"));
            println!(
                "  {:<18} target {:<28} computed {:<22.15e} diff {:<10} {}",
                row.case,
                row.target,
                row.observed,
                diff,
                if row.pass { "pass" } else { "FAIL" }
            );
        }
    }

    let all = reproduce("all").expect("registry evaluates");
    let passed = all.iter().filter(|r| r.pass).count();
    println!("\n{passed}/{} rows reproduce their targets", all.len());

    if let Some(pos) = args.iter().position(|a| a == "--write-fixtures") {
        let dir = std::path::PathBuf::from(
            args.get(pos + 1)
                .expect("--write-fixtures needs a directory"),
        );
        std::fs::create_dir_all(&dir).expect("fixture directory");
        let mut written = 0;
        for case in reference_cases() {
            for (file_name, file) in case.fixture_files() {
                file.save(&dir.join(&file_name)).expect("fixture write");
                written += 1;
            }
        }
        println!("wrote {written} fixture files to {}", dir.display());
    }
}
