//! Regenerates `data/nfr_authentication.json`.
use ivtrnn::cli::ProblemFile;
use ivtrnn::reference::Regime;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/nfr_authentication.json");
    std::fs::write(path, ProblemFile::reference(Regime::Uniform025).to_json() + "\n").unwrap();
}
