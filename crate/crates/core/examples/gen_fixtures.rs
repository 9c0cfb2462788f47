//! Regenerates the committed corpus fixtures `connected7.g6` and `connected8.g6`.
//!
//! ```text
//! cargo run --release -p distlap --example gen_fixtures [DIR]
//! ```

use std::path::PathBuf;

use distlap::graph::{default_corpus_dir, generate_connected, write_graph6_file};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(default_corpus_dir);
    std::fs::create_dir_all(&dir)?;
    for n in [7, 8] {
        let graphs = generate_connected(n)?;
        let path = dir.join(format!("connected{n}.g6"));
        write_graph6_file(&path, &graphs)?;
        println!("{}: {} graphs", path.display(), graphs.len());
    }
    Ok(())
}
