//! Regenerates docs/examples/: one scenario JSON per bundled preset plus a
//! sample sweep grid.
//!
//! Usage: `cargo run -p qwalk --example export_scenarios`

use std::fs;
use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("docs/examples");
    fs::create_dir_all(&dir)?;
    for p in qwalk::presets::all_presets() {
        let json = serde_json::to_string_pretty(&p.config).expect("config serializes");
        fs::write(dir.join(format!("{}.json", p.name)), json + "\n")?;
    }

    let s = 1.0 / 3f64.sqrt();
    let pi = std::f64::consts::PI;
    let grid = serde_json::json!({
        "steps": 500,
        "shift": "S_prime",
        "initial_position": 0,
        "initial_amplitudes": [[s, 0.0], [s, 0.0], [0.0, -s]],
        "k_term_convention": "corrected",
        "coin_a": {"alpha": [pi], "beta": [pi / 2.0], "gamma": [pi], "theta": [pi]},
        "coin_b": {
            "alpha": [pi / 2.0, pi / 4.0],
            "beta": [pi / 2.0],
            "gamma": [3.0 * pi / 2.0],
            "theta": [pi / 2.0, pi / 4.0]
        }
    });
    fs::write(
        dir.join("sweep-grid.json"),
        serde_json::to_string_pretty(&grid).expect("grid serializes") + "\n",
    )?;
    println!("wrote {}", dir.display());
    Ok(())
}
