//! Reading and writing scene files.

use cayley_klein::cli::scene::{parse_scene, serialize_scene};

const SCENE: &str = r#"{
  "model": {
    "kind": "euclidean",
    "infinity_line": ["0", "0", "1"],
    "involution": [["0", "-1"], ["1", "0"]]
  },
  "points": {"A": ["2/2", "10/2", "1"], "B": ["5", "-1", "1"], "D": ["-4", "-2", "1"]},
  "style": {"labels": ["A", "B"]}
}"#;

fn main() {
    let scene = parse_scene(SCENE).expect("valid scene");
    print!("{}", serialize_scene(&scene));
    match parse_scene(r#"{"model": {"kind": "hyperbolic"}, "points": {}}"#) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    match parse_scene("{\"model\": ") {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
