//! Built-in figures against stored SVG. Set CK_BLESS=1 to rewrite them.

use std::path::Path;

use cayley_klein::cli::figure::{default_scene, render_figure, FigureName};

#[test]
fn figures_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("CK_BLESS").is_some();
    let mut stale = Vec::new();
    for name in FigureName::ALL {
        let svg = render_figure(name, &default_scene(name)).unwrap();
        let path = dir.join(format!("{name}.svg"));
        if bless {
            std::fs::write(&path, &svg).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(svg.as_str()) {
            stale.push(name.to_string());
        }
    }
    assert!(stale.is_empty(), "figures differ from tests/golden: {stale:?}");
}
