//! Renders every built-in figure as SVG into a directory.

use cayley_klein::cli::figure::{default_scene, render_figure, FigureName};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    std::fs::create_dir_all(&dir)?;
    for name in FigureName::ALL {
        let svg = render_figure(name, &default_scene(name))?;
        let path = format!("{dir}/{name}.svg");
        std::fs::write(&path, svg)?;
        println!("wrote {path}");
    }
    Ok(())
}
