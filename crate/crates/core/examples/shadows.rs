//! The same projective statement read as hyperbolic pentagons, hexagons and
//! a quadrangle when vertices leave the disk.

use cayley_klein::cli::figure::{default_scene, FigureName};
use cayley_klein::model::Model;
use cayley_klein::theorems::{build_diametral, build_shadow, check_shadow, shadow_classify, shadow_feet, ShadowKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in ShadowKind::ALL {
        let scene = default_scene(FigureName::Shadow(kind));
        let cfg = build_diametral(&Model::hyperbolic(), &scene.point("A")?, &scene.point("B")?, &scene.point("D")?)?;
        let found = shadow_classify(&cfg)?;
        let fig = build_shadow(&cfg, kind)?;
        let (a_star, c_star, _) = shadow_feet(&fig)?;
        println!("{kind}: classified as {found}, A* = {a_star}, C* = {c_star}");
        let report = check_shadow(&fig);
        println!("  {}", if report.passed() { "PASS" } else { "FAIL" });
    }
    Ok(())
}
