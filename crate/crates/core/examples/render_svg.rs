// Writes an SVG of the Sigma 5 CSL of the shifted lattice 1/2 + Z[i].
//
//     cargo run --example render_svg -- out.svg

use std::path::{Path, PathBuf};

use shifted_csl::cli::svg;
use shifted_csl::{GaussianInt, GaussianRational, Isometry, Unit, Window};

fn main() {
    let path =
        std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("sigma5_half.svg"));
    let bytes = write_picture(&path);
    println!("{bytes} bytes written to {}", path.display());
}

fn write_picture(path: &Path) -> usize {
    let x = GaussianRational::from_fractions(1, 2, 0, 1).unwrap();
    let r = Isometry::rotation(GaussianInt::from_i64(2, 1), Unit::NegOne).unwrap();
    let picture = svg::render(&x, &r, &Window::new(7).unwrap());
    std::fs::write(path, &picture).expect("writable output path");
    picture.len()
}
