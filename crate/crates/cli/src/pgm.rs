use bklab_core::ScalarField;

/// Binary PGM (P5, maxval 255) of the real part. Row 1 is the top of the
/// image, i.e. the largest y. Values map affinely from `[min, max]` with
/// round-half-up; a degenerate window gives mid-gray.
pub fn render_pgm(f: &ScalarField, min: f64, max: f64) -> Vec<u8> {
    let g = f.grid();
    let (nx, ny) = (g.nx(), g.ny());
    let mut out = format!("P5\n{nx} {ny}\n255\n").into_bytes();
    out.reserve(nx * ny);
    let span = max - min;
    for j in (0..ny).rev() {
        for i in 0..nx {
            let px = if span > 0.0 && span.is_finite() {
                let v = ((f.at(i, j).re - min) / span * 255.0 + 0.5).floor();
                v.clamp(0.0, 255.0) as u8
            } else {
                128
            };
            out.push(px);
        }
    }
    out
}
