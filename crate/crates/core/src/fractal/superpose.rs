use super::DoublingRun;
use crate::error::{Error, Result};
use crate::render::Raster;

pub const BACKGROUND: [u8; 3] = [255, 255, 255];

/// Layer colors, cycled by position in the level list: black, amber, blue,
/// red, green, purple.
pub const PALETTE: [[u8; 3]; 6] = [
    [0, 0, 0],
    [230, 180, 0],
    [0, 110, 220],
    [200, 30, 30],
    [0, 150, 70],
    [130, 60, 170],
];

/// Draws the 1-cells of each listed level onto one raster in level-0 units
/// `xmin..=xmax` and rows `0..=steps`, where level-0 has `steps` rows.
///
/// The raster has the resolution of the finest listed level `m`: a level-`n`
/// cell becomes a `2^(m-n)` square. Layers are painted in list order, so
/// later entries lie on top. Row 0 of the raster is time 0.
pub fn superpose(run: &DoublingRun, levels: &[usize], xmin: i64, xmax: i64) -> Result<Raster> {
    if levels.is_empty() {
        return Err(Error::Usage("superpose needs at least one level".into()));
    }
    if xmax < xmin {
        return Err(Error::Usage(format!("empty column range {xmin}..={xmax}")));
    }
    if let Some(&bad) = levels.iter().find(|&&n| n > run.n_max()) {
        return Err(Error::Usage(format!(
            "level {bad} not in run (0..={})",
            run.n_max()
        )));
    }
    let finest = *levels.iter().max().expect("non-empty");
    let steps0 = run.level(0).expect("level 0").steps();
    let width = ((xmax - xmin + 1) as usize) << finest;
    let height = (steps0 << finest) + 1;
    let mut img = Raster::filled(width, height, BACKGROUND);
    for (k, &n) in levels.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let shift = finest - n;
        let d = run.level(n).expect("checked above");
        let x0 = xmin << n;
        let cols = ((xmax - xmin + 1) as usize) << n;
        for (t, row) in d.rows().iter().enumerate() {
            let py0 = t << shift;
            if py0 >= height {
                break;
            }
            let cells = row.read_range(x0, x0 + cols as i64 - 1);
            for (i, bit) in cells.iter().enumerate() {
                if !bit {
                    continue;
                }
                for py in py0..(py0 + (1 << shift)).min(height) {
                    for px in i << shift..(i + 1) << shift {
                        img.set(px, py, color);
                    }
                }
            }
        }
    }
    Ok(img)
}
