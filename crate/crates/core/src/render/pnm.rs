use std::io::{self, Write};

use super::{Bitmap, Raster};

/// Maximum characters per raster line in plain PBM.
pub const PBM_LINE_WIDTH: usize = 70;

fn header<W: Write>(
    w: &mut W,
    magic: &str,
    comments: &[String],
    width: usize,
    height: usize,
) -> io::Result<()> {
    writeln!(w, "{magic}")?;
    for c in comments {
        for line in c.lines() {
            writeln!(w, "# {line}")?;
        }
    }
    writeln!(w, "{width} {height}")
}

/// Plain PBM (`P1`): one digit per pixel, each image row starting on a new
/// line and wrapped at [`PBM_LINE_WIDTH`].
pub fn write_pbm_ascii<W: Write>(w: &mut W, img: &Bitmap, comments: &[String]) -> io::Result<()> {
    header(w, "P1", comments, img.width, img.height)?;
    let mut line = String::with_capacity(PBM_LINE_WIDTH);
    for row in &img.rows {
        for chunk in row.chunks(PBM_LINE_WIDTH) {
            line.clear();
            line.extend(chunk.iter().map(|&b| if b { '1' } else { '0' }));
            writeln!(w, "{line}")?;
        }
    }
    Ok(())
}

/// Raw PBM (`P4`): rows packed MSB-first, padded to whole bytes.
pub fn write_pbm_binary<W: Write>(w: &mut W, img: &Bitmap, comments: &[String]) -> io::Result<()> {
    header(w, "P4", comments, img.width, img.height)?;
    let mut buf = vec![0u8; img.width.div_ceil(8)];
    for row in &img.rows {
        buf.fill(0);
        for (i, _) in row.iter().enumerate().filter(|(_, &b)| b) {
            buf[i / 8] |= 0x80 >> (i % 8);
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

/// Raw PGM (`P5`) with maxval 255.
pub fn write_pgm<W: Write>(
    w: &mut W,
    width: usize,
    height: usize,
    gray: &[u8],
    comments: &[String],
) -> io::Result<()> {
    header(w, "P5", comments, width, height)?;
    writeln!(w, "255")?;
    w.write_all(gray)
}

/// Raw PPM (`P6`) with maxval 255.
pub fn write_ppm<W: Write>(w: &mut W, img: &Raster, comments: &[String]) -> io::Result<()> {
    header(w, "P6", comments, img.width, img.height)?;
    writeln!(w, "255")?;
    for px in &img.pixels {
        w.write_all(px)?;
    }
    Ok(())
}

/// One line per image row: the row label, then one 0/1 per column.
/// Comment lines start with `#`.
pub fn write_csv<W: Write>(
    w: &mut W,
    img: &Bitmap,
    columns: &[i64],
    labels: &[i64],
    comments: &[String],
) -> io::Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    write!(w, "t")?;
    for x in columns {
        write!(w, ",{x}")?;
    }
    writeln!(w)?;
    for (row, t) in img.rows.iter().zip(labels) {
        write!(w, "{t}")?;
        for &b in row {
            write!(w, ",{}", u8::from(b))?;
        }
        writeln!(w)?;
    }
    Ok(())
}
