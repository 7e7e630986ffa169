//! Dual-ISO front end: separating a spatially-varying-exposure mosaic into
//! its two exposure sub-images and re-interpolating each to full height.

use crate::error::{Error, Result};
use crate::raster::{ExposureKind, RawMosaic, SveLayout};

/// Which alternating row groups a half-height sub-image occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfGroup {
    /// Groups starting at rows `0, 2p, 4p, ...` (p = line period).
    First,
    /// Groups starting at rows `p, 3p, 5p, ...`.
    Second,
}

fn validate_layout(x: &RawMosaic, layout: &SveLayout) -> Result<()> {
    let p = layout.line_period;
    if p == 0 || p % 2 != 0 {
        return Err(Error::Cfa(format!(
            "line period {p} must be a positive multiple of the CFA row period 2"
        )));
    }
    if x.height() % (2 * p) != 0 {
        return Err(Error::Dimension(format!(
            "mosaic height {} is not a multiple of two line periods ({})",
            x.height(),
            2 * p
        )));
    }
    Ok(())
}

/// Splits a dual-ISO mosaic into `(low, high)` half-height sub-images.
///
/// Rows are regrouped in capture order: the first `line_period` rows and every
/// second group after them form one half, the remaining groups the other.
/// `layout.first_group` decides which half is the high exposure. Both halves
/// keep the full-frame CFA pattern (group strides are even).
pub fn separate(x: &RawMosaic, layout: &SveLayout) -> Result<(RawMosaic, RawMosaic)> {
    validate_layout(x, layout)?;
    let p = layout.line_period;
    let (w, h) = (x.width(), x.height());
    let groups = h / p;

    let mut first = Vec::with_capacity(w * h / 2);
    let mut second = Vec::with_capacity(w * h / 2);
    for g in 0..groups {
        let dst = if g % 2 == 0 { &mut first } else { &mut second };
        for r in g * p..(g + 1) * p {
            dst.extend_from_slice(x.row(r));
        }
    }

    let first = RawMosaic::new(w, h / 2, x.cfa(), first)?;
    let second = RawMosaic::new(w, h / 2, x.cfa(), second)?;
    match layout.first_group {
        ExposureKind::High => Ok((second, first)),
        ExposureKind::Low => Ok((first, second)),
    }
}

/// Inverse of [`separate`]: re-interleaves the two halves row-group-wise.
pub fn interleave(
    low: &RawMosaic,
    high: &RawMosaic,
    layout: &SveLayout,
) -> Result<RawMosaic> {
    if low.width() != high.width() || low.height() != high.height() {
        return Err(Error::Dimension("halves must share dimensions".into()));
    }
    let p = layout.line_period;
    if p == 0 || low.height() % p != 0 {
        return Err(Error::Dimension(format!(
            "half height {} is not a multiple of the line period {p}",
            low.height()
        )));
    }
    let (first, second) = match layout.first_group {
        ExposureKind::High => (high, low),
        ExposureKind::Low => (low, high),
    };
    let (w, h2) = (low.width(), low.height());
    let mut data = Vec::with_capacity(w * h2 * 2);
    for g in 0..h2 / p {
        for r in g * p..(g + 1) * p {
            data.extend_from_slice(first.row(r));
        }
        for r in g * p..(g + 1) * p {
            data.extend_from_slice(second.row(r));
        }
    }
    RawMosaic::new(w, h2 * 2, low.cfa(), data)
}

/// Expands a half-height sub-image back to full height.
///
/// Present row groups are copied verbatim into their original positions. Each
/// missing group is filled per pixel with the arithmetic mean of the
/// same-CFA-position pixels in the nearest present groups above and below; at
/// the top/bottom boundary the single nearest present group is replicated.
pub fn interpolate_rows(
    half: &RawMosaic,
    layout: &SveLayout,
    group: HalfGroup,
) -> Result<RawMosaic> {
    let p = layout.line_period;
    if half.height() == 0 || half.width() == 0 {
        return Err(Error::Dimension("empty half-image".into()));
    }
    if p == 0 || p % 2 != 0 {
        return Err(Error::Cfa(format!(
            "line period {p} must be a positive multiple of the CFA row period 2"
        )));
    }
    if half.height() % p != 0 {
        return Err(Error::Dimension(format!(
            "half height {} is not a multiple of the line period {p}",
            half.height()
        )));
    }

    let (w, h2) = (half.width(), half.height());
    let h = h2 * 2;
    let half_groups = h2 / p;
    let phase = match group {
        HalfGroup::First => 0usize,
        HalfGroup::Second => 1usize,
    };

    // Maps a full-frame group index to the half row holding a given in-group
    // offset, or None when that group is missing from this half.
    let present_row = |g: usize, offset: usize| -> Option<usize> {
        if g % 2 == phase {
            Some((g / 2) * p + offset)
        } else {
            None
        }
    };

    let mut data = vec![0.0; w * h];
    for g in 0..h / p {
        for offset in 0..p {
            let dst_row = g * p + offset;
            let dst = &mut data[dst_row * w..(dst_row + 1) * w];
            if let Some(src) = present_row(g, offset) {
                dst.copy_from_slice(half.row(src));
                continue;
            }
            // Present groups alternate, so the neighbors at g-1 / g+1 are the
            // nearest present ones whenever they exist.
            let above = g.checked_sub(1).and_then(|ga| present_row(ga, offset));
            let below = if g + 1 < 2 * half_groups + (h / p - 2 * half_groups) {
                present_row(g + 1, offset)
            } else {
                None
            };
            let below = below.filter(|_| g + 1 < h / p);
            match (above, below) {
                (Some(a), Some(b)) => {
                    let ra = half.row(a);
                    let rb = half.row(b);
                    for (d, (va, vb)) in dst.iter_mut().zip(ra.iter().zip(rb)) {
                        *d = 0.5 * (va + vb);
                    }
                }
                (Some(a), None) => dst.copy_from_slice(half.row(a)),
                (None, Some(b)) => dst.copy_from_slice(half.row(b)),
                (None, None) => {
                    return Err(Error::Dimension(
                        "half-image has no present group adjacent to a missing one".into(),
                    ))
                }
            }
        }
    }

    RawMosaic::new(w, h, half.cfa(), data)
}
