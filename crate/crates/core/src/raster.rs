//! Raster types: CFA mosaics, single-channel planes and linear RGB images.
//!
//! All pixel data is stored row-major as `f64`, linear with respect to
//! exposure. Mosaic values are normalized so that sensor saturation is 1.0;
//! HDR radiance is unbounded above.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One channel of a Bayer color filter array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Channel {
    R,
    G,
    B,
}

/// 2x2 Bayer tile order. Each variant assigns exactly one R, one B and two G
/// sites per tile, so the per-tile invariant holds by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CfaPattern {
    #[default]
    Rggb,
    Bggr,
    Grbg,
    Gbrg,
}

impl CfaPattern {
    /// Channel recorded at pixel `(row, col)` of a full frame.
    #[inline]
    pub fn channel_at(self, row: usize, col: usize) -> Channel {
        let (r, c) = (row & 1, col & 1);
        match self {
            CfaPattern::Rggb => match (r, c) {
                (0, 0) => Channel::R,
                (1, 1) => Channel::B,
                _ => Channel::G,
            },
            CfaPattern::Bggr => match (r, c) {
                (0, 0) => Channel::B,
                (1, 1) => Channel::R,
                _ => Channel::G,
            },
            CfaPattern::Grbg => match (r, c) {
                (0, 1) => Channel::R,
                (1, 0) => Channel::B,
                _ => Channel::G,
            },
            CfaPattern::Gbrg => match (r, c) {
                (0, 1) => Channel::B,
                (1, 0) => Channel::R,
                _ => Channel::G,
            },
        }
    }

    /// Pattern as seen from an origin shifted by `(dr, dc)` rows/columns.
    pub fn shifted(self, dr: usize, dc: usize) -> CfaPattern {
        let probe = |r: usize, c: usize| self.channel_at(r + dr, c + dc);
        match (probe(0, 0), probe(0, 1)) {
            (Channel::R, Channel::G) => CfaPattern::Rggb,
            (Channel::B, Channel::G) => CfaPattern::Bggr,
            (Channel::G, Channel::R) => CfaPattern::Grbg,
            (Channel::G, Channel::B) => CfaPattern::Gbrg,
            _ => unreachable!("every Bayer tile row holds one G and one non-G site"),
        }
    }

    /// The non-green channel carried by `row` (rows alternate R/G and G/B).
    #[inline]
    pub fn row_channel(self, row: usize) -> Channel {
        match (self.channel_at(row, 0), self.channel_at(row, 1)) {
            (Channel::G, other) | (other, Channel::G) => other,
            _ => unreachable!(),
        }
    }

    pub fn parse(name: &str) -> Result<CfaPattern> {
        match name.to_ascii_uppercase().as_str() {
            "RGGB" => Ok(CfaPattern::Rggb),
            "BGGR" => Ok(CfaPattern::Bggr),
            "GRBG" => Ok(CfaPattern::Grbg),
            "GBRG" => Ok(CfaPattern::Gbrg),
            other => Err(Error::Cfa(format!("unknown CFA pattern {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CfaPattern::Rggb => "RGGB",
            CfaPattern::Bggr => "BGGR",
            CfaPattern::Grbg => "GRBG",
            CfaPattern::Gbrg => "GBRG",
        }
    }
}

/// Exposure class of a sub-image in a dual-ISO capture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExposureKind {
    Low,
    High,
}

impl ExposureKind {
    pub fn name(self) -> &'static str {
        match self {
            ExposureKind::Low => "low",
            ExposureKind::High => "high",
        }
    }
}

/// Exposure tag attached to a separated sub-image: which class it is and its
/// EV offset in stops relative to the 0 EV anchor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExposureTag {
    pub kind: ExposureKind,
    pub ev_offset: f64,
}

/// Row layout of a dual-ISO capture: ISO alternates every `line_period` rows,
/// and `first_group` names the exposure of rows `0..line_period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SveLayout {
    pub line_period: usize,
    pub first_group: ExposureKind,
}

impl Default for SveLayout {
    fn default() -> Self {
        SveLayout {
            line_period: 2,
            first_group: ExposureKind::High,
        }
    }
}

/// Single-channel raster, row-major. Also used for luminance maps, fusion
/// weights and pyramid levels (which may hold negative values).
#[derive(Clone, Debug, PartialEq)]
pub struct Plane {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

/// Per-pixel scalar luminance plane.
pub type LuminanceMap = Plane;

impl Plane {
    pub fn zeros(width: usize, height: usize) -> Plane {
        Plane {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Result<Plane> {
        if data.len() != width * height {
            return Err(Error::Dimension(format!(
                "plane data length {} does not match {width}x{height}",
                data.len()
            )));
        }
        Ok(Plane {
            width,
            height,
            data,
        })
    }

    pub fn constant(width: usize, height: usize, value: f64) -> Plane {
        Plane {
            width,
            height,
            data: vec![value; width * height],
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.width + col] = value;
    }

    /// Pixel fetch with mirror-reflected (no edge repeat) out-of-frame indices.
    #[inline]
    pub fn get_mirrored(&self, row: isize, col: isize) -> f64 {
        let r = mirror_index(row, self.height);
        let c = mirror_index(col, self.width);
        self.data[r * self.width + c]
    }

    #[inline]
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.width..(row + 1) * self.width]
    }

    pub fn row_mut(&mut self, row: usize) -> &mut [f64] {
        &mut self.data[row * self.width..(row + 1) * self.width]
    }

    pub fn min_max(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &self.data {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Plane {
        Plane {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn same_size(&self, other: &Plane) -> bool {
        self.width == other.width && self.height == other.height
    }
}

/// Mirror reflection without repeating the edge sample (`-1 -> 1`,
/// `n -> n-2`). Preserves even/odd parity, so CFA phase survives it.
#[inline]
pub fn mirror_index(i: isize, n: usize) -> usize {
    debug_assert!(n > 0);
    let n = n as isize;
    if n == 1 {
        return 0;
    }
    let period = 2 * (n - 1);
    let mut m = i.rem_euclid(period);
    if m >= n {
        m = period - m;
    }
    m as usize
}

/// Single-channel linear CFA image with pattern metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct RawMosaic {
    plane: Plane,
    cfa: CfaPattern,
}

impl RawMosaic {
    /// Builds a mosaic, validating that every value is finite and >= 0.
    pub fn new(width: usize, height: usize, cfa: CfaPattern, data: Vec<f64>) -> Result<RawMosaic> {
        if data.len() != width * height {
            return Err(Error::Dimension(format!(
                "mosaic data length {} does not match {width}x{height}",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Numerical(
                "mosaic values must be finite and non-negative".into(),
            ));
        }
        Ok(RawMosaic {
            plane: Plane {
                width,
                height,
                data,
            },
            cfa,
        })
    }

    pub fn constant(width: usize, height: usize, cfa: CfaPattern, value: f64) -> RawMosaic {
        RawMosaic {
            plane: Plane::constant(width, height, value),
            cfa,
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.plane.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.plane.height
    }

    #[inline]
    pub fn cfa(&self) -> CfaPattern {
        self.cfa
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.plane.get(row, col)
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.plane.set(row, col, value);
    }

    #[inline]
    pub fn get_mirrored(&self, row: isize, col: isize) -> f64 {
        self.plane.get_mirrored(row, col)
    }

    #[inline]
    pub fn channel_at(&self, row: usize, col: usize) -> Channel {
        self.cfa.channel_at(row, col)
    }

    #[inline]
    pub fn data(&self) -> &[f64] {
        self.plane.data()
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn row(&self, row: usize) -> &[f64] {
        self.plane.row(row)
    }
}

/// 3-channel linear floating-point image, planar storage.
#[derive(Clone, Debug, PartialEq)]
pub struct RgbImage {
    planes: [Plane; 3],
}

/// HDR radiance map; same representation as [`RgbImage`] but unbounded above.
pub type HdrImage = RgbImage;

impl RgbImage {
    pub fn zeros(width: usize, height: usize) -> RgbImage {
        RgbImage {
            planes: [
                Plane::zeros(width, height),
                Plane::zeros(width, height),
                Plane::zeros(width, height),
            ],
        }
    }

    pub fn from_planes(planes: [Plane; 3]) -> Result<RgbImage> {
        if !planes[0].same_size(&planes[1]) || !planes[0].same_size(&planes[2]) {
            return Err(Error::Dimension(
                "RGB planes must share dimensions".into(),
            ));
        }
        Ok(RgbImage { planes })
    }

    pub fn constant(width: usize, height: usize, rgb: [f64; 3]) -> RgbImage {
        RgbImage {
            planes: [
                Plane::constant(width, height, rgb[0]),
                Plane::constant(width, height, rgb[1]),
                Plane::constant(width, height, rgb[2]),
            ],
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.planes[0].width()
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.planes[0].height()
    }

    #[inline]
    pub fn plane(&self, c: usize) -> &Plane {
        &self.planes[c]
    }

    #[inline]
    pub fn plane_mut(&mut self, c: usize) -> &mut Plane {
        &mut self.planes[c]
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> [f64; 3] {
        [
            self.planes[0].get(row, col),
            self.planes[1].get(row, col),
            self.planes[2].get(row, col),
        ]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, rgb: [f64; 3]) {
        for c in 0..3 {
            self.planes[c].set(row, col, rgb[c]);
        }
    }

    pub fn same_size(&self, other: &RgbImage) -> bool {
        self.planes[0].same_size(&other.planes[0])
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> RgbImage {
        RgbImage {
            planes: [
                self.planes[0].map(&f),
                self.planes[1].map(&f),
                self.planes[2].map(&f),
            ],
        }
    }

    /// Clamps every value into `[lo, hi]`.
    pub fn clamped(&self, lo: f64, hi: f64) -> RgbImage {
        self.map(|v| v.clamp(lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rggb_tile_assignment() {
        let p = CfaPattern::Rggb;
        assert_eq!(p.channel_at(0, 0), Channel::R);
        assert_eq!(p.channel_at(0, 1), Channel::G);
        assert_eq!(p.channel_at(1, 0), Channel::G);
        assert_eq!(p.channel_at(1, 1), Channel::B);
        // 2x2 periodicity
        assert_eq!(p.channel_at(2, 2), Channel::R);
        assert_eq!(p.channel_at(3, 3), Channel::B);
    }

    #[test]
    fn every_pattern_has_one_r_one_b_two_g_per_tile() {
        for p in [
            CfaPattern::Rggb,
            CfaPattern::Bggr,
            CfaPattern::Grbg,
            CfaPattern::Gbrg,
        ] {
            let tile = [
                p.channel_at(0, 0),
                p.channel_at(0, 1),
                p.channel_at(1, 0),
                p.channel_at(1, 1),
            ];
            assert_eq!(tile.iter().filter(|c| **c == Channel::R).count(), 1);
            assert_eq!(tile.iter().filter(|c| **c == Channel::B).count(), 1);
            assert_eq!(tile.iter().filter(|c| **c == Channel::G).count(), 2);
        }
    }

    #[test]
    fn shifted_pattern_matches_direct_lookup() {
        let p = CfaPattern::Rggb;
        for dr in 0..4 {
            for dc in 0..4 {
                let s = p.shifted(dr, dc);
                for r in 0..2 {
                    for c in 0..2 {
                        assert_eq!(s.channel_at(r, c), p.channel_at(r + dr, c + dc));
                    }
                }
            }
        }
    }

    #[test]
    fn row_channel_alternates() {
        assert_eq!(CfaPattern::Rggb.row_channel(0), Channel::R);
        assert_eq!(CfaPattern::Rggb.row_channel(1), Channel::B);
        assert_eq!(CfaPattern::Gbrg.row_channel(0), Channel::B);
        assert_eq!(CfaPattern::Gbrg.row_channel(1), Channel::R);
    }

    #[test]
    fn mirror_index_reflects_without_edge_repeat() {
        assert_eq!(mirror_index(-1, 5), 1);
        assert_eq!(mirror_index(-2, 5), 2);
        assert_eq!(mirror_index(5, 5), 3);
        assert_eq!(mirror_index(6, 5), 2);
        assert_eq!(mirror_index(0, 5), 0);
        assert_eq!(mirror_index(4, 5), 4);
        // parity is preserved, so the CFA phase survives reflection
        for i in -6..12isize {
            let m = mirror_index(i, 6);
            assert_eq!(m as isize % 2, i.rem_euclid(2), "parity broken at {i}");
        }
        assert_eq!(mirror_index(3, 1), 0);
    }

    #[test]
    fn mosaic_rejects_bad_values() {
        assert!(RawMosaic::new(2, 2, CfaPattern::Rggb, vec![0.0; 3]).is_err());
        assert!(RawMosaic::new(2, 2, CfaPattern::Rggb, vec![0.0, 1.0, -0.1, 0.5]).is_err());
        assert!(RawMosaic::new(2, 2, CfaPattern::Rggb, vec![0.0, 1.0, f64::NAN, 0.5]).is_err());
        assert!(RawMosaic::new(2, 2, CfaPattern::Rggb, vec![0.0, 1.0, 0.2, 0.5]).is_ok());
    }

    #[test]
    fn rgb_planes_must_agree() {
        let p = Plane::zeros(4, 4);
        let q = Plane::zeros(4, 2);
        assert!(RgbImage::from_planes([p.clone(), p.clone(), q]).is_err());
        assert!(RgbImage::from_planes([p.clone(), p.clone(), p]).is_ok());
    }
}
