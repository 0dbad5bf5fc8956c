//! Shared imaging domain types plus grayscale I/O, resizing, tiling,
//! dataset splitting, and bounding-box-aware augmentation.

mod augment;
mod io;
mod manifest;
mod resize;
mod split;
mod tile;

pub use augment::{augment, AugmentSpec};
pub use io::{
    load_image, read_annotations, read_detections, save_image, write_annotations,
    write_detections,
};
pub use manifest::{DatasetManifest, ManifestEntry, SplitTag};
pub use resize::resize;
pub use split::split_dataset;
pub use tile::{clip_annotations_to_tile, stitch_detections, tile, Tile};

use crate::error::{Error, Result};

/// Single-channel 8-bit frame. Pixels are row-major luminance values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl MonoImage {
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 || pixels.len() != (width as usize) * (height as usize) {
            return Err(Error::BadImageBuffer {
                width,
                height,
                len: pixels.len(),
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// All-zero (black) frame.
    pub fn zeros(width: u32, height: u32) -> Self {
        Self {
            width: width.max(1),
            height: height.max(1),
            pixels: vec![0; (width.max(1) as usize) * (height.max(1) as usize)],
        }
    }

    /// Build from a per-pixel function of (x, y).
    pub fn from_fn(width: u32, height: u32, f: impl Fn(u32, u32) -> u8) -> Self {
        let mut pixels = Vec::with_capacity((width as usize) * (height as usize));
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            pixels,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[(y as usize) * (self.width as usize) + (x as usize)]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: u8) {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[(y as usize) * (self.width as usize) + (x as usize)] = value;
    }

    /// Luminance histogram (256 bins).
    pub fn histogram(&self) -> [u64; 256] {
        let mut h = [0u64; 256];
        for &p in &self.pixels {
            h[p as usize] += 1;
        }
        h
    }
}

/// Axis-aligned pixel-space box, top-left corner plus size. Boxes may
/// extend outside an image; clipping is always explicit.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BBox {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    /// Validating constructor for boxes read from external input.
    pub fn try_new(x: f64, y: f64, w: f64, h: f64) -> Result<Self> {
        if w <= 0.0 || h <= 0.0 || !(x.is_finite() && y.is_finite() && w.is_finite() && h.is_finite())
        {
            return Err(Error::NonPositiveBox { w, h });
        }
        Ok(Self { x, y, w, h })
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    pub fn right(&self) -> f64 {
        self.x + self.w
    }

    pub fn bottom(&self) -> f64 {
        self.y + self.h
    }

    pub fn center(&self) -> (f64, f64) {
        (self.x + self.w / 2.0, self.y + self.h / 2.0)
    }

    /// Intersection box, or `None` when the boxes do not overlap.
    pub fn intersect(&self, other: &BBox) -> Option<BBox> {
        let x0 = self.x.max(other.x);
        let y0 = self.y.max(other.y);
        let x1 = self.right().min(other.right());
        let y1 = self.bottom().min(other.bottom());
        if x1 > x0 && y1 > y0 {
            Some(BBox::new(x0, y0, x1 - x0, y1 - y0))
        } else {
            None
        }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> BBox {
        BBox::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    /// Clip to `[0,w]x[0,h]`; `None` when nothing positive remains.
    pub fn clipped_to(&self, width: f64, height: f64) -> Option<BBox> {
        self.intersect(&BBox::new(0.0, 0.0, width, height))
    }
}

/// Ground-truth label: class id (0 = flower) plus pixel-space box.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Annotation {
    pub class_id: u32,
    pub bbox: BBox,
}

impl Annotation {
    pub fn new(class_id: u32, bbox: BBox) -> Self {
        Self { class_id, bbox }
    }
}

/// Scored prediction.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Detection {
    pub class_id: u32,
    pub bbox: BBox,
    pub confidence: f64,
}

impl Detection {
    pub fn new(class_id: u32, bbox: BBox, confidence: f64) -> Self {
        Self {
            class_id,
            bbox,
            confidence,
        }
    }

    pub fn try_new(class_id: u32, bbox: BBox, confidence: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&confidence) {
            return Err(Error::BadConfidence(confidence));
        }
        Ok(Self {
            class_id,
            bbox,
            confidence,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_buffer_length_is_enforced() {
        assert!(MonoImage::new(2, 2, vec![0; 4]).is_ok());
        assert!(MonoImage::new(2, 2, vec![0; 3]).is_err());
        assert!(MonoImage::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn bbox_intersection() {
        let a = BBox::new(0.0, 0.0, 2.0, 2.0);
        let b = BBox::new(1.0, 0.0, 2.0, 2.0);
        let i = a.intersect(&b).unwrap();
        assert_eq!((i.x, i.y, i.w, i.h), (1.0, 0.0, 1.0, 2.0));
        let c = BBox::new(5.0, 5.0, 1.0, 1.0);
        assert!(a.intersect(&c).is_none());
        // touching edges do not overlap
        let d = BBox::new(2.0, 0.0, 1.0, 1.0);
        assert!(a.intersect(&d).is_none());
    }

    #[test]
    fn degenerate_boxes_are_rejected() {
        assert!(BBox::try_new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(BBox::try_new(0.0, 0.0, 1.0, -2.0).is_err());
        assert!(Detection::try_new(0, BBox::new(0.0, 0.0, 1.0, 1.0), 1.5).is_err());
    }
}
