//! Vertex colorings over a finite palette.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, palette only has {palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
}

/// A total assignment of colors `0..palette` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self, ColoringError> {
        for (vertex, &color) in colors.iter().enumerate() {
            if color >= palette {
                return Err(ColoringError::ColorOutOfPalette {
                    vertex,
                    color,
                    palette,
                });
            }
        }
        Ok(Coloring { colors, palette })
    }

    /// All-zero coloring; the palette still needs at least one color unless
    /// there are no vertices.
    pub fn constant(n: usize, palette: usize) -> Self {
        assert!(palette >= 1 || n == 0);
        Coloring {
            colors: vec![0; n],
            palette: palette.max(usize::from(n > 0)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette];
        let mut used = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                used += 1;
            }
        }
        used
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_color_outside_palette() {
        assert!(Coloring::new(vec![0, 2], 2).is_err());
        assert!(Coloring::new(vec![0, 1], 2).is_ok());
    }

    #[test]
    fn counts_distinct_colors() {
        let c = Coloring::new(vec![0, 2, 0, 2], 4).unwrap();
        assert_eq!(c.colors_used(), 2);
        assert_eq!(c.palette(), 4);
    }
}
