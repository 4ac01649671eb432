//! Concrete sampled functions: the geometric side of the toolkit.
//!
//! [`MeasureStepFunction`](crate::rearrange::MeasureStepFunction) carries no
//! geometry, which is enough for norms but not for maximal operators. The
//! types here pin values to actual cells:
//!
//! * [`GridFunction1D`] — piecewise-constant on a uniform partition of an
//!   interval; input to the exact uncentered maximal operator.
//! * [`GridFieldND`] — piecewise-constant on a cube of side^dim cells
//!   (dim ≤ 3); input to the dyadic maximal operator.
//! * [`VectorField`] — a finite family of fields over one geometry, the
//!   object vector-valued maximal bounds quantify over.
//!
//! All carry non-negative values (operators act on |f|) and convert to
//! measure-step form via `to_step`, which is where geometry is forgotten
//! and norm machinery takes over.

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::rearrange::MeasureStepFunction;
use serde::{Deserialize, Serialize};

/// Piecewise-constant function on cells [origin + i·h, origin + (i+1)·h).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFunction1D {
    origin: f64,
    cell_width: f64,
    values: Vec<f64>,
}

impl GridFunction1D {
    pub fn new(origin: f64, cell_width: f64, values: Vec<f64>) -> Result<Self> {
        if !origin.is_finite() {
            return Err(Error::invalid("grid", "origin must be finite"));
        }
        if !cell_width.is_finite() || cell_width <= 0.0 {
            return Err(Error::invalid(
                "grid",
                format!("cell width must be positive, got {cell_width}"),
            ));
        }
        if values.is_empty() {
            return Err(Error::invalid("grid", "at least one cell required"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::invalid(
                "grid",
                format!("cell values must be finite and non-negative, got {v}"),
            ));
        }
        Ok(GridFunction1D {
            origin,
            cell_width,
            values,
        })
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    pub fn cell_width(&self) -> f64 {
        self.cell_width
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one cell
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Left edge of cell i.
    pub fn edge(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.cell_width
    }

    /// Right end of the support interval.
    pub fn end(&self) -> f64 {
        self.edge(self.len())
    }

    /// Point evaluation; 0 outside the support.
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.origin || x >= self.end() {
            return 0.0;
        }
        let i = ((x - self.origin) / self.cell_width) as usize;
        self.values[i.min(self.len() - 1)]
    }

    /// ∫ f dx.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_width
    }

    /// Forget geometry: each cell contributes (value, cell width).
    pub fn to_step(&self) -> MeasureStepFunction {
        MeasureStepFunction::new(self.values.iter().map(|&v| (v, self.cell_width)))
            .expect("grid values are valid step data")
    }
}

/// Piecewise-constant field on a dim-dimensional cube of side^dim cells,
/// stored row-major; each cell has measure `cell_volume`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFieldND {
    dim: usize,
    side: usize,
    cell_volume: f64,
    values: Vec<f64>,
}

impl GridFieldND {
    pub fn new(dim: usize, side: usize, cell_volume: f64, values: Vec<f64>) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::invalid(
                "field",
                format!("dimension must be 1, 2, or 3, got {dim}"),
            ));
        }
        if side == 0 {
            return Err(Error::invalid("field", "side must be positive"));
        }
        if !cell_volume.is_finite() || cell_volume <= 0.0 {
            return Err(Error::invalid(
                "field",
                format!("cell volume must be positive, got {cell_volume}"),
            ));
        }
        let expect = side.pow(dim as u32);
        if values.len() != expect {
            return Err(Error::invalid(
                "field",
                format!(
                    "value count {} does not match side^dim = {expect}",
                    values.len()
                ),
            ));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::invalid(
                "field",
                format!("cell values must be finite and non-negative, got {v}"),
            ));
        }
        Ok(GridFieldND {
            dim,
            side,
            cell_volume,
            values,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn cell_volume(&self) -> f64 {
        self.cell_volume
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires side >= 1
    }

    /// Row-major index of a multi-index (length = dim, entries < side).
    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dim);
        coords.iter().fold(0, |acc, &c| {
            debug_assert!(c < self.side);
            acc * self.side + c
        })
    }

    /// Multi-index of a row-major position.
    pub fn coords(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for d in (0..self.dim).rev() {
            out[d] = idx % self.side;
            idx /= self.side;
        }
        out
    }

    /// Same geometry, new values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        GridFieldND::new(self.dim, self.side, self.cell_volume, values)
    }

    /// Forget geometry: each cell contributes (value, cell volume).
    pub fn to_step(&self) -> MeasureStepFunction {
        MeasureStepFunction::new(self.values.iter().map(|&v| (v, self.cell_volume)))
            .expect("field values are valid step data")
    }

    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_volume
    }
}

/// A finite family of fields over one shared geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorField {
    components: Vec<GridFieldND>,
}

impl VectorField {
    pub fn new(components: Vec<GridFieldND>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::invalid("vector field", "at least one component"))?;
        let (d, s, cv) = (first.dim, first.side, first.cell_volume);
        for c in &components[1..] {
            if c.dim != d || c.side != s || c.cell_volume != cv {
                return Err(Error::invalid(
                    "vector field",
                    "components must share one geometry",
                ));
            }
        }
        Ok(VectorField { components })
    }

    pub fn components(&self) -> &[GridFieldND] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one component
    }

    /// Maps every component through `op`, keeping the geometry.
    pub fn map(&self, mut op: impl FnMut(&GridFieldND) -> Result<GridFieldND>) -> Result<Self> {
        let mapped: Result<Vec<_>> = self.components.iter().map(|c| op(c)).collect();
        VectorField::new(mapped?)
    }

    /// Pointwise ℓ^q aggregate ( Σ_j f_j(x)^q )^{1/q}; q = ∞ gives the max.
    pub fn lq_aggregate(&self, q: ExtReal) -> Result<GridFieldND> {
        if q < ExtReal::ONE {
            return Err(Error::invalid(
                "aggregation exponent",
                format!("q must be >= 1, got {q}"),
            ));
        }
        let n = self.components[0].values.len();
        let mut out = vec![0.0; n];
        if q.is_infinite() {
            for c in &self.components {
                for (o, v) in out.iter_mut().zip(&c.values) {
                    *o = f64::max(*o, *v);
                }
            }
        } else {
            let qf = q.get();
            for c in &self.components {
                for (o, v) in out.iter_mut().zip(&c.values) {
                    *o += v.powf(qf);
                }
            }
            for o in &mut out {
                *o = o.powf(1.0 / qf);
            }
        }
        self.components[0].with_values(out)
    }
}
