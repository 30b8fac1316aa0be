use std::ops::{Add, Mul};

use super::grid::Grid1D;
use crate::error::{Error, Result};

/// Composite trapezoidal rule over the grid nodes.
pub fn integrate_trapezoid<T>(values: &[T], grid: &Grid1D) -> Result<T>
where
    T: Copy + Default + Add<Output = T> + Mul<f64, Output = T>,
{
    if values.len() != grid.points() {
        return Err(Error::LengthMismatch {
            expected: grid.points(),
            got: values.len(),
        });
    }
    let n = values.len();
    let interior = values[1..n - 1]
        .iter()
        .fold(T::default(), |acc, &v| acc + v);
    let ends = (values[0] + values[n - 1]) * 0.5;
    Ok((interior + ends) * grid.spacing())
}
