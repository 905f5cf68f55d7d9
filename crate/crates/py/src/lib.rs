use pyo3::prelude::*;

#[pymodule]
fn relkin_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
