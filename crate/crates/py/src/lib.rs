//! Python bindings. Characters are passed as 3-tuples whose items format as integers or `n/d`
//! (ints, strings and `fractions.Fraction` all work); rationals come back as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use p2walls::exceptional::chern_of;
use p2walls::ktheory::{euler_form, ChernCharacter};
use p2walls::lepotier::{last_wall as core_last_wall, position as core_position};
use p2walls::quiver::moduli_dim as core_moduli_dim;
use p2walls::walls::{enumerate_walls, Side};
use p2walls::DyadicIndex;
use p2walls_cli::{json, parse_character};

type Triple<'py> = (Bound<'py, PyAny>, Bound<'py, PyAny>, Bound<'py, PyAny>);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn character(t: &Triple<'_>) -> PyResult<ChernCharacter> {
    let s = |x: &Bound<'_, PyAny>| -> PyResult<String> { Ok(x.str()?.to_string()) };
    parse_character(&s(&t.0)?, &s(&t.1)?, &s(&t.2)?).map_err(value_error)
}

fn strings(v: &ChernCharacter) -> (String, String, String) {
    (v.ch0.to_string(), v.ch1.to_string(), v.ch2.to_string())
}

/// The exceptional character `(ch0, ch1, ch2)` with slope index such as `"-3/2"`.
#[pyfunction]
fn exceptional(index: &str) -> PyResult<(String, String, String)> {
    let ix: DyadicIndex = index.parse().map_err(value_error)?;
    Ok(strings(&chern_of(&ix)))
}

/// `χ(v, w)` as a rational string.
#[pyfunction]
fn chi(v: Triple<'_>, w: Triple<'_>) -> PyResult<String> {
    Ok(euler_form(&character(&v)?, &character(&w)?).to_string())
}

/// `"Above"`, `"On"` or `"Below"` relative to the Le Potier curve.
#[pyfunction]
fn position(v: Triple<'_>) -> PyResult<String> {
    core_position(&character(&v)?).map(|p| p.to_string()).map_err(value_error)
}

/// The left last wall as `(line, case, e_w)`.
#[pyfunction]
fn last_wall(w: Triple<'_>) -> PyResult<(String, String, String)> {
    let l = core_last_wall(&character(&w)?).map_err(value_error)?;
    Ok((l.line.to_string(), format!("{:?}", l.case), l.e_w.to_string()))
}

/// Expected dimension of the Gieseker moduli space.
#[pyfunction]
fn moduli_dim(w: Triple<'_>) -> PyResult<String> {
    Ok(core_moduli_dim(&character(&w)?).to_string())
}

/// The full wall summary in the CLI's JSON format.
#[pyfunction]
#[pyo3(signature = (w, side = "left", include_rejected = false))]
fn walls_json(w: Triple<'_>, side: &str, include_rejected: bool) -> PyResult<String> {
    let side = match side {
        "left" => Side::Left,
        "right" => Side::Right,
        "both" => Side::Both,
        other => return Err(PyValueError::new_err(format!("side must be left, right or both, got {other:?}"))),
    };
    let s = enumerate_walls(&character(&w)?, side).map_err(value_error)?;
    Ok(json::to_string(&s, include_rejected))
}

#[pymodule]
#[pyo3(name = "p2walls")]
fn p2walls_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(exceptional, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(position, m)?)?;
    m.add_function(wrap_pyfunction!(last_wall, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_dim, m)?)?;
    m.add_function(wrap_pyfunction!(walls_json, m)?)?;
    Ok(())
}
