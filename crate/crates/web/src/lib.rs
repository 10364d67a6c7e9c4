//! WebAssembly bindings for the browser demo in `www/`.
//!
//! [`Gadget`] wraps a built automaton. Every method returns a JSON string so
//! the page needs no generated type glue beyond the class itself. The
//! JSON-producing functions in [`ops`] are plain Rust and tested natively.

use wasm_bindgen::prelude::*;

pub mod ops;

/// An automaton built from a CNF formula.
#[wasm_bindgen]
pub struct Gadget {
    inner: synchro::LabeledDfa,
}

#[wasm_bindgen]
impl Gadget {
    /// Builds the level-`r` gadget for DIMACS text `cnf`, optionally
    /// re-encoded over a binary alphabet.
    #[wasm_bindgen(constructor)]
    pub fn new(cnf: &str, r: usize, binary: bool) -> Result<Gadget, JsError> {
        let inner = ops::build(cnf, r, binary).map_err(to_js)?;
        Ok(Gadget { inner })
    }

    pub fn summary(&self) -> String {
        ops::summary(&self.inner)
    }

    /// Exact minimum and greedy reset words, with their ratio.
    pub fn solve(&self, max_visited_sets: u32) -> String {
        ops::solve(&self.inner, u64::from(max_visited_sets))
    }

    /// Image cardinality after each prefix of `word`.
    pub fn trace(&self, word: &str) -> Result<String, JsError> {
        ops::trace(&self.inner, word).map_err(to_js)
    }
}

fn to_js(e: synchro::Error) -> JsError {
    JsError::new(&e.to_string())
}
