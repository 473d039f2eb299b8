//! Browser bindings. Every function returns a JSON string; failures come back
//! as `{"error": code, "message": text}` so the page never sees an exception.

use indep_core::cli::{bounds as bounds_output, cmd_sigma, parse_bound, OutputMode, RunConfig};
use indep_core::independence::{ro_index, truncation_scenario};
use indep_core::Result;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Inputs larger than this make the page unresponsive.
const MAX_TRUNCATION_ORDER: u64 = 100_000;
const MAX_BOUND_DIGITS: usize = 40;
const MAX_N: u64 = 200;

fn machine() -> RunConfig {
    RunConfig {
        output_mode: OutputMode::Machine,
        ..RunConfig::default()
    }
}

fn respond(result: Result<String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e.code(), "message": e.to_string() }).to_string())
}

fn refuse(message: &str) -> String {
    json!({ "error": "OutOfRange", "message": message }).to_string()
}

/// Orders of the finite simple groups of characteristic `ell` up to `bound`.
/// `bound` accepts `1000000`, `10^6` or `3*10^7`.
#[wasm_bindgen]
pub fn sigma_catalogue(ell: u32, bound: &str) -> String {
    if bound.trim().len() > MAX_BOUND_DIGITS {
        return refuse("bound too large for the demo");
    }
    respond(parse_bound(bound).and_then(|b| cmd_sigma(&machine(), ell as u64, &b)))
}

/// Frobenius bound for GL_n(F_l), and the factorial bound once `n >= 71`.
#[wasm_bindgen]
pub fn bounds(n: u32) -> String {
    if n as u64 > MAX_N {
        return refuse("n too large for the demo");
    }
    respond(bounds_output(&machine(), n as u64).and_then(|o| Ok(serde_json::to_string_pretty(&o)?)))
}

/// Index of the diagonal image in the product for the truncation family
/// Z/p^M -> Z/p^i, i = 1..M.
#[wasm_bindgen]
pub fn truncation_index(p: u32, m: u32) -> String {
    if m == 0
        || (p as u64)
            .checked_pow(m)
            .is_none_or(|o| o > MAX_TRUNCATION_ORDER)
    {
        return refuse("p^M must lie between p and 100000 in the demo");
    }
    respond(truncation_scenario(p as u64, m).map(|f| {
        let index = ro_index(&f).to_string();
        json!({ "p": p, "m": m, "index": index }).to_string()
    }))
}
