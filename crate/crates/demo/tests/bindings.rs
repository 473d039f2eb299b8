use indep_demo::{bounds, sigma_catalogue, truncation_index};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn catalogue_orders() {
    let v = parse(&sigma_catalogue(5, "10^6"));
    let orders: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["order"].as_str().unwrap())
        .collect();
    assert_eq!(orders, ["5", "60", "7800", "126000", "372000", "976500"]);
}

#[test]
fn bounds_as_decimal_strings() {
    assert_eq!(parse(&bounds(2))["frobenius_bound"], "390625");
    assert_eq!(
        parse(&bounds(71))["collins_bound"].as_str().unwrap().len(),
        104
    );
}

#[test]
fn truncation() {
    assert_eq!(parse(&truncation_index(3, 4))["index"], "729");
    assert_eq!(parse(&truncation_index(5, 3))["index"], "125");
}

#[test]
fn errors_are_json() {
    assert_eq!(parse(&sigma_catalogue(3, "100"))["error"], "InvalidEll");
    assert_eq!(parse(&sigma_catalogue(5, "1e6"))["error"], "ParseError");
    assert_eq!(parse(&bounds(0))["error"], "OutOfRange");
    assert_eq!(parse(&truncation_index(4, 2))["error"], "NotPrime");
    assert_eq!(parse(&truncation_index(3, 20))["error"], "OutOfRange");
}
