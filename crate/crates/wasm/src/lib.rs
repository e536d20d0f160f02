//! Browser bindings. Every export returns a JSON string; errors surface as
//! thrown JS strings.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use oortscan::construct::{build_with_caps, FamilySpec};
use oortscan::oort::classify;
use oortscan::ramification::{
    different_exponent, lower_to_upper, scenario, upper_jumps_integral, RamificationFiltration,
    ScenarioParams, UpperJump,
};
use oortscan::Caps;

/// Kept small so a careless spec does not hang the tab.
const DEMO_ORDER_CAP: usize = 1024;

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn classify_json(spec: &str, p: u32) -> Result<String, String> {
    let spec: FamilySpec = spec.trim().parse().map_err(|e| format!("{e}"))?;
    let caps = Caps {
        order: DEMO_ORDER_CAP,
        ..Caps::default()
    };
    let g = build_with_caps(&spec, caps).map_err(|e| e.to_string())?;
    let verdict = classify(&g, p.into(), &spec.to_string()).map_err(|e| e.to_string())?;
    to_json(&verdict)
}

#[derive(Serialize)]
struct Herbrand {
    filtration: String,
    different: u64,
    upper_jumps: Vec<UpperJump>,
    hasse_arf: bool,
}

pub fn herbrand_json(p: u32, orders: &str) -> Result<String, String> {
    let orders = orders
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| format!("not a number: {s}")))
        .collect::<Result<Vec<_>, _>>()?;
    let f = RamificationFiltration::new(p.into(), &orders).map_err(|e| e.to_string())?;
    to_json(&Herbrand {
        filtration: f.to_string(),
        different: different_exponent(&f),
        upper_jumps: lower_to_upper(&f),
        hasse_arf: upper_jumps_integral(&f),
    })
}

fn positive(v: u32) -> Option<u64> {
    (v > 0).then_some(v.into())
}

/// Zero means "use the default" for each parameter.
pub fn scenario_json(name: &str, p: u32, l: u32, n: u32) -> Result<String, String> {
    let params = ScenarioParams {
        p: positive(p),
        l: positive(l),
        n: positive(n),
    };
    let report = scenario(name, &params).map_err(|e| e.to_string())?;
    to_json(&report)
}

#[wasm_bindgen(js_name = classifyFamily)]
pub fn classify_family(spec: &str, p: u32) -> Result<String, JsValue> {
    classify_json(spec, p).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn herbrand(p: u32, orders: &str) -> Result<String, JsValue> {
    herbrand_json(p, orders).map_err(JsValue::from)
}

#[wasm_bindgen(js_name = runScenario)]
pub fn run_scenario(name: &str, p: u32, l: u32, n: u32) -> Result<String, JsValue> {
    scenario_json(name, p, l, n).map_err(JsValue::from)
}

#[wasm_bindgen(js_name = scenarioNames)]
pub fn scenario_names() -> Vec<String> {
    oortscan::ramification::SCENARIOS
        .iter()
        .map(|s| s.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn classify_reports_shape() {
        let v = parse(&classify_json("D:18", 3).unwrap());
        assert_eq!(v["order"], 18);
        assert!(classify_json("Q:", 2).is_err());
        assert!(classify_json("C:2000", 2).is_err());
    }

    #[test]
    fn herbrand_jumps() {
        let v = parse(&herbrand_json(2, "8, 8, 2, 2").unwrap());
        assert_eq!(v["different"], 16);
        assert_eq!(v["hasse_arf"], false);
        assert_eq!(v["upper_jumps"][1]["upper"], "3/2");
        assert!(herbrand_json(2, "8,x").is_err());
    }

    #[test]
    fn scenario_defaults() {
        let v = parse(&scenario_json("even_type7", 0, 0, 0).unwrap());
        assert_eq!(v["obstruction"], true);
        assert!(scenario_json("nope", 0, 0, 0).is_err());
    }
}
