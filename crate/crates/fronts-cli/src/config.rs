//! Model files and shared run options.
//!
//! A model file is JSON with keys `f`, `D`, `g`, each `{ "poly": [c0, c1,
//! ...] }` (constant term first) or `{ "preset": "<name>" }` to copy that
//! component from a named preset; `f` may be omitted.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use fronts::model::{Model, ModelSpec};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentSpec {
    #[serde(default)]
    poly: Option<Vec<f64>>,
    #[serde(default)]
    preset: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSpec {
    #[serde(default)]
    f: Option<ComponentSpec>,
    #[serde(rename = "D", default)]
    d: Option<ComponentSpec>,
    #[serde(default)]
    g: Option<ComponentSpec>,
    #[serde(default)]
    preset: Option<String>,
}

fn resolve(
    which: &str,
    comp: Option<ComponentSpec>,
) -> Result<Option<Vec<f64>>, String> {
    let Some(comp) = comp else { return Ok(None) };
    match (comp.poly, comp.preset) {
        (Some(p), None) => {
            if p.is_empty() {
                Err(format!("{which}: empty coefficient vector"))
            } else {
                Ok(Some(p))
            }
        }
        (None, Some(name)) => {
            let m = Model::preset(&name).map_err(|e| e.to_string())?;
            let poly = preset_component(&m, which)
                .ok_or_else(|| format!("preset {name} has no polynomial {which}"))?;
            Ok(Some(poly))
        }
        (Some(_), Some(_)) => Err(format!("{which}: give either poly or preset, not both")),
        (None, None) => Err(format!("{which}: give poly or preset")),
    }
}

fn preset_component(m: &Model, which: &str) -> Option<Vec<f64>> {
    match which {
        "f" => m.f_coeffs().map(<[f64]>::to_vec),
        "D" => m.d_coeffs().map(<[f64]>::to_vec),
        "g" => m.g_coeffs().map(<[f64]>::to_vec),
        _ => None,
    }
}

/// Loads a model from a file path.
pub fn load_model_file(path: &Path) -> Result<Model, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec: FileSpec =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(name) = spec.preset {
        if spec.f.is_some() || spec.d.is_some() || spec.g.is_some() {
            return Err("preset excludes explicit components".into());
        }
        return Model::preset(&name).map_err(|e| e.to_string());
    }
    let ms = ModelSpec {
        f_poly: resolve("f", spec.f)?,
        d_poly: resolve("D", spec.d)?,
        g_poly: resolve("g", spec.g)?,
        special: None,
    };
    Model::build(&ms).map_err(|e| e.to_string())
}
