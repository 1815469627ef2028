//! Bundled example graphs, also shipped as `.hgf` files under `fixtures/`.

use crate::error::Result;
use crate::graph::{parse_hgf, Graph};

/// `(name, text)` for every bundled graph.
pub const ALL: &[(&str, &str)] = &[
    ("C5", include_str!("../../../fixtures/C5.hgf")),
    ("K2", include_str!("../../../fixtures/K2.hgf")),
    ("K23", include_str!("../../../fixtures/K23.hgf")),
    ("K2_plus_point", include_str!("../../../fixtures/K2_plus_point.hgf")),
    ("K3", include_str!("../../../fixtures/K3.hgf")),
    ("K33", include_str!("../../../fixtures/K33.hgf")),
    ("K4", include_str!("../../../fixtures/K4.hgf")),
    ("K5", include_str!("../../../fixtures/K5.hgf")),
    ("P4", include_str!("../../../fixtures/P4.hgf")),
    ("ex3_4_G", include_str!("../../../fixtures/ex3_4_G.hgf")),
    ("ex3_4_H", include_str!("../../../fixtures/ex3_4_H.hgf")),
    ("ex3_5_G", include_str!("../../../fixtures/ex3_5_G.hgf")),
    ("ex3_5_H", include_str!("../../../fixtures/ex3_5_H.hgf")),
    ("ex3_6_G", include_str!("../../../fixtures/ex3_6_G.hgf")),
    ("ex3_6_H", include_str!("../../../fixtures/ex3_6_H.hgf")),
    ("grotzsch", include_str!("../../../fixtures/grotzsch.hgf")),
    ("sec5_G", include_str!("../../../fixtures/sec5_G.hgf")),
    ("sec5_H", include_str!("../../../fixtures/sec5_H.hgf")),
];

/// The bundled graph with this name, named after it.
pub fn load(name: &str) -> Result<Graph> {
    let (_, text) = ALL
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| crate::Error::InvalidParameter(format!("no bundled graph named `{name}`")))?;
    Ok(parse_hgf(text.as_bytes())?.with_name(name))
}
