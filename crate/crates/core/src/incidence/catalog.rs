//! Named combinatorial configurations.

use super::{cyclic_cascade, Flag, IncidenceError, IncidenceStructure};

const NAMES: [&str; 5] = ["miquel", "anti-miquel-small", "anti-miquel-large", "fano", "pappus"];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

/// Looks up a named structure.
///
/// * `miquel`: the (8_3,6_4) cube model, points = cube vertices `x + 2y + 4z`
///   and blocks = faces `x=0, x=1, y=0, y=1, z=0, z=1`.
/// * `anti-miquel-small`: two Miquel copies joined by one incidence switch
///   on [`miquel_cascade_flag`], a (16_3,12_4).
/// * `anti-miquel-large`: cyclic cascade of four Miquel copies, a (32_3,24_4).
/// * `fano`: the (7_3) plane from the difference set {0, 1, 3} mod 7.
/// * `pappus`: a (9_3).
pub fn catalog(name: &str) -> Result<IncidenceStructure, IncidenceError> {
    let c = match name {
        "miquel" => miquel(),
        "anti-miquel-small" => {
            let f = miquel_cascade_flag();
            cyclic_cascade(&[miquel(), miquel()], &[f; 2])?
        }
        "anti-miquel-large" => {
            let f = miquel_cascade_flag();
            cyclic_cascade(&[miquel(), miquel(), miquel(), miquel()], &[f; 4])?
        }
        "fano" => {
            let lines = (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]);
            from_blocks(7, lines)
        }
        "pappus" => {
            let lines = [
                [0, 1, 2],
                [3, 4, 5],
                [6, 7, 8],
                [0, 3, 7],
                [0, 4, 8],
                [1, 3, 6],
                [1, 5, 8],
                [2, 4, 6],
                [2, 5, 7],
            ];
            from_blocks(9, lines)
        }
        _ => return Err(IncidenceError::UnknownName(name.to_string())),
    };
    Ok(c.with_name(name))
}

/// Flag each Miquel copy contributes to a cascade: vertex 0 on face `x=0`.
/// Vertex 0 of copy `i` moves onto face `x=0` of copy `i + 1`.
pub fn miquel_cascade_flag() -> Flag {
    (0, 0)
}

fn miquel() -> IncidenceStructure {
    let mut flags = Vec::with_capacity(24);
    for v in 0..8usize {
        for axis in 0..3 {
            let bit = (v >> axis) & 1;
            flags.push((v, 2 * axis + bit));
        }
    }
    IncidenceStructure::new(8, 6, flags).expect("cube incidences are in range")
}

fn from_blocks<const K: usize>(num_points: usize, blocks: impl IntoIterator<Item = [usize; K]>) -> IncidenceStructure {
    let blocks: Vec<[usize; K]> = blocks.into_iter().collect();
    let flags = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, pts)| pts.iter().map(move |&p| (p, b)));
    IncidenceStructure::new(num_points, blocks.len(), flags).expect("catalog data is in range")
}
