//! Degree-preserving surgery: incidence switches and cyclic cascades.

use std::collections::BTreeSet;

use super::{Flag, IncidenceError, IncidenceStructure};

/// Replaces flags `f1 = (p1, b1)` and `f2 = (p2, b2)` by `(p1, b2)` and `(p2, b1)`.
pub fn incidence_switch(c: &IncidenceStructure, f1: Flag, f2: Flag) -> Result<IncidenceStructure, IncidenceError> {
    let (p1, b1) = f1;
    let (p2, b2) = f2;
    let fail = |reason| Err(IncidenceError::InvalidSwitch { f1, f2, reason });
    if !c.contains(p1, b1) {
        return fail("first flag is not an incidence");
    }
    if !c.contains(p2, b2) {
        return fail("second flag is not an incidence");
    }
    if p1 == p2 {
        return fail("flags share their point");
    }
    if b1 == b2 {
        return fail("flags share their block");
    }
    if c.contains(p1, b2) || c.contains(p2, b1) {
        return fail("a switched flag is already present");
    }
    let mut flags: BTreeSet<Flag> = c.flags().collect();
    flags.remove(&f1);
    flags.remove(&f2);
    flags.insert((p1, b2));
    flags.insert((p2, b1));
    Ok(IncidenceStructure::from_flag_set(c.num_points(), c.num_blocks(), flags))
}

/// Disjoint union; part `i`'s indices are shifted past those of parts `0..i`.
pub fn disjoint_union(parts: &[IncidenceStructure]) -> IncidenceStructure {
    let mut flags = BTreeSet::new();
    let (mut po, mut bo) = (0, 0);
    for part in parts {
        flags.extend(part.flags().map(|(p, b)| (p + po, b + bo)));
        po += part.num_points();
        bo += part.num_blocks();
    }
    IncidenceStructure::from_flag_set(po, bo, flags)
}

/// Cyclic incidence cascade over `parts`.
///
/// `flags[i]` is a flag `(p_i, b_i)` of part `i` in its local indices. In the
/// disjoint union every `(p_i, b_i)` is replaced by `(p_i, b_{i+1 mod k})`, so
/// consecutive parts are joined by exactly one edge. For two parts this is a
/// single incidence switch; in general it is the composition of `k - 1`
/// switches, which is how it is carried out (and validated). A single part
/// takes no flags and comes back unchanged.
pub fn cyclic_cascade(parts: &[IncidenceStructure], flags: &[Flag]) -> Result<IncidenceStructure, IncidenceError> {
    let k = parts.len();
    let expected = if k <= 1 { 0 } else { k };
    if flags.len() != expected {
        return Err(IncidenceError::CascadeSpec {
            parts: k,
            expected,
            got: flags.len(),
        });
    }
    let mut c = disjoint_union(parts);
    if k <= 1 {
        return Ok(c);
    }
    let (mut po, mut bo) = (0, 0);
    let mut global = Vec::with_capacity(k);
    for (part, &(p, b)) in parts.iter().zip(flags) {
        global.push((p + po, b + bo));
        po += part.num_points();
        bo += part.num_blocks();
    }
    // after switching (p_0, b_0) with (p_i, b_i) the first flag holds b_i,
    // so chaining along i = 1..k leaves p_0 on b_1 and p_i on b_{i+1}
    let mut carry = global[0];
    for &next in &global[1..] {
        c = incidence_switch(&c, carry, next)?;
        carry = (next.0, carry.1);
    }
    Ok(c)
}
